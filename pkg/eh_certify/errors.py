from typing import Any, Optional


class InvalidGraphError(Exception):
    """Represents a graph that cannot be built as a simple undirected graph"""
    def __init__(self, message: str, vertex: Optional[int] = None, *args):
        super().__init__(message, *args)
        self.message: str = message
        self.vertex: Optional[int] = vertex


class PreconditionError(Exception):
    """Represents an operation called on input outside its precondition"""
    def __init__(self, operation: str, message: str, vertex: Optional[int] = None, *args):
        super().__init__(f"{operation}: {message}", *args)
        self.operation: str = operation
        self.message: str = message
        self.vertex: Optional[int] = vertex


class LimitExceededError(Exception):
    """Represents input beyond a desk-scale guard"""
    def __init__(self, what: str, limit: int, actual: int, *args):
        super().__init__(f"{what} is limited to {limit}, got {actual}", *args)
        self.what: str = what
        self.limit: int = limit
        self.actual: int = actual


class FormatError(Exception):
    """Represents malformed serialized input"""
    def __init__(self, offset: Any, message: str, *args):
        super().__init__(f"{message} (at {offset})", *args)
        self.offset: Any = offset
        self.message: str = message


class InvalidWitnessError(Exception):
    """Represents a produced witness that failed independent verification"""
    def __init__(self, witness: Any, verdict: Any, *args):
        super().__init__(f"witness rejected: {verdict.message}", *args)
        self.witness: Any = witness
        self.verdict: Any = verdict


class BudgetExhaustedError(Exception):
    """Represents rejection sampling giving up"""
    def __init__(self, draws: int, *args):
        super().__init__(f"no certified graph after {draws} draws", *args)
        self.draws: int = draws


class PatternFoundError(Exception):
    """Carries a forbidden-pattern certificate out of a recursion"""
    def __init__(self, embedding: Any, *args):
        super().__init__(f"found induced {embedding.pattern_name}", *args)
        self.embedding: Any = embedding
