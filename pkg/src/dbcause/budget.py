from .errors import ResourceExceeded

DEFAULT_NODE_LIMIT = 2 ** 20


class SearchBudget:
    """Counts explored search nodes and stops the search past ``limit``.

    One budget can be shared by several calls so that the total work of a
    command is capped (and reported) as a whole.
    """

    def __init__(self, limit=DEFAULT_NODE_LIMIT):
        if limit is not None and limit < 0:
            raise ValueError("budget limit must be non-negative")
        self.limit = limit
        self.nodes = 0

    def tick(self, n=1):
        self.nodes += n
        if self.limit is not None and self.nodes > self.limit:
            raise ResourceExceeded(
                f"search exceeded its budget of {self.limit} nodes")

    def __repr__(self):
        return f"SearchBudget(limit={self.limit}, nodes={self.nodes})"


def as_budget(budget):
    """Accept ``None``, an int limit, or an existing :class:`SearchBudget`."""
    if budget is None:
        return SearchBudget()
    if isinstance(budget, SearchBudget):
        return budget
    return SearchBudget(int(budget))
