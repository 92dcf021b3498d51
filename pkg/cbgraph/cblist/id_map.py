from cbgraph.errors import DuplicateExternalId, UnknownVertex


class IdMap(object):
    """Bijection between external vertex ids and dense logical ids.

    Logical ids are never reused. An external id whose vertex was deleted
    may be mapped again; the forward entry then moves to the new logical
    id while the reverse table keeps the history.
    """

    def __init__(self):
        self.forward = {}
        self.reverse = []

    def __len__(self):
        return len(self.reverse)

    def add(self, external_id, is_live):
        current = self.forward.get(external_id)
        if current is not None and is_live(current):
            raise DuplicateExternalId(external_id)
        logical = len(self.reverse)
        self.reverse.append(external_id)
        self.forward[external_id] = logical
        return logical

    def lookup(self, external_id):
        try:
            return self.forward[external_id]
        except (KeyError, TypeError):
            raise UnknownVertex(external_id) from None

    def external(self, logical):
        if not 0 <= logical < len(self.reverse):
            raise UnknownVertex(logical)
        return self.reverse[logical]
