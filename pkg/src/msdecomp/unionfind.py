class UnionFind:
    """Disjoint sets over hashable items, union by size with path halving."""

    def __init__(self, items=()):
        self._parent = {}
        self._size = {}
        for x in items:
            self.add(x)

    def add(self, x):
        if x not in self._parent:
            self._parent[x] = x
            self._size[x] = 1

    def find(self, x):
        parent = self._parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self._size[ra] < self._size[rb]:
            ra, rb = rb, ra
        self._parent[rb] = ra
        self._size[ra] += self._size[rb]
        return True

    def connected(self, a, b):
        return self.find(a) == self.find(b)

    def count(self):
        return sum(1 for x, p in self._parent.items() if x == p)
