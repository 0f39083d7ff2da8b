"""
Disjoint sets over hashable items, with an optional parity bit per item.

Parity tracks whether an item agrees with its root's orientation; a union
that closes an odd cycle is recorded as a conflict on the merged class.
"""
from typing import Dict, Hashable, Iterable, List, Set, Tuple


class DisjointSet:

    def __init__(self, items: Iterable[Hashable] = ()):
        self._parents: Dict[Hashable, Hashable] = {}
        self._parity: Dict[Hashable, int] = {}
        self._conflicts: Set[Hashable] = set()
        for item in items:
            self.add(item)

    def add(self, item: Hashable) -> None:
        if item not in self._parents:
            self._parents[item] = item
            self._parity[item] = 0

    def __contains__(self, item) -> bool:
        return item in self._parents

    def find_with_parity(self, item: Hashable) -> Tuple[Hashable, int]:
        self.add(item)
        path = []
        while self._parents[item] != item:
            path.append(item)
            item = self._parents[item]
        root = item
        # path compression, folding parities toward the root
        for node in reversed(path):
            parent = self._parents[node]
            if parent != root:
                self._parity[node] ^= self._parity[parent]
            self._parents[node] = root
        return root, self._parity[path[0]] if path else 0

    def find(self, item: Hashable) -> Hashable:
        return self.find_with_parity(item)[0]

    def union(self, first: Hashable, second: Hashable, parity: int = 0) -> bool:
        """
        Merge the classes of ``first`` and ``second``, declaring their
        relative parity. Returns False when the declaration contradicts
        parities already implied by earlier unions.
        """
        root_a, parity_a = self.find_with_parity(first)
        root_b, parity_b = self.find_with_parity(second)
        if root_a == root_b:
            if parity_a ^ parity_b != parity:
                self._conflicts.add(root_a)
                return False
            return True
        # smaller root wins so class representatives are deterministic
        if root_b < root_a:
            root_a, root_b = root_b, root_a
        self._parents[root_b] = root_a
        self._parity[root_b] = parity_a ^ parity_b ^ parity
        if root_b in self._conflicts:
            self._conflicts.discard(root_b)
            self._conflicts.add(root_a)
        return True

    def has_conflict(self, item: Hashable) -> bool:
        return self.find(item) in self._conflicts

    def groups(self) -> List[List[Hashable]]:
        """Classes as sorted member lists, ordered by smallest member."""
        classes: Dict[Hashable, List[Hashable]] = {}
        for item in self._parents:
            classes.setdefault(self.find(item), []).append(item)
        return sorted((sorted(members) for members in classes.values()), key=lambda g: g[0])
