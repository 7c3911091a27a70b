#!/usr/bin/python3
# -*- coding: utf-8 -*-

"""
    A disjoint-set forest for grouping elements into equivalence classes.
"""

from typing import Dict
from typing import Generic
from typing import Hashable
from typing import List
from typing import TypeVar

Element = TypeVar('Element', bound=Hashable)
"""
    The type of the elements of a :class:`DisjointSet`.
"""


class DisjointSet(Generic[Element]):
    """
        A union-find structure with path compression and union by rank.
    """

    def __init__(self) -> None:
        self._parent: Dict[Element, Element] = {}
        self._rank: Dict[Element, int] = {}

    def make_set(self, element: Element) -> None:
        """
            Add an element as a singleton class. Known elements are left untouched.
        """

        if element in self._parent:
            return

        self._parent[element] = element
        self._rank[element] = 0

    def find(self, element: Element) -> Element:
        """
            :return: The representative of the class of `element`. Unknown elements are added first.
        """

        self.make_set(element)

        root = element
        while self._parent[root] != root:
            root = self._parent[root]

        # Path compression.
        while self._parent[element] != root:
            self._parent[element], element = root, self._parent[element]

        return root

    def union(self, first: Element, second: Element) -> bool:
        """
            Merge the classes of two elements.

            :return: `True` if the classes were different before.
        """

        first_root = self.find(first)
        second_root = self.find(second)
        if first_root == second_root:
            return False

        if self._rank[first_root] < self._rank[second_root]:
            first_root, second_root = second_root, first_root

        self._parent[second_root] = first_root
        if self._rank[first_root] == self._rank[second_root]:
            self._rank[first_root] += 1

        return True

    def __len__(self) -> int:
        """
            :return: The number of elements.
        """
        return len(self._parent)

    def count(self) -> int:
        """
            :return: The number of classes.
        """
        return sum(1 for element, parent in self._parent.items() if element == parent)

    def sorted(self) -> List[List[Element]]:
        """
            :return: All classes, each sorted, ordered by their smallest elements.
        """

        classes: Dict[Element, List[Element]] = {}
        for element in self._parent:
            classes.setdefault(self.find(element), []).append(element)

        return sorted((sorted(members) for members in classes.values()), key=lambda members: members[0])
