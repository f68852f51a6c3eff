"""Subgroups of free groups via Stallings foldings, and Nielsen-reduced bases.

A finitely generated subgroup ``H`` of ``F_r`` is encoded by its folded core
graph: a deterministic labelled graph whose closed reduced paths at the base
vertex spell exactly the elements of ``H``.  Reading a word in that graph
decides membership; a breadth-first spanning tree gives a free basis of
``H`` that is Nielsen reduced.
"""
from __future__ import annotations

from collections import deque
from typing import Sequence

from .words import GroupWord


class SubgroupGraph:
    """Folded graph of the subgroup generated by a tuple of words."""

    def __init__(self, words: Sequence[GroupWord], rank: int):
        self.rank = rank
        for w in words:
            if w.max_generator() >= rank:
                raise ValueError(f"word {w} is not over the free group of rank {rank}")
        parent = [0]
        adj: dict[int, dict[int, int]] = {0: {}}
        merges: deque[tuple[int, int]] = deque()

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        def attach(v, x, u):
            v = find(v)
            w = adj[v].get(x)
            if w is None:
                adj[v][x] = u
            elif find(w) != find(u):
                merges.append((w, u))

        def new_vertex():
            parent.append(len(parent))
            adj[len(parent) - 1] = {}
            return len(parent) - 1

        for w in words:
            v = 0
            for i, x in enumerate(w.letters):
                u = 0 if i == len(w.letters) - 1 else new_vertex()
                attach(v, x, u)
                attach(u, -x, v)
                while merges:
                    a, b = merges.popleft()
                    a, b = find(a), find(b)
                    if a == b:
                        continue
                    keep, gone = min(a, b), max(a, b)
                    parent[gone] = keep
                    for y, z in adj.pop(gone).items():
                        attach(keep, y, z)
                v = u
        verts = sorted(adj)
        index = {v: i for i, v in enumerate(verts)}
        self.out = [{x: index[find(u)] for x, u in adj[v].items()} for v in verts]

    @property
    def num_vertices(self) -> int:
        return len(self.out)

    @property
    def num_edges(self) -> int:
        return sum(1 for d in self.out for x in d if x > 0)

    @property
    def subgroup_rank(self) -> int:
        return self.num_edges - self.num_vertices + 1 if self.num_edges else 0

    def contains(self, word: GroupWord) -> bool:
        return self.read(word) == 0

    def read(self, word: GroupWord):
        v = 0
        for x in word.letters:
            v = self.out[v].get(x)
            if v is None:
                return None
        return v

    def is_whole_group(self) -> bool:
        return self.num_vertices == 1 and self.num_edges == self.rank

    def _bfs(self):
        paths: list[GroupWord | None] = [None] * self.num_vertices
        paths[0] = GroupWord()
        tree = set()
        queue = deque([0])
        while queue:
            v = queue.popleft()
            for x in sorted(self.out[v], key=lambda y: (abs(y), y < 0)):
                u = self.out[v][x]
                if paths[u] is None:
                    paths[u] = GroupWord(paths[v].letters + (x,))
                    tree.add((v, x))
                    tree.add((u, -x))
                    queue.append(u)
        return paths, tree

    def spanning_tree(self) -> list[GroupWord]:
        """Geodesic (breadth-first) paths from the base vertex."""
        return self._bfs()[0]

    def _cotree(self):
        paths, tree = self._bfs()
        for v in range(self.num_vertices):
            for x in sorted(self.out[v], key=lambda y: (abs(y), y < 0)):
                if x > 0 and (v, x) not in tree:
                    u = self.out[v][x]
                    yield v, x, u, paths[v] * GroupWord([x]) * paths[u].inverse()

    def basis(self) -> list[GroupWord]:
        """Free basis of the subgroup, one element per edge outside the BFS tree."""
        return [b for *_, b in self._cotree()]

    def express(self, word: GroupWord, basis: Sequence[GroupWord]) -> list[tuple[int, int]]:
        """Write a subgroup element as a product of basis elements.

        Returns a list of ``(basis index, +-1)``.  Raises ``ValueError`` if the
        word is not in the subgroup.
        """
        lookup = {b: i for i, b in enumerate(basis)}
        edge_to_basis = {}
        for v, x, u, b in self._cotree():
            if b not in lookup:
                raise ValueError("basis does not come from this graph")
            edge_to_basis[(v, x)] = (lookup[b], 1)
            edge_to_basis[(u, -x)] = (lookup[b], -1)
        v = 0
        out = []
        for x in word.letters:
            u = self.out[v].get(x)
            if u is None:
                raise ValueError(f"{word} is not in the subgroup")
            if (v, x) in edge_to_basis:
                out.append(edge_to_basis[(v, x)])
            v = u
        if v != 0:
            raise ValueError(f"{word} is not in the subgroup")
        return out


def nielsen_reduce(words: Sequence[GroupWord], rank: int) -> tuple[tuple[GroupWord, ...], bool]:
    """Nielsen-reduced generating tuple of the subgroup, and whether it is a basis of ``F_rank``.

    The reduced tuple is a free basis of the subgroup generated by ``words``
    (trivial and redundant elements are gone).  ``is_basis`` holds exactly
    when the tuple is ``rank`` distinct generators, i.e. the words generate
    the whole free group.
    """
    graph = SubgroupGraph(words, rank)
    basis = tuple(graph.basis())
    gens = {w.letters[0] if w.letters[0] > 0 else -w.letters[0] for w in basis if len(w) == 1}
    is_basis = len(basis) == rank and len(gens) == rank and all(len(w) == 1 for w in basis)
    return basis, is_basis


def subgroup_rank(words: Sequence[GroupWord], rank: int) -> int:
    return SubgroupGraph(words, rank).subgroup_rank


def is_nielsen_reduced(words: Sequence[GroupWord]) -> bool:
    """Check the N0/N1/N2 conditions directly (brute force over pairs and triples)."""
    elems = []
    for w in words:
        elems += [w, w.inverse()]
    if any(not w for w in words):
        return False
    for u in elems:
        for v in elems:
            if u == v.inverse():
                continue
            if len(u * v) < max(len(u), len(v)):
                return False
    for u in elems:
        for v in elems:
            if u == v.inverse():
                continue
            for w in elems:
                if v == w.inverse():
                    continue
                if len(u * v * w) <= len(u) - len(v) + len(w):
                    return False
    return True
