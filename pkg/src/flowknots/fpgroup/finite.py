"""Small finite groups and brute-force homomorphism counts."""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .presentation import GroupPresentation
from .words import GroupWord

MAX_RANK = 6
MAX_ORDER = 24


class ResourceLimit(RuntimeError):
    """Raised when a brute-force enumeration would exceed its stated bounds."""


@dataclass(frozen=True)
class FiniteGroup:
    """Multiplication table on elements ``0..order-1``; element 0 is the identity."""

    name: str
    table: tuple[tuple[int, ...], ...]
    inverse: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.table)

    def evaluate(self, word: GroupWord, assignment) -> int:
        x = 0
        tab, inv = self.table, self.inverse
        for letter in word.letters:
            y = assignment[abs(letter) - 1]
            x = tab[x][y if letter > 0 else inv[y]]
        return x


def _from_elements(name, elements, mul, identity) -> FiniteGroup:
    elements = [identity] + [e for e in elements if e != identity]
    index = {e: i for i, e in enumerate(elements)}
    table = tuple(tuple(index[mul(a, b)] for b in elements) for a in elements)
    inverse = tuple(row.index(0) for row in table)
    return FiniteGroup(name, table, inverse)


def symmetric_group(n: int) -> FiniteGroup:
    perms = list(itertools.permutations(range(n)))
    # (p*q)(i) = p(q(i))
    return _from_elements(f"S{n}", perms, lambda p, q: tuple(p[i] for i in q), tuple(range(n)))


def cyclic_group(m: int) -> FiniteGroup:
    if m < 1:
        raise ValueError("cyclic group order must be >= 1")
    return _from_elements(f"Z/{m}", range(m), lambda a, b: (a + b) % m, 0)


def target_group(name) -> FiniteGroup:
    """Parse ``"s2"``, ``"s3"``, ``"s4"`` or ``"z/m"``."""
    if isinstance(name, FiniteGroup):
        return name
    s = str(name).strip().lower()
    if s in ("s2", "s3", "s4"):
        return symmetric_group(int(s[1]))
    if s.startswith("z/") and s[2:].isdigit():
        return cyclic_group(int(s[2:]))
    raise ValueError(f"unknown target group {name!r}; expected s2, s3, s4 or z/m")


def count_homs(p: GroupPresentation, target) -> int:
    """Exact number of homomorphisms from ``p`` to a finite target.

    Generators that appear in no relator contribute a factor of the group
    order; the rest are assigned by backtracking, checking each relator as
    soon as all of its generators are fixed.
    """
    G = target_group(target)
    if p.rank > MAX_RANK or G.order > MAX_ORDER:
        raise ResourceLimit(
            f"count_homs supports rank <= {MAX_RANK} and target order <= {MAX_ORDER}; "
            f"got rank {p.rank}, order {G.order}"
        )
    used = sorted(set().union(*(r.generators() for r in p.relators))) if p.relators else []
    free_factor = G.order ** (p.rank - len(used))
    if not used:
        return free_factor
    pos = {g: i for i, g in enumerate(used)}
    # relators keyed by the last used generator they need
    ready: dict[int, list[GroupWord]] = {}
    for r in p.relators:
        ready.setdefault(max(pos[g] for g in r.generators()), []).append(r)

    assignment = [0] * p.rank
    count = 0

    def extend(k: int):
        nonlocal count
        if k == len(used):
            count += 1
            return
        g = used[k]
        for x in range(G.order):
            assignment[g] = x
            if all(G.evaluate(r, assignment) == 0 for r in ready.get(k, ())):
                extend(k + 1)

    extend(0)
    return count * free_factor
