"""Finite presentations, abelianization and deterministic Tietze simplification."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .snf import smith_diagonal
from .words import GroupWord, default_name, parse_word


@dataclass(frozen=True)
class GroupPresentation:
    """``<x_0, ..., x_{rank-1} | relators>``.

    Relators are freely reduced on construction and trivial ones dropped.
    """

    rank: int
    relators: tuple[GroupWord, ...] = ()
    names: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("rank must be nonnegative")
        rels = tuple(r for r in (GroupWord(w.letters) for w in self.relators) if r)
        for r in rels:
            if r.max_generator() >= self.rank:
                raise ValueError(f"relator {r} uses a generator outside rank {self.rank}")
        object.__setattr__(self, "relators", rels)
        names = tuple(self.names) or tuple(default_name(g) for g in range(self.rank))
        if len(names) != self.rank:
            raise ValueError(f"{len(names)} names given for rank {self.rank}")
        object.__setattr__(self, "names", names)

    @classmethod
    def free(cls, rank: int, names: Sequence[str] = ()) -> "GroupPresentation":
        return cls(rank, (), tuple(names))

    @classmethod
    def parse(cls, names: Sequence[str], relations: Sequence[str]) -> "GroupPresentation":
        """Build from relation strings such as ``"ab=ca"`` or relator strings ``"abAB"``.

        Chains ``"ab=ca=bc"`` give one relator per consecutive pair.
        """
        names = tuple(names)
        rels = []
        for rel in relations:
            sides = [parse_word(s, names) for s in rel.split("=")]
            if len(sides) == 1:
                rels.append(sides[0])
            for lhs, rhs in zip(sides, sides[1:]):
                rels.append(lhs * rhs.inverse())
        return cls(len(names), tuple(rels), names)

    @property
    def is_free(self) -> bool:
        """True when there are no relators (free on the generators)."""
        return not self.relators

    def total_length(self) -> int:
        return sum(len(r) for r in self.relators)

    def exponent_matrix(self) -> list[list[int]]:
        """``rank x len(relators)`` matrix of exponent sums (one column per relator)."""
        cols = [r.exponent_sum(self.rank) for r in self.relators]
        return [[c[g] for c in cols] for g in range(self.rank)]

    def word(self, text: str) -> GroupWord:
        return parse_word(text, self.names)

    def __str__(self):
        gens = ", ".join(self.names)
        rels = ", ".join(r.format(self.names) for r in self.relators)
        return f"<{gens} | {rels}>"


@dataclass(frozen=True)
class AbelianDescriptor:
    """``Z^free_rank + Z/t_1 + ... + Z/t_k`` with ``t_1 | t_2 | ...``."""

    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        t = tuple(int(x) for x in self.torsion)
        if any(x <= 1 for x in t) or any(t[i + 1] % t[i] for i in range(len(t) - 1)):
            raise ValueError(f"torsion coefficients must be > 1 and form a divisibility chain: {t}")
        object.__setattr__(self, "torsion", t)

    def __str__(self):
        parts = []
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        parts += [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) or "0"


def abelianize(p: GroupPresentation) -> AbelianDescriptor:
    diag = smith_diagonal(p.exponent_matrix()) if p.relators and p.rank else []
    return AbelianDescriptor(p.rank - len(diag), tuple(d for d in diag if d > 1))


def abelian_invariants(p: GroupPresentation) -> tuple[int, ...]:
    """All invariant factors including 1s, as used by the cyclic hom-count formula."""
    return tuple(smith_diagonal(p.exponent_matrix())) if p.relators and p.rank else ()


# -- Tietze simplification -----------------------------------------------------

@dataclass(frozen=True)
class TietzeResult:
    """A simplified presentation with the isomorphism back and forth.

    ``forward[g]`` expresses original generator ``g`` in the new generators;
    ``backward[h]`` expresses new generator ``h`` in the original ones.
    """

    presentation: GroupPresentation
    forward: tuple[GroupWord, ...]
    backward: tuple[GroupWord, ...]
    moves: int
    log: tuple[str, ...] = ()


def _dedupe(relators: list[GroupWord]) -> tuple[list[GroupWord], int]:
    seen, out, dropped = set(), [], 0
    for r in relators:
        key = r.cyclic_canonical()
        if not key:
            dropped += 1
            continue
        if key in seen:
            dropped += 1
            continue
        seen.add(key)
        out.append(key)
    return out, dropped


def _eliminable(r: GroupWord) -> list[int]:
    """Generators occurring exactly once in ``r``."""
    counts: dict[int, int] = {}
    for x in r.letters:
        counts[abs(x) - 1] = counts.get(abs(x) - 1, 0) + 1
    return [g for g, c in counts.items() if c == 1]


def _solve_for(r: GroupWord, g: int) -> GroupWord:
    """Rewrite ``r = 1`` as ``x_g = word`` where ``x_g`` occurs once in ``r``."""
    lt = r.letters
    k = next(i for i, x in enumerate(lt) if abs(x) - 1 == g)
    # r = u x^e v  =>  x^e = u^-1 v^-1  =>  x = (v u)^-e
    u, v = GroupWord(lt[:k]), GroupWord(lt[k + 1:])
    vu = v * u
    return vu.inverse() if lt[k] > 0 else vu


def tietze_reduce(p: GroupPresentation, budget: int = 1000) -> TietzeResult:
    """Deterministic Tietze simplification.

    Repeats, while the move budget lasts: cyclically reduce relators and drop
    duplicates (up to rotation and inversion); then eliminate one generator
    that occurs exactly once in some relator, provided the substitution does
    not increase ``rank + total relator length``.  Relators of length at most
    two are used first; ties go to the shortest relator, then to the highest
    generator index.
    """
    if budget < 0:
        raise ValueError("budget must be >= 0")
    rank = p.rank
    names = list(p.names)
    alive = list(range(rank))
    # images of original generators, in original indexing of the alive ones
    fwd = [GroupWord.gen(g) for g in range(rank)]
    rels = list(p.relators)
    moves = 0
    log: list[str] = []

    while moves < budget:
        rels, dropped = _dedupe(rels)
        if dropped:
            moves += 1
            log.append(f"dropped {dropped} trivial or duplicate relator(s)")
            continue
        best = None
        cost_now = len(alive) + sum(len(r) for r in rels)
        for idx, r in enumerate(rels):
            for g in _eliminable(r):
                sol = _solve_for(r, g)
                new_rels = [s.substitute(_subst(rank, g, sol)) for j, s in enumerate(rels) if j != idx]
                cost = len(alive) - 1 + sum(len(s.cyclic_reduce()) for s in new_rels)
                if cost > cost_now:
                    continue
                key = (len(r) > 2, len(r), -g, idx)
                if best is None or key < best[0]:
                    best = (key, idx, g, sol, new_rels)
        if best is None:
            break
        _, idx, g, sol, new_rels = best
        images = _subst(rank, g, sol)
        fwd = [w.substitute(images) for w in fwd]
        rels = new_rels
        alive.remove(g)
        moves += 1
        log.append(f"eliminated {names[g]} = {sol.format(names)}")

    # renumber surviving generators 0..k-1
    renum = {g: i for i, g in enumerate(alive)}
    rename = [GroupWord() for _ in range(rank)]
    for g, i in renum.items():
        rename[g] = GroupWord.gen(i)
    new_rels = tuple(r.substitute(rename) for r in rels)
    new_names = tuple(names[g] for g in alive)
    forward = tuple(w.substitute(rename) for w in fwd)
    backward = tuple(GroupWord.gen(g) for g in alive)
    out = GroupPresentation(len(alive), new_rels, new_names)
    return TietzeResult(out, forward, backward, moves, tuple(log))


def _subst(rank: int, g: int, word: GroupWord) -> list[GroupWord]:
    images = [GroupWord.gen(h) for h in range(rank)]
    images[g] = word
    return images


def tietze_simplify(p: GroupPresentation, budget: int = 1000) -> GroupPresentation:
    return tietze_reduce(p, budget).presentation


def relabel(p: GroupPresentation, perm: Sequence[int]) -> GroupPresentation:
    """Rename generator ``g`` to ``perm[g]``."""
    images = [GroupWord.gen(perm[g]) for g in range(p.rank)]
    names = [""] * p.rank
    for g in range(p.rank):
        names[perm[g]] = p.names[g]
    return GroupPresentation(p.rank, tuple(r.substitute(images) for r in p.relators), tuple(names))
