"""Flow expansions, their embeddings, and the direct system of knot groups.

An expansion is recorded combinatorially: the number of circles ``n_i`` in
each wedge ``X_i`` and positive bonding maps ``f_i: X_{i+1} -> X_i`` given
as substitutions (inner loop -> word in outer loops).  An embedded
expansion adds one :class:`EmbeddingStage` per bonding; stage ``i``
describes ``S_{i+1}`` inside ``S_i``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .diagram import (EmbeddingStage, abelianized_inclusion, builtin_fixture, canonical_stage,
                      duality_check, inclusion_morphism, sturmian_stage, wirtinger)
from .fpgroup import (INF, AbelianDescriptor, DirectSystem, GroupPresentation, SupernaturalDescriptor,
                      abelianize, colimit_rank1, count_homs, is_free_automorphism, simplified_map,
                      tietze_reduce)
from .fpgroup.snf import determinant, rank as matrix_rank
from .symbolic import (FIBONACCI, Substitution, SturmianParams, compose, sturmian_substitution,
                       transition_matrix)


class ExpansionError(ValueError):
    """Stage or rank data that do not fit together."""


@dataclass(frozen=True)
class FlowExpansion:
    """Ranks ``n_1, n_2, ...`` and bondings ``f_1, f_2, ...``.

    ``bondings[i]`` maps the ``ranks[i+1]`` loops of ``X_{i+2}`` to words in
    the ``ranks[i]`` loops of ``X_{i+1}`` (zero-based lists, one-based
    spaces).  ``periodic_from`` declares that ``bondings[periodic_from:]``
    repeat forever; it only affects limit descriptors.
    """

    ranks: tuple[int, ...]
    bondings: tuple[Substitution, ...]
    periodic_from: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "ranks", tuple(int(r) for r in self.ranks))
        object.__setattr__(self, "bondings", tuple(self.bondings))
        if not self.ranks or any(r < 1 for r in self.ranks):
            raise ExpansionError("ranks must be positive")
        if len(self.bondings) != len(self.ranks) - 1:
            raise ExpansionError(f"{len(self.ranks)} ranks need {len(self.ranks) - 1} bondings, "
                                 f"got {len(self.bondings)}")
        for i, f in enumerate(self.bondings):
            if f.alphabet != self.ranks[i + 1] or f.target != self.ranks[i]:
                raise ExpansionError(
                    f"bonding {i + 1} maps {f.alphabet} letters into {f.target}, but ranks are "
                    f"n_{i + 2}={self.ranks[i + 1]}, n_{i + 1}={self.ranks[i]}")
        if self.periodic_from is not None and not 0 <= self.periodic_from < max(len(self.bondings), 1):
            raise ExpansionError("periodic_from must index a bonding")

    @classmethod
    def from_substitutions(cls, subs: Sequence[Substitution], periodic_from: int | None = None):
        subs = tuple(subs)
        if not subs:
            raise ExpansionError("need at least one bonding")
        ranks = (subs[0].target,) + tuple(s.alphabet for s in subs)
        return cls(ranks, subs, periodic_from)

    @property
    def depth(self) -> int:
        return len(self.bondings)

    def telescope(self, group: int) -> "FlowExpansion":
        """Compose consecutive bondings in blocks of ``group``."""
        if group < 1:
            raise ExpansionError("group size must be >= 1")
        subs = []
        for start in range(0, self.depth - group + 1, group):
            f = self.bondings[start]
            for g in self.bondings[start + 1:start + group]:
                f = compose(f, g)
            subs.append(f)
        periodic = None
        if self.periodic_from is not None:
            periodic = -(-self.periodic_from // group)
            if periodic >= len(subs):
                periodic = len(subs) - 1
        return FlowExpansion.from_substitutions(subs, periodic)


def dyadic_expansion(depth: int) -> FlowExpansion:
    return FlowExpansion.from_substitutions([Substitution(1, (b"\x00\x00",))] * depth, periodic_from=0)


def sturmian_expansion(params: SturmianParams | Sequence[int], depth: int) -> FlowExpansion:
    if not isinstance(params, SturmianParams):
        params = SturmianParams(tuple(params))
    return FlowExpansion.from_substitutions(params.substitutions(depth),
                                            periodic_from=min(len(params.cf), depth) - 1)


def substitution_expansion(sub: Substitution, depth: int) -> FlowExpansion:
    return FlowExpansion.from_substitutions([sub] * depth, periodic_from=0)


@dataclass(frozen=True)
class EmbeddedExpansion:
    base: FlowExpansion
    stages: tuple[EmbeddingStage, ...]

    def __post_init__(self):
        object.__setattr__(self, "stages", tuple(self.stages))
        if len(self.stages) > self.base.depth:
            raise ExpansionError(f"{len(self.stages)} stages but only {self.base.depth} bondings")
        for i, st in enumerate(self.stages):
            if st.diagram.num_loops != self.base.ranks[i + 1]:
                raise ExpansionError(f"stage {i + 1} has {st.diagram.num_loops} loops, "
                                     f"expected n_{i + 2}={self.base.ranks[i + 1]}")
            if len(st.traces) != self.base.ranks[i]:
                raise ExpansionError(f"stage {i + 1} has {len(st.traces)} traces, "
                                     f"expected n_{i + 1}={self.base.ranks[i]}")

    @property
    def depth(self) -> int:
        return len(self.stages)


def unknotted_embedding(e: FlowExpansion) -> EmbeddedExpansion:
    """Standard planar stages for every bonding (Sturmian bondings use the surface stage)."""
    return EmbeddedExpansion(e, tuple(unknotted_stage(f) for f in e.bondings))


def unknotted_stage(f: Substitution) -> EmbeddingStage:
    n = _sturmian_index(f)
    return sturmian_stage(n) if n else canonical_stage(f)


def _sturmian_index(f: Substitution) -> int:
    if f.alphabet != 2 or f.target != 2:
        return 0
    n = len(f.images[1]) - 1
    return n if n >= 1 and f == sturmian_substitution(n) else 0


def fixture_embedding(first: str, depth: int) -> EmbeddedExpansion:
    """A named fixture as the first stage of the expansion by its own bonding.

    Unknotted fixtures are followed by planar stages, one per remaining
    bonding.  A knotted first stage gets no further diagrams: the next solid
    surface sits inside a knotted one and has no canonical picture, so only
    the base expansion continues to ``depth``.
    """
    stage = builtin_fixture(first)
    base = substitution_expansion(stage.substitution, max(depth, 1))
    if depth == 0:
        return EmbeddedExpansion(base, ())
    rest = unknotted_embedding(base).stages[1:depth] if stage.canonical else ()
    return EmbeddedExpansion(base, (stage,) + tuple(rest))


# -- knot group system ---------------------------------------------------------

@dataclass(frozen=True)
class KnotGroupSystem:
    """The direct system ``pi_1(E_1) -> pi_1(E_2) -> ...`` of an embedded expansion.

    ``exact[k]`` is False when map ``k+1`` was obtained by sending every arc
    of a loop to that loop's trace while those arcs are not provably equal
    in the outer group (a knotted outer stage); such maps are homomorphisms
    but need not be the geometric inclusion.
    """

    system: DirectSystem
    expansion: EmbeddedExpansion
    exact: tuple[bool, ...] = field(default=())

    @property
    def depth(self) -> int:
        return self.system.depth


def _outer_names(n: int) -> tuple[str, ...]:
    return ("x",) if n == 1 else tuple(f"{chr(ord('a') + j)}1" for j in range(n)) if n <= 26 else ()


def knot_group_system(e: EmbeddedExpansion, depth: int | None = None,
                      budget: int = 1000) -> KnotGroupSystem:
    depth = e.depth if depth is None else depth
    if depth < 0 or depth > e.depth:
        raise ExpansionError(f"depth {depth} outside 0..{e.depth}")
    pres = [GroupPresentation.free(e.base.ranks[0], _outer_names(e.base.ranks[0]))]
    maps, exact = [], []
    for k in range(depth):
        stage = e.stages[k]
        outer = pres[-1]
        if k == 0:
            f = inclusion_morphism(stage, outer)
            exact.append(True)
        else:
            prev = e.stages[k - 1].diagram
            loop_of = prev.loop_of()
            f = inclusion_morphism(stage, outer, loop_of)
            exact.append(_loop_arcs_equal(outer, loop_of, budget))
        maps.append(f)
        pres.append(f.target)
    return KnotGroupSystem(DirectSystem(tuple(pres), tuple(maps)), e, tuple(exact))


def _loop_arcs_equal(p: GroupPresentation, loop_of: Sequence[int], budget: int) -> bool:
    r = tietze_reduce(p, budget)
    if not r.presentation.is_free:
        return False
    first: dict[int, object] = {}
    for g, loop in enumerate(loop_of):
        w = r.forward[g]
        if first.setdefault(loop, w) != w:
            return False
    return True


@dataclass(frozen=True)
class Verdict:
    status: str  # "certified-free", "not-free-at-stage", "inconclusive"
    stage: int | None = None
    reason: str = ""

    def __str__(self):
        if self.status == "not-free-at-stage":
            return f"not-free-at-stage({self.stage}): {self.reason}"
        if self.status == "inconclusive":
            return f"inconclusive (stage {self.stage}): {self.reason}"
        return self.status


CERTIFIED_FREE = "certified-free"
NOT_FREE = "not-free-at-stage"
INCONCLUSIVE = "inconclusive"


def freeness_witness(p: GroupPresentation, budget: int = 1000) -> tuple[str, str]:
    """Classify one presentation as free, provably non-free, or unknown."""
    q = tietze_reduce(p, budget).presentation
    if q.is_free:
        return CERTIFIED_FREE, f"Tietze-simplifies to the free group of rank {q.rank}"
    ab = abelianize(q)
    if ab.torsion:
        return NOT_FREE, f"abelianization {ab} has torsion"
    k = ab.free_rank
    for target, order, max_rank in (("s3", 6, 6), ("s4", 24, 4)):
        if q.rank > max_rank:
            continue
        c = count_homs(q, target)
        if c != order ** k:
            return NOT_FREE, (f"{c} homomorphisms to {target.upper()}, but a free group with "
                              f"abelianization {ab} has {order ** k}")
    return INCONCLUSIVE, f"no freeness or obstruction found for {q}"


def unknotted_certificate(ks: KnotGroupSystem, budget: int = 1000) -> Verdict:
    pending = None
    for i, p in enumerate(ks.system.presentations, start=1):
        status, reason = freeness_witness(p, budget)
        if status == NOT_FREE:
            return Verdict(NOT_FREE, i, reason)
        if status == INCONCLUSIVE and pending is None:
            pending = Verdict(INCONCLUSIVE, i, reason)
    return pending or Verdict(CERTIFIED_FREE)


def map_is_isomorphism(ks: KnotGroupSystem, stage: int, budget: int = 1000) -> bool | None:
    """True/False when decidable in free groups, None otherwise."""
    f = ks.system.map(stage)
    if stage > 1 and not ks.exact[stage - 1]:
        return None
    g = simplified_map(f, budget)
    if not (g.source.is_free and g.target.is_free):
        return None
    if g.source.rank != g.target.rank:
        return False
    return is_free_automorphism(g)


def stable_knot_group(ks: KnotGroupSystem, budget: int = 1000) -> GroupPresentation | None:
    """Presentation ``N`` if every map from stage ``N`` on is a verified isomorphism."""
    n = None
    for stage in range(ks.depth, 0, -1):
        if map_is_isomorphism(ks, stage, budget) is True:
            n = stage
        else:
            break
    if n is None:
        return None
    return tietze_reduce(ks.system.presentation(n), budget).presentation


# -- homology side ---------------------------------------------------------------

@dataclass(frozen=True)
class CechH1:
    """Direct system ``Z^{n_1} -> Z^{n_2} -> ...`` under transposed transition matrices."""

    ranks: tuple[int, ...]
    matrices: tuple[tuple[tuple[int, ...], ...], ...]
    composite: tuple[tuple[int, ...], ...]
    stable_rank: int
    determinants: tuple[int | None, ...]

    def __str__(self):
        dets = ", ".join("-" if d is None else str(d) for d in self.determinants)
        return f"direct system of ranks {list(self.ranks)}, stable rank {self.stable_rank}, dets [{dets}]"


def _tuples(m) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(int(x) for x in row) for row in m)


def cech_h1(e: FlowExpansion, depth: int | None = None):
    """First Čech cohomology of the inverse limit, as a direct system.

    All-rank-one expansions return a :class:`SupernaturalDescriptor`;
    otherwise a :class:`CechH1` with the transposed transition matrices and
    the rank of their composite.
    """
    depth = e.depth if depth is None else depth
    if depth < 0 or depth > e.depth:
        raise ExpansionError(f"depth {depth} outside 0..{e.depth}")
    if all(r == 1 for r in e.ranks):
        windings = [int(transition_matrix(f)[0, 0]) for f in e.bondings]
        periodic = e.periodic_from if e.periodic_from is not None and windings else None
        return colimit_rank1(windings, depth, periodic)
    mats = [transition_matrix(f).T for f in e.bondings[:depth]]
    comp = np.identity(e.ranks[0], dtype=object)
    for m in mats:
        comp = m.dot(comp)
    dets = tuple(determinant(m) if m.shape[0] == m.shape[1] else None for m in mats)
    return CechH1(e.ranks[:depth + 1], tuple(_tuples(m) for m in mats), _tuples(comp),
                  matrix_rank(comp.tolist()), dets)


def h1_limit(e: FlowExpansion, depth: int | None = None) -> AbelianDescriptor | None:
    """Abelian group of the limit when every bonding matrix is unimodular, else None."""
    c = cech_h1(e, depth)
    if isinstance(c, SupernaturalDescriptor):
        return AbelianDescriptor(1) if not c.primes else None
    if all(d in (1, -1) for d in c.determinants) and len(set(c.ranks)) == 1:
        return AbelianDescriptor(c.ranks[0])
    return None


def abelianized_system(e: EmbeddedExpansion, depth: int | None = None) -> list[np.ndarray]:
    depth = e.depth if depth is None else depth
    return [abelianized_inclusion(st) for st in e.stages[:depth]]


def duality_report(e: EmbeddedExpansion, depth: int | None = None) -> list[bool]:
    """Per stage: abelianized inclusion equals the transposed bonding matrix."""
    depth = e.depth if depth is None else depth
    return [duality_check(st, e.base.bondings[i]) for i, st in enumerate(e.stages[:depth])]


def embedding_independence_check(e1: EmbeddedExpansion, e2: EmbeddedExpansion,
                                 depth: int | None = None) -> bool:
    if e1.base.ranks != e2.base.ranks or e1.base.bondings != e2.base.bondings:
        raise ExpansionError("embeddings are over different flow expansions")
    depth = min(e1.depth, e2.depth) if depth is None else depth
    a, b = abelianized_system(e1, depth), abelianized_system(e2, depth)
    return all(np.array_equal(x, y) for x, y in zip(a, b))


def sturmian_embedding(params: SturmianParams | Sequence[int], depth: int) -> EmbeddedExpansion:
    return unknotted_embedding(sturmian_expansion(params, depth))


def fibonacci_expansion(depth: int) -> FlowExpansion:
    return substitution_expansion(sturmian_substitution(1), depth)


__all__ = [
    "CechH1", "EmbeddedExpansion", "ExpansionError", "FlowExpansion", "KnotGroupSystem", "Verdict",
    "CERTIFIED_FREE", "NOT_FREE", "INCONCLUSIVE", "INF", "FIBONACCI",
    "abelianized_system", "cech_h1", "duality_report", "dyadic_expansion", "embedding_independence_check",
    "fibonacci_expansion", "fixture_embedding", "freeness_witness", "h1_limit", "knot_group_system",
    "map_is_isomorphism", "stable_knot_group", "sturmian_embedding", "sturmian_expansion",
    "substitution_expansion", "unknotted_certificate", "unknotted_embedding", "unknotted_stage", "wirtinger",
]
