"""Wedge-of-circles diagrams and their Wirtinger-style presentations.

A diagram is purely combinatorial: oriented arcs, under-crossings and the
wedge point.  Every arc stops at the wedge point, so each loop of the wedge
leaves the wedge on an outgoing arc, passes under some crossings, and
returns on an incoming arc.  A stage with a single circle and no base point
(a solenoid stage) may omit the wedge.

Crossing convention: a crossing with ``sign=+1`` gives the relation
``under_out = over * under_in * over^-1``; ``sign=-1`` conjugates the other
way.  With this choice the trefoil stage reproduces ``ab = ca = bc``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .fpgroup import GroupMorphism, GroupPresentation, GroupWord, make_morphism
from .fpgroup.words import default_name
from .symbolic import THUE_MORSE, Substitution, sturmian_substitution, transition_matrix

CROSSING_CONVENTION = "sign +1: under_out = over * under_in * over^-1"


class DiagramError(ValueError):
    """A diagram violates one of its structural invariants."""


@dataclass(frozen=True)
class Crossing:
    over: int
    under_in: int
    under_out: int
    sign: int = 1


@dataclass(frozen=True)
class Wedge:
    incoming: tuple[int, ...]
    outgoing: tuple[int, ...]


@dataclass(frozen=True)
class WedgeDiagram:
    arcs: int
    crossings: tuple[Crossing, ...]
    wedge: Wedge | None
    loops: tuple[tuple[int, ...], ...]
    names: tuple[str, ...] = ()
    loop_labels: tuple[str, ...] = ()

    def __post_init__(self):
        names = tuple(self.names) or tuple(default_name(a) for a in range(self.arcs))
        object.__setattr__(self, "names", names)
        labels = tuple(self.loop_labels) or tuple(default_name(j).upper() for j in range(len(self.loops)))
        object.__setattr__(self, "loop_labels", labels)
        object.__setattr__(self, "crossings", tuple(self.crossings))
        object.__setattr__(self, "loops", tuple(tuple(l) for l in self.loops))
        validate(self)

    @property
    def num_loops(self) -> int:
        return len(self.loops)

    def loop_of(self) -> list[int]:
        out = [0] * self.arcs
        for j, loop in enumerate(self.loops):
            for a in loop:
                out[a] = j
        return out


def validate(d: WedgeDiagram) -> None:
    n = d.arcs
    if n < 1:
        raise DiagramError("a diagram needs at least one arc")
    if len(d.names) != n:
        raise DiagramError(f"{len(d.names)} arc names for {n} arcs")
    if len(d.loop_labels) != len(d.loops):
        raise DiagramError("one label is needed per loop")

    def arc_ok(a, what):
        if not 0 <= a < n:
            raise DiagramError(f"{what} refers to arc {a}, outside 0..{n - 1}")

    ends = [0] * n
    starts = [0] * n
    succ: dict[int, int] = {}
    for c in d.crossings:
        for a in (c.over, c.under_in, c.under_out):
            arc_ok(a, "crossing")
        if c.sign not in (1, -1):
            raise DiagramError(f"crossing sign must be +1 or -1, got {c.sign}")
        ends[c.under_in] += 1
        starts[c.under_out] += 1
        succ[c.under_in] = c.under_out
    if d.wedge is not None:
        for a in d.wedge.incoming + d.wedge.outgoing:
            arc_ok(a, "wedge")
        for a in d.wedge.incoming:
            ends[a] += 1
        for a in d.wedge.outgoing:
            starts[a] += 1
        if not len(d.wedge.incoming) == len(d.wedge.outgoing) == len(d.loops):
            raise DiagramError("wedge must have one incoming and one outgoing arc per loop")
    elif len(d.loops) != 1:
        raise DiagramError("only a single-loop diagram may omit the wedge point")
    for a in range(n):
        if ends[a] != 1:
            raise DiagramError(f"arc {d.names[a]} must end exactly once (at a crossing or the wedge), "
                               f"ends {ends[a]} times")
        if starts[a] != 1:
            raise DiagramError(f"arc {d.names[a]} must begin exactly once, begins {starts[a]} times")
    seen = sorted(a for loop in d.loops for a in loop)
    if seen != list(range(n)):
        raise DiagramError("loops must partition the arcs")
    if d.wedge is None:
        loop = d.loops[0]
        walk = [loop[0]]
        while succ[walk[-1]] != loop[0]:
            walk.append(succ[walk[-1]])
            if len(walk) > n:
                break
        if tuple(walk) != loop:
            raise DiagramError(f"loop {d.loop_labels[0]} is not the arc cycle {walk}")
        return
    incoming = set(d.wedge.incoming)
    for j, loop in enumerate(d.loops):
        walk = [d.wedge.outgoing[j]]
        while walk[-1] not in incoming:
            walk.append(succ[walk[-1]])
            if len(walk) > n:
                raise DiagramError(f"loop {d.loop_labels[j]} never returns to the wedge")
        if walk[-1] != d.wedge.incoming[j]:
            raise DiagramError(f"loop {d.loop_labels[j]} leaves on outgoing slot {j} "
                               f"but returns on arc {d.names[walk[-1]]}")
        if tuple(walk) != loop:
            raise DiagramError(f"loop {d.loop_labels[j]} is listed as {loop} but its arcs run {tuple(walk)}")


def relations(d: WedgeDiagram) -> list[tuple[str, GroupWord, GroupWord]]:
    """``(kind, lhs, rhs)`` pairs, one per crossing and one for the wedge point."""
    g = GroupWord.gen
    out = []
    for c in d.crossings:
        s = c.sign
        out.append(("crossing", g(c.under_out), g(c.over, s) * g(c.under_in) * g(c.over, -s)))
    if d.wedge is not None:
        lhs = GroupWord([a + 1 for a in d.wedge.incoming])
        rhs = GroupWord([a + 1 for a in d.wedge.outgoing])
        out.append(("wedge", lhs, rhs))
    return out


def wirtinger(d: WedgeDiagram) -> GroupPresentation:
    """One generator per arc; relators ``lhs * rhs^-1`` from :func:`relations`."""
    rels = tuple(lhs * rhs.inverse() for _, lhs, rhs in relations(d))
    return GroupPresentation(d.arcs, rels, d.names)


# -- embedding stages ----------------------------------------------------------

Trace = tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class EmbeddingStage:
    """One inclusion ``S_{i+1} in S_i``: the inner diagram and the outer loop traces.

    ``traces[k]`` lists the inner arcs (with orientation) encircled by the
    ``k``-th outer generator, in order.  ``substitution``, when known, is the
    bonding map this stage realises (inner loops to words in outer loops).
    """

    diagram: WedgeDiagram
    traces: tuple[Trace, ...]
    name: str = ""
    substitution: Substitution | None = field(default=None, compare=False)
    canonical: bool = False

    def __post_init__(self):
        traces = tuple(tuple((int(a), int(e)) for a, e in t) for t in self.traces)
        object.__setattr__(self, "traces", traces)
        for t in traces:
            for a, e in t:
                if not 0 <= a < self.diagram.arcs:
                    raise DiagramError(f"trace refers to missing arc {a}")
                if e not in (1, -1):
                    raise DiagramError(f"trace exponents must be +1 or -1, got {e}")

    def trace_words(self) -> list[GroupWord]:
        return [GroupWord.from_syllables(t) for t in self.traces]


def inclusion_morphism(stage: EmbeddingStage, outer: GroupPresentation,
                       outer_loop_of: Sequence[int] | None = None) -> GroupMorphism:
    """The map ``pi_1(E_i) -> pi_1(E_{i+1})`` read off from the traces.

    With ``outer_loop_of`` (outer generator -> outer loop index) the traces
    are taken per loop and every outer generator is sent to its loop's trace.
    """
    inner = wirtinger(stage.diagram)
    words = stage.trace_words()
    if outer_loop_of is None:
        if len(words) != outer.rank:
            raise DiagramError(f"stage has {len(words)} traces but the outer group has "
                               f"{outer.rank} generators")
        images = words
    else:
        if len(outer_loop_of) != outer.rank:
            raise DiagramError("outer_loop_of must cover every outer generator")
        missing = [k for k in set(outer_loop_of) if k >= len(words)]
        if missing:
            raise DiagramError(f"missing trace for outer loop(s) {sorted(missing)}")
        images = [words[k] for k in outer_loop_of]
    return make_morphism(outer, inner, images)


def abelianized_inclusion(stage: EmbeddingStage) -> np.ndarray:
    """``H_1(E_i) -> H_1(E_{i+1})`` in loop coordinates, acting on column vectors.

    Every arc of a loop abelianizes to that loop's meridian, so column ``k``
    counts, per inner loop, the signed occurrences in trace ``k``.
    """
    loop_of = stage.diagram.loop_of()
    m = np.zeros((stage.diagram.num_loops, len(stage.traces)), dtype=object)
    for k, t in enumerate(stage.traces):
        for a, e in t:
            m[loop_of[a], k] += e
    return m


def duality_check(stage: EmbeddingStage, sub: Substitution | None = None) -> bool:
    """Abelianized inclusion equals the transposed transition matrix of ``sub``."""
    sub = sub or stage.substitution
    if sub is None:
        raise DiagramError("no substitution given for the duality check")
    if sub.alphabet != stage.diagram.num_loops or sub.target != len(stage.traces):
        raise DiagramError(
            f"rank mismatch: substitution {sub.alphabet}->{sub.target} letters, stage has "
            f"{stage.diagram.num_loops} inner loops and {len(stage.traces)} traces")
    return np.array_equal(abelianized_inclusion(stage), transition_matrix(sub).T)


# -- stage builders and fixtures -----------------------------------------------

def canonical_stage(sub: Substitution, traces: Sequence[Trace] | None = None,
                    name: str = "") -> EmbeddingStage:
    """Crossing-free planar stage realising ``sub``.

    One arc per inner loop, all meeting at the wedge.  By default the meridian
    of outer loop ``i`` encircles the strands of inner loop ``j`` as many times
    as ``i`` occurs in ``sub(j)``, grouped by ``j``; pass ``traces`` to fix a
    particular strand order.
    """
    k = sub.alphabet
    d = WedgeDiagram(k, (), Wedge(tuple(range(k)), tuple(range(k))), tuple((j,) for j in range(k)))
    if traces is None:
        m = transition_matrix(sub)
        traces = [tuple((j, 1) for j in range(k) for _ in range(int(m[i, j])))
                  for i in range(sub.target)]
    return EmbeddingStage(d, tuple(traces), name or "canonical", sub, canonical=True)


def sturmian_stage(n: int) -> EmbeddingStage:
    """Unknotted surface stage for ``sigma_n``.

    The meridians map to ``(ab)^n a`` and ``ab``: the strands of the two inner
    loops alternate around the 0 hole, as in the spiral picture of the
    surface embedding.  This is a free basis, so the stage induces an
    isomorphism of ``F_2``.
    """
    sub = sturmian_substitution(n)
    t0 = ((0, 1), (1, 1)) * n + ((0, 1),)
    t1 = ((0, 1), (1, 1))
    return canonical_stage(sub, (t0, t1), name=f"sturmian_{n}")


def _dyadic_unknotted() -> EmbeddingStage:
    d = WedgeDiagram(1, (Crossing(0, 0, 0, 1),), None, ((0,),), ("a",), ("A",))
    return EmbeddingStage(d, (((0, 1), (0, 1)),), "dyadic_unknotted",
                          Substitution(1, (b"\x00\x00",)), canonical=True)


def _dyadic_trefoil() -> EmbeddingStage:
    a, b, c = 0, 1, 2
    crossings = (Crossing(a, b, c), Crossing(c, a, b), Crossing(b, c, a))
    d = WedgeDiagram(3, crossings, None, ((a, b, c),), ("a", "b", "c"), ("A",))
    return EmbeddingStage(d, (((a, 1), (b, 1)),), "dyadic_trefoil", Substitution(1, (b"\x00\x00",)))


FIBONACCI_STAGE_SUB = sturmian_substitution(1)  # A -> AAB, B -> AB


def _fibonacci_unknotted() -> EmbeddingStage:
    a, a2, b = 0, 1, 2
    d = WedgeDiagram(3, (Crossing(a, a, a2),), Wedge((a2, b), (a, b)), ((a, a2), (b,)),
                     ("a", "a'", "b"), ("A", "B"))
    traces = (((a, 1), (a2, 1), (b, 1)), ((a, 1), (b, 1)))
    return EmbeddingStage(d, traces, "fibonacci_unknotted", FIBONACCI_STAGE_SUB, canonical=True)


def _fibonacci_trefoil() -> EmbeddingStage:
    w, x, y, z, b = range(5)
    crossings = (Crossing(y, w, x), Crossing(x, y, z), Crossing(z, x, y))
    d = WedgeDiagram(5, crossings, Wedge((z, b), (w, b)), ((w, x, y, z), (b,)),
                     ("w", "x", "y", "z", "b"), ("A", "B"))
    traces = (((y, 1), (w, 1), (b, 1)), ((z, 1), (b, 1)))
    return EmbeddingStage(d, traces, "fibonacci_trefoil", FIBONACCI_STAGE_SUB)


def _thue_morse_simplified() -> EmbeddingStage:
    a, b, b1, b2 = range(4)
    crossings = (Crossing(a, b, b1, -1), Crossing(a, b1, b2, 1))
    d = WedgeDiagram(4, crossings, Wedge((a, b2), (a, b)), ((a,), (b, b1, b2)),
                     ("a", "b", "b'", "b''"), ("A", "B"))
    traces = (((a, 1), (b1, 1)), ((b, 1), (a, 1)))
    return EmbeddingStage(d, traces, "thue_morse_simplified", THUE_MORSE)


FIXTURES = {
    "dyadic_unknotted": _dyadic_unknotted,
    "dyadic_trefoil": _dyadic_trefoil,
    "fibonacci_unknotted": _fibonacci_unknotted,
    "fibonacci_trefoil": _fibonacci_trefoil,
    "thue_morse_simplified": _thue_morse_simplified,
}


def builtin_fixture(name: str) -> EmbeddingStage:
    try:
        return FIXTURES[name]()
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; known: {', '.join(FIXTURES)}") from None

