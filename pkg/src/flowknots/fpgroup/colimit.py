"""Rank-one direct limits ``Z -> Z -> ...`` described by supernatural numbers."""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Sequence

INF = math.inf


def factorize(n: int) -> Counter:
    n = abs(int(n))
    if n == 0:
        raise ValueError("cannot factor 0")
    out: Counter = Counter()
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] += 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] += 1
    return out


@dataclass(frozen=True)
class SupernaturalDescriptor:
    """Prime multiplicities of the product of windings, up to ``depth``.

    A multiplicity of ``INF`` marks a prime that divides some winding in a
    declared periodic tail; it therefore divides infinitely many of them and
    the limit group is divisible by it.  With only infinite multiplicities
    the limit is ``Z[1/p, ...]`` for those primes; an empty descriptor is
    ``Z`` itself.
    """

    primes: tuple[tuple[int, float], ...]
    depth: int

    def as_dict(self) -> dict[int, float]:
        return dict(self.primes)

    @property
    def inverted_primes(self) -> tuple[int, ...]:
        return tuple(p for p, k in self.primes if k == INF)

    def group_name(self) -> str:
        inv = self.inverted_primes
        if not inv:
            return "Z"
        return "Z[" + ", ".join(f"1/{p}" for p in inv) + "]"

    def __str__(self):
        body = ", ".join(f"{p}: {'inf' if k == INF else k}" for p, k in self.primes)
        return "{" + body + "}"


def colimit_rank1(windings: Sequence[int], depth: int | None = None,
                  periodic_from: int | None = None) -> SupernaturalDescriptor:
    """Descriptor of ``lim(Z --w_1--> Z --w_2--> ...)`` from its first ``depth`` windings.

    ``periodic_from`` declares that ``windings[periodic_from:]`` repeats
    forever; every prime dividing one of those entries is recorded as
    infinite.  Signs are ignored (they are units).
    """
    windings = [int(w) for w in windings]
    depth = len(windings) if depth is None else depth
    if depth < 0 or depth > len(windings):
        raise ValueError(f"depth {depth} exceeds the {len(windings)} windings given")
    if any(w == 0 for w in windings):
        raise ValueError("winding numbers must be nonzero")
    counts: Counter = Counter()
    for w in windings[:depth]:
        counts.update(factorize(w))
    mult: dict[int, float] = dict(counts)
    if periodic_from is not None:
        if not 0 <= periodic_from < len(windings):
            raise ValueError("periodic_from must index into the windings")
        for w in windings[periodic_from:]:
            for p in factorize(w):
                mult[p] = INF
    return SupernaturalDescriptor(tuple(sorted(mult.items())), depth)
