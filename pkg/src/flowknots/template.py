"""Closed orbits on the Lorenz template and genus certificates for re-embedded minimal sets.

A periodic word over {0, 1} is a closed orbit of the suspended one-sided
shift on the Lorenz template.  Its braid is read off the branch line:
the cyclic shifts of the word, sorted lexicographically with 0 < 1, are the
strand positions, and the shift map permutes them.  The braid is positive,
so the closure of a single cycle has Seifert genus ``(c - n + 1) / 2``.
"""
from __future__ import annotations

import warnings
from bisect import bisect_left, insort
from dataclasses import dataclass
from itertools import islice

from .symbolic import (InvalidInput, SigmaEmbedding, Substitution, SturmianParams, all_words,
                       as_word, primitive_root, sigma_w, sturmian_substitution, word_str)

ORDER_CONVENTION = "branch-line order: lexicographic on cyclic shifts, 0 < 1"


class BraidConsistencyError(AssertionError):
    """A braid violated an identity that holds for every Lorenz knot."""


@dataclass(frozen=True)
class TemplateWord:
    letters: bytes

    def __post_init__(self):
        w = as_word(self.letters, 2)
        if not w:
            raise InvalidInput("template word must be nonempty")
        root, k = primitive_root(w)
        if k > 1:
            raise InvalidInput(f"{word_str(w)} is the {k}-th power of {word_str(root)} "
                               f"(period {len(root)}); its orbit is not a knot")
        object.__setattr__(self, "letters", w)

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return word_str(self.letters)


@dataclass(frozen=True)
class LorenzBraid:
    strands: int
    permutation: tuple[int, ...]
    crossings: int


def _inversions(perm) -> int:
    seen: list[int] = []
    count = 0
    for p in perm:
        count += len(seen) - bisect_left(seen, p + 1)
        insort(seen, p)
    return count


def lorenz_braid(w) -> LorenzBraid:
    """Braid of the closed orbit ``w``; ``permutation[i]`` is where strand ``i`` goes."""
    tw = w if isinstance(w, TemplateWord) else TemplateWord(as_word(w, 2))
    s = tw.letters
    n = len(s)
    shifts = [s[i:] + s[:i] for i in range(n)]
    pos = {r: i for i, r in enumerate(sorted(shifts))}
    perm = [0] * n
    for i in range(n):
        perm[pos[shifts[i]]] = pos[shifts[(i + 1) % n]]
    return LorenzBraid(n, tuple(perm), _inversions(perm))


def genus_lower_bound(b: LorenzBraid) -> int:
    twice = b.crossings - b.strands + 1
    if twice < 0 or twice % 2:
        raise BraidConsistencyError(f"c - n + 1 = {twice} for a braid on {b.strands} strands")
    return twice // 2


def word_genus(w) -> int:
    return genus_lower_bound(lorenz_braid(w))


@dataclass(frozen=True)
class FirstStageLoops:
    """Template words traced by the two wedge loops of a first stage.

    ``*_power`` is the exponent removed to reach a primitive word; a power
    above 1 means the loop's orbit closes up early (a link component, not a
    knot of that length).
    """

    zero: TemplateWord
    one: TemplateWord
    zero_power: int = 1
    one_power: int = 1


def first_stage_loops(sub: Substitution) -> FirstStageLoops:
    if sub.alphabet != 2 or sub.target != 2:
        raise InvalidInput("first-stage loops need a substitution on two letters")
    (r0, k0), (r1, k1) = primitive_root(sub.image(0)), primitive_root(sub.image(1))
    for k, img in ((k0, sub.image(0)), (k1, sub.image(1))):
        if k > 1:
            warnings.warn(f"loop word {word_str(img)} is a {k}-th power; using its primitive root",
                          stacklevel=2)
    return FirstStageLoops(TemplateWord(r0), TemplateWord(r1), k0, k1)


@dataclass(frozen=True)
class CertificateRow:
    embedding: SigmaEmbedding
    loop: TemplateWord
    braid: LorenzBraid
    genus: int

    def as_dict(self) -> dict:
        return {"w": word_str(self.embedding.w), "mu": self.embedding.mu, "loopWord": str(self.loop),
                "strands": self.braid.strands, "crossings": self.braid.crossings,
                "genusLB": self.genus}


@dataclass(frozen=True)
class Certificate:
    rows: tuple[CertificateRow, ...]
    requested: int
    max_seed_len: int

    @property
    def complete(self) -> bool:
        return len(self.rows) >= self.requested

    def as_dict(self) -> dict:
        return {"complete": self.complete, "requested": self.requested,
                "maxSeedLen": self.max_seed_len,
                "rows": [r.as_dict() for r in self.rows]}


def _first_bonding(base) -> Substitution:
    if isinstance(base, SturmianParams):
        return sturmian_substitution(base.entry(0))
    if base.alphabet != 2 or base.target != 2:
        raise InvalidInput("certificates are defined for two-letter minimal sets")
    return base


def reembedded_loop(base: Substitution, w) -> tuple[SigmaEmbedding, TemplateWord]:
    """First-stage 0-loop of the ``sigma_w`` copy: the primitive root of ``sigma_w(base(0))``."""
    emb = sigma_w(w, 2)
    root, _ = primitive_root(emb(base.image(0)))
    return emb, TemplateWord(root)


def distinct_knot_certificate(base, m: int, max_seed_len: int = 40,
                              per_length: int = 64) -> Certificate:
    """``m`` re-embeddings of one minimal set whose 0-loops have distinct genus bounds.

    Seeds are scanned by length, then lexicographically (at most
    ``per_length`` per length); a seed is kept when its bound beats every
    bound kept so far, so the bounds come out strictly increasing.
    """
    if m < 1:
        raise InvalidInput("m must be positive")
    sub = _first_bonding(base)
    rows: list[CertificateRow] = []
    best = -1
    for length in range(1, max_seed_len + 1):
        for w in islice(all_words(2, length), per_length):
            emb, loop = reembedded_loop(sub, w)
            braid = lorenz_braid(loop)
            g = genus_lower_bound(braid)
            if g > best:
                rows.append(CertificateRow(emb, loop, braid, g))
                best = g
                if len(rows) == m:
                    return Certificate(tuple(rows), m, max_seed_len)
    return Certificate(tuple(rows), m, max_seed_len)
