"""Homomorphisms between presentations and direct systems of groups."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .nielsen import SubgroupGraph, nielsen_reduce
from .presentation import GroupPresentation, tietze_reduce
from .snf import rank as matrix_rank
from .words import GroupWord

VERIFIED = "verified"
UNVERIFIED = "unverified"


class InvalidMorphism(ValueError):
    pass


@dataclass(frozen=True)
class GroupMorphism:
    """Generator-image map ``source -> target``.

    ``status`` is ``"verified"`` when every source relator was checked to map
    to the identity (free targets, by free reduction) and ``"unverified"``
    when the target has relators and no word problem solution is attempted.
    """

    source: GroupPresentation
    target: GroupPresentation
    images: tuple[GroupWord, ...]
    status: str = field(default=VERIFIED)

    def __post_init__(self):
        if len(self.images) != self.source.rank:
            raise InvalidMorphism(f"{len(self.images)} images for {self.source.rank} generators")
        for w in self.images:
            if w.max_generator() >= self.target.rank:
                raise InvalidMorphism(f"image {w} leaves the target generators")

    def __call__(self, word: GroupWord) -> GroupWord:
        return word.substitute(self.images)

    def abelianized(self) -> list[list[int]]:
        """Matrix of the induced map on generator exponent vectors.

        Columns are indexed by source generators, rows by target generators
        (the map acts on column vectors).
        """
        cols = [w.exponent_sum(self.target.rank) for w in self.images]
        return [[c[i] for c in cols] for i in range(self.target.rank)]

    def format(self) -> str:
        return ", ".join(f"{self.source.names[g]} -> {w.format(self.target.names)}"
                         for g, w in enumerate(self.images))


def make_morphism(source: GroupPresentation, target: GroupPresentation,
                  images: Sequence[GroupWord]) -> GroupMorphism:
    """Build a morphism, verifying relators when the target is free."""
    images = tuple(GroupWord(w.letters) for w in images)
    if target.is_free:
        for r in source.relators:
            if r.substitute(images):
                raise InvalidMorphism(
                    f"relator {r.format(source.names)} does not map to the identity")
        return GroupMorphism(source, target, images, VERIFIED)
    return GroupMorphism(source, target, images, UNVERIFIED)


def is_free_automorphism(f: GroupMorphism) -> bool:
    if not (f.source.is_free and f.target.is_free):
        raise InvalidMorphism("is_free_automorphism needs free source and target")
    if f.source.rank != f.target.rank:
        raise InvalidMorphism("source and target ranks differ")
    return nielsen_reduce(f.images, f.target.rank)[1]


@dataclass(frozen=True)
class DirectSystem:
    """``P_1 -> P_2 -> ...``; stages are numbered from 1 like the complements ``E_i``."""

    presentations: tuple[GroupPresentation, ...]
    maps: tuple[GroupMorphism, ...]

    def __post_init__(self):
        if len(self.maps) != max(len(self.presentations) - 1, 0):
            raise ValueError("need exactly one map between consecutive presentations")
        for i, f in enumerate(self.maps):
            if f.source != self.presentations[i] or f.target != self.presentations[i + 1]:
                raise ValueError(f"map {i + 1} does not join presentations {i + 1} and {i + 2}")

    @property
    def depth(self) -> int:
        return len(self.maps)

    def presentation(self, stage: int) -> GroupPresentation:
        return self.presentations[stage - 1]

    def map(self, stage: int) -> GroupMorphism:
        """Morphism from stage ``stage`` to ``stage + 1``."""
        return self.maps[stage - 1]


class ImageRank(int):
    """An integer rank remembering how it was obtained (``"free"`` or ``"abelian"``)."""

    via: str

    def __new__(cls, value: int, via: str):
        obj = super().__new__(cls, value)
        obj.via = via
        return obj


def simplified_map(f: GroupMorphism, budget: int = 1000):
    """Transport ``f`` through Tietze simplifications of source and target."""
    src = tietze_reduce(f.source, budget)
    tgt = tietze_reduce(f.target, budget)
    images = tuple(f(src_w).substitute(tgt.forward) for src_w in src.backward)
    return make_morphism(src.presentation, tgt.presentation, images)


def stable_image_rank(system: DirectSystem, stage: int, budget: int = 1000) -> ImageRank:
    """Rank of the image of stage ``stage`` inside stage ``stage + 1``.

    If the target simplifies to a free group the image is a subgroup of a
    free group and its exact rank comes from the folded subgroup graph;
    otherwise the rank of the image in ``H_1 (x) Q`` is reported.
    """
    f = system.map(stage)
    tgt = tietze_reduce(f.target, budget)
    if tgt.presentation.is_free:
        images = [w.substitute(tgt.forward) for w in f.images]
        return ImageRank(SubgroupGraph(images, tgt.presentation.rank).subgroup_rank, "free")
    rel = f.target.exponent_matrix()  # rank x relators
    img = f.abelianized()
    rel_cols = [list(r) for r in zip(*rel)] if f.target.relators else []
    img_cols = [list(c) for c in zip(*img)]
    both = rel_cols + img_cols
    r_rel = matrix_rank(rel_cols) if rel_cols else 0
    r_both = matrix_rank(both) if both else 0
    return ImageRank(r_both - r_rel, "abelian")
