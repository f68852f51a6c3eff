"""Freely reduced words in free groups.

A letter is a nonzero integer: ``g + 1`` stands for generator ``g`` and
``-(g + 1)`` for its inverse.  This keeps words hashable and cheap to
compare while still exposing (generator, exponent) syllables.
"""
from __future__ import annotations

from typing import Iterable, Sequence


def _reduce(letters: Iterable[int]) -> tuple[int, ...]:
    out: list[int] = []
    for x in letters:
        if x == 0:
            raise ValueError("0 is not a valid letter")
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


class GroupWord:
    """An element of a free group, always stored freely reduced."""

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[int] = ()):
        self.letters = _reduce(letters)

    @classmethod
    def from_syllables(cls, syllables: Iterable[Sequence[int]]) -> "GroupWord":
        letters = []
        for gen, exp in syllables:
            if exp not in (1, -1):
                raise ValueError(f"syllable exponents must be +1 or -1, got {exp}")
            if gen < 0:
                raise ValueError(f"negative generator index {gen}")
            letters.append((gen + 1) * exp)
        return cls(letters)

    @classmethod
    def gen(cls, g: int, exp: int = 1) -> "GroupWord":
        return cls([(g + 1)] * exp if exp >= 0 else [-(g + 1)] * (-exp))

    @property
    def syllables(self) -> tuple[tuple[int, int], ...]:
        return tuple((abs(x) - 1, 1 if x > 0 else -1) for x in self.letters)

    def __mul__(self, other: "GroupWord") -> "GroupWord":
        return GroupWord(self.letters + other.letters)

    def inverse(self) -> "GroupWord":
        return GroupWord(-x for x in reversed(self.letters))

    def __invert__(self):
        return self.inverse()

    def __pow__(self, k: int) -> "GroupWord":
        base = self if k >= 0 else self.inverse()
        return GroupWord(base.letters * abs(k))

    def __len__(self):
        return len(self.letters)

    def __bool__(self):
        return bool(self.letters)

    def __eq__(self, other):
        return isinstance(other, GroupWord) and self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def __lt__(self, other: "GroupWord"):
        return shortlex_key(self) < shortlex_key(other)

    def generators(self) -> set[int]:
        return {abs(x) - 1 for x in self.letters}

    def max_generator(self) -> int:
        return max((abs(x) - 1 for x in self.letters), default=-1)

    def exponent_sum(self, rank: int) -> list[int]:
        v = [0] * rank
        for x in self.letters:
            v[abs(x) - 1] += 1 if x > 0 else -1
        return v

    def substitute(self, images: Sequence["GroupWord"]) -> "GroupWord":
        """Image under the homomorphism sending generator ``g`` to ``images[g]``."""
        out: list[int] = []
        for x in self.letters:
            im = images[abs(x) - 1]
            out.extend(im.letters if x > 0 else (-y for y in reversed(im.letters)))
        return GroupWord(out)

    def cyclic_reduce(self) -> "GroupWord":
        lt = self.letters
        i, j = 0, len(lt)
        while j - i >= 2 and lt[i] == -lt[j - 1]:
            i += 1
            j -= 1
        return GroupWord(lt[i:j])

    def cyclic_canonical(self) -> "GroupWord":
        """Least rotation of the word or its inverse, after cyclic reduction.

        Two relators that are cyclic permutations of each other, or of each
        other's inverses, have the same canonical form.
        """
        w = self.cyclic_reduce().letters
        if not w:
            return GroupWord()
        inv = tuple(-x for x in reversed(w))
        cands = [c[i:] + c[:i] for c in (w, inv) for i in range(len(c))]
        return GroupWord(min(cands, key=_letter_key))

    def format(self, names: Sequence[str] | None = None) -> str:
        if not self.letters:
            return "1"
        parts, short = [], True
        for g, e in self.syllables:
            name = names[g] if names is not None else default_name(g)
            short = short and len(name) == 1
            parts.append(name if e == 1 else name + "^-1")
        return ("" if short else "*").join(parts)

    def __repr__(self):
        return f"GroupWord({self.format()!r})"

    def __str__(self):
        return self.format()


def _letter_key(letters: tuple[int, ...]):
    # generators ordered a < A < b < B ...
    return tuple(2 * (abs(x) - 1) + (x < 0) for x in letters)


def shortlex_key(w: GroupWord):
    return (len(w.letters), _letter_key(w.letters))


_ALPHA = "abcdefghijklmnopqrstuvwxyz"


def default_name(g: int) -> str:
    return _ALPHA[g] if g < 26 else f"x{g}"


def parse_word(text: str, names: Sequence[str] | None = None) -> GroupWord:
    """Parse ``"abA"`` style words: lower case generators, upper case inverses.

    With ``names`` given, tokens are matched greedily against the names, and
    a trailing ``^-1`` inverts the preceding token; an upper-case letter
    that is not itself a name inverts its lower-case generator.
    """
    text = text.replace(" ", "").replace("*", "")
    if text in ("", "1"):
        return GroupWord()
    if names is None:
        letters = []
        for ch in text:
            if ch.lower() not in _ALPHA:
                raise ValueError(f"cannot parse letter {ch!r}")
            g = _ALPHA.index(ch.lower())
            letters.append(g + 1 if ch.islower() else -(g + 1))
        return GroupWord(letters)
    order = sorted(range(len(names)), key=lambda g: -len(names[g]))
    letters = []
    i = 0
    while i < len(text):
        for g in order:
            if text.startswith(names[g], i):
                i += len(names[g])
                if text.startswith("^-1", i):
                    letters.append(-(g + 1))
                    i += 3
                else:
                    letters.append(g + 1)
                break
        else:
            ch = text[i]
            if ch.isupper() and ch.lower() in names:
                letters.append(-(names.index(ch.lower()) + 1))
                i += 1
                continue
            raise ValueError(f"cannot parse {text[i:]!r} with generators {list(names)}")
    return GroupWord(letters)


def free_reduce(word) -> GroupWord:
    """Freely reduce a word given as a GroupWord, signed letters or syllables."""
    if isinstance(word, GroupWord):
        return GroupWord(word.letters)
    word = list(word)
    if word and not isinstance(word[0], int):
        return GroupWord.from_syllables(word)
    return GroupWord(word)
