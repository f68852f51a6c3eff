"""Words, substitutions, Sturmian parameters and sigma_w re-embeddings.

Words over the alphabet ``{0, ..., n-1}`` are stored as ``bytes`` (one byte
per letter), so the alphabet size is capped at 255.
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

MAX_ALPHABET = 255


class InvalidInput(ValueError):
    """Raised for words, substitutions or parameters that violate their invariants."""


def as_word(letters, n: int | None = None) -> bytes:
    """Coerce a digit string, bytes or integer sequence into a word.

    Strings are read one digit per letter (``"010"``); this is only
    unambiguous for alphabets of size at most 10.
    """
    if isinstance(letters, bytes):
        word = letters
    elif isinstance(letters, str):
        if not all(ch.isdigit() for ch in letters):
            raise InvalidInput(f"word string must consist of digits: {letters!r}")
        word = bytes(int(ch) for ch in letters)
    else:
        seq = [int(x) for x in letters]
        if any(x < 0 or x >= MAX_ALPHABET for x in seq):
            raise InvalidInput(f"letters must lie in [0, {MAX_ALPHABET})")
        word = bytes(seq)
    if n is not None:
        check_word(word, n)
    return word


def check_word(word: bytes, n: int) -> None:
    if n < 1 or n > MAX_ALPHABET:
        raise InvalidInput(f"alphabet size must be in 1..{MAX_ALPHABET}, got {n}")
    if word and max(word) >= n:
        raise InvalidInput(f"letter {max(word)} outside alphabet of size {n}")


def word_str(word: bytes, n: int = 10):
    """Digit string for small alphabets, integer list otherwise."""
    if n <= 10:
        return "".join(str(x) for x in word)
    return list(word)


def cyclic_permute(word: bytes, n: int, power: int = 1) -> bytes:
    """Apply ``i -> i + power mod n`` letterwise."""
    return bytes((x + power) % n for x in word)


def primitive_root(word: bytes) -> tuple[bytes, int]:
    """Return ``(root, k)`` with ``word == root * k`` and ``root`` primitive."""
    n = len(word)
    if n == 0:
        raise InvalidInput("empty word has no primitive root")
    for d in range(1, n + 1):
        if n % d == 0 and word[:d] * (n // d) == word:
            return word[:d], n // d
    raise AssertionError("unreachable")


def is_factor(target: bytes, word: bytes) -> bool:
    return target in word


@dataclass(frozen=True)
class Substitution:
    """Map from letters ``0..alphabet-1`` to nonempty words.

    ``target`` is the size of the alphabet the images are written in; it
    defaults to ``alphabet`` (an endomorphism of the free monoid).  Bonding
    maps between wedges of different ranks use ``target != alphabet``.
    """

    alphabet: int
    images: tuple[bytes, ...]
    target: int = 0

    def __post_init__(self):
        if not 1 <= self.alphabet <= MAX_ALPHABET:
            raise InvalidInput(f"alphabet size must be in 1..{MAX_ALPHABET}")
        target = self.target or self.alphabet
        object.__setattr__(self, "target", target)
        images = tuple(as_word(im) for im in self.images)
        object.__setattr__(self, "images", images)
        if len(images) != self.alphabet:
            raise InvalidInput(f"expected {self.alphabet} images, got {len(images)}")
        for letter, im in enumerate(images):
            if not im:
                raise InvalidInput(f"image of letter {letter} is empty")
            check_word(im, target)

    @classmethod
    def from_images(cls, images: Sequence, target: int | None = None) -> "Substitution":
        ims = tuple(as_word(im) for im in images)
        if target is None:
            target = max(len(ims), 1 + max(max(im) for im in ims if im) if any(ims) else 1)
        return cls(len(ims), ims, target)

    @classmethod
    def identity(cls, n: int) -> "Substitution":
        return cls(n, tuple(bytes([i]) for i in range(n)))

    def __call__(self, word) -> bytes:
        return apply_substitution(self, word)

    def image(self, letter: int) -> bytes:
        return self.images[letter]

    @property
    def matrix(self) -> np.ndarray:
        return transition_matrix(self)

    def __str__(self):
        n = max(self.alphabet, self.target)
        return ", ".join(f"{i}->{word_str(im, n)}" for i, im in enumerate(self.images))


def apply_substitution(sub: Substitution, word) -> bytes:
    word = as_word(word)
    check_word(word, sub.alphabet)
    return b"".join(sub.images[x] for x in word)


def compose(sub_a: Substitution, sub_b: Substitution) -> Substitution:
    """``sub_a . sub_b``: first ``sub_b``, then ``sub_a`` on each image."""
    if sub_b.target != sub_a.alphabet:
        raise InvalidInput(
            f"cannot compose: inner substitution writes over {sub_b.target} letters, "
            f"outer acts on {sub_a.alphabet}"
        )
    return Substitution(sub_b.alphabet, tuple(apply_substitution(sub_a, im) for im in sub_b.images),
                        sub_a.target)


def transition_matrix(sub: Substitution) -> np.ndarray:
    """Entry ``(i, j)`` counts occurrences of letter ``i`` in the image of ``j``.

    Returned with ``dtype=object`` so products never overflow.
    """
    m = np.zeros((sub.target, sub.alphabet), dtype=object)
    for j, im in enumerate(sub.images):
        for i, c in Counter(im).items():
            m[i, j] = c
    return m


def sturmian_substitution(n: int) -> Substitution:
    """``0 -> 0^(n+1) 1``, ``1 -> 0^n 1``."""
    if n < 1:
        raise InvalidInput(f"Sturmian substitution needs n >= 1, got {n}")
    return Substitution(2, (bytes(n + 1) + b"\x01", bytes(n) + b"\x01"))


FIBONACCI = Substitution(2, (b"\x00\x01\x00", b"\x00\x01"))
THUE_MORSE = Substitution(2, (b"\x00\x01", b"\x01\x00"))


def fixed_point_prefix(sub: Substitution, length: int, letter: int = 0) -> bytes:
    """Prefix of the one-sided fixed point grown from ``letter``."""
    word = bytes([letter])
    if not sub.images[letter].startswith(word):
        raise InvalidInput(f"image of {letter} does not start with {letter}")
    while len(word) < length:
        nxt = apply_substitution(sub, word)
        if len(nxt) <= len(word):
            raise InvalidInput("substitution does not grow from this letter")
        word = nxt
    return word[:length]


# -- sigma_w -----------------------------------------------------------------

@dataclass(frozen=True)
class SigmaEmbedding:
    """The substitution ``i -> 0^mu p^i(w) 0^mu`` built from a seed word ``w``.

    ``relabel`` records the cyclic relabelling applied to the sampled orbit
    before searching (0 when the orbit already contained letter 0).
    """

    w: bytes
    n: int
    mu: int
    substitution: Substitution = field(repr=False)
    relabel: int = 0

    @property
    def return_time(self) -> int:
        return 2 * self.mu + len(self.w)

    def __call__(self, word) -> bytes:
        return apply_substitution(self.substitution, word)

    def check(self) -> bool:
        """Uniform return time and injectivity on letters."""
        ims = self.substitution.images
        return all(len(im) == self.return_time for im in ims) and len(set(ims)) == len(ims)


def sigma_w(w, n: int = 2) -> SigmaEmbedding:
    w = as_word(w, n)
    if not w:
        raise InvalidInput("seed word w must be nonempty")
    mu = 1 + max(Counter(w).values())
    pad = bytes(mu)
    images = tuple(pad + cyclic_permute(w, n, i) + pad for i in range(n))
    return SigmaEmbedding(w, n, mu, Substitution(n, images))


def all_words(n: int, length: int) -> Iterable[bytes]:
    """All words of the given length, in lexicographic order."""
    for tup in itertools.product(range(n), repeat=length):
        yield bytes(tup)


def density_witness(target, orbit, max_seed_len: int, n: int = 2) -> SigmaEmbedding | None:
    """Find a seed ``w`` whose sigma_w image of the sampled orbit contains ``target``.

    Seeds are tried shortest first, then in lexicographic order, so the
    witness returned is canonical.  ``None`` when no seed of length at most
    ``max_seed_len`` works.
    """
    target = as_word(target, n)
    orbit = as_word(orbit, n)
    if not orbit:
        raise InvalidInput("orbit sample must be nonempty")
    shift = 0
    while 0 not in orbit:
        orbit = cyclic_permute(orbit, n)
        shift += 1
    for length in range(1, max_seed_len + 1):
        for w in all_words(n, length):
            emb = sigma_w(w, n)
            if target in emb(orbit):
                return SigmaEmbedding(emb.w, n, emb.mu, emb.substitution, shift)
    return None


# -- Sturmian parameters -------------------------------------------------------

@dataclass(frozen=True)
class SturmianParams:
    """Continued-fraction prefix ``n_1, n_2, ...``; the last entry repeats forever."""

    cf: tuple[int, ...]

    def __post_init__(self):
        cf = tuple(int(x) for x in self.cf)
        if not cf:
            raise InvalidInput("continued fraction prefix must be nonempty")
        if any(x < 1 for x in cf):
            raise InvalidInput(f"continued fraction entries must be >= 1: {cf}")
        object.__setattr__(self, "cf", cf)

    def entry(self, i: int) -> int:
        return self.cf[i] if i < len(self.cf) else self.cf[-1]

    def substitutions(self, depth: int | None = None) -> list[Substitution]:
        depth = len(self.cf) if depth is None else depth
        return [sturmian_substitution(self.entry(i)) for i in range(depth)]

    def word(self, length: int) -> bytes:
        """Prefix of the Sturmian sequence ``lim s_1 s_2 ... s_k (0)``."""
        sub = Substitution.identity(2)
        k = 0
        while True:
            sub = compose(sub, sturmian_substitution(self.entry(k)))
            k += 1
            if len(sub.images[0]) >= length:
                return sub.images[0][:length]


def tails_equivalent(a: SturmianParams, b: SturmianParams) -> bool:
    """Whether the induced infinite continued fractions share a tail.

    Both sequences are eventually constant, so a common suffix exists
    exactly when the repeated final entries agree.
    """
    if not isinstance(a, SturmianParams):
        a = SturmianParams(tuple(a))
    if not isinstance(b, SturmianParams):
        b = SturmianParams(tuple(b))
    return a.cf[-1] == b.cf[-1]

