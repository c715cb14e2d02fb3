"""Free-group words, automorphisms of free groups and the Artin action of braids.

A word is a tuple of nonzero integers: ``i`` stands for the generator x_i and
``-i`` for its inverse (generators are 1-indexed).  Braid words use the same
encoding with ``i`` standing for sigma_i.
"""

from __future__ import annotations

from dataclasses import dataclass, field

__all__ = [
    "Word",
    "WordLengthExceeded",
    "reduce_letters",
    "word",
    "word_mul",
    "word_inv",
    "word_conj",
    "word_pow",
    "commutator",
    "substitute",
    "FreeAuto",
    "BraidWord",
    "artin_action",
    "braid_eq",
    "DEFAULT_LENGTH_CAP",
]

DEFAULT_LENGTH_CAP = 10**6

Word = tuple


class WordLengthExceeded(RuntimeError):
    pass


def reduce_letters(letters) -> Word:
    out: list[int] = []
    for x in letters:
        if x == 0:
            raise ValueError("0 is not a generator index")
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def word(*letters: int) -> Word:
    return reduce_letters(letters)


def word_mul(*words: Word) -> Word:
    return reduce_letters(x for w in words for x in w)


def word_inv(w: Word) -> Word:
    return tuple(-x for x in reversed(w))


def word_conj(u: Word, v: Word) -> Word:
    """v u v^-1."""
    return word_mul(v, u, word_inv(v))


def word_pow(w: Word, k: int) -> Word:
    if k < 0:
        return word_pow(word_inv(w), -k)
    return reduce_letters(w * k)


def commutator(u: Word, v: Word) -> Word:
    """[u, v] = u v u^-1 v^-1."""
    return word_mul(u, v, word_inv(u), word_inv(v))


def check_rank(w: Word, rank: int) -> None:
    for x in w:
        if not 1 <= abs(x) <= rank:
            raise ValueError(f"letter {x} outside rank {rank}")


def substitute(w: Word, images, cap: int = DEFAULT_LENGTH_CAP) -> Word:
    """Replace each x_i in ``w`` by ``images[i-1]`` (inverses by inverse images)."""
    out: list[int] = []
    for x in w:
        img = images[x - 1] if x > 0 else word_inv(images[-x - 1])
        for y in img:
            if out and out[-1] == -y:
                out.pop()
            else:
                out.append(y)
        if len(out) > cap:
            raise WordLengthExceeded(f"image word longer than {cap} letters")
    return tuple(out)


@dataclass(frozen=True)
class FreeAuto:
    """Automorphism of F_n given by generator images and inverse images.

    Composition follows functions: ``(f * g)(x) = f(g(x))``.
    """

    rank: int
    images: tuple[Word, ...]
    inverse_images: tuple[Word, ...] = field(default=None, compare=False)

    def __post_init__(self):
        images = tuple(reduce_letters(w) for w in self.images)
        object.__setattr__(self, "images", images)
        if len(images) != self.rank:
            raise ValueError("need one image per generator")
        for w in images:
            check_rank(w, self.rank)
        if self.inverse_images is None:
            raise ValueError("an automorphism needs its inverse images")
        inv = tuple(reduce_letters(w) for w in self.inverse_images)
        object.__setattr__(self, "inverse_images", inv)
        for i in range(self.rank):
            gen = (i + 1,)
            if substitute(inv[i], images) != gen or substitute(images[i], inv) != gen:
                raise ValueError("inverse images do not invert the automorphism")

    @classmethod
    def identity(cls, rank: int) -> FreeAuto:
        gens = tuple((i + 1,) for i in range(rank))
        return cls(rank, gens, gens)

    @classmethod
    def _trusted(cls, rank, images, inverse_images) -> FreeAuto:
        obj = object.__new__(cls)
        object.__setattr__(obj, "rank", rank)
        object.__setattr__(obj, "images", tuple(images))
        object.__setattr__(obj, "inverse_images", tuple(inverse_images))
        return obj

    def __call__(self, w: Word, cap: int = DEFAULT_LENGTH_CAP) -> Word:
        return substitute(w, self.images, cap)

    def __mul__(self, other: FreeAuto) -> FreeAuto:
        if other.rank != self.rank:
            raise ValueError("rank mismatch")
        images = tuple(substitute(w, self.images) for w in other.images)
        inverse = tuple(substitute(w, other.inverse_images) for w in self.inverse_images)
        return FreeAuto._trusted(self.rank, images, inverse)

    def inverse(self) -> FreeAuto:
        return FreeAuto._trusted(self.rank, self.inverse_images, self.images)

    def is_identity(self) -> bool:
        return all(w == (i + 1,) for i, w in enumerate(self.images))

    @classmethod
    def inner(cls, rank: int, u: Word) -> FreeAuto:
        """Conjugation x -> u x u^-1."""
        u = reduce_letters(u)
        check_rank(u, rank)
        ui = word_inv(u)
        return cls._trusted(
            rank,
            tuple(word_mul(u, (i + 1,), ui) for i in range(rank)),
            tuple(word_mul(ui, (i + 1,), u) for i in range(rank)),
        )

    @classmethod
    def transvection(cls, rank: int, i: int, w: Word, side: str = "right") -> FreeAuto:
        """x_i -> x_i w (or w x_i); w must not involve x_i."""
        w = reduce_letters(w)
        check_rank(w, rank)
        if any(abs(x) == i for x in w):
            raise ValueError("transvection word may not involve the moved generator")
        gens = [(j + 1,) for j in range(rank)]
        images = list(gens)
        inverse = list(gens)
        if side == "right":
            images[i - 1] = word_mul((i,), w)
            inverse[i - 1] = word_mul((i,), word_inv(w))
        else:
            images[i - 1] = word_mul(w, (i,))
            inverse[i - 1] = word_mul(word_inv(w), (i,))
        return cls._trusted(rank, images, inverse)


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: Word

    def __post_init__(self):
        letters = tuple(self.letters)
        for x in letters:
            if not 1 <= abs(x) <= self.strands - 1:
                raise ValueError(f"sigma index {x} outside B_{self.strands}")
        object.__setattr__(self, "letters", letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        if other.strands != self.strands:
            raise ValueError("strand mismatch")
        return BraidWord(self.strands, self.letters + other.letters)

    def __pow__(self, k: int) -> BraidWord:
        if k < 0:
            return self.inverse() ** (-k)
        return BraidWord(self.strands, self.letters * k)

    def inverse(self) -> BraidWord:
        return BraidWord(self.strands, word_inv(self.letters))

    def __len__(self):
        return len(self.letters)


def _sigma_images(images, inverse, i: int, sign: int):
    # right-compose the current automorphism with sigma_i^sign, in place
    a, b = images[i - 1], images[i]
    if sign > 0:
        # sigma_i: x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i
        images[i - 1] = word_mul(a, b, word_inv(a))
        images[i] = a
        # new inverse = sigma_i^-1 o old inverse: x_i -> x_{i+1}, x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
        inverse[:] = [_apply_sigma(w, i, -1) for w in inverse]
    else:
        images[i - 1] = b
        images[i] = word_mul(word_inv(b), a, b)
        inverse[:] = [_apply_sigma(w, i, +1) for w in inverse]


def _apply_sigma(w: Word, i: int, sign: int) -> Word:
    out: list[int] = []
    for x in w:
        k = abs(x)
        if k == i:
            img = (i, i + 1, -i) if sign > 0 else (i + 1,)
        elif k == i + 1:
            img = (i,) if sign > 0 else (-(i + 1), i, i + 1)
        else:
            img = (k,)
        if x < 0:
            img = word_inv(img)
        for y in img:
            if out and out[-1] == -y:
                out.pop()
            else:
                out.append(y)
    return tuple(out)


def artin_action(b: BraidWord, cap: int = DEFAULT_LENGTH_CAP) -> FreeAuto:
    """Automorphism of F_n induced by a braid; a homomorphism B_n -> Aut(F_n)."""
    n = b.strands
    images = [(i + 1,) for i in range(n)]
    inverse = [(i + 1,) for i in range(n)]
    for x in b.letters:
        _sigma_images(images, inverse, abs(x), 1 if x > 0 else -1)
        if max(len(images[abs(x) - 1]), len(images[abs(x)])) > cap:
            raise WordLengthExceeded(
                f"Artin image exceeded {cap} letters after {len(b.letters)}-letter braid"
            )
    return FreeAuto._trusted(n, images, inverse)


def braid_eq(u: BraidWord, v: BraidWord, cap: int = DEFAULT_LENGTH_CAP) -> bool:
    """Decide equality in B_n through the faithful Artin action."""
    if u.strands != v.strands:
        raise ValueError("strand mismatch")
    return artin_action(u * v.inverse(), cap).is_identity()
