"""Exact scalar rings: Laurent polynomials, cyclotomic integers, group rings.

Every element is immutable and hashable.  Elements of one ring combine freely
with Python ints; combining elements of different rings raises
:class:`RingMismatch`.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce

__all__ = [
    "RingMismatch",
    "NotAUnit",
    "Laurent",
    "Cyclotomic",
    "GroupRing",
    "LaurentPoly",
    "CycElt",
    "GroupRingElt",
    "FreeGroup",
    "PermGroup",
    "cyclotomic_poly",
    "embed_complex",
    "ring_of",
    "to_laurent_map",
    "elt_to_json",
    "elt_from_json",
    "ring_to_json",
    "ring_from_json",
]


class RingMismatch(ValueError):
    pass


class NotAUnit(ArithmeticError):
    pass


# ---------------------------------------------------------------------------
# cyclotomic polynomials


def _poly_divmod(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    # integer polynomials, low degree first; den must be monic
    num = list(num)
    dd = len(den) - 1
    if len(num) - 1 < dd:
        return [0], num
    quot = [0] * (len(num) - dd)
    for k in range(len(num) - 1 - dd, -1, -1):
        c = num[k + dd]
        quot[k] = c
        if c:
            for j, d in enumerate(den):
                num[k + j] -= c * d
    rem = num[:dd] or [0]
    return quot, rem


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, constant term first."""
    if n < 1:
        raise ValueError("cyclotomic order must be positive")
    num = [-1] + [0] * (n - 1) + [1]
    den = [1]
    for d in range(1, n):
        if n % d == 0:
            den = _poly_mul(den, list(cyclotomic_poly(d)))
    quot, rem = _poly_divmod(num, den)
    assert not any(rem)
    return tuple(quot)


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[int, ...], ...]:
    # residue of x^e mod Phi_n for e in range(n)
    phi = list(cyclotomic_poly(n))
    deg = len(phi) - 1
    table = []
    cur = [0] * deg
    cur[0] = 1
    for _ in range(n):
        table.append(tuple(cur))
        # multiply by x and reduce
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            cur = [c - top * p for c, p in zip(cur, phi[:deg])]
    return tuple(table)


@lru_cache(maxsize=None)
def _units_mod(n: int) -> tuple[int, ...]:
    return tuple(a for a in range(1, n + 1) if math.gcd(a, n) == 1)


# ---------------------------------------------------------------------------
# ring descriptors


@dataclass(frozen=True)
class Laurent:
    """The ring Z[q, q^-1]; involution q -> q^-1."""

    involution = "q -> q^-1"

    def zero(self) -> LaurentPoly:
        return LaurentPoly()

    def one(self) -> LaurentPoly:
        return LaurentPoly({0: 1})

    def gen(self) -> LaurentPoly:
        return LaurentPoly({1: 1})

    def __call__(self, x) -> LaurentPoly:
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, int):
            return LaurentPoly({0: x})
        raise RingMismatch(f"cannot coerce {x!r} into {self}")

    def __str__(self) -> str:
        return "laurent"


@dataclass(frozen=True)
class Cyclotomic:
    """The ring Z[zeta_n] = Z[q]/Phi_n(q); involution zeta -> zeta^-1."""

    n: int

    involution = "zeta -> zeta^-1"

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("cyclotomic order must be positive")

    @property
    def degree(self) -> int:
        return len(cyclotomic_poly(self.n)) - 1

    def zero(self) -> CycElt:
        return CycElt(self.n, (0,) * self.degree)

    def one(self) -> CycElt:
        return CycElt.power(self.n, 0)

    def gen(self) -> CycElt:
        return CycElt.power(self.n, 1)

    def __call__(self, x) -> CycElt:
        if isinstance(x, CycElt):
            if x.n != self.n:
                raise RingMismatch(f"element of Z[zeta_{x.n}] is not in {self}")
            return x
        if isinstance(x, int):
            return CycElt(self.n, (x,) + (0,) * (self.degree - 1))
        if isinstance(x, LaurentPoly):
            return x.reduce(self.n)
        raise RingMismatch(f"cannot coerce {x!r} into {self}")

    def __str__(self) -> str:
        return f"cyc:{self.n}"


@dataclass(frozen=True)
class GroupRing:
    """Integral group ring Z[G]; involution g -> g^-1."""

    group: object

    involution = "g -> g^-1"

    def zero(self) -> GroupRingElt:
        return GroupRingElt(self.group, {})

    def one(self) -> GroupRingElt:
        return GroupRingElt(self.group, {self.group.identity: 1})

    def element(self, g) -> GroupRingElt:
        return GroupRingElt(self.group, {g: 1})

    def __call__(self, x) -> GroupRingElt:
        if isinstance(x, GroupRingElt):
            if x.group != self.group:
                raise RingMismatch("group ring elements over different groups")
            return x
        if isinstance(x, int):
            return GroupRingElt(self.group, {self.group.identity: x} if x else {})
        raise RingMismatch(f"cannot coerce {x!r} into {self}")

    def __str__(self) -> str:
        return f"Z[{self.group}]"


# ---------------------------------------------------------------------------
# Laurent polynomials


class LaurentPoly:
    """Element of Z[q, q^-1], stored as a sparse exponent -> coefficient map."""

    __slots__ = ("_terms", "_hash")

    ring = Laurent()

    def __init__(self, terms: dict[int, int] | None = None):
        self._terms = {e: c for e, c in (terms or {}).items() if c}
        self._hash = None

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly({0: other})
        raise RingMismatch(f"cannot combine Laurent polynomial with {type(other).__name__}")

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = LaurentPoly({0: 1})
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("L", tuple(sorted(self._terms.items()))))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def conj(self) -> LaurentPoly:
        return LaurentPoly({-e: c for e, c in self._terms.items()})

    def is_unit(self) -> bool:
        return len(self._terms) == 1 and abs(next(iter(self._terms.values()))) == 1

    def inverse(self) -> LaurentPoly:
        if not self.is_unit():
            raise NotAUnit(f"{self} is not a unit of Z[q,q^-1]")
        (e, c), = self._terms.items()
        return LaurentPoly({-e: c})

    def divexact_int(self, k: int) -> LaurentPoly:
        out = {}
        for e, c in self._terms.items():
            if c % k:
                raise ArithmeticError(f"{self} is not divisible by {k}")
            out[e] = c // k
        return LaurentPoly(out)

    def content(self) -> int:
        return reduce(math.gcd, self._terms.values(), 0)

    def reduce(self, n: int) -> CycElt:
        """Image in Z[q]/Phi_n."""
        table = _power_table(n)
        deg = len(table[0])
        acc = [0] * deg
        for e, c in self._terms.items():
            for j, t in enumerate(table[e % n]):
                if t:
                    acc[j] += c * t
        return CycElt(n, tuple(acc))

    def substitute(self, value):
        """Evaluate at ``value`` (any ring element or number supporting powers)."""
        total = 0
        for e, c in self._terms.items():
            total = total + c * value ** e
        return total

    def evaluate(self, z: complex) -> complex:
        return sum(c * z ** e for e, c in self._terms.items()) + 0j

    def sort_key(self):
        return tuple(sorted(self._terms.items()))

    def __repr__(self):
        return f"LaurentPoly({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms.items(), reverse=True):
            if e == 0:
                mono = str(abs(c))
            else:
                mono = "q" if e == 1 else f"q^{e}"
                if abs(c) != 1:
                    mono = f"{abs(c)}*{mono}"
            parts.append(("- " if c < 0 else "+ ") + mono)
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]


# ---------------------------------------------------------------------------
# cyclotomic integers


class CycElt:
    """Element of Z[zeta_n], stored as its residue modulo Phi_n."""

    __slots__ = ("n", "c", "_hash")

    def __init__(self, n: int, coeffs: tuple[int, ...]):
        deg = len(cyclotomic_poly(n)) - 1
        coeffs = tuple(coeffs)
        if len(coeffs) != deg:
            # reduce an arbitrary-length coefficient list
            table = _power_table(n)
            acc = [0] * deg
            for e, c in enumerate(coeffs):
                if c:
                    for j, t in enumerate(table[e % n]):
                        if t:
                            acc[j] += c * t
            coeffs = tuple(acc)
        self.n = n
        self.c = coeffs
        self._hash = None

    @classmethod
    def power(cls, n: int, e: int) -> CycElt:
        return cls(n, _power_table(n)[e % n])

    @property
    def ring(self) -> Cyclotomic:
        return Cyclotomic(self.n)

    def _coerce(self, other):
        if isinstance(other, CycElt):
            if other.n != self.n:
                raise RingMismatch(f"Z[zeta_{self.n}] vs Z[zeta_{other.n}]")
            return other
        if isinstance(other, int):
            return CycElt(self.n, (other,) + (0,) * (len(self.c) - 1))
        raise RingMismatch(f"cannot combine cyclotomic integer with {type(other).__name__}")

    def __add__(self, other):
        other = self._coerce(other)
        return CycElt(self.n, tuple(a + b for a, b in zip(self.c, other.c)))

    __radd__ = __add__

    def __neg__(self):
        return CycElt(self.n, tuple(-a for a in self.c))

    def __sub__(self, other):
        other = self._coerce(other)
        return CycElt(self.n, tuple(a - b for a, b in zip(self.c, other.c)))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return CycElt(self.n, tuple(a * other for a in self.c))
        other = self._coerce(other)
        return CycElt(self.n, cyc_mul_coeffs(self.n, self.c, other.c))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = CycElt.power(self.n, 0)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = self._coerce(other)
        if not isinstance(other, CycElt):
            return NotImplemented
        return self.n == other.n and self.c == other.c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("C", self.n, self.c))
        return self._hash

    def __bool__(self):
        return any(self.c)

    def is_zero(self) -> bool:
        return not any(self.c)

    def galois(self, a: int) -> CycElt:
        """Image under the automorphism zeta -> zeta^a (gcd(a, n) = 1)."""
        table = _power_table(self.n)
        acc = [0] * len(self.c)
        for e, c in enumerate(self.c):
            if c:
                for j, t in enumerate(table[(a * e) % self.n]):
                    if t:
                        acc[j] += c * t
        return CycElt(self.n, tuple(acc))

    def conj(self) -> CycElt:
        return self.galois(-1)

    def _conj_product(self) -> CycElt:
        out = CycElt.power(self.n, 0)
        for a in _units_mod(self.n):
            if a % self.n != 1 % self.n:
                out = out * self.galois(a)
        return out

    def norm(self) -> int:
        if self.is_zero():
            return 0
        prod = self * self._conj_product()
        assert not any(prod.c[1:])
        return prod.c[0]

    def is_unit(self) -> bool:
        return abs(self.norm()) == 1

    def inverse(self) -> CycElt:
        cp = self._conj_product()
        nrm = (self * cp).c[0]
        if abs(nrm) != 1:
            raise NotAUnit(f"{self} is not a unit of Z[zeta_{self.n}]")
        return cp * nrm

    def divexact_int(self, k: int) -> CycElt:
        if any(a % k for a in self.c):
            raise ArithmeticError(f"{self} is not divisible by {k}")
        return CycElt(self.n, tuple(a // k for a in self.c))

    def divexact(self, other: CycElt) -> CycElt:
        """Exact quotient in Z[zeta_n]; raises if ``other`` does not divide."""
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero cyclotomic integer")
        cp = other._conj_product()
        nrm = (other * cp).c[0]
        return (self * cp).divexact_int(nrm)

    def field_quotient(self, other: CycElt) -> tuple[CycElt, int]:
        """self/other in Q(zeta_n) as (numerator, positive denominator), reduced."""
        other = self._coerce(other)
        cp = other._conj_product()
        nrm = (other * cp).c[0]
        num = self * cp
        if nrm < 0:
            num, nrm = -num, -nrm
        g = math.gcd(num.content(), nrm)
        if g > 1:
            num = num.divexact_int(g)
            nrm //= g
        return num, nrm

    def content(self) -> int:
        return reduce(math.gcd, self.c, 0)

    def evaluate(self, z: complex) -> complex:
        total = 0j
        for c in reversed(self.c):
            total = total * z + c
        return total

    def sort_key(self):
        return self.c

    def __repr__(self):
        return f"CycElt({self.n}, {self.c})"

    def __str__(self):
        if not any(self.c):
            return "0"
        parts = []
        for e in range(len(self.c) - 1, -1, -1):
            c = self.c[e]
            if not c:
                continue
            if e == 0:
                mono = str(abs(c))
            else:
                mono = "z" if e == 1 else f"z^{e}"
                if abs(c) != 1:
                    mono = f"{abs(c)}*{mono}"
            parts.append(("- " if c < 0 else "+ ") + mono)
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]


def cyc_mul_coeffs(n: int, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    deg = len(a)
    conv = [0] * (2 * deg - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    conv[i + j] += x * y
    return cyc_reduce_conv(n, conv)


def cyc_reduce_conv(n: int, conv: list[int]) -> tuple[int, ...]:
    """Reduce an unreduced coefficient list (length < 2*deg) modulo Phi_n."""
    table = _power_table(n)
    deg = len(table[0])
    out = conv[:deg]
    if len(out) < deg:
        out = out + [0] * (deg - len(out))
    for e in range(deg, len(conv)):
        c = conv[e]
        if c:
            for j, t in enumerate(table[e % n]):
                if t:
                    out[j] += c * t
    return tuple(out)


# ---------------------------------------------------------------------------
# groups and group rings


@dataclass(frozen=True)
class FreeGroup:
    """Free group of the given rank; elements are reduced Word letter tuples."""

    rank: int

    @property
    def identity(self):
        return ()

    def mul(self, a, b):
        from .words import reduce_letters

        return reduce_letters(a + b)

    def inv(self, a):
        return tuple(-x for x in reversed(a))

    def __str__(self):
        return f"F_{self.rank}"


@dataclass(frozen=True)
class PermGroup:
    """Finite group given by an explicit list of permutations (closure is computed).

    Permutations are tuples ``p`` with ``p[i]`` the image of ``i``; the product
    ``mul(a, b)`` is ``a`` after ``b``.
    """

    generators: tuple[tuple[int, ...], ...]

    @property
    def degree(self) -> int:
        return len(self.generators[0])

    @property
    def identity(self):
        return tuple(range(self.degree))

    def mul(self, a, b):
        return tuple(a[i] for i in b)

    def inv(self, a):
        out = [0] * len(a)
        for i, x in enumerate(a):
            out[x] = i
        return tuple(out)

    @property
    def elements(self) -> tuple[tuple[int, ...], ...]:
        return _perm_closure(self.generators)

    def __str__(self):
        return f"PermGroup(order={len(self.elements)})"


@lru_cache(maxsize=None)
def _perm_closure(gens):
    ident = tuple(range(len(gens[0])))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = tuple(g[i] for i in x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return tuple(sorted(seen))


class GroupRingElt:
    """Finite integer combination of group elements."""

    __slots__ = ("group", "_terms", "_hash")

    def __init__(self, group, terms: dict):
        self.group = group
        self._terms = {g: c for g, c in terms.items() if c}
        self._hash = None

    @property
    def ring(self) -> GroupRing:
        return GroupRing(self.group)

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def _coerce(self, other):
        if isinstance(other, GroupRingElt):
            if other.group != self.group:
                raise RingMismatch("group ring elements over different groups")
            return other
        if isinstance(other, int):
            return GroupRingElt(self.group, {self.group.identity: other})
        raise RingMismatch(f"cannot combine group ring element with {type(other).__name__}")

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self._terms)
        for g, c in other._terms.items():
            out[g] = out.get(g, 0) + c
        return GroupRingElt(self.group, out)

    def __radd__(self, other):
        return self._coerce(other) + self

    def __neg__(self):
        return GroupRingElt(self.group, {g: -c for g, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        out: dict = {}
        mul = self.group.mul
        for g, c in self._terms.items():
            for h, d in other._terms.items():
                gh = mul(g, h)
                out[gh] = out.get(gh, 0) + c * d
        return GroupRingElt(self.group, out)

    def __rmul__(self, other):
        return self._coerce(other) * self

    def __eq__(self, other):
        if isinstance(other, int):
            other = self._coerce(other)
        if not isinstance(other, GroupRingElt):
            return NotImplemented
        return self.group == other.group and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("G", tuple(sorted(self._terms.items()))))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def conj(self) -> GroupRingElt:
        inv = self.group.inv
        return GroupRingElt(self.group, {inv(g): c for g, c in self._terms.items()})

    def augmentation(self) -> int:
        return sum(self._terms.values())

    def push(self, hom, ring):
        """Linear extension of ``hom`` (group element -> element of ``ring``).

        When ``ring`` is a GroupRing, ``hom`` may return bare group elements.
        """
        total = ring.zero()
        wrap = isinstance(ring, GroupRing)
        for g, c in self._terms.items():
            img = hom(g)
            if wrap and not isinstance(img, GroupRingElt):
                img = ring.element(img)
            total = total + img * c
        return total

    def sort_key(self):
        return tuple(sorted(self._terms.items()))

    def __repr__(self):
        return f"GroupRingElt({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for g, c in sorted(self._terms.items()):
            name = _word_str(g) if isinstance(self.group, FreeGroup) else str(g)
            parts.append(f"{c:+d}*{name}")
        return " ".join(parts)


def _word_str(w) -> str:
    if not w:
        return "1"
    return "".join(f"x{abs(i)}" + ("^-1" if i < 0 else "") for i in w)


# ---------------------------------------------------------------------------
# helpers


def ring_of(x):
    if isinstance(x, LaurentPoly):
        return Laurent()
    if isinstance(x, CycElt):
        return Cyclotomic(x.n)
    if isinstance(x, GroupRingElt):
        return GroupRing(x.group)
    raise TypeError(f"not a ring element: {x!r}")


def to_laurent_map(ring):
    """Return a function sending Laurent polynomials into ``ring``."""
    if isinstance(ring, Laurent):
        return lambda p: p
    if isinstance(ring, Cyclotomic):
        return lambda p: p.reduce(ring.n)
    raise RingMismatch(f"no map from Z[q,q^-1] to {ring}")


def embed_complex(a, embedding) -> complex:
    """Evaluate a scalar at q = exp(2 pi i * embedding).

    For a cyclotomic integer of order n the embedding must be a/n with
    gcd(a, n) = 1, i.e. q must be sent to a primitive n-th root of unity.
    """
    x = Fraction(str(embedding)) if isinstance(embedding, float) else Fraction(embedding)
    if isinstance(a, int):
        return complex(a)
    if isinstance(a, CycElt):
        k = x * a.n
        if k.denominator != 1 or math.gcd(k.numerator % a.n, a.n) != 1:
            raise ValueError(
                f"embedding {x} does not send zeta_{a.n} to a primitive {a.n}-th root of unity"
            )
        z = cmath.exp(2j * math.pi * (k.numerator % a.n) / a.n)
        return a.evaluate(z)
    if isinstance(a, LaurentPoly):
        return a.evaluate(cmath.exp(2j * math.pi * float(x)))
    raise TypeError(f"cannot embed {type(a).__name__}")


# ---------------------------------------------------------------------------
# JSON


def ring_to_json(ring) -> dict:
    if isinstance(ring, Laurent):
        return {"kind": "laurent", "involution": ring.involution}
    if isinstance(ring, Cyclotomic):
        return {"kind": "cyclotomic", "order": ring.n, "involution": ring.involution}
    if isinstance(ring, GroupRing) and isinstance(ring.group, FreeGroup):
        return {"kind": "group-ring", "group": {"free": ring.group.rank}, "involution": ring.involution}
    raise ValueError(f"ring {ring} has no JSON form")


def ring_from_json(obj: dict):
    kind = obj["kind"]
    if kind == "laurent":
        return Laurent()
    if kind == "cyclotomic":
        return Cyclotomic(int(obj["order"]))
    if kind == "group-ring" and "free" in obj["group"]:
        return GroupRing(FreeGroup(int(obj["group"]["free"])))
    raise ValueError(f"unknown ring descriptor {obj!r}")


def coeffs_to_json(a) -> list:
    if isinstance(a, LaurentPoly):
        return [[e, str(c)] for e, c in a.items()]
    if isinstance(a, CycElt):
        return [[e, str(c)] for e, c in enumerate(a.c) if c]
    if isinstance(a, GroupRingElt):
        return [[list(g), str(c)] for g, c in a.items()]
    raise TypeError(type(a).__name__)


def coeffs_from_json(ring, coeffs: list):
    if isinstance(ring, Laurent):
        return LaurentPoly({int(e): int(c) for e, c in coeffs})
    if isinstance(ring, Cyclotomic):
        acc = [0] * ring.degree
        for e, c in coeffs:
            acc[int(e)] += int(c)
        return CycElt(ring.n, tuple(acc))
    if isinstance(ring, GroupRing):
        return GroupRingElt(ring.group, {tuple(g): int(c) for g, c in coeffs})
    raise TypeError(str(ring))


def elt_to_json(a) -> dict:
    return {"ring": ring_to_json(ring_of(a)), "coeffs": coeffs_to_json(a)}


def elt_from_json(obj: dict):
    return coeffs_from_json(ring_from_json(obj["ring"]), obj["coeffs"])
