"""Square matrices over the exact rings, with a tracked k^(e/2) scale factor.

A :class:`ScaledMatrix` denotes ``k^(scale_exp/2) * entries``.  Keeping the
square root of k symbolic keeps every base ring an integral domain.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import reduce

from .rings import (
    CycElt,
    Cyclotomic,
    GroupRing,
    Laurent,
    LaurentPoly,
    RingMismatch,
    coeffs_from_json,
    coeffs_to_json,
    cyc_reduce_conv,
    embed_complex,
    ring_from_json,
    ring_to_json,
)

__all__ = [
    "ScaledMatrix",
    "DimensionMismatch",
    "identity",
    "from_rows",
    "mat_mul",
    "mat_eq",
    "is_scalar",
    "scalar_value",
    "proj_eq",
    "mat_pow",
    "charpoly",
    "mat_inverse",
    "block_matrix",
    "matrix_to_json",
    "matrix_from_json",
]


class DimensionMismatch(ValueError):
    pass


class ScaledMatrix:
    __slots__ = ("entries", "ring", "scale_base", "scale_exp")

    def __init__(self, entries, ring, scale_base: int = 1, scale_exp: int = 0):
        rows = tuple(tuple(ring(x) for x in row) for row in entries)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise DimensionMismatch("matrix must be square and nonempty")
        if scale_base < 1:
            raise ValueError("scale base must be a positive integer")
        if scale_base == 1:
            scale_exp = 0
        self.entries = rows
        self.ring = ring
        self.scale_base = scale_base
        self.scale_exp = scale_exp

    @classmethod
    def _raw(cls, entries, ring, scale_base=1, scale_exp=0):
        obj = object.__new__(cls)
        obj.entries = entries
        obj.ring = ring
        obj.scale_base = scale_base
        obj.scale_exp = scale_exp if scale_base != 1 else 0
        return obj

    @property
    def dim(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def rows(self):
        return [list(r) for r in self.entries]

    # -- arithmetic ---------------------------------------------------------

    def __matmul__(self, other):
        return mat_mul(self, other)

    def __mul__(self, scalar):
        if isinstance(scalar, ScaledMatrix):
            return mat_mul(self, scalar)
        s = self.ring(scalar)
        return ScaledMatrix._raw(
            tuple(tuple(x * s for x in row) for row in self.entries),
            self.ring, self.scale_base, self.scale_exp,
        )

    def __rmul__(self, scalar):
        s = self.ring(scalar)
        return ScaledMatrix._raw(
            tuple(tuple(s * x for x in row) for row in self.entries),
            self.ring, self.scale_base, self.scale_exp,
        )

    def __add__(self, other):
        a, b = _align(self, other)
        return ScaledMatrix._raw(
            tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(a.entries, b.entries)),
            a.ring, a.scale_base, a.scale_exp,
        )

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-other)

    def __pow__(self, k: int):
        return mat_pow(self, k)

    def __eq__(self, other):
        if not isinstance(other, ScaledMatrix):
            return NotImplemented
        return mat_eq(self, other)

    __hash__ = None

    def transpose(self) -> ScaledMatrix:
        return ScaledMatrix._raw(
            tuple(zip(*self.entries)), self.ring, self.scale_base, self.scale_exp
        )

    def conj(self) -> ScaledMatrix:
        return ScaledMatrix._raw(
            tuple(tuple(x.conj() for x in row) for row in self.entries),
            self.ring, self.scale_base, self.scale_exp,
        )

    def dagger(self) -> ScaledMatrix:
        """Conjugate transpose (the ring involution applied entrywise)."""
        return self.conj().transpose()

    def map_entries(self, f, ring) -> ScaledMatrix:
        return ScaledMatrix(
            [[f(x) for x in row] for row in self.entries], ring, self.scale_base, self.scale_exp
        )

    def is_zero(self) -> bool:
        return all(x.is_zero() for row in self.entries for x in row)

    def normalized(self) -> ScaledMatrix:
        """Fold k^(e/2) into the entries as far as integrality allows.

        The result has scale_exp in {0, 1}, or a negative exponent when the
        entries are not divisible by k.
        """
        e, k = self.scale_exp, self.scale_base
        if k == 1 or e == 0:
            return self
        entries = self.entries
        if e >= 2:
            f = k ** (e // 2)
            entries = tuple(tuple(x * f for x in row) for row in entries)
            e -= 2 * (e // 2)
        while e <= -1 and _divisible(entries, k):
            entries = tuple(tuple(x.divexact_int(k) for x in row) for row in entries)
            e += 2
        return ScaledMatrix._raw(entries, self.ring, k, e)

    def embed(self, embedding):
        """Complex numpy array at the embedding q -> exp(2 pi i embedding)."""
        import numpy as np

        factor = math.sqrt(self.scale_base) ** self.scale_exp if self.scale_base != 1 else 1.0
        return np.array(
            [[embed_complex(x, embedding) * factor for x in row] for row in self.entries],
            dtype=complex,
        )

    def __repr__(self):
        head = ""
        if self.scale_base != 1 and self.scale_exp:
            head = f"{self.scale_base}^({self.scale_exp}/2) * "
        body = "; ".join(", ".join(str(x) for x in row) for row in self.entries)
        return f"{head}[{body}]"


def _divisible(entries, k: int) -> bool:
    for row in entries:
        for x in row:
            if x.is_zero():
                continue
            if isinstance(x, CycElt):
                if any(c % k for c in x.c):
                    return False
            elif isinstance(x, LaurentPoly):
                if any(c % k for _, c in x.items()):
                    return False
            else:
                return False
    return True


def _check_compat(a: ScaledMatrix, b: ScaledMatrix) -> None:
    if a.dim != b.dim:
        raise DimensionMismatch(f"dimension {a.dim} vs {b.dim}")
    if a.ring != b.ring:
        raise RingMismatch(f"{a.ring} vs {b.ring}")
    if a.scale_base != b.scale_base and a.scale_base != 1 and b.scale_base != 1:
        raise ValueError("incompatible scale bases")


def _align(a: ScaledMatrix, b: ScaledMatrix):
    # bring both to a common even offset for addition
    _check_compat(a, b)
    k = max(a.scale_base, b.scale_base)
    ea, eb = (a.scale_exp if a.scale_base != 1 else 0), (b.scale_exp if b.scale_base != 1 else 0)
    if ea == eb:
        return a, b
    if (ea - eb) % 2:
        raise ValueError("cannot add matrices whose scales differ by an odd power of sqrt(k)")
    if ea > eb:
        f = k ** ((ea - eb) // 2)
        a = ScaledMatrix._raw(tuple(tuple(x * f for x in r) for r in a.entries), a.ring, k, eb)
    else:
        f = k ** ((eb - ea) // 2)
        b = ScaledMatrix._raw(tuple(tuple(x * f for x in r) for r in b.entries), b.ring, k, ea)
    return a, b


def identity(n: int, ring) -> ScaledMatrix:
    one, zero = ring.one(), ring.zero()
    return ScaledMatrix._raw(
        tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n)), ring
    )


def from_rows(rows, ring, scale_base: int = 1, scale_exp: int = 0) -> ScaledMatrix:
    return ScaledMatrix(rows, ring, scale_base, scale_exp)


def mat_mul(a: ScaledMatrix, b: ScaledMatrix) -> ScaledMatrix:
    _check_compat(a, b)
    ring = a.ring
    k = max(a.scale_base, b.scale_base)
    e = a.scale_exp + b.scale_exp
    bt = tuple(zip(*b.entries))
    if isinstance(ring, Cyclotomic):
        entries = _cyc_matmul(ring.n, a.entries, bt)
    else:
        zero = ring.zero()
        rows = []
        for row in a.entries:
            out = []
            for col in bt:
                acc = zero
                for x, y in zip(row, col):
                    if not x.is_zero() and not y.is_zero():
                        acc = acc + x * y
                out.append(acc)
            rows.append(tuple(out))
        entries = tuple(rows)
    m = ScaledMatrix._raw(entries, ring, k, e)
    if k != 1 and e >= 2:
        m = m.normalized()
    return m


def _cyc_matmul(n, rows, cols):
    # accumulate unreduced convolutions, reduce once per entry
    deg = len(rows[0][0].c)
    out_rows = []
    arows = [[x.c if any(x.c) else None for x in row] for row in rows]
    bcols = [[y.c if any(y.c) else None for y in col] for col in cols]
    for row in arows:
        out = []
        for col in bcols:
            conv = [0] * (2 * deg - 1)
            hit = False
            for x, y in zip(row, col):
                if x is None or y is None:
                    continue
                hit = True
                for i, xi in enumerate(x):
                    if xi:
                        for j, yj in enumerate(y):
                            if yj:
                                conv[i + j] += xi * yj
            if hit:
                out.append(CycElt(n, cyc_reduce_conv(n, conv)))
            else:
                out.append(CycElt(n, (0,) * deg))
        out_rows.append(tuple(out))
    return tuple(out_rows)


def mat_pow(m: ScaledMatrix, k: int) -> ScaledMatrix:
    if k < 0:
        return mat_pow(mat_inverse(m), -k)
    result = identity(m.dim, m.ring)
    base = m
    while k:
        if k & 1:
            result = mat_mul(result, base)
        k >>= 1
        if k:
            base = mat_mul(base, base)
    return result


def mat_eq(a: ScaledMatrix, b: ScaledMatrix) -> bool:
    """Exact equality of the denoted matrices, scale factors included."""
    _check_compat(a, b)
    a, b = a.normalized(), b.normalized()
    k = max(a.scale_base, b.scale_base)
    d = a.scale_exp - b.scale_exp
    if d == 0:
        return a.entries == b.entries
    if d % 2 == 0:
        try:
            a2, b2 = _align(a, b)
        except ValueError:
            return False
        return a2.entries == b2.entries
    # odd difference: a = b * k^(-d/2) requires proportionality with a ratio of +-sqrt(k)^|d|
    if a.is_zero() or b.is_zero():
        return a.is_zero() and b.is_zero()
    if not proj_eq(a, b):
        return False
    if d < 0:
        a, b, d = b, a, -d
    # now entries_a * k^(d/2) == entries_b must hold
    i, j = _pivot(a)
    x, y = a.entries[i][j], b.entries[i][j]
    # (x k^((d+1)/2))^2 == y^2 k  pins the ratio up to sign
    f = k ** ((d + 1) // 2)
    if (x * f) * (x * f) != (y * y) * k:
        return False
    za, zb = _principal_value(x), _principal_value(y)
    return abs(za * math.sqrt(k) ** d - zb) < 1e-6 * max(1.0, abs(zb))


def _principal_value(x) -> complex:
    if isinstance(x, CycElt):
        return embed_complex(x, Fraction(1, x.n))
    if isinstance(x, LaurentPoly):
        # a transcendental-looking point keeps distinct polynomials apart
        return x.evaluate(cmath.exp(1j * 0.7390851332))
    raise TypeError(type(x).__name__)


def _pivot(m: ScaledMatrix):
    for i, row in enumerate(m.entries):
        for j, x in enumerate(row):
            if not x.is_zero():
                return i, j
    raise ValueError("zero matrix has no pivot")


def is_scalar(m: ScaledMatrix):
    """The diagonal value if ``m`` is lambda*I (ignoring the scale factor), else None."""
    lam = m.entries[0][0]
    for i, row in enumerate(m.entries):
        for j, x in enumerate(row):
            if i == j:
                if x != lam:
                    return None
            elif not x.is_zero():
                return None
    return lam


def scalar_value(m: ScaledMatrix):
    """(lambda, scale_base, scale_exp) when ``m`` is scalar, else None."""
    n = m.normalized()
    lam = is_scalar(n)
    if lam is None:
        return None
    return lam, n.scale_base, n.scale_exp


def proj_eq(a: ScaledMatrix, b: ScaledMatrix) -> bool:
    """True iff a = lambda * b for some nonzero lambda in the fraction field."""
    _check_compat(a, b)
    za, zb = a.is_zero(), b.is_zero()
    if za or zb:
        return za and zb
    i, j = _pivot(a)
    p, r = a.entries[i][j], b.entries[i][j]
    if r.is_zero():
        return False
    for ra, rb in zip(a.entries, b.entries):
        for x, y in zip(ra, rb):
            if x * r != y * p:
                return False
    return True


def charpoly(m: ScaledMatrix) -> list:
    """Characteristic polynomial det(lambda I - entries), low degree first.

    Faddeev-LeVerrier; the integer divisions are exact over these rings.
    The scale factor is ignored.
    """
    n = m.dim
    ring = m.ring
    plain = ScaledMatrix._raw(m.entries, ring)
    coeffs = [None] * (n + 1)
    coeffs[n] = ring.one()
    mk = identity(n, ring)
    ident = identity(n, ring)
    for k in range(1, n + 1):
        am = mat_mul(plain, mk)
        tr = reduce(lambda s, t: s + t, (am.entries[i][i] for i in range(n)), ring.zero())
        c = (-tr).divexact_int(k)
        coeffs[n - k] = c
        mk = am + ident * c
    return coeffs


def mat_inverse(m: ScaledMatrix) -> ScaledMatrix:
    """Inverse over the ring; requires det(entries) to be a unit."""
    n = m.dim
    ring = m.ring
    if isinstance(ring, GroupRing):
        raise TypeError("inverse over a noncommutative group ring is not supported")
    plain = ScaledMatrix._raw(m.entries, ring)
    coeffs = charpoly(plain)
    c0 = coeffs[0]
    inv_c0 = c0.inverse()
    # A^-1 = -(A^(n-1) + c_{n-1} A^(n-2) + ... + c_1 I) / c_0
    acc = identity(n, ring)
    for k in range(n - 1, 0, -1):
        acc = mat_mul(plain, acc) + identity(n, ring) * coeffs[k]
    inv = acc * (-inv_c0)
    return ScaledMatrix._raw(inv.entries, ring, m.scale_base, -m.scale_exp).normalized()


def block_matrix(blocks, ring) -> ScaledMatrix:
    """Assemble a square block matrix from a grid of equally sized ScaledMatrix blocks."""
    rows = []
    for brow in blocks:
        size = brow[0].dim
        for r in range(size):
            row = []
            for blk in brow:
                if blk.scale_base != 1 and blk.scale_exp:
                    raise ValueError("blocks must be unscaled")
                row.extend(blk.entries[r])
            rows.append(tuple(row))
    return ScaledMatrix._raw(tuple(rows), ring)


# ---------------------------------------------------------------------------
# JSON


def matrix_to_json(m: ScaledMatrix) -> dict:
    return {
        "ring": ring_to_json(m.ring),
        "dim": m.dim,
        "scale_base": m.scale_base,
        "scale_exp": m.scale_exp,
        "entries": [coeffs_to_json(x) for row in m.entries for x in row],
    }


def matrix_from_json(obj: dict) -> ScaledMatrix:
    ring = ring_from_json(obj["ring"])
    n = int(obj["dim"])
    flat = [coeffs_from_json(ring, c) for c in obj["entries"]]
    if len(flat) != n * n:
        raise DimensionMismatch("entry count does not match dim")
    rows = [flat[i * n:(i + 1) * n] for i in range(n)]
    return ScaledMatrix(rows, ring, int(obj.get("scale_base", 1)), int(obj.get("scale_exp", 0)))


def laurent_matrix(rows) -> ScaledMatrix:
    """Convenience constructor from rows of ints / LaurentPoly."""
    return ScaledMatrix(rows, Laurent())
