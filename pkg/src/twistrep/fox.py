"""Fox free differential calculus and Magnus representations of Aut(F_n)."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import _conventions
from .matrices import ScaledMatrix, identity, mat_eq, mat_mul
from .reps import MatRep
from .rings import FreeGroup, GroupRing, GroupRingElt, Laurent, PermGroup
from .words import FreeAuto, Word, check_rank

__all__ = [
    "fox_derivative",
    "FoxJacobian",
    "fox_jacobian",
    "free_rep",
    "regular_rep",
    "NotStabilizing",
    "magnus_rep",
    "CONVENTIONS",
    "select_magnus_convention",
    "group_ring_identity_holds",
    "kernel_automorphisms",
    "default_selection_samples",
]


class NotStabilizing(ValueError):
    pass


def fox_derivative(w: Word, i: int, rank: int) -> GroupRingElt:
    """d w / d x_i in Z[F_rank]."""
    check_rank(w, rank)
    group = FreeGroup(rank)
    terms: dict = {}
    prefix: list[int] = []
    for x in w:
        if x == i:
            key = tuple(prefix)
            terms[key] = terms.get(key, 0) + 1
        elif x == -i:
            key = group.mul(tuple(prefix), (-i,))
            terms[key] = terms.get(key, 0) - 1
        if prefix and prefix[-1] == -x:
            prefix.pop()
        else:
            prefix.append(x)
    return GroupRingElt(group, terms)


@dataclass(frozen=True)
class FoxJacobian:
    """entries[i][j] = d phi(x_j) / d x_i (rows: differentiated variable), barred if ``bar``."""

    rank: int
    entries: tuple
    bar: bool

    def transpose(self) -> tuple:
        return tuple(tuple(self.entries[j][i] for j in range(self.rank)) for i in range(self.rank))

    def __str__(self):
        return "\n".join("[" + ", ".join(str(x) for x in row) + "]" for row in self.entries)


def fox_jacobian(phi: FreeAuto, bar: bool = False) -> FoxJacobian:
    n = phi.rank
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(n):
            d = fox_derivative(phi.images[j], i, n)
            row.append(d.conj() if bar else d)
        rows.append(tuple(row))
    return FoxJacobian(n, tuple(rows), bar)


def free_rep(images: list[ScaledMatrix], inverses: list[ScaledMatrix] | None = None) -> MatRep:
    """Representation of F_n given by the images of x_1..x_n."""
    from .matrices import mat_inverse

    n = len(images)
    ring = images[0].ring
    inverses = inverses if inverses is not None else [mat_inverse(m) for m in images]
    gens = tuple(f"x{i}" for i in range(1, n + 1))
    return MatRep(
        f"free({n})", ring, gens, dict(zip(gens, images)), dict(zip(gens, inverses))
    )


def regular_rep(perms, ring=None) -> MatRep:
    """x_i -> left-regular permutation matrix of perms[i] acting on the finite group they generate."""
    ring = ring if ring is not None else Laurent()
    group = PermGroup(tuple(tuple(p) for p in perms))
    elems = group.elements
    index = {g: k for k, g in enumerate(elems)}
    size = len(elems)

    def mat(p):
        rows = [[0] * size for _ in range(size)]
        for g in elems:
            rows[index[group.mul(p, g)]][index[g]] = 1
        return ScaledMatrix(rows, ring)

    images = [mat(tuple(p)) for p in perms]
    inverses = [mat(group.inv(tuple(p))) for p in perms]
    return free_rep(images, inverses)


# the four candidate orientations: (bar, rows indexed by "variable" or "image")
CONVENTIONS = tuple(itertools.product((True, False), ("variable", "image")))


class _Linearization:
    """rho extended linearly to Z[F_n], with a cache of group-element images."""

    def __init__(self, rho: MatRep):
        self.rho = rho
        self.cache: dict = {(): identity(rho.dim, rho.ring)}

    def element(self, g: Word) -> ScaledMatrix:
        m = self.cache.get(g)
        if m is None:
            m = mat_mul(self.element(g[:-1]), self.rho.image(g[-1]))
            self.cache[g] = m
        return m

    def __call__(self, a: GroupRingElt) -> ScaledMatrix:
        d, ring = self.rho.dim, self.rho.ring
        total = ScaledMatrix._raw(tuple(tuple(ring.zero() for _ in range(d)) for _ in range(d)), ring)
        for g, c in a.terms.items():
            total = total + self.element(g) * c
        return total


def _check_stabilizes(phi: FreeAuto, rho: MatRep) -> None:
    for i, w in enumerate(phi.images):
        if not mat_eq(rho.evaluate(w), rho.image(i + 1)):
            raise NotStabilizing(f"rho(phi(x{i + 1})) != rho(x{i + 1})")


def magnus_rep(phi: FreeAuto, rho: MatRep, convention=None, check: bool = True) -> ScaledMatrix:
    """Block matrix of Fox derivatives of phi pushed through rho.

    ``rho`` is a representation of F_n (see free_rep / regular_rep).  The
    default orientation is the frozen one in ``_conventions``.
    """
    if rho.dim and len(rho.generators) != phi.rank:
        raise ValueError("rho must be a representation of the same free group")
    if check:
        _check_stabilizes(phi, rho)
    bar, rows = convention if convention is not None else (
        _conventions.MAGNUS_BAR,
        _conventions.MAGNUS_ROWS,
    )
    jac = fox_jacobian(phi, bar)
    ents = jac.entries if rows == "variable" else jac.transpose()
    lin = _Linearization(rho)
    n, d = phi.rank, rho.dim
    out = [[None] * (n * d) for _ in range(n * d)]
    for bi in range(n):
        for bj in range(n):
            blk = lin(ents[bi][bj])
            for r in range(d):
                for c in range(d):
                    out[bi * d + r][bj * d + c] = blk.entries[r][c]
    return ScaledMatrix(out, rho.ring)


def select_magnus_convention(samples) -> list:
    """Conventions under which magnus_rep(phi * psi) = magnus_rep(phi) magnus_rep(psi).

    ``samples`` is an iterable of (phi, psi, rho) with phi, psi stabilizing rho.
    Conventions are returned in the fixed order of CONVENTIONS.
    """
    samples = list(samples)
    good = []
    for conv in CONVENTIONS:
        ok = True
        for phi, psi, rho in samples:
            lhs = magnus_rep(phi * psi, rho, conv, check=False)
            rhs = mat_mul(magnus_rep(phi, rho, conv, check=False), magnus_rep(psi, rho, conv, check=False))
            if not mat_eq(lhs, rhs):
                ok = False
                break
        if ok:
            good.append(conv)
    return good


def group_ring_identity_holds(w: Word, rank: int) -> bool:
    """Fundamental formula w - 1 = sum_i (dw/dx_i)(x_i - 1)."""
    ring = GroupRing(FreeGroup(rank))
    lhs = ring.element(tuple(w)) - 1
    rhs = ring.zero()
    for i in range(1, rank + 1):
        rhs = rhs + fox_derivative(w, i, rank) * (ring.element((i,)) - 1)
    return lhs == rhs



def kernel_automorphisms():
    """Automorphisms of F_2 stabilizing rho: x1 -> (0 1), x2 -> (0 1 2) in S_3.

    Transvections and conjugations by words in ker rho; rho is returned as
    its 6-dimensional regular representation.
    """
    rho = regular_rep([(1, 0, 2), (1, 2, 0)])
    autos = [
        FreeAuto.transvection(2, 1, (2, 2, 2)),
        FreeAuto.transvection(2, 2, (1, 1), side="left"),
        FreeAuto.transvection(2, 1, (2, 2, 2), side="left"),
        FreeAuto.inner(2, (1, 1)),
        FreeAuto.inner(2, (1, 2, 1, 2)),
        FreeAuto.inner(2, (2, 1, 2, 1)),
    ]
    return rho, autos


def default_selection_samples():
    rho, autos = kernel_automorphisms()
    return [(a, b, rho) for a in autos[:4] for b in autos[2:]]
