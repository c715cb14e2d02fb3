"""Relation checking, finite matrix group enumeration, invariant Hermitian
forms and their signatures."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction

from .linalg import nullspace, rank
from .matrices import (
    ScaledMatrix,
    identity,
    is_scalar,
    mat_eq,
    mat_mul,
    scalar_value,
)
from .rings import Cyclotomic, RingMismatch

__all__ = [
    "CapExceeded",
    "DegenerateForm",
    "check_relations",
    "element_order",
    "EnumResult",
    "enumerate_group",
    "HermForm",
    "invariant_hermitian_forms",
    "signature",
    "DEFAULT_CAP",
]

DEFAULT_CAP = 10**6


class CapExceeded(RuntimeError):
    pass


class DegenerateForm(ValueError):
    pass


def default_cap() -> int:
    env = os.environ.get("TWISTREP_CAP")
    return int(env) if env else DEFAULT_CAP


# ---------------------------------------------------------------------------
# relations


def _scalar_str(m: ScaledMatrix):
    sv = scalar_value(m)
    if sv is None:
        return None
    lam, base, exp = sv
    s = str(lam)
    if base != 1 and exp:
        s = f"{base}^({exp}/2) * ({s})"
    return s


def check_relations(rep, pres, mode: str = "exact") -> dict:
    """Evaluate every relator of ``pres`` through ``rep``.

    ``mode`` is "exact" (image must be I), "projective" (image must be
    scalar) or "auto" (use the presentation's per-relator hint).
    """
    if mode not in ("exact", "projective", "auto"):
        raise ValueError(f"unknown mode {mode!r}")
    missing = [g for g in pres.generators if g not in rep.images]
    if missing:
        raise KeyError(f"representation has no image for {', '.join(missing)}")
    index = {g: i + 1 for i, g in enumerate(rep.generators)}
    relabel = {i + 1: index[g] for i, g in enumerate(pres.generators)}
    one = identity(rep.dim, rep.ring)
    results = []
    for label, rel, hint in zip(pres.labels, pres.relators, pres.check_modes):
        letters = [relabel[abs(x)] * (1 if x > 0 else -1) for x in rel]
        img = rep.evaluate(letters)
        m = hint if mode == "auto" else mode
        if m == "exact":
            ok = mat_eq(img, one)
        else:
            ok = is_scalar(img) is not None
        results.append(
            {
                "relator": label,
                "word": list(rel),
                "mode": m,
                "verdict": "pass" if ok else "fail",
                "scalar": _scalar_str(img),
            }
        )
    return {
        "presentation": pres.name,
        "passed": all(r["verdict"] == "pass" for r in results),
        "relators": results,
    }


def element_order(m: ScaledMatrix, mode: str = "exact", cap: int = 10**4) -> int:
    """Least k >= 1 with m^k = I (exact) or m^k scalar (projective)."""
    one = identity(m.dim, m.ring)
    p = m
    for k in range(1, cap + 1):
        if mode == "exact":
            if mat_eq(p, one):
                return k
        elif is_scalar(p) is not None:
            return k
        p = mat_mul(p, m)
    raise CapExceeded(f"order exceeds {cap}")


# ---------------------------------------------------------------------------
# enumeration


@dataclass
class EnumResult:
    linear_order: int
    scalar_order: int
    projective_order: int
    generator_orders: list = field(default_factory=list)
    generator_projective_orders: list = field(default_factory=list)
    elements: list | None = None

    def to_json(self) -> dict:
        return {
            "linear_order": self.linear_order,
            "scalar_order": self.scalar_order,
            "projective_order": self.projective_order,
            "generator_orders": self.generator_orders,
            "generator_projective_orders": self.generator_projective_orders,
        }


def _entry_key(x):
    return x.sort_key()


def projective_key(m: ScaledMatrix):
    """Canonical key of the line through ``m`` (entries over the first nonzero one)."""
    ents = [x for row in m.entries for x in row]
    if isinstance(m.ring, Cyclotomic):
        piv = next(x for x in ents if not x.is_zero())
        out = []
        for x in ents:
            num, den = x.field_quotient(piv)
            out.append((num.c, den))
        return tuple(out)
    # generic rings: the exact key of the matrix itself
    return tuple(_entry_key(x) for x in ents)


class _Table:
    """Set of matrices bucketed by projective key; membership via mat_eq."""

    def __init__(self):
        self.classes: dict = {}
        self.size = 0

    def add(self, m: ScaledMatrix, key=None) -> bool:
        key = projective_key(m) if key is None else key
        bucket = self.classes.setdefault(key, [])
        for x in bucket:
            if mat_eq(x, m):
                return False
        bucket.append(m)
        self.size += 1
        return True


def _products(args):
    chunk, gens = args
    out = []
    for x in chunk:
        for g in gens:
            y = mat_mul(x, g).normalized()
            out.append((y, projective_key(y)))
    return out


def enumerate_group(
    gens, mode: str = "projective", cap: int | None = None, jobs: int = 1, keep: bool = False
) -> EnumResult:
    """Breadth-first closure of the matrix group generated by ``gens``.

    The linear group is enumerated; scalars are then factored out, so the
    projective order is linear_order / scalar_order.  In exact mode the
    projective fields are still filled in.  Raises CapExceeded when the
    table grows beyond ``cap`` elements.
    """
    cap = default_cap() if cap is None else cap
    gens = [g.normalized() for g in gens]
    if not gens:
        raise ValueError("need at least one generator")
    dim, ring = gens[0].dim, gens[0].ring
    one = identity(dim, ring)
    table = _Table()
    table.add(one)
    frontier = [one]
    pool = None
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        pool = ProcessPoolExecutor(max_workers=jobs)
    try:
        while frontier:
            if pool is not None and len(frontier) >= 4 * jobs:
                step = (len(frontier) + jobs - 1) // jobs
                chunks = [(frontier[i:i + step], gens) for i in range(0, len(frontier), step)]
                produced = [p for part in pool.map(_products, chunks) for p in part]
            else:
                produced = _products((frontier, gens))
            frontier = []
            for y, key in produced:
                if table.add(y, key):
                    frontier.append(y)
                    if table.size > cap:
                        raise CapExceeded(f"group has more than {cap} elements")
    finally:
        if pool is not None:
            pool.shutdown()
    scalar_order = len(table.classes[projective_key(one)])
    result = EnumResult(
        linear_order=table.size,
        scalar_order=scalar_order,
        projective_order=len(table.classes),
        generator_orders=[element_order(g, "exact", cap=table.size) for g in gens],
        generator_projective_orders=[element_order(g, "projective", cap=table.size) for g in gens],
    )
    if keep:
        result.elements = [m for bucket in table.classes.values() for m in bucket]
    if mode == "exact":
        return result
    if mode != "projective":
        raise ValueError(f"unknown mode {mode!r}")
    return result


# ---------------------------------------------------------------------------
# Hermitian forms


@dataclass(frozen=True)
class HermForm:
    matrix: ScaledMatrix

    def __post_init__(self):
        if not mat_eq(self.matrix.dagger(), self.matrix):
            raise ValueError("form is not Hermitian")

    @property
    def dim(self) -> int:
        return self.matrix.dim


def _flatten(m: ScaledMatrix):
    return [x for row in m.entries for x in row]


def _invariance_rows(g: ScaledMatrix):
    """Linear equations in the d^2 unknowns h_ab expressing g^dagger H g = H."""
    g = g.normalized()
    d = g.dim
    k, e = g.scale_base, g.scale_exp
    # g^dagger H g carries the real factor k^e
    left = k ** e if e > 0 else 1
    right = k ** (-e) if e < 0 else 1
    ent = g.entries
    conj = [[x.conj() for x in row] for row in ent]
    rows = []
    for i in range(d):
        for j in range(d):
            row = []
            for a in range(d):
                for b in range(d):
                    c = conj[a][i] * ent[b][j] * left
                    if a == i and b == j:
                        c = c - right
                    row.append(c)
            rows.append(row)
    return rows


def invariant_hermitian_forms(rep) -> list[HermForm]:
    """Basis (over the real subfield) of Hermitian H with g^dagger H g = H for all generators."""
    ring = rep.ring
    if not isinstance(ring, Cyclotomic):
        raise RingMismatch("invariant forms need a cyclotomic ring")
    d = rep.dim
    rows = []
    for name in rep.generators:
        rows.extend(_invariance_rows(rep.images[name]))
    basis = nullspace(rows, d * d, ring.zero())
    mats = [ScaledMatrix([vec[i * d:(i + 1) * d] for i in range(d)], ring) for vec in basis]
    z = ring.gen()
    candidates = []
    for n in mats:
        for c in (ring.one(), z):
            h = n * c
            h = h + h.dagger()
            if not h.is_zero():
                candidates.append(h)
    chosen: list[ScaledMatrix] = []
    for h in candidates:
        if len(chosen) == len(mats):
            break
        trial = [_flatten(x) for x in chosen + [h]]
        if rank(trial) == len(trial):
            chosen.append(_primitive(h))
    forms = []
    for h in chosen:
        for name in rep.generators:
            g = rep.images[name]
            if not mat_eq(mat_mul(mat_mul(g.dagger(), h), g), h):
                raise AssertionError("solved form failed exact re-verification")
        forms.append(HermForm(h))
    return forms


def _primitive(h: ScaledMatrix) -> ScaledMatrix:
    from functools import reduce
    from math import gcd

    g = reduce(gcd, (x.content() for x in _flatten(h)), 0)
    if g > 1:
        h = h.map_entries(lambda x: x.divexact_int(g), h.ring)
    return h


def signature(form, embedding, tol: float = 1e-9) -> dict:
    """Inertia of the Hermitian form at q -> exp(2 pi i * embedding).

    The overall sign is fixed so the first nonzero diagonal entry is
    positive; both orientations are reported.
    """
    import numpy as np

    h = form.matrix if isinstance(form, HermForm) else form
    arr = h.embed(embedding)
    arr = (arr + arr.conj().T) / 2
    diag = np.real(np.diag(arr))
    lead = next((x for x in diag if abs(x) > tol * max(1.0, np.abs(arr).max())), None)
    if lead is not None and lead < 0:
        arr = -arr
    eig = np.linalg.eigvalsh(arr)
    top = np.abs(eig).max()
    if top == 0 or np.abs(eig).min() / top <= tol:
        raise DegenerateForm(f"form is degenerate at embedding {embedding}")
    p = int((eig > 0).sum())
    m = int((eig < 0).sum())
    return {
        "embedding": str(Fraction(embedding)),
        "signature": [p, m],
        "up_to_sign": sorted([[p, m], [m, p]]),
        "eigenvalues": [float(x) for x in eig],
    }
