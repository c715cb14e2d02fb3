"""Twisted cohomological induction of braid group representations.

From an equivariant triple (rho, beta, tau), with rho a representation of the
free group F_n, beta a representation of B and tau: B -> Aut(F_n), the induced
representation acts on cocycles psi in Z^1_rho(F_n, V) by

    (beta+(b) psi)(f) = beta(b) psi(tau(b)^-1 f).

Cocycles are identified with V^n through their values on x_1..x_n, so
beta+(b) is an (n dim V) square matrix.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _conventions
from .fox import _Linearization, fox_derivative
from .matrices import ScaledMatrix, identity, mat_eq, mat_mul
from .reps import MatRep
from .words import BraidWord, FreeAuto, artin_action, braid_eq, reduce_letters, substitute, word_inv

__all__ = [
    "EquivarianceError",
    "EquivariantData",
    "check_equivariance",
    "cocycle_eval",
    "induce",
    "induced_matrix",
    "coboundary_basis",
    "coboundary",
    "apply_matrix",
    "pure_local_system",
    "inner_local_system",
    "INDUCTION_CONVENTIONS",
    "induce_by_formula",
    "select_induction_convention",
    "stack",
    "unstack",
    "pure_braid_generators",
    "inner_braid_generators",
]


class EquivarianceError(ValueError):
    pass


def _integral(m: ScaledMatrix) -> ScaledMatrix:
    m = m.normalized()
    if m.scale_base != 1 and m.scale_exp != 0:
        raise ValueError("induction needs matrices without a sqrt(k) scale factor")
    return m


def check_equivariance(rho: MatRep, beta: MatRep, tau: dict):
    """(True, None) if beta(b) rho(f) = rho(tau(b) f) beta(b) on all generator pairs,
    else (False, (b, f)) for the first violation."""
    if rho.dim != beta.dim:
        raise ValueError(f"rho has dimension {rho.dim} but beta has {beta.dim}")
    if rho.ring != beta.ring:
        raise ValueError("rho and beta live over different rings")
    n = len(rho.generators)
    for b in beta.generators:
        phi = tau[b]
        if phi.rank != n:
            raise ValueError(f"tau({b}) acts on F_{phi.rank}, expected F_{n}")
        bm = beta.images[b]
        for i in range(1, n + 1):
            lhs = mat_mul(bm, rho.image(i))
            rhs = mat_mul(rho.evaluate(phi((i,))), bm)
            if not mat_eq(lhs, rhs):
                return False, (b, rho.generators[i - 1])
    return True, None


@dataclass(frozen=True)
class EquivariantData:
    rho: MatRep
    beta: MatRep
    tau: dict

    def __post_init__(self):
        ok, witness = check_equivariance(self.rho, self.beta, self.tau)
        if not ok:
            raise EquivarianceError(f"equivariance fails at (b, f) = {witness}")

    @property
    def rank(self) -> int:
        return len(self.rho.generators)

    @property
    def dim(self) -> int:
        return self.rho.dim

    def tau_of(self, letters) -> FreeAuto:
        """tau of a word in beta's generators (letter i = i-th generator)."""
        out = FreeAuto.identity(self.rank)
        for x in letters:
            phi = self.tau[self.beta.generators[abs(x) - 1]]
            out = out * (phi if x > 0 else phi.inverse())
        return out


# ---------------------------------------------------------------------------
# vectors


def apply_matrix(m: ScaledMatrix, v: list) -> list:
    m = _integral(m)
    zero = m.ring.zero()
    out = []
    for row in m.entries:
        acc = zero
        for a, x in zip(row, v):
            acc = acc + a * x
        out.append(acc)
    return out


def _add(u, v):
    return [a + b for a, b in zip(u, v)]


def cocycle_eval(rho: MatRep, psi: list, w) -> list:
    """psi(w) for the cocycle with values psi[i] on x_{i+1}.

    Uses psi(uv) = psi(u) + rho(u) psi(v) and psi(x^-1) = -rho(x)^-1 psi(x).
    """
    d = rho.dim
    value = [rho.ring.zero()] * d
    prefix = identity(d, rho.ring)
    for x in reduce_letters(w):
        i = abs(x)
        if x > 0:
            step = psi[i - 1]
        else:
            step = [-a for a in apply_matrix(rho.image(-i), psi[i - 1])]
        value = _add(value, apply_matrix(prefix, step))
        prefix = mat_mul(prefix, rho.image(x))
    return value


# ---------------------------------------------------------------------------
# induction

# (bar, rows): rows "image" puts the generator index i of tau^-1(b) x_i on the
# block rows; bar applies g -> g^-1 before linearizing.  The frozen choice is
# the one matching the defining formula (see select_induction_convention).
INDUCTION_CONVENTIONS = ((False, "image"), (True, "image"), (False, "variable"), (True, "variable"))


def induced_matrix(data: EquivariantData, beta_b: ScaledMatrix, phi_inv: FreeAuto, convention=None) -> ScaledMatrix:
    """Block (i, j) = beta(b) . rho(d(tau(b)^-1 x_i)/dx_j) in the frozen convention."""
    bar, rows = convention if convention is not None else (
        _conventions.INDUCTION_BAR,
        _conventions.INDUCTION_ROWS,
    )
    n, d = data.rank, data.dim
    lin = _Linearization(data.rho)
    beta_b = _integral(beta_b)
    out = [[None] * (n * d) for _ in range(n * d)]
    for i in range(n):
        img = phi_inv.images[i]
        for j in range(n):
            der = fox_derivative(img, j + 1, n)
            if bar:
                der = der.conj()
            blk = mat_mul(beta_b, lin(der))
            bi, bj = (i, j) if rows == "image" else (j, i)
            for r in range(d):
                for c in range(d):
                    out[bi * d + r][bj * d + c] = blk.entries[r][c]
    return ScaledMatrix(out, data.rho.ring)


def induce(data: EquivariantData, convention=None) -> MatRep:
    """The induced representation beta+ of beta's group on V^n (dimension n dim V)."""
    images, inverses = {}, {}
    for b in data.beta.generators:
        phi = data.tau[b]
        images[b] = induced_matrix(data, data.beta.images[b], phi.inverse(), convention)
        inverses[b] = induced_matrix(data, data.beta.inverses[b], phi, convention)
    return MatRep(data.beta.group, data.rho.ring, data.beta.generators, images, inverses)


def induce_by_formula(data: EquivariantData, letters, psi: list) -> list:
    """Values of beta+(b) psi on x_1..x_n straight from the defining formula."""
    beta_b = data.beta.evaluate(letters)
    phi_inv = data.tau_of(letters).inverse()
    return [apply_matrix(beta_b, cocycle_eval(data.rho, psi, phi_inv.images[i])) for i in range(data.rank)]


def stack(psi: list) -> list:
    return [a for v in psi for a in v]


def unstack(vec: list, d: int) -> list:
    return [vec[i:i + d] for i in range(0, len(vec), d)]


def select_induction_convention(data: EquivariantData, samples) -> list:
    """Conventions whose matrices agree with the defining formula on all samples.

    ``samples`` is a list of (braid letters, psi).
    """
    good = []
    for conv in INDUCTION_CONVENTIONS:
        try:
            rep = induce(data, conv)
        except ValueError:
            # stored inverses disagree: not a representation in this layout
            continue
        if all(
            unstack(apply_matrix(rep.evaluate(w), stack(psi)), data.dim) == induce_by_formula(data, w, psi)
            for w, psi in samples
        ):
            good.append(conv)
    return good


def coboundary(rho: MatRep, v: list) -> list:
    """Values of the coboundary g -> rho(g) v - v on the generators."""
    return [[a - b for a, b in zip(apply_matrix(rho.image(i), v), v)] for i in range(1, len(rho.generators) + 1)]


def coboundary_basis(rho: MatRep) -> list:
    """Coboundaries of the standard basis vectors (a spanning set of B^1), zero ones dropped."""
    d = rho.dim
    zero, one = rho.ring.zero(), rho.ring.one()
    out = []
    for k in range(d):
        v = [one if i == k else zero for i in range(d)]
        c = coboundary(rho, v)
        if any(not a.is_zero() for w in c for a in w):
            out.append(c)
    return out


# ---------------------------------------------------------------------------
# local systems


def _conjugation_tau(n: int, strands: int, gens: list, acting: dict) -> dict:
    """Find tau(b) in {artin(sigma_j), artin(sigma_j^-1)} realizing b g_k b^-1 = tau(b)(x_k)(g).

    ``gens`` are the braid words g_1..g_n in B_strands, ``acting`` maps each
    B_n generator name to (j, braid letter in B_strands).  The choice is
    verified with braid_eq for every k.
    """
    tau = {}
    for name, (j, letter) in acting.items():
        s = BraidWord(strands, (letter,))
        found = None
        for sign in (-1, 1):
            cand = artin_action(BraidWord(n, (sign * j,)))
            if all(
                braid_eq(
                    s * BraidWord(strands, gens[k]) * s.inverse(),
                    BraidWord(strands, substitute(cand((k + 1,)), gens)),
                )
                for k in range(n)
            ):
                found = cand
                break
        if found is None:
            raise EquivarianceError(f"conjugation by {name} is not an Artin automorphism of the g_k")
        tau[name] = found
    return tau


def pure_braid_generators(n: int) -> list:
    """g_k = sigma_k ... sigma_2 sigma_1^2 sigma_2^-1 ... sigma_k^-1 in B_{n+1}."""
    out = []
    for k in range(1, n + 1):
        head = tuple(range(k, 1, -1))
        out.append(reduce_letters(head + (1, 1) + word_inv(head)))
    return out


def inner_braid_generators(n: int) -> list:
    """g_1 = (sigma_2 ... sigma_n)^n, g_{i+1} = sigma_i g_i sigma_i^-1, in B_{n+1}."""
    g = reduce_letters(tuple(range(2, n + 1)) * n)
    out = [g]
    for i in range(1, n):
        g = reduce_letters((i,) + g + (-i,))
        out.append(g)
    return out


def pure_local_system(beta_big: MatRep) -> EquivariantData:
    """(rho, beta, tau) from a representation of B_{n+1}: rho(x_k) = beta_big(g_k),
    and B_n = <sigma_2, ..., sigma_n> acting by conjugation."""
    strands = len(beta_big.generators) + 1
    n = strands - 1
    gens = pure_braid_generators(n)
    rho_images = [beta_big.evaluate(g) for g in gens]
    rho_inverses = [beta_big.evaluate(word_inv(g)) for g in gens]
    names = tuple(f"x{k}" for k in range(1, n + 1))
    rho = MatRep(f"free({n})", beta_big.ring, names, dict(zip(names, rho_images)), dict(zip(names, rho_inverses)))
    bnames = tuple(f"b{j}" for j in range(1, n))
    beta = MatRep(
        f"braid({n})",
        beta_big.ring,
        bnames,
        {f"b{j}": beta_big.images[f"b{j + 1}"] for j in range(1, n)},
        {f"b{j}": beta_big.inverses[f"b{j + 1}"] for j in range(1, n)},
        verify=False,
    )
    tau = _conjugation_tau(n, strands, gens, {f"b{j}": (j, j + 1) for j in range(1, n)})
    return EquivariantData(rho, beta, tau)


def inner_local_system(beta: MatRep, t=None) -> EquivariantData:
    """(rho, beta, tau) for the inner automorphism system: rho factors through
    F_n -> Z and sends every x_k to t * I (default t = 1); tau is conjugation
    by sigma_j on g_1..g_n."""
    n = len(beta.generators) + 1
    ring = beta.ring
    t = ring.one() if t is None else ring(t)
    d = beta.dim
    names = tuple(f"x{k}" for k in range(1, n + 1))
    img = identity(d, ring) * t
    inv = identity(d, ring) * t.inverse()
    rho = MatRep(f"free({n})", ring, names, {x: img for x in names}, {x: inv for x in names})
    gens = inner_braid_generators(n)
    tau = _conjugation_tau(n, n + 1, gens, {f"b{j}": (j, j) for j in range(1, n)})
    return EquivariantData(rho, beta, tau)
