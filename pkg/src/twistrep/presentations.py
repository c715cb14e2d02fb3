"""Group presentations used for relation checking.

Generators b_1..b_5 correspond to sigma_1..sigma_5 under B_6 -> Gamma_2.
Relators are reduced words over the generator indices; ``check_modes`` holds
a per-relator hint ("exact" or "projective") used by ``mode="auto"``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .words import Word, commutator, reduce_letters, word_inv, word_mul, word_pow

__all__ = [
    "Presentation",
    "braid_relators",
    "h6",
    "delta6",
    "full_twist6",
    "presentation_catalog",
    "CATALOG_NAMES",
    "presentation_to_json",
]


@dataclass(frozen=True)
class Presentation:
    name: str
    generators: tuple[str, ...]
    relators: tuple[Word, ...]
    check_modes: tuple[str, ...]
    labels: tuple[str, ...]

    def __post_init__(self):
        for r in self.relators:
            if not r or reduce_letters(r) != r:
                raise ValueError(f"relator {r} is not a nonempty reduced word")
            for x in r:
                if not 1 <= abs(x) <= len(self.generators):
                    raise ValueError(f"relator letter {x} has no generator")


def braid_relators(n: int) -> list[tuple[str, Word]]:
    """Artin relators of B_n over b_1..b_{n-1}."""
    out = []
    for i in range(1, n):
        for j in range(i + 1, n):
            if j - i >= 2:
                out.append((f"[b{i},b{j}]", commutator((i,), (j,))))
            else:
                lhs = (i, j, i)
                rhs = (j, i, j)
                out.append((f"b{i}b{j}b{i}=b{j}b{i}b{j}", word_mul(lhs, word_inv(rhs))))
    return out


def h6() -> Word:
    """The hyperelliptic element b5 b4 b3 b2 b1^2 b2 b3 b4 b5."""
    return (5, 4, 3, 2, 1, 1, 2, 3, 4, 5)


def delta6() -> Word:
    """delta_6 = b1 b2 b3 b4 b5."""
    return (1, 2, 3, 4, 5)


def full_twist6() -> Word:
    """Delta_6^2 = (b1 b2 ... b5)^6, generator of the center of B_6."""
    return word_pow(delta6(), 6)


def _make(name, ngens, entries, extra_gens=()):
    gens = tuple(f"b{i}" for i in range(1, ngens + 1)) + tuple(extra_gens)
    labels, relators, modes = zip(*entries)
    return Presentation(name, gens, tuple(relators), tuple(modes), tuple(labels))


def _braid(n):
    return [(lab, w, "exact") for lab, w in braid_relators(n)]


def _gamma06():
    return _make(
        "Gamma06",
        5,
        _braid(6)
        + [
            ("(b1b2b3b4b5)^6", full_twist6(), "projective"),
            ("h6", h6(), "projective"),
        ],
    )


def _b6():
    return _make("B6", 5, _braid(6))


def _b6_sphere():
    return _make("B6_sphere", 5, _braid(6) + [("h6", h6(), "projective")])


def _gamma2_bh():
    chain = word_mul(word_pow((1, 2, 3), 4), (-5, -5))
    return _make(
        "Gamma2_BH",
        5,
        _braid(6)
        + [
            ("(b1b2b3)^4 b5^-2", chain, "projective"),
            ("[h6,b1]", commutator(h6(), (1,)), "exact"),
            ("h6^2", word_pow(h6(), 2), "projective"),
        ],
    )


def _gamma2_gen2():
    return _make(
        "Gamma2_gen2",
        5,
        _braid(6)
        + [("(b1b2b3b4b5)^6", full_twist6(), "projective")]
        + [(f"[h6,b{i}]", commutator(h6(), (i,)), "exact") for i in range(1, 6)]
        + [("h6^2", word_pow(h6(), 2), "projective")],
    )


def _gamma2_gervais():
    z = 6
    return _make(
        "Gamma2_gervais",
        5,
        _braid(6)
        + [("(b1b2b3b4b5)^6 z^-12", word_mul(full_twist6(), word_pow((z,), -12)), "exact")]
        + [(f"[z,b{i}]", commutator((z,), (i,)), "exact") for i in range(1, 6)]
        + [(f"[h6,b{i}]", commutator(h6(), (i,)), "exact") for i in range(1, 6)]
        + [("h6^2", word_pow(h6(), 2), "projective")],
        extra_gens=("z",),
    )


def _gamma12():
    return _make("Gamma12", 3, _braid(4) + [("(b1b2b3)^4", word_pow((1, 2, 3), 4), "projective")])


_BUILDERS = {
    "B6": _b6,
    "B6_sphere": _b6_sphere,
    "Gamma06": _gamma06,
    "Gamma2_BH": _gamma2_bh,
    "Gamma2_gen2": _gamma2_gen2,
    "Gamma2_gervais": _gamma2_gervais,
    "Gamma12": _gamma12,
}

CATALOG_NAMES = tuple(_BUILDERS)


def presentation_catalog(name: str) -> Presentation:
    try:
        return _BUILDERS[name]()
    except KeyError:
        raise KeyError(f"unknown presentation {name!r}; known: {', '.join(CATALOG_NAMES)}") from None


def presentation_to_json(p: Presentation) -> dict:
    return {
        "name": p.name,
        "generators": list(p.generators),
        "relators": [list(r) for r in p.relators],
        "labels": list(p.labels),
        "check_mode": list(p.check_modes),
    }
