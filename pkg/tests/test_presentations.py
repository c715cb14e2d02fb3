from __future__ import annotations

import pytest

from twistrep.presentations import (
    CATALOG_NAMES,
    Presentation,
    braid_relators,
    h6,
    presentation_catalog,
    presentation_to_json,
)
from twistrep.words import word_pow


def test_catalog_contents():
    sizes = {name: len(presentation_catalog(name).relators) for name in CATALOG_NAMES}
    assert sizes == {
        "B6": 10,
        "B6_sphere": 11,
        "Gamma06": 12,
        "Gamma2_BH": 13,
        "Gamma2_gen2": 17,
        "Gamma2_gervais": 22,
        "Gamma12": 4,
    }


def test_braid_relator_count():
    # (n-1 choose 2) commutation/braid pairs
    assert len(braid_relators(6)) == 10
    assert len(braid_relators(4)) == 3


def test_gamma06_extra_relators():
    p = presentation_catalog("Gamma06")
    assert word_pow((1, 2, 3, 4, 5), 6) in p.relators
    assert h6() in p.relators


def test_gamma12_extra_relator():
    p = presentation_catalog("Gamma12")
    assert word_pow((1, 2, 3), 4) in p.relators
    assert p.generators == ("b1", "b2", "b3")


def test_gamma2_bh_relators():
    p = presentation_catalog("Gamma2_BH")
    assert word_pow((1, 2, 3), 4) + (-5, -5) in p.relators
    assert word_pow(h6(), 2) in p.relators


def test_every_relator_has_a_mode():
    for name in CATALOG_NAMES:
        p = presentation_catalog(name)
        assert len(p.check_modes) == len(p.relators) == len(p.labels)
        assert set(p.check_modes) <= {"exact", "projective"}


def test_unknown_name():
    with pytest.raises(KeyError):
        presentation_catalog("nope")


def test_relators_must_be_reduced():
    with pytest.raises(ValueError):
        Presentation("bad", ("a",), ((1, -1),), ("exact",), ("r",))


def test_json_shape():
    obj = presentation_to_json(presentation_catalog("Gamma12"))
    assert obj["name"] == "Gamma12" and len(obj["relators"]) == 4
