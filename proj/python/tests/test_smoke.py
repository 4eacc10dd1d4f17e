import json
import os
from fractions import Fraction

import pytest

import fibcones
from fibcones import Bundle, FibconesError, Space

SAMPLES = os.path.join(os.environ.get("FIBCONES_SOURCE_DIR", os.path.join(os.path.dirname(__file__), "..", "..")),
                       "samples")


def split():
    return Bundle(2, 0, [(1, 1), (1, -1)])


def test_relations_pass():
    s = Space(Bundle(2, 1), Bundle(3, 2))
    assert s.dimension == 4
    checks = s.relations()
    assert checks and all(passed for _, _, _, passed in checks)


def test_basis_and_pairing():
    s = Space(Bundle(2, 0), Bundle(3, 0))
    assert s.basis(1) == ["z2", "z1", "F"]
    assert len(s.basis(2)) == 4
    m = fibcones.to_fractions(s.pairing(1))
    assert len(m) == 3 and all(len(row) == 3 for row in m)


def test_eff_semistable():
    s = Space(Bundle(2, 0), Bundle(2, 0))
    r = s.eff(1)
    assert r["provenance"] == "Semistable"
    assert sorted(r["generators"]) == ["F", "z1", "z2"]


def test_eff_low_dimension():
    s = Space(split(), split())
    r = s.eff(2)
    assert r["provenance"] == "UnstableLowDim"
    assert r["generators"] == ["F*z1 + F*z2 + z1*z2", "F*z1"]


def test_nef_contains_twisted_divisor():
    s = Space(Bundle(2, 3), Bundle(3, -1))
    n = s.nef(1)
    ineq = fibcones.to_fractions(n["inequalities"])
    # z1 - 3/2 F in (z2, z1, F) coordinates
    v = [Fraction(0), Fraction(1), Fraction(-3, 2)]
    assert all(sum(a * x for a, x in zip(row, v)) >= 0 for row in ineq)


def test_blowup():
    s = Space(Bundle(3, 1, [(1, 2), (2, -1)]), Bundle(2, 0))
    assert all(c[3] for c in s.verify_blowup())


def test_errors():
    with pytest.raises(FibconesError, match="MixedStabilityUnsupported"):
        Space(Bundle(2, 0), split()).eff(1)
    with pytest.raises(FibconesError, match="InvalidHN"):
        Space(Bundle(2, 0, [(1, -1), (1, 1)]), Bundle(2, 0))
    with pytest.raises(FibconesError, match="RankTooSmall"):
        Space(Bundle(1, 0), Bundle(2, 0))


def test_cli():
    code, out, err = fibcones.run_cli(["--input", os.path.join(SAMPLES, "semistable.json"), "--format", "json",
                                       "eff", "--codim", "1"])
    assert code == 0, err
    doc = json.loads(out)
    assert len(doc["result"]["generators"]) == 3
    code, _, _ = fibcones.run_cli(["--input", os.path.join(SAMPLES, "mixed.json"), "eff", "--codim", "1"])
    assert code == 4
    code, _, _ = fibcones.run_cli(["relations"], stdin="{")
    assert code == 2
