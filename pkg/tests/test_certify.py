import json
from fractions import Fraction

import pytest

from excsing.certify import Certificate, certify, eliminate_extremes, lct_upper_bound, table_tensor_split
from excsing.bundled import PROFILE_DATA


@pytest.fixture(scope="module")
def fixture_cert():
    return certify("paper-data")


def test_lct_upper_bound():
    assert lct_upper_bound(12, 8) == Fraction(4, 3)
    assert lct_upper_bound(9, 8) == 1
    for n in range(1, 10):
        assert lct_upper_bound(n + 1, n) == 1
    with pytest.raises(ValueError):
        lct_upper_bound(0, 8)


def test_eliminate_extremes():
    zeros = {d: 0 for d in range(1, 12)}
    assert eliminate_extremes(zeros).passed
    assert not eliminate_extremes({**zeros, 9: 1}).passed
    assert eliminate_extremes({**zeros, 12: 5}).passed
    missing = dict(zeros)
    del missing[4]
    step = eliminate_extremes(missing)
    assert not step.passed and step.details["missing"] == [4]


def test_fixture_mode_verdict(fixture_cert):
    c = fixture_cert
    assert c.passed
    assert c.verdict["lct_lower_bound"] == "10/9"
    assert c.verdict["lct_upper_bound"] == "4/3"
    names = [s.name for s in c.steps]
    assert names[:4] == ["dimension-sums", "semi-invariants", "eliminate-extremes", "upper-bound"]
    assert [s.name for s in c.steps if s.name.startswith("exclusion")] == ["exclusion[4]", "exclusion[5]"]
    found = sum(len(s.details["solutions"]) for s in c.steps if s.name.startswith("search"))
    assert found == 2
    n6 = next(s for s in c.steps if s.name == "search[6]")
    assert len(n6.details["strict_only"]) == 13


def test_round_trip(fixture_cert):
    text = fixture_cert.dumps()
    again = Certificate.loads(text)
    assert again == fixture_cert
    assert again.dumps() == text
    assert json.loads(text)["schema"] == 1


def test_deterministic_across_workers(fixture_cert):
    assert certify("paper-data", workers=3).dumps() == fixture_cert.dumps()


def _corrupt(tmp_path, edit):
    raw = json.loads(PROFILE_DATA.read_text())
    edit(raw)
    path = tmp_path / "delta.json"
    path.write_text(json.dumps(raw))
    return path


def test_corrupted_delta6_has_no_verdict(tmp_path):
    def edit(raw):
        for entry in raw["delta"]["6"]["profile"]:
            if entry[0] == 24:
                entry[0] = 23

    c = certify("paper-data", profile_path=_corrupt(tmp_path, edit))
    assert c.verdict is None
    bad = c.failed_step()
    assert bad.name == "dimension-sums"
    assert "3003" in bad.details["issues"][0]


def test_semi_invariant_corruption_has_no_verdict(tmp_path):
    c = certify("paper-data", profile_path=_corrupt(tmp_path, lambda raw: raw["semi_invariants"]["counts"].update({"9": 1})))
    assert c.verdict is None
    assert c.failed_step().name == "semi-invariants"


def test_wrong_survivors_have_no_verdict(tmp_path):
    # dropping the 15 from Delta_6 (and padding with 15 ones to keep the sum) kills q_6 = 39
    def edit(raw):
        prof = raw["delta"]["6"]["profile"]
        prof.remove([15, 1])
        prof.insert(0, [1, 15])

    c = certify("paper-data", profile_path=_corrupt(tmp_path, edit))
    assert c.verdict is None


def test_table_mode_matches_fixture_mode(fixture_cert):
    t = certify("table")
    assert t.passed and t.verdict == fixture_cert.verdict
    pick = lambda c: [s for s in c.steps if s.name.startswith(("search", "survivors", "exclusion"))]
    assert pick(t) == pick(fixture_cert)
    names = {s.name for s in t.steps}
    assert {"delta-cross-check", "delta-other-nine", "center-dims", "tensor-cross-check"} <= names
    assert t.inputs["table"].startswith("sha256:")


def test_table_tensor_split(big_table):
    assert table_tensor_split(big_table, 4, 45).parts == (90, 135, 180)
    assert table_tensor_split(big_table, 6, 24).irreducible
    with pytest.raises(ValueError):
        table_tensor_split(big_table, 6, 80)  # two copies of an 80-dim constituent type


def test_unknown_mode():
    with pytest.raises(ValueError):
        certify("magic")
