import pytest

from thomgen.verify import SUITES, run_suite


@pytest.mark.parametrize("name", ["porteous", "i22", "iii23", "sigma211", "sigma222", "euler"])
def test_suite_passes(name):
    (checks,) = run_suite(name).values()
    assert checks and all(c.ok for c in checks), [c for c in checks if not c.ok]


def test_catalog_meta_reports_the_single_c_mismatch():
    (checks,) = run_suite("catalog-meta").values()
    bad = [c for c in checks if not c.ok]
    assert [(c.name, c.expected, c.actual) for c in bad] == [("I23[0] (2, 1, 1) c", 8, 7)]


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("nope")
    assert "cgamma" in SUITES
