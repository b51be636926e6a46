import pytest

from pii_totals import identities as ids

NAMES = {
    "stokes_constraint", "connection_relation", "det_E", "rotation_symmetry", "hatE_S1_equals_DE",
    "origin_limit", "wronskian", "det_phi_sector", "S_plus_factorization", "S_minus_inverse_factorization",
    "K_diagonal_closed_form", "W_identity", "exp_total_from_h", "H_closed_form", "nu_imaginary", "N_jump",
}


@pytest.mark.parametrize("grid", ["minimal", "default", "dense"])
def test_full_suite_passes(grid):
    reports = ids.full_suite(grid)
    assert {r.name for r in reports} == NAMES
    bad = [r for r in reports if not r.passed]
    assert not bad, bad


def test_tolerance_override_fails():
    reports = ids.full_suite("minimal", tol=1e-16)
    assert not all(r.passed for r in reports)
    assert all(r.tolerance == 1e-16 for r in reports)


def test_parametrix_suite_subset():
    names = {r.name for r in ids.parametrix_suite("minimal")}
    assert names < NAMES and "rotation_symmetry" in names and "N_jump" not in names


def test_grids():
    assert ids.alpha_grid("minimal") == [0j]
    assert len(ids.alpha_grid("dense")) > len(ids.alpha_grid("default"))
    with pytest.raises(ValueError):
        ids.alpha_grid("huge")
    for a, k in ids.ak_grid("dense"):
        if a.imag == 0:
            assert k.imag == 0
        else:
            assert a.real == 0 and k.real == 0


def test_n_jump_first_order_errors():
    errs, rel = ids.n_jump_data(0, 0.5, 0.0)
    assert errs[0] > errs[1] > errs[2]
    assert rel <= 1e-8


def test_rotation_points_inside_window():
    for k in (1, 2):
        assert len(ids.rotation_points(k)) == 12
