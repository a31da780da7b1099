import pytest

from flipenum import gf_solvers as gf
from flipenum import recurrences as rec
from flipenum import reference as ref
from flipenum.errors import IntegrityError, UsageError
from flipenum.gf_solvers import EquationId, apply_rhs, residual, solve, specialize
from flipenum.series import MultiSeries, coefficient


def test_solve_examples():
    assert coefficient(solve(EquationId.F_gfe0, 10), 5) == 42
    assert solve(EquationId.G_gfe, 15).to_list() == ref.WEDDERBURN
    assert coefficient(solve(EquationId.S_gen3, 8), 7, 5, 3) == 250


def test_parse():
    assert EquationId.parse("L_gen1") is EquationId.L_gen1
    assert [e.arity for e in EquationId] == [1, 1, 2, 2, 3]
    with pytest.raises(UsageError):
        EquationId.parse("H_gen9")


def test_residual_examples():
    assert residual(EquationId.G_gfe, solve(EquationId.G_gfe, 20)).is_zero()
    r = residual(EquationId.G_gfe, MultiSeries.constant(1, 5))
    assert coefficient(r, 0) == 0 and coefficient(r, 1) == -1


def test_residual_of_k3_table_series():
    s = gf.series_from_table(EquationId.S_gen3, 8)
    assert residual(EquationId.S_gen3, s).is_zero()


@pytest.mark.parametrize("eq", list(EquationId))
def test_fixed_point_stability(eq):
    s = solve(eq, 9)
    assert apply_rhs(eq, s) == s


@pytest.mark.parametrize("eq,order", [("F_gfe0", 30), ("G_gfe", 30), ("L_gen1", 16), ("M_gen2", 16), ("S_gen3", 10)])
def test_solver_matches_tables(eq, order):
    assert solve(eq, order) == gf.series_from_table(eq, order)


def test_specialize_examples():
    L = solve(EquationId.L_gen1, 12)
    assert specialize(L, "y", 1) == solve(EquationId.G_gfe, 12)
    assert specialize(L, "y", 2) == solve(EquationId.F_gfe0, 12)
    S = solve(EquationId.S_gen3, 10)
    assert specialize(specialize(S, "y", 1), "z", 0) == solve(EquationId.G_gfe, 10)
    assert specialize(solve(EquationId.M_gen2, 10), "y", 0) == solve(EquationId.G_gfe, 10)


def test_specialize_keeps_names():
    S = solve(EquationId.S_gen3, 4)
    assert specialize(S, "y", 1).names == ("x", "z")


def test_specialize_errors():
    L = solve(EquationId.L_gen1, 4)
    with pytest.raises(UsageError):
        specialize(L, "y", 3)
    with pytest.raises(UsageError):
        specialize(L, "z", 1)
    with pytest.raises(UsageError):
        specialize(L, "x", 1)


def test_catalan_substitution_law():
    S = solve(EquationId.S_gen3, 16)
    T = specialize(specialize(S, "y", 2), "z", 1)
    assert T.to_list() == [rec.catalan(n) << n for n in range(17)]


def test_parity_system():
    assert gf.verify_parity_system_G(12).passed
    r0 = gf.verify_parity_system_G(0)
    assert r0.passed


def test_parity_fault_injection():
    report = gf.verify_parity_system_G(12, values={4: rec.wedderburn(4) + 1})
    assert not report.passed
    bad = report["H = 1 + s I H"]
    assert not bad.passed
    index, got, expected = bad.first_failure
    assert index == (2, 0, 0)
    assert got - expected == 1


def test_bivariate_system():
    report = gf.verify_bivariate_system_L(10)
    failed = [c.name for c in report.checks if not c.passed]
    assert failed == []
    assert gf.verify_bivariate_system_L(0).passed


def test_colour_system():
    report = gf.verify_color_system_M(8)
    assert [c.name for c in report.checks if not c.passed] == []
    assert len(report.checks) >= 8


def test_gen3p():
    assert gf.verify_gen3p(10).passed
    assert gf.residual_gen3p(solve(EquationId.S_gen3, 10)).is_zero()


def test_compare_reports_lowest_exponent():
    a = MultiSeries({(1, 0, 0): 1, (3, 0, 0): 4}, 4)
    b = MultiSeries({(1, 0, 0): 2, (3, 0, 0): 5}, 4)
    c = gf.compare("demo", a, b)
    assert not c.passed
    assert c.first_failure == ((1, 0, 0), 1, 2)


def test_non_convergence_is_integrity_error(monkeypatch):
    # a map that never settles
    monkeypatch.setitem(gf._PHI, EquationId.F_gfe0, lambda s: s + 1)
    with pytest.raises(IntegrityError):
        solve(EquationId.F_gfe0, 3)


def test_wrong_arity_is_usage_error():
    with pytest.raises(UsageError):
        apply_rhs(EquationId.L_gen1, MultiSeries.constant(1, 3))
    with pytest.raises(UsageError):
        solve(EquationId.G_gfe, -1)
