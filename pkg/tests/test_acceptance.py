"""The ten acceptance criteria, each at its exact tolerance and time budget.

Caches are cleared before every timed block, so each figure is a cold build.
A PASS/FAIL line per criterion is printed at the end of the pytest run, or
directly when this file is executed as a script.
"""

import contextlib
import io
import json
import sys
import time

import pytest

from flipenum import recurrences as rec
from flipenum import reference as ref
from flipenum import tree_oracle as oracle
from flipenum.cli import main
from flipenum.gf_solvers import (
    EquationId,
    residual_gen3p,
    series_from_table,
    solve,
    specialize,
    verify_bivariate_system_L,
    verify_color_system_M,
    verify_parity_system_G,
)
from flipenum.series import coefficient

try:
    from conftest import ACCEPTANCE
except ImportError:  # run as a script from elsewhere
    ACCEPTANCE = []


def cold():
    rec.clear_caches()
    oracle.clear_caches()


def cli_json(*argv):
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = main([*argv, "--format", "json"])
    assert code == 0
    return {tuple(e["index"]): int(e["value"]) for e in json.loads(buf.getvalue())["entries"]}


def judge(number, title, budget, body):
    """Run ``body`` cold, record the outcome, then re-raise any failure."""
    cold()
    start = time.perf_counter()
    error = None
    try:
        body()
    except AssertionError as exc:
        error = exc
    elapsed = time.perf_counter() - start
    ok = error is None and elapsed < budget
    detail = f"{elapsed:.2f}s, budget {budget}s"
    if error is not None:
        detail += f", {error}"
    ACCEPTANCE.append((number, title, ok, detail))
    if error is not None:
        raise error
    assert elapsed < budget, f"took {elapsed:.2f}s, budget {budget}s"


def c1():
    got = cli_json("table", "k2", "--nmax", "11")
    expected = {(n, l): v for n, row in ref.K2_TABLE.items() for l, v in enumerate(row)}
    assert len(expected) == 78 and got == expected
    assert got[(11, 6)] == 126


def c2():
    got = cli_json("table", "bcolor", "--nmax", "10")
    expected = {(n, k): v for n, row in ref.BCOLOR_TABLE.items() for k, v in enumerate(row)}
    assert len(expected) == 66 and got == expected
    assert got[(10, 5)] == 41788


def c3():
    got = cli_json("table", "k3", "--nmax", "8")
    expected = {(n, c, l): v for (n, c), row in ref.K3_TABLE.items() for l, v in enumerate(row)}
    assert got == expected
    assert got[(7, 3, 4)] == 239 and got[(8, 4, 5)] == 1104


def c4():
    G = solve(EquationId.G_gfe, 15)
    assert G.to_list() == ref.WEDDERBURN
    assert G.to_list()[-2:] == [4850, 10905]
    sq = G * G
    assert sq.to_list() == ref.WEDDERBURN_SQUARED
    assert coefficient(sq, 6) == 44


def c5():
    for eq, order in (("F_gfe0", 40), ("G_gfe", 40), ("L_gen1", 24), ("M_gen2", 24), ("S_gen3", 16)):
        s, t = solve(eq, order), series_from_table(eq, order)
        assert s == t, f"{eq} differs from its table at order {order}"
    assert solve("F_gfe0", 40).to_list() == [rec.catalan(n) for n in range(41)]


def c6():
    k2, k3, bc = rec.table("k2", 11), rec.table("k3", 9), rec.table("bcolor", 9)
    for n in range(12):
        c = oracle.census(n, 1)
        assert c.l_profile() == k2.row(n), f"census(n=1 colour) differs at n={n}"
    for n in range(10):
        c = oracle.census(n, 2)
        for col in range(n + 1):
            if n <= 8:
                assert c.l_profile(col) == k3.row(n, col), f"census differs from k3 at n={n}, c={col}"
            assert sum(c.l_profile(col)) == bc[n, col], f"marginal differs from bcolor at n={n}, c={col}"


def c7():
    N = 20
    ns = range(N + 1)
    k2, k3, bc = rec.table("k2", N), rec.table("k3", N), rec.table("bcolor", N)
    for n in ns:
        assert sum(k2[n, l] << l for l in ns) == rec.catalan(n)
        assert sum(k2[n, l] for l in ns) == rec.wedderburn(n)
        assert sum(k3[n, l, c] << l for l in ns for c in ns) == rec.catalan(n) << n
        for c in range(n + 1):
            assert sum(k3[n, l, c] for l in ns) == bc[n, c]
            assert bc[n, c] == bc[n, n - c]
            for l in ns:
                assert k3[n, l, c] == k3[n, l, n - c]


def c8():
    N = 12
    F, G = solve("F_gfe0", N), solve("G_gfe", N)
    L, M, S = solve("L_gen1", N), solve("M_gen2", N), solve("S_gen3", N)
    assert specialize(L, "y", 1) == G
    assert specialize(L, "y", 2) == F
    assert specialize(M, "y", 0) == G
    assert specialize(S, "z", 0) == L
    assert specialize(S, "y", 1) == M
    assert specialize(specialize(S, "y", 1), "z", 0) == G


def c9():
    for report in (verify_parity_system_G(12), verify_bivariate_system_L(10), verify_color_system_M(8)):
        failed = [(c.name, c.first_failure) for c in report.checks if not c.passed]
        assert not failed, f"{report.title}: {failed}"
    assert residual_gen3p(solve("S_gen3", 10)).is_zero()


def c10():
    for colors in (1, 2):
        for n in range(9):
            # census() raises IntegrityError on a broken class; the explicit path recomputes
            # l per tree with two_color_iso and is checked the same way
            for build in (oracle.census, oracle.census_from_trees):
                c = build(n, colors)
                assert all(card == 1 << l for l, _, card in c.class_sizes.values())
                assert c.total_trees() == rec.catalan(n) * colors**n


CRITERIA = [
    (1, "k2 table reproduction, n <= 11", 1, c1),
    (2, "bcolor table reproduction, n <= 10", 1, c2),
    (3, "k3 table reproduction, n <= 8", 5, c3),
    (4, "G series and its square", 1, c4),
    (5, "solver equals recurrence at orders 40/40/24/24/16", 30, c5),
    (6, "census agrees with k2, k3 and bcolor marginals", 60, c6),
    (7, "identity suite, n <= 20", 5, c7),
    (8, "specialization suite, order 12", 5, c8),
    (9, "system residual suite", 10, c9),
    (10, "class cardinality law, n <= 8", 60, c10),
]


@pytest.mark.parametrize("number,title,budget,body", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(number, title, budget, body):
    judge(number, title, budget, body)


if __name__ == "__main__":
    failures = 0
    for number, title, budget, body in CRITERIA:
        try:
            judge(number, title, budget, body)
        except AssertionError:
            failures += 1
        n, t, ok, detail = ACCEPTANCE[-1]
        print(f"{'PASS' if ok else 'FAIL'} criterion {n:2d}: {t} ({detail})")
    sys.exit(1 if failures else 0)
