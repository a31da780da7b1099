"""Check suites behind ``flipenum verify``.

Each suite returns a list of :class:`~flipenum.gf_solvers.Check` records;
a failed check carries the first counterexample as ``(index, got, expected)``.
"""

from __future__ import annotations

from typing import Iterable

from flipenum import gf_solvers as gf
from flipenum import recurrences as rec
from flipenum import reference as ref
from flipenum import tree_oracle as oracle
from flipenum.gf_solvers import Check, EquationId, solve, specialize
from flipenum.series import MultiSeries

SCOPES = ("tables", "identities", "systems", "oracle", "all")
DEFAULT_NMAX = {"tables": 11, "identities": 20, "systems": 10, "oracle": 8}


def check_values(name: str, triples: Iterable[tuple]) -> Check:
    """Pass iff every ``(index, got, expected)`` agrees; report the first that does not."""
    for index, got, expected in triples:
        if got != expected:
            return Check(name, False, (index, got, expected))
    return Check(name, True)


# -- tables -----------------------------------------------------------------


def suite_tables(nmax: int) -> list[Check]:
    n1, n2, n3 = min(nmax, 11), min(nmax, 10), min(nmax, 8)
    k2 = rec.table("k2", n1, force=True)
    bc = rec.table("bcolor", n2, force=True)
    k3 = rec.table("k3", n3, force=True)
    checks = [
        check_values(
            f"wedderburn matches published B_n, n <= {min(nmax, 15)}",
            ((n, rec.wedderburn(n), ref.WEDDERBURN[n]) for n in range(min(nmax, 15) + 1)),
        ),
        check_values(
            f"k2 matches published K[n,l], n <= {n1}",
            (((n, l), k2[n, l], v) for n in range(n1 + 1) for l, v in enumerate(ref.K2_TABLE[n])),
        ),
        check_values(
            f"bcolor matches published B[n,k], n <= {n2}",
            (((n, k), bc[n, k], v) for n in range(n2 + 1) for k, v in enumerate(ref.BCOLOR_TABLE[n])),
        ),
        check_values(
            f"k3 matches published K[n,l,c], n <= {n3}",
            (
                ((n, l, c), k3[n, l, c], v)
                for (n, c), row in ref.K3_TABLE.items()
                if n <= n3
                for l, v in enumerate(row)
            ),
        ),
    ]
    nb = min(nmax, 64)
    bounded = rec.k2_table(nb, bounded=True)
    plain = rec.k2_table(nb, bounded=False)
    checks.append(
        check_values(
            f"k2 bounded summation equals plain summation, n <= {nb}",
            (((n, l), bounded[n, l], plain[n, l]) for n in range(nb + 1) for l in range(n + 1)),
        )
    )
    return checks


# -- identities -------------------------------------------------------------


def suite_identities(nmax: int) -> list[Check]:
    k2 = rec.table("k2", nmax, force=True)
    bc = rec.table("bcolor", nmax, force=True)
    k3 = rec.table("k3", nmax, force=True)
    ns = range(nmax + 1)
    C, B = rec.catalan, rec.wedderburn
    return [
        check_values(
            "sum_l 2^l K[n,l] = C_n",
            ((n, sum(k2[n, l] << l for l in ns), C(n)) for n in ns),
        ),
        check_values("sum_l K[n,l] = B_n", ((n, sum(k2[n, l] for l in ns), B(n)) for n in ns)),
        check_values(
            "sum_l K[n,l,c] = B[n,c]",
            (((n, c), sum(k3[n, l, c] for l in ns), bc[n, c]) for n in ns for c in range(n + 1)),
        ),
        check_values(
            "sum_{l,c} 2^l K[n,l,c] = C_n 2^n",
            ((n, sum(k3[n, l, c] << l for l in ns for c in ns), C(n) << n) for n in ns),
        ),
        check_values(
            "B[n,k] = B[n,n-k]",
            (((n, k), bc[n, k], bc[n, n - k]) for n in ns for k in range(n + 1)),
        ),
        check_values(
            "K[n,l,c] = K[n,l,n-c]",
            (((n, l, c), k3[n, l, c], k3[n, l, n - c]) for n in ns for l in ns for c in range(n + 1)),
        ),
        check_values(
            "K[n,l,0] = K[n,l]",
            (((n, l), k3[n, l, 0], k2[n, l]) for n in ns for l in ns),
        ),
        check_values("B[n,0] = B_n", ((n, bc[n, 0], B(n)) for n in ns)),
        check_values(
            "C_n = binom(2n, n)/(n + 1)",
            ((n, C(n), rec.catalan_closed_form(n)) for n in ns),
        ),
    ]


# -- systems ----------------------------------------------------------------


def solver_agreement(eq, order: int) -> Check:
    eq = EquationId.parse(eq)
    return gf.compare(
        f"{eq.name} solution equals {eq.table_kind} table to order {order}",
        solve(eq, order),
        gf.series_from_table(eq, order),
    )


def specialization_checks(order: int) -> list[Check]:
    F = solve(EquationId.F_gfe0, order)
    G = solve(EquationId.G_gfe, order)
    L = solve(EquationId.L_gen1, order)
    M = solve(EquationId.M_gen2, order)
    S = solve(EquationId.S_gen3, order)
    Sy1 = specialize(S, "y", 1)
    Sy2z1 = specialize(specialize(S, "y", 2), "z", 1)
    catalan_scaled = MultiSeries(
        {(n, 0, 0): rec.catalan(n) << n for n in range(order + 1)}, order
    )
    return [
        gf.compare("L(x,1) = G", specialize(L, "y", 1), G),
        gf.compare("L(x,2) = F", specialize(L, "y", 2), F),
        gf.compare("M(x,0) = G", specialize(M, "y", 0), G),
        gf.compare("S(x,y,0) = L", specialize(S, "z", 0), L),
        gf.compare("S(x,1,z) = M", Sy1, M),
        gf.compare("S(x,1,0) = G", specialize(Sy1, "z", 0), G),
        gf.compare("S(x,2,1) = sum C_n 2^n x^n", Sy2z1, catalan_scaled),
    ]


def suite_systems(nmax: int) -> list[Check]:
    checks: list[Check] = []
    for report in (
        gf.verify_parity_system_G(nmax),
        gf.verify_bivariate_system_L(nmax),
        gf.verify_color_system_M(nmax),
    ):
        for c in report.checks:
            checks.append(Check(f"{report.title}: {c.name}", c.passed, c.first_failure, c.note))
    checks.append(gf.verify_gen3p(nmax))
    for eq in EquationId:
        checks.append(solver_agreement(eq, nmax))
        residual = gf.residual(eq, solve(eq, nmax))
        checks.append(gf.compare(f"{eq.name} residual of solution is zero", residual, 0 * residual))
    checks.extend(specialization_checks(nmax))
    return checks


# -- oracle -----------------------------------------------------------------


def suite_oracle(nmax: int) -> list[Check]:
    checks = []
    n1 = min(nmax, oracle.ENUMERATION_CAPS[1])
    n2 = min(nmax, oracle.ENUMERATION_CAPS[2])
    k2 = rec.table("k2", n1, force=True)
    k3 = rec.table("k3", n2, force=True)
    bc = rec.table("bcolor", n2, force=True)
    one = [oracle.census(n, 1) for n in range(n1 + 1)]
    two = [oracle.census(n, 2) for n in range(n2 + 1)]
    checks.append(
        check_values(
            f"census(n, 1) equals k2, n <= {n1}",
            (((n, l), one[n].count(l), k2[n, l]) for n in range(n1 + 1) for l in range(n + 1)),
        )
    )
    checks.append(
        check_values(
            f"census(n, 1) covers C_n ordered trees, n <= {n1}",
            ((n, one[n].total_trees(), rec.catalan(n)) for n in range(n1 + 1)),
        )
    )
    checks.append(
        check_values(
            f"census(n, 2) equals k3, n <= {n2}",
            (
                ((n, l, c), two[n].count(l, c), k3[n, l, c])
                for n in range(n2 + 1)
                for l in range(n + 1)
                for c in range(n + 1)
            ),
        )
    )
    checks.append(
        check_values(
            f"census(n, 2) marginals equal bcolor, n <= {n2}",
            (
                ((n, c), sum(two[n].count(l, c) for l in range(n + 1)), bc[n, c])
                for n in range(n2 + 1)
                for c in range(n + 1)
            ),
        )
    )
    checks.append(
        check_values(
            f"census(n, 2) covers C_n 2^n ordered trees, n <= {n2}",
            ((n, two[n].total_trees(), rec.catalan(n) << n) for n in range(n2 + 1)),
        )
    )
    return checks


SUITES = {
    "tables": suite_tables,
    "identities": suite_identities,
    "systems": suite_systems,
    "oracle": suite_oracle,
}


def run(scope: str, nmax: int | None = None) -> list[Check]:
    scopes = list(SUITES) if scope == "all" else [scope]
    checks = []
    for s in scopes:
        n = DEFAULT_NMAX[s] if nmax is None else nmax
        for c in SUITES[s](n):
            checks.append(Check(f"[{s}] {c.name}", c.passed, c.first_failure, c.note))
    return checks
