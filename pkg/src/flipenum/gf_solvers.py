"""Functional equations for the counting series, solved by fixed-point iteration.

Each equation has the shape ``S = 1 + x * (...)``, so applying the right-hand
side to an approximation that is correct below x-degree d yields one correct
through degree d.  Starting from the constant 1, at most ``order + 1``
applications reach the truncated solution, and the next application must
return it unchanged.  No square roots are taken: the iteration picks out
the branch that is a power series with constant term 1.

Besides solving, this module checks the auxiliary parity-split systems as
residual identities built from the recurrence tables.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from flipenum import recurrences as rec
from flipenum.errors import IntegrityError, UsageError
from flipenum.series import (
    MultiSeries,
    halve,
    scale_by_monomial as shift,
    substitute_squares,
)


class EquationId(enum.Enum):
    F_gfe0 = ("F_gfe0", 1, "catalan")
    G_gfe = ("G_gfe", 1, "wedderburn")
    L_gen1 = ("L_gen1", 2, "k2")
    M_gen2 = ("M_gen2", 2, "bcolor")
    S_gen3 = ("S_gen3", 3, "k3")

    def __init__(self, ident: str, arity: int, table_kind: str):
        self.ident = ident
        self.arity = arity
        self.table_kind = table_kind

    @classmethod
    def parse(cls, name: "str | EquationId") -> "EquationId":
        if isinstance(name, cls):
            return name
        try:
            return cls[name]
        except KeyError:
            raise UsageError(f"unknown equation {name!r}; expected one of {[e.name for e in cls]}") from None


# -- right-hand sides ---------------------------------------------------------


def _phi_F(F: MultiSeries) -> MultiSeries:
    # F = 1 + x F^2
    return 1 + shift(F * F, 1)


def _phi_G(G: MultiSeries) -> MultiSeries:
    # G = 1 + x (G^2 + G(x^2)) / 2
    return 1 + halve(shift(G * G + substitute_squares(G), 1))


def _phi_L(L: MultiSeries) -> MultiSeries:
    # L = 1 + x y L^2 / 2 + x (1 - y/2) L(x^2, y^2)
    #   = 1 + x L2 + x y (L^2 - L2) / 2
    L2 = substitute_squares(L)
    return 1 + shift(L2, 1) + halve(shift(L * L - L2, 1, 1))


def _phi_M(M: MultiSeries) -> MultiSeries:
    # M = 1 + x (1 + y) (M^2 + M(x^2, y^2)) / 2
    inner = M * M + substitute_squares(M)
    return 1 + halve(shift(inner, 1) + shift(inner, 1, 1))


def _phi_S(S: MultiSeries) -> MultiSeries:
    # S = 1 + x (1 + z) ((2 - y) S2 + y S^2) / 2
    #   = 1 + x (1 + z) S2 + x y (1 + z) (S^2 - S2) / 2
    S2 = substitute_squares(S)
    d = S * S - S2
    return 1 + shift(S2, 1) + shift(S2, 1, 0, 1) + halve(shift(d, 1, 1) + shift(d, 1, 1, 1))


_PHI = {
    EquationId.F_gfe0: _phi_F,
    EquationId.G_gfe: _phi_G,
    EquationId.L_gen1: _phi_L,
    EquationId.M_gen2: _phi_M,
    EquationId.S_gen3: _phi_S,
}


def apply_rhs(eq, s: MultiSeries) -> MultiSeries:
    """One application of the equation's right-hand side."""
    eq = EquationId.parse(eq)
    if s.nvars != eq.arity:
        raise UsageError(f"{eq.name} needs a {eq.arity}-variable series, got nvars={s.nvars}")
    return _PHI[eq](s)


def solve(eq, order: int) -> MultiSeries:
    """Truncated power-series solution with constant term 1."""
    eq = EquationId.parse(eq)
    if order < 0:
        raise UsageError(f"order must be >= 0, got {order}")
    cur = MultiSeries.constant(1, order, eq.arity)
    for _ in range(order + 2):
        nxt = _PHI[eq](cur)
        if nxt == cur:
            return cur
        cur = nxt
    raise IntegrityError(f"{eq.name} did not reach a fixed point within {order + 2} iterations")


def residual(eq, s: MultiSeries) -> MultiSeries:
    """Left side minus right side; the zero series iff ``s`` solves ``eq`` to its order."""
    return s - apply_rhs(eq, s)


def residual_gen3p(S: MultiSeries) -> MultiSeries:
    """Residual of the rearranged three-variable equation

        x (y - 2)(1 + z) S(x^2, y^2, z^2) = 2 (1 - S) + x y (1 + z) S^2
    """
    S2 = substitute_squares(S)
    t = shift(S2, 1, 1)
    lhs = t + shift(t, 0, 0, 1) - 2 * (shift(S2, 1) + shift(S2, 1, 0, 1))
    sq = S * S
    rhs = 2 * (1 - S) + shift(sq, 1, 1) + shift(sq, 1, 1, 1)
    return lhs - rhs


def specialize(s: MultiSeries, var: str, value: int) -> MultiSeries:
    """Substitute ``value`` for the named non-x variable and drop it.

    Remaining variables keep their names and move down one slot, so
    specializing y in S(x, y, z) gives a series in (x, z).  A term free of
    the variable keeps its coefficient when ``value`` is 0.
    """
    if value not in (0, 1, 2):
        raise UsageError(f"specialization value must be 0, 1 or 2, got {value}")
    if var == s.names[0]:
        raise UsageError("the x variable cannot be specialized")
    if var not in s.names:
        raise UsageError(f"variable {var!r} not in series variables {s.names}")
    slot = s.names.index(var)
    out: dict = {}
    for e, c in s.coeffs.items():
        p = e[slot]
        if value == 0 and p:
            continue
        rest = list(e[:slot] + e[slot + 1:]) + [0]
        key = tuple(rest)
        out[key] = out.get(key, 0) + c * value**p
    names = s.names[:slot] + s.names[slot + 1:]
    return MultiSeries(out, s.order, s.nvars - 1, names)


def series_from_table(eq, order: int) -> MultiSeries:
    """The series whose coefficients are read off the recurrence table for ``eq``."""
    eq = EquationId.parse(eq)
    t = rec.table(eq.table_kind, order, force=True)
    coeffs = {}
    for idx, v in t.entries.items():
        if idx[0] <= order:
            coeffs[idx] = v
    return MultiSeries(coeffs, order, eq.arity)


# -- residual identity reports ----------------------------------------------


@dataclass
class Check:
    name: str
    passed: bool
    first_failure: tuple | None = None  # (exponent, lhs coefficient, rhs coefficient)
    note: str = ""

    def as_record(self) -> dict:
        rec_ = {"check": self.name, "passed": self.passed}
        if self.first_failure:
            e, lhs, rhs = self.first_failure
            rec_["exponent"] = list(e)
            rec_["lhs"] = str(lhs)
            rec_["rhs"] = str(rhs)
        if self.note:
            rec_["note"] = self.note
        return rec_


@dataclass
class Report:
    title: str
    checks: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)


def compare(name: str, lhs: MultiSeries, rhs: MultiSeries) -> Check:
    """Coefficient-wise comparison, reporting the lowest differing exponent."""
    diff = lhs - rhs
    if diff.is_zero():
        return Check(name, True)
    e, _ = next(diff.terms())
    return Check(name, False, (e, lhs.coeffs.get(e, 0), rhs.coeffs.get(e, 0)))


def verify_parity_system_G(order: int, values: dict | None = None) -> Report:
    """Check the even/odd split of the one-variable series.

    H(s) = sum B_{2k} s^k and I(s) = sum B_{2k+1} s^k are built from the
    Wedderburn table (entries of ``values`` override table values, for
    fault injection).  G comes from solving its own equation.
    """
    if order < 0:
        raise UsageError(f"order must be >= 0, got {order}")
    wed = rec.table("wedderburn", 2 * order + 1, force=True)

    def B(n):
        if values and n in values:
            return values[n]
        return wed[n]

    H = MultiSeries({(k, 0, 0): B(2 * k) for k in range(order + 1)}, order)
    I = MultiSeries({(k, 0, 0): B(2 * k + 1) for k in range(order + 1)}, order)
    G = solve(EquationId.G_gfe, order)
    report = Report(f"parity system of G, order {order}")
    report.checks.append(compare("H = 1 + s I H", H, 1 + shift(I * H, 1)))
    # 2 I = G + s I^2 + H^2
    report.checks.append(compare("I = (G + s I^2 + H^2)/2", 2 * I, G + shift(I * I, 1) + H * H))
    report.checks.append(
        compare("G(s) = H(s^2) + s I(s^2)", G, substitute_squares(H) + shift(substitute_squares(I), 1))
    )
    return report


def _parity_splits(get, order: int) -> dict:
    """P0, P1, Q, R from a two-index table by parity of both indices.

    P0 ~ T[2n, 2l], P1 ~ T[2n, 2l+1], Q ~ T[2n+1, 2l], R ~ T[2n+1, 2l+1],
    each with x^n y^l.
    """
    parts = {"P0": (0, 0), "P1": (0, 1), "Q": (1, 0), "R": (1, 1)}
    out = {}
    for name, (pn, pl) in parts.items():
        coeffs = {}
        for n in range(order + 1):
            for l in range(n + 1):
                v = get(2 * n + pn, 2 * l + pl)
                if v:
                    coeffs[(n, l, 0)] = v
        out[name] = MultiSeries(coeffs, order, 2)
    return out


def verify_bivariate_system_L(order: int) -> Report:
    """Check the parity-split system behind the K[n, l] equation."""
    if order < 0:
        raise UsageError(f"order must be >= 0, got {order}")
    # splits need the table up to 2*order + 1 plus one extra x-degree for
    # the identities multiplied through below
    N = order + 1
    t = rec.table("k2", 2 * N + 1, force=True)
    sp = _parity_splits(lambda a, b: t[a, b], N)
    P0, P1, Q, R = sp["P0"], sp["P1"], sp["Q"], sp["R"]
    Lt = series_from_table(EquationId.L_gen1, N)
    L = solve(EquationId.L_gen1, N)
    report = Report(f"bivariate system of L, order {order}")
    report.checks.append(compare("L from equation = L from table", L, Lt))
    report.checks.append(compare("Q = L + y P0 P1 + x y Q R", Q, L + shift(P0 * P1, 0, 1) + shift(Q * R, 1, 1)))
    # 2R = -L + x (Q^2 + y R^2) + P0^2 + y P1^2
    report.checks.append(
        compare(
            "R = (-L + x(Q^2 + y R^2) + P0^2 + y P1^2)/2",
            2 * R,
            -L + shift(Q * Q, 1) + shift(R * R, 1, 1) + P0 * P0 + shift(P1 * P1, 0, 1),
        )
    )
    report.checks.append(compare("P0 = 1 + x y (R P0 + Q P1)", P0, 1 + shift(R * P0 + Q * P1, 1, 1)))
    report.checks.append(compare("P1 = x P0 Q + x y P1 R", P1, shift(P0 * Q, 1) + shift(P1 * R, 1, 1)))
    # P(x^2, y) = P0(x^2, y^2) + y P1(x^2, y^2); P itself has y-degree above
    # its x-degree, so it is only ever formed with x squared
    P0s, P1s, Qs, Rs = (substitute_squares(s) for s in (P0, P1, Q, R))
    Px2 = P0s + shift(P1s, 0, 1)
    report.checks.append(
        compare("L = P(x^2, y) + x Q(x^2, y^2) + x y R(x^2, y^2)", L, Px2 + shift(Qs, 1) + shift(Rs, 1, 1))
    )
    report.checks.append(
        compare(
            "P(x^2, y) = 1 + x^2 y P(x^2, y) (Q(x^2, y^2) + y R(x^2, y^2))",
            Px2,
            1 + shift(Px2 * Qs, 2, 1) + shift(Px2 * Rs, 2, 2),
        )
    )
    # closed form of P0 and P1 cleared of denominators:
    # eliminating P1 (resp. P0) between the last two gives
    # P0 ((1 - x y R)^2 - x^2 y Q^2) = 1 - x y R,  P1 (...) = x Q
    den = (1 - shift(R, 1, 1)) * (1 - shift(R, 1, 1)) - shift(Q * Q, 2, 1)
    report.checks.append(compare("P0 ((1 - x y R)^2 - x^2 y Q^2) = 1 - x y R", P0 * den, 1 - shift(R, 1, 1)))
    report.checks.append(compare("P1 ((1 - x y R)^2 - x^2 y Q^2) = x Q", P1 * den, shift(Q, 1)))
    return report


def verify_color_system_M(order: int) -> Report:
    """Check the parity-split system behind the 2-colored equation.

    P0, P1, Q, R are the parity splits of the B[n, k] table.  ``(x, 0)``
    arguments are y-specializations at 0.
    """
    if order < 0:
        raise UsageError(f"order must be >= 0, got {order}")
    N = order + 1
    t = rec.table("bcolor", 2 * N + 1, force=True)
    sp = _parity_splits(lambda a, b: t[a, b], N)
    P0, P1, Q, R = sp["P0"], sp["P1"], sp["Q"], sp["R"]
    M = solve(EquationId.M_gen2, N)
    Mt = series_from_table(EquationId.M_gen2, N)

    def at0(s):
        return MultiSeries(specialize(s, "y", 0).coeffs, s.order, 2)

    P00, Q0, M0 = at0(P0), at0(Q), at0(M)
    report = Report(f"colour system of M, order {order}")
    report.checks.append(compare("M from equation = M from table", M, Mt))
    report.checks.append(
        compare(
            "P0 = xP0Q + xyP1Q - xP0(x,0)Q(x,0) + xyP0R + xyP1R + P0(x,0)",
            P0,
            shift(P0 * Q, 1) + shift(P1 * Q, 1, 1) - shift(P00 * Q0, 1)
            + shift(P0 * R, 1, 1) + shift(P1 * R, 1, 1) + P00,
        )
    )
    report.checks.append(
        compare(
            "P1 = xP0Q + xP1Q + xP0R + xyP1R",
            P1,
            shift(P0 * Q + P1 * Q + P0 * R, 1) + shift(P1 * R, 1, 1),
        )
    )
    # doubled to keep every coefficient an integer
    report.checks.append(
        compare(
            "Q = yP0P1 + xyQR + Q(x,0) + (M - M(x,0) + P0^2 - P0(x,0)^2 + yP1^2 + xQ^2 - xQ(x,0)^2 + xyR^2)/2",
            2 * Q,
            2 * (shift(P0 * P1, 0, 1) + shift(Q * R, 1, 1) + Q0)
            + M - M0 + P0 * P0 - P00 * P00 + shift(P1 * P1, 0, 1)
            + shift(Q * Q, 1) - shift(Q0 * Q0, 1) + shift(R * R, 1, 1),
        )
    )
    report.checks.append(
        compare(
            "R = P0P1 + xQR + (P0^2 + yP1^2 + xQ^2 + xyR^2 + M)/2",
            2 * R,
            2 * (P0 * P1 + shift(Q * R, 1))
            + P0 * P0 + shift(P1 * P1, 0, 1) + shift(Q * Q, 1) + shift(R * R, 1, 1) + M,
        )
    )
    X = P0 * P1 + shift(Q * R, 1)
    report.checks.append(compare("Q - R = (y - 1)(P0P1 + xQR)", Q - R, shift(X, 0, 1) - X))
    # (1 - y) M = 2 (Q - y R) - (1 - y) T with T = P0^2 + yP1^2 + xQ^2 + xyR^2.
    # y M and y R can exceed the x-degree, so the identity is multiplied by x.
    T = P0 * P0 + shift(P1 * P1, 0, 1) + shift(Q * Q, 1) + shift(R * R, 1, 1)
    report.checks.append(
        compare(
            "x (1 - y) M = x (2 (Q - y R) - (1 - y) T)",
            shift(M, 1) - shift(M, 1, 1),
            2 * (shift(Q, 1) - shift(R, 1, 1)) - shift(T, 1) + shift(T, 1, 1),
        )
    )
    report.checks.append(
        compare(
            "M = P0(x^2,y^2) + yP1(x^2,y^2) + xQ(x^2,y^2) + xyR(x^2,y^2)",
            M,
            substitute_squares(P0) + shift(substitute_squares(P1), 0, 1)
            + shift(substitute_squares(Q), 1) + shift(substitute_squares(R), 1, 1),
        )
    )
    # hooks back to the one-variable parity system
    H = MultiSeries({(k, 0, 0): rec.wedderburn(2 * k) for k in range(N + 1)}, N)
    I = MultiSeries({(k, 0, 0): rec.wedderburn(2 * k + 1) for k in range(N + 1)}, N)
    G = solve(EquationId.G_gfe, N)
    report.checks.append(compare("H(x) = P0(x,0)", H, specialize(P0, "y", 0)))
    report.checks.append(compare("I(x) = Q(x,0)", I, specialize(Q, "y", 0)))
    report.checks.append(compare("G(x) = M(x,0)", G, specialize(M, "y", 0)))
    return report


def verify_gen3p(order: int) -> Check:
    """The rearranged three-variable equation holds for the solved series."""
    S = solve(EquationId.S_gen3, order)
    r = residual_gen3p(S)
    if r.is_zero():
        return Check("rearranged S equation residual", True)
    e, c = next(r.terms())
    return Check("rearranged S equation residual", False, (e, c, 0))
