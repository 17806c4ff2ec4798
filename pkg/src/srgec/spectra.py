"""Closed-form SRG spectra, parameter transforms and bound predicates.

All arithmetic is exact: integers, fractions.Fraction, and SqrtExt
elements p + q*sqrt(D) for the half-integer (conference) eigenvalue case.
Floating point appears only in ferber_jain_holds and the
cariolaro_hilton threshold, each with a 1e-12 relative comparison margin.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import (
    CompleteGraphError,
    InfeasibleError,
    NotApplicableError,
    ParameterRangeError,
)
from .graph import SrgParams

FLOAT_MARGIN = 1e-12


# ---------------------------------------------------------------------------
# exact arithmetic in Q(sqrt(D))
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SqrtExt:
    """Exact p + q*sqrt(d) with rational p, q and non-square d > 0."""

    p: Fraction
    q: Fraction
    d: int

    def _lift(self, other) -> "SqrtExt":
        if isinstance(other, SqrtExt):
            if other.d != self.d:
                raise ValueError("mixed radicands")
            return other
        return SqrtExt(Fraction(other), Fraction(0), self.d)

    def __add__(self, other):
        o = self._lift(other)
        return SqrtExt(self.p + o.p, self.q + o.q, self.d)

    __radd__ = __add__

    def __neg__(self):
        return SqrtExt(-self.p, -self.q, self.d)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        return SqrtExt(
            self.p * o.p + self.q * o.q * self.d,
            self.p * o.q + self.q * o.p,
            self.d,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, SqrtExt):
            raise TypeError("division by SqrtExt not needed")
        return SqrtExt(self.p / other, self.q / other, self.d)

    def __pow__(self, exponent: int):
        out = SqrtExt(Fraction(1), Fraction(0), self.d)
        for _ in range(exponent):
            out = out * self
        return out

    def sign(self) -> int:
        p, q = self.p, self.q
        if q == 0:
            return (p > 0) - (p < 0)
        if p == 0:
            return 1 if q > 0 else -1
        if p > 0 and q > 0:
            return 1
        if p < 0 and q < 0:
            return -1
        # opposite signs: compare p^2 against q^2 d (equality impossible,
        # sqrt(d) is irrational)
        big_p = p * p > q * q * self.d
        if p > 0:
            return 1 if big_p else -1
        return -1 if big_p else 1

    def __lt__(self, other):
        return (self - self._lift(other)).sign() < 0

    def __le__(self, other):
        return (self - self._lift(other)).sign() <= 0

    def __gt__(self, other):
        return (self - self._lift(other)).sign() > 0

    def __ge__(self, other):
        return (self - self._lift(other)).sign() >= 0

    def __float__(self):
        return float(self.p) + float(self.q) * math.sqrt(self.d)

    def __floor__(self):
        # write as (a + b*sqrt(d)) / c with integers a, b and c > 0
        c = math.lcm(self.p.denominator, self.q.denominator)
        a = self.p.numerator * (c // self.p.denominator)
        b = self.q.numerator * (c // self.q.denominator)
        if b == 0:
            return a // c
        root = math.isqrt(b * b * self.d)
        irr = root if b > 0 else -root - 1
        return (a + irr) // c

    def __str__(self):
        return f"({self.p} + {self.q}*sqrt({self.d}))"


Eigenvalue = Union[Fraction, SqrtExt]


def _ev_str(x: Eigenvalue) -> str:
    if isinstance(x, SqrtExt):
        return str(x)
    return str(x) if x.denominator != 1 else str(x.numerator)


# ---------------------------------------------------------------------------
# spectrum
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues k > r > s of a strongly regular graph with multiplicities.

    r has multiplicity f, s multiplicity g; 1 + f + g = n and
    k + f*r + g*s = 0. ``disc`` is (lam-mu)^2 + 4(k-mu).
    """

    params: SrgParams
    r: Eigenvalue
    s: Eigenvalue
    f: int
    g: int
    disc: int

    @property
    def integral(self) -> bool:
        return isinstance(self.r, Fraction)

    def r_float(self) -> float:
        return float(self.r)

    def s_float(self) -> float:
        return float(self.s)


def counting_identity_holds(p: SrgParams) -> bool:
    n, k, lam, mu = p
    return k * (k - lam - 1) == (n - k - 1) * mu


def srg_spectrum(p: SrgParams) -> Spectrum:
    """Closed-form eigenvalues and multiplicities; exact.

    Raises InfeasibleError when the multiplicities fail to be nonnegative
    integers (which includes violation of the counting identity).
    """
    n, k, lam, mu = p
    if not counting_identity_holds(p):
        raise InfeasibleError(f"counting identity fails for {tuple(p)}")
    disc = (lam - mu) ** 2 + 4 * (k - mu)
    if disc <= 0:
        raise InfeasibleError(f"nonpositive discriminant for {tuple(p)}")
    root = math.isqrt(disc)
    trace_term = 2 * k + (n - 1) * (lam - mu)
    if root * root == disc:
        r = Fraction(lam - mu + root, 2)
        s = Fraction(lam - mu - root, 2)
        f_frac = Fraction((n - 1) * root - trace_term, 2 * root)
        if f_frac.denominator != 1:
            raise InfeasibleError(f"non-integral multiplicities for {tuple(p)}")
        f = int(f_frac)
        if f < 0 or f > n - 1:
            raise InfeasibleError(f"bad multiplicity for {tuple(p)}")
        g = n - 1 - f
    else:
        # conference case: sqrt(disc) irrational forces the trace term to 0
        if trace_term != 0:
            raise InfeasibleError(f"irrational multiplicities for {tuple(p)}")
        if (n - 1) % 2:
            raise InfeasibleError(f"odd n-1 in conference case for {tuple(p)}")
        r = SqrtExt(Fraction(lam - mu, 2), Fraction(1, 2), disc)
        s = SqrtExt(Fraction(lam - mu, 2), Fraction(-1, 2), disc)
        f = g = (n - 1) // 2
    if g < 0:
        raise InfeasibleError(f"negative multiplicity for {tuple(p)}")
    return Spectrum(p, r, s, f, g, disc)


def complement_params(p: SrgParams) -> SrgParams:
    """Parameters of the complement; involution. Degenerate outputs are
    returned as-is (feasibility_check flags them)."""
    n, k, lam, mu = p
    return SrgParams(n, n - k - 1, n - 2 * k + mu - 2, n - 2 * k + lam)


@dataclass(frozen=True)
class FeasibilityReport:
    checks: tuple  # (name, passed, detail)

    @property
    def all_pass(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    def lines(self):
        return [f"{name}: {'pass' if ok else 'FAIL'} ({detail})"
                for name, ok, detail in self.checks]


def feasibility_check(p: SrgParams) -> FeasibilityReport:
    """Definition range, counting identity, multiplicity integrality, and
    the eigenvalue identity k + r*s = mu. Always returns a report."""
    n, k, lam, mu = p
    checks = []
    checks.append((
        "definition-range",
        0 < k < n - 1,
        f"0 < {k} < {n - 1}",
    ))
    checks.append((
        "counting-identity",
        counting_identity_holds(p),
        f"{k}*{k - lam - 1} = {k * (k - lam - 1)} vs {(n - k - 1)} * {mu} = {(n - k - 1) * mu}",
    ))
    try:
        spec = srg_spectrum(p)
        checks.append((
            "multiplicity-integrality",
            True,
            f"f={spec.f}, g={spec.g}",
        ))
        identity = spec.r * spec.s + k
        if isinstance(identity, SqrtExt):
            ok = (identity - mu).sign() == 0
            shown = str(identity)
        else:
            ok = identity == mu
            shown = _ev_str(identity)
        checks.append(("eigenvalue-identity", ok, f"k + r*s = {shown}"))
    except InfeasibleError as exc:
        checks.append(("multiplicity-integrality", False, str(exc)))
        checks.append(("eigenvalue-identity", False, "spectrum unavailable"))
    return FeasibilityReport(tuple(checks))


# ---------------------------------------------------------------------------
# closed-form family parameters
# ---------------------------------------------------------------------------

def triangular_params(m: int) -> SrgParams:
    if m < 4:
        raise ParameterRangeError("triangular parameters need m >= 4")
    return SrgParams(m * (m - 1) // 2, 2 * (m - 2), m - 2, 4)


def latin_square_params(m: int, t: int) -> SrgParams:
    if m < 2 or t < 0 or t > m - 1:
        raise ParameterRangeError("need m >= 2 and 0 <= t <= m-1")
    return SrgParams(
        m * m,
        (t + 2) * (m - 1),
        m - 2 + t * (t + 1),
        (t + 1) * (t + 2),
    )


def block_graph_params(m: int, ell: int) -> SrgParams:
    """Parameters of the block graph of a 2-(m, ell, 1) design."""
    if ell < 2 or m < ell:
        raise ParameterRangeError("need 2 <= ell <= m")
    if m == ell * ell - ell + 1:
        raise CompleteGraphError(
            f"2-({m},{ell},1) is a projective plane; block graph is complete"
        )
    n_num = m * (m - 1)
    n_den = ell * (ell - 1)
    k_num = ell * (m - ell)
    lam_num = m - 2 * ell + 1
    if n_num % n_den or k_num % (ell - 1) or lam_num % (ell - 1):
        raise InfeasibleError(f"non-integral block-graph parameters for ({m},{ell})")
    return SrgParams(
        n_num // n_den,
        k_num // (ell - 1),
        (ell - 1) ** 2 + lam_num // (ell - 1),
        ell * ell,
    )


# ---------------------------------------------------------------------------
# bounds and thresholds
# ---------------------------------------------------------------------------

def hoffman_coclique_bound(p: SrgParams):
    """n*s/(s-k), the ratio bound on coclique size; exact."""
    spec = srg_spectrum(p)
    n, k = p.n, p.k
    if isinstance(spec.s, SqrtExt):
        # n*s/(s-k): clear the radical from the denominator by the conjugate
        a, b, d = spec.s.p, spec.s.q, spec.s.d
        norm = (a - k) * (a - k) - b * b * d
        num = spec.s * SqrtExt(a - k, -b, d)
        return SqrtExt(n * num.p / norm, n * num.q / norm, d)
    return Fraction(n) * spec.s / (spec.s - k)


def eigenvalue_matching_bound(p: SrgParams) -> int:
    """floor((k - r + 1) / 2): guaranteed count of disjoint perfect
    matchings in a connected regular graph of even order."""
    spec = srg_spectrum(p)
    x = (p.k + 1 - spec.r) / 2 if isinstance(spec.r, SqrtExt) else Fraction(p.k + 1 - spec.r, 2)
    return math.floor(x)


def claw_bound_holds(p: SrgParams) -> bool:
    """r <= s(s+1)(mu+1)/2 - 1 (Neumaier's claw bound), exact."""
    spec = srg_spectrum(p)
    rhs = spec.s * (spec.s + 1) * (p.mu + 1) / 2 - 1
    return spec.r <= rhs


def mu_bound_holds(p: SrgParams) -> bool:
    """mu <= s^3 (2s + 3) (Neumaier's mu bound), exact, signed s."""
    spec = srg_spectrum(p)
    rhs = spec.s ** 3 * (2 * spec.s + 3)
    if isinstance(rhs, SqrtExt):
        return (rhs - p.mu).sign() >= 0
    return p.mu <= rhs


def ferber_jain_holds(p: SrgParams) -> bool:
    """max(r, -s) < k^0.9. Advisory only: the underlying asymptotic result
    needs n beyond an unspecified threshold, so this never certifies
    anything. Requires even n."""
    if p.n % 2:
        raise NotApplicableError("predicate is stated for even order only")
    spec = srg_spectrum(p)
    biggest = max(float(spec.r), -float(spec.s))
    return biggest < p.k ** 0.9 * (1 + FLOAT_MARGIN)


def power_inequalities(p: SrgParams) -> dict:
    """Informational: r < k^(6/7) and -s < (2k)^(6/7), compared exactly
    via seventh powers."""
    spec = srg_spectrum(p)
    if isinstance(spec.r, SqrtExt):
        r7 = spec.r ** 7
        s7 = (-spec.s) ** 7
        return {
            "r_lt_k_6_7": (r7 - p.k ** 6).sign() < 0,
            "neg_s_lt_2k_6_7": (s7 - (2 * p.k) ** 6).sign() < 0,
        }
    return {
        "r_lt_k_6_7": spec.r ** 7 < p.k ** 6,
        "neg_s_lt_2k_6_7": (-spec.s) ** 7 < (2 * p.k) ** 6,
    }


def high_degree_threshold(n: int, k: int) -> dict:
    """Two sufficient degree thresholds for 1-factorizability of regular
    graphs of even order: k >= 2*ceil(n/4) - 1 (asymptotic) and
    k >= 0.823n."""
    return {
        "csaba": k >= 2 * ((n + 3) // 4) - 1,
        "cariolaro_hilton": k >= 0.823 * n * (1 - FLOAT_MARGIN),
    }


def steiner_complement_threshold(m: int, ell: int) -> bool:
    """6*ell^2 <= m: the complement of the block graph of a 2-(m, ell, 1)
    design is then dense enough to be class 1 (even order assumed)."""
    if ell < 2:
        raise ParameterRangeError("need ell >= 2")
    return 6 * ell * ell <= m


# ---------------------------------------------------------------------------
# consolidated report
# ---------------------------------------------------------------------------

def bound_report(p: SrgParams) -> list:
    """Ordered (key, value) lines for the CLI spectrum command."""
    n, k, lam, mu = p
    rows = [("params", f"({n},{k},{lam},{mu})")]
    feas = feasibility_check(p)
    for name, ok, detail in feas.checks:
        rows.append((name, f"{'pass' if ok else 'fail'} [{detail}]"))
    try:
        spec = srg_spectrum(p)
    except InfeasibleError as exc:
        rows.append(("spectrum", f"infeasible: {exc}"))
        return rows
    rows.append(("eigenvalue-r", _ev_str(spec.r)))
    rows.append(("eigenvalue-s", _ev_str(spec.s)))
    rows.append(("multiplicity-f", str(spec.f)))
    rows.append(("multiplicity-g", str(spec.g)))
    bound = hoffman_coclique_bound(p)
    rows.append(("hoffman-coclique-bound", _ev_str(bound) if isinstance(bound, Fraction) else str(bound)))
    rows.append(("matching-bound", str(eigenvalue_matching_bound(p))))
    rows.append(("claw-bound", "holds" if claw_bound_holds(p) else "violated"))
    rows.append(("mu-bound", "holds" if mu_bound_holds(p) else "violated"))
    powers = power_inequalities(p)
    rows.append(("r-below-k^(6/7)", "true" if powers["r_lt_k_6_7"] else "false"))
    rows.append(("-s-below-(2k)^(6/7)", "true" if powers["neg_s_lt_2k_6_7"] else "false"))
    try:
        fj = "true" if ferber_jain_holds(p) else "false"
    except NotApplicableError:
        fj = "n/a (odd order)"
    rows.append(("ferber-jain", fj))
    thresholds = high_degree_threshold(n, k)
    rows.append(("csaba-threshold", "true" if thresholds["csaba"] else "false"))
    rows.append(("cariolaro-hilton-threshold", "true" if thresholds["cariolaro_hilton"] else "false"))
    return rows
