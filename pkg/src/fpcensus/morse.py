"""Morse certificates and exceptional-coefficient scans.

A monic f of degree d is Morse when f' has d-1 distinct roots in the
algebraic closure and the d-1 critical values f(xi) are pairwise
distinct; this certifies that the splitting field of f(x) + t over
F_p(t) has the full symmetric Galois group, which is what lets the
census module identify factorization types with conjugacy classes.

Everything here stays inside F_p arithmetic: critical values are probed
through the resultant R(y) = Res_x(f'(x), y - f(x)), reconstructed by
evaluation and interpolation, and Morse-ness becomes squarefreeness of
R.  Root enumeration in extension fields appears only in test oracles.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .ffpoly import (
    Poly,
    _add,
    _mul,
    _neg,
    _resultant,
    _scale,
    _sub,
    is_squarefree,
    poly_gcd,
)

ADDITIVE_CONSTANT = "add-const"
LINEAR_TERM = "linear"
MONOMIAL = "monomial"
GENERAL = "general"


@dataclass(frozen=True)
class FamilyShape:
    """A one-parameter family f_a = base + a * step of monic polynomials.

    step is 1 for additive-constant families, x for linear-term ones,
    x**m for monomial families with 2 <= m <= d-1, and an arbitrary
    nonzero polynomial of degree < d in the general case.
    """

    kind: str
    base: Poly
    step: Poly

    def __post_init__(self):
        if not self.base.is_monic() or self.base.degree < 1:
            raise ValueError("family base must be monic of degree >= 1")
        if self.step.is_zero() or self.step.degree >= self.base.degree:
            raise ValueError("step must be nonzero of degree < deg(base)")
        self.base._require_same_field(self.step)

    @staticmethod
    def additive_constant(base: Poly) -> "FamilyShape":
        return FamilyShape(ADDITIVE_CONSTANT, base, base.mod.one())

    @staticmethod
    def linear_term(base: Poly) -> "FamilyShape":
        return FamilyShape(LINEAR_TERM, base, base.mod.x())

    @staticmethod
    def monomial(base: Poly, m: int) -> "FamilyShape":
        if not 2 <= m <= base.degree - 1:
            raise ValueError(f"monomial exponent must be in [2, {base.degree - 1}]")
        return FamilyShape(MONOMIAL, base, base.mod.x(m))

    @staticmethod
    def general(base: Poly, g: Poly) -> "FamilyShape":
        return FamilyShape(GENERAL, base, g)

    @property
    def degree(self) -> int:
        return self.base.degree

    def member(self, a: int) -> Poly:
        return self.base + self.step * a

    def describe(self) -> dict:
        from .ffpoly import poly_to_text

        return {
            "kind": self.kind,
            "base": poly_to_text(self.base),
            "step": poly_to_text(self.step),
        }


def _interpolate(xs: list, ys: list, p: int) -> list:
    """Lagrange interpolation through distinct nodes; O(n**2), n small."""
    acc: list = []
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        num = [1]
        den = 1
        for j, xj in enumerate(xs):
            if j != i:
                num = _mul(num, [(-xj) % p, 1], p)
                den = den * (xi - xj) % p
        term = _scale(num, yi * pow(den, -1, p) % p, p)
        acc = _add(acc, term, p)
    return acc


def _check_morse_preconditions(f: Poly) -> None:
    d = f.degree
    if not f.is_monic() or d < 2:
        raise ValueError("need a monic polynomial of degree >= 2")
    if f.p <= d + 1:
        raise ValueError(f"need p > d + 1 (p={f.p}, d={d})")


def critical_value_polynomial(f: Poly) -> Poly:
    """R(y) = Res_x(f'(x), y - f(x)), whose roots are the critical values.

    Reconstructed from the d evaluations R(y0) = Res(f', y0 - f); the
    degree is exactly d - 1 because p > d + 1 keeps deg f' = d - 1.
    """
    _check_morse_preconditions(f)
    p, d = f.p, f.degree
    fprime = list(f.derivative().coeffs)
    if len(fprime) - 1 != d - 1:
        raise ValueError("derivative degeneracy: deg f' < d - 1")
    neg_f = _neg(list(f.coeffs), p)
    xs, ys = [], []
    for y0 in range(d):
        probe = list(neg_f)
        probe[0] = (probe[0] + y0) % p
        xs.append(y0)
        ys.append(_resultant(fprime, probe, p))
    r = _interpolate(xs, ys, p)
    return Poly(f.mod, tuple(r))


def is_morse_polynomial(f: Poly) -> bool:
    """True iff f has d-1 distinct critical points with distinct values."""
    r = critical_value_polynomial(f)
    return r.degree == f.degree - 1 and is_squarefree(r)


def geyer_condition(f_circ: Poly, g: Poly) -> bool:
    """gcd(f_circ', g') = 1 and f_circ'' != 0.

    When this holds, all but a bounded number of constant-term
    specializations of f_circ make f/g Morse.
    """
    d = f_circ.degree
    if not f_circ.is_monic() or d < 2:
        raise ValueError("need a monic polynomial of degree >= 2")
    if g.degree < 1:
        raise ValueError("need deg g >= 1 (use the additive-constant path for g = 1)")
    if g.degree > d - 1:
        raise ValueError("need deg g <= d - 1")
    second = f_circ.derivative().derivative()
    if second.is_zero():
        return False
    return poly_gcd(f_circ.derivative(), g.derivative()).degree == 0


def is_morse_rational(f: Poly, g: Poly) -> bool:
    """Morse test for the ratio f/g via the numerator of its derivative.

    W = f'g - fg' must be squarefree of degree deg f + deg g - 1, and
    Res_x(W(x), y*g(x) - f(x)) must be squarefree in y of degree deg W.
    With g = 1 this reduces exactly to is_morse_polynomial.
    """
    _check_morse_preconditions(f)
    f._require_same_field(g)
    if g.is_zero():
        raise ValueError("denominator must be nonzero")
    if g.degree >= f.degree:
        raise ValueError("need deg f > deg g")
    p, d, e = f.p, f.degree, g.degree
    w = f.derivative() * g - f * g.derivative()
    expected = d + e - 1
    # the W clauses come first: a ratio that already fails them is plain
    # non-Morse even when f and g degenerately share a factor
    if w.degree != expected:
        return False
    if not is_squarefree(w):
        return False
    if poly_gcd(f, g).degree != 0:
        raise ValueError("need gcd(f, g) = 1")
    if p < expected + 1:
        raise ValueError("p too small to interpolate the critical-value resultant")
    w_raw = list(w.coeffs)
    g_raw = list(g.coeffs)
    xs, ys = [], []
    for y0 in range(expected + 1):
        probe = _sub(_scale(g_raw, y0, p), list(f.coeffs), p)
        xs.append(y0)
        ys.append(_resultant(w_raw, probe, p))
    r = Poly(f.mod, tuple(_interpolate(xs, ys, p)))
    return r.degree == expected and is_squarefree(r)


@dataclass(frozen=True)
class BadSetReport:
    """Exact exceptional set found by a full coefficient scan."""

    p: int
    d: int
    shape: str
    values: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.values)

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "d": self.d,
            "shape": self.shape,
            "bad": list(self.values),
            "size": self.size,
        }


def bad_set(base: Poly, shape: FamilyShape, scan_limit: int = 10**6) -> BadSetReport:
    """Brute-force scan for the coefficients that break the Morse certificate.

    linear shape: scan s, flag s with base + s*x not Morse.
    general/monomial shape: scan the constant term a0, flag a0 where
    f/step fails the rational Morse test (including gcd degeneracies);
    the monomial scan additionally requires a nonzero linear coefficient.
    """
    p = base.p
    d = base.degree
    if p > scan_limit:
        raise ValueError(f"scan bound exceeded: p={p} > {scan_limit}")
    if p <= d + 1:
        raise ValueError("need p > d + 1")
    bad = []
    if shape.kind == LINEAR_TERM:
        x = base.mod.x()
        for s in range(p):
            if not is_morse_polynomial(base + x * s):
                bad.append(s)
    elif shape.kind in (MONOMIAL, GENERAL):
        if shape.kind == MONOMIAL and base.coefficient(1) == 0:
            raise ValueError("monomial scan needs a nonzero linear coefficient")
        body = list(base.coeffs)
        for a0 in range(p):
            body[0] = a0
            candidate = Poly(base.mod, tuple(body))
            if poly_gcd(candidate, shape.step).degree != 0:
                bad.append(a0)
            elif not is_morse_rational(candidate, shape.step):
                bad.append(a0)
    else:
        raise ValueError(f"no scanned coefficient for shape kind {shape.kind!r}")
    label = shape.kind
    if shape.kind == MONOMIAL:
        label = f"{MONOMIAL}:{shape.step.degree}"
    return BadSetReport(p, d, label, tuple(bad))


def decomposition_witness(f: Poly, m: int) -> Optional[Poly]:
    """g with f(x) = g(x**m) when every nonzero exponent is divisible by m."""
    if m < 2:
        raise ValueError("m must be >= 2")
    if any(c and i % m for i, c in enumerate(f.coeffs)):
        return None
    return Poly(f.mod, tuple(f.coeffs[::m]))
