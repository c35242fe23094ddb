"""Exact arithmetic in F_p and in F_p[x].

Polynomials are dense coefficient sequences: ``coeffs[i]`` holds the
coefficient of ``x**i``, every coefficient lies in ``[0, p)``, and the last
stored coefficient is nonzero (the zero polynomial stores an empty tuple).
All values are immutable; every operation is pure.

The functions prefixed with an underscore are the raw kernels working on
plain ``list[int]`` coefficient vectors.  They are shared with the scan
loops in the statistics modules, where wrapping every intermediate value
in a Poly would dominate the runtime.

Field-multiplication counting: a counter can be attached to the current
context with :func:`count_field_mults`.  Kernels charge the schoolbook
dense cost (``len(f) * len(g)`` for a product, ``deg g`` per reduction
step, one per quotient coefficient), so reported counts do not depend on
coefficient sparsity.  Inversions go through extended gcd and are not
counted as multiplications.
"""

from __future__ import annotations

import itertools
from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass, field


class ModulusMismatch(ValueError):
    """Operands live over different prime fields."""


@dataclass
class MultCounter:
    total: int = 0


_ACTIVE_COUNTER: ContextVar[MultCounter | None] = ContextVar(
    "fpcensus_field_mults", default=None
)


@contextmanager
def count_field_mults():
    """Attach a fresh field-multiplication counter to the current context."""
    counter = MultCounter()
    token = _ACTIVE_COUNTER.set(counter)
    try:
        yield counter
    finally:
        _ACTIVE_COUNTER.reset(token)


def _tick(n: int) -> None:
    counter = _ACTIVE_COUNTER.get()
    if counter is not None:
        counter.total += n


# Deterministic Miller-Rabin witnesses, sufficient for all n < 3.3 * 10^24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for n < 2**63."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class PrimeModulus:
    """An odd prime p < 2**63; the field F_p all arithmetic runs over."""

    p: int

    def __post_init__(self):
        if not isinstance(self.p, int):
            raise ValueError("modulus must be an integer")
        if self.p < 3:
            raise ValueError(f"modulus must be >= 3, got {self.p}")
        if self.p >= 2**63:
            raise ValueError("modulus must be < 2**63")
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    def poly(self, coeffs) -> "Poly":
        """Build a polynomial from low-degree-first coefficients."""
        return Poly.make(self, coeffs)

    def x(self, degree: int = 1) -> "Poly":
        """The monomial x**degree."""
        if degree < 0:
            raise ValueError("degree must be >= 0")
        return Poly(self, (0,) * degree + (1,))

    def zero(self) -> "Poly":
        return Poly(self, ())

    def one(self) -> "Poly":
        return Poly(self, (1,))

    def inv(self, a: int) -> int:
        return pow(a, -1, self.p)


def _trim(c: list) -> list:
    n = len(c)
    while n and c[n - 1] == 0:
        n -= 1
    del c[n:]
    return c


def _add(a: list, b: list, p: int) -> list:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, v in enumerate(b):
        out[i] = (out[i] + v) % p
    return _trim(out)


def _sub(a: list, b: list, p: int) -> list:
    out = list(a)
    if len(out) < len(b):
        out.extend(0 for _ in range(len(b) - len(out)))
    for i, v in enumerate(b):
        out[i] = (out[i] - v) % p
    return _trim(out)


def _neg(a: list, p: int) -> list:
    return [(-v) % p for v in a]


def _scale(a: list, k: int, p: int) -> list:
    k %= p
    if k == 0:
        return []
    _tick(len(a))
    return _trim([v * k % p for v in a])


def _mul(a: list, b: list, p: int) -> list:
    if not a or not b:
        return []
    _tick(len(a) * len(b))
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _trim([v % p for v in out])


def _divrem(a: list, b: list, p: int) -> tuple[list, list]:
    """Quotient and remainder; b must be nonzero."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero polynomial")
    r = list(a)
    db = len(b) - 1
    if len(r) <= db:
        return [], _trim(r)
    inv_lc = 1 if b[db] == 1 else pow(b[db], -1, p)
    q = [0] * (len(r) - db)
    steps = 0
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i] % p
        if c:
            steps += 1
            c = c * inv_lc % p
            q[i - db] = c
            for j in range(db):
                r[i - db + j] = (r[i - db + j] - c * b[j]) % p
            r[i] = 0
    _tick(steps * (db + 1))
    return _trim(q), _trim(r[:db])


def _rem(a: list, b: list, p: int) -> list:
    return _divrem(a, b, p)[1]


def _gcd(a: list, b: list, p: int) -> list:
    """Monic gcd; at least one input nonzero."""
    a, b = list(a), list(b)
    while b:
        a, b = b, _rem(a, b, p)
    if not a:
        raise ZeroDivisionError("gcd of two zero polynomials")
    if a[-1] != 1:
        a = _scale(a, pow(a[-1], -1, p), p)
    return a


def _deriv(a: list, p: int) -> list:
    return _trim([i * v % p for i, v in enumerate(a)][1:])


def _eval(a: list, x: int, p: int) -> int:
    acc = 0
    for v in reversed(a):
        acc = (acc * x + v) % p
    if len(a) > 1:
        _tick(len(a) - 1)
    return acc


def _powmod(base: list, e: int, f: list, p: int) -> list:
    """base**e reduced mod f, square-and-multiply from the high bit."""
    if e < 0:
        raise ValueError("negative exponent")
    if e == 0:
        return _rem([1], f, p)
    t = _rem(base, f, p)
    acc = t
    for bit in bin(e)[3:]:
        acc = _rem(_mul(acc, acc, p), f, p)
        if bit == "1":
            acc = _rem(_mul(acc, t, p), f, p)
    return acc


def _compose_mod(g: list, h: list, f: list, p: int) -> list:
    """g(h(x)) reduced mod f, by Horner over polynomial coefficients."""
    acc: list = []
    for c in reversed(g):
        acc = _rem(_mul(acc, h, p), f, p)
        if c:
            acc = _add(acc, [c], p)
    return acc


def _resultant(a: list, b: list, p: int) -> int:
    """Res(a, b) = lc(a)**deg(b) * prod b(alpha) over roots alpha of a.

    Euclidean remainder scheme with the degree/leading-coefficient
    corrections; no fractions appear since F_p is a field.
    """
    if not a or not b:
        raise ZeroDivisionError("resultant of a zero polynomial")
    if len(a) == 1:
        return pow(a[0], len(b) - 1, p)
    res = 1
    while True:
        if len(b) == 1:
            return res * pow(b[0], len(a) - 1, p) % p
        r = _rem(a, b, p)
        if not r:
            return 0
        da, db, dr = len(a) - 1, len(b) - 1, len(r) - 1
        res = res * pow(-1, da * db, p) % p
        res = res * pow(b[db], da - dr, p) % p
        a, b = b, r


@dataclass(frozen=True)
class Poly:
    """Immutable dense polynomial over F_p, low-degree-first coefficients."""

    mod: PrimeModulus
    coeffs: tuple[int, ...]

    @staticmethod
    def make(mod: PrimeModulus, coeffs) -> "Poly":
        p = mod.p
        c = [int(v) % p for v in coeffs]
        return Poly(mod, tuple(_trim(c)))

    @property
    def p(self) -> int:
        return self.mod.p

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def leading_coefficient(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coefficient(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def _require_same_field(self, other: "Poly") -> None:
        if self.mod.p != other.mod.p:
            raise ModulusMismatch(
                f"mixed moduli {self.mod.p} and {other.mod.p}"
            )

    def __add__(self, other):
        other = self._coerce(other)
        self._require_same_field(other)
        return Poly(self.mod, tuple(_add(list(self.coeffs), list(other.coeffs), self.p)))

    def __radd__(self, other):
        return self.__add__(other)

    def __sub__(self, other):
        other = self._coerce(other)
        self._require_same_field(other)
        return Poly(self.mod, tuple(_sub(list(self.coeffs), list(other.coeffs), self.p)))

    def __rsub__(self, other):
        return self._coerce(other).__sub__(self)

    def __neg__(self):
        return Poly(self.mod, tuple(_neg(list(self.coeffs), self.p)))

    def __mul__(self, other):
        if isinstance(other, int):
            return Poly(self.mod, tuple(_scale(list(self.coeffs), other, self.p)))
        self._require_same_field(other)
        return Poly(self.mod, tuple(_mul(list(self.coeffs), list(other.coeffs), self.p)))

    def __rmul__(self, other):
        return self.__mul__(other)

    def __divmod__(self, other):
        q, r = poly_divrem(self, other)
        return q, r

    def __floordiv__(self, other):
        return poly_divrem(self, other)[0]

    def __mod__(self, other):
        return poly_divrem(self, other)[1]

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, int):
            return Poly.make(self.mod, [other])
        raise TypeError(f"cannot combine Poly with {type(other).__name__}")

    def derivative(self) -> "Poly":
        return Poly(self.mod, tuple(_deriv(list(self.coeffs), self.p)))

    def evaluate(self, x: int) -> int:
        return _eval(self.coeffs, x % self.p, self.p)

    def monic(self) -> "Poly":
        if self.is_zero():
            raise ValueError("cannot normalize the zero polynomial")
        if self.is_monic():
            return self
        return self * self.mod.inv(self.coeffs[-1])

    def shift_argument(self, c: int) -> "Poly":
        """The substituted polynomial f(x + c)."""
        p = self.p
        c %= p
        if c == 0:
            return self
        acc: list = []
        for v in reversed(self.coeffs):
            acc = _mul(acc, [c, 1], p)
            if v:
                acc = _add(acc, [v], p)
        return Poly(self.mod, tuple(acc))

    def __str__(self) -> str:
        return poly_to_text(self)


def poly_divrem(f: Poly, g: Poly) -> tuple[Poly, Poly]:
    """Division with remainder: f = q*g + r, deg r < deg g."""
    f._require_same_field(g)
    if g.is_zero():
        raise ZeroDivisionError("polynomial division by zero polynomial")
    q, r = _divrem(list(f.coeffs), list(g.coeffs), f.p)
    return Poly(f.mod, tuple(q)), Poly(f.mod, tuple(r))


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic greatest common divisor."""
    f._require_same_field(g)
    if f.is_zero() and g.is_zero():
        raise ZeroDivisionError("gcd of two zero polynomials")
    return Poly(f.mod, tuple(_gcd(list(f.coeffs), list(g.coeffs), f.p)))


def frobenius_power(f: Poly, k: int) -> Poly:
    """x**(p**k) mod f, by k successive p-th powerings.

    Cost is O(deg(f)**2 * log(p) * k) field multiplications under the
    dense schoolbook model; attach :func:`count_field_mults` to observe
    the realized count.
    """
    if not f.is_monic() or f.degree < 1:
        raise ValueError("modulus must be monic of degree >= 1")
    if k < 1:
        raise ValueError("k must be >= 1")
    p = f.p
    fr = list(f.coeffs)
    t = _rem([0, 1], fr, p)
    for _ in range(k):
        t = _powmod(t, p, fr, p)
    return Poly(f.mod, tuple(t))


def resultant(f: Poly, g: Poly) -> int:
    """Res(f, g) under the convention lc(f)**deg(g) * prod g(alpha)."""
    f._require_same_field(g)
    if f.is_zero() or g.is_zero():
        raise ZeroDivisionError("resultant of a zero polynomial")
    return _resultant(list(f.coeffs), list(g.coeffs), f.p)


def discriminant(f: Poly) -> int:
    """disc(f), via (-1)**(d(d-1)/2) * Res(f, f') * lc**(d - 2 - deg f').

    The exponent on the leading coefficient keeps the root-product
    definition valid even when p divides deg(f) and f' drops degree;
    an identically-zero derivative means f is a p-th power, disc = 0.
    """
    d = f.degree
    if d < 2:
        raise ValueError("discriminant needs degree >= 2")
    fp = f.derivative()
    if fp.is_zero():
        return 0
    p = f.p
    res = resultant(f, fp)
    lc = f.leading_coefficient()
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    return sign * res * pow(lc, d - 2 - fp.degree, p) % p


def is_squarefree(f: Poly) -> bool:
    """True iff gcd(f, f') = 1; an inseparable f (f' = 0) is not squarefree."""
    if f.is_zero():
        raise ValueError("squarefreeness of the zero polynomial is undefined")
    if f.degree == 0:
        return True
    fp = f.derivative()
    if fp.is_zero():
        return False
    return poly_gcd(f, fp).degree == 0


def poly_to_text(f: Poly) -> str:
    """Serialize as ``p:<modulus>;<c0>,<c1>,...`` (lowest degree first)."""
    coeffs = f.coeffs if f.coeffs else (0,)
    return f"p:{f.p};" + ",".join(str(c) for c in coeffs)


def poly_from_text(s: str) -> Poly:
    """Parse the ``p:<modulus>;<c0>,...`` text form."""
    s = s.strip()
    if not s.startswith("p:"):
        raise ValueError(f"bad polynomial literal {s!r}")
    head, _, tail = s[2:].partition(";")
    if not tail:
        raise ValueError(f"bad polynomial literal {s!r}: missing coefficients")
    try:
        p = int(head)
        coeffs = [int(c) for c in tail.split(",")]
    except ValueError as exc:
        raise ValueError(f"bad polynomial literal {s!r}") from exc
    if any(c < 0 or c >= p for c in coeffs):
        raise ValueError(f"coefficients out of range [0, {p}) in {s!r}")
    return Poly.make(PrimeModulus(p), coeffs)


def monic_polys(mod: PrimeModulus, degree: int):
    """Iterate all monic polynomials of the exact given degree."""
    if degree < 0:
        raise ValueError("degree must be >= 0")
    for lower in itertools.product(range(mod.p), repeat=degree):
        yield Poly(mod, tuple(lower) + (1,))
