"""Irreducibility testing and factorization over F_p[x].

The deterministic pieces (Rabin's criterion, squarefree decomposition,
distinct-degree slicing) carry all of the statistics workload; the
randomized equal-degree splitting is only reached through
:func:`full_factorization`, whose random stream is derived from
``(p, coefficients, seed)`` so results are reproducible everywhere.
"""

from __future__ import annotations

import hashlib
import math
import random
from dataclasses import dataclass

from .ffpoly import (
    Poly,
    PrimeModulus,
    _compose_mod,
    _divrem,
    _gcd,
    _powmod,
    _rem,
    _sub,
    _trim,
)


@dataclass(frozen=True)
class FactorizationType:
    """Nondecreasing degree multiset of the irreducible factors."""

    degrees: tuple[int, ...]

    def __post_init__(self):
        if any(d < 1 for d in self.degrees):
            raise ValueError("factor degrees must be positive")
        if any(a > b for a, b in zip(self.degrees, self.degrees[1:])):
            raise ValueError("degrees must be nondecreasing")

    @staticmethod
    def of(parts) -> "FactorizationType":
        return FactorizationType(tuple(sorted(parts)))

    @property
    def total_degree(self) -> int:
        return sum(self.degrees)

    def __str__(self) -> str:
        return "(" + ",".join(str(d) for d in self.degrees) + ")"


@dataclass(frozen=True)
class Factorization:
    """Complete factorization: unit * prod(factor**exponent)."""

    mod: PrimeModulus
    unit: int
    factors: tuple[tuple[Poly, int], ...]

    def reconstruct(self) -> Poly:
        acc = self.mod.poly([self.unit])
        for poly, exp in self.factors:
            for _ in range(exp):
                acc = acc * poly
        return acc

    def type(self) -> FactorizationType:
        parts = []
        for poly, exp in self.factors:
            parts.extend([poly.degree] * exp)
        return FactorizationType.of(parts)

    def to_json(self) -> list:
        from .ffpoly import poly_to_text

        return [{"poly": poly_to_text(f), "exp": e} for f, e in self.factors]


def _prime_divisors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _rabin_raw(coeffs: list, p: int) -> bool:
    """Rabin's criterion on a monic coefficient vector of degree >= 1.

    x**(p**d) = x mod f together with gcd(x**(p**(d/q)) - x, f) = 1 for
    every prime q | d.  Frobenius iterates beyond the first are reached
    by modular composition, so the p-dependent cost stays at the single
    x**p computation.
    """
    d = len(coeffs) - 1
    if d == 1:
        return True
    x_raw = [0, 1]
    powers = {1: _powmod(x_raw, p, coeffs, p)}

    def frob(k: int) -> list:
        if k not in powers:
            half = frob(k // 2)
            t = _compose_mod(half, half, coeffs, p)
            if k % 2:
                t = _compose_mod(powers[1], t, coeffs, p)
            powers[k] = t
        return powers[k]

    for q in _prime_divisors(d):
        u = _sub(frob(d // q), x_raw, p)
        if not u:
            return False
        if len(_gcd(coeffs, u, p)) > 1:
            return False
    return frob(d) == x_raw


def rabin_irreducible(f: Poly) -> bool:
    """True iff the monic f of degree >= 1 is irreducible over F_p."""
    if f.is_zero() or f.degree < 1:
        raise ValueError("need degree >= 1")
    if not f.is_monic():
        raise ValueError("need a monic polynomial")
    return _rabin_raw(list(f.coeffs), f.p)


def _pth_root_raw(coeffs: list, p: int) -> list:
    # over F_p the compressed coefficients are their own p-th roots
    return list(coeffs[::p])


def _squarefree_decomposition_raw(coeffs: list, p: int) -> list[tuple[list, int]]:
    """Musser's iteration adapted to characteristic p.

    Returns pairwise-coprime squarefree monic components with their
    multiplicities; the f' = 0 branch recurses on the p-th root.
    """
    out: list[tuple[list, int]] = []

    def walk(g: list, mult: int) -> None:
        if len(g) - 1 == 0:
            return
        gp = _trim([i * v % p for i, v in enumerate(g)][1:])
        if not gp:
            walk(_pth_root_raw(g, p), mult * p)
            return
        c = _gcd(g, gp, p)
        w = _divquo(g, c, p)
        i = 1
        while len(w) - 1 > 0:
            y = _gcd(w, c, p)
            z = _divquo(w, y, p)
            if len(z) - 1 > 0:
                out.append((z, mult * i))
            w = y
            c = _divquo(c, y, p)
            i += 1
        if len(c) - 1 > 0:
            walk(_pth_root_raw(c, p), mult * p)

    walk(coeffs, 1)
    return out


def _divquo(a: list, b: list, p: int) -> list:
    q, r = _divrem(a, b, p)
    if r:
        raise ArithmeticError("exact division expected")
    return q


def _ddf_slices_raw(coeffs: list, p: int) -> list[tuple[int, list]]:
    """Distinct-degree slices (k, product of irreducibles of degree k).

    Input must be squarefree and monic.  The slice degree divided by k
    is the factor count, so factorization types never need the
    equal-degree stage.
    """
    out = []
    g = list(coeffs)
    h = _rem([0, 1], g, p)
    k = 0
    while len(g) - 1 > 0:
        k += 1
        if 2 * k > len(g) - 1:
            out.append((len(g) - 1, g))
            break
        h = _powmod(h, p, g, p)
        u = _sub(h, [0, 1], p)
        d = g if not u else _gcd(g, u, p)
        if len(d) - 1 > 0:
            out.append((k, d))
            g = _divquo(g, d, p)
            h = _rem(h, g, p)
    return out


def _type_parts_raw(coeffs: list, p: int) -> list[int]:
    parts: list[int] = []
    for comp, mult in _squarefree_decomposition_raw(coeffs, p):
        for k, slc in _ddf_slices_raw(comp, p):
            parts.extend([k] * (((len(slc) - 1) // k) * mult))
    parts.sort()
    return parts


def factorization_type(f: Poly) -> FactorizationType:
    """Degree multiset of the full factorization, with multiplicity."""
    if not f.is_monic():
        raise ValueError("need a monic polynomial")
    if f.degree < 1:
        raise ValueError("need degree >= 1")
    return FactorizationType(tuple(_type_parts_raw(list(f.coeffs), f.p)))


def squarefree_decomposition(f: Poly) -> list[tuple[Poly, int]]:
    """Pairwise-coprime squarefree components with multiplicities."""
    if not f.is_monic():
        raise ValueError("need a monic polynomial")
    return [
        (Poly(f.mod, tuple(comp)), mult)
        for comp, mult in _squarefree_decomposition_raw(list(f.coeffs), f.p)
    ]


def _derive_stream(p: int, coeffs, seed: int) -> random.Random:
    tag = f"{p}|{','.join(str(c) for c in coeffs)}|{seed}".encode()
    return random.Random(int.from_bytes(hashlib.sha256(tag).digest()[:16], "big"))


def _equal_degree_split_raw(g: list, k: int, p: int, rng: random.Random) -> list[list]:
    """Cantor-Zassenhaus random-gcd splitting of a degree-k slice."""
    found: list[list] = []
    stack = [g]
    exp = (p**k - 1) // 2
    while stack:
        h = stack.pop()
        if len(h) - 1 == k:
            found.append(h)
            continue
        while True:
            u = _trim([rng.randrange(p) for _ in range(len(h) - 1)])
            if len(u) - 1 < 1:
                continue
            w = _sub(_powmod(u, exp, h, p), [1], p)
            if not w:
                continue
            d = _gcd(h, w, p)
            if 0 < len(d) - 1 < len(h) - 1:
                stack.append(d)
                stack.append(_divquo(h, d, p))
                break
    return found


def full_factorization(f: Poly, seed: int = 0) -> Factorization:
    """Complete factorization with reproducible equal-degree splitting.

    The random stream is derived from (p, coefficients, seed), so two
    runs with the same inputs agree exactly, regardless of scheduling.
    Every emitted factor is re-verified with rabin_irreducible.
    """
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    p = f.p
    unit = f.leading_coefficient()
    monic = f.monic()
    rng = _derive_stream(p, f.coeffs, seed)
    factors: list[tuple[Poly, int]] = []
    for comp, mult in _squarefree_decomposition_raw(list(monic.coeffs), p):
        for k, slc in _ddf_slices_raw(comp, p):
            for irr in _equal_degree_split_raw(slc, k, p, rng):
                factors.append((Poly(f.mod, tuple(irr)), mult))
    factors.sort(key=lambda fe: (fe[0].degree, fe[0].coeffs))
    for poly, _ in factors:
        if not _rabin_raw(list(poly.coeffs), p):
            raise AssertionError(f"factor {poly} failed the irreducibility recheck")
    return Factorization(f.mod, unit, tuple(factors))


def moebius(f: Poly) -> int:
    """Function-field Moebius: 0 unless squarefree, else (-1)**#factors.

    The squarefree fast path counts factors from the distinct-degree
    slice degrees alone; no splitting happens here.
    """
    if not f.is_monic():
        raise ValueError("need a monic polynomial")
    if f.degree == 0:
        return 1
    return _moebius_raw(list(f.coeffs), f.p)


def _moebius_raw(coeffs: list, p: int) -> int:
    gp = _trim([i * v % p for i, v in enumerate(coeffs)][1:])
    if not gp:
        return 0
    if len(_gcd(coeffs, gp, p)) > 1:
        return 0
    count = 0
    for k, slc in _ddf_slices_raw(coeffs, p):
        count += (len(slc) - 1) // k
    return -1 if count % 2 else 1


def divisor_function(f: Poly, r: int) -> int:
    """Number of ordered r-tuples of monic polynomials with product f."""
    if r < 2:
        raise ValueError("r must be >= 2")
    if f.is_zero() or not f.is_monic():
        raise ValueError("need a monic nonzero polynomial")
    if f.degree == 0:
        return 1
    return _divisor_function_raw(list(f.coeffs), r, f.p)


def _divisor_function_raw(coeffs: list, r: int, p: int) -> int:
    total = 1
    for comp, mult in _squarefree_decomposition_raw(coeffs, p):
        nfactors = 0
        for k, slc in _ddf_slices_raw(comp, p):
            nfactors += (len(slc) - 1) // k
        total *= math.comb(mult + r - 1, r - 1) ** nfactors
    return total
