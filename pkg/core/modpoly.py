#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Residue Polynomials

Polynomials with coefficients modulo m (a prime p or p^2), their
factorization over the prime field, and the Frobenius defect
(f(x^p) - f(x)^p)/p used by the prime-power criterion.

Factorization is squarefree decomposition, distinct-degree factorization
through the Frobenius matrix, then Cantor-Zassenhaus equal-degree splitting
(trace map in characteristic 2) seeded from the input so results are
reproducible.
"""

import logging
import random
from functools import lru_cache

import numpy as np

from .errors import ArithmeticInvariantError, DomainError
from .intfactor import is_prime, prime_divisors
from .zpoly import IntPoly

logger = logging.getLogger(__name__)

_INT64_SAFE = 2 ** 62


def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _kronecker_mul(a, b, m):
    """
    Exact product of two residue vectors by packing them into big integers.
    """
    bound = (m - 1) ** 2 * min(len(a), len(b))
    width = (bound.bit_length() + 8) // 8
    packed_a = int.from_bytes(b"".join(c.to_bytes(width, "little") for c in a), "little")
    packed_b = int.from_bytes(b"".join(c.to_bytes(width, "little") for c in b), "little")
    size = len(a) + len(b) - 1
    raw = (packed_a * packed_b).to_bytes(size * width, "little")
    return [int.from_bytes(raw[i * width:(i + 1) * width], "little") % m for i in range(size)]


def _mul(a, b, m):
    if not a or not b:
        return []
    if (m - 1) ** 2 * min(len(a), len(b)) < _INT64_SAFE:
        product = np.convolve(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)) % m
        return _trim(product.tolist())
    return _trim(_kronecker_mul(a, b, m))


def _add(a, b, m):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % m
    return _trim(out)


def _sub(a, b, m):
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % m
    return _trim(out)


def _divmod(a, b, m):
    """
    Polynomial division; the leading coefficient of b must be a unit mod m.
    """
    if not b:
        raise DomainError("polynomial division by zero")
    db = len(b) - 1
    r = list(a)
    if len(r) - 1 < db:
        return [], r
    try:
        inv = pow(b[-1], -1, m)
    except ValueError:
        raise DomainError(f"leading coefficient {b[-1]} is not invertible modulo {m}") from None
    q = [0] * (len(r) - db)
    for shift in range(len(r) - 1 - db, -1, -1):
        c = r[shift + db] * inv % m
        if c == 0:
            continue
        q[shift] = c
        for j, bc in enumerate(b):
            r[shift + j] = (r[shift + j] - c * bc) % m
    return _trim(q), _trim(r[:db])


def _rem(a, b, m):
    if len(a) < len(b):
        return list(a)
    return _divmod(a, b, m)[1]


def _powmod(base, exponent, modulus, m):
    result = [1] if len(modulus) > 1 else []
    base = _rem(base, modulus, m)
    while exponent:
        if exponent & 1:
            result = _rem(_mul(result, base, m), modulus, m)
        exponent >>= 1
        if exponent:
            base = _rem(_mul(base, base, m), modulus, m)
    return result


class ModPoly:
    """
    Polynomial over Z/mZ, constant term first, coefficients in [0, m).
    """

    __slots__ = ("coeffs", "modulus")

    def __init__(self, coeffs, modulus):
        if modulus < 2:
            raise DomainError(f"modulus must be at least 2, got {modulus}")
        self.coeffs = tuple(_trim([int(c) % modulus for c in coeffs]))
        self.modulus = modulus

    @classmethod
    def from_intpoly(cls, f, modulus):
        return cls(f.coeffs, modulus)

    @classmethod
    def _raw(cls, coeffs, modulus):
        obj = cls.__new__(cls)
        obj.coeffs = tuple(coeffs)
        obj.modulus = modulus
        return obj

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self):
        return not self.coeffs

    def is_one(self):
        return self.coeffs == (1,)

    def monic(self):
        """
        Scale to leading coefficient 1.
        """
        if self.is_zero() or self.lc == 1:
            return self
        inv = pow(self.lc, -1, self.modulus)
        return ModPoly._raw([c * inv % self.modulus for c in self.coeffs], self.modulus)

    def to_intpoly(self):
        """
        Lift with coefficients in [0, m).
        """
        return IntPoly(self.coeffs)

    def _check(self, other):
        if isinstance(other, int):
            return ModPoly([other], self.modulus)
        if other.modulus != self.modulus:
            raise DomainError(f"modulus mismatch: {self.modulus} vs {other.modulus}")
        return other

    def __eq__(self, other):
        return isinstance(other, ModPoly) and self.modulus == other.modulus and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("ModPoly", self.modulus, self.coeffs))

    def __add__(self, other):
        other = self._check(other)
        return ModPoly._raw(_add(list(self.coeffs), list(other.coeffs), self.modulus), self.modulus)

    def __sub__(self, other):
        other = self._check(other)
        return ModPoly._raw(_sub(list(self.coeffs), list(other.coeffs), self.modulus), self.modulus)

    def __mul__(self, other):
        other = self._check(other)
        return ModPoly._raw(_mul(list(self.coeffs), list(other.coeffs), self.modulus), self.modulus)

    def __divmod__(self, other):
        other = self._check(other)
        q, r = _divmod(list(self.coeffs), list(other.coeffs), self.modulus)
        return ModPoly._raw(q, self.modulus), ModPoly._raw(r, self.modulus)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, exponent):
        result = ModPoly._raw([1], self.modulus)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def powmod(self, exponent, modulus_poly):
        """
        self^exponent reduced modulo modulus_poly (unit leading coefficient).
        """
        modulus_poly = self._check(modulus_poly)
        out = _powmod(list(self.coeffs), exponent, list(modulus_poly.coeffs), self.modulus)
        return ModPoly._raw(out, self.modulus)

    def derivative(self):
        m = self.modulus
        return ModPoly([i * c % m for i, c in enumerate(self.coeffs)][1:], m)

    def evaluate(self, a):
        result = 0
        for c in reversed(self.coeffs):
            result = (result * a + c) % self.modulus
        return result

    def sort_key(self):
        return (self.degree, self.coeffs)

    def render(self):
        return f"{IntPoly(self.coeffs).render()} (mod {self.modulus})"

    def __repr__(self):
        return f"ModPoly({self.render()!r})"


@lru_cache(maxsize=4096)
def _is_prime_modulus(m):
    return is_prime(m)


def _require_prime(f):
    if not _is_prime_modulus(f.modulus):
        raise DomainError(f"modulus {f.modulus} is not prime")


def gcd_mod_p(f, g):
    """
    Monic gcd over the prime field.

    Raises:
        DomainError: If the modulus is composite or both inputs are zero
    """
    _require_prime(f)
    g = f._check(g)
    if f.is_zero() and g.is_zero():
        raise DomainError("gcd of two zero polynomials")
    p = f.modulus
    a, b = list(f.coeffs), list(g.coeffs)
    while b:
        a, b = b, _rem(a, b, p)
    return ModPoly._raw(a, p).monic()


def _frobenius_matrix(f):
    """
    Rows x^(i*p) mod f for i < deg f, as a numpy array.
    """
    p, n = f.modulus, f.degree
    x_p = _powmod([0, 1], p, list(f.coeffs), p)
    dtype = np.int64 if n * (p - 1) ** 2 < _INT64_SAFE else object
    q_matrix = np.zeros((n, n), dtype=dtype)
    row = [1]
    for i in range(n):
        q_matrix[i, :len(row)] = row
        row = _rem(_mul(row, x_p, p), list(f.coeffs), p)
    return q_matrix


def _apply_frobenius(h, q_matrix, p):
    """
    h^p mod f, given the Frobenius matrix of f.
    """
    n = q_matrix.shape[0]
    vector = np.zeros(n, dtype=q_matrix.dtype)
    vector[:len(h)] = h
    return _trim([int(c) % p for c in vector.dot(q_matrix)])


def squarefree_decomposition(f):
    """
    Squarefree decomposition over the prime field.

    Args:
        f: Nonzero ModPoly with prime modulus

    Returns:
        List of (monic squarefree part, multiplicity), parts pairwise coprime
    """
    _require_prime(f)
    if f.is_zero():
        raise DomainError("squarefree decomposition of zero")
    p = f.modulus
    f = f.monic()
    if f.degree < 1:
        return []
    parts = []
    c = gcd_mod_p(f, f.derivative())
    w = f // c
    i = 1
    while not w.is_one():
        y = gcd_mod_p(w, c)
        part = w // y
        if not part.is_one():
            parts.append((part, i))
        w = y
        c = c // y
        i += 1
    if not c.is_one():
        root = ModPoly._raw(list(c.coeffs[::p]), p)
        for part, e in squarefree_decomposition(root):
            parts.append((part, e * p))
    return sorted(parts, key=lambda item: (item[1], item[0].sort_key()))


def distinct_degree_factorization(f):
    """
    Split a monic squarefree f into products of irreducibles of equal degree.

    Returns:
        List of (product, factor degree)
    """
    p = f.modulus
    if f.degree < 1:
        return []
    q_matrix = _frobenius_matrix(f)
    x = [0, 1]
    h = _rem(x, list(f.coeffs), p)
    rest = f
    result = []
    d = 1
    while rest.degree >= 2 * d:
        h = _apply_frobenius(h, q_matrix, p)
        g = gcd_mod_p(rest, ModPoly._raw(_sub(h, x, p), p))
        if not g.is_one():
            result.append((g, d))
            rest = rest // g
        d += 1
    if rest.degree > 0:
        result.append((rest, rest.degree))
    return result


def equal_degree_factorization(f, d):
    """
    Cantor-Zassenhaus splitting of a product of distinct irreducibles of
    degree d.
    """
    if f.degree == d:
        return [f]
    p = f.modulus
    rng = random.Random(hash((p, d) + f.coeffs))
    n = f.degree
    modulus = list(f.coeffs)
    while True:
        a = _trim([rng.randrange(p) for _ in range(n)])
        if len(a) < 2:
            continue
        if p == 2:
            term = list(a)
            b = list(a)
            for _ in range(d - 1):
                term = _rem(_mul(term, term, p), modulus, p)
                b = _add(b, term, p)
        else:
            b = _sub(_powmod(a, (p ** d - 1) // 2, modulus, p), [1], p)
        u = gcd_mod_p(f, ModPoly._raw(b, p))
        if 0 < u.degree < n:
            return equal_degree_factorization(u, d) + equal_degree_factorization(f // u, d)


def factor_mod_p(f):
    """
    Complete factorization over the prime field.

    Args:
        f: Nonzero ModPoly with prime modulus

    Returns:
        List of (monic irreducible, exponent) sorted by degree then
        coefficients
    """
    parts = squarefree_decomposition(f)
    result = []
    for part, e in parts:
        for product, d in distinct_degree_factorization(part):
            for g in equal_degree_factorization(product, d):
                result.append((g, e))
    return sorted(result, key=lambda item: item[0].sort_key())


def multiple_factors_mod_p(f):
    """
    Irreducible factors of f occurring with exponent at least 2.
    """
    result = []
    for part, e in squarefree_decomposition(f):
        if e < 2:
            continue
        for product, d in distinct_degree_factorization(part):
            for g in equal_degree_factorization(product, d):
                result.append((g, e))
    return sorted(result, key=lambda item: item[0].sort_key())


def is_irreducible_mod_p(f):
    """
    Rabin's irreducibility test.

    Raises:
        DomainError: If the modulus is composite or deg f < 1
    """
    _require_prime(f)
    if f.degree < 1:
        raise DomainError("irreducibility of a constant")
    f = f.monic()
    n = f.degree
    if n == 1:
        return True
    p = f.modulus
    q_matrix = _frobenius_matrix(f)
    x = [0, 1]
    powers = []
    h = _rem(x, list(f.coeffs), p)
    for _ in range(n):
        h = _apply_frobenius(h, q_matrix, p)
        powers.append(h)
    # powers[i] = x^(p^(i+1)) mod f
    if not gcd_mod_p(f, ModPoly._raw(_sub(powers[0], x, p), p)).is_one():
        return False
    if _rem(_sub(powers[n - 1], x, p), list(f.coeffs), p):
        return False
    for q in prime_divisors(n):
        g = gcd_mod_p(f, ModPoly._raw(_sub(powers[n // q - 1], x, p), p))
        if not g.is_one():
            return False
    return True


def is_composition_irreducible_mod_p(f, k):
    """
    Whether f(x^k) is irreducible modulo p, decided on f alone.

    For f irreducible of degree d with a root a in the field of q = p^d
    elements, f(x^k) is irreducible iff x^k - a is irreducible over that
    field: a is not an r-th power for any prime r | k, and q = 1 mod 4
    when 4 | k. Cost is a few exponentiations modulo f, independent of k.

    Raises:
        DomainError: If the modulus is composite, deg f < 1 or k < 1
    """
    if k < 1:
        raise DomainError(f"composition exponent must be positive, got {k}")
    if not is_irreducible_mod_p(f):
        return False
    f = f.monic()
    if f.coeffs[0] == 0:
        # f = x
        return k == 1
    p = f.modulus
    q = p ** f.degree
    if k % 4 == 0 and q % 4 != 1:
        return False
    x = ModPoly._raw([0, 1], p)
    for r in prime_divisors(k):
        if (q - 1) % r:
            return False
        if x.powmod((q - 1) // r, f).is_one():
            return False
    return True


def roots_mod_p(f):
    """
    Roots in the prime field with multiplicities, ascending.
    """
    roots = []
    for g, e in factor_mod_p(f):
        if g.degree == 1:
            roots.append(((-g.coeffs[0]) % f.modulus, e))
    return sorted(roots)


def splits_completely(f):
    """
    True iff every irreducible factor of f mod p is linear.
    """
    return all(g.degree == 1 for g, _ in factor_mod_p(f))


def _defect_reduced(f, p):
    """
    ((f(x^p) - f(x)^p) mod f) / p, using f(x)^p = 0 mod f.
    """
    m = p * p
    modulus = [c % m for c in f.coeffs]
    x_p = _powmod([0, 1], p, modulus, m)
    value = []
    for c in reversed(f.coeffs):
        value = _rem(_add(_mul(value, x_p, m), [c % m], m), modulus, m)
    return value


def _defect_full(f, p):
    """
    f(x^p) - f(x)^p with coefficients mod p^2.
    """
    m = p * p
    base = [c % m for c in f.coeffs]
    power = [1]
    exponent = p
    while exponent:
        if exponent & 1:
            power = _mul(power, base, m)
        exponent >>= 1
        if exponent:
            base = _mul(base, base, m)
    composed = [0] * (f.degree * p + 1)
    for i, c in enumerate(f.coeffs):
        composed[i * p] = c % m
    return _sub(composed, power, m)


def frobenius_defect(f, p, reduce_by_f=False):
    """
    M_p(x) = (f(x^p) - f(x)^p)/p reduced mod p, computed mod p^2.

    Args:
        f: Monic IntPoly
        p: Prime
        reduce_by_f: Return M_p mod f instead (same gcd with f mod p,
            degree < deg f, much cheaper for large p)

    Returns:
        ModPoly with modulus p

    Raises:
        DomainError: If f is not monic or p is not prime
        ArithmeticInvariantError: If p does not divide f(x^p) - f(x)^p
    """
    if not f.is_monic():
        raise DomainError(f"Frobenius defect needs a monic polynomial, got {f.render()}")
    if not _is_prime_modulus(p):
        raise DomainError(f"{p} is not prime")
    difference = _defect_reduced(f, p) if reduce_by_f else _defect_full(f, p)
    if any(c % p for c in difference):
        raise ArithmeticInvariantError(f"Frobenius defect of {f.render()} at {p} is not divisible by {p}")
    return ModPoly([c // p for c in difference], p)


def frobenius_coprime(f, p):
    """
    True iff the Frobenius defect of f at p is coprime to f modulo p.
    """
    defect = frobenius_defect(f, p, reduce_by_f=True)
    return gcd_mod_p(ModPoly.from_intpoly(f, p), defect).is_one()
