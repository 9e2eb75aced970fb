"""Exact arithmetic in the prime field F_p.

Scalars, modular inverses, binomial coefficients via base-p digit products,
and the alternating binomial sum identity used by the coinvariant
computations. Also home of the primitive root search that fixes the
generator of F_p* used by the group catalog.
"""

from __future__ import annotations

_PRIMES_SEEN: set[int] = set()


def check_prime(p: int) -> int:
    """Validate that p is prime (trial division, cached) and return it."""
    if p in _PRIMES_SEEN:
        return p
    if not isinstance(p, int) or p < 2:
        raise ValueError(f"modulus must be a prime >= 2, got {p!r}")
    d = 2
    while d * d <= p:
        if p % d == 0:
            raise ValueError(f"modulus must be prime, got {p} = {d} * {p // d}")
        d += 1
    _PRIMES_SEEN.add(p)
    return p


class FpScalar:
    """A residue mod p with exact field arithmetic.

    Immutable; mixing scalars with different moduli raises ValueError.
    """

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        check_prime(p)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "value", value % p)

    def __setattr__(self, name, value):
        raise AttributeError("FpScalar is immutable")

    def _coerce(self, other) -> "FpScalar":
        if isinstance(other, FpScalar):
            if other.p != self.p:
                raise ValueError(f"modulus mismatch: {self.p} vs {other.p}")
            return other
        if isinstance(other, int):
            return FpScalar(other, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FpScalar(self.value + o.value, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FpScalar(self.value - o.value, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FpScalar(o.value - self.value, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FpScalar(self.value * o.value, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return FpScalar(-self.value, self.p)

    def __pow__(self, k: int):
        if k < 0:
            return self.inv() ** (-k)
        return FpScalar(pow(self.value, k, self.p), self.p)

    def inv(self) -> "FpScalar":
        return inv(self)

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        if isinstance(other, FpScalar):
            return self.value == other.value and self.p == other.p
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __repr__(self):
        return f"FpScalar({self.value}, {self.p})"


def inv(a: FpScalar) -> FpScalar:
    """Multiplicative inverse by extended Euclid; a must be nonzero."""
    if a.value == 0:
        raise ZeroDivisionError(f"0 has no inverse mod {a.p}")
    return FpScalar(inv_mod(a.value, a.p), a.p)


def inv_mod(a: int, p: int) -> int:
    """Inverse of a nonzero residue as a plain int (extended Euclid)."""
    a %= p
    if a == 0:
        raise ZeroDivisionError(f"0 has no inverse mod {p}")
    t, new_t = 0, 1
    r, new_r = p, a
    while new_r:
        q = r // new_r
        t, new_t = new_t, t - q * new_t
        r, new_r = new_r, r - q * new_r
    return t % p


def _small_binom(a: int, b: int, p: int) -> int:
    # a, b < p; plain Pascal product, all intermediates < p**2
    if b < 0 or b > a:
        return 0
    b = min(b, a - b)
    num = den = 1
    for i in range(b):
        num = num * ((a - i) % p) % p
        den = den * (i + 1) % p
    return num * inv_mod(den, p) % p if den else 0


def lucas_binom(a: int, b: int, p: int) -> FpScalar:
    """C(a, b) mod p as the product of base-p digit binomials.

    Zero when b > a; never overflows beyond p**2.
    """
    check_prime(p)
    if a < 0 or b < 0:
        raise ValueError("binomial arguments must be nonnegative")
    out = 1
    while a or b:
        out = out * _small_binom(a % p, b % p, p) % p
        if out == 0:
            return FpScalar(0, p)
        a //= p
        b //= p
    return FpScalar(out, p)


def binomial_sum_check(p: int, i: int, k: int) -> FpScalar:
    """sum_{t=0}^{k-1} C(k(p-1), i + t(p-1)) mod p.

    Defined for 0 <= i < p and 1 <= k < p; the identity asserts the value
    is (-1)^i mod p, which the verification targets check exhaustively.
    """
    check_prime(p)
    if not (0 <= i < p):
        raise ValueError(f"need 0 <= i < p, got i={i}, p={p}")
    if not (1 <= k < p):
        raise ValueError(f"need 1 <= k < p, got k={k}, p={p}")
    total = 0
    n = k * (p - 1)
    for t in range(k):
        total += lucas_binom(n, i + t * (p - 1), p).value
    return FpScalar(total, p)


def primitive_root(p: int) -> int:
    """Least generator of F_p*. Returns 1 for p = 2."""
    check_prime(p)
    if p == 2:
        return 1
    order = p - 1
    prime_factors = []
    n, d = order, 2
    while d * d <= n:
        if n % d == 0:
            prime_factors.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        prime_factors.append(n)
    for g in range(2, p):
        if all(pow(g, order // q, p) != 1 for q in prime_factors):
            return g
    raise AssertionError(f"no primitive root found mod {p}")


def element_order(a: int, p: int) -> int:
    """Multiplicative order of a nonzero residue."""
    a %= p
    if a == 0:
        raise ZeroDivisionError("0 has no multiplicative order")
    x, n = a, 1
    while x != 1:
        x = x * a % p
        n += 1
    return n


def divisors(n: int) -> list[int]:
    """Positive divisors of n in increasing order."""
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out
