"""Matrices in GL_2(F_p), reflection detection, subgroup closure, the
catalog of reflection groups, and classification up to conjugacy.

The catalog: for r | p-1, L(r) is the group of matrices whose r-th power
has determinant 1, generated by the two transvections and a diagonal
reflection; for r, s | p-1, U(r, s) is the group of upper triangular
matrices [[alpha, lam], [0, beta]] with alpha^r = beta^s = 1, generated by
the transvection fixing x plus two diagonal reflections. Every reflection
group of order divisible by p is conjugate to exactly one catalog group.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

from modinv.fp_arith import check_prime, divisors, inv_mod, primitive_root
from modinv.poly2 import LinearForm


class Mat2:
    """An invertible 2x2 matrix over F_p, row-major entries (a, b, c, d)."""

    __slots__ = ("p", "a", "b", "c", "d")

    def __init__(self, p: int, a: int, b: int, c: int, d: int):
        check_prime(p)
        a, b, c, d = a % p, b % p, c % p, d % p
        if (a * d - b * c) % p == 0:
            raise ValueError(f"singular matrix [[{a},{b}],[{c},{d}]] mod {p}")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "d", d)

    def __setattr__(self, name, value):
        raise AttributeError("Mat2 is immutable")

    @property
    def entries(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    @classmethod
    def identity(cls, p: int) -> "Mat2":
        return cls(p, 1, 0, 0, 1)

    def det(self) -> int:
        return (self.a * self.d - self.b * self.c) % self.p

    def __mul__(self, other: "Mat2") -> "Mat2":
        if self.p != other.p:
            raise ValueError("prime mismatch")
        p = self.p
        return Mat2(
            p,
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inv(self) -> "Mat2":
        p = self.p
        di = inv_mod(self.det(), p)
        return Mat2(p, self.d * di, -self.b * di, -self.c * di, self.a * di)

    def __pow__(self, k: int) -> "Mat2":
        if k < 0:
            return self.inv() ** (-k)
        out = Mat2.identity(self.p)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def order(self) -> int:
        n, m = 1, self
        ident = Mat2.identity(self.p)
        while m != ident:
            m = m * self
            n += 1
        return n

    def is_diagonal(self) -> bool:
        return self.b == 0 and self.c == 0

    def __eq__(self, other):
        if not isinstance(other, Mat2):
            return NotImplemented
        return self.p == other.p and self.entries == other.entries

    def __hash__(self):
        return hash((self.p, self.entries))

    def __repr__(self):
        return f"Mat2({self.p}, {self.a}, {self.b}, {self.c}, {self.d})"

    def __str__(self):
        return f"{self.a},{self.b};{self.c},{self.d}"


def omega(p: int) -> Mat2:
    """The transvection [[1,0],[1,1]]: x -> x + y, y -> y."""
    return Mat2(p, 1, 0, 1, 1)


def omega_prime(p: int) -> Mat2:
    """The transvection [[1,1],[0,1]]: x -> x, y -> x + y."""
    return Mat2(p, 1, 1, 0, 1)


def diag(p: int, a: int, b: int) -> Mat2:
    return Mat2(p, a, 0, 0, b)


def is_reflection(m: Mat2) -> bool:
    """True iff m - 1 has rank exactly 1."""
    p = m.p
    e = ((m.a - 1) % p, m.b, m.c, (m.d - 1) % p)
    if not any(e):
        return False
    return (e[0] * e[3] - e[1] * e[2]) % p == 0


class Reflection:
    """A reflection together with the normalized linear form spanning the
    image of (matrix - 1); the form is the denominator of the associated
    difference operator."""

    __slots__ = ("matrix", "vsigma")

    def __init__(self, matrix: Mat2):
        if not is_reflection(matrix):
            raise ValueError(f"{matrix} is not a reflection")
        p = matrix.p
        col0 = ((matrix.a - 1) % p, matrix.c)
        col1 = (matrix.b, (matrix.d - 1) % p)
        col = col0 if any(col0) else col1
        object.__setattr__(self, "matrix", matrix)
        object.__setattr__(self, "vsigma", LinearForm(p, col[0], col[1]))

    def __setattr__(self, name, value):
        raise AttributeError("Reflection is immutable")

    @property
    def p(self) -> int:
        return self.matrix.p

    def __eq__(self, other):
        if not isinstance(other, Reflection):
            return NotImplemented
        return self.matrix == other.matrix

    def __hash__(self):
        return hash(("Reflection", self.matrix))

    def __repr__(self):
        return f"Reflection({self.matrix!r})"


class CapExceededError(RuntimeError):
    pass


def gl2_order(p: int) -> int:
    return (p * p - 1) * (p * p - p)


class MatrixGroup:
    """A finite subgroup of GL_2(F_p), closed under product and inverse."""

    __slots__ = ("p", "elements", "generators")

    def __init__(self, p: int, elements: frozenset[Mat2], generators: tuple[Mat2, ...]):
        if gl2_order(p) % len(elements) != 0:
            raise ValueError("element count does not divide |GL_2(F_p)|")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "elements", elements)
        object.__setattr__(self, "generators", generators)

    def __setattr__(self, name, value):
        raise AttributeError("MatrixGroup is immutable")

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, m: Mat2) -> bool:
        return m in self.elements

    def __iter__(self):
        return iter(sorted(self.elements, key=lambda m: m.entries))

    def reflections(self) -> list[Mat2]:
        return [m for m in self if is_reflection(m)]

    def conjugate(self, g: Mat2) -> "MatrixGroup":
        """The group g^{-1} G g."""
        gi = g.inv()
        elems = frozenset(gi * m * g for m in self.elements)
        gens = tuple(gi * m * g for m in self.generators)
        return MatrixGroup(self.p, elems, gens)

    def __eq__(self, other):
        if not isinstance(other, MatrixGroup):
            return NotImplemented
        return self.p == other.p and self.elements == other.elements

    def __hash__(self):
        return hash((self.p, self.elements))

    def __repr__(self):
        return f"MatrixGroup(p={self.p}, order={self.order})"


def generate_closure(gens: Sequence[Mat2], cap: Optional[int] = None) -> MatrixGroup:
    """Breadth-first closure of the generators under multiplication.

    The default cap is |GL_2(F_p)|, which can never be exceeded; a smaller
    cap guards misconfigured callers.
    """
    if not gens:
        raise ValueError("need at least one generator (or use trivial_group)")
    p = gens[0].p
    for g in gens:
        if g.p != p:
            raise ValueError("prime mismatch among generators")
    if cap is None:
        cap = gl2_order(p)
    seen = {Mat2.identity(p)}
    frontier = [Mat2.identity(p)]
    while frontier:
        new = []
        for m in frontier:
            for g in gens:
                nxt = m * g
                if nxt not in seen:
                    seen.add(nxt)
                    new.append(nxt)
                    if len(seen) > cap:
                        raise CapExceededError(f"closure exceeded cap {cap}")
        frontier = new
    return MatrixGroup(p, frozenset(seen), tuple(gens))


def trivial_group(p: int) -> MatrixGroup:
    return MatrixGroup(p, frozenset({Mat2.identity(p)}), ())


# -- catalog ------------------------------------------------------------------


def catalog_generators(kind: str, p: int, r: int, s: Optional[int] = None) -> list[Reflection]:
    """Reflection generator list for a catalog group.

    kind "L": the transvections plus diag(zeta^{(p-1)/r}, 1), for r | p-1.
    kind "U": the transvection fixing x plus diag(zeta^{(p-1)/r}, 1) and
    diag(1, zeta^{(p-1)/s}), for r, s | p-1. Diagonals equal to the
    identity are dropped.
    """
    check_prime(p)
    if (p - 1) % r != 0:
        raise ValueError(f"r={r} does not divide p-1={p - 1}")
    z = primitive_root(p)
    if kind == "L":
        mats = [omega(p), omega_prime(p), diag(p, pow(z, (p - 1) // r, p), 1)]
    elif kind == "U":
        if s is None or (p - 1) % s != 0:
            raise ValueError(f"s={s} does not divide p-1={p - 1}")
        mats = [
            omega_prime(p),
            diag(p, pow(z, (p - 1) // r, p), 1),
            diag(p, 1, pow(z, (p - 1) // s, p)),
        ]
    else:
        raise ValueError(f"unknown catalog kind {kind!r}")
    ident = Mat2.identity(p)
    return [Reflection(m) for m in mats if m != ident]


@lru_cache(maxsize=None)
def catalog_group(kind: str, p: int, r: int, s: Optional[int] = None) -> MatrixGroup:
    """Closure of the catalog generators, cached per (kind, p, r, s)."""
    gens = [refl.matrix for refl in catalog_generators(kind, p, r, s)]
    group = generate_closure(gens)
    expected = r * p * (p * p - 1) if kind == "L" else r * (s or 1) * p
    if group.order != expected:
        raise AssertionError(f"catalog {kind}({r},{s}) at p={p}: order {group.order} != {expected}")
    return group


# -- classification ------------------------------------------------------------


@dataclass(frozen=True)
class GroupClass:
    """Classification outcome: which catalog group (if any) the input is
    conjugate to, with the conjugating witness."""

    kind: str  # "L" | "U" | "prime_to_p" | "other_modular"
    r: Optional[int] = None
    s: Optional[int] = None
    conjugator: Optional[Mat2] = None

    def __str__(self):
        if self.kind == "L":
            return f"L({self.r})"
        if self.kind == "U":
            return f"U({self.r},{self.s})"
        return self.kind.replace("_", "-")


@lru_cache(maxsize=None)
def all_invertible(p: int) -> tuple[Mat2, ...]:
    out = []
    for a in range(p):
        for b in range(p):
            for c in range(p):
                for d in range(p):
                    if (a * d - b * c) % p:
                        out.append(Mat2(p, a, b, c, d))
    return tuple(out)


def _fingerprint(g: MatrixGroup) -> tuple[int, int, int]:
    dets = {m.det() for m in g.elements}
    return (g.order, len(g.reflections()), len(dets))


def find_conjugator(g: MatrixGroup, target: MatrixGroup) -> Optional[Mat2]:
    """A matrix t with t^{-1} g t == target (elementwise), or None."""
    if g.p != target.p or g.order != target.order:
        return None
    if _fingerprint(g) != _fingerprint(target):
        return None
    target_set = target.elements
    gens = g.generators if g.generators else tuple(g.elements)
    for t in all_invertible(g.p):
        ti = t.inv()
        if all(ti * m * t in target_set for m in gens):
            if frozenset(ti * m * t for m in g.elements) == target_set:
                return t
    return None


def _reflections_generate(g: MatrixGroup) -> bool:
    # incremental closure: adjoin reflections only while the subgroup grows,
    # stopping as soon as it fills g (the closure is contained in g, so
    # reaching |g| elements is equality)
    gens: list[Mat2] = []
    elements = frozenset({Mat2.identity(g.p)})
    for m in g.reflections():
        if m in elements:
            continue
        gens.append(m)
        elements = generate_closure(gens).elements
        if len(elements) == g.order:
            return True
    return len(elements) == g.order


def classify(g: MatrixGroup) -> GroupClass:
    """Classify a closed subgroup of GL_2(F_p) against the catalog.

    Groups of order prime to p are tagged prime_to_p; groups of order
    divisible by p that are not generated by their reflections are tagged
    other_modular; every other group is conjugate to exactly one catalog
    group and the conjugating witness is returned.
    """
    p = g.p
    if g.order % p != 0:
        return GroupClass("prime_to_p")
    if not _reflections_generate(g):
        return GroupClass("other_modular")
    for r in divisors(p - 1):
        if g.order == r * p * (p * p - 1):
            t = find_conjugator(g, catalog_group("L", p, r))
            if t is not None:
                return GroupClass("L", r=r, conjugator=t)
    for r in divisors(p - 1):
        for s in divisors(p - 1):
            if g.order == r * s * p:
                t = find_conjugator(g, catalog_group("U", p, r, s))
                if t is not None:
                    return GroupClass("U", r=r, s=s, conjugator=t)
    return GroupClass("other_modular")


def all_reflections(p: int) -> list[Mat2]:
    """Every reflection in GL_2(F_p), in deterministic order."""
    return [m for m in all_invertible(p) if is_reflection(m)]


# -- matrix text grammar --------------------------------------------------------


def parse_matrix(text: str, p: int) -> Mat2:
    """Parse 'a,b;c,d' (row-major, integers reduced mod p, negatives allowed)."""
    rows = [chunk for chunk in text.strip().split(";") if chunk.strip()]
    if len(rows) != 2:
        raise ValueError(f"matrix text needs two rows: {text!r}")
    entries = []
    for row in rows:
        cells = [c for c in row.split(",") if c.strip()]
        if len(cells) != 2:
            raise ValueError(f"matrix row needs two entries: {row!r}")
        entries.extend(int(c) for c in cells)
    return Mat2(p, *entries)


def parse_matrix_list(text: str, p: int) -> list[Mat2]:
    """Parse whitespace- or semicolon-separated matrices in the grammar above."""
    rows = [chunk for chunk in re.split(r"[;\s]+", text.strip()) if chunk]
    if len(rows) % 2 != 0:
        raise ValueError(f"odd number of matrix rows in {text!r}")
    mats = []
    for k in range(0, len(rows), 2):
        mats.append(parse_matrix(rows[k] + ";" + rows[k + 1], p))
    return mats
