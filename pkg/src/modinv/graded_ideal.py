"""Homogeneous ideals of F_p[x, y] as exact per-degree slices.

An ideal is represented by explicit homogeneous generators plus an
optional per-degree slice source (used for the ideal generated by all
positive-degree invariants of a group, which has no a-priori generator
degree bound). The degree-d slice is built exactly by the recursion

    slice(d) = x*slice(d-1) + y*slice(d-1) + generators of degree d
               + source(d),

which equals the sum over e <= d of P_{d-e} times the degree-e input and
is therefore exact at every degree. Membership, ideal equality, quotient
dimensions, minimal generators and the monomial basis checks all live
here, together with the fixed-subspace computation in the polynomial ring
and in its quotients.
"""

from __future__ import annotations

import os
import threading
from dataclasses import dataclass
from typing import Callable, Mapping, Optional, Sequence

from modinv.fp_arith import check_prime, inv_mod
from modinv.fp_linalg import Subspace, kernel
from modinv.grp2 import Mat2
from modinv.poly2 import Poly2, act_matrix, poly_from_slice, slice_vector


def default_degree_cap(p: int) -> int:
    """Scan limit for quotient-dimension searches: 4 p^2, overridable via
    the MODINV_MAX_DEGREE environment variable."""
    env = os.environ.get("MODINV_MAX_DEGREE")
    if env:
        return int(env)
    return 4 * p * p


class MonotonicityError(ValueError):
    pass


class InfiniteQuotientError(RuntimeError):
    pass


class GradedIdeal:
    """A homogeneous ideal with cached canonical degree slices."""

    def __init__(
        self,
        p: int,
        generators: Sequence[Poly2] = (),
        slice_source: Optional[Callable[[int], Subspace]] = None,
    ):
        check_prime(p)
        gens = []
        for g in generators:
            if g.p != p:
                raise ValueError("generator prime mismatch")
            if g.is_zero():
                raise ValueError("zero generator")
            if not g.is_homogeneous():
                raise ValueError(f"generator {g} is not homogeneous")
            if g.degree() < 1:
                raise ValueError("generators must have positive degree")
            gens.append(g)
        self.p = p
        self.generators = tuple(gens)
        self.slice_source = slice_source
        self._slices: list[Subspace] = [Subspace.zero(p, 1)]
        self._slice_lock = threading.Lock()  # cache extension is serialized
        self._gens_by_degree: dict[int, list[Poly2]] = {}
        for g in self.generators:
            self._gens_by_degree.setdefault(g.degree(), []).append(g)
        self._dims_cache: Optional[tuple[list[int], Optional[int]]] = None

    def with_extra_generators(self, extra: Sequence[Poly2]) -> "GradedIdeal":
        """A new ideal adding generators, sharing this ideal's slice source."""
        return GradedIdeal(self.p, list(self.generators) + list(extra), self.slice_source)

    def slice(self, d: int) -> Subspace:
        """Canonical subspace of the degree-d piece of the ideal."""
        if d < 0:
            raise ValueError("negative degree")
        p = self.p
        if len(self._slices) <= d:
            with self._slice_lock:
                while len(self._slices) <= d:
                    e = len(self._slices)
                    prev = self._slices[e - 1]
                    rows = []
                    for v in prev.rows:
                        row = list(v)
                        rows.append(row + [0])  # multiply by x
                        rows.append([0] + row)  # multiply by y
                    for g in self._gens_by_degree.get(e, ()):
                        rows.append(slice_vector(g, e))
                    if self.slice_source is not None:
                        rows.extend(self.slice_source(e).rows)
                    sub = Subspace.span(p, e + 1, rows)
                    if prev.is_full and not sub.is_full:
                        raise AssertionError(
                            "saturation violated: full slice followed by proper slice"
                        )
                    self._slices.append(sub)
        return self._slices[d]

    def member(self, f: Poly2) -> bool:
        """True iff every homogeneous component of f lies in its slice."""
        if f.p != self.p:
            raise ValueError("prime mismatch")
        for d, comp in f.homogeneous_components().items():
            if not self.slice(d).contains(slice_vector(comp, d)):
                return False
        return True

    def quotient_dims(self, dmax: Optional[int] = None) -> tuple[list[int], Optional[int]]:
        """Per-degree dimensions of P/I up to the first zero.

        Returns (dims, topdeg); topdeg is None when no zero dimension was
        found below the cap (the quotient is then infinite-dimensional, by
        the saturation property).
        """
        if dmax is None and self._dims_cache is not None:
            return self._dims_cache
        cap = dmax if dmax is not None else default_degree_cap(self.p)
        dims: list[int] = []
        for d in range(cap + 1):
            q = (d + 1) - self.slice(d).dim
            if q == 0:
                result = (dims, d - 1)
                if dmax is None:
                    self._dims_cache = result
                return result
            dims.append(q)
        # a None topdeg depends on the cap in force, so only finite results
        # are cached
        return (dims, None)

    def top_degree(self) -> Optional[int]:
        return self.quotient_dims()[1]

    def generating_polys(self) -> list[Poly2]:
        """A finite generating set: the explicit generators when the ideal
        has no slice source, otherwise the minimal generators extracted
        from the slices (requires a finite quotient)."""
        if self.slice_source is None:
            return list(self.generators)
        return minimal_generators(self)

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.generators) or "<slice source>"
        return f"GradedIdeal(p={self.p}, generators=[{gens}])"


def ideal_slice(ideal: GradedIdeal, d: int) -> Subspace:
    return ideal.slice(d)


def member(ideal: GradedIdeal, f: Poly2) -> bool:
    return ideal.member(f)


def ideal_equal(a: GradedIdeal, b: GradedIdeal) -> bool:
    """True iff every generator of each ideal belongs to the other."""
    if a.p != b.p:
        raise ValueError("prime mismatch")
    return all(b.member(g) for g in a.generating_polys()) and all(
        a.member(g) for g in b.generating_polys()
    )


def _shifted_rows(prev: Subspace) -> list[list[int]]:
    rows = []
    for v in prev.rows:
        row = list(v)
        rows.append(row + [0])
        rows.append([0] + row)
    return rows


def minimal_generators(ideal: GradedIdeal, through: Optional[int] = None) -> list[Poly2]:
    """Minimal homogeneous generators, by increasing degree.

    In each degree the new generators are the canonical (echelon) lifts of
    a basis of slice(d) modulo P_1 * slice(d-1). For a finite quotient the
    scan through topdeg + 1 is exhaustive.
    """
    if through is None:
        top = ideal.top_degree()
        if top is None:
            raise InfiniteQuotientError("infinite quotient: pass an explicit degree bound")
        through = top + 1
    p = ideal.p
    out: list[Poly2] = []
    for d in range(1, through + 1):
        cur = ideal.slice(d)
        if cur.is_zero:
            continue
        w = Subspace.span(p, d + 1, _shifted_rows(ideal.slice(d - 1)))
        for v in cur.rows:
            red = w.reduce(v)
            if any(red):
                lead = next(i for i, x in enumerate(red) if x)
                if red[lead] != 1:
                    s = inv_mod(red[lead], p)
                    red = [x * s % p for x in red]
                out.append(poly_from_slice(p, d, red))
                w = w.sum(Subspace.span(p, d + 1, [red]))
    return out


def minimal_generators_from_slices(slices: Mapping[int, Subspace], p: int) -> list[Poly2]:
    """Same extraction from an explicit degree-indexed family of subspaces;
    validates the monotonicity P_1 * slice(d-1) <= slice(d)."""
    out: list[Poly2] = []
    degrees = sorted(d for d in slices if d >= 1)
    for d in degrees:
        cur = slices[d]
        prev = slices.get(d - 1, Subspace.zero(p, d))
        shifted = _shifted_rows(prev)
        for row in shifted:
            if not cur.contains(row):
                raise MonotonicityError(f"slice({d}) does not contain P_1 * slice({d - 1})")
        w = Subspace.span(p, d + 1, shifted)
        for v in cur.rows:
            red = w.reduce(v)
            if any(red):
                out.append(poly_from_slice(p, d, red))
                w = w.sum(Subspace.span(p, d + 1, [red]))
    return out


# -- fixed subspaces -----------------------------------------------------------


def _apply_action(g: Mat2, v: Sequence[int], d: int) -> list[int]:
    p = g.p
    n = d + 1
    if g.is_diagonal():
        a, dd = g.a, g.d
        return [v[k] * pow(a, d - k, p) * pow(dd, k, p) % p for k in range(n)]
    mat = act_matrix(p, g.entries, d)
    out = [0] * n
    for k, c in enumerate(v):
        if c:
            row = mat[k]
            out = [(x + c * y) % p for x, y in zip(out, row)]
    return out


def _left_kernel(rows: list[list[int]], p: int) -> list[list[int]]:
    # coefficient vectors c with sum_i c_i rows[i] = 0
    k = len(rows)
    n = len(rows[0]) if rows else 0
    transposed = [[rows[i][j] for i in range(k)] for j in range(n)]
    return [list(r) for r in kernel(transposed, k, p).rows]


def invariant_slice(
    p: int,
    gens: Sequence[Mat2],
    d: int,
    modulo: Optional[GradedIdeal] = None,
) -> Subspace:
    """The subspace of the degree-d slice (of P, or of P/modulo) fixed by
    every generator, with quotient vectors lifted to canonical coset
    representatives.

    Computed as the iterated kernel of (action - 1) restricted to the
    running fixed space; diagonal generators are processed first since
    their fixed spaces are coordinate subspaces.
    """
    check_prime(p)
    for g in gens:
        if g.p != p:
            raise ValueError("prime mismatch among generators")
    n = d + 1
    sl = None
    if modulo is not None:
        if modulo.p != p:
            raise ValueError("prime mismatch with the quotient ideal")
        sl = modulo.slice(d)
        if sl.is_full:
            return Subspace.zero(p, n)
        basis = [[1 if k == c else 0 for k in range(n)] for c in sl.complement()]
    else:
        basis = [[1 if k == c else 0 for k in range(n)] for c in range(n)]
    ordered = sorted(gens, key=lambda g: (not g.is_diagonal(), g.entries))
    for g in ordered:
        if not basis:
            break
        rows = []
        for v in basis:
            w = _apply_action(g, v, d)
            if sl is not None:
                w = sl.reduce(w)
            rows.append([(a - b) % p for a, b in zip(w, v)])
        coeffs = _left_kernel(rows, p)
        new_basis = []
        for c in coeffs:
            vec = [0] * n
            for ci, v in zip(c, basis):
                if ci:
                    vec = [(a + ci * b) % p for a, b in zip(vec, v)]
            new_basis.append(vec)
        basis = new_basis
    return Subspace.span(p, n, basis)


# -- monomial families and basis checks ------------------------------------------


@dataclass(frozen=True)
class MonomialFamily:
    """An explicit set of monomials expected to descend to a vector space
    basis of a quotient P/I."""

    name: str
    p: int
    monomials: tuple[tuple[int, int], ...]
    expected_total: int

    def by_degree(self) -> dict[int, list[tuple[int, int]]]:
        out: dict[int, list[tuple[int, int]]] = {}
        for (i, j) in self.monomials:
            out.setdefault(i + j, []).append((i, j))
        return out


def omega_family(p: int, r: int) -> MonomialFamily:
    """Two blocks of monomials: divisors of x^{rp-1} y^{p^2-p+r-1}, plus
    x^i y^j for rp <= i <= p^2-p-1, j < r. Size r p (p^2 - 1)."""
    check_prime(p)
    if (p - 1) % r != 0:
        raise ValueError(f"r={r} must divide p-1")
    mono = [(i, j) for i in range(r * p) for j in range(p * p - p + r)]
    mono += [(i, j) for i in range(r * p, p * p - p) for j in range(r)]
    fam = MonomialFamily(f"Omega({r})", p, tuple(sorted(mono)), r * p * (p * p - 1))
    if len(fam.monomials) != fam.expected_total:
        raise AssertionError("Omega family has the wrong size")
    return fam


def gamma_family(p: int, r: int, s: int) -> MonomialFamily:
    """All x^i y^j with i < r and j < ps. Size r s p."""
    check_prime(p)
    if (p - 1) % r != 0 or (p - 1) % s != 0:
        raise ValueError("r and s must divide p-1")
    mono = [(i, j) for i in range(r) for j in range(p * s)]
    return MonomialFamily(f"Gamma({r},{s})", p, tuple(sorted(mono)), r * s * p)


def theta_family(p: int) -> MonomialFamily:
    """The basis of the quotient of the rank-one coinvariant algebra by its
    positive-degree invariants: x^i y^j with i < p, j < 2p-1 and
    i + j != 3p-3, together with x^i for p <= i <= 2p-3."""
    check_prime(p)
    mono = [
        (i, j)
        for i in range(p)
        for j in range(2 * p - 1)
        if i + j != 3 * p - 3
    ]
    mono += [(i, 0) for i in range(p, 2 * p - 2)]
    return MonomialFamily("Theta", p, tuple(sorted(mono)), len(mono))


def basis_check(family: MonomialFamily, ideal: GradedIdeal):
    """Verify that the family descends to a vector space basis of P/I:
    per-degree counts match the quotient dimensions, the images are
    independent modulo the ideal slices, and the total count matches the
    expected group order (or family size)."""
    from modinv.report import Check, timed_report

    p = family.p
    if p != ideal.p:
        raise ValueError("prime mismatch")
    with timed_report(p, f"basis_check:{family.name}") as rep:
        dims, top = ideal.quotient_dims()
        rep.add(Check.boolean("finite_quotient", top is not None))
        if top is None:
            return rep
        rep.add(
            Check.equality("total_count_vs_quotient_dimension", sum(dims), len(family.monomials))
        )
        rep.add(Check.equality("total_count_vs_expected", family.expected_total, len(family.monomials)))
        by_deg = family.by_degree()
        rep.add(Check.boolean("degrees_within_top_degree", max(by_deg) <= top))
        counts_ok = True
        independent_ok = True
        for d in range(top + 1):
            members = by_deg.get(d, [])
            if len(members) != dims[d]:
                counts_ok = False
                break
            sl = ideal.slice(d)
            rows = [list(v) for v in sl.rows]
            for (i, j) in members:
                vec = [0] * (d + 1)
                vec[j] = 1
                rows.append(vec)
            if Subspace.span(p, d + 1, rows).dim != sl.dim + len(members):
                independent_ok = False
                break
        rep.add(Check.boolean("per_degree_counts_match", counts_ok))
        rep.add(Check.boolean("images_independent_mod_ideal", independent_ok))
    return rep


def complete_intersection_dims(e1: int, e2: int) -> list[int]:
    """Coefficients of (1 - t^{e1})(1 - t^{e2}) / (1 - t)^2: the quotient
    dimensions of an ideal generated by a regular sequence of degrees
    (e1, e2)."""
    out = [0] * (e1 + e2 - 1)
    for i in range(e1):
        for j in range(e2):
            out[i + j] += 1
    return out
