"""Ideal slices, membership, quotients, minimal generators, basis checks."""

import random

import pytest

from modinv import poly2
from modinv.fp_arith import divisors
from modinv.fp_linalg import Subspace
from modinv.graded_ideal import (
    GradedIdeal,
    MonotonicityError,
    basis_check,
    complete_intersection_dims,
    gamma_family,
    ideal_equal,
    ideal_slice,
    invariant_slice,
    member,
    minimal_generators,
    minimal_generators_from_slices,
    omega_family,
    theta_family,
)
from modinv.grp2 import catalog_group, omega_prime
from modinv.poly2 import Poly2, parse_poly, slice_vector
from modinv.stable_chain import compute_J1


def ideal(p, *texts):
    return GradedIdeal(p, [parse_poly(t, p) for t in texts])


def test_ideal_slice_examples():
    p = 3
    i1 = ideal(p, "x", "y^6")
    s = ideal_slice(i1, 2)
    assert s.dim == 2  # x^2 and x*y
    assert s.contains(slice_vector(parse_poly("x^2", p), 2))
    assert s.contains(slice_vector(parse_poly("x*y", p), 2))
    assert ideal_slice(i1, 0).is_zero
    i2 = GradedIdeal(p, [poly2.d1(p), poly2.delta(p)])
    s4 = ideal_slice(i2, 4)
    assert s4.dim == 1
    assert s4.contains(slice_vector(poly2.delta(p), 4))


def test_member_examples():
    p = 3
    assert not member(ideal(p, "x", "y^6"), parse_poly("y^2", p))
    assert member(ideal(p, "x", "y^2"), parse_poly("y^2", p))
    big = GradedIdeal(p, [poly2.d1(p), poly2.delta(p), poly2.gamma(p, 2)])
    assert member(big, parse_poly("x^2*y^4", p))


def test_member_componentwise():
    p = 5
    i = ideal(p, "x")
    assert member(i, parse_poly("x^2 + x*y", p))
    assert not member(i, parse_poly("x^2 + y", p))
    assert member(i, Poly2.zero(p))


def test_ideal_equal_examples():
    p = 3
    a = GradedIdeal(
        p, [poly2.d1(p), poly2.delta(p), poly2.gamma(p, 2), parse_poly("x^2*y^4", p)]
    )
    b = GradedIdeal(p, [poly2.d1(p), poly2.delta(p), poly2.gamma(p, 2)])
    assert ideal_equal(a, b)
    assert not ideal_equal(ideal(p, "x", "y^3"), ideal(p, "x", "y^2"))
    assert ideal_equal(a, a)


def test_quotient_dims_examples():
    p = 3
    dims, top = ideal(p, "x", "y^2").quotient_dims()
    assert dims == [1, 1] and top == 1
    dims, top = GradedIdeal(p, [poly2.d1(p), poly2.delta(p)]).quotient_dims()
    assert sum(dims) == 24 and top == 8
    assert dims == dims[::-1] and dims[0] == 1 == dims[-1]
    dims, top = GradedIdeal(p, [poly2.delta(p)]).quotient_dims()
    assert top is None


def test_minimal_generators_examples():
    p = 3
    gens = minimal_generators(ideal(p, "x", "y^2"))
    assert gens == [parse_poly("x", p), parse_poly("y^2", p)]
    j1 = compute_J1(catalog_group("L", p, 1))
    gens = minimal_generators(j1)
    assert sorted(g.degree() for g in gens) == [4, 6]
    assert ideal_equal(
        GradedIdeal(p, gens), GradedIdeal(p, [poly2.delta(p), poly2.d1(p)])
    )


def test_minimal_generators_monotonicity_violation():
    p = 3
    # slices claiming x in degree 1 but an unrelated line in degree 2
    bad = {
        1: Subspace.span(p, 2, [[1, 0]]),
        2: Subspace.span(p, 3, [[0, 0, 1]]),
    }
    with pytest.raises(MonotonicityError):
        minimal_generators_from_slices(bad, p)


def test_minimal_generators_from_valid_slices():
    p = 3
    i = ideal(p, "x", "y^2")
    slices = {d: i.slice(d) for d in range(4)}
    gens = minimal_generators_from_slices(slices, p)
    assert gens == [parse_poly("x", p), parse_poly("y^2", p)]


def test_saturation_asserted_and_monotone():
    p = 3
    i = ideal(p, "x", "y^2")
    for d in range(1, 8):
        prev, cur = i.slice(d - 1), i.slice(d)
        for v in prev.rows:
            assert cur.contains(list(v) + [0])
            assert cur.contains([0] + list(v))
        if prev.is_full:
            assert cur.is_full


def test_invariant_slice_examples():
    p = 3
    assert invariant_slice(p, [omega_prime(p)], 1).rows == ((1, 0),)  # span{x}
    l1 = catalog_group("L", p, 1)
    s = invariant_slice(p, list(l1.generators), 4)
    assert s.dim == 1
    assert s.contains(slice_vector(poly2.delta(p), 4))
    assert invariant_slice(p, list(l1.generators), 0).is_full


def test_invariant_slice_in_quotient():
    p = 3
    j1 = compute_J1(catalog_group("L", p, 1))
    fixed4 = invariant_slice(p, list(catalog_group("L", p, 1).generators), 4, modulo=j1)
    assert fixed4.dim == 1
    # the canonical representative of the gamma_2 class
    assert fixed4.contains(j1.slice(4).reduce(slice_vector(poly2.gamma(p, 2), 4)))


def test_j1_slices_match_direct_product_span():
    # oracle: slice(d) = sum over e of (monomials of degree d-e) * invariants_e
    p = 3
    for group in [catalog_group("L", p, 1), catalog_group("U", p, 1, 2)]:
        j1 = compute_J1(group)
        _, top = j1.quotient_dims()
        for d in range(0, top + 2):
            rows = []
            for e in range(1, d + 1):
                inv = invariant_slice(p, list(group.generators), e)
                for v in inv.rows:
                    for a in range(d - e + 1):
                        b = d - e - a
                        # multiply by x^a y^b: shift the slice vector by b
                        rows.append([0] * b + list(v) + [0] * a)
            direct = Subspace.span(p, d + 1, rows)
            assert direct == j1.slice(d)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_catalog_quotients_poincare_duality_and_hilbert(p):
    for r in divisors(p - 1):
        j1 = compute_J1(catalog_group("L", p, r))
        dims, top = j1.quotient_dims()
        assert dims == dims[::-1] and dims[0] == 1 == dims[top]
        assert sum(dims) == catalog_group("L", p, r).order
        assert dims == complete_intersection_dims(p * p - p, r * (p + 1))
        for s in divisors(p - 1):
            j1u = compute_J1(catalog_group("U", p, r, s))
            dims, top = j1u.quotient_dims()
            assert dims == dims[::-1]
            assert sum(dims) == r * s * p
            assert dims == complete_intersection_dims(r, s * p)


def test_omega_family_sizes():
    fam = omega_family(3, 1)
    assert len(fam.monomials) == 24
    assert fam.expected_total == 24
    fam = omega_family(5, 2)
    assert len(fam.monomials) == 2 * 5 * 24


def test_basis_check_examples():
    p = 3
    rep = basis_check(omega_family(p, 1), GradedIdeal(p, [poly2.d1(p), poly2.delta(p)]))
    assert rep.status == "pass"
    rep = basis_check(gamma_family(p, 1, 1), ideal(p, "x", "y^3"))
    assert rep.status == "pass"
    assert gamma_family(p, 1, 1).monomials == ((0, 0), (0, 1), (0, 2))
    theta_ideal = GradedIdeal(
        p, [poly2.d1(p), poly2.delta(p), poly2.gamma(p, 2), parse_poly("x^2*y^4", p)]
    )
    rep = basis_check(theta_family(p), theta_ideal)
    assert rep.status == "pass"


def test_basis_check_detects_wrong_family():
    p = 3
    rep = basis_check(gamma_family(p, 1, 1), ideal(p, "x", "y^2"))
    assert rep.status == "fail"


def test_theta_family_size():
    # p=3: 3*5 grid minus the excluded antidiagonal cell, plus {x^3}
    fam = theta_family(3)
    assert len(fam.monomials) == 15
    assert (2, 4) not in fam.monomials
    assert (3, 0) in fam.monomials


def test_generator_validation():
    p = 3
    with pytest.raises(ValueError):
        GradedIdeal(p, [parse_poly("x + y^2", p)])  # not homogeneous
    with pytest.raises(ValueError):
        GradedIdeal(p, [Poly2.zero(p)])
    with pytest.raises(ValueError):
        GradedIdeal(p, [Poly2.const(p, 1)])


def test_random_ideal_slice_monotonicity():
    rng = random.Random(12)
    for _ in range(10):
        p = rng.choice([2, 3, 5])
        gens = []
        for _ in range(rng.randrange(1, 3)):
            d = rng.randrange(1, 5)
            vec = [rng.randrange(p) for _ in range(d + 1)]
            if not any(vec):
                vec[0] = 1
            gens.append(poly2.poly_from_slice(p, d, vec))
        i = GradedIdeal(p, gens)
        for d in range(1, 9):
            prev, cur = i.slice(d - 1), i.slice(d)
            for v in prev.rows:
                assert cur.contains(list(v) + [0]) and cur.contains([0] + list(v))


def test_degree_cap_env_override(monkeypatch):
    p = 3
    i = GradedIdeal(p, [poly2.delta(p)])
    monkeypatch.setenv("MODINV_MAX_DEGREE", "6")
    dims, top = i.quotient_dims()
    assert top is None and len(dims) == 7
    monkeypatch.setenv("MODINV_MAX_DEGREE", "9")
    dims, top = i.quotient_dims()
    assert top is None and len(dims) == 10


def test_concurrent_slice_readers():
    from concurrent.futures import ThreadPoolExecutor

    p = 3
    i = GradedIdeal(p, [poly2.d1(p), poly2.delta(p)])
    with ThreadPoolExecutor(max_workers=8) as pool:
        dims = list(pool.map(lambda d: i.slice(d).dim, list(range(12)) * 4))
    assert dims == [i.slice(d).dim for d in list(range(12)) * 4]


@pytest.mark.parametrize("p", [2, 3, 5])
def test_invariant_ring_hilbert_structure(p):
    # per-degree invariant dimensions equal the monomial counts of a
    # polynomial algebra on the known generator degrees
    for r in divisors(p - 1):
        group = catalog_group("L", p, r)
        e1, e2 = p * p - p, r * (p + 1)
        for d in range(0, 2 * e1 + 1, max(1, (p - 1) // 2)):
            expected = sum(1 for a in range(d // e1 + 1) if (d - a * e1) % e2 == 0)
            assert invariant_slice(p, list(group.generators), d).dim == expected
        for s in divisors(p - 1):
            groupu = catalog_group("U", p, r, s)
            e1u, e2u = r, s * p
            for d in range(0, 2 * e2u + 1):
                expected = sum(1 for a in range(d // e1u + 1) if (d - a * e1u) % e2u == 0)
                assert invariant_slice(p, list(groupu.generators), d).dim == expected
