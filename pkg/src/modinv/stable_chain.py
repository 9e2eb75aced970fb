"""The increasing chain of invariant ideals of a matrix group.

J_1 is generated by all positive-degree invariant polynomials; each later
ideal adds canonical lifts of the positive-degree invariant classes of the
previous quotient. The chain is computed slice-exactly (no generator
degree bound is ever assumed) and stabilization is declared on the first
step that finds no new invariant class, which is exact: the next quotient
then equals the current one.
"""

from __future__ import annotations

from dataclasses import dataclass

from modinv.fp_arith import check_prime
from modinv.graded_ideal import (
    GradedIdeal,
    InfiniteQuotientError,
    basis_check,
    ideal_equal,
    invariant_slice,
    theta_family,
)
from modinv.grp2 import MatrixGroup, catalog_group
from modinv.poly2 import Poly2, d1, delta, gamma, poly_from_slice


class MaxIterationsError(RuntimeError):
    pass


@dataclass
class StableChainResult:
    """The chain J_1, ..., J_k with k the stabilization index and, per
    step, the canonical lifts of the new invariant classes that were found
    (the last entry is the empty list that witnessed stabilization)."""

    group: MatrixGroup
    ideals: list[GradedIdeal]
    stabilization_index: int
    new_invariants: list[list[Poly2]]

    @property
    def stable_ideal(self) -> GradedIdeal:
        return self.ideals[-1]


def compute_J1(group: MatrixGroup) -> GradedIdeal:
    """The ideal generated by the positive-degree invariants of the group,
    represented through its exact degree slices."""
    p = group.p
    gens = list(group.generators)
    cache: dict[int, object] = {}

    def source(e: int):
        if e not in cache:
            cache[e] = invariant_slice(p, gens, e)
        return cache[e]

    return GradedIdeal(p, [], slice_source=source)


def next_ideal(ideal: GradedIdeal, group: MatrixGroup) -> tuple[GradedIdeal, list[Poly2]]:
    """Adjoin the invariant classes of P/ideal.

    Returns the enlarged ideal and the canonical lifts of a basis of the
    invariant classes in each degree (empty exactly when the ideal is
    stable). Requires the quotient to be finite-dimensional.
    """
    p = ideal.p
    dims, top = ideal.quotient_dims()
    if top is None:
        raise InfiniteQuotientError(
            "the quotient is infinite-dimensional; the chain step is not defined here"
        )
    new: list[Poly2] = []
    for d in range(1, top + 1):
        fixed = invariant_slice(p, list(group.generators), d, modulo=ideal)
        for v in fixed.rows:
            new.append(poly_from_slice(p, d, v))
    if not new:
        return ideal, []
    return ideal.with_extra_generators(new), new


def stable_chain(group: MatrixGroup, max_iter: int = 10) -> StableChainResult:
    """Iterate the chain until no new invariant classes appear."""
    current = compute_J1(group)
    ideals = [current]
    found: list[list[Poly2]] = []
    for index in range(1, max_iter + 1):
        nxt, new = next_ideal(current, group)
        found.append(new)
        if not new:
            return StableChainResult(
                group=group,
                ideals=ideals,
                stabilization_index=index,
                new_invariants=found,
            )
        ideals.append(nxt)
        current = nxt
    raise MaxIterationsError(f"chain did not stabilize within {max_iter} iterations")


def verify_basedos(p: int):
    """Check the presentation of the quotient of the rank-one coinvariant
    algebra by its positive-degree invariant classes: the reduced
    generating set, the explicit monomial basis, and the absence of
    invariants. Skipped at p = 2, where the invariant class list is the
    fundamental class alone and the statement degenerates."""
    from modinv.report import Check, timed_report

    check_prime(p)
    with timed_report(p, "basedos") as rep:
        if p == 2:
            rep.add(Check.skip("all_items", "the quotient presentation presupposes p > 2"))
            return rep

        mu = Poly2.monomial(p, 1, p - 1, p * p - p)
        gens_full = [d1(p), delta(p), mu] + [gamma(p, i) for i in range(2, p)]
        ideal_full = GradedIdeal(p, gens_full)
        reduced = [
            d1(p),
            delta(p),
            gamma(p, 2),
            Poly2.monomial(p, 1, p - 1, 2 * p - 2),
        ]
        ideal_reduced = GradedIdeal(p, reduced)
        rep.add(Check.boolean("item1_reduced_generating_set", ideal_equal(ideal_full, ideal_reduced)))

        theta_rep = basis_check(theta_family(p), ideal_reduced)
        rep.add(
            Check.boolean(
                "item2_theta_is_a_basis",
                theta_rep.ok and theta_rep.status == "pass",
                got="; ".join(f"{c.name}={c.status}" for c in theta_rep.checks),
            )
        )

        group = catalog_group("L", p, 1)
        _, top = ideal_reduced.quotient_dims()
        no_invariants = all(
            invariant_slice(p, list(group.generators), d, modulo=ideal_reduced).is_zero
            for d in range(1, (top or 0) + 1)
        )
        rep.add(Check.boolean("item3_no_invariant_classes", no_invariants))

        if p == 3:
            three_gen = GradedIdeal(p, [d1(p), delta(p), gamma(p, 2)])
            rep.add(
                Check.boolean(
                    "item1b_three_generators_suffice_at_p3",
                    ideal_equal(ideal_reduced, three_gen),
                )
            )
    return rep
