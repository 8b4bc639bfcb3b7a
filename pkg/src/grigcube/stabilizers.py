"""Ball-restricted stabilizers of the half-line sets and of cube vertices.

All computations here are restricted to an enumerated ball of elements;
nothing is claimed about elements beyond that ball.  For the half-line
and its punctured variant the ball already exhibits the full stabilizer
(a dihedral group of order 8 and a Klein four group).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from random import Random
from typing import Iterable, NamedTuple

from .elements import (
    GroupElement,
    ZERO_RAY,
    apply,
    canonical_key,
    decompose,
    enumerate_ball,
    is_trivial,
    stabilizes_level1,
)
from .cubes import CubeVertex, act, commensuration_delta
from .gamma import ball, in_gamma_plus, in_gamma_plus_tilde
from .omega import OmegaSequence


class StabilizerTarget(Enum):
    GAMMA_PLUS = "gamma_plus"
    GAMMA_PLUS_TILDE = "gamma_plus_tilde"


def stabilizes_gamma_plus(omega: OmegaSequence, g: GroupElement) -> bool:
    """Whether g preserves the right half-line setwise."""
    return not commensuration_delta(omega, g)


def stabilizes_gamma_plus_tilde(omega: OmegaSequence, g: GroupElement) -> bool:
    """Whether g preserves the punctured right half-line setwise.

    Crossings are confined to the ball of radius length(g) + 1 around the
    all-zero ray, which the scan covers.
    """
    g_inv = g.inverse()
    return all(
        in_gamma_plus_tilde(x) == in_gamma_plus_tilde(apply(g_inv, x))
        for x in ball(omega, ZERO_RAY, g.length + 1)
    )


@dataclass
class SmallGroupTable:
    """A finite subset with its multiplication table when it is closed.

    The table maps index pairs to product indices.  When the subset is
    not closed inside itself the table is None and only the order is
    reported in the recognized type.
    """

    elements: tuple
    table: tuple | None
    recognized_type: str

    @property
    def order(self) -> int:
        return len(self.elements)


def _build_table(elements: tuple) -> tuple | None:
    index = {canonical_key(g): i for i, g in enumerate(elements)}
    rows = []
    for g in elements:
        row = []
        for h in elements:
            k = canonical_key(g * h)
            if k not in index:
                return None
            row.append(index[k])
        rows.append(tuple(row))
    return tuple(rows)


def _table_orders(elements: tuple, table: tuple) -> list[int]:
    identity = next(i for i, g in enumerate(elements) if is_trivial(g))
    orders = []
    for i in range(len(elements)):
        j, k = i, 1
        while j != identity:
            j = table[j][i]
            k += 1
        orders.append(k)
    return orders


def _validate_table(table: tuple, rng: Random) -> None:
    n = len(table)
    for row in table:
        if sorted(row) != list(range(n)):
            raise AssertionError("multiplication table row is not a permutation")
    triples = (
        [(i, j, k) for i in range(n) for j in range(n) for k in range(n)]
        if n <= 8
        else [(rng.randrange(n), rng.randrange(n), rng.randrange(n)) for _ in range(200)]
    )
    for i, j, k in triples:
        if table[table[i][j]][k] != table[i][table[j][k]]:
            raise AssertionError("multiplication table is not associative")


def _recognize(elements: tuple, table: tuple | None) -> str:
    n = len(elements)
    if table is None:
        return f"other({n})"
    orders = _table_orders(elements, table)
    abelian = all(
        table[i][j] == table[j][i] for i in range(n) for j in range(i + 1, n)
    )
    if n == 1:
        return "trivial"
    if n == 2:
        return "Z2"
    if n == 4:
        return "Z4" if 4 in orders else "Z2xZ2"
    if n == 8 and not abelian and orders.count(4) == 2 and orders.count(2) == 5:
        return "D8"
    return f"other({n})"


def stabilizer_in_ball(
    omega: OmegaSequence,
    target,
    max_len: int,
) -> SmallGroupTable:
    """Elements of the length ball that stabilize the target.

    The target is one of the StabilizerTarget sets or a CubeVertex.  The
    multiplication table is built when the subset is closed within
    itself, and small isomorphism types are recognized from element
    orders and commutativity.
    """
    if target is StabilizerTarget.GAMMA_PLUS:
        keep = lambda g: stabilizes_gamma_plus(omega, g)
    elif target is StabilizerTarget.GAMMA_PLUS_TILDE:
        keep = lambda g: stabilizes_gamma_plus_tilde(omega, g)
    elif isinstance(target, CubeVertex):
        keep = lambda g: act(omega, g, target) == target
    else:
        raise TypeError(f"unsupported stabilizer target {target!r}")
    elements = tuple(g for g in enumerate_ball(omega, max_len) if keep(g))
    table = _build_table(elements)
    if table is not None:
        _validate_table(table, Random(0))
    return SmallGroupTable(elements, table, _recognize(elements, table))


def subgroup_closure(generators: Iterable[GroupElement], max_order: int = 64) -> tuple:
    """Close a set of elements under products; errors past max_order."""
    gens = list(generators)
    if not gens:
        raise ValueError("need at least one generator")
    omega = gens[0].omega
    identity = GroupElement.identity(omega)
    found = {canonical_key(identity): identity}
    frontier = [identity]
    while frontier:
        new = []
        for g in frontier:
            for s in gens:
                h = g * s
                key = canonical_key(h)
                if key not in found:
                    if len(found) >= max_order:
                        raise ValueError(f"subgroup exceeds {max_order} elements")
                    found[key] = h
                    new.append(h)
        frontier = new
    return tuple(found.values())


def fixed_vertex_for_subgroup(
    omega: OmegaSequence, subgroup: Iterable[GroupElement]
) -> CubeVertex:
    """A cube vertex fixed by every element of a finite subgroup.

    The vertex colours the union of the subgroup translates of the right
    half-line; its delta therefore sits inside the ball of radius equal
    to the longest element.  Raises if the input is not a subgroup or if
    the candidate is not fixed.
    """
    elements = tuple(subgroup)
    keys = {canonical_key(h) for h in elements}
    if "1" not in keys:
        raise ValueError("subgroup must contain the identity")
    for g in elements:
        if canonical_key(g.inverse()) not in keys:
            raise ValueError(f"not closed under inverse: {g.word!r}")
        for h in elements:
            if canonical_key(g * h) not in keys:
                raise ValueError(f"not closed under product: {g.word!r} * {h.word!r}")
    radius = max(g.length for g in elements)
    delta = frozenset(
        x
        for x in ball(omega, ZERO_RAY, radius)
        if not in_gamma_plus(x)
        and any(in_gamma_plus(apply(h.inverse(), x)) for h in elements)
    )
    vertex = CubeVertex(delta)
    for h in elements:
        if act(omega, h, vertex) != vertex:
            raise AssertionError(f"candidate vertex moved by {h.word!r}")
    return vertex


class BoundCheck(NamedTuple):
    order: int
    depth: int
    bound: int
    ok: bool


def stabilizer_bound_check(
    omega: OmegaSequence, v: CubeVertex, max_len: int
) -> BoundCheck:
    """Check the ball-restricted stabilizer of v against 8 * 4 * 4^n.

    n is the smallest even integer bounding the digit length of every
    ray in the delta of v.
    """
    depth = max((len(x.digits) for x in v.delta), default=0)
    if depth % 2:
        depth += 1
    bound = 8 * 4 * 4**depth
    order = sum(1 for g in enumerate_ball(omega, max_len) if act(omega, g, v) == v)
    return BoundCheck(order, depth, bound, order <= bound)


def _carries_plus_to_tilde(omega: OmegaSequence, g: GroupElement) -> bool:
    return all(
        in_gamma_plus(x) == in_gamma_plus_tilde(apply(g, x))
        for x in ball(omega, ZERO_RAY, g.length + 1)
    )


def _carries_tilde_to_plus(omega: OmegaSequence, g: GroupElement) -> bool:
    return all(
        in_gamma_plus_tilde(x) == in_gamma_plus(apply(g, x))
        for x in ball(omega, ZERO_RAY, g.length + 1)
    )


class RestrictionReport(NamedTuple):
    omega: str
    max_len: int
    checked: int
    case_counts: dict
    violations: tuple


def verify_restriction_lemma(omega: OmegaSequence, max_len: int) -> RestrictionReport:
    """Check how half-line stabilization passes to subtree restrictions.

    For every ball element g with restrictions (g0, g1) over the shifted
    sequence, three implications are checked:

    * g fixes level 1 and stabilizes the half-line: g0 and g1 stabilize
      the punctured half-line.
    * g fixes level 1 and stabilizes the punctured half-line: g0
      stabilizes the half-line and g1 the punctured half-line.
    * g swaps level 1 and stabilizes the punctured half-line: g0 carries
      the half-line onto the punctured half-line and g1 the reverse.

    Note the second case does not put g0 in the punctured stabilizer nor
    g1 in the plain one: the letter d over (012) repeated stabilizes both
    sets, yet its right restriction moves the all-zero ray off the
    half-line.
    """
    shifted = omega.shift()
    counts = {"half_line": 0, "punctured": 0, "swapping": 0}
    violations = []
    ball_elements = enumerate_ball(omega, max_len)
    for g in ball_elements:
        level1 = stabilizes_level1(g)
        stab_plus = stabilizes_gamma_plus(omega, g)
        stab_tilde = stabilizes_gamma_plus_tilde(omega, g)
        if not (stab_plus or stab_tilde):
            continue
        _, g0, g1 = decompose(g)
        if level1 and stab_plus:
            counts["half_line"] += 1
            if not (
                stabilizes_gamma_plus_tilde(shifted, g0)
                and stabilizes_gamma_plus_tilde(shifted, g1)
            ):
                violations.append(f"{g.word or '1'}: half_line")
        if level1 and stab_tilde:
            counts["punctured"] += 1
            if not (
                stabilizes_gamma_plus(shifted, g0)
                and stabilizes_gamma_plus_tilde(shifted, g1)
            ):
                violations.append(f"{g.word or '1'}: punctured")
        if not level1 and stab_tilde:
            counts["swapping"] += 1
            if not (
                _carries_plus_to_tilde(shifted, g0)
                and _carries_tilde_to_plus(shifted, g1)
            ):
                violations.append(f"{g.word or '1'}: swapping")
    return RestrictionReport(
        str(omega), max_len, len(ball_elements), counts, tuple(violations)
    )
