"""n-ary subgroups, normality, cosets, quotients and simplicity classes.

A subgroup is a non-empty subset closed under the operation and under the
skew map.  Normality follows the conjugation-style condition
``f(a^(n-3), skew(a), h, a) in H``.  Quotients by normal subgroups are n-ary
groups with the subgroup as identity block, hence reducible to an ordinary
group; that reduction is what eventually carries representations back to
binary group theory.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .binary import BinaryGroup
from .core import NaryGroup, is_nary_identity, verify_nary_group
from .errors import InvalidGroupError, SizeLimitError
from .report import VerificationReport
from .retract import retract

SubgroupRef = tuple[int, ...]

SUBGROUP_ORDER_LIMIT = 24
POWERSET_LIMIT = 12


def verify_subgroup(group: NaryGroup, elems) -> VerificationReport:
    """Closure under the operation and the skew map, with witnesses."""
    elems = sorted({int(x) for x in elems})
    if not elems:
        return VerificationReport.fail([("subgroup-empty", ())])
    s = set(elems)
    failures = []
    sub = group.dense()[np.ix_(*([elems] * group.arity))]
    inside = np.isin(sub, elems)
    if not inside.all():
        pos = np.argwhere(~inside)[0]
        failures.append(("subgroup-closure", tuple(elems[int(i)] for i in pos)))
    for x in elems:
        if group.skew(x) not in s:
            failures.append(("subgroup-skew", (x,)))
            break
    if failures:
        return VerificationReport.fail(failures)
    return VerificationReport.ok(checked=len(elems) ** group.arity + len(elems))


def is_subgroup(group: NaryGroup, elems) -> bool:
    return verify_subgroup(group, elems).passed


def subgroup_closure(group: NaryGroup, gens) -> SubgroupRef:
    """Smallest f-closed, skew-closed subset containing ``gens``."""
    table = group.dense()
    s = {int(x) for x in gens}
    while True:
        new = {group.skew(x) for x in s} - s
        sub = table[np.ix_(*([sorted(s)] * group.arity))]
        new |= set(np.unique(sub).tolist()) - s
        if not new:
            return tuple(sorted(s))
        s |= new


def subgroups(group: NaryGroup) -> list[SubgroupRef]:
    """All n-ary subgroups, sorted lexicographically.

    Complete by power-set scan up to order 12; above that (up to 24) the
    enumeration covers every subgroup generated by at most two elements.
    """
    group.require_verified()
    m = group.order
    if m > SUBGROUP_ORDER_LIMIT:
        raise SizeLimitError(f"subgroup enumeration limited to order {SUBGROUP_ORDER_LIMIT}")
    found: set[SubgroupRef] = set()
    if m <= POWERSET_LIMIT:
        elems = list(range(m))
        for mask in range(1, 1 << m):
            subset = tuple(e for e in elems if mask >> e & 1)
            if is_subgroup(group, subset):
                found.add(subset)
    else:
        for x in range(m):
            found.add(subgroup_closure(group, (x,)))
        for x, y in itertools.combinations(range(m), 2):
            found.add(subgroup_closure(group, (x, y)))
    return sorted(found)


def is_normal(group: NaryGroup, subgroup: SubgroupRef) -> bool:
    """f(a^(n-3), skew(a), h, a) stays in the subgroup for all h, a."""
    report = verify_subgroup(group, subgroup)
    if not report.passed:
        raise InvalidGroupError(f"not a subgroup: {report.first().axiom}")
    s = set(subgroup)
    n = group.arity
    return all(
        group.eval((a,) * (n - 3) + (group.skew(a), h, a)) in s
        for a in range(group.order)
        for h in subgroup
    )


@dataclass(frozen=True)
class CosetPartition:
    """Partition of the carrier into equal-size coset blocks."""

    blocks: tuple[tuple[int, ...], ...]
    representatives: tuple[int, ...]

    def block_of(self, x: int) -> int:
        for i, blk in enumerate(self.blocks):
            if x in blk:
                return i
        raise KeyError(x)

    def index_array(self, order: int) -> np.ndarray:
        out = np.full(order, -1, dtype=np.int64)
        for i, blk in enumerate(self.blocks):
            out[list(blk)] = i
        return out


def cosets(group: NaryGroup, subgroup: SubgroupRef) -> CosetPartition:
    """Left cosets aH = {f(a, x^(n-2), y) : x, y in H}, verified to partition."""
    report = verify_subgroup(group, subgroup)
    if not report.passed:
        raise InvalidGroupError(f"not a subgroup: {report.first().axiom}")
    n, m = group.arity, group.order
    h = sorted(subgroup)
    seen: set[int] = set()
    blocks = []
    for a in range(m):
        if a in seen:
            continue
        blk = sorted({group.eval((a,) + (x,) * (n - 2) + (y,)) for x in h for y in h})
        if len(blk) != len(h) or seen & set(blk):
            raise InvalidGroupError(f"cosets of {subgroup} do not partition evenly")
        seen |= set(blk)
        blocks.append(tuple(blk))
    return CosetPartition(tuple(blocks), tuple(b[0] for b in blocks))


@dataclass(frozen=True)
class QuotientGroup:
    """Quotient n-ary group together with its block structure."""

    base: NaryGroup
    group: NaryGroup
    partition: CosetPartition
    block_index: np.ndarray
    identity_block: int

    def retract_group(self) -> BinaryGroup:
        """The ordinary group the quotient reduces to (retract at the identity block)."""
        return retract(self.group, self.identity_block)


def quotient(group: NaryGroup, subgroup: SubgroupRef) -> QuotientGroup:
    """Blockwise operation f_H(a1 H, ..., an H) = f(a1..an) H for normal H.

    Well-definedness is checked exhaustively: the block of f must be constant
    across every choice of representatives.
    """
    if not is_normal(group, subgroup):
        raise InvalidGroupError(f"{subgroup} is not a normal subgroup")
    part = cosets(group, subgroup)
    n, m = group.arity, group.order
    cls = part.index_array(m)
    q = len(part.blocks)
    reps = np.array(part.representatives)
    combos = np.stack(np.unravel_index(np.arange(q ** n), (q,) * n), axis=1)
    qtable = cls[group.eval_batch(reps[combos])].reshape((q,) * n)
    blocked = cls[group.dense()]
    expected = qtable[np.ix_(*([cls] * n))]
    if not np.array_equal(blocked, expected):
        bad = np.argwhere(blocked != expected)[0]
        raise InvalidGroupError(
            f"blockwise operation not well-defined at {tuple(int(v) for v in bad)}"
        )
    qgroup = NaryGroup(n, q, table=qtable)
    report = verify_nary_group(qgroup)
    if not report.passed:
        raise InvalidGroupError("quotient failed the n-ary group axioms")
    ident = part.blocks.index(tuple(sorted(subgroup)))
    if not is_nary_identity(qgroup, ident):
        raise InvalidGroupError("subgroup block is not a quotient identity")
    return QuotientGroup(group, qgroup, part, cls, ident)


def is_central(group: NaryGroup, c: int) -> bool:
    """Can c be swapped with a neighbouring argument without changing any value?"""
    n, m = group.arity, group.order
    table = group.dense()
    for pos in range(n - 1):
        left = np.moveaxis(table, (pos, pos + 1), (0, 1))[c]      # c at pos
        right = np.moveaxis(table, (pos, pos + 1), (0, 1))[:, c]  # c at pos+1
        if not np.array_equal(left, right):
            return False
    return True


def central_elements(group: NaryGroup) -> tuple[int, ...]:
    return tuple(c for c in range(group.order) if is_central(group, c))


@dataclass(frozen=True)
class SimplicityReport:
    """Outcome of the four-way normal-subgroup classification."""

    case: str
    normal_subgroups: tuple[SubgroupRef, ...]
    proper_normal: tuple[SubgroupRef, ...]
    central_singleton: int | None = None
    twist: int | None = None
    carrier_abelian: bool | None = None


HAS_PROPER_NORMAL = "has-proper-normal"
B_DERIVED_ABELIAN = "b-derived-abelian"
REDUCIBLE_NONABELIAN = "reducible-nonabelian"
STRONGLY_SIMPLE_CANDIDATE = "strongly-simple-candidate"


def classify_simplicity(group: NaryGroup) -> SimplicityReport:
    """Classify by normal subgroups: proper ones, central singleton, or neither.

    "Proper" means distinct from the whole group with at least two elements.
    A singleton normal subgroup forces its element to be central, and the
    group is then a twisted product over its retract there: abelian carrier
    or reducible non-abelian carrier.  Absence of any of these within the
    search budget is reported as candidate evidence, not proof.
    """
    from .retract import hg_decompose

    group.require_verified()
    m = group.order
    all_subs = subgroups(group)
    normals = tuple(h for h in all_subs if is_normal(group, h))
    proper = tuple(h for h in normals if len(h) >= 2 and len(h) < m)
    if proper:
        return SimplicityReport(HAS_PROPER_NORMAL, normals, proper)
    singles = [h[0] for h in normals if len(h) == 1]
    if singles:
        p = singles[0]
        if not is_central(group, p):
            raise InvalidGroupError(
                f"singleton normal subgroup {{{p}}} with non-central element"
            )
        data = hg_decompose(group, p)
        if not np.array_equal(data.phi, np.arange(m)):
            raise InvalidGroupError(
                "decomposition at a central element should have trivial twist map"
            )
        if data.group.is_abelian:
            return SimplicityReport(
                B_DERIVED_ABELIAN, normals, proper,
                central_singleton=p, twist=int(data.b), carrier_abelian=True,
            )
        if data.b == data.group.identity:
            return SimplicityReport(
                REDUCIBLE_NONABELIAN, normals, proper,
                central_singleton=p, twist=int(data.b), carrier_abelian=False,
            )
        raise InvalidGroupError("non-abelian carrier with non-identity central twist")
    return SimplicityReport(STRONGLY_SIMPLE_CANDIDATE, normals, proper)
