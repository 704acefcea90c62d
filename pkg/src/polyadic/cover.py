"""Post covering groups: the binary group on G x Z_(n-1) realizing the operation.

The smallest covering group at anchor a multiplies pairs by padding with
anchor copies and one anchor skew so the total length folds back into the
carrier:

    <x,r> * <y,s> = <fold(x, a^r, y, a^s, skew(a), a^(n-2-r*s)), r*s>

with r*s = (r+s+1) mod (n-1).  The carrier embeds as the <x,0> slice, the
retract reappears as the normal subgroup H = {<x,n-2>} with cyclic quotient
of order n-1, and n-fold products of embedded elements project back onto the
n-ary operation.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .binary import BinaryGroup, find_isomorphism
from .core import NaryGroup
from .errors import InvalidGroupError
from .report import VerificationReport, resolve_budget, sample_tuples, SAMPLE_COUNT
from .retract import retract

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CoveringGroup:
    """Covering group of ``base`` at ``anchor``, with pair enumeration x*(n-1)+t."""

    base: NaryGroup
    anchor: int
    group: BinaryGroup
    inverse_formula_mismatches: tuple[int, ...] = ()

    @property
    def period(self) -> int:
        return self.base.arity - 1

    def pair_index(self, x: int, t: int) -> int:
        return int(x) * self.period + int(t)

    def pair_of(self, idx: int) -> tuple[int, int]:
        return divmod(int(idx), self.period)

    @cached_property
    def embed(self) -> np.ndarray:
        """Indices of the <x,0> slice identified with the carrier."""
        return np.arange(self.base.order, dtype=np.int64) * self.period


def _pair_product_sequence(group: NaryGroup, a: int, x: int, r: int, y: int, s: int):
    n = group.arity
    rs = (r + s + 1) % (n - 1)
    seq = (x,) + (a,) * r + (y,) + (a,) * s + (group.skew(a),) + (a,) * (n - 2 - rs)
    return seq, rs


def covering_group(group: NaryGroup, a: int) -> CoveringGroup:
    """Build and fully verify the smallest covering group at anchor a.

    The multiplication table is checked to be a group, the identity must be
    <skew(a), n-2>, and the closed-form inverse
    ``<fold(skew(a), a^(n-2-t), skew(x), x^(n-3), skew(a), a^(n-2-k)), k>``
    with ``k = (n-3-t) mod (n-1)`` is compared against the table inverse for
    every element.  (The tail exponent n-2-k equals the usual t+1 except at
    t = n-2, where k wraps and the padding must shrink to zero with it.)  If
    the formula ever disagreed, the table inverse would win and the
    discrepancy would be logged; structural failures raise instead.
    """
    group.require_verified()
    m, n = group.order, group.arity
    period = n - 1
    size = m * period
    abar = group.skew(a)
    table = np.zeros((size, size), dtype=np.int64)
    for x in range(m):
        for r in range(period):
            for y in range(m):
                for s in range(period):
                    seq, rs = _pair_product_sequence(group, a, x, r, y, s)
                    z = group.eval_long(seq)
                    table[x * period + r, y * period + s] = z * period + rs
    cover = BinaryGroup(table)  # raises on any group-axiom failure
    if cover.identity != abar * period + (n - 2):
        raise InvalidGroupError(
            f"cover identity is {cover.identity}, expected pair ({abar},{n - 2})"
        )
    mismatches = []
    for x in range(m):
        for t in range(period):
            k = (n - 3 - t) % period
            seq = (
                (abar,) + (a,) * (n - 2 - t) + (group.skew(x),) + (x,) * (n - 3)
                + (abar,) + (a,) * (n - 2 - k)
            )
            z = group.eval_long(seq)
            if cover.inv(x * period + t) != z * period + k:
                mismatches.append(x * period + t)
    if mismatches:
        logger.warning(
            "cover inverse formula disagreed with the table at %d elements; "
            "the table inverse is authoritative", len(mismatches),
        )
    return CoveringGroup(group, int(a), cover, tuple(mismatches))


def cover_H(cover: CoveringGroup) -> tuple[int, ...]:
    """The slice H = {<x, n-2>}: normal, cyclic quotient of order n-1, a retract copy."""
    n = cover.base.arity
    h = tuple(cover.pair_index(x, n - 2) for x in range(cover.base.order))
    if not cover.group.is_normal_subgroup(h):
        raise InvalidGroupError("cover slice H is not a normal subgroup")
    quot, _ = cover.group.quotient(h)
    if not (quot.order == cover.period and quot.is_cyclic):
        raise InvalidGroupError(
            f"cover quotient by H has order {quot.order}, expected cyclic {cover.period}"
        )
    h_group, _ = cover.group.subgroup_group(h)
    if find_isomorphism(h_group, retract(cover.base, cover.anchor)) is None:
        raise InvalidGroupError("cover slice H is not isomorphic to the retract")
    return h


def verify_embedding(cover: CoveringGroup, budget: int | None = None) -> VerificationReport:
    """n-fold products of embedded elements must project to the n-ary operation."""
    g = cover.base
    m, n = g.order, g.arity
    emb = cover.embed
    table = cover.group.table
    budget = resolve_budget(budget)
    total = m ** n
    sampled = total > budget
    if not sampled:
        xs = np.stack(np.unravel_index(np.arange(total), (m,) * n), axis=1)
    else:
        xs = sample_tuples(SAMPLE_COUNT, n, m)
    acc = emb[xs[:, 0]]
    for k in range(1, n):
        acc = table[acc, emb[xs[:, k]]]
    want = emb[g.eval_batch(xs)]
    bad = np.nonzero(acc != want)[0]
    if bad.size:
        return VerificationReport.fail(
            [("embedding-product", tuple(int(v) for v in xs[bad[0]]))],
            checked=len(xs), sampled=sampled,
        )
    return VerificationReport.ok(checked=len(xs), sampled=sampled)
