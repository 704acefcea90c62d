"""Actions of n-ary groups on finite sets; conjugacy via the canonical self-action.

An action assigns to every group element a map on points such that folding
the group operation matches composing the maps, every point is fixed by some
element, and every element acts bijectively.  The canonical self-action
``x.a = f(x, a, x^(n-3), skew(x))`` turns orbits into conjugacy classes and
stabilizers into centralizers.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import NaryGroup, is_semiabelian
from .errors import InvalidGroupError
from .report import VerificationReport, resolve_budget, sample_tuples, SAMPLE_COUNT
from .structure import SubgroupRef, verify_subgroup


@dataclass(frozen=True)
class Action:
    """Materialized action table: ``table[x, a]`` is the image of point a under x."""

    group: NaryGroup
    npoints: int
    table: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "table", np.asarray(self.table, dtype=np.int64))
        if self.table.shape != (self.group.order, self.npoints):
            raise InvalidGroupError("action table must be (order, npoints)")
        if self.table.size and (self.table.min() < 0 or self.table.max() >= self.npoints):
            raise InvalidGroupError("action table entries must be point indices")

    def apply(self, x: int, a: int) -> int:
        return int(self.table[x, a])


@dataclass(frozen=True)
class Partition:
    """Disjoint sorted blocks covering a finite point set."""

    blocks: tuple[tuple[int, ...], ...]

    def block_of(self, a: int) -> int:
        for i, blk in enumerate(self.blocks):
            if a in blk:
                return i
        raise KeyError(a)

    def sizes(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)


def verify_action(act: Action, budget: int | None = None) -> VerificationReport:
    """Check the three action axioms (composition, fixed points, bijectivity)."""
    g, t = act.group, act.table
    m, n, npts = g.order, g.arity, act.npoints
    failures = []
    for x in range(m):
        if sorted(t[x].tolist()) != list(range(npts)):
            failures.append((f"action-bijectivity(x={x})", (x,)))
            break
    for a in range(npts):
        if not np.any(t[:, a] == a):
            failures.append(("action-fixed-point", (a,)))
            break
    total = (m ** n) * npts
    budget = resolve_budget(budget)
    sampled = total > budget
    if not sampled:
        composed = t
        for _ in range(n - 1):
            composed = t[:, composed]          # prepend one more acting element
        lhs = t[g.dense()]                     # shape (m,)*n + (npts,)
        bad = np.argwhere(lhs != composed)
        if bad.size:
            failures.append(("action-composition", tuple(int(v) for v in bad[0])))
        checked = total
    else:
        xs = sample_tuples(SAMPLE_COUNT, n + 1, m)
        xs[:, n] %= npts
        lhs = t[g.eval_batch(xs[:, :n]), xs[:, n]]
        rhs = xs[:, n]
        for k in range(n - 1, -1, -1):
            rhs = t[xs[:, k], rhs]
        bad = np.nonzero(lhs != rhs)[0]
        if bad.size:
            failures.append(("action-composition", tuple(int(v) for v in xs[bad[0]])))
        checked = len(xs)
    if failures:
        return VerificationReport.fail(failures, checked=checked, sampled=sampled)
    return VerificationReport.ok(checked=checked, sampled=sampled)


def canonical_action(group: NaryGroup) -> Action:
    """The self-action x.a = f(x, a, x^(n-3), skew(x))."""
    group.require_verified()
    m, n = group.order, group.arity
    table = np.zeros((m, m), dtype=np.int64)
    for x in range(m):
        xb = group.skew(x)
        for a in range(m):
            table[x, a] = group.eval((x, a) + (x,) * (n - 3) + (xb,))
    return Action(group, m, table)


def orbits(act: Action) -> Partition:
    """Union-find over all (element, point) pairs; blocks keyed by least member."""
    parent = list(range(act.npoints))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for x in range(act.group.order):
        for a in range(act.npoints):
            ra, rb = find(a), find(act.apply(x, a))
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    groups: dict[int, list[int]] = {}
    for a in range(act.npoints):
        groups.setdefault(find(a), []).append(a)
    return Partition(tuple(tuple(sorted(v)) for _, v in sorted(groups.items())))


def stabilizer(act: Action, a: int) -> SubgroupRef:
    """{x : x.a = a}, verified to be an n-ary subgroup."""
    elems = tuple(int(x) for x in np.nonzero(act.table[:, a] == a)[0])
    report = verify_subgroup(act.group, elems)
    if not report.passed:
        raise InvalidGroupError(
            f"stabilizer of {a} is not a subgroup: {report.first().axiom}"
        )
    return elems


def conjugacy_classes(group: NaryGroup) -> Partition:
    """Orbits of the canonical self-action."""
    return orbits(canonical_action(group))


def centralizer(group: NaryGroup, a: int) -> SubgroupRef:
    """Stabilizer of a under the canonical action, with the shifted identities checked.

    Every member x must satisfy ``f(x^i, a, x^j, skew(x), x^k) = a`` and the
    variant with a and skew(x) exchanged, for all i+j+k = n-2.
    """
    act = canonical_action(group)
    elems = stabilizer(act, a)
    n = group.arity
    for x in elems:
        xb = group.skew(x)
        for i in range(n - 1):
            for j in range(n - 1 - i):
                k = n - 2 - i - j
                if group.eval((x,) * i + (a,) + (x,) * j + (xb,) + (x,) * k) != a:
                    raise InvalidGroupError(
                        f"centralizer identity fails at x={x}, (i,j,k)=({i},{j},{k})"
                    )
                if group.eval((x,) * i + (xb,) + (x,) * j + (a,) + (x,) * k) != a:
                    raise InvalidGroupError(
                        f"centralizer identity (swapped) fails at x={x}, (i,j,k)=({i},{j},{k})"
                    )
    return elems


def is_conjugation_congruence(group: NaryGroup) -> bool:
    """Is componentwise conjugacy compatible with the operation?

    True iff the class of f(x1..xn) only depends on the classes of the
    arguments, checked over all tuples.  Guaranteed for semiabelian groups.
    """
    cls = np.zeros(group.order, dtype=np.int64)
    for i, blk in enumerate(conjugacy_classes(group).blocks):
        cls[list(blk)] = i
    table = group.dense()
    blocked = cls[table]
    seen: dict[tuple[int, ...], int] = {}
    flat_keys = np.stack([cls[idx] for idx in np.indices(table.shape)], axis=-1)
    keys = flat_keys.reshape(-1, group.arity)
    vals = blocked.reshape(-1)
    for key, val in zip(map(tuple, keys.tolist()), vals.tolist()):
        if seen.setdefault(key, val) != val:
            return False
    return True


def conjugate_subgroup_closure(group: NaryGroup, subgroup: SubgroupRef) -> SubgroupRef:
    """All elements conjugate to members of the subgroup (semiabelian only)."""
    if not is_semiabelian(group):
        raise InvalidGroupError("conjugate closure requires a semiabelian group")
    report = verify_subgroup(group, subgroup)
    if not report.passed:
        raise InvalidGroupError(f"not a subgroup: {report.first().axiom}")
    classes = conjugacy_classes(group)
    out: set[int] = set()
    for blk in classes.blocks:
        if set(blk) & set(subgroup):
            out |= set(blk)
    closure = tuple(sorted(out))
    check = verify_subgroup(group, closure)
    if not check.passed:
        raise InvalidGroupError(
            f"conjugate closure is not a subgroup: {check.first().axiom}"
        )
    return closure
