"""Finite n-ary groupoids and the polyadic group axioms.

An :class:`NaryGroup` is a carrier {0..m-1} with an n-ary operation (n >= 3)
held either as a dense table of m^n element indices or in decomposed form as
:class:`~polyadic.binary.HGData` (binary group, automorphism, twist element).
Verification covers (i,j)-associativity for all argument pairs, unique
solvability at every place, and the Dörnte skew identities once skew elements
exist.  All checks are exhaustive within the tuple budget and fall back to
deterministic sampling above it.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Iterable, Sequence

import numpy as np

from .binary import HGData
from .errors import InvalidGroupError, SizeLimitError
from .report import (
    SAMPLE_COUNT,
    VerificationReport,
    merge_chunk_failures,
    resolve_budget,
    sample_tuples,
)

DENSE_LIMIT = 1 << 24
_CHUNK_CELLS = 1 << 21


class NaryGroup:
    """Carrier {0..m-1} with an n-ary operation, dense or decomposed backend."""

    def __init__(self, arity: int, order: int, table=None, hg: HGData | None = None,
                 labels: Sequence[str] | None = None):
        if arity < 3:
            raise InvalidGroupError("arity must be at least 3")
        if order < 1:
            raise InvalidGroupError("order must be positive")
        if (table is None) == (hg is None):
            raise InvalidGroupError("exactly one backend (table or hg) required")
        self.arity = int(arity)
        self.order = int(order)
        self.labels = tuple(labels) if labels is not None else None
        if self.labels is not None and len(self.labels) != self.order:
            raise InvalidGroupError("label list length must equal the order")
        self._table = None
        self.hg = hg
        if table is not None:
            if self.order ** self.arity > DENSE_LIMIT:
                raise SizeLimitError(
                    f"dense tables limited to {DENSE_LIMIT} entries; use the hg backend"
                )
            arr = np.asarray(table, dtype=np.int64)
            if arr.size != self.order ** self.arity:
                raise InvalidGroupError(
                    f"table needs {self.order ** self.arity} entries, got {arr.size}"
                )
            if arr.size and (arr.min() < 0 or arr.max() >= self.order):
                raise InvalidGroupError("table entries must be element indices")
            self._table = np.ascontiguousarray(arr.reshape((self.order,) * self.arity))
        else:
            if hg.group.order != self.order or hg.arity != self.arity:
                raise InvalidGroupError("hg data does not match order/arity")
        self._skew = np.full(self.order, -1, dtype=np.int64)
        self._verify_report: VerificationReport | None = None

    # -- construction helpers ------------------------------------------------

    @classmethod
    def from_table(cls, arity: int, order: int, table, labels=None) -> "NaryGroup":
        return cls(arity, order, table=table, labels=labels)

    @classmethod
    def from_function(cls, arity: int, order: int, fn, labels=None) -> "NaryGroup":
        """Materialize ``fn(*xs) -> int`` into a dense table."""
        shape = (order,) * arity
        grids = np.indices(shape).reshape(arity, -1)
        flat = np.array([fn(*xs) for xs in grids.T], dtype=np.int64)
        return cls(arity, order, table=flat.reshape(shape), labels=labels)

    @classmethod
    def from_hg(cls, hg: HGData, labels=None) -> "NaryGroup":
        return cls(hg.arity, hg.group.order, hg=hg, labels=labels)

    # -- evaluation ----------------------------------------------------------

    def _check_args(self, xs) -> tuple[int, ...]:
        xs = tuple(int(x) for x in xs)
        if len(xs) != self.arity:
            raise ValueError(f"expected {self.arity} arguments, got {len(xs)}")
        if any(x < 0 or x >= self.order for x in xs):
            raise ValueError(f"element index out of range in {xs}")
        return xs

    def eval(self, xs: Iterable[int]) -> int:
        """Apply the n-ary operation once."""
        xs = self._check_args(xs)
        if self._table is not None:
            return int(self._table[xs])
        g, pows = self.hg.group, self.hg.phi_powers
        acc = xs[0]
        for k in range(1, self.arity):
            acc = g.mul(acc, int(pows[k][xs[k]]))
        return g.mul(acc, self.hg.b)

    def eval_batch(self, xs: np.ndarray) -> np.ndarray:
        """Vectorized eval over rows of an (N, n) index matrix."""
        xs = np.asarray(xs, dtype=np.int64)
        if self._table is not None:
            return self._table[tuple(xs.T)]
        g, pows = self.hg.group, self.hg.phi_powers
        acc = xs[:, 0]
        for k in range(1, self.arity):
            acc = g.table[acc, pows[k][xs[:, k]]]
        return g.table[acc, self.hg.b]

    def eval_long(self, xs: Iterable[int], fold: str = "left") -> int:
        """Fold the operation over a sequence of length k(n-1)+1, k >= 1."""
        xs = [int(x) for x in xs]
        n = self.arity
        if len(xs) < n or (len(xs) - 1) % (n - 1) != 0:
            raise ValueError(
                f"sequence length must be k(n-1)+1 for k>=1, got {len(xs)}"
            )
        while len(xs) > n:
            if fold == "left":
                xs[:n] = [self.eval(xs[:n])]
            elif fold == "right":
                xs[-n:] = [self.eval(xs[-n:])]
            else:
                raise ValueError(f"unknown fold order {fold!r}")
        return self.eval(xs)

    def dense(self) -> np.ndarray:
        """The full operation table, shape (m,)*n.  Cached."""
        if self._table is None:
            if self.order ** self.arity > DENSE_LIMIT:
                raise SizeLimitError("group too large to materialize densely")
            g, pows = self.hg.group, self.hg.phi_powers
            m, n = self.order, self.arity
            acc = np.arange(m).reshape((m,) + (1,) * (n - 1))
            for k in range(1, n):
                col = pows[k].reshape((1,) * k + (m,) + (1,) * (n - 1 - k))
                acc = g.table[acc, col]
            self._table = np.ascontiguousarray(g.table[acc, self.hg.b])
        return self._table

    # -- skew elements ---------------------------------------------------------

    def skew(self, x: int) -> int:
        """The unique z with f(x,...,x,z) = x; cached per element."""
        x = int(x)
        if self._skew[x] >= 0:
            return int(self._skew[x])
        if self._table is not None:
            row = self._table[(x,) * (self.arity - 1)]
            hits = np.nonzero(row == x)[0]
            if len(hits) != 1:
                raise InvalidGroupError(
                    f"skew of {x} not unique: {len(hits)} solutions (unverified input?)"
                )
            z = int(hits[0])
        else:
            # closed form: inverse of phi(x) phi^2(x) ... phi^(n-2)(x) b
            g, pows = self.hg.group, self.hg.phi_powers
            acc = g.identity
            for k in range(1, self.arity - 1):
                acc = g.mul(acc, int(pows[k][x]))
            z = g.inv(g.mul(acc, self.hg.b))
            if self.eval((x,) * (self.arity - 1) + (z,)) != x:
                raise InvalidGroupError(f"skew closed form failed at {x}")
        self._skew[x] = z
        return z

    def skew_table(self) -> np.ndarray:
        return np.array([self.skew(x) for x in range(self.order)], dtype=np.int64)

    # -- bookkeeping -----------------------------------------------------------

    def require_verified(self, budget: int | None = None) -> None:
        """Raise unless the group axioms have been checked and hold."""
        if self._verify_report is None:
            self._verify_report = verify_nary_group(self, budget=budget)
        if not self._verify_report.passed:
            f = self._verify_report.first()
            raise InvalidGroupError(
                f"not an n-ary group: {f.axiom} witness={f.witness}"
            )

    def equals(self, other: "NaryGroup") -> bool:
        return (
            self.arity == other.arity
            and self.order == other.order
            and np.array_equal(self.dense(), other.dense())
        )

    def __eq__(self, other):
        return isinstance(other, NaryGroup) and self.equals(other)

    def __hash__(self):
        return hash((self.arity, self.order))

    def __repr__(self):
        kind = "dense" if self._table is not None else "hg"
        return f"NaryGroup(arity={self.arity}, order={self.order}, {kind})"


# -- associativity ------------------------------------------------------------

def _fold_chunk(table: np.ndarray, n: int, i: int, lo: int, hi: int) -> np.ndarray:
    """f(x_1^{i-1}, f(x_i^{n+i-1}), x_{n+i}^{2n-1}) over the tuple cube.

    The first of the 2n-1 variables is restricted to [lo, hi); the result has
    shape (hi-lo, m, ..., m) with one axis per remaining variable.
    """
    m = table.shape[0]
    total_dims = 2 * n - 1
    index = []
    for k in range(1, n + 1):
        if k == i:
            arr = table[lo:hi] if i == 1 else table
            before = i - 1
            index.append(arr.reshape((1,) * before + arr.shape + (1,) * (total_dims - before - n)))
        else:
            dim = (k - 1) if k < i else (n + k - 2)
            ar = np.arange(lo, hi) if dim == 0 else np.arange(m)
            index.append(ar.reshape((1,) * dim + (ar.size,) + (1,) * (total_dims - dim - 1)))
    return table[tuple(index)]


def _fold_at(group: NaryGroup, i: int, xs: np.ndarray) -> np.ndarray:
    """Row-wise value of the i-composed fold on an (N, 2n-1) sample matrix."""
    n = group.arity
    inner = group.eval_batch(xs[:, i - 1:i + n - 1])
    cols = [xs[:, k - 1] for k in range(1, i)] + [inner] + [xs[:, n + k - 2] for k in range(i + 1, n + 1)]
    return group.eval_batch(np.stack(cols, axis=1))


def verify_associativity(group: NaryGroup, budget: int | None = None,
                         workers: int = 1) -> VerificationReport:
    """Check (i,j)-associativity for all 1 <= i < j <= n over all (2n-1)-tuples.

    Within budget the scan is exhaustive (chunked over the first variable, so
    it can be spread across workers with a deterministic lowest-witness merge);
    above budget a fixed-seed sample is used and the report is flagged.
    """
    m, n = group.order, group.arity
    budget = resolve_budget(budget)
    total = m ** (2 * n - 1)
    if total <= budget and m ** n <= DENSE_LIMIT:
        table = group.dense()
        chunk_len = max(1, _CHUNK_CELLS // max(1, m ** (2 * n - 2)))
        bounds = [(lo, min(lo + chunk_len, m)) for lo in range(0, m, chunk_len)]

        def scan(bound):
            lo, hi = bound
            folds = {i: _fold_chunk(table, n, i, lo, hi) for i in range(1, n + 1)}
            found = {}
            for i in range(1, n + 1):
                for j in range(i + 1, n + 1):
                    bad = np.argwhere(folds[i] != folds[j])
                    if bad.size:
                        w = bad[0]
                        found[f"associativity(i={i},j={j})"] = (int(w[0]) + lo,) + tuple(int(v) for v in w[1:])
            return found

        if workers > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                results = list(pool.map(scan, bounds))
        else:
            results = [scan(b) for b in bounds]
        failures = merge_chunk_failures(results)
        if failures:
            return VerificationReport.fail(failures, checked=total)
        return VerificationReport.ok(checked=total)

    xs = sample_tuples(SAMPLE_COUNT, 2 * n - 1, m)
    folds = {i: _fold_at(group, i, xs) for i in range(1, n + 1)}
    failures = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            bad = np.nonzero(folds[i] != folds[j])[0]
            if bad.size:
                rows = xs[bad]
                k = np.lexsort(rows.T[::-1])[0]
                failures[f"associativity(i={i},j={j})"] = tuple(int(v) for v in rows[k])
    if failures:
        return VerificationReport.fail(sorted(failures.items()), checked=len(xs), sampled=True)
    return VerificationReport.ok(checked=len(xs), sampled=True)


# -- solvability ----------------------------------------------------------------

def verify_quasigroup(group: NaryGroup, budget: int | None = None) -> VerificationReport:
    """At each place i, with the other arguments fixed, z -> f(...z...) must permute."""
    m, n = group.order, group.arity
    budget = resolve_budget(budget)
    want = np.arange(m)
    if m ** n <= min(budget, DENSE_LIMIT):
        table = group.dense()
        failures = []
        for place in range(n):
            rows = np.moveaxis(table, place, -1).reshape(-1, m)
            ok = (np.sort(rows, axis=1) == want).all(axis=1)
            bad = np.nonzero(~ok)[0]
            if bad.size:
                fixed = np.unravel_index(int(bad[0]), (m,) * (n - 1))
                failures.append((f"solvability(place={place + 1})", tuple(int(v) for v in fixed)))
        checked = n * m ** n
        if failures:
            return VerificationReport.fail(failures, checked=checked)
        return VerificationReport.ok(checked=checked)

    count = max(1, SAMPLE_COUNT // m)
    fixings = sample_tuples(count, n - 1, m)
    failures = []
    for place in range(n):
        cols = [np.repeat(fixings[:, k], m) for k in range(n - 1)]
        cols.insert(place, np.tile(want, count))
        vals = group.eval_batch(np.stack(cols, axis=1)).reshape(count, m)
        ok = (np.sort(vals, axis=1) == want).all(axis=1)
        bad = np.nonzero(~ok)[0]
        if bad.size:
            failures.append((f"solvability(place={place + 1})", tuple(int(v) for v in fixings[bad[0]])))
    if failures:
        return VerificationReport.fail(failures, checked=n * count, sampled=True)
    return VerificationReport.ok(checked=n * count, sampled=True)


# -- skew identities -------------------------------------------------------------

def _skew_identity_failures(group: NaryGroup) -> list[tuple[str, tuple[int, ...]]]:
    """Dörnte identities for every element and admissible position."""
    m, n = group.order, group.arity
    failures = []
    skews = group.skew_table()
    for x in range(m):
        xb = int(skews[x])
        for k in range(1, n + 1):
            if group.eval((x,) * (k - 1) + (xb,) + (x,) * (n - k)) != x:
                failures.append((f"skew-neutrality(k={k})", (x,)))
                break
        for y in range(m):
            for i in range(2, n + 1):
                if group.eval((x,) * (i - 2) + (xb,) + (x,) * (n - i) + (y,)) != y:
                    failures.append((f"skew-cancel-left(i={i})", (x, y)))
                    break
            for j in range(2, n + 1):
                if group.eval((y,) + (x,) * (n - j) + (xb,) + (x,) * (j - 2)) != y:
                    failures.append((f"skew-cancel-right(j={j})", (x, y)))
                    break
    return failures


def verify_nary_group(group: NaryGroup, budget: int | None = None,
                      workers: int = 1) -> VerificationReport:
    """Associativity + unique solvability, then the skew identities."""
    report = verify_associativity(group, budget=budget, workers=workers)
    report = report.merge(verify_quasigroup(group, budget=budget))
    if not report.passed:
        return report
    try:
        failures = _skew_identity_failures(group)
    except InvalidGroupError:
        failures = [("skew-undefined", ())]
    if failures:
        return VerificationReport.fail(failures, checked=report.checked,
                                       sampled=report.sampled)
    out = VerificationReport.ok(checked=report.checked, sampled=report.sampled)
    group._verify_report = out
    return out


# -- structural predicates --------------------------------------------------------

def is_nary_identity(group: NaryGroup, e: int) -> bool:
    """Does f(e..e, x, e..e) = x hold at every argument position?

    Such elements need not be unique: in (Z2, x+y+z) both elements qualify.
    """
    m, n = group.order, group.arity
    want = np.arange(m)
    table = group.dense()
    return all(
        np.array_equal(table[(e,) * i + (slice(None),) + (e,) * (n - 1 - i)], want)
        for i in range(n)
    )


def has_nary_identity(group: NaryGroup) -> int | None:
    """Smallest element acting as an identity at every position, if any."""
    for e in range(group.order):
        if is_nary_identity(group, e):
            return e
    return None


def is_semiabelian(group: NaryGroup, budget: int | None = None) -> bool:
    """Does swapping the first and last arguments never change the value?"""
    m, n = group.order, group.arity
    if m ** n <= min(resolve_budget(budget), DENSE_LIMIT):
        table = group.dense()
        return bool(np.array_equal(table, np.swapaxes(table, 0, n - 1)))
    xs = sample_tuples(SAMPLE_COUNT, n, m)
    swapped = xs.copy()
    swapped[:, [0, n - 1]] = swapped[:, [n - 1, 0]]
    return bool(np.array_equal(group.eval_batch(xs), group.eval_batch(swapped)))


def is_medial(group: NaryGroup, budget: int | None = None) -> bool:
    """Row-wise versus column-wise composition over all n x n argument grids.

    When the medial law holds, the skew map is additionally checked to be a
    homomorphism (it must be, in any medial group); a violation there means a
    corrupted input and raises.
    """
    m, n = group.order, group.arity
    budget = resolve_budget(budget)
    total = m ** (n * n)
    exhaustive = total <= budget

    def grid_chunks():
        step = 1 << 16
        if exhaustive:
            for lo in range(0, total, step):
                idx = np.arange(lo, min(lo + step, total))
                yield np.stack(np.unravel_index(idx, (m,) * (n * n)), axis=1)
        else:
            sample = sample_tuples(SAMPLE_COUNT, n * n, m)
            for lo in range(0, len(sample), step):
                yield sample[lo:lo + step]

    medial = True
    for chunk in grid_chunks():
        chunk = chunk.reshape(-1, n, n)
        rows = np.stack([group.eval_batch(chunk[:, r, :]) for r in range(n)], axis=1)
        cols = np.stack([group.eval_batch(chunk[:, :, c]) for c in range(n)], axis=1)
        if not np.array_equal(group.eval_batch(rows), group.eval_batch(cols)):
            medial = False
            break
    if medial:
        skews = group.skew_table()
        table = group.dense()
        lhs = skews[table]
        rhs = table[np.ix_(*([skews] * n))]
        if not np.array_equal(lhs, rhs):
            raise InvalidGroupError("medial law holds but skew is not a homomorphism")
    return medial
