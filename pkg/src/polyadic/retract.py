"""Binary retracts and the decomposition of n-ary groups into twisted form.

Any verified n-ary group is, for every anchor a, the group
``Ret_a: x*y = f(x, a^(n-2), y)`` twisted by an automorphism phi and an
element b so that ``f(x1..xn) = x1 phi(x2) phi^2(x3) ... phi^(n-1)(xn) b``.
The candidate formulas used here (phi from conjugating by the anchor's skew,
b from folding the skew n times) are an implementation choice: they are
always re-verified against all four decomposition conditions and the build
fails loudly if they ever do not hold.
"""

from __future__ import annotations

import numpy as np

from .binary import BinaryGroup, HGData
from .core import DENSE_LIMIT, NaryGroup
from .errors import InvalidGroupError
from .report import SAMPLE_COUNT, resolve_budget, sample_tuples


def retract(group: NaryGroup, a: int) -> BinaryGroup:
    """The binary group x*y = f(x, a,...,a, y) with n-2 anchor copies.

    The identity must be the skew of a, and the inverse must match
    ``x^-1 = f(skew(a), x^(n-3), skew(x), skew(a))``; both are checked.
    """
    group.require_verified()
    n = group.arity
    table = group.dense()[(slice(None),) + (int(a),) * (n - 2) + (slice(None),)]
    ret = BinaryGroup(table)
    abar = group.skew(a)
    if ret.identity != abar:
        raise InvalidGroupError(
            f"retract identity {ret.identity} differs from skew({a})={abar}"
        )
    for x in range(group.order):
        formula = group.eval((abar,) + (x,) * (n - 3) + (group.skew(x), abar))
        if formula != ret.inv(x):
            raise InvalidGroupError(
                f"retract inverse formula disagrees with table at x={x}"
            )
    return ret


def retract_isomorphism(group: NaryGroup, e: int, p: int) -> np.ndarray:
    """The map h(x) = f(e^(n-2), x, skew(p)), verified Ret_e -> Ret_p."""
    group.require_verified()
    n, m = group.arity, group.order
    pbar = group.skew(p)
    h = np.array(
        [group.eval((e,) * (n - 2) + (x, pbar)) for x in range(m)], dtype=np.int64
    )
    if sorted(h.tolist()) != list(range(m)):
        raise InvalidGroupError(f"retract map e={e}, p={p} is not a bijection")
    re_tab, rp_tab = retract(group, e).table, retract(group, p).table
    if not np.array_equal(h[re_tab], rp_tab[h][:, h]):
        raise InvalidGroupError(
            f"retract map e={e}, p={p} is not a homomorphism"
        )
    return h


def hg_decompose(group: NaryGroup, a: int, budget: int | None = None) -> HGData:
    """Decompose a verified n-ary group at anchor a.

    Uses phi(x) = f(skew(a), x, a^(n-2)) and b = f(skew(a)^(n)); validates the
    automorphism/fixpoint/conjugation conditions on construction and then
    re-checks the product formula over all n-tuples within budget.
    """
    group.require_verified()
    n, m = group.arity, group.order
    base = retract(group, a)
    abar = group.skew(a)
    phi = np.array(
        [group.eval((abar, x) + (a,) * (n - 2)) for x in range(m)], dtype=np.int64
    )
    b = group.eval((abar,) * n)
    data = HGData(base, phi, b, n)
    rebuilt = NaryGroup.from_hg(data)
    budget = resolve_budget(budget)
    if m ** n <= min(budget, DENSE_LIMIT):
        if not np.array_equal(rebuilt.dense(), group.dense()):
            bad = np.argwhere(rebuilt.dense() != group.dense())[0]
            raise InvalidGroupError(
                f"decomposition at a={a} fails the product formula at {tuple(bad)}"
            )
    else:
        xs = sample_tuples(SAMPLE_COUNT, n, m)
        if not np.array_equal(rebuilt.eval_batch(xs), group.eval_batch(xs)):
            raise InvalidGroupError(f"decomposition at a={a} fails the product formula")
    return data


def hg_construct(data: HGData, labels=None) -> NaryGroup:
    """n-ary group from decomposition data (invariants checked by HGData)."""
    return NaryGroup.from_hg(data, labels=labels)


def derived(base: BinaryGroup, arity: int) -> NaryGroup:
    """f(x1..xn) = x1 x2 ... xn, the reducible n-ary group over ``base``."""
    m = base.order
    return hg_construct(HGData(base, np.arange(m), base.identity, arity))


def b_derived(base: BinaryGroup, b: int, arity: int) -> NaryGroup:
    """f(x1..xn) = x1 x2 ... xn b for a central twist b."""
    if b not in base.center:
        raise InvalidGroupError(f"twist element {b} is not central")
    return hg_construct(HGData(base, np.arange(base.order), int(b), arity))
