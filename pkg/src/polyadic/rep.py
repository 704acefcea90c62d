"""Complex matrix representations and characters of finite n-ary groups.

A representation maps elements to invertible matrices so that the image of
``f(x1..xn)`` is the n-fold matrix product, and at least one element maps to
the identity matrix (the kernel condition): multiplicative solutions with an
empty kernel ("hom-solutions", e.g. the constant -1) are deliberately not
representations and are tracked separately where they matter.

Matrix equality is tolerance-based throughout (default 1e-9 per entry,
1e-6 for accumulated sums such as orthogonality).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import reduce

import numpy as np

from .action import conjugacy_classes
from .binary import BinaryGroup, HGData, abelian_characters, linear_characters
from .core import NaryGroup, is_semiabelian, verify_nary_group
from .cover import CoveringGroup, covering_group
from .errors import CriterionUnavailableError, InvalidGroupError, SizeLimitError
from .report import SAMPLE_COUNT, VerificationReport, resolve_budget, sample_tuples
from .retract import hg_construct, retract, hg_decompose
from .structure import QuotientGroup, SubgroupRef, central_elements, is_normal, verify_subgroup

EPS = 1e-9
SUM_EPS = 1e-6
_CHUNK = 1 << 15


def _mat_close(a: np.ndarray, b: np.ndarray, eps: float) -> bool:
    return bool(np.abs(a - b).max() <= eps)


@dataclass(frozen=True)
class Representation:
    """Map from carrier elements to invertible complex matrices."""

    group: NaryGroup
    images: np.ndarray
    eps: float = EPS

    def __post_init__(self):
        arr = np.asarray(self.images, dtype=complex)
        if arr.ndim != 3 or arr.shape[0] != self.group.order or arr.shape[1] != arr.shape[2]:
            raise InvalidGroupError("images must be (order, d, d)")
        object.__setattr__(self, "images", arr)

    @property
    def dim(self) -> int:
        return self.images.shape[1]

    def value_key(self, digits: int = 9) -> tuple:
        return tuple(np.round(self.images, digits).ravel().tolist())


@dataclass(frozen=True)
class BinaryRepresentation:
    """Ordinary matrix representation of a finite binary group."""

    group: BinaryGroup
    images: np.ndarray
    eps: float = EPS

    def __post_init__(self):
        arr = np.asarray(self.images, dtype=complex)
        if arr.ndim != 3 or arr.shape[0] != self.group.order or arr.shape[1] != arr.shape[2]:
            raise InvalidGroupError("images must be (order, d, d)")
        object.__setattr__(self, "images", arr)

    @property
    def dim(self) -> int:
        return self.images.shape[1]


@dataclass(frozen=True)
class Character:
    """Trace vector of a representation."""

    group: NaryGroup
    values: np.ndarray
    dim: int

    def __post_init__(self):
        object.__setattr__(self, "values", np.asarray(self.values, dtype=complex))


@dataclass(frozen=True)
class GModule:
    """A representation together with an element acting as the identity."""

    rep: Representation
    p: int

    def __post_init__(self):
        d = self.rep.dim
        if not _mat_close(self.rep.images[self.p], np.eye(d), self.rep.eps):
            raise InvalidGroupError(f"element {self.p} does not act as the identity")


def _tuple_rows(m: int, n: int, budget: int):
    """All (or sampled) n-tuples as a row matrix, plus the sampled flag."""
    total = m ** n
    if total <= budget:
        rows = np.stack(np.unravel_index(np.arange(total), (m,) * n), axis=1)
        return rows, False
    return sample_tuples(SAMPLE_COUNT, n, m), True


def verify_representation(group: NaryGroup, images, eps: float = EPS,
                          budget: int | None = None) -> VerificationReport:
    """Homomorphism over all n-tuples, non-empty kernel, and skew powers.

    On an otherwise passing representation the skew compatibility
    ``L(skew(e)) = L(e)^(2-n)`` is also required for every element e.
    """
    images = np.asarray(images, dtype=complex)
    m, n = group.order, group.arity
    d = images.shape[1]
    failures = []
    if images.shape != (m, d, d):
        return VerificationReport.fail([("images-shape", ())])
    dets = np.linalg.det(images)
    bad = np.nonzero(np.abs(dets) <= eps)[0]
    if bad.size:
        return VerificationReport.fail([(f"not-invertible(x={int(bad[0])})", (int(bad[0]),))])
    rows, sampled = _tuple_rows(m, n, resolve_budget(budget))
    checked = len(rows)
    for lo in range(0, len(rows), _CHUNK):
        chunk = rows[lo:lo + _CHUNK]
        acc = images[chunk[:, 0]]
        for k in range(1, n):
            acc = acc @ images[chunk[:, k]]
        want = images[group.eval_batch(chunk)]
        err = np.abs(acc - want).reshape(len(chunk), -1).max(axis=1)
        idx = np.nonzero(err > eps)[0]
        if idx.size:
            failures.append(("homomorphism", tuple(int(v) for v in chunk[idx[0]])))
            break
    eye = np.eye(d)
    ker = [x for x in range(m) if _mat_close(images[x], eye, eps)]
    if not ker:
        failures.append(("kernel-empty", ()))
    if not failures:
        for e in range(m):
            want = np.linalg.matrix_power(images[e], 2 - n)
            if not _mat_close(images[group.skew(e)], want, eps * 10):
                failures.append((f"skew-power(e={e})", (e,)))
                break
    if failures:
        return VerificationReport.fail(failures, checked=checked, sampled=sampled)
    return VerificationReport.ok(checked=checked, sampled=sampled)


def build_representation(group: NaryGroup, images, eps: float = EPS) -> Representation:
    """Construct and verify, raising on any axiom failure."""
    report = verify_representation(group, images, eps=eps)
    if not report.passed:
        f = report.first()
        raise InvalidGroupError(f"not a representation: {f.axiom} witness={f.witness}")
    return Representation(group, images, eps)


def verify_binary_representation(group: BinaryGroup, images, eps: float = EPS) -> VerificationReport:
    """Ordinary-group check: pairwise homomorphism and identity image."""
    images = np.asarray(images, dtype=complex)
    m = group.order
    d = images.shape[1]
    if images.shape != (m, d, d):
        return VerificationReport.fail([("images-shape", ())])
    if not _mat_close(images[group.identity], np.eye(d), eps):
        return VerificationReport.fail([("identity-image", (group.identity,))])
    pairs = np.stack(np.unravel_index(np.arange(m * m), (m, m)), axis=1)
    acc = images[pairs[:, 0]] @ images[pairs[:, 1]]
    want = images[group.table[pairs[:, 0], pairs[:, 1]]]
    err = np.abs(acc - want).reshape(len(pairs), -1).max(axis=1)
    idx = np.nonzero(err > eps)[0]
    if idx.size:
        return VerificationReport.fail(
            [("homomorphism", tuple(int(v) for v in pairs[idx[0]]))], checked=m * m
        )
    return VerificationReport.ok(checked=m * m)


# -- characters and kernels ------------------------------------------------------

def character(rep: Representation) -> Character:
    """Trace vector, verified constant on conjugacy classes."""
    values = np.trace(rep.images, axis1=1, axis2=2)
    for blk in conjugacy_classes(rep.group).blocks:
        vals = values[list(blk)]
        if np.abs(vals - vals[0]).max() > rep.eps * 10:
            raise InvalidGroupError(f"character not constant on class {blk}")
    return Character(rep.group, values, rep.dim)


def kernel(rep: Representation) -> SubgroupRef:
    """{x : L(x) = id}, cross-checked against the trace test, verified normal."""
    eye = np.eye(rep.dim)
    by_matrix = tuple(
        x for x in range(rep.group.order) if _mat_close(rep.images[x], eye, rep.eps)
    )
    by_trace = kernel_chi(character(rep))
    if by_matrix != by_trace:
        raise InvalidGroupError(
            f"matrix kernel {by_matrix} differs from trace kernel {by_trace}"
        )
    report = verify_subgroup(rep.group, by_matrix)
    if not report.passed:
        raise InvalidGroupError(f"kernel is not a subgroup: {report.first().axiom}")
    if not is_normal(rep.group, by_matrix):
        raise InvalidGroupError("kernel is not a normal subgroup")
    return by_matrix


def kernel_chi(char: Character, eps: float = EPS) -> SubgroupRef:
    """{x : chi(x) = dim}, the trace route to the kernel."""
    return tuple(
        x for x in range(char.group.order)
        if abs(char.values[x] - char.dim) <= eps * 10
    )


# -- transfer to and from the retract ---------------------------------------------

def hat_rep(rep: Representation, e: int) -> BinaryRepresentation:
    """L_hat(x) = L(e)^(n-2) L(x), an ordinary representation of the retract at e."""
    n = rep.group.arity
    base = retract(rep.group, e)
    head = np.linalg.matrix_power(rep.images[e], n - 2)
    images = head @ rep.images
    out = BinaryRepresentation(base, images, rep.eps)
    report = verify_binary_representation(base, images, rep.eps)
    if not report.passed:
        raise InvalidGroupError(f"hat transfer failed: {report.first().axiom}")
    ebar = rep.group.skew(e)
    if not _mat_close(images[ebar], np.eye(rep.dim), rep.eps * 10):
        raise InvalidGroupError("hat image of the retract identity is not id")
    return out


def hat_char(char: Character, e: int, p: int) -> np.ndarray:
    """chi_hat(x) = chi(f(e^(n-2), x, skew(p))) for any kernel element p."""
    g = char.group
    if abs(char.values[p] - char.dim) > EPS * 10:
        raise InvalidGroupError(f"element {p} is not in the character kernel")
    n = g.arity
    pbar = g.skew(p)
    idx = [g.eval((e,) * (n - 2) + (x, pbar)) for x in range(g.order)]
    return char.values[idx]


def lift_from_retract(group: NaryGroup, gamma: BinaryRepresentation,
                      e: int) -> Representation | None:
    """Reinterpret a retract representation as an n-ary one, when legal.

    The criterion is ``G(f(skew(e), x2..x_(n-1), skew(e))) = G(x2)...G(x_(n-1))``
    over all inner tuples.  For ternary groups this is equivalent to
    ``G(skew(x)) = G(x)^-1`` and both tests are required to agree.
    """
    group.require_verified()
    n, m = group.arity, group.order
    base = retract(group, e)
    if not np.array_equal(gamma.group.table, base.table):
        raise InvalidGroupError("gamma is not a representation of the retract at e")
    report = verify_binary_representation(gamma.group, gamma.images, gamma.eps)
    if not report.passed:
        raise InvalidGroupError(f"gamma unverified: {report.first().axiom}")
    ebar = group.skew(e)
    ok = True
    for xs in itertools.product(range(m), repeat=n - 2):
        lhs = gamma.images[group.eval((ebar,) + xs + (ebar,))]
        rhs = reduce(np.matmul, [gamma.images[x] for x in xs])
        if not _mat_close(lhs, rhs, gamma.eps * 10):
            ok = False
            break
    if n == 3:
        skew_ok = all(
            _mat_close(
                gamma.images[group.skew(x)],
                np.linalg.inv(gamma.images[x]),
                gamma.eps * 10,
            )
            for x in range(m)
        )
        if skew_ok != ok:
            raise InvalidGroupError("ternary skew criterion disagrees with the inner-tuple one")
    if not ok:
        return None
    return build_representation(group, gamma.images, gamma.eps)


def character_conjugation_rule(group: NaryGroup, values, eps: float = EPS) -> bool:
    """Pointwise test chi(skew(x)) == conj(chi(x)) on any value vector."""
    values = np.asarray(values, dtype=complex)
    skews = group.skew_table()
    return bool(np.abs(values[skews] - np.conj(values)).max() <= eps * 10)


@dataclass(frozen=True)
class DerivedLiftCriteria:
    """Lift tests for groups that are twisted products over a central element."""

    product_rule: bool
    ternary_skew_rule: bool | None
    character_rule: bool
    lift_succeeds: bool


def der_b_lift_criteria(group: NaryGroup, gamma: BinaryRepresentation,
                        e: int | None = None) -> DerivedLiftCriteria:
    """Evaluate the central-element lift criteria for a retract representation.

    Requires the group to have a central element (equivalently, to be a
    twisted product of its retract there by a central twist b).  The three
    tests are the (n-1)-fold product rule ``G(x2...xn b) = G(x2)...G(xn)``,
    the ternary rule ``G((b x)^-1) = G(x)^-1``, and the character rule
    ``chi(skew(x)) = conj(chi(x))``.
    """
    group.require_verified()
    centrals = central_elements(group)
    if not centrals:
        raise CriterionUnavailableError("group has no central element")
    e = centrals[0] if e is None else int(e)
    if e not in centrals:
        raise InvalidGroupError(f"element {e} is not central")
    data = hg_decompose(group, e)
    base, b = data.group, data.b
    if not np.array_equal(gamma.group.table, base.table):
        raise InvalidGroupError("gamma is not a representation of the retract at e")
    n, m = group.arity, group.order
    product_rule = True
    for xs in itertools.product(range(m), repeat=n - 1):
        lhs = gamma.images[base.product(xs + (b,))]
        rhs = reduce(np.matmul, [gamma.images[x] for x in xs])
        if not _mat_close(lhs, rhs, gamma.eps * 10):
            product_rule = False
            break
    ternary_rule = None
    if n == 3:
        ternary_rule = all(
            _mat_close(
                gamma.images[base.inv(base.mul(b, x))],
                np.linalg.inv(gamma.images[x]),
                gamma.eps * 10,
            )
            for x in range(m)
        )
    traces = np.trace(gamma.images, axis1=1, axis2=2)
    char_rule = character_conjugation_rule(group, traces, gamma.eps)
    lifted = lift_from_retract(group, gamma, e)
    return DerivedLiftCriteria(product_rule, ternary_rule, char_rule, lifted is not None)


# -- equivalence -------------------------------------------------------------------

def _pick_hat_anchor(group: NaryGroup) -> int:
    centrals = central_elements(group)
    if centrals:
        return centrals[0]
    if is_semiabelian(group):
        return 0
    raise CriterionUnavailableError(
        "equivalence criterion needs a central element or a semiabelian group"
    )


def equivalent(rep1: Representation, rep2: Representation, e: int | None = None) -> bool:
    """Hat-character equality plus matching trace at the anchor element."""
    if rep1.group is not rep2.group and not rep1.group.equals(rep2.group):
        raise InvalidGroupError("representations live on different groups")
    for rep in (rep1, rep2):
        report = verify_representation(rep.group, rep.images, rep.eps)
        if not report.passed:
            raise InvalidGroupError(f"unverified representation: {report.first().axiom}")
    e = _pick_hat_anchor(rep1.group) if e is None else int(e)
    c1, c2 = character(rep1), character(rep2)
    p1 = kernel_chi(c1)[0]
    p2 = kernel_chi(c2)[0]
    h1, h2 = hat_char(c1, e, p1), hat_char(c2, e, p2)
    if h1.shape != h2.shape or np.abs(h1 - h2).max() > SUM_EPS:
        return False
    return abs(c1.values[e] - c2.values[e]) <= SUM_EPS


def similar_representations(rep1: Representation, rep2: Representation,
                            trials: int = 64, seed: int = 0x5EED) -> bool:
    """Brute-force similarity oracle: search for an invertible intertwiner.

    Solves S L1(x) = L2(x) S as a linear system, then draws random complex
    combinations of the solution basis looking for an invertible one.
    """
    if rep1.dim != rep2.dim:
        return False
    d, m = rep1.dim, rep1.group.order
    if d > 3 or m > 8:
        raise SizeLimitError("similarity oracle limited to dim <= 3, order <= 8")
    eye = np.eye(d)
    blocks = [
        np.kron(eye, rep1.images[x].T) - np.kron(rep2.images[x], eye)
        for x in range(m)
    ]
    system = np.concatenate(blocks, axis=0)
    _, sing, vh = np.linalg.svd(system)
    tol = max(1.0, sing.max() if sing.size else 1.0) * 1e-9
    null = vh[np.sum(sing > tol):].conj()
    if null.shape[0] == 0:
        return False
    rng = np.random.default_rng(seed)
    for _ in range(trials):
        coeff = rng.normal(size=null.shape[0]) + 1j * rng.normal(size=null.shape[0])
        s = (coeff @ null).reshape(d, d)
        if abs(np.linalg.det(s)) > 1e-6:
            return True
    return False


# -- complete reducibility ------------------------------------------------------------

def maschke_decompose(module: GModule, w_basis) -> tuple[np.ndarray, np.ndarray]:
    """Averaged projector onto an invariant subspace and an invariant complement.

    theta = (1/|G|) sum_x L(skew(x)) P L(x), with P the orthogonal projection
    onto the subspace.  The result is checked to be an idempotent equivariant
    projector with image the given subspace; the complement returned is its
    null space.  Used at desk scale on ternary modules.
    """
    rep = module.rep
    g, d, eps = rep.group, rep.dim, rep.eps
    w = np.asarray(w_basis, dtype=complex).reshape(d, -1)
    k = w.shape[1]
    if k:
        q, _ = np.linalg.qr(w)
        proj = q @ q.conj().T
        for x in range(g.order):
            moved = rep.images[x] @ q
            if np.abs(moved - proj @ moved).max() > eps * 100:
                raise InvalidGroupError(f"subspace is not invariant under element {x}")
    else:
        q = w
        proj = np.zeros((d, d), dtype=complex)
    theta = np.zeros((d, d), dtype=complex)
    for x in range(g.order):
        theta += rep.images[g.skew(x)] @ proj @ rep.images[x]
    theta /= g.order
    if not _mat_close(theta @ theta, theta, eps * 100):
        raise InvalidGroupError("averaged map is not idempotent")
    for x in range(g.order):
        if not _mat_close(theta @ rep.images[x], rep.images[x] @ theta, eps * 100):
            raise InvalidGroupError(f"averaged map does not commute with element {x}")
    if k and np.abs(theta @ q - q).max() > eps * 100:
        raise InvalidGroupError("averaged map does not fix the subspace")
    _, sing, vh = np.linalg.svd(theta)
    rank = int(np.sum(sing > eps * 100))
    if rank != k:
        raise InvalidGroupError(f"projector rank {rank} differs from subspace dim {k}")
    complement = vh[rank:].conj().T
    if complement.shape[1]:
        if np.abs(theta @ complement).max() > eps * 100:
            raise InvalidGroupError("complement is not annihilated by the projector")
        cproj = complement @ complement.conj().T
        for x in range(g.order):
            moved = rep.images[x] @ complement
            if np.abs(moved - cproj @ moved).max() > eps * 100:
                raise InvalidGroupError(f"complement not invariant under element {x}")
    stacked = np.concatenate([q, complement], axis=1)
    if stacked.shape[1] != d or np.linalg.matrix_rank(stacked, tol=eps * 100) != d:
        raise InvalidGroupError("subspace and complement do not span the space")
    return theta, complement


def orthogonality_check(char1: Character, p1: int, char2: Character, p2: int,
                        e: int) -> complex:
    """(1/|G|) sum_x chi1_hat(x) conj(chi2_hat(x)) via the kernel-shifted forms."""
    h1 = hat_char(char1, e, p1)
    h2 = hat_char(char2, e, p2)
    return complex(np.mean(h1 * np.conj(h2)))


# -- enumeration and classification -----------------------------------------------------

def one_dim_reps(group: NaryGroup, anchor: int = 0,
                 cover: CoveringGroup | None = None) -> list[Representation]:
    """All 1-dim representations, through the linear characters of a cover.

    Enumerates the cover's linear characters (these factor through its
    abelianization, so no assumption on the cover is needed), keeps those
    whose kernel meets the embedded carrier, restricts, deduplicates, and
    verifies each result.
    """
    cov = cover if cover is not None else covering_group(group, anchor)
    chars = linear_characters(cov.group)
    seen: dict[tuple, Representation] = {}
    for row in chars:
        restricted = row[cov.embed]
        if np.abs(restricted - 1.0).min() > EPS:
            continue
        rep = build_representation(group, restricted.reshape(-1, 1, 1))
        seen.setdefault(tuple(np.round(restricted, 9).tolist()), rep)
    return [seen[key] for key in sorted(seen, key=str)]


def one_dim_reps_bruteforce(group: NaryGroup, root_order: int | None = None) -> list[np.ndarray]:
    """Independent search: value vectors over fixed roots of unity.

    Tries every assignment of (m(n-1))-th roots of unity to the carrier,
    keeping assignments that satisfy the n-ary product identity and have a
    value 1 somewhere.  Deliberately separate from the cover route so the two
    can be compared as sets.
    """
    m, n = group.order, group.arity
    order = root_order if root_order is not None else m * (n - 1)
    if order ** m > 5_000_000:
        raise SizeLimitError("brute-force search space too large")
    roots = np.exp(2j * np.pi * np.arange(order) / order)
    table = group.dense()
    found: dict[tuple, np.ndarray] = {}
    for combo in itertools.product(range(order), repeat=m):
        values = roots[list(combo)]
        prod = reduce(np.multiply.outer, [values] * n)
        if np.abs(values[table] - prod).max() > EPS:
            continue
        if np.abs(values - 1.0).min() > EPS:
            continue
        found.setdefault(tuple(np.round(values, 9).tolist()), values)
    return [found[key] for key in sorted(found, key=str)]


def value_vector_set(reps, digits: int = 9) -> set[tuple]:
    """Canonical set of rounded 1-dim value vectors for set comparison."""
    out = set()
    for rep in reps:
        values = rep.images.reshape(-1) if isinstance(rep, Representation) else np.asarray(rep).reshape(-1)
        out.add(tuple(np.round(values, digits).tolist()))
    return out


@dataclass(frozen=True)
class TernaryMinusClassification:
    """1-dim classification of the ternary difference group over an abelian base."""

    group: NaryGroup
    valid: tuple[tuple[int, np.ndarray, Representation], ...]
    hom_only: tuple[tuple[int, np.ndarray], ...]


def classify_ternary_minus(base: BinaryGroup) -> TernaryMinusClassification:
    """Classify 1-dim representations of (base, x - y + z) as sign * character.

    Every candidate is a +-1 involution times an ordinary character of the
    abelian base; candidates are filtered by full verification (homomorphism
    and non-empty kernel), and the surviving set is checked to coincide with
    the cover-character enumeration.
    """
    if not base.is_abelian:
        raise InvalidGroupError("classification requires an abelian base group")
    group = hg_construct(HGData(base, base.inverse, base.identity, 3))
    verify_report = verify_nary_group(group)
    if not verify_report.passed:
        raise InvalidGroupError("difference group failed verification")
    chars = abelian_characters(base)
    valid = []
    hom_only = []
    for sign in (1, -1):
        for row in chars:
            values = sign * row
            report = verify_representation(group, values.reshape(-1, 1, 1))
            axioms = {f.axiom for f in report.failures}
            if report.passed:
                valid.append((sign, row, Representation(group, values.reshape(-1, 1, 1))))
            elif axioms == {"kernel-empty"}:
                hom_only.append((sign, row))
    got = value_vector_set(rep for _, _, rep in valid)
    want = value_vector_set(one_dim_reps(group))
    if got != want:
        raise InvalidGroupError(
            "sign-times-character classification disagrees with the cover enumeration"
        )
    return TernaryMinusClassification(group, tuple(valid), tuple(hom_only))


def coset_example_group(ambient: BinaryGroup, subgroup, a: int,
                        arity: int = 3) -> tuple[NaryGroup, tuple[int, ...]]:
    """n-ary group on the coset a*H of an ordinary group.

    Two shapes: for an involution a outside a normal subgroup H the ternary
    operation is the plain triple product; for a central element a of order
    ``arity`` outside any subgroup H the operation is a times the product of
    all arguments.
    """
    h = sorted(int(x) for x in subgroup)
    if not ambient.is_subgroup(h):
        raise InvalidGroupError("subgroup required")
    if int(a) in h:
        raise InvalidGroupError("coset representative must lie outside the subgroup")
    carrier = tuple(sorted(ambient.mul(int(a), x) for x in h))
    pos = {e: i for i, e in enumerate(carrier)}
    k = len(carrier)
    involution = arity == 3 and ambient.element_order(int(a)) == 2
    if involution:
        if not ambient.is_normal_subgroup(h):
            raise InvalidGroupError("involution form needs a normal subgroup")
        def op(xs):
            return ambient.product(xs)
    else:
        if int(a) not in ambient.center:
            raise InvalidGroupError("general form needs a central representative")
        if ambient.element_order(int(a)) != arity:
            raise InvalidGroupError(
                f"representative order {ambient.element_order(int(a))} must equal arity {arity}"
            )
        def op(xs):
            return ambient.mul(int(a), ambient.product(xs))
    table = np.zeros((k,) * arity, dtype=np.int64)
    for combo in itertools.product(range(k), repeat=arity):
        val = op(tuple(carrier[c] for c in combo))
        if val not in pos:
            raise InvalidGroupError("coset is not closed under the operation")
        table[combo] = pos[val]
    group = NaryGroup(arity, k, table=table)
    report = verify_nary_group(group)
    if not report.passed:
        raise InvalidGroupError(f"coset operation failed: {report.first().axiom}")
    return group, carrier


def restrict_to_coset(images, carrier, group: NaryGroup, eps: float = EPS) -> Representation:
    """Restrict an ambient-group representation to a coset group's carrier."""
    images = np.asarray(images, dtype=complex)
    return build_representation(group, images[list(carrier)], eps)


# -- transfer along covers and quotients ---------------------------------------------

def lift_module_from_cover(cover: CoveringGroup,
                           gamma: BinaryRepresentation) -> Representation | None:
    """Restrict a covering-group representation when its kernel meets the carrier."""
    report = verify_binary_representation(gamma.group, gamma.images, gamma.eps)
    if not report.passed:
        raise InvalidGroupError(f"gamma unverified: {report.first().axiom}")
    if not np.array_equal(gamma.group.table, cover.group.table):
        raise InvalidGroupError("gamma is not a representation of this cover")
    eye = np.eye(gamma.dim)
    hits = [
        x for x in range(cover.base.order)
        if _mat_close(gamma.images[cover.embed[x]], eye, gamma.eps)
    ]
    if not hits:
        return None
    return build_representation(cover.base, gamma.images[cover.embed], gamma.eps)


def factor_rep(rep: Representation, quot: QuotientGroup) -> Representation:
    """Representation of the quotient, L_bar(aH) = L(a), for H inside the kernel."""
    h = quot.partition.blocks[quot.identity_block]
    ker = kernel(rep)
    if not set(h) <= set(ker):
        raise InvalidGroupError("the subgroup must lie inside the kernel")
    reps_idx = list(quot.partition.representatives)
    for i, blk in enumerate(quot.partition.blocks):
        block_images = rep.images[list(blk)]
        if np.abs(block_images - block_images[0]).max() > rep.eps * 10:
            raise InvalidGroupError(f"representation not constant on block {blk}")
    return build_representation(quot.group, rep.images[reps_idx], rep.eps)


def pull_back_rep(quot: QuotientGroup, qrep: Representation) -> Representation:
    """Representation of the base group pulled back through the block map."""
    if qrep.group is not quot.group and not qrep.group.equals(quot.group):
        raise InvalidGroupError("representation does not live on this quotient")
    return build_representation(quot.base, qrep.images[quot.block_index], qrep.eps)
