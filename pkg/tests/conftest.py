"""Shared fixtures: the five standard groups and some helpers.

S3 is enumerated on permutations of (0,1,2) in lexicographic order with
(pq)(i) = p(q(i)), so index 0 is the identity, {1,2,5} are the
transpositions and {3,4} the 3-cycles; A3 = {0,3,4}.
"""

import itertools

import numpy as np
import pytest

import polyadic as P

A3 = (0, 3, 4)
TRANSPOSITIONS = (1, 2, 5)
SIGN = np.array([1, -1, -1, 1, 1, -1], dtype=complex)


@pytest.fixture(scope="session")
def t2():
    return P.NaryGroup.from_function(3, 2, lambda x, y, z: (x + y + z) % 2)


@pytest.fixture(scope="session")
def t2b():
    return P.NaryGroup.from_function(3, 2, lambda x, y, z: (x + y + z + 1) % 2)


@pytest.fixture(scope="session")
def z4m():
    return P.NaryGroup.from_function(3, 4, lambda x, y, z: (x - y + z) % 4)


@pytest.fixture(scope="session")
def q4():
    return P.NaryGroup.from_function(4, 2, lambda w, x, y, z: (w + x + y + z + 1) % 2)


@pytest.fixture(scope="session")
def s3():
    return P.symmetric_group_3()


@pytest.fixture(scope="session")
def s3t(s3):
    return P.derived(s3, 3)


@pytest.fixture(scope="session")
def fixtures(t2, t2b, z4m, q4, s3t):
    return {"T2": t2, "T2b": t2b, "Z4M": z4m, "Q4": q4, "S3T": s3t}


@pytest.fixture(scope="session")
def ternary_fixtures(t2, t2b, z4m, s3t):
    return {"T2": t2, "T2b": t2b, "Z4M": z4m, "S3T": s3t}


def s3_permutations():
    return list(itertools.permutations(range(3)))


def s3_two_dim():
    """Standard 2-dim irreducible of S3 on the sum-zero plane (exact integers)."""
    perms = s3_permutations()
    basis = np.array([[1, 0], [-1, 1], [0, -1]], dtype=complex)
    pinv = np.linalg.pinv(basis)
    mats = []
    for p in perms:
        mat = np.zeros((3, 3))
        for j in range(3):
            mat[p[j], j] = 1
        mats.append(pinv @ mat @ basis)
    return np.array(mats).round(12)


def binary_catalog():
    z = P.cyclic_group
    return {
        "Z2": z(2), "Z3": z(3), "Z4": z(4), "Z5": z(5),
        "Z6": z(6), "Z7": z(7), "Z8": z(8),
        "klein": P.direct_product(z(2), z(2)),
        "Z2xZ4": P.direct_product(z(2), z(4)),
        "Z2xZ2xZ2": P.direct_product(z(2), P.direct_product(z(2), z(2))),
        "S3": P.symmetric_group_3(),
        "D4": P.dihedral_group(4),
        "Q8": P.quaternion_group(),
    }


def random_hg_stock(count=20, seed=P.SAMPLE_SEED):
    """Deterministic stock of decomposition-built n-ary groups.

    Sizes are drawn so the full associativity scan stays under the default
    budget (n = 5 caps the order at 5), keeping every check exhaustive.
    """
    from polyadic.binary import automorphisms, perm_power

    catalog = binary_catalog()
    options = []
    for arity in (3, 4, 5):
        max_order = 8 if arity < 5 else 5
        for name, base in sorted(catalog.items()):
            if base.order > max_order:
                continue
            pairs = []
            for phi in automorphisms(base):
                power = perm_power(phi, arity - 1)
                for b in range(base.order):
                    if phi[b] == b and np.array_equal(power, base.conjugation(b)):
                        pairs.append((phi, b))
            if pairs:
                options.append((name, base, arity, pairs))
    rng = np.random.default_rng(seed)
    stock = []
    for idx in rng.choice(len(options), size=count, replace=True):
        name, base, arity, pairs = options[idx]
        phi, b = pairs[rng.integers(len(pairs))]
        stock.append((f"{name}/n={arity}/b={b}", P.hg_construct(P.HGData(base, phi, b, arity))))
    return stock


@pytest.fixture(scope="session")
def hg_stock():
    return random_hg_stock()
