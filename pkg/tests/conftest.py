"""Shared oracles and generators for the test suite.

Every oracle here recomputes its quantity by a route independent of the
package code it checks: Schmidt coefficients via SVD for pure-cut
monotones, elementwise partial traces, GF(2) Gaussian elimination for
Betti numbers, and union-find for components.
"""

import itertools
import math

import numpy as np
import pytest

from enthom.filtration import FilteredComplex


# ---------------------------------------------------------------------------
# quantum-state oracles


def schmidt_values(amplitudes, n, part_a):
    """Squared Schmidt coefficients across a full bipartition (SVD route)."""
    part_a = sorted(part_a)
    rest = [q for q in range(n) if q not in part_a]
    t = np.asarray(amplitudes).reshape([2] * n)
    m = np.transpose(t, part_a + rest).reshape(2 ** len(part_a), -1)
    s = np.linalg.svd(m, compute_uv=False)
    return s ** 2


def negativity_schmidt_oracle(amplitudes, n, part_a):
    """Pure-state negativity ((sum of Schmidt coefficients)^2 - 1) / 2."""
    lam = schmidt_values(amplitudes, n, part_a)
    return (np.sqrt(lam).sum() ** 2 - 1.0) / 2.0


def partial_trace_oracle(amplitudes, n, keep):
    """Elementwise partial trace: rho[a, b] = sum_env psi[a,env] psi*[b,env]."""
    keep = sorted(keep)
    rest = [q for q in range(n) if q not in keep]
    dk = 2 ** len(keep)
    v = np.asarray(amplitudes)
    rho = np.zeros((dk, dk), dtype=complex)

    def full_index(kept_bits, env_bits):
        bits = [0] * n
        for q, b in zip(keep, kept_bits):
            bits[q] = b
        for q, b in zip(rest, env_bits):
            bits[q] = b
        return int("".join(map(str, bits)), 2)

    for a in itertools.product((0, 1), repeat=len(keep)):
        for b in itertools.product((0, 1), repeat=len(keep)):
            acc = 0j
            for env in itertools.product((0, 1), repeat=len(rest)):
                acc += v[full_index(a, env)] * v[full_index(b, env)].conjugate()
            ia = int("".join(map(str, a)), 2) if a else 0
            ib = int("".join(map(str, b)), 2) if b else 0
            rho[ia, ib] = acc
    return rho


def random_state_vector(n, rng):
    v = rng.standard_normal(2 ** n) + 1j * rng.standard_normal(2 ** n)
    return v / np.linalg.norm(v)


def haar_unitary(dim, rng):
    z = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


# ---------------------------------------------------------------------------
# homology oracles


def gf2_rank(columns):
    """Rank of a GF(2) matrix given as column bitmasks."""
    pivots = {}
    rank = 0
    for col in columns:
        while col:
            high = col.bit_length() - 1
            if high in pivots:
                col ^= pivots[high]
            else:
                pivots[high] = col
                rank += 1
                break
    return rank


def betti_oracle(fc: FilteredComplex, epsilon):
    """Betti numbers at a scale by rank-nullity over GF(2).

    betti_k = (#k-simplices alive) - rank(boundary_k) - rank(boundary_{k+1}).
    """
    alive = [s for s in fc.simplices if s.birth <= epsilon]
    index = {s.vertices: i for i, s in enumerate(alive)}
    by_dim = {}
    for s in alive:
        by_dim.setdefault(s.dim, []).append(s)
    ranks = {}
    for d, simps in by_dim.items():
        if d == 0:
            ranks[0] = 0
            continue
        cols = []
        for s in simps:
            mask = 0
            for f in itertools.combinations(s.vertices, d):
                mask |= 1 << index[f]
            cols.append(mask)
        ranks[d] = gf2_rank(cols)
    out = []
    for d in range(fc.max_dim + 1):
        nk = len(by_dim.get(d, []))
        out.append(nk - ranks.get(d, 0) - ranks.get(d + 1, 0))
    return tuple(out)


def component_count_oracle(n, edges):
    """Union-find component count of the graph of finite edges."""
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        parent[find(a)] = find(b)
    return len({find(v) for v in range(n)})


def critical_values(fc: FilteredComplex):
    return sorted({s.birth for s in fc.simplices})


def random_distance_matrix(n, rng, inf_prob=0.25, scale=10.0):
    """Symmetric matrix with random positive entries, some infinite."""
    m = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1, n):
            v = math.inf if rng.random() < inf_prob else float(rng.uniform(0.1, scale))
            m[i, j] = m[j, i] = v
    return m


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
