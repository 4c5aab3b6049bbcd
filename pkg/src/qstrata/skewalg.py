"""Brute-force oracle: finite-dimensional associative algebras over a prime
field, with radical, centre, block and skew-group-algebra computations.

The ground field is F_p with p = 1 (mod ell) and p > dim, so ell-th roots of
unity exist, every algebra built here is split, and the Jacobson radical is
the kernel of the trace form of the regular representation.  This validates
the closed-form block/quiver statements on concrete split instances; it is a
surrogate for the algebraically closed field of the theory, not a new proof.

Structure constants sit in a dense (n, n, n) int64 array: e_i e_j =
sum_k sc[i, j, k] e_k.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field

import numpy as np

from .errors import OracleError
from .quiver import CayleyGraph, cayley_graph

ASSOC_EXHAUSTIVE_LIMIT = 64
ASSOC_SAMPLES = 1000
ASSOC_SEED = 20240131


# ---------------------------------------------------------------------------
# mod-p linear algebra (dense int64 numpy)
# ---------------------------------------------------------------------------


def rref(m: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Row-reduced echelon form mod p; returns (nonzero rows, pivot columns)."""
    m = np.array(m, dtype=np.int64) % p
    rows, cols = m.shape
    piv = []
    rr = 0
    for c in range(cols):
        if rr == rows:
            break
        nz = np.nonzero(m[rr:, c])[0]
        if len(nz) == 0:
            continue
        i = rr + int(nz[0])
        if i != rr:
            m[[rr, i]] = m[[i, rr]]
        inv = pow(int(m[rr, c]), p - 2, p)
        m[rr] = (m[rr] * inv) % p
        col = m[:, c].copy()
        col[rr] = 0
        m = (m - np.outer(col, m[rr])) % p
        piv.append(c)
        rr += 1
    return m[: len(piv)], piv


def nullspace(m: np.ndarray, p: int) -> np.ndarray:
    """Row basis of {x : m @ x = 0 (mod p)}."""
    m = np.atleast_2d(np.asarray(m, dtype=np.int64))
    r, piv = rref(m, p)
    cols = m.shape[1]
    free = [c for c in range(cols) if c not in piv]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for bi, f in enumerate(free):
        basis[bi, f] = 1
        for k, c in enumerate(piv):
            basis[bi, c] = (-int(r[k, f])) % p
    return basis


def subspace_contains(basis_rref: np.ndarray, piv: list[int], v: np.ndarray, p: int) -> bool:
    return not np.any(_reduce_by(basis_rref, piv, v, p))


def _reduce_by(basis_rref: np.ndarray, piv: list[int], v: np.ndarray, p: int) -> np.ndarray:
    v = v.copy() % p
    for k, c in enumerate(piv):
        if v[c]:
            v = (v - v[c] * basis_rref[k]) % p
    return v


def matrank(m: np.ndarray, p: int) -> int:
    return len(rref(m, p)[1])


# ---------------------------------------------------------------------------
# algebras
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class FDAlgebra:
    """Associative unital algebra over F_p by structure constants."""

    dim: int
    p: int
    sc: np.ndarray  # (n, n, n)
    unit: np.ndarray  # (n,)
    gens: tuple | None = field(default=None, compare=False)  # generator vectors, for centre speedups

    def __post_init__(self):
        object.__setattr__(self, "sc", np.asarray(self.sc, dtype=np.int64) % self.p)
        object.__setattr__(self, "unit", np.asarray(self.unit, dtype=np.int64) % self.p)
        self.sc.setflags(write=False)
        self.unit.setflags(write=False)
        _check_unit(self)
        _check_associativity(self)

    def mult(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return np.einsum("i,j,ijl->l", x % self.p, y % self.p, self.sc) % self.p

    def left_mult_matrix(self, x: np.ndarray) -> np.ndarray:
        """Matrix of y -> x y (acting on coordinate columns)."""
        return np.einsum("i,ijl->lj", x % self.p, self.sc) % self.p

    def right_mult_matrix(self, y: np.ndarray) -> np.ndarray:
        return np.einsum("j,ijl->li", y % self.p, self.sc) % self.p

    def generator_vectors(self) -> np.ndarray:
        if self.gens is not None:
            return np.asarray(self.gens, dtype=np.int64) % self.p
        return np.eye(self.dim, dtype=np.int64)

    def __repr__(self):
        return f"FDAlgebra(dim={self.dim}, p={self.p})"


def _check_unit(a: FDAlgebra) -> None:
    eye = np.eye(a.dim, dtype=np.int64)
    left = np.einsum("i,ijl->jl", a.unit, a.sc) % a.p
    right = np.einsum("j,ijl->il", a.unit, a.sc) % a.p
    if not (np.array_equal(left, eye) and np.array_equal(right, eye)):
        raise OracleError("unit axiom fails for the given structure constants")


def _check_associativity(a: FDAlgebra) -> None:
    n, p, sc = a.dim, a.p, a.sc
    if n <= ASSOC_EXHAUSTIVE_LIMIT:
        lhs = np.einsum("ijm,mkl->ijkl", sc, sc) % p
        rhs = np.einsum("jkm,iml->ijkl", sc, sc) % p
        if not np.array_equal(lhs, rhs):
            raise OracleError("structure constants are not associative")
    else:
        rng = np.random.default_rng(ASSOC_SEED)
        for _ in range(ASSOC_SAMPLES):
            i, j, k = rng.integers(0, n, size=3)
            lhs = (sc[i, j] @ sc[:, k, :].reshape(n, n)) % p
            rhs = (sc[j, k] @ sc[i, :, :].reshape(n, n)) % p
            if not np.array_equal(lhs % p, rhs % p):
                raise OracleError("structure constants are not associative (sampled)")


def make_field_char(ell: int, min_dim: int) -> int:
    """Smallest prime p with p = 1 (mod ell) and p > min_dim."""
    if ell < 2:
        raise ValueError("ell must be at least 2")

    def is_prime(n: int) -> bool:
        if n < 2:
            return False
        for q in range(2, int(n**0.5) + 1):
            if n % q == 0:
                return False
        return True

    p = max(min_dim, 1) + 1
    while p % ell != 1 or not is_prime(p):
        p += 1
    return p


def primitive_ell_root(p: int, ell: int) -> int:
    """Deterministic element of exact multiplicative order ell in F_p."""
    if (p - 1) % ell != 0:
        raise OracleError(f"F_{p} has no ell-th roots of unity for ell={ell}")
    prime_factors = set()
    m = ell
    q = 2
    while q * q <= m:
        while m % q == 0:
            prime_factors.add(q)
            m //= q
        q += 1
    if m > 1:
        prime_factors.add(m)
    for x in range(2, p):
        z = pow(x, (p - 1) // ell, p)
        if z != 1 and all(pow(z, ell // q, p) != 1 for q in prime_factors):
            return z
    raise OracleError("no primitive ell-th root found")  # pragma: no cover


# ---------------------------------------------------------------------------
# radical, centre, blocks
# ---------------------------------------------------------------------------


def _trace_gram(a: FDAlgebra) -> np.ndarray:
    """Gram matrix of T(x, y) = tr(L_x L_y) on the basis."""
    n, p = a.dim, a.p
    lmats = a.sc.transpose(0, 2, 1)  # lmats[i][l][j] = sc[i,j,l]
    flat = lmats.reshape(n, n * n)
    flat_t = lmats.transpose(0, 2, 1).reshape(n, n * n)
    return (flat @ flat_t.T) % p


def radical(a: FDAlgebra) -> np.ndarray:
    """Row basis of the Jacobson radical, as the kernel of the trace form of
    the regular representation (valid since p > dim); verified nilpotent with
    semisimple quotient."""
    if a.p <= a.dim:
        raise OracleError(
            f"trace-form radical needs p > dim, got p={a.p}, dim={a.dim}"
        )
    rad = nullspace(_trace_gram(a), a.p)
    _assert_nilpotent(a, rad)
    quot, _, _ = quotient_algebra(a, rad)
    if matrank(_trace_gram(quot), a.p) != quot.dim:
        raise OracleError("quotient by trace-form kernel is not semisimple")
    return rad


def _assert_nilpotent(a: FDAlgebra, rows: np.ndarray) -> None:
    cur, _ = rref(rows, a.p) if rows.size else (np.zeros((0, a.dim), np.int64), [])
    for _ in range(a.dim + 1):
        if cur.shape[0] == 0:
            return
        prods = np.array(
            [a.mult(x, y) for x in cur for y in rows], dtype=np.int64
        ).reshape(-1, a.dim)
        nxt, _ = rref(prods, a.p)
        if nxt.shape[0] == cur.shape[0] and np.array_equal(nxt, cur):
            raise OracleError("trace-form kernel is not nilpotent")
        cur = nxt
    raise OracleError("trace-form kernel is not nilpotent")


def subalgebra_structure(a: FDAlgebra, rows: np.ndarray, gens=None) -> FDAlgebra:
    """Algebra structure on a unital subalgebra given by independent rows."""
    basis, piv = rref(rows, a.p)
    k = basis.shape[0]
    sc = np.zeros((k, k, k), dtype=np.int64)
    for i in range(k):
        for j in range(k):
            v = a.mult(basis[i], basis[j])
            coords = v[piv] % a.p
            if np.any(_reduce_by(basis, piv, v, a.p)):
                raise OracleError("rows do not span a subalgebra")
            sc[i, j] = coords
    unit_coords = a.unit[piv] % a.p
    if np.any(_reduce_by(basis, piv, np.asarray(a.unit), a.p)):
        raise OracleError("subalgebra does not contain the unit")
    return FDAlgebra(dim=k, p=a.p, sc=sc, unit=unit_coords, gens=gens)


def quotient_algebra(a: FDAlgebra, ideal_rows: np.ndarray):
    """Quotient by a two-sided ideal.  Returns (quotient, project, lift):
    project maps an A-vector to quotient coordinates, lift goes back."""
    basis, piv = rref(ideal_rows, a.p) if ideal_rows.size else (np.zeros((0, a.dim), np.int64), [])
    comp = [c for c in range(a.dim) if c not in piv]

    def project(v: np.ndarray) -> np.ndarray:
        return _reduce_by(basis, piv, np.asarray(v, dtype=np.int64), a.p)[comp]

    def lift(q: np.ndarray) -> np.ndarray:
        v = np.zeros(a.dim, dtype=np.int64)
        v[comp] = np.asarray(q, dtype=np.int64) % a.p
        return v

    k = len(comp)
    sc = np.zeros((k, k, k), dtype=np.int64)
    for i in range(k):
        for j in range(k):
            sc[i, j] = project(a.mult(lift(_unit_vec(k, i)), lift(_unit_vec(k, j))))
    quot = FDAlgebra(dim=k, p=a.p, sc=sc, unit=project(a.unit))
    return quot, project, lift


def _unit_vec(n: int, i: int) -> np.ndarray:
    v = np.zeros(n, dtype=np.int64)
    v[i] = 1
    return v


def center(a: FDAlgebra) -> np.ndarray:
    """Row basis of the centre; commutation is imposed against the algebra
    generators (commuting with generators implies commuting with everything)."""
    gens = a.generator_vectors()
    blocks = []
    for g in gens:
        blocks.append((a.left_mult_matrix(g) - a.right_mult_matrix(g)) % a.p)
    stacked = np.concatenate(blocks, axis=0)
    return nullspace(stacked, a.p)


SPLIT_SEED = 0xC0FFEE
SPLIT_RANDOM_TRIES = 64


def _split_commutative_semisimple(q: FDAlgebra) -> list[np.ndarray]:
    """Primitive idempotents of a split commutative semisimple algebra.

    Components are refined by eigenspaces of multiplication operators, taking
    basis vectors first and seeded pseudo-random elements as a fallback.
    """
    comps = [np.eye(q.dim, dtype=np.int64)]  # row-bases of ideals

    def refine(t: np.ndarray) -> None:
        nonlocal comps
        out = []
        for c in comps:
            k = c.shape[0]
            if k == 1:
                out.append(c)
                continue
            cb, cpiv = rref(c, q.p)
            # matrix of mult-by-t on the component, in component coordinates
            m = np.zeros((k, k), dtype=np.int64)
            for col in range(k):
                v = q.mult(t, cb[col])
                red = _reduce_by(cb, cpiv, v, q.p)
                if np.any(red):
                    raise OracleError("eigen-splitting left the component")
                m[:, col] = v[cpiv] % q.p
            found = 0
            for lam in range(q.p):
                ker = nullspace((m - lam * np.eye(k, dtype=np.int64)) % q.p, q.p)
                if ker.shape[0]:
                    out.append((ker @ cb) % q.p)
                    found += ker.shape[0]
                if found == k:
                    break
            if found != k:
                raise OracleError(
                    "multiplication operator not diagonalizable over F_p; "
                    "instance is not split (field too small)"
                )
        comps = out

    for i in range(q.dim):
        refine(_unit_vec(q.dim, i))
        if all(c.shape[0] == 1 for c in comps):
            break
    if not all(c.shape[0] == 1 for c in comps):
        rng = np.random.default_rng(SPLIT_SEED)
        for _ in range(SPLIT_RANDOM_TRIES):
            refine(rng.integers(0, q.p, size=q.dim))
            if all(c.shape[0] == 1 for c in comps):
                break
    if not all(c.shape[0] == 1 for c in comps):
        raise OracleError("failed to split the semisimple centre")

    idems = []
    for c in comps:
        v = c[0] % q.p
        vv = q.mult(v, v)
        # vv = mu * v with mu != 0 in a semisimple 1-dim ideal
        nz = int(np.nonzero(v)[0][0])
        mu = (int(vv[nz]) * pow(int(v[nz]), q.p - 2, q.p)) % q.p
        if mu == 0 or np.any((vv - mu * v) % q.p):
            raise OracleError("degenerate one-dimensional component")
        idems.append((v * pow(mu, q.p - 2, q.p)) % q.p)
    return idems


def central_idempotents(a: FDAlgebra) -> list[np.ndarray]:
    """The complete set of primitive central idempotents (= blocks).

    Route: centre Z, nilradical of Z by its own trace form, eigen-splitting of
    the semisimple quotient, then Newton lifting e <- 3e^2 - 2e^3 (orthogonality
    is automatic when lifting inside a commutative ring).
    """
    z_rows = center(a)
    zalg = subalgebra_structure(a, z_rows)
    z_basis, _ = rref(z_rows, a.p)
    jz = radical(zalg)
    quot, project, lift = quotient_algebra(zalg, jz)
    bar_idems = _split_commutative_semisimple(quot)

    idems_z = []
    for bar in bar_idems:
        e = lift(bar)
        for _ in range(64):
            e2 = zalg.mult(e, e)
            if np.array_equal(e2, e):
                break
            e = (3 * e2 - 2 * zalg.mult(e2, e)) % zalg.p
        else:
            raise OracleError("idempotent lifting did not converge")
        idems_z.append(e)

    out = [tuple(int(x) for x in (e @ z_basis) % a.p) for e in idems_z]
    out.sort()
    idems = [np.array(e, dtype=np.int64) for e in out]
    # orthogonality and completeness
    total = np.zeros(a.dim, dtype=np.int64)
    for i, e in enumerate(idems):
        total = (total + e) % a.p
        for f in idems[i + 1 :]:
            if np.any(a.mult(e, f)) or np.any(a.mult(f, e)):
                raise OracleError("central idempotents are not orthogonal")
    if not np.array_equal(total, np.asarray(a.unit)):
        raise OracleError("central idempotents do not sum to the unit")
    return idems


def block_dimensions(a: FDAlgebra, idems: list[np.ndarray]) -> list[int]:
    dims = [int(matrank(a.left_mult_matrix(e), a.p)) for e in idems]
    if sum(dims) != a.dim:
        raise OracleError("block dimensions do not add up to dim")
    return dims


def simple_module_dims(a: FDAlgebra) -> list[int]:
    """Dimensions of the simple modules (split instances), via the Wedderburn
    components of A/J(A)."""
    rad = radical(a)
    quot, _, _ = quotient_algebra(a, rad)
    idems = central_idempotents(quot)
    dims = []
    for e in idems:
        comp_dim = matrank(quot.left_mult_matrix(e), quot.p)
        s = int(round(comp_dim**0.5))
        if s * s != comp_dim:
            raise OracleError("non-square Wedderburn component: instance not split")
        dims.append(s)
    return sorted(dims)


# ---------------------------------------------------------------------------
# constructions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AbelianAction:
    """(ZZ/ell)^k acting by commuting algebra automorphisms of order | ell."""

    ell: int
    mats: tuple  # k matrices, each (n, n) int64 mod p

    @property
    def k(self) -> int:
        return len(self.mats)


def validate_action(s: FDAlgebra, act: AbelianAction) -> None:
    n, p = s.dim, s.p
    eye = np.eye(n, dtype=np.int64)
    for t in act.mats:
        t = np.asarray(t, dtype=np.int64) % p
        if not np.array_equal((np.einsum("ai,bj,abk->ijk", t, t, s.sc) % p),
                              (np.einsum("ijc,kc->ijk", s.sc, t) % p)):
            raise OracleError("action matrix is not an algebra automorphism")
        if not np.array_equal((t @ s.unit) % p, s.unit % p):
            raise OracleError("action matrix does not fix the unit")
        power = eye
        for _ in range(act.ell):
            power = (power @ t) % p
        if not np.array_equal(power, eye):
            raise OracleError("action matrix order does not divide ell")
    for t1, t2 in itertools.combinations([np.asarray(m, dtype=np.int64) for m in act.mats], 2):
        if not np.array_equal((t1 @ t2) % p, (t2 @ t1) % p):
            raise OracleError("action matrices do not commute")


def group_elements(ell: int, k: int) -> list[tuple[int, ...]]:
    return list(itertools.product(range(ell), repeat=k))


def skew_product(s: FDAlgebra, act: AbelianAction) -> FDAlgebra:
    """Skew group algebra S * (ZZ/ell)^k with g s = s^g g.

    Basis (i, a) for i a basis index of S and a a group element;
    (s_i a)(s_j b) = s_i tau_a(s_j) (a+b).
    """
    validate_action(s, act)
    n, p, ell, k = s.dim, s.p, act.ell, act.k
    elems = group_elements(ell, k)
    gidx = {a: t for t, a in enumerate(elems)}
    ng = len(elems)
    dim = n * ng

    tau = {}
    for a in elems:
        t = np.eye(n, dtype=np.int64)
        for j, aj in enumerate(a):
            mj = np.asarray(act.mats[j], dtype=np.int64) % p
            for _ in range(aj):
                t = (t @ mj) % p
        tau[a] = t

    sc = np.zeros((dim, dim, dim), dtype=np.int64)
    for ai, a in enumerate(elems):
        block = np.einsum("inm,nj->ijm", s.sc, tau[a]) % p  # s_i * tau_a(s_j)
        for bi, b in enumerate(elems):
            ci = gidx[tuple((x + y) % ell for x, y in zip(a, b))]
            for i in range(n):
                for j in range(n):
                    sc[i * ng + ai, j * ng + bi, ci::ng] = block[i, j]

    id_idx = gidx[tuple([0] * k)]
    unit = np.zeros(dim, dtype=np.int64)
    unit[id_idx::ng] = s.unit % p
    gens = []
    for i in range(n):  # embedded copy of S
        v = np.zeros(dim, dtype=np.int64)
        v[i * ng + id_idx] = 1
        gens.append(v)
    for j in range(k):  # group generators, embedded as unit_S . g_j
        v = np.zeros(dim, dtype=np.int64)
        aj = gidx[tuple(1 if t == j else 0 for t in range(k))]
        v[aj::ng] = s.unit % p
        gens.append(v)
    return FDAlgebra(dim=dim, p=p, sc=sc, unit=unit, gens=tuple(gens))


def tensor(a: FDAlgebra, b: FDAlgebra) -> FDAlgebra:
    """Tensor product algebra; dims multiply, block counts multiply."""
    if a.p != b.p:
        raise OracleError(f"field mismatch: p={a.p} vs p={b.p}")
    p = a.p
    na, nb = a.dim, b.dim
    sc = np.einsum("ijk,abc->iajbkc", a.sc, b.sc).reshape(na * nb, na * nb, na * nb) % p
    unit = np.outer(a.unit, b.unit).reshape(na * nb) % p
    gens = []
    for g in a.generator_vectors():
        gens.append(np.outer(g, b.unit).reshape(na * nb) % p)
    for g in b.generator_vectors():
        gens.append(np.outer(a.unit, g).reshape(na * nb) % p)
    return FDAlgebra(dim=na * nb, p=p, sc=sc, unit=unit, gens=tuple(gens))


def build_fiber_algebra(ell: int, b_zero: bool, c_zero: bool, p: int | None = None) -> FDAlgebra:
    """The ell-dimensional centre-fiber factor at the given vanishing pattern.

    Basis 1, x(1), ..., x(ell-1) with x(k) x(k') = b x(k+k') for k+k' < ell,
    = b c for k+k' = ell, = c x(k+k'-ell) for k+k' > ell, where b (resp. c)
    is 0 when the pattern says so and 1 otherwise.  Semisimple with ell
    idempotents iff neither vanishes, truncated polynomials iff exactly one,
    local with square-zero radical iff both.
    """
    if p is None:
        p = make_field_char(ell, ell)
    b = 0 if b_zero else 1
    c = 0 if c_zero else 1
    n = ell
    sc = np.zeros((n, n, n), dtype=np.int64)
    for k in range(n):
        sc[0, k, k] = 1
        sc[k, 0, k] = 1
    for k in range(1, n):
        for kp in range(1, n):
            t = k + kp
            if t < ell:
                sc[k, kp, t] = b
            elif t == ell:
                sc[k, kp, 0] = (b * c) % p
            else:
                sc[k, kp, t - ell] = c
    unit = _unit_vec(n, 0)
    return FDAlgebra(dim=n, p=p, sc=sc, unit=unit, gens=tuple(np.eye(n, dtype=np.int64)))


def truncated_polynomial_algebra(degree: int, p: int) -> FDAlgebra:
    """F_p[x]/(x^degree)."""
    sc = np.zeros((degree, degree, degree), dtype=np.int64)
    for i in range(degree):
        for j in range(degree):
            if i + j < degree:
                sc[i, j, i + j] = 1
    return FDAlgebra(dim=degree, p=p, sc=sc, unit=_unit_vec(degree, 0))


def matrix_algebra(m: int, p: int) -> FDAlgebra:
    """Mat_m(F_p), basis e_{ij} at index i*m+j."""
    n = m * m
    sc = np.zeros((n, n, n), dtype=np.int64)
    for i in range(m):
        for j in range(m):
            for k in range(m):
                for l in range(m):
                    if j == k:
                        sc[i * m + j, k * m + l, i * m + l] = 1
    unit = np.zeros(n, dtype=np.int64)
    for i in range(m):
        unit[i * m + i] = 1
    return FDAlgebra(dim=n, p=p, sc=sc, unit=unit)


def quantum_plane_local(a_exp: int, b_exp: int, twist: int, ell: int, p: int) -> FDAlgebra:
    """Local algebra F_p<x,y>/(y x - zeta^twist x y, x^a, y^b) on basis x^i y^j."""
    zeta = primitive_ell_root(p, ell)
    n = a_exp * b_exp
    sc = np.zeros((n, n, n), dtype=np.int64)
    for i1 in range(a_exp):
        for j1 in range(b_exp):
            for i2 in range(a_exp):
                for j2 in range(b_exp):
                    if i1 + i2 < a_exp and j1 + j2 < b_exp:
                        coeff = pow(zeta, (twist * j1 * i2) % ell, p)
                        sc[i1 * b_exp + j1, i2 * b_exp + j2, (i1 + i2) * b_exp + j1 + j2] = coeff
    return FDAlgebra(dim=n, p=p, sc=sc, unit=_unit_vec(n, 0))


def square_zero_local(m: int, p: int) -> FDAlgebra:
    """F_p[x_1..x_m]/(x_i x_j): local with radical squared zero."""
    n = m + 1
    sc = np.zeros((n, n, n), dtype=np.int64)
    for k in range(n):
        sc[0, k, k] = 1
        sc[k, 0, k] = 1
    return FDAlgebra(dim=n, p=p, sc=sc, unit=_unit_vec(n, 0))


def build_borel_sl2(ell: int, p: int | None = None) -> FDAlgebra:
    """The rank-one reduced Borel: generators E, K with K E = eps^2 E K,
    K^ell = 1, E^ell = 0; realized as F_p[E]/(E^ell) * ZZ/ell with the group
    generator acting E -> zeta^2 E.  Dimension ell^2, ell one-dimensional
    simples, a unique block."""
    if ell % 2 == 0:
        raise ValueError("ell must be odd")
    if p is None:
        p = make_field_char(ell, ell * ell)
    s1 = truncated_polynomial_algebra(ell, p)
    act = borel_sl2_action(ell, p)
    return skew_product(s1, act)


def borel_sl2_action(ell: int, p: int) -> AbelianAction:
    zeta = primitive_ell_root(p, ell)
    t = np.diag([pow(zeta, (2 * a) % ell, p) for a in range(ell)]).astype(np.int64)
    return AbelianAction(ell=ell, mats=(t,))


# ---------------------------------------------------------------------------
# blocks and quivers of skew group rings
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BlockReport:
    """Skew-group-ring block data (no materialization of the big algebra):
    block_count = |D| for D the joint kernel of the characters appearing in
    J/J^2, and the quiver on X(G) has an arrow v -> v - chi of multiplicity
    m_chi for every appearing character chi."""

    ell: int
    k: int
    block_count: int
    block_dims: tuple[int, ...]
    quiver: CayleyGraph
    char_multiplicities: dict
    y_order: int
    y_generators: tuple
    d_elements: tuple

    @property
    def x_order(self) -> int:
        return self.ell**self.k


def blquiv_report(s1: FDAlgebra, act: AbelianAction) -> BlockReport:
    """Blocks and quiver of S1 * G for scalar local S1 and G = (ZZ/ell)^k."""
    validate_action(s1, act)
    p, ell, k = s1.p, act.ell, act.k
    jrows = radical(s1)
    if jrows.shape[0] != s1.dim - 1:
        raise OracleError("coefficient algebra is not scalar local")
    jbasis, jpiv = rref(jrows, p)
    j2rows = [s1.mult(x, y) for x in jbasis for y in jbasis]
    j2basis, j2piv = rref(np.array(j2rows, dtype=np.int64).reshape(-1, s1.dim), p) if j2rows else (np.zeros((0, s1.dim), np.int64), [])

    # complement of J^2 inside J: its images are a basis of J/J^2
    comp = []
    span = j2basis.copy()
    spiv = list(j2piv)
    for v in jbasis:
        if np.any(_reduce_by(span, spiv, v, p)):
            comp.append(v % p)
            span, spiv = rref(np.concatenate([span, v[None, :]]) if span.size else v[None, :], p)
    comp = np.array(comp, dtype=np.int64).reshape(len(comp), s1.dim)
    d = comp.shape[0]
    aug = np.concatenate([j2basis, comp]) if j2basis.size else comp

    def module_coords(v: np.ndarray) -> np.ndarray:
        """Coordinates of v + J^2 with respect to the comp basis."""
        sol = _solve_coords(aug, np.asarray(v, dtype=np.int64) % p, p)
        if sol is None:
            raise OracleError("radical image left J")
        return sol[j2basis.shape[0]:] % p

    # induced action matrices on J/J^2
    vmats = []
    for t in act.mats:
        t = np.asarray(t, dtype=np.int64) % p
        m = np.zeros((d, d), dtype=np.int64)
        for col in range(d):
            m[:, col] = module_coords((t @ comp[col]) % p)
        vmats.append(m)

    zeta = primitive_ell_root(p, ell)
    mult = {}
    eye = np.eye(d, dtype=np.int64)
    total = 0
    for chi in group_elements(ell, k):
        space = eye
        for j, m in enumerate(vmats):
            lam = pow(zeta, chi[j], p)
            ker = nullspace((m - lam * np.eye(d, dtype=np.int64)) % p, p)
            space = _intersect_rows(space, ker, p)
            if space.shape[0] == 0:
                break
        if space.shape[0]:
            mult[chi] = int(space.shape[0])
            total += space.shape[0]
    if total != d:
        raise OracleError("J/J^2 did not decompose into characters (not split?)")

    # Y = <chi : m_chi != 0> inside X(G) = (ZZ/ell)^k, via integer lifts
    from . import intlin

    lift_rows = [tuple(chi) for chi in mult] + [
        tuple(ell if j == i else 0 for j in range(k)) for i in range(k)
    ]
    y_lift = intlin.hnf(lift_rows)
    y_order = ell**k // abs(intlin.det(y_lift)) if k else 1
    y_gens = tuple(
        tuple(x % ell for x in row) for row in y_lift if any(x % ell for x in row)
    )

    d_elems = tuple(
        g
        for g in group_elements(ell, k)
        if all(sum(c * x for c, x in zip(chi, g)) % ell == 0 for chi in mult)
    )
    block_count = len(d_elems)
    if block_count * y_order != ell**k:
        raise OracleError("|D| |Y| != |X(G)|: inconsistent block data")

    dim_t = s1.dim * ell**k
    assert dim_t % block_count == 0
    block_dims = tuple([dim_t // block_count] * block_count)

    gens = [(chi, m) for chi, m in sorted(mult.items())]
    q = cayley_graph((ell, k), gens)

    return BlockReport(
        ell=ell,
        k=k,
        block_count=block_count,
        block_dims=block_dims,
        quiver=q,
        char_multiplicities={tuple(c): m for c, m in mult.items()},
        y_order=y_order,
        y_generators=y_gens,
        d_elements=d_elems,
    )


def _solve_coords(rows: np.ndarray, v: np.ndarray, p: int) -> np.ndarray | None:
    """Solve c @ rows = v mod p (rows independent); None if inconsistent."""
    aug = np.concatenate([rows.T % p, (np.asarray(v) % p)[:, None]], axis=1)
    r, piv = rref(aug, p)
    ncols = rows.shape[0]
    sol = np.zeros(ncols, dtype=np.int64)
    for k_, c in enumerate(piv):
        if c == ncols:
            return None
        sol[c] = r[k_, ncols]
    return sol


def _intersect_rows(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Intersection of two row spaces mod p."""
    if a.shape[0] == 0 or b.shape[0] == 0:
        return np.zeros((0, a.shape[1]), dtype=np.int64)
    stacked = np.concatenate([a, b])
    combos = nullspace(stacked.T % p, p)
    # combos rows (x | y) with x @ a + y @ b = 0... we want x @ a = -y @ b
    ka = a.shape[0]
    vecs = (combos[:, :ka] @ a) % p
    r, piv = rref(vecs, p) if vecs.size else (np.zeros((0, a.shape[1]), np.int64), [])
    return r


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------


def algebra_to_json(a: FDAlgebra) -> str:
    triples = [
        [int(i), int(j), int(k), int(a.sc[i, j, k])]
        for i, j, k in zip(*np.nonzero(a.sc))
    ]
    return json.dumps(
        {"dim": a.dim, "p": a.p, "unit": [int(x) for x in a.unit], "sc": triples},
        sort_keys=True,
    )


def algebra_from_json(text: str) -> FDAlgebra:
    data = json.loads(text)
    n = data["dim"]
    sc = np.zeros((n, n, n), dtype=np.int64)
    for i, j, k, v in data["sc"]:
        sc[i, j, k] = v
    return FDAlgebra(dim=n, p=data["p"], sc=sc, unit=np.array(data["unit"], dtype=np.int64))
