"""Exact sublattice computations over ZZ and ZZ/ell.

Fixed lattices P^w and Q^w, the span A_w of a PBW root sequence, its
perpendicular B^w, and the block-normalizer subgroup N(w1, w2) inside
Q_ell^w.  All mod-ell subgroups are represented by integer lift lattices
containing ell*ZZ^r and reduced only at the boundary, which keeps the
computations correct for composite good ell.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from . import intlin, weyl
from .errors import BlockHypothesisError, ContainmentError, NonReducedWordError
from .intlin import Matrix, Vector
from .rootsys import CartanData

WEIGHT = "weight"  # varpi-basis of P
ROOT = "root"  # alpha-basis of Q


@dataclass(frozen=True)
class SubLattice:
    """Sublattice of ZZ^r in a declared basis, held in canonical Hermite form."""

    basis_kind: str
    ambient_rank: int
    basis: Matrix  # HNF rows, no zero rows

    @property
    def rank(self) -> int:
        return len(self.basis)

    def contains(self, v: Vector) -> bool:
        return intlin.solve_in_rowspan(self.basis, v) is not None

    def contains_lattice(self, other: "SubLattice") -> bool:
        return all(self.contains(v) for v in other.basis)

    def __eq__(self, other):
        if not isinstance(other, SubLattice):
            return NotImplemented
        return (self.basis_kind, self.ambient_rank, self.basis) == (
            other.basis_kind,
            other.ambient_rank,
            other.basis,
        )

    def __hash__(self):
        return hash((self.basis_kind, self.ambient_rank, self.basis))


def sublattice(kind: str, ambient_rank: int, generators) -> SubLattice:
    return SubLattice(kind, ambient_rank, intlin.hnf(list(generators)))


def lattice_sum(a: SubLattice, b: SubLattice) -> SubLattice:
    assert a.basis_kind == b.basis_kind and a.ambient_rank == b.ambient_rank
    return sublattice(a.basis_kind, a.ambient_rank, list(a.basis) + list(b.basis))


def lattice_intersection(a: SubLattice, b: SubLattice) -> SubLattice:
    """Intersection via the kernel of the stacked generator matrix."""
    assert a.basis_kind == b.basis_kind and a.ambient_rank == b.ambient_rank
    if not a.basis or not b.basis:
        return sublattice(a.basis_kind, a.ambient_rank, [])
    stacked = tuple(a.basis) + tuple(b.basis)
    k1 = len(a.basis)
    combos = intlin.kernel(intlin.transpose(stacked), n=len(stacked))
    gens = []
    for c in combos:
        v = [0] * a.ambient_rank
        for coeff, row in zip(c[:k1], a.basis):
            for j, x in enumerate(row):
                v[j] += coeff * x
        gens.append(tuple(v))
    return sublattice(a.basis_kind, a.ambient_rank, gens)


def full_lattice(kind: str, r: int) -> SubLattice:
    return sublattice(kind, r, intlin.identity(r))


def fixed_lattice(w: weyl.WeylElement, which: str) -> SubLattice:
    """P^w or Q^w: the kernel of (matrix - I) over ZZ.

    Kernels of integer matrices are saturated, so P/P^w is torsion-free as the
    mod-ell counting arguments require.
    """
    if which not in (WEIGHT, ROOT, "P", "Q"):
        raise ValueError(f"which must be 'P'/'weight' or 'Q'/'root', got {which!r}")
    kind = WEIGHT if which in (WEIGHT, "P") else ROOT
    m = w.wmat if kind == WEIGHT else w.rmat
    r = w.cd.r
    eye = intlin.identity(r)
    diff = tuple(tuple(m[i][j] - eye[i][j] for j in range(r)) for i in range(r))
    ker = intlin.kernel(diff, n=r)
    sat = intlin.saturate(ker) if ker else ()
    assert sat == ker, "integer kernels are saturated"
    return SubLattice(kind, r, ker)


def a_w_lattice(cd: CartanData, word) -> SubLattice:
    """A_w: the span of the PBW root sequence of a reduced word.

    Asserts the booth identity A_w = sum ZZ alpha_{i_j} over the letters.
    """
    word = tuple(word)
    betas = weyl.root_sequence(cd, word)  # raises NonReducedWordError if needed
    span_betas = sublattice(ROOT, cd.r, betas)
    letter_gens = [tuple(1 if j == i - 1 else 0 for j in range(cd.r)) for i in set(word)]
    span_letters = sublattice(ROOT, cd.r, letter_gens)
    if span_betas != span_letters:
        raise AssertionError(
            f"A_w identity failed for word {word}: {span_betas.basis} vs {span_letters.basis}"
        )
    return span_betas


def b_w_lattice(cd: CartanData, word) -> SubLattice:
    """B^w = (A_w)^perp: the span of the fundamental weights whose letter is
    absent from the (reduced) word; rank = number of absent simple reflections."""
    word = tuple(word)
    w = weyl.from_word(cd, word)
    if weyl.length(w) != len(word):
        raise NonReducedWordError(f"word {word} is not reduced")
    absent = [i for i in range(1, cd.r + 1) if i not in set(word)]
    gens = [tuple(1 if j == i - 1 else 0 for j in range(cd.r)) for i in absent]
    return sublattice(WEIGHT, cd.r, gens)


@dataclass(frozen=True)
class EllSubgroup:
    """Subgroup of (ZZ/ell)^r given by the Hermite basis of its integer lift
    lattice L with ell*ZZ^r <= L <= ZZ^r."""

    ell: int
    basis_kind: str
    ambient_rank: int
    lift_basis: Matrix  # full-rank HNF, contains ell*I

    @property
    def order_exponent(self) -> int:
        """k with |subgroup| = ell^k; the order is always a pure power here."""
        d = abs(intlin.det(self.lift_basis))
        size = self.ell**self.ambient_rank // d
        k = 0
        while size % self.ell == 0:
            size //= self.ell
            k += 1
        if size != 1:
            raise AssertionError(
                f"subgroup order is not a power of ell={self.ell} (leftover {size})"
            )
        return k

    def generators(self) -> list[Vector]:
        """Reduced generators (nonzero rows of the lift basis mod ell)."""
        out = []
        for row in self.lift_basis:
            red = tuple(x % self.ell for x in row)
            if any(red):
                out.append(red)
        return out

    def contains(self, other: "EllSubgroup") -> bool:
        assert (self.ell, self.basis_kind, self.ambient_rank) == (
            other.ell,
            other.basis_kind,
            other.ambient_rank,
        )
        return all(
            intlin.solve_in_rowspan(self.lift_basis, v) is not None
            for v in other.lift_basis
        )

    def elements(self) -> list[Vector]:
        """All elements as coordinate vectors mod ell (small groups only)."""
        import itertools

        gens = self.generators()
        seen = {tuple([0] * self.ambient_rank)}
        for coeffs in itertools.product(range(self.ell), repeat=len(gens)):
            v = [0] * self.ambient_rank
            for c, g in zip(coeffs, gens):
                for j, x in enumerate(g):
                    v[j] = (v[j] + c * x) % self.ell
            seen.add(tuple(v))
        return sorted(seen)


def ell_subgroup(ell: int, kind: str, r: int, generators) -> EllSubgroup:
    """Subgroup generated by integer lifts of the given vectors."""
    gens = [tuple(int(x) for x in g) for g in generators]
    lift = intlin.hnf(gens + [tuple(ell if j == i else 0 for j in range(r)) for i in range(r)])
    return EllSubgroup(ell=ell, basis_kind=kind, ambient_rank=r, lift_basis=lift)


def ell_reduction(sub: SubLattice, ell: int) -> EllSubgroup:
    """Image of an integer sublattice in (ZZ/ell)^r."""
    return ell_subgroup(ell, sub.basis_kind, sub.ambient_rank, sub.basis)


def frak_s(w1: weyl.WeylElement, w2: weyl.WeylElement) -> list[int]:
    """The set S(w1,w2) = {i : w0 w1 and w0 w2 both fix varpi_i} (1-based)."""
    cd = w1.cd
    w0 = weyl.longest_element(cd)
    u1, u2 = w0 * w1, w0 * w2
    return [
        i
        for i in range(1, cd.r + 1)
        if weyl.stabilizes_weight(u1, i) and weyl.stabilizes_weight(u2, i)
    ]


def check_block_hypothesis(ell: int, w: weyl.WeylElement) -> None:
    """Raise BlockHypothesisError unless gcd(ell, ord(w)) = 1."""
    o = weyl.order(w)
    g = gcd(ell, o)
    if g != 1:
        raise BlockHypothesisError(ell, o, g)


def normalizer_lattice(
    cd: CartanData, ell: int, w1: weyl.WeylElement, w2: weyl.WeylElement
) -> EllSubgroup:
    """N(w1,w2) = Q_ell^w  intersect  sum_{i not in S} ZZ alpha_i (mod ell),
    for w = w2^{-1} w1; requires ell prime to ord(w).

    Computed by intersecting the integer lifts Q^w + ell*Q and
    span{alpha_i : i not in S} + ell*Q, then reducing mod ell.
    """
    twist = w2.inverse() * w1
    check_block_hypothesis(ell, twist)
    r = cd.r
    s_set = set(frak_s(w1, w2))
    qw = fixed_lattice(twist, ROOT)
    ell_q = [tuple(ell if j == i else 0 for j in range(r)) for i in range(r)]
    lift1 = sublattice(ROOT, r, list(qw.basis) + ell_q)
    alpha_span = [
        tuple(1 if j == i - 1 else 0 for j in range(r))
        for i in range(1, r + 1)
        if i not in s_set
    ]
    lift2 = sublattice(ROOT, r, alpha_span + ell_q)
    inter = lattice_intersection(lift1, lift2)
    return EllSubgroup(ell=ell, basis_kind=ROOT, ambient_rank=r, lift_basis=inter.basis)


def fixed_ell_subgroup(cd: CartanData, ell: int, w: weyl.WeylElement, kind: str = ROOT) -> EllSubgroup:
    """Q_ell^w (or P_ell^w): the image of the fixed lattice mod ell."""
    return ell_reduction(fixed_lattice(w, kind), ell)


def quotient_invariants(sub: EllSubgroup, sup: EllSubgroup) -> tuple[int, ...]:
    """Abelian invariant factors of sup/sub (nontrivial ones only), via the
    Smith normal form of the sub generators written in a basis of sup."""
    if not sup.contains(sub):
        raise ContainmentError("quotient_invariants: sub is not contained in sup")
    coords = []
    for v in sub.lift_basis:
        c = intlin.solve_in_rowspan(sup.lift_basis, v)
        assert c is not None
        coords.append(c)
    diag = intlin.snf_diagonal(tuple(coords))
    # full rank is automatic: both lifts contain ell*ZZ^r
    return tuple(d for d in diag if d != 1)
