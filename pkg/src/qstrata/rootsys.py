"""Static root-system data for the finite Cartan types.

Conventions: the Cartan matrix is $a_{ij} = \\langle \\alpha_j, \\alpha_i^\\vee \\rangle$,
so $s_i(\\lambda) = \\lambda - \\langle \\lambda, \\alpha_i^\\vee \\rangle \\alpha_i$ and
$(d_i a_{ij})$ is symmetric.  Positive roots are stored in simple-root
coordinates and generated by closing the simple roots under the simple
reflections; nothing beyond the Cartan matrices themselves is hardcoded.
"""

from __future__ import annotations

import functools
import re
from dataclasses import dataclass
from math import gcd

from .errors import BadEllError, InvalidCartanTypeError
from .intlin import Matrix, Vector, matvec

FAMILIES = "ABCDEFG"

# rank windows for the canonical labels (B1/C1/C2 alias into A1/B2 below)
_RANK_RANGE = {
    "A": (1, None),
    "B": (2, None),
    "C": (3, None),
    "D": (4, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}


@dataclass(frozen=True)
class CartanType:
    family: str
    rank: int

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def cartan_type(family: str, rank: int) -> CartanType:
    """Validated, canonicalized Cartan type.

    Aliases: B1 = C1 = A1 and C2 = B2 (same Cartan matrix up to relabelling);
    the canonical label is returned.  Anything else out of range is rejected.
    """
    family = family.upper()
    if family not in FAMILIES:
        raise InvalidCartanTypeError(f"unknown family {family!r}")
    if rank < 1:
        raise InvalidCartanTypeError(f"rank must be positive, got {rank}")
    if family in ("B", "C") and rank == 1:
        return CartanType("A", 1)
    if family == "C" and rank == 2:
        return CartanType("B", 2)
    lo, hi = _RANK_RANGE[family]
    if rank < lo or (hi is not None and rank > hi):
        raise InvalidCartanTypeError(f"no finite type {family}{rank}")
    return CartanType(family, rank)


def parse_cartan_type(text: str) -> CartanType:
    """Parse a type string like "A3" or "d4" (case-insensitive)."""
    m = re.fullmatch(r"\s*([A-Za-z])\s*(\d+)\s*", text)
    if not m:
        raise InvalidCartanTypeError(f"cannot parse Cartan type {text!r}")
    return cartan_type(m.group(1), int(m.group(2)))


def _cartan_matrix(t: CartanType) -> Matrix:
    f, r = t.family, t.rank
    a = [[2 if i == j else 0 for j in range(r)] for i in range(r)]

    def bond(i, j, aij=-1, aji=-1):
        a[i][j] = aij
        a[j][i] = aji

    if f in ("A", "B", "C"):
        for i in range(r - 1):
            bond(i, i + 1)
        if f == "B":
            bond(r - 2, r - 1, -1, -2)  # alpha_r short
        elif f == "C":
            bond(r - 2, r - 1, -2, -1)  # alpha_r long
    elif f == "D":
        for i in range(r - 2):
            bond(i, i + 1)
        bond(r - 3, r - 1)
    elif f == "E":
        # Bourbaki: chain 1-3-4-5-...-r with 2 attached to 4
        for i, j in [(0, 2), (2, 3), (3, 4), (1, 3)] + [(k, k + 1) for k in range(4, r - 1)]:
            bond(i, j)
    elif f == "F":
        bond(0, 1)
        bond(1, 2, -1, -2)  # alpha_3, alpha_4 short
        bond(2, 3)
    elif f == "G":
        bond(0, 1, -3, -1)  # alpha_1 short
    return tuple(tuple(row) for row in a)


def _symmetrizers(a: Matrix) -> tuple[int, ...]:
    """Coprime positive d with (d_i a_ij) symmetric, by propagation along bonds."""
    r = len(a)
    from fractions import Fraction

    d = [None] * r
    d[0] = Fraction(1)
    pending = [0]
    while pending:
        i = pending.pop()
        for j in range(r):
            if i != j and a[i][j] != 0 and d[j] is None:
                # d_j a_ji = d_i a_ij
                d[j] = d[i] * a[i][j] / a[j][i]
                pending.append(j)
    assert all(x is not None for x in d), "Dynkin diagram is connected"
    lcm_den = 1
    for x in d:
        lcm_den = lcm_den * x.denominator // gcd(lcm_den, x.denominator)
    ints = [int(x * lcm_den) for x in d]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return tuple(x // g for x in ints)


def _simple_root_reflection(a: Matrix, i: int) -> Matrix:
    """Action of $s_i$ on the root lattice in simple-root coordinates."""
    r = len(a)
    return tuple(
        tuple((1 if k == j else 0) - (a[i][j] if k == i else 0) for j in range(r))
        for k in range(r)
    )


def _positive_roots(a: Matrix) -> tuple[Vector, ...]:
    """Close the simple roots under the simple reflections; keep positives.

    Sorted by (height, coordinates) so the table is deterministic.
    """
    r = len(a)
    refl = [_simple_root_reflection(a, i) for i in range(r)]
    roots = {tuple(1 if j == i else 0 for j in range(r)) for i in range(r)}
    frontier = set(roots)
    while frontier:
        new = set()
        for v in frontier:
            for s in refl:
                w = matvec(s, v)
                if w not in roots:
                    new.add(w)
        roots |= new
        frontier = new
    pos = [v for v in roots if all(x >= 0 for x in v)]
    pos.sort(key=lambda v: (sum(v), v))
    return tuple(pos)


def _coxeter_number(a: Matrix) -> int:
    """Order of the product of all simple reflections (acting on Q)."""
    from .intlin import identity, matmul

    r = len(a)
    cox = identity(r)
    for i in range(r):
        cox = matmul(cox, _simple_root_reflection(a, i))
    power = cox
    h = 1
    while power != identity(r):
        power = matmul(power, cox)
        h += 1
        if h > 1000:
            raise RuntimeError("runaway Coxeter order")
    return h


@dataclass(frozen=True)
class CartanData:
    """Immutable root-system datum: Cartan matrix, symmetrizers, positive roots."""

    cartan_type: CartanType
    a: Matrix
    d: tuple[int, ...]
    pos_roots: tuple[Vector, ...]
    N: int
    r: int
    h: int
    theta_coeffs: tuple[int, ...]

    def __repr__(self) -> str:
        return f"CartanData({self.cartan_type})"


@functools.lru_cache(maxsize=None)
def cartan_data(t: CartanType) -> CartanData:
    """Full root-system datum for a validated type."""
    t = cartan_type(t.family, t.rank)
    a = _cartan_matrix(t)
    d = _symmetrizers(a)
    pos = _positive_roots(a)
    # highest root: unique positive root dominating all others coordinatewise
    theta = max(pos, key=lambda v: (sum(v), v))
    assert all(all(x <= y for x, y in zip(v, theta)) for v in pos), "highest root"
    h = _coxeter_number(a)
    return CartanData(
        cartan_type=t,
        a=a,
        d=d,
        pos_roots=pos,
        N=len(pos),
        r=t.rank,
        h=h,
        theta_coeffs=theta,
    )


def cartan_data_from_string(text: str) -> CartanData:
    return cartan_data(parse_cartan_type(text))


@dataclass(frozen=True)
class GoodEll:
    ell: int
    validated: bool


def is_good_ell(cd: CartanData, ell: int) -> GoodEll:
    """ell is good when it is odd and prime to every d_i and every coefficient
    of the highest root."""
    if ell <= 1:
        raise BadEllError(f"ell must exceed 1, got {ell}")
    ok = (
        ell % 2 == 1
        and all(gcd(ell, di) == 1 for di in cd.d)
        and all(gcd(ell, ai) == 1 for ai in cd.theta_coeffs)
    )
    return GoodEll(ell=ell, validated=ok)


def require_good_ell(cd: CartanData, ell: int) -> int:
    g = is_good_ell(cd, ell)
    if not g.validated:
        raise BadEllError(
            f"ell={ell} is not good for {cd.cartan_type}: needs odd, coprime to "
            f"d={cd.d} and to highest-root coefficients {cd.theta_coeffs}"
        )
    return ell


def pairing_matrix_mod_ell(cd: CartanData, ell: int) -> Matrix:
    """Matrix of the pairing (varpi_i, alpha_j) = delta_ij d_i reduced mod ell.

    Nondegenerate for good ell since each d_i is then a unit.
    """
    require_good_ell(cd, ell)
    return tuple(
        tuple(cd.d[i] % ell if i == j else 0 for j in range(cd.r)) for i in range(cd.r)
    )
