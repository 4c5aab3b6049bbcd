"""Weyl group engine: exact matrix elements, length, reduced words, the rank
function s(w), Bruhat order, stabilizers and PBW root sequences.

An element is canonically its integer matrix acting on the weight lattice in
fundamental-weight coordinates; the conjugate action on the root lattice in
simple-root coordinates is carried alongside so root bookkeeping never leaves
the integers.  Letters of words are 1-based, matching the $s_1, ..., s_r$
of the literature and of the CLI syntax "1,2,1".
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from typing import Iterator

from .errors import CapExceededError, NonReducedWordError
from .intlin import Matrix, Vector, identity, inverse_unimodular, matmul, matvec, rank
from .rootsys import CartanData

Word = tuple[int, ...]

ENUM_CAP_DEFAULT = 10**6


def _weight_reflection(cd: CartanData, i: int) -> Matrix:
    """s_i on P in varpi-coordinates: subtract the i-th coordinate times alpha_i."""
    a, r = cd.a, cd.r
    return tuple(
        tuple((1 if k == j else 0) - (a[k][i] if j == i else 0) for j in range(r))
        for k in range(r)
    )


def _root_reflection(cd: CartanData, i: int) -> Matrix:
    """s_i on Q in alpha-coordinates."""
    a, r = cd.a, cd.r
    return tuple(
        tuple((1 if k == j else 0) - (a[i][j] if k == i else 0) for j in range(r))
        for k in range(r)
    )


@dataclass(frozen=True, eq=False)
class WeylElement:
    """Weyl group element; equality and hashing go through the weight matrix."""

    cd: CartanData = field(compare=False)
    wmat: Matrix
    rmat: Matrix = field(compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_key", (self.cd.cartan_type, self.wmat))

    def __hash__(self):
        return hash(self._key)

    def __eq__(self, other):
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self._key == other._key

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        if self.cd is not other.cd:
            raise ValueError("elements live over different Cartan data")
        return WeylElement(self.cd, matmul(self.wmat, other.wmat), matmul(self.rmat, other.rmat))

    def inverse(self) -> "WeylElement":
        return WeylElement(self.cd, inverse_unimodular(self.wmat), inverse_unimodular(self.rmat))

    def is_identity(self) -> bool:
        return self.wmat == identity(self.cd.r)

    def apply_root(self, root: Vector) -> Vector:
        return matvec(self.rmat, root)

    def apply_weight(self, weight: Vector) -> Vector:
        return matvec(self.wmat, weight)

    def __repr__(self):
        return f"W({self.cd.cartan_type}; {format_word(reduced_word(self))!r})"


def identity_element(cd: CartanData) -> WeylElement:
    eye = identity(cd.r)
    return WeylElement(cd, eye, eye)


@functools.lru_cache(maxsize=None)
def _generators(cd: CartanData) -> tuple[WeylElement, ...]:
    return tuple(
        WeylElement(cd, _weight_reflection(cd, i), _root_reflection(cd, i))
        for i in range(cd.r)
    )


def simple_reflection(cd: CartanData, i: int) -> WeylElement:
    """The generator s_i, 1 <= i <= r."""
    if not 1 <= i <= cd.r:
        raise IndexError(f"letter {i} out of range 1..{cd.r}")
    return _generators(cd)[i - 1]


def from_word(cd: CartanData, word) -> WeylElement:
    """Product s_{i_1} s_{i_2} ... in word order; the empty word is the identity."""
    w = identity_element(cd)
    for i in word:
        w = w * simple_reflection(cd, i)
    return w


@functools.lru_cache(maxsize=200000)
def length(w: WeylElement) -> int:
    """Number of positive roots sent negative; equals the reduced-word length."""
    return sum(1 for beta in w.cd.pos_roots if any(x < 0 for x in w.apply_root(beta)))


def _alpha(cd: CartanData, i: int) -> Vector:
    return tuple(1 if j == i - 1 else 0 for j in range(cd.r))


def right_descents(w: WeylElement) -> list[int]:
    """Letters i with l(w s_i) < l(w), i.e. w(alpha_i) negative."""
    out = []
    for i in range(1, w.cd.r + 1):
        if any(x < 0 for x in w.apply_root(_alpha(w.cd, i))):
            out.append(i)
    return out


@functools.lru_cache(maxsize=200000)
def reduced_word(w: WeylElement) -> Word:
    """Deterministic reduced word: peel the smallest right descent repeatedly."""
    letters = []
    cur = w
    while True:
        ds = right_descents(cur)
        if not ds:
            break
        i = ds[0]
        letters.append(i)
        cur = cur * simple_reflection(cur.cd, i)
    letters.reverse()
    return tuple(letters)


def longest_element(cd: CartanData) -> WeylElement:
    """w_0, found by greedily multiplying ascents; takes exactly N steps."""
    w = identity_element(cd)
    while True:
        asc = next(
            (
                i
                for i in range(1, cd.r + 1)
                if all(x >= 0 for x in w.apply_root(_alpha(cd, i)))
            ),
            None,
        )
        if asc is None:
            return w
        w = w * simple_reflection(cd, asc)


@functools.lru_cache(maxsize=200000)
def rank_s(w: WeylElement) -> int:
    """Reflection length s(w): the codimension of the fixed space of w,
    computed as the rational rank of (matrix - I)."""
    r = w.cd.r
    eye = identity(r)
    diff = tuple(tuple(w.wmat[i][j] - eye[i][j] for j in range(r)) for i in range(r))
    return rank(diff)


def order(w: WeylElement) -> int:
    """Multiplicative order of w."""
    n = 1
    cur = w
    e = identity_element(w.cd)
    while cur != e:
        cur = cur * w
        n += 1
        if n > 10**6:
            raise RuntimeError("runaway element order")
    return n


def stabilizes_weight(w: WeylElement, i: int) -> bool:
    """Whether w fixes the fundamental weight varpi_i (1-based)."""
    if not 1 <= i <= w.cd.r:
        raise IndexError(f"weight index {i} out of range 1..{w.cd.r}")
    varpi = tuple(1 if j == i - 1 else 0 for j in range(w.cd.r))
    return w.apply_weight(varpi) == varpi


@functools.lru_cache(maxsize=200000)
def bruhat_leq(u: WeylElement, w: WeylElement) -> bool:
    """Bruhat-Chevalley order, by the standard descent recursion (peeling the
    smallest descent of w, which is the subword/deletion test against the
    canonical reduced word)."""
    if u.cd is not w.cd:
        raise ValueError("elements live over different Cartan data")
    if u.is_identity():
        return True
    lw = length(w)
    if length(u) > lw:
        return False
    ds = right_descents(w)
    if not ds:
        return False  # w = e but u != e
    i = ds[0]
    si = simple_reflection(w.cd, i)
    ws = w * si
    if i in right_descents(u):
        return bruhat_leq(u * si, ws)
    return bruhat_leq(u, ws)


def root_sequence(cd: CartanData, word) -> tuple[Vector, ...]:
    """PBW root order of a reduced word: beta_k = s_{i_1}...s_{i_{k-1}}(alpha_{i_k}).

    Raises NonReducedWordError unless the word is reduced; for a reduced word
    the betas are distinct positive roots.
    """
    word = tuple(word)
    w = from_word(cd, word)
    if length(w) != len(word):
        raise NonReducedWordError(f"word {word} is not reduced")
    betas = []
    prefix = identity_element(cd)
    for k, i in enumerate(word):
        betas.append(prefix.apply_root(_alpha(cd, i)))
        prefix = prefix * simple_reflection(cd, i)
    assert len(set(betas)) == len(betas)
    return tuple(betas)


def enumerate_group(cd: CartanData, cap: int = ENUM_CAP_DEFAULT) -> Iterator[WeylElement]:
    """Yield every element exactly once, breadth-first by length."""
    e = identity_element(cd)
    seen = {e.wmat}
    layer = [e]
    yield e
    count = 1
    gens = _generators(cd)
    while layer:
        nxt = []
        for w in layer:
            for s in gens:
                ws = w * s
                if ws.wmat not in seen:
                    seen.add(ws.wmat)
                    count += 1
                    if count > cap:
                        raise CapExceededError(
                            f"Weyl group of {cd.cartan_type} exceeds cap {cap}"
                        )
                    nxt.append(ws)
                    yield ws
        layer = nxt


def all_reduced_words(w: WeylElement) -> list[Word]:
    """Every reduced word of w (by right-descent recursion); small ranks only."""
    if w.is_identity():
        return [()]
    out = []
    for i in right_descents(w):
        si = simple_reflection(w.cd, i)
        for sub in all_reduced_words(w * si):
            out.append(sub + (i,))
    return out


def word_support(w: WeylElement) -> frozenset[int]:
    """Set of letters occurring in a reduced word of w (independent of the
    choice of reduced word)."""
    return frozenset(reduced_word(w))


def minus_w0_fixed_simples(cd: CartanData) -> list[int]:
    """Letters i with -w_0(alpha_i) = alpha_i; empty exactly in type A_{2n}."""
    w0 = longest_element(cd)
    out = []
    for i in range(1, cd.r + 1):
        image = tuple(-x for x in w0.apply_root(_alpha(cd, i)))
        if image == _alpha(cd, i):
            out.append(i)
    return out


def reflections(cd: CartanData) -> list[WeylElement]:
    """All reflections of W, as the closure of the generators under conjugation."""
    gens = _generators(cd)
    refl = set(gens)
    frontier = set(gens)
    while frontier:
        new = set()
        for t in frontier:
            for s in gens:
                c = s * t * s
                if c not in refl:
                    new.add(c)
        refl |= new
        frontier = new
    return sorted(refl, key=lambda t: t.wmat)


# ---------------------------------------------------------------------------
# word syntax: "1,2,1", "w0", "w0*1,2" (left-to-right product), "" or "e"
# ---------------------------------------------------------------------------


def parse_word(cd: CartanData, text: str) -> WeylElement:
    """Parse CLI word syntax into an element."""
    text = text.strip()
    if text in ("", "e"):
        return identity_element(cd)
    w = identity_element(cd)
    for token in text.split("*"):
        token = token.strip()
        if token in ("", "e"):
            continue
        if token == "w0":
            w = w * longest_element(cd)
            continue
        try:
            letters = [int(part) for part in token.split(",") if part.strip() != ""]
        except ValueError as exc:
            raise NonReducedWordError(f"cannot parse word token {token!r}") from exc
        for i in letters:
            if not 1 <= i <= cd.r:
                raise IndexError(f"letter {i} out of range 1..{cd.r} in {text!r}")
        w = w * from_word(cd, letters)
    return w


def format_word(word) -> str:
    return ",".join(str(i) for i in word)


def format_element(w: WeylElement) -> str:
    """Canonical printable form; re-parses to the same element."""
    word = reduced_word(w)
    return format_word(word) if word else "e"
