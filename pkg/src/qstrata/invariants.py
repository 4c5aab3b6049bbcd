"""Closed-form stratum invariants.

For g in the double Bruhat cell X_{w1,w2} at a good ell this module computes
the invariants of the ell^{2N+r}-dimensional factor of the quantised function
algebra: simple-module count ell^{r-s(w)} and dimension
ell^{(l(w1)+l(w2)+s(w))/2} for the twist w = w2^{-1} w1, the fully-Azumaya
test l(w1)+l(w2)+s(w) = 2N with its matrix-over-truncated-polynomials
structure, the finite/wild dichotomy at l(w1)+l(w2) = 2N-2, the centre-fiber
vanishing pattern, the block count ell^{card S(w1,w2)}, and the block
normalizer subgroup.  The parallel Borel invariants for b in X_{w,e} are
computed by borel_invariants.

All counts are ell-power exponents; render with ell**exp only for display.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from . import lattice, weyl
from .errors import BlockHypothesisError, NotFullyAzumayaError
from .rootsys import CartanData, require_good_ell

FINITE = "finite"
WILD = "wild"

SEMISIMPLE = "semisimple"  # b_i != 0 != c_i
TRUNCATED = "truncated"  # exactly one of b_i, c_i vanishes
LOCAL = "local"  # b_i = 0 = c_i


@dataclass(frozen=True)
class StratumPair:
    """A double Bruhat cell label (w1, w2) together with a good ell.

    `twist` is w2^{-1} w1 (the convention of the simple-count and normalizer
    statements).  The literature also uses w2 w1^{-1} in one counting lemma;
    that variant is exposed as `twist_alt` and never silently substituted.
    """

    w1: weyl.WeylElement
    w2: weyl.WeylElement
    ell: int

    def __post_init__(self):
        if self.w1.cd is not self.w2.cd:
            raise ValueError("w1 and w2 live over different Cartan data")
        require_good_ell(self.cd, self.ell)

    @property
    def cd(self) -> CartanData:
        return self.w1.cd

    @property
    def twist(self) -> weyl.WeylElement:
        return self.w2.inverse() * self.w1

    @property
    def twist_alt(self) -> weyl.WeylElement:
        return self.w2 * self.w1.inverse()


@dataclass(frozen=True)
class FiberClass:
    """Per-index vanishing pattern of the centre fiber: each index i carries
    one of semisimple / truncated / local."""

    classes: tuple[str, ...]

    def semisimple_indices(self) -> list[int]:
        return [i + 1 for i, c in enumerate(self.classes) if c == SEMISIMPLE]


@dataclass(frozen=True)
class StratumInvariants:
    cartan_type: str
    ell: int
    w1_word: str
    w2_word: str
    len1: int
    len2: int
    s_twist: int
    algebra_dim_exp: int  # 2N + r
    simple_count_exp: int  # r - s(twist)
    simple_dim_exp: int  # (len1 + len2 + s_twist) / 2
    is_azumaya: bool
    rep_type: str
    frak_S: tuple[int, ...]
    block_count_exp: int  # card S
    block_hypothesis_met: bool
    simples_per_block_exp: int | None  # r - s - card S, needs the hypothesis
    normalizer: lattice.EllSubgroup | None

    def to_json_dict(self) -> dict:
        d = {
            "type": self.cartan_type,
            "ell": self.ell,
            "w1": self.w1_word,
            "w2": self.w2_word,
            "len1": self.len1,
            "len2": self.len2,
            "s_twist": self.s_twist,
            "algebra_dim": {"base": self.ell, "exp": self.algebra_dim_exp},
            "simple_count": {"base": self.ell, "exp": self.simple_count_exp},
            "simple_dim": {"base": self.ell, "exp": self.simple_dim_exp},
            "azumaya": self.is_azumaya,
            "rep_type": self.rep_type,
            "frak_S": list(self.frak_S),
            "block_count": {"base": self.ell, "exp": self.block_count_exp},
            "block_hypothesis_met": self.block_hypothesis_met,
            "simples_per_block": (
                None
                if self.simples_per_block_exp is None
                else {"base": self.ell, "exp": self.simples_per_block_exp}
            ),
            "normalizer": (
                None
                if self.normalizer is None
                else {
                    "ell": self.normalizer.ell,
                    "ambient_rank": self.normalizer.ambient_rank,
                    "order_exp": self.normalizer.order_exponent,
                    "generators": [list(g) for g in self.normalizer.generators()],
                }
            ),
        }
        return d


def frak_S(pair: StratumPair) -> tuple[int, ...]:
    return tuple(lattice.frak_s(pair.w1, pair.w2))


def fiber_class(pair: StratumPair) -> FiberClass:
    """Vanishing pattern of the fiber factors: index i is semisimple iff both
    w0 w1 and w0 w2 fix varpi_i, truncated iff exactly one does, local iff
    neither does."""
    cd = pair.cd
    w0 = weyl.longest_element(cd)
    u1, u2 = w0 * pair.w1, w0 * pair.w2
    classes = []
    for i in range(1, cd.r + 1):
        b_nonzero = weyl.stabilizes_weight(u1, i)
        c_nonzero = weyl.stabilizes_weight(u2, i)
        if b_nonzero and c_nonzero:
            classes.append(SEMISIMPLE)
        elif b_nonzero or c_nonzero:
            classes.append(TRUNCATED)
        else:
            classes.append(LOCAL)
    return FiberClass(tuple(classes))


def block_count_function_algebra(pair: StratumPair) -> int:
    """Exponent of the block count: card S(w1,w2), the number of semisimple
    indices of the fiber pattern.  Needs no coprimality hypothesis."""
    fc = fiber_class(pair)
    exp = len(fc.semisimple_indices())
    assert exp == len(frak_S(pair))
    return exp


def is_fully_azumaya(pair: StratumPair) -> bool:
    """l(w1) + l(w2) + s(w2^{-1}w1) = 2N."""
    return (
        weyl.length(pair.w1) + weyl.length(pair.w2) + weyl.rank_s(pair.twist)
        == 2 * pair.cd.N
    )


@dataclass(frozen=True)
class AzumayaStructure:
    """O_eps(g) on the fully Azumaya locus: ell^{summand_count_exp} matrix
    rings of size ell^{matrix_size_exp} over truncated polynomials in
    truncated_vars variables."""

    ell: int
    summand_count_exp: int  # r - s
    matrix_size_exp: int  # N
    truncated_vars: int  # s


def azumaya_structure(pair: StratumPair) -> AzumayaStructure:
    if not is_fully_azumaya(pair):
        raise NotFullyAzumayaError(
            f"stratum ({weyl.format_element(pair.w1)}, {weyl.format_element(pair.w2)}) "
            "is not on the fully Azumaya locus"
        )
    s = weyl.rank_s(pair.twist)
    return AzumayaStructure(
        ell=pair.ell,
        summand_count_exp=pair.cd.r - s,
        matrix_size_exp=pair.cd.N,
        truncated_vars=s,
    )


def rep_type_function_algebra(pair: StratumPair) -> str:
    """Finite iff l(w1)+l(w2) >= 2N-1; wild otherwise (never tame)."""
    return FINITE if weyl.length(pair.w1) + weyl.length(pair.w2) >= 2 * pair.cd.N - 1 else WILD


def rep_type_borel(w: weyl.WeylElement) -> str:
    """Finite iff l(w) >= N-1."""
    return FINITE if weyl.length(w) >= w.cd.N - 1 else WILD


def stratum_invariants(pair: StratumPair) -> StratumInvariants:
    """All closed-form invariants of one stratum.

    Block-normalizer data require gcd(ell, ord(twist)) = 1; when that fails
    the normalizer and per-block count are reported as unavailable while the
    hypothesis-free fields (including card S and the block count) remain.
    """
    cd = pair.cd
    twist = pair.twist
    len1, len2 = weyl.length(pair.w1), weyl.length(pair.w2)
    s_twist = weyl.rank_s(twist)
    total = len1 + len2 + s_twist
    assert total % 2 == 0, "l(w1)+l(w2)+s(w) must be even for the dimension formula"
    S = frak_S(pair)
    card_S = len(S)
    simple_count_exp = cd.r - s_twist
    assert card_S <= simple_count_exp

    hypothesis_met = gcd(pair.ell, weyl.order(twist)) == 1
    normalizer = None
    per_block = None
    if hypothesis_met:
        normalizer = lattice.normalizer_lattice(cd, pair.ell, pair.w1, pair.w2)
        per_block = simple_count_exp - card_S

    return StratumInvariants(
        cartan_type=str(cd.cartan_type),
        ell=pair.ell,
        w1_word=weyl.format_element(pair.w1),
        w2_word=weyl.format_element(pair.w2),
        len1=len1,
        len2=len2,
        s_twist=s_twist,
        algebra_dim_exp=2 * cd.N + cd.r,
        simple_count_exp=simple_count_exp,
        simple_dim_exp=total // 2,
        is_azumaya=is_fully_azumaya(pair),
        rep_type=rep_type_function_algebra(pair),
        frak_S=S,
        block_count_exp=card_S,
        block_hypothesis_met=hypothesis_met,
        simples_per_block_exp=per_block,
        normalizer=normalizer,
    )


@dataclass(frozen=True)
class DimensionRecord:
    """Exponent bookkeeping: dim O(g) = ell^{2N+r}, dim U(b) = ell^{N+r},
    and the big-cell identity (2N+r)+r = 2(N+r)."""

    ell: int
    function_algebra_exp: int
    borel_exp: int
    semisimple_sum_exp: int  # 2*simple_dim_exp + simple_count_exp
    is_semisimple: bool  # sum attains the algebra dimension


def dimension_bookkeeping(pair: StratumPair) -> DimensionRecord:
    cd = pair.cd
    assert (2 * cd.N + cd.r) + cd.r == 2 * (cd.N + cd.r)
    inv = stratum_invariants(pair)
    sum_exp = 2 * inv.simple_dim_exp + inv.simple_count_exp
    assert sum_exp <= inv.algebra_dim_exp
    return DimensionRecord(
        ell=pair.ell,
        function_algebra_exp=2 * cd.N + cd.r,
        borel_exp=cd.N + cd.r,
        semisimple_sum_exp=sum_exp,
        is_semisimple=sum_exp == inv.algebra_dim_exp,
    )


# ---------------------------------------------------------------------------
# Borel side
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BorelInvariants:
    cartan_type: str
    ell: int
    w_word: str
    length: int
    s_w: int
    d_absent: int  # simple reflections missing from a reduced word
    algebra_dim_exp: int  # N + r
    simple_count_exp: int  # r - s(w)
    simple_dim_exp: int  # (l(w) + s(w)) / 2
    rep_type: str
    block_exact_exp: int | None
    block_lower_exp: int
    block_upper_exp: int
    block_rule: str

    def to_json_dict(self) -> dict:
        return {
            "type": self.cartan_type,
            "ell": self.ell,
            "w": self.w_word,
            "len": self.length,
            "s_w": self.s_w,
            "d_absent": self.d_absent,
            "algebra_dim": {"base": self.ell, "exp": self.algebra_dim_exp},
            "simple_count": {"base": self.ell, "exp": self.simple_count_exp},
            "simple_dim": {"base": self.ell, "exp": self.simple_dim_exp},
            "rep_type": self.rep_type,
            "blocks": (
                {"base": self.ell, "exp": self.block_exact_exp}
                if self.block_exact_exp is not None
                else {
                    "base": self.ell,
                    "lower_exp": self.block_lower_exp,
                    "upper_exp": self.block_upper_exp,
                }
            ),
            "block_rule": self.block_rule,
        }


def borel_invariants(w: weyl.WeylElement, ell: int) -> BorelInvariants:
    """Invariants of U(b) for b in X_{w,e}.

    The block count is exact in the cases the theory determines:
      * some reduced word of w has pairwise distinct letters -> one block;
      * s(w0) = r (types B_r, C_r, D_r even, E7, E8, F4, G2) -> one block;
      * w = w0 -> ell^{r - s(w0)} blocks (semisimple stratum);
      * w = w0 s_i -> ell^{r-s(w0)} or ell^{r-s(w0)-1} blocks according to
        whether w0(alpha_i) = -alpha_i or not;
    otherwise an interval [0, r - s(w) - d] of exponents is reported, from
    ell^d <= (simples per block) <= ell^{r-s(w)}.  All rules that apply must
    agree, and the hypothesis gcd(ell, ord(w)) = 1 is enforced.
    """
    cd = w.cd
    require_good_ell(cd, ell)
    lattice.check_block_hypothesis(ell, w)
    lw = weyl.length(w)
    s_w = weyl.rank_s(w)
    assert (lw + s_w) % 2 == 0
    word = weyl.reduced_word(w)
    support = set(word)
    d = cd.r - len(support)
    w0 = weyl.longest_element(cd)
    s_w0 = weyl.rank_s(w0)

    exact_by_rule: list[tuple[str, int]] = []
    if len(word) == len(support):
        exact_by_rule.append(("distinct-letters", 0))
    if s_w0 == cd.r:
        exact_by_rule.append(("rigid-type", 0))
    if w == w0:
        exact_by_rule.append(("longest", cd.r - s_w0))
    if lw == cd.N - 1:
        # any w of length N-1 is w0 s_i; recover i from w0 w = s_i
        rw = weyl.reduced_word(w0 * w)
        if len(rw) == 1:
            i = rw[0]
            alpha_i = tuple(1 if j == i - 1 else 0 for j in range(cd.r))
            minus = tuple(-x for x in w0.apply_root(alpha_i))
            if minus == alpha_i:
                exact_by_rule.append(("w0si-fixed", cd.r - s_w0))
            else:
                exact_by_rule.append(("w0si-moved", cd.r - s_w0 - 1))

    lower_exp, upper_exp = 0, cd.r - s_w - d
    if exact_by_rule:
        exps = {e for _, e in exact_by_rule}
        assert len(exps) == 1, f"conflicting exact block rules {exact_by_rule}"
        exact = exps.pop()
        assert lower_exp <= exact <= upper_exp
        rule = "+".join(name for name, _ in exact_by_rule)
        lower_exp = upper_exp = exact
    elif lower_exp == upper_exp:
        exact = lower_exp
        rule = "degenerate-interval"
    else:
        exact = None
        rule = "interval"

    return BorelInvariants(
        cartan_type=str(cd.cartan_type),
        ell=ell,
        w_word=weyl.format_element(w),
        length=lw,
        s_w=s_w,
        d_absent=d,
        algebra_dim_exp=cd.N + cd.r,
        simple_count_exp=cd.r - s_w,
        simple_dim_exp=(lw + s_w) // 2,
        rep_type=rep_type_borel(w),
        block_exact_exp=exact,
        block_lower_exp=lower_exp,
        block_upper_exp=upper_exp,
        block_rule=rule,
    )
