"""Verification suites: closed-form results cross-checked against the
finite-dimensional-algebra oracle and against exhaustive lattice/Weyl sweeps.

Each suite returns a list of CheckResult; the CLI turns them into exit codes
and the acceptance tests print one line per criterion.
"""

from __future__ import annotations

from math import gcd

import numpy as np

from . import invariants, lattice, quiver, skewalg, strata, weyl
from .invariants import FINITE, StratumPair
from .rootsys import cartan_data, is_good_ell, parse_cartan_type
from .strata import CheckResult


# ---------------------------------------------------------------------------
# case suite: the paper's explicitly checkable lists
# ---------------------------------------------------------------------------

RIGID_TYPES = ["B2", "B3", "B4", "C3", "C4", "D4", "F4", "G2", "E7"]
NONRIGID_TYPES = ["A2", "A3", "A4", "A5", "D5", "E6"]


def type_list_check() -> CheckResult:
    """s(w0) = r exactly for B_r, C_r, D_r (r even), E7, F4, G2; strictly less
    for the A/D-odd/E6 list.  (A1 also has s(w0) = 1 = r: rank-1 aliasing.)"""
    bad = []
    for name in RIGID_TYPES:
        cd = cartan_data(parse_cartan_type(name))
        if weyl.rank_s(weyl.longest_element(cd)) != cd.r:
            bad.append(name)
    for name in NONRIGID_TYPES:
        cd = cartan_data(parse_cartan_type(name))
        if weyl.rank_s(weyl.longest_element(cd)) >= cd.r:
            bad.append(name)
    a1 = cartan_data(parse_cartan_type("A1"))
    if weyl.rank_s(weyl.longest_element(a1)) != 1:
        bad.append("A1")
    return CheckResult(
        "s(w0) = r exactly on the B/C/D-even/E7/E8/F4/G2 list",
        not bad,
        f"failures: {bad}" if bad else "",
    )


def fixed_point_free_check() -> CheckResult:
    """-w0 is fixed-point-free on the simple roots iff the type is A_{2n};
    checked over every type of rank <= 6."""
    expected_fpf = {"A2", "A4", "A6"}
    all_types = ["A1", "A2", "A3", "A4", "A5", "A6", "B2", "B3", "B4", "B5", "B6",
                 "C3", "C4", "C5", "C6", "D4", "D5", "D6", "E6", "F4", "G2"]
    bad = []
    for name in all_types:
        cd = cartan_data(parse_cartan_type(name))
        fpf = not weyl.minus_w0_fixed_simples(cd)
        if fpf != (name in expected_fpf):
            bad.append((name, fpf))
    return CheckResult(
        "-w0 fixed-point-free on simples exactly in A2/A4/A6 (rank <= 6)",
        not bad,
        f"failures: {bad}" if bad else "",
    )


PAPER_SL4_STATED_LENGTHS = (7, 9)  # exceed N = 6; recomputed below


def sl4_scenarios(ell: int = 5) -> dict:
    """The two SL4 scenarios distinguishing card S from the other invariants.

    Scenario (a): w0 w1 = s1 s2 s3, w0 w2 = s1; scenario (b): w0 w1 = s1 s2 s1,
    w0 w2 = s1.  Both have the same lengths and twist rank but S = {} vs {3}.
    The source states l(w1) = 7 and l(w2) = 9, impossible in A3 where every
    length is at most N = 6 (those are the stratum dimensions l + r); the
    recomputed lengths are reported and the stated ones flagged.
    """
    cd = cartan_data(parse_cartan_type("A3"))
    w0 = weyl.longest_element(cd)
    out = {"type": "A3", "ell": ell, "N": cd.N, "scenarios": {}}
    for tag, word in (("a", (1, 2, 3)), ("b", (1, 2, 1))):
        w1 = w0 * weyl.from_word(cd, word)
        w2 = w0 * weyl.from_word(cd, (1,))
        pair = StratumPair(w1, w2, ell)
        si = invariants.stratum_invariants(pair)
        out["scenarios"][tag] = {
            "w0w1": weyl.format_word(word),
            "w0w2": "1",
            "frak_S": list(si.frak_S),
            "s_twist": si.s_twist,
            "len1": si.len1,
            "len2": si.len2,
            "blocks_exp": si.block_count_exp,
        }
    out["paper_length_claims"] = {
        "stated": list(PAPER_SL4_STATED_LENGTHS),
        "recomputed": [
            out["scenarios"]["a"]["len1"],
            out["scenarios"]["a"]["len2"],
        ],
        "consistent": all(v <= cd.N for v in PAPER_SL4_STATED_LENGTHS),
        "note": "stated lengths exceed N and cannot be Weyl group lengths in A3",
    }
    return out


def sl4_check(ell: int = 5) -> CheckResult:
    rep = sl4_scenarios(ell)
    a, b = rep["scenarios"]["a"], rep["scenarios"]["b"]
    ok = (
        a["frak_S"] == []
        and b["frak_S"] == [3]
        and a["s_twist"] == 2
        and b["s_twist"] == 2
        and a["len1"] == b["len1"]
        and a["len2"] == b["len2"]
        and a["len1"] <= rep["N"]
        and not rep["paper_length_claims"]["consistent"]
    )
    return CheckResult(
        "SL4 scenarios: S = {} vs {3} at equal (len1, len2, s); stated lengths flagged",
        ok,
        f"got {rep}" if not ok else "",
    )


def dimension_identity_check(max_rank: int = 4) -> CheckResult:
    """(2N+r) + r = 2(N+r) and the big-cell semisimple dimension equality,
    for every type of rank <= max_rank."""
    names = [
        n
        for n in ("A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "F4", "G2")
        if int(n[1]) <= max_rank
    ]
    bad = []
    for name in names:
        cd = cartan_data(parse_cartan_type(name))
        if (2 * cd.N + cd.r) + cd.r != 2 * (cd.N + cd.r):
            bad.append(name)
        w0 = weyl.longest_element(cd)
        ell = next(l for l in (5, 7, 11) if is_good_ell(cd, l).validated)
        rec = invariants.dimension_bookkeeping(StratumPair(w0, w0, ell))
        if not rec.is_semisimple or rec.semisimple_sum_exp != 2 * cd.N + cd.r:
            bad.append(name)
    return CheckResult(
        "dimension bookkeeping identities (rank <= 4)",
        not bad,
        f"failures: {bad}" if bad else "",
    )


def suite_cases(ell: int = 5) -> list[CheckResult]:
    return [
        type_list_check(),
        fixed_point_free_check(),
        sl4_check(ell),
        dimension_identity_check(),
    ]


# ---------------------------------------------------------------------------
# oracle suite
# ---------------------------------------------------------------------------


def fiber_block_agreement(type_name: str, ell: int = 3) -> CheckResult:
    """Over every (w1, w2): the central-idempotent count of the tensor of
    centre-fiber algebras equals ell^{card S}.  Fiber patterns repeat heavily,
    so the algebra-side count is cached per pattern."""
    cd = cartan_data(parse_cartan_type(type_name))
    p = skewalg.make_field_char(ell, ell**cd.r)
    elems = strata.sorted_elements(cd)
    cache: dict[tuple[str, ...], int] = {}
    checked = 0
    bad = None
    for w1 in elems:
        for w2 in elems:
            pair = StratumPair(w1, w2, ell)
            fc = invariants.fiber_class(pair)
            pattern = fc.classes
            if pattern not in cache:
                alg = None
                for cls in pattern:
                    b_zero = cls == invariants.LOCAL
                    c_zero = cls != invariants.SEMISIMPLE
                    # truncated: exactly one vanishes; local: both; semisimple: none
                    factor = skewalg.build_fiber_algebra(
                        ell, b_zero=b_zero, c_zero=c_zero, p=p
                    )
                    alg = factor if alg is None else skewalg.tensor(alg, factor)
                cache[pattern] = len(skewalg.central_idempotents(alg))
            expected = ell ** invariants.block_count_function_algebra(pair)
            if cache[pattern] != expected:
                bad = (weyl.format_element(w1), weyl.format_element(w2), cache[pattern], expected)
            checked += 1
    return CheckResult(
        f"fiber-tensor idempotent count = ell^card(S) on {type_name}, ell={ell} ({checked} pairs)",
        bad is None,
        "" if bad is None else f"counterexample {bad}",
    )


def _random_local_instance(rng: np.random.Generator, ell: int, p: int):
    """One seeded local coefficient algebra plus a diagonal character action."""
    zeta = skewalg.primitive_ell_root(p, ell)
    if rng.integers(0, 4) == 0:
        m = int(rng.integers(1, 12))
        s1 = skewalg.square_zero_local(m, p)
        weights = [tuple(int(rng.integers(0, ell)) for _ in range(m)) for _ in range(2)]

        def diag_for(wts):
            return np.diag(
                [1] + [pow(zeta, t, p) for t in wts]
            ).astype(np.int64)

        mats = [diag_for(w) for w in weights]
    else:
        a = int(rng.integers(2, 7))
        b = int(rng.integers(1, max(2, 12 // a) + 1))
        twist = int(rng.integers(0, ell))
        s1 = skewalg.quantum_plane_local(a, b, twist, ell, p)
        mats = []
        for _ in range(2):
            u, v = int(rng.integers(0, ell)), int(rng.integers(0, ell))
            diag = [
                pow(zeta, (u * i + v * j) % ell, p)
                for i in range(a)
                for j in range(b)
            ]
            mats.append(np.diag(diag).astype(np.int64))
    k = int(rng.integers(1, 3))
    return s1, skewalg.AbelianAction(ell=ell, mats=tuple(mats[:k]))


def skew_oracle_trials(trials: int = 50, seed: int = 12061992, ell: int = 3) -> CheckResult:
    """Randomized agreement between the two block routes of a skew group ring:
    direct central-idempotent counting on S1 * G versus |D| from the character
    decomposition of J/J^2, plus quiver components versus |X(G):Y|."""
    rng = np.random.default_rng(seed)
    p = skewalg.make_field_char(ell, 12 * ell**2)
    bad = None
    for t in range(trials):
        s1, act = _random_local_instance(rng, ell, p)
        rep = skewalg.blquiv_report(s1, act)
        big = skewalg.skew_product(s1, act)
        direct = len(skewalg.central_idempotents(big))
        comps = quiver.connected_components(rep.quiver)
        if direct != rep.block_count or comps != rep.x_order // rep.y_order:
            bad = (t, s1.dim, act.k, direct, rep.block_count, comps)
            break
    return CheckResult(
        f"skew-group block oracle agreement over {trials} seeded instances (ell={ell})",
        bad is None,
        "" if bad is None else f"counterexample {bad}",
    )


def borel_sl2_check(ell: int = 3) -> CheckResult:
    """The rank-one Borel instance: ell one-dimensional simples, one block,
    and the basic-algebra quiver is an ell-cycle."""
    alg = skewalg.build_borel_sl2(ell)
    simples = skewalg.simple_module_dims(alg)
    blocks = len(skewalg.central_idempotents(alg))
    p = alg.p
    s1 = skewalg.truncated_polynomial_algebra(ell, p)
    rep = skewalg.blquiv_report(s1, skewalg.borel_sl2_action(ell, p))
    q = rep.quiver
    cycle = (
        q.vertex_count == ell
        and q.edge_count == ell
        and quiver.connected_components(q) == 1
        and all(m == 1 for _, _, _, m in q.edges)
    )
    ok = simples == [1] * ell and blocks == 1 and rep.block_count == 1 and cycle
    return CheckResult(
        f"rank-one Borel at ell={ell}: {ell} one-dim simples, 1 block, {ell}-cycle quiver",
        ok,
        "" if ok else f"simples={simples} blocks={blocks} rep={rep.block_count} cycle={cycle}",
    )


def suite_oracle(type_name: str = "A2", ell: int = 3, trials: int = 50, seed: int = 12061992) -> list[CheckResult]:
    return [
        fiber_block_agreement(type_name, ell),
        skew_oracle_trials(trials=trials, seed=seed, ell=ell),
        borel_sl2_check(ell),
    ]


# ---------------------------------------------------------------------------
# lattice suite
# ---------------------------------------------------------------------------


def lattice_property_sweep(type_name: str, ell: int) -> list[CheckResult]:
    """Exhaustive lattice checks over one type at one ell:

      * A_w spans agree with letter spans for every reduced word of every w;
      * l(w) = s(w) iff some reduced word of w has pairwise distinct letters;
      * B^w <= P^w and rank B^w = number of absent letters;
      * |Q^w / ell Q^w| = ell^{r - s(w)};
      * |Q_ell^w / N(w1, w2)| = ell^{card S} for every pair with the
        coprimality hypothesis.
    """
    cd = cartan_data(parse_cartan_type(type_name))
    elems = strata.sorted_elements(cd)
    results = []

    bad = None
    for w in elems:
        words = weyl.all_reduced_words(w)
        supports = {frozenset(word) for word in words}
        if len(supports) != 1:
            bad = (weyl.format_element(w), "letter set differs between reduced words")
            break
        for word in words:
            try:
                lattice.a_w_lattice(cd, word)  # asserts the span identity
            except AssertionError as exc:
                bad = (word, str(exc))
                break
        distinct = any(len(set(word)) == len(word) for word in words)
        if (weyl.length(w) == weyl.rank_s(w)) != distinct:
            bad = (weyl.format_element(w), "rank/length vs distinct letters")
        blat = lattice.b_w_lattice(cd, weyl.reduced_word(w))
        if not lattice.fixed_lattice(w, "P").contains_lattice(blat):
            bad = (weyl.format_element(w), "B^w not inside P^w")
        if blat.rank != cd.r - len(weyl.word_support(w)):
            bad = (weyl.format_element(w), "rank B^w != absent letters")
        if lattice.fixed_ell_subgroup(cd, ell, w).order_exponent != cd.r - weyl.rank_s(w):
            bad = (weyl.format_element(w), "|Q_ell^w| != ell^(r-s)")
        if bad:
            break
    results.append(
        CheckResult(
            f"{type_name}: A_w/B^w/ranklength/Q_ell^w sweep (ell={ell})",
            bad is None,
            "" if bad is None else f"counterexample {bad}",
        )
    )

    bad = None
    pairs = 0
    for w1 in elems:
        for w2 in elems:
            twist = w2.inverse() * w1
            if gcd(ell, weyl.order(twist)) != 1:
                continue
            n = lattice.normalizer_lattice(cd, ell, w1, w2)
            qlw = lattice.fixed_ell_subgroup(cd, ell, twist)
            factors = lattice.quotient_invariants(n, qlw)
            card = len(lattice.frak_s(w1, w2))
            if len(factors) != card or any(f != ell for f in factors):
                bad = (weyl.format_element(w1), weyl.format_element(w2), factors, card)
            pairs += 1
    results.append(
        CheckResult(
            f"{type_name}: |Q_ell^w / N(w1,w2)| = ell^card(S) on {pairs} pairs (ell={ell})",
            bad is None,
            "" if bad is None else f"counterexample {bad}",
        )
    )
    return results


def suite_lattice(type_names=("A2", "A3", "B2", "B3"), ells=(5, 7)) -> list[CheckResult]:
    out = []
    for name in type_names:
        for ell in ells:
            out.extend(lattice_property_sweep(name, ell))
    return out


# ---------------------------------------------------------------------------
# table suite
# ---------------------------------------------------------------------------


def table_census_check(type_name: str = "A2", ell: int = 5) -> list[CheckResult]:
    """Census of the full stratum table: exactly one semisimple stratum, the
    finite/wild split along len1+len2 >= 2N-1, and the consistency sweep."""
    cd = cartan_data(parse_cartan_type(type_name))
    results = []
    rows = list(strata.iter_table_rows(cd, ell))
    nw = sum(1 for _ in weyl.enumerate_group(cd))
    results.append(
        CheckResult(
            f"{type_name} table has |W|^2 rows", len(rows) == nw * nw, f"{len(rows)} vs {nw * nw}"
        )
    )
    semis = [r for r in rows if 2 * r.simple_dim_exp + r.simple_count_exp == r.algebra_dim_exp]
    results.append(
        CheckResult(f"{type_name}, ell={ell}: exactly one semisimple stratum", len(semis) == 1, f"got {len(semis)}")
    )
    bad = None
    finite_rows = 0
    for r in rows:
        expected = FINITE if r.len1 + r.len2 >= 2 * cd.N - 1 else invariants.WILD
        if r.rep_type != expected:
            bad = (r.w1_word, r.w2_word)
        if r.rep_type == FINITE:
            finite_rows += 1
    results.append(
        CheckResult(
            f"{type_name}: rep type finite exactly when len1+len2 >= {2 * cd.N - 1} ({finite_rows} finite rows)",
            bad is None,
            "" if bad is None else f"counterexample {bad}",
        )
    )
    results.extend(strata.consistency_sweep(cd, ell))
    return results


SUITES = {
    "cases": lambda **kw: suite_cases(ell=kw.get("ell") or 5),
    "oracle": lambda **kw: suite_oracle(
        type_name=kw.get("type_name") or "A2",
        ell=kw.get("ell") or 3,
        trials=kw.get("trials") or 50,
        seed=kw.get("seed") or 12061992,
    ),
    "lattice": lambda **kw: suite_lattice(
        type_names=(kw.get("type_name"),) if kw.get("type_name") else ("A2", "A3", "B2", "B3"),
        ells=(kw.get("ell"),) if kw.get("ell") else (5, 7),
    ),
    "table": lambda **kw: table_census_check(
        type_name=kw.get("type_name") or "A2", ell=kw.get("ell") or 5
    ),
}


def run_suite(name: str, **kw) -> list[CheckResult]:
    if name == "all":
        out = []
        for key in ("cases", "lattice", "table", "oracle"):
            out.extend(SUITES[key](**kw))
        return out
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)} or 'all'")
    return SUITES[name](**kw)
