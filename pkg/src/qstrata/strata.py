"""Whole-group enumeration: stratum tables over W x W, degeneration posets,
and cross-module consistency sweeps."""

from __future__ import annotations

import csv
import json
import os
from dataclasses import dataclass

from . import invariants, lattice, weyl
from .invariants import FINITE, WILD, StratumInvariants, StratumPair
from .rootsys import CartanData, require_good_ell

TABLE_CAP_DEFAULT = 1152  # F4; E types are allowed only for single-pair queries
CAP_ENV_VAR = "QSTRATA_CAP"


def table_cap() -> int:
    value = os.environ.get(CAP_ENV_VAR)
    return int(value) if value else TABLE_CAP_DEFAULT


def sorted_elements(cd: CartanData, cap: int | None = None) -> list[weyl.WeylElement]:
    """All of W sorted by (length, reduced word): the deterministic row order."""
    cap = cap if cap is not None else table_cap()
    elems = list(weyl.enumerate_group(cd, cap=cap))
    elems.sort(key=lambda w: (weyl.length(w), weyl.reduced_word(w)))
    return elems


@dataclass(frozen=True)
class StratumTable:
    cartan_type: str
    ell: int
    rows: tuple[StratumInvariants, ...]


def iter_table_rows(cd: CartanData, ell: int, cap: int | None = None):
    """Stream one StratumInvariants per (w1, w2), deterministically ordered."""
    require_good_ell(cd, ell)
    elems = sorted_elements(cd, cap)
    for w1 in elems:
        for w2 in elems:
            yield invariants.stratum_invariants(StratumPair(w1, w2, ell))


def build_table(cd: CartanData, ell: int, cap: int | None = None) -> StratumTable:
    rows = tuple(iter_table_rows(cd, ell, cap))
    return StratumTable(cartan_type=str(cd.cartan_type), ell=ell, rows=rows)


CSV_COLUMNS = [
    "type",
    "ell",
    "w1_word",
    "w2_word",
    "len1",
    "len2",
    "s_twist",
    "azumaya",
    "rep_type",
    "simples_exp",
    "simple_dim_exp",
    "blocks_exp",
    "per_block_exp",
    "frakS",
]


def row_to_csv_dict(row: StratumInvariants) -> dict:
    return {
        "type": row.cartan_type,
        "ell": row.ell,
        "w1_word": "" if row.w1_word == "e" else row.w1_word,
        "w2_word": "" if row.w2_word == "e" else row.w2_word,
        "len1": row.len1,
        "len2": row.len2,
        "s_twist": row.s_twist,
        "azumaya": int(row.is_azumaya),
        "rep_type": row.rep_type,
        "simples_exp": row.simple_count_exp,
        "simple_dim_exp": row.simple_dim_exp,
        "blocks_exp": row.block_count_exp,
        "per_block_exp": "" if row.simples_per_block_exp is None else row.simples_per_block_exp,
        "frakS": " ".join(str(i) for i in row.frak_S),
    }


def write_table_csv(cd: CartanData, ell: int, stream, cap: int | None = None) -> int:
    """Stream the table as CSV; returns the row count."""
    writer = csv.DictWriter(stream, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    count = 0
    for row in iter_table_rows(cd, ell, cap):
        writer.writerow(row_to_csv_dict(row))
        count += 1
    return count


def write_table_json(cd: CartanData, ell: int, stream, cap: int | None = None) -> int:
    """Stream the table as a JSON array of records."""
    count = 0
    stream.write("[\n")
    for row in iter_table_rows(cd, ell, cap):
        if count:
            stream.write(",\n")
        stream.write(json.dumps(row.to_json_dict(), sort_keys=True))
        count += 1
    stream.write("\n]\n")
    return count


@dataclass(frozen=True)
class DegenerationPoset:
    """Componentwise Bruhat order on W x W; covers are one Bruhat cover in a
    single component, so the rank len1+len2 drops by exactly 1 along a cover.
    The closure of a stratum is its down-set."""

    cartan_type: str
    nodes: tuple  # (w1_word, w2_word) pairs
    covers: tuple  # (lower_index, upper_index) pairs


def bruhat_covers(cd: CartanData, elems) -> list[tuple[int, int]]:
    """Pairs (i, j) with elems[i] covered by elems[j] in Bruhat order."""
    covers = []
    for i, u in enumerate(elems):
        for j, w in enumerate(elems):
            if weyl.length(w) == weyl.length(u) + 1 and weyl.bruhat_leq(u, w):
                covers.append((i, j))
    return covers


def build_poset(cd: CartanData, cap: int | None = None) -> DegenerationPoset:
    elems = sorted_elements(cd, cap)
    single = bruhat_covers(cd, elems)
    up = {}
    for i, j in single:
        up.setdefault(i, []).append(j)
    n = len(elems)
    nodes = []
    node_index = {}
    for i1 in range(n):
        for i2 in range(n):
            node_index[(i1, i2)] = len(nodes)
            nodes.append((weyl.format_element(elems[i1]), weyl.format_element(elems[i2])))
    covers = []
    for i1 in range(n):
        for i2 in range(n):
            a = node_index[(i1, i2)]
            for j in up.get(i1, []):
                covers.append((a, node_index[(j, i2)]))
            for j in up.get(i2, []):
                covers.append((a, node_index[(i1, j)]))
    return DegenerationPoset(
        cartan_type=str(cd.cartan_type), nodes=tuple(nodes), covers=tuple(covers)
    )


def poset_to_dot(poset: DegenerationPoset) -> str:
    lines = ["digraph degeneration {"]
    for i, (w1, w2) in enumerate(poset.nodes):
        lines.append(f'  n{i} [label="({w1}|{w2})"];')
    for a, b in poset.covers:
        lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def poset_to_json_dict(poset: DegenerationPoset) -> dict:
    return {
        "type": poset.cartan_type,
        "nodes": [list(nd) for nd in poset.nodes],
        "covers": [list(cv) for cv in poset.covers],
    }


# ---------------------------------------------------------------------------
# consistency sweep
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        suffix = f"  ({self.detail})" if self.detail and not self.passed else ""
        return f"{status}  {self.name}{suffix}"


def consistency_sweep(cd: CartanData, ell: int, cap: int | None = None) -> list[CheckResult]:
    """Cross-module invariants over the full W x W table (and the Borel strata):

      * rep type is monotone along the degeneration poset (degenerations of a
        wild stratum are wild);
      * blocks_exp + per_block_exp = simples_exp wherever the hypothesis holds;
      * blocks_exp = card S agrees with the rank of Q_ell^w / N(w1, w2);
      * all-semisimple fiber pattern happens exactly at (w0, w0);
      * at least one fully Azumaya stratum (the big cell);
      * Borel block counts are monotone under closure where both are exact;
      * dimension bookkeeping holds on every stratum.

    Failures are data (reported with a counterexample), not exceptions.
    """
    require_good_ell(cd, ell)
    elems = sorted_elements(cd, cap)
    results: list[CheckResult] = []

    inv_of = {}
    for w1 in elems:
        for w2 in elems:
            inv_of[(w1, w2)] = invariants.stratum_invariants(StratumPair(w1, w2, ell))

    # rep-type monotonicity along single-component Bruhat covers
    covers = bruhat_covers(cd, elems)
    bad = None
    for i, j in covers:
        u, w = elems[i], elems[j]
        for other in elems:
            for lower, upper in (((u, other), (w, other)), ((other, u), (other, w))):
                if inv_of[upper].rep_type == WILD and inv_of[lower].rep_type == FINITE:
                    bad = (lower, upper)
    results.append(
        CheckResult(
            "rep-type monotone along degeneration poset",
            bad is None,
            "" if bad is None else f"counterexample {bad}",
        )
    )

    # block/azumaya/semisimple bookkeeping
    bad = None
    azumaya_count = 0
    semisimple_rows = []
    for (w1, w2), si in inv_of.items():
        if si.is_azumaya:
            azumaya_count += 1
        if si.simples_per_block_exp is not None:
            if si.block_count_exp + si.simples_per_block_exp != si.simple_count_exp:
                bad = (si.w1_word, si.w2_word)
        fc = invariants.fiber_class(StratumPair(w1, w2, ell))
        if all(c == invariants.SEMISIMPLE for c in fc.classes):
            semisimple_rows.append((si.w1_word, si.w2_word))
    results.append(
        CheckResult(
            "blocks_exp + per_block_exp = simples_exp",
            bad is None,
            "" if bad is None else f"counterexample {bad}",
        )
    )
    w0 = weyl.longest_element(cd)
    w0w = weyl.format_element(w0)
    results.append(
        CheckResult(
            "all-semisimple fiber exactly at (w0, w0)",
            semisimple_rows == [(w0w, w0w)],
            f"got {semisimple_rows}",
        )
    )
    results.append(
        CheckResult("at least one fully Azumaya stratum", azumaya_count >= 1, "")
    )

    # block-count exponent vs lattice-quotient rank
    bad = None
    for (w1, w2), si in inv_of.items():
        if si.normalizer is None:
            continue
        twist = StratumPair(w1, w2, ell).twist
        qlw = lattice.fixed_ell_subgroup(cd, ell, twist)
        factors = lattice.quotient_invariants(si.normalizer, qlw)
        if len(factors) != si.block_count_exp or any(f != ell for f in factors):
            bad = (si.w1_word, si.w2_word, factors)
    results.append(
        CheckResult(
            "blocks_exp = rank of Q_ell^w / N(w1,w2)",
            bad is None,
            "" if bad is None else f"counterexample {bad}",
        )
    )

    # Borel block monotonicity under closure (exact values only)
    from .errors import BlockHypothesisError

    borel = {}
    for w in elems:
        try:
            borel[w] = invariants.borel_invariants(w, ell)
        except BlockHypothesisError:
            continue
    bad = None
    for i, j in covers:
        u, w = elems[i], elems[j]
        if u in borel and w in borel:
            bu, bw = borel[u], borel[w]
            if bu.block_exact_exp is not None and bw.block_exact_exp is not None:
                if bu.block_exact_exp > bw.block_exact_exp:
                    bad = (bu.w_word, bw.w_word)
            elif bu.block_lower_exp > bw.block_upper_exp:
                bad = (bu.w_word, bw.w_word)
    results.append(
        CheckResult(
            "Borel block count monotone under closure",
            bad is None,
            "" if bad is None else f"counterexample {bad}",
        )
    )

    # dimension bookkeeping on every stratum
    bad = None
    for (w1, w2), si in inv_of.items():
        rec = invariants.dimension_bookkeeping(StratumPair(w1, w2, ell))
        semisimple_by_dim = rec.is_semisimple
        big_cell = w1 == w0 and w2 == w0
        if semisimple_by_dim != big_cell:
            bad = (si.w1_word, si.w2_word)
    results.append(
        CheckResult(
            "dimension sum attains ell^(2N+r) exactly on the big cell",
            bad is None,
            "" if bad is None else f"counterexample {bad}",
        )
    )
    return results


def sweep_passed(results) -> bool:
    return all(r.passed for r in results)
