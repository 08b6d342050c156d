"""Exit criteria.  Each test records one PASS/FAIL line, printed in the
terminal summary (see conftest.py)."""

import io
import json
import time

import pytest

from slopecount.cli import main
from slopecount.graphs import all_graphs, is_cograph
from slopecount.pointcount import count_zeros
from slopecount.spseries import count_labeled_cographs, sp_sequence
from slopecount.verify import check_cog5cyc, check_generalize, check_tree_not_zero, verify_theorem1

PAPER_SEQUENCE = (1, 2, 8, 52, 472, 5504, 78416)

RESULTS = []


@pytest.fixture
def record(request):
    state = {"detail": ""}

    def note(detail):
        state["detail"] = detail

    yield note
    rep = getattr(request.node, "rep_call", None)
    status = "PASS" if rep is not None and rep.passed else "FAIL"
    RESULTS.append(f"{status} {request.node.name}: {state['detail']}")


def timed(func, *args, **kwargs):
    t0 = time.perf_counter()
    out = func(*args, **kwargs)
    return out, time.perf_counter() - t0


def test_binary_sequence_j(record):
    got, elapsed = timed(lambda: tuple(count_zeros(n, 2, "J", workers=1).zero_count for n in range(1, 7)))
    record(f"{got} in {elapsed:.2f}s (limit 10s)")
    assert got == PAPER_SEQUENCE[:6]
    assert elapsed <= 10


def test_binary_n7_graph_path(record):
    report, elapsed = timed(count_zeros, 7, 2, "J", workers=4, method="graph")
    record(f"{report.zero_count} in {elapsed:.2f}s with 4 workers (limit 60s)")
    assert report.method == "graph"
    assert report.zero_count == 78416
    assert elapsed <= 60


def test_binary_ideal_agreement(record):
    def both():
        return [
            (count_zeros(n, 2, "I", method="poly").zero_count, count_zeros(n, 2, "J", method="poly").zero_count)
            for n in range(1, 7)
        ]

    pairs, elapsed = timed(both)
    record(f"(I, J) = {pairs} in {elapsed:.2f}s (limit 120s)")
    assert all(i == j for i, j in pairs)
    assert [i for i, _ in pairs] == list(PAPER_SEQUENCE[:6])
    assert elapsed <= 120


def test_ternary_targets(record):
    def counts():
        return count_zeros(4, 3, "I").zero_count, count_zeros(5, 3, "I").zero_count

    got, elapsed = timed(counts)
    record(f"I_4, I_5 over F_3 = {got} in {elapsed:.2f}s (limit 300s)")
    assert got == (423, 9243)
    assert elapsed <= 300


def test_quinary_targets(record):
    def counts():
        out = {}
        for ideal in ("I", "J"):
            out[ideal] = tuple(count_zeros(n, 5, ideal, workers=4).zero_count for n in (4, 5))
        return out

    got, elapsed = timed(counts)
    record(f"I: {got['I']} (paper 4909, 262645), J: {got['J']} (recorded) in {elapsed:.2f}s (limit 1800s)")
    assert elapsed <= 1800
    assert got["I"] == (4909, 262645)


def test_ternary_type_table(record):
    out = io.StringIO()
    code = main(["table", "--q", "3", "--n", "4", "--format", "json"], out=out)
    data = json.loads(out.getvalue())
    rows = {r["type"]: (r["zeros"], r["nonzeros"]) for r in data["per_type"]}
    expected = {
        "(6)": (3, 0),
        "(5,1)": (36, 0),
        "(4,2)": (90, 0),
        "(4,1,1)": (90, 0),
        "(3,3)": (24, 36),
        "(3,2,1)": (144, 216),
        "(2,2,2)": (36, 54),
    }
    record(f"{len(rows)} rows, totals {data['totals']['zeros']}/{data['totals']['nonzeros']}")
    assert code == 0
    assert rows == expected
    assert (data["totals"]["zeros"], data["totals"]["nonzeros"]) == (423, 306)


def test_theorem1_four_way(record):
    def run():
        return [verify_theorem1(n) for n in range(1, 6)]

    results, elapsed = timed(run)
    summary = [(r.details["zeros_I"], r.details["zeros_J"], r.details["cographs"], r.details["c5free_classes"]) for r in results]
    record(f"{summary} in {elapsed:.2f}s (limit 300s)")
    for r, expected in zip(results, PAPER_SEQUENCE):
        assert r.passed, r.line()
        assert set(r.details.values()) == {expected}
    assert elapsed <= 300


@pytest.fixture(scope="module")
def tree_checks():
    return {r.name: r for r in check_tree_not_zero((3, 4, 5))}


def test_tree_not_zero(record, tree_checks):
    r = tree_checks["treenotzero"]
    record(r.line())
    # 4 3-wheels in K4, 15 4-wheels in K5, 72 5-wheels in K6
    assert r.checked == 4 * 2**6 + 15 * 2**8 + 72 * 2**10
    assert r.passed


def test_expansion_oracle(record, tree_checks):
    r = tree_checks["expansion-oracle"]
    record(r.line())
    assert r.checked == tree_checks["treenotzero"].checked
    assert r.passed


def test_cog5cyc(record):
    results = check_cog5cyc(4)
    record("; ".join(r.line() for r in results))
    injective = results[0]
    assert injective.checked == 1024 * 16
    assert all(r.passed for r in results)


@pytest.mark.parametrize("q", [3, 5])
def test_generalize(record, q):
    results = check_generalize(q)
    record("; ".join(r.line() for r in results))
    assert all(r.checked > 0 for r in results)
    assert all(r.passed for r in results)


def test_cotree_oracle(record):
    brute = [sum(is_cograph(g) for g in all_graphs(n)) for n in range(1, 7)]
    dp = [count_labeled_cographs(n) for n in range(1, 8)]
    record(f"dp={dp} brute={brute} sequence={sp_sequence(7)}")
    assert dp[:6] == brute
    assert dp[6] == 78416
    assert sp_sequence(7) == PAPER_SEQUENCE
