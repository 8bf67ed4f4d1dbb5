"""Acceptance gate.

Seven criteria, one test (and one pass/fail line under pytest -v) each.
Every comparison is exact; the only tolerance anywhere is the wall-time
ceiling in criterion 1, pinned at 10 seconds.

The enumeration grid shared by most criteria: reducibility points
alpha in {1/2, 1, 3/2, 2, 5/2, 3}, every admissible single-line tuple
with a_k <= alpha + 6, which is 328 tuples.
"""

from __future__ import annotations

import json
import random
import time
from collections import Counter
from fractions import Fraction

from fastapi.testclient import TestClient

from spdual.classify import cuspidal_support, enumerate_sp, validate_sp
from spdual.cli import main
from spdual.core import (
    CuspidalLine,
    GroupFamily,
    SPRep,
    SPTuple,
    all_empty_tuple,
    segment_e,
    segment_sort_key,
)
from spdual.documents import document_to_rep, rep_to_document
from spdual.dual import check_trace, dual, dual_closed_line, dual_iterative_line
from spdual.jacquet import mu_star, mu_star_line
from spdual.service.main import app
from spdual.verify import brute_force_mu_count

F = Fraction
ALPHAS = (F(1, 2), F(1), F(3, 2), F(2), F(5, 2), F(3))
MAX_OFFSET = 7
EXPECTED_GRID_SIZE = 328
SAMPLE_SEED = 20260823
MULTI_LINE_SAMPLES = 200

_grid_cache: "list[SPTuple] | None" = None


def grid() -> list[SPTuple]:
    global _grid_cache
    if _grid_cache is None:
        _grid_cache = [
            t
            for alpha in ALPHAS
            for t in enumerate_sp(CuspidalLine("rho1", alpha), alpha - 1 + MAX_OFFSET)
        ]
    return _grid_cache


def sampled_reps(count: int = MULTI_LINE_SAMPLES) -> list[SPRep]:
    rng = random.Random(SAMPLE_SEED)
    reps = []
    for _ in range(count):
        lines = []
        for n in range(1, rng.randint(1, 3) + 1):
            line = CuspidalLine(f"rho{n}", rng.choice(ALPHAS))
            bound = line.alpha - 1 + rng.randint(0, 4)
            lines.append(rng.choice(enumerate_sp(line, bound)))
        family = rng.choice((GroupFamily.METAPLECTIC, GroupFamily.GSPIN_ODD))
        central = "omega" if family is GroupFamily.GSPIN_ODD and rng.random() < 0.5 else None
        reps.append(SPRep(family, tuple(lines), "sigma_cusp", central))
    return reps


def line_support(t: SPTuple) -> Counter:
    line = t.line
    support: Counter = Counter()
    for i, a in enumerate(t.entries, start=1):
        x = line.segment_start(i)
        while x <= a:
            support[x] += 1
            x += 1
    return support


def test_criterion_1_dual_algorithms_agree_exactly():
    """Closed form and iterative peeling give identical segments on the
    whole grid, within the pinned time budget."""
    start = time.perf_counter()
    tuples = grid()
    assert len(tuples) == EXPECTED_GRID_SIZE
    for t in tuples:
        closed = dual_closed_line(t)
        iterative, _ = dual_iterative_line(t)
        assert closed == iterative, f"divergence at alpha={t.line.alpha}, {t.entries}"
    elapsed = time.perf_counter() - start
    assert elapsed < 10.0, f"grid took {elapsed:.2f}s, budget is 10s"
    print(f"criterion 1: PASS ({len(tuples)} tuples, {elapsed:.2f}s, exact equality)")


def test_criterion_2_trace_recurrences_hold():
    """Every peeling trace satisfies the step recurrences, checked both
    by a direct in-test loop and by the packaged audit."""
    traces = 0
    for t in grid():
        _, trace = dual_iterative_line(t)
        steps = trace.steps
        if steps:
            assert steps[0].x == t.entries[-1]
        for m, step in enumerate(steps):
            b = step.tuple_before.entries
            assert step.x == b[-1]
            assert step.y == b[step.j - 1]
            assert step.y > 0
            assert (step.emitted.lo, step.emitted.hi) == (-step.x, -step.y)
            if step.j >= 2:
                assert b[step.j - 1] >= b[step.j - 2] + 2
            if m > 0:
                assert step.x == steps[m - 1].x - 1
                assert step.y < steps[m - 1].y
                assert step.j <= steps[m - 1].j
        assert trace.final_tuple.is_all_empty()
        report = check_trace(t, trace)
        assert report.ok and not report.warnings
        traces += 1
    print(f"criterion 2: PASS ({traces} traces, recurrences exact)")


def test_criterion_3_duals_negate_support_in_langlands_shape():
    """Dual exponents are exactly the negated cuspidal support, and the
    segments arrive with e < 0 in canonical order, on the grid and on
    seeded multi-line data."""
    checked = 0
    single = [
        SPRep(GroupFamily.METAPLECTIC, (t,), "sigma_cusp") for t in grid()
    ]
    for rep in single + sampled_reps():
        data = dual(rep)
        dual_exps: Counter = Counter()
        for s in data.segments:
            assert segment_e(s) < 0
            for e in s.exponents():
                dual_exps[(s.rho_label, e)] += 1
        expected: Counter = Counter()
        for t in rep.lines:
            for e, n in line_support(t).items():
                expected[(t.line.rho_label, -e)] += n
        assert dual_exps == expected
        keys = [segment_sort_key(s) for s in data.segments]
        assert keys == sorted(keys)
        checked += 1
    print(
        f"criterion 3: PASS ({len(single)} single-line + "
        f"{checked - len(single)} sampled data, support negation exact)"
    )


def test_criterion_4_expansion_matches_brute_force():
    """Expansion term counts equal an independent recount, every term's
    strongly positive factor is admissible, and each term conserves the
    exponent multiset with the identity term appearing exactly once."""
    terms_total = 0
    for t in grid():
        rep = SPRep(GroupFamily.METAPLECTIC, (t,), "sigma_cusp")
        terms = mu_star_line(t, "sigma_cusp", rep.family)
        assert len(terms) == brute_force_mu_count(t)
        total = Counter()
        for e, n in line_support(t).items():
            total[("rho1", e)] += n
        identity = 0
        for term in terms:
            assert term.multiplicity == 1
            assert validate_sp(term.sp_part).ok
            moved = Counter()
            for s in term.gl_part:
                for e in s.exponents():
                    moved[(s.rho_label, e)] += 1
            for u in term.sp_part.lines:
                for e, n in line_support(u).items():
                    moved[(u.line.rho_label, e)] += n
            assert moved == total
            if not term.gl_part and term.sp_part.lines[0].entries == t.entries:
                identity += 1
        assert identity == 1
        terms_total += len(terms)
    print(f"criterion 4: PASS ({terms_total} terms across the grid, counts exact)")


def test_criterion_5_boundary_data_behave():
    """alpha = 0 has exactly the empty tuple with an empty dual and an
    identity-only expansion; every all-empty tuple dualizes to nothing."""
    line0 = CuspidalLine("rho1", F(0))
    assert enumerate_sp(line0, F(5)) == [SPTuple(line0, ())]
    rep0 = SPRep(GroupFamily.METAPLECTIC, (SPTuple(line0, ()),), "sigma_cusp")
    assert rep0.is_cuspidal()
    assert dual(rep0).segments == ()
    terms = mu_star(rep0)
    assert len(terms) == 1 and terms[0].gl_part == ()
    for alpha in ALPHAS:
        t = all_empty_tuple(CuspidalLine("rho1", alpha))
        assert validate_sp(
            SPRep(GroupFamily.METAPLECTIC, (t,), "sigma_cusp")
        ).ok
        assert dual_closed_line(t) == ()
        segs, trace = dual_iterative_line(t)
        assert segs == () and trace.steps == ()
        assert cuspidal_support(
            SPRep(GroupFamily.METAPLECTIC, (t,), "sigma_cusp")
        )["rho1"] == Counter()
    print("criterion 5: PASS (alpha = 0 and all-empty boundaries exact)")


def test_criterion_6_families_share_the_arithmetic():
    """Metaplectic and odd general spin data produce identical dual
    segments and expansion counts on the whole grid."""
    for t in grid():
        mp = SPRep(GroupFamily.METAPLECTIC, (t,), "sigma_cusp")
        gs = SPRep(GroupFamily.GSPIN_ODD, (t,), "sigma_cusp")
        assert dual(mp).segments == dual(gs).segments
        assert len(mu_star(mp)) == len(mu_star(gs))
    print(f"criterion 6: PASS ({len(grid())} tuples, families identical)")


def test_criterion_7_interfaces_round_trip(tmp_path, capsys):
    """Documents survive serialization exactly, the service agrees with
    in-process results, and the command line honors the exit-code
    contract."""
    reps = sampled_reps(50)
    for rep in reps:
        doc = rep_to_document(rep)
        assert document_to_rep(doc) == rep
        assert json.loads(json.dumps(doc)) == doc

    client = TestClient(app)
    for rep in reps[:20]:
        doc = rep_to_document(rep)
        response = client.post("/dual", json=doc)
        assert response.status_code == 200
        served = response.json()["segments"]
        local = [
            {"rho": s.rho_label, "lo": str(s.lo), "hi": str(s.hi)}
            for s in dual(rep).segments
        ]
        assert served == local

    valid = tmp_path / "valid.json"
    valid.write_text(json.dumps(rep_to_document(reps[0])))
    invalid = tmp_path / "invalid.json"
    invalid.write_text(
        json.dumps(
            {
                "group": "metaplectic",
                "cuspidal_support": "sigma_cusp",
                "lines": [{"rho": "rho1", "alpha": "3/2", "tuple": ["5/2", "1/2"]}],
            }
        )
    )
    malformed = tmp_path / "malformed.json"
    malformed.write_text(
        json.dumps(
            {
                "group": "metaplectic",
                "cuspidal_support": "sigma_cusp",
                "lines": [{"rho": "rho1", "alpha": "1.5", "tuple": ["1/2"]}],
            }
        )
    )
    assert main(["validate", str(valid)]) == 0
    assert main(["dual", str(valid)]) == 0
    assert main(["validate", str(invalid)]) == 1
    assert main(["dual", str(invalid)]) == 1
    assert main(["validate", str(malformed)]) == 2
    assert main(["dual", str(malformed)]) == 2
    capsys.readouterr()
    print(
        f"criterion 7: PASS ({len(reps)} documents round-tripped, "
        "service consistent, exit codes 0/1/2)"
    )
