"""Acceptance gate.

Each test carries ``@pytest.mark.acceptance(n)``; ``conftest.py`` folds the
outcomes into one ``acceptance criterion n: PASS/FAIL`` line per criterion.
"""

import json
import random
import time
from fractions import Fraction
from pathlib import Path

import pytest

from oracles import morales_table
from qhsing.classify import (
    Answer,
    classify_l2lt,
    classify_lc,
    classify_lt,
    classify_rational,
    l2lt_bruteforce,
    l2lt_scan_bound,
    l2lt_scan_depth,
    lc_bruteforce,
    lc_scan_bound,
)
from qhsing.graded import Hypotheses, WeightedCI
from qhsing.kodaira import Kbar, growth_exponent_estimate, kodaira_bound, kodaira_dimension
from qhsing.plurigenera import plurigenera_bound, plurigenera_table
from qhsing.report import ANALYSES, dump_job, parse_job, render_report, run_job
from qhsing.series import coeff

YES = Answer.YES
FIXTURES = Path(__file__).parent / "fixtures"

SMOOTH = Hypotheses(vstar_smooth=True, isolated_singularity=True)
PAIR = Hypotheses(vstar_smooth=True, vstar_pair_lc=True, vstar_l2lt=True, isolated_singularity=True)

CORPUS_SEED = 20240917
CORPUS_SIZE = 200
# keeps the brute-force enumeration up to degree 10 * N_A at desk scale
CORPUS_MAX_N = 15


def random_corpus(seed=CORPUS_SEED, size=CORPUS_SIZE):
    """Hypersurfaces in 3 or 4 variables with weights <= 8.

    The degree is e * w_i for some variable, so x_i^e is a monomial of the
    relation and the presentation is quasihomogeneous of that degree.
    """
    rng = random.Random(seed)
    out = []
    while len(out) < size:
        weights = tuple(rng.randint(1, 8) for _ in range(rng.choice((3, 4))))
        d = rng.randint(2, 8) * rng.choice(weights)
        if d - sum(weights) <= CORPUS_MAX_N:
            out.append((weights, d))
    return out


CORPUS = random_corpus()


def test_corpus_covers_all_signs():
    signs = {(d > sum(w)) - (d < sum(w)) for w, d in CORPUS}
    assert signs == {-1, 0, 1}


# ----------------------------------------------------------- criterion 1


@pytest.mark.acceptance(1)
def test_eva_family():
    start = time.perf_counter()
    checked = 0
    for a in range(2, 6):
        for b in range(2, 6):
            for c in range(2, 6):
                for d in range(2, 6):
                    pair = WeightedCI((b * c, 0, a * c, a * b), (a * b * c,), b * c, Hypotheses(vstar_pair_lc=True))
                    expect = Fraction(1, b) + Fraction(1, c) >= 1
                    assert (classify_lc(pair, pair.dualizing_shift()).value is YES) == expect, (a, b, c, d)

                    local = WeightedCI((b * c, c * d, b * d), (b * c * d,), 0, SMOOTH)
                    shift = local.dualizing_shift()
                    s = Fraction(1, b) + Fraction(1, c) + Fraction(1, d)
                    assert (classify_lc(local, shift).value is YES) == (s >= 1)
                    assert (classify_lt(local, shift).value is YES) == (s > 1)
                    assert (classify_rational(local, shift).value is YES) == (s > 1)
                    checked += 1
    elapsed = time.perf_counter() - start
    assert checked == 256
    assert elapsed < 1.0, f"{elapsed:.3f} s"


# ----------------------------------------------------------- criterion 2


def ade_presentations():
    for n in range(1, 11):
        # x^2 + y^2 + z^(n+1)
        yield f"A{n}", (n + 1, n + 1, 2), 2 * n + 2
    for n in range(4, 11):
        # x^2 + y^2 z + z^(n-1)
        yield f"D{n}", (n - 1, n - 2, 2), 2 * n - 2
    yield "E6", (6, 4, 3), 12
    yield "E7", (9, 6, 4), 18
    yield "E8", (15, 10, 6), 30


@pytest.mark.acceptance(2)
def test_ade_rational_double_points():
    start = time.perf_counter()
    names = []
    for name, weights, d in ade_presentations():
        ring = WeightedCI(weights, (d,), 0, SMOOTH)
        shift = ring.dualizing_shift()
        assert shift.N < 0, name
        for classify in (classify_rational, classify_lt, classify_lc, classify_l2lt):
            assert classify(ring, shift).value is YES, (name, classify.__name__)
        rows = plurigenera_table(ring, shift, 20, 0)
        assert len(rows) == 20
        assert all(r.delta == 0 and r.lambda_ == 0 for r in rows), name
        names.append(name)
    elapsed = time.perf_counter() - start
    assert len(names) == 20
    assert elapsed < 1.0, f"{elapsed:.3f} s"


# ----------------------------------------------------------- criterion 3


@pytest.mark.acceptance(3)
def test_morales_oracle():
    for weights, d in CORPUS:
        ring = WeightedCI(weights, (d,), 0, SMOOTH)
        shift = ring.dualizing_shift()
        T = max(plurigenera_bound(shift, 10), 0)
        rows = plurigenera_table(ring, shift, 10, T)
        assert [(r.delta, r.lambda_) for r in rows] == morales_table(weights, d, 10), (weights, d)


# ----------------------------------------------------------- criterion 4


@pytest.mark.acceptance(4)
def test_sign_matches_bruteforce():
    M = 50
    for weights, rel in CORPUS:
        for d in range(0, 11):
            ring = WeightedCI(weights, (rel,), d, PAIR)
            shift = ring.dualizing_shift()
            depth = l2lt_scan_depth(ring, shift, M)
            T = max(lc_scan_bound(ring, shift, M), l2lt_scan_bound(ring, shift, depth), 0)

            lc_ok = not lc_bruteforce(ring, shift, M, T).failed
            assert lc_ok == (shift.N + d <= 0), (weights, rel, d)
            assert lc_ok == (classify_lc(ring, shift).value is YES)

            l2_ok = not l2lt_bruteforce(ring, shift, depth, T).failed
            l2_sign = (shift.N + d <= 0) if d > 0 else (shift.N < 0)
            assert l2_ok == l2_sign, (weights, rel, d)
            assert l2_ok == (classify_l2lt(ring, shift).value is YES)


# ----------------------------------------------------------- criterion 5


@pytest.mark.acceptance(5)
def test_kodaira_trichotomy():
    elliptic = WeightedCI((1, 1, 1), (3,), 0, SMOOTH)
    r = kodaira_dimension(elliptic, elliptic.dualizing_shift(), 25, kodaira_bound(elliptic, elliptic.dualizing_shift(), 25))
    assert r.kbar is Kbar.ZERO
    assert r.pbar == (1,) * 25

    e8 = WeightedCI((15, 10, 6), (30,), 0, SMOOTH)
    r = kodaira_dimension(e8, e8.dualizing_shift(), 25, 0)
    assert r.kbar is Kbar.MINUS_INFINITY
    assert r.pbar == (0,) * 25

    cubic = WeightedCI((1, 1, 1), (3,), 3, PAIR)
    shift = cubic.dualizing_shift()
    r = kodaira_dimension(cubic, shift, 25, kodaira_bound(cubic, shift, 25))
    assert r.kbar is Kbar.DIM_MINUS_ONE and r.kbar_value == 1
    assert r.pbar == tuple(9 * m for m in range(1, 26))
    g = growth_exponent_estimate(r.pbar)
    assert abs(g.slope - 1) <= 0.05
    assert g.estimate == 1


# ----------------------------------------------------------- criterion 6


@pytest.mark.acceptance(6)
def test_cross_theorem_coherence():
    M = 25
    for weights, rel in CORPUS:
        ring = WeightedCI(weights, (rel,), 0, SMOOTH)
        shift = ring.dualizing_shift()
        T = max(plurigenera_bound(shift, M), kodaira_bound(ring, shift, M), 0)
        k = kodaira_dimension(ring, shift, M, T)
        rows = plurigenera_table(ring, shift, M, T)
        lc = classify_lc(ring, shift).value is YES
        lt = classify_lt(ring, shift).value is YES
        assert (k.kbar is Kbar.MINUS_INFINITY) == all(r.delta == 0 for r in rows), (weights, rel)
        assert (k.kbar in (Kbar.MINUS_INFINITY, Kbar.ZERO)) == lc, (weights, rel)
        assert not (lt and not lc), (weights, rel)


# ----------------------------------------------------------- criterion 7


@pytest.mark.acceptance(7)
def test_pfaffian_pipeline():
    doc = {
        "pfaffian": {"base_weights": [1, 1, 1, 1, 1, 1], "N": 5, "degrees": [2, 2, 2, 2, 2]},
        "hypotheses": {"vstar_smooth": True, "isolated_singularity": True},
    }
    job = parse_job(json.dumps(doc))
    series = job.ring.hilbert(2)
    assert [coeff(series, k) for k in range(3)] == [1, 6, 16]
    r = run_job(job)
    assert r.n_a == -1
    assert r.verdicts["rational"].value is YES
    assert r.hilbert[:3] == [1, 6, 16]


# ----------------------------------------------------------- criterion 8


@pytest.mark.acceptance(8)
def test_determinism_and_round_trip():
    jobs = sorted((FIXTURES / "jobs").glob("*.json"))
    assert jobs
    for path in jobs:
        text = path.read_text()
        first = render_report(run_job(parse_job(text), ANALYSES), "machine")
        second = render_report(run_job(parse_job(text), ANALYSES), "machine")
        assert first == second, path.name
        assert first == (FIXTURES / "expected" / path.name).read_text(), path.name
        job = parse_job(text)
        dumped = dump_job(job)
        assert parse_job(dumped) == job
        assert dump_job(parse_job(dumped)) == dumped
        assert render_report(run_job(parse_job(dumped), ANALYSES), "machine") == first
        # the machine report itself parses back to the same document
        assert json.dumps(json.loads(first), indent=2, sort_keys=True) + "\n" == first
