"""The eleven acceptance criteria, each at its stated exact tolerance.

Every test records a one-line verdict in ``ACCEPTANCE_LINES``; the lines are
printed in the terminal summary.  Two stated expectations are contradicted
by direct computation (see notes/decisions.md); those parts are asserted as
stated and marked as strict expected failures, so the verdict line reads FAIL
while the rest of the suite stays green.
"""

import os
import random
import subprocess
import sys
from functools import lru_cache
from math import comb, prod

import pytest

from conftest import ACCEPTANCE_LINES
from corpus import generic_complete_intersections, random_homogeneous_ideals, unit_systems, weak_regular_systems
from hilbertnss import affine_ring, hilbert_brute_force, hilbert_data, is_regular_sequence
from hilbertnss.bounds import (
    certified_section,
    extremal_test_prop26,
    fixture_c_n_delta,
    fixture_hypersurface_in_subspace,
    fixture_random_points,
    fixture_rational_normal_curve,
    section_threshold,
    sweep_bound,
    upper_bound_thm21,
)
from hilbertnss.core import Ring, homogenize_into
from hilbertnss.hilbert import hilbert_values
from hilbertnss.macaulay import is_O_sequence, lemma_1_4, macaulay_step
from hilbertnss.nullstellensatz import (
    certificate_at_degree,
    certify_nss_thm44,
    example41_report,
    lemma_4_5_check,
    minimal_certificate,
    nss_bound,
    verify_certificate,
)
from hilbertnss.regseq import bezout_contraction_lemma35, straighten_affine_cor32

HERE = os.path.dirname(__file__)


def record(k: int, ok: bool, detail: str):
    ACCEPTANCE_LINES[k] = f"{'PASS' if ok else 'FAIL'} criterion {k}: {detail}"


# ---------------------------------------------------------------------------
# shared, cached inputs

@lru_cache(maxsize=None)
def corpus():
    return random_homogeneous_ideals(100, seed=0)


@lru_cache(maxsize=None)
def corpus_values():
    return [hilbert_values(I, 10) for I in corpus()]


@lru_cache(maxsize=None)
def curve_and_point_fixtures():
    out = [fixture_rational_normal_curve(n) for n in range(1, 6)]
    out += [fixture_c_n_delta(n, d) for n, d in [(3, (1, 1)), (4, (2, 1)), (5, (2, 2)), (5, (1, 1, 1))]]
    out += [fixture_random_points(2, 4, seed=1), fixture_random_points(3, 5, seed=2), fixture_random_points(3, 7, seed=3)]
    return out


@lru_cache(maxsize=None)
def hypersurface_fixtures():
    out = []
    for k in range(20):
        rng = random.Random(f"acceptance:hyp:{k}")
        n = rng.randint(2, 5)
        d = rng.randint(0, n - 1)
        e = rng.randint(1, 3)
        out.append(fixture_hypersurface_in_subspace(n, d, e, seed=k))
    return out


@lru_cache(maxsize=None)
def section_cuts():
    """(fixture, section, report) for the section bound on the curve fixtures."""
    rows = []
    curves = [fx for fx in curve_and_point_fixtures() if fx.dimension == 1]
    for k, fx in enumerate(curves):
        data = hilbert_data(fx.ideal)
        lo = section_threshold(data.projective_dimension, data.degree)
        f = certified_section(fx.ideal, 1 + k % 3, seed=k)
        rep = sweep_bound(fx.ideal, "thm2.4", (lo, lo + 5), section=f)
        rows.append((fx, f, rep))
    return rows


@lru_cache(maxsize=None)
def certify_runs():
    return [(fs, certify_nss_thm44(fs, trials=4, seed=k)) for k, fs in enumerate(unit_systems(20, seed=0))]


def all_hilbert_sequences():
    seqs = list(corpus_values())
    for fx in curve_and_point_fixtures() + hypersurface_fixtures():
        seqs.append(hilbert_values(fx.ideal, 12))
    for fx, f, _ in section_cuts():
        seqs.append(hilbert_values(fx.ideal + f, 12))
    return seqs


def lower_formula(m, d, deg):
    # C(m+d+1, d+1) - C(m-deg+d+1, d+1), with C(a, b) = 0 for a < b
    top = m - deg + d + 1
    return comb(m + d + 1, d + 1) - (comb(top, d + 1) if top >= d + 1 else 0)


# ---------------------------------------------------------------------------
# criteria


def test_criterion_1_oracle_equivalence():
    bad = []
    for k, I in enumerate(corpus()):
        fast = corpus_values()[k][:9]
        slow = [hilbert_brute_force(I, m) for m in range(9)]
        if fast != slow:
            bad.append(k)
    record(1, not bad, f"hilbert_function = brute force for m <= 8 on 100 ideals, mismatches {bad}")
    assert not bad


def test_criterion_2_global_lower_bound():
    violations, skipped = [], 0
    for k, I in enumerate(corpus()):
        data = hilbert_data(I)
        d = data.projective_dimension
        if d < 0:
            skipped += 1
            continue
        for m in range(1, 11):
            if corpus_values()[k][m] < lower_formula(m, d, data.degree):
                violations.append((k, m))
    record(2, not violations, f"{len(violations)} violations on {100 - skipped} ideals of dimension >= 0, m = 1..10")
    assert not violations


def test_criterion_3_extremal_biconditional():
    hyp_true = [extremal_test_prop26(fx.ideal) for fx in hypersurface_fixtures()]
    rnc = {n: extremal_test_prop26(fixture_rational_normal_curve(n).ideal) for n in range(2, 6)}
    cnd = {d: extremal_test_prop26(fixture_c_n_delta(n, d).ideal) for n, d in [(3, (1, 1)), (4, (2, 1)), (5, (2, 2)), (5, (1, 1, 1))]}
    ok = all(hyp_true) and not any(rnc.values()) and not any(cnd.values())
    record(
        3,
        ok,
        f"true on {sum(hyp_true)}/20 hypersurface fixtures; rational normal curves n=2..5 -> "
        f"{[rnc[n] for n in range(2, 6)]} (n=2 is a plane conic, a hypersurface); C(n,delta) -> {list(cnd.values())}",
    )
    # the attainable parts
    assert all(hyp_true) and not any(rnc[n] for n in range(3, 6)) and not any(cnd.values())


@pytest.mark.xfail(strict=True, reason="the degree-2 rational normal curve is a plane conic, which is extremal")
def test_criterion_3_conic_as_stated():
    assert not extremal_test_prop26(fixture_rational_normal_curve(2).ideal)


def test_criterion_4_union_of_curves_equality():
    bad = []
    for n, delta in [(3, (1, 1)), (4, (2, 1)), (5, (2, 2))]:
        fx = fixture_c_n_delta(n, delta)
        l, total = len(delta), sum(delta)
        for m in range(1, 11):
            h = hilbert_values(fx.ideal, m)[m]
            if not h == total * m + l == upper_bound_thm21(m, 1, total, l):
                bad.append((n, delta, m, h))
    record(4, not bad, f"h(m) = |delta|*m + l = Theorem 2.1 bound for m = 1..10, mismatches {bad}")
    assert not bad


def test_criterion_5_sandwich_and_section_bound():
    bad = []
    for fx in curve_and_point_fixtures():
        rep = sweep_bound(fx.ideal, "sandwich", (1, 12), irr=fx.irr)
        if not rep.holds:
            bad.append((fx.name, rep.violated_at))
    for fx, f, rep in section_cuts():
        if not rep.holds or f.degree() > 3:
            bad.append((fx.name, "thm2.4", rep.violated_at))
    record(
        5,
        not bad,
        f"sandwich on {len(curve_and_point_fixtures())} fixtures for m <= 12 and the section bound on "
        f"{len(section_cuts())} curves at m = 5*d*deg..+5; failures {bad}",
    )
    assert not bad


def test_criterion_6_macaulay_suite():
    seqs = all_hilbert_sequences()
    bad_seq = [k for k, s in enumerate(seqs) if not is_O_sequence(s)[0]]
    rng = random.Random("acceptance:lemma1.4")
    bad14 = []
    for _ in range(1000):
        d, D, m = rng.randint(0, 6), rng.randint(1, 10), rng.randint(-10, 10)
        left, right = lemma_1_4(d, D, m)
        if left != right:
            bad14.append((d, D, m))
    rng = random.Random("acceptance:remark1.7")
    bad17 = []
    for _ in range(1000):
        b, c, i = rng.randint(1, 10**5), rng.randint(1, 10**5), rng.randint(1, 10)
        if b >= c and macaulay_step(b, i) < macaulay_step(c, i):
            bad17.append((b, c, i))
        if c >= b and macaulay_step(c, i) < macaulay_step(b, i):
            bad17.append((c, b, i))
    ok = not (bad_seq or bad14 or bad17)
    record(
        6,
        ok,
        f"{len(seqs)} Hilbert sequences are O-sequences (bad {bad_seq}); Lemma 1.4 failures {len(bad14)}/1000; "
        f"monotonicity failures {len(bad17)}/1000",
    )
    assert ok


def test_criterion_7_straightening():
    A = affine_ring(3)
    H = Ring(("x0",) + A.names, A.field, True)
    details, ok = [], True
    for d in (2, 3):
        fs = [A("x1"), A(f"x1^{d + 1} + x2"), A(f"x1^{d + 1} + x3")]
        naive = is_regular_sequence([homogenize_into(f, H, 0) for f in fs])
        res = straighten_affine_cor32(fs, seed=0)
        good = (
            not naive
            and is_regular_sequence(res.outputs)
            and all(res.step_saturations_equal)
            and res.within_caps
        )
        ok &= good
        details.append(f"d={d}: inputs regular={naive}, outputs regular={res.output_regular}, caps={res.within_caps}")
    record(7, ok, "; ".join(details))
    assert ok


def test_criterion_8_contraction_bezout():
    weak = [bezout_contraction_lemma35(F, fs) for F, fs in weak_regular_systems(20, seed=0)]
    generic = [bezout_contraction_lemma35(F, fs) for F, fs in generic_complete_intersections(5, seed=0)]
    ok = len(weak) == 20 and all(r.holds for r in weak) and all(r.equality for r in generic)
    record(
        8,
        ok,
        f"deg <= product on {sum(r.holds for r in weak)}/20 weak regular systems; "
        f"equality on {sum(r.equality for r in generic)}/5 generic complete intersections",
    )
    assert ok


def test_criterion_9_certificate_pipeline():
    bad = []
    for k, (fs, run) in enumerate(certify_runs()):
        cert = run.certificate
        ring = fs[0].ring
        n, s, d = ring.nvars, len(fs), max(f.degree() for f in fs)
        bound = nss_bound(n, s, d, run.delta.delta_estimate)
        if (
            run.status != "certified"
            or not verify_certificate(cert)
            or cert.achieved_D > bound
            or bound != min(n, s) ** 2 * (d + 3 * n) * run.delta.delta_estimate
            or (cert.achieved_D > 0 and certificate_at_degree(ring.one, fs, cert.achieved_D - 1) is not None)
        ):
            bad.append(k)
    XY = Ring(("x", "y"), affine_ring(1).field, False)
    worked = certify_nss_thm44([XY("x^2"), XY("1 - x*y")], trials=4)
    achieved = worked.certificate.achieved_D
    record(
        9,
        not bad and achieved == 3,
        f"20 unit systems certified, verified, minimal and within bound (failures {bad}); "
        f"worked instance (x^2, 1-xy) achieved_D = {achieved}, stated 3 "
        f"(1 = (1+xy)(1-xy) + y^2*x^2 has deg y^2*x^2 = 4)",
    )
    assert not bad


@pytest.mark.xfail(strict=True, reason="y^2*x^2 has degree 4, so no certificate exists at D = 3")
def test_criterion_9_worked_instance_as_stated():
    XY = Ring(("x", "y"), affine_ring(1).field, False)
    fs = [XY("x^2"), XY("1 - x*y")]
    assert minimal_certificate(XY.one, fs, 10).achieved_D == 3


def test_criterion_10_degree_product_and_sharper_bound():
    bad = []
    for k, (fs, run) in enumerate(certify_runs()):
        if run.delta.delta_estimate > prod(f.degree() for f in fs):
            bad.append(k)
        if not lemma_4_5_check(fs, trials=4, seed=k).holds:
            bad.append((k, "sharper product"))
    rep = example41_report(affine_ring(3), seed=0, outer_degree=10)
    family_ok = rep.input_degree >= 8 and rep.inner_degree == 2 and rep.sharper
    record(
        10,
        not bad and family_ok,
        f"delta <= prod d_i on 20 systems (failures {bad}); low-inner-degree family D={rep.input_degree}, "
        f"d={rep.inner_degree}: {rep.delta_bound} < {rep.degree_power_bound}",
    )
    assert not bad and family_ok


def test_criterion_11_determinism():
    env = dict(os.environ)
    outputs = []
    for hash_seed in ("1", "2"):
        env["PYTHONHASHSEED"] = hash_seed
        proc = subprocess.run(
            [sys.executable, os.path.join(HERE, "report_suite.py"), "0"],
            capture_output=True,
            env=env,
            cwd=HERE,
            check=True,
        )
        outputs.append(proc.stdout)
    same = outputs[0] == outputs[1] and len(outputs[0]) > 1000
    record(11, same, f"two runs of the JSON report suite ({len(outputs[0])} bytes) are byte-identical: {same}")
    assert same
