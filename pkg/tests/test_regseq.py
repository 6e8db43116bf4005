import pytest

from corpus import generic_complete_intersections, weak_regular_systems
from hilbertnss import Ideal, affine_ring, graded_ring, is_regular_sequence, saturate
from hilbertnss.bounds import fixture_rational_normal_curve
from hilbertnss.core import Ring, homogenize_into, random_linear_form
from hilbertnss.regseq import (
    NotWeakRegular,
    RetryExhausted,
    bezout_contraction_lemma35,
    extend_regular_sequence_prop31,
    find_avoiding_element,
    integer_root,
    lemma31_cap,
    prop31_cap,
    regseq_avoiding_hypersurface_thm31,
    straighten_affine_cor32,
    straighten_prop32,
    thm31_cap,
)

CUBIC = fixture_rational_normal_curve(3).ideal


def example31(d):
    A = affine_ring(3)
    return A, [A("x1"), A(f"x1^{d + 1} + x2"), A(f"x1^{d + 1} + x3")]


def test_integer_root():
    assert integer_root(6, 2) == 2 and integer_root(27, 3) == 3 and integer_root(26, 3) == 2


def test_find_avoiding_examples():
    R = graded_ring(3)
    f = find_avoiding_element(Ideal.of(R, "x0"), Ideal.of(R, "x1"), 1)
    assert f.degree() == 1 and Ideal.of(R, "x0").contains(f)
    P = Ideal.of(CUBIC.ring, "x0")
    cap = lemma31_cap(2, 1, 3)
    assert cap == 6
    g = find_avoiding_element(CUBIC, P, cap, seed=2)
    assert g.degree() <= cap and CUBIC.contains(g) and not P.contains(g)
    with pytest.raises(RetryExhausted):
        find_avoiding_element(Ideal.of(R, "x0^2"), Ideal.of(R, "x0"), 4)


def test_prop31_examples():
    R = graded_ring(4)
    I = Ideal.of(R, "x0", "x1")
    out = extend_regular_sequence_prop31(I, Ideal(R, []), seed=1)
    assert len(out) == 2
    assert [prop31_cap(1, j, 1) for j in (1, 2)] == [2, 2]
    assert all(f.degree() <= prop31_cap(1, j + 1, 1) for j, f in enumerate(out))
    assert all(I.contains(f) for f in out) and is_regular_sequence(out)
    assert extend_regular_sequence_prop31(I, Ideal.of(R, "x0", "x1^2")) == []
    with pytest.raises(ValueError):
        extend_regular_sequence_prop31(I, Ideal(R, [R.one]))


def test_thm31_examples():
    R = graded_ring(3)
    point = Ideal.of(R, "x1", "x2")
    out = regseq_avoiding_hypersurface_thm31(point, R("x0"))
    assert len(out) == 2 and all(f.degree() <= thm31_cap(0, 1, 1) == 1 for f in out)
    F = random_linear_form(CUBIC.ring, seed=7)
    out = regseq_avoiding_hypersurface_thm31(CUBIC, F, seed=3)
    assert len(out) == 2 and all(f.degree() <= 15 for f in out)
    assert is_regular_sequence([F] + out)
    with pytest.raises(ValueError):
        regseq_avoiding_hypersurface_thm31(CUBIC, CUBIC.gens[0])


def test_straighten_trivial_case():
    R = graded_ring(4)
    fs = [R("x1"), R("x2^2 + x0*x3"), R("x3^3 - x1*x2^2")]
    res = straighten_prop32(R("x0"), fs)
    assert res.outputs == fs
    assert res.multipliers == [0, 0, 0]
    assert all(u.is_zero for u in res.corrections)
    assert res.input_regular and res.output_regular


def test_straighten_strips_factors():
    R = graded_ring(3)
    F = R("x0")
    fs = [R("x0^2*x1"), R("x0*x2")]
    res = straighten_prop32(F, fs)
    assert res.outputs == [R("x1"), R("x2")]
    assert res.multipliers == [-2, -1]


@pytest.mark.parametrize("d", [2, 3])
def test_example31_straightening(d):
    A, fs = example31(d)
    H = Ring(("x0",) + A.names, A.field, True)
    assert not is_regular_sequence([homogenize_into(f, H, 0) for f in fs])
    res = straighten_affine_cor32(fs, seed=0)
    assert not res.input_regular and res.output_regular
    assert is_regular_sequence(res.outputs)
    assert all(res.step_saturations_equal) and res.within_caps
    assert res.affine_outputs[:2] == fs[:2]
    assert any(not u.is_zero for u in res.corrections) or any(c > 0 for c in res.multipliers)
    # p_i is f_i modulo the earlier ones after inverting x0
    x0 = res.outputs[0].ring.gen(0)
    for i in range(2, 3):
        S = saturate(Ideal(x0.ring, res.outputs[:i]), x0)
        diff = res.outputs[i] - res.inputs[i] * x0 ** max(res.multipliers[i], 0)
        assert S.contains(diff)


def test_affine_trivial_cases():
    A = affine_ring(2)
    fs = [A("x1"), A("x2")]
    res = straighten_affine_cor32(fs)
    assert res.affine_outputs == fs
    res = straighten_affine_cor32([A("x1^2 + x2")])
    assert res.affine_outputs == [A("x1^2 + x2")]


def test_straighten_rejects_non_weak_regular():
    R = graded_ring(3)
    with pytest.raises(NotWeakRegular):
        straighten_prop32(R("x0"), [R("x1"), R("x1*x2")])


def test_lemma35_examples():
    R = graded_ring(4)
    r = bezout_contraction_lemma35(R("x0"), [R("x1"), R("x2")])
    assert r.deg_contraction == 1 and r.product_bound == 1
    _, fs = example31(2)
    H = Ring(("x0",) + ("x1", "x2", "x3"), fs[0].ring.field, True)
    hom = [homogenize_into(f, H, 0) for f in fs]
    r = bezout_contraction_lemma35(H("x0"), hom[:2])
    naive = Ideal(H, hom[:2])
    assert r.holds and r.deg_contraction < r.product_bound or naive != saturate(naive, H("x0"))


def test_lemma35_random_and_generic():
    for F, fs in weak_regular_systems(10, seed=3):
        assert bezout_contraction_lemma35(F, fs).holds
    for F, fs in generic_complete_intersections(3, seed=3):
        assert bezout_contraction_lemma35(F, fs).equality
