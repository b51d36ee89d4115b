from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from versalforms.algebra import GF, QQ, NumberField, Poly, find_irreducible
from versalforms.etale import (FamilyError, FamilyPoint, complete_point,
                               construct_point_finite_field, construct_point_rational,
                               cyclotomic_point, cyclotomic_polynomial, degree_bounds,
                               emit_presentation, expected_counts, fiber_algebra,
                               invariant_subalgebra, point_values, tensor_split,
                               verify_family_point)
from versalforms.groups import cyclic_group, group_by_id

FF_CASES = [(2, 1, 2), (3, 1, 2), (2, 1, 3), (2, 2, 2), (5, 1, 2)]


def _quadratic(d):
    x = Poly.x(QQ)
    return construct_point_rational(x * x - d, [x, -x], cyclic_group(2))


def _eisenstein():
    x = Poly.x(QQ)
    return construct_point_rational(x * x + x + 1, [x, -x - 1], cyclic_group(2))


def test_degree_bounds():
    assert degree_bounds(1) == (0, -1, -1)
    assert degree_bounds(2) == (1, 0, -1)
    assert degree_bounds(3) == (2, 3, 1)


@pytest.mark.parametrize("p,k,m", FF_CASES)
def test_finite_field_points_verify(p, k, m):
    pt = construct_point_finite_field(p, k, m)
    rep = verify_family_point(pt)
    assert rep.ok, rep.summary()
    assert pt.f.degree == m


@pytest.mark.parametrize("make", [lambda: _quadratic(2), _eisenstein, lambda: cyclotomic_point(5),
                                  lambda: cyclotomic_point(8)])
def test_rational_points_verify(make):
    rep = verify_family_point(make())
    assert rep.ok, rep.summary()


def test_cyclotomic_five_is_cyclic_of_order_four():
    pt = cyclotomic_point(5)
    assert pt.gamma.order == 4 and pt.gamma.is_abelian()
    assert pt.f == cyclotomic_polynomial(5)


def test_trivial_group_point():
    pt = construct_point_finite_field(2, 1, 1)
    assert verify_family_point(pt).ok
    assert pt.h[0].is_zero()          # x reduced mod f = x


def test_wrong_points_fail():
    pt = construct_point_finite_field(3, 1, 2)
    bad = FamilyPoint(pt.base, pt.gamma, pt.f, [pt.h[1], pt.h[0]], pt.d, pt.e)
    assert not verify_family_point(bad).ok
    x = Poly.x(QQ)
    with pytest.raises(FamilyError):
        construct_point_rational(x * x - 2, [x, x + 1], cyclic_group(2))
    with pytest.raises(FamilyError):
        complete_point(QQ, cyclic_group(2), x * x - 2, [x, x + 1])


def test_inseparable_rejected():
    F2 = GF(2)
    x = Poly.x(F2)
    f = x * x + 1                     # (x+1)^2
    pt = FamilyPoint(F2, cyclic_group(2), f, [x, x], [Poly(F2, [0]), Poly(F2, [0])],
                     [[Poly(F2, [])] * 2] * 2)
    rep = verify_family_point(pt)
    assert not rep.checks["a"]


def test_json_round_trip():
    for pt in (construct_point_finite_field(2, 2, 2), _quadratic(3)):
        back = FamilyPoint.from_json(pt.to_json())
        assert back.f == pt.f and back.h == pt.h
        assert verify_family_point(back).ok


@pytest.mark.parametrize("m,counts", [(1, (3, 2)), (2, (9, 15)), (3, (43, 67))])
def test_presentation_counts(m, counts):
    fam, alg = emit_presentation(cyclic_group(m))
    assert (fam.nvars, len(fam.relations)) == counts
    assert alg.nvars == fam.nvars + 1 and len(alg.relations) == len(fam.relations) + 1


def test_expected_counts_formula():
    assert expected_counts(2) == (9, 15)
    assert expected_counts(3) == (43, 67)


def _points_for(m):
    pts = [construct_point_finite_field(p, k, mm) for p, k, mm in FF_CASES + [(3, 1, 3)] if mm == m]
    if m == 2:
        pts += [_quadratic(2), _quadratic(5), _eisenstein()]
    return pts


@pytest.mark.parametrize("m", [2, 3])
def test_relations_vanish_on_points(m):
    fam, _ = emit_presentation(cyclic_group(m))
    for pt in _points_for(m):
        assert fam.vanishes_at(point_values(pt), pt.base)


@pytest.mark.parametrize("m", [2, 3])
def test_relations_fail_on_corrupted_points(m):
    fam, _ = emit_presentation(cyclic_group(m))
    for pt in _points_for(m):
        F = pt.base
        vals = point_values(pt)
        corrupted = 0
        for name in ("a0", f"a{m - 1}", "h1_0", "h1_1", "u"):
            bad = dict(vals)
            bad[name] = F.add(bad[name], F.one)
            if not fam.vanishes_at(bad, F):
                corrupted += 1
        assert corrupted >= 3


def test_algebra_presentation_root():
    pt = construct_point_finite_field(2, 1, 2)
    _, alg = emit_presentation(cyclic_group(2))
    vals = point_values(pt)
    F = pt.base
    roots = [z for z in F.elements() if F.is_zero(pt.f(z))]
    # f has no root in F_2, so the extra relation never vanishes at base points
    assert not roots
    for z in F.elements():
        assert not alg.vanishes_at(dict(vals, z=z), F)


@pytest.mark.parametrize("p,k,m", FF_CASES)
def test_invariants_and_splitting(p, k, m):
    pt = construct_point_finite_field(p, k, m)
    alg = fiber_algebra(pt)
    assert len(invariant_subalgebra(alg)) == 1
    assert not alg.check_action()
    ext = GF(p, find_irreducible(p, k * m).coeffs) if k * m > 1 else GF(p)
    split = tensor_split(alg, ext)
    assert split.components == m
    assert split.is_transitive()


def test_rational_splitting():
    pt = _quadratic(2)
    alg = fiber_algebra(pt)
    K = NumberField([-2, 0, 1])
    split = tensor_split(alg, K)
    assert split.components == 2 and split.is_transitive()


@given(st.sampled_from([2, 3, 5, 7]), st.integers(1, 2), st.integers(1, 3))
def test_finite_field_points_property(p, k, m):
    if p ** (k * m) > 400:
        return
    pt = construct_point_finite_field(p, k, m)
    assert verify_family_point(pt).ok
    alg = fiber_algebra(pt)
    assert len(invariant_subalgebra(alg)) == 1
    fam, _ = emit_presentation(pt.gamma)
    assert fam.vanishes_at(point_values(pt), pt.base)


@given(st.integers(-30, 30).filter(lambda d: d not in (0, 1) and
                                   not any(d == n * n for n in range(6))))
def test_quadratic_points_property(d):
    pt = _quadratic(d)
    assert verify_family_point(pt).ok


def test_noncyclic_klein_point():
    # Q(sqrt2, sqrt3) with its Klein four-group action
    x = Poly.x(QQ)
    f = (x ** 4) - 10 * x ** 2 + 1
    # roots: +-sqrt2 +-sqrt3; r = sqrt2+sqrt3, r^3 = 11 sqrt2 + 9 sqrt3
    half = Fraction(1, 2)
    s2 = Poly(QQ, [0, Fraction(-9, 2), 0, half])      # (r^3 - 9r)/2 = sqrt2
    s3 = Poly(QQ, [0, Fraction(11, 2), 0, -half])     # (11r - r^3)/2 = sqrt3
    conj = [x, -x, s2 - s3, s3 - s2]                  # r, -r, sqrt2 - sqrt3, sqrt3 - sqrt2
    gamma = group_by_id("C2xC2")
    pt = None
    import itertools
    for assignment in itertools.permutations(range(4)):
        if assignment[gamma.identity] != 0:
            continue
        try:
            pt = construct_point_rational(f, conj, gamma, assignment)
            break
        except FamilyError:
            continue
    assert pt is not None
    assert verify_family_point(pt).ok


def test_split_algebra_point():
    # Q x Q with the swap: separable, not a field, invariants of dimension one
    x = Poly.x(QQ)
    pt = construct_point_rational(x * x - 1, [x, -x], cyclic_group(2))
    assert verify_family_point(pt).ok
    assert len(invariant_subalgebra(fiber_algebra(pt))) == 1
