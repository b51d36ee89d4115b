"""Acceptance suite: eleven criteria, each timed against its limit.

Every criterion prints one ``PASS``/``FAIL`` line.  Run under pytest or directly
with ``python3 tests/test_acceptance.py``; the lines appear in the
terminal summary.
"""

import os
import subprocess
import sys
import time

import pytest

from oracles import all_cocycles, as_pairs, brute_isomorphic, cocycle_instances, count_classes, \
    rank2_candidates, small_unimodular
from versalforms.algebra import GF, QQ, IntMatrix, Poly, find_irreducible
from versalforms.catalog import build_catalog, dumps, fingerprint_set
from versalforms.descent import (SL, Torus, TwistSpec, alpha_from_generator,
                                 cohomologous_to_trivial, embedded_base_points,
                                 finite_point_group, inner_cocycles, inner_to_aut,
                                 is_quasi_split_twist, pinned_outer, trivial_alpha,
                                 twist_with, twisted_fixed_points)
from versalforms.etale import (construct_point_finite_field, construct_point_rational,
                               cyclotomic_point, emit_presentation, fiber_algebra,
                               invariant_subalgebra, point_values, tensor_split,
                               verify_family_point)
from versalforms.groups import cyclic_group, group_by_id, hom_classes, z1_cocycles
from versalforms.rootdata import (based_automorphism_group, enumerate_root_data,
                                  named_root_datum)

FF_CASES = [(2, 1, 2), (3, 1, 2), (2, 1, 3), (2, 2, 2), (5, 1, 2)]

# criterion -> result line, printed by the terminal summary hook in conftest
RESULTS = {}


def _report(n, title, limit, fn):
    t0 = time.perf_counter()
    err = None
    try:
        fn()
    except AssertionError as exc:
        err = exc
    dt = time.perf_counter() - t0
    ok = err is None and (limit is None or dt < limit)
    bound = f"< {limit:g} s" if limit is not None else "no limit"
    why = "" if ok else f"  [{err or 'over time limit'}]"
    RESULTS[n] = (f"{'PASS' if ok else 'FAIL'} criterion {n:2d}: {title} "
                  f"({dt:.2f} s, {bound}){why}")
    if err is not None:
        raise err
    assert ok, f"criterion {n} took {dt:.2f} s, limit {limit} s"


def _rational_points():
    x = Poly.x(QQ)
    yield construct_point_rational(x * x - 2, [x, -x], cyclic_group(2))
    yield construct_point_rational(x * x + x + 1, [x, -x - 1], cyclic_group(2))
    yield cyclotomic_point(5)


# 1


def check_points():
    for p, k, m in FF_CASES:
        t0 = time.perf_counter()
        pt = construct_point_finite_field(p, k, m)
        rep = verify_family_point(pt)
        assert rep.ok, f"({p},{k},{m})\n{rep.summary()}"
        assert time.perf_counter() - t0 < 1.0, f"({p},{k},{m}) too slow"
    for pt in _rational_points():
        t0 = time.perf_counter()
        rep = verify_family_point(pt)
        assert rep.ok, rep.summary()
        assert time.perf_counter() - t0 < 1.0


def test_criterion_01_family_points():
    _report(1, "family points verify, each < 1 s", None, check_points)


# 2


def check_presentation():
    fam2, _ = emit_presentation(cyclic_group(2))
    assert (fam2.nvars, len(fam2.relations)) == (9, 15)
    for m in (2, 3):
        fam, _ = emit_presentation(cyclic_group(m))
        pts = [construct_point_finite_field(p, k, mm) for p, k, mm in FF_CASES if mm == m]
        if m == 2:
            pts += list(_rational_points())[:2]
        for pt in pts:
            vals, F = point_values(pt), pt.base
            assert fam.vanishes_at(vals, F)
            failed = 0
            for name in ("a0", f"a{m - 1}", "h1_0", "h1_1", "u"):
                bad = dict(vals)
                bad[name] = F.add(bad[name], F.one)
                failed += not fam.vanishes_at(bad, F)
            assert failed >= 3


def test_criterion_02_presentation():
    _report(2, "presentation soundness", 1.0, check_presentation)


# 3


def check_invariants():
    for p, k, m in FF_CASES:
        alg = fiber_algebra(construct_point_finite_field(p, k, m))
        assert len(invariant_subalgebra(alg)) == 1
        ext = GF(p, find_irreducible(p, k * m).coeffs)
        split = tensor_split(alg, ext)
        assert split.components == m and split.is_transitive()
    for pt in _rational_points():
        assert len(invariant_subalgebra(fiber_algebra(pt))) == 1


def test_criterion_03_invariants():
    _report(3, "invariants and splitting", 1.0, check_invariants)


# 4


def check_su3():
    G = finite_point_group(SL(3), 2, 1, 2)
    assert G.order == 60480
    t = TwistSpec(G, alpha_from_generator(G, pinned_outer(G, "flip")))
    H = twisted_fixed_points(t)
    q = 2
    assert H.order == 216 == q ** 3 * (q ** 2 - 1) * (q ** 3 + 1)
    assert is_quasi_split_twist(t, H).quasi_split


def test_criterion_04_su3():
    _report(4, "SU3 over F4/F2 has order 216", 60.0, check_su3)


# 5


def check_norm_torus():
    T = finite_point_group(Torus(1), 3, 1, 2)
    t = TwistSpec(T, alpha_from_generator(T, pinned_outer(T, IntMatrix([[-1]]))))
    assert twisted_fixed_points(t).order == 4 == 3 + 1


def test_criterion_05_norm_torus():
    _report(5, "norm-one torus over F9/F3 has order 4", 1.0, check_norm_torus)


# 6


def check_lang():
    G = finite_point_group(SL(2), 2, 1, 2)
    t = TwistSpec(G, trivial_alpha(G))
    inner, _, cocs = inner_cocycles(t)
    assert len(inner.elements) == 60
    assert cocs
    for c in cocs:
        assert cohomologous_to_trivial(c) is not None
        assert twisted_fixed_points(twist_with(t, inner_to_aut(t, c.values))).order == 6


def test_criterion_06_lang():
    _report(6, "Lang triviality for PGL2(F4)", 5.0, check_lang)


# 7


def check_trivial_twist():
    for spec in (SL(2), SL(3)):
        G = finite_point_group(spec, 2, 1, 2)
        H = twisted_fixed_points(TwistSpec(G, trivial_alpha(G)))
        assert set(H.elements) == set(embedded_base_points(G))


def test_criterion_07_trivial_twist():
    _report(7, "trivial twist gives G(F)", 60.0, check_trivial_twist)


# 8


def check_root_data():
    assert len(enumerate_root_data(1)) == 3
    data = enumerate_root_data(2)
    reps = count_classes(rank2_candidates(), 2)
    assert len(data) == len(reps) == 13
    mats = small_unimodular(2)
    pairs = [as_pairs(b) for b in data]
    for r in reps:
        assert sum(brute_isomorphic(r, d, mats) for d in pairs) == 1
    for name, order in (("SL2", 1), ("SL3", 2), ("SL2xSL2", 2)):
        assert based_automorphism_group(named_root_datum(name)).order == order


def test_criterion_08_root_data():
    _report(8, "root data counts and automorphisms", 10.0, check_root_data)


# 9


def check_cohomology():
    assert len(hom_classes(cyclic_group(2), group_by_id("S3"))) == 2
    for _, gamma, A, act in cocycle_instances():
        assert A.order ** gamma.order <= 10 ** 6
        got = sorted(c.values for c in z1_cocycles(gamma, A, act))
        assert got == sorted(all_cocycles(gamma, A, act))


def test_criterion_09_cohomology():
    _report(9, "hom classes and 1-cocycles", 5.0, check_cohomology)


# 10

RANK1_F3 = {(2, 2, 2, True), (4, 4, 4, True), (24, 2, 3, True), (24, 1, 2, True)}


def check_catalog():
    triv = fingerprint_set(build_catalog(1, 3))
    assert triv == RANK1_F3, sorted(triv)
    assert fingerprint_set(build_catalog(1, 3, cocycles="exhaustive")) == triv


def test_criterion_10_catalog():
    _report(10, "rank-1 catalog over F3", 120.0, check_catalog)


# 11


def check_determinism():
    assert dumps(build_catalog(1, 3)) == dumps(build_catalog(1, 3))
    # and across processes
    code = ("import sys; from versalforms.catalog import build_catalog, dumps; "
            "sys.stdout.write(dumps(build_catalog(1, 3)))")
    env = dict(os.environ, PYTHONHASHSEED="random")
    runs = [subprocess.run([sys.executable, "-c", code], capture_output=True, env=env,
                           check=True).stdout for _ in range(2)]
    assert runs[0] == runs[1] == dumps(build_catalog(1, 3)).encode()


def test_criterion_11_determinism():
    _report(11, "catalog output is byte-identical", None, check_determinism)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
