import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import all_cocycles, cocycle_instances, group_tables, inversion_action
from versalforms.groups import (FiniteGroup, GroupAction, are_cohomologous, cyclic_group,
                                direct_product, find_isomorphism, group_by_id, group_catalog,
                                groups_of_order, h1_classes, hom_classes, symmetric_group,
                                trivial_cocycle, z1_cocycles)
from versalforms.groups.finite_group import GroupError

KNOWN_COUNTS = [1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14]


def test_catalog_counts():
    for n, expected in enumerate(KNOWN_COUNTS, start=1):
        assert len(groups_of_order(n)) == expected, n
    assert len(group_catalog(16)) == sum(KNOWN_COUNTS)


@pytest.mark.parametrize("n", [4, 6, 8, 12, 16])
def test_catalog_pairwise_non_isomorphic(n):
    gs = groups_of_order(n)
    for a, b in itertools.combinations(gs, 2):
        assert find_isomorphism(a, b) is None


@pytest.mark.parametrize("n", [4, 6])
def test_catalog_against_latin_square_oracle(n):
    tables = group_tables(n)
    classes = []
    for T in tables:
        g = FiniteGroup(T)
        if not any(find_isomorphism(g, c) is not None for c in classes):
            classes.append(g)
    assert len(classes) == len(groups_of_order(n))
    for c in classes:
        assert any(find_isomorphism(c, g) is not None for g in groups_of_order(n))


def test_ids_and_lookup():
    assert group_by_id("6.1").order == 6
    assert group_by_id("S3").order == 6
    for g in group_catalog(8):
        assert group_by_id(g.id) is g or find_isomorphism(group_by_id(g.id), g) is not None


def test_non_associative_table_rejected():
    T = [[0, 1, 2], [1, 0, 2], [2, 2, 0]]
    with pytest.raises(GroupError):
        FiniteGroup(T)


def test_hom_classes_c2_to_s3():
    assert len(hom_classes(cyclic_group(2), symmetric_group(3))) == 2


@pytest.mark.parametrize("src,tgt,expected", [("C2", "C2", 2), ("C3", "S3", 2), ("C2", "C2xC2", 4),
                                              ("C4", "C4", 4), ("S3", "C2", 2)])
def test_hom_class_counts(src, tgt, expected):
    assert len(hom_classes(group_by_id(src), group_by_id(tgt))) == expected


@pytest.mark.parametrize("name,gamma,A,act", list(cocycle_instances()), ids=lambda v: v if isinstance(v, str) else "")
def test_z1_matches_exhaustive_oracle(name, gamma, A, act):
    assert A.order ** gamma.order <= 10 ** 6
    got = sorted(c.values for c in z1_cocycles(gamma, A, act))
    assert got == sorted(all_cocycles(gamma, A, act))


def test_h1_small_cases():
    C2, C3 = cyclic_group(2), cyclic_group(3)
    cocs = z1_cocycles(C2, C3, inversion_action(C2, C3))
    assert len(cocs) == 3 and len(h1_classes(cocs)) == 1
    cocs = z1_cocycles(C2, C2, GroupAction(C2, C2))
    assert len(cocs) == 2 and len(h1_classes(cocs)) == 2


def test_trivial_action_cocycles_are_homomorphisms():
    C2, S3 = cyclic_group(2), symmetric_group(3)
    cocs = z1_cocycles(C2, S3, GroupAction(C2, S3))
    assert len(h1_classes(cocs)) == len(hom_classes(C2, S3))


@given(st.data())
def test_coboundary_twist_stays_in_class(data):
    name, gamma, A, act = data.draw(st.sampled_from(list(cocycle_instances())))
    cocs = z1_cocycles(gamma, A, act)
    c = data.draw(st.sampled_from(cocs))
    phi = data.draw(st.sampled_from(list(A.elements)))
    d = c.twist_by(phi)
    assert d.is_cocycle()
    assert are_cohomologous(c, d) is not None


@given(st.sampled_from(group_catalog(12)), st.sampled_from(group_catalog(6)))
def test_product_orders_and_identity(G, H):
    P = direct_product(G, H)
    assert P.order == G.order * H.order
    assert all(P.mul(P.identity, x) == x for x in P.elements)


def test_trivial_cocycle_is_cocycle():
    C2, S3 = cyclic_group(2), symmetric_group(3)
    assert trivial_cocycle(C2, S3, GroupAction(C2, S3)).is_cocycle()
