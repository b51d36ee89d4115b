import json

import pytest

from versalforms.catalog import (build_catalog, build_index_set, dumps, fingerprint,
                                 fingerprint_set, load_catalog, write_catalog)
from versalforms.catalog.fingerprint import center, derived_subgroup
from versalforms.cli import main
from versalforms.descent import (SL, TwistSpec, alpha_from_generator, finite_point_group,
                                 pinned_outer, trivial_alpha, twisted_fixed_points)
from versalforms.groups import symmetric_group
from versalforms.rootdata import named_root_datum


@pytest.mark.parametrize("name,bound,count", [
    ("SL2", 2, 2), ("SL3", 2, 3), ("Gm", 2, 3), ("SL2xSL2", 2, 3), ("Gm^2", 2, 5),
    ("SL3", 1, 1), ("trivial", 2, 2)])
def test_index_set_sizes(name, bound, count):
    assert len(build_index_set(named_root_datum(name), bound)) == count


def test_index_entries_are_homomorphisms():
    for e in build_index_set(named_root_datum("SL3"), 3):
        g = e.gamma
        for a in g.elements:
            for b in g.elements:
                assert e.alpha[g.mul(a, b)].matrix == e.alpha[a].matrix @ e.alpha[b].matrix


def test_fingerprint_of_sl2_f3():
    G = finite_point_group(SL(2), 3, 1, 2)
    H = twisted_fixed_points(TwistSpec(G, trivial_alpha(G)))
    assert fingerprint(H) == (24, 2, 3, True)


def test_fingerprint_symmetric_group():
    S4 = symmetric_group(4)
    assert fingerprint(S4, False) == (24, 1, 2, False)
    assert len(center(S4)) == 1
    assert len(derived_subgroup(S4)) == 12


def test_su3_fingerprint():
    G = finite_point_group(SL(3), 2, 1, 2)
    H = twisted_fixed_points(TwistSpec(G, alpha_from_generator(G, pinned_outer(G, "flip"))))
    assert fingerprint(H) == (216, 3, 4, True)


def test_rank0_catalog():
    cat = build_catalog(0, 3)
    assert fingerprint_set(cat) == {(1, 1, 1, True)}
    assert len(cat["entries"]) == 2


@pytest.fixture(scope="module")
def rank1_f3():
    return build_catalog(1, 3)


def test_rank1_f3_fingerprints(rank1_f3):
    assert fingerprint_set(rank1_f3) == {(2, 2, 2, True), (4, 4, 4, True),
                                         (24, 2, 3, True), (24, 1, 2, True)}
    assert all(e["status"] == "ok" for e in rank1_f3["entries"])


def test_rank1_exhaustive_adds_nothing(rank1_f3):
    cat = build_catalog(1, 3, cocycles="exhaustive")
    assert fingerprint_set(cat) == fingerprint_set(rank1_f3)
    assert len(cat["entries"]) > len(rank1_f3["entries"])


def test_rank1_f2_collapses():
    # SL2(F2) and PGL2(F2) are both S3
    assert fingerprint_set(build_catalog(1, 2)) == {(1, 1, 1, True), (3, 3, 3, True),
                                                     (6, 1, 2, True)}


def test_rank1_f2_exhaustive_adds_nothing():
    assert fingerprint_set(build_catalog(1, 2, cocycles="exhaustive")) == \
        fingerprint_set(build_catalog(1, 2))


def test_include_lower_adds_trivial_group(rank1_f3):
    cat = build_catalog(1, 3, include_lower=True)
    assert fingerprint_set(cat) == fingerprint_set(rank1_f3) | {(1, 1, 1, True)}


def test_catalog_is_deterministic(rank1_f3):
    assert dumps(build_catalog(1, 3)) == dumps(rank1_f3)


def test_catalog_round_trip(tmp_path, rank1_f3):
    path = tmp_path / "cat.json"
    write_catalog(rank1_f3, path)
    assert load_catalog(path) == json.loads(dumps(rank1_f3))


def test_corrupted_catalog_rejected(tmp_path, rank1_f3):
    cat = json.loads(dumps(rank1_f3))
    e = next(e for e in cat["entries"] if e["datum"] == "SL2" and e["gamma"] != "1.1")
    e["cocycle_values"][1] = [1, 1, 0, 1]
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(cat))
    with pytest.raises(Exception):
        load_catalog(path)


# command line


def _run(argv, capsys):
    code = main(argv)
    return code, capsys.readouterr().out


def test_cli_enumerate(capsys):
    code, out = _run(["enumerate-root-data", "--rank", "2"], capsys)
    assert code == 0 and json.loads(out)["count"] == 13


def test_cli_aut(capsys):
    code, out = _run(["aut", "--datum", "SL3"], capsys)
    assert code == 0 and json.loads(out)["order"] == 2


def test_cli_aut_infinite(capsys):
    assert main(["aut", "--datum", "Gm^2"]) == 3


def test_cli_index_set(capsys):
    code, out = _run(["index-set", "--datum", "SL3"], capsys)
    assert code == 0 and json.loads(out)["count"] == 3


def test_cli_point_round_trip(tmp_path, capsys):
    path = tmp_path / "pt.json"
    assert main(["galois-point", "--p", "2", "--m", "3", "--out", str(path)]) == 0
    assert main(["verify-point", str(path)]) == 0
    pj = json.loads(path.read_text())
    pj["d"][1] = ["1", "1", "1", "1"]      # (1 + x)^3 is not separable
    path.write_text(json.dumps(pj))
    assert main(["verify-point", str(path)]) == 1


def test_cli_presentation(capsys):
    code, out = _run(["presentation", "--group", "2.1"], capsys)
    d = json.loads(out)
    assert code == 0 and (d["nvars"], d["nrelations"]) == (9, 15)


def test_cli_z1(capsys):
    code, out = _run(["z1", "--group", "2.1", "--coeffs", "3.1", "--action", "inversion"], capsys)
    assert code == 0 and json.loads(out)["cocycles"] == 3
    code, out = _run(["z1", "--spec", "sl2"], capsys)
    d = json.loads(out)
    assert code == 0 and d["classes"] == 1


def test_cli_twist(capsys):
    code, out = _run(["twist", "--spec", "sl3", "--alpha", "flip"], capsys)
    d = json.loads(out)
    assert code == 0
    assert (d["order"], d["center_order"], d["abelianization_order"]) == (216, 3, 4)
    assert d["quasi_split"] and d["witness_borel_order"] == 24


def test_cli_twist_size_cutoff():
    assert main(["twist", "--spec", "sl3", "--p", "3"]) == 2


def test_cli_catalog(tmp_path):
    path = tmp_path / "c.json"
    assert main(["catalog", "--rank", "1", "--p", "3", "--out", str(path)]) == 0
    assert fingerprint_set(load_catalog(path)) == {(2, 2, 2, True), (4, 4, 4, True),
                                                   (24, 2, 3, True), (24, 1, 2, True)}
