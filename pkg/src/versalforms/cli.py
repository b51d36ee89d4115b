"""Command line interface.

Exit codes: 0 success, 1 verification failure, 2 size cutoff, 3 unsupported construction.
"""

from __future__ import annotations

import argparse
import json
import sys

EXIT_OK, EXIT_VERIFY, EXIT_SIZE, EXIT_UNSUPPORTED = 0, 1, 2, 3


def _emit(obj, out=None):
    text = json.dumps(obj, sort_keys=True, indent=1) + "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_datum(arg):
    from .rootdata import BasedRootDatum, named_root_datum
    from .rootdata.datum import RootDatumError
    try:
        with open(arg) as fh:
            return BasedRootDatum.from_json(json.load(fh))
    except FileNotFoundError:
        try:
            return named_root_datum(arg)
        except RootDatumError:
            raise SystemExit(f"no datum file or named datum {arg!r}") from None


def _group(gid):
    from .groups import group_by_id
    return group_by_id(gid)


# subcommands


def cmd_enumerate(args):
    from .rootdata import enumerate_root_data
    data = enumerate_root_data(args.rank)
    _emit({"rank": args.rank, "count": len(data), "data": [b.to_json() for b in data]}, args.out)
    return EXIT_OK


def cmd_aut(args):
    from .rootdata import based_automorphism_group
    b = _load_datum(args.datum)
    A = based_automorphism_group(b)
    _emit({"datum": b.name, "order": A.order, "elements": [a.to_json() for a in A.elements]})
    return EXIT_OK


def cmd_index_set(args):
    from .catalog import build_index_set
    b = _load_datum(args.datum)
    entries = build_index_set(b, args.bound)
    _emit({"datum": b.name, "bound": args.bound, "count": len(entries),
           "entries": [e.to_json() for e in entries]}, args.out)
    return EXIT_OK


def cmd_galois_point(args):
    from .algebra import QQ, Poly
    from .etale import (construct_point_finite_field, construct_point_rational, cyclotomic_point,
                        verify_family_point)
    from .groups import cyclic_group
    if args.cyclotomic:
        pt = cyclotomic_point(args.cyclotomic)
    elif args.quadratic is not None:
        x = Poly.x(QQ)
        f = x * x - args.quadratic
        pt = construct_point_rational(f, [x, -x], cyclic_group(2))
    else:
        if args.p is None or args.m is None:
            raise SystemExit("give --p and --m, or --cyclotomic, or --quadratic")
        pt = construct_point_finite_field(args.p, args.k, args.m)
    rep = verify_family_point(pt)
    _emit(pt.to_json(), args.out)
    return EXIT_OK if rep.ok else EXIT_VERIFY


def cmd_verify_point(args):
    from .etale import FamilyPoint, verify_family_point
    with open(args.file) as fh:
        pt = FamilyPoint.from_json(json.load(fh))
    rep = verify_family_point(pt)
    print(rep.summary())
    return EXIT_OK if rep.ok else EXIT_VERIFY


def cmd_presentation(args):
    from .etale import emit_presentation
    fam, alg = emit_presentation(_group(args.group))
    p = alg if args.algebra else fam
    if args.text:
        print(f"# {p.nvars} variables, {len(p.relations)} relations")
        for r in p.format():
            print(r)
    else:
        _emit(dict(p.to_json(), nvars=p.nvars, nrelations=len(p.relations)), args.out)
    return EXIT_OK


def _twist_setup(args):
    from .descent import (TwistSpec, alpha_from_generator, finite_point_group, parse_spec,
                          pinned_outer, trivial_alpha)
    G = finite_point_group(parse_spec(args.spec), args.p, args.k, args.ext_degree)
    if args.alpha in ("flip",):
        alpha = alpha_from_generator(G, pinned_outer(G, "flip"))
    elif args.alpha.startswith("lattice:"):
        from .algebra import IntMatrix
        M = IntMatrix(json.loads(args.alpha.split(":", 1)[1]))
        alpha = alpha_from_generator(G, pinned_outer(G, M))
    else:
        alpha = trivial_alpha(G)
    return G, TwistSpec(G, alpha)


def _values_from_json(v):
    if isinstance(v, list):
        return tuple(_values_from_json(x) for x in v)
    return v


def cmd_z1(args):
    from .groups import GroupAction, h1_classes, z1_cocycles
    if args.spec:
        G, t = _twist_setup(args)
        from .descent import inner_cocycles
        inner, act, cocs = inner_cocycles(t)
        classes = h1_classes(cocs)
        _emit({"spec": args.spec, "coefficients": len(inner.elements), "cocycles": len(cocs),
               "classes": len(classes),
               "values": [[list(v) if isinstance(v, tuple) else v for v in c.values] for c in cocs]},
              args.out)
        return EXIT_OK
    gamma, A = _group(args.group), _group(args.coeffs)
    if args.action == "inversion":
        if not A.is_abelian():
            raise SystemExit("inversion is an action only on abelian groups")
        gens = gamma.generators()
        perm = [A.inv(a) for a in A.elements]
        act = GroupAction.from_generators(gamma, A, {g: perm for g in gens})
    else:
        act = GroupAction(gamma, A)
    cocs = z1_cocycles(gamma, A, act)
    classes = h1_classes(cocs)
    _emit({"group": gamma.id, "coefficients": A.id, "action": args.action,
           "cocycles": len(cocs), "classes": len(classes),
           "values": [list(c.values) for c in cocs]}, args.out)
    return EXIT_OK


def cmd_twist(args):
    from .catalog import fingerprint
    from .descent import is_quasi_split_twist, quasi_split_flag, twist_with, twisted_fixed_points
    G, t = _twist_setup(args)
    if args.cocycle != "trivial":
        with open(args.cocycle) as fh:
            vals = [_values_from_json(v) for v in json.load(fh)["values"]]
        t = twist_with(t, [G.inner_aut(v) for v in vals])
    H = twisted_fixed_points(t)
    rep = is_quasi_split_twist(t, H)
    qs = rep.quasi_split or quasi_split_flag(t)
    order, cent, ab, _ = fingerprint(H, qs)
    _emit({"spec": args.spec, "p": args.p, "k": args.k, "ext_degree": args.ext_degree,
           "alpha": args.alpha, "cocycle": args.cocycle, "order": order, "center_order": cent,
           "abelianization_order": ab, "quasi_split": qs, "pinning_preserved": rep.quasi_split,
           "witness_borel_order": len(rep.witness) if rep.quasi_split else None}, args.out)
    return EXIT_OK


def cmd_catalog(args):
    from .catalog import build_catalog, write_catalog
    cat = build_catalog(args.rank, args.p, args.k, args.bound, args.cocycles, args.include_lower)
    if args.out:
        write_catalog(cat, args.out)
    else:
        _emit(cat)
    print(f"{len(cat['entries'])} entries, {len(cat['fingerprints'])} distinct fingerprints, "
          f"{len(cat['skipped'])} skipped data", file=sys.stderr)
    return EXIT_OK


def build_parser():
    ap = argparse.ArgumentParser(prog="versalforms",
                                 description="Forms of reductive groups at field points.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate-root-data", help="root data of a given rank")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("aut", help="automorphisms of a based root datum")
    p.add_argument("--datum", required=True, help="JSON file or a name such as SL3")
    p.set_defaults(func=cmd_aut)

    p = sub.add_parser("index-set", help="(group, hom class) pairs for a datum")
    p.add_argument("--datum", required=True)
    p.add_argument("--bound", type=int, default=2)
    p.add_argument("--out")
    p.set_defaults(func=cmd_index_set)

    p = sub.add_parser("galois-point", help="construct a family point")
    p.add_argument("--p", type=int)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--m", type=int)
    p.add_argument("--cyclotomic", type=int)
    p.add_argument("--quadratic", type=int, help="x^2 - D over Q")
    p.add_argument("--out")
    p.set_defaults(func=cmd_galois_point)

    p = sub.add_parser("verify-point", help="verify a family point file")
    p.add_argument("file")
    p.set_defaults(func=cmd_verify_point)

    p = sub.add_parser("presentation", help="relations of the family for a group")
    p.add_argument("--group", required=True, help="catalog id such as 2.1, or a name")
    p.add_argument("--algebra", action="store_true", help="the algebra presentation")
    p.add_argument("--text", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_presentation)

    def twist_args(p, required):
        p.add_argument("--spec", required=required, help="sl3, pgl2, gm, sl2xgm, ...")
        p.add_argument("--p", type=int, default=2)
        p.add_argument("--k", type=int, default=1)
        p.add_argument("--ext-degree", type=int, default=2)
        p.add_argument("--alpha", default="none", help="none, flip or lattice:[[...]]")
        p.add_argument("--out")

    p = sub.add_parser("z1", help="1-cocycles")
    p.add_argument("--group", default="2.1")
    p.add_argument("--coeffs", default="2.1")
    p.add_argument("--action", choices=("trivial", "inversion"), default="trivial")
    twist_args(p, False)
    p.set_defaults(func=cmd_z1)

    p = sub.add_parser("twist", help="fixed points of a twisted action")
    twist_args(p, True)
    p.add_argument("--cocycle", default="trivial", help="trivial or a JSON file with values")
    p.set_defaults(func=cmd_twist)

    p = sub.add_parser("catalog", help="catalog of descended groups over F_q")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--bound", type=int, default=2)
    p.add_argument("--cocycles", choices=("trivial", "exhaustive"), default="trivial")
    p.add_argument("--include-lower", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_catalog)
    return ap


def main(argv=None):
    from .catalog.index import UnsupportedDatum
    from .descent import SizeError, UnsupportedError
    from .etale import FamilyError
    from .rootdata import InfiniteAutomorphismGroup
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SizeError as exc:
        print(f"size cutoff: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except (UnsupportedError, UnsupportedDatum, InfiniteAutomorphismGroup) as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except FamilyError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
