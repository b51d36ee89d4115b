"""Explicit root data of the familiar groups of rank at most 3.

Conventions: ``SL2`` is ``X = Z`` with root 2 and coroot 1, ``PGL2`` is its
dual.  Simply connected data use fundamental-weight coordinates, adjoint data
are duals of simply connected data of the dual type.
"""

from __future__ import annotations

import functools

from .cartan import pairing_matrix, root_system, type_name
from .datum import BasedRootDatum, RootDatum, RootDatumError, choose_base


def _based(d, name):
    return BasedRootDatum(d, choose_base(d), name).canonical()


def torus(r, name=None):
    return _based(RootDatum(r, [], []), name or ("Gm" if r == 1 else f"Gm^{r}"))


def simply_connected(components, name=None):
    A = pairing_matrix(components)
    roots, coroots = root_system(A)
    return _based(RootDatum(len(A), roots, coroots), name or f"{type_name(components)} sc")


def adjoint(components, name=None):
    A = pairing_matrix(components)
    At = [list(r) for r in zip(*A)]
    roots, coroots = root_system(At)
    return _based(RootDatum(len(A), coroots, roots), name or f"{type_name(components)} ad")


def product(*factors, name=None):
    n = sum(f.rank for f in factors)
    roots, coroots = [], []
    off = 0
    for f in factors:
        pad = lambda v: (0,) * off + tuple(v) + (0,) * (n - off - f.rank)
        roots += [pad(r) for r in f.datum.roots]
        coroots += [pad(c) for c in f.datum.coroots]
        off += f.rank
    return _based(RootDatum(n, roots, coroots), name or "x".join(f.name for f in factors))


def gl2():
    return _based(RootDatum(2, [(1, -1), (-1, 1)], [(1, -1), (-1, 1)]), "GL2")


def so4():
    return _based(RootDatum(2, [(1, 1), (-1, -1), (1, -1), (-1, 1)],
                            [(1, 1), (-1, -1), (1, -1), (-1, 1)]), "SO4")


def _named():
    SL2 = simply_connected(("A1",), "SL2")
    PGL2 = adjoint(("A1",), "PGL2")
    Gm = torus(1)
    out = [
        torus(0, "trivial"),
        Gm, SL2, PGL2,
        torus(2),
        product(SL2, Gm, name="SL2xGm"), gl2(), product(PGL2, Gm, name="PGL2xGm"),
        product(SL2, SL2, name="SL2xSL2"), so4(), product(SL2, PGL2, name="SL2xPGL2"),
        product(PGL2, PGL2, name="PGL2xPGL2"),
        simply_connected(("A2",), "SL3"), adjoint(("A2",), "PGL3"),
        simply_connected(("B2",), "Sp4"), adjoint(("B2",), "SO5"),
        simply_connected(("G2",), "G2"),
        simply_connected(("A3",), "SL4"), adjoint(("A3",), "PGL4"),
        simply_connected(("B3",), "Spin7"), adjoint(("B3",), "SO7"),
        simply_connected(("C3",), "Sp6"), adjoint(("C3",), "PSp6"),
        torus(3),
    ]
    return {b.name: b for b in out}


@functools.lru_cache(maxsize=None)
def named_root_data():
    return _named()


def named_root_datum(name):
    try:
        return named_root_data()[name]
    except KeyError:
        raise RootDatumError(f"unknown root datum {name!r}") from None


@functools.lru_cache(maxsize=None)
def _invariant_table():
    from .enumerate import gluing_invariant
    return {gluing_invariant(b): name for name, b in named_root_data().items()}


def name_for(components, t, key, b=None):
    inv = (tuple(components), t, key)
    name = _invariant_table().get(inv)
    if name is not None:
        return name
    tn = type_name(components)
    label = tn if t == 0 else (f"{tn}xT{t}" if components else f"T{t}")
    return f"{label}[{len(key)}]"
