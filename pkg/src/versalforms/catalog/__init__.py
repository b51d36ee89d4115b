"""Index sets, fingerprints and catalogs of descended groups over finite fields."""

from .build import (FORMAT, SPECS, VERSION, build_catalog, dumps, fingerprint_set, load_catalog,
                    point_id, spec_for, verify_catalog, write_catalog)
from .fingerprint import center, derived_subgroup, fingerprint, generating_set
from .index import IndexEntry, UnsupportedDatum, build_index_set
