"""Exact computations on generalized Littlewood-Richardson semigroups.

Thin convenience layer over the compiled extension: catalogs of reductive
embeddings, semigroup enumeration, face defects, and the geometric
cross-checks (torus kernels, generic stabilizers, moment-polytope slices).
"""

import json as _json

from _core import (  # noqa: F401
    all_faces_full,
    branch,
    catalog,
    check_all_json,
    default_bound,
    delta_direct,
    delta_theoretical,
    desk_catalog,
    dim_c,
    dim_c_dual,
    embedding_json,
    enumerate_json,
    enumerate_points,
    freudenthal_character,
    generic_stabilizer_json,
    moment_polytope_slice,
    paper_flag_stabilizer_dim,
    tensor_decompose,
    weyl_dim,
)


def enumerate_sample(embedding, bound, threads=0):
    """Semigroup sample as a plain dict (parsed from the JSON form)."""
    return _json.loads(enumerate_json(embedding, bound, threads))


def generic_stabilizer(embedding, face, actor="L", trials=5, height=7, seed=20240405):
    return _json.loads(generic_stabilizer_json(embedding, face, actor, trials, height, seed))


def check_all(embeddings=(), bound=-1, trials=5, seed=20240405):
    ok, text = check_all_json(list(embeddings), bound, trials, seed)
    return ok, _json.loads(text)


def embedding_info(embedding):
    return _json.loads(embedding_json(embedding))
