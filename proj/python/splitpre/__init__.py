"""Split preorders, their relational representation, and proof equivalence."""

from ._core import (
    Error,
    FiniteRelation,
    SplitPreorder,
    compose,
    converse,
    endpoints,
    enumerate_preorders,
    enumerate_split_preorders,
    from_relation,
    g_arrow,
    g_object,
    identity,
    is_equivalence,
    is_preorder,
    is_strictly_transitive,
    proof_equiv,
    random_derivation,
    reflexive_closure,
    repr_arrow,
    strictify,
    symmetric_closure,
    to_split_equivalence,
    transitive_closure,
    verify_faithfulness,
    verify_functoriality,
)

__all__ = [name for name in dir() if not name.startswith("_")]
