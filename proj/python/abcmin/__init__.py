"""Trees minimizing the atom-bond connectivity index.

Exact abc evaluation (correctly rounded doubles), a pruned search over the
five candidate shape families, closed forms and asymptotics for large leaf
counts, an exhaustive small-t oracle, local rewrites, and the inequality
checks backing the search's validity range.
"""

from ._core import (
    __version__,
    abc_index_edges,
    abc_index_text,
    asymptotic_abc,
    canonical_code,
    classify,
    closed_form_abc,
    contract_root_edge,
    delta0,
    edge_contribution,
    enumerate_leaf_codes,
    exchange_subtrees,
    f_bounds,
    large_t_shape,
    leaf_contribution,
    minimal_tree,
    minimal_tree_edges,
    move_leaf_between_branches,
    move_leaf_delta,
    oracle_minimal,
    parse,
    run_verification,
    scan,
    serialize,
    table1,
    verification_names,
    verify_all,
)

__all__ = [
    "__version__",
    "abc_index",
    "abc_index_edges",
    "abc_index_text",
    "asymptotic_abc",
    "canonical_code",
    "classify",
    "closed_form_abc",
    "contract_root_edge",
    "delta0",
    "edge_contribution",
    "enumerate_leaf_codes",
    "exchange_subtrees",
    "f_bounds",
    "large_t_shape",
    "leaf_contribution",
    "minimal_tree",
    "minimal_tree_edges",
    "move_leaf_between_branches",
    "move_leaf_delta",
    "oracle_minimal",
    "parse",
    "run_verification",
    "scan",
    "serialize",
    "table1",
    "verification_names",
    "verify_all",
]


def abc_index(tree):
    """abc index of a tree given as edge-list text or (u, v) pairs."""
    if isinstance(tree, str):
        return abc_index_text(tree)
    return abc_index_edges(list(tree))
