"""Strong trail orientations of undirected and mixed multigraphs.

Given a multigraph and a partition of its undirected edges into trails,
the solvers assign each whole trail one direction of traversal so that the
resulting digraph is strongly connected, or report that no such assignment
exists.  Three entry points cover the ground:

- :func:`orient_trails` -- recursive reference solver for undirected inputs;
  feasible exactly on 2-edge-connected graphs.
- :func:`orient_linear` -- the scaling pipeline (cubic reduction, pruned
  subgraph, cut-class contraction), with object and flat-array engines.
- :func:`orient_mixed` -- handles pre-directed edges via forced-trail
  commitment.

:func:`verify` checks any result independently, and :mod:`trailorient.fileio`
plus the ``trailorient`` command line move instances in and out of text form.
"""

from .connectivity import (
    Cactus,
    find_bridges,
    is_connected,
    is_strongly_connected,
    is_three_edge_connected,
    is_two_edge_connected,
    three_edge_components,
)
from .fileio import FormatError, Instance, emit_instance, emit_orientation, parse_instance, parse_orientation
from .linear import orient_linear, pull_back_orientation, reduce_to_cubic
from .mixed import check_robust, orient_mixed
from .multigraph import (
    Direction,
    EdgeState,
    MultiGraph,
    Orientation,
    PartitionError,
    Trail,
    TrailPartition,
    apply_orientation,
    check_trails,
    orient_partition,
    validate_trails,
)
from .naive import orient_trails
from .oracle import Verdict, brute_force_feasible, fig_gadget, verify

__version__ = "0.1.0"

__all__ = [
    "Cactus",
    "Direction",
    "EdgeState",
    "FormatError",
    "Instance",
    "MultiGraph",
    "Orientation",
    "PartitionError",
    "Trail",
    "TrailPartition",
    "Verdict",
    "apply_orientation",
    "brute_force_feasible",
    "check_robust",
    "check_trails",
    "emit_instance",
    "emit_orientation",
    "fig_gadget",
    "find_bridges",
    "is_connected",
    "is_strongly_connected",
    "is_three_edge_connected",
    "is_two_edge_connected",
    "orient_linear",
    "orient_mixed",
    "orient_partition",
    "orient_trails",
    "parse_instance",
    "parse_orientation",
    "pull_back_orientation",
    "reduce_to_cubic",
    "three_edge_components",
    "validate_trails",
    "verify",
    "__version__",
]
