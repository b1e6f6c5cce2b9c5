"""robustnet: sparsest maximally robust communication graphs.

Builders for the extremal graph families that reach the ceil(n/2)
robustness ceiling with provably minimal edge counts, an exact certifier
for the robustness of arbitrary small graphs (with witness certificates),
a W-MSR resilient-consensus simulator with configurable misbehaving
agents, and a reproducible random-graph experiment harness.
"""

from .graph import (
    Graph,
    densest_subset_of_size,
    format_edge_list,
    graph_from_json_dict,
    graph_to_json_dict,
    induced_edge_count,
    load_graph,
    max_clique,
    new_graph,
    parse_edge_list,
    read_edge_list,
    write_edge_list,
)
from .robustness import (
    BoundReport,
    LemmaCheck,
    MAX_EXACT_N,
    RobustnessCertificate,
    StructuralReport,
    check_structural_lemmas,
    edge_lower_bound,
    is_r_robust,
    max_robustness,
    reachability,
)
from .construct import (
    ConstructionRecipe,
    build,
    erdos_renyi,
    f_elemental,
    sparsest_even,
    sparsest_odd,
    tree_graph,
)
from .consensus import (
    Behavior,
    SimulationTrace,
    ThreatModel,
    Verdict,
    behavior_from_spec,
    check_validity,
    constant,
    linear_ramp,
    nominal_step,
    random_walk,
    simulate,
    sinusoid,
    trace_sidecar_dict,
    trace_to_csv_text,
    wmsr_step,
    write_trace,
)
from .experiment import (
    ExperimentConfig,
    ExperimentRecord,
    SummaryRow,
    derive_seed,
    records_to_csv_text,
    run_experiment,
    summary_to_csv_text,
)

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "new_graph",
    "max_clique",
    "induced_edge_count",
    "densest_subset_of_size",
    "format_edge_list",
    "parse_edge_list",
    "graph_to_json_dict",
    "graph_from_json_dict",
    "read_edge_list",
    "write_edge_list",
    "load_graph",
    "reachability",
    "is_r_robust",
    "max_robustness",
    "RobustnessCertificate",
    "BoundReport",
    "LemmaCheck",
    "StructuralReport",
    "MAX_EXACT_N",
    "edge_lower_bound",
    "check_structural_lemmas",
    "ConstructionRecipe",
    "build",
    "sparsest_odd",
    "sparsest_even",
    "f_elemental",
    "erdos_renyi",
    "tree_graph",
    "ThreatModel",
    "SimulationTrace",
    "Verdict",
    "Behavior",
    "behavior_from_spec",
    "constant",
    "linear_ramp",
    "sinusoid",
    "random_walk",
    "nominal_step",
    "wmsr_step",
    "simulate",
    "check_validity",
    "trace_to_csv_text",
    "trace_sidecar_dict",
    "write_trace",
    "ExperimentConfig",
    "ExperimentRecord",
    "SummaryRow",
    "derive_seed",
    "run_experiment",
    "records_to_csv_text",
    "summary_to_csv_text",
]
