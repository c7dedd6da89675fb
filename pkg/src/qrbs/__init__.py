"""Rule-based inference under subjective disbelief, compiled to reversible
quantum circuits and cross-validated against classical enumeration.

The pipeline: parse a ``.qrbs`` program (facts with disbelief in [0, 100],
categorical rules, one goal), compile it to a circuit of M / X / CN / CCN
gates, simulate it exactly or with seeded shot sampling, and check the
result against a brute-force probability oracle.
"""

from .gates import (
    H,
    M,
    S,
    T,
    X,
    Z,
    Gate,
    dagger,
    is_unitary,
    mat_mul,
    matrix_of,
    modulus_amplitudes,
    product_action_on_ket0,
)
from .statevec import (
    MAX_QUBITS,
    Circuit,
    CircuitOp,
    ShotHistogram,
    StateVector,
    apply,
    init_zero,
    marginal_prob_one,
    run,
    sample,
)
from .uncertainty import (
    FactAmplitudes,
    alpha_to_theta,
    credibility,
    delta_to_alpha,
    fact_amplitudes,
    qualitative_label,
    uncertainty_gate,
)
from .ruledsl import (
    And,
    DslError,
    FactRef,
    Not,
    Or,
    Rule,
    RuleSet,
    parse,
    premise_facts,
    to_source,
    topo_order,
    validate,
)
from .compiler import (
    BudgetError,
    CompiledProgram,
    QubitPlan,
    circuit_from_text,
    circuit_to_text,
    compile_ruleset,
    export_circuit,
    rq_gate_demo,
    truth_table_check,
)
from .inference import (
    CrossValidation,
    InferenceResult,
    OracleResult,
    cross_validate,
    infer_exact,
    infer_shots,
    oracle,
)
from .reference import demo_ruleset

__version__ = "0.1.0"

__all__ = [
    "And",
    "BudgetError",
    "Circuit",
    "CircuitOp",
    "CompiledProgram",
    "CrossValidation",
    "DslError",
    "FactAmplitudes",
    "FactRef",
    "Gate",
    "H",
    "InferenceResult",
    "M",
    "MAX_QUBITS",
    "Not",
    "Or",
    "OracleResult",
    "QubitPlan",
    "Rule",
    "RuleSet",
    "S",
    "ShotHistogram",
    "StateVector",
    "T",
    "X",
    "Z",
    "alpha_to_theta",
    "apply",
    "circuit_from_text",
    "circuit_to_text",
    "compile_ruleset",
    "credibility",
    "cross_validate",
    "dagger",
    "delta_to_alpha",
    "demo_ruleset",
    "export_circuit",
    "fact_amplitudes",
    "infer_exact",
    "infer_shots",
    "init_zero",
    "is_unitary",
    "marginal_prob_one",
    "mat_mul",
    "matrix_of",
    "modulus_amplitudes",
    "oracle",
    "parse",
    "premise_facts",
    "product_action_on_ket0",
    "qualitative_label",
    "rq_gate_demo",
    "run",
    "sample",
    "to_source",
    "topo_order",
    "truth_table_check",
    "uncertainty_gate",
    "validate",
]
