//! Executable checks of the wreath-product representability results:
//! every claim is evaluated twice, once from its stated condition and once
//! by computing closures directly, and the two answers are compared.

pub mod constructions;
pub mod imprimitive;
pub mod oracle;
pub mod outcome;
pub mod product_action;
pub mod suite;

pub use constructions::{
    build_parallel_lift, build_wreath_lift, parallel_lift_graph, wreath_lift_graph,
};
pub use imprimitive::{
    transitive_factors, verify_digraph_classification, verify_directed_factorization,
    verify_imprimitive_classification, verify_orbital_factorization, verify_parallel_multiple_law,
    verify_transitive_decomposition, TransitiveFactors,
};
pub use oracle::{Flags, Oracle};
pub use outcome::{Named, VerificationOutcome};
pub use product_action::{difference_set_graph, product_action_report, ProductActionReport};
pub use suite::{
    grid_pairs, run_suite, verify_reference_fact, ReferenceFact, SuiteReport, REFERENCE_FACTS,
};
