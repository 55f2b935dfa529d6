//! Permutation groups, wreath products, orbital structures and the
//! 2-closure, 2*-closure and subset-orbit closure operators.

pub mod catalog;
pub mod closure;
pub mod dsl;
pub mod error;
pub mod group;
pub mod io;
pub mod orbits;
pub mod perm;
pub mod product;
pub mod search;
pub mod structures;

pub use catalog::{alternating, catalog_group, cyclic, dihedral, klein_four, symmetric, trivial};
pub use closure::{
    automorphism_group, classify, closure, uncolored_hypergraph_representable, AnyStructure,
    ClassReport, ClosureKind, ClosureVerdict,
};
pub use dsl::{parse_group_spec, parse_group_spec_with};
pub use error::{Error, Result};
pub use group::{factorial, generate_group, Limits, PermGroup};
pub use orbits::{
    is_primitive, orbital_report, orbitals, orbits, transposing_permutation, OrbitPartition,
    OrbitalData,
};
pub use perm::Permutation;
pub use product::{
    decompose_imprimitive, decompose_product_action, direct_product, parallel_multiple,
    wreath_imprimitive, wreath_product_action, FunctionSpace, WreathDecomposition,
};
pub use structures::{
    color_equivalent, composition, free_composition, free_composition_directed, is_subcoloring,
    orbit_hypergraph, orbital_digraph, orbital_graph, Color, ColoredDigraph, ColoredGraph,
    ColoredHypergraph, Coloring,
};
