//! Dynamical pairs and extensions, coverings and their factorization,
//! congruences and simplicity, semidirect products.

mod congruence;
mod covering;
mod dynamical;
mod families;
mod semidirect;

pub use congruence::{
    automorphism_group, enumerate_congruences, enumerate_congruences_with_budget,
    generated_congruence, is_simple, CongruencePartition, DEFAULT_CONGRUENCE_BUDGET,
};
pub use covering::{factor_covering, kernel_partition, verify_covering, CoveringMap, Factorization};
pub use dynamical::{
    build_extension, extension_equivalence, extension_tables, trivial_pair, verify_dynamical_pair,
    DynamicalPair,
};
pub use families::{
    check_left_quasi_normal, constant_cocycle_pair, gxg_pair, quasinormal_pair, quasinormal_qcs,
    semibrace_pair, semibrace_qcs, z_example_op, z_example_witness, AbelianGroup, FiniteGroup,
    ZExampleWitness, ZPoint,
};
pub use semidirect::semidirect_product;
