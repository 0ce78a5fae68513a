//! Exact linear algebra, symmetric-group characters, and the brute-force
//! orbit harmonics oracle. Nothing here depends on the closed formulas.

pub mod characters;
pub mod ideals;
pub mod linalg;
pub mod oracle;

pub use characters::{
    class_table, frobenius_from_character, frobenius_from_pair_character, frobenius_with_tables, mn_character,
    pair_character_of, pair_character_with_tables, IrrepTable,
    product_class_table, z_lambda, CharacterTable, ClassFunction, PairClassFunction,
};
pub use ideals::{
    gr_ideal_dim, gr_ideal_member, ideal_degree_dim, involution_ideal_generators, rook_ideal_generators,
    verify_ideal_equality, verify_involution_ideal, Form, Monomial,
};
pub use linalg::{Echelon, ExactMatrix, Rational};
pub use oracle::{oracle_graded_frobenius, oracle_hilbert, oracle_hilbert_full, GradedFrobenius};
