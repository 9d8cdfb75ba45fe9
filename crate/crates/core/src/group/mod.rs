//! Finite groups, mostly subgroups of `GL2(Z/n)`.

mod element;
mod enumerate;
mod finite;
mod matrix;
mod maximal;

use thiserror::Error;

pub use element::{GroupElement, ModMatrix, Perm};
pub use enumerate::{
    enumerate_subgroups, enumerate_table, table_conjugate_into, table_is_s3_type, table_subset, Bits,
    EnumerationOptions, Subgroup, TableGroup, MAX_ENUMERATION_ORDER,
};
pub use finite::{
    greedy_generators, homs_to_s3, is_generalized_s3_quotient, is_generalized_s3_type, s3_elements, s3_residual,
    Group,
};
pub use matrix::{
    borel, close, conjugate_into_group, det_surjective, fixed_submodule, gl2, gl2_order, has_cc_element,
    is_borel_conjugate, is_split_cartan_conjugate, level_of, parse_gens, sl2, split_cartan, GroupSpec, MatrixGroup,
    MAX_MODULUS,
};
pub use maximal::{maximal_images_for_t, MaximalImage, MAXIMAL_IMAGE_MODULI};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("cannot parse generator {0:?}")]
    Parse(String),
    #[error("modulus {0} outside 2..=1024")]
    ModulusOutOfRange(u32),
    #[error("generators have different moduli")]
    ModulusMismatch,
    #[error("not a unit determinant: {0:?}")]
    NotUnitDeterminant(ModMatrix),
    #[error("enumeration bound: group order {order} exceeds {bound}")]
    EnumerationBound { order: usize, bound: usize },
    #[error("group is not solvable")]
    NotSolvable,
    #[error("time budget exhausted")]
    BudgetExhausted,
    #[error("unsupported modulus {0}")]
    UnsupportedModulus(u32),
}
