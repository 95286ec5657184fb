//! Strict and ordinary partitions, marked shifted tableaux and the
//! hook/content products of the Schur-function expansion.

pub mod hooks;
pub mod marked;
pub mod partition;
pub mod schur;

pub use hooks::{hook_content_products, hook_product};
pub use marked::{
    count_marked, enumerate_column_strict, enumerate_marked, gf_by_enumeration, gf_column_strict,
    gf_marked, q_tableau_sum, MarkedTableau, MarkedTableaux, Symbol,
};
pub use partition::{Partition, StrictPartition};
pub use schur::{schur_poly, schur_poly_tableaux};
