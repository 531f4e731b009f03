//! Frobenius bases at MUM points and the invariants derived from them.

mod basis;
mod mirror;

pub use basis::{frobenius_basis, FrobeniusBasis};
pub use mirror::{
    change_coordinates, default_truncation, equivalence_check, instantons, instantons_of_basis,
    instantons_of_operator, lambert_series, mirror_map, mobius, yukawa, InstantonVector, MirrorMap,
    QSeries, DEFAULT_KMAX,
};
