//! Brute-force ground truth over the projective line.
//!
//! Bundles are splitting types, closed points are monic irreducible
//! polynomials in the affine coordinate, and a Hecke modification is
//! constructed literally as the subsheaf of sections hitting a chosen
//! fiber subspace, with its type recovered from exact section counts.
//!
//! `modify` is pure; `multiplicity_table` enumerates fiber subspaces with a
//! configurable cap and tallies deterministically (sorted keys), so calls
//! are safe from concurrent threads without shared state.

pub mod modify;
pub mod parabolic;
pub mod point;
pub mod splitting;
pub mod subspace;
pub mod table;

pub use modify::{conditioned_type, modify, Modification};
pub use parabolic::{
    elementary_transform_compose, hecke_transform, ElementaryComposition, QuasiParabolicData,
};
pub use point::{closed_point, closed_points, count_closed_points, parse_point, ClosedPointP1};
pub use splitting::SplittingType;
pub use subspace::{
    enumerate_subspaces, subspace_count, FiberSubspace, SubspaceIter, DEFAULT_ENUMERATION_CAP,
};
pub use table::{multiplicity_table, multiplicity_table_default, MultiplicityTable};
