//! Partition of game space into elementary regions, canonical vertices,
//! convex decomposition, the unfolded-cube map, trajectories and measure
//! estimation.

mod canonical;
mod measure;
mod region;
mod trajectory;
mod unfold;

pub use canonical::{
    decompose, region_vertices, CanonicalMatrix, Decomposition, DecompositionTerm, RegionTriangle,
    VertexDirection, VertexKind, CANONICAL_SUM,
};
pub use measure::{
    entries_of_direction, mc_region_fractions, mc_region_fractions_parallel, sample_direction,
    MeasureEstimate,
};
pub use region::{
    adjacent_regions, region_of, region_of_f64, ElementaryRegion, Entry, RegionId, PLANE_PAIRS,
};
pub use trajectory::{trajectory, SampleKind, TrajectorySample};
pub use unfold::{face_of, map_point, unfold, unfold_on, Face, MapPoint, Tip};
