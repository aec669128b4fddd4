//! Shapes on the square lattice and the passive assemblies built from
//! them: parsing, hole and width predicates, scaling, perimeter geometry,
//! and the expected leader seat under a frame build.

pub mod assembly_build;
pub mod corners;
pub mod shape;

pub use assembly_build::build_input_assembly;
pub use corners::{
    analyze_geometry, convex_se_cells, diagonal_windows, CornerReport, PerimeterEdge, Quadrant,
};
pub use shape::{
    expected_leader_position, is_hole_free, is_min_width2, parse_shape, scale_shape, Shape,
    ShapeError,
};
