//! Layout engine for rendering hierarchies as generalized Pythagoras
//! trees, with force-directed removal of all rectangle overlap.
//!
//! The classic construction places every node's children on a semicircle
//! over its top edge; branches of real-world trees frequently collide.
//! Here each semicircle is generalized to a semi-ellipse whose height
//! ratio `b` is relaxed iteratively — colliding subtrees vote to stretch
//! their common ancestor's ellipse (spreading them apart) and to flatten
//! the ellipses along the paths in between (narrowing each subtree) —
//! until no two rectangles overlap.
//!
//! The crate is `no_std`-compatible (`alloc` required, math via `libm`);
//! the default `std` feature adds wall-clock timing of solver iterations.
//!
//! ```
//! use pythagoras_core::{generators, solve, LayoutConfig, SolverConfig};
//!
//! let tree = generators::complete_tree(2, 6);
//! let result = solve(&tree, LayoutConfig::default(), SolverConfig::default()).unwrap();
//! assert!(result.resolved());
//! ```

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod collision;
pub mod generators;
pub mod geometry;
pub mod hierarchy;
pub mod layout;
mod math;
pub mod solver;

pub use collision::{
    build_index, find_collisions, find_collisions_naive, CollisionPair, QuadtreeIndex,
};
pub use geometry::{
    chord_rect, ellipse_point, rect_aabb, rects_overlap, rescale_angles, Aabb, AngleLayout,
    EllipseArc, GeometryError, OrientedRect, Point,
};
pub use hierarchy::{Hierarchy, HierarchyBuilder, HierarchyError, NodeId, NodeRecord};
pub use layout::{
    compute_rects, initial_layout, node_height, HeightMode, LayoutConfig, NodeLayout, TreeLayout,
};
pub use solver::{
    apply_forces, lowest_common_ancestor, solve, tally_counters, IterationStats, SolveResult,
    Solver, SolverConfig, Termination,
};

/// Golden ratio, the default upper bound for the ellipse `b` parameter,
/// at the precision used throughout the crate.
pub const GOLDEN_RATIO: f64 = 1.6180339887;
