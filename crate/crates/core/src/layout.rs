//! Top-down construction of the full tree layout.
//!
//! Every node owns an oriented rectangle. The root sits axis-aligned at the
//! origin in a y-up scene; each internal node spans a semi-ellipse over its
//! top edge and its children stand on weight-proportional chords of that
//! arc, recursively. The per-node ellipse ratio `b` is the single degree of
//! freedom the solver adjusts: geometry is otherwise a pure function of the
//! hierarchy and the `b` values.

use crate::geometry::{
    chord_rect, rescale_angles, EllipseArc, GeometryError, OrientedRect, Point,
};
use crate::hierarchy::{Hierarchy, NodeId};
use alloc::vec::Vec;
use core::ops::{Index, IndexMut};

/// Learning rate every node starts with; the solver may reseed it.
pub const INITIAL_LEARNING_RATE: f64 = 0.1;

/// How a node's rectangle height follows its width.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HeightMode {
    /// Height equals width: every node is a square.
    Square,
    /// Height is `min(original_height, width)`, capping growth at the size
    /// the node had in the initial layout.
    Limited,
}

#[derive(Clone, Copy, Debug)]
pub struct LayoutConfig {
    pub root_width: f64,
    pub height_mode: HeightMode,
    /// Relative tolerance for the chord/weight proportion match.
    pub rescale_tol: f64,
    /// Cap on angle-rescaling sweeps per node.
    pub rescale_max_iter: usize,
}

impl Default for LayoutConfig {
    fn default() -> Self {
        LayoutConfig {
            root_width: 1.0,
            height_mode: HeightMode::Square,
            rescale_tol: 1e-6,
            rescale_max_iter: 100,
        }
    }
}

/// Per-node geometry plus the force state the solver works on.
#[derive(Clone, Copy, Debug)]
pub struct NodeLayout {
    pub rect: OrientedRect,
    /// Ellipse ratio for this node's children arc, in `(0, b_cap]`.
    pub b: f64,
    /// Strength of the drift back towards `b = 1`; decays every iteration.
    pub lr: f64,
    pub spread: u32,
    pub narrow: u32,
    /// Height this node had in the initial `b = 1` layout.
    pub original_height: f64,
}

/// Geometry for every node of a hierarchy, indexed by [`NodeId`].
#[derive(Clone, Debug)]
pub struct TreeLayout {
    pub nodes: Vec<NodeLayout>,
    pub max_depth: u32,
}

impl TreeLayout {
    #[inline]
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn min_max_b(&self) -> (f64, f64) {
        let mut min = f64::INFINITY;
        let mut max = f64::NEG_INFINITY;
        for n in &self.nodes {
            min = min.min(n.b);
            max = max.max(n.b);
        }
        (min, max)
    }
}

impl Index<NodeId> for TreeLayout {
    type Output = NodeLayout;
    #[inline]
    fn index(&self, id: NodeId) -> &NodeLayout {
        &self.nodes[id.index()]
    }
}

impl IndexMut<NodeId> for TreeLayout {
    #[inline]
    fn index_mut(&mut self, id: NodeId) -> &mut NodeLayout {
        &mut self.nodes[id.index()]
    }
}

/// Height of a node's rectangle given its (current) width.
#[inline]
pub fn node_height(mode: HeightMode, width: f64, original_height: f64) -> f64 {
    match mode {
        HeightMode::Square => width,
        HeightMode::Limited => original_height.min(width),
    }
}

/// The classic layout: every node gets `b = 1` (semicircles), the initial
/// learning rate, zeroed counters, and `original_height` is recorded from
/// this state.
pub fn initial_layout(h: &Hierarchy, cfg: &LayoutConfig) -> Result<TreeLayout, GeometryError> {
    assert!(cfg.root_width > 0.0, "root width must be positive");
    let placeholder = OrientedRect {
        origin: Point::new(0.0, 0.0),
        base_dir: Point::new(1.0, 0.0),
        width: cfg.root_width,
        height: cfg.root_width,
    };
    let mut layout = TreeLayout {
        nodes: alloc::vec![
            NodeLayout {
                rect: placeholder,
                b: 1.0,
                lr: INITIAL_LEARNING_RATE,
                spread: 0,
                narrow: 0,
                original_height: cfg.root_width,
            };
            h.len()
        ],
        max_depth: h.max_depth(),
    };
    // At b = 1 both height modes coincide (original_height is the initial
    // width), so the first pass always uses squares.
    compute_rects_mode(h, &mut layout, cfg, HeightMode::Square)?;
    for n in &mut layout.nodes {
        n.original_height = n.rect.height;
    }
    Ok(layout)
}

/// Recomputes every rectangle from the stored per-node `b` values,
/// breadth-first from the root. Only `b`, the force state, and
/// `original_height` persist; all coordinates are derived fresh.
pub fn compute_rects(
    h: &Hierarchy,
    layout: &mut TreeLayout,
    cfg: &LayoutConfig,
) -> Result<(), GeometryError> {
    compute_rects_mode(h, layout, cfg, cfg.height_mode)
}

fn compute_rects_mode(
    h: &Hierarchy,
    layout: &mut TreeLayout,
    cfg: &LayoutConfig,
    mode: HeightMode,
) -> Result<(), GeometryError> {
    assert_eq!(h.len(), layout.len(), "layout does not match hierarchy");
    let root = h.root();
    layout[root].rect = OrientedRect {
        origin: Point::new(0.0, 0.0),
        base_dir: Point::new(1.0, 0.0),
        width: cfg.root_width,
        height: node_height(mode, cfg.root_width, layout[root].original_height),
    };

    let mut weights: Vec<f64> = Vec::new();
    for &id in h.bfs_order() {
        let children = h.children(id);
        if children.is_empty() {
            continue;
        }
        let parent_rect = layout[id].rect;
        let arc = EllipseArc::new(
            parent_rect.top_center(),
            parent_rect.base_dir,
            parent_rect.width * 0.5,
            layout[id].b,
        );
        weights.clear();
        weights.extend(children.iter().map(|&c| h.weight(c)));
        let angles = rescale_angles(&weights, &arc, cfg.rescale_tol, cfg.rescale_max_iter);
        for (i, &child) in children.iter().enumerate() {
            let theta_left = angles.boundaries[i];
            let theta_right = angles.boundaries[i + 1];
            let width = arc
                .point_at(theta_left)
                .dist(arc.point_at(theta_right));
            let height = node_height(mode, width, layout[child].original_height);
            layout[child].rect = chord_rect(&arc, theta_left, theta_right, height)?;
        }
    }
    Ok(())
}
