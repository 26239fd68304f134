//! Overlap detection: a quadtree over rectangle bounding boxes for the
//! broad phase, exact separating-axis tests for the narrow phase, and an
//! all-pairs oracle used for verification and benchmarking.

use crate::geometry::{rects_overlap, Aabb, Point};
use crate::hierarchy::NodeId;
use crate::layout::TreeLayout;
use alloc::vec::Vec;

pub const DEFAULT_BUCKET_CAPACITY: usize = 8;
pub const DEFAULT_MAX_DEPTH: usize = 16;

/// An unordered pair of colliding nodes, stored with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CollisionPair {
    pub u: NodeId,
    pub v: NodeId,
}

impl CollisionPair {
    pub fn new(a: NodeId, b: NodeId) -> Self {
        assert_ne!(a, b, "a node cannot collide with itself");
        if a < b {
            CollisionPair { u: a, v: b }
        } else {
            CollisionPair { u: b, v: a }
        }
    }
}

struct Cell {
    region: Aabb,
    entries: Vec<(NodeId, Aabb)>,
    /// Indices of the four child cells (SW, SE, NW, NE), if split.
    children: Option<[u32; 4]>,
    depth: usize,
}

/// Quadtree over the axis-aligned bounding boxes of a layout's rectangles.
///
/// Boxes that straddle a cell's center lines stay at that cell; fully
/// contained boxes sink towards the leaves. A leaf splits when it exceeds
/// the bucket capacity, up to the depth cap, so degenerate clusters simply
/// overflow the deepest bucket.
pub struct QuadtreeIndex {
    cells: Vec<Cell>,
    bucket_capacity: usize,
    max_depth: usize,
    len: usize,
}

/// Builds the index over every node's bounding box with default
/// parameters. Rebuilt from scratch each solver iteration, since a
/// relayout moves every box.
pub fn build_index(layout: &TreeLayout) -> QuadtreeIndex {
    QuadtreeIndex::build(layout)
}

impl QuadtreeIndex {
    pub fn build(layout: &TreeLayout) -> Self {
        Self::with_params(layout, DEFAULT_BUCKET_CAPACITY, DEFAULT_MAX_DEPTH)
    }

    pub fn with_params(layout: &TreeLayout, bucket_capacity: usize, max_depth: usize) -> Self {
        assert!(bucket_capacity >= 1);
        let mut region = layout
            .nodes
            .first()
            .map(|n| n.rect.aabb())
            .unwrap_or(Aabb {
                min: Point::new(0.0, 0.0),
                max: Point::new(0.0, 0.0),
            });
        for n in &layout.nodes {
            region = region.union(&n.rect.aabb());
        }
        let mut index = QuadtreeIndex {
            cells: alloc::vec![Cell {
                region,
                entries: Vec::new(),
                children: None,
                depth: 0,
            }],
            bucket_capacity,
            max_depth,
            len: 0,
        };
        for (i, n) in layout.nodes.iter().enumerate() {
            index.insert(NodeId(i as u32), n.rect.aabb());
        }
        index
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    fn insert(&mut self, id: NodeId, aabb: Aabb) {
        let mut cell = 0usize;
        loop {
            if let Some(children) = self.cells[cell].children {
                match children
                    .iter()
                    .find(|&&c| self.cells[c as usize].region.contains(&aabb))
                {
                    Some(&c) => {
                        cell = c as usize;
                        continue;
                    }
                    None => break, // straddles the center lines
                }
            }
            break;
        }
        self.cells[cell].entries.push((id, aabb));
        self.len += 1;
        self.maybe_split(cell);
    }

    fn maybe_split(&mut self, cell: usize) {
        let c = &self.cells[cell];
        if c.children.is_some()
            || c.entries.len() <= self.bucket_capacity
            || c.depth >= self.max_depth
        {
            return;
        }
        let region = c.region;
        let depth = c.depth;
        let mid = region.center();
        let quadrant = |i: usize| {
            let (min, max) = (region.min, region.max);
            match i {
                0 => Aabb { min, max: mid },
                1 => Aabb {
                    min: Point::new(mid.x, min.y),
                    max: Point::new(max.x, mid.y),
                },
                2 => Aabb {
                    min: Point::new(min.x, mid.y),
                    max: Point::new(mid.x, max.y),
                },
                _ => Aabb { min: mid, max },
            }
        };
        let base = self.cells.len() as u32;
        for i in 0..4 {
            self.cells.push(Cell {
                region: quadrant(i),
                entries: Vec::new(),
                children: None,
                depth: depth + 1,
            });
        }
        self.cells[cell].children = Some([base, base + 1, base + 2, base + 3]);

        let entries = core::mem::take(&mut self.cells[cell].entries);
        let mut kept = Vec::new();
        let mut moved: [Vec<(NodeId, Aabb)>; 4] = Default::default();
        for (id, aabb) in entries {
            let child = (0..4).find(|&i| {
                self.cells[(base as usize) + i].region.contains(&aabb)
            });
            match child {
                Some(i) => moved[i].push((id, aabb)),
                None => kept.push((id, aabb)),
            }
        }
        self.cells[cell].entries = kept;
        for (i, batch) in moved.into_iter().enumerate() {
            let child = (base as usize) + i;
            self.cells[child].entries = batch;
            self.maybe_split(child);
        }
    }

    /// All node ids whose bounding box intersects `window` (closed test).
    pub fn window_query(&self, window: &Aabb) -> Vec<NodeId> {
        let mut out = Vec::new();
        self.window_query_into(window, &mut out);
        out
    }

    pub fn window_query_into(&self, window: &Aabb, out: &mut Vec<NodeId>) {
        let mut stack = alloc::vec![0usize];
        while let Some(cell) = stack.pop() {
            let c = &self.cells[cell];
            if !c.region.intersects(window) {
                continue;
            }
            for (id, aabb) in &c.entries {
                if aabb.intersects(window) {
                    out.push(*id);
                }
            }
            if let Some(children) = c.children {
                for child in children {
                    stack.push(child as usize);
                }
            }
        }
    }
}

/// All colliding pairs, quadtree broad phase plus exact narrow phase.
/// Returned sorted and deduplicated by construction (each pair is taken
/// from the lower-id endpoint's query only).
pub fn find_collisions(
    layout: &TreeLayout,
    index: &QuadtreeIndex,
    eps: f64,
) -> Vec<CollisionPair> {
    let mut pairs = Vec::new();
    let mut candidates = Vec::new();
    for (i, node) in layout.nodes.iter().enumerate() {
        let id = NodeId(i as u32);
        candidates.clear();
        index.window_query_into(&node.rect.aabb(), &mut candidates);
        for &other in &candidates {
            if other.index() <= i {
                continue;
            }
            if rects_overlap(&node.rect, &layout.nodes[other.index()].rect, eps) {
                pairs.push(CollisionPair::new(id, other));
            }
        }
    }
    pairs.sort_unstable();
    pairs
}

/// All-pairs exact test: the oracle the quadtree path is checked against,
/// and the benchmark baseline.
pub fn find_collisions_naive(layout: &TreeLayout, eps: f64) -> Vec<CollisionPair> {
    let mut pairs = Vec::new();
    for i in 0..layout.nodes.len() {
        for j in (i + 1)..layout.nodes.len() {
            if rects_overlap(&layout.nodes[i].rect, &layout.nodes[j].rect, eps) {
                pairs.push(CollisionPair::new(NodeId(i as u32), NodeId(j as u32)));
            }
        }
    }
    pairs
}
