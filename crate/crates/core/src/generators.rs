//! Deterministic tree generators for benchmarks, stress tests, and
//! reproducible corpora. All weights are assigned by subtree node count.

use crate::hierarchy::{Hierarchy, HierarchyBuilder, NodeId};
use alloc::format;
use alloc::vec::Vec;

/// SplitMix64: tiny, seedable, identical output on every platform.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform in `[0, 1)`.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in `[0, n)`.
    pub fn next_index(&mut self, n: usize) -> usize {
        (self.next_f64() * n as f64) as usize % n
    }
}

/// Complete `branching`-ary tree with levels `0..=depth`.
pub fn complete_tree(branching: usize, depth: usize) -> Hierarchy {
    assert!(branching >= 1);
    let mut b = HierarchyBuilder::new();
    let root = b.root("n0", None);
    let mut frontier = Vec::new();
    frontier.push(root);
    for _ in 0..depth {
        let mut next = Vec::with_capacity(frontier.len() * branching);
        for &parent in &frontier {
            for _ in 0..branching {
                let label = format!("n{}", b.len());
                next.push(b.child(parent, label, None));
            }
        }
        frontier = next;
    }
    let mut h = b.finish().unwrap();
    h.assign_subtree_weights();
    h
}

/// A chain of the given depth with one extra leaf sibling at every level:
/// `2 * depth + 1` nodes.
pub fn chain_with_siblings(depth: usize) -> Hierarchy {
    let mut b = HierarchyBuilder::new();
    let mut spine = b.root("n0", None);
    for _ in 0..depth {
        let next = b.child(spine, format!("n{}", b.len()), None);
        b.child(spine, format!("n{}", b.len()), None);
        spine = next;
    }
    let mut h = b.finish().unwrap();
    h.assign_subtree_weights();
    h
}

/// One root with `leaves` children.
pub fn fan(leaves: usize) -> Hierarchy {
    let mut b = HierarchyBuilder::new();
    let root = b.root("n0", None);
    for _ in 0..leaves {
        b.child(root, format!("n{}", b.len()), None);
    }
    let mut h = b.finish().unwrap();
    h.assign_subtree_weights();
    h
}

/// Random tree with `n` nodes. Each new node attaches to the previous node
/// with probability `depth_bias` (growing a deep spine) and to a uniformly
/// random existing node otherwise.
pub fn random_tree(seed: u64, n: usize, depth_bias: f64) -> Hierarchy {
    assert!(n >= 1);
    let mut rng = SplitMix64::new(seed);
    let mut b = HierarchyBuilder::new();
    b.root("n0", None);
    for i in 1..n {
        let parent = if i > 1 && rng.next_f64() < depth_bias {
            NodeId((i - 1) as u32)
        } else {
            NodeId(rng.next_index(i) as u32)
        };
        b.child(parent, format!("n{i}"), None);
    }
    let mut h = b.finish().unwrap();
    h.assign_subtree_weights();
    h
}
