//! Rooted weighted trees: the input model for the layout engine.
//!
//! A [`Hierarchy`] is an immutable, validated tree with per-node labels and
//! weights. Nodes are addressed by [`NodeId`], a dense index assigned in
//! construction order, so all per-node state elsewhere in the crate lives in
//! plain vectors.
//!
//! Weights drive how much of a parent's ellipse each child receives. A
//! weight of `0.0` is a sentinel for "not specified"; callers replace
//! sentinels via [`Hierarchy::assign_subtree_weights`] or
//! [`Hierarchy::fill_default_weights`] before computing a layout.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Dense index of a node within its [`Hierarchy`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(pub u32);

impl NodeId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// One node of a [`Hierarchy`].
#[derive(Clone, Debug)]
pub struct NodeRecord {
    pub id: NodeId,
    pub label: String,
    pub parent: Option<NodeId>,
    pub children: Vec<NodeId>,
    /// Strictly positive once weights are assigned; `0.0` is the
    /// "unspecified" sentinel.
    pub weight: f64,
    /// Root has depth 0; every child is one deeper than its parent.
    pub depth: u32,
}

/// Structural errors raised while building or validating a tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HierarchyError {
    /// No nodes at all.
    Empty,
    /// More than one node without a parent.
    MultipleRoots(String, String),
    /// A parent chain loops back on itself, or some nodes are unreachable
    /// from the root (which, in a parent-function graph, implies a cycle).
    CycleDetected,
    /// The same node was given two parents.
    DuplicateNodeId(String),
    /// An explicit weight was zero, negative, or not finite.
    NonPositiveWeight(String),
}

impl fmt::Display for HierarchyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HierarchyError::Empty => write!(f, "hierarchy has no nodes"),
            HierarchyError::MultipleRoots(a, b) => {
                write!(f, "multiple roots: {a:?} and {b:?} both lack a parent")
            }
            HierarchyError::CycleDetected => write!(f, "cycle detected: input is not a tree"),
            HierarchyError::DuplicateNodeId(l) => {
                write!(f, "node {l:?} is defined more than once")
            }
            HierarchyError::NonPositiveWeight(l) => {
                write!(f, "node {l:?} has a non-positive weight")
            }
        }
    }
}

impl core::error::Error for HierarchyError {}

/// A validated rooted tree with positive (or sentinel) node weights.
#[derive(Clone, Debug)]
pub struct Hierarchy {
    nodes: Vec<NodeRecord>,
    root: NodeId,
    /// Level order, root first. Cached because layout recomputation walks
    /// it every solver iteration.
    bfs: Vec<NodeId>,
    max_depth: u32,
}

impl Hierarchy {
    /// Builds a tree from `(parent, child, weight)` edges. Node ids are
    /// assigned in first-appearance order; children keep input order.
    ///
    /// The root is the unique label that never appears as a child. The
    /// optional weight applies to the child; the root keeps the sentinel
    /// weight `0.0` (no edge can carry one for it).
    pub fn from_edges<P, C>(edges: &[(P, C, Option<f64>)]) -> Result<Self, HierarchyError>
    where
        P: AsRef<str>,
        C: AsRef<str>,
    {
        if edges.is_empty() {
            return Err(HierarchyError::Empty);
        }
        let mut nodes: Vec<NodeRecord> = Vec::new();
        let mut by_label: BTreeMap<String, NodeId> = BTreeMap::new();
        let mut intern = |label: &str, nodes: &mut Vec<NodeRecord>| -> NodeId {
            if let Some(&id) = by_label.get(label) {
                return id;
            }
            let id = NodeId(nodes.len() as u32);
            nodes.push(NodeRecord {
                id,
                label: String::from(label),
                parent: None,
                children: Vec::new(),
                weight: 0.0,
                depth: 0,
            });
            by_label.insert(String::from(label), id);
            id
        };

        for (parent, child, weight) in edges {
            let p = intern(parent.as_ref(), &mut nodes);
            let c = intern(child.as_ref(), &mut nodes);
            if nodes[c.index()].parent.is_some() {
                return Err(HierarchyError::DuplicateNodeId(String::from(child.as_ref())));
            }
            if p == c {
                return Err(HierarchyError::CycleDetected);
            }
            nodes[c.index()].parent = Some(p);
            nodes[p.index()].children.push(c);
            if let Some(w) = *weight {
                if !(w > 0.0) || !w.is_finite() {
                    return Err(HierarchyError::NonPositiveWeight(String::from(
                        child.as_ref(),
                    )));
                }
                nodes[c.index()].weight = w;
            }
        }

        let mut roots = nodes.iter().filter(|n| n.parent.is_none());
        let root = match (roots.next(), roots.next()) {
            (Some(r), None) => r.id,
            (Some(a), Some(b)) => {
                return Err(HierarchyError::MultipleRoots(a.label.clone(), b.label.clone()))
            }
            // Every node has a parent, so a parent walk must loop.
            (None, _) => return Err(HierarchyError::CycleDetected),
        };
        Self::from_parts(nodes, root)
    }

    /// Validates parent/child consistency, computes depths and the cached
    /// BFS order. Nodes unreachable from the root mean the parent function
    /// loops somewhere.
    fn from_parts(mut nodes: Vec<NodeRecord>, root: NodeId) -> Result<Self, HierarchyError> {
        let mut bfs = Vec::with_capacity(nodes.len());
        bfs.push(root);
        nodes[root.index()].depth = 0;
        let mut head = 0;
        let mut max_depth = 0;
        while head < bfs.len() {
            let id = bfs[head];
            head += 1;
            let depth = nodes[id.index()].depth + 1;
            let children = nodes[id.index()].children.clone();
            for c in children {
                nodes[c.index()].depth = depth;
                max_depth = max_depth.max(depth);
                bfs.push(c);
            }
        }
        if bfs.len() != nodes.len() {
            return Err(HierarchyError::CycleDetected);
        }
        Ok(Hierarchy {
            nodes,
            root,
            bfs,
            max_depth,
        })
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    #[inline]
    pub fn root(&self) -> NodeId {
        self.root
    }

    #[inline]
    pub fn node(&self, id: NodeId) -> &NodeRecord {
        &self.nodes[id.index()]
    }

    pub fn nodes(&self) -> impl Iterator<Item = &NodeRecord> {
        self.nodes.iter()
    }

    #[inline]
    pub fn children(&self, id: NodeId) -> &[NodeId] {
        &self.nodes[id.index()].children
    }

    #[inline]
    pub fn parent(&self, id: NodeId) -> Option<NodeId> {
        self.nodes[id.index()].parent
    }

    #[inline]
    pub fn depth(&self, id: NodeId) -> u32 {
        self.nodes[id.index()].depth
    }

    #[inline]
    pub fn weight(&self, id: NodeId) -> f64 {
        self.nodes[id.index()].weight
    }

    #[inline]
    pub fn is_leaf(&self, id: NodeId) -> bool {
        self.nodes[id.index()].children.is_empty()
    }

    /// Level order, root first.
    #[inline]
    pub fn bfs_order(&self) -> &[NodeId] {
        &self.bfs
    }

    #[inline]
    pub fn max_depth(&self) -> u32 {
        self.max_depth
    }

    fn subtree_sizes(&self) -> Vec<u64> {
        let mut sizes = alloc::vec![1u64; self.nodes.len()];
        for &id in self.bfs.iter().rev() {
            for &c in &self.nodes[id.index()].children {
                sizes[id.index()] += sizes[c.index()];
            }
        }
        sizes
    }

    /// Sets every node's weight to the number of nodes in its subtree
    /// (itself included), discarding any explicit weights. Idempotent.
    pub fn assign_subtree_weights(&mut self) {
        let sizes = self.subtree_sizes();
        for node in &mut self.nodes {
            node.weight = sizes[node.id.index()] as f64;
        }
    }

    /// Replaces only sentinel (`0.0`) weights with subtree node counts,
    /// keeping explicit weights untouched.
    pub fn fill_default_weights(&mut self) {
        let sizes = self.subtree_sizes();
        for node in &mut self.nodes {
            if node.weight == 0.0 {
                node.weight = sizes[node.id.index()] as f64;
            }
        }
    }

    /// Checks that every weight is strictly positive and finite, as the
    /// layout stage requires.
    pub fn validate_weights(&self) -> Result<(), HierarchyError> {
        for node in &self.nodes {
            if !(node.weight > 0.0) || !node.weight.is_finite() {
                return Err(HierarchyError::NonPositiveWeight(node.label.clone()));
            }
        }
        Ok(())
    }
}

/// Incremental construction for sources that discover nodes top-down
/// (recursive JSON documents, filesystem scans, generators).
#[derive(Debug, Default)]
pub struct HierarchyBuilder {
    nodes: Vec<NodeRecord>,
}

impl HierarchyBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds the root node. Must be called exactly once, first.
    pub fn root(&mut self, label: impl Into<String>, weight: Option<f64>) -> NodeId {
        assert!(self.nodes.is_empty(), "root must be the first node added");
        self.push(label.into(), None, weight)
    }

    /// Adds a child under an existing node.
    pub fn child(
        &mut self,
        parent: NodeId,
        label: impl Into<String>,
        weight: Option<f64>,
    ) -> NodeId {
        assert!(parent.index() < self.nodes.len(), "unknown parent id");
        let id = self.push(label.into(), Some(parent), weight);
        self.nodes[parent.index()].children.push(id);
        id
    }

    fn push(&mut self, label: String, parent: Option<NodeId>, weight: Option<f64>) -> NodeId {
        let id = NodeId(self.nodes.len() as u32);
        self.nodes.push(NodeRecord {
            id,
            label,
            parent,
            children: Vec::new(),
            weight: weight.unwrap_or(0.0),
            depth: 0,
        });
        id
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Attaches an explicit weight after the node was created.
    pub fn set_weight(&mut self, id: NodeId, weight: f64) {
        self.nodes[id.index()].weight = weight;
    }

    pub fn finish(self) -> Result<Hierarchy, HierarchyError> {
        if self.nodes.is_empty() {
            return Err(HierarchyError::Empty);
        }
        for node in &self.nodes {
            let w = node.weight;
            if w != 0.0 && (!(w > 0.0) || !w.is_finite()) {
                return Err(HierarchyError::NonPositiveWeight(node.label.clone()));
            }
        }
        Hierarchy::from_parts(self.nodes, NodeId(0))
    }
}
