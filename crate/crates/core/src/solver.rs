//! The relaxation loop that removes overlap.
//!
//! Each iteration: every colliding pair votes — its lowest common ancestor
//! is marked to *spread* (taller ellipse, pushing the two subtrees apart)
//! and the nodes on the paths from the pair down to that ancestor are
//! marked to *narrow* (flatter ellipses, pulling each subtree together).
//! Nodes then apply whichever force dominates, plus a decaying neutral
//! drift of `b` back towards 1, the layout is recomputed and collisions
//! are detected again. The loop ends when no overlap remains or the
//! iteration cap is hit.

use crate::collision::{build_index, find_collisions, CollisionPair};
use crate::geometry::GeometryError;
use crate::hierarchy::{Hierarchy, NodeId};
use crate::layout::{compute_rects, initial_layout, LayoutConfig, TreeLayout};
use crate::GOLDEN_RATIO;
use alloc::vec::Vec;
use core::time::Duration;

#[derive(Clone, Copy, Debug)]
pub struct SolverConfig {
    /// Multiplier on `b` when spread dominates (> 1).
    pub push_factor: f64,
    /// Multiplier on `b` when narrow dominates (in (0, 1)).
    pub pull_factor: f64,
    /// Upper bound for `b`; the push force saturates here.
    pub b_cap: f64,
    /// Initial learning rate of the neutral drift towards `b = 1`.
    pub lr_init: f64,
    /// Per-iteration decay multiplier of the learning rate.
    pub lr_decay: f64,
    /// Hard stop; termination has no formal guarantee.
    pub max_iterations: usize,
    /// Touch tolerance as a fraction of the root width. Contacts closer
    /// than this do not count as overlap.
    pub eps_rel: f64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            push_factor: 1.1,
            pull_factor: 0.9,
            b_cap: GOLDEN_RATIO,
            lr_init: 0.1,
            lr_decay: 0.9,
            max_iterations: 10_000,
            eps_rel: 1e-9,
        }
    }
}

/// One row of the convergence record. Index 0 is the initial state.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IterationStats {
    pub iteration: usize,
    pub collisions: usize,
    pub max_b: f64,
    pub min_b: f64,
    /// Zero when the crate is built without `std`.
    pub wall_time: Duration,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Termination {
    /// No colliding pairs remain.
    Resolved,
    /// `max_iterations` hit with collisions still present.
    IterationCap,
}

#[derive(Clone, Debug)]
pub struct SolveResult {
    pub layout: TreeLayout,
    pub stats: Vec<IterationStats>,
    pub termination: Termination,
}

impl SolveResult {
    pub fn resolved(&self) -> bool {
        self.termination == Termination::Resolved
    }

    pub fn iterations(&self) -> usize {
        self.stats.len() - 1
    }
}

/// Deepest node that is an ancestor-or-self of both `u` and `v`, found by
/// walking the deeper side up to the shallower depth and then climbing in
/// lockstep.
pub fn lowest_common_ancestor(h: &Hierarchy, u: NodeId, v: NodeId) -> NodeId {
    let mut a = u;
    let mut b = v;
    while h.depth(a) > h.depth(b) {
        a = h.parent(a).expect("non-root must have a parent");
    }
    while h.depth(b) > h.depth(a) {
        b = h.parent(b).expect("non-root must have a parent");
    }
    while a != b {
        a = h.parent(a).expect("walk reached distinct roots");
        b = h.parent(b).expect("walk reached distinct roots");
    }
    a
}

/// Accumulates the spread/narrow votes of every colliding pair: the pair's
/// lowest common ancestor gets `spread += 1`; every node on the two paths
/// from `u` and `v` up to (and excluding) that ancestor gets `narrow += 1`.
/// When one endpoint is itself the ancestor, only the other side's path
/// contributes.
pub fn tally_counters(h: &Hierarchy, layout: &mut TreeLayout, pairs: &[CollisionPair]) {
    for pair in pairs {
        let z = lowest_common_ancestor(h, pair.u, pair.v);
        layout[z].spread += 1;
        for endpoint in [pair.u, pair.v] {
            let mut cur = endpoint;
            while cur != z {
                layout[cur].narrow += 1;
                cur = h.parent(cur).expect("path to ancestor cannot leave the tree");
            }
        }
    }
}

/// Applies the three forces to every node and resets the counters:
/// push (`b * push_factor`, capped) when spread dominates, pull
/// (`b * pull_factor`) when narrow dominates, then unconditionally the
/// neutral drift `b += (1 - b) * lr` followed by the learning-rate decay.
pub fn apply_forces(layout: &mut TreeLayout, cfg: &SolverConfig) {
    for node in &mut layout.nodes {
        if node.spread > node.narrow {
            node.b = (cfg.push_factor * node.b).min(cfg.b_cap);
        } else if node.narrow > node.spread {
            node.b = cfg.pull_factor * node.b;
        }
        node.b += (1.0 - node.b) * node.lr;
        node.lr *= cfg.lr_decay;
        node.spread = 0;
        node.narrow = 0;
    }
}

#[cfg(feature = "std")]
struct Timer(std::time::Instant);
#[cfg(not(feature = "std"))]
struct Timer;

impl Timer {
    #[inline]
    fn start() -> Self {
        #[cfg(feature = "std")]
        {
            Timer(std::time::Instant::now())
        }
        #[cfg(not(feature = "std"))]
        {
            Timer
        }
    }

    #[inline]
    fn elapsed(&self) -> Duration {
        #[cfg(feature = "std")]
        {
            self.0.elapsed()
        }
        #[cfg(not(feature = "std"))]
        {
            Duration::ZERO
        }
    }
}

/// Stepwise driver around the relaxation loop. [`solve`] wraps it; tests
/// and tools that need per-iteration access drive it directly.
pub struct Solver<'a> {
    hierarchy: &'a Hierarchy,
    layout_cfg: LayoutConfig,
    solver_cfg: SolverConfig,
    eps: f64,
    layout: TreeLayout,
    pairs: Vec<CollisionPair>,
    stats: Vec<IterationStats>,
}

impl<'a> Solver<'a> {
    /// Builds the initial `b = 1` layout, seeds the learning rate, and
    /// records iteration 0 (the initial collision count).
    pub fn new(
        hierarchy: &'a Hierarchy,
        layout_cfg: LayoutConfig,
        solver_cfg: SolverConfig,
    ) -> Result<Self, GeometryError> {
        let timer = Timer::start();
        let mut layout = initial_layout(hierarchy, &layout_cfg)?;
        for node in &mut layout.nodes {
            node.lr = solver_cfg.lr_init;
        }
        let eps = solver_cfg.eps_rel * layout_cfg.root_width;
        let index = build_index(&layout);
        let pairs = find_collisions(&layout, &index, eps);
        let (min_b, max_b) = layout.min_max_b();
        let stats = alloc::vec![IterationStats {
            iteration: 0,
            collisions: pairs.len(),
            max_b,
            min_b,
            wall_time: timer.elapsed(),
        }];
        Ok(Solver {
            hierarchy,
            layout_cfg,
            solver_cfg,
            eps,
            layout,
            pairs,
            stats,
        })
    }

    pub fn resolved(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Iterations performed so far (0 right after construction).
    pub fn iteration(&self) -> usize {
        self.stats.len() - 1
    }

    pub fn layout(&self) -> &TreeLayout {
        &self.layout
    }

    pub fn collisions(&self) -> &[CollisionPair] {
        &self.pairs
    }

    pub fn stats(&self) -> &[IterationStats] {
        &self.stats
    }

    /// One full iteration: tally, forces, relayout, re-detect. Call only
    /// while collisions remain.
    pub fn step(&mut self) -> Result<&IterationStats, GeometryError> {
        let timer = Timer::start();
        tally_counters(self.hierarchy, &mut self.layout, &self.pairs);
        apply_forces(&mut self.layout, &self.solver_cfg);
        compute_rects(self.hierarchy, &mut self.layout, &self.layout_cfg)?;
        let index = build_index(&self.layout);
        self.pairs = find_collisions(&self.layout, &index, self.eps);
        let (min_b, max_b) = self.layout.min_max_b();
        self.stats.push(IterationStats {
            iteration: self.stats.len(),
            collisions: self.pairs.len(),
            max_b,
            min_b,
            wall_time: timer.elapsed(),
        });
        Ok(self.stats.last().expect("just pushed"))
    }

    /// Drives the loop to an overlap-free state or the iteration cap.
    pub fn run(mut self) -> Result<SolveResult, GeometryError> {
        while !self.resolved() && self.iteration() < self.solver_cfg.max_iterations {
            self.step()?;
        }
        let termination = if self.resolved() {
            Termination::Resolved
        } else {
            Termination::IterationCap
        };
        Ok(SolveResult {
            layout: self.layout,
            stats: self.stats,
            termination,
        })
    }
}

/// Relaxes the hierarchy's layout until overlap-free (or the cap).
pub fn solve(
    h: &Hierarchy,
    layout_cfg: LayoutConfig,
    solver_cfg: SolverConfig,
) -> Result<SolveResult, GeometryError> {
    Solver::new(h, layout_cfg, solver_cfg)?.run()
}
