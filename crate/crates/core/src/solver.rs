//! Exact strong rainbow connection and rainbow connection numbers, found by
//! iterating the color count upward from the diameter and searching set
//! partitions of the edge set in restricted-growth (first-use canonical)
//! order. Cut edges are forced into distinct classes, which is sound for both
//! verifiers. The first passing partition is the certificate, so output is
//! deterministic.

use std::time::{Duration, Instant};

use thiserror::Error;

use crate::coloring::{
    is_rainbow_connected, Color, EdgeColoring, GeodesicEngine,
};
use crate::graph::Graph;

pub use crate::constructions::src_upper_via_construction;

/// Examined-coloring ceiling; keeps worst cases near m = 14 from running
/// unbounded.
pub const DEFAULT_BUDGET: u64 = 50_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolverError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error(
        "budget exhausted after {examined} colorings; best known upper bound \
         {upper_bound} is not certified minimal"
    )]
    BudgetExceeded {
        examined: u64,
        upper_bound: usize,
        certificate: Vec<Color>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Src,
    Rc,
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Mode::Src => write!(f, "src"),
            Mode::Rc => write!(f, "rc"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SolveResult {
    /// The exact connection number.
    pub value: usize,
    /// A coloring achieving it, in first-use canonical form.
    pub certificate: EdgeColoring,
    /// Complete colorings handed to the verifier.
    pub examined: u64,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, Copy)]
pub struct SolveOptions {
    pub budget: u64,
    /// Verify pairs as soon as all edges on their geodesics are colored and
    /// prune failing prefixes. Off by default so the search trace stays a
    /// plain enumerate-then-verify loop.
    pub partial_pruning: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            budget: DEFAULT_BUDGET,
            partial_pruning: false,
        }
    }
}

pub fn src_exact(g: &Graph, budget: Option<u64>) -> Result<SolveResult, SolverError> {
    solve(
        g,
        Mode::Src,
        SolveOptions {
            budget: budget.unwrap_or(DEFAULT_BUDGET),
            ..SolveOptions::default()
        },
    )
}

pub fn rc_exact(g: &Graph, budget: Option<u64>) -> Result<SolveResult, SolverError> {
    solve(
        g,
        Mode::Rc,
        SolveOptions {
            budget: budget.unwrap_or(DEFAULT_BUDGET),
            ..SolveOptions::default()
        },
    )
}

pub fn solve(g: &Graph, mode: Mode, options: SolveOptions) -> Result<SolveResult, SolverError> {
    let start = Instant::now();
    let n = g.vertex_count();
    if n <= 1 {
        // the one-vertex graph needs no colors
        return Ok(SolveResult {
            value: 0,
            certificate: EdgeColoring::new(vec![]),
            examined: 0,
            elapsed: start.elapsed(),
        });
    }
    if !g.is_connected() {
        return Err(SolverError::Disconnected);
    }
    let m = g.edge_count();
    let diameter = g.diameter().expect("connected");
    let bridges = g.bridges().expect("connected");
    let mut is_bridge = vec![false; m];
    for &e in &bridges {
        is_bridge[e] = true;
    }
    // diameter and the cut-edge count both bound the answer from below
    let k_lo = diameter.max(bridges.len()).max(1);
    let engine = GeodesicEngine::new(g).expect("connected");
    let mut search = Search {
        g,
        engine: &engine,
        mode,
        is_bridge,
        colors: vec![0; m],
        bridge_in_class: vec![false; m],
        k: 0,
        examined: 0,
        budget: options.budget,
        due_pairs: if options.partial_pruning && mode == Mode::Src {
            Some(pairs_by_last_edge(g, &engine))
        } else {
            None
        },
    };
    for k in k_lo..=m {
        search.k = k;
        match search.run() {
            Outcome::Found(colors) => {
                return Ok(SolveResult {
                    value: k,
                    certificate: EdgeColoring::new(colors),
                    examined: search.examined,
                    elapsed: start.elapsed(),
                });
            }
            Outcome::Exhausted => {}
            Outcome::BudgetExhausted => {
                let (upper_bound, certificate) =
                    src_upper_via_construction(g).expect("connected graph has a bound");
                return Err(SolverError::BudgetExceeded {
                    examined: search.examined,
                    upper_bound,
                    certificate: certificate.colors().to_vec(),
                });
            }
        }
    }
    unreachable!("the all-distinct coloring at k = m always verifies");
}

/// For each edge, the vertex pairs whose geodesics all close at that edge:
/// once it is colored the pair's verdict is final.
fn pairs_by_last_edge(g: &Graph, engine: &GeodesicEngine) -> Vec<Vec<(usize, usize)>> {
    let mut due = vec![Vec::new(); g.edge_count()];
    for u in 0..g.vertex_count() {
        for v in (u + 1)..g.vertex_count() {
            let union = engine.geodesic_edge_union(u, v);
            if let Some(&last) = union.last() {
                due[last].push((u, v));
            }
        }
    }
    due
}

enum Outcome {
    Found(Vec<Color>),
    Exhausted,
    BudgetExhausted,
}

struct Search<'a> {
    g: &'a Graph,
    engine: &'a GeodesicEngine,
    mode: Mode,
    is_bridge: Vec<bool>,
    colors: Vec<Color>,
    bridge_in_class: Vec<bool>,
    k: usize,
    examined: u64,
    budget: u64,
    due_pairs: Option<Vec<Vec<(usize, usize)>>>,
}

impl Search<'_> {
    fn run(&mut self) -> Outcome {
        self.bridge_in_class.iter_mut().for_each(|b| *b = false);
        self.assign(0, 0)
    }

    fn assign(&mut self, edge: usize, used: usize) -> Outcome {
        let m = self.g.edge_count();
        if edge == m {
            if used != self.k {
                return Outcome::Exhausted;
            }
            if self.examined >= self.budget {
                return Outcome::BudgetExhausted;
            }
            self.examined += 1;
            if self.accepts() {
                return Outcome::Found(self.colors.clone());
            }
            return Outcome::Exhausted;
        }
        // not enough edges left to open the classes still missing
        if used + (m - edge) < self.k {
            return Outcome::Exhausted;
        }
        let open_new = usize::from(used < self.k);
        for c in 0..(used + open_new) {
            if self.is_bridge[edge] && self.bridge_in_class[c] {
                continue;
            }
            self.colors[edge] = c as Color;
            if self.is_bridge[edge] {
                self.bridge_in_class[c] = true;
            }
            let pruned = self
                .due_pairs
                .as_ref()
                .is_some_and(|due| !self.engine.pairs_ok(&self.colors, &due[edge]));
            if !pruned {
                let next_used = used.max(c + 1);
                match self.assign(edge + 1, next_used) {
                    Outcome::Exhausted => {}
                    done => {
                        if self.is_bridge[edge] {
                            self.bridge_in_class[c] = false;
                        }
                        return done;
                    }
                }
            }
            if self.is_bridge[edge] {
                self.bridge_in_class[c] = false;
            }
        }
        Outcome::Exhausted
    }

    fn accepts(&self) -> bool {
        match self.mode {
            Mode::Src => self.engine.first_failing_pair(&self.colors).is_none(),
            Mode::Rc => {
                let c = EdgeColoring::new(self.colors.clone());
                is_rainbow_connected(self.g, &c)
                    .map(|v| v.ok)
                    .unwrap_or(false)
            }
        }
    }
}

/// Whether any coloring with exactly `k` classes passes the verifier; used to
/// spot-check that solver values are minimal.
#[cfg(test)]
pub(crate) fn exists_coloring_with_k(g: &Graph, mode: Mode, k: usize) -> bool {
    let engine = GeodesicEngine::new(g).expect("connected");
    let m = g.edge_count();
    let bridges = g.bridges().expect("connected");
    let mut is_bridge = vec![false; m];
    for &e in &bridges {
        is_bridge[e] = true;
    }
    let mut search = Search {
        g,
        engine: &engine,
        mode,
        is_bridge,
        colors: vec![0; m],
        bridge_in_class: vec![false; m],
        k,
        examined: 0,
        budget: u64::MAX,
        due_pairs: None,
    };
    matches!(search.run(), Outcome::Found(_))
}
