//! Structural detectors: unicyclic pendant-tree profiles, the unicyclic
//! classes behind the src = m-2 characterization, the bridge-or-triangle
//! class behind the m-2t bound, triangle packings, smallest-cycle
//! intersection patterns, and line graphs with their star-clique
//! decomposition.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Cycle, EdgeId, Graph, VertexId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StructureError {
    #[error("graph is not unicyclic")]
    NotUnicyclic,
    #[error("graph does not satisfy the bridge-or-triangle block conditions")]
    NotGBar,
    #[error("girth outside 3..=5 (or acyclic)")]
    GirthOutOfRange,
    #[error("graph is disconnected")]
    Disconnected,
}

/// The pendant tree hanging from one cycle vertex of a unicyclic graph.
#[derive(Debug, Clone)]
pub struct PendantTree {
    pub root: VertexId,
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

impl PendantTree {
    /// Has at least one edge.
    pub fn nontrivial(&self) -> bool {
        !self.edges.is_empty()
    }

    /// Nontrivial, forms a path, and the cycle vertex is one of its ends.
    pub fn is_endpoint_path(&self, g: &Graph) -> bool {
        if self.edges.is_empty() {
            return false;
        }
        let deg_in_tree = |v: VertexId| {
            self.edges
                .iter()
                .filter(|&&e| {
                    let (a, b) = g.endpoints(e);
                    a == v || b == v
                })
                .count()
        };
        self.vertices.iter().all(|&v| deg_in_tree(v) <= 2) && deg_in_tree(self.root) == 1
    }

    /// Least-id tree edge incident to the root; the deterministic pick for
    /// "reuse a color of this tree".
    pub fn root_edge(&self, g: &Graph) -> Option<EdgeId> {
        self.edges
            .iter()
            .copied()
            .filter(|&e| {
                let (a, b) = g.endpoints(e);
                a == self.root || b == self.root
            })
            .min()
    }
}

/// Cycle of a unicyclic graph plus the pendant tree rooted at each cycle
/// vertex. The trees partition the vertex set; their edges are exactly the
/// non-cycle edges.
#[derive(Debug, Clone)]
pub struct PendantProfile {
    pub cycle: Vec<VertexId>,
    pub cycle_edges: Vec<EdgeId>,
    pub trees: Vec<PendantTree>,
}

impl PendantProfile {
    pub fn cycle_len(&self) -> usize {
        self.cycle.len()
    }

    pub fn nontrivial_count(&self) -> usize {
        self.trees.iter().filter(|t| t.nontrivial()).count()
    }

    /// Edge id of the cycle edge from `cycle[i]` to `cycle[(i + 1) % k]`.
    pub fn cycle_edge(&self, i: usize) -> EdgeId {
        self.cycle_edges[i]
    }

    /// Rotates the canonical cycle labeling so position 0 is `start` and the
    /// walk optionally reverses; used by constructions to pin scheme roles.
    pub fn rotated(&self, start: usize, reverse: bool) -> PendantProfile {
        let k = self.cycle.len();
        let mut cycle = Vec::with_capacity(k);
        let mut trees = Vec::with_capacity(k);
        for step in 0..k {
            let idx = if reverse {
                (start + k - step) % k
            } else {
                (start + step) % k
            };
            cycle.push(self.cycle[idx]);
            trees.push(self.trees[idx].clone());
        }
        let mut cycle_edges = Vec::with_capacity(k);
        for step in 0..k {
            let idx = if reverse {
                // edge from new position step to step+1 is the old edge
                // entering position (start - step)
                (start + k - step - 1) % k
            } else {
                (start + step) % k
            };
            cycle_edges.push(self.cycle_edges[idx]);
        }
        PendantProfile {
            cycle,
            cycle_edges,
            trees,
        }
    }
}

/// Computes the pendant profile of a connected unicyclic graph. The cycle is
/// labeled canonically: start at its least vertex, walk toward that vertex's
/// least cycle neighbor.
pub fn pendant_profile(g: &Graph) -> Result<PendantProfile, StructureError> {
    if !g.is_connected() {
        return Err(StructureError::Disconnected);
    }
    if g.edge_count() != g.vertex_count() {
        return Err(StructureError::NotUnicyclic);
    }
    let n = g.vertex_count();
    // peel leaves until only the cycle remains
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut queue: Vec<VertexId> = (0..n).filter(|&v| deg[v] == 1).collect();
    while let Some(v) = queue.pop() {
        removed[v] = true;
        for &w in g.neighbors(v) {
            if !removed[w] {
                deg[w] -= 1;
                if deg[w] == 1 {
                    queue.push(w);
                }
            }
        }
    }
    let on_cycle: Vec<VertexId> = (0..n).filter(|&v| !removed[v]).collect();
    let start = on_cycle[0];
    let mut cycle = vec![start];
    let mut prev = start;
    let mut cur = *g
        .neighbors(start)
        .iter()
        .find(|&&w| !removed[w])
        .expect("cycle vertex has a cycle neighbor");
    while cur != start {
        cycle.push(cur);
        let next = *g
            .neighbors(cur)
            .iter()
            .find(|&&w| !removed[w] && w != prev)
            .expect("cycle continues");
        prev = cur;
        cur = next;
    }
    let k = cycle.len();
    let cycle_edges: Vec<EdgeId> = (0..k)
        .map(|i| g.edge_id(cycle[i], cycle[(i + 1) % k]).unwrap())
        .collect();
    // pendant trees: components of G minus the cycle edges, one per cycle
    // vertex
    let is_cycle_edge = {
        let mut flags = vec![false; g.edge_count()];
        for &e in &cycle_edges {
            flags[e] = true;
        }
        flags
    };
    let mut owner = vec![usize::MAX; n];
    let mut trees = Vec::with_capacity(k);
    for (i, &root) in cycle.iter().enumerate() {
        let mut vertices = vec![root];
        let mut edges = Vec::new();
        owner[root] = i;
        let mut stack = vec![root];
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                let e = g.edge_id(u, w).unwrap();
                if is_cycle_edge[e] {
                    continue;
                }
                if owner[w] == usize::MAX {
                    owner[w] = i;
                    vertices.push(w);
                    edges.push(e);
                    stack.push(w);
                }
            }
        }
        vertices.sort_unstable();
        edges.sort_unstable();
        trees.push(PendantTree {
            root,
            vertices,
            edges,
        });
    }
    Ok(PendantProfile {
        cycle,
        cycle_edges,
        trees,
    })
}

/// Structural class labels used by the theorem campaigns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum ClassLabel {
    /// Acyclic: src = rc = m.
    Tree,
    /// The 5-cycle itself.
    C5,
    /// Unicyclic, triangle cycle, at most two nontrivial pendant trees.
    G1,
    /// Unicyclic, 4-cycle, exactly two nonadjacent nontrivial pendant trees,
    /// each a path attached at an end.
    G2,
    /// Unicyclic, 4-cycle, at most one nontrivial pendant tree, which is a
    /// path attached at an end.
    G3,
    /// Every block a bridge or a triangle, exactly t triangles, each with a
    /// degree-2 vertex.
    GBar(usize),
    Other,
}

impl std::fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ClassLabel::Tree => write!(f, "Tree"),
            ClassLabel::C5 => write!(f, "C5"),
            ClassLabel::G1 => write!(f, "G1"),
            ClassLabel::G2 => write!(f, "G2"),
            ClassLabel::G3 => write!(f, "G3"),
            ClassLabel::GBar(t) => write!(f, "GBar({t})"),
            ClassLabel::Other => write!(f, "Other"),
        }
    }
}

/// All class labels applying to `g`.
pub fn classify(g: &Graph) -> Result<Vec<ClassLabel>, StructureError> {
    if !g.is_connected() {
        return Err(StructureError::Disconnected);
    }
    let mut labels = Vec::new();
    let n = g.vertex_count();
    let m = g.edge_count();
    if m + 1 == n {
        labels.push(ClassLabel::Tree);
    }
    if m == n && n >= 3 {
        let profile = pendant_profile(g)?;
        let k = profile.cycle_len();
        let nontrivial: Vec<&PendantTree> = profile
            .trees
            .iter()
            .filter(|t| t.nontrivial())
            .collect();
        match k {
            3 => {
                if nontrivial.len() <= 2 {
                    labels.push(ClassLabel::G1);
                }
            }
            4 => {
                let endpoint_paths =
                    nontrivial.iter().all(|t| t.is_endpoint_path(g));
                if nontrivial.len() == 2 && endpoint_paths {
                    let pos: Vec<usize> = profile
                        .trees
                        .iter()
                        .enumerate()
                        .filter(|(_, t)| t.nontrivial())
                        .map(|(i, _)| i)
                        .collect();
                    if (pos[1] - pos[0]) == 2 {
                        labels.push(ClassLabel::G2);
                    }
                } else if nontrivial.len() <= 1 && endpoint_paths || nontrivial.is_empty() {
                    labels.push(ClassLabel::G3);
                }
            }
            5
                if nontrivial.is_empty() => {
                    labels.push(ClassLabel::C5);
                }
            _ => {}
        }
    }
    if let Some(t) = gbar_triangle_count(g) {
        if t >= 1 {
            labels.push(ClassLabel::GBar(t));
        }
    }
    if labels.is_empty() {
        labels.push(ClassLabel::Other);
    }
    labels.sort();
    Ok(labels)
}

/// If every block of `g` is a bridge or a triangle and every triangle block
/// contains a degree-2 vertex, returns the number of triangle blocks.
pub fn gbar_triangle_count(g: &Graph) -> Option<usize> {
    let decomposition = g.blocks().ok()?;
    let mut t = 0;
    for block in &decomposition.blocks {
        match block.len() {
            1 => {}
            3 => {
                let mut vs: Vec<VertexId> = block
                    .iter()
                    .flat_map(|&e| {
                        let (a, b) = g.endpoints(e);
                        [a, b]
                    })
                    .collect();
                vs.sort_unstable();
                vs.dedup();
                if vs.len() != 3 {
                    return None;
                }
                if !vs.iter().any(|&v| g.degree(v) == 2) {
                    return None;
                }
                t += 1;
            }
            _ => return None,
        }
    }
    Some(t)
}

/// Membership test for the equality class of the m-2t bound: exactly `t`
/// triangles, all blocks bridges or triangles, each triangle with a degree-2
/// vertex. `t = 0` means a tree.
pub fn is_gbar(g: &Graph, t: usize) -> bool {
    gbar_triangle_count(g) == Some(t)
}

/// Deletes one degree-2 vertex (least id) per triangle block, yielding a tree
/// with m - 2t edges. Vertices are relabeled densely in ascending order.
pub fn d2_tree(g: &Graph) -> Result<Graph, StructureError> {
    let t = gbar_triangle_count(g).ok_or(StructureError::NotGBar)?;
    if t == 0 {
        return Err(StructureError::NotGBar);
    }
    let decomposition = g.blocks().map_err(|_| StructureError::Disconnected)?;
    let mut drop = vec![false; g.vertex_count()];
    for block in &decomposition.blocks {
        if block.len() != 3 {
            continue;
        }
        let mut vs: Vec<VertexId> = block
            .iter()
            .flat_map(|&e| {
                let (a, b) = g.endpoints(e);
                [a, b]
            })
            .collect();
        vs.sort_unstable();
        vs.dedup();
        let victim = *vs
            .iter()
            .find(|&&v| g.degree(v) == 2)
            .expect("gbar triangle has a degree-2 vertex");
        drop[victim] = true;
    }
    let mut relabel = vec![usize::MAX; g.vertex_count()];
    let mut next = 0;
    for v in 0..g.vertex_count() {
        if !drop[v] {
            relabel[v] = next;
            next += 1;
        }
    }
    let pairs: Vec<(VertexId, VertexId)> = g
        .edges()
        .iter()
        .filter(|&&(u, v)| !drop[u] && !drop[v])
        .map(|&(u, v)| (relabel[u], relabel[v]))
        .collect();
    Ok(Graph::from_edge_list(next, &pairs).expect("relabeled edges valid"))
}

/// A triangle listed by its vertex triple and sorted edge ids.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Triangle {
    pub vertices: [VertexId; 3],
    pub edges: [EdgeId; 3],
}

/// Pairwise edge-disjoint triangles. `certified_max` marks packings produced
/// by the exact search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrianglePacking {
    pub triangles: Vec<Triangle>,
    pub certified_max: bool,
}

impl TrianglePacking {
    pub fn t(&self) -> usize {
        self.triangles.len()
    }

    /// Checks the triangles exist in `g` and are pairwise edge-disjoint.
    pub fn valid_in(&self, g: &Graph) -> bool {
        let mut used = vec![false; g.edge_count()];
        for tri in &self.triangles {
            let [a, b, c] = tri.vertices;
            if !(g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c)) {
                return false;
            }
            for &e in &tri.edges {
                if e >= g.edge_count() || used[e] {
                    return false;
                }
                used[e] = true;
            }
        }
        true
    }
}

/// All triangles of `g` in ascending vertex-triple order.
pub fn all_triangles(g: &Graph) -> Vec<Triangle> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    for a in 0..n {
        for &b in g.neighbors(a).iter().filter(|&&b| b > a) {
            for &c in g.neighbors(b).iter().filter(|&&c| c > b) {
                if g.has_edge(a, c) {
                    out.push(Triangle {
                        vertices: [a, b, c],
                        edges: {
                            let mut e = [
                                g.edge_id(a, b).unwrap(),
                                g.edge_id(b, c).unwrap(),
                                g.edge_id(a, c).unwrap(),
                            ];
                            e.sort_unstable();
                            e
                        },
                    });
                }
            }
        }
    }
    out
}

/// Maximum (or greedy) set of pairwise edge-disjoint triangles.
///
/// Exact mode backtracks over the triangle list with edge-availability
/// pruning and returns the first maximum found in lexicographic order;
/// greedy mode scans once and is not certified maximal.
pub fn max_edge_disjoint_triangles(g: &Graph, exact: bool) -> TrianglePacking {
    let triangles = all_triangles(g);
    if !exact {
        let mut used = vec![false; g.edge_count()];
        let mut chosen = Vec::new();
        for tri in &triangles {
            if tri.edges.iter().all(|&e| !used[e]) {
                for &e in &tri.edges {
                    used[e] = true;
                }
                chosen.push(tri.clone());
            }
        }
        return TrianglePacking {
            triangles: chosen,
            certified_max: false,
        };
    }
    let mut best: Vec<usize> = Vec::new();
    let mut current: Vec<usize> = Vec::new();
    let mut used = vec![false; g.edge_count()];
    pack_dfs(&triangles, 0, &mut used, &mut current, &mut best);
    TrianglePacking {
        triangles: best.iter().map(|&i| triangles[i].clone()).collect(),
        certified_max: true,
    }
}

fn pack_dfs(
    triangles: &[Triangle],
    idx: usize,
    used: &mut Vec<bool>,
    current: &mut Vec<usize>,
    best: &mut Vec<usize>,
) {
    if current.len() + (triangles.len() - idx) <= best.len() {
        return;
    }
    if idx == triangles.len() {
        if current.len() > best.len() {
            *best = current.clone();
        }
        return;
    }
    let tri = &triangles[idx];
    if tri.edges.iter().all(|&e| !used[e]) {
        for &e in &tri.edges {
            used[e] = true;
        }
        current.push(idx);
        pack_dfs(triangles, idx + 1, used, current, best);
        current.pop();
        for &e in &tri.edges {
            used[e] = false;
        }
    }
    pack_dfs(triangles, idx + 1, used, current, best);
}

/// How the two smallest cycles intersect.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Lemma1Pattern {
    OneCommonEdge,
    TwoCommonAdjacentEdges,
    EdgeDisjoint4Cycles,
    FewerThanTwoCommonVertices,
    NoSecondCycle,
    /// Intersection shape outside the enumerated list; reported so theorem
    /// violations surface as counterexamples instead of panics.
    Other,
}

impl std::fmt::Display for Lemma1Pattern {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Lemma1Pattern::OneCommonEdge => "one-common-edge",
            Lemma1Pattern::TwoCommonAdjacentEdges => "two-common-adjacent-edges",
            Lemma1Pattern::EdgeDisjoint4Cycles => "edge-disjoint-4-cycles",
            Lemma1Pattern::FewerThanTwoCommonVertices => "fewer-than-two-common-vertices",
            Lemma1Pattern::NoSecondCycle => "no-second-cycle",
            Lemma1Pattern::Other => "other",
        };
        write!(f, "{s}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lemma1Config {
    pub girth: usize,
    pub pattern: Lemma1Pattern,
    /// The canonical smallest pair, when a second cycle exists.
    pub cycles: Option<(Cycle, Cycle)>,
}

/// Intersection pattern of the two canonical smallest cycles, for graphs of
/// girth 3 to 5.
pub fn lemma1_configuration(g: &Graph) -> Result<Lemma1Config, StructureError> {
    if !g.is_connected() {
        return Err(StructureError::Disconnected);
    }
    let girth = match g.girth() {
        Some(x) if (3..=5).contains(&x) => x,
        _ => return Err(StructureError::GirthOutOfRange),
    };
    let Some((c1, c2)) = g.smallest_two_cycles() else {
        return Ok(Lemma1Config {
            girth,
            pattern: Lemma1Pattern::NoSecondCycle,
            cycles: None,
        });
    };
    let shared_vertices = c1
        .vertices
        .iter()
        .filter(|v| c2.vertices.contains(v))
        .count();
    let shared_edges: Vec<EdgeId> = c1
        .edge_ids
        .iter()
        .copied()
        .filter(|e| c2.contains_edge(*e))
        .collect();
    let pattern = if shared_vertices < 2 {
        Lemma1Pattern::FewerThanTwoCommonVertices
    } else {
        match shared_edges.len() {
            1 => Lemma1Pattern::OneCommonEdge,
            2 => {
                let (a1, b1) = g.endpoints(shared_edges[0]);
                let (a2, b2) = g.endpoints(shared_edges[1]);
                if a1 == a2 || a1 == b2 || b1 == a2 || b1 == b2 {
                    Lemma1Pattern::TwoCommonAdjacentEdges
                } else {
                    Lemma1Pattern::Other
                }
            }
            0 if c1.len() == 4 && c2.len() == 4 => Lemma1Pattern::EdgeDisjoint4Cycles,
            _ => Lemma1Pattern::Other,
        }
    };
    Ok(Lemma1Config {
        girth,
        pattern,
        cycles: Some((c1, c2)),
    })
}

/// Line graph: vertex i of the result is edge i of `g`; result edges pair
/// incident edges of `g`, in row-major order.
pub fn line_graph(g: &Graph) -> Graph {
    let m = g.edge_count();
    let mut pairs = Vec::new();
    for e1 in 0..m {
        let (a1, b1) = g.endpoints(e1);
        for e2 in (e1 + 1)..m {
            let (a2, b2) = g.endpoints(e2);
            if a1 == a2 || a1 == b2 || b1 == a2 || b1 == b2 {
                pairs.push((e1, e2));
            }
        }
    }
    Graph::from_edge_list(m, &pairs).expect("line graph edges valid")
}

/// Star cliques of the line graph: for each inner vertex v of `g` (degree at
/// least 2), the set of `g`-edges at v, read as a vertex set of `L(g)`.
/// Together these form a clique decomposition of `L(g)`.
pub fn star_cliques(g: &Graph) -> Vec<Vec<VertexId>> {
    (0..g.vertex_count())
        .filter(|&v| g.degree(v) >= 2)
        .map(|v| {
            let mut ids: Vec<EdgeId> = g
                .neighbors(v)
                .iter()
                .map(|&w| g.edge_id(v, w).unwrap())
                .collect();
            ids.sort_unstable();
            ids
        })
        .collect()
}

pub fn is_cubic(g: &Graph) -> bool {
    (0..g.vertex_count()).all(|v| g.degree(v) == 3)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::testutil::*;

    #[test]
    fn pendant_profile_shapes() {
        // C4 with a pendant edge: one nontrivial tree, endpoint path
        let g = graph(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)]);
        let p = pendant_profile(&g).unwrap();
        assert_eq!(p.cycle_len(), 4);
        assert_eq!(p.nontrivial_count(), 1);
        let t = p.trees.iter().find(|t| t.nontrivial()).unwrap();
        assert!(t.is_endpoint_path(&g));

        let p = pendant_profile(&cycle_graph(5)).unwrap();
        assert_eq!(p.nontrivial_count(), 0);

        // triangle with a K_{1,3} whose center is a cycle vertex: nontrivial
        // non-path tree
        let g = graph(6, &[(0, 1), (1, 2), (2, 0), (0, 3), (0, 4), (0, 5)]);
        let p = pendant_profile(&g).unwrap();
        assert_eq!(p.nontrivial_count(), 1);
        let t = p.trees.iter().find(|t| t.nontrivial()).unwrap();
        assert!(!t.is_endpoint_path(&g));
    }

    #[test]
    fn pendant_profile_partitions() {
        let g = graph(
            8,
            &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (1, 5), (5, 6), (6, 7)],
        );
        let p = pendant_profile(&g).unwrap();
        let mut vs: Vec<VertexId> = p.trees.iter().flat_map(|t| t.vertices.clone()).collect();
        vs.sort_unstable();
        assert_eq!(vs, (0..8).collect::<Vec<_>>());
        let mut es: Vec<EdgeId> = p.trees.iter().flat_map(|t| t.edges.clone()).collect();
        es.extend_from_slice(&p.cycle_edges);
        es.sort_unstable();
        assert_eq!(es, (0..8).collect::<Vec<_>>());
    }

    #[test]
    fn pendant_profile_rejects_non_unicyclic() {
        assert_eq!(
            pendant_profile(&path_graph(4)).unwrap_err(),
            StructureError::NotUnicyclic
        );
        assert_eq!(
            pendant_profile(&complete_graph(4)).unwrap_err(),
            StructureError::NotUnicyclic
        );
    }

    #[test]
    fn classify_examples() {
        // triangle + pendant edge
        let g = graph(4, &[(0, 1), (1, 2), (2, 0), (0, 3)]);
        assert_eq!(classify(&g).unwrap(), vec![ClassLabel::G1, ClassLabel::GBar(1)]);

        // C4 with two nonadjacent pendant paths
        let g = graph(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (2, 5)]);
        assert_eq!(classify(&g).unwrap(), vec![ClassLabel::G2]);

        assert_eq!(classify(&bowtie()).unwrap(), vec![ClassLabel::GBar(2)]);
        assert_eq!(classify(&complete_graph(4)).unwrap(), vec![ClassLabel::Other]);
        assert_eq!(classify(&cycle_graph(5)).unwrap(), vec![ClassLabel::C5]);
        assert_eq!(classify(&path_graph(4)).unwrap(), vec![ClassLabel::Tree]);
        assert_eq!(classify(&cycle_graph(4)).unwrap(), vec![ClassLabel::G3]);
        assert_eq!(
            classify(&complete_graph(3)).unwrap(),
            vec![ClassLabel::G1, ClassLabel::GBar(1)]
        );
    }

    #[test]
    fn classify_endpoint_reading_of_paths() {
        // C4 with a 2-edge path attached at its middle vertex is NOT in the
        // one-nontrivial-tree class: the tree is a path but the cycle vertex
        // sits inside it.
        let g = graph(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (0, 5)]);
        let labels = classify(&g).unwrap();
        assert!(!labels.contains(&ClassLabel::G3));
        assert_eq!(labels, vec![ClassLabel::Other]);

        // attached at an end it is a member
        let g = graph(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5)]);
        assert_eq!(classify(&g).unwrap(), vec![ClassLabel::G3]);
    }

    #[test]
    fn gbar_conditions() {
        assert_eq!(gbar_triangle_count(&bowtie()), Some(2));
        assert_eq!(gbar_triangle_count(&path_graph(4)), Some(0));
        assert!(is_gbar(&path_graph(4), 0));
        // K4 block is neither bridge nor triangle
        assert_eq!(gbar_triangle_count(&complete_graph(4)), None);
        // two triangles sharing an edge: blocks contain a 4-vertex block
        let diamond = graph(4, &[(0, 1), (1, 2), (2, 0), (0, 3), (1, 3)]);
        assert_eq!(gbar_triangle_count(&diamond), None);
        // triangle where every vertex has degree >= 3 violates the
        // degree-2 condition
        let g = graph(
            6,
            &[(0, 1), (1, 2), (2, 0), (0, 3), (1, 4), (2, 5)],
        );
        assert_eq!(gbar_triangle_count(&g), None);
    }

    #[test]
    fn d2_tree_shapes() {
        let t = d2_tree(&bowtie()).unwrap();
        assert_eq!(t.edge_count(), 2); // 6 - 2*2
        assert!(t.is_connected());
        assert!(brute_force_isomorphic(&t, &path_graph(3)));

        let t = d2_tree(&complete_graph(3)).unwrap();
        assert_eq!(t.edge_count(), 1);

        // two triangles joined by a path, t = 2: tree with m - 4 edges
        let g = graph(
            7,
            &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6), (6, 4)],
        );
        assert_eq!(gbar_triangle_count(&g), Some(2));
        let t = d2_tree(&g).unwrap();
        assert_eq!(t.edge_count(), g.edge_count() - 4);
        assert!(t.is_connected());
        assert_eq!(t.girth(), None);

        assert_eq!(
            d2_tree(&complete_graph(4)).unwrap_err(),
            StructureError::NotGBar
        );
        assert_eq!(d2_tree(&path_graph(3)).unwrap_err(), StructureError::NotGBar);
    }

    #[test]
    fn triangle_packing_examples() {
        assert_eq!(max_edge_disjoint_triangles(&complete_graph(4), true).t(), 1);
        assert_eq!(max_edge_disjoint_triangles(&bowtie(), true).t(), 2);
        assert_eq!(max_edge_disjoint_triangles(&cycle_graph(5), true).t(), 0);
        // K5 packs two edge-disjoint triangles
        assert_eq!(max_edge_disjoint_triangles(&complete_graph(5), true).t(), 2);
    }

    #[test]
    fn exact_packing_matches_subset_oracle() {
        let samples = [
            complete_graph(4),
            complete_graph(5),
            bowtie(),
            graph(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2), (4, 5), (5, 0)]),
        ];
        for g in samples {
            let exact = max_edge_disjoint_triangles(&g, true);
            assert!(exact.valid_in(&g));
            assert_eq!(exact.t(), oracle_max_packing(&g));
            let greedy = max_edge_disjoint_triangles(&g, false);
            assert!(greedy.valid_in(&g));
            assert!(!greedy.certified_max);
            assert!(exact.t() >= greedy.t());
        }
    }

    /// Independent oracle: test every subset of the triangle list.
    fn oracle_max_packing(g: &Graph) -> usize {
        let tris = all_triangles(g);
        assert!(tris.len() <= 20);
        let mut best = 0;
        for mask in 0u32..(1 << tris.len()) {
            let chosen: Vec<&Triangle> = tris
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .map(|(_, t)| t)
                .collect();
            let mut edges: Vec<EdgeId> =
                chosen.iter().flat_map(|t| t.edges.to_vec()).collect();
            edges.sort_unstable();
            let disjoint = edges.windows(2).all(|w| w[0] != w[1]);
            if disjoint {
                best = best.max(chosen.len());
            }
        }
        best
    }

    #[test]
    fn lemma1_patterns() {
        // two triangles sharing an edge
        let diamond = graph(4, &[(0, 1), (1, 2), (2, 0), (0, 3), (1, 3)]);
        let cfg = lemma1_configuration(&diamond).unwrap();
        assert_eq!((cfg.girth, cfg.pattern), (3, Lemma1Pattern::OneCommonEdge));

        // two 4-cycles sharing two antipodal vertices
        let g = graph(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 2), (2, 5), (5, 0)]);
        let cfg = lemma1_configuration(&g).unwrap();
        assert_eq!(cfg.girth, 4);
        assert!(matches!(
            cfg.pattern,
            Lemma1Pattern::EdgeDisjoint4Cycles | Lemma1Pattern::TwoCommonAdjacentEdges
        ));

        let cfg = lemma1_configuration(&bowtie()).unwrap();
        assert_eq!(
            (cfg.girth, cfg.pattern),
            (3, Lemma1Pattern::FewerThanTwoCommonVertices)
        );

        let cfg = lemma1_configuration(&cycle_graph(4)).unwrap();
        assert_eq!(cfg.pattern, Lemma1Pattern::NoSecondCycle);

        assert_eq!(
            lemma1_configuration(&cycle_graph(6)).unwrap_err(),
            StructureError::GirthOutOfRange
        );
        assert_eq!(
            lemma1_configuration(&path_graph(4)).unwrap_err(),
            StructureError::GirthOutOfRange
        );
    }

    #[test]
    fn line_graph_shapes() {
        assert!(brute_force_isomorphic(&line_graph(&path_graph(4)), &path_graph(3)));

        // L(K4) is the octahedron: 6 vertices, 12 edges, 4-regular
        let l = line_graph(&complete_graph(4));
        assert_eq!(l.vertex_count(), 6);
        assert_eq!(l.edge_count(), 12);
        assert!((0..6).all(|v| l.degree(v) == 4));
    }

    #[test]
    fn star_cliques_decompose_line_graph() {
        for g in [complete_graph(4), petersen(), bowtie(), path_graph(5)] {
            let l = line_graph(&g);
            let cliques = star_cliques(&g);
            // each clique really is a clique in L(g)
            for clique in &cliques {
                for (i, &a) in clique.iter().enumerate() {
                    for &b in &clique[i + 1..] {
                        assert!(l.has_edge(a, b));
                    }
                }
            }
            // every edge of L(g) lies in exactly one clique
            for &(a, b) in l.edges() {
                let containing = cliques
                    .iter()
                    .filter(|c| c.contains(&a) && c.contains(&b))
                    .count();
                assert_eq!(containing, 1);
            }
            // each L(g) vertex lies in at most two cliques
            for v in 0..l.vertex_count() {
                let containing = cliques.iter().filter(|c| c.contains(&v)).count();
                assert!(containing <= 2);
            }
        }
    }

    #[test]
    fn star_cliques_of_k4_are_four_triangles() {
        let cliques = star_cliques(&complete_graph(4));
        assert_eq!(cliques.len(), 4);
        assert!(cliques.iter().all(|c| c.len() == 3));
    }

    #[test]
    fn cubic_detection() {
        assert!(is_cubic(&complete_graph(4)));
        let k33 = graph(6, &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]);
        assert!(is_cubic(&k33));
        assert!(!is_cubic(&cycle_graph(5)));
    }
}
