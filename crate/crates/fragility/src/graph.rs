//! Undirected simple graphs and the perturbed-graph bookkeeping the attack
//! and estimation pipelines operate on.
//!
//! Conventions that everything downstream relies on:
//! - edges are stored as `(u, v)` with `u < v` and get stable ids in input
//!   order of first occurrence;
//! - component ids are dense and ordered by each component's smallest node,
//!   so labelings (and therefore trajectories) are reproducible;
//! - an edgeless graph has LCC size 1 (a lone node), which keeps `c >= 1`
//!   thresholds meaningful at full disintegration.

use std::collections::BTreeMap;

use crate::{Error, Result};

/// Immutable undirected simple graph: edge list plus adjacency index.
#[derive(Debug, Clone)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<(usize, usize)>>,
}

impl Graph {
    /// Normalizes pairs to `u < v`, drops duplicates (first occurrence keeps
    /// the edge id), and rejects self-loops and out-of-range endpoints.
    pub fn build(n: usize, pairs: &[(usize, usize)]) -> Result<Graph> {
        let mut dedup = std::collections::HashSet::new();
        let mut edges = Vec::with_capacity(pairs.len());
        for &(a, b) in pairs {
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            if a >= n {
                return Err(Error::EndpointOutOfRange { node: a, n });
            }
            if b >= n {
                return Err(Error::EndpointOutOfRange { node: b, n });
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            if dedup.insert((u, v)) {
                edges.push((u, v));
            }
        }
        let mut adjacency = vec![Vec::new(); n];
        for (id, &(u, v)) in edges.iter().enumerate() {
            adjacency[u].push((v, id));
            adjacency[v].push((u, id));
        }
        Ok(Graph {
            n,
            edges,
            adjacency,
        })
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Endpoints of an edge id, always `(u, v)` with `u < v`.
    pub fn endpoints(&self, edge: usize) -> (usize, usize) {
        self.edges[edge]
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// `(neighbor, edge id)` pairs incident to `v`, in edge insertion order.
    pub fn neighbors(&self, v: usize) -> &[(usize, usize)] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }
}

/// One removal step: which edge went, how large the LCC was afterwards, and
/// the destruction-function score that selected it (absent for random
/// removal).
#[derive(Debug, Clone, PartialEq)]
pub struct RemovalRecord {
    pub step: usize,
    pub edge: usize,
    pub lcc_size: usize,
    pub score: Option<f64>,
}

/// A perturbed graph: the base graph plus a presence mask over edge ids.
///
/// The removal trajectory logs recorded attack steps only; rewiring and
/// add-back manipulate the mask directly without appending to it.
#[derive(Debug, Clone)]
pub struct AttackState<'g> {
    graph: &'g Graph,
    present: Vec<bool>,
    removed: usize,
    trajectory: Vec<RemovalRecord>,
}

impl<'g> AttackState<'g> {
    pub fn new(graph: &'g Graph) -> AttackState<'g> {
        AttackState {
            graph,
            present: vec![true; graph.edge_count()],
            removed: 0,
            trajectory: Vec::new(),
        }
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn is_present(&self, edge: usize) -> bool {
        self.present[edge]
    }

    /// r = card(E \ E').
    pub fn removed_count(&self) -> usize {
        self.removed
    }

    pub fn present_count(&self) -> usize {
        self.graph.edge_count() - self.removed
    }

    pub fn trajectory(&self) -> &[RemovalRecord] {
        &self.trajectory
    }

    /// Raw mask edit used by rewiring and add-back; keeps `removed` in sync
    /// and leaves the trajectory untouched.
    pub fn set_edge_present(&mut self, edge: usize, value: bool) {
        if self.present[edge] != value {
            self.present[edge] = value;
            if value {
                self.removed -= 1;
            } else {
                self.removed += 1;
            }
        }
    }

    /// Removes a present edge as one recorded attack step. Returns the LCC
    /// size after the removal.
    pub fn record_removal(&mut self, edge: usize, score: Option<f64>) -> usize {
        assert!(self.present[edge], "removing an already-removed edge");
        self.present[edge] = false;
        self.removed += 1;
        let lcc_size = self.lcc_size();
        self.trajectory.push(RemovalRecord {
            step: self.trajectory.len() + 1,
            edge,
            lcc_size,
            score,
        });
        lcc_size
    }

    /// Removed edge ids in ascending order.
    pub fn removed_edge_ids(&self) -> Vec<usize> {
        (0..self.graph.edge_count())
            .filter(|&e| !self.present[e])
            .collect()
    }

    /// Present-graph degree of every node.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.graph.node_count()];
        for (e, &(u, v)) in self.graph.edges().iter().enumerate() {
            if self.present[e] {
                deg[u] += 1;
                deg[v] += 1;
            }
        }
        deg
    }

    /// Histogram degree -> node count over all nodes, including degree 0.
    pub fn degree_histogram(&self) -> BTreeMap<usize, usize> {
        let mut hist = BTreeMap::new();
        for d in self.degrees() {
            *hist.entry(d).or_insert(0) += 1;
        }
        hist
    }

    /// Connected components over present edges, labeled deterministically.
    pub fn components(&self) -> ComponentView {
        ComponentView::compute(self.graph, &self.present)
    }

    pub fn lcc_size(&self) -> usize {
        self.components().lcc_size()
    }
}

/// Deterministic component labeling: ids are dense, assigned in order of each
/// component's smallest node id.
#[derive(Debug, Clone)]
pub struct ComponentView {
    labels: Vec<usize>,
    sizes: Vec<usize>,
    lcc_id: usize,
    lcc_size: usize,
}

impl ComponentView {
    fn compute(graph: &Graph, present: &[bool]) -> ComponentView {
        let n = graph.node_count();
        let mut labels = vec![usize::MAX; n];
        let mut sizes = Vec::new();
        let mut queue = std::collections::VecDeque::new();
        for start in 0..n {
            if labels[start] != usize::MAX {
                continue;
            }
            let id = sizes.len();
            let mut size = 0usize;
            labels[start] = id;
            queue.push_back(start);
            while let Some(v) = queue.pop_front() {
                size += 1;
                for &(w, e) in graph.neighbors(v) {
                    if present[e] && labels[w] == usize::MAX {
                        labels[w] = id;
                        queue.push_back(w);
                    }
                }
            }
            sizes.push(size);
        }
        // First maximum = component with the smallest representative node.
        let mut lcc_id = 0;
        let mut lcc_size = 0;
        for (id, &size) in sizes.iter().enumerate() {
            if size > lcc_size {
                lcc_id = id;
                lcc_size = size;
            }
        }
        ComponentView {
            labels,
            sizes,
            lcc_id,
            lcc_size,
        }
    }

    pub fn label(&self, node: usize) -> usize {
        self.labels[node]
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn component_count(&self) -> usize {
        self.sizes.len()
    }

    pub fn lcc_id(&self) -> usize {
        self.lcc_id
    }

    /// Nodes of a graph with no edges still form size-1 components, so this
    /// is 1 for any edgeless graph with at least one node.
    pub fn lcc_size(&self) -> usize {
        self.lcc_size
    }

    /// Members of the largest component, ascending.
    pub fn lcc_members(&self) -> Vec<usize> {
        self.labels
            .iter()
            .enumerate()
            .filter(|&(_, &l)| l == self.lcc_id)
            .map(|(v, _)| v)
            .collect()
    }
}
