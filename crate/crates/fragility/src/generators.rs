//! Graph family generators: complete, CEB, GB, Erdos-Renyi,
//! Barabasi-Albert, Watts-Strogatz (with exact-edge-count trimming), and
//! proximity graphs built from device layout scenes.
//!
//! Every generator is a pure function of `(parameters, seed)`; reruns are
//! byte-identical.

use std::collections::HashSet;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::{Error, Graph, Result};

/// Family tag plus family-specific parameters.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum GenFamily {
    Complete,
    Ceb,
    Gb,
    Er { p: f64 },
    Ba { m_attach: usize },
    Ws { k: usize, p_rewire: f64 },
    Proximity { scene: LayoutScene },
}

/// A reproducible generation request: family, size, optional trim target,
/// and the seed that fixes every random choice.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct GeneratorConfig {
    pub n: usize,
    #[serde(flatten)]
    pub family: GenFamily,
    pub target_edge_count: Option<usize>,
    pub seed: u64,
}

impl GeneratorConfig {
    pub fn generate(&self) -> Result<Graph> {
        let g = match &self.family {
            GenFamily::Complete => gen_complete(self.n)?,
            GenFamily::Ceb => gen_ceb(self.n)?,
            GenFamily::Gb => gen_gb(self.n)?,
            GenFamily::Er { p } => gen_er(self.n, *p, self.seed)?,
            GenFamily::Ba { m_attach } => gen_ba(self.n, *m_attach, self.seed)?,
            GenFamily::Ws { k, p_rewire } => gen_ws(self.n, *k, *p_rewire, self.seed)?,
            GenFamily::Proximity { scene } => gen_proximity(scene)?,
        };
        match self.target_edge_count {
            // Derive the trim stream from the same seed; generation above
            // uses a fresh rng internally so the two stay independent.
            Some(target) => trim_to_edge_count(&g, target, self.seed ^ 0x7461_7267_6574),
            None => Ok(g),
        }
    }

    /// Short human-readable id used in reports and manifests.
    pub fn describe(&self) -> String {
        let base = match &self.family {
            GenFamily::Complete => format!("complete(n={})", self.n),
            GenFamily::Ceb => format!("ceb(n={})", self.n),
            GenFamily::Gb => format!("gb(n={})", self.n),
            GenFamily::Er { p } => format!("er(n={},p={})", self.n, p),
            // Name the attachment variant so reports pin down which BA
            // construction produced the graph.
            GenFamily::Ba { m_attach } => {
                format!("ba(n={},m={},init=clique)", self.n, m_attach)
            }
            GenFamily::Ws { k, p_rewire } => {
                format!("ws(n={},k={},p={})", self.n, k, p_rewire)
            }
            GenFamily::Proximity { scene } => {
                format!("proximity(devices={})", scene.devices.len())
            }
        };
        match self.target_edge_count {
            Some(t) => format!("{base},trim={t},seed={}", self.seed),
            None => format!("{base},seed={}", self.seed),
        }
    }
}

pub fn gen_complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidParam("complete graph requires n >= 1".into()));
    }
    let mut pairs = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in (u + 1)..n {
            pairs.push((u, v));
        }
    }
    Graph::build(n, &pairs)
}

/// Complete equitable bipartite graph: parts of size `ceil(n/2)` and
/// `floor(n/2)` with every cross edge present.
pub fn gen_ceb(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidParam("ceb graph requires n >= 2".into()));
    }
    let left = n.div_ceil(2);
    let mut pairs = Vec::new();
    for u in 0..left {
        for v in left..n {
            pairs.push((u, v));
        }
    }
    Graph::build(n, &pairs)
}

/// Generalized barbell: two disjoint `K_{n/2}` plus exactly `n` bridges.
/// Bridge placement is deterministic (node `i` of the first half connects to
/// nodes `i` and `i+1 mod n/2` of the second) so closed-form tests stay
/// exact.
pub fn gen_gb(n: usize) -> Result<Graph> {
    if !n.is_multiple_of(2) || n < 4 {
        return Err(Error::InvalidParam(format!(
            "gb graph requires even n >= 4, got {n}"
        )));
    }
    let half = n / 2;
    let mut pairs = Vec::new();
    for u in 0..half {
        for v in (u + 1)..half {
            pairs.push((u, v));
            pairs.push((half + u, half + v));
        }
    }
    for i in 0..half {
        pairs.push((i, half + i));
        pairs.push((i, half + (i + 1) % half));
    }
    Graph::build(n, &pairs)
}

pub fn gen_er(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidParam("er graph requires n >= 1".into()));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParam(format!(
            "er probability {p} outside [0, 1]"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen::<f64>() < p {
                pairs.push((u, v));
            }
        }
    }
    Graph::build(n, &pairs)
}

/// Barabasi-Albert preferential attachment. Starts from a complete seed
/// graph on `m_attach + 1` nodes; each later node attaches to `m_attach`
/// distinct existing nodes sampled proportionally to degree (without
/// replacement), so the edge count is exactly
/// `C(m_attach + 1, 2) + (n - m_attach - 1) * m_attach`.
pub fn gen_ba(n: usize, m_attach: usize, seed: u64) -> Result<Graph> {
    if m_attach < 1 || n < m_attach + 1 {
        return Err(Error::InvalidParam(format!(
            "ba graph requires 1 <= m_attach < n, got m_attach={m_attach}, n={n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let core = m_attach + 1;
    let mut pairs = Vec::new();
    // One entry per endpoint; sampling an index is degree-proportional.
    let mut endpoint_pool = Vec::new();
    for u in 0..core {
        for v in (u + 1)..core {
            pairs.push((u, v));
            endpoint_pool.push(u);
            endpoint_pool.push(v);
        }
    }
    for v in core..n {
        let mut chosen = std::collections::BTreeSet::new();
        while chosen.len() < m_attach {
            let t = endpoint_pool[rng.gen_range(0..endpoint_pool.len())];
            chosen.insert(t);
        }
        for &t in &chosen {
            pairs.push((t, v));
            endpoint_pool.push(t);
            endpoint_pool.push(v);
        }
    }
    Graph::build(n, &pairs)
}

/// Watts-Strogatz small world: ring lattice of even degree `k`, then each
/// clockwise lattice edge is rewired to a uniform non-neighbor with
/// probability `p_rewire`. The edge count stays `n * k / 2`.
pub fn gen_ws(n: usize, k: usize, p_rewire: f64, seed: u64) -> Result<Graph> {
    if !k.is_multiple_of(2) || k < 2 || k >= n {
        return Err(Error::InvalidParam(format!(
            "ws graph requires even k with 2 <= k < n, got k={k}, n={n}"
        )));
    }
    if !(0.0..=1.0).contains(&p_rewire) {
        return Err(Error::InvalidParam(format!(
            "ws rewire probability {p_rewire} outside [0, 1]"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let norm = |a: usize, b: usize| if a < b { (a, b) } else { (b, a) };
    // Oriented lattice edges (owner, target); the owner keeps its end on
    // rewire, matching the usual construction.
    let mut oriented: Vec<(usize, usize)> = Vec::with_capacity(n * k / 2);
    for j in 1..=(k / 2) {
        for u in 0..n {
            oriented.push((u, (u + j) % n));
        }
    }
    let mut edge_set: HashSet<(usize, usize)> = oriented.iter().map(|&(a, b)| norm(a, b)).collect();
    let mut degrees = vec![k; n];
    // Indexed loop: the body replaces oriented[idx] while sampling.
    #[allow(clippy::needless_range_loop)]
    for idx in 0..oriented.len() {
        if rng.gen::<f64>() >= p_rewire {
            continue;
        }
        let (u, v) = oriented[idx];
        if degrees[u] >= n - 1 {
            continue;
        }
        loop {
            let w = rng.gen_range(0..n);
            if w == u || edge_set.contains(&norm(u, w)) {
                continue;
            }
            edge_set.remove(&norm(u, v));
            edge_set.insert(norm(u, w));
            oriented[idx] = (u, w);
            degrees[v] -= 1;
            degrees[w] += 1;
            break;
        }
    }
    let pairs: Vec<(usize, usize)> = oriented.iter().map(|&(a, b)| norm(a, b)).collect();
    Graph::build(n, &pairs)
}

/// Deletes uniformly random edges until exactly `target` remain. Surviving
/// edges keep their relative order and get fresh contiguous ids.
pub fn trim_to_edge_count(g: &Graph, target: usize, seed: u64) -> Result<Graph> {
    let m = g.edge_count();
    if target > m {
        return Err(Error::TargetExceedsEdgeCount { target, m });
    }
    if target == m {
        return Ok(g.clone());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let drop: HashSet<usize> = sample(&mut rng, m, m - target).into_iter().collect();
    let pairs: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .enumerate()
        .filter(|(e, _)| !drop.contains(e))
        .map(|(_, &pair)| pair)
        .collect();
    Graph::build(g.node_count(), &pairs)
}

/// Device positions and wall segments for proximity-graph construction.
/// Distances are in meters; `base_range` defaults to ten meters.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct LayoutScene {
    #[serde(default = "default_base_range")]
    pub base_range: f64,
    pub devices: Vec<Device>,
    #[serde(default)]
    pub walls: Vec<Wall>,
}

fn default_base_range() -> f64 {
    10.0
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct Device {
    pub id: i64,
    pub x: f64,
    pub y: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct Wall {
    pub x1: f64,
    pub y1: f64,
    pub x2: f64,
    pub y2: f64,
}

impl LayoutScene {
    pub fn validate(&self) -> Result<()> {
        if self.base_range.is_nan() || self.base_range <= 0.0 {
            return Err(Error::InvalidParam(format!(
                "base_range must be positive, got {}",
                self.base_range
            )));
        }
        let mut ids = HashSet::new();
        for d in &self.devices {
            if !ids.insert(d.id) {
                return Err(Error::InvalidParam(format!("duplicate device id {}", d.id)));
            }
        }
        Ok(())
    }

    pub fn from_json(text: &str) -> Result<LayoutScene> {
        let scene: LayoutScene =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("scene json: {e}")))?;
        scene.validate()?;
        Ok(scene)
    }
}

/// Connects device pairs within range: devices `i`, `j` are linked iff
/// `dist(i, j) <= base_range / 2^w` where `w` counts walls crossed by the
/// segment between them. Nodes are device indexes in scene order.
pub fn gen_proximity(scene: &LayoutScene) -> Result<Graph> {
    scene.validate()?;
    let d = &scene.devices;
    let mut pairs = Vec::new();
    for i in 0..d.len() {
        for j in (i + 1)..d.len() {
            let dist = ((d[i].x - d[j].x).powi(2) + (d[i].y - d[j].y).powi(2)).sqrt();
            let crossings = scene
                .walls
                .iter()
                .filter(|w| {
                    segments_touch(
                        (d[i].x, d[i].y),
                        (d[j].x, d[j].y),
                        (w.x1, w.y1),
                        (w.x2, w.y2),
                    )
                })
                .count();
            let range = scene.base_range / f64::powi(2.0, crossings as i32);
            if dist <= range {
                pairs.push((i, j));
            }
        }
    }
    Graph::build(d.len(), &pairs)
}

type Point = (f64, f64);

fn orient(a: Point, b: Point, c: Point) -> f64 {
    (b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0)
}

fn on_segment(a: Point, b: Point, p: Point) -> bool {
    p.0 >= a.0.min(b.0) && p.0 <= a.0.max(b.0) && p.1 >= a.1.min(b.1) && p.1 <= a.1.max(b.1)
}

/// Inclusive segment intersection: endpoint contact and collinear overlap
/// count as touching, which resolves degenerate wall geometry toward
/// disconnection (one extra halving rather than none).
fn segments_touch(p1: Point, p2: Point, q1: Point, q2: Point) -> bool {
    let o1 = orient(p1, p2, q1);
    let o2 = orient(p1, p2, q2);
    let o3 = orient(q1, q2, p1);
    let o4 = orient(q1, q2, p2);
    if o1 * o2 < 0.0 && o3 * o4 < 0.0 {
        return true;
    }
    (o1 == 0.0 && on_segment(p1, p2, q1))
        || (o2 == 0.0 && on_segment(p1, p2, q2))
        || (o3 == 0.0 && on_segment(q1, q2, p1))
        || (o4 == 0.0 && on_segment(q1, q2, p2))
}
