//! Brute-force ground truth for small instances.
//!
//! `brute_r_star` searches set partitions of the nodes: for a fixed
//! partition into blocks of size at most `c`, the cheapest removal set is
//! exactly the cross-block edges, so minimizing over partitions is lossless
//! and far cheaper than enumerating edge subsets. The partition search is
//! capped at n <= 10 (Bell(10) = 115975); graphs up to m <= 24 fall back to
//! edge-subset enumeration.

use crate::score::Score;
use crate::{Error, Graph, Result};

/// Cap for the partition-based search.
pub const MAX_PARTITION_NODES: usize = 10;
/// Cap for the subset-enumeration fallback.
pub const MAX_SUBSET_EDGES: usize = 24;
/// Cap for exhaustive composition checks.
pub const MAX_COMPOSITION_TOTAL: usize = 12;
/// Cap for exact betweenness by path enumeration.
pub const MAX_BETWEENNESS_NODES: usize = 9;

/// Exact minimum number of edge removals after which no component exceeds
/// `c` nodes.
pub fn brute_r_star(g: &Graph, c: usize) -> Result<usize> {
    let n = g.node_count();
    if c < 1 || c >= n {
        return Err(Error::InvalidParam(format!(
            "component bound c = {c} outside [1, {n})"
        )));
    }
    if n <= MAX_PARTITION_NODES {
        Ok(min_cross_edges_by_partition(g, c))
    } else if g.edge_count() <= MAX_SUBSET_EDGES {
        Ok(min_removals_by_subsets(g, c))
    } else {
        Err(Error::BudgetExceeded(format!(
            "brute_r_star needs n <= {MAX_PARTITION_NODES} or m <= {MAX_SUBSET_EDGES}, got n = {n}, m = {}",
            g.edge_count()
        )))
    }
}

fn min_cross_edges_by_partition(g: &Graph, c: usize) -> usize {
    let n = g.node_count();
    let mut labels = vec![0usize; n];
    let mut block_sizes = vec![0usize; n];
    let mut best = g.edge_count();
    assign(g, c, 0, 0, 0, &mut labels, &mut block_sizes, &mut best);
    best
}

/// Places node `v` into every feasible block (all used blocks with room,
/// plus one fresh block), tracking cross edges to already-placed nodes and
/// pruning branches that cannot beat the best cut found so far.
#[allow(clippy::too_many_arguments)]
fn assign(
    g: &Graph,
    c: usize,
    v: usize,
    used_blocks: usize,
    cross_so_far: usize,
    labels: &mut [usize],
    block_sizes: &mut [usize],
    best: &mut usize,
) {
    if cross_so_far >= *best {
        return;
    }
    let n = g.node_count();
    if v == n {
        *best = cross_so_far;
        return;
    }
    for block in 0..=used_blocks.min(n - 1) {
        if block < used_blocks && block_sizes[block] >= c {
            continue;
        }
        let added_cross = g
            .neighbors(v)
            .iter()
            .filter(|&&(w, _)| w < v && labels[w] != block)
            .count();
        labels[v] = block;
        block_sizes[block] += 1;
        let next_used = used_blocks.max(block + 1);
        assign(
            g,
            c,
            v + 1,
            next_used,
            cross_so_far + added_cross,
            labels,
            block_sizes,
            best,
        );
        block_sizes[block] -= 1;
        if block == used_blocks {
            break;
        }
    }
}

fn min_removals_by_subsets(g: &Graph, c: usize) -> usize {
    let n = g.node_count();
    let m = g.edge_count();
    let mut best = m;
    for mask in 0u32..(1u32 << m) {
        let removed = m - mask.count_ones() as usize;
        if removed >= best {
            continue;
        }
        if largest_component_under_mask(g, mask, n) <= c {
            best = removed;
        }
    }
    best
}

fn largest_component_under_mask(g: &Graph, mask: u32, n: usize) -> usize {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if mask & (1 << e) != 0 {
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru != rv {
                parent[ru] = rv;
            }
        }
    }
    let mut counts = vec![0usize; n];
    let mut largest = 0;
    for v in 0..n {
        let r = find(&mut parent, v);
        counts[r] += 1;
        largest = largest.max(counts[r]);
    }
    largest
}

/// An ordered split of `c` into positive parts (an optional trailing zero is
/// tolerated, matching how the split sequence is written with `d_{l+1} = 0`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Composition {
    parts: Vec<usize>,
    total: usize,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Composition> {
        let body = match parts.split_last() {
            Some((&0, body)) => body,
            _ => &parts[..],
        };
        if body.is_empty() || body.contains(&0) {
            return Err(Error::InvalidParam(format!(
                "composition parts must be positive (trailing zero allowed): {parts:?}"
            )));
        }
        let total = parts.iter().sum();
        Ok(Composition { parts, total })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.total
    }

    pub fn sum_of_squares(&self) -> usize {
        self.parts.iter().map(|&a| a * a).sum()
    }

    /// The decreasing remainders `d_i = c - (a_0 + ... + a_i)`; recovering
    /// the parts from consecutive differences round-trips.
    pub fn remainders(&self) -> Vec<usize> {
        let mut left = self.total;
        self.parts
            .iter()
            .map(|&a| {
                left -= a;
                left
            })
            .collect()
    }
}

/// All compositions of `c` into positive parts, in binary gap order.
pub fn compositions(c: usize) -> Vec<Composition> {
    assert!((1..=MAX_COMPOSITION_TOTAL).contains(&c));
    let mut out = Vec::with_capacity(1 << (c - 1));
    for gaps in 0u32..(1u32 << (c - 1)) {
        let mut parts = Vec::new();
        let mut run = 1usize;
        for pos in 0..(c - 1) {
            if gaps & (1 << pos) != 0 {
                parts.push(run);
                run = 1;
            } else {
                run += 1;
            }
        }
        parts.push(run);
        out.push(Composition::new(parts).expect("constructed parts are positive"));
    }
    out
}

/// Exhaustively verifies that splitting `c` into any number of positive
/// integers keeps the sum of squares at or below `c^2`.
pub fn check_splitting_squares(c: usize) -> Result<bool> {
    if !(1..=MAX_COMPOSITION_TOTAL).contains(&c) {
        return Err(Error::BudgetExceeded(format!(
            "splitting-squares check is exhaustive only for c <= {MAX_COMPOSITION_TOTAL}, got {c}"
        )));
    }
    Ok(compositions(c)
        .iter()
        .all(|comp| comp.sum_of_squares() <= c * c))
}

/// Exact edge betweenness by explicit shortest-path enumeration, counting
/// each unordered pair once. Independent of the attack module's
/// accumulation-based implementation and used to verify it.
pub fn brute_edge_betweenness(g: &Graph) -> Result<Vec<Score>> {
    let n = g.node_count();
    if n > MAX_BETWEENNESS_NODES {
        return Err(Error::BudgetExceeded(format!(
            "brute_edge_betweenness needs n <= {MAX_BETWEENNESS_NODES}, got {n}"
        )));
    }
    let m = g.edge_count();
    let mut scores = vec![Score::zero(); m];
    let mut through = vec![0i128; m];
    for s in 0..n {
        let dist = bfs_dist(g, s);
        for t in 0..n {
            if t == s || dist[t] == usize::MAX {
                continue;
            }
            through.iter_mut().for_each(|x| *x = 0);
            let mut path = Vec::new();
            let total = enumerate_paths(g, &dist, s, t, &mut path, &mut through);
            debug_assert!(total > 0);
            for e in 0..m {
                if through[e] > 0 {
                    scores[e] += Score::new(through[e], total);
                }
            }
        }
    }
    // Ordered pairs count every unordered pair twice.
    let two = Score::from_int(2);
    Ok(scores.into_iter().map(|s| s.div(&two)).collect())
}

fn bfs_dist(g: &Graph, s: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.node_count()];
    dist[s] = 0;
    let mut queue = std::collections::VecDeque::from([s]);
    while let Some(v) = queue.pop_front() {
        for &(w, _) in g.neighbors(v) {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Walks every shortest path from `t` back toward `s`, returning the path
/// count and incrementing `through[e]` once per path containing `e`.
fn enumerate_paths(
    g: &Graph,
    dist: &[usize],
    s: usize,
    t: usize,
    path: &mut Vec<usize>,
    through: &mut [i128],
) -> i128 {
    if t == s {
        for &e in path.iter() {
            through[e] += 1;
        }
        return 1;
    }
    let mut total = 0;
    for &(w, e) in g.neighbors(t) {
        if dist[w] + 1 == dist[t] {
            path.push(e);
            total += enumerate_paths(g, dist, s, w, path, through);
            path.pop();
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_form;
    use crate::generators::{gen_ceb, gen_complete, gen_gb};

    #[test]
    fn r_star_small_cases() {
        let k5 = gen_complete(5).unwrap();
        assert_eq!(brute_r_star(&k5, 2).unwrap(), 8);
        let ceb8 = gen_ceb(8).unwrap();
        assert_eq!(brute_r_star(&ceb8, 4).unwrap(), 8);
        let p4 = Graph::build(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(brute_r_star(&p4, 2).unwrap(), 1);
    }

    #[test]
    fn r_star_rejects_bad_c_and_budget() {
        let k5 = gen_complete(5).unwrap();
        assert!(brute_r_star(&k5, 0).is_err());
        assert!(brute_r_star(&k5, 5).is_err());
        let big = gen_complete(12).unwrap();
        assert!(matches!(
            brute_r_star(&big, 3),
            Err(Error::BudgetExceeded(_))
        ));
    }

    #[test]
    fn gb8_half_split_cuts_the_bridges() {
        let gb8 = gen_gb(8).unwrap();
        assert_eq!(brute_r_star(&gb8, 4).unwrap(), 8);
    }

    #[test]
    fn subset_fallback_agrees_with_partitions() {
        // Sparse graph with n > 10 but few edges: a 12-node path.
        let pairs: Vec<_> = (0..11).map(|i| (i, i + 1)).collect();
        let p12 = Graph::build(12, &pairs).unwrap();
        assert_eq!(brute_r_star(&p12, 6).unwrap(), 1);
        assert_eq!(brute_r_star(&p12, 4).unwrap(), 2);
        // Same cut sizes on the 10-node version via partitions.
        let pairs: Vec<_> = (0..9).map(|i| (i, i + 1)).collect();
        let p10 = Graph::build(10, &pairs).unwrap();
        assert_eq!(brute_r_star(&p10, 5).unwrap(), 1);
    }

    #[test]
    fn closed_forms_match_oracle_up_to_n6() {
        for n in 2..=6usize {
            let kn = gen_complete(n).unwrap();
            let ceb = gen_ceb(n).unwrap();
            for c in 1..n {
                assert_eq!(
                    brute_r_star(&kn, c).unwrap() as i128,
                    closed_form::r_star_complete(n, c).unwrap(),
                    "K_{n}, c={c}"
                );
                assert_eq!(
                    brute_r_star(&ceb, c).unwrap() as i128,
                    closed_form::r_star_ceb(n, c).unwrap(),
                    "CEB_{n}, c={c}"
                );
            }
        }
    }

    #[test]
    fn composition_construction() {
        let comp = Composition::new(vec![2, 1, 1]).unwrap();
        assert_eq!(comp.total(), 4);
        assert_eq!(comp.sum_of_squares(), 6);
        assert_eq!(comp.remainders(), vec![2, 1, 0]);
        assert!(Composition::new(vec![2, 0, 1]).is_err());
        assert!(Composition::new(vec![]).is_err());
        // Trailing zero tolerated.
        let comp = Composition::new(vec![3, 1, 0]).unwrap();
        assert_eq!(comp.total(), 4);
    }

    #[test]
    fn composition_counts_and_splitting() {
        assert_eq!(compositions(1).len(), 1);
        assert_eq!(compositions(4).len(), 8);
        assert!(check_splitting_squares(1).unwrap());
        assert!(check_splitting_squares(4).unwrap());
        assert!(check_splitting_squares(12).unwrap());
        assert!(check_splitting_squares(13).is_err());
        // The all-ones split is the extreme case: 4 * 1 <= 16.
        let all_ones = Composition::new(vec![1; 4]).unwrap();
        assert_eq!(all_ones.sum_of_squares(), 4);
    }

    fn whole(x: i128) -> Score {
        Score::new(x, 1.into())
    }

    #[test]
    fn betweenness_tiny_cases() {
        let k2 = Graph::build(2, &[(0, 1)]).unwrap();
        assert_eq!(brute_edge_betweenness(&k2).unwrap(), vec![whole(1)]);

        // P_3: each edge lies on 2 of the 3 unordered pairs.
        let p3 = Graph::build(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(
            brute_edge_betweenness(&p3).unwrap(),
            vec![whole(2), whole(2)]
        );
    }

    #[test]
    fn betweenness_bridge_dominates() {
        // Two triangles joined by a bridge (edge 6).
        let g = Graph::build(6, &[(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (2, 3)]).unwrap();
        let scores = brute_edge_betweenness(&g).unwrap();
        let bridge = scores[6].clone();
        for (e, s) in scores.iter().enumerate() {
            if e != 6 {
                assert!(*s < bridge, "edge {e}: {s} >= {bridge}");
            }
        }
        // The bridge carries all 9 cross pairs.
        assert_eq!(bridge, whole(9));
    }

    #[test]
    fn betweenness_respects_budget() {
        let big = gen_complete(10).unwrap();
        assert!(matches!(
            brute_edge_betweenness(&big),
            Err(Error::BudgetExceeded(_))
        ));
    }
}
