//! Exact subgraph and walk counting.
//!
//! Every count is an exact nonnegative integer ([`BigUint`]); floating point
//! never enters a counting path. The 4-cycle and 6-cycle counters are
//! algebraic (codegree aggregation and a meet-in-the-middle identity over
//! antipodal pairs) so they stay fast on graphs with thousands of vertices,
//! and both are cross-checked against brute-force enumeration in the tests.

use crate::graph::{BipartiteView, Graph};
use num_bigint::BigUint;

/// Errors from counting operations with vertex arguments.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CountError {
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("the two vertices must be distinct (got {v} twice)")]
    SameVertex { v: usize },
}

/// Number of walks with exactly `k` edges (ordered vertex sequences
/// `x_0, .., x_k` with consecutive vertices adjacent).
///
/// Computed by iterating the neighbor-sum vector `v <- A v` starting from
/// all-ones; the total is exact at any `k`. `walk_count(g, 1)` is `2e`.
pub fn walk_count(g: &Graph, k: u32) -> BigUint {
    let n = g.n();
    let mut v: Vec<BigUint> = vec![BigUint::from(1u32); n];
    for _ in 0..k {
        let mut next = vec![BigUint::ZERO; n];
        for u in 0..n {
            for w in g.neighbors(u) {
                next[u] += &v[w];
            }
        }
        v = next;
    }
    v.into_iter().sum()
}

/// Number of paths with three edges, counted as subgraphs (each path once,
/// not once per traversal direction).
///
/// Sums, over each edge `{u,v}` serving as the middle edge, the ways to
/// attach distinct endpoints: `(d(u)-1)(d(v)-1)` ordered choices minus the
/// common neighbors of `u` and `v` (where the two endpoints would coincide).
pub fn path3_count(g: &Graph) -> BigUint {
    let mut total: u128 = 0;
    for (u, v) in g.edges() {
        let du = g.degree(u) as u128;
        let dv = g.degree(v) as u128;
        let common = g.adjacency(u).intersection_count(g.adjacency(v)) as u128;
        total += (du - 1) * (dv - 1) - common;
    }
    BigUint::from(total)
}

/// Number of 4-cycle subgraphs: `Σ C(codeg(x,y), 2) / 2` over unordered
/// vertex pairs. Each 4-cycle is counted once per diagonal, hence the
/// halving; in a bipartite graph summing over pairs inside one class counts
/// each 4-cycle exactly once (cross-checked in the tests).
pub fn c4_count(g: &Graph) -> BigUint {
    let n = g.n();
    let mut double_count: u128 = 0;
    for x in 0..n {
        for y in x + 1..n {
            let d = g.adjacency(x).intersection_count(g.adjacency(y)) as u128;
            if d >= 2 {
                double_count += d * (d - 1) / 2; // C(d, 2)
            }
        }
    }
    debug_assert_eq!(double_count % 2, 0, "4-cycles are double counted by diagonals");
    BigUint::from(double_count / 2)
}

/// Number of 6-cycle subgraphs, each counted once.
///
/// Meet-in-the-middle over antipodal pairs: a 6-cycle decomposes, for each
/// of its three antipodal vertex pairs `{u,v}`, into two internally disjoint
/// 3-edge paths from `u` to `v`. Summing the number of unordered pairs of
/// internally disjoint 3-paths over all vertex pairs therefore counts every
/// 6-cycle exactly three times.
///
/// For a fixed pair the path total is `A³_{uv}` corrected for walks through
/// `u` or `v`, and the conflicting (vertex-sharing) path pairs are removed
/// by inclusion-exclusion over the four ways two paths `u-a-b-v`, `u-a'-b'-v`
/// can collide: `a=a'`, `b=b'`, `a=b'`, `a'=b`.
pub fn c6_count(g: &Graph) -> BigUint {
    let n = g.n();
    if n < 6 {
        return BigUint::ZERO;
    }

    // Full codegree matrix: sq[u*n + v] = |N(u) ∩ N(v)| = (A²)_{uv}.
    let mut sq = vec![0u32; n * n];
    for u in 0..n {
        sq[u * n + u] = g.degree(u) as u32;
        for v in u + 1..n {
            let c = g.adjacency(u).intersection_count(g.adjacency(v)) as u32;
            sq[u * n + v] = c;
            sq[v * n + u] = c;
        }
    }

    let mut triple_total: i128 = 0; // Σ over pairs of (disjoint path pairs); = 3·C6
    let mut row3 = vec![0u64; n];
    for u in 0..n {
        // row3[v] = (A³)_{uv} = Σ_{a ∈ N(u)} (A²)_{av}.
        row3.iter_mut().for_each(|x| *x = 0);
        for a in g.neighbors(u) {
            let base = a * n;
            for v in 0..n {
                row3[v] += sq[base + v] as u64;
            }
        }

        for v in u + 1..n {
            let adjacent = g.has_edge(u, v);
            let adj = u64::from(adjacent);

            // Number of 3-edge paths u..v: walks minus those revisiting u or v.
            let walks = row3[v];
            let degenerate = if adjacent {
                (g.degree(u) + g.degree(v) - 1) as u64
            } else {
                0
            };
            let t = walks as i128 - degenerate as i128;
            if t < 2 {
                continue;
            }

            // Ordered conflicting pairs, by shared internal vertex.
            // Path u-a-b-v: a ∈ N(u), b ∈ N(v), ab an edge, a ≠ v, b ≠ u.
            // m(a) = #choices of b for this a; w(b) = #choices of a for this b.
            let mut n1: i128 = 0; // a = a'
            for a in g.neighbors(u) {
                if a == v {
                    continue;
                }
                let m = sq[a * n + v] as i128 - adj as i128;
                n1 += m * (m - 1);
            }
            let mut n2: i128 = 0; // b = b'
            for b in g.neighbors(v) {
                if b == u {
                    continue;
                }
                let w = sq[b * n + u] as i128 - adj as i128;
                n2 += w * (w - 1);
            }
            // a = b' (and symmetrically a' = b): the shared vertex c is a
            // common neighbor of u and v serving both path roles.
            let mut n3: i128 = 0;
            let common = g.adjacency(u).intersection(g.adjacency(v));
            for c in common.iter() {
                let m = sq[c * n + v] as i128 - adj as i128;
                let w = sq[c * n + u] as i128 - adj as i128;
                n3 += m * w;
            }
            // Both at once (a=b', a'=b): ordered pairs of adjacent common
            // neighbors; counted in both n3 roles, subtract once.
            let mut n34: i128 = 0;
            for c in common.iter() {
                n34 += g.adjacency(c).intersection_count(&common) as i128;
            }

            let conflicting_ordered = n1 + n2 + 2 * n3 - n34;
            debug_assert_eq!(conflicting_ordered % 2, 0);
            let disjoint_pairs = t * (t - 1) / 2 - conflicting_ordered / 2;
            debug_assert!(disjoint_pairs >= 0);
            triple_total += disjoint_pairs;
        }
    }

    debug_assert_eq!(triple_total % 3, 0, "each 6-cycle has three antipodal pairs");
    BigUint::from((triple_total / 3) as u128)
}

/// Codegree `|N(x) ∩ N(y)|` of two distinct vertices.
pub fn codegree(g: &Graph, x: usize, y: usize) -> Result<usize, CountError> {
    let n = g.n();
    for v in [x, y] {
        if v >= n {
            return Err(CountError::VertexOutOfRange { v, n });
        }
    }
    if x == y {
        return Err(CountError::SameVertex { v: x });
    }
    Ok(g.adjacency(x).intersection_count(g.adjacency(y)))
}

/// `D(x) = Σ_{y ∈ N(x)} (deg(y) - 1)`: the number of 2-edge paths starting
/// at `x`, equivalently the walks of length 2 from `x` that do not
/// immediately return.
pub fn d_value(view: &BipartiteView<'_>, x: usize) -> Result<u64, CountError> {
    let g = view.graph();
    if x >= g.n() {
        return Err(CountError::VertexOutOfRange { v: x, n: g.n() });
    }
    Ok(g.neighbors(x).map(|y| (g.degree(y) - 1) as u64).sum())
}

/// Length of a shortest cycle; `None` when the graph is a forest.
///
/// One BFS per start vertex; the first non-tree edge seen from the root's
/// search gives a cycle estimate `dist(u) + dist(w) + 1`, and the minimum
/// over all roots is exact.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.n();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::new();

    for start in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        parent.iter_mut().for_each(|p| *p = usize::MAX);
        dist[start] = 0;
        queue.clear();
        queue.push_back(start);
        while let Some(u) = queue.pop_front() {
            // Cycles through deeper vertices can't beat the current best.
            if let Some(b) = best {
                if 2 * dist[u] >= b {
                    break;
                }
            }
            for w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if w != parent[u] {
                    let len = dist[u] + dist[w] + 1;
                    if best.is_none_or(|b| len < b) {
                        best = Some(len);
                    }
                }
            }
        }
        if best == Some(3) {
            break; // nothing shorter exists
        }
    }
    best
}
