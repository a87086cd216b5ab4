//! Structural detection: 6-cycles, cubes, and cubes with a diagonal.
//!
//! The central predicate is [`hexagon_between`]: a 6-cycle whose alternate
//! vertices are neighbors of `x` and neighbors of `y` (all eight vertices
//! distinct). Such a hexagon together with `x` and `y` always assembles into
//! a cube — the hexagon is the "equator", `x` and `y` the poles — and if
//! `x` and `y` are also adjacent the thirteen edges form a cube with one
//! long diagonal. [`find_cube`] and [`find_cube_diag`] are independent
//! embedding searches, so the implication "hexagon found ⇒ cube present"
//! is a cross-check between two different algorithms, not a tautology.

use crate::bitset::Bitset;
use crate::graph::Graph;

/// Errors from detection operations with vertex arguments.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DetectError {
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("the two anchor vertices must be distinct (got {v} twice)")]
    SameVertex { v: usize },
}

/// A hexagon between two anchor vertices: `hexagon[0,2,4]` are neighbors of
/// `x`, `hexagon[1,3,5]` are neighbors of `y`, consecutive hexagon entries
/// (cyclically) are edges, and all eight vertices are distinct.
///
/// The witness is canonical: among the six representations of one hexagon
/// (three rotations × two directions preserving the alternation), this is
/// the lexicographically least tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubeWitness {
    pub x: usize,
    pub y: usize,
    pub hexagon: [usize; 6],
}

impl CubeWitness {
    /// The twelve cube edges this witness asserts: three spokes at each
    /// anchor plus the six hexagon edges.
    pub fn cube_edges(&self) -> [(usize, usize); 12] {
        let z = &self.hexagon;
        [
            (self.x, z[0]),
            (self.x, z[2]),
            (self.x, z[4]),
            (self.y, z[1]),
            (self.y, z[3]),
            (self.y, z[5]),
            (z[0], z[1]),
            (z[1], z[2]),
            (z[2], z[3]),
            (z[3], z[4]),
            (z[4], z[5]),
            (z[5], z[0]),
        ]
    }

    /// All eight vertices: `x`, `y`, then the hexagon in order.
    pub fn vertices(&self) -> [usize; 8] {
        let z = &self.hexagon;
        [self.x, self.y, z[0], z[1], z[2], z[3], z[4], z[5]]
    }

    /// True when all twelve asserted edges are present in `g` and the eight
    /// vertices are distinct.
    pub fn verify(&self, g: &Graph) -> bool {
        let mut vs = self.vertices().to_vec();
        vs.sort_unstable();
        vs.dedup();
        vs.len() == 8 && self.cube_edges().iter().all(|&(u, v)| g.has_edge(u, v))
    }
}

/// Searches for a hexagon between `x` and `y` (see [`CubeWitness`]).
///
/// Enumeration is in lexicographic order over canonical tuples —
/// `z1 = min(z1, z3, z5)` and `z2 < z6` — so the first hit is the
/// lexicographically least witness and the search never visits the six
/// symmetric copies of one hexagon.
pub fn hexagon_between(g: &Graph, x: usize, y: usize) -> Result<Option<CubeWitness>, DetectError> {
    let n = g.n();
    for v in [x, y] {
        if v >= n {
            return Err(DetectError::VertexOutOfRange { v, n });
        }
    }
    if x == y {
        return Err(DetectError::SameVertex { v: x });
    }

    // Candidate pools: the hexagon avoids both anchors.
    let mut from_x = g.adjacency(x).clone();
    from_x.remove(y);
    let mut from_y = g.adjacency(y).clone();
    from_y.remove(x);
    if from_x.count() < 3 || from_y.count() < 3 {
        return Ok(None);
    }

    let mut hex = [0usize; 6];
    if search_hexagon(g, &from_x, &from_y, &mut hex) {
        Ok(Some(CubeWitness { x, y, hexagon: hex }))
    } else {
        Ok(None)
    }
}

fn search_hexagon(g: &Graph, from_x: &Bitset, from_y: &Bitset, hex: &mut [usize; 6]) -> bool {
    // hex = (z1, z2, z3, z4, z5, z6); odd positions from N(x), even from N(y).
    for z1 in from_x.iter() {
        for z2 in g.adjacency(z1).intersection(from_y).iter() {
            for z3 in g.adjacency(z2).intersection(from_x).iter() {
                if z3 <= z1 {
                    continue; // z1 is the least x-side vertex
                }
                for z4 in g.adjacency(z3).intersection(from_y).iter() {
                    if z4 == z2 || z4 == z1 {
                        continue;
                    }
                    for z5 in g.adjacency(z4).intersection(from_x).iter() {
                        if z5 <= z1 || z5 == z3 || z5 == z2 {
                            continue;
                        }
                        for z6 in g.adjacency(z5).intersection(from_y).iter() {
                            if z6 <= z2 || z6 == z4 || z6 == z3 || !g.has_edge(z6, z1) {
                                continue; // z2 < z6 fixes the direction
                            }
                            *hex = [z1, z2, z3, z4, z5, z6];
                            return true;
                        }
                    }
                }
            }
        }
    }
    false
}

// ============================================================
// Embedding searches for the cube and the cube with a diagonal
// ============================================================

/// Pattern-vertex insertion order for the cube labeled by 3-bit strings:
/// after the first vertex, every later one has at least one earlier
/// neighbor, which keeps candidate sets small.
const CUBE_ORDER: [usize; 8] = [0, 1, 2, 4, 3, 5, 6, 7];

fn cube_pattern_edges(with_diagonal: bool) -> Vec<(usize, usize)> {
    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(13);
    for u in 0..8usize {
        for v in u + 1..8 {
            if (u ^ v).count_ones() == 1 {
                edges.push((u, v));
            }
        }
    }
    if with_diagonal {
        edges.push((0, 7));
    }
    edges
}

/// Backtracking subgraph-embedding search (not induced) for a fixed 8-vertex
/// pattern. Returns the image of pattern vertices `0..8`, or `None`.
fn find_pattern(g: &Graph, pattern_edges: &[(usize, usize)]) -> Option<[usize; 8]> {
    let n = g.n();
    let min_deg: Vec<usize> = {
        let mut d = vec![0usize; 8];
        for &(u, v) in pattern_edges {
            d[u] += 1;
            d[v] += 1;
        }
        d
    };
    // Cheap necessary conditions before any search.
    if n < 8
        || g.edge_count() < pattern_edges.len()
        || (0..n).filter(|&v| g.degree(v) >= 3).count() < 8
    {
        return None;
    }

    // earlier_nbrs[k] = pattern neighbors of CUBE_ORDER[k] already placed.
    let mut placed_at = [usize::MAX; 8]; // pattern vertex -> order slot
    for (slot, &p) in CUBE_ORDER.iter().enumerate() {
        placed_at[p] = slot;
    }
    let mut earlier_nbrs: Vec<Vec<usize>> = vec![Vec::new(); 8];
    for &(u, v) in pattern_edges {
        if placed_at[u] < placed_at[v] {
            earlier_nbrs[placed_at[v]].push(u);
        } else {
            earlier_nbrs[placed_at[u]].push(v);
        }
    }

    let mut image = [usize::MAX; 8]; // pattern vertex -> host vertex
    let mut used = vec![false; n];
    fn rec(
        g: &Graph,
        slot: usize,
        image: &mut [usize; 8],
        used: &mut [bool],
        earlier_nbrs: &[Vec<usize>],
        min_deg: &[usize],
    ) -> bool {
        if slot == 8 {
            return true;
        }
        let p = CUBE_ORDER[slot];
        // Candidates: intersect host neighborhoods of already-placed pattern
        // neighbors; ascending order keeps the result deterministic.
        let cands: Vec<usize> = match earlier_nbrs[slot].split_first() {
            None => (0..g.n()).collect(),
            Some((&first, rest)) => {
                let mut set = g.adjacency(image[first]).clone();
                for &q in rest {
                    set = set.intersection(g.adjacency(image[q]));
                }
                set.iter().collect()
            }
        };
        for v in cands {
            if used[v] || g.degree(v) < min_deg[p] {
                continue;
            }
            image[p] = v;
            used[v] = true;
            if rec(g, slot + 1, image, used, earlier_nbrs, min_deg) {
                return true;
            }
            used[v] = false;
            image[p] = usize::MAX;
        }
        false
    }

    if rec(g, 0, &mut image, &mut used, &earlier_nbrs, &min_deg) {
        Some(image)
    } else {
        None
    }
}

/// Finds an embedding of the cube as a (not necessarily induced) subgraph.
/// The returned array maps cube vertex `i` (3-bit label) to a host vertex.
pub fn find_cube(g: &Graph) -> Option<[usize; 8]> {
    find_pattern(g, &cube_pattern_edges(false))
}

/// True when `g` contains the cube as a subgraph.
pub fn contains_cube(g: &Graph) -> bool {
    find_cube(g).is_some()
}

/// Finds an embedding of the cube plus one long diagonal (the antipodal
/// edge `{0,7}` in cube labeling): 13 edges.
pub fn find_cube_diag(g: &Graph) -> Option<[usize; 8]> {
    find_pattern(g, &cube_pattern_edges(true))
}

/// True when `g` contains the cube with a long diagonal as a subgraph.
pub fn contains_cube_diag(g: &Graph) -> bool {
    find_cube_diag(g).is_some()
}

// ============================================================
// 6-cycle detection (early exit)
// ============================================================

/// Finds one 6-cycle, returned in cyclic order, or `None`.
///
/// Early-exit DFS over paths anchored at the least cycle vertex: the cycle
/// returned is the lexicographically least among those starting at the
/// smallest possible vertex with the smaller second endpoint first. Distinct
/// from (and cross-checked against) the algebraic counter
/// [`crate::counting::c6_count`].
pub fn find_c6(g: &Graph) -> Option<[usize; 6]> {
    let n = g.n();
    if n < 6 {
        return None;
    }
    // cycle[0] = s is the least vertex; all others > s; direction fixed by
    // cycle[1] < cycle[5].
    let mut cycle = [0usize; 6];
    for s in 0..n {
        cycle[0] = s;
        if dfs_c6(g, s, 1, &mut cycle) {
            return Some(cycle);
        }
    }
    None
}

fn dfs_c6(g: &Graph, s: usize, depth: usize, cycle: &mut [usize; 6]) -> bool {
    if depth == 6 {
        return g.has_edge(cycle[5], s) && cycle[1] < cycle[5];
    }
    let prev = cycle[depth - 1];
    for w in g.neighbors(prev) {
        if w <= s || cycle[1..depth].contains(&w) {
            continue;
        }
        cycle[depth] = w;
        if dfs_c6(g, s, depth + 1, cycle) {
            return true;
        }
    }
    false
}

/// True when `g` contains a 6-cycle.
pub fn contains_c6(g: &Graph) -> bool {
    find_c6(g).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::c6_count;
    use num_traits::ToPrimitive;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn random_graph(rng: &mut StdRng, n: usize, p: f64) -> Graph {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Brute-force oracle: try every injection of the 8 pattern vertices.
    fn contains_pattern_by_injection(g: &Graph, edges: &[(usize, usize)]) -> bool {
        let n = g.n();
        if n < 8 {
            return false;
        }
        let verts: Vec<usize> = (0..n).collect();
        let mut image = [0usize; 8];
        fn rec(
            g: &Graph,
            verts: &[usize],
            edges: &[(usize, usize)],
            image: &mut [usize; 8],
            used: &mut Vec<bool>,
            k: usize,
        ) -> bool {
            if k == 8 {
                return edges.iter().all(|&(u, v)| g.has_edge(image[u], image[v]));
            }
            for &v in verts {
                if !used[v] {
                    used[v] = true;
                    image[k] = v;
                    if rec(g, verts, edges, image, used, k + 1) {
                        return true;
                    }
                    used[v] = false;
                }
            }
            false
        }
        let mut used = vec![false; n];
        rec(g, &verts, edges, &mut image, &mut used, 0)
    }

    // ---- hexagon_between ---------------------------------------------------

    #[test]
    fn hexagon_on_cube_antipodal_pair() {
        let q = Graph::cube();
        let w = hexagon_between(&q, 0, 7).unwrap().expect("cube has one");
        assert_eq!(w.hexagon, [1, 3, 2, 6, 4, 5]);
        assert!(w.verify(&q));
    }

    #[test]
    fn hexagon_anchor_errors() {
        let q = Graph::cube();
        assert_eq!(
            hexagon_between(&q, 3, 3),
            Err(DetectError::SameVertex { v: 3 })
        );
        assert_eq!(
            hexagon_between(&q, 0, 8),
            Err(DetectError::VertexOutOfRange { v: 8, n: 8 })
        );
    }

    #[test]
    fn hexagon_absent_on_cube_adjacent_pair() {
        // Adjacent cube vertices share no hexagon: their neighborhoods are
        // too small once the anchors are excluded.
        let q = Graph::cube();
        assert_eq!(hexagon_between(&q, 0, 1), Ok(None));
    }

    #[test]
    fn hexagon_in_k44_between_same_class_fails_but_cross_class_works() {
        let g = Graph::complete_bipartite(4, 4);
        // Same class: neighborhoods coincide, hexagon needs them disjoint
        // on alternating positions — here N(x) = N(y), so z's from N(x)
        // and N(y) overlap but a valid hexagon still needs 6 distinct
        // vertices alternating between the classes... which cannot happen
        // since consecutive hexagon vertices must be adjacent and N(x) is
        // an independent set.
        assert_eq!(hexagon_between(&g, 0, 1), Ok(None));
        // Cross-class anchors: hexagon alternates through the two classes.
        let w = hexagon_between(&g, 0, 4).unwrap().expect("K44 contains a cube");
        assert!(w.verify(&g));
    }

    #[test]
    fn hexagon_missing_when_too_sparse() {
        assert_eq!(hexagon_between(&Graph::cycle(8), 0, 4), Ok(None));
        assert_eq!(hexagon_between(&Graph::complete(7), 0, 1), Ok(None)); // n < 8
    }

    #[test]
    fn hexagon_witness_is_lexicographically_least() {
        // In K_{4,4} many hexagons exist between 0 and 4; the canonical
        // witness is the lex-least tuple (z1 minimal, then z2, ...): odd
        // positions draw from N(0)\{4} = {5,6,7}, even from N(4)\{0} = {1,2,3}.
        let g = Graph::complete_bipartite(4, 4);
        let w = hexagon_between(&g, 0, 4).unwrap().unwrap();
        assert_eq!(w.hexagon, [5, 1, 6, 2, 7, 3]);
    }

    // ---- cube embedding ------------------------------------------------------

    #[test]
    fn cube_contains_itself_exactly() {
        let q = Graph::cube();
        let image = find_cube(&q).expect("identity embedding");
        // Any embedding works; verify edges map to edges.
        for u in 0..8usize {
            for v in u + 1..8 {
                if (u ^ v).count_ones() == 1 {
                    assert!(q.has_edge(image[u], image[v]));
                }
            }
        }
        assert!(!contains_cube_diag(&q), "plain cube lacks the diagonal");
    }

    #[test]
    fn cube_minus_edge_is_cube_free() {
        let mut g = Graph::cube();
        g.remove_edge(0, 1);
        assert!(!contains_cube(&g));
    }

    #[test]
    fn k44_contains_cube_and_diagonal_needs_an_extra_edge() {
        assert!(contains_cube(&Graph::complete_bipartite(4, 4)));
        // K_{4,4} has no odd-distance diagonal inside one class... the
        // diagonal joins antipodal cube vertices, which sit in different
        // classes of the cube's bipartition — in K_{4,4} those are adjacent.
        assert!(contains_cube_diag(&Graph::complete_bipartite(4, 4)));
        assert!(contains_cube_diag(&Graph::complete(8)));
        assert!(!contains_cube_diag(&Graph::cube()));
        assert!(contains_cube_diag(&Graph::cube_with_diagonal()));
    }

    #[test]
    fn small_or_sparse_graphs_are_cube_free() {
        assert!(!contains_cube(&Graph::complete(7))); // n < 8
        assert!(!contains_cube(&Graph::cycle(12))); // degrees too small
        assert!(!contains_cube(&Graph::complete_bipartite(3, 5))); // no 3-regular bipartite sub
    }

    #[test]
    fn detection_matches_injection_oracle_on_random_graphs() {
        let mut rng = StdRng::seed_from_u64(0x5eed_0010);
        let plain = cube_pattern_edges(false);
        let diag = cube_pattern_edges(true);
        for _ in 0..60 {
            let g = random_graph(&mut rng, 8, 0.5);
            assert_eq!(
                contains_cube(&g),
                contains_pattern_by_injection(&g, &plain),
                "{:?}",
                g
            );
            assert_eq!(
                contains_cube_diag(&g),
                contains_pattern_by_injection(&g, &diag),
                "{:?}",
                g
            );
        }
    }

    #[test]
    fn hexagon_implies_cube_on_random_graphs() {
        let mut rng = StdRng::seed_from_u64(0x5eed_0011);
        for _ in 0..40 {
            let g = random_graph(&mut rng, 9, 0.45);
            for x in 0..9 {
                for y in 0..9 {
                    if x == y {
                        continue;
                    }
                    if let Some(w) = hexagon_between(&g, x, y).unwrap() {
                        assert!(w.verify(&g));
                        assert!(contains_cube(&g), "hexagon found but no cube: {:?}", g);
                        if g.has_edge(x, y) {
                            assert!(contains_cube_diag(&g));
                        }
                    }
                }
            }
        }
    }

    // ---- find_c6 ----------------------------------------------------------------

    #[test]
    fn c6_detection_known_cases() {
        assert_eq!(find_c6(&Graph::cycle(6)), Some([0, 1, 2, 3, 4, 5]));
        assert!(contains_c6(&Graph::cube()));
        assert!(contains_c6(&Graph::complete_bipartite(3, 3)));
        assert!(!contains_c6(&Graph::complete_bipartite(2, 9)));
        assert!(!contains_c6(&Graph::complete(5)));
        assert!(!contains_c6(&Graph::cycle(5)));
        assert!(contains_c6(&Graph::complete(6)));
    }

    #[test]
    fn found_cycle_is_valid_and_counter_agrees() {
        let mut rng = StdRng::seed_from_u64(0x5eed_0012);
        for _ in 0..60 {
            let g = random_graph(&mut rng, 8, 0.35);
            let found = find_c6(&g);
            let count = c6_count(&g).to_u64().unwrap();
            assert_eq!(found.is_some(), count > 0, "{:?}", g);
            if let Some(c) = found {
                for i in 0..6 {
                    assert!(g.has_edge(c[i], c[(i + 1) % 6]));
                }
                let mut sorted = c.to_vec();
                sorted.sort_unstable();
                sorted.dedup();
                assert_eq!(sorted.len(), 6);
            }
        }
    }
}
