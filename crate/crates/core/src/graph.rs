//! Core graph type and bipartite structure.
//!
//! Graphs are simple, undirected, and labeled by `0..n`. Adjacency is stored
//! as one [`Bitset`] row per vertex so neighborhood intersections (the
//! workhorse of every counting kernel) are cheap. Construction mutates; all
//! analysis operations take `&Graph` and are pure.

use crate::bitset::{Bitset, SetBits};

/// Simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: Vec<Bitset>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            m: 0,
            adj: (0..n).map(|_| Bitset::new(n)).collect(),
        }
    }

    /// Graph on `n` vertices with the given edges. Panics on loops or
    /// out-of-range endpoints; duplicate edges collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Inserts `{u, v}`. Panics on a loop or out-of-range endpoint;
    /// re-inserting an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "edge endpoint out of range");
        assert_ne!(u, v, "loops are not allowed");
        if !self.adj[u].contains(v) {
            self.adj[u].insert(v);
            self.adj[v].insert(u);
            self.m += 1;
        }
    }

    /// Removes `{u, v}` if present.
    pub fn remove_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "edge endpoint out of range");
        if u != v && self.adj[u].contains(v) {
            self.adj[u].remove(v);
            self.adj[v].remove(u);
            self.m -= 1;
        }
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count()
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> SetBits<'_> {
        self.adj[v].iter()
    }

    /// Adjacency row of `v` as a bit set.
    pub fn adjacency(&self, v: usize) -> &Bitset {
        &self.adj[v]
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Multiset of vertex degrees with derived statistics.
    pub fn degree_sequence(&self) -> DegreeSequence {
        let mut degrees: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence { degrees }
    }

    // ---- named constructors used throughout the tests and the CLI ----

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Complete bipartite graph `K_{a,b}`; class A is `0..a`, class B is `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = Graph::empty(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Cycle `C_n` (`n >= 3`): edges `{i, i+1 mod n}`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut g = Graph::empty(n);
        for i in 0..n {
            g.add_edge(i, (i + 1) % n);
        }
        g
    }

    /// Path on `n` vertices (`n - 1` edges).
    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for i in 1..n {
            g.add_edge(i - 1, i);
        }
        g
    }

    /// The 3-dimensional cube: vertices are the 3-bit labels `0..8`,
    /// adjacent when the labels differ in exactly one bit.
    pub fn cube() -> Self {
        let mut g = Graph::empty(8);
        for u in 0..8usize {
            for v in u + 1..8 {
                if (u ^ v).count_ones() == 1 {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// The cube plus one long diagonal (the edge `{0, 7}` joining an
    /// antipodal pair): 13 edges.
    pub fn cube_with_diagonal() -> Self {
        let mut g = Graph::cube();
        g.add_edge(0, 7);
        g
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, e={}, {:?})", self.n, self.m, self.edges())
    }
}

// ============================================================
// Degree sequences
// ============================================================

/// Degree multiset of a graph, sorted descending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeSequence {
    degrees: Vec<usize>,
}

impl DegreeSequence {
    /// Degrees in descending order.
    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn n(&self) -> usize {
        self.degrees.len()
    }

    /// Sum of degrees (`2e` by the handshake identity).
    pub fn sum(&self) -> usize {
        self.degrees.iter().sum()
    }

    /// Average degree `2e/n`; zero for the empty vertex set.
    pub fn d_ave(&self) -> f64 {
        if self.degrees.is_empty() {
            0.0
        } else {
            self.sum() as f64 / self.degrees.len() as f64
        }
    }

    pub fn max_degree(&self) -> usize {
        self.degrees.first().copied().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.degrees.last().copied().unwrap_or(0)
    }

    /// `Σ d_i^r` over the multiset, evaluated in floating point.
    pub fn power_sum(&self, r: f64) -> f64 {
        self.degrees.iter().map(|&d| (d as f64).powf(r)).sum()
    }
}

// ============================================================
// Bipartite views
// ============================================================

/// A witness obstruction to bipartiteness: the vertices of an odd cycle,
/// in cyclic order (consecutive entries and the wrap-around pair are edges).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OddCycle(pub Vec<usize>);

/// A graph together with a 2-coloring of its vertices in which every edge
/// crosses. `class_a` and `class_b` partition `0..n` and are sorted.
///
/// Both classes are nonempty whenever the graph has at least one edge; an
/// edgeless graph puts every vertex in `class_a` (see [`bipartition`]).
#[derive(Clone, Debug)]
pub struct BipartiteView<'g> {
    graph: &'g Graph,
    class_a: Vec<usize>,
    class_b: Vec<usize>,
}

/// Why a requested bipartite view is invalid.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ViewError {
    #[error("classes do not partition the vertex set 0..{n}")]
    NotAPartition { n: usize },
    #[error("edge ({u}, {v}) does not cross the classes")]
    EdgeInsideClass { u: usize, v: usize },
}

impl<'g> BipartiteView<'g> {
    /// Validates that the classes partition the vertex set and that every
    /// edge crosses.
    pub fn new(
        graph: &'g Graph,
        mut class_a: Vec<usize>,
        mut class_b: Vec<usize>,
    ) -> Result<Self, ViewError> {
        class_a.sort_unstable();
        class_b.sort_unstable();
        let n = graph.n();
        let mut seen = vec![false; n];
        for &v in class_a.iter().chain(&class_b) {
            if v >= n || seen[v] {
                return Err(ViewError::NotAPartition { n });
            }
            seen[v] = true;
        }
        if class_a.len() + class_b.len() != n {
            return Err(ViewError::NotAPartition { n });
        }
        let mut in_a = vec![false; n];
        for &v in &class_a {
            in_a[v] = true;
        }
        for (u, v) in graph.edges() {
            if in_a[u] == in_a[v] {
                return Err(ViewError::EdgeInsideClass { u, v });
            }
        }
        Ok(BipartiteView {
            graph,
            class_a,
            class_b,
        })
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn class_a(&self) -> &[usize] {
        &self.class_a
    }

    pub fn class_b(&self) -> &[usize] {
        &self.class_b
    }

    /// |class_a|.
    pub fn a(&self) -> usize {
        self.class_a.len()
    }

    /// |class_b|.
    pub fn b(&self) -> usize {
        self.class_b.len()
    }

    /// The same view with the class roles exchanged.
    pub fn swapped(&self) -> BipartiteView<'g> {
        BipartiteView {
            graph: self.graph,
            class_a: self.class_b.clone(),
            class_b: self.class_a.clone(),
        }
    }
}

/// 2-colors `g` if it has no odd cycle; otherwise returns one witness odd
/// cycle.
///
/// The coloring is canonical: components are processed in order of their
/// smallest vertex, and within a component the side containing that smallest
/// vertex goes to `class_a`. In particular every isolated vertex lands in
/// `class_a`, so `class_b` is empty exactly when the graph has no edges.
pub fn bipartition(g: &Graph) -> Result<BipartiteView<'_>, OddCycle> {
    let n = g.n();
    const UNSET: u8 = 2;
    let mut color = vec![UNSET; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::new();

    for start in 0..n {
        if color[start] != UNSET {
            continue;
        }
        color[start] = 0;
        queue.push_back(start);
        while let Some(u) = queue.pop_front() {
            for w in g.neighbors(u) {
                if color[w] == UNSET {
                    color[w] = 1 - color[u];
                    parent[w] = u;
                    queue.push_back(w);
                } else if color[w] == color[u] && w != u {
                    return Err(odd_cycle_through(&parent, u, w));
                }
            }
        }
    }

    let class_a: Vec<usize> = (0..n).filter(|&v| color[v] == 0).collect();
    let class_b: Vec<usize> = (0..n).filter(|&v| color[v] == 1).collect();
    Ok(BipartiteView {
        graph: g,
        class_a,
        class_b,
    })
}

/// Assembles the odd cycle closed by the non-tree edge `{u, w}` found during
/// the BFS 2-coloring: both endpoints received the same color, so their tree
/// paths to the lowest common ancestor have equal parity and the cycle
/// `u .. lca .. w, u` is odd.
fn odd_cycle_through(parent: &[usize], u: usize, w: usize) -> OddCycle {
    let path_to_root = |mut v: usize| {
        let mut path = vec![v];
        while parent[v] != usize::MAX {
            v = parent[v];
            path.push(v);
        }
        path
    };
    let pu = path_to_root(u);
    let pw = path_to_root(w);
    // Strip the common suffix down to the lowest common ancestor.
    let mut i = pu.len();
    let mut j = pw.len();
    while i > 0 && j > 0 && pu[i - 1] == pw[j - 1] {
        i -= 1;
        j -= 1;
    }
    // pu[..=i] ends at the LCA; pw[..j] is the other branch, deepest first.
    let mut cycle = pu[..=i].to_vec();
    cycle.extend(pw[..j].iter().rev());
    OddCycle(cycle)
}
