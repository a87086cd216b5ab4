//! Exhaustive extremal-number computation at desk scale: isomorphism-free
//! enumeration, `ex(n, H)` and `ex(a, b, H)` by stratum descent, and sweep
//! campaigns that evaluate every bound against every enumerated graph.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::bounds::{evaluate, BoundId, BoundReport, Verdict};
use crate::detect::{contains_c6, contains_cube, contains_cube_diag};
use crate::graph::{bipartition, Graph};
use crate::graph6::to_graph6;

/// Isomorphism-free enumeration is all-strata exhaustive, so it stops here.
pub const MAX_ENUM_VERTICES: usize = 9;
/// Bipartite hosts are searched over edge-grid subsets; 2^20 per stratum
/// is the comfort limit.
pub const MAX_GRID_CELLS: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SearchError {
    #[error("enumeration supports at most {max} vertices (requested {n})")]
    TooManyVertices { n: usize, max: usize },
    #[error("bipartite search supports at most {max} grid cells (requested {a}×{b})")]
    GridTooLarge { a: usize, b: usize, max: usize },
}

// ============================================================
// Forbidden patterns
// ============================================================

/// The subgraph a search forbids (containment is as subgraph, not
/// induced).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Forbidden {
    K3,
    C4,
    C6,
    /// The 8-vertex, 12-edge cube.
    Q,
    /// The cube plus one main diagonal (13 edges).
    QPlus,
}

impl Forbidden {
    pub fn all() -> [Forbidden; 5] {
        [
            Forbidden::K3,
            Forbidden::C4,
            Forbidden::C6,
            Forbidden::Q,
            Forbidden::QPlus,
        ]
    }

    /// True when `g` contains no copy of the pattern.
    pub fn is_free(&self, g: &Graph) -> bool {
        match self {
            Forbidden::K3 => !contains_triangle(g),
            Forbidden::C4 => !contains_c4(g),
            Forbidden::C6 => !contains_c6(g),
            Forbidden::Q => !contains_cube(g),
            Forbidden::QPlus => !contains_cube_diag(g),
        }
    }
}

fn contains_triangle(g: &Graph) -> bool {
    g.edges()
        .iter()
        .any(|&(u, v)| g.adjacency(u).intersection_count(g.adjacency(v)) > 0)
}

fn contains_c4(g: &Graph) -> bool {
    let n = g.n();
    for u in 0..n {
        for v in u + 1..n {
            if g.adjacency(u).intersection_count(g.adjacency(v)) >= 2 {
                return true;
            }
        }
    }
    false
}

impl fmt::Display for Forbidden {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Forbidden::K3 => "K3",
            Forbidden::C4 => "C4",
            Forbidden::C6 => "C6",
            Forbidden::Q => "Q",
            Forbidden::QPlus => "Qplus",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown forbidden subgraph `{input}` (expected K3, C4, C6, Q, or Qplus)")]
pub struct ParseForbiddenError {
    pub input: String,
}

impl FromStr for Forbidden {
    type Err = ParseForbiddenError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "k3" => Ok(Forbidden::K3),
            "c4" => Ok(Forbidden::C4),
            "c6" => Ok(Forbidden::C6),
            "q" => Ok(Forbidden::Q),
            "qplus" | "q+" => Ok(Forbidden::QPlus),
            _ => Err(ParseForbiddenError {
                input: s.to_owned(),
            }),
        }
    }
}

impl Serialize for Forbidden {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

// ============================================================
// Canonical form
// ============================================================

/// Canonical form of a graph on at most 11 vertices: the vertex-pair
/// adjacency bits in column order ((0,1), (0,2), (1,2), (0,3), …),
/// minimized lexicographically over the relabelings explored below, packed
/// MSB-first so numeric order equals lexicographic order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Code {
    n: u8,
    bits: u64,
}

impl Code {
    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// Rebuilds the graph this code denotes.
    pub fn graph(&self) -> Graph {
        let n = self.n as usize;
        let mut g = Graph::empty(n);
        for j in 0..n {
            for i in 0..j {
                if self.bits >> (63 - pair_index(i, j)) & 1 == 1 {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }
}

fn pair_index(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

/// Stable vertex coloring by iterated neighborhood refinement: start from
/// degrees, replace each color by (color, sorted neighbor colors) until the
/// partition stops splitting. Colors are dense ranks in signature order, so
/// they are isomorphism-invariant.
fn refine_colors(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut color: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    loop {
        let mut sigs: Vec<(usize, Vec<usize>)> = Vec::with_capacity(n);
        for v in 0..n {
            let mut nbr: Vec<usize> = g.neighbors(v).map(|u| color[u]).collect();
            nbr.sort_unstable();
            sigs.push((color[v], nbr));
        }
        let mut distinct: Vec<&(usize, Vec<usize>)> = sigs.iter().collect();
        distinct.sort_unstable();
        distinct.dedup();
        let next: Vec<usize> = sigs
            .iter()
            .map(|s| distinct.binary_search(&s).expect("own signature"))
            .collect();
        let stable = distinct.len() == count_distinct(&color);
        color = next;
        if stable {
            return color;
        }
    }
}

fn count_distinct(color: &[usize]) -> usize {
    let mut seen: Vec<usize> = color.to_vec();
    seen.sort_unstable();
    seen.dedup();
    seen.len()
}

/// The canonical code: minimum adjacency bit-string over all placements
/// that respect the refined color classes (vertices of color c occupy the
/// positions assigned to c), found by depth-first search with prefix
/// pruning. Color classes are isomorphism-invariant, so equal codes hold
/// exactly for isomorphic graphs.
pub fn canonical_code(g: &Graph) -> Code {
    let n = g.n();
    assert!(n <= 11, "codes hold at most C(11,2) = 55 bits");
    if n < 2 {
        return Code { n: n as u8, bits: 0 };
    }
    let color = refine_colors(g);
    // position k must receive a vertex of color slot_color[k]
    let mut slot_color: Vec<usize> = color.clone();
    slot_color.sort_unstable();

    struct Dfs<'g> {
        g: &'g Graph,
        color: Vec<usize>,
        slot_color: Vec<usize>,
        placed: Vec<usize>,
        used: Vec<bool>,
        cur: u64,
        best: Option<u64>,
    }

    impl Dfs<'_> {
        fn run(&mut self) {
            let k = self.placed.len();
            let n = self.g.n();
            if k == n {
                if self.best.map_or(true, |b| self.cur < b) {
                    self.best = Some(self.cur);
                }
                return;
            }
            for v in 0..n {
                if self.used[v] || self.color[v] != self.slot_color[k] {
                    continue;
                }
                let mut column = 0u64;
                for (i, &p) in self.placed.iter().enumerate() {
                    if self.g.has_edge(p, v) {
                        column |= 1 << (63 - pair_index(i, k));
                    }
                }
                let cur = self.cur | column;
                // bits known so far: all pairs within positions 0..=k
                let known = (k + 1) * k / 2;
                let mask = if known == 0 { 0 } else { !0u64 << (64 - known) };
                if let Some(best) = self.best {
                    if cur & mask > best & mask {
                        continue;
                    }
                }
                self.used[v] = true;
                self.placed.push(v);
                let saved = self.cur;
                self.cur = cur;
                self.run();
                self.cur = saved;
                self.placed.pop();
                self.used[v] = false;
            }
        }
    }

    let mut dfs = Dfs {
        g,
        color,
        slot_color,
        placed: Vec::with_capacity(n),
        used: vec![false; n],
        cur: 0,
        best: None,
    };
    dfs.run();
    Code {
        n: n as u8,
        bits: dfs.best.expect("at least one placement"),
    }
}

// ============================================================
// Enumeration
// ============================================================

fn enumerate_codes(n: usize) -> Result<Vec<Code>, SearchError> {
    if n > MAX_ENUM_VERTICES {
        return Err(SearchError::TooManyVertices {
            n,
            max: MAX_ENUM_VERTICES,
        });
    }
    let mut codes = vec![Code { n: 0, bits: 0 }];
    for k in 0..n {
        // extend every class on k vertices by one vertex with every
        // possible neighborhood; every (k+1)-vertex class arises this way
        // (delete any vertex and re-add it)
        let extended: HashSet<Code> = codes
            .par_iter()
            .flat_map_iter(|code| {
                let base = code.graph();
                (0u32..1 << k).map(move |mask| {
                    let mut g = Graph::empty(k + 1);
                    for (u, v) in base.edges() {
                        g.add_edge(u, v);
                    }
                    for u in 0..k {
                        if mask >> u & 1 == 1 {
                            g.add_edge(u, k);
                        }
                    }
                    canonical_code(&g)
                })
            })
            .collect();
        codes = extended.into_iter().collect();
        codes.sort_unstable();
    }
    Ok(codes)
}

/// One representative per isomorphism class of simple graphs on `n`
/// vertices, in canonical-code order. Refuses n above
/// [`MAX_ENUM_VERTICES`].
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>, SearchError> {
    Ok(enumerate_codes(n)?.iter().map(Code::graph).collect())
}

// ============================================================
// Extremal numbers
// ============================================================

/// Which host graph a search ran inside.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Host {
    Complete(usize),
    CompleteBipartite(usize, usize),
}

impl fmt::Display for Host {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Host::Complete(n) => write!(f, "complete_{n}"),
            Host::CompleteBipartite(a, b) => write!(f, "complete_bipartite_{a}_{b}"),
        }
    }
}

/// An extremal number with its witness and enumeration statistics.
///
/// `graphs_examined` counts the graphs tested for the forbidden pattern
/// during the descent (isomorphism classes for complete hosts, edge
/// subsets for bipartite hosts). `canonical_classes` is the size of the
/// enumeration universe for complete hosts, and the number of distinct
/// classes under row/column permutations among the extremal tie set for
/// bipartite hosts.
#[derive(Clone, Debug)]
pub struct SearchResult {
    pub host: Host,
    pub forbidden: Forbidden,
    pub extremal_edges: usize,
    pub witness: Graph,
    pub graphs_examined: u64,
    pub canonical_classes: u64,
}

impl Serialize for SearchResult {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("SearchResult", 6)?;
        s.serialize_field("host", &self.host.to_string())?;
        s.serialize_field("forbidden", &self.forbidden)?;
        s.serialize_field("extremal_edges", &self.extremal_edges)?;
        s.serialize_field("witness_graph6", &to_graph6(&self.witness))?;
        s.serialize_field("graphs_examined", &self.graphs_examined)?;
        s.serialize_field("canonical_classes", &self.canonical_classes)?;
        s.end()
    }
}

/// The Turán number `ex(n, H)`: the maximum edge count of an H-free graph
/// on `n` vertices, exact by exhaustive isomorphism-free enumeration.
/// Strata are visited by descending edge count; the witness is the
/// canonically least extremal graph.
pub fn extremal_number(n: usize, forbidden: Forbidden) -> Result<SearchResult, SearchError> {
    let codes = enumerate_codes(n)?;
    let canonical_classes = codes.len() as u64;
    let mut strata: BTreeMap<usize, Vec<Code>> = BTreeMap::new();
    for code in codes {
        let g = code.graph();
        strata.entry(g.edge_count()).or_default().push(code);
    }
    let mut graphs_examined = 0u64;
    for (&edges, stratum) in strata.iter().rev() {
        // codes sort ascending, so the first hit is the least witness
        let mut found: Option<Graph> = None;
        for code in stratum {
            graphs_examined += 1;
            let g = code.graph();
            if forbidden.is_free(&g) {
                found = Some(g);
                break;
            }
        }
        if let Some(witness) = found {
            return Ok(SearchResult {
                host: Host::Complete(n),
                forbidden,
                extremal_edges: edges,
                witness,
                graphs_examined,
                canonical_classes,
            });
        }
    }
    unreachable!("the edgeless stratum is always pattern-free");
}

/// Iterator over all bitmasks of `bits` bits with exactly `weight` ones,
/// ascending (Gosper's hack).
fn fixed_weight_masks(bits: usize, weight: usize) -> impl Iterator<Item = u32> {
    debug_assert!(bits <= 32 && weight <= bits);
    let first: u32 = if weight == 0 { 0 } else { (1 << weight) - 1 };
    let limit: u64 = 1u64 << bits;
    let mut cur = Some(first);
    std::iter::from_fn(move || {
        let mask = cur?;
        cur = if mask == 0 {
            None
        } else {
            let c = mask & mask.wrapping_neg();
            let r = mask + c;
            let next = (((r ^ mask) >> 2) / c) | r;
            (u64::from(next) < limit).then_some(next)
        };
        Some(mask)
    })
}

fn grid_graph(a: usize, b: usize, mask: u32) -> Graph {
    let mut g = Graph::empty(a + b);
    for r in 0..a {
        for c in 0..b {
            if mask >> (r * b + c) & 1 == 1 {
                g.add_edge(r, a + c);
            }
        }
    }
    g
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..k).collect();
    fn heap(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(items.clone());
            return;
        }
        for i in 0..k {
            heap(items, k - 1, out);
            if k % 2 == 0 {
                items.swap(i, k - 1);
            } else {
                items.swap(0, k - 1);
            }
        }
    }
    heap(&mut items, k, &mut out);
    out
}

/// Minimum grid bitmask over all row and column permutations.
fn grid_canonical(a: usize, b: usize, mask: u32, rows: &[Vec<usize>], cols: &[Vec<usize>]) -> u32 {
    let mut best = u32::MAX;
    for sigma in rows {
        for tau in cols {
            let mut image = 0u32;
            for r in 0..a {
                for c in 0..b {
                    if mask >> (r * b + c) & 1 == 1 {
                        image |= 1 << (sigma[r] * b + tau[c]);
                    }
                }
            }
            best = best.min(image);
        }
    }
    best
}

/// The bipartite Turán number `ex(a, b, H)`: the maximum edge count of an
/// H-free subgraph of K_{a,b}, exact by descending-stratum subset search
/// over the a×b edge grid. The witness is the least grid under row/column
/// permutations among the extremal graphs.
pub fn extremal_number_bipartite(
    a: usize,
    b: usize,
    forbidden: Forbidden,
) -> Result<SearchResult, SearchError> {
    if a * b > MAX_GRID_CELLS {
        return Err(SearchError::GridTooLarge {
            a,
            b,
            max: MAX_GRID_CELLS,
        });
    }
    let cells = a * b;
    let mut graphs_examined = 0u64;
    for m in (0..=cells).rev() {
        let survivors: Vec<u32> = fixed_weight_masks(cells, m)
            .inspect(|_| graphs_examined += 1)
            .filter(|&mask| forbidden.is_free(&grid_graph(a, b, mask)))
            .collect();
        if survivors.is_empty() {
            continue;
        }
        let rows = permutations(a);
        let cols = permutations(b);
        let classes: HashSet<u32> = survivors
            .iter()
            .map(|&mask| grid_canonical(a, b, mask, &rows, &cols))
            .collect();
        let witness_mask = classes.iter().min().copied().expect("nonempty");
        return Ok(SearchResult {
            host: Host::CompleteBipartite(a, b),
            forbidden,
            extremal_edges: m,
            witness: grid_graph(a, b, witness_mask),
            graphs_examined,
            canonical_classes: classes.len() as u64,
        });
    }
    unreachable!("the edgeless stratum is always pattern-free");
}

// ============================================================
// Sweep campaigns
// ============================================================

/// One evaluated (graph, bound) pair recorded by a sweep.
#[derive(Clone, Debug, Serialize)]
pub struct SweepEntry {
    pub graph6: String,
    pub n: usize,
    /// Which bipartition orientation produced the report; `None` for
    /// whole-graph bounds.
    pub orientation: Option<&'static str>,
    pub report: BoundReport,
}

/// Outcome of evaluating a set of bounds against every isomorphism class
/// up to `n_max` vertices (both bipartition orientations where the bound
/// takes one). `violations` is expected to stay empty.
#[derive(Clone, Debug, Serialize)]
pub struct SweepReport {
    pub n_max: usize,
    pub bound_ids: Vec<BoundId>,
    pub graphs_checked: u64,
    pub violations: Vec<SweepEntry>,
    pub tight: Vec<SweepEntry>,
}

fn is_view_bound(id: &BoundId) -> bool {
    use BoundId::*;
    matches!(
        id,
        Thm2P3
            | Thm3Girth8
            | Cor4C6Bip
            | Eq8C6BipSharp
            | Eq10CubeBip
            | Eq12CubeBipSharp
            | Lem10C4Bip
            | Lem11C4D
            | SidorenkoP3
            | QplusLeading
    )
}

/// Evaluates `id` on `g` once per applicable orientation: whole-graph
/// bounds once, bipartition-based bounds on the canonical orientation and
/// its swap (so orientation-asymmetric bounds are certified both ways).
pub fn evaluate_orientations(g: &Graph, id: &BoundId) -> Vec<(Option<&'static str>, BoundReport)> {
    use crate::bounds::{
        eq10_cube_bip_bound, eq12_cube_bip_sharp_bound, eq8_c6_bip_sharp_bound, cor4_c6_bip_bound,
        lem10_c4_bip_bound, lem11_c4_d_bound, qplus_leading, sidorenko_p3_bound, thm2_p3_bound,
        thm3_girth8_bound,
    };
    use BoundId::*;
    if !is_view_bound(id) {
        return vec![(None, evaluate(g, id))];
    }
    let Ok(view) = bipartition(g) else {
        return vec![(None, evaluate(g, id))];
    };
    let swapped = view.swapped();
    let mut out = Vec::with_capacity(2);
    for (name, view) in [("canonical", view), ("swapped", swapped)] {
        let report = match id {
            Thm2P3 => thm2_p3_bound(&view),
            Thm3Girth8 => thm3_girth8_bound(&view),
            Cor4C6Bip => cor4_c6_bip_bound(&view),
            Eq8C6BipSharp => eq8_c6_bip_sharp_bound(&view),
            Eq10CubeBip => eq10_cube_bip_bound(&view),
            Eq12CubeBipSharp => eq12_cube_bip_sharp_bound(&view),
            SidorenkoP3 => sidorenko_p3_bound(&view),
            Lem10C4Bip => match lem10_c4_bip_bound(&view) {
                Ok(report) => report,
                Err(_) => continue,
            },
            Lem11C4D => match lem11_c4_d_bound(&view) {
                Ok(report) => report,
                Err(_) => continue,
            },
            QplusLeading => qplus_leading(view.a() as u64, view.b() as u64),
            _ => unreachable!("view bounds handled above"),
        };
        out.push((Some(name), report));
    }
    out
}

/// Runs every bound in `bound_ids` against every isomorphism class on
/// 0..=n_max vertices and collects violations (expected none) and tight
/// cases. Deterministic regardless of thread count.
pub fn sweep_bounds(n_max: usize, bound_ids: &[BoundId]) -> Result<SweepReport, SearchError> {
    let mut graphs = Vec::new();
    for n in 0..=n_max {
        graphs.extend(enumerate_graphs(n)?);
    }
    let graphs_checked = graphs.len() as u64;

    let entries: Vec<(bool, SweepEntry)> = graphs
        .par_iter()
        .flat_map_iter(|g| {
            let graph6 = to_graph6(g);
            bound_ids.iter().flat_map(move |id| {
                let graph6 = graph6.clone();
                evaluate_orientations(g, id)
                    .into_iter()
                    .filter_map(move |(orientation, report)| {
                        let keep_violation = report.verdict == Verdict::Violated;
                        let keep_tight = report.verdict == Verdict::Holds && report.tight;
                        (keep_violation || keep_tight).then(|| {
                            (
                                keep_violation,
                                SweepEntry {
                                    graph6: graph6.clone(),
                                    n: g.n(),
                                    orientation,
                                    report,
                                },
                            )
                        })
                    })
            })
        })
        .collect();

    let mut violations: Vec<SweepEntry> = Vec::new();
    let mut tight: Vec<SweepEntry> = Vec::new();
    for (is_violation, entry) in entries {
        if is_violation {
            violations.push(entry);
        } else {
            tight.push(entry);
        }
    }
    let sort_key = |e: &SweepEntry| {
        (
            e.n,
            e.graph6.clone(),
            e.report.bound_id.to_string(),
            e.orientation,
        )
    };
    violations.sort_by_key(sort_key);
    tight.sort_by_key(sort_key);
    Ok(SweepReport {
        n_max,
        bound_ids: bound_ids.to_vec(),
        graphs_checked,
        violations,
        tight,
    })
}
