//! Finite simple graphs on indexed vertices, with the constructions the
//! ideal-theoretic side needs: complements, induced subgraphs, chordality
//! via perfect elimination orders, and clique / independent-set enumeration.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::set::{VertexSet, MAX_VERTICES};
use crate::{Error, Result};

/// A simple graph whose vertices are a subset of `{1, ..., n}`.
///
/// `n` is the ambient index range (and the ambient polynomial ring size for
/// the ideals built from the graph); `verts` is the set of vertices actually
/// present. Standard constructors produce graphs on the full range; proper
/// subsets arise from [`Graph::induced`] and vertex deletion.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    verts: VertexSet,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph on `{1, ..., n}`.
    pub fn empty(n: usize) -> Result<Graph> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::BadVertexCount(n));
        }
        Ok(Graph {
            n,
            verts: VertexSet::full(n),
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    /// The path `x_1 - x_2 - ... - x_n`.
    pub fn path(n: usize) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for v in 1..n {
            g.add_edge(v, v + 1)?;
        }
        Ok(g)
    }

    /// The cycle `x_1 - x_2 - ... - x_n - x_1`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::CycleTooSmall(n));
        }
        let mut g = Graph::path(n)?;
        g.add_edge(n, 1)?;
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for i in 1..=n {
            for j in (i + 1)..=n {
                g.add_edge(i, j)?;
            }
        }
        Ok(g)
    }

    /// Graph on `{1, ..., n}` from an explicit edge list.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(i, j) in edges {
            g.add_edge(i, j)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, i: usize, j: usize) -> Result<()> {
        for v in [i, j] {
            if v == 0 || v > self.n {
                return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
            }
            if !self.verts.contains(v) {
                return Err(Error::NotAVertex(v));
            }
        }
        if i == j {
            return Err(Error::LoopEdge(i, j));
        }
        self.adj[i - 1] = self.adj[i - 1].insert(j);
        self.adj[j - 1] = self.adj[j - 1].insert(i);
        Ok(())
    }

    /// Ambient index range (ring variable count for ideals).
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        self.verts
    }

    pub fn vertex_count(&self) -> usize {
        self.verts.len()
    }

    pub fn has_vertex(&self, v: usize) -> bool {
        self.verts.contains(v)
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i >= 1 && i <= self.n && self.adj[i - 1].contains(j)
    }

    /// Open neighborhood; `v` must be a vertex.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        debug_assert!(self.has_vertex(v));
        self.adj[v - 1]
    }

    /// `N[v] = N(v) ∪ {v}`.
    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet> {
        if v == 0 || v > self.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        if !self.verts.contains(v) {
            return Err(Error::NotAVertex(v));
        }
        Ok(self.adj[v - 1].insert(v))
    }

    /// Edges as sorted pairs `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in self.verts.iter() {
            for j in self.adj[i - 1].above(i).iter() {
                out.push((i, j));
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.verts.iter().map(|v| self.adj[v - 1].len()).sum::<usize>() / 2
    }

    /// True when `s` is a set of pairwise-adjacent vertices of the graph.
    pub fn is_clique(&self, s: VertexSet) -> bool {
        if !s.is_subset_of(self.verts) {
            return false;
        }
        s.iter().all(|v| s.remove(v).is_subset_of(self.adj[v - 1]))
    }

    /// True when `s` contains no edge.
    pub fn is_independent_set(&self, s: VertexSet) -> bool {
        s.is_subset_of(self.verts) && s.iter().all(|v| s.is_disjoint(self.adj[v - 1]))
    }

    /// Complement on the same vertex set: `{i, j}` is an edge iff it is not
    /// an edge here (both endpoints staying within `verts`).
    pub fn complement(&self) -> Graph {
        let mut adj = vec![VertexSet::EMPTY; self.n];
        for v in self.verts.iter() {
            adj[v - 1] = self.verts.remove(v).difference(self.adj[v - 1]);
        }
        Graph {
            n: self.n,
            verts: self.verts,
            adj,
        }
    }

    /// Induced subgraph on `s ⊆ verts`, keeping original labels and ambient `n`.
    pub fn induced(&self, s: VertexSet) -> Result<Graph> {
        if !s.is_subset_of(self.verts) {
            return Err(Error::NotAVertexSubset(s));
        }
        let mut adj = vec![VertexSet::EMPTY; self.n];
        for v in s.iter() {
            adj[v - 1] = self.adj[v - 1].intersection(s);
        }
        Ok(Graph {
            n: self.n,
            verts: s,
            adj,
        })
    }

    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        if !self.has_vertex(v) {
            return Err(Error::NotAVertex(v));
        }
        self.induced(self.verts.remove(v))
    }

    /// `G \ N[v]`.
    pub fn delete_closed_neighborhood(&self, v: usize) -> Result<Graph> {
        let closed = self.closed_neighborhood(v)?;
        self.induced(self.verts.difference(closed))
    }

    /// True when `N[v]` induces a complete subgraph.
    pub fn is_simplicial_vertex(&self, v: usize) -> Result<bool> {
        Ok(self.is_clique(self.closed_neighborhood(v)?))
    }

    /// Lowest-index vertex that is simplicial, if any.
    pub fn lowest_simplicial_vertex(&self) -> Option<usize> {
        self.verts
            .iter()
            .find(|&v| self.is_clique(self.adj[v - 1].insert(v)))
    }

    /// Greedy simplicial elimination, lowest index first. Returns an order
    /// exactly when the graph is chordal; the chordality test is "an order
    /// exists".
    pub fn perfect_elimination_order(&self) -> Option<Vec<usize>> {
        let mut remaining = self.verts;
        let mut order = Vec::with_capacity(self.vertex_count());
        while !remaining.is_empty() {
            let v = remaining
                .iter()
                .find(|&v| self.is_clique(self.adj[v - 1].intersection(remaining).insert(v)))?;
            order.push(v);
            remaining = remaining.remove(v);
        }
        Some(order)
    }

    pub fn is_chordal(&self) -> bool {
        self.perfect_elimination_order().is_some()
    }

    /// All `t`-subsets of the vertex set inducing complete subgraphs, in
    /// colexicographic order. `t = 0` yields the empty clique.
    pub fn enumerate_cliques(&self, t: usize) -> Vec<VertexSet> {
        if t == 0 {
            return vec![VertexSet::EMPTY];
        }
        let mut out = Vec::new();
        self.clique_rec(VertexSet::EMPTY, t, self.verts, &mut out);
        out.sort_unstable();
        out
    }

    fn clique_rec(&self, chosen: VertexSet, need: usize, candidates: VertexSet, out: &mut Vec<VertexSet>) {
        if need == 0 {
            out.push(chosen);
            return;
        }
        for v in candidates.iter() {
            let next = candidates.above(v).intersection(self.adj[v - 1]);
            if next.len() + 1 >= need {
                self.clique_rec(chosen.insert(v), need - 1, next, out);
            }
        }
    }

    /// All `t`-subsets containing no edge, in colexicographic order; equal to
    /// `self.complement().enumerate_cliques(t)` by definition.
    pub fn enumerate_independent_sets(&self, t: usize) -> Vec<VertexSet> {
        self.complement().enumerate_cliques(t)
    }

    /// True when `self` is a subgraph of `host` (same ambient range, vertex
    /// subset, edge subset).
    pub fn is_subgraph_of(&self, host: &Graph) -> bool {
        self.n == host.n
            && self.verts.is_subset_of(host.verts)
            && self
                .verts
                .iter()
                .all(|v| self.adj[v - 1].is_subset_of(host.adj[v - 1]))
    }

    /// Deterministic-for-seed chordal graph built by reverse simplicial-vertex
    /// insertion: vertex `k + 1` attaches to a (possibly empty) clique of the
    /// current graph chosen by the seeded generator.
    pub fn random_chordal(n: usize, seed: u64) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for k in 2..=n {
            let anchor = rng.gen_range(1..k);
            let mut scan: Vec<usize> = (1..k).filter(|&v| v != anchor).collect();
            scan.shuffle(&mut rng);
            let mut clique = VertexSet::singleton(anchor);
            for v in scan {
                if clique.is_subset_of(g.adj[v - 1]) {
                    clique = clique.insert(v);
                }
            }
            let mut members = clique.vertices();
            members.shuffle(&mut rng);
            let attach = rng.gen_range(0..=members.len());
            for &v in &members[..attach] {
                g.add_edge(k, v)?;
            }
        }
        Ok(g)
    }

    /// Checks a candidate co-chordal cover of the `t`-cliques of the graph:
    /// every member's complement (on its own vertex set) must be chordal and
    /// every `t`-clique must be a `t`-clique of some member. When valid, the
    /// associated regularity bound `(t - 1) * |cover|` is reported.
    pub fn verify_cochordal_cover(&self, t: usize, cover: &[Graph]) -> Result<CoverCheck> {
        for (k, h) in cover.iter().enumerate() {
            if !h.is_subgraph_of(self) {
                return Err(Error::NotASubgraph(k + 1));
            }
        }
        let cochordal = cover.iter().all(|h| h.complement().is_chordal());
        let covered = self
            .enumerate_cliques(t)
            .into_iter()
            .all(|w| cover.iter().any(|h| h.is_clique(w)));
        let valid = cochordal && covered;
        Ok(CoverCheck {
            valid,
            bound: valid.then(|| t.saturating_sub(1) * cover.len()),
        })
    }

    /// Greedy co-chordal cover of the `t`-cliques by induced subgraphs:
    /// repeatedly picks the induced co-chordal subgraph covering the most
    /// uncovered `t`-cliques (lowest vertex-set mask on ties). Exponential in
    /// the vertex count, so guarded at `n <= 9`.
    pub fn greedy_cochordal_cover(&self, t: usize) -> Result<Vec<Graph>> {
        if self.n > 9 {
            return Err(Error::SizeGuard { n: self.n, limit: 9 });
        }
        let mut uncovered = self.enumerate_cliques(t);
        let mut candidates = Vec::new();
        for mask in 0..=VertexSet::full(self.n).mask() {
            let s = VertexSet::from_mask(mask);
            if !s.is_subset_of(self.verts) || s.len() < t {
                continue;
            }
            let h = self.induced(s)?;
            if h.complement().is_chordal() {
                candidates.push(h);
            }
        }
        let mut cover = Vec::new();
        while !uncovered.is_empty() {
            let best = candidates
                .iter()
                .max_by_key(|h| {
                    let hits = uncovered.iter().filter(|&&w| h.is_clique(w)).count();
                    // Prefer more coverage; break ties toward the smaller mask.
                    (hits, std::cmp::Reverse(h.verts.mask()))
                })
                .expect("every t-clique induces a co-chordal candidate");
            let best = best.clone();
            let before = uncovered.len();
            uncovered.retain(|&w| !best.is_clique(w));
            debug_assert!(uncovered.len() < before);
            cover.push(best);
        }
        Ok(cover)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, verts={}, edges={:?})", self.n, self.verts, self.edges())
    }
}

/// Result of [`Graph::verify_cochordal_cover`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CoverCheck {
    pub valid: bool,
    /// `(t - 1) * |cover|`, present only for valid covers.
    pub bound: Option<usize>,
}

/// Wire format for graphs: `{"n": 5, "edges": [[1,2],[2,3]]}`.
///
/// `verts` is emitted only for proper induced subgraphs, which the plain
/// schema cannot express.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verts: Option<Vec<usize>>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> GraphJson {
        GraphJson {
            n: g.n,
            edges: g.edges(),
            verts: (g.verts != VertexSet::full(g.n)).then(|| g.verts.vertices()),
        }
    }
}

impl TryFrom<GraphJson> for Graph {
    type Error = Error;

    fn try_from(j: GraphJson) -> Result<Graph> {
        let mut g = Graph::empty(j.n)?;
        if let Some(vs) = j.verts {
            let s = VertexSet::from_vertices(vs)?;
            if !s.fits_within(j.n) {
                return Err(Error::NotAVertexSubset(s));
            }
            g = g.induced(s)?;
        }
        for (i, k) in j.edges {
            g.add_edge(i, k)?;
        }
        Ok(g)
    }
}

/// The CLI graph grammar: `path:5`, `cycle:6`, `complete:4`,
/// `complement:<spec>`, `file:g.json`; plus the programmatic `edges` and
/// `induced` forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphSpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Complement(Box<GraphSpec>),
    Edges { n: usize, edges: Vec<(usize, usize)> },
    Induced(Box<GraphSpec>, VertexSet),
    File(String),
}

impl GraphSpec {
    /// Builds the graph, resolving `file:` specs through `load`.
    pub fn build_with(&self, load: &mut dyn FnMut(&str) -> Result<Graph>) -> Result<Graph> {
        match self {
            GraphSpec::Path(n) => Graph::path(*n),
            GraphSpec::Cycle(n) => Graph::cycle(*n),
            GraphSpec::Complete(n) => Graph::complete(*n),
            GraphSpec::Complement(inner) => Ok(inner.build_with(load)?.complement()),
            GraphSpec::Edges { n, edges } => Graph::from_edges(*n, edges),
            GraphSpec::Induced(inner, s) => inner.build_with(load)?.induced(*s),
            GraphSpec::File(path) => load(path),
        }
    }

    /// Builds the graph; `file:` specs are rejected.
    pub fn build(&self) -> Result<Graph> {
        self.build_with(&mut |_| Err(Error::FileSpecUnsupported))
    }
}

impl std::str::FromStr for GraphSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<GraphSpec> {
        let bad = || Error::BadGraphSpec(s.to_string());
        let (head, rest) = s.split_once(':').ok_or_else(bad)?;
        match head {
            "path" | "cycle" | "complete" => {
                let n: usize = rest.parse().map_err(|_| bad())?;
                Ok(match head {
                    "path" => GraphSpec::Path(n),
                    "cycle" => GraphSpec::Cycle(n),
                    _ => GraphSpec::Complete(n),
                })
            }
            "complement" => Ok(GraphSpec::Complement(Box::new(rest.parse()?))),
            "file" if !rest.is_empty() => Ok(GraphSpec::File(rest.to_string())),
            _ => Err(bad()),
        }
    }
}

pub fn build_graph(spec: &GraphSpec) -> Result<Graph> {
    spec.build()
}
