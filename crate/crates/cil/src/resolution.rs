//! Structural Betti machinery: linear quotients and their Betti formula,
//! chordal vertex splittings, Betti-splitting verification, the recursive
//! Betti numbers of path independence ideals, and the closed-form
//! regularity / projective-dimension statements for paths and cycles.

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::homology::{BettiTable, Subject};
use crate::ideal::{clique_ideal, Monomial, MonomialIdeal};
use crate::limits;
use crate::set::VertexSet;
use crate::{Error, Result};

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for step in 0..k {
        acc = acc * (n - step) as u128 / (step + 1) as u128;
    }
    acc as u64
}

/// An order of linear quotients on the minimal generators of an ideal,
/// together with the variable sets generating each colon ideal
/// `(f_1, ..., f_{i-1}) : (f_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearQuotientOrder {
    n: usize,
    order: Vec<Monomial>,
    sets: Vec<VertexSet>,
}

impl LinearQuotientOrder {
    /// Validates the given generator order and computes the colon sets from
    /// the definition: `x` lies in the colon of `f_i` iff some earlier
    /// `f_k` has `supp(f_k) \ supp(f_i) = {x}`, and the colon is generated
    /// by variables iff every difference `supp(f_l) \ supp(f_i)` contains
    /// such a singleton.
    pub fn from_order(n: usize, order: Vec<VertexSet>) -> Result<LinearQuotientOrder> {
        for &g in &order {
            if !g.fits_within(n) {
                return Err(Error::SupportOutOfRange { support: g, n });
            }
        }
        for (a, &ga) in order.iter().enumerate() {
            for (b, &gb) in order.iter().enumerate() {
                if a != b && ga.is_subset_of(gb) {
                    return Err(Error::NotMinimalGenerators);
                }
            }
        }
        let mut sets = Vec::with_capacity(order.len());
        for (i, &g) in order.iter().enumerate() {
            let diffs: Vec<VertexSet> = order[..i].iter().map(|&f| f.difference(g)).collect();
            let singles = diffs
                .iter()
                .filter(|d| d.len() == 1)
                .fold(VertexSet::EMPTY, |acc, &d| acc.union(d));
            if diffs.iter().any(|d| d.intersection(singles).is_empty()) {
                return Err(Error::NotLinearQuotients(i + 1));
            }
            sets.push(singles);
        }
        Ok(LinearQuotientOrder {
            n,
            order: order.into_iter().map(Monomial::new).collect(),
            sets,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> &[Monomial] {
        &self.order
    }

    pub fn sets(&self) -> &[VertexSet] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// The ideal generated by the ordered generators, in canonical form.
    pub fn ideal(&self) -> MonomialIdeal {
        MonomialIdeal::new(self.n, self.order.iter().map(|g| g.support()))
            .expect("validated supports")
    }

    /// Graded Betti numbers from the colon sets:
    /// `β_{i,j}(I) = Σ_{deg f_t = j-i} C(|set(f_t)|, i)`.
    pub fn betti_table(&self) -> BettiTable {
        let mut table = BettiTable::new(Subject::Ideal);
        for (g, s) in self.order.iter().zip(&self.sets) {
            let deg = g.degree();
            for i in 0..=s.len() {
                table.add(i, deg + i, binomial(s.len(), i));
            }
        }
        table
    }
}

/// Wire format for linear-quotient certificates: the ordered generator
/// supports plus the claimed per-step colon sets, re-verifiable offline.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LinearQuotientCertificate {
    pub n: usize,
    pub order: Vec<Vec<usize>>,
    pub sets: Vec<Vec<usize>>,
}

impl From<&LinearQuotientOrder> for LinearQuotientCertificate {
    fn from(lq: &LinearQuotientOrder) -> LinearQuotientCertificate {
        LinearQuotientCertificate {
            n: lq.n,
            order: lq.order.iter().map(|g| g.support().vertices()).collect(),
            sets: lq.sets.iter().map(|s| s.vertices()).collect(),
        }
    }
}

impl TryFrom<LinearQuotientCertificate> for LinearQuotientOrder {
    type Error = Error;

    fn try_from(cert: LinearQuotientCertificate) -> Result<LinearQuotientOrder> {
        let order = cert
            .order
            .into_iter()
            .map(VertexSet::from_vertices)
            .collect::<Result<Vec<_>>>()?;
        let claimed = cert
            .sets
            .into_iter()
            .map(VertexSet::from_vertices)
            .collect::<Result<Vec<_>>>()?;
        let lq = LinearQuotientOrder::from_order(cert.n, order)?;
        if claimed.len() != lq.sets.len() {
            return Err(Error::CertificateSetMismatch(claimed.len() + 1));
        }
        for (k, (&c, &s)) in claimed.iter().zip(&lq.sets).enumerate() {
            if c != s {
                return Err(Error::CertificateSetMismatch(k + 1));
            }
        }
        Ok(lq)
    }
}

/// Searches for an order of linear quotients: greedy extension over the
/// colex-sorted generators with full backtracking, memoizing dead prefix
/// sets (a prefix's viability depends only on the set of chosen
/// generators). Up to [`limits::LQ_EXHAUSTIVE_GENERATORS`] generators the
/// search runs to exhaustion, so `None` is a proof of absence; beyond that a
/// step budget applies and running out of budget is an error.
pub fn find_linear_quotients(ideal: &MonomialIdeal) -> Result<Option<LinearQuotientOrder>> {
    if ideal.is_zero() {
        return Err(Error::LinearQuotientsUndefined("zero"));
    }
    if ideal.is_unit() {
        return Err(Error::LinearQuotientsUndefined("unit"));
    }
    let supports: Vec<u64> = ideal.generator_supports().map(|s| s.mask()).collect();
    let m = supports.len();
    if m > 128 {
        return Err(Error::LinearQuotientBudget(0));
    }
    let mut search = LqSearch {
        supports,
        dead: HashSet::new(),
        steps: 0,
        budget: (m > limits::LQ_EXHAUSTIVE_GENERATORS).then_some(limits::LQ_SEARCH_BUDGET),
    };
    let mut chosen = Vec::with_capacity(m);
    if search.dfs(&mut chosen, 0)? {
        let order: Vec<VertexSet> = chosen
            .iter()
            .map(|&k| VertexSet::from_mask(search.supports[k]))
            .collect();
        Ok(Some(LinearQuotientOrder::from_order(ideal.n(), order)?))
    } else {
        Ok(None)
    }
}

struct LqSearch {
    supports: Vec<u64>,
    dead: HashSet<u128>,
    steps: u64,
    budget: Option<u64>,
}

impl LqSearch {
    fn admissible(&self, chosen: &[usize], cand: usize) -> bool {
        let g = self.supports[cand];
        let mut singles = 0u64;
        for &k in chosen {
            let d = self.supports[k] & !g;
            if d.count_ones() == 1 {
                singles |= d;
            }
        }
        chosen.iter().all(|&l| self.supports[l] & !g & singles != 0)
    }

    fn dfs(&mut self, chosen: &mut Vec<usize>, chosen_mask: u128) -> Result<bool> {
        if chosen.len() == self.supports.len() {
            return Ok(true);
        }
        if self.dead.contains(&chosen_mask) {
            return Ok(false);
        }
        for cand in 0..self.supports.len() {
            let bit = 1u128 << cand;
            if chosen_mask & bit != 0 {
                continue;
            }
            self.steps += 1;
            if let Some(budget) = self.budget {
                if self.steps > budget {
                    return Err(Error::LinearQuotientBudget(self.steps));
                }
            }
            if self.admissible(chosen, cand) {
                chosen.push(cand);
                if self.dfs(chosen, chosen_mask | bit)? {
                    return Ok(true);
                }
                chosen.pop();
            }
        }
        self.dead.insert(chosen_mask);
        Ok(false)
    }
}

/// Leaf classification of a vertex split tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LeafKind {
    Zero,
    Unit,
    Principal,
}

/// Recursive witness that an ideal is vertex splittable: at every split,
/// `I = x·I_1 + I_2` with `I_2 ⊆ I_1` and `G(I)` the disjoint union of
/// `G(x·I_1)` and `G(I_2)`.
#[derive(Clone, Debug)]
pub struct VertexSplitTree {
    ideal: MonomialIdeal,
    node: SplitNode,
}

#[derive(Clone, Debug)]
pub enum SplitNode {
    Leaf(LeafKind),
    Split {
        vertex: usize,
        /// Tree for `I_1` (the factor of `x`).
        left: Box<VertexSplitTree>,
        /// Tree for `I_2`.
        right: Box<VertexSplitTree>,
    },
}

impl VertexSplitTree {
    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn node(&self) -> &SplitNode {
        &self.node
    }

    /// Checks the vertex splitting invariants at every node.
    pub fn verify(&self) -> bool {
        match &self.node {
            SplitNode::Leaf(LeafKind::Zero) => self.ideal.is_zero(),
            SplitNode::Leaf(LeafKind::Unit) => self.ideal.is_unit(),
            SplitNode::Leaf(LeafKind::Principal) => self.ideal.num_generators() == 1,
            SplitNode::Split { vertex, left, right } => {
                let Ok(scaled) = left.ideal.times_var(*vertex) else {
                    return false;
                };
                let Ok(total) = right.ideal.sum(&scaled) else {
                    return false;
                };
                let contained = matches!(left.ideal.contains_ideal(&right.ideal), Ok(true));
                let disjoint_union = scaled.num_generators() + right.ideal.num_generators()
                    == self.ideal.num_generators();
                total == self.ideal && contained && disjoint_union && left.verify() && right.verify()
            }
        }
    }

    /// Every split vertex with its three ideals `(I, I_1, I_2)`, root first.
    pub fn split_nodes(&self) -> Vec<(&MonomialIdeal, usize, &MonomialIdeal, &MonomialIdeal)> {
        let mut out = Vec::new();
        self.collect_splits(&mut out);
        out
    }

    fn collect_splits<'a>(
        &'a self,
        out: &mut Vec<(&'a MonomialIdeal, usize, &'a MonomialIdeal, &'a MonomialIdeal)>,
    ) {
        if let SplitNode::Split { vertex, left, right } = &self.node {
            out.push((&self.ideal, *vertex, &left.ideal, &right.ideal));
            left.collect_splits(out);
            right.collect_splits(out);
        }
    }

    /// The constructive order of linear quotients carried by the splitting:
    /// `x`-scaled generators of `I_1` first (recursively ordered), then the
    /// generators of `I_2`; the colon sets come out as `set(x f) = set(f)`
    /// and `set(g) = set(g) ∪ {x}`.
    pub fn linear_quotients(&self) -> Result<LinearQuotientOrder> {
        let order = self.collect_order();
        LinearQuotientOrder::from_order(self.ideal.n(), order)
    }

    fn collect_order(&self) -> Vec<VertexSet> {
        match &self.node {
            SplitNode::Leaf(LeafKind::Zero) => Vec::new(),
            SplitNode::Leaf(_) => self.ideal.generator_supports().collect(),
            SplitNode::Split { vertex, left, right } => {
                let mut order: Vec<VertexSet> = left
                    .collect_order()
                    .into_iter()
                    .map(|s| s.insert(*vertex))
                    .collect();
                order.extend(right.collect_order());
                order
            }
        }
    }
}

/// Builds the full vertex split tree of `K_t(G^c)` for a chordal graph `G`,
/// splitting at the lowest-index simplicial vertex at every level:
/// `K_t(G^c) = K_t((G\u)^c) + u·K_{t-1}(H^c)` with `H = G \ N[u]`.
pub fn chordal_vertex_split(g: &Graph, t: usize) -> Result<VertexSplitTree> {
    if !g.is_chordal() {
        return Err(Error::NotChordal);
    }
    if clique_ideal(&g.complement(), t).is_zero() {
        return Err(Error::NotAVertexSplit("the root ideal is zero"));
    }
    build_split(g, t)
}

fn build_split(g: &Graph, t: usize) -> Result<VertexSplitTree> {
    let ideal = clique_ideal(&g.complement(), t);
    let node = if ideal.is_zero() {
        SplitNode::Leaf(LeafKind::Zero)
    } else if ideal.is_unit() {
        SplitNode::Leaf(LeafKind::Unit)
    } else if ideal.is_principal() {
        SplitNode::Leaf(LeafKind::Principal)
    } else {
        let u = g
            .lowest_simplicial_vertex()
            .expect("induced subgraphs of a chordal graph stay chordal");
        let h = g.delete_closed_neighborhood(u)?;
        let rest = g.delete_vertex(u)?;
        SplitNode::Split {
            vertex: u,
            left: Box::new(build_split(&h, t - 1)?),
            right: Box::new(build_split(&rest, t)?),
        }
    };
    Ok(VertexSplitTree { ideal, node })
}

/// Checks the Betti splitting identity
/// `β_{i,j}(I) = β_{i,j}(J) + β_{i-1,j-1}(J) + β_{i,j-1}(K)`
/// entrywise on oracle tables, for a decomposition `I = J + x·K` whose
/// generators are a disjoint union (zero ideals carry empty tables).
pub fn verify_betti_splitting(
    ideal: &MonomialIdeal,
    j: &MonomialIdeal,
    k: &MonomialIdeal,
    vertex: usize,
    table_i: &BettiTable,
    table_j: &BettiTable,
    table_k: &BettiTable,
) -> Result<bool> {
    let scaled = k.times_var(vertex)?;
    let recomposed = j.sum(&scaled)?;
    if recomposed != *ideal
        || j.num_generators() + k.num_generators() != ideal.num_generators()
    {
        return Err(Error::NotAVertexSplit("generators are not a disjoint union"));
    }
    let max_i = [table_i, table_j, table_k]
        .iter()
        .flat_map(|t| t.entries().map(|(i, _, _)| i))
        .max()
        .unwrap_or(0) as i64
        + 1;
    let max_j = [table_i, table_j, table_k]
        .iter()
        .flat_map(|t| t.entries().map(|(_, j, _)| j))
        .max()
        .unwrap_or(0) as i64
        + 1;
    for ii in 0..=max_i {
        for jj in 0..=max_j {
            let lhs = table_i.get(ii, jj);
            let rhs =
                table_j.get(ii, jj) + table_j.get(ii - 1, jj - 1) + table_k.get(ii, jj - 1);
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Graded Betti numbers of `J_t(P_n)` purely by the recursion
/// `β_{i,j}(J_t(P_n)) = β_{i,j-1}(J_t(P_{n-1})) + β_{i,j}(J_{t-1}(P_{n-2}))
/// + β_{i-1,j-1}(J_{t-1}(P_{n-2}))`, with base cases `t = 1` (the principal
/// full product, `β_{0,n} = 1`) and `n = 2t - 1` (the Koszul table of the
/// `t` odd-index variables).
///
/// # Panics
///
/// `t` must be positive.
pub fn path_betti_recursion(n: usize, t: usize) -> Result<BettiTable> {
    assert!(t >= 1, "independence ideals need t >= 1");
    if n < 2 * t - 1 {
        return Err(Error::BelowThreshold { n, min: 2 * t - 1 });
    }
    let mut memo = HashMap::new();
    Ok(path_rec(n, t, &mut memo))
}

fn path_rec(n: usize, t: usize, memo: &mut HashMap<(usize, usize), BettiTable>) -> BettiTable {
    debug_assert!(t >= 1 && n >= 2 * t - 1);
    if let Some(table) = memo.get(&(n, t)) {
        return table.clone();
    }
    let mut table = BettiTable::new(Subject::Ideal);
    if t == 1 {
        table.add(0, n, 1);
    } else if n == 2 * t - 1 {
        for i in 0..t {
            table.add(i, i + 1, binomial(t, i + 1));
        }
    } else {
        let shifted = path_rec(n - 1, t, memo);
        let lower = path_rec(n - 2, t - 1, memo);
        for (i, j, b) in shifted.entries() {
            table.add(i, j + 1, b);
        }
        for (i, j, b) in lower.entries() {
            table.add(i, j, b);
            table.add(i + 1, j + 1, b);
        }
    }
    memo.insert((n, t), table.clone());
    table
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Family {
    Path,
    Cycle,
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Family::Path => write!(f, "path"),
            Family::Cycle => write!(f, "cycle"),
        }
    }
}

/// The closed-form predictions for the path and cycle families. `nonzero`
/// reflects the thresholds `n >= 2t - 1` (paths) and `n >= 2t` (cycles);
/// below threshold only the simplex dimension `n - 1` is reported.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClosedFormInvariants {
    pub family: Family,
    pub n: usize,
    pub t: usize,
    pub nonzero: bool,
    /// `dim Δ_{K_t}`: `2t - 3` above threshold, `n - 1` below.
    pub dim_complex: i64,
    /// `reg(R/K_t)`: `t - 1` for paths (co-chordal case), `2t - 2` for cycles.
    pub reg_quotient_clique: Option<usize>,
    /// `pd(K_t) = n - 2t + 1`.
    pub pd_clique_ideal: Option<usize>,
    /// `pd(R/J_t)`: `t` for paths, `2t - 1` for cycles.
    pub pd_quotient_independence: Option<usize>,
    /// `J_t` has an `(n - 2t + 2)`-linear resolution.
    pub linear_degree: Option<usize>,
}

/// Assembles the predictions; see [`ClosedFormInvariants`].
///
/// # Panics
///
/// `n` and `t` must be positive.
pub fn closed_form_invariants(family: Family, n: usize, t: usize) -> ClosedFormInvariants {
    assert!(n >= 1 && t >= 1, "closed forms need n, t >= 1");
    let threshold = match family {
        Family::Path => 2 * t - 1,
        Family::Cycle => (2 * t).max(3),
    };
    let nonzero = n >= threshold;
    ClosedFormInvariants {
        family,
        n,
        t,
        nonzero,
        dim_complex: if nonzero { 2 * t as i64 - 3 } else { n as i64 - 1 },
        reg_quotient_clique: nonzero.then(|| match family {
            Family::Path => t - 1,
            Family::Cycle => 2 * t - 2,
        }),
        pd_clique_ideal: nonzero.then(|| n + 1 - 2 * t),
        pd_quotient_independence: nonzero.then(|| match family {
            Family::Path => t,
            Family::Cycle => 2 * t - 1,
        }),
        linear_degree: nonzero.then(|| n + 2 - 2 * t),
    }
}

/// The cycle splitting `K_t(C_n^c) = x_n·K_{t-1}(L^c) + K_t(P_{n-1}^c)`,
/// where `L` is the path induced on `V(C_n) \ {x_1, x_{n-1}, x_n}`; the sum
/// identity is verified and the derived bound `pd(R/J_t(C_n)) <= 2t - 1`
/// reported.
#[derive(Clone, Debug)]
pub struct CycleDecomposition {
    /// `K_t(C_n^c)`.
    pub ideal: MonomialIdeal,
    /// `K_{t-1}(L^c)`, multiplied by `x_n` in the identity.
    pub left: MonomialIdeal,
    /// `K_t(P_{n-1}^c)`.
    pub right: MonomialIdeal,
    pub splitting_vertex: usize,
    pub pd_bound: usize,
}

/// # Panics
///
/// `t` must be positive.
pub fn cycle_decomposition(n: usize, t: usize) -> Result<CycleDecomposition> {
    assert!(t >= 1, "clique ideals of interest need t >= 1");
    let cycle = Graph::cycle(n)?;
    if n < 2 * t {
        return Err(Error::BelowThreshold { n, min: 2 * t });
    }
    let keep = cycle
        .vertices()
        .remove(1)
        .remove(n - 1)
        .remove(n);
    let l = cycle.induced(keep)?;
    let path = cycle.delete_vertex(n)?;
    let left = clique_ideal(&l.complement(), t - 1);
    let right = clique_ideal(&path.complement(), t);
    let ideal = clique_ideal(&cycle.complement(), t);
    let recomposed = right.sum(&left.times_var(n)?)?;
    if recomposed != ideal {
        return Err(Error::IdentityFailed("cycle clique-ideal decomposition"));
    }
    Ok(CycleDecomposition {
        ideal,
        left,
        right,
        splitting_vertex: n,
        pd_bound: 2 * t - 1,
    })
}
