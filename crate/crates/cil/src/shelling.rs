//! Shelling verification, the constructive shelling orders of the path and
//! cycle clique complexes, the shelling / linear-quotient bridge, and vertex
//! decomposability.

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::limits;
use crate::resolution::LinearQuotientOrder;
use crate::set::{VertexSet, MAX_VERTICES};
use crate::{Error, Result};

/// An ordered facet list, candidate shelling of a complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShellingOrder {
    n: usize,
    facets: Vec<VertexSet>,
}

impl ShellingOrder {
    pub fn new(n: usize, facets: Vec<VertexSet>) -> ShellingOrder {
        ShellingOrder { n, facets }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn len(&self) -> usize {
        self.facets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }

    /// The complex spanned by the ordered facets.
    pub fn complex(&self) -> Result<SimplicialComplex> {
        SimplicialComplex::from_facets(self.n, self.facets.iter().copied())
    }
}

/// Direct check of the shelling condition: for every `i < j` there must be a
/// vertex `v ∈ F_j \ F_i` and an `l < j` with `F_j \ F_l = {v}`. The order
/// must be a permutation of the facets of the complex.
pub fn verify_shelling(complex: &SimplicialComplex, order: &ShellingOrder) -> Result<bool> {
    let mut sorted = order.facets.clone();
    sorted.sort_unstable();
    if order.n != complex.n() || sorted != complex.facets() {
        return Err(Error::NotAFacetPermutation);
    }
    let facets = &order.facets;
    for j in 1..facets.len() {
        let singles = facets[..j]
            .iter()
            .map(|&f| facets[j].difference(f))
            .filter(|d| d.len() == 1)
            .fold(VertexSet::EMPTY, |acc, d| acc.union(d));
        for &earlier in &facets[..j] {
            if facets[j].difference(earlier).intersection(singles).is_empty() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The shelling of `Δ_{K_t(P^c)}` for the path along `seq`, built
/// recursively: the facets of the one-vertex-shorter path complex first,
/// then the facets of the two-shorter, `t - 1` complex, each augmented by
/// the last two path vertices. Short paths (below the `2t - 1` threshold)
/// contribute their full simplex, and `t = 1` contributes `{∅}`.
fn path_shelling_on(seq: &[usize], t: usize) -> Vec<VertexSet> {
    if t == 1 {
        return vec![VertexSet::EMPTY];
    }
    let m = seq.len();
    if m < 2 * t - 1 {
        return vec![VertexSet::from_vertices(seq.iter().copied()).expect("valid labels")];
    }
    let mut order = path_shelling_on(&seq[..m - 1], t);
    let tail = VertexSet::singleton(seq[m - 2]).insert(seq[m - 1]);
    order.extend(
        path_shelling_on(&seq[..m - 2], t - 1)
            .into_iter()
            .map(|g| g.union(tail)),
    );
    order
}

/// The constructive shelling order of `Δ_{K_t(P_n^c)}`; requires
/// `n >= 2t - 1` (the ideal is nonzero there).
///
/// # Panics
///
/// `t` must be positive.
pub fn path_shelling(n: usize, t: usize) -> Result<ShellingOrder> {
    assert!(t >= 1, "clique complexes of interest need t >= 1");
    if n == 0 || n > MAX_VERTICES {
        return Err(Error::BadVertexCount(n));
    }
    if n < 2 * t - 1 {
        return Err(Error::BelowThreshold { n, min: 2 * t - 1 });
    }
    let seq: Vec<usize> = (1..=n).collect();
    Ok(ShellingOrder::new(n, path_shelling_on(&seq, t)))
}

/// The constructive shelling order of `Δ_{K_t(C_n^c)}`: concatenation of the
/// path shellings of the `n` vertex-deleted path complexes (the path for the
/// deletion of `x_i` runs `x_{i+1}, ..., x_{i-1}` around the cycle), keeping
/// the first occurrence of each facet. Requires `n >= 2t`.
///
/// # Panics
///
/// `t` must be positive.
pub fn cycle_shelling(n: usize, t: usize) -> Result<ShellingOrder> {
    assert!(t >= 1, "clique complexes of interest need t >= 1");
    if n > MAX_VERTICES {
        return Err(Error::BadVertexCount(n));
    }
    if n < 3 {
        return Err(Error::CycleTooSmall(n));
    }
    if n < 2 * t {
        return Err(Error::BelowThreshold { n, min: 2 * t });
    }
    let mut facets = Vec::new();
    let mut seen = HashSet::new();
    for i in 1..=n {
        let seq: Vec<usize> = (1..n).map(|k| (i + k - 1) % n + 1).collect();
        for f in path_shelling_on(&seq, t) {
            if seen.insert(f) {
                facets.push(f);
            }
        }
    }
    Ok(ShellingOrder::new(n, facets))
}

/// Transports a verified shelling `F_1 < ... < F_m` of `Δ` to the order of
/// linear quotients `x^{F_1^c} < ... < x^{F_m^c}` on the minimal generators
/// of the dual Stanley-Reisner ideal `I_{Δ^∨}`. Rejects unverified orders
/// and the degenerate full simplex (whose dual ideal is the unit ideal).
pub fn shelling_to_linear_quotients(
    complex: &SimplicialComplex,
    order: &ShellingOrder,
) -> Result<LinearQuotientOrder> {
    if !verify_shelling(complex, order)? {
        return Err(Error::NotAShelling);
    }
    let n = complex.n();
    if complex.facets() == [VertexSet::full(n)] {
        return Err(Error::DegenerateDual);
    }
    let gens: Vec<VertexSet> = order
        .facets
        .iter()
        .map(|f| f.complement_in(n))
        .collect();
    LinearQuotientOrder::from_order(n, gens)
}

/// Recursive vertex decomposability with memoization on the facet list:
/// a simplex, or some shedding vertex (every facet of the deletion is a
/// facet of the complex) whose link and deletion are both vertex
/// decomposable. Shedding candidates are scanned in ascending index order.
pub fn is_vertex_decomposable(complex: &SimplicialComplex) -> Result<bool> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    limits::check_subset_guard(complex.n())?;
    let mut memo = HashMap::new();
    Ok(vd_rec(complex, &mut memo))
}

fn vd_rec(c: &SimplicialComplex, memo: &mut HashMap<Vec<VertexSet>, bool>) -> bool {
    if c.facets().len() <= 1 {
        return true;
    }
    let key = c.facets().to_vec();
    if let Some(&known) = memo.get(&key) {
        return known;
    }
    let mut result = false;
    for x in c.support().iter() {
        let sx = VertexSet::singleton(x);
        let del = c.deletion(sx).expect("deletion is total");
        let shedding = del
            .facets()
            .iter()
            .all(|f| c.facets().binary_search(f).is_ok());
        if !shedding {
            continue;
        }
        let link = c.link(sx).expect("x is a vertex of the complex");
        if vd_rec(&link, memo) && vd_rec(&del, memo) {
            result = true;
            break;
        }
    }
    memo.insert(key, result);
    result
}

/// Exhaustive shelling search by backtracking over facet orders, memoizing
/// dead placed-sets; a `None` is a proof that no shelling exists. Capped at
/// [`limits::MAX_SHELLING_FACETS`] facets.
pub fn find_shelling(complex: &SimplicialComplex) -> Result<Option<ShellingOrder>> {
    let facets = complex.facets().to_vec();
    let m = facets.len();
    if m > limits::MAX_SHELLING_FACETS {
        return Err(Error::FacetCap(m, limits::MAX_SHELLING_FACETS));
    }
    let mut search = ShellingSearch {
        facets,
        dead: HashSet::new(),
    };
    let mut placed = Vec::with_capacity(m);
    if search.dfs(&mut placed, 0) {
        let order: Vec<VertexSet> = placed.iter().map(|&k| search.facets[k]).collect();
        Ok(Some(ShellingOrder::new(complex.n(), order)))
    } else {
        Ok(None)
    }
}

struct ShellingSearch {
    facets: Vec<VertexSet>,
    dead: HashSet<u32>,
}

impl ShellingSearch {
    fn admissible(&self, placed: &[usize], cand: usize) -> bool {
        let f = self.facets[cand];
        let singles = placed
            .iter()
            .map(|&l| f.difference(self.facets[l]))
            .filter(|d| d.len() == 1)
            .fold(VertexSet::EMPTY, |acc, d| acc.union(d));
        placed
            .iter()
            .all(|&i| !f.difference(self.facets[i]).intersection(singles).is_empty())
    }

    fn dfs(&mut self, placed: &mut Vec<usize>, mask: u32) -> bool {
        if placed.len() == self.facets.len() {
            return true;
        }
        if self.dead.contains(&mask) {
            return false;
        }
        for cand in 0..self.facets.len() {
            let bit = 1u32 << cand;
            if mask & bit != 0 {
                continue;
            }
            if self.admissible(placed, cand) {
                placed.push(cand);
                if self.dfs(placed, mask | bit) {
                    return true;
                }
                placed.pop();
            }
        }
        self.dead.insert(mask);
        false
    }
}

/// Self-contained shelling certificate: the complex (by facets) plus the
/// claimed order, re-verifiable by [`verify_shelling`].
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ShellingCertificate {
    pub n: usize,
    pub facets: Vec<Vec<usize>>,
    pub order: Vec<Vec<usize>>,
}

impl ShellingCertificate {
    pub fn new(complex: &SimplicialComplex, order: &ShellingOrder) -> ShellingCertificate {
        ShellingCertificate {
            n: complex.n(),
            facets: complex.facets().iter().map(|f| f.vertices()).collect(),
            order: order.facets.iter().map(|f| f.vertices()).collect(),
        }
    }

    /// Rebuilds the complex and order and re-runs the verification.
    pub fn verify(&self) -> Result<bool> {
        let complex = SimplicialComplex::from_facets(
            self.n,
            self.facets
                .iter()
                .map(|f| VertexSet::from_vertices(f.iter().copied()))
                .collect::<Result<Vec<_>>>()?,
        )?;
        let order = ShellingOrder::new(
            self.n,
            self.order
                .iter()
                .map(|f| VertexSet::from_vertices(f.iter().copied()))
                .collect::<Result<Vec<_>>>()?,
        );
        verify_shelling(&complex, &order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::stanley_reisner_complex;
    use crate::graph::Graph;
    use crate::ideal::{clique_ideal, independence_ideal};

    fn vs(vs: impl IntoIterator<Item = usize>) -> VertexSet {
        VertexSet::from_vertices(vs).unwrap()
    }

    fn complex(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(n, facets.iter().map(|f| vs(f.iter().copied()))).unwrap()
    }

    fn path_complex(n: usize, t: usize) -> SimplicialComplex {
        stanley_reisner_complex(&clique_ideal(&Graph::path(n).unwrap().complement(), t)).unwrap()
    }

    fn cycle_complex(n: usize, t: usize) -> SimplicialComplex {
        stanley_reisner_complex(&clique_ideal(&Graph::cycle(n).unwrap().complement(), t)).unwrap()
    }

    #[test]
    fn verify_shelling_examples() {
        let d = complex(3, &[&[1, 2], &[2, 3]]);
        let good = ShellingOrder::new(3, vec![vs([1, 2]), vs([2, 3])]);
        assert!(verify_shelling(&d, &good).unwrap());

        let disjoint = complex(4, &[&[1, 2], &[3, 4]]);
        for order in [
            ShellingOrder::new(4, vec![vs([1, 2]), vs([3, 4])]),
            ShellingOrder::new(4, vec![vs([3, 4]), vs([1, 2])]),
        ] {
            assert!(!verify_shelling(&disjoint, &order).unwrap());
        }

        let simplex = SimplicialComplex::simplex(3).unwrap();
        let trivial = ShellingOrder::new(3, vec![vs([1, 2, 3])]);
        assert!(verify_shelling(&simplex, &trivial).unwrap());

        assert!(verify_shelling(&d, &trivial).is_err());
    }

    #[test]
    fn path_shelling_examples() {
        assert_eq!(path_shelling(3, 2).unwrap().facets(), &[vs([1, 2]), vs([2, 3])]);
        assert_eq!(
            path_shelling(5, 2).unwrap().facets(),
            &[vs([1, 2]), vs([2, 3]), vs([3, 4]), vs([4, 5])]
        );

        let order = path_shelling(5, 3).unwrap();
        assert!(order.facets().iter().all(|f| f.len() == 4));
        assert!(verify_shelling(&path_complex(5, 3), &order).unwrap());

        assert!(path_shelling(4, 3).is_err());
    }

    #[test]
    fn cycle_shelling_examples() {
        assert_eq!(
            cycle_shelling(4, 2).unwrap().facets(),
            &[vs([2, 3]), vs([3, 4]), vs([1, 4]), vs([1, 2])]
        );

        let order = cycle_shelling(6, 3).unwrap();
        assert!(order.facets().iter().all(|f| f.len() == 4));
        assert!(verify_shelling(&cycle_complex(6, 3), &order).unwrap());

        let order = cycle_shelling(5, 2).unwrap();
        let direct = cycle_complex(5, 2);
        assert_eq!(order.complex().unwrap(), direct);

        assert!(cycle_shelling(5, 3).is_err());
    }

    #[test]
    fn shelling_to_linear_quotients_examples() {
        // Δ_{3,2} dualizes to J_2(P_3) with generator order x3 < x1.
        let d = path_complex(3, 2);
        let lq = shelling_to_linear_quotients(&d, &path_shelling(3, 2).unwrap()).unwrap();
        let supports: Vec<VertexSet> = lq.order().iter().map(|g| g.support()).collect();
        assert_eq!(supports, vec![vs([3]), vs([1])]);
        assert_eq!(lq.sets(), &[VertexSet::EMPTY, vs([3])]);
        assert_eq!(lq.ideal(), independence_ideal(&Graph::path(3).unwrap(), 2));

        // The 4-cycle order gives J_2(C_4) with colon sets of sizes 0,1,1,2.
        let d = cycle_complex(4, 2);
        let lq = shelling_to_linear_quotients(&d, &cycle_shelling(4, 2).unwrap()).unwrap();
        let sizes: Vec<usize> = lq.sets().iter().map(|s| s.len()).collect();
        assert_eq!(sizes, vec![0, 1, 1, 2]);
        assert_eq!(lq.ideal(), independence_ideal(&Graph::cycle(4).unwrap(), 2));

        // Dualizing a full simplex is degenerate.
        let simplex = SimplicialComplex::simplex(3).unwrap();
        let order = ShellingOrder::new(3, vec![vs([1, 2, 3])]);
        assert!(matches!(
            shelling_to_linear_quotients(&simplex, &order),
            Err(Error::DegenerateDual)
        ));

        // Unverified orders are rejected.
        let disjoint = complex(4, &[&[1, 2], &[3, 4]]);
        let bad = ShellingOrder::new(4, vec![vs([1, 2]), vs([3, 4])]);
        assert!(matches!(
            shelling_to_linear_quotients(&disjoint, &bad),
            Err(Error::NotAShelling)
        ));
    }

    #[test]
    fn vertex_decomposability_examples() {
        assert!(is_vertex_decomposable(&SimplicialComplex::simplex(4).unwrap()).unwrap());

        let j = independence_ideal(&Graph::path(5).unwrap(), 2);
        let d = stanley_reisner_complex(&j).unwrap();
        assert!(is_vertex_decomposable(&d).unwrap());

        assert!(!is_vertex_decomposable(&complex(4, &[&[1, 2], &[3, 4]])).unwrap());
        assert!(is_vertex_decomposable(&SimplicialComplex::void(3)).is_err());
    }

    #[test]
    fn find_shelling_examples() {
        let square = cycle_complex(4, 2);
        let found = find_shelling(&square).unwrap().expect("shellable");
        assert!(verify_shelling(&square, &found).unwrap());

        assert_eq!(find_shelling(&complex(4, &[&[1, 2], &[3, 4]])).unwrap(), None);

        let single = complex(3, &[&[1, 3]]);
        let found = find_shelling(&single).unwrap().unwrap();
        assert_eq!(found.facets(), &[vs([1, 3])]);
    }

    #[test]
    fn certificate_round_trip() {
        let d = cycle_complex(4, 2);
        let order = cycle_shelling(4, 2).unwrap();
        let cert = ShellingCertificate::new(&d, &order);
        assert!(cert.verify().unwrap());

        let json = serde_json::to_string(&cert).unwrap();
        let back: ShellingCertificate = serde_json::from_str(&json).unwrap();
        assert!(back.verify().unwrap());

        let mut tampered = cert;
        tampered.order.swap(0, 3);
        // {1,2} first cannot be continued by {3,4}-style jumps here; the
        // reordered list is still a permutation, so verify runs and fails.
        assert!(!tampered.verify().unwrap());
    }
}
