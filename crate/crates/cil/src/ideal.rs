//! Squarefree monomial ideals given by their minimal generators, plus the
//! clique and independence ideals of a graph and Alexander duality.

use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::set::{VertexSet, MAX_VERTICES};
use crate::{Error, Result};

/// A squarefree monomial `x^C`, identified with its support `C`.
/// The empty support is the unit monomial `1`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(VertexSet);

impl Monomial {
    pub const ONE: Monomial = Monomial(VertexSet::EMPTY);

    pub fn new(support: VertexSet) -> Monomial {
        Monomial(support)
    }

    pub fn support(self) -> VertexSet {
        self.0
    }

    pub fn degree(self) -> usize {
        self.0.len()
    }

    pub fn is_unit(self) -> bool {
        self.0.is_empty()
    }

    pub fn divides(self, other: Monomial) -> bool {
        self.0.is_subset_of(other.0)
    }

    pub fn lcm(self, other: Monomial) -> Monomial {
        Monomial(self.0.union(other.0))
    }

    /// Multiplies by the variable `x_v`; the result must stay squarefree.
    pub fn times_var(self, v: usize) -> Result<Monomial> {
        if self.0.contains(v) {
            return Err(Error::NotSquarefree(v));
        }
        Ok(Monomial(self.0.insert(v)))
    }
}

impl std::fmt::Display for Monomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, v) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            write!(f, "x{v}")?;
        }
        Ok(())
    }
}

impl std::fmt::Debug for Monomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        std::fmt::Display::fmt(self, f)
    }
}

/// A squarefree monomial ideal in `k[x_1, ..., x_n]`, kept in canonical form:
/// the generators are the unique minimal generating set, sorted
/// colexicographically. The zero ideal has no generators; the unit ideal has
/// the single generator `1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Builds the ideal generated by `supports`, minimalizing: duplicates and
    /// generators containing another generator's support are dropped, and the
    /// rest are sorted colexicographically.
    pub fn new(n: usize, supports: impl IntoIterator<Item = VertexSet>) -> Result<MonomialIdeal> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::BadVertexCount(n));
        }
        let mut gens: Vec<VertexSet> = supports.into_iter().collect();
        for &s in &gens {
            if !s.fits_within(n) {
                return Err(Error::SupportOutOfRange { support: s, n });
            }
        }
        gens.sort_unstable();
        gens.dedup();
        // A support survives iff no other (distinct) support is contained in it.
        let minimal: Vec<Monomial> = gens
            .iter()
            .filter(|&&s| !gens.iter().any(|&t| t != s && t.is_subset_of(s)))
            .map(|&s| Monomial(s))
            .collect();
        Ok(MonomialIdeal { n, gens: minimal })
    }

    /// Canonicalization of an explicit generator list; alias of [`Self::new`].
    pub fn minimalize(n: usize, supports: &[VertexSet]) -> Result<MonomialIdeal> {
        MonomialIdeal::new(n, supports.iter().copied())
    }

    pub fn zero(n: usize) -> MonomialIdeal {
        MonomialIdeal { n, gens: Vec::new() }
    }

    pub fn unit(n: usize) -> MonomialIdeal {
        MonomialIdeal {
            n,
            gens: vec![Monomial::ONE],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_unit()
    }

    pub fn is_principal(&self) -> bool {
        self.gens.len() == 1
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn num_generators(&self) -> usize {
        self.gens.len()
    }

    pub fn generator_supports(&self) -> impl Iterator<Item = VertexSet> + '_ {
        self.gens.iter().map(|g| g.support())
    }

    /// Membership test for a squarefree monomial.
    pub fn contains_monomial(&self, m: Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Ideal containment `other ⊆ self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> Result<bool> {
        if self.n != other.n {
            return Err(Error::AmbientMismatch(self.n, other.n));
        }
        Ok(other.gens.iter().all(|&g| self.contains_monomial(g)))
    }

    /// `self + other`, minimalized.
    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        if self.n != other.n {
            return Err(Error::AmbientMismatch(self.n, other.n));
        }
        MonomialIdeal::new(
            self.n,
            self.generator_supports().chain(other.generator_supports()),
        )
    }

    /// `x_v * self`; every generator must avoid `x_v`.
    pub fn times_var(&self, v: usize) -> Result<MonomialIdeal> {
        if v == 0 || v > self.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        let gens = self
            .gens
            .iter()
            .map(|g| g.times_var(v).map(|m| m.support()))
            .collect::<Result<Vec<_>>>()?;
        MonomialIdeal::new(self.n, gens)
    }

    /// The common degree of the generators, when they are equigenerated.
    pub fn equigenerated_degree(&self) -> Option<usize> {
        let d = self.gens.first()?.degree();
        self.gens.iter().all(|g| g.degree() == d).then_some(d)
    }

    /// Alexander dual: the intersection of the variable primes given by the
    /// generator supports, computed as the minimal transversals of the
    /// support family. Undefined for the zero and unit ideals.
    pub fn alexander_dual(&self) -> Result<MonomialIdeal> {
        if self.is_zero() {
            return Err(Error::DualOfZero);
        }
        if self.is_unit() {
            return Err(Error::DualOfUnit);
        }
        let mut supports: Vec<VertexSet> = self.generator_supports().collect();
        supports.sort_unstable_by_key(|s| s.len());
        let mut transversals: Vec<VertexSet> = vec![VertexSet::EMPTY];
        for s in supports {
            let mut next: Vec<VertexSet> = Vec::with_capacity(transversals.len());
            for &p in &transversals {
                if !p.is_disjoint(s) {
                    next.push(p);
                } else {
                    next.extend(s.iter().map(|v| p.insert(v)));
                }
            }
            next.sort_unstable();
            next.dedup();
            transversals = next
                .iter()
                .filter(|&&p| !next.iter().any(|&q| q != p && q.is_subset_of(p)))
                .copied()
                .collect();
        }
        MonomialIdeal::new(self.n, transversals)
    }
}

impl std::fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "(0)");
        }
        write!(f, "(")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

impl std::fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        std::fmt::Display::fmt(self, f)
    }
}

/// The `t`-clique ideal `K_t(G)`, generated by `x^W` over all `t`-cliques `W`
/// of the graph, in the ambient ring of `G`. `K_0(G)` is the unit ideal and
/// `K_2(G)` is the edge ideal.
pub fn clique_ideal(g: &Graph, t: usize) -> MonomialIdeal {
    let cliques = g.enumerate_cliques(t);
    MonomialIdeal::new(g.n(), cliques).expect("cliques live in the ambient ring")
}

/// The edge ideal `I(G)`, built directly from the edge list.
pub fn edge_ideal(g: &Graph) -> MonomialIdeal {
    MonomialIdeal::new(
        g.n(),
        g.edges()
            .into_iter()
            .map(|(i, j)| VertexSet::singleton(i).insert(j)),
    )
    .expect("edges live in the ambient ring")
}

/// The `t`-independence ideal `J_t(G)`: the intersection of the variable
/// primes `(x_{i_1}, ..., x_{i_t})` over the independent `t`-sets of `G`,
/// computed as the Alexander dual of the clique ideal of the complement.
/// Zero when `G` has no independent `t`-set.
///
/// # Panics
///
/// `t` must be positive.
pub fn independence_ideal(g: &Graph, t: usize) -> MonomialIdeal {
    assert!(t >= 1, "independence ideals need t >= 1");
    let k = clique_ideal(&g.complement(), t);
    if k.is_zero() {
        return MonomialIdeal::zero(g.n());
    }
    let dual = k.alexander_dual().expect("nonzero proper ideal");
    #[cfg(debug_assertions)]
    if g.n() <= crate::limits::DEFAULT_MAX_N {
        debug_assert_eq!(
            dual,
            prime_intersection_by_enumeration(g.n(), &g.enumerate_independent_sets(t)),
            "duality route disagrees with the prime-intersection definition"
        );
    }
    dual
}

/// Brute-force intersection of variable primes: scans all squarefree
/// monomials and keeps the minimal ones hitting every prime's support.
/// Exponential; used as the definitional cross-check for
/// [`independence_ideal`].
pub fn prime_intersection_by_enumeration(n: usize, primes: &[VertexSet]) -> MonomialIdeal {
    let mut members: Vec<VertexSet> = Vec::new();
    for mask in 0..=VertexSet::full(n).mask() {
        let m = VertexSet::from_mask(mask);
        if primes.iter().all(|&p| !m.is_disjoint(p)) {
            members.push(m);
        }
    }
    MonomialIdeal::new(n, members).expect("members live in the ambient ring")
}

/// Wire format for ideals: `{"n": 4, "gens": [[1,3],[1,4],[2,4]]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealJson {
    pub n: usize,
    pub gens: Vec<Vec<usize>>,
}

impl From<&MonomialIdeal> for IdealJson {
    fn from(i: &MonomialIdeal) -> IdealJson {
        IdealJson {
            n: i.n,
            gens: i.gens.iter().map(|g| g.support().vertices()).collect(),
        }
    }
}

impl TryFrom<IdealJson> for MonomialIdeal {
    type Error = Error;

    fn try_from(j: IdealJson) -> Result<MonomialIdeal> {
        let supports = j
            .gens
            .into_iter()
            .map(VertexSet::from_vertices)
            .collect::<Result<Vec<_>>>()?;
        MonomialIdeal::new(j.n, supports)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(vs: impl IntoIterator<Item = usize>) -> VertexSet {
        VertexSet::from_vertices(vs).unwrap()
    }

    fn ideal(n: usize, gens: &[&[usize]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|g| vs(g.iter().copied()))).unwrap()
    }

    #[test]
    fn minimalize_examples() {
        assert_eq!(ideal(3, &[&[1, 2], &[1, 2, 3]]), ideal(3, &[&[1, 2]]));
        assert_eq!(
            ideal(3, &[&[2, 3], &[1, 2], &[2, 3]]),
            ideal(3, &[&[1, 2], &[2, 3]])
        );
        assert!(MonomialIdeal::new(3, []).unwrap().is_zero());
    }

    #[test]
    fn clique_ideal_examples() {
        let p3 = Graph::path(3).unwrap();
        assert_eq!(clique_ideal(&p3, 2).to_string(), "(x1*x2, x2*x3)");

        let p4c = Graph::path(4).unwrap().complement();
        assert_eq!(clique_ideal(&p4c, 2).to_string(), "(x1*x3, x1*x4, x2*x4)");
        assert!(clique_ideal(&p4c, 3).is_zero());
    }

    #[test]
    fn k2_equals_edge_ideal() {
        for n in 1..=7 {
            for seed in 0..5 {
                let g = Graph::random_chordal(n, seed).unwrap();
                assert_eq!(clique_ideal(&g, 2), edge_ideal(&g));
            }
        }
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(clique_ideal(&c5, 2), edge_ideal(&c5));
    }

    #[test]
    fn independence_ideal_examples() {
        let p3 = Graph::path(3).unwrap();
        assert_eq!(independence_ideal(&p3, 2).to_string(), "(x1, x3)");

        let p4 = Graph::path(4).unwrap();
        assert_eq!(
            independence_ideal(&p4, 2).to_string(),
            "(x1*x2, x1*x4, x3*x4)"
        );

        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(
            independence_ideal(&c4, 2),
            ideal(4, &[&[1, 2], &[2, 3], &[3, 4], &[1, 4]])
        );

        // No independent 3-set in C_4.
        assert!(independence_ideal(&c4, 3).is_zero());
    }

    #[test]
    fn independence_ideal_of_t1_is_the_full_product() {
        for g in [Graph::path(5).unwrap(), Graph::cycle(6).unwrap()] {
            let j = independence_ideal(&g, 1);
            assert_eq!(j.generators(), &[Monomial::new(g.vertices())]);
        }
    }

    #[test]
    fn alexander_dual_examples() {
        let i = ideal(3, &[&[1, 3]]);
        assert_eq!(i.alexander_dual().unwrap().to_string(), "(x1, x3)");

        let i = ideal(3, &[&[1, 2], &[2, 3]]);
        assert_eq!(i.alexander_dual().unwrap().to_string(), "(x2, x1*x3)");

        let i = ideal(4, &[&[1, 3], &[1, 4], &[2, 4]]);
        assert_eq!(i.alexander_dual().unwrap().alexander_dual().unwrap(), i);

        assert!(matches!(
            MonomialIdeal::zero(3).alexander_dual(),
            Err(Error::DualOfZero)
        ));
        assert!(matches!(
            MonomialIdeal::unit(3).alexander_dual(),
            Err(Error::DualOfUnit)
        ));
    }

    #[test]
    fn ideal_sum_examples() {
        // Vertex split of K_2(P_4^c) at u = x1.
        let j = ideal(4, &[&[2, 4]]);
        let k = ideal(4, &[&[3], &[4]]);
        let split = j.sum(&k.times_var(1).unwrap()).unwrap();
        assert_eq!(split, ideal(4, &[&[2, 4], &[1, 3], &[1, 4]]));

        let i = ideal(4, &[&[1, 3]]);
        assert_eq!(i.sum(&MonomialIdeal::zero(4)).unwrap(), i);

        let a = ideal(2, &[&[1]]);
        let b = ideal(2, &[&[1, 2]]);
        assert_eq!(a.sum(&b).unwrap(), a);

        assert!(a.sum(&MonomialIdeal::zero(3)).is_err());
    }

    #[test]
    fn display_forms() {
        assert_eq!(MonomialIdeal::zero(4).to_string(), "(0)");
        assert_eq!(MonomialIdeal::unit(4).to_string(), "(1)");
        assert_eq!(ideal(4, &[&[2, 4], &[1, 3]]).to_string(), "(x1*x3, x2*x4)");
    }

    #[test]
    fn json_round_trip() {
        let i = ideal(4, &[&[1, 3], &[1, 4], &[2, 4]]);
        let j = serde_json::to_string(&IdealJson::from(&i)).unwrap();
        assert_eq!(j, r#"{"n":4,"gens":[[1,3],[1,4],[2,4]]}"#);
        let back: MonomialIdeal = serde_json::from_str::<IdealJson>(&j).unwrap().try_into().unwrap();
        assert_eq!(back, i);
    }
}
