//! Cross-validation suites: every structural formula checked against the
//! homology oracle over parameter sweeps. These back the CLI `check` and
//! `reproduce` subcommands.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::complex::stanley_reisner_complex;
use crate::graph::Graph;
use crate::homology::{hochster_betti, reisner_cm_check, BettiTable, Subject};
use crate::ideal::{clique_ideal, independence_ideal, MonomialIdeal};
use crate::limits;
use crate::linalg::FieldSpec;
use crate::resolution::{
    chordal_vertex_split, closed_form_invariants, cycle_decomposition, find_linear_quotients,
    path_betti_recursion, verify_betti_splitting, Family,
};
use crate::shelling::{
    cycle_shelling, is_vertex_decomposable, path_shelling, shelling_to_linear_quotients,
    verify_shelling,
};
use crate::{Error, Result};

/// Pass/total tallies per named property.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    properties: BTreeMap<String, (usize, usize)>,
}

impl SuiteReport {
    fn new(suite: &str) -> SuiteReport {
        SuiteReport {
            suite: suite.to_string(),
            properties: BTreeMap::new(),
        }
    }

    fn tally(&mut self, name: &str, ok: bool) {
        let entry = self.properties.entry(name.to_string()).or_insert((0, 0));
        entry.1 += 1;
        if ok {
            entry.0 += 1;
        }
    }

    pub fn all_passed(&self) -> bool {
        self.properties.values().all(|&(p, t)| p == t)
    }

    pub fn case_count(&self) -> usize {
        self.properties.values().map(|&(_, t)| t).sum()
    }

    pub fn properties(&self) -> impl Iterator<Item = (&str, usize, usize)> {
        self.properties.iter().map(|(k, &(p, t))| (k.as_str(), p, t))
    }

    pub fn render_text(&self) -> String {
        let mut out = format!("suite: {}\n", self.suite);
        let width = self.properties.keys().map(|k| k.len()).max().unwrap_or(0);
        for (name, &(p, t)) in &self.properties {
            out.push_str(&format!("  {name:<width$}  {p}/{t}\n"));
        }
        out.push_str(&format!(
            "RESULT: {} ({} checks)\n",
            if self.all_passed() { "PASS" } else { "FAIL" },
            self.case_count()
        ));
        out
    }
}

/// Parameter sweep bounds for the suites.
#[derive(Clone, Copy, Debug)]
pub struct SuiteBounds {
    pub n_max: usize,
    pub t_max: usize,
    pub count: usize,
    pub seed: u64,
}

impl Default for SuiteBounds {
    fn default() -> Self {
        SuiteBounds {
            n_max: 8,
            t_max: 3,
            count: 20,
            seed: 1,
        }
    }
}

/// Path family: shellings, purity, closed forms, the Betti recursion, and
/// the vertex-split linear quotients, all against the oracle.
pub fn run_path_suite(bounds: SuiteBounds) -> Result<SuiteReport> {
    limits::check_subset_guard(bounds.n_max)?;
    let mut rep = SuiteReport::new("path");
    for t in 1..=bounds.t_max {
        for n in (2 * t - 1)..=bounds.n_max {
            let g = Graph::path(n)?;
            let k = clique_ideal(&g.complement(), t);
            let j = independence_ideal(&g, t);
            let cf = closed_form_invariants(Family::Path, n, t);

            let order = path_shelling(n, t)?;
            let delta = stanley_reisner_complex(&k)?;
            rep.tally("shelling_verified", verify_shelling(&delta, &order)?);
            let dp = delta.dimension_and_purity()?;
            rep.tally(
                "complex_pure_of_dim_2t-3",
                dp.pure && dp.dim == cf.dim_complex
                    && order.facets().iter().all(|f| f.len() == 2 * t - 2),
            );

            let tk = hochster_betti(&k, FieldSpec::GF2)?;
            let tj = hochster_betti(&j, FieldSpec::GF2)?;
            rep.tally("pd_clique_is_n-2t+1", tk.reg_pd()?.pd == cf.pd_clique_ideal.unwrap());
            rep.tally(
                "reg_quotient_clique_is_t-1",
                tk.reg_pd_as(Subject::Quotient)?.reg == cf.reg_quotient_clique.unwrap() as i64,
            );
            rep.tally(
                "pd_quotient_independence_is_t",
                tj.reg_pd_as(Subject::Quotient)?.pd == cf.pd_quotient_independence.unwrap(),
            );
            rep.tally(
                "independence_linear_resolution",
                tj.has_linear_resolution(cf.linear_degree.unwrap()),
            );
            rep.tally("recursion_matches_oracle", path_betti_recursion(n, t)? == tj);

            let tree = chordal_vertex_split(&g, t)?;
            rep.tally("vertex_split_verifies", tree.verify());
            rep.tally(
                "split_lq_matches_oracle",
                tree.linear_quotients()?.betti_table() == tk,
            );
            rep.tally(
                "shelling_lq_matches_oracle",
                shelling_to_linear_quotients(&delta, &order)?.betti_table() == tj,
            );
        }
    }
    Ok(rep)
}

/// Cycle family: shellings, purity, closed forms, the clique-ideal
/// decomposition, all against the oracle.
pub fn run_cycle_suite(bounds: SuiteBounds) -> Result<SuiteReport> {
    limits::check_subset_guard(bounds.n_max)?;
    let mut rep = SuiteReport::new("cycle");
    for t in 1..=bounds.t_max {
        for n in (2 * t).max(3)..=bounds.n_max {
            let g = Graph::cycle(n)?;
            let k = clique_ideal(&g.complement(), t);
            let j = independence_ideal(&g, t);
            let cf = closed_form_invariants(Family::Cycle, n, t);

            let order = cycle_shelling(n, t)?;
            let delta = stanley_reisner_complex(&k)?;
            rep.tally("shelling_verified", verify_shelling(&delta, &order)?);
            let dp = delta.dimension_and_purity()?;
            rep.tally(
                "complex_pure_of_dim_2t-3",
                dp.pure && dp.dim == cf.dim_complex
                    && order.facets().iter().all(|f| f.len() == 2 * t - 2),
            );

            let tk = hochster_betti(&k, FieldSpec::GF2)?;
            let tj = hochster_betti(&j, FieldSpec::GF2)?;
            rep.tally("pd_clique_is_n-2t+1", tk.reg_pd()?.pd == cf.pd_clique_ideal.unwrap());
            rep.tally(
                "reg_quotient_clique_is_2t-2",
                tk.reg_pd_as(Subject::Quotient)?.reg == cf.reg_quotient_clique.unwrap() as i64,
            );
            rep.tally(
                "pd_quotient_independence_is_2t-1",
                tj.reg_pd_as(Subject::Quotient)?.pd == cf.pd_quotient_independence.unwrap(),
            );
            rep.tally(
                "independence_linear_resolution",
                tj.has_linear_resolution(cf.linear_degree.unwrap()),
            );
            rep.tally(
                "shelling_lq_matches_oracle",
                shelling_to_linear_quotients(&delta, &order)?.betti_table() == tj,
            );

            let decomposition = cycle_decomposition(n, t)?;
            rep.tally("decomposition_identity", decomposition.ideal == k);
            rep.tally(
                "pd_bound_2t-1_attained",
                tj.reg_pd_as(Subject::Quotient)?.pd == decomposition.pd_bound,
            );
        }
    }
    Ok(rep)
}

/// Deterministic chordal corpus: graphs with `K_t(G^c) ≠ 0`, scanning seeds
/// upward from `seed`, sizes in `4..=n_max`, `t` alternating over 2 and 3.
pub fn chordal_corpus(count: usize, n_max: usize, seed: u64) -> Result<Vec<(Graph, usize, u64)>> {
    if n_max < 4 {
        return Err(Error::BadVertexCount(n_max));
    }
    let mut out = Vec::new();
    let mut s = seed;
    let attempts_cap = 200 * count as u64 + 1000;
    while out.len() < count && s < seed + attempts_cap {
        let n = 4 + (s % (n_max as u64 - 3)) as usize;
        let t = if (s / 3).is_multiple_of(2) { 2 } else { 3 };
        let g = Graph::random_chordal(n, s)?;
        if !clique_ideal(&g.complement(), t).is_zero() {
            out.push((g, t, s));
        }
        s += 1;
    }
    Ok(out)
}

/// Chordal family: vertex splits, linear quotients, linearity, regularity,
/// the Betti splitting identity with its projective-dimension recursion,
/// and purity / vertex decomposability / Cohen-Macaulayness of the
/// independence complex.
pub fn run_chordal_suite(bounds: SuiteBounds) -> Result<SuiteReport> {
    limits::check_subset_guard(bounds.n_max)?;
    let mut rep = SuiteReport::new("chordal");
    for (g, t, _seed) in chordal_corpus(bounds.count, bounds.n_max, bounds.seed)? {
        let k = clique_ideal(&g.complement(), t);
        let tk = hochster_betti(&k, FieldSpec::GF2)?;

        let tree = chordal_vertex_split(&g, t)?;
        rep.tally("vertex_split_verifies", tree.verify());

        let lq = find_linear_quotients(&k)?;
        rep.tally("linear_quotients_found", lq.is_some());
        if let Some(lq) = lq {
            rep.tally("lq_betti_matches_oracle", lq.betti_table() == tk);
        }
        rep.tally("clique_t_linear", tk.has_linear_resolution(t));
        rep.tally(
            "reg_quotient_clique_is_t-1",
            tk.reg_pd_as(Subject::Quotient)?.reg == t as i64 - 1,
        );

        for (ideal, vertex, left, right) in tree.split_nodes() {
            let ti = hochster_betti(ideal, FieldSpec::GF2)?;
            let tj = betti_or_empty(right)?;
            let tkk = betti_or_empty(left)?;
            rep.tally(
                "betti_splitting_entrywise",
                verify_betti_splitting(ideal, right, left, vertex, &ti, &tj, &tkk)?,
            );
            let pd_i = ti.reg_pd()?.pd;
            if right.is_zero() {
                rep.tally("pd_recursion", pd_i == tkk.reg_pd()?.pd);
            } else {
                rep.tally(
                    "pd_recursion",
                    pd_i == (tj.reg_pd()?.pd + 1).max(tkk.reg_pd()?.pd),
                );
            }
        }

        let j = independence_ideal(&g, t);
        let tj = hochster_betti(&j, FieldSpec::GF2)?;
        rep.tally("pd_quotient_independence_is_t", tj.reg_pd_as(Subject::Quotient)?.pd == t);

        let delta = stanley_reisner_complex(&j)?;
        rep.tally("independence_complex_pure", delta.dimension_and_purity()?.pure);
        rep.tally("independence_complex_vd", is_vertex_decomposable(&delta)?);
        rep.tally("independence_cm_gf2", reisner_cm_check(&delta, FieldSpec::GF2)?);
        rep.tally("independence_cm_char0", reisner_cm_check(&delta, FieldSpec::Char0)?);

        // Regularity recursion at the simplicial vertex, checked only when
        // both sub-ideals are nonzero; the regularity of a zero ideal is
        // undefined.
        let u = g.lowest_simplicial_vertex().expect("chordal");
        let k_minus_u = clique_ideal(&g.delete_vertex(u)?.complement(), t);
        let k_h = if t >= 2 {
            clique_ideal(&g.delete_closed_neighborhood(u)?.complement(), t - 1)
        } else {
            MonomialIdeal::unit(g.n())
        };
        if !k_minus_u.is_zero() && !k_h.is_zero() && !k_h.is_unit() {
            let reg = |ideal: &MonomialIdeal| -> Result<i64> {
                Ok(hochster_betti(ideal, FieldSpec::GF2)?
                    .reg_pd_as(Subject::Quotient)?
                    .reg)
            };
            let lhs = reg(&j)?;
            let a = reg(&independence_ideal(&g.delete_vertex(u)?, t))? + 1;
            let b = reg(&independence_ideal(&g.delete_closed_neighborhood(u)?, t - 1))?;
            rep.tally("reg_recursion_at_simplicial_vertex", lhs == a.max(b));
        }
    }
    Ok(rep)
}

fn betti_or_empty(ideal: &MonomialIdeal) -> Result<BettiTable> {
    if ideal.is_zero() {
        Ok(BettiTable::new(Subject::Ideal))
    } else if ideal.is_unit() {
        // β_{0,0}(R) = 1: the unit ideal is the whole ring.
        let mut t = BettiTable::new(Subject::Ideal);
        t.add(0, 0, 1);
        Ok(t)
    } else {
        hochster_betti(ideal, FieldSpec::GF2)
    }
}

/// Duality suite: Alexander-dual involution, the Terai identity
/// `pd(I^∨) = reg(R/I)`, and the Stanley-Reisner dual identities, over the
/// path / cycle / chordal corpus.
pub fn run_duality_suite(bounds: SuiteBounds) -> Result<SuiteReport> {
    limits::check_subset_guard(bounds.n_max)?;
    let mut rep = SuiteReport::new("duality");
    let mut ideals: Vec<MonomialIdeal> = Vec::new();
    for t in 2..=bounds.t_max.max(2) {
        for n in (2 * t - 1)..=bounds.n_max {
            let g = Graph::path(n)?;
            ideals.push(clique_ideal(&g.complement(), t));
            ideals.push(independence_ideal(&g, t));
            if n >= (2 * t).max(3) {
                let g = Graph::cycle(n)?;
                ideals.push(clique_ideal(&g.complement(), t));
                ideals.push(independence_ideal(&g, t));
            }
        }
    }
    for (g, t, _) in chordal_corpus(bounds.count.min(10), bounds.n_max.min(8), bounds.seed)? {
        ideals.push(clique_ideal(&g.complement(), t));
        ideals.push(independence_ideal(&g, t));
    }
    ideals.retain(|i| !i.is_zero() && !i.is_unit());
    ideals.sort_unstable_by_key(|i| (i.n(), i.generators().to_vec()));
    ideals.dedup();
    for ideal in &ideals {
        let dual = ideal.alexander_dual()?;
        rep.tally("dual_involution", dual.alexander_dual()? == *ideal);

        let ti = hochster_betti(ideal, FieldSpec::GF2)?;
        let td = hochster_betti(&dual, FieldSpec::GF2)?;
        rep.tally(
            "terai_pd_dual_equals_reg_quotient",
            td.reg_pd()?.pd as i64 == ti.reg_pd_as(Subject::Quotient)?.reg,
        );

        let delta = stanley_reisner_complex(ideal)?;
        let dual_complex = delta.dual_complex()?;
        rep.tally(
            "sr_dual_identity",
            crate::complex::stanley_reisner_ideal(&dual_complex)? == dual,
        );
        let complements: Vec<_> = delta
            .facets()
            .iter()
            .map(|f| f.complement_in(ideal.n()))
            .collect();
        rep.tally(
            "dual_generators_are_facet_complements",
            MonomialIdeal::new(ideal.n(), complements)? == dual,
        );
    }
    Ok(rep)
}

pub fn run_suite(name: &str, bounds: SuiteBounds) -> Result<SuiteReport> {
    match name {
        "path" => run_path_suite(bounds),
        "cycle" => run_cycle_suite(bounds),
        "chordal" => run_chordal_suite(bounds),
        "duality" => run_duality_suite(bounds),
        other => Err(Error::BadGraphSpec(format!("unknown suite {other:?}"))),
    }
}

/// One closed-form statement instance: predicted vs oracle value.
#[derive(Clone, Debug, Serialize)]
pub struct ReproRow {
    pub family: String,
    pub n: usize,
    pub t: usize,
    pub statement: String,
    pub predicted: String,
    pub actual: String,
    pub ok: bool,
}

impl ReproRow {
    pub fn render(&self) -> String {
        format!(
            "{} n={} t={}: {}={} predicted / {} oracle{}",
            self.family,
            self.n,
            self.t,
            self.statement,
            self.predicted,
            self.actual,
            if self.ok { "" } else { "  MISMATCH" }
        )
    }
}

/// Emits one row per closed-form statement of the path and cycle families,
/// with predicted and oracle values.
pub fn run_reproduce(bounds: SuiteBounds) -> Result<Vec<ReproRow>> {
    limits::check_subset_guard(bounds.n_max)?;
    let mut rows = Vec::new();
    let mut push = |family: Family, n: usize, t: usize, statement: &str, predicted: String, actual: String| {
        rows.push(ReproRow {
            family: family.to_string(),
            n,
            t,
            statement: statement.to_string(),
            ok: predicted == actual,
            predicted,
            actual,
        });
    };
    for t in 2..=bounds.t_max.max(2) {
        for n in (2 * t - 1)..=bounds.n_max {
            for family in [Family::Path, Family::Cycle] {
                let cf = closed_form_invariants(family, n, t);
                if !cf.nonzero {
                    continue;
                }
                let g = match family {
                    Family::Path => Graph::path(n)?,
                    Family::Cycle => Graph::cycle(n)?,
                };
                let k = clique_ideal(&g.complement(), t);
                let j = independence_ideal(&g, t);
                let tk = hochster_betti(&k, FieldSpec::GF2)?;
                let tj = hochster_betti(&j, FieldSpec::GF2)?;
                let delta = stanley_reisner_complex(&k)?;

                push(
                    family, n, t, "pd(K)",
                    cf.pd_clique_ideal.unwrap().to_string(),
                    tk.reg_pd()?.pd.to_string(),
                );
                push(
                    family, n, t, "reg(R/K)",
                    cf.reg_quotient_clique.unwrap().to_string(),
                    tk.reg_pd_as(Subject::Quotient)?.reg.to_string(),
                );
                push(
                    family, n, t, "pd(R/J)",
                    cf.pd_quotient_independence.unwrap().to_string(),
                    tj.reg_pd_as(Subject::Quotient)?.pd.to_string(),
                );
                push(
                    family, n, t, "dim Δ",
                    cf.dim_complex.to_string(),
                    delta.dim()?.to_string(),
                );
                push(
                    family, n, t, "J linear degree",
                    cf.linear_degree.unwrap().to_string(),
                    if tj.has_linear_resolution(cf.linear_degree.unwrap()) {
                        cf.linear_degree.unwrap().to_string()
                    } else {
                        "not linear".to_string()
                    },
                );
                push(
                    family, n, t, "CM(R/K)",
                    "true".to_string(),
                    reisner_cm_check(&delta, FieldSpec::GF2)?.to_string(),
                );
                let order = match family {
                    Family::Path => path_shelling(n, t)?,
                    Family::Cycle => cycle_shelling(n, t)?,
                };
                push(
                    family, n, t, "shellable",
                    "true".to_string(),
                    verify_shelling(&delta, &order)?.to_string(),
                );
            }
        }
    }
    rows.sort_by(|a, b| {
        (&a.family, a.n, a.t, &a.statement).cmp(&(&b.family, b.n, b.t, &b.statement))
    });
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        let bounds = SuiteBounds {
            n_max: 6,
            t_max: 2,
            count: 5,
            seed: 1,
        };
        for suite in ["path", "cycle", "chordal", "duality"] {
            let rep = run_suite(suite, bounds).unwrap();
            assert!(rep.all_passed(), "{suite}:\n{}", rep.render_text());
        }
        assert!(run_suite("nope", bounds).is_err());
    }

    #[test]
    fn reproduce_rows_all_match() {
        let rows = run_reproduce(SuiteBounds {
            n_max: 6,
            t_max: 2,
            ..Default::default()
        })
        .unwrap();
        assert!(!rows.is_empty());
        for row in &rows {
            assert!(row.ok, "{}", row.render());
        }
    }

    #[test]
    fn corpus_is_deterministic_and_nonzero() {
        let a = chordal_corpus(10, 8, 1).unwrap();
        let b = chordal_corpus(10, 8, 1).unwrap();
        assert_eq!(a.len(), 10);
        assert!(a.iter().zip(&b).all(|((g1, t1, s1), (g2, t2, s2))| {
            g1 == g2 && t1 == t2 && s1 == s2
        }));
        for (g, t, _) in &a {
            assert!(!clique_ideal(&g.complement(), *t).is_zero());
        }
    }
}
