//! The ground-truth oracle: exact reduced simplicial homology, graded Betti
//! numbers through Hochster's formula, and the Reisner Cohen-Macaulay
//! criterion. Everything here is brute force over subset families, guarded
//! by [`crate::limits`], and is what every structural formula in
//! [`crate::resolution`] is validated against.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::complex::{stanley_reisner_complex, SimplicialComplex};
use crate::ideal::MonomialIdeal;
use crate::limits;
use crate::linalg::{rank, FieldSpec, SparseRow};
use crate::set::VertexSet;
use crate::{Error, Result};

/// Reduced homology ranks of a complex, indexed from dimension `-1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyRanks {
    ranks: Vec<usize>,
}

impl HomologyRanks {
    /// Rank in dimension `d` (zero outside the stored range).
    pub fn rank(&self, d: i64) -> usize {
        usize::try_from(d + 1)
            .ok()
            .and_then(|k| self.ranks.get(k).copied())
            .unwrap_or(0)
    }

    /// Top dimension of the underlying complex.
    pub fn dim(&self) -> i64 {
        self.ranks.len() as i64 - 2
    }

    /// Ranks as a slice starting at dimension `-1`.
    pub fn as_slice(&self) -> &[usize] {
        &self.ranks
    }

    pub fn is_trivial(&self) -> bool {
        self.ranks.iter().all(|&r| r == 0)
    }
}

/// Reduced homology of the face family (masks, closed under subsets and
/// containing the empty face). Returns ranks indexed from dimension `-1`.
fn homology_of_faces(faces: &[u64], field: FieldSpec) -> Vec<usize> {
    debug_assert!(faces.contains(&0), "nonvoid complexes contain the empty face");
    let max_size = faces.iter().map(|f| f.count_ones() as usize).max().unwrap_or(0);
    let mut by_size: Vec<Vec<u64>> = vec![Vec::new(); max_size + 1];
    for &f in faces {
        by_size[f.count_ones() as usize].push(f);
    }
    for v in &mut by_size {
        v.sort_unstable();
    }
    // boundary_rank[s] = rank of the boundary map from size-s faces to
    // size-(s-1) faces (that is, from dimension s-1 to s-2).
    let mut boundary_rank = vec![0usize; max_size + 2];
    for s in 1..=max_size {
        let cols = &by_size[s - 1];
        let rows: Vec<SparseRow> = by_size[s]
            .iter()
            .map(|&f| {
                let mut row = Vec::with_capacity(s);
                let mut sign = 1i32;
                let mut rest = f;
                while rest != 0 {
                    let bit = rest & rest.wrapping_neg();
                    let face = f & !bit;
                    let col = cols.binary_search(&face).expect("faces are subset-closed");
                    row.push((col, sign));
                    sign = -sign;
                    rest &= rest - 1;
                }
                row
            })
            .collect();
        boundary_rank[s] = rank(&rows, cols.len(), field);
    }
    (0..=max_size)
        .map(|s| by_size[s].len() - boundary_rank[s] - boundary_rank[s + 1])
        .collect()
}

/// Exact reduced homology of a complex over the given field.
/// The void complex is rejected; guarded on the ambient vertex count.
pub fn reduced_homology_ranks(complex: &SimplicialComplex, field: FieldSpec) -> Result<HomologyRanks> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    let faces: Vec<u64> = complex.all_faces()?.iter().map(|f| f.mask()).collect();
    Ok(HomologyRanks {
        ranks: homology_of_faces(&faces, field),
    })
}

/// Homological subject of a Betti table: the ideal `I` or the quotient `R/I`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Subject {
    Ideal,
    Quotient,
}

impl std::fmt::Display for Subject {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Subject::Ideal => write!(f, "ideal"),
            Subject::Quotient => write!(f, "quotient"),
        }
    }
}

/// Regularity and projective dimension extracted from a Betti table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RegPd {
    pub reg: i64,
    pub pd: usize,
}

/// Sparse table of graded Betti numbers: `(i, j) -> count`, absent means
/// zero, stored counts always positive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    subject: Subject,
    entries: BTreeMap<(usize, usize), u64>,
}

impl BettiTable {
    pub fn new(subject: Subject) -> BettiTable {
        BettiTable {
            subject,
            entries: BTreeMap::new(),
        }
    }

    pub fn subject(&self) -> Subject {
        self.subject
    }

    pub fn add(&mut self, i: usize, j: usize, count: u64) {
        if count > 0 {
            *self.entries.entry((i, j)).or_insert(0) += count;
        }
    }

    pub fn get(&self, i: i64, j: i64) -> u64 {
        if i < 0 || j < 0 {
            return 0;
        }
        self.entries
            .get(&(i as usize, j as usize))
            .copied()
            .unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &b)| (i, j, b))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `max { j - i : β_{i,j} ≠ 0 }` for the table's subject.
    pub fn reg(&self) -> Result<i64> {
        self.entries
            .keys()
            .map(|&(i, j)| j as i64 - i as i64)
            .max()
            .ok_or(Error::EmptyBettiTable)
    }

    /// `max { i : β_{i,j} ≠ 0 }` for the table's subject.
    pub fn pd(&self) -> Result<usize> {
        self.entries
            .keys()
            .map(|&(i, _)| i)
            .max()
            .ok_or(Error::EmptyBettiTable)
    }

    pub fn reg_pd(&self) -> Result<RegPd> {
        Ok(RegPd {
            reg: self.reg()?,
            pd: self.pd()?,
        })
    }

    /// Regularity and projective dimension converted to the requested
    /// subject, using `pd(R/I) = pd(I) + 1` and `reg(R/I) = reg(I) - 1`.
    pub fn reg_pd_as(&self, subject: Subject) -> Result<RegPd> {
        let base = self.reg_pd()?;
        Ok(match (self.subject, subject) {
            (Subject::Ideal, Subject::Quotient) => RegPd {
                reg: base.reg - 1,
                pd: base.pd + 1,
            },
            (Subject::Quotient, Subject::Ideal) => RegPd {
                reg: base.reg + 1,
                pd: base.pd.checked_sub(1).ok_or(Error::EmptyBettiTable)?,
            },
            _ => base,
        })
    }

    /// True when every nonzero entry sits on the line `j = i + d`.
    pub fn has_linear_resolution(&self, d: usize) -> bool {
        self.entries.keys().all(|&(i, j)| j == i + d)
    }

    /// Text rendering: rows are the homological degree `i`, columns the
    /// internal slope `j - i`.
    pub fn render_text(&self) -> String {
        if self.entries.is_empty() {
            return String::from("(empty Betti table)\n");
        }
        let cols: Vec<i64> = {
            let mut c: Vec<i64> = self.entries.keys().map(|&(i, j)| j as i64 - i as i64).collect();
            c.sort_unstable();
            c.dedup();
            c
        };
        let max_i = self.pd().expect("nonempty");
        let mut out = String::new();
        out.push_str("  i\\j-i");
        for c in &cols {
            out.push_str(&format!("{c:>7}"));
        }
        out.push('\n');
        for i in 0..=max_i {
            out.push_str(&format!("{i:>7}"));
            for &c in &cols {
                let b = self.get(i as i64, i as i64 + c);
                if b == 0 {
                    out.push_str(&format!("{:>7}", "."));
                } else {
                    out.push_str(&format!("{b:>7}"));
                }
            }
            out.push('\n');
        }
        out
    }
}

/// Wire format: `{"subject":"ideal","entries":[{"i":0,"j":2,"b":3}]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BettiJson {
    pub subject: Subject,
    pub entries: Vec<BettiEntryJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BettiEntryJson {
    pub i: usize,
    pub j: usize,
    pub b: u64,
}

impl From<&BettiTable> for BettiJson {
    fn from(t: &BettiTable) -> BettiJson {
        BettiJson {
            subject: t.subject,
            entries: t.entries().map(|(i, j, b)| BettiEntryJson { i, j, b }).collect(),
        }
    }
}

impl From<BettiJson> for BettiTable {
    fn from(j: BettiJson) -> BettiTable {
        let mut t = BettiTable::new(j.subject);
        for e in j.entries {
            t.add(e.i, e.j, e.b);
        }
        t
    }
}

/// Graded Betti numbers of a squarefree ideal over `field` through
/// Hochster's formula: `β_{i,j}(I_Δ)` aggregates the reduced homology of the
/// induced subcomplexes `Δ|_W` over `|W| = j` in dimension `j - i - 2`.
///
/// Exact and exponential (all `2^n` vertex subsets), so guarded on `n`; the
/// zero and unit ideals are rejected.
pub fn hochster_betti(ideal: &MonomialIdeal, field: FieldSpec) -> Result<BettiTable> {
    if ideal.is_zero() {
        return Err(Error::BettiUndefined("zero"));
    }
    if ideal.is_unit() {
        return Err(Error::BettiUndefined("unit"));
    }
    limits::check_subset_guard(ideal.n())?;
    let complex = stanley_reisner_complex(ideal)?;
    let bitmap = complex.face_bitmap()?;
    let mut table = BettiTable::new(Subject::Ideal);
    for w in VertexSet::full(ideal.n()).subsets().skip(1) {
        let faces: Vec<u64> = w
            .subsets()
            .map(|s| s.mask())
            .filter(|&m| bitmap[m as usize])
            .collect();
        let ranks = homology_of_faces(&faces, field);
        let j = w.len();
        for (s, &r) in ranks.iter().enumerate() {
            if r == 0 {
                continue;
            }
            let i = j as i64 - s as i64 - 1; // i = j - dim - 2 with dim = s - 1
            if i >= 0 {
                table.add(i as usize, j, r as u64);
            }
        }
    }
    #[cfg(debug_assertions)]
    {
        for g in ideal.generators() {
            let d = g.degree();
            let count = ideal.generators().iter().filter(|h| h.degree() == d).count() as u64;
            debug_assert_eq!(table.get(0, d as i64), count, "β_0 must count generators");
        }
        if ideal.num_generators() <= 16 {
            debug_assert!(
                alternating_sums_match(ideal, &table).unwrap_or(true),
                "Taylor Euler characteristic mismatch for {ideal}"
            );
        }
    }
    Ok(table)
}

/// Reisner criterion over `field`: true iff for every face `F` (including
/// `∅`) the reduced homology of `lk(F)` vanishes strictly below
/// `dim lk(F)`.
pub fn reisner_cm_check(complex: &SimplicialComplex, field: FieldSpec) -> Result<bool> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    let bitmap = complex.face_bitmap()?;
    let n = complex.n();
    for (f_mask, &is_face) in bitmap.iter().enumerate() {
        if !is_face {
            continue;
        }
        let f = VertexSet::from_mask(f_mask as u64);
        // Faces of lk(F) are g \ F over faces g ⊇ F.
        let link_faces: Vec<u64> = f
            .complement_in(n)
            .subsets()
            .filter(|s| bitmap[(f_mask as u64 | s.mask()) as usize])
            .map(|s| s.mask())
            .collect();
        let ranks = homology_of_faces(&link_faces, field);
        let link_dim = link_faces.iter().map(|m| m.count_ones() as i64).max().unwrap() - 1;
        for (s, &r) in ranks.iter().enumerate() {
            if s as i64 - 1 < link_dim && r != 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The degree-`j` strand of the Taylor-complex Euler characteristic:
/// `Σ_{∅ ≠ S ⊆ G(I), |supp lcm(S)| = j} (-1)^(|S|+1)`, which must equal
/// `Σ_i (-1)^i β_{i,j}(I)`. Enumeration over generator subsets, capped.
pub fn taylor_euler_strands(ideal: &MonomialIdeal) -> Result<BTreeMap<usize, i64>> {
    let m = ideal.num_generators();
    if m > limits::MAX_TAYLOR_GENERATORS {
        return Err(Error::TaylorCap(m, limits::MAX_TAYLOR_GENERATORS));
    }
    let supports: Vec<u64> = ideal.generator_supports().map(|s| s.mask()).collect();
    let mut strands: BTreeMap<usize, i64> = BTreeMap::new();
    for subset in 1u64..(1u64 << m) {
        let mut union = 0u64;
        let mut rest = subset;
        while rest != 0 {
            union |= supports[rest.trailing_zeros() as usize];
            rest &= rest - 1;
        }
        let sign = if subset.count_ones() % 2 == 1 { 1 } else { -1 };
        *strands.entry(union.count_ones() as usize).or_insert(0) += sign;
    }
    strands.retain(|_, v| *v != 0);
    Ok(strands)
}

/// Checks `Σ_i (-1)^i β_{i,j}` against the Taylor strand for every `j`.
pub fn alternating_sums_match(ideal: &MonomialIdeal, table: &BettiTable) -> Result<bool> {
    let strands = taylor_euler_strands(ideal)?;
    let mut from_table: BTreeMap<usize, i64> = BTreeMap::new();
    for (i, j, b) in table.entries() {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        *from_table.entry(j).or_insert(0) += sign * b as i64;
    }
    from_table.retain(|_, v| *v != 0);
    Ok(from_table == strands)
}
