//! Simplicial complexes by facets and the Stanley-Reisner correspondence.

use serde::{Deserialize, Serialize};

use crate::ideal::MonomialIdeal;
use crate::limits;
use crate::set::{VertexSet, MAX_VERTICES};
use crate::{Error, Result};

/// A simplicial complex on ambient vertex range `{1, ..., n}`, given by its
/// facets (maximal faces), kept as a colexicographically sorted antichain.
///
/// The void complex (no faces at all, empty facet list) and the empty complex
/// `{∅}` (single facet `∅`) are distinct.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<VertexSet>,
}

impl SimplicialComplex {
    /// Builds a complex from a family of faces: dominated members and
    /// duplicates are dropped, the rest sorted colexicographically.
    pub fn from_facets(n: usize, facets: impl IntoIterator<Item = VertexSet>) -> Result<SimplicialComplex> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::BadVertexCount(n));
        }
        let mut fs: Vec<VertexSet> = facets.into_iter().collect();
        for &f in &fs {
            if !f.fits_within(n) {
                return Err(Error::SupportOutOfRange { support: f, n });
            }
        }
        fs.sort_unstable();
        fs.dedup();
        let maximal: Vec<VertexSet> = fs
            .iter()
            .filter(|&&f| !fs.iter().any(|&g| g != f && f.is_subset_of(g)))
            .copied()
            .collect();
        Ok(SimplicialComplex { n, facets: maximal })
    }

    pub fn void(n: usize) -> SimplicialComplex {
        SimplicialComplex { n, facets: Vec::new() }
    }

    /// The full simplex on `{1, ..., n}`.
    pub fn simplex(n: usize) -> Result<SimplicialComplex> {
        SimplicialComplex::from_facets(n, [VertexSet::full(n)])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// True when the complex is `⟨F⟩` for a single facet `F` (including `{∅}`).
    pub fn is_simplex(&self) -> bool {
        self.facets.len() == 1
    }

    pub fn is_face(&self, f: VertexSet) -> bool {
        self.facets.iter().any(|&g| f.is_subset_of(g))
    }

    /// Vertices appearing in some face.
    pub fn support(&self) -> VertexSet {
        self.facets
            .iter()
            .fold(VertexSet::EMPTY, |acc, &f| acc.union(f))
    }

    /// `dim Δ = max |F| - 1` and purity (all facets of equal size).
    /// The void complex is rejected.
    pub fn dimension_and_purity(&self) -> Result<DimPurity> {
        let max = self.facets.iter().map(|f| f.len()).max().ok_or(Error::VoidComplex)?;
        let min = self.facets.iter().map(|f| f.len()).min().unwrap();
        Ok(DimPurity {
            dim: max as i64 - 1,
            pure: max == min,
        })
    }

    pub fn dim(&self) -> Result<i64> {
        Ok(self.dimension_and_purity()?.dim)
    }

    /// `lk_Δ(F) = {G : G ∩ F = ∅, G ∪ F ∈ Δ}`; `F` must be a face.
    pub fn link(&self, f: VertexSet) -> Result<SimplicialComplex> {
        if !self.is_face(f) {
            return Err(Error::NotAFace(f));
        }
        SimplicialComplex::from_facets(
            self.n,
            self.facets
                .iter()
                .filter(|&&h| f.is_subset_of(h))
                .map(|&h| h.difference(f)),
        )
    }

    /// `del_Δ(F) = {G : G ∩ F = ∅}`.
    pub fn deletion(&self, f: VertexSet) -> Result<SimplicialComplex> {
        SimplicialComplex::from_facets(self.n, self.facets.iter().map(|&h| h.difference(f)))
    }

    /// All faces (including `∅` for nonvoid complexes), sorted by (size, colex).
    /// Guarded: enumeration is exponential in `n`.
    pub fn all_faces(&self) -> Result<Vec<VertexSet>> {
        limits::check_subset_guard(self.n)?;
        let bitmap = self.face_bitmap()?;
        let mut faces: Vec<VertexSet> = bitmap
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(m, _)| VertexSet::from_mask(m as u64))
            .collect();
        faces.sort_unstable_by_key(|f| (f.len(), *f));
        Ok(faces)
    }

    /// Bitmap over all 2^n masks marking the faces of the complex.
    pub(crate) fn face_bitmap(&self) -> Result<Vec<bool>> {
        limits::check_subset_guard(self.n)?;
        let mut bitmap = vec![false; 1usize << self.n];
        for &f in &self.facets {
            for s in f.subsets() {
                bitmap[s.mask() as usize] = true;
            }
        }
        Ok(bitmap)
    }

    /// Alexander dual complex `Δ^∨ = {X \ F : F ∉ Δ}`, whose facets are the
    /// complements of the minimal non-faces. Dualizing a full simplex is
    /// flagged as degenerate (the dual would be void).
    pub fn dual_complex(&self) -> Result<SimplicialComplex> {
        let ideal = stanley_reisner_ideal(self)?;
        if ideal.is_zero() {
            return Err(Error::DegenerateDual);
        }
        SimplicialComplex::from_facets(
            self.n,
            ideal.generator_supports().map(|s| s.complement_in(self.n)),
        )
    }
}

impl std::fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "⟨")?;
        for (k, facet) in self.facets.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{facet}")?;
        }
        write!(f, "⟩ on n={}", self.n)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DimPurity {
    pub dim: i64,
    pub pure: bool,
}

/// The Stanley-Reisner complex of a squarefree ideal: faces are exactly the
/// subsets of `{1..n}` containing no generator support. The zero ideal gives
/// the full simplex; the unit ideal is rejected (its complex is void).
///
/// Computed by direct enumeration of all 2^n subsets, so guarded on `n`.
pub fn stanley_reisner_complex(ideal: &MonomialIdeal) -> Result<SimplicialComplex> {
    if ideal.is_unit() {
        return Err(Error::UnitIdealComplex);
    }
    let n = ideal.n();
    limits::check_subset_guard(n)?;
    let full = VertexSet::full(n).mask();
    let mut is_face = vec![false; (full + 1) as usize];
    for mask in 0..=full {
        let m = VertexSet::from_mask(mask);
        is_face[mask as usize] = !ideal
            .generator_supports()
            .any(|s| s.is_subset_of(m));
    }
    let mut facets = Vec::new();
    for mask in 0..=full {
        if !is_face[mask as usize] {
            continue;
        }
        let m = VertexSet::from_mask(mask);
        let maximal = m
            .complement_in(n)
            .iter()
            .all(|v| !is_face[m.insert(v).mask() as usize]);
        if maximal {
            facets.push(m);
        }
    }
    SimplicialComplex::from_facets(n, facets)
}

/// The Stanley-Reisner ideal of a complex: generated by the minimal
/// non-faces. Inverse of [`stanley_reisner_complex`]; the void complex maps
/// to the unit ideal and the full simplex to the zero ideal.
pub fn stanley_reisner_ideal(complex: &SimplicialComplex) -> Result<MonomialIdeal> {
    let n = complex.n();
    limits::check_subset_guard(n)?;
    let full = VertexSet::full(n).mask();
    let mut gens = Vec::new();
    for mask in 0..=full {
        let m = VertexSet::from_mask(mask);
        if complex.is_face(m) {
            continue;
        }
        let minimal = m.iter().all(|v| complex.is_face(m.remove(v)));
        if minimal {
            gens.push(m);
        }
    }
    MonomialIdeal::new(n, gens)
}

/// Wire format for complexes: `{"n": 4, "facets": [[1,2],[2,3],[3,4],[1,4]]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexJson {
    pub n: usize,
    pub facets: Vec<Vec<usize>>,
}

impl From<&SimplicialComplex> for ComplexJson {
    fn from(c: &SimplicialComplex) -> ComplexJson {
        ComplexJson {
            n: c.n,
            facets: c.facets.iter().map(|f| f.vertices()).collect(),
        }
    }
}

impl TryFrom<ComplexJson> for SimplicialComplex {
    type Error = Error;

    fn try_from(j: ComplexJson) -> Result<SimplicialComplex> {
        let facets = j
            .facets
            .into_iter()
            .map(VertexSet::from_vertices)
            .collect::<Result<Vec<_>>>()?;
        SimplicialComplex::from_facets(j.n, facets)
    }
}
