//! Cross-polytopal subcomplexes, their fundamental cycles, and rank
//! certificates built from maximal antipode-free facets.
//!
//! A set of `2d` vertices is cross-polytopal when its non-adjacency relation is
//! a perfect matching. The induced flag complex is then the boundary of the
//! d-dimensional cross-polytope, and choosing one vertex from each antipodal
//! pair gives the `2^d` facets of its fundamental `(d-1)`-cycle. If one of those
//! facets is maximal in the ambient complex, the coefficient it carries cannot be
//! changed by adding boundaries, so the cycle is nonzero in homology. Facets that
//! are maximal and appear in exactly one cycle of a family give a lower bound on
//! the rank directly.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::complex::{FlagComplex, Simplex};
use crate::designs::{fano_plane, projective_plane, ProjectivePlane};
use crate::error::{invalid, Error, Result};
use crate::field::PrimeField;
use crate::homology::{cycle_check, ChainVector};
use crate::subset::{colex_subsets, Subset};

/// Antipodal pairs `(a, b)` with `a < b`, sorted by `a`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossPolytopeStructure {
    pairs: Vec<(u32, u32)>,
}

impl CrossPolytopeStructure {
    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.pairs
    }

    /// Number of antipodal pairs, `d`.
    pub fn d(&self) -> usize {
        self.pairs.len()
    }

    pub fn partner(&self, v: u32) -> Option<u32> {
        self.pairs.iter().find_map(|&(a, b)| {
            if a == v {
                Some(b)
            } else if b == v {
                Some(a)
            } else {
                None
            }
        })
    }
}

/// The antipodal pairing of `verts` in `k`, if the induced non-adjacency
/// relation is a perfect matching.
pub fn is_cross_polytopal(k: &FlagComplex, verts: &[u32]) -> Option<CrossPolytopeStructure> {
    if verts.is_empty() || !verts.len().is_multiple_of(2) {
        return None;
    }
    let mut pairs = Vec::with_capacity(verts.len() / 2);
    for &v in verts {
        let mut non = verts.iter().filter(|&&u| u != v && !k.adjacent(u, v));
        let partner = *non.next()?;
        if non.next().is_some() {
            return None;
        }
        if v < partner {
            pairs.push((v, partner));
        }
    }
    if pairs.len() * 2 != verts.len() {
        // a repeated vertex in `verts`
        return None;
    }
    pairs.sort_unstable();
    Some(CrossPolytopeStructure { pairs })
}

/// Fundamental cycle of a cross-polytopal complex, held implicitly: its
/// support is every choice of one vertex per pair, so it is never stored
/// unless asked for.
///
/// Orientation: the simplex listing the chosen vertices in pair order has
/// coefficient `(-1)^(number of second partners chosen)`; the coefficient of
/// the same simplex in increasing vertex order picks up the sign of the sorting
/// permutation. Over `GF(2)` every coefficient is 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossPolytopalCycle {
    pairs: Vec<(u32, u32)>,
    slot: HashMap<u32, (usize, bool)>,
    field: PrimeField,
    factor: u32,
}

impl CrossPolytopalCycle {
    pub fn new(cp: &CrossPolytopeStructure, field: PrimeField) -> Self {
        let mut slot = HashMap::with_capacity(cp.pairs.len() * 2);
        for (i, &(a, b)) in cp.pairs.iter().enumerate() {
            slot.insert(a, (i, false));
            slot.insert(b, (i, true));
        }
        CrossPolytopalCycle {
            pairs: cp.pairs.clone(),
            slot,
            field,
            factor: 1,
        }
    }

    pub fn dim(&self) -> usize {
        self.pairs.len() - 1
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    /// `2^d` (saturating).
    pub fn support_size(&self) -> u64 {
        1u64.checked_shl(self.pairs.len() as u32).unwrap_or(u64::MAX)
    }

    /// Coefficient before the global scale factor, or `None` off the support.
    fn raw_sign(&self, sigma: &[u32]) -> Option<u32> {
        if sigma.len() != self.pairs.len() {
            return None;
        }
        let mut seen = vec![false; self.pairs.len()];
        let mut order = Vec::with_capacity(sigma.len());
        let mut seconds = 0usize;
        for &v in sigma {
            let &(i, second) = self.slot.get(&v)?;
            if std::mem::replace(&mut seen[i], true) {
                return None;
            }
            order.push(i);
            seconds += usize::from(second);
        }
        let inversions: usize = (0..order.len())
            .map(|a| order[a + 1..].iter().filter(|&&b| b < order[a]).count())
            .sum();
        Some(self.field.sign((seconds + inversions) % 2 == 1))
    }

    /// Coefficient of the (increasingly ordered) simplex `sigma`.
    pub fn coefficient(&self, sigma: &[u32]) -> u32 {
        self.raw_sign(sigma)
            .map_or(0, |s| self.field.mul(s, self.factor))
    }

    /// Rescale so `sigma` has coefficient 1.
    pub fn normalized_at(mut self, sigma: &[u32]) -> Result<Self> {
        let s = self
            .raw_sign(sigma)
            .ok_or_else(|| Error::InvalidInput("simplex is not in the cycle's support".into()))?;
        self.factor = self.field.inv(s);
        Ok(self)
    }

    /// Materialize as a chain; refuses supports larger than `max_terms`.
    pub fn to_chain(&self, max_terms: u64) -> Result<ChainVector> {
        let size = self.support_size();
        if size > max_terms {
            return Err(Error::ResourceCap {
                cap: "cycle_terms",
                limit: max_terms,
                required: size,
            });
        }
        let mut chain = ChainVector::zero(self.dim());
        for choice in 0..size {
            let mut verts: Vec<u32> = self
                .pairs
                .iter()
                .enumerate()
                .map(|(i, &(a, b))| if choice >> i & 1 == 0 { a } else { b })
                .collect();
            verts.sort_unstable();
            let c = self.coefficient(&verts);
            chain.add_term(Simplex::from_sorted(verts), c, self.field);
        }
        Ok(chain)
    }

    /// Check `∂ = 0` at `samples` faces chosen deterministically. Each
    /// codimension-1 face of the support lies in exactly two support facets,
    /// which must cancel there.
    pub fn sampled_boundary_check(&self, samples: u64) -> bool {
        let d = self.pairs.len();
        let f = self.field;
        let mut state = 0x9E37_79B9_7F4A_7C15u64;
        (0..samples).all(|i| {
            state = splitmix(state);
            let missing = (i as usize) % d;
            let face: Vec<u32> = self
                .pairs
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != missing)
                .map(|(j, &(a, b))| if state >> (j % 64) & 1 == 0 { a } else { b })
                .collect();
            let (a, b) = self.pairs[missing];
            let total = [a, b].iter().fold(0u32, |acc, &x| {
                let mut facet = face.clone();
                facet.push(x);
                facet.sort_unstable();
                let pos = facet.iter().position(|&v| v == x).expect("inserted");
                let c = self.coefficient(&facet);
                f.add(acc, f.mul(c, f.sign(pos % 2 == 1)))
            });
            total == 0
        })
    }
}

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub fn cross_polytopal_cycle(cp: &CrossPolytopeStructure, field: PrimeField) -> CrossPolytopalCycle {
    CrossPolytopalCycle::new(cp, field)
}

/// Lines of the Fano plane together with a partner `ψ_S(A)` for each line:
/// the lexicographically smallest 3-subset of `S \ A`.
#[derive(Clone, Debug, Serialize)]
pub struct FanoExtension {
    pub s: Subset,
    pub lines: Vec<Subset>,
    pub psi: Vec<Subset>,
    #[serde(skip)]
    pub complex: FlagComplex,
    /// Ordinals (in `complex`) of the lines, i.e. the facet σ.
    pub sigma: Simplex,
    pub structure: Option<CrossPolytopeStructure>,
}

/// Lexicographically smallest `n`-subset of `pool`.
pub fn lex_smallest(pool: Subset, n: u32) -> Option<Subset> {
    (pool.len() >= n).then(|| pool.smallest(n))
}

pub fn fano_psi_extension(s: Subset, m: u32) -> Result<FanoExtension> {
    if m < 7 {
        return invalid(format!("m = {m} < 7"));
    }
    if s.len() != 6 || !s.is_subset_of(Subset::range(m)?) {
        return invalid(format!("S = {s} must be a 6-subset of [{m}]"));
    }
    psi_extension(&fano_plane(), s)
}

fn psi_extension(plane: &ProjectivePlane, s: Subset) -> Result<FanoExtension> {
    let n = plane.order() + 1;
    let lines = plane.lines().to_vec();
    let psi = lines
        .iter()
        .map(|&a| {
            lex_smallest(s.difference(a), n)
                .ok_or_else(|| Error::InvalidInput(format!("S \\ {a} has fewer than {n} points")))
        })
        .collect::<Result<Vec<_>>>()?;
    let all: Vec<Subset> = lines.iter().chain(&psi).copied().collect();
    let complex = FlagComplex::from_vertices(n, all, 2 * plane.order())?;
    let sigma = Simplex::new(
        lines
            .iter()
            .map(|&l| complex.ordinal_of(l).expect("present"))
            .collect(),
    )?;
    let verts: Vec<u32> = (0..complex.vertex_count() as u32).collect();
    let structure = if complex.vertex_count() == 2 * lines.len() {
        is_cross_polytopal(&complex, &verts)
    } else {
        None
    };
    Ok(FanoExtension {
        s,
        lines,
        psi,
        complex,
        sigma,
        structure,
    })
}

/// Outcome of extending the line simplex of a plane by `ψ_S` for one `S`.
#[derive(Clone, Debug, Serialize)]
pub struct PsiProbe {
    pub s: Subset,
    pub distinct_vertices: usize,
    pub expected_vertices: usize,
    pub cross_polytopal: bool,
    /// Pairs of vertices at distance greater than the scale.
    pub non_adjacent: Vec<(Subset, Subset)>,
    /// Vertices whose number of non-neighbours is not exactly one.
    pub unmatched: Vec<(Subset, usize)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PsiExploration {
    pub order: u32,
    pub n: u32,
    pub scale: u32,
    pub subsets_tried: usize,
    pub cross_polytopal_count: usize,
    pub probes: Vec<PsiProbe>,
}

/// Try the `ψ_S` extension on the plane of order `q` for every `2(q+1)`-subset
/// `S` of its points and report where cross-polytopality fails. No outcome is
/// presumed. `keep` limits how many per-`S` probes are retained in the report.
pub fn explore_psi_extension(q: u32, keep: usize) -> Result<PsiExploration> {
    let plane = if q == 2 { fano_plane() } else { projective_plane(q)? };
    let n = q + 1;
    let mut probes = Vec::new();
    let mut tried = 0;
    let mut good = 0;
    for s in colex_subsets(plane.points(), 2 * n) {
        tried += 1;
        let ext = psi_extension(&plane, s)?;
        let k = &ext.complex;
        let mut non_adjacent = Vec::new();
        let mut unmatched = Vec::new();
        for i in 0..k.vertex_count() as u32 {
            let non: Vec<u32> = (0..k.vertex_count() as u32)
                .filter(|&j| j != i && !k.adjacent(i, j))
                .collect();
            if non.len() != 1 {
                unmatched.push((k.vertex(i), non.len()));
            }
            non_adjacent.extend(non.iter().filter(|&&j| j > i).map(|&j| (k.vertex(i), k.vertex(j))));
        }
        let ok = ext.structure.is_some();
        good += usize::from(ok);
        if probes.len() < keep {
            probes.push(PsiProbe {
                s,
                distinct_vertices: k.vertex_count(),
                expected_vertices: 2 * plane.lines().len(),
                cross_polytopal: ok,
                non_adjacent,
                unmatched,
            });
        }
    }
    Ok(PsiExploration {
        order: q,
        n,
        scale: 2 * q,
        subsets_tried: tried,
        cross_polytopal_count: good,
        probes,
    })
}

/// The antipode-free facet of `VR(F_n^S; 2(n-1))`, `|S| = 2n`, that stays
/// maximal in every `VR(F_n^{[m]}; 2(n-1))`: all n-subsets of the first
/// `2n - 1` elements of `S`, except that the two sets `{s_1..s_n}` and
/// `{s_1, s_{n+1}..s_{2n-1}}` are swapped for their complements in `S`.
pub fn max_2n_facet(n: u32, s: Subset) -> Result<Vec<Subset>> {
    if n < 3 {
        return invalid(format!("n = {n} < 3"));
    }
    if s.len() != 2 * n {
        return invalid(format!("|S| = {} but 2n = {}", s.len(), 2 * n));
    }
    let elems: Vec<u32> = s.elements().collect();
    let embed = |local: Subset| -> Subset {
        Subset::from_bits(
            local
                .elements()
                .fold(0u64, |acc, i| acc | 1 << (elems[i as usize - 1] - 1)),
        )
    };
    let first = Subset::range(n)?;
    let second = Subset::from_elements((n + 1..2 * n).chain([1]))?;
    let whole = Subset::range(2 * n)?;
    let mut out: Vec<Subset> = colex_subsets(Subset::range(2 * n - 1)?, n)
        .map(|a| {
            if a == first || a == second {
                whole.difference(a)
            } else {
                a
            }
        })
        .map(embed)
        .collect();
    out.sort_unstable();
    Ok(out)
}

/// Support and pairing data for one subset `S_i`.
#[derive(Clone, Debug, Serialize)]
pub struct CertificateEntry {
    pub subset: Subset,
    pub facet: Vec<Subset>,
    pub facet_maximal: bool,
    pub antipode_free: bool,
    pub hull_matches: bool,
    pub cycle_dim: usize,
    pub cycle_support: u64,
    /// `"exhaustive"` when `∂α = 0` was checked on the materialized chain,
    /// `"sampled"` when only the face-cancellation identity was spot-checked.
    pub cycle_evidence: &'static str,
    pub cycle_ok: bool,
    /// Coefficient of this entry's facet in every cycle of the family.
    pub pairing_row: Vec<u32>,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct GeneratorCertificate {
    pub n: u32,
    pub m: u32,
    pub field: u32,
    /// Homological degree `C(2n, n)/2 - 1`.
    pub degree: usize,
    /// Number of certified independent classes, `C(m, 2n)`.
    pub rank_lower_bound: usize,
    pub entries: Vec<CertificateEntry>,
    #[serde(skip)]
    pub cycles: Vec<CrossPolytopalCycle>,
    pub valid: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CertificateOptions {
    /// Largest cycle support materialized for the exhaustive `∂ = 0` check.
    pub max_cycle_terms: u64,
    /// Faces spot-checked when the support is larger than that.
    pub sampled_faces: u64,
    /// Refuse families with more subsets than this.
    pub max_entries: usize,
}

impl Default for CertificateOptions {
    fn default() -> Self {
        CertificateOptions {
            max_cycle_terms: 1 << 16,
            sampled_faces: 4096,
            max_entries: 5000,
        }
    }
}

/// Certify `rank H_p(VR(F_n^{[m]}; 2(n-1))) >= C(m, 2n)`. Fails with the first
/// `(i, j)` at which a check breaks.
pub fn build_certificate(
    n: u32,
    m: u32,
    field: PrimeField,
    opts: &CertificateOptions,
) -> Result<GeneratorCertificate> {
    let cert = certificate_report(n, m, field, opts)?;
    if let Some((i, e)) = cert.entries.iter().enumerate().find(|(_, e)| !e.pass) {
        let j = e
            .pairing_row
            .iter()
            .enumerate()
            .find(|&(j, &c)| c != u32::from(i == j))
            .map_or(i, |(j, _)| j);
        let reason = if !e.facet_maximal {
            "facet is not maximal in the ambient complex"
        } else if !e.antipode_free {
            "facet is not antipode-free"
        } else if !e.hull_matches {
            "facet does not span its subset"
        } else if !e.cycle_ok {
            "cycle has nonzero boundary"
        } else {
            "pairing is not the identity"
        };
        return Err(Error::CertificateInvalid {
            i,
            j,
            reason: reason.into(),
        });
    }
    Ok(cert)
}

/// As [`build_certificate`] but returns the full report even when checks fail.
pub fn certificate_report(
    n: u32,
    m: u32,
    field: PrimeField,
    opts: &CertificateOptions,
) -> Result<GeneratorCertificate> {
    if n < 3 {
        return invalid(format!("n = {n} < 3"));
    }
    if m < 2 * n {
        return invalid(format!("m = {m} < 2n = {}", 2 * n));
    }
    let count = crate::binomial::binomial(u64::from(m), u64::from(2 * n))?;
    if count > opts.max_entries as u128 {
        return Err(Error::ResourceCap {
            cap: "certificate_entries",
            limit: opts.max_entries as u64,
            required: count.min(u128::from(u64::MAX)) as u64,
        });
    }
    let ambient = FlagComplex::full(n, m, 2 * (n - 1))?;
    let subsets: Vec<Subset> = colex_subsets(Subset::range(m)?, 2 * n).collect();

    struct Built {
        facet: Simplex,
        facet_subsets: Vec<Subset>,
        facet_maximal: bool,
        antipode_free: bool,
        hull_matches: bool,
        cycle: Option<CrossPolytopalCycle>,
        evidence: &'static str,
        cycle_ok: bool,
    }

    let built: Vec<Built> = subsets
        .par_iter()
        .map(|&s| -> Result<Built> {
            let facet_subsets = max_2n_facet(n, s)?;
            let facet = Simplex::new(
                facet_subsets
                    .iter()
                    .map(|&a| ambient.ordinal_of(a).expect("n-subset of [m]"))
                    .collect(),
            )?;
            let facet_maximal = ambient.is_maximal_simplex(&facet).unwrap_or(false);
            let antipode_free = facet_subsets
                .iter()
                .all(|&a| !facet_subsets.contains(&s.difference(a)));
            let hull = ambient.convex_hull(&facet)?;
            let hull_matches = hull.ground() == s;
            let hull_verts: Vec<u32> = hull
                .vertices()
                .iter()
                .map(|&a| ambient.ordinal_of(a).expect("n-subset of [m]"))
                .collect();
            let cycle = is_cross_polytopal(&ambient, &hull_verts)
                .map(|cp| CrossPolytopalCycle::new(&cp, field).normalized_at(&facet))
                .transpose()
                .unwrap_or(None);
            let (evidence, cycle_ok) = match &cycle {
                None => ("none", false),
                Some(c) if c.support_size() <= opts.max_cycle_terms => {
                    let chain = c.to_chain(opts.max_cycle_terms)?;
                    ("exhaustive", cycle_check(&ambient, &chain, field)?)
                }
                Some(c) => ("sampled", c.sampled_boundary_check(opts.sampled_faces)),
            };
            Ok(Built {
                facet,
                facet_subsets,
                facet_maximal,
                antipode_free,
                hull_matches,
                cycle,
                evidence,
                cycle_ok,
            })
        })
        .collect::<Result<_>>()?;

    let entries: Vec<CertificateEntry> = built
        .par_iter()
        .enumerate()
        .map(|(i, b)| {
            let pairing_row: Vec<u32> = built
                .iter()
                .map(|other| other.cycle.as_ref().map_or(0, |c| c.coefficient(&b.facet)))
                .collect();
            let identity_row = pairing_row
                .iter()
                .enumerate()
                .all(|(j, &c)| c == u32::from(i == j));
            let pass = b.facet_maximal && b.antipode_free && b.hull_matches && b.cycle_ok && identity_row;
            CertificateEntry {
                subset: subsets[i],
                facet: b.facet_subsets.clone(),
                facet_maximal: b.facet_maximal,
                antipode_free: b.antipode_free,
                hull_matches: b.hull_matches,
                cycle_dim: b.cycle.as_ref().map_or(0, CrossPolytopalCycle::dim),
                cycle_support: b.cycle.as_ref().map_or(0, CrossPolytopalCycle::support_size),
                cycle_evidence: b.evidence,
                cycle_ok: b.cycle_ok,
                pairing_row,
                pass,
            }
        })
        .collect();
    let valid = entries.iter().all(|e| e.pass);
    let degree = (crate::binomial::binomial(u64::from(2 * n), u64::from(n))? / 2 - 1) as usize;
    Ok(GeneratorCertificate {
        n,
        m,
        field: field.p(),
        degree,
        rank_lower_bound: entries.len(),
        entries,
        cycles: built.into_iter().filter_map(|b| b.cycle).collect(),
        valid,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::{betti_numbers, HomologyOptions};

    fn s(e: &[u32]) -> Subset {
        Subset::from_elements(e.iter().copied()).unwrap()
    }

    #[test]
    fn full_cross_polytope_is_detected() {
        let k = FlagComplex::full(3, 6, 4).unwrap();
        let all: Vec<u32> = (0..20).collect();
        let cp = is_cross_polytopal(&k, &all).unwrap();
        assert_eq!(cp.d(), 10);
        let whole = Subset::range(6).unwrap();
        for &(a, b) in cp.pairs() {
            assert_eq!(k.vertex(b), whole.difference(k.vertex(a)));
        }
        assert!(is_cross_polytopal(&k, &[0, 1, 2]).is_none());
    }

    #[test]
    fn triangle_is_not_cross_polytopal() {
        let k = FlagComplex::full(3, 7, 4).unwrap();
        let tri = k.simplices(2).next().unwrap();
        assert!(is_cross_polytopal(&k, &tri).is_none());
        let four = k.simplices(3).next().unwrap();
        assert!(is_cross_polytopal(&k, &four).is_none());
    }

    #[test]
    fn octahedron_cycle() {
        let oct = FlagComplex::full(2, 4, 2).unwrap();
        let all: Vec<u32> = (0..6).collect();
        let cp = is_cross_polytopal(&oct, &all).unwrap();
        for p in [2, 3, 5] {
            let f = PrimeField::new(p).unwrap();
            let z = cross_polytopal_cycle(&cp, f).to_chain(1 << 10).unwrap();
            assert_eq!(z.len(), 8);
            assert!(cycle_check(&oct, &z, f).unwrap());
            if p == 2 {
                assert!(z.iter().all(|(_, c)| c == 1));
            }
        }
    }

    #[test]
    fn kg30_cycle_has_1024_terms() {
        let k = FlagComplex::full(3, 6, 4).unwrap();
        let all: Vec<u32> = (0..20).collect();
        let cp = is_cross_polytopal(&k, &all).unwrap();
        for f in [PrimeField::GF2, PrimeField::GF3] {
            let c = cross_polytopal_cycle(&cp, f);
            let z = c.to_chain(1 << 12).unwrap();
            assert_eq!(z.len(), 1024);
            assert!(cycle_check(&k, &z, f).unwrap());
            assert!(c.sampled_boundary_check(500));
        }
    }

    #[test]
    fn broken_orientation_fails_sampled_check() {
        let k = FlagComplex::full(3, 6, 4).unwrap();
        let all: Vec<u32> = (0..20).collect();
        let cp = is_cross_polytopal(&k, &all).unwrap();
        let c = cross_polytopal_cycle(&cp, PrimeField::GF3);
        let z = c.to_chain(1 << 12).unwrap();
        let (first, _) = z.iter().next().unwrap();
        let mut bad = z.clone();
        bad.add_term(first.clone(), 1, PrimeField::GF3);
        assert!(!cycle_check(&k, &bad, PrimeField::GF3).unwrap());
    }

    #[test]
    fn psi_examples() {
        let ext = fano_psi_extension(Subset::range(6).unwrap(), 7).unwrap();
        let at = |a: &[u32]| ext.psi[ext.lines.iter().position(|&l| l == s(a)).unwrap()];
        assert_eq!(at(&[1, 2, 3]), s(&[4, 5, 6]));
        assert_eq!(at(&[1, 6, 7]), s(&[2, 3, 4]));
        // ψ(A) is close to every other line
        for (i, &p) in ext.psi.iter().enumerate() {
            for (j, &b) in ext.lines.iter().enumerate() {
                if i != j {
                    assert!(crate::subset::raw_distance(p, b) <= 4);
                }
            }
        }
        let cp = ext.structure.as_ref().expect("cross-polytopal");
        assert_eq!(cp.d(), 7);
        for &(a, b) in cp.pairs() {
            let (va, vb) = (ext.complex.vertex(a), ext.complex.vertex(b));
            let i = ext.lines.iter().position(|&l| l == va || l == vb).unwrap();
            assert!(ext.psi[i] == va || ext.psi[i] == vb);
        }
        let z = cross_polytopal_cycle(cp, PrimeField::GF3).to_chain(1 << 10).unwrap();
        assert_eq!(z.len(), 128);
        assert!(cycle_check(&ext.complex, &z, PrimeField::GF3).unwrap());
    }

    #[test]
    fn psi_extension_is_a_six_sphere_for_every_s() {
        for s6 in colex_subsets(Subset::range(7).unwrap(), 6) {
            let ext = fano_psi_extension(s6, 7).unwrap();
            assert!(ext.structure.is_some(), "S = {s6}");
            let b = betti_numbers(&ext.complex, 8, &HomologyOptions::default()).unwrap();
            let v: Vec<u64> = (0..=8).map(|d| b.get(d)).collect();
            assert_eq!(v, vec![0, 0, 0, 0, 0, 0, 1, 0, 0]);
        }
        assert!(fano_psi_extension(Subset::range(5).unwrap(), 7).is_err());
    }

    #[test]
    fn max_2n_facet_n3() {
        let f = max_2n_facet(3, Subset::range(6).unwrap()).unwrap();
        assert_eq!(f.len(), 10);
        assert!(f.contains(&s(&[4, 5, 6])));
        assert!(f.contains(&s(&[2, 3, 6])));
        assert!(!f.contains(&s(&[1, 2, 3])));
        assert!(!f.contains(&s(&[1, 4, 5])));
        let whole = Subset::range(6).unwrap();
        assert!(f.iter().all(|&a| !f.contains(&whole.difference(a))));
        assert!(max_2n_facet(2, Subset::range(4).unwrap()).is_err());
    }

    #[test]
    fn max_2n_facet_is_maximal_and_embedded() {
        let k = FlagComplex::full(3, 7, 4).unwrap();
        for sub in [s(&[1, 2, 3, 4, 5, 6]), s(&[1, 3, 4, 5, 6, 7])] {
            let f = max_2n_facet(3, sub).unwrap();
            let sigma = Simplex::new(f.iter().map(|&a| k.ordinal_of(a).unwrap()).collect()).unwrap();
            assert!(k.is_maximal_simplex(&sigma).unwrap());
            assert_eq!(k.convex_hull(&sigma).unwrap().ground(), sub);
        }
    }

    #[test]
    fn certificate_small() {
        for m in [6, 7] {
            let c = build_certificate(3, m, PrimeField::GF2, &CertificateOptions::default()).unwrap();
            assert_eq!(c.degree, 9);
            assert_eq!(c.rank_lower_bound, if m == 6 { 1 } else { 7 });
            assert!(c.entries.iter().all(|e| e.cycle_evidence == "exhaustive"));
        }
        let c = build_certificate(3, 7, PrimeField::GF3, &CertificateOptions::default()).unwrap();
        assert!(c.valid);
    }

    #[test]
    fn certificate_sampled_path() {
        let opts = CertificateOptions {
            max_cycle_terms: 10,
            ..CertificateOptions::default()
        };
        let c = build_certificate(3, 7, PrimeField::GF3, &opts).unwrap();
        assert!(c.entries.iter().all(|e| e.cycle_evidence == "sampled" && e.cycle_ok));
    }

    #[test]
    fn explore_reports_without_asserting() {
        let fano = explore_psi_extension(2, 2).unwrap();
        assert_eq!(fano.subsets_tried, 7);
        assert_eq!(fano.cross_polytopal_count, 7);
        let q3 = explore_psi_extension(3, 1).unwrap();
        assert_eq!(q3.subsets_tried, 1287);
        assert_eq!(q3.probes.len(), 1);
    }
}
