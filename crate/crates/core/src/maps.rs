//! Concentration maps `φ_S^{S'}: F_n^{S'} -> F_n^S` and the checks built on
//! them: contraction, composition of atomic maps, induced simplicial and chain
//! maps, and the Betti-level consequences of the homotopy reductions.
//!
//! Homotopy equivalences are only ever tested through reduced Betti numbers.

use rayon::prelude::*;
use serde::Serialize;

use crate::complex::{FlagComplex, Simplex};
use crate::error::{invalid, Error, Result};
use crate::field::PrimeField;
use crate::homology::{boundary, betti_numbers, ChainVector, HomologyOptions};
use crate::subset::{colex_subsets, raw_distance, Subset};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ConcentrationMap {
    source: Subset,
    target: Subset,
    n: u32,
}

impl ConcentrationMap {
    pub fn new(source: Subset, target: Subset, n: u32) -> Result<Self> {
        if n == 0 {
            return invalid("n must be positive");
        }
        if !target.is_subset_of(source) {
            return invalid(format!("{target} is not a subset of {source}"));
        }
        if target.len() < n {
            return invalid(format!("|{target}| < n = {n}"));
        }
        Ok(ConcentrationMap { source, target, n })
    }

    /// `φ_S^{[m]}`.
    pub fn onto(m: u32, target: Subset, n: u32) -> Result<Self> {
        Self::new(Subset::range(m)?, target, n)
    }

    pub fn source(&self) -> Subset {
        self.source
    }

    pub fn target(&self) -> Subset {
        self.target
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn is_atomic(&self) -> bool {
        self.source.len() == self.target.len() + 1
    }

    /// `(A ∩ S) ∪` the `|A \ S|` smallest elements of `S \ A`.
    pub fn apply(&self, a: Subset) -> Result<Subset> {
        if a.len() != self.n || !a.is_subset_of(self.source) {
            return invalid(format!("{a} is not an {}-subset of {}", self.n, self.source));
        }
        Ok(self.apply_unchecked(a))
    }

    fn apply_unchecked(&self, a: Subset) -> Subset {
        let inside = a.intersection(self.target);
        let outside = a.difference(self.target).len();
        inside.union(self.target.difference(a).smallest(outside))
    }

    /// Every vertex of the source space.
    pub fn domain(&self) -> impl Iterator<Item = Subset> + '_ {
        colex_subsets(self.source, self.n)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AtomicContractionReport {
    pub source: Subset,
    pub target: Subset,
    pub n: u32,
    pub vertices: usize,
    pub pairs: usize,
    /// Vertices moved by 0 and by 2.
    pub displacement: [usize; 2],
    /// Pairs whose distance changed by 0 and by -2.
    pub delta: [usize; 2],
    /// First vertex moved by a distance other than 0 or 2.
    pub bad_vertex: Option<(Subset, Subset)>,
    /// First pair whose distance changed by something other than 0 or -2.
    pub bad_pair: Option<(Subset, Subset)>,
    pub holds: bool,
}

/// Exhaustive check that an atomic concentration map moves each point by 0 or
/// 2 and changes each pairwise distance by 0 or -2.
pub fn verify_atomic_contraction(source: Subset, target: Subset, n: u32) -> Result<AtomicContractionReport> {
    let phi = ConcentrationMap::new(source, target, n)?;
    if !phi.is_atomic() {
        return invalid(format!("{source} \\ {target} is not a single element"));
    }
    let pts: Vec<Subset> = phi.domain().collect();
    let img: Vec<Subset> = pts.iter().map(|&a| phi.apply_unchecked(a)).collect();

    let mut displacement = [0; 2];
    let mut bad_vertex = None;
    for (&a, &b) in pts.iter().zip(&img) {
        match raw_distance(a, b) {
            0 => displacement[0] += 1,
            2 => displacement[1] += 1,
            _ => {
                bad_vertex.get_or_insert((a, b));
            }
        }
    }
    let (delta, bad_pair) = (0..pts.len())
        .into_par_iter()
        .map(|i| {
            let mut delta = [0usize; 2];
            let mut bad = None;
            for j in i + 1..pts.len() {
                let before = raw_distance(pts[i], pts[j]);
                let after = raw_distance(img[i], img[j]);
                if after == before {
                    delta[0] += 1;
                } else if after + 2 == before {
                    delta[1] += 1;
                } else if bad.is_none() {
                    bad = Some((pts[i], pts[j]));
                }
            }
            (delta, bad)
        })
        .reduce(
            || ([0, 0], None),
            |(d1, b1), (d2, b2)| ([d1[0] + d2[0], d1[1] + d2[1]], b1.or(b2)),
        );
    let holds = bad_vertex.is_none() && bad_pair.is_none();
    Ok(AtomicContractionReport {
        source,
        target,
        n,
        vertices: pts.len(),
        pairs: pts.len() * pts.len().saturating_sub(1) / 2,
        displacement,
        delta,
        bad_vertex,
        bad_pair,
        holds,
    })
}

/// Pointwise comparison of `φ_S^{[m]}` with a composite of atomic maps.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainComparison {
    pub m: u32,
    pub n: u32,
    pub target: Subset,
    /// Elements of `[m] \ S` in the order they are removed.
    pub removal_order: Vec<u32>,
    pub points: usize,
    /// `(A, φ_S^{[m]}(A), composite(A))` wherever the two disagree.
    pub mismatches: Vec<(Subset, Subset, Subset)>,
    pub equal: bool,
}

/// The atomic maps obtained by removing `order` from `[m]` one element at a time.
pub fn atomic_chain(m: u32, n: u32, order: &[u32]) -> Result<Vec<ConcentrationMap>> {
    let mut current = Subset::range(m)?;
    let mut chain = Vec::with_capacity(order.len());
    for &x in order {
        if !current.contains(x) {
            return invalid(format!("{x} is not in {current}"));
        }
        let mut next = current;
        next.remove(x);
        chain.push(ConcentrationMap::new(current, next, n)?);
        current = next;
    }
    Ok(chain)
}

pub fn compose_chain(m: u32, n: u32, removal_order: &[u32]) -> Result<ChainComparison> {
    let chain = atomic_chain(m, n, removal_order)?;
    let target = chain.last().map_or(Subset::range(m)?, |c| c.target());
    let direct = ConcentrationMap::onto(m, target, n)?;
    let mut mismatches = Vec::new();
    let mut points = 0;
    for a in direct.domain() {
        points += 1;
        let want = direct.apply_unchecked(a);
        let got = chain.iter().fold(a, |x, phi| phi.apply_unchecked(x));
        if want != got {
            mismatches.push((a, want, got));
        }
    }
    Ok(ChainComparison {
        m,
        n,
        target,
        removal_order: removal_order.to_vec(),
        points,
        equal: mismatches.is_empty(),
        mismatches,
    })
}

/// Removal orders of `[m] \ S`: largest first (the suffix order), smallest
/// first, and every other permutation when there are at most `max_perm`.
pub fn removal_orders(m: u32, target: Subset, max_perm: usize) -> Result<Vec<Vec<u32>>> {
    let removed: Vec<u32> = Subset::range(m)?.difference(target).elements().collect();
    let mut orders = Vec::new();
    let mut perm = removed.clone();
    perm.reverse();
    orders.push(perm);
    if removed.len() > 1 {
        orders.push(removed.clone());
    }
    if (1..=removed.len()).product::<usize>() <= max_perm {
        let mut all = Vec::new();
        permutations(&mut removed.clone(), 0, &mut all);
        for p in all {
            if !orders.contains(&p) {
                orders.push(p);
            }
        }
    }
    Ok(orders)
}

fn permutations(v: &mut Vec<u32>, k: usize, out: &mut Vec<Vec<u32>>) {
    if k == v.len() {
        out.push(v.clone());
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permutations(v, k + 1, out);
        v.swap(k, i);
    }
}

/// Vertex map of `φ` between `VR(F_n^{S'}; r)` and `VR(F_n^S; r)` with an
/// exhaustive edge check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimplicialMapCertificate {
    pub map: ConcentrationMap,
    pub scale: u32,
    pub vertex_map: Vec<(Subset, Subset)>,
    pub edges_checked: usize,
    /// Source edge whose image is neither an edge nor a vertex.
    pub bad_edge: Option<(Subset, Subset)>,
    pub simplicial: bool,
}

pub fn induced_simplicial_map(phi: &ConcentrationMap, scale: u32) -> Result<SimplicialMapCertificate> {
    let src = FlagComplex::build(phi.n, phi.source, scale)?;
    let vertex_map: Vec<(Subset, Subset)> = src
        .vertices()
        .iter()
        .map(|&a| (a, phi.apply_unchecked(a)))
        .collect();
    let mut edges_checked = 0;
    let mut bad_edge = None;
    for e in src.simplices(1) {
        edges_checked += 1;
        let (a, b) = (e[0] as usize, e[1] as usize);
        if raw_distance(vertex_map[a].1, vertex_map[b].1) > scale && bad_edge.is_none() {
            bad_edge = Some((vertex_map[a].0, vertex_map[b].0));
        }
    }
    Ok(SimplicialMapCertificate {
        map: *phi,
        scale,
        vertex_map,
        edges_checked,
        simplicial: bad_edge.is_none(),
        bad_edge,
    })
}

/// Image of one oriented simplex under the induced chain map, as a target
/// simplex and coefficient; `None` for degenerate images.
fn push_forward(
    sigma: &[u32],
    ords: &[u32],
    field: PrimeField,
) -> Option<(Simplex, u32)> {
    let mut img: Vec<u32> = sigma.iter().map(|&v| ords[v as usize]).collect();
    let inversions: usize = (0..img.len())
        .map(|i| img[i + 1..].iter().filter(|&&x| x < img[i]).count())
        .sum();
    img.sort_unstable();
    if img.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((Simplex::from_sorted(img), field.sign(inversions % 2 == 1)))
}

fn push_chain(z: &ChainVector, ords: &[u32], field: PrimeField) -> ChainVector {
    let mut out = ChainVector::zero(z.dim());
    for (s, c) in z.iter() {
        if let Some((t, sgn)) = push_forward(s, ords, field) {
            out.add_term(t, field.mul(c, sgn), field);
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainMapReport {
    pub scale: u32,
    pub field: u32,
    pub simplices_checked: u64,
    pub degenerate: u64,
    /// First simplex (as source vertices) where `∂φ# != φ#∂`.
    pub counterexample: Option<Vec<Subset>>,
    pub commutes: bool,
}

/// Check `∂ ∘ φ# = φ# ∘ ∂` on every simplex of dimension `1..=max_dim` of
/// `VR(F_n^{S'}; r)`. Degenerate images count as zero.
pub fn verify_chain_map(phi: &ConcentrationMap, scale: u32, max_dim: usize, field: PrimeField) -> Result<ChainMapReport> {
    let src = FlagComplex::build(phi.n, phi.source, scale)?;
    let dst = FlagComplex::build(phi.n, phi.target, scale)?;
    let ords: Vec<u32> = src
        .vertices()
        .iter()
        .map(|&a| dst.ordinal_of(phi.apply_unchecked(a)).expect("image lies in the target"))
        .collect();
    let mut checked = 0;
    let mut degenerate = 0;
    let mut counterexample = None;
    'dims: for d in 1..=max_dim {
        for sigma in src.simplices(d) {
            checked += 1;
            let lhs = match push_forward(&sigma, &ords, field) {
                Some((t, c)) => boundary(&t, field).scaled(c, field),
                None => {
                    degenerate += 1;
                    ChainVector::zero(d - 1)
                }
            };
            let rhs = push_chain(&boundary(&Simplex::from_sorted(sigma.to_vec()), field), &ords, field);
            if lhs != rhs {
                counterexample = Some(sigma.iter().map(|&v| src.vertex(v)).collect());
                break 'dims;
            }
        }
    }
    Ok(ChainMapReport {
        scale,
        field: field.p(),
        simplices_checked: checked,
        degenerate,
        commutes: counterexample.is_none(),
        counterexample,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LipschitzReport {
    pub m: u32,
    pub n: u32,
    pub target: Subset,
    pub pairs: usize,
    pub counterexample: Option<(Subset, Subset)>,
    pub holds: bool,
}

/// `d(φ(A), φ(B)) <= d(A, B)` for all pairs of `F_n^{[m]}`.
pub fn verify_lipschitz(m: u32, target: Subset, n: u32) -> Result<LipschitzReport> {
    let phi = ConcentrationMap::onto(m, target, n)?;
    let pts: Vec<Subset> = phi.domain().collect();
    let img: Vec<Subset> = pts.iter().map(|&a| phi.apply_unchecked(a)).collect();
    let counterexample = (0..pts.len()).into_par_iter().find_map_first(|i| {
        (i + 1..pts.len())
            .find(|&j| raw_distance(img[i], img[j]) > raw_distance(pts[i], pts[j]))
            .map(|j| (pts[i], pts[j]))
    });
    Ok(LipschitzReport {
        m,
        n,
        target,
        pairs: pts.len() * pts.len().saturating_sub(1) / 2,
        holds: counterexample.is_none(),
        counterexample,
    })
}

fn full_betti(k: &FlagComplex, opts: &HomologyOptions) -> Result<Vec<u64>> {
    let top = k.f_vector(64).len();
    let r = betti_numbers(k, top, opts)?;
    Ok((0..=top).map(|d| r.get(d)).collect())
}

fn trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PhiCase {
    /// `1 ∉ T` and `S \ {1} ⊂ T`.
    Isometry,
    /// `|T \ S| = 1` and not an isometry.
    SingleOutside,
    /// `|T \ S| >= 2`, whether or not `1 ∈ T`.
    Spread,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PhiMsReport {
    pub m: u32,
    pub n: u32,
    pub s: Subset,
    pub t: Subset,
    pub case: PhiCase,
    /// Distance-preserving bijection `F_n^T -> F_n^S` (isometry case only).
    pub isometry: Option<bool>,
    /// `(T ∩ S) ∪ {1}` (other cases).
    pub r: Option<Subset>,
    /// `|R| < n`: `F_n^R` is empty, so only dimensions `>= 0` are compared.
    pub predicted_empty: bool,
    /// Reduced Betti numbers of the image complex, trailing zeros trimmed.
    pub image_betti: Vec<u64>,
    pub predicted_betti: Vec<u64>,
    pub pass: bool,
}

/// Image of `F_n^T` under `φ_S^{[m]}` versus `F_n^R` at scale `2(n-1)`.
pub fn verify_phi_m_s_cases(m: u32, s: Subset, t: Subset, n: u32, opts: &HomologyOptions) -> Result<PhiMsReport> {
    let l = s.len();
    if t.len() != l || l < n || !s.contains(1) || s == t {
        return invalid("need |S| = |T| >= n, 1 in S, T != S");
    }
    let ground = Subset::range(m)?;
    if !s.is_subset_of(ground) || !t.is_subset_of(ground) {
        return invalid(format!("S and T must lie in [{m}]"));
    }
    let phi = ConcentrationMap::new(ground, s, n)?;
    let scale = 2 * (n - 1);
    let domain: Vec<Subset> = colex_subsets(t, n).collect();
    let image: Vec<Subset> = domain.iter().map(|&a| phi.apply_unchecked(a)).collect();

    let case = if !t.contains(1) && s.difference(Subset::from_elements([1])?).is_subset_of(t) {
        PhiCase::Isometry
    } else if t.difference(s).len() >= 2 {
        PhiCase::Spread
    } else {
        PhiCase::SingleOutside
    };

    let image_complex = FlagComplex::from_vertices(n, image.clone(), scale)?;
    let image_betti = trim(full_betti(&image_complex, opts)?);

    if case == PhiCase::Isometry {
        let mut sorted = image.clone();
        sorted.sort_unstable();
        sorted.dedup();
        let bijective = sorted.len() == domain.len() && sorted.iter().all(|a| a.is_subset_of(s));
        let isometric = (0..domain.len()).all(|i| {
            (i + 1..domain.len())
                .all(|j| raw_distance(domain[i], domain[j]) == raw_distance(image[i], image[j]))
        });
        let ok = bijective && isometric && sorted.len() == colex_subsets(s, n).count();
        let source_betti = trim(full_betti(&FlagComplex::build(n, t, scale)?, opts)?);
        return Ok(PhiMsReport {
            m,
            n,
            s,
            t,
            case,
            isometry: Some(ok),
            r: None,
            predicted_empty: false,
            pass: ok && source_betti == image_betti,
            image_betti,
            predicted_betti: source_betti,
        });
    }

    let r = t.intersection(s).union(Subset::from_elements([1])?);
    let predicted_empty = r.len() < n;
    let predicted_betti = if predicted_empty {
        Vec::new()
    } else {
        trim(full_betti(&FlagComplex::build(n, r, scale)?, opts)?)
    };
    Ok(PhiMsReport {
        m,
        n,
        s,
        t,
        case,
        isometry: None,
        r: Some(r),
        predicted_empty,
        pass: image_betti == predicted_betti,
        image_betti,
        predicted_betti,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PhiMm1Report {
    pub m: u32,
    pub n: u32,
    pub s: Subset,
    pub t: Subset,
    pub image_betti: Vec<u64>,
    pub predicted_betti: Vec<u64>,
    pub pass: bool,
}

/// Image of `F_n^S` under `φ_{[m-1]}^{[m]}` versus `F_n^{S \ {m}}` at scale `2(n-1)`.
pub fn verify_phi_m_m1(m: u32, s: Subset, n: u32, opts: &HomologyOptions) -> Result<PhiMm1Report> {
    let l = s.len();
    if !(m > l && l > n) {
        return invalid(format!("need m > |S| > n, got m = {m}, |S| = {l}, n = {n}"));
    }
    if !s.contains(1) || !s.contains(m) || !s.is_subset_of(Subset::range(m)?) {
        return invalid(format!("S = {s} must contain 1 and {m} and lie in [{m}]"));
    }
    let phi = ConcentrationMap::onto(m, Subset::range(m - 1)?, n)?;
    let scale = 2 * (n - 1);
    let image: Vec<Subset> = colex_subsets(s, n).map(|a| phi.apply_unchecked(a)).collect();
    let mut t = s;
    t.remove(m);
    let image_betti = trim(full_betti(&FlagComplex::from_vertices(n, image, scale)?, opts)?);
    let predicted_betti = trim(full_betti(&FlagComplex::build(n, t, scale)?, opts)?);
    Ok(PhiMm1Report {
        m,
        n,
        s,
        t,
        pass: image_betti == predicted_betti,
        image_betti,
        predicted_betti,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ContiguityReport {
    pub m: u32,
    pub n: u32,
    pub c: u32,
    pub j: u32,
    pub maximal_simplices: usize,
    /// Maximal simplex of `VR(F_n^{[m]}; 2c)` whose two images do not span a
    /// simplex at scale `2(c+1)`.
    pub counterexample: Option<Vec<Subset>>,
    pub pass: bool,
}

/// `φ_{[j+1]}^{[m]}` and `φ_{[j]}^{[m]}` are contiguous as maps
/// `VR(F_n^{[m]}; 2c) -> VR(F_n^{[m]}; 2(c+1))`. For `j = m` both maps are the
/// identity.
pub fn verify_contiguity(m: u32, n: u32, c: u32, j: u32) -> Result<ContiguityReport> {
    if !(n <= j && j <= m) {
        return invalid(format!("need n <= j <= m, got j = {j}"));
    }
    if c == 0 || c >= n {
        return invalid(format!("need 1 <= c < n, got c = {c}"));
    }
    let k = FlagComplex::full(n, m, 2 * c)?;
    let (f, g) = if j == m {
        let id = ConcentrationMap::onto(m, Subset::range(m)?, n)?;
        (id, id)
    } else {
        (
            ConcentrationMap::onto(m, Subset::range(j + 1)?, n)?,
            ConcentrationMap::onto(m, Subset::range(j)?, n)?,
        )
    };
    let maximal = k.maximal_simplices();
    let wider = 2 * (c + 1);
    let counterexample = maximal.par_iter().find_map_first(|sigma| {
        let mut pts: Vec<Subset> = sigma
            .iter()
            .flat_map(|&v| {
                let a = k.vertex(v);
                [f.apply_unchecked(a), g.apply_unchecked(a)]
            })
            .collect();
        pts.sort_unstable();
        pts.dedup();
        let ok = (0..pts.len()).all(|x| (x + 1..pts.len()).all(|y| raw_distance(pts[x], pts[y]) <= wider));
        (!ok).then(|| sigma.iter().map(|&v| k.vertex(v)).collect())
    });
    Ok(ContiguityReport {
        m,
        n,
        c,
        j,
        maximal_simplices: maximal.len(),
        pass: counterexample.is_none(),
        counterexample,
    })
}

/// `|A ∩ B| >= n - c` iff `d(A, B) <= 2c`, for every pair of `F_n^{[m]}` and
/// every `c` in `1..=n`. Returns the first failing `(A, B, c)`.
pub fn verify_distance_lemma(m: u32, n: u32) -> Result<Option<(Subset, Subset, u32)>> {
    if n == 0 || n > m {
        return Err(Error::InvalidInput(format!("need 1 <= n <= m, got n = {n}, m = {m}")));
    }
    let pts: Vec<Subset> = colex_subsets(Subset::range(m)?, n).collect();
    Ok((0..pts.len()).into_par_iter().find_map_first(|i| {
        pts.iter().find_map(|&b| {
            let a = pts[i];
            (1..=n).find_map(|c| {
                let lhs = raw_distance(a, b) <= 2 * c;
                let rhs = a.intersection(b).len() + c >= n;
                (lhs != rhs).then_some((a, b, c))
            })
        })
    }))
}
