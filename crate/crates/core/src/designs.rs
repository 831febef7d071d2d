//! Finite projective planes, blocking sets, and the maximal simplex formed by
//! the lines of a plane.
//!
//! Points of a plane of order `q` are labelled `1 ..= q^2 + q + 1`, so each line
//! is a `(q+1)`-subset of that ground set and can be used directly as a vertex of
//! `VR(F_{q+1}^{[m]}; 2q)`.

use serde::Serialize;

use crate::complex::{FlagComplex, Simplex};
use crate::error::{invalid, Error, Result};
use crate::field::is_prime;
use crate::subset::{colex_subsets, Subset, GROUND_CAPACITY};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProjectivePlane {
    order: u32,
    lines: Vec<Subset>,
}

/// The first incidence axiom that fails, with a witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum AxiomViolation {
    LineSize { line: Subset },
    PointDegree { point: u32, degree: usize },
    LinesMeet { a: Subset, b: Subset, common: u32 },
    PointsJoin { p: u32, q: u32, lines: usize },
    LineCount { found: usize },
}

const FANO_LINES: [[u32; 3]; 7] = [
    [1, 2, 3],
    [1, 4, 5],
    [1, 6, 7],
    [2, 4, 6],
    [2, 5, 7],
    [3, 4, 7],
    [3, 5, 6],
];

/// The Fano plane with its standard labelling on `[7]`, lines in the listed order.
pub fn fano_plane() -> ProjectivePlane {
    let lines = FANO_LINES
        .iter()
        .map(|l| Subset::from_elements(l.iter().copied()).expect("in range"))
        .collect();
    ProjectivePlane { order: 2, lines }
}

/// `PG(2, q)` for prime `q`: points and lines are the 1- and 2-dimensional
/// subspaces of `GF(q)^3`. Points are numbered in lexicographic order of their
/// normalized coordinates (first nonzero coordinate 1); lines are sorted
/// colexicographically.
pub fn projective_plane(q: u32) -> Result<ProjectivePlane> {
    if !is_prime(u64::from(q)) {
        return Err(Error::UnsupportedOrder(u64::from(q)));
    }
    let points = q * q + q + 1;
    if points > GROUND_CAPACITY {
        return invalid(format!(
            "order {q} needs {points} points, more than the ground capacity {GROUND_CAPACITY}"
        ));
    }
    let reps = normalized_vectors(q);
    debug_assert_eq!(reps.len() as u32, points);
    let mut lines: Vec<Subset> = reps
        .iter()
        .map(|dual| {
            let bits = reps
                .iter()
                .enumerate()
                .filter(|(_, p)| (dual[0] * p[0] + dual[1] * p[1] + dual[2] * p[2]) % q == 0)
                .fold(0u64, |acc, (i, _)| acc | 1 << i);
            Subset::from_bits(bits)
        })
        .collect();
    lines.sort_unstable();
    let plane = ProjectivePlane { order: q, lines };
    if let Err(v) = plane.check_axioms() {
        // unreachable for a correct construction
        return invalid(format!("constructed plane violates an axiom: {v:?}"));
    }
    Ok(plane)
}

fn normalized_vectors(q: u32) -> Vec<[u32; 3]> {
    let mut out = Vec::new();
    for x in 0..q {
        for y in 0..q {
            for z in 0..q {
                let v = [x, y, z];
                if v.iter().find(|&&c| c != 0) == Some(&1) {
                    out.push(v);
                }
            }
        }
    }
    out
}

impl ProjectivePlane {
    /// Build from explicit lines on points `1..=q^2+q+1`; axioms are checked.
    pub fn from_lines(order: u32, lines: Vec<Subset>) -> Result<Self> {
        let plane = ProjectivePlane { order, lines };
        plane
            .check_axioms()
            .map_err(|v| Error::InvalidInput(format!("not a projective plane: {v:?}")))?;
        Ok(plane)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn point_count(&self) -> u32 {
        self.order * self.order + self.order + 1
    }

    pub fn points(&self) -> Subset {
        Subset::range(self.point_count()).expect("capacity checked at construction")
    }

    pub fn lines(&self) -> &[Subset] {
        &self.lines
    }

    /// Incidence axioms: line size, point degree, two lines meet in exactly
    /// one point, two points lie on exactly one line, and the line count.
    pub fn check_axioms(&self) -> std::result::Result<(), AxiomViolation> {
        let q = self.order;
        let npts = self.point_count();
        if self.lines.len() != npts as usize {
            return Err(AxiomViolation::LineCount {
                found: self.lines.len(),
            });
        }
        if let Some(&line) = self
            .lines
            .iter()
            .find(|l| l.len() != q + 1 || l.max_element().is_some_and(|e| e > npts))
        {
            return Err(AxiomViolation::LineSize { line });
        }
        for p in 1..=npts {
            let degree = self.lines.iter().filter(|l| l.contains(p)).count();
            if degree != q as usize + 1 {
                return Err(AxiomViolation::PointDegree { point: p, degree });
            }
        }
        for (i, &a) in self.lines.iter().enumerate() {
            for &b in &self.lines[i + 1..] {
                let common = a.intersection(b).len();
                if common != 1 {
                    return Err(AxiomViolation::LinesMeet { a, b, common });
                }
            }
        }
        for p in 1..=npts {
            for r in p + 1..=npts {
                let lines = self
                    .lines
                    .iter()
                    .filter(|l| l.contains(p) && l.contains(r))
                    .count();
                if lines != 1 {
                    return Err(AxiomViolation::PointsJoin { p, q: r, lines });
                }
            }
        }
        Ok(())
    }

    /// A point relabelling `perm` (with `perm[i-1]` the image of point `i`)
    /// carrying the lines of `self` onto those of `other`, if one exists.
    /// Backtracking search; intended for small orders.
    pub fn isomorphism_to(&self, other: &ProjectivePlane) -> Option<Vec<u32>> {
        if self.order != other.order {
            return None;
        }
        let npts = self.point_count() as usize;
        let mut target: Vec<u64> = other.lines.iter().map(|l| l.bits()).collect();
        target.sort_unstable();
        let mut perm = vec![0u32; npts];
        let mut used = 0u64;
        self.extend_relabelling(0, &mut perm, &mut used, &target)
            .then_some(perm)
    }

    fn extend_relabelling(&self, i: usize, perm: &mut [u32], used: &mut u64, target: &[u64]) -> bool {
        let npts = perm.len();
        if i == npts {
            let mut mapped: Vec<u64> = self
                .lines
                .iter()
                .map(|l| l.elements().fold(0u64, |acc, e| acc | 1 << (perm[e as usize - 1] - 1)))
                .collect();
            mapped.sort_unstable();
            return mapped == target;
        }
        for img in 1..=npts as u32 {
            if *used & (1 << (img - 1)) != 0 {
                continue;
            }
            perm[i] = img;
            *used |= 1 << (img - 1);
            // prune: every fully relabelled line must be a target line
            let assigned = (1u64 << (i + 1)) - 1;
            let ok = self.lines.iter().filter(|l| l.bits() & !assigned == 0).all(|l| {
                let m = l.elements().fold(0u64, |acc, e| acc | 1 << (perm[e as usize - 1] - 1));
                target.binary_search(&m).is_ok()
            });
            if ok && self.extend_relabelling(i + 1, perm, used, target) {
                return true;
            }
            *used &= !(1 << (img - 1));
        }
        false
    }

    pub fn meets_every_line(&self, set: Subset) -> bool {
        self.lines.iter().all(|l| !l.intersection(set).is_empty())
    }

    pub fn contains_a_line(&self, set: Subset) -> bool {
        self.lines.iter().any(|l| l.is_subset_of(set))
    }

    pub fn is_blocking_set(&self, set: Subset) -> bool {
        self.meets_every_line(set) && !self.contains_a_line(set)
    }

    /// Every point set of exactly `size` points meeting all lines.
    pub fn line_meeting_sets(&self, size: u32) -> Vec<Subset> {
        colex_subsets(self.points(), size)
            .filter(|&s| self.meets_every_line(s))
            .collect()
    }

    /// Smallest blocking set of at most `max_size` points, or `None`.
    pub fn min_blocking_set(&self, max_size: u32) -> Option<Subset> {
        (1..=max_size.min(self.point_count())).find_map(|k| {
            let mut found = None;
            self.search_blocking(Subset::EMPTY, 0, k, &mut found);
            found
        })
    }

    /// Branch on the points of the first unmet line; in the branch that picks
    /// its i-th point, the earlier points of that line are forbidden, so each
    /// set is visited once.
    fn search_blocking(&self, chosen: Subset, forbidden: u64, budget: u32, found: &mut Option<Subset>) {
        if found.is_some() || self.contains_a_line(chosen) {
            return;
        }
        let Some(unmet) = self.lines.iter().find(|l| l.intersection(chosen).is_empty()) else {
            *found = Some(chosen);
            return;
        };
        if budget == 0 {
            return;
        }
        // an unmet line with every point forbidden can never be met
        if self
            .lines
            .iter()
            .any(|l| l.intersection(chosen).is_empty() && l.bits() & !forbidden == 0)
        {
            return;
        }
        let mut forbid = forbidden;
        for p in unmet.elements() {
            let bit = 1u64 << (p - 1);
            if forbidden & bit != 0 {
                continue;
            }
            let mut next = chosen;
            next.insert(p);
            self.search_blocking(next, forbid, budget - 1, found);
            if found.is_some() {
                return;
            }
            forbid |= bit;
        }
    }
}

pub fn min_blocking_set_size(plane: &ProjectivePlane, max_size: u32) -> Option<u32> {
    plane.min_blocking_set(max_size).map(Subset::len)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MaxPpReport {
    pub order: u32,
    pub m: u32,
    pub n: u32,
    pub scale: u32,
    pub is_simplex: bool,
    pub is_maximal: bool,
    /// A vertex adjacent to every line, if the line set is not maximal.
    pub extension: Option<Subset>,
}

impl MaxPpReport {
    pub fn passed(&self) -> bool {
        self.is_simplex && self.is_maximal
    }
}

/// Check that the lines of `plane` form a maximal simplex of
/// `VR(F_{q+1}^{[m]}; 2q)`.
pub fn verify_max_pp_plane(plane: &ProjectivePlane, m: u32) -> Result<MaxPpReport> {
    let q = plane.order();
    if m < plane.point_count() {
        return invalid(format!("m = {m} is smaller than the {} points", plane.point_count()));
    }
    let n = q + 1;
    let scale = 2 * q;
    let k = FlagComplex::full(n, m, scale)?;
    let ords: Vec<u32> = plane
        .lines()
        .iter()
        .map(|&l| k.ordinal_of(l).expect("lines are n-subsets of [m]"))
        .collect();
    let sigma = Simplex::new(ords)?;
    let is_simplex = k.is_clique(&sigma);
    let (is_maximal, extension) = if is_simplex {
        let common = k.common_neighbors(&sigma);
        (common.is_empty(), common.first().map(|v| k.vertex(v)))
    } else {
        (false, None)
    };
    Ok(MaxPpReport {
        order: q,
        m,
        n,
        scale,
        is_simplex,
        is_maximal,
        extension,
    })
}

/// `verify_max_pp_plane` on the standard plane of prime order `q`
/// (the listed Fano labelling for `q = 2`).
pub fn verify_max_pp(q: u32, m: u32) -> Result<MaxPpReport> {
    let plane = if q == 2 { fano_plane() } else { projective_plane(q)? };
    verify_max_pp_plane(&plane, m)
}
