//! Sparse chains with prime-field coefficients.

use std::collections::BTreeMap;

use crate::complex::{FlagComplex, Simplex};
use crate::error::{invalid, Result};
use crate::field::PrimeField;

/// A `dim`-chain: simplex -> nonzero coefficient. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainVector {
    dim: usize,
    entries: BTreeMap<Simplex, u32>,
}

impl ChainVector {
    pub fn zero(dim: usize) -> Self {
        ChainVector {
            dim,
            entries: BTreeMap::new(),
        }
    }

    pub fn single(sigma: Simplex, coeff: u32, field: PrimeField) -> Self {
        let mut c = ChainVector::zero(sigma.dim());
        c.add_term(sigma, coeff, field);
        c
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn coefficient(&self, sigma: &[u32]) -> u32 {
        self.entries.get(sigma).copied().unwrap_or(0)
    }

    pub fn get(&self, sigma: &Simplex) -> u32 {
        self.entries.get(sigma).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Simplex, u32)> {
        self.entries.iter().map(|(s, &c)| (s, c))
    }

    /// `self += coeff * sigma`.
    pub fn add_term(&mut self, sigma: Simplex, coeff: u32, field: PrimeField) {
        debug_assert_eq!(sigma.dim(), self.dim);
        let coeff = coeff % field.p();
        if coeff == 0 {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.entries.entry(sigma) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                let v = field.add(*e.get(), coeff);
                if v == 0 {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn add_chain(&mut self, other: &ChainVector, scale: u32, field: PrimeField) {
        for (s, c) in other.iter() {
            self.add_term(s.clone(), field.mul(c, scale), field);
        }
    }

    pub fn scaled(&self, k: u32, field: PrimeField) -> ChainVector {
        let mut out = ChainVector::zero(self.dim);
        out.add_chain(self, k, field);
        out
    }

    pub fn into_entries(self) -> BTreeMap<Simplex, u32> {
        self.entries
    }
}

/// Alternating-sign sum of the codimension-1 faces of `sigma`. A vertex has
/// zero (non-augmented) boundary, returned as the empty chain in dimension 0.
pub fn boundary(sigma: &Simplex, field: PrimeField) -> ChainVector {
    let d = sigma.dim();
    if d == 0 {
        return ChainVector::zero(0);
    }
    let mut out = ChainVector::zero(d - 1);
    for i in 0..=d {
        let face: Vec<u32> = sigma
            .iter()
            .enumerate()
            .filter_map(|(j, &v)| (j != i).then_some(v))
            .collect();
        out.add_term(Simplex::from_sorted(face), field.sign(i % 2 == 1), field);
    }
    out
}

pub fn boundary_of_chain(z: &ChainVector, field: PrimeField) -> ChainVector {
    let mut out = ChainVector::zero(z.dim().saturating_sub(1));
    for (s, c) in z.iter() {
        out.add_chain(&boundary(s, field), c, field);
    }
    out
}

/// `true` iff `∂z = 0`. Every term must be a simplex of `k`.
pub fn cycle_check(k: &FlagComplex, z: &ChainVector, field: PrimeField) -> Result<bool> {
    if let Some((bad, _)) = z.iter().find(|(s, _)| !k.is_clique(s)) {
        return invalid(format!("{:?} is not a simplex of the complex", bad.vertices()));
    }
    Ok(boundary_of_chain(z, field).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn simplex(v: &[u32]) -> Simplex {
        Simplex::new(v.to_vec()).unwrap()
    }

    #[test]
    fn edge_boundary() {
        let f = PrimeField::GF3;
        let b = boundary(&simplex(&[3, 7]), f);
        assert_eq!(b.get(&simplex(&[7])), 1);
        assert_eq!(b.get(&simplex(&[3])), 2);
        let b2 = boundary(&simplex(&[3, 7]), PrimeField::GF2);
        assert_eq!(b2.len(), 2);
    }

    #[test]
    fn triangle_boundary_has_three_terms() {
        assert_eq!(boundary(&simplex(&[0, 1, 2]), PrimeField::GF3).len(), 3);
    }

    #[test]
    fn boundary_squared_vanishes() {
        for p in [2, 3, 5] {
            let f = PrimeField::new(p).unwrap();
            for d in 0..=6u32 {
                let s = simplex(&(0..=d).map(|i| i * 3 + 1).collect::<Vec<_>>());
                let bb = boundary_of_chain(&boundary(&s, f), f);
                assert!(bb.is_zero(), "p={p} d={d}");
            }
        }
    }

    #[test]
    fn cycle_check_examples() {
        let k = FlagComplex::full(2, 4, 2).unwrap();
        let f = PrimeField::GF3;
        let tri = k.simplices(2).next().unwrap();
        assert!(cycle_check(&k, &boundary(&tri, f), f).unwrap());
        let edge = k.simplices(1).next().unwrap();
        assert!(!cycle_check(&k, &ChainVector::single(edge, 1, f), f).unwrap());
        let bogus = ChainVector::single(simplex(&[0, 5]), 1, f);
        assert!(cycle_check(&k, &bogus, f).is_err());
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let f = PrimeField::GF3;
        let mut c = ChainVector::zero(1);
        c.add_term(simplex(&[0, 1]), 1, f);
        c.add_term(simplex(&[0, 1]), 2, f);
        assert!(c.is_zero());
    }
}
