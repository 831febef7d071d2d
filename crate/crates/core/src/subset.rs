//! Subsets of a ground set `[m]` (m <= 64), the symmetric-difference metric,
//! and the spaces `F_n^S` of all n-subsets of a set `S`.
//!
//! Element `i` (1-based) of the ground set lives in bit `i - 1`. Comparing the
//! raw bit patterns as integers gives colexicographic order, which is the
//! canonical vertex order everywhere in the crate.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::binomial::binomial;
use crate::error::{invalid, Result};

/// Largest supported ground set.
pub const GROUND_CAPACITY: u32 = 64;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Subset {
    bits: u64,
    len: u32,
}

impl Subset {
    pub const EMPTY: Subset = Subset { bits: 0, len: 0 };

    pub fn from_bits(bits: u64) -> Self {
        Subset {
            bits,
            len: bits.count_ones(),
        }
    }

    /// Build from 1-based elements. Elements outside `1..=64` are rejected.
    pub fn from_elements<I: IntoIterator<Item = u32>>(elems: I) -> Result<Self> {
        let mut bits = 0u64;
        for e in elems {
            if e == 0 || e > GROUND_CAPACITY {
                return invalid(format!("element {e} outside 1..={GROUND_CAPACITY}"));
            }
            bits |= 1 << (e - 1);
        }
        Ok(Subset::from_bits(bits))
    }

    /// `[m] = {1, ..., m}`.
    pub fn range(m: u32) -> Result<Self> {
        if m > GROUND_CAPACITY {
            return invalid(format!("ground set size {m} exceeds capacity {GROUND_CAPACITY}"));
        }
        let bits = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
        Ok(Subset::from_bits(bits))
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn len(self) -> u32 {
        self.len
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn contains(self, e: u32) -> bool {
        (1..=GROUND_CAPACITY).contains(&e) && self.bits & (1 << (e - 1)) != 0
    }

    #[inline]
    pub fn union(self, other: Subset) -> Subset {
        Subset::from_bits(self.bits | other.bits)
    }

    #[inline]
    pub fn intersection(self, other: Subset) -> Subset {
        Subset::from_bits(self.bits & other.bits)
    }

    #[inline]
    pub fn difference(self, other: Subset) -> Subset {
        Subset::from_bits(self.bits & !other.bits)
    }

    #[inline]
    pub fn is_subset_of(self, other: Subset) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn insert(&mut self, e: u32) {
        *self = Subset::from_bits(self.bits | (1 << (e - 1)));
    }

    pub fn remove(&mut self, e: u32) {
        *self = Subset::from_bits(self.bits & !(1 << (e - 1)));
    }

    pub fn min_element(self) -> Option<u32> {
        (self.bits != 0).then(|| self.bits.trailing_zeros() + 1)
    }

    pub fn max_element(self) -> Option<u32> {
        (self.bits != 0).then(|| 64 - self.bits.leading_zeros())
    }

    /// Elements in increasing order.
    pub fn elements(self) -> impl Iterator<Item = u32> {
        let mut bits = self.bits;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let e = bits.trailing_zeros() + 1;
                bits &= bits - 1;
                Some(e)
            }
        })
    }

    /// The `count` smallest elements.
    pub fn smallest(self, count: u32) -> Subset {
        let mut out = 0u64;
        let mut bits = self.bits;
        for _ in 0..count.min(self.len) {
            let low = bits & bits.wrapping_neg();
            out |= low;
            bits ^= low;
        }
        Subset::from_bits(out)
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.elements()).finish()
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.elements().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Colexicographic order.
impl Ord for Subset {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.bits.cmp(&other.bits)
    }
}

impl Serialize for Subset {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.elements())
    }
}

impl<'de> Deserialize<'de> for Subset {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let elems = Vec::<u32>::deserialize(d)?;
        Subset::from_elements(elems).map_err(serde::de::Error::custom)
    }
}

fn check_same_size(a: Subset, b: Subset) -> Result<()> {
    if a.len() != b.len() {
        return invalid(format!("subset sizes differ: |{a}| = {}, |{b}| = {}", a.len(), b.len()));
    }
    Ok(())
}

/// `|A Δ B|`, defined only for equal-size subsets.
pub fn symdiff_distance(a: Subset, b: Subset) -> Result<u32> {
    check_same_size(a, b)?;
    Ok(raw_distance(a, b))
}

/// Unchecked distance kernel.
#[inline]
pub fn raw_distance(a: Subset, b: Subset) -> u32 {
    (a.bits ^ b.bits).count_ones()
}

/// `|A ∩ B| >= n - c`, the intersection form of `d(A, B) <= 2c`.
pub fn intersects_threshold(a: Subset, b: Subset, c: u32) -> Result<bool> {
    check_same_size(a, b)?;
    let n = a.len();
    if c == 0 || c > n {
        return invalid(format!("threshold c = {c} outside 1..={n}"));
    }
    Ok(a.intersection(b).len() + c >= n)
}

/// Kneser adjacency: disjoint subsets of equal size.
pub fn kneser_adjacent(a: Subset, b: Subset) -> Result<bool> {
    check_same_size(a, b)?;
    Ok(a.bits & b.bits == 0)
}

/// Scatter the low bits of `src` into the set positions of `mask`.
fn deposit(mut src: u64, mut mask: u64) -> u64 {
    let mut out = 0;
    while mask != 0 && src != 0 {
        let low = mask & mask.wrapping_neg();
        if src & 1 != 0 {
            out |= low;
        }
        src >>= 1;
        mask ^= low;
    }
    out
}

/// All `n`-subsets of `ground`, in colexicographic order.
pub fn colex_subsets(ground: Subset, n: u32) -> impl Iterator<Item = Subset> {
    let width = ground.len();
    let mut next: Option<u64> = if n > width {
        None
    } else if n == 0 {
        Some(0)
    } else {
        Some(if n == 64 { u64::MAX } else { (1u64 << n) - 1 })
    };
    std::iter::from_fn(move || {
        let cur = next?;
        // Gosper's hack over `width` positions
        next = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur.wrapping_add(c);
            if r == 0 {
                None
            } else {
                let nxt = (((r ^ cur) >> 2) / c) | r;
                (width == 64 || nxt >> width == 0).then_some(nxt)
            }
        };
        Some(Subset::from_bits(deposit(cur, ground.bits)))
    })
}

/// The metric space `F_n^S`: every n-subset of a ground set `S`, indexed in
/// colexicographic order.
#[derive(Clone, Debug)]
pub struct NSubsetSpace {
    ground: Subset,
    n: u32,
    vertices: Vec<Subset>,
    index: HashMap<Subset, u32>,
}

impl NSubsetSpace {
    pub fn new(n: u32, ground: Subset) -> Result<Self> {
        if n == 0 {
            return invalid("n must be at least 1");
        }
        if ground.len() < n {
            return invalid(format!("ground set {ground} has fewer than n = {n} elements"));
        }
        let count = binomial(u64::from(ground.len()), u64::from(n))?;
        if count > u128::from(u32::MAX) {
            return invalid(format!("C({}, {n}) = {count} vertices is too many", ground.len()));
        }
        let vertices: Vec<Subset> = colex_subsets(ground, n).collect();
        debug_assert_eq!(vertices.len() as u128, count);
        let index = vertices
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, i as u32))
            .collect();
        Ok(NSubsetSpace {
            ground,
            n,
            vertices,
            index,
        })
    }

    /// `F_n^{[m]}`.
    pub fn full(n: u32, m: u32) -> Result<Self> {
        Self::new(n, Subset::range(m)?)
    }

    pub fn ground(&self) -> Subset {
        self.ground
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn vertices(&self) -> &[Subset] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex(&self, ordinal: u32) -> Subset {
        self.vertices[ordinal as usize]
    }

    pub fn ordinal(&self, s: Subset) -> Option<u32> {
        self.index.get(&s).copied()
    }
}

/// Convenience alias for the enumeration operation.
pub fn enumerate_space(n: u32, ground: Subset) -> Result<NSubsetSpace> {
    NSubsetSpace::new(n, ground)
}
