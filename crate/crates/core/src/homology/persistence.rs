//! Barcodes of the distance filtration `VR(F_n^S; 0) ⊂ VR(F_n^S; 2) ⊂ ... ⊂ VR(F_n^S; 2n)`.

use std::collections::BTreeMap;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use super::betti::HomologyOptions;
use super::reduce::{reduce_boundary, Budget, Ordering};
use crate::complex::{FlagComplex, SimplexList};
use crate::error::{Error, Result};
use crate::subset::{raw_distance, Subset};

/// Half-open bar `[birth, death)`; `death = None` is infinite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Interval {
    pub birth: u32,
    pub death: Option<u32>,
}

impl Interval {
    pub fn length(&self) -> Option<u32> {
        self.death.map(|d| d - self.birth)
    }
}

/// Serialized as `[birth, death]` with `null` for an infinite death.
impl Serialize for Interval {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(2))?;
        seq.serialize_element(&self.birth)?;
        seq.serialize_element(&self.death)?;
        seq.end()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Barcode {
    pub field: u32,
    /// Filtration scales, `0, 2, ..., 2n`.
    pub scales: Vec<u32>,
    /// Reduced barcode per dimension, sorted.
    pub intervals: BTreeMap<usize, Vec<Interval>>,
}

impl Barcode {
    pub fn longest_finite_bar(&self) -> Option<u32> {
        self.intervals
            .values()
            .flatten()
            .filter_map(Interval::length)
            .max()
    }

    pub fn has_infinite_bar(&self) -> bool {
        self.intervals.values().flatten().any(|i| i.death.is_none())
    }

    pub fn in_dim(&self, d: usize) -> &[Interval] {
        self.intervals.get(&d).map_or(&[], Vec::as_slice)
    }

    /// Betti number of the complex at `scale`, read off the barcode.
    pub fn betti_at(&self, d: usize, scale: u32) -> usize {
        self.in_dim(d)
            .iter()
            .filter(|i| i.birth <= scale && i.death.is_none_or(|x| scale < x))
            .count()
    }
}

fn diameter(vertices: &[Subset], s: &[u32]) -> u32 {
    let mut best = 0;
    for (i, &a) in s.iter().enumerate() {
        for &b in &s[i + 1..] {
            best = best.max(raw_distance(vertices[a as usize], vertices[b as usize]));
        }
    }
    best
}

/// Filtration order of one dimension: simplices sorted by (diameter, lex).
struct FilteredDim {
    list: SimplexList,
    value: Vec<u32>,     // by filtration index
    order: Vec<u32>,     // filtration index -> lex position
    index_of: Vec<u32>,  // lex position -> filtration index
}

impl FilteredDim {
    fn new(k: &FlagComplex, d: usize) -> Self {
        let list = k.simplex_list(d);
        let diam: Vec<u32> = list.iter().map(|s| diameter(k.vertices(), s)).collect();
        let mut order: Vec<u32> = (0..list.len() as u32).collect();
        order.sort_by_key(|&i| (diam[i as usize], i));
        let mut index_of = vec![0u32; list.len()];
        for (f, &lex) in order.iter().enumerate() {
            index_of[lex as usize] = f as u32;
        }
        let value = order.iter().map(|&i| diam[i as usize]).collect();
        FilteredDim {
            list,
            value,
            order,
            index_of,
        }
    }
}

/// Reduced persistence barcode in dimensions `0..=max_dim`.
pub fn persistence_barcode(
    n: u32,
    ground: Subset,
    max_dim: usize,
    opts: &HomologyOptions,
) -> Result<Barcode> {
    let top = FlagComplex::build(n, ground, 2 * n)?;
    let total: u64 = (0..=max_dim + 1).map(|d| top.count_simplices(d)).sum();
    if total > opts.max_simplices {
        return Err(Error::ResourceCap {
            cap: "max_simplices",
            limit: opts.max_simplices,
            required: total,
        });
    }
    let field = opts.field;
    let budget = Budget {
        max_entries: opts.memory_mb.saturating_mul(1 << 20) / 8,
    };

    let mut intervals: BTreeMap<usize, Vec<Interval>> = BTreeMap::new();
    let mut upper = FilteredDim::new(&top, max_dim + 1);
    // cleared[i]: simplex with filtration index i of the current column
    // dimension is a pivot row of the next boundary up
    let mut cleared: Option<Vec<bool>> = None;

    for d in (1..=max_dim + 1).rev() {
        let lower = FilteredDim::new(&top, d - 1);
        let red = if upper.list.is_empty() {
            None
        } else {
            Some(reduce_boundary(
                &lower.list,
                &upper.list,
                &Ordering {
                    row_index: Some(&lower.index_of),
                    col_simplex: Some(&upper.order),
                },
                cleared.as_deref(),
                field,
                &budget,
            )?)
        };
        let mut next_cleared = vec![false; lower.list.len()];
        if let Some(red) = &red {
            for &(col, row) in &red.pairs {
                next_cleared[row as usize] = true;
                let (birth, death) = (lower.value[row as usize], upper.value[col as usize]);
                if birth < death {
                    intervals.entry(d - 1).or_default().push(Interval {
                        birth,
                        death: Some(death),
                    });
                }
            }
            // cycles in dimension d that never die
            if d <= max_dim {
                for &col in &red.zero_columns {
                    let was_killed = cleared.as_ref().is_some_and(|c| c[col as usize]);
                    if !was_killed {
                        intervals.entry(d).or_default().push(Interval {
                            birth: upper.value[col as usize],
                            death: None,
                        });
                    }
                }
            }
        }
        cleared = Some(next_cleared);
        upper = lower;
    }

    // every vertex is a 0-cycle; drop one essential component for reduced homology
    let killed = cleared.unwrap_or_default();
    let mut essentials: Vec<Interval> = (0..upper.list.len())
        .filter(|&i| !killed.get(i).copied().unwrap_or(false))
        .map(|i| Interval {
            birth: upper.value[i],
            death: None,
        })
        .collect();
    if !essentials.is_empty() {
        essentials.remove(0);
    }
    intervals.entry(0).or_default().extend(essentials);

    for bars in intervals.values_mut() {
        bars.sort();
    }
    intervals.retain(|_, v| !v.is_empty());
    Ok(Barcode {
        field: field.p(),
        scales: (0..=n).map(|c| 2 * c).collect(),
        intervals,
    })
}
