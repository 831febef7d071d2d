use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::Serialize;

use super::reduce::{reduce_boundary, Budget, Ordering};
use crate::complex::{FlagComplex, SimplexList};
use crate::error::{Error, Result};
use crate::field::PrimeField;

/// Coefficient field and hard resource limits for a homology computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyOptions {
    pub field: PrimeField,
    /// Most simplices held in memory at once, summed over live dimensions.
    pub max_simplices: u64,
    /// Budget for simplex storage plus reduced columns, in MiB.
    pub memory_mb: u64,
}

impl Default for HomologyOptions {
    fn default() -> Self {
        HomologyOptions {
            field: PrimeField::GF2,
            max_simplices: 4_000_000,
            memory_mb: 8192,
        }
    }
}

impl HomologyOptions {
    pub fn with_field(field: PrimeField) -> Self {
        HomologyOptions {
            field,
            ..Self::default()
        }
    }

    fn memory_bytes(&self) -> u64 {
        self.memory_mb.saturating_mul(1 << 20)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiReport {
    pub field: u32,
    /// Reduced Betti number per requested dimension.
    pub betti: BTreeMap<usize, u64>,
    /// Simplex counts of every dimension that was materialized.
    pub face_counts: BTreeMap<usize, u64>,
    /// `rank ∂_d` for every boundary map that was reduced.
    pub ranks: BTreeMap<usize, u64>,
}

impl BettiReport {
    pub fn get(&self, dim: usize) -> u64 {
        self.betti.get(&dim).copied().unwrap_or(0)
    }

    /// `[(dim, betti)]` records in increasing dimension.
    pub fn records(&self) -> Vec<BettiRecord> {
        self.betti
            .iter()
            .map(|(&dim, &betti)| BettiRecord { dim, betti })
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BettiRecord {
    pub dim: usize,
    pub betti: u64,
}

/// Reduced Betti numbers `b_0 .. b_max_dim`.
pub fn betti_numbers(k: &FlagComplex, max_dim: usize, opts: &HomologyOptions) -> Result<BettiReport> {
    let dims: Vec<usize> = (0..=max_dim).collect();
    betti_for_dims(k, &dims, opts)
}

/// Reduced Betti numbers for selected dimensions only. Degree `q` needs the
/// simplices of dimensions `q - 1 ..= q + 1`; nothing else is materialized.
pub fn betti_for_dims(k: &FlagComplex, dims: &[usize], opts: &HomologyOptions) -> Result<BettiReport> {
    let field = opts.field;
    let wanted: BTreeSet<usize> = dims.iter().copied().collect();
    // rank ∂_d is needed for d in {q, q+1}; ∂_0 is the augmentation
    let mut needed: BTreeSet<usize> = wanted.iter().flat_map(|&q| [q, q + 1]).collect();

    let mut counts: BTreeMap<usize, u64> = BTreeMap::new();
    let count_of = |d: usize, counts: &mut BTreeMap<usize, u64>| -> u64 {
        *counts.entry(d).or_insert_with(|| k.count_simplices(d))
    };

    // Reducing every boundary from the top down lets clearing skip most
    // columns, which is usually far cheaper than reducing ∂_{q+1} cold. Take
    // the whole range when it fits the cap.
    if let (Some(&lo), Some(&hi)) = (needed.iter().find(|&&d| d >= 1), needed.last()) {
        let mut top = hi;
        while count_of(top + 1, &mut counts) > 0 {
            top += 1;
        }
        let fits = (lo..=top).all(|d| count_of(d, &mut counts) + count_of(d - 1, &mut counts) <= opts.max_simplices);
        if fits {
            needed.extend(lo..=top + 1);
        }
    }

    // Refuse up front if any single reduction would exceed the simplex cap.
    for &d in needed.iter().filter(|&&d| d >= 1) {
        let held = count_of(d, &mut counts) + count_of(d - 1, &mut counts);
        if held > opts.max_simplices {
            return Err(Error::ResourceCap {
                cap: "max_simplices",
                limit: opts.max_simplices,
                required: held,
            });
        }
    }
    for &q in &wanted {
        count_of(q, &mut counts);
    }

    let mut ranks: BTreeMap<usize, u64> = BTreeMap::new();
    if needed.contains(&0) {
        ranks.insert(0, u64::from(k.vertex_count() > 0));
    }

    let mut lists: HashMap<usize, SimplexList> = HashMap::new();
    // pivot rows of the most recent ∂_{d+1}, as cleared columns for ∂_d
    let mut carried: Option<(usize, Vec<bool>)> = None;

    for &d in needed.iter().rev().filter(|&&d| d >= 1) {
        if counts[&d] == 0 {
            ranks.insert(d, 0);
            carried = None;
            continue;
        }
        for dd in [d, d - 1] {
            lists.entry(dd).or_insert_with(|| k.simplex_list(dd));
        }
        lists.retain(|&dd, _| dd == d || dd == d - 1);
        let list_bytes: u64 = lists.values().map(|l| l.heap_bytes() as u64).sum();
        let budget_bytes = opts.memory_bytes();
        if list_bytes > budget_bytes {
            return Err(Error::ResourceCap {
                cap: "memory",
                limit: budget_bytes,
                required: list_bytes,
            });
        }
        let budget = Budget {
            max_entries: (budget_bytes - list_bytes) / 8,
        };
        let cleared = carried.take().and_then(|(cd, v)| (cd == d).then_some(v));
        let red = reduce_boundary(
            &lists[&(d - 1)],
            &lists[&d],
            &Ordering {
                row_index: None,
                col_simplex: None,
            },
            cleared.as_deref(),
            field,
            &budget,
        )?;
        ranks.insert(d, red.rank() as u64);
        let mut next_cleared = vec![false; lists[&(d - 1)].len()];
        for &(_, row) in &red.pairs {
            next_cleared[row as usize] = true;
        }
        carried = Some((d - 1, next_cleared));
    }

    let betti = wanted
        .iter()
        .map(|&q| {
            let b = counts[&q] - ranks[&q] - ranks[&(q + 1)];
            (q, b)
        })
        .collect();
    Ok(BettiReport {
        field: field.p(),
        betti,
        face_counts: counts,
        ranks,
    })
}

/// Reduced Euler characteristic from face counts `f_0, f_1, ...`.
pub fn reduced_euler_characteristic(f: &[u64]) -> i64 {
    let chi: i64 = f
        .iter()
        .enumerate()
        .map(|(d, &c)| if d % 2 == 0 { c as i64 } else { -(c as i64) })
        .sum();
    if f.first().copied().unwrap_or(0) > 0 {
        chi - 1
    } else {
        chi
    }
}
