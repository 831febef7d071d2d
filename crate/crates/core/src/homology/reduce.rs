//! Column reduction of sparse boundary matrices over a prime field.
//!
//! Columns are processed left to right; the pivot of a column is its largest
//! row index ("lowest one"). Columns whose index appears in `cleared` are known
//! to reduce to zero and are skipped without assembly.

use rayon::prelude::*;

use crate::complex::SimplexList;
use crate::error::{Error, Result};
use crate::field::PrimeField;

const NO_PIVOT: u32 = u32::MAX;
const BLOCK: usize = 1 << 14;

/// `(row, coefficient)` pairs, strictly increasing in row.
pub(crate) type Column = Vec<(u32, u32)>;

/// Outcome of reducing one boundary matrix.
pub(crate) struct Reduction {
    /// `(column, pivot row)` for every nonzero reduced column, in column order.
    pub pairs: Vec<(u32, u32)>,
    /// Columns that reduced to zero (cleared columns excluded).
    pub zero_columns: Vec<u32>,
}

impl Reduction {
    pub fn rank(&self) -> usize {
        self.pairs.len()
    }
}

/// Row/column orderings for a filtered boundary matrix. `None` means the
/// lexicographic order of the simplex lists.
pub(crate) struct Ordering<'a> {
    /// Lex position of a row simplex -> row index.
    pub row_index: Option<&'a [u32]>,
    /// Column index -> lex position of the column simplex.
    pub col_simplex: Option<&'a [u32]>,
}

pub(crate) struct Budget {
    pub max_entries: u64,
}

/// Assemble column `lex` of `∂: C_d -> C_{d-1}`.
fn assemble(
    rows: &SimplexList,
    cols: &SimplexList,
    lex: usize,
    row_index: Option<&[u32]>,
    field: PrimeField,
    scratch: &mut Vec<u32>,
) -> Column {
    let sigma = cols.get(lex);
    let mut col: Column = Vec::with_capacity(sigma.len());
    for skip in 0..sigma.len() {
        scratch.clear();
        scratch.extend(sigma.iter().enumerate().filter(|&(j, _)| j != skip).map(|(_, &v)| v));
        let pos = rows
            .position(scratch)
            .expect("face of a clique is a clique");
        let row = row_index.map_or(pos as u32, |ix| ix[pos]);
        col.push((row, field.sign(skip % 2 == 1)));
    }
    col.sort_unstable_by_key(|&(r, _)| r);
    col
}

/// `a <- a - factor * b`, both sorted by row.
fn axpy(a: &Column, b: &Column, factor: u32, field: PrimeField, out: &mut Column) {
    out.clear();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        let (ra, ca) = a[i];
        let (rb, cb) = b[j];
        match ra.cmp(&rb) {
            std::cmp::Ordering::Less => {
                out.push((ra, ca));
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push((rb, field.neg(field.mul(factor, cb))));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let v = field.sub(ca, field.mul(factor, cb));
                if v != 0 {
                    out.push((ra, v));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    for &(rb, cb) in &b[j..] {
        out.push((rb, field.neg(field.mul(factor, cb))));
    }
}

/// Reduce the boundary matrix whose columns are the simplices of `cols` and
/// rows the simplices of `rows`. Column assembly runs in parallel blocks;
/// reduction is sequential so the result is independent of thread count.
pub(crate) fn reduce_boundary(
    rows: &SimplexList,
    cols: &SimplexList,
    order: &Ordering<'_>,
    cleared: Option<&[bool]>,
    field: PrimeField,
    budget: &Budget,
) -> Result<Reduction> {
    let ncols = cols.len();
    let mut pivot_owner = vec![NO_PIVOT; rows.len()];
    let mut stored: Vec<Column> = Vec::new();
    let mut held_entries: u64 = 0;
    let mut pairs = Vec::new();
    let mut zero_columns = Vec::new();
    let mut tmp: Column = Vec::new();

    let mut start = 0;
    while start < ncols {
        let end = (start + BLOCK).min(ncols);
        let block: Vec<Option<Column>> = (start..end)
            .into_par_iter()
            .map_init(Vec::new, |scratch, c| {
                if cleared.is_some_and(|cl| cl[c]) {
                    return None;
                }
                let lex = order.col_simplex.map_or(c, |m| m[c] as usize);
                Some(assemble(rows, cols, lex, order.row_index, field, scratch))
            })
            .collect();

        for (offset, col) in block.into_iter().enumerate() {
            let c = (start + offset) as u32;
            let Some(mut col) = col else { continue };
            loop {
                let Some(&(low, coeff)) = col.last() else {
                    zero_columns.push(c);
                    break;
                };
                let owner = pivot_owner[low as usize];
                if owner == NO_PIVOT {
                    if field.p() != 2 {
                        // normalize so the pivot coefficient is 1
                        let inv = field.inv(coeff);
                        for e in col.iter_mut() {
                            e.1 = field.mul(e.1, inv);
                        }
                    }
                    pivot_owner[low as usize] = stored.len() as u32;
                    held_entries += col.len() as u64;
                    if held_entries > budget.max_entries {
                        return Err(Error::ResourceCap {
                            cap: "memory",
                            limit: budget.max_entries,
                            required: held_entries,
                        });
                    }
                    stored.push(col);
                    pairs.push((c, low));
                    break;
                }
                let other = &stored[owner as usize];
                axpy(&col, other, coeff, field, &mut tmp);
                std::mem::swap(&mut col, &mut tmp);
            }
        }
        start = end;
    }
    Ok(Reduction {
        pairs,
        zero_columns,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn axpy_cancels() {
        let f = PrimeField::GF3;
        let a = vec![(0, 1), (2, 2)];
        let b = vec![(1, 1), (2, 1)];
        let mut out = Vec::new();
        axpy(&a, &b, 2, f, &mut out);
        assert_eq!(out, vec![(0, 1), (1, 1)]);
    }
}
