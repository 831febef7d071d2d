//! Vietoris-Rips (flag) complexes over sets of equal-size subsets.
//!
//! A complex stores only its vertices and 1-skeleton. Higher simplices are the
//! cliques of the adjacency graph and are streamed on demand, never stored
//! globally.

use std::fmt::Write as _;
use std::io;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::error::{invalid, Result};
use crate::subset::{raw_distance, NSubsetSpace, Subset};

/// Strictly increasing list of vertex ordinals.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Simplex(Vec<u32>);

impl Simplex {
    /// Sorts and rejects duplicates.
    pub fn new(mut verts: Vec<u32>) -> Result<Self> {
        verts.sort_unstable();
        if verts.windows(2).any(|w| w[0] == w[1]) {
            return invalid("simplex has a repeated vertex");
        }
        if verts.is_empty() {
            return invalid("simplex must be nonempty");
        }
        Ok(Simplex(verts))
    }

    /// Caller guarantees strictly increasing, nonempty input.
    pub fn from_sorted(verts: Vec<u32>) -> Self {
        debug_assert!(!verts.is_empty() && verts.windows(2).all(|w| w[0] < w[1]));
        Simplex(verts)
    }

    pub fn vertices(&self) -> &[u32] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.0
    }
}

impl std::borrow::Borrow<[u32]> for Simplex {
    fn borrow(&self) -> &[u32] {
        &self.0
    }
}

impl std::ops::Deref for Simplex {
    type Target = [u32];
    fn deref(&self) -> &[u32] {
        &self.0
    }
}

#[derive(Clone, Debug)]
pub struct FlagComplex {
    n: u32,
    scale: u32,
    ground: Subset,
    vertices: Vec<Subset>,
    adjacency: Vec<VertexSet>,
}

impl FlagComplex {
    /// `VR(F_n^S; r)`.
    pub fn build(n: u32, ground: Subset, scale: u32) -> Result<Self> {
        let space = NSubsetSpace::new(n, ground)?;
        Ok(Self::from_space(&space, scale))
    }

    /// `VR(F_n^{[m]}; r)`.
    pub fn full(n: u32, m: u32, scale: u32) -> Result<Self> {
        Self::build(n, Subset::range(m)?, scale)
    }

    /// `Ind(KG(n, k)) = VR(F_n^{[2n+k]}; 2(n-1))`.
    pub fn kneser_independence(n: u32, k: u32) -> Result<Self> {
        if n < 2 {
            return invalid("Kneser graphs need n >= 2");
        }
        Self::full(n, 2 * n + k, 2 * (n - 1))
    }

    pub fn from_space(space: &NSubsetSpace, scale: u32) -> Self {
        Self::assemble(space.n(), space.ground(), space.vertices().to_vec(), scale)
    }

    /// VR complex on an arbitrary collection of n-subsets. The collection is
    /// sorted colexicographically and deduplicated.
    pub fn from_vertices(n: u32, mut vertices: Vec<Subset>, scale: u32) -> Result<Self> {
        vertices.sort_unstable();
        vertices.dedup();
        if let Some(bad) = vertices.iter().find(|v| v.len() != n) {
            return invalid(format!("vertex {bad} does not have size {n}"));
        }
        let ground = vertices.iter().fold(Subset::EMPTY, |acc, &v| acc.union(v));
        Ok(Self::assemble(n, ground, vertices, scale))
    }

    fn assemble(n: u32, ground: Subset, vertices: Vec<Subset>, scale: u32) -> Self {
        let len = vertices.len();
        let adjacency = vertices
            .par_iter()
            .enumerate()
            .map(|(i, &a)| {
                let mut row = VertexSet::empty(len);
                for (j, &b) in vertices.iter().enumerate() {
                    if i != j && raw_distance(a, b) <= scale {
                        row.insert(j as u32);
                    }
                }
                row
            })
            .collect();
        FlagComplex {
            n,
            scale,
            ground,
            vertices,
            adjacency,
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn scale(&self) -> u32 {
        self.scale
    }

    /// Union of all vertex subsets (or the requested ground set for full spaces).
    pub fn ground(&self) -> Subset {
        self.ground
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[Subset] {
        &self.vertices
    }

    pub fn vertex(&self, i: u32) -> Subset {
        self.vertices[i as usize]
    }

    pub fn ordinal_of(&self, s: Subset) -> Option<u32> {
        self.vertices.binary_search(&s).ok().map(|i| i as u32)
    }

    pub fn adjacency(&self) -> &[VertexSet] {
        &self.adjacency
    }

    #[inline]
    pub fn adjacent(&self, i: u32, j: u32) -> bool {
        self.adjacency[i as usize].contains(j)
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(VertexSet::count).sum::<usize>() / 2
    }

    pub fn is_clique(&self, verts: &[u32]) -> bool {
        verts.iter().all(|&v| (v as usize) < self.vertices.len())
            && verts
                .iter()
                .enumerate()
                .all(|(i, &a)| verts[i + 1..].iter().all(|&b| self.adjacent(a, b)))
    }

    /// Vertices adjacent to every member of `verts`.
    pub fn common_neighbors(&self, verts: &[u32]) -> VertexSet {
        let mut common = VertexSet::full(self.vertices.len());
        for &v in verts {
            common.intersect_with(&self.adjacency[v as usize]);
        }
        common
    }

    pub fn is_maximal_simplex(&self, sigma: &Simplex) -> Result<bool> {
        if !self.is_clique(sigma) {
            return invalid("vertex set is not a simplex of the complex");
        }
        Ok(self.common_neighbors(sigma).is_empty())
    }

    /// Subcomplex induced on `verts` (ascending ordinals). Ordinal `i` of the
    /// result corresponds to `verts[i]`.
    pub fn induced(&self, verts: &[u32]) -> FlagComplex {
        let len = verts.len();
        let adjacency = verts
            .iter()
            .map(|&a| {
                let mut row = VertexSet::empty(len);
                for (j, &b) in verts.iter().enumerate() {
                    if self.adjacent(a, b) {
                        row.insert(j as u32);
                    }
                }
                row
            })
            .collect();
        let vertices: Vec<Subset> = verts.iter().map(|&v| self.vertex(v)).collect();
        let ground = vertices.iter().fold(Subset::EMPTY, |acc, &v| acc.union(v));
        FlagComplex {
            n: self.n,
            scale: self.scale,
            ground,
            vertices,
            adjacency,
        }
    }

    /// `lk(v)`: the subcomplex induced on the neighbours of `v`, together with
    /// the parent ordinals of its vertices.
    pub fn link(&self, v: u32) -> Result<(FlagComplex, Vec<u32>)> {
        if v as usize >= self.vertices.len() {
            return invalid(format!("vertex {v} out of range"));
        }
        let nbrs: Vec<u32> = self.adjacency[v as usize].iter().collect();
        Ok((self.induced(&nbrs), nbrs))
    }

    /// `VR(F_n^T; r)` where `T` is the union of the members of `sigma`.
    pub fn convex_hull(&self, sigma: &Simplex) -> Result<FlagComplex> {
        let hull = sigma
            .iter()
            .fold(Subset::EMPTY, |acc, &v| acc.union(self.vertex(v)));
        FlagComplex::build(self.n, hull, self.scale)
    }

    /// Invoke `f` on every clique of exactly `size` vertices whose smallest
    /// vertex is `lead`, in lexicographic order.
    pub fn for_each_clique_from<F: FnMut(&[u32])>(&self, lead: u32, size: usize, f: &mut F) {
        if size == 0 {
            return;
        }
        let mut cur = Vec::with_capacity(size);
        cur.push(lead);
        let mut cand = self.adjacency[lead as usize].clone();
        cand.clear_through(lead);
        self.extend_cliques(&mut cur, cand, size, f);
    }

    fn extend_cliques<F: FnMut(&[u32])>(
        &self,
        cur: &mut Vec<u32>,
        mut cand: VertexSet,
        size: usize,
        f: &mut F,
    ) {
        if cur.len() == size {
            f(cur);
            return;
        }
        let need = size - cur.len();
        if cand.count() < need {
            return;
        }
        while let Some(v) = cand.pop_first() {
            let mut next = cand.clone();
            next.intersect_with(&self.adjacency[v as usize]);
            cur.push(v);
            self.extend_cliques(cur, next, size, f);
            cur.pop();
        }
    }

    /// Every simplex of dimension `dim`, lexicographically.
    pub fn for_each_simplex<F: FnMut(&[u32])>(&self, dim: usize, mut f: F) {
        for lead in 0..self.vertices.len() as u32 {
            self.for_each_clique_from(lead, dim + 1, &mut f);
        }
    }

    /// Lazily stream the simplices of dimension `dim` in lexicographic order.
    pub fn simplices(&self, dim: usize) -> SimplexIter<'_> {
        SimplexIter::new(self, dim + 1)
    }

    /// Materialize dimension `dim` as a flat sorted list, built in parallel
    /// over leading vertices and concatenated in order.
    pub fn simplex_list(&self, dim: usize) -> SimplexList {
        let size = dim + 1;
        let chunks: Vec<Vec<u32>> = (0..self.vertices.len() as u32)
            .into_par_iter()
            .map(|lead| {
                let mut out = Vec::new();
                self.for_each_clique_from(lead, size, &mut |c| out.extend_from_slice(c));
                out
            })
            .collect();
        let mut data = Vec::with_capacity(chunks.iter().map(Vec::len).sum());
        for c in chunks {
            data.extend(c);
        }
        SimplexList { size, data }
    }

    /// Number of simplices in dimension `dim`.
    pub fn count_simplices(&self, dim: usize) -> u64 {
        (0..self.vertices.len() as u32)
            .into_par_iter()
            .map(|lead| {
                let mut c = 0u64;
                self.for_each_clique_from(lead, dim + 1, &mut |_| c += 1);
                c
            })
            .sum()
    }

    /// Face counts `f_0, f_1, ...` up to `max_dim` (inclusive), stopping early
    /// once a dimension is empty.
    pub fn f_vector(&self, max_dim: usize) -> Vec<u64> {
        let per_lead: Vec<Vec<u64>> = (0..self.vertices.len() as u32)
            .into_par_iter()
            .map(|lead| {
                let mut counts = vec![0u64; max_dim + 1];
                let mut cand = self.adjacency[lead as usize].clone();
                cand.clear_through(lead);
                self.count_by_depth(0, cand, max_dim, &mut counts);
                counts
            })
            .collect();
        let mut total = vec![0u64; max_dim + 1];
        for c in per_lead {
            for (t, x) in total.iter_mut().zip(c) {
                *t += x;
            }
        }
        while total.len() > 1 && *total.last().unwrap() == 0 {
            total.pop();
        }
        total
    }

    fn count_by_depth(&self, depth: usize, mut cand: VertexSet, max_dim: usize, counts: &mut [u64]) {
        counts[depth] += 1;
        if depth == max_dim {
            return;
        }
        while let Some(v) = cand.pop_first() {
            let mut next = cand.clone();
            next.intersect_with(&self.adjacency[v as usize]);
            self.count_by_depth(depth + 1, next, max_dim, counts);
        }
    }

    /// Every maximal simplex (maximal clique), each as a sorted vertex list,
    /// in lexicographic order.
    pub fn maximal_simplices(&self) -> Vec<Simplex> {
        let len = self.vertices.len();
        let mut out = Vec::new();
        let mut r = Vec::new();
        self.bron_kerbosch(&mut r, VertexSet::full(len), VertexSet::empty(len), &mut out);
        for s in out.iter_mut() {
            s.sort_unstable();
        }
        out.sort();
        out.into_iter().map(Simplex::from_sorted).collect()
    }

    fn bron_kerbosch(&self, r: &mut Vec<u32>, mut p: VertexSet, mut x: VertexSet, out: &mut Vec<Vec<u32>>) {
        if p.is_empty() {
            if x.is_empty() && !r.is_empty() {
                out.push(r.clone());
            }
            return;
        }
        // pivot: vertex of P ∪ X with most neighbours in P
        let mut pux = p.clone();
        pux.union_with(&x);
        let pivot = pux
            .iter()
            .max_by_key(|&u| p.intersection(&self.adjacency[u as usize]).count())
            .expect("nonempty");
        let mut branch = p.clone();
        branch.difference_with(&self.adjacency[pivot as usize]);
        for v in branch.iter().collect::<Vec<_>>() {
            let row = &self.adjacency[v as usize];
            r.push(v);
            self.bron_kerbosch(r, p.intersection(row), x.intersection(row), out);
            r.pop();
            p.remove(v);
            x.insert(v);
        }
    }

    /// Write the simplices of dimension `dim` in the plain-text facet format.
    pub fn export_simplices<W: io::Write>(&self, dim: usize, out: &mut W) -> io::Result<u64> {
        let m = self.ground.max_element().unwrap_or(0);
        writeln!(out, "# n={} m={} r={} dim={}", self.n, m, self.scale, dim)?;
        let mut count = 0u64;
        let mut line = String::new();
        let mut err = None;
        self.for_each_simplex(dim, |s| {
            if err.is_some() {
                return;
            }
            line.clear();
            for (i, v) in s.iter().enumerate() {
                if i > 0 {
                    line.push(' ');
                }
                let _ = write!(line, "{v}");
            }
            line.push('\n');
            if let Err(e) = out.write_all(line.as_bytes()) {
                err = Some(e);
            }
            count += 1;
        });
        match err {
            Some(e) => Err(e),
            None => Ok(count),
        }
    }
}

/// Parse the facet export format back into its header fields and simplices.
pub fn parse_simplex_export(text: &str) -> Result<(ExportHeader, Vec<Simplex>)> {
    let mut lines = text.lines();
    let header = lines.next().ok_or_else(|| crate::Error::InvalidInput("empty export".into()))?;
    let header = ExportHeader::parse(header)?;
    let mut simplices = Vec::new();
    for line in lines.filter(|l| !l.trim().is_empty()) {
        let verts = line
            .split_whitespace()
            .map(|t| {
                t.parse::<u32>()
                    .map_err(|e| crate::Error::InvalidInput(format!("bad ordinal {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if verts.len() != header.dim as usize + 1 {
            return invalid(format!("line {line:?} does not have dim {}", header.dim));
        }
        simplices.push(Simplex::new(verts)?);
    }
    Ok((header, simplices))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExportHeader {
    pub n: u32,
    pub m: u32,
    pub r: u32,
    pub dim: u32,
}

impl ExportHeader {
    fn parse(line: &str) -> Result<Self> {
        let body = line
            .strip_prefix("# ")
            .ok_or_else(|| crate::Error::InvalidInput(format!("bad header {line:?}")))?;
        let mut fields = [None; 4];
        for tok in body.split_whitespace() {
            let (k, v) = tok
                .split_once('=')
                .ok_or_else(|| crate::Error::InvalidInput(format!("bad header field {tok:?}")))?;
            let v: u32 = v
                .parse()
                .map_err(|_| crate::Error::InvalidInput(format!("bad header value {tok:?}")))?;
            let slot = match k {
                "n" => 0,
                "m" => 1,
                "r" => 2,
                "dim" => 3,
                _ => return invalid(format!("unknown header field {k:?}")),
            };
            fields[slot] = Some(v);
        }
        match fields {
            [Some(n), Some(m), Some(r), Some(dim)] => Ok(ExportHeader { n, m, r, dim }),
            _ => invalid(format!("incomplete header {line:?}")),
        }
    }
}

/// Flat storage for the simplices of one dimension, lexicographically sorted.
#[derive(Clone, Debug, Default)]
pub struct SimplexList {
    size: usize,
    data: Vec<u32>,
}

impl SimplexList {
    pub fn from_flat(size: usize, data: Vec<u32>) -> Self {
        debug_assert!(size > 0 && data.len().is_multiple_of(size));
        SimplexList { size, data }
    }

    pub fn dim(&self) -> usize {
        self.size - 1
    }

    pub fn len(&self) -> usize {
        self.data.len().checked_div(self.size).unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    #[inline]
    pub fn get(&self, i: usize) -> &[u32] {
        &self.data[i * self.size..(i + 1) * self.size]
    }

    pub fn iter(&self) -> std::slice::ChunksExact<'_, u32> {
        self.data.chunks_exact(self.size.max(1))
    }

    /// Ordinal of `s` within this list.
    pub fn position(&self, s: &[u32]) -> Option<usize> {
        let (mut lo, mut hi) = (0usize, self.len());
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.get(mid).cmp(s) {
                std::cmp::Ordering::Less => lo = mid + 1,
                std::cmp::Ordering::Greater => hi = mid,
                std::cmp::Ordering::Equal => return Some(mid),
            }
        }
        None
    }

    pub fn heap_bytes(&self) -> usize {
        self.data.capacity() * 4
    }
}

/// Lazy lexicographic clique stream.
pub struct SimplexIter<'a> {
    complex: &'a FlagComplex,
    size: usize,
    cur: Vec<u32>,
    cands: Vec<VertexSet>,
    started: bool,
}

impl<'a> SimplexIter<'a> {
    fn new(complex: &'a FlagComplex, size: usize) -> Self {
        SimplexIter {
            complex,
            size,
            cur: Vec::with_capacity(size),
            cands: Vec::with_capacity(size + 1),
            started: false,
        }
    }
}

impl Iterator for SimplexIter<'_> {
    type Item = Simplex;

    fn next(&mut self) -> Option<Simplex> {
        if self.size == 0 {
            return None;
        }
        if !self.started {
            self.started = true;
            self.cands.push(VertexSet::full(self.complex.vertex_count()));
        } else if self.cands.is_empty() {
            return None;
        } else {
            // resume after the clique we last emitted
            self.cur.pop();
        }
        loop {
            let depth = self.cur.len();
            let need = self.size - depth;
            let top = self.cands.last_mut()?;
            if top.count() < need {
                self.cands.pop();
                if self.cands.is_empty() {
                    return None;
                }
                self.cur.pop();
                continue;
            }
            let v = top.pop_first().expect("nonempty");
            let mut next = top.clone();
            next.intersect_with(&self.complex.adjacency[v as usize]);
            self.cur.push(v);
            if self.cur.len() == self.size {
                return Some(Simplex::from_sorted(self.cur.clone()));
            }
            self.cands.push(next);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binomial::binom_small;

    fn s(e: &[u32]) -> Subset {
        Subset::from_elements(e.iter().copied()).unwrap()
    }

    #[test]
    fn cross_polytope_complement_is_matching() {
        let k = FlagComplex::full(3, 6, 4).unwrap();
        assert_eq!(k.vertex_count(), 20);
        for i in 0..20u32 {
            let non: Vec<u32> = (0..20).filter(|&j| j != i && !k.adjacent(i, j)).collect();
            assert_eq!(non.len(), 1);
            let partner = k.vertex(non[0]);
            assert_eq!(partner, Subset::range(6).unwrap().difference(k.vertex(i)));
        }
    }

    #[test]
    fn octahedron_and_complete() {
        let oct = FlagComplex::full(2, 4, 2).unwrap();
        assert_eq!(oct.edge_count(), 12);
        assert_eq!(oct.count_simplices(2), 8);
        assert_eq!(oct.count_simplices(3), 0);
        let full = FlagComplex::full(3, 7, 6).unwrap();
        assert_eq!(full.edge_count(), 35 * 34 / 2);
    }

    #[test]
    fn cross_polytope_face_counts() {
        let k = FlagComplex::full(3, 6, 4).unwrap();
        let f = k.f_vector(12);
        assert_eq!(f.len(), 10);
        for (d, &c) in f.iter().enumerate() {
            let expect = binom_small(10, d as u64 + 1) * (1u128 << (d + 1));
            assert_eq!(u128::from(c), expect, "dim {d}");
        }
        assert_eq!(k.count_simplices(9), 1024);
        assert_eq!(FlagComplex::full(3, 7, 4).unwrap().count_simplices(0), 35);
    }

    #[test]
    fn iterator_matches_callback_order() {
        let k = FlagComplex::full(2, 5, 2).unwrap();
        for dim in 0..4 {
            let mut via_cb = Vec::new();
            k.for_each_simplex(dim, |c| via_cb.push(c.to_vec()));
            let via_iter: Vec<Vec<u32>> = k.simplices(dim).map(Simplex::into_vec).collect();
            assert_eq!(via_cb, via_iter, "dim {dim}");
            assert!(via_iter.windows(2).all(|w| w[0] < w[1]));
            let list = k.simplex_list(dim);
            assert_eq!(list.iter().map(|c| c.to_vec()).collect::<Vec<_>>(), via_iter);
        }
    }

    #[test]
    fn scale_quantization() {
        for (n, m) in [(2, 5), (3, 6), (3, 7)] {
            for r in (0..=2 * n).step_by(2) {
                let a = FlagComplex::full(n, m, r).unwrap();
                let b = FlagComplex::full(n, m, r + 1).unwrap();
                assert_eq!(a.adjacency(), b.adjacency());
            }
        }
    }

    #[test]
    fn maximality_examples() {
        let k = FlagComplex::full(3, 7, 4).unwrap();
        let star = Simplex::new((0..35).filter(|&i| k.vertex(i).contains(1)).collect()).unwrap();
        assert!(k.is_maximal_simplex(&star).unwrap());
        let five = Simplex::new(
            (0..35)
                .filter(|&i| k.vertex(i).is_subset_of(s(&[1, 2, 3, 4, 5])))
                .collect(),
        )
        .unwrap();
        assert!(k.is_maximal_simplex(&five).unwrap());
        assert!(!k.is_maximal_simplex(&Simplex::new(vec![0]).unwrap()).unwrap());
        let a = k.ordinal_of(s(&[1, 2, 3])).unwrap();
        let b = k.ordinal_of(s(&[4, 5, 6])).unwrap();
        assert!(k.is_maximal_simplex(&Simplex::new(vec![a, b]).unwrap()).is_err());
    }

    #[test]
    fn maximality_matches_brute_force() {
        let k = FlagComplex::full(2, 5, 2).unwrap();
        for dim in 0..4 {
            for sigma in k.simplices(dim) {
                let brute = !(0..k.vertex_count() as u32)
                    .filter(|v| !sigma.contains(v))
                    .any(|v| sigma.iter().all(|&u| k.adjacent(u, v)));
                assert_eq!(k.is_maximal_simplex(&sigma).unwrap(), brute);
            }
        }
    }

    #[test]
    fn maximal_cliques_of_octahedron() {
        let oct = FlagComplex::full(2, 4, 2).unwrap();
        let maxes = oct.maximal_simplices();
        assert_eq!(maxes.len(), 8);
        assert!(maxes.iter().all(|m| m.len() == 3));
    }

    #[test]
    fn hull_examples() {
        let k = FlagComplex::full(3, 9, 4).unwrap();
        let single = Simplex::new(vec![k.ordinal_of(s(&[2, 5, 8])).unwrap()]).unwrap();
        assert_eq!(k.convex_hull(&single).unwrap().vertex_count(), 1);
        let lines = [[1, 2, 3], [1, 4, 5], [1, 6, 7], [2, 4, 6], [2, 5, 7], [3, 4, 7], [3, 5, 6]];
        let fano = Simplex::new(lines.iter().map(|l| k.ordinal_of(s(l)).unwrap()).collect()).unwrap();
        let hull = k.convex_hull(&fano).unwrap();
        assert_eq!(hull.ground(), Subset::range(7).unwrap());
        assert_eq!(hull.vertex_count(), 35);
    }

    #[test]
    fn link_examples() {
        let cp = FlagComplex::full(3, 6, 4).unwrap();
        let (lk, parents) = cp.link(0).unwrap();
        assert_eq!(lk.vertex_count(), 18);
        assert_eq!(parents.len(), 18);
        for i in 0..18u32 {
            let non = (0..18).filter(|&j| j != i && !lk.adjacent(i, j)).count();
            assert_eq!(non, 1);
        }
        let complete = FlagComplex::full(3, 7, 6).unwrap();
        assert_eq!(complete.link(3).unwrap().0.edge_count(), 34 * 33 / 2);
        let isolated = FlagComplex::full(2, 4, 0).unwrap();
        assert_eq!(isolated.link(0).unwrap().0.vertex_count(), 0);
    }

    #[test]
    fn export_roundtrip() {
        let oct = FlagComplex::full(2, 4, 2).unwrap();
        let mut buf = Vec::new();
        assert_eq!(oct.export_simplices(2, &mut buf).unwrap(), 8);
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("# n=2 m=4 r=2 dim=2\n"));
        let (h, simplices) = parse_simplex_export(&text).unwrap();
        assert_eq!(h, ExportHeader { n: 2, m: 4, r: 2, dim: 2 });
        assert_eq!(simplices, oct.simplices(2).collect::<Vec<_>>());
    }
}
