//! Brute-force reference for reduced Betti numbers of VR complexes on
//! n-subsets: explicit clique lists and dense Gaussian elimination mod p.
//! Shares nothing with the library beyond the inputs.

#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// One random instance `VR(F_n^S; scale)` with `S` given as 1-based elements.
#[derive(Clone, Debug)]
pub struct Instance {
    pub n: u32,
    pub ground: Vec<u32>,
    pub scale: u32,
}

pub struct OracleResult {
    pub faces: Vec<usize>,
    pub betti: Vec<u64>,
}

fn n_subsets(ground: &[u32], n: u32) -> Vec<u64> {
    let mut out = Vec::new();
    let m = ground.len();
    for mask in 0u32..(1 << m) {
        if mask.count_ones() == n {
            let bits = (0..m)
                .filter(|i| mask >> i & 1 == 1)
                .fold(0u64, |acc, i| acc | 1 << (ground[i] - 1));
            out.push(bits);
        }
    }
    out
}

/// All cliques of the distance-threshold graph, grouped by dimension.
pub fn cliques(inst: &Instance) -> Vec<Vec<Vec<usize>>> {
    let verts = n_subsets(&inst.ground, inst.n);
    let near = |a: usize, b: usize| (verts[a] ^ verts[b]).count_ones() <= inst.scale;
    let mut by_dim: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut stack: Vec<Vec<usize>> = (0..verts.len()).map(|v| vec![v]).collect();
    while let Some(c) = stack.pop() {
        let d = c.len() - 1;
        if by_dim.len() <= d {
            by_dim.resize(d + 1, Vec::new());
        }
        let last = *c.last().unwrap();
        for w in last + 1..verts.len() {
            if c.iter().all(|&u| near(u, w)) {
                let mut e = c.clone();
                e.push(w);
                stack.push(e);
            }
        }
        by_dim[d].push(c);
    }
    for list in &mut by_dim {
        list.sort();
    }
    by_dim
}

fn rank_mod_p(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows.len()).find(|&r| !rows[r][c].is_multiple_of(p)) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = pow_mod(rows[rank][c], p - 2, p);
        for x in rows[rank].iter_mut() {
            *x = *x * inv % p;
        }
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[c] != 0 {
                let f = row[c];
                for (x, &y) in row.iter_mut().zip(&pivot) {
                    *x = (*x + p * p - f * y % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// Reduced Betti numbers over GF(p) from dense boundary matrices.
pub fn reduced_betti(inst: &Instance, p: u64) -> OracleResult {
    let faces = cliques(inst);
    let f: Vec<usize> = faces.iter().map(Vec::len).collect();
    // rank[d] = rank of the boundary from dimension d to d-1; the augmentation
    // map gives rank 1 in degree 0 for a nonempty complex
    let mut rank = vec![0usize; f.len() + 1];
    if !f.is_empty() && f[0] > 0 {
        rank[0] = 1;
    }
    for d in 1..faces.len() {
        let rows: Vec<Vec<u64>> = faces[d]
            .iter()
            .map(|s| {
                let mut row = vec![0u64; faces[d - 1].len()];
                for i in 0..s.len() {
                    let mut face = s.clone();
                    face.remove(i);
                    let j = faces[d - 1].binary_search(&face).unwrap();
                    row[j] = if i % 2 == 0 { 1 } else { p - 1 };
                }
                row
            })
            .collect();
        rank[d] = rank_mod_p(rows, p);
    }
    let betti = (0..f.len()).map(|d| (f[d] - rank[d] - rank[d + 1]) as u64).collect();
    OracleResult { faces: f, betti }
}

/// Random instances with at most `max_faces` simplices in total.
pub fn random_instances(rng: &mut ChaCha8Rng, count: usize, max_faces: usize) -> Vec<Instance> {
    let mut out = Vec::new();
    while out.len() < count {
        let n = rng.gen_range(2..=3);
        let m = rng.gen_range(n + 1..=6) as usize;
        let mut pool: Vec<u32> = (1..=10).collect();
        pool.shuffle(rng);
        let mut ground = pool[..m].to_vec();
        ground.sort_unstable();
        let scale = 2 * rng.gen_range(0..=n);
        let inst = Instance { n, ground, scale };
        let total: usize = cliques(&inst).iter().map(Vec::len).sum();
        if total <= max_faces {
            out.push(inst);
        }
    }
    out
}
