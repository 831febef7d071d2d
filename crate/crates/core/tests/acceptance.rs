//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any result differs from what is expected, including the
//! known mismatch between the connectivity theorem and its printed table.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use kneser_core::bounds::{bigdim_bound, connectivity_bound, kg3_smalldim_table, smalldim_bound};
use kneser_core::designs::{fano_plane, verify_max_pp};
use kneser_core::generators::{build_certificate, fano_psi_extension, CertificateOptions};
use kneser_core::maps::{compose_chain, removal_orders, verify_atomic_contraction, verify_contiguity};
use kneser_core::subset::colex_subsets;
use kneser_core::{
    betti_numbers, persistence_barcode, FlagComplex, HomologyOptions, PrimeField, Subset,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Reference values as printed: lower bounds on the top-degree rank,
/// rows n = 3..=10, columns k = 1..=5.
const TABLE2: [[u128; 5]; 8] = [
    [7, 28, 84, 210, 462],
    [9, 45, 165, 495, 1287],
    [11, 66, 286, 1001, 3003],
    [13, 91, 455, 1820, 6188],
    [15, 120, 680, 3060, 11628],
    [17, 153, 969, 4845, 20349],
    [19, 190, 1330, 7315, 33649],
    [21, 231, 1771, 10626, 53130],
];

/// Printed connectivity bounds, rows n = 4..=10, columns k = 1..=5.
const TABLE4: [[i128; 5]; 7] = [
    [11, 5, 3, 2, 1],
    [37, 17, 9, 6, 4],
    [121, 52, 28, 17, 11],
    [400, 157, 79, 46, 30],
    [1349, 484, 227, 125, 77],
    [4617, 1525, 666, 346, 202],
    [16031, 4897, 1998, 978, 542],
];

/// Cells of the printed connectivity table that sit one below the theorem.
const TABLE4_OFF_BY_ONE: [(u32, u32); 14] = [
    (5, 3),
    (6, 4),
    (6, 5),
    (7, 1),
    (7, 3),
    (7, 4),
    (8, 2),
    (8, 3),
    (8, 4),
    (8, 5),
    (9, 3),
    (9, 5),
    (10, 3),
    (10, 5),
];

struct Outcome {
    pass: bool,
    /// Whether the result is the one this build is expected to produce.
    expected: bool,
    detail: String,
}

impl Outcome {
    fn plain(pass: bool, detail: String) -> Self {
        Outcome { pass, expected: pass, detail }
    }
}

fn gf2() -> HomologyOptions {
    HomologyOptions::with_field(PrimeField::GF2)
}

fn kneser_betti(n: u32, k: u32) -> (Vec<u64>, Duration) {
    let t = Instant::now();
    let c = FlagComplex::kneser_independence(n, k).unwrap();
    let top = (0..).take_while(|&d| c.count_simplices(d) > 0).last().unwrap();
    let r = betti_numbers(&c, top, &gf2()).unwrap();
    ((0..=top).map(|d| r.get(d)).collect(), t.elapsed())
}

fn kg30() -> &'static (Vec<u64>, Duration) {
    static V: OnceLock<(Vec<u64>, Duration)> = OnceLock::new();
    V.get_or_init(|| kneser_betti(3, 0))
}

fn kg31() -> &'static (Vec<u64>, Duration) {
    static V: OnceLock<(Vec<u64>, Duration)> = OnceLock::new();
    V.get_or_init(|| kneser_betti(3, 1))
}

fn nonzero(b: &[u64]) -> Vec<(usize, u64)> {
    b.iter().enumerate().filter(|(_, &v)| v > 0).map(|(d, &v)| (d, v)).collect()
}

fn criterion_1() -> Outcome {
    let (b0, t0) = kg30();
    let (b1, t1) = kg31();
    let ok0 = nonzero(b0) == [(9, 1)] && *t0 < Duration::from_secs(5);
    let ok1 = nonzero(b1) == [(6, 29), (9, 7)] && *t1 < Duration::from_secs(30 * 60);
    Outcome::plain(
        ok0 && ok1,
        format!(
            "KG(3,0) nonzero {:?} in {:.1?}; KG(3,1) nonzero {:?} in {:.1?}",
            nonzero(b0),
            t0,
            nonzero(b1),
            t1
        ),
    )
}

fn criterion_2() -> Outcome {
    let mut got = Vec::new();
    let mut ok = true;
    for k in 0..=3u32 {
        let (b, _) = kneser_betti(2, k);
        let want = u64::from((k + 1) * (k + 2) * (k + 3) / 6);
        ok &= nonzero(&b) == [(2, want)];
        got.push(b.get(2).copied().unwrap_or(0));
    }
    Outcome::plain(ok, format!("b_2(Ind(KG(2,k))) for k=0..3: {got:?}, expected [1, 4, 10, 20]"))
}

fn criterion_3() -> Outcome {
    let mut bad = Vec::new();
    for (i, row) in TABLE2.iter().enumerate() {
        for (j, &want) in row.iter().enumerate() {
            let (n, k) = (i as u32 + 3, j as u32 + 1);
            if bigdim_bound(n, k).unwrap() != want {
                bad.push((n, k));
            }
        }
    }
    let b30 = kg30().0[9];
    let b31 = kg31().0[9];
    let attained = bigdim_bound(3, 0).unwrap() == 1 && b30 == 1 && bigdim_bound(3, 1).unwrap() == 7 && b31 == 7;
    Outcome::plain(
        bad.is_empty() && attained,
        format!("40 cells, mismatches {bad:?}; bound attained at (3,0): b_9={b30}, (3,1): b_9={b31}"),
    )
}

fn criterion_4() -> Outcome {
    let mut parts = Vec::new();
    let mut ok = true;
    for m in 6..=9 {
        let t = Instant::now();
        let res = build_certificate(3, m, PrimeField::GF2, &CertificateOptions::default());
        let el = t.elapsed();
        match res {
            Ok(c) => {
                let identity = c.entries.iter().enumerate().all(|(i, e)| {
                    e.pairing_row.iter().enumerate().all(|(j, &v)| (v == 1) == (i == j) && (v <= 1))
                });
                let maximal = c.entries.iter().all(|e| e.facet_maximal);
                let cycles = c.entries.iter().all(|e| e.cycle_ok && e.cycle_evidence == "exhaustive");
                let this = c.valid && identity && maximal && cycles && el < Duration::from_secs(60);
                ok &= this;
                parts.push(format!("m={m}: {} entries {}", c.entries.len(), if this { "ok" } else { "BAD" }));
            }
            Err(e) => {
                ok = false;
                parts.push(format!("m={m}: {e}"));
            }
        }
    }
    Outcome::plain(ok, parts.join(", "))
}

fn criterion_5() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for m in 7..=9 {
        let r = verify_max_pp(2, m).unwrap();
        ok &= r.passed();
        parts.push(format!("max_pp m={m} {}", r.passed()));
    }
    let mut cross = 0;
    for s in colex_subsets(Subset::range(7).unwrap(), 6) {
        let ext = fano_psi_extension(s, 7).unwrap();
        let b = betti_numbers(&ext.complex, 7, &gf2()).unwrap();
        let b: Vec<u64> = (0..=7).map(|d| b.get(d)).collect();
        if ext.complex.vertex_count() == 14 && ext.structure.is_some() && nonzero(&b) == [(6, 1)] {
            cross += 1;
        }
    }
    ok &= cross == 7;
    parts.push(format!("psi extensions cross-polytopal with b_6=1: {cross}/7"));

    let fano = fano_plane();
    let lines: BTreeSet<u64> = fano.lines().iter().map(|l| l.bits()).collect();
    let mut blocking = 0;
    let mut non_line = 0;
    for t in colex_subsets(Subset::range(7).unwrap(), 3) {
        let meets = fano.lines().iter().all(|l| !l.intersection(t).is_empty());
        if meets {
            blocking += 1;
            non_line += usize::from(!lines.contains(&t.bits()));
        }
    }
    ok &= blocking == 7 && non_line == 0;
    parts.push(format!("triples meeting every line: {blocking}, of which non-lines: {non_line}"));
    Outcome::plain(ok, parts.join("; "))
}

fn criterion_6() -> Outcome {
    let n = 3;
    let mut atomic = 0;
    let mut atomic_bad = 0;
    let mut chains = 0;
    let mut chain_bad = 0;
    for m in n + 1..=7 {
        for size in n + 1..=m {
            for src in colex_subsets(Subset::range(m).unwrap(), size) {
                for x in src.elements() {
                    let mut tgt = src;
                    tgt.remove(x);
                    atomic += 1;
                    let r = verify_atomic_contraction(src, tgt, n).unwrap();
                    atomic_bad += usize::from(!r.holds);
                }
            }
        }
    }
    for m in n..=7 {
        for size in n..=m {
            for s in colex_subsets(Subset::range(m).unwrap(), size) {
                // the first order removes the largest elements first
                let order = removal_orders(m, s, 1).unwrap().remove(0);
                chains += 1;
                chain_bad += usize::from(!compose_chain(m, n, &order).unwrap().equal);
            }
        }
    }
    let mut contiguity = Vec::new();
    let mut contiguity_ok = true;
    for (m, n, c) in [(5, 2, 1), (6, 3, 2)] {
        let js: Vec<u32> = (n..=m).collect();
        let pass = js.iter().all(|&j| verify_contiguity(m, n, c, j).unwrap().pass);
        contiguity_ok &= pass;
        contiguity.push(format!("(m={m},n={n},c={c}) j={}..={}: {pass}", n, m));
    }
    Outcome::plain(
        atomic_bad == 0 && chain_bad == 0 && contiguity_ok,
        format!(
            "atomic maps {atomic} ({atomic_bad} bad), suffix chains {chains} ({chain_bad} bad), contiguity {}",
            contiguity.join(", ")
        ),
    )
}

fn criterion_7() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for (n, m) in [(2, 5), (3, 6)] {
        let t = Instant::now();
        let ground = Subset::range(m).unwrap();
        let top = kneser_core::verify::default_persistence_dim(n, ground).unwrap();
        let bc = persistence_barcode(n, ground, top, &gf2()).unwrap();
        let longest = bc.longest_finite_bar().unwrap_or(0);
        let this = longest <= 2 && !bc.has_infinite_bar() && t.elapsed() < Duration::from_secs(60);
        ok &= this;
        let bars: usize = bc.intervals.values().map(Vec::len).sum();
        parts.push(format!(
            "(n={n},m={m}) {bars} bars, longest {longest}, infinite {}",
            bc.has_infinite_bar()
        ));
    }
    Outcome::plain(ok, parts.join("; "))
}

fn criterion_8() -> Outcome {
    let mut mismatches = Vec::new();
    for (i, row) in TABLE4.iter().enumerate() {
        for (j, &printed) in row.iter().enumerate() {
            let (n, k) = (i as u32 + 4, j as u32 + 1);
            let conn = connectivity_bound(n, k).unwrap().conn;
            if conn != printed {
                mismatches.push((n, k, conn, printed));
            }
        }
    }
    let cells: Vec<(u32, u32)> = mismatches.iter().map(|&(n, k, _, _)| (n, k)).collect();
    let all_one_below = mismatches.iter().all(|&(_, _, c, p)| p == c - 1);

    let conn = connectivity_bound(3, 1).unwrap().conn;
    let b = &kg31().0;
    let vanish = (0..=conn as usize).all(|d| b[d] == 0);

    let pass = mismatches.is_empty() && vanish;
    let expected = cells == TABLE4_OFF_BY_ONE && all_one_below && vanish;
    let listed: Vec<String> = mismatches
        .iter()
        .map(|(n, k, c, p)| format!("({n},{k}) theorem {c} printed {p}"))
        .collect();
    Outcome {
        pass,
        expected,
        detail: format!(
            "{} of 35 cells match; mismatches: {}; KG(3,1) conn bound {conn}, b_0..b_{conn} vanish: {vanish}",
            35 - mismatches.len(),
            listed.join(", ")
        ),
    }
}

fn criterion_9() -> Outcome {
    let t = kg3_smalldim_table(&[1, 2, 3, 4, 5]).unwrap();
    let mut ok = true;
    let mut flagged = Vec::new();
    for (i, k) in (1..=5u32).enumerate() {
        ok &= t.get(1, i + 1).and_then(|v| v.as_u64()) == Some(bigdim_bound(3, k).unwrap() as u64);
        let cell = t
            .cells
            .iter()
            .find(|c| c["k"] == k && c["degree"] == 6)
            .expect("degree-6 cell");
        let formula = smalldim_bound(7, 29, 6 + k).unwrap() as u64;
        ok &= cell["formula"].as_u64() == Some(formula);
        let flag = cell["paper_discrepancy"] == true;
        if k <= 3 {
            ok &= !flag && t.get(0, i + 1).and_then(|v| v.as_u64()) == Some(formula);
        } else {
            ok &= flag && cell["published"].as_u64().is_some();
            flagged.push(format!("k={k} formula {} printed {}", cell["formula"], cell["published"]));
        }
    }
    Outcome::plain(ok, format!("9th-dim and 6th-dim rows regenerated; flagged {}", flagged.join(", ")))
}

fn criterion_10() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let instances = common::random_instances(&mut rng, 100, 500);
    let mut bad = Vec::new();
    for inst in &instances {
        let ground = Subset::from_elements(inst.ground.iter().copied()).unwrap();
        let k = FlagComplex::build(inst.n, ground, inst.scale).unwrap();
        for (p, field) in [(2, PrimeField::GF2), (3, PrimeField::GF3)] {
            let want = common::reduced_betti(inst, p).betti;
            let top = want.len().saturating_sub(1);
            let r = betti_numbers(&k, top, &HomologyOptions::with_field(field)).unwrap();
            let got: Vec<u64> = (0..=top).map(|d| r.get(d)).collect();
            if got != want {
                bad.push(format!("{inst:?} GF({p})"));
            }
        }
    }
    Outcome::plain(
        bad.is_empty(),
        format!("{} random instances x 2 fields, mismatches: {bad:?}", instances.len()),
    )
}

fn main() {
    let criteria: [(u32, fn() -> Outcome); 10] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
        (10, criterion_10),
    ];
    let mut unexpected = 0;
    for (id, f) in criteria {
        let o = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Outcome::plain(false, format!("panicked: {msg}"))
        });
        let tag = if o.pass { "PASS" } else { "FAIL" };
        let note = if o.expected { "" } else { " [unexpected]" };
        println!("criterion {id}: {tag}{note} - {}", o.detail);
        unexpected += usize::from(!o.expected);
    }
    if unexpected > 0 {
        eprintln!("{unexpected} criteria did not produce the expected result");
        std::process::exit(1);
    }
}
