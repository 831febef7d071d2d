//! One entry point per checkable statement, each producing a uniform
//! pass/fail record with a replayable counterexample.

use serde::Serialize;
use serde_json::{json, Value};

use crate::complex::{FlagComplex, Simplex};
use crate::designs::verify_max_pp;
use crate::error::{invalid, Error, Result};
use crate::generators::{cross_polytopal_cycle, fano_psi_extension, max_2n_facet};
use crate::homology::{betti_numbers, cycle_check, persistence_barcode, HomologyOptions};
use crate::maps::{
    compose_chain, removal_orders, verify_atomic_contraction, verify_contiguity, verify_distance_lemma,
    verify_lipschitz, verify_phi_m_m1, verify_phi_m_s_cases,
};
use crate::subset::{colex_subsets, Subset};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Lemma {
    Dist,
    MaxPp,
    Max2n,
    N3,
    Contraction,
    Lipschitz,
    Decomp,
    PhiMS,
    PhiMM1,
    Contiguity,
    PersistenceTrivial,
}

impl Lemma {
    pub const ALL: [Lemma; 11] = [
        Lemma::Dist,
        Lemma::MaxPp,
        Lemma::Max2n,
        Lemma::N3,
        Lemma::Contraction,
        Lemma::Lipschitz,
        Lemma::Decomp,
        Lemma::PhiMS,
        Lemma::PhiMM1,
        Lemma::Contiguity,
        Lemma::PersistenceTrivial,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Lemma::Dist => "dist",
            Lemma::MaxPp => "max-pp",
            Lemma::Max2n => "max-2n",
            Lemma::N3 => "n3",
            Lemma::Contraction => "contraction",
            Lemma::Lipschitz => "lipschitz",
            Lemma::Decomp => "decomp",
            Lemma::PhiMS => "phi-m-s",
            Lemma::PhiMM1 => "phi-m-m1",
            Lemma::Contiguity => "contiguity",
            Lemma::PersistenceTrivial => "persistence-trivial",
        }
    }
}

impl std::str::FromStr for Lemma {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Lemma::ALL
            .into_iter()
            .find(|l| l.id() == s)
            .ok_or_else(|| Error::InvalidInput(format!("unknown lemma {s:?}")))
    }
}

/// Instance parameters. Unset fields take per-lemma defaults.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VerifyParams {
    pub n: Option<u32>,
    pub m: Option<u32>,
    pub q: Option<u32>,
    pub c: Option<u32>,
    pub j: Option<u32>,
    pub l: Option<u32>,
    pub s: Option<Subset>,
    pub t: Option<Subset>,
    pub max_dim: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyOutcome {
    pub lemma: Lemma,
    pub params: Value,
    pub pass: bool,
    pub counterexample: Option<Value>,
    pub details: Value,
}

fn need(v: Option<u32>, default: u32) -> u32 {
    v.unwrap_or(default)
}

fn outcome(lemma: Lemma, params: Value, counterexample: Option<Value>, details: Value) -> VerifyOutcome {
    VerifyOutcome {
        lemma,
        params,
        pass: counterexample.is_none(),
        counterexample,
        details,
    }
}

/// Run one check. `opts` supplies the field and caps for any homology involved.
pub fn run(lemma: Lemma, p: &VerifyParams, opts: &HomologyOptions) -> Result<VerifyOutcome> {
    match lemma {
        Lemma::Dist => {
            let (n, m) = (need(p.n, 3), need(p.m, 7));
            let bad = verify_distance_lemma(m, n)?;
            Ok(outcome(
                lemma,
                json!({"n": n, "m": m}),
                bad.map(|(a, b, c)| json!({"a": a, "b": b, "c": c})),
                json!({"pairs_and_scales": "exhaustive"}),
            ))
        }
        Lemma::MaxPp => {
            let q = need(p.q, 2);
            let m = need(p.m, q * q + q + 1);
            let rep = verify_max_pp(q, m)?;
            let cx = (!rep.passed()).then(|| json!({"is_simplex": rep.is_simplex, "extension": rep.extension}));
            Ok(outcome(lemma, json!({"q": q, "m": m}), cx, to_json(&rep)))
        }
        Lemma::Max2n => {
            let n = need(p.n, 3);
            let m = need(p.m, 2 * n + 1);
            let k = FlagComplex::full(n, m, 2 * (n - 1))?;
            let mut checked = 0;
            let mut cx = None;
            for s in colex_subsets(Subset::range(m)?, 2 * n) {
                checked += 1;
                let facet = max_2n_facet(n, s)?;
                let sigma = Simplex::new(facet.iter().map(|&a| k.ordinal_of(a).expect("in [m]")).collect())?;
                let maximal = k.is_maximal_simplex(&sigma)?;
                let antipode_free = facet.iter().all(|&a| !facet.contains(&s.difference(a)));
                if !(maximal && antipode_free) {
                    cx = Some(json!({"s": s, "facet": facet, "maximal": maximal, "antipode_free": antipode_free}));
                    break;
                }
            }
            Ok(outcome(lemma, json!({"n": n, "m": m}), cx, json!({"subsets_checked": checked})))
        }
        Lemma::N3 => {
            let m = need(p.m, 7);
            let fano = verify_max_pp(2, m)?;
            let ambient = FlagComplex::full(3, m, 4)?;
            let mut cx = (!fano.passed()).then(|| json!({"fano_lines_not_maximal": fano.extension}));
            let mut checked = 0;
            for s in colex_subsets(Subset::range(7)?, 6) {
                if cx.is_some() {
                    break;
                }
                checked += 1;
                let ext = fano_psi_extension(s, m)?;
                let Some(cp) = ext.structure.as_ref() else {
                    cx = Some(json!({"s": s, "reason": "extension is not cross-polytopal"}));
                    break;
                };
                let local = betti_numbers(&ext.complex, 7, opts)?;
                let z = cross_polytopal_cycle(cp, opts.field).to_chain(1 << 10)?;
                // move the cycle into the ambient complex and check it there
                let mut moved = crate::homology::ChainVector::zero(z.dim());
                for (sigma, coeff) in z.iter() {
                    let verts: Vec<Subset> = sigma.iter().map(|&v| ext.complex.vertex(v)).collect();
                    // both complexes number vertices in colex order, so the
                    // relabelling preserves orientation
                    let ords = verts.iter().map(|&a| ambient.ordinal_of(a).expect("in [m]")).collect();
                    moved.add_term(Simplex::new(ords)?, coeff, opts.field);
                }
                let sigma_amb = Simplex::new(
                    ext.lines.iter().map(|&a| ambient.ordinal_of(a).expect("in [m]")).collect(),
                )?;
                let b6: Vec<u64> = (0..=7).map(|d| local.get(d)).collect();
                if b6 != [0, 0, 0, 0, 0, 0, 1, 0] {
                    cx = Some(json!({"s": s, "local_betti": b6}));
                } else if !cycle_check(&ambient, &moved, opts.field)? {
                    cx = Some(json!({"s": s, "reason": "not a cycle in the ambient complex"}));
                } else if moved.get(&sigma_amb) == 0 {
                    cx = Some(json!({"s": s, "reason": "line facet missing from the cycle"}));
                }
            }
            Ok(outcome(lemma, json!({"m": m}), cx, json!({"subsets_checked": checked, "degree": 6})))
        }
        Lemma::Contraction => {
            let (n, m) = (need(p.n, 3), need(p.m, 7));
            let mut maps = 0;
            let mut cx = None;
            'outer: for size in n + 1..=m {
                for src in colex_subsets(Subset::range(m)?, size) {
                    for x in src.elements() {
                        let mut tgt = src;
                        tgt.remove(x);
                        maps += 1;
                        let rep = verify_atomic_contraction(src, tgt, n)?;
                        if !rep.holds {
                            cx = Some(to_json(&rep));
                            break 'outer;
                        }
                    }
                }
            }
            Ok(outcome(lemma, json!({"n": n, "m": m}), cx, json!({"atomic_maps": maps})))
        }
        Lemma::Lipschitz => {
            let (n, m) = (need(p.n, 3), need(p.m, 7));
            let mut maps = 0;
            let mut cx = None;
            'outer: for size in n..=m {
                for s in colex_subsets(Subset::range(m)?, size) {
                    maps += 1;
                    let rep = verify_lipschitz(m, s, n)?;
                    if !rep.holds {
                        cx = Some(to_json(&rep));
                        break 'outer;
                    }
                }
            }
            Ok(outcome(lemma, json!({"n": n, "m": m}), cx, json!({"maps": maps})))
        }
        Lemma::Decomp => {
            let (n, m) = (need(p.n, 3), need(p.m, 7));
            let targets: Vec<Subset> = match p.s {
                Some(s) => vec![s],
                None => (n..=m)
                    .flat_map(|size| colex_subsets(Subset::range(m).expect("m <= 64"), size))
                    .collect(),
            };
            let mut cx = None;
            let mut orders_checked = 0;
            let mut order_dependent = Vec::new();
            for s in targets {
                for (i, order) in removal_orders(m, s, 24)?.into_iter().enumerate() {
                    orders_checked += 1;
                    let cmp = compose_chain(m, n, &order)?;
                    if cmp.equal {
                        continue;
                    }
                    if i == 0 {
                        // largest-first removal must agree
                        cx.get_or_insert(to_json(&cmp));
                    } else {
                        order_dependent.push(json!({
                            "s": s,
                            "order": order,
                            "mismatches": cmp.mismatches.len(),
                            "example": cmp.mismatches.first(),
                        }));
                    }
                }
            }
            Ok(outcome(
                lemma,
                json!({"n": n, "m": m, "s": p.s}),
                cx,
                json!({"orders_checked": orders_checked, "order_dependent": order_dependent}),
            ))
        }
        Lemma::PhiMS => {
            let (n, m) = (need(p.n, 3), need(p.m, 7));
            let l = p.l.unwrap_or_else(|| p.s.map_or(m - 1, Subset::len));
            let s = match p.s {
                Some(s) => s,
                None => Subset::range(l)?,
            };
            let ts: Vec<Subset> = match p.t {
                Some(t) => vec![t],
                None => colex_subsets(Subset::range(m)?, l).filter(|&t| t != s).collect(),
            };
            let mut reports = Vec::new();
            let mut cx = None;
            for t in ts {
                let rep = verify_phi_m_s_cases(m, s, t, n, opts)?;
                if !rep.pass && cx.is_none() {
                    cx = Some(to_json(&rep));
                }
                reports.push(rep);
            }
            Ok(outcome(
                lemma,
                json!({"n": n, "m": m, "s": s, "t": p.t}),
                cx,
                to_json(&reports),
            ))
        }
        Lemma::PhiMM1 => {
            let (n, m) = (need(p.n, 3), need(p.m, 8));
            let l = p.l.unwrap_or_else(|| p.s.map_or(n + 1, Subset::len));
            let ss: Vec<Subset> = match p.s {
                Some(s) => vec![s],
                None => {
                    if l < 2 || l > m {
                        return invalid(format!("ℓ = {l} out of range"));
                    }
                    let ends = Subset::from_elements([1, m])?;
                    colex_subsets(Subset::range(m - 1)?.difference(Subset::from_elements([1])?), l - 2)
                        .map(|mid| mid.union(ends))
                        .collect()
                }
            };
            let mut reports = Vec::new();
            let mut cx = None;
            for s in ss {
                let rep = verify_phi_m_m1(m, s, n, opts)?;
                if !rep.pass && cx.is_none() {
                    cx = Some(to_json(&rep));
                }
                reports.push(rep);
            }
            Ok(outcome(
                lemma,
                json!({"n": n, "m": m, "l": l}),
                cx,
                to_json(&reports),
            ))
        }
        Lemma::Contiguity => {
            let n = need(p.n, 3);
            let m = need(p.m, 2 * n);
            let c = need(p.c, n - 1);
            let js: Vec<u32> = p.j.map_or_else(|| (n..=m).collect(), |j| vec![j]);
            let mut reports = Vec::new();
            let mut cx = None;
            for j in js {
                let rep = verify_contiguity(m, n, c, j)?;
                if !rep.pass && cx.is_none() {
                    cx = Some(to_json(&rep));
                }
                reports.push(rep);
            }
            Ok(outcome(
                lemma,
                json!({"n": n, "m": m, "c": c, "j": p.j}),
                cx,
                to_json(&reports),
            ))
        }
        Lemma::PersistenceTrivial => {
            let n = need(p.n, 2);
            let m = need(p.m, 2 * n + 1);
            let ground = Subset::range(m)?;
            let max_dim = match p.max_dim {
                Some(d) => d,
                None => default_persistence_dim(n, ground)?,
            };
            let bc = persistence_barcode(n, ground, max_dim, opts)?;
            let long = bc
                .intervals
                .iter()
                .flat_map(|(&d, bars)| bars.iter().map(move |b| (d, *b)))
                .find(|(_, b)| b.length().is_none_or(|len| len > 2));
            Ok(outcome(
                lemma,
                json!({"n": n, "m": m, "max_dim": max_dim}),
                long.map(|(d, b)| json!({"dim": d, "interval": b})),
                to_json(&bc),
            ))
        }
    }
}

/// Largest dimension in which a class can be born before the last scale:
/// the top simplex dimension of `VR(F_n^S; 2(n-1))`.
pub fn default_persistence_dim(n: u32, ground: Subset) -> Result<usize> {
    let k = FlagComplex::build(n, ground, 2 * n.saturating_sub(1))?;
    Ok(k.f_vector(64).len().saturating_sub(1))
}

fn to_json<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}
