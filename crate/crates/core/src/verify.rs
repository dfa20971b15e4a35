//! Deterministic verification suites: exhaustive or seeded property checks
//! per module, each cross-validating a library computation against an
//! independent oracle.

use std::sync::Arc;

use rand::Rng;
use serde::Serialize;

use crate::construct;
use crate::equivalence::{self, EquivMode, Metric as EqMetric, RankEquivalence, Verdict};
use crate::error::Result;
use crate::gf::{Fe, Field};
use crate::linalg::{self, Subspace, Tag};
use crate::netsim::{self, Codebook};
use crate::puncture;
use crate::rankcore::{self, LinearCode};
use crate::schemes::{self, Metric, NestedCodePair};
use crate::weights::{self, Method, RelMethod};

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: bool,
    pub checks: Vec<Check>,
}

pub const SUITES: [&str; 8] = [
    "field",
    "linalg",
    "rankcore",
    "weights",
    "puncture",
    "equivalence",
    "schemes",
    "netsim",
];

fn check(name: &str, body: impl FnOnce() -> Result<(bool, String)>) -> Check {
    let (passed, detail) = match body() {
        Ok(x) => x,
        Err(e) => (false, format!("error: {e}")),
    };
    Check {
        name: name.into(),
        passed,
        detail,
    }
}

fn field(p: u32, e: u32, m: u32) -> Arc<Field> {
    Field::new(p, e, m).expect("valid built-in field")
}

/// `count` random codes with `q = 2`, `m` from `ms`, `n ≤ max_n`, `k ≤ max_k`.
pub fn corpus(seed: u64, count: usize, ms: &[u32], max_n: usize, max_k: usize) -> Vec<LinearCode> {
    let mut rng = crate::rng::seeded(seed);
    let fields: Vec<Arc<Field>> = ms.iter().map(|&m| field(2, 1, m)).collect();
    (0..count)
        .map(|_| {
            let f = &fields[rng.random_range(0..fields.len())];
            let n = rng.random_range(1..=max_n);
            let k = rng.random_range(1..=max_k.min(n));
            construct::random_code(f, n, k, &mut rng).expect("k ≤ n")
        })
        .collect()
}

fn describe(c: &LinearCode) -> String {
    format!("[n={}, k={}, m={}]", c.n(), c.k(), c.field().m())
}

/// The worked example `C = ⟨(1,α,0,0),(0,0,α,1)⟩` over `F_4`.
pub fn worked_example_code() -> LinearCode {
    let f = field(2, 1, 2);
    let a = Fe(2);
    LinearCode::new(
        f,
        4,
        &[
            vec![Fe::ONE, a, Fe::ZERO, Fe::ZERO],
            vec![Fe::ZERO, Fe::ZERO, a, Fe::ONE],
        ],
    )
    .expect("valid example")
}

pub fn worked_example(cap: u128) -> Check {
    check("worked example: d_R = [2, 4], dim C* = 4", || {
        let c = worked_example_code();
        let d = weights::grw_profile(&c, cap)?;
        let closure = c.rank_weight();
        Ok((
            d == vec![2, 4] && closure == 4,
            format!("d_R = {d:?}, dim C* = {closure}"),
        ))
    })
}

fn methods_agree(c: &LinearCode, cap: u128) -> Result<Option<String>> {
    let d1 = weights::grw(c, Method::Def1, cap)?.values;
    let d3 = weights::grw(c, Method::Def3, cap)?.values;
    let d5 = weights::grw(c, Method::Def5, cap)?.values;
    let mut extra = Vec::new();
    if c.n() <= c.field().m() {
        extra.push(weights::grw(c, Method::MaxMin, cap)?.values);
    }
    if c.n() <= 3 {
        extra.push(weights::grw(c, Method::Bases, cap)?.values);
    }
    if d1 != d3 || d1 != d5 || extra.iter().any(|x| *x != d1) {
        return Ok(Some(format!(
            "{}: def1 {d1:?}, def3 {d3:?}, def5 {d5:?}, others {extra:?}",
            describe(c)
        )));
    }
    Ok(None)
}

pub fn definition_agreement(seed: u64, cap: u128) -> Check {
    check("generalized rank weight definitions agree", || {
        let f = field(2, 1, 2);
        let mut codes: Vec<LinearCode> = linalg::all_subspaces(&f, 3, Tag::Ext, cap)?
            .into_iter()
            .filter(|s| s.dim() == 2)
            .map(|s| LinearCode::from_subspace(f.clone(), s))
            .collect();
        let exhaustive = codes.len();
        codes.extend(corpus(seed, 200, &[1, 2, 3], 5, 3));
        for c in &codes {
            if let Some(msg) = methods_agree(c, cap)? {
                return Ok((false, msg));
            }
        }
        let mut rng = crate::rng::seeded(seed ^ 0x5eed);
        for _ in 0..50 {
            let f = field(2, 1, rng.random_range(1..=3));
            let n = rng.random_range(2..=4);
            let k1 = rng.random_range(1..=n.min(3));
            let k2 = rng.random_range(0..k1);
            let p = construct::random_pair(&f, n, k1, k2, &mut rng)?;
            let r1 = weights::relative_grw(p.c1(), p.c2(), RelMethod::Def1r, cap)?.values;
            let r3 = weights::relative_grw(p.c1(), p.c2(), RelMethod::Def3r, cap)?.values;
            let r5 = weights::relative_grw(p.c1(), p.c2(), RelMethod::Def5r, cap)?.values;
            if r1 != r3 || r1 != r5 {
                return Ok((false, format!("pair n={n} k1={k1} k2={k2}: {r1:?} {r3:?} {r5:?}")));
            }
        }
        Ok((
            true,
            format!("{exhaustive} exhaustive + 200 random codes, 50 random pairs"),
        ))
    })
}

pub fn bases_theorem(cap: u128) -> Check {
    check("basis minimum of Hamming weight equals dim D*", || {
        let mut total = 0;
        for m in [2, 3] {
            let f = field(2, 1, m);
            for dim in [1, 2] {
                for d in linalg::enumerate_subspaces(&f, 3, dim, Tag::Ext, cap)? {
                    let got = weights::grw_via_bases(&f, &d, true, 0, cap, 0)?.value;
                    let want = rankcore::closure(&f, &d).dim();
                    if got != want {
                        return Ok((false, format!("m={m}, D={d:?}: basis minimum {got}, dim D* {want}")));
                    }
                    total += 1;
                }
            }
        }
        Ok((true, format!("{total} subspaces over F_4^3 and F_8^3, 168 bases each")))
    })
}

pub fn duality_theorem(seed: u64, cap: u128) -> Check {
    check("duality theorem partition", || {
        for c in corpus(seed, 100, &[2, 3], 5, 5) {
            let r = weights::duality_check(&c, cap)?;
            if !r.partition_holds || !r.characterization_holds {
                return Ok((false, format!("{}: {:?}", describe(&c), r.violations)));
            }
        }
        Ok((true, "100 random codes".into()))
    })
}

pub fn delsarte_and_characteristic(seed: u64, cap: u128) -> Check {
    check("Delsarte and characteristic identities", || {
        for c in corpus(seed, 100, &[2, 3], 5, 5) {
            let f = c.field();
            let (a, b) = rankcore::delsarte_check(&c);
            let ch = rankcore::characteristic_check(f, c.space());
            let g = rankcore::galois_characterize(&c, cap)?;
            if !(a && b && ch) {
                return Ok((
                    false,
                    format!("{}: delsarte ({a}, {b}), characteristic {ch}", describe(&c)),
                ));
            }
            if g.flags().iter().any(|&x| x != g.value()) {
                return Ok((false, format!("{}: Galois flags {:?}", describe(&c), g.flags())));
            }
        }
        Ok((true, "100 random codes".into()))
    })
}

pub fn galois_closed_flags(seed: u64, cap: u128) -> Check {
    check("Galois-closed constructions satisfy every characterization", || {
        let mut rng = crate::rng::seeded(seed);
        for m in [2, 3] {
            let f = field(2, 1, m);
            for n in 1..=4 {
                for k in 1..=n {
                    let c = construct::galois_closed_code(&f, n, k, &mut rng)?;
                    let g = rankcore::galois_characterize(&c, cap)?;
                    if !g.flags().iter().all(|&x| x) {
                        return Ok((false, format!("{}: {:?}", describe(&c), g.flags())));
                    }
                }
            }
        }
        Ok((true, "m ∈ {2, 3}, k ≤ n ≤ 4".into()))
    })
}

pub fn forney(seed: u64, cap: u128) -> Check {
    check("Forney triple equality for every L", || {
        let codes = corpus(seed, 10, &[2, 3], 4, 3);
        let mut count = 0;
        for c in &codes {
            for l in linalg::all_subspaces(c.field(), c.n(), Tag::Base, cap)? {
                puncture::forney_dims(c, &l)?;
                count += 1;
            }
        }
        Ok((true, format!("10 codes, {count} subspaces")))
    })
}

pub fn erasure_thresholds(cap: u128) -> Check {
    check("erasure thresholds and punctured distances", || {
        let codes = [
            worked_example_code(),
            construct::gabidulin(&field(2, 1, 3), 3, 1, None)?,
            construct::gabidulin(&field(2, 1, 4), 4, 2, None)?,
        ];
        for c in &codes {
            let words: Vec<Vec<Fe>> = c.codewords().collect();
            let d = weights::grw_profile(c, cap)?[0];
            for rho in 0..=c.n() {
                let r = puncture::erasure_thresholds(c.field(), &words, c.n(), rho, cap)?;
                let ok = r.d_r == d
                    && r.witness_confirmed
                    && if rho < d {
                        r.all_info_spaces && r.distance_bound_holds
                    } else {
                        true
                    };
                if !ok {
                    return Ok((false, format!("{} rho={rho}: {r:?}", describe(c))));
                }
            }
        }
        Ok((true, "3 codes, every ρ".into()))
    })
}

pub fn bound_suite(seed: u64, cap: u128) -> Check {
    check("bound suite holds; Gabidulin codes attain Singleton", || {
        let mut records = 0;
        let mut alternative = 0;
        for c in corpus(seed, 200, &[1, 2, 3], 5, 4) {
            let d = weights::grw_profile(&c, cap)?;
            for b in weights::bounds_report(&d, c.n(), c.field().q() as u64, c.field().m()) {
                if b.applicable && !b.holds {
                    return Ok((
                        false,
                        format!(
                            "{}: {} r={} {} {:?} {}",
                            describe(&c),
                            b.name,
                            b.r,
                            b.left,
                            b.relation,
                            b.right
                        ),
                    ));
                }
                records += 1;
                alternative += (b.name == "singleton_alternative" && b.applicable) as usize;
            }
        }
        let mut pairs = 0;
        let mut rng = crate::rng::seeded(seed ^ 0xb0);
        for _ in 0..50 {
            let f = field(2, 1, rng.random_range(1..=3));
            let n = rng.random_range(2..=4);
            let k1 = rng.random_range(1..=n.min(3));
            let k2 = rng.random_range(0..k1);
            let p = construct::random_pair(&f, n, k1, k2, &mut rng)?;
            let mv = weights::relative_grw(p.c1(), p.c2(), RelMethod::Def3r, cap)?.values;
            for b in weights::relative_bounds_report(&mv, n, k1, k2, f.m()) {
                if b.applicable && !b.holds {
                    return Ok((false, format!("pair n={n} k1={k1} k2={k2}: {} fails", b.name)));
                }
                pairs += 1;
            }
        }
        for m in 1..=4u32 {
            let f = field(2, 1, m);
            for n in 1..=m as usize {
                for k in 1..=n {
                    let c = construct::gabidulin(&f, n, k, None)?;
                    let d = weights::grw_profile(&c, cap)?;
                    let sharp = weights::bounds_report(&d, n, 2, m as usize)
                        .iter()
                        .any(|b| b.name == "singleton" && b.r == 1 && b.sharp);
                    if !sharp {
                        return Ok((false, format!("Gabidulin n={n} k={k} m={m}: d = {d:?}")));
                    }
                }
            }
        }
        Ok((
            true,
            format!("{records} records on 200 codes ({alternative} alternative-bound cases), {pairs} relative records"),
        ))
    })
}

pub fn mrd_classification(cap: u128) -> Check {
    check("MRD conditions agree", || {
        for m in 2..=4u32 {
            let f = field(2, 1, m);
            for n in 1..=m as usize {
                for k in 1..=n {
                    let c = construct::gabidulin(&f, n, k, None)?;
                    let r = weights::classify_mrd(&c, 1, cap)?;
                    if !r.is_r_mrd || r.bases_cross_check == Some(false) {
                        return Ok((false, format!("Gabidulin n={n} k={k} m={m}: {r:?}")));
                    }
                }
            }
        }
        let r = weights::classify_mrd(&worked_example_code(), 1, cap)?;
        Ok((!r.is_r_mrd, "Gabidulin codes are 1-MRD, the example is not".into()))
    })
}

pub fn field_axioms() -> Check {
    check("field axioms", || {
        for (p, e, m) in [(2, 1, 2), (2, 1, 3), (3, 1, 2), (2, 2, 2), (5, 1, 1), (2, 1, 4)] {
            let f = field(p, e, m);
            let els: Vec<Fe> = f.elements().collect();
            for &a in &els {
                if !a.is_zero() && f.mul(a, f.inv(a)?) != Fe::ONE {
                    return Ok((false, format!("inverse fails in ({p},{e},{m})")));
                }
                if f.frobenius(a, m as u64) != a || !f.in_subfield(f.trace(a)) {
                    return Ok((false, format!("Frobenius or trace fails in ({p},{e},{m})")));
                }
                if f.from_coords(&f.coords(a)) != a {
                    return Ok((false, format!("coordinates fail in ({p},{e},{m})")));
                }
                for &b in &els {
                    for &c in &els {
                        if f.mul(a, f.add(b, c)) != f.add(f.mul(a, b), f.mul(a, c)) {
                            return Ok((false, format!("distributivity fails in ({p},{e},{m})")));
                        }
                    }
                }
            }
        }
        Ok((true, "6 fields, all triples".into()))
    })
}

pub fn subspace_counts(cap: u128) -> Check {
    check("subspace enumeration matches Gaussian binomials", || {
        for (q, m, max_n) in [(2u64, 2u32, 4usize), (3, 1, 3)] {
            let f = field(q as u32, 1, m);
            for n in 0..=max_n {
                for r in 0..=n {
                    let got = linalg::enumerate_subspaces(&f, n, r, Tag::Base, cap)?.count() as u128;
                    let want = linalg::gaussian_binomial(n, r, q);
                    if got != want {
                        return Ok((false, format!("q={q} n={n} r={r}: {got} vs {want}")));
                    }
                }
            }
        }
        let gl = linalg::enumerate_bases(&field(2, 1, 1), 3, Tag::Base, cap)?.len();
        Ok((gl == 168, format!("|GL(3,2)| enumerated as {gl}")))
    })
}

pub fn rank_nullity(seed: u64) -> Check {
    check("rank-nullity and solving", || {
        let mut rng = crate::rng::seeded(seed);
        for _ in 0..200 {
            let f = field(2, 1, rng.random_range(1..=3));
            let rows = rng.random_range(1..=4);
            let cols = rng.random_range(1..=4);
            let a = linalg::random_matrix(&f, Tag::Ext, rows, cols, &mut rng);
            if a.rank(&f) + a.kernel(&f).len() != cols {
                return Ok((false, format!("{a:?}")));
            }
            let x = linalg::random_vector(&f, Tag::Ext, cols, &mut rng);
            let b: Vec<Fe> = (0..rows).map(|i| linalg::dot(&f, a.row(i), &x)).collect();
            let (sol, _) = a.solve(&f, &b)?;
            let back: Vec<Fe> = (0..rows).map(|i| linalg::dot(&f, a.row(i), &sol)).collect();
            if back != b {
                return Ok((false, "solution does not satisfy the system".into()));
            }
        }
        Ok((true, "200 random systems".into()))
    })
}

pub fn equivalence_maps(cap: u128) -> Check {
    check("exactly the β·A maps on F_4^2 preserve rank weights", || {
        let f = field(2, 1, 2);
        let full = Subspace::full(2, Tag::Ext);
        let mut rank = 0;
        let mut hamming = 0;
        let mut total = 0;
        for rows in linalg::enumerate_bases(&f, 2, Tag::Ext, cap)? {
            let m = linalg::Matrix::from_rows(2, &rows)?;
            let map = equivalence::LinearMap::new(m, full.clone())?;
            rank += equivalence::verify_equivalence(&f, &map, EqMetric::Rank, cap, 0)?.is_equivalence() as usize;
            hamming += equivalence::verify_equivalence(&f, &map, EqMetric::Hamming, cap, 0)?.is_equivalence() as usize;
            total += 1;
        }
        Ok((
            total == 180 && rank == 18 && hamming == 18,
            format!("{total} maps: {rank} rank, {hamming} Hamming equivalences"),
        ))
    })
}

pub fn equivalence_search(seed: u64, cap: u128) -> Check {
    check("equivalence search recovers random images", || {
        let mut rng = crate::rng::seeded(seed);
        for _ in 0..20 {
            let f = field(2, 1, rng.random_range(2..=3));
            let n = rng.random_range(2..=4);
            let k = rng.random_range(1..n);
            let c = construct::random_code(&f, n, k, &mut rng)?;
            let a = linalg::random_full_rank(&f, Tag::Base, n, n, &mut rng);
            let beta = loop {
                let b = linalg::random_scalar(&f, Tag::Ext, &mut rng);
                if !b.is_zero() {
                    break b;
                }
            };
            let eq = RankEquivalence::new(&f, beta, a, Subspace::full(n, Tag::Ext))?;
            let image = eq.apply_code(&c)?;
            match equivalence::codes_equivalent(&c, &image, &EquivMode::Search, cap)? {
                Verdict::Equivalent(w) if w.apply_code(&c)? == image => {}
                other => return Ok((false, format!("{}: {other:?}", describe(&c)))),
            }
            match equivalence::codes_equivalent(&c, &image, &EquivMode::Verify(Box::new(eq)), cap)? {
                Verdict::Equivalent(_) => {}
                other => return Ok((false, format!("witness rejected: {other:?}"))),
            }
        }
        Ok((true, "20 random codes".into()))
    })
}

/// The pair `⟨(1, α)⟩ ⊊ F_4^2`.
pub fn small_pair() -> NestedCodePair {
    let f = field(2, 1, 2);
    NestedCodePair::new(f.clone(), 2, &[vec![Fe::ONE, Fe(2)]], &[vec![Fe::ONE, Fe::ZERO]]).expect("valid pair")
}

pub fn leakage_oracle(seed: u64, cap: u128) -> Check {
    check("leakage equals mutual information for every L", || {
        let mut pairs = vec![small_pair()];
        let mut rng = crate::rng::seeded(seed);
        let f = field(2, 1, 2);
        while pairs.len() < 11 {
            let n = rng.random_range(2..=3);
            let k1 = rng.random_range(1..=n);
            let k2 = rng.random_range(0..k1);
            pairs.push(construct::random_pair(&f, n, k1, k2, &mut rng)?);
        }
        let mut count = 0;
        for p in &pairs {
            for l in linalg::all_subspaces(p.field(), p.n(), Tag::Base, cap)? {
                let leak = schemes::leakage(p, &l)?;
                let oracle = schemes::leakage_entropy_oracle(p, l.basis(), cap)?;
                if oracle != schemes::rational(leak) {
                    return Ok((
                        false,
                        format!("n={} k1={} k2={}: {leak} vs {oracle}", p.n(), p.k1(), p.k2()),
                    ));
                }
                count += 1;
            }
            for metric in [Metric::Rank, Metric::Hamming] {
                if !schemes::access_duality_check(p, metric, cap)? {
                    return Ok((false, format!("access duality fails ({metric:?})")));
                }
            }
        }
        let l = Subspace::coordinate(2, Tag::Base, &[0]);
        let first = schemes::leakage(&pairs[0], &l)?;
        let m1 = schemes::scheme_min_distance(&pairs[0], Metric::Rank, cap)?;
        Ok((
            first == 0 && m1 == 1,
            format!("11 pairs, {count} subspaces; small pair M_1 = {m1}, leakage of ⟨e_1⟩ = {first}"),
        ))
    })
}

pub fn mrd_profile(cap: u128) -> Check {
    check("Gabidulin pair leakage follows the MRD profile", || {
        let f = field(2, 1, 4);
        let p = construct::gabidulin_pair(&f, 3, 2, 1)?;
        for l in linalg::all_subspaces(&f, 3, Tag::Base, cap)? {
            let j = l.dim();
            let want = if j >= p.k1() { p.ell() } else { j.saturating_sub(p.k2()) };
            let got = schemes::leakage(&p, &l)?;
            if got != want {
                return Ok((false, format!("dim L = {j}: leakage {got}, formula {want}")));
            }
        }
        let prof = schemes::leakage_profile(&p, cap)?;
        Ok((
            prof.mrd_pair && prof.all_hold,
            format!("r1={:?}, r2={:?}", prof.r1, prof.r2),
        ))
    })
}

pub fn scheme_structure(seed: u64, cap: u128) -> Check {
    check("coset partition, minimum distance and message recovery", || {
        let mut rng = crate::rng::seeded(seed);
        let f = field(2, 1, 2);
        for _ in 0..10 {
            let n = rng.random_range(2..=3);
            let k1 = rng.random_range(1..=n);
            let k2 = rng.random_range(0..k1);
            let p = construct::random_pair(&f, n, k1, k2, &mut rng)?;
            if !schemes::partition_check(&p, cap)? {
                return Ok((false, "cosets do not partition C_1".into()));
            }
            schemes::scheme_min_distance(&p, Metric::Rank, cap)?;
            schemes::scheme_min_distance(&p, Metric::Hamming, cap)?;
            for l in linalg::all_subspaces(&f, n, Tag::Base, cap)? {
                let ctx = puncture::PunctureContext::new(&f, &l)?;
                let x = linalg::random_vector(&f, Tag::Ext, p.ell(), &mut rng);
                let c = p.encode(&x, &mut rng)?;
                let rec = schemes::recover_message(&p, &ctx, &ctx.project(&f, &c))?;
                if schemes::recovered_information(&p, &rec) != schemes::leakage(&p, &l)?
                    || !rec.kernel.contains(&f, &linalg::vec_sub(&f, &x, &rec.particular))
                {
                    return Ok((false, "recovered coset disagrees with leakage".into()));
                }
            }
        }
        Ok((true, "10 random pairs over F_4".into()))
    })
}

pub fn infallibility(seed: u64, cap: u128) -> Check {
    check(
        "decoders are infallible at t=1, ρ=1 and fail by construction at t=2",
        || {
            let f = field(2, 1, 4);
            let c = construct::gabidulin(&f, 4, 1, None)?;
            let d = weights::grw_profile(&c, cap)?[0];
            let book = Codebook::from_code(&c, cap)?;
            let rep = netsim::infallibility_experiment(&book, 1, 1, None, 1000, seed, cap)?;
            let converse = netsim::converse_witness(&book, 2, 0, cap)?;
            Ok((
                d == 4
                    && rep.d_r == 4
                    && rep.failures == 0
                    && rep.per_submatrix_agreement == rep.trials
                    && converse.verified,
                format!(
                    "d_R = {d}; {} trials, {} failures, {} submatrix decodings, agreement {}; converse verified {}",
                    rep.trials, rep.failures, rep.submatrix_decodings, rep.per_submatrix_agreement, converse.verified
                ),
            ))
        },
    )
}

pub fn erasures_as_errors(cap: u128) -> Check {
    check("errors with known support are recovered uniquely", || {
        let f4 = field(2, 1, 2);
        let codes = [
            LinearCode::new(f4, 2, &[vec![Fe::ONE, Fe(2)]])?,
            construct::gabidulin(&field(2, 1, 3), 3, 1, None)?,
        ];
        let mut count = 0;
        for c in &codes {
            let f = c.field();
            let d = weights::grw_profile(c, cap)?[0];
            let errors: Vec<Vec<Fe>> = Subspace::full(c.n(), Tag::Ext)
                .vectors(f)
                .filter(|e| rankcore::rank_weight(f, e) < d)
                .collect();
            for w in c.codewords() {
                for e in &errors {
                    let y = linalg::vec_add(f, &w, e);
                    let l = rankcore::rank_support(f, e);
                    if netsim::erasures_as_errors(c, &y, &l)? != w || !netsim::erasure_uniqueness(c, &y, &l, d, cap)? {
                        return Ok((false, format!("{}: failed on e = {e:?}", describe(c))));
                    }
                    count += 1;
                }
            }
        }
        Ok((true, format!("{count} (codeword, error) pairs on 2 codes")))
    })
}

pub fn discrepancy_oracle(seed: u64, cap: u128) -> Check {
    check("discrepancy equals the (z, D) minimization", || {
        let f = field(2, 1, 2);
        let mut rng = crate::rng::seeded(seed);
        for _ in 0..50 {
            let a = linalg::random_matrix(&f, Tag::Base, 2, 2, &mut rng);
            let c = linalg::random_vector(&f, Tag::Ext, 2, &mut rng);
            let y = linalg::random_vector(&f, Tag::Ext, 2, &mut rng);
            let closed = netsim::discrepancy(&f, &a, &c, &y);
            if netsim::discrepancy_brute(&f, &a, &c, &y, 2, cap)? != Some(closed) {
                return Ok((false, "closed form disagrees".into()));
            }
        }
        let f = field(2, 1, 3);
        for _ in 0..1000 {
            let e = netsim::random_error(&f, 3, 2, &mut rng)?;
            if rankcore::rank_weight(&f, &e) != 2 {
                return Ok((false, "random error of wrong rank weight".into()));
            }
        }
        Ok((true, "50 random instances, 1000 error draws".into()))
    })
}

pub fn run_suite(name: &str, seed: u64, cap: u128) -> Option<SuiteReport> {
    let s = |i: u64| crate::rng::derive(seed, i);
    let checks = match name {
        "field" => vec![field_axioms()],
        "linalg" => vec![subspace_counts(cap), rank_nullity(s(1))],
        "rankcore" => vec![delsarte_and_characteristic(s(2), cap), galois_closed_flags(s(3), cap)],
        "weights" => vec![
            worked_example(cap),
            definition_agreement(s(4), cap),
            bases_theorem(cap),
            duality_theorem(s(5), cap),
            bound_suite(s(6), cap),
            mrd_classification(cap),
        ],
        "puncture" => vec![forney(s(7), cap), erasure_thresholds(cap)],
        "equivalence" => vec![equivalence_maps(cap), equivalence_search(s(8), cap)],
        "schemes" => vec![
            leakage_oracle(s(9), cap),
            mrd_profile(cap),
            scheme_structure(s(10), cap),
        ],
        "netsim" => vec![
            infallibility(s(11), cap),
            erasures_as_errors(cap),
            discrepancy_oracle(s(12), cap),
        ],
        _ => return None,
    };
    Some(SuiteReport {
        suite: name.into(),
        passed: checks.iter().all(|c| c.passed),
        checks,
    })
}

/// Every suite, in a fixed order.
pub fn run_all(seed: u64, cap: u128) -> Vec<SuiteReport> {
    SUITES
        .iter()
        .map(|s| run_suite(s, seed, cap).expect("known suite"))
        .collect()
}
