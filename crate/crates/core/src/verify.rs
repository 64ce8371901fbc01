//! The verification suites behind `verify` and the acceptance tests.
//!
//! Each suite runs a group of exact or numeric checks and reports one
//! entry per check; ids are stable and sorted so reports diff cleanly.

use serde::Serialize;

use crate::bauer_muir::{
    accelerated_family, bm_check_relation, bm_iterate, bm_solve_r, bm_step, AcceleratedFamily,
};
use crate::error::{Error, Result};
use crate::family::{family, family_spec};
use crate::fixed::FixedFloat;
use crate::gcf::Gcf;
use crate::hurwitz::period_value;
use crate::multiplier::{
    catalog, decompose_period, divisibility_check, multiplier_cf, Sign,
};
use crate::parse::{parse_cf, parse_poly, parse_ratfunc};
use crate::period::{BasisConstant, RationalPeriod};
use crate::poly::PolyQ;
use crate::psi::{
    check_identity, psi_identities, psi_identity_cf, psi_identity_suite, psi_reference,
    psi_table, PsiOrder,
};
use crate::rat::Rat;
use crate::ratfunc::RatFunc;
use crate::transform::{equivalence_transform, euler_transform, partial_sums};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Exact,
    Numeric,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyEntry {
    pub id: String,
    pub kind: Kind,
    pub status: Status,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl VerifyEntry {
    fn exact(id: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        VerifyEntry {
            id: id.into(),
            kind: Kind::Exact,
            status: if ok { Status::Pass } else { Status::Fail },
            detail: detail.into(),
            error: None,
        }
    }

    fn numeric(
        id: impl Into<String>,
        ok: bool,
        detail: impl Into<String>,
        error: Option<String>,
    ) -> Self {
        VerifyEntry {
            id: id.into(),
            kind: Kind::Numeric,
            status: if ok { Status::Pass } else { Status::Fail },
            detail: detail.into(),
            error,
        }
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub entries: Vec<VerifyEntry>,
}

impl VerifyReport {
    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(VerifyEntry::passed)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Lemmas,
    Multiplier,
    Families,
    Psi,
    Bm,
    All,
}

impl std::str::FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "lemmas" => Suite::Lemmas,
            "multiplier" => Suite::Multiplier,
            "families" => Suite::Families,
            "psi" => Suite::Psi,
            "bm" => Suite::Bm,
            "all" => Suite::All,
            _ => return Err(Error::OutOfRange(format!("unknown suite {s:?}"))),
        })
    }
}

pub fn run_suite(suite: Suite, prec: u32, depth: u32) -> Result<VerifyReport> {
    let mut entries = Vec::new();
    if matches!(suite, Suite::Lemmas | Suite::All) {
        entries.extend(suite_lemmas()?);
    }
    if matches!(suite, Suite::Multiplier | Suite::All) {
        entries.extend(suite_multiplier()?);
    }
    if matches!(suite, Suite::Families | Suite::All) {
        entries.extend(suite_families(prec, depth)?);
    }
    if matches!(suite, Suite::Psi | Suite::All) {
        entries.extend(suite_psi(prec, depth)?);
    }
    if matches!(suite, Suite::Bm | Suite::All) {
        entries.extend(suite_bm(prec)?);
    }
    entries.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(VerifyReport { entries })
}

// ---- series transform checks ----

pub fn suite_lemmas() -> Result<Vec<VerifyEntry>> {
    let mut out = Vec::new();

    // Partial-sum exactness for the cubic-over-linear term and the pure
    // power terms, both signs, N <= 100.
    let mut cases: Vec<(String, RatFunc, Rat)> = vec![(
        "n^3/(n+1), z=1".into(),
        parse_ratfunc("n^3/(n+1)")?,
        Rat::one(),
    )];
    for k in 2..=6u32 {
        for z in [1i64, -1] {
            cases.push((
                format!("n^{k}, z={z}"),
                RatFunc::from_poly(PolyQ::monomial(Rat::one(), k as usize)),
                Rat::from_int(z),
            ));
        }
    }
    for (name, f, z) in cases {
        let cf = euler_transform(&f, &z)?;
        let sums = partial_sums(&f, &z, 100)?;
        let conv = cf.convergents(100);
        let ok = (0..=100).all(|n| conv[n].value() == Some(sums[n].clone()));
        out.push(VerifyEntry::exact(
            format!("c01/series-transform/{name}"),
            ok,
            "convergents equal partial sums exactly for N <= 100",
        ));
    }

    // Equivalence invariance: the worked scaled pair plus seeded random
    // (cf, r) pairs, ratios equal for n <= 50 and the rescale is the
    // cumulative product.
    let cf = parse_cf("[[0,(1/3)(2n-1)],[2,n^4]]")?;
    let r = RatFunc::constant(Rat::from_int(3));
    out.push(VerifyEntry::exact(
        "c02/equivalence/scaled-example",
        equivalence_ratios_match(&cf, &r, 50)?,
        "rescaling by 3 preserves every convergent ratio",
    ));
    let mut rng = Lcg::new(0x5eed);
    let mut done = 0;
    while done < 10 {
        let Some(cf) = random_cf(&mut rng) else {
            continue;
        };
        let r = random_multiplier(&mut rng);
        let ok = equivalence_ratios_match(&cf, &r, 50)?;
        out.push(VerifyEntry::exact(
            format!("c02/equivalence/random-{done:02}"),
            ok,
            format!("cf {cf}, r(n) = {r}"),
        ));
        done += 1;
    }
    Ok(out)
}

fn equivalence_ratios_match(cf: &Gcf, r: &RatFunc, n_max: u32) -> Result<bool> {
    let out = equivalence_transform(cf, r, &vec![r.eval_int(1)?; cf.start() as usize - 1])?;
    let before = cf.convergents(n_max);
    let after = out.convergents(n_max);
    let mut fac = Rat::one();
    for n in 0..=n_max as usize {
        if n > 0 {
            fac *= if n < cf.start() as usize {
                r.eval_int(1)?
            } else {
                r.eval_int(n as i64)?
            };
        }
        if after[n].value() != before[n].value() {
            return Ok(false);
        }
        if after[n].p != &fac * &before[n].p || after[n].q != &fac * &before[n].q {
            return Ok(false);
        }
    }
    Ok(true)
}

struct Lcg(u64);

impl Lcg {
    fn new(seed: u64) -> Self {
        Lcg(seed.max(1))
    }

    fn next(&mut self) -> u64 {
        // xorshift64
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }

    fn in_range(&mut self, lo: i64, hi: i64) -> i64 {
        lo + (self.next() % (hi - lo + 1) as u64) as i64
    }
}

fn random_cf(rng: &mut Lcg) -> Option<Gcf> {
    let deg_a = rng.in_range(0, 2) as usize;
    let deg_b = rng.in_range(1, 2) as usize;
    let poly = |rng: &mut Lcg, deg: usize| {
        let mut coeffs: Vec<Rat> = (0..=deg).map(|_| Rat::from_int(rng.in_range(-3, 3))).collect();
        let lead = rng.in_range(1, 3);
        coeffs[deg] = Rat::from_int(if rng.next() % 2 == 0 { lead } else { -lead });
        PolyQ::from_coeffs(coeffs)
    };
    let tail_a = poly(rng, deg_a);
    let tail_b = poly(rng, deg_b);
    let a0 = Rat::from_int(rng.in_range(-3, 3));
    let b0 = Rat::from_int(rng.in_range(1, 3));
    Gcf::simple(a0, b0, tail_a, tail_b).ok()
}

fn random_multiplier(rng: &mut Lcg) -> RatFunc {
    let deg = rng.in_range(1, 2) as usize;
    let coeffs: Vec<Rat> = (0..=deg).map(|_| Rat::from_int(rng.in_range(1, 3))).collect();
    RatFunc::from_poly(PolyQ::from_coeffs(coeffs))
}

// ---- multiplier method checks ----

/// P(1-x).
fn reflect(p: &PolyQ) -> PolyQ {
    let arg = PolyQ::from_ints(&[1, -1]);
    let mut acc = PolyQ::zero();
    for c in p.coeffs().iter().rev() {
        acc = &acc * &arg + PolyQ::constant(c.clone());
    }
    acc
}

pub fn suite_multiplier() -> Result<Vec<VerifyEntry>> {
    let mut out = Vec::new();
    for (sign, name) in [(Sign::Plus, "plus"), (Sign::Minus, "minus")] {
        for entry in catalog(sign) {
            let p_text = entry.p.to_text('x');
            let ks = entry.admissible.smallest(3);
            let div_ok = ks
                .iter()
                .all(|&k| divisibility_check(&entry.p, k, sign).is_some());
            out.push(VerifyEntry::exact(
                format!("c03/divisibility/{name}/{p_text}"),
                div_ok,
                format!("exact division at k in {ks:?}"),
            ));
            let d = entry.p.degree().unwrap_or(0);
            let sym = reflect(&entry.p)
                == if d % 2 == 0 {
                    entry.p.clone()
                } else {
                    -&entry.p
                };
            let boundary = entry.p.eval_int(0).pow(2) == entry.p.eval_int(1).pow(2);
            out.push(VerifyEntry::exact(
                format!("c03/symmetry/{name}/{p_text}"),
                sym && boundary,
                "P(1-x) = (-1)^deg P(x), hence P(0)^2 = P(1)^2",
            ));
            // Bidegree of R: equal to k for plus, k-1 for minus.
            let bidegree_ok = ks.iter().all(|&k| {
                divisibility_check(&entry.p, k, sign)
                    .and_then(|r| r.degree())
                    .map_or(false, |dr| match sign {
                        Sign::Plus => dr as u32 == k,
                        Sign::Minus => dr as u32 == k - 1,
                    })
            });
            out.push(VerifyEntry::exact(
                format!("c03/bidegree/{name}/{p_text}"),
                bidegree_ok,
                "deg R = k (plus) or k - 1 (minus)",
            ));
        }
    }

    // Telescoping decomposition of the simplest entry.
    let p = parse_poly("2x-1")?;
    let (period, telescoped, _) = decompose_period(&p, 2, Sign::Plus)?;
    let mut expect = RationalPeriod::one_times(Rat::from_int(2));
    expect.add_term(BasisConstant::Zeta(2), Rat::from_int(-1));
    out.push(VerifyEntry::exact(
        "c06/telescoping/2x-1-k2",
        telescoped && period == expect,
        "sum over 1/(n^2 (2n-1)(2n+1)) decomposes to 2 - zeta(2)",
    ));

    // The non-alternating decompositions never produce a 1/x term.
    let mut c1_ok = true;
    for entry in catalog(Sign::Plus) {
        for k in entry.admissible.smallest(3) {
            let d = crate::decompose::decompose_core(&entry.p, k)?;
            c1_ok &= d.c[0].is_zero();
        }
    }
    out.push(VerifyEntry::exact(
        "c06/no-divergent-term",
        c1_ok,
        "c_1 = 0 for every non-alternating catalog decomposition",
    ));
    Ok(out)
}

// ---- family checks ----

/// A printed family instance used as golden data. `route` explains how to
/// produce it from the generators.
pub struct WorkedExample {
    pub name: &'static str,
    pub lhs: RationalPeriod,
    pub cf_text: &'static str,
    pub route: ExampleRoute,
}

pub enum ExampleRoute {
    Family { id: u8, k: u32, negated: bool },
    /// The quartic catalog entry, pinned by an affine shift of the raw sum:
    /// value = a0 + b0 P(1)^2 S.
    Quartic,
}

pub fn worked_examples() -> Vec<WorkedExample> {
    use BasisConstant::*;
    let int = Rat::from_int;
    let period = |pairs: &[(BasisConstant, Rat)]| {
        let mut p = RationalPeriod::zero();
        for (c, v) in pairs {
            p.add_term(*c, v.clone());
        }
        p
    };
    let fam = |id, k, negated| ExampleRoute::Family { id, k, negated };
    vec![
        WorkedExample {
            name: "z4+4z2",
            lhs: period(&[(Zeta(4), int(1)), (Zeta(2), int(4))]),
            cf_text: "[[8,2n^4-4n^3+10n^2-8n+3],[-1,-n^8]]",
            route: fam(1, 2, false),
        },
        WorkedExample {
            name: "27z2-3z6-z8",
            lhs: period(&[(Zeta(2), int(27)), (Zeta(6), int(-3)), (Zeta(8), int(-1))]),
            cf_text: "[[81/2,2n^8-8n^7+46n^6-110n^5+178n^4-182n^3+118n^2-44n+7],[-1,-n^16]]",
            route: fam(2, 1, true),
        },
        WorkedExample {
            name: "z5+3z3",
            lhs: period(&[(Zeta(5), int(1)), (Zeta(3), int(3))]),
            cf_text: "[[9/2,2n^5-5n^4+22n^3-28n^2+23n-7],[1,-n^10]]",
            route: fam(3, 0, false),
        },
        WorkedExample {
            name: "4z3-z7",
            lhs: period(&[(Zeta(3), int(4)), (Zeta(7), int(-1))]),
            cf_text: "[[4,2n^7-7n^6+37n^5-75n^4+99n^3-77n^2+31n-5],[-1,-n^14]]",
            route: fam(4, 1, false),
        },
        WorkedExample {
            name: "z3-z5",
            lhs: period(&[(Zeta(3), int(1)), (Zeta(5), int(-1))]),
            cf_text: "[[1/2,2n^5-5n^4+22n^3-28n^2+15n-3],[-1,-n^10]]",
            route: fam(5, 0, true),
        },
        WorkedExample {
            name: "4z5+11z3",
            lhs: period(&[(Zeta(5), int(4)), (Zeta(3), int(11))]),
            cf_text: "[[273/16,2n^5-5n^4+42n^3-58n^2+45n-13],[4,-n^10]]",
            route: ExampleRoute::Quartic,
        },
        WorkedExample {
            name: "3z3+16log2",
            lhs: period(&[(Zeta(3), int(3)), (Log2, int(16))]),
            cf_text: "[[16,5n^2-5n+3],[-4,n^6]]",
            route: fam(6, 1, false),
        },
        WorkedExample {
            name: "15z5+48z3+256log2",
            lhs: period(&[(Zeta(5), int(15)), (Zeta(3), int(48)), (Log2, int(256))]),
            cf_text: "[[256,7n^4-14n^3+18n^2-11n+3],[-16,n^10]]",
            route: fam(6, 2, false),
        },
        WorkedExample {
            name: "64log2-15z5",
            lhs: period(&[(Log2, int(64)), (Zeta(5), int(-15))]),
            cf_text: "[[32,9n^4-18n^3+30n^2-21n+5],[-16,n^10]]",
            route: fam(7, 1, true),
        },
        WorkedExample {
            name: "127z8-124z6+64z2",
            lhs: period(&[(Zeta(8), int(127)), (Zeta(6), int(-124)), (Zeta(2), int(64))]),
            cf_text: "[[64,12n^7-42n^6+110n^5-170n^4+154n^3-82n^2+24n-3],[128,n^16]]",
            route: fam(8, 1, false),
        },
    ]
}

pub fn suite_families(prec: u32, depth: u32) -> Result<Vec<VerifyEntry>> {
    let mut out = Vec::new();

    // Coefficient-for-coefficient agreement with the worked examples.
    for ex in worked_examples() {
        let want_cf = parse_cf(ex.cf_text)?;
        let (got_lhs, got_cf) = match ex.route {
            ExampleRoute::Family { id, k, negated } => {
                let f = family(id, k)?;
                if negated {
                    (f.lhs.negate(), f.cf.negate())
                } else {
                    (f.lhs, f.cf)
                }
            }
            ExampleRoute::Quartic => {
                let p = parse_poly("5x^4-10x^3+19x^2-14x+4")?;
                let base = multiplier_cf(&p, 5, Sign::Plus)?;
                let (s_period, _, _) = decompose_period(&p, 5, Sign::Plus)?;
                // The printed form shares the tail; pin (a0, b0) and map
                // the sum through the affine relation.
                let a0 = Rat::new(273, 16);
                let b0 = Rat::from_int(4);
                let p1 = p.eval_int(1);
                let lhs = s_period
                    .scale(&(&b0 * &p1 * &p1))
                    .add(&RationalPeriod::one_times(a0.clone()));
                let cf = Gcf::simple(a0, b0, base.tail_a().clone(), base.tail_b().clone())?;
                (lhs, cf)
            }
        };
        out.push(VerifyEntry::exact(
            format!("c04/worked/{}", ex.name),
            got_cf == want_cf && got_lhs == ex.lhs,
            format!("{} = {}", got_lhs, ex.cf_text),
        ));
    }

    // Numeric consistency: fraction value vs period value for every
    // family and k <= 3.
    for id in 1..=8u8 {
        for k in 0..=3u32 {
            if id == 1 && k == 0 {
                continue;
            }
            let f = family(id, k)?;
            let (value, err_est) = f.cf.eval_numeric(depth, prec)?;
            let want = period_value(&f.lhs, prec);
            let diff = value.sub(&want).abs();
            let floor = FixedFloat::pow10_neg(4, prec);
            let dynamic = err_est.mul_rat(&Rat::from_int(100));
            let tol = if dynamic.cmp_value(&floor) == std::cmp::Ordering::Greater {
                dynamic
            } else {
                floor
            };
            let ok = diff.cmp_value(&tol) != std::cmp::Ordering::Greater;
            out.push(VerifyEntry::numeric(
                format!("c05/family-{id}-k{k}"),
                ok,
                format!("{}", f.lhs),
                Some(diff.to_scientific(3)),
            ));
        }
    }
    Ok(out)
}

// ---- psi checks ----

pub fn suite_psi(prec: u32, depth: u32) -> Result<Vec<VerifyEntry>> {
    let mut out = Vec::new();
    let prec = prec.max(30);
    let tol = FixedFloat::pow10_neg(25, prec);
    for (r, m) in [(1, 1), (1, 2), (1, 3), (2, 3), (1, 4), (3, 4), (1, 6), (5, 6)] {
        for (order, tag) in [(PsiOrder::First, "d1"), (PsiOrder::Second, "d2")] {
            let reference = psi_reference(r, m, order, prec);
            let table = period_value(&psi_table(r, m, order)?, prec);
            let diff = reference.sub(&table).abs();
            let ok = diff.cmp_value(&tol) != std::cmp::Ordering::Greater;
            out.push(VerifyEntry::numeric(
                format!("c07/table/{tag}/{r}-{m}"),
                ok,
                format!("closed form vs direct sum at {r}/{m}"),
                Some(diff.to_scientific(3)),
            ));
        }
    }

    for report in psi_identity_suite(prec, depth)? {
        out.push(VerifyEntry::numeric(
            format!("c08/identity/{}", report.identity),
            report.pass,
            format!("{} = {}", report.lhs_period, report.cf),
            Some(report.error.clone()),
        ));
    }
    // Negative control: a perturbed b(0) must fail.
    let ident = &psi_identities()[0];
    let good = psi_identity_cf(ident)?;
    let mut prefix = good.prefix().to_vec();
    prefix[0].1 = &prefix[0].1 + Rat::one();
    let bad = Gcf::new(prefix, good.tail_a().clone(), good.tail_b().clone())?;
    let control = check_identity("control", &bad, &ident.lhs, prec, depth)?;
    out.push(VerifyEntry::numeric(
        "c08/negative-control",
        !control.pass,
        "perturbed b(0) is flagged",
        Some(control.error),
    ));
    Ok(out)
}

// ---- acceleration checks ----

fn five_family_inputs() -> Vec<(AcceleratedFamily, &'static str)> {
    vec![
        (AcceleratedFamily::Log2, "[[0,1],[1,n^2]]"),
        (AcceleratedFamily::Zeta2, "[[0,2n^2-2n+1],[1,-n^4]]"),
        (AcceleratedFamily::Zeta2Alt, "[[0,2n-1],[2,n^4]]"),
        (AcceleratedFamily::Catalan, "[[0,8n^2-8n+3],[1/2,-16n^4]]"),
        (AcceleratedFamily::Zeta3, "[[0,(2n-1)(n^2-n+1)],[1,-n^6]]"),
    ]
}

pub fn suite_bm(prec: u32) -> Result<Vec<VerifyEntry>> {
    let mut out = Vec::new();

    // The convergent relation, exactly, for the two canonical
    // accelerators and every solver hit on the five families.
    let log2 = parse_cf("[[0,1],[1,n^2]]")?;
    out.push(VerifyEntry::exact(
        "c09/relation/log2-linear",
        bm_check_relation(&log2, &parse_poly("n-1")?, 50)?,
        "r = n - 1",
    ));
    let zeta2 = parse_cf("[[0,2n^2-2n+1],[1,-n^4]]")?;
    out.push(VerifyEntry::exact(
        "c09/relation/zeta2-quadratic",
        bm_check_relation(&zeta2, &parse_poly("-n^2+n-1/2")?, 50)?,
        "r = -n^2 + n - 1/2",
    ));
    for (fam, text) in five_family_inputs() {
        let cf = parse_cf(text)?;
        let bound = (cf.tail_a().degree().unwrap_or(0) as u32).max(3);
        let rs = bm_solve_r(&cf, bound);
        let ok = !rs.is_empty()
            && rs
                .iter()
                .map(|r| bm_check_relation(&cf, r, 50))
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .all(|b| b);
        out.push(VerifyEntry::exact(
            format!("c09/relation/solver/{fam:?}"),
            ok,
            format!("{} accelerator(s) found and checked", rs.len()),
        ));
    }

    // Printed iterate constants.
    let chains: Vec<(&str, &str, Vec<Rat>)> = vec![
        (
            "log2",
            "[[0,1],[1,n^2]]",
            ["1", "1/2", "5/6", "7/12"].iter().map(|s| s.parse().unwrap()).collect(),
        ),
        (
            "zeta2",
            "[[0,2n^2-2n+1],[1,-n^4]]",
            ["2", "3/2", "31/18", "115/72", "3019/1800", "973/600"]
                .iter()
                .map(|s| s.parse().unwrap())
                .collect(),
        ),
        (
            "catalan",
            "[[0,8n^2-8n+3],[1/2,-16n^4]]",
            ["1", "8/9", "209/225", "10016/11025"]
                .iter()
                .map(|s| s.parse().unwrap())
                .collect(),
        ),
        (
            "zeta3",
            "[[0,(2n-1)(n^2-n+1)],[1,-n^6]]",
            ["1", "9/8", "251/216"].iter().map(|s| s.parse().unwrap()).collect(),
        ),
    ];
    for (name, text, want) in chains {
        let cf = parse_cf(text)?;
        let steps = bm_iterate(&cf, want.len() as u32, None)?;
        let got: Vec<Rat> = steps.iter().map(|s| s.output.a(0)).collect();
        out.push(VerifyEntry::exact(
            format!("c10/iterates/{name}"),
            got == want,
            format!("a(0) chain {got:?}"),
        ));
    }

    // Iterates equal the closed forms for k <= 6.
    for (fam, text) in five_family_inputs() {
        let cf = parse_cf(text)?;
        let steps = bm_iterate(&cf, 6, None)?;
        let ok = accelerated_family(fam, 0)? == cf
            && steps.iter().enumerate().all(|(i, s)| {
                accelerated_family(fam, i as u32 + 1)
                    .map(|want| want == s.output)
                    .unwrap_or(false)
            });
        out.push(VerifyEntry::exact(
            format!("c10/closed-form/{fam:?}"),
            ok,
            "six iterates match the closed forms",
        ));
    }

    // Crossover of constant terms: the k-th a(0) of each zeta(2) form is
    // the k-th partial sum of the other form's series.
    let mut crossover = true;
    let mut alt_sum = Rat::zero();
    let mut plain_sum = Rat::zero();
    for k in 1..=20i64 {
        alt_sum += Rat::new(if k % 2 == 1 { 2 } else { -2 }, k * k);
        plain_sum += Rat::new(1, k * k);
        crossover &= accelerated_family(AcceleratedFamily::Zeta2, k as u32)?.a(0) == alt_sum;
        crossover &= accelerated_family(AcceleratedFamily::Zeta2Alt, k as u32)?.a(0) == plain_sum;
    }
    out.push(VerifyEntry::exact(
        "c10/crossover-partial-sums",
        crossover,
        "a(0) sequences are the partner series' partial sums, k <= 20",
    ));

    // Acceleration rates: exponent near 2k+1 for the log 2 chain.
    let prec = prec.max(40);
    let depths = [500u32, 1000, 2000, 4000];
    let mut last = 0.0f64;
    for k in 0..=2u32 {
        let cf = accelerated_family(AcceleratedFamily::Log2, k)?;
        let rate = cf.convergence_rate(&depths, prec)?;
        let e = rate.exponent.to_f64();
        let want = f64::from(2 * k + 1);
        let ok = (e - want).abs() <= 0.5 && e > last;
        out.push(VerifyEntry::numeric(
            format!("c11/rate/log2-k{k}"),
            ok,
            format!("measured exponent {e:.3}, nominal {want}"),
            None,
        ));
        last = e;
    }

    // Negative space: no tail-shape-preserving constant-d accelerator for
    // the plain zeta(4) fraction at degree bound 4.
    let zeta4 = parse_cf("[[0,n^4+(n-1)^4],[1,-n^8]]")?;
    let mut hits = Vec::new();
    for r in bm_solve_r(&zeta4, 4) {
        if let Ok(step) = bm_step(&zeta4, &r) {
            let o = &step.output;
            let same_b = o.tail_b() == zeta4.tail_b() || *o.tail_b() == -zeta4.tail_b();
            if same_b
                && o.tail_a().degree() == zeta4.tail_a().degree()
                && o.start() == 1
                && *o != zeta4
            {
                hits.push(r);
            }
        }
    }
    out.push(VerifyEntry::exact(
        "c12/zeta4-no-accelerator",
        hits.is_empty(),
        "expected-empty regression (evidence, not proof)",
    ));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_ids_unique() {
        let report = run_suite(Suite::Multiplier, 20, 100).unwrap();
        let mut ids: Vec<&String> = report.entries.iter().map(|e| &e.id).collect();
        let before = ids.len();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), before);
    }

    #[test]
    fn lemmas_suite_passes() {
        assert!(run_suite(Suite::Lemmas, 20, 100).unwrap().all_pass());
    }
}
