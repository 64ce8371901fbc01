//! Bauer-Muir acceleration.
//!
//! Given a fraction with entries (a(n), b(n)) and an accelerating sequence
//! r(n), set R(n) = a(n) + r(n) and d(n) = r(n) R(n+1) - b(n). Provided
//! R(1) != 0 and d(n) != 0 for all n >= 1, the transformed fraction
//!
//! ```text
//! A(0) = a(0) + b(0)/R(1)          B(0) = b(0) d(1) / R(1)^2
//! A(1) = (a(1) R(2) + b(1))/R(1)
//! A(n) = R(n+1) - r(n-1) d(n)/d(n-1)   (n >= 2)
//! B(n) = b(n) d(n+1)/d(n)              (n >= 1)
//! ```
//!
//! has convergents (P(n), Q(n)) = (p(n+1), q(n+1)) + r(n+1) (p(n), q(n))
//! for n >= 2, so its value is unchanged. When d(n) is constant the new
//! entries are again polynomial and the step can be iterated; otherwise an
//! equivalence rescale by d(n-1) clears the denominators.

use std::collections::BTreeSet;

use num::integer::Roots;
use num::{BigInt, Signed, Zero};

use crate::bernoulli::binomial;
use crate::error::{Error, Result};
use crate::gcf::{Gcf, ZERO_CHECK_HORIZON};
use crate::poly::PolyQ;
use crate::rat::Rat;

/// One acceleration step: the accelerator, d over the tail region, and the
/// input/output fractions.
#[derive(Clone, Debug)]
pub struct BmStep {
    pub r: PolyQ,
    pub d: PolyQ,
    pub input: Gcf,
    pub output: Gcf,
    /// True when d is not constant and the output was rescaled by d(n-1)
    /// to clear denominators.
    pub cleared: bool,
}

/// d(n) = r(n) (A(n+1) + r(n+1)) - B(n) over the tail polynomials.
pub fn d_polynomial(cf: &Gcf, r: &PolyQ) -> PolyQ {
    let one = Rat::one();
    r * (cf.tail_a().shift(&one) + r.shift(&one)) - cf.tail_b()
}

fn d_pointwise(cf: &Gcf, r: &PolyQ, n: u32) -> Rat {
    let rn = r.eval_int(i64::from(n));
    let rn1 = r.eval_int(i64::from(n) + 1);
    rn * (cf.a(n + 1) + rn1) - cf.b(n)
}

/// Applies one Bauer-Muir step with the given polynomial accelerator.
pub fn bm_step(cf: &Gcf, r: &PolyQ) -> Result<BmStep> {
    let m = cf.start();
    let r_at = |n: u32| r.eval_int(i64::from(n));
    let big_r = |n: u32| cf.a(n) + r_at(n);

    let r1 = big_r(1);
    if r1.is_zero() {
        return Err(Error::EssentialAssumption("R(1) = a(1) + r(1) = 0".into()));
    }
    let d_poly = d_polynomial(cf, r);
    if d_poly.is_zero() {
        return Err(Error::EssentialAssumption("d(n) is identically zero".into()));
    }
    for n in 1..m {
        if d_pointwise(cf, r, n).is_zero() {
            return Err(Error::EssentialAssumption(format!("d({n}) = 0")));
        }
    }
    if let Some(n) = d_poly
        .integer_roots_in(i64::from(m), ZERO_CHECK_HORIZON)
        .first()
    {
        return Err(Error::EssentialAssumption(format!("d({n}) = 0")));
    }

    let constant_d = d_poly.is_constant();
    let d_at = |n: u32| d_pointwise(cf, r, n);

    // Prefix entries 0..=m, computed pointwise.
    let mut prefix = Vec::with_capacity(m as usize + 1);
    let a0 = cf.a(0) + cf.b(0) / &r1;
    let b0 = cf.b(0) * d_at(1) / (&r1 * &r1);
    prefix.push((a0, b0));
    let a1 = (cf.a(1) * big_r(2) + cf.b(1)) / &r1;
    let b1 = cf.b(1) * d_at(2) / d_at(1);
    prefix.push((a1, b1));
    for n in 2..=m {
        let a = big_r(n + 1) - r_at(n - 1) * d_at(n) / d_at(n - 1);
        let b = cf.b(n) * d_at(n + 1) / d_at(n);
        prefix.push((a, b));
    }

    let one = Rat::one();
    let (tail_a, tail_b) = if constant_d {
        // A(n) = R(n+1) - r(n-1), B(n) = b(n).
        let tail_a = cf.tail_a().shift(&one) + r.shift(&one) - r.shift(&Rat::from_int(-1));
        (tail_a, cf.tail_b().clone())
    } else {
        // Equivalence multiplier d(n-1) from index m+1 on.
        let d_prev = d_poly.shift(&Rat::from_int(-1));
        let big_r_next = cf.tail_a().shift(&one) + r.shift(&one);
        let tail_a = &d_prev * big_r_next - r.shift(&Rat::from_int(-1)) * &d_poly;
        let tail_b = cf.tail_b() * &d_prev * d_poly.shift(&one);
        // The prefix pair at index m picks up the first clearing factor on
        // its b entry.
        let last = prefix.last_mut().expect("nonempty");
        last.1 = &last.1 * d_poly.eval_int(i64::from(m));
        (tail_a, tail_b)
    };

    let output = Gcf::new(prefix, tail_a, tail_b)?;
    Ok(BmStep {
        r: r.clone(),
        d: d_poly,
        input: cf.clone(),
        output,
        cleared: !constant_d,
    })
}

/// Checks the convergent relation
/// (P(n), Q(n)) = (p(n+1), q(n+1)) + r(n+1) (p(n), q(n)) for 2 <= n <= N,
/// exactly, accounting for the clearing rescale when d is not constant.
pub fn bm_check_relation(cf: &Gcf, r: &PolyQ, n_max: u32) -> Result<bool> {
    let step = bm_step(cf, r)?;
    let m = cf.start();
    let inp = cf.convergents(n_max + 1);
    let out = step.output.convergents(n_max);
    let mut fac = Rat::one();
    for n in 2..=n_max as usize {
        if step.cleared && n as u32 >= m + 1 {
            fac *= step.d.eval_int(n as i64 - 1);
        }
        let rn1 = r.eval_int(n as i64 + 1);
        let want_p = (&inp[n + 1].p + &rn1 * &inp[n].p) * &fac;
        let want_q = (&inp[n + 1].q + &rn1 * &inp[n].q) * &fac;
        if out[n].p != want_p || out[n].q != want_q {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All polynomial accelerators r with deg r <= deg_bound for which
/// d(n) = r(n)(A(n+1) + r(n+1)) - B(n) is a nonzero constant.
///
/// Coefficients are matched from the top degree down; each stage is a
/// linear or quadratic equation in a single unknown whose rational roots
/// are kept, branching on quadratics. Stages that vanish identically are
/// skipped; if an unknown is never pinned the branch describes a continuum
/// of accelerators, not an isolated one, and is dropped. Solutions that
/// break the R(1) != 0 assumption are discarded.
pub fn bm_solve_r(cf: &Gcf, deg_bound: u32) -> Vec<PolyQ> {
    let mut found: Vec<PolyQ> = Vec::new();
    for deg in 0..=deg_bound as usize {
        solve_exact_degree(cf, deg, &mut found);
    }
    let mut seen = BTreeSet::new();
    let mut unique: Vec<PolyQ> = Vec::new();
    for p in found {
        if seen.insert(p.coeffs().to_vec()) {
            unique.push(p);
        }
    }
    unique.sort_by(|a, b| {
        (a.coeffs().len(), a.height(), a.coeffs())
            .cmp(&(b.coeffs().len(), b.height(), b.coeffs()))
    });
    unique
}

fn solve_exact_degree(cf: &Gcf, deg: usize, found: &mut Vec<PolyQ>) {
    let a_next = cf.tail_a().shift(&Rat::one());
    let b = cf.tail_b();
    let da = a_next.degree().expect("nonzero tail");
    let db = b.degree().expect("nonzero tail");
    let smax = (2 * deg).max(deg + da).max(db);
    if smax == 0 {
        return; // constant tails have no isolated accelerator
    }

    // e_s = coefficient of n^s in r(n)(A(n+1) + r(n+1)) - B(n), as a
    // quadratic form in the unknown coefficients of r.
    let mut eqs: Vec<QForm> = Vec::new();
    for s in (1..=smax).rev() {
        let mut e = QForm::new(deg + 1);
        e.c = -b.coeff(s);
        for i in 0..=deg.min(s) {
            let t = s - i;
            if t <= da {
                e.lin[i] += &a_next.coeff(t);
            }
            // r(n+1) contributes C(l, t) rho_l to the n^t coefficient.
            for l in t..=deg {
                let c = Rat::from_bigint(binomial(l as u64, t as u64));
                e.add_quad(i, l, &c);
            }
        }
        eqs.push(e);
    }

    let mut assigned: Vec<Option<Rat>> = vec![None; deg + 1];
    solve_rec(&eqs, &mut assigned, deg, cf, found);
}

fn solve_rec(
    eqs: &[QForm],
    assigned: &mut Vec<Option<Rat>>,
    deg: usize,
    cf: &Gcf,
    found: &mut Vec<PolyQ>,
) {
    for (idx, eq) in eqs.iter().enumerate() {
        let reduced = eq.substitute(assigned);
        if reduced.is_identically_zero() {
            continue;
        }
        let vars = reduced.vars_present();
        if vars.is_empty() {
            return; // contradictory constant
        }
        if vars.len() > 1 {
            // Not a single-unknown stage; this shape does not occur for
            // polynomial-tail fractions of the kinds handled here.
            return;
        }
        let v = vars[0];
        let (qc, lc, cc) = reduced.univariate(v);
        for root in rational_roots(&qc, &lc, &cc) {
            assigned[v] = Some(root);
            solve_rec(&eqs[idx + 1..], assigned, deg, cf, found);
            assigned[v] = None;
        }
        return;
    }
    // All equations satisfied. Only isolated solutions count.
    if assigned.iter().any(Option::is_none) {
        return;
    }
    let coeffs: Vec<Rat> = assigned.iter().map(|v| v.clone().unwrap()).collect();
    let r = PolyQ::from_coeffs(coeffs);
    if r.degree() != Some(deg) && deg > 0 {
        return; // leading coefficient vanished; covered by a lower degree
    }
    let d = d_polynomial(cf, &r);
    if !d.is_constant() || d.is_zero() {
        return;
    }
    if (cf.a(1) + r.eval_int(1)).is_zero() {
        return; // unusable: R(1) = 0
    }
    found.push(r);
}

/// a x^2 + b x + c = 0 over the rationals (a may be zero).
fn rational_roots(a: &Rat, b: &Rat, c: &Rat) -> Vec<Rat> {
    if a.is_zero() {
        if b.is_zero() {
            return Vec::new(); // constant equation, handled by caller
        }
        return vec![-(c / b)];
    }
    let disc = b * b - Rat::from_int(4) * a * c;
    if disc.is_negative() {
        return Vec::new();
    }
    let Some(sq) = rat_sqrt(&disc) else {
        return Vec::new();
    };
    let two_a = Rat::from_int(2) * a;
    let mut roots = vec![(-b + &sq) / &two_a];
    if !sq.is_zero() {
        roots.push((-b - &sq) / &two_a);
    }
    roots
}

/// Exact square root of a nonnegative rational, if it is one.
fn rat_sqrt(v: &Rat) -> Option<Rat> {
    if v.is_zero() {
        return Some(Rat::zero());
    }
    let int_sqrt = |x: &BigInt| -> Option<BigInt> {
        let r = x.sqrt();
        (&r * &r == *x).then_some(r)
    };
    let n = int_sqrt(v.numer())?;
    let d = int_sqrt(v.denom())?;
    Some(Rat::from_big(n, d))
}

/// Quadratic form in the unknown coefficients rho_0..rho_deg.
#[derive(Clone)]
struct QForm {
    c: Rat,
    lin: Vec<Rat>,
    quad: Vec<Vec<Rat>>, // quad[i][j], i <= j
}

impl QForm {
    fn new(nvars: usize) -> QForm {
        QForm {
            c: Rat::zero(),
            lin: vec![Rat::zero(); nvars],
            quad: vec![vec![Rat::zero(); nvars]; nvars],
        }
    }

    fn add_quad(&mut self, i: usize, j: usize, v: &Rat) {
        let (lo, hi) = if i <= j { (i, j) } else { (j, i) };
        self.quad[lo][hi] += v;
    }

    fn substitute(&self, assigned: &[Option<Rat>]) -> QForm {
        let n = self.lin.len();
        let mut out = QForm::new(n);
        out.c = self.c.clone();
        for i in 0..n {
            match &assigned[i] {
                Some(v) => out.c += &self.lin[i] * v,
                None => out.lin[i] += &self.lin[i],
            }
        }
        for i in 0..n {
            for j in i..n {
                let q = &self.quad[i][j];
                if q.is_zero() {
                    continue;
                }
                match (&assigned[i], &assigned[j]) {
                    (Some(a), Some(b)) => out.c += q * a * b,
                    (Some(a), None) => out.lin[j] += q * a,
                    (None, Some(b)) => out.lin[i] += q * b,
                    (None, None) => out.quad[i][j] += q,
                }
            }
        }
        out
    }

    fn is_identically_zero(&self) -> bool {
        self.c.is_zero()
            && self.lin.iter().all(Rat::is_zero)
            && self.quad.iter().flatten().all(Rat::is_zero)
    }

    fn vars_present(&self) -> Vec<usize> {
        let n = self.lin.len();
        let mut present = vec![false; n];
        for (i, v) in self.lin.iter().enumerate() {
            if !v.is_zero() {
                present[i] = true;
            }
        }
        for i in 0..n {
            for j in i..n {
                if !self.quad[i][j].is_zero() {
                    present[i] = true;
                    present[j] = true;
                }
            }
        }
        (0..n).filter(|&i| present[i]).collect()
    }

    /// (quadratic, linear, constant) coefficients in the single variable v.
    fn univariate(&self, v: usize) -> (Rat, Rat, Rat) {
        (self.quad[v][v].clone(), self.lin[v].clone(), self.c.clone())
    }
}

/// Iterated acceleration. At each step the solver runs with the given
/// degree bound (default max(deg A, 3)); among the solutions, the step
/// keeps those whose output preserves the tail shape (B up to sign, deg A)
/// and collapses back to a single-constant prefix, drops any that
/// reproduce an already-visited fraction (those undo a previous step), and
/// breaks ties by smallest coefficient height, then lexicographic order.
pub fn bm_iterate(cf: &Gcf, steps: u32, deg_bound: Option<u32>) -> Result<Vec<BmStep>> {
    let mut history: Vec<Gcf> = vec![cf.clone()];
    let mut current = cf.clone();
    let mut out = Vec::with_capacity(steps as usize);
    for step in 1..=steps {
        let bound = deg_bound.unwrap_or_else(|| {
            (current.tail_a().degree().unwrap_or(0) as u32).max(3)
        });
        let mut best: Option<BmStep> = None;
        for r in bm_solve_r(&current, bound) {
            let Ok(candidate) = bm_step(&current, &r) else {
                continue;
            };
            let o = &candidate.output;
            let same_b = o.tail_b() == current.tail_b() || *o.tail_b() == -current.tail_b();
            if !same_b
                || o.tail_a().degree() != current.tail_a().degree()
                || o.start() != 1
                || history.contains(o)
            {
                continue;
            }
            let better = match &best {
                None => true,
                Some(b) => {
                    (r.height(), r.coeffs()) < (b.r.height(), b.r.coeffs())
                }
            };
            if better {
                best = Some(candidate);
            }
        }
        let step_result = best.ok_or(Error::NoAccelerator(step))?;
        history.push(step_result.output.clone());
        current = step_result.output.clone();
        out.push(step_result);
    }
    Ok(out)
}

/// The five closed-form accelerated families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AcceleratedFamily {
    /// log 2 from the alternating harmonic series.
    Log2,
    /// zeta(2) from its plain series.
    Zeta2,
    /// zeta(2) from the alternating series (doubled).
    Zeta2Alt,
    /// Catalan's constant.
    Catalan,
    /// zeta(3).
    Zeta3,
}

impl std::str::FromStr for AcceleratedFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "log2" => AcceleratedFamily::Log2,
            "zeta2" => AcceleratedFamily::Zeta2,
            "zeta2alt" => AcceleratedFamily::Zeta2Alt,
            "catalan" => AcceleratedFamily::Catalan,
            "zeta3" => AcceleratedFamily::Zeta3,
            _ => return Err(Error::OutOfRange(format!("unknown family {s:?}"))),
        })
    }
}

/// The k-th accelerated fraction of a family, with a(0) equal to the
/// matching exact partial sum.
pub fn accelerated_family(name: AcceleratedFamily, k: u32) -> Result<Gcf> {
    use AcceleratedFamily::*;
    let ki = k as i64;
    let sign_k = Rat::from_int(-1).pow(k as i32);
    let sum = |f: &dyn Fn(i64) -> Rat| -> Rat {
        let mut acc = Rat::zero();
        for j in 1..=ki {
            acc += f(j);
        }
        acc
    };
    let (a0, b0, tail_a, tail_b) = match name {
        Log2 => (
            sum(&|j| Rat::new(if j % 2 == 1 { 1 } else { -1 }, j)),
            sign_k,
            PolyQ::constant(Rat::from_int(2 * ki + 1)),
            PolyQ::monomial(Rat::one(), 2),
        ),
        Zeta2 => (
            sum(&|j| Rat::new(if j % 2 == 1 { 2 } else { -2 }, j * j)),
            sign_k,
            PolyQ::from_coeffs(vec![
                Rat::from_int(ki * ki + ki + 1),
                Rat::from_int(-2),
                Rat::from_int(2),
            ]),
            PolyQ::monomial(Rat::from_int(-1), 4),
        ),
        Zeta2Alt => (
            sum(&|j| Rat::new(1, j * j)),
            Rat::from_int(2),
            PolyQ::from_ints(&[-(2 * ki + 1), 2 * (2 * ki + 1)]),
            PolyQ::monomial(Rat::one(), 4),
        ),
        Catalan => (
            sum(&|j| Rat::new(if j % 2 == 1 { 1 } else { -1 }, (2 * j - 1) * (2 * j - 1))),
            sign_k * Rat::new(1, 2),
            PolyQ::from_ints(&[4 * ki * ki + 3, -8, 8]),
            PolyQ::monomial(Rat::from_int(-16), 4),
        ),
        Zeta3 => (
            sum(&|j| Rat::new(1, j * j * j)),
            Rat::one(),
            PolyQ::from_ints(&[-1, 2])
                * PolyQ::from_ints(&[2 * ki * ki + 2 * ki + 1, -1, 1]),
            PolyQ::monomial(Rat::from_int(-1), 6),
        ),
    };
    Gcf::simple(a0, b0, tail_a, tail_b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_cf, parse_poly};

    fn log2_cf() -> Gcf {
        parse_cf("[[0,1],[1,n^2]]").unwrap()
    }

    fn zeta2_cf() -> Gcf {
        parse_cf("[[0,2n^2-2n+1],[1,-n^4]]").unwrap()
    }

    // ---- single steps ----

    #[test]
    fn log2_first_step() {
        let step = bm_step(&log2_cf(), &parse_poly("n-1").unwrap()).unwrap();
        assert_eq!(step.d, PolyQ::constant(Rat::from_int(-1)));
        assert_eq!(step.output, parse_cf("[[1,3],[-1,n^2]]").unwrap());
        assert!(!step.cleared);
    }

    #[test]
    fn zeta2_first_step() {
        let r = parse_poly("-n^2+n-1/2").unwrap();
        let step = bm_step(&zeta2_cf(), &r).unwrap();
        assert_eq!(step.d, PolyQ::constant(Rat::new(-1, 4)));
        assert_eq!(step.output, parse_cf("[[2,2n^2-2n+3],[-1,-n^4]]").unwrap());
    }

    #[test]
    fn catalan_solver_step() {
        let cf = parse_cf("[[1,8n^2-8n+7],[-1/2,-16n^4]]").unwrap();
        let rs = bm_solve_r(&cf, 2);
        let step = rs
            .iter()
            .filter_map(|r| bm_step(&cf, r).ok())
            .find(|s| s.output.start() == 1 && s.output != cf)
            .expect("an accelerator");
        assert_eq!(
            step.output,
            parse_cf("[[8/9,8n^2-8n+19],[1/2,-16n^4]]").unwrap()
        );
    }

    #[test]
    fn two_constant_prefix_step() {
        // The alternating Catalan series fraction needs two leading
        // constants; a quadratic accelerator with constant d still applies.
        let cf = parse_cf("[[0,1,8(n-1)],[1,(2n-1)^4]]").unwrap();
        let r = parse_poly("4n^2-12n+13").unwrap();
        let step = bm_step(&cf, &r).unwrap();
        assert_eq!(step.d, PolyQ::constant(Rat::from_int(64)));
        assert_eq!(
            step.output,
            parse_cf("[[1/6,7/3,24(n-1)],[16/9,(2n-1)^4]]").unwrap()
        );
        // And again.
        let r2 = parse_poly("4n^2-20n+41").unwrap();
        let step2 = bm_step(&step.output, &r2).unwrap();
        assert_eq!(
            step2.output,
            parse_cf("[[19/82,145/41,40(n-1)],[4096/1681,(2n-1)^4]]").unwrap()
        );
    }

    #[test]
    fn essential_assumption_violations() {
        // r = -1 makes R(1) = 0 for the log 2 fraction.
        let r = PolyQ::constant(Rat::from_int(-1));
        assert!(matches!(
            bm_step(&log2_cf(), &r),
            Err(Error::EssentialAssumption(_))
        ));
        // r = -n makes d identically zero.
        let r = parse_poly("-n").unwrap();
        assert!(matches!(
            bm_step(&log2_cf(), &r),
            Err(Error::EssentialAssumption(_))
        ));
    }

    // ---- solver ----

    #[test]
    fn solver_finds_log2_accelerator() {
        let rs = bm_solve_r(&log2_cf(), 1);
        assert_eq!(rs, vec![parse_poly("n-1").unwrap()]);
    }

    #[test]
    fn solver_finds_zeta2_accelerator() {
        let rs = bm_solve_r(&zeta2_cf(), 2);
        assert!(rs.contains(&parse_poly("-n^2+n-1/2").unwrap()));
    }

    #[test]
    fn solver_empty_at_low_bound() {
        let zeta3 = parse_cf("[[0,(2n-1)(n^2-n+1)],[1,-n^6]]").unwrap();
        assert!(bm_solve_r(&zeta3, 1).is_empty());
    }

    // ---- convergent relation ----

    #[test]
    fn relation_for_log2_accelerators() {
        assert!(bm_check_relation(&log2_cf(), &parse_poly("n-1").unwrap(), 50).unwrap());
        // r = n gives non-constant d = 2n; the relation still holds.
        assert!(bm_check_relation(&log2_cf(), &parse_poly("n").unwrap(), 20).unwrap());
    }

    #[test]
    fn relation_for_zeta2() {
        let r = parse_poly("-n^2+n-1/2").unwrap();
        assert!(bm_check_relation(&zeta2_cf(), &r, 50).unwrap());
    }

    // ---- iteration ----

    #[test]
    fn log2_chain() {
        let steps = bm_iterate(&log2_cf(), 4, None).unwrap();
        let a0s: Vec<Rat> = steps.iter().map(|s| s.output.a(0)).collect();
        assert_eq!(
            a0s,
            vec![
                Rat::one(),
                Rat::new(1, 2),
                Rat::new(5, 6),
                Rat::new(7, 12)
            ]
        );
        let tails: Vec<Rat> = steps
            .iter()
            .map(|s| s.output.tail_a().as_constant().unwrap())
            .collect();
        assert_eq!(
            tails,
            vec![
                Rat::from_int(3),
                Rat::from_int(5),
                Rat::from_int(7),
                Rat::from_int(9)
            ]
        );
        for (i, s) in steps.iter().enumerate() {
            let want = if i % 2 == 0 { -1 } else { 1 };
            assert_eq!(s.output.b(0), Rat::from_int(want));
        }
    }

    #[test]
    fn iterate_matches_closed_forms() {
        let inputs = [
            (AcceleratedFamily::Log2, log2_cf()),
            (AcceleratedFamily::Zeta2, zeta2_cf()),
            (
                AcceleratedFamily::Zeta2Alt,
                parse_cf("[[0,2n-1],[2,n^4]]").unwrap(),
            ),
            (
                AcceleratedFamily::Catalan,
                parse_cf("[[0,8n^2-8n+3],[1/2,-16n^4]]").unwrap(),
            ),
            (
                AcceleratedFamily::Zeta3,
                parse_cf("[[0,(2n-1)(n^2-n+1)],[1,-n^6]]").unwrap(),
            ),
        ];
        for (fam, cf) in inputs {
            assert_eq!(accelerated_family(fam, 0).unwrap(), cf, "{fam:?} k=0");
            let steps = bm_iterate(&cf, 3, None).unwrap();
            for (i, s) in steps.iter().enumerate() {
                let want = accelerated_family(fam, i as u32 + 1).unwrap();
                assert_eq!(s.output, want, "{fam:?} step {}", i + 1);
            }
        }
    }

    #[test]
    fn closed_form_spot_checks() {
        assert_eq!(
            accelerated_family(AcceleratedFamily::Log2, 3).unwrap(),
            parse_cf("[[5/6,7],[-1,n^2]]").unwrap()
        );
        assert_eq!(
            accelerated_family(AcceleratedFamily::Zeta3, 2).unwrap(),
            parse_cf("[[9/8,(2n-1)(n^2-n+13)],[1,-n^6]]").unwrap()
        );
        assert_eq!(
            accelerated_family(AcceleratedFamily::Catalan, 0).unwrap(),
            parse_cf("[[0,8n^2-8n+3],[1/2,-16n^4]]").unwrap()
        );
    }

    #[test]
    fn no_tail_preserving_accelerator_for_zeta4() {
        let zeta4 = parse_cf("[[0,n^4+(n-1)^4],[1,-n^8]]").unwrap();
        for bound in 0..=4u32 {
            for r in bm_solve_r(&zeta4, bound) {
                let Ok(step) = bm_step(&zeta4, &r) else {
                    continue;
                };
                let o = &step.output;
                let same_b =
                    o.tail_b() == zeta4.tail_b() || *o.tail_b() == -zeta4.tail_b();
                assert!(
                    !(same_b
                        && o.tail_a().degree() == zeta4.tail_a().degree()
                        && o.start() == 1
                        && *o != zeta4),
                    "unexpected accelerator {r:?}"
                );
            }
        }
    }
}
