//! Generalized continued fractions with polynomial tails.
//!
//! A value is `a(0) + b(0)/(a(1) + b(1)/(a(2) + ...))`. The first `start`
//! pairs are explicit constants; from index `start` on, the entries are the
//! tail polynomials evaluated at the index. The usual bracket notation
//! `[[a(0),A(n)],[b(0),B(n)]]` is the `start = 1` case.

use std::fmt;

use num::{BigInt, Integer, One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fixed::FixedFloat;
use crate::poly::PolyQ;
use crate::rat::Rat;

/// Integer indices up to this bound are scanned for tail zeros (the scan is
/// cut off early by the Cauchy root bound, so it stays cheap).
pub const ZERO_CHECK_HORIZON: i64 = 10_000;

/// Default cap on exact convergent depth; digit counts grow superlinearly.
pub const DEFAULT_EXACT_BUDGET: u32 = 500;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gcf {
    prefix: Vec<(Rat, Rat)>,
    tail_a: PolyQ,
    tail_b: PolyQ,
}

impl Gcf {
    /// Builds and canonicalizes a continued fraction.
    ///
    /// Requirements: a nonempty prefix, nonzero prefix `b` values, and tail
    /// polynomials that do not vanish at any integer in
    /// `[start, ZERO_CHECK_HORIZON]`.
    pub fn new(prefix: Vec<(Rat, Rat)>, tail_a: PolyQ, tail_b: PolyQ) -> Result<Gcf> {
        if prefix.is_empty() {
            return Err(Error::InvalidCf("empty prefix".into()));
        }
        if tail_a.is_zero() || tail_b.is_zero() {
            return Err(Error::InvalidCf("zero tail polynomial".into()));
        }
        for (i, (_, b)) in prefix.iter().enumerate() {
            if b.is_zero() {
                return Err(Error::InvalidCf(format!("b({i}) = 0")));
            }
        }
        let start = prefix.len() as i64;
        for tail in [&tail_a, &tail_b] {
            if let Some(n) = tail.integer_roots_in(start, ZERO_CHECK_HORIZON).first() {
                return Err(Error::InvalidCf(format!(
                    "tail {tail} vanishes at n = {n}"
                )));
            }
        }
        let mut cf = Gcf {
            prefix,
            tail_a,
            tail_b,
        };
        cf.reduce();
        Ok(cf)
    }

    /// Convenience constructor for the `start = 1` case.
    pub fn simple(a0: Rat, b0: Rat, tail_a: PolyQ, tail_b: PolyQ) -> Result<Gcf> {
        Gcf::new(vec![(a0, b0)], tail_a, tail_b)
    }

    /// Drops prefix entries that coincide with the tail values.
    fn reduce(&mut self) {
        while self.prefix.len() > 1 {
            let m = self.prefix.len() as i64 - 1;
            let (a, b) = self.prefix.last().unwrap();
            let ta = self.tail_a.eval_int(m);
            if ta.is_zero() || ta != *a || self.tail_b.eval_int(m) != *b {
                break;
            }
            self.prefix.pop();
        }
    }

    pub fn start(&self) -> u32 {
        self.prefix.len() as u32
    }

    pub fn prefix(&self) -> &[(Rat, Rat)] {
        &self.prefix
    }

    pub fn tail_a(&self) -> &PolyQ {
        &self.tail_a
    }

    pub fn tail_b(&self) -> &PolyQ {
        &self.tail_b
    }

    /// Partial denominator a(n).
    pub fn a(&self, n: u32) -> Rat {
        match self.prefix.get(n as usize) {
            Some((a, _)) => a.clone(),
            None => self.tail_a.eval_int(i64::from(n)),
        }
    }

    /// Partial numerator b(n).
    pub fn b(&self, n: u32) -> Rat {
        match self.prefix.get(n as usize) {
            Some((_, b)) => b.clone(),
            None => self.tail_b.eval_int(i64::from(n)),
        }
    }

    /// Scales the value of the fraction by `c != 0` (rescales a(0), b(0)).
    pub fn scale_value(&self, c: &Rat) -> Result<Gcf> {
        if c.is_zero() {
            return Err(Error::InvalidCf("scaling by zero".into()));
        }
        let mut prefix = self.prefix.clone();
        prefix[0] = (c * &prefix[0].0, c * &prefix[0].1);
        Gcf::new(prefix, self.tail_a.clone(), self.tail_b.clone())
    }

    /// The fraction whose value is the negative of this one.
    pub fn negate(&self) -> Gcf {
        self.scale_value(&Rat::from_int(-1)).expect("nonzero scale")
    }

    /// Exact convergents p(n)/q(n) for n = 0..=n_max, seeded with
    /// p(-1) = 1, q(-1) = 0.
    pub fn convergents(&self, n_max: u32) -> Vec<ConvergentPair> {
        let mut out = Vec::with_capacity(n_max as usize + 1);
        let (mut p_prev, mut q_prev) = (Rat::one(), Rat::zero());
        let (mut p, mut q) = (self.a(0), Rat::one());
        out.push(ConvergentPair {
            p: p.clone(),
            q: q.clone(),
            index: 0,
        });
        for n in 1..=n_max {
            let an = self.a(n);
            let bn = self.b(n - 1);
            let p_next = &an * &p + &bn * &p_prev;
            let q_next = &an * &q + &bn * &q_prev;
            p_prev = std::mem::replace(&mut p, p_next);
            q_prev = std::mem::replace(&mut q, q_next);
            out.push(ConvergentPair {
                p: p.clone(),
                q: q.clone(),
                index: n,
            });
        }
        out
    }

    /// Forward recurrence in fixed precision with periodic rescaling.
    /// Returns the value at `depth` and `|x(depth) - x(depth-1)|`.
    pub fn eval_numeric(&self, depth: u32, prec: u32) -> Result<(FixedFloat, FixedFloat)> {
        if depth < 2 {
            return Err(Error::OutOfRange("depth must be at least 2".into()));
        }
        let work = prec + 10;
        let ta = IntPoly::from_poly(&self.tail_a);
        let tb = IntPoly::from_poly(&self.tail_b);
        let value_at = |n: u32, poly: &IntPoly, pre: fn(&(Rat, Rat)) -> &Rat| -> FixedFloat {
            match self.prefix.get(n as usize) {
                Some(pair) => FixedFloat::from_rat(pre(pair), work),
                None => poly.eval_fixed(i64::from(n), work),
            }
        };
        let (mut p_prev, mut q_prev) = (FixedFloat::one(work), FixedFloat::zero(work));
        let mut p = value_at(0, &ta, |t| &t.0);
        let mut q = FixedFloat::one(work);
        let mut x_prev: Option<FixedFloat> = None;
        for n in 1..=depth {
            let an = value_at(n, &ta, |t| &t.0);
            let bn = value_at(n - 1, &tb, |t| &t.1);
            let p_next = an.mul(&p).add(&bn.mul(&p_prev));
            let q_next = an.mul(&q).add(&bn.mul(&q_prev));
            p_prev = std::mem::replace(&mut p, p_next);
            q_prev = std::mem::replace(&mut q, q_next);
            if p.exceeds_pow10(prec) || q.exceeds_pow10(prec) {
                p = p.div_pow10(prec);
                q = q.div_pow10(prec);
                p_prev = p_prev.div_pow10(prec);
                q_prev = q_prev.div_pow10(prec);
            }
            if n == depth - 1 {
                if !q.is_zero() {
                    x_prev = Some(p.div(&q));
                }
            }
        }
        if q.is_zero() {
            return Err(Error::ZeroDenominator(depth));
        }
        let x = p.div(&q);
        // If the penultimate convergent was degenerate, report maximal
        // uncertainty instead of failing.
        let err = match x_prev {
            Some(xp) => x.sub(&xp).abs(),
            None => x.abs(),
        };
        Ok((x.with_prec(prec), err.with_prec(prec)))
    }

    /// Values at several depths from a single forward pass.
    pub fn eval_checkpoints(&self, depths: &[u32], prec: u32) -> Result<Vec<FixedFloat>> {
        let max = *depths.iter().max().ok_or(Error::InsufficientData)?;
        let work = prec + 10;
        let ta = IntPoly::from_poly(&self.tail_a);
        let tb = IntPoly::from_poly(&self.tail_b);
        let (mut p_prev, mut q_prev) = (FixedFloat::one(work), FixedFloat::zero(work));
        let mut p = match self.prefix.first() {
            Some((a, _)) => FixedFloat::from_rat(a, work),
            None => unreachable!(),
        };
        let mut q = FixedFloat::one(work);
        let mut snap: std::collections::HashMap<u32, FixedFloat> = Default::default();
        let record = |snap: &mut std::collections::HashMap<u32, FixedFloat>,
                      n: u32,
                      p: &FixedFloat,
                      q: &FixedFloat| {
            if depths.contains(&n) && !q.is_zero() {
                snap.insert(n, p.div(q));
            }
        };
        record(&mut snap, 0, &p, &q);
        for n in 1..=max {
            let an = match self.prefix.get(n as usize) {
                Some((a, _)) => FixedFloat::from_rat(a, work),
                None => ta.eval_fixed(i64::from(n), work),
            };
            let bn = match self.prefix.get(n as usize - 1) {
                Some((_, b)) => FixedFloat::from_rat(b, work),
                None => tb.eval_fixed(i64::from(n) - 1, work),
            };
            let p_next = an.mul(&p).add(&bn.mul(&p_prev));
            let q_next = an.mul(&q).add(&bn.mul(&q_prev));
            p_prev = std::mem::replace(&mut p, p_next);
            q_prev = std::mem::replace(&mut q, q_next);
            if p.exceeds_pow10(prec) || q.exceeds_pow10(prec) {
                p = p.div_pow10(prec);
                q = q.div_pow10(prec);
                p_prev = p_prev.div_pow10(prec);
                q_prev = q_prev.div_pow10(prec);
            }
            record(&mut snap, n, &p, &q);
        }
        depths
            .iter()
            .map(|d| snap.remove(d).ok_or(Error::ZeroDenominator(*d)))
            .collect()
    }

    /// Estimates the exponent k of C/n^k convergence from the slope of
    /// log |x(2N) - x(N)| against log N.
    pub fn convergence_rate(&self, depths: &[u32], prec: u32) -> Result<RateEstimate> {
        if depths.len() < 3 {
            return Err(Error::InsufficientData);
        }
        let mut ds = depths.to_vec();
        ds.sort_unstable();
        ds.dedup();
        if ds.len() < 3 || ds[0] < 2 {
            return Err(Error::InsufficientData);
        }
        let mut all: Vec<u32> = ds.iter().flat_map(|&d| [d, 2 * d]).collect();
        all.sort_unstable();
        all.dedup();
        let values = self.eval_checkpoints(&all, prec)?;
        let at = |d: u32| -> &FixedFloat {
            &values[all.binary_search(&d).expect("checkpoint present")]
        };
        let mut samples = Vec::new();
        let mut points = Vec::new();
        for &d in &ds {
            let delta = at(2 * d).sub(at(d)).abs();
            if let Some(l) = delta.log10_abs() {
                points.push(((d as f64).ln(), l * std::f64::consts::LN_10));
            }
            samples.push((d, delta));
        }
        if points.len() < 2 {
            return Err(Error::InsufficientData);
        }
        let n = points.len() as f64;
        let sx: f64 = points.iter().map(|p| p.0).sum();
        let sy: f64 = points.iter().map(|p| p.1).sum();
        let sxx: f64 = points.iter().map(|p| p.0 * p.0).sum();
        let sxy: f64 = points.iter().map(|p| p.0 * p.1).sum();
        let denom = n * sxx - sx * sx;
        if denom.abs() < 1e-12 {
            return Err(Error::InsufficientData);
        }
        let slope = (n * sxy - sx * sy) / denom;
        Ok(RateEstimate {
            exponent: FixedFloat::from_f64(-slope, prec),
            samples,
        })
    }

    /// Canonical bracket text.
    pub fn to_text(&self) -> String {
        let consts = |f: fn(&(Rat, Rat)) -> &Rat| {
            self.prefix
                .iter()
                .map(|p| f(p).to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        format!(
            "[[{},{}],[{},{}]]",
            consts(|p| &p.0),
            self.tail_a.to_text('n'),
            consts(|p| &p.1),
            self.tail_b.to_text('n'),
        )
    }
}

impl fmt::Display for Gcf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl fmt::Debug for Gcf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

/// Prints the canonical bracket form (inverse of `parse_cf` on canonical
/// text).
pub fn print_cf(cf: &Gcf) -> String {
    cf.to_text()
}

#[derive(Serialize, Deserialize)]
struct GcfRepr {
    prefix: Vec<(Rat, Rat)>,
    tail_a: String,
    tail_b: String,
    start: u32,
}

impl Serialize for Gcf {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GcfRepr {
            prefix: self.prefix.clone(),
            tail_a: self.tail_a.to_text('n'),
            tail_b: self.tail_b.to_text('n'),
            start: self.start(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Gcf {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = GcfRepr::deserialize(d)?;
        let tail_a = crate::parse::parse_poly(&repr.tail_a).map_err(D::Error::custom)?;
        let tail_b = crate::parse::parse_poly(&repr.tail_b).map_err(D::Error::custom)?;
        Gcf::new(repr.prefix, tail_a, tail_b).map_err(D::Error::custom)
    }
}

/// An exact convergent p(n)/q(n).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvergentPair {
    pub p: Rat,
    pub q: Rat,
    pub index: u32,
}

impl ConvergentPair {
    /// `None` flags the degenerate q(n) = 0 case.
    pub fn value(&self) -> Option<Rat> {
        (!self.q.is_zero()).then(|| &self.p / &self.q)
    }

    pub fn is_degenerate(&self) -> bool {
        self.q.is_zero()
    }
}

/// Measured polynomial convergence rate.
#[derive(Clone, Debug)]
pub struct RateEstimate {
    /// Estimated k in C/n^k.
    pub exponent: FixedFloat,
    /// (depth, |x(2*depth) - x(depth)|), increasing in depth.
    pub samples: Vec<(u32, FixedFloat)>,
}

/// Integer-cleared polynomial for fast evaluation at integers.
struct IntPoly {
    coeffs: Vec<BigInt>,
    den: BigInt,
}

impl IntPoly {
    fn from_poly(p: &PolyQ) -> IntPoly {
        let mut den = BigInt::one();
        for c in p.coeffs() {
            den = den.lcm(c.denom());
        }
        let coeffs = p
            .coeffs()
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        IntPoly { coeffs, den }
    }

    fn eval_fixed(&self, n: i64, prec: u32) -> FixedFloat {
        let n = BigInt::from(n);
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * &n + c;
        }
        FixedFloat::from_big_ratio(acc, self.den.clone(), prec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_cf;

    fn zeta2_cf() -> Gcf {
        parse_cf("[[0,2n-1],[2,n^4]]").unwrap()
    }

    // ---- construction and canonical form ----

    #[test]
    fn rejects_degenerate_fractions() {
        assert!(Gcf::simple(Rat::zero(), Rat::zero(), PolyQ::one(), PolyQ::one()).is_err());
        assert!(Gcf::simple(Rat::zero(), Rat::one(), PolyQ::one(), PolyQ::zero()).is_err());
        // tail vanishing inside the tail region
        assert!(Gcf::simple(
            Rat::zero(),
            Rat::one(),
            PolyQ::from_ints(&[-3, 1]), // n - 3
            PolyQ::one()
        )
        .is_err());
    }

    #[test]
    fn prefix_reduction() {
        // Redundant second prefix pair collapses to start = 1.
        let cf = Gcf::new(
            vec![
                (Rat::zero(), Rat::from_int(2)),
                (Rat::one(), Rat::one()), // equals (A(1), B(1)) for A=2n-1, B=n^4
            ],
            PolyQ::from_ints(&[-1, 2]),
            PolyQ::monomial(Rat::one(), 4),
        )
        .unwrap();
        assert_eq!(cf.start(), 1);
        assert_eq!(cf, zeta2_cf());
    }

    // ---- convergents ----

    #[test]
    fn zeta2_partial_sums() {
        // Convergents are the partial sums of 2*sum (-1)^(n-1)/n^2.
        let conv = zeta2_cf().convergents(2);
        assert_eq!(conv[0].value().unwrap(), Rat::zero());
        assert_eq!(conv[1].value().unwrap(), Rat::from_int(2));
        assert_eq!(conv[2].value().unwrap(), Rat::new(3, 2));
    }

    #[test]
    fn trivial_zeta2_form_partial_sums() {
        let cf = parse_cf("[[0,n^2+(n-1)^2],[1,-n^4]]").unwrap();
        let conv = cf.convergents(3);
        assert_eq!(conv[1].value().unwrap(), Rat::one());
        assert_eq!(conv[2].value().unwrap(), Rat::new(5, 4));
        assert_eq!(conv[3].value().unwrap(), Rat::new(49, 36));
    }

    #[test]
    fn determinant_identity_small() {
        let cf = zeta2_cf();
        let conv = cf.convergents(8);
        let mut b_prod = Rat::one();
        for n in 1..=8u32 {
            b_prod *= cf.b(n - 1);
            let lhs = &conv[n as usize].p * &conv[n as usize - 1].q
                - &conv[n as usize - 1].p * &conv[n as usize].q;
            let sign = if n % 2 == 1 { Rat::one() } else { Rat::from_int(-1) };
            assert_eq!(lhs, sign * &b_prod);
        }
    }

    // ---- numeric evaluation ----

    #[test]
    fn zeta2_numeric_value() {
        let (x, err) = zeta2_cf().eval_numeric(2000, 30).unwrap();
        // pi^2/6 = 1.6449340668...
        assert!(x.to_decimal(10).starts_with("1.64493406"));
        assert!(err.log10_abs().unwrap() < -4.0);
    }

    #[test]
    fn log2_rate_is_about_one() {
        let cf = parse_cf("[[0,1],[1,n^2]]").unwrap();
        let rate = cf.convergence_rate(&[200, 400, 800, 1600], 30).unwrap();
        let e = rate.exponent.to_f64();
        assert!((e - 1.0).abs() < 0.2, "exponent {e}");
        assert!(rate.samples.windows(2).all(|w| w[0].0 < w[1].0));
    }

    // ---- text round trip ----

    #[test]
    fn print_form() {
        assert_eq!(zeta2_cf().to_text(), "[[0,2*n-1],[2,n^4]]");
        let two = parse_cf("[[0,1,8(n-1)],[1,(2n-1)^4]]").unwrap();
        assert_eq!(two.start(), 2);
        assert_eq!(parse_cf(&two.to_text()).unwrap(), two);
    }

    #[test]
    fn json_round_trip() {
        let cf = parse_cf("[[1/2,5],[1,n^2]]").unwrap();
        let js = serde_json::to_string(&cf).unwrap();
        assert!(js.contains("\"start\":1"));
        let back: Gcf = serde_json::from_str(&js).unwrap();
        assert_eq!(back, cf);
    }
}
