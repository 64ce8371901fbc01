//! Fixed-precision decimal floating point on big integers.
//!
//! A value is `mantissa * 10^(-scale)` kept to `prec` significant decimal
//! digits. Every arithmetic operation rounds once (nearest, ties away from
//! zero), so a short chain of operations stays within a few ulps of exact.

use std::cmp::Ordering;
use std::fmt;

use num::{BigInt, Integer, One, Signed, Zero};

use crate::rat::Rat;

#[derive(Clone, Debug)]
pub struct FixedFloat {
    mantissa: BigInt,
    scale: i64,
    prec: u32,
}

fn pow10(e: u64) -> BigInt {
    BigInt::from(10u32).pow(e as u32)
}

/// Decimal digit count of |x| (0 for zero).
fn dec_digits(x: &BigInt) -> i64 {
    if x.is_zero() {
        return 0;
    }
    let bits = x.bits();
    let mut est = ((bits as f64 - 1.0) * std::f64::consts::LOG10_2).floor() as i64;
    if est < 0 {
        est = 0;
    }
    let mag = x.abs();
    while pow10((est + 1) as u64) <= mag {
        est += 1;
    }
    while est > 0 && pow10(est as u64) > mag {
        est -= 1;
    }
    est + 1
}

/// Nearest integer to n/d (d > 0), ties away from zero.
fn round_div(n: &BigInt, d: &BigInt) -> BigInt {
    debug_assert!(d.is_positive());
    let (q, r) = n.div_rem(d);
    let r2: BigInt = r.abs() * 2;
    if &r2 >= d {
        if n.is_negative() {
            q - 1
        } else {
            q + 1
        }
    } else {
        q
    }
}

impl FixedFloat {
    pub fn zero(prec: u32) -> Self {
        FixedFloat {
            mantissa: BigInt::zero(),
            scale: 0,
            prec,
        }
    }

    pub fn one(prec: u32) -> Self {
        FixedFloat {
            mantissa: BigInt::one(),
            scale: 0,
            prec,
        }
    }

    pub fn from_int(n: i64, prec: u32) -> Self {
        FixedFloat {
            mantissa: BigInt::from(n),
            scale: 0,
            prec,
        }
        .rounded()
    }

    /// 10^(-e).
    pub fn pow10_neg(e: u32, prec: u32) -> Self {
        FixedFloat {
            mantissa: BigInt::one(),
            scale: i64::from(e),
            prec,
        }
    }

    pub fn from_rat(r: &Rat, prec: u32) -> Self {
        Self::from_big_ratio(r.numer().clone(), r.denom().clone(), prec)
    }

    /// num/den rounded to prec significant digits; den must be nonzero.
    pub fn from_big_ratio(num: BigInt, den: BigInt, prec: u32) -> Self {
        assert!(!den.is_zero(), "FixedFloat: zero denominator");
        if num.is_zero() {
            return FixedFloat::zero(prec);
        }
        let (num, den) = if den.is_negative() {
            (-num, -den)
        } else {
            (num, den)
        };
        let t = (i64::from(prec) + 2 + dec_digits(&den) - dec_digits(&num)).max(0);
        let m = round_div(&(num * pow10(t as u64)), &den);
        FixedFloat {
            mantissa: m,
            scale: t,
            prec,
        }
        .rounded()
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    pub fn with_prec(&self, prec: u32) -> Self {
        FixedFloat {
            mantissa: self.mantissa.clone(),
            scale: self.scale,
            prec,
        }
        .rounded()
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mantissa.is_negative()
    }

    /// Rounds the mantissa down to at most prec significant digits.
    fn rounded(mut self) -> Self {
        if self.mantissa.is_zero() {
            self.scale = 0;
            return self;
        }
        let d = dec_digits(&self.mantissa);
        let excess = d - i64::from(self.prec);
        if excess > 0 {
            self.mantissa = round_div(&self.mantissa, &pow10(excess as u64));
            self.scale -= excess;
            // Rounding can carry into one extra digit (e.g. 999 -> 100).
            let d2 = dec_digits(&self.mantissa);
            let over = d2 - i64::from(self.prec);
            if over > 0 {
                self.mantissa = round_div(&self.mantissa, &pow10(over as u64));
                self.scale -= over;
            }
        }
        self
    }

    /// Floor of log10 |x| plus one, i.e. the decimal exponent of the leading
    /// digit; zero input returns i64::MIN.
    fn dexp(&self) -> i64 {
        if self.is_zero() {
            return i64::MIN;
        }
        dec_digits(&self.mantissa) - self.scale
    }

    pub fn add(&self, rhs: &FixedFloat) -> FixedFloat {
        let prec = self.prec.max(rhs.prec);
        if self.is_zero() {
            return rhs.with_prec(prec);
        }
        if rhs.is_zero() {
            return self.with_prec(prec);
        }
        let gap = i64::from(prec) + 4;
        if self.dexp() - rhs.dexp() > gap {
            return self.with_prec(prec);
        }
        if rhs.dexp() - self.dexp() > gap {
            return rhs.with_prec(prec);
        }
        let scale = self.scale.max(rhs.scale);
        let a = &self.mantissa * pow10((scale - self.scale) as u64);
        let b = &rhs.mantissa * pow10((scale - rhs.scale) as u64);
        FixedFloat {
            mantissa: a + b,
            scale,
            prec,
        }
        .rounded()
    }

    pub fn sub(&self, rhs: &FixedFloat) -> FixedFloat {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> FixedFloat {
        FixedFloat {
            mantissa: -&self.mantissa,
            scale: self.scale,
            prec: self.prec,
        }
    }

    pub fn abs(&self) -> FixedFloat {
        FixedFloat {
            mantissa: self.mantissa.abs(),
            scale: self.scale,
            prec: self.prec,
        }
    }

    pub fn mul(&self, rhs: &FixedFloat) -> FixedFloat {
        let prec = self.prec.max(rhs.prec);
        FixedFloat {
            mantissa: &self.mantissa * &rhs.mantissa,
            scale: self.scale + rhs.scale,
            prec,
        }
        .rounded()
    }

    pub fn mul_rat(&self, c: &Rat) -> FixedFloat {
        if c.is_zero() || self.is_zero() {
            return FixedFloat::zero(self.prec);
        }
        FixedFloat::from_big_ratio(
            &self.mantissa * c.numer(),
            c.denom().clone(),
            self.prec,
        )
        .shifted(self.scale)
    }

    fn shifted(mut self, extra_scale: i64) -> FixedFloat {
        self.scale += extra_scale;
        self
    }

    /// Division; rhs must be nonzero.
    pub fn div(&self, rhs: &FixedFloat) -> FixedFloat {
        assert!(!rhs.is_zero(), "FixedFloat: division by zero");
        let prec = self.prec.max(rhs.prec);
        if self.is_zero() {
            return FixedFloat::zero(prec);
        }
        let t = (i64::from(prec) + 2 + dec_digits(&rhs.mantissa) - dec_digits(&self.mantissa))
            .max(0);
        let m = round_div(&(&self.mantissa * pow10(t as u64)), &rhs.mantissa.abs());
        let m = if rhs.is_negative() { -m } else { m };
        FixedFloat {
            mantissa: m,
            scale: self.scale - rhs.scale + t,
            prec,
        }
        .rounded()
    }

    /// Exact division by 10^e (used for rescaling).
    pub fn div_pow10(&self, e: u32) -> FixedFloat {
        FixedFloat {
            mantissa: self.mantissa.clone(),
            scale: self.scale + i64::from(e),
            prec: self.prec,
        }
    }

    pub fn powi(&self, exp: u32) -> FixedFloat {
        let mut acc = FixedFloat::one(self.prec);
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    /// Newton square root of a nonnegative value.
    pub fn sqrt(&self) -> FixedFloat {
        assert!(!self.is_negative(), "FixedFloat::sqrt of negative value");
        if self.is_zero() {
            return FixedFloat::zero(self.prec);
        }
        let work = self.prec + 8;
        let a = self.with_prec(work);
        let seed = self.to_f64().sqrt();
        let mut x = FixedFloat::from_f64(seed, work);
        // Each iteration doubles the number of correct digits; the f64 seed
        // is good to ~15.
        let iters = (1..).find(|i| 15u64 << i > u64::from(work) + 4).unwrap() + 1;
        let half = Rat::new(1, 2);
        for _ in 0..iters {
            x = x.add(&a.div(&x)).mul_rat(&half);
        }
        x.with_prec(self.prec)
    }

    /// Seeds from a double; good to about 15 digits.
    pub fn from_f64(v: f64, prec: u32) -> FixedFloat {
        assert!(v.is_finite());
        // 18 significant digits via scaled integer.
        let exp = if v == 0.0 { 0 } else { v.abs().log10().floor() as i64 };
        let scaled = v * 10f64.powi((17 - exp) as i32);
        FixedFloat {
            mantissa: BigInt::from(scaled.round() as i128),
            scale: 17 - exp,
            prec,
        }
        .rounded()
    }

    /// True when |x| >= 10^e; the rescaling trigger for forward recurrences.
    pub fn exceeds_pow10(&self, e: u32) -> bool {
        !self.is_zero() && self.dexp() > i64::from(e)
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let d = dec_digits(&self.mantissa);
        let shift = (d - 18).max(0);
        let head = &self.mantissa / pow10(shift as u64);
        let head: f64 = head.to_string().parse().unwrap_or(f64::NAN);
        head * 10f64.powi((shift - self.scale) as i32)
    }

    /// log10 |x|, None for zero. Accurate enough for slope fitting.
    pub fn log10_abs(&self) -> Option<f64> {
        if self.is_zero() {
            return None;
        }
        let d = dec_digits(&self.mantissa);
        let shift = (d - 15).max(0);
        let head = self.mantissa.abs() / pow10(shift as u64);
        let head: f64 = head.to_string().parse().ok()?;
        Some(head.log10() + (shift - self.scale) as f64)
    }

    pub fn cmp_value(&self, rhs: &FixedFloat) -> Ordering {
        let sa = self.mantissa.sign();
        let sb = rhs.mantissa.sign();
        if sa != sb {
            return (sa as i8).cmp(&(sb as i8));
        }
        if self.is_zero() {
            return Ordering::Equal;
        }
        let (ea, eb) = (self.dexp(), rhs.dexp());
        if ea != eb {
            let mag = ea.cmp(&eb);
            return if self.is_negative() { mag.reverse() } else { mag };
        }
        let scale = self.scale.max(rhs.scale);
        let a = &self.mantissa * pow10((scale - self.scale) as u64);
        let b = &rhs.mantissa * pow10((scale - rhs.scale) as u64);
        a.cmp(&b)
    }

    /// |self - rhs| <= tol.
    pub fn within(&self, rhs: &FixedFloat, tol: &FixedFloat) -> bool {
        self.sub(rhs).abs().cmp_value(tol) != Ordering::Greater
    }

    /// Plain decimal string with the requested number of significant digits.
    pub fn to_decimal(&self, digits: u32) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let rounded = self.with_prec(digits.max(1));
        let neg = rounded.mantissa.is_negative();
        let mag = rounded.mantissa.abs().to_string();
        let point = mag.len() as i64 - rounded.scale; // digits before the point
        let mut s = String::new();
        if neg {
            s.push('-');
        }
        if point <= 0 {
            s.push_str("0.");
            for _ in 0..(-point) {
                s.push('0');
            }
            s.push_str(mag.trim_end_matches('0'));
        } else if point >= mag.len() as i64 {
            s.push_str(&mag);
            for _ in 0..(point - mag.len() as i64) {
                s.push('0');
            }
        } else {
            let (int, frac) = mag.split_at(point as usize);
            s.push_str(int);
            let frac = frac.trim_end_matches('0');
            if !frac.is_empty() {
                s.push('.');
                s.push_str(frac);
            }
        }
        s
    }

    /// Scientific notation with a few significant digits, for error columns.
    pub fn to_scientific(&self, digits: u32) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let r = self.with_prec(digits.max(1));
        let mag = r.mantissa.abs().to_string();
        let exp = r.dexp() - 1;
        let mut s = String::new();
        if r.mantissa.is_negative() {
            s.push('-');
        }
        s.push_str(&mag[..1]);
        let rest = mag[1..].trim_end_matches('0');
        if !rest.is_empty() {
            s.push('.');
            s.push_str(rest);
        }
        s.push('e');
        s.push_str(&exp.to_string());
        s
    }
}

impl fmt::Display for FixedFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal(self.prec))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ff(s: &str, prec: u32) -> FixedFloat {
        let r: Rat = if let Some(dot) = s.find('.') {
            let digits = s.len() - dot - 1;
            let joined: String = s.chars().filter(|&c| c != '.').collect();
            Rat::from_big(
                joined.parse::<BigInt>().unwrap(),
                pow10(digits as u64),
            )
        } else {
            s.parse().unwrap()
        };
        FixedFloat::from_rat(&r, prec)
    }

    #[test]
    fn digit_counting() {
        assert_eq!(dec_digits(&BigInt::from(0)), 0);
        assert_eq!(dec_digits(&BigInt::from(9)), 1);
        assert_eq!(dec_digits(&BigInt::from(10)), 2);
        assert_eq!(dec_digits(&BigInt::from(-999)), 3);
        assert_eq!(dec_digits(&pow10(40)), 41);
    }

    #[test]
    fn conversion_and_printing() {
        let third = FixedFloat::from_rat(&Rat::new(1, 3), 20);
        assert_eq!(third.to_decimal(10), "0.3333333333");
        let big = FixedFloat::from_rat(&Rat::new(22, 7), 30);
        assert!(big.to_decimal(10).starts_with("3.142857142"));
        assert_eq!(ff("250", 10).to_decimal(5), "250");
        assert_eq!(ff("0.00125", 10).to_scientific(2), "1.2e-3");
    }

    #[test]
    fn arithmetic_round_trip() {
        let a = ff("1.25", 25);
        let b = ff("0.75", 25);
        assert_eq!(a.add(&b).to_decimal(10), "2");
        assert_eq!(a.sub(&b).to_decimal(10), "0.5");
        assert_eq!(a.mul(&b).to_decimal(10), "0.9375");
        assert_eq!(a.div(&b).to_decimal(12), "1.66666666667");
    }

    #[test]
    fn widely_separated_addition() {
        let a = ff("1", 20);
        let tiny = FixedFloat::pow10_neg(80, 20);
        assert_eq!(a.add(&tiny).to_decimal(20), "1");
    }

    #[test]
    fn sqrt_of_three() {
        let three = FixedFloat::from_int(3, 40);
        let r = three.sqrt();
        let sq = r.mul(&r);
        let tol = FixedFloat::pow10_neg(37, 40);
        assert!(sq.within(&three, &tol), "sqrt(3)^2 = {sq}");
        assert!(r.to_decimal(20).starts_with("1.732050807568877293"));
    }

    #[test]
    fn value_comparison() {
        assert_eq!(ff("1.5", 20).cmp_value(&ff("1.5000", 30)), Ordering::Equal);
        assert_eq!(ff("-2", 20).cmp_value(&ff("1", 20)), Ordering::Less);
        assert_eq!(ff("0.002", 20).cmp_value(&ff("0.001", 20)), Ordering::Greater);
    }
}
