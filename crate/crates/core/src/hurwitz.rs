//! High-precision numerical oracle: Hurwitz zeta by Euler-Maclaurin and
//! the basis constants.
//!
//! Everything here is built from exact rational partial sums plus exactly
//! representable correction terms, converted to `FixedFloat` once at the
//! end, so the only error is the truncation of the tail expansion.
//!
//! G and G3 are defined through Hurwitz zeta differences and pi comes from
//! a Machin arctangent formula, which keeps this oracle independent of
//! every continued fraction it is used to check.

use crate::bernoulli::bernoulli_table;
use crate::fixed::FixedFloat;
use crate::period::{BasisConstant, RationalPeriod};
use crate::rat::Rat;

/// Hurwitz zeta(s, a) for integer s >= 2 and rational 0 < a <= 1.
///
/// Direct terms up to a cutoff, then the Euler-Maclaurin tail with
/// Bernoulli corrections; the first omitted term is far below 10^-prec
/// for the parameter choices here.
pub fn hurwitz_zeta(s: u32, a: &Rat, prec: u32) -> FixedFloat {
    assert!(s >= 2, "hurwitz_zeta: s must be >= 2");
    assert!(
        !a.is_negative() && !a.is_zero() && *a <= Rat::one(),
        "hurwitz_zeta: a must satisfy 0 < a <= 1"
    );
    let cutoff = i64::from(prec.max(30));
    let corrections = (2 * prec / 3 + 2) as usize;
    hurwitz_zeta_with(s, a, prec, cutoff, corrections)
}

/// Parameterized version used by self-consistency checks.
pub fn hurwitz_zeta_with(
    s: u32,
    a: &Rat,
    prec: u32,
    cutoff: i64,
    corrections: usize,
) -> FixedFloat {
    let bern = bernoulli_table(2 * corrections + 2);
    let neg_s = -(s as i32);
    let mut sum = Rat::zero();
    for n in 0..cutoff {
        sum += (a + Rat::from_int(n)).pow(neg_s);
    }
    let x = a + Rat::from_int(cutoff);
    // Integral term, half term, then Bernoulli corrections.
    sum += x.pow(1 - s as i32) / Rat::from_int(i64::from(s) - 1);
    sum += x.pow(neg_s) / Rat::from_int(2);
    let x_inv_sq = x.pow(-2);
    // poch = s(s+1)...(s+2j-2), fact = (2j)!, xpow = x^(-s-2j+1)
    let mut poch = Rat::from_int(i64::from(s));
    let mut fact = Rat::from_int(2);
    let mut xpow = x.pow(neg_s - 1);
    for j in 1..=corrections {
        sum += &bern[2 * j] / &fact * &poch * &xpow;
        let t = 2 * j as i64;
        poch *= Rat::from_int(i64::from(s) + t - 1) * Rat::from_int(i64::from(s) + t);
        fact *= Rat::from_int(t + 1) * Rat::from_int(t + 2);
        xpow *= &x_inv_sq;
    }
    FixedFloat::from_rat(&sum, prec)
}

/// arctan(1/x) by its alternating series, exactly, to below 10^-(prec+6).
fn atan_inv(x: i64, prec: u32) -> Rat {
    let terms = ((f64::from(prec) + 8.0) / (2.0 * (x as f64).log10())).ceil() as i64 + 1;
    let mut sum = Rat::zero();
    let xi = Rat::from_int(x);
    let x2_inv = xi.pow(-2);
    let mut xpow = xi.recip();
    for j in 0..=terms {
        let term = &xpow / Rat::from_int(2 * j + 1);
        if j % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
        xpow *= &x2_inv;
    }
    sum
}

/// pi by Machin's formula 16 atan(1/5) - 4 atan(1/239).
pub fn pi(prec: u32) -> FixedFloat {
    let v = Rat::from_int(16) * atan_inv(5, prec) - Rat::from_int(4) * atan_inv(239, prec);
    FixedFloat::from_rat(&v, prec)
}

/// log 2 from the binary series sum 1/(n 2^n).
pub fn log2(prec: u32) -> FixedFloat {
    let terms = ((f64::from(prec) + 8.0) / std::f64::consts::LOG10_2).ceil() as i64 + 1;
    let mut sum = Rat::zero();
    let half = Rat::new(1, 2);
    let mut pow = Rat::one();
    for n in 1..=terms {
        pow *= &half;
        sum += &pow / Rat::from_int(n);
    }
    FixedFloat::from_rat(&sum, prec)
}

/// Independent cross-check for log 2: iterated averaging (Euler summation)
/// of the alternating harmonic partial sums.
pub fn log2_alternating_accelerated(prec: u32) -> FixedFloat {
    let work = prec + 10;
    // Row 0: partial sums of 1 - 1/2 + 1/3 - ...; each averaging pass
    // halves the error, so ~3.33 rows per requested digit.
    let n = (f64::from(work) * 3.33) as usize + 8;
    let mut row: Vec<FixedFloat> = Vec::with_capacity(n);
    let mut sum = Rat::zero();
    for i in 1..=n {
        let t = Rat::new(if i % 2 == 1 { 1 } else { -1 }, i as i64);
        sum += t;
        row.push(FixedFloat::from_rat(&sum, work));
    }
    let half = Rat::new(1, 2);
    while row.len() > 1 {
        row = row
            .windows(2)
            .map(|w| w[0].add(&w[1]).mul_rat(&half))
            .collect();
    }
    row.pop().unwrap().with_prec(prec)
}

/// sqrt(3).
pub fn sqrt3(prec: u32) -> FixedFloat {
    FixedFloat::from_int(3, prec + 4).sqrt().with_prec(prec)
}

/// One basis constant at the requested precision.
pub fn constant(c: &BasisConstant, prec: u32) -> FixedFloat {
    let work = prec + 6;
    let v = match c {
        BasisConstant::One => FixedFloat::one(work),
        BasisConstant::Zeta(k) => hurwitz_zeta(*k, &Rat::one(), work),
        BasisConstant::Log2 => log2(work),
        BasisConstant::Catalan => {
            let d = hurwitz_zeta(2, &Rat::new(1, 4), work)
                .sub(&hurwitz_zeta(2, &Rat::new(3, 4), work));
            d.mul_rat(&Rat::new(1, 16))
        }
        BasisConstant::G3 => {
            let d = hurwitz_zeta(2, &Rat::new(1, 3), work)
                .sub(&hurwitz_zeta(2, &Rat::new(2, 3), work));
            d.mul_rat(&Rat::new(1, 9))
        }
        BasisConstant::Pi3 => pi(work).powi(3),
        BasisConstant::Pi3OverSqrt3 => pi(work).powi(3).div(&sqrt3(work)),
    };
    v.with_prec(prec)
}

/// Numeric value of an exact period combination.
pub fn period_value(p: &RationalPeriod, prec: u32) -> FixedFloat {
    let prec = prec.max(10);
    let work = prec + 6;
    let mut acc = FixedFloat::zero(work);
    for (c, coeff) in p.iter() {
        acc = acc.add(&constant(c, work).mul_rat(coeff));
    }
    acc.with_prec(prec)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tol(e: u32, prec: u32) -> FixedFloat {
        FixedFloat::pow10_neg(e, prec)
    }

    #[test]
    fn zeta2_matches_pi_squared_over_six() {
        // Two independent routes: Euler-Maclaurin vs Machin.
        let z = hurwitz_zeta(2, &Rat::one(), 30);
        let p = pi(30);
        let alt = p.mul(&p).mul_rat(&Rat::new(1, 6));
        assert!(z.within(&alt, &tol(28, 30)), "{z} vs {alt}");
    }

    #[test]
    fn half_argument_triples_zeta2() {
        let z = hurwitz_zeta(2, &Rat::new(1, 2), 30);
        let three = hurwitz_zeta(2, &Rat::one(), 30).mul_rat(&Rat::from_int(3));
        assert!(z.within(&three, &tol(27, 30)));
    }

    #[test]
    fn zeta3_and_second_derivative_sign() {
        let z3 = hurwitz_zeta(3, &Rat::one(), 30);
        assert!(z3.to_decimal(15).starts_with("1.2020569031595"));
        // psi''(1) = -2 zeta(3)
        let psi2 = z3.mul_rat(&Rat::from_int(-2));
        assert!(psi2.is_negative());
    }

    #[test]
    fn euler_maclaurin_self_consistency() {
        let a = Rat::new(2, 3);
        let prec = 30;
        let corr = (2 * prec / 3 + 2) as usize;
        let v1 = hurwitz_zeta_with(2, &a, prec, 50, corr);
        let v2 = hurwitz_zeta_with(2, &a, prec, 100, corr);
        assert!(v1.within(&v2, &tol(27, prec)));
    }

    #[test]
    fn orthogonality_sums() {
        let prec = 30;
        let z2 = hurwitz_zeta(2, &Rat::one(), prec);
        let m3 = hurwitz_zeta(2, &Rat::new(1, 3), prec)
            .add(&hurwitz_zeta(2, &Rat::new(2, 3), prec));
        assert!(m3.within(&z2.mul_rat(&Rat::from_int(8)), &tol(25, prec)));
        let m4 = hurwitz_zeta(2, &Rat::new(1, 4), prec)
            .add(&hurwitz_zeta(2, &Rat::new(3, 4), prec));
        assert!(m4.within(&z2.mul_rat(&Rat::from_int(12)), &tol(25, prec)));
    }

    #[test]
    fn log2_dual_oracles_agree() {
        let prec = 30;
        let a = log2(prec);
        let b = log2_alternating_accelerated(prec);
        assert!(a.within(&b, &tol(25, prec)), "{a} vs {b}");
        assert!(a.to_decimal(15).starts_with("0.6931471805599"));
    }

    #[test]
    fn catalan_and_g3_reference_digits() {
        let g = constant(&BasisConstant::Catalan, 30);
        assert!(g.to_decimal(15).starts_with("0.9159655941772"));
        let g3 = constant(&BasisConstant::G3, 30);
        assert!(g3.to_decimal(10).starts_with("0.781302"));
    }

    #[test]
    fn period_value_of_empty_is_zero() {
        assert!(period_value(&RationalPeriod::zero(), 20).is_zero());
    }
}
