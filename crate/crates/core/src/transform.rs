//! Series-to-fraction and equivalence transforms.
//!
//! `euler_transform` turns `sum_{n>=1} z^n / f(n)` into the continued
//! fraction `[[0, f(n) + z f(n-1)], [z, -z f(n)^2]]` (convention f(0) = 0),
//! whose N-th convergent equals the N-th partial sum of the series.
//! `equivalence_transform` rescales entries by r(n) without changing any
//! convergent ratio.

use crate::error::{Error, Result};
use crate::gcf::{Gcf, ZERO_CHECK_HORIZON};
use crate::poly::PolyQ;
use crate::rat::Rat;
use crate::ratfunc::RatFunc;

/// Raw entries of the series transform: a(n) and b(n) as rational
/// functions of n valid for n >= 2, plus the explicit (a(1), b(0), b(1)).
pub struct EulerEntries {
    pub a1: Rat,
    pub b0: Rat,
    pub b1: RatFunc,
    pub a_tail: RatFunc,
    pub b_tail: RatFunc,
}

/// The transform before denominator clearing.
pub fn euler_entries(f: &RatFunc, z: &Rat) -> Result<EulerEntries> {
    check_term_function(f)?;
    let f1 = f.eval_int(1).expect("checked nonzero denominator");
    let zf = RatFunc::constant(z.clone());
    let a_tail = f + &zf * f.shift(&Rat::from_int(-1));
    let b_tail = -(&zf * f * f);
    Ok(EulerEntries {
        a1: f1,
        b0: z.clone(),
        b1: b_tail.clone(),
        a_tail,
        b_tail,
    })
}

fn check_term_function(f: &RatFunc) -> Result<()> {
    if f.is_zero() {
        return Err(Error::ZeroValue(1));
    }
    // f(n) must be nonzero and finite for n >= 1, and finite for n >= 0
    // except that f(0) is taken to be 0 by convention.
    if let Some(n) = f.num().integer_roots_in(1, ZERO_CHECK_HORIZON).first() {
        return Err(Error::ZeroValue(*n));
    }
    if let Some(n) = f.den().integer_roots_in(1, ZERO_CHECK_HORIZON).first() {
        return Err(Error::ZeroValue(*n));
    }
    Ok(())
}

/// Euler's transform with automatic denominator clearing.
///
/// For f = N/D the clearing multiplier is r(n) = D(n) D(n-1), which turns
/// both tails into polynomials; for polynomial f nothing changes.
pub fn euler_transform(f: &RatFunc, z: &Rat) -> Result<Gcf> {
    if z.is_zero() {
        return Err(Error::ZeroMultiplier(0));
    }
    let e = euler_entries(f, z)?;
    let den = f.den();
    // r(n) = D(n) D(n-1) for n >= 1 (identically 1 for polynomial f).
    let r = RatFunc::from_poly(den * den.shift(&Rat::from_int(-1)));
    let r1 = r.eval_int(1).expect("polynomial");
    let r2 = r.eval_int(2).expect("polynomial");

    let a_tail = (&r * &e.a_tail).as_poly().ok_or_else(|| {
        Error::NonPolynomialEntry(format!("{}", &r * &e.a_tail))
    })?;
    let b_tail = (&r * r.shift(&Rat::one()) * &e.b_tail)
        .as_poly()
        .ok_or_else(|| Error::NonPolynomialEntry(format!("{}", &e.b_tail)))?;

    // Explicit first pair: a(1) honors the f(0) = 0 convention, which the
    // rational-function tail does not see.
    let a1 = &r1 * &e.a1;
    let b1 = &r1 * &r2 * e.b1.eval_int(1).expect("checked");
    let b0 = &r1 * &e.b0;
    Gcf::new(
        vec![(Rat::zero(), b0), (a1, b1)],
        a_tail,
        b_tail,
    )
}

/// Rescales a(n) by r(n) and b(n) by r(n) r(n+1), with r(0) = 1.
///
/// `r_prefix` supplies r(1), ..., r(start-1) for the explicit prefix
/// region; from `start` on, r is the given rational function. Every
/// transformed tail entry must reduce to a polynomial.
pub fn equivalence_transform(cf: &Gcf, r: &RatFunc, r_prefix: &[Rat]) -> Result<Gcf> {
    let m = cf.start() as usize;
    if r_prefix.len() != m - 1 {
        return Err(Error::OutOfRange(format!(
            "need {} prefix multiplier(s), got {}",
            m - 1,
            r_prefix.len()
        )));
    }
    if let Some(i) = r_prefix.iter().position(Rat::is_zero) {
        return Err(Error::ZeroMultiplier(i as i64 + 1));
    }
    if r.is_zero() {
        return Err(Error::ZeroMultiplier(m as i64));
    }
    for part in [r.num(), r.den()] {
        if let Some(&n) = part.integer_roots_in(m as i64, ZERO_CHECK_HORIZON).first() {
            return Err(Error::ZeroMultiplier(n));
        }
    }

    // Full multiplier sequence on the prefix: r(0) = 1, then r_prefix,
    // then the tail function.
    let r_at = |n: usize| -> Rat {
        if n == 0 {
            Rat::one()
        } else if n < m {
            r_prefix[n - 1].clone()
        } else {
            r.eval_int(n as i64).expect("no pole at checked index")
        }
    };

    let mut prefix = Vec::with_capacity(m);
    for n in 0..m {
        let a = r_at(n) * cf.a(n as u32);
        let b = r_at(n) * r_at(n + 1) * cf.b(n as u32);
        prefix.push((a, b));
    }

    let a_tail_rf = r * RatFunc::from_poly(cf.tail_a().clone());
    let a_tail = a_tail_rf
        .as_poly()
        .ok_or_else(|| Error::NonPolynomialEntry(format!("{a_tail_rf}")))?;
    let b_tail_rf = r * r.shift(&Rat::one()) * RatFunc::from_poly(cf.tail_b().clone());
    let b_tail = b_tail_rf
        .as_poly()
        .ok_or_else(|| Error::NonPolynomialEntry(format!("{b_tail_rf}")))?;

    Gcf::new(prefix, a_tail, b_tail)
}

/// Exact partial sums of sum_{n=1..N} z^n / f(n); the oracle side of the
/// transform.
pub fn partial_sums(f: &RatFunc, z: &Rat, n_max: u32) -> Result<Vec<Rat>> {
    check_term_function(f)?;
    let mut out = Vec::with_capacity(n_max as usize + 1);
    let mut sum = Rat::zero();
    let mut zpow = Rat::one();
    out.push(sum.clone());
    for n in 1..=n_max {
        zpow *= z;
        sum += &zpow / f.eval_int(i64::from(n))?;
        out.push(sum.clone());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_cf, parse_ratfunc};

    #[test]
    fn cubic_over_linear_example() {
        // f(n) = n^3/(n+1), z = 1: clearing with r(n) = n^2 + n gives
        // [[0, 2n^4-2n^3+2n-1], [2, -(n^8+2n^7)]].
        let f = parse_ratfunc("n^3/(n+1)").unwrap();
        let cf = euler_transform(&f, &Rat::one()).unwrap();
        assert_eq!(
            cf,
            parse_cf("[[0,2n^4-2n^3+2n-1],[2,-(n^8+2n^7)]]").unwrap()
        );
    }

    #[test]
    fn power_term_gives_trivial_fraction() {
        for k in 2..=4u32 {
            let f = RatFunc::from_poly(PolyQ::monomial(Rat::one(), k as usize));
            let cf = euler_transform(&f, &Rat::one()).unwrap();
            let expect = parse_cf(&format!(
                "[[0,n^{k}+(n-1)^{k}],[1,-n^{}]]",
                2 * k
            ))
            .unwrap();
            assert_eq!(cf, expect);
        }
    }

    #[test]
    fn alternating_harmonic() {
        // f(n) = n, z = -1 sums to -log 2.
        let f = RatFunc::from_poly(PolyQ::x());
        let cf = euler_transform(&f, &Rat::from_int(-1)).unwrap();
        assert_eq!(cf, parse_cf("[[0,1],[-1,n^2]]").unwrap());
    }

    #[test]
    fn vanishing_term_rejected() {
        let f = RatFunc::from_poly(PolyQ::from_ints(&[-3, 1])); // n - 3
        assert_eq!(euler_transform(&f, &Rat::one()), Err(Error::ZeroValue(3)));
    }

    #[test]
    fn partial_sum_equality_short() {
        let f = parse_ratfunc("n^3/(n+1)").unwrap();
        let cf = euler_transform(&f, &Rat::one()).unwrap();
        let sums = partial_sums(&f, &Rat::one(), 30).unwrap();
        for (n, c) in cf.convergents(30).iter().enumerate() {
            assert_eq!(c.value().unwrap(), sums[n], "mismatch at N = {n}");
        }
    }

    #[test]
    fn equivalence_identity_multiplier() {
        let cf = parse_cf("[[0,2n-1],[2,n^4]]").unwrap();
        let one = RatFunc::constant(Rat::one());
        assert_eq!(equivalence_transform(&cf, &one, &[]).unwrap(), cf);
    }

    #[test]
    fn equivalence_scaled_psi_form() {
        // [[0,(1/3)(2n-1)],[2,n^4]] with r = 3 gives [[0,2n-1],[6,9n^4]].
        let cf = parse_cf("[[0,(1/3)(2n-1)],[2,n^4]]").unwrap();
        let r = RatFunc::constant(Rat::from_int(3));
        let out = equivalence_transform(&cf, &r, &[]).unwrap();
        assert_eq!(out, parse_cf("[[0,2n-1],[6,9n^4]]").unwrap());
        // Convergent ratios are unchanged.
        let before = cf.convergents(50);
        let after = out.convergents(50);
        for n in 0..=50usize {
            assert_eq!(before[n].value(), after[n].value());
        }
    }

    #[test]
    fn equivalence_rejects_zero_multiplier() {
        let cf = parse_cf("[[0,1],[1,n^2]]").unwrap();
        // r(n) = n - 5 vanishes at n = 5.
        let r = parse_ratfunc("n-5").unwrap();
        assert_eq!(
            equivalence_transform(&cf, &r, &[]),
            Err(Error::ZeroMultiplier(5))
        );
    }
}
