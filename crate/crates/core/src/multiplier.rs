//! The polynomial multiplier method.
//!
//! A multiplier polynomial P divides x^k P(x+1) + s (x-1)^k P(x-1) for
//! s = +1 or -1; the quotient R gives the continued fraction
//! `[[0, R(n)], [1/P(1)^2, -s n^(2k)]]` for the sum of s^(n-1) over
//! n^k P(n) P(n+1), and the partial fraction decomposition expresses that
//! sum exactly over the period basis when the leftover part telescopes.

use serde::{Deserialize, Serialize};

use crate::decompose::decompose_core;
use crate::error::{Error, Result};
use crate::gcf::Gcf;
use crate::period::{BasisConstant, RationalPeriod};
use crate::poly::PolyQ;
use crate::rat::Rat;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    /// Non-alternating sums: P | x^k P(x+1) + (x-1)^k P(x-1).
    Plus,
    /// Alternating sums: P | x^k P(x+1) - (x-1)^k P(x-1).
    Minus,
}

impl Sign {
    fn unit(&self) -> Rat {
        match self {
            Sign::Plus => Rat::one(),
            Sign::Minus => Rat::from_int(-1),
        }
    }
}

impl std::str::FromStr for Sign {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plus" | "+" => Ok(Sign::Plus),
            "minus" | "-" => Ok(Sign::Minus),
            _ => Err(Error::OutOfRange(format!("unknown sign {s:?}"))),
        }
    }
}

/// The combination x^k P(x+1) +/- (x-1)^k P(x-1).
pub fn shifted_combination(p: &PolyQ, k: u32, sign: Sign) -> PolyQ {
    let one = Rat::one();
    let xk = PolyQ::x().pow(k);
    let xm1k = PolyQ::from_ints(&[-1, 1]).pow(k);
    let plus = &xk * p.shift(&one);
    let minus = (&xm1k * p.shift(&Rat::from_int(-1))).scale(&sign.unit());
    plus + minus
}

/// Returns R = (x^k P(x+1) +/- (x-1)^k P(x-1)) / P when the division is
/// exact, `None` otherwise.
pub fn divisibility_check(p: &PolyQ, k: u32, sign: Sign) -> Option<PolyQ> {
    if p.is_zero() {
        return None;
    }
    shifted_combination(p, k, sign).exact_div(p)
}

/// The continued fraction `[[0, R(n)], [1/P(1)^2, -s n^(2k)]]`.
///
/// Same tail as the series transform of f(n) = s n^k P(n) P(n+1) with
/// z = s after rescaling by r(n) = s/P(n)^2, which is how the tests pin
/// its provenance.
pub fn multiplier_cf(p: &PolyQ, k: u32, sign: Sign) -> Result<Gcf> {
    let r = divisibility_check(p, k, sign)
        .ok_or_else(|| Error::NotDivisible(p.to_text('x')))?;
    let p1 = p.eval_int(1);
    if p.eval_int(0).is_zero() || p1.is_zero() {
        return Err(Error::ZeroAtIntegerPole(if p1.is_zero() { 1 } else { 0 }));
    }
    let b0 = (&p1 * &p1).recip();
    let tail_b = PolyQ::monomial(-sign.unit(), 2 * k as usize);
    Gcf::simple(Rat::zero(), b0, r, tail_b)
}

/// Exact value of sum_{n>=1} s^(n-1) / (n^k P(n) P(n+1)) over the period
/// basis. Returns the period, whether the non-singular part telescoped,
/// and the residual W = U +/- V(x+1) (zero exactly when telescoped).
///
/// For the non-alternating sign the 1/x coefficient must vanish or the
/// series diverges.
pub fn decompose_period(p: &PolyQ, k: u32, sign: Sign) -> Result<(RationalPeriod, bool, PolyQ)> {
    let d = decompose_core(p, k)?;
    let mut period = RationalPeriod::zero();
    for (idx, cj) in d.c.iter().enumerate() {
        let j = idx as u32 + 1;
        if cj.is_zero() {
            continue;
        }
        match (j, sign) {
            (1, Sign::Plus) => {
                return Err(Error::ConvergenceViolation(cj.to_string()));
            }
            (1, Sign::Minus) => period.add_term(BasisConstant::Log2, cj.clone()),
            (_, Sign::Plus) => period.add_term(BasisConstant::Zeta(j), cj.clone()),
            (_, Sign::Minus) => {
                // sum (-1)^(n-1)/n^j = (1 - 2^(1-j)) zeta(j)
                let factor = Rat::one() - Rat::from_int(2).pow(1 - j as i32);
                period.add_term(BasisConstant::Zeta(j), cj * factor);
            }
        }
    }
    // U/P(x+1) + V/P(x) telescopes against the sign pattern exactly when
    // U = -V(x+1) (plus) or U = V(x+1) (minus); the surviving boundary
    // term is V(1)/P(1).
    let v_shift = d.v.shift(&Rat::one());
    let residual = match sign {
        Sign::Plus => &d.u + &v_shift,
        Sign::Minus => &d.u - &v_shift,
    };
    let telescoped = residual.is_zero();
    if telescoped {
        period.add_term(BasisConstant::One, d.v.eval_int(1) / p.eval_int(1));
    }
    Ok((period, telescoped, residual))
}

/// Everything the method produces for one (P, k, sign) instance.
#[derive(Clone, Debug, Serialize)]
pub struct MultiplierResult {
    #[serde(serialize_with = "ser_poly_x")]
    pub p: PolyQ,
    pub k: u32,
    pub sign: Sign,
    #[serde(serialize_with = "ser_poly_n")]
    pub r: PolyQ,
    pub cf: Gcf,
    pub period: RationalPeriod,
    pub telescoped: bool,
}

fn ser_poly_x<S: serde::Serializer>(p: &PolyQ, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_text('x'))
}

fn ser_poly_n<S: serde::Serializer>(p: &PolyQ, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_text('n'))
}

pub fn multiplier_result(p: &PolyQ, k: u32, sign: Sign) -> Result<MultiplierResult> {
    let cf = multiplier_cf(p, k, sign)?;
    let r = divisibility_check(p, k, sign).expect("checked by multiplier_cf");
    let (raw_period, telescoped, _residual) = decompose_period(p, k, sign)?;
    // The fraction's value is b(0) * P(1)^2 * S + a(0) with a(0) = 0 and
    // b(0) = 1/P(1)^2, i.e. exactly S.
    Ok(MultiplierResult {
        p: p.clone(),
        k,
        sign,
        r,
        cf,
        period: raw_period,
        telescoped,
    })
}

/// How a catalog polynomial's admissible exponents are described.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Admissible {
    /// k = residue (mod modulus), k >= 2.
    Congruence { residue: u32, modulus: u32 },
    /// A single exponent.
    ExactK(u32),
}

impl Admissible {
    pub fn contains(&self, k: u32) -> bool {
        match self {
            Admissible::Congruence { residue, modulus } => k >= 2 && k % modulus == *residue,
            Admissible::ExactK(k0) => k == *k0,
        }
    }

    /// The smallest `count` admissible exponents (fewer for an exact one).
    pub fn smallest(&self, count: usize) -> Vec<u32> {
        match self {
            Admissible::Congruence { .. } => {
                (2..).filter(|&k| self.contains(k)).take(count).collect()
            }
            Admissible::ExactK(k0) => vec![*k0],
        }
    }
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub p: PolyQ,
    pub admissible: Admissible,
}

/// All known multiplier polynomials for the given sign.
pub fn catalog(sign: Sign) -> Vec<CatalogEntry> {
    let entry = |coeffs: &[i64], admissible| CatalogEntry {
        p: PolyQ::from_ints(coeffs),
        admissible,
    };
    let cong = |residue, modulus| Admissible::Congruence { residue, modulus };
    match sign {
        Sign::Plus => vec![
            entry(&[-1, 2], cong(0, 2)),
            entry(&[1, -3, 3], cong(2, 3)),
            entry(&[1, -2, 2], cong(3, 4)),
            entry(&[1, -1, 1], cong(5, 6)),
            entry(&[4, -14, 19, -10, 5], Admissible::ExactK(5)),
        ],
        Sign::Minus => vec![
            entry(&[-1, 2], cong(1, 2)),
            entry(&[1, -2, 2], cong(1, 4)),
            entry(&[1, -1, 1], cong(2, 6)),
        ],
    }
}

/// Brute-force search for multiplier polynomials of the given degree and
/// coefficient height for one exponent.
///
/// Candidates are restricted by the reflection identity
/// P(1-x) = (-1)^deg P(x), which every multiplier polynomial satisfies;
/// the upper half of the coefficients is enumerated and the lower half is
/// forced by the identity. Results are primitive with positive leading
/// coefficient. No completeness claim.
pub fn search_multipliers(k: u32, sign: Sign, max_degree: u32, max_height: i64) -> Vec<PolyQ> {
    let mut found: Vec<PolyQ> = Vec::new();
    for deg in 0..=max_degree as usize {
        let free = deg / 2 + 1; // c_deg, c_(deg-2), ...
        let mut choice = vec![0i64; free];
        loop {
            // Advance the odometer; c_deg (index 0) stays >= 1.
            let mut idx = free;
            let advanced = loop {
                if idx == 0 {
                    break false;
                }
                idx -= 1;
                let lo = if idx == 0 { 1 } else { -max_height };
                if choice[idx] < max_height {
                    choice[idx] += 1;
                    for c in choice.iter_mut().skip(idx + 1) {
                        *c = -max_height;
                    }
                    break true;
                }
                choice[idx] = lo;
            };
            if !advanced {
                break;
            }
            if let Some(p) = reflected_poly(deg, &choice, max_height) {
                if divisibility_check(&p, k, sign).is_some() {
                    let p = primitive_normal(&p);
                    if !found.contains(&p) {
                        found.push(p);
                    }
                }
            }
        }
    }
    found.sort_by_key(|p| (p.degree(), p.height()));
    found
}

/// Fills in the determined coefficients from the reflection identity;
/// `None` when they are non-integral, exceed the height bound, or the
/// identity fails.
fn reflected_poly(deg: usize, free: &[i64], max_height: i64) -> Option<PolyQ> {
    use crate::bernoulli::binomial;
    let mut coeffs = vec![Rat::zero(); deg + 1];
    for (pos, &v) in free.iter().enumerate() {
        coeffs[deg - 2 * pos] = Rat::from_int(v);
    }
    // For i of parity opposite to deg: c_i = -(1/2) sum_{j>i} C(j,i) c_j.
    for i in (0..deg).rev() {
        if (deg - i) % 2 == 0 {
            continue;
        }
        let mut sum = Rat::zero();
        for j in (i + 1)..=deg {
            sum += Rat::from_bigint(binomial(j as u64, i as u64)) * &coeffs[j];
        }
        let ci = -sum / Rat::from_int(2);
        if !ci.is_integer() || ci.abs() > Rat::from_int(max_height) {
            return None;
        }
        coeffs[i] = ci;
    }
    let p = PolyQ::from_coeffs(coeffs);
    if p.degree() != Some(deg) && deg > 0 {
        return None;
    }
    // Verify the full identity (the parity-matching rows are not enforced
    // above).
    let sign = if deg % 2 == 0 { Rat::one() } else { Rat::from_int(-1) };
    let lhs = p.shift(&Rat::one()); // P(x+1)
    let rhs = PolyQ::from_coeffs(
        // (-1)^deg P(-x)
        p.coeffs()
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let s = if i % 2 == 0 { sign.clone() } else { -&sign };
                c * s
            })
            .collect(),
    );
    (lhs == rhs).then_some(p)
}

/// Integer-primitive form with positive leading coefficient.
fn primitive_normal(p: &PolyQ) -> PolyQ {
    use num::{BigInt, Integer, One, Signed, Zero};
    if p.is_zero() {
        return PolyQ::zero();
    }
    let mut den = BigInt::one();
    for c in p.coeffs() {
        den = den.lcm(c.denom());
    }
    let ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&den / c.denom()))
        .collect();
    let mut g = BigInt::zero();
    for v in &ints {
        g = g.gcd(v);
    }
    if ints.last().map(Signed::is_negative).unwrap_or(false) {
        g = -g;
    }
    PolyQ::from_coeffs(
        ints.into_iter()
            .map(|v| Rat::from_bigint(v / &g))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_cf, parse_poly};
    use crate::ratfunc::RatFunc;
    use crate::transform::{equivalence_transform, euler_transform};

    #[test]
    fn linear_even_case() {
        let p = parse_poly("2x-1").unwrap();
        let r = divisibility_check(&p, 2, Sign::Plus).unwrap();
        assert_eq!(r, parse_poly("2x^2-2x+3").unwrap());
        assert!(divisibility_check(&p, 3, Sign::Plus).is_none());
    }

    #[test]
    fn quintic_quartic_case() {
        let p = parse_poly("5x^4-10x^3+19x^2-14x+4").unwrap();
        assert!(divisibility_check(&p, 5, Sign::Plus).is_some());
        assert!(divisibility_check(&p, 4, Sign::Plus).is_none());
    }

    #[test]
    fn multiplier_cf_linear() {
        let p = parse_poly("2x-1").unwrap();
        let cf = multiplier_cf(&p, 2, Sign::Plus).unwrap();
        assert_eq!(cf, parse_cf("[[0,2n^2-2n+3],[1,-n^4]]").unwrap());
    }

    #[test]
    fn multiplier_cf_matches_series_route() {
        // The same fraction must come out of the series transform of
        // f(n) = s n^k P(n) P(n+1) rescaled by s/P(n)^2.
        for (coeffs, k, sign) in [
            (vec![-1i64, 2], 2, Sign::Plus),
            (vec![1, -2, 2], 3, Sign::Plus),
            (vec![-1, 2], 3, Sign::Minus),
        ] {
            let p = PolyQ::from_ints(&coeffs);
            let s = sign.unit();
            let f = (&p * p.shift(&Rat::one()) * PolyQ::x().pow(k)).scale(&s);
            let raw = euler_transform(&RatFunc::from_poly(f), &s).unwrap();
            let r = RatFunc::new(PolyQ::constant(s.clone()), &p * &p).unwrap();
            let r1 = r.eval_int(1).unwrap();
            let via_series = equivalence_transform(&raw, &r, &vec![r1; raw.start() as usize - 1])
                .unwrap();
            assert_eq!(via_series, multiplier_cf(&p, k, sign).unwrap());
        }
    }

    #[test]
    fn telescoping_decomposition_linear() {
        let p = parse_poly("2x-1").unwrap();
        let (period, telescoped, residual) = decompose_period(&p, 2, Sign::Plus).unwrap();
        assert!(telescoped);
        assert!(residual.is_zero());
        let mut expect = RationalPeriod::one_times(Rat::from_int(2));
        expect.add_term(BasisConstant::Zeta(2), Rat::from_int(-1));
        assert_eq!(period, expect);
    }

    #[test]
    fn trivial_multiplier_gives_pure_zeta() {
        let (period, telescoped, _) = decompose_period(&PolyQ::one(), 2, Sign::Plus).unwrap();
        assert!(telescoped);
        assert_eq!(
            period,
            RationalPeriod::single(BasisConstant::Zeta(2), Rat::one())
        );
    }

    #[test]
    fn divergent_plus_decomposition_rejected() {
        // 1/(x^2 (x+2)(x+3)) has a nonzero 1/x coefficient.
        let p = parse_poly("x+2").unwrap();
        assert!(matches!(
            decompose_period(&p, 2, Sign::Plus),
            Err(Error::ConvergenceViolation(_))
        ));
    }

    #[test]
    fn alternating_linear_k1_boundary() {
        // sum (-1)^(n-1)/(n (2n-1)(2n+1)) = 1 - log 2.
        let p = parse_poly("2x-1").unwrap();
        let (period, telescoped, _) = decompose_period(&p, 1, Sign::Minus).unwrap();
        assert!(telescoped);
        let mut expect = RationalPeriod::one_times(Rat::one());
        expect.add_term(BasisConstant::Log2, Rat::from_int(-1));
        assert_eq!(period, expect);
    }

    #[test]
    fn catalog_shapes() {
        assert_eq!(catalog(Sign::Plus).len(), 5);
        assert_eq!(catalog(Sign::Minus).len(), 3);
        let quartic = &catalog(Sign::Plus)[4];
        assert_eq!(quartic.admissible.smallest(3), vec![5]);
        assert_eq!(
            catalog(Sign::Minus)[0].admissible.smallest(3),
            vec![3, 5, 7]
        );
    }

    #[test]
    fn search_finds_known_entries() {
        let hits = search_multipliers(2, Sign::Plus, 2, 3);
        assert!(hits.contains(&parse_poly("2x-1").unwrap()));
        assert!(hits.contains(&parse_poly("3x^2-3x+1").unwrap()));
        let hits = search_multipliers(3, Sign::Minus, 1, 3);
        assert!(hits.contains(&parse_poly("2x-1").unwrap()));
    }
}
