//! Continued fractions and closed forms for the first and second
//! derivatives of the digamma function at small rational arguments.
//!
//! For z > 1/2 the fractions are `[[0,(2z-1)(2n-1)],[2,n^4]]` for the
//! first derivative and `[[0,(2n-1)(n^2-n+1+2z(z-1))],[-2,-n^6]]` for the
//! second; the shift identities psi'(z) = psi'(z+1) + 1/z^2 and
//! psi''(z) = psi''(z+1) - 2/z^3 extend both to z > 1/2 - k with an exact
//! rational a(0).
//!
//! At the arguments r/m with m in {1, 2, 3, 4, 6} the values are
//! combinations of zeta(2), zeta(3), the conductor-3/4 L-values, and pi^3;
//! the closed-form table and the twelve scaled fraction identities derived
//! from it live here, together with the numeric report that checks them.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fixed::FixedFloat;
use crate::gcf::Gcf;
use crate::hurwitz::{hurwitz_zeta, period_value};
use crate::period::{BasisConstant, RationalPeriod};
use crate::poly::PolyQ;
use crate::rat::Rat;
use crate::ratfunc::RatFunc;
use crate::transform::equivalence_transform;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PsiOrder {
    First,
    Second,
}

/// Which derivative fraction to build: order, argument r/m, and shift.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PsiSpec {
    pub r: u32,
    pub m: u32,
    pub order: PsiOrder,
    pub shift: u32,
}

impl PsiSpec {
    pub fn new(r: u32, m: u32, order: PsiOrder, shift: u32) -> Result<PsiSpec> {
        if !matches!(m, 1 | 2 | 3 | 4 | 6) {
            return Err(Error::DomainViolation(format!(
                "modulus {m} not in {{1, 2, 3, 4, 6}}"
            )));
        }
        let coprime = {
            let (mut a, mut b) = (r, m);
            while b != 0 {
                (a, b) = (b, a % b);
            }
            a == 1
        };
        if !((r == 1 && m == 1) || (1 <= r && r < m && coprime)) {
            return Err(Error::DomainViolation(format!(
                "argument {r}/{m} must be reduced with 1 <= r < m (or 1/1)"
            )));
        }
        let spec = PsiSpec { r, m, order, shift };
        // The fractions converge for z + shift > 1/2.
        if spec.z() + Rat::from(shift) <= Rat::new(1, 2) {
            return Err(Error::DomainViolation(format!(
                "z + shift = {} must exceed 1/2",
                spec.z() + Rat::from(shift)
            )));
        }
        Ok(spec)
    }

    pub fn z(&self) -> Rat {
        Rat::new(i64::from(self.r), i64::from(self.m))
    }
}

/// The shifted derivative fraction with exact rational a(0).
pub fn psi_cf(spec: &PsiSpec) -> Result<Gcf> {
    let z = spec.z();
    let zk = &z + Rat::from(spec.shift);
    let two_n_minus_1 = PolyQ::from_ints(&[-1, 2]);
    match spec.order {
        PsiOrder::First => {
            // a(0) = sum_{0<=j<shift} 1/(z+j)^2
            let mut a0 = Rat::zero();
            for j in 0..spec.shift {
                a0 += (&z + Rat::from(j)).pow(-2);
            }
            let slope = Rat::from_int(2) * &zk - Rat::one();
            let tail_a = two_n_minus_1.scale(&slope);
            Gcf::simple(a0, Rat::from_int(2), tail_a, PolyQ::monomial(Rat::one(), 4))
        }
        PsiOrder::Second => {
            let mut a0 = Rat::zero();
            for j in 0..spec.shift {
                a0 -= Rat::from_int(2) * (&z + Rat::from(j)).pow(-3);
            }
            // n^2 - n + 1 + 2 (z+k)(z+k-1)
            let c = Rat::one() + Rat::from_int(2) * &zk * (&zk - Rat::one());
            let quad = PolyQ::from_coeffs(vec![c, Rat::from_int(-1), Rat::one()]);
            let tail_a = &two_n_minus_1 * &quad;
            Gcf::simple(
                a0,
                Rat::from_int(-2),
                tail_a,
                PolyQ::monomial(Rat::from_int(-1), 6),
            )
        }
    }
}

/// Closed form of the derivative value at r/m over the period basis.
pub fn psi_table(r: u32, m: u32, order: PsiOrder) -> Result<RationalPeriod> {
    use BasisConstant::*;
    let entry = |pairs: &[(BasisConstant, Rat)]| {
        let mut p = RationalPeriod::zero();
        for (c, v) in pairs {
            p.add_term(*c, v.clone());
        }
        p
    };
    let int = Rat::from_int;
    Ok(match (r, m, order) {
        (1, 1, PsiOrder::First) => entry(&[(Zeta(2), int(1))]),
        (1, 2, PsiOrder::First) => entry(&[(Zeta(2), int(3))]),
        (1, 3, PsiOrder::First) => entry(&[(Zeta(2), int(4)), (G3, Rat::new(9, 2))]),
        (2, 3, PsiOrder::First) => entry(&[(Zeta(2), int(4)), (G3, Rat::new(-9, 2))]),
        (1, 4, PsiOrder::First) => entry(&[(Zeta(2), int(6)), (Catalan, int(8))]),
        (3, 4, PsiOrder::First) => entry(&[(Zeta(2), int(6)), (Catalan, int(-8))]),
        (1, 6, PsiOrder::First) => entry(&[(Zeta(2), int(12)), (G3, Rat::new(45, 2))]),
        (5, 6, PsiOrder::First) => entry(&[(Zeta(2), int(12)), (G3, Rat::new(-45, 2))]),
        (1, 1, PsiOrder::Second) => entry(&[(Zeta(3), int(-2))]),
        (1, 2, PsiOrder::Second) => entry(&[(Zeta(3), int(-14))]),
        (1, 3, PsiOrder::Second) => {
            entry(&[(Zeta(3), int(-26)), (Pi3OverSqrt3, Rat::new(-4, 3))])
        }
        (2, 3, PsiOrder::Second) => {
            entry(&[(Zeta(3), int(-26)), (Pi3OverSqrt3, Rat::new(4, 3))])
        }
        (1, 4, PsiOrder::Second) => entry(&[(Zeta(3), int(-56)), (Pi3, int(-2))]),
        (3, 4, PsiOrder::Second) => entry(&[(Zeta(3), int(-56)), (Pi3, int(2))]),
        (1, 6, PsiOrder::Second) => entry(&[(Zeta(3), int(-182)), (Pi3OverSqrt3, int(-12))]),
        (5, 6, PsiOrder::Second) => entry(&[(Zeta(3), int(-182)), (Pi3OverSqrt3, int(12))]),
        _ => {
            return Err(Error::OutOfRange(format!(
                "no table row for argument {r}/{m}"
            )))
        }
    })
}

/// Numeric reference value of the derivative at 0 < a <= 1: the first
/// derivative is the Hurwitz zeta at s = 2, the second is -2 times the
/// value at s = 3.
pub fn psi_reference(r: u32, m: u32, order: PsiOrder, prec: u32) -> FixedFloat {
    let a = Rat::new(i64::from(r), i64::from(m));
    match order {
        PsiOrder::First => hurwitz_zeta(2, &a, prec),
        PsiOrder::Second => hurwitz_zeta(3, &a, prec).mul_rat(&Rat::from_int(-2)),
    }
}

/// One of the twelve scaled derivative identities.
#[derive(Clone, Debug)]
pub struct PsiIdentity {
    pub id: &'static str,
    pub spec: PsiSpec,
    /// Overall scale applied to the fraction's value.
    pub scale: Rat,
    /// Constant equivalence multiplier that clears denominators.
    pub multiplier: Rat,
    pub lhs: RationalPeriod,
    /// Canonical text of the expected fraction.
    pub target: &'static str,
}

/// Builds a scaled identity's fraction from the shifted derivative
/// fraction, the value scale, and the equivalence multiplier.
pub fn psi_identity_cf(ident: &PsiIdentity) -> Result<Gcf> {
    let base = psi_cf(&ident.spec)?;
    let scaled = base.scale_value(&ident.scale)?;
    let r = RatFunc::constant(ident.multiplier.clone());
    equivalence_transform(&scaled, &r, &[])
}

/// The twelve printed identities: six for each derivative order.
pub fn psi_identities() -> Vec<PsiIdentity> {
    use PsiOrder::*;
    let mut out = Vec::new();
    let mut push = |id: &'static str,
                    order: PsiOrder,
                    r: u32,
                    m: u32,
                    shift: u32,
                    scale: Rat,
                    multiplier: i64,
                    lhs: &[(BasisConstant, Rat)],
                    target: &'static str| {
        let mut period = RationalPeriod::zero();
        for (c, v) in lhs {
            period.add_term(*c, v.clone());
        }
        out.push(PsiIdentity {
            id,
            spec: PsiSpec::new(r, m, order, shift).expect("valid spec"),
            scale,
            multiplier: Rat::from_int(multiplier),
            lhs: period,
            target,
        });
    };
    use BasisConstant::*;
    let int = Rat::from_int;
    push(
        "8z2-9G3",
        First,
        2,
        3,
        0,
        int(2),
        3,
        &[(Zeta(2), int(8)), (G3, int(-9))],
        "[[0,2*n-1],[12,9*n^4]]",
    );
    push(
        "8z2+9G3",
        First,
        1,
        3,
        1,
        int(2),
        3,
        &[(Zeta(2), int(8)), (G3, int(9))],
        "[[18,10*n-5],[12,9*n^4]]",
    );
    push(
        "3z2-4G",
        First,
        3,
        4,
        0,
        Rat::new(1, 2),
        2,
        &[(Zeta(2), int(3)), (Catalan, int(-4))],
        "[[0,2*n-1],[2,4*n^4]]",
    );
    push(
        "3z2+4G",
        First,
        1,
        4,
        1,
        Rat::new(1, 2),
        2,
        &[(Zeta(2), int(3)), (Catalan, int(4))],
        "[[8,6*n-3],[2,4*n^4]]",
    );
    push(
        "8z2-15G3",
        First,
        5,
        6,
        0,
        Rat::new(2, 3),
        3,
        &[(Zeta(2), int(8)), (G3, int(-15))],
        "[[0,4*n-2],[4,9*n^4]]",
    );
    push(
        "8z2+15G3",
        First,
        1,
        6,
        1,
        Rat::new(2, 3),
        3,
        &[(Zeta(2), int(8)), (G3, int(15))],
        "[[24,8*n-4],[4,9*n^4]]",
    );
    push(
        "39z3-2p3s3",
        Second,
        2,
        3,
        0,
        Rat::new(-3, 2),
        9,
        &[(Zeta(3), int(39)), (Pi3OverSqrt3, int(-2))],
        "[[0,18*n^3-27*n^2+19*n-5],[27,-81*n^6]]",
    );
    push(
        "39z3+2p3s3",
        Second,
        1,
        3,
        1,
        Rat::new(-3, 2),
        9,
        &[(Zeta(3), int(39)), (Pi3OverSqrt3, int(2))],
        "[[81,18*n^3-27*n^2+43*n-17],[27,-81*n^6]]",
    );
    push(
        "28z3-p3",
        Second,
        3,
        4,
        0,
        Rat::new(-1, 2),
        8,
        &[(Zeta(3), int(28)), (Pi3, int(-1))],
        "[[0,16*n^3-24*n^2+18*n-5],[8,-64*n^6]]",
    );
    push(
        "28z3+p3",
        Second,
        1,
        4,
        1,
        Rat::new(-1, 2),
        8,
        &[(Zeta(3), int(28)), (Pi3, int(1))],
        "[[64,16*n^3-24*n^2+34*n-13],[8,-64*n^6]]",
    );
    push(
        "91z3-6p3s3",
        Second,
        5,
        6,
        0,
        Rat::new(-1, 2),
        9,
        &[(Zeta(3), int(91)), (Pi3OverSqrt3, int(-6))],
        "[[0,18*n^3-27*n^2+22*n-13/2],[9,-81*n^6]]",
    );
    push(
        "91z3+6p3s3",
        Second,
        1,
        6,
        1,
        Rat::new(-1, 2),
        9,
        &[(Zeta(3), int(91)), (Pi3OverSqrt3, int(6))],
        "[[216,18*n^3-27*n^2+34*n-25/2],[9,-81*n^6]]",
    );
    out
}

/// Numeric check of one identity at the given depth and precision, with
/// tolerance max(1e-4, 100 * err_est).
#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    pub identity: String,
    pub lhs_period: RationalPeriod,
    pub cf: Gcf,
    pub depth: u32,
    pub error: String,
    pub tolerance: String,
    pub pass: bool,
}

/// Evaluates a fraction against a period value.
pub fn check_identity(
    id: &str,
    cf: &Gcf,
    lhs: &RationalPeriod,
    prec: u32,
    depth: u32,
) -> Result<IdentityReport> {
    let (value, err_est) = cf.eval_numeric(depth, prec)?;
    let want = period_value(lhs, prec);
    let diff = value.sub(&want).abs();
    let floor = FixedFloat::pow10_neg(4, prec);
    let dynamic = err_est.mul_rat(&Rat::from_int(100));
    let tolerance = if dynamic.cmp_value(&floor) == std::cmp::Ordering::Greater {
        dynamic
    } else {
        floor
    };
    let pass = diff.cmp_value(&tolerance) != std::cmp::Ordering::Greater;
    Ok(IdentityReport {
        identity: id.to_string(),
        lhs_period: lhs.clone(),
        cf: cf.clone(),
        depth,
        error: diff.to_scientific(3),
        tolerance: tolerance.to_scientific(3),
        pass,
    })
}

/// Runs all twelve identities.
pub fn psi_identity_suite(prec: u32, depth: u32) -> Result<Vec<IdentityReport>> {
    let mut out = Vec::new();
    for ident in psi_identities() {
        let cf = psi_identity_cf(&ident)?;
        out.push(check_identity(ident.id, &cf, &ident.lhs, prec, depth)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_cf;

    #[test]
    fn base_fraction_is_zeta2_form() {
        let spec = PsiSpec::new(1, 1, PsiOrder::First, 0).unwrap();
        assert_eq!(psi_cf(&spec).unwrap(), parse_cf("[[0,2n-1],[2,n^4]]").unwrap());
    }

    #[test]
    fn domain_violations() {
        assert!(PsiSpec::new(1, 2, PsiOrder::First, 0).is_err()); // 1/2 <= 1/2
        assert!(PsiSpec::new(1, 3, PsiOrder::Second, 0).is_err());
        assert!(PsiSpec::new(2, 4, PsiOrder::First, 1).is_err()); // not reduced
        assert!(PsiSpec::new(1, 5, PsiOrder::First, 0).is_err()); // bad modulus
        assert!(PsiSpec::new(1, 3, PsiOrder::First, 1).is_ok());
    }

    #[test]
    fn all_identity_fractions_match_targets() {
        for ident in psi_identities() {
            let cf = psi_identity_cf(&ident).unwrap();
            let want = parse_cf(ident.target).unwrap();
            assert_eq!(cf, want, "{}", ident.id);
        }
    }

    #[test]
    fn table_rows_match_hurwitz_reference() {
        let prec = 30;
        let tol = FixedFloat::pow10_neg(25, prec);
        for (r, m) in [(1, 1), (1, 2), (1, 3), (2, 3), (1, 4), (3, 4), (1, 6), (5, 6)] {
            for order in [PsiOrder::First, PsiOrder::Second] {
                let reference = psi_reference(r, m, order, prec);
                let table = period_value(&psi_table(r, m, order).unwrap(), prec);
                assert!(
                    reference.within(&table, &tol),
                    "{r}/{m} {order:?}: {reference} vs {table}"
                );
            }
        }
    }

    #[test]
    fn shift_consistency() {
        let prec = 20;
        let tol = FixedFloat::pow10_neg(5, prec);
        for (r, m) in [(2, 3), (3, 4), (5, 6), (1, 1)] {
            for order in [PsiOrder::First, PsiOrder::Second] {
                let s0 = PsiSpec::new(r, m, order, 0).unwrap();
                let s1 = PsiSpec::new(r, m, order, 1).unwrap();
                let v0 = psi_cf(&s0).unwrap().eval_numeric(1000, prec).unwrap().0;
                let v1 = psi_cf(&s1).unwrap().eval_numeric(1000, prec).unwrap().0;
                assert!(v0.within(&v1, &tol), "{r}/{m} {order:?}: {v0} vs {v1}");
            }
        }
    }

    #[test]
    fn suite_passes_and_negative_control_fails() {
        let reports = psi_identity_suite(30, 2000).unwrap();
        assert_eq!(reports.len(), 12);
        for r in &reports {
            assert!(r.pass, "{} failed: error {}", r.identity, r.error);
        }
        // Perturbing b(0) must be caught.
        let ident = &psi_identities()[0];
        let good = psi_identity_cf(ident).unwrap();
        let mut prefix = good.prefix().to_vec();
        prefix[0].1 = &prefix[0].1 + Rat::one();
        let bad = Gcf::new(prefix, good.tail_a().clone(), good.tail_b().clone()).unwrap();
        let report = check_identity("control", &bad, &ident.lhs, 30, 2000).unwrap();
        assert!(!report.pass);
    }
}
