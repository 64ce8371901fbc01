//! The eight infinite families of continued fractions produced by the
//! multiplier method, indexed 1..=8.
//!
//! Each family fixes a multiplier polynomial P and a sign, and plugs in an
//! exponent that grows linearly in the family parameter k. R is always
//! derived by exact division (never stored), and the left-hand side is the
//! family's zeta / zeta* combination expanded over the period basis.
//!
//! Family 4's b(0) carries a factor (-1)^k and its combination the matching
//! global sign; the k = 1 member is otherwise numerically false (the
//! telescoping boundary term flips with the parity of k for this family).

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gcf::Gcf;
use crate::multiplier::{divisibility_check, Sign};
use crate::period::{zeta_or_zero, zeta_star, RationalPeriod};
use crate::poly::PolyQ;
use crate::rat::Rat;

/// One family member: the exact combination and its continued fraction.
#[derive(Clone, Debug, Serialize)]
pub struct FamilyCf {
    pub id: u8,
    pub k: u32,
    pub lhs: RationalPeriod,
    pub cf: Gcf,
}

/// Underlying data of a family: multiplier polynomial, sign, and exponent.
pub struct FamilySpec {
    pub p: PolyQ,
    pub sign: Sign,
    pub exponent: u32,
    pub a0: Rat,
    pub b0: Rat,
}

/// The (P, sign, exponent, a(0), b(0)) behind family `id` at parameter `k`.
pub fn family_spec(id: u8, k: u32) -> Result<FamilySpec> {
    if !(1..=8).contains(&id) {
        return Err(Error::OutOfRange(format!("family id {id} not in 1..=8")));
    }
    if id == 1 && k == 0 {
        return Err(Error::OutOfRange("family 1 needs k >= 1".into()));
    }
    let ki = k as i32;
    let two = Rat::from_int(2);
    let neg3 = Rat::from_int(-3);
    let (p, sign, exponent, a0, b0) = match id {
        1 => (
            PolyQ::from_ints(&[-1, 2]),
            Sign::Plus,
            2 * k,
            two.pow(2 * ki - 1),
            Rat::from_int(-1),
        ),
        2 => (
            PolyQ::from_ints(&[1, -3, 3]),
            Sign::Plus,
            6 * k + 2,
            -neg3.pow(3 * ki + 1) / &two,
            Rat::one(),
        ),
        3 => (
            PolyQ::from_ints(&[1, -3, 3]),
            Sign::Plus,
            6 * k + 5,
            neg3.pow(3 * ki + 2) / &two,
            Rat::one(),
        ),
        4 => (
            PolyQ::from_ints(&[1, -2, 2]),
            Sign::Plus,
            4 * k + 3,
            Rat::from_int(4).pow(ki),
            Rat::from_int(-1).pow(ki),
        ),
        5 => (
            PolyQ::from_ints(&[1, -1, 1]),
            Sign::Plus,
            6 * k + 5,
            Rat::new(-1, 2),
            Rat::one(),
        ),
        6 => (
            PolyQ::from_ints(&[-1, 2]),
            Sign::Minus,
            2 * k + 1,
            two.pow(4 * ki),
            -two.pow(2 * ki),
        ),
        7 => (
            PolyQ::from_ints(&[1, -2, 2]),
            Sign::Minus,
            4 * k + 1,
            Rat::from_int(-1).pow(ki) * two.pow(6 * ki - 1),
            two.pow(4 * ki),
        ),
        8 => (
            PolyQ::from_ints(&[1, -1, 1]),
            Sign::Minus,
            6 * k + 2,
            two.pow(6 * ki),
            two.pow(6 * ki + 1),
        ),
        _ => unreachable!(),
    };
    Ok(FamilySpec {
        p,
        sign,
        exponent,
        a0,
        b0,
    })
}

/// The family's combination of zeta values over the period basis.
pub fn family_lhs(id: u8, k: u32) -> Result<RationalPeriod> {
    if !(1..=8).contains(&id) {
        return Err(Error::OutOfRange(format!("family id {id} not in 1..=8")));
    }
    if id == 1 && k == 0 {
        return Err(Error::OutOfRange("family 1 needs k >= 1".into()));
    }
    let mut lhs = RationalPeriod::zero();
    match id {
        1 => {
            // sum_{j=0}^{k-1} 2^(2j) zeta(2(k-j))
            for j in 0..k {
                let w = Rat::from_int(2).pow(2 * j as i32);
                lhs = lhs.add(&zeta_or_zero(2 * (k - j)).scale(&w));
            }
        }
        2 => {
            for j in 0..=k {
                let w = Rat::from_int(-3).pow(3 * j as i32);
                let t = zeta_or_zero(6 * (k - j) + 2)
                    .add(&zeta_or_zero(6 * (k - j)).scale(&Rat::from_int(3)));
                lhs = lhs.add(&t.scale(&w));
            }
        }
        3 => {
            for j in 0..=k {
                let w = Rat::from_int(-3).pow(3 * j as i32);
                let t = zeta_or_zero(6 * (k - j) + 5)
                    .add(&zeta_or_zero(6 * (k - j) + 3).scale(&Rat::from_int(3)));
                lhs = lhs.add(&t.scale(&w));
            }
        }
        4 => {
            // (-1)^k sum_{j=0}^{k} (-4)^j zeta(4(k-j)+3)
            for j in 0..=k {
                let w = Rat::from_int(-4).pow(j as i32);
                lhs = lhs.add(&zeta_or_zero(4 * (k - j) + 3).scale(&w));
            }
            lhs = lhs.scale(&Rat::from_int(-1).pow(k as i32));
        }
        5 => {
            for j in 0..=k {
                let t = zeta_or_zero(6 * (k - j) + 5)
                    .add(&zeta_or_zero(6 * (k - j) + 3).negate());
                lhs = lhs.add(&t);
            }
        }
        6 => {
            for j in 0..=k {
                let w = Rat::from_int(2).pow(4 * j as i32);
                lhs = lhs.add(&zeta_star(2 * (k - j) + 1).scale(&w));
            }
        }
        7 => {
            for j in 0..=k {
                let w = Rat::from_int(-64).pow(j as i32);
                lhs = lhs.add(&zeta_star(4 * (k - j) + 1).scale(&w));
            }
        }
        8 => {
            for j in 0..=k {
                let w = Rat::from_int(2).pow(6 * j as i32);
                let t = zeta_star(6 * (k - j) + 2)
                    .add(&zeta_star(6 * (k - j)).scale(&Rat::from_int(-4)));
                lhs = lhs.add(&t.scale(&w));
            }
        }
        _ => unreachable!(),
    }
    Ok(lhs)
}

/// Family `id` at parameter `k`: the combination and its fraction
/// `[[a0, R(n)], [b0, -s n^(2 exponent)]]` with R derived by division.
pub fn family(id: u8, k: u32) -> Result<FamilyCf> {
    let spec = family_spec(id, k)?;
    let r = divisibility_check(&spec.p, spec.exponent, spec.sign)
        .expect("catalog polynomial divides its shifted combination");
    let s = match spec.sign {
        Sign::Plus => Rat::from_int(-1),
        Sign::Minus => Rat::one(),
    };
    let tail_b = PolyQ::monomial(s, 2 * spec.exponent as usize);
    let cf = Gcf::simple(spec.a0.clone(), spec.b0.clone(), r, tail_b)?;
    Ok(FamilyCf {
        id,
        k,
        lhs: family_lhs(id, k)?,
        cf,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multiplier::decompose_period;
    use crate::parse::parse_cf;
    use crate::period::BasisConstant;

    #[test]
    fn family_one_small_members() {
        // k = 1 is zeta(2) itself.
        let f = family(1, 1).unwrap();
        assert_eq!(
            f.lhs,
            RationalPeriod::single(BasisConstant::Zeta(2), Rat::one())
        );
        assert_eq!(f.cf, parse_cf("[[2,2n^2-2n+3],[-1,-n^4]]").unwrap());

        let f = family(1, 2).unwrap();
        let mut lhs = RationalPeriod::single(BasisConstant::Zeta(4), Rat::one());
        lhs.add_term(BasisConstant::Zeta(2), Rat::from_int(4));
        assert_eq!(f.lhs, lhs);
    }

    #[test]
    fn family_six_zero_is_log2() {
        let f = family(6, 0).unwrap();
        assert_eq!(
            f.lhs,
            RationalPeriod::single(BasisConstant::Log2, Rat::one())
        );
        assert_eq!(f.cf, parse_cf("[[1,3],[-1,n^2]]").unwrap());
    }

    #[test]
    fn family_seven_zero_is_log2_alternate_form() {
        let f = family(7, 0).unwrap();
        assert_eq!(
            f.lhs,
            RationalPeriod::single(BasisConstant::Log2, Rat::one())
        );
        assert_eq!(f.cf, parse_cf("[[1/2,5],[1,n^2]]").unwrap());
    }

    #[test]
    fn family_eight_zero_is_zeta2() {
        let f = family(8, 0).unwrap();
        assert_eq!(
            f.lhs,
            RationalPeriod::single(BasisConstant::Zeta(2), Rat::one())
        );
        assert_eq!(f.cf, parse_cf("[[1,6n-3],[2,n^4]]").unwrap());
    }

    #[test]
    fn family_four_zero_is_zeta3() {
        let f = family(4, 0).unwrap();
        assert_eq!(
            f.lhs,
            RationalPeriod::single(BasisConstant::Zeta(3), Rat::one())
        );
        assert_eq!(f.cf, parse_cf("[[1,(2n-1)(n^2-n+5)],[1,-n^6]]").unwrap());
    }

    #[test]
    fn out_of_range_rejected() {
        assert!(family(0, 1).is_err());
        assert!(family(9, 0).is_err());
        assert!(family(1, 0).is_err());
    }

    #[test]
    fn lhs_consistent_with_decomposition() {
        // lhs = a0 + b0 * P(1)^2 * S with S from the partial fraction
        // route; exact equality over the basis for every family.
        for id in 1..=8u8 {
            for k in 0..=3u32 {
                if id == 1 && k == 0 {
                    continue;
                }
                let f = family(id, k).unwrap();
                let spec = family_spec(id, k).unwrap();
                let (s_period, telescoped, _) =
                    decompose_period(&spec.p, spec.exponent, spec.sign).unwrap();
                assert!(telescoped, "family {id} k {k} does not telescope");
                let p1 = spec.p.eval_int(1);
                let derived = s_period
                    .scale(&(&spec.b0 * &p1 * &p1))
                    .add(&RationalPeriod::one_times(spec.a0.clone()));
                assert_eq!(derived, f.lhs, "family {id} k {k}");
            }
        }
    }
}
