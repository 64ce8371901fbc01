//! Dense univariate polynomials over the rationals.
//!
//! Coefficients are stored in ascending degree with a nonzero leading
//! coefficient; the zero polynomial is the empty list and its degree is
//! `None`. Degrees in this crate stay small, so the dense representation
//! is the right trade.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, Signed, Zero};

use crate::error::{Error, Result};
use crate::rat::Rat;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct PolyQ {
    coeffs: Vec<Rat>,
}

impl PolyQ {
    pub fn zero() -> Self {
        PolyQ { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        PolyQ::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        PolyQ::from_coeffs(vec![c])
    }

    /// The monomial x.
    pub fn x() -> Self {
        PolyQ::from_coeffs(vec![Rat::zero(), Rat::one()])
    }

    /// c * x^d.
    pub fn monomial(c: Rat, d: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); d + 1];
        coeffs[d] = c;
        PolyQ::from_coeffs(coeffs)
    }

    /// Ascending-degree coefficients; trailing zeros are trimmed.
    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Rat::is_zero) {
            coeffs.pop();
        }
        PolyQ { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        PolyQ::from_coeffs(coeffs.iter().map(|&c| Rat::from_int(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of x^i (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// The constant value, if this polynomial is constant.
    pub fn as_constant(&self) -> Option<Rat> {
        match self.coeffs.len() {
            0 => Some(Rat::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_int(&self, n: i64) -> Rat {
        self.eval(&Rat::from_int(n))
    }

    /// P(x + offset) by Horner on the shifted variable.
    pub fn shift(&self, offset: &Rat) -> PolyQ {
        let mut acc = PolyQ::zero();
        let shift = PolyQ::from_coeffs(vec![offset.clone(), Rat::one()]);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &shift) + &PolyQ::constant(c.clone());
        }
        acc
    }

    pub fn scale(&self, c: &Rat) -> PolyQ {
        if c.is_zero() {
            return PolyQ::zero();
        }
        PolyQ::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, exp: u32) -> PolyQ {
        let mut acc = PolyQ::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Euclidean division: A = B*Q + R with deg R < deg B.
    pub fn div_rem(&self, divisor: &PolyQ) -> Result<(PolyQ, PolyQ)> {
        let d_deg = divisor.degree().ok_or(Error::ZeroPolyDivision)?;
        let s_deg = match self.degree() {
            Some(d) => d,
            None => return Ok((PolyQ::zero(), PolyQ::zero())),
        };
        if s_deg < d_deg {
            return Ok((PolyQ::zero(), self.clone()));
        }
        let lc = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let q_len = s_deg - d_deg + 1;
        let mut quo = vec![Rat::zero(); q_len];
        for i in (0..q_len).rev() {
            let c = &rem[i + d_deg] / &lc;
            if c.is_zero() {
                continue;
            }
            for (j, dj) in divisor.coeffs.iter().enumerate() {
                let t = dj * &c;
                rem[i + j] -= &t;
            }
            quo[i] = c;
        }
        Ok((PolyQ::from_coeffs(quo), PolyQ::from_coeffs(rem)))
    }

    /// Exact division; `None` if the remainder is nonzero.
    pub fn exact_div(&self, divisor: &PolyQ) -> Option<PolyQ> {
        let (q, r) = self.div_rem(divisor).ok()?;
        r.is_zero().then_some(q)
    }

    /// Quotient by the monomial x; the constant term must vanish.
    pub fn div_x(&self) -> PolyQ {
        if self.is_zero() {
            return PolyQ::zero();
        }
        assert!(self.coeffs[0].is_zero(), "div_x: nonzero constant term");
        PolyQ::from_coeffs(self.coeffs[1..].to_vec())
    }

    pub fn monic(&self) -> PolyQ {
        match self.leading() {
            None => PolyQ::zero(),
            Some(l) => self.scale(&l.recip()),
        }
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &PolyQ) -> PolyQ {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended Euclid: returns monic g = gcd(A, B) and (U, V) with
    /// U*A + V*B = g. At least one input must be nonzero.
    pub fn ext_euclid(&self, other: &PolyQ) -> (PolyQ, PolyQ, PolyQ) {
        assert!(
            !(self.is_zero() && other.is_zero()),
            "ext_euclid: both inputs zero"
        );
        let mut r0 = self.clone();
        let mut r1 = other.clone();
        let (mut u0, mut u1) = (PolyQ::one(), PolyQ::zero());
        let (mut v0, mut v1) = (PolyQ::zero(), PolyQ::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1).expect("nonzero divisor");
            let u = &u0 - &(&q * &u1);
            let v = &v0 - &(&q * &v1);
            r0 = std::mem::replace(&mut r1, r);
            u0 = std::mem::replace(&mut u1, u);
            v0 = std::mem::replace(&mut v1, v);
        }
        let lead = r0.leading().expect("nonzero gcd").recip();
        (r0.scale(&lead), u0.scale(&lead), v0.scale(&lead))
    }

    /// Largest coefficient height.
    pub fn height(&self) -> BigInt {
        self.coeffs
            .iter()
            .map(Rat::height)
            .max()
            .unwrap_or_else(BigInt::zero)
    }

    /// Integer roots n with lo <= n <= hi. Uses the Cauchy bound to keep the
    /// scan short: every real root x satisfies |x| <= 1 + max |c_i/c_d|.
    pub fn integer_roots_in(&self, lo: i64, hi: i64) -> Vec<i64> {
        if self.is_zero() {
            // Everything is a root; callers treat this case separately.
            return (lo..=hi).collect();
        }
        if self.is_constant() {
            return Vec::new();
        }
        let lead = self.leading().unwrap();
        let mut bound = Rat::zero();
        for c in &self.coeffs {
            let q = (c / lead).abs();
            if q > bound {
                bound = q;
            }
        }
        let b = bound.to_f64().ceil() as i64 + 2;
        let lo = lo.max(-b);
        let hi = hi.min(b);
        (lo..=hi).filter(|&n| self.eval_int(n).is_zero()).collect()
    }

    /// Render with the given variable name, descending powers.
    pub fn to_text(&self, var: char) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push(if neg { '-' } else { '+' });
            }
            let a = c.abs();
            if i == 0 {
                out.push_str(&a.to_string());
            } else {
                if !a.is_one() {
                    out.push_str(&a.to_string());
                    out.push('*');
                }
                out.push(var);
                if i > 1 {
                    out.push_str(&format!("^{i}"));
                }
            }
        }
        out
    }
}

impl fmt::Display for PolyQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text('n'))
    }
}

impl fmt::Debug for PolyQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text('n'))
    }
}

impl Add for &PolyQ {
    type Output = PolyQ;
    fn add(self, rhs: &PolyQ) -> PolyQ {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for i in 0..len {
            out.push(self.coeff(i) + rhs.coeff(i));
        }
        PolyQ::from_coeffs(out)
    }
}

impl Sub for &PolyQ {
    type Output = PolyQ;
    fn sub(self, rhs: &PolyQ) -> PolyQ {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for i in 0..len {
            out.push(self.coeff(i) - rhs.coeff(i));
        }
        PolyQ::from_coeffs(out)
    }
}

impl Mul for &PolyQ {
    type Output = PolyQ;
    fn mul(self, rhs: &PolyQ) -> PolyQ {
        if self.is_zero() || rhs.is_zero() {
            return PolyQ::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] += a * b;
            }
        }
        PolyQ::from_coeffs(out)
    }
}

macro_rules! forward_poly_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for PolyQ {
            type Output = PolyQ;
            fn $method(self, rhs: PolyQ) -> PolyQ {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&PolyQ> for PolyQ {
            type Output = PolyQ;
            fn $method(self, rhs: &PolyQ) -> PolyQ {
                (&self).$method(rhs)
            }
        }
        impl $trait<PolyQ> for &PolyQ {
            type Output = PolyQ;
            fn $method(self, rhs: PolyQ) -> PolyQ {
                self.$method(&rhs)
            }
        }
    };
}

forward_poly_binop!(Add, add);
forward_poly_binop!(Sub, sub);
forward_poly_binop!(Mul, mul);

impl Neg for &PolyQ {
    type Output = PolyQ;
    fn neg(self) -> PolyQ {
        PolyQ::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Neg for PolyQ {
    type Output = PolyQ;
    fn neg(self) -> PolyQ {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> PolyQ {
        PolyQ::from_ints(coeffs)
    }

    // ---- evaluation ----

    #[test]
    fn eval_at_root_of_catalog_polynomial() {
        // 2x - 1 at 1/2
        assert_eq!(p(&[-1, 2]).eval(&Rat::new(1, 2)), Rat::zero());
    }

    #[test]
    fn eval_quartic_at_one() {
        // 2n^4 - 4n^3 + 10n^2 - 8n + 3 at n = 1
        assert_eq!(p(&[3, -8, 10, -4, 2]).eval_int(1), Rat::from_int(3));
    }

    #[test]
    fn eval_direct_substitution() {
        // x^2 - x + 1 at 3 -> 7
        assert_eq!(p(&[1, -1, 1]).eval_int(3), Rat::from_int(7));
    }

    // ---- division ----

    #[test]
    fn div_rem_exact_case() {
        // 4x^3 - 6x^2 + 8x - 3 = (2x - 1)(2x^2 - 2x + 3)
        let a = p(&[-3, 8, -6, 4]);
        let b = p(&[-1, 2]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(q, p(&[3, -2, 2]));
        assert!(r.is_zero());
        assert_eq!(&b * &q + &r, a);
    }

    #[test]
    fn div_rem_identity() {
        let a = p(&[1, -1, 1]);
        let (q, r) = a.div_rem(&a).unwrap();
        assert_eq!(q, PolyQ::one());
        assert!(r.is_zero());
    }

    #[test]
    fn div_rem_with_remainder() {
        let a = PolyQ::monomial(Rat::one(), 5);
        let b = p(&[1, -1, 1]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert!(r.degree().unwrap_or(0) <= 1);
        assert_eq!(&b * &q + &r, a);
    }

    #[test]
    fn div_rem_by_zero_fails() {
        assert_eq!(
            p(&[1]).div_rem(&PolyQ::zero()),
            Err(Error::ZeroPolyDivision)
        );
    }

    // ---- extended Euclid ----

    #[test]
    fn ext_euclid_coprime_shift_pair() {
        // P(x) = 2x^2 - 2x + 1 and P(x+1) = 2x^2 + 2x + 1
        let a = p(&[1, -2, 2]);
        let b = a.shift(&Rat::one());
        assert_eq!(b, p(&[1, 2, 2]));
        let (g, u, v) = a.ext_euclid(&b);
        assert_eq!(g, PolyQ::one());
        assert_eq!(&u * &a + &v * &b, PolyQ::one());
    }

    #[test]
    fn ext_euclid_common_factor() {
        let x = PolyQ::x();
        let (g, u, v) = x.ext_euclid(&x);
        assert_eq!(g, PolyQ::x());
        assert_eq!(&u * &x + &v * &x, PolyQ::x());
    }

    #[test]
    fn ext_euclid_another_coprime_pair() {
        let a = p(&[1, -1, 1]);
        let b = p(&[1, 1, 1]);
        let (g, u, v) = a.ext_euclid(&b);
        assert_eq!(g, PolyQ::one());
        assert_eq!(&u * &a + &v * &b, PolyQ::one());
    }

    // ---- shift and printing ----

    #[test]
    fn shift_both_directions() {
        let pq = p(&[-1, 2]); // 2x - 1
        assert_eq!(pq.shift(&Rat::one()), p(&[1, 2]));
        assert_eq!(pq.shift(&Rat::from_int(-1)), p(&[-3, 2]));
    }

    #[test]
    fn text_rendering() {
        assert_eq!(p(&[3, -8, 10, -4, 2]).to_text('n'), "2*n^4-4*n^3+10*n^2-8*n+3");
        assert_eq!(PolyQ::monomial(Rat::one(), 4).to_text('n'), "n^4");
        assert_eq!(PolyQ::monomial(Rat::from_int(-1), 8).to_text('n'), "-n^8");
        assert_eq!(PolyQ::zero().to_text('n'), "0");
        let half = PolyQ::from_coeffs(vec![Rat::new(-13, 2), Rat::zero(), Rat::new(9, 1)]);
        assert_eq!(half.to_text('n'), "9*n^2-13/2");
    }

    #[test]
    fn integer_root_scan() {
        let pq = p(&[0, -8, 8]); // 8n(n-1)
        assert_eq!(pq.integer_roots_in(0, 10_000), vec![0, 1]);
        assert!(p(&[3, -8, 8]).integer_roots_in(1, 10_000).is_empty());
    }
}
