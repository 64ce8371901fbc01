//! Partial fraction decomposition of 1/(x^k P(x) P(x+1)).
//!
//! Produces constants c_1..c_k and polynomials U, V of degree at most
//! deg P - 1 with
//!
//! ```text
//! 1/(x^k P(x) P(x+1)) = sum_j c_j/x^j + U(x)/P(x+1) + V(x)/P(x)
//! ```
//!
//! The c_j are peeled off one power of x at a time starting from
//! c_k = 1/(P(0) P(1)); U and V come from the extended Euclidean identity
//! for the coprime pair (P(x), P(x+1)), with U reduced mod P(x+1) so the
//! output is canonical.

use crate::error::{Error, Result};
use crate::poly::PolyQ;
use crate::rat::Rat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreDecomposition {
    /// c_1 .. c_k.
    pub c: Vec<Rat>,
    pub u: PolyQ,
    pub v: PolyQ,
}

pub fn decompose_core(p: &PolyQ, k: u32) -> Result<CoreDecomposition> {
    assert!(k >= 1, "decompose_core: k must be >= 1");
    if p.eval_int(0).is_zero() {
        return Err(Error::ZeroAtIntegerPole(0));
    }
    if p.eval_int(1).is_zero() {
        return Err(Error::ZeroAtIntegerPole(1));
    }
    let p_shift = p.shift(&Rat::one());
    if !p.gcd(&p_shift).is_constant() {
        return Err(Error::NotCoprime);
    }
    let q = p * &p_shift;
    let q0 = q.eval_int(0);

    // Peel: numerator over x^j * Q, highest j first.
    let mut c = vec![Rat::zero(); k as usize];
    let mut num = PolyQ::one();
    for j in (1..=k as usize).rev() {
        let cj = num.eval_int(0) / &q0;
        num = (num - q.scale(&cj)).div_x();
        c[j - 1] = cj;
    }

    // num/Q remains; split it across the two coprime factors.
    if num.is_zero() {
        return Ok(CoreDecomposition {
            c,
            u: PolyQ::zero(),
            v: PolyQ::zero(),
        });
    }
    let (_, u0, v0) = p.ext_euclid(&p_shift); // u0 P + v0 P(x+1) = 1
    let u1 = &u0 * &num;
    let v1 = &v0 * &num;
    let (quo, u) = u1.div_rem(&p_shift)?;
    let v = v1 + quo * p;
    if let (Some(du), Some(dp)) = (u.degree(), p.degree()) {
        debug_assert!(dp == 0 || du <= dp - 1, "deg U out of bound");
    }
    if let (Some(dv), Some(dp)) = (v.degree(), p.degree()) {
        debug_assert!(dp == 0 || dv <= dp - 1, "deg V out of bound");
    }
    Ok(CoreDecomposition { c, u, v })
}

/// Clears denominators of a decomposition and checks it multiplies back to
/// one; the independent oracle used by the tests.
pub fn recombine_is_identity(p: &PolyQ, k: u32, d: &CoreDecomposition) -> bool {
    let p_shift = p.shift(&Rat::one());
    let q = p * &p_shift;
    let xk = PolyQ::monomial(Rat::one(), k as usize);
    // sum_j c_j x^(k-j) * Q + U x^k P + V x^k P(x+1) == 1
    let mut acc = PolyQ::zero();
    for (j, cj) in d.c.iter().enumerate() {
        let pow = PolyQ::monomial(cj.clone(), k as usize - (j + 1));
        acc = acc + pow * &q;
    }
    acc = acc + &d.u * &xk * p + &d.v * &xk * &p_shift;
    acc == PolyQ::one()
}
