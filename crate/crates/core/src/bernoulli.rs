//! Bernoulli numbers with the B_1 = -1/2 convention.

use num::{BigInt, One};

use crate::rat::Rat;

/// Binomial coefficient C(n, k) as a big integer.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// B_0 .. B_max, computed from the defining recurrence
/// sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1.
pub fn bernoulli_table(max: usize) -> Vec<Rat> {
    let mut table = Vec::with_capacity(max + 1);
    table.push(Rat::one());
    for m in 1..=max {
        if m > 1 && m % 2 == 1 {
            table.push(Rat::zero());
            continue;
        }
        let mut sum = Rat::zero();
        for (j, bj) in table.iter().enumerate() {
            if bj.is_zero() {
                continue;
            }
            sum += Rat::from_bigint(binomial(m as u64 + 1, j as u64)) * bj;
        }
        table.push(-sum / Rat::from_int(m as i64 + 1));
    }
    table
}

/// The m-th Bernoulli number.
pub fn bernoulli(m: usize) -> Rat {
    bernoulli_table(m).pop().expect("table has m+1 entries")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(bernoulli(0), Rat::one());
        assert_eq!(bernoulli(1), Rat::new(-1, 2));
        assert_eq!(bernoulli(2), Rat::new(1, 6));
        assert_eq!(bernoulli(4), Rat::new(-1, 30));
        assert_eq!(bernoulli(12), Rat::new(-691, 2730));
    }

    #[test]
    fn odd_ones_vanish() {
        for m in 1..=30 {
            assert!(bernoulli(2 * m + 1).is_zero(), "B_{} != 0", 2 * m + 1);
        }
    }

    #[test]
    fn recurrence_holds_up_to_60() {
        let table = bernoulli_table(60);
        for m in 1..=60usize {
            let mut sum = Rat::zero();
            for j in 0..m {
                sum += Rat::from_bigint(binomial(m as u64 + 1, j as u64)) * &table[j];
            }
            sum += Rat::from_int(m as i64 + 1) * &table[m];
            assert!(sum.is_zero(), "recurrence fails at m = {m}");
        }
    }
}
