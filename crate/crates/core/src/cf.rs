//! Negative (Hirzebruch–Jung) continued fractions:
//! `a/b = k1 - 1/(k2 - 1/( ... - 1/kt))` with every quotient >= 2 except
//! possibly the first (which is >= 1 when a/b <= 1).

use num_integer::Integer;

use crate::error::{GraphError, Result};

/// Expansion of `num/den` by repeated ceiling division. Requires
/// `num, den >= 1`; the input need not be in lowest terms.
pub fn neg_cf(num: u64, den: u64) -> Result<Vec<u64>> {
    if num == 0 || den == 0 {
        return Err(GraphError::InvalidInput("neg_cf requires positive arguments".into()));
    }
    let g = num.gcd(&den);
    let (mut a, mut b) = (num / g, den / g);
    let mut out = Vec::new();
    while b > 0 {
        let k = a.div_ceil(b);
        out.push(k);
        let next = k * b - a;
        a = b;
        b = next;
    }
    Ok(out)
}

/// Value of an expansion as a coprime fraction `(num, den)`.
pub fn eval_neg_cf(quotients: &[u64]) -> Result<(u64, u64)> {
    if quotients.is_empty() {
        return Err(GraphError::InvalidExpansion);
    }
    let (mut p, mut q) = (1i128, 0i128);
    for &k in quotients.iter().rev() {
        if k == 0 {
            return Err(GraphError::InvalidExpansion);
        }
        let next = k as i128 * p - q;
        q = p;
        p = next;
        if p <= 0 {
            return Err(GraphError::InvalidExpansion);
        }
    }
    let num = u64::try_from(p).map_err(|_| GraphError::Overflow("eval_neg_cf"))?;
    let den = u64::try_from(q).map_err(|_| GraphError::Overflow("eval_neg_cf"))?;
    Ok((num, den))
}
