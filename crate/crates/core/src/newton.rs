//! Newton pairs of irreducible plane curve singularities and the numerical
//! invariants of their suspensions `f(x,y) + z^n`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::error::{GraphError, Result};

/// One Newton pair `(p, q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NewtonPair {
    pub p: u64,
    pub q: u64,
}

impl NewtonPair {
    pub fn new(p: u64, q: u64) -> Self {
        NewtonPair { p, q }
    }
}

/// Checks that `pairs` is a legal sequence of Newton pairs of an irreducible
/// (singular) plane curve: `p_k >= 2`, `gcd(p_k, q_k) = 1`, `q_1 > p_1` and
/// `q_k >= 1` for `k >= 2`.
pub fn validate_pairs(pairs: &[NewtonPair]) -> Result<()> {
    if pairs.is_empty() {
        return Err(GraphError::InvalidNewtonPairs("empty sequence".into()));
    }
    for (k, pair) in pairs.iter().enumerate() {
        if pair.p < 2 {
            return Err(GraphError::InvalidNewtonPairs(format!(
                "p_{} = {} must be at least 2",
                k + 1,
                pair.p
            )));
        }
        if pair.q == 0 {
            return Err(GraphError::InvalidNewtonPairs(format!("q_{} must be positive", k + 1)));
        }
        if pair.p.gcd(&pair.q) != 1 {
            return Err(GraphError::InvalidNewtonPairs(format!(
                "p_{} and q_{} are not coprime",
                k + 1,
                k + 1
            )));
        }
    }
    if pairs[0].q <= pairs[0].p {
        return Err(GraphError::InvalidNewtonPairs(format!(
            "q_1 = {} must exceed p_1 = {}",
            pairs[0].q, pairs[0].p
        )));
    }
    Ok(())
}

fn checked_mul(a: u64, b: u64) -> Result<u64> {
    a.checked_mul(b).ok_or(GraphError::Overflow("newton"))
}

fn checked_add(a: u64, b: u64) -> Result<u64> {
    a.checked_add(b).ok_or(GraphError::Overflow("newton"))
}

/// The auxiliary sequence `a_1 = q_1`, `a_{k+1} = q_{k+1} + p_{k+1} p_k a_k`.
pub fn a_sequence(pairs: &[NewtonPair]) -> Result<Vec<u64>> {
    validate_pairs(pairs)?;
    let mut a = vec![pairs[0].q];
    for k in 1..pairs.len() {
        let prev = *a.last().unwrap();
        let t = checked_mul(checked_mul(pairs[k].p, pairs[k - 1].p)?, prev)?;
        a.push(checked_add(pairs[k].q, t)?);
    }
    Ok(a)
}

/// Products `p_{k+1} * ... * p_s` for `k = 0..=s` (the last entry is 1).
pub fn p_tail_products(pairs: &[NewtonPair]) -> Result<Vec<u64>> {
    let mut out = vec![1u64; pairs.len() + 1];
    for k in (0..pairs.len()).rev() {
        out[k] = checked_mul(out[k + 1], pairs[k].p)?;
    }
    Ok(out)
}

/// Milnor number of the plane curve branch, via the conductor of its
/// semigroup: `mu = sum (p_k - 1) a_k p_{k+1}...p_s - p_1...p_s + 1`.
pub fn milnor_plane_curve(pairs: &[NewtonPair]) -> Result<BigInt> {
    let a = a_sequence(pairs)?;
    let tails = p_tail_products(pairs)?;
    let mut mu = BigInt::one() - BigInt::from(tails[0]);
    for k in 0..pairs.len() {
        mu += BigInt::from(pairs[k].p - 1) * BigInt::from(a[k]) * BigInt::from(tails[k + 1]);
    }
    Ok(mu)
}

/// Milnor number of the suspension `f + z^n`; Sebastiani–Thom:
/// `mu(f + z^n) = mu(f) * (n - 1)`.
pub fn milnor_suspension(pairs: &[NewtonPair], n: u64) -> Result<BigInt> {
    if n < 2 {
        return Err(GraphError::InvalidInput("suspension exponent must be at least 2".into()));
    }
    Ok(milnor_plane_curve(pairs)? * BigInt::from(n - 1))
}

/// The numerical invariants of a suspension singularity, all derived from
/// the Newton pairs and the exponent `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuspensionData {
    pub pairs: Vec<NewtonPair>,
    pub n: u64,
    /// `a_1..a_s`.
    pub a: Vec<u64>,
    /// `d_k = gcd(n, p_{k+1}...p_s)` for `k = 0..=s`; `d_s = 1`.
    pub d: Vec<u64>,
    /// `h_k = d_{k-1} / d_k = gcd(p_k, n / d_k)`, indexed `1..=s` at `k-1`.
    pub h: Vec<u64>,
    /// `p'_k = p_k / h_k`.
    pub p_red: Vec<u64>,
    /// `h~_k = gcd(a_k, n / d_k)`.
    pub h_tilde: Vec<u64>,
    /// `a'_k = a_k / h~_k`.
    pub a_red: Vec<u64>,
}

impl SuspensionData {
    pub fn new(pairs: &[NewtonPair], n: u64) -> Result<Self> {
        validate_pairs(pairs)?;
        if n < 2 {
            return Err(GraphError::InvalidInput(
                "suspension exponent must be at least 2".into(),
            ));
        }
        let s = pairs.len();
        let a = a_sequence(pairs)?;
        let tails = p_tail_products(pairs)?;
        let d: Vec<u64> = tails.iter().map(|&t| n.gcd(&t)).collect();
        let mut h = Vec::with_capacity(s);
        let mut p_red = Vec::with_capacity(s);
        let mut h_tilde = Vec::with_capacity(s);
        let mut a_red = Vec::with_capacity(s);
        for k in 0..s {
            let hk = d[k] / d[k + 1];
            debug_assert_eq!(hk, pairs[k].p.gcd(&(n / d[k + 1])));
            h.push(hk);
            p_red.push(pairs[k].p / hk);
            let ht = a[k].gcd(&(n / d[k + 1]));
            h_tilde.push(ht);
            a_red.push(a[k] / ht);
        }
        Ok(SuspensionData { pairs: pairs.to_vec(), n, a, d, h, p_red, h_tilde, a_red })
    }

    pub fn s(&self) -> usize {
        self.pairs.len()
    }

    /// Genus of the vertex over the node `v_k` (index `k-1`):
    /// `(h_k - 1)(h~_k - 1) / 2`.
    pub fn node_genus(&self, k: usize) -> u64 {
        (self.h[k] - 1) * (self.h_tilde[k] - 1) / 2
    }

    /// The link is a rational homology sphere iff all node genera vanish.
    pub fn is_rational_sphere(&self) -> bool {
        (0..self.s()).all(|k| self.node_genus(k) == 0)
    }

    pub fn milnor(&self) -> Result<BigInt> {
        milnor_suspension(&self.pairs, self.n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pairs(v: &[(u64, u64)]) -> Vec<NewtonPair> {
        v.iter().map(|&(p, q)| NewtonPair::new(p, q)).collect()
    }

    #[test]
    fn validation() {
        assert!(validate_pairs(&pairs(&[(2, 3)])).is_ok());
        assert!(validate_pairs(&pairs(&[(3, 7), (20, 1)])).is_ok());
        assert!(validate_pairs(&pairs(&[])).is_err());
        assert!(validate_pairs(&pairs(&[(1, 3)])).is_err());
        assert!(validate_pairs(&pairs(&[(2, 4)])).is_err()); // not coprime
        assert!(validate_pairs(&pairs(&[(3, 2)])).is_err()); // q_1 <= p_1
        assert!(validate_pairs(&pairs(&[(2, 3), (2, 0)])).is_err());
    }

    #[test]
    fn a_sequence_values() {
        assert_eq!(a_sequence(&pairs(&[(2, 3)])).unwrap(), vec![3]);
        assert_eq!(a_sequence(&pairs(&[(3, 7), (20, 1)])).unwrap(), vec![7, 421]);
        assert_eq!(a_sequence(&pairs(&[(4, 5), (21, 1)])).unwrap(), vec![5, 421]);
        assert_eq!(a_sequence(&pairs(&[(2, 3), (3, 1)])).unwrap(), vec![3, 19]);
    }

    #[test]
    fn milnor_values() {
        assert_eq!(milnor_plane_curve(&pairs(&[(2, 3)])).unwrap(), BigInt::from(2));
        assert_eq!(milnor_suspension(&pairs(&[(2, 3)]), 5).unwrap(), BigInt::from(8));
        // the classical ambiguous pair: same minimal graph, different mu
        assert_eq!(
            milnor_suspension(&pairs(&[(3, 7), (20, 1)]), 21).unwrap(),
            BigInt::from(164400)
        );
        assert_eq!(
            milnor_suspension(&pairs(&[(4, 5), (21, 1)]), 20).unwrap(),
            BigInt::from(164388)
        );
    }

    #[test]
    fn suspension_invariants() {
        let d = SuspensionData::new(&pairs(&[(3, 7), (20, 1)]), 21).unwrap();
        assert_eq!(d.d, vec![3, 1, 1]);
        assert_eq!(d.h, vec![3, 1]);
        assert_eq!(d.p_red, vec![1, 20]);
        assert_eq!(d.h_tilde, vec![7, 1]);
        assert_eq!(d.a_red, vec![1, 421]);
        assert_eq!(d.node_genus(0), 6);
        assert_eq!(d.node_genus(1), 0);
        assert!(!d.is_rational_sphere());

        let e = SuspensionData::new(&pairs(&[(2, 3)]), 5).unwrap();
        assert_eq!(e.d, vec![1, 1]);
        assert_eq!(e.h, vec![1]);
        assert_eq!(e.h_tilde, vec![1]);
        assert!(e.is_rational_sphere());
    }

    #[test]
    fn rejects_small_n() {
        assert!(SuspensionData::new(&pairs(&[(2, 3)]), 1).is_err());
        assert!(milnor_suspension(&pairs(&[(2, 3)]), 0).is_err());
    }
}
