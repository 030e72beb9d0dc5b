//! Exact integer linear algebra on dense square matrices: fraction-free
//! determinants, leading principal minors, Smith normal form and rational
//! linear solves. Everything is `BigInt`-based; nothing here ever rounds.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Dense square integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(n: usize) -> Self {
        IntMatrix { n, data: vec![BigInt::zero(); n * n] }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut m = IntMatrix::zero(n);
        for i in 0..n {
            for j in 0..n {
                *m.at_mut(i, j) = f(i, j);
            }
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn at(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.n + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut BigInt {
        &mut self.data[i * self.n + j]
    }

    pub fn negated(&self) -> IntMatrix {
        IntMatrix { n: self.n, data: self.data.iter().map(|x| -x).collect() }
    }

    /// Determinant by Bareiss fraction-free elimination.
    pub fn determinant(&self) -> BigInt {
        let n = self.n;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.data.clone();
        let mut sign = 1i32;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k * n + k].is_zero() {
                // pivot search below row k
                match (k + 1..n).find(|&r| !m[r * n + k].is_zero()) {
                    Some(r) => {
                        for c in 0..n {
                            m.swap(k * n + c, r * n + c);
                        }
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[i * n + j] * &m[k * n + k] - &m[i * n + k] * &m[k * n + j];
                    m[i * n + j] = num / &prev;
                }
                m[i * n + k] = BigInt::zero();
            }
            prev = m[k * n + k].clone();
        }
        let det = m[(n - 1) * n + (n - 1)].clone();
        if sign < 0 {
            -det
        } else {
            det
        }
    }

    /// Determinants of the k-by-k leading principal submatrices, k = 1..=n.
    pub fn leading_principal_minors(&self) -> Vec<BigInt> {
        (1..=self.n)
            .map(|k| IntMatrix::from_fn(k, |i, j| self.at(i, j).clone()).determinant())
            .collect()
    }

    /// True iff the matrix is positive definite (Sylvester's criterion).
    pub fn is_positive_definite(&self) -> bool {
        self.leading_principal_minors().iter().all(|d| d.is_positive())
    }

    /// Invariant factors d_1 | d_2 | ... of the Smith normal form, including
    /// zeros for the free part. Entries are non-negative.
    pub fn smith_invariant_factors(&self) -> Vec<BigInt> {
        let n = self.n;
        if n == 0 {
            return Vec::new();
        }
        let det = self.determinant().abs();
        if det.is_zero() {
            // exact elimination; only used for singular matrices
            return self.smith_exact();
        }
        // nonsingular case: coker(A) = Z^n / (A Z^n + det Z^n), so the whole
        // elimination can run over balanced residues modulo det, which keeps
        // the entries small (the exact algorithm suffers from coefficient
        // explosion)
        let reduce = |x: &mut BigInt| {
            *x = x.mod_floor(&det);
            if &*x * 2i32 > det {
                *x -= &det;
            }
        };
        let mut m = self.data.clone();
        m.iter_mut().for_each(reduce);
        let mut t = 0usize;
        while t < n {
            let pivot = (t..n)
                .flat_map(|i| (t..n).map(move |j| (i, j)))
                .filter(|&(i, j)| !m[i * n + j].is_zero())
                .min_by_key(|&(i, j)| m[i * n + j].abs());
            let Some((pi, pj)) = pivot else {
                break; // the block is zero modulo det
            };
            for c in 0..n {
                m.swap(t * n + c, pi * n + c);
            }
            for r in 0..n {
                m.swap(r * n + t, r * n + pj);
            }
            let mut dirty = true;
            while dirty {
                dirty = false;
                for i in t + 1..n {
                    if !m[i * n + t].is_zero() {
                        let q = &m[i * n + t] / &m[t * n + t];
                        for c in t..n {
                            let sub = &q * &m[t * n + c];
                            m[i * n + c] -= sub;
                            reduce(&mut m[i * n + c]);
                        }
                        if !m[i * n + t].is_zero() {
                            for c in 0..n {
                                m.swap(t * n + c, i * n + c);
                            }
                            dirty = true;
                        }
                    }
                }
                for j in t + 1..n {
                    if !m[t * n + j].is_zero() {
                        let q = &m[t * n + j] / &m[t * n + t];
                        for r in t..n {
                            let sub = &q * &m[r * n + t];
                            m[r * n + j] -= sub;
                            reduce(&mut m[r * n + j]);
                        }
                        if !m[t * n + j].is_zero() {
                            for r in 0..n {
                                m.swap(r * n + t, r * n + j);
                            }
                            dirty = true;
                        }
                    }
                }
            }
            t += 1;
        }
        // each diagonal residue g contributes Z / gcd(g, det); bring the
        // multiset into a divisibility chain with gcd/lcm passes
        let mut factors: Vec<BigInt> =
            (0..n).map(|t| m[t * n + t].gcd(&det)).collect();
        loop {
            let mut changed = false;
            for i in 0..n {
                for j in i + 1..n {
                    let g = factors[i].gcd(&factors[j]);
                    if g != factors[i] {
                        let l = &factors[i] * &factors[j] / &g;
                        factors[i] = g;
                        factors[j] = l;
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        factors
    }

    fn smith_exact(&self) -> Vec<BigInt> {
        let n = self.n;
        let mut m = self.data.clone();
        let mut factors = Vec::with_capacity(n);
        let mut t = 0usize;
        while t < n {
            // find a nonzero entry in the remaining block
            let pivot = (t..n)
                .flat_map(|i| (t..n).map(move |j| (i, j)))
                .filter(|&(i, j)| !m[i * n + j].is_zero())
                .min_by_key(|&(i, j)| m[i * n + j].abs());
            let Some((pi, pj)) = pivot else {
                break;
            };
            for c in 0..n {
                m.swap(t * n + c, pi * n + c);
            }
            for r in 0..n {
                m.swap(r * n + t, r * n + pj);
            }
            // clear row and column t
            let mut dirty = true;
            while dirty {
                dirty = false;
                for i in t + 1..n {
                    if !m[i * n + t].is_zero() {
                        let q = &m[i * n + t] / &m[t * n + t];
                        for c in t..n {
                            let sub = &q * &m[t * n + c];
                            m[i * n + c] -= sub;
                        }
                        if !m[i * n + t].is_zero() {
                            for c in 0..n {
                                m.swap(t * n + c, i * n + c);
                            }
                            dirty = true;
                        }
                    }
                }
                for j in t + 1..n {
                    if !m[t * n + j].is_zero() {
                        let q = &m[t * n + j] / &m[t * n + t];
                        for r in t..n {
                            let sub = &q * &m[r * n + t];
                            m[r * n + j] -= sub;
                        }
                        if !m[t * n + j].is_zero() {
                            for r in 0..n {
                                m.swap(r * n + t, r * n + j);
                            }
                            dirty = true;
                        }
                    }
                }
            }
            // absorb entries not divisible by the pivot
            let mut fixed = false;
            'outer: for i in t + 1..n {
                for j in t + 1..n {
                    if !(&m[i * n + j] % &m[t * n + t]).is_zero() {
                        for c in t..n {
                            let add = m[i * n + c].clone();
                            m[t * n + c] += add;
                        }
                        fixed = true;
                        break 'outer;
                    }
                }
            }
            if fixed {
                continue; // redo this pivot position
            }
            factors.push(m[t * n + t].abs());
            t += 1;
        }
        while factors.len() < n {
            factors.push(BigInt::zero());
        }
        factors
    }

    /// Solve `self * x = rhs` exactly. Returns `None` if the matrix is
    /// singular.
    pub fn solve(&self, rhs: &[BigInt]) -> Option<Vec<BigRational>> {
        let n = self.n;
        assert_eq!(rhs.len(), n);
        let mut a: Vec<BigRational> =
            self.data.iter().map(|x| BigRational::from(x.clone())).collect();
        let mut b: Vec<BigRational> = rhs.iter().map(|x| BigRational::from(x.clone())).collect();
        for k in 0..n {
            let p = (k..n).find(|&r| !a[r * n + k].is_zero())?;
            if p != k {
                for c in 0..n {
                    a.swap(k * n + c, p * n + c);
                }
                b.swap(k, p);
            }
            let pivot = a[k * n + k].clone();
            for i in 0..n {
                if i == k || a[i * n + k].is_zero() {
                    continue;
                }
                let factor = &a[i * n + k] / &pivot;
                for c in k..n {
                    let sub = &factor * &a[k * n + c];
                    a[i * n + c] -= sub;
                }
                let sub = &factor * &b[k];
                b[i] -= sub;
            }
        }
        Some((0..n).map(|i| &b[i] / &a[i * n + i]).collect())
    }

    /// Exact inverse. `None` if singular.
    pub fn inverse(&self) -> Option<Vec<Vec<BigRational>>> {
        let n = self.n;
        let mut cols = Vec::with_capacity(n);
        for j in 0..n {
            let mut e = vec![BigInt::zero(); n];
            e[j] = BigInt::one();
            cols.push(self.solve(&e)?);
        }
        // cols[j][i] is entry (i, j) of the inverse
        Some((0..n).map(|i| (0..n).map(|j| cols[j][i].clone()).collect()).collect())
    }
}
