//! The weighted grading attached to the branch `y^k + x^n`.
//!
//! Weights: `o(x) = k`, `o(y) = n`, `o(p) = n - k`, `o(t) = 1` and
//! `o(s_sigma) = -sigma`. Since `gcd(k, n) = 1`, distinct monomials `x^i y^j`
//! with `i < n`, `j < k` have distinct weighted degrees, which makes the
//! degree order on the Milnor basis canonical.

use alloc::vec::Vec;

use num_integer::Integer;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Grading {
    pub k: u32,
    pub n: u32,
}

impl Grading {
    /// Does not validate; `CurveFamily::new` rejects bad `(k, n)`.
    pub fn new(k: u32, n: u32) -> Self {
        Grading { k, n }
    }

    /// Weighted degree of `x^i y^j`.
    pub fn xy(&self, i: u32, j: u32) -> i64 {
        self.k as i64 * i as i64 + self.n as i64 * j as i64
    }

    /// Weight of `p`.
    pub fn p_weight(&self) -> i64 {
        self.n as i64 - self.k as i64
    }

    /// The unique `(a, b)` with `k*a + n*b = w` and `0 <= b <= k-1`, when it
    /// has nonnegative `a`. Every `w` above the Frobenius number
    /// `kn - k - n` of the semigroup `<k, n>` is representable.
    pub fn canonical_rep(&self, w: i64) -> Option<(u32, u32)> {
        if w < 0 {
            return None;
        }
        let k = self.k as i64;
        let n = self.n as i64;
        // b = w * n^{-1} mod k
        let n_inv = mod_inverse(n.rem_euclid(k), k)?;
        let b = (w % k * n_inv).rem_euclid(k);
        let rest = w - n * b;
        if rest < 0 || rest % k != 0 {
            return None;
        }
        Some(((rest / k) as u32, b as u32))
    }

    /// Is `w` in the numerical semigroup `<k, n>`?
    pub fn in_semigroup(&self, w: i64) -> bool {
        self.canonical_rep(w).is_some()
    }
}

fn mod_inverse(a: i64, m: i64) -> Option<i64> {
    let e = i64::extended_gcd(&a, &m);
    if e.gcd != 1 {
        None
    } else {
        Some(e.x.rem_euclid(m))
    }
}

/// All exponent vectors `[(sigma, e), ..]` over the given (ascending) sigma
/// values with `sum sigma*e == target`; ascending-sigma, deterministic order.
pub fn monomials_of_magnitude(sigmas: &[u32], target: i64) -> Vec<Vec<(u32, u32)>> {
    let mut out = Vec::new();
    if target < 0 {
        return out;
    }
    let mut cur: Vec<(u32, u32)> = Vec::new();
    fn go(
        sigmas: &[u32],
        idx: usize,
        rem: i64,
        cur: &mut Vec<(u32, u32)>,
        out: &mut Vec<Vec<(u32, u32)>>,
    ) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        if idx == sigmas.len() {
            return;
        }
        let s = sigmas[idx] as i64;
        // remaining weight must be coverable by variables from idx on
        let mut e = 0u32;
        loop {
            let used = s * e as i64;
            if used > rem {
                break;
            }
            if e > 0 {
                cur.push((sigmas[idx], e));
            }
            go(sigmas, idx + 1, rem - used, cur, out);
            if e > 0 {
                cur.pop();
            }
            e += 1;
        }
    }
    go(sigmas, 0, target, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_reps() {
        let g = Grading::new(6, 13);
        assert_eq!(g.canonical_rep(78), Some((13, 0)));
        assert_eq!(g.canonical_rep(94), Some((7, 4)));
        assert_eq!(g.canonical_rep(92), Some((11, 2)));
        // 59 is the Frobenius number of <6,13>
        assert_eq!(g.canonical_rep(59), None);
        assert!(g.in_semigroup(60));
        for w in 60..200 {
            let (a, b) = g.canonical_rep(w).unwrap();
            assert_eq!(6 * a as i64 + 13 * b as i64, w);
            assert!(b < 6);
        }
    }

    #[test]
    fn magnitude_enumeration() {
        let m = monomials_of_magnitude(&[2, 3, 4], 6);
        // 6 = 2+2+2 = 2+4 = 3+3
        assert_eq!(m.len(), 3);
        assert!(m.contains(&alloc::vec![(2, 3)]));
        assert!(m.contains(&alloc::vec![(2, 1), (4, 1)]));
        assert!(m.contains(&alloc::vec![(3, 2)]));
        assert_eq!(monomials_of_magnitude(&[2, 3], 0).len(), 1);
        assert_eq!(monomials_of_magnitude(&[2], 3).len(), 0);
    }
}
