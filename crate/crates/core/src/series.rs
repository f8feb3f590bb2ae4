//! Truncated power series in `t` with polynomial coefficients.
//!
//! A series is a sparse map `t`-exponent -> nonzero [`MPoly`] plus an explicit
//! truncation order (exclusive). `prec == None` means the series is exact (a
//! polynomial in `t`). Every arithmetic result records the precision implied
//! by its operands — `min` for sums, the valuation-shifted `min` for products
//! — and reading a coefficient at or beyond the bound is an error, never a
//! silent zero.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::poly::MPoly;
use crate::rat::Rat;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesError {
    /// Asked for a coefficient at or beyond the truncation order.
    PrecisionExceeded { want: i64, have: i64 },
    /// An operation cannot deliver the requested truncation order.
    PrecisionUnderflow { want: i64, have: i64 },
}

impl core::fmt::Display for SeriesError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            SeriesError::PrecisionExceeded { want, have } => {
                write!(f, "coefficient t^{want} beyond precision O(t^{have})")
            }
            SeriesError::PrecisionUnderflow { want, have } => {
                write!(f, "requested O(t^{want}) but operands support O(t^{have})")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TSeries {
    /// Exclusive truncation order; `None` = exact.
    prec: Option<i64>,
    /// Sparse coefficients, all keys `< prec`, no zero values.
    coeffs: BTreeMap<i64, MPoly>,
}

fn min_prec(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (Some(x), None) | (None, Some(x)) => Some(x),
        (None, None) => None,
    }
}

impl TSeries {
    pub fn zero(prec: Option<i64>) -> Self {
        TSeries {
            prec,
            coeffs: BTreeMap::new(),
        }
    }

    /// Exact single term `c * t^e`.
    pub fn term(e: i64, c: MPoly) -> Self {
        let mut s = TSeries::zero(None);
        s.add_coeff(e, c);
        s
    }

    pub fn prec(&self) -> Option<i64> {
        self.prec
    }

    /// Valuation used for product precision: the lowest stored exponent, or
    /// the truncation order itself when nothing is stored (`0 + O(t^p)`).
    fn val_for_prec(&self) -> Option<i64> {
        match self.coeffs.keys().next() {
            Some(&e) => Some(e),
            None => self.prec,
        }
    }

    pub fn valuation(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn is_zero_known(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&i64, &MPoly)> {
        self.coeffs.iter()
    }

    pub fn add_coeff(&mut self, e: i64, c: MPoly) {
        if let Some(p) = self.prec {
            if e >= p {
                return;
            }
        }
        if c.is_zero() {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match self.coeffs.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get().add(&c);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// Coefficient of `t^e`; zero only when `e` is inside the known range.
    pub fn coeff(&self, e: i64) -> Result<MPoly, SeriesError> {
        if let Some(p) = self.prec {
            if e >= p {
                return Err(SeriesError::PrecisionExceeded { want: e, have: p });
            }
        }
        Ok(self.coeffs.get(&e).cloned().unwrap_or_default())
    }

    pub fn add(&self, other: &TSeries) -> TSeries {
        let prec = min_prec(self.prec, other.prec);
        let mut r = TSeries::zero(prec);
        for (&e, c) in &self.coeffs {
            r.add_coeff(e, c.clone());
        }
        for (&e, c) in &other.coeffs {
            r.add_coeff(e, c.clone());
        }
        r
    }

    pub fn sub(&self, other: &TSeries) -> TSeries {
        let prec = min_prec(self.prec, other.prec);
        let mut r = TSeries::zero(prec);
        for (&e, c) in &self.coeffs {
            r.add_coeff(e, c.clone());
        }
        for (&e, c) in &other.coeffs {
            r.add_coeff(e, c.neg());
        }
        r
    }

    pub fn mul(&self, other: &TSeries) -> TSeries {
        let prec = match (self.prec, other.prec) {
            (None, None) => None,
            _ => {
                let pa = match (self.prec, other.val_for_prec()) {
                    (Some(p), Some(v)) => Some(p + v),
                    (Some(_), None) => None, // other is exact zero
                    (None, _) => None,
                };
                let pb = match (other.prec, self.val_for_prec()) {
                    (Some(p), Some(v)) => Some(p + v),
                    (Some(_), None) => None,
                    (None, _) => None,
                };
                min_prec(pa, pb)
            }
        };
        let mut r = TSeries::zero(prec);
        for (&i, ci) in &self.coeffs {
            for (&j, cj) in &other.coeffs {
                if let Some(p) = prec {
                    if i + j >= p {
                        continue;
                    }
                }
                r.add_coeff(i + j, ci.mul(cj));
            }
        }
        r
    }

    /// Multiply by `c * t^shift`.
    pub fn mul_term(&self, shift: i64, c: &MPoly) -> TSeries {
        if c.is_zero() {
            return TSeries::zero(self.prec.map(|p| p + shift));
        }
        let mut r = TSeries::zero(self.prec.map(|p| p + shift));
        for (&e, v) in &self.coeffs {
            r.add_coeff(e + shift, v.mul(c));
        }
        r
    }

    pub fn scalar_mul(&self, c: &Rat) -> TSeries {
        let mut r = TSeries::zero(self.prec);
        for (&e, v) in &self.coeffs {
            r.add_coeff(e, v.scalar_mul(c));
        }
        r
    }

    pub fn derivative_t(&self) -> TSeries {
        let mut r = TSeries::zero(self.prec.map(|p| p - 1));
        for (&e, v) in &self.coeffs {
            if e != 0 {
                r.add_coeff(e - 1, v.scalar_mul(&crate::rat::rat_i(e)));
            }
        }
        r
    }

    pub fn truncate(&self, prec: i64) -> TSeries {
        let mut r = TSeries::zero(Some(match self.prec {
            Some(p) => p.min(prec),
            None => prec,
        }));
        for (&e, v) in &self.coeffs {
            r.add_coeff(e, v.clone());
        }
        r
    }

    /// Pipeline-level refinement: drop coefficient terms of `s`-magnitude
    /// beyond `cap`. Sound wherever only magnitudes `<= cap` are consumed.
    pub fn truncate_s_magnitude(&self, cap: i64) -> TSeries {
        let mut r = TSeries::zero(self.prec);
        for (&e, v) in &self.coeffs {
            r.add_coeff(e, v.truncate_s_magnitude(cap));
        }
        r
    }
}

/// Substitute series for `x`, `y` (and optionally `p`) in a polynomial,
/// requesting the result to order `O(t^want)`. `s`-variables stay symbolic.
pub fn subst_xyp(
    poly: &MPoly,
    x: &TSeries,
    y: &TSeries,
    p: Option<&TSeries>,
    want: i64,
) -> Result<TSeries, SeriesError> {
    let mut x_pows: Vec<TSeries> = Vec::new();
    let mut y_pows: Vec<TSeries> = Vec::new();
    let mut p_pows: Vec<TSeries> = Vec::new();
    let mut result = TSeries::zero(None);
    for (m, c) in poly.iter() {
        if m.p > 0 && p.is_none() {
            // no replacement series for p
            return Err(SeriesError::PrecisionUnderflow { want, have: i64::MIN });
        }
        let mut term = TSeries::term(
            0,
            MPoly::monomial(
                crate::poly::Monomial {
                    s: m.s.clone(),
                    ..Default::default()
                },
                c.clone(),
            ),
        );
        for (base, e, cache) in [
            (Some(x), m.x, &mut x_pows),
            (Some(y), m.y, &mut y_pows),
            (p, m.p, &mut p_pows),
        ] {
            if e == 0 {
                continue;
            }
            let base = base.expect("checked above");
            while cache.len() < e as usize {
                let next = match cache.last() {
                    None => base.truncate_relative(want),
                    Some(prev) => prev.mul(base).truncate_relative(want),
                };
                cache.push(next);
            }
            term = term.mul(&cache[e as usize - 1]).truncate_relative(want);
        }
        result = result.add(&term);
    }
    match result.prec() {
        Some(have) if have < want => Err(SeriesError::PrecisionUnderflow { want, have }),
        _ => Ok(result.truncate(want)),
    }
}

impl TSeries {
    /// Truncate to `want` only when that loses nothing we are entitled to:
    /// keeps exactness info if the series is exact with no terms past `want`.
    fn truncate_relative(&self, want: i64) -> TSeries {
        match self.prec {
            None => {
                if self.coeffs.keys().next_back().is_some_and(|&e| e >= want) {
                    self.truncate(want)
                } else {
                    self.clone()
                }
            }
            Some(p) if p > want => self.truncate(want),
            _ => self.clone(),
        }
    }
}
