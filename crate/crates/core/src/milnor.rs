//! Reduction modulo the relative Jacobian ideal and the lifted polynomials
//! `H^gamma`.
//!
//! The initial terms of `dF_A/dx` and `dF_A/dy` are unit multiples of
//! `x^{n-1}` and `y^{k-1}`, so division rewrites any monomial outside the
//! basis rectangle. Each rewrite raises the `x,y`-weighted degree by some
//! `sigma >= 1` while deepening the `s`-part by `s_sigma`; a term whose
//! `x,y`-degree exceeds `kn + omega = o(m_mu)` can no longer reach any basis
//! coordinate and lies in the Jacobian ideal, so it is dropped (that drop is
//! what makes the rewriting terminate).

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::One;

use crate::family::{CurveFamily, ParamSet};
use crate::grading::Grading;
use crate::poly::{Degree, MPoly, Monomial, Var};
use crate::puiseux::ConormalParam;
use crate::rat::{rat_i, Rat};
use crate::series::{SeriesError, TSeries};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MilnorError {
    PrecisionTooLow { need: i64, have: i64 },
    /// A residual order fell outside the semigroup `<k, n>`; impossible for
    /// valid input (all orders exceed the Frobenius number).
    SemigroupGap { order: i64 },
    Series(SeriesError),
}

impl core::fmt::Display for MilnorError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            MilnorError::PrecisionTooLow { need, have } => {
                write!(f, "parametrization precision {have} below required {need}")
            }
            MilnorError::SemigroupGap { order } => {
                write!(f, "residual order {order} not in the value semigroup")
            }
            MilnorError::Series(e) => write!(f, "{e}"),
        }
    }
}

impl From<SeriesError> for MilnorError {
    fn from(e: SeriesError) -> Self {
        MilnorError::Series(e)
    }
}

/// Coordinates in the Milnor basis `m_1..m_mu`, keyed by basis index.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct NormalForm {
    pub coords: BTreeMap<usize, MPoly>,
}

impl NormalForm {
    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    /// Reassemble `sum g_v m_v` as a polynomial.
    pub fn to_poly(&self, family: &CurveFamily) -> MPoly {
        let mut out = MPoly::zero();
        for (&idx, g) in &self.coords {
            let (i, j) = family.basis[idx];
            out.add_assign(&g.mul_term(&Monomial::xy(i, j), &Rat::one()));
        }
        out
    }
}

/// Result of one division; cofactors reconstruct the input up to the dropped
/// part, which consists of terms of `x,y`-degree beyond `kn + omega` (already
/// in the Jacobian ideal) and, under a magnitude cap, coefficient terms
/// beyond the cap.
#[derive(Clone, Debug)]
pub struct Reduction {
    pub nf: NormalForm,
    pub cof_x: MPoly,
    pub cof_y: MPoly,
    pub dropped: MPoly,
}

/// Division engine for a fixed deformation `F_A`.
pub struct Reducer<'a> {
    pub family: &'a CurveFamily,
    pub set: &'a ParamSet,
    pub mag_cap: Option<i64>,
    /// `(sigma, i, j)` for each deformation monomial.
    support: Vec<(u32, u32, u32)>,
    dfx: MPoly,
    dfy: MPoly,
}

impl<'a> Reducer<'a> {
    pub fn new(family: &'a CurveFamily, set: &'a ParamSet, mag_cap: Option<i64>) -> Self {
        let support: Vec<(u32, u32, u32)> = set
            .sigmas
            .iter()
            .map(|&s| {
                let (i, j) = family.point_of_sigma(s).expect("sigma in I_B");
                (s, i, j)
            })
            .collect();
        let fa = family.deformation_poly(set);
        Reducer {
            family,
            set,
            mag_cap,
            support,
            dfx: fa.derivative(Var::X),
            dfy: fa.derivative(Var::Y),
        }
    }

    pub fn dfx(&self) -> &MPoly {
        &self.dfx
    }

    pub fn dfy(&self) -> &MPoly {
        &self.dfy
    }

    /// Normal form of a polynomial in `x, y` with `Q[s_A]` coefficients.
    pub fn reduce(&self, g: &MPoly) -> Reduction {
        let fam = self.family;
        let gr = &fam.grading;
        let n = fam.n;
        let k = fam.k;
        let kn = fam.kn();
        let max_deg = kn + fam.omega;

        // worklist keyed by ascending x,y-weighted degree
        let mut work: BTreeMap<(i64, u32, u32), MPoly> = BTreeMap::new();
        let push = |work: &mut BTreeMap<(i64, u32, u32), MPoly>, i: u32, j: u32, c: MPoly| {
            if c.is_zero() {
                return;
            }
            let key = (gr.xy(i, j), i, j);
            let e = work.entry(key).or_default();
            e.add_assign(&c);
            if e.is_zero() {
                work.remove(&key);
            }
        };
        for (m, c) in g.iter() {
            debug_assert_eq!(m.p, 0, "reduction input must not involve p");
            let mut s_only = m.clone();
            s_only.x = 0;
            s_only.y = 0;
            push(
                &mut work,
                m.x,
                m.y,
                MPoly::monomial(s_only, c.clone()),
            );
        }

        let mut nf = NormalForm::default();
        let mut cof_x = MPoly::zero();
        let mut cof_y = MPoly::zero();
        let mut dropped = MPoly::zero();

        while let Some(((deg, i, j), mut coeff)) = work.pop_first() {
            if let Some(cap) = self.mag_cap {
                coeff = coeff.truncate_s_magnitude(cap);
                if coeff.is_zero() {
                    continue;
                }
            }
            if i <= n - 2 && j <= k - 2 {
                let idx = fam.basis_index[&(i, j)];
                let e = nf.coords.entry(idx).or_default();
                e.add_assign(&coeff);
                if e.is_zero() {
                    nf.coords.remove(&idx);
                }
                continue;
            }
            if deg > max_deg {
                dropped.add_assign(&coeff.mul_term(&Monomial::xy(i, j), &Rat::one()));
                continue;
            }
            if j >= k - 1 {
                // y^{k-1} = (1/k)(dF/dy - sum j_s s x^i y^{j-1})
                let q = coeff.scalar_mul(&Rat::new(1.into(), (k as i64).into()));
                cof_y.add_assign(&q.mul_term(&Monomial::xy(i, j - (k - 1)), &Rat::one()));
                for &(sig, is, js) in &self.support {
                    let factor = MPoly::monomial(
                        Monomial::var(Var::S(sig)),
                        Rat::new((-(js as i64)).into(), (k as i64).into()),
                    );
                    push(
                        &mut work,
                        i + is,
                        j - (k - 1) + js - 1,
                        coeff.mul(&factor),
                    );
                }
            } else {
                debug_assert!(i >= n - 1, "non-basis monomial must be divisible");
                let q = coeff.scalar_mul(&Rat::new(1.into(), (n as i64).into()));
                cof_x.add_assign(&q.mul_term(&Monomial::xy(i - (n - 1), j), &Rat::one()));
                for &(sig, is, js) in &self.support {
                    let factor = MPoly::monomial(
                        Monomial::var(Var::S(sig)),
                        Rat::new((-(is as i64)).into(), (n as i64).into()),
                    );
                    push(
                        &mut work,
                        i - (n - 1) + is - 1,
                        j + js,
                        coeff.mul(&factor),
                    );
                }
            }
        }

        Reduction {
            nf,
            cof_x,
            cof_y,
            dropped,
        }
    }
}

/// The lifted polynomial `H^gamma`, congruent to `p^gamma dF_A/dx` modulo the
/// conormal ideal plus the Jacobian ideal.
#[derive(Clone, Debug)]
pub struct HGamma {
    pub gamma: u32,
    /// `gamma (n-k) + kn - k`.
    pub degree: i64,
    /// Terms of `x,y`-degree `<= kn + omega` (the downstream-relevant part).
    pub h: MPoly,
    /// Matched terms beyond `kn + omega`; they lie in the Jacobian ideal.
    pub discard: MPoly,
    /// The solve ran to `O(t^t_bound)`.
    pub t_bound: i64,
}

/// Express a pulled-back series as a combination of monomial pullbacks,
/// ascending in `t`-order up to `bound`. Terms of `x,y`-degree `<= split` go
/// into the first polynomial, the rest into the second. The series must
/// vanish to `O(t^bound)` after matching; orders below the Frobenius bound
/// cannot occur for pulled-back data.
pub fn match_monomials(
    param: &ConormalParam,
    series: &TSeries,
    bound: i64,
    split: i64,
) -> Result<(MPoly, MPoly), MilnorError> {
    let mut w = series.clone();
    if let Some(p) = w.prec() {
        if p < bound {
            return Err(MilnorError::PrecisionTooLow { need: bound, have: p });
        }
    }
    w = w.truncate(bound);
    let grading = grading_of(param);
    let mut low = MPoly::zero();
    let mut high = MPoly::zero();
    loop {
        let Some(e) = w.valuation() else { break };
        let c = w.coeff(e)?;
        debug_assert!(!c.is_zero(), "stored series coefficients are nonzero");
        let Some((a, b)) = grading.canonical_rep(e) else {
            return Err(MilnorError::SemigroupGap { order: e });
        };
        let sign = pullback_sign(param, a, b);
        let coef = c.scalar_mul(&sign);
        let target = if e <= split { &mut low } else { &mut high };
        target.add_assign(&coef.mul_term(&Monomial::xy(a, b), &Rat::one()));
        let sub = param.phi_star_monomial(a, b).mul_term(0, &coef).truncate(bound);
        w = w.sub(&sub);
        if let Some(cap) = param.mag_cap {
            w = w.truncate_s_magnitude(cap);
        }
        debug_assert!(w.coeff(e).map(|c| c.is_zero()).unwrap_or(true));
    }
    Ok((low, high))
}

fn grading_of(param: &ConormalParam) -> Grading {
    let k = param.x.valuation().expect("X single term") as u32;
    let n = param.y.valuation().expect("Y leading term") as u32;
    Grading::new(k, n)
}

fn pullback_sign(param: &ConormalParam, a: u32, b: u32) -> Rat {
    // 1 / (eps_x^a eps_y^b)
    let mut s = 1i64;
    if param.eps_x == -1 && a % 2 == 1 {
        s = -s;
    }
    if param.eps_y == -1 && b % 2 == 1 {
        s = -s;
    }
    rat_i(s)
}

/// `H^gamma` via the ascending-order monomial subtraction against
/// `Psi*(p^gamma dF_A/dx)`, run to `t_bound` (default
/// `d_gamma + k(n-1) + 1`).
pub fn compute_h(
    reducer: &Reducer<'_>,
    param: &ConormalParam,
    gamma: u32,
    t_bound: Option<i64>,
) -> Result<HGamma, MilnorError> {
    debug_assert!(gamma >= 1, "H^0 is F_A by convention");
    let fam = reducer.family;
    let k = fam.k as i64;
    let n = fam.n as i64;
    let degree = gamma as i64 * (n - k) + fam.kn() - k;
    let bound = t_bound.unwrap_or(degree + k * (n - 1) + 1);
    if param.prec < bound {
        return Err(MilnorError::PrecisionTooLow {
            need: bound,
            have: param.prec,
        });
    }
    let mut w = param.pull_back(reducer.dfx(), bound)?;
    let mut p_pow = param.p.truncate(bound);
    for _ in 1..gamma {
        p_pow = p_pow.mul(&param.p).truncate(bound);
        if let Some(cap) = param.mag_cap {
            p_pow = p_pow.truncate_s_magnitude(cap);
        }
    }
    if gamma >= 1 {
        w = w.mul(&p_pow).truncate(bound);
        if let Some(cap) = param.mag_cap {
            w = w.truncate_s_magnitude(cap);
        }
    }
    let (h, discard) = match_monomials(param, &w, bound, fam.kn() + fam.omega)?;
    debug_assert!(matches!(
        h.weighted_degree(&fam.grading),
        Degree::Zero | Degree::Homogeneous(_)
    ));
    Ok(HGamma {
        gamma,
        degree,
        h,
        discard,
        t_bound: bound,
    })
}

/// All `H^1..H^{k-2}`, sharing the `P`-power cache.
pub fn compute_all_h(
    reducer: &Reducer<'_>,
    param: &ConormalParam,
) -> Result<Vec<HGamma>, MilnorError> {
    let fam = reducer.family;
    let k = fam.k as i64;
    let n = fam.n as i64;
    let mut out = Vec::new();
    if fam.k < 3 {
        return Ok(out);
    }
    let t_max = (fam.k as i64 - 2) * (n - k) + fam.kn() - k + k * (n - 1) + 1;
    let gx = param.pull_back(reducer.dfx(), t_max.min(param.prec))?;
    let mut w = gx.clone();
    for gamma in 1..=fam.k - 2 {
        let degree = gamma as i64 * (n - k) + fam.kn() - k;
        let bound = degree + k * (n - 1) + 1;
        if param.prec < bound {
            return Err(MilnorError::PrecisionTooLow {
                need: bound,
                have: param.prec,
            });
        }
        w = w.mul(&param.p);
        if let Some(cap) = param.mag_cap {
            w = w.truncate_s_magnitude(cap);
        }
        let (h, discard) = match_monomials(
            param,
            &w.truncate(bound),
            bound,
            fam.kn() + fam.omega,
        )?;
        out.push(HGamma {
            gamma,
            degree,
            h,
            discard,
            t_bound: bound,
        });
    }
    Ok(out)
}

/// One row of the structure-constant tensor: the normal form of
/// `m_ell H^gamma` expressed on the top `b` basis coordinates.
#[derive(Clone, Debug)]
pub struct TensorRow {
    pub gamma: u32,
    pub ell: usize,
    pub point: (u32, u32),
    pub alpha: i64,
    /// Coordinates keyed by `sigma_v`; support on the `I_B` block is forced
    /// by homogeneity.
    pub coords: BTreeMap<u32, MPoly>,
}

#[derive(Clone, Debug, Default)]
pub struct Tensor {
    pub rows: Vec<TensorRow>,
}

impl Tensor {
    pub fn rows_of_gamma(&self, gamma: u32) -> impl Iterator<Item = &TensorRow> {
        self.rows.iter().filter(move |r| r.gamma == gamma)
    }

    pub fn row(&self, gamma: u32, ell: usize) -> Option<&TensorRow> {
        self.rows.iter().find(|r| r.gamma == gamma && r.ell == ell)
    }
}

/// `alpha_ell^gamma`: the homogeneity order of the `(gamma, ell)` row.
pub fn alpha(family: &CurveFamily, gamma: u32, ell: usize) -> i64 {
    let base = family.basis_degree[ell];
    if gamma == 0 {
        base
    } else {
        base + gamma as i64 * (family.n as i64 - family.k as i64) - family.k as i64
    }
}

/// Structure constants `c^gamma_{ell, v}` for all rows with
/// `alpha_ell^gamma <= omega`; rows above `omega` vanish identically (their
/// products cannot reach the basis rectangle) and are omitted.
pub fn structure_constants(
    reducer: &Reducer<'_>,
    h_list: &[HGamma],
) -> Tensor {
    let fam = reducer.family;
    let fa = fam.deformation_poly(reducer.set);
    let mut rows = Vec::new();
    for gamma in 0..=(fam.k.saturating_sub(2)) {
        let h_poly = if gamma == 0 {
            fa.clone()
        } else {
            let hg = &h_list[gamma as usize - 1];
            debug_assert_eq!(hg.gamma, gamma);
            hg.h.clone()
        };
        for ell in 0..fam.mu {
            let a = alpha(fam, gamma, ell);
            if a > fam.omega {
                continue;
            }
            let (i, j) = fam.basis[ell];
            let product = h_poly.mul_term(&Monomial::xy(i, j), &Rat::one());
            let red = reducer.reduce(&product);
            let mut coords = BTreeMap::new();
            for (&idx, g) in &red.nf.coords {
                let sigma = fam.basis_degree[idx] - fam.kn();
                debug_assert!(sigma > 0, "tensor rows live on the I_B block");
                coords.insert(sigma as u32, g.clone());
            }
            rows.push(TensorRow {
                gamma,
                ell,
                point: (i, j),
                alpha: a,
                coords,
            });
        }
    }
    Tensor { rows }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::SetName;
    use crate::rat::rat;

    fn reducer_6_13<'a>(fam: &'a CurveFamily, set: &'a ParamSet) -> Reducer<'a> {
        Reducer::new(fam, set, None)
    }

    #[test]
    fn basis_monomial_is_its_own_normal_form() {
        let fam = CurveFamily::new(6, 13).unwrap();
        let set = fam.named_set(SetName::C);
        let red = reducer_6_13(&fam, &set);
        let g = MPoly::one();
        let r = red.reduce(&g);
        assert_eq!(r.nf.coords.len(), 1);
        assert_eq!(r.nf.coords[&0], MPoly::one());
        assert!(r.cof_x.is_zero() && r.cof_y.is_zero() && r.dropped.is_zero());
    }

    #[test]
    fn x_power_reduces_through_jacobian() {
        // at s = 0: x^{n-1} = (1/n) dF/dx exactly
        let fam = CurveFamily::new(6, 13).unwrap();
        let set = fam.named_set(SetName::C);
        let red = reducer_6_13(&fam, &set);
        let g = MPoly::monomial(Monomial::xy(12, 0), rat_i(1));
        let r = red.reduce(&g);
        // normal form has no s-free part
        for c in r.nf.coords.values() {
            assert!(c.constant_term() == Rat::from_integer(0.into()));
        }
        // certificate: g = sum g_v m_v + cof_x dF/dx + cof_y dF/dy + dropped
        let rebuilt = r
            .nf
            .to_poly(&fam)
            .add(&r.cof_x.mul(red.dfx()))
            .add(&r.cof_y.mul(red.dfy()))
            .add(&r.dropped);
        assert_eq!(rebuilt, g);
    }

    #[test]
    fn euler_identity() {
        // F_A = -(1/kn) sum sigma s_sigma m_sigma mod Jacobian
        for (k, n) in [(4u32, 9u32), (6, 13)] {
            let fam = CurveFamily::new(k, n).unwrap();
            for name in [SetName::C, SetName::B] {
                let set = fam.named_set(name);
                let red = Reducer::new(&fam, &set, None);
                let fa = fam.deformation_poly(&set);
                let r = red.reduce(&fa);
                for (&idx, g) in &r.nf.coords {
                    let sigma = fam.basis_degree[idx] - fam.kn();
                    assert!(sigma > 0);
                    let expect = MPoly::var(Var::S(sigma as u32))
                        .scalar_mul(&Rat::new((-sigma).into(), fam.kn().into()));
                    assert_eq!(g, &expect);
                }
                assert_eq!(r.nf.coords.len(), set.sigmas.len());
            }
        }
    }

    #[test]
    fn certificate_reconstructs_exactly() {
        let fam = CurveFamily::new(6, 13).unwrap();
        let set = fam.named_set(SetName::C);
        let red = reducer_6_13(&fam, &set);
        // y * F_C exercises both rules with nontrivial s-terms
        let fc = fam.deformation_poly(&set);
        let g = fc.mul_term(&Monomial::xy(0, 1), &Rat::one());
        let r = red.reduce(&g);
        let rebuilt = r
            .nf
            .to_poly(&fam)
            .add(&r.cof_x.mul(red.dfx()))
            .add(&r.cof_y.mul(red.dfy()))
            .add(&r.dropped);
        assert_eq!(rebuilt, g);
        // idempotence: reducing the reassembled normal form is stable
        let again = red.reduce(&r.nf.to_poly(&fam));
        assert_eq!(again.nf, r.nf);
    }

    #[test]
    fn y_times_f_c_leading_coordinates() {
        // -6*13 y F_C = 2 s2 x^9 y^3 + 3 s3 x^7 y^4 + ... mod Jacobian
        let fam = CurveFamily::new(6, 13).unwrap();
        let set = fam.named_set(SetName::C);
        let red = reducer_6_13(&fam, &set);
        let fc = fam.deformation_poly(&set);
        let g = fc.mul_term(&Monomial::xy(0, 1), &Rat::one());
        let r = red.reduce(&g);
        // x^9 y^3 has degree 93 = kn + 15, x^7 y^4 degree 94 = kn + 16
        let idx15 = fam.basis_of_sigma[&15];
        let idx16 = fam.basis_of_sigma[&16];
        assert_eq!(
            r.nf.coords[&idx15],
            MPoly::var(Var::S(2)).scalar_mul(&rat(-2, 78))
        );
        assert_eq!(
            r.nf.coords[&idx16],
            MPoly::var(Var::S(3)).scalar_mul(&rat(-3, 78))
        );
        // homogeneity pins every coordinate: sigma_v >= alpha = 13
        for &idx in r.nf.coords.keys() {
            assert!(fam.basis_degree[idx] - fam.kn() >= 13);
        }
    }

    #[test]
    fn h_at_origin_is_single_monomial() {
        // H^gamma(0) = n (n/k)^gamma x^{n-1-gamma} y^gamma
        let fam = CurveFamily::new(6, 13).unwrap();
        let set = fam.named_set(SetName::C);
        let cap = Some(fam.omega);
        let red = Reducer::new(&fam, &set, cap);
        let par =
            crate::puiseux::parametrize(&fam, &set, fam.default_precision(), cap).unwrap();
        let hs = compute_all_h(&red, &par).unwrap();
        assert_eq!(hs.len(), 4);
        for hg in &hs {
            let at_zero = hg.h.restrict_zero(&fam.sigma_c);
            let g = hg.gamma;
            let expect = MPoly::monomial(
                Monomial::xy(13 - 1 - g, g),
                rat_i(13) * rat(13, 6).pow(g as i32),
            );
            assert_eq!(at_zero, expect);
            assert_eq!(
                hg.h.weighted_degree(&fam.grading),
                Degree::Homogeneous(hg.degree)
            );
        }
    }

    #[test]
    fn h_congruence_certificate() {
        // Psi*(p^gamma dF/dx - H - discard) = 0 to the solve bound
        let fam = CurveFamily::new(4, 9).unwrap();
        let set = fam.named_set(SetName::C);
        let red = Reducer::new(&fam, &set, None);
        let par = crate::puiseux::parametrize(&fam, &set, fam.default_precision(), None).unwrap();
        for gamma in 1..=2u32 {
            let hg = compute_h(&red, &par, gamma, None).unwrap();
            let total = hg.h.add(&hg.discard);
            let mut target = red.dfx().clone();
            for _ in 0..gamma {
                target = target.mul(&MPoly::var(Var::P));
            }
            let diff = target.sub(&total);
            let pulled = par.pull_back(&diff, hg.t_bound).unwrap();
            assert!(pulled.is_zero_known());
        }
    }

    #[test]
    fn h_stability_under_precision_increase() {
        let fam = CurveFamily::new(5, 11).unwrap();
        let set = fam.named_set(SetName::C);
        let cap = Some(fam.omega);
        let red = Reducer::new(&fam, &set, cap);
        let par =
            crate::puiseux::parametrize(&fam, &set, fam.default_precision(), cap).unwrap();
        for gamma in 1..=3u32 {
            let h1 = compute_h(&red, &par, gamma, None).unwrap();
            let h2 = compute_h(&red, &par, gamma, Some(h1.t_bound + 5)).unwrap();
            assert_eq!(h1.h, h2.h);
        }
    }

    #[test]
    fn p2_x13_conormal_expansion() {
        // p^2 x^13 = (13/6)^2 x^11 y^2 + (13 psi_2 / 9) x^7 y^4 + ... on the
        // conormal, with psi_2 = s2/6
        let fam = CurveFamily::new(6, 13).unwrap();
        let set = fam.named_set(SetName::C);
        let par = crate::puiseux::parametrize(&fam, &set, 130, None).unwrap();
        let g = MPoly::monomial(Monomial::xy(13, 0), rat_i(1))
            .mul(&MPoly::var(Var::P).pow(2));
        let w = par.pull_back(&g, 100).unwrap();
        let (matched, rest) = match_monomials(&par, &w, 100, i64::MAX).unwrap();
        assert!(rest.is_zero());
        assert_eq!(matched.coeff(&Monomial::xy(11, 2)), rat(169, 36));
        let m74 = Monomial::xy(7, 4).mul(&Monomial::var(Var::S(2)));
        // 13 psi_2 / 9 = 13 s2 / 54
        assert_eq!(matched.coeff(&m74), rat(13, 54));
    }

    #[test]
    fn tensor_euler_row() {
        // c^0_{1,v} = -(sigma_v / kn) s_{sigma_v}
        let fam = CurveFamily::new(4, 9).unwrap();
        let set = fam.named_set(SetName::B);
        let red = Reducer::new(&fam, &set, None);
        let par = crate::puiseux::parametrize(&fam, &set, fam.default_precision(), None).unwrap();
        let hs = compute_all_h(&red, &par).unwrap();
        let tensor = structure_constants(&red, &hs);
        let row = tensor.row(0, 0).unwrap();
        assert_eq!(row.alpha, 0);
        for (&sigma, c) in &row.coords {
            let expect = MPoly::var(Var::S(sigma))
                .scalar_mul(&Rat::new((-(sigma as i64)).into(), fam.kn().into()));
            assert_eq!(c, &expect);
        }
        assert_eq!(row.coords.len(), fam.sigma_b.len());
    }

    #[test]
    fn tensor_rows_homogeneous() {
        let fam = CurveFamily::new(4, 9).unwrap();
        let set = fam.named_set(SetName::B);
        let red = Reducer::new(&fam, &set, None);
        let par = crate::puiseux::parametrize(&fam, &set, fam.default_precision(), None).unwrap();
        let hs = compute_all_h(&red, &par).unwrap();
        let tensor = structure_constants(&red, &hs);
        for row in &tensor.rows {
            for (&sigma, c) in &row.coords {
                match c.weighted_degree(&fam.grading) {
                    Degree::Homogeneous(d) => assert_eq!(d, row.alpha - sigma as i64),
                    Degree::Zero => {}
                    Degree::Inhomogeneous => panic!("inhomogeneous tensor entry"),
                }
            }
        }
    }
}
