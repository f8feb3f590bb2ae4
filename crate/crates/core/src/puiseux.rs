//! Parametrization of the relative conormal of `F_A`.
//!
//! With the rational sign convention (at least one of `k`, `n` is odd):
//! for odd `n`
//!
//! `X = -t^k`, `Y = t^n + sum_{i>=1} psi_i t^{n+i}`,
//!
//! and for odd `k` (even `n`) `X = t^k`, `Y = -t^n - sum psi_i t^{n+i}`.
//! The coefficients `psi_i` in `Q[s_A]` are solved degree by degree from
//! `F_A(X, Y) = 0`; each is homogeneous of degree `-i` and vanishes at
//! `s = 0`. `P = dY/dt / dX/dt` then parametrizes the conormal.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;



use crate::family::{CurveFamily, ParamSet};
use crate::poly::{Degree, MPoly, Monomial, Var};
use crate::rat::{rat, rat_i, Rat};
use crate::series::{SeriesError, TSeries};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PuiseuxError {
    PrecisionTooLow { min: i64, got: i64 },
    Series(SeriesError),
    /// The degree-by-degree solve lost homogeneity (cannot happen for valid
    /// input; kept as a hard failure rather than an assert).
    HomogeneityBroken { index: i64 },
}

impl core::fmt::Display for PuiseuxError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            PuiseuxError::PrecisionTooLow { min, got } => {
                write!(f, "precision {got} below the minimum {min}")
            }
            PuiseuxError::Series(e) => write!(f, "{e}"),
            PuiseuxError::HomogeneityBroken { index } => {
                write!(f, "psi_{index} is not homogeneous of degree -{index}")
            }
        }
    }
}

impl From<SeriesError> for PuiseuxError {
    fn from(e: SeriesError) -> Self {
        PuiseuxError::Series(e)
    }
}

/// The series triple `(X, Y, P)` with the psi-table and cached powers of `Y`.
#[derive(Clone, Debug)]
pub struct ConormalParam {
    pub x: TSeries,
    pub y: TSeries,
    pub p: TSeries,
    /// `i -> psi_i`, nonzero entries only.
    pub psi: BTreeMap<i64, MPoly>,
    pub eps_x: i64,
    pub eps_y: i64,
    /// `y_pows[e] = Y^e + O(t^prec)`, `e = 0..=k`.
    pub y_pows: Vec<TSeries>,
    pub prec: i64,
    pub mag_cap: Option<i64>,
}

impl ConormalParam {
    /// `X^a Y^b` as a series (single-term `X` makes this a shift).
    pub fn phi_star_monomial(&self, a: u32, b: u32) -> TSeries {
        let k = self.x_exponent();
        let sign = if self.eps_x == -1 && a % 2 == 1 {
            rat_i(-1)
        } else {
            rat_i(1)
        };
        let base = if (b as usize) < self.y_pows.len() {
            self.y_pows[b as usize].clone()
        } else {
            let mut acc = self.y_pows.last().expect("powers nonempty").clone();
            for _ in self.y_pows.len()..=b as usize {
                acc = acc.mul(&self.y);
            }
            acc
        };
        base.mul_term(k * a as i64, &MPoly::constant(sign))
    }

    fn x_exponent(&self) -> i64 {
        self.x.valuation().expect("X has exactly one term")
    }

    /// Pullback of a polynomial in `x, y, p` (and `s`) along the conormal
    /// parametrization.
    pub fn pull_back(&self, g: &MPoly, want: i64) -> Result<TSeries, SeriesError> {
        let r = crate::series::subst_xyp(g, &self.x, &self.y, Some(&self.p), want)?;
        Ok(match self.mag_cap {
            Some(cap) => r.truncate_s_magnitude(cap),
            None => r,
        })
    }
}

/// Compute the conormal parametrization of `F_A` to `O(t^prec)`.
///
/// `mag_cap` truncates coefficient `s`-magnitudes; results of magnitude
/// `<= cap` are unaffected because magnitudes only grow under products.
pub fn parametrize(
    family: &CurveFamily,
    set: &ParamSet,
    prec: i64,
    mag_cap: Option<i64>,
) -> Result<ConormalParam, PuiseuxError> {
    let k = family.k as i64;
    let n = family.n as i64;
    let kn = family.kn();
    let min_prec = kn + 1;
    if prec < min_prec {
        return Err(PuiseuxError::PrecisionTooLow {
            min: min_prec,
            got: prec,
        });
    }
    let (eps_x, eps_y) = if n % 2 == 1 { (-1i64, 1i64) } else { (1, -1) };

    let cap = |p: MPoly| -> MPoly {
        match mag_cap {
            Some(c) => p.truncate_s_magnitude(c),
            None => p,
        }
    };

    // X = eps_x t^k, exact.
    let x = TSeries::term(k, MPoly::constant(rat_i(eps_x)));
    // Y starts as eps_y t^n + O(t^prec).
    let mut y = TSeries::zero(Some(prec));
    y.add_coeff(n, MPoly::constant(rat_i(eps_y)));

    // Powers Y^0..Y^k, all maintained to O(t^prec).
    let mut pows: Vec<TSeries> = Vec::with_capacity(family.k as usize + 1);
    for e in 0..=k {
        let mut s = TSeries::zero(Some(prec));
        s.add_coeff(
            e * n,
            MPoly::constant(if eps_y == -1 && e % 2 == 1 {
                rat_i(-1)
            } else {
                rat_i(1)
            }),
        );
        pows.push(s);
    }

    // Deformation support: sigma -> (i, j, eps_x^i sign).
    let supp: Vec<(u32, u32, u32, Rat)> = set
        .sigmas
        .iter()
        .map(|&sigma| {
            let (i, j) = family.point_of_sigma(sigma).expect("sigma in I_B");
            let sign = if eps_x == -1 && i % 2 == 1 {
                rat_i(-1)
            } else {
                rat_i(1)
            };
            (sigma, i, j, sign)
        })
        .collect();

    // Residual R = F_A(X, Y) = Y^k + eps_x^n t^kn + sum s_sigma eps_x^i t^{ki} Y^j.
    let mut residual = pows[k as usize].clone();
    let f_sign = if eps_x == -1 && n % 2 == 1 {
        rat_i(-1)
    } else {
        rat_i(1)
    };
    residual.add_coeff(kn, MPoly::constant(f_sign));
    for &(sigma, i, j, ref sign) in &supp {
        let coeff = MPoly::monomial(Monomial::var(Var::S(sigma)), sign.clone());
        let contrib = pows[j as usize].mul_term(k * i as i64, &coeff);
        residual = residual.add(&contrib);
    }
    residual = residual.truncate(prec);

    // The linear coefficient of psi_m in the t^{kn+m} residual is k eps_y^k.
    let lead = rat_i(k * if eps_y == -1 && k % 2 == 1 { -1 } else { 1 });

    let mut psi: BTreeMap<i64, MPoly> = BTreeMap::new();
    for m in 1..=(prec - 1 - kn) {
        let c = residual.coeff(kn + m)?;
        if c.is_zero() {
            continue;
        }
        let psi_m = cap(c.scalar_mul(&(-Rat::from_integer(1.into()) / &lead)));
        if psi_m.is_zero() {
            continue;
        }
        match psi_m.weighted_degree(&family.grading) {
            Degree::Homogeneous(d) if d == -m => {}
            Degree::Zero => {}
            _ => return Err(PuiseuxError::HomogeneityBroken { index: m }),
        }
        // delta = eps_y psi_m t^{n+m}; update powers top-down, residual along.
        let delta_coeff = cap(psi_m.scalar_mul(&rat_i(eps_y)));
        let mut delta_pows: Vec<MPoly> = alloc::vec![MPoly::one(), delta_coeff.clone()];
        for e in (1..=k as usize).rev() {
            // Delta(Y^e) = sum_{j=1..e} C(e,j) Y^{e-j} delta^j
            let mut change = TSeries::zero(Some(prec));
            for j in 1..=e {
                let shift = (n + m) * j as i64;
                if shift >= prec {
                    break;
                }
                while delta_pows.len() <= j {
                    let next = cap(delta_pows.last().unwrap().mul(&delta_coeff));
                    delta_pows.push(next);
                }
                let binom = binomial(e as i64, j as i64);
                let coeff = cap(delta_pows[j].scalar_mul(&binom));
                if coeff.is_zero() {
                    continue;
                }
                change = change.add(&pows[e - j].mul_term(shift, &coeff).truncate(prec));
            }
            if change.is_zero_known() {
                continue;
            }
            let change = match mag_cap {
                Some(capv) => change.truncate_s_magnitude(capv),
                None => change,
            };
            pows[e] = pows[e].add(&change);
            if e == k as usize {
                residual = residual.add(&change.truncate(prec));
            }
            for &(sigma, i, jj, ref sign) in &supp {
                if jj as usize == e {
                    let coeff = MPoly::monomial(Monomial::var(Var::S(sigma)), sign.clone());
                    residual = residual
                        .add(&change.mul_term(k * i as i64, &coeff).truncate(prec));
                }
            }
        }
        if let Some(capv) = mag_cap {
            residual = residual.truncate_s_magnitude(capv);
        }
        debug_assert!(residual.coeff(kn + m).map(|c| c.is_zero()).unwrap_or(true));
        psi.insert(m, psi_m);
    }
    debug_assert!(
        residual.is_zero_known(),
        "F_A(X, Y) must vanish to the working precision"
    );

    // P = dY/dt / dX/dt; dX/dt = eps_x k t^{k-1} is a single term.
    let p = y
        .derivative_t()
        .mul_term(-(k - 1), &MPoly::constant(rat(1, eps_x * k)));

    Ok(ConormalParam {
        x,
        y,
        p,
        psi,
        eps_x,
        eps_y,
        y_pows: pows,
        prec,
        mag_cap,
    })
}

fn binomial(n: i64, k: i64) -> Rat {
    let mut r = Rat::from_integer(1.into());
    for i in 0..k {
        r *= Rat::from_integer((n - i).into());
        r /= Rat::from_integer((i + 1).into());
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::SetName;
    use crate::series::subst_xyp;

    fn param_6_13_c() -> (CurveFamily, ConormalParam) {
        let fam = CurveFamily::new(6, 13).unwrap();
        let set = fam.named_set(SetName::C);
        let p = parametrize(&fam, &set, 120, None).unwrap();
        (fam, p)
    }

    #[test]
    fn psi_two_is_s2_over_six() {
        let (_fam, par) = param_6_13_c();
        let expect = MPoly::var(Var::S(2)).scalar_mul(&rat(1, 6));
        assert_eq!(par.psi.get(&2), Some(&expect));
        assert_eq!(par.psi.get(&1), None);
        // psi_3 = s3/6, psi_4 = s4/6 - s2^2/72 (from the degree-by-degree solve)
        assert_eq!(
            par.psi.get(&3),
            Some(&MPoly::var(Var::S(3)).scalar_mul(&rat(1, 6)))
        );
        let s2 = MPoly::var(Var::S(2));
        let psi4 = MPoly::var(Var::S(4))
            .scalar_mul(&rat(1, 6))
            .add(&s2.mul(&s2).scalar_mul(&rat(-1, 72)));
        assert_eq!(par.psi.get(&4), Some(&psi4));
    }

    #[test]
    fn psi_table_vanishes_at_origin() {
        // every psi_i lies in the ideal (s_A): at s = 0 the branch is monomial
        let fam = CurveFamily::new(6, 13).unwrap();
        let set = fam.custom_set("C", &fam.sigma_c).unwrap();
        let par = parametrize(&fam, &set, 100, None).unwrap();
        assert!(!par.psi.is_empty());
        for psi in par.psi.values() {
            assert!(psi.restrict_zero(&fam.sigma_c).is_zero());
        }
    }

    #[test]
    fn p_series_leading_terms() {
        let (_fam, par) = param_6_13_c();
        // p = -13/6 t^7 - 5/2 psi_2 t^9 - 8/3 psi_3 t^10 - ...
        assert_eq!(par.p.coeff(7).unwrap(), MPoly::constant(rat(-13, 6)));
        let psi2 = par.psi[&2].clone();
        assert_eq!(par.p.coeff(9).unwrap(), psi2.scalar_mul(&rat(-5, 2)));
        let psi3 = par.psi[&3].clone();
        assert_eq!(par.p.coeff(10).unwrap(), psi3.scalar_mul(&rat(-8, 3)));
        assert_eq!(par.p.coeff(8).unwrap(), MPoly::zero());
    }

    #[test]
    fn deformation_vanishes_on_parametrization() {
        // independent substitution route, not the incremental solver state
        let (fam, par) = param_6_13_c();
        let fc = fam.deformation_poly(&fam.named_set(SetName::C));
        let r = subst_xyp(&fc, &par.x, &par.y, None, 115).unwrap();
        assert!(r.is_zero_known());
    }

    #[test]
    fn conormal_identity() {
        // Psi*(dF/dx + P dF/dy) = 0 to precision - n
        let (fam, par) = param_6_13_c();
        let fc = fam.deformation_poly(&fam.named_set(SetName::C));
        let want = par.prec - fam.n as i64;
        let gx = subst_xyp(&fc.derivative(Var::X), &par.x, &par.y, None, want).unwrap();
        let gy = subst_xyp(&fc.derivative(Var::Y), &par.x, &par.y, None, want).unwrap();
        let lhs = gx.add(&par.p.mul(&gy)).truncate(want);
        assert!(lhs.is_zero_known());
    }

    #[test]
    fn homogeneity_of_series() {
        // with o(t) = 1: X, Y, P homogeneous of degrees k, n, n-k
        let (fam, par) = param_6_13_c();
        let g = &fam.grading;
        for (&e, c) in par.y.iter() {
            match c.weighted_degree(g) {
                Degree::Homogeneous(d) => assert_eq!(d + e, 13),
                Degree::Zero => {}
                Degree::Inhomogeneous => panic!("inhomogeneous Y coefficient"),
            }
        }
        for (&e, c) in par.p.iter() {
            match c.weighted_degree(g) {
                Degree::Homogeneous(d) => assert_eq!(d + e, 7),
                Degree::Zero => {}
                Degree::Inhomogeneous => panic!("inhomogeneous P coefficient"),
            }
        }
    }

    #[test]
    fn even_n_sign_convention() {
        // k odd, n even: X = t^k, Y = -t^n - ...
        let fam = CurveFamily::new(3, 8).unwrap();
        let set = fam.named_set(SetName::C);
        let par = parametrize(&fam, &set, 40, None).unwrap();
        assert_eq!(par.eps_x, 1);
        assert_eq!(par.eps_y, -1);
        let fc = fam.deformation_poly(&set);
        let r = subst_xyp(&fc, &par.x, &par.y, None, 35).unwrap();
        assert!(r.is_zero_known());
    }

    #[test]
    fn restriction_compatibility() {
        // parametrize over C = parametrize over B with s_{B\C} -> 0
        let fam = CurveFamily::new(4, 9).unwrap();
        let pb = parametrize(&fam, &fam.named_set(SetName::B), 80, None).unwrap();
        let pc = parametrize(&fam, &fam.named_set(SetName::C), 80, None).unwrap();
        let kill: Vec<u32> = fam
            .sigma_b
            .iter()
            .copied()
            .filter(|s| !fam.sigma_c.contains(s))
            .collect();
        for (&i, psi_c) in &pc.psi {
            assert_eq!(&pb.psi[&i].restrict_zero(&kill), psi_c);
        }
        for (&i, psi_b) in &pb.psi {
            let r = psi_b.restrict_zero(&kill);
            if !r.is_zero() {
                assert_eq!(&r, &pc.psi[&i]);
            }
        }
    }

    #[test]
    fn precision_guard() {
        let fam = CurveFamily::new(6, 13).unwrap();
        let set = fam.named_set(SetName::C);
        assert!(matches!(
            parametrize(&fam, &set, 50, None),
            Err(PuiseuxError::PrecisionTooLow { .. })
        ));
    }
}
