//! Combinatorics of the branch `y^k + x^n` and its equisingular deformations.
//!
//! `B` is the lattice rectangle `i <= n-2`, `j <= k-2`; `C` cuts it by
//! `i + j <= n-2` and `D` by degree `<= kn + varpi`. For `C <= A <= B` the
//! deformation is
//!
//! `F_A = y^k + x^n + sum_{sigma in I_A} s_sigma m_sigma`,
//!
//! weighted-homogeneous of degree `kn`, where `m_sigma = x^i y^j` is the basis
//! monomial of degree `kn + sigma`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use num_integer::Integer;

use crate::grading::Grading;
use crate::poly::{MPoly, Monomial};
use crate::rat::rat_i;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyError {
    NotCoprime { k: u32, n: u32 },
    OrderViolated { k: u32, n: u32 },
    MultiplicityTooSmall { k: u32 },
}

impl core::fmt::Display for FamilyError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            FamilyError::NotCoprime { k, n } => write!(f, "k = {k} and n = {n} are not coprime"),
            FamilyError::OrderViolated { k, n } => write!(f, "need 2k < n, got k = {k}, n = {n}"),
            FamilyError::MultiplicityTooSmall { k } => write!(f, "need k >= 2, got k = {k}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SetName {
    B,
    C,
    D,
}

impl SetName {
    pub fn parse(s: &str) -> Option<SetName> {
        match s.trim() {
            "B" | "b" => Some(SetName::B),
            "C" | "c" => Some(SetName::C),
            "D" | "d" => Some(SetName::D),
            _ => None,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            SetName::B => "B",
            SetName::C => "C",
            SetName::D => "D",
        }
    }
}

/// A subset `A` with `C <= A <= B`, carried by its deformation support
/// `A_0` (as the ascending list of `sigma` values).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamSet {
    pub label: String,
    pub sigmas: Vec<u32>,
}

/// The curve `y^k + x^n` with its index sets, ordered Milnor basis and
/// numeric invariants.
#[derive(Clone, Debug)]
pub struct CurveFamily {
    pub k: u32,
    pub n: u32,
    pub grading: Grading,
    /// `y^k + x^n`.
    pub f: MPoly,
    /// Milnor basis `m_1..m_mu`: lattice points of `B` by ascending weighted
    /// degree (strictly increasing since `gcd(k, n) = 1`).
    pub basis: Vec<(u32, u32)>,
    /// Weighted degree of each basis monomial.
    pub basis_degree: Vec<i64>,
    pub set_b: Vec<(u32, u32)>,
    pub set_c: Vec<(u32, u32)>,
    pub set_d: Vec<(u32, u32)>,
    pub b0: Vec<(u32, u32)>,
    pub c0: Vec<(u32, u32)>,
    pub d0: Vec<(u32, u32)>,
    /// sigma values of `I_B`, `I_C`, `I_D` (ascending).
    pub sigma_b: Vec<u32>,
    pub sigma_c: Vec<u32>,
    pub sigma_d: Vec<u32>,
    /// sigma -> index into `basis`.
    pub basis_of_sigma: BTreeMap<u32, usize>,
    /// lattice point -> index into `basis`.
    pub basis_index: BTreeMap<(u32, u32), usize>,
    pub mu: usize,
    pub mu_hat: usize,
    pub b_count: usize,
    pub omega: i64,
    pub varpi: i64,
}

impl CurveFamily {
    pub fn new(k: u32, n: u32) -> Result<Self, FamilyError> {
        if k < 2 {
            return Err(FamilyError::MultiplicityTooSmall { k });
        }
        if 2 * k >= n {
            return Err(FamilyError::OrderViolated { k, n });
        }
        if k.gcd(&n) != 1 {
            return Err(FamilyError::NotCoprime { k, n });
        }
        let grading = Grading::new(k, n);
        let kn = k as i64 * n as i64;
        let omega = grading.xy(n - 2, k - 2) - kn;
        let varpi = grading.xy(n - k, k - 2) - kn;

        let mut set_b = Vec::new();
        for j in 0..=k - 2 {
            for i in 0..=n - 2 {
                set_b.push((i, j));
            }
        }
        let set_c: Vec<_> = set_b
            .iter()
            .copied()
            .filter(|&(i, j)| i + j <= n - 2)
            .collect();
        let set_d: Vec<_> = set_b
            .iter()
            .copied()
            .filter(|&(i, j)| grading.xy(i, j) - kn <= varpi)
            .collect();

        let mut basis = set_b.clone();
        basis.sort_by_key(|&(i, j)| grading.xy(i, j));
        let basis_degree: Vec<i64> = basis.iter().map(|&(i, j)| grading.xy(i, j)).collect();
        for w in basis_degree.windows(2) {
            debug_assert!(w[0] < w[1], "basis degrees must be strictly increasing");
        }

        let zero_part = |set: &[(u32, u32)]| -> Vec<(u32, u32)> {
            set.iter()
                .copied()
                .filter(|&(i, j)| grading.xy(i, j) > kn)
                .collect()
        };
        let b0 = zero_part(&set_b);
        let c0 = zero_part(&set_c);
        let d0 = zero_part(&set_d);
        let sigmas = |pts: &[(u32, u32)]| -> Vec<u32> {
            let mut v: Vec<u32> = pts
                .iter()
                .map(|&(i, j)| (grading.xy(i, j) - kn) as u32)
                .collect();
            v.sort_unstable();
            v
        };
        let sigma_b = sigmas(&b0);
        let sigma_c = sigmas(&c0);
        let sigma_d = sigmas(&d0);

        let mut basis_of_sigma = BTreeMap::new();
        let mut basis_index = BTreeMap::new();
        for (idx, &(i, j)) in basis.iter().enumerate() {
            let d = grading.xy(i, j) - kn;
            if d > 0 {
                basis_of_sigma.insert(d as u32, idx);
            }
            basis_index.insert((i, j), idx);
        }

        let mu = basis.len();
        let mu_hat = set_c.len();
        let b_count = b0.len();

        let f = MPoly::monomial(Monomial::xy(0, k), rat_i(1))
            .add(&MPoly::monomial(Monomial::xy(n, 0), rat_i(1)));

        Ok(CurveFamily {
            k,
            n,
            grading,
            f,
            basis,
            basis_degree,
            set_b,
            set_c,
            set_d,
            b0,
            c0,
            d0,
            sigma_b,
            sigma_c,
            sigma_d,
            basis_of_sigma,
            basis_index,
            mu,
            mu_hat,
            b_count,
            omega,
            varpi,
        })
    }

    pub fn kn(&self) -> i64 {
        self.k as i64 * self.n as i64
    }

    /// Basis monomial of degree `kn + sigma`.
    pub fn point_of_sigma(&self, sigma: u32) -> Option<(u32, u32)> {
        self.basis_of_sigma.get(&sigma).map(|&i| self.basis[i])
    }

    pub fn named_set(&self, name: SetName) -> ParamSet {
        let sigmas = match name {
            SetName::B => self.sigma_b.clone(),
            SetName::C => self.sigma_c.clone(),
            SetName::D => self.sigma_d.clone(),
        };
        ParamSet {
            label: String::from(name.as_str()),
            sigmas,
        }
    }

    /// Validate `C <= A <= B` (on deformation supports) for an explicit set.
    pub fn custom_set(&self, label: &str, sigmas: &[u32]) -> Result<ParamSet, String> {
        let mut sorted = sigmas.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        for s in &sorted {
            if !self.sigma_b.contains(s) {
                return Err(alloc::format!("sigma {s} is not in I_B"));
            }
        }
        for s in &self.sigma_c {
            if !sorted.contains(s) {
                return Err(alloc::format!("set must contain I_C; missing sigma {s}"));
            }
        }
        Ok(ParamSet {
            label: String::from(label),
            sigmas: sorted,
        })
    }

    /// `F_A = f + sum s_sigma m_sigma`, homogeneous of degree `kn`.
    pub fn deformation_poly(&self, set: &ParamSet) -> MPoly {
        let mut fa = self.f.clone();
        for &sigma in &set.sigmas {
            let (i, j) = self
                .point_of_sigma(sigma)
                .expect("ParamSet sigma not in I_B");
            let m = Monomial::xy(i, j).mul(&Monomial::var(crate::poly::Var::S(sigma)));
            fa.add_term(m, rat_i(1));
        }
        fa
    }

    /// Default working precision for the conormal parametrization: enough for
    /// every `H^gamma` solve plus the stability re-run.
    pub fn default_precision(&self) -> i64 {
        let k = self.k as i64;
        let n = self.n as i64;
        (k - 1) * (n - k) + k * n + k * (n - 1) + 2
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            CurveFamily::new(4, 10),
            Err(FamilyError::NotCoprime { .. })
        ));
        assert!(matches!(
            CurveFamily::new(5, 9),
            Err(FamilyError::OrderViolated { .. })
        ));
        assert!(matches!(
            CurveFamily::new(1, 7),
            Err(FamilyError::MultiplicityTooSmall { .. })
        ));
    }

    #[test]
    fn family_6_13() {
        let fam = CurveFamily::new(6, 13).unwrap();
        assert_eq!(fam.mu, 60);
        assert_eq!(fam.mu_hat, 50);
        assert_eq!(fam.b_count, 16);
        assert_eq!(fam.omega, 40);
        assert_eq!(fam.varpi, 16);
        assert_eq!(
            fam.sigma_b,
            alloc::vec![1, 2, 3, 4, 8, 9, 10, 14, 15, 16, 21, 22, 27, 28, 34, 40]
        );
        assert_eq!(fam.sigma_c, alloc::vec![2, 3, 4, 9, 10, 16]);
        // C_0 as lattice points
        let mut c0 = fam.c0.clone();
        c0.sort_unstable();
        assert_eq!(c0, alloc::vec![(5, 4), (6, 4), (7, 3), (7, 4), (8, 3), (9, 2)]);
        // mu_hat = mu - (k-2)(k-1)/2
        assert_eq!(fam.mu_hat, fam.mu - 10);
    }

    #[test]
    fn family_7_15() {
        let fam = CurveFamily::new(7, 15).unwrap();
        assert_eq!(fam.sigma_c, alloc::vec![2, 3, 4, 5, 10, 11, 12, 18, 19, 26]);
        assert_eq!(fam.mu, 84);
        assert_eq!(fam.mu_hat, 84 - 15);
    }

    #[test]
    fn family_2_5_is_rigid() {
        let fam = CurveFamily::new(2, 5).unwrap();
        assert!(fam.sigma_b.is_empty());
        assert!(fam.sigma_c.is_empty());
        assert_eq!(fam.mu, 4);
        let set = fam.named_set(SetName::C);
        assert_eq!(fam.deformation_poly(&set), fam.f);
    }

    #[test]
    fn deformation_f_c_6_13() {
        let fam = CurveFamily::new(6, 13).unwrap();
        let fc = fam.deformation_poly(&fam.named_set(SetName::C));
        assert_eq!(fc.len(), 8);
        assert_eq!(
            fc.weighted_degree(&fam.grading),
            crate::poly::Degree::Homogeneous(78)
        );
        assert_eq!(
            fc.to_string_with(&fam.grading),
            "y^6 + x^13 + s2*x^9*y^2 + s3*x^7*y^3 + s4*x^5*y^4 + s9*x^8*y^3 + s10*x^6*y^4 + s16*x^7*y^4"
        );
    }

    #[test]
    fn set_inclusions() {
        for (k, n) in [(2u32, 5u32), (3, 7), (4, 9), (5, 11), (6, 13), (7, 15)] {
            let fam = CurveFamily::new(k, n).unwrap();
            // omega - varpi = k(k-2) >= 0, so D <= B
            assert_eq!(fam.omega - fam.varpi, (k as i64) * (k as i64 - 2));
            // C <= D: every sigma in I_C is <= varpi
            for &s in &fam.sigma_c {
                assert!((s as i64) <= fam.varpi);
                assert!(fam.sigma_d.contains(&s));
            }
            for &s in &fam.sigma_d {
                assert!(fam.sigma_b.contains(&s));
            }
        }
    }

    #[test]
    fn restriction_of_f_b_is_f_c() {
        let fam = CurveFamily::new(6, 13).unwrap();
        let fb = fam.deformation_poly(&fam.named_set(SetName::B));
        let fc = fam.deformation_poly(&fam.named_set(SetName::C));
        let kill: Vec<u32> = fam
            .sigma_b
            .iter()
            .copied()
            .filter(|s| !fam.sigma_c.contains(s))
            .collect();
        assert_eq!(fb.restrict_zero(&kill), fc);
    }
}
