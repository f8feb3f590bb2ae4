//! Sparse multivariate polynomials over Q in `x`, `y`, `p` and finitely many
//! deformation parameters `s_sigma`.
//!
//! Invariants:
//! - no stored zero coefficient,
//! - monomial `s`-parts are sorted by ascending `sigma` with positive
//!   exponents,
//! - equality is structural.
//!
//! `s_sigma` is identified by its index `sigma` (a positive integer), never by
//! position, so polynomials over different parameter sets compose safely.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::grading::Grading;
use crate::rat::{self, Rat};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Var {
    X,
    Y,
    P,
    S(u32),
}

/// Exponent tuple over `x`, `y`, `p` and the `s`-variables.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    pub x: u32,
    pub y: u32,
    pub p: u32,
    /// `(sigma, exponent)`, ascending `sigma`, exponents nonzero.
    pub s: Vec<(u32, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn xy(i: u32, j: u32) -> Self {
        Monomial {
            x: i,
            y: j,
            ..Default::default()
        }
    }

    pub fn var(v: Var) -> Self {
        let mut m = Monomial::default();
        match v {
            Var::X => m.x = 1,
            Var::Y => m.y = 1,
            Var::P => m.p = 1,
            Var::S(sig) => m.s.push((sig, 1)),
        }
        m
    }

    pub fn exp(&self, v: Var) -> u32 {
        match v {
            Var::X => self.x,
            Var::Y => self.y,
            Var::P => self.p,
            Var::S(sig) => self
                .s
                .iter()
                .find(|(t, _)| *t == sig)
                .map(|(_, e)| *e)
                .unwrap_or(0),
        }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut s = Vec::with_capacity(self.s.len() + other.s.len());
        let (mut i, mut j) = (0, 0);
        while i < self.s.len() || j < other.s.len() {
            match (self.s.get(i), other.s.get(j)) {
                (Some(&(sa, ea)), Some(&(sb, eb))) => {
                    if sa == sb {
                        s.push((sa, ea + eb));
                        i += 1;
                        j += 1;
                    } else if sa < sb {
                        s.push((sa, ea));
                        i += 1;
                    } else {
                        s.push((sb, eb));
                        j += 1;
                    }
                }
                (Some(&t), None) => {
                    s.push(t);
                    i += 1;
                }
                (None, Some(&t)) => {
                    s.push(t);
                    j += 1;
                }
                (None, None) => break,
            }
        }
        Monomial {
            x: self.x + other.x,
            y: self.y + other.y,
            p: self.p + other.p,
            s,
        }
    }

    /// Sum of `sigma * exponent` over the `s`-part (the negated `s`-degree).
    pub fn s_magnitude(&self) -> i64 {
        self.s
            .iter()
            .map(|&(sig, e)| sig as i64 * e as i64)
            .sum()
    }

    /// Weighted degree of the `x, y, p` part alone.
    pub fn xyp_degree(&self, g: &Grading) -> i64 {
        g.xy(self.x, self.y) + g.p_weight() * self.p as i64
    }

    /// Full weighted degree, `s`-weights included.
    pub fn weighted_degree(&self, g: &Grading) -> i64 {
        self.xyp_degree(g) - self.s_magnitude()
    }

    pub fn is_s_only(&self) -> bool {
        self.x == 0 && self.y == 0 && self.p == 0
    }

    fn with_s_exp(&self, sigma: u32, e: u32) -> Monomial {
        let mut m = self.clone();
        m.s.retain(|&(t, _)| t != sigma);
        if e > 0 {
            m.s.push((sigma, e));
            m.s.sort_unstable_by_key(|&(t, _)| t);
        }
        m
    }

    /// Canonical report order: ascending `s`-magnitude, then ascending
    /// `x,y,p`-weighted degree, then lexicographic on the exponents
    /// `(x, y, p, s_sigma by ascending sigma)`.
    pub fn cmp_display(&self, other: &Monomial, g: &Grading) -> core::cmp::Ordering {
        use core::cmp::Ordering;
        self.s_magnitude()
            .cmp(&other.s_magnitude())
            .then_with(|| self.xyp_degree(g).cmp(&other.xyp_degree(g)))
            .then_with(|| self.x.cmp(&other.x))
            .then_with(|| self.y.cmp(&other.y))
            .then_with(|| self.p.cmp(&other.p))
            .then_with(|| {
                let sigmas: Vec<u32> = {
                    let mut v: Vec<u32> = self
                        .s
                        .iter()
                        .chain(other.s.iter())
                        .map(|&(t, _)| t)
                        .collect();
                    v.sort_unstable();
                    v.dedup();
                    v
                };
                for sig in sigmas {
                    let c = self.exp(Var::S(sig)).cmp(&other.exp(Var::S(sig)));
                    if c != Ordering::Equal {
                        return c;
                    }
                }
                Ordering::Equal
            })
    }
}

/// Result of a weighted-degree query.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Degree {
    Zero,
    Homogeneous(i64),
    Inhomogeneous,
}

/// Sparse polynomial with exact rational coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct MPoly {
    terms: BTreeMap<Monomial, Rat>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly::default()
    }

    pub fn one() -> Self {
        MPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        let mut p = MPoly::zero();
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn var(v: Var) -> Self {
        MPoly::monomial(Monomial::var(v), Rat::one())
    }

    pub fn monomial(m: Monomial, c: Rat) -> Self {
        let mut p = MPoly::zero();
        p.add_term(m, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &MPoly) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn add(&self, other: &MPoly) -> MPoly {
        let mut r = self.clone();
        r.add_assign(other);
        r
    }

    pub fn sub(&self, other: &MPoly) -> MPoly {
        let mut r = self.clone();
        for (m, c) in &other.terms {
            r.add_term(m.clone(), -c.clone());
        }
        r
    }

    pub fn neg(&self) -> MPoly {
        let mut r = self.clone();
        for c in r.terms.values_mut() {
            *c = -c.clone();
        }
        r
    }

    pub fn scalar_mul(&self, c: &Rat) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        let mut r = self.clone();
        for v in r.terms.values_mut() {
            *v *= c;
        }
        r
    }

    /// Multiply by a single term `c * m`.
    pub fn mul_term(&self, m: &Monomial, c: &Rat) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        let mut r = MPoly::zero();
        for (mm, cc) in &self.terms {
            r.terms.insert(mm.mul(m), cc * c);
        }
        r
    }

    pub fn mul(&self, other: &MPoly) -> MPoly {
        let (small, big) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut r = MPoly::zero();
        for (m, c) in &small.terms {
            for (mm, cc) in &big.terms {
                r.add_term(m.mul(mm), c * cc);
            }
        }
        r
    }

    pub fn pow(&self, e: u32) -> MPoly {
        let mut r = MPoly::one();
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    pub fn derivative(&self, v: Var) -> MPoly {
        let mut r = MPoly::zero();
        for (m, c) in &self.terms {
            let e = m.exp(v);
            if e == 0 {
                continue;
            }
            let mut mm = m.clone();
            match v {
                Var::X => mm.x -= 1,
                Var::Y => mm.y -= 1,
                Var::P => mm.p -= 1,
                Var::S(sig) => mm = mm.with_s_exp(sig, e - 1),
            }
            r.add_term(mm, c * rat::rat_i(e as i64));
        }
        r
    }

    /// Substitute a polynomial for one variable.
    pub fn subst(&self, v: Var, repl: &MPoly) -> MPoly {
        let mut r = MPoly::zero();
        let mut pow_cache: BTreeMap<u32, MPoly> = BTreeMap::new();
        pow_cache.insert(0, MPoly::one());
        for (m, c) in &self.terms {
            let e = m.exp(v);
            let mut rest = m.clone();
            match v {
                Var::X => rest.x = 0,
                Var::Y => rest.y = 0,
                Var::P => rest.p = 0,
                Var::S(sig) => rest = rest.with_s_exp(sig, 0),
            }
            if e == 0 {
                r.add_term(rest, c.clone());
                continue;
            }
            if !pow_cache.contains_key(&e) {
                let mut best = *pow_cache.range(..=e).next_back().unwrap().0;
                let mut acc = pow_cache[&best].clone();
                while best < e {
                    acc = acc.mul(repl);
                    best += 1;
                    pow_cache.insert(best, acc.clone());
                }
            }
            r.add_assign(&pow_cache[&e].mul_term(&rest, c));
        }
        r
    }

    /// Set `s_sigma = 0` for every `sigma` in the list.
    pub fn restrict_zero(&self, sigmas: &[u32]) -> MPoly {
        let mut r = MPoly::zero();
        'terms: for (m, c) in &self.terms {
            for &(sig, _) in &m.s {
                if sigmas.contains(&sig) {
                    continue 'terms;
                }
            }
            r.terms.insert(m.clone(), c.clone());
        }
        r
    }

    /// Substitute rational values for the `s`-variables (missing entries are
    /// zero); `x, y, p` survive.
    pub fn eval_s(&self, point: &BTreeMap<u32, Rat>) -> MPoly {
        let mut r = MPoly::zero();
        'terms: for (m, c) in &self.terms {
            let mut v = c.clone();
            for &(sig, e) in &m.s {
                match point.get(&sig) {
                    Some(val) if !val.is_zero() => {
                        for _ in 0..e {
                            v *= val;
                        }
                    }
                    _ => continue 'terms,
                }
            }
            let mut mm = m.clone();
            mm.s.clear();
            r.add_term(mm, v);
        }
        r
    }

    /// Full evaluation when the polynomial has `s`-variables only.
    pub fn eval_rational(&self, point: &BTreeMap<u32, Rat>) -> Option<Rat> {
        let v = self.eval_s(point);
        v.as_constant()
    }

    pub fn as_constant(&self) -> Option<Rat> {
        if self.terms.is_empty() {
            return Some(Rat::zero());
        }
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            if *m == Monomial::one() {
                return Some(c.clone());
            }
        }
        None
    }

    pub fn constant_term(&self) -> Rat {
        self.coeff(&Monomial::one())
    }

    pub fn is_s_only(&self) -> bool {
        self.terms.keys().all(|m| m.is_s_only())
    }

    pub fn weighted_degree(&self, g: &Grading) -> Degree {
        let mut deg: Option<i64> = None;
        for m in self.terms.keys() {
            let d = m.weighted_degree(g);
            match deg {
                None => deg = Some(d),
                Some(prev) if prev != d => return Degree::Inhomogeneous,
                _ => {}
            }
        }
        match deg {
            None => Degree::Zero,
            Some(d) => Degree::Homogeneous(d),
        }
    }

    /// Drop every term whose `s`-magnitude exceeds `cap`. Magnitudes only grow
    /// under multiplication, so results of magnitude `<= cap` stay exact.
    pub fn truncate_s_magnitude(&self, cap: i64) -> MPoly {
        let mut r = MPoly::zero();
        for (m, c) in &self.terms {
            if m.s_magnitude() <= cap {
                r.terms.insert(m.clone(), c.clone());
            }
        }
        r
    }

    /// `self == lambda * other` for some nonzero rational `lambda`.
    pub fn scalar_ratio(&self, other: &MPoly) -> Option<Rat> {
        if self.is_zero() || other.is_zero() {
            return None;
        }
        if self.terms.len() != other.terms.len() {
            return None;
        }
        let (m0, c0) = self.terms.iter().next().unwrap();
        let d0 = other.terms.get(m0)?;
        let lambda = c0 / d0;
        for (m, c) in &self.terms {
            if *c != other.terms.get(m)? * &lambda {
                return None;
            }
        }
        Some(lambda)
    }

    /// Terms in canonical report order.
    pub fn terms_display(&self, g: &Grading) -> Vec<(&Monomial, &Rat)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.cmp_display(b.0, g));
        v
    }

    pub fn to_string_with(&self, g: &Grading) -> String {
        use core::fmt::Write;
        if self.is_zero() {
            return String::from("0");
        }
        let mut out = String::new();
        for (idx, (m, c)) in self.terms_display(g).into_iter().enumerate() {
            let neg = c < &Rat::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = monomial_string(m);
            if mono.is_empty() {
                let _ = write!(out, "{}", rat::to_string(&abs));
            } else if abs.is_one() {
                out.push_str(&mono);
            } else {
                let _ = write!(out, "{}*{}", rat::to_string(&abs), mono);
            }
        }
        out
    }
}

fn monomial_string(m: &Monomial) -> String {
    use core::fmt::Write;
    let mut parts: Vec<String> = Vec::new();
    for &(sig, e) in &m.s {
        let mut t = String::new();
        let _ = write!(t, "s{}", sig);
        if e > 1 {
            let _ = write!(t, "^{}", e);
        }
        parts.push(t);
    }
    for (name, e) in [("x", m.x), ("y", m.y), ("p", m.p)] {
        if e > 0 {
            let mut t = String::from(name);
            if e > 1 {
                let _ = write!(t, "^{}", e);
            }
            parts.push(t);
        }
    }
    parts.join("*")
}
