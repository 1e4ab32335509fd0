//! Riemann-Roch spaces of divisors supported on `P_1, ..., P_r, P_inf`.
//!
//! With `z = y^A f(x)^B` (so `(z) = P_1 + ... + P_r - r P_inf`), the monomials
//!
//! ```text
//! E_{i,j_2..j_r} = z^i (x - alpha_2)^{j_2} ... (x - alpha_r)^{j_r}
//! ```
//!
//! indexed by the lattice set `Omega(G)` form a basis of `L(G)`. For each `i`
//! the exponents `j_mu = ceil((-i - s_mu) / m)` are forced, so `Omega(G)` is
//! walked along `i` alone. The alternative basis `Lambda_{u,v}` indexed by
//! `Theta(G)` is enumerated from its own inequalities and is in bijection
//! with `Omega(G)`.

use std::fmt;
use std::ops::{Add, Sub};

use crate::curve::{CurveShape, KummerCurve, RationalPlace};
use crate::error::{Error, Result};

pub(crate) fn ceil_div(a: i64, b: i64) -> i64 {
    debug_assert!(b > 0);
    -((-a).div_euclid(b))
}

/// Divisor `sum s_mu P_mu + t P_inf`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Divisor {
    s: Vec<i64>,
    t: i64,
}

impl Divisor {
    pub fn new(s: Vec<i64>, t: i64) -> Self {
        Divisor { s, t }
    }

    pub fn zero(r: usize) -> Self {
        Divisor {
            s: vec![0; r],
            t: 0,
        }
    }

    /// Coefficient vector `s_1..s_r`.
    pub fn s(&self) -> &[i64] {
        &self.s
    }

    pub fn t(&self) -> i64 {
        self.t
    }

    pub fn r(&self) -> usize {
        self.s.len()
    }

    pub fn degree(&self) -> i64 {
        self.s.iter().sum::<i64>() + self.t
    }

    pub fn is_effective(&self) -> bool {
        self.t >= 0 && self.s.iter().all(|&c| c >= 0)
    }

    /// Componentwise `self <= other`.
    pub fn le(&self, other: &Divisor) -> bool {
        self.s.len() == other.s.len()
            && self.t <= other.t
            && self.s.iter().zip(&other.s).all(|(a, b)| a <= b)
    }

    pub fn scaled(&self, k: i64) -> Divisor {
        Divisor {
            s: self.s.iter().map(|c| c * k).collect(),
            t: self.t * k,
        }
    }

    /// Coefficient at a distinguished place; affine places carry zero.
    pub fn coefficient(&self, place: &RationalPlace) -> i64 {
        match *place {
            RationalPlace::Infinity => self.t,
            RationalPlace::Ramified(mu) => self.s.get(mu - 1).copied().unwrap_or(0),
            RationalPlace::Affine { .. } => 0,
        }
    }

    /// Adds `delta` to the coefficient at a distinguished place.
    pub fn shifted(&self, place: &RationalPlace, delta: i64) -> Result<Divisor> {
        let mut out = self.clone();
        match *place {
            RationalPlace::Infinity => out.t += delta,
            RationalPlace::Ramified(mu) => {
                if mu == 0 || mu > self.s.len() {
                    return Err(Error::IndexOutOfRange {
                        index: mu,
                        max: self.s.len(),
                    });
                }
                out.s[mu - 1] += delta;
            }
            RationalPlace::Affine { .. } => {
                return Err(Error::PlaceInSupport(place.to_string()));
            }
        }
        Ok(out)
    }

    /// Places with a nonzero coefficient.
    pub fn support(&self) -> Vec<RationalPlace> {
        let mut out: Vec<RationalPlace> = self
            .s
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, _)| RationalPlace::Ramified(k + 1))
            .collect();
        if self.t != 0 {
            out.push(RationalPlace::Infinity);
        }
        out
    }
}

impl Add for &Divisor {
    type Output = Divisor;
    fn add(self, rhs: &Divisor) -> Divisor {
        assert_eq!(self.s.len(), rhs.s.len(), "divisors on different curves");
        Divisor {
            s: self.s.iter().zip(&rhs.s).map(|(a, b)| a + b).collect(),
            t: self.t + rhs.t,
        }
    }
}

impl Sub for &Divisor {
    type Output = Divisor;
    fn sub(self, rhs: &Divisor) -> Divisor {
        self + &rhs.scaled(-1)
    }
}

impl fmt::Display for Divisor {
    /// `s1 ... sr t`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.s {
            write!(f, "{c} ")?;
        }
        write!(f, "{}", self.t)
    }
}

/// Exponent tuple `(i, j_2, ..., j_r)` of an `E` monomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint {
    pub i: i64,
    pub j: Vec<i64>,
}

/// Exponent tuple `(u, v_2, ..., v_r)` of a `Lambda` monomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ThetaPoint {
    pub u: i64,
    pub v: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BasisMonomial {
    E(LatticePoint),
    Lambda(ThetaPoint),
}

impl CurveShape {
    fn check_arity(&self, g: &Divisor) -> Result<()> {
        if g.r() != self.r() {
            return Err(Error::ArityMismatch {
                expected: self.r(),
                got: g.r(),
            });
        }
        Ok(())
    }

    /// Lattice points of `Omega(G)`, sorted by `i`.
    pub fn omega_enumerate(&self, g: &Divisor) -> Result<Vec<LatticePoint>> {
        self.check_arity(g)?;
        let m = self.m();
        let r = self.r() as i64;
        let s = g.s();
        let mut out = Vec::new();
        let mut misses = 0;
        let mut i = -s[0];
        // r*i + m*sum(j) grows by exactly m every m steps of i.
        while misses < m {
            let j: Vec<i64> = s[1..].iter().map(|&sm| ceil_div(-i - sm, m)).collect();
            let pole = r * i + m * j.iter().sum::<i64>();
            if pole <= g.t() {
                out.push(LatticePoint { i, j });
                misses = 0;
            } else {
                misses += 1;
            }
            i += 1;
        }
        Ok(out)
    }

    /// `l(G)`.
    pub fn dimension(&self, g: &Divisor) -> Result<usize> {
        Ok(self.omega_enumerate(g)?.len())
    }

    /// Lattice points of `Theta(G)`, sorted by `u`.
    pub fn theta_enumerate(&self, g: &Divisor) -> Result<Vec<ThetaPoint>> {
        self.check_arity(g)?;
        let (m, a, b) = (self.m(), self.a(), self.b());
        let s = g.s();
        let mut out = Vec::new();
        let mut misses = 0;
        let mut u = -g.t();
        while misses < m {
            let v: Vec<i64> = s[1..].iter().map(|&sm| ceil_div(a * u - sm, m)).collect();
            let lhs = (a + b * m) * u + m * v.iter().sum::<i64>();
            if lhs <= s[0] {
                out.push(ThetaPoint { u, v });
                misses = 0;
            } else {
                misses += 1;
            }
            u += 1;
        }
        Ok(out)
    }

    /// The `Lambda` index of an `E` monomial.
    pub fn omega_to_theta(&self, p: &LatticePoint) -> ThetaPoint {
        let (m, a, b, r) = (self.m(), self.a(), self.b(), self.r() as i64);
        let sum_j: i64 = p.j.iter().sum();
        ThetaPoint {
            u: -r * p.i - m * sum_j,
            v: p.j.iter().map(|&jm| b * p.i - a * sum_j + jm).collect(),
        }
    }

    /// The `E` index of a `Lambda` monomial.
    pub fn theta_to_omega(&self, p: &ThetaPoint) -> LatticePoint {
        let (m, a, b) = (self.m(), self.a(), self.b());
        let sum_v: i64 = p.v.iter().sum();
        LatticePoint {
            i: -(a + b * m) * p.u - m * sum_v,
            j: p.v.iter().map(|&vm| b * p.u + sum_v + vm).collect(),
        }
    }

    /// Whether `l(G) = l(G - P) + 1` for `P = P_mu` or `P = P_inf`, from the
    /// closed-form ceiling inequalities.
    pub fn increment_at(&self, g: &Divisor, place: &RationalPlace) -> Result<bool> {
        self.check_arity(g)?;
        let m = self.m();
        let r = self.r() as i64;
        let s = g.s();
        match *place {
            RationalPlace::Ramified(mu) => {
                if mu == 0 || mu > self.r() {
                    return Err(Error::IndexOutOfRange {
                        index: mu,
                        max: self.r(),
                    });
                }
                let sj = s[mu - 1];
                let lhs: i64 = s
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != mu - 1)
                    .map(|(_, &sk)| ceil_div(sj - sk, m))
                    .sum::<i64>()
                    * m;
                Ok(lhs <= g.t() + r * sj)
            }
            RationalPlace::Infinity => {
                let (a, b, t) = (self.a(), self.b(), g.t());
                let lhs = m * s[1..]
                    .iter()
                    .map(|&sk| ceil_div(-a * t - sk, m))
                    .sum::<i64>();
                Ok(lhs <= s[0] + (a + b * m) * t)
            }
            RationalPlace::Affine { .. } => Err(Error::PlaceInSupport(place.to_string())),
        }
    }

    /// Divisor of an `E` monomial: `i P_1 + sum (i + m j_mu) P_mu - (r i + m sum j) P_inf`.
    pub fn lattice_divisor(&self, p: &LatticePoint) -> Divisor {
        let (m, r) = (self.m(), self.r() as i64);
        let mut s = Vec::with_capacity(self.r());
        s.push(p.i);
        s.extend(p.j.iter().map(|&jm| p.i + m * jm));
        Divisor::new(s, -(r * p.i + m * p.j.iter().sum::<i64>()))
    }

    /// Divisor of a `Lambda` monomial, from its own closed form.
    pub fn theta_divisor(&self, p: &ThetaPoint) -> Divisor {
        let (m, a, b) = (self.m(), self.a(), self.b());
        let mut s = Vec::with_capacity(self.r());
        s.push(-(a + b * m) * p.u - m * p.v.iter().sum::<i64>());
        s.extend(p.v.iter().map(|&vm| -a * p.u + m * vm));
        Divisor::new(s, p.u)
    }

    pub fn monomial_divisor(&self, b: &BasisMonomial) -> Divisor {
        match b {
            BasisMonomial::E(p) => self.lattice_divisor(p),
            BasisMonomial::Lambda(p) => self.theta_divisor(p),
        }
    }

    /// Pole orders bounded by `G`: `(-i, -i - m j_2, ..., r i + m sum j)`.
    pub fn pole_orders(&self, p: &LatticePoint) -> Divisor {
        self.lattice_divisor(p).scaled(-1)
    }
}

impl KummerCurve {
    pub fn omega_enumerate(&self, g: &Divisor) -> Result<Vec<LatticePoint>> {
        self.shape().omega_enumerate(g)
    }

    pub fn dimension(&self, g: &Divisor) -> Result<usize> {
        self.shape().dimension(g)
    }

    /// Value of a basis monomial at a rational place where it has no pole.
    pub fn evaluate_monomial(&self, b: &BasisMonomial, place: &RationalPlace) -> Result<u32> {
        let point = match b {
            BasisMonomial::E(p) => p.clone(),
            BasisMonomial::Lambda(p) => self.shape().theta_to_omega(p),
        };
        if point.j.len() + 1 != self.r() {
            return Err(Error::ArityMismatch {
                expected: self.r(),
                got: point.j.len() + 1,
            });
        }
        self.evaluate_lattice_point(&point, place)
    }

    pub(crate) fn evaluate_lattice_point(
        &self,
        p: &LatticePoint,
        place: &RationalPlace,
    ) -> Result<u32> {
        let f = self.field();
        let roots = self.roots();
        let m = self.m();
        let by_valuation = |v: i64| match v.cmp(&0) {
            std::cmp::Ordering::Greater => Some(Ok(0)),
            std::cmp::Ordering::Less => Some(Err(Error::PoleAtPlace)),
            std::cmp::Ordering::Equal => None,
        };
        match *place {
            RationalPlace::Affine { x, y } => {
                let z = self.z_value(x, y)?;
                let mut acc = f.pow(z, p.i)?;
                for (k, &jm) in p.j.iter().enumerate() {
                    acc = f.mul(acc, f.pow(f.sub(x, roots[k + 1]), jm)?);
                }
                Ok(acc)
            }
            RationalPlace::Ramified(1) => {
                if let Some(v) = by_valuation(p.i) {
                    return v;
                }
                let a1 = roots[0];
                p.j.iter().enumerate().try_fold(1, |acc, (k, &jn)| {
                    Ok(f.mul(acc, f.pow(f.sub(a1, roots[k + 1]), jn)?))
                })
            }
            RationalPlace::Ramified(mu) => {
                if mu == 0 || mu > self.r() {
                    return Err(Error::IndexOutOfRange {
                        index: mu,
                        max: self.r(),
                    });
                }
                let jm = p.j[mu - 2];
                if let Some(v) = by_valuation(p.i + m * jm) {
                    return v;
                }
                // z^i = f^{-j_mu} here, which cancels the factor x - alpha_mu.
                let am = roots[mu - 1];
                let mut acc = f.pow(f.sub(am, roots[0]), -jm)?;
                for (k, &jn) in p.j.iter().enumerate() {
                    if k + 2 == mu {
                        continue;
                    }
                    acc = f.mul(acc, f.pow(f.sub(am, roots[k + 1]), jn - jm)?);
                }
                Ok(acc)
            }
            RationalPlace::Infinity => {
                let r = self.r() as i64;
                let v = -(r * p.i + m * p.j.iter().sum::<i64>());
                if let Some(v) = by_valuation(v) {
                    return v;
                }
                // Valuation zero forces i = m k, so the monomial is a
                // degree-zero quotient of monic polynomials in x.
                Ok(1)
            }
        }
    }
}
