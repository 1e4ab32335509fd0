//! The Kummer extension `y^m = f(x)^lambda`, `f(x) = prod (x - alpha_i)`,
//! its genus, Bézout data and rational places.
//!
//! Everything about lattice counting, semigroups and floors depends only on
//! `(m, r)` and the Bézout pair `a*r + b*m = 1`; that part lives in
//! [`CurveShape`] so it can be used without a concrete field.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf::FiniteField;
use crate::rrlattice::Divisor;

pub(crate) fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Least nonnegative `x` with `x * value ≡ 1 (mod modulus)` and the matching
/// `y = (1 - x*value) / modulus`, so that `x*value + y*modulus = 1`.
pub(crate) fn bezout_normalized(value: i64, modulus: i64) -> Option<(i64, i64)> {
    let (mut old_r, mut r) = (value.rem_euclid(modulus), modulus);
    let (mut old_s, mut s) = (1i64, 0i64);
    while r != 0 {
        let qt = old_r / r;
        (old_r, r) = (r, old_r - qt * r);
        (old_s, s) = (s, old_s - qt * s);
    }
    if old_r != 1 {
        return None;
    }
    let x = old_s.rem_euclid(modulus);
    let rest = 1 - x * value;
    debug_assert_eq!(rest % modulus, 0);
    Some((x, rest / modulus))
}

/// Integer data of the curve family: `m`, the number `r` of finite
/// ramified places, the genus and the Bézout pair `a*r + b*m = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CurveShape {
    m: i64,
    r: usize,
    genus: i64,
    a: i64,
    b: i64,
}

impl CurveShape {
    pub fn new(m: i64, r: usize) -> Result<Self> {
        if m < 2 {
            return Err(Error::DegreeTooSmall(m));
        }
        if r == 0 {
            return Err(Error::NoRoots);
        }
        let ri = r as i64;
        let (a, b) = bezout_normalized(ri, m).ok_or(Error::GcdViolation {
            m,
            r_lambda: ri,
            gcd: gcd(m, ri),
        })?;
        let twice = (ri - 1) * (m - 1);
        debug_assert_eq!(twice % 2, 0);
        Ok(CurveShape {
            m,
            r,
            genus: twice / 2,
            a,
            b,
        })
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn genus(&self) -> i64 {
        self.genus
    }

    /// Bézout coefficient `a` of `a*r + b*m = 1`, least nonnegative.
    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }
}

/// A degree-one place of the function field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RationalPlace {
    /// The unique place over `x = infinity`.
    Infinity,
    /// `P_mu` over `x = alpha_mu`, 1-based.
    Ramified(usize),
    /// A place `(x0, y0)` with `f(x0) != 0`, coordinates as codec integers.
    Affine { x: u32, y: u32 },
}

impl fmt::Display for RationalPlace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RationalPlace::Infinity => write!(f, "Pinf"),
            RationalPlace::Ramified(mu) => write!(f, "P{mu}"),
            RationalPlace::Affine { x, y } => write!(f, "({x},{y})"),
        }
    }
}

/// Functions whose divisors are known in closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrincipalItem {
    /// `x - alpha_i`, 1-based.
    XMinusRoot(usize),
    Y,
    F,
    Z,
}

/// Validated model of `y^m = f(x)^lambda` over a finite field.
#[derive(Debug, Clone)]
pub struct KummerCurve {
    field: Arc<FiniteField>,
    shape: CurveShape,
    lambda: i64,
    roots: Vec<u32>,
    big_a: i64,
    big_b: i64,
}

impl KummerCurve {
    pub fn new(field: Arc<FiniteField>, m: i64, lambda: i64, roots: Vec<u32>) -> Result<Self> {
        if roots.is_empty() {
            return Err(Error::NoRoots);
        }
        if m < 2 {
            return Err(Error::DegreeTooSmall(m));
        }
        if lambda < 1 {
            return Err(Error::BadLambda(lambda));
        }
        for &root in &roots {
            field.check(root as u64)?;
        }
        let mut seen = roots.clone();
        seen.sort_unstable();
        if let Some(w) = seen.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateRoots(w[0]));
        }
        let p = field.p();
        if m % p as i64 == 0 {
            return Err(Error::CharacteristicDividesM { p, m });
        }
        let r_lambda = roots.len() as i64 * lambda;
        let g = gcd(m, r_lambda);
        if g != 1 {
            return Err(Error::GcdViolation {
                m,
                r_lambda,
                gcd: g,
            });
        }
        let shape = CurveShape::new(m, roots.len())?;
        let (big_a, big_b) = bezout_normalized(lambda, m)
            .expect("gcd(m, lambda) = 1 follows from gcd(m, r lambda) = 1");
        Ok(KummerCurve {
            field,
            shape,
            lambda,
            roots,
            big_a,
            big_b,
        })
    }

    /// Builds the curve from the coefficients of `f` (codec integers, low
    /// degree first) by finding its roots exhaustively. `f` must be monic
    /// and split into distinct linear factors; roots come out in codec order.
    pub fn from_polynomial(
        field: Arc<FiniteField>,
        m: i64,
        lambda: i64,
        f: &[u32],
    ) -> Result<Self> {
        let roots = find_roots(&field, f)?;
        Self::new(field, m, lambda, roots)
    }

    pub fn field(&self) -> &Arc<FiniteField> {
        &self.field
    }

    pub fn shape(&self) -> &CurveShape {
        &self.shape
    }

    pub fn m(&self) -> i64 {
        self.shape.m
    }

    pub fn r(&self) -> usize {
        self.shape.r
    }

    pub fn lambda(&self) -> i64 {
        self.lambda
    }

    pub fn roots(&self) -> &[u32] {
        &self.roots
    }

    pub fn genus(&self) -> i64 {
        self.shape.genus
    }

    /// `(A, B)` with `A*lambda + B*m = 1`, `A` least nonnegative.
    pub fn lambda_bezout(&self) -> (i64, i64) {
        (self.big_a, self.big_b)
    }

    /// `(a, b)` with `a*r + b*m = 1`, `a` least nonnegative.
    pub fn r_bezout(&self) -> (i64, i64) {
        (self.shape.a, self.shape.b)
    }

    /// `f(x0)` for a codec integer `x0`.
    pub fn eval_f(&self, x0: u32) -> u32 {
        let f = &self.field;
        self.roots
            .iter()
            .fold(1, |acc, &alpha| f.mul(acc, f.sub(x0, alpha)))
    }

    /// `z0 = y0^A f(x0)^B` at an affine place; `z0^m = f(x0)`.
    pub fn z_value(&self, x0: u32, y0: u32) -> Result<u32> {
        let f = &self.field;
        let fx = self.eval_f(x0);
        Ok(f.mul(f.pow(y0, self.big_a)?, f.pow(fx, self.big_b)?))
    }

    pub fn principal_divisor(&self, item: PrincipalItem) -> Result<Divisor> {
        let r = self.r();
        let r_i = r as i64;
        let m = self.m();
        let d = match item {
            PrincipalItem::XMinusRoot(i) => {
                if i == 0 || i > r {
                    return Err(Error::IndexOutOfRange { index: i, max: r });
                }
                let mut s = vec![0; r];
                s[i - 1] = m;
                Divisor::new(s, -m)
            }
            PrincipalItem::Y => Divisor::new(vec![self.lambda; r], -r_i * self.lambda),
            PrincipalItem::F => Divisor::new(vec![m; r], -r_i * m),
            PrincipalItem::Z => Divisor::new(vec![1; r], -r_i),
        };
        Ok(d)
    }

    /// Does `(x0, y0)` satisfy the curve equation away from the ramified fibres?
    pub fn is_affine_point(&self, x0: u32, y0: u32) -> bool {
        let f = &self.field;
        let fx = self.eval_f(x0);
        fx != 0
            && f.pow(y0, self.m()).expect("exponent is positive")
                == f.pow(fx, self.lambda).expect("exponent is positive")
    }

    /// All rational places: `Infinity`, then `Ramified(1..=r)`, then affine
    /// places ordered by the codec integers of `x0` and `y0`.
    pub fn enumerate_places(&self) -> Vec<RationalPlace> {
        let f = &self.field;
        let mut roots_of: HashMap<u32, Vec<u32>> = HashMap::new();
        for y in f.elements().filter(|&y| y != 0) {
            roots_of
                .entry(f.pow(y, self.m()).expect("exponent is positive"))
                .or_default()
                .push(y);
        }
        let mut places = vec![RationalPlace::Infinity];
        places.extend((1..=self.r()).map(RationalPlace::Ramified));
        for x in f.elements() {
            let fx = self.eval_f(x);
            if fx == 0 {
                continue;
            }
            let target = f.pow(fx, self.lambda).expect("exponent is positive");
            if let Some(ys) = roots_of.get(&target) {
                places.extend(ys.iter().map(|&y| RationalPlace::Affine { x, y }));
            }
        }
        places
    }
}

/// Roots of a monic polynomial that splits into distinct linear factors.
pub fn find_roots(field: &FiniteField, coeffs: &[u32]) -> Result<Vec<u32>> {
    for &c in coeffs {
        field.check(c as u64)?;
    }
    let mut coeffs = coeffs.to_vec();
    while coeffs.len() > 1 && coeffs.last() == Some(&0) {
        coeffs.pop();
    }
    if coeffs.last() != Some(&1) {
        return Err(Error::NotMonic);
    }
    let degree = coeffs.len() - 1;
    if degree == 0 {
        return Err(Error::NoRoots);
    }
    let roots: Vec<u32> = field
        .elements()
        .filter(|&x| {
            coeffs
                .iter()
                .rev()
                .fold(0, |acc, &c| field.add(field.mul(acc, x), c))
                == 0
        })
        .collect();
    if roots.len() != degree {
        return Err(Error::DoesNotSplit);
    }
    Ok(roots)
}
