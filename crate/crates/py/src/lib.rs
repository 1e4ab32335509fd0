//! Python bindings: `import kummer_ag`.
//!
//! ```python
//! import kummer_ag as ka
//! gf = ka.GaloisField(3, 4, [2, 0, 0, 2, 1])
//! curve = ka.Curve(gf, 5, f=[0, 1, 0, 0, 0, 0, 0, 0, 0, 1])
//! code = curve.build_code([51, 0, 0, 0, 0, 0, 0, 0, 0], 1)
//! print(code.n, code.k, code.bounds())
//! ```

use std::sync::Arc;

use kummer_core::agcode::DEFAULT_BUDGET;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn err(e: kummer_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// GF(p^e) with elements encoded as integers `sum c_i p^i`.
#[pyclass(frozen, module = "kummer_ag")]
struct GaloisField {
    inner: Arc<kummer_core::FiniteField>,
}

#[pymethods]
impl GaloisField {
    #[new]
    #[pyo3(signature = (p, e=1, modulus=None))]
    fn new(p: u32, e: u32, modulus: Option<Vec<u32>>) -> PyResult<Self> {
        let modulus = match modulus {
            Some(m) => m,
            None if e == 1 => vec![0, 1],
            None => return Err(PyValueError::new_err("modulus is required when e > 1")),
        };
        let inner = kummer_core::FiniteField::new(p, e, &modulus).map_err(err)?;
        Ok(GaloisField {
            inner: Arc::new(inner),
        })
    }

    #[getter]
    fn p(&self) -> u32 {
        self.inner.p()
    }

    #[getter]
    fn e(&self) -> u32 {
        self.inner.e()
    }

    #[getter]
    fn order(&self) -> u32 {
        self.inner.order()
    }

    #[getter]
    fn modulus(&self) -> Vec<u32> {
        self.inner.modulus().to_vec()
    }

    fn add(&self, a: u64, b: u64) -> PyResult<u32> {
        Ok(self.inner.add(
            self.inner.check(a).map_err(err)?,
            self.inner.check(b).map_err(err)?,
        ))
    }

    fn sub(&self, a: u64, b: u64) -> PyResult<u32> {
        Ok(self.inner.sub(
            self.inner.check(a).map_err(err)?,
            self.inner.check(b).map_err(err)?,
        ))
    }

    fn mul(&self, a: u64, b: u64) -> PyResult<u32> {
        Ok(self.inner.mul(
            self.inner.check(a).map_err(err)?,
            self.inner.check(b).map_err(err)?,
        ))
    }

    fn inv(&self, a: u64) -> PyResult<u32> {
        self.inner
            .inv(self.inner.check(a).map_err(err)?)
            .map_err(err)
    }

    fn pow(&self, a: u64, n: i64) -> PyResult<u32> {
        self.inner
            .pow(self.inner.check(a).map_err(err)?, n)
            .map_err(err)
    }

    /// Coefficients of the polynomial-basis representation, low degree first.
    fn coeffs(&self, a: u64) -> PyResult<Vec<u32>> {
        Ok(self.inner.coeffs(self.inner.check(a).map_err(err)?))
    }

    fn __repr__(&self) -> String {
        format!("GaloisField({})", self.inner)
    }
}

/// Genus, Bezout data and closed-form semigroup/pure-gap tests for a pair `(m, r)`.
#[pyclass(frozen, module = "kummer_ag")]
struct CurveShape {
    inner: kummer_core::CurveShape,
}

fn tuple(
    shape: &kummer_core::CurveShape,
    ramified: Vec<usize>,
    infinity: bool,
) -> PyResult<kummer_core::PlaceTuple> {
    kummer_core::PlaceTuple::new(shape, ramified, infinity).map_err(err)
}

fn divisor(shape: &kummer_core::CurveShape, s: Vec<i64>, t: i64) -> PyResult<kummer_core::Divisor> {
    if s.len() != shape.r() {
        return Err(err(kummer_core::Error::ArityMismatch {
            expected: shape.r(),
            got: s.len(),
        }));
    }
    Ok(kummer_core::Divisor::new(s, t))
}

fn split(d: &kummer_core::Divisor) -> (Vec<i64>, i64) {
    (d.s().to_vec(), d.t())
}

#[pymethods]
impl CurveShape {
    #[new]
    fn new(m: i64, r: usize) -> PyResult<Self> {
        Ok(CurveShape {
            inner: kummer_core::CurveShape::new(m, r).map_err(err)?,
        })
    }

    #[getter]
    fn m(&self) -> i64 {
        self.inner.m()
    }

    #[getter]
    fn r(&self) -> usize {
        self.inner.r()
    }

    #[getter]
    fn genus(&self) -> i64 {
        self.inner.genus()
    }

    /// `(a, b)` with `a r + b m = 1` and `0 <= a < m`.
    fn bezout(&self) -> (i64, i64) {
        (self.inner.a(), self.inner.b())
    }

    /// `l(sum s_mu P_mu + t Pinf)`.
    fn dimension(&self, s: Vec<i64>, t: i64) -> PyResult<usize> {
        self.inner
            .dimension(&divisor(&self.inner, s, t)?)
            .map_err(err)
    }

    /// Lattice points `(i, [j_2, ..., j_r])` indexing a basis of `L(G)`.
    fn basis(&self, s: Vec<i64>, t: i64) -> PyResult<Vec<(i64, Vec<i64>)>> {
        let pts = self
            .inner
            .omega_enumerate(&divisor(&self.inner, s, t)?)
            .map_err(err)?;
        Ok(pts.into_iter().map(|p| (p.i, p.j)).collect())
    }

    /// Floor of `G`, returned as `(s, t)`.
    fn floor(&self, s: Vec<i64>, t: i64) -> PyResult<(Vec<i64>, i64)> {
        let f = self
            .inner
            .floor_divisor(&divisor(&self.inner, s, t)?)
            .map_err(err)?;
        Ok(split(&f))
    }

    /// Whether `coords` lies in the Weierstrass semigroup of the selected places.
    #[pyo3(signature = (ramified, coords, infinity=false))]
    fn semigroup_member(
        &self,
        ramified: Vec<usize>,
        coords: Vec<i64>,
        infinity: bool,
    ) -> PyResult<bool> {
        let places = tuple(&self.inner, ramified, infinity)?;
        self.inner.semigroup_member(&places, &coords).map_err(err)
    }

    #[pyo3(signature = (ramified, coords, infinity=false))]
    fn pure_gap(&self, ramified: Vec<usize>, coords: Vec<i64>, infinity: bool) -> PyResult<bool> {
        let places = tuple(&self.inner, ramified, infinity)?;
        self.inner.pure_gap(&places, &coords).map_err(err)
    }

    /// Maximal boxes of pure gaps in `[1, bound]^l`, best first, as
    /// `(base, widths, (s, t), designed_distance)`.
    #[pyo3(signature = (ramified, bound, infinity=false))]
    #[allow(clippy::type_complexity)]
    fn box_search(
        &self,
        ramified: Vec<usize>,
        bound: i64,
        infinity: bool,
    ) -> PyResult<Vec<(Vec<i64>, Vec<i64>, (Vec<i64>, i64), i64)>> {
        let places = tuple(&self.inner, ramified, infinity)?;
        let found = self.inner.box_search(&places, bound).map_err(err)?;
        Ok(found
            .into_iter()
            .map(|c| {
                (
                    c.gap_box.base().to_vec(),
                    c.gap_box.widths().to_vec(),
                    split(&c.divisor),
                    c.designed_distance,
                )
            })
            .collect())
    }

    fn __repr__(&self) -> String {
        format!("CurveShape(m={}, r={})", self.inner.m(), self.inner.r())
    }
}

/// The curve `y^m = f(x)^lambda`, given by the roots of `f` or by `f` itself.
#[pyclass(frozen, module = "kummer_ag")]
struct Curve {
    inner: kummer_core::KummerCurve,
}

#[pymethods]
impl Curve {
    #[new]
    #[pyo3(signature = (field, m, lam=1, roots=None, f=None))]
    fn new(
        field: &GaloisField,
        m: i64,
        lam: i64,
        roots: Option<Vec<u32>>,
        f: Option<Vec<u32>>,
    ) -> PyResult<Self> {
        let field = field.inner.clone();
        let inner = match (roots, f) {
            (Some(roots), None) => kummer_core::KummerCurve::new(field, m, lam, roots),
            (None, Some(f)) => kummer_core::KummerCurve::from_polynomial(field, m, lam, &f),
            _ => return Err(PyValueError::new_err("give exactly one of roots or f")),
        }
        .map_err(err)?;
        Ok(Curve { inner })
    }

    #[getter]
    fn genus(&self) -> i64 {
        self.inner.genus()
    }

    #[getter]
    fn m(&self) -> i64 {
        self.inner.m()
    }

    #[getter]
    fn r(&self) -> usize {
        self.inner.r()
    }

    #[getter]
    fn roots(&self) -> Vec<u32> {
        self.inner.roots().to_vec()
    }

    fn shape(&self) -> CurveShape {
        CurveShape {
            inner: *self.inner.shape(),
        }
    }

    /// Rational places as strings: `Pinf`, `P1`..`Pr`, then `(x,y)`.
    fn places(&self) -> Vec<String> {
        self.inner
            .enumerate_places()
            .iter()
            .map(ToString::to_string)
            .collect()
    }

    fn dimension(&self, s: Vec<i64>, t: i64) -> PyResult<usize> {
        self.inner
            .dimension(&divisor(self.inner.shape(), s, t)?)
            .map_err(err)
    }

    /// Generator matrix of `C_Omega(D, G)` (or `C_L` with `kind="l"`), where
    /// `D` is every place outside `supp(G)`, truncated to the first `n`.
    #[pyo3(signature = (s, t, kind="omega", n=None))]
    fn build_code(&self, s: Vec<i64>, t: i64, kind: &str, n: Option<usize>) -> PyResult<Code> {
        let g = divisor(self.inner.shape(), s, t)?;
        let mut places = kummer_core::EvaluationSet::complement_of_support(&self.inner, &g)
            .places()
            .to_vec();
        if let Some(n) = n {
            if n > places.len() {
                return Err(PyValueError::new_err(format!(
                    "only {} places are available",
                    places.len()
                )));
            }
            places.truncate(n);
        }
        let d = kummer_core::EvaluationSet::new(&self.inner, &g, places).map_err(err)?;
        let inner = match kind {
            "omega" => kummer_core::build_comega(&self.inner, &g, &d),
            "l" => kummer_core::build_cl(&self.inner, &g, &d),
            other => {
                return Err(PyValueError::new_err(format!(
                    "kind must be 'omega' or 'l', got {other:?}"
                )))
            }
        }
        .map_err(err)?;
        Ok(Code { inner })
    }

    fn __repr__(&self) -> String {
        format!(
            "Curve(m={}, lambda={}, roots={:?}, over {})",
            self.inner.m(),
            self.inner.lambda(),
            self.inner.roots(),
            self.inner.field()
        )
    }
}

/// A linear code with a reduced generator matrix and its designed distances.
#[pyclass(frozen, module = "kummer_ag")]
struct Code {
    inner: kummer_core::LinearCode,
}

#[pymethods]
impl Code {
    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn k(&self) -> usize {
        self.inner.k()
    }

    fn generator(&self) -> Vec<Vec<u32>> {
        self.inner.generator().row_vecs()
    }

    /// `(method, value)` pairs.
    fn bounds(&self) -> Vec<(String, i64)> {
        self.inner
            .bounds()
            .iter()
            .map(|b| (b.method.clone(), b.value))
            .collect()
    }

    /// `n k q` followed by one row of codec integers per line.
    fn export(&self) -> String {
        self.inner.export()
    }

    /// Exact minimum distance by enumeration; `None` for the zero code.
    #[pyo3(signature = (budget=None))]
    fn min_distance(&self, py: Python<'_>, budget: Option<u128>) -> PyResult<Option<usize>> {
        let budget = budget.unwrap_or(DEFAULT_BUDGET);
        py.detach(|| kummer_core::brute_force_distance(&self.inner, budget))
            .map_err(err)
    }
}

#[pymodule]
fn kummer_ag(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<GaloisField>()?;
    m.add_class::<CurveShape>()?;
    m.add_class::<Curve>()?;
    m.add_class::<Code>()?;
    Ok(())
}
