//! Evaluation codes `C_L(D, G)`, their duals `C_Omega(D, G)`, designed
//! distances and an exhaustive minimum-distance oracle.

use std::collections::HashSet;
use std::fmt;
use std::fmt::Write as _;

use crate::curve::{KummerCurve, RationalPlace};
use crate::error::{Error, Result};
use crate::gf::Matrix;
use crate::rrlattice::Divisor;
use crate::weierstrass::{floor_from_spanning_divisors, GapBox};

/// Default cap on the number of codewords enumerated by [`brute_force_distance`].
pub const DEFAULT_BUDGET: u128 = 1 << 24;

/// Cap on the number of effective `H <= G` tried when looking for floor pairs.
const MAX_FLOOR_CANDIDATES: u128 = 200_000;

/// Ordered evaluation places `Q_1, ..., Q_n`, none in the support of `G`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvaluationSet {
    places: Vec<RationalPlace>,
}

impl EvaluationSet {
    pub fn new(curve: &KummerCurve, g: &Divisor, places: Vec<RationalPlace>) -> Result<Self> {
        let mut seen = HashSet::new();
        for place in &places {
            match *place {
                RationalPlace::Ramified(mu) if mu == 0 || mu > curve.r() => {
                    return Err(Error::IndexOutOfRange {
                        index: mu,
                        max: curve.r(),
                    })
                }
                RationalPlace::Affine { x, y } if !curve.is_affine_point(x, y) => {
                    return Err(Error::InconsistentDivisor(format!(
                        "{place} is not on the curve"
                    )))
                }
                _ => {}
            }
            if g.coefficient(place) != 0 {
                return Err(Error::PlaceInSupport(place.to_string()));
            }
            if !seen.insert(*place) {
                return Err(Error::DuplicatePlace(place.to_string()));
            }
        }
        Ok(EvaluationSet { places })
    }

    /// Every rational place outside `supp(G)`, in enumeration order.
    pub fn complement_of_support(curve: &KummerCurve, g: &Divisor) -> Self {
        let places = curve
            .enumerate_places()
            .into_iter()
            .filter(|p| g.coefficient(p) == 0)
            .collect();
        EvaluationSet { places }
    }

    pub fn places(&self) -> &[RationalPlace] {
        &self.places
    }

    pub fn len(&self) -> usize {
        self.places.len()
    }

    pub fn is_empty(&self) -> bool {
        self.places.is_empty()
    }
}

/// Lower bound on a minimum distance together with how it was obtained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DesignedBound {
    pub method: String,
    pub value: i64,
}

impl fmt::Display for DesignedBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} >= {}", self.method, self.value)
    }
}

/// A linear code given by a generator matrix in reduced row echelon form.
#[derive(Debug, Clone)]
pub struct LinearCode {
    generator: Matrix,
    bounds: Vec<DesignedBound>,
}

impl LinearCode {
    pub fn from_generator(generator: &Matrix) -> Self {
        LinearCode {
            generator: generator.row_reduced(),
            bounds: Vec::new(),
        }
    }

    pub fn generator(&self) -> &Matrix {
        &self.generator
    }

    pub fn n(&self) -> usize {
        self.generator.cols()
    }

    pub fn k(&self) -> usize {
        self.generator.rows()
    }

    pub fn bounds(&self) -> &[DesignedBound] {
        &self.bounds
    }

    pub fn add_bound(&mut self, bound: DesignedBound) {
        self.bounds.push(bound);
    }

    /// Largest attached designed distance, if any.
    pub fn best_bound(&self) -> Option<i64> {
        self.bounds.iter().map(|b| b.value).max()
    }

    /// `n k q` followed by one line of codec integers per generator row.
    pub fn export(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{} {} {}",
            self.n(),
            self.k(),
            self.generator.field().order()
        );
        for r in 0..self.k() {
            let row: Vec<String> = self.generator.row(r).iter().map(u32::to_string).collect();
            let _ = writeln!(out, "{}", row.join(" "));
        }
        out
    }
}

/// Evaluations of the `Omega(G)` basis at the places of `D`, one row per
/// basis monomial (not reduced).
pub fn evaluation_matrix(curve: &KummerCurve, g: &Divisor, d: &EvaluationSet) -> Result<Matrix> {
    let basis = curve.omega_enumerate(g)?;
    let rows = basis
        .iter()
        .map(|p| {
            d.places()
                .iter()
                .map(|place| curve.evaluate_lattice_point(p, place))
                .collect::<Result<Vec<u32>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(curve.field(), d.len(), rows)
}

fn check_support(g: &Divisor, d: &EvaluationSet) -> Result<()> {
    match d.places().iter().find(|p| g.coefficient(p) != 0) {
        Some(p) => Err(Error::PlaceInSupport(p.to_string())),
        None => Ok(()),
    }
}

/// `C_L(D, G) = {(f(Q_1), ..., f(Q_n)) : f in L(G)}`.
pub fn build_cl(curve: &KummerCurve, g: &Divisor, d: &EvaluationSet) -> Result<LinearCode> {
    check_support(g, d)?;
    let eval = evaluation_matrix(curve, g, d)?;
    let mut code = LinearCode::from_generator(&eval);
    let n = d.len() as i64;
    let deg = g.degree();
    if deg < n {
        // L(G - D) = 0 here, so k = l(G).
        let expected = eval.rows() as i64;
        if code.k() as i64 != expected {
            return Err(Error::DimensionMismatch {
                expected,
                got: code.k() as i64,
            });
        }
        if code.k() > 0 {
            code.add_bound(designed_distance(
                curve,
                g,
                &BoundMethod::GoppaL { n: d.len() },
            )?);
        }
    }
    Ok(code)
}

/// `C_Omega(D, G)`, realized as the dual of `C_L(D, G)`.
pub fn build_comega(curve: &KummerCurve, g: &Divisor, d: &EvaluationSet) -> Result<LinearCode> {
    let cl = build_cl(curve, g, d)?;
    let (_, dual) = cl.generator().rank_and_nullspace();
    let mut code = LinearCode {
        generator: dual,
        bounds: Vec::new(),
    };
    let n = d.len() as i64;
    let deg = g.degree();
    let genus = curve.genus();
    if 2 * genus - 2 < deg && deg < n {
        let expected = n + genus - 1 - deg;
        if code.k() as i64 != expected {
            return Err(Error::DimensionMismatch {
                expected,
                got: code.k() as i64,
            });
        }
    }
    if code.k() > 0 {
        for bound in applicable_bounds(curve, g)? {
            code.add_bound(bound);
        }
    }
    Ok(code)
}

/// How a designed distance is derived.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundMethod {
    /// `d(C_L) >= n - deg G`.
    GoppaL { n: usize },
    /// `d(C_Omega) >= deg G - (2g - 2)`.
    GoppaOmega,
    /// `d(C_Omega) >= deg G - (2g - 2) + sum t_k + l` for `G` induced by a box of pure gaps.
    PureGapBox(GapBox),
    /// `d(C_Omega) >= 2 deg H - (2g - 2)` for `G = H + floor(H)`, `H` effective.
    FloorPair(Divisor),
}

pub fn designed_distance(
    curve: &KummerCurve,
    g: &Divisor,
    method: &BoundMethod,
) -> Result<DesignedBound> {
    let genus = curve.genus();
    let deg = g.degree();
    let (name, value) = match method {
        BoundMethod::GoppaL { n } => ("goppa_L".to_string(), *n as i64 - deg),
        BoundMethod::GoppaOmega => ("goppa_omega".to_string(), deg - (2 * genus - 2)),
        BoundMethod::PureGapBox(b) => {
            let induced = b.induced_divisor(curve.r());
            if &induced != g {
                return Err(Error::InconsistentDivisor(format!(
                    "box induces {induced}, not {g}"
                )));
            }
            (
                format!("pure_gap_box base={:?} widths={:?}", b.base(), b.widths()),
                deg - (2 * genus - 2) + b.gain(),
            )
        }
        BoundMethod::FloorPair(h) => {
            if !h.is_effective() {
                return Err(Error::InconsistentDivisor(format!(
                    "H = {h} is not effective"
                )));
            }
            let floor = curve.shape().floor_divisor(h)?;
            if &(h + &floor) != g {
                return Err(Error::InconsistentDivisor(format!(
                    "H + floor(H) = {}, not {g}",
                    h + &floor
                )));
            }
            (
                format!("floor_pair H=[{h}]"),
                2 * h.degree() - (2 * genus - 2),
            )
        }
    };
    Ok(DesignedBound {
        method: name,
        value,
    })
}

/// Every designed bound for `C_Omega(D, G)` that applies to `G`: the Goppa
/// bound, the best pure-gap box inducing `G`, and the best floor pair.
pub fn applicable_bounds(curve: &KummerCurve, g: &Divisor) -> Result<Vec<DesignedBound>> {
    let mut out = Vec::new();
    if g.degree() > 2 * curve.genus() - 2 {
        out.push(designed_distance(curve, g, &BoundMethod::GoppaOmega)?);
    }
    let best_box = curve
        .shape()
        .boxes_for_divisor(g)?
        .into_iter()
        .max_by_key(|b| (b.gain(), std::cmp::Reverse(b.base().to_vec())));
    if let Some(b) = best_box {
        out.push(designed_distance(curve, g, &BoundMethod::PureGapBox(b))?);
    }
    if let Some(h) = best_floor_pair(curve, g)? {
        out.push(designed_distance(curve, g, &BoundMethod::FloorPair(h))?);
    }
    Ok(out)
}

/// The effective `H` of largest degree with `H + floor(H) = G`, if any.
pub fn best_floor_pair(curve: &KummerCurve, g: &Divisor) -> Result<Option<Divisor>> {
    if !g.is_effective() {
        return Ok(None);
    }
    let mut coords: Vec<i64> = g.s().to_vec();
    coords.push(g.t());
    let candidates: u128 = coords.iter().map(|&c| c as u128 + 1).product();
    if candidates > MAX_FLOOR_CANDIDATES {
        return Ok(None);
    }
    let shape = curve.shape();
    let r = curve.r();
    let mut best: Option<Divisor> = None;
    let mut cur = vec![0i64; coords.len()];
    loop {
        let h = Divisor::new(cur[..r].to_vec(), cur[r]);
        if best.as_ref().is_none_or(|b| h.degree() > b.degree()) {
            let floor = shape.floor_divisor(&h)?;
            if &(&h + &floor) == g {
                best = Some(h);
            }
        }
        let mut advanced = false;
        for k in 0..cur.len() {
            if cur[k] < coords[k] {
                cur[k] += 1;
                advanced = true;
                break;
            }
            cur[k] = 0;
        }
        if !advanced {
            break;
        }
    }
    Ok(best)
}

/// Generic floor via the spanning set of `L(H)` given by the `Lambda` basis.
pub fn floor_via_theta_basis(curve: &KummerCurve, h: &Divisor) -> Result<Divisor> {
    let shape = curve.shape();
    let divisors: Vec<Divisor> = shape
        .theta_enumerate(h)?
        .iter()
        .map(|p| shape.theta_divisor(p))
        .collect();
    floor_from_spanning_divisors(&divisors)
}

/// Exact minimum distance by enumerating codewords up to scalar multiples.
/// Returns `None` for the zero code.
pub fn brute_force_distance(code: &LinearCode, budget: u128) -> Result<Option<usize>> {
    let k = code.k();
    if k == 0 {
        return Ok(None);
    }
    let field = code.generator().field().clone();
    let q = field.order();
    let needed = (q as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let n = code.n();
    let rows: Vec<&[u32]> = (0..k).map(|r| code.generator().row(r)).collect();
    // multiples[d][c] = c * row_d
    let multiples: Vec<Vec<Vec<u32>>> = rows
        .iter()
        .map(|row| {
            field
                .elements()
                .map(|c| row.iter().map(|&v| field.mul(c, v)).collect())
                .collect()
        })
        .collect();

    let mut best = n;
    let mut bufs = vec![vec![0u32; n]; k + 1];
    for lead in 0..k {
        // Codewords whose last nonzero message coordinate is `lead`, scaled to 1.
        bufs[lead].copy_from_slice(rows[lead]);
        best = best.min(min_weight_below(&field, &multiples, &mut bufs, lead));
    }
    Ok(Some(best))
}

fn min_weight_below(
    field: &crate::gf::FiniteField,
    multiples: &[Vec<Vec<u32>>],
    bufs: &mut [Vec<u32>],
    level: usize,
) -> usize {
    if level == 0 {
        return bufs[0].iter().filter(|&&v| v != 0).count();
    }
    let d = level - 1;
    let mut best = usize::MAX;
    for mult in &multiples[d] {
        let (lower, upper) = bufs.split_at_mut(level);
        for ((dst, &src), &m) in lower[d].iter_mut().zip(upper[0].iter()).zip(mult) {
            *dst = field.add(src, m);
        }
        best = best.min(min_weight_below(field, multiples, bufs, d));
    }
    best
}
