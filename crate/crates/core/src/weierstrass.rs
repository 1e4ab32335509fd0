//! Weierstrass semigroups, pure gaps and floors at the totally ramified
//! places, all from closed-form ceiling inequalities in `(m, r, a, b)`.

use std::collections::HashSet;

use crate::curve::{CurveShape, RationalPlace};
use crate::error::{Error, Result};
use crate::rrlattice::{ceil_div, Divisor};

const MAX_GRID_CELLS: u128 = 1 << 24;

/// An ordered selection of distinguished places: some of `P_1..P_r`
/// (1-based indices) optionally followed by `P_inf`. Coordinates passed with
/// a tuple follow the same order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PlaceTuple {
    ramified: Vec<usize>,
    infinity: bool,
}

impl PlaceTuple {
    pub fn new(shape: &CurveShape, ramified: Vec<usize>, infinity: bool) -> Result<Self> {
        if ramified.is_empty() && !infinity {
            return Err(Error::EmptyPlaceTuple);
        }
        let mut seen = HashSet::new();
        for &mu in &ramified {
            if mu == 0 || mu > shape.r() {
                return Err(Error::IndexOutOfRange {
                    index: mu,
                    max: shape.r(),
                });
            }
            if !seen.insert(mu) {
                return Err(Error::DuplicatePlace(format!("P{mu}")));
            }
        }
        Ok(PlaceTuple { ramified, infinity })
    }

    /// `(P_1, ..., P_l)` with `P_inf` appended when `infinity` is set.
    pub fn first(shape: &CurveShape, l: usize, infinity: bool) -> Result<Self> {
        Self::new(shape, (1..=l).collect(), infinity)
    }

    pub fn ramified(&self) -> &[usize] {
        &self.ramified
    }

    pub fn has_infinity(&self) -> bool {
        self.infinity
    }

    pub fn len(&self) -> usize {
        self.ramified.len() + usize::from(self.infinity)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn places(&self) -> Vec<RationalPlace> {
        let mut out: Vec<RationalPlace> = self
            .ramified
            .iter()
            .map(|&mu| RationalPlace::Ramified(mu))
            .collect();
        if self.infinity {
            out.push(RationalPlace::Infinity);
        }
        out
    }

    /// The divisor `sum coords_k Q_k` on a curve with `r` finite ramified places.
    pub fn divisor(&self, r: usize, coords: &[i64]) -> Result<Divisor> {
        self.check_arity(coords)?;
        let mut s = vec![0; r];
        for (&mu, &c) in self.ramified.iter().zip(coords) {
            s[mu - 1] = c;
        }
        let t = if self.infinity {
            coords[self.ramified.len()]
        } else {
            0
        };
        Ok(Divisor::new(s, t))
    }

    fn check_arity(&self, coords: &[i64]) -> Result<()> {
        if coords.len() != self.len() {
            return Err(Error::BadArity {
                expected: self.len(),
                got: coords.len(),
            });
        }
        Ok(())
    }
}

/// One `(lhs, rhs)` pair per place of the tuple: the place belongs to the
/// pole set of some function with pole divisor `sum s_k Q_k` exactly when
/// `lhs <= rhs`, and is a pure-gap direction when `lhs > rhs`.
fn inequalities(
    shape: &CurveShape,
    places: &PlaceTuple,
    coords: &[i64],
) -> Result<Vec<(i64, i64)>> {
    places.check_arity(coords)?;
    let m = shape.m();
    let r = shape.r() as i64;
    let l = places.ramified.len();
    let s = &coords[..l];
    let t = if places.infinity { coords[l] } else { 0 };
    let absent = r - l as i64;

    let mut out = Vec::with_capacity(places.len());
    for (k, &sj) in s.iter().enumerate() {
        let lhs = m * s
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != k)
            .map(|(_, &si)| ceil_div(sj - si, m))
            .sum::<i64>()
            + m * absent * ceil_div(sj, m);
        out.push((lhs, r * sj + t));
    }
    if places.infinity {
        let (a, b) = (shape.a(), shape.b());
        let rhs_base = (a + b * m) * t;
        let pair = match s.split_first() {
            Some((&s1, rest)) => (
                m * rest.iter().map(|&si| ceil_div(-a * t - si, m)).sum::<i64>()
                    + m * absent * ceil_div(-a * t, m),
                s1 + rhs_base,
            ),
            None => (m * (r - 1) * ceil_div(-a * t, m), rhs_base),
        };
        out.push(pair);
    }
    Ok(out)
}

impl CurveShape {
    /// Membership in the Weierstrass semigroup `H(Q_1, ..., Q_l)`.
    pub fn semigroup_member(&self, places: &PlaceTuple, coords: &[i64]) -> Result<bool> {
        let ineq = inequalities(self, places, coords)?;
        if coords.iter().any(|&c| c < 0) {
            return Ok(false);
        }
        Ok(ineq.iter().all(|&(lhs, rhs)| lhs <= rhs))
    }

    /// Membership in the pure gap set `G_0(Q_1, ..., Q_l)`.
    pub fn pure_gap(&self, places: &PlaceTuple, coords: &[i64]) -> Result<bool> {
        let ineq = inequalities(self, places, coords)?;
        if coords.iter().any(|&c| c < 1) {
            return Err(Error::NonPositiveCoordinate);
        }
        Ok(ineq.iter().all(|&(lhs, rhs)| lhs > rhs))
    }

    /// Gaps at `P_1` up to `limit`: `mk + j` with
    /// `1 <= j <= m - 1 - floor(m/r)` and `0 <= k <= r - 2 - floor(rj/m)`.
    pub fn gaps_at_p1(&self, limit: i64) -> Vec<i64> {
        let (m, r) = (self.m(), self.r() as i64);
        let mut out = Vec::new();
        for j in 1..=(m - 1 - m / r) {
            for k in 0..=(r - 2 - (r * j) / m) {
                let v = m * k + j;
                if v >= 1 && v <= limit {
                    out.push(v);
                }
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Gaps at `P_inf` up to `limit`: `mk - rj` with
    /// `1 <= j <= m - 1 - floor(m/r)` and `ceil(rj/m) <= k <= r - 1`.
    pub fn gaps_at_infinity(&self, limit: i64) -> Vec<i64> {
        let (m, r) = (self.m(), self.r() as i64);
        let mut out = Vec::new();
        for j in 1..=(m - 1 - m / r) {
            for k in ceil_div(r * j, m)..=(r - 1) {
                let v = m * k - r * j;
                if v >= 1 && v <= limit {
                    out.push(v);
                }
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn one_point_gaps(&self, which: OnePoint, limit: i64) -> Vec<i64> {
        match which {
            OnePoint::P1 => self.gaps_at_p1(limit),
            OnePoint::Infinity => self.gaps_at_infinity(limit),
        }
    }

    /// `floor(H)`: coordinatewise maxima of the pole orders over `Omega(H)`.
    pub fn floor_divisor(&self, h: &Divisor) -> Result<Divisor> {
        let pts = self.omega_enumerate(h)?;
        if pts.is_empty() {
            return Err(Error::EmptyRiemannRochSpace);
        }
        let mut floor = self.pole_orders(&pts[0]);
        for p in &pts[1..] {
            let po = self.pole_orders(p);
            floor = Divisor::new(
                floor
                    .s()
                    .iter()
                    .zip(po.s())
                    .map(|(a, b)| *a.max(b))
                    .collect(),
                floor.t().max(po.t()),
            );
        }
        Ok(floor)
    }

    /// All boxes of pure gaps that induce `g` through
    /// `g = sum (2 beta_k + t_k - 1) Q_k` with `Q_k` running over `supp(g)`.
    pub fn boxes_for_divisor(&self, g: &Divisor) -> Result<Vec<GapBox>> {
        if g.r() != self.r() {
            return Err(Error::ArityMismatch {
                expected: self.r(),
                got: g.r(),
            });
        }
        let ramified: Vec<usize> = (1..=self.r()).filter(|&mu| g.s()[mu - 1] != 0).collect();
        let places = match PlaceTuple::new(self, ramified, g.t() != 0) {
            Ok(p) => p,
            Err(Error::EmptyPlaceTuple) => return Ok(Vec::new()),
            Err(e) => return Err(e),
        };
        let coeffs: Vec<i64> = places.places().iter().map(|p| g.coefficient(p)).collect();
        if coeffs.iter().any(|&c| c < 1) {
            return Ok(Vec::new());
        }
        // Each coordinate picks a width t with c - t + 1 even and beta >= 1.
        let options: Vec<Vec<(i64, i64)>> = coeffs
            .iter()
            .map(|&c| {
                (0..c)
                    .filter(|w| (c - w + 1) % 2 == 0)
                    .map(|w| ((c - w + 1) / 2, w))
                    .collect()
            })
            .collect();
        let mut out = Vec::new();
        let mut choice = vec![0usize; options.len()];
        'outer: loop {
            let base: Vec<i64> = choice.iter().zip(&options).map(|(&k, o)| o[k].0).collect();
            let widths: Vec<i64> = choice.iter().zip(&options).map(|(&k, o)| o[k].1).collect();
            if let Ok(b) = GapBox::new(self, places.clone(), base, widths) {
                out.push(b);
            }
            for d in 0..choice.len() {
                choice[d] += 1;
                if choice[d] < options[d].len() {
                    continue 'outer;
                }
                choice[d] = 0;
            }
            break;
        }
        Ok(out)
    }

    /// Exhaustive search for maximal boxes of pure gaps inside
    /// `[1, bound]^l`, ranked best first (see [`BoxCandidate`]).
    pub fn box_search(&self, places: &PlaceTuple, bound: i64) -> Result<Vec<BoxCandidate>> {
        let dims = places.len();
        if bound < 1 {
            return Ok(Vec::new());
        }
        let cells = (bound as u128)
            .checked_pow(dims as u32)
            .unwrap_or(u128::MAX);
        if cells > MAX_GRID_CELLS {
            return Err(Error::SearchTooLarge(cells));
        }
        let mut pure = HashSet::new();
        let mut point = vec![1i64; dims];
        loop {
            if self.pure_gap(places, &point)? {
                pure.insert(point.clone());
            }
            if !advance(&mut point, 1, bound) {
                break;
            }
        }
        let mut gaps: Vec<Vec<i64>> = pure.iter().cloned().collect();
        gaps.sort();

        let face_pure = |lo: &[i64], hi: &[i64], d: usize, at: i64| -> bool {
            let mut flo = lo.to_vec();
            let mut fhi = hi.to_vec();
            flo[d] = at;
            fhi[d] = at;
            box_points(&flo, &fhi).all(|p| pure.contains(&p))
        };

        let mut found = HashSet::new();
        for lo in &gaps {
            let mut stack = vec![lo.clone()];
            let mut visited = HashSet::new();
            visited.insert(lo.clone());
            while let Some(hi) = stack.pop() {
                let mut maximal = true;
                for d in 0..dims {
                    if hi[d] < bound && face_pure(lo, &hi, d, hi[d] + 1) {
                        maximal = false;
                        let mut next = hi.clone();
                        next[d] += 1;
                        if visited.insert(next.clone()) {
                            stack.push(next);
                        }
                    }
                    if lo[d] > 1 && face_pure(lo, &hi, d, lo[d] - 1) {
                        maximal = false;
                    }
                }
                if maximal {
                    found.insert((lo.clone(), hi));
                }
            }
        }

        let mut out: Vec<BoxCandidate> = found
            .into_iter()
            .map(|(lo, hi)| {
                let widths = lo.iter().zip(&hi).map(|(a, b)| b - a).collect();
                let gap_box = GapBox {
                    places: places.clone(),
                    base: lo,
                    widths,
                };
                BoxCandidate::new(self, gap_box)
            })
            .collect::<Result<_>>()?;
        out.sort_by(|x, y| {
            y.gain
                .cmp(&x.gain)
                .then(x.divisor.degree().cmp(&y.divisor.degree()))
                .then(x.gap_box.base.cmp(&y.gap_box.base))
                .then(x.gap_box.widths.cmp(&y.gap_box.widths))
        });
        Ok(out)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OnePoint {
    P1,
    Infinity,
}

/// Odometer over `[lo, hi]^dims`; false once it wraps.
fn advance(point: &mut [i64], lo: i64, hi: i64) -> bool {
    for c in point.iter_mut() {
        if *c < hi {
            *c += 1;
            return true;
        }
        *c = lo;
    }
    false
}

fn box_points(lo: &[i64], hi: &[i64]) -> impl Iterator<Item = Vec<i64>> {
    let lo = lo.to_vec();
    let hi = hi.to_vec();
    let mut cur = Some(lo.clone());
    std::iter::from_fn(move || {
        let out = cur.clone()?;
        let mut next = out.clone();
        let mut advanced = false;
        for d in 0..next.len() {
            if next[d] < hi[d] {
                next[d] += 1;
                advanced = true;
                break;
            }
            next[d] = lo[d];
        }
        cur = advanced.then_some(next);
        Some(out)
    })
}

/// Axis-aligned box `base_k <= k_k <= base_k + widths_k` of pure gaps.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GapBox {
    places: PlaceTuple,
    base: Vec<i64>,
    widths: Vec<i64>,
}

impl GapBox {
    /// Validates that every integer point of the box is a pure gap.
    pub fn new(
        shape: &CurveShape,
        places: PlaceTuple,
        base: Vec<i64>,
        widths: Vec<i64>,
    ) -> Result<Self> {
        if base.len() != places.len() || widths.len() != places.len() {
            return Err(Error::BadArity {
                expected: places.len(),
                got: base.len().max(widths.len()),
            });
        }
        if base.iter().any(|&b| b < 1) || widths.iter().any(|&w| w < 0) {
            return Err(Error::InvalidGapBox(
                "base must be >= 1 and widths >= 0".into(),
            ));
        }
        let hi: Vec<i64> = base.iter().zip(&widths).map(|(b, w)| b + w).collect();
        for p in box_points(&base, &hi) {
            if !shape.pure_gap(&places, &p)? {
                return Err(Error::InvalidGapBox(format!("{p:?} is not a pure gap")));
            }
        }
        Ok(GapBox {
            places,
            base,
            widths,
        })
    }

    pub fn places(&self) -> &PlaceTuple {
        &self.places
    }

    pub fn base(&self) -> &[i64] {
        &self.base
    }

    pub fn widths(&self) -> &[i64] {
        &self.widths
    }

    /// `sum (2 beta_k + t_k - 1) Q_k`.
    pub fn induced_divisor(&self, r: usize) -> Divisor {
        let coords: Vec<i64> = self
            .base
            .iter()
            .zip(&self.widths)
            .map(|(b, w)| 2 * b + w - 1)
            .collect();
        self.places
            .divisor(r, &coords)
            .expect("arity checked on construction")
    }

    /// Improvement `sum t_k + l` over the plain differential Goppa bound.
    pub fn gain(&self) -> i64 {
        self.widths.iter().sum::<i64>() + self.places.len() as i64
    }
}

/// A maximal box found by [`CurveShape::box_search`], with its induced
/// divisor and the resulting lower bound on the minimum distance of `C_Omega`.
///
/// Candidates are ranked by `gain` (descending), then by the degree of the
/// induced divisor, then lexicographically by base and widths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoxCandidate {
    pub gap_box: GapBox,
    pub divisor: Divisor,
    pub gain: i64,
    pub designed_distance: i64,
}

impl BoxCandidate {
    fn new(shape: &CurveShape, gap_box: GapBox) -> Result<Self> {
        let divisor = gap_box.induced_divisor(shape.r());
        let gain = gap_box.gain();
        let designed_distance = divisor.degree() - (2 * shape.genus() - 2) + gain;
        Ok(BoxCandidate {
            gap_box,
            divisor,
            gain,
            designed_distance,
        })
    }
}

/// Generic floor from any spanning set of `L(G)`: minus the componentwise
/// minimum of the divisors of the spanning functions.
pub fn floor_from_spanning_divisors(divisors: &[Divisor]) -> Result<Divisor> {
    let (first, rest) = divisors.split_first().ok_or(Error::EmptyRiemannRochSpace)?;
    let mut lo = first.clone();
    for d in rest {
        lo = Divisor::new(
            lo.s().iter().zip(d.s()).map(|(a, b)| *a.min(b)).collect(),
            lo.t().min(d.t()),
        );
    }
    Ok(lo.scaled(-1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arity_and_positivity() {
        let shape = CurveShape::new(6, 5).unwrap();
        let tuple = PlaceTuple::first(&shape, 2, false).unwrap();
        assert!(matches!(
            shape.pure_gap(&tuple, &[1]),
            Err(Error::BadArity {
                expected: 2,
                got: 1
            })
        ));
        assert_eq!(
            shape.pure_gap(&tuple, &[0, 1]),
            Err(Error::NonPositiveCoordinate)
        );
        assert_eq!(
            PlaceTuple::first(&shape, 0, false).unwrap_err(),
            Error::EmptyPlaceTuple
        );
        assert!(PlaceTuple::first(&shape, 6, false).is_err());
    }

    #[test]
    fn zero_is_in_every_semigroup() {
        let shape = CurveShape::new(5, 9).unwrap();
        for l in 0..=3 {
            for inf in [false, true] {
                let Ok(tuple) = PlaceTuple::first(&shape, l, inf) else {
                    continue;
                };
                assert!(shape
                    .semigroup_member(&tuple, &vec![0; tuple.len()])
                    .unwrap());
            }
        }
    }

    #[test]
    fn genus_zero_has_no_pure_gaps() {
        let shape = CurveShape::new(2, 1).unwrap();
        let tuple = PlaceTuple::first(&shape, 1, true).unwrap();
        assert!(shape.box_search(&tuple, 10).unwrap().is_empty());
        assert!(shape.gaps_at_p1(100).is_empty());
    }

    #[test]
    fn floor_of_zero() {
        let shape = CurveShape::new(9, 4).unwrap();
        assert_eq!(
            shape.floor_divisor(&Divisor::zero(4)).unwrap(),
            Divisor::zero(4)
        );
        assert_eq!(
            shape.floor_divisor(&Divisor::new(vec![-1, 0, 0, 0], 0)),
            Err(Error::EmptyRiemannRochSpace)
        );
    }

    #[test]
    fn box_points_cover_box() {
        let pts: Vec<_> = box_points(&[1, 5], &[2, 6]).collect();
        assert_eq!(pts, vec![vec![1, 5], vec![2, 5], vec![1, 6], vec![2, 6]]);
    }
}
