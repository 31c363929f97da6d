//! Piecewise linear homeomorphisms of `[0,1]` in canonical breakpoint form.
//!
//! A [`PlMap`] is stored as the list of points where its graph bends, from
//! `(0,0)` to `(1,1)`. The list is kept minimal: every interior breakpoint is
//! a genuine change of slope. Two maps are therefore equal as functions
//! exactly when their breakpoint lists are equal, and the derived
//! `PartialEq` is functional equality.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::Rational;

/// A corner of the graph of a [`PlMap`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Breakpoint {
    pub x: Rational,
    pub y: Rational,
}

impl Breakpoint {
    pub fn new(x: Rational, y: Rational) -> Self {
        Breakpoint { x, y }
    }

    fn swapped(&self) -> Self {
        Breakpoint {
            x: self.y.clone(),
            y: self.x.clone(),
        }
    }
}

impl From<(Rational, Rational)> for Breakpoint {
    fn from((x, y): (Rational, Rational)) -> Self {
        Breakpoint { x, y }
    }
}

/// An orientation preserving piecewise linear homeomorphism of `[0,1]`.
///
/// Invariants: starts at `(0,0)`, ends at `(1,1)`, both coordinates strictly
/// increasing, no interior breakpoint collinear with its neighbours. The only
/// way to build one is [`PlMap::normalize`] (or operations on existing maps,
/// which re-establish the invariants).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PlMap {
    points: Vec<Breakpoint>,
}

fn slope(a: &Breakpoint, b: &Breakpoint) -> Rational {
    (&b.y - &a.y) / (&b.x - &a.x)
}

/// Value at `x` of the line through `a` and `b`.
fn interpolate(a: &Breakpoint, b: &Breakpoint, x: &Rational) -> Rational {
    &a.y + (&b.y - &a.y) * (x - &a.x) / (&b.x - &a.x)
}

impl PlMap {
    /// Builds the canonical map interpolating `points`.
    ///
    /// The points are sorted by `x` first. Duplicate `x` values, a missing
    /// `(0,0)` or `(1,1)` endpoint, and non-increasing `y` values are each
    /// reported as their own error. Collinear interior points are dropped.
    pub fn normalize<P>(points: impl IntoIterator<Item = P>) -> Result<PlMap>
    where
        P: Into<Breakpoint>,
    {
        let mut points: Vec<Breakpoint> = points.into_iter().map(Into::into).collect();
        if points.len() < 2 {
            return Err(Error::TooFewPoints(points.len()));
        }
        points.sort_by(|a, b| a.x.cmp(&b.x));
        for (i, w) in points.windows(2).enumerate() {
            if w[0].x == w[1].x {
                return Err(Error::DuplicateX {
                    index: i + 1,
                    x: w[1].x.clone(),
                });
            }
        }
        let (first, last) = (&points[0], &points[points.len() - 1]);
        if !first.x.is_zero() || !first.y.is_zero() || !last.x.is_one() || !last.y.is_one() {
            return Err(Error::BadEndpoints {
                x0: first.x.clone(),
                y0: first.y.clone(),
                x1: last.x.clone(),
                y1: last.y.clone(),
            });
        }
        for (i, w) in points.windows(2).enumerate() {
            if w[0].y >= w[1].y {
                return Err(Error::YNotIncreasing { index: i + 1 });
            }
        }
        Ok(Self::from_valid(points))
    }

    /// Drops collinear points from a list already known to be a valid,
    /// sorted homeomorphism graph.
    pub(crate) fn from_valid(points: Vec<Breakpoint>) -> PlMap {
        debug_assert!(points.len() >= 2);
        debug_assert!(points.windows(2).all(|w| w[0].x < w[1].x && w[0].y < w[1].y));
        let mut out: Vec<Breakpoint> = Vec::with_capacity(points.len());
        let mut last_slope: Option<Rational> = None;
        for p in points {
            if let Some(prev) = out.last() {
                let s = slope(prev, &p);
                if last_slope.as_ref() == Some(&s) {
                    out.pop();
                } else {
                    last_slope = Some(s);
                }
            }
            out.push(p);
        }
        PlMap { points: out }
    }

    pub fn identity() -> PlMap {
        PlMap {
            points: vec![
                Breakpoint::new(Rational::zero(), Rational::zero()),
                Breakpoint::new(Rational::one(), Rational::one()),
            ],
        }
    }

    pub fn is_identity(&self) -> bool {
        self.points.len() == 2
    }

    /// The canonical breakpoint list, endpoints included.
    pub fn breakpoints(&self) -> &[Breakpoint] {
        &self.points
    }

    /// Breakpoints strictly inside `(0,1)`. In canonical form these are
    /// exactly the nodes of the map.
    pub fn interior(&self) -> &[Breakpoint] {
        &self.points[1..self.points.len() - 1]
    }

    /// Slopes of the linear pieces, left to right.
    pub fn segment_slopes(&self) -> Vec<Rational> {
        self.points.windows(2).map(|w| slope(&w[0], &w[1])).collect()
    }

    /// Slope of the piece starting at `0`.
    pub fn first_slope(&self) -> Rational {
        slope(&self.points[0], &self.points[1])
    }

    /// Slope of the piece ending at `1`.
    pub fn last_slope(&self) -> Rational {
        let n = self.points.len();
        slope(&self.points[n - 2], &self.points[n - 1])
    }

    /// `f(x)` for `x` in `[0,1]`.
    pub fn evaluate(&self, x: &Rational) -> Result<Rational> {
        if x.is_negative() || *x > Rational::one() {
            return Err(Error::OutOfDomain {
                value: x.clone(),
                domain: "[0,1]",
            });
        }
        Ok(self.eval(x))
    }

    /// Evaluation without the domain check; `x` must lie in `[0,1]`.
    pub(crate) fn eval(&self, x: &Rational) -> Rational {
        let idx = self.points.partition_point(|p| p.x <= *x);
        if idx == self.points.len() {
            return self.points[idx - 1].y.clone();
        }
        let (a, b) = (&self.points[idx - 1], &self.points[idx]);
        if a.x == *x {
            return a.y.clone();
        }
        interpolate(a, b, x)
    }

    /// `f⁻¹(y)` for `y` in `[0,1]`, without a domain check.
    pub(crate) fn eval_inverse(&self, y: &Rational) -> Rational {
        let idx = self.points.partition_point(|p| p.y <= *y);
        if idx == self.points.len() {
            return self.points[idx - 1].x.clone();
        }
        let (a, b) = (self.points[idx - 1].swapped(), self.points[idx].swapped());
        if a.x == *y {
            return a.y;
        }
        interpolate(&a, &b, y)
    }

    /// Left and right slopes at an interior point.
    pub fn slopes_at(&self, x: &Rational) -> Result<(Rational, Rational)> {
        if !x.is_positive() || *x >= Rational::one() {
            return Err(Error::OutOfDomain {
                value: x.clone(),
                domain: "(0,1)",
            });
        }
        let idx = self.points.partition_point(|p| p.x < *x);
        // points[idx] is the first breakpoint with p.x >= x, and idx >= 1.
        let left = slope(&self.points[idx - 1], &self.points[idx]);
        if self.points[idx].x == *x {
            let right = slope(&self.points[idx], &self.points[idx + 1]);
            Ok((left, right))
        } else {
            Ok((left.clone(), left))
        }
    }

    /// The composite `self ∘ inner`, i.e. `x ↦ self(inner(x))`.
    pub fn compose(&self, inner: &PlMap) -> PlMap {
        // Walk the merged, sorted set of intermediate values t = inner(x):
        // inner's breakpoint images and self's breakpoint inputs. Each output
        // point has one coordinate read straight off a breakpoint, so only
        // the other needs interpolating.
        let outer = &self.points;
        let inner = &inner.points;
        let outer_slopes = self.segment_slopes();
        let inner_slopes: Vec<Rational> = inner.windows(2).map(|w| slope(&w[0], &w[1])).collect();

        let mut out: Vec<Breakpoint> = Vec::with_capacity(outer.len() + inner.len());
        let mut out_slopes: Vec<Rational> = Vec::with_capacity(outer.len() + inner.len());
        let (mut i, mut j) = (0, 0);
        while i < inner.len() && j < outer.len() {
            // the piece ending at this t lies in inner segment i-1 and outer
            // segment j-1
            let piece = (i > 0).then(|| &outer_slopes[j - 1] * &inner_slopes[i - 1]);
            let point = match inner[i].y.cmp(&outer[j].x) {
                std::cmp::Ordering::Equal => {
                    let p = Breakpoint::new(inner[i].x.clone(), outer[j].y.clone());
                    i += 1;
                    j += 1;
                    p
                }
                std::cmp::Ordering::Less => {
                    let t = &inner[i].y;
                    let y = &outer[j - 1].y + &outer_slopes[j - 1] * (t - &outer[j - 1].x);
                    let p = Breakpoint::new(inner[i].x.clone(), y);
                    i += 1;
                    p
                }
                std::cmp::Ordering::Greater => {
                    let t = &outer[j].x;
                    let x = &inner[i - 1].x + (t - &inner[i - 1].y) / &inner_slopes[i - 1];
                    let p = Breakpoint::new(x, outer[j].y.clone());
                    j += 1;
                    p
                }
            };
            match piece {
                Some(s) if out_slopes.last() == Some(&s) => {
                    out.pop();
                }
                Some(s) => out_slopes.push(s),
                None => {}
            }
            out.push(point);
        }
        debug_assert!(i == inner.len() && j == outer.len());
        PlMap { points: out }
    }

    /// The inverse map: coordinates swapped.
    pub fn inverse(&self) -> PlMap {
        PlMap {
            points: self.points.iter().map(Breakpoint::swapped).collect(),
        }
    }

    /// The `n`-fold iterate; negative `n` iterates the inverse.
    pub fn pow(&self, n: i64) -> PlMap {
        let mut base = if n < 0 { self.inverse() } else { self.clone() };
        let mut e = n.unsigned_abs();
        let mut acc = PlMap::identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.compose(&base);
            }
        }
        acc
    }

    /// `h ∘ self ∘ h⁻¹`.
    pub fn conjugate_by(&self, h: &PlMap) -> PlMap {
        h.compose(self).compose(&h.inverse())
    }

    /// Whether `f(x) > x` on all of `(0,1)`.
    ///
    /// Between breakpoints the map is affine, so it suffices to check the
    /// interior breakpoints. The identity has none and is excluded.
    pub fn is_in_f(&self) -> bool {
        !self.is_identity() && self.interior().iter().all(|p| p.y > p.x)
    }
}

impl fmt::Debug for PlMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PlMap{self}")
    }
}

impl fmt::Display for PlMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.points.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "({},{})", p.x, p.y)?;
        }
        f.write_str("]")
    }
}
