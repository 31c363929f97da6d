//! Nodes, the slope-ratio `f*`, and the conjugacy invariants α and β.
//!
//! For `f` strictly above the diagonal, `f` is linear with slope `α` on
//! `[0, x_f]` where `x_f` is the smallest node. The interval
//! `[x_f, α·x_f)` is a fundamental domain: every orbit of `f` in `(0,1)`
//! meets it exactly once. The orbit product `φ(u)` of `f*` over the forward
//! orbit of a point `u` of that domain is finite, because orbits eventually
//! pass the largest node.
//!
//! The invariant β is `φ` read on the circle obtained by gluing the ends of
//! the fundamental domain with logarithmic coordinates, taken up to
//! rotation. Only finitely many points of the circle have `φ ≠ 1`. We never
//! take logarithms: [`BetaProfile`] stores, for each marked point in
//! increasing order, its value and the exact ratio to the next marked point
//! (the last ratio wraps around through `α`). Rotating the circle rotates this
//! cyclic word, so the word's least rotation is a complete, exact fingerprint.

use std::collections::BTreeMap;

use num_traits::{One, Signed};

use crate::cyclic::canonical_rotation;
use crate::error::{Error, Result};
use crate::plmap::PlMap;
use crate::Rational;

/// A node `z` of a map with its slope ratio `f*(z) ≠ 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Node {
    pub z: Rational,
    pub star: Rational,
}

/// Nodes of a map in increasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct NodeProfile {
    pub entries: Vec<Node>,
}

impl NodeProfile {
    /// Smallest node, `x_f`.
    pub fn first(&self) -> Option<&Node> {
        self.entries.first()
    }

    /// Largest node, `y_f`.
    pub fn last(&self) -> Option<&Node> {
        self.entries.last()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// One marked point of the β word: its orbit product and the ratio from its
/// position to the next marked point.
///
/// The derived ordering compares `value` first, then `gap`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MarkedPoint {
    pub value: Rational,
    pub gap: Rational,
}

impl MarkedPoint {
    pub fn new(value: Rational, gap: Rational) -> Self {
        MarkedPoint { value, gap }
    }
}

/// The pair (α, β) in canonical form.
///
/// `marked` is always stored in its lexicographically least rotation, so the
/// derived `PartialEq` is equality of invariants.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BetaProfile {
    alpha: Rational,
    marked: Vec<MarkedPoint>,
}

impl BetaProfile {
    /// Builds a profile from a cyclic word given in any rotation.
    ///
    /// No structural checks are made here; [`crate::conjugacy::corner_from_profile`]
    /// validates a profile before realizing it.
    pub fn from_cyclic(alpha: Rational, marked: &[MarkedPoint]) -> Self {
        BetaProfile {
            alpha,
            marked: canonical_rotation(marked),
        }
    }

    pub fn alpha(&self) -> &Rational {
        &self.alpha
    }

    pub fn marked(&self) -> &[MarkedPoint] {
        &self.marked
    }

    pub fn gap_product(&self) -> Rational {
        crate::rational::product(self.marked.iter().map(|m| &m.gap))
    }

    pub fn value_product(&self) -> Rational {
        crate::rational::product(self.marked.iter().map(|m| &m.value))
    }
}

/// `f*(x) = f'₊(x) / f'₋(x)` for `x` in `(0,1)`.
pub fn f_star(f: &PlMap, x: &Rational) -> Result<Rational> {
    let (left, right) = f.slopes_at(x)?;
    Ok(right / left)
}

/// Every interior breakpoint with its slope ratio. Empty for the identity.
pub fn node_profile(f: &PlMap) -> NodeProfile {
    let slopes = f.segment_slopes();
    let entries = f
        .interior()
        .iter()
        .zip(slopes.windows(2))
        .map(|(p, s)| Node {
            z: p.x.clone(),
            star: &s[1] / &s[0],
        })
        .collect();
    NodeProfile { entries }
}

fn require_f(f: &PlMap) -> Result<()> {
    if f.is_in_f() {
        Ok(())
    } else {
        Err(Error::NotInF)
    }
}

/// α, the slope of `f` on `[0, x_f]`.
pub fn alpha(f: &PlMap) -> Result<Rational> {
    require_f(f)?;
    Ok(f.first_slope())
}

/// Smallest node, largest node and α of a member of F.
fn node_span(f: &PlMap) -> Result<(Rational, Rational, Rational)> {
    require_f(f)?;
    let interior = f.interior();
    let first = interior[0].x.clone();
    let last = interior[interior.len() - 1].x.clone();
    Ok((first, last, f.first_slope()))
}

/// The orbit product `φ(x) = ∏ₙ f*(fⁿ(x))` for `x` in `[x_f, α·x_f)`.
pub fn phi_value(f: &PlMap, x: &Rational) -> Result<Rational> {
    let (first, last, alpha) = node_span(f)?;
    let upper = &alpha * &first;
    if *x < first || *x >= upper {
        return Err(Error::OutOfDomain {
            value: x.clone(),
            domain: "the fundamental domain [x_f, f(x_f))",
        });
    }
    let mut product = Rational::one();
    let mut y = x.clone();
    while y <= last {
        product *= f_star(f, &y)?;
        y = f.eval(&y);
    }
    Ok(product)
}

/// Pulls `z` back along `f⁻¹` until it lies below `upper`.
fn pull_back(f: &PlMap, mut z: Rational, upper: &Rational) -> Rational {
    while z >= *upper {
        z = f.eval_inverse(&z);
    }
    z
}

/// Marked points relative to the fundamental domain `[base, α·base)`, in
/// increasing position.
fn marked_points(f: &PlMap, alpha: &Rational, base: &Rational) -> Vec<MarkedPoint> {
    let upper = alpha * base;
    let mut by_position: BTreeMap<Rational, Rational> = BTreeMap::new();
    for node in node_profile(f).entries {
        let u = pull_back(f, node.z, &upper);
        *by_position.entry(u).or_insert_with(Rational::one) *= node.star;
    }
    let survivors: Vec<(Rational, Rational)> =
        by_position.into_iter().filter(|(_, v)| !v.is_one()).collect();
    let m = survivors.len();
    (0..m)
        .map(|i| {
            let gap = if i + 1 < m {
                &survivors[i + 1].0 / &survivors[i].0
            } else {
                alpha * &survivors[0].0 / &survivors[i].0
            };
            MarkedPoint::new(survivors[i].1.clone(), gap)
        })
        .collect()
}

/// The canonical (α, β) profile of a member of F.
pub fn beta_profile(f: &PlMap) -> Result<BetaProfile> {
    let (first, _, alpha) = node_span(f)?;
    let marked = marked_points(f, &alpha, &first);
    if marked.is_empty() {
        return Err(Error::Internal(format!("map {f} in F has no marked points")));
    }
    Ok(BetaProfile::from_cyclic(alpha, &marked))
}

/// The profile read from the fundamental domain `[a, α·a)` instead of
/// `[x_f, α·x_f)`, for `0 < a ≤ x_f`. Equal to [`beta_profile`].
pub fn profile_from_base(f: &PlMap, a: &Rational) -> Result<BetaProfile> {
    let (first, _, alpha) = node_span(f)?;
    if !a.is_positive() || *a > first {
        return Err(Error::OutOfDomain {
            value: a.clone(),
            domain: "(0, x_f]",
        });
    }
    let marked = marked_points(f, &alpha, a);
    if marked.is_empty() {
        return Err(Error::Internal(format!("map {f} in F has no marked points")));
    }
    Ok(BetaProfile::from_cyclic(alpha, &marked))
}

/// Equality of invariants: same α and the same cyclic word up to rotation.
pub fn beta_equal(a: &BetaProfile, b: &BetaProfile) -> bool {
    a == b
}
