//! Corner functions and the conjugacy decision procedure.
//!
//! A corner function is a member of F whose nodes all lie in its fundamental
//! domain `[x_f, α·x_f)`. Every member of F is conjugate to one, and a corner
//! function is determined by α together with the order in which its marked
//! points are read. Deciding conjugacy therefore comes down to reducing both
//! maps to corner form, comparing their profiles, and cycling the nodes of
//! one corner function until it coincides with the other. The conjugators
//! used along the way compose into an explicit witness.
//!
//! ```
//! use plconj::{conjugacy::{decide_conjugacy, verify_conjugacy, ConjugacyOutcome}, PlMap};
//! use plconj::rational::ratio;
//!
//! let f = PlMap::normalize(vec![
//!     (ratio(0, 1), ratio(0, 1)),
//!     (ratio(1, 4), ratio(1, 2)),
//!     (ratio(1, 2), ratio(5, 8)),
//!     (ratio(1, 1), ratio(1, 1)),
//! ])?;
//! let h = PlMap::normalize(vec![
//!     (ratio(0, 1), ratio(0, 1)),
//!     (ratio(1, 3), ratio(1, 2)),
//!     (ratio(1, 1), ratio(1, 1)),
//! ])?;
//! let g = f.conjugate_by(&h);
//! match decide_conjugacy(&f, &g)? {
//!     ConjugacyOutcome::Conjugate { witness } => assert!(verify_conjugacy(&f, &g, &witness)),
//!     other => panic!("expected a witness, got {other:?}"),
//! }
//! # Ok::<(), plconj::Error>(())
//! ```

use num_traits::{One, Signed, Zero};

use crate::cyclic::rotation_offsets;
use crate::error::{Error, Result};
use crate::invariants::{alpha, beta_profile, f_star, node_profile, BetaProfile, MarkedPoint};
use crate::plmap::{Breakpoint, PlMap};
use crate::Rational;

/// Upper bound on elementary conjugations in [`corner_reduce`].
pub const MAX_REDUCTION_STEPS: usize = 1_000_000;

/// One elementary conjugation: the single-node map `conjugator` with node
/// `pivot` and slope ratio `lambda` there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementaryStep {
    pub pivot: Rational,
    pub lambda: Rational,
    pub conjugator: PlMap,
}

/// Why two maps in F are not conjugate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Mismatch {
    Alpha { f: Rational, g: Rational },
    Beta { f: BetaProfile, g: BetaProfile },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConjugacyOutcome {
    /// `g = witness ∘ f ∘ witness⁻¹`.
    Conjugate { witness: PlMap },
    NotConjugate(Mismatch),
}

impl ConjugacyOutcome {
    pub fn is_conjugate(&self) -> bool {
        matches!(self, ConjugacyOutcome::Conjugate { .. })
    }

    pub fn witness(&self) -> Option<&PlMap> {
        match self {
            ConjugacyOutcome::Conjugate { witness } => Some(witness),
            ConjugacyOutcome::NotConjugate(_) => None,
        }
    }
}

fn require_f(f: &PlMap) -> Result<()> {
    if f.is_in_f() {
        Ok(())
    } else {
        Err(Error::NotInF)
    }
}

/// The unique map with a single node at `p` whose slope ratio there is
/// `lambda`. Any `lambda > 0` other than one is accepted.
pub fn single_node_map(p: &Rational, lambda: &Rational) -> Result<PlMap> {
    let bad = |why: &str| Err(Error::InvalidNodeParameters(why.to_owned()));
    if !p.is_positive() || *p >= Rational::one() {
        return bad("node must lie in (0,1)");
    }
    if !lambda.is_positive() {
        return bad("slope ratio must be positive");
    }
    if lambda.is_one() {
        return bad("slope ratio 1 gives no node");
    }
    let first_slope = (p + lambda * (Rational::one() - p)).recip();
    let corner = Breakpoint::new(p.clone(), first_slope * p);
    Ok(PlMap::from_valid(vec![
        Breakpoint::new(Rational::zero(), Rational::zero()),
        corner,
        Breakpoint::new(Rational::one(), Rational::one()),
    ]))
}

/// Conjugates `f` by the single-node map that cancels its largest node.
///
/// Returns `h ∘ f ∘ h⁻¹` and the step used. The largest node `z` of `f`
/// disappears and reappears at `h(f⁻¹(z))`; on a corner function this
/// moves the last node to the front.
pub fn elementary_conjugation(f: &PlMap) -> Result<(PlMap, ElementaryStep)> {
    require_f(f)?;
    let pivot = f
        .interior()
        .last()
        .map(|p| p.x.clone())
        .ok_or_else(|| Error::Internal("member of F without nodes".into()))?;
    let lambda = f_star(f, &pivot)?;
    let h = single_node_map(&pivot, &lambda)?;
    let g = f.conjugate_by(&h);
    Ok((
        g,
        ElementaryStep {
            pivot,
            lambda,
            conjugator: h,
        },
    ))
}

/// Whether every node of `f` lies in `[x_f, α·x_f)`.
pub fn is_corner(f: &PlMap) -> Result<bool> {
    require_f(f)?;
    let interior = f.interior();
    let first = &interior[0].x;
    let last = &interior[interior.len() - 1].x;
    Ok(*last < f.first_slope() * first)
}

/// The termination measure of [`corner_reduce`]: the level `n` with
/// `y_f ∈ [fⁿ(x_f), fⁿ⁺¹(x_f))` and the number of nodes at that level.
pub fn reduction_measure(f: &PlMap) -> Result<(usize, usize)> {
    require_f(f)?;
    let nodes = node_profile(f).entries;
    let mut level = 0;
    let mut lower = nodes[0].z.clone();
    let mut upper = f.eval(&lower);
    let top = &nodes[nodes.len() - 1].z;
    while *top >= upper {
        lower = upper;
        upper = f.eval(&lower);
        level += 1;
    }
    let count = nodes.iter().filter(|n| n.z >= lower).count();
    Ok((level, count))
}

/// Conjugates `f` to a corner function.
///
/// Returns `(corner, witness)` with `corner = witness ∘ f ∘ witness⁻¹`. The
/// witness is the identity when `f` is already a corner function.
pub fn corner_reduce(f: &PlMap) -> Result<(PlMap, PlMap)> {
    let mut current = f.clone();
    let mut witness = PlMap::identity();
    for _ in 0..MAX_REDUCTION_STEPS {
        if is_corner(&current)? {
            return Ok((current, witness));
        }
        let (next, step) = elementary_conjugation(&current)?;
        witness = step.conjugator.compose(&witness);
        current = next;
    }
    Err(Error::Internal(format!(
        "corner reduction did not finish within {MAX_REDUCTION_STEPS} steps"
    )))
}

/// The marked word of a corner function read from its first node:
/// each node's slope ratio with the ratio to the next node.
fn corner_word(c: &PlMap) -> Vec<MarkedPoint> {
    let nodes = node_profile(c).entries;
    let m = nodes.len();
    let alpha = c.first_slope();
    (0..m)
        .map(|i| {
            let gap = if i + 1 < m {
                &nodes[i + 1].z / &nodes[i].z
            } else {
                &alpha * &nodes[0].z / &nodes[i].z
            };
            MarkedPoint::new(nodes[i].star.clone(), gap)
        })
        .collect()
}

/// Realizes a canonical profile as a corner function.
///
/// The marked word is read in its stored order with the first point placed
/// at `x_f`. See [`corner_from_word`].
pub fn corner_from_profile(profile: &BetaProfile) -> Result<PlMap> {
    corner_from_word(profile.alpha(), profile.marked())
}

/// The unique corner function with first slope `alpha` whose nodes, read from
/// `x_f` upward, carry the slope ratios and successive position ratios of
/// `word`.
///
/// Node `i` sits at `x·gᵢ` where `gᵢ` is the product of the earlier gaps. With
/// `σ` the running slope and `c` the coefficient of `f(z_m) = c·x`, the
/// condition `f(1) = 1` pins `x = (1 − σ_m) / (c − σ_m·g_m)`.
pub fn corner_from_word(alpha: &Rational, word: &[MarkedPoint]) -> Result<PlMap> {
    let invalid = |why: String| Err(Error::InvalidProfile(why));
    let one = Rational::one();
    if *alpha <= one {
        return invalid(format!("alpha {alpha} must exceed 1"));
    }
    if word.is_empty() {
        return invalid("no marked points".into());
    }
    for (i, mp) in word.iter().enumerate() {
        if !mp.value.is_positive() || mp.value.is_one() {
            return invalid(format!("marked value {} at {i} must be positive and not 1", mp.value));
        }
        if mp.gap <= one {
            return invalid(format!("gap {} at {i} must exceed 1", mp.gap));
        }
    }
    let gaps = crate::rational::product(word.iter().map(|m| &m.gap));
    if gaps != *alpha {
        return invalid(format!("gaps multiply to {gaps}, not alpha {alpha}"));
    }
    let values = crate::rational::product(word.iter().map(|m| &m.value));
    if values >= one {
        return invalid(format!("marked values multiply to {values}, need < 1"));
    }

    // positions g_i, image coefficients c_i (f(z_i) = c_i·x), slopes σ_i
    let mut position = one.clone();
    let mut coefficient = alpha.clone();
    let mut slope = alpha * &word[0].value;
    let mut nodes = vec![(position.clone(), coefficient.clone())];
    for i in 1..word.len() {
        let next = &position * &word[i - 1].gap;
        coefficient += &slope * (&next - &position);
        position = next;
        slope *= &word[i].value;
        nodes.push((position.clone(), coefficient.clone()));
    }
    let denom = &coefficient - &slope * &position;
    if denom.is_zero() {
        return invalid("degenerate profile: scale is undetermined".into());
    }
    let scale = (&one - &slope) / denom;
    if !scale.is_positive() || &scale * &position >= one || &scale * &coefficient >= one {
        return invalid(format!("profile does not fit in [0,1] (scale {scale})"));
    }

    let mut points = vec![(Rational::zero(), Rational::zero())];
    points.extend(nodes.into_iter().map(|(g, c)| (g * &scale, c * &scale)));
    points.push((one.clone(), one));
    let f = PlMap::normalize(points).map_err(|e| Error::InvalidProfile(e.to_string()))?;
    if !f.is_in_f() {
        return invalid(format!("realization {f} is not above the diagonal"));
    }
    if f.interior().len() != word.len() {
        return Err(Error::Internal(format!("realization {f} lost a node")));
    }
    Ok(f)
}

/// Decides whether `f` and `g` in F are conjugate, producing a witness.
pub fn decide_conjugacy(f: &PlMap, g: &PlMap) -> Result<ConjugacyOutcome> {
    let (alpha_f, alpha_g) = (alpha(f)?, alpha(g)?);
    if alpha_f != alpha_g {
        return Ok(ConjugacyOutcome::NotConjugate(Mismatch::Alpha {
            f: alpha_f,
            g: alpha_g,
        }));
    }

    let (corner_f, to_corner_f) = corner_reduce(f)?;
    let (corner_g, to_corner_g) = corner_reduce(g)?;
    let (profile_f, profile_g) = (beta_profile(&corner_f)?, beta_profile(&corner_g)?);
    if profile_f != profile_g {
        return Ok(ConjugacyOutcome::NotConjugate(Mismatch::Beta {
            f: profile_f,
            g: profile_g,
        }));
    }

    // Each elementary conjugation of a corner function rotates its word right
    // by one, so a left offset L is reached after (m - L) mod m steps.
    let word_f = corner_word(&corner_f);
    let word_g = corner_word(&corner_g);
    let m = word_f.len();
    let mut steps: Vec<usize> = rotation_offsets(&word_f, &word_g)
        .into_iter()
        .map(|left| (m - left) % m)
        .collect();
    steps.sort_unstable();

    let mut cycled = corner_f;
    let mut cycler = PlMap::identity();
    let mut done = 0;
    for k in steps {
        while done < k {
            let (next, step) = elementary_conjugation(&cycled)?;
            cycler = step.conjugator.compose(&cycler);
            cycled = next;
            done += 1;
        }
        if cycled == corner_g {
            let witness = to_corner_g.inverse().compose(&cycler).compose(&to_corner_f);
            return Ok(ConjugacyOutcome::Conjugate { witness });
        }
    }
    Err(Error::Internal(format!(
        "corner functions {} and {corner_g} share a profile but no node cycling aligns them",
        cycled
    )))
}

/// Whether `w ∘ f ∘ w⁻¹ = g` exactly.
pub fn verify_conjugacy(f: &PlMap, g: &PlMap, w: &PlMap) -> bool {
    f.conjugate_by(w) == *g
}
