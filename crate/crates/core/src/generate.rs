//! Seeded random maps for property tests and corpora.
//!
//! Generation is a pure function of [`GenConfig`]. The random stream is
//! ChaCha8 (`rand_chacha::ChaCha8Rng`) seeded with
//! `SeedableRng::seed_from_u64(seed)`, and every draw is a uniform integer
//! range sample from `rand` 0.8. Both are documented as portable and
//! value-stable, so a seed names the same map on every platform.
//!
//! Breakpoints are drawn from the grid `{i / B}` where `B` is the
//! denominator bound. Composition and conjugation of generated maps
//! will of course leave this grid.

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::plmap::{Breakpoint, PlMap};
use crate::rational::{int, ratio};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GenConfig {
    pub seed: u64,
    /// Upper bound on the number of nodes of the result.
    pub max_nodes: usize,
    /// Breakpoint coordinates are multiples of `1 / denominator_bound`.
    pub denominator_bound: u64,
}

impl GenConfig {
    pub fn new(seed: u64, max_nodes: usize, denominator_bound: u64) -> Self {
        GenConfig {
            seed,
            max_nodes,
            denominator_bound,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.denominator_bound < 2 {
            return Err(Error::InvalidConfig(format!(
                "denominator bound must be at least 2, got {}",
                self.denominator_bound
            )));
        }
        if self.denominator_bound > i64::MAX as u64 {
            return Err(Error::InvalidConfig("denominator bound too large".into()));
        }
        Ok(())
    }

    fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}

/// `k` distinct sorted integers from `lo..=hi`.
fn sorted_sample(rng: &mut ChaCha8Rng, lo: u64, hi: u64, k: usize) -> Vec<u64> {
    let span = (hi - lo + 1) as usize;
    let mut v: Vec<u64> = index::sample(rng, span, k)
        .into_iter()
        .map(|i| lo + i as u64)
        .collect();
    v.sort_unstable();
    v
}

fn grid_map(xs: &[u64], ys: &[u64], denom: u64) -> PlMap {
    let d = denom as i64;
    let mut pts = Vec::with_capacity(xs.len() + 2);
    pts.push(Breakpoint::new(int(0), int(0)));
    for (&x, &y) in xs.iter().zip(ys) {
        pts.push(Breakpoint::new(ratio(x as i64, d), ratio(y as i64, d)));
    }
    pts.push(Breakpoint::new(int(1), int(1)));
    PlMap::from_valid(pts)
}

/// A random element of PLF⁺([0,1]) with at most `max_nodes` nodes.
///
/// `max_nodes = 0` (or a bound too coarse to fit any interior point) yields
/// the identity.
pub fn random_homeomorphism(cfg: &GenConfig) -> Result<PlMap> {
    cfg.validate()?;
    let mut rng = cfg.rng();
    let b = cfg.denominator_bound;
    let cap = cfg.max_nodes.min((b - 1) as usize);
    let k = rng.gen_range(0..=cap);
    if k == 0 {
        return Ok(PlMap::identity());
    }
    let xs = sorted_sample(&mut rng, 1, b - 1, k);
    let ys = sorted_sample(&mut rng, 1, b - 1, k);
    Ok(grid_map(&xs, &ys, b))
}

const REJECTION_ROUNDS: usize = 32;

/// A random map strictly above the diagonal on `(0,1)` with between one and
/// `max_nodes` nodes.
///
/// Interior grid points `(X_i, Y_i)` need `X_i < Y_i`, so the bound must be
/// at least 3. The `Y`s are first drawn as an unconstrained sorted sample and
/// accepted if they dominate the `X`s; after a fixed number of rejections a
/// greedy draw that always succeeds is used instead.
pub fn random_element_of_f(cfg: &GenConfig) -> Result<PlMap> {
    cfg.validate()?;
    if cfg.max_nodes == 0 {
        return Err(Error::InvalidConfig("max_nodes must be at least 1".into()));
    }
    let b = cfg.denominator_bound;
    if b < 3 {
        return Err(Error::InvalidConfig(
            "denominator bound must be at least 3 to fit a point above the diagonal".into(),
        ));
    }
    let mut rng = cfg.rng();
    let cap = cfg.max_nodes.min((b - 2) as usize);
    let k = rng.gen_range(1..=cap);
    let xs = sorted_sample(&mut rng, 1, b - 2, k);

    for _ in 0..REJECTION_ROUNDS {
        let ys = sorted_sample(&mut rng, 2, b - 1, k);
        if xs.iter().zip(&ys).all(|(x, y)| y > x) {
            return Ok(grid_map(&xs, &ys, b));
        }
    }

    // Y_i in (max(X_i, Y_{i-1}), B - 1 - (k - 1 - i)] always leaves room for
    // the remaining points since X_i <= B - 2 - (k - 1 - i).
    let mut ys = Vec::with_capacity(k);
    let mut prev = 0u64;
    for (i, &x) in xs.iter().enumerate() {
        let lo = x.max(prev) + 1;
        let hi = b - 1 - (k - 1 - i) as u64;
        let y = rng.gen_range(lo..=hi);
        ys.push(y);
        prev = y;
    }
    Ok(grid_map(&xs, &ys, b))
}
