//! Exact piecewise linear homeomorphisms of `[0,1]` and a conjugacy decision
//! procedure for maps lying strictly above the diagonal.
//!
//! The crate works entirely in exact rational arithmetic. Its pieces:
//!
//! - [`plmap`]: the [`PlMap`] type, composition, inversion, iterates.
//! - [`invariants`]: nodes, the slope ratio `f*`, and the invariants α and β.
//! - [`conjugacy`]: elementary conjugations, corner functions, and
//!   [`decide_conjugacy`](conjugacy::decide_conjugacy), which returns either
//!   an explicit conjugator or the invariant that differs.
//! - [`generate`]: seeded random maps.
//! - [`interface`]: JSON map documents, invariant reports, canonical keys,
//!   plot samples.
//!
//! ```
//! use plconj::{interface::parse_map, invariants::{alpha, beta_profile}};
//! use plconj::rational::int;
//!
//! let f = parse_map(br#"{"breakpoints":[["0","0"],["1/4","1/2"],["1","1"]]}"#)?;
//! assert!(f.is_in_f());
//! assert_eq!(alpha(&f)?, int(2));
//! assert_eq!(beta_profile(&f)?.marked().len(), 1);
//! # Ok::<(), plconj::Error>(())
//! ```

pub mod conjugacy;
pub mod cyclic;
mod error;
pub mod generate;
pub mod interface;
pub mod invariants;
pub mod plmap;
pub mod rational;

pub use error::{Error, Result};
pub use plmap::{Breakpoint, PlMap};
pub use rational::Rational;

// The guide under book/ is compiled and run as doctests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/maps.md")]
    mod maps {}
    #[doc = include_str!("../../../book/src/invariants.md")]
    mod invariants {}
    #[doc = include_str!("../../../book/src/corner.md")]
    mod corner {}
    #[doc = include_str!("../../../book/src/deciding.md")]
    mod deciding {}
    #[doc = include_str!("../../../book/src/formats.md")]
    mod formats {}
}
