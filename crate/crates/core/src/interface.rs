//! Text formats: map documents, invariant reports, canonical keys and plot
//! samples.
//!
//! A map document is JSON with every rational written as a string:
//!
//! ```text
//! {"breakpoints":[["0","0"],["1/4","1/2"],["1","1"]]}
//! ```
//!
//! Input may use unreduced fractions and arbitrary whitespace. Output is
//! always lowest terms, fixed field order and no whitespace, so equal maps
//! serialize to identical bytes.

use serde::{Deserialize, Serialize};

use crate::conjugacy::Mismatch;
use crate::error::{Error, Result};
use crate::invariants::{beta_profile, node_profile, BetaProfile};
use crate::plmap::{Breakpoint, PlMap};
use crate::rational::{parse_rational, Rational};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MapDocument {
    breakpoints: Vec<[String; 2]>,
}

/// Parses and validates a map document.
pub fn parse_map(text: &[u8]) -> Result<PlMap> {
    let doc: MapDocument = serde_json::from_slice(text).map_err(|e| Error::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let at = |index: usize| move |source: Error| Error::AtBreakpoint {
        index,
        source: Box::new(source),
    };
    let mut points = Vec::with_capacity(doc.breakpoints.len());
    for (index, [x, y]) in doc.breakpoints.iter().enumerate() {
        let x = parse_rational(x).map_err(at(index))?;
        let y = parse_rational(y).map_err(at(index))?;
        points.push(Breakpoint::new(x, y));
    }
    for (i, w) in points.windows(2).enumerate() {
        if w[0].x == w[1].x {
            return Err(Error::DuplicateX {
                index: i + 1,
                x: w[1].x.clone(),
            });
        }
        if w[0].x > w[1].x {
            return Err(Error::XNotIncreasing { index: i + 1 });
        }
    }
    PlMap::normalize(points)
}

/// Canonical map document; `parse_map` inverts it.
pub fn serialize_map(f: &PlMap) -> String {
    let doc = MapDocument {
        breakpoints: f
            .breakpoints()
            .iter()
            .map(|p| [p.x.to_string(), p.y.to_string()])
            .collect(),
    };
    serde_json::to_string(&doc).expect("string-only document serializes")
}

#[derive(Serialize)]
struct MarkedReport {
    value: String,
    gap: String,
}

#[derive(Serialize)]
struct BetaReport {
    marked: Vec<MarkedReport>,
}

#[derive(Serialize)]
struct InvariantReport {
    alpha: String,
    beta: BetaReport,
}

/// The report `{"alpha":..,"beta":{"marked":[{"value":..,"gap":..},..]}}`
/// with the marked word in canonical rotation.
pub fn profile_report(profile: &BetaProfile) -> String {
    let report = InvariantReport {
        alpha: profile.alpha().to_string(),
        beta: BetaReport {
            marked: profile
                .marked()
                .iter()
                .map(|m| MarkedReport {
                    value: m.value.to_string(),
                    gap: m.gap.to_string(),
                })
                .collect(),
        },
    };
    serde_json::to_string(&report).expect("string-only report serializes")
}

/// [`profile_report`] of `beta_profile(f)`.
pub fn invariant_report(f: &PlMap) -> Result<String> {
    Ok(profile_report(&beta_profile(f)?))
}

#[derive(Serialize)]
struct NodeReport {
    z: String,
    star: String,
}

#[derive(Serialize)]
struct NodesReport {
    nodes: Vec<NodeReport>,
}

/// `{"nodes":[{"z":..,"star":..},..]}` in increasing order of `z`.
pub fn nodes_report(f: &PlMap) -> String {
    let nodes = node_profile(f)
        .entries
        .into_iter()
        .map(|n| NodeReport {
            z: n.z.to_string(),
            star: n.star.to_string(),
        })
        .collect();
    serde_json::to_string(&NodesReport { nodes }).expect("string-only report serializes")
}

/// Text fingerprint of (α, β). Two members of F have equal keys exactly
/// when they are conjugate. The text is the invariant report.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey(String);

impl CanonicalKey {
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl std::fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

pub fn canonical_key(f: &PlMap) -> Result<CanonicalKey> {
    invariant_report(f).map(CanonicalKey)
}

/// Class index of each map, numbering classes by first appearance. Maps
/// share an index exactly when they share a canonical key.
pub fn classify(maps: &[PlMap]) -> Result<Vec<usize>> {
    let mut seen: Vec<CanonicalKey> = Vec::new();
    maps.iter()
        .map(|f| {
            let key = canonical_key(f)?;
            Ok(match seen.iter().position(|k| *k == key) {
                Some(i) => i,
                None => {
                    seen.push(key);
                    seen.len() - 1
                }
            })
        })
        .collect()
}

/// The grid points `(i/n, f(i/n))` merged with the breakpoints of `f`,
/// sorted by `x`.
pub fn plot_samples(f: &PlMap, n: u64) -> Result<Vec<(Rational, Rational)>> {
    if n == 0 {
        return Err(Error::InvalidConfig("sample count must be at least 1".into()));
    }
    let n_i = i64::try_from(n).map_err(|_| Error::InvalidConfig("sample count too large".into()))?;
    let mut xs: Vec<Rational> = (0..=n_i).map(|i| crate::rational::ratio(i, n_i)).collect();
    xs.extend(f.breakpoints().iter().map(|p| p.x.clone()));
    xs.sort();
    xs.dedup();
    Ok(xs
        .into_iter()
        .map(|x| {
            let y = f.eval(&x);
            (x, y)
        })
        .collect())
}

/// CSV with header `x,y`, one exact sample per line.
pub fn samples_csv(samples: &[(Rational, Rational)]) -> String {
    let mut out = String::from("x,y\n");
    for (x, y) in samples {
        out.push_str(&format!("{x},{y}\n"));
    }
    out
}

/// One-line human readable description of a mismatch.
pub fn describe_mismatch(m: &Mismatch) -> String {
    match m {
        Mismatch::Alpha { f, g } => format!("alpha mismatch ({f} vs {g})"),
        Mismatch::Beta { f, g } => format!(
            "beta mismatch ({} vs {})",
            profile_report(f),
            profile_report(g)
        ),
    }
}
