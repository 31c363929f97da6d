//! Acceptance criteria. Every check is exact: all arithmetic is rational, so
//! the tolerance throughout is zero.
//!
//! Run with `cargo test -p plconj --test acceptance -- --nocapture` to see
//! one PASS/FAIL line per criterion.

use std::time::{Duration, Instant};

use plconj::conjugacy::{
    corner_from_profile, corner_from_word, corner_reduce, decide_conjugacy, is_corner,
    verify_conjugacy, ConjugacyOutcome, Mismatch,
};
use plconj::generate::{random_element_of_f, random_homeomorphism, GenConfig};
use plconj::interface::{canonical_key, classify, parse_map, serialize_map};
use plconj::invariants::{alpha, beta_profile, f_star, node_profile, profile_from_base, BetaProfile};
use plconj::rational::{int, ratio};
use plconj::{PlMap, Rational};

const MAX_NODES: usize = 8;
const DENOMINATOR_BOUND: u64 = 32;
const ROUND_TRIP_BUDGET: Duration = Duration::from_secs(60);

type Outcome = Result<String, String>;

fn element(seed: u64) -> PlMap {
    random_element_of_f(&GenConfig::new(seed, MAX_NODES, DENOMINATOR_BOUND)).unwrap()
}

fn homeomorphism(seed: u64) -> PlMap {
    random_homeomorphism(&GenConfig::new(seed, MAX_NODES, DENOMINATOR_BOUND)).unwrap()
}

/// Seeds for the two generators are drawn from disjoint ranges per criterion.
fn seed(criterion: u64, i: u64, salt: u64) -> u64 {
    criterion << 40 | salt << 32 | i
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Pointwise oracle on raw breakpoint lists, independent of `PlMap`'s own
/// evaluation and composition.
fn eval_points(points: &[(Rational, Rational)], x: &Rational) -> Rational {
    points
        .windows(2)
        .find(|w| w[0].0 <= *x && *x <= w[1].0)
        .map(|w| &w[0].1 + (&w[1].1 - &w[0].1) * (x - &w[0].0) / (&w[1].0 - &w[0].0))
        .expect("x in [0,1]")
}

fn raw(f: &PlMap) -> Vec<(Rational, Rational)> {
    f.breakpoints().iter().map(|p| (p.x.clone(), p.y.clone())).collect()
}

fn raw_inverse(f: &PlMap) -> Vec<(Rational, Rational)> {
    raw(f).into_iter().map(|(x, y)| (y, x)).collect()
}

/// `w ∘ f ∘ w⁻¹ = g` checked by the oracle at every breakpoint of either
/// side and at a 1/97 grid. Two piecewise linear maps agreeing at all their
/// breakpoints agree everywhere.
fn oracle_conjugates(f: &PlMap, g: &PlMap, w: &PlMap) -> bool {
    let (fr, wr, wi, gr) = (raw(f), raw(w), raw_inverse(w), raw(g));
    let mut xs: Vec<Rational> = (0..=97).map(|i| ratio(i, 97)).collect();
    xs.extend(gr.iter().map(|p| p.0.clone()));
    // breakpoints of w∘f∘w⁻¹ lie among w(z) for z a breakpoint of w or f,
    // and w(f⁻¹(z)) for z a breakpoint of w
    let fi = raw_inverse(f);
    for z in wr.iter().map(|p| &p.0).chain(fr.iter().map(|p| &p.0)) {
        xs.push(eval_points(&wr, z));
    }
    for z in wr.iter().map(|p| &p.0) {
        xs.push(eval_points(&wr, &eval_points(&fi, z)));
    }
    xs.iter().all(|x| {
        let lhs = eval_points(&wr, &eval_points(&fr, &eval_points(&wi, x)));
        lhs == eval_points(&gr, x)
    })
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    for i in 0..500 {
        let f = element(seed(1, i, 0));
        let h = homeomorphism(seed(1, i, 1));
        let g = f.conjugate_by(&h);
        let out = decide_conjugacy(&f, &g).map_err(|e| format!("pair {i}: {e}"))?;
        let w = out.witness().ok_or_else(|| format!("pair {i}: {out:?}"))?;
        check(verify_conjugacy(&f, &g, w), || format!("pair {i}: witness fails"))?;
    }
    let elapsed = start.elapsed();
    check(elapsed < ROUND_TRIP_BUDGET, || format!("took {elapsed:?}"))?;
    Ok(format!("500 pairs conjugate with verified witnesses in {elapsed:.2?}"))
}

fn criterion_2() -> Outcome {
    let mut pairs = 0;
    let mut i = 0;
    while pairs < 200 {
        let f = element(seed(2, i, 0));
        let g = element(seed(2, i, 1));
        i += 1;
        let (kf, kg) = (canonical_key(&f).unwrap(), canonical_key(&g).unwrap());
        if kf == kg {
            continue;
        }
        pairs += 1;
        let out = decide_conjugacy(&f, &g).map_err(|e| e.to_string())?;
        let (af, ag) = (alpha(&f).unwrap(), alpha(&g).unwrap());
        let consistent = match &out {
            ConjugacyOutcome::NotConjugate(Mismatch::Alpha { f: a, g: b }) => {
                af != ag && *a == af && *b == ag
            }
            ConjugacyOutcome::NotConjugate(Mismatch::Beta { f: p, g: q }) => {
                af == ag && *p == beta_profile(&f).unwrap() && *q == beta_profile(&g).unwrap()
            }
            ConjugacyOutcome::Conjugate { .. } => false,
        };
        check(consistent, || format!("pair {i}: {out:?}"))?;
    }

    // mutate one marked value of a corner profile and rebuild
    let factors = [ratio(1, 2), ratio(2, 3), ratio(3, 4), ratio(5, 4), ratio(3, 2)];
    let (mut mutants, mut corners) = (0, 0);
    for i in 0..100 {
        let (c, _) = corner_reduce(&element(seed(2, i, 2))).unwrap();
        let p = beta_profile(&c).unwrap();
        let j = (i as usize) % p.marked().len();
        let mut realized = false;
        for t in &factors {
            let mut word = p.marked().to_vec();
            word[j].value = &word[j].value * t;
            let Ok(mutant) = corner_from_word(p.alpha(), &word) else {
                continue;
            };
            realized = true;
            mutants += 1;
            let out = decide_conjugacy(&mutant, &c).map_err(|e| e.to_string())?;
            check(!out.is_conjugate(), || format!("mutant of corner {i} by {t} is conjugate"))?;
        }
        corners += usize::from(realized);
    }
    check(corners == 100, || format!("only {corners}/100 corners had a realizable mutation"))?;
    Ok(format!("200 non-conjugate pairs with consistent reasons; {mutants} mutants all non-conjugate"))
}

fn criterion_3() -> Outcome {
    for i in 0..500 {
        let f = element(seed(3, i, 0));
        let h = homeomorphism(seed(3, i, 1));
        let g = f.conjugate_by(&h);
        check(alpha(&g) == alpha(&f), || format!("conjugation {i}: alpha changed"))?;
        check(beta_profile(&g) == beta_profile(&f), || format!("conjugation {i}: beta changed"))?;
    }
    Ok("alpha and beta unchanged over 500 conjugations".into())
}

fn criterion_4() -> Outcome {
    let mut points = 0;
    for i in 0..200 {
        let f = homeomorphism(seed(4, i, 0));
        let g = homeomorphism(seed(4, i, 1));
        let fg = f.compose(&g);
        for p in fg.interior() {
            let lhs = f_star(&fg, &p.x).unwrap();
            let rhs = f_star(&f, &g.evaluate(&p.x).unwrap()).unwrap() * f_star(&g, &p.x).unwrap();
            check(lhs == rhs, || format!("pair {i} at {}", p.x))?;
            points += 1;
        }
    }
    Ok(format!("chain rule exact at {points} breakpoints over 200 pairs"))
}

fn criterion_5() -> Outcome {
    for i in 0..100 {
        let f = element(seed(5, i, 0));
        let x_f = node_profile(&f).first().unwrap().z.clone();
        let expected = beta_profile(&f).unwrap();
        // ten base points t·x_f: t = 1 plus nine scattered fractions in (0,1)
        let ts: Vec<Rational> = std::iter::once(int(1))
            .chain((1..10).map(|k| ratio((i as i64 * 37 + k * 53) % 211 + 1, 213)))
            .collect();
        for t in &ts {
            let a = &x_f * t;
            check(profile_from_base(&f, &a).as_ref() == Ok(&expected), || {
                format!("map {i}, base {a}")
            })?;
        }
    }
    Ok("profile independent of base point for 100 maps x 10 bases".into())
}

fn criterion_6() -> Outcome {
    let mut already = 0;
    for i in 0..500 {
        let f = element(seed(6, i, 0));
        let (c, w) = corner_reduce(&f).map_err(|e| format!("map {i}: {e}"))?;
        check(is_corner(&c).unwrap(), || format!("map {i}: not corner"))?;
        check(verify_conjugacy(&f, &c, &w), || format!("map {i}: witness fails"))?;
        if is_corner(&f).unwrap() {
            already += 1;
            check(c == f && w == PlMap::identity(), || format!("map {i}: corner input changed"))?;
        }
    }
    Ok(format!("500 maps reduced ({already} were already corner)"))
}

fn criterion_7() -> Outcome {
    for i in 0..200 {
        let (c, _) = corner_reduce(&element(seed(7, i, 0))).unwrap();
        let p = beta_profile(&c).unwrap();
        let rebuilt = corner_from_profile(&p).map_err(|e| format!("corner {i}: {e}"))?;
        check(beta_profile(&rebuilt).as_ref() == Ok(&p), || format!("corner {i}: profile differs"))?;
        check(is_corner(&rebuilt).unwrap(), || format!("corner {i}: rebuilt not corner"))?;
        let out = decide_conjugacy(&rebuilt, &c).map_err(|e| e.to_string())?;
        let ok = out.witness().is_some_and(|w| verify_conjugacy(&rebuilt, &c, w));
        check(ok, || format!("corner {i}: {out:?}"))?;
    }
    Ok("200 corner functions rebuilt from their profiles".into())
}

fn criterion_8() -> Outcome {
    for i in 0..500 {
        let f = element(seed(8, i, 0));
        let p: BetaProfile = beta_profile(&f).unwrap();
        let ends = f.last_slope() / f.first_slope();
        check(p.gap_product() == alpha(&f).unwrap(), || format!("map {i}: gaps"))?;
        check(p.value_product() == ends && ends < int(1), || format!("map {i}: values"))?;
    }
    Ok("gap and value products exact for 500 maps".into())
}

fn map(points: &[(i64, i64, i64, i64)]) -> PlMap {
    PlMap::normalize(points.iter().map(|&(a, b, c, d)| (ratio(a, b), ratio(c, d)))).unwrap()
}

fn criterion_9() -> Outcome {
    let f1 = map(&[(0, 1, 0, 1), (1, 4, 1, 2), (1, 1, 1, 1)]);
    let f3 = map(&[(0, 1, 0, 1), (1, 4, 1, 2), (3, 8, 5, 8), (1, 1, 1, 1)]);
    let g3 = map(&[(0, 1, 0, 1), (1, 4, 1, 2), (1, 3, 3, 5), (1, 1, 1, 1)]);
    let f4 = map(&[(0, 1, 0, 1), (1, 4, 1, 2), (1, 2, 5, 8), (1, 1, 1, 1)]);
    let g4 = map(&[(0, 1, 0, 1), (1, 5, 2, 5), (1, 1, 1, 1)]);
    let h4 = map(&[(0, 1, 0, 1), (1, 2, 2, 5), (1, 1, 1, 1)]);

    // re-derive the fixtures with the pointwise oracle first
    check(oracle_conjugates(&f4, &g4, &h4), || "oracle: H4 F4 H4^-1 != G4".into())?;
    let h3 = map(&[(0, 1, 0, 1), (3, 8, 1, 2), (1, 1, 1, 1)]);
    check(oracle_conjugates(&f3, &g3, &h3), || "oracle: F3 and G3 not conjugate by h".into())?;

    check(corner_reduce(&f4) == Ok((g4.clone(), h4.clone())), || "F4 reduction".into())?;
    let out = decide_conjugacy(&f3, &g3).map_err(|e| e.to_string())?;
    let w = out.witness().ok_or("F3, G3 not conjugate")?;
    check(verify_conjugacy(&f3, &g3, w) && oracle_conjugates(&f3, &g3, w), || "F3/G3 witness".into())?;
    match decide_conjugacy(&f1, &f4).map_err(|e| e.to_string())? {
        ConjugacyOutcome::NotConjugate(Mismatch::Beta { f, g }) => {
            check(f.marked()[0].value == ratio(1, 3) && g.marked()[0].value == ratio(3, 8), || {
                "F1/F4 beta values".into()
            })?
        }
        other => return Err(format!("F1/F4: {other:?}")),
    }
    let expected = ConjugacyOutcome::NotConjugate(Mismatch::Alpha { f: int(2), g: int(4) });
    check(decide_conjugacy(&f1, &f1.pow(2)) == Ok(expected), || "F1/F1^2 alpha".into())?;
    Ok("fixtures verified by oracle and decision procedure".into())
}

fn criterion_10() -> Outcome {
    let identity = PlMap::identity();
    for i in 0..200 {
        let f = homeomorphism(seed(10, i, 0));
        let g = homeomorphism(seed(10, i, 1));
        let k = homeomorphism(seed(10, i, 2));
        check(f.compose(&f.inverse()) == identity && f.inverse().compose(&f) == identity, || {
            format!("triple {i}: inverse")
        })?;
        check(f.compose(&g.compose(&k)) == f.compose(&g).compose(&k), || {
            format!("triple {i}: associativity")
        })?;
        let composite = f.compose(&g).conjugate_by(&k);
        for m in [&f, &composite] {
            let text = serialize_map(m);
            let back = parse_map(text.as_bytes()).map_err(|e| e.to_string())?;
            check(back == *m && serialize_map(&back) == text, || format!("triple {i}: serialization"))?;
        }
    }

    // 10 base maps, each with 4 random conjugates
    let mut corpus = Vec::new();
    for b in 0..10 {
        let f = random_element_of_f(&GenConfig::new(seed(10, b, 3), 4, 12)).unwrap();
        corpus.push(f.clone());
        for c in 0..4 {
            let h = random_homeomorphism(&GenConfig::new(seed(10, b * 4 + c, 4), 4, 12)).unwrap();
            corpus.push(f.conjugate_by(&h));
        }
    }
    let classes = classify(&corpus).map_err(|e| e.to_string())?;
    let mut decisions = 0;
    for i in 0..corpus.len() {
        for j in i + 1..corpus.len() {
            let out = decide_conjugacy(&corpus[i], &corpus[j]).map_err(|e| e.to_string())?;
            check(out.is_conjugate() == (classes[i] == classes[j]), || {
                format!("corpus maps {i} and {j}")
            })?;
            if let Some(w) = out.witness() {
                check(verify_conjugacy(&corpus[i], &corpus[j], w), || format!("witness {i}->{j}"))?;
            }
            decisions += 1;
        }
    }
    let distinct = classes.iter().max().map_or(0, |m| m + 1);
    Ok(format!(
        "group laws and serialization on 200 triples; {distinct} classes over 50 maps agree with {decisions} decisions"
    ))
}

// Runs without the libtest harness so the report is never captured.
fn main() -> std::process::ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("1 witnessed round trip", criterion_1),
        ("2 discrimination", criterion_2),
        ("3 invariance under conjugation", criterion_3),
        ("4 chain rule", criterion_4),
        ("5 base point independence", criterion_5),
        ("6 corner reduction", criterion_6),
        ("7 uniqueness round trip", criterion_7),
        ("8 profile structure", criterion_8),
        ("9 fixture suite", criterion_9),
        ("10 group axioms and serialization", criterion_10),
    ];
    let results: Vec<(&str, Outcome)> = std::thread::scope(|s| {
        let handles: Vec<_> = criteria
            .iter()
            .map(|&(name, run)| (name, s.spawn(run)))
            .collect();
        handles
            .into_iter()
            .map(|(name, h)| {
                let outcome = h.join().unwrap_or_else(|_| Err("panicked".into()));
                (name, outcome)
            })
            .collect()
    });
    let mut failed = 0;
    for (name, outcome) in &results {
        match outcome {
            Ok(detail) => println!("PASS  criterion {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  criterion {name}: {detail}");
            }
        }
    }
    if failed == 0 {
        println!("all {} criteria passed", results.len());
        std::process::ExitCode::SUCCESS
    } else {
        println!("{failed} acceptance criteria failed");
        std::process::ExitCode::FAILURE
    }
}
