//! Lexicographically least rotation of a cyclic sequence.

use std::cmp::Ordering;

/// Start index of the lexicographically least rotation of `s` (Booth's
/// algorithm, linear time). When several rotations tie, which happens for
/// periodic sequences, the smallest such index is returned.
pub fn least_rotation<T: Ord>(s: &[T]) -> usize {
    let n = s.len();
    if n == 0 {
        return 0;
    }
    // failure function over the doubled sequence
    let mut fail: Vec<isize> = vec![-1; 2 * n];
    let mut k: usize = 0;
    for j in 1..2 * n {
        let sj = &s[j % n];
        let mut i = fail[j - k - 1];
        while i != -1 && *sj != s[(k + i as usize + 1) % n] {
            if *sj < s[(k + i as usize + 1) % n] {
                k = j - i as usize - 1;
            }
            i = fail[i as usize];
        }
        // after the loop either i == -1 or the elements match
        if *sj != s[(k as isize + i + 1) as usize % n] {
            if *sj < s[k % n] {
                k = j;
            }
            fail[j - k] = -1;
        } else {
            fail[j - k] = i + 1;
        }
    }
    k % n
}

/// Rotates `s` so that it starts at its least rotation.
pub fn canonical_rotation<T: Ord + Clone>(s: &[T]) -> Vec<T> {
    let k = least_rotation(s);
    s[k..].iter().chain(&s[..k]).cloned().collect()
}

/// Every `k` such that rotating `from` left by `k` yields `to`.
pub fn rotation_offsets<T: PartialEq>(from: &[T], to: &[T]) -> Vec<usize> {
    if from.len() != to.len() {
        return Vec::new();
    }
    let n = from.len();
    (0..n.max(1))
        .filter(|&k| (0..n).all(|i| from[(i + k) % n] == to[i]))
        .collect()
}

/// Lexicographic comparison of two rotations of `s`.
fn compare_rotations<T: Ord>(s: &[T], a: usize, b: usize) -> Ordering {
    let n = s.len();
    (0..n)
        .map(|i| s[(a + i) % n].cmp(&s[(b + i) % n]))
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal)
}

/// Quadratic reference used to cross-check [`least_rotation`].
pub fn least_rotation_naive<T: Ord>(s: &[T]) -> usize {
    (0..s.len())
        .min_by(|&a, &b| compare_rotations(s, a, b).then(a.cmp(&b)))
        .unwrap_or(0)
}
