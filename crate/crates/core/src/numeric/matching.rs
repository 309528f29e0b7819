use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::scalar::C64;

/// Global greedy pairing: repeatedly take the closest still-unused pair.
fn greedy_pairs(a: &[C64], b: &[C64]) -> Vec<(usize, usize, f64)> {
    let mut cand: Vec<(f64, usize, usize)> = Vec::with_capacity(a.len() * b.len());
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            cand.push(((x - y).norm(), i, j));
        }
    }
    cand.sort_by(|p, q| p.0.total_cmp(&q.0).then(p.1.cmp(&q.1)).then(p.2.cmp(&q.2)));
    let mut used_a = vec![false; a.len()];
    let mut used_b = vec![false; b.len()];
    let mut out = Vec::with_capacity(a.len());
    for (d, i, j) in cand {
        if !used_a[i] && !used_b[j] {
            used_a[i] = true;
            used_b[j] = true;
            out.push((i, j, d));
        }
    }
    out
}

/// Largest distance of a greedy minimal-distance bijection between two
/// multisets, divided by `max(1, max |b|)`.
pub fn multiset_match(a: &[C64], b: &[C64]) -> Result<f64> {
    if a.len() != b.len() {
        return Err(Error::CardinalityMismatch { left: a.len(), right: b.len() });
    }
    let scale = b.iter().map(|z| z.norm()).fold(1.0, f64::max);
    let worst = greedy_pairs(a, b).into_iter().map(|(_, _, d)| d).fold(0.0, f64::max);
    Ok(worst / scale)
}

/// Reorders `next` so that entry `n` is the one paired with `prev[n]`.
pub fn match_by_continuity(prev: &[C64], next: &[C64]) -> Result<Vec<C64>> {
    if prev.len() != next.len() {
        return Err(Error::CardinalityMismatch { left: prev.len(), right: next.len() });
    }
    let mut out = vec![C64::new(0.0, 0.0); prev.len()];
    for (i, j, _) in greedy_pairs(prev, next) {
        out[i] = next[j];
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::re;

    #[test]
    fn spec_examples() {
        assert_eq!(multiset_match(&[re(1.0), re(2.0)], &[re(2.0), re(1.0)]).unwrap(), 0.0);
        let d = multiset_match(&[re(1.0)], &[re(1.0 + 1e-9)]).unwrap();
        assert!((d - 1e-9).abs() < 1e-15);
        let d = multiset_match(&[re(0.0), re(10.0)], &[re(0.1), re(10.0)]).unwrap();
        assert!((d - 0.01).abs() < 1e-15);
        assert!(matches!(multiset_match(&[re(1.0)], &[]), Err(Error::CardinalityMismatch { left: 1, right: 0 })));
    }

    #[test]
    fn continuity_follows_labels() {
        let prev = [re(0.0), re(1.0), re(5.0)];
        let next = [re(5.1), re(-0.1), re(1.05)];
        assert_eq!(match_by_continuity(&prev, &next).unwrap(), [re(-0.1), re(1.05), re(5.1)]);
    }
}
