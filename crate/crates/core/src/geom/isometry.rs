//! Isometric-copy detection and enumeration.
//!
//! Matching is backtracking over partial bijections: source points are
//! assigned in order, and a candidate target must reproduce every distance
//! key to the already-assigned points. Copies are deduplicated by image set;
//! two bijections onto the same image differ by a self-congruence of the
//! pattern and count as one copy.

use std::collections::BTreeSet;

use crate::error::Error;
use crate::scalar::Scalar;

use super::{distance_key, Norm, PointConfig};

/// A distance-preserving bijection from pattern points onto target points,
/// stored as target indices per source index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsometryWitness {
    map: Vec<usize>,
}

impl IsometryWitness {
    pub fn map(&self) -> &[usize] {
        &self.map
    }

    /// The image as a sorted set of target indices.
    pub fn image(&self) -> Vec<usize> {
        let mut img = self.map.clone();
        img.sort_unstable();
        img
    }

    pub fn label_pairs<'a, S: Scalar>(
        &self,
        pattern: &'a PointConfig<S>,
        target: &'a PointConfig<S>,
    ) -> Vec<(&'a str, &'a str)> {
        self.map
            .iter()
            .enumerate()
            .map(|(src, &tgt)| (pattern.label(src), target.label(tgt)))
            .collect()
    }

    /// Recheck every pair of distances under `norm`. This is the witness
    /// invariant and the revalidation used by the verify path.
    pub fn verify<S: Scalar>(
        &self,
        pattern: &PointConfig<S>,
        target: &PointConfig<S>,
        norm: Norm,
    ) -> Result<bool, Error> {
        if self.map.len() != pattern.len() {
            return Ok(false);
        }
        let mut seen = BTreeSet::new();
        for &t in &self.map {
            if t >= target.len() || !seen.insert(t) {
                return Ok(false);
            }
        }
        for i in 0..pattern.len() {
            for j in (i + 1)..pattern.len() {
                let dp = distance_key(pattern.point(i), pattern.point(j), norm)?;
                let dt = distance_key(target.point(self.map[i]), target.point(self.map[j]), norm)?;
                if !S::key_eq(&dp, &dt) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Is `target` an isometric copy of `pattern` (same cardinality) under `norm`?
/// Returns the first witness in assignment order, or `None`.
pub fn is_isometric_copy<S: Scalar>(
    pattern: &PointConfig<S>,
    target: &PointConfig<S>,
    norm: Norm,
) -> Option<IsometryWitness> {
    if pattern.len() != target.len() {
        return None;
    }
    let mut out = Vec::new();
    search(pattern, target, norm, true, &mut out);
    out.into_iter().next()
}

/// Every copy of `pattern` inside `target`, one witness per image set,
/// ordered lexicographically by sorted target index tuple.
pub fn enumerate_copies<S: Scalar>(
    pattern: &PointConfig<S>,
    target: &PointConfig<S>,
    norm: Norm,
) -> Vec<IsometryWitness> {
    if pattern.len() > target.len() {
        return Vec::new();
    }
    let mut all = Vec::new();
    search(pattern, target, norm, false, &mut all);
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut out: Vec<(Vec<usize>, IsometryWitness)> = Vec::new();
    for w in all {
        let img = w.image();
        if seen.insert(img.clone()) {
            out.push((img, w));
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out.into_iter().map(|(_, w)| w).collect()
}

fn search<S: Scalar>(
    pattern: &PointConfig<S>,
    target: &PointConfig<S>,
    norm: Norm,
    stop_at_first: bool,
    out: &mut Vec<IsometryWitness>,
) {
    let n = pattern.len();
    if n == 0 {
        out.push(IsometryWitness { map: Vec::new() });
        return;
    }
    // Pattern distance keys, computed once.
    let mut pkeys = vec![Vec::new(); n];
    for i in 1..n {
        for j in 0..i {
            let k = distance_key(pattern.point(i), pattern.point(j), norm)
                .expect("pattern dims consistent");
            pkeys[i].push(k);
        }
    }
    let mut assigned: Vec<usize> = Vec::with_capacity(n);
    let mut used = vec![false; target.len()];
    backtrack(pattern, target, norm, &pkeys, &mut assigned, &mut used, stop_at_first, out);
}

#[allow(clippy::too_many_arguments)]
fn backtrack<S: Scalar>(
    pattern: &PointConfig<S>,
    target: &PointConfig<S>,
    norm: Norm,
    pkeys: &[Vec<S>],
    assigned: &mut Vec<usize>,
    used: &mut [bool],
    stop_at_first: bool,
    out: &mut Vec<IsometryWitness>,
) -> bool {
    let depth = assigned.len();
    if depth == pattern.len() {
        out.push(IsometryWitness { map: assigned.clone() });
        return stop_at_first;
    }
    'candidates: for t in 0..target.len() {
        if used[t] {
            continue;
        }
        for (j, &prev) in assigned.iter().enumerate() {
            let dt = distance_key(target.point(t), target.point(prev), norm)
                .expect("target dims consistent");
            if !S::key_eq(&dt, &pkeys[depth][j]) {
                continue 'candidates;
            }
        }
        assigned.push(t);
        used[t] = true;
        let done = backtrack(pattern, target, norm, pkeys, assigned, used, stop_at_first, out);
        used[t] = false;
        assigned.pop();
        if done {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Point;
    use crate::{parse_rat, Rat};

    fn config(norm: Norm, pts: &[&[&str]]) -> PointConfig<Rat> {
        let dim = pts[0].len();
        let points = pts
            .iter()
            .map(|c| Point::new(c.iter().map(|v| parse_rat(v).unwrap()).collect()))
            .collect();
        PointConfig::from_points(dim, norm, points).unwrap()
    }

    #[test]
    fn rotated_segment_matches() {
        let a = config(Norm::Euclidean, &[&["0", "0"], &["1", "0"]]);
        let b = config(Norm::Euclidean, &[&["0", "0"], &["0", "1"]]);
        let w = is_isometric_copy(&a, &b, Norm::Euclidean).unwrap();
        assert!(w.verify(&a, &b, Norm::Euclidean).unwrap());
    }

    #[test]
    fn stretched_segment_does_not() {
        let a = config(Norm::Euclidean, &[&["0", "0"], &["1", "0"]]);
        let b = config(Norm::Euclidean, &[&["0", "0"], &["2", "0"]]);
        assert!(is_isometric_copy(&a, &b, Norm::Euclidean).is_none());
    }

    #[test]
    fn linf_copy_across_dimensions() {
        // 1D pattern {0,16,20,26} against a 2D ℓ∞ placement: all six pairwise
        // distances 16, 20, 26, 4, 10, 6 are reproduced.
        let a = config(Norm::Maximum, &[&["0"], &["16"], &["20"], &["26"]]);
        let b = config(
            Norm::Maximum,
            &[&["0", "0"], &["16", "4"], &["20", "0"], &["26", "4"]],
        );
        let expect = ["16", "20", "26", "4", "10", "6"].map(|v| parse_rat(v).unwrap());
        let mut got = Vec::new();
        for i in 0..4 {
            for j in (i + 1)..4 {
                got.push(b.distance_key(i, j).unwrap());
            }
        }
        assert_eq!(got, expect.to_vec());
        let w = is_isometric_copy(&a, &b, Norm::Maximum).unwrap();
        assert!(w.verify(&a, &b, Norm::Maximum).unwrap());
    }

    #[test]
    fn unit_segment_in_grid_has_four_copies() {
        let seg = config(Norm::Euclidean, &[&["0"], &["1"]]);
        let grid = config(
            Norm::Euclidean,
            &[&["0", "0"], &["0", "1"], &["1", "0"], &["1", "1"]],
        );
        let copies = enumerate_copies(&seg, &grid, Norm::Euclidean);
        assert_eq!(copies.len(), 4);
        for w in &copies {
            assert!(w.verify(&seg, &grid, Norm::Euclidean).unwrap());
        }
    }

    #[test]
    fn collinear_linf_single_copy() {
        let a = config(Norm::Maximum, &[&["0"], &["1"], &["2"]]);
        let s = config(Norm::Maximum, &[&["0"], &["1"], &["2"]]);
        let copies = enumerate_copies(&a, &s, Norm::Maximum);
        assert_eq!(copies.len(), 1);
    }

    #[test]
    fn self_copy_always_found() {
        let a = config(
            Norm::Manhattan,
            &[&["0", "0"], &["1", "2"], &["3", "1/2"]],
        );
        let w = is_isometric_copy(&a, &a, Norm::Manhattan).unwrap();
        assert!(w.verify(&a, &a, Norm::Manhattan).unwrap());
    }
}
