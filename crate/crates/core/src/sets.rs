//! Sorted-slice set primitives shared by the relation, collapse and I/O code.
//!
//! Every set here is a strictly ascending `&[usize]`.

use std::cmp::Ordering;

pub fn is_subset(small: &[usize], large: &[usize]) -> bool {
    if small.len() > large.len() {
        return false;
    }
    let mut it = large.iter();
    'outer: for a in small {
        for b in it.by_ref() {
            match b.cmp(a) {
                Ordering::Less => continue,
                Ordering::Equal => continue 'outer,
                Ordering::Greater => return false,
            }
        }
        return false;
    }
    true
}

pub fn union(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

pub fn intersection_len(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut n) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            Ordering::Less => i += 1,
            Ordering::Greater => j += 1,
            Ordering::Equal => {
                n += 1;
                i += 1;
                j += 1;
            }
        }
    }
    n
}

/// Symmetric difference, used for GF(2) column addition.
pub fn xor(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// Why a set was dropped by [`maximal_filter`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fate {
    Kept,
    /// Strictly contained in another candidate.
    Face,
    /// Equal to a lower-indexed candidate.
    Duplicate,
}

/// Classifies each set in `sets` against the other members of `candidates`.
///
/// `members[e]` lists the sets containing element `e`; it is the transpose of
/// `sets`. Only sets listed in `candidates` are compared (and only against
/// each other); everything else is `Kept`. Equal sets keep the lowest index.
pub fn maximal_filter(
    sets: &[Vec<usize>],
    members: &[Vec<usize>],
    candidates: Option<&[usize]>,
) -> Vec<Fate> {
    let mut fate = vec![Fate::Kept; sets.len()];
    let in_scope: Vec<bool> = match candidates {
        None => vec![true; sets.len()],
        Some(c) => {
            let mut s = vec![false; sets.len()];
            for &i in c {
                s[i] = true;
            }
            s
        }
    };
    for (i, set) in sets.iter().enumerate() {
        if !in_scope[i] || set.is_empty() {
            continue;
        }
        // Any superset must contain the rarest element of `set`.
        let pivot = set
            .iter()
            .copied()
            .min_by_key(|&e| members[e].len())
            .expect("non-empty");
        let mut duplicate = false;
        for &k in &members[pivot] {
            if k == i || !in_scope[k] || sets[k].len() < set.len() {
                continue;
            }
            if !is_subset(set, &sets[k]) {
                continue;
            }
            if sets[k].len() > set.len() {
                fate[i] = Fate::Face;
                duplicate = false;
                break;
            }
            if k < i {
                duplicate = true;
            }
        }
        if duplicate {
            fate[i] = Fate::Duplicate;
        }
    }
    fate
}

/// Transposes a list of sets over the element universe `0..universe`.
pub fn transpose(sets: &[Vec<usize>], universe: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new(); universe];
    for (i, set) in sets.iter().enumerate() {
        for &e in set {
            out[e].push(i);
        }
    }
    out
}
