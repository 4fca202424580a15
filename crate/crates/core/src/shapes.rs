//! Direct-from-definition palindrome and Z-shape primitives.
//!
//! Everything here is deliberately naive; the fast paths in [`crate::detector`]
//! and [`crate::reducer`] are checked against these.

use crate::error::{Error, Result};
use crate::model::{LabeledString, PalsArray, Symbol, ZOccurrence};

/// Largest `r` with `w[c-r+1:c]` equal to the reverse of `w[c+1:c+r]`.
pub fn naive_radius(w: &LabeledString, c: usize) -> Result<usize> {
    if c == 0 || c > w.len() {
        return Err(Error::PositionOutOfRange { pos: c, len: w.len() });
    }
    Ok(radius_unchecked(w.symbols(), c))
}

/// `s` is 0-based storage, `c` a 1-based center.
pub(crate) fn radius_unchecked(s: &[Symbol], c: usize) -> usize {
    let mut r = 0;
    // left letter w[c-r] is s[c-r-1], right letter w[c+r+1] is s[c+r]
    while r < c && c + r < s.len() && s[c - r - 1] == s[c + r] {
        r += 1;
    }
    r
}

pub fn naive_radii(w: &LabeledString) -> PalsArray {
    PalsArray::new(
        (1..=w.len())
            .map(|c| radius_unchecked(w.symbols(), c))
            .collect(),
    )
}

/// All Z-shape occurrences in lexicographic `(p1, p2)` order.
pub fn find_z_shapes(w: &LabeledString) -> Vec<ZOccurrence> {
    let radii = naive_radii(w);
    z_shapes_from_radii(&radii)
}

pub(crate) fn z_shapes_from_radii(radii: &PalsArray) -> Vec<ZOccurrence> {
    let n = radii.len();
    let mut out = Vec::new();
    for p1 in 1..=n {
        // p2 - p1 <= rho(p1) bounds the search
        let reach = radii.radius(p1);
        for s in 1..=reach {
            let p2 = p1 + s;
            if p2 <= n && radii.radius(p2) >= s {
                out.push(ZOccurrence::new(p1, p2));
            }
        }
    }
    out
}

pub fn is_occurrence(w: &LabeledString, occ: ZOccurrence) -> bool {
    let n = w.len();
    if occ.p1 == 0 || occ.p2 <= occ.p1 || occ.p2 > n {
        return false;
    }
    let s = occ.half();
    radius_unchecked(w.symbols(), occ.p1) >= s && radius_unchecked(w.symbols(), occ.p2) >= s
}

/// Deletes the tail `xᴿ·x` of the occurrence, keeping `w[1:p1]` and `w[p2+s+1:]`.
pub fn contract(w: &LabeledString, occ: ZOccurrence) -> Result<LabeledString> {
    if !is_occurrence(w, occ) {
        return Err(Error::InvalidOccurrence { p1: occ.p1, p2: occ.p2 });
    }
    let s = occ.half();
    let syms = w.symbols();
    let mut out = Vec::with_capacity(w.len() - 2 * s);
    out.extend_from_slice(&syms[..occ.p1]);
    out.extend_from_slice(&syms[occ.p2 + s..]);
    Ok(LabeledString::new(out))
}
