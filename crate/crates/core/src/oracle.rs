//! Slow reference implementations.
//!
//! These follow the definitions directly and may be cubic; use them on short
//! inputs only.

use crate::error::{Error, Result};
use crate::gen::SplitMix64;
use crate::model::{LabeledString, PalsArray, ZOccurrence};
use crate::shapes::{contract, find_z_shapes, naive_radii, z_shapes_from_radii};

/// Which Z-occurrence the naive normalizer contracts next.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// Smallest `(p1, p2)`.
    Leftmost,
    /// Smallest `p2 - p1`, ties broken by smallest `p1`.
    ShortestThenLeftmost,
    /// Uniform among all occurrences, driven by SplitMix64 seeded with the value.
    Random(u64),
}

/// Work done by [`normal_form_naive_counted`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct NaiveStats {
    /// Letter comparisons spent computing radii.
    pub comparisons: u64,
    pub contractions: u64,
}

pub fn normal_form_naive(w: &LabeledString, strategy: Strategy) -> LabeledString {
    normal_form_naive_counted(w, strategy).0
}

pub fn normal_form_naive_counted(
    w: &LabeledString,
    strategy: Strategy,
) -> (LabeledString, NaiveStats) {
    let mut rng = match strategy {
        Strategy::Random(seed) => Some(SplitMix64::new(seed)),
        _ => None,
    };
    let mut stats = NaiveStats::default();
    let mut cur = w.clone();
    loop {
        let radii = naive_radii(&cur);
        stats.comparisons += radii.as_slice().iter().map(|&r| r as u64 + 1).sum::<u64>();
        let occs = z_shapes_from_radii(&radii);
        let Some(occ) = pick(&occs, strategy, rng.as_mut()) else {
            return (cur, stats);
        };
        cur = contract(&cur, occ).expect("occurrence taken from find_z_shapes");
        stats.contractions += 1;
    }
}

fn pick(
    occs: &[ZOccurrence],
    strategy: Strategy,
    rng: Option<&mut SplitMix64>,
) -> Option<ZOccurrence> {
    if occs.is_empty() {
        return None;
    }
    match strategy {
        Strategy::Leftmost => occs.first().copied(),
        Strategy::ShortestThenLeftmost => occs.iter().copied().min_by_key(|o| (o.half(), o.p1)),
        Strategy::Random(_) => {
            let rng = rng.expect("random strategy carries a generator");
            Some(occs[rng.below(occs.len() as u64) as usize])
        }
    }
}

/// True iff every strategy yields the same normal form.
pub fn check_confluence(w: &LabeledString, strategies: &[Strategy]) -> bool {
    let mut forms = strategies.iter().map(|&s| normal_form_naive(w, s));
    match forms.next() {
        Some(first) => forms.all(|f| f == first),
        None => true,
    }
}

pub fn is_irreducible_naive(w: &LabeledString) -> bool {
    find_z_shapes(w).is_empty()
}

/// The longest proper prefix is irreducible.
pub fn is_pp_irreducible(w: &LabeledString) -> bool {
    w.is_empty() || is_irreducible_naive(&w.slice(1, w.len() - 1))
}

/// `c ⊏_w d`: the palindrome at `c` reaches into the one at `d` without
/// overtaking it.
pub fn chain_step(radii: &PalsArray, c: usize, d: usize) -> bool {
    if c == d {
        return false;
    }
    let (rc, rd) = (radii.radius(c), radii.radius(d));
    d >= rd && c <= d - rd && d <= c + rc && c + rc <= d + rd
}

/// Maximum frontier from every position, computed right to left.
#[derive(Debug, Clone)]
pub struct Frontiers {
    radii: PalsArray,
    frontier: Vec<usize>,
}

impl Frontiers {
    pub fn compute(w: &LabeledString) -> Result<Self> {
        if !is_pp_irreducible(w) {
            return Err(Error::NotPpIrreducible);
        }
        let radii = naive_radii(w);
        let n = w.len();
        let mut frontier = vec![0; n + 1];
        for c in (1..=n).rev() {
            let mut best = c + radii.radius(c);
            // c ⊏ d forces c < d <= c + rho(c)
            let hi = (c + radii.radius(c)).min(n);
            for (d, &fd) in (c + 1..).zip(&frontier[c + 1..=hi]) {
                if chain_step(&radii, c, d) {
                    best = best.max(fd);
                }
            }
            frontier[c] = best;
        }
        Ok(Self { radii, frontier })
    }

    pub fn len(&self) -> usize {
        self.radii.len()
    }

    pub fn is_empty(&self) -> bool {
        self.radii.is_empty()
    }

    pub fn radii(&self) -> &PalsArray {
        &self.radii
    }

    pub fn frontier(&self, c: usize) -> Result<usize> {
        self.check(c)?;
        Ok(self.frontier[c])
    }

    /// Smallest `c` with `c <= d <= frontier(c)`.
    pub fn originator(&self, d: usize) -> Result<usize> {
        self.check(d)?;
        Ok((1..=d)
            .find(|&c| self.frontier[c] >= d)
            .expect("frontier(d) >= d always"))
    }

    pub fn is_stable(&self, c: usize) -> Result<bool> {
        Ok(self.frontier(c)? < self.len())
    }

    fn check(&self, c: usize) -> Result<()> {
        if c == 0 || c > self.len() {
            return Err(Error::PositionOutOfRange { pos: c, len: self.len() });
        }
        Ok(())
    }
}

pub fn frontier_naive(w: &LabeledString, c: usize) -> Result<usize> {
    Frontiers::compute(w)?.frontier(c)
}

pub fn originator_naive(w: &LabeledString, d: usize) -> Result<usize> {
    Frontiers::compute(w)?.originator(d)
}

pub fn is_stable_naive(w: &LabeledString, c: usize) -> Result<bool> {
    Frontiers::compute(w)?.is_stable(c)
}
