//! Online Z-shape detection on top of Manacher's scan.
//!
//! The scan keeps one suffix palindrome under watch. When it grows, the
//! letter-matching loop checks whether the mirrored left pivot already
//! carries a long enough radius; if so, the watched palindrome is the tail of
//! the unique suffix Z-shape of the shortest reducible prefix.

use crate::error::{Error, Result};
use crate::model::{LabeledString, PalsArray, Symbol, ZOccurrence};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DetectOutcome {
    /// Suffix Z-shape of the shortest reducible prefix.
    Found(ZOccurrence),
    /// The input is irreducible; exact radii for every position.
    Irreducible(PalsArray),
}

impl DetectOutcome {
    pub fn occurrence(&self) -> Option<ZOccurrence> {
        match self {
            DetectOutcome::Found(occ) => Some(*occ),
            DetectOutcome::Irreducible(_) => None,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DetectStats {
    /// Letters pulled from the source, both sentinels included.
    pub reads: u64,
    /// Letter comparisons plus radius comparisons.
    pub comparisons: u64,
}

/// Working state; positions are 1-based with `$` at position 1, slot 0 unused.
struct Scan<I> {
    source: I,
    right_sentinel_sent: bool,
    w: Vec<Symbol>,
    pals: Vec<usize>,
    stats: DetectStats,
}

enum Halt {
    Found(usize, usize),
    Sentinel(usize),
}

impl<I: Iterator<Item = Symbol>> Scan<I> {
    fn len(&self) -> usize {
        self.w.len() - 1
    }

    /// Appends the next letter; `false` once `#` has been delivered.
    fn append(&mut self) -> Result<bool> {
        let sym = match self.source.next() {
            Some(sym) => {
                if sym.is_sentinel() {
                    return Err(Error::SentinelInInput {
                        symbol: sym,
                        index: self.len() - 1,
                    });
                }
                sym
            }
            None if !self.right_sentinel_sent => {
                self.right_sentinel_sent = true;
                Symbol::RIGHT_SENTINEL
            }
            None => return Ok(false),
        };
        self.w.push(sym);
        self.stats.reads += 1;
        Ok(true)
    }

    fn set_pal(&mut self, c: usize, r: usize) {
        if self.pals.len() <= c {
            self.pals.resize(c + 1, 0);
        }
        self.pals[c] = r;
    }

    fn run(&mut self) -> Result<Halt> {
        self.w.push(Symbol::LEFT_SENTINEL);
        self.stats.reads += 1;
        while self.append()? {
            let c = self.len() - 1;
            if let Some(found) = self.detect_chain(c)? {
                return Ok(found);
            }
        }
        Ok(Halt::Sentinel(self.len()))
    }

    /// The chain recursion is a tail call, so it runs as a loop.
    fn detect_chain(&mut self, mut c: usize) -> Result<Option<Halt>> {
        'chain: loop {
            if let Some(found) = self.extend(c)? {
                return Ok(Some(found));
            }
            let rc = self.pals[c];
            for r in 1..=rc {
                self.stats.comparisons += 1;
                if r + self.pals[c - r] < rc {
                    let mirrored = self.pals[c - r];
                    self.set_pal(c + r, mirrored);
                } else {
                    c += r;
                    continue 'chain;
                }
            }
            return Ok(None);
        }
    }

    fn extend(&mut self, c: usize) -> Result<Option<Halt>> {
        let mut r = self.len() - c - 1;
        loop {
            self.stats.comparisons += 1;
            if self.w[c + r + 1] != self.w[c - r] {
                break;
            }
            r += 1;
            self.stats.comparisons += 1;
            if self.pals[c - r] >= r {
                return Ok(Some(Halt::Found(c - r, c)));
            }
            if !self.append()? {
                break;
            }
        }
        self.set_pal(c, r);
        Ok(None)
    }
}

/// Scans letters from `source` until the first Z-shape or the end.
pub fn detect_from<I>(source: I) -> Result<(DetectOutcome, DetectStats)>
where
    I: IntoIterator<Item = Symbol>,
{
    let mut scan = Scan {
        source: source.into_iter(),
        right_sentinel_sent: false,
        w: vec![Symbol::LEFT_SENTINEL],
        pals: vec![0, 0],
        stats: DetectStats::default(),
    };
    let outcome = match scan.run()? {
        // shift out the left sentinel
        Halt::Found(p1, p2) => DetectOutcome::Found(ZOccurrence::new(p1 - 1, p2 - 1)),
        Halt::Sentinel(len) => {
            let n = len - 2;
            scan.pals.resize(len + 1, 0);
            DetectOutcome::Irreducible(PalsArray::new(scan.pals[2..2 + n].to_vec()))
        }
    };
    Ok((outcome, scan.stats))
}

pub fn detect_first_z(t: &LabeledString) -> Result<DetectOutcome> {
    detect_first_z_counted(t).map(|(o, _)| o)
}

pub fn detect_first_z_counted(t: &LabeledString) -> Result<(DetectOutcome, DetectStats)> {
    if let Some(index) = t.find_sentinel() {
        return Err(Error::SentinelInInput { symbol: t.symbols()[index], index });
    }
    detect_from(t.symbols().iter().copied())
}

pub fn is_irreducible(t: &LabeledString) -> Result<bool> {
    Ok(matches!(detect_first_z(t)?, DetectOutcome::Irreducible(_)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::Alphabet;
    use crate::oracle::{normal_form_naive, Strategy};
    use crate::shapes::{find_z_shapes, is_occurrence, naive_radii};

    fn enc(s: &str) -> LabeledString {
        Alphabet::encode_new(s).1
    }

    #[test]
    fn first_example() {
        let w = enc("ababccbaabcc");
        assert_eq!(
            detect_first_z(&w).unwrap(),
            DetectOutcome::Found(ZOccurrence::new(5, 8))
        );
        // fires after reading position 11 (plus the left sentinel)
        let (_, stats) = detect_first_z_counted(&w).unwrap();
        assert_eq!(stats.reads, 12);
    }

    #[test]
    fn irreducible_gives_radii() {
        assert_eq!(
            detect_first_z(&enc("abc")).unwrap(),
            DetectOutcome::Irreducible(PalsArray::new(vec![0, 0, 0]))
        );
        assert_eq!(
            detect_first_z(&LabeledString::empty()).unwrap(),
            DetectOutcome::Irreducible(PalsArray::new(vec![]))
        );
    }

    #[test]
    fn shortest_reducible_prefix() {
        assert_eq!(
            detect_first_z(&enc("cbaaaabccbaabba")).unwrap().occurrence(),
            Some(ZOccurrence::new(3, 4))
        );
        assert_eq!(detect_first_z(&enc("aaa")).unwrap().occurrence(), Some(ZOccurrence::new(1, 2)));
    }

    #[test]
    fn irreducibility_wrapper() {
        assert!(is_irreducible(&enc("cba")).unwrap());
        assert!(!is_irreducible(&enc("aaa")).unwrap());
    }

    #[test]
    fn sentinels_rejected() {
        let w = LabeledString::new(vec![Symbol(2), Symbol::RIGHT_SENTINEL]);
        assert_eq!(
            detect_first_z(&w),
            Err(Error::SentinelInInput { symbol: Symbol::RIGHT_SENTINEL, index: 1 })
        );
    }

    #[test]
    fn normal_forms_are_irreducible() {
        for seed in 1..=1000u64 {
            let w = crate::gen::random_string((seed % 40) as usize, 3, seed).unwrap();
            let nf = normal_form_naive(&w, Strategy::Leftmost);
            assert!(is_irreducible(&nf).unwrap(), "seed {seed}");
        }
    }

    fn shortest_reducible_prefix_len(w: &LabeledString) -> Option<usize> {
        (1..=w.len()).find(|&k| !find_z_shapes(&w.slice(1, k)).is_empty())
    }

    #[test]
    fn agrees_with_oracle_exhaustively() {
        for len in 0..=14usize {
            for bits in 0..(1u32 << len) {
                let w: LabeledString =
                    (0..len).map(|i| Symbol(2 + ((bits >> i) & 1))).collect();
                let (outcome, stats) = detect_first_z_counted(&w).unwrap();
                match outcome {
                    DetectOutcome::Found(occ) => {
                        let k = shortest_reducible_prefix_len(&w).expect("oracle finds a Z");
                        let prefix = w.slice(1, k);
                        assert_eq!(occ.span().1, k, "{w}");
                        assert!(is_occurrence(&prefix, occ));
                        assert_eq!(find_z_shapes(&prefix), vec![occ], "unique suffix Z in {w}");
                        assert_eq!(stats.reads, k as u64 + 1);
                    }
                    DetectOutcome::Irreducible(radii) => {
                        assert!(find_z_shapes(&w).is_empty(), "{w}");
                        assert_eq!(radii, naive_radii(&w));
                        assert_eq!(stats.reads, len as u64 + 2);
                    }
                }
                assert!(stats.comparisons <= 4 * (len as u64 + 2));
            }
        }
    }
}
