//! Detect-and-contract reduction with exact radii.
//!
//! Every center whose palindrome is still a suffix is kept active and
//! re-checked on each letter, so a letter costs one comparison per suffix
//! palindrome. The per-prefix active sets are kept as a flat history so a
//! contraction can roll back to the state at the kept prefix. On inputs with
//! logarithmically many nested suffix palindromes this costs `Θ(n log n)`.

use crate::error::{Error, Result};
use crate::model::{LabeledString, Symbol};
use crate::reducer::Counters;

const ACTIVE: u32 = u32::MAX;

pub fn detect_and_contract(t: &LabeledString) -> Result<LabeledString> {
    detect_and_contract_counted(t).map(|(nf, _)| nf)
}

pub fn detect_and_contract_counted(t: &LabeledString) -> Result<(LabeledString, Counters)> {
    if let Some(index) = t.find_sentinel() {
        return Err(Error::SentinelInInput { symbol: t.symbols()[index], index });
    }
    let mut counters = Counters { appends: 1, ..Counters::default() };
    // 1-based with the left sentinel at position 1
    let mut w = vec![Symbol::LEFT_SENTINEL, Symbol::LEFT_SENTINEL];
    // finalized radius, or ACTIVE while the palindrome is a suffix
    let mut pals: Vec<u32> = vec![0, ACTIVE];
    // active centers of prefix k are flat[starts[k]..starts[k + 1]], the last set runs to the end
    let mut flat: Vec<u32> = vec![1];
    let mut starts: Vec<usize> = vec![0, 0];

    for &x in t.symbols() {
        let n = w.len() - 1;
        w.push(x);
        pals.push(ACTIVE);
        counters.appends += 1;
        let new_len = n + 1;
        let prev = starts[n];
        starts.push(flat.len());
        for i in prev..starts[new_len] {
            let c = flat[i] as usize;
            let r = n - c;
            counters.comparisons += 1;
            if w[c - r] == x {
                flat.push(c as u32);
            } else {
                pals[c] = r as u32;
            }
        }
        flat.push(new_len as u32);

        let mut hit = None;
        for &c in &flat[starts[new_len]..] {
            let c = c as usize;
            let r = new_len - c;
            if r == 0 {
                continue;
            }
            let p1 = c - r;
            let rho = match pals[p1] {
                ACTIVE => new_len - p1,
                v => v as usize,
            };
            counters.comparisons += 1;
            if rho >= r {
                hit = Some(p1);
                break;
            }
        }
        if let Some(p1) = hit {
            counters.contractions += 1;
            w.truncate(p1 + 1);
            pals.truncate(p1 + 1);
            flat.truncate(starts[p1 + 1]);
            starts.truncate(p1 + 1);
            for &c in &flat[starts[p1]..] {
                pals[c as usize] = ACTIVE;
            }
        }
    }
    counters.appends += 1;
    Ok((LabeledString::new(w[2..].to_vec()), counters))
}
