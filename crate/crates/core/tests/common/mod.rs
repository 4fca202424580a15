#![allow(dead_code)]

use zreduce::{LabeledString, Symbol};

/// Every string of length `0..=max_len` over the first `sigma` letters.
pub fn all_strings(sigma: u32, max_len: usize) -> impl Iterator<Item = LabeledString> {
    (0..=max_len).flat_map(move |len| {
        (0..(sigma as u64).pow(len as u32)).map(move |mut code| {
            (0..len)
                .map(|_| {
                    let d = (code % sigma as u64) as u32;
                    code /= sigma as u64;
                    Symbol(Symbol::FIRST_USER + d)
                })
                .collect()
        })
    })
}

/// True iff walking the path labeled `edges` from vertex 0 to its far end
/// can emit exactly `t`. Depth-first over `(vertex, letters emitted)`.
pub fn admits_end_to_end_walk(edges: &[Symbol], t: &[Symbol]) -> bool {
    let last = edges.len();
    let mut seen = vec![false; (last + 1) * (t.len() + 1)];
    let mut stack = vec![(0usize, 0usize)];
    while let Some((v, i)) = stack.pop() {
        if i == t.len() {
            if v == last {
                return true;
            }
            continue;
        }
        let key = v * (t.len() + 1) + i;
        if seen[key] {
            continue;
        }
        seen[key] = true;
        if v < last && edges[v] == t[i] {
            stack.push((v + 1, i + 1));
        }
        if v > 0 && edges[v - 1] == t[i] {
            stack.push((v - 1, i + 1));
        }
    }
    false
}

/// Some path with `edge_count` edges over `letters` admits `t` end to end.
pub fn some_path_admits(edge_count: usize, letters: &[Symbol], t: &[Symbol]) -> bool {
    let k = letters.len() as u64;
    (0..k.pow(edge_count as u32)).any(|mut code| {
        let edges: Vec<Symbol> = (0..edge_count)
            .map(|_| {
                let s = letters[(code % k) as usize];
                code /= k;
                s
            })
            .collect();
        admits_end_to_end_walk(&edges, t)
    })
}
