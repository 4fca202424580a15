//! Corpus generators: seeded random strings and the adversarial family
//! `T_m = v_m · a^(2^m)` on which exact radius maintenance costs `Ω(n log n)`.

use std::io::{self, BufRead, Write};

use crate::error::{Error, Result};
use crate::model::{Alphabet, LabeledString, Symbol};

/// SplitMix64 (Steele, Lea, Flood 2014). Chosen so corpora can be regenerated
/// bit-for-bit in any language:
///
/// ```text
/// state += 0x9E3779B97F4A7C15
/// z = state
/// z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
/// z = (z ^ (z >> 27)) * 0x94D049BB133111EB
/// return z ^ (z >> 31)
/// ```
///
/// Bounded draws use the high half of a 128-bit product: `(next() * bound) >> 64`.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform draw from `0..bound`; `bound` must be positive.
    pub fn below(&mut self, bound: u64) -> u64 {
        ((self.next_u64() as u128 * bound as u128) >> 64) as u64
    }
}

/// Printable name of the `i`-th generated letter: `a`..`z`, then code points from U+0100.
pub fn letter_name(i: usize) -> String {
    if i < 26 {
        ((b'a' + i as u8) as char).to_string()
    } else {
        char::from_u32(0x100 + (i as u32 - 26))
            .expect("letter index within the Unicode scalar range")
            .to_string()
    }
}

/// The alphabet `random_string` draws from, registered in order.
pub fn letters(sigma: usize) -> Alphabet {
    Alphabet::with_names((0..sigma).map(letter_name))
}

/// `n` i.i.d. uniform letters from the first `sigma` letters of [`letters`].
pub fn random_string(n: usize, sigma: usize, seed: u64) -> Result<LabeledString> {
    if sigma == 0 {
        return Err(Error::EmptyAlphabet);
    }
    let mut rng = SplitMix64::new(seed);
    Ok((0..n)
        .map(|_| Symbol(Symbol::FIRST_USER + rng.below(sigma as u64) as u32))
        .collect())
}

/// One member of the adversarial family.
#[derive(Debug, Clone)]
pub struct Adversarial {
    pub m: u32,
    /// `T_m = v_m · a^(2^m)`.
    pub text: LabeledString,
    /// `v_m`, the Z-normal form of `text`.
    pub normal_form: LabeledString,
    /// `a`, `b`, then the fresh letters `t_1..t_m`.
    pub alphabet: Alphabet,
}

/// Name of the fresh letter `t_i`: `1`..`9`, then `t10`, `t11`, ...
pub fn fresh_letter_name(i: u32) -> String {
    if i <= 9 {
        i.to_string()
    } else {
        format!("t{i}")
    }
}

/// Builds `v_0 = ba`, `v_i = v_{i-1}ᴿ · a · t_i · t_i · a · v_{i-1}` and `T_m`.
pub fn adversarial(m: u32) -> Adversarial {
    let mut alphabet = Alphabet::new();
    let a = alphabet.register("a");
    let b = alphabet.register("b");
    let mut v: Vec<Symbol> = vec![b, a];
    for i in 1..=m {
        let t = alphabet.register(fresh_letter_name(i));
        let mut next = Vec::with_capacity(2 * v.len() + 4);
        next.extend(v.iter().rev().copied());
        next.extend([a, t, t, a]);
        next.extend_from_slice(&v);
        v = next;
    }
    let mut text = v.clone();
    text.extend(std::iter::repeat_n(a, 1usize << m));
    Adversarial {
        m,
        text: LabeledString::new(text),
        normal_form: LabeledString::new(v),
        alphabet,
    }
}

/// Writes a corpus: UTF-8, one string per line, optional `# alphabet: ...` header.
pub fn write_corpus<W: Write>(
    out: &mut W,
    alphabet: &Alphabet,
    strings: &[LabeledString],
    header: bool,
) -> io::Result<()> {
    if header {
        let names: Vec<&str> = (0..alphabet.len())
            .filter_map(|i| alphabet.name(Symbol(Symbol::FIRST_USER + i as u32)))
            .collect();
        writeln!(out, "# alphabet: {}", names.join(" "))?;
    }
    for s in strings {
        let line = alphabet
            .decode(s)
            .map_err(|e| io::Error::new(io::ErrorKind::InvalidData, e))?;
        writeln!(out, "{line}")?;
    }
    Ok(())
}

/// Reads a corpus written by [`write_corpus`]. A leading `# alphabet:` line
/// pre-registers its names; blank lines are empty strings.
pub fn read_corpus<R: BufRead>(input: R) -> io::Result<(Alphabet, Vec<LabeledString>)> {
    let mut alphabet = Alphabet::new();
    let mut strings = Vec::new();
    for (i, line) in input.lines().enumerate() {
        let line = line?;
        if i == 0 {
            if let Some(rest) = line.strip_prefix("# alphabet:") {
                for name in rest.split_whitespace() {
                    alphabet.register(name);
                }
                continue;
            }
        }
        strings.push(alphabet.encode_chars(&line));
    }
    Ok((alphabet, strings))
}
