//! Symbols, alphabets and the labeled strings that carry a walk's edge labels.
//!
//! Positions exposed by this crate are 1-based and never count sentinels.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// A dense symbol id. Ids 0 and 1 are the left and right sentinels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol(pub u32);

impl Symbol {
    /// Left sentinel (`$`).
    pub const LEFT_SENTINEL: Symbol = Symbol(0);
    /// Right sentinel (`#`).
    pub const RIGHT_SENTINEL: Symbol = Symbol(1);
    /// First id handed out to user symbols.
    pub const FIRST_USER: u32 = 2;

    pub fn is_sentinel(self) -> bool {
        self.0 < Self::FIRST_USER
    }
}

/// Registry mapping printable symbol names to ids, in order of first appearance.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
    ids: HashMap<String, Symbol>,
}

impl Alphabet {
    pub fn new() -> Self {
        Self::default()
    }

    /// An alphabet with `names` pre-registered in the given order.
    pub fn with_names<I, S>(names: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut alphabet = Self::new();
        for name in names {
            alphabet.register(name);
        }
        alphabet
    }

    pub fn register(&mut self, name: impl Into<String>) -> Symbol {
        let name = name.into();
        if let Some(&sym) = self.ids.get(&name) {
            return sym;
        }
        let sym = Symbol(Symbol::FIRST_USER + self.names.len() as u32);
        self.ids.insert(name.clone(), sym);
        self.names.push(name);
        sym
    }

    pub fn get(&self, name: &str) -> Option<Symbol> {
        self.ids.get(name).copied()
    }

    pub fn name(&self, sym: Symbol) -> Option<&str> {
        if sym.is_sentinel() {
            return None;
        }
        self.names
            .get((sym.0 - Symbol::FIRST_USER) as usize)
            .map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// Encodes `text` one Unicode scalar value per symbol, registering new ones.
    pub fn encode_chars(&mut self, text: &str) -> LabeledString {
        let mut buf = [0u8; 4];
        text.chars()
            .map(|ch| self.register(&*ch.encode_utf8(&mut buf)))
            .collect()
    }

    /// Encodes `text` as `delimiter`-separated labels; empty tokens are skipped.
    pub fn encode_tokens(&mut self, text: &str, delimiter: &str) -> LabeledString {
        text.split(delimiter)
            .filter(|tok| !tok.is_empty())
            .map(|tok| self.register(tok))
            .collect()
    }

    /// Convenience for tests and examples: a fresh alphabet plus the encoded text.
    pub fn encode_new(text: &str) -> (Self, LabeledString) {
        let mut alphabet = Self::new();
        let w = alphabet.encode_chars(text);
        (alphabet, w)
    }

    pub fn decode(&self, w: &LabeledString) -> Result<String> {
        self.decode_joined(w, "")
    }

    pub fn decode_joined(&self, w: &LabeledString, separator: &str) -> Result<String> {
        let mut out = String::new();
        for (i, &sym) in w.symbols().iter().enumerate() {
            if i > 0 {
                out.push_str(separator);
            }
            out.push_str(self.name(sym).ok_or(Error::UnnamedSymbol(sym))?);
        }
        Ok(out)
    }
}

/// A finite sequence of symbols.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabeledString(Vec<Symbol>);

impl LabeledString {
    pub fn new(symbols: Vec<Symbol>) -> Self {
        Self(symbols)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn into_symbols(self) -> Vec<Symbol> {
        self.0
    }

    /// The letter at 1-based position `i`.
    pub fn at(&self, i: usize) -> Symbol {
        self.0[i - 1]
    }

    /// `w[i:j]` with 1-based inclusive bounds; empty when `j < i`.
    pub fn slice(&self, i: usize, j: usize) -> LabeledString {
        if j < i {
            return Self::empty();
        }
        Self(self.0[i - 1..j].to_vec())
    }

    pub fn reversed(&self) -> LabeledString {
        Self(self.0.iter().rev().copied().collect())
    }

    pub fn push(&mut self, sym: Symbol) {
        self.0.push(sym);
    }

    pub fn concat(&self, other: &LabeledString) -> LabeledString {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Self(v)
    }

    /// Index of the first sentinel id, if any.
    pub fn find_sentinel(&self) -> Option<usize> {
        self.0.iter().position(|s| s.is_sentinel())
    }
}

impl FromIterator<Symbol> for LabeledString {
    fn from_iter<T: IntoIterator<Item = Symbol>>(iter: T) -> Self {
        Self(iter.into_iter().collect())
    }
}

impl From<Vec<Symbol>> for LabeledString {
    fn from(v: Vec<Symbol>) -> Self {
        Self(v)
    }
}

impl fmt::Display for LabeledString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", s.0)?;
        }
        Ok(())
    }
}

/// Maximal even-palindrome radius per position, 1-based.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PalsArray(Vec<usize>);

impl PalsArray {
    pub fn new(radii: Vec<usize>) -> Self {
        Self(radii)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Radius at 1-based position `c`.
    pub fn radius(&self, c: usize) -> usize {
        self.0[c - 1]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

/// A Z-shape occurrence given by its left and right pivots.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ZOccurrence {
    pub p1: usize,
    pub p2: usize,
}

impl ZOccurrence {
    pub fn new(p1: usize, p2: usize) -> Self {
        Self { p1, p2 }
    }

    /// Length of the repeated factor `x` in `x·xᴿ·x`.
    pub fn half(&self) -> usize {
        self.p2 - self.p1
    }

    /// First and last 1-based positions covered by the occurrence.
    pub fn span(&self) -> (usize, usize) {
        let s = self.half();
        (self.p1 + 1 - s, self.p2 + s)
    }
}

impl fmt::Display for ZOccurrence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}, {}>", self.p1, self.p2)
    }
}
