//! Group words over a presentation's generators.
//!
//! A word is a sequence of letters `(generator index, ±1)`. Generator indices
//! are positions in some [`Presentation`](super::Presentation)'s generator
//! list; the word itself carries no names. Words are not reduced
//! automatically except by [`Word::mul`] and the explicit reduction methods.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};

/// One letter `g^e` with `e = ±1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: usize,
    pub exp: i8,
}

impl Letter {
    pub fn new(gen: usize, exp: i8) -> Self {
        debug_assert!(exp == 1 || exp == -1);
        Letter { gen, exp }
    }

    pub fn inverse(self) -> Self {
        Letter {
            gen: self.gen,
            exp: -self.exp,
        }
    }
}

/// A (not necessarily reduced) word in the generators.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    /// The empty word.
    pub fn identity() -> Self {
        Word {
            letters: Vec::new(),
        }
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        Word { letters }
    }

    /// Builds a word from signed 1-based codes: `k` is generator `k-1`,
    /// `-k` its inverse. Handy in tests.
    pub fn from_signed(codes: &[i64]) -> Self {
        Word {
            letters: codes
                .iter()
                .map(|&c| {
                    assert!(c != 0, "generator code 0 is not allowed");
                    Letter::new(c.unsigned_abs() as usize - 1, c.signum() as i8)
                })
                .collect(),
        }
    }

    /// The word consisting of one generator.
    pub fn gen(g: usize) -> Self {
        Word {
            letters: vec![Letter::new(g, 1)],
        }
    }

    /// The word consisting of one inverse generator.
    pub fn gen_inv(g: usize) -> Self {
        Word {
            letters: vec![Letter::new(g, -1)],
        }
    }

    /// `g^e` for any integer `e`.
    pub fn gen_pow(g: usize, e: i64) -> Self {
        let s = if e >= 0 { 1 } else { -1 };
        Word {
            letters: vec![Letter::new(g, s); e.unsigned_abs() as usize],
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Formal inverse: reverse and negate.
    pub fn inverse(&self) -> Self {
        Word {
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// Concatenation without reduction.
    pub fn concat(&self, other: &Word) -> Self {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    /// Freely reduced product.
    pub fn mul(&self, other: &Word) -> Self {
        self.concat(other).free_reduce()
    }

    /// Freely reduced `n`-th power (negative powers use the inverse).
    pub fn pow(&self, n: i64) -> Self {
        let base = if n >= 0 { self.clone() } else { self.inverse() };
        let mut out = Word::identity();
        for _ in 0..n.unsigned_abs() {
            out = out.concat(&base);
        }
        out.free_reduce()
    }

    /// Cancels adjacent inverse pairs until none remain.
    pub fn free_reduce(&self) -> Self {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            match out.last() {
                Some(&last) if last == l.inverse() => {
                    out.pop();
                }
                _ => out.push(l),
            }
        }
        Word { letters: out }
    }

    pub fn is_freely_reduced(&self) -> bool {
        self.letters.windows(2).all(|w| w[0] != w[1].inverse())
    }

    /// Cyclic reduction of an already freely reduced word.
    pub fn cyclic_reduce(&self) -> Self {
        let w = self.free_reduce();
        let l = &w.letters;
        let mut i = 0;
        let mut j = l.len();
        while j - i >= 2 && l[i] == l[j - 1].inverse() {
            i += 1;
            j -= 1;
        }
        Word {
            letters: l[i..j].to_vec(),
        }
    }

    /// Total exponent sum.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.exp as i64).sum()
    }

    /// Exponent sum of one generator.
    pub fn exponent_sum_of(&self, g: usize) -> i64 {
        self.letters
            .iter()
            .filter(|l| l.gen == g)
            .map(|l| l.exp as i64)
            .sum()
    }

    /// Exponent-sum vector of length `ngens`.
    pub fn exponent_vector(&self, ngens: usize) -> Vec<i64> {
        let mut v = vec![0i64; ngens];
        for l in &self.letters {
            v[l.gen] += l.exp as i64;
        }
        v
    }

    /// Largest generator index used, if any.
    pub fn max_gen(&self) -> Option<usize> {
        self.letters.iter().map(|l| l.gen).max()
    }

    /// True when the word has the shape `+1,-1,+1,...,-1` (or is empty).
    pub fn is_even_alternating(&self) -> bool {
        self.letters.len().is_multiple_of(2)
            && self
                .letters
                .iter()
                .enumerate()
                .all(|(i, l)| l.exp == if i % 2 == 0 { 1 } else { -1 })
    }

    /// Homomorphic image under `map`, freely reduced. `x^-1` goes to the
    /// formal inverse of the image of `x`.
    pub fn apply_map(&self, map: &GeneratorMap) -> Result<Word> {
        let mut out = Vec::new();
        for l in &self.letters {
            let img = map
                .get(l.gen)
                .ok_or_else(|| Error::UnknownGenerator(format!("#{}", l.gen)))?;
            if l.exp > 0 {
                out.extend_from_slice(&img.letters);
            } else {
                out.extend(img.letters.iter().rev().map(|x| x.inverse()));
            }
        }
        Ok(Word { letters: out }.free_reduce())
    }

    /// Renders the word as `a b^-1 c`, with `1` for the identity.
    pub fn display(&self, names: &[String]) -> String {
        if self.letters.is_empty() {
            return "1".to_string();
        }
        let mut s = String::new();
        let mut i = 0;
        while i < self.letters.len() {
            // group runs of the same letter into powers
            let l = self.letters[i];
            let mut j = i;
            while j < self.letters.len() && self.letters[j] == l {
                j += 1;
            }
            let e = (j - i) as i64 * l.exp as i64;
            if !s.is_empty() {
                s.push(' ');
            }
            let name = names
                .get(l.gen)
                .cloned()
                .unwrap_or_else(|| format!("#{}", l.gen));
            if e == 1 {
                s.push_str(&name);
            } else {
                let _ = write!(s, "{name}^{e}");
            }
            i = j;
        }
        s
    }

    /// Parses the notation produced by [`Word::display`]. Tokens are
    /// separated by whitespace; each is `name` or `name^k`.
    pub fn parse(text: &str, names: &[String]) -> Result<Word> {
        let t = text.trim();
        if t.is_empty() || t == "1" {
            return Ok(Word::identity());
        }
        let mut letters = Vec::new();
        for tok in t.split_whitespace() {
            let (name, e) = match tok.rsplit_once('^') {
                Some((n, e)) => (n, e.parse::<i64>().map_err(|_| Error::BadWord(tok.into()))?),
                None => (tok, 1),
            };
            let g = names
                .iter()
                .position(|n| n == name)
                .ok_or_else(|| Error::UnknownGenerator(name.to_string()))?;
            let s = if e >= 0 { 1 } else { -1 };
            letters.extend(std::iter::repeat_n(
                Letter::new(g, s),
                e.unsigned_abs() as usize,
            ));
        }
        Ok(Word { letters })
    }
}

/// A homomorphism from free generators to words, indexed by generator.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GeneratorMap {
    images: BTreeMap<usize, Word>,
}

impl GeneratorMap {
    pub fn new() -> Self {
        Self::default()
    }

    /// The identity map on generators `0..n`.
    pub fn identity(n: usize) -> Self {
        GeneratorMap {
            images: (0..n).map(|g| (g, Word::gen(g))).collect(),
        }
    }

    /// Builds a map from a closure over `0..n`.
    pub fn from_fn(n: usize, f: impl Fn(usize) -> Word) -> Self {
        GeneratorMap {
            images: (0..n).map(|g| (g, f(g))).collect(),
        }
    }

    pub fn insert(&mut self, g: usize, w: Word) {
        self.images.insert(g, w);
    }

    pub fn get(&self, g: usize) -> Option<&Word> {
        self.images.get(&g)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&usize, &Word)> {
        self.images.iter()
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &GeneratorMap) -> Result<GeneratorMap> {
        let mut out = GeneratorMap::new();
        for (&g, w) in &other.images {
            out.insert(g, w.apply_map(self)?);
        }
        Ok(out)
    }
}

/// Free reduction as a free function.
pub fn free_reduce(w: &Word) -> Word {
    w.free_reduce()
}

/// Homomorphic image of `w` under `map`.
pub fn apply_generator_map(w: &Word, map: &GeneratorMap) -> Result<Word> {
    w.apply_map(map)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names() -> Vec<String> {
        ["a", "b", "g"].iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn reduction_examples() {
        // g a a^-1 b -> g b
        let w = Word::from_signed(&[3, 1, -1, 2]);
        assert_eq!(w.free_reduce(), Word::from_signed(&[3, 2]));
        assert_eq!(Word::identity().free_reduce(), Word::identity());
        // (a b^-1)(b a^-1) -> 1
        assert!(Word::from_signed(&[1, -2, 2, -1]).free_reduce().is_empty());
    }

    #[test]
    fn display_round_trip() {
        let w = Word::from_signed(&[1, 1, -2, 3]);
        let s = w.display(&names());
        assert_eq!(s, "a^2 b^-1 g");
        assert_eq!(Word::parse(&s, &names()).unwrap(), w);
        assert_eq!(Word::identity().display(&names()), "1");
    }

    #[test]
    fn formal_inverse_under_iota_map() {
        // g_b -> g_a g_b^-1 g_a applied to g_b^-1 gives g_a^-1 g_b g_a^-1
        let mut m = GeneratorMap::identity(2);
        m.insert(1, Word::from_signed(&[1, -2, 1]));
        let img = Word::from_signed(&[-2]).apply_map(&m).unwrap();
        assert_eq!(img, Word::from_signed(&[-1, 2, -1]));
    }

    #[test]
    fn unmapped_generator_is_an_error() {
        let m = GeneratorMap::identity(1);
        assert!(Word::gen(1).apply_map(&m).is_err());
    }

    #[test]
    fn cyclic_reduction() {
        let w = Word::from_signed(&[2, 1, 3, -2]);
        assert_eq!(w.cyclic_reduce(), Word::from_signed(&[1, 3]));
    }
}
