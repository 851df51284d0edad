//! Words over the alphabet `{x, D}` and the lattice-path geometry attached to them.
//!
//! A word is read as a lattice path from `(0,0)`: `x` is a north step and `D` an east
//! step. D-steps are labeled `1..=n` from left to right; x-steps are referred to by
//! their 0-based position in the word.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    X,
    D,
}

impl Letter {
    pub fn as_char(self) -> char {
        match self {
            Letter::X => 'x',
            Letter::D => 'D',
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn parse(text: &str) -> Result<Self> {
        text.chars()
            .enumerate()
            .map(|(index, c)| match c {
                'x' => Ok(Letter::X),
                'D' => Ok(Letter::D),
                found => Err(Error::Parse { index, found }),
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    /// `x^i D^j`.
    pub fn monomial(i: usize, j: usize) -> Self {
        let mut letters = vec![Letter::X; i];
        letters.extend(std::iter::repeat_n(Letter::D, j));
        Word(letters)
    }

    /// `(xD)^k`.
    pub fn xd_power(k: usize) -> Self {
        Word([Letter::X, Letter::D].repeat(k))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    pub fn count_x(&self) -> usize {
        self.0.iter().filter(|&&l| l == Letter::X).count()
    }

    pub fn count_d(&self) -> usize {
        self.0.len() - self.count_x()
    }

    /// Semi-length of a balanced word (number of D's).
    pub fn semi_length(&self) -> usize {
        self.count_d()
    }

    pub fn classify(&self) -> BalanceProfile {
        classify(self)
    }

    pub fn is_dyck(&self) -> bool {
        classify(self).is_dyck
    }

    pub fn is_balanced(&self) -> bool {
        classify(self).is_balanced
    }

    pub(crate) fn require_balanced(&self) -> Result<()> {
        if self.is_balanced() {
            Ok(())
        } else {
            Err(Error::Unbalanced(self.to_string()))
        }
    }

    pub(crate) fn require_dyck(&self) -> Result<()> {
        if self.is_dyck() {
            Ok(())
        } else {
            Err(Error::NotDyck(self.to_string()))
        }
    }

    /// Balanced and either empty or starting with `x`.
    pub(crate) fn require_x_initial(&self) -> Result<()> {
        self.require_balanced()?;
        match self.0.first() {
            None | Some(Letter::X) => Ok(()),
            Some(Letter::D) => Err(Error::NotXInitial(self.to_string())),
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Word::parse(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BalanceProfile {
    pub num_x: usize,
    pub num_d: usize,
    pub is_balanced: bool,
    pub is_dyck: bool,
    pub starts_with_x: bool,
}

pub fn classify(w: &Word) -> BalanceProfile {
    let mut excess: i64 = 0;
    let mut prefix_ok = true;
    for l in w.letters() {
        excess += if *l == Letter::X { 1 } else { -1 };
        if excess < 0 {
            prefix_ok = false;
        }
    }
    let num_x = w.count_x();
    let num_d = w.count_d();
    let is_balanced = num_x == num_d;
    BalanceProfile {
        num_x,
        num_d,
        is_balanced,
        is_dyck: is_balanced && prefix_ok,
        starts_with_x: w.letters().first() == Some(&Letter::X),
    }
}

/// `w = x · inner · D · rest`, split at the first return of the path to the diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardFactorization {
    pub first_block: Word,
    pub inner: Word,
    pub rest: Word,
}

impl StandardFactorization {
    /// Semi-length of the first block.
    pub fn block_semi_length(&self) -> usize {
        self.inner.semi_length() + 1
    }
}

pub fn standard_factorize(w: &Word) -> Result<StandardFactorization> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    w.require_dyck()?;
    let letters = w.letters();
    let mut excess = 0i64;
    let end = letters
        .iter()
        .position(|l| {
            excess += if *l == Letter::X { 1 } else { -1 };
            excess == 0
        })
        .expect("balanced word returns to the diagonal");
    Ok(StandardFactorization {
        first_block: Word(letters[..=end].to_vec()),
        inner: Word(letters[1..end].to_vec()),
        rest: Word(letters[end + 1..].to_vec()),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeightProfile {
    /// `c_i`: number of x's preceding the i-th D.
    pub column_heights: Vec<usize>,
    /// `h_i = c_i - i`; negative only for non-Dyck words.
    pub east_heights: Vec<i64>,
}

pub fn height_profile(w: &Word) -> Result<HeightProfile> {
    w.require_balanced()?;
    let mut xs = 0usize;
    let mut column_heights = Vec::with_capacity(w.semi_length());
    for l in w.letters() {
        match l {
            Letter::X => xs += 1,
            Letter::D => column_heights.push(xs),
        }
    }
    let east_heights = column_heights
        .iter()
        .enumerate()
        .map(|(i, &c)| c as i64 - (i as i64 + 1))
        .collect();
    Ok(HeightProfile {
        column_heights,
        east_heights,
    })
}

/// Tunnels of a Dyck word as `(x position, D label)` pairs, ordered by D label.
pub fn tunnel_matching(w: &Word) -> Result<Vec<(usize, usize)>> {
    w.require_dyck()?;
    let mut open = Vec::new();
    let mut pairs = Vec::with_capacity(w.semi_length());
    let mut label = 0;
    for (pos, l) in w.letters().iter().enumerate() {
        match l {
            Letter::X => open.push(pos),
            Letter::D => {
                label += 1;
                let x = open.pop().expect("Dyck prefix condition");
                pairs.push((x, label));
            }
        }
    }
    Ok(pairs)
}

/// All Dyck words of semi-length `n`, in lexicographic order with `x < D`.
pub fn dyck_words(n: usize) -> Vec<Word> {
    balanced_words(n).into_iter().filter(Word::is_dyck).collect()
}

/// All words with `n` x's and `n` D's, in lexicographic order with `x < D`.
pub fn balanced_words(n: usize) -> Vec<Word> {
    fn go(xs: usize, ds: usize, cur: &mut Vec<Letter>, out: &mut Vec<Word>) {
        if xs == 0 && ds == 0 {
            out.push(Word(cur.clone()));
            return;
        }
        if xs > 0 {
            cur.push(Letter::X);
            go(xs - 1, ds, cur, out);
            cur.pop();
        }
        if ds > 0 {
            cur.push(Letter::D);
            go(xs, ds - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::with_capacity(2 * n), &mut out);
    out
}

/// Balanced words of semi-length `n` that start with `x` (the empty word when `n == 0`).
pub fn x_initial_words(n: usize) -> Vec<Word> {
    balanced_words(n)
        .into_iter()
        .filter(|w| w.letters().first() != Some(&Letter::D))
        .collect()
}
