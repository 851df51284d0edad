//! Normal ordering in the Weyl algebra `Dx - xD = 1` and its q-deformation `Dx - qxD = 1`,
//! and expansions of balanced words over the bases `x^k D^k`, `(xD)^k` and `x D^k x^(k-1)`.
//!
//! Every result carries [`LaurentPoly`] coefficients. With `q_deformed == false` the
//! rewrite uses `Dx -> xD + 1` and all coefficients are constants.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partitions::{binomial, factorial};
use crate::qpoly::{q_bracket, LaurentPoly};
use crate::words::{standard_factorize, Letter, Word};

/// Linear combination of normally ordered monomials `x^i D^j`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct NormalForm {
    terms: BTreeMap<(usize, usize), LaurentPoly>,
}

impl NormalForm {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(i: usize, j: usize, coef: LaurentPoly) -> Self {
        let mut nf = Self::zero();
        nf.add_term(i, j, &coef);
        nf
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, i: usize, j: usize) -> LaurentPoly {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    /// Terms keyed by `(x-degree, D-degree)`, ascending.
    pub fn terms(&self) -> impl Iterator<Item = ((usize, usize), &LaurentPoly)> {
        self.terms.iter().map(|(&m, c)| (m, c))
    }

    pub fn add_term(&mut self, i: usize, j: usize, coef: &LaurentPoly) {
        if coef.is_zero() {
            return;
        }
        let slot = self.terms.entry((i, j)).or_default();
        *slot += coef;
        if slot.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, other: &NormalForm, c: &LaurentPoly) {
        for (&(i, j), v) in &other.terms {
            self.add_term(i, j, &(v * c));
        }
    }

    pub fn sub(&self, other: &NormalForm) -> NormalForm {
        let mut out = self.clone();
        out.add_scaled(other, &LaurentPoly::constant(-1));
        out
    }

    pub fn scaled(&self, c: &LaurentPoly) -> NormalForm {
        let mut out = NormalForm::zero();
        out.add_scaled(self, c);
        out
    }

    /// Image under `q -> 1`.
    pub fn eval_at_one(&self) -> NormalForm {
        let mut out = NormalForm::zero();
        for (&(i, j), c) in &self.terms {
            out.add_term(i, j, &LaurentPoly::constant(c.eval_at_one()));
        }
        out
    }
}

fn monomial_text(i: usize, j: usize) -> String {
    let mut s = String::new();
    match i {
        0 => {}
        1 => s.push('x'),
        _ => s.push_str(&format!("x^{i}")),
    }
    match j {
        0 => {}
        1 => s.push('D'),
        _ => s.push_str(&format!("D^{j}")),
    }
    s
}

fn term_text(coef: &LaurentPoly, mono: &str) -> String {
    let single = coef.num_terms() == 1;
    if mono.is_empty() {
        return if single { coef.to_string() } else { format!("({coef})") };
    }
    if coef.is_one() {
        mono.to_string()
    } else if coef == &LaurentPoly::constant(-1) {
        format!("-{mono}")
    } else if single {
        format!("{coef}·{mono}")
    } else {
        format!("({coef})·{mono}")
    }
}

fn join_signed(parts: impl IntoIterator<Item = String>) -> String {
    let mut out = String::new();
    for (idx, part) in parts.into_iter().enumerate() {
        if idx == 0 {
            out.push_str(&part);
        } else if let Some(rest) = part.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(&part);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Highest monomial first, e.g. `q·xD + 1`.
impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts = self
            .terms
            .iter()
            .rev()
            .map(|(&(i, j), c)| term_text(c, &monomial_text(i, j)));
        f.write_str(&join_signed(parts))
    }
}

impl Serialize for NormalForm {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            x: usize,
            d: usize,
            coefficient: &'a LaurentPoly,
        }
        let terms: Vec<Term> = self
            .terms
            .iter()
            .rev()
            .map(|(&(x, d), coefficient)| Term { x, d, coefficient })
            .collect();
        terms.serialize(serializer)
    }
}

fn swap_factor(q_deformed: bool) -> LaurentPoly {
    if q_deformed {
        LaurentPoly::q_pow(1)
    } else {
        LaurentPoly::one()
    }
}

/// Normal form of `w` by exhaustive rewriting `Dx -> q·xD + 1`, reducing the leftmost
/// `Dx` of every pending word and merging identical words between rounds.
pub fn normal_order(w: &Word, q_deformed: bool) -> NormalForm {
    let factor = swap_factor(q_deformed);
    let mut result = NormalForm::zero();
    let mut pending: HashMap<Vec<Letter>, LaurentPoly> = HashMap::new();
    pending.insert(w.letters().to_vec(), LaurentPoly::one());

    while !pending.is_empty() {
        let mut next: HashMap<Vec<Letter>, LaurentPoly> = HashMap::with_capacity(pending.len() * 2);
        for (letters, coef) in pending {
            let redex = letters
                .windows(2)
                .position(|p| p == [Letter::D, Letter::X]);
            let Some(p) = redex else {
                let i = letters.iter().take_while(|&&l| l == Letter::X).count();
                result.add_term(i, letters.len() - i, &coef);
                continue;
            };
            let mut swapped = letters.clone();
            swapped.swap(p, p + 1);
            let mut deleted = letters;
            deleted.drain(p..p + 2);
            merge(&mut next, swapped, &coef * &factor);
            merge(&mut next, deleted, coef);
        }
        pending = next;
    }
    result
}

fn merge(map: &mut HashMap<Vec<Letter>, LaurentPoly>, key: Vec<Letter>, coef: LaurentPoly) {
    use std::collections::hash_map::Entry;
    match map.entry(key) {
        Entry::Occupied(mut e) => {
            *e.get_mut() += &coef;
            if e.get().is_zero() {
                e.remove();
            }
        }
        Entry::Vacant(e) => {
            if !coef.is_zero() {
                e.insert(coef);
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Basis {
    /// `x^k D^k`
    Normal,
    /// `(xD)^k`
    PowerXd,
    /// `x D^k x^(k-1)`, with the empty word at `k = 0`
    Lah,
}

impl Basis {
    pub const ALL: [Basis; 3] = [Basis::Normal, Basis::PowerXd, Basis::Lah];

    pub fn name(self) -> &'static str {
        match self {
            Basis::Normal => "normal",
            Basis::PowerXd => "power-xd",
            Basis::Lah => "lah",
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Basis {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Basis::ALL
            .into_iter()
            .find(|b| b.name() == s)
            .ok_or_else(|| format!("unknown basis {s:?} (expected normal, power-xd or lah)"))
    }
}

impl Serialize for Basis {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

pub fn basis_word(basis: Basis, k: usize) -> Word {
    match basis {
        Basis::Normal => Word::monomial(k, k),
        Basis::PowerXd => Word::xd_power(k),
        Basis::Lah if k == 0 => Word::empty(),
        Basis::Lah => {
            let mut letters = vec![Letter::X];
            letters.extend(std::iter::repeat_n(Letter::D, k));
            letters.extend(std::iter::repeat_n(Letter::X, k - 1));
            Word::from_letters(letters)
        }
    }
}

/// Signed coefficients `a_0..a_n` with `w = Σ a_k b_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expansion {
    pub word: Word,
    pub basis: Basis,
    pub q_deformed: bool,
    coeffs: Vec<LaurentPoly>,
}

impl Expansion {
    pub fn from_signed(word: Word, basis: Basis, q_deformed: bool, coeffs: Vec<LaurentPoly>) -> Self {
        Expansion {
            word,
            basis,
            q_deformed,
            coeffs,
        }
    }

    /// Builds from unsigned values `u_k`, applying `(-1)^(n-k)` for the alternating bases.
    pub fn from_unsigned(word: Word, basis: Basis, q_deformed: bool, unsigned: Vec<LaurentPoly>) -> Self {
        let n = unsigned.len() - 1;
        let coeffs = unsigned
            .into_iter()
            .enumerate()
            .map(|(k, u)| sign_for(basis, n, k, u))
            .collect();
        Expansion {
            word,
            basis,
            q_deformed,
            coeffs,
        }
    }

    pub fn n(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coefficients(&self) -> &[LaurentPoly] {
        &self.coeffs
    }

    /// Signed coefficient `a_k`; zero past `n`.
    pub fn coefficient(&self, k: usize) -> LaurentPoly {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// `u_k = (-1)^(n-k) a_k` for `PowerXd` and `Lah`; the plain coefficient for `Normal`.
    pub fn unsigned(&self, k: usize) -> LaurentPoly {
        sign_for(self.basis, self.n(), k, self.coefficient(k))
    }

    pub fn unsigned_all(&self) -> Vec<LaurentPoly> {
        (0..=self.n()).map(|k| self.unsigned(k)).collect()
    }

    /// The same expansion with every coefficient evaluated at `q = 1`.
    pub fn eval_at_one(&self) -> Expansion {
        Expansion {
            word: self.word.clone(),
            basis: self.basis,
            q_deformed: false,
            coeffs: self
                .coeffs
                .iter()
                .map(|c| LaurentPoly::constant(c.eval_at_one()))
                .collect(),
        }
    }

    /// `Σ a_k · NF(b_k)`.
    pub fn resubstitute(&self) -> NormalForm {
        let mut nf = NormalForm::zero();
        for (k, a) in self.coeffs.iter().enumerate() {
            nf.add_scaled(&normal_order(&basis_word(self.basis, k), self.q_deformed), a);
        }
        nf
    }
}

fn sign_for(basis: Basis, n: usize, k: usize, c: LaurentPoly) -> LaurentPoly {
    if basis != Basis::Normal && (n.saturating_sub(k)) % 2 == 1 {
        -c
    } else {
        c
    }
}

/// A header line, then one `k<TAB>signed coefficient` line per basis index.
impl fmt::Display for Expansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mode = if self.q_deformed { "q-deformed" } else { "q = 1" };
        writeln!(f, "word {}, basis {}, {mode}", self.word, self.basis)?;
        writeln!(f, "k\tcoefficient")?;
        for (k, c) in self.coeffs.iter().enumerate() {
            writeln!(f, "{k}\t{c}")?;
        }
        Ok(())
    }
}

impl Serialize for Expansion {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Expansion", 5)?;
        s.serialize_field("word", &self.word.to_string())?;
        s.serialize_field("basis", &self.basis)?;
        s.serialize_field("q_deformed", &self.q_deformed)?;
        s.serialize_field("n", &self.n())?;
        s.serialize_field("coefficients", &self.coeffs)?;
        s.end()
    }
}

/// Expands balanced words over a basis, caching basis normal forms across calls.
#[derive(Debug, Default)]
pub struct Expander {
    q_deformed: bool,
    cache: HashMap<(Basis, usize), NormalForm>,
}

impl Expander {
    pub fn new(q_deformed: bool) -> Self {
        Expander {
            q_deformed,
            cache: HashMap::new(),
        }
    }

    pub fn q_deformed(&self) -> bool {
        self.q_deformed
    }

    fn basis_nf(&mut self, basis: Basis, k: usize) -> &NormalForm {
        let q = self.q_deformed;
        self.cache
            .entry((basis, k))
            .or_insert_with(|| normal_order(&basis_word(basis, k), q))
    }

    pub fn expand(&mut self, w: &Word, basis: Basis) -> Result<Expansion> {
        w.require_balanced()?;
        let n = w.semi_length();
        let mut residual = normal_order(w, self.q_deformed);
        let stuck = |k| Error::NotExpandable {
            word: w.to_string(),
            basis,
            k,
        };
        let mut coeffs = vec![LaurentPoly::zero(); n + 1];
        for k in (0..=n).rev() {
            let target = residual.coefficient(k, k);
            if target.is_zero() {
                continue;
            }
            let b = self.basis_nf(basis, k).clone();
            let a = target.div_exact(&b.coefficient(k, k)).ok_or_else(|| stuck(k))?;
            residual.add_scaled(&b, &-&a);
            coeffs[k] = a;
        }
        if !residual.is_zero() {
            return Err(stuck(0));
        }
        Ok(Expansion::from_signed(w.clone(), basis, self.q_deformed, coeffs))
    }
}

/// One-shot expansion; see [`Expander`] for repeated use.
pub fn expand(w: &Word, basis: Basis, q_deformed: bool) -> Result<Expansion> {
    Expander::new(q_deformed).expand(w, basis)
}

fn q_weight(q_deformed: bool, exp: i64) -> LaurentPoly {
    if q_deformed {
        LaurentPoly::q_pow(exp)
    } else {
        LaurentPoly::one()
    }
}

/// Unsigned `(xD)^k`-coefficients of a Dyck word from the standard-factorization
/// recurrence: convolution over `w = μ w''` and the first-block rule
/// `u(μ, k1) = Σ_ℓ q^-ℓ · u(w', ℓ) · C(ℓ, k1-1)`.
pub fn stirling1_by_recurrence(w: &Word, q_deformed: bool) -> Result<Expansion> {
    w.require_dyck()?;
    let unsigned = stirling1_unsigned(w, q_deformed);
    Ok(Expansion::from_unsigned(w.clone(), Basis::PowerXd, q_deformed, unsigned))
}

fn stirling1_unsigned(w: &Word, q_deformed: bool) -> Vec<LaurentPoly> {
    if w.is_empty() {
        return vec![LaurentPoly::one()];
    }
    let f = standard_factorize(w).expect("Dyck word");
    let m = f.block_semi_length();
    let inner = stirling1_unsigned(&f.inner, q_deformed);
    let mut block = vec![LaurentPoly::zero(); m + 1];
    for (k1, slot) in block.iter_mut().enumerate().skip(1) {
        for (l, u) in inner.iter().enumerate().skip(k1 - 1) {
            let c = binomial(l as u64, (k1 - 1) as u64);
            *slot += &(u * &q_weight(q_deformed, -(l as i64))).scale(&c);
        }
    }
    let rest = stirling1_unsigned(&f.rest, q_deformed);
    convolve(&block, &rest)
}

fn convolve(a: &[LaurentPoly], b: &[LaurentPoly]) -> Vec<LaurentPoly> {
    let mut out = vec![LaurentPoly::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += &(x * y);
        }
    }
    out
}

/// Unsigned Lah coefficients of a Dyck word (`q = 1`) from the standard-factorization
/// recurrence.
pub fn lah_by_recurrence(w: &Word) -> Result<Expansion> {
    w.require_dyck()?;
    let unsigned = lah_unsigned(w).into_iter().map(LaurentPoly::constant).collect();
    Ok(Expansion::from_unsigned(w.clone(), Basis::Lah, false, unsigned))
}

fn lah_unsigned(w: &Word) -> Vec<BigInt> {
    if w.is_empty() {
        return vec![BigInt::from(1)];
    }
    let f = standard_factorize(w).expect("Dyck word");
    let m = f.block_semi_length();
    let inner = lah_unsigned(&f.inner);
    let at = |l: usize| inner.get(l).cloned().unwrap_or_default();

    // first block: <w',k1-1> + 2 k1 <w',k1> + (k1 + k1^2) <w',k1+1>
    let mut block = vec![BigInt::zero(); m + 1];
    for (k1, slot) in block.iter_mut().enumerate().skip(1) {
        let k = BigInt::from(k1);
        *slot = at(k1 - 1) + &k * 2 * at(k1) + (&k + &k * &k) * at(k1 + 1);
    }

    let rest = lah_unsigned(&f.rest);
    let n = m + rest.len() - 1;
    let mut out = vec![BigInt::zero(); n + 1];
    for (k1, a) in block.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (k2, b) in rest.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            // merging j = k1 + k2 - k pairs of forests
            for j in 0..=k1.min(k2) {
                let k = k1 + k2 - j;
                if k == 0 || k > n {
                    continue;
                }
                let c = binomial(k1 as u64, j as u64) * binomial(k2 as u64, j as u64) * factorial(j as u64);
                out[k] += a * b * c;
            }
        }
    }
    if n > 0 {
        out[0] = BigInt::zero();
    }
    out
}

/// `x^m D^n = Σ_j (-1)^j C(m,j) C(n,j) j! · D^(n-j) x^(m-j)`: the coefficient for each `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AntiNormalExpansion {
    pub m: usize,
    pub n: usize,
    pub coeffs: Vec<BigInt>,
}

impl AntiNormalExpansion {
    /// `(D-power, x-power, coefficient)` per `j`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(j, c)| (self.n - j, self.m - j, c))
    }

    /// Normal form of the right-hand side, for comparison against `x^m D^n`.
    pub fn normal_form(&self) -> NormalForm {
        let mut nf = NormalForm::zero();
        for (dp, xp, c) in self.terms() {
            let mut letters = vec![Letter::D; dp];
            letters.extend(std::iter::repeat_n(Letter::X, xp));
            let w = Word::from_letters(letters);
            nf.add_scaled(&normal_order(&w, false), &LaurentPoly::constant(c.clone()));
        }
        nf
    }
}

pub fn commute_xmdn(m: usize, n: usize) -> AntiNormalExpansion {
    let coeffs = (0..=m.min(n))
        .map(|j| {
            let c = binomial(m as u64, j as u64) * binomial(n as u64, j as u64) * factorial(j as u64);
            if j % 2 == 1 {
                -c
            } else {
                c
            }
        })
        .collect();
    AntiNormalExpansion { m, n, coeffs }
}

fn triangle<F>(n: usize, mut step: F) -> Vec<LaurentPoly>
where
    F: FnMut(usize, usize, &[LaurentPoly]) -> LaurentPoly,
{
    let mut row = vec![LaurentPoly::one()];
    for i in 1..=n {
        let next: Vec<LaurentPoly> = (0..=i).map(|k| step(i, k, &row)).collect();
        row = next;
    }
    row
}

fn at(row: &[LaurentPoly], k: usize) -> LaurentPoly {
    row.get(k).cloned().unwrap_or_default()
}

/// Row `n` of the q-Stirling numbers of the second kind attached to the `x D^k x^(k-1)`
/// expansion of `(xD)^n`.
pub fn bar_qstirling2_row(n: usize) -> Vec<LaurentPoly> {
    triangle(n, |_, k, prev| {
        if k == 0 {
            return LaurentPoly::zero();
        }
        let k_i = k as i64;
        &at(prev, k - 1).shift(-(k_i - 1)) + &(&q_bracket(k_i) * &at(prev, k)).shift(-k_i)
    })
}

pub fn bar_qstirling2(n: usize, k: usize) -> LaurentPoly {
    at(&bar_qstirling2_row(n), k)
}

/// Row `n` of the q-Lah numbers attached to the `x D^k x^(k-1)` expansion of `x^n D^n`.
pub fn qlah_row(n: usize) -> Vec<LaurentPoly> {
    let one_plus_q = LaurentPoly::from_terms([(0, 1), (1, 1)]);
    triangle(n, |_, k, prev| {
        if k == 0 {
            return LaurentPoly::zero();
        }
        let k_i = k as i64;
        let t1 = at(prev, k - 1).shift(-(2 * k_i - 2));
        let t2 = (&(&one_plus_q * &q_bracket(k_i)) * &at(prev, k)).shift(-2 * k_i);
        let t3 = (&(&q_bracket(k_i) * &q_bracket(k_i + 1)) * &at(prev, k + 1)).shift(-(2 * k_i + 1));
        &(&t1 + &t2) + &t3
    })
}

pub fn qlah(n: usize, k: usize) -> LaurentPoly {
    at(&qlah_row(n), k)
}

/// Row `n` of Carlitz's q-Stirling numbers of the second kind.
pub fn carlitz_qstirling2_row(n: usize) -> Vec<LaurentPoly> {
    triangle(n, |_, k, prev| {
        if k == 0 {
            return LaurentPoly::zero();
        }
        let k_i = k as i64;
        &at(prev, k - 1).shift(k_i - 1) + &(&q_bracket(k_i) * &at(prev, k))
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QReductionReport {
    pub n: usize,
    /// `x D^n = q^-n (D^n x - [n] D^(n-1))`
    pub x_past_d_power: bool,
    /// `x^n D = q^-n (D x^n - [n] x^(n-1))`
    pub x_power_past_d: bool,
}

impl QReductionReport {
    pub fn passed(&self) -> bool {
        self.x_past_d_power && self.x_power_past_d
    }
}

fn word_of(parts: &[(Letter, usize)]) -> Word {
    let mut letters = Vec::new();
    for &(l, k) in parts {
        letters.extend(std::iter::repeat_n(l, k));
    }
    Word::from_letters(letters)
}

/// Checks both q-commutation identities for `x` against `D^n` by normal ordering each side.
pub fn qreduction_identities_check(n: usize) -> QReductionReport {
    use Letter::{D, X};
    let nf = |parts: &[(Letter, usize)]| normal_order(&word_of(parts), true);
    let scale = LaurentPoly::q_pow(-(n as i64));
    let bracket = q_bracket(n as i64);

    let lhs = nf(&[(X, 1), (D, n)]);
    let mut rhs = nf(&[(D, n), (X, 1)]);
    rhs.add_scaled(&nf(&[(D, n.saturating_sub(1))]), &-&bracket);
    let first = lhs == rhs.scaled(&scale);

    let lhs = nf(&[(X, n), (D, 1)]);
    let mut rhs = nf(&[(D, 1), (X, n)]);
    rhs.add_scaled(&nf(&[(X, n.saturating_sub(1))]), &-&bracket);
    let second = lhs == rhs.scaled(&scale);

    QReductionReport {
        n,
        x_past_d_power: first,
        x_power_past_d: second,
    }
}
