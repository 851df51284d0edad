//! Ferrers boards of words, rook placements, and rook factorization.
//!
//! Rows are numbered `1..=n` bottom to top and columns `1..=n` left to right; cell `(i, j)`
//! lies on the board iff `i <= c_j`.
//!
//! Statistics, as calibrated against the worked examples for `xxDxxDDD`:
//! - `inv` on a full placement counts cells holding a black rook, plus empty cells with no
//!   rook above in their column and no rook to their left in their row. Cells holding a
//!   white rook never count.
//! - `inv'` on the truncated board counts cells holding a rook, plus empty cells with no
//!   rook above and none to the left.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partitions::{binomial, factorial};
use crate::qpoly::{q_bracket, LaurentPoly};
use crate::weyl::{expand, Basis};
use crate::words::{height_profile, Word};
use crate::zpoly::IntPoly;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FerrersBoard {
    heights: Vec<usize>,
}

impl FerrersBoard {
    /// Column heights must be weakly increasing and at most the number of columns.
    pub fn new(heights: Vec<usize>) -> Result<Self> {
        let n = heights.len();
        if heights.windows(2).any(|p| p[0] > p[1]) || heights.iter().any(|&c| c > n) {
            return Err(Error::Inconsistent(format!("invalid column heights {heights:?}")));
        }
        Ok(FerrersBoard { heights })
    }

    pub fn n(&self) -> usize {
        self.heights.len()
    }

    pub fn column_heights(&self) -> &[usize] {
        &self.heights
    }

    pub fn num_cells(&self) -> usize {
        self.heights.iter().sum()
    }

    pub fn contains(&self, row: usize, col: usize) -> bool {
        row >= 1 && col >= 1 && col <= self.n() && row <= self.heights[col - 1]
    }

    /// The board with its bottom row removed.
    pub fn truncated(&self) -> TruncatedBoard {
        TruncatedBoard {
            board: FerrersBoard {
                heights: self.heights.iter().map(|c| c.saturating_sub(1)).collect(),
            },
        }
    }

    fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.heights
            .iter()
            .enumerate()
            .flat_map(|(j, &c)| (1..=c).map(move |i| (i, j + 1)))
    }
}

/// `B*`: a board with its bottom row removed, re-indexed so the old row 2 is row 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruncatedBoard {
    board: FerrersBoard,
}

impl TruncatedBoard {
    pub fn board(&self) -> &FerrersBoard {
        &self.board
    }
}

/// Rooks as `(row, column)` sorted by column, with a colour for each.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RookPlacement {
    board: Vec<usize>,
    rooks: Vec<(usize, usize)>,
    white: Vec<bool>,
    inv: u64,
}

impl RookPlacement {
    pub fn rooks(&self) -> &[(usize, usize)] {
        &self.rooks
    }

    pub fn is_white(&self, idx: usize) -> bool {
        self.white[idx]
    }

    pub fn num_white(&self) -> usize {
        self.white.iter().filter(|&&w| w).count()
    }

    pub fn num_black(&self) -> usize {
        self.rooks.len() - self.num_white()
    }

    /// `inv` for full placements, `inv'` for truncated ones.
    pub fn inv(&self) -> u64 {
        self.inv
    }

    pub fn weight(&self) -> LaurentPoly {
        LaurentPoly::q_pow(-(self.inv as i64))
    }
}

impl Serialize for RookPlacement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct J<'a> {
            board: &'a [usize],
            rooks: Vec<[usize; 2]>,
            white: Vec<usize>,
            inv: u64,
        }
        J {
            board: &self.board,
            rooks: self.rooks.iter().map(|&(r, c)| [r, c]).collect(),
            white: (0..self.rooks.len()).filter(|&i| self.white[i]).collect(),
            inv: self.inv,
        }
        .serialize(s)
    }
}

pub fn board_from_word(w: &Word) -> Result<FerrersBoard> {
    let h = height_profile(w)?;
    Ok(FerrersBoard {
        heights: h.column_heights,
    })
}

/// A rook is white iff no rook lies strictly south-east of it.
fn colours(rooks: &[(usize, usize)]) -> Vec<bool> {
    rooks
        .iter()
        .map(|&(r, c)| !rooks.iter().any(|&(r2, c2)| r2 < r && c2 > c))
        .collect()
}

/// Empty cell with no rook above it in its column and none to its left in its row.
fn open_cell(rooks: &[(usize, usize)], i: usize, j: usize) -> bool {
    !rooks.iter().any(|&(r, c)| (c == j && r > i) || (r == i && c < j))
}

fn full_inv(b: &FerrersBoard, rooks: &[(usize, usize)], white: &[bool]) -> u64 {
    b.cells()
        .filter(|&(i, j)| match rooks.iter().position(|&rc| rc == (i, j)) {
            Some(idx) => !white[idx],
            None => open_cell(rooks, i, j),
        })
        .count() as u64
}

fn truncated_inv(b: &FerrersBoard, rooks: &[(usize, usize)]) -> u64 {
    b.cells()
        .filter(|&(i, j)| rooks.contains(&(i, j)) || open_cell(rooks, i, j))
        .count() as u64
}

/// All `n`-rook placements on `b` with exactly `white_count` white rooks, columns left to
/// right and rows ascending within each column.
pub fn enumerate_full_placements(b: &FerrersBoard, white_count: usize) -> Vec<RookPlacement> {
    fn go(b: &FerrersBoard, col: usize, used: &mut Vec<bool>, rooks: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        if col > b.n() {
            out.push(rooks.clone());
            return;
        }
        for row in 1..=b.heights[col - 1] {
            if !used[row] {
                used[row] = true;
                rooks.push((row, col));
                go(b, col + 1, used, rooks, out);
                rooks.pop();
                used[row] = false;
            }
        }
    }
    let mut all = Vec::new();
    go(b, 1, &mut vec![false; b.n() + 1], &mut Vec::new(), &mut all);
    all.into_iter()
        .filter_map(|rooks| {
            let white = colours(&rooks);
            if white.iter().filter(|&&w| w).count() != white_count {
                return None;
            }
            let inv = full_inv(b, &rooks, &white);
            Some(RookPlacement {
                board: b.heights.clone(),
                rooks,
                white,
                inv,
            })
        })
        .collect()
}

/// All `k`-rook placements on the truncated board of `w`. Within each column the empty
/// choice comes first, then rows ascending.
pub fn enumerate_truncated_placements(w: &Word, k: usize) -> Result<Vec<RookPlacement>> {
    w.require_x_initial()?;
    let t = board_from_word(w)?.truncated();
    Ok(placements_on(t.board(), k))
}

fn placements_on(b: &FerrersBoard, k: usize) -> Vec<RookPlacement> {
    fn go(
        b: &FerrersBoard,
        col: usize,
        left: usize,
        used: &mut Vec<bool>,
        rooks: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if left > b.n() + 1 - col {
            return;
        }
        if col > b.n() {
            out.push(rooks.clone());
            return;
        }
        go(b, col + 1, left, used, rooks, out);
        if left == 0 {
            return;
        }
        for row in 1..=b.heights[col - 1] {
            if !used[row] {
                used[row] = true;
                rooks.push((row, col));
                go(b, col + 1, left - 1, used, rooks, out);
                rooks.pop();
                used[row] = false;
            }
        }
    }
    let mut all = Vec::new();
    go(b, 1, k, &mut vec![false; b.n() + 1], &mut Vec::new(), &mut all);
    all.into_iter()
        .map(|rooks| {
            let inv = truncated_inv(b, &rooks);
            RookPlacement {
                board: b.heights.clone(),
                white: vec![false; rooks.len()],
                rooks,
                inv,
            }
        })
        .collect()
}

fn weigh(placements: &[RookPlacement], q_deformed: bool) -> LaurentPoly {
    if q_deformed {
        placements.iter().map(RookPlacement::weight).sum()
    } else {
        LaurentPoly::constant(placements.len() as i64)
    }
}

/// `r_q(w, k)`: weighted full placements with `k` white rooks.
pub fn rook_stirling1(w: &Word, k: usize, q_deformed: bool) -> Result<LaurentPoly> {
    w.require_dyck()?;
    let b = board_from_word(w)?;
    Ok(weigh(&enumerate_full_placements(&b, k), q_deformed))
}

/// `u_q(w, n - k)`: weighted `(n - k)`-rook placements on the truncated board.
pub fn rook_lah(w: &Word, k: usize, q_deformed: bool) -> Result<LaurentPoly> {
    w.require_x_initial()?;
    let n = w.semi_length();
    match n.checked_sub(k) {
        Some(r) => Ok(weigh(&enumerate_truncated_placements(w, r)?, q_deformed)),
        None => Ok(LaurentPoly::zero()),
    }
}

fn shifted_heights(w: &Word) -> Result<Vec<i64>> {
    let b = board_from_word(w)?;
    Ok(b.heights
        .iter()
        .enumerate()
        .map(|(i, &c)| c as i64 - (i as i64 + 1))
        .collect())
}

/// `∏_i (z - c_i + i)`.
pub fn factor_polynomial(w: &Word) -> Result<IntPoly> {
    Ok(IntPoly::from_roots(shifted_heights(w)?))
}

/// `e_{n-k}(c_1 - 1, ..., c_n - n)`.
pub fn stirling1_by_esym(w: &Word, k: usize) -> Result<BigInt> {
    w.require_dyck()?;
    let h = shifted_heights(w)?;
    // e_j via the recurrence over the variables
    let mut e = vec![BigInt::zero(); h.len() + 1];
    e[0] = BigInt::one();
    for (m, x) in h.iter().enumerate() {
        for j in (1..=m + 1).rev() {
            let t = &e[j - 1] * x;
            e[j] += t;
        }
    }
    Ok(h.len().checked_sub(k).map_or_else(BigInt::zero, |j| e[j].clone()))
}

/// `(1/k!) Σ_i (-1)^{n-i} C(k, i) P(i - k)` with `P` the factor polynomial.
pub fn lah_by_difference(w: &Word, k: usize) -> Result<BigInt> {
    w.require_x_initial()?;
    let n = w.semi_length();
    let p = factor_polynomial(w)?;
    let sum: BigInt = (0..=k)
        .map(|i| {
            let term = binomial(k as u64, i as u64) * p.eval(&BigInt::from(i as i64 - k as i64));
            if (n + i) % 2 == 1 { -term } else { term }
        })
        .sum();
    let kf = factorial(k as u64);
    if !(&sum % &kf).is_zero() || sum.is_negative() {
        return Err(Error::Inconsistent(format!(
            "difference formula for {w}, k = {k} gives {sum}, not a non-negative multiple of {kf}"
        )));
    }
    Ok(sum / kf)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorizationReport {
    pub word: Word,
    pub basis: Basis,
    /// `(z, passed)` for `z = 0..=n`
    pub samples: Vec<(i64, bool)>,
}

impl FactorizationReport {
    pub fn passed(&self) -> bool {
        self.samples.iter().all(|&(_, ok)| ok)
    }
}

/// Compares `Σ_k (signed coefficient) · (bracket product)` with `∏ [z - c_i + i]_q` at
/// `z = 0..=n`. Both sides are polynomials of degree at most `n` in `[z]_q`, so `n + 1`
/// distinct sample points determine them.
pub fn q_factorization_check(w: &Word, basis: Basis) -> Result<FactorizationReport> {
    match basis {
        Basis::PowerXd => w.require_dyck()?,
        Basis::Lah => w.require_x_initial()?,
        Basis::Normal => {
            return Err(Error::Inconsistent(
                "factorization is defined for the power-xd and lah bases".into(),
            ))
        }
    }
    let e = expand(w, basis, true)?;
    let shifts = shifted_heights(w)?;
    let n = w.semi_length() as i64;
    let samples = (0..=n)
        .map(|z| {
            let rhs = shifts
                .iter()
                .fold(LaurentPoly::one(), |acc, h| &acc * &q_bracket(z - h));
            let lhs: LaurentPoly = e
                .coefficients()
                .iter()
                .enumerate()
                .map(|(k, c)| {
                    let bracket = match basis {
                        Basis::PowerXd => q_bracket(z).pow(k),
                        _ => (0..k as i64).fold(LaurentPoly::one(), |acc, i| &acc * &q_bracket(z + i)),
                    };
                    c * &bracket
                })
                .sum();
            (z, lhs == rhs)
        })
        .collect();
    Ok(FactorizationReport {
        word: w.clone(),
        basis,
        samples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    const OMEGA: &str = "xxDxxDDD";

    #[test]
    fn boards() {
        assert_eq!(board_from_word(&w(OMEGA)).unwrap().column_heights(), &[2, 4, 4, 4]);
        assert_eq!(board_from_word(&w("xDxD")).unwrap().column_heights(), &[1, 2]);
        assert_eq!(board_from_word(&w("xD")).unwrap().column_heights(), &[1]);
        assert!(board_from_word(&w("xxD")).is_err());
        let t = board_from_word(&w(OMEGA)).unwrap().truncated();
        assert_eq!(t.board().column_heights(), &[1, 3, 3, 3]);
    }

    #[test]
    fn full_placements_of_omega() {
        let b = board_from_word(&w(OMEGA)).unwrap();
        let r3 = enumerate_full_placements(&b, 3);
        assert_eq!(r3.len(), 4);
        let total: LaurentPoly = r3.iter().map(RookPlacement::weight).sum();
        assert_eq!(total, p("3q^-4 + q^-3"));
        assert_eq!(r3.iter().filter(|pl| pl.inv() == 4).count(), 3);
        let sizes: Vec<usize> = (0..=4).map(|k| enumerate_full_placements(&b, k).len()).collect();
        assert_eq!(sizes, vec![0, 2, 5, 4, 1]);
        for k in 0..=4 {
            for pl in enumerate_full_placements(&b, k) {
                assert_eq!(pl.num_white() + pl.num_black(), 4);
                assert!(pl.rooks().iter().all(|&(r, c)| b.contains(r, c)));
            }
        }
    }

    #[test]
    fn single_cell() {
        let b = board_from_word(&w("xD")).unwrap();
        let pl = enumerate_full_placements(&b, 1);
        assert_eq!(pl.len(), 1);
        assert_eq!(pl[0].inv(), 0);
        assert_eq!(rook_stirling1(&w("xD"), 1, true).unwrap(), LaurentPoly::one());
        assert_eq!(rook_lah(&w("xD"), 1, true).unwrap(), LaurentPoly::one());
    }

    #[test]
    fn rook_stirling_examples() {
        let o = w(OMEGA);
        assert_eq!(rook_stirling1(&o, 3, true).unwrap(), p("3q^-4 + q^-3"));
        assert_eq!(rook_stirling1(&o, 2, false).unwrap(), LaurentPoly::constant(5));
        assert_eq!(rook_stirling1(&o, 4, true).unwrap(), p("q^-4"));
        assert_eq!(rook_stirling1(&o, 1, true).unwrap(), p("q^-4 + q^-3"));
        assert!(rook_stirling1(&w("xDDx"), 1, true).is_err());
    }

    #[test]
    fn truncated_examples() {
        let o = w(OMEGA);
        let one = enumerate_truncated_placements(&o, 1).unwrap();
        assert_eq!(one.len(), 10);
        let total: LaurentPoly = one.iter().map(RookPlacement::weight).sum();
        assert_eq!(total, p("q^-10 + 2q^-9 + 3q^-8 + 3q^-7 + q^-6"));
        let empty = enumerate_truncated_placements(&o, 0).unwrap();
        assert_eq!(empty.len(), 1);
        assert_eq!(empty[0].inv(), 10);
        let two = enumerate_truncated_placements(&o, 2).unwrap();
        assert!(two.iter().any(|pl| pl.inv() == 6));
        assert!(enumerate_truncated_placements(&w("DxxD"), 1).is_err());
    }

    #[test]
    fn rook_lah_examples() {
        let o = w(OMEGA);
        assert_eq!(rook_lah(&o, 3, true).unwrap(), p("q^-10 + 2q^-9 + 3q^-8 + 3q^-7 + q^-6"));
        assert_eq!(rook_lah(&o, 2, false).unwrap(), LaurentPoly::constant(24));
        assert_eq!(rook_lah(&o, 4, true).unwrap(), p("q^-10"));
        assert_eq!(rook_lah(&o, 2, true).unwrap(), p("2q^-4 + 5q^-5 + 7q^-6 + 6q^-7 + 3q^-8 + q^-9"));
        assert_eq!(rook_lah(&o, 1, true).unwrap(), p("q^-3 + 3q^-4 + 4q^-5 + 3q^-6 + q^-7"));
    }

    #[test]
    fn factorization_examples() {
        assert_eq!(factor_polynomial(&w(OMEGA)).unwrap().to_string(), "z^4 - 4z^3 + 5z^2 - 2z");
        assert_eq!(factor_polynomial(&w("xD")).unwrap().to_string(), "z");
        assert_eq!(factor_polynomial(&w("xxDD")).unwrap().to_string(), "z^2 - z");
        let o = w(OMEGA);
        assert_eq!(stirling1_by_esym(&o, 2).unwrap(), BigInt::from(5));
        assert_eq!(stirling1_by_esym(&o, 1).unwrap(), BigInt::from(2));
        assert_eq!(stirling1_by_esym(&o, 4).unwrap(), BigInt::from(1));
        assert_eq!(lah_by_difference(&w("xD"), 1).unwrap(), BigInt::from(1));
        assert_eq!(lah_by_difference(&o, 2).unwrap(), BigInt::from(24));
        assert_eq!(lah_by_difference(&o, 4).unwrap(), BigInt::from(1));
        assert_eq!(lah_by_difference(&o, 1).unwrap(), BigInt::from(12));
        assert_eq!(lah_by_difference(&o, 3).unwrap(), BigInt::from(10));
    }

    #[test]
    fn q_factorization_examples() {
        assert!(q_factorization_check(&w("xD"), Basis::PowerXd).unwrap().passed());
        assert!(q_factorization_check(&w(OMEGA), Basis::PowerXd).unwrap().passed());
        assert!(q_factorization_check(&w(OMEGA), Basis::Lah).unwrap().passed());
        assert!(q_factorization_check(&w("xDDx"), Basis::Lah).unwrap().passed());
        assert!(q_factorization_check(&w("xDDx"), Basis::PowerXd).is_err());
        assert!(q_factorization_check(&w(OMEGA), Basis::Normal).is_err());
    }

    #[test]
    fn placement_json() {
        let b = board_from_word(&w("xD")).unwrap();
        let pl = &enumerate_full_placements(&b, 1)[0];
        assert_eq!(
            serde_json::to_string(pl).unwrap(),
            r#"{"board":[1],"rooks":[[1,1]],"white":[0],"inv":0}"#
        );
    }
}
