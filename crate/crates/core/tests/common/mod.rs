//! Strategies and an independent normal-ordering oracle shared by the integration tests.

#![allow(dead_code)]

use proptest::prelude::*;
use xdstir::{q_bracket, Letter, LaurentPoly, NormalForm, Word};

/// Normal form by right multiplication, one letter at a time, using
/// `(x^i D^j) x = q^j x^(i+1) D^j + [j] x^i D^(j-1)` and `(x^i D^j) D = x^i D^(j+1)`.
pub fn normal_order_by_multiplication(w: &Word, q_deformed: bool) -> NormalForm {
    let mut nf = NormalForm::monomial(0, 0, LaurentPoly::one());
    for &l in w.letters() {
        let mut next = NormalForm::zero();
        for ((i, j), c) in nf.terms() {
            match l {
                Letter::D => next.add_term(i, j + 1, c),
                Letter::X => {
                    let (swap, bracket) = if q_deformed {
                        (LaurentPoly::q_pow(j as i64), q_bracket(j as i64))
                    } else {
                        (LaurentPoly::one(), LaurentPoly::constant(j as i64))
                    };
                    next.add_term(i + 1, j, &(c * &swap));
                    if j > 0 {
                        next.add_term(i, j - 1, &(c * &bracket));
                    }
                }
            }
        }
        nf = next;
    }
    nf
}

pub fn any_word(max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(any::<bool>(), 0..=max_len).prop_map(|bits| {
        Word::from_letters(bits.into_iter().map(|b| if b { Letter::X } else { Letter::D }).collect())
    })
}

/// Balanced words of semi-length at most `max_n`.
pub fn balanced_word(max_n: usize) -> impl Strategy<Value = Word> {
    (0..=max_n).prop_flat_map(|n| {
        prop::sample::subsequence((0..2 * n).collect::<Vec<_>>(), n).prop_map(move |xs| {
            Word::from_letters(
                (0..2 * n)
                    .map(|p| if xs.contains(&p) { Letter::X } else { Letter::D })
                    .collect(),
            )
        })
    })
}

pub fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-6i64..=6, -9i64..=9), 0..6).prop_map(LaurentPoly::from_terms)
}

pub fn nonzero_laurent() -> impl Strategy<Value = LaurentPoly> {
    laurent().prop_filter("nonzero", |p| !p.is_zero())
}
