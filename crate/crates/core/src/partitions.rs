//! Set partitions and the classical Stirling and Lah numbers.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::qpoly::LaurentPoly;

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// Blocks ordered by least element; elements within a block ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SetPartition {
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    /// Normalizes block order; fails on empty blocks or a non-cover of `1..=n`.
    pub fn new(mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort_by_key(|b| b.first().copied());
        let mut all: Vec<usize> = blocks.iter().flatten().copied().collect();
        all.sort_unstable();
        if blocks.iter().any(Vec::is_empty) || all != (1..=all.len()).collect::<Vec<_>>() {
            return Err(Error::PartitionParse(format!("{blocks:?}")));
        }
        Ok(SetPartition { blocks })
    }

    /// From a restricted growth string `a_1..a_n` with `a_1 = 0`.
    fn from_rgs(rgs: &[usize]) -> Self {
        let k = rgs.iter().max().map_or(0, |m| m + 1);
        let mut blocks = vec![Vec::new(); k];
        for (i, &b) in rgs.iter().enumerate() {
            blocks[b].push(i + 1);
        }
        SetPartition { blocks }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn n(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }
}

/// `127|3|489|56`; elements are comma-separated inside a block once `n > 9`.
impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.n() > 9 { "," } else { "" };
        let text: Vec<String> = self
            .blocks
            .iter()
            .map(|b| b.iter().map(usize::to_string).collect::<Vec<_>>().join(sep))
            .collect();
        f.write_str(&text.join("|"))
    }
}

impl FromStr for SetPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::PartitionParse(s.to_string());
        let comma = s.contains(',');
        let blocks = s
            .split('|')
            .map(|b| {
                if comma {
                    b.split(',').map(|t| t.trim().parse().map_err(|_| bad())).collect()
                } else {
                    b.chars()
                        .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
                        .collect()
                }
            })
            .collect::<Result<Vec<Vec<usize>>>>()?;
        SetPartition::new(blocks).map_err(|_| bad())
    }
}

/// All partitions of `1..=n` into `k` blocks, in restricted-growth-string order.
pub fn enumerate_partitions(n: usize, k: usize) -> Vec<SetPartition> {
    fn go(i: usize, n: usize, k: usize, used: usize, rgs: &mut Vec<usize>, out: &mut Vec<SetPartition>) {
        if i == n {
            if used == k {
                out.push(SetPartition::from_rgs(rgs));
            }
            return;
        }
        // not enough positions left to open the remaining blocks
        if k - used > n - i {
            return;
        }
        for b in 0..=used.min(k.saturating_sub(1)) {
            rgs.push(b);
            go(i + 1, n, k, used.max(b + 1), rgs, out);
            rgs.pop();
        }
    }
    let mut out = Vec::new();
    if k > n || (k == 0 && n > 0) {
        return out;
    }
    go(0, n, k, 0, &mut Vec::with_capacity(n), &mut out);
    out
}

/// `Σ_j (j·|B_j| - 1)` over blocks ordered by least element.
pub fn partition_weight(pi: &SetPartition) -> u64 {
    pi.blocks
        .iter()
        .enumerate()
        .map(|(j, b)| ((j + 1) * b.len() - 1) as u64)
        .sum()
}

/// `Σ_π q^-wt(π)` over partitions of `1..=n` into `k` blocks.
pub fn p_q(n: usize, k: usize) -> LaurentPoly {
    enumerate_partitions(n, k)
        .iter()
        .map(|pi| LaurentPoly::q_pow(-(partition_weight(pi) as i64)))
        .sum()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassicalNumbers {
    /// unsigned Stirling number of the first kind `[n, k]`
    pub stirling1: BigInt,
    /// Stirling number of the second kind `{n, k}`
    pub stirling2: BigInt,
    /// unsigned Lah number
    pub lah: BigInt,
}

fn triangle_row(n: usize, weight: impl Fn(usize, usize) -> u64, shift_weight: impl Fn(usize, usize) -> u64) -> Vec<BigInt> {
    // T(i,k) = shift_weight(i,k)·T(i-1,k-1) + weight(i,k)·T(i-1,k)
    let mut row = vec![BigInt::one()];
    for i in 1..=n {
        let next = (0..=i)
            .map(|k| {
                let down = if k >= 1 { &row[k - 1] * shift_weight(i, k) } else { BigInt::zero() };
                let same = row.get(k).map_or_else(BigInt::zero, |v| v * weight(i, k));
                down + same
            })
            .collect();
        row = next;
    }
    row
}

pub fn stirling1_row(n: usize) -> Vec<BigInt> {
    triangle_row(n, |i, _| (i - 1) as u64, |_, _| 1)
}

pub fn stirling2_row(n: usize) -> Vec<BigInt> {
    triangle_row(n, |_, k| k as u64, |_, _| 1)
}

pub fn lah_row(n: usize) -> Vec<BigInt> {
    triangle_row(n, |i, k| (i - 1 + k) as u64, |_, _| 1)
}

pub fn classical_numbers(n: usize, k: usize) -> ClassicalNumbers {
    let get = |row: Vec<BigInt>| row.get(k).cloned().unwrap_or_default();
    ClassicalNumbers {
        stirling1: get(stirling1_row(n)),
        stirling2: get(stirling2_row(n)),
        lah: get(lah_row(n)),
    }
}
