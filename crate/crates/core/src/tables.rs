//! Reference tables for the running examples, rendered as plain text.

use std::fmt;
use std::str::FromStr;

use crate::error::Result;
use crate::partitions::{enumerate_partitions, p_q, partition_weight};
use crate::weyl::{expand, Basis};
use crate::words::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Table {
    /// q-deformed `(xD)^k` coefficients of `xxDxxDDD`.
    Table1,
    /// q-deformed `x D^k x^(k-1)` coefficients of `(xD)^4`.
    Table2,
    /// Partitions of `1..=4` into two blocks with their weights.
    Table4,
    /// q-deformed `x D^k x^(k-1)` coefficients of `x^4 D^4`.
    Table5,
    /// `(xD)^k` coefficients of `xxDxxDDD`.
    Example21,
    /// `x D^k x^(k-1)` coefficients of `xxDxxDDD`.
    Example22,
    /// q-deformed `x D^k x^(k-1)` coefficients of `xxDxxDDD`.
    Example42,
}

impl Table {
    pub const ALL: [Table; 7] = [
        Table::Table1,
        Table::Table2,
        Table::Table4,
        Table::Table5,
        Table::Example21,
        Table::Example22,
        Table::Example42,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Table::Table1 => "table1",
            Table::Table2 => "table2",
            Table::Table4 => "table4",
            Table::Table5 => "table5",
            Table::Example21 => "example-2-1",
            Table::Example22 => "example-2-2",
            Table::Example42 => "example-4-2",
        }
    }

    /// Golden file name inside the tables directory.
    pub fn file_name(self) -> String {
        format!("{}.txt", self.name())
    }

    pub fn render(self) -> Result<String> {
        let omega: Word = "xxDxxDDD".parse()?;
        let text = match self {
            Table::Table1 => expand(&omega, Basis::PowerXd, true)?.to_string(),
            Table::Table2 => expand(&Word::xd_power(4), Basis::Lah, true)?.to_string(),
            Table::Table4 => render_partitions(4, 2),
            Table::Table5 => expand(&Word::monomial(4, 4), Basis::Lah, true)?.to_string(),
            Table::Example21 => expand(&omega, Basis::PowerXd, false)?.to_string(),
            Table::Example22 => expand(&omega, Basis::Lah, false)?.to_string(),
            Table::Example42 => expand(&omega, Basis::Lah, true)?.to_string(),
        };
        Ok(text)
    }
}

fn render_partitions(n: usize, k: usize) -> String {
    let mut out = format!("partitions of {n} into {k} blocks\npartition\tweight\n");
    for pi in enumerate_partitions(n, k) {
        out.push_str(&format!("{pi}\t{}\n", partition_weight(&pi)));
    }
    out.push_str(&format!("sum\t{}\n", p_q(n, k)));
    out
}

impl fmt::Display for Table {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Table {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Table::ALL.into_iter().find(|t| t.name() == s).ok_or_else(|| {
            let names: Vec<&str> = Table::ALL.iter().map(|t| t.name()).collect();
            format!("unknown table {s:?}; expected one of {}", names.join(", "))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table1_text() {
        assert_eq!(
            Table::Table1.render().unwrap(),
            "word xxDxxDDD, basis power-xd, q-deformed\nk\tcoefficient\n0\t0\n\
             1\t-q^-4 - q^-3\n2\t3q^-4 + 2q^-3\n3\t-3q^-4 - q^-3\n4\tq^-4\n"
        );
    }

    #[test]
    fn table4_text() {
        let text = Table::Table4.render().unwrap();
        assert!(text.contains("1|234\t5\n"));
        assert!(text.contains("13|24\t4\n"));
        assert!(text.ends_with("sum\tq^-5 + 3q^-4 + 3q^-3\n"));
    }

    #[test]
    fn names_round_trip() {
        for t in Table::ALL {
            assert_eq!(t.name().parse::<Table>(), Ok(t));
            assert!(t.render().is_ok());
        }
    }
}
