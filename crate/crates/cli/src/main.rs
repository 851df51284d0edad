//! `xdstir`: normal ordering, expansions, enumerations, identity suites and tables.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use xdstir::graphs::{
    enumerate_bcf_subgraphs, enumerate_forest_families, enumerate_forest_partitions, forest_partition_weight,
    qlah_family_weight, weighted_forest_count,
};
use xdstir::partitions::{enumerate_partitions, partition_weight};
use xdstir::rooks::{enumerate_full_placements, enumerate_truncated_placements, rook_lah, rook_stirling1};
use xdstir::tables::Table;
use xdstir::verify::{run_suite, Suite};
use xdstir::weyl::{lah_by_recurrence, stirling1_by_recurrence};
use xdstir::{build_graph, board_from_word, expand, normal_order, Basis, DecreasingForest, Expansion, LaurentPoly, Word};

#[derive(Parser)]
#[command(name = "xdstir", version, about = "Normal ordering and word Stirling/Lah numbers in the (q-)Weyl algebra")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Normal form of a word as a combination of x^i D^j.
    NormalOrder {
        #[arg(long)]
        word: Word,
        #[command(flatten)]
        common: Common,
    },
    /// Coefficients of a word over one of the three bases.
    Expand {
        #[arg(long)]
        word: Word,
        #[arg(long, default_value = "power-xd")]
        basis: Basis,
        #[arg(long, value_enum, default_value_t = Method::Rewrite)]
        method: Method,
        #[command(flatten)]
        common: Common,
    },
    /// List forests, forest families, rook placements, broken-circuit-free subgraphs or
    /// set partitions with their weights.
    Enumerate {
        #[arg(long, value_enum)]
        kind: Kind,
        /// Word (all kinds except partitions).
        #[arg(long)]
        word: Option<Word>,
        /// Set size for partitions.
        #[arg(long)]
        n: Option<usize>,
        /// Components, groups, white rooks, rooks, components, or blocks, by kind.
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run a named identity suite; exits 1 if any instance fails.
    Verify {
        /// Suite name, or `all`.
        #[arg(long)]
        suite: String,
        #[arg(long)]
        max_semilength: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print a reference table, or compare tables against golden files.
    Table {
        #[arg(long, required_unless_present = "check")]
        name: Option<Table>,
        /// Directory of golden files; compares instead of printing.
        #[arg(long)]
        check: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Args)]
struct Common {
    /// Use the q-deformed relation Dx - qxD = 1.
    #[arg(long)]
    q: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Rewriting and triangular basis change.
    Rewrite,
    /// Standard-factorization recurrences.
    Recurrence,
    /// Weighted decreasing forests or forest families.
    Forests,
    /// Weighted rook placements.
    Rooks,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Forests,
    Families,
    Rooks,
    TruncatedRooks,
    Bcf,
    Partitions,
}

/// Exit status 1 for failed checks, 2 for bad input.
enum Failure {
    Check(String),
    Usage(String),
}

impl From<xdstir::Error> for Failure {
    fn from(e: xdstir::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = std::result::Result<String, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Check(out)) => {
            print!("{out}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Outcome {
    match command {
        Command::NormalOrder { word, common } => {
            let nf = normal_order(&word, common.q);
            Ok(emit(common.format, &nf.to_string(), || json!(nf)))
        }
        Command::Expand {
            word,
            basis,
            method,
            common,
        } => {
            let e = expansion(&word, basis, method, common.q)?;
            Ok(emit(common.format, e.to_string().trim_end(), || json!(e)))
        }
        Command::Enumerate {
            kind,
            word,
            n,
            k,
            format,
        } => enumerate(kind, word, n, k, format),
        Command::Verify {
            suite,
            max_semilength,
            format,
        } => verify(&suite, max_semilength, format),
        Command::Table { name, check, format } => table(name, check, format),
    }
}

/// Text output gets a trailing newline; JSON is pretty-printed.
fn emit(format: Format, text: &str, value: impl FnOnce() -> Value) -> String {
    match format {
        Format::Text => format!("{text}\n"),
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&value()).expect("serializable")),
    }
}

fn expansion(word: &Word, basis: Basis, method: Method, q: bool) -> Result<Expansion, Failure> {
    let unsupported = || {
        Failure::Usage(format!(
            "method {} does not compute {basis} coefficients{}",
            method.to_possible_value().unwrap().get_name(),
            if q { " with --q" } else { "" }
        ))
    };
    let n = word.semi_length();
    let from_unsigned = |u: Vec<LaurentPoly>| Expansion::from_unsigned(word.clone(), basis, q, u);
    Ok(match (method, basis) {
        (Method::Rewrite, _) => expand(word, basis, q)?,
        (Method::Recurrence, Basis::PowerXd) => stirling1_by_recurrence(word, q)?,
        (Method::Recurrence, Basis::Lah) if !q => lah_by_recurrence(word)?,
        (Method::Forests, Basis::PowerXd) => {
            let g = build_graph(word)?;
            if q {
                from_unsigned((0..=n).map(|k| weighted_forest_count(&g, k)).collect())
            } else {
                from_unsigned(
                    (0..=n)
                        .map(|k| LaurentPoly::constant(enumerate_forest_partitions(&g, k).len() as i64))
                        .collect(),
                )
            }
        }
        (Method::Forests, Basis::Lah) if !q => {
            let g = build_graph(word)?;
            from_unsigned(
                (0..=n)
                    .map(|k| LaurentPoly::constant(enumerate_forest_families(&g, k).len() as i64))
                    .collect(),
            )
        }
        (Method::Rooks, Basis::PowerXd) => {
            from_unsigned((0..=n).map(|k| rook_stirling1(word, k, q)).collect::<Result<_, _>>()?)
        }
        (Method::Rooks, Basis::Lah) => from_unsigned((0..=n).map(|k| rook_lah(word, k, q)).collect::<Result<_, _>>()?),
        _ => return Err(unsupported()),
    })
}

fn forest_text(f: &DecreasingForest) -> String {
    f.components()
        .iter()
        .map(|c| {
            let edges: Vec<String> = c.parent_pairs.iter().map(|[a, b]| format!("{a}>{b}")).collect();
            if edges.is_empty() {
                format!("{}", c.root)
            } else {
                format!("{}: {}", c.root, edges.join(" "))
            }
        })
        .collect::<Vec<_>>()
        .join(" | ")
}

fn need_word(word: Option<Word>) -> Result<Word, Failure> {
    word.ok_or_else(|| Failure::Usage("--word is required for this kind".into()))
}

fn enumerate(kind: Kind, word: Option<Word>, n: Option<usize>, k: usize, format: Format) -> Outcome {
    // (text line, JSON item, weight exponent)
    let mut rows: Vec<(String, Value, Option<u64>)> = Vec::new();
    let header;
    match kind {
        Kind::Forests => {
            let w = need_word(word)?;
            let g = build_graph(&w)?;
            header = format!("forest partitions of {w} with {k} components");
            for a in enumerate_forest_partitions(&g, k) {
                let wt = forest_partition_weight(&g, &a);
                rows.push((forest_text(a.forest()), json!(a), Some(wt)));
            }
        }
        Kind::Families => {
            let w = need_word(word)?;
            let g = build_graph(&w)?;
            header = format!("forest families of {w} with {k} groups");
            for a in enumerate_forest_families(&g, k) {
                let wt = qlah_family_weight(&g, &a).ok();
                let text: Vec<String> = a.groups().iter().map(|f| format!("[{}]", forest_text(f))).collect();
                rows.push((text.join(" "), json!(a), wt));
            }
        }
        Kind::Rooks | Kind::TruncatedRooks => {
            let w = need_word(word)?;
            let placements = if kind == Kind::Rooks {
                w.is_dyck()
                    .then_some(())
                    .ok_or_else(|| Failure::Usage(format!("word `{w}` is not a Dyck word")))?;
                header = format!("rook placements of {w} with {k} white rooks");
                enumerate_full_placements(&board_from_word(&w)?, k)
            } else {
                header = format!("{k}-rook placements on the truncated board of {w}");
                enumerate_truncated_placements(&w, k)?
            };
            for pl in placements {
                let cells: Vec<String> = pl
                    .rooks()
                    .iter()
                    .enumerate()
                    .map(|(i, (r, c))| {
                        let mark = if kind == Kind::Rooks && pl.is_white(i) { "w" } else { "" };
                        format!("({r},{c}){mark}")
                    })
                    .collect();
                let text = if cells.is_empty() { "(none)".to_string() } else { cells.join(" ") };
                rows.push((text, json!(pl), Some(pl.inv())));
            }
        }
        Kind::Bcf => {
            let w = need_word(word)?;
            let g = build_graph(&w)?;
            let edges = w.semi_length().checked_sub(k).ok_or_else(|| Failure::Usage("k exceeds n".into()))?;
            header = format!("broken-circuit-free subgraphs of {w} with {edges} edges");
            for s in enumerate_bcf_subgraphs(&g, edges) {
                let pairs: Vec<[usize; 2]> = s.iter().map(|&(j, i)| [i, j]).collect();
                let text: Vec<String> = pairs.iter().map(|[i, j]| format!("{i}-{j}")).collect();
                let text = if text.is_empty() { "(none)".to_string() } else { text.join(" ") };
                rows.push((text, json!(pairs), None));
            }
        }
        Kind::Partitions => {
            let n = n.ok_or_else(|| Failure::Usage("--n is required for partitions".into()))?;
            header = format!("partitions of {n} into {k} blocks");
            for pi in enumerate_partitions(n, k) {
                let wt = partition_weight(&pi);
                rows.push((pi.to_string(), json!(pi.to_string()), Some(wt)));
            }
        }
    }
    let weighted = !rows.is_empty() && rows.iter().all(|r| r.2.is_some());
    let sum: LaurentPoly = rows
        .iter()
        .filter_map(|r| r.2)
        .map(|e| LaurentPoly::q_pow(-(e as i64)))
        .sum();
    let mut text = format!("{header}\n");
    for (line, _, wt) in &rows {
        match wt {
            Some(wt) => text.push_str(&format!("{line}\twt {wt}\n")),
            None => text.push_str(&format!("{line}\n")),
        }
    }
    text.push_str(&format!("count\t{}", rows.len()));
    if weighted {
        text.push_str(&format!("\nsum\t{sum}"));
    }
    Ok(emit(format, &text, || {
        let items: Vec<Value> = rows
            .iter()
            .map(|(_, item, wt)| json!({ "item": item, "weight": wt }))
            .collect();
        json!({
            "header": header,
            "items": items,
            "count": rows.len(),
            "sum": if weighted { json!(sum) } else { Value::Null },
        })
    }))
}

fn verify(suite: &str, max: Option<usize>, format: Format) -> Outcome {
    let suites: Vec<Suite> = if suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![suite.parse().map_err(Failure::Usage)?]
    };
    let checks: Vec<_> = suites.into_iter().flat_map(|s| run_suite(s, max)).collect();
    let failed = checks.iter().filter(|c| !c.passed).count();
    let summary = format!("{} checks, {} passed, {failed} failed", checks.len(), checks.len() - failed);
    let mut text: String = checks.iter().map(|c| format!("{c}\n")).collect();
    text.push_str(&summary);
    let out = emit(format, &text, || {
        let items: Vec<Value> = checks
            .iter()
            .map(|c| json!({ "suite": c.suite.name(), "instance": c.instance, "passed": c.passed, "detail": c.detail }))
            .collect();
        json!({ "checks": items, "passed": failed == 0 })
    });
    if failed == 0 {
        Ok(out)
    } else {
        Err(Failure::Check(out))
    }
}

fn table(name: Option<Table>, check: Option<PathBuf>, format: Format) -> Outcome {
    let Some(dir) = check else {
        let t = name.expect("required without --check");
        let text = t.render()?;
        return Ok(match format {
            Format::Text => text,
            Format::Json => emit(format, "", || json!({ "name": t.name(), "text": text })),
        });
    };
    let tables = name.map_or_else(|| Table::ALL.to_vec(), |t| vec![t]);
    let mut lines = Vec::new();
    let mut ok = true;
    for t in tables {
        let path = dir.join(t.file_name());
        let golden = std::fs::read_to_string(&path)
            .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
        let same = golden == t.render()?;
        ok &= same;
        lines.push((t, same));
    }
    let text: Vec<String> = lines
        .iter()
        .map(|(t, same)| format!("{} {t}", if *same { "PASS" } else { "FAIL" }))
        .collect();
    let out = emit(format, &text.join("\n"), || {
        let items: Vec<Value> = lines.iter().map(|(t, same)| json!({ "name": t.name(), "passed": same })).collect();
        json!({ "tables": items, "passed": ok })
    });
    if ok {
        Ok(out)
    } else {
        Err(Failure::Check(out))
    }
}
