//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 on a domain error or a failed verification,
//! 2 on malformed input.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::json;

use crate::characters::{character_oracle, character_table, irr_character, ClassLabel};
use crate::coeff::{Element, LaurentMatrix, Rational};
use crate::diagrams::{enumerate_basis, Diagram, Family, GenKind};
use crate::irreps::{enumerate_sspt, enumerate_symmetric, symmetric_count, BasisChoice, Irrep};
use crate::partitions::{lambda_stars, num_syt, rank_set, IntPartition};
use crate::verify::{self, Suite};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BasisArg {
    Twisted,
    Tableau,
}

#[derive(Debug, Parser)]
#[command(
    name = "diagramalg",
    version,
    about = "Partition algebras, their diagram subalgebras, irreducibles and characters"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, value_enum, default_value = "text", global = true)]
    pub format: Format,
    /// Write output here instead of stdout.
    #[arg(long, visible_alias = "out-path", global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct Algebra {
    /// partition, brauer, rook-brauer, rook, temperley-lieb, motzkin, planar-rook, planar-partition, symmetric-group
    #[arg(long, value_parser = parse_family)]
    pub family: Family,
    #[arg(long)]
    pub k: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Multiply two diagrams, e.g. --lhs "1 2' | 2 1'"
    Mul {
        #[command(flatten)]
        alg: Algebra,
        #[arg(long)]
        lhs: String,
        #[arg(long)]
        rhs: String,
        /// Evaluate at this value of n (integer or fraction); symbolic if omitted.
        #[arg(long, value_parser = parse_rational)]
        n: Option<Rational>,
    },
    /// List the diagram basis.
    Basis {
        #[command(flatten)]
        alg: Algebra,
    },
    /// Dimensions of the irreducible modules.
    Dims {
        #[command(flatten)]
        alg: Algebra,
    },
    /// List symmetric m-diagrams (all admissible m if --m is omitted).
    Symdiag {
        #[command(flatten)]
        alg: Algebra,
        #[arg(long)]
        m: Option<usize>,
    },
    /// List standard set-partition tableaux of a shape.
    Sspt {
        #[command(flatten)]
        alg: Algebra,
        #[arg(long, value_parser = parse_partition)]
        lambda_star: IntPartition,
    },
    /// Matrix of a diagram (or generator such as e1, s2) on an irreducible.
    Irrep {
        #[command(flatten)]
        alg: Algebra,
        #[arg(long, value_parser = parse_partition)]
        lambda_star: IntPartition,
        #[arg(long)]
        diagram: String,
        #[arg(long, value_enum, default_value = "twisted")]
        basis_choice: BasisArg,
        #[arg(long, value_parser = parse_rational)]
        n: Option<Rational>,
    },
    /// Irreducible character on a class diagram.
    Char {
        #[command(flatten)]
        alg: Algebra,
        #[arg(long, value_parser = parse_partition)]
        lambda_star: IntPartition,
        #[arg(long, value_parser = parse_partition)]
        kappa: IntPartition,
        /// Number of padding factors; inferred from k when omitted.
        #[arg(long)]
        s: Option<usize>,
        /// Also compute the trace on the explicit module.
        #[arg(long)]
        oracle: bool,
    },
    /// Character table, optionally with its factorization.
    Table {
        #[command(flatten)]
        alg: Algebra,
        #[arg(long)]
        factors: bool,
    },
    /// Run self-checks.
    Verify {
        #[command(flatten)]
        alg: Algebra,
        #[arg(long, value_enum)]
        suite: Option<Suite>,
        #[arg(long, default_value_t = 50)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn parse_family(s: &str) -> std::result::Result<Family, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_partition(s: &str) -> std::result::Result<IntPartition, String> {
    IntPartition::parse(s).map_err(|e| e.to_string())
}

fn parse_rational(s: &str) -> std::result::Result<Rational, String> {
    s.trim().parse::<Rational>().map_err(|_| format!("`{s}` is not a rational number"))
}

/// A diagram in block notation, or a generator name like `e3`.
pub fn parse_diagram_arg(text: &str, k: usize) -> Result<Diagram> {
    let t = text.trim();
    let mut chars = t.chars();
    if let Some(c) = chars.next() {
        let rest = chars.as_str();
        if c.is_ascii_alphabetic() && !rest.is_empty() && rest.chars().all(|x| x.is_ascii_digit()) {
            let kind: GenKind = c.to_string().parse()?;
            let i = rest.parse().map_err(|_| Error::SyntaxError(format!("bad generator `{t}`")))?;
            return Diagram::generator(kind, i, k);
        }
    }
    Diagram::parse(t, k)
}

/// Parses `args` and runs the command, returning the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { stdout } else { stderr };
            let _ = write!(sink, "{text}");
            return if code == 0 { 0 } else { 2 };
        }
    };
    let mut buf = Vec::new();
    let outcome = execute(&cli, &mut buf);
    let code = match &outcome {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            if e.is_usage() {
                2
            } else {
                1
            }
        }
    };
    if outcome.is_ok() {
        let written = match &cli.out {
            Some(path) => std::fs::write(path, &buf).map_err(|e| e.to_string()),
            None => stdout.write_all(&buf).map_err(|e| e.to_string()),
        };
        if let Err(e) = written {
            let _ = writeln!(stderr, "error: {e}");
            return 1;
        }
    }
    code
}

fn json_line(out: &mut Vec<u8>, v: &impl Serialize) {
    out.extend(serde_json::to_string_pretty(v).expect("serializable").into_bytes());
    out.push(b'\n');
}

fn csv_rows(out: &mut Vec<u8>, rows: impl IntoIterator<Item = Vec<String>>) {
    let mut w = csv::WriterBuilder::new().flexible(true).from_writer(Vec::new());
    for r in rows {
        w.write_record(&r).expect("in-memory csv");
    }
    out.extend(w.into_inner().expect("in-memory csv"));
}

fn line(out: &mut Vec<u8>, s: impl std::fmt::Display) {
    out.extend(format!("{s}\n").into_bytes());
}

/// Runs a parsed command. `Ok(false)` means a verification failed.
pub fn execute(cli: &Cli, out: &mut Vec<u8>) -> Result<bool> {
    let fmt = cli.format;
    match &cli.command {
        Command::Mul { alg, lhs, rhs, n } => {
            let a = Element::from_diagram(alg.family, parse_diagram_arg(lhs, alg.k)?)?;
            let b = Element::from_diagram(alg.family, parse_diagram_arg(rhs, alg.k)?)?;
            let ab = a.multiply(&b)?;
            match n {
                None => match fmt {
                    Format::Text => line(out, &ab),
                    Format::Json => json_line(out, &ab),
                    Format::Csv => csv_rows(
                        out,
                        std::iter::once(vec!["coeff".into(), "diagram".into()])
                            .chain(ab.terms().iter().map(|(d, c)| vec![c.to_string(), d.to_string()])),
                    ),
                },
                Some(n0) => {
                    let vals = ab.evaluate(n0)?;
                    match fmt {
                        Format::Text => {
                            let parts: Vec<String> = vals.iter().map(|(d, c)| format!("{c} * <{d}>")).collect();
                            line(out, if parts.is_empty() { "0".into() } else { parts.join(" + ") });
                        }
                        Format::Json => json_line(
                            out,
                            &vals
                                .iter()
                                .map(|(d, c)| json!({"coeff": c.to_string(), "diagram": d}))
                                .collect::<Vec<_>>(),
                        ),
                        Format::Csv => csv_rows(
                            out,
                            std::iter::once(vec!["coeff".into(), "diagram".into()])
                                .chain(vals.iter().map(|(d, c)| vec![c.to_string(), d.to_string()])),
                        ),
                    }
                }
            }
        }
        Command::Basis { alg } => {
            let basis = enumerate_basis(alg.family, alg.k)?;
            match fmt {
                Format::Text => basis.iter().for_each(|d| line(out, d)),
                Format::Json => json_line(out, &basis),
                Format::Csv => csv_rows(
                    out,
                    std::iter::once(vec!["index".into(), "diagram".into()])
                        .chain(basis.iter().enumerate().map(|(i, d)| vec![i.to_string(), d.to_string()])),
                ),
            }
        }
        Command::Dims { alg } => {
            let mut rows = Vec::new();
            let mut total = BigInt::from(0);
            for l in lambda_stars(alg.family, alg.k)? {
                let w = symmetric_count(alg.family, alg.k, l.size())?;
                let f = num_syt(&l);
                let dim = &w * &f;
                total += &dim * &dim;
                rows.push((l, w, f, dim));
            }
            match fmt {
                Format::Text => {
                    line(out, format!("{:<12} {:>10} {:>8} {:>12}", "lambda*", "|W^m|", "f", "dim"));
                    for (l, w, f, d) in &rows {
                        line(out, format!("{:<12} {:>10} {:>8} {:>12}", l.to_string(), w, f, d));
                    }
                    line(out, format!("sum of squares: {total}"));
                }
                Format::Json => json_line(
                    out,
                    &json!({
                        "family": alg.family, "k": alg.k,
                        "irreducibles": rows.iter().map(|(l, w, f, d)| json!({
                            "lambda_star": l, "symmetric_diagrams": w.to_string(),
                            "syt": f.to_string(), "dim": d.to_string()})).collect::<Vec<_>>(),
                        "sum_of_squares": total.to_string(),
                    }),
                ),
                Format::Csv => csv_rows(
                    out,
                    std::iter::once(vec![
                        "lambda_star".into(),
                        "symmetric_diagrams".into(),
                        "syt".into(),
                        "dim".into(),
                    ])
                    .chain(
                        rows.iter()
                            .map(|(l, w, f, d)| vec![l.to_string(), w.to_string(), f.to_string(), d.to_string()]),
                    ),
                ),
            }
        }
        Command::Symdiag { alg, m } => {
            let ms = match m {
                Some(m) => vec![*m],
                None => rank_set(alg.family, alg.k),
            };
            let mut all = Vec::new();
            for m in ms {
                all.push((m, enumerate_symmetric(alg.family, alg.k, m)?));
            }
            match fmt {
                Format::Text => {
                    for (m, ws) in &all {
                        line(out, format!("m = {m}: {} diagrams", ws.len()));
                        ws.iter().for_each(|w| line(out, format!("  {w}")));
                    }
                }
                Format::Json => json_line(
                    out,
                    &all.iter()
                        .map(|(m, ws)| {
                            json!({"m": m, "diagrams": ws.iter().map(|w| json!({
                                "top": w.top(),
                                "propagating": w.propagating_blocks(),
                                "diagram": w.to_diagram(),
                            })).collect::<Vec<_>>()})
                        })
                        .collect::<Vec<_>>(),
                ),
                Format::Csv => csv_rows(
                    out,
                    std::iter::once(vec!["m".into(), "symmetric_diagram".into(), "diagram".into()]).chain(
                        all.iter().flat_map(|(m, ws)| {
                            ws.iter().map(move |w| vec![m.to_string(), w.to_string(), w.to_diagram().to_string()])
                        }),
                    ),
                ),
            }
        }
        Command::Sspt { alg, lambda_star } => {
            let tabs = enumerate_sspt(alg.family, alg.k, lambda_star)?;
            match fmt {
                Format::Text => tabs.iter().for_each(|t| line(out, t)),
                Format::Json => json_line(out, &tabs),
                Format::Csv => csv_rows(
                    out,
                    std::iter::once(vec!["index".into(), "tableau".into()])
                        .chain(tabs.iter().enumerate().map(|(i, t)| vec![i.to_string(), t.to_string()])),
                ),
            }
        }
        Command::Irrep { alg, lambda_star, diagram, basis_choice, n } => {
            let irr = Irrep::new(alg.family, alg.k, lambda_star)?;
            let d = parse_diagram_arg(diagram, alg.k)?;
            let choice = match basis_choice {
                BasisArg::Twisted => BasisChoice::Twisted,
                BasisArg::Tableau => BasisChoice::Tableau,
            };
            let m = irr.matrix(&d, choice)?;
            write_matrix(out, fmt, &m, n.as_ref())?;
        }
        Command::Char { alg, lambda_star, kappa, s, oracle } => {
            let label = match s {
                Some(s) => ClassLabel { kappa: kappa.clone(), s: *s, family: alg.family },
                None => ClassLabel::for_k(alg.family, alg.k, kappa.clone())?,
            };
            let value = irr_character(alg.family, alg.k, lambda_star, &label)?;
            let trace = if *oracle { Some(character_oracle(alg.family, alg.k, lambda_star, &label)?) } else { None };
            match fmt {
                Format::Text => {
                    line(out, &value);
                    if let Some(t) = &trace {
                        line(out, format!("trace: {t}"));
                    }
                }
                Format::Json => json_line(
                    out,
                    &json!({"family": alg.family, "k": alg.k, "lambda_star": lambda_star, "kappa": label.kappa,
                            "s": label.s, "value": value.to_string(), "trace": trace}),
                ),
                Format::Csv => {
                    let mut rows = vec![vec!["lambda_star".into(), "kappa".into(), "s".into(), "value".into()]];
                    rows.push(vec![
                        lambda_star.to_string(),
                        label.kappa.to_string(),
                        label.s.to_string(),
                        value.to_string(),
                    ]);
                    csv_rows(out, rows);
                }
            }
        }
        Command::Table { alg, factors } => {
            let t = character_table(alg.family, alg.k)?;
            let row_labels: Vec<String> = t.rows.iter().map(|r| r.to_string()).collect();
            let col_labels: Vec<String> = t.cols.iter().map(|c| c.kappa.to_string()).collect();
            let mu_labels: Vec<String> = t.mus.iter().map(|m| m.to_string()).collect();
            let mut sections = vec![("table", &row_labels, &col_labels, &t.values)];
            if *factors {
                sections.push(("block", &row_labels, &mu_labels, &t.block));
                sections.push(("F", &mu_labels, &col_labels, &t.f_matrix));
            }
            match fmt {
                Format::Text => {
                    for (i, (name, rl, cl, m)) in sections.iter().enumerate() {
                        if *factors {
                            if i > 0 {
                                line(out, "");
                            }
                            line(out, format!("{name}:"));
                        }
                        out.extend(text_table(rl, cl, m).into_bytes());
                    }
                }
                Format::Json => {
                    let mut v = json!({
                        "family": t.family, "k": t.k,
                        "rows": t.rows, "cols": t.cols.iter().map(|c| json!({"kappa": c.kappa, "s": c.s})).collect::<Vec<_>>(),
                        "values": t.values.iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
                    });
                    if *factors {
                        v["mus"] = json!(t.mus);
                        v["block"] = json!(t
                            .block
                            .iter()
                            .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>())
                            .collect::<Vec<_>>());
                        v["f_matrix"] = json!(t
                            .f_matrix
                            .iter()
                            .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>())
                            .collect::<Vec<_>>());
                    }
                    json_line(out, &v);
                }
                Format::Csv => {
                    let mut rows = Vec::new();
                    for (i, (name, rl, cl, m)) in sections.iter().enumerate() {
                        if i > 0 {
                            rows.push(Vec::new());
                        }
                        let corner = if *factors { name.to_string() } else { "lambda*".to_string() };
                        rows.push(std::iter::once(corner).chain(cl.iter().cloned()).collect());
                        for (r, vals) in rl.iter().zip(m.iter()) {
                            rows.push(std::iter::once(r.clone()).chain(vals.iter().map(|x| x.to_string())).collect());
                        }
                    }
                    csv_rows(out, rows);
                }
            }
        }
        Command::Verify { alg, suite, samples, seed } => {
            let opts = verify::Options { samples: *samples, seed: *seed };
            let suites: Vec<Suite> = match suite {
                Some(s) => vec![*s],
                None => Suite::ALL.to_vec(),
            };
            let mut reports = Vec::new();
            for s in suites {
                reports.push(verify::run(s, alg.family, alg.k, &opts)?);
            }
            match fmt {
                Format::Text => reports.iter().for_each(|r| line(out, r)),
                Format::Json => json_line(out, &reports),
                Format::Csv => csv_rows(
                    out,
                    std::iter::once(vec![
                        "suite".into(),
                        "family".into(),
                        "k".into(),
                        "checks".into(),
                        "failures".into(),
                    ])
                    .chain(reports.iter().map(|r| {
                        vec![
                            r.suite.to_string(),
                            r.family.to_string(),
                            r.k.to_string(),
                            r.checks.to_string(),
                            r.failures.len().to_string(),
                        ]
                    })),
                ),
            }
            return Ok(reports.iter().all(|r| r.ok()));
        }
    }
    Ok(true)
}

fn text_table(rows: &[String], cols: &[String], m: &[Vec<BigInt>]) -> String {
    let cells: Vec<Vec<String>> = m.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
    let lw = rows.iter().map(String::len).max().unwrap_or(0).max(7);
    let cw = cols.iter().chain(cells.iter().flatten()).map(String::len).max().unwrap_or(1);
    let mut s = format!("{:<lw$}", "lambda*");
    for c in cols {
        s += &format!(" {c:>cw$}");
    }
    s.push('\n');
    for (r, vals) in rows.iter().zip(&cells) {
        s += &format!("{r:<lw$}");
        for v in vals {
            s += &format!(" {v:>cw$}");
        }
        s.push('\n');
    }
    s
}

fn write_matrix(out: &mut Vec<u8>, fmt: Format, m: &LaurentMatrix, n: Option<&Rational>) -> Result<()> {
    let cells: Vec<Vec<String>> = match n {
        None => m.to_dense().iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect(),
        Some(n0) => m
            .to_dense()
            .iter()
            .map(|r| r.iter().map(|x| x.evaluate(n0).map(|v| v.to_string())).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?,
    };
    match fmt {
        Format::Text => {
            if n.is_none() {
                out.extend(m.to_string().into_bytes());
            } else {
                let w = cells.iter().flatten().map(String::len).max().unwrap_or(1);
                for r in &cells {
                    line(out, r.iter().map(|c| format!("{c:>w$}")).collect::<Vec<_>>().join("  "));
                }
            }
        }
        Format::Json => {
            if n.is_none() {
                json_line(out, m);
            } else {
                json_line(out, &cells);
            }
        }
        Format::Csv => csv_rows(out, cells),
    }
    Ok(())
}
