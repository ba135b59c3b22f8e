//! Command-line frontend. [`run`] is the whole program minus process I/O,
//! so tests can drive it directly.

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use crate::diag::{
    antipode, delta, element_to_json, packed_matrices_of_weight, star, tensor_to_json, to_dot,
    Diagram, HopfBasis, LinComb, MatrixBasis, PackedMatrix, Side, Tensor,
};
use crate::egf::{hadamard, one_param_power, parse_series, substitution_matrix};
use crate::partitions::{
    bell_number, complete_bell, enumerate_ordered_partitions_within, enumerate_partitions_within,
    faa_di_bruno, intersection_matrix, matrix_class, parse_ordered_partition, parse_set_partition,
    PartitionType,
};
use crate::rational::{factorial, parse_rational};
use crate::verify::{
    diagram_multiplicities, expand_by_diagrams, expand_direct, hopf_axiom_suite, sweedler_check,
};
use crate::weyl::{
    normal_order, parse_element, parse_word, rook_board, rook_numbers, stirling_matrix,
};
use crate::{Error, Limits, Result};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;
pub const EXIT_BOUND: i32 = 3;

/// `faa` computes `n!` exactly; past this weight the output is only noise.
const MAX_FAA_WEIGHT: usize = 4096;
/// Bound on `--rows` and `--power`; the normal forms grow quickly.
const MAX_POWER: usize = 200;
const MAX_SERIES_ORDER: usize = 1024;
/// Substitution matrices are dense `(order+1)²` arrays.
const MAX_MATRIX_ORDER: usize = 128;

#[derive(Parser, Debug)]
#[command(
    name = "boson-hopf",
    version,
    about = "Exact boson normal ordering, EGF substitution groups and diagram Hopf algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MatrixFormat {
    Table,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TextFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SideArg {
    Ws,
    Bs,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::Ws => Side::WhiteSpots,
            SideArg::Bs => Side::BlackSpots,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Mode {
    Direct,
    Diagram,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generalized Stirling matrix of a homogeneous boson expression.
    Stirling {
        #[arg(long, allow_hyphen_values = true)]
        omega: String,
        #[arg(long)]
        rows: usize,
        #[arg(long, value_enum, default_value = "table")]
        format: MatrixFormat,
    },
    /// Normal form of a boson word or expression, optionally raised to a power.
    NormalOrder {
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long, default_value_t = 1)]
        power: u32,
    },
    /// Ferrers board and rook numbers of a boson word.
    Rook {
        #[arg(long)]
        word: String,
    },
    /// Bell number and complete Bell polynomial.
    Bell {
        #[arg(long)]
        n: usize,
    },
    /// Faà di Bruno coefficient of a partition type.
    Faa {
        #[arg(long)]
        alpha: String,
    },
    /// Set partitions of {1..n}.
    Partitions {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        ordered: bool,
    },
    /// Intersection matrix of two ordered partitions, or with --class the
    /// matrices attached to two unordered partitions.
    Imatrix {
        #[arg(long)]
        p1: String,
        #[arg(long)]
        p2: String,
        #[arg(long)]
        class: bool,
    },
    /// Diagrams of a given weight with their multiplicities.
    Diagrams {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        labelled: bool,
        #[arg(long)]
        dot: Option<std::path::PathBuf>,
    },
    /// Double exponential expansion up to an order.
    Expand {
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum)]
        mode: Mode,
    },
    /// Coproduct of a labelled diagram.
    Coproduct {
        #[arg(long)]
        matrix: String,
        #[arg(long, value_enum, default_value = "ws")]
        side: SideArg,
        /// Work with diagram classes instead of labelled diagrams.
        #[arg(long)]
        classes: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: TextFormat,
    },
    /// Antipode of a labelled diagram.
    Antipode {
        #[arg(long)]
        matrix: String,
        #[arg(long, value_enum, default_value = "ws")]
        side: SideArg,
        #[arg(long)]
        classes: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: TextFormat,
    },
    /// Superposition product of two labelled diagrams.
    Product {
        #[arg(long)]
        m1: String,
        #[arg(long)]
        m2: String,
        #[arg(long)]
        classes: bool,
    },
    /// Hadamard product of two series.
    Hadamard {
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(long, allow_hyphen_values = true)]
        g: String,
        #[arg(long)]
        order: usize,
    },
    /// Fractional power of the substitution matrix of a series.
    Group {
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum, default_value = "table")]
        format: MatrixFormat,
    },
    /// Bialgebra and antipode axioms on both diagram algebras.
    HopfCheck {
        #[arg(long, default_value_t = 4)]
        max_weight: u32,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 2024)]
        seed: u64,
    },
    /// Variable-doubling compatibility of the white-spot coproduct.
    Sweedler {
        #[arg(long, default_value_t = 5)]
        max_weight: u32,
    },
}

/// Exit status and captured streams of one invocation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BoundExceeded { .. } => EXIT_BOUND,
        _ => EXIT_INPUT,
    }
}

/// Runs one command line (`argv[0]` is the program name).
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    Outcome::ok(text)
                }
                _ => Outcome {
                    code: EXIT_INPUT,
                    stdout: String::new(),
                    stderr: format!("error[E_USAGE]: {}\n", first_line(&text)),
                },
            };
        }
    };
    match execute(cli.command) {
        Ok(out) => out,
        Err(e) => Outcome {
            code: exit_code(&e),
            stdout: String::new(),
            stderr: format!("error[{}]: {e}\n", e.code()),
        },
    }
}

fn first_line(text: &str) -> &str {
    let line = text.lines().next().unwrap_or("").trim();
    line.strip_prefix("error: ").unwrap_or(line)
}

fn matrix_body<B: MatrixBasis>(text: &str) -> Result<B> {
    Ok(B::from_matrix(PackedMatrix::parse(text)?))
}

fn element_text<B: MatrixBasis + std::fmt::Display>(x: &LinComb<B>) -> String {
    if x.is_zero() {
        return "0\n".into();
    }
    x.terms().map(|(b, c)| format!("{c} {b}\n")).collect()
}

fn tensor_text<B: MatrixBasis + std::fmt::Display>(t: &Tensor<B>) -> String {
    t.terms()
        .map(|((a, b), c)| format!("{c} {a} ⊗ {b}\n"))
        .collect()
}

fn coproduct_of<B: HopfBasis + MatrixBasis>(
    matrix: &str,
    side: Side,
    format: TextFormat,
) -> Result<String> {
    let t = delta(&LinComb::basis(matrix_body::<B>(matrix)?), side);
    Ok(match format {
        TextFormat::Text => tensor_text(&t),
        TextFormat::Json => tensor_to_json(&t) + "\n",
    })
}

fn antipode_of<B: HopfBasis + MatrixBasis>(
    matrix: &str,
    side: Side,
    format: TextFormat,
) -> Result<String> {
    let s = antipode(&LinComb::basis(matrix_body::<B>(matrix)?), side);
    Ok(match format {
        TextFormat::Text => element_text(&s),
        TextFormat::Json => element_to_json(&s) + "\n",
    })
}

fn product_of<B: HopfBasis + MatrixBasis>(m1: &str, m2: &str) -> Result<String> {
    let x = LinComb::basis(matrix_body::<B>(m1)?);
    let y = LinComb::basis(matrix_body::<B>(m2)?);
    Ok(element_text(&star(&x, &y)))
}

/// `n! / Π aᵢⱼ!`: pairs of ordered partitions with intersection matrix `m`.
fn labelled_multiplicity(m: &PackedMatrix) -> BigInt {
    let denom: BigInt = m.entries().iter().map(|&a| factorial(a as usize)).product();
    factorial(m.weight() as usize) / denom
}

fn execute(command: Command) -> Result<Outcome> {
    let limits = Limits::from_env()?;
    let mut out = String::new();
    match command {
        Command::Stirling {
            omega,
            rows,
            format,
        } => {
            Limits::check("stirling rows", rows, MAX_POWER)?;
            let m = stirling_matrix(&parse_element(&omega)?, rows)?;
            out = match format {
                MatrixFormat::Table => m.to_table(),
                MatrixFormat::Csv => m.to_csv(),
                MatrixFormat::Json => m.to_json() + "\n",
            };
        }
        Command::NormalOrder { word, power } => {
            Limits::check("power", power as usize, MAX_POWER)?;
            let nf = normal_order(&parse_element(&word)?, power);
            writeln!(out, "{nf}").unwrap();
        }
        Command::Rook { word } => {
            let w = parse_word(&word)?;
            let board = rook_board(&w);
            let lengths: Vec<String> = board.row_lengths().iter().map(|l| l.to_string()).collect();
            let numbers: Vec<String> = rook_numbers(&board).iter().map(|r| r.to_string()).collect();
            writeln!(out, "rows: {}", lengths.join(" ")).unwrap();
            writeln!(out, "rook numbers: {}", numbers.join(" ")).unwrap();
            writeln!(out, "normal form: {}", board.reconstruct()).unwrap();
        }
        Command::Bell { n } => {
            Limits::check("partition size", n, limits.partitions)?;
            writeln!(out, "{}", bell_number(n)).unwrap();
            writeln!(out, "{}", complete_bell(n)).unwrap();
        }
        Command::Faa { alpha } => {
            let alpha = PartitionType::parse(&alpha)?;
            Limits::check("partition type weight", alpha.weight(), MAX_FAA_WEIGHT)?;
            writeln!(out, "{}", faa_di_bruno(&alpha)).unwrap();
        }
        Command::Partitions { n, ordered } => {
            if ordered {
                for p in enumerate_ordered_partitions_within(n, &limits)? {
                    writeln!(out, "{p}").unwrap();
                }
            } else {
                for p in enumerate_partitions_within(n, &limits)? {
                    writeln!(out, "{p}").unwrap();
                }
            }
        }
        Command::Imatrix { p1, p2, class } => {
            if class {
                for m in matrix_class(&parse_set_partition(&p1)?, &parse_set_partition(&p2)?)? {
                    writeln!(out, "{m}").unwrap();
                }
            } else {
                let m = intersection_matrix(
                    &parse_ordered_partition(&p1)?,
                    &parse_ordered_partition(&p2)?,
                )?;
                writeln!(out, "{m}").unwrap();
            }
        }
        Command::Diagrams {
            order,
            labelled,
            dot,
        } => {
            let mut dots = String::new();
            if labelled {
                Limits::check("diagram order", order, limits.diagrams)?;
                for m in packed_matrices_of_weight(order as u32) {
                    writeln!(out, "{} {m}", labelled_multiplicity(&m)).unwrap();
                    dots.push_str(&to_dot(&m));
                }
            } else {
                for (d, mult) in diagram_multiplicities(order, &limits)? {
                    writeln!(out, "{mult} {d}").unwrap();
                    dots.push_str(&to_dot(d.representative()));
                }
            }
            if let Some(path) = dot {
                std::fs::write(&path, dots).map_err(|e| {
                    Error::Precondition(format!("cannot write {}: {e}", path.display()))
                })?;
            }
        }
        Command::Expand { order, mode } => {
            let poly = match mode {
                Mode::Direct => expand_direct(order, &limits)?,
                Mode::Diagram => expand_by_diagrams(order, &limits)?,
            };
            out = poly.to_string();
        }
        Command::Coproduct {
            matrix,
            side,
            classes,
            format,
        } => {
            out = if classes {
                coproduct_of::<Diagram>(&matrix, side.into(), format)?
            } else {
                coproduct_of::<PackedMatrix>(&matrix, side.into(), format)?
            };
        }
        Command::Antipode {
            matrix,
            side,
            classes,
            format,
        } => {
            out = if classes {
                antipode_of::<Diagram>(&matrix, side.into(), format)?
            } else {
                antipode_of::<PackedMatrix>(&matrix, side.into(), format)?
            };
        }
        Command::Product { m1, m2, classes } => {
            out = if classes {
                product_of::<Diagram>(&m1, &m2)?
            } else {
                product_of::<PackedMatrix>(&m1, &m2)?
            };
        }
        Command::Hadamard { f, g, order } => {
            Limits::check("series order", order, MAX_SERIES_ORDER)?;
            let h = hadamard(&parse_series(&f, order)?, &parse_series(&g, order)?)?;
            out = h.to_json() + "\n";
        }
        Command::Group {
            f,
            lambda,
            order,
            format,
        } => {
            Limits::check("matrix order", order, MAX_MATRIX_ORDER)?;
            let m = substitution_matrix(&parse_series(&f, order)?, order)?;
            let p = one_param_power(&m, &parse_rational(&lambda)?);
            out = match format {
                MatrixFormat::Table => p.matrix().to_table(),
                MatrixFormat::Csv => p.matrix().to_csv(),
                MatrixFormat::Json => p.series().to_json() + "\n",
            };
        }
        Command::HopfCheck {
            max_weight,
            samples,
            seed,
        } => {
            let report = hopf_axiom_suite(max_weight, samples, seed)?;
            let code = if report.all_passed() {
                EXIT_OK
            } else {
                EXIT_VERIFY
            };
            let stderr = report
                .failures()
                .map(|c| {
                    format!(
                        "error[E_VERIFY]: {} failed on {}/{} at weight {}\n",
                        c.axiom, c.algebra, c.coproduct, c.weight
                    )
                })
                .collect();
            return Ok(Outcome {
                code,
                stdout: report.to_json() + "\n",
                stderr,
            });
        }
        Command::Sweedler { max_weight } => {
            let (checked, failures) = sweedler_check(max_weight, &limits)?;
            writeln!(
                out,
                "checked {checked} diagrams, {} failures",
                failures.len()
            )
            .unwrap();
            let stderr: String = failures
                .iter()
                .map(|d| format!("error[E_VERIFY]: identity fails for {d}\n"))
                .collect();
            let code = if failures.is_empty() {
                EXIT_OK
            } else {
                EXIT_VERIFY
            };
            return Ok(Outcome {
                code,
                stdout: out,
                stderr,
            });
        }
    }
    Ok(Outcome::ok(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diag::{canonicalize, diagrams_of_weight};

    fn run_args(args: &[&str]) -> Outcome {
        run(std::iter::once("boson-hopf").chain(args.iter().copied()))
    }

    #[test]
    fn stirling_json() {
        let o = run_args(&[
            "stirling", "--omega", "a+ a", "--rows", "3", "--format", "json",
        ]);
        assert_eq!(o.code, 0, "{}", o.stderr);
        assert_eq!(o.stdout, "[[1],[0,1],[0,1,1],[0,1,3,1]]\n");
    }

    #[test]
    fn error_codes() {
        let o = run_args(&["stirling", "--omega", "a+ + a", "--rows", "3"]);
        assert_eq!(o.code, EXIT_INPUT);
        assert!(
            o.stderr.starts_with("error[E_NOT_HOMOGENEOUS]"),
            "{}",
            o.stderr
        );
        let o = run_args(&["partitions", "--n", "40"]);
        assert_eq!(o.code, EXIT_BOUND);
        assert!(o.stderr.starts_with("error[E_BOUND]"));
        let o = run_args(&["coproduct", "--matrix", "1 x"]);
        assert_eq!(o.code, EXIT_INPUT);
        assert!(o.stderr.starts_with("error[E_PARSE]"));
        let o = run_args(&["nonsense"]);
        assert_eq!(o.code, EXIT_INPUT);
        assert!(o.stderr.starts_with("error[E_USAGE]"));
    }

    #[test]
    fn help_is_success() {
        let o = run_args(&["--help"]);
        assert_eq!(o.code, 0);
        assert!(o.stdout.contains("hopf-check"));
    }

    #[test]
    fn labelled_multiplicities_match_ordered_pairs() {
        for w in 0..=4usize {
            let ordered: Vec<_> = enumerate_ordered_partitions_within(w, &Limits::default())
                .unwrap()
                .collect();
            let mut counts = std::collections::BTreeMap::new();
            for p in &ordered {
                for q in &ordered {
                    *counts
                        .entry(intersection_matrix(p, q).unwrap())
                        .or_insert(0u64) += 1;
                }
            }
            for (m, c) in counts {
                assert_eq!(labelled_multiplicity(&m), BigInt::from(c));
            }
        }
    }

    #[test]
    fn classes_collapse() {
        let a = run_args(&["product", "--m1", "1 1", "--m2", "2", "--classes"]);
        let b = run_args(&["product", "--m1", "2", "--m2", "1 1", "--classes"]);
        assert_eq!(a, b);
        let c = canonicalize(&PackedMatrix::parse("0 1;1 0").unwrap());
        assert_eq!(
            c,
            diagrams_of_weight(2)
                .into_iter()
                .find(|d| d.representative().rows() == 2 && d.representative().cols() == 2)
                .unwrap()
        );
    }
}
