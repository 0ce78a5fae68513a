//! Command-line front end. Output is plain text in canonical order; exit
//! codes are 0 on success, 1 when a verification fails, 2 on usage errors.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::conjectures::{check_log_concavity, check_surj_to_isom, check_surjection_chain, check_uz_identity, render_star_pattern, star_pattern};
use crate::error::{Error, Result};
use crate::formulas::{grfrob, grfrob_involution, hilbert, hilbert_single, Method};
use crate::lattice::{certify_ls, certify_phi, lattice_path, reflection_pairs, width};
use crate::loci::Locus;
use crate::partitions::Partition;
use crate::report::Report;
use crate::repr::{oracle_graded_frobenius, oracle_hilbert, verify_ideal_equality, verify_involution_ideal, GradedFrobenius};
use crate::selftest::criteria;
use crate::symfunc::{verify_refinement, verify_schur_interchange, verify_schur_sum, DoublySchurExpansion, QPoly, SchurExpansion};

#[derive(Parser, Debug)]
#[command(name = "rook-harmonics", version, about = "Graded Frobenius images of rook placement and involution loci")]
struct Cli {
    /// Worker threads for parallel sweeps (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Closed-form graded Frobenius image of R(Z_{n,m,r}) or R(UZ_{n,m,r}).
    Grfrob(GrfrobArgs),
    /// Closed-form graded Frobenius image of R(M_{n,a}).
    GrfrobInvolution(InvolutionArgs),
    /// Hilbert series of a locus from the closed formulas.
    Hilbert(LocusArgs),
    /// Locus enumeration.
    #[command(subcommand)]
    Loci(LociCommand),
    /// Lattice paths of strip pairs.
    #[command(subcommand)]
    Paths(PathsCommand),
    /// Brute-force orbit harmonics computations.
    #[command(subcommand)]
    Oracle(OracleCommand),
    /// Exhaustive verification of identities, bijections and propositions.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Conjecture checks.
    #[command(subcommand)]
    Conjecture(ConjectureCommand),
    /// Run the acceptance suite.
    Selftest,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Lines,
    Records,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Signed,
    Bad,
    Good,
    Uz,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum LocusType {
    Rook,
    Uz,
    Involution,
}

#[derive(Args, Debug)]
struct GrfrobArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: usize,
    #[arg(long)]
    r: usize,
    #[arg(long, value_enum, default_value = "signed")]
    method: MethodArg,
    /// Print the Hilbert series instead of the expansion.
    #[arg(long)]
    hilbert: bool,
    #[arg(long, value_enum, default_value = "lines")]
    format: Format,
}

#[derive(Args, Debug)]
struct InvolutionArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    a: usize,
    #[arg(long)]
    hilbert: bool,
    #[arg(long, value_enum, default_value = "lines")]
    format: Format,
}

#[derive(Args, Debug)]
struct LocusArgs {
    #[arg(long = "type", value_enum, default_value = "rook")]
    kind: LocusType,
    #[arg(long)]
    n: usize,
    /// Columns (rook and upper rook loci).
    #[arg(long)]
    m: Option<usize>,
    /// Number of rooks (rook and upper rook loci).
    #[arg(long)]
    r: Option<usize>,
    /// Fixed points (involution loci).
    #[arg(long)]
    a: Option<usize>,
}

impl LocusArgs {
    fn locus(&self) -> Result<Locus> {
        let need = |v: Option<usize>, name: &str| {
            v.ok_or_else(|| Error::Parse(format!("--{name} is required for --type {:?}", self.kind).to_lowercase()))
        };
        Ok(match self.kind {
            LocusType::Rook => Locus::Rook { n: self.n, m: need(self.m, "m")?, r: need(self.r, "r")? },
            LocusType::Uz => Locus::UpperRook { n: self.n, m: need(self.m, "m")?, r: need(self.r, "r")? },
            LocusType::Involution => Locus::Involution { n: self.n, a: need(self.a, "a")? },
        })
    }
}

#[derive(Subcommand, Debug)]
enum LociCommand {
    /// Number of points; `--dump` also lists them.
    Count {
        #[command(flatten)]
        locus: LocusArgs,
        #[arg(long)]
        dump: bool,
    },
}

#[derive(Subcommand, Debug)]
enum PathsCommand {
    /// Steps, heights, reflection pairs and width of (μ, λ1, λ2).
    Show {
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        l1: Partition,
        #[arg(long)]
        l2: Partition,
        /// Number of steps to print (default: the width).
        #[arg(long)]
        len: Option<usize>,
    },
}

#[derive(Subcommand, Debug)]
enum OracleCommand {
    /// Graded Frobenius image by orbit harmonics.
    Grfrob {
        #[command(flatten)]
        locus: LocusArgs,
        #[arg(long)]
        dmax: Option<usize>,
        /// Print graded dimensions instead.
        #[arg(long)]
        hilbert: bool,
        #[arg(long, value_enum, default_value = "lines")]
        format: Format,
    },
}

#[derive(Args, Debug)]
struct BoardArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: usize,
}

#[derive(Subcommand, Debug)]
enum VerifyCommand {
    /// gr I(Z) against the explicit generators, degree by degree.
    Ideal {
        #[arg(long = "type", value_enum, default_value = "rook")]
        kind: LocusType,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        a: Option<usize>,
        #[arg(long)]
        dmax: Option<usize>,
    },
    /// Refinement, summation and interchange identities of SF_d.
    Identities {
        #[command(flatten)]
        board: BoardArgs,
    },
    /// Exhaustive Φ and left-shadow bijections.
    Bijections {
        #[command(flatten)]
        board: BoardArgs,
    },
    /// Surjection chains between consecutive r.
    Chain {
        #[command(flatten)]
        board: BoardArgs,
    },
    /// Isomorphisms below d = min(n,m) − r and the star diagram.
    Isom {
        #[command(flatten)]
        board: BoardArgs,
        /// Also print the star diagram.
        #[arg(long)]
        diagram: bool,
    },
    /// Upper-rook quotient identity.
    Uz {
        #[command(flatten)]
        board: BoardArgs,
    },
}

#[derive(Subcommand, Debug)]
enum ConjectureCommand {
    /// Equivariant log-concavity of the graded pieces.
    Logconcavity {
        #[command(flatten)]
        board: BoardArgs,
        /// Single r (default: every r).
        #[arg(long)]
        r: Option<usize>,
    },
}

/// Entry point used by the binary.
pub fn run(args: &[String]) -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

/// Runs the CLI writing to the given streams; returns the exit code.
pub fn run_with(args: &[String], out: &mut impl Write, err: &mut impl Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    2
                }
            };
        }
    };
    if let Some(jobs) = cli.jobs {
        // a second initialisation in the same process keeps the first pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build_global();
    }
    let mut lines = Vec::new();
    match execute(cli.command, &mut lines) {
        Ok(ok) => {
            for line in lines {
                let _ = writeln!(out, "{line}");
            }
            if ok {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Domain(_) | Error::Parse(_) => 2,
                _ => 1,
            }
        }
    }
}

fn product_lines(f: &DoublySchurExpansion, format: Format) -> Vec<String> {
    match format {
        Format::Lines => f.to_lines(),
        Format::Records => f.to_records(),
    }
}

fn single_lines(f: &SchurExpansion, format: Format) -> Vec<String> {
    match format {
        Format::Lines => f.to_lines(),
        Format::Records => f.to_records(),
    }
}

fn report_lines(report: &Report, lines: &mut Vec<String>) -> bool {
    lines.extend(report.lines());
    report.passed()
}

/// Runs a command, collecting output lines; `Ok(false)` signals a failed
/// verification.
fn execute(command: Command, lines: &mut Vec<String>) -> Result<bool> {
    match command {
        Command::Grfrob(a) => {
            let method = match a.method {
                MethodArg::Signed => Method::Signed,
                MethodArg::Bad => Method::Bad,
                MethodArg::Good => Method::Good,
                MethodArg::Uz => Method::Uz,
            };
            let f = grfrob(method, a.n, a.m, a.r)?;
            if a.hilbert {
                lines.push(hilbert(&f).to_string());
            } else {
                lines.extend(product_lines(&f, a.format));
            }
        }
        Command::GrfrobInvolution(a) => {
            let f = grfrob_involution(a.n, a.a)?;
            if a.hilbert {
                lines.push(hilbert_single(&f).to_string());
            } else {
                lines.extend(single_lines(&f, a.format));
            }
        }
        Command::Hilbert(a) => {
            let h = match a.locus()? {
                Locus::Rook { n, m, r } => hilbert(&grfrob(Method::Signed, n, m, r)?),
                Locus::UpperRook { n, m, r } => hilbert(&grfrob(Method::Uz, n, m, r)?),
                Locus::Involution { n, a } => hilbert_single(&grfrob_involution(n, a)?),
            };
            lines.push(h.to_string());
        }
        Command::Loci(LociCommand::Count { locus, dump }) => {
            let locus = locus.locus()?;
            lines.push(locus.count().to_string());
            if dump {
                lines.extend(locus.dump());
            }
        }
        Command::Paths(PathsCommand::Show { mu, l1, l2, len }) => {
            let wid = width(&mu, &l1, &l2)?;
            let path = lattice_path(&mu, &l1, &l2, len.unwrap_or(wid))?;
            lines.extend(path.dump());
            let pairs: Vec<String> = reflection_pairs(&path).iter().map(|(i, j)| format!("({i},{j})")).collect();
            lines.push(format!("pairs={}", pairs.join(",")));
            lines.push(format!("width={wid}"));
        }
        Command::Oracle(OracleCommand::Grfrob { locus, dmax, hilbert, format }) => {
            let locus = locus.locus()?;
            if locus.count() == 0 {
                return Err(Error::Domain("the locus is empty".into()));
            }
            if hilbert {
                let dmax = dmax.unwrap_or_else(|| locus.board().0.max(locus.board().1));
                let dims = oracle_hilbert(&locus, dmax);
                lines.push(QPoly::from_coeffs(dims.into_iter().map(num_bigint::BigInt::from)).to_string());
            } else {
                match oracle_graded_frobenius(&locus, dmax)? {
                    GradedFrobenius::Product(f) => lines.extend(product_lines(&f, format)),
                    GradedFrobenius::Single(f) => lines.extend(single_lines(&f, format)),
                }
            }
        }
        Command::Verify(v) => return verify(v, lines),
        Command::Conjecture(ConjectureCommand::Logconcavity { board, r }) => {
            let rs: Vec<usize> = match r {
                Some(r) => vec![r],
                None => (0..=board.n.min(board.m)).collect(),
            };
            let mut ok = true;
            for r in rs {
                ok &= report_lines(&check_log_concavity(board.n, board.m, r)?, lines);
            }
            return Ok(ok);
        }
        Command::Selftest => {
            let mut ok = true;
            for c in criteria() {
                match (c.run)() {
                    Ok(report) => {
                        let verdict = if report.passed() { "PASS" } else { "FAIL" };
                        lines.push(format!("criterion {} {verdict} {}", c.id, c.title));
                        lines.extend(report.lines().into_iter().map(|l| format!("  {l}")));
                        ok &= report.passed();
                    }
                    Err(e) => {
                        lines.push(format!("criterion {} FAIL {} error: {e}", c.id, c.title));
                        ok = false;
                    }
                }
            }
            return Ok(ok);
        }
    }
    Ok(true)
}

fn verify(command: VerifyCommand, lines: &mut Vec<String>) -> Result<bool> {
    match command {
        VerifyCommand::Ideal { kind, n, m, r, a, dmax } => {
            let report = match kind {
                LocusType::Involution => {
                    let a = a.ok_or_else(|| Error::Parse("--a is required for --type involution".into()))?;
                    let dmax = dmax.unwrap_or((n.saturating_sub(a)) / 2 + 1);
                    verify_involution_ideal(n, a, dmax)?
                }
                LocusType::Rook => {
                    let m = m.ok_or_else(|| Error::Parse("--m is required".into()))?;
                    let r = r.ok_or_else(|| Error::Parse("--r is required".into()))?;
                    verify_ideal_equality(n, m, r, dmax.unwrap_or(r + 1))?
                }
                LocusType::Uz => return Err(Error::Domain("no generating set is known for the upper rook locus".into())),
            };
            Ok(report_lines(&report, lines))
        }
        VerifyCommand::Identities { board: BoardArgs { n, m } } => {
            let mut report = Report::new();
            for r in 0..=n.min(m) {
                report.push("refinement", verify_refinement(n, m, r)?, format!("n={n} m={m} r={r}"));
            }
            report.push("schur-sum", verify_schur_sum(n, m)?, format!("n={n} m={m}"));
            let k = n.max(m);
            let mut bad = Vec::new();
            for d in 0..=n.min(m) {
                for p in 0..=k {
                    for q in 0..=k {
                        if !verify_schur_interchange(d, n - d, m - d, p, q).holds {
                            bad.push(format!("(d={d},p={p},q={q})"));
                        }
                    }
                }
            }
            report.push("schur-interchange", bad.is_empty(), format!("n={n} m={m} {}", bad.join(",")).trim_end().to_string());
            Ok(report_lines(&report, lines))
        }
        VerifyCommand::Bijections { board: BoardArgs { n, m } } => {
            let mut report = Report::new();
            for (name, res) in [("phi", certify_phi(n, m)), ("ls", certify_ls(n, m))] {
                let detail = match res.failures.first() {
                    None => String::new(),
                    Some(f) => format!("failures={} first={f}", res.failures.len()),
                };
                report.push(name, res.passed(), detail);
            }
            Ok(report_lines(&report, lines))
        }
        VerifyCommand::Chain { board: BoardArgs { n, m } } => Ok(report_lines(&check_surjection_chain(n, m)?, lines)),
        VerifyCommand::Isom { board: BoardArgs { n, m }, diagram } => {
            let ok = report_lines(&check_surj_to_isom(n, m)?, lines);
            if diagram {
                lines.extend(render_star_pattern(&star_pattern(n, m)?));
            }
            Ok(ok)
        }
        VerifyCommand::Uz { board: BoardArgs { n, m } } => Ok(report_lines(&check_uz_identity(n, m)?, lines)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &str) -> (i32, String, String) {
        let argv: Vec<String> = std::iter::once("rook-harmonics")
            .chain(args.split_whitespace())
            .map(String::from)
            .collect();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run_with(&argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn grfrob_lines() {
        let (code, out, _) = call("grfrob --n 2 --m 2 --r 1 --method signed");
        assert_eq!(code, 0);
        let lines: Vec<_> = out.lines().collect();
        assert_eq!(lines.len(), 4);
        assert!(lines[0].starts_with("q^0  s[2]*s[2]"));
        assert!(lines[1..].iter().all(|l| l.starts_with("q^1")));
        let (_, out, _) = call("grfrob --n 2 --m 2 --r 1 --hilbert");
        assert_eq!(out.trim(), "1 + 3q");
    }

    #[test]
    fn usage_errors() {
        let (code, out, err) = call("grfrob --n 2");
        assert_eq!(code, 2);
        assert!(out.is_empty());
        assert!(!err.is_empty());
        let (code, _, err) = call("grfrob --n 2 --m 2 --r 3");
        assert_eq!(code, 2);
        assert!(err.contains("error"));
        let (code, _, _) = call("frobnicate");
        assert_eq!(code, 2);
    }

    #[test]
    fn counts_and_checks() {
        let (code, out, _) = call("loci count --type rook --n 4 --m 4 --r 4");
        assert_eq!((code, out.trim()), (0, "24"));
        let (code, out, _) = call("verify bijections --n 3 --m 3");
        assert_eq!(code, 0);
        assert_eq!(out.lines().collect::<Vec<_>>(), vec!["CHECK phi PASS", "CHECK ls PASS"]);
    }
}
