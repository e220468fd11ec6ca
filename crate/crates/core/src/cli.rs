//! The `brown-kervaire` command line.
//!
//! Exit status 0 on success, 1 on a domain error (message on stderr),
//! 2 on a usage error.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::classify::classification_report;
use crate::error::{Error, Result};
use crate::forms::{
    arf, gauss_sum, isometric, verify_quadratic_law, witt_equivalent, Triple, Z2QuadraticForm,
};
use crate::groups::{AbelianGroup, Coefficient, DualElement, DEFAULT_CAP};
use crate::homotopy::{kunneth_cross, pi_n_so_n, splitting_check, stable_homotopy_em, CyclicGroup};
use crate::steenrod::{chi, phi_relation, polynomial_action, psi_relation, SteenrodElement};

#[derive(Parser, Debug)]
#[command(name = "brown-kervaire", version, about = "Steenrod algebra, quadratic refinements and classification data")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Mod-2 Steenrod algebra.
    #[command(subcommand)]
    Adem(AdemCommand),
    /// 2-local stable homotopy of Eilenberg-MacLane spaces and pi_n(SO(n)).
    #[command(subcommand)]
    Homotopy(HomotopyCommand),
    /// Quadratic refinements read from JSON documents.
    #[command(subcommand)]
    Forms(FormsCommand),
    /// Classification data.
    #[command(subcommand)]
    Classify(ClassifyCommand),
}

#[derive(Subcommand, Debug)]
pub enum AdemCommand {
    /// Admissible normal form of a sum of Sq words.
    Normalize { expr: String },
    /// Product of two elements.
    Mul { a: String, b: String },
    /// Antipode.
    Chi { expr: String },
    /// The phi relation family at n.
    PhiRelation {
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
    },
    /// The psi relation family at n, raw and modulo the right ideal of Sq1.
    PsiRelation {
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
    },
    /// Action on x1 x2 ... xM in F2[x1, ..., xM].
    Oracle {
        expr: String,
        #[arg(long, allow_negative_numbers = true)]
        vars: i64,
    },
}

#[derive(Subcommand, Debug)]
pub enum HomotopyCommand {
    /// pi_{n+2}^s K(H, n), 2-locally.
    Em {
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        #[arg(long)]
        group: String,
    },
    /// Cross term of two cyclic groups.
    Cross { g1: String, g2: String },
    /// pi_n(SO(n)).
    So {
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
    },
    /// Compare pi(H1 + H2) with pi(H1) + pi(H2) + cross terms.
    SplitCheck {
        g1: String,
        g2: String,
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
    },
}

#[derive(Args, Debug)]
pub struct CapArg {
    /// Upper bound on |Hom(H, Z/4)|.
    #[arg(long = "max-size", default_value_t = DEFAULT_CAP)]
    pub max_size: u64,
}

#[derive(Subcommand, Debug)]
pub enum FormsCommand {
    /// Check the quadratic law on every pair of elements.
    Verify {
        triple: PathBuf,
        #[command(flatten)]
        cap: CapArg,
    },
    /// Evaluate phi at Z/4-dual coordinates, e.g. --at 1,0.
    Eval {
        triple: PathBuf,
        #[arg(long)]
        at: String,
    },
    /// Exact Gauss sum.
    Gauss {
        triple: PathBuf,
        #[command(flatten)]
        cap: CapArg,
    },
    /// Arf invariant of a nondegenerate Z/2 quadratic form.
    Arf { form: PathBuf },
    /// Isometry of two triples.
    Isometric {
        a: PathBuf,
        b: PathBuf,
        #[command(flatten)]
        cap: CapArg,
    },
    /// Witt equivalence of the quadratic functions of two triples.
    Witt {
        a: PathBuf,
        b: PathBuf,
        #[command(flatten)]
        cap: CapArg,
    },
}

#[derive(Subcommand, Debug)]
pub enum ClassifyCommand {
    /// Isometry classes of admissible data.
    Enumerate {
        #[arg(long)]
        group: String,
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        #[arg(long, default_value_t = 0, value_parser = clap::value_parser!(u8).range(0..=1))]
        delta: u8,
        #[command(flatten)]
        cap: CapArg,
        /// Emit the report as JSON.
        #[arg(long)]
        json: bool,
    },
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::invalid(format!("cannot read {}: {e}", path.display())))
}

fn triple(path: &Path) -> Result<Triple> {
    Triple::from_json(&read(path)?)
}

fn group(text: &str) -> Result<AbelianGroup> {
    text.parse()
}

fn coords(text: &str) -> Result<Vec<u8>> {
    text.split(',')
        .map(|c| c.trim().parse::<u8>().map_err(|_| Error::invalid(format!("bad coordinate '{}'", c.trim()))))
        .collect()
}

fn bool_line(b: bool) -> String {
    if b { "true" } else { "false" }.to_string()
}

/// Executes a parsed command, returning the text for stdout.
pub fn execute(command: &Command) -> Result<String> {
    Ok(match command {
        Command::Adem(c) => match c {
            AdemCommand::Normalize { expr } => expr.parse::<SteenrodElement>()?.to_string(),
            AdemCommand::Mul { a, b } => {
                a.parse::<SteenrodElement>()?.multiply(&b.parse::<SteenrodElement>()?).to_string()
            }
            AdemCommand::Chi { expr } => chi(&expr.parse()?).to_string(),
            AdemCommand::PhiRelation { n } => phi_relation(*n)?.to_string(),
            AdemCommand::PsiRelation { n } => {
                let r = psi_relation(*n)?;
                format!("raw: {}\nreduced: {}", r.raw, r.reduced)
            }
            AdemCommand::Oracle { expr, vars } => polynomial_action(&expr.parse()?, *vars)?.to_string(),
        },
        Command::Homotopy(c) => match c {
            HomotopyCommand::Em { n, group: g } => stable_homotopy_em(*n, &group(g)?)?.to_string(),
            HomotopyCommand::Cross { g1, g2 } => {
                kunneth_cross(g1.parse::<CyclicGroup>()?, g2.parse::<CyclicGroup>()?).to_string()
            }
            HomotopyCommand::So { n } => pi_n_so_n(*n)?.to_string(),
            HomotopyCommand::SplitCheck { g1, g2, n } => bool_line(splitting_check(&group(g1)?, &group(g2)?, *n)?),
        },
        Command::Forms(c) => match c {
            FormsCommand::Verify { triple: p, cap } => bool_line(verify_quadratic_law(triple(p)?.phi(), cap.max_size)?),
            FormsCommand::Eval { triple: p, at } => {
                let t = triple(p)?;
                let x = DualElement::new(t.group(), Coefficient::Z4, coords(at)?)?;
                t.phi().evaluate(&x)?.to_string()
            }
            FormsCommand::Gauss { triple: p, cap } => {
                let s = gauss_sum(triple(p)?.phi(), cap.max_size)?;
                let mut out = String::new();
                for (v, k) in &s.counts {
                    out.push_str(&format!("{v}: {k}\n"));
                }
                match s.exact() {
                    Some((re, 0)) => out.push_str(&format!("sum: {re}")),
                    Some((re, im)) => out.push_str(&format!("sum: {re} {} {}i", if im < 0 { '-' } else { '+' }, im.abs())),
                    None => out.push_str(&format!("sum: {:.6} + {:.6}i", s.re, s.im)),
                }
                out
            }
            FormsCommand::Arf { form } => arf(&Z2QuadraticForm::from_json(&read(form)?)?)?.to_string(),
            FormsCommand::Isometric { a, b, cap } => bool_line(isometric(&triple(a)?, &triple(b)?, cap.max_size)?),
            FormsCommand::Witt { a, b, cap } => {
                bool_line(witt_equivalent(triple(a)?.phi(), triple(b)?.phi(), cap.max_size)?)
            }
        },
        Command::Classify(ClassifyCommand::Enumerate { group: g, n, delta, cap, json }) => {
            let r = classification_report(&group(g)?, *n, *delta, cap.max_size)?;
            if *json {
                r.to_json()
            } else {
                r.to_string().trim_end().to_string()
            }
        }
    })
}

/// Parses `args` (program name first), runs the command and returns the
/// exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    match execute(&cli.command) {
        Ok(text) => {
            let _ = writeln!(out, "{text}");
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}
