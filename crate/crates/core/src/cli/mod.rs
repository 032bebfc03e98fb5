//! Command-line front end.
//!
//! [`run`] parses arguments, dispatches to the engine and returns the text to
//! print together with the process exit code, so it can be driven in-process.

pub mod report;
pub mod spec;

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::admissibility::{FilteredType, IntersectionProfile, MinusculeHodge};
use crate::classifier;
use crate::error::{Result, SlopeError};
use crate::slopecalc::SlopeType;

pub use spec::parse_slopes;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NOT_EQUAL: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ProfileMode {
    Generic,
}

#[derive(Debug, Parser)]
#[command(
    name = "slopelab",
    version,
    about = "Exact slope arithmetic for isocrystals and φ-modules"
)]
pub struct Cli {
    /// Output format; defaults to $SLOPELAB_FORMAT, then `table`.
    #[arg(
        long,
        global = true,
        value_enum,
        env = "SLOPELAB_FORMAT",
        default_value = "table"
    )]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether the weakly admissible and admissible loci coincide.
    Classify {
        #[arg(long, allow_hyphen_values = true)]
        iso: String,
    },
    /// Test weak admissibility of a minuscule filtration.
    Wadm {
        #[arg(long, allow_hyphen_values = true)]
        iso: String,
        /// Filtration datum `h,f`.
        #[arg(long, allow_hyphen_values = true)]
        hodge: String,
        #[arg(long, value_enum, default_value = "generic")]
        profile: ProfileMode,
    },
    /// List the possible slope types of the attached φ-module.
    Enumerate {
        #[arg(long, allow_hyphen_values = true)]
        iso: String,
        #[arg(long, allow_hyphen_values = true)]
        hodge: String,
    },
    /// Tensor product of two slope types.
    Tensor {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
    /// Dual slope type.
    Dual {
        #[arg(long, allow_hyphen_values = true)]
        iso: String,
    },
    /// Determinant, the top exterior power.
    Det {
        #[arg(long, allow_hyphen_values = true)]
        iso: String,
    },
    /// Exterior power.
    Ext {
        #[arg(long, allow_hyphen_values = true)]
        iso: String,
        k: u64,
    },
    /// Restriction along `φ ↦ φ^B`.
    Restrict {
        #[arg(long, allow_hyphen_values = true)]
        iso: String,
        b: u64,
    },
    /// Dimension of `Hom(A, B)`.
    Homdim {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
    /// Dimension of the `φ`-invariants.
    H0 {
        #[arg(long, allow_hyphen_values = true)]
        iso: String,
    },
    /// Tate twist by `R`.
    Twist {
        #[arg(long, allow_hyphen_values = true)]
        iso: String,
        #[arg(allow_negative_numbers = true)]
        r: i64,
    },
    /// Least common multiple of the slope denominators.
    Decency {
        #[arg(long, allow_hyphen_values = true)]
        iso: String,
    },
    /// Newton polygon breakpoints.
    Polygon {
        #[arg(long, allow_hyphen_values = true)]
        iso: String,
        #[arg(long)]
        sketch: bool,
    },
    /// Rank, degree, weight, slope range and endomorphism algebras.
    Info {
        #[arg(long, allow_hyphen_values = true)]
        iso: String,
    },
    /// Exhaustive classifier self-check over all slope data in [0,1].
    Sweep {
        #[arg(long)]
        max_rank: u64,
    },
}

/// Result of one CLI invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Report {
    command: &'static str,
    input: Value,
    result: Value,
    table: String,
    code: i32,
}

impl Report {
    fn new(command: &'static str, input: Value, result: Value, table: String) -> Self {
        Report {
            command,
            input,
            result,
            table,
            code: EXIT_OK,
        }
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match dispatch(&cli.command) {
        Ok(rep) => {
            let stdout = match cli.format {
                Format::Json => {
                    report::render(&report::envelope(rep.command, rep.input, rep.result))
                }
                Format::Table => rep.table,
            };
            Outcome {
                code: rep.code,
                stdout,
                stderr: String::new(),
            }
        }
        Err(e) => Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn parse_hodge(text: &str) -> Result<(i64, u64)> {
    let bad = || SlopeError::parse(0, format!("expected Hodge datum h,f, got {text:?}"));
    let (h, f) = text.split_once(',').ok_or_else(bad)?;
    let h = h.trim().parse::<i64>().map_err(|_| bad())?;
    let f = f.trim().parse::<u64>().map_err(|_| bad())?;
    Ok((h, f))
}

fn unary(command: &'static str, iso: &str, out: SlopeType) -> Report {
    let table = format!("{out}\n");
    Report::new(
        command,
        json!({ "iso": iso }),
        report::slope_type(&out),
        table,
    )
}

fn dispatch(cmd: &Command) -> Result<Report> {
    Ok(match cmd {
        Command::Classify { iso } => {
            let t = parse_slopes(iso)?;
            let v = classifier::classify(&t)?;
            let mut table = format!("classify {}\n", t.to_spec());
            match (&v.pattern, &v.witness) {
                (Some(p), _) => {
                    let _ = writeln!(table, "verdict: equal");
                    let _ = writeln!(table, "pattern: {p}");
                }
                (None, Some(w)) => {
                    let _ = writeln!(table, "verdict: not-equal");
                    let _ = writeln!(table, "witness: {w} = {}", w.summands());
                }
                (None, None) => unreachable!("classify guarantees a pattern or a witness"),
            }
            let mut rep = Report::new(
                "classify",
                json!({ "iso": iso }),
                report::verdict(&v),
                table,
            );
            rep.code = if v.equal { EXIT_OK } else { EXIT_NOT_EQUAL };
            rep
        }
        Command::Wadm {
            iso,
            hodge,
            profile,
        } => {
            let t = parse_slopes(iso)?;
            let (h, f) = parse_hodge(hodge)?;
            let ProfileMode::Generic = profile;
            let ft = FilteredType::new(
                t.clone(),
                MinusculeHodge::new(h, f, t.rank())?,
                IntersectionProfile::Generic,
            )?;
            let r = ft.wa_report()?;
            let mut table = format!(
                "weakly admissible: {}\nt_N = {}, t_H = {}\n{:<16} {:>5} {:>5} {:>6}  ok\n",
                r.is_weakly_admissible(),
                r.t_n,
                r.t_h,
                "selection",
                "rank",
                "t_N",
                "bound"
            );
            for s in &r.subs {
                let _ = writeln!(
                    table,
                    "{:<16} {:>5} {:>5} {:>6}  {}",
                    s.selection.to_label(),
                    s.rank,
                    s.t_n,
                    s.bound,
                    if s.holds() { "yes" } else { "no" }
                );
            }
            Report::new(
                "wadm",
                json!({ "iso": iso, "hodge": hodge, "profile": "generic" }),
                report::wa_report(&r),
                table,
            )
        }
        Command::Enumerate { iso, hodge } => {
            let t = parse_slopes(iso)?;
            let (h, f) = parse_hodge(hodge)?;
            let ft = FilteredType::generic(t, h, f)?;
            let cands = ft.enumerate_m_candidates()?;
            let (lo, hi) = ft.candidate_window()?;
            let mut table = format!(
                "deg M = {}, slopes in [{lo}, {hi}], {} candidate(s)\n",
                ft.deg_m(),
                cands.len()
            );
            for c in &cands {
                let tag = if c.is_unit_root() {
                    "  (unit-root)"
                } else {
                    ""
                };
                let _ = writeln!(table, "{c}{tag}");
            }
            Report::new(
                "enumerate",
                json!({ "iso": iso, "hodge": hodge }),
                json!({
                    "deg_m": ft.deg_m(),
                    "window": [report::fraction(lo), report::fraction(hi)],
                    "candidates": cands.iter().map(|c| {
                        let mut v = report::slope_type(c);
                        v["unit_root"] = json!(c.is_unit_root());
                        v
                    }).collect::<Vec<_>>(),
                }),
                table,
            )
        }
        Command::Tensor { a, b } => {
            let out = parse_slopes(a)?.tensor(&parse_slopes(b)?);
            let mut rep = unary("tensor", a, out);
            rep.input = json!({ "a": a, "b": b });
            rep
        }
        Command::Dual { iso } => unary("dual", iso, parse_slopes(iso)?.dual()),
        Command::Det { iso } => unary("det", iso, parse_slopes(iso)?.determinant()),
        Command::Ext { iso, k } => {
            let mut rep = unary("ext", iso, parse_slopes(iso)?.exterior_power(*k)?);
            rep.input = json!({ "iso": iso, "k": k });
            rep
        }
        Command::Restrict { iso, b } => {
            let mut rep = unary(
                "restrict",
                iso,
                parse_slopes(iso)?.frobenius_restriction(*b)?,
            );
            rep.input = json!({ "iso": iso, "b": b });
            rep
        }
        Command::Twist { iso, r } => {
            let mut rep = unary("twist", iso, parse_slopes(iso)?.tate_twist(*r));
            rep.input = json!({ "iso": iso, "r": r });
            rep
        }
        Command::Homdim { a, b } => {
            let n = parse_slopes(a)?.hom_dim(&parse_slopes(b)?);
            Report::new(
                "homdim",
                json!({ "a": a, "b": b }),
                report::ext_count(n),
                format!("{n}\n"),
            )
        }
        Command::H0 { iso } => {
            let n = parse_slopes(iso)?.h0_dim();
            Report::new(
                "h0",
                json!({ "iso": iso }),
                report::ext_count(n),
                format!("{n}\n"),
            )
        }
        Command::Decency { iso } => {
            let s = parse_slopes(iso)?.decency_integer()?;
            Report::new("decency", json!({ "iso": iso }), json!(s), format!("{s}\n"))
        }
        Command::Polygon { iso, sketch } => {
            let p = parse_slopes(iso)?.newton_polygon();
            let mut table = format!("{p}\n");
            let mut result = json!({ "breakpoints": report::polygon(&p) });
            if *sketch {
                table.push_str(&p.sketch());
                result["sketch"] = json!(p.sketch());
            }
            Report::new(
                "polygon",
                json!({ "iso": iso, "sketch": sketch }),
                result,
                table,
            )
        }
        Command::Info { iso } => {
            let t = parse_slopes(iso)?;
            let weight = t.weight()?;
            let mut table = format!(
                "{t}\nrank {}, degree {}, weight {weight}\nslopes in [{}, {}], isoclinic: {}\n",
                t.rank(),
                t.degree(),
                t.min_slope()?,
                t.max_slope()?,
                t.is_isoclinic()
            );
            let mut ends = Vec::new();
            for (s, _) in t.summands() {
                let (dim, hasse) = s.end_algebra();
                let _ = writeln!(table, "End {s}: dimension {dim}, Hasse invariant {hasse}");
                ends.push(json!({ "summand": format!("{s}"), "dimension": dim, "hasse": report::fraction(hasse) }));
            }
            let mut result = report::slope_type(&t);
            result["weight"] = report::fraction(weight);
            result["min_slope"] = report::fraction(t.min_slope()?);
            result["max_slope"] = report::fraction(t.max_slope()?);
            result["isoclinic"] = json!(t.is_isoclinic());
            result["end_algebras"] = json!(ends);
            Report::new("info", json!({ "iso": iso }), result, table)
        }
        Command::Sweep { max_rank } => {
            let r = classifier::sweep(*max_rank);
            let mut table = format!(
                "checked {} slope types of rank <= {}: {} equal, {} not equal, {} violation(s)\n",
                r.checked,
                r.max_rank,
                r.equal,
                r.checked - r.equal,
                r.violations.len()
            );
            for v in &r.violations {
                let _ = writeln!(table, "{v}");
            }
            let mut rep = Report::new(
                "sweep",
                json!({ "max_rank": max_rank }),
                report::sweep(&r),
                table,
            );
            if !r.violations.is_empty() {
                rep.code = EXIT_VIOLATION;
            }
            rep
        }
    })
}
