//! Argument model and command dispatch.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use latnrd_core::cone::extreme_rays;
use latnrd_core::dnstar::{
    classify_gamma, dn_ldomain_hrep, glue_vertices, gn_hrep, voronoi_constraints, voronoi_vertices, GammaVector,
    GnPosition,
};
use latnrd_core::nrd::ConstraintMode;
use latnrd_core::{oracle, root_lattice, Error as CoreError, Family, Rational};

use crate::check::ORACLE_RAYS_MAX_ROWS;
use crate::json::{parse_rational_list, GramJson};
use crate::{check, parallel, render, table, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    #[default]
    Text,
    /// Plain vertex dump; `voronoi` only.
    Off,
}

#[derive(Debug, Clone, PartialEq, Parser)]
#[command(name = "latnrd", version, about = "Exact non-rigidity degrees of lattices and the L-domains of Dn*")]
pub struct RunSpec {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Cross-check against brute-force oracles.
    #[arg(long, global = true)]
    pub oracle: bool,
}

#[derive(Debug, Clone, PartialEq, Subcommand)]
pub enum Command {
    /// Non-rigidity degree of a root lattice or a Gram matrix file.
    Nrd(NrdArgs),
    /// Recompute the reference table of root lattices.
    Table {
        #[arg(long)]
        all_pairs: bool,
    },
    /// Extreme rays of the closure of G_n, or of the domain D_n.
    Cone {
        #[arg(long)]
        n: usize,
        /// List the extreme forms of D_n instead of the rays of G_n.
        #[arg(long)]
        ldomain: bool,
    },
    /// Voronoi vertices of L(gamma); gamma defaults to all ones.
    Voronoi {
        #[arg(long)]
        n: Option<usize>,
        /// Comma separated rationals such as 3/2,1,1.
        #[arg(long, value_parser = parse_gamma)]
        gamma: Option<GammaArg>,
    },
    /// Invariant suite for Dn* and its domain.
    Check {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Args)]
pub struct NrdArgs {
    #[arg(long, value_parser = parse_family, conflicts_with = "gram")]
    pub family: Option<Family>,
    #[arg(long, conflicts_with = "gram")]
    pub n: Option<usize>,
    /// JSON file `{"n": .., "entries": [[num, den], ..]}`.
    #[arg(long)]
    pub gram: Option<PathBuf>,
    /// Equalities between every pair of minimal vectors of a coset.
    #[arg(long)]
    pub all_pairs: bool,
    /// Include the span basis in text and CSV output.
    #[arg(long)]
    pub span: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GammaArg(pub Vec<Rational>);

fn parse_gamma(s: &str) -> std::result::Result<GammaArg, String> {
    parse_rational_list(s).map(GammaArg).map_err(|e| e.to_string())
}

fn parse_family(s: &str) -> std::result::Result<Family, String> {
    s.parse::<Family>().map_err(|e| e.to_string())
}

/// Rendered output and the process exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub status: u8,
}

fn mode(all_pairs: bool) -> ConstraintMode {
    if all_pairs {
        ConstraintMode::AllPairs
    } else {
        ConstraintMode::Star
    }
}

fn usage(msg: impl Into<String>) -> Error {
    Error::Usage(msg.into())
}

fn read_gram(path: &Path) -> Result<GramJson> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io { path: path.display().to_string(), source })?;
    Ok(serde_json::from_str(&text)?)
}

/// Validated form of the arguments; no computation has happened yet.
enum Plan {
    NrdFamily { family: Family, n: usize, mode: ConstraintMode, span: bool },
    NrdGram { name: String, gram: GramJson, mode: ConstraintMode, span: bool },
    Table { mode: ConstraintMode },
    Cone { n: usize, ldomain: bool },
    Voronoi { gamma: GammaVector },
    Check { n: usize },
}

impl RunSpec {
    fn plan(&self) -> Result<Plan> {
        if self.format == Format::Off && !matches!(self.command, Command::Voronoi { .. }) {
            return Err(usage("--format off is only available for voronoi"));
        }
        Ok(match &self.command {
            Command::Nrd(args) => match (&args.gram, args.family) {
                (Some(path), _) => Plan::NrdGram {
                    name: path.file_stem().map_or_else(|| "gram".into(), |s| s.to_string_lossy().into_owned()),
                    gram: read_gram(path)?,
                    mode: mode(args.all_pairs),
                    span: args.span,
                },
                (None, Some(family)) => {
                    let n = args.n.or(family.fixed_dim()).ok_or_else(|| usage("--n is required for this family"))?;
                    Plan::NrdFamily { family, n, mode: mode(args.all_pairs), span: args.span }
                }
                (None, None) => return Err(usage("nrd needs --family or --gram")),
            },
            Command::Table { all_pairs } => Plan::Table { mode: mode(*all_pairs) },
            Command::Cone { n, ldomain } => {
                let min = if *ldomain { 4 } else { 3 };
                if *n < min {
                    return Err(usage(format!("cone needs n >= {min}")));
                }
                Plan::Cone { n: *n, ldomain: *ldomain }
            }
            Command::Voronoi { n, gamma } => {
                let values = match (n, gamma) {
                    (_, Some(GammaArg(g))) => {
                        if n.is_some_and(|n| n != g.len()) {
                            return Err(usage(format!("--n does not match the {} gamma entries", g.len())));
                        }
                        g.clone()
                    }
                    (Some(n), None) => vec![Rational::from_integer(1.into()); *n],
                    (None, None) => return Err(usage("voronoi needs --n or --gamma")),
                };
                if values.len() < 3 {
                    return Err(usage("voronoi needs n >= 3"));
                }
                if let Some(index) = values.iter().position(|v| *v <= Rational::from_integer(0.into())) {
                    return Err(CoreError::NonPositiveGamma { index }.into());
                }
                if self.oracle && values.len() > check::ORACLE_VERTICES_MAX_N {
                    return Err(usage(format!("--oracle supports n <= {}", check::ORACLE_VERTICES_MAX_N)));
                }
                Plan::Voronoi { gamma: GammaVector::new(values)? }
            }
            Command::Check { n } => {
                if *n < 4 {
                    return Err(usage("check needs n >= 4"));
                }
                Plan::Check { n: *n }
            }
        })
    }

    /// Runs the command and renders its output.
    pub fn execute(&self) -> Result<Outcome> {
        let format = self.format;
        match self.plan()? {
            Plan::NrdFamily { family, n, mode, span } => {
                let g = root_lattice(family, n)?;
                let result = parallel::nrd(&g, mode)?;
                ok(render::nrd(&family.label(n), &result, span, format)?)
            }
            Plan::NrdGram { name, gram, mode, span } => {
                let g = gram.to_gram()?;
                let result = parallel::nrd(&g, mode)?;
                ok(render::nrd(&name, &result, span, format)?)
            }
            Plan::Table { mode } => {
                let rows = table::run(mode);
                let status = if rows.iter().all(table::TableRow::passed) { 0 } else { 1 };
                Ok(Outcome { output: render::table(&rows, format)?, status })
            }
            Plan::Cone { n, ldomain } => {
                let (name, h) = if ldomain { (format!("D{n}"), dn_ldomain_hrep(n)?) } else { (format!("G{n}"), gn_hrep(n)?) };
                let mut rays = extreme_rays(&h)?;
                rays.sort();
                let mut output = render::rays(&name, h.dim(), &rays, format)?;
                let mut status = 0;
                if self.oracle {
                    if h.inequalities().len() > ORACLE_RAYS_MAX_ROWS {
                        return Err(usage(format!("--oracle supports cones with at most {ORACLE_RAYS_MAX_ROWS} inequalities")));
                    }
                    let agree = oracle::brute_force_rays(&h) == rays;
                    status = u8::from(!agree);
                    output.push_str(&oracle_line(format, agree));
                }
                Ok(Outcome { output, status })
            }
            Plan::Voronoi { gamma } => {
                let n = gamma.dim();
                let (mut output, points): (String, BTreeSet<Vec<Rational>>) = match classify_gamma(&gamma) {
                    GnPosition::Interior => {
                        let vs = voronoi_vertices(&gamma)?;
                        let points = vs.iter().map(|v| v.coords.clone()).collect();
                        (render::vertices(&gamma, &vs, format)?, points)
                    }
                    GnPosition::Boundary { .. } => {
                        let report = glue_vertices(&gamma)?;
                        let points = report.vertices.iter().cloned().collect();
                        (render::glue(&gamma, &report, format)?, points)
                    }
                    GnPosition::Outside => return Err(CoreError::GammaOutsideClosure.into()),
                };
                let mut status = 0;
                if self.oracle {
                    let brute: BTreeSet<Vec<Rational>> =
                        oracle::brute_force_vertices(&voronoi_constraints(&gamma), n).into_iter().collect();
                    let agree = brute == points;
                    status = u8::from(!agree);
                    output.push_str(&oracle_line(format, agree));
                }
                Ok(Outcome { output, status })
            }
            Plan::Check { n } => {
                let report = check::run(n, self.oracle)?;
                let status = u8::from(!report.passed);
                Ok(Outcome { output: render::check(&report, format)?, status })
            }
        }
    }
}

fn ok(output: String) -> Result<Outcome> {
    Ok(Outcome { output, status: 0 })
}

/// Oracle verdicts go to the text output only, so JSON, CSV and vertex
/// dumps stay parseable; the exit status carries the verdict everywhere.
fn oracle_line(format: Format, agree: bool) -> String {
    match (format, agree) {
        (Format::Text, true) => "oracle agrees\n".into(),
        (Format::Text, false) => "oracle DISAGREES\n".into(),
        _ => String::new(),
    }
}
