//! Text, CSV and JSON renderings. Every renderer is a pure function of its
//! input so output bytes are reproducible.

use latnrd_core::cone::Ray;
use latnrd_core::dnstar::{GammaVector, GlueReport, VoronoiVertex};
use latnrd_core::nrd::NrdResult;
use latnrd_core::Rational;
use serde::Serialize;

use crate::check::CheckReport;
use crate::json::{self, GlueJson, NrdJson, RaysJson, VerticesJson};
use crate::table::TableRow;
use crate::{Format, Result};

/// `3` or `3/2`.
pub fn rat_text(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        json::ratio_text(r)
    }
}

fn join<T>(items: &[T], sep: &str, f: impl Fn(&T) -> String) -> String {
    items.iter().map(f).collect::<Vec<_>>().join(sep)
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

fn one_based(s: &[usize]) -> String {
    join(s, " ", |i| (i + 1).to_string())
}

pub fn nrd(lattice: &str, result: &NrdResult, span: bool, format: Format) -> Result<String> {
    let matrices = result.span_matrices();
    Ok(match format {
        Format::Json => to_json(&NrdJson::from_result(lattice, result)?)?,
        Format::Csv => {
            let mut out = String::from("lattice,n,N,rank,nrd");
            if span {
                out.push_str(",span_basis");
            }
            out.push('\n');
            out.push_str(&format!(
                "{},{},{},{},{}",
                csv_field(lattice),
                result.n,
                result.coeff_dim(),
                result.rank,
                result.nrd
            ));
            if span {
                let text = join(&matrices, ";", |m| join(m.entries(), " ", json::ratio_text));
                out.push(',');
                out.push_str(&csv_field(&text));
            }
            out.push('\n');
            out
        }
        Format::Text | Format::Off => {
            let mut out = format!(
                "lattice {lattice}\nn {}\nN {}\nrank {}\nnrd {}\n",
                result.n,
                result.coeff_dim(),
                result.rank,
                result.nrd
            );
            if span {
                for (i, m) in matrices.iter().enumerate() {
                    out.push_str(&format!("span basis {}\n", i + 1));
                    for row in m.rows() {
                        out.push_str(&format!("  [{}]\n", join(&row, " ", rat_text)));
                    }
                }
            }
            out
        }
    })
}

pub fn table(rows: &[TableRow], format: Format) -> Result<String> {
    let status = |r: &TableRow| if r.passed() { "PASS" } else { "FAIL" };
    let computed = |r: &TableRow| r.computed.map_or_else(|| "error".to_string(), |c| c.to_string());
    Ok(match format {
        Format::Json => to_json(&rows)?,
        Format::Csv => {
            let mut out = String::from("lattice,n,expected,computed,status\n");
            for r in rows {
                out.push_str(&format!("{},{},{},{},{}\n", r.lattice, r.n, r.expected, computed(r), status(r)));
            }
            out
        }
        Format::Text | Format::Off => {
            let mut out = format!("{:<8}{:>4}{:>10}{:>10}  status\n", "lattice", "n", "expected", "computed");
            for r in rows {
                out.push_str(&format!(
                    "{:<8}{:>4}{:>10}{:>10}  {}\n",
                    r.lattice,
                    r.n,
                    r.expected,
                    computed(r),
                    status(r)
                ));
            }
            for r in rows.iter().filter(|r| !r.passed()) {
                match &r.error {
                    Some(e) => out.push_str(&format!("- {}: expected {}, error: {e}\n", r.lattice, r.expected)),
                    None => out.push_str(&format!("- {}: expected {}, computed {}\n", r.lattice, r.expected, computed(r))),
                }
            }
            out
        }
    })
}

pub fn rays(cone: &str, dim: usize, rays: &[Ray], format: Format) -> Result<String> {
    Ok(match format {
        Format::Json => to_json(&RaysJson::from_rays(cone, dim, rays)?)?,
        Format::Csv => {
            let mut out = join(&(1..=dim).collect::<Vec<_>>(), ",", |i| format!("x{i}"));
            out.push('\n');
            for r in rays {
                out.push_str(&join(r.dir(), ",", ToString::to_string));
                out.push('\n');
            }
            out
        }
        Format::Text | Format::Off => {
            let mut out = format!("{cone}: {} extreme rays\n", rays.len());
            for r in rays {
                out.push_str(&format!("  ({})\n", join(r.dir(), ", ", ToString::to_string)));
            }
            out
        }
    })
}

pub fn vertices(gv: &GammaVector, vertices: &[VoronoiVertex], format: Format) -> Result<String> {
    Ok(match format {
        Format::Json => to_json(&VerticesJson::from_vertices(gv, vertices)?)?,
        Format::Off => {
            let points: Vec<Vec<Rational>> = vertices.iter().map(|v| v.coords.clone()).collect();
            json::vertex_dump(gv.dim(), &points)
        }
        Format::Csv => {
            let mut out = format!("k,S,{}\n", join(&(1..=gv.dim()).collect::<Vec<_>>(), ",", |i| format!("x{i}")));
            for v in vertices {
                out.push_str(&format!(
                    "{},{},{}\n",
                    v.k + 1,
                    one_based(&v.subset),
                    join(&v.coords, ",", json::ratio_text)
                ));
            }
            out
        }
        Format::Text => {
            let mut out = format!("gamma ({})\n{} vertices\n", join(gv.values(), ", ", rat_text), vertices.len());
            for v in vertices {
                out.push_str(&format!(
                    "  k={} S={{{}}} ({})\n",
                    v.k + 1,
                    join(&v.subset, ",", |i| (i + 1).to_string()),
                    join(&v.coords, ", ", rat_text)
                ));
            }
            out
        }
    })
}

pub fn glue(gv: &GammaVector, report: &GlueReport, format: Format) -> Result<String> {
    Ok(match format {
        Format::Json => to_json(&GlueJson::from_report(gv, report)?)?,
        Format::Off => json::vertex_dump(gv.dim(), &report.vertices),
        Format::Csv => {
            let mut out = join(&(1..=gv.dim()).collect::<Vec<_>>(), ",", |i| format!("x{i}"));
            out.push('\n');
            for v in &report.vertices {
                out.push_str(&join(v, ",", json::ratio_text));
                out.push('\n');
            }
            out
        }
        Format::Text => {
            let mut out = format!("gamma ({})\n", join(gv.values(), ", ", rat_text));
            for s in &report.tight_subsets {
                out.push_str(&format!("tight S {{{}}}\n", join(s, ",", |i| (i + 1).to_string())));
            }
            out.push_str(&format!("{} vertices\n{} merged groups\n", report.vertex_count, report.merged_groups.len()));
            for g in &report.merged_groups {
                out.push_str(&format!("  ({}) <-", join(&g.point, ", ", rat_text)));
                for m in &g.members {
                    out.push_str(&format!(" x({}; {{{}}})", m.k + 1, join(&m.subset, ",", |i| (i + 1).to_string())));
                }
                out.push('\n');
            }
            out
        }
    })
}

pub fn check(report: &CheckReport, format: Format) -> Result<String> {
    let status = |p: bool| if p { "PASS" } else { "FAIL" };
    Ok(match format {
        Format::Json => to_json(report)?,
        Format::Csv => {
            let mut out = String::from("check,status,detail\n");
            for i in &report.items {
                out.push_str(&format!("{},{},{}\n", i.name, status(i.passed), csv_field(&i.detail)));
            }
            out
        }
        Format::Text | Format::Off => {
            let mut out = format!("check n = {}\n", report.n);
            for i in &report.items {
                out.push_str(&format!("{} {}: {}\n", status(i.passed), i.name, i.detail));
            }
            out.push_str(&format!("dim {}\n", report.dim));
            out
        }
    })
}
