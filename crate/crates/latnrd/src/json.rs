//! JSON schemas. Rationals are `[numerator, denominator]` pairs in lowest
//! terms with a positive denominator; integers must fit in `i64`.

use latnrd_core::cone::{ConeHRep, Ray};
use latnrd_core::dnstar::{GammaVector, GlueReport, VoronoiVertex};
use latnrd_core::form::{GramMatrix, SymMatrix};
use latnrd_core::minvec::CosetMinSet;
use latnrd_core::nrd::NrdResult;
use latnrd_core::Rational;
use num_bigint::BigInt;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalJson(pub i64, pub i64);

pub fn big_to_i64(v: &BigInt) -> Result<i64> {
    i64::try_from(v).map_err(|_| Error::Overflow(v.to_string()))
}

impl RationalJson {
    pub fn from_rational(r: &Rational) -> Result<Self> {
        Ok(Self(big_to_i64(r.numer())?, big_to_i64(r.denom())?))
    }

    pub fn to_rational(self) -> Result<Rational> {
        if self.1 <= 0 {
            return Err(Error::Usage(format!("denominator must be positive in [{}, {}]", self.0, self.1)));
        }
        Ok(Rational::new(BigInt::from(self.0), BigInt::from(self.1)))
    }
}

pub fn rationals(values: &[Rational]) -> Result<Vec<RationalJson>> {
    values.iter().map(RationalJson::from_rational).collect()
}

pub fn integers(values: &[BigInt]) -> Result<Vec<i64>> {
    values.iter().map(big_to_i64).collect()
}

/// `{"n": int, "entries": [[num, den], …]}`, entries row-major over the
/// full matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GramJson {
    pub n: usize,
    pub entries: Vec<RationalJson>,
}

impl GramJson {
    pub fn from_sym(m: &SymMatrix) -> Result<Self> {
        Ok(Self { n: m.dim(), entries: rationals(m.entries())? })
    }

    pub fn from_gram(g: &GramMatrix) -> Result<Self> {
        Self::from_sym(g.as_sym())
    }

    pub fn to_sym(&self) -> Result<SymMatrix> {
        let entries = self.entries.iter().map(|r| r.to_rational()).collect::<Result<Vec<_>>>()?;
        Ok(SymMatrix::new(self.n, entries)?)
    }

    pub fn to_gram(&self) -> Result<GramMatrix> {
        Ok(GramMatrix::new(self.to_sym()?)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CosetMinSetJson {
    pub label: Vec<u8>,
    pub min_norm: RationalJson,
    pub vectors: Vec<Vec<i64>>,
}

impl CosetMinSetJson {
    pub fn from_set(set: &CosetMinSet) -> Result<Self> {
        Ok(Self {
            label: set.label.bits().to_vec(),
            min_norm: RationalJson::from_rational(&set.min_norm)?,
            vectors: set.vectors.iter().map(|v| v.coords().to_vec()).collect(),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NrdJson {
    pub lattice: String,
    pub n: usize,
    #[serde(rename = "N")]
    pub coeff_dim: usize,
    pub rank: usize,
    pub nrd: usize,
    /// Each element is a full `n × n` matrix, row-major.
    pub span_basis: Vec<Vec<RationalJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cosets: Option<Vec<CosetMinSetJson>>,
}

impl NrdJson {
    pub fn from_result(lattice: &str, result: &NrdResult) -> Result<Self> {
        let span_basis = result
            .span_matrices()
            .iter()
            .map(|m| rationals(m.entries()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            lattice: lattice.to_string(),
            n: result.n,
            coeff_dim: result.coeff_dim(),
            rank: result.rank,
            nrd: result.nrd,
            span_basis,
            cosets: None,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConeHRepJson {
    pub dim: usize,
    pub equalities: Vec<Vec<RationalJson>>,
    pub inequalities: Vec<Vec<RationalJson>>,
}

impl ConeHRepJson {
    pub fn from_hrep(h: &ConeHRep) -> Result<Self> {
        let rows = |rs: &[Vec<Rational>]| rs.iter().map(|r| rationals(r)).collect::<Result<Vec<_>>>();
        Ok(Self { dim: h.dim(), equalities: rows(h.equalities())?, inequalities: rows(h.inequalities())? })
    }

    pub fn to_hrep(&self) -> Result<ConeHRep> {
        let rows = |rs: &[Vec<RationalJson>]| {
            rs.iter()
                .map(|r| r.iter().map(|x| x.to_rational()).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()
        };
        Ok(ConeHRep::new(self.dim, rows(&self.equalities)?, rows(&self.inequalities)?)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RaysJson {
    pub cone: String,
    pub dim: usize,
    pub rays: Vec<Vec<i64>>,
}

impl RaysJson {
    pub fn from_rays(cone: &str, dim: usize, rays: &[Ray]) -> Result<Self> {
        Ok(Self { cone: cone.to_string(), dim, rays: rays.iter().map(|r| integers(r.dir())).collect::<Result<Vec<_>>>()? })
    }
}

fn one_based(s: &[usize]) -> Vec<usize> {
    s.iter().map(|i| i + 1).collect()
}

/// Vertex of the Voronoi polytope; `k` and `S` are 1-based indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexJson {
    pub coords: Vec<RationalJson>,
    pub k: usize,
    #[serde(rename = "S")]
    pub subset: Vec<usize>,
    pub signs: Vec<i8>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerticesJson {
    pub gamma: Vec<RationalJson>,
    pub count: usize,
    pub vertices: Vec<VertexJson>,
}

impl VerticesJson {
    pub fn from_vertices(gv: &GammaVector, vertices: &[VoronoiVertex]) -> Result<Self> {
        let vertices = vertices
            .iter()
            .map(|v| {
                Ok(VertexJson {
                    coords: rationals(&v.coords)?,
                    k: v.k + 1,
                    subset: one_based(&v.subset),
                    signs: v.signs.clone(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { gamma: rationals(gv.values())?, count: vertices.len(), vertices })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GlueMemberJson {
    pub k: usize,
    #[serde(rename = "S")]
    pub subset: Vec<usize>,
    pub signs: Vec<i8>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GlueGroupJson {
    pub point: Vec<RationalJson>,
    pub members: Vec<GlueMemberJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GlueJson {
    pub gamma: Vec<RationalJson>,
    pub tight_subsets: Vec<Vec<usize>>,
    pub vertex_count: usize,
    pub merged_groups: Vec<GlueGroupJson>,
    pub vertices: Vec<Vec<RationalJson>>,
}

impl GlueJson {
    pub fn from_report(gv: &GammaVector, report: &GlueReport) -> Result<Self> {
        let merged_groups = report
            .merged_groups
            .iter()
            .map(|g| {
                Ok(GlueGroupJson {
                    point: rationals(&g.point)?,
                    members: g
                        .members
                        .iter()
                        .map(|m| GlueMemberJson { k: m.k + 1, subset: one_based(&m.subset), signs: m.signs.clone() })
                        .collect(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            gamma: rationals(gv.values())?,
            tight_subsets: report.tight_subsets.iter().map(|s| one_based(s)).collect(),
            vertex_count: report.vertex_count,
            merged_groups,
            vertices: report.vertices.iter().map(|v| rationals(v)).collect::<Result<Vec<_>>>()?,
        })
    }
}

/// `num/den` text form used by CSV, text and vertex dumps.
pub fn ratio_text(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `a/b` or an integer; the denominator must be positive.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Usage(format!("invalid rational '{s}'"));
    let (num, den) = match s.trim().split_once('/') {
        Some((a, b)) => (a.trim().parse::<BigInt>().map_err(|_| bad())?, b.trim().parse::<BigInt>().map_err(|_| bad())?),
        None => (s.trim().parse::<BigInt>().map_err(|_| bad())?, BigInt::from(1)),
    };
    if !den.is_positive() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// Comma separated list of rationals, as taken by `--gamma`.
pub fn parse_rational_list(s: &str) -> Result<Vec<Rational>> {
    s.split(',').map(parse_rational).collect()
}

/// Plain-text vertex dump: a header line `dim count`, then one vertex per
/// line with coordinates as `num/den` separated by spaces.
pub fn vertex_dump(dim: usize, points: &[Vec<Rational>]) -> String {
    let mut out = format!("{} {}\n", dim, points.len());
    for p in points {
        let line: Vec<String> = p.iter().map(ratio_text).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}
