//! The flat report record emitted by the CLI, with JSON and CSV encodings.

use lcdbch::bch::BchReport;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceRecord {
    pub value: u64,
    pub exact: bool,
    pub method: String,
}

/// One code's parameters, flattened for serialization. `elapsed_ms` is
/// omitted in stable output so that repeated runs compare byte-identical.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub q: u64,
    pub p: u64,
    pub s: u32,
    pub m: u32,
    pub lambda: u64,
    pub n: u64,
    pub b: u8,
    pub designed: u64,
    pub k: u64,
    pub k_closed_form: Option<u64>,
    pub bch_bound: u64,
    pub distance: DistanceRecord,
    pub lcd: bool,
    pub hull_dim: u64,
    pub generator_poly: Option<Vec<u64>>,
    pub warnings: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl ReportRecord {
    pub fn from_report(report: &BchReport, elapsed_ms: Option<u64>) -> ReportRecord {
        ReportRecord {
            q: report.params.q,
            p: report.params.p,
            s: report.params.s,
            m: report.params.m,
            lambda: report.params.lambda,
            n: report.params.n,
            b: report.b,
            designed: report.designed,
            k: report.dimension,
            k_closed_form: report.closed_dimension,
            bch_bound: report.bch_bound,
            distance: DistanceRecord {
                value: report.distance.value,
                exact: report.distance.exact,
                method: report.distance.method.as_str().to_string(),
            },
            lcd: report.lcd,
            hull_dim: report.hull_dim,
            generator_poly: report.generator.as_ref().map(|g| g.coeffs().to_vec()),
            warnings: report.warnings.clone(),
            elapsed_ms,
        }
    }

    pub fn csv_header() -> &'static str {
        "q,p,s,m,lambda,n,b,designed,k,k_closed_form,bch_bound,\
         d,d_exact,d_method,lcd,hull_dim,generator_poly,warnings,elapsed_ms"
    }

    pub fn csv_row(&self) -> String {
        let opt = |v: Option<u64>| v.map_or(String::new(), |x| x.to_string());
        let poly = self
            .generator_poly
            .as_ref()
            .map_or(String::new(), |p| {
                p.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
            });
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},\"{}\",{}",
            self.q,
            self.p,
            self.s,
            self.m,
            self.lambda,
            self.n,
            self.b,
            self.designed,
            self.k,
            opt(self.k_closed_form),
            self.bch_bound,
            self.distance.value,
            self.distance.exact,
            self.distance.method,
            self.lcd,
            self.hull_dim,
            poly,
            self.warnings.join("; "),
            opt(self.elapsed_ms),
        )
    }

    /// Human-readable one-liner.
    pub fn summary(&self) -> String {
        let d = if self.distance.exact {
            format!("d={} ({})", self.distance.value, self.distance.method)
        } else {
            format!("d>={} ({})", self.distance.value, self.distance.method)
        };
        format!(
            "[{},{}] over GF({}), designed {} (b={}), {}, bound {}, lcd={}, hull={}",
            self.n, self.k, self.q, self.designed, self.b, d, self.bch_bound, self.lcd, self.hull_dim
        )
    }
}
