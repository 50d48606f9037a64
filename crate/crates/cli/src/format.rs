//! The matrix file format.
//!
//! ```json
//! {"field": "Q", "rows": 1, "cols": 1,
//!  "entries": [[{"num": ["0", "1"], "den": ["1"]}]]}
//! ```
//!
//! Coefficients are ascending and written as `"a"` or `"a/b"`; bare JSON
//! integers are accepted on input. The field is `"Q"` or `{"GF": p}`.

use std::fmt;
use std::str::FromStr;

use infmod_core::{is_prime, KMatrix, Matrix, Poly, PolyMatrix, RatFun, RatMatrix, Scalar};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldChoice {
    Rational,
    Prime(u32),
}

impl FromStr for FieldChoice {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "Q" {
            return Ok(FieldChoice::Rational);
        }
        let p = s
            .strip_prefix("GF:")
            .and_then(|p| p.parse::<u32>().ok())
            .ok_or_else(|| format!("expected Q or GF:<p>, got {s:?}"))?;
        if p >= 1 << 31 || !is_prime(p) {
            return Err(format!("{p} is not a prime below 2^31"));
        }
        Ok(FieldChoice::Prime(p))
    }
}

impl fmt::Display for FieldChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldChoice::Rational => write!(f, "Q"),
            FieldChoice::Prime(p) => write!(f, "GF:{p}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FieldTag {
    Name(String),
    Prime {
        #[serde(rename = "GF")]
        gf: u32,
    },
}

impl FieldTag {
    pub fn choice(&self) -> Result<FieldChoice, String> {
        match self {
            FieldTag::Name(n) if n == "Q" => Ok(FieldChoice::Rational),
            FieldTag::Name(n) => Err(format!("unknown field {n:?}")),
            FieldTag::Prime { gf } => format!("GF:{gf}").parse(),
        }
    }
}

impl From<FieldChoice> for FieldTag {
    fn from(c: FieldChoice) -> Self {
        match c {
            FieldChoice::Rational => FieldTag::Name("Q".into()),
            FieldChoice::Prime(p) => FieldTag::Prime { gf: p },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coeff {
    Text(String),
    Int(i64),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Entry {
    pub num: Vec<Coeff>,
    pub den: Vec<Coeff>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixFile {
    pub field: FieldTag,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<Entry>>,
}

/// Parse the JSON document; errors carry line and column.
pub fn parse_document(source: &str, bytes: &[u8]) -> Result<MatrixFile, CliError> {
    serde_json::from_slice(bytes).map_err(|e| CliError::parse(format!("{source}:{}:{}: {e}", e.line(), e.column())))
}

fn parse_coeff<F: Scalar>(c: &Coeff, at: &str) -> Result<F, CliError> {
    let bad = |why: &str| CliError::parse(format!("{at}: {why}"));
    let (num, den) = match c {
        Coeff::Int(v) => (BigInt::from(*v), BigInt::from(1)),
        Coeff::Text(t) => {
            let (n, d) = t.split_once('/').unwrap_or((t, "1"));
            let num = n.trim().parse::<BigInt>().map_err(|_| bad(&format!("bad coefficient {t:?}")))?;
            let den = d.trim().parse::<BigInt>().map_err(|_| bad(&format!("bad coefficient {t:?}")))?;
            (num, den)
        }
    };
    F::from_ratio(&num, &den).ok_or_else(|| bad("coefficient denominator vanishes in the field"))
}

fn parse_poly<F: Scalar>(coeffs: &[Coeff], at: &str) -> Result<Poly<F>, CliError> {
    let c = coeffs
        .iter()
        .enumerate()
        .map(|(k, c)| parse_coeff(c, &format!("{at}[{k}]")))
        .collect::<Result<Vec<F>, _>>()?;
    Ok(Poly::new(c))
}

/// Convert a parsed document into a matrix over the active field.
pub fn to_matrix<F: Scalar>(doc: &MatrixFile, source: &str) -> Result<RatMatrix<F>, CliError> {
    if doc.entries.len() != doc.rows || doc.entries.iter().any(|r| r.len() != doc.cols) {
        return Err(CliError::parse(format!(
            "{source}: entries do not form a {}x{} grid",
            doc.rows, doc.cols
        )));
    }
    let mut data = Vec::with_capacity(doc.rows * doc.cols);
    for (i, row) in doc.entries.iter().enumerate() {
        for (j, e) in row.iter().enumerate() {
            let at = format!("{source}: entries[{i}][{j}]");
            let num = parse_poly(&e.num, &format!("{at}.num"))?;
            let den = parse_poly(&e.den, &format!("{at}.den"))?;
            let f = RatFun::new(num, den).map_err(|_| CliError::parse(format!("{at}: zero denominator")))?;
            data.push(f);
        }
    }
    Ok(Matrix::from_vec(doc.rows, doc.cols, data).expect("shape checked"))
}

fn poly_coeffs<F: Scalar>(p: &Poly<F>) -> Vec<Coeff> {
    p.coeffs().iter().map(|c| Coeff::Text(c.to_exact_string())).collect()
}

/// Canonical document for a matrix.
pub fn from_matrix<F: Scalar>(m: &RatMatrix<F>, field: FieldChoice) -> MatrixFile {
    MatrixFile {
        field: field.into(),
        rows: m.rows(),
        cols: m.cols(),
        entries: (0..m.rows())
            .map(|i| {
                (0..m.cols())
                    .map(|j| {
                        let f = m.get(i, j);
                        Entry { num: poly_coeffs(f.num()), den: poly_coeffs(f.den()) }
                    })
                    .collect()
            })
            .collect(),
    }
}

pub fn emit_matrix<F: Scalar>(m: &RatMatrix<F>, field: FieldChoice) -> String {
    let mut s = serde_json::to_string_pretty(&from_matrix(m, field)).expect("serializable");
    s.push('\n');
    s
}

pub fn poly_value<F: Scalar>(m: &PolyMatrix<F>, field: FieldChoice) -> serde_json::Value {
    rat_value(&m.to_rat(), field)
}

pub fn rat_value<F: Scalar>(m: &RatMatrix<F>, field: FieldChoice) -> serde_json::Value {
    serde_json::to_value(from_matrix(m, field)).expect("serializable")
}

pub fn k_value<F: Scalar>(m: &KMatrix<F>, field: FieldChoice) -> serde_json::Value {
    rat_value(&RatMatrix::from_k(m), field)
}
