//! Text renderings of matrices and vectors: JSON, LaTeX, CSV and plain tables.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fock::FockVector;
use crate::laurent::{bigint_to_json, LaurentPoly};
use crate::lusztig::CharacterVector;
use crate::matrix::TransitionMatrix;
use crate::partition::Partition;

/// Output format of the command-line front end.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Latex,
    Csv,
    Plain,
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Json => "json",
            Format::Latex => "latex",
            Format::Csv => "csv",
            Format::Plain => "plain",
        })
    }
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "latex" => Ok(Format::Latex),
            "csv" => Ok(Format::Csv),
            "plain" => Ok(Format::Plain),
            _ => Err(Error::Parse(format!("unknown format {s:?}"))),
        }
    }
}

/// A matrix or vector coefficient that can be rendered.
pub trait Entry {
    fn to_json(&self) -> serde_json::Value;
    fn to_text(&self) -> String;
    fn to_latex(&self) -> String {
        self.to_text()
    }
}

impl Entry for BigInt {
    fn to_json(&self) -> serde_json::Value {
        bigint_to_json(self)
    }
    fn to_text(&self) -> String {
        self.to_string()
    }
}

impl Entry for i64 {
    fn to_json(&self) -> serde_json::Value {
        (*self).into()
    }
    fn to_text(&self) -> String {
        self.to_string()
    }
}

impl Entry for LaurentPoly {
    fn to_json(&self) -> serde_json::Value {
        self.to_string().into()
    }
    fn to_text(&self) -> String {
        self.to_string()
    }
    fn to_latex(&self) -> String {
        let mut s = String::new();
        for (k, c) in self.terms().rev() {
            let neg = c.sign() == num_bigint::Sign::Minus;
            let a = c.magnitude().to_string();
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            match k {
                0 => s.push_str(&a),
                _ => {
                    if a != "1" {
                        s.push_str(&a);
                    }
                    if k == 1 {
                        s.push('v');
                    } else {
                        s.push_str(&format!("v^{{{k}}}"));
                    }
                }
            }
        }
        if s.is_empty() {
            "0".into()
        } else {
            s
        }
    }
}

/// Exponent notation used in printed tables: `(4,1,1)` is `41^2`, `(2,2,1,1)` is `2^21^2`.
pub fn label_tex(lambda: &Partition) -> String {
    if lambda.is_empty() {
        return "\\emptyset".into();
    }
    let wide = lambda.parts().iter().any(|&p| p > 9);
    let mut out = Vec::new();
    let parts = lambda.parts();
    let mut i = 0;
    while i < parts.len() {
        let j = parts[i..].iter().take_while(|&&p| p == parts[i]).count();
        let base = parts[i].to_string();
        out.push(if j == 1 { base } else { format!("{base}^{{{j}}}") });
        i += j;
    }
    let mut s = out.join(if wide { "," } else { "" });
    // single-digit exponents print without braces, as in `2^21^2`
    for d in 2..=9 {
        s = s.replace(&format!("^{{{d}}}"), &format!("^{d}"));
    }
    s
}

/// Renders a labelled square matrix.
pub fn matrix<T: Entry>(m: &TransitionMatrix<T>, format: Format) -> String {
    match format {
        Format::Json => {
            let labels: Vec<String> = m.labels.iter().map(Partition::to_string).collect();
            let entries: Vec<Vec<serde_json::Value>> =
                m.entries.iter().map(|r| r.iter().map(Entry::to_json).collect()).collect();
            let v = serde_json::json!({ "labels": labels, "entries": entries });
            format!("{}\n", serde_json::to_string(&v).expect("serialisable"))
        }
        Format::Latex => {
            let mut s = String::from("\\begin{pmatrix}");
            for (i, (l, row)) in m.labels.iter().zip(&m.entries).enumerate() {
                if i > 0 {
                    s.push_str("\n  ");
                }
                let cells: Vec<String> = row.iter().map(Entry::to_latex).collect();
                s.push_str(&format!("{}||&{}\\cr", label_tex(l), cells.join("&")));
            }
            s.push_str("\n\\end{pmatrix}\n");
            s
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let header = std::iter::once(String::new()).chain(m.labels.iter().map(Partition::to_string));
            w.write_record(header).expect("in-memory write");
            for (l, row) in m.labels.iter().zip(&m.entries) {
                let rec = std::iter::once(l.to_string()).chain(row.iter().map(Entry::to_text));
                w.write_record(rec).expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
        }
        Format::Plain => {
            let labels: Vec<String> = m.labels.iter().map(|l| format!("({l})")).collect();
            let cells: Vec<Vec<String>> = m.entries.iter().map(|r| r.iter().map(Entry::to_text).collect()).collect();
            let lw = labels.iter().map(String::len).max().unwrap_or(0);
            let cw = cells.iter().flatten().map(String::len).max().unwrap_or(1);
            let mut s = String::new();
            for (l, row) in labels.iter().zip(&cells) {
                let row: Vec<String> = row.iter().map(|c| format!("{c:>cw$}")).collect();
                s.push_str(&format!("{l:<lw$}  {}\n", row.join(" ")));
            }
            s
        }
    }
}

/// Renders `label ↦ coefficient` pairs in the given order, over kets or characters.
fn vector<T: Entry>(entries: &[(Partition, T)], format: Format, ket: bool) -> String {
    match format {
        Format::Json => {
            let map: serde_json::Map<String, serde_json::Value> =
                entries.iter().map(|(l, c)| (l.to_string(), c.to_json())).collect();
            format!("{}\n", serde_json::Value::Object(map))
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["label", "coefficient"]).expect("in-memory write");
            for (l, c) in entries {
                w.write_record([l.to_string(), c.to_text()]).expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
        }
        Format::Latex | Format::Plain => {
            let latex = format == Format::Latex;
            let basis = |l: &Partition| match (latex, ket) {
                (true, true) => format!("|{}\\rangle", label_tex(l)),
                (true, false) => format!("\\chi_{{{}}}", label_tex(l)),
                (false, true) => format!("|{l}>"),
                (false, false) => format!("chi[{l}]"),
            };
            let mut s = String::new();
            for (l, c) in entries {
                let text = if latex { c.to_latex() } else { c.to_text() };
                let (neg, body) = match text.strip_prefix('-') {
                    Some(rest) if !rest.contains(' ') => (true, rest.to_string()),
                    _ => (false, text),
                };
                let coef = if body == "1" {
                    String::new()
                } else if body.contains(' ') {
                    format!("({body})")
                } else {
                    body
                };
                let sep = if latex { "" } else { "*" };
                let term = if coef.is_empty() { basis(l) } else { format!("{coef}{sep}{}", basis(l)) };
                if s.is_empty() {
                    s.push_str(if neg { "-" } else { "" });
                } else {
                    s.push_str(if neg { " - " } else { " + " });
                }
                s.push_str(&term);
            }
            if s.is_empty() {
                s.push('0');
            }
            s.push('\n');
            s
        }
    }
}

/// A Fock vector at generic `v`, labels in decreasing lexicographic order.
pub fn fock_vector(x: &FockVector, format: Format) -> String {
    let entries: Vec<(Partition, LaurentPoly)> = x.iter().rev().map(|(l, c)| (l.clone(), c.clone())).collect();
    vector(&entries, format, true)
}

/// A Fock vector specialised at `v = 1`, labels in decreasing lexicographic order.
pub fn fock_vector_at_one(x: &FockVector, format: Format) -> String {
    integer_vector(&x.eval_one(), format, true)
}

/// A character vector, labels in decreasing lexicographic order.
pub fn character_vector(x: &CharacterVector, format: Format) -> String {
    let entries: Vec<(Partition, BigInt)> = x.iter().rev().map(|(l, c)| (l.clone(), c.clone())).collect();
    vector(&entries, format, false)
}

fn integer_vector(x: &BTreeMap<Partition, BigInt>, format: Format, ket: bool) -> String {
    let entries: Vec<(Partition, BigInt)> = x.iter().rev().map(|(l, c)| (l.clone(), c.clone())).collect();
    vector(&entries, format, ket)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    #[test]
    fn exponent_labels() {
        assert_eq!(label_tex(&part![4, 1, 1]), "41^2");
        assert_eq!(label_tex(&part![2, 2, 1, 1]), "2^21^2");
        assert_eq!(label_tex(&part![1, 1, 1, 1, 1, 1]), "1^6");
        assert_eq!(label_tex(&part![3, 1]), "31");
        assert_eq!(label_tex(&part![]), "\\emptyset");
    }

    #[test]
    fn matrix_formats() {
        let m = TransitionMatrix::from_fn(vec![part![2], part![1, 1]], |a, b| {
            BigInt::from(i64::from(a == b || (a == &part![1, 1] && b == &part![2])))
        });
        assert_eq!(matrix(&m, Format::Json), "{\"labels\":[\"2\",\"1,1\"],\"entries\":[[1,0],[1,1]]}\n");
        assert_eq!(matrix(&m, Format::Latex), "\\begin{pmatrix}2||&1&0\\cr\n  1^2||&1&1\\cr\n\\end{pmatrix}\n");
        assert_eq!(matrix(&m, Format::Csv), ",2,\"1,1\"\n2,1,0\n\"1,1\",1,1\n");
        assert_eq!(matrix(&m, Format::Plain), "(2)    1 0\n(1,1)  1 1\n");
    }

    #[test]
    fn vector_formats() {
        let x = FockVector::from_terms([
            (part![1, 1], LaurentPoly::one()),
            (part![2], LaurentPoly::monomial(-1, -1)),
        ]);
        assert_eq!(fock_vector(&x, Format::Json), "{\"2\":\"-v^-1\",\"1,1\":\"1\"}\n");
        assert_eq!(fock_vector(&x, Format::Plain), "-v^-1*|2> + |1,1>\n");
        assert_eq!(fock_vector(&x, Format::Latex), "-v^{-1}|2\\rangle + |1^2\\rangle\n");
        assert_eq!(fock_vector_at_one(&x, Format::Json), "{\"2\":-1,\"1,1\":1}\n");
    }
}
