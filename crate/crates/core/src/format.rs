//! The JSON algebra file format.
//!
//! ```json
//! {
//!   "name": "heisenberg3",
//!   "basis": [{"name": "p", "degree": 0}, {"name": "q", "degree": 0}, {"name": "z", "degree": 0}],
//!   "alpha": [["1","0","0"], ["0","1","0"], ["0","0","1"]],
//!   "brackets": [{"left": 0, "right": 1, "result": [["1", 2]]}]
//! }
//! ```
//!
//! Basis indices are 0-based. Rationals are strings (`"p"` or `"p/q"`), never
//! JSON numbers. Brackets are listed for `left < right`, or `left == right` for
//! an odd basis element; the remaining pairs follow from super skew-symmetry.

use std::collections::BTreeSet;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraSpec, BracketEntry, Parity};
use crate::error::{Error, Result};
use crate::linalg::{format_scalar, parse_scalar, zero_vector, Matrix};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BasisElement {
    pub name: String,
    pub degree: u8,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketLine {
    pub left: usize,
    pub right: usize,
    /// `(coefficient, basis index)` terms.
    pub result: Vec<(String, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub name: String,
    pub basis: Vec<BasisElement>,
    pub alpha: Vec<Vec<String>>,
    #[serde(default)]
    pub brackets: Vec<BracketLine>,
}

impl AlgebraFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    pub fn to_spec(&self) -> Result<AlgebraSpec> {
        let n = self.basis.len();
        let degrees = self
            .basis
            .iter()
            .enumerate()
            .map(|(i, b)| Parity::from_bit(b.degree).map_err(|e| Error::Parse(format!("basis[{i}].degree: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        let names: Vec<String> = self.basis.iter().map(|b| b.name.clone()).collect();
        if self.alpha.len() != n {
            return Err(Error::Parse(format!("alpha: {} rows, expected {n}", self.alpha.len())));
        }
        let mut alpha = Matrix::zeros(n, n);
        for (r, row) in self.alpha.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Parse(format!("alpha[{r}]: {} entries, expected {n}", row.len())));
            }
            for (c, text) in row.iter().enumerate() {
                alpha[(r, c)] = parse_scalar(text).map_err(|e| Error::Parse(format!("alpha[{r}][{c}]: {e}")))?;
            }
        }
        let mut pairs = BTreeSet::new();
        let mut entries = Vec::with_capacity(self.brackets.len());
        for (b, line) in self.brackets.iter().enumerate() {
            let ctx = |msg: String| Error::Parse(format!("brackets[{b}]: {msg}"));
            if line.left >= n || line.right >= n {
                return Err(ctx(format!("index ({}, {}) out of range for {n} basis elements", line.left, line.right)));
            }
            if line.left > line.right {
                return Err(ctx("left must not exceed right".into()));
            }
            if line.left == line.right && degrees[line.left] == Parity::Even {
                return Err(Error::InvalidAlgebra(format!(
                    "brackets[{b}]: [{0},{0}] listed for the even element {0}; it is forced to vanish",
                    names[line.left]
                )));
            }
            if !pairs.insert((line.left, line.right)) {
                return Err(ctx(format!("duplicate pair ({}, {})", line.left, line.right)));
            }
            let mut result = zero_vector(n);
            let mut used = BTreeSet::new();
            for (t, (coeff, index)) in line.result.iter().enumerate() {
                if *index >= n {
                    return Err(ctx(format!("result[{t}]: basis index {index} out of range")));
                }
                if !used.insert(*index) {
                    return Err(ctx(format!("result[{t}]: basis index {index} repeated")));
                }
                result[*index] = parse_scalar(coeff).map_err(|e| ctx(format!("result[{t}]: {e}")))?;
            }
            entries.push(BracketEntry { left: line.left, right: line.right, result });
        }
        AlgebraSpec::from_brackets(self.name.clone(), names, degrees, alpha, &entries)
    }

    pub fn from_spec(spec: &AlgebraSpec) -> Self {
        let n = spec.dim();
        let basis = spec
            .basis_names()
            .iter()
            .zip(spec.degrees())
            .map(|(name, d)| BasisElement { name: name.clone(), degree: d.bit() })
            .collect();
        let alpha = (0..n).map(|r| spec.alpha().row(r).iter().map(format_scalar).collect()).collect();
        let brackets = spec
            .independent_brackets()
            .into_iter()
            .map(|e| BracketLine {
                left: e.left,
                right: e.right,
                result: e
                    .result
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
                    .map(|(i, c)| (format_scalar(c), i))
                    .collect(),
            })
            .collect();
        AlgebraFile { name: spec.name().to_string(), basis, alpha, brackets }
    }
}

pub fn parse_algebra_str(text: &str) -> Result<AlgebraSpec> {
    AlgebraFile::from_json(text)?.to_spec()
}

pub fn parse_algebra(path: impl AsRef<Path>) -> Result<AlgebraSpec> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)?;
    parse_algebra_str(&text).map_err(|e| match e {
        Error::Parse(msg) => Error::Parse(format!("{}: {msg}", path.display())),
        other => other,
    })
}

pub fn write_algebra(spec: &AlgebraSpec) -> String {
    AlgebraFile::from_spec(spec).to_json()
}

/// Triple file for `decompose`: a degree and three square matrices of rational strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TripleFile {
    pub degree: u8,
    pub maps: Vec<Vec<Vec<String>>>,
}

impl TripleFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn matrices(&self, n: usize) -> Result<(Parity, Vec<Matrix>)> {
        let degree = Parity::from_bit(self.degree)?;
        if self.maps.len() != 3 {
            return Err(Error::Parse(format!("maps: expected 3 matrices (D, D', D''), got {}", self.maps.len())));
        }
        let mats = self
            .maps
            .iter()
            .enumerate()
            .map(|(m, rows)| {
                if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                    return Err(Error::Parse(format!("maps[{m}]: expected a {n}x{n} matrix")));
                }
                let entries = rows
                    .iter()
                    .enumerate()
                    .flat_map(|(r, row)| {
                        row.iter().enumerate().map(move |(c, t)| {
                            parse_scalar(t).map_err(|e| Error::Parse(format!("maps[{m}][{r}][{c}]: {e}")))
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                Matrix::from_entries(n, n, entries)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok((degree, mats))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use proptest::prelude::*;

    #[test]
    fn bundled_example_parses_clean() {
        let l = corpus::ex2_5();
        assert_eq!(l.dim(), 3);
        assert_eq!(l.alpha()[(1, 1)], crate::linalg::int(2));
        assert!(l.validate().is_hom_lie());
    }

    #[test]
    fn even_self_bracket_rejected() {
        let text = r#"{"name":"x","basis":[{"name":"a","degree":0}],"alpha":[["1"]],
            "brackets":[{"left":0,"right":0,"result":[["1",0]]}]}"#;
        assert!(matches!(parse_algebra_str(text), Err(Error::InvalidAlgebra(_))));
    }

    #[test]
    fn alpha_across_degrees_rejected() {
        let text = r#"{"name":"x","basis":[{"name":"a","degree":0},{"name":"b","degree":1}],
            "alpha":[["1","1"],["0","1"]],"brackets":[]}"#;
        let err = parse_algebra_str(text).unwrap_err();
        assert!(matches!(err, Error::InvalidAlgebra(ref m) if m.contains("alpha is not even")), "{err}");
    }

    #[test]
    fn parse_errors_carry_context() {
        let text = r#"{"name":"x","basis":[{"name":"a","degree":0}],"alpha":[["0.5"]]}"#;
        let err = parse_algebra_str(text).unwrap_err().to_string();
        assert!(err.contains("alpha[0][0]"), "{err}");
        let text = r#"{"name":"x","basis":[{"name":"a","degree":2}],"alpha":[["1"]]}"#;
        assert!(parse_algebra_str(text).unwrap_err().to_string().contains("basis[0].degree"));
        let text = r#"{"name":"x","basis":[{"name":"a","degree":0},{"name":"b","degree":0}],"alpha":[["1","0"],["0","1"]],
            "brackets":[{"left":0,"right":1,"result":[]},{"left":0,"right":1,"result":[]}]}"#;
        assert!(parse_algebra_str(text).unwrap_err().to_string().contains("duplicate"));
        let text = r#"{"name":"x","basis":[],"alpha":[], "extra": 1}"#;
        assert!(matches!(parse_algebra_str(text), Err(Error::Parse(_))));
        let text = "{\"name\": \"x\",\n \"basis\": [ }";
        assert!(parse_algebra_str(text).unwrap_err().to_string().contains("line 2"));
    }

    #[test]
    fn bundled_corpus_round_trips() {
        for l in corpus::all() {
            assert_eq!(parse_algebra_str(&write_algebra(&l)).unwrap(), l);
        }
    }

    proptest! {
        #[test]
        fn random_tables_round_trip(
            degrees in prop::collection::vec(0u8..2, 1..4),
            coeffs in prop::collection::vec((-3i64..=3, 1i64..=3), 64),
        ) {
            // any graded, skew table round-trips; validity of Jacobi is irrelevant here
            let n = degrees.len();
            let parities: Vec<Parity> = degrees.iter().map(|&d| Parity::from_bit(d).unwrap()).collect();
            let mut it = coeffs.into_iter().map(|(p, q)| crate::linalg::frac(p, q));
            let mut alpha = Matrix::zeros(n, n);
            for r in 0..n {
                for c in 0..n {
                    let x = it.next().unwrap();
                    if parities[r] == parities[c] {
                        alpha[(r, c)] = x;
                    }
                }
            }
            let mut entries = Vec::new();
            for i in 0..n {
                for j in i..n {
                    if i == j && !parities[i].is_odd() {
                        continue;
                    }
                    let mut result = zero_vector(n);
                    for m in 0..n {
                        let x = it.next().unwrap();
                        if parities[m] == parities[i] + parities[j] {
                            result[m] = x;
                        }
                    }
                    entries.push(BracketEntry { left: i, right: j, result });
                }
            }
            let names = (0..n).map(|i| format!("b{i}")).collect();
            let spec = AlgebraSpec::from_brackets("rt", names, parities, alpha, &entries).unwrap();
            prop_assert_eq!(parse_algebra_str(&write_algebra(&spec)).unwrap(), spec);
        }
    }
}
