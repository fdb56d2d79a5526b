//! The JSON arrangement file and its conversion to and from
//! [`Multiarrangement`].

use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use multiarr::kernel::{parse_rational, Rational};
use multiarr::model::{format_defining_polynomial, parse_defining_polynomial, Multiarrangement};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HyperplaneEntry {
    /// Coefficients as rational strings such as `"1"` or `"-2/3"`.
    pub coeffs: Vec<String>,
    pub mult: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrangementFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub variables: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hyperplanes: Option<Vec<HyperplaneEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub defining_polynomial: Option<String>,
}

impl ArrangementFile {
    pub fn read(path: &Path) -> Result<ArrangementFile> {
        let text = if path.as_os_str() == "-" {
            std::io::read_to_string(std::io::stdin()).context("reading standard input")?
        } else {
            std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
        };
        serde_json::from_str(&text).with_context(|| format!("{}: malformed arrangement file", path.display()))
    }

    /// The canonical file: explicit hyperplanes in input order.
    pub fn from_arrangement(a: &Multiarrangement, name: Option<String>) -> ArrangementFile {
        let hyperplanes = a
            .hyperplanes()
            .iter()
            .zip(a.mult())
            .map(|(h, &mult)| HyperplaneEntry {
                coeffs: h.coeffs().iter().map(Rational::to_string).collect(),
                mult,
            })
            .collect();
        ArrangementFile {
            name,
            variables: a.vars().to_vec(),
            hyperplanes: Some(hyperplanes),
            defining_polynomial: None,
        }
    }

    pub fn to_arrangement(&self) -> Result<Multiarrangement> {
        if self.variables.is_empty() {
            bail!("variables: at least one variable is required");
        }
        match (&self.hyperplanes, &self.defining_polynomial) {
            (Some(_), Some(_)) => bail!("give either `hyperplanes` or `defining_polynomial`, not both"),
            (None, None) => bail!("one of `hyperplanes` or `defining_polynomial` is required"),
            (None, Some(text)) => {
                let expanded = expand_products(text, &self.variables).context("defining_polynomial")?;
                parse_defining_polynomial(&expanded, &self.variables)
                    .map_err(|e| anyhow!("defining_polynomial: {e}"))
            }
            (Some(entries), None) => {
                let n = self.variables.len();
                let mut forms = Vec::with_capacity(entries.len());
                let mut mult = Vec::with_capacity(entries.len());
                for (i, e) in entries.iter().enumerate() {
                    if e.coeffs.len() != n {
                        bail!("hyperplanes[{i}].coeffs: {} entries for {n} variables", e.coeffs.len());
                    }
                    let coeffs = e
                        .coeffs
                        .iter()
                        .enumerate()
                        .map(|(j, c)| {
                            parse_rational(c).map_err(|err| anyhow!("hyperplanes[{i}].coeffs[{j}]: {err}"))
                        })
                        .collect::<Result<Vec<_>>>()?;
                    if e.mult == 0 {
                        bail!("hyperplanes[{i}].mult: multiplicities are positive");
                    }
                    forms.push(coeffs);
                    mult.push(e.mult);
                }
                Multiarrangement::new(self.variables.clone(), forms, mult).map_err(|e| anyhow!("hyperplanes: {e}"))
            }
        }
    }

    /// Label for reports: the file name if given, else the factored
    /// defining polynomial.
    pub fn label(&self, a: &Multiarrangement) -> String {
        self.name.clone().unwrap_or_else(|| format_defining_polynomial(a))
    }
}

/// Expands `prod_{k=a}^{b}(body)` (also written with `∏`) into the product
/// of `(body)` with every integer `a <= k <= b` substituted for `k`. Letter
/// runs in the body are split into declared variables the same way the
/// parser splits them, so `kw` reads as `k*w`.
pub fn expand_products(text: &str, vars: &[String]) -> Result<String> {
    let mut out = String::new();
    let mut rest = text;
    loop {
        let at = [rest.find("prod_{"), rest.find("∏_{")].into_iter().flatten().min();
        let Some(at) = at else {
            out.push_str(rest);
            return Ok(out);
        };
        out.push_str(&rest[..at]);
        let after = &rest[at..];
        let open = after.find('{').unwrap();
        let close = after[open..].find('}').ok_or_else(|| anyhow!("unclosed `{{` in product"))? + open;
        let (var, lo) = after[open + 1..close]
            .split_once('=')
            .ok_or_else(|| anyhow!("product range must read `k=a`"))?;
        let var = var.trim();
        if var.is_empty() || !var.chars().all(char::is_alphabetic) {
            bail!("product index `{var}` must be a name");
        }
        if vars.iter().any(|v| v == var) {
            bail!("product index `{var}` is also a variable");
        }
        let lo: i64 = lo.trim().parse().map_err(|_| anyhow!("product lower bound `{lo}` is not an integer"))?;
        let tail = after[close + 1..]
            .strip_prefix("^{")
            .ok_or_else(|| anyhow!("product range must continue with `^{{b}}`"))?;
        let end = tail.find('}').ok_or_else(|| anyhow!("unclosed `^{{` in product"))?;
        let hi: i64 = tail[..end]
            .trim()
            .parse()
            .map_err(|_| anyhow!("product upper bound `{}` is not an integer", &tail[..end]))?;
        let body_start = tail[end + 1..].trim_start();
        if !body_start.starts_with('(') {
            bail!("product body must be parenthesized");
        }
        let body_len = matching_paren(body_start).ok_or_else(|| anyhow!("unbalanced parentheses in product body"))?;
        let body = &body_start[1..body_len];
        for k in lo..=hi {
            out.push_str(&format!("({}) ", substitute(body, var, vars, k)));
        }
        rest = &body_start[body_len + 1..];
    }
}

fn matching_paren(s: &str) -> Option<usize> {
    let mut depth = 0usize;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 {
                    return Some(i);
                }
            }
            _ => {}
        }
    }
    None
}

/// Replaces `var` by `(k)` wherever it appears as a name: declared
/// variables are matched first, longest name wins.
fn substitute(body: &str, var: &str, vars: &[String], k: i64) -> String {
    let mut out = String::new();
    let mut rest = body;
    while let Some(c) = rest.chars().next() {
        if !c.is_alphabetic() {
            out.push(c);
            rest = &rest[c.len_utf8()..];
            continue;
        }
        let declared = vars.iter().filter(|v| rest.starts_with(v.as_str())).max_by_key(|v| v.len());
        if let Some(v) = declared {
            out.push_str(v);
            rest = &rest[v.len()..];
        } else if rest.starts_with(var) {
            out.push_str(&format!("({k})"));
            rest = &rest[var.len()..];
        } else {
            out.push(c);
            rest = &rest[c.len_utf8()..];
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_ranges() {
        let vars: Vec<String> = ["x", "y", "z", "w"].map(String::from).to_vec();
        assert_eq!(
            expand_products("x prod_{k=-1}^{1}(z-kw)", &vars).unwrap(),
            "x (z-(-1)w) (z-(0)w) (z-(1)w) "
        );
        assert_eq!(expand_products("∏_{j=2}^{2}(x - j y)^3", &vars).unwrap(), "(x - (2) y) ^3");
        assert!(expand_products("prod_{k=0}(z)", &vars).is_err());
        assert!(expand_products("prod_{k=0}^{2}z", &vars).is_err());
        assert!(expand_products("prod_{w=0}^{2}(z-w)", &vars).is_err());
    }

    #[test]
    fn defining_polynomial_files() {
        let file = ArrangementFile {
            name: None,
            variables: vec!["x".into(), "y".into(), "z".into(), "w".into()],
            hyperplanes: None,
            defining_polynomial: Some("x y w (x-z) (y-z) (y-w) prod_{k=-2}^{2}(z-kw)".into()),
        };
        let a = file.to_arrangement().unwrap();
        assert_eq!(a.len(), 11);
        let back = ArrangementFile::from_arrangement(&a, None).to_arrangement().unwrap();
        assert_eq!(back, a);
    }

    #[test]
    fn field_errors() {
        let file: ArrangementFile =
            serde_json::from_str(r#"{"variables": ["x", "y"], "hyperplanes": [{"coeffs": ["1", "a"], "mult": 1}]}"#)
                .unwrap();
        let err = file.to_arrangement().unwrap_err().to_string();
        assert!(err.starts_with("hyperplanes[0].coeffs[1]"), "{err}");
        let file: ArrangementFile =
            serde_json::from_str(r#"{"variables": ["x", "y"], "hyperplanes": [{"coeffs": ["1"], "mult": 1}]}"#).unwrap();
        assert!(file.to_arrangement().is_err());
    }
}
