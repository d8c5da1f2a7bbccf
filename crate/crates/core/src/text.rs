//! Monomial text syntax: `x^2*y`, with `1` for the unit monomial.

use std::fmt;

use crate::monomial::{Monomial, MonomialIdeal};

/// Error inside a single monomial string; `column` is 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyntaxError {
    pub column: usize,
    pub message: String,
}

impl fmt::Display for SyntaxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "column {}: {}", self.column, self.message)
    }
}

/// Declared variable names, in ambient order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vars {
    names: Vec<String>,
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Vars {
    pub fn new(names: Vec<String>) -> Result<Self, String> {
        if names.is_empty() {
            return Err("at least one variable must be declared".into());
        }
        for (i, n) in names.iter().enumerate() {
            if !is_identifier(n) {
                return Err(format!("variable name {n:?} is not an identifier"));
            }
            if names[..i].contains(n) {
                return Err(format!("variable {n:?} declared twice"));
            }
        }
        Ok(Self { names })
    }

    /// `x, y, z` for up to three variables, `x1..xD` beyond.
    pub fn standard(ambient: usize) -> Self {
        let names = if ambient <= 3 {
            ["x", "y", "z"][..ambient]
                .iter()
                .map(|s| s.to_string())
                .collect()
        } else {
            (1..=ambient).map(|i| format!("x{i}")).collect()
        };
        Self { names }
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn parse_monomial(&self, text: &str) -> Result<Monomial, SyntaxError> {
        let mut exps = vec![0u32; self.names.len()];
        if text.trim() == "1" {
            return Ok(Monomial::new(exps));
        }
        let mut offset = 0;
        for factor in text.split('*') {
            let start = offset + (factor.len() - factor.trim_start().len());
            offset += factor.len() + 1;
            let factor = factor.trim();
            let err = |col: usize, message: String| SyntaxError {
                column: col + 1,
                message,
            };
            if factor.is_empty() {
                return Err(err(start, "empty factor".into()));
            }
            let (name, exp) = match factor.split_once('^') {
                Some((n, e)) => (n.trim_end(), Some(e.trim_start())),
                None => (factor, None),
            };
            let index = self
                .names
                .iter()
                .position(|v| v == name)
                .ok_or_else(|| err(start, format!("unknown variable {name:?}")))?;
            let value = match exp {
                None => 1,
                Some(e) => {
                    let exp_col = start + factor.find('^').unwrap_or(0) + 1;
                    if e.is_empty() || !e.bytes().all(|b| b.is_ascii_digit()) {
                        return Err(err(
                            exp_col,
                            format!("exponent {e:?} is not a non-negative integer"),
                        ));
                    }
                    e.parse::<u32>()
                        .map_err(|_| err(exp_col, format!("exponent {e} is too large")))?
                }
            };
            exps[index] = exps[index]
                .checked_add(value)
                .ok_or_else(|| err(start, "exponent overflow".into()))?;
        }
        Ok(Monomial::new(exps))
    }

    pub fn render_monomial(&self, m: &Monomial) -> String {
        let factors: Vec<String> = m
            .exponents()
            .iter()
            .zip(&self.names)
            .filter(|(&e, _)| e > 0)
            .map(|(&e, n)| {
                if e == 1 {
                    n.clone()
                } else {
                    format!("{n}^{e}")
                }
            })
            .collect();
        if factors.is_empty() {
            "1".into()
        } else {
            factors.join("*")
        }
    }

    pub fn render_ideal(&self, ideal: &MonomialIdeal) -> Vec<String> {
        ideal
            .generators()
            .iter()
            .map(|g| self.render_monomial(g))
            .collect()
    }

    /// `(x^2, x*y)`, or `(0)` for the zero ideal.
    pub fn display_ideal(&self, ideal: &MonomialIdeal) -> String {
        if ideal.is_zero() {
            return "(0)".into();
        }
        format!("({})", self.render_ideal(ideal).join(", "))
    }
}
