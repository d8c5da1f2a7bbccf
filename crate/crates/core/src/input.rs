//! JSON input files: filtrations in monomial text syntax and campaign specs.

use serde::{Deserialize, Serialize};

use crate::corpus::GenSpec;
use crate::error::{Error, Result};
use crate::filtration::{GoodFiltration, ModulePresentation};
use crate::monomial::{minimalize, MonomialIdeal};
use crate::text::Vars;

/// On-disk form of a filtration. A missing annihilator means `M = R`; a
/// missing or empty prefix means the `I`-adic filtration.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FiltrationFile {
    pub vars: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub annihilator: Option<Vec<String>>,
    pub base_ideal: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub prefix: Option<Vec<Vec<String>>>,
}

impl FiltrationFile {
    pub fn from_filtration(vars: &Vars, f: &GoodFiltration) -> Self {
        let j = f.module().annihilator();
        Self {
            vars: vars.names().to_vec(),
            annihilator: (!j.is_zero()).then(|| vars.render_ideal(j)),
            base_ideal: vars.render_ideal(f.base()),
            prefix: Some(f.prefix().iter().map(|g| vars.render_ideal(g)).collect()),
        }
    }
}

#[derive(Debug, Clone)]
pub struct ParsedFiltration {
    pub vars: Vars,
    pub filtration: GoodFiltration,
}

fn line_col(source: &str, offset: usize) -> (usize, usize) {
    let before = &source[..offset.min(source.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    (line, column)
}

fn json_error(e: &serde_json::Error) -> Error {
    Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    }
}

/// Locates each monomial literal in the source text so syntax errors point
/// at the offending character.
struct Locator<'a> {
    source: &'a str,
    cursor: usize,
}

impl<'a> Locator<'a> {
    fn seek_key(&mut self, key: &str) {
        let needle = format!("\"{key}\"");
        if let Some(p) = self.source.find(&needle) {
            self.cursor = p + needle.len();
        }
    }

    fn position_of(&mut self, literal: &str, column_in_literal: usize) -> (usize, usize) {
        let encoded = serde_json::to_string(literal).expect("string encodes");
        match self.source[self.cursor..].find(&encoded) {
            Some(p) => {
                let start = self.cursor + p;
                self.cursor = start + encoded.len();
                let (line, col) = line_col(self.source, start);
                (line, col + column_in_literal)
            }
            None => (0, column_in_literal),
        }
    }

    fn skip(&mut self, literal: &str) {
        let encoded = serde_json::to_string(literal).expect("string encodes");
        if let Some(p) = self.source[self.cursor..].find(&encoded) {
            self.cursor += p + encoded.len();
        }
    }
}

fn parse_ideal(
    vars: &Vars,
    items: &[String],
    field: &str,
    loc: &mut Locator<'_>,
) -> Result<MonomialIdeal> {
    let mut gens = Vec::with_capacity(items.len());
    for text in items {
        match vars.parse_monomial(text) {
            Ok(m) => {
                loc.skip(text);
                gens.push(m);
            }
            Err(e) => {
                let (line, column) = loc.position_of(text, e.column);
                return Err(Error::Parse {
                    line,
                    column,
                    message: format!("in {field}: {text:?}: {}", e.message),
                });
            }
        }
    }
    minimalize(vars.len(), gens)
}

/// A filtration file parsed into unvalidated parts.
#[derive(Debug, Clone)]
pub struct FiltrationParts {
    pub vars: Vars,
    pub module: ModulePresentation,
    pub base: MonomialIdeal,
    /// Empty when the file gives no prefix.
    pub prefix: Vec<MonomialIdeal>,
}

/// Parse a filtration file without checking the filtration axioms.
pub fn parse_parts(source: &str) -> Result<FiltrationParts> {
    let raw: FiltrationFile = serde_json::from_str(source).map_err(|e| json_error(&e))?;
    let vars = Vars::new(raw.vars.clone()).map_err(|m| {
        let mut loc = Locator { source, cursor: 0 };
        loc.seek_key("vars");
        let (line, column) = line_col(source, loc.cursor);
        Error::Parse {
            line,
            column,
            message: m,
        }
    })?;
    let mut loc = Locator { source, cursor: 0 };
    let annihilator = match &raw.annihilator {
        Some(items) => {
            loc.seek_key("annihilator");
            parse_ideal(&vars, items, "annihilator", &mut loc)?
        }
        None => MonomialIdeal::zero(vars.len()),
    };
    loc.seek_key("base_ideal");
    let base = parse_ideal(&vars, &raw.base_ideal, "base_ideal", &mut loc)?;
    let mut prefix = Vec::new();
    if let Some(terms) = &raw.prefix {
        loc.seek_key("prefix");
        for (n, term) in terms.iter().enumerate() {
            prefix.push(parse_ideal(&vars, term, &format!("prefix[{n}]"), &mut loc)?);
        }
    }
    let module = ModulePresentation::new(annihilator)?;
    Ok(FiltrationParts {
        vars,
        module,
        base,
        prefix,
    })
}

/// Parse and validate a filtration file.
pub fn parse_filtration(source: &str) -> Result<ParsedFiltration> {
    let parts = parse_parts(source)?;
    let filtration = if parts.prefix.is_empty() {
        GoodFiltration::adic(parts.base, parts.module)?
    } else {
        GoodFiltration::new(parts.module, parts.base, parts.prefix)?
    };
    Ok(ParsedFiltration {
        vars: parts.vars,
        filtration,
    })
}

/// Parse a campaign spec; missing fields take their defaults.
pub fn parse_gen_spec(source: &str) -> Result<GenSpec> {
    let spec: GenSpec = serde_json::from_str(source).map_err(|e| json_error(&e))?;
    spec.validate()?;
    Ok(spec)
}
