//! Group presentations: the DSL parser and free-group words.

mod parser;
mod word;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use parser::{
    parse_decls, parse_file, parse_presentation, Factor, GroupDecl, ParseError, ParseErrorKind,
    WordExpr,
};
pub use word::{free_reduce, is_trivial_in_free, Word, WordError, MAX_RUNS};

/// A finite presentation `<generators | relators>`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    pub name: String,
    pub generator_names: Vec<String>,
    pub relators: Vec<Word>,
}

impl Presentation {
    /// The free group on `n` generators named `x1, x2, ...`.
    pub fn free(name: &str, n: usize) -> Self {
        Self {
            name: name.to_string(),
            generator_names: (1..=n).map(|i| format!("x{i}")).collect(),
            relators: Vec::new(),
        }
    }

    pub fn new(name: &str, generator_names: &[&str], relators: Vec<Word>) -> Self {
        Self {
            name: name.to_string(),
            generator_names: generator_names.iter().map(|s| s.to_string()).collect(),
            relators,
        }
    }

    pub fn rank(&self) -> usize {
        self.generator_names.len()
    }

    /// Check the invariants a parsed presentation carries.
    pub fn validate(&self) -> crate::Result<()> {
        for (i, g) in self.generator_names.iter().enumerate() {
            let ok = g.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
                && g.chars().all(|c| c.is_ascii_alphanumeric());
            if !ok {
                return Err(crate::Error::Malformed(format!("bad generator name {g:?}")));
            }
            if self.generator_names[..i].contains(g) {
                return Err(crate::Error::Malformed(format!("duplicate generator {g}")));
            }
        }
        for r in &self.relators {
            if let Some(m) = r.max_generator() {
                if m >= self.rank() {
                    return Err(crate::Error::IndexOutOfRange {
                        index: m,
                        len: self.rank(),
                    });
                }
            }
        }
        Ok(())
    }

    /// Render a word with this presentation's generator names.
    pub fn format_word(&self, w: &Word) -> String {
        if w.is_empty() {
            // `word := factor+`, so the identity needs an explicit factor.
            return match self.generator_names.first() {
                Some(g) => format!("{g}^0"),
                None => String::new(),
            };
        }
        w.letters()
            .iter()
            .map(|&(g, e)| {
                let name = &self.generator_names[g];
                if e == 1 {
                    name.clone()
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "group {} {{", self.name)?;
        writeln!(f, "  generators: {};", self.generator_names.join(", "))?;
        write!(f, "  relators:")?;
        for (i, r) in self.relators.iter().enumerate() {
            write!(f, "{}{}", if i == 0 { " " } else { ", " }, self.format_word(r))?;
        }
        writeln!(f, ";")?;
        writeln!(f, "}}")
    }
}
