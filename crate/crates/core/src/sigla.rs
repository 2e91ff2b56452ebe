//! Witness inventories per language side and the sidecar file that
//! configures them.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Language {
    Slavonic,
    Greek,
}

impl Language {
    pub fn other(self) -> Language {
        match self {
            Language::Slavonic => Language::Greek,
            Language::Greek => Language::Slavonic,
        }
    }
}

impl fmt::Display for Language {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Language::Slavonic => "slavonic",
            Language::Greek => "greek",
        })
    }
}

/// An ordered set of witness identifiers, kept in configuration order.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Sigla(Vec<String>);

impl Sigla {
    pub fn single(siglum: &str) -> Self {
        Sigla(vec![siglum.to_string()])
    }

    pub fn iter(&self) -> impl Iterator<Item = &str> {
        self.0.iter().map(String::as_str)
    }

    pub fn contains(&self, siglum: &str) -> bool {
        self.0.iter().any(|s| s == siglum)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }
}

impl fmt::Display for Sigla {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            f.write_str(s)?;
        }
        Ok(())
    }
}

/// Witnesses of one language side. The first entry is the main witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SideConfig {
    witnesses: Vec<String>,
}

impl SideConfig {
    pub fn new<I, S>(main: &str, others: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut witnesses = vec![main.to_string()];
        witnesses.extend(others.into_iter().map(Into::into));
        SideConfig { witnesses }
    }

    pub fn main(&self) -> &str {
        &self.witnesses[0]
    }

    pub fn witnesses(&self) -> &[String] {
        &self.witnesses
    }

    pub fn knows(&self, siglum: &str) -> bool {
        self.witnesses.iter().any(|w| w == siglum)
    }

    /// Splits a token such as `WGH` or `CsM` into known sigla, or `None`
    /// when the token is not entirely made of sigla.
    pub fn segment(&self, token: &str) -> Option<Sigla> {
        let mut found = Vec::new();
        if token.is_empty() || !self.segment_into(token, &mut found) {
            return None;
        }
        Some(self.normalize(found))
    }

    fn segment_into(&self, rest: &str, out: &mut Vec<String>) -> bool {
        if rest.is_empty() {
            return true;
        }
        let mut candidates: Vec<&String> =
            self.witnesses.iter().filter(|w| rest.starts_with(w.as_str())).collect();
        candidates.sort_by_key(|w| std::cmp::Reverse(w.len()));
        for w in candidates {
            out.push(w.clone());
            if self.segment_into(&rest[w.len()..], out) {
                return true;
            }
            out.pop();
        }
        false
    }

    /// Deduplicates and orders sigla by their position in the configuration.
    pub fn normalize(&self, mut sigla: Vec<String>) -> Sigla {
        sigla.sort_by_key(|s| self.witnesses.iter().position(|w| w == s).unwrap_or(usize::MAX));
        sigla.dedup();
        Sigla(sigla)
    }
}

/// Witness inventories for both sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SiglaConfig {
    pub slavonic: SideConfig,
    pub greek: SideConfig,
}

impl Default for SiglaConfig {
    fn default() -> Self {
        SiglaConfig {
            slavonic: SideConfig::new("S", ["W", "G", "H"]),
            greek: SideConfig::new("Cr", ["C", "Cs", "M", "Ch"]),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SiglaConfigError {
    #[error("line {line}: expected `slavonic` or `greek`, found `{found}`")]
    UnknownSide { line: usize, found: String },
    #[error("line {line}: no witnesses listed")]
    NoWitnesses { line: usize },
    #[error("line {line}: siglum `{siglum}` must be ASCII letters")]
    BadSiglum { line: usize, siglum: String },
    #[error("missing `{0}` line")]
    MissingSide(&'static str),
}

impl SiglaConfig {
    pub fn side(&self, language: Language) -> &SideConfig {
        match language {
            Language::Slavonic => &self.slavonic,
            Language::Greek => &self.greek,
        }
    }

    /// The configuration for a table whose two sides were exchanged.
    pub fn swapped(&self) -> SiglaConfig {
        SiglaConfig {
            slavonic: self.greek.clone(),
            greek: self.slavonic.clone(),
        }
    }

    /// Parses the sidecar format:
    ///
    /// ```text
    /// # side   main  other witnesses
    /// slavonic S W G H
    /// greek    Cr C Cs M Ch
    /// ```
    pub fn parse(text: &str) -> Result<SiglaConfig, SiglaConfigError> {
        let mut slavonic = None;
        let mut greek = None;
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let mut tokens = content.split_whitespace();
            let side = tokens.next().unwrap_or_default();
            let sigla: Vec<&str> = tokens.collect();
            if let Some(bad) = sigla.iter().find(|s| !s.chars().all(|c| c.is_ascii_alphabetic())) {
                return Err(SiglaConfigError::BadSiglum {
                    line,
                    siglum: bad.to_string(),
                });
            }
            let Some((main, others)) = sigla.split_first() else {
                return Err(SiglaConfigError::NoWitnesses { line });
            };
            let cfg = SideConfig::new(main, others.iter().copied());
            match side {
                "slavonic" => slavonic = Some(cfg),
                "greek" => greek = Some(cfg),
                other => {
                    return Err(SiglaConfigError::UnknownSide {
                        line,
                        found: other.to_string(),
                    })
                }
            }
        }
        Ok(SiglaConfig {
            slavonic: slavonic.ok_or(SiglaConfigError::MissingSide("slavonic"))?,
            greek: greek.ok_or(SiglaConfigError::MissingSide("greek"))?,
        })
    }
}
