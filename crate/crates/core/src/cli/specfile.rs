//! Code specification files.
//!
//! ```text
//! # comment
//! [inner]
//! n = 4
//! generators = XXXX ZZZZ
//! logical = XIXI ZZII        # X then Z, one pair per line, optional
//! distances = 2 2            # claimed d_i per level, optional
//!
//! [chain]
//! levels = 2 1 0
//! ordering = 1 2             # optional, 1-based pair indices
//! swaps = 1                  # optional, 1-based pair indices
//!
//! [outer 1]
//! blocks = 2
//! bits = 1
//! generators = ZZ
//! logical = XX ZI            # optional
//! k = 1                      # claimed symbol count, optional
//! d = 1                      # claimed symbol distance, optional
//! ```
//!
//! Indices in files are 1-based.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::builder::{BuildError, OuterCode};
use crate::distance::DistanceOptions;
use crate::partition::{NestingStrategy, SubcodeChain};
use crate::pauli::PauliOperator;
use crate::stabilizer::{LogicalPair, StabilizerCode};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing [{0}] section")]
    MissingSection(&'static str),
    #[error("line {line}: [{section}] is missing required key `{key}`")]
    MissingKey {
        line: usize,
        section: String,
        key: &'static str,
    },
    #[error("line {line}: {source}")]
    Invalid {
        line: usize,
        #[source]
        source: BuildError,
    },
    #[error("line {line}: claimed {what} = {claimed}, but the generators give {actual}")]
    ClaimMismatch {
        line: usize,
        what: &'static str,
        claimed: usize,
        actual: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InnerSpec {
    pub line: usize,
    pub n: usize,
    pub generators: Vec<PauliOperator>,
    pub logicals: Option<Vec<LogicalPair>>,
    pub distances: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainSpec {
    pub line: usize,
    pub levels: Vec<usize>,
    /// 0-based.
    pub ordering: Vec<usize>,
    /// 0-based.
    pub swaps: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OuterSpec {
    pub line: usize,
    pub index: usize,
    pub blocks: usize,
    pub bits: usize,
    pub generators: Vec<PauliOperator>,
    pub logicals: Option<Vec<LogicalPair>>,
    pub k: Option<usize>,
    pub d: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeSpec {
    pub inner: InnerSpec,
    pub chain: Option<ChainSpec>,
    pub outers: Vec<OuterSpec>,
}

struct Section {
    name: String,
    line: usize,
    entries: Vec<(usize, String, String)>,
}

impl Section {
    fn check_keys(&self, allowed: &[&str]) -> Result<(), SpecError> {
        let mut seen = BTreeMap::new();
        for (line, key, _) in &self.entries {
            if !allowed.contains(&key.as_str()) {
                return Err(syntax(*line, format!("unknown key `{key}` in [{}]", self.name)));
            }
            if key != "logical" && seen.insert(key.clone(), *line).is_some() {
                return Err(syntax(*line, format!("duplicate key `{key}`")));
            }
        }
        Ok(())
    }

    fn get(&self, key: &str) -> Option<(usize, &str)> {
        self.entries
            .iter()
            .find(|(_, k, _)| k == key)
            .map(|(l, _, v)| (*l, v.as_str()))
    }

    fn require(&self, key: &'static str) -> Result<(usize, &str), SpecError> {
        self.get(key).ok_or_else(|| SpecError::MissingKey {
            line: self.line,
            section: self.name.clone(),
            key,
        })
    }

    fn logicals(&self, n: usize) -> Result<Option<Vec<LogicalPair>>, SpecError> {
        let lines: Vec<_> = self.entries.iter().filter(|(_, k, _)| k == "logical").collect();
        if lines.is_empty() {
            return Ok(None);
        }
        lines
            .into_iter()
            .map(|(line, _, v)| {
                let ops = paulis(*line, v, n)?;
                match <[PauliOperator; 2]>::try_from(ops) {
                    Ok([x, z]) => Ok(LogicalPair::new(x, z)),
                    Err(_) => Err(syntax(*line, "a logical line holds exactly two operators: X then Z".into())),
                }
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Some)
    }
}

fn syntax(line: usize, message: String) -> SpecError {
    SpecError::Syntax { line, message }
}

fn number(line: usize, s: &str) -> Result<usize, SpecError> {
    s.parse()
        .map_err(|_| syntax(line, format!("expected a non-negative integer, found `{s}`")))
}

fn numbers(line: usize, s: &str) -> Result<Vec<usize>, SpecError> {
    s.split_whitespace().map(|t| number(line, t)).collect()
}

fn one_based(line: usize, s: &str) -> Result<Vec<usize>, SpecError> {
    numbers(line, s)?
        .into_iter()
        .map(|i| i.checked_sub(1).ok_or_else(|| syntax(line, "indices are 1-based".into())))
        .collect()
}

fn paulis(line: usize, s: &str, n: usize) -> Result<Vec<PauliOperator>, SpecError> {
    s.split_whitespace()
        .map(|t| {
            let p: PauliOperator = t
                .parse()
                .map_err(|e| syntax(line, format!("bad Pauli string `{t}`: {e}")))?;
            if p.num_qubits() != n {
                return Err(syntax(
                    line,
                    format!("`{t}` acts on {} qubits, expected {n}", p.num_qubits()),
                ));
            }
            Ok(p)
        })
        .collect()
}

fn sections(text: &str) -> Result<Vec<Section>, SpecError> {
    let mut out: Vec<Section> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap().trim();
        if content.is_empty() {
            continue;
        }
        if let Some(header) = content.strip_prefix('[') {
            let name = header
                .strip_suffix(']')
                .ok_or_else(|| syntax(line, "unterminated section header".into()))?;
            out.push(Section {
                name: name.split_whitespace().collect::<Vec<_>>().join(" "),
                line,
                entries: Vec::new(),
            });
            continue;
        }
        let (key, value) = content
            .split_once('=')
            .ok_or_else(|| syntax(line, format!("expected `key = value`, found `{content}`")))?;
        let section = out
            .last_mut()
            .ok_or_else(|| syntax(line, "entry outside of any section".into()))?;
        section
            .entries
            .push((line, key.trim().to_string(), value.trim().to_string()));
    }
    Ok(out)
}

impl CodeSpec {
    pub fn parse(text: &str) -> Result<Self, SpecError> {
        let mut inner = None;
        let mut chain = None;
        let mut outers: Vec<OuterSpec> = Vec::new();
        for section in sections(text)? {
            let mut words = section.name.split(' ');
            match (words.next(), words.next(), words.next()) {
                (Some("inner"), None, None) => {
                    if inner.is_some() {
                        return Err(syntax(section.line, "duplicate [inner] section".into()));
                    }
                    inner = Some(parse_inner(&section)?);
                }
                (Some("chain"), None, None) => {
                    if chain.is_some() {
                        return Err(syntax(section.line, "duplicate [chain] section".into()));
                    }
                    chain = Some(parse_chain(&section)?);
                }
                (Some("outer"), Some(i), None) => {
                    let index = number(section.line, i)?;
                    if index != outers.len() + 1 {
                        return Err(syntax(
                            section.line,
                            format!("expected [outer {}], found [outer {index}]", outers.len() + 1),
                        ));
                    }
                    outers.push(parse_outer(&section, index)?);
                }
                _ => {
                    return Err(syntax(section.line, format!("unknown section [{}]", section.name)));
                }
            }
        }
        let inner = inner.ok_or(SpecError::MissingSection("inner"))?;
        if !outers.is_empty() && chain.is_none() {
            return Err(SpecError::MissingSection("chain"));
        }
        let spec = Self { inner, chain, outers };
        // Cheap consistency: validate every code now so errors carry lines.
        spec.inner_code()?;
        spec.chain()?;
        for o in &spec.outers {
            spec.outer_stabilizer_code(o)?;
        }
        Ok(spec)
    }

    pub fn inner_code(&self) -> Result<StabilizerCode, SpecError> {
        let inner = &self.inner;
        let invalid = |v| SpecError::Invalid {
            line: inner.line,
            source: BuildError::InvalidInner(v),
        };
        match &inner.logicals {
            Some(pairs) => StabilizerCode::new(inner.n, inner.generators.clone(), pairs.clone(), None),
            None => StabilizerCode::from_generators(inner.n, inner.generators.clone()),
        }
        .map_err(invalid)
    }

    pub fn chain(&self) -> Result<Option<SubcodeChain>, SpecError> {
        let Some(c) = &self.chain else {
            return Ok(None);
        };
        let invalid = |e: crate::partition::PartitionError| SpecError::Invalid {
            line: c.line,
            source: e.into(),
        };
        let strategy = NestingStrategy::identity()
            .with_ordering(c.ordering.clone())
            .with_swaps(c.swaps.iter().copied());
        let mut chain = SubcodeChain::build(self.inner_code()?, c.levels.clone(), strategy).map_err(invalid)?;
        if let Some(ds) = &self.inner.distances {
            chain = chain.with_distances(ds.clone()).map_err(|e| SpecError::Invalid {
                line: self.inner.line,
                source: e.into(),
            })?;
        }
        Ok(Some(chain))
    }

    fn outer_stabilizer_code(&self, o: &OuterSpec) -> Result<StabilizerCode, SpecError> {
        let n = o.blocks * o.bits;
        let code = match &o.logicals {
            Some(pairs) => StabilizerCode::new(n, o.generators.clone(), pairs.clone(), None),
            None => StabilizerCode::from_generators(n, o.generators.clone()),
        }
        .map_err(|v| SpecError::Invalid {
            line: o.line,
            source: BuildError::InvalidOuter(v),
        })?;
        if let Some(k) = o.k {
            let actual = code.k() / o.bits.max(1);
            if code.k() % o.bits.max(1) != 0 || k != actual {
                return Err(SpecError::ClaimMismatch {
                    line: o.line,
                    what: "k",
                    claimed: k,
                    actual,
                });
            }
        }
        Ok(code)
    }

    /// Outer codes in level order. Missing distances are computed.
    pub fn outer_codes(&self, opts: &DistanceOptions) -> Result<Vec<OuterCode>, SpecError> {
        self.outers
            .iter()
            .map(|o| {
                let code = self.outer_stabilizer_code(o)?;
                OuterCode::new(code, o.blocks, o.d, opts).map_err(|source| SpecError::Invalid {
                    line: o.line,
                    source,
                })
            })
            .collect()
    }
}

fn parse_inner(s: &Section) -> Result<InnerSpec, SpecError> {
    s.check_keys(&["n", "generators", "logical", "distances"])?;
    let (line, v) = s.require("n")?;
    let n = number(line, v)?;
    if n == 0 {
        return Err(syntax(line, "n must be positive".into()));
    }
    let generators = match s.get("generators") {
        Some((line, v)) => paulis(line, v, n)?,
        None => Vec::new(),
    };
    let distances = s.get("distances").map(|(l, v)| numbers(l, v)).transpose()?;
    Ok(InnerSpec {
        line: s.line,
        n,
        generators,
        logicals: s.logicals(n)?,
        distances,
    })
}

fn parse_chain(s: &Section) -> Result<ChainSpec, SpecError> {
    s.check_keys(&["levels", "ordering", "swaps"])?;
    let (line, v) = s.require("levels")?;
    Ok(ChainSpec {
        line: s.line,
        levels: numbers(line, v)?,
        ordering: s.get("ordering").map(|(l, v)| one_based(l, v)).transpose()?.unwrap_or_default(),
        swaps: s.get("swaps").map(|(l, v)| one_based(l, v)).transpose()?.unwrap_or_default(),
    })
}

fn parse_outer(s: &Section, index: usize) -> Result<OuterSpec, SpecError> {
    s.check_keys(&["blocks", "bits", "generators", "logical", "k", "d"])?;
    let (line, v) = s.require("blocks")?;
    let blocks = number(line, v)?;
    let (line, v) = s.require("bits")?;
    let bits = number(line, v)?;
    if blocks == 0 || bits == 0 {
        return Err(syntax(s.line, "blocks and bits must be positive".into()));
    }
    let n = blocks * bits;
    let generators = match s.get("generators") {
        Some((line, v)) => paulis(line, v, n)?,
        None => Vec::new(),
    };
    Ok(OuterSpec {
        line: s.line,
        index,
        blocks,
        bits,
        generators,
        logicals: s.logicals(n)?,
        k: s.get("k").map(|(l, v)| number(l, v)).transpose()?,
        d: s.get("d").map(|(l, v)| number(l, v)).transpose()?,
    })
}
