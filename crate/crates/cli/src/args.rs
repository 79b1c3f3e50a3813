use std::ops::Range;
use std::path::PathBuf;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, ValueEnum};
use coxkl::coxeter::{build_group, CoxeterMatrix, ElementId, GroupTable};
use coxkl::dihedral::Side;
use coxkl::hecke::Strategy;

#[derive(Parser, Debug, Clone)]
#[command(name = "coxkl", version, about = "Kazhdan-Lusztig polynomials and positivity checks for finite Coxeter groups")]
pub struct Cli {
    /// Preset group: A<n>, B<n>, D<n>, F4, H3, H4, I2(<m>).
    #[arg(long, conflicts_with = "matrix")]
    pub group: Option<String>,

    /// Coxeter matrix file: the rank, then the upper triangle of labels.
    #[arg(long)]
    pub matrix: Option<PathBuf>,

    #[arg(long, value_enum)]
    pub command: Command,

    /// Element ids to process: `a..b`, `a..=b` or `a`. Defaults to the whole group.
    #[arg(long)]
    pub range: Option<String>,

    #[arg(long, value_enum, default_value_t = StrategyArg::First)]
    pub strategy: StrategyArg,

    #[arg(long, default_value_t = 1)]
    pub threads: usize,

    /// Continue a positivity run from its existing logs.
    #[arg(long)]
    pub resume: bool,

    #[arg(long, default_value = ".")]
    pub outdir: PathBuf,

    /// Memory for the global store of distinct h polynomials (e.g. 512M, 2G; 0 disables it).
    #[arg(long, default_value = "256M")]
    pub store_budget: String,

    /// Stop a positivity run after this many columns.
    #[arg(long)]
    pub max_columns: Option<usize>,

    /// Left factor for cprod: an id, `e`, or a word like `[1,2,1]`.
    #[arg(long)]
    pub x: Option<String>,

    /// Right factor for cprod and cycltable.
    #[arg(long)]
    pub y: Option<String>,

    /// Dihedral order for triangle; omit for the infinite group.
    #[arg(long)]
    pub m: Option<u32>,

    #[arg(long, default_value_t = 1)]
    pub k: u32,

    #[arg(long, value_enum, default_value_t = SideArg::Same)]
    pub side: SideArg,

    #[arg(long)]
    pub rows: Option<u32>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    /// List the distinct KL polynomials and check P1.
    Klplist,
    /// Check P2.
    Decrklpol,
    /// Check P3 and unimodality column by column, with logs and resume.
    Positivity,
    /// Print all products c_x c_y for a fixed y.
    Cycltable,
    /// Print one product c_x c_y.
    Cprod,
    /// Print a dihedral coefficient table.
    Triangle,
    /// Count extremal pairs.
    Extremal,
    /// Run every check on the group.
    Check,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum StrategyArg {
    First,
    Last,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::First => Strategy::First,
            StrategyArg::Last => Strategy::Last,
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum SideArg {
    Same,
    Opposite,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Self {
        match s {
            SideArg::Same => Side::Same,
            SideArg::Opposite => Side::Opposite,
        }
    }
}

impl Cli {
    pub fn load_group(&self) -> Result<GroupTable> {
        let m = match (&self.group, &self.matrix) {
            (Some(name), None) => CoxeterMatrix::preset(name)?,
            (None, Some(path)) => {
                let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
                let name = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
                CoxeterMatrix::parse_text(&name, &text).with_context(|| format!("parsing {}", path.display()))?
            }
            _ => bail!("exactly one of --group and --matrix is required"),
        };
        Ok(build_group(&m)?)
    }

    pub fn store_budget_bytes(&self) -> Result<u64> {
        parse_bytes(&self.store_budget)
    }
}

/// `123`, `64K`, `512M`, `2G`.
pub fn parse_bytes(s: &str) -> Result<u64> {
    let s = s.trim();
    let (num, mult) = match s.char_indices().last() {
        Some((i, c)) if c.is_ascii_alphabetic() => {
            let mult = match c.to_ascii_uppercase() {
                'K' => 1 << 10,
                'M' => 1 << 20,
                'G' => 1 << 30,
                _ => bail!("bad size suffix in {s:?}"),
            };
            (&s[..i], mult)
        }
        _ => (s, 1),
    };
    let n: u64 = num.parse().with_context(|| format!("bad size {s:?}"))?;
    n.checked_mul(mult).ok_or_else(|| anyhow!("size {s:?} too large"))
}

/// Parses `a..b`, `a..=b` or `a` and checks it against `0..size`.
pub fn parse_range(s: Option<&str>, size: usize) -> Result<Range<u32>> {
    let size = size as u32;
    let r = match s {
        None => 0..size,
        Some(s) => {
            let num = |t: &str| -> Result<u32> { t.trim().parse().with_context(|| format!("bad range {s:?}")) };
            if let Some((a, b)) = s.split_once("..=") {
                num(a)?..num(b)? + 1
            } else if let Some((a, b)) = s.split_once("..") {
                let hi = if b.trim().is_empty() { size } else { num(b)? };
                num(a)?..hi
            } else {
                let a = num(s)?;
                a..a + 1
            }
        }
    };
    if r.start >= r.end || r.end > size {
        bail!("range {}..{} is empty or outside 0..{size}", r.start, r.end);
    }
    Ok(r)
}

/// An element id, `e`, or a 1-based word such as `[1,2,1]`.
pub fn parse_element(g: &GroupTable, s: &str) -> Result<ElementId> {
    let s = s.trim();
    if s == "e" {
        return Ok(g.identity());
    }
    if let Some(inner) = s.strip_prefix('[').and_then(|t| t.strip_suffix(']')) {
        let word = inner
            .split(',')
            .filter(|t| !t.trim().is_empty())
            .map(|t| {
                let s: usize = t.trim().parse().with_context(|| format!("bad generator {t:?}"))?;
                if s == 0 || s > g.rank() {
                    bail!("generator {s} outside 1..={}", g.rank());
                }
                Ok(s - 1)
            })
            .collect::<Result<Vec<_>>>()?;
        return Ok(g.element_from_word(&word)?);
    }
    let id: u32 = s.parse().with_context(|| format!("bad element {s:?}"))?;
    if id as usize >= g.size() {
        bail!("element {id} outside 0..{}", g.size());
    }
    Ok(ElementId(id))
}
