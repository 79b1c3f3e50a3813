//! The batch positivity runner: one column per `y`, logged in order so an
//! interrupted run can pick up after the last complete line.

use std::fs::{self, File, OpenOptions};
use std::io::{BufWriter, Write};
use std::ops::Range;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use coxkl::checks::{sweep_columns, CheckReport, ColumnSummary};
use coxkl::coxeter::ElementId;
use coxkl::hecke::Strategy;
use coxkl::klbase::WGraph;
use coxkl::ring::{PolyStore, SymLaurentPoly};

pub const POSITIVITY_LOG: &str = "positivity_log";
pub const VERBOSE_LOG: &str = "positivity_verbose_log";
pub const ERROR_LOG: &str = "error_log";

#[derive(Clone, Debug)]
pub struct PositivityConfig {
    pub range: Range<u32>,
    pub strategy: Strategy,
    pub resume: bool,
    pub outdir: PathBuf,
    /// Bytes allowed for the global store of distinct values; 0 disables it.
    pub store_budget: u64,
    pub max_columns: Option<usize>,
    /// Columns handed to the pool at a time.
    pub batch: usize,
}

#[derive(Clone, Debug)]
pub struct PositivityOutcome {
    pub p3: CheckReport,
    pub unimodal: CheckReport,
    /// Last `y` in the log, and the running maximum there.
    pub last: Option<(u32, i64)>,
    /// First `y` computed by this invocation.
    pub start: u32,
    pub complete: bool,
    pub error_log_empty: bool,
}

impl PositivityOutcome {
    pub fn pass(&self) -> bool {
        self.p3.pass && self.unimodal.pass && self.error_log_empty
    }
}

/// The valid prefix of a progress log.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LogState {
    pub last: Option<(u32, i64)>,
    /// Length in bytes of the complete, well-formed prefix.
    pub valid_len: u64,
}

/// Parses `"<y>: maxcoeff = <n>"`.
pub fn parse_log_line(line: &str) -> Option<(u32, i64)> {
    let (y, rest) = line.split_once(": maxcoeff = ")?;
    Some((y.parse().ok()?, rest.parse().ok()?))
}

/// Scans complete lines; stops at the first malformed, unterminated or
/// out-of-order line.
pub fn scan_log(text: &str) -> LogState {
    let mut state = LogState { last: None, valid_len: 0 };
    let mut pos = 0usize;
    while let Some(nl) = text[pos..].find('\n') {
        let line = &text[pos..pos + nl];
        let Some((y, n)) = parse_log_line(line) else { break };
        if let Some((py, pn)) = state.last {
            if y <= py || n < pn {
                break;
            }
        }
        state.last = Some((y, n));
        pos += nl + 1;
        state.valid_len = pos as u64;
    }
    state
}

/// Length of the prefix of complete lines whose leading `y` is at most `last`.
fn prefix_through(text: &str, last: Option<u32>) -> u64 {
    let mut pos = 0usize;
    while let Some(nl) = text[pos..].find('\n') {
        let line = &text[pos..pos + nl];
        let y = line.split(':').next().and_then(|t| t.parse::<u32>().ok());
        match (y, last) {
            (Some(y), Some(last)) if y <= last => pos += nl + 1,
            _ => break,
        }
    }
    pos as u64
}

fn truncate_to(path: &Path, len: u64) -> Result<()> {
    let f = OpenOptions::new()
        .write(true)
        .create(true)
        .truncate(false)
        .open(path)
        .with_context(|| format!("opening {}", path.display()))?;
    f.set_len(len).with_context(|| format!("truncating {}", path.display()))?;
    Ok(())
}

fn read_or_empty(path: &Path) -> Result<String> {
    match fs::read(path) {
        Ok(bytes) => Ok(String::from_utf8_lossy(&bytes).into_owned()),
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(String::new()),
        Err(e) => Err(e).with_context(|| format!("reading {}", path.display())),
    }
}

/// Cuts the three logs back to the last complete progress line and returns it.
pub fn prepare_resume(outdir: &Path) -> Result<LogState> {
    let main = outdir.join(POSITIVITY_LOG);
    let state = scan_log(&read_or_empty(&main)?);
    truncate_to(&main, state.valid_len)?;
    let last_y = state.last.map(|(y, _)| y);
    for name in [VERBOSE_LOG, ERROR_LOG] {
        let path = outdir.join(name);
        let keep = prefix_through(&read_or_empty(&path)?, last_y);
        truncate_to(&path, keep)?;
    }
    Ok(state)
}

fn open_append(path: &Path) -> Result<BufWriter<File>> {
    let f = OpenOptions::new()
        .append(true)
        .create(true)
        .open(path)
        .with_context(|| format!("opening {}", path.display()))?;
    Ok(BufWriter::new(f))
}

/// Rough heap footprint of one stored value (kept in a vector and a map).
fn stored_bytes(p: &SymLaurentPoly) -> u64 {
    2 * (24 + 8 * p.half_coeffs().len() as u64) + 32
}

struct Logs {
    main: BufWriter<File>,
    verbose: BufWriter<File>,
    errors: BufWriter<File>,
}

impl Logs {
    /// Errors first, then the verbose line, then the progress line, so a
    /// progress line never precedes the records it vouches for.
    fn record(&mut self, s: &ColumnSummary, running: i64) -> Result<()> {
        for (x, z, h) in &s.negative {
            writeln!(self.errors, "{}: x = {}, z = {}: negative coefficient in {}", s.y, x, z, h)?;
        }
        for (x, z, h) in &s.non_unimodal {
            writeln!(self.errors, "{}: x = {}, z = {}: not unimodal: {}", s.y, x, z, h.to_qpoly())?;
        }
        self.errors.flush()?;
        writeln!(
            self.verbose,
            "{}: maxcoeff = {}, entries = {}, distinct = {}",
            s.y, s.max_coeff, s.entries, s.distinct
        )?;
        self.verbose.flush()?;
        writeln!(self.main, "{}: maxcoeff = {}", s.y, running)?;
        self.main.flush()?;
        Ok(())
    }
}

/// Runs the columns of `cfg.range` on the current rayon pool.
pub fn run_positivity(wg: &WGraph<'_>, cfg: &PositivityConfig) -> Result<PositivityOutcome> {
    let g = wg.group();
    if cfg.range.end as usize > g.size() || cfg.range.start >= cfg.range.end {
        bail!("range {:?} outside 0..{}", cfg.range, g.size());
    }
    fs::create_dir_all(&cfg.outdir).with_context(|| format!("creating {}", cfg.outdir.display()))?;
    let mut last = None;
    let mut start = cfg.range.start;
    if cfg.resume {
        let state = prepare_resume(&cfg.outdir)?;
        if let Some((y, n)) = state.last {
            if y + 1 < cfg.range.start || y >= cfg.range.end {
                bail!("log ends at y = {y}, which does not continue the range {:?}", cfg.range);
            }
            last = Some((y, n));
            start = y + 1;
        }
    } else {
        for name in [POSITIVITY_LOG, VERBOSE_LOG, ERROR_LOG] {
            truncate_to(&cfg.outdir.join(name), 0)?;
        }
    }
    let mut end = cfg.range.end;
    if let Some(n) = cfg.max_columns {
        end = end.min(start.saturating_add(n as u32));
    }
    let ys: Vec<ElementId> = (start..end).map(ElementId).collect();

    let mut logs = Logs {
        main: open_append(&cfg.outdir.join(POSITIVITY_LOG))?,
        verbose: open_append(&cfg.outdir.join(VERBOSE_LOG))?,
        errors: open_append(&cfg.outdir.join(ERROR_LOG))?,
    };
    let mut p3 = CheckReport::new("P3", g.name());
    let mut unimodal = CheckReport::new("unimodal", g.name());
    let mut running = last.map_or(0, |(_, n)| n);
    let keep = cfg.store_budget > 0;
    let mut global: PolyStore<SymLaurentPoly> = PolyStore::new();
    let mut used = 0u64;
    let mut over_budget = false;

    sweep_columns(wg, &ys, cfg.strategy, cfg.batch, keep, |s| -> Result<()> {
        running = running.max(s.max_coeff);
        logs.record(&s, running)?;
        p3.examined += s.entries;
        unimodal.examined += s.entries;
        p3.see_coeff(s.max_coeff);
        p3.distinct = p3.distinct.max(s.distinct);
        for (x, z, h) in &s.negative {
            p3.fail(vec![x.0, s.y.0, z.0], h, "negative coefficient");
        }
        for (x, z, h) in &s.non_unimodal {
            unimodal.fail(vec![x.0, s.y.0, z.0], h.to_qpoly(), "not unimodal");
        }
        if keep && !over_budget {
            for p in s.polys {
                if global.lookup(&p).is_none() {
                    used += stored_bytes(&p);
                    global.intern(p);
                }
            }
            if used > cfg.store_budget {
                over_budget = true;
                p3.notes.push(format!("global store budget exceeded at y = {}; distinct count is a lower bound", s.y));
            }
        }
        last = Some((s.y.0, running));
        Ok(())
    })?;

    p3.max_coeff = running;
    if keep {
        p3.distinct = p3.distinct.max(global.len() as u64);
    }
    if start > cfg.range.start {
        p3.notes.push(format!("resumed at y = {start}; counts cover this invocation only"));
    }
    let error_log_empty = fs::metadata(cfg.outdir.join(ERROR_LOG)).map(|m| m.len() == 0).unwrap_or(true);
    Ok(PositivityOutcome {
        p3,
        unimodal,
        last,
        start,
        complete: end == cfg.range.end,
        error_log_empty,
    })
}
