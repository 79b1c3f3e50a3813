pub mod args;
pub mod positivity;

use std::fs;
use std::io::Write;
use std::path::Path;

use anyhow::{bail, Context, Result};
use coxkl::checks::{
    check_h_symmetry, check_p1, check_p2, check_strategy_invariance, check_w0_identity, CheckReport,
};
use coxkl::coxeter::{BruhatIntervals, ElementId, GroupTable};
use coxkl::dihedral::{crosscheck_dihedral, triangle_table};
use coxkl::hecke::{column, CCombo};
use coxkl::klbase::{build_wgraph, count_extremal_pairs, KlStore};
use coxkl::ring::LaurentPoly;

pub use args::{parse_element, parse_range, Cli, Command};
pub use positivity::{run_positivity, PositivityConfig, PositivityOutcome};

/// Groups up to this size also get the all-pairs h-symmetry check.
const H_SYMMETRY_LIMIT: usize = 2000;

pub const REPORT_FILE: &str = "report.jsonl";
pub const KLPLIST_FILE: &str = "klplist";

/// `c_<word>` terms, with the coefficient in front unless it is 1.
pub fn format_ccombo(g: &GroupTable, c: &CCombo) -> String {
    if c.is_zero() {
        return "0".into();
    }
    let terms: Vec<String> = c
        .iter()
        .map(|(z, p)| {
            let w = g.word_string(z);
            if *p == LaurentPoly::one() {
                format!("c_{w}")
            } else if p.min_exp() == Some(0) && p.max_exp() == Some(0) {
                format!("{p} c_{w}")
            } else {
                format!("({p}) c_{w}")
            }
        })
        .collect();
    terms.join(" + ")
}

fn write_reports(outdir: &Path, reports: &[CheckReport]) -> Result<()> {
    fs::create_dir_all(outdir).with_context(|| format!("creating {}", outdir.display()))?;
    let path = outdir.join(REPORT_FILE);
    let mut text = String::new();
    for r in reports {
        text.push_str(&r.to_json());
        text.push('\n');
    }
    fs::write(&path, text).with_context(|| format!("writing {}", path.display()))
}

fn finish(cli: &Cli, out: &mut dyn Write, reports: &[CheckReport]) -> Result<bool> {
    for r in reports {
        writeln!(out, "{r}")?;
    }
    write_reports(&cli.outdir, reports)?;
    Ok(reports.iter().all(|r| r.pass))
}

/// Runs one command; returns whether every check passed.
pub fn run(cli: &Cli, out: &mut (dyn Write + Send)) -> Result<bool> {
    if cli.threads == 0 {
        bail!("--threads must be at least 1");
    }
    let pool = rayon::ThreadPoolBuilder::new().num_threads(cli.threads).build()?;
    pool.install(|| dispatch(cli, out))
}

fn dispatch(cli: &Cli, out: &mut (dyn Write + Send)) -> Result<bool> {
    if cli.command == Command::Triangle {
        return cmd_triangle(cli, out);
    }
    let g = cli.load_group()?;
    match cli.command {
        Command::Extremal => {
            let c = count_extremal_pairs(&g, &BruhatIntervals::new(&g));
            writeln!(out, "{}: extremal pairs {}", g.name(), c.all)?;
            writeln!(out, "{}: with y <= y^-1 {}", g.name(), c.inverse_reduced)?;
            writeln!(out, "{}: up to inversion {}", g.name(), c.orbits)?;
            Ok(true)
        }
        Command::Klplist => cmd_klplist(cli, &g, out),
        Command::Decrklpol => {
            let store = KlStore::build(&g)?;
            finish(cli, out, &[check_p2(&store)])
        }
        Command::Cprod => {
            let x = parse_element(&g, cli.x.as_deref().context("cprod needs --x")?)?;
            let y = parse_element(&g, cli.y.as_deref().context("cprod needs --y")?)?;
            let wg = build_wgraph(&KlStore::build(&g)?);
            let col = column(&wg, y, cli.strategy.into())?;
            writeln!(out, "{}", format_ccombo(&g, &col.product(x)))?;
            Ok(true)
        }
        Command::Cycltable => {
            let y = parse_element(&g, cli.y.as_deref().context("cycltable needs --y")?)?;
            let wg = build_wgraph(&KlStore::build(&g)?);
            let col = column(&wg, y, cli.strategy.into())?;
            let yw = g.word_string(y);
            for x in g.elements() {
                writeln!(out, "c_{} c_{yw} = {}", g.word_string(x), format_ccombo(&g, &col.product(x)))?;
            }
            Ok(true)
        }
        Command::Positivity => cmd_positivity(cli, &g, out),
        Command::Check => cmd_check(cli, &g, out),
        Command::Triangle => unreachable!(),
    }
}

fn cmd_klplist(cli: &Cli, g: &GroupTable, out: &mut dyn Write) -> Result<bool> {
    let store = KlStore::build(g)?;
    let polys = store.distinct_polynomials();
    fs::create_dir_all(&cli.outdir).with_context(|| format!("creating {}", cli.outdir.display()))?;
    let path = cli.outdir.join(KLPLIST_FILE);
    let mut text = String::new();
    for p in &polys {
        text.push_str(&p.to_string());
        text.push('\n');
    }
    fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?;
    writeln!(out, "{}: {} distinct polynomials written to {}", g.name(), polys.len(), path.display())?;
    finish(cli, out, &[check_p1(&store)])
}

fn cmd_positivity(cli: &Cli, g: &GroupTable, out: &mut dyn Write) -> Result<bool> {
    let range = parse_range(cli.range.as_deref(), g.size())?;
    let wg = {
        let store = KlStore::build(g)?;
        build_wgraph(&store)
    };
    let cfg = PositivityConfig {
        range,
        strategy: cli.strategy.into(),
        resume: cli.resume,
        outdir: cli.outdir.clone(),
        store_budget: cli.store_budget_bytes()?,
        max_columns: cli.max_columns,
        batch: 2 * cli.threads,
    };
    let o = run_positivity(&wg, &cfg)?;
    match o.last {
        Some((y, n)) => writeln!(out, "last line: {y}: maxcoeff = {n}")?,
        None => writeln!(out, "no columns logged")?,
    }
    if !o.complete {
        writeln!(out, "stopped early; rerun with --resume to continue")?;
    }
    if !o.error_log_empty {
        writeln!(out, "error_log is not empty")?;
    }
    let pass = finish(cli, out, &[o.p3.clone(), o.unimodal.clone()])?;
    Ok(pass && o.pass())
}

fn cmd_check(cli: &Cli, g: &GroupTable, out: &mut dyn Write) -> Result<bool> {
    let range = parse_range(cli.range.as_deref(), g.size())?;
    let ys: Vec<ElementId> = range.map(ElementId).collect();
    let store = KlStore::build(g)?;
    let wg = build_wgraph(&store);
    let mut reports = vec![check_p1(&store), check_p2(&store)];
    let mut p3 = CheckReport::new("P3", g.name());
    let mut unimodal = CheckReport::new("unimodal", g.name());
    coxkl::checks::sweep_columns(&wg, &ys, cli.strategy.into(), 2 * cli.threads, false, |s| -> Result<()> {
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
        Ok(())
    })?;
    reports.push(p3);
    reports.push(unimodal);
    reports.push(check_w0_identity(&store, &wg)?);
    reports.push(check_strategy_invariance(&wg, &ys)?);
    if g.size() <= H_SYMMETRY_LIMIT {
        reports.push(check_h_symmetry(&wg)?);
    }
    if let Some(m) = dihedral_order(g) {
        reports.push(crosscheck_dihedral(m)?);
    }
    finish(cli, out, &reports)
}

/// `m` when `g` has rank 2 with label `m`.
fn dihedral_order(g: &GroupTable) -> Option<u32> {
    let m = g.matrix();
    (m.rank() == 2 && (2..=30).contains(&m.get(0, 1))).then(|| m.get(0, 1))
}

fn cmd_triangle(cli: &Cli, out: &mut dyn Write) -> Result<bool> {
    let rows = cli.rows.unwrap_or(match cli.m {
        Some(m) => m,
        None => cli.k + 2,
    });
    let t = triangle_table(cli.m, cli.k, cli.side.into(), rows)?;
    let width = t.first().map_or(0, Vec::len);
    let cell = t
        .iter()
        .flatten()
        .map(|c| c.to_string().len())
        .chain([width.to_string().len()])
        .max()
        .unwrap_or(1)
        + 1;
    let label = format!("i={rows}").len() + 1;
    let mut header = " ".repeat(label);
    for j in 1..width {
        header.push_str(&format!("{j:>cell$}"));
    }
    writeln!(out, "{}", header.trim_end())?;
    for (i, r) in t.iter().enumerate() {
        let mut line = format!("{:<label$}", format!("i={}", i + 1));
        for &c in &r[1..] {
            let s = if c == 0 { ".".to_string() } else { c.to_string() };
            line.push_str(&format!("{s:>cell$}"));
        }
        writeln!(out, "{}", line.trim_end())?;
    }
    Ok(true)
}
