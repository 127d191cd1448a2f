use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use rayon::prelude::*;

use inertia_core::bounds::{bound_report, certify_inertia_with, inertia_upper_bound, CertifyOptions, ReportOptions, BETA};
use inertia_core::experiment::{gap_row, ExperimentRow, GapOptions};
use inertia_core::graph::{self, girth, is_c4_free, Graph};
use inertia_core::io::{parse_edge_list, parse_weighting, write_edge_list, write_spectrum_csv};
use inertia_core::scaling::DEFAULT_SINKHORN_MAX_ITER;
use inertia_core::spectral::random_weighting;
use inertia_core::{HermitianWeighting, WeightLaw};

use crate::{Cli, Command, GlobalOpts};

pub fn run(cli: &Cli) -> Result<()> {
    let g = &cli.global;
    match &cli.command {
        Command::Gen { family, params, out } => gen(family, params, g.seed, out.as_deref()),
        Command::Bounds { graph, weights } => bounds(g, graph, weights.as_deref()),
        Command::Certify { graph, weights, random, law, out } => {
            certify(g, graph, weights.as_deref(), *random, *law, out.as_deref())
        }
        Command::ExperimentGap { q, law, out, gnuplot } => experiment_gap(g, q, *law, out.as_deref(), gnuplot.as_deref()),
        Command::Spectrum { graph, weights, out } => spectrum(graph.as_deref(), weights.as_deref(), out.as_deref()),
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            Ok(stdout.flush()?)
        }
    }
}

fn read_graph(path: &Path) -> Result<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_edge_list(&text).with_context(|| format!("parsing {}", path.display()))
}

fn read_weighting(path: &Path, host: Option<&Graph>) -> Result<HermitianWeighting> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_weighting(&text, host).with_context(|| format!("parsing {}", path.display()))
}

fn certify_options(g: &GlobalOpts) -> CertifyOptions {
    CertifyOptions { sinkhorn_tol: g.tol_scaling, sinkhorn_max_iter: DEFAULT_SINKHORN_MAX_ITER, ..CertifyOptions::default() }
}

fn param<T: std::str::FromStr>(family: &str, params: &[String], k: usize, name: &str) -> Result<T> {
    let raw = params.get(k).with_context(|| format!("{family} needs parameter {name}"))?;
    raw.parse().map_err(|_| anyhow::anyhow!("{family}: invalid {name} {raw:?}"))
}

fn generate(family: &str, params: &[String], seed: u64) -> Result<Graph> {
    let arity = match family {
        "petersen" => 0,
        "bipartite" | "gnp" => 2,
        _ => 1,
    };
    if params.len() != arity {
        bail!("{family} takes {arity} parameter(s), got {}", params.len());
    }
    let p = |k, name| param::<usize>(family, params, k, name);
    let g = match family {
        "paley" => graph::paley(p(0, "q")? as u64)?,
        "polarity" => graph::polarity(p(0, "q")? as u64)?,
        "girth5" => graph::extract_girth5(&graph::polarity(p(0, "q")? as u64)?)?.graph,
        "gnp" => graph::gnp(p(0, "n")?, param::<f64>(family, params, 1, "p")?, seed)?,
        "cycle" => graph::cycle(p(0, "n")?)?,
        "complete" => graph::complete(p(0, "n")?)?,
        "bipartite" => graph::complete_bipartite(p(0, "a")?, p(1, "b")?)?,
        "star" => graph::star(p(0, "k")?)?,
        "petersen" => graph::petersen(),
        "tree" => graph::random_tree(p(0, "n")?, seed)?,
        "remark" => graph::remark_graph(p(0, "d")?)?,
        other => bail!("unknown family {other:?}"),
    };
    Ok(g)
}

fn gen(family: &str, params: &[String], seed: u64, out: Option<&Path>) -> Result<()> {
    let g = generate(family, params, seed)?;
    let girth = girth(&g).map_or_else(|| "inf".to_string(), |x| x.to_string());
    eprintln!("n {} m {} girth {} c4_free {}", g.n(), g.edge_count(), girth, is_c4_free(&g));
    emit(out, &write_edge_list(&g))
}

fn bounds(opts: &GlobalOpts, graph: &Path, weights: Option<&Path>) -> Result<()> {
    let g = read_graph(graph)?;
    let w = weights.map(|p| read_weighting(p, Some(&g))).transpose()?;
    let report = bound_report(
        &g,
        w.as_ref(),
        &ReportOptions {
            exact_limit: opts.exact_limit,
            force_ratio: opts.force_ratio,
            tau: opts.tau,
            certify: certify_options(opts),
        },
    )?;
    let show = |x: Option<usize>| x.map_or_else(|| "-".to_string(), |v| v.to_string());
    eprintln!("n = {}, m = {}", report.n, report.m);
    eprintln!("alpha (exact)        {}", show(report.alpha_exact));
    match report.ratio {
        Some(r) if r.heuristic => eprintln!("ratio bound          {:.9} (heuristic: unequal row sums)", r.value),
        Some(r) => eprintln!("ratio bound          {:.9}", r.value),
        None => eprintln!("ratio bound          - (needs equal row sums; see --force-ratio)"),
    }
    eprintln!("inertia, unweighted  {}", report.inertia_unweighted);
    eprintln!("inertia, weighted    {}", show(report.inertia_weighted));
    eprintln!("certificate          {}", show(report.certificate.as_ref().map(|c| c.bound)));
    eprintln!("clique cover         {}", report.clique_cover_bound);
    emit(None, &format!("{}\n{}\n", inertia_core::BoundReport::CSV_HEADER, report.csv_row()))?;
    let violations = report.violations();
    if !violations.is_empty() {
        bail!("inconsistent bounds: {}", violations.join("; "));
    }
    Ok(())
}

fn certify(
    opts: &GlobalOpts,
    graph: &Path,
    weights: Option<&Path>,
    random: Option<u64>,
    law: WeightLaw,
    out: Option<&Path>,
) -> Result<()> {
    let g = read_graph(graph)?;
    let w = match (weights, random) {
        (Some(p), _) => read_weighting(p, Some(&g))?,
        (None, Some(seed)) => random_weighting(&g, seed, law),
        (None, None) => HermitianWeighting::unweighted(g.clone()),
    };
    let cert = certify_inertia_with(&w, &certify_options(opts)).context("certificate refused")?;
    let actual = inertia_upper_bound(&w, opts.tau)?;
    let n = g.n();
    emit(out, &(cert.to_json() + "\n"))?;
    eprintln!("certificate bound {} n>=0 {actual}", cert.bound);
    eprintln!(
        "floors: ceil(beta n) - 1 = {}, ceil(n/4) - 1 = {} (girth >= 5: {})",
        ((BETA * n as f64).ceil() as usize).saturating_sub(1),
        n.div_ceil(4).saturating_sub(1),
        cert.host_girth_at_least_5
    );
    if cert.bound > actual {
        bail!("certificate bound {} exceeds n>=0 = {actual}", cert.bound);
    }
    Ok(())
}

const GNUPLOT: &str = r#"set datafile separator ","
set key top left
set xlabel "n"
set ylabel "bound"
set logscale xy
plot DATA using 3:7 skip 1 with linespoints title "ratio bound", \
     DATA using 3:9 skip 1 with lines title "4 n^{3/4}", \
     DATA using 3:11 skip 1 with linespoints title "inertia (searched)", \
     DATA using 3:12 skip 1 with linespoints title "certificate", \
     DATA using 3:15 skip 1 with lines title "n/4"
"#;

fn experiment_gap(
    opts: &GlobalOpts,
    qs: &[u64],
    law: WeightLaw,
    out: Option<&Path>,
    gnuplot: Option<&Path>,
) -> Result<()> {
    let gap = GapOptions {
        seed: opts.seed,
        restarts: opts.restarts,
        steps: opts.steps,
        exact_limit: opts.exact_limit,
        law,
        tau: opts.tau,
        certify: certify_options(opts),
    };
    let rows: Vec<ExperimentRow> = qs
        .par_iter()
        .map(|&q| gap_row(q, &gap).with_context(|| format!("q = {q}")))
        .collect::<Result<_>>()?;
    let mut csv = format!("{}\n", ExperimentRow::CSV_HEADER);
    for row in &rows {
        csv.push_str(&row.csv_row());
        csv.push('\n');
    }
    emit(out, &csv)?;
    if let Some(script) = gnuplot {
        let data = out.map_or_else(|| PathBuf::from("gap.csv"), Path::to_path_buf);
        let text = format!("DATA = {:?}\n{GNUPLOT}", data.display().to_string());
        fs::write(script, text).with_context(|| format!("writing {}", script.display()))?;
    }
    let violations: Vec<String> = rows.iter().flat_map(ExperimentRow::violations).collect();
    if !violations.is_empty() {
        bail!("{} violation(s): {}", violations.len(), violations.join("; "));
    }
    Ok(())
}

fn spectrum(graph: Option<&Path>, weights: Option<&Path>, out: Option<&Path>) -> Result<()> {
    let host = graph.map(read_graph).transpose()?;
    let w = match (weights, host) {
        (Some(p), host) => read_weighting(p, host.as_ref())?,
        (None, Some(g)) => HermitianWeighting::unweighted(g),
        (None, None) => bail!("spectrum needs a graph or --weights"),
    };
    emit(out, &write_spectrum_csv(&w.spectrum()?))
}
