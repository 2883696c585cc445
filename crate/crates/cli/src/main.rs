//! Command-line front end: exact counting functions of arrangements,
//! polytopes, graphs, and posets, with their reciprocity identities checked
//! against brute-force enumeration.
//!
//! Exit codes: 0 on success, 1 when a check fails, 2 on input errors.
//! `RECIPROCITY_THREADS` caps internal parallelism (results are identical
//! regardless).

mod report;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use report::{digest_bytes, RunReport};
use serde_json::json;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use reciprocity_core::arrangement::Arrangement;
use reciprocity_core::graph_coloring::{
    acyclic_orientations, chromatic_polynomial, compatible_pairs, graphical_arrangement,
    inside_out_counts, inside_out_interior_count, proper_colorings_brute, Graph,
    InsideOutPolytope,
};
use reciprocity_core::lattice_geometry::{
    ehrhart, ehrhart_series, normalized_volume, regular_triangulation,
    triangulation_mobius_check, Polytope,
};
use reciprocity_core::poset::Poset;
use reciprocity_core::ppartition::{
    extension_stats, ppartition_gf, stanley_reciprocity_check, PPartitionSpec,
};
use reciprocity_core::suite::{run_suite, SuiteName, SuiteSize};

#[derive(Parser)]
#[command(
    name = "reciprocity",
    version,
    about = "Exact counting functions of combinatorial geometry and their reciprocity checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit the run report as JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Characteristic polynomial and region counts of a rational hyperplane
    /// arrangement (file: first line d, then one `c_1 .. c_d b` per line).
    Arrangement { file: PathBuf },
    /// Ehrhart quasipolynomial of a rational polytope (file: first line the
    /// ambient dimension, then one vertex per line).
    Ehrhart {
        file: PathBuf,
        /// Also emit the Ehrhart series (lattice polytopes only).
        #[arg(long)]
        series: bool,
        /// Check reciprocity against interior counts up to this horizon.
        #[arg(long, value_name = "HORIZON")]
        reciprocity: Option<u32>,
        /// Also emit a regular triangulation summary.
        #[arg(long)]
        triangulate: bool,
        /// Seed for the triangulation lifting.
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Chromatic polynomial and acyclic orientations of a graph (file:
    /// first line n, then one edge `i j` per line).
    Chromatic {
        file: PathBuf,
        /// Count compatible (coloring, acyclic orientation) pairs at this t.
        #[arg(long, value_name = "T")]
        pairs: Option<u32>,
        /// Cross-check colorings against the inside-out cube construction.
        #[arg(long)]
        iop: bool,
        /// Emit DOT sources for the acyclic orientations.
        #[arg(long)]
        dot: bool,
    },
    /// P-partition generating functions of a poset (file: first line n,
    /// then one relation `j k` per line, j below k).
    Ppartition {
        file: PathBuf,
        /// Lead with the strict series in the text output.
        #[arg(long)]
        strict: bool,
        /// Check the weak/strict reciprocity identity.
        #[arg(long)]
        reciprocity: bool,
    },
    /// Run a seeded verification suite: zaslavsky, ehrhart, chromatic,
    /// ppartition, euler, or all.
    Verify {
        suite: String,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// tiny, small, or medium.
        #[arg(long, default_value = "small")]
        size: String,
    },
}

/// Input-side failure: bad file, bad syntax, unsupported size. Exit code 2.
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command_echo = std::env::args().skip(1).collect::<Vec<_>>().join(" ");
    let result = match &cli.command {
        Command::Arrangement { file } => cmd_arrangement(&command_echo, file),
        Command::Ehrhart {
            file,
            series,
            reciprocity,
            triangulate,
            seed,
        } => cmd_ehrhart(&command_echo, file, *series, *reciprocity, *triangulate, *seed),
        Command::Chromatic {
            file,
            pairs,
            iop,
            dot,
        } => cmd_chromatic(&command_echo, file, *pairs, *iop, *dot),
        Command::Ppartition {
            file,
            strict,
            reciprocity,
        } => cmd_ppartition(&command_echo, file, *strict, *reciprocity),
        Command::Verify { suite, seed, size } => cmd_verify(&command_echo, suite, *seed, size),
    };
    match result {
        Ok(report) => {
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report).expect("report serializes")
                );
            } else {
                print!("{}", report.render_text());
            }
            if report.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn read_input(file: &Path) -> Result<(String, String), InputError> {
    let bytes = std::fs::read(file)
        .map_err(|e| InputError(format!("cannot read {}: {e}", file.display())))?;
    let digest = digest_bytes(&bytes);
    let text = String::from_utf8(bytes)
        .map_err(|_| InputError(format!("{} is not valid UTF-8", file.display())))?;
    Ok((text, digest))
}

fn big_str(v: &BigInt) -> serde_json::Value {
    json!(v.to_string())
}

fn cmd_arrangement(echo: &str, file: &Path) -> Result<RunReport, InputError> {
    let (text, digest) = read_input(file)?;
    let arrangement = Arrangement::parse(&text)?;
    let mut report = RunReport::new(echo.to_string(), digest);
    let h = arrangement.characteristic_polynomial();
    report.set("dimension", json!(arrangement.dim()));
    report.set("hyperplanes", json!(arrangement.len()));
    report.set("characteristic_polynomial", h.to_json());
    report.set("characteristic_polynomial_text", json!(h.display_with("t")));
    let mobius_route = arrangement.regions_zaslavsky()?;
    let recursion_route = arrangement.regions_deletion_restriction();
    report.set("regions_mobius", big_str(&mobius_route));
    report.set("regions_deletion_restriction", big_str(&recursion_route));
    let agree = mobius_route == recursion_route;
    report.check(
        "region-counts-agree",
        agree,
        Some(format!(
            "mobius route {mobius_route}, deletion-restriction {recursion_route}"
        )),
    );
    Ok(report)
}

fn cmd_ehrhart(
    echo: &str,
    file: &Path,
    series: bool,
    reciprocity: Option<u32>,
    triangulate: bool,
    seed: u64,
) -> Result<RunReport, InputError> {
    let (text, digest) = read_input(file)?;
    let polytope = Polytope::parse(&text)?;
    let mut report = RunReport::new(echo.to_string(), digest);
    report.set("ambient", json!(polytope.ambient()));
    report.set("dim", json!(polytope.dim()));
    report.set("vertices", json!(polytope.vertices().len()));
    let qp = ehrhart(&polytope);
    report.set("period", json!(qp.period()));
    report.set("ehrhart", qp.to_json());
    report.set("ehrhart_text", json!(qp.to_string()));

    if series {
        let gf = ehrhart_series(&polytope)?;
        report.set("series", gf.to_json());
        report.set("series_text", json!(gf.to_string()));
        let prefix = gf.series_prefix(8);
        let prefix_strings: Vec<String> = prefix.iter().map(|c| c.to_string()).collect();
        report.set("series_prefix", json!(prefix_strings));
        let mut failure = None;
        for (t, coeff) in prefix.iter().enumerate().skip(1) {
            let count = polytope.lattice_count(&BigInt::from(t), false);
            if coeff != &count {
                failure = Some(format!("t={t}: series {coeff}, count {count}"));
                break;
            }
        }
        report.check("series-prefix-vs-counts", failure.is_none(), failure);
    }

    if let Some(horizon) = reciprocity {
        let sign = if polytope.dim() % 2 == 0 { 1 } else { -1 };
        let mut failure = None;
        for t in 1..=horizon.max(1) {
            let lhs = qp.eval_integer(&BigInt::from(-(t as i64)));
            let interior = polytope.lattice_count(&BigInt::from(t), true);
            if lhs != &interior * sign {
                failure = Some(format!("t={t}: ehr(-t)={lhs}, interior count {interior}"));
                break;
            }
        }
        report.set("reciprocity_horizon", json!(horizon));
        report.check("ehrhart-reciprocity", failure.is_none(), failure);
    }

    if triangulate {
        let tri = regular_triangulation(&polytope, seed)?;
        report.set("triangulation.simplices", json!(tri.simplices().len()));
        let total = tri.total_normalized_volume();
        report.set("triangulation.normalized_volume", big_str(&total));
        let expected = normalized_volume(&polytope)?;
        report.check(
            "triangulation-volume",
            total == expected,
            Some(format!("simplices total {total}, polytope {expected}")),
        );
        report.check(
            "triangulation-mobius",
            triangulation_mobius_check(&tri),
            Some("closed form violated".to_string()),
        );
    }
    Ok(report)
}

fn cmd_chromatic(
    echo: &str,
    file: &Path,
    pairs: Option<u32>,
    iop: bool,
    dot: bool,
) -> Result<RunReport, InputError> {
    let (text, digest) = read_input(file)?;
    let graph = Graph::parse(&text)?;
    let mut report = RunReport::new(echo.to_string(), digest);
    report.set("nodes", json!(graph.node_count()));
    report.set("edges", json!(graph.edges().len()));
    if graph.has_loop() {
        report.set("loop", json!(true));
    }
    let chromatic = chromatic_polynomial(&graph);
    report.set("chromatic_polynomial", chromatic.to_json());
    report.set("chromatic_polynomial_text", json!(chromatic.display_with("t")));
    if graph.edges().len() >= 26 {
        return Err(InputError(
            "orientation enumeration supports at most 25 edges".into(),
        ));
    }
    let orientations = acyclic_orientations(&graph);
    report.set("acyclic_orientations", json!(orientations.len()));
    if !graph.has_loop() {
        let sign = if graph.node_count() % 2 == 0 { 1 } else { -1 };
        let expected = chromatic.eval_integer(&BigInt::from(-1)) * sign;
        report.check(
            "acyclic-orientations-vs-reciprocal-eval",
            BigInt::from(orientations.len()) == expected,
            Some(format!(
                "{} orientations, (-1)^n c(-1) = {expected}",
                orientations.len()
            )),
        );
    }

    if let Some(t) = pairs {
        if t == 0 {
            return Err(InputError("--pairs needs t >= 1".into()));
        }
        let count = compatible_pairs(&graph, t);
        report.set("pairs.t", json!(t));
        report.set("pairs.count", big_str(&count));
        let sign = if graph.node_count() % 2 == 0 { 1 } else { -1 };
        let expected = chromatic.eval_integer(&BigInt::from(-(t as i64))) * sign;
        report.check(
            "compatible-pairs-vs-reciprocal-eval",
            count == expected,
            Some(format!("pairs {count}, (-1)^n c(-t) = {expected}")),
        );
    }

    if iop {
        if graph.has_loop() {
            return Err(InputError("--iop needs a loopless graph".into()));
        }
        if graph.node_count() > 5 {
            return Err(InputError(
                "--iop cross-check supports at most 5 nodes".into(),
            ));
        }
        let construction = InsideOutPolytope::cube_for_graph(&graph);
        let mut failure = None;
        for t in 1..=3u32 {
            let brute = proper_colorings_brute(&graph, t);
            let geometric = inside_out_interior_count(&construction, t + 1);
            if brute != geometric {
                failure = Some(format!("t={t}: brute {brute}, cube interior {geometric}"));
                break;
            }
        }
        report.check("colorings-vs-cube-interior", failure.is_none(), failure);
        let (i1, o1) = inside_out_counts(&construction, 1)?;
        report.set("iop.i_at_1", big_str(&i1));
        report.set("iop.o_at_1", big_str(&o1));
        let arrangement = graphical_arrangement(&graph);
        let regions = arrangement.regions_deletion_restriction();
        report.check(
            "regions-vs-acyclic-orientations",
            regions == BigInt::from(orientations.len()),
            Some(format!(
                "{regions} regions, {} orientations",
                orientations.len()
            )),
        );
    }

    if dot {
        let sources: Vec<String> = orientations
            .iter()
            .map(|o| o.to_dot(graph.node_count()))
            .collect();
        report.set("dot", json!(sources));
    }
    Ok(report)
}

fn cmd_ppartition(
    echo: &str,
    file: &Path,
    strict: bool,
    reciprocity: bool,
) -> Result<RunReport, InputError> {
    let (text, digest) = read_input(file)?;
    let poset = Poset::parse(&text)?;
    if poset.len() > 8 {
        return Err(InputError(
            "p-partition command supports at most 8 elements".into(),
        ));
    }
    let mut report = RunReport::new(echo.to_string(), digest);
    report.set("elements", json!(poset.len()));
    let weak_spec = PPartitionSpec::new(poset.clone(), false);
    if let Some(map) = weak_spec.relabeling() {
        let display: Vec<usize> = map.iter().map(|&v| v + 1).collect();
        report.set("relabeled_old_to_new", json!(display));
    }
    let weak = ppartition_gf(&weak_spec);
    let strict_gf = ppartition_gf(&PPartitionSpec::new(poset.clone(), true));
    report.set("weak_gf", weak.to_json());
    report.set("weak_gf_text", json!(weak.to_string()));
    report.set("strict_gf", strict_gf.to_json());
    report.set("strict_gf_text", json!(strict_gf.to_string()));
    report.set("leading_series", json!(if strict { "strict" } else { "weak" }));
    let lead = if strict { &strict_gf } else { &weak };
    let prefix: Vec<String> = lead.series_prefix(8).iter().map(|c| c.to_string()).collect();
    report.set("series_prefix", json!(prefix));

    let stats = extension_stats(weak_spec.poset())?;
    let table: Vec<serde_json::Value> = stats
        .iter()
        .map(|(sigma, st)| {
            json!({
                "sigma": sigma.values(),
                "des": st.des.iter().collect::<Vec<_>>(),
                "maj": st.maj,
                "asc": st.asc.iter().collect::<Vec<_>>(),
                "amaj": st.amaj,
            })
        })
        .collect();
    report.set("linear_extensions", json!(stats.len()));
    report.set("extension_stats", json!(table));

    if reciprocity {
        let ok = stanley_reciprocity_check(weak_spec.poset())?;
        report.check(
            "ppartition-reciprocity",
            ok,
            Some("weak/strict identity violated".to_string()),
        );
    }
    Ok(report)
}

fn cmd_verify(echo: &str, suite: &str, seed: u64, size: &str) -> Result<RunReport, InputError> {
    let name: SuiteName = suite.parse().map_err(InputError)?;
    let size: SuiteSize = size.parse().map_err(InputError)?;
    let digest = digest_bytes(format!("verify:{name}:{seed}:{size}").as_bytes());
    let mut report = RunReport::new(echo.to_string(), digest);
    let results = run_suite(name, seed, size);
    report.set("suite", json!(name.to_string()));
    report.set("seed", json!(seed));
    report.set("size", json!(size.to_string()));
    report.set("total_checks", json!(results.len()));
    report.set(
        "failed_checks",
        json!(results.iter().filter(|c| !c.passed).count()),
    );
    for result in results {
        report.check(&result.name, result.passed, result.witness);
    }
    Ok(report)
}
