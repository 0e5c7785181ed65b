//! Command-line front end: every claim the library verifies, bound to a
//! subcommand with bit-exact file I/O and a run manifest next to each
//! output.

mod manifest;
mod svg;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};
use manifest::ManifestBuilder;
use nervelab::bounds;
use nervelab::constructions::{
    self, compute_nerve, verify_counterexample, verify_k_covered_region_pair_uncoverable,
    ConvexFamily,
};
use nervelab::enumeration;
use nervelab::geom::{hole_triangle, lid_suite, rat_to_strings};
use nervelab::redblue::{CertificateTag, RedBlueClique};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "nervelab",
    version,
    about = "Exact verification of intersection patterns of planar convex sets"
)]
struct Cli {
    /// Seed for the randomized property suites.
    #[arg(long, global = true, default_value_t = 0xC0FFEE)]
    seed: u64,
    /// Worker-count hint; the verifiers are deterministic either way.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the isomorphism classes with transversal number >= 3 and
    /// no blue 3-cycle.
    Enumerate {
        #[arg(long, default_value_t = 7)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a named verification suite.
    Verify {
        #[command(subcommand)]
        suite: VerifySuite,
    },
    /// Generate a convex family and write it as JSON.
    Construct {
        kind: ConstructKind,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        omega: Option<usize>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Compute the red/blue clique of a family.
    Nerve {
        #[arg(long)]
        family: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Also print the f-vector of the red clique complex.
        #[arg(long)]
        fvector: bool,
    },
    /// Run the certificate battery on a red/blue clique document.
    Certify {
        #[arg(long)]
        clique: PathBuf,
        #[arg(long)]
        clique_size: usize,
    },
    /// Compute the forced triangle of a three-body hole.
    HoleTriangle {
        #[arg(long)]
        family: PathBuf,
    },
    /// Bound-chain arithmetic and table cross-checks.
    Bounds {
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        tables: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        /// CSV export of the pinned tables (with --tables).
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Render a family as a deterministic SVG figure.
    Render {
        #[arg(long)]
        family: PathBuf,
        #[arg(long)]
        svg: PathBuf,
    },
}

#[derive(Subcommand)]
enum VerifySuite {
    /// The 7-vertex pipeline: 13 classes, each resolved as expected.
    TheoremK4,
    /// The nine-sets counterexample, including the region-level pair check.
    NineSets,
    /// The 2k construction at a given k.
    TwoK {
        #[arg(long)]
        k: usize,
    },
    /// The seeded random hole/lid property suite.
    LidLemma {
        #[arg(long, default_value_t = 200)]
        instances: usize,
        #[arg(long, default_value_t = 20)]
        lids: usize,
    },
}

#[derive(Copy, Clone, ValueEnum)]
enum ConstructKind {
    Polygon,
    Extended,
    Triangle,
    TwoK,
    NineSets,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

/// Ok(true) on success, Ok(false) on a verification failure, Err on
/// usage/IO problems.
fn run(cli: Cli) -> anyhow::Result<bool> {
    let seed = cli.seed;
    match cli.command {
        Command::Enumerate { n, out } => {
            let mut m = ManifestBuilder::new("enumerate", format!("n={n}"));
            let report = enumeration::enumerate_tau3_c3free(n)?;
            let pass = n != 7 || (report.class_count() == 13 && report.with_k4 == 7);
            let doc = serde_json::json!({
                "n": report.n,
                "class_count": report.class_count(),
                "with_k4": report.with_k4,
                "without_k4": report.without_k4,
                "classes": report.classes.iter().map(|h| serde_json::json!({
                    "blue": h.edge_list().iter().map(|t| t.vertices()).collect::<Vec<_>>(),
                    "canonical": h.canonical_form().expect("n <= 8").to_hex(),
                })).collect::<Vec<_>>(),
                "stats": report.stats,
            });
            let text = serde_json::to_string_pretty(&doc)?;
            m.summary(format!(
                "{} classes ({} with K4, {} without), {} nodes",
                report.class_count(),
                report.with_k4,
                report.without_k4,
                report.stats.nodes_visited
            ));
            println!("{text}");
            if let Some(path) = &out {
                std::fs::write(path, &text).with_context(|| path.display().to_string())?;
                m.output(path)?;
            }
            m.finish(out.as_deref(), pass)?;
            Ok(pass)
        }
        Command::Verify { suite } => run_verify(suite, seed),
        Command::Construct {
            kind,
            k,
            omega,
            out,
        } => {
            let mut m = ManifestBuilder::new("construct", construct_params(kind, k, omega));
            let family = build_family(kind, k, omega)?;
            std::fs::write(&out, family.to_json()).with_context(|| out.display().to_string())?;
            m.output(&out)?;
            m.summary(format!("{}: {} bodies", family.name, family.len()));
            m.finish(Some(&out), true)?;
            Ok(true)
        }
        Command::Nerve {
            family,
            out,
            fvector,
        } => {
            let mut m = ManifestBuilder::new("nerve", family.display().to_string());
            m.input(&family)?;
            let fam = load_family(&family)?;
            if fam.len() < 3 {
                return Err(anyhow!("nerve needs at least 3 bodies, got {}", fam.len()));
            }
            let nerve = compute_nerve(&fam);
            std::fs::write(&out, nerve.to_json()).with_context(|| out.display().to_string())?;
            m.output(&out)?;
            let mut lines = vec![format!(
                "n={}, blue triples={}",
                nerve.n(),
                nerve.blue().edge_count()
            )];
            if fvector {
                lines.push(format!("f-vector {}", nerve.f_vector()));
            }
            for l in &lines {
                println!("{l}");
            }
            m.summaries(lines);
            m.finish(Some(&out), true)?;
            Ok(true)
        }
        Command::Certify { clique, clique_size } => {
            let mut m = ManifestBuilder::new("certify", format!("clique-size={clique_size}"));
            m.input(&clique)?;
            if clique_size < 3 {
                return Err(anyhow!("--clique-size must be at least 3"));
            }
            let text =
                std::fs::read_to_string(&clique).with_context(|| clique.display().to_string())?;
            let rb = RedBlueClique::from_json(&text)?;
            let cert = rb.certificate_battery(clique_size);
            let rechecked = cert.recheck(&rb, clique_size);
            let pass = cert.tag() != CertificateTag::Unresolved && rechecked;
            println!("{}", serde_json::to_string_pretty(&cert)?);
            m.summary(format!("certificate {} (recheck {})", cert.tag(), rechecked));
            m.finish(None, pass)?;
            Ok(pass)
        }
        Command::HoleTriangle { family } => {
            let mut m = ManifestBuilder::new("hole-triangle", family.display().to_string());
            m.input(&family)?;
            let fam = load_family(&family)?;
            if fam.len() != 3 {
                return Err(anyhow!(
                    "hole-triangle needs exactly 3 bodies, got {}",
                    fam.len()
                ));
            }
            let bodies = fam.bodies();
            match hole_triangle(&bodies[0], &bodies[1], &bodies[2]) {
                Ok(ht) => {
                    let fmt = |p: &nervelab::geom::Point| {
                        let (xn, xd) = rat_to_strings(&p.x);
                        let (yn, yd) = rat_to_strings(&p.y);
                        format!("({xn}/{xd}, {yn}/{yd})")
                    };
                    let lines = vec![
                        format!("p* = {}", fmt(&ht.p_star)),
                        format!("q* = {}", fmt(&ht.q_star)),
                        format!("r* = {}", fmt(&ht.r_star)),
                        format!("degenerate = {}", ht.degenerate),
                    ];
                    for l in &lines {
                        println!("{l}");
                    }
                    m.summaries(lines);
                    m.finish(None, true)?;
                    Ok(true)
                }
                Err(e) => {
                    println!("{e}");
                    m.summary(e.to_string());
                    m.finish(None, false)?;
                    Ok(false)
                }
            }
        }
        Command::Bounds { k, tables, out, csv } => run_bounds(k, tables, out, csv),
        Command::Render { family, svg } => {
            let mut m = ManifestBuilder::new("render", family.display().to_string());
            m.input(&family)?;
            let fam = load_family(&family)?;
            let doc = svg::render_family(&fam);
            std::fs::write(&svg, &doc).with_context(|| svg.display().to_string())?;
            m.output(&svg)?;
            m.summary(format!(
                "{} bodies, {} witnesses",
                fam.len(),
                fam.witnesses.len()
            ));
            m.finish(Some(&svg), true)?;
            Ok(true)
        }
    }
}

fn run_verify(suite: VerifySuite, seed: u64) -> anyhow::Result<bool> {
    match suite {
        VerifySuite::TheoremK4 => {
            let mut m = ManifestBuilder::new("verify theorem-k4", String::new());
            let report = enumeration::verify_theorem_k4()?;
            let mut lines = vec![format!(
                "{} classes ({} with K4 / {} without)",
                report.class_count, report.with_k4, report.without_k4
            )];
            for o in &report.outcomes {
                lines.push(format!(
                    "  {:4} expected {} got {} recheck {} -> {}",
                    o.name,
                    o.expected,
                    o.got,
                    o.certificate_rechecked,
                    if o.pass { "ok" } else { "FAIL" }
                ));
            }
            for l in &lines {
                println!("{l}");
            }
            m.summaries(lines);
            m.finish(None, report.pass)?;
            Ok(report.pass)
        }
        VerifySuite::NineSets => {
            let mut m = ManifestBuilder::new("verify nine-sets", String::new());
            let fam = constructions::nine_sets()?;
            let report = verify_counterexample(&fam, 5);
            let nerve = compute_nerve(&fam);
            let f = nerve.f_vector();
            let f_ok = f.eq_mod_trailing_zeros(&[9, 36, 61, 45, 12, 0]);
            let region = verify_k_covered_region_pair_uncoverable(&fam, 5)?;
            let transversal_absent = nerve.find_pair_transversal(5).is_none();
            let pass = report.all_pass() && f_ok && region && transversal_absent;
            let lines = vec![
                format!("max cover <= 5: {}", report.max_cover_ok),
                format!("witnesses 5-covered: {}", report.witnesses_covered),
                format!("every pair misses a witness: {}", report.pair_coverage_fails),
                format!("every pair misses a 5-covered cell: {region}"),
                format!("no pair transversal of the red 5-cliques: {transversal_absent}"),
                format!("f-vector {:?}", f.padded(6)),
            ];
            for l in &lines {
                println!("{l}");
            }
            m.summaries(lines);
            m.finish(None, pass)?;
            Ok(pass)
        }
        VerifySuite::TwoK { k } => {
            let mut m = ManifestBuilder::new("verify two-k", format!("k={k}"));
            let fam = constructions::two_k(k)?;
            let report = verify_counterexample(&fam, k);
            let region = verify_k_covered_region_pair_uncoverable(&fam, k)?;
            let pass = report.all_pass() && region;
            let lines = vec![
                format!("{} bodies", fam.len()),
                format!("max cover <= {k}: {}", report.max_cover_ok),
                format!("witnesses {k}-covered: {}", report.witnesses_covered),
                format!("every pair misses a witness: {}", report.pair_coverage_fails),
                format!("every pair misses a {k}-covered cell: {region}"),
            ];
            for l in &lines {
                println!("{l}");
            }
            m.summaries(lines);
            m.finish(None, pass)?;
            Ok(pass)
        }
        VerifySuite::LidLemma { instances, lids } => {
            let mut m = ManifestBuilder::new(
                "verify lid-lemma",
                format!("instances={instances} lids={lids} seed={seed}"),
            );
            let report = lid_suite(seed, instances, lids);
            let pass = report.failures == 0;
            let lines = vec![format!(
                "{} instances x {} lids: {} failures ({} degenerate proposals rejected)",
                report.instances,
                report.lids_per_instance,
                report.failures,
                report.degenerate_rejections
            )];
            for l in &lines {
                println!("{l}");
            }
            m.summaries(lines);
            m.finish(None, pass)?;
            Ok(pass)
        }
    }
}

fn run_bounds(
    k: Option<u32>,
    tables: bool,
    out: Option<PathBuf>,
    csv: Option<PathBuf>,
) -> anyhow::Result<bool> {
    if !tables && k.is_none() {
        return Err(anyhow!("bounds needs --k K or --tables"));
    }
    let mut m = ManifestBuilder::new(
        "bounds",
        k.map(|k| format!("k={k}"))
            .unwrap_or_else(|| "tables".into()),
    );
    let mut pass = true;
    let mut lines = Vec::new();
    let mut doc = serde_json::Map::new();
    if let Some(k) = k {
        let (lo, hi) = bounds::nstar_bound_chain(k)?;
        lines.push(format!("{lo} <= n*({k},2) <= {hi}"));
        doc.insert("k".into(), k.into());
        doc.insert("lower".into(), lo.into());
        doc.insert("upper".into(), hi.into());
        if let Ok(chain) = bounds::interconnect(k, 2, 3) {
            if let Some(lb) = chain.lower_bound {
                lines.push(format!("vertex-removal chain: n*({k},2;2) >= {lb}"));
            }
            doc.insert("interconnect".into(), serde_json::to_value(&chain)?);
        }
    }
    if tables {
        let report = bounds::cross_check_tables()?;
        for row in &report.rows {
            lines.push(format!(
                "{} -> {}",
                row.description,
                if row.pass { "ok" } else { "FAIL" }
            ));
        }
        pass &= report.pass;
        doc.insert("tables".into(), serde_json::to_value(&report)?);
        if let Some(path) = &csv {
            let mut s = String::from("table,key,value1,value2\n");
            for (omega, n, nstar) in bounds::TABLE1 {
                s.push_str(&format!("1,omega={omega},n={n},n*={nstar}\n"));
            }
            for (kk, omega, nstar) in bounds::TABLE2 {
                s.push_str(&format!("2,k={kk},omega={omega},n*={nstar}\n"));
            }
            std::fs::write(path, s).with_context(|| path.display().to_string())?;
            m.output(path)?;
        }
    }
    for l in &lines {
        println!("{l}");
    }
    if let Some(path) = &out {
        std::fs::write(path, serde_json::to_string_pretty(&doc)?)
            .with_context(|| path.display().to_string())?;
        m.output(path)?;
    }
    m.summaries(lines);
    m.finish(out.as_deref(), pass)?;
    Ok(pass)
}

fn construct_params(kind: ConstructKind, k: Option<usize>, omega: Option<usize>) -> String {
    let name = match kind {
        ConstructKind::Polygon => "polygon",
        ConstructKind::Extended => "extended",
        ConstructKind::Triangle => "triangle",
        ConstructKind::TwoK => "two-k",
        ConstructKind::NineSets => "nine-sets",
    };
    match (k, omega) {
        (Some(k), _) => format!("{name} k={k}"),
        (_, Some(w)) => format!("{name} omega={w}"),
        _ => name.to_string(),
    }
}

fn build_family(
    kind: ConstructKind,
    k: Option<usize>,
    omega: Option<usize>,
) -> anyhow::Result<ConvexFamily> {
    let need_k = || k.ok_or_else(|| anyhow!("this construction needs --k"));
    let fam = match kind {
        ConstructKind::Polygon => constructions::polygon_construction(need_k()?)?,
        ConstructKind::Extended => constructions::extended_polygon(need_k()?)?,
        ConstructKind::Triangle => constructions::triangle_construction(
            omega.ok_or_else(|| anyhow!("the triangle construction needs --omega"))?,
        )?,
        ConstructKind::TwoK => constructions::two_k(need_k()?)?,
        ConstructKind::NineSets => constructions::nine_sets()?,
    };
    Ok(fam)
}

fn load_family(path: &Path) -> anyhow::Result<ConvexFamily> {
    let text = std::fs::read_to_string(path).with_context(|| path.display().to_string())?;
    Ok(ConvexFamily::from_json(&text)?)
}
