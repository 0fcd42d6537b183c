use std::path::Path;

use serde::Serialize;

use misbound::bounds::{
    corollary1, curve_export, eppstein, moon_moser, nielsen, solve_eps_delta, theorem1_exponent,
    ExactBound,
};
use misbound::corpus::random_k4_free_subcubic;
use misbound::extremal::store::Store;
use misbound::extremal::{
    generate_all, mibs_scan_graphs, tightness_scan_graphs, verify_degree2_constants,
    verify_theorem2, verify_theorem2_on, BoundSelector, Filter, MibsScan, Theorem2Report,
    TightnessRow,
};
use misbound::io::to_graph6;
use misbound::mibs::enumerate_mibs_canonical;
use misbound::mis::{
    enumerate_mis, enumerate_mis_branching, enumerate_mis_bruteforce, SizeProfile,
};
use misbound::pipeline::{
    self, decompose, label_cells, select, transversal_monte_carlo, InstanceConfig,
    MonteCarloEstimate,
};
use misbound::{Error, Graph};

use crate::input::{parse_set, read_graphs};
use crate::output::{csv, joined, json, json_list, num, Format};
use crate::{CliError, Command};

/// Rendered output and whether every verification in it passed.
type Outcome = Result<(String, bool), CliError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Method {
    Pivot,
    Brute,
    Branching,
}

pub fn run(cmd: &Command, format: Format) -> Outcome {
    match cmd {
        Command::Mis { input, k, method } => cmd_mis(input, *k, *method, format),
        Command::Mibs { input, list } => cmd_mibs(input, *list, format),
        Command::Bounds { n, k, eta } => cmd_bounds(*n, *k, *eta, format),
        Command::Curves { eta, points } => cmd_curves(*eta, *points, format),
        Command::Solve { margin } => cmd_solve(*margin, format),
        Command::Pipeline {
            input,
            random_n,
            seed,
            i0,
            s,
            capture_k,
            monte_carlo,
        } => cmd_pipeline(
            input.as_deref(),
            *random_n,
            *seed,
            i0.as_deref(),
            s.as_deref(),
            *capture_k,
            *monte_carlo,
            format,
        ),
        Command::Search {
            n,
            filter,
            bound,
            eta,
            mibs,
            store,
        } => cmd_search(*n, filter, bound, *eta, *mibs, store.as_deref(), format),
        Command::VerifyTheorem2 { n, all, degree2 } => {
            cmd_verify_theorem2(*n, *all, *degree2, format)
        }
    }
}

#[derive(Serialize)]
struct MisReport {
    graph6: String,
    n: usize,
    mis: u64,
    profile: Vec<u64>,
    moon_moser: ExactBound,
    moon_moser_holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    branching_nodes: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<SizeK>,
}

#[derive(Serialize)]
struct SizeK {
    k: usize,
    mis_at_most: u64,
    mis_exactly: u64,
    eppstein: ExactBound,
    eppstein_holds: bool,
    nielsen: ExactBound,
    nielsen_holds: bool,
}

#[derive(Serialize)]
struct MisRow {
    graph6: String,
    n: usize,
    mis: u64,
    profile: String,
}

fn mis_report(g: &Graph, k: Option<usize>, method: Method) -> Result<MisReport, CliError> {
    let n = g.order();
    let (profile, nodes) = match method {
        Method::Pivot => (enumerate_mis(g).profile, None),
        Method::Brute => (enumerate_mis_bruteforce(g)?.profile, None),
        Method::Branching => {
            let r = enumerate_mis_branching(g, n);
            (r.family.profile, Some(r.nodes))
        }
    };
    let mm = moon_moser(n);
    let size_k = k
        .map(|k| -> Result<SizeK, CliError> {
            if k > n {
                return Err(Error::OutOfRange(format!("k = {k} exceeds n = {n}")).into());
            }
            let (at_most, exactly) = (profile.at_most(k), profile.exactly(k));
            let ep = eppstein(n, k)?;
            let ni = nielsen(n, k)?;
            Ok(SizeK {
                k,
                mis_at_most: at_most,
                mis_exactly: exactly,
                eppstein_holds: ep.admits(at_most),
                eppstein: ep,
                nielsen_holds: exactly == 0 || ni.admits(exactly),
                nielsen: ni,
            })
        })
        .transpose()?;
    Ok(MisReport {
        graph6: to_graph6(g),
        n,
        mis: profile.total(),
        profile: profile_vec(&profile),
        moon_moser_holds: mm.admits(profile.total()),
        moon_moser: mm,
        branching_nodes: nodes,
        k: size_k,
    })
}

fn profile_vec(p: &SizeProfile) -> Vec<u64> {
    p.counts().to_vec()
}

fn cmd_mis(input: &Path, k: Option<usize>, method: Method, format: Format) -> Outcome {
    let reports = read_graphs(input)?
        .iter()
        .map(|g| mis_report(g, k, method))
        .collect::<Result<Vec<_>, _>>()?;
    let ok = reports.iter().all(|r| {
        r.moon_moser_holds
            && r.k
                .as_ref()
                .is_none_or(|s| s.eppstein_holds && s.nielsen_holds)
    });
    let text = match format {
        Format::Json => json_list(&reports),
        Format::Csv => csv(&reports
            .iter()
            .map(|r| MisRow {
                graph6: r.graph6.clone(),
                n: r.n,
                mis: r.mis,
                profile: joined(&r.profile),
            })
            .collect::<Vec<_>>())?,
    };
    Ok((text, ok))
}

#[derive(Serialize)]
struct MibsReport {
    graph6: String,
    n: usize,
    distinct: u64,
    ordered_pairs: u64,
    non_maximal_candidates: u64,
    by_a_size: Vec<u64>,
    unwitnessed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    subgraphs: Option<Vec<Vec<usize>>>,
}

#[derive(Serialize)]
struct MibsRow {
    graph6: String,
    n: usize,
    distinct: u64,
    ordered_pairs: u64,
    non_maximal_candidates: u64,
}

fn cmd_mibs(input: &Path, list: bool, format: Format) -> Outcome {
    let reports: Vec<MibsReport> = read_graphs(input)?
        .iter()
        .map(|g| {
            let c = enumerate_mibs_canonical(g);
            MibsReport {
                graph6: to_graph6(g),
                n: g.order(),
                distinct: c.distinct_count,
                ordered_pairs: c.ordered_pair_count,
                non_maximal_candidates: c.non_maximal_candidates,
                by_a_size: c.by_a_size.clone(),
                unwitnessed: c.unwitnessed,
                subgraphs: list.then(|| c.records.iter().map(|r| r.vertices.to_vec()).collect()),
            }
        })
        .collect();
    let text = match format {
        Format::Json => json_list(&reports),
        Format::Csv => csv(&reports
            .iter()
            .map(|r| MibsRow {
                graph6: r.graph6.clone(),
                n: r.n,
                distinct: r.distinct,
                ordered_pairs: r.ordered_pairs,
                non_maximal_candidates: r.non_maximal_candidates,
            })
            .collect::<Vec<_>>())?,
    };
    Ok((text, true))
}

#[derive(Serialize)]
struct BoundsReport {
    n: usize,
    k: usize,
    eta: f64,
    moon_moser: ExactBound,
    eppstein: ExactBound,
    nielsen: ExactBound,
    corollary1: ExactBound,
}

#[derive(Serialize)]
struct BoundsRow {
    n: usize,
    k: usize,
    eta: f64,
    moon_moser: f64,
    eppstein: f64,
    nielsen: f64,
    corollary1: f64,
}

fn cmd_bounds(n: usize, k: usize, eta: f64, format: Format) -> Outcome {
    let r = BoundsReport {
        n,
        k,
        eta,
        moon_moser: moon_moser(n),
        eppstein: eppstein(n, k)?,
        nielsen: nielsen(n, k)?,
        corollary1: corollary1(n, k, eta)?,
    };
    let text = match format {
        Format::Json => json(&r),
        Format::Csv => csv(&[BoundsRow {
            n,
            k,
            eta,
            moon_moser: num(r.moon_moser.to_f64()),
            eppstein: num(r.eppstein.to_f64()),
            nielsen: num(r.nielsen.to_f64()),
            corollary1: num(r.corollary1.to_f64()),
        }])?,
    };
    Ok((text, true))
}

fn cmd_curves(eta: f64, points: usize, format: Format) -> Outcome {
    let rows = curve_export(eta, points)?;
    let text = match format {
        Format::Json => json(&serde_json::json!({ "eta": eta, "rows": rows })),
        Format::Csv => misbound::bounds::curve_csv(&rows),
    };
    Ok((text, true))
}

#[derive(Serialize)]
struct SolveReport {
    /// Not a constant from the literature: one admissible pair.
    label: &'static str,
    f_at_zero: f64,
    #[serde(flatten)]
    solution: misbound::bounds::EpsDelta,
}

fn cmd_solve(margin: f64, format: Format) -> Outcome {
    let r = SolveReport {
        label: "admissible witness",
        f_at_zero: theorem1_exponent(0.0)?,
        solution: solve_eps_delta(margin)?,
    };
    let text = match format {
        Format::Json => json(&r),
        Format::Csv => csv(&[&r.solution])?,
    };
    Ok((text, true))
}

#[derive(Serialize)]
struct ApproximateReport {
    graph6: String,
    n: usize,
    k: usize,
    ell: usize,
    i4: usize,
    i5: usize,
    i6: usize,
    h_max_degree: u32,
    monte_carlo: MonteCarloEstimate,
}

#[derive(Serialize)]
struct CheckRow<'a> {
    graph6: &'a str,
    check: &'a str,
    passed: bool,
}

#[allow(clippy::too_many_arguments)]
fn cmd_pipeline(
    input: Option<&Path>,
    random_n: usize,
    seed: u64,
    i0: Option<&str>,
    s: Option<&str>,
    capture_k: Option<usize>,
    monte_carlo: Option<u64>,
    format: Format,
) -> Outcome {
    let graphs = match input {
        Some(p) => read_graphs(p)?,
        None => {
            if random_n > 64 {
                return Err(Error::OrderTooLarge(random_n).into());
            }
            vec![random_k4_free_subcubic(random_n, 3 * random_n, seed)]
        }
    };
    let cfg = InstanceConfig {
        i0: i0.map(parse_set).transpose()?,
        s: s.map(parse_set).transpose()?,
        capture_k,
    };
    let mut reports = Vec::new();
    let mut approx = Vec::new();
    for g in &graphs {
        match (pipeline::run_instance(g, &cfg), monte_carlo) {
            (Ok(r), _) => reports.push(r),
            (Err(Error::CensusTooLarge { .. }), Some(samples)) => {
                approx.push(approximate(g, &cfg, samples, seed)?)
            }
            (Err(e), _) => return Err(e.into()),
        }
    }
    let ok = reports.iter().all(|r| r.passed());
    let text = match format {
        Format::Json if approx.is_empty() => json_list(&reports),
        Format::Json => json(&serde_json::json!({ "exact": reports, "approximate": approx })),
        Format::Csv => {
            let rows: Vec<CheckRow> = reports
                .iter()
                .flat_map(|r| {
                    r.checks.iter().map(|(c, &p)| CheckRow {
                        graph6: &r.graph6,
                        check: c,
                        passed: p,
                    })
                })
                .collect();
            csv(&rows)?
        }
    };
    Ok((text, ok))
}

fn approximate(
    g: &Graph,
    cfg: &InstanceConfig,
    samples: u64,
    seed: u64,
) -> Result<ApproximateReport, CliError> {
    let i0 = cfg.i0.unwrap_or_else(|| misbound::mis::minimum_mis(g));
    let dec = decompose(g, i0)?;
    let cells = label_cells(g, &dec);
    let st = select(g, &cells, cfg.s.unwrap_or_default());
    Ok(ApproximateReport {
        graph6: to_graph6(g),
        n: g.order(),
        k: dec.k,
        ell: dec.ell,
        i4: st.i4.len(),
        i5: st.i5.len(),
        i6: st.i6.len(),
        h_max_degree: st.h_max_degree(),
        monte_carlo: transversal_monte_carlo(g, &cells, &st, samples, seed),
    })
}

#[derive(Serialize)]
struct Theorem2Summary {
    k: usize,
    bound: String,
    max_count: u64,
    attainers: Vec<String>,
    exceptions: usize,
}

#[derive(Serialize)]
struct SearchReport {
    n: usize,
    filter: Filter,
    bound: BoundSelector,
    classes: usize,
    tightness: Vec<TightnessRow>,
    theorem2: Vec<Theorem2Summary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    mibs: Option<MibsScan>,
}

fn cmd_search(
    n: usize,
    filter: &str,
    bound: &str,
    eta: f64,
    mibs: bool,
    store: Option<&Path>,
    format: Format,
) -> Outcome {
    let filter: Filter = filter.parse()?;
    let bound: BoundSelector = match bound {
        "corollary1" => format!("corollary1:{eta}").parse()?,
        other => other.parse()?,
    };
    let classes = match store {
        Some(dir) => Store::new(dir)?.load_or_generate(n, filter)?,
        None => generate_all(n, filter)?,
    };
    let graphs: Vec<Graph> = classes.into_iter().map(|c| c.graph).collect();
    let t2 = verify_theorem2_on(n, &graphs);
    let report = SearchReport {
        n,
        filter,
        bound,
        classes: graphs.len(),
        tightness: tightness_scan_graphs(n, &graphs, bound),
        theorem2: t2
            .per_k
            .iter()
            .map(|r| Theorem2Summary {
                k: r.k,
                bound: r.bound.clone(),
                max_count: r.max_count,
                attainers: r.attainers.clone(),
                exceptions: r.exceptions.len(),
            })
            .collect(),
        mibs: mibs.then(|| mibs_scan_graphs(n, filter, &graphs)),
    };
    let text = match format {
        Format::Json => json(&report),
        Format::Csv => csv(&report
            .tightness
            .iter()
            .map(|r| TightnessCsv {
                k: r.k,
                max_exact: r.max_exact,
                max_at_most: r.max_at_most,
                bound: num(r.bound),
                ratio: num(r.ratio),
                argmax: r.argmax.clone().unwrap_or_default(),
            })
            .collect::<Vec<_>>())?,
    };
    Ok((text, t2.passed()))
}

#[derive(Serialize)]
struct TightnessCsv {
    k: usize,
    max_exact: u64,
    max_at_most: u64,
    bound: f64,
    ratio: f64,
    argmax: String,
}

#[derive(Serialize)]
struct Theorem2Csv {
    n: usize,
    k: usize,
    bound: String,
    max_count: u64,
    max_ratio: f64,
    attainers: String,
    exceptions: usize,
}

fn cmd_verify_theorem2(n: usize, all: bool, degree2: bool, format: Format) -> Outcome {
    let orders: Vec<usize> = if all { (0..=n).collect() } else { vec![n] };
    let reports: Vec<Theorem2Report> = orders
        .iter()
        .map(|&m| verify_theorem2(m))
        .collect::<Result<_, _>>()?;
    let d2 = if degree2 {
        orders
            .iter()
            .filter(|&&m| m > 0)
            .map(|&m| verify_degree2_constants(m))
            .collect::<Result<Vec<_>, _>>()?
    } else {
        Vec::new()
    };
    let ok = reports.iter().all(|r| r.passed()) && d2.iter().all(|r| r.passed());
    let text = match format {
        Format::Json => {
            let t2: Vec<serde_json::Value> = reports
                .iter()
                .map(|r| {
                    serde_json::json!({
                        "n": r.n,
                        "classes": r.classes,
                        "exceptions": r.exceptions(),
                        "passed": r.passed(),
                        "per_k": r.per_k,
                    })
                })
                .collect();
            let mut v = serde_json::json!({ "passed": ok, "theorem2": t2 });
            if degree2 {
                v["degree2"] = serde_json::to_value(&d2).expect("reports serialize");
            }
            json(&v)
        }
        Format::Csv => csv(&reports
            .iter()
            .flat_map(|r| r.per_k.iter())
            .map(|r| Theorem2Csv {
                n: r.n,
                k: r.k,
                bound: r.bound.clone(),
                max_count: r.max_count,
                max_ratio: num(r.max_ratio),
                attainers: joined(&r.attainers),
                exceptions: r.exceptions.len(),
            })
            .collect::<Vec<_>>())?,
    };
    Ok((text, ok))
}
