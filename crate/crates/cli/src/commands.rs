//! Subcommand bodies. Each returns the process exit code.

use std::fs;
use std::path::{Path, PathBuf};
use std::time::Duration;

use num_bigint::BigUint;
use ordram::analysis::{
    bandwidth, degeneracy, edge_lengths, interval_chromatic_number, is_decomposable,
};
use ordram::bounds::{self, BoundValue};
use ordram::constructions::{
    alternating_parity, matching_construction, matching_lb_params, monotone_cycle_construction,
    monotone_path_grid, pentagon, star_blowup, star_coloring, CertifiedColoring,
};
use ordram::containment::avoids;
use ordram::format::{
    demand_digest, parse_demand_spec, parse_digest, parse_oc, write_oc, PatternSpec,
};
use ordram::scheme::identify;
use ordram::solver::{known_bounds, ramsey_number, Budget, Engine, RamseyStatus};
use ordram::{Avoidance, Demand, Error, OrderedGraph, Result};

use crate::ledger::{self, LedgerEntry, Status};

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

/// Name in the pattern language, or the raw edge list.
pub fn describe(g: &OrderedGraph) -> String {
    match identify(g) {
        Some(spec) => spec.to_string(),
        None => format!("graph(n={}, edges={:?})", g.n(), g.edges()),
    }
}

fn demands(specs: &[String]) -> Result<Vec<Demand>> {
    specs
        .iter()
        .map(|s| {
            let (pattern, color) = parse_demand_spec(s)?;
            let graph = pattern.resolve(|p: &PathBuf| read(p))?;
            Ok(Demand::new(graph, color))
        })
        .collect()
}

fn arity(name: &str, params: &[usize], want: usize) -> Result<()> {
    if params.len() != want {
        return Err(Error::InvalidParameter {
            field: "params",
            reason: format!("{name} takes {want} parameters, got {}", params.len()),
        });
    }
    Ok(())
}

pub fn construct(name: &str, params: &[usize], out: &Path) -> Result<u8> {
    let cert: CertifiedColoring = match name {
        "monotone-cycle" => {
            arity(name, params, 2)?;
            monotone_cycle_construction(params[0], params[1])?
        }
        "alt-parity" => {
            arity(name, params, 1)?;
            alternating_parity(params[0])?
        }
        "star" => star_coloring(params)?,
        "path-grid" => monotone_path_grid(params)?,
        "star-blowup" => {
            arity(name, params, 3)?;
            star_blowup(params[0], params[1], params[2])?
        }
        "pentagon" => {
            arity(name, params, 0)?;
            let clique = ordram::build_scheme(&ordram::SchemeSpec::Complete(3))?;
            CertifiedColoring {
                coloring: pentagon(),
                avoided: vec![Demand::new(clique.clone(), 1), Demand::new(clique, 2)],
                provenance: "pentagon".into(),
            }
        }
        "matching" => {
            arity(name, params, 2)?;
            if params[0] != 3 {
                return Err(Error::InvalidParameter {
                    field: "r",
                    reason: "only r = 3 has a built-in base coloring (the pentagon)".into(),
                });
            }
            matching_construction(params[0], params[1], &pentagon())?.coloring
        }
        other => {
            return Err(Error::InvalidParameter {
                field: "name",
                reason: format!("unknown construction {other:?}"),
            })
        }
    };
    write(out, &write_oc(&cert.coloring))?;
    println!("construction {}", cert.provenance);
    println!("N {}", cert.coloring.n());
    println!("colors {}", cert.coloring.colors());
    for d in &cert.avoided {
        println!("avoids {}:{}", describe(&d.pattern), d.color);
    }
    println!("wrote {}", out.display());
    Ok(0)
}

pub fn verify(path: &Path, avoid: &[String]) -> Result<u8> {
    let coloring = parse_oc(&read(path)?)?;
    let demands = demands(avoid)?;
    match avoids(&coloring, &demands)? {
        Avoidance::Avoids => {
            println!("avoids");
            Ok(0)
        }
        Avoidance::Violation { demand, embedding } => {
            let d = &demands[demand];
            println!(
                "violation {}:{} at {:?}",
                describe(&d.pattern),
                d.color,
                embedding.images()
            );
            Ok(1)
        }
    }
}

pub struct SolveArgs {
    pub avoid: Vec<String>,
    pub max_n: Option<usize>,
    pub start: Option<usize>,
    pub budget_seconds: Option<f64>,
    pub budget_nodes: Option<u64>,
    pub threads: usize,
    pub engine: Engine,
    pub ledger: PathBuf,
    pub force: bool,
}

pub fn solve(args: SolveArgs) -> Result<u8> {
    let demands = demands(&args.avoid)?;
    let digest = demand_digest(&demands);
    println!("demands {digest}");
    if !args.force {
        if let Some(hit) = ledger::cached(&args.ledger, &digest)? {
            println!("status exact {}", hit.value);
            println!("cached {}", args.ledger.join(ledger::LEDGER_FILE).display());
            return Ok(0);
        }
    }
    let mut budget = Budget::unlimited()
        .with_threads(args.threads)
        .with_engine(args.engine);
    budget.max_nodes = args.budget_nodes;
    budget.max_n = args.max_n;
    if let Some(s) = args.budget_seconds {
        if !(s.is_finite() && s >= 0.0) {
            return Err(Error::InvalidParameter {
                field: "budget-seconds",
                reason: "need a finite, nonnegative number".into(),
            });
        }
        budget = budget.with_time(Duration::from_secs_f64(s));
    }
    let result = ramsey_number(&demands, args.start, &budget)?;
    let (status, value) = match result.status {
        RamseyStatus::Exact(v) => {
            println!("status exact {v}");
            (Status::Exact, v)
        }
        RamseyStatus::Bounds { lo, hi } => {
            match hi {
                Some(h) => println!("status bounds {lo} <= R <= {h}"),
                None => println!("status bounds {lo} <= R"),
            }
            (Status::Lower, lo)
        }
    };
    let witness = match &result.witness {
        Some(w) => {
            let rel = ledger::store_witness(
                &args.ledger,
                &digest,
                w.coloring.n(),
                &write_oc(&w.coloring),
            )?;
            println!("witness N={} {}", w.coloring.n(), w.provenance);
            Some(rel)
        }
        None => None,
    };
    println!(
        "nodes {} seconds {:.3}",
        result.stats.nodes,
        result.stats.elapsed.as_secs_f64()
    );
    let entry = LedgerEntry {
        digest,
        value,
        status,
        nodes: result.stats.nodes,
        seconds: result.stats.elapsed.as_secs_f64(),
        witness,
        version: env!("CARGO_PKG_VERSION").to_string(),
    };
    ledger::append(&args.ledger, &entry)?;
    println!("ledger {}", args.ledger.join(ledger::LEDGER_FILE).display());
    Ok(0)
}

const FAMILIES: &[(&str, &str)] = &[
    ("monotone-paths", "r_1 .. r_c"),
    ("stars", "r_1 .. r_c"),
    ("star-pair", "r1 s1 r2 s2"),
    ("monotone-cycles", "r s"),
    ("geometric-cycle", "n"),
    ("path-clique", "r s"),
    ("alt-path", "n"),
    ("probabilistic", "n m c"),
    ("star-blowup", "d c r"),
    ("decomposable", "k q r s C_k"),
    ("bandwidth", "k n C_k"),
    ("degenerate", "k p n"),
    ("hyperpath", "n c"),
    ("partitions", "d n max"),
    ("matching-lb", "r R"),
];

fn ints(params: &[String]) -> Result<Vec<u64>> {
    params
        .iter()
        .map(|p| {
            p.parse::<u64>().map_err(|_| Error::InvalidParameter {
                field: "params",
                reason: format!("not an unsigned integer: {p:?}"),
            })
        })
        .collect()
}

fn fixed<const K: usize>(family: &str, params: &[String]) -> Result<[u64; K]> {
    let v = ints(params)?;
    v.try_into().map_err(|v: Vec<u64>| Error::InvalidParameter {
        field: "params",
        reason: format!("{family} takes {K} parameters, got {}", v.len()),
    })
}

pub fn bound(family: &str, params: &[String]) -> Result<u8> {
    let values: Vec<BoundValue> = match family {
        "list" => {
            for (name, args) in FAMILIES {
                println!("{name} {args}");
            }
            return Ok(0);
        }
        "monotone-paths" => vec![bounds::monotone_paths_exact(&ints(params)?)?],
        "stars" => vec![bounds::stars_multicolor_exact(&ints(params)?)?],
        "star-pair" => {
            let [r1, s1, r2, s2] = fixed(family, params)?;
            vec![bounds::stars_pair_exact(r1, s1, r2, s2)?]
        }
        "monotone-cycles" => {
            let [r, s] = fixed(family, params)?;
            vec![bounds::monotone_cycles_exact(r, s)?]
        }
        "geometric-cycle" => {
            let [n] = fixed(family, params)?;
            vec![bounds::geometric_cycle_exact(n)?]
        }
        "path-clique" => {
            let [r, s] = fixed(family, params)?;
            vec![bounds::path_vs_clique_exact(r, s)?]
        }
        "alt-path" => {
            let [n] = fixed(family, params)?;
            let b = bounds::alt_path_bounds(n)?;
            vec![b.lower, b.upper, b.upper_sharp, b.conjectured]
        }
        "probabilistic" => {
            let [n, m, c] = fixed(family, params)?;
            vec![bounds::probabilistic_lower(n, m, c)?]
        }
        "star-blowup" => {
            let [d, c, r] = fixed(family, params)?;
            vec![bounds::star_blowup_lower(d, c, r)?]
        }
        "decomposable" => {
            if params.len() != 5 {
                return Err(Error::InvalidParameter {
                    field: "params",
                    reason: format!("{family} takes 5 parameters, got {}", params.len()),
                });
            }
            let [k, q, r, s] = fixed(family, &params[..4])?;
            vec![bounds::decomposable_upper(
                k,
                q,
                r,
                s,
                &parse_big(&params[4])?,
            )?]
        }
        "bandwidth" => {
            if params.len() != 3 {
                return Err(Error::InvalidParameter {
                    field: "params",
                    reason: format!("{family} takes 3 parameters, got {}", params.len()),
                });
            }
            let [k, n] = fixed(family, &params[..2])?;
            vec![bounds::bandwidth_upper(k, n, &parse_big(&params[2])?)?]
        }
        "degenerate" => {
            let [k, p, n] = fixed(family, params)?;
            vec![bounds::degenerate_upper(k, p, n)?]
        }
        "hyperpath" => {
            let [n, c] = fixed(family, params)?;
            vec![bounds::hyperpath_exact(n, c)?]
        }
        "partitions" => {
            let [d, n, max] = fixed(family, params)?;
            let d = u32::try_from(d).map_err(|_| Error::InvalidParameter {
                field: "d",
                reason: "too large".into(),
            })?;
            println!("count {}", bounds::partition_count(d, n, max)?);
            return Ok(0);
        }
        "matching-lb" => {
            if params.len() != 2 {
                return Err(Error::InvalidParameter {
                    field: "params",
                    reason: format!("{family} takes 2 parameters, got {}", params.len()),
                });
            }
            let [r] = fixed(family, &params[..1])?;
            let p = matching_lb_params(r as usize, &parse_big(&params[1])?)?;
            println!("c {:.6}", p.c);
            match (p.k, &p.n, &p.big_n, p.margin) {
                (Some(k), Some(n), Some(big_n), Some(margin)) => {
                    println!("k {k}");
                    println!("n {n}");
                    println!("N {big_n}");
                    println!("margin {margin:.6}");
                    println!(
                        "inequality {}",
                        if p.inequality_holds { "holds" } else { "fails" }
                    );
                }
                _ => println!("not applicable: need floor(log_r R) >= 3"),
            }
            return Ok(0);
        }
        other => {
            return Err(Error::InvalidParameter {
                field: "family",
                reason: format!("unknown family {other:?}; try `ordram bound list`"),
            })
        }
    };
    for v in values {
        println!("{v}");
    }
    Ok(0)
}

/// Decimal big integer for a caller-supplied constant.
fn parse_big(s: &str) -> Result<BigUint> {
    s.parse::<BigUint>().map_err(|_| Error::InvalidParameter {
        field: "params",
        reason: format!("not an unsigned integer: {s:?}"),
    })
}

pub fn analyze(arg: &str) -> Result<u8> {
    let spec: PatternSpec = match arg.parse() {
        Ok(spec) => spec,
        Err(_) if Path::new(arg).is_file() => PatternSpec::File(arg.into()),
        Err(e) => return Err(e),
    };
    let g = spec.resolve(|p: &PathBuf| read(p))?;
    let mut hist: std::collections::BTreeMap<usize, usize> = Default::default();
    for l in edge_lengths(&g) {
        *hist.entry(l).or_default() += 1;
    }
    let hist: Vec<String> = hist.iter().map(|(l, c)| format!("{l}:{c}")).collect();
    let bw = bandwidth(&g);
    let k = bw.max(1);
    println!("pattern {}", describe(&g));
    println!("n {}", g.n());
    println!("m {}", g.edge_count());
    println!(
        "edge-lengths {}",
        if hist.is_empty() {
            "-".into()
        } else {
            hist.join(" ")
        }
    );
    println!("bandwidth {bw}");
    println!("degeneracy {}", degeneracy(&g).k);
    println!(
        "interval-chromatic-number {}",
        interval_chromatic_number(&g)
    );
    println!(
        "decomposable k={k} q=2 {}",
        if is_decomposable(&g, k, 2).is_some() {
            "yes"
        } else {
            "no"
        }
    );
    Ok(0)
}

pub fn ledger_check(dir: &Path) -> Result<u8> {
    let entries = ledger::read_entries(dir)?;
    let mut failures = 0;
    for (k, e) in entries.iter().enumerate() {
        let problems = check_entry(dir, e)?;
        if problems.is_empty() {
            println!("ok {} N={} status={:?}", k + 1, e.value, e.status);
        } else {
            failures += 1;
            println!("FAIL {} {}", k + 1, problems.join("; "));
        }
    }
    println!("checked {} entries, {failures} failed", entries.len());
    Ok(if failures == 0 { 0 } else { 1 })
}

fn check_entry(dir: &Path, e: &LedgerEntry) -> Result<Vec<String>> {
    let demands = parse_digest(&e.digest)?;
    let mut problems = Vec::new();
    match &e.witness {
        Some(rel) => {
            let coloring = parse_oc(&read(&dir.join(rel))?)?;
            if coloring.n() + 1 != e.value {
                problems.push(format!(
                    "witness has {} vertices, expected {}",
                    coloring.n(),
                    e.value - 1
                ));
            }
            if !avoids(&coloring, &demands)?.is_avoiding() {
                problems.push("witness does not avoid the demands".into());
            }
        }
        None if e.value > 1 => problems.push("missing witness".into()),
        None => {}
    }
    for b in known_bounds(&demands) {
        let v = e.value as u64;
        let clash = match (e.status, b.kind) {
            (Status::Exact, _) => !b.admits(v),
            // only a lower bound is known: upper-type values must not be below it
            (Status::Lower, bounds::BoundKind::Exact | bounds::BoundKind::Upper) => {
                b.value < bounds::ExtInt::from(v)
            }
            (Status::Lower, _) => false,
        };
        if clash {
            problems.push(format!("value {v} contradicts {b}"));
        }
    }
    Ok(problems)
}
