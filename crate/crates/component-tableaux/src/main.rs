//! Command-line front end: `enumerate`, `verify` and `sweep`.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use component_tableaux::render;
use component_tableaux::report::{
    self, CompositionReport, ConformanceReport, Format, RunConfig, Status, SweepReport, DEFAULT_HARD_CAP,
    DEFAULT_SYMBOLIC_MAX_N,
};
use component_tableaux::{Composition, Diagram, Error};

#[derive(Parser)]
#[command(name = "component-tableaux", version, about = "Enumerate and verify component tableaux of parabolic nilfibres")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print every component tableau with its lines and excluded roots.
    Enumerate(Common),
    /// Run theorem checks on one composition.
    Verify(Common),
    /// Run checks on every composition of every n up to a bound.
    Sweep(Common),
}

#[derive(Args)]
struct Common {
    /// Composition as comma-separated parts, e.g. 2,1,1,2.
    #[arg(long)]
    composition: Option<String>,
    /// Sweep bound.
    #[arg(long)]
    n: Option<usize>,
    /// `all`, or a comma-separated subset of vanishing, weierstrass, covering,
    /// dimension, injectivity, orbital.
    #[arg(long, default_value = "all")]
    checks: String,
    #[arg(long, default_value = "text")]
    format: String,
    /// Output file (enumerate, verify) or directory (sweep).
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 0)]
    threads: usize,
    /// Largest n expanded symbolically; above it generators are evaluated numerically.
    #[arg(long, default_value_t = DEFAULT_SYMBOLIC_MAX_N)]
    symbolic_max_n: usize,
    /// Random evaluations per identity test in the numeric engine.
    #[arg(long, default_value_t = report::DEFAULT_TRIALS)]
    trials: usize,
    /// Skip injectivity above this n during sweeps.
    #[arg(long, default_value_t = 8)]
    injectivity_max_n: usize,
}

impl Common {
    fn config(&self) -> Result<RunConfig, Error> {
        let mut cfg = RunConfig {
            composition: self.composition.as_deref().map(str::parse).transpose()?,
            n: self.n,
            checks: report::parse_checks(&self.checks)?,
            format: self.format.parse()?,
            out: self.out.clone(),
            seed: self.seed,
            threads: self.threads,
            symbolic_max_n: self.symbolic_max_n,
            trials: self.trials.max(1),
            ..RunConfig::default()
        };
        if cfg.n.is_some() {
            cfg.injectivity_max_n = self.injectivity_max_n;
        }
        cfg.validate()?;
        debug_assert_eq!(cfg.hard_cap, DEFAULT_HARD_CAP);
        Ok(cfg)
    }
}

fn composition(cfg: &RunConfig) -> Result<&Composition, Error> {
    cfg.composition.as_ref().ok_or_else(|| Error::InvalidInput("--composition is required".into()))
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Error> {
    match out {
        Some(p) => std::fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn to_json<T: serde::Serialize>(v: &T) -> Result<String, Error> {
    let mut s = serde_json::to_string_pretty(v).map_err(|e| Error::Io(e.into()))?;
    s.push('\n');
    Ok(s)
}

fn mark(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAIL"
    }
}

fn composition_text(r: &CompositionReport) -> String {
    let mut out = String::new();
    let parts: Vec<String> = r.composition.iter().map(|c| c.to_string()).collect();
    let _ = writeln!(
        out,
        "composition ({}): {} tableaux, {} invariants, engine {:?}",
        parts.join(","),
        r.tableau_count,
        r.invariant_count,
        r.engine
    );
    for t in &r.tableaux {
        let mut items = Vec::new();
        if let Some(v) = &t.vanishing {
            items.push(format!("vanishing {}", mark(v.ok)));
        }
        if let Some(w) = &t.weierstrass {
            items.push(format!("weierstrass {}", mark(w.ok)));
        }
        if let Some(c) = &t.covering {
            items.push(format!("covering {}", mark(c.ok)));
        }
        if let Some(d) = &t.dimension {
            items.push(format!("dimension {}", mark(d.ok())));
        }
        if let Some(o) = &t.orbital {
            items.push(format!("orbital {:?}", o.status).to_lowercase());
        }
        let jt: Vec<String> = t.jordan_type.iter().map(|x| x.to_string()).collect();
        items.push(format!("jordan ({})", jt.join(",")));
        let _ = writeln!(out, "  tableau {}: {}", t.index, items.join(", "));
    }
    for p in &r.injectivity_pairs {
        let _ = writeln!(out, "  injectivity {} vs {}: {}", p.i, p.j, mark(p.ok));
    }
    for f in &r.failures {
        let _ = writeln!(out, "  failure: {f}");
    }
    let _ = writeln!(out, "status: {}", r.status);
    out
}

fn composition_latex(r: &CompositionReport) -> String {
    let mut out = String::from("\\begin{tabular}{r|l|l|l|l|l|l}\n");
    out.push_str("tableau & vanishing & weierstrass & covering & dimension & orbital & Jordan type \\\\\n\\hline\n");
    let opt = |o: Option<bool>| o.map_or("--", mark).to_string();
    for t in &r.tableaux {
        let jt: Vec<String> = t.jordan_type.iter().map(|x| x.to_string()).collect();
        let _ = writeln!(
            out,
            "{} & {} & {} & {} & {} & {} & $({})$ \\\\",
            t.index,
            opt(t.vanishing.as_ref().map(|v| v.ok)),
            opt(t.weierstrass.as_ref().map(|v| v.ok)),
            opt(t.covering.as_ref().map(|v| v.ok)),
            opt(t.dimension.as_ref().map(|v| v.ok())),
            t.orbital.as_ref().map_or("--".to_string(), |o| format!("{:?}", o.status).to_lowercase()),
            jt.join(",")
        );
    }
    out.push_str("\\end{tabular}\n");
    out
}

fn sweep_text(r: &SweepReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "n = {}: {} compositions", r.n, r.rows.len());
    for row in &r.rows {
        let parts: Vec<String> = row.composition.iter().map(|c| c.to_string()).collect();
        let _ = writeln!(
            out,
            "  ({}) tableaux {} invariants {} {}",
            parts.join(","),
            row.tableaux,
            row.invariants,
            row.status
        );
    }
    for f in &r.failures {
        let _ = writeln!(out, "  failure: {f}");
    }
    out
}

fn run(cli: Cli) -> Result<Status, Error> {
    match cli.command {
        Command::Enumerate(args) => {
            let cfg = args.config()?;
            let d = Diagram::new(composition(&cfg)?);
            emit(cfg.out.as_deref(), &render::enumerate_document(&d, cfg.format)?)?;
            Ok(Status::Pass)
        }
        Command::Verify(args) => {
            let cfg = args.config()?;
            let comp = composition(&cfg)?.clone();
            let start = Instant::now();
            let rep = report::with_threads(cfg.threads, || report::verify_composition(&comp, &cfg))??;
            let conf = ConformanceReport::new(&cfg, vec![rep]);
            let json = to_json(&conf)?;
            if let Some(p) = &cfg.out {
                std::fs::write(p, &json)?;
            }
            match cfg.format {
                Format::Json if cfg.out.is_none() => print!("{json}"),
                Format::Json => {}
                Format::Text => print!("{}", composition_text(&conf.compositions[0])),
                Format::Latex => print!("{}", composition_latex(&conf.compositions[0])),
            }
            eprintln!("elapsed {:.2}s", start.elapsed().as_secs_f64());
            Ok(conf.status)
        }
        Command::Sweep(args) => {
            let cfg = args.config()?;
            let bound = cfg.n.ok_or_else(|| Error::InvalidInput("--n is required".into()))?;
            let dir = cfg.out.clone().unwrap_or_else(|| PathBuf::from("component-tableaux-sweep"));
            std::fs::create_dir_all(&dir)?;
            let mut status = Status::Pass;
            for n in 1..=bound {
                let start = Instant::now();
                let rep = report::with_threads(cfg.threads, || report::sweep_n(n, &cfg))??;
                std::fs::write(dir.join(format!("sweep-n{n}.json")), to_json(&rep)?)?;
                match cfg.format {
                    Format::Json => print!("{}", to_json(&rep)?),
                    _ => print!("{}", sweep_text(&rep)),
                }
                eprintln!("n = {n}: elapsed {:.2}s", start.elapsed().as_secs_f64());
                status = status.max(rep.status);
            }
            Ok(status)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(status) => ExitCode::from(status.exit_code() as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::TheoremViolation(_) | Error::ConstructionViolation(_) | Error::Consistency(_) => 2,
                _ => 1,
            })
        }
    }
}
