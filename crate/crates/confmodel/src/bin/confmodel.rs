//! Thin command-line front end. Each subcommand wraps one library call;
//! the examples/ directory shows the same calls in context.

use clap::{Args, Parser, Subcommand};
use confmodel::branching::delayed_survival;
use confmodel::components::{component_summary, giant_stats, is_connected};
use confmodel::degree::DegreeLaw;
use confmodel::distances::{double_sweep_lower_bound, exact_diameter};
use confmodel::error::Result;
use confmodel::experiment::{
    gamma_for_graph, law_from_parts, parse_config, run_experiment, sub_seed,
};
use confmodel::graph::{build, DegreeSequence, Multigraph};
use confmodel::oracle::{evaluate, OracleParams};
use serde_json::json;
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "confmodel",
    version,
    about = "Configuration-model random multigraphs: generate, measure, compare"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct LawArgs {
    /// Degree law family: pareto, explicit, or degenerate
    #[arg(long)]
    law: String,
    /// Tail exponent (pareto)
    #[arg(long)]
    tau: Option<f64>,
    /// Minimum degree (pareto)
    #[arg(long)]
    kmin: Option<u64>,
    /// Probability mass function as "k:p,k:p" (explicit)
    #[arg(long)]
    pmf: Option<String>,
    /// Fixed degree (degenerate)
    #[arg(long)]
    m: Option<u64>,
}

impl LawArgs {
    fn to_law(&self) -> Result<DegreeLaw> {
        law_from_parts(&self.law, self.tau, self.kmin, self.pmf.as_deref(), self.m)
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Sample degrees, pair stubs uniformly, write the edge list
    Generate {
        #[command(flatten)]
        law: LawArgs,
        /// Number of nodes
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Edge-list output path
        #[arg(long)]
        out: PathBuf,
    },
    /// Component statistics of a stored edge list, as JSON
    Components {
        /// Edge-list input path
        #[arg(long = "in")]
        input: PathBuf,
        /// Size threshold for q_hat; derived from the graph when omitted
        #[arg(long)]
        gamma: Option<f64>,
    },
    /// Diameter of a stored edge list: exact by default, or a double-sweep
    /// lower bound
    Diameter {
        #[arg(long = "in")]
        input: PathBuf,
        /// Exact diameter (the default)
        #[arg(long, conflicts_with = "double_sweep")]
        exact: bool,
        /// Fast BFS lower bound instead of the exact value
        #[arg(long)]
        double_sweep: bool,
        /// Sweeps for the lower bound
        #[arg(long, default_value_t = 8)]
        sweeps: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Survival probability and related quantities of the delayed
    /// branching process for a degree law
    Survival {
        #[command(flatten)]
        law: LawArgs,
    },
    /// Evaluate a closed-form constant: oracle <name> key=value...
    Oracle {
        name: String,
        params: Vec<String>,
    },
    /// Run a key=value config experiment and write its CSV
    Experiment {
        #[arg(long)]
        config: PathBuf,
        /// Overrides the config's out= path
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn plot_stub(csv_name: &str) -> String {
    format!(
        "#!/usr/bin/env python3\n\
         # Starting point for plotting {csv}: tweak columns as needed.\n\
         import csv\n\
         from collections import defaultdict\n\n\
         rows = list(csv.DictReader(open({csv:?})))\n\
         by_n = defaultdict(list)\n\
         numeric = [k for k in rows[0] if k not in ('n', 'replicate', 'seed')]\n\
         col = numeric[0] if numeric else 'seed'\n\
         for r in rows:\n\
         \x20   try:\n\
         \x20       by_n[int(r['n'])].append(float(r[col]))\n\
         \x20   except ValueError:\n\
         \x20       pass\n\
         for n in sorted(by_n):\n\
         \x20   vals = by_n[n]\n\
         \x20   print(n, sum(vals) / len(vals))\n\
         # import matplotlib.pyplot as plt\n\
         # plt.plot(sorted(by_n), [sum(by_n[n])/len(by_n[n]) for n in sorted(by_n)], 'o-')\n\
         # plt.xlabel('n'); plt.ylabel(col); plt.xscale('log'); plt.show()\n",
        csv = csv_name
    )
}

fn run() -> Result<()> {
    match Cli::parse().cmd {
        Cmd::Generate { law, n, seed, out } => {
            let law = law.to_law()?;
            let seq = DegreeSequence::sample(&law, n, sub_seed(seed, 1))?;
            let g = build(&seq, sub_seed(seed, 2))?;
            g.write_edge_list_path(&out)?;
            println!(
                "{}",
                json!({
                    "nodes": g.n(),
                    "edges": g.edges().len(),
                    "stubs": g.stub_count(),
                    "self_loops": g.count_self_loops(),
                    "out": out.display().to_string(),
                })
            );
        }
        Cmd::Components { input, gamma } => {
            let g = Multigraph::read_edge_list_path(&input)?;
            let summary = component_summary(&g);
            let gamma = match gamma {
                Some(v) => (v.ceil() as usize).max(1),
                None => gamma_for_graph(g.n(), g.stub_count(), 0.1, 0.1),
            };
            let gs = giant_stats(&summary, gamma);
            println!(
                "{}",
                json!({
                    "n": g.n(),
                    "n_components": summary.sizes.len(),
                    "sizes": summary.sizes,
                    "largest": gs.largest,
                    "second": gs.second,
                    "complement": gs.complement,
                    "q_hat": gs.q_hat,
                    "gamma": gamma,
                    "connected": is_connected(&summary),
                })
            );
        }
        Cmd::Diameter {
            input,
            exact: _,
            double_sweep,
            sweeps,
            seed,
        } => {
            let g = Multigraph::read_edge_list_path(&input)?;
            if double_sweep {
                let lb = double_sweep_lower_bound(&g, sweeps, seed);
                println!(
                    "{}",
                    json!({ "method": "double_sweep", "lower_bound": lb, "sweeps": sweeps })
                );
            } else {
                println!(
                    "{}",
                    json!({ "method": "exact", "diameter": exact_diameter(&g) })
                );
            }
        }
        Cmd::Survival { law } => {
            let law = law.to_law()?;
            let bp = delayed_survival(&law)?;
            let moments = law.moments();
            println!(
                "{}",
                json!({
                    "q": bp.q,
                    "eta_g": bp.eta_g,
                    "mu": moments.mu,
                    "nu": moments.nu,
                    "f1": moments.f1,
                    "f2": moments.f2,
                })
            );
        }
        Cmd::Oracle { name, params } => {
            let params = OracleParams::parse(&params)?;
            println!("{}", evaluate(&name, &params)?);
        }
        Cmd::Experiment { config, out } => {
            let text = std::fs::read_to_string(&config)?;
            let mut cfg = parse_config(&text)?;
            if let Some(out) = out {
                cfg.output_path = Some(out);
            }
            let out_path = cfg
                .output_path
                .clone()
                .unwrap_or_else(|| PathBuf::from("results.csv"));
            let table = run_experiment(&cfg)?;
            table.write_csv_path(&out_path)?;
            let stub_path = PathBuf::from(format!("{}.plot.py", out_path.display()));
            let csv_name = out_path
                .file_name()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| out_path.display().to_string());
            std::fs::write(&stub_path, plot_stub(&csv_name))?;
            println!(
                "{}",
                json!({
                    "rows": table.rows.len(),
                    "columns": table.columns,
                    "out": out_path.display().to_string(),
                    "plot_stub": stub_path.display().to_string(),
                })
            );
        }
    }
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(2);
    }
}
