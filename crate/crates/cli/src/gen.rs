use std::io::{self, BufWriter, Write};

use clap::Subcommand;
use limpack::generators::{
    gen_complete, gen_corona_tree, gen_cycle, gen_disjoint_copies, gen_gkr, gen_path, gen_petersen,
    gen_star, random_graph, random_tree,
};
use limpack::{emit_graph6, parse_graph6, GenError, Graph};

use crate::{Failure, EXIT_INFEASIBLE};

#[derive(Subcommand)]
pub enum GenCommand {
    /// The r-regular three-part graph whose third part is a maximal
    /// k-limited packing. Its blueprint goes to standard error.
    Gkr {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        r: u32,
        /// Size multiplier; the smallest feasible one by default.
        #[arg(long)]
        t: Option<usize>,
    },
    /// The star K_{1,n-1}.
    Star {
        #[arg(long)]
        n: usize,
    },
    /// Attach `p` pendants to every vertex of a base tree.
    Corona {
        /// Base tree as graph6.
        #[arg(long)]
        base: String,
        #[arg(long)]
        p: usize,
    },
    Petersen,
    Complete {
        #[arg(long)]
        n: usize,
    },
    Cycle {
        #[arg(long)]
        n: usize,
    },
    Path {
        #[arg(long)]
        n: usize,
    },
    /// Disjoint copies of a base graph.
    Disjoint {
        /// Base graph as graph6.
        #[arg(long)]
        base: String,
        #[arg(long)]
        copies: usize,
    },
    /// G(n, p) random graphs, one per seed from `seed` on.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: u64,
    },
    /// Uniform random labelled trees, one per seed from `seed` on.
    Tree {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: u64,
    },
}

fn base(text: &str) -> Result<Graph, Failure> {
    parse_graph6(text).map_err(|e| Failure::input(format!("--base: {e}")))
}

fn generated<T>(r: Result<T, GenError>) -> Result<T, Failure> {
    r.map_err(|e| Failure::input(e.to_string()))
}

pub fn run(cmd: GenCommand) -> Result<u8, Failure> {
    let graphs: Vec<Graph> = match cmd {
        GenCommand::Gkr { k, r, t } => {
            let (g, blueprint) = gen_gkr(k, r, t).map_err(|e| Failure {
                code: EXIT_INFEASIBLE,
                message: format!("infeasible G(k={k}, r={r}): {e}"),
            })?;
            eprintln!("{}", serde_json::to_string(&blueprint)?);
            vec![g]
        }
        GenCommand::Star { n } => vec![generated(gen_star(n))?],
        GenCommand::Corona { base: b, p } => vec![generated(gen_corona_tree(&base(&b)?, p))?],
        GenCommand::Petersen => vec![gen_petersen()],
        GenCommand::Complete { n } => vec![generated(gen_complete(n))?],
        GenCommand::Cycle { n } => vec![generated(gen_cycle(n))?],
        GenCommand::Path { n } => vec![generated(gen_path(n))?],
        GenCommand::Disjoint { base: b, copies } => {
            vec![generated(gen_disjoint_copies(&base(&b)?, copies))?]
        }
        GenCommand::Random { n, p, seed, count } => (seed..seed + count)
            .map(|s| generated(random_graph(n, p, s)))
            .collect::<Result<_, _>>()?,
        GenCommand::Tree { n, seed, count } => (seed..seed + count)
            .map(|s| generated(random_tree(n, s)))
            .collect::<Result<_, _>>()?,
    };
    let mut out = BufWriter::new(io::stdout().lock());
    for g in &graphs {
        writeln!(out, "{}", emit_graph6(g))?;
    }
    out.flush()?;
    Ok(0)
}
