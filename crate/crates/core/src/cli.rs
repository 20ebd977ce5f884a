//! The `zzh` command line. [`run`] parses arguments, dispatches to the
//! library and returns the process exit code:
//! 0 success, 1 usage error, 2 verification failure, 3 guard exceeded.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::{json, Value};

use crate::alt_perm::{enumerate_alternating, euler_zigzag, parse_permutation, AltPerm};
use crate::checks::{swap_numbers, verify_all_with, Depth, Guards, Status};
use crate::ehrhart::{ehrhart_table, hstar_from_ehrhart};
use crate::error::Error;
use crate::poly::IntPolynomial;
use crate::poset::IdealChain;
use crate::rank_selection::{alpha, alpha_table, beta, beta_table, hstar_from_beta, phi, psi};
use crate::sets::IndexSet;
use crate::shelling::{
    hstar_from_shelling, hstar_from_swaps, inversion_shelling_order, verify_shelling,
    ShellingOrder, ShellingReport, TieBreak,
};
use crate::MAX_N;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;
pub const EXIT_GUARD: i32 = 3;

/// Environment variable that replaces every default size guard.
pub const MAX_N_ENV: &str = "ZZH_MAX_N";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "zzh", version, about = "h*-polynomial of the zig-zag order polytope")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Worker threads (default: available cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Ignore size guards.
    #[arg(long, global = true)]
    force: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Swap,
    Shelling,
    Ehrhart,
    Beta,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TieArg {
    Lex,
    #[value(name = "reverse_lex", alias = "reverse-lex")]
    ReverseLex,
    Seeded,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DepthArg {
    Fast,
    Full,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// h*-polynomial by one or all routes.
    Hstar {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Method::All)]
        method: Method,
    },
    /// List A_n in lex order.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Add swap set, swap, inversion and descent columns.
        #[arg(long)]
        stats: bool,
    },
    /// Euler zigzag numbers E_0..E_max.
    Euler {
        #[arg(long)]
        max: usize,
    },
    /// Lattice-point counts i(m) for m = 0..max-m.
    Ehrhart {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        max_m: u64,
    },
    /// Build an inversion shelling order, or check a given one.
    Shelling {
        #[arg(long, required_unless_present = "order_file")]
        n: Option<usize>,
        /// Order within equal inversion counts; reverse_lex reproduces
        /// the classical n = 4 order.
        #[arg(long, value_enum, default_value_t = TieArg::ReverseLex)]
        tie_break: TieArg,
        #[arg(long, required_if_eq("tie_break", "seeded"))]
        seed: Option<u64>,
        #[arg(long)]
        verify: bool,
        /// Verify this order (one permutation per line) instead.
        #[arg(long)]
        order_file: Option<PathBuf>,
    },
    /// Flag f-vector (alpha) and h-vector (beta) of the ideal lattice.
    Flags {
        #[arg(long)]
        n: usize,
        /// A single size set such as "{1,3}".
        #[arg(long)]
        set: Option<IndexSet>,
    },
    /// Apply phi (to a chain) or psi (to a permutation).
    ChainMap {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        sizes: IndexSet,
        #[arg(long, conflicts_with = "perm", required_unless_present = "perm")]
        chain: Option<String>,
        #[arg(long)]
        perm: Option<String>,
    },
    /// Run every structural check at n.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = DepthArg::Fast)]
        depth: DepthArg,
    },
    /// s_n(k) for n = 1..max.
    SwapTable {
        #[arg(long)]
        max: usize,
    },
}

// default per-command size guards
const GUARD_ENUMERATE: usize = 12;
const GUARD_SWAP: usize = 13;
const GUARD_SHELLING: usize = 7;
const GUARD_ORDER: usize = 10;
const GUARD_FLAGS: usize = 14;
const GUARD_EULER: usize = 2000;
const GUARD_EHRHART_M: usize = 10_000;

enum Failure {
    Usage(String),
    Verify(String),
    Guard(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::GuardExceeded { .. } => Failure::Guard(e.to_string()),
            Error::InvalidInput(_)
            | Error::InvalidSwap { .. }
            | Error::InvalidLabeling(_)
            | Error::InvalidConstraints(_)
            | Error::InvalidOrder(_)
            | Error::OutsideDomain { .. } => Failure::Usage(e.to_string()),
            _ => Failure::Verify(e.to_string()),
        }
    }
}

struct Ctx {
    format: Format,
    force: bool,
    env_limit: Option<usize>,
}

impl Ctx {
    fn guard(&self, what: &'static str, n: usize, default: usize) -> Result<(), Failure> {
        if n == 0 || n > MAX_N {
            return Err(Failure::Usage(format!("n = {n} outside 1..={MAX_N}")));
        }
        let limit = self.env_limit.unwrap_or(default);
        if !self.force && n > limit {
            return Err(Error::GuardExceeded { what, n, limit }.into());
        }
        Ok(())
    }
}

/// Output plus whether it reports a verification failure.
struct Output {
    text: String,
    failed: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, failed: false }
    }
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let env_limit = match std::env::var(MAX_N_ENV) {
        Ok(v) => match v.trim().parse() {
            Ok(x) => Some(x),
            Err(_) => {
                eprintln!("error: {MAX_N_ENV}={v:?} is not a nonnegative integer");
                return EXIT_USAGE;
            }
        },
        Err(_) => None,
    };
    let ctx = Ctx {
        format: cli.format,
        force: cli.force,
        env_limit,
    };
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(t) = cli.threads {
        if t == 0 {
            eprintln!("error: --threads must be positive");
            return EXIT_USAGE;
        }
        pool = pool.num_threads(t);
    }
    let pool = match pool.build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let result = pool.install(|| dispatch(&ctx, &cli.command));
    match result {
        Ok(out) => {
            let written = match &cli.output {
                Some(path) => std::fs::write(path, &out.text)
                    .map_err(|e| format!("cannot write {}: {e}", path.display())),
                None => {
                    print!("{}", out.text);
                    Ok(())
                }
            };
            if let Err(msg) = written {
                eprintln!("error: {msg}");
                return EXIT_USAGE;
            }
            if out.failed {
                EXIT_VERIFY
            } else {
                EXIT_OK
            }
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            EXIT_USAGE
        }
        Err(Failure::Verify(m)) => {
            eprintln!("verification failed: {m}");
            EXIT_VERIFY
        }
        Err(Failure::Guard(m)) => {
            eprintln!("error: {m}; pass --force or set {MAX_N_ENV} to override");
            EXIT_GUARD
        }
    }
}

fn dispatch(ctx: &Ctx, cmd: &Command) -> Result<Output, Failure> {
    match cmd {
        Command::Hstar { n, method } => cmd_hstar(ctx, *n, *method),
        Command::Enumerate { n, stats } => cmd_enumerate(ctx, *n, *stats),
        Command::Euler { max } => cmd_euler(ctx, *max),
        Command::Ehrhart { n, max_m } => cmd_ehrhart(ctx, *n, *max_m),
        Command::Shelling {
            n,
            tie_break,
            seed,
            verify,
            order_file,
        } => {
            let tie = match tie_break {
                TieArg::Lex => TieBreak::Lex,
                TieArg::ReverseLex => TieBreak::ReverseLex,
                TieArg::Seeded => TieBreak::Seeded(seed.unwrap_or(0)),
            };
            cmd_shelling(ctx, *n, tie, *verify, order_file.as_ref())
        }
        Command::Flags { n, set } => cmd_flags(ctx, *n, *set),
        Command::ChainMap {
            n,
            sizes,
            chain,
            perm,
        } => cmd_chain_map(ctx, *n, *sizes, chain.as_deref(), perm.as_deref()),
        Command::Verify { n, depth } => cmd_verify(ctx, *n, *depth),
        Command::SwapTable { max } => cmd_swap_table(ctx, *max),
    }
}

fn big_json(x: &BigUint) -> Value {
    u64::try_from(x).map_or_else(|_| json!(x.to_string()), |v| json!(v))
}

fn csv_escape(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn to_json(v: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn cmd_hstar(ctx: &Ctx, n: usize, method: Method) -> Result<Output, Failure> {
    let wanted: Vec<Method> = match method {
        Method::All => vec![Method::Swap, Method::Shelling, Method::Ehrhart, Method::Beta],
        m => vec![m],
    };
    ctx.guard("ehrhart", n, MAX_N)?;
    let mut results: Vec<(&str, IntPolynomial)> = Vec::new();
    for m in wanted {
        let (name, poly) = match m {
            Method::Swap => {
                ctx.guard("swap enumeration", n, GUARD_SWAP)?;
                ("swap", hstar_from_swaps(n)?)
            }
            Method::Shelling => {
                ctx.guard("shelling verification", n, GUARD_SHELLING)?;
                let order = inversion_shelling_order(n, TieBreak::ReverseLex)?;
                ("shelling", hstar_from_shelling(&order)?)
            }
            Method::Ehrhart => ("ehrhart", hstar_from_ehrhart(n)?),
            Method::Beta => {
                ctx.guard("flag vectors", n, GUARD_FLAGS)?;
                ("beta", hstar_from_beta(n)?)
            }
            Method::All => unreachable!(),
        };
        results.push((name, poly));
    }
    let agree = results.windows(2).all(|w| w[0].1 == w[1].1);
    let text = match ctx.format {
        Format::Table => results
            .iter()
            .map(|(name, p)| format!("{name:<9}{p}\n"))
            .collect(),
        Format::Csv => {
            let mut s = String::from("method,k,coefficient\n");
            for (name, p) in &results {
                for (k, c) in p.coeffs().iter().enumerate() {
                    let _ = writeln!(s, "{name},{k},{c}");
                }
            }
            s
        }
        Format::Json => {
            let map: BTreeMap<&str, &IntPolynomial> = results.iter().map(|(k, v)| (*k, v)).collect();
            to_json(&json!({ "n": n, "hstar": map, "agree": agree }))
        }
    };
    Ok(Output {
        text,
        failed: !agree,
    })
}

fn cmd_enumerate(ctx: &Ctx, n: usize, stats: bool) -> Result<Output, Failure> {
    ctx.guard("enumeration", n, GUARD_ENUMERATE)?;
    let perms: Vec<AltPerm> = enumerate_alternating(n)?.collect();
    let text = match ctx.format {
        Format::Table => {
            let mut s = String::new();
            if stats {
                let _ = writeln!(s, "perm\tswap_set\tswap\tinversions\tdescent_set");
            }
            for p in &perms {
                if stats {
                    let _ = writeln!(
                        s,
                        "{p}\t{}\t{}\t{}\t{}",
                        p.swap_set(),
                        p.swap(),
                        p.inversion_count(),
                        p.descent_set()
                    );
                } else {
                    let _ = writeln!(s, "{p}");
                }
            }
            s
        }
        Format::Csv => {
            let mut s = String::from(if stats {
                "perm,swap_set,swap,inversions,descent_set\n"
            } else {
                "perm\n"
            });
            for p in &perms {
                let perm = csv_escape(&p.to_string());
                if stats {
                    let _ = writeln!(
                        s,
                        "{perm},{},{},{},{}",
                        csv_escape(&p.swap_set().to_string()),
                        p.swap(),
                        p.inversion_count(),
                        csv_escape(&p.descent_set().to_string())
                    );
                } else {
                    let _ = writeln!(s, "{perm}");
                }
            }
            s
        }
        Format::Json => {
            let rows: Vec<Value> = perms
                .iter()
                .map(|p| {
                    if stats {
                        json!({
                            "perm": p,
                            "swap_set": p.swap_set(),
                            "swap": p.swap(),
                            "inversions": p.inversion_count(),
                            "descent_set": p.descent_set(),
                        })
                    } else {
                        json!(p)
                    }
                })
                .collect();
            to_json(&json!({ "n": n, "count": perms.len(), "perms": rows }))
        }
    };
    Ok(Output::ok(text))
}

fn cmd_euler(ctx: &Ctx, max: usize) -> Result<Output, Failure> {
    let limit = ctx.env_limit.map_or(GUARD_EULER, |l| l.max(GUARD_EULER));
    if !ctx.force && max > limit {
        return Err(Error::GuardExceeded {
            what: "euler",
            n: max,
            limit,
        }
        .into());
    }
    let e = euler_zigzag(max);
    let text = match ctx.format {
        Format::Table => {
            let line: Vec<String> = e.iter().map(ToString::to_string).collect();
            format!("{}\n", line.join(" "))
        }
        Format::Csv => {
            let mut s = String::from("n,euler\n");
            for (i, v) in e.iter().enumerate() {
                let _ = writeln!(s, "{i},{v}");
            }
            s
        }
        Format::Json => to_json(&e.iter().map(big_json).collect::<Vec<_>>()),
    };
    Ok(Output::ok(text))
}

fn cmd_ehrhart(ctx: &Ctx, n: usize, max_m: u64) -> Result<Output, Failure> {
    ctx.guard("ehrhart", n, MAX_N)?;
    if !ctx.force && max_m > GUARD_EHRHART_M as u64 {
        return Err(Error::GuardExceeded {
            what: "ehrhart dilation",
            n: max_m as usize,
            limit: GUARD_EHRHART_M,
        }
        .into());
    }
    let table = ehrhart_table(n, max_m)?;
    let text = match ctx.format {
        Format::Table => {
            let mut s = String::from("m\ti(m)\n");
            for (m, v) in table.values.iter().enumerate() {
                let _ = writeln!(s, "{m}\t{v}");
            }
            s
        }
        Format::Csv => table.to_csv(),
        Format::Json => to_json(&table),
    };
    Ok(Output::ok(text))
}

fn shelling_text(ctx: &Ctx, order: &ShellingOrder, report: Option<&ShellingReport>) -> String {
    let perms: Vec<String> = order.perms().map(ToString::to_string).collect();
    match ctx.format {
        Format::Table => match report {
            None => order.to_order_file(),
            Some(r) => {
                let mut s = format!("order: {}\nvalid: {}\n", perms.join(","), r.valid);
                if r.valid {
                    let counts: Vec<String> = r.attachment_counts.iter().map(ToString::to_string).collect();
                    let _ = writeln!(s, "attachments: {}", counts.join(","));
                    let h = IntPolynomial::from_counts(histogram(&r.attachment_counts));
                    let _ = writeln!(s, "hstar: {h}");
                }
                if let Some(w) = &r.failure_witness {
                    let face: Vec<String> = w.face.iter().map(ToString::to_string).collect();
                    let _ = writeln!(
                        s,
                        "first failure: position {} ({}), against position {} ({}); face {{{}}}",
                        w.position,
                        w.simplex,
                        w.earlier,
                        w.earlier_simplex,
                        face.join(",")
                    );
                }
                s
            }
        },
        Format::Csv => {
            let mut s = String::from(if report.is_some() {
                "position,perm,attachments\n"
            } else {
                "position,perm\n"
            });
            for (i, p) in perms.iter().enumerate() {
                match report {
                    Some(r) => {
                        let a = r.attachment_counts.get(i).map_or(String::new(), ToString::to_string);
                        let _ = writeln!(s, "{},{},{a}", i + 1, csv_escape(p));
                    }
                    None => {
                        let _ = writeln!(s, "{},{}", i + 1, csv_escape(p));
                    }
                }
            }
            s
        }
        Format::Json => match report {
            None => to_json(&json!({ "n": order.n(), "order": perms })),
            Some(r) => to_json(&json!({ "n": order.n(), "order": perms, "report": r })),
        },
    }
}

fn histogram(counts: &[usize]) -> Vec<u64> {
    let mut h = vec![0u64; counts.iter().max().map_or(0, |m| m + 1)];
    for &c in counts {
        h[c] += 1;
    }
    h
}

fn cmd_shelling(
    ctx: &Ctx,
    n: Option<usize>,
    tie: TieBreak,
    verify: bool,
    order_file: Option<&PathBuf>,
) -> Result<Output, Failure> {
    let (order, verify) = match order_file {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
            let order = ShellingOrder::parse(&text)?;
            if let Some(n) = n {
                if n != order.n() {
                    return Err(Failure::Usage(format!("--n {n} but the order file has n = {}", order.n())));
                }
            }
            (order, true)
        }
        None => {
            let n = n.expect("clap requires --n without --order-file");
            ctx.guard("shelling order", n, if verify { GUARD_SHELLING } else { GUARD_ORDER })?;
            (inversion_shelling_order(n, tie)?, verify)
        }
    };
    if !verify {
        return Ok(Output::ok(shelling_text(ctx, &order, None)));
    }
    ctx.guard("shelling verification", order.n(), GUARD_SHELLING)?;
    let report = verify_shelling(&order)?;
    Ok(Output {
        text: shelling_text(ctx, &order, Some(&report)),
        failed: !report.valid,
    })
}

fn cmd_flags(ctx: &Ctx, n: usize, set: Option<IndexSet>) -> Result<Output, Failure> {
    if let Some(s) = set {
        ctx.guard("flag vectors", n, MAX_N)?;
        let a = alpha(n, s)?;
        let b = beta(n, s)?;
        let text = match ctx.format {
            Format::Table => format!("set\talpha\tbeta\n{s}\t{a}\t{b}\n"),
            Format::Csv => format!("set,alpha,beta\n{},{a},{b}\n", csv_escape(&s.to_string())),
            Format::Json => to_json(&json!({
                "n": n,
                "set": s,
                "alpha": u64::try_from(a).map_or_else(|_| json!(a.to_string()), |v| json!(v)),
                "beta": i64::try_from(b).map_or_else(|_| json!(b.to_string()), |v| json!(v)),
            })),
        };
        return Ok(Output::ok(text));
    }
    ctx.guard("flag vectors", n, GUARD_FLAGS)?;
    let alphas = alpha_table(n)?;
    let betas = beta_table(n)?;
    let text = match ctx.format {
        Format::Table | Format::Csv => {
            let (sep, header) = match ctx.format {
                Format::Table => ('\t', "set\talpha\tbeta\n"),
                _ => (',', "set,alpha,beta\n"),
            };
            let mut s = String::from(header);
            let mut keys: Vec<&IndexSet> = alphas.table.keys().collect();
            // by size, then lexicographically, which reads better than bitmask order
            keys.sort_by_key(|k| (k.len(), k.to_vec()));
            for k in keys {
                let name = if ctx.format == Format::Csv {
                    csv_escape(&k.to_string())
                } else {
                    k.to_string()
                };
                let _ = writeln!(s, "{name}{sep}{}{sep}{}", alphas.table[k], betas.table[k]);
            }
            s
        }
        Format::Json => to_json(&json!({ "n": n, "alpha": alphas, "beta": betas })),
    };
    Ok(Output::ok(text))
}

fn cmd_chain_map(
    ctx: &Ctx,
    n: usize,
    sizes: IndexSet,
    chain: Option<&str>,
    perm: Option<&str>,
) -> Result<Output, Failure> {
    ctx.guard("chain map", n, MAX_N)?;
    let (input, output, direction) = match (chain, perm) {
        (Some(c), None) => {
            let chain = IdealChain::parse(n, c)?;
            if chain.sizes() != sizes {
                return Err(Failure::Usage(format!(
                    "chain has sizes {}, expected {sizes}",
                    chain.sizes()
                )));
            }
            let sigma = phi(&chain)?;
            (chain.to_string(), sigma.to_string(), "phi")
        }
        (None, Some(p)) => {
            let sigma = AltPerm::new(parse_permutation(p)?)?;
            if sigma.n() != n {
                return Err(Failure::Usage(format!("permutation has length {}, expected {n}", sigma.n())));
            }
            let chain = psi(sizes, &sigma)?;
            (sigma.to_string(), chain.to_string(), "psi")
        }
        _ => return Err(Failure::Usage("give exactly one of --chain or --perm".into())),
    };
    let text = match ctx.format {
        Format::Table => format!("{output}\n"),
        Format::Csv => format!(
            "map,sizes,input,output\n{direction},{},{},{}\n",
            csv_escape(&sizes.to_string()),
            csv_escape(&input),
            csv_escape(&output)
        ),
        Format::Json => to_json(&json!({
            "n": n,
            "map": direction,
            "sizes": sizes,
            "input": input,
            "output": output,
        })),
    };
    Ok(Output::ok(text))
}

fn cmd_verify(ctx: &Ctx, n: usize, depth: DepthArg) -> Result<Output, Failure> {
    ctx.guard("verify", n, MAX_N)?;
    let depth = match depth {
        DepthArg::Fast => Depth::Fast,
        DepthArg::Full => Depth::Full,
    };
    let mut guards = Guards::for_depth(depth);
    if ctx.force {
        guards = guards.with_limit(MAX_N);
    } else if let Some(l) = ctx.env_limit {
        guards = guards.with_limit(l);
    }
    let report = verify_all_with(n, depth, guards)?;
    let label = |s: Status| match s {
        Status::Pass => "pass",
        Status::Fail => "fail",
        Status::Skipped => "skipped",
    };
    let text = match ctx.format {
        Format::Table => {
            let mut s = format!("n = {n}, depth = {}\n", if depth == Depth::Fast { "fast" } else { "full" });
            for c in &report.checks {
                let _ = write!(s, "{:<8}{}", label(c.status).to_uppercase(), c.name);
                match (&c.witness, c.status) {
                    (Some(Value::String(w)), _) => {
                        let _ = write!(s, "  ({w})");
                    }
                    (Some(w), Status::Fail) => {
                        let _ = write!(s, "  {w}");
                    }
                    _ => {}
                }
                s.push('\n');
            }
            s
        }
        Format::Csv => {
            let mut s = String::from("name,status\n");
            for c in &report.checks {
                let _ = writeln!(s, "{},{}", c.name, label(c.status));
            }
            s
        }
        Format::Json => format!("{}\n", report.to_json()),
    };
    Ok(Output {
        text,
        failed: !report.all_passed(),
    })
}

fn cmd_swap_table(ctx: &Ctx, max: usize) -> Result<Output, Failure> {
    ctx.guard("swap table", max, GUARD_ENUMERATE)?;
    let rows = (1..=max)
        .map(swap_numbers)
        .collect::<crate::error::Result<Vec<_>>>()?;
    let text = match ctx.format {
        Format::Table => {
            let mut s = String::new();
            for r in &rows {
                let cells: Vec<String> = r.s.iter().map(ToString::to_string).collect();
                let _ = writeln!(s, "{:>2}: {}", r.n, cells.join(" "));
            }
            s
        }
        Format::Csv => {
            let mut s = String::from("n,k,count\n");
            for r in &rows {
                for (k, c) in r.s.iter().enumerate() {
                    let _ = writeln!(s, "{},{k},{c}", r.n);
                }
            }
            s
        }
        Format::Json => to_json(&rows),
    };
    let failed = rows.iter().any(|r| !r.violations().is_empty());
    Ok(Output { text, failed })
}
