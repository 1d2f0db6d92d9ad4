//! `cbp`: pack, bound, solve, generate, duel, and measure colorful bin
//! packing instances from the command line.
//!
//! Exit codes: 0 on success, 1 when the acceptance suite reports a failed
//! criterion, 2 on usage or input errors.

use anyhow::{anyhow, bail, Context, Result};
use cbp_core::adversary::{
    adversary_lb2, adversary_zero3, gen_bap_3color, gen_bap_general, gen_bap_zero, gen_prop1,
    Lb2Termination, Prop1Variant,
};
use cbp_core::algo::{run, TieBreak};
use cbp_core::bounds::bounds_report;
use cbp_core::format::{parse_instance, serialize_instance};
use cbp_core::oracle::{opt, OptLimits};
use cbp_core::{validate_packing, Instance, Packing};
use cbp_harness::{algs, randgen, ratio, report, suite};
use clap::{Args, Parser, Subcommand};
use num_rational::BigRational;
use randgen::{RandomSpec, SizeMode};
use ratio::Denominator;
use report::{instance_lines, meta, packing_json, rat_decimal, rat_str};
use serde_json::{json, Value};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

#[derive(Parser)]
#[command(name = "cbp", version, about = "Online colorful bin packing workbench")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Tie-break rule for algorithms that have tie points.
    #[arg(long, global = true, default_value = "min-index")]
    tiebreak: String,

    /// Seed for randomized instance sources.
    #[arg(long, global = true, default_value_t = 0x5eed)]
    seed: u64,

    /// Per-solve oracle budget in milliseconds.
    #[arg(long, global = true)]
    budget_ms: Option<u64>,

    /// Output format: json, csv, or table.
    #[arg(long, global = true, default_value = "json")]
    format: String,

    /// Write the main output to a file instead of stdout.
    #[arg(short, long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Run one online algorithm over an instance file.
    Pack(PackArgs),
    /// Lower bounds and witness for an instance file.
    Bounds(InputArgs),
    /// Exact offline optimum for an instance file.
    Opt(OptArgs),
    /// Generate an adversarial instance family.
    Gen(GenArgs),
    /// Run an interactive adversary against an algorithm.
    Duel(DuelArgs),
    /// Ratio report for an algorithm over an instance source.
    Ratio(RatioArgs),
    /// Run the acceptance battery.
    Suite,
}

#[derive(Args)]
struct InputArgs {
    /// Instance file (`<color> <size>` per line).
    #[arg(long)]
    input: PathBuf,
}

#[derive(Args)]
struct PackArgs {
    #[arg(long)]
    alg: String,
    #[arg(long)]
    input: PathBuf,
}

#[derive(Args)]
struct OptArgs {
    #[arg(long)]
    input: PathBuf,
    /// Raise the item-count guard of the search.
    #[arg(long)]
    max_items: Option<usize>,
}

#[derive(Args)]
struct GenArgs {
    /// prop1-eps | prop1-wf | bap-zero | bap-general | bap-3color
    #[arg(long)]
    family: String,
    #[arg(long, alias = "M")]
    m: Option<u64>,
    #[arg(long, alias = "N")]
    n: Option<u64>,
    /// Size parameter for the bap continuations, as p/q.
    #[arg(long)]
    eps: Option<String>,
    /// Also write the certificate packing as JSON.
    #[arg(long)]
    cert_out: Option<PathBuf>,
}

#[derive(Args)]
struct DuelArgs {
    #[arg(long)]
    alg: String,
    /// lb2 | zero3
    #[arg(long)]
    adversary: String,
    #[arg(long, alias = "N")]
    n: Option<u64>,
    #[arg(long, alias = "M")]
    m: Option<usize>,
    #[arg(long)]
    phases: Option<usize>,
}

#[derive(Args)]
struct RatioArgs {
    #[arg(long)]
    alg: String,
    /// Instance file source.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Generator family source (with --m/--n/--eps).
    #[arg(long)]
    family: Option<String>,
    #[arg(long)]
    m: Option<u64>,
    #[arg(long)]
    n: Option<u64>,
    #[arg(long)]
    eps: Option<String>,
    /// Random source: number of instances.
    #[arg(long)]
    count: Option<usize>,
    #[arg(long, default_value_t = 14)]
    max_n: usize,
    /// Comma-separated palette sizes for the random source.
    #[arg(long, default_value = "2,3,5")]
    palette_sizes: String,
    /// zero | rational | mixed
    #[arg(long, default_value = "mixed")]
    sizes: String,
    #[arg(long, default_value_t = 10)]
    max_den: u64,
    /// oracle | certificate | bounds
    #[arg(long, default_value = "oracle")]
    denominator: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(cli: Cli) -> Result<ExitCode> {
    let tiebreak = TieBreak::parse(&cli.tiebreak)
        .ok_or_else(|| anyhow!("unknown tie-break `{}`", cli.tiebreak))?;
    let budget = cli.budget_ms.map(Duration::from_millis);
    let limits = {
        let limits = OptLimits::default();
        match budget {
            Some(b) => limits.with_budget(b),
            None => limits,
        }
    };
    match &cli.command {
        Command::Pack(args) => cmd_pack(&cli, args, tiebreak),
        Command::Bounds(args) => cmd_bounds(&cli, args),
        Command::Opt(args) => cmd_opt(&cli, args, &limits),
        Command::Gen(args) => cmd_gen(&cli, args),
        Command::Duel(args) => cmd_duel(&cli, args, tiebreak),
        Command::Ratio(args) => cmd_ratio(&cli, args, tiebreak, &limits),
        Command::Suite => cmd_suite(&cli, budget),
    }
}

fn read_instance(path: &PathBuf) -> Result<Instance> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_instance(&text).map_err(|e| anyhow!("{}: {e}", path.display()))
}

fn emit(cli: &Cli, value: &Value) -> Result<()> {
    let rendered = match cli.format.as_str() {
        "json" => serde_json::to_string_pretty(value)?,
        "csv" | "table" => bail!("this subcommand only emits json"),
        other => bail!("unknown format `{other}`"),
    };
    write_out(cli, &rendered)
}

fn write_out(cli: &Cli, rendered: &str) -> Result<()> {
    match &cli.out {
        Some(path) => std::fs::write(path, format!("{rendered}\n"))
            .with_context(|| format!("writing {}", path.display()))?,
        None => println!("{rendered}"),
    }
    Ok(())
}

fn cmd_pack(cli: &Cli, args: &PackArgs, tiebreak: TieBreak) -> Result<ExitCode> {
    let instance = read_instance(&args.input)?;
    let mut alg = algs::by_token(&args.alg, tiebreak).ok_or_else(|| {
        anyhow!(
            "unknown algorithm `{}` (one of {:?})",
            args.alg,
            algs::TOKENS
        )
    })?;
    let (packing, trace) = run(alg.as_mut(), &instance)?;
    validate_packing(&instance, &packing)
        .map_err(|v| anyhow!("internal error, packing invalid: {v}"))?;
    let value = json!({
        "meta": meta("pack", json!({
            "alg": args.alg,
            "tiebreak": tiebreak.token(),
            "input": args.input.display().to_string(),
        })),
        "items": instance.len(),
        "bins": packing.num_bins(),
        "pseudo_bins": if trace.steps.iter().any(|s| s.pseudo_bin.is_some()) {
            Some(trace.pseudo_bins_opened())
        } else {
            None
        },
        "packing": packing_json(&packing),
    });
    emit(cli, &value)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_bounds(cli: &Cli, args: &InputArgs) -> Result<ExitCode> {
    let instance = read_instance(&args.input)?;
    let report = bounds_report(&instance);
    let value = json!({
        "meta": meta("bounds", json!({ "input": args.input.display().to_string() })),
        "lb0": rat_str(&report.lb0),
        "lb0_bins": report.lb0_bins,
        "lb1": report.lb1,
        "witness": report.witness.as_ref().map(|w| json!({
            "start": w.start,
            "end": w.end,
            "color": w.color.token(),
        })),
        "combined": report.combined,
    });
    emit(cli, &value)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_opt(cli: &Cli, args: &OptArgs, limits: &OptLimits) -> Result<ExitCode> {
    let instance = read_instance(&args.input)?;
    let limits = match args.max_items {
        Some(n) => limits.clone().with_max_items(n),
        None => limits.clone(),
    };
    let result = opt(&instance, &limits);
    let value = json!({
        "meta": meta("opt", json!({
            "input": args.input.display().to_string(),
            "max_items": limits.max_items,
            "budget_ms": limits.budget.map(|b| b.as_millis() as u64),
        })),
        "bins": result.bins,
        "exact": result.exact,
        "nodes": result.nodes,
        "certificate": packing_json(&result.certificate),
    });
    emit(cli, &value)?;
    Ok(ExitCode::SUCCESS)
}

struct GeneratedFamily {
    instance: Instance,
    certificate: Packing,
    opt_upper_bound: usize,
    params: Value,
}

fn generate_family(
    family: &str,
    m: Option<u64>,
    n: Option<u64>,
    eps: Option<&str>,
) -> Result<GeneratedFamily> {
    let parse_eps = |eps: Option<&str>| -> Result<Option<BigRational>> {
        eps.map(|text| {
            report::parse_rat(text).ok_or_else(|| anyhow!("eps `{text}` is not a p/q rational"))
        })
        .transpose()
    };
    let need_n = n.ok_or_else(|| anyhow!("--n is required for {family}"));
    Ok(match family {
        "prop1-eps" | "prop1-wf" => {
            let variant = if family == "prop1-eps" {
                Prop1Variant::Eps
            } else {
                Prop1Variant::Wf
            };
            let m = m.ok_or_else(|| anyhow!("--m is required for {family}"))?;
            let gen = gen_prop1(variant, m, need_n?)?;
            GeneratedFamily {
                params: json!({ "m": gen.m, "n": gen.n, "eps": rat_str(&gen.eps) }),
                instance: gen.instance,
                certificate: gen.certificate,
                opt_upper_bound: gen.opt_upper_bound,
            }
        }
        "bap-zero" => {
            let n = u32::try_from(need_n?).map_err(|_| anyhow!("--n out of range"))?;
            let gen = match m {
                Some(m) => gen_bap_zero_with_params(n, m)?,
                None => gen_bap_zero(n)?,
            };
            GeneratedFamily {
                params: json!({ "n": gen.n, "m": gen.m }),
                instance: gen.instance,
                certificate: gen.certificate,
                opt_upper_bound: gen.opt_upper_bound,
            }
        }
        "bap-general" => {
            let n = u32::try_from(need_n?).map_err(|_| anyhow!("--n out of range"))?;
            let gen = gen_bap_general(n, parse_eps(eps)?)?;
            GeneratedFamily {
                params: json!({
                    "n": gen.n, "m": gen.m, "eps": rat_str(&gen.eps),
                    "guaranteed_bins": gen.guaranteed_bins,
                }),
                instance: gen.instance,
                certificate: gen.certificate,
                opt_upper_bound: gen.opt_upper_bound,
            }
        }
        "bap-3color" => {
            let n = u32::try_from(need_n?).map_err(|_| anyhow!("--n out of range"))?;
            let gen = gen_bap_3color(n, parse_eps(eps)?)?;
            GeneratedFamily {
                params: json!({
                    "n": gen.n, "m": gen.m, "eps": rat_str(&gen.eps),
                    "expected_bins": gen.expected_bins,
                }),
                instance: gen.instance,
                certificate: gen.certificate,
                opt_upper_bound: gen.opt_upper_bound,
            }
        }
        other => bail!("unknown family `{other}`"),
    })
}

fn gen_bap_zero_with_params(n: u32, m: u64) -> Result<cbp_core::adversary::BapZero> {
    Ok(cbp_core::adversary::gen_bap_zero_with(n, m)?)
}

fn cmd_gen(cli: &Cli, args: &GenArgs) -> Result<ExitCode> {
    let out = cli
        .out
        .as_ref()
        .ok_or_else(|| anyhow!("gen requires -o FILE for the instance"))?;
    let gen = generate_family(&args.family, args.m, args.n, args.eps.as_deref())?;
    std::fs::write(out, serialize_instance(&gen.instance))
        .with_context(|| format!("writing {}", out.display()))?;
    if let Some(cert_path) = &args.cert_out {
        std::fs::write(
            cert_path,
            serde_json::to_string_pretty(&packing_json(&gen.certificate))?,
        )
        .with_context(|| format!("writing {}", cert_path.display()))?;
    }
    let value = json!({
        "meta": meta("gen", json!({ "family": args.family, "params": gen.params })),
        "items": gen.instance.len(),
        "instance_file": out.display().to_string(),
        "certificate_bins": gen.certificate.num_bins(),
        "opt_upper_bound": gen.opt_upper_bound,
    });
    println!("{}", serde_json::to_string_pretty(&value)?);
    Ok(ExitCode::SUCCESS)
}

fn cmd_duel(cli: &Cli, args: &DuelArgs, tiebreak: TieBreak) -> Result<ExitCode> {
    let mut alg = algs::by_token(&args.alg, tiebreak)
        .ok_or_else(|| anyhow!("unknown algorithm `{}`", args.alg))?;
    let value = match args.adversary.as_str() {
        "lb2" => {
            let n = args.n.ok_or_else(|| anyhow!("lb2 needs --n"))?;
            let t = adversary_lb2(alg.as_mut(), n)?;
            json!({
                "meta": meta("duel", json!({
                    "adversary": "lb2", "alg": args.alg,
                    "tiebreak": tiebreak.token(), "n": n,
                })),
                "items": t.instance.len(),
                "bins_alg": t.bins_alg,
                "opt_upper_bound": t.certificate_bins,
                "ratio_lower_bound": rat_str(&t.ratio_lower_bound),
                "ratio_decimal": rat_decimal(&t.ratio_lower_bound, 6),
                "final_i": t.final_i,
                "final_j": t.final_j,
                "termination": match t.termination {
                    Lb2Termination::HugeWhites => "huge-whites-exhausted",
                    Lb2Termination::RegularWhites => "regular-whites-exhausted",
                },
                "lemma_checks": t.checks.iter().map(|c| json!({
                    "name": c.name, "passed": c.passed, "detail": c.detail,
                })).collect::<Vec<_>>(),
                "instance": instance_lines(&t.instance),
                "certificate": packing_json(&t.certificate),
            })
        }
        "zero3" => {
            let m = args.m.ok_or_else(|| anyhow!("zero3 needs --m"))?;
            let phases = args.phases.unwrap_or(12);
            let t = adversary_zero3(alg.as_mut(), m, phases)?;
            json!({
                "meta": meta("duel", json!({
                    "adversary": "zero3", "alg": args.alg,
                    "tiebreak": tiebreak.token(), "m": m, "phases": phases,
                })),
                "items": t.instance.len(),
                "bins_alg": t.bins_alg,
                "opt_upper_bound": t.certificate_bins,
                "ratio_lower_bound": rat_str(&t.ratio_lower_bound),
                "ratio_decimal": rat_decimal(&t.ratio_lower_bound, 6),
                "phase_colors": t.phase_colors.iter().map(|c| c.token().to_owned()).collect::<Vec<_>>(),
                "bins_history": t.bins_history,
                "lemma_checks": t.checks.iter().map(|c| json!({
                    "name": c.name, "passed": c.passed, "detail": c.detail,
                })).collect::<Vec<_>>(),
                "instance": instance_lines(&t.instance),
                "certificate": packing_json(&t.certificate),
            })
        }
        other => bail!("unknown adversary `{other}` (lb2 or zero3)"),
    };
    emit(cli, &value)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_ratio(
    cli: &Cli,
    args: &RatioArgs,
    tiebreak: TieBreak,
    limits: &OptLimits,
) -> Result<ExitCode> {
    let denominator = Denominator::parse(&args.denominator)
        .ok_or_else(|| anyhow!("unknown denominator `{}`", args.denominator))?;
    let mut runs = Vec::new();
    let spec_json;
    if let Some(input) = &args.input {
        let instance = read_instance(input)?;
        let mut alg = algs::by_token(&args.alg, tiebreak)
            .ok_or_else(|| anyhow!("unknown algorithm `{}`", args.alg))?;
        runs.push(ratio::ratio_run(
            input.display().to_string(),
            alg.as_mut(),
            &instance,
            denominator,
            None,
            limits,
        )?);
        spec_json = json!({ "source": "file", "input": input.display().to_string() });
    } else if let Some(family) = &args.family {
        let gen = generate_family(family, args.m, args.n, args.eps.as_deref())?;
        let mut alg = algs::by_token(&args.alg, tiebreak)
            .ok_or_else(|| anyhow!("unknown algorithm `{}`", args.alg))?;
        runs.push(ratio::ratio_run(
            family.clone(),
            alg.as_mut(),
            &gen.instance,
            denominator,
            Some(&gen.certificate),
            limits,
        )?);
        spec_json = json!({ "source": "family", "family": family, "params": gen.params });
    } else if let Some(count) = args.count {
        let palette_sizes: Vec<usize> = args
            .palette_sizes
            .split(',')
            .map(|t| {
                t.trim()
                    .parse()
                    .map_err(|_| anyhow!("bad palette size `{t}`"))
            })
            .collect::<Result<_>>()?;
        let sizes = SizeMode::parse(&args.sizes)
            .ok_or_else(|| anyhow!("unknown size mode `{}`", args.sizes))?;
        let mut spec = RandomSpec::new(count, args.max_n, palette_sizes, sizes, cli.seed);
        spec.max_denominator = args.max_den;
        spec_json = json!({ "source": "random", "spec": spec });
        for (idx, instance) in randgen::generate(&spec).iter().enumerate() {
            let mut alg = algs::by_token(&args.alg, tiebreak)
                .ok_or_else(|| anyhow!("unknown algorithm `{}`", args.alg))?;
            runs.push(ratio::ratio_run(
                format!("random-{idx:04}"),
                alg.as_mut(),
                instance,
                denominator,
                None,
                limits,
            )?);
        }
    } else {
        bail!("ratio needs one of --input, --family, or --count");
    }
    let report = ratio::assemble_report(
        meta(
            "ratio",
            json!({
                "alg": args.alg,
                "tiebreak": tiebreak.token(),
                "denominator": args.denominator,
                "source": spec_json,
            }),
        ),
        runs,
    );
    match cli.format.as_str() {
        "json" => write_out(
            cli,
            &serde_json::to_string_pretty(&ratio::to_json(&report))?,
        )?,
        "csv" => write_out(cli, ratio::to_csv(&report).trim_end())?,
        "table" => write_out(cli, ratio::to_table(&report).trim_end())?,
        other => bail!("unknown format `{other}`"),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_suite(cli: &Cli, budget: Option<Duration>) -> Result<ExitCode> {
    let config = suite::SuiteConfig {
        oracle_budget: budget,
    };
    let results = suite::run_all(&config);
    if cli.format == "json" {
        let value = json!({
            "meta": meta("suite", json!({ "budget_ms": budget.map(|b| b.as_millis() as u64) })),
            "criteria": results.iter().map(|r| json!({
                "id": r.id,
                "name": r.name,
                "status": r.status(),
                "skipped": r.skipped,
                "failures": r.failures,
                "details": r.details,
                "millis": r.millis as u64,
            })).collect::<Vec<_>>(),
            "passed": results.iter().all(|r| r.passed || r.skipped.is_some()),
        });
        write_out(cli, &serde_json::to_string_pretty(&value)?)?;
    } else if cli.format == "csv" {
        let mut out = String::from("id,name,status,millis\n");
        for result in &results {
            out.push_str(&format!(
                "{},{},{},{}\n",
                result.id,
                result.name,
                result.status(),
                result.millis
            ));
        }
        write_out(cli, out.trim_end())?;
    } else if cli.format == "table" {
        let mut out = String::new();
        for result in &results {
            out.push_str(&result.summary_line());
            out.push('\n');
            for failure in &result.failures {
                out.push_str(&format!("     ! {failure}\n"));
            }
            for detail in &result.details {
                out.push_str(&format!("     - {detail}\n"));
            }
        }
        let failed = results
            .iter()
            .filter(|r| !r.passed && r.skipped.is_none())
            .count();
        let skipped = results.iter().filter(|r| r.skipped.is_some()).count();
        out.push_str(&format!(
            "{} criteria: {} passed, {failed} failed, {skipped} skipped\n",
            results.len(),
            results.iter().filter(|r| r.passed).count(),
        ));
        write_out(cli, out.trim_end())?;
    } else {
        bail!("unknown format `{}`", cli.format);
    }
    if results.iter().any(|r| !r.passed && r.skipped.is_none()) {
        Ok(ExitCode::from(1))
    } else {
        Ok(ExitCode::SUCCESS)
    }
}
