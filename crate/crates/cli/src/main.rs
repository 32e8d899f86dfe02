mod output;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::json;

use verlinde_core::charpoly::{p_names, p_poly, q_names, q_poly};
use verlinde_core::fusion::{quantum_dims, smatrix, FusionCategory, FusionRingElement};
use verlinde_core::ideals::{fusion_ideal, ik_ideal, presentation_basis, StandardMonomials};
use verlinde_core::ktheory::{
    bratteli, invertibility_report, invertibility_row, nullity_pis, nullity_row, riesz_counterexample_search,
    ses_rank_checks, sigma_of, stable_support, tower_generator, NullityTable, StepRule,
};
use verlinde_core::lie::level;
use verlinde_core::poly::MonomialOrder;
use verlinde_core::report::{Aggregate, Report};
use verlinde_core::suites::{parse_weight, suite_tasks, SUITES};
use verlinde_core::{Config, Error, Extended, GroupId, IntPoly, Precision, Real, Weight};

use output::{emit_report, Failure};

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    Dot,
}

#[derive(Parser)]
#[command(name = "verlinde", version, about = "Fusion rings, Verlinde rings and ordered K0 of WZW categories")]
struct Cli {
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// double or extended
    #[arg(long, env = "VERLINDE_PRECISION", global = true)]
    precision: Option<String>,
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 0, global = true)]
    jobs: usize,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone)]
struct GroupLevel {
    #[arg(long, short)]
    group: String,
    #[arg(long, short)]
    level: i64,
}

#[derive(Args, Clone)]
struct GroupWeight {
    #[arg(long, short)]
    group: String,
    #[arg(long, short)]
    weight: String,
}

#[derive(Subcommand)]
enum Cmd {
    /// Simple objects of Rep_k(G) with quantum dimensions.
    Simples(GroupLevel),
    /// Fusion product of two simples.
    Fuse {
        #[command(flatten)]
        gl: GroupLevel,
        a: String,
        b: String,
    },
    /// Kac-Peterson S-matrix.
    Smatrix(GroupLevel),
    /// Q_lambda in the fundamental classes.
    Qpoly(GroupWeight),
    /// P_lambda after the change of variables.
    Ppoly(GroupWeight),
    /// Polynomial ideals.
    Ideal {
        #[command(subcommand)]
        cmd: IdealCmd,
    },
    /// Ordered K0 summary of the tower generated by the standard simple.
    K0(GroupLevel),
    /// Bratteli diagram of a tower.
    Bratteli {
        #[command(flatten)]
        gl: GroupLevel,
        /// Generating simple; defaults to the tower generator of the group.
        #[arg(long)]
        pi: Option<String>,
        #[arg(long, default_value = "uniform")]
        rule: String,
        #[arg(long, default_value_t = 4)]
        depth: usize,
    },
    /// Verification suites.
    Verify {
        /// One of tables, fusion, ideals, psi, identities, experiments-small.
        suite_pos: Option<String>,
        #[arg(long)]
        suite: Option<String>,
        /// Level for the psi suite.
        #[arg(long)]
        k: Option<i64>,
    },
    /// Rank and determinant sweeps.
    Experiment {
        #[command(subcommand)]
        cmd: ExperimentCmd,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum IdealKindArg {
    Fusion,
    Ik,
}

#[derive(Subcommand)]
enum IdealCmd {
    /// Reduced Groebner basis and standard monomials.
    Gb {
        #[command(flatten)]
        gl: GroupLevel,
        #[arg(long, value_enum, default_value = "fusion")]
        kind: IdealKindArg,
        #[arg(long, default_value = "grevlex")]
        order: String,
    },
}

#[derive(Subcommand)]
enum ExperimentCmd {
    Nullity {
        #[arg(long, short)]
        group: String,
        #[arg(long, default_value_t = 100)]
        kmax: i64,
    },
    Ses {
        #[arg(long, short)]
        group: String,
        #[arg(long, default_value_t = 30)]
        kmax: i64,
    },
    Invertibility {
        #[arg(long, default_value_t = 50)]
        kmax: i64,
    },
    Riesz {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        bound: i64,
    },
}

type Out = Result<String, Failure>;

fn group(s: &str) -> Result<GroupId, Failure> {
    s.parse().map_err(|e: Error| Failure::usage(format!("--group: {e}")))
}

fn weight(g: GroupId, s: &str, flag: &str) -> Result<Weight, Failure> {
    parse_weight(g, s).map_err(|e| Failure::usage(format!("{flag}: {e}")))
}

fn unsupported(cmd: &str, f: Format) -> Failure {
    Failure::usage(format!("--format {f:?} is not supported by {cmd}").to_lowercase())
}

fn category(gl: &GroupLevel) -> Result<(GroupId, std::sync::Arc<FusionCategory>), Failure> {
    let g = group(&gl.group)?;
    if gl.level < 1 {
        return Err(Failure::usage(format!("--level must be positive, got {}", gl.level)));
    }
    Ok((g, FusionCategory::wzw(g, gl.level)?))
}

fn simples(gl: &GroupLevel, f: Format) -> Out {
    let (g, cat) = category(gl)?;
    let d = quantum_dims::<Extended>(&cat);
    let rows: Vec<(Weight, i64, f64)> = cat
        .weights()
        .iter()
        .zip(&d)
        .map(|(w, x)| Ok((*w, level(g, w)?, x.to_f64_lossy())))
        .collect::<Result<_, Error>>()?;
    Ok(match f {
        Format::Text => rows.iter().map(|(w, _, _)| format!("{w}\n")).collect(),
        Format::Json => output::json(&json!(rows
            .iter()
            .map(|(w, l, x)| json!({"weight": w, "level": l, "qdim": x}))
            .collect::<Vec<_>>())),
        Format::Csv => {
            let mut s = String::from("index,weight,level,qdim\n");
            for (i, (w, l, x)) in rows.iter().enumerate() {
                s.push_str(&format!("{i},\"{w}\",{l},{x:.15}\n"));
            }
            s
        }
        Format::Dot => return Err(unsupported("simples", f)),
    })
}

fn fuse(gl: &GroupLevel, a: &str, b: &str, f: Format) -> Out {
    let (g, cat) = category(gl)?;
    let ia = cat.weight_index(&weight(g, a, "A")?)?;
    let ib = cat.weight_index(&weight(g, b, "B")?)?;
    let p = FusionRingElement::basis(&cat, ia).mul(&FusionRingElement::basis(&cat, ib))?;
    Ok(match f {
        Format::Text => format!("{p}\n"),
        Format::Json | Format::Csv => {
            let terms: Vec<(Weight, String)> =
                p.support().iter().map(|&i| (cat.weights()[i], p.coeff(i).to_string())).collect();
            if f == Format::Json {
                output::json(&json!(terms.iter().map(|(w, m)| json!({"weight": w, "mult": m})).collect::<Vec<_>>()))
            } else {
                let mut s = String::from("weight,mult\n");
                for (w, m) in terms {
                    s.push_str(&format!("\"{w}\",{m}\n"));
                }
                s
            }
        }
        Format::Dot => return Err(unsupported("fuse", f)),
    })
}

fn smatrix_out(gl: &GroupLevel, cfg: &Config, f: Format) -> Out {
    let g = group(&gl.group)?;
    let rows = match cfg.precision {
        Precision::Double => smatrix::<f64>(g, gl.level, cfg)?.to_rows_f64(),
        Precision::Extended => smatrix::<Extended>(g, gl.level, cfg)?.to_rows_f64(),
    };
    let cell = |z: &[f64; 2]| format!("{:.15}{:+.15}i", z[0], z[1]);
    Ok(match f {
        Format::Json => output::json(&json!({"group": g.name(), "level": gl.level, "entries": rows})),
        Format::Csv | Format::Text => {
            let sep = if f == Format::Csv { "," } else { " " };
            rows.iter()
                .map(|r| r.iter().map(cell).collect::<Vec<_>>().join(sep) + "\n")
                .collect()
        }
        Format::Dot => return Err(unsupported("smatrix", f)),
    })
}

fn poly_out(gw: &GroupWeight, p: bool, f: Format) -> Out {
    let g = group(&gw.group)?;
    let w = weight(g, &gw.weight, "--weight")?;
    let (poly, names) = if p { (p_poly(g, &w)?, p_names(g)) } else { (q_poly(g, &w)?, q_names(g)) };
    Ok(match f {
        Format::Text => format!("{}\n", poly.render(names)),
        Format::Json => output::json(&json!({"weight": w, "vars": names, "poly": poly.render(names), "terms": poly.to_json()})),
        _ => return Err(unsupported(if p { "ppoly" } else { "qpoly" }, f)),
    })
}

fn ideal_gb(gl: &GroupLevel, kind: IdealKindArg, order: &str, f: Format) -> Out {
    let g = group(&gl.group)?;
    let order: MonomialOrder = order.parse().map_err(|e: Error| Failure::usage(format!("--order: {e}")))?;
    let p = match kind {
        IdealKindArg::Fusion => fusion_ideal(g, gl.level)?,
        IdealKindArg::Ik => ik_ideal(g, gl.level)?,
    };
    let names = p.var_names();
    let gb = presentation_basis(&p, order)?;
    let gens: Vec<String> = gb.generators().iter().map(|q| q.render_ordered(names, order)).collect();
    let std: Option<Vec<String>> = match gb.standard_monomials() {
        StandardMonomials::Finite(v) => Some(
            v.iter()
                .map(|e| IntPoly::from_i64(names.len(), &[(*e, 1)]).render(names))
                .collect(),
        ),
        StandardMonomials::Infinite => None,
    };
    Ok(match f {
        Format::Text => {
            let mut s: String = gens.iter().map(|x| format!("{x}\n")).collect();
            match &std {
                Some(v) => s.push_str(&format!("standard monomials ({}): {}\n", v.len(), v.join(", "))),
                None => s.push_str("standard monomials: infinitely many\n"),
            }
            s
        }
        Format::Json => output::json(&json!({
            "ideal": p.name, "order": format!("{order:?}").to_lowercase(), "weights": p.weights,
            "basis": gens, "standard_monomials": std, "point": p.point,
        })),
        _ => return Err(unsupported("ideal gb", f)),
    })
}

fn k0(gl: &GroupLevel, cfg: &Config, f: Format) -> Out {
    let (g, cat) = category(gl)?;
    let pi = cat.weight_index(&tower_generator(g))?;
    let sigma = sigma_of(&cat, pi);
    let (stable, reached) = stable_support(&cat, &sigma)?;
    let d = bratteli(&cat, pi, StepRule::Uniform, reached + 1)?;
    let rank = d.limit_rank(cfg.seed)?;
    let ideal = ik_ideal(g, gl.level)?;
    let gb = presentation_basis(&ideal, MonomialOrder::Grevlex)?;
    let dim = gb.standard_monomials().count();
    let pi_w = tower_generator(g);
    let stable_w: Vec<String> = stable.iter().map(|&i| cat.labels()[i].clone()).collect();
    let v = json!({
        "group": g.name(), "level": gl.level, "pi": pi_w, "sigma": sigma.to_string(),
        "stable_support": stable_w, "stabilises_at": reached, "limit_rank": rank,
        "quotient": ideal.name, "quotient_dim": dim, "point": ideal.point,
    });
    Ok(match f {
        Format::Json => output::json(&v),
        Format::Text => format!(
            "sigma = {sigma}\nstable support ({} simples, n={reached}): {}\nlimit rank {rank}\n{} has dimension {}\npoint {:?}\n",
            stable_w.len(),
            stable_w.join(" "),
            ideal.name,
            dim.map_or("infinite".into(), |d| d.to_string()),
            ideal.point
        ),
        _ => return Err(unsupported("k0", f)),
    })
}

fn bratteli_out(gl: &GroupLevel, pi: &Option<String>, rule: &str, depth: usize, f: Format) -> Out {
    let (g, cat) = category(gl)?;
    let w = match pi {
        Some(s) => weight(g, s, "--pi")?,
        None => tower_generator(g),
    };
    let rule: StepRule = rule.parse().map_err(|e: Error| Failure::usage(format!("--rule: {e}")))?;
    let d = bratteli(&cat, cat.weight_index(&w)?, rule, depth)?;
    d.validate()?;
    Ok(match f {
        Format::Dot => d.to_dot(),
        Format::Json => output::json(&d.to_json()),
        Format::Text => d
            .levels
            .iter()
            .enumerate()
            .map(|(m, lv)| format!("{m}: {}\n", lv.iter().map(|&i| cat.labels()[i].clone()).collect::<Vec<_>>().join(" ")))
            .collect(),
        Format::Csv => return Err(unsupported("bratteli", f)),
    })
}

fn verify(suite: Option<String>, k: Option<i64>, cfg: &Config, f: Format) -> Out {
    let names: Vec<String> = match suite {
        Some(s) => vec![s],
        None => SUITES.iter().map(|s| s.to_string()).collect(),
    };
    let mut reports = Vec::new();
    for name in names {
        let Some(tasks) = suite_tasks(&name, k, cfg) else {
            return Err(Failure::usage(format!("--suite: unknown suite '{name}' (expected one of {})", SUITES.join(", "))));
        };
        let t = Instant::now();
        let rs: Vec<Report> = tasks.par_iter().map(|t| t.run()).collect();
        let mut r = Report::new(name.clone(), suite_anchor(&name));
        for x in rs {
            r.absorb(x);
        }
        eprintln!("{name}: {} in {:.2?}", if r.passed { "pass" } else { "FAIL" }, t.elapsed());
        reports.push(r);
    }
    emit_report(Aggregate::new(reports), f)
}

fn suite_anchor(name: &str) -> &'static str {
    match name {
        "tables" => "golden Q_lambda and P_lambda tables for SU(3) and the lemmas on their structure",
        "fusion" => "Kac-Walton = Verlinde, S-matrix spectra, fusion varieties",
        "ideals" => "Gepner presentation Ver_k(G) = Z[x]/J_k(G) and the generators of I_k",
        "psi" => "psi-isomorphism for SU(3) and the quotient theorems K0 = Z[s,t]/I_k",
        "identities" => "Verlinde-ring identities and invertibility for SU(2), Riesz failure, S3 warm-up",
        _ => "nullity patterns of fundamental fusion matrices for Sp(4) and G2",
    }
}

fn experiment(cmd: &ExperimentCmd, cfg: &Config, f: Format) -> Out {
    match cmd {
        ExperimentCmd::Nullity { group: gs, kmax } => {
            let g = group(gs)?;
            if !matches!(g, GroupId::C2 | GroupId::G2) {
                return Err(Failure::usage(format!("--group: nullity sweeps are for sp4 and g2, not {}", g.name())));
            }
            let jobs: Vec<(i64, Weight)> = (1..=*kmax)
                .flat_map(|k| nullity_pis(g).into_iter().map(move |p| (k, p)))
                .filter(|(k, p)| level(g, p).map_or(false, |l| l <= *k))
                .collect();
            let rows = jobs
                .par_iter()
                .map(|(k, p)| nullity_row(g, p, *k, cfg.seed))
                .collect::<Result<Vec<_>, Error>>()?;
            let table = NullityTable::from_rows(g, rows);
            match f {
                Format::Csv => {
                    if table.all_match() {
                        Ok(table.to_csv())
                    } else {
                        Err(Failure::Checks(output::json(&json!(Aggregate::new(vec![table.to_report()])))))
                    }
                }
                Format::Json | Format::Text => {
                    if f == Format::Json {
                        let ok = table.all_match();
                        let s = output::json(&json!({"passed": ok, "group": g.name(), "rows": table.rows}));
                        if ok { Ok(s) } else { Err(Failure::Checks(s)) }
                    } else {
                        emit_report(Aggregate::new(vec![table.to_report()]), f)
                    }
                }
                Format::Dot => Err(unsupported("experiment nullity", f)),
            }
        }
        ExperimentCmd::Ses { group: gs, kmax } => {
            let g = group(gs)?;
            let r = ses_rank_checks(g, *kmax, cfg.seed).map_err(|e| match e {
                Error::Unsupported(m) => Failure::usage(format!("--group: {m}")),
                e => e.into(),
            })?;
            emit_report(Aggregate::new(vec![r]), f)
        }
        ExperimentCmd::Invertibility { kmax } => {
            let rows = (1..=*kmax).into_par_iter().map(invertibility_row).collect::<Result<Vec<_>, Error>>()?;
            emit_report(Aggregate::new(vec![invertibility_report(rows)]), f)
        }
        ExperimentCmd::Riesz { n, bound } => {
            if *n < 2 {
                return Err(Failure::usage(format!("--n must be at least 2, got {n}")));
            }
            emit_report(Aggregate::new(vec![riesz_counterexample_search(*n, *bound)?]), f)
        }
    }
}

fn config(cli: &Cli) -> Result<Config, Failure> {
    let mut cfg = Config::default();
    if let Some(s) = cli.seed {
        cfg.seed = s;
    }
    if let Some(p) = &cli.precision {
        cfg.precision = p.parse().map_err(|e: Error| Failure::usage(format!("--precision: {e}")))?;
    }
    Ok(cfg)
}

fn run(cli: Cli) -> Out {
    let cfg = config(&cli)?;
    if cli.jobs > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cli.jobs)
            .build_global()
            .map_err(|e| Failure::usage(format!("--jobs: {e}")))?;
    }
    let f = cli.format;
    match &cli.cmd {
        Cmd::Simples(gl) => simples(gl, f),
        Cmd::Fuse { gl, a, b } => fuse(gl, a, b, f),
        Cmd::Smatrix(gl) => smatrix_out(gl, &cfg, f),
        Cmd::Qpoly(gw) => poly_out(gw, false, f),
        Cmd::Ppoly(gw) => poly_out(gw, true, f),
        Cmd::Ideal { cmd: IdealCmd::Gb { gl, kind, order } } => ideal_gb(gl, *kind, order, f),
        Cmd::K0(gl) => k0(gl, &cfg, f),
        Cmd::Bratteli { gl, pi, rule, depth } => bratteli_out(gl, pi, rule, *depth, f),
        Cmd::Verify { suite_pos, suite, k } => {
            if suite_pos.is_some() && suite.is_some() {
                return Err(Failure::usage("give the suite either positionally or with --suite, not both".into()));
            }
            verify(suite.clone().or(suite_pos.clone()), *k, &cfg, f)
        }
        Cmd::Experiment { cmd } => experiment(cmd, &cfg, f),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(s) => {
            print!("{s}");
            ExitCode::SUCCESS
        }
        Err(e) => e.report(),
    }
}
