use std::error::Error as StdError;
use std::fs;

use neutro_core::decision::{classify_offset, Dependence};
use neutro_core::operators::{negate_set, setwise};
use neutro_core::transforms::{normalize_elementwise, sup_transform};
use neutro_core::{
    adjacency_validate, analytic_volume, estimate_family_volume, n_ways, neutrosophify, nm_add, nm_mul,
    offset_degree, path_influence, refined_hesitancy, refined_refusal, run_exhibit, three_ways, validate_offset,
    validate_refined, AdjacencyKind, ConceptMapping, ElementSetDocument, FamilyKind, FamilySpec, NeutroMatrix,
    NormPair, OffsetBounds, OperatorSystem, OverflowReading, RefinedComponents, RefinedFamilySpec, RefinedKind, SetOp,
    SystemKind, Triplet, EXHIBITS,
};
use serde_json::{json, Value};

use crate::report::{digest, num, triple, CheckLine, RunReport};
use crate::{
    AdjacencyName, Cli, Command, DecideCommand, DemoArgs, FamilyArgs, MatrixCommand, NormsName, OpArgs, OpName,
    OverflowName, RefinedAction, RefinedArgs, SystemName, TransformArgs, TransformKind, ValidateArgs, VolumeArgs,
};

pub type CliResult<T> = Result<T, Box<dyn StdError>>;

struct Output {
    inputs: Vec<Vec<u8>>,
    outputs: Value,
    checks: Vec<CheckLine>,
    table: Vec<String>,
}

impl Output {
    fn new(inputs: Vec<Vec<u8>>) -> Self {
        Output { inputs, outputs: Value::Null, checks: Vec::new(), table: Vec::new() }
    }
}

pub fn run(cli: &Cli, argv: Vec<String>) -> CliResult<RunReport> {
    if !(cli.tolerance >= 0.0) {
        return Err(format!("--tolerance must be >= 0, got {}", cli.tolerance).into());
    }
    let out = match &cli.command {
        Command::Validate(a) => validate_cmd(cli, a)?,
        Command::Op(a) => op_cmd(cli, a)?,
        Command::Transform(a) => transform_cmd(cli, a)?,
        Command::Demo(a) => demo_cmd(cli, a)?,
        Command::Volume(a) => volume_cmd(cli, a)?,
        Command::Refined(a) => refined_cmd(cli, a)?,
        Command::Matrix(a) => matrix_cmd(&a.command)?,
        Command::Decide(a) => decide_cmd(cli, &a.command)?,
    };
    let command: Vec<String> = argv.into_iter().skip(1).collect();
    // commands without file inputs hash their own argument list
    let inputs: Vec<&[u8]> = if out.inputs.is_empty() {
        command.iter().map(|s| s.as_bytes()).collect()
    } else {
        out.inputs.iter().map(Vec::as_slice).collect()
    };
    Ok(RunReport {
        inputs_digest: digest(&inputs),
        command,
        tolerance: cli.tolerance,
        round: cli.round,
        seed: cli.seed,
        outputs: out.outputs,
        checks: out.checks,
        table: out.table,
    })
}

fn read(path: &str) -> CliResult<Vec<u8>> {
    fs::read(path).map_err(|e| format!("cannot read {path}: {e}").into())
}

fn load_doc(path: &str, bytes: &[u8]) -> CliResult<ElementSetDocument> {
    let text = std::str::from_utf8(bytes).map_err(|e| format!("{path}: {e}"))?;
    ElementSetDocument::parse(text).map_err(|e| format!("{path}: {e}").into())
}

fn family_spec(name: &str, exponent: Option<f64>) -> CliResult<FamilySpec> {
    let kind: FamilyKind = name.parse()?;
    Ok(match exponent {
        Some(e) => FamilySpec::with_exponent(kind, e)?,
        None => FamilySpec::new(kind)?,
    })
}

fn family_override(args: &FamilyArgs) -> CliResult<Option<FamilySpec>> {
    match &args.family {
        Some(name) => Ok(Some(family_spec(name, args.exponent)?)),
        None if args.exponent.is_some() => Err("--exponent needs --family".into()),
        None => Ok(None),
    }
}

fn validate_cmd(cli: &Cli, args: &ValidateArgs) -> CliResult<Output> {
    let bytes = read(&args.file)?;
    let doc = load_doc(&args.file, &bytes)?;
    let family = family_override(&args.family)?.unwrap_or(doc.family);
    let reports = doc.validate_elements(Some(&family))?;
    let mut out = Output::new(vec![bytes]);
    out.table.push(format!("family {family}"));
    for (r, c) in reports.iter().zip(&doc.components) {
        let verdict = if r.report.valid { "valid" } else { "INVALID" };
        out.table.push(format!(
            "{:<8} {:<24} {:<8} {} (bound {})",
            r.element,
            triple(c, cli.round),
            verdict,
            num(r.report.constraint_value, cli.round),
            num(r.report.bound, None)
        ));
        out.checks.push(CheckLine {
            label: format!("{} under {family}", r.element),
            passed: r.report.valid,
            detail: Some(r.report.diagnostics.clone()),
        });
    }
    out.outputs = json!({ "family": family, "reports": reports });
    Ok(out)
}

fn system(args: &OpArgs) -> OperatorSystem {
    let kind = match args.system {
        SystemName::Ns => SystemKind::Ns,
        SystemName::Ifs => SystemKind::Ifs,
        SystemName::IifsMaxI => SystemKind::IifsMaxI,
        SystemName::IifsMinI => SystemKind::IifsMinI,
    };
    let norms = match args.norms {
        NormsName::MinMax => NormPair::MIN_MAX,
        NormsName::Product => NormPair::PRODUCT,
    };
    let overflow = match args.overflow {
        OverflowName::OperatorOutput => OverflowReading::OperatorOutput,
        OverflowName::PrintedNumerator => OverflowReading::PrintedNumerator,
    };
    OperatorSystem::new(kind).with_norms(norms).with_overflow(overflow)
}

fn write_output(path: &Option<String>, doc: &ElementSetDocument) -> CliResult<()> {
    if let Some(p) = path {
        fs::write(p, doc.to_json() + "\n").map_err(|e| format!("cannot write {p}: {e}"))?;
    }
    Ok(())
}

fn op_cmd(cli: &Cli, args: &OpArgs) -> CliResult<Output> {
    let sys = system(args);
    let a_bytes = read(&args.a)?;
    let a = load_doc(&args.a, &a_bytes)?.to_set()?;
    let mut inputs = vec![a_bytes];
    let (result, b) = match (args.op, &args.b) {
        (OpName::Not, None) => (negate_set(&a, &sys)?, None),
        (OpName::Not, Some(_)) => return Err("`not` takes a single document".into()),
        (_, None) => return Err("binary operator needs two documents".into()),
        (op, Some(path)) => {
            let bytes = read(path)?;
            let b = load_doc(path, &bytes)?.to_set()?;
            inputs.push(bytes);
            let op = match op {
                OpName::And => SetOp::And,
                OpName::Or => SetOp::Or,
                _ => SetOp::Implies,
            };
            (setwise(&a, &b, op, &sys)?, Some(b))
        }
    };
    let doc = ElementSetDocument::from_set(&result);
    write_output(&args.output, &doc)?;
    let mut out = Output::new(inputs);
    let norms = match args.norms {
        NormsName::MinMax => "min/max",
        NormsName::Product => "product/probabilistic sum",
    };
    out.table.push(format!("{:?} under {} ({norms})", args.op, sys.family()));
    out.table.push(format!("{:<8} {:<28} {:<28} {:<28}", "element", "a", "b", "result"));
    for (k, (name, x)) in result.iter().enumerate() {
        let left = triple(&a.components()[k].to_array(), cli.round);
        let right = b.as_ref().map_or("-".to_string(), |b| triple(&b.components()[k].to_array(), cli.round));
        out.table.push(format!("{name:<8} {left:<28} {right:<28} {:<28}", triple(&x.to_array(), cli.round)));
    }
    out.outputs = serde_json::to_value(&doc)?;
    Ok(out)
}

fn transform_cmd(cli: &Cli, args: &TransformArgs) -> CliResult<Output> {
    let bytes = read(&args.file)?;
    let set = load_doc(&args.file, &bytes)?.to_set()?;
    let mut out = Output::new(vec![bytes]);
    let (result, extra) = match args.kind {
        TransformKind::Sup => {
            let t = sup_transform(&set)?;
            out.table.push(format!("denominator {}", num(t.denominator, cli.round)));
            let refusals: Vec<f64> = t.refusals.iter().map(|r| r.get()).collect();
            (t.set, json!({ "denominator": t.denominator, "refusals": refusals }))
        }
        TransformKind::Normalize => (normalize_elementwise(&set)?, Value::Null),
    };
    for (name, x) in result.iter() {
        out.table.push(format!("{name:<8} {}", triple(&x.to_array(), cli.round)));
    }
    let doc = ElementSetDocument::from_set(&result);
    write_output(&args.output, &doc)?;
    out.outputs = json!({ "document": doc, "details": extra });
    Ok(out)
}

fn demo_cmd(cli: &Cli, args: &DemoArgs) -> CliResult<Output> {
    let mut out = Output::new(Vec::new());
    if args.list {
        out.table.extend(EXHIBITS.iter().map(|s| s.to_string()));
        out.outputs = json!(EXHIBITS);
        return Ok(out);
    }
    let names: Vec<&str> = match (&args.name, args.all) {
        (Some(n), false) => vec![n.as_str()],
        (None, true) => EXHIBITS.to_vec(),
        _ => return Err(format!("give an exhibit name or --all; known: {}", EXHIBITS.join(", ")).into()),
    };
    let mut reports = Vec::new();
    for name in names {
        let r = run_exhibit(name)?.with_printed_tolerance(cli.tolerance);
        let verdict = if r.passed() { "ok" } else { "MISMATCH" };
        out.table.push(format!("{:<26} {:<9} {}", r.name, verdict, r.title));
        for c in &r.checks {
            out.checks.push(CheckLine {
                label: format!("{}: {}", r.name, c.label),
                passed: c.passed,
                detail: Some(format!(
                    "expected {} got {}",
                    serde_json::to_string(&c.expected)?,
                    serde_json::to_string(&c.actual)?
                )),
            });
        }
        reports.push(r);
    }
    out.outputs = serde_json::to_value(&reports)?;
    Ok(out)
}

fn volume_cmd(cli: &Cli, args: &VolumeArgs) -> CliResult<Output> {
    let fam = family_spec(&args.family, args.exponent)?;
    let est = estimate_family_volume(&fam, args.samples, cli.seed)?;
    let mut out = Output::new(Vec::new());
    out.table.push(format!("family     {fam}"));
    out.table.push(format!("samples    {} (seed {})", est.samples, est.seed));
    out.table.push(format!("estimate   {}", num(est.estimate, cli.round)));
    out.table.push(format!("std error  {}", num(est.std_error, cli.round)));
    out.table.push(format!("analytic   {}", num(analytic_volume(&fam), cli.round)));
    if let Some(z) = est.z_score() {
        out.table.push(format!("z-score    {}", num(z, cli.round)));
    }
    out.outputs = json!({ "estimate": est, "z_score": est.z_score() });
    Ok(out)
}

fn refined_cmd(cli: &Cli, args: &RefinedArgs) -> CliResult<Output> {
    let kind: RefinedKind = args.family.parse()?;
    let fam = match args.exponent {
        Some(e) => RefinedFamilySpec::with_exponent(kind, e)?,
        None => RefinedFamilySpec::new(kind),
    };
    let c = RefinedComponents::scalar(&args.t, &args.i, &args.f)?;
    let mut out = Output::new(Vec::new());
    match args.action {
        RefinedAction::Validate => {
            let r = validate_refined(&c, &fam)?;
            out.table.push(format!("{fam}: {}", r.diagnostics));
            out.checks.push(CheckLine { label: format!("{fam}"), passed: r.valid, detail: Some(r.diagnostics.clone()) });
            out.outputs = serde_json::to_value(&r)?;
        }
        RefinedAction::Hesitancy => {
            let h = refined_hesitancy(&c, &fam)?.get();
            out.table.push(format!("hesitancy {}", num(h, cli.round)));
            out.outputs = json!({ "hesitancy": h });
        }
        RefinedAction::Refusal => {
            let r = refined_refusal(&c, &fam)?;
            out.table.push(format!("refusal [{}, {}]", num(r.lo(), cli.round), num(r.hi(), cli.round)));
            out.outputs = json!({ "refusal": [r.lo(), r.hi()] });
        }
    }
    Ok(out)
}

fn read_grid(path: &str) -> CliResult<(Vec<u8>, NeutroMatrix)> {
    let bytes = read(path)?;
    let text = std::str::from_utf8(&bytes).map_err(|e| format!("{path}: {e}"))?;
    let m = NeutroMatrix::parse_grid(text).map_err(|e| format!("{path}: {e}"))?;
    Ok((bytes, m))
}

fn parse_edge(s: &str) -> CliResult<Triplet> {
    let v: Vec<f64> = s
        .split(',')
        .map(|x| x.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|e| format!("edge '{s}': {e}"))?;
    match v.as_slice() {
        &[t, i, f] => Ok(Triplet::new(t, i, f)?),
        _ => Err(format!("edge '{s}' needs three values t,i,f").into()),
    }
}

fn matrix_cmd(cmd: &MatrixCommand) -> CliResult<Output> {
    match cmd {
        MatrixCommand::Add { a, b } | MatrixCommand::Mul { a, b } => {
            let (ab, ma) = read_grid(a)?;
            let (bb, mb) = read_grid(b)?;
            let m = if matches!(cmd, MatrixCommand::Add { .. }) { nm_add(&ma, &mb)? } else { nm_mul(&ma, &mb)? };
            let mut out = Output::new(vec![ab, bb]);
            let grid = m.to_grid();
            out.table.extend(grid.lines().map(str::to_string));
            out.outputs = json!({ "grid": grid, "shape": m.shape() });
            Ok(out)
        }
        MatrixCommand::Adjacency { file, kind } => {
            let (bytes, m) = read_grid(file)?;
            let kind = match kind {
                AdjacencyName::Graph => AdjacencyKind::Graph,
                AdjacencyName::CognitiveMap => AdjacencyKind::CognitiveMap,
            };
            let mut out = Output::new(vec![bytes]);
            match adjacency_validate(&m, kind) {
                Ok(r) => {
                    out.table.push(format!(
                        "{:?} {}x{}: {} connections, {} inverse, {} indeterminate, symmetric {}",
                        r.kind, r.size, r.size, r.connections, r.inverse_connections, r.indeterminate, r.symmetric
                    ));
                    out.checks.push(CheckLine { label: format!("{kind:?} alphabet"), passed: true, detail: None });
                    out.outputs = serde_json::to_value(&r)?;
                }
                Err(e @ neutro_core::Error::InvalidEntry { .. }) => {
                    out.table.push(e.to_string());
                    out.checks.push(CheckLine {
                        label: format!("{kind:?} alphabet"),
                        passed: false,
                        detail: Some(e.to_string()),
                    });
                    out.outputs = json!({ "error": e.to_string() });
                }
                Err(e) => return Err(e.into()),
            }
            Ok(out)
        }
        MatrixCommand::Path { edges } => {
            let edges = edges.iter().map(|s| parse_edge(s)).collect::<CliResult<Vec<_>>>()?;
            let r = path_influence(&edges)?;
            let mut out = Output::new(Vec::new());
            out.table.push(format!("path value {r}"));
            out.outputs = json!({ "path": r });
            Ok(out)
        }
    }
}

fn strs(v: &[String]) -> Vec<&str> {
    v.iter().map(String::as_str).collect()
}

fn decide_cmd(cli: &Cli, cmd: &DecideCommand) -> CliResult<Output> {
    let mut out = Output::new(Vec::new());
    match cmd {
        DecideCommand::ThreeWays { scores, alpha, beta } => {
            let r = three_ways(scores, *alpha, *beta)?;
            for (s, l) in scores.iter().zip(&r.labels) {
                out.table.push(format!("{:<10} {l}", num(*s, cli.round)));
            }
            out.table.push(format!("partition {}", triple(&r.partition.to_array(), cli.round)));
            out.outputs = serde_json::to_value(&r)?;
        }
        DecideCommand::NWays { scores, cuts, arities } => {
            let &[p, r, s] = arities.as_slice() else {
                return Err("--arities needs p,r,s".into());
            };
            let res = n_ways(scores, cuts, (p, r, s))?;
            for (x, l) in scores.iter().zip(&res.labels) {
                out.table.push(format!("{:<10} {l}", num(*x, cli.round)));
            }
            out.outputs = serde_json::to_value(&res)?;
        }
        DecideCommand::Neutrosophify { areas, a, neut, anti } => {
            let parsed = areas
                .iter()
                .map(|s| {
                    let (label, size) = s.split_once('=').ok_or_else(|| format!("area '{s}' is not label=size"))?;
                    let size: f64 = size.parse().map_err(|e| format!("area '{s}': {e}"))?;
                    Ok((label.to_string(), size))
                })
                .collect::<CliResult<Vec<_>>>()?;
            let refs: Vec<(&str, f64)> = parsed.iter().map(|(l, s)| (l.as_str(), *s)).collect();
            let (a, neut, anti) = (strs(a), strs(neut), strs(anti));
            let mapping = ConceptMapping::new(&a, &neut, &anti);
            let p = neutrosophify(&refs, &mapping)?;
            let dep = match p.dependence {
                Dependence::SumToOne => "sum-to-one",
                Dependence::Free => "free",
            };
            out.table.push(format!("(A, neutA, antiA) = {} [{dep}]", triple(&p.to_array(), cli.round)));
            out.outputs = serde_json::to_value(p)?;
        }
        DecideCommand::Offset { amounts, norm, under, over } => {
            let bounds = OffsetBounds::new(*under, *over)?;
            let mut rows = Vec::new();
            for &amt in amounts {
                let d = offset_degree(amt, *norm)?;
                let rep = validate_offset([d, 0.0, 0.0], &bounds);
                out.table.push(format!("{:<10} {:<10} {}", num(amt, None), num(d, cli.round), classify_offset(&[d])));
                out.checks.push(CheckLine {
                    label: format!("{amt} within [{under}, {over}]"),
                    passed: rep.valid,
                    detail: Some(rep.diagnostics.clone()),
                });
                rows.push(json!({ "amount": amt, "degree": d, "class": rep.class }));
            }
            out.outputs = Value::Array(rows);
        }
    }
    Ok(out)
}
