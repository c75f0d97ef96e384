use std::collections::BTreeMap;
use std::time::Instant;

use serde_json::{json, Value};

use qhalg::algebra::{build_algebra, is_nakayama, AlgebraRef, DEFAULT_DEGREE_CAP};
use qhalg::chains::{
    find_limited, gl2_lsq_order, gl2_rsq_order, ChainAnalyzer, ChainKind, TotalOrder,
};
use qhalg::endo::{ajk_algebra, auslander_algebra, corner_recovery, iyama_rsq_algebra, theorem_aus_check};
use qhalg::fixtures;
use qhalg::formats::{to_dot, AlgebraFile, ModuleFile};
use qhalg::modules::{global_dimension, proj_dimension, IsoConfig, Module, DEFAULT_ISO_DRAWS, DEFAULT_ISO_SEED};
use qhalg::rejective::{verify_chain, SubcatChain, SubcatKind};
use qhalg::{Error, Result};

use crate::report::{InputInfo, Report};
use crate::{Cli, Command, Input};

struct Loaded {
    file: AlgebraFile,
    alg: AlgebraRef,
    source: String,
    cap: usize,
    cfg: IsoConfig,
}

impl Loaded {
    fn info(&self) -> InputInfo {
        InputInfo {
            source: self.source.clone(),
            digest: self.file.digest(),
        }
    }
}

fn read(path: &std::path::Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn seed() -> Result<u64> {
    match std::env::var("QH_SEED") {
        Ok(s) => s.trim().parse().map_err(|_| Error::Parse(format!("QH_SEED must be an unsigned integer, got {s:?}"))),
        Err(_) => Ok(DEFAULT_ISO_SEED),
    }
}

fn load(input: &Input) -> Result<Loaded> {
    let (file, source) = match (&input.fixture, &input.algebra) {
        (Some(name), _) => {
            let p = fixtures::presentation(name).ok_or_else(|| Error::UnknownFixture(name.clone()))?;
            (AlgebraFile::from_presentation(&p), format!("fixture:{name}"))
        }
        (None, Some(path)) => (AlgebraFile::parse(&read(path)?)?, format!("file:{}", path.display())),
        (None, None) => return Err(Error::Parse("either --algebra or --fixture is required".into())),
    };
    let alg = build_algebra(&file.to_presentation()?, DEFAULT_DEGREE_CAP)?;
    let cap = input.cap.unwrap_or(2 * alg.dim());
    let cfg = IsoConfig {
        seed: seed()?,
        draws: DEFAULT_ISO_DRAWS,
    };
    Ok(Loaded {
        file,
        alg,
        source,
        cap,
        cfg,
    })
}

fn parse_order(a: &AlgebraRef, text: &str) -> Result<TotalOrder> {
    let labels: Vec<&str> = text.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
    TotalOrder::from_labels(a, &labels)
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

pub fn run(cli: &Cli) -> Result<String> {
    let start = Instant::now();
    let (input, name) = match &cli.command {
        Command::Info(i) => (i, "info"),
        Command::Chain { input, .. } => (input, "chain"),
        Command::Search { input, .. } => (input, "search"),
        Command::Gl2 { input, .. } => (input, "gl2"),
        Command::Auslander { input, .. } => (input, "auslander"),
        Command::Iyama { input, .. } => (input, "iyama"),
        Command::Ajk { input, .. } => (input, "ajk"),
        Command::Dot(i) => (i, "dot"),
    };
    let l = load(input)?;
    let result = match &cli.command {
        Command::Dot(_) => return Ok(to_dot(&l.file.to_presentation()?)),
        Command::Info(_) => info(&l),
        Command::Chain { order, kind, .. } => chain(&l, order, kind.as_deref())?,
        Command::Search { kind, limit, bound, .. } => search(&l, kind, *limit, *bound)?,
        Command::Gl2 { left, .. } => gl2(&l, *left)?,
        Command::Auslander { bound, .. } => auslander(&l, *bound)?,
        Command::Iyama { module, .. } => iyama(&l, module.as_deref())?,
        Command::Ajk { bound, .. } => to_value(&ajk_algebra(&l.alg, *bound, &l.cfg)?.summary()),
    };
    let mut report = Report::new(name, l.info(), l.cfg.seed, result);
    if input.timing {
        report.timing_ms = Some(start.elapsed().as_millis());
    }
    Ok(report.render())
}

fn info(l: &Loaded) -> Value {
    let a = &l.alg;
    let mut by_degree: BTreeMap<usize, usize> = BTreeMap::new();
    for b in a.basis() {
        if let Some(d) = b.degree {
            *by_degree.entry(d).or_default() += 1;
        }
    }
    let projectives: Vec<Vec<usize>> = (0..a.n_vertices())
        .map(|v| Module::projective(a.clone(), v).dims().to_vec())
        .collect();
    let simple_pd: Vec<Value> = (0..a.n_vertices())
        .map(|v| to_value(&proj_dimension(&Module::simple(a.clone(), v), l.cap, &l.cfg)))
        .collect();
    json!({
        "name": a.name(),
        "vertices": a.vertices(),
        "dim": a.dim(),
        "basis_by_degree": by_degree.values().collect::<Vec<_>>(),
        "radical_dim": a.radical().dim(),
        "loewy_length": a.loewy_length(),
        "projective_dimension_vectors": projectives,
        "nakayama": is_nakayama(a).ok(),
        "cap": l.cap,
        "simple_projective_dimensions": simple_pd,
        "global_dimension": to_value(&global_dimension(a, l.cap, &l.cfg)),
    })
}

fn chain(l: &Loaded, order: &str, kind: Option<&str>) -> Result<Value> {
    let a = &l.alg;
    let o = parse_order(a, order)?;
    let kind: Option<ChainKind> = kind.map(str::parse).transpose()?;
    let cert = ChainAnalyzer::new(a.clone()).classify_order(&o);
    let sc = SubcatChain::from_order(a.clone(), &o);
    let mut subcats = serde_json::Map::new();
    let mut passed = BTreeMap::new();
    for k in [
        SubcatKind::TotalRightRejective,
        SubcatKind::TotalLeftRejective,
        SubcatKind::Rejective,
        SubcatKind::Coreflective,
        SubcatKind::Reflective,
    ] {
        let c = verify_chain(&sc, k)?;
        passed.insert(k.name(), c.passed);
        subcats.insert(k.name().to_string(), to_value(&c));
    }
    let agreement = json!({
        "right-strong": cert.right_strong == passed["total-right-rejective"],
        "left-strong": cert.left_strong == passed["total-left-rejective"],
        "strong": cert.strong == passed["rejective"],
        "coreflective": cert.right_strong == (cert.heredity && passed["coreflective"]),
        "reflective": cert.left_strong == (cert.heredity && passed["reflective"]),
    });
    let agree = agreement.as_object().unwrap().values().all(|v| v == &Value::Bool(true));
    Ok(json!({
        "order": o.labels(a),
        "heredity": cert.heredity,
        "right_strong": cert.right_strong,
        "left_strong": cert.left_strong,
        "strong": cert.strong,
        "kind": kind.map(|k| json!({ "kind": k, "satisfied": cert.satisfies(k) })),
        "certificate": to_value(&cert),
        "subcategory_chain": subcats,
        "agreement": agreement,
        "agree": agree,
    }))
}

fn search(l: &Loaded, kind: &str, limit: Option<usize>, bound: usize) -> Result<Value> {
    let k: ChainKind = kind.parse()?;
    let r = find_limited(&l.alg, k, bound, limit.unwrap_or(usize::MAX))?;
    Ok(json!({
        "kind": k,
        "orders": r.orders,
        "count": r.orders.len(),
        "examined": r.examined,
    }))
}

fn gl2(l: &Loaded, left: bool) -> Result<Value> {
    let (o, cert) = if left {
        gl2_lsq_order(&l.alg, l.cap, &l.cfg)?
    } else {
        gl2_rsq_order(&l.alg, l.cap, &l.cfg)?
    };
    Ok(json!({
        "side": if left { "left" } else { "right" },
        "order": o.labels(&l.alg),
        "certificate": to_value(&cert),
    }))
}

fn auslander(l: &Loaded, bound: usize) -> Result<Value> {
    let b = auslander_algebra(&l.alg, &l.cfg)?;
    let cap = 2 * b.algebra.dim();
    let check = theorem_aus_check(&l.alg, bound, &l.cfg)?;
    Ok(json!({
        "algebra": to_value(&b.summary()),
        "summand_dimension_vectors": b.summands.iter().map(|m| m.dims().to_vec()).collect::<Vec<_>>(),
        "global_dimension": to_value(&global_dimension(&b.algebra, cap, &l.cfg)),
        "nakayama": check.nakayama,
        "strongly_quasi_hereditary": check.strongly_qh,
        "agree": check.agrees(),
    }))
}

fn iyama(l: &Loaded, module: Option<&std::path::Path>) -> Result<Value> {
    let m = match module {
        Some(path) => ModuleFile::parse(&read(path)?)?.to_module(&l.file, &l.alg)?,
        None => Module::regular(l.alg.clone()),
    };
    let r = iyama_rsq_algebra(&m, &l.cfg)?;
    let recovery = if module.is_none() {
        Some(corner_recovery(&l.alg, &r.end, &l.cfg)?)
    } else {
        None
    };
    let b = &r.end.algebra;
    let subsets: Vec<Vec<String>> = r
        .chain
        .subsets
        .iter()
        .map(|s| s.iter().map(|v| b.vertices()[v].clone()).collect())
        .collect();
    Ok(json!({
        "layer_dims": r.layers.iter().map(|m| m.dim()).collect::<Vec<_>>(),
        "summand_layers": r.diagram.appears_in,
        "algebra": to_value(&r.end.summary()),
        "chain": subsets,
        "certificate": to_value(&r.certificate),
        "corner_recovery": recovery,
    }))
}
