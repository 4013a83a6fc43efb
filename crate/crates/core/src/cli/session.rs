use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value as Json};

use super::ast::*;
use crate::error::{Error, Result};
use crate::fpmod::{
    hom_module, minimal_generators, quotient_by_element, tensor, FPModule, RingMatrix,
};
use crate::groebner::GradedRing;
use crate::homalg::{depth, depth_koszul, ext_modules, free_resolution, hilbert_series, module_dimension};
use crate::polyring::{OrderKind, PolyRing, Polynomial};
use crate::semidual::{
    bass_class_check, c_resolution, check_semidualizing, corollary_suite, reduce_by_nzd, split_surjection,
    verify_ab, Config,
};

/// Rings and modules declared by a session, by name.
#[derive(Debug, Clone, Default)]
pub struct Env {
    pub rings: BTreeMap<String, GradedRing>,
    pub modules: BTreeMap<String, FPModule>,
}

fn semantic(pos: Pos, msg: impl std::fmt::Display) -> Error {
    Error::Semantic(format!("{pos}: {msg}"))
}

impl Env {
    /// Build every ring and module in declaration order.
    pub fn build(s: &Session) -> Result<Env> {
        let mut env = Env::default();
        for item in &s.items {
            match item {
                Item::Ring(r) => {
                    let name = r.ring_name().to_string();
                    if env.rings.contains_key(&name) || env.modules.contains_key(&name) {
                        return Err(semantic(r.pos, format!("`{name}` is already defined")));
                    }
                    env.rings.insert(name, build_ring(r)?);
                }
                Item::Module(m) => {
                    if env.rings.contains_key(&m.name) || env.modules.contains_key(&m.name) {
                        return Err(semantic(m.pos, format!("`{}` is already defined", m.name)));
                    }
                    let module = env.build_module(m)?;
                    env.modules.insert(m.name.clone(), module);
                }
                Item::Run(_) => {}
            }
        }
        Ok(env)
    }

    fn ring(&self, pos: Pos, name: &str) -> Result<&GradedRing> {
        self.rings
            .get(name)
            .ok_or_else(|| semantic(pos, format!("undefined ring `{name}`")))
    }

    /// A module argument; a ring name stands for the ring as a module over
    /// itself.
    fn module(&self, pos: Pos, name: &str) -> Result<FPModule> {
        if let Some(m) = self.modules.get(name) {
            return Ok(m.clone());
        }
        if let Some(r) = self.rings.get(name) {
            return Ok(FPModule::free(r, vec![0]));
        }
        Err(semantic(pos, format!("undefined module `{name}`")))
    }

    fn build_module(&self, m: &ModuleDecl) -> Result<FPModule> {
        let ring = self.ring(m.pos, &m.ring)?;
        let built = match &m.body {
            ModuleBody::Explicit { gens, rels } => {
                let degs: Vec<i32> = gens.iter().map(|&d| d as i32).collect();
                let mut cols = Vec::new();
                for (j, col) in rels.iter().enumerate() {
                    if col.len() != degs.len() {
                        return Err(semantic(
                            m.pos,
                            format!("relation {} of `{}` has {} entries for {} generators", j + 1, m.name, col.len(), degs.len()),
                        ));
                    }
                    let entries = col.iter().map(|e| poly(ring, m.pos, e)).collect::<Result<Vec<_>>>()?;
                    cols.push(entries);
                }
                FPModule::new(ring, degs, cols).map_err(|e| semantic(m.pos, format!("module `{}`: {e}", m.name)))?
            }
            ModuleBody::Call { func, args } => {
                let arity = |n: usize| {
                    if args.len() == n {
                        Ok(())
                    } else {
                        Err(semantic(m.pos, format!("`{func}` takes {n} argument(s), got {}", args.len())))
                    }
                };
                let sub = |a: &str| -> Result<FPModule> {
                    let x = self.module(m.pos, a)?;
                    if x.ring() != ring {
                        return Err(semantic(m.pos, format!("`{a}` is not a module over `{}`", m.ring)));
                    }
                    Ok(x)
                };
                match func.as_str() {
                    "free" => FPModule::free(ring, args.iter().map(|a| int(m.pos, a).map(|d| d as i32)).collect::<Result<_>>()?),
                    "residue" => {
                        arity(0)?;
                        FPModule::residue_field(ring)
                    }
                    "cyclic" => {
                        let gens = args.iter().map(|a| poly(ring, m.pos, a)).collect::<Result<Vec<_>>>()?;
                        FPModule::cyclic(ring, &gens).map_err(|e| semantic(m.pos, e))?
                    }
                    "quot" => {
                        arity(2)?;
                        quotient_by_element(&sub(&args[0])?, &poly(ring, m.pos, &args[1])?).map_err(|e| semantic(m.pos, e))?
                    }
                    "sum" => {
                        let parts = args.iter().map(|a| sub(a)).collect::<Result<Vec<_>>>()?;
                        FPModule::direct_sum(&parts.iter().collect::<Vec<_>>())
                    }
                    "shift" => {
                        arity(2)?;
                        sub(&args[0])?.shifted(int(m.pos, &args[1])? as i32)
                    }
                    "hom" => {
                        arity(2)?;
                        hom_module(&sub(&args[0])?, &sub(&args[1])?).module
                    }
                    "tensor" => {
                        arity(2)?;
                        tensor(&sub(&args[0])?, &sub(&args[1])?)
                    }
                    _ => return Err(semantic(m.pos, format!("unknown module constructor `{func}`"))),
                }
            }
        };
        Ok(built.minimize())
    }
}

fn build_ring(r: &RingDecl) -> Result<GradedRing> {
    let p = u32::try_from(r.characteristic).map_err(|_| semantic(r.pos, "characteristic too large"))?;
    let order = match r.order.as_deref() {
        None => OrderKind::DegRevLex,
        Some(o) => match OrderKind::from_name(o) {
            Some(OrderKind::Lex) => return Err(semantic(r.pos, "ring order must be degree-compatible")),
            Some(k) => k,
            None => return Err(semantic(r.pos, format!("unknown monomial order `{o}`"))),
        },
    };
    let names = r.vars.iter().map(|v| v.name.clone()).collect();
    let weights = r.vars.iter().map(|v| v.weight.unwrap_or(1)).collect();
    let ambient = PolyRing::new(p, names, weights, order).map_err(|e| semantic(r.pos, e))?;
    let gens = r
        .ideal
        .iter()
        .map(|g| ambient.parse(g).map_err(|e| semantic(r.pos, format!("in `{g}`: {e}"))))
        .collect::<Result<Vec<_>>>()?;
    GradedRing::new(ambient, &gens).map_err(|e| semantic(r.pos, e))
}

fn poly(ring: &GradedRing, pos: Pos, text: &str) -> Result<Polynomial> {
    ring.parse(text)
        .map(|f| ring.nf(&f))
        .map_err(|e| semantic(pos, format!("in `{text}`: {e}")))
}

fn int(pos: Pos, text: &str) -> Result<i64> {
    text.replace(' ', "")
        .parse()
        .map_err(|_| semantic(pos, format!("expected an integer, found `{text}`")))
}

/// Run-block settings, validated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub config: Config,
    pub length: Option<usize>,
}

pub fn run_config(run: &RunDecl) -> Result<RunConfig> {
    let mut rc = RunConfig {
        config: Config::default(),
        length: None,
    };
    for s in &run.config {
        let n = match s.value {
            Value::Int(n) if n >= 0 => n,
            _ => return Err(semantic(run.pos, format!("`{}` needs a non-negative integer", s.key))),
        };
        match s.key.as_str() {
            "ext_bound" if n >= 1 => rc.config.ext_bound = Some(n as usize),
            "max_length" => rc.config.max_length = Some(n as usize),
            "degree_bound" => rc.config.degree_bound = n as i32,
            "seed" => rc.config.seed = n as u64,
            "length" => rc.length = Some(n as usize),
            "ext_bound" => return Err(semantic(run.pos, "`ext_bound` must be at least 1")),
            k => return Err(semantic(run.pos, format!("unknown setting `{k}`"))),
        }
    }
    Ok(rc)
}

fn to_json<T: Serialize>(v: &T) -> Json {
    serde_json::to_value(v).expect("report types serialize")
}

fn strings(ring: &GradedRing, v: &[Polynomial]) -> Vec<String> {
    v.iter().map(|f| ring.format(f)).collect()
}

/// Dispatch one `run` declaration.
pub fn run_command(env: &Env, run: &RunDecl) -> Result<Json> {
    let rc = run_config(run)?;
    let cfg = &rc.config;
    let pos = run.pos;
    let args = &run.args;
    let arity = |lo: usize, hi: usize| {
        if (lo..=hi).contains(&args.len()) {
            Ok(())
        } else if lo == hi {
            Err(semantic(pos, format!("`{}` takes {lo} argument(s), got {}", run.command, args.len())))
        } else {
            Err(semantic(pos, format!("`{}` takes {lo} to {hi} arguments, got {}", run.command, args.len())))
        }
    };
    let pair = || -> Result<(FPModule, FPModule)> {
        let (a, b) = (env.module(pos, &args[0])?, env.module(pos, &args[1])?);
        if a.ring() != b.ring() {
            return Err(semantic(pos, "arguments live over different rings"));
        }
        Ok((a, b))
    };
    match run.command.as_str() {
        "gb" => {
            arity(1, 1)?;
            let r = env.ring(pos, &args[0])?;
            Ok(json!({
                "ring": r.describe(),
                "order": r.ambient().order().kind.name(),
                "basis": r.ideal().format(),
                "size": r.ideal().generators().len(),
                "dimension": r.dimension(),
                "hilbert_numerator": hilbert_series(&FPModule::free(r, vec![0])).numerator.to_string(),
            }))
        }
        "nf" => {
            arity(2, 2)?;
            let r = env.ring(pos, &args[0])?;
            let f = poly(r, pos, &args[1])?;
            Ok(json!({ "input": args[1], "normal_form": r.format(&f), "zero": f.is_zero() }))
        }
        "resolve" => {
            arity(1, 2)?;
            let m = env.module(pos, &args[0])?;
            let len = match args.get(1) {
                Some(a) => int(pos, a)? as usize,
                None => rc.length.unwrap_or_else(|| cfg.max_length_for(m.ring())),
            };
            let res = free_resolution(&m, len);
            Ok(json!({
                "betti": res.betti(),
                "degrees": res.complex.degrees,
                "length": res.length,
                "minimal": res.minimal,
                "truncated": res.truncated,
                "pd": res.projective_dimension(),
            }))
        }
        "ext" => {
            arity(3, 3)?;
            let (m, n) = pair()?;
            let i = int(pos, &args[2])?;
            if i < 0 {
                return Err(semantic(pos, "Ext index must be non-negative"));
            }
            let e = ext_modules(&m, &n, i as usize).pop().expect("at least Ext^0");
            Ok(json!({
                "index": i,
                "zero": e.is_zero(),
                "ngens": e.ngens(),
                "gen_degrees": e.gen_degrees(),
                "hilbert": hilbert_series(&e).to_string(),
            }))
        }
        "depth" => {
            arity(1, 1)?;
            let m = env.module(pos, &args[0])?;
            let d = depth(&m)?;
            let k = depth_koszul(&m)?;
            Ok(json!({
                "depth": d.value,
                "koszul": k,
                "agree": d.value == k,
                "witness": strings(m.ring(), &d.witness),
            }))
        }
        "dim" => {
            arity(1, 1)?;
            let m = env.module(pos, &args[0])?;
            Ok(json!({ "dim": module_dimension(&m)? }))
        }
        "mingens" => {
            arity(1, 1)?;
            let (n, m) = minimal_generators(&env.module(pos, &args[0])?);
            Ok(json!({ "mingens": n, "gen_degrees": m.gen_degrees(), "free": m.nrels() == 0 }))
        }
        "hom" => {
            arity(2, 2)?;
            let (m, n) = pair()?;
            let h = hom_module(&m, &n).module;
            Ok(json!({
                "ngens": h.ngens(),
                "gen_degrees": h.gen_degrees(),
                "nrels": h.nrels(),
                "hilbert": hilbert_series(&h).to_string(),
            }))
        }
        "check-semidualizing" => {
            arity(1, 1)?;
            let c = env.module(pos, &args[0])?;
            Ok(to_json(&check_semidualizing(&c, cfg.ext_bound_for(c.ring()))?.to_json()))
        }
        "bass" => {
            arity(2, 2)?;
            let (c, y) = pair()?;
            let rep = bass_class_check(&c, &y, cfg.ext_bound_for(c.ring()))?;
            Ok(json!({
                "holds": rep.holds(),
                "ext_bound": rep.ext_bound,
                "first_nonvanishing": rep.first_nonvanishing,
                "ext_witness": rep.ext_witness,
                "evaluation_iso": rep.evaluation_iso,
            }))
        }
        "cdim" => {
            arity(2, 2)?;
            let (c, y) = pair()?;
            let res = c_resolution(&c, &y, cfg.max_length_for(c.ring()))?;
            Ok(json!({
                "c_dim": res.length,
                "verified": res.verified(),
                "ranks": res.base.ranks(),
                "exact": res.exact,
            }))
        }
        "verify-ab" => {
            arity(2, 2)?;
            let (c, y) = pair()?;
            let rep = verify_ab(&c, &y, cfg)?;
            Ok(to_json(&rep.to_json()))
        }
        "reduce" => {
            arity(2, 2)?;
            let c = env.module(pos, &args[0])?;
            let x = poly(c.ring(), pos, &args[1])?;
            let red = reduce_by_nzd(c.ring(), &c, &x, cfg.ext_bound_for(c.ring()))?;
            Ok(json!({
                "ring": red.ring.describe(),
                "dimension": red.ring.dimension(),
                "module": to_json(&red.module.to_json()),
                "certificate": to_json(&red.certificate.to_json()),
            }))
        }
        "corollaries" => {
            arity(1, 2)?;
            let c = env.module(pos, &args[0])?;
            let y = match args.get(1) {
                Some(a) => Some(env.module(pos, a)?),
                None => None,
            };
            if y.as_ref().is_some_and(|y| y.ring() != c.ring()) {
                return Err(semantic(pos, "arguments live over different rings"));
            }
            let rep = corollary_suite(&c, y.as_ref(), cfg)?;
            Ok(json!({ "all_passed": rep.all_passed(), "checks": to_json(&rep.checks) }))
        }
        "split" => {
            if args.len() < 2 {
                return Err(semantic(pos, "`split` takes a ring and at least one row"));
            }
            let r = env.ring(pos, &args[0])?;
            let rows = args[1..]
                .iter()
                .map(|row| {
                    let inner = row
                        .strip_prefix('[')
                        .and_then(|s| s.strip_suffix(']'))
                        .ok_or_else(|| semantic(pos, format!("matrix row must be `[a, b, ...]`, found `{row}`")))?;
                    inner.split(", ").map(|e| poly(r, pos, e)).collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            let n = rows[0].len();
            if rows.iter().any(|row| row.len() != n) {
                return Err(semantic(pos, "matrix rows have different lengths"));
            }
            let cols: Vec<Vec<Polynomial>> = (0..n).map(|j| rows.iter().map(|row| row[j].clone()).collect()).collect();
            let t = RingMatrix::infer(r, vec![0; rows.len()], cols, 0).map_err(|e| semantic(pos, e))?;
            let s = split_surjection(r, &t)?;
            let ts = t.mul(r, &s.section);
            let id = RingMatrix::identity(r, t.row_degrees());
            Ok(json!({
                "section": to_json(&s.section.to_json(r)),
                "complement": to_json(&s.complement.to_json(r)),
                "pivots": s.pivots,
                "identity": ts.columns() == id.columns(),
            }))
        }
        c => Err(semantic(pos, format!("unknown command `{c}`"))),
    }
}

/// Result of comparing one expectation against a report.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExpectOutcome {
    pub key: String,
    pub expected: Json,
    pub actual: Option<Json>,
    pub provenance: Option<Provenance>,
    pub note: Option<String>,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunOutcome {
    pub command: String,
    pub exit_code: i32,
    pub report: Json,
    pub expectations: Vec<ExpectOutcome>,
}

impl RunOutcome {
    pub fn passed(&self) -> bool {
        self.expectations.iter().all(|e| e.passed)
    }

    /// An error is acceptable when an expectation names it.
    pub fn clean(&self) -> bool {
        self.passed()
            && (self.exit_code == 0
                || self.expectations.iter().any(|e| e.key == "exit_code" || e.key == "error"))
    }
}

fn lookup(report: &Json, key: &str, exit_code: i32) -> Option<Json> {
    if key == "exit_code" {
        return Some(Json::from(exit_code));
    }
    let mut cur = report;
    for seg in key.split('.') {
        cur = match cur {
            Json::Object(m) => m.get(seg)?,
            Json::Array(v) => v.get(seg.parse::<usize>().ok()?)?,
            _ => return None,
        };
    }
    Some(cur.clone())
}

pub fn error_report(e: &Error) -> Json {
    json!({ "error": e.kind(), "message": e.to_string(), "exit_code": e.exit_code() })
}

/// Execute one run block and check its expectations.
pub fn execute(env: &Env, run: &RunDecl) -> RunOutcome {
    let (report, exit_code) = match run_command(env, run) {
        Ok(r) => (r, 0),
        Err(e) => (error_report(&e), e.exit_code()),
    };
    let expectations = run
        .expects
        .iter()
        .map(|e| {
            let expected = e.value.to_json();
            let actual = lookup(&report, &e.key, exit_code);
            ExpectOutcome {
                key: e.key.clone(),
                passed: actual.as_ref() == Some(&expected),
                expected,
                actual,
                provenance: e.provenance,
                note: e.note.clone(),
            }
        })
        .collect();
    RunOutcome {
        command: run.signature(),
        exit_code,
        report,
        expectations,
    }
}

/// Parse, build and execute a whole session.
pub fn run_session(s: &Session) -> Result<Vec<RunOutcome>> {
    let env = Env::build(s)?;
    let runs: Vec<&RunDecl> = s
        .items
        .iter()
        .filter_map(|i| match i {
            Item::Run(r) => Some(r),
            _ => None,
        })
        .collect();
    Ok(runs.par_iter().map(|r| execute(&env, r)).collect())
}

/// Process exit code of a session: 1 on any failed expectation, otherwise
/// the largest error code among the runs.
pub fn session_exit_code(runs: &[RunOutcome]) -> i32 {
    if runs.iter().any(|r| !r.passed()) {
        return 1;
    }
    runs.iter().map(|r| r.exit_code).max().unwrap_or(0)
}
