//! The nine acceptance criteria, one line each. Run with
//! `cargo test --test acceptance`.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use semidual::fpmod::{
    is_isomorphic, minimal_generators, quotient_by_element, rank_mod_p, summand_analysis, FPModule, RingMatrix,
};
use semidual::groebner::GradedRing;
use semidual::homalg::{depth, depth_koszul, ext_modules, module_dimension};
use semidual::polyring::Polynomial;
use semidual::semidual::{
    bass_class_check, c_dimension, c_resolution, check_semidualizing, corollary_suite, functor_properties,
    reduce_by_nzd, split_surjection, verify_ab, Config,
};
use semidual::Error;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn ok<T>(r: semidual::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn ring(vars: &[&str], ideal: &[&str]) -> GradedRing {
    GradedRing::from_strs(101, vars, ideal).unwrap()
}

fn semigroup() -> GradedRing {
    ring(&["x:3", "y:4", "z:5"], &["y^2 - x*z", "x^3 - y*z", "x^2*y - z^2"])
}

fn omega(r: &GradedRing) -> FPModule {
    FPModule::from_strs(r, &[-1, -2], &[&["x", "y"], &["y", "z"], &["z", "x^2"]]).unwrap()
}

fn p(r: &GradedRing, s: &str) -> Polynomial {
    r.parse(s).unwrap()
}

/// The corpus rings with their semidualizing module and a nonzerodivisor.
fn corpus() -> Vec<(&'static str, GradedRing, FPModule, Polynomial)> {
    let mut out = Vec::new();
    for (name, vars, ideal, x) in [
        ("F101[x]", &["x"][..], &[][..], "x"),
        ("F101[x,y]", &["x", "y"][..], &[][..], "x"),
        ("F101[x,y]/(x^2)", &["x", "y"][..], &["x^2"][..], "y"),
    ] {
        let r = ring(vars, ideal);
        let c = FPModule::free(&r, vec![0]);
        let x = p(&r, x);
        out.push((name, r, c, x));
    }
    let s = semigroup();
    let w = omega(&s);
    let x = p(&s, "x");
    out.push(("k[t^3,t^4,t^5]", s, w, x));
    out
}

fn random_element(r: &GradedRing, d: i32, rng: &mut ChaCha8Rng) -> Polynomial {
    let mut f = Polynomial::zero();
    if d < 0 {
        return f;
    }
    for m in r.standard_monomials(d).iter() {
        let c = rng.gen_range(0..r.characteristic());
        f = r.add(&f, &r.ambient().monomial(*m, c));
    }
    f
}

fn random_module(r: &GradedRing, rng: &mut ChaCha8Rng) -> FPModule {
    let w = r.max_weight() as i32;
    let degs: Vec<i32> = (0..rng.gen_range(1..=2)).map(|_| rng.gen_range(0..=w)).collect();
    let top = *degs.iter().max().unwrap();
    let cols: Vec<Vec<Polynomial>> = (0..rng.gen_range(1..=2))
        .map(|_| {
            let d = top + rng.gen_range(1..=2 * w);
            degs.iter().map(|a| random_element(r, d - a, rng)).collect()
        })
        .collect();
    FPModule::new(r, degs, cols).unwrap()
}

/// `q x n` homogeneous matrix with invertible constant part; entries of
/// weighted degree at most `2 * max_weight`.
fn random_surjection(r: &GradedRing, rng: &mut ChaCha8Rng) -> RingMatrix {
    let w = r.max_weight() as i32;
    let q = rng.gen_range(1..=3);
    let n = rng.gen_range(q..=4);
    loop {
        let mut cols: Vec<i32> = (0..n).map(|j| if j < q { 0 } else { rng.gen_range(0..=2 * w) }).collect();
        for j in (1..n).rev() {
            cols.swap(j, rng.gen_range(0..=j));
        }
        let rows = (0..q).map(|_| cols.iter().map(|&d| random_element(r, d, rng)).collect()).collect();
        let t = RingMatrix::from_rows(vec![0; q], cols, rows);
        if rank_mod_p(r.field(), &t.constant_part()) == q {
            return t;
        }
    }
}

fn classical_ab() -> Outcome {
    let r = ring(&["x", "y"], &[]);
    let c = FPModule::free(&r, vec![0]);
    let k = FPModule::residue_field(&r);
    let cert = ok(check_semidualizing(&c, 6))?;
    ensure(cert.passed() && cert.end_generators == 1, "R is not certified")?;
    let cdim = ok(c_dimension(&c, &k, 4))?;
    ensure(cdim == 2, format!("c_dimension {cdim}"))?;
    let rep = ok(verify_ab(&c, &k, &Config::default()))?;
    let got = (rep.c_dim, rep.depth_c.value, rep.depth_y.value);
    ensure(got == (2, 2, 0) && rep.identity_holds && rep.passed(), format!("{got:?}"))?;
    Ok(format!("{} = {} - {}", got.0, got.1, got.2))
}

fn canonical_module() -> Outcome {
    let r = semigroup();
    let w = omega(&r);
    // Oracle for the presentation: omega = Ext^2_S(R, S)(-12) over the
    // ambient polynomial ring, where R has finite projective dimension.
    let s = GradedRing::polynomial(r.ambient().clone());
    let r_over_s = ok(FPModule::cyclic(&s, r.ideal_generators()))?;
    let e2 = ext_modules(&r_over_s, &FPModule::free(&s, vec![0]), 2).pop().unwrap();
    let derived = ok(e2.shifted(12).base_change(&r))?.minimize();
    ensure(is_isomorphic(&derived, &w).isomorphic, "shipped omega differs from Ext^2_S(R, S)(-12)")?;
    let (n, _) = minimal_generators(&w);
    ensure(n == 2, format!("{n} generators"))?;
    let cert = ok(check_semidualizing(&w, 8))?;
    ensure(cert.passed() && cert.ext_vanishing_through == 8, format!("{:?}", cert.failure))?;
    let (dw, dr) = (ok(depth(&w))?.value, ok(depth(&FPModule::free(&r, vec![0])))?.value);
    ensure(dw == 1 && dr == 1, format!("depth omega {dw}, depth R {dr}"))?;
    let dim = ok(module_dimension(&w))?;
    ensure(dim == 1, format!("dim {dim}"))?;
    let cor = ok(corollary_suite(&w, None, &Config::default()))?;
    ensure(cor.all_passed(), format!("{:?}", cor.checks))?;
    Ok(format!("2 generators, Ext^1..8 = 0, depth 1, dim 1, {} corollary checks", cor.checks.len()))
}

fn c_dim_one() -> Outcome {
    let r = semigroup();
    let w = omega(&r);
    let y = ok(quotient_by_element(&w, &p(&r, "x")))?;
    ensure(ok(bass_class_check(&w, &y, 8))?.holds(), "omega/x omega not in the Bass class")?;
    let res = ok(c_resolution(&w, &y, 5))?;
    ensure(res.verified() && res.length == 1, format!("length {}, exact {:?}", res.length, res.exact))?;
    let rep = ok(verify_ab(&w, &y, &Config::default()))?;
    let got = (rep.c_dim, rep.depth_c.value, rep.depth_y.value, rep.pd_hom);
    ensure(got == (1, 1, 0, 1) && rep.passed(), format!("{got:?}"))?;
    Ok("1 = 1 - 0, pd Hom = 1".into())
}

fn splitting_suite() -> Outcome {
    let mut total = 0;
    for (name, r, _, _) in corpus() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        for i in 0..50 {
            let t = random_surjection(&r, &mut rng);
            let s = ok(split_surjection(&r, &t))?;
            let ts = t.mul(&r, &s.section);
            let id = RingMatrix::identity(&r, t.row_degrees());
            ensure(ts.columns() == id.columns(), format!("{name} #{i}: T S != I"))?;
            let e = s.section.mul(&r, &t);
            let a = ok(summand_analysis(&r, &e))?;
            ensure(a.p == t.nrows() && a.p + a.q == t.ncols(), format!("{name} #{i}: p {} q {}", a.p, a.q))?;
            total += 1;
        }
    }
    Ok(format!("{total} matrices"))
}

fn functor_suite() -> Outcome {
    let mut total = 0;
    let mut zerodivisors = 0;
    for (name, r, c, _) in corpus() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        let w = r.max_weight() as i32;
        let mut done = 0;
        while done < 20 {
            let m = random_module(&r, &mut rng);
            let x = random_element(&r, rng.gen_range(1..=w), &mut rng);
            if x.is_zero() {
                continue;
            }
            let rep = ok(functor_properties(&c, &m, &x))?;
            ensure(rep.passed(), format!("{name} #{done}: {rep:?}"))?;
            zerodivisors += usize::from(!rep.nzd_on_m);
            done += 1;
            total += 1;
        }
    }
    Ok(format!("{total} pairs ({zerodivisors} with x a zerodivisor)"))
}

fn reduction_closure() -> Outcome {
    for (name, r, c, x) in corpus() {
        let b = Config::default().ext_bound_for(&r);
        ensure(ok(check_semidualizing(&c, b))?.passed(), format!("{name}: input not certified"))?;
        let red = ok(reduce_by_nzd(&r, &c, &x, b))?;
        ensure(red.certificate.passed(), format!("{name}: {:?}", red.certificate.failure))?;
        ensure(red.certificate.ext_bound == b, format!("{name}: bound changed"))?;
    }
    Ok("4 reductions".into())
}

fn depth_agreement() -> Outcome {
    let mut total = 0;
    for (name, r, c, x) in corpus() {
        let mut modules = vec![
            FPModule::free(&r, vec![0]),
            c.clone(),
            ok(quotient_by_element(&c, &x))?,
            FPModule::residue_field(&r),
        ];
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        modules.extend((0..20).map(|_| random_module(&r, &mut rng)));
        for (i, m) in modules.iter().enumerate() {
            if m.minimize().is_zero() {
                continue;
            }
            let (a, b) = (ok(depth(m))?.value, ok(depth_koszul(m))?);
            ensure(a == b, format!("{name} module {i}: Ext gives {a}, Koszul gives {b}"))?;
            total += 1;
        }
    }
    Ok(format!("{total} modules"))
}

fn negative_controls() -> Outcome {
    let plane = ring(&["x", "y"], &[]);
    let cert = ok(check_semidualizing(&FPModule::free(&plane, vec![0, 0]), 6))?;
    ensure(!cert.passed() && !cert.end_cyclic && cert.end_generators == 4, "R + R was certified")?;
    let hyp = ring(&["x", "y"], &["x^2"]);
    let c = FPModule::free(&hyp, vec![0]);
    let k = FPModule::residue_field(&hyp);
    match c_dimension(&c, &k, 4) {
        Err(e @ Error::Truncated { .. }) if e.to_string().contains("no finite C-dimension detected up to bound") => {}
        other => return Err(format!("c_dimension gave {other:?}")),
    }
    match verify_ab(&c, &k, &Config::default()) {
        Err(e @ Error::Truncated { .. }) if e.exit_code() == 3 => {}
        other => return Err(format!("verify_ab gave {:?}", other.map(|r| r.c_dim))),
    }
    let file = std::env::temp_dir().join(format!("semidual-negative-{}.sd", std::process::id()));
    std::fs::write(&file, "ring { char 101; vars x y; ideal { x^2; } }\nmodule k over R = residue();\nrun verify-ab(R, k);\n")
        .map_err(|e| e.to_string())?;
    let status = Command::new(env!("CARGO_BIN_EXE_semidual")).arg("run").arg(&file).output();
    let _ = std::fs::remove_file(&file);
    let code = status.map_err(|e| e.to_string())?.status.code();
    ensure(code == Some(3), format!("`semidual run` exited with {code:?}"))?;
    Ok("R + R fails (i); k over F101[x,y]/(x^2) truncates, exit 3".into())
}

fn determinism() -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_semidual"))
            .args(["corpus", "--json"])
            .output()
            .map_err(|e| e.to_string())
    };
    let (a, b) = (run()?, run()?);
    ensure(a.status.success(), format!("corpus exited with {:?}", a.status.code()))?;
    ensure(a.stdout == b.stdout, "outputs differ")?;
    Ok(format!("{} identical bytes", a.stdout.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome, u64); 9] = [
        ("classical Auslander-Buchsbaum degeneration", classical_ab, 1),
        ("non-free semidualizing canonical module", canonical_module, 60),
        ("C-dimension one instance", c_dim_one, 60),
        ("unit-pivot splitting suite", splitting_suite, 30),
        ("functor properties of Hom(C, -)", functor_suite, 60),
        ("reduction by a nonzerodivisor", reduction_closure, 60),
        ("two-method depth agreement", depth_agreement, 60),
        ("negative controls", negative_controls, 10),
        ("corpus determinism", determinism, 300),
    ];
    let mut failed = 0;
    for (i, (name, f, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut outcome = f();
        let took = start.elapsed();
        if outcome.is_ok() && took > Duration::from_secs(*limit) {
            outcome = Err(format!("took {:.2}s, limit {limit}s", took.as_secs_f64()));
        }
        match outcome {
            Ok(detail) => println!("criterion {}: PASS {name} ({:.2}s): {detail}", i + 1, took.as_secs_f64()),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL {name} ({:.2}s): {why}", i + 1, took.as_secs_f64());
            }
        }
    }
    println!("{} of 9 criteria passed", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
