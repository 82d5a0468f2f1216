//! Acceptance criteria 1–10, one line each. Runs without the test harness so
//! the lines show up in the `cargo test` log.

use std::time::{Duration, Instant};

use atn::cohomology::{coboundary_equivalent, cohomology_group};
use atn::lattice::TriTorus;
use atn::phases_lambda::{anomaly_obstruction, restrict_to_unbroken, solve_lambda, GSet};
use atn::report::{self, Inputs, Status};
use atn::tnu::{self, Mode};
use atn::verdict::tuples;
use atn::{carry_three_cocycle, zxz_four_cocycle, Cochain, FiniteGroup};

const CLASSES: [(u8, u8); 4] = [(0, 0), (1, 0), (0, 1), (1, 1)];
const B: usize = 1;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn suite_ok(r: &report::Report) -> Result<(), String> {
    match r.checks.iter().find(|c| c.status == Status::Fail) {
        None => Ok(()),
        Some(c) => Err(format!("{} {}: {:?} {:?}", r.suite, c.id, c.note, c.witness)),
    }
}

fn within(t: Instant, limit: u64) -> Result<(), String> {
    let d = t.elapsed();
    ensure(d <= Duration::from_secs(limit), format!("took {d:?}, limit {limit}s"))
}

fn c1() -> Outcome {
    let t = Instant::now();
    for (p0, p1) in CLASSES {
        let w = zxz_four_cocycle(p0, p1);
        ensure(w.cocycle_violation().is_none(), format!("({p0},{p1}) violates the cocycle condition"))?;
    }
    within(t, 1)?;
    Ok("4 classes x 1024 quintuples".into())
}

fn c2() -> Outcome {
    let t = Instant::now();
    let h = cohomology_group(&FiniteGroup::z2xz2(), 4).map_err(|e| e.to_string())?;
    let got: Vec<String> = h.iter().map(|d| d.to_string()).collect();
    ensure(got == ["2", "2"], format!("H^4 = {got:?}"))?;
    let r = report::cohomology_suite(&FiniteGroup::z2xz2(), 4, Some(&[2, 2]), Inputs::default()).map_err(|e| e.to_string())?;
    suite_ok(&r)?;
    ensure(r.checks.iter().any(|c| c.id == "builtins_inequivalent"), "inequivalence not run")?;
    within(t, 60)?;
    Ok("H^4 = [2,2]; 6 pairs inequivalent at L=4,8".into())
}

fn c3() -> Outcome {
    let t = Instant::now();
    let mut ws: Vec<Cochain> = CLASSES.iter().map(|&(a, b)| zxz_four_cocycle(a, b)).collect();
    ws.push(report::z2_coboundary(0));
    ws.push(Cochain::zero(&FiniteGroup::cyclic(2).unwrap(), 4, 2));
    for w in &ws {
        let r = report::triple_line_suite(w, 3, Inputs::default()).map_err(|e| e.to_string())?;
        suite_ok(&r)?;
        let projector = r.checks.iter().filter(|c| c.id.starts_with("identity_projector") && c.status == Status::Pass);
        ensure(projector.count() >= 1, "no projector check ran")?;
    }
    within(t, 60)?;
    Ok("Z2xZ2 4 classes, Z2 coboundary and trivial".into())
}

fn c4() -> Outcome {
    let mut n = 0;
    for (p0, p1) in CLASSES {
        let w = zxz_four_cocycle(p0, p1);
        for q in tuples(4, 4) {
            let q = [q[0], q[1], q[2], q[3]];
            let p = atn::triple_line::extract_pentagon_scalar(&w, None, q).map_err(|e| e.to_string())?;
            ensure(p.same_value(w.phase(&q)), format!("({p0},{p1}) at {q:?}"))?;
            n += 1;
        }
    }
    Ok(format!("{n} entries reproduced"))
}

fn c5() -> Outcome {
    let t = Instant::now();
    for (p0, p1) in CLASSES {
        let w = zxz_four_cocycle(p0, p1);
        for (lx, ly) in [(1, 1), (2, 2)] {
            let r = report::tnu_suite(&w, &TriTorus::new(lx, ly).unwrap(), Mode::Exhaustive, Inputs::default())
                .map_err(|e| e.to_string())?;
            suite_ok(&r)?;
        }
        let big = TriTorus::new(3, 3).unwrap();
        let v = tnu::verify_group_law(&big, &w, Mode::Sample { count: 10_000, seed: 0 }).map_err(|e| e.to_string())?;
        ensure(v.passed && v.checked >= 16 * 10_000, format!("(3,3) sampled: {v:?}"))?;
    }
    within(t, 120)?;
    Ok("exhaustive (1,1),(2,2); 10^4 samples x 16 pairs on (3,3)".into())
}

fn c6() -> Outcome {
    let t = Instant::now();
    let point = GSet::trivial(&FiniteGroup::z2xz2());
    for (p0, p1) in CLASSES {
        let w = zxz_four_cocycle(p0, p1);
        let trivial = (p0, p1) == (0, 0);
        for l in [8, 16] {
            let s = solve_lambda(&w, &point, l).map_err(|e| e.to_string())?;
            ensure(s.solvable() == trivial, format!("({p0},{p1}) at L={l}: solvable={}", s.solvable()))?;
        }
        let obstructed = anomaly_obstruction(&w).map_err(|e| e.to_string())?;
        ensure(obstructed != trivial, format!("({p0},{p1}) obstruction={obstructed}"))?;
    }
    let z2 = FiniteGroup::cyclic(2).unwrap();
    let s = solve_lambda(&Cochain::zero(&z2, 4, 2), &GSet::trivial(&z2), 4).map_err(|e| e.to_string())?;
    let h3 = cohomology_group(&z2, 3).map_err(|e| e.to_string())?;
    ensure(s.classes == 2u32.into(), format!("Z2 classes {}", s.classes))?;
    ensure(h3.len() == 1 && h3[0] == 2.into(), format!("H^3(Z2) = {h3:?}"))?;
    within(t, 60)?;
    Ok("nontrivial unsolvable at 8,16; Z2 trivial: 2 classes = |H^3(Z2)|".into())
}

fn c7() -> Outcome {
    let w = zxz_four_cocycle(1, 0);
    let x = GSet::transitive(w.group(), &[0, B]).map_err(|e| e.to_string())?;
    let s = solve_lambda(&w, &x, 8).map_err(|e| e.to_string())?;
    let lambda = s.representative.ok_or("unsolvable on G/H")?;
    let r = restrict_to_unbroken(&lambda, &w, &[0, B], 0, None).map_err(|e| e.to_string())?;
    ensure(r.is_cocycle && r.cochain.is_cocycle(), "restriction is not a 3-cocycle")?;
    Ok(format!("solvable at L=8 with {} classes; restriction is a 3-cocycle", s.classes))
}

fn c8() -> Outcome {
    let t = Instant::now();
    for p in [0, 1] {
        let w = carry_three_cocycle(2, p);
        for (lx, ly) in [(2, 2), (2, 4)] {
            let r = report::spt2d_suite(&w, lx, ly, Inputs::default()).map_err(|e| e.to_string())?;
            suite_ok(&r)?;
            ensure(r.checks.iter().all(|c| c.status == Status::Pass), "a 2D check was skipped")?;
        }
    }
    let cls = coboundary_equivalent(&carry_three_cocycle(2, 1), &Cochain::zero(&FiniteGroup::cyclic(2).unwrap(), 3, 2), 4)
        .map_err(|e| e.to_string())?;
    ensure(cls.is_none(), "Z2 carry cocycle is trivial")?;
    within(t, 60)?;
    Ok("Z2 both classes, N=2,3,4, tori (2,2),(2,4)".into())
}

fn c9() -> Outcome {
    let t = Instant::now();
    for (p0, p1) in CLASSES {
        let w = zxz_four_cocycle(p0, p1);
        let r = report::spt3d_suite(&w, false, Inputs::default()).map_err(|e| e.to_string())?;
        suite_ok(&r)?;
        let push = r.checks.iter().find(|c| c.id == "push_through").unwrap();
        ensure(push.checked == 4 * 4096, format!("push-through compared {} terms", push.checked))?;
    }
    within(t, 120)?;
    Ok("4 classes x 4 g x 4096 terms; square-flip and hexagon-swap controls fail as expected".into())
}

fn c10() -> Outcome {
    let run = || -> Result<serde_json::Value, String> {
        let r = report::report_all(0, 4).map_err(|e| e.to_string())?;
        let mut v = serde_json::to_value(&r).map_err(|e| e.to_string())?;
        report::without_timing(&mut v);
        Ok(v)
    };
    let a = serde_json::to_string(&run()?).unwrap();
    let b = serde_json::to_string(&run()?).unwrap();
    ensure(a == b, "report-all differs between runs")?;
    Ok(format!("{} bytes identical", a.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("cocycle identity", c1),
        ("cohomology", c2),
        ("triple-line suite", c3),
        ("pentagon round trip", c4),
        ("TNU suite", c5),
        ("anomaly obstruction", c6),
        ("symmetry breaking", c7),
        ("SPT-2D suite", c8),
        ("SPT-3D suite", c9),
        ("determinism", c10),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let out = f();
        let ms = t.elapsed().as_millis();
        match out {
            Ok(msg) => println!("criterion {:>2} {name}: PASS ({msg}; {ms} ms)", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2} {name}: FAIL ({msg}; {ms} ms)", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
