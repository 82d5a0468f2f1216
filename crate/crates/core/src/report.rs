//! Verification suites and their JSON reports.
//!
//! Every suite returns a [`Report`] whose checks carry a stable id, a short
//! anchor naming the equation it exercises, a status and the first witness.
//! Apart from `wall_ms`, a report depends only on its inputs and seed.

use std::time::Instant;

use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::cochain::{carry_four_cocycle, carry_three_cocycle, zxz_four_cocycle, Cochain};
use crate::cohomology::{coboundary_equivalent, cohomology_group, default_search_modulus};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::lattice::TriTorus;
use crate::phases_lambda::{anomaly_obstruction, restrict_to_unbroken, solve_lambda, GSet};
use crate::verdict::{tuples, Verdict};
use crate::{spt2d, spt3d, tnu, triple_line};

pub const SCHEMA: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub id: String,
    pub anchor: &'static str,
    pub status: Status,
    pub checked: u64,
    pub witness: Option<Vec<usize>>,
    pub note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<Value>,
    pub wall_ms: f64,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Inputs {
    pub group: Option<String>,
    pub cocycle: Option<String>,
    pub lattice: Option<String>,
    pub modulus: Option<u64>,
    pub seed: Option<u64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: u32,
    pub suite: String,
    pub inputs: Inputs,
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(suite: &str, inputs: Inputs) -> Self {
        Report {
            schema: SCHEMA,
            suite: suite.to_string(),
            inputs,
            passed: true,
            checks: Vec::new(),
        }
    }

    fn push(&mut self, c: Check) {
        if c.status == Status::Fail {
            self.passed = false;
        }
        self.checks.push(c);
    }

    /// Time `f` and record its verdict. A size guard turns into `skipped`.
    pub fn run(&mut self, id: impl Into<String>, anchor: &'static str, f: impl FnOnce() -> Result<Verdict>) -> Result<()> {
        let t = Instant::now();
        let out = f();
        let wall_ms = t.elapsed().as_secs_f64() * 1e3;
        let id = id.into();
        let c = match out {
            Ok(v) => Check {
                id,
                anchor,
                status: if v.passed { Status::Pass } else { Status::Fail },
                checked: v.checked,
                witness: v.witness,
                note: v.note,
                detail: None,
                wall_ms,
            },
            Err(e @ Error::SizeGuard { .. }) => Check {
                id,
                anchor,
                status: Status::Skipped,
                checked: 0,
                witness: None,
                note: Some(e.to_string()),
                detail: None,
                wall_ms,
            },
            Err(e) => return Err(e),
        };
        self.push(c);
        Ok(())
    }

    /// Like [`Report::run`] with a JSON payload next to the verdict.
    pub fn run_detail(
        &mut self,
        id: impl Into<String>,
        anchor: &'static str,
        f: impl FnOnce() -> Result<(Verdict, Value)>,
    ) -> Result<()> {
        let mut detail = None;
        self.run(id, anchor, || {
            let (v, d) = f()?;
            detail = Some(d);
            Ok(v)
        })?;
        if let Some(c) = self.checks.last_mut() {
            c.detail = detail;
        }
        Ok(())
    }

    pub fn skip(&mut self, id: impl Into<String>, anchor: &'static str, reason: String) {
        self.push(Check {
            id: id.into(),
            anchor,
            status: Status::Skipped,
            checked: 0,
            witness: None,
            note: Some(reason),
            detail: None,
            wall_ms: 0.0,
        });
    }

    pub fn merge(&mut self, other: Report) {
        for c in other.checks {
            let id = format!("{}.{}", other.suite, c.id);
            self.push(Check { id, ..c });
        }
    }
}

/// Strip timing so two runs can be compared byte for byte.
pub fn without_timing(v: &mut Value) {
    match v {
        Value::Object(m) => {
            m.remove("wall_ms");
            m.values_mut().for_each(without_timing);
        }
        Value::Array(a) => a.iter_mut().for_each(without_timing),
        _ => {}
    }
}

fn resolve_group(spec: &str) -> Result<FiniteGroup> {
    if std::path::Path::new(spec).is_file() {
        let text = std::fs::read_to_string(spec).map_err(|e| Error::Io(e.to_string()))?;
        return FiniteGroup::from_table_text(&text);
    }
    FiniteGroup::from_spec(spec)
}

/// A group given as a spec such as `Z2xZ2` or a multiplication-table file.
pub fn parse_group(spec: &str) -> Result<FiniteGroup> {
    resolve_group(spec)
}

/// Cocycle sources:
/// `builtin:p0,p1` (ℤ₂×ℤ₂ only), `carry:p` (ℤn×ℤn at level 4, ℤn at
/// level 3), `zero[:L]`, or a cochain file.
pub fn parse_cocycle(group: &FiniteGroup, level: usize, source: &str) -> Result<Cochain> {
    let src = source.trim();
    let body = src.strip_prefix("builtin:").unwrap_or(src);
    if level == 4 {
        if let Some((a, b)) = body.split_once(',') {
            let p = |s: &str| s.trim().parse::<u8>().map_err(|_| Error::Parse(format!("bad builtin `{src}`")));
            let w = zxz_four_cocycle(p(a)?, p(b)?);
            return same_group(w, group);
        }
    }
    if let Some(p) = body.strip_prefix("carry:") {
        let p: i64 = p.trim().parse().map_err(|_| Error::Parse(format!("bad carry parameter `{p}`")))?;
        let w = match level {
            3 => carry_three_cocycle(group.order(), p),
            4 => {
                let n = (group.order() as f64).sqrt().round() as usize;
                if n * n != group.order() {
                    return Err(Error::Parse("carry:p at level 4 needs Zn x Zn".into()));
                }
                carry_four_cocycle(n, p)
            }
            _ => return Err(Error::InvalidLevel(level)),
        };
        return same_group(w, group);
    }
    if let Some(rest) = body.strip_prefix("zero") {
        let m = match rest.strip_prefix(':') {
            Some(m) => m.parse().map_err(|_| Error::Parse(format!("bad modulus in `{src}`")))?,
            None => 2,
        };
        return Ok(Cochain::zero(group, level, m));
    }
    let text = std::fs::read_to_string(src).map_err(|e| Error::Io(format!("{src}: {e}")))?;
    let (_, c) = Cochain::from_text(&text, resolve_group)?;
    if c.level() != level {
        return Err(Error::InvalidLevel(c.level()));
    }
    same_group(c, group)
}

fn same_group(w: Cochain, group: &FiniteGroup) -> Result<Cochain> {
    if w.group() != group {
        return Err(Error::CochainMismatch(format!(
            "cocycle lives on a group of order {}, expected {}",
            w.group().order(),
            group.order()
        )));
    }
    Ok(w)
}

pub fn parse_lattice(s: &str) -> Result<(usize, usize)> {
    TriTorus::parse_dims(s)
}

pub fn cocycle_suite(w: &Cochain, inputs: Inputs) -> Result<Report> {
    let mut r = Report::new("cocycle", inputs);
    r.run("identity", "4-cocycle condition", || {
        let n = crate::guard::pow(w.group().order(), w.level() + 1) as u64;
        Ok(match w.cocycle_violation() {
            None => Verdict::pass(n),
            Some(t) => Verdict::fail(n, t, "cocycle condition violated"),
        })
    })?;
    r.run("normalized", "normalization", || {
        Ok(match w.normalization_violation() {
            None => Verdict::pass(w.len() as u64),
            Some(t) => Verdict::fail(w.len() as u64, t, "not normalized"),
        })
    })?;
    Ok(r)
}

fn inv_strings(v: &[BigInt]) -> Vec<String> {
    v.iter().map(|d| d.to_string()).collect()
}

/// `H^n(G, U(1))` invariants, optionally compared with `expect`. On ℤ₂×ℤ₂
/// at degree 4 the four builtin cocycles are also checked pairwise
/// inequivalent at `L ∈ {4, 8}`.
pub fn cohomology_suite(group: &FiniteGroup, degree: usize, expect: Option<&[u64]>, inputs: Inputs) -> Result<Report> {
    let mut r = Report::new("cohomology", inputs);
    r.run_detail("group", "cohomology via Smith normal form", || {
        let inv = cohomology_group(group, degree)?;
        let v = match expect {
            Some(e) if inv_strings(&inv) != e.iter().map(u64::to_string).collect::<Vec<_>>() => {
                Verdict::fail(1, vec![], format!("invariants {:?}, expected {e:?}", inv_strings(&inv)))
            }
            _ => Verdict::pass(1),
        };
        Ok((v, json!({ "degree": degree, "invariants": inv_strings(&inv) })))
    })?;
    if degree == 4 && group == &FiniteGroup::z2xz2() {
        r.run("builtins_inequivalent", "distinct cohomology classes", || {
            let ws: Vec<Cochain> = tuples(2, 2).map(|p| zxz_four_cocycle(p[0] as u8, p[1] as u8)).collect();
            let mut v = Verdict::pass(0);
            for l in [4u64, 8] {
                for i in 0..4 {
                    for j in i + 1..4 {
                        let eq = coboundary_equivalent(&ws[i].lift(l)?, &ws[j].lift(l)?, l)?;
                        v = v.and(match eq {
                            None => Verdict::pass(1),
                            Some(_) => Verdict::fail(1, vec![i, j, l as usize], "builtins are cohomologous"),
                        });
                    }
                }
            }
            Ok(v)
        })?;
    }
    Ok(r)
}

fn over_all(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> Result<Verdict>) -> Result<Verdict> {
    let mut v = Verdict::pass(0);
    for q in tuples(n, k) {
        let one = f(&q)?;
        if !one.passed {
            let wit = [q.clone(), one.witness.clone().unwrap_or_default()].concat();
            return Ok(Verdict { witness: Some(wit), checked: v.checked + one.checked, ..one });
        }
        v = v.and(one);
    }
    Ok(v)
}

/// Local tensor equations of the triple-line realization, exhaustively.
pub fn triple_line_suite(w: &Cochain, ring_max: usize, inputs: Inputs) -> Result<Report> {
    let n = w.group().order();
    let mut r = Report::new("triple-line", inputs);
    r.run("product_relation", "site product relation", || {
        over_all(n, 2, |q| triple_line::verify_product_relation(w, q[0], q[1]))
    })?;
    r.run("fusion_orthogonality", "fusion tensor orthogonality", || {
        triple_line::verify_fusion_orthogonality(w)
    })?;
    r.run("associator_relation", "associator relation", || {
        over_all(n, 3, |q| Ok(triple_line::verify_associator_relation(w, q[0], q[1], q[2])))
    })?;
    for len in 1..=ring_max {
        r.run(format!("ring_associativity.n{len}"), "fusion associativity on a ring", || {
            over_all(n, 3, |q| triple_line::verify_fusion_associativity_ring(w, q[0], q[1], q[2], len))
        })?;
    }
    r.run("pentagon", "pentagon closure yields ω", || {
        over_all(n, 4, |q| {
            let q4 = [q[0], q[1], q[2], q[3]];
            Ok(match triple_line::extract_pentagon_scalar(w, None, q4) {
                Ok(p) if p.same_value(w.phase(&q4)) => Verdict::pass(1),
                Ok(p) => Verdict::fail(1, vec![p.num() as usize], "extracted scalar differs from ω"),
                Err(Error::NonConstant { .. }) => Verdict::fail(1, vec![], "pentagon contraction is not constant"),
                Err(e) => return Err(e),
            })
        })
    })?;
    r.run("left_invertible", "left invertibility of site tensors", || {
        over_all(n, 1, |q| {
            let mut v = Verdict::pass(0);
            for o in [triple_line::Orientation::Up, triple_line::Orientation::Down] {
                v = v.and(triple_line::verify_left_invertible(&triple_line::build_site(w, q[0], o)?));
            }
            Ok(v)
        })
    })?;
    for (lx, ly) in [(1, 1), (2, 1)] {
        r.run_detail(format!("identity_projector.{lx}x{ly}"), "identity projector O_1", || {
            let p = triple_line::verify_identity_projector(w, &TriTorus::new(lx, ly)?)?;
            Ok((p.verdict, json!({ "rank": p.rank.to_string(), "plaquettes": p.plaquettes })))
        })?;
    }
    Ok(r)
}

/// Group law, unitarity and boundary fusion of the TNU on `lattice`.
pub fn tnu_suite(w: &Cochain, lattice: &TriTorus, mode: tnu::Mode, inputs: Inputs) -> Result<Report> {
    let grp = w.group();
    let mut r = Report::new("tnu", inputs);
    r.run("group_law", "U_g U_h = U_gh", || tnu::verify_group_law(lattice, w, mode))?;
    r.run("identity", "U_1 is the identity", || {
        let u = tnu::build_tnu(w, grp.identity(), lattice)?;
        let id = crate::basis_map::BasisMap::identity(u.sites().to_vec(), grp.order());
        Ok(match crate::basis_map::BasisMap::first_difference(&u, &id)? {
            None => Verdict::pass(u.configs() as u64),
            Some(c) => Verdict::fail(u.configs() as u64, c, "U_1 differs from the identity"),
        })
    })?;
    r.run("unitarity", "U_g† = U_{g⁻¹}", || over_all(grp.order(), 1, |q| tnu::verify_unitarity(lattice, w, q[0])))?;
    r.run("w_identity", "w_g gauge identity", || Ok(tnu::verify_w_identity(w)))?;
    r.run("boundary_fusion", "boundary fusion of U_g U_h", || {
        over_all(grp.order(), 2, |q| tnu::verify_boundary_fusion(w, q[0], q[1], lattice, mode))
    })?;
    r.run("plaquette_consistency", "plaquette vertex weights", || {
        over_all(grp.order(), 1, |q| tnu::verify_plaquette_consistency(w, q[0]))
    })?;
    Ok(r)
}

/// The G-set argument: `trivial`, `transitive:h1,h2,…` (subgroup elements)
/// or a file in the [`GSet::to_text`] format.
pub fn parse_gset(group: &FiniteGroup, spec: &str) -> Result<GSet> {
    if spec == "trivial" {
        return Ok(GSet::trivial(group));
    }
    if let Some(h) = spec.strip_prefix("transitive:") {
        let sub = h
            .split(',')
            .filter(|s| !s.trim().is_empty())
            .map(|s| s.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad subgroup element `{s}`"))))
            .collect::<Result<Vec<_>>>()?;
        return GSet::transitive(group, &sub);
    }
    let text = std::fs::read_to_string(spec).map_err(|e| Error::Io(format!("{spec}: {e}")))?;
    GSet::from_text(group, &text)
}

pub fn default_classify_modulus(w: &Cochain) -> u64 {
    num_integer::lcm(w.modulus(), 2 * w.group().order() as u64)
}

/// Solve the mixed equation for `ω` on `x`. When the elements fixing every
/// point form a nontrivial subgroup, the restriction to it is reported too.
pub fn classify(w: &Cochain, x: &GSet, modulus: u64, inputs: Inputs) -> Result<Report> {
    let mut r = Report::new("classify", inputs);
    let sol = solve_lambda(w, x, modulus)?;
    let grp = x.group();
    let unbroken: Vec<usize> = grp.elements().filter(|&g| (0..x.size()).all(|p| x.act(g, p) == p)).collect();
    let rep_json = sol
        .representative
        .as_ref()
        .map(|l| l.nonzero().into_iter().map(|(g, h, k, p, v)| json!([g, h, k, p, v])).collect::<Vec<_>>());
    let detail = json!({
        "solvable": sol.solvable(),
        "verdict": if sol.solvable() { "solvable" } else { "unsolvable" },
        "modulus": modulus,
        "classes": sol.classes.to_string(),
        "solutions": sol.solutions.to_string(),
        "freedom_image": sol.freedom_image.to_string(),
        "representative": rep_json,
        "unbroken": unbroken,
    });
    r.run_detail("mixed_equation", "mixed 4-cocycle equation", || Ok((Verdict::pass(1), detail)))?;
    if let (Some(lambda), true) = (&sol.representative, unbroken.len() > 1) {
        r.run_detail("restriction", "restriction to the unbroken subgroup", || {
            let res = match restrict_to_unbroken(lambda, w, &unbroken, 0, None) {
                Ok(res) => res,
                Err(Error::NotTrivializing(_)) => {
                    return Ok((Verdict::fail(1, vec![], "ω does not trivialize on the unbroken subgroup"), Value::Null))
                }
                Err(e) => return Err(e),
            };
            let search = default_search_modulus(&res.subgroup, res.cochain.modulus(), 1);
            let zero = Cochain::zero(&res.subgroup, 3, 1);
            let trivial = coboundary_equivalent(&res.cochain, &zero, search)?.is_some();
            let v = if res.is_cocycle {
                Verdict::pass(1)
            } else {
                Verdict::fail(1, vec![], "restriction is not a 3-cocycle")
            };
            Ok((v, json!({ "is_cocycle": res.is_cocycle, "trivial_class": trivial, "modulus": res.cochain.modulus() })))
        })?;
    }
    Ok(r)
}

/// `|X| = 1` solvability matches the coboundary test.
pub fn anomaly_suite(w: &Cochain, inputs: Inputs) -> Result<Report> {
    let mut r = Report::new("anomaly", inputs);
    r.run_detail("obstruction", "anomaly obstruction", || {
        let obstructed = anomaly_obstruction(w)?;
        Ok((Verdict::pass(1), json!({ "obstructed": obstructed })))
    })?;
    Ok(r)
}

/// MPU, chessboard invariance and boundary push-through for a 3-cocycle.
pub fn spt2d_suite(w: &Cochain, lx: usize, ly: usize, inputs: Inputs) -> Result<Report> {
    let mut r = Report::new("spt2d", inputs);
    for len in [2, 3, 4] {
        r.run(format!("mpu_group_law.n{len}"), "MPU group law", || spt2d::verify_mpu_group_law(w, len))?;
        r.run(format!("mpu_unitarity.n{len}"), "MPU unitarity", || spt2d::verify_mpu_unitarity(w, len))?;
    }
    r.run("local_decomposition", "local MPU tensor decomposition", || Ok(spt2d::local_decomposition(w, true)))?;
    r.run("global_symmetry", "chessboard state invariance", || spt2d::verify_global_symmetry_2d(w, lx, ly))?;
    let push = spt2d::verify_virtual_pushing_2d(w)?;
    r.run("push_through", "truncated-square push-through", || Ok(push.push_through.clone()))?;
    r.run("boundary_projector", "boundary projector O'", || Ok(push.boundary_projector.clone()))?;
    r.run("growth", "growth of the boundary operator", || Ok(push.growth.clone()))?;
    Ok(r)
}

/// Octahedral `u_g`, the truncated-octahedron push-through with its
/// negative controls, and optionally the guarded global check.
pub fn spt3d_suite(w: &Cochain, global: bool, inputs: Inputs) -> Result<Report> {
    use spt3d::Control;
    let mut r = Report::new("spt3d", inputs);
    r.run("onsite_unitarity", "on-site unitary u_g", || spt3d::verify_onsite_unitarity_3d(w))?;
    r.run("push_through", "truncated-octahedron push-through", || spt3d::verify_local_pushing_3d(w))?;
    // a control passes when the deliberately broken convention fails
    let control = |v: Verdict, what: &str| {
        if v.passed {
            Verdict::fail(v.checked, vec![], format!("{what} did not break the push-through"))
        } else {
            Verdict::pass(v.checked)
        }
    };
    r.run("control.swapped_hexagon", "triple order control", || {
        let nontrivial = w.values().iter().any(|&v| v != 0);
        if !nontrivial {
            return Ok(Verdict::pass(0).with_note("trivial ω: argument order cannot matter"));
        }
        let mut checked = 0;
        for o in 0..8 {
            let v = spt3d::verify_local_pushing_3d_with(w, Control::SwapHexagon(o))?;
            checked += v.checked;
            if !v.passed {
                return Ok(Verdict::pass(checked).with_note(format!("hexagon {o} breaks it")));
            }
        }
        Ok(Verdict::fail(checked, vec![], "no single hexagon swap broke the push-through"))
    })?;
    r.run("control.flipped_square", "square orientation control", || {
        let z3 = FiniteGroup::cyclic(3)?;
        let zero = Cochain::zero(&z3, 4, 3);
        Ok(control(
            spt3d::verify_local_pushing_3d_with(&zero, Control::FlipSquare(2))?,
            "flipping one square on Z3",
        ))
    })?;
    if global {
        let anchor = "global invariance of the 3D state";
        let t = Instant::now();
        match spt3d::verify_global_symmetry_3d_minimal(w)? {
            spt3d::GlobalCheck::Checked { verdict } => r.run("global_symmetry_minimal", anchor, || Ok(verdict))?,
            spt3d::GlobalCheck::Skipped { reason } => r.skip("global_symmetry_minimal", anchor, reason),
        }
        if let Some(c) = r.checks.last_mut() {
            c.wall_ms = t.elapsed().as_secs_f64() * 1e3;
        }
    }
    Ok(r)
}

/// Every suite at its default inputs. `jobs > 1` runs suites on threads;
/// the merged order is fixed.
pub fn report_all(seed: u64, jobs: usize) -> Result<Report> {
    type Job = Box<dyn FnOnce() -> Result<Report> + Send>;
    let z2xz2 = move || Inputs {
        group: Some("Z2xZ2".into()),
        seed: Some(seed),
        ..Inputs::default()
    };
    let mut list: Vec<Job> = Vec::new();
    for (p0, p1) in [(0u8, 0u8), (1, 0), (0, 1), (1, 1)] {
        let w = zxz_four_cocycle(p0, p1);
        let src = format!("builtin:{p0},{p1}");
        let inputs = move |lattice: Option<&str>| Inputs {
            cocycle: Some(src.clone()),
            lattice: lattice.map(str::to_string),
            ..z2xz2()
        };
        let (w1, i1) = (w.clone(), inputs(None));
        list.push(Box::new(move || cocycle_suite(&w1, i1)));
        let (w2, i2) = (w.clone(), inputs(None));
        list.push(Box::new(move || triple_line_suite(&w2, 2, i2)));
        let (w3, i3) = (w.clone(), inputs(Some("3x3")));
        list.push(Box::new(move || {
            let mode = tnu::Mode::Sample { count: 2000, seed };
            tnu_suite(&w3, &TriTorus::new(3, 3)?, mode, i3)
        }));
        let (w4, i4) = (w.clone(), inputs(None));
        list.push(Box::new(move || anomaly_suite(&w4, i4)));
        let (w5, i5) = (w.clone(), inputs(None));
        list.push(Box::new(move || spt3d_suite(&w5, true, i5)));
    }
    list.push(Box::new(move || cohomology_suite(&FiniteGroup::z2xz2(), 4, Some(&[2, 2]), z2xz2())));
    list.push(Box::new(move || {
        let w = zxz_four_cocycle(1, 0);
        let x = GSet::transitive(w.group(), &[0, 1])?;
        let m = default_classify_modulus(&w);
        classify(&w, &x, m, Inputs { cocycle: Some("builtin:1,0".into()), modulus: Some(m), ..z2xz2() })
    }));
    for p in [0i64, 1] {
        list.push(Box::new(move || {
            let w = carry_three_cocycle(2, p);
            let inputs = Inputs {
                group: Some("Z2".into()),
                cocycle: Some(format!("carry:{p}")),
                lattice: Some("2x4".into()),
                seed: Some(seed),
                ..Inputs::default()
            };
            spt2d_suite(&w, 2, 4, inputs)
        }));
    }
    let results = run_jobs(list, jobs.max(1));
    let mut all = Report::new(
        "report-all",
        Inputs {
            seed: Some(seed),
            ..Inputs::default()
        },
    );
    for (i, r) in results.into_iter().enumerate() {
        let mut r = r?;
        r.suite = format!("{:02}-{}", i, r.suite);
        all.merge(r);
    }
    Ok(all)
}

fn run_jobs<T: Send>(jobs: Vec<Box<dyn FnOnce() -> T + Send>>, threads: usize) -> Vec<T> {
    if threads == 1 {
        return jobs.into_iter().map(|j| j()).collect();
    }
    let n = jobs.len();
    let queue = std::sync::Mutex::new(jobs.into_iter().enumerate().collect::<Vec<_>>());
    let out = std::sync::Mutex::new((0..n).map(|_| None).collect::<Vec<Option<T>>>());
    std::thread::scope(|s| {
        for _ in 0..threads.min(n) {
            s.spawn(|| loop {
                let next = queue.lock().expect("queue lock").pop();
                let Some((i, job)) = next else { break };
                let r = job();
                out.lock().expect("result lock")[i] = Some(r);
            });
        }
    });
    out.into_inner().expect("result lock").into_iter().map(|r| r.expect("every job ran")).collect()
}

/// `ω` made of the standard nonzero ℤ₂ coboundary at modulus 4, used where a
/// ℤ₂ 4-cocycle with nonzero entries is wanted.
pub fn z2_coboundary(seed: u64) -> Cochain {
    let z2 = FiniteGroup::cyclic(2).expect("order 2");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let b = Cochain::random_normalized(&z2, 3, 4, &mut rng);
        let w = b.coboundary();
        if !w.is_zero() {
            return w;
        }
    }
}
