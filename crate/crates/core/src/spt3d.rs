//! (3+1)D SPT states from a 4-cocycle on the face-decorated cubic lattice.
//!
//! Cubes of an `lx × ly × lz` torus alternate between sites (`x+y+z` even)
//! and plaquettes. Every face carries one `C[G]` degree of freedom and
//! borders one site and one plaquette. The six faces of a cube are listed
//! `[X−, X+, Y−, Y+, Z−, Z+]`. Face `3·c + a` is the lower face of cube `c`
//! along axis `a`.
//!
//! Octant `4·bx + 2·by + bz` of a cube (`b = 1` for the `+` side) is the
//! octahedron face `(X^{sx}, Y^{sy}, Z^{sz})`, read in that order. It carries
//! `ω` when `sx·sy·sz = +1` and `ω̄` otherwise.

use crate::basis_map::BasisMap;
use crate::cochain::Cochain;
use crate::error::{Error, Result};
use crate::ghz::GhzSum;
use crate::group::FiniteGroup;
use crate::guard;
use crate::phase::PhaseInt;
use crate::verdict::{tuples, Verdict};

fn require_four_cocycle(w: &Cochain) -> Result<()> {
    if w.level() != 4 {
        return Err(Error::InvalidLevel(w.level()));
    }
    if let Some(t) = w.normalization_violation() {
        return Err(Error::NotNormalized(t));
    }
    if let Some(t) = w.cocycle_violation() {
        return Err(Error::NotCocycle(t));
    }
    Ok(())
}

/// `ω(g, a, a⁻¹b, b⁻¹c)`.
fn omega_g(w: &Cochain, g: usize, [a, b, c]: [usize; 3]) -> i64 {
    let grp = w.group();
    w.get(&[g, a, grp.ldiv(a, b), grp.ldiv(b, c)]) as i64
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum Tag {
    Omega,
    OmegaBar,
}

impl Tag {
    fn sign(self) -> i64 {
        match self {
            Tag::Omega => 1,
            Tag::OmegaBar => -1,
        }
    }
}

fn octant_positions(o: usize) -> [usize; 3] {
    [(o >> 2) & 1, 2 + ((o >> 1) & 1), 4 + (o & 1)]
}

fn octant_tag(o: usize) -> Tag {
    if o.count_ones() % 2 == 1 {
        Tag::Omega
    } else {
        Tag::OmegaBar
    }
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct OctahedralSite {
    /// Face identifiers `[X−, X+, Y−, Y+, Z−, Z+]`.
    pub faces: [usize; 6],
    /// Positions into `faces`, one triple per octant.
    pub triples: [([usize; 3], Tag); 8],
}

impl OctahedralSite {
    pub fn new(faces: [usize; 6]) -> Self {
        let triples = std::array::from_fn(|o| (octant_positions(o), octant_tag(o)));
        OctahedralSite { faces, triples }
    }

    /// Phase exponent of `u_g` at face labels in `[X−, …, Z+]` order.
    pub fn exponent(&self, w: &Cochain, g: usize, labels: &[usize; 6]) -> i64 {
        self.triples
            .iter()
            .map(|(t, tag)| tag.sign() * omega_g(w, g, t.map(|i| labels[i])))
            .sum()
    }
}

pub fn face_names() -> Vec<String> {
    ["X-", "X+", "Y-", "Y+", "Z-", "Z+"].iter().map(|s| s.to_string()).collect()
}

/// `u_g` on the six faces of one site.
pub fn build_onsite_u3d(w: &Cochain, g: usize) -> Result<BasisMap> {
    require_four_cocycle(w)?;
    w.group().check_element(g)?;
    let w = w.clone();
    let site = OctahedralSite::new([0, 1, 2, 3, 4, 5]);
    Ok(BasisMap::from_fn(face_names(), w.group().order(), move |cfg| {
        let grp = w.group();
        let labels: [usize; 6] = std::array::from_fn(|i| cfg[i]);
        let e = site.exponent(&w, g, &labels);
        Some((cfg.iter().map(|&x| grp.mul(g, x)).collect(), PhaseInt::new(e, w.modulus())))
    }))
}

/// Every `u_g` is a generalized permutation with unit phases.
pub fn verify_onsite_unitarity_3d(w: &Cochain) -> Result<Verdict> {
    let mut v = Verdict::pass(0);
    for g in w.group().elements() {
        v = v.and(if build_onsite_u3d(w, g)?.is_unitary()? {
            Verdict::pass(1)
        } else {
            Verdict::fail(1, vec![g], "u_g is not unitary")
        });
    }
    Ok(v)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum LegOp {
    L,
    LDagger,
}

/// Faces of a plaquette cube adjacent to the face it shares with the site
/// across site face `p`, ascending.
fn square_neighbors(p: usize) -> [usize; 4] {
    let mut out = [0; 4];
    let mut k = 0;
    for j in 0..6 {
        if j / 2 != p / 2 {
            out[k] = j;
            k += 1;
        }
    }
    out
}

/// The square-face leg of plaquette `p` through which hexagon `o` reads its
/// label: toward the next axis of the octant, cyclically.
fn hexagon_legs(o: usize) -> [(usize, usize); 3] {
    let [x, y, z] = octant_positions(o);
    [(x, y), (y, z), (z, x)]
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct TruncatedOctahedron {
    pub g: usize,
    /// `(square, plaquette face, op)`; the bond is oriented from the lower
    /// plaquette face index to the higher one, and a leg leaving the square
    /// carries `L_g^†` along the bond.
    pub legs: Vec<(usize, usize, LegOp)>,
    /// `+1`, or `-1` on a square whose orientation is reversed.
    pub square_orientation: [i8; 6],
    /// Hexagon `o` reads `(X, Y, Z)`, or `(Y, X, Z)` when swapped.
    pub hexagon_swapped: [bool; 8],
}

/// Deliberate convention breaks used as negative controls.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum Control {
    None,
    FlipSquare(usize),
    SwapHexagon(usize),
}

fn shared_face(p: usize) -> usize {
    p ^ 1
}

impl TruncatedOctahedron {
    pub fn new(g: usize, control: Control) -> Self {
        let mut legs = Vec::with_capacity(24);
        let mut square_orientation = [1i8; 6];
        let mut hexagon_swapped = [false; 8];
        match control {
            Control::FlipSquare(p) => square_orientation[p % 6] = -1,
            Control::SwapHexagon(o) => hexagon_swapped[o % 8] = true,
            Control::None => {}
        }
        for p in 0..6 {
            for j in square_neighbors(p) {
                let leaving = shared_face(p) < j;
                let op = match (leaving, square_orientation[p] < 0) {
                    (true, false) | (false, true) => LegOp::LDagger,
                    _ => LegOp::L,
                };
                legs.push((p, j, op));
            }
        }
        TruncatedOctahedron {
            g,
            legs,
            square_orientation,
            hexagon_swapped,
        }
    }

    pub fn leg_names(&self) -> Vec<String> {
        self.legs.iter().map(|(p, j, _)| format!("p{p}f{j}")).collect()
    }

    fn leg_index(&self, p: usize, j: usize) -> usize {
        4 * p + square_neighbors(p).iter().position(|&x| x == j).expect("leg on the square")
    }

    /// Basis map from the outer ends of the 24 legs to their inner ends.
    pub fn map(&self, w: &Cochain) -> BasisMap {
        let w = w.clone();
        let me = self.clone();
        BasisMap::from_fn(self.leg_names(), w.group().order(), move |cfg| {
            let grp = w.group();
            let g = me.g;
            let out = me
                .legs
                .iter()
                .zip(cfg)
                .map(|(&(p, _, _), &x)| {
                    // as a map from outer to inner ends both L_g entering and
                    // L_g^† leaving act as L_g
                    grp.mul(if me.square_orientation[p] > 0 { g } else { grp.inv(g) }, x)
                })
                .collect();
            let e: i64 = (0..8)
                .map(|o| {
                    let mut t = hexagon_legs(o).map(|(p, j)| cfg[me.leg_index(p, j)]);
                    if me.hexagon_swapped[o] {
                        t.swap(0, 1);
                    }
                    octant_tag(o).sign() * omega_g(&w, g, t)
                })
                .sum();
            Some((out, PhaseInt::new(e, w.modulus())))
        })
    }
}

pub fn build_o_g(w: &Cochain, g: usize) -> Result<TruncatedOctahedron> {
    require_four_cocycle(w)?;
    w.group().check_element(g)?;
    Ok(TruncatedOctahedron::new(g, Control::None))
}

/// One site and its six plaquettes. Local face `6·p + j` is face `j` of the
/// plaquette across site face `p`; face `6·p + (p ^ 1)` is the shared one.
#[derive(Clone, Debug)]
pub struct LocalPatch3D {
    pub site: OctahedralSite,
    pub plaquettes: [[usize; 6]; 6],
}

impl LocalPatch3D {
    pub fn new() -> Self {
        let plaquettes = std::array::from_fn(|p| std::array::from_fn(|j| 6 * p + j));
        LocalPatch3D {
            site: OctahedralSite::new(std::array::from_fn(|p| 6 * p + shared_face(p))),
            plaquettes,
        }
    }

    pub fn names() -> Vec<String> {
        (0..36).map(|i| format!("p{}f{}", i / 6, i % 6)).collect()
    }

    fn ghz(&self, g: &FiniteGroup) -> Result<GhzSum> {
        let terms = tuples(g.order(), 6).map(|k| {
            let cfg = (0..36).map(|i| k[i / 6]).collect();
            (k, PhaseInt::one(1), cfg)
        });
        GhzSum::from_terms(Self::names(), g.order(), terms)
    }
}

impl Default for LocalPatch3D {
    fn default() -> Self {
        Self::new()
    }
}

fn onsite_on_patch(w: &Cochain, g: usize, patch: &LocalPatch3D) -> Result<GhzSum> {
    let u = build_onsite_u3d(w, g)?;
    let shared = patch.site.faces;
    let map = BasisMap::from_fn(LocalPatch3D::names(), w.group().order(), move |cfg| {
        let inner: Vec<usize> = shared.iter().map(|&f| cfg[f]).collect();
        let (img, p) = u.apply_config(&inner)?;
        let mut out = cfg.to_vec();
        for (&f, x) in shared.iter().zip(img) {
            out[f] = x;
        }
        Some((out, p))
    });
    patch.ghz(w.group())?.apply(&map)
}

/// Each plaquette's GHZ as copy tensors on the octahedron of its faces, with
/// the four bonds at the shared face cut and routed through `o_g`. The five
/// uncut faces share one label; the inner leg ends must agree on the shared
/// face's label or the term contracts to zero.
fn o_g_on_patch(w: &Cochain, o: &TruncatedOctahedron, patch: &LocalPatch3D) -> Result<GhzSum> {
    let grp = w.group();
    let map = o.map(w);
    let mut terms = Vec::new();
    for outer in tuples(grp.order(), 6) {
        let legs: Vec<usize> = (0..24).map(|i| outer[i / 4]).collect();
        let Some((inner, phase)) = map.apply_config(&legs) else {
            continue;
        };
        if (0..6).any(|p| inner[4 * p..4 * p + 4].iter().any(|&x| x != inner[4 * p])) {
            continue;
        }
        let mut cfg = vec![0; 36];
        for (p, faces) in patch.plaquettes.iter().enumerate() {
            for (j, &f) in faces.iter().enumerate() {
                cfg[f] = if j == shared_face(p) { inner[4 * p] } else { outer[p] };
            }
        }
        terms.push((outer, phase, cfg));
    }
    GhzSum::from_terms(LocalPatch3D::names(), grp.order(), terms)
}

pub fn verify_local_pushing_3d_with(w: &Cochain, control: Control) -> Result<Verdict> {
    require_four_cocycle(w)?;
    let grp = w.group();
    guard::check("3D push-through terms", guard::pow(grp.order(), 6), guard::GHZ_TERMS)?;
    let patch = LocalPatch3D::new();
    let mut v = Verdict::pass(0);
    for g in grp.elements() {
        let lhs = onsite_on_patch(w, g, &patch)?;
        let rhs = o_g_on_patch(w, &TruncatedOctahedron::new(g, control), &patch)?;
        v = v.and(match lhs.first_difference(&rhs) {
            None => Verdict::pass(lhs.len() as u64),
            Some(c) => Verdict::fail(lhs.len() as u64, [vec![g], c].concat(), "3D push-through fails"),
        });
    }
    Ok(v)
}

/// `u_g` on the patch equals `o_g` on the virtual legs, for every `g`.
pub fn verify_local_pushing_3d(w: &Cochain) -> Result<Verdict> {
    verify_local_pushing_3d_with(w, Control::None)
}

#[derive(Clone, Debug)]
pub struct CubicBoard {
    pub dims: [usize; 3],
    pub sites: Vec<OctahedralSite>,
    pub plaquettes: Vec<[usize; 6]>,
    pub state: GhzSum,
}

pub fn cube_faces(dims: [usize; 3], c: [usize; 3]) -> [usize; 6] {
    let id = |c: [usize; 3]| ((c[2] % dims[2]) * dims[1] + c[1] % dims[1]) * dims[0] + c[0] % dims[0];
    let step = |a: usize| {
        let mut d = c;
        d[a] += 1;
        d
    };
    [
        3 * id(c),
        3 * id(step(0)),
        3 * id(c) + 1,
        3 * id(step(1)) + 1,
        3 * id(c) + 2,
        3 * id(step(2)) + 2,
    ]
}

pub fn build_cubic_board(g: &FiniteGroup, dims: [usize; 3]) -> Result<CubicBoard> {
    if dims.iter().any(|&d| d < 2 || d % 2 == 1) {
        return Err(Error::InvalidLattice(format!("cubic board needs even sizes ≥ 2, got {dims:?}")));
    }
    let mut sites = Vec::new();
    let mut plaquettes = Vec::new();
    for z in 0..dims[2] {
        for y in 0..dims[1] {
            for x in 0..dims[0] {
                let f = cube_faces(dims, [x, y, z]);
                if (x + y + z) % 2 == 0 {
                    sites.push(OctahedralSite::new(f));
                } else {
                    plaquettes.push(f);
                }
            }
        }
    }
    let n = g.order();
    guard::check("3D global terms", guard::pow(n, plaquettes.len()), guard::GLOBAL_3D_TERMS)?;
    let faces = 3 * dims.iter().product::<usize>();
    let terms = tuples(n, plaquettes.len()).map(|labels| {
        let mut cfg = vec![0; faces];
        for (p, &k) in plaquettes.iter().zip(&labels) {
            for &f in p {
                cfg[f] = k;
            }
        }
        (labels, PhaseInt::one(1), cfg)
    });
    let names = (0..faces).map(|i| format!("f{i}")).collect();
    let state = GhzSum::from_terms(names, n, terms)?;
    Ok(CubicBoard {
        dims,
        sites,
        plaquettes,
        state,
    })
}

pub fn global_u3d(w: &Cochain, g: usize, board: &CubicBoard) -> Result<BasisMap> {
    require_four_cocycle(w)?;
    let (w, sites) = (w.clone(), board.sites.clone());
    Ok(BasisMap::from_fn(board.state.sites().to_vec(), w.group().order(), move |cfg| {
        let grp = w.group();
        let e: i64 = sites.iter().map(|s| s.exponent(&w, g, &s.faces.map(|f| cfg[f]))).sum();
        Some((cfg.iter().map(|&x| grp.mul(g, x)).collect(), PhaseInt::new(e, w.modulus())))
    }))
}

#[derive(Clone, Debug, serde::Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum GlobalCheck {
    Checked { verdict: Verdict },
    Skipped { reason: String },
}

impl GlobalCheck {
    pub fn passed(&self) -> Option<bool> {
        match self {
            GlobalCheck::Checked { verdict } => Some(verdict.passed),
            GlobalCheck::Skipped { .. } => None,
        }
    }
}

/// `⊗_sites u_g |Ψ_3D⟩ = |Ψ_3D⟩` for every `g` on an explicit torus. A
/// tripped size guard gives `Skipped`. Witness `[g, config…]`.
pub fn verify_global_symmetry_3d(w: &Cochain, dims: [usize; 3]) -> Result<GlobalCheck> {
    require_four_cocycle(w)?;
    let board = match build_cubic_board(w.group(), dims) {
        Ok(b) => b,
        Err(e @ Error::SizeGuard { .. }) => return Ok(GlobalCheck::Skipped { reason: e.to_string() }),
        Err(e) => return Err(e),
    };
    let mut v = Verdict::pass(0);
    for g in w.group().elements() {
        let out = board.state.apply(&global_u3d(w, g, &board)?)?;
        v = v.and(match out.first_difference(&board.state) {
            None => Verdict::pass(board.state.len() as u64),
            Some(c) => Verdict::fail(board.state.len() as u64, [vec![g], c].concat(), "3D state not invariant"),
        });
    }
    Ok(GlobalCheck::Checked { verdict: v })
}

/// The 2×2×2 torus: four sites, four plaquettes.
pub fn verify_global_symmetry_3d_minimal(w: &Cochain) -> Result<GlobalCheck> {
    verify_global_symmetry_3d(w, [2, 2, 2])
}
