//! Hom-bimodules over a Hom-algebra and the deciders for the associative,
//! alternative and Jordan flavours of module axioms.
//!
//! Notation in identity names: `a, b, c` are algebra elements, `v` is a
//! module element, `.` is the product or the action selected by the sorts of
//! its operands, and `a(·)` is the twist map of the matching sort.

use std::fmt;
use std::str::FromStr;

use crate::algebra::{first_differing_fiber, HomAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Tensor3, Vector};
use crate::report::{scan, CheckOptions, Report, Sort};

/// A Hom-module `(V, α_V)` with left action `ρ_l: A ⊗ V → V` (`rho_l[i][j][k]`
/// is the coefficient of `f_k` in `e_i · f_j`) and right action
/// `ρ_r: V ⊗ A → V` (`rho_r[j][i][k]` is the coefficient of `f_k` in
/// `f_j · e_i`). Both actions are morphisms of Hom-modules, which is checked
/// on construction.
#[derive(Clone, PartialEq, Eq)]
pub struct Bimodule {
    parent: HomAlgebra,
    alpha_v: Matrix,
    rho_l: Tensor3,
    rho_r: Tensor3,
}

impl Bimodule {
    pub fn new(parent: HomAlgebra, alpha_v: Matrix, rho_l: Tensor3, rho_r: Tensor3) -> Result<Self> {
        let n = parent.dim();
        let m = alpha_v.rows();
        let dim = |context, expected, found| {
            if expected == found {
                Ok(())
            } else {
                Err(Error::DimensionMismatch { context, expected, found })
            }
        };
        dim("module twist columns", m, alpha_v.cols())?;
        let [l0, l1, l2] = rho_l.dims();
        dim("left action algebra extent", n, l0)?;
        dim("left action module extent", m, l1)?;
        dim("left action output extent", m, l2)?;
        let [r0, r1, r2] = rho_r.dims();
        dim("right action module extent", m, r0)?;
        dim("right action algebra extent", n, r1)?;
        dim("right action output extent", m, r2)?;

        let alpha_a = parent.alpha();
        if let Some((i, j)) = first_differing_fiber(&rho_l.map_output(&alpha_v)?, &rho_l.map_inputs(alpha_a, &alpha_v)?) {
            return Err(Error::Invariant { axiom: "left action is a Hom-module morphism α_V(a·v) = α(a)·α_V(v)", first: i, second: j });
        }
        if let Some((j, i)) = first_differing_fiber(&rho_r.map_output(&alpha_v)?, &rho_r.map_inputs(&alpha_v, alpha_a)?) {
            return Err(Error::Invariant { axiom: "right action is a Hom-module morphism α_V(v·a) = α_V(v)·α(a)", first: j, second: i });
        }
        Ok(Bimodule { parent, alpha_v, rho_l, rho_r })
    }

    /// The zero module over `parent`.
    pub fn zero(parent: HomAlgebra) -> Self {
        let n = parent.dim();
        Bimodule { parent, alpha_v: Matrix::zeros(0, 0), rho_l: Tensor3::zeros(n, 0, 0), rho_r: Tensor3::zeros(0, n, 0) }
    }

    pub fn parent(&self) -> &HomAlgebra {
        &self.parent
    }

    pub fn mdim(&self) -> usize {
        self.alpha_v.rows()
    }

    pub fn alpha_v(&self) -> &Matrix {
        &self.alpha_v
    }

    pub fn rho_l(&self) -> &Tensor3 {
        &self.rho_l
    }

    pub fn rho_r(&self) -> &Tensor3 {
        &self.rho_r
    }

    pub fn left_action(&self, a: &Vector, v: &Vector) -> Result<Vector> {
        crate::linalg::apply_bilinear(&self.rho_l, a, v)
    }

    pub fn right_action(&self, v: &Vector, a: &Vector) -> Result<Vector> {
        crate::linalg::apply_bilinear(&self.rho_r, v, a)
    }

    pub(crate) fn left_vec(&self, a: &Vector, v: &Vector) -> Vector {
        self.rho_l.apply(a, v)
    }

    pub(crate) fn right_vec(&self, v: &Vector, a: &Vector) -> Vector {
        self.rho_r.apply(v, a)
    }

    pub(crate) fn twist_v(&self, v: &Vector) -> Vector {
        self.alpha_v.apply(v)
    }

    /// Module Hom-associator without dimension checks.
    pub(crate) fn assoc_vec(&self, pattern: Pattern, x: &Vector, y: &Vector, z: &Vector) -> Vector {
        let a = &self.parent;
        match pattern {
            // (v·a)·α(b) − α_V(v)·(ab)
            Pattern::Vaa => {
                &self.right_vec(&self.right_vec(x, y), &a.twist_vec(z)) - &self.right_vec(&self.twist_v(x), &a.mul_vec(y, z))
            }
            // (a·v)·α(b) − α(a)·(v·b)
            Pattern::Ava => {
                &self.right_vec(&self.left_vec(x, y), &a.twist_vec(z)) - &self.left_vec(&a.twist_vec(x), &self.right_vec(y, z))
            }
            // (ab)·α_V(v) − α(a)·(b·v)
            Pattern::Aav => {
                &self.left_vec(&a.mul_vec(x, y), &self.twist_v(z)) - &self.left_vec(&a.twist_vec(x), &self.left_vec(y, z))
            }
        }
    }
}

impl fmt::Debug for Bimodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Bimodule").field("algebra_dim", &self.parent.dim()).field("mdim", &self.mdim()).finish()
    }
}

/// Which slot of the module Hom-associator holds the module element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Pattern {
    /// `as(v, a, b)`
    Vaa,
    /// `as(a, v, b)`
    Ava,
    /// `as(a, b, v)`
    Aav,
}

impl Pattern {
    pub fn sorts(self) -> [Sort; 3] {
        match self {
            Pattern::Vaa => [Sort::Mod, Sort::Alg, Sort::Alg],
            Pattern::Ava => [Sort::Alg, Sort::Mod, Sort::Alg],
            Pattern::Aav => [Sort::Alg, Sort::Alg, Sort::Mod],
        }
    }

    pub fn from_sorts(sorts: [Sort; 3]) -> Option<Pattern> {
        [Pattern::Vaa, Pattern::Ava, Pattern::Aav].into_iter().find(|p| p.sorts() == sorts)
    }
}

/// The module Hom-associator `as_{A,V}` evaluated in the slot pattern given.
pub fn module_hom_associator(v: &Bimodule, pattern: Pattern, x: &Vector, y: &Vector, z: &Vector) -> Result<Vector> {
    for (arg, sort) in [x, y, z].into_iter().zip(pattern.sorts()) {
        let expected = match sort {
            Sort::Alg => v.parent.dim(),
            Sort::Mod => v.mdim(),
        };
        if arg.len() != expected {
            return Err(Error::DimensionMismatch { context: "module Hom-associator argument", expected, found: arg.len() });
        }
    }
    Ok(v.assoc_vec(pattern, x, y, z))
}

/// Module axiom systems decided by [`check_module`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ModuleKind {
    AssocLeft,
    AssocRight,
    AssocBimodule,
    AltLeft,
    AltRight,
    AltBimodule,
    JordanLeft,
    JordanRight,
    JordanBimodule,
    SpecialLeft,
    SpecialRight,
    OperatorCommutativity,
}

impl ModuleKind {
    pub const ALL: [ModuleKind; 12] = [
        ModuleKind::AssocLeft,
        ModuleKind::AssocRight,
        ModuleKind::AssocBimodule,
        ModuleKind::AltLeft,
        ModuleKind::AltRight,
        ModuleKind::AltBimodule,
        ModuleKind::JordanLeft,
        ModuleKind::JordanRight,
        ModuleKind::JordanBimodule,
        ModuleKind::SpecialLeft,
        ModuleKind::SpecialRight,
        ModuleKind::OperatorCommutativity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ModuleKind::AssocLeft => "assoc-left",
            ModuleKind::AssocRight => "assoc-right",
            ModuleKind::AssocBimodule => "assoc-bimodule",
            ModuleKind::AltLeft => "alt-left",
            ModuleKind::AltRight => "alt-right",
            ModuleKind::AltBimodule => "alt-bimodule",
            ModuleKind::JordanLeft => "jordan-left",
            ModuleKind::JordanRight => "jordan-right",
            ModuleKind::JordanBimodule => "jordan-bimodule",
            ModuleKind::SpecialLeft => "special-left",
            ModuleKind::SpecialRight => "special-right",
            ModuleKind::OperatorCommutativity => "operator-commutativity",
        }
    }
}

impl fmt::Display for ModuleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ModuleKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ModuleKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::UnknownName(format!("module kind {s:?}")))
    }
}

// Identity names used in reports.
const LEFT_ASSOC: &str = "(a.b).a(v) = a(a).(b.v)";
const RIGHT_ASSOC: &str = "(v.a).a(b) = a(v).(a.b)";
const OPERATOR_COMM: &str = "(a.v).a(b) = a(a).(v.b)";
const ALT_LEFT: &str = "as(a,b,v) = -as(b,a,v)";
const ALT_RIGHT: &str = "as(v,a,b) = -as(v,b,a)";
const ALT_CHAIN_1: &str = "as(a,v,b) = -as(v,a,b)";
const ALT_CHAIN_2: &str = "-as(v,a,b) = as(b,a,v)";
const ALT_CHAIN_3: &str = "as(b,a,v) = -as(a,b,v)";
const ALT_LEFT_SQUARE: &str = "as(a,a,v) = 0";
const JORDAN_RIGHT_CYCLIC: &str = "jordan right module, cyclic form";
const JORDAN_RIGHT_TRIPLE: &str = "jordan right module, triple form";
const JORDAN_LEFT_CYCLIC: &str = "jordan left module, cyclic form";
const JORDAN_LEFT_TRIPLE: &str = "jordan left module, triple form";
const JORDAN_SYMMETRY: &str = "v.a = a.v";
const JORDAN_BIMOD_CYCLIC: &str = "jordan bimodule, cyclic form";
const JORDAN_BIMOD_TRIPLE: &str = "jordan bimodule, triple form";
const SPECIAL_RIGHT: &str = "a(v).(a.b) = (v.a).a(b) + (v.b).a(a)";
const SPECIAL_LEFT: &str = "(a.b).a(v) = a(a).(b.v) + a(b).(a.v)";

/// Basis-level data shared by the module deciders.
struct Ops<'a> {
    v: &'a Bimodule,
    e: Vec<Vector>,
    f: Vec<Vector>,
    ae: Vec<Vector>,
    ae2: Vec<Vector>,
    af: Vec<Vector>,
    af2: Vec<Vector>,
}

impl<'a> Ops<'a> {
    fn new(v: &'a Bimodule) -> Self {
        let a = &v.parent;
        let (n, m) = (a.dim(), v.mdim());
        let e: Vec<Vector> = (0..n).map(|i| Vector::basis(n, i)).collect();
        let f: Vec<Vector> = (0..m).map(|i| Vector::basis(m, i)).collect();
        let ae: Vec<Vector> = (0..n).map(|i| a.alpha().column(i)).collect();
        let ae2 = ae.iter().map(|x| a.twist_vec(x)).collect();
        let af: Vec<Vector> = (0..m).map(|i| v.alpha_v.column(i)).collect();
        let af2 = af.iter().map(|x| v.twist_v(x)).collect();
        Ops { v, e, f, ae, ae2, af, af2 }
    }

    fn n(&self) -> usize {
        self.v.parent.dim()
    }

    fn m(&self) -> usize {
        self.v.mdim()
    }

    fn mul(&self, x: &Vector, y: &Vector) -> Vector {
        self.v.parent.mul_vec(x, y)
    }

    fn ta(&self, x: &Vector) -> Vector {
        self.v.parent.twist_vec(x)
    }

    fn tv(&self, x: &Vector) -> Vector {
        self.v.twist_v(x)
    }

    fn l(&self, a: &Vector, x: &Vector) -> Vector {
        self.v.left_vec(a, x)
    }

    fn r(&self, x: &Vector, a: &Vector) -> Vector {
        self.v.right_vec(x, a)
    }

    fn assoc(&self, p: Pattern, x: &Vector, y: &Vector, z: &Vector) -> Vector {
        self.v.assoc_vec(p, x, y, z)
    }

    fn abv_slots(&self) -> [(Sort, usize); 3] {
        [(Sort::Alg, self.n()), (Sort::Alg, self.n()), (Sort::Mod, self.m())]
    }

    fn abcv_slots(&self) -> [(Sort, usize); 4] {
        [(Sort::Alg, self.n()), (Sort::Alg, self.n()), (Sort::Alg, self.n()), (Sort::Mod, self.m())]
    }

    /// `α_V(v·a)·α(bc) + α_V(v·b)·α(ca) + α_V(v·c)·α(ab)`
    fn right_cyclic_lhs(&self, a: usize, b: usize, c: usize, v: usize) -> Vector {
        let term = |x: usize, y: usize, z: usize| self.r(&self.tv(&self.r(&self.f[v], &self.e[x])), &self.ta(&self.mul(&self.e[y], &self.e[z])));
        let mut s = term(a, b, c);
        s = &s + &term(b, c, a);
        &s + &term(c, a, b)
    }

    /// `(α_V(v)·bc)·α²(a) + (α_V(v)·ca)·α²(b) + (α_V(v)·ab)·α²(c)`
    fn right_cyclic_rhs(&self, a: usize, b: usize, c: usize, v: usize) -> Vector {
        let term = |x: usize, y: usize, z: usize| self.r(&self.r(&self.af[v], &self.mul(&self.e[y], &self.e[z])), &self.ae2[x]);
        let mut s = term(a, b, c);
        s = &s + &term(b, c, a);
        &s + &term(c, a, b)
    }

    /// `((v·a)·α(b))·α²(c) + ((v·c)·α(b))·α²(a)`
    fn right_triple_rhs_head(&self, a: usize, b: usize, c: usize, v: usize) -> Vector {
        let term = |x: usize, z: usize| self.r(&self.r(&self.r(&self.f[v], &self.e[x]), &self.ae[b]), &self.ae2[z]);
        &term(a, c) + &term(c, a)
    }

    /// `(ac)·α(b)`
    fn ac_alpha_b(&self, a: usize, b: usize, c: usize) -> Vector {
        self.mul(&self.mul(&self.e[a], &self.e[c]), &self.ae[b])
    }

    /// `α(bc)·α_V(a·v) + α(ca)·α_V(b·v) + α(ab)·α_V(c·v)`
    fn left_cyclic_lhs(&self, a: usize, b: usize, c: usize, v: usize) -> Vector {
        let term = |x: usize, y: usize, z: usize| self.l(&self.ta(&self.mul(&self.e[y], &self.e[z])), &self.tv(&self.l(&self.e[x], &self.f[v])));
        let mut s = term(a, b, c);
        s = &s + &term(b, c, a);
        &s + &term(c, a, b)
    }

    /// `α²(a)·(bc·α_V(v)) + α²(b)·(ca·α_V(v)) + α²(c)·(ab·α_V(v))`
    fn left_cyclic_rhs(&self, a: usize, b: usize, c: usize, v: usize) -> Vector {
        let term = |x: usize, y: usize, z: usize| self.l(&self.ae2[x], &self.l(&self.mul(&self.e[y], &self.e[z]), &self.af[v]));
        let mut s = term(a, b, c);
        s = &s + &term(b, c, a);
        &s + &term(c, a, b)
    }

    /// `α²(c)·(α(b)·(a·v)) + α²(a)·(α(b)·(c·v)) + ((ac)α(b))·α_V²(v)`
    fn left_triple_rhs(&self, a: usize, b: usize, c: usize, v: usize) -> Vector {
        let term = |x: usize, z: usize| self.l(&self.ae2[z], &self.l(&self.ae[b], &self.l(&self.e[x], &self.f[v])));
        let s = &term(a, c) + &term(c, a);
        &s + &self.l(&self.ac_alpha_b(a, b, c), &self.af2[v])
    }

    fn symmetry(&self, cap: Option<usize>) -> Report {
        scan(&[(Sort::Alg, self.n()), (Sort::Mod, self.m())], cap, |t| {
            let (a, v) = (t[0], t[1]);
            vec![(JORDAN_SYMMETRY.into(), &self.r(&self.f[v], &self.e[a]) - &self.l(&self.e[a], &self.f[v]))]
        })
    }

    fn jordan_bimodule_cyclic(&self, cap: Option<usize>) -> Report {
        scan(&self.abcv_slots(), cap, |t| {
            let (a, b, c, v) = (t[0], t[1], t[2], t[3]);
            vec![(JORDAN_BIMOD_CYCLIC.into(), &self.right_cyclic_lhs(a, b, c, v) - &self.right_cyclic_rhs(a, b, c, v))]
        })
    }

    fn jordan_bimodule_triple(&self, cap: Option<usize>) -> Report {
        scan(&self.abcv_slots(), cap, |t| {
            let (a, b, c, v) = (t[0], t[1], t[2], t[3]);
            let rhs = &self.right_triple_rhs_head(a, b, c, v) + &self.l(&self.ac_alpha_b(a, b, c), &self.af2[v]);
            vec![(JORDAN_BIMOD_TRIPLE.into(), &self.right_cyclic_lhs(a, b, c, v) - &rhs)]
        })
    }

    /// `Σ_cyclic(a,b,c) as(α(a), α_V(v), bc)`
    fn cyclic_associator(&self, cap: Option<usize>) -> Report {
        scan(&self.abcv_slots(), cap, |t| {
            let (a, b, c, v) = (t[0], t[1], t[2], t[3]);
            let term = |x: usize, y: usize, z: usize| self.assoc(Pattern::Ava, &self.ae[x], &self.af[v], &self.mul(&self.e[y], &self.e[z]));
            let s = &(&term(a, b, c) + &term(b, c, a)) + &term(c, a, b);
            vec![("cyclic sum of as(a(a), a(v), b.c)".into(), s)]
        })
    }

    /// `as(v·a, α(b), α(c)) + as(v·c, α(b), α(a)) + as(ac, α(b), α_V(v))`
    fn triple_associator(&self, cap: Option<usize>) -> Report {
        scan(&self.abcv_slots(), cap, |t| {
            let (a, b, c, v) = (t[0], t[1], t[2], t[3]);
            let s1 = self.assoc(Pattern::Vaa, &self.r(&self.f[v], &self.e[a]), &self.ae[b], &self.ae[c]);
            let s2 = self.assoc(Pattern::Vaa, &self.r(&self.f[v], &self.e[c]), &self.ae[b], &self.ae[a]);
            let s3 = self.assoc(Pattern::Aav, &self.mul(&self.e[a], &self.e[c]), &self.ae[b], &self.af[v]);
            vec![("as(v.a, a(b), a(c)) + as(v.c, a(b), a(a)) + as(a.c, a(b), a(v))".into(), &(&s1 + &s2) + &s3)]
        })
    }
}

/// Decides the module axioms of `kind` with the default witness cap.
pub fn check_module(v: &Bimodule, kind: ModuleKind) -> Report {
    check_module_with(v, kind, CheckOptions::default())
}

/// Decides the module axioms of `kind` by exhaustive basis evaluation. The
/// parent algebra is not re-checked.
pub fn check_module_with(v: &Bimodule, kind: ModuleKind, opts: CheckOptions) -> Report {
    let ops = Ops::new(v);
    let cap = opts.max_witnesses;
    let (n, m) = (ops.n(), ops.m());
    let o = &ops;
    match kind {
        ModuleKind::AssocLeft => scan(&o.abv_slots(), cap, |t| {
            vec![(LEFT_ASSOC.into(), o.assoc(Pattern::Aav, &o.e[t[0]], &o.e[t[1]], &o.f[t[2]]))]
        }),
        ModuleKind::AssocRight => scan(&[(Sort::Mod, m), (Sort::Alg, n), (Sort::Alg, n)], cap, |t| {
            vec![(RIGHT_ASSOC.into(), o.assoc(Pattern::Vaa, &o.f[t[0]], &o.e[t[1]], &o.e[t[2]]))]
        }),
        ModuleKind::OperatorCommutativity => scan(&[(Sort::Alg, n), (Sort::Mod, m), (Sort::Alg, n)], cap, |t| {
            vec![(OPERATOR_COMM.into(), o.assoc(Pattern::Ava, &o.e[t[0]], &o.f[t[1]], &o.e[t[2]]))]
        }),
        ModuleKind::AssocBimodule => [ModuleKind::AssocLeft, ModuleKind::AssocRight, ModuleKind::OperatorCommutativity]
            .into_iter()
            .fold(Report::pass(), |acc, k| acc.merge(check_module_with(v, k, opts), cap)),
        ModuleKind::AltLeft => scan(&o.abv_slots(), cap, |t| {
            let (a, b, x) = (&o.e[t[0]], &o.e[t[1]], &o.f[t[2]]);
            vec![(ALT_LEFT.into(), &o.assoc(Pattern::Aav, a, b, x) + &o.assoc(Pattern::Aav, b, a, x))]
        }),
        ModuleKind::AltRight => scan(&[(Sort::Mod, m), (Sort::Alg, n), (Sort::Alg, n)], cap, |t| {
            let (x, a, b) = (&o.f[t[0]], &o.e[t[1]], &o.e[t[2]]);
            vec![(ALT_RIGHT.into(), &o.assoc(Pattern::Vaa, x, a, b) + &o.assoc(Pattern::Vaa, x, b, a))]
        }),
        ModuleKind::AltBimodule => scan(&o.abv_slots(), cap, |t| {
            let (a, b, x) = (&o.e[t[0]], &o.e[t[1]], &o.f[t[2]]);
            let avb = o.assoc(Pattern::Ava, a, x, b);
            let vab = o.assoc(Pattern::Vaa, x, a, b);
            let bav = o.assoc(Pattern::Aav, b, a, x);
            let abv = o.assoc(Pattern::Aav, a, b, x);
            vec![
                (ALT_CHAIN_1.into(), &avb + &vab),
                (ALT_CHAIN_2.into(), &(-&vab) - &bav),
                (ALT_CHAIN_3.into(), &bav + &abv),
            ]
        }),
        ModuleKind::JordanRight => scan(&o.abcv_slots(), cap, |t| {
            let (a, b, c, x) = (t[0], t[1], t[2], t[3]);
            let lhs = o.right_cyclic_lhs(a, b, c, x);
            let triple = &o.right_triple_rhs_head(a, b, c, x) + &o.r(&o.af2[x], &o.ac_alpha_b(a, b, c));
            vec![
                (JORDAN_RIGHT_CYCLIC.into(), &lhs - &o.right_cyclic_rhs(a, b, c, x)),
                (JORDAN_RIGHT_TRIPLE.into(), &lhs - &triple),
            ]
        }),
        ModuleKind::JordanLeft => scan(&o.abcv_slots(), cap, |t| {
            let (a, b, c, x) = (t[0], t[1], t[2], t[3]);
            let lhs = o.left_cyclic_lhs(a, b, c, x);
            vec![
                (JORDAN_LEFT_CYCLIC.into(), &lhs - &o.left_cyclic_rhs(a, b, c, x)),
                (JORDAN_LEFT_TRIPLE.into(), &lhs - &o.left_triple_rhs(a, b, c, x)),
            ]
        }),
        ModuleKind::JordanBimodule => o
            .symmetry(cap)
            .merge(o.jordan_bimodule_cyclic(cap), cap)
            .merge(o.jordan_bimodule_triple(cap), cap),
        ModuleKind::SpecialRight => scan(&o.abv_slots(), cap, |t| {
            let (a, b, x) = (t[0], t[1], t[2]);
            let lhs = o.r(&o.af[x], &o.mul(&o.e[a], &o.e[b]));
            let rhs = &o.r(&o.r(&o.f[x], &o.e[a]), &o.ae[b]) + &o.r(&o.r(&o.f[x], &o.e[b]), &o.ae[a]);
            vec![(SPECIAL_RIGHT.into(), &lhs - &rhs)]
        }),
        ModuleKind::SpecialLeft => scan(&o.abv_slots(), cap, |t| {
            let (a, b, x) = (t[0], t[1], t[2]);
            let lhs = o.l(&o.mul(&o.e[a], &o.e[b]), &o.af[x]);
            let rhs = &o.l(&o.ae[a], &o.l(&o.e[b], &o.f[x])) + &o.l(&o.ae[b], &o.l(&o.e[a], &o.f[x]));
            vec![(SPECIAL_LEFT.into(), &lhs - &rhs)]
        }),
    }
}

/// The alternative bimodule axioms in their reduced form: the first two links
/// of the chain plus the left alternativity `as(a, a, v) = 0` (checked
/// linearized). Over characteristic zero this is equivalent to
/// [`ModuleKind::AltBimodule`].
pub fn check_alt_bimodule_reduced(v: &Bimodule, opts: CheckOptions) -> Report {
    let o = Ops::new(v);
    scan(&o.abv_slots(), opts.max_witnesses, |t| {
        let (a, b, x) = (&o.e[t[0]], &o.e[t[1]], &o.f[t[2]]);
        let vab = o.assoc(Pattern::Vaa, x, a, b);
        let bav = o.assoc(Pattern::Aav, b, a, x);
        vec![
            (ALT_CHAIN_1.into(), &o.assoc(Pattern::Ava, a, x, b) + &vab),
            (ALT_CHAIN_2.into(), &(-&vab) - &bav),
            (ALT_LEFT_SQUARE.into(), &o.assoc(Pattern::Aav, a, b, x) + &bav),
        ]
    })
}

/// Truth values of the two Jordan bimodule identities in their expanded form
/// and in their module Hom-associator form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FormVerdicts {
    pub cyclic_expanded: bool,
    pub cyclic_associator: bool,
    pub triple_expanded: bool,
    pub triple_associator: bool,
}

/// Evaluates both forms of the Jordan bimodule identities. Requires the
/// symmetry `v·a = a·v`, under which the forms are claimed equivalent.
pub fn equiv_form_verdicts(v: &Bimodule) -> Result<FormVerdicts> {
    let o = Ops::new(v);
    if let Some(w) = o.symmetry(Some(1)).witnesses().first() {
        return Err(Error::Precondition(format!("right action is not the flipped left action: {w}")));
    }
    let one = Some(1);
    Ok(FormVerdicts {
        cyclic_expanded: o.jordan_bimodule_cyclic(one).ok(),
        cyclic_associator: o.cyclic_associator(one).ok(),
        triple_expanded: o.jordan_bimodule_triple(one).ok(),
        triple_associator: o.triple_associator(one).ok(),
    })
}

/// Passes iff each Jordan bimodule identity has the same truth value in its
/// expanded and its module Hom-associator form. On disagreement the witness
/// of the failing form is reported.
pub fn check_equiv_forms(v: &Bimodule) -> Result<Report> {
    let verdicts = equiv_form_verdicts(v)?;
    let o = Ops::new(v);
    let one = Some(1);
    let mut report = Report::pass();
    if verdicts.cyclic_expanded != verdicts.cyclic_associator {
        report = report.merge(o.jordan_bimodule_cyclic(one), None).merge(o.cyclic_associator(one), None);
    }
    if verdicts.triple_expanded != verdicts.triple_associator {
        report = report.merge(o.jordan_bimodule_triple(one), None).merge(o.triple_associator(one), None);
    }
    Ok(report)
}

/// Whether `f: V → W` is a morphism of bimodules over the same algebra:
/// `f∘α_V = α_W∘f`, `f(a·v) = a·f(v)` and `f(v·a) = f(v)·a`.
pub fn is_bimodule_morphism(f: &Matrix, v: &Bimodule, w: &Bimodule) -> Result<bool> {
    if !v.parent.same_structure(&w.parent) {
        return Err(Error::Precondition("bimodules are over different algebras".into()));
    }
    if f.rows() != w.mdim() || f.cols() != v.mdim() {
        return Err(Error::DimensionMismatch {
            context: "bimodule morphism shape (rows = target dim, cols = source dim)",
            expected: w.mdim() * v.mdim(),
            found: f.rows() * f.cols(),
        });
    }
    if f.compose(&v.alpha_v)? != w.alpha_v.compose(f)? {
        return Ok(false);
    }
    let id = Matrix::identity(v.parent.dim());
    if v.rho_l.map_output(f)? != w.rho_l.map_inputs(&id, f)? {
        return Ok(false);
    }
    Ok(v.rho_r.map_output(f)? == w.rho_r.map_inputs(f, &id)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    fn one_dim_unit() -> HomAlgebra {
        HomAlgebra::untwisted(Tensor3::from_fn([1, 1, 1], |_, _, _| Scalar::one())).unwrap()
    }

    #[test]
    fn zero_module_evaluates_to_empty_vectors() {
        let v = Bimodule::zero(one_dim_unit());
        let e = Vector::basis(1, 0);
        let empty = Vector::zeros(0);
        assert_eq!(module_hom_associator(&v, Pattern::Vaa, &empty, &e, &e).unwrap(), empty);
        assert_eq!(module_hom_associator(&v, Pattern::Ava, &e, &empty, &e).unwrap(), empty);
        assert_eq!(module_hom_associator(&v, Pattern::Aav, &e, &e, &empty).unwrap(), empty);
        for kind in ModuleKind::ALL {
            assert!(check_module(&v, kind).ok());
        }
    }

    #[test]
    fn slot_dimensions_are_checked() {
        let v = Bimodule::new(one_dim_unit(), Matrix::identity(2), Tensor3::zeros(1, 2, 2), Tensor3::zeros(2, 1, 2)).unwrap();
        let e = Vector::basis(1, 0);
        let f = Vector::basis(2, 0);
        assert!(module_hom_associator(&v, Pattern::Vaa, &e, &e, &e).is_err());
        assert!(module_hom_associator(&v, Pattern::Vaa, &f, &e, &e).is_ok());
        assert!(module_hom_associator(&v, Pattern::Aav, &e, &e, &f).is_ok());
    }

    #[test]
    fn rejects_actions_that_are_not_morphisms() {
        // α_V = 2·Id on a 1-dim module with e·f = f: α_V(e·f) = 2f but α(e)·α_V(f) = 2f, fine;
        // α_V = 2·Id with α_A = Id and the unit acting: left side 2f, right side 2f.
        // Use α_V = diag(1, 2) and e·f0 = f1 instead.
        let rho_l = Tensor3::from_fn([1, 2, 2], |_, j, k| if (j, k) == (0, 1) { Scalar::one() } else { Scalar::zero() });
        let alpha_v = Matrix::diagonal(&[Scalar::one(), Scalar::from_int(2)]);
        let err = Bimodule::new(one_dim_unit(), alpha_v, rho_l, Tensor3::zeros(2, 1, 2)).unwrap_err();
        assert!(matches!(err, Error::Invariant { first: 0, second: 0, .. }), "{err}");
    }

    #[test]
    fn rejects_wrong_extents() {
        assert!(Bimodule::new(one_dim_unit(), Matrix::identity(2), Tensor3::zeros(1, 2, 3), Tensor3::zeros(2, 1, 2)).is_err());
        assert!(Bimodule::new(one_dim_unit(), Matrix::identity(2), Tensor3::zeros(1, 2, 2), Tensor3::zeros(1, 2, 2)).is_err());
    }

    #[test]
    fn kind_names_parse() {
        for k in ModuleKind::ALL {
            assert_eq!(k.name().parse::<ModuleKind>().unwrap(), k);
        }
        assert!("lie-module".parse::<ModuleKind>().is_err());
    }

    #[test]
    fn equiv_forms_requires_symmetry() {
        // e·f = f on the left, zero on the right
        let rho_l = Tensor3::from_fn([1, 1, 1], |_, _, _| Scalar::one());
        let v = Bimodule::new(one_dim_unit(), Matrix::identity(1), rho_l, Tensor3::zeros(1, 1, 1)).unwrap();
        assert!(matches!(check_equiv_forms(&v), Err(Error::Precondition(_))));
    }

    #[test]
    fn morphism_checks() {
        let v = Bimodule::new(
            one_dim_unit(),
            Matrix::identity(1),
            Tensor3::from_fn([1, 1, 1], |_, _, _| Scalar::one()),
            Tensor3::from_fn([1, 1, 1], |_, _, _| Scalar::one()),
        )
        .unwrap();
        assert!(is_bimodule_morphism(&Matrix::identity(1), &v, &v).unwrap());
        assert!(is_bimodule_morphism(&Matrix::zeros(1, 1), &v, &v).unwrap());
        assert!(is_bimodule_morphism(&Matrix::diagonal(&[Scalar::from_int(3)]), &v, &v).unwrap());
        let z = Bimodule::zero(one_dim_unit());
        assert!(is_bimodule_morphism(&Matrix::zeros(0, 1), &v, &z).unwrap());
        assert!(is_bimodule_morphism(&Matrix::zeros(1, 1), &v, &z).is_err());
        let other = Bimodule::zero(HomAlgebra::untwisted(Tensor3::zeros(1, 1, 1)).unwrap());
        assert!(is_bimodule_morphism(&Matrix::zeros(0, 1), &v, &other).is_err());
    }
}
