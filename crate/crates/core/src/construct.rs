//! Constructions producing new Hom-algebras and Hom-bimodules from old ones.
//!
//! Every constructor validates its own output: a failed hypothesis is an
//! [`Error::Precondition`], while an output that fails the property it should
//! have is an [`Error::Internal`].

use crate::algebra::{check_algebra, is_algebra_morphism, AlgebraClass, HomAlgebra};
use crate::bimodule::{check_module, Bimodule, ModuleKind};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Tensor3};
use crate::report::Report;
use crate::scalar::Scalar;

/// Normalization of the Jordan product built from a bilinear product.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PlusConvention {
    /// `x ∗ y = xy + yx`
    #[default]
    Sum,
    /// `x ∗ y = (xy + yx) / 2`
    Half,
}

/// Class of bimodule a shifted or split construction is asked to produce.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModuleClass {
    Alternative,
    Jordan,
}

impl ModuleClass {
    pub fn algebra_class(self) -> AlgebraClass {
        match self {
            ModuleClass::Alternative => AlgebraClass::Alternative,
            ModuleClass::Jordan => AlgebraClass::Jordan,
        }
    }

    pub fn module_kind(self) -> ModuleKind {
        match self {
            ModuleClass::Alternative => ModuleKind::AltBimodule,
            ModuleClass::Jordan => ModuleKind::JordanBimodule,
        }
    }
}

impl std::str::FromStr for ModuleClass {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "alternative" => Ok(ModuleClass::Alternative),
            "jordan" => Ok(ModuleClass::Jordan),
            _ => Err(Error::UnknownName(format!("module class {s:?} (expected alternative or jordan)"))),
        }
    }
}

fn precondition(what: &str, report: &Report) -> Result<()> {
    match report.witnesses().first() {
        None => Ok(()),
        Some(w) => Err(Error::Precondition(format!("{what}: {w}"))),
    }
}

fn postcondition(what: &str, report: &Report) -> Result<()> {
    match report.witnesses().first() {
        None => Ok(()),
        Some(w) => Err(Error::Internal(format!("{what}: {w}"))),
    }
}

fn square(m: &Matrix, n: usize, what: &'static str) -> Result<()> {
    if m.rows() != n || m.cols() != n {
        return Err(Error::DimensionMismatch { context: what, expected: n * n, found: m.rows() * m.cols() });
    }
    Ok(())
}

/// The algebra `(A, ∗, α)` with `x ∗ y = xy + yx`.
pub fn plus_algebra(a: &HomAlgebra) -> Result<HomAlgebra> {
    plus_algebra_with(a, PlusConvention::Sum)
}

pub fn plus_algebra_with(a: &HomAlgebra, convention: PlusConvention) -> Result<HomAlgebra> {
    let mul = a.mul();
    let half = Scalar::new(1, 2)?;
    let n = a.dim();
    let plus = Tensor3::from_fn([n, n, n], |i, j, k| {
        let s = mul.get(i, j, k) + mul.get(j, i, k);
        match convention {
            PlusConvention::Sum => s,
            PlusConvention::Half => &s * &half,
        }
    });
    let out = HomAlgebra::new(plus, a.alpha().clone())?;
    postcondition("plus algebra is not commutative", &check_algebra(&out, AlgebraClass::Commutative))?;
    Ok(out.with_labels_of(a))
}

/// The Yau twist `(A, β∘μ, β∘α)` along an endomorphism `β` commuting with `α`.
pub fn yau_twist(a: &HomAlgebra, beta: &Matrix) -> Result<HomAlgebra> {
    square(beta, a.dim(), "twisting map shape")?;
    if !is_algebra_morphism(beta, &untwisted_view(a)?, &untwisted_view(a)?)? {
        return Err(Error::Precondition("twisting map is not an endomorphism of the product".into()));
    }
    if beta.compose(a.alpha())? != a.alpha().compose(beta)? {
        return Err(Error::Precondition("twisting map does not commute with the algebra twist".into()));
    }
    let out = HomAlgebra::new(a.mul().map_output(beta)?, beta.compose(a.alpha())?)?;
    Ok(out.with_labels_of(a))
}

/// `(A, μ, Id)`, used to test product endomorphisms independently of `α`.
fn untwisted_view(a: &HomAlgebra) -> Result<HomAlgebra> {
    HomAlgebra::untwisted(a.mul().clone())
}

/// The bimodule `(V, β_V∘ρ_l, β_V∘ρ_r, β_V∘α_V)` over `yau_twist(A, β_A)`.
pub fn twist_bimodule(a: &HomAlgebra, v: &Bimodule, beta_a: &Matrix, beta_v: &Matrix) -> Result<Bimodule> {
    if !v.parent().same_structure(a) {
        return Err(Error::Precondition("bimodule is not over the given algebra".into()));
    }
    square(beta_v, v.mdim(), "module twisting map shape")?;
    let twisted = yau_twist(a, beta_a)?;
    let id_check = |lhs: Tensor3, rhs: Tensor3, what: &str| -> Result<()> {
        match crate::algebra::first_differing_fiber(&lhs, &rhs) {
            None => Ok(()),
            Some((i, j)) => Err(Error::Precondition(format!("{what} fails at basis pair ({i}, {j})"))),
        }
    };
    id_check(
        v.rho_l().map_output(beta_v)?,
        v.rho_l().map_inputs(beta_a, beta_v)?,
        "left compatibility β_V(a·v) = β_A(a)·β_V(v)",
    )?;
    id_check(
        v.rho_r().map_output(beta_v)?,
        v.rho_r().map_inputs(beta_v, beta_a)?,
        "right compatibility β_V(v·a) = β_V(v)·β_A(a)",
    )?;
    if beta_v.compose(v.alpha_v())? != v.alpha_v().compose(beta_v)? {
        return Err(Error::Precondition("module twisting map does not commute with the module twist".into()));
    }
    Bimodule::new(
        twisted,
        beta_v.compose(v.alpha_v())?,
        v.rho_l().map_output(beta_v)?,
        v.rho_r().map_output(beta_v)?,
    )
}

/// The shifted bimodule `V^(n)` with `a ·_n v = α^n(a)·v` and
/// `v ·_n a = v·α^n(a)`, over the same algebra and with the same `α_V`.
///
/// For `class = Jordan` the module twist must satisfy `α_V^n = Id`.
pub fn nth_shift_bimodule(v: &Bimodule, n: u32, class: ModuleClass) -> Result<Bimodule> {
    if class == ModuleClass::Jordan && !v.alpha_v().pow(n)?.is_identity() {
        return Err(Error::Precondition(format!("module twist to the power {n} is not the identity")));
    }
    let alpha_n = v.parent().alpha().pow(n)?;
    let id_v = Matrix::identity(v.mdim());
    Bimodule::new(
        v.parent().clone(),
        v.alpha_v().clone(),
        v.rho_l().map_inputs(&alpha_n, &id_v)?,
        v.rho_r().map_inputs(&id_v, &alpha_n)?,
    )
}

/// Twist by `(β_A, β_V)` followed by the `n`-th shift, computed along two
/// paths that must agree exactly: the composition of [`twist_bimodule`] and
/// [`nth_shift_bimodule`], and the closed form
/// `ρ_l∘(β_A(β_Aα_A)^n ⊗ β_V)`, `ρ_r∘(β_V ⊗ β_A(β_Aα_A)^n)`.
pub fn corollary_twist(
    a: &HomAlgebra,
    v: &Bimodule,
    beta_a: &Matrix,
    beta_v: &Matrix,
    n: u32,
    class: ModuleClass,
) -> Result<Bimodule> {
    let twisted = twist_bimodule(a, v, beta_a, beta_v)?;
    let composed = nth_shift_bimodule(&twisted, n, class)?;

    let shift = beta_a.compose(&beta_a.compose(a.alpha())?.pow(n)?)?;
    let direct_l = v.rho_l().map_inputs(&shift, beta_v)?;
    let direct_r = v.rho_r().map_inputs(beta_v, &shift)?;
    if &direct_l != composed.rho_l() || &direct_r != composed.rho_r() {
        return Err(Error::Internal("closed form of the shifted twist disagrees with the composition".into()));
    }
    Ok(composed)
}

/// The Jordan bimodule `ρ_l = ρ1 + ρ2∘τ`, `ρ_r = ρ1∘τ + ρ2` assembled from a
/// left special action `ρ1` and a right special action `ρ2` that commute.
pub fn special_to_bimodule(a: &HomAlgebra, rho1: &Tensor3, rho2: &Tensor3, alpha_v: &Matrix) -> Result<Bimodule> {
    let left = Bimodule::new(a.clone(), alpha_v.clone(), rho1.clone(), Tensor3::zeros(alpha_v.rows(), a.dim(), alpha_v.rows()))?;
    let right = Bimodule::new(a.clone(), alpha_v.clone(), Tensor3::zeros(a.dim(), alpha_v.rows(), alpha_v.rows()), rho2.clone())?;
    let both = Bimodule::new(a.clone(), alpha_v.clone(), rho1.clone(), rho2.clone())?;

    precondition("algebra is not Hom-Jordan", &check_algebra(a, AlgebraClass::Jordan))?;
    precondition("left action is not special", &check_module(&left, ModuleKind::SpecialLeft))?;
    precondition("right action is not special", &check_module(&right, ModuleKind::SpecialRight))?;
    precondition("actions do not commute", &check_module(&both, ModuleKind::OperatorCommutativity))?;

    let rho_l = rho1.checked_add(&rho2.swap_inputs())?;
    let rho_r = rho1.swap_inputs().checked_add(rho2)?;
    let out = Bimodule::new(a.clone(), alpha_v.clone(), rho_l, rho_r)?;
    postcondition("assembled module is not a Jordan bimodule", &check_module(&out, ModuleKind::JordanBimodule))?;
    Ok(out)
}

/// The Jordan bimodule over `plus_algebra(A)` obtained from an associative
/// bimodule over an associative algebra.
pub fn plus_bimodule(a: &HomAlgebra, v: &Bimodule) -> Result<Bimodule> {
    if !v.parent().same_structure(a) {
        return Err(Error::Precondition("bimodule is not over the given algebra".into()));
    }
    precondition("algebra is not Hom-associative", &check_algebra(a, AlgebraClass::Associative))?;
    precondition("bimodule is not Hom-associative", &check_module(v, ModuleKind::AssocBimodule))?;
    special_to_bimodule(&plus_algebra(a)?, v.rho_l(), v.rho_r(), v.alpha_v())
}

/// `A ⊕ V` with `(a + u)(b + w) = ab + a·w + u·b` and twist `α_A ⊕ α_V`.
pub fn split_null_extension(a: &HomAlgebra, v: &Bimodule, class: ModuleClass) -> Result<HomAlgebra> {
    if !v.parent().same_structure(a) {
        return Err(Error::Precondition("bimodule is not over the given algebra".into()));
    }
    precondition("algebra fails its class", &check_algebra(a, class.algebra_class()))?;
    precondition("bimodule fails its class", &check_module(v, class.module_kind()))?;

    let (n, m) = (a.dim(), v.mdim());
    let d = n + m;
    let mul = Tensor3::from_fn([d, d, d], |i, j, k| match (i < n, j < n, k < n) {
        (true, true, true) => a.mul().get(i, j, k).clone(),
        (true, false, false) => v.rho_l().get(i, j - n, k - n).clone(),
        (false, true, false) => v.rho_r().get(i - n, j, k - n).clone(),
        _ => Scalar::zero(),
    });
    let mut out = HomAlgebra::new(mul, a.alpha().direct_sum(v.alpha_v()))?;
    let labels = a.labels().map(|l| l.iter().cloned().chain((0..m).map(|j| format!("f{j}"))).collect());
    out.set_labels(labels);
    postcondition("split null extension fails its class", &check_algebra(&out, class.algebra_class()))?;
    Ok(out)
}

/// `A` as a bimodule over itself.
pub fn regular_bimodule(a: &HomAlgebra) -> Bimodule {
    Bimodule::new(a.clone(), a.alpha().clone(), a.mul().clone(), a.mul().clone())
        .expect("the product of a Hom-algebra is multiplicative")
}
