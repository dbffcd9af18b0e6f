use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;

use crate::algebra::HomAlgebra;
use crate::bimodule::Bimodule;
use crate::error::{Error, Result};
use crate::linalg::Vector;
use crate::report::{scan, CheckOptions, Report, Sort};
use crate::scalar::Scalar;

use super::{Expr, Identity};

/// A nonassociative monomial: variables combined by `.` and `a(·)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Monomial {
    Var(usize),
    Mul(Box<Monomial>, Box<Monomial>),
    Alpha(Box<Monomial>),
}

impl Monomial {
    fn degree(&self, var: usize) -> usize {
        match self {
            Monomial::Var(i) => (*i == var) as usize,
            Monomial::Mul(l, r) => l.degree(var) + r.degree(var),
            Monomial::Alpha(m) => m.degree(var),
        }
    }

    fn map_vars(&self, f: &mut impl FnMut(usize) -> usize) -> Monomial {
        match self {
            Monomial::Var(i) => Monomial::Var(f(*i)),
            Monomial::Mul(l, r) => {
                let l = l.map_vars(f);
                Monomial::Mul(Box::new(l), Box::new(r.map_vars(f)))
            }
            Monomial::Alpha(m) => Monomial::Alpha(Box::new(m.map_vars(f))),
        }
    }

    fn to_expr(&self, vars: &[(String, Sort)]) -> Expr {
        match self {
            Monomial::Var(i) => Expr::var(&vars[*i].0, vars[*i].1),
            Monomial::Mul(l, r) => Expr::mul(l.to_expr(vars), r.to_expr(vars)),
            Monomial::Alpha(m) => Expr::alpha(m.to_expr(vars)),
        }
    }
}

/// Evaluation context: the algebra, the optional module and the sort of
/// every variable.
struct Eval<'a> {
    a: &'a HomAlgebra,
    v: Option<&'a Bimodule>,
    sorts: Vec<Sort>,
}

impl Eval<'_> {
    fn sort(&self, m: &Monomial) -> Sort {
        match m {
            Monomial::Var(i) => self.sorts[*i],
            Monomial::Mul(l, r) => match (self.sort(l), self.sort(r)) {
                (Sort::Alg, Sort::Alg) => Sort::Alg,
                _ => Sort::Mod,
            },
            Monomial::Alpha(x) => self.sort(x),
        }
    }

    fn module(&self) -> &Bimodule {
        self.v.expect("module presence checked before evaluation")
    }

    fn eval(&self, m: &Monomial, env: &[Vector]) -> (Vector, Sort) {
        match m {
            Monomial::Var(i) => (env[*i].clone(), self.sorts[*i]),
            Monomial::Alpha(x) => match self.eval(x, env) {
                (x, Sort::Alg) => (self.a.twist_vec(&x), Sort::Alg),
                (x, Sort::Mod) => (self.module().twist_v(&x), Sort::Mod),
            },
            Monomial::Mul(l, r) => {
                let (x, sx) = self.eval(l, env);
                let (y, sy) = self.eval(r, env);
                match (sx, sy) {
                    (Sort::Alg, Sort::Alg) => (self.a.mul_vec(&x, &y), Sort::Alg),
                    (Sort::Alg, Sort::Mod) => (self.module().left_vec(&x, &y), Sort::Mod),
                    (Sort::Mod, Sort::Alg) => (self.module().right_vec(&x, &y), Sort::Mod),
                    (Sort::Mod, Sort::Mod) => unreachable!("rejected by sort checking"),
                }
            }
        }
    }

    fn dim(&self, sort: Sort) -> usize {
        match sort {
            Sort::Alg => self.a.dim(),
            Sort::Mod => self.v.map_or(0, Bimodule::mdim),
        }
    }
}

/// A linear combination of monomials over named, sorted variables, with
/// like terms combined and zero coefficients dropped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    vars: Vec<(String, Sort)>,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Polynomial {
    /// Expands `lhs - rhs` of an identity.
    pub fn from_identity(id: &Identity) -> Polynomial {
        let vars = id.vars().to_vec();
        let terms = expand(&id.difference(), &vars);
        Polynomial { vars, terms }
    }

    pub fn vars(&self) -> &[(String, Sort)] {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|(n, _)| n == name)
    }

    /// Degree of `var` in every monomial, or `None` if the monomials
    /// disagree.
    pub fn homogeneous_degree(&self, var: usize) -> Option<usize> {
        let mut degrees = self.terms.keys().map(|m| m.degree(var));
        let first = degrees.next().unwrap_or(0);
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn is_multilinear(&self) -> bool {
        (0..self.vars.len()).all(|i| self.terms.keys().all(|m| m.degree(i) == 1))
    }

    /// Components of fixed degree in `var`, in increasing degree.
    fn split_by_degree(&self, var: usize) -> Vec<(usize, Polynomial)> {
        let mut parts: BTreeMap<usize, BTreeMap<Monomial, Scalar>> = BTreeMap::new();
        for (m, c) in &self.terms {
            parts.entry(m.degree(var)).or_default().insert(m.clone(), c.clone());
        }
        parts.into_iter().map(|(d, terms)| (d, Polynomial { vars: self.vars.clone(), terms })).collect()
    }

    /// Replaces `var`, of degree `d` in every monomial, by `d` fresh copies
    /// and sums over all ways of assigning the copies to the occurrences.
    fn linearize(&self, var: usize, d: usize) -> Polynomial {
        let (name, sort) = self.vars[var].clone();
        let mut vars: Vec<(String, Sort)> = self.vars.clone();
        let mut copies = Vec::with_capacity(d);
        for k in 1..=d {
            let mut fresh = format!("{name}_{k}");
            while vars.iter().any(|(n, _)| *n == fresh) {
                fresh.push('_');
            }
            copies.push(vars.len());
            vars.push((fresh, sort));
        }
        let mut terms: BTreeMap<Monomial, Scalar> = BTreeMap::new();
        for (m, c) in &self.terms {
            for perm in (0..d).permutations(d) {
                let mut next = 0;
                let replaced = m.map_vars(&mut |i| {
                    if i == var {
                        next += 1;
                        copies[perm[next - 1]]
                    } else {
                        i
                    }
                });
                *terms.entry(replaced).or_insert_with(Scalar::zero) += c;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Polynomial { vars, terms }.drop_unused()
    }

    /// Removes variables that occur in no monomial, renumbering the rest.
    fn drop_unused(&self) -> Polynomial {
        let used: Vec<usize> = (0..self.vars.len()).filter(|&i| self.terms.keys().any(|m| m.degree(i) > 0)).collect();
        let mut new_index = vec![usize::MAX; self.vars.len()];
        for (k, &i) in used.iter().enumerate() {
            new_index[i] = k;
        }
        let vars = used.iter().map(|&i| self.vars[i].clone()).collect();
        let terms = self.terms.iter().map(|(m, c)| (m.map_vars(&mut |i| new_index[i]), c.clone())).collect();
        Polynomial { vars, terms }
    }

    pub fn to_expr(&self) -> Expr {
        Expr::Sum(
            self.terms
                .iter()
                .map(|(m, c)| {
                    let e = m.to_expr(&self.vars);
                    if c.is_one() {
                        e
                    } else {
                        Expr::scale(c.clone(), e)
                    }
                })
                .collect(),
        )
    }

    /// Value at an assignment of one vector per variable.
    fn eval_at(&self, ctx: &Eval<'_>, env: &[Vector]) -> Vector {
        let mut out: Option<Vector> = None;
        for (m, c) in &self.terms {
            let (x, _) = ctx.eval(m, env);
            match &mut out {
                Some(acc) => acc.add_scaled(c, &x),
                None => out = Some(x.scale(c)),
            }
        }
        out.expect("evaluated only when nonzero")
    }

    fn output_sort(&self, ctx: &Eval<'_>) -> Option<Sort> {
        self.terms.keys().next().map(|m| ctx.sort(m))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_expr())
    }
}

fn expand(e: &Expr, vars: &[(String, Sort)]) -> BTreeMap<Monomial, Scalar> {
    let mut out: BTreeMap<Monomial, Scalar> = BTreeMap::new();
    match e {
        Expr::Var { name, .. } => {
            let i = vars.iter().position(|(n, _)| n == name).expect("identity variables are declared");
            out.insert(Monomial::Var(i), Scalar::one());
        }
        Expr::Alpha(x) => {
            for (m, c) in expand(x, vars) {
                out.insert(Monomial::Alpha(Box::new(m)), c);
            }
        }
        Expr::Scale(s, x) => {
            for (m, c) in expand(x, vars) {
                out.insert(m, &c * s);
            }
        }
        Expr::Mul(l, r) => {
            let left = expand(l, vars);
            let right = expand(r, vars);
            for (ml, cl) in &left {
                for (mr, cr) in &right {
                    let m = Monomial::Mul(Box::new(ml.clone()), Box::new(mr.clone()));
                    *out.entry(m).or_insert_with(Scalar::zero) += &(cl * cr);
                }
            }
        }
        Expr::Sum(children) => {
            for child in children {
                for (m, c) in expand(child, vars) {
                    *out.entry(m).or_insert_with(Scalar::zero) += &c;
                }
            }
        }
        Expr::Assoc(x, y, z) => return expand(&Expr::expand_assoc(x, y, z), vars),
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// A multilinear component of an identity together with the degree of
/// each original variable in that component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolarizedIdentity {
    pub occurrences: Vec<(String, usize)>,
    pub poly: Polynomial,
}

impl PolarizedIdentity {
    pub fn to_expr(&self) -> Expr {
        self.poly.to_expr()
    }
}

/// Polarizes an identity in every variable: splits it into components that
/// are homogeneous in each variable and replaces a variable of degree `d` by
/// `d` fresh copies, summing over all assignments of copies to occurrences.
/// Over a field of characteristic zero the identity holds iff every returned
/// multilinear component vanishes. No `1/d!` normalization is applied.
pub fn polarize(id: &Identity) -> Vec<PolarizedIdentity> {
    polarize_vars(Polynomial::from_identity(id), id.vars().iter().map(|(n, _)| n.clone()).collect())
}

/// Polarizes an identity in one variable only.
pub fn polarize_in(id: &Identity, var: &str) -> Result<Vec<PolarizedIdentity>> {
    if !id.vars().iter().any(|(n, _)| n == var) {
        return Err(Error::UnknownName(format!("variable {var:?}")));
    }
    Ok(polarize_vars(Polynomial::from_identity(id), vec![var.to_string()]))
}

fn polarize_vars(poly: Polynomial, names: Vec<String>) -> Vec<PolarizedIdentity> {
    let mut parts = vec![(Vec::new(), poly)];
    for name in names {
        let mut next = Vec::new();
        for (occ, p) in parts {
            let Some(var) = p.var_index(&name) else {
                next.push((occ, p));
                continue;
            };
            for (d, component) in p.split_by_degree(var) {
                let mut occ: Vec<(String, usize)> = occ.clone();
                occ.push((name.clone(), d));
                let linear = if d > 1 { component.linearize(var, d) } else { component.drop_unused() };
                next.push((occ, linear));
            }
        }
        parts = next;
    }
    parts
        .into_iter()
        .filter(|(_, p)| !p.is_zero())
        .map(|(occurrences, poly)| PolarizedIdentity { occurrences, poly: poly.drop_unused() })
        .collect()
}

fn context<'a>(id: &Identity, a: &'a HomAlgebra, v: Option<&'a Bimodule>) -> Result<Eval<'a>> {
    if id.uses_module() && v.is_none() {
        return Err(Error::MissingModule);
    }
    if let Some(v) = v {
        if !v.parent().same_structure(a) {
            return Err(Error::Precondition("module is not over the given algebra".into()));
        }
    }
    Ok(Eval { a, v, sorts: Vec::new() })
}

/// Value of `lhs - rhs` at the given assignment (one vector per declared
/// variable, in declaration order).
pub fn evaluate(id: &Identity, a: &HomAlgebra, v: Option<&Bimodule>, assignment: &[Vector]) -> Result<Vector> {
    let mut ctx = context(id, a, v)?;
    ctx.sorts = id.vars().iter().map(|(_, s)| *s).collect();
    if assignment.len() != id.vars().len() {
        return Err(Error::DimensionMismatch { context: "identity assignment", expected: id.vars().len(), found: assignment.len() });
    }
    for (x, &s) in assignment.iter().zip(&ctx.sorts) {
        let expected = ctx.dim(s);
        if x.len() != expected {
            return Err(Error::DimensionMismatch { context: "identity assignment vector", expected, found: x.len() });
        }
    }
    let poly = Polynomial::from_identity(id);
    let out_dim = match poly.output_sort(&ctx).or(id.lhs().sort()?).or(id.rhs().sort()?) {
        Some(s) => ctx.dim(s),
        None => 0,
    };
    if poly.is_zero() {
        return Ok(Vector::zeros(out_dim));
    }
    Ok(poly.eval_at(&ctx, assignment))
}

/// Verifies an identity on all basis tuples after polarization.
pub fn verify_identity(id: &Identity, a: &HomAlgebra, v: Option<&Bimodule>) -> Result<Report> {
    verify_identity_with(id, a, v, CheckOptions::default())
}

pub fn verify_identity_with(id: &Identity, a: &HomAlgebra, v: Option<&Bimodule>, opts: CheckOptions) -> Result<Report> {
    let base = context(id, a, v)?;
    let name = id.to_string();
    let cap = opts.max_witnesses;
    let mut report = Report::pass();
    for part in polarize(id) {
        let ctx = Eval { a: base.a, v: base.v, sorts: part.poly.vars().iter().map(|(_, s)| *s).collect() };
        let slots: Vec<(Sort, usize)> = ctx.sorts.iter().map(|&s| (s, ctx.dim(s))).collect();
        let basis: Vec<Vec<Vector>> = slots.iter().map(|&(_, n)| (0..n).map(|i| Vector::basis(n, i)).collect()).collect();
        let part_report = scan(&slots, cap, |t| {
            let env: Vec<Vector> = t.iter().enumerate().map(|(k, &i)| basis[k][i].clone()).collect();
            vec![(name.clone(), part.poly.eval_at(&ctx, &env))]
        });
        report = report.merge(part_report, cap);
        if cap.is_some_and(|c| report.witnesses().len() >= c) {
            break;
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::parse_identity;

    fn poly(text: &str) -> Polynomial {
        Polynomial::from_identity(&parse_identity(text).unwrap())
    }

    #[test]
    fn binomial_polarization() {
        let id = parse_identity("alg x y; as(x,x,y) = 0").unwrap();
        let parts = polarize_in(&id, "x").unwrap();
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0].occurrences, vec![("x".to_string(), 2)]);
        let expected = poly("alg y x_1 x_2; as(x_1,x_2,y) + as(x_2,x_1,y) = 0");
        assert_eq!(parts[0].poly, expected);
    }

    #[test]
    fn multilinear_identity_is_unchanged() {
        let id = parse_identity("alg x y z; as(x,y,z) = 0").unwrap();
        let parts = polarize(&id);
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0].poly, Polynomial::from_identity(&id));
        assert!(parts[0].poly.is_multilinear());
    }

    #[test]
    fn inhomogeneous_identities_split_by_degree() {
        let id = parse_identity("alg x y; x.x + x = y").unwrap();
        let parts = polarize(&id);
        let degrees: Vec<_> = parts.iter().map(|p| p.occurrences.clone()).collect();
        assert_eq!(degrees.len(), 3);
        assert!(parts.iter().all(|p| p.poly.is_multilinear()));
    }

    #[test]
    fn like_terms_cancel() {
        assert!(poly("alg x y; x.y + y.x = y.x + x.y").is_zero());
        assert!(polarize(&parse_identity("alg x; 2*x - x = x").unwrap()).is_empty());
    }

    #[test]
    fn fresh_names_avoid_clashes() {
        let id = parse_identity("alg x x_1; x.x = x_1").unwrap();
        for p in polarize(&id) {
            let names: Vec<&str> = p.poly.vars().iter().map(|(n, _)| n.as_str()).collect();
            assert_eq!(names.iter().unique().count(), names.len());
        }
    }
}
