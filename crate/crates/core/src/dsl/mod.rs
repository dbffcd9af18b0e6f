//! A small language for identities over a Hom-algebra and, optionally, a
//! Hom-bimodule.
//!
//! ```text
//! identity := decl* expr "=" expr
//! decl     := ("alg" | "mod") ident* ";"
//! expr     := ["-"] term (("+" | "-") term)*
//! term     := [rational "*"] factor ("." factor)*
//! factor   := ident | "a(" expr ")" | "as(" expr "," expr "," expr ")" | "(" expr ")" | "0"
//! ```
//!
//! `.` is the algebra product or a module action depending on the sorts of
//! its operands and associates to the left; `a(·)` is the twist map of the
//! operand's sort; `as(x, y, z)` is `(x.y).a(z) - a(x).(y.z)`, which is the
//! Hom-associator or the module Hom-associator depending on which slot holds
//! the module element.
//!
//! ```
//! use hombimod::dsl::parse_identity;
//! let id = parse_identity("alg x y; mod v; as(x, x, v) = 0").unwrap();
//! assert_eq!(id.to_string(), "alg x y; mod v; as(x, x, v) = 0");
//! ```

mod library;
mod parse;
mod poly;

use std::fmt;

pub use library::{algebra_identities, module_identities};
pub use parse::parse_identity;
pub use poly::{evaluate, polarize, polarize_in, verify_identity, verify_identity_with, Monomial, PolarizedIdentity, Polynomial};

use crate::error::{Error, Result};
use crate::report::Sort;
use crate::scalar::Scalar;

/// Expression tree of the identity language.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Var { name: String, sort: Sort },
    Mul(Box<Expr>, Box<Expr>),
    Alpha(Box<Expr>),
    Scale(Scalar, Box<Expr>),
    /// The empty sum is the literal `0`.
    Sum(Vec<Expr>),
    Assoc(Box<Expr>, Box<Expr>, Box<Expr>),
}

impl Expr {
    pub fn var(name: &str, sort: Sort) -> Expr {
        Expr::Var { name: name.to_string(), sort }
    }

    pub fn zero() -> Expr {
        Expr::Sum(Vec::new())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn mul(l: Expr, r: Expr) -> Expr {
        Expr::Mul(Box::new(l), Box::new(r))
    }

    pub fn alpha(e: Expr) -> Expr {
        Expr::Alpha(Box::new(e))
    }

    pub fn scale(c: Scalar, e: Expr) -> Expr {
        Expr::Scale(c, Box::new(e))
    }

    pub fn assoc(x: Expr, y: Expr, z: Expr) -> Expr {
        Expr::Assoc(Box::new(x), Box::new(y), Box::new(z))
    }

    fn is_zero_literal(&self) -> bool {
        matches!(self, Expr::Sum(c) if c.is_empty())
    }

    /// Sort of the expression; `None` for expressions built only from `0`,
    /// which fit either sort.
    pub fn sort(&self) -> Result<Option<Sort>> {
        let node_err = |message: &str| Error::Sort { node: self.to_string(), message: message.to_string() };
        match self {
            Expr::Var { sort, .. } => Ok(Some(*sort)),
            Expr::Alpha(e) | Expr::Scale(_, e) => e.sort(),
            Expr::Mul(l, r) => match (l.sort()?, r.sort()?) {
                (Some(Sort::Mod), Some(Sort::Mod)) => Err(node_err("product of two module elements")),
                (Some(Sort::Alg), Some(Sort::Alg)) => Ok(Some(Sort::Alg)),
                (Some(Sort::Mod), _) | (_, Some(Sort::Mod)) => Ok(Some(Sort::Mod)),
                _ => Ok(None),
            },
            Expr::Sum(children) => {
                let mut sort = None;
                for c in children {
                    match (sort, c.sort()?) {
                        (Some(s), Some(t)) if s != t => return Err(node_err("sum of terms of different sorts")),
                        (None, t) => sort = t,
                        _ => {}
                    }
                }
                Ok(sort)
            }
            Expr::Assoc(x, y, z) => {
                let sorts = [x.sort()?, y.sort()?, z.sort()?];
                match sorts.iter().filter(|s| **s == Some(Sort::Mod)).count() {
                    0 if sorts.iter().all(Option::is_some) => Ok(Some(Sort::Alg)),
                    0 => Ok(None),
                    1 => Ok(Some(Sort::Mod)),
                    _ => Err(node_err("associator with more than one module slot")),
                }
            }
        }
    }

    /// `(x.y).a(z) - a(x).(y.z)`
    pub(crate) fn expand_assoc(x: &Expr, y: &Expr, z: &Expr) -> Expr {
        let left = Expr::mul(Expr::mul(x.clone(), y.clone()), Expr::alpha(z.clone()));
        let right = Expr::mul(Expr::alpha(x.clone()), Expr::mul(y.clone(), z.clone()));
        Expr::Sum(vec![left, Expr::scale(-Scalar::one(), right)])
    }

    fn fmt_factor(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Var { .. } | Expr::Alpha(_) | Expr::Assoc(..) => write!(f, "{self}"),
            _ if self.is_zero_literal() => f.write_str("0"),
            _ => write!(f, "({self})"),
        }
    }

    /// A product chain as it appears after an optional coefficient.
    fn fmt_chain(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Mul(l, r) => {
                l.fmt_factor(f)?;
                f.write_str(".")?;
                r.fmt_factor(f)
            }
            _ => self.fmt_factor(f),
        }
    }

    /// A scaled term `c*chain` with the sign already handled by the caller.
    fn fmt_scaled(c: &Scalar, e: &Expr, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !c.is_one() {
            write!(f, "{c}*")?;
        }
        e.fmt_chain(f)
    }

    fn fmt_summand(&self, first: bool, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Scale(c, e) if c.is_negative() => {
                f.write_str(if first { "-" } else { " - " })?;
                Expr::fmt_scaled(&-c, e, f)
            }
            Expr::Sum(c) if !c.is_empty() => {
                if !first {
                    f.write_str(" + ")?;
                }
                write!(f, "({self})")
            }
            _ => {
                if !first {
                    f.write_str(" + ")?;
                }
                write!(f, "{self}")
            }
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Var { name, .. } => f.write_str(name),
            Expr::Alpha(e) => write!(f, "a({e})"),
            Expr::Assoc(x, y, z) => write!(f, "as({x}, {y}, {z})"),
            Expr::Mul(..) => self.fmt_chain(f),
            Expr::Scale(c, e) if c.is_negative() => {
                f.write_str("-")?;
                Expr::fmt_scaled(&-c, e, f)
            }
            Expr::Scale(c, e) => {
                write!(f, "{c}*")?;
                e.fmt_chain(f)
            }
            Expr::Sum(children) if children.is_empty() => f.write_str("0"),
            Expr::Sum(children) => {
                for (i, c) in children.iter().enumerate() {
                    c.fmt_summand(i == 0, f)?;
                }
                Ok(())
            }
        }
    }
}

/// A parsed, sort-checked identity `lhs = rhs` with its declared variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Identity {
    vars: Vec<(String, Sort)>,
    lhs: Expr,
    rhs: Expr,
}

impl Identity {
    /// Builds an identity, checking that every variable is declared with a
    /// consistent sort and that both sides have the same sort.
    pub fn new(vars: Vec<(String, Sort)>, lhs: Expr, rhs: Expr) -> Result<Self> {
        for side in [&lhs, &rhs] {
            check_declared(side, &vars)?;
        }
        match (lhs.sort()?, rhs.sort()?) {
            (Some(s), Some(t)) if s != t => Err(Error::Sort {
                node: format!("{lhs} = {rhs}"),
                message: format!("left side has sort {s}, right side has sort {t}"),
            }),
            _ => Ok(Identity { vars, lhs, rhs }),
        }
    }

    pub fn vars(&self) -> &[(String, Sort)] {
        &self.vars
    }

    pub fn lhs(&self) -> &Expr {
        &self.lhs
    }

    pub fn rhs(&self) -> &Expr {
        &self.rhs
    }

    /// `lhs - rhs`, the expression whose vanishing the identity asserts.
    pub fn difference(&self) -> Expr {
        Expr::Sum(vec![self.lhs.clone(), Expr::scale(-Scalar::one(), self.rhs.clone())])
    }

    pub fn uses_module(&self) -> bool {
        self.vars.iter().any(|(_, s)| *s == Sort::Mod)
    }
}

fn check_declared(e: &Expr, vars: &[(String, Sort)]) -> Result<()> {
    match e {
        Expr::Var { name, sort } => match vars.iter().find(|(n, _)| n == name) {
            Some((_, s)) if s == sort => Ok(()),
            Some((_, s)) => Err(Error::Sort { node: name.clone(), message: format!("declared with sort {s}") }),
            None => Err(Error::Sort { node: name.clone(), message: "undeclared variable".into() }),
        },
        Expr::Mul(l, r) => check_declared(l, vars).and(check_declared(r, vars)),
        Expr::Alpha(x) | Expr::Scale(_, x) => check_declared(x, vars),
        Expr::Sum(c) => c.iter().try_for_each(|x| check_declared(x, vars)),
        Expr::Assoc(x, y, z) => check_declared(x, vars).and(check_declared(y, vars)).and(check_declared(z, vars)),
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for sort in [Sort::Alg, Sort::Mod] {
            let names: Vec<&str> = self.vars.iter().filter(|(_, s)| *s == sort).map(|(n, _)| n.as_str()).collect();
            if !names.is_empty() {
                write!(f, "{} {}; ", sort.keyword(), names.join(" "))?;
            }
        }
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}

impl std::str::FromStr for Identity {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_identity(s)
    }
}
