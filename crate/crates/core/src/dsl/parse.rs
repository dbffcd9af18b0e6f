use crate::error::{Error, Result};
use crate::report::Sort;
use crate::scalar::Scalar;

use super::{Expr, Identity};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Number(String),
    Slash,
    Star,
    Dot,
    Plus,
    Minus,
    LParen,
    RParen,
    Comma,
    Semi,
    Eq,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Number(s) => format!("number `{s}`"),
            Tok::End => "end of input".into(),
            other => {
                let c = match other {
                    Tok::Slash => '/',
                    Tok::Star => '*',
                    Tok::Dot => '.',
                    Tok::Plus => '+',
                    Tok::Minus => '-',
                    Tok::LParen => '(',
                    Tok::RParen => ')',
                    Tok::Comma => ',',
                    Tok::Semi => ';',
                    _ => '=',
                };
                format!("`{c}`")
            }
        }
    }
}

/// Tokens with their 1-based starting column.
fn lex(text: &str) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let column = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), column));
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            out.push((Tok::Number(chars[start..i].iter().collect()), column));
            continue;
        }
        let tok = match c {
            '/' => Tok::Slash,
            '*' => Tok::Star,
            '.' => Tok::Dot,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            ',' => Tok::Comma,
            ';' => Tok::Semi,
            '=' => Tok::Eq,
            _ => return Err(Error::Syntax { column, message: format!("unexpected character {c:?}") }),
        };
        out.push((tok, column));
        i += 1;
    }
    out.push((Tok::End, chars.len() + 1));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    vars: Vec<(String, Sort)>,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn peek_at(&self, offset: usize) -> &Tok {
        let i = (self.pos + offset).min(self.toks.len() - 1);
        &self.toks[i].0
    }

    fn column(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { column: self.column(), message: message.into() })
    }

    fn expect(&mut self, tok: Tok) -> Result<()> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            self.error(format!("expected {}, found {}", tok.describe(), self.peek().describe()))
        }
    }

    fn declarations(&mut self) -> Result<()> {
        loop {
            let sort = match self.peek() {
                Tok::Ident(k) if k == "alg" => Sort::Alg,
                Tok::Ident(k) if k == "mod" => Sort::Mod,
                _ => return Ok(()),
            };
            self.bump();
            while let Tok::Ident(name) = self.peek().clone() {
                if name == "alg" || name == "mod" {
                    return self.error(format!("`{name}` is a keyword"));
                }
                if self.vars.iter().any(|(n, _)| *n == name) {
                    return self.error(format!("variable `{name}` declared twice"));
                }
                self.vars.push((name, sort));
                self.bump();
            }
            self.expect(Tok::Semi)?;
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut terms = Vec::new();
        let negate_first = *self.peek() == Tok::Minus;
        if negate_first {
            self.bump();
        }
        let first = self.term()?;
        terms.push(if negate_first { negate(first) } else { first });
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    terms.push(self.term()?);
                }
                Tok::Minus => {
                    self.bump();
                    let t = self.term()?;
                    terms.push(negate(t));
                }
                _ => break,
            }
        }
        Ok(if terms.len() == 1 { terms.pop().unwrap() } else { Expr::Sum(terms) })
    }

    fn term(&mut self) -> Result<Expr> {
        let coefficient = if self.at_coefficient() { Some(self.rational()?) } else { None };
        let mut e = self.factor()?;
        while *self.peek() == Tok::Dot {
            self.bump();
            let r = self.factor()?;
            e = Expr::mul(e, r);
        }
        Ok(match coefficient {
            Some(c) => Expr::scale(c, e),
            None => e,
        })
    }

    /// Whether the upcoming tokens are `number ["/" number] "*"`.
    fn at_coefficient(&self) -> bool {
        if !matches!(self.peek(), Tok::Number(_)) {
            return false;
        }
        match self.peek_at(1) {
            Tok::Star => true,
            Tok::Slash => matches!(self.peek_at(2), Tok::Number(_)) && *self.peek_at(3) == Tok::Star,
            _ => false,
        }
    }

    fn rational(&mut self) -> Result<Scalar> {
        let column = self.column();
        let Tok::Number(num) = self.bump() else { unreachable!("checked by at_coefficient") };
        let text = if *self.peek() == Tok::Slash {
            self.bump();
            let Tok::Number(den) = self.bump() else { unreachable!("checked by at_coefficient") };
            format!("{num}/{den}")
        } else {
            num
        };
        self.expect(Tok::Star)?;
        text.parse::<Scalar>().map_err(|e| Error::Syntax { column, message: e.to_string() })
    }

    fn factor(&mut self) -> Result<Expr> {
        match self.peek().clone() {
            Tok::Ident(name) if *self.peek_at(1) == Tok::LParen && (name == "a" || name == "as") => {
                self.bump();
                self.bump();
                if name == "a" {
                    let e = self.expr()?;
                    self.expect(Tok::RParen)?;
                    Ok(Expr::alpha(e))
                } else {
                    let x = self.expr()?;
                    self.expect(Tok::Comma)?;
                    let y = self.expr()?;
                    self.expect(Tok::Comma)?;
                    let z = self.expr()?;
                    self.expect(Tok::RParen)?;
                    Ok(Expr::assoc(x, y, z))
                }
            }
            Tok::Ident(name) => match self.vars.iter().find(|(n, _)| *n == name) {
                Some(&(_, sort)) => {
                    self.bump();
                    Ok(Expr::var(&name, sort))
                }
                None => Err(Error::Sort { node: name, message: "undeclared variable".into() }),
            },
            Tok::Number(n) if n.bytes().all(|b| b == b'0') => {
                self.bump();
                Ok(Expr::zero())
            }
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            other => self.error(format!("expected a factor, found {}", other.describe())),
        }
    }
}

fn negate(e: Expr) -> Expr {
    match e {
        Expr::Scale(c, inner) => Expr::Scale(-c, inner),
        other => Expr::scale(-Scalar::one(), other),
    }
}

/// Parses and sort-checks an identity.
pub fn parse_identity(text: &str) -> Result<Identity> {
    let mut p = Parser { toks: lex(text)?, pos: 0, vars: Vec::new() };
    p.declarations()?;
    let lhs = p.expr()?;
    p.expect(Tok::Eq)?;
    let rhs = p.expr()?;
    if *p.peek() != Tok::End {
        return p.error(format!("unexpected {} after the identity", p.peek().describe()));
    }
    Identity::new(p.vars, lhs, rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> Expr {
        Expr::var("x", Sort::Alg)
    }

    fn y() -> Expr {
        Expr::var("y", Sort::Alg)
    }

    #[test]
    fn repeated_variable_associator() {
        let id = parse_identity("alg x y; as(x,x,y) = 0").unwrap();
        assert_eq!(id.lhs(), &Expr::assoc(x(), x(), y()));
        assert_eq!(id.rhs(), &Expr::zero());
    }

    #[test]
    fn module_associativity_statement() {
        let id = parse_identity("alg a b; mod v; (a.b).a(v) = a(a).(b.v)").unwrap();
        assert_eq!(id.lhs().sort().unwrap(), Some(Sort::Mod));
        let a = Expr::var("a", Sort::Alg);
        let b = Expr::var("b", Sort::Alg);
        let v = Expr::var("v", Sort::Mod);
        assert_eq!(id.lhs(), &Expr::mul(Expr::mul(a.clone(), b.clone()), Expr::alpha(v.clone())));
        assert_eq!(id.rhs(), &Expr::mul(Expr::alpha(a), Expr::mul(b, v)));
    }

    #[test]
    fn module_times_module_is_a_sort_error() {
        match parse_identity("mod v w; v.w = 0") {
            Err(Error::Sort { node, .. }) => assert_eq!(node, "v.w"),
            other => panic!("expected sort error, got {other:?}"),
        }
    }

    #[test]
    fn two_module_slots_in_associator_rejected() {
        assert!(matches!(parse_identity("alg x; mod v w; as(v, x, w) = 0"), Err(Error::Sort { .. })));
    }

    #[test]
    fn mixed_sums_and_sides_rejected() {
        assert!(matches!(parse_identity("alg x; mod v; x + v = 0"), Err(Error::Sort { .. })));
        assert!(matches!(parse_identity("alg x; mod v; x = v"), Err(Error::Sort { .. })));
        assert!(matches!(parse_identity("alg x; y = 0"), Err(Error::Sort { .. })));
    }

    #[test]
    fn syntax_errors_carry_columns() {
        let cases = [("alg x; x. = 0", 11), ("alg x; x = ", 12), ("alg x; x $ x", 10), ("alg x x; x = 0", 7), ("alg x; 3 = x", 8)];
        for (text, col) in cases {
            match parse_identity(text) {
                Err(Error::Syntax { column, .. }) => assert_eq!(column, col, "{text}"),
                other => panic!("{text}: expected syntax error, got {other:?}"),
            }
        }
    }

    #[test]
    fn coefficients_and_signs() {
        let id = parse_identity("alg x y; -x.y - 1/2*y.x = 2*x").unwrap();
        let q = |n, d| Scalar::new(n, d).unwrap();
        assert_eq!(
            id.lhs(),
            &Expr::Sum(vec![Expr::scale(q(-1, 1), Expr::mul(x(), y())), Expr::scale(q(-1, 2), Expr::mul(y(), x()))])
        );
        assert_eq!(id.rhs(), &Expr::scale(q(2, 1), x()));
        assert!(matches!(parse_identity("alg x; 1/0*x = 0"), Err(Error::Syntax { .. })));
    }

    #[test]
    fn dot_is_left_associative() {
        let id = parse_identity("alg x y; x.y.x = 0").unwrap();
        assert_eq!(id.lhs(), &Expr::mul(Expr::mul(x(), y()), x()));
    }

    #[test]
    fn a_is_a_variable_unless_applied() {
        let id = parse_identity("alg a; a.a(a) = as(a, a, a)").unwrap();
        let a = Expr::var("a", Sort::Alg);
        assert_eq!(id.lhs(), &Expr::mul(a.clone(), Expr::alpha(a.clone())));
    }
}
