//! Recursive-descent parser for set expressions.
//!
//! ```text
//! root      := predicate | expr
//! predicate := 'subset(' expr ',' expr ')' | 'eq(' expr ',' expr ')' | 'empty(' expr ')'
//! expr      := sum
//! sum       := diff ('+' diff)*
//! diff      := unionE ('\' unionE)*
//! unionE    := inter ('|' inter)*
//! inter     := unary ('&' unary)*
//! unary     := '~' unary | atom
//! atom      := IDENT | '(' expr ')' | 'tf(' expr ')' | 'ff(' expr ')'
//!            | 'cart(' expr ',' expr ')' | 'prod(' expr ',' expr ')'
//!            | 'scale(' NUMBER ',' expr ')' | 'div(' expr ',' NUMBER ')'
//! ```
//!
//! Function names are only keywords when followed by `(`, so a set may still
//! be called `tf` or `eq`.

use super::ast::{BinOp, Expr, ExprKind};
use super::error::{ErrorKind, Pos, SourceError};
use super::lexer::{tokenize, Tok, Token};

const PREDICATES: [&str; 3] = ["subset", "eq", "empty"];

struct Parser {
    tokens: Vec<Token>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.at]
    }

    fn peek_tok(&self, ahead: usize) -> &Tok {
        let i = (self.at + ahead).min(self.tokens.len() - 1);
        &self.tokens[i].tok
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.at].clone();
        if self.at + 1 < self.tokens.len() {
            self.at += 1;
        }
        t
    }

    fn error(&self, pos: Pos, message: impl Into<String>) -> SourceError {
        SourceError::new(ErrorKind::ParseError, pos, message)
    }

    fn expect(&mut self, tok: Tok, context: &str) -> Result<Token, SourceError> {
        let t = self.peek();
        if t.tok == tok {
            return Ok(self.bump());
        }
        Err(self.error(
            t.pos,
            format!(
                "expected {} {context}, found {}",
                tok.describe(),
                t.tok.describe()
            ),
        ))
    }

    /// `name(` at the cursor.
    fn call_of(&self) -> Option<(&str, Pos)> {
        match (&self.peek().tok, self.peek_tok(1)) {
            (Tok::Ident(name), Tok::LParen) => Some((name.as_str(), self.peek().pos)),
            _ => None,
        }
    }

    fn root(&mut self) -> Result<Expr, SourceError> {
        let e = match self.call_of() {
            Some((name, pos)) if PREDICATES.contains(&name) => {
                let name = name.to_string();
                self.bump();
                self.bump();
                self.predicate(&name, pos)?
            }
            _ => self.expr()?,
        };
        let t = self.peek();
        if t.tok != Tok::Eof {
            let msg = if e.is_predicate() {
                format!("unexpected {} after predicate", t.tok.describe())
            } else {
                format!("unexpected {}", t.tok.describe())
            };
            return Err(self.error(t.pos, msg));
        }
        Ok(e)
    }

    fn predicate(&mut self, name: &str, pos: Pos) -> Result<Expr, SourceError> {
        let kind = match name {
            "empty" => {
                let e = self.expr()?;
                self.expect(Tok::RParen, "to close `empty(`")?;
                ExprKind::Empty(Box::new(e))
            }
            _ => {
                let (l, r) = self.two_args(name)?;
                if name == "subset" {
                    ExprKind::Subset(l, r)
                } else {
                    ExprKind::Equal(l, r)
                }
            }
        };
        Ok(Expr::new(kind, pos))
    }

    fn two_args(&mut self, name: &str) -> Result<(Box<Expr>, Box<Expr>), SourceError> {
        let l = self.expr()?;
        self.expect(Tok::Comma, &format!("between the arguments of `{name}(`"))?;
        let r = self.expr()?;
        self.expect(Tok::RParen, &format!("to close `{name}(`"))?;
        Ok((Box::new(l), Box::new(r)))
    }

    fn expr(&mut self) -> Result<Expr, SourceError> {
        self.binary(BinOp::Add.precedence())
    }

    /// One left-associative level of the infix grammar.
    fn binary(&mut self, level: u8) -> Result<Expr, SourceError> {
        let Some(op) = BinOp::ALL.into_iter().find(|op| op.precedence() == level) else {
            return self.unary();
        };
        let symbol = match op {
            BinOp::Add => Tok::Plus,
            BinOp::Difference => Tok::Backslash,
            BinOp::Union => Tok::Pipe,
            BinOp::Intersect => Tok::Amp,
        };
        let mut lhs = self.binary(level + 1)?;
        while self.peek().tok == symbol {
            let pos = self.bump().pos;
            let rhs = self.binary(level + 1)?;
            lhs = Expr::new(ExprKind::Binary(op, Box::new(lhs), Box::new(rhs)), pos);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, SourceError> {
        if self.peek().tok == Tok::Tilde {
            let pos = self.bump().pos;
            let e = self.unary()?;
            return Ok(Expr::new(ExprKind::Complement(Box::new(e)), pos));
        }
        self.atom()
    }

    fn number(&mut self, context: &str) -> Result<f64, SourceError> {
        let t = self.bump();
        match t.tok {
            Tok::Number(k) if k > 0.0 && k.is_finite() => Ok(k),
            Tok::Number(k) => Err(SourceError::new(
                ErrorKind::NonPositiveScalar,
                t.pos,
                format!("scalar {k} {context} must be a finite positive number"),
            )),
            other => Err(self.error(
                t.pos,
                format!("expected a number {context}, found {}", other.describe()),
            )),
        }
    }

    fn atom(&mut self) -> Result<Expr, SourceError> {
        if let Some((name, pos)) = self.call_of() {
            let name = name.to_string();
            let known = ["tf", "ff", "cart", "prod", "scale", "div"].contains(&name.as_str());
            if PREDICATES.contains(&name.as_str()) {
                return Err(self.error(
                    pos,
                    format!("predicate `{name}` is only allowed at the top level"),
                ));
            }
            if known {
                self.bump();
                self.bump();
                return self.call(&name, pos);
            }
            return Err(self.error(pos, format!("unknown function `{name}`")));
        }
        let t = self.bump();
        match t.tok {
            Tok::Ident(name) => Ok(Expr::new(ExprKind::Ident(name), t.pos)),
            Tok::LParen => {
                let e = self.expr()?;
                self.expect(Tok::RParen, "to close `(`")?;
                Ok(e)
            }
            other => Err(self.error(
                t.pos,
                format!("expected a set expression, found {}", other.describe()),
            )),
        }
    }

    fn call(&mut self, name: &str, pos: Pos) -> Result<Expr, SourceError> {
        let kind = match name {
            "tf" | "ff" => {
                let e = Box::new(self.expr()?);
                self.expect(Tok::RParen, &format!("to close `{name}(`"))?;
                if name == "tf" {
                    ExprKind::TruthFav(e)
                } else {
                    ExprKind::FalseFav(e)
                }
            }
            "cart" => {
                let (l, r) = self.two_args(name)?;
                ExprKind::Cart(l, r)
            }
            "prod" => {
                let (l, r) = self.two_args(name)?;
                ExprKind::Prod(l, r)
            }
            "scale" => {
                let k = self.number("as the first argument of `scale(`")?;
                self.expect(Tok::Comma, "after the scale factor")?;
                let e = self.expr()?;
                self.expect(Tok::RParen, "to close `scale(`")?;
                ExprKind::Scale(k, Box::new(e))
            }
            "div" => {
                let e = self.expr()?;
                self.expect(Tok::Comma, "before the divisor")?;
                let k = self.number("as the divisor of `div(`")?;
                self.expect(Tok::RParen, "to close `div(`")?;
                ExprKind::Div(Box::new(e), k)
            }
            _ => unreachable!("caller checked the function name"),
        };
        Ok(Expr::new(kind, pos))
    }
}

/// Parses a complete expression or predicate.
pub fn parse_expr(src: &str) -> Result<Expr, SourceError> {
    let tokens = tokenize(src)?;
    Parser { tokens, at: 0 }.root()
}
