use std::fmt;

use super::error::Pos;

/// Infix set operators, loosest first: `+`, `\`, `|`, `&`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BinOp {
    Add,
    Difference,
    Union,
    Intersect,
}

impl BinOp {
    pub const ALL: [BinOp; 4] = [
        BinOp::Add,
        BinOp::Difference,
        BinOp::Union,
        BinOp::Intersect,
    ];

    pub fn symbol(self) -> &'static str {
        match self {
            BinOp::Add => "+",
            BinOp::Difference => "\\",
            BinOp::Union => "|",
            BinOp::Intersect => "&",
        }
    }

    /// Binding strength; higher binds tighter.
    pub fn precedence(self) -> u8 {
        match self {
            BinOp::Add => 1,
            BinOp::Difference => 2,
            BinOp::Union => 3,
            BinOp::Intersect => 4,
        }
    }
}

const UNARY_PRECEDENCE: u8 = 5;
const ATOM_PRECEDENCE: u8 = 6;

#[derive(Debug, Clone)]
pub enum ExprKind {
    Ident(String),
    Complement(Box<Expr>),
    Binary(BinOp, Box<Expr>, Box<Expr>),
    Cart(Box<Expr>, Box<Expr>),
    Prod(Box<Expr>, Box<Expr>),
    /// `scale(k, e)`, `k > 0`.
    Scale(f64, Box<Expr>),
    /// `div(e, k)`, `k > 0`.
    Div(Box<Expr>, f64),
    TruthFav(Box<Expr>),
    FalseFav(Box<Expr>),
    /// Predicates: only valid at the root.
    Subset(Box<Expr>, Box<Expr>),
    Equal(Box<Expr>, Box<Expr>),
    Empty(Box<Expr>),
}

/// A node of the set-expression syntax tree.
///
/// `pos` points at the token that introduced the node: the identifier, the
/// operator symbol, or the function name. Equality ignores positions.
#[derive(Debug, Clone)]
pub struct Expr {
    pub kind: ExprKind,
    pub pos: Pos,
}

impl PartialEq for Expr {
    fn eq(&self, other: &Self) -> bool {
        use ExprKind::*;
        match (&self.kind, &other.kind) {
            (Ident(a), Ident(b)) => a == b,
            (Complement(a), Complement(b))
            | (TruthFav(a), TruthFav(b))
            | (FalseFav(a), FalseFav(b))
            | (Empty(a), Empty(b)) => a == b,
            (Binary(o1, l1, r1), Binary(o2, l2, r2)) => o1 == o2 && l1 == l2 && r1 == r2,
            (Cart(l1, r1), Cart(l2, r2))
            | (Prod(l1, r1), Prod(l2, r2))
            | (Subset(l1, r1), Subset(l2, r2))
            | (Equal(l1, r1), Equal(l2, r2)) => l1 == l2 && r1 == r2,
            (Scale(k1, e1), Scale(k2, e2)) | (Div(e1, k1), Div(e2, k2)) => {
                k1.to_bits() == k2.to_bits() && e1 == e2
            }
            _ => false,
        }
    }
}

impl Expr {
    pub fn new(kind: ExprKind, pos: Pos) -> Expr {
        Expr { kind, pos }
    }

    /// Node without a meaningful source position, for building trees in code.
    pub fn synthetic(kind: ExprKind) -> Expr {
        Expr::new(kind, Pos::START)
    }

    pub fn ident(name: impl Into<String>) -> Expr {
        Expr::synthetic(ExprKind::Ident(name.into()))
    }

    pub fn binary(op: BinOp, lhs: Expr, rhs: Expr) -> Expr {
        Expr::synthetic(ExprKind::Binary(op, Box::new(lhs), Box::new(rhs)))
    }

    pub fn is_predicate(&self) -> bool {
        matches!(
            self.kind,
            ExprKind::Subset(..) | ExprKind::Equal(..) | ExprKind::Empty(..)
        )
    }

    fn precedence(&self) -> u8 {
        match &self.kind {
            ExprKind::Binary(op, ..) => op.precedence(),
            ExprKind::Complement(_) => UNARY_PRECEDENCE,
            _ => ATOM_PRECEDENCE,
        }
    }
}

fn write_operand(f: &mut fmt::Formatter<'_>, e: &Expr, parens: bool) -> fmt::Result {
    if parens {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

/// Prints with the minimum parentheses needed to parse back to the same tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ExprKind::Ident(name) => f.write_str(name),
            ExprKind::Complement(e) => {
                f.write_str("~")?;
                write_operand(f, e, e.precedence() < UNARY_PRECEDENCE)
            }
            ExprKind::Binary(op, l, r) => {
                // left-associative: a right operand at the same level needs parens
                write_operand(f, l, l.precedence() < op.precedence())?;
                write!(f, " {} ", op.symbol())?;
                write_operand(f, r, r.precedence() <= op.precedence())
            }
            ExprKind::Cart(l, r) => write!(f, "cart({l}, {r})"),
            ExprKind::Prod(l, r) => write!(f, "prod({l}, {r})"),
            ExprKind::Scale(k, e) => write!(f, "scale({k}, {e})"),
            ExprKind::Div(e, k) => write!(f, "div({e}, {k})"),
            ExprKind::TruthFav(e) => write!(f, "tf({e})"),
            ExprKind::FalseFav(e) => write!(f, "ff({e})"),
            ExprKind::Subset(l, r) => write!(f, "subset({l}, {r})"),
            ExprKind::Equal(l, r) => write!(f, "eq({l}, {r})"),
            ExprKind::Empty(e) => write!(f, "empty({e})"),
        }
    }
}
