//! A small language over the set operators.
//!
//! | Syntax          | Operation                        |
//! |-----------------|----------------------------------|
//! | `~A`            | complement                       |
//! | `A & B`         | intersection                     |
//! | `A \| B`        | union                            |
//! | `A \ B`         | difference                       |
//! | `A + B`         | addition                         |
//! | `cart(A, B)`    | cartesian product (pairs)        |
//! | `prod(A, B)`    | product on a shared universe     |
//! | `scale(k, A)`   | scalar multiplication            |
//! | `div(A, k)`     | scalar division                  |
//! | `tf(A)`         | truth-favorite                   |
//! | `ff(A)`         | false-favorite                   |
//! | `subset(A, B)`  | containment (top level only)     |
//! | `eq(A, B)`      | equality (top level only)        |
//! | `empty(A)`      | emptiness (top level only)       |
//!
//! Infix operators bind, tightest first: `~`, `&`, `|`, `\`, `+`; all are
//! left-associative.

mod ast;
mod error;
mod eval;
mod lexer;
mod parser;
mod setfile;

pub use ast::{BinOp, Expr, ExprKind};
pub use error::{ErrorKind, Pos, SourceError};
pub use eval::{evaluate, is_valid_name, Environment, Value};
pub use lexer::{tokenize, Tok, Token};
pub use parser::parse_expr;
pub use setfile::{
    format_env, format_json, format_number, format_set, parse_sets, JsonElement, JsonSet,
};
