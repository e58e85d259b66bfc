//! The set file format and JSON rendering.
//!
//! ```text
//! # comment lines start with '#'
//! set A
//!   x1 : [0.2,0.4] [0.3,0.5] [0.3,0.5]
//!   x2 : [0.5,0.7] [0.0,0.2] [0.2,0.3]
//! end
//! ```
//!
//! One `set NAME ... end` block per set and one element per line, in
//! truth / indeterminacy / falsity order. Numbers are plain decimals (no
//! exponent). Element order is preserved.

use serde::{Deserialize, Serialize};

use super::error::{ErrorKind, Pos, SourceError};
use super::eval::{is_valid_name, Environment};
use crate::interval::UnitInterval;
use crate::set::{DiscreteIns, InsSet, Label};
use crate::value::NeutrosophicValue;

struct LineCursor {
    chars: Vec<char>,
    at: usize,
    line: usize,
}

impl LineCursor {
    fn pos(&self) -> Pos {
        Pos::new(self.line, self.at + 1)
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.at).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.at += 1;
        }
    }

    fn error(&self, pos: Pos, message: impl Into<String>) -> SourceError {
        SourceError::new(ErrorKind::ParseError, pos, message)
    }

    fn expect(&mut self, c: char, context: &str) -> Result<Pos, SourceError> {
        self.skip_ws();
        let pos = self.pos();
        match self.peek() {
            Some(found) if found == c => {
                self.at += 1;
                Ok(pos)
            }
            Some(found) => {
                Err(self.error(pos, format!("expected `{c}` {context}, found {found:?}")))
            }
            None => Err(self.error(pos, format!("expected `{c}` {context}, found end of line"))),
        }
    }

    fn word(&mut self, stop: impl Fn(char) -> bool) -> (String, Pos) {
        self.skip_ws();
        let pos = self.pos();
        let mut out = String::new();
        while let Some(c) = self.peek() {
            if c.is_whitespace() || stop(c) {
                break;
            }
            out.push(c);
            self.at += 1;
        }
        (out, pos)
    }

    fn number(&mut self) -> Result<(f64, Pos), SourceError> {
        let (text, pos) = self.word(|c| !(c.is_ascii_digit() || c == '.' || c == '-'));
        let digits = text.strip_prefix('-').unwrap_or(&text);
        let well_formed = match digits.split_once('.') {
            Some((int, frac)) => {
                !int.is_empty()
                    && !frac.is_empty()
                    && int.bytes().all(|b| b.is_ascii_digit())
                    && frac.bytes().all(|b| b.is_ascii_digit())
            }
            None => !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit()),
        };
        if !well_formed {
            let shown = if text.is_empty() {
                self.peek()
                    .map_or("end of line".to_string(), |c| format!("{c:?}"))
            } else {
                format!("`{text}`")
            };
            return Err(self.error(pos, format!("expected a decimal number, found {shown}")));
        }
        let value = text
            .parse()
            .map_err(|_| self.error(pos, format!("malformed number `{text}`")))?;
        Ok((value, pos))
    }

    fn interval(&mut self) -> Result<UnitInterval, SourceError> {
        let open = self.expect('[', "to start an interval")?;
        let (lo, lo_pos) = self.number()?;
        self.expect(',', "between interval bounds")?;
        let (hi, hi_pos) = self.number()?;
        self.expect(']', "to close an interval")?;
        for (v, p) in [(lo, lo_pos), (hi, hi_pos)] {
            if !(0.0..=1.0).contains(&v) {
                return Err(self.error(p, format!("bound {v} lies outside [0, 1]")));
            }
        }
        UnitInterval::new(lo, hi).map_err(|_| {
            self.error(
                open,
                format!("interval [{lo},{hi}] has lower bound above upper bound"),
            )
        })
    }
}

struct OpenSet {
    name: String,
    header: Pos,
    elements: Vec<(String, NeutrosophicValue, Pos)>,
}

fn close(env: &mut Environment, open: OpenSet) -> Result<(), SourceError> {
    let mut seen = std::collections::HashSet::new();
    for (label, _, pos) in &open.elements {
        if !seen.insert(label.as_str()) {
            return Err(SourceError::new(
                ErrorKind::ParseError,
                *pos,
                format!("duplicate element `{label}` in set `{}`", open.name),
            ));
        }
    }
    let set = open
        .elements
        .into_iter()
        .map(|(l, v, _)| (l, v))
        .collect::<DiscreteIns>();
    env.insert(open.name, set);
    Ok(())
}

/// Parses a set file into an environment, validating every interval.
pub fn parse_sets(text: &str) -> Result<Environment, SourceError> {
    let mut env = Environment::new();
    let mut open: Option<OpenSet> = None;
    let mut last = Pos::START;

    for (n, raw) in text.split('\n').enumerate() {
        let raw = raw.strip_suffix('\r').unwrap_or(raw);
        let mut cur = LineCursor {
            chars: raw.chars().collect(),
            at: 0,
            line: n + 1,
        };
        last = Pos::new(n + 1, cur.chars.len() + 1);
        cur.skip_ws();
        if cur.peek().is_none() || cur.peek() == Some('#') {
            continue;
        }
        match open.as_mut() {
            None => {
                let (kw, kw_pos) = cur.word(|_| false);
                if kw != "set" {
                    return Err(cur.error(kw_pos, format!("expected `set NAME`, found `{kw}`")));
                }
                let (name, name_pos) = cur.word(|_| false);
                if name.is_empty() {
                    return Err(cur.error(name_pos, "expected a set name after `set`"));
                }
                if !is_valid_name(&name) {
                    return Err(cur.error(name_pos, format!("invalid set name `{name}`")));
                }
                if env.contains(&name) {
                    return Err(cur.error(name_pos, format!("duplicate set `{name}`")));
                }
                let (extra, extra_pos) = cur.word(|_| false);
                if !extra.is_empty() {
                    return Err(
                        cur.error(extra_pos, format!("unexpected `{extra}` after set name"))
                    );
                }
                open = Some(OpenSet {
                    name,
                    header: kw_pos,
                    elements: Vec::new(),
                });
            }
            Some(set) => {
                let rest: String = cur.chars[cur.at..].iter().collect();
                if rest.trim_end() == "end" {
                    close(&mut env, open.take().expect("inside a set block"))?;
                    continue;
                }
                let (label, label_pos) = cur.word(|c| c == ':');
                if label.is_empty() {
                    return Err(cur.error(label_pos, "expected an element label"));
                }
                cur.expect(':', "after the element label")?;
                let truth = cur.interval()?;
                let indeterminacy = cur.interval()?;
                let falsity = cur.interval()?;
                cur.skip_ws();
                if let Some(c) = cur.peek() {
                    return Err(cur.error(
                        cur.pos(),
                        format!("unexpected {c:?} after the falsity interval"),
                    ));
                }
                set.elements.push((
                    label,
                    NeutrosophicValue::new(truth, indeterminacy, falsity),
                    label_pos,
                ));
            }
        }
    }
    if let Some(set) = open {
        return Err(SourceError::new(
            ErrorKind::ParseError,
            last,
            format!(
                "set `{}` opened at {} is missing `end`",
                set.name, set.header
            ),
        ));
    }
    Ok(env)
}

/// Renders `x` with at most `precision` significant digits as a plain
/// decimal that always contains a `.`.
///
/// # Panics
/// When `precision` is outside `1..=17`.
pub fn format_number(x: f64, precision: usize) -> String {
    assert!((1..=17).contains(&precision), "precision must be in 1..=17");
    let rounded: f64 = format!("{:.*e}", precision - 1, x)
        .parse()
        .expect("formatted float parses");
    // Display gives the shortest digits that round-trip, never an exponent
    let mut s = (rounded + 0.0).to_string();
    if !s.contains('.') {
        s.push_str(".0");
    }
    s
}

fn format_interval(i: &UnitInterval, precision: usize) -> String {
    format!(
        "[{},{}]",
        format_number(i.lo(), precision),
        format_number(i.hi(), precision)
    )
}

/// One `set NAME ... end` block.
pub fn format_set<L: Label>(name: &str, set: &InsSet<L>, precision: usize) -> String {
    let mut out = format!("set {name}\n");
    for (label, v) in set.iter() {
        out.push_str(&format!(
            "  {label} : {} {} {}\n",
            format_interval(&v.truth(), precision),
            format_interval(&v.indeterminacy(), precision),
            format_interval(&v.falsity(), precision),
        ));
    }
    out.push_str("end\n");
    out
}

/// Every set of `env`, in declaration order.
pub fn format_env(env: &Environment, precision: usize) -> String {
    env.iter()
        .map(|(name, set)| format_set(name, set, precision))
        .collect()
}

/// JSON shape of one set.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JsonSet {
    pub name: String,
    pub elements: Vec<JsonElement>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JsonElement {
    pub label: String,
    #[serde(rename = "T")]
    pub truth: [f64; 2],
    #[serde(rename = "I")]
    pub indeterminacy: [f64; 2],
    #[serde(rename = "F")]
    pub falsity: [f64; 2],
}

impl JsonSet {
    pub fn from_set<L: Label>(name: &str, set: &InsSet<L>, precision: usize) -> JsonSet {
        let round = |x: f64| -> f64 {
            format_number(x, precision)
                .parse()
                .expect("formatted number parses")
        };
        let pair = |i: &UnitInterval| [round(i.lo()), round(i.hi())];
        JsonSet {
            name: name.to_string(),
            elements: set
                .iter()
                .map(|(label, v)| JsonElement {
                    label: label.to_string(),
                    truth: pair(&v.truth()),
                    indeterminacy: pair(&v.indeterminacy()),
                    falsity: pair(&v.falsity()),
                })
                .collect(),
        }
    }
}

pub fn format_json<L: Label>(name: &str, set: &InsSet<L>, precision: usize) -> String {
    serde_json::to_string_pretty(&JsonSet::from_set(name, set, precision))
        .expect("sets always serialize")
}
