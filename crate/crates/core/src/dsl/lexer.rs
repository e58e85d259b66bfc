use super::error::{ErrorKind, Pos, SourceError};

#[derive(Debug, Clone, PartialEq)]
pub enum Tok {
    Ident(String),
    Number(f64),
    Tilde,
    Amp,
    Pipe,
    Backslash,
    Plus,
    LParen,
    RParen,
    Comma,
    Eof,
}

impl Tok {
    pub fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Number(n) => format!("number `{n}`"),
            Tok::Tilde => "`~`".into(),
            Tok::Amp => "`&`".into(),
            Tok::Pipe => "`|`".into(),
            Tok::Backslash => "`\\`".into(),
            Tok::Plus => "`+`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Token {
    pub tok: Tok,
    pub pos: Pos,
}

/// Splits expression text into tokens, ending with [`Tok::Eof`].
pub fn tokenize(src: &str) -> Result<Vec<Token>, SourceError> {
    let mut out = Vec::new();
    let mut chars = src.chars().peekable();
    let (mut line, mut column) = (1, 1);

    while let Some(&c) = chars.peek() {
        let pos = Pos::new(line, column);
        if c == '\n' {
            chars.next();
            line += 1;
            column = 1;
            continue;
        }
        if c.is_whitespace() {
            chars.next();
            column += 1;
            continue;
        }
        let single = match c {
            '~' => Some(Tok::Tilde),
            '&' => Some(Tok::Amp),
            '|' => Some(Tok::Pipe),
            '\\' => Some(Tok::Backslash),
            '+' => Some(Tok::Plus),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            ',' => Some(Tok::Comma),
            _ => None,
        };
        if let Some(tok) = single {
            chars.next();
            column += 1;
            out.push(Token { tok, pos });
            continue;
        }
        if c.is_ascii_alphabetic() {
            let mut name = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_ascii_alphanumeric() || c == '_' {
                    name.push(c);
                    chars.next();
                    column += 1;
                } else {
                    break;
                }
            }
            out.push(Token {
                tok: Tok::Ident(name),
                pos,
            });
            continue;
        }
        if c.is_ascii_digit() {
            let mut text = String::new();
            let mut seen_dot = false;
            while let Some(&c) = chars.peek() {
                if c.is_ascii_digit() {
                    text.push(c);
                } else if c == '.' && !seen_dot {
                    seen_dot = true;
                    text.push(c);
                } else {
                    break;
                }
                chars.next();
                column += 1;
            }
            if text.ends_with('.') {
                return Err(SourceError::new(
                    ErrorKind::LexError,
                    pos,
                    format!("malformed number `{text}`: expected digits after `.`"),
                ));
            }
            let value: f64 = text.parse().map_err(|_| {
                SourceError::new(
                    ErrorKind::LexError,
                    pos,
                    format!("malformed number `{text}`"),
                )
            })?;
            out.push(Token {
                tok: Tok::Number(value),
                pos,
            });
            continue;
        }
        return Err(SourceError::new(
            ErrorKind::LexError,
            pos,
            format!("unexpected character {c:?}"),
        ));
    }
    out.push(Token {
        tok: Tok::Eof,
        pos: Pos::new(line, column),
    });
    Ok(out)
}
