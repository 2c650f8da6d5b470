//! Tokenizer for the ASCII formula grammar.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Token {
    Ident(String),
    Forall,
    Exists,
    Bot,
    Top,
    LParen,
    RParen,
    Comma,
    Dot,
    And,
    Or,
    Arrow,
    Tilde,
}

impl Token {
    pub fn describe(&self) -> String {
        match self {
            Token::Ident(s) => format!("identifier `{s}`"),
            Token::Forall => "`forall`".into(),
            Token::Exists => "`exists`".into(),
            Token::Bot => "`bot`".into(),
            Token::Top => "`top`".into(),
            Token::LParen => "`(`".into(),
            Token::RParen => "`)`".into(),
            Token::Comma => "`,`".into(),
            Token::Dot => "`.`".into(),
            Token::And => "`&`".into(),
            Token::Or => "`|`".into(),
            Token::Arrow => "`->`".into(),
            Token::Tilde => "`~`".into(),
        }
    }
}

/// A token plus the byte offset where it starts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spanned {
    pub token: Token,
    pub offset: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("lexical error at offset {offset}: {message}")]
pub struct LexError {
    pub offset: usize,
    pub message: String,
}

pub fn tokenize(input: &str) -> Result<Vec<Spanned>, LexError> {
    let bytes = input.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        match c {
            b' ' | b'\t' | b'\r' | b'\n' => i += 1,
            b'(' => {
                tokens.push(Spanned { token: Token::LParen, offset: i });
                i += 1;
            }
            b')' => {
                tokens.push(Spanned { token: Token::RParen, offset: i });
                i += 1;
            }
            b',' => {
                tokens.push(Spanned { token: Token::Comma, offset: i });
                i += 1;
            }
            b'.' => {
                tokens.push(Spanned { token: Token::Dot, offset: i });
                i += 1;
            }
            b'&' => {
                tokens.push(Spanned { token: Token::And, offset: i });
                i += 1;
            }
            b'|' => {
                tokens.push(Spanned { token: Token::Or, offset: i });
                i += 1;
            }
            b'~' => {
                tokens.push(Spanned { token: Token::Tilde, offset: i });
                i += 1;
            }
            b'-' => {
                if bytes.get(i + 1) == Some(&b'>') {
                    tokens.push(Spanned { token: Token::Arrow, offset: i });
                    i += 2;
                } else {
                    return Err(LexError {
                        offset: i,
                        message: "expected `->` after `-`".into(),
                    });
                }
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                let start = i;
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                let word = &input[start..i];
                let token = match word {
                    "forall" => Token::Forall,
                    "exists" => Token::Exists,
                    "bot" => Token::Bot,
                    "top" => Token::Top,
                    _ => Token::Ident(word.to_owned()),
                };
                tokens.push(Spanned { token, offset: start });
            }
            other => {
                return Err(LexError {
                    offset: i,
                    message: format!("unexpected character `{}`", other as char),
                });
            }
        }
    }
    Ok(tokens)
}
