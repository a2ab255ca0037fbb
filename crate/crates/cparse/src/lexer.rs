use std::fmt;

use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TokenCategory {
    Keyword,
    Identifier,
    /// Integer, floating, character and string literals.
    Constant,
    Operator,
    /// Brackets, braces, parentheses, `;`, `,` and `:`.
    Punctuation,
}

/// A lexeme with the 1-based position of its first character.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Token {
    pub category: TokenCategory,
    pub lexeme: String,
    pub line: usize,
    pub column: usize,
}

impl Token {
    pub fn is(&self, lexeme: &str) -> bool {
        self.category != TokenCategory::Constant && self.lexeme == lexeme
    }

    pub fn is_string(&self) -> bool {
        self.category == TokenCategory::Constant && self.lexeme.ends_with('"')
    }
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "`{}`", self.lexeme)
    }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
#[error("{line}:{column}: {message}")]
pub struct LexError {
    pub message: String,
    pub line: usize,
    pub column: usize,
}

pub const KEYWORDS: &[&str] = &[
    "auto", "break", "case", "char", "const", "continue", "default", "do", "double", "else", "enum", "extern", "float",
    "for", "goto", "if", "inline", "int", "long", "register", "restrict", "return", "short", "signed", "sizeof",
    "static", "struct", "switch", "typedef", "union", "unsigned", "void", "volatile", "while", "_Alignas", "_Alignof",
    "_Atomic", "_Bool", "_Complex", "_Generic", "_Noreturn", "_Static_assert", "_Thread_local",
];

// Longest first within each shared prefix.
const OPERATORS: &[&str] = &[
    "...", "<<=", ">>=", "->", "++", "--", "<<", ">>", "<=", ">=", "==", "!=", "&&", "||", "*=", "/=", "%=", "+=",
    "-=", "&=", "^=", "|=", "+", "-", "*", "/", "%", "&", "|", "^", "!", "~", "<", ">", "=", "?", ".", "(", ")", "[",
    "]", "{", "}", ",", ";", ":",
];

const PUNCTUATION: &[&str] = &["(", ")", "[", "]", "{", "}", ",", ";", ":", "..."];

struct Cursor<'a> {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    column: usize,
    _source: &'a str,
}

impl<'a> Cursor<'a> {
    fn peek(&self, k: usize) -> Option<char> {
        self.chars.get(self.pos + k).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek(0)?;
        self.pos += 1;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn starts_with(&self, s: &str) -> bool {
        s.chars().enumerate().all(|(i, c)| self.peek(i) == Some(c))
    }

    fn error(&self, message: impl Into<String>, line: usize, column: usize) -> LexError {
        LexError {
            message: message.into(),
            line,
            column,
        }
    }
}

/// Splits C source into tokens, dropping whitespace and comments.
pub fn tokenize(source: &str) -> Result<Vec<Token>, LexError> {
    let mut cur = Cursor {
        chars: source.chars().collect(),
        pos: 0,
        line: 1,
        column: 1,
        _source: source,
    };
    let mut tokens = Vec::new();
    while let Some(c) = cur.peek(0) {
        let (line, column) = (cur.line, cur.column);
        if c.is_whitespace() {
            cur.bump();
            continue;
        }
        if cur.starts_with("//") {
            while cur.peek(0).is_some_and(|c| c != '\n') {
                cur.bump();
            }
            continue;
        }
        if cur.starts_with("/*") {
            cur.bump();
            cur.bump();
            loop {
                if cur.starts_with("*/") {
                    cur.bump();
                    cur.bump();
                    break;
                }
                if cur.bump().is_none() {
                    return Err(cur.error("unterminated comment", line, column));
                }
            }
            continue;
        }
        if c == '#' {
            return Err(cur.error("preprocessor directives are not supported", line, column));
        }

        let start = cur.pos;
        let category = if let Some(quote) = literal_start(&cur) {
            lex_quoted(&mut cur, quote, line, column)?;
            TokenCategory::Constant
        } else if c.is_ascii_alphabetic() || c == '_' {
            while cur.peek(0).is_some_and(|c| c.is_ascii_alphanumeric() || c == '_') {
                cur.bump();
            }
            let word: String = cur.chars[start..cur.pos].iter().collect();
            if KEYWORDS.contains(&word.as_str()) {
                TokenCategory::Keyword
            } else {
                TokenCategory::Identifier
            }
        } else if c.is_ascii_digit() || (c == '.' && cur.peek(1).is_some_and(|d| d.is_ascii_digit())) {
            lex_number(&mut cur, line, column)?;
            TokenCategory::Constant
        } else if let Some(op) = OPERATORS.iter().find(|op| cur.starts_with(op)) {
            for _ in 0..op.len() {
                cur.bump();
            }
            if PUNCTUATION.contains(op) {
                TokenCategory::Punctuation
            } else {
                TokenCategory::Operator
            }
        } else {
            return Err(cur.error(format!("illegal character `{c}`"), line, column));
        };
        tokens.push(Token {
            category,
            lexeme: cur.chars[start..cur.pos].iter().collect(),
            line,
            column,
        });
    }
    Ok(tokens)
}

// Returns the quote character if a (possibly prefixed) char or string
// literal starts here.
fn literal_start(cur: &Cursor<'_>) -> Option<char> {
    let prefix = ["u8", "u", "U", "L"]
        .iter()
        .find(|p| cur.starts_with(p))
        .map_or(0, |p| p.len());
    match cur.peek(prefix) {
        Some(q @ ('"' | '\'')) => Some(q),
        _ => None,
    }
}

fn lex_quoted(cur: &mut Cursor<'_>, quote: char, line: usize, column: usize) -> Result<(), LexError> {
    while cur.peek(0) != Some(quote) {
        cur.bump();
    }
    cur.bump();
    let what = if quote == '"' { "string" } else { "character constant" };
    let mut length = 0;
    loop {
        match cur.peek(0) {
            None | Some('\n') => return Err(cur.error(format!("unterminated {what}"), line, column)),
            Some('\\') => {
                cur.bump();
                if matches!(cur.peek(0), None | Some('\n')) {
                    return Err(cur.error(format!("unterminated {what}"), line, column));
                }
                cur.bump();
            }
            Some(c) if c == quote => {
                cur.bump();
                break;
            }
            Some(_) => {
                cur.bump();
            }
        }
        length += 1;
    }
    if quote == '\'' && length == 0 {
        return Err(cur.error("empty character constant", line, column));
    }
    Ok(())
}

fn lex_number(cur: &mut Cursor<'_>, line: usize, column: usize) -> Result<(), LexError> {
    let start = cur.pos;
    // A preprocessing number: digits, letters, dots, and signs after exponents.
    while let Some(c) = cur.peek(0) {
        let exponent_sign = matches!(c, '+' | '-') && matches!(cur.chars[cur.pos - 1], 'e' | 'E' | 'p' | 'P');
        if c.is_ascii_alphanumeric() || c == '.' || c == '_' || exponent_sign {
            cur.bump();
        } else {
            break;
        }
    }
    let text: String = cur.chars[start..cur.pos].iter().collect();
    if valid_number(&text) {
        Ok(())
    } else {
        Err(cur.error(format!("malformed number `{text}`"), line, column))
    }
}

fn valid_number(text: &str) -> bool {
    let lower = text.to_ascii_lowercase();
    if let Some(hex) = lower.strip_prefix("0x") {
        let (mantissa, exponent) = match hex.split_once('p') {
            Some((m, e)) => (m, Some(e)),
            None => (hex, None),
        };
        return match exponent {
            None => {
                let digits = mantissa.trim_end_matches(['u', 'l']);
                !digits.is_empty() && digits.chars().all(|c| c.is_ascii_hexdigit()) && int_suffix(&mantissa[digits.len()..])
            }
            Some(e) => {
                let (whole, frac) = mantissa.split_once('.').unwrap_or((mantissa, ""));
                let hex_ok = |s: &str| s.chars().all(|c| c.is_ascii_hexdigit());
                !(whole.is_empty() && frac.is_empty()) && hex_ok(whole) && hex_ok(frac) && exponent_ok(e)
            }
        };
    }
    if let Some(bin) = lower.strip_prefix("0b") {
        let digits = bin.trim_end_matches(['u', 'l']);
        return !digits.is_empty() && digits.chars().all(|c| c == '0' || c == '1') && int_suffix(&bin[digits.len()..]);
    }
    let is_float = lower.contains('.') || lower.contains('e');
    if !is_float {
        let digits = lower.trim_end_matches(['u', 'l']);
        let octal = digits.starts_with('0');
        return !digits.is_empty()
            && digits.chars().all(|c| if octal { ('0'..='7').contains(&c) } else { c.is_ascii_digit() })
            && int_suffix(&lower[digits.len()..]);
    }
    let body = lower.strip_suffix(['f', 'l']).unwrap_or(&lower);
    let (mantissa, exponent) = match body.split_once('e') {
        Some((m, e)) => (m, Some(e)),
        None => (body, None),
    };
    let (whole, frac) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    let digits_ok = |s: &str| s.chars().all(|c| c.is_ascii_digit());
    !(whole.is_empty() && frac.is_empty()) && digits_ok(whole) && digits_ok(frac) && exponent.is_none_or(exponent_ok)
}

fn exponent_ok(e: &str) -> bool {
    let digits = e.strip_prefix(['+', '-']).unwrap_or(e);
    let digits = digits.strip_suffix(['f', 'l']).unwrap_or(digits);
    !digits.is_empty() && digits.chars().all(|c| c.is_ascii_digit())
}

fn int_suffix(s: &str) -> bool {
    matches!(s, "" | "u" | "l" | "ul" | "lu" | "ll" | "ull" | "llu")
}
