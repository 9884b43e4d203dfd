//! Parser for the Jordan polynomial expression grammar.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := (rational '*')? factor
//! factor  := power ('o' power)*
//! power   := primary ('^' nat)*
//! primary := variable | '1' | '(' expr ')'
//!          | 'U' '[' expr (',' expr)? ']' '(' expr ')'
//!          | '{' expr ',' expr ',' expr '}'
//! ```
//!
//! `o` is left-associative and binds tighter than `+`/`-`; `^` binds tighter
//! than `o`. A leading `-` is only legal as the sign of a rational
//! coefficient (`-1*X` parses, bare `-X` does not), and a bare rational other
//! than `1` is not a term on its own (`2*1` is the way to write a scalar
//! multiple of the unit). The identifier `o` is reserved for the product.

use super::ast::JPoly;
use crate::rational::{parse_rational, Rational};
use std::fmt;

/// A parse failure with 1-based source position and the token classes that
/// would have been accepted at that point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
    pub expected: Vec<String>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "parse error at line {}, column {}: {}",
            self.line, self.col, self.message
        )?;
        if !self.expected.is_empty() {
            write!(f, " (expected {})", self.expected.join(", "))?;
        }
        Ok(())
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Number(String),
    Plus,
    Minus,
    Star,
    Caret,
    LBracket,
    RBracket,
    LParen,
    RParen,
    LBrace,
    RBrace,
    Comma,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Number(s) => format!("number `{s}`"),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LBracket => "`[`".into(),
            Tok::RBracket => "`]`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::LBrace => "`{`".into(),
            Tok::RBrace => "`}`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(src: &str) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    let mut line = 1;
    let mut col = 1;
    while i < chars.len() {
        let c = chars[i];
        if c == '\n' {
            i += 1;
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        let start = (line, col);
        let tok = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '^' => Some(Tok::Caret),
            '[' => Some(Tok::LBracket),
            ']' => Some(Tok::RBracket),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            '{' => Some(Tok::LBrace),
            '}' => Some(Tok::RBrace),
            ',' => Some(Tok::Comma),
            _ => None,
        };
        if let Some(tok) = tok {
            toks.push(Token {
                tok,
                line: start.0,
                col: start.1,
            });
            i += 1;
            col += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let mut text = String::new();
            while i < chars.len() && chars[i].is_ascii_digit() {
                text.push(chars[i]);
                i += 1;
                col += 1;
            }
            if i < chars.len() && chars[i] == '/' {
                text.push('/');
                i += 1;
                col += 1;
                if i >= chars.len() || !chars[i].is_ascii_digit() {
                    return Err(ParseError {
                        line,
                        col,
                        message: "rational literal is missing its denominator".into(),
                        expected: vec!["digit".into()],
                    });
                }
                while i < chars.len() && chars[i].is_ascii_digit() {
                    text.push(chars[i]);
                    i += 1;
                    col += 1;
                }
            }
            toks.push(Token {
                tok: Tok::Number(text),
                line: start.0,
                col: start.1,
            });
            continue;
        }
        if c.is_ascii_alphabetic() {
            let mut text = String::new();
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                text.push(chars[i]);
                i += 1;
                col += 1;
            }
            toks.push(Token {
                tok: Tok::Ident(text),
                line: start.0,
                col: start.1,
            });
            continue;
        }
        return Err(ParseError {
            line,
            col,
            message: format!("unexpected character `{c}`"),
            expected: vec![],
        });
    }
    toks.push(Token {
        tok: Tok::Eof,
        line,
        col,
    });
    Ok(toks)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn peek2(&self) -> &Token {
        &self.toks[(self.pos + 1).min(self.toks.len() - 1)]
    }

    fn advance(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn err_here(&self, message: impl Into<String>, expected: &[&str]) -> ParseError {
        let t = self.peek();
        ParseError {
            line: t.line,
            col: t.col,
            message: message.into(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
        }
    }

    fn expect(&mut self, want: Tok, expected: &str) -> Result<Token, ParseError> {
        if self.peek().tok == want {
            Ok(self.advance())
        } else {
            Err(self.err_here(
                format!("found {}", self.peek().tok.describe()),
                &[expected],
            ))
        }
    }

    fn number_value(&self, tok: &Token, text: &str) -> Result<Rational, ParseError> {
        parse_rational(text).map_err(|e| ParseError {
            line: tok.line,
            col: tok.col,
            message: format!("invalid rational literal `{text}`: {e}"),
            expected: vec![],
        })
    }

    fn parse_expr(&mut self) -> Result<JPoly, ParseError> {
        let mut terms = vec![self.parse_term()?];
        loop {
            match self.peek().tok {
                Tok::Plus => {
                    self.advance();
                    terms.push(self.parse_term()?);
                }
                Tok::Minus => {
                    self.advance();
                    let t = self.parse_term()?;
                    // Fold the sign into an existing coefficient so that
                    // `a - 3/2*b` comes back as Scalar(-3/2, b); a bare term
                    // gains an explicit -1 coefficient.
                    terms.push(match t {
                        JPoly::Scalar(c, x) => JPoly::Scalar(-c, x),
                        other => JPoly::neg(other),
                    });
                }
                _ => break,
            }
        }
        if terms.len() == 1 {
            Ok(terms.pop().unwrap())
        } else {
            Ok(JPoly::Sum(terms))
        }
    }

    fn parse_term(&mut self) -> Result<JPoly, ParseError> {
        let mut negate = false;
        if self.peek().tok == Tok::Minus {
            if matches!(self.peek2().tok, Tok::Number(_)) {
                self.advance();
                negate = true;
            } else {
                return Err(self.err_here(
                    "a leading `-` must sign a rational coefficient (write -1*X, not -X)",
                    &["rational coefficient"],
                ));
            }
        }
        if let Tok::Number(text) = self.peek().tok.clone() {
            if self.peek2().tok == Tok::Star {
                let tok = self.advance();
                let mut c = self.number_value(&tok, &text)?;
                if negate {
                    c = -c;
                }
                self.advance(); // `*`
                let factor = self.parse_factor()?;
                return Ok(JPoly::scalar(c, factor));
            }
            if negate || text != "1" {
                // A rational on its own is not a term; `1` alone is the unit
                // element and is handled by the primary parser below.
                return Err(self.err_here(
                    format!("a bare rational is not a term; write {text}*1 for a scalar multiple of the unit"),
                    &["`*`"],
                ));
            }
        }
        self.parse_factor()
    }

    fn parse_factor(&mut self) -> Result<JPoly, ParseError> {
        let mut lhs = self.parse_power()?;
        while matches!(&self.peek().tok, Tok::Ident(s) if s == "o") {
            self.advance();
            let rhs = self.parse_power()?;
            lhs = JPoly::circ(lhs, rhs);
        }
        Ok(lhs)
    }

    fn parse_power(&mut self) -> Result<JPoly, ParseError> {
        let mut base = self.parse_primary()?;
        while self.peek().tok == Tok::Caret {
            self.advance();
            let tok = self.peek().clone();
            let Tok::Number(text) = &tok.tok else {
                return Err(self.err_here(
                    format!("found {}", self.peek().tok.describe()),
                    &["positive integer exponent"],
                ));
            };
            if text.contains('/') {
                return Err(ParseError {
                    line: tok.line,
                    col: tok.col,
                    message: format!("exponent must be a positive integer, found `{text}`"),
                    expected: vec!["positive integer exponent".into()],
                });
            }
            let n: u32 = text.parse().map_err(|_| ParseError {
                line: tok.line,
                col: tok.col,
                message: format!("exponent `{text}` is out of range"),
                expected: vec!["positive integer exponent".into()],
            })?;
            if n == 0 {
                return Err(ParseError {
                    line: tok.line,
                    col: tok.col,
                    message: "exponent must be at least 1".into(),
                    expected: vec!["positive integer exponent".into()],
                });
            }
            self.advance();
            base = JPoly::power(base, n);
        }
        Ok(base)
    }

    fn parse_primary(&mut self) -> Result<JPoly, ParseError> {
        const EXPECTED: &[&str] = &["variable", "`1`", "`(`", "`U[`", "`{`"];
        match self.peek().tok.clone() {
            Tok::Ident(name) if name == "o" => Err(self.err_here(
                "`o` is reserved for the Jordan product and cannot name a variable",
                EXPECTED,
            )),
            Tok::Ident(name) if name == "U" => {
                self.advance();
                self.expect(Tok::LBracket, "`[` after U")?;
                let first = self.parse_expr()?;
                let second = if self.peek().tok == Tok::Comma {
                    self.advance();
                    Some(self.parse_expr()?)
                } else {
                    None
                };
                self.expect(Tok::RBracket, "`]`")?;
                self.expect(Tok::LParen, "`(`")?;
                let arg = self.parse_expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(match second {
                    None => JPoly::u(first, arg),
                    Some(b) => JPoly::upair(first, b, arg),
                })
            }
            Tok::Ident(name) => {
                self.advance();
                Ok(JPoly::Var(name))
            }
            Tok::Number(text) if text == "1" => {
                self.advance();
                Ok(JPoly::One)
            }
            Tok::LParen => {
                self.advance();
                let inner = self.parse_expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(inner)
            }
            Tok::LBrace => {
                self.advance();
                let a = self.parse_expr()?;
                self.expect(Tok::Comma, "`,`")?;
                let b = self.parse_expr()?;
                self.expect(Tok::Comma, "`,`")?;
                let c = self.parse_expr()?;
                self.expect(Tok::RBrace, "`}`")?;
                Ok(JPoly::triple(a, b, c))
            }
            other => Err(self.err_here(format!("found {}", other.describe()), EXPECTED)),
        }
    }
}

/// Parse a single expression, requiring it to span the whole input.
pub fn parse(src: &str) -> Result<JPoly, ParseError> {
    let toks = lex(src)?;
    let mut p = Parser { toks, pos: 0 };
    let expr = p.parse_expr()?;
    if p.peek().tok != Tok::Eof {
        return Err(p.err_here(
            format!("unexpected trailing {}", p.peek().tok.describe()),
            &["end of input", "`+`", "`-`"],
        ));
    }
    Ok(expr)
}

/// Parse a file of identities: one expression per line, with `#` starting a
/// comment that runs to the end of the line. Blank lines are skipped.
/// Reported error positions refer to the original file.
pub fn parse_identity_file(src: &str) -> Result<Vec<JPoly>, ParseError> {
    let mut out = Vec::new();
    for (idx, raw) in src.lines().enumerate() {
        let line_no = idx + 1;
        let code = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        if code.trim().is_empty() {
            continue;
        }
        match parse(code) {
            Ok(expr) => out.push(expr),
            Err(mut e) => {
                // `parse` saw a single line, so its reported line is 1;
                // rebase onto the file's numbering.
                e.line = line_no;
                return Err(e);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn v(name: &str) -> JPoly {
        JPoly::var(name)
    }

    #[test]
    fn precedence_and_associativity() {
        assert_eq!(
            parse("X o Y + Z").unwrap(),
            JPoly::sum(vec![JPoly::circ(v("X"), v("Y")), v("Z")])
        );
        assert_eq!(
            parse("X o Y o Z").unwrap(),
            JPoly::circ(JPoly::circ(v("X"), v("Y")), v("Z"))
        );
        assert_eq!(
            parse("X o Y^2").unwrap(),
            JPoly::circ(v("X"), JPoly::power(v("Y"), 2))
        );
        assert_eq!(
            parse("X^2 o Y").unwrap(),
            JPoly::circ(JPoly::power(v("X"), 2), v("Y"))
        );
        // The coefficient of a term applies to the whole `o` chain.
        assert_eq!(
            parse("2*X o Y").unwrap(),
            JPoly::scalar(rat(2, 1), JPoly::circ(v("X"), v("Y")))
        );
    }

    #[test]
    fn subtraction_becomes_scaled_term() {
        assert_eq!(
            parse("a - b").unwrap(),
            JPoly::Sum(vec![v("a"), JPoly::scalar(rat(-1, 1), v("b"))])
        );
        assert_eq!(
            parse("a - 3/2*b").unwrap(),
            JPoly::Sum(vec![v("a"), JPoly::scalar(rat(-3, 2), v("b"))])
        );
        assert_eq!(
            parse("-1*X + Y").unwrap(),
            JPoly::Sum(vec![JPoly::scalar(rat(-1, 1), v("X")), v("Y")])
        );
    }

    #[test]
    fn unit_and_scalars() {
        assert_eq!(parse("1").unwrap(), JPoly::One);
        assert_eq!(parse("2*1").unwrap(), JPoly::scalar(rat(2, 1), JPoly::One));
        assert_eq!(
            parse("1 o X").unwrap(),
            JPoly::circ(JPoly::One, v("X"))
        );
        assert_eq!(
            parse("1/3*{X, 1, X}").unwrap(),
            JPoly::scalar(rat(1, 3), JPoly::triple(v("X"), JPoly::One, v("X")))
        );
    }

    #[test]
    fn u_operators_and_triple() {
        assert_eq!(
            parse("U[X](Y)").unwrap(),
            JPoly::u(v("X"), v("Y"))
        );
        assert_eq!(
            parse("U[X,Y](Z)").unwrap(),
            JPoly::upair(v("X"), v("Y"), v("Z"))
        );
        assert_eq!(
            parse("U[X + Y](Z^2)").unwrap(),
            JPoly::u(
                JPoly::sum(vec![v("X"), v("Y")]),
                JPoly::power(v("Z"), 2)
            )
        );
        assert_eq!(
            parse("{X, Y, Z}").unwrap(),
            JPoly::triple(v("X"), v("Y"), v("Z"))
        );
    }

    #[test]
    fn rejects_malformed_input() {
        for bad in [
            "", "-X", "2", "3/2", "X^0", "X^", "X^1/2", "X +", "X & Y", "U", "U[X]", "U[X](",
            "{X, Y}", "o", "X o o Y", "2 X", "X (Y)", "()",
        ] {
            assert!(parse(bad).is_err(), "expected parse failure for {bad:?}");
        }
    }

    #[test]
    fn error_positions_are_one_based() {
        let e = parse("X + + Y").unwrap_err();
        assert_eq!((e.line, e.col), (1, 5));
        assert!(!e.expected.is_empty());

        let e = parse("X +\n+ Y").unwrap_err();
        assert_eq!((e.line, e.col), (2, 1));

        let e = parse("X & Y").unwrap_err();
        assert_eq!((e.line, e.col), (1, 3));
        assert!(e.message.contains('&'));

        let e = parse("-X").unwrap_err();
        assert_eq!((e.line, e.col), (1, 1));
        assert!(e.message.contains("-1*X"));
    }

    #[test]
    fn identity_files_skip_comments_and_report_file_lines() {
        let src = "# leading comment\n\nX o Y   # trailing comment\nU[X](Z)\n";
        let exprs = parse_identity_file(src).unwrap();
        assert_eq!(
            exprs,
            vec![JPoly::circ(v("X"), v("Y")), JPoly::u(v("X"), v("Z"))]
        );

        let bad = "X o Y\n# fine\nX o\n";
        let e = parse_identity_file(bad).unwrap_err();
        assert_eq!(e.line, 3);
    }
}
