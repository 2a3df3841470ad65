//! Text grammar for formulas, programs, theories and interpretations.
//!
//! ```text
//! formula  := equiv
//! equiv    := impl (("<->" | "<=>") impl)*
//! impl     := disj ("->" impl)?
//! disj     := conj ("|" conj)*
//! conj     := unary ("&" unary)*
//! unary    := ("~" | "not" | "!") unary | primary
//! primary  := atom | "top" | "bot" | "(" formula ")"
//! ```
//!
//! `<->` and `<=>` expand at parse time. Programs and theories are sequences of
//! statements ending in `.`; `%` starts a comment that runs to the end of the
//! line. The Unicode connectives `∼ ¬ ∧ ∨ → ↔ ⟺ ⊤ ⊥` are accepted as aliases.

use std::fmt;

use thiserror::Error;

use crate::syntax::{Atom, ExplicitLiteral, Formula, Interpretation, Program, Rule, Theory};

/// Position of a token in the source text. Lines and columns are 1-based and
/// count characters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SourceSpan {
    pub line: usize,
    pub column: usize,
    pub length: usize,
}

impl fmt::Display for SourceSpan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseErrorKind {
    Lexical,
    UnexpectedToken,
    UnbalancedParenthesis,
    ReservedWord,
    NestedImplication,
    Inconsistent,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{span}: {message}")]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub span: SourceSpan,
    pub message: String,
}

impl ParseError {
    fn new(kind: ParseErrorKind, span: SourceSpan, message: impl Into<String>) -> Self {
        ParseError { kind, span, message: message.into() }
    }
}

type ParseResult<T> = std::result::Result<T, ParseError>;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Ident(String),
    Top,
    Bot,
    Not,
    Tilde,
    And,
    Or,
    Arrow,
    Iff,
    StrongIff,
    LParen,
    RParen,
    LBrace,
    RBrace,
    Comma,
    Dot,
    Eof,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = match self {
            Token::Ident(name) => return write!(f, "`{name}`"),
            Token::Top => "`top`",
            Token::Bot => "`bot`",
            Token::Not => "`not`",
            Token::Tilde => "`~`",
            Token::And => "`&`",
            Token::Or => "`|`",
            Token::Arrow => "`->`",
            Token::Iff => "`<->`",
            Token::StrongIff => "`<=>`",
            Token::LParen => "`(`",
            Token::RParen => "`)`",
            Token::LBrace => "`{`",
            Token::RBrace => "`}`",
            Token::Comma => "`,`",
            Token::Dot => "`.`",
            Token::Eof => "end of input",
        };
        f.write_str(text)
    }
}

fn tokenize(text: &str) -> ParseResult<Vec<(Token, SourceSpan)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut tokens = Vec::new();
    let (mut line, mut column) = (1, 1);
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let span = |length| SourceSpan { line, column, length };
        if c == '\n' {
            line += 1;
            column = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            column += 1;
            i += 1;
            continue;
        }
        if c == '%' {
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
            }
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            let word: String = chars[start..i].iter().collect();
            let token = match word.as_str() {
                "top" => Token::Top,
                "bot" => Token::Bot,
                "not" => Token::Not,
                _ if Atom::is_valid_name(&word) => Token::Ident(word.clone()),
                _ => {
                    return Err(ParseError::new(
                        ParseErrorKind::Lexical,
                        span(i - start),
                        format!("invalid atom name `{word}` (atoms start with a lowercase letter)"),
                    ))
                }
            };
            tokens.push((token, span(i - start)));
            column += i - start;
            continue;
        }
        let rest = |s: &str| chars[i..].iter().take(s.chars().count()).copied().eq(s.chars());
        let (token, length) = if rest("<=>") {
            (Token::StrongIff, 3)
        } else if rest("<->") {
            (Token::Iff, 3)
        } else if rest("->") {
            (Token::Arrow, 2)
        } else {
            let token = match c {
                '~' | '∼' => Token::Tilde,
                '!' | '¬' => Token::Not,
                '&' | '∧' => Token::And,
                '|' | '∨' => Token::Or,
                '→' => Token::Arrow,
                '↔' => Token::Iff,
                '⟺' | '⇔' => Token::StrongIff,
                '⊤' => Token::Top,
                '⊥' => Token::Bot,
                '(' => Token::LParen,
                ')' => Token::RParen,
                '{' => Token::LBrace,
                '}' => Token::RBrace,
                ',' => Token::Comma,
                '.' => Token::Dot,
                other => {
                    return Err(ParseError::new(
                        ParseErrorKind::Lexical,
                        span(1),
                        format!("unexpected character `{other}`"),
                    ))
                }
            };
            (token, 1)
        };
        tokens.push((token, span(length)));
        column += length;
        i += length;
    }
    tokens.push((Token::Eof, SourceSpan { line, column, length: 1 }));
    Ok(tokens)
}

/// A binary connective token that produces implications, with its
/// parenthesis depth.
#[derive(Debug, Clone, Copy)]
struct ArrowSite {
    span: SourceSpan,
    depth: usize,
    plain: bool,
}

struct Parser {
    tokens: Vec<(Token, SourceSpan)>,
    position: usize,
    depth: usize,
    open_parens: Vec<SourceSpan>,
    arrows: Vec<ArrowSite>,
}

impl Parser {
    fn new(text: &str) -> ParseResult<Self> {
        Ok(Parser {
            tokens: tokenize(text)?,
            position: 0,
            depth: 0,
            open_parens: Vec::new(),
            arrows: Vec::new(),
        })
    }

    fn peek(&self) -> &Token {
        &self.tokens[self.position].0
    }

    fn span(&self) -> SourceSpan {
        self.tokens[self.position].1
    }

    fn advance(&mut self) -> (Token, SourceSpan) {
        let token = self.tokens[self.position].clone();
        if self.position + 1 < self.tokens.len() {
            self.position += 1;
        }
        token
    }

    fn at(&self, token: &Token) -> bool {
        self.peek() == token
    }

    fn unexpected(&self, expected: &str) -> ParseError {
        let (token, span) = &self.tokens[self.position];
        if *token == Token::RParen && self.depth == 0 {
            return ParseError::new(
                ParseErrorKind::UnbalancedParenthesis,
                *span,
                "unbalanced parenthesis: `)` without matching `(`",
            );
        }
        if matches!(token, Token::Eof | Token::Dot) && self.depth > 0 {
            let open = *self.open_parens.last().expect("depth tracks open parentheses");
            return ParseError::new(
                ParseErrorKind::UnbalancedParenthesis,
                open,
                "unbalanced parenthesis: `(` is never closed",
            );
        }
        ParseError::new(
            ParseErrorKind::UnexpectedToken,
            *span,
            format!("unexpected {token}, expected {expected}"),
        )
    }

    fn formula(&mut self) -> ParseResult<Formula> {
        let mut left = self.implication()?;
        loop {
            let strong = match self.peek() {
                Token::Iff => false,
                Token::StrongIff => true,
                _ => return Ok(left),
            };
            let (_, span) = self.advance();
            self.arrows.push(ArrowSite { span, depth: self.depth, plain: false });
            let right = self.implication()?;
            left = if strong { left.strong_iff(right) } else { left.iff(right) };
        }
    }

    fn implication(&mut self) -> ParseResult<Formula> {
        let left = self.disjunction()?;
        if self.at(&Token::Arrow) {
            let (_, span) = self.advance();
            self.arrows.push(ArrowSite { span, depth: self.depth, plain: true });
            let right = self.implication()?;
            Ok(left.implies(right))
        } else {
            Ok(left)
        }
    }

    fn disjunction(&mut self) -> ParseResult<Formula> {
        let mut left = self.conjunction()?;
        while self.at(&Token::Or) {
            self.advance();
            left = left.or(self.conjunction()?);
        }
        Ok(left)
    }

    fn conjunction(&mut self) -> ParseResult<Formula> {
        let mut left = self.unary()?;
        while self.at(&Token::And) {
            self.advance();
            left = left.and(self.unary()?);
        }
        Ok(left)
    }

    fn unary(&mut self) -> ParseResult<Formula> {
        match self.peek() {
            Token::Tilde => {
                self.advance();
                Ok(self.unary()?.xneg())
            }
            Token::Not => {
                self.advance();
                Ok(self.unary()?.dneg())
            }
            _ => self.primary(),
        }
    }

    fn primary(&mut self) -> ParseResult<Formula> {
        match self.peek().clone() {
            Token::Ident(name) => {
                self.advance();
                Ok(Formula::Atom(Atom::new(&name).expect("lexer validates atom names")))
            }
            Token::Top => {
                self.advance();
                Ok(Formula::Top)
            }
            Token::Bot => {
                self.advance();
                Ok(Formula::Bot)
            }
            Token::LParen => {
                let (_, span) = self.advance();
                self.depth += 1;
                self.open_parens.push(span);
                let inner = self.formula()?;
                if !self.at(&Token::RParen) {
                    return Err(self.unexpected("`)`"));
                }
                self.advance();
                self.depth -= 1;
                self.open_parens.pop();
                Ok(inner)
            }
            _ => Err(self.unexpected("a formula")),
        }
    }

    fn expect_end(&self) -> ParseResult<()> {
        if self.at(&Token::Eof) {
            Ok(())
        } else {
            Err(self.unexpected("end of input"))
        }
    }

    fn expect_dot(&mut self) -> ParseResult<()> {
        if self.at(&Token::Dot) {
            self.advance();
            Ok(())
        } else {
            Err(self.unexpected("`.`"))
        }
    }

    /// Parses `BODY -> HEAD.` or `HEAD.`, rejecting any implication other
    /// than the top-level arrow.
    fn rule(&mut self) -> ParseResult<Rule> {
        self.arrows.clear();
        let start = self.span();
        let formula = self.formula()?;
        self.expect_dot()?;

        let root = match formula {
            Formula::Impl(..) => self.arrows.iter().position(|a| a.plain && a.depth == 0),
            _ => None,
        };
        if let Some(offender) = (0..self.arrows.len()).find(|&i| Some(i) != root) {
            let side = match root {
                Some(root) if offender < root => "body",
                _ => "head",
            };
            return Err(ParseError::new(
                ParseErrorKind::NestedImplication,
                self.arrows[offender].span,
                format!("implication nested inside rule {side}"),
            ));
        }
        let (body, head) = match formula {
            Formula::Impl(body, head) => (*body, *head),
            head => (Formula::Top, head),
        };
        Rule::new(body, head).map_err(|_| {
            ParseError::new(ParseErrorKind::NestedImplication, start, "implication nested inside rule")
        })
    }

    fn literal(&mut self) -> ParseResult<ExplicitLiteral> {
        let negated = if self.at(&Token::Tilde) {
            self.advance();
            true
        } else {
            false
        };
        match self.peek().clone() {
            Token::Ident(name) => {
                self.advance();
                let atom = Atom::new(&name).expect("lexer validates atom names");
                Ok(ExplicitLiteral { atom, negated })
            }
            Token::Top | Token::Bot | Token::Not => Err(ParseError::new(
                ParseErrorKind::ReservedWord,
                self.span(),
                format!("reserved word {} used as an atom", self.peek()),
            )),
            _ => Err(self.unexpected("an explicit literal")),
        }
    }
}

/// Parses a single formula.
pub fn parse_formula(text: &str) -> Result<Formula, ParseError> {
    let mut parser = Parser::new(text)?;
    let formula = parser.formula()?;
    parser.expect_end()?;
    Ok(formula)
}

/// Parses a program: statements `BODY -> HEAD.` or `HEAD.` over nested
/// expressions.
pub fn parse_program(text: &str) -> Result<Program, ParseError> {
    let mut parser = Parser::new(text)?;
    let mut rules = Vec::new();
    while !parser.at(&Token::Eof) {
        rules.push(parser.rule()?);
    }
    Ok(Program::new(rules))
}

/// Parses a theory: arbitrary formulas, each terminated by `.`.
pub fn parse_theory(text: &str) -> Result<Theory, ParseError> {
    let mut parser = Parser::new(text)?;
    let mut formulas = Vec::new();
    while !parser.at(&Token::Eof) {
        formulas.push(parser.formula()?);
        parser.expect_dot()?;
    }
    Ok(Theory::new(formulas))
}

/// Parses a theory written one formula per line, without terminating dots.
pub fn parse_theory_lines(text: &str) -> Result<Theory, ParseError> {
    let mut formulas = Vec::new();
    for (index, line) in text.lines().enumerate() {
        let code = line.split('%').next().unwrap_or_default();
        if code.trim().is_empty() {
            continue;
        }
        let formula = parse_formula(code).map_err(|mut error| {
            error.span.line = index + 1;
            error
        })?;
        formulas.push(formula);
    }
    Ok(Theory::new(formulas))
}

/// Parses `{l1, ..., ln}` (braces optional) into a consistent interpretation.
pub fn parse_interpretation(text: &str) -> Result<Interpretation, ParseError> {
    let mut parser = Parser::new(text)?;
    let braced = parser.at(&Token::LBrace);
    let open = parser.span();
    if braced {
        parser.advance();
    }
    let mut literals: Vec<(ExplicitLiteral, SourceSpan)> = Vec::new();
    let closing = if braced { Token::RBrace } else { Token::Eof };
    if !parser.at(&closing) {
        loop {
            let span = parser.span();
            literals.push((parser.literal()?, span));
            if parser.at(&Token::Comma) {
                parser.advance();
            } else {
                break;
            }
        }
    }
    if braced {
        if parser.at(&Token::Eof) {
            return Err(ParseError::new(
                ParseErrorKind::UnbalancedParenthesis,
                open,
                "unbalanced brace: `{` is never closed",
            ));
        }
        if !parser.at(&Token::RBrace) {
            return Err(parser.unexpected("`,` or `}`"));
        }
        parser.advance();
    }
    if parser.at(&Token::RBrace) {
        return Err(ParseError::new(
            ParseErrorKind::UnbalancedParenthesis,
            parser.span(),
            "unbalanced brace: `}` without matching `{`",
        ));
    }
    parser.expect_end()?;

    for (literal, span) in &literals {
        if literals.iter().any(|(other, _)| *other == literal.complement()) {
            let atom = &literal.atom;
            return Err(ParseError::new(
                ParseErrorKind::Inconsistent,
                *span,
                format!("inconsistent interpretation: {atom} and ~{atom}"),
            ));
        }
    }
    Ok(Interpretation::new(literals.into_iter().map(|(l, _)| l))
        .expect("consistency checked above"))
}
