//! Recursive-descent parser for the ASCII formula grammar.
//!
//! Precedence, tightest first: `~`; `&`; `|`; `->` and `>>`; `=>`;
//! `<->` and `<=>`. `&` and `|` associate to the left, every
//! conditional and biconditional to the right. Operators sharing a level
//! may not be mixed without parentheses. A quantifier `forall v.` or
//! `exists v.` may stand wherever an operand is expected; its body extends
//! as far right as possible.
//!
//! Unicode spellings (`¬ ∧ ∨ → ⊃ ⇒ ↔ ⇔ ∀ ∃`) are accepted on input.

use thiserror::Error;

use super::formula::{BinaryOp, Constant, Formula, Quantifier};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("{line}:{column}: expected {}, found {found}", expected.join(" or "))]
    Syntax {
        line: usize,
        column: usize,
        expected: Vec<String>,
        found: String,
    },
    #[error("{line}:{column}: reserved word `{word}` cannot be used as an atom")]
    ReservedWord { line: usize, column: usize, word: String },
    #[error("{line}:{column}: cannot mix `{first}` and `{second}` without parentheses")]
    MixedOperators {
        line: usize,
        column: usize,
        first: &'static str,
        second: &'static str,
    },
}

impl ParseError {
    pub fn line(&self) -> usize {
        match self {
            ParseError::Syntax { line, .. }
            | ParseError::ReservedWord { line, .. }
            | ParseError::MixedOperators { line, .. } => *line,
        }
    }

    pub fn column(&self) -> usize {
        match self {
            ParseError::Syntax { column, .. }
            | ParseError::ReservedWord { column, .. }
            | ParseError::MixedOperators { column, .. } => *column,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Const(Constant),
    Not,
    Op(BinaryOp),
    LParen,
    RParen,
    Dot,
    Quant(Quantifier),
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("atom `{s}`"),
            Tok::Const(c) => format!("`{c}`"),
            Tok::Not => "`~`".into(),
            Tok::Op(op) => format!("`{}`", op.symbol()),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Dot => "`.`".into(),
            Tok::Quant(q) => format!("`{}`", q.keyword()),
            Tok::Eof => "end of input".into(),
        }
    }
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(text: &str) -> Result<Vec<Spanned>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0usize, 1usize, 1usize);
    while i < chars.len() {
        let c = chars[i];
        let (start_line, start_col) = (line, col);
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
        let rest: String = chars[i..chars.len().min(i + 3)].iter().collect();
        let (tok, len) = if rest.starts_with("<=>") {
            (Tok::Op(BinaryOp::DBicond), 3)
        } else if rest.starts_with("<->") {
            (Tok::Op(BinaryOp::Bicond), 3)
        } else if rest.starts_with("->") {
            (Tok::Op(BinaryOp::Arrow), 2)
        } else if rest.starts_with(">>") {
            (Tok::Op(BinaryOp::Hook), 2)
        } else if rest.starts_with("=>") {
            (Tok::Op(BinaryOp::DArrow), 2)
        } else {
            match c {
                '~' | '¬' => (Tok::Not, 1),
                '&' | '∧' => (Tok::Op(BinaryOp::And), 1),
                '|' | '∨' => (Tok::Op(BinaryOp::Or), 1),
                '→' => (Tok::Op(BinaryOp::Arrow), 1),
                '⊃' => (Tok::Op(BinaryOp::Hook), 1),
                '⇒' => (Tok::Op(BinaryOp::DArrow), 1),
                '↔' => (Tok::Op(BinaryOp::Bicond), 1),
                '⇔' => (Tok::Op(BinaryOp::DBicond), 1),
                '∀' => (Tok::Quant(Quantifier::Forall), 1),
                '∃' => (Tok::Quant(Quantifier::Exists), 1),
                '(' => (Tok::LParen, 1),
                ')' => (Tok::RParen, 1),
                '.' => (Tok::Dot, 1),
                '#' => match chars.get(i + 1).copied().and_then(Constant::from_letter) {
                    Some(k) if !chars.get(i + 2).is_some_and(|c| c.is_ascii_alphanumeric() || *c == '_') => {
                        (Tok::Const(k), 2)
                    }
                    _ => {
                        return Err(ParseError::Syntax {
                            line,
                            column: col,
                            expected: vec!["one of `#t #b #n #f`".into()],
                            found: format!("`{}`", chars[i..chars.len().min(i + 2)].iter().collect::<String>()),
                        })
                    }
                },
                c if c.is_ascii_alphabetic() => {
                    let mut j = i;
                    while j < chars.len() && (chars[j].is_ascii_alphanumeric() || chars[j] == '_') {
                        j += 1;
                    }
                    let word: String = chars[i..j].iter().collect();
                    let tok = match word.as_str() {
                        "forall" => Tok::Quant(Quantifier::Forall),
                        "exists" => Tok::Quant(Quantifier::Exists),
                        _ => Tok::Ident(word),
                    };
                    (tok, j - i)
                }
                other => {
                    return Err(ParseError::Syntax {
                        line,
                        column: col,
                        expected: vec!["a formula token".into()],
                        found: format!("character `{other}`"),
                    })
                }
            }
        };
        out.push(Spanned {
            tok,
            line: start_line,
            column: start_col,
        });
        i += len;
        col += len;
    }
    out.push(Spanned {
        tok: Tok::Eof,
        line,
        column: col,
    });
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

const OPERAND_START: [&str; 5] = ["atom", "constant", "`~`", "`(`", "quantifier"];

impl Parser {
    fn peek(&self) -> &Spanned {
        &self.toks[self.pos]
    }

    fn bump(&mut self) -> Spanned {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&str]) -> ParseError {
        let t = self.peek();
        ParseError::Syntax {
            line: t.line,
            column: t.column,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: t.tok.describe(),
        }
    }

    fn formula(&mut self) -> Result<Formula, ParseError> {
        self.right_chain(&[BinaryOp::Bicond, BinaryOp::DBicond], Self::darrow)
    }

    fn darrow(&mut self) -> Result<Formula, ParseError> {
        self.right_chain(&[BinaryOp::DArrow], Self::arrow)
    }

    fn arrow(&mut self) -> Result<Formula, ParseError> {
        self.right_chain(&[BinaryOp::Arrow, BinaryOp::Hook], Self::disjunction)
    }

    fn disjunction(&mut self) -> Result<Formula, ParseError> {
        self.left_chain(BinaryOp::Or, Self::conjunction)
    }

    fn conjunction(&mut self) -> Result<Formula, ParseError> {
        self.left_chain(BinaryOp::And, Self::unary)
    }

    /// Parses `operand (op operand)*` where every `op` must be the same
    /// member of `ops`; the result nests to the right.
    fn right_chain(
        &mut self,
        ops: &[BinaryOp],
        mut operand: impl FnMut(&mut Self) -> Result<Formula, ParseError>,
    ) -> Result<Formula, ParseError> {
        let mut operands = vec![operand(self)?];
        let mut chosen: Option<BinaryOp> = None;
        loop {
            let (op, line, column) = match &self.peek().tok {
                Tok::Op(op) if ops.contains(op) => (*op, self.peek().line, self.peek().column),
                _ => break,
            };
            if let Some(first) = chosen {
                if first != op {
                    return Err(ParseError::MixedOperators {
                        line,
                        column,
                        first: first.symbol(),
                        second: op.symbol(),
                    });
                }
            }
            chosen = Some(op);
            self.bump();
            operands.push(operand(self)?);
        }
        let mut acc = operands.pop().expect("at least one operand");
        while let Some(l) = operands.pop() {
            acc = Formula::binary(chosen.expect("operator present"), l, acc);
        }
        Ok(acc)
    }

    fn left_chain(
        &mut self,
        op: BinaryOp,
        mut operand: impl FnMut(&mut Self) -> Result<Formula, ParseError>,
    ) -> Result<Formula, ParseError> {
        let mut acc = operand(self)?;
        while self.peek().tok == Tok::Op(op) {
            self.bump();
            let r = operand(self)?;
            acc = Formula::binary(op, acc, r);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        let t = self.peek().clone();
        match t.tok {
            Tok::Not => {
                self.bump();
                Ok(Formula::neg(self.unary()?))
            }
            Tok::Quant(q) => {
                self.bump();
                let v = self.peek().clone();
                let var = match v.tok {
                    Tok::Ident(name) => name,
                    Tok::Quant(q2) => {
                        return Err(ParseError::ReservedWord {
                            line: v.line,
                            column: v.column,
                            word: q2.keyword().into(),
                        })
                    }
                    // A keyword not followed by a variable is being used as an atom.
                    _ => {
                        return Err(ParseError::ReservedWord {
                            line: t.line,
                            column: t.column,
                            word: q.keyword().into(),
                        })
                    }
                };
                self.bump();
                if self.peek().tok != Tok::Dot {
                    return Err(self.error(&["`.`"]));
                }
                self.bump();
                let body = self.formula()?;
                Ok(Formula::Quant(q, var, Box::new(body)))
            }
            Tok::Ident(name) => {
                self.bump();
                Ok(Formula::Atom(name))
            }
            Tok::Const(c) => {
                self.bump();
                Ok(Formula::Const(c))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.formula()?;
                if self.peek().tok != Tok::RParen {
                    return Err(self.error(&["`)`", "a binary operator"]));
                }
                self.bump();
                Ok(inner)
            }
            _ => Err(self.error(&OPERAND_START)),
        }
    }
}

/// Parses a complete formula.
pub fn parse(text: &str) -> Result<Formula, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0 };
    let f = p.formula()?;
    if p.peek().tok != Tok::Eof {
        return Err(p.error(&["a binary operator", "end of input"]));
    }
    Ok(f)
}
