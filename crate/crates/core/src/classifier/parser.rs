//! Tokenizer and recursive-descent parser.
//!
//! Formula precedence, loosest first: `<->`, `->` (right-assoc), `\/`, `/\`, then the prefix
//! forms `~`, `forall`, `exists` (a quantifier body extends as far right as possible).
//! Term precedence, loosest first: `∪`/`∖`, `∩`, `×`, postfix `f[x]`, prefix `⋃`/`⋂`.

use super::{BinaryOp, Expr, Formula, Term, UnaryOp};
use crate::error::{Error, Result};
use crate::hfs::HfSet;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Num(usize),
    Empty,
    LBrace,
    RBrace,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Colon,
    Dot,
    Bar,
    In,
    Eq,
    Not,
    And,
    Or,
    Implies,
    Iff,
    Forall,
    Exists,
    Union,
    Inter,
    Diff,
    Times,
    BigUnion,
    BigInter,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Num(n) => format!("numeral `{n}`"),
            Tok::Eof => "end of input".into(),
            other => format!("`{other:?}`"),
        }
    }
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn tokenize(text: &str) -> Result<Vec<Spanned>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut column) = (0, 1, 1);
    macro_rules! err {
        ($msg:expr) => {
            return Err(Error::Syntax {
                line,
                column,
                message: $msg,
            })
        };
    }
    while i < chars.len() {
        let c = chars[i];
        if c == '\n' {
            i += 1;
            line += 1;
            column = 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            column += 1;
            continue;
        }
        let start_col = column;
        let rest = &chars[i..];
        let starts = |s: &str| {
            let s: Vec<char> = s.chars().collect();
            rest.len() >= s.len() && rest[..s.len()] == s[..]
        };
        let (tok, width) = if starts("<->") {
            (Tok::Iff, 3)
        } else if starts("->") {
            (Tok::Implies, 2)
        } else if starts("/\\") {
            (Tok::And, 2)
        } else if starts("\\/") {
            (Tok::Or, 2)
        } else if c == '\\' {
            let len = rest[1..].iter().take_while(|c| c.is_ascii_alphabetic()).count();
            let word: String = rest[1..1 + len].iter().collect();
            let tok = match word.as_str() {
                "in" => Tok::In,
                "cup" | "union" => Tok::Union,
                "cap" => Tok::Inter,
                "setminus" | "sim" => Tok::Diff,
                "times" => Tok::Times,
                "emptyset" => Tok::Empty,
                "bigcup" => Tok::BigUnion,
                "bigcap" => Tok::BigInter,
                "forall" => Tok::Forall,
                "exists" => Tok::Exists,
                "neg" | "lnot" => Tok::Not,
                "land" | "wedge" => Tok::And,
                "lor" | "vee" => Tok::Or,
                "to" | "implies" => Tok::Implies,
                "iff" => Tok::Iff,
                _ => err!(format!("unknown command `\\{word}`")),
            };
            (tok, 1 + len)
        } else if c.is_ascii_digit() {
            let len = rest.iter().take_while(|c| c.is_ascii_digit()).count();
            let digits: String = rest[..len].iter().collect();
            match digits.parse::<usize>() {
                Ok(n) if n <= 64 => (Tok::Num(n), len),
                _ => err!(format!("numeral `{digits}` out of range 0..=64")),
            }
        } else if c.is_alphabetic() || c == '_' {
            let len = rest
                .iter()
                .take_while(|c| c.is_alphanumeric() || **c == '_' || **c == '\'')
                .count();
            let word: String = rest[..len].iter().collect();
            let tok = match word.as_str() {
                "forall" => Tok::Forall,
                "exists" => Tok::Exists,
                _ => Tok::Ident(word),
            };
            (tok, len)
        } else {
            let tok = match c {
                '{' => Tok::LBrace,
                '}' => Tok::RBrace,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                '[' => Tok::LBracket,
                ']' => Tok::RBracket,
                ',' => Tok::Comma,
                ':' => Tok::Colon,
                '.' => Tok::Dot,
                '|' => Tok::Bar,
                '∈' => Tok::In,
                '=' => Tok::Eq,
                '~' | '¬' => Tok::Not,
                '∧' => Tok::And,
                '∨' => Tok::Or,
                '→' | '⇒' => Tok::Implies,
                '↔' | '⇔' => Tok::Iff,
                '∀' => Tok::Forall,
                '∃' => Tok::Exists,
                '∪' => Tok::Union,
                '∩' => Tok::Inter,
                '∖' | '∼' | '-' => Tok::Diff,
                '×' => Tok::Times,
                '∅' | 'φ' => Tok::Empty,
                '⋃' => Tok::BigUnion,
                '⋂' => Tok::BigInter,
                _ => err!(format!("unexpected character `{c}`")),
            };
            (tok, 1)
        };
        out.push(Spanned {
            tok,
            line,
            column: start_col,
        });
        i += width;
        column += width;
    }
    out.push(Spanned {
        tok: Tok::Eof,
        line,
        column,
    });
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

fn keyword_op(name: &str) -> Option<UnaryOp> {
    Some(match name {
        "pow" => UnaryOp::Power,
        "fst" => UnaryOp::First,
        "snd" => UnaryOp::Second,
        "dom" => UnaryOp::Domain,
        "ran" => UnaryOp::Range,
        "bigcup" => UnaryOp::BigUnion,
        "bigcap" => UnaryOp::BigIntersection,
        _ => return None,
    })
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn peek_at(&self, k: usize) -> &Tok {
        let i = (self.pos + k).min(self.toks.len() - 1);
        &self.toks[i].tok
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos < self.toks.len() - 1 {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, message: String) -> Result<T> {
        let s = &self.toks[self.pos];
        Err(Error::Syntax {
            line: s.line,
            column: s.column,
            message,
        })
    }

    fn expect(&mut self, tok: Tok) -> Result<()> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            self.error(format!(
                "expected {}, found {}",
                tok.describe(),
                self.peek().describe()
            ))
        }
    }

    fn ident(&mut self) -> Result<String> {
        match self.peek().clone() {
            Tok::Ident(s) if keyword_op(&s).is_none() => {
                self.bump();
                Ok(s)
            }
            other => self.error(format!("expected a variable, found {}", other.describe())),
        }
    }

    // -------------------- formulas -------------------- //

    fn formula(&mut self) -> Result<Formula> {
        let lhs = self.implication()?;
        if *self.peek() == Tok::Iff {
            self.bump();
            let rhs = self.formula()?;
            return Ok(Formula::iff(lhs, rhs));
        }
        Ok(lhs)
    }

    fn implication(&mut self) -> Result<Formula> {
        let lhs = self.disjunction()?;
        if *self.peek() == Tok::Implies {
            self.bump();
            let rhs = self.implication()?;
            return Ok(Formula::implies(lhs, rhs));
        }
        Ok(lhs)
    }

    fn disjunction(&mut self) -> Result<Formula> {
        let mut lhs = self.conjunction()?;
        while *self.peek() == Tok::Or {
            self.bump();
            lhs = Formula::or(lhs, self.conjunction()?);
        }
        Ok(lhs)
    }

    fn conjunction(&mut self) -> Result<Formula> {
        let mut lhs = self.unary_formula()?;
        while *self.peek() == Tok::And {
            self.bump();
            lhs = Formula::and(lhs, self.unary_formula()?);
        }
        Ok(lhs)
    }

    fn unary_formula(&mut self) -> Result<Formula> {
        match self.peek() {
            Tok::Not => {
                self.bump();
                Ok(Formula::not(self.unary_formula()?))
            }
            Tok::Forall | Tok::Exists => {
                let universal = self.bump() == Tok::Forall;
                let var = self.ident()?;
                if matches!(self.peek(), Tok::Dot | Tok::Comma) {
                    self.bump();
                }
                let body = self.formula()?;
                Ok(if universal {
                    Formula::forall(&var, body)
                } else {
                    Formula::exists(&var, body)
                })
            }
            Tok::LParen => {
                // Either a parenthesized formula or a parenthesized term starting an atom.
                let save = self.pos;
                let grouped = (|| {
                    self.bump();
                    let f = self.formula()?;
                    self.expect(Tok::RParen)?;
                    Ok(f)
                })();
                match grouped {
                    Ok(f) if !matches!(self.peek(), Tok::In | Tok::Eq | Tok::LBracket) => Ok(f),
                    first => {
                        let furthest = self.pos;
                        self.pos = save;
                        match self.atom_formula() {
                            Ok(f) => Ok(f),
                            Err(e) => match first {
                                Err(e1) if furthest > self.pos => Err(e1),
                                _ => Err(e),
                            },
                        }
                    }
                }
            }
            _ => self.atom_formula(),
        }
    }

    fn atom_formula(&mut self) -> Result<Formula> {
        let lhs = self.term()?;
        match self.peek() {
            Tok::In => {
                self.bump();
                Ok(Formula::In(lhs, self.term()?))
            }
            Tok::Eq => {
                self.bump();
                Ok(Formula::Eq(lhs, self.term()?))
            }
            other => self.error(format!("expected `∈` or `=`, found {}", other.describe())),
        }
    }

    // -------------------- terms -------------------- //

    fn term(&mut self) -> Result<Term> {
        let mut lhs = self.intersection()?;
        loop {
            let op = match self.peek() {
                Tok::Union => BinaryOp::Union,
                Tok::Diff => BinaryOp::Difference,
                _ => return Ok(lhs),
            };
            self.bump();
            lhs = Term::binary(op, lhs, self.intersection()?);
        }
    }

    fn intersection(&mut self) -> Result<Term> {
        let mut lhs = self.product()?;
        while *self.peek() == Tok::Inter {
            self.bump();
            lhs = Term::binary(BinaryOp::Intersection, lhs, self.product()?);
        }
        Ok(lhs)
    }

    fn product(&mut self) -> Result<Term> {
        let mut lhs = self.postfix()?;
        while *self.peek() == Tok::Times {
            self.bump();
            lhs = Term::binary(BinaryOp::Cartesian, lhs, self.postfix()?);
        }
        Ok(lhs)
    }

    fn postfix(&mut self) -> Result<Term> {
        let mut t = self.prefix()?;
        while *self.peek() == Tok::LBracket {
            self.bump();
            let arg = self.term()?;
            self.expect(Tok::RBracket)?;
            t = Term::binary(BinaryOp::Value, t, arg);
        }
        Ok(t)
    }

    fn prefix(&mut self) -> Result<Term> {
        match self.peek() {
            Tok::BigUnion => {
                self.bump();
                Ok(Term::unary(UnaryOp::BigUnion, self.prefix()?))
            }
            Tok::BigInter => {
                self.bump();
                Ok(Term::unary(UnaryOp::BigIntersection, self.prefix()?))
            }
            _ => self.atom_term(),
        }
    }

    fn atom_term(&mut self) -> Result<Term> {
        match self.peek().clone() {
            Tok::Num(n) => {
                self.bump();
                Ok(Term::Lit(HfSet::numeral(n)))
            }
            Tok::Empty => {
                self.bump();
                Ok(Term::Lit(HfSet::empty()))
            }
            Tok::Ident(name) => {
                if let Some(op) = keyword_op(&name) {
                    if *self.peek_at(1) == Tok::LParen {
                        self.bump();
                        self.bump();
                        let arg = self.term()?;
                        self.expect(Tok::RParen)?;
                        return Ok(Term::unary(op, arg));
                    }
                }
                self.bump();
                Ok(Term::Var(name))
            }
            Tok::LParen => {
                self.bump();
                let t = self.term()?;
                self.expect(Tok::RParen)?;
                Ok(t)
            }
            Tok::LBracket => {
                self.bump();
                let a = self.term()?;
                let t = match self.peek() {
                    Tok::Bar => {
                        self.bump();
                        Term::binary(BinaryOp::UnorderedPair, a, self.term()?)
                    }
                    Tok::Comma => {
                        self.bump();
                        Term::binary(BinaryOp::OrderedPair, a, self.term()?)
                    }
                    _ => Term::unary(UnaryOp::Singleton, a),
                };
                self.expect(Tok::RBracket)?;
                Ok(t)
            }
            Tok::LBrace => self.brace(),
            other => self.error(format!("expected a term, found {}", other.describe())),
        }
    }

    fn brace(&mut self) -> Result<Term> {
        self.expect(Tok::LBrace)?;
        // {x : F}
        if matches!(self.peek(), Tok::Ident(_)) && *self.peek_at(1) == Tok::Colon {
            let var = self.ident()?;
            self.expect(Tok::Colon)?;
            let body = self.formula()?;
            self.expect(Tok::RBrace)?;
            return Ok(Term::Class {
                var,
                body: Box::new(body),
            });
        }
        // {(u, v) : F}
        if *self.peek() == Tok::LParen
            && matches!(self.peek_at(1), Tok::Ident(_))
            && *self.peek_at(2) == Tok::Comma
            && matches!(self.peek_at(3), Tok::Ident(_))
            && *self.peek_at(4) == Tok::RParen
            && *self.peek_at(5) == Tok::Colon
        {
            self.bump();
            let first = self.ident()?;
            self.expect(Tok::Comma)?;
            let second = self.ident()?;
            self.expect(Tok::RParen)?;
            self.expect(Tok::Colon)?;
            let body = self.formula()?;
            self.expect(Tok::RBrace)?;
            return Ok(Term::PairClass {
                first,
                second,
                body: Box::new(body),
            });
        }
        let mut items = Vec::new();
        if *self.peek() != Tok::RBrace {
            items.push(self.term()?);
            while *self.peek() == Tok::Comma {
                self.bump();
                items.push(self.term()?);
            }
        }
        self.expect(Tok::RBrace)?;
        Ok(Term::set(items))
    }

    fn finish(&self) -> Result<()> {
        match self.peek() {
            Tok::Eof => Ok(()),
            other => self.error(format!("unexpected {} after expression", other.describe())),
        }
    }
}

fn run<T>(text: &str, f: impl FnOnce(&mut Parser) -> Result<T>) -> Result<(T, usize)> {
    let mut p = Parser {
        toks: tokenize(text)?,
        pos: 0,
    };
    let out = f(&mut p)?;
    p.finish()?;
    Ok((out, p.pos))
}

pub fn parse_formula(text: &str) -> Result<Formula> {
    run(text, Parser::formula).map(|(f, _)| f)
}

pub fn parse_term(text: &str) -> Result<Term> {
    run(text, Parser::term).map(|(t, _)| t)
}

/// Parses either a formula or a term; on failure reports the error that got furthest.
pub fn parse(text: &str) -> Result<Expr> {
    let as_formula = parse_formula(text);
    let f_err = match as_formula {
        Ok(f) => return Ok(Expr::Formula(f)),
        Err(e) => e,
    };
    match parse_term(text) {
        Ok(t) => Ok(Expr::Term(t)),
        Err(t_err) => Err(furthest(f_err, t_err)),
    }
}

fn furthest(a: Error, b: Error) -> Error {
    let key = |e: &Error| match e {
        Error::Syntax { line, column, .. } => (*line, *column),
        _ => (0, 0),
    };
    if key(&b) > key(&a) {
        b
    } else {
        a
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_builder_structure() {
        let t = parse_term("{ x : x ∈ A }").unwrap();
        assert_eq!(
            t,
            Term::Class {
                var: "x".into(),
                body: Box::new(Formula::In(Term::var("x"), Term::var("A"))),
            }
        );
        let t = parse_term("{ (u,v) : u ∈ v }").unwrap();
        assert!(matches!(t, Term::PairClass { ref first, ref second, .. } if first == "u" && second == "v"));
    }

    #[test]
    fn missing_operand_is_a_positioned_error() {
        match parse("{ x : ∈ }") {
            Err(Error::Syntax { line, column, .. }) => assert_eq!((line, column), (1, 7)),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse("a ∈"), Err(Error::Syntax { .. })));
        assert!(matches!(
            parse("x\n  ∈ ∈"),
            Err(Error::Syntax {
                line: 2,
                column: 5,
                ..
            })
        ));
    }

    #[test]
    fn ascii_and_unicode_spellings_agree() {
        let a = parse_formula("forall x (x \\in A /\\ ~ x = y -> x \\in B)").unwrap();
        let b = parse_formula("∀x (x ∈ A ∧ ¬ x = y → x ∈ B)").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn precedence() {
        let f = parse_formula("a ∈ b /\\ c ∈ d \\/ e ∈ f -> g ∈ h <-> i ∈ j").unwrap();
        assert!(matches!(f, Formula::Iff(..)));
        let t = parse_term("A ∪ B ∩ C × D").unwrap();
        match t {
            Term::Binary(BinaryOp::Union, _, rhs) => {
                assert!(matches!(*rhs, Term::Binary(BinaryOp::Intersection, _, _)))
            }
            other => panic!("{other:?}"),
        }
        let f = parse_formula("a ∈ b -> c ∈ d -> e ∈ f").unwrap();
        match f {
            Formula::Implies(_, rhs) => assert!(matches!(*rhs, Formula::Implies(..))),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn parenthesized_terms_in_atoms() {
        let f = parse_formula("(A ∪ B) ∈ C").unwrap();
        assert!(matches!(f, Formula::In(Term::Binary(BinaryOp::Union, _, _), _)));
        let f = parse_formula("(a ∈ b)").unwrap();
        assert!(matches!(f, Formula::In(..)));
        let f = parse_formula("(f)[x] = y").unwrap();
        assert!(matches!(f, Formula::Eq(Term::Binary(BinaryOp::Value, _, _), _)));
    }

    #[test]
    fn brackets_and_literals() {
        assert_eq!(
            parse_term("[0]").unwrap(),
            Term::unary(UnaryOp::Singleton, Term::Lit(HfSet::numeral(0)))
        );
        assert!(matches!(
            parse_term("[a | b]").unwrap(),
            Term::Binary(BinaryOp::UnorderedPair, _, _)
        ));
        assert!(matches!(
            parse_term("[a, b]").unwrap(),
            Term::Binary(BinaryOp::OrderedPair, _, _)
        ));
        assert_eq!(parse_term("{0, 1}").unwrap(), Term::Lit(HfSet::numeral(2)));
        assert_eq!(parse_term("{}").unwrap(), Term::Lit(HfSet::empty()));
        assert!(matches!(parse_term("{x, 1}").unwrap(), Term::Set(_)));
        assert!(matches!(
            parse_term("f[x][y]").unwrap(),
            Term::Binary(BinaryOp::Value, _, _)
        ));
        assert_eq!(
            parse_term("⋃ pow(A)").unwrap(),
            parse_term("bigcup(pow(A))").unwrap()
        );
    }

    #[test]
    fn top_level_sort_detection() {
        assert!(matches!(parse("A ∪ [A]").unwrap(), Expr::Term(_)));
        assert!(matches!(parse("0 ∈ 2").unwrap(), Expr::Formula(_)));
        assert!(matches!(parse("pow(∅)").unwrap(), Expr::Term(_)));
    }
}
