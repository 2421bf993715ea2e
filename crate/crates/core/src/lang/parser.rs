//! Hand-written lexer and recursive-descent parser for `.mtl` programs and
//! `.facts` datasets.
//!
//! ```text
//! program  ::= (rule)*
//! rule     ::= head ( ":-" literal ("," literal)* )? "."
//! literal  ::= "not" metric | metric
//! metric   ::= unary ( ("S" | "U") interval unary )*          left associative
//! unary    ::= "top" | "bottom" | atom | "(" metric ")"
//!            | ("diamondminus" | "diamondplus" | "boxminus" | "boxplus") interval unary
//! atom     ::= IDENT ( "(" term ("," term)* ")" )?
//! interval ::= ("[" | "(") bound "," bound ("]" | ")") | INT
//! fact     ::= atom "@" interval (";" interval)* "."?
//! ```
//!
//! Terms starting with a lowercase letter or `_` are variables; everything
//! else (uppercase identifiers, integers) is a constant. `%` starts a line
//! comment.

use std::collections::{BTreeSet, HashMap};

use super::ast::{Dataset, Fact, GroundAtom, HeadAtom, MetricAtom, Program, RelationalAtom, Rule, Term};
use super::LangError;
use crate::temporal::{Interval, TimeBound, TIME_LIMIT};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Int(i64),
    NegInf,
    PosInf,
    LBracket,
    RBracket,
    LParen,
    RParen,
    Comma,
    Dot,
    Arrow,
    At,
    Semi,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Int(n) => format!("`{n}`"),
            Tok::NegInf => "`-inf`".into(),
            Tok::PosInf => "`+inf`".into(),
            Tok::LBracket => "`[`".into(),
            Tok::RBracket => "`]`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Dot => "`.`".into(),
            Tok::Arrow => "`:-`".into(),
            Tok::At => "`@`".into(),
            Tok::Semi => "`;`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

const KEYWORDS: [&str; 7] = ["not", "top", "bottom", "diamondminus", "diamondplus", "boxminus", "boxplus"];

fn lex(text: &str, first_line: usize) -> Result<Vec<Token>, LangError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0usize, first_line, 1usize);
    let syntax = |line, col, message: String| LangError::Syntax { line, col, message };

    while i < chars.len() {
        let c = chars[i];
        let (start_line, start_col) = (line, col);
        let bump = |n: usize, i: &mut usize, col: &mut usize| {
            *i += n;
            *col += n;
        };
        match c {
            '\n' => {
                i += 1;
                line += 1;
                col = 1;
                continue;
            }
            c if c.is_whitespace() => bump(1, &mut i, &mut col),
            '%' => {
                while i < chars.len() && chars[i] != '\n' {
                    i += 1;
                }
            }
            '[' | ']' | '(' | ')' | ',' | '.' | '@' | ';' => {
                let tok = match c {
                    '[' => Tok::LBracket,
                    ']' => Tok::RBracket,
                    '(' => Tok::LParen,
                    ')' => Tok::RParen,
                    ',' => Tok::Comma,
                    '.' => Tok::Dot,
                    '@' => Tok::At,
                    _ => Tok::Semi,
                };
                out.push(Token { tok, line: start_line, col: start_col });
                bump(1, &mut i, &mut col);
            }
            ':' if chars.get(i + 1) == Some(&'-') => {
                out.push(Token { tok: Tok::Arrow, line: start_line, col: start_col });
                bump(2, &mut i, &mut col);
            }
            '-' | '+' | '0'..='9' => {
                let negative = c == '-';
                let mut j = if c.is_ascii_digit() { i } else { i + 1 };
                if chars[j..].starts_with(&['i', 'n', 'f']) && c != '0' && !c.is_ascii_digit() {
                    let end = j + 3;
                    if chars.get(end).is_some_and(|ch| ch.is_alphanumeric() || *ch == '_') {
                        return Err(syntax(start_line, start_col, "malformed infinity".into()));
                    }
                    let tok = if negative { Tok::NegInf } else { Tok::PosInf };
                    out.push(Token { tok, line: start_line, col: start_col });
                    bump(end - i, &mut i, &mut col);
                    continue;
                }
                let digits_start = j;
                while j < chars.len() && chars[j].is_ascii_digit() {
                    j += 1;
                }
                if j == digits_start {
                    return Err(syntax(start_line, start_col, format!("unexpected character `{c}`")));
                }
                let digits: String = chars[digits_start..j].iter().collect();
                let magnitude: i64 = digits
                    .parse()
                    .ok()
                    .filter(|n: &i64| *n <= TIME_LIMIT)
                    .ok_or_else(|| syntax(start_line, start_col, format!("integer {digits} exceeds {TIME_LIMIT}")))?;
                let value = if negative { -magnitude } else { magnitude };
                out.push(Token { tok: Tok::Int(value), line: start_line, col: start_col });
                bump(j - i, &mut i, &mut col);
            }
            c if c.is_alphabetic() || c == '_' => {
                let mut j = i;
                while j < chars.len() && (chars[j].is_alphanumeric() || chars[j] == '_') {
                    j += 1;
                }
                let word: String = chars[i..j].iter().collect();
                let tok = if word == "inf" { Tok::PosInf } else { Tok::Ident(word) };
                out.push(Token { tok, line: start_line, col: start_col });
                bump(j - i, &mut i, &mut col);
            }
            other => return Err(syntax(start_line, start_col, format!("unexpected character `{other}`"))),
        }
    }
    out.push(Token { tok: Tok::Eof, line, col });
    Ok(out)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    arities: HashMap<String, usize>,
}

impl Parser {
    fn new(toks: Vec<Token>) -> Self { Parser { toks, pos: 0, arities: HashMap::new() } }

    fn peek(&self) -> &Tok { &self.toks[self.pos].tok }

    fn peek_at(&self, k: usize) -> &Tok { &self.toks[(self.pos + k).min(self.toks.len() - 1)].tok }

    fn here(&self) -> (usize, usize) {
        let t = &self.toks[self.pos];
        (t.line, t.col)
    }

    fn next(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, message: impl Into<String>) -> LangError {
        let (line, col) = self.here();
        LangError::Syntax { line, col, message: message.into() }
    }

    fn expect(&mut self, want: Tok) -> Result<(), LangError> {
        if *self.peek() == want {
            self.next();
            Ok(())
        } else {
            Err(self.error(format!("expected {}, found {}", want.describe(), self.peek().describe())))
        }
    }

    fn is_ident(&self, word: &str) -> bool { matches!(self.peek(), Tok::Ident(w) if w == word) }

    fn program(&mut self) -> Result<Program, LangError> {
        let mut rules: Vec<Rule<RelationalAtom>> = Vec::new();
        while *self.peek() != Tok::Eof {
            let rule = self.rule()?;
            if !rules.contains(&rule) {
                rules.push(rule);
            }
        }
        Ok(Program { rules })
    }

    fn rule(&mut self) -> Result<Rule<RelationalAtom>, LangError> {
        let (line, col) = self.here();
        let head_metric = self.metric()?;
        let head = to_head(&head_metric, line, col)?;
        let mut rule = Rule { head, positive: Vec::new(), negative: Vec::new() };
        if *self.peek() == Tok::Arrow {
            self.next();
            loop {
                if self.is_ident("not") {
                    self.next();
                    rule.negative.push(self.metric()?);
                } else {
                    rule.positive.push(self.metric()?);
                }
                if *self.peek() == Tok::Comma {
                    self.next();
                } else {
                    break;
                }
            }
        }
        self.expect(Tok::Dot)?;
        check_safety(&rule)?;
        Ok(rule)
    }

    fn metric(&mut self) -> Result<MetricAtom<RelationalAtom>, LangError> {
        let mut left = self.unary()?;
        loop {
            let op = match (self.peek(), self.peek_at(1)) {
                (Tok::Ident(w), Tok::LBracket | Tok::LParen | Tok::Int(_)) if w == "S" || w == "U" => w.clone(),
                _ => break,
            };
            self.next();
            let delta = self.metric_interval()?;
            let right = self.unary()?;
            left = if op == "S" {
                MetricAtom::Since(Box::new(left), delta, Box::new(right))
            } else {
                MetricAtom::Until(Box::new(left), delta, Box::new(right))
            };
        }
        Ok(left)
    }

    fn unary(&mut self) -> Result<MetricAtom<RelationalAtom>, LangError> {
        match self.peek().clone() {
            Tok::LParen => {
                self.next();
                let m = self.metric()?;
                self.expect(Tok::RParen)?;
                Ok(m)
            }
            Tok::Ident(w) => match w.as_str() {
                "top" => {
                    self.next();
                    Ok(MetricAtom::Top)
                }
                "bottom" => {
                    self.next();
                    Ok(MetricAtom::Bottom)
                }
                "diamondminus" | "diamondplus" | "boxminus" | "boxplus" => {
                    self.next();
                    let delta = self.metric_interval()?;
                    let inner = Box::new(self.unary()?);
                    Ok(match w.as_str() {
                        "diamondminus" => MetricAtom::DiamondMinus(delta, inner),
                        "diamondplus" => MetricAtom::DiamondPlus(delta, inner),
                        "boxminus" => MetricAtom::BoxMinus(delta, inner),
                        _ => MetricAtom::BoxPlus(delta, inner),
                    })
                }
                "not" => Err(self.error("`not` may only prefix a body literal")),
                _ => Ok(MetricAtom::Rel(self.atom()?)),
            },
            other => Err(self.error(format!("expected a metric atom, found {}", other.describe()))),
        }
    }

    fn atom(&mut self) -> Result<RelationalAtom, LangError> {
        let (line, col) = self.here();
        let predicate = match self.next() {
            Tok::Ident(w) if !KEYWORDS.contains(&w.as_str()) => w,
            other => {
                return Err(LangError::Syntax { line, col, message: format!("expected a predicate, found {}", other.describe()) })
            }
        };
        let mut args = Vec::new();
        if *self.peek() == Tok::LParen {
            self.next();
            loop {
                let term = match self.next() {
                    Tok::Ident(w) if !KEYWORDS.contains(&w.as_str()) => {
                        if w.starts_with(|c: char| c.is_lowercase() || c == '_') {
                            Term::Var(w)
                        } else {
                            Term::Const(w)
                        }
                    }
                    Tok::Int(n) if n >= 0 => Term::Const(n.to_string()),
                    other => return Err(self.error(format!("expected a term, found {}", other.describe()))),
                };
                args.push(term);
                match self.next() {
                    Tok::Comma => continue,
                    Tok::RParen => break,
                    other => return Err(self.error(format!("expected `,` or `)`, found {}", other.describe()))),
                }
            }
        }
        match self.arities.get(&predicate) {
            Some(&expected) if expected != args.len() => {
                return Err(LangError::Arity { predicate, expected, found: args.len(), line, col })
            }
            Some(_) => {}
            None => {
                self.arities.insert(predicate.clone(), args.len());
            }
        }
        Ok(RelationalAtom { predicate, args })
    }

    fn metric_interval(&mut self) -> Result<Interval, LangError> {
        let (line, col) = self.here();
        let iv = self.interval()?;
        if !iv.is_non_negative() {
            return Err(LangError::NegativeInterval { line, col, interval: iv.to_string() });
        }
        Ok(iv)
    }

    fn interval(&mut self) -> Result<Interval, LangError> {
        let (line, col) = self.here();
        let lo_closed = match self.next() {
            Tok::Int(t) => return Ok(Interval::point(t)),
            Tok::LBracket => true,
            Tok::LParen => false,
            other => return Err(self.error(format!("expected an interval, found {}", other.describe()))),
        };
        let lo = self.bound()?;
        self.expect(Tok::Comma)?;
        let hi = self.bound()?;
        let hi_closed = match self.next() {
            Tok::RBracket => true,
            Tok::RParen => false,
            other => return Err(self.error(format!("expected `]` or `)`, found {}", other.describe()))),
        };
        Interval::new(lo, lo_closed, hi, hi_closed).map_err(|e| LangError::Syntax { line, col, message: e.to_string() })
    }

    fn bound(&mut self) -> Result<TimeBound, LangError> {
        match self.next() {
            Tok::Int(t) => Ok(TimeBound::Finite(t)),
            Tok::NegInf => Ok(TimeBound::NegInf),
            Tok::PosInf => Ok(TimeBound::PosInf),
            other => Err(self.error(format!("expected an interval endpoint, found {}", other.describe()))),
        }
    }

    fn dataset(&mut self) -> Result<Dataset, LangError> {
        let mut data = Dataset::default();
        while *self.peek() != Tok::Eof {
            let (line, col) = self.here();
            let atom = self.atom()?;
            let atom = atom.to_ground().ok_or_else(|| LangError::NonGroundFact { line, col, atom: atom.to_string() })?;
            self.expect(Tok::At)?;
            loop {
                let interval = self.interval()?;
                data.push(Fact { atom: atom.clone(), interval });
                if *self.peek() == Tok::Semi {
                    self.next();
                } else {
                    break;
                }
            }
            if *self.peek() == Tok::Dot {
                self.next();
            }
        }
        Ok(data)
    }
}

fn to_head(m: &MetricAtom<RelationalAtom>, line: usize, col: usize) -> Result<HeadAtom<RelationalAtom>, LangError> {
    let boxed = |d: &Interval, inner: &MetricAtom<RelationalAtom>| -> Result<Box<HeadAtom<RelationalAtom>>, LangError> {
        if !d.is_bounded() {
            return Err(LangError::InfiniteHeadInterval { line, col, interval: d.to_string() });
        }
        Ok(Box::new(to_head(inner, line, col)?))
    };
    match m {
        MetricAtom::Top => Ok(HeadAtom::Top),
        MetricAtom::Bottom => Err(LangError::BottomInHead { line, col }),
        MetricAtom::Rel(a) => Ok(HeadAtom::Rel(a.clone())),
        MetricAtom::BoxMinus(d, inner) => Ok(HeadAtom::BoxMinus(*d, boxed(d, inner)?)),
        MetricAtom::BoxPlus(d, inner) => Ok(HeadAtom::BoxPlus(*d, boxed(d, inner)?)),
        other => Err(LangError::Syntax {
            line,
            col,
            message: format!("`{other}` is not a head atom (only top, relational atoms, boxminus and boxplus)"),
        }),
    }
}

/// Head variables, and variables of negated atoms, must occur in a positive
/// body atom outside the left operand of since/until.
pub fn check_safety(rule: &Rule<RelationalAtom>) -> Result<(), LangError> {
    let mut bound = BTreeSet::new();
    for m in &rule.positive {
        m.binding_variables(&mut bound);
    }
    let mut needed = BTreeSet::new();
    if let Some(a) = rule.head.atom() {
        needed.extend(a.variables().map(str::to_owned));
    }
    for m in &rule.negative {
        m.variables(&mut needed);
    }
    match needed.difference(&bound).next() {
        Some(v) => Err(LangError::Safety { variable: v.clone(), rule: rule.to_string() }),
        None => Ok(()),
    }
}

/// Parses and safety-checks a program.
pub fn parse_program(text: &str) -> Result<Program, LangError> { Parser::new(lex(text, 1)?).program() }

/// Parses a dataset. Every fact must be ground.
pub fn parse_dataset(text: &str) -> Result<Dataset, LangError> { parse_dataset_from_line(text, 1) }

pub(crate) fn parse_dataset_from_line(text: &str, first_line: usize) -> Result<Dataset, LangError> {
    Parser::new(lex(text, first_line)?).dataset()
}

/// Parses a single (possibly non-ground) metric atom.
pub fn parse_metric_atom(text: &str) -> Result<MetricAtom<RelationalAtom>, LangError> {
    let mut p = Parser::new(lex(text, 1)?);
    let m = p.metric()?;
    if *p.peek() != Tok::Eof {
        return Err(p.error(format!("unexpected {} after metric atom", p.peek().describe())));
    }
    Ok(m)
}

/// Parses an interval in the textual syntax, including the bare-integer form.
pub fn parse_interval(text: &str) -> Result<Interval, LangError> {
    let mut p = Parser::new(lex(text, 1)?);
    let iv = p.interval()?;
    if *p.peek() != Tok::Eof {
        return Err(p.error(format!("unexpected {} after interval", p.peek().describe())));
    }
    Ok(iv)
}

/// Parses a ground metric atom.
pub fn parse_ground_metric_atom(text: &str) -> Result<MetricAtom<GroundAtom>, LangError> {
    parse_metric_atom(text)?.map_atoms(&mut |a: &RelationalAtom| {
        a.to_ground().ok_or_else(|| LangError::NonGroundFact { line: 1, col: 1, atom: a.to_string() })
    })
}
