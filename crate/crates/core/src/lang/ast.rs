//! Abstract syntax of programs and datasets.
//!
//! Syntax trees are generic over the atom type so the same shapes serve both
//! rules as written (with variables) and their ground instances.

use std::collections::BTreeSet;
use std::fmt;

use crate::temporal::Interval;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Var(String),
    Const(String),
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(v) => write!(f, "{v}"),
            Term::Const(c) => write!(f, "{c}"),
        }
    }
}

/// `P(s)` where the arguments may be variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RelationalAtom {
    pub predicate: String,
    pub args: Vec<Term>,
}

/// A relational atom without variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroundAtom {
    pub predicate: String,
    pub args: Vec<String>,
}

impl GroundAtom {
    pub fn new(predicate: impl Into<String>, args: Vec<String>) -> Self {
        GroundAtom { predicate: predicate.into(), args }
    }

    /// A nullary atom.
    pub fn prop(predicate: impl Into<String>) -> Self { GroundAtom::new(predicate, Vec::new()) }
}

fn write_atom<T: fmt::Display>(f: &mut fmt::Formatter<'_>, predicate: &str, args: &[T]) -> fmt::Result {
    write!(f, "{predicate}")?;
    if !args.is_empty() {
        write!(f, "(")?;
        for (i, a) in args.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")?;
    }
    Ok(())
}

impl fmt::Display for RelationalAtom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result { write_atom(f, &self.predicate, &self.args) }
}

impl fmt::Display for GroundAtom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result { write_atom(f, &self.predicate, &self.args) }
}

impl RelationalAtom {
    pub fn variables(&self) -> impl Iterator<Item = &str> {
        self.args.iter().filter_map(|t| match t {
            Term::Var(v) => Some(v.as_str()),
            Term::Const(_) => None,
        })
    }

    pub fn to_ground(&self) -> Option<GroundAtom> {
        let args = self
            .args
            .iter()
            .map(|t| match t {
                Term::Const(c) => Some(c.clone()),
                Term::Var(_) => None,
            })
            .collect::<Option<Vec<_>>>()?;
        Some(GroundAtom { predicate: self.predicate.clone(), args })
    }
}

/// Metric atoms. Every `Interval` here is non-negative.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MetricAtom<A> {
    Top,
    Bottom,
    Rel(A),
    DiamondMinus(Interval, Box<MetricAtom<A>>),
    DiamondPlus(Interval, Box<MetricAtom<A>>),
    BoxMinus(Interval, Box<MetricAtom<A>>),
    BoxPlus(Interval, Box<MetricAtom<A>>),
    Since(Box<MetricAtom<A>>, Interval, Box<MetricAtom<A>>),
    Until(Box<MetricAtom<A>>, Interval, Box<MetricAtom<A>>),
}

impl<A> MetricAtom<A> {
    /// Nesting depth of temporal operators.
    pub fn depth(&self) -> usize {
        match self {
            MetricAtom::Top | MetricAtom::Bottom | MetricAtom::Rel(_) => 0,
            MetricAtom::DiamondMinus(_, m)
            | MetricAtom::DiamondPlus(_, m)
            | MetricAtom::BoxMinus(_, m)
            | MetricAtom::BoxPlus(_, m) => 1 + m.depth(),
            MetricAtom::Since(l, _, r) | MetricAtom::Until(l, _, r) => 1 + l.depth().max(r.depth()),
        }
    }

    /// All relational atoms, left to right.
    pub fn atoms(&self) -> Vec<&A> {
        let mut out = Vec::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms<'a>(&'a self, out: &mut Vec<&'a A>) {
        match self {
            MetricAtom::Top | MetricAtom::Bottom => {}
            MetricAtom::Rel(a) => out.push(a),
            MetricAtom::DiamondMinus(_, m)
            | MetricAtom::DiamondPlus(_, m)
            | MetricAtom::BoxMinus(_, m)
            | MetricAtom::BoxPlus(_, m) => m.collect_atoms(out),
            MetricAtom::Since(l, _, r) | MetricAtom::Until(l, _, r) => {
                l.collect_atoms(out);
                r.collect_atoms(out);
            }
        }
    }

    /// All metric intervals, outermost first.
    pub fn intervals(&self) -> Vec<Interval> {
        let mut out = Vec::new();
        self.collect_intervals(&mut out);
        out
    }

    fn collect_intervals(&self, out: &mut Vec<Interval>) {
        match self {
            MetricAtom::Top | MetricAtom::Bottom | MetricAtom::Rel(_) => {}
            MetricAtom::DiamondMinus(d, m)
            | MetricAtom::DiamondPlus(d, m)
            | MetricAtom::BoxMinus(d, m)
            | MetricAtom::BoxPlus(d, m) => {
                out.push(*d);
                m.collect_intervals(out);
            }
            MetricAtom::Since(l, d, r) | MetricAtom::Until(l, d, r) => {
                out.push(*d);
                l.collect_intervals(out);
                r.collect_intervals(out);
            }
        }
    }

    pub fn map_atoms<B, E>(&self, f: &mut impl FnMut(&A) -> Result<B, E>) -> Result<MetricAtom<B>, E> {
        Ok(match self {
            MetricAtom::Top => MetricAtom::Top,
            MetricAtom::Bottom => MetricAtom::Bottom,
            MetricAtom::Rel(a) => MetricAtom::Rel(f(a)?),
            MetricAtom::DiamondMinus(d, m) => MetricAtom::DiamondMinus(*d, Box::new(m.map_atoms(f)?)),
            MetricAtom::DiamondPlus(d, m) => MetricAtom::DiamondPlus(*d, Box::new(m.map_atoms(f)?)),
            MetricAtom::BoxMinus(d, m) => MetricAtom::BoxMinus(*d, Box::new(m.map_atoms(f)?)),
            MetricAtom::BoxPlus(d, m) => MetricAtom::BoxPlus(*d, Box::new(m.map_atoms(f)?)),
            MetricAtom::Since(l, d, r) => MetricAtom::Since(Box::new(l.map_atoms(f)?), *d, Box::new(r.map_atoms(f)?)),
            MetricAtom::Until(l, d, r) => MetricAtom::Until(Box::new(l.map_atoms(f)?), *d, Box::new(r.map_atoms(f)?)),
        })
    }

    fn is_binary(&self) -> bool { matches!(self, MetricAtom::Since(..) | MetricAtom::Until(..)) }
}

impl MetricAtom<RelationalAtom> {
    /// Variables that make the atom count as a positive occurrence for
    /// safety: everything except left operands of since/until.
    pub fn binding_variables(&self, out: &mut BTreeSet<String>) {
        match self {
            MetricAtom::Top | MetricAtom::Bottom => {}
            MetricAtom::Rel(a) => out.extend(a.variables().map(str::to_owned)),
            MetricAtom::DiamondMinus(_, m)
            | MetricAtom::DiamondPlus(_, m)
            | MetricAtom::BoxMinus(_, m)
            | MetricAtom::BoxPlus(_, m) => m.binding_variables(out),
            MetricAtom::Since(_, _, r) | MetricAtom::Until(_, _, r) => r.binding_variables(out),
        }
    }

    pub fn variables(&self, out: &mut BTreeSet<String>) {
        for a in self.atoms() {
            out.extend(a.variables().map(str::to_owned));
        }
    }
}

fn write_operand<A: fmt::Display>(f: &mut fmt::Formatter<'_>, m: &MetricAtom<A>) -> fmt::Result {
    if m.is_binary() {
        write!(f, "({m})")
    } else {
        write!(f, "{m}")
    }
}

impl<A: fmt::Display> fmt::Display for MetricAtom<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let unary = |f: &mut fmt::Formatter<'_>, kw: &str, d: &Interval, m: &MetricAtom<A>| {
            write!(f, "{kw}{d} ")?;
            write_operand(f, m)
        };
        match self {
            MetricAtom::Top => write!(f, "top"),
            MetricAtom::Bottom => write!(f, "bottom"),
            MetricAtom::Rel(a) => write!(f, "{a}"),
            MetricAtom::DiamondMinus(d, m) => unary(f, "diamondminus", d, m),
            MetricAtom::DiamondPlus(d, m) => unary(f, "diamondplus", d, m),
            MetricAtom::BoxMinus(d, m) => unary(f, "boxminus", d, m),
            MetricAtom::BoxPlus(d, m) => unary(f, "boxplus", d, m),
            MetricAtom::Since(l, d, r) | MetricAtom::Until(l, d, r) => {
                let op = if matches!(self, MetricAtom::Since(..)) { "S" } else { "U" };
                write_operand(f, l)?;
                write!(f, " {op}{d} ")?;
                write_operand(f, r)
            }
        }
    }
}

/// Head atoms: top, relational atoms, and boxes over head atoms.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HeadAtom<A> {
    Top,
    Rel(A),
    BoxMinus(Interval, Box<HeadAtom<A>>),
    BoxPlus(Interval, Box<HeadAtom<A>>),
}

impl<A: Clone> HeadAtom<A> {
    pub fn to_metric(&self) -> MetricAtom<A> {
        match self {
            HeadAtom::Top => MetricAtom::Top,
            HeadAtom::Rel(a) => MetricAtom::Rel(a.clone()),
            HeadAtom::BoxMinus(d, m) => MetricAtom::BoxMinus(*d, Box::new(m.to_metric())),
            HeadAtom::BoxPlus(d, m) => MetricAtom::BoxPlus(*d, Box::new(m.to_metric())),
        }
    }
}

impl<A> HeadAtom<A> {
    /// The relational atom at the bottom of the box chain, `None` for top.
    pub fn atom(&self) -> Option<&A> {
        match self {
            HeadAtom::Top => None,
            HeadAtom::Rel(a) => Some(a),
            HeadAtom::BoxMinus(_, m) | HeadAtom::BoxPlus(_, m) => m.atom(),
        }
    }

    pub fn map_atoms<B, E>(&self, f: &mut impl FnMut(&A) -> Result<B, E>) -> Result<HeadAtom<B>, E> {
        Ok(match self {
            HeadAtom::Top => HeadAtom::Top,
            HeadAtom::Rel(a) => HeadAtom::Rel(f(a)?),
            HeadAtom::BoxMinus(d, m) => HeadAtom::BoxMinus(*d, Box::new(m.map_atoms(f)?)),
            HeadAtom::BoxPlus(d, m) => HeadAtom::BoxPlus(*d, Box::new(m.map_atoms(f)?)),
        })
    }
}

impl<A: fmt::Display> fmt::Display for HeadAtom<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HeadAtom::Top => write!(f, "top"),
            HeadAtom::Rel(a) => write!(f, "{a}"),
            HeadAtom::BoxMinus(d, m) => write!(f, "boxminus{d} {m}"),
            HeadAtom::BoxPlus(d, m) => write!(f, "boxplus{d} {m}"),
        }
    }
}

/// `head :- positive..., not negative...`
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rule<A> {
    pub head: HeadAtom<A>,
    pub positive: Vec<MetricAtom<A>>,
    pub negative: Vec<MetricAtom<A>>,
}

pub type GroundMetricAtom = MetricAtom<GroundAtom>;
pub type GroundHeadAtom = HeadAtom<GroundAtom>;
pub type GroundRule = Rule<GroundAtom>;

impl<A> Rule<A> {
    pub fn body_len(&self) -> usize { self.positive.len() + self.negative.len() }

    /// Every relational atom in head and body.
    pub fn atoms(&self) -> Vec<&A> {
        let mut out: Vec<&A> = self.head.atom().into_iter().collect();
        for m in self.positive.iter().chain(&self.negative) {
            out.extend(m.atoms());
        }
        out
    }
}

impl Rule<RelationalAtom> {
    pub fn variables(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        if let Some(a) = self.head.atom() {
            out.extend(a.variables().map(str::to_owned));
        }
        for m in self.positive.iter().chain(&self.negative) {
            m.variables(&mut out);
        }
        out
    }
}

impl<A: fmt::Display> fmt::Display for Rule<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.head)?;
        if self.body_len() > 0 {
            write!(f, " :- ")?;
            let mut first = true;
            for m in &self.positive {
                if !first {
                    write!(f, ", ")?;
                }
                first = false;
                write!(f, "{m}")?;
            }
            for m in &self.negative {
                if !first {
                    write!(f, ", ")?;
                }
                first = false;
                write!(f, "not ")?;
                write_operand(f, m)?;
            }
        }
        write!(f, ".")
    }
}

/// A finite set of safe rules, kept in first-occurrence order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Program {
    pub rules: Vec<Rule<RelationalAtom>>,
}

impl fmt::Display for Program {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rules {
            writeln!(f, "{r}")?;
        }
        Ok(())
    }
}

/// `P(c)@δ`
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fact {
    pub atom: GroundAtom,
    pub interval: Interval,
}

impl fmt::Display for Fact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result { write!(f, "{}@{}", self.atom, self.interval) }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Dataset {
    pub facts: Vec<Fact>,
}

impl Dataset {
    pub fn new(facts: Vec<Fact>) -> Self {
        let mut d = Dataset { facts: Vec::with_capacity(facts.len()) };
        for fact in facts {
            d.push(fact);
        }
        d
    }

    /// Adds a fact unless it is already present.
    pub fn push(&mut self, fact: Fact) {
        if !self.facts.contains(&fact) {
            self.facts.push(fact);
        }
    }

    pub fn is_empty(&self) -> bool { self.facts.is_empty() }
}

impl fmt::Display for Dataset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for fact in &self.facts {
            writeln!(f, "{fact}")?;
        }
        Ok(())
    }
}
