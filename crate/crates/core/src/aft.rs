//! Approximation fixpoint theory over an abstract complete lattice.
//!
//! Nothing in here knows about time or atoms. The engines instantiate
//! [`Approximator`] with the three-valued immediate consequence operator;
//! the unit tests below instantiate it with tiny powerset lattices so the
//! fixpoint machinery can be checked by exhaustion.
//!
//! Fixpoints are found by iterating until two consecutive iterates are equal.
//! All chains are capped by `max_iters`; running out is reported as
//! [`NonTermination`], never as a silently truncated result.

use std::fmt;

use thiserror::Error;

/// Iteration cap used when the caller does not choose one.
pub const DEFAULT_MAX_ITERS: usize = 10_000;

/// A complete lattice, given as an object so the carrier may depend on
/// runtime data (e.g. the set of ground atoms).
pub trait Lattice {
    type Elem: Clone + PartialEq;

    fn bottom(&self) -> Self::Elem;
    fn top(&self) -> Self::Elem;
    fn leq(&self, a: &Self::Elem, b: &Self::Elem) -> bool;
    fn meet(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn join(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn meet_all<'a, I>(&self, items: I) -> Self::Elem
    where
        I: IntoIterator<Item = &'a Self::Elem>,
        Self::Elem: 'a,
    {
        items.into_iter().fold(self.top(), |acc, x| self.meet(&acc, x))
    }

    fn join_all<'a, I>(&self, items: I) -> Self::Elem
    where
        I: IntoIterator<Item = &'a Self::Elem>,
        Self::Elem: 'a,
    {
        items.into_iter().fold(self.bottom(), |acc, x| self.join(&acc, x))
    }
}

/// An element of the approximation space: a lower and an upper bound.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Pair<T> {
    pub lo: T,
    pub hi: T,
}

impl<T> Pair<T> {
    pub fn new(lo: T, hi: T) -> Self { Pair { lo, hi } }
}

impl<T: Clone> Pair<T> {
    pub fn exact(x: T) -> Self { Pair { lo: x.clone(), hi: x } }
}

impl<T: PartialEq> Pair<T> {
    pub fn is_exact(&self) -> bool { self.lo == self.hi }
}

impl<T> Pair<T> {
    /// `lo ≤ hi`
    pub fn is_consistent<L: Lattice<Elem = T>>(&self, lattice: &L) -> bool { lattice.leq(&self.lo, &self.hi) }

    /// Precision order: `self ≤p other` iff `self.lo ≤ other.lo` and `other.hi ≤ self.hi`.
    pub fn precision_leq<L: Lattice<Elem = T>>(&self, other: &Pair<T>, lattice: &L) -> bool {
        lattice.leq(&self.lo, &other.lo) && lattice.leq(&other.hi, &self.hi)
    }
}

/// An operator on consistent pairs, given by its two components.
pub trait Approximator {
    type Lattice: Lattice;

    fn lattice(&self) -> &Self::Lattice;

    /// First component `A¹(lo, hi)`.
    fn lower(&self, lo: &Elem<Self>, hi: &Elem<Self>) -> Elem<Self>;

    /// Second component `A²(lo, hi)`.
    fn upper(&self, lo: &Elem<Self>, hi: &Elem<Self>) -> Elem<Self>;

    fn apply(&self, p: &Pair<Elem<Self>>) -> Pair<Elem<Self>> {
        Pair { lo: self.lower(&p.lo, &p.hi), hi: self.upper(&p.lo, &p.hi) }
    }
}

/// Carrier type of an approximator's lattice.
pub type Elem<A> = <<A as Approximator>::Lattice as Lattice>::Elem;

/// A fixpoint together with the number of operator applications spent.
#[derive(Clone, Debug, PartialEq)]
pub struct Fixpoint<T> {
    pub value: T,
    pub iterations: usize,
}

/// The iteration cap was reached before two consecutive iterates agreed.
///
/// `last` and `next` are the final two iterates; their difference shows
/// which parts of the value were still changing.
#[derive(Clone, Debug, PartialEq, Error)]
#[error("no fixpoint after {iterations} iterations")]
pub struct NonTermination<T: fmt::Debug> {
    pub iterations: usize,
    pub last: T,
    pub next: T,
}

impl<T: fmt::Debug> NonTermination<T> {
    pub fn map<U: fmt::Debug>(self, mut f: impl FnMut(T) -> U) -> NonTermination<U> {
        NonTermination { iterations: self.iterations, last: f(self.last), next: f(self.next) }
    }
}

/// Iterates `f` from `start` until `f(x) = x`.
///
/// When `f` is monotone and `start ≤ f(start)` the result is the least
/// fixpoint above `start`.
pub fn lfp<T, F>(mut f: F, start: T, max_iters: usize) -> Result<Fixpoint<T>, NonTermination<T>>
where
    T: Clone + PartialEq + fmt::Debug,
    F: FnMut(&T) -> T,
{
    let mut current = start;
    for i in 1..=max_iters {
        let next = f(&current);
        if next == current {
            return Ok(Fixpoint { value: current, iterations: i });
        }
        if i == max_iters {
            return Err(NonTermination { iterations: i, last: current, next });
        }
        current = next;
    }
    // max_iters == 0
    let next = f(&current);
    Err(NonTermination { iterations: 0, last: current, next })
}

/// Stable revision `(lfp A¹(·, hi), lfp A²(lo, ·))`, both chains started at bottom.
pub fn stable_revision<A>(
    approx: &A,
    p: &Pair<Elem<A>>,
    max_iters: usize,
) -> Result<Fixpoint<Pair<Elem<A>>>, NonTermination<Elem<A>>>
where
    A: Approximator + ?Sized,
    Elem<A>: fmt::Debug,
{
    let lattice = approx.lattice();
    let lo = lfp(|x| approx.lower(x, &p.hi), lattice.bottom(), max_iters)?;
    let hi = lfp(|y| approx.upper(&p.lo, y), lattice.bottom(), max_iters)?;
    Ok(Fixpoint { value: Pair { lo: lo.value, hi: hi.value }, iterations: lo.iterations + hi.iterations })
}

/// ≤p-least fixpoint of the approximator, iterating from `(bottom, top)`.
pub fn kripke_kleene<A>(approx: &A, max_iters: usize) -> Result<Fixpoint<Pair<Elem<A>>>, NonTermination<Pair<Elem<A>>>>
where
    A: Approximator + ?Sized,
    Elem<A>: fmt::Debug,
{
    let lattice = approx.lattice();
    lfp(|p| approx.apply(p), Pair { lo: lattice.bottom(), hi: lattice.top() }, max_iters)
}

/// Failure of the well-founded iteration: either an inner least fixpoint or
/// the outer revision sequence ran out of iterations.
#[derive(Clone, Debug, PartialEq, Error)]
pub enum WellFoundedError<T: fmt::Debug> {
    #[error("stable revision did not converge: {0}")]
    Revision(NonTermination<T>),
    #[error("revision sequence did not converge: {0}")]
    Outer(NonTermination<Pair<T>>),
}

/// ≤p-least fixpoint of the stable revision operator, iterating from `(bottom, top)`.
///
/// `iterations` counts inner operator applications over all revisions.
pub fn well_founded<A>(approx: &A, max_iters: usize) -> Result<Fixpoint<Pair<Elem<A>>>, WellFoundedError<Elem<A>>>
where
    A: Approximator + ?Sized,
    Elem<A>: fmt::Debug,
{
    let lattice = approx.lattice();
    let mut current = Pair { lo: lattice.bottom(), hi: lattice.top() };
    let mut total = 0;
    for _ in 0..max_iters {
        let next = stable_revision(approx, &current, max_iters).map_err(WellFoundedError::Revision)?;
        total += next.iterations;
        if next.value == current {
            return Ok(Fixpoint { value: current, iterations: total });
        }
        current = next.value;
    }
    let next = stable_revision(approx, &current, max_iters).map_err(WellFoundedError::Revision)?;
    Err(WellFoundedError::Outer(NonTermination { iterations: max_iters, last: current, next: next.value }))
}

/// Decides `stable_revision(p) = p` without computing unbounded least
/// fixpoints: both chains are increasing from bottom, so the first iterate
/// that escapes the target bound already refutes equality.
pub fn is_stable_fixpoint<A>(approx: &A, p: &Pair<Elem<A>>, max_iters: usize) -> Result<bool, NonTermination<Elem<A>>>
where
    A: Approximator + ?Sized,
    Elem<A>: fmt::Debug,
{
    let lattice = approx.lattice();
    Ok(bounded_lfp_equals(|x| approx.lower(x, &p.hi), lattice, &p.lo, max_iters)?
        && bounded_lfp_equals(|y| approx.upper(&p.lo, y), lattice, &p.hi, max_iters)?)
}

/// Least fixpoint of `f` from bottom, aborting early as soon as an iterate is
/// not below `target`. Returns whether the fixpoint equals `target`.
fn bounded_lfp_equals<L, F>(f: F, lattice: &L, target: &L::Elem, max_iters: usize) -> Result<bool, NonTermination<L::Elem>>
where
    L: Lattice,
    L::Elem: fmt::Debug,
    F: FnMut(&L::Elem) -> L::Elem,
{
    Ok(bounded_lfp(f, lattice, target, max_iters)?.is_some_and(|fp| fp.value == *target))
}

/// Least fixpoint of a monotone `f` from bottom, provided it lies below
/// `bound`; `None` as soon as some iterate escapes the bound.
pub fn bounded_lfp<L, F>(
    mut f: F,
    lattice: &L,
    bound: &L::Elem,
    max_iters: usize,
) -> Result<Option<Fixpoint<L::Elem>>, NonTermination<L::Elem>>
where
    L: Lattice,
    L::Elem: fmt::Debug,
    F: FnMut(&L::Elem) -> L::Elem,
{
    let mut current = lattice.bottom();
    for i in 1..=max_iters.max(1) {
        if !lattice.leq(&current, bound) {
            return Ok(None);
        }
        let next = f(&current);
        if next == current {
            return Ok(Some(Fixpoint { value: current, iterations: i }));
        }
        if i >= max_iters {
            return Err(NonTermination { iterations: i, last: current, next });
        }
        current = next;
    }
    unreachable!()
}

/// Lattice of subsets of `{0, …, width-1}` encoded as bit masks.
///
/// Small enough to enumerate; used by tests and by the brute-force engines.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BitLattice {
    pub width: u32,
}

impl Lattice for BitLattice {
    type Elem = u64;

    fn bottom(&self) -> u64 { 0 }

    fn top(&self) -> u64 {
        if self.width >= 64 {
            u64::MAX
        } else {
            (1u64 << self.width) - 1
        }
    }

    fn leq(&self, a: &u64, b: &u64) -> bool { a & !b == 0 }

    fn meet(&self, a: &u64, b: &u64) -> u64 { a & b }

    fn join(&self, a: &u64, b: &u64) -> u64 { a | b }
}
