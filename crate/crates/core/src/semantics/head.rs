//! What deriving a head atom at a timepoint commits the interpretation to.

use std::collections::BTreeSet;

use crate::lang::{GroundAtom, GroundHeadAtom};
use crate::temporal::{IntervalSet, Time};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HeadError {
    #[error("head interval {0} has an infinite endpoint")]
    InfiniteHeadRange(String),
    #[error("top has no head points")]
    Top,
}

/// The (atom, timepoint) pairs that must hold for `M` to hold at `t`:
/// a box over `δ` distributes over every offset in `δ`.
pub fn head_points(m: &GroundHeadAtom, t: Time) -> Result<BTreeSet<(GroundAtom, Time)>, HeadError> {
    let mut out = BTreeSet::new();
    collect_points(m, t, &mut out)?;
    Ok(out)
}

fn collect_points(m: &GroundHeadAtom, t: Time, out: &mut BTreeSet<(GroundAtom, Time)>) -> Result<(), HeadError> {
    match m {
        GroundHeadAtom::Top => Err(HeadError::Top),
        GroundHeadAtom::Rel(a) => {
            out.insert((a.clone(), t));
            Ok(())
        }
        GroundHeadAtom::BoxMinus(d, inner) | GroundHeadAtom::BoxPlus(d, inner) => {
            let (Some(lo), Some(hi)) = (d.lo().finite(), d.hi().finite()) else {
                return Err(HeadError::InfiniteHeadRange(d.to_string()));
            };
            let past = matches!(m, GroundHeadAtom::BoxMinus(..));
            for off in lo..=hi {
                collect_points(inner, if past { t - off } else { t + off }, out)?;
            }
            Ok(())
        }
    }
}

/// Where the single atom of `M` is forced when `M` is derived at every point
/// of `s`. `None` for top, which forces nothing.
pub fn head_apply(m: &GroundHeadAtom, s: &IntervalSet) -> Option<(GroundAtom, IntervalSet)> {
    match m {
        GroundHeadAtom::Top => None,
        GroundHeadAtom::Rel(a) => Some((a.clone(), s.clone())),
        // M' at every t' with t - t' ∈ δ for some t ∈ s
        GroundHeadAtom::BoxMinus(d, inner) => head_apply(inner, &s.dilate_future(d)),
        GroundHeadAtom::BoxPlus(d, inner) => head_apply(inner, &s.dilate_past(d)),
    }
}
