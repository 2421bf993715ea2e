//! Text format for interpretations.
//!
//! One `Atom@S` line per atom with a non-empty extension, where `S` is the
//! `;`-joined list of its intervals; lines sorted by atom text. Three-valued
//! dumps hold a `# true` block (the lower bound) followed by an `# undef`
//! block (upper minus lower). Files in this format are also valid datasets.

use super::interp::{Interpretation, ThreeValuedInterpretation};
use crate::aft::Pair;
use crate::lang::parser::parse_dataset_from_line;
use crate::lang::LangError;

pub fn write_interpretation(i: &Interpretation) -> String {
    let mut lines: Vec<String> = i
        .iter()
        .map(|(a, s)| {
            let ivs: Vec<String> = s.intervals().iter().map(ToString::to_string).collect();
            format!("{a}@{}", ivs.join(";"))
        })
        .collect();
    lines.sort();
    lines.into_iter().map(|l| l + "\n").collect()
}

pub fn write_three_valued(j: &ThreeValuedInterpretation) -> String {
    format!("# true\n{}# undef\n{}", write_interpretation(&j.lo), write_interpretation(&j.hi.difference(&j.lo)))
}

/// Reads a dump or a dataset file as an interpretation.
pub fn read_interpretation(text: &str) -> Result<Interpretation, LangError> { read_block(text, 1) }

fn read_block(text: &str, first_line: usize) -> Result<Interpretation, LangError> {
    Ok(Interpretation::from_dataset(&parse_dataset_from_line(text, first_line)?))
}

/// Reads a three-valued dump. Text without block headers is read as an
/// exact pair.
pub fn read_three_valued(text: &str) -> Result<ThreeValuedInterpretation, LangError> {
    let lines: Vec<&str> = text.lines().collect();
    let find = |h: &str| lines.iter().position(|l| l.trim() == h);
    match (find("# true"), find("# undef")) {
        (None, None) => Ok(Pair::exact(read_interpretation(text)?)),
        (Some(t), Some(u)) if t < u => {
            let lead = lines[..t].join("\n");
            if !lead.trim().is_empty() {
                return Err(LangError::Syntax { line: 1, col: 1, message: "content before `# true`".into() });
            }
            let lo = read_block(&lines[t + 1..u].join("\n"), t + 2)?;
            let undef = read_block(&lines[u + 1..].join("\n"), u + 2)?;
            let hi = lo.union(&undef);
            Ok(Pair::new(lo, hi))
        }
        _ => Err(LangError::Syntax { line: 1, col: 1, message: "expected a `# true` block followed by an `# undef` block".into() }),
    }
}
