//! Weight vectors.
//!
//! A weight vector assigns an integer weight to every part size. The two
//! named rules are the ones that matter most: all-ones weights produce the
//! generalized Fibonacci polynomials (GFP) and identity weights produce the
//! generalized Lucas polynomials (GLP). Explicit vectors are strict: asking
//! past their end is an error rather than a silent zero, so a short `--weights`
//! list fails loudly.

use crate::error::{Error, Result};
use crate::ring::{int, Int};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WeightVector {
    /// ω_j = 1 for every j (the F-weighting).
    AllOnes,
    /// ω_j = j (the G-weighting).
    Identity,
    /// ω_j = c for every j.
    Constant(Int),
    /// Finitely many listed entries, 1-indexed; anything past the end errors.
    Explicit(Vec<Int>),
}

impl WeightVector {
    /// ω_j for `j >= 1`.
    pub fn get(&self, j: usize) -> Result<Int> {
        match self {
            WeightVector::AllOnes => Ok(int(1)),
            WeightVector::Identity => Ok(int(j as i64)),
            WeightVector::Constant(c) => Ok(c.clone()),
            WeightVector::Explicit(v) => v
                .get(j.checked_sub(1).ok_or(Error::WeightIndexOutOfRange(0))?)
                .cloned()
                .ok_or(Error::WeightIndexOutOfRange(j)),
        }
    }

    pub fn label(&self) -> String {
        match self {
            WeightVector::AllOnes => "ones".into(),
            WeightVector::Identity => "identity".into(),
            WeightVector::Constant(c) => format!("constant {c}"),
            WeightVector::Explicit(v) => v
                .iter()
                .map(|w| w.to_string())
                .collect::<Vec<_>>()
                .join(","),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_rules() {
        assert_eq!(WeightVector::AllOnes.get(17).unwrap(), int(1));
        assert_eq!(WeightVector::Identity.get(17).unwrap(), int(17));
        assert_eq!(WeightVector::Constant(int(-3)).get(5).unwrap(), int(-3));
    }

    #[test]
    fn explicit_vectors_are_strict() {
        let w = WeightVector::Explicit(vec![int(1), int(0), int(2)]);
        assert_eq!(w.get(3).unwrap(), int(2));
        assert_eq!(w.get(4), Err(Error::WeightIndexOutOfRange(4)));
        assert_eq!(w.get(0), Err(Error::WeightIndexOutOfRange(0)));
    }
}
