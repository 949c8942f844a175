//! Scalar fields the exact algorithms run over.
//!
//! Every routine that multiplies group-algebra coefficients or eliminates
//! matrix rows is generic over [`Field`]. Only exact fields implement it:
//! rank, idempotency constants and subspace bases all hinge on testing
//! values for equality with zero, which floating point cannot answer.

use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, Signed, Zero};

/// An exact field of characteristic zero.
pub trait Field:
    Num + Signed + FromPrimitive + FromStr + Clone + Debug + Display + Send + Sync + 'static
{
    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("integer representable in field")
    }

    fn from_frac(numer: i64, denom: i64) -> Self {
        Self::from_int(numer) / Self::from_int(denom)
    }

    /// Parses "p/q" or a bare integer.
    fn parse_exact(s: &str) -> Option<Self> {
        s.trim().parse().ok()
    }
}

impl<I> Field for Ratio<I>
where
    I: Integer + Signed + FromPrimitive + Clone + Debug + Display + Send + Sync + 'static,
    Ratio<I>: FromStr + FromPrimitive,
{
    fn from_frac(numer: i64, denom: i64) -> Self {
        Ratio::new(
            I::from_i64(numer).expect("numerator fits"),
            I::from_i64(denom).expect("denominator fits"),
        )
    }

    fn parse_exact(s: &str) -> Option<Self> {
        let s = s.trim();
        if s.is_empty() {
            return None;
        }
        match s.split_once('/') {
            Some((p, q)) => {
                let p: Ratio<I> = p.trim().parse().ok()?;
                let q: Ratio<I> = q.trim().parse().ok()?;
                if q.is_zero() {
                    None
                } else {
                    Some(p / q)
                }
            }
            None => s.parse().ok(),
        }
    }
}
