//! Exact symbolic machinery for braid group representations: Laurent
//! polynomial arithmetic, braid words, the Lawrence-Krammer representation,
//! the BMW-algebra action on the `T_ij` basis with the parameter
//! identification matching the two, and the Bratteli diagram of the
//! BMW/Brauer tower with its dimension counts.
//!
//! Everything is computed over `Z`-Laurent rings; there is no floating
//! point anywhere in the symbolic path.

pub mod bmw;
pub mod braid;
pub mod bratteli;
pub mod lk;
pub mod matrix;
pub mod ring;

pub use bmw::{BmwError, BmwParams, TBasis, Theorem3Report};
pub use braid::{BraidError, BraidWord, Permutation};
pub use bratteli::{BratteliError, BratteliGraph, YoungDiagram};
pub use lk::{LkError, PairIndex};
pub use matrix::{MatrixError, RationalMatrix, RingMatrix};
pub use ring::{LaurentPoly, RationalPoint, RingError, Vars};

use serde::Serialize;

/// Outcome of one verified identity, as emitted by the relation suites.
#[derive(Debug, Clone, Serialize)]
pub struct RelationCheck {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl RelationCheck {
    /// Check `lhs == rhs`, recording the first differing entry on failure.
    pub fn from_matrices(name: String, lhs: &RingMatrix, rhs: &RingMatrix) -> Self {
        match lhs.first_difference(rhs) {
            None => RelationCheck {
                name,
                pass: true,
                detail: None,
            },
            Some((r, c)) => RelationCheck {
                name,
                pass: false,
                detail: Some(format!(
                    "entry ({r},{c}) differs: lhs = {}, rhs = {}",
                    lhs.get(r, c),
                    rhs.get(r, c)
                )),
            },
        }
    }

    /// Check that a matrix vanishes identically.
    pub fn zero_check(name: String, m: &RingMatrix) -> Self {
        if m.is_zero() {
            return RelationCheck {
                name,
                pass: true,
                detail: None,
            };
        }
        let (r, c) = (0..m.dim())
            .flat_map(|r| (0..m.dim()).map(move |c| (r, c)))
            .find(|&(r, c)| !m.get(r, c).is_zero())
            .expect("nonzero matrix has a nonzero entry");
        RelationCheck {
            name,
            pass: false,
            detail: Some(format!("entry ({r},{c}) = {}", m.get(r, c))),
        }
    }
}
