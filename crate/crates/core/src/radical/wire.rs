use serde::{Deserialize, Serialize};

use super::{RadicalDescriptor, RadicalElement};
use crate::arith::rational::serde_str;
use crate::error::{Error, Result};
use crate::{QRadical, Rational};

/// Structured text form `{"n": 4, "t": "32", "coeffs": ["0","1/2","1/4","0"]}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RadicalWire {
    pub n: u32,
    #[serde(with = "serde_str")]
    pub t: Rational,
    #[serde(with = "serde_str::vec")]
    pub coeffs: Vec<Rational>,
}

impl From<&QRadical> for RadicalWire {
    fn from(x: &QRadical) -> Self {
        RadicalWire { n: x.descriptor().index(), t: x.descriptor().radicand().clone(), coeffs: x.coeffs().to_vec() }
    }
}

impl RadicalWire {
    /// Rebuilds the element; the descriptor carries the normalized flag
    /// whenever `(n, t)` is in fact normalized.
    pub fn to_element(&self) -> Result<QRadical> {
        let desc = match RadicalDescriptor::normalized(self.n, self.t.clone()) {
            Ok(d) => d,
            Err(Error::NotNormalized { .. }) => RadicalDescriptor::new(self.n, self.t.clone())?,
            Err(e) => return Err(e),
        };
        RadicalElement::new(desc, self.coeffs.clone())
    }
}
