use serde::{Deserialize, Serialize};

use crate::arith::rational::serde_str;
use crate::error::Result;
use crate::solvers::Certificate;
use crate::{QPoly, Rational};

use super::GeneratedInstance;

/// One line of an instance corpus (JSON lines).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CorpusLine {
    /// Canonical expression, e.g. `x^3 + 6x - 2`.
    pub poly: String,
    /// Coefficients lowest degree first, as rational strings.
    #[serde(with = "serde_str::vec")]
    pub coeffs: Vec<Rational>,
    pub certificate: Certificate,
    pub irreducible: bool,
    pub seed: u64,
    pub index: u64,
}

impl CorpusLine {
    pub fn from_instance(inst: &GeneratedInstance, seed: u64, index: u64) -> Self {
        CorpusLine {
            poly: inst.polynomial.to_string(),
            coeffs: inst.polynomial.coeffs().to_vec(),
            certificate: inst.certificate.clone(),
            irreducible: inst.irreducible,
            seed,
            index,
        }
    }

    pub fn polynomial(&self) -> QPoly {
        QPoly::new(self.coeffs.clone())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("corpus line serializes")
    }

    pub fn from_json(line: &str) -> Result<Self> {
        serde_json::from_str(line).map_err(|e| crate::Error::Domain(format!("corpus line: {e}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::InstanceSampler;

    #[test]
    fn round_trip() {
        let mut s = InstanceSampler::new(3);
        let inst = s.next_quartic().unwrap();
        let line = CorpusLine::from_instance(&inst, 3, 0);
        let back = CorpusLine::from_json(&line.to_json()).unwrap();
        assert_eq!(back, line);
        assert_eq!(back.polynomial(), inst.polynomial);
    }
}
