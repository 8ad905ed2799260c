//! Root certificates and decision verdicts.

use serde::{Deserialize, Serialize};

use crate::arith::rational::serde_str;
use crate::error::{Error, Result};
use crate::radical::{RadicalDescriptor, RadicalElement};
use crate::{QDescriptor, QRadical, Rational};

/// A root `a + br + cr² + dr³ − shift` of a polynomial, with `r` named by a
/// normalized descriptor. Cubic certificates carry three coefficients,
/// quartic ones four, quadratic ones two.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(into = "CertificateWire", try_from = "CertificateWire")]
pub struct Certificate {
    shift: Rational,
    root: QRadical,
}

impl Certificate {
    /// Fails with [`Error::NotNormalized`] unless the descriptor is normalized.
    pub fn new(shift: Rational, root: QRadical) -> Result<Self> {
        root.descriptor().require_normalized()?;
        Ok(Certificate { shift, root })
    }

    pub fn from_parts(shift: Rational, desc: QDescriptor, coeffs: Vec<Rational>) -> Result<Self> {
        Self::new(shift, RadicalElement::new(desc, coeffs)?)
    }

    pub fn shift(&self) -> &Rational {
        &self.shift
    }

    pub fn descriptor(&self) -> &QDescriptor {
        self.root.descriptor()
    }

    /// The unshifted element `a + br + cr² + …`.
    pub fn radical_part(&self) -> &QRadical {
        &self.root
    }

    /// Coefficient of `r^k`, zero beyond the index.
    pub fn coeff(&self, k: usize) -> Rational {
        self.root.coeffs().get(k).cloned().unwrap_or_else(num_traits::Zero::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        self.root.coeffs()
    }

    /// The root itself: the radical part minus the shift.
    pub fn element(&self) -> QRadical {
        let shift = RadicalElement::scalar(self.root.descriptor(), self.shift.clone());
        &self.root - &shift
    }
}

impl std::fmt::Display for Certificate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let d = self.descriptor();
        write!(f, "{} where r = ({})^(1/{})", self.element(), d.radicand(), d.index())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CertificateWire {
    #[serde(with = "serde_str")]
    pub shift: Rational,
    pub n: u32,
    #[serde(with = "serde_str")]
    pub t: Rational,
    #[serde(with = "serde_str::vec")]
    pub coeffs: Vec<Rational>,
}

impl From<Certificate> for CertificateWire {
    fn from(c: Certificate) -> Self {
        CertificateWire {
            n: c.descriptor().index(),
            t: c.descriptor().radicand().clone(),
            coeffs: c.root.coeffs().to_vec(),
            shift: c.shift,
        }
    }
}

impl TryFrom<CertificateWire> for Certificate {
    type Error = Error;
    fn try_from(w: CertificateWire) -> Result<Self> {
        let desc = RadicalDescriptor::normalized(w.n, w.t)?;
        Certificate::from_parts(w.shift, desc, w.coeffs)
    }
}

/// The decision outcome.
#[derive(Clone, Debug, PartialEq)]
pub enum Outcome {
    /// Smallest rational root.
    RationalRoot(Rational),
    /// A verified root in `ℚ[r]`.
    OneRadical(Certificate),
    NotOneSolvable(String),
    /// Only produced on the biquadratic (`q = 0`) quartic path.
    Unknown(String),
}

impl Outcome {
    pub fn tag(&self) -> &'static str {
        match self {
            Outcome::RationalRoot(_) => "rational_root",
            Outcome::OneRadical(_) => "one_radical",
            Outcome::NotOneSolvable(_) => "not_one_solvable",
            Outcome::Unknown(_) => "unknown",
        }
    }

    pub fn is_solvable(&self) -> bool {
        matches!(self, Outcome::RationalRoot(_) | Outcome::OneRadical(_))
    }
}

/// Resolvent root `α` with its `Γ` and whether `2α > p`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GammaEntry {
    #[serde(with = "serde_str")]
    pub alpha: Rational,
    #[serde(with = "serde_str")]
    pub gamma: Rational,
    pub admissible: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Diagnostics {
    /// `(p/3)³ + (q/2)²` for cubics.
    #[serde(with = "serde_str::option", default, skip_serializing_if = "Option::is_none")]
    pub d_pq: Option<Rational>,
    /// Rational roots of the resolvent cubic, ascending.
    #[serde(with = "serde_str::vec", default, skip_serializing_if = "Vec::is_empty")]
    pub resolvent_roots: Vec<Rational>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub gammas: Vec<GammaEntry>,
    /// The `α` whose `Γ` produced the certificate.
    #[serde(with = "serde_str::option", default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<Rational>,
    /// Discriminant of the quadratic that produced a certificate or verdict.
    #[serde(with = "serde_str::option", default, skip_serializing_if = "Option::is_none")]
    pub quadratic_discriminant: Option<Rational>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Verdict {
    pub outcome: Outcome,
    pub diagnostics: Diagnostics,
}

impl Verdict {
    pub fn new(outcome: Outcome, diagnostics: Diagnostics) -> Self {
        Verdict { outcome, diagnostics }
    }

    pub fn certificate(&self) -> Option<&Certificate> {
        match &self.outcome {
            Outcome::OneRadical(c) => Some(c),
            _ => None,
        }
    }
}
