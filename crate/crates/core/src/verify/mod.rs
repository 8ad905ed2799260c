//! Certificate verification, instance generation from hidden certificates,
//! conjugate-root identity checks and numeric cross-checks.

pub mod conjugates;
pub mod corpus;
pub mod generate;
pub mod numeric;

pub use conjugates::{
    check_cubic_discriminant, check_resolvent_identities, conjugate_product, conjugate_roots, CubicIdentityReport,
    ResolventIdentityReport,
};
pub use corpus::CorpusLine;
pub use generate::{
    generate_cubic_instance, generate_quartic_instance, GeneratedInstance, InstanceSampler, SamplerStats,
};
pub use numeric::{numeric_cross_check, numeric_real_roots, DEFAULT_DIGITS};

use crate::error::Result;
use crate::solvers::Certificate;
use crate::QPoly;

/// True iff the certificate's root is an exact root of `f`.
pub fn verify_certificate(f: &QPoly, cert: &Certificate) -> Result<bool> {
    cert.descriptor().require_normalized()?;
    Ok(cert.element().eval_poly(f).is_zero())
}
