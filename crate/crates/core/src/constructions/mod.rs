//! Explicit totally odd immersions in graph products.
//!
//! Each construction takes immersions of complete graphs in the factors and
//! returns a certificate in the product. They only look at the factor
//! certificates (terminals and routes), so they apply to arbitrary factors.
//! Every public constructor verifies its output before returning it.

mod bounds;
mod cartesian;
mod direct;
mod kts;
mod m_pair;

use crate::certificate::{verify, Certificate, Route};
use crate::error::{invalid, Error, Result};
use crate::graph::{complete_graph, Graph, Vertex};

pub use bounds::toi_lower_bound_product;
pub use cartesian::{cartesian_32, cartesian_33, cartesian_large};
pub use direct::{direct_lift, direct_lift_host};
pub use kts::{
    direct_kts, direct_kts_routes, edge_class, is_translation, ClassSpec, EdgeClass, KtsCase,
    KtsRoute,
};
pub use m_pair::{build_m_pair, MPairCase};

/// A host graph with a certificate that passes every verifier flag.
#[derive(Clone, Debug)]
pub struct FactorImmersion {
    host: Graph,
    cert: Certificate,
}

impl FactorImmersion {
    pub fn new(host: Graph, cert: Certificate) -> Result<Self> {
        let report = verify(&host, &cert)?;
        if !report.all_passed() {
            return Err(invalid(format!(
                "factor certificate for K{} in {} fails: {}",
                cert.clique_size(),
                host,
                report
                    .failed()
                    .iter()
                    .map(|f| f.name())
                    .collect::<Vec<_>>()
                    .join(", ")
            )));
        }
        Ok(FactorImmersion { host, cert })
    }

    /// `K_t` immersed in itself.
    pub fn complete(t: usize) -> Result<Self> {
        FactorImmersion::new(complete_graph(t)?, Certificate::identity(t)?)
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn cert(&self) -> &Certificate {
        &self.cert
    }

    pub fn clique_size(&self) -> usize {
        self.cert.clique_size()
    }

    pub fn terminal(&self, i: usize) -> Vertex {
        self.cert.terminals()[i]
    }

    /// Route between terminals `a` and `b`, starting at terminal `a`.
    pub(crate) fn path(&self, a: usize, b: usize) -> Route {
        self.cert
            .route_from(a, b)
            .expect("verified certificates are complete")
    }
}

/// Fails unless `cert` passes every flag on `host`. Used as the final step of
/// each construction.
pub(crate) fn ensure_verified(host: &Graph, cert: Certificate, what: &str) -> Result<Certificate> {
    let report = verify(host, &cert)?;
    if report.all_passed() {
        Ok(cert)
    } else {
        Err(Error::SelfCheck(format!(
            "{what}: constructed certificate fails {}",
            report
                .violations
                .values()
                .map(|v| v.message.clone())
                .collect::<Vec<_>>()
                .join("; ")
        )))
    }
}
