use serde::Serialize;

use crate::scalar::{self, Scalar};

/// One violated identity at one basis tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    /// Stable identity id such as `eq-3.1`.
    pub identity: String,
    /// 1-based basis indices.
    pub indices: Vec<usize>,
    /// Exact difference of the two sides; a vector, a flattened matrix, or
    /// a single scalar depending on the identity.
    pub residual: Vec<Scalar>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub failures: Vec<Failure>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Record `residual` if it is nonzero. `indices` are 0-based here and
    /// stored 1-based.
    pub fn record(&mut self, identity: &str, indices: &[usize], residual: Vec<Scalar>) {
        if !scalar::is_zero_vec(&residual) {
            self.failures.push(Failure {
                identity: identity.to_string(),
                indices: indices.iter().map(|i| i + 1).collect(),
                residual,
            });
        }
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.failures.extend(other.failures);
    }

    pub fn identities(&self) -> Vec<&str> {
        let mut ids: Vec<&str> = self.failures.iter().map(|f| f.identity.as_str()).collect();
        ids.dedup();
        ids
    }

    pub fn first(&self, identity: &str) -> Option<&Failure> {
        self.failures.iter().find(|f| f.identity == identity)
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct FailureJson<'a> {
            identity: &'a str,
            indices: &'a [usize],
            residual: Vec<String>,
        }
        let failures: Vec<FailureJson> = self
            .failures
            .iter()
            .map(|f| FailureJson {
                identity: &f.identity,
                indices: &f.indices,
                residual: f.residual.iter().map(scalar::format).collect(),
            })
            .collect();
        serde_json::json!({ "passed": self.passed(), "failures": failures })
    }
}
