//! Serializable views of polynomials. Coefficients are always `"num/den"`
//! strings in lowest terms, never floats.

use std::collections::BTreeMap;

use bernkit_core::poly::{UniPoly, Var};
use bernkit_core::rational::{parse_rational, to_fraction_string};
use bernkit_core::ParseError;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialDocument {
    pub variable: String,
    /// Ascending degree.
    pub coefficients: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factored: Option<Vec<String>>,
}

impl PolynomialDocument {
    pub fn from_poly(p: &UniPoly) -> Self {
        PolynomialDocument {
            variable: p.var().name().to_string(),
            coefficients: coefficient_strings(p),
            factored: None,
        }
    }

    pub fn with_factors(mut self, factors: Vec<String>) -> Self {
        self.factored = Some(factors);
        self
    }

    pub fn to_poly(&self) -> Result<UniPoly, ParseError> {
        let var = Var::parse(&self.variable)?;
        let coeffs = self
            .coefficients
            .iter()
            .map(|c| parse_rational(c))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(UniPoly::new(var, coeffs))
    }
}

pub fn coefficient_strings(p: &UniPoly) -> Vec<String> {
    p.coeffs().iter().map(to_fraction_string).collect()
}

/// One computed object, as emitted by `compute` and the tables.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObjectDocument {
    pub object: String,
    pub params: BTreeMap<String, i64>,
    #[serde(flatten)]
    pub poly: PolynomialDocument,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub routes: Option<BTreeMap<String, Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub agreement: Option<bool>,
}

impl ObjectDocument {
    pub fn new(object: &str, params: &[(&str, usize)], poly: PolynomialDocument) -> Self {
        ObjectDocument {
            object: object.to_string(),
            params: params.iter().map(|(k, v)| (k.to_string(), *v as i64)).collect(),
            poly,
            routes: None,
            agreement: None,
        }
    }

    /// Attach per-route results; the main coefficients stay those of the
    /// first route.
    pub fn with_routes(mut self, routes: &[(&str, UniPoly)]) -> Self {
        let agree = routes.windows(2).all(|w| w[0].1 == w[1].1);
        self.routes = Some(
            routes
                .iter()
                .map(|(name, p)| (name.to_string(), coefficient_strings(p)))
                .collect(),
        );
        self.agreement = Some(agree);
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use bernkit_core::rational::rat;

    #[test]
    fn strings_are_reduced_fractions() {
        let p = UniPoly::new(Var::Z, vec![rat(0, 1), rat(-2, 6), rat(4, 2)]);
        assert_eq!(coefficient_strings(&p), ["0/1", "-1/3", "2/1"]);
        let doc = PolynomialDocument::from_poly(&p);
        assert_eq!(doc.to_poly().unwrap(), p);
    }

    #[test]
    fn bad_documents_are_rejected() {
        let doc = PolynomialDocument {
            variable: "x".into(),
            coefficients: vec!["1/1".into()],
            factored: None,
        };
        assert!(doc.to_poly().is_err());
        let doc = PolynomialDocument {
            variable: "z".into(),
            coefficients: vec!["1/0".into()],
            factored: None,
        };
        assert!(doc.to_poly().is_err());
    }
}
