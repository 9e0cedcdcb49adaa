//! Polynomial Euler product specifications.

use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;

use crate::character::RealCharacter;
use crate::error::ArithError;
use crate::sieve::for_each_prime;

/// Functional-equation data for the single-gamma-factor case
/// Phi(s) = Q^s Gamma(s + mu) F(s), Phi(s) = omega conj(Phi(1 - conj(s))).
#[derive(Clone, Debug, PartialEq)]
pub struct FeData {
    pub q_scale: f64,
    pub omega: Complex64,
    pub mu_shift: f64,
}

impl FeData {
    pub fn validate(&self) -> Result<(), ArithError> {
        if !(self.q_scale > 0.0) {
            return Err(ArithError::DegenerateSpec("fe Q must be positive".into()));
        }
        if (self.omega.norm() - 1.0).abs() > 1e-9 {
            return Err(ArithError::DegenerateSpec("|omega| must be 1".into()));
        }
        if !(0.0..1.0).contains(&self.mu_shift) {
            return Err(ArithError::DegenerateSpec("mu shift must lie in [0,1)".into()));
        }
        Ok(())
    }
}

/// Primitive factor of a spec, used by the L-function evaluator.
#[derive(Clone, Debug)]
pub enum Factor {
    Zeta,
    LFunction(RealCharacter),
}

type RootsFn = Arc<dyn Fn(u64) -> Vec<Complex64> + Send + Sync>;

#[derive(Clone)]
enum Kind {
    Zeta,
    Dirichlet(RealCharacter),
    ZetaQi(RealCharacter),
    Custom(RootsFn),
}

/// One L-function F given by local roots alpha_j(p) with |alpha_j(p)| <= 1.
#[derive(Clone)]
pub struct EulerProductSpec {
    name: String,
    degree: usize,
    kind: Kind,
    fe: Option<FeData>,
    real_coefficients: bool,
}

impl fmt::Debug for EulerProductSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("EulerProductSpec")
            .field("name", &self.name)
            .field("degree", &self.degree)
            .finish()
    }
}

impl EulerProductSpec {
    /// The Riemann zeta function: degree 1, local root 1 at every prime.
    pub fn zeta() -> Self {
        EulerProductSpec {
            name: "zeta".into(),
            degree: 1,
            kind: Kind::Zeta,
            fe: None,
            real_coefficients: true,
        }
    }

    /// Dirichlet L-function of a real non-principal character.
    pub fn dirichlet(chi: RealCharacter) -> Self {
        EulerProductSpec {
            name: format!("L(chi_{})", chi.discriminant()),
            degree: 1,
            kind: Kind::Dirichlet(chi),
            fe: None,
            real_coefficients: true,
        }
    }

    /// Dedekind zeta of Q(i): zeta(s) * L(s, chi_{-4}); the (r, lambda) = (1,1)
    /// exemplar. `q_scale` is the conductor-like scale from configuration.
    pub fn zeta_qi(q_scale: f64) -> Result<Self, ArithError> {
        let chi = RealCharacter::from_discriminant(-4)?;
        let fe = FeData { q_scale, omega: Complex64::new(1.0, 0.0), mu_shift: 0.0 };
        fe.validate()?;
        Ok(EulerProductSpec {
            name: "zeta_Q(i)".into(),
            degree: 2,
            kind: Kind::ZetaQi(chi),
            fe: Some(fe),
            real_coefficients: true,
        })
    }

    /// User-supplied local roots. Validates |alpha_j(p)| <= 1 on sampled
    /// primes and the existence of p0 with prod_j alpha_j(p0) != 0.
    pub fn custom(
        name: impl Into<String>,
        degree: usize,
        roots: RootsFn,
        fe: Option<FeData>,
        real_coefficients: bool,
    ) -> Result<Self, ArithError> {
        if degree == 0 {
            return Err(ArithError::DegenerateSpec("degree must be positive".into()));
        }
        if let Some(fe) = &fe {
            fe.validate()?;
        }
        let spec = EulerProductSpec {
            name: name.into(),
            degree,
            kind: Kind::Custom(roots),
            fe,
            real_coefficients,
        };
        let mut nondegenerate = false;
        let mut bad: Option<String> = None;
        for_each_prime(1000, |p| {
            let r = spec.local_roots(p);
            if r.len() != degree {
                bad = Some(format!("root list at p={p} has length {}", r.len()));
            }
            for a in &r {
                if a.norm() > 1.0 + 1e-12 {
                    bad = Some(format!("|alpha(p={p})| = {} > 1", a.norm()));
                }
            }
            if r.iter().map(|a| a.norm()).product::<f64>() > 1e-12 {
                nondegenerate = true;
            }
        });
        if let Some(msg) = bad {
            return Err(ArithError::DegenerateSpec(msg));
        }
        if !nondegenerate {
            return Err(ArithError::DegenerateSpec(
                "no prime p0 <= 1000 with prod_j alpha_j(p0) != 0".into(),
            ));
        }
        Ok(spec)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Euler degree d.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn fe_data(&self) -> Option<&FeData> {
        self.fe.as_ref()
    }

    pub fn real_coefficients(&self) -> bool {
        self.real_coefficients
    }

    /// Local roots alpha_1(p), ..., alpha_d(p). Ramified primes keep the list
    /// at length d with zero entries.
    pub fn local_roots(&self, p: u64) -> Vec<Complex64> {
        match &self.kind {
            Kind::Zeta => vec![Complex64::new(1.0, 0.0)],
            Kind::Dirichlet(chi) => vec![Complex64::new(chi.value(p) as f64, 0.0)],
            Kind::ZetaQi(chi) => vec![
                Complex64::new(1.0, 0.0),
                Complex64::new(chi.value(p) as f64, 0.0),
            ],
            Kind::Custom(f) => f(p),
        }
    }

    /// Primitive factors for direct evaluation, when known.
    pub fn factors(&self) -> Option<Vec<Factor>> {
        match &self.kind {
            Kind::Zeta => Some(vec![Factor::Zeta]),
            Kind::Dirichlet(chi) => Some(vec![Factor::LFunction(chi.clone())]),
            Kind::ZetaQi(chi) => Some(vec![Factor::Zeta, Factor::LFunction(chi.clone())]),
            Kind::Custom(_) => None,
        }
    }

    /// F_p(1)^{-1} = prod_j (1 - alpha_j(p)/p).
    pub fn local_inv_at_one(&self, p: u64) -> Complex64 {
        let mut acc = Complex64::new(1.0, 0.0);
        for a in self.local_roots(p) {
            acc *= Complex64::new(1.0, 0.0) - a / p as f64;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_construct() {
        let z = EulerProductSpec::zeta();
        assert_eq!(z.degree(), 1);
        let chi = RealCharacter::from_discriminant(5).unwrap();
        let l = EulerProductSpec::dirichlet(chi);
        assert_eq!(l.degree(), 1);
        let qi = EulerProductSpec::zeta_qi(1.0 / std::f64::consts::PI).unwrap();
        assert_eq!(qi.degree(), 2);
        assert!(qi.fe_data().is_some());
    }

    #[test]
    fn all_zero_roots_rejected() {
        let r = EulerProductSpec::custom(
            "degenerate",
            1,
            Arc::new(|_| vec![Complex64::new(0.0, 0.0)]),
            None,
            true,
        );
        assert!(matches!(r, Err(ArithError::DegenerateSpec(_))));
    }

    #[test]
    fn oversized_roots_rejected() {
        let r = EulerProductSpec::custom(
            "big",
            1,
            Arc::new(|_| vec![Complex64::new(1.5, 0.0)]),
            None,
            true,
        );
        assert!(r.is_err());
    }
}
