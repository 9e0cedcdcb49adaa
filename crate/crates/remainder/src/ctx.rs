//! Evaluation context: coefficient views and prefix sums for one variant
//! of the decomposition.

use arith_core::{sieve, CoefficientTable, EulerProductSpec, RealCharacter, SieveTables};
use lfunc_eval::{dirichlet_l, EvalConfig};
use num_complex::Complex64;
use numkit::dd::{Dd, DdSum};

use crate::error::RemainderError;

/// Which decomposition the context evaluates.
///
/// `ZetaClassic` is the squared-fractional-part form for the Riemann zeta
/// function (decomposition constant 1/2); `EulerProduct` the general form
/// with the floor term (constant 0); `Character` the saw-tooth twisted form
/// (constant 0, midpoint convention at integers).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    ZetaClassic,
    EulerProduct,
    Character,
}

/// Immutable tables and prefix sums backing the remainder operations.
pub struct RemainderCtx {
    pub(crate) variant: Variant,
    pub(crate) limit: usize,
    /// alpha(n) (mu chi for the character variant); real coefficients only.
    pub(crate) alpha: Vec<f64>,
    /// b(n): the associated or twisted totient.
    pub(crate) phi: Vec<f64>,
    /// prefix sums: P_m = sum_{j<=m} phi(j)
    pub(crate) phi_prefix: Vec<Dd>,
    /// gamma_m = sum_{j<=m} phi(j)/j (the piecewise constant in f)
    pub(crate) phi_over_n_prefix: Vec<Dd>,
    /// L_m = sum_{j<=m} phi(j) ln j
    pub(crate) phi_log_prefix: Vec<Dd>,
    /// S2_m = sum_{n<=m} alpha(n)/n^2
    pub(crate) alpha_n2_prefix: Vec<Dd>,
    /// S1_m = sum_{n<=m} alpha(n)/n (character tail closure)
    pub(crate) alpha_n1_prefix: Vec<Dd>,
    /// the one consistent value of 2C(F) (resp. 1/L(2, chi))
    pub(crate) two_c: f64,
    /// 1/L(1, chi) for the character variant, else 0
    pub(crate) s1: f64,
    /// bound on |C - C_truncated| carried into reports
    pub(crate) c_bound: f64,
    pub(crate) name: String,
}

impl RemainderCtx {
    /// Riemann zeta with the classical squared-fractional-part g.
    pub fn zeta_classic(x_max: f64, prime_limit: u64) -> Result<Self, RemainderError> {
        let spec = EulerProductSpec::zeta();
        let mut ctx = Self::from_spec(&spec, x_max, prime_limit)?;
        ctx.variant = Variant::ZetaClassic;
        Ok(ctx)
    }

    /// General polynomial Euler product variant.
    pub fn euler_product(
        spec: &EulerProductSpec,
        x_max: f64,
        prime_limit: u64,
    ) -> Result<Self, RemainderError> {
        Self::from_spec(spec, x_max, prime_limit)
    }

    fn from_spec(
        spec: &EulerProductSpec,
        x_max: f64,
        prime_limit: u64,
    ) -> Result<Self, RemainderError> {
        if !spec.real_coefficients() {
            return Err(RemainderError::Unsupported(format!(
                "{}: decomposition sums need real coefficients",
                spec.name()
            )));
        }
        let limit = (x_max.ceil() as usize).max(2);
        let tables = sieve(limit)?;
        let ct = CoefficientTable::build(spec, &tables, limit)?;
        let alpha: Vec<f64> = ct.alpha.iter().map(|v| v.re).collect();
        let phi: Vec<f64> = ct.phi_f.iter().map(|v| v.re).collect();
        let cval = arith_core::c_of_f(spec, prime_limit, None)?;
        Ok(Self::assemble(
            Variant::EulerProduct,
            limit,
            alpha,
            phi,
            2.0 * cval.value.re,
            0.0,
            2.0 * cval.bound,
            spec.name().to_string(),
        ))
    }

    /// Twisted character variant with saw-tooth f.
    pub fn character(chi: &RealCharacter, x_max: f64) -> Result<Self, RemainderError> {
        let limit = (x_max.ceil() as usize).max(2);
        let tables = sieve(limit)?;
        let spec = EulerProductSpec::dirichlet(chi.clone());
        let ct = CoefficientTable::build(&spec, &tables, limit)?;
        let alpha: Vec<f64> = ct.alpha.iter().map(|v| v.re).collect();
        let phi: Vec<f64> = ct.phi_f.iter().map(|v| v.re).collect();
        let cfg = EvalConfig::default();
        let l2 = dirichlet_l(Complex64::new(2.0, 0.0), chi, &cfg)?.re;
        let l1 = dirichlet_l(Complex64::new(1.0, 0.0), chi, &cfg)?.re;
        Ok(Self::assemble(
            Variant::Character,
            limit,
            alpha,
            phi,
            1.0 / l2,
            1.0 / l1,
            0.0,
            format!("chi_{}", chi.discriminant()),
        ))
    }

    #[allow(clippy::too_many_arguments)]
    fn assemble(
        variant: Variant,
        limit: usize,
        alpha: Vec<f64>,
        phi: Vec<f64>,
        two_c: f64,
        s1: f64,
        c_bound: f64,
        name: String,
    ) -> Self {
        let n = limit + 1;
        let mut phi_prefix = vec![Dd::ZERO; n];
        let mut phi_over_n_prefix = vec![Dd::ZERO; n];
        let mut phi_log_prefix = vec![Dd::ZERO; n];
        let mut alpha_n2_prefix = vec![Dd::ZERO; n];
        let mut alpha_n1_prefix = vec![Dd::ZERO; n];
        let mut p = DdSum::new();
        let mut pn = DdSum::new();
        let mut pl = DdSum::new();
        let mut a2 = DdSum::new();
        let mut a1 = DdSum::new();
        for j in 1..n {
            let jf = j as f64;
            p.add_f64(phi[j]);
            pn.add(Dd::div_f64(phi[j], jf));
            pl.add(Dd::prod(phi[j], jf.ln()));
            a2.add(Dd::div_f64(alpha[j], jf * jf));
            a1.add(Dd::div_f64(alpha[j], jf));
            phi_prefix[j] = p.total();
            phi_over_n_prefix[j] = pn.total();
            phi_log_prefix[j] = pl.total();
            alpha_n2_prefix[j] = a2.total();
            alpha_n1_prefix[j] = a1.total();
        }
        RemainderCtx {
            variant,
            limit,
            alpha,
            phi,
            phi_prefix,
            phi_over_n_prefix,
            phi_log_prefix,
            alpha_n2_prefix,
            alpha_n1_prefix,
            two_c,
            s1,
            c_bound,
            name,
        }
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn limit(&self) -> usize {
        self.limit
    }

    pub fn two_c(&self) -> f64 {
        self.two_c
    }

    pub fn c_bound(&self) -> f64 {
        self.c_bound
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn alpha_at(&self, n: usize) -> f64 {
        self.alpha[n]
    }

    pub fn phi_at(&self, n: usize) -> f64 {
        self.phi[n]
    }

    pub(crate) fn check_coverage(&self, x: f64) -> Result<(), RemainderError> {
        if x.is_finite() && x >= 0.0 && (x.ceil() as usize) <= self.limit {
            Ok(())
        } else {
            Err(RemainderError::Coverage { x, limit: self.limit })
        }
    }
}
