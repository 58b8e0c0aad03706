//! An explicit log Fano certificate: the ample-divisor recipe, the boundary
//! Δ = Σ (1 − a_i/M) X_i, and the decomposition −K_X − Δ = R + (1/M) A.

use crate::bsword::{BSWord, DivisorClass};
use crate::cones::is_ample;
use crate::error::{Error, Result};
use crate::num::{int, Rat};
use crate::root_system::Weight;
use num_traits::{One, Zero};
use serde::Serialize;

/// Positive integers a with A = Σ a_i X_i ample, found by the uni-triangular
/// repair: start from O-coordinates (1, …, 1) and walk k = d down to 1, bumping
/// n_k whenever the X-coordinate a_k is nonpositive (which forces a_k = 1).
pub fn ample_recipe(bsw: &BSWord) -> (Vec<i64>, Vec<i64>) {
    let d = bsw.len();
    let mut n: Vec<Rat> = vec![Rat::one(); d];
    for k in (1..=d).rev() {
        let a = bsw.o_to_x_coords(&n).expect("length matches");
        if a.coeffs[k - 1] <= Rat::zero() {
            let bump = Rat::one() - &a.coeffs[k - 1];
            n[k - 1] = &n[k - 1] + bump;
        }
    }
    let a = bsw.o_to_x_coords(&n).expect("length matches");
    let to_i64 = |r: &Rat| -> i64 {
        i64::try_from(r.numer()).expect("recipe coefficients stay small")
    };
    let a_out: Vec<i64> = a.coeffs.iter().map(to_i64).collect();
    let n_out: Vec<i64> = n.iter().map(to_i64).collect();
    debug_assert!(a_out.iter().all(|&x| x >= 1));
    debug_assert!(n_out.iter().all(|&x| x >= 1));
    (a_out, n_out)
}

#[derive(Debug, Clone, Serialize)]
pub struct LogFanoChecks {
    pub floor_zero: bool,
    pub ample: bool,
    pub decomposition: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct LogFanoCertificate {
    pub a: Vec<i64>,
    pub m: i64,
    pub epsilon: Vec<Rational>,
    pub delta: DivisorClass,
    pub anticanonical: DivisorClass,
    pub log_fano_divisor: DivisorClass,
    pub checks: LogFanoChecks,
}

/// Exact rational rendered as {"num": …, "den": …} in reports.
#[derive(Debug, Clone)]
pub struct Rational(pub Rat);

impl Serialize for Rational {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Rational", 2)?;
        let num: i64 = self
            .0
            .numer()
            .try_into()
            .map_err(|_| serde::ser::Error::custom("numerator exceeds i64"))?;
        let den: i64 = self
            .0
            .denom()
            .try_into()
            .map_err(|_| serde::ser::Error::custom("denominator exceeds i64"))?;
        st.serialize_field("num", &num)?;
        st.serialize_field("den", &den)?;
        st.end()
    }
}

/// The full certificate. Every check must pass; a failed check is an error,
/// never a partial certificate.
pub fn log_fano_certificate(bsw: &BSWord, m: Option<i64>) -> Result<LogFanoCertificate> {
    let d = bsw.len();
    let (a, _) = ample_recipe(bsw);
    let a_max = a.iter().copied().max().unwrap_or(0);
    let m = m.unwrap_or(a_max + 1);
    if m <= a_max {
        return Err(Error::InvalidLogFanoScale(m, a_max));
    }
    let epsilon: Vec<Rat> = a
        .iter()
        .map(|&ai| Rat::one() - Rat::new(int(ai), int(m)))
        .collect();
    let delta = DivisorClass {
        coeffs: epsilon.clone(),
    };
    let anticanonical = bsw.canonical_class();
    let log_fano_divisor = anticanonical.sub(&delta);

    let floor_zero = epsilon
        .iter()
        .all(|e| e > &Rat::zero() && e < &Rat::one());
    let ample = is_ample(bsw, &log_fano_divisor)?;
    // −K − Δ = R + (1/M) A with R the expansion of O_d(−ρ), computed through
    // the line-bundle route rather than the suffix-root route.
    let rho = Weight::rho(bsw.cartan().rank());
    let r = bsw.expand_line_bundle(d, &rho.neg())?;
    let decomposition = (0..d).all(|i| {
        let rhs = &r.coeffs[i] + Rat::new(int(a[i]), int(m));
        log_fano_divisor.coeffs[i] == rhs
    });

    let checks = LogFanoChecks {
        floor_zero,
        ample,
        decomposition,
    };
    if !(floor_zero && ample && decomposition) {
        return Err(Error::Internal(format!(
            "log Fano certificate failed for word {:?}: {checks:?}",
            bsw.word()
        )));
    }
    Ok(LogFanoCertificate {
        a,
        m,
        epsilon: epsilon.into_iter().map(Rational).collect(),
        delta,
        anticanonical,
        log_fano_divisor,
        checks,
    })
}
