use crate::error::{Error, Result};

/// The exponent pair `(p, q)` with `1 < p < inf` and `1 <= q <= inf`.
///
/// `q` is stored as an `f64` and may be `f64::INFINITY`; every norm
/// evaluator branches on `q.is_infinite()`. For `q <= p` the `p,q`
/// functional is a genuine norm, otherwise only a quasinorm.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LorentzExponents {
    p: f64,
    q: f64,
}

impl LorentzExponents {
    pub fn new(p: f64, q: f64) -> Result<Self> {
        if !(p.is_finite() && p > 1.0) {
            return Err(Error::InvalidExponent(format!(
                "p must satisfy 1 < p < inf, got {p}"
            )));
        }
        if !(q >= 1.0) {
            return Err(Error::InvalidExponent(format!(
                "q must satisfy 1 <= q <= inf, got {q}"
            )));
        }
        Ok(Self { p, q })
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    pub fn q_is_infinite(&self) -> bool {
        self.q.is_infinite()
    }

    /// Holder conjugate p' = p/(p-1); finite and > 1 since 1 < p < inf.
    pub fn p_conjugate(&self) -> f64 {
        self.p / (self.p - 1.0)
    }

    /// True when the p,q functional is a norm (q <= p) rather than a quasinorm.
    pub fn is_norm_regime(&self) -> bool {
        self.q <= self.p
    }

    /// Exponent used when combining a function norm with a gradient norm:
    /// q in the norm regime, p otherwise.
    pub fn combination_exponent(&self) -> f64 {
        if self.is_norm_regime() {
            self.q
        } else {
            self.p
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepts_valid_pairs() {
        let e = LorentzExponents::new(2.0, 1.0).unwrap();
        assert_eq!(e.p_conjugate(), 2.0);
        assert!(e.is_norm_regime());

        let e = LorentzExponents::new(1.5, f64::INFINITY).unwrap();
        assert!(e.q_is_infinite());
        assert!(!e.is_norm_regime());
        assert_eq!(e.combination_exponent(), 1.5);
        assert_eq!(e.p_conjugate(), 3.0);
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(LorentzExponents::new(1.0, 2.0).is_err());
        assert!(LorentzExponents::new(f64::INFINITY, 2.0).is_err());
        assert!(LorentzExponents::new(2.0, 0.5).is_err());
        assert!(LorentzExponents::new(f64::NAN, 2.0).is_err());
        assert!(LorentzExponents::new(2.0, f64::NAN).is_err());
    }
}
