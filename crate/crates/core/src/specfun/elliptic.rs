//! Complete elliptic integrals through the arithmetic-geometric mean.
//!
//! Functions taking a modulus also accept the complementary modulus
//! explicitly (`*_pair`), so that `k′` near 0 or 1 never passes through
//! `√(1 − k²)`.

use crate::error::{Error, Result};
use crate::real::Real;
use crate::series::{sum_bilateral, SeriesTerm};

/// Arithmetic-geometric mean of two positive numbers.
pub fn agm<T: Real>(a: T, b: T) -> T {
    agm_with_count(a, b).0
}

/// AGM together with the number of iterations used.
pub fn agm_with_count<T: Real>(mut a: T, mut b: T) -> (T, usize) {
    let half = T::lit(0.5);
    let mut n = 0;
    while (a - b).abs() > T::lit(2.0) * T::epsilon() * a && n < 64 {
        let an = half * (a + b);
        b = (a * b).sqrt();
        a = an;
        n += 1;
    }
    (half * (a + b), n)
}

/// `(K, E)` for the modulus pair `(k, k′)`, `k² + k′² = 1`.
pub fn elliptic_ke_pair<T: Real>(k: T, kp: T) -> (T, T) {
    let half = T::lit(0.5);
    let mut a = T::one();
    let mut b = kp;
    // Σ 2^{n−1} c_n² with c_0 = k.
    let mut sum = half * k * k;
    let mut pow = half;
    for _ in 0..64 {
        if (a - b).abs() <= T::lit(2.0) * T::epsilon() * a {
            break;
        }
        let c = half * (a - b);
        let an = half * (a + b);
        b = (a * b).sqrt();
        a = an;
        pow = pow * T::lit(2.0);
        sum += pow * c * c;
    }
    let kk = T::FRAC_PI_2() / (half * (a + b));
    (kk, kk * (T::one() - sum))
}

fn check_modulus<T: Real>(k: T) -> Result<()> {
    if k > T::zero() && k < T::one() {
        Ok(())
    } else {
        Err(Error::domain(format!("elliptic modulus must lie in (0, 1), got {k}")))
    }
}

fn complement<T: Real>(k: T) -> T {
    ((T::one() - k) * (T::one() + k)).sqrt()
}

pub fn elliptic_k<T: Real>(k: T) -> Result<T> {
    check_modulus(k)?;
    Ok(elliptic_ke_pair(k, complement(k)).0)
}

pub fn elliptic_e<T: Real>(k: T) -> Result<T> {
    check_modulus(k)?;
    Ok(elliptic_ke_pair(k, complement(k)).1)
}

/// Complete elliptic data attached to a modulus.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EllipticValues<T> {
    pub k: T,
    pub k_prime: T,
    pub big_k: T,
    pub big_k_prime: T,
    pub e: T,
    pub e_prime: T,
    pub q: T,
    pub alpha_ratio: T,
}

impl<T: Real> EllipticValues<T> {
    pub fn from_modulus(k: T) -> Result<Self> {
        check_modulus(k)?;
        Ok(Self::from_pair(k, complement(k)))
    }

    pub fn from_pair(k: T, k_prime: T) -> Self {
        let (big_k, e) = elliptic_ke_pair(k, k_prime);
        let (big_k_prime, e_prime) = elliptic_ke_pair(k_prime, k);
        let alpha_ratio = big_k_prime / big_k;
        EllipticValues { k, k_prime, big_k, big_k_prime, e, e_prime, q: (-T::PI() * alpha_ratio).exp(), alpha_ratio }
    }

    /// `E·K′ + E′·K − K·K′`, equal to `π/2`.
    pub fn legendre_combination(&self) -> T {
        self.e * self.big_k_prime + self.e_prime * self.big_k - self.big_k * self.big_k_prime
    }
}

/// Modulus pair `(k, k′)` whose period ratio `K′/K` equals `alpha`,
/// i.e. whose nome is `e^{−π·alpha}`.
///
/// Bisects on `t = ln(k/k′)`, on which the ratio is strictly decreasing.
pub fn modulus_from_ratio<T: Real>(alpha: T) -> Result<(T, T)> {
    if !(alpha > T::zero() && alpha.is_finite()) {
        return Err(Error::domain(format!("period ratio must be positive, got {alpha}")));
    }
    let pair = |t: T| {
        let s = (T::one() + (T::lit(2.0) * t).exp()).sqrt();
        (t.exp() / s, T::one() / s)
    };
    let ratio = |t: T| {
        let (k, kp) = pair(t);
        elliptic_ke_pair(kp, k).0 / elliptic_ke_pair(k, kp).0
    };
    let (mut lo, mut hi) = (T::lit(-80.0), T::lit(80.0));
    if ratio(lo) < alpha || ratio(hi) > alpha {
        return Err(Error::NonConvergence { estimate: alpha.as_f64(), tol: 0.0 });
    }
    for _ in 0..400 {
        let mid = T::lit(0.5) * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if ratio(mid) > alpha {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(pair(T::lit(0.5) * (lo + hi)))
}

/// `((π/2)·Σ sech(π·α·n), K(k))` with `k` recovered from the nome `e^{−πα}`.
pub fn series_k_check<T: Real>(alpha: T) -> Result<(T, T)> {
    let (k, kp) = modulus_from_ratio(alpha)?;
    let term = SeriesTerm::new(|n: i64| crate::specfun::sech(T::PI() * alpha * T::lit(n as f64)), T::PI() * alpha);
    let s = sum_bilateral(&term, T::epsilon() * T::lit(4.0))?;
    Ok((T::FRAC_PI_2() * s.value, elliptic_ke_pair(k, kp).0))
}

/// `((π/2K)·Σ cosh(παn/2)/cosh(παn), √(1+k))` with `α = K′/K`; both sides
/// equal `dn(iK′/2, k)`.
pub fn dn_quarter_check<T: Real>(k: T) -> Result<(T, T)> {
    let ev = EllipticValues::from_modulus(k)?;
    let a = ev.alpha_ratio;
    let half = T::lit(0.5);
    let term = SeriesTerm::new(
        move |n: i64| {
            let x = T::PI() * a * T::lit(n.unsigned_abs() as f64);
            crate::specfun::kernels::ratio(true, half, T::one(), T::zero(), x)
        },
        half * T::PI() * a,
    );
    let s = sum_bilateral(&term, T::epsilon() * T::lit(4.0))?;
    Ok((T::FRAC_PI_2() / ev.big_k * s.value, (T::one() + k).sqrt()))
}
