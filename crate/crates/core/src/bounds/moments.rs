//! Anticoncentration from the first four moments.

use crate::error::{Error, Result};

/// `2√3 − 3`, the constant in the four-moment upper bound [`hzz_upper`].
pub const HZZ_CONSTANT: f64 = 0.464_101_615_137_754_4;

/// `√3 − 3/2`, the positive-mass guarantee at fourth moment 2 when the third
/// moment is unknown.
pub const BETA: f64 = 0.232_050_807_568_877_2;

/// Slack allowed when a computed fourth moment falls just below its
/// Cauchy–Schwarz floor.
const MOMENT_SLACK: f64 = 1e-9;

/// Upper bound on `P(Y ≥ 0)` from `E[Y], E[Y²], E[Y⁴]` at threshold `y > 0`:
/// `1 − (4/9)(2√3−3)(−2 m1/y + 3 m2/y² − m4/y⁴)`, clamped to `[0, 1]`.
pub fn hzz_upper(m1: f64, m2: f64, m4: f64, y: f64) -> Result<f64> {
    if !(y > 0.0) {
        return Err(Error::InvalidInput(format!("threshold y must be positive, got {y}")));
    }
    if m2 < 0.0 || m4 < m2 * m2 - MOMENT_SLACK {
        return Err(Error::MomentInconsistent(format!("m2 = {m2}, m4 = {m4}")));
    }
    let bracket = -2.0 * m1 / y + 3.0 * m2 / (y * y) - m4 / y.powi(4);
    Ok((1.0 - 4.0 / 9.0 * HZZ_CONSTANT * bracket).clamp(0.0, 1.0))
}

/// Lower bound on `P(Y < a)` for `Y` with `E[Y] = E[Y³] = 0`, `E[Y²] = 1`:
/// `1 / (2 √m4 (√m4 − a))` for `|a| < √m4`.
pub fn zelen_lower(m4: f64, a: f64) -> Result<f64> {
    if m4 < 1.0 - MOMENT_SLACK {
        return Err(Error::MomentInconsistent(format!("m4 = {m4} < 1 for a standardized variable")));
    }
    let r = m4.max(1.0).sqrt();
    if !(a.abs() < r) {
        return Err(Error::InvalidInput(format!("a = {a} outside (-{r}, {r})")));
    }
    Ok(1.0 / (2.0 * r * (r - a)))
}

/// Lower bound on `P(X > 0)` for a standardized `X` (`E[X] = 0`, `E[X²] = 1`)
/// with third moment `m3` and fourth moment `m4 ≥ 1`.
///
/// The bound [`hzz_upper`] optimised over its threshold (`y² = 2 m4 / 3`) gives
/// `(2√3 − 3)/m4`; when `|m3| ≤ 1e-10` the symmetric bound [`zelen_lower`] `1/(2 m4)` is also
/// available and the larger of the two is returned.
pub fn moment_positivity_lower(m3: f64, m4: f64) -> Result<f64> {
    if !(m4 >= 1.0 - MOMENT_SLACK) {
        return Err(Error::MomentInconsistent(format!("m4 = {m4} < 1 for a standardized variable")));
    }
    let m4 = m4.max(1.0);
    let hzz = HZZ_CONSTANT / m4;
    if m3.abs() <= 1e-10 {
        Ok(hzz.max(1.0 / (2.0 * m4)))
    } else {
        Ok(hzz)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constants() {
        assert!((HZZ_CONSTANT - (2.0 * 3f64.sqrt() - 3.0)).abs() < 1e-16);
        assert!((BETA - (3f64.sqrt() - 1.5)).abs() < 1e-16);
    }

    #[test]
    fn hzz_examples() {
        let y = 2.0 / 3f64.sqrt();
        assert!((hzz_upper(0.0, 1.0, 2.0, y).unwrap() - (1.0 - BETA)).abs() < 1e-12);
        assert!((hzz_upper(0.0, 1.0, 2.0, y).unwrap() - 0.76795).abs() < 1e-5);
        assert!((hzz_upper(0.0, 1.0, 2.0, 1e6).unwrap() - 1.0).abs() < 1e-9);
        let v = hzz_upper(0.0, 1.0, 1.0, (2.0f64 / 3.0).sqrt()).unwrap();
        assert!((v - (1.0 - HZZ_CONSTANT)).abs() < 1e-12);
        assert!((v - 0.5359).abs() < 1e-4);
        assert!(hzz_upper(0.0, 1.0, 2.0, 0.0).is_err());
        assert!(hzz_upper(0.0, 2.0, 1.0, 1.0).is_err());
    }

    #[test]
    fn zelen_examples() {
        assert!((zelen_lower(2.0, 0.0).unwrap() - 0.25).abs() < 1e-15);
        assert!((zelen_lower(1.0, 0.0).unwrap() - 0.5).abs() < 1e-15);
        assert!((zelen_lower(1.5, 0.0).unwrap() - 1.0 / 3.0).abs() < 1e-15);
        assert!(zelen_lower(2.0, 2f64.sqrt()).is_err());
        assert!(zelen_lower(2.0, -1.5).is_err());
    }

    #[test]
    fn positivity_examples() {
        assert!((moment_positivity_lower(0.0, 2.0).unwrap() - 0.25).abs() < 1e-12);
        assert!((moment_positivity_lower(0.3, 2.0).unwrap() - BETA).abs() < 1e-12);
        assert!((moment_positivity_lower(0.0, 1.5).unwrap() - 1.0 / 3.0).abs() < 1e-12);
        assert!(moment_positivity_lower(0.0, 0.5).is_err());
        assert_eq!(moment_positivity_lower(0.0, 1.0 - 1e-12).unwrap(), 0.5);
    }

    #[test]
    fn optimised_hzz_matches_grid_search() {
        // The closed form must dominate every sampled threshold.
        for &m4 in &[1.0, 1.3, 2.0, 3.7] {
            let closed = moment_positivity_lower(1.0, m4).unwrap();
            let best = (1..4000)
                .map(|k| k as f64 * 1e-3)
                .map(|y| 1.0 - hzz_upper(0.0, 1.0, m4, y).unwrap())
                .fold(0.0, f64::max);
            assert!(closed >= best - 1e-12);
            assert!(closed - best < 1e-5);
        }
    }
}
