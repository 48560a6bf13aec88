//! Exact binomial coefficients with the convention `C(z, s) = 0` for `z < s`.

/// Binomial coefficient as an exact integer; 0 when `k > n`.
///
/// Panics on overflow of `u128`, which is unreachable for the graph sizes
/// this crate targets (n below a few thousand, k below ~30).
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc is C(n, i) here, so the division is exact.
        acc = acc * (n - i) as u128 / (i as u128 + 1);
    }
    acc
}

/// Binomial coefficient evaluated in floating point.
///
/// Safe for arguments where the exact value would overflow `u128`; used in
/// bound formulas that are float-valued anyway.
pub fn binomial_f64(n: u64, k: u64) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    let mut acc = 1.0f64;
    for i in 0..k {
        acc *= (n - i) as f64 / (i + 1) as f64;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factorial(n: u64) -> u128 {
        (1..=n as u128).product()
    }

    #[test]
    fn matches_factorial_formula() {
        for n in 0..=20u64 {
            for k in 0..=n {
                let expect = factorial(n) / (factorial(k) * factorial(n - k));
                assert_eq!(binomial(n, k), expect, "C({n},{k})");
            }
        }
    }

    #[test]
    fn zero_when_k_exceeds_n() {
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(0, 1), 0);
        assert_eq!(binomial_f64(2, 3), 0.0);
    }

    #[test]
    fn float_version_agrees_exactly_at_desk_scale() {
        for n in 0..=40u64 {
            for k in 0..=n {
                assert_eq!(binomial_f64(n, k), binomial(n, k) as f64);
            }
        }
    }
}
