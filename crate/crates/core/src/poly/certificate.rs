use super::IntPoly;

/// Outcome of [`irreducibility_certificate`]. Reducibility is never claimed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Certificate {
    Certified,
    Unknown,
}

fn all_unit(p: &IntPoly) -> bool {
    p.coeffs().iter().all(|c| c.abs() == 1)
}

/// Irreducibility over `Z` from two Eisenstein-type sufficient conditions:
///
/// * all coefficients `±1`, degree `2^n - 1`, coefficient sum `≡ 2 (mod 4)`;
/// * `p = q(x^{2^m})` with `q` certified, `q(0) = ±1` and `q` having a
///   coefficient of sign opposite to its constant term.
pub fn irreducibility_certificate(p: &IntPoly) -> Certificate {
    if p.is_zero() || p.degree() == 0 {
        return Certificate::Unknown;
    }
    if all_unit(p) {
        let d = p.degree() as u64;
        if (d + 1).is_power_of_two() && p.coefficient_sum().rem_euclid(4) == 2 {
            return Certificate::Certified;
        }
    }
    let nonzero_gcd = p
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .fold(0usize, |g, (i, _)| gcd(g, i));
    if nonzero_gcd >= 2 && nonzero_gcd.is_power_of_two() {
        let q = IntPoly::new(p.coeffs().iter().step_by(nonzero_gcd).copied().collect());
        let c0 = q.coeff(0);
        let q = if c0 < 0 { q.neg() } else { q };
        if all_unit(&q)
            && q.coeffs().iter().any(|&c| c < 0)
            && irreducibility_certificate(&q) == Certificate::Certified
        {
            return Certificate::Certified;
        }
    }
    Certificate::Unknown
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
