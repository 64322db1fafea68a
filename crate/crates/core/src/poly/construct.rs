use super::{IntPoly, PolyError};
use crate::symbolic::{
    auxiliary_string, cumulative_signs, is_admissible, AuxFlavor, Sign, Word, WordKind,
};

fn require_admissible(w: &Word) -> Result<(), PolyError> {
    if is_admissible(w) {
        Ok(())
    } else {
        Err(PolyError::Domain(format!("{w} is not admissible")))
    }
}

/// `z^p - Σ s_j d_j z^{p-j} - σ`, where `d_j = 2 w_j` and `σ` is the sign of
/// the whole period.
pub fn parry_polynomial(w: &Word) -> Result<IntPoly, PolyError> {
    if !w.is_periodic() {
        return Err(PolyError::Domain(format!(
            "{w} is preperiodic; use preperiodic_polynomial"
        )));
    }
    require_admissible(w)?;
    Ok(parry_unchecked(&w.to_letters()))
}

/// Parry polynomial of raw letters with no admissibility check.
pub(crate) fn parry_unchecked(letters: &[u8]) -> IntPoly {
    let p = letters.len();
    let mut c = vec![0i64; p + 1];
    c[p] = 1;
    let mut s = 1i64;
    for (j, &l) in letters.iter().enumerate() {
        if l == 1 {
            c[p - 1 - j] -= 2 * s;
            s = -s;
        }
    }
    c[0] -= s;
    IntPoly::new(c)
}

/// `Σ_{j<p} s_{j+1} t^j`: the kneading polynomial with the `1 - t^p`
/// denominator already cleared. Requires an even number of 1s.
pub fn kneading_polynomial(w: &Word) -> Result<IntPoly, PolyError> {
    if !w.is_periodic() {
        return Err(PolyError::Domain(format!("{w} is not periodic")));
    }
    require_admissible(w)?;
    if w.sign() != Sign::Plus {
        return Err(PolyError::Domain(format!(
            "{w} has an odd number of 1s; use parry_polynomial"
        )));
    }
    let signs = cumulative_signs(w);
    Ok(IntPoly::new(
        signs.as_slice()[..w.len()].iter().map(|s| s.as_i64()).collect(),
    ))
}

/// Same polynomial built from block lengths `b_k` of the auxiliary string:
/// `1 + Σ_k (-1)^k (t^{B_{k-1}+1} + … + t^{B_k}) - t^p`, `B_k = b_1 + … + b_k`.
pub fn kneading_polynomial_from_aux(w: &Word) -> Result<IntPoly, PolyError> {
    if !w.is_periodic() || w.sign() != Sign::Plus {
        return Err(PolyError::Domain(format!("{w} needs an even number of 1s")));
    }
    require_admissible(w)?;
    let aux = auxiliary_string(w, AuxFlavor::Blocks).map_err(|e| PolyError::Domain(e.to_string()))?;
    let p = w.len();
    let mut c = vec![0i64; p + 1];
    c[0] = 1;
    let mut start = 1usize;
    let mut sign = 1i64;
    for &b in aux.counts() {
        sign = -sign;
        for j in start..start + b as usize {
            c[j] += sign;
        }
        start += b as usize;
    }
    c[p] -= 1;
    Ok(IntPoly::new(c))
}

/// Polynomial for `pre · per^∞`, from the β-expansion of 1 with a geometric
/// tail: with `k = |pre|`, `p = |per|` and `σ` the period's sign,
///
/// `(z^{k+p} - σz^k) - Σ_{j≤k} s_j d_j (z^{k+p-j} - σz^{k-j}) - Σ_{j>k} s_j d_j z^{k+p-j}`,
///
/// then divided by the largest power of `z` and given a positive leading
/// coefficient.
pub fn preperiodic_polynomial(pre: &Word, per: &Word) -> Result<IntPoly, PolyError> {
    let w = Word::preperiodic(pre, per).map_err(|e| PolyError::Domain(e.to_string()))?;
    require_admissible(&w)?;
    Ok(preperiodic_unchecked(&w))
}

fn preperiodic_unchecked(w: &Word) -> IntPoly {
    let (k, p) = (w.preperiod_len(), w.period_len());
    let sigma = w.period().sign().as_i64();
    let signs = cumulative_signs(w);
    let n = k + p;
    let mut c = vec![0i64; n + 1];
    c[n] += 1;
    c[k] -= sigma;
    for j in 1..=n {
        if w.letter(j - 1) == 0 {
            continue;
        }
        let sd = 2 * signs.as_slice()[j - 1].as_i64();
        c[n - j] -= sd;
        if j <= k {
            c[k - j] += sigma * sd;
        }
    }
    let (q, _) = IntPoly::new(c).strip_z_power();
    if q.leading() < 0 {
        q.neg()
    } else {
        q
    }
}

/// Polynomial of any word without checking admissibility.
pub fn construct_unchecked(w: &Word) -> IntPoly {
    match w.kind() {
        WordKind::Periodic => parry_unchecked(&w.to_letters()),
        WordKind::Preperiodic { .. } => preperiodic_unchecked(w),
    }
}

/// The polynomial whose leading root is the growth rate of `w`.
pub fn polynomial_of(w: &Word) -> Result<IntPoly, PolyError> {
    match w.kind() {
        WordKind::Periodic => parry_polynomial(w),
        WordKind::Preperiodic { .. } => preperiodic_polynomial(&w.preperiod(), &w.period()),
    }
}

/// Multiplicities of `z - 1` and `z + 1` removed by [`remove_trivial_factors`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct TrivialFactors {
    pub minus_one: u32,
    pub plus_one: u32,
}

/// Divides out `z - 1` as often as it divides `p`, and `z + 1` too when
/// `plus_one` is set.
pub fn remove_trivial_factors(
    p: &IntPoly,
    plus_one: bool,
) -> Result<(IntPoly, TrivialFactors), PolyError> {
    let mut q = p.clone();
    let mut t = TrivialFactors::default();
    while q.degree() > 0 && q.eval_i64(1) == Some(0) {
        q = q.div_linear(1)?;
        t.minus_one += 1;
    }
    while plus_one && q.degree() > 0 && q.eval_i64(-1) == Some(0) {
        q = q.div_linear(-1)?;
        t.plus_one += 1;
    }
    Ok((q, t))
}
