//! Square-free decomposition over `Z`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::poly::IntPoly;

const MODULUS: u64 = (1 << 61) - 1;

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % MODULUS as u128) as u64
}

fn powmod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a);
        }
        a = mulmod(a, a);
        e >>= 1;
    }
    r
}

fn reduce(p: &IntPoly) -> Vec<u64> {
    let mut v: Vec<u64> = p
        .coeffs()
        .iter()
        .map(|&c| c.rem_euclid(MODULUS as i64) as u64)
        .collect();
    trim_mod(&mut v);
    v
}

fn trim_mod(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn rem_mod(a: &mut Vec<u64>, b: &[u64]) {
    let inv = powmod(*b.last().unwrap(), MODULUS - 2);
    while a.len() >= b.len() {
        let shift = a.len() - b.len();
        let f = mulmod(*a.last().unwrap(), inv);
        for (i, &bc) in b.iter().enumerate() {
            let t = mulmod(f, bc);
            a[shift + i] = (a[shift + i] + MODULUS - t) % MODULUS;
        }
        trim_mod(a);
    }
}

/// True when `gcd(p, p')` is constant modulo a large prime, which implies
/// `p` is square-free over `Q`. A `false` can be spurious and is settled by
/// [`squarefree_decomposition`].
pub fn is_squarefree_mod_prime(p: &IntPoly) -> bool {
    let mut a = reduce(p);
    let mut b = reduce(&p.derivative());
    if a.len() <= 1 {
        return true;
    }
    if b.is_empty() || a.len() != p.coeffs().len() {
        return false;
    }
    while !b.is_empty() {
        rem_mod(&mut a, &b);
        std::mem::swap(&mut a, &mut b);
    }
    a.len() == 1
}

type BigPoly = Vec<BigInt>;

fn trim(v: &mut BigPoly) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn deg(v: &BigPoly) -> usize {
    v.len().saturating_sub(1)
}

fn derivative(v: &BigPoly) -> BigPoly {
    let mut d: BigPoly = v.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect();
    trim(&mut d);
    d
}

fn primitive(v: &BigPoly) -> BigPoly {
    let mut g = BigInt::zero();
    for c in v {
        g = g.gcd(c);
    }
    if g.is_zero() {
        return Vec::new();
    }
    if v.last().unwrap().is_negative() {
        g = -g;
    }
    v.iter().map(|c| c / &g).collect()
}

/// `lc(b)^k · a mod b`, `k = deg a - deg b + 1`.
fn pseudo_rem(a: &BigPoly, b: &BigPoly) -> BigPoly {
    let mut r = a.clone();
    let lb = b.last().unwrap().clone();
    while !r.is_empty() && r.len() >= b.len() {
        let shift = r.len() - b.len();
        let lr = r.last().unwrap().clone();
        for c in r.iter_mut() {
            *c *= &lb;
        }
        for (i, bc) in b.iter().enumerate() {
            r[shift + i] -= &lr * bc;
        }
        trim(&mut r);
    }
    r
}

fn gcd_poly(a: &BigPoly, b: &BigPoly) -> BigPoly {
    let (mut a, mut b) = (primitive(a), primitive(b));
    if deg(&a) < deg(&b) {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let r = primitive(&pseudo_rem(&a, &b));
        a = b;
        b = r;
    }
    a
}

/// Exact quotient `a / b`; `b` must divide `a` over `Z`.
fn exact_div(a: &BigPoly, b: &BigPoly) -> BigPoly {
    let mut r = a.clone();
    let lb = b.last().unwrap();
    if r.len() < b.len() {
        return Vec::new();
    }
    let mut q = vec![BigInt::zero(); r.len() - b.len() + 1];
    while !r.is_empty() && r.len() >= b.len() {
        let shift = r.len() - b.len();
        let (f, rem) = r.last().unwrap().div_rem(lb);
        debug_assert!(rem.is_zero(), "inexact polynomial division");
        for (i, bc) in b.iter().enumerate() {
            r[shift + i] -= &f * bc;
        }
        q[shift] = f;
        trim(&mut r);
    }
    debug_assert!(r.is_empty(), "inexact polynomial division");
    trim(&mut q);
    q
}

fn sub(a: &BigPoly, b: &BigPoly) -> BigPoly {
    let n = a.len().max(b.len());
    let zero = BigInt::zero();
    let mut v: BigPoly = (0..n)
        .map(|i| a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero))
        .collect();
    trim(&mut v);
    v
}

/// A square-free factor with its multiplicity; coefficients ascending.
#[derive(Clone, Debug)]
pub struct SquarefreeFactor {
    pub coeffs: Vec<f64>,
    pub exact: Option<IntPoly>,
    pub multiplicity: u32,
}

fn to_factor(v: &BigPoly, multiplicity: u32) -> SquarefreeFactor {
    let exact = v
        .iter()
        .map(|c| c.to_i64())
        .collect::<Option<Vec<i64>>>()
        .map(IntPoly::new);
    SquarefreeFactor {
        coeffs: v.iter().map(|c| c.to_f64().unwrap_or(f64::NAN)).collect(),
        exact,
        multiplicity,
    }
}

/// Yun's algorithm: `p = Π f_i^i` with each `f_i` square-free and pairwise
/// coprime. Constant factors are dropped.
pub fn squarefree_decomposition(p: &IntPoly) -> Vec<SquarefreeFactor> {
    let f: BigPoly = p.coeffs().iter().map(|&c| BigInt::from(c)).collect();
    let f = primitive(&f);
    if deg(&f) == 0 {
        return Vec::new();
    }
    let df = derivative(&f);
    let a0 = gcd_poly(&f, &df);
    let mut b = exact_div(&f, &a0);
    let mut c = exact_div(&df, &a0);
    let mut d = sub(&c, &derivative(&b));
    let mut out = Vec::new();
    let mut i = 1;
    while deg(&b) > 0 {
        let a = if d.is_empty() { primitive(&b) } else { gcd_poly(&b, &d) };
        if deg(&a) > 0 {
            out.push(to_factor(&a, i));
        }
        b = exact_div(&b, &a);
        c = exact_div(&d, &a);
        d = sub(&c, &derivative(&b));
        i += 1;
    }
    out
}

/// The product of the distinct irreducible factors, or `p` itself when the
/// modular test already shows it is square-free.
pub fn squarefree_part(p: &IntPoly) -> Vec<SquarefreeFactor> {
    if is_squarefree_mod_prime(p) {
        vec![SquarefreeFactor {
            coeffs: p.coeffs().iter().map(|&c| c as f64).collect(),
            exact: Some(p.clone()),
            multiplicity: 1,
        }]
    } else {
        squarefree_decomposition(p)
    }
}
