//! Factorization of rational polynomials for the small degrees that occur in
//! matrix work (degree ≤ 8 in practice).
//!
//! Square-free parts are split by rational-root extraction and then by a
//! bounded Kronecker search for integer factors of degree 2 up to half the
//! degree. When a bound is hit the remaining factor is returned with
//! `possibly_reducible` set instead of being split further.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use super::polynomial::Polynomial;
use super::rational::{denominator_lcm, numerator_gcd, Rational};

/// Largest absolute value whose divisors are enumerated.
const DIVISOR_LIMIT: u64 = 1_000_000_000_000;
/// Maximum number of divisor combinations tried per factor degree.
const COMBINATION_LIMIT: u64 = 20_000;
/// Evaluation points are taken from `-POINT_RANGE..=POINT_RANGE`.
const POINT_RANGE: i64 = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    /// Monic factor.
    pub poly: Polynomial,
    pub multiplicity: u32,
    /// Set when the bounded search could not certify irreducibility.
    pub possibly_reducible: bool,
}

/// Factors `p` into monic factors with multiplicities, sorted by degree and
/// then by negated coefficients (ascending roots for linear factors).
pub fn factor(p: &Polynomial) -> Vec<Factor> {
    let mut out: Vec<Factor> = Vec::new();
    if p.degree().unwrap_or(0) == 0 {
        return out;
    }
    for (part, multiplicity) in square_free_decomposition(p) {
        for (poly, certain) in factor_square_free(&part) {
            out.push(Factor {
                poly,
                multiplicity,
                possibly_reducible: !certain,
            });
        }
    }
    out.sort_by(|a, b| {
        a.poly
            .degree()
            .cmp(&b.poly.degree())
            .then_with(|| negated(&a.poly).cmp(&negated(&b.poly)))
    });
    out
}

fn negated(p: &Polynomial) -> Vec<Rational> {
    p.coeffs().iter().map(|c| -c).collect()
}

/// Yun's algorithm: returns monic square-free parts `a_i` with `p ∝ Π a_i^i`.
pub fn square_free_decomposition(p: &Polynomial) -> Vec<(Polynomial, u32)> {
    let f = p.monic();
    let df = f.derivative();
    let a0 = f.gcd(&df);
    let mut b = f.div_rem(&a0).0;
    let c = df.div_rem(&a0).0;
    let mut d = &c - &b.derivative();
    let mut i = 1;
    let mut parts = Vec::new();
    while b.degree().unwrap_or(0) > 0 {
        let a = b.gcd(&d);
        let b_next = b.div_rem(&a).0;
        let c_next = d.div_rem(&a).0;
        d = &c_next - &b_next.derivative();
        if a.degree().unwrap_or(0) > 0 {
            parts.push((a, i));
        }
        b = b_next;
        i += 1;
    }
    parts
}

/// Splits a square-free polynomial; the flag is `true` when the factor is certainly irreducible.
fn factor_square_free(p: &Polynomial) -> Vec<(Polynomial, bool)> {
    let mut out = Vec::new();
    let mut rest = p.monic();
    let mut roots_complete = true;
    loop {
        match rest.degree() {
            None | Some(0) => return out,
            Some(1) => {
                out.push((rest, true));
                return out;
            }
            _ => {}
        }
        match find_rational_root(&rest) {
            RootSearch::Found(r) => {
                let lin = Polynomial::linear_root(&r);
                rest = rest.div_rem(&lin).0;
                out.push((lin, true));
            }
            RootSearch::None => break,
            RootSearch::Incomplete => {
                roots_complete = false;
                break;
            }
        }
    }
    split_without_roots(rest, roots_complete, &mut out);
    out
}

fn split_without_roots(p: Polynomial, roots_complete: bool, out: &mut Vec<(Polynomial, bool)>) {
    let deg = p.degree().unwrap_or(0);
    if deg == 0 {
        return;
    }
    if deg <= 3 {
        out.push((p, roots_complete || deg == 1));
        return;
    }
    let mut complete = roots_complete;
    for k in 2..=deg / 2 {
        match kronecker_factor(&p, k) {
            KroneckerSearch::Found(g) => {
                let h = p.div_rem(&g).0.monic();
                split_without_roots(g.monic(), roots_complete, out);
                split_without_roots(h, roots_complete, out);
                return;
            }
            KroneckerSearch::None => {}
            KroneckerSearch::Incomplete => complete = false,
        }
    }
    out.push((p, complete));
}

/// Primitive integer coefficients with positive leading coefficient.
fn primitive_integer(p: &Polynomial) -> Vec<BigInt> {
    let lcm = denominator_lcm(p.coeffs());
    let scaled: Vec<Rational> = p
        .coeffs()
        .iter()
        .map(|c| c * Rational::from_integer(lcm.clone()))
        .collect();
    let g = numerator_gcd(&scaled);
    let sign = if p.leading().is_negative() { -1 } else { 1 };
    scaled
        .iter()
        .map(|c| c.numer() / &g * BigInt::from(sign))
        .collect()
}

fn eval_int(coeffs: &[BigInt], x: &BigInt) -> BigInt {
    coeffs
        .iter()
        .rev()
        .fold(BigInt::zero(), |acc, c| acc * x + c)
}

enum RootSearch {
    Found(Rational),
    None,
    Incomplete,
}

fn find_rational_root(p: &Polynomial) -> RootSearch {
    let f = primitive_integer(p);
    if f[0].is_zero() {
        return RootSearch::Found(Rational::zero());
    }
    let (Some(num_divs), Some(den_divs)) = (divisors(&f[0]), divisors(f.last().unwrap())) else {
        return RootSearch::Incomplete;
    };
    let mut candidates: Vec<Rational> = Vec::new();
    for a in &num_divs {
        for b in &den_divs {
            let r = Rational::new(BigInt::from(*a), BigInt::from(*b));
            candidates.push(r.clone());
            candidates.push(-r);
        }
    }
    candidates.sort();
    candidates.dedup();
    for r in candidates {
        if p.eval(&r).is_zero() {
            return RootSearch::Found(r);
        }
    }
    RootSearch::None
}

/// Positive divisors of `|n|`, or `None` when `|n|` exceeds the enumeration limit.
fn divisors(n: &BigInt) -> Option<Vec<u64>> {
    let n = n.abs().to_u64()?;
    if n == 0 || n > DIVISOR_LIMIT {
        return None;
    }
    let mut primes: Vec<(u64, u32)> = Vec::new();
    let mut m = n;
    let mut d = 2u64;
    while d * d <= m {
        if m % d == 0 {
            let mut e = 0;
            while m % d == 0 {
                m /= d;
                e += 1;
            }
            primes.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if m > 1 {
        primes.push((m, 1));
    }
    let mut divs = vec![1u64];
    for (p, e) in primes {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for &d in &divs {
            let mut pk = 1u64;
            for _ in 0..=e {
                next.push(d * pk);
                pk *= p;
            }
        }
        divs = next;
    }
    divs.sort_unstable();
    Some(divs)
}

enum KroneckerSearch {
    Found(Polynomial),
    None,
    Incomplete,
}

/// Looks for an integer factor of degree `k` of the primitive form of `p`.
fn kronecker_factor(p: &Polynomial, k: usize) -> KroneckerSearch {
    let f = primitive_integer(p);
    let lead = f.last().unwrap().clone();
    let mut points: Vec<(i64, BigInt, Vec<u64>)> = Vec::new();
    for step in 0..=2 * POINT_RANGE {
        // 0, 1, -1, 2, -2, ...
        let a = if step % 2 == 1 { (step + 1) / 2 } else { -(step / 2) };
        let v = eval_int(&f, &BigInt::from(a));
        if v.is_zero() {
            return KroneckerSearch::Found(Polynomial::linear_root(&Rational::from_integer(
                BigInt::from(a),
            )));
        }
        if let Some(divs) = divisors(&v) {
            points.push((a, v, divs));
        }
    }
    if points.len() < k + 1 {
        return KroneckerSearch::Incomplete;
    }
    points.sort_by_key(|(a, _, divs)| (divs.len(), a.abs(), *a));
    points.truncate(k + 1);
    let combos: u64 = points
        .iter()
        .enumerate()
        .map(|(i, (_, _, d))| if i == 0 { d.len() as u64 } else { 2 * d.len() as u64 })
        .product();
    if combos > COMBINATION_LIMIT {
        return KroneckerSearch::Incomplete;
    }
    let xs: Vec<Rational> = points
        .iter()
        .map(|(a, _, _)| Rational::from_integer(BigInt::from(*a)))
        .collect();
    let choices: Vec<Vec<BigInt>> = points
        .iter()
        .enumerate()
        .map(|(i, (_, _, divs))| {
            let mut c: Vec<BigInt> = divs.iter().map(|&d| BigInt::from(d)).collect();
            if i > 0 {
                c.extend(divs.iter().map(|&d| -BigInt::from(d)));
            }
            c
        })
        .collect();
    let mut idx = vec![0usize; k + 1];
    loop {
        let ys: Vec<Rational> = idx
            .iter()
            .zip(&choices)
            .map(|(&i, c)| Rational::from_integer(c[i].clone()))
            .collect();
        let g = interpolate(&xs, &ys);
        if g.degree() == Some(k)
            && g.coeffs().iter().all(|c| c.is_integer())
            && lead.is_multiple_of(g.leading().numer())
            && g.divides(p)
        {
            return KroneckerSearch::Found(g);
        }
        // odometer increment
        let mut pos = 0;
        loop {
            if pos == idx.len() {
                return KroneckerSearch::None;
            }
            idx[pos] += 1;
            if idx[pos] < choices[pos].len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

/// Newton-form interpolation through `(xs[i], ys[i])`.
fn interpolate(xs: &[Rational], ys: &[Rational]) -> Polynomial {
    let n = xs.len();
    let mut dd: Vec<Rational> = ys.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - level]);
        }
    }
    let mut poly = Polynomial::constant(dd[n - 1].clone());
    for i in (0..n - 1).rev() {
        poly = &(&poly * &Polynomial::linear_root(&xs[i])) + &Polynomial::constant(dd[i].clone());
    }
    poly
}
