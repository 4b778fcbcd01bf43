//! Exact arithmetic in the cyclotomic field Q(zeta_L).
//!
//! An element is a rational-coefficient polynomial in `zeta_L` reduced
//! modulo the L-th cyclotomic polynomial `Phi_L`. `Phi_L` is irreducible
//! over the rationals, so reduced coefficient vectors are canonical:
//! equality, zero tests and integer detection are plain coefficient
//! comparisons. All transition-matrix entries at times `pi*p/q` on
//! integral graphs live in such a field.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num::bigint::BigInt;
use num::complex::Complex64;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};

/// Cap on the root-of-unity order of a context; polynomial reduction cost
/// grows quadratically with it.
pub const DEFAULT_MAX_CONTEXT: u64 = 20_000;

fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            out.push(i);
            if i != n / i {
                out.push(n / i);
            }
        }
        i += 1;
    }
    out.sort_unstable();
    out
}

/// Quotient of `num / den` for a monic divisor, or `None` on a nonzero
/// remainder. Coefficient vectors are ascending by degree.
fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Option<Vec<BigInt>> {
    debug_assert!(den.last().map(|c| c.is_one()).unwrap_or(false));
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    if rem.len() < den.len() {
        return if rem.iter().all(|c| c.is_zero()) { Some(vec![]) } else { None };
    }
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for k in (dd..rem.len()).rev() {
        let c = std::mem::replace(&mut rem[k], BigInt::zero());
        if c.is_zero() {
            continue;
        }
        for j in 0..dd {
            rem[k - dd + j] -= &c * &den[j];
        }
        quot[k - dd] = c;
    }
    if rem[..dd].iter().all(|c| c.is_zero()) {
        Some(quot)
    } else {
        None
    }
}

fn x_pow_minus_one(n: u64) -> Vec<BigInt> {
    let mut p = vec![BigInt::zero(); n as usize + 1];
    p[0] = -BigInt::one();
    p[n as usize] = BigInt::one();
    p
}

/// Integer coefficients of the L-th cyclotomic polynomial, ascending by
/// degree, via the recursive division
/// `Phi_L(x) = (x^L - 1) / prod_{d|L, d<L} Phi_d(x)`.
pub fn cyclotomic_poly(l: u64) -> Vec<BigInt> {
    assert!(l >= 1, "cyclotomic order must be positive");
    let mut memo: BTreeMap<u64, Vec<BigInt>> = BTreeMap::new();
    memo.insert(1, vec![-BigInt::one(), BigInt::one()]);
    for d in divisors(l) {
        if memo.contains_key(&d) {
            continue;
        }
        let mut poly = x_pow_minus_one(d);
        for e in divisors(d) {
            if e == d {
                continue;
            }
            let phi_e = memo[&e].clone();
            poly = poly_div_exact(&poly, &phi_e)
                .expect("x^d - 1 is divisible by every Phi_e with e | d");
        }
        memo.insert(d, poly);
    }
    memo.remove(&l).unwrap()
}

/// The field Q(zeta_L): the root-of-unity order, `Phi_L` and its degree.
pub struct CycloContext {
    order: u64,
    degree: usize,
    phi: Vec<BigInt>,
    phi_rat: Vec<BigRational>,
}

impl CycloContext {
    pub fn new(order: u64) -> Result<CycloContext> {
        CycloContext::with_max_order(order, DEFAULT_MAX_CONTEXT)
    }

    pub fn with_max_order(order: u64, cap: u64) -> Result<CycloContext> {
        if order == 0 {
            return Err(Error::ZeroModulus);
        }
        if order > cap {
            return Err(Error::ContextTooLarge { order, cap });
        }
        let phi = cyclotomic_poly(order);
        let degree = phi.len() - 1;
        let phi_rat = phi.iter().map(|c| BigRational::from(c.clone())).collect();
        Ok(CycloContext { order, degree, phi, phi_rat })
    }

    /// A process-wide shared context for the given order; contexts are
    /// immutable, so callers with equal orders share one allocation.
    pub fn shared(order: u64) -> Result<Arc<CycloContext>> {
        static CACHE: OnceLock<Mutex<BTreeMap<u64, Arc<CycloContext>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(BTreeMap::new()));
        let mut guard = cache.lock().expect("context cache poisoned");
        if let Some(ctx) = guard.get(&order) {
            return Ok(Arc::clone(ctx));
        }
        let ctx = Arc::new(CycloContext::new(order)?);
        guard.insert(order, Arc::clone(&ctx));
        Ok(ctx)
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// `phi(L)`, the degree of the extension.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn phi_coeffs(&self) -> &[BigInt] {
        &self.phi
    }

    /// Remainder of an integer polynomial modulo `Phi_L`, padded to the
    /// context degree.
    fn reduce_int(&self, mut poly: Vec<BigInt>) -> Vec<BigInt> {
        let d = self.degree;
        for k in (d..poly.len()).rev() {
            let c = std::mem::replace(&mut poly[k], BigInt::zero());
            if c.is_zero() {
                continue;
            }
            for j in 0..d {
                poly[k - d + j] -= &c * &self.phi[j];
            }
        }
        poly.truncate(d);
        poly.resize(d, BigInt::zero());
        poly
    }

    fn reduce_rat(&self, mut poly: Vec<BigRational>) -> Vec<BigRational> {
        let d = self.degree;
        for k in (d..poly.len()).rev() {
            let c = std::mem::replace(&mut poly[k], BigRational::zero());
            if c.is_zero() {
                continue;
            }
            for j in 0..d {
                poly[k - d + j] -= &c * &self.phi_rat[j];
            }
        }
        poly.truncate(d);
        poly.resize(d, BigRational::zero());
        poly
    }
}

impl fmt::Debug for CycloContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloContext(L={}, degree={})", self.order, self.degree)
    }
}

/// An element of Q(zeta_L), reduced modulo `Phi_L`.
#[derive(Clone)]
pub struct CycloNum {
    ctx: Arc<CycloContext>,
    coeffs: Vec<BigRational>,
}

impl CycloNum {
    pub fn zero(ctx: &Arc<CycloContext>) -> CycloNum {
        CycloNum { ctx: Arc::clone(ctx), coeffs: vec![BigRational::zero(); ctx.degree()] }
    }

    pub fn one(ctx: &Arc<CycloContext>) -> CycloNum {
        CycloNum::from_integer(ctx, 1)
    }

    pub fn from_integer(ctx: &Arc<CycloContext>, n: i64) -> CycloNum {
        CycloNum::from_rational(ctx, BigRational::from(BigInt::from(n)))
    }

    pub fn from_rational(ctx: &Arc<CycloContext>, r: BigRational) -> CycloNum {
        // Phi_L always has positive degree, so slot 0 exists.
        let mut coeffs = vec![BigRational::zero(); ctx.degree()];
        coeffs[0] = r;
        CycloNum { ctx: Arc::clone(ctx), coeffs }
    }

    /// The class of `zeta_L^k`; negative exponents wrap around.
    pub fn root_of_unity(ctx: &Arc<CycloContext>, k: i64) -> CycloNum {
        let l = ctx.order() as i64;
        let e = k.rem_euclid(l) as usize;
        let mut poly = vec![BigInt::zero(); e + 1];
        poly[e] = BigInt::one();
        let reduced = ctx.reduce_int(poly);
        let coeffs = reduced.into_iter().map(BigRational::from).collect();
        CycloNum { ctx: Arc::clone(ctx), coeffs }
    }

    /// `(1/denom) * sum_k counts[k] * zeta_L^k`, reduced. The counts slice
    /// is indexed by exponent and may be shorter than `L`.
    pub fn from_root_combination(
        ctx: &Arc<CycloContext>,
        counts: &[i64],
        denom: u64,
    ) -> CycloNum {
        let poly: Vec<BigInt> = counts.iter().map(|&c| BigInt::from(c)).collect();
        let reduced = ctx.reduce_int(poly);
        let den = BigInt::from(denom);
        let coeffs = reduced
            .into_iter()
            .map(|c| BigRational::new(c, den.clone()))
            .collect();
        CycloNum { ctx: Arc::clone(ctx), coeffs }
    }

    pub fn context(&self) -> &Arc<CycloContext> {
        &self.ctx
    }

    pub fn order(&self) -> u64 {
        self.ctx.order()
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    fn ensure_same(&self, other: &CycloNum) -> Result<()> {
        if self.ctx.order() != other.ctx.order() {
            return Err(Error::ContextMismatch {
                left: self.ctx.order(),
                right: other.ctx.order(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &CycloNum) -> Result<CycloNum> {
        self.ensure_same(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(CycloNum { ctx: Arc::clone(&self.ctx), coeffs })
    }

    pub fn sub(&self, other: &CycloNum) -> Result<CycloNum> {
        self.ensure_same(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(CycloNum { ctx: Arc::clone(&self.ctx), coeffs })
    }

    pub fn mul(&self, other: &CycloNum) -> Result<CycloNum> {
        self.ensure_same(other)?;
        let d = self.ctx.degree();
        let mut prod = vec![BigRational::zero(); 2 * d.max(1) - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                prod[i + j] += a * b;
            }
        }
        let coeffs = self.ctx.reduce_rat(prod);
        Ok(CycloNum { ctx: Arc::clone(&self.ctx), coeffs })
    }

    pub fn neg(&self) -> CycloNum {
        let coeffs = self.coeffs.iter().map(|c| -c).collect();
        CycloNum { ctx: Arc::clone(&self.ctx), coeffs }
    }

    pub fn scale(&self, factor: &BigRational) -> CycloNum {
        let coeffs = self.coeffs.iter().map(|c| c * factor).collect();
        CycloNum { ctx: Arc::clone(&self.ctx), coeffs }
    }

    /// Complex conjugation: the ring map `zeta -> zeta^{L-1}`.
    pub fn conj(&self) -> CycloNum {
        let l = self.ctx.order() as usize;
        let mut poly = vec![BigRational::zero(); l];
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                poly[(l - j) % l] += c;
            }
        }
        let coeffs = self.ctx.reduce_rat(poly);
        CycloNum { ctx: Arc::clone(&self.ctx), coeffs }
    }

    /// Re-expresses the element in a larger context whose order is a
    /// multiple of this one's, via `zeta_{L1} = zeta_{L2}^{L2/L1}`.
    pub fn lift(&self, target: &Arc<CycloContext>) -> Result<CycloNum> {
        let l1 = self.ctx.order();
        let l2 = target.order();
        if l2 % l1 != 0 {
            return Err(Error::ContextLift { source: l1, target: l2 });
        }
        if l1 == l2 {
            return Ok(CycloNum { ctx: Arc::clone(target), coeffs: self.coeffs.clone() });
        }
        let k = (l2 / l1) as usize;
        let mut poly = vec![BigRational::zero(); (self.coeffs.len() - 1) * k + 1];
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                poly[j * k] = c.clone();
            }
        }
        let coeffs = target.reduce_rat(poly);
        Ok(CycloNum { ctx: Arc::clone(target), coeffs })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.as_rational().map(|r| r.is_one()).unwrap_or(false)
    }

    /// The value as a rational number, if all non-constant coefficients
    /// vanish.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// The value as a rational integer, if it is one.
    pub fn as_integer(&self) -> Option<BigInt> {
        let r = self.as_rational()?;
        if r.is_integer() {
            Some(r.to_integer())
        } else {
            None
        }
    }

    /// Double-precision embedding at `zeta_L = exp(2*pi*i/L)`.
    pub fn to_complex(&self) -> Complex64 {
        let l = self.ctx.order() as f64;
        let mut acc = Complex64::new(0.0, 0.0);
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let angle = 2.0 * std::f64::consts::PI * (j as f64) / l;
            acc += c.to_f64().expect("rational fits in f64") * Complex64::new(0.0, angle).exp();
        }
        acc
    }

    /// `{"L": L, "coeffs": [[numerator, denominator], ...]}`.
    pub fn to_json(&self) -> Result<Value> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            let n = c.numer().to_i64().ok_or(Error::CoefficientOverflow)?;
            let d = c.denom().to_i64().ok_or(Error::CoefficientOverflow)?;
            coeffs.push(json!([n, d]));
        }
        Ok(json!({"L": self.ctx.order(), "coeffs": coeffs}))
    }
}

impl PartialEq for CycloNum {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.order() == other.ctx.order() && self.coeffs == other.coeffs
    }
}

impl Eq for CycloNum {}

impl fmt::Display for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let t = match j {
                0 => format!("{c}"),
                1 => format!("{c}*z"),
                _ => format!("{c}*z^{j}"),
            };
            terms.push(t);
        }
        if terms.is_empty() {
            terms.push("0".to_string());
        }
        write!(f, "{} (z = zeta_{})", terms.join(" + "), self.ctx.order())
    }
}

impl fmt::Debug for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
