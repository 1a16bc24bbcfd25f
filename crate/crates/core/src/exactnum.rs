//! Exact arithmetic over real quadratic surds `(p + q*sqrt(d)) / r`.
//!
//! Every comparison in this module is decided with integer arithmetic only.
//! Crossing-order decisions in the generators depend on that: two crossings
//! that coincide at a lattice point must compare as equal, never as "almost".

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("operands live in different quadratic fields: sqrt({0}) and sqrt({1})")]
    IncompatibleFields(u64, u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("value must be strictly positive, got {0}")]
    NonPositive(String),
    #[error("square root of a negative number")]
    NegativeRadicand,
    #[error("integer overflow: {0} does not fit in 64 bits")]
    Overflow(String),
    #[error("cannot parse surd literal {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

/// A real number `(p + q*sqrt(d)) / r` in canonical form.
///
/// Invariants: `r > 0`, `gcd(p, q, r) = 1`, `d` is square-free and not 1,
/// and `q = 0` exactly when `d = 0`. Because the form is canonical, derived
/// equality is numeric equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Surd {
    p: BigInt,
    q: BigInt,
    r: BigInt,
    d: u64,
}

/// Splits `n` into `(s, f)` with `n = s^2 * f` and `f` square-free.
fn square_free_split(mut n: u64) -> (u64, u64) {
    let mut outside = 1u64;
    let mut inside = 1u64;
    let mut f = 2u64;
    while f.saturating_mul(f) <= n {
        let mut e = 0;
        while n.is_multiple_of(f) {
            n /= f;
            e += 1;
        }
        for _ in 0..e / 2 {
            outside *= f;
        }
        if e % 2 == 1 {
            inside *= f;
        }
        f += if f == 2 { 1 } else { 2 };
    }
    (outside, inside * n)
}

/// Sign of `a + b*sqrt(d)` for square-free `d`.
fn sign_of(a: &BigInt, b: &BigInt, d: u64) -> Ordering {
    let sa = a.sign();
    let sb = if d == 0 { Sign::NoSign } else { b.sign() };
    match (sa, sb) {
        (_, Sign::NoSign) => a.cmp(&BigInt::zero()),
        (Sign::NoSign, _) => b.cmp(&BigInt::zero()),
        (Sign::Plus, Sign::Plus) => Ordering::Greater,
        (Sign::Minus, Sign::Minus) => Ordering::Less,
        // Opposite signs: compare a^2 with b^2 * d.
        (Sign::Plus, Sign::Minus) => (a * a).cmp(&(b * b * BigInt::from(d))),
        (Sign::Minus, Sign::Plus) => (b * b * BigInt::from(d)).cmp(&(a * a)),
    }
}

impl Surd {
    /// Builds `(p + q*sqrt(d)) / r` and normalizes it. `d` may carry square
    /// factors; they are moved into `q`.
    pub fn new(
        p: impl Into<BigInt>,
        q: impl Into<BigInt>,
        r: impl Into<BigInt>,
        d: u64,
    ) -> Result<Self, ArithError> {
        let r = r.into();
        if r.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        let (outside, inside) = square_free_split(d);
        let q = q.into() * BigInt::from(outside);
        Ok(Self::normalized(p.into(), q, r, inside))
    }

    fn normalized(mut p: BigInt, mut q: BigInt, mut r: BigInt, mut d: u64) -> Self {
        debug_assert!(!r.is_zero());
        if d == 1 {
            p += &q;
            q = BigInt::zero();
        }
        if d <= 1 || q.is_zero() {
            q = BigInt::zero();
            d = 0;
        }
        if r.is_negative() {
            p = -p;
            q = -q;
            r = -r;
        }
        let g = p.gcd(&q).gcd(&r);
        if !g.is_one() && !g.is_zero() {
            p /= &g;
            q /= &g;
            r /= &g;
        }
        Surd { p, q, r, d }
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        Surd {
            p: n.into(),
            q: BigInt::zero(),
            r: BigInt::one(),
            d: 0,
        }
    }

    pub fn rational(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self, ArithError> {
        Self::new(num, 0, den, 0)
    }

    pub fn zero() -> Self {
        Self::integer(0)
    }

    pub fn one() -> Self {
        Self::integer(1)
    }

    /// `sqrt(n)` for a non-negative integer `n`.
    pub fn sqrt_of(n: u64) -> Self {
        let (outside, inside) = square_free_split(n);
        if n == 0 {
            return Self::zero();
        }
        Self::normalized(BigInt::zero(), BigInt::from(outside), BigInt::one(), inside)
    }

    /// The golden ratio `(1 + sqrt(5)) / 2`.
    pub fn phi() -> Self {
        Self::normalized(BigInt::one(), BigInt::one(), BigInt::from(2), 5)
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    pub fn r(&self) -> &BigInt {
        &self.r
    }

    /// Square-free radicand, 0 for rationals.
    pub fn radicand(&self) -> u64 {
        self.d
    }

    pub fn is_rational(&self) -> bool {
        self.d == 0
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.is_rational() && self.r.is_one()
    }

    fn common_field(&self, other: &Self) -> Result<u64, ArithError> {
        match (self.d, other.d) {
            (0, d) | (d, 0) => Ok(d),
            (a, b) if a == b => Ok(a),
            (a, b) => Err(ArithError::IncompatibleFields(a, b)),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, ArithError> {
        let d = self.common_field(other)?;
        let p = &self.p * &other.r + &other.p * &self.r;
        let q = &self.q * &other.r + &other.q * &self.r;
        Ok(Self::normalized(p, q, &self.r * &other.r, d))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, ArithError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Surd {
            p: -&self.p,
            q: -&self.q,
            r: self.r.clone(),
            d: self.d,
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, ArithError> {
        let d = self.common_field(other)?;
        let dd = BigInt::from(d);
        let p = &self.p * &other.p + &self.q * &other.q * dd;
        let q = &self.p * &other.q + &self.q * &other.p;
        Ok(Self::normalized(p, q, &self.r * &other.r, d))
    }

    pub fn recip(&self) -> Result<Self, ArithError> {
        if self.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        // r / (p + q√d) = r (p - q√d) / (p² - q²d); the norm is nonzero
        // because √d is irrational whenever q ≠ 0.
        let norm = &self.p * &self.p - &self.q * &self.q * BigInt::from(self.d);
        Ok(Self::normalized(
            &self.r * &self.p,
            -(&self.r * &self.q),
            norm,
            self.d,
        ))
    }

    pub fn div(&self, other: &Self) -> Result<Self, ArithError> {
        self.common_field(other)?;
        self.mul(&other.recip()?)
    }

    pub fn signum(&self) -> Ordering {
        sign_of(&self.p, &self.q, self.d)
    }

    pub fn is_positive(&self) -> bool {
        self.signum() == Ordering::Greater
    }

    /// Exact comparison. Never approximates.
    pub fn try_cmp(&self, other: &Self) -> Result<Ordering, ArithError> {
        Ok(self.sub(other)?.signum())
    }

    /// Compares `k * self` with `m * other` without normalizing.
    ///
    /// This is the hot path of the crossing generators, so it skips the gcd.
    pub fn cmp_multiples(&self, k: u64, other: &Self, m: u64) -> Result<Ordering, ArithError> {
        let d = self.common_field(other)?;
        let (k, m) = (BigInt::from(k), BigInt::from(m));
        let a = &k * &self.p * &other.r - &m * &other.p * &self.r;
        let b = &k * &self.q * &other.r - &m * &other.q * &self.r;
        Ok(sign_of(&a, &b, d))
    }

    /// Greatest integer not exceeding the value.
    pub fn floor(&self) -> BigInt {
        if self.q.is_zero() {
            return self.p.div_floor(&self.r);
        }
        // q√d is irrational, so it lies strictly between m and m + 1 and the
        // floor of (p + q√d)/r equals the floor of (p + m)/r.
        let root = (&self.q * &self.q * BigInt::from(self.d)).sqrt();
        let m = if self.q.is_positive() {
            root
        } else {
            -root - 1
        };
        (&self.p + m).div_floor(&self.r)
    }

    /// Floating-point value; used only for display and angle output.
    pub fn to_f64(&self) -> f64 {
        let p = self.p.to_f64().unwrap_or(f64::NAN);
        let q = self.q.to_f64().unwrap_or(f64::NAN);
        let r = self.r.to_f64().unwrap_or(f64::NAN);
        (p + q * (self.d as f64).sqrt()) / r
    }
}

impl From<i64> for Surd {
    fn from(n: i64) -> Self {
        Surd::integer(n)
    }
}

impl PartialOrd for Surd {
    /// `None` for operands from different quadratic fields.
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.try_cmp(other).ok()
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.d == 0 {
            if self.r.is_one() {
                write!(f, "{}", self.p)
            } else {
                write!(f, "{}/{}", self.p, self.r)
            }
        } else {
            let sign = if self.q.is_negative() { '-' } else { '+' };
            let qa = self.q.abs();
            let root = if qa.is_one() {
                format!("sqrt({})", self.d)
            } else {
                format!("{}*sqrt({})", qa, self.d)
            };
            write!(f, "({}{}{})/{}", self.p, sign, root, self.r)
        }
    }
}

impl Serialize for Surd {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Recursive-descent parser for surd literals.
///
/// Accepts the canonical `(p+q*sqrt(d))/r`, the shorthands `p/r` and `p`, the
/// constant `phi`, and any `+ - * /` combination of those within one field.
struct Parser<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn error(&self, reason: impl Into<String>) -> ArithError {
        ArithError::Parse {
            input: self.src.to_string(),
            reason: reason.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), ArithError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{}' at offset {}", c as char, self.pos)))
        }
    }

    fn expr(&mut self) -> Result<Surd, ArithError> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = acc.add(&self.term()?)?;
            } else if self.eat(b'-') {
                acc = acc.sub(&self.term()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Surd, ArithError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                acc = acc.mul(&self.unary()?)?;
            } else if self.eat(b'/') {
                acc = acc.div(&self.unary()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Surd, ArithError> {
        if self.eat(b'-') {
            Ok(self.unary()?.neg())
        } else if self.eat(b'+') {
            self.unary()
        } else {
            self.atom()
        }
    }

    fn atom(&mut self) -> Result<Surd, ArithError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                self.expect(b')')?;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let n: BigInt = self.src[start..self.pos]
                    .parse()
                    .map_err(|_| self.error("bad integer"))?;
                Ok(Surd::integer(n))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_alphabetic() {
                    self.pos += 1;
                }
                match &self.src[start..self.pos] {
                    "phi" => Ok(Surd::phi()),
                    "sqrt" => {
                        self.expect(b'(')?;
                        let arg = self.expr()?;
                        self.expect(b')')?;
                        sqrt_rational(&arg).map_err(|e| match e {
                            ArithError::Parse { reason, .. } => self.error(reason),
                            other => other,
                        })
                    }
                    other => Err(self.error(format!("unknown name {other:?}"))),
                }
            }
            Some(c) => Err(self.error(format!("unexpected '{}'", c as char))),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

/// `sqrt(a/b) = sqrt(a*b)/b` for a non-negative rational.
fn sqrt_rational(arg: &Surd) -> Result<Surd, ArithError> {
    if !arg.is_rational() {
        return Err(ArithError::Parse {
            input: arg.to_string(),
            reason: "sqrt argument must be rational".into(),
        });
    }
    if arg.p.is_negative() {
        return Err(ArithError::NegativeRadicand);
    }
    let radicand = (&arg.p * &arg.r)
        .to_u64()
        .ok_or_else(|| ArithError::Overflow(arg.to_string()))?;
    Surd::sqrt_of(radicand).div(&Surd::integer(arg.r.clone()))
}

impl FromStr for Surd {
    type Err = ArithError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut parser = Parser {
            src: s,
            bytes: s.as_bytes(),
            pos: 0,
        };
        let v = parser.expr()?;
        if parser.peek().is_some() {
            return Err(parser.error(format!("trailing input at offset {}", parser.pos)));
        }
        Ok(v)
    }
}

/// A prefix of a simple continued fraction `a0 + 1/(a1 + 1/(a2 + ...))`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CfExpansion {
    pub quotients: Vec<u64>,
    /// `true` when the list is the whole expansion of a rational number,
    /// `false` when it is only a prefix of a longer one.
    pub complete: bool,
}

impl CfExpansion {
    pub fn new(quotients: Vec<u64>, complete: bool) -> Self {
        CfExpansion {
            quotients,
            complete,
        }
    }

    pub fn len(&self) -> usize {
        self.quotients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.quotients.is_empty()
    }

    /// Folds a trailing quotient 1 into its predecessor (`[.., a, 1] = [.., a+1]`).
    pub fn canonical(&self) -> CfExpansion {
        let mut q = self.quotients.clone();
        if q.len() > 1 && q.last() == Some(&1) {
            q.pop();
            *q.last_mut().unwrap() += 1;
        }
        CfExpansion::new(q, self.complete)
    }

    /// Value of the finite expansion `[a0; a1, ..., ak]` as an exact rational.
    pub fn value(&self) -> Option<Surd> {
        let (num, den) = self.convergent(self.quotients.len().checked_sub(1)?)?;
        Surd::rational(num, den).ok()
    }

    /// Numerator and denominator of the `k`-th convergent.
    pub fn convergent(&self, k: usize) -> Option<(BigInt, BigInt)> {
        if k >= self.quotients.len() {
            return None;
        }
        let (mut h_prev, mut h) = (BigInt::zero(), BigInt::one());
        let (mut k_prev, mut kk) = (BigInt::one(), BigInt::zero());
        for &a in &self.quotients[..=k] {
            let a = BigInt::from(a);
            let h_next = &a * &h + &h_prev;
            let k_next = &a * &kk + &k_prev;
            h_prev = std::mem::replace(&mut h, h_next);
            k_prev = std::mem::replace(&mut kk, k_next);
        }
        if kk.is_zero() {
            return None;
        }
        Some((h, kk))
    }

    /// Closed interval of all reals whose expansion starts with these
    /// quotients. Degenerates to a point for a complete expansion.
    pub fn cylinder(&self) -> Option<(Surd, Surd)> {
        let lo = self.value()?;
        if self.complete {
            return Some((lo.clone(), lo));
        }
        let mut bumped = self.quotients.clone();
        *bumped.last_mut()? += 1;
        let hi = CfExpansion::new(bumped, true).value()?;
        if lo <= hi {
            Some((lo, hi))
        } else {
            Some((hi, lo))
        }
    }
}

impl fmt::Display for CfExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, a) in self.quotients.iter().enumerate() {
            match i {
                0 => write!(f, "{a}")?,
                1 => write!(f, "; {a}")?,
                _ => write!(f, ", {a}")?,
            }
        }
        if !self.complete {
            write!(f, ", ...")?;
        }
        write!(f, "]")
    }
}

/// First `k` partial quotients of the continued fraction of a positive surd,
/// by iterated floor and reciprocal. Stops early, flagged complete, when the
/// value is rational.
pub fn cf_expand(value: &Surd, k: usize) -> Result<CfExpansion, ArithError> {
    if !value.is_positive() {
        return Err(ArithError::NonPositive(value.to_string()));
    }
    let mut quotients = Vec::with_capacity(k);
    let mut x = value.clone();
    for _ in 0..k {
        let a = x.floor();
        let a64 = a
            .to_u64()
            .ok_or_else(|| ArithError::Overflow(a.to_string()))?;
        quotients.push(a64);
        let frac = x.sub(&Surd::integer(a))?;
        if frac.is_zero() {
            return Ok(CfExpansion::new(quotients, true));
        }
        x = frac.recip()?;
    }
    Ok(CfExpansion::new(quotients, false))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> Surd {
        text.parse().unwrap()
    }

    #[test]
    fn normalization_is_canonical() {
        assert_eq!(
            Surd::new(2, 2, 2, 5).unwrap(),
            Surd::new(1, 1, 1, 5).unwrap()
        );
        assert_eq!(
            Surd::new(0, 1, 1, 12).unwrap(),
            Surd::new(0, 2, 1, 3).unwrap()
        );
        assert_eq!(
            Surd::new(3, 0, -6, 7).unwrap(),
            Surd::rational(-1, 2).unwrap()
        );
        assert_eq!(Surd::new(1, 1, 1, 4).unwrap(), Surd::integer(3));
        assert_eq!(Surd::new(1, 2, 1, 1).unwrap(), Surd::integer(3));
        assert!(Surd::new(1, 1, 0, 5).is_err());
    }

    #[test]
    fn add_examples() {
        let phi = Surd::phi();
        assert_eq!(phi.add(&phi).unwrap(), Surd::new(1, 1, 1, 5).unwrap());
        assert_eq!(phi.add(&Surd::zero()).unwrap(), phi);
        let phi_plus_one = phi.add(&Surd::one()).unwrap();
        assert_eq!(phi_plus_one, Surd::new(3, 1, 2, 5).unwrap());
        // φ² − φ − 1 = 0
        let sq = phi.mul(&phi).unwrap();
        assert!(sq.sub(&phi).unwrap().sub(&Surd::one()).unwrap().is_zero());
        assert_eq!(sq, phi_plus_one);
    }

    #[test]
    fn mul_recip_examples() {
        let phi = Surd::phi();
        assert_eq!(phi.mul(&phi).unwrap(), Surd::new(3, 1, 2, 5).unwrap());
        // 2/(1+√5) = 2(√5−1)/4 = (−1+√5)/2
        assert_eq!(phi.recip().unwrap(), Surd::new(-1, 1, 2, 5).unwrap());
        assert_eq!(phi.mul(&Surd::one()).unwrap(), phi);
        assert_eq!(Surd::zero().recip(), Err(ArithError::DivisionByZero));
    }

    #[test]
    fn incompatible_fields_rejected() {
        let a = Surd::sqrt_of(2);
        let b = Surd::sqrt_of(3);
        assert_eq!(a.add(&b), Err(ArithError::IncompatibleFields(2, 3)));
        assert_eq!(a.mul(&b), Err(ArithError::IncompatibleFields(2, 3)));
        assert_eq!(a.try_cmp(&b), Err(ArithError::IncompatibleFields(2, 3)));
        assert_eq!(a.partial_cmp(&b), None);
        // rationals promote into either field
        assert!(a.add(&Surd::rational(1, 3).unwrap()).is_ok());
    }

    #[test]
    fn cmp_examples() {
        let phi = Surd::phi();
        assert_eq!(phi.try_cmp(&phi).unwrap(), Ordering::Equal);
        assert_eq!(phi.try_cmp(&Surd::integer(2)).unwrap(), Ordering::Less);
        // 13/8 − φ = (13 − 4 − 4√5)/8 = (9 − 4√5)/8; 81 > 80 so it is positive.
        assert_eq!(
            Surd::rational(13, 8).unwrap().try_cmp(&phi).unwrap(),
            Ordering::Greater
        );
        // 21/13 < φ: 42 − 13 − 13√5 → 29² = 841 < 845
        assert_eq!(
            Surd::rational(21, 13).unwrap().try_cmp(&phi).unwrap(),
            Ordering::Less
        );
    }

    #[test]
    fn floor_examples() {
        assert_eq!(Surd::phi().floor(), BigInt::from(1));
        assert_eq!(Surd::rational(7, 3).unwrap().floor(), BigInt::from(2));
        assert_eq!(Surd::new(-1, 1, 2, 5).unwrap().floor(), BigInt::from(0));
        assert_eq!(Surd::rational(-7, 3).unwrap().floor(), BigInt::from(-3));
        assert_eq!(Surd::new(0, -1, 1, 2).unwrap().floor(), BigInt::from(-2));
        assert_eq!(Surd::new(1, -1, 1, 2).unwrap().floor(), BigInt::from(-1));
    }

    #[test]
    fn cf_examples() {
        assert_eq!(
            cf_expand(&Surd::phi(), 5).unwrap(),
            CfExpansion::new(vec![1, 1, 1, 1, 1], false)
        );
        assert_eq!(
            cf_expand(&Surd::rational(7, 3).unwrap(), 5).unwrap(),
            CfExpansion::new(vec![2, 3], true)
        );
        assert_eq!(
            cf_expand(&Surd::integer(2), 3).unwrap(),
            CfExpansion::new(vec![2], true)
        );
        assert_eq!(
            cf_expand(&s("1+sqrt(2)"), 6).unwrap().quotients,
            vec![2, 2, 2, 2, 2, 2]
        );
        assert_eq!(
            cf_expand(&s("sqrt(3)"), 5).unwrap().quotients,
            vec![1, 1, 2, 1, 2]
        );
        assert!(matches!(
            cf_expand(&Surd::zero(), 3),
            Err(ArithError::NonPositive(_))
        ));
        assert!(matches!(
            cf_expand(&Surd::integer(-2), 3),
            Err(ArithError::NonPositive(_))
        ));
        let huge = Surd::integer(BigInt::from(u64::MAX) * 4);
        assert!(matches!(cf_expand(&huge, 1), Err(ArithError::Overflow(_))));
    }

    #[test]
    fn cf_value_and_cylinder() {
        let cf = CfExpansion::new(vec![2, 3], true);
        assert_eq!(cf.value().unwrap(), Surd::rational(7, 3).unwrap());
        let (lo, hi) = CfExpansion::new(vec![1, 1, 1], false).cylinder().unwrap();
        assert_eq!(lo, Surd::rational(3, 2).unwrap());
        assert_eq!(hi, Surd::rational(5, 3).unwrap());
        assert!(lo < Surd::phi() && Surd::phi() < hi);
        assert_eq!(
            CfExpansion::new(vec![1, 1], true).canonical().quotients,
            vec![2]
        );
    }

    #[test]
    fn literal_round_trip() {
        for text in [
            "phi",
            "(1+sqrt(5))/2",
            "7/3",
            "-4",
            "(3-2*sqrt(7))/5",
            "1+sqrt(2)",
        ] {
            let v = s(text);
            assert_eq!(s(&v.to_string()), v, "{text}");
        }
        assert_eq!(s("phi"), Surd::phi());
        assert_eq!(s("(1+sqrt(5))/2").to_string(), "(1+sqrt(5))/2");
        assert_eq!(s("14/6").to_string(), "7/3");
        assert_eq!(s("sqrt(8)"), Surd::new(0, 2, 1, 2).unwrap());
        assert_eq!(s("sqrt(1/2)"), Surd::new(0, 1, 2, 2).unwrap());
        assert!("sqrt(-2)".parse::<Surd>().is_err());
        assert!("1 +".parse::<Surd>().is_err());
        assert!("pi".parse::<Surd>().is_err());
        assert!("sqrt(2)+sqrt(3)".parse::<Surd>().is_err());
    }

    #[test]
    fn cmp_multiples_agrees_with_full_arithmetic() {
        let a = Surd::phi();
        let b = s("(2+sqrt(5))/3");
        for k in 1..30u64 {
            for m in 1..30u64 {
                let lhs = a.mul(&Surd::integer(k)).unwrap();
                let rhs = b.mul(&Surd::integer(m)).unwrap();
                assert_eq!(
                    a.cmp_multiples(k, &b, m).unwrap(),
                    lhs.try_cmp(&rhs).unwrap()
                );
            }
        }
    }
}
