//! Exact fields behind a small context-style trait.
//!
//! A field value ([`Field`]) carries whatever runtime data its elements need
//! (the modulus for [`PrimeField`]); elements are plain values manipulated
//! through it. Three fields are provided: the rationals, prime fields
//! `GF(p)` and the quadratic field `Q(sqrt 5)`.

use std::fmt::{self, Debug};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default modulus: the Mersenne prime `2^31 - 1`.
pub const DEFAULT_PRIME: u64 = 2_147_483_647;

/// Magnitude bound for random rational samples (uniform integers in `[-B, B]`).
pub const RATIONAL_SAMPLE_BOUND: i64 = 1 << 12;

pub trait Field: Clone + Debug + Send + Sync {
    type Elem: Clone + PartialEq + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, x: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;
    fn spec(&self) -> FieldSpec;
    fn format(&self, a: &Self::Elem) -> String;
    fn parse(&self, text: &str) -> Result<Self::Elem>;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    /// `a^e` for any integer exponent; `None` for `0^e` with `e < 0`.
    fn pow(&self, a: &Self::Elem, e: i64) -> Option<Self::Elem> {
        let base = if e < 0 { self.inv(a)? } else { a.clone() };
        let mut exp = e.unsigned_abs();
        let mut acc = self.one();
        let mut sq = base;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &sq);
            }
            sq = self.mul(&sq, &sq);
            exp >>= 1;
        }
        Some(acc)
    }

    /// A random nonzero element.
    fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem {
        loop {
            let x = self.random(rng);
            if !self.is_zero(&x) {
                return x;
            }
        }
    }
}

/// Field selector as used on the command line and in matrix files.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FieldSpec {
    Rational,
    Prime(u64),
    Sqrt5,
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<FieldSpec> {
        PrimeField::new(p).map(|f| FieldSpec::Prime(f.modulus()))
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => write!(f, "rational"),
            FieldSpec::Prime(p) => write!(f, "GF({p})"),
            FieldSpec::Sqrt5 => write!(f, "Q(sqrt5)"),
        }
    }
}

// ---------------------------------------------------------------- rationals

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

fn parse_rational(text: &str) -> Result<BigRational> {
    let text = text.trim();
    let bad = || Error::Parse(format!("not a rational number: {text:?}"));
    match text.split_once('/') {
        Some((num, den)) => {
            let num: BigInt = num.trim().parse().map_err(|_| bad())?;
            let den: BigInt = den.trim().parse().map_err(|_| bad())?;
            if den.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {text:?}")));
            }
            Ok(BigRational::new(num, den))
        }
        None => Ok(BigRational::from_integer(text.parse().map_err(|_| bad())?)),
    }
}

fn format_rational(x: &BigRational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, x: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(x))
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> BigRational {
        self.from_i64(rng.gen_range(-RATIONAL_SAMPLE_BOUND..=RATIONAL_SAMPLE_BOUND))
    }
    fn spec(&self) -> FieldSpec {
        FieldSpec::Rational
    }
    fn format(&self, a: &BigRational) -> String {
        format_rational(a)
    }
    fn parse(&self, text: &str) -> Result<BigRational> {
        parse_rational(text)
    }
}

// ------------------------------------------------------------- prime fields

/// `GF(p)` with elements stored as canonical residues in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::Domain(format!("{p} is not prime")));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// Reduce an integer into `[0, p)`.
    pub fn reduce(&self, x: &BigInt) -> u64 {
        x.mod_floor(&BigInt::from(self.p)).to_u64().expect("residue fits")
    }

    /// The residue as an integer in `(-p/2, p/2]`; used when lifting samples.
    pub fn lift_symmetric(&self, a: u64) -> i64 {
        if a > self.p / 2 {
            -((self.p - a) as i64)
        } else {
            a as i64
        }
    }
}

impl Default for PrimeField {
    fn default() -> Self {
        PrimeField { p: DEFAULT_PRIME }
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, m);
        }
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin, exact for every `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &w in &WITNESSES {
        if n % w == 0 {
            return n == w;
        }
    }
    let mut d = n - 1;
    let mut twos = 0;
    while d % 2 == 0 {
        d /= 2;
        twos += 1;
    }
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..twos {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn from_i64(&self, x: i64) -> u64 {
        x.rem_euclid(self.p as i64) as u64
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.p as u128) as u64
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            self.p - (b - a)
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        mul_mod(*a, *b, self.p)
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        (*a != 0).then(|| pow_mod(*a, self.p - 2, self.p))
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> u64 {
        rng.gen_range(0..self.p)
    }
    fn spec(&self) -> FieldSpec {
        FieldSpec::Prime(self.p)
    }
    fn format(&self, a: &u64) -> String {
        a.to_string()
    }
    fn parse(&self, text: &str) -> Result<u64> {
        let x: BigInt = text
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("not an integer: {text:?}")))?;
        Ok(self.reduce(&x))
    }
}

// ----------------------------------------------------------------- Q(sqrt 5)

/// `a + b sqrt(5)` with rational `a`, `b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Sqrt5 {
    pub a: BigRational,
    pub b: BigRational,
}

impl Sqrt5 {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        Sqrt5 { a, b }
    }

    pub fn from_ints(a: i64, b: i64) -> Self {
        Sqrt5 {
            a: BigRational::from_integer(a.into()),
            b: BigRational::from_integer(b.into()),
        }
    }

    pub fn conjugate(&self) -> Self {
        Sqrt5 { a: self.a.clone(), b: -&self.b }
    }

    /// `a^2 - 5 b^2`.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - BigRational::from_integer(5.into()) * &self.b * &self.b
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Sqrt5Field;

impl Field for Sqrt5Field {
    type Elem = Sqrt5;

    fn zero(&self) -> Sqrt5 {
        Sqrt5::from_ints(0, 0)
    }
    fn one(&self) -> Sqrt5 {
        Sqrt5::from_ints(1, 0)
    }
    fn from_i64(&self, x: i64) -> Sqrt5 {
        Sqrt5::from_ints(x, 0)
    }
    fn add(&self, x: &Sqrt5, y: &Sqrt5) -> Sqrt5 {
        Sqrt5::new(&x.a + &y.a, &x.b + &y.b)
    }
    fn sub(&self, x: &Sqrt5, y: &Sqrt5) -> Sqrt5 {
        Sqrt5::new(&x.a - &y.a, &x.b - &y.b)
    }
    fn mul(&self, x: &Sqrt5, y: &Sqrt5) -> Sqrt5 {
        let five = BigRational::from_integer(5.into());
        Sqrt5::new(&x.a * &y.a + five * &x.b * &y.b, &x.a * &y.b + &x.b * &y.a)
    }
    fn neg(&self, x: &Sqrt5) -> Sqrt5 {
        Sqrt5::new(-&x.a, -&x.b)
    }
    fn inv(&self, x: &Sqrt5) -> Option<Sqrt5> {
        // sqrt 5 is irrational, so the norm vanishes only at zero
        let norm = x.norm();
        if norm.is_zero() {
            return None;
        }
        let c = x.conjugate();
        Some(Sqrt5::new(c.a / &norm, c.b / norm))
    }
    fn is_zero(&self, x: &Sqrt5) -> bool {
        x.a.is_zero() && x.b.is_zero()
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Sqrt5 {
        Sqrt5::new(Rationals.random(rng), Rationals.random(rng))
    }
    fn spec(&self) -> FieldSpec {
        FieldSpec::Sqrt5
    }
    fn format(&self, x: &Sqrt5) -> String {
        if x.b.is_zero() {
            return format_rational(&x.a);
        }
        let sign = if x.b.is_negative() { '-' } else { '+' };
        format!("{}{sign}{}*s5", format_rational(&x.a), format_rational(&x.b.abs()))
    }
    fn parse(&self, text: &str) -> Result<Sqrt5> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let Some(head) = compact.strip_suffix("s5") else {
            return Ok(Sqrt5::new(parse_rational(&compact)?, BigRational::zero()));
        };
        let head = head.strip_suffix('*').unwrap_or(head);
        // split "a+b" / "a-b" at the last sign that is not a leading sign
        let split = head
            .char_indices()
            .filter(|&(i, c)| i > 0 && (c == '+' || c == '-'))
            .map(|(i, _)| i)
            .next_back();
        let (a_text, b_text) = match split {
            Some(i) => (&head[..i], &head[i..]),
            None => ("0", head),
        };
        let b = match b_text {
            "" | "+" => BigRational::one(),
            "-" => -BigRational::one(),
            t => parse_rational(t.strip_prefix('+').unwrap_or(t))?,
        };
        Ok(Sqrt5::new(parse_rational(a_text)?, b))
    }
}
