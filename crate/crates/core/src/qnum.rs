//! Arithmetic in the imaginary quadratic field `K = Q(w)`, `w = (1 + i*sqrt(7))/2`.
//!
//! Every element is stored as `x + y*w` with rational `x`, `y`. The generator
//! satisfies `w^2 = w - 2`, its conjugate is `1 - w` and `w * conj(w) = 2`.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Builds a rational from an integer numerator and denominator.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct QNum {
    x: Rational,
    y: Rational,
}

impl QNum {
    pub fn new(x: Rational, y: Rational) -> Self {
        QNum { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        QNum::new(rat_int(x), rat_int(y))
    }

    pub fn from_rational(x: Rational) -> Self {
        QNum::new(x, Rational::zero())
    }

    /// `p/q + (r/s) w`
    pub fn from_fracs(p: i64, q: i64, r: i64, s: i64) -> Self {
        QNum::new(rat(p, q), rat(r, s))
    }

    /// The generator `w = (1 + i*sqrt(7))/2`.
    pub fn alpha() -> Self {
        QNum::from_ints(0, 1)
    }

    /// `conj(w) = 1 - w`.
    pub fn alpha_bar() -> Self {
        QNum::from_ints(1, -1)
    }

    /// `i*sqrt(7) = 2w - 1`.
    pub fn i_sqrt7() -> Self {
        QNum::from_ints(-1, 2)
    }

    pub fn x(&self) -> &Rational {
        &self.x
    }

    pub fn y(&self) -> &Rational {
        &self.y
    }

    pub fn is_rational(&self) -> bool {
        self.y.is_zero()
    }

    /// True when both coefficients are integers, i.e. the element lies in `Z[w]`.
    pub fn is_integral(&self) -> bool {
        self.x.is_integer() && self.y.is_integer()
    }

    pub fn conj(&self) -> QNum {
        QNum::new(&self.x + &self.y, -&self.y)
    }

    /// Field norm `x^2 + xy + 2y^2`; nonnegative, zero only at zero.
    pub fn norm(&self) -> Rational {
        &self.x * &self.x + &self.x * &self.y + Rational::from_integer(2.into()) * &self.y * &self.y
    }

    pub fn inv(&self) -> Result<QNum> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm();
        let c = self.conj();
        Ok(QNum::new(c.x / &n, c.y / n))
    }

    pub fn scale(&self, r: &Rational) -> QNum {
        QNum::new(&self.x * r, &self.y * r)
    }

    /// Least common denominator of both coefficients.
    pub fn denominator_lcm(&self) -> BigInt {
        num_integer::Integer::lcm(self.x.denom(), self.y.denom())
    }

    /// Double-precision image under `w -> (1 + i*sqrt(7))/2`.
    pub fn embed(&self) -> Complex64 {
        let x = self.x.to_f64().unwrap_or(f64::NAN);
        let y = self.y.to_f64().unwrap_or(f64::NAN);
        Complex64::new(x + 0.5 * y, y * 7f64.sqrt() / 2.0)
    }
}

impl Zero for QNum {
    fn zero() -> Self {
        QNum::default()
    }
    fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }
}

impl One for QNum {
    fn one() -> Self {
        QNum::from_ints(1, 0)
    }
}

impl From<i64> for QNum {
    fn from(n: i64) -> Self {
        QNum::from_ints(n, 0)
    }
}

impl<'a> Add<&'a QNum> for &'a QNum {
    type Output = QNum;
    fn add(self, rhs: &QNum) -> QNum {
        QNum::new(&self.x + &rhs.x, &self.y + &rhs.y)
    }
}

impl<'a> Sub<&'a QNum> for &'a QNum {
    type Output = QNum;
    fn sub(self, rhs: &QNum) -> QNum {
        QNum::new(&self.x - &rhs.x, &self.y - &rhs.y)
    }
}

impl<'a> Mul<&'a QNum> for &'a QNum {
    type Output = QNum;
    fn mul(self, rhs: &QNum) -> QNum {
        // (a + bw)(c + dw) = ac - 2bd + (ad + bc + bd)w
        let ac = &self.x * &rhs.x;
        let bd = &self.y * &rhs.y;
        let ad = &self.x * &rhs.y;
        let bc = &self.y * &rhs.x;
        let two = Rational::from_integer(2.into());
        QNum::new(ac - &two * &bd, ad + bc + bd)
    }
}

impl Neg for &QNum {
    type Output = QNum;
    fn neg(self) -> QNum {
        QNum::new(-&self.x, -&self.y)
    }
}

impl Neg for QNum {
    type Output = QNum;
    fn neg(self) -> QNum {
        QNum::new(-self.x, -self.y)
    }
}

/// Division panics on a zero divisor; use [`QNum::inv`] for a checked variant.
impl<'a> Div<&'a QNum> for &'a QNum {
    type Output = QNum;
    fn div(self, rhs: &QNum) -> QNum {
        self * &rhs.inv().expect("division by zero in K")
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<QNum> for QNum {
            type Output = QNum;
            fn $m(self, rhs: QNum) -> QNum { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a QNum> for QNum {
            type Output = QNum;
            fn $m(self, rhs: &QNum) -> QNum { (&self).$m(rhs) }
        }
        impl<'a> $tr<QNum> for &'a QNum {
            type Output = QNum;
            fn $m(self, rhs: QNum) -> QNum { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl AddAssign<&QNum> for QNum {
    fn add_assign(&mut self, rhs: &QNum) {
        self.x += &rhs.x;
        self.y += &rhs.y;
    }
}

impl SubAssign<&QNum> for QNum {
    fn sub_assign(&mut self, rhs: &QNum) {
        self.x -= &rhs.x;
        self.y -= &rhs.y;
    }
}

impl MulAssign<&QNum> for QNum {
    fn mul_assign(&mut self, rhs: &QNum) {
        *self = &*self * rhs;
    }
}

fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Text form `x+y*w`; zero parts are dropped and a unit `y` prints as `w` / `-w`.
impl fmt::Display for QNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.y.is_zero() {
            return write!(f, "{}", fmt_rational(&self.x));
        }
        let mut out = String::new();
        if !self.x.is_zero() {
            out.push_str(&fmt_rational(&self.x));
            if self.y.is_positive() {
                out.push('+');
            }
        }
        if self.y.is_one() {
            out.push('w');
        } else if (-&self.y).is_one() {
            out.push_str("-w");
        } else {
            out.push_str(&fmt_rational(&self.y));
            out.push_str("*w");
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for QNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QNum({self})")
    }
}

pub(crate) fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rational::new(n, d))
        }
        None => Some(Rational::from_integer(s.parse().ok()?)),
    }
}

impl FromStr for QNum {
    type Err = Error;

    /// Accepts `x`, `y*w`, `w`, `-w`, `x+y*w`, `x-y*w`, `x+w`, with `p/q` rationals.
    fn from_str(s: &str) -> Result<QNum> {
        let bad = || Error::Parse(format!("invalid QNum literal {s:?}"));
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(bad());
        }
        if !t.ends_with('w') {
            return parse_rational(&t).map(QNum::from_rational).ok_or_else(bad);
        }
        // split off the w-term at the last sign that is not the leading one
        let body = &t[..t.len() - 1];
        let split = body.char_indices().filter(|&(i, c)| i > 0 && (c == '+' || c == '-')).map(|(i, _)| i).next_back();
        let (xs, ys) = match split {
            Some(i) => (&body[..i], &body[i..]),
            None => ("", body),
        };
        let y = match ys.strip_suffix('*') {
            Some(coef) => {
                let coef = coef.strip_prefix('+').unwrap_or(coef);
                parse_rational(coef).ok_or_else(bad)?
            }
            None => match ys {
                "" | "+" => Rational::one(),
                "-" => -Rational::one(),
                _ => return Err(bad()),
            },
        };
        let x = if xs.is_empty() { Rational::zero() } else { parse_rational(xs).ok_or_else(bad)? };
        Ok(QNum::new(x, y))
    }
}

impl serde::Serialize for QNum {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// A vector of `K^3`, viewed inside `C^3` through the embedding of `w`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, serde::Serialize)]
#[serde(transparent)]
pub struct CVec3(pub [QNum; 3]);

impl CVec3 {
    pub fn new(a: QNum, b: QNum, c: QNum) -> Self {
        CVec3([a, b, c])
    }

    pub fn zero() -> Self {
        CVec3::default()
    }

    pub fn from_ints(v: [i64; 3]) -> Self {
        CVec3(v.map(QNum::from))
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, s: &QNum) -> CVec3 {
        CVec3([&self.0[0] * s, &self.0[1] * s, &self.0[2] * s])
    }

    pub fn add(&self, o: &CVec3) -> CVec3 {
        CVec3([&self.0[0] + &o.0[0], &self.0[1] + &o.0[1], &self.0[2] + &o.0[2]])
    }

    pub fn sub(&self, o: &CVec3) -> CVec3 {
        CVec3([&self.0[0] - &o.0[0], &self.0[1] - &o.0[1], &self.0[2] - &o.0[2]])
    }

    pub fn neg(&self) -> CVec3 {
        CVec3([-&self.0[0], -&self.0[1], -&self.0[2]])
    }

    /// The `(x1, y1, x2, y2, x3, y3)` coefficient chart of `K^3` over `Q`.
    pub fn to_chart(&self) -> [Rational; 6] {
        let [a, b, c] = &self.0;
        [a.x.clone(), a.y.clone(), b.x.clone(), b.y.clone(), c.x.clone(), c.y.clone()]
    }

    pub fn from_chart(c: &[Rational; 6]) -> CVec3 {
        CVec3([
            QNum::new(c[0].clone(), c[1].clone()),
            QNum::new(c[2].clone(), c[3].clone()),
            QNum::new(c[4].clone(), c[5].clone()),
        ])
    }
}

impl fmt::Display for CVec3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.0[0], self.0[1], self.0[2])
    }
}

impl fmt::Debug for CVec3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CVec3{self}")
    }
}

/// Half the standard Hermitian product: `(x, y) = 1/2 * sum conj(x_i) y_i`.
pub fn hermitian(x: &CVec3, y: &CVec3) -> QNum {
    let mut acc = QNum::zero();
    for i in 0..3 {
        acc += &(x.0[i].conj() * &y.0[i]);
    }
    acc.scale(&rat(1, 2))
}
