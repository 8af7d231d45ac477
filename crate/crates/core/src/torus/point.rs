use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg::{from_eps_coords, to_eps_coords, IntMat};
use crate::qnum::{CVec3, Rational};

/// A torsion point of the torus, as eps-coordinates modulo `Z^6`.
///
/// Stored with a common denominator `den` (the order of the point) and
/// numerators in `[0, den)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TorusPoint {
    den: i64,
    num: [i64; 6],
}

impl TorusPoint {
    pub fn zero() -> Self {
        TorusPoint { den: 1, num: [0; 6] }
    }

    /// `num / den` reduced mod `Z^6`.
    pub fn from_parts(den: i128, num: &[i128]) -> Result<Self> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        assert_eq!(num.len(), 6);
        let (den, sign) = if den < 0 { (-den, -1) } else { (den, 1) };
        let mut red: Vec<i128> = num.iter().map(|&n| (sign * n).rem_euclid(den)).collect();
        let g = red.iter().fold(den, |g, &n| g.gcd(&n));
        let den = den / g;
        for n in &mut red {
            *n /= g;
        }
        let den = i64::try_from(den).map_err(|_| Error::Parse("torus point denominator overflows".into()))?;
        let mut out = [0i64; 6];
        for (o, n) in out.iter_mut().zip(red) {
            *o = n as i64;
        }
        Ok(TorusPoint { den, num: out })
    }

    pub fn from_rationals(c: &[Rational]) -> Result<Self> {
        assert_eq!(c.len(), 6);
        let den = c.iter().fold(BigInt::from(1), |l, x| l.lcm(x.denom()));
        let den_i = den.to_i128().ok_or_else(|| Error::Parse("torus point denominator overflows".into()))?;
        let mut num = [0i128; 6];
        for (n, x) in num.iter_mut().zip(c) {
            let v = x.numer() * (&den / x.denom());
            *n = v.mod_floor(&den).to_i128().expect("reduced numerator");
        }
        Self::from_parts(den_i, &num)
    }

    /// The image of a vector of `C^3`.
    pub fn from_cvec(v: &CVec3) -> Result<Self> {
        Self::from_rationals(&to_eps_coords(v))
    }

    pub fn den(&self) -> i64 {
        self.den
    }

    pub fn numerators(&self) -> &[i64; 6] {
        &self.num
    }

    pub fn coords(&self) -> [Rational; 6] {
        std::array::from_fn(|i| Rational::new(self.num[i].into(), self.den.into()))
    }

    /// The representative in `[0,1)^6`, as a vector of `C^3`.
    pub fn to_cvec(&self) -> CVec3 {
        from_eps_coords(&self.coords())
    }

    pub fn is_zero(&self) -> bool {
        self.den == 1
    }

    /// Order in the group `Q^6 / Z^6`.
    pub fn order(&self) -> i64 {
        self.den
    }

    pub fn add(&self, o: &TorusPoint) -> TorusPoint {
        let d = (self.den as i128).lcm(&(o.den as i128));
        let (a, b) = (d / self.den as i128, d / o.den as i128);
        let num: Vec<i128> = (0..6).map(|i| self.num[i] as i128 * a + o.num[i] as i128 * b).collect();
        Self::from_parts(d, &num).expect("lcm of two i64 denominators")
    }

    pub fn neg(&self) -> TorusPoint {
        let num: Vec<i128> = self.num.iter().map(|&n| -(n as i128)).collect();
        Self::from_parts(self.den as i128, &num).expect("same denominator")
    }

    pub fn sub(&self, o: &TorusPoint) -> TorusPoint {
        self.add(&o.neg())
    }

    pub fn scale(&self, k: i64) -> TorusPoint {
        let num: Vec<i128> = self.num.iter().map(|&n| n as i128 * k as i128).collect();
        Self::from_parts(self.den as i128, &num).expect("same denominator")
    }

    /// Image under an integer matrix acting on eps-coordinates.
    pub fn apply(&self, m: &IntMat) -> TorusPoint {
        let num: Vec<i128> = self.num.iter().map(|&n| n as i128).collect();
        Self::from_parts(self.den as i128, &m.apply(&num)).expect("same denominator")
    }

    fn cmp_coords(&self, o: &TorusPoint) -> Ordering {
        for i in 0..6 {
            let a = self.num[i] as i128 * o.den as i128;
            let b = o.num[i] as i128 * self.den as i128;
            match a.cmp(&b) {
                Ordering::Equal => continue,
                c => return c,
            }
        }
        Ordering::Equal
    }
}

/// Lexicographic on the coordinates in `[0,1)`.
impl Ord for TorusPoint {
    fn cmp(&self, o: &Self) -> Ordering {
        self.cmp_coords(o)
    }
}

impl PartialOrd for TorusPoint {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for TorusPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.coords().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for TorusPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for TorusPoint {
    type Err = Error;

    /// `[n1/d1,...,n6/d6]`; entries may be integers and need not be reduced.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("expected [n1/d1,...,n6/d6], got {s:?}"));
        let inner = s.trim().strip_prefix('[').and_then(|t| t.strip_suffix(']')).ok_or_else(bad)?;
        let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
        if parts.len() != 6 {
            return Err(bad());
        }
        let mut c = Vec::with_capacity(6);
        for p in parts {
            let x = match p.split_once('/') {
                Some((n, d)) => {
                    let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                    let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                    if d.is_zero() {
                        return Err(Error::DivisionByZero);
                    }
                    Rational::new(n, d)
                }
                None => Rational::from_integer(p.parse().map_err(|_| bad())?),
            };
            c.push(x);
        }
        Self::from_rationals(&c)
    }
}

impl serde::Serialize for TorusPoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}
