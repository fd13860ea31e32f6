//! Exact scalars: integer polynomials in s = q^(1/2) and reduced fractions
//! of them with a Laurent shift.
//!
//! A `ScalarQ` is s^shift * num/den with num, den integer polynomials that
//! have nonzero constant terms, gcd(num, den) = 1 over the integer
//! polynomial ring (contents included), and positive leading denominator
//! coefficient. That representation is unique, so equality is structural.
//! Reduction uses the primitive polynomial remainder sequence; division by
//! a common divisor is exact integer long division.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

// ---- Integer polynomials ----

/// Dense integer polynomial in s; the coefficient list never ends in zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZPoly {
    coeffs: Vec<BigInt>,
}

impl ZPoly {
    pub fn zero() -> Self {
        ZPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        ZPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        let mut p = ZPoly { coeffs: vec![c] };
        p.trim();
        p
    }

    /// c * s^deg.
    pub fn monomial(c: BigInt, deg: usize) -> Self {
        if c.is_zero() {
            return ZPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        coeffs[deg] = c;
        ZPoly { coeffs }
    }

    fn trim(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Number of leading zero coefficients from the constant end, i.e. the
    /// multiplicity of the factor s.
    pub fn trailing_zeros(&self) -> usize {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(0)
    }

    /// Divide by s^k; the polynomial must be divisible.
    fn shift_down(&self, k: usize) -> ZPoly {
        debug_assert!(self.coeffs.iter().take(k).all(|c| c.is_zero()));
        ZPoly {
            coeffs: self.coeffs.iter().skip(k).cloned().collect(),
        }
    }

    pub fn add(&self, other: &ZPoly) -> ZPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        let mut p = ZPoly { coeffs };
        p.trim();
        p
    }

    pub fn neg(&self) -> ZPoly {
        ZPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &ZPoly) -> ZPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &ZPoly) -> ZPoly {
        if self.is_zero() || other.is_zero() {
            return ZPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        let mut p = ZPoly { coeffs };
        p.trim();
        p
    }

    pub fn pow(&self, n: usize) -> ZPoly {
        let mut out = ZPoly::one();
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Greatest common divisor of the coefficients, nonnegative.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        g
    }

    /// The polynomial divided by its content; zero stays zero.
    pub fn primitive_part(&self) -> ZPoly {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        ZPoly {
            coeffs: self.coeffs.iter().map(|c| c / &g).collect(),
        }
    }

    /// Exact division; None when the division has a remainder anywhere.
    pub fn div_exact(&self, divisor: &ZPoly) -> Option<ZPoly> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(ZPoly::zero());
        }
        let dd = divisor.degree().unwrap();
        let mut rem = self.coeffs.clone();
        let nd = self.degree().unwrap();
        if nd < dd {
            return None;
        }
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        let lead = divisor.leading().unwrap();
        for i in (0..quot.len()).rev() {
            let top = rem[i + dd].clone();
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, c) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &q * c;
            }
            quot[i] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        let mut p = ZPoly { coeffs: quot };
        p.trim();
        Some(p)
    }

    /// Pseudo-remainder: repeatedly scale by the divisor's leading
    /// coefficient and cancel the top term, staying in integer arithmetic.
    /// The result differs from the true remainder by a power of that
    /// leading coefficient, which the primitive remainder sequence strips.
    fn pseudo_rem(&self, divisor: &ZPoly) -> ZPoly {
        let dd = divisor.degree().unwrap();
        let lead = divisor.leading().unwrap().clone();
        let mut rem = self.clone();
        while let Some(nd) = rem.degree() {
            if nd < dd {
                break;
            }
            let top = rem.leading().unwrap().clone();
            rem = rem
                .mul(&ZPoly::constant(lead.clone()))
                .sub(&divisor.mul(&ZPoly::monomial(top, nd - dd)));
        }
        rem
    }

    /// Polynomial gcd via the primitive remainder sequence; the result is
    /// primitive with positive leading coefficient (content is handled by
    /// the caller when needed).
    pub fn gcd_primitive(&self, other: &ZPoly) -> ZPoly {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.is_zero() {
            return fix_sign(b);
        }
        if b.is_zero() {
            return fix_sign(a);
        }
        if a.degree() < b.degree() {
            core::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        fix_sign(a)
    }

    /// Full gcd including integer content, nonnegative leading coefficient.
    pub fn gcd(&self, other: &ZPoly) -> ZPoly {
        if self.is_zero() {
            return fix_sign(other.clone());
        }
        if other.is_zero() {
            return fix_sign(self.clone());
        }
        let content = self.content().gcd(&other.content());
        self.gcd_primitive(other)
            .mul(&ZPoly::constant(content))
    }
}

fn fix_sign(p: ZPoly) -> ZPoly {
    match p.leading() {
        Some(l) if l.is_negative() => p.neg(),
        _ => p,
    }
}

// ---- Rational functions with a Laurent shift ----

/// s^shift * num/den in the unique reduced form described at module level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScalarQ {
    shift: i64,
    num: ZPoly,
    den: ZPoly,
}

impl ScalarQ {
    fn normalized(mut shift: i64, mut num: ZPoly, mut den: ZPoly) -> ScalarQ {
        assert!(!den.is_zero(), "scalar denominator must be nonzero");
        if num.is_zero() {
            return ScalarQ {
                shift: 0,
                num: ZPoly::zero(),
                den: ZPoly::one(),
            };
        }
        let tn = num.trailing_zeros();
        if tn > 0 {
            num = num.shift_down(tn);
            shift += tn as i64;
        }
        let td = den.trailing_zeros();
        if td > 0 {
            den = den.shift_down(td);
            shift -= td as i64;
        }
        let g = num.gcd(&den);
        if !g.is_one() {
            num = num.div_exact(&g).expect("gcd divides numerator");
            den = den.div_exact(&g).expect("gcd divides denominator");
        }
        if den.leading().map(Signed::is_negative).unwrap_or(false) {
            num = num.neg();
            den = den.neg();
        }
        ScalarQ { shift, num, den }
    }

    pub fn zero() -> Self {
        ScalarQ {
            shift: 0,
            num: ZPoly::zero(),
            den: ZPoly::one(),
        }
    }

    pub fn one() -> Self {
        ScalarQ {
            shift: 0,
            num: ZPoly::one(),
            den: ZPoly::one(),
        }
    }

    pub fn from_int(v: i64) -> Self {
        ScalarQ::normalized(0, ZPoly::constant(BigInt::from(v)), ZPoly::one())
    }

    /// s^k.
    pub fn s_power(k: i64) -> Self {
        ScalarQ {
            shift: k,
            num: ZPoly::one(),
            den: ZPoly::one(),
        }
    }

    /// q^k = s^(2k).
    pub fn q_power(k: i64) -> Self {
        ScalarQ::s_power(2 * k)
    }

    /// Build from a Laurent polynomial given as (exponent, coefficient)
    /// pairs; exponents may repeat and may be negative.
    pub fn from_terms(terms: &[(i64, i64)]) -> Self {
        let mut out = ScalarQ::zero();
        for &(e, c) in terms {
            let t = ScalarQ {
                shift: e,
                num: ZPoly::constant(BigInt::from(c)),
                den: ZPoly::one(),
            };
            out = &out + &t;
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.shift == 0 && self.num.is_one() && self.den.is_one()
    }

    /// Multiplicative inverse; None for zero.
    pub fn inverse(&self) -> Option<ScalarQ> {
        if self.is_zero() {
            return None;
        }
        Some(ScalarQ::normalized(
            -self.shift,
            self.den.clone(),
            self.num.clone(),
        ))
    }

    /// Integer power, negative allowed for nonzero scalars.
    pub fn pow(&self, n: i64) -> Option<ScalarQ> {
        let base = if n < 0 { self.inverse()? } else { self.clone() };
        let mut out = ScalarQ::one();
        for _ in 0..n.unsigned_abs() {
            out = &out * &base;
        }
        Some(out)
    }

    /// The numerator as a Laurent polynomial string (shift applied),
    /// ascending exponents, fixed format.
    pub fn num_string(&self) -> String {
        laurent_string(self.shift, &self.num)
    }

    /// The denominator polynomial string, ascending exponents.
    pub fn den_string(&self) -> String {
        laurent_string(0, &self.den)
    }
}

fn laurent_string(shift: i64, poly: &ZPoly) -> String {
    if poly.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    let mut first = true;
    for (i, c) in poly.coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let e = shift + i as i64;
        if first {
            if c.is_negative() {
                out.push('-');
            }
            first = false;
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        let abs = c.abs();
        if e == 0 {
            out.push_str(&abs.to_string());
        } else {
            if !abs.is_one() {
                out.push_str(&abs.to_string());
                out.push('*');
            }
            if e == 1 {
                out.push('s');
            } else {
                out.push_str("s^");
                out.push_str(&e.to_string());
            }
        }
    }
    out
}

impl fmt::Display for ScalarQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num_string())
        } else {
            write!(f, "({}) / ({})", self.num_string(), self.den_string())
        }
    }
}

// Four-way operator implementations over references and values.
macro_rules! scalar_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait<&ScalarQ> for &ScalarQ {
            type Output = ScalarQ;
            fn $method(self, rhs: &ScalarQ) -> ScalarQ {
                let f: fn(&ScalarQ, &ScalarQ) -> ScalarQ = $body;
                f(self, rhs)
            }
        }
        impl $trait<ScalarQ> for ScalarQ {
            type Output = ScalarQ;
            fn $method(self, rhs: ScalarQ) -> ScalarQ {
                $trait::$method(&self, &rhs)
            }
        }
        impl $trait<&ScalarQ> for ScalarQ {
            type Output = ScalarQ;
            fn $method(self, rhs: &ScalarQ) -> ScalarQ {
                $trait::$method(&self, rhs)
            }
        }
        impl $trait<ScalarQ> for &ScalarQ {
            type Output = ScalarQ;
            fn $method(self, rhs: ScalarQ) -> ScalarQ {
                $trait::$method(self, &rhs)
            }
        }
    };
}

scalar_binop!(Add, add, |a, b| {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    let base = a.shift.min(b.shift);
    let pa = a
        .num
        .mul(&b.den)
        .mul(&ZPoly::monomial(BigInt::one(), (a.shift - base) as usize));
    let pb = b
        .num
        .mul(&a.den)
        .mul(&ZPoly::monomial(BigInt::one(), (b.shift - base) as usize));
    ScalarQ::normalized(base, pa.add(&pb), a.den.mul(&b.den))
});

scalar_binop!(Sub, sub, |a, b| a + &(-b));

scalar_binop!(Mul, mul, |a, b| {
    ScalarQ::normalized(a.shift + b.shift, a.num.mul(&b.num), a.den.mul(&b.den))
});

impl Neg for &ScalarQ {
    type Output = ScalarQ;
    fn neg(self) -> ScalarQ {
        ScalarQ {
            shift: self.shift,
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

impl Neg for ScalarQ {
    type Output = ScalarQ;
    fn neg(self) -> ScalarQ {
        -&self
    }
}

// ---- Tests ----

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(coeffs: &[i64]) -> ZPoly {
        let mut p = ZPoly {
            coeffs: coeffs.iter().map(|&c| BigInt::from(c)).collect(),
        };
        p.trim();
        p
    }

    #[test]
    fn poly_arithmetic() {
        // (x^2 + 1) * (x - 1) = x^3 - x^2 + x - 1.
        let a = poly(&[1, 0, 1]);
        let b = poly(&[-1, 1]);
        assert_eq!(a.mul(&b), poly(&[-1, 1, -1, 1]));
        // (x^2 + 1) + (2x + 3) = x^2 + 2x + 4.
        assert_eq!(a.add(&poly(&[3, 2])), poly(&[4, 2, 1]));
        assert_eq!(a.sub(&a), ZPoly::zero());
    }

    #[test]
    fn poly_exact_division() {
        let a = poly(&[-1, 0, 0, 0, 1]); // s^4 - 1
        let b = poly(&[-1, 0, 1]); // s^2 - 1
        assert_eq!(a.div_exact(&b), Some(poly(&[1, 0, 1])));
        // s + 1 does divide s^4 - 1.
        assert_eq!(a.div_exact(&poly(&[1, 1])), Some(poly(&[-1, 1, -1, 1])));
        // Non-divisor gives None: s + 2 is not a factor.
        assert_eq!(a.div_exact(&poly(&[2, 1])), None);
        // Leading coefficient that does not divide gives None.
        assert_eq!(poly(&[0, 1]).div_exact(&poly(&[0, 2])), None);
    }

    #[test]
    fn poly_gcd() {
        // gcd(s^4 - 1, s^2 - 1) = s^2 - 1.
        let a = poly(&[-1, 0, 0, 0, 1]);
        let b = poly(&[-1, 0, 1]);
        assert_eq!(a.gcd(&b), b);
        // gcd includes the integer content: gcd(2s+2, 4) = 2.
        assert_eq!(poly(&[2, 2]).gcd(&poly(&[4])), poly(&[2]));
        // Coprime polynomials give 1.
        assert_eq!(poly(&[1, 1]).gcd(&poly(&[-1, 1])), ZPoly::one());
        // Sign is normalized positive.
        assert_eq!(poly(&[1, -1]).gcd(&poly(&[1, -1])), poly(&[-1, 1]));
    }

    #[test]
    fn scalar_normal_form() {
        // (s^4 - s^2) / (2s) reduces to s*(s^2-1)/2.
        let x = ScalarQ::normalized(0, poly(&[0, 0, -1, 0, 1]), poly(&[0, 2]));
        assert_eq!(x.shift, 1);
        assert_eq!(x.num, poly(&[-1, 0, 1]));
        assert_eq!(x.den, poly(&[2]));
        // Denominator sign is normalized into the numerator.
        let y = ScalarQ::normalized(0, ZPoly::one(), poly(&[1, -1]));
        assert_eq!(y.den, poly(&[-1, 1]));
        assert_eq!(y.num, poly(&[-1]));
    }

    #[test]
    fn scalar_field_axioms_spot_checks() {
        let vals = [
            ScalarQ::from_terms(&[(-2, 1), (2, -1)]), // q^{-1} - q
            ScalarQ::s_power(3),
            ScalarQ::from_int(2),
            ScalarQ::from_terms(&[(0, 1), (4, -1)]),
        ];
        for a in &vals {
            for b in &vals {
                assert_eq!(a + b, b + a);
                assert_eq!(a * b, b * a);
                for c in &vals {
                    assert_eq!((a + b) + c, a + (b + c));
                    assert_eq!(a * (b + c), &(a * b) + &(a * c));
                }
            }
            // a * a^{-1} = 1 for nonzero a.
            assert!((a * &a.inverse().unwrap()).is_one());
        }
        assert_eq!(ScalarQ::from_int(0), ScalarQ::zero());
        assert!(ScalarQ::zero().inverse().is_none());
    }

    #[test]
    fn scalar_inverse_of_laurent_difference() {
        // 1/(q^{-1} - q) = -s^2/(s^4 - 1): shift 2, num -1, den s^4 - 1.
        let d = ScalarQ::from_terms(&[(-2, 1), (2, -1)]);
        let inv = d.inverse().unwrap();
        assert_eq!(inv.shift, 2);
        assert_eq!(inv.num, poly(&[-1]));
        assert_eq!(inv.den, poly(&[-1, 0, 0, 0, 1]));
        assert!((d * inv).is_one());
    }

    #[test]
    fn powers() {
        let q = ScalarQ::q_power(1);
        assert_eq!(q.pow(3).unwrap(), ScalarQ::s_power(6));
        assert_eq!(q.pow(-2).unwrap(), ScalarQ::s_power(-4));
        assert!(ScalarQ::zero().pow(-1).is_none());
        assert!(ScalarQ::zero().pow(0).unwrap().is_one());
    }

    #[test]
    fn string_format() {
        assert_eq!(ScalarQ::zero().num_string(), "0");
        assert_eq!(ScalarQ::from_int(-3).num_string(), "-3");
        let d = ScalarQ::from_terms(&[(-2, 1), (2, -1)]);
        assert_eq!(d.num_string(), "s^-2 - s^2");
        assert_eq!(d.den_string(), "1");
        let e = ScalarQ::from_terms(&[(0, 1), (1, 2)]);
        assert_eq!(e.num_string(), "1 + 2*s");
        let inv = d.inverse().unwrap();
        assert_eq!(inv.num_string(), "-s^2");
        assert_eq!(inv.den_string(), "-1 + s^4");
    }
}
