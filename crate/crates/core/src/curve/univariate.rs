//! Dense univariate polynomials over the rationals, in the curve parameter `t`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::rational::Q;

/// Coefficients from degree 0 upward, without trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct UPoly(Vec<Q>);

impl UPoly {
    pub fn new(mut coeffs: Vec<Q>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UPoly(coeffs)
    }

    pub fn zero() -> Self {
        UPoly(Vec::new())
    }

    pub fn one() -> Self {
        UPoly(vec![Q::one()])
    }

    /// `t^k`.
    pub fn monomial(k: usize, c: Q) -> Self {
        let mut v = vec![Q::zero(); k + 1];
        v[k] = c;
        UPoly::new(v)
    }

    /// `t - a`.
    pub fn linear_root(a: &Q) -> Self {
        UPoly::new(vec![-a.clone(), Q::one()])
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Q> {
        self.0.last()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn order_at_zero(&self) -> Option<usize> {
        self.0.iter().position(|c| !c.is_zero())
    }

    pub fn eval(&self, t: &Q) -> Q {
        self.0.iter().rev().fold(Q::zero(), |acc, c| acc * t + c)
    }

    pub fn add(&self, other: &UPoly) -> UPoly {
        let n = self.0.len().max(other.0.len());
        let z = Q::zero();
        UPoly::new((0..n).map(|i| self.0.get(i).unwrap_or(&z) + other.0.get(i).unwrap_or(&z)).collect())
    }

    pub fn sub(&self, other: &UPoly) -> UPoly {
        self.add(&other.scale(&-Q::one()))
    }

    pub fn scale(&self, c: &Q) -> UPoly {
        UPoly::new(self.0.iter().map(|x| x * c).collect())
    }

    pub fn mul(&self, other: &UPoly) -> UPoly {
        if self.is_zero() || other.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![Q::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UPoly::new(out)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &UPoly) -> (UPoly, UPoly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.leading().expect("nonzero").clone();
        let mut rem = self.0.clone();
        if rem.len() <= dd {
            return (UPoly::zero(), self.clone());
        }
        let mut quot = vec![Q::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / &lead;
            if !c.is_zero() {
                for (i, d) in divisor.0.iter().enumerate() {
                    rem[k + i] -= &c * d;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (UPoly::new(quot), UPoly::new(rem))
    }

    pub fn monic(&self) -> UPoly {
        match self.leading() {
            Some(l) => self.scale(&l.recip()),
            None => UPoly::zero(),
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &UPoly) -> UPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Largest `k` with `factor^k | self`; `None` for the zero polynomial.
    pub fn multiplicity(&self, factor: &UPoly) -> Option<u64> {
        assert!(factor.degree().is_some_and(|d| d >= 1), "factor must be non-constant");
        if self.is_zero() {
            return None;
        }
        let mut k = 0;
        let mut cur = self.clone();
        loop {
            let (q, r) = cur.div_rem(factor);
            if !r.is_zero() {
                return Some(k);
            }
            cur = q;
            k += 1;
        }
    }

    /// Rational roots, each once, sorted.
    pub fn rational_roots(&self) -> Vec<Q> {
        let mut roots = Vec::new();
        let Some(low) = self.order_at_zero() else { return roots };
        if low > 0 {
            roots.push(Q::zero());
        }
        let core = UPoly::new(self.0[low..].to_vec());
        if core.degree().unwrap_or(0) == 0 {
            return roots;
        }
        // integer coefficients, then p | a_0 and q | a_n
        let lcm = core.0.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = core.0.iter().map(|c| (c * Q::from_integer(lcm.clone())).to_integer()).collect();
        let a0 = ints[0].abs();
        let an = ints.last().expect("nonzero").abs();
        let mut cand = std::collections::BTreeSet::new();
        for p in divisors(&a0) {
            for q in divisors(&an) {
                let r = Q::new(p.clone(), q.clone());
                cand.insert(r.clone());
                cand.insert(-r);
            }
        }
        roots.extend(cand.into_iter().filter(|r| core.eval(r).is_zero()));
        roots.sort();
        roots
    }

    /// The `d`-th cyclotomic polynomial.
    pub fn cyclotomic(d: u32) -> UPoly {
        assert!(d >= 1, "cyclotomic index must be positive");
        let mut p = UPoly::monomial(d as usize, Q::one()).sub(&UPoly::one());
        for e in 1..d {
            if d.is_multiple_of(e) {
                p = p.div_rem(&UPoly::cyclotomic(e)).0;
            }
        }
        p
    }
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.to_u64().expect("root search limited to 64-bit coefficients");
    let mut out = Vec::new();
    let mut i = 1u64;
    while i * i <= n {
        if n.is_multiple_of(i) {
            out.push(BigInt::from(i));
            if i * i != n {
                out.push(BigInt::from(n / i));
            }
        }
        i += 1;
    }
    out
}

fn short_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
                (true, false) => {}
            }
            first = false;
            let coeff = if mag.is_one() && k > 0 { String::new() } else { short_q(&mag) };
            match k {
                0 => write!(f, "{coeff}")?,
                _ => {
                    if !coeff.is_empty() {
                        write!(f, "{coeff}*")?;
                    }
                    if k == 1 {
                        write!(f, "t")?
                    } else {
                        write!(f, "t^{k}")?
                    }
                }
            }
        }
        Ok(())
    }
}
