//! Small finite fields `F_q`, `q = p^k <= 256`, with precomputed tables.
//!
//! An element is encoded as a byte `c_0 + c_1 p + ... + c_{k-1} p^{k-1}`,
//! the base-`p` digits being the coefficients of its polynomial
//! representative modulo the defining polynomial. With this encoding `0` and
//! `1` are the field's zero and one, and the prime subfield is `0..p`.

use crate::error::{Error, Result};

/// Largest field order supported by the byte encoding.
pub const MAX_FIELD_ORDER: u32 = 256;

#[derive(Clone, PartialEq, Eq)]
pub struct FqField {
    p: u32,
    k: u32,
    q: u32,
    /// Monic defining polynomial, ascending coefficients, length `k + 1`.
    modulus: Vec<u32>,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
    primitive: u8,
}

impl std::fmt::Debug for FqField {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FqField")
            .field("q", &self.q)
            .field("modulus", &self.modulus)
            .finish()
    }
}

/// Splits `q` as `p^k` with `p` prime, if possible.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut k = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

impl FqField {
    /// Builds `F_q`. For `k > 1` the defining polynomial is the smallest
    /// monic irreducible of degree `k`, ordering candidates by the integer
    /// whose base-`p` digits are their lower coefficients.
    pub fn new(q: u32) -> Result<Self> {
        let (p, k) = prime_power(q as u64).ok_or(Error::NotPrimePower(q as u64))?;
        if q > MAX_FIELD_ORDER {
            return Err(Error::BudgetExceeded {
                what: "field order",
                limit: MAX_FIELD_ORDER as u64,
            });
        }
        let p = p as u32;
        let modulus = if k == 1 {
            vec![0, 1]
        } else {
            (0..q)
                .map(|code| {
                    let mut poly = digits(code, p, k as usize);
                    poly.push(1);
                    poly
                })
                .find(|poly| is_irreducible(poly, p))
                .expect("an irreducible polynomial of every degree exists")
        };

        let qs = q as usize;
        let mut add = vec![0u8; qs * qs];
        let mut mul = vec![0u8; qs * qs];
        for a in 0..q {
            let pa = digits(a, p, k as usize);
            for b in 0..q {
                let pb = digits(b, p, k as usize);
                let sum: Vec<u32> = pa.iter().zip(&pb).map(|(x, y)| (x + y) % p).collect();
                add[(a * q + b) as usize] = undigits(&sum, p) as u8;
                let prod = poly_rem(&poly_mul(&pa, &pb, p), &modulus, p);
                let mut prod = prod;
                prod.resize(k as usize, 0);
                mul[(a * q + b) as usize] = undigits(&prod, p) as u8;
            }
        }
        let mut neg = vec![0u8; qs];
        let mut inv = vec![0u8; qs];
        for a in 0..qs {
            for b in 0..qs {
                if add[a * qs + b] == 0 {
                    neg[a] = b as u8;
                }
                if mul[a * qs + b] == 1 {
                    inv[a] = b as u8;
                }
            }
        }
        let mut field = FqField {
            p,
            k,
            q,
            modulus,
            add,
            mul,
            neg,
            inv,
            primitive: 0,
        };
        field.primitive = (1..q)
            .map(|a| a as u8)
            .find(|&a| field.multiplicative_order(a) == q - 1)
            .expect("the multiplicative group of a finite field is cyclic");
        Ok(field)
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    /// Defining polynomial, ascending coefficients over the prime field.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: u8) -> u8 {
        self.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }

    pub fn inv(&self, a: u8) -> Option<u8> {
        (a != 0).then(|| self.inv[a as usize])
    }

    /// A generator of the multiplicative group.
    pub fn primitive_element(&self) -> u8 {
        self.primitive
    }

    pub fn pow(&self, a: u8, mut e: u64) -> u8 {
        let mut base = a;
        let mut acc = 1u8;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Order of a nonzero element in the multiplicative group; `0` for zero.
    pub fn multiplicative_order(&self, a: u8) -> u32 {
        if a == 0 {
            return 0;
        }
        let mut x = a;
        let mut n = 1;
        while x != 1 {
            x = self.mul(x, a);
            n += 1;
        }
        n
    }

    pub fn elements(&self) -> impl Iterator<Item = u8> {
        (0..self.q).map(|a| a as u8)
    }
}

fn digits(mut code: u32, p: u32, k: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(k);
    for _ in 0..k {
        out.push(code % p);
        code /= p;
    }
    out
}

fn undigits(coeffs: &[u32], p: u32) -> u32 {
    coeffs.iter().rev().fold(0, |acc, &c| acc * p + c)
}

fn trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn poly_mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(out)
}

fn inv_mod(a: u32, p: u32) -> u32 {
    (1..p)
        .find(|&b| a * b % p == 1)
        .expect("nonzero residue mod a prime")
}

fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = trim(a.to_vec());
    let m = trim(m.to_vec());
    let lead_inv = inv_mod(*m.last().expect("nonzero modulus"), p);
    while r.len() >= m.len() {
        let shift = r.len() - m.len();
        let factor = r.last().copied().unwrap() * lead_inv % p;
        for (i, &c) in m.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - factor * c % p) % p;
        }
        r = trim(r);
    }
    r
}

/// Exhaustive trial division by every monic polynomial of degree
/// `1..=deg/2`.
fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let deg = poly.len() - 1;
    for d in 1..=deg / 2 {
        for code in 0..p.pow(d as u32) {
            let mut divisor = digits(code, p, d);
            divisor.push(1);
            if poly_rem(poly, &divisor, p).is_empty() {
                return false;
            }
        }
    }
    true
}
