//! Arithmetic in the small finite fields behind the plane constructions.
//!
//! Orders 2, 3, 5, 7 are plain modular arithmetic; orders 4, 8, 9 are
//! quotients by fixed irreducible polynomials (x² + x + 1 and x³ + x + 1
//! over the 2-element field, x² + 1 over the 3-element field). Elements are
//! indices `0..k` whose base-`p` digits are the polynomial coefficients,
//! little-endian, so `0` and `1` are always the additive and multiplicative
//! identities. Multiplication is precomputed into a table at construction —
//! the fields are tiny and everything downstream becomes a lookup.

use crate::error::{Error, Result};

/// A finite field of one of the supported orders 2, 3, 4, 5, 7, 8, 9.
pub struct Gf {
    order: u8,
    prime: u8,
    mul_table: Vec<u8>,
}

/// Irreducible polynomial used for order `p^d`, as ascending coefficients of
/// `x^0..x^d` (monic).
fn modulus(order: u8) -> Option<(u8, Vec<u8>)> {
    match order {
        4 => Some((2, vec![1, 1, 1])),    // x² + x + 1
        8 => Some((2, vec![1, 1, 0, 1])), // x³ + x + 1
        9 => Some((3, vec![1, 0, 1])),    // x² + 1
        _ => None,
    }
}

impl Gf {
    pub fn new(order: u8) -> Result<Gf> {
        let (prime, poly) = match order {
            2 | 3 | 5 | 7 => (order, vec![0, 1]), // the field itself: x ≡ plain residues
            4 | 8 | 9 => modulus(order).expect("listed above"),
            other => {
                return Err(Error::Invalid(format!(
                    "unsupported field order {other} (supported: 2, 3, 4, 5, 7, 8, 9)"
                )))
            }
        };
        let degree = poly.len() - 1;
        let k = order as usize;

        let digits = |mut e: usize| -> Vec<u8> {
            let mut d = vec![0u8; degree.max(1)];
            for slot in d.iter_mut() {
                *slot = (e % prime as usize) as u8;
                e /= prime as usize;
            }
            d
        };
        let undigits = |d: &[u8]| -> u8 {
            d.iter().rev().fold(0usize, |acc, &c| acc * prime as usize + c as usize) as u8
        };

        let mut mul_table = vec![0u8; k * k];
        for a in 0..k {
            for b in 0..k {
                if degree <= 1 {
                    mul_table[a * k + b] = ((a * b) % prime as usize) as u8;
                    continue;
                }
                let da = digits(a);
                let db = digits(b);
                // Polynomial product, then reduction by the monic modulus.
                let mut prod = vec![0u8; 2 * degree - 1];
                for (i, &x) in da.iter().enumerate() {
                    for (j, &y) in db.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % prime;
                    }
                }
                for i in (degree..prod.len()).rev() {
                    let c = prod[i];
                    if c == 0 {
                        continue;
                    }
                    prod[i] = 0;
                    for (j, &pc) in poly.iter().enumerate().take(degree) {
                        // x^i ≡ −(poly below x^degree) · x^(i−degree)
                        let slot = i - degree + j;
                        prod[slot] = (prod[slot] + prime - (c * pc) % prime) % prime;
                    }
                }
                mul_table[a * k + b] = undigits(&prod[..degree]);
            }
        }
        Ok(Gf { order, prime, mul_table })
    }

    pub fn order(&self) -> u8 {
        self.order
    }

    pub fn add(&self, a: u8, b: u8) -> u8 {
        let p = self.prime as usize;
        let (mut a, mut b) = (a as usize, b as usize);
        let mut out = 0;
        let mut place = 1;
        while a > 0 || b > 0 {
            out += (a % p + b % p) % p * place;
            place *= p;
            a /= p;
            b /= p;
        }
        out as u8
    }

    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul_table[a as usize * self.order as usize + b as usize]
    }

    pub fn neg(&self, a: u8) -> u8 {
        (0..self.order).find(|&b| self.add(a, b) == 0).expect("additive group")
    }

    pub fn inv(&self, a: u8) -> Option<u8> {
        if a == 0 {
            return None;
        }
        (1..self.order).find(|&b| self.mul(a, b) == 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const ORDERS: [u8; 7] = [2, 3, 4, 5, 7, 8, 9];

    #[test]
    fn field_axioms_hold_exhaustively() {
        for k in ORDERS {
            let f = Gf::new(k).unwrap();
            let all = 0..k;
            for a in all.clone() {
                assert_eq!(f.add(a, 0), a);
                assert_eq!(f.mul(a, 1), a);
                assert_eq!(f.mul(a, 0), 0);
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    let inv = f.inv(a).expect("nonzero elements are units");
                    assert_eq!(f.mul(a, inv), 1);
                }
                for b in all.clone() {
                    assert_eq!(f.add(a, b), f.add(b, a), "GF({k}) + commutes");
                    assert_eq!(f.mul(a, b), f.mul(b, a), "GF({k}) × commutes");
                    assert!(f.add(a, b) < k && f.mul(a, b) < k, "GF({k}) closed");
                    for c in all.clone() {
                        assert_eq!(
                            f.add(f.add(a, b), c),
                            f.add(a, f.add(b, c)),
                            "GF({k}) + associates"
                        );
                        assert_eq!(
                            f.mul(f.mul(a, b), c),
                            f.mul(a, f.mul(b, c)),
                            "GF({k}) × associates"
                        );
                        assert_eq!(
                            f.mul(a, f.add(b, c)),
                            f.add(f.mul(a, b), f.mul(a, c)),
                            "GF({k}) distributes"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn gf4_sample_products() {
        // In GF(4) = GF(2)[x]/(x²+x+1): elements 0, 1, x = 2, x+1 = 3.
        let f = Gf::new(4).unwrap();
        assert_eq!(f.mul(2, 2), 3); // x² = x + 1
        assert_eq!(f.mul(2, 3), 1); // x(x+1) = x² + x = 1
        assert_eq!(f.add(2, 3), 1);
    }

    #[test]
    fn gf9_sample_products() {
        // In GF(9) = GF(3)[x]/(x²+1): x = 3, so x² = −1 = 2.
        let f = Gf::new(9).unwrap();
        assert_eq!(f.mul(3, 3), 2);
        // (x+1)(x+2) = x² + 3x + 2 = x² + 2 = (−1) + 2 = 1.
        assert_eq!(f.mul(4, 5), 1);
    }

    #[test]
    fn unsupported_orders_are_rejected() {
        for k in [0, 1, 6, 10, 11] {
            assert!(Gf::new(k).is_err(), "order {k}");
        }
    }
}
