//! Arithmetic in the small finite fields GF(2), GF(3), GF(4) and GF(p) for odd primes p.
//!
//! Elements are integer codes `0..order`. For prime orders the code is the residue itself.
//! For GF(4) the codes `0, 1, 2, 3` stand for `0, 1, u, u+1` in the polynomial basis with
//! `u^2 + u + 1 = 0`, so addition is bitwise XOR of the codes.

use std::fmt;
use std::sync::Arc;

use crate::arith::{is_prime, pow_mod};
use crate::Error;

/// An element code of some [`Field`].
pub type Elem = u16;

/// Exclusive upper bound on supported prime orders.
pub const MAX_ORDER: u32 = 1 << 16;

/// Fields up to this order get full addition and multiplication tables.
const TABLE_LIMIT: u32 = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldOp {
    Add,
    Mul,
    Neg,
    Inv,
}

struct Tables {
    add: Vec<Elem>,
    mul: Vec<Elem>,
}

struct FieldInner {
    order: u32,
    characteristic: u32,
    tables: Option<Tables>,
    neg: Vec<Elem>,
    inv: Vec<Elem>,
}

/// A finite field context. Cheap to clone; the tables are shared.
#[derive(Clone)]
pub struct Field(Arc<FieldInner>);

impl Field {
    /// Builds GF(`order`). Supported orders are 4 and every prime up to 2^16.
    pub fn new(order: u32) -> Result<Field, Error> {
        if order != 4 && !(is_prime(order as u64) && order < MAX_ORDER) {
            return Err(Error::UnsupportedField(order));
        }
        let characteristic = if order == 4 { 2 } else { order };
        let l = order as usize;
        let raw_add = |a: u32, b: u32| -> u32 {
            if order == 4 {
                a ^ b
            } else {
                (a + b) % order
            }
        };
        let raw_mul = |a: u32, b: u32| -> u32 {
            if order == 4 {
                gf4_mul(a, b)
            } else {
                ((a as u64 * b as u64) % order as u64) as u32
            }
        };
        let tables = (order <= TABLE_LIMIT).then(|| {
            let mut add = vec![0; l * l];
            let mut mul = vec![0; l * l];
            for a in 0..order {
                for b in 0..order {
                    add[(a * order + b) as usize] = raw_add(a, b) as Elem;
                    mul[(a * order + b) as usize] = raw_mul(a, b) as Elem;
                }
            }
            Tables { add, mul }
        });
        let neg = (0..order)
            .map(|a| if order == 4 { a } else { (order - a) % order } as Elem)
            .collect();
        let mut inv = vec![0; l];
        if order == 4 {
            for a in 1..4 {
                inv[a as usize] = (1..4).find(|&b| gf4_mul(a, b) == 1).unwrap() as Elem;
            }
        } else {
            // a^(p-2) = a^-1
            for a in 1..order {
                if inv[a as usize] == 0 {
                    let b = pow_mod(a as u64, order as u64 - 2, order as u64) as u32;
                    inv[a as usize] = b as Elem;
                    inv[b as usize] = a as Elem;
                }
            }
        }
        Ok(Field(Arc::new(FieldInner {
            order,
            characteristic,
            tables,
            neg,
            inv,
        })))
    }

    pub fn order(&self) -> u32 {
        self.0.order
    }

    pub fn characteristic(&self) -> u32 {
        self.0.characteristic
    }

    pub fn is_valid(&self, a: Elem) -> bool {
        (a as u32) < self.0.order
    }

    pub fn check(&self, a: Elem) -> Result<Elem, Error> {
        if self.is_valid(a) {
            Ok(a)
        } else {
            Err(Error::InvalidElement {
                value: a as u32,
                order: self.0.order,
            })
        }
    }

    /// All element codes in ascending order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.0.order as Elem
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        let f = &*self.0;
        match &f.tables {
            Some(t) => t.add[a as usize * f.order as usize + b as usize],
            None => ((a as u32 + b as u32) % f.order) as Elem,
        }
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        let f = &*self.0;
        match &f.tables {
            Some(t) => t.mul[a as usize * f.order as usize + b as usize],
            None => ((a as u64 * b as u64) % f.order as u64) as Elem,
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.0.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn inv(&self, a: Elem) -> Result<Elem, Error> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.0.inv[a as usize])
    }

    /// Generic entry point for a single field operation. `b` is required for the binary ops.
    pub fn apply(&self, op: FieldOp, a: Elem, b: Option<Elem>) -> Result<Elem, Error> {
        self.check(a)?;
        if let Some(b) = b {
            self.check(b)?;
        }
        let rhs = || b.ok_or(Error::MissingOperand(op));
        match op {
            FieldOp::Add => Ok(self.add(a, rhs()?)),
            FieldOp::Mul => Ok(self.mul(a, rhs()?)),
            FieldOp::Neg => Ok(self.neg(a)),
            FieldOp::Inv => self.inv(a),
        }
    }

    /// The image of an integer under Z -> GF(l), i.e. `k * 1`.
    pub fn from_int(&self, k: i64) -> Elem {
        let c = self.0.characteristic as i64;
        k.rem_euclid(c) as Elem
    }

    pub fn one(&self) -> Elem {
        1
    }

    pub fn minus_one(&self) -> Elem {
        self.neg(1)
    }

    /// Human token: digits for prime fields, `0, 1, u, u+1` for GF(4).
    pub fn token(&self, a: Elem) -> String {
        if self.0.order == 4 {
            GF4_TOKENS[a as usize].to_string()
        } else {
            a.to_string()
        }
    }

    /// Compact token used by the matrix text format: GF(4) uses `v` for `u+1`.
    pub fn matrix_token(&self, a: Elem) -> String {
        if self.0.order == 4 {
            ["0", "1", "u", "v"][a as usize].to_string()
        } else {
            a.to_string()
        }
    }

    /// Parses an element token. GF(4) accepts `0, 1, u, u+1, v` and the digit aliases `2, 3`.
    pub fn parse(&self, token: &str) -> Result<Elem, Error> {
        let t = token.trim();
        if self.0.order == 4 {
            let code = match t {
                "0" => 0,
                "1" => 1,
                "u" | "2" => 2,
                "u+1" | "1+u" | "v" | "3" => 3,
                _ => return Err(Error::BadToken(token.to_string())),
            };
            return Ok(code);
        }
        let v: u32 = t.parse().map_err(|_| Error::BadToken(token.to_string()))?;
        if v >= self.0.order {
            return Err(Error::BadToken(token.to_string()));
        }
        Ok(v as Elem)
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.0.order == other.0.order
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.0.order)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.0.order)
    }
}

const GF4_TOKENS: [&str; 4] = ["0", "1", "u", "u+1"];

/// Carry-less product of two GF(4) codes reduced by u^2 + u + 1.
fn gf4_mul(a: u32, b: u32) -> u32 {
    let mut r = 0;
    for i in 0..2 {
        if (b >> i) & 1 == 1 {
            r ^= a << i;
        }
    }
    if r & 4 != 0 {
        r ^= 0b111;
    }
    r
}
