//! Generalized cyclotomic classes of order two modulo `n = pq`.
//!
//! With `g` the least common primitive root of `p` and `q` and `x` the least positive solution of
//! `x = g (mod p)`, `x = 1 (mod q)`, the units of `Z_n` split into `C0 = <g>` and `C1 = x C0`.
//! Together with `R = {0}`, the nonzero multiples of `p` (class `P`) and the nonzero multiples of
//! `q` (class `Q`) this gives a five-way partition of `Z_n`.

use std::fmt;

use serde::Serialize;

use crate::arith::{crt_pair, gcd, is_prime, is_primitive_root, lcm, multiplicative_order};
use crate::Error;

/// Largest modulus a context may be built for.
pub const MAX_MODULUS: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ResidueClass {
    R,
    P,
    Q,
    C0,
    C1,
}

impl ResidueClass {
    pub const ALL: [ResidueClass; 5] = [
        ResidueClass::R,
        ResidueClass::P,
        ResidueClass::Q,
        ResidueClass::C0,
        ResidueClass::C1,
    ];

    /// Position in the mask vector `(m0, m1, m2, m3, m4)`.
    pub fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for ResidueClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ResidueClass::R => "R",
            ResidueClass::P => "P",
            ResidueClass::Q => "Q",
            ResidueClass::C0 => "C0",
            ResidueClass::C1 => "C1",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug)]
pub struct CyclotomicContext {
    p: u64,
    q: u64,
    n: u64,
    d: u64,
    e: u64,
    g: u64,
    x: u64,
    labels: Vec<ResidueClass>,
}

fn check_odd_prime(v: u64) -> Result<(), Error> {
    if v == 2 || !is_prime(v) {
        return Err(Error::NotOddPrime(v));
    }
    Ok(())
}

fn check_pair(p: u64, q: u64) -> Result<(), Error> {
    check_odd_prime(p)?;
    check_odd_prime(q)?;
    if p == q {
        return Err(Error::EqualPrimes(p));
    }
    Ok(())
}

fn check_gcd(p: u64, q: u64) -> Result<(), Error> {
    let d = gcd(p - 1, q - 1);
    if d != 2 {
        return Err(Error::BadGcd { p, q, gcd: d });
    }
    Ok(())
}

/// Smallest `g >= 2` that is a primitive root modulo both `p` and `q`.
pub fn common_primitive_root(p: u64, q: u64) -> Result<u64, Error> {
    check_pair(p, q)?;
    // a common primitive root exists below pq by CRT
    let g = (2..p * q)
        .find(|&g| is_primitive_root(g, p) && is_primitive_root(g, q))
        .expect("CRT guarantees a common primitive root below pq");
    Ok(g)
}

impl CyclotomicContext {
    pub fn new(p: u64, q: u64) -> Result<Self, Error> {
        check_pair(p, q)?;
        check_gcd(p, q)?;
        let n = p * q;
        if n > MAX_MODULUS {
            return Err(Error::ModulusTooLarge(n));
        }
        let g = common_primitive_root(p, q)?;
        let x = crt_pair(g % p, p, 1, q).expect("p and q are coprime");
        let d = 2;
        let e = lcm(p - 1, q - 1);
        debug_assert_eq!(multiplicative_order(g, n), Some(e));

        let mut labels = vec![ResidueClass::C1; n as usize];
        labels[0] = ResidueClass::R;
        for k in 1..q {
            labels[(k * p) as usize] = ResidueClass::P;
        }
        for k in 1..p {
            labels[(k * q) as usize] = ResidueClass::Q;
        }
        let mut power = 1;
        for _ in 0..e {
            labels[power as usize] = ResidueClass::C0;
            power = power * g % n;
        }
        // everything left over is a unit outside <g>, hence in x<g>
        debug_assert!((0..e).all(|s| {
            let c = crate::arith::pow_mod(g, s, n) * x % n;
            labels[c as usize] == ResidueClass::C1
        }));
        Ok(CyclotomicContext {
            p,
            q,
            n,
            d,
            e,
            g,
            x,
            labels,
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// `gcd(p - 1, q - 1)`, always 2 for a valid context.
    pub fn d(&self) -> u64 {
        self.d
    }

    /// Order of `g` modulo `n`, equal to `|C0| = |C1| = (p-1)(q-1)/2`.
    pub fn e(&self) -> u64 {
        self.e
    }

    pub fn g(&self) -> u64 {
        self.g
    }

    pub fn x(&self) -> u64 {
        self.x
    }

    pub fn classify(&self, r: u64) -> Result<ResidueClass, Error> {
        self.labels
            .get(r as usize)
            .copied()
            .ok_or(Error::ResidueOutOfRange { r, n: self.n })
    }

    /// Class of `r mod n` for any integer `r`.
    #[inline]
    pub fn class_of(&self, r: i64) -> ResidueClass {
        self.labels[r.rem_euclid(self.n as i64) as usize]
    }

    pub fn labels(&self) -> &[ResidueClass] {
        &self.labels
    }

    /// Members of a class in ascending order.
    pub fn members(&self, class: ResidueClass) -> Vec<u64> {
        (0..self.n)
            .filter(|&r| self.labels[r as usize] == class)
            .collect()
    }

    /// `(i, j) = |(C_i + 1) ∩ C_j|`, counted directly.
    pub fn cyclotomic_number(&self, i: u8, j: u8) -> Result<u64, Error> {
        if i > 1 || j > 1 {
            return Err(Error::InvalidPair(i, j));
        }
        let (ci, cj) = (unit_class(i), unit_class(j));
        let count = (0..self.n)
            .filter(|&c| self.labels[c as usize] == ci)
            .filter(|&c| self.labels[((c + 1) % self.n) as usize] == cj)
            .count();
        Ok(count as u64)
    }

    /// All four cyclotomic numbers as `[(0,0), (0,1), (1,0), (1,1)]`.
    pub fn cyclotomic_numbers(&self) -> [u64; 4] {
        let mut out = [0; 4];
        for (slot, (i, j)) in [(0, 0), (0, 1), (1, 0), (1, 1)].into_iter().enumerate() {
            out[slot] = self.cyclotomic_number(i, j).expect("indices are in range");
        }
        out
    }

    /// Class of `-1` next to the reference claim that `-1 ∈ C0` exactly when `(p-1)(q-1)/4`
    /// is even.
    pub fn minus_one_class(&self) -> MinusOneReport {
        let computed = self.labels[(self.n - 1) as usize];
        let quarter = (self.p - 1) * (self.q - 1) / 4;
        let claimed = if quarter % 2 == 0 {
            ResidueClass::C0
        } else {
            ResidueClass::C1
        };
        MinusOneReport {
            p: self.p,
            q: self.q,
            computed,
            claimed,
            quarter,
            agrees: computed == claimed,
        }
    }
}

fn unit_class(i: u8) -> ResidueClass {
    if i == 0 {
        ResidueClass::C0
    } else {
        ResidueClass::C1
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinusOneReport {
    pub p: u64,
    pub q: u64,
    pub computed: ResidueClass,
    pub claimed: ResidueClass,
    /// `(p-1)(q-1)/4`, whose parity drives the claim.
    pub quarter: u64,
    pub agrees: bool,
}

impl fmt::Display for MinusOneReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "-1 mod {}: computed class {}, claimed class {} ((p-1)(q-1)/4 = {} is {}) -> {}",
            self.p * self.q,
            self.computed,
            self.claimed,
            self.quarter,
            if self.quarter % 2 == 0 { "even" } else { "odd" },
            if self.agrees { "agree" } else { "DISAGREE" }
        )
    }
}

/// Closed-form cyclotomic numbers of order two, branching on the parity of `(p-1)(q-1)/4`.
pub fn cyclotomic_number_closed_form(p: u64, q: u64, i: u8, j: u8) -> Result<u64, Error> {
    check_pair(p, q)?;
    check_gcd(p, q)?;
    if i > 1 || j > 1 {
        return Err(Error::InvalidPair(i, j));
    }
    let t = (p - 2) * (q - 2);
    let even = ((p - 1) * (q - 1) / 4) % 2 == 0;
    let v = match (even, i, j) {
        (true, 0, 1) => (t - 3) / 4,
        (true, _, _) => (t + 1) / 4,
        (false, 0, 0) => (t + 3) / 4,
        (false, _, _) => (t - 1) / 4,
    };
    Ok(v)
}

/// Parities of the cyclotomic numbers predicted from `(p + q)/4` when exactly one of `p`, `q`
/// is `1 mod 4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ParityPrediction {
    /// `(p + q) / 4`.
    pub quarter_sum: u64,
    /// Common parity of `(0,0)`, `(1,0)` and `(1,1)`.
    pub diagonal: u8,
    /// Parity of `(0,1)`.
    pub off_diagonal: u8,
}

pub fn mixed_residue_parities(p: u64, q: u64) -> Result<ParityPrediction, Error> {
    check_pair(p, q)?;
    check_gcd(p, q)?;
    if (p % 4 == 1) == (q % 4 == 1) {
        return Err(Error::Hypothesis(format!(
            "p = {p} and q = {q} must lie in different residue classes mod 4"
        )));
    }
    let quarter_sum = (p + q) / 4;
    // omega + omega' = (p + q)/4 - 1
    let (diagonal, off_diagonal) = if quarter_sum % 2 == 1 { (0, 1) } else { (1, 0) };
    Ok(ParityPrediction {
        quarter_sum,
        diagonal,
        off_diagonal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use ResidueClass::*;

    #[test]
    fn primitive_roots() {
        assert_eq!(common_primitive_root(3, 5).unwrap(), 2);
        assert_eq!(common_primitive_root(5, 7).unwrap(), 3);
        assert_eq!(common_primitive_root(3, 7).unwrap(), 5);
        assert!(common_primitive_root(4, 7).is_err());
        assert!(common_primitive_root(7, 7).is_err());
        assert!(common_primitive_root(2, 7).is_err());
    }

    #[test]
    fn context_3_5() {
        let ctx = CyclotomicContext::new(3, 5).unwrap();
        assert_eq!((ctx.n(), ctx.e(), ctx.g(), ctx.x()), (15, 4, 2, 11));
        assert_eq!(ctx.members(C0), vec![1, 2, 4, 8]);
        assert_eq!(ctx.members(C1), vec![7, 11, 13, 14]);
        assert_eq!(ctx.members(P), vec![3, 6, 9, 12]);
        assert_eq!(ctx.members(Q), vec![5, 10]);
        assert_eq!(ctx.members(R), vec![0]);
    }

    #[test]
    fn context_5_7() {
        let ctx = CyclotomicContext::new(5, 7).unwrap();
        assert_eq!((ctx.n(), ctx.e(), ctx.g(), ctx.x()), (35, 12, 3, 8));
    }

    #[test]
    fn bad_gcd_names_value() {
        let err = CyclotomicContext::new(5, 13).unwrap_err();
        assert!(err.to_string().contains("gcd(p−1, q−1) = 4 ≠ 2"), "{err}");
    }

    #[test]
    fn classify_examples() {
        let ctx = CyclotomicContext::new(3, 5).unwrap();
        assert_eq!(ctx.classify(8).unwrap(), C0);
        assert_eq!(ctx.classify(0).unwrap(), R);
        assert_eq!(ctx.classify(10).unwrap(), Q);
        assert!(ctx.classify(15).is_err());
    }

    #[test]
    fn direct_numbers() {
        let c35 = CyclotomicContext::new(3, 5).unwrap();
        assert_eq!(c35.cyclotomic_number(0, 0).unwrap(), 1);
        assert_eq!(c35.cyclotomic_number(0, 1).unwrap(), 0);
        let c37 = CyclotomicContext::new(3, 7).unwrap();
        assert_eq!(c37.members(C0), vec![1, 4, 5, 16, 17, 20]);
        assert_eq!(c37.cyclotomic_number(0, 0).unwrap(), 2);
        let c57 = CyclotomicContext::new(5, 7).unwrap();
        assert_eq!(c57.cyclotomic_number(0, 1).unwrap(), 3);
        assert!(c57.cyclotomic_number(2, 0).is_err());
    }

    #[test]
    fn closed_form_values() {
        assert_eq!(cyclotomic_number_closed_form(5, 7, 0, 0).unwrap(), 4);
        assert_eq!(cyclotomic_number_closed_form(5, 7, 0, 1).unwrap(), 3);
        assert_eq!(cyclotomic_number_closed_form(3, 7, 0, 0).unwrap(), 2);
        assert!(cyclotomic_number_closed_form(5, 7, 0, 2).is_err());
        assert!(cyclotomic_number_closed_form(5, 13, 0, 0).is_err());
    }

    #[test]
    fn minus_one_reports() {
        let expect = [((3, 5), C1), ((3, 7), C0), ((5, 7), C1)];
        for ((p, q), class) in expect {
            let r = CyclotomicContext::new(p, q).unwrap().minus_one_class();
            assert_eq!(r.computed, class);
            assert!(!r.agrees);
        }
    }

    #[test]
    fn parity_rule() {
        let a = mixed_residue_parities(5, 7).unwrap();
        assert_eq!((a.diagonal, a.off_diagonal), (0, 1));
        let b = mixed_residue_parities(3, 5).unwrap();
        assert_eq!((b.diagonal, b.off_diagonal), (1, 0));
        let err = mixed_residue_parities(3, 7).unwrap_err();
        assert!(err.to_string().contains("hypotheses not met"));
    }

    fn valid_pairs(limit: u64) -> Vec<(u64, u64)> {
        let primes: Vec<u64> = (3..limit).filter(|&v| is_prime(v)).collect();
        let mut out = vec![];
        for &p in &primes {
            for &q in &primes {
                if p != q && p * q <= limit && gcd(p - 1, q - 1) == 2 {
                    out.push((p, q));
                }
            }
        }
        out
    }

    #[test]
    fn partition_and_closure() {
        for (p, q) in valid_pairs(1000) {
            let ctx = CyclotomicContext::new(p, q).unwrap();
            let n = ctx.n();
            let sizes: Vec<usize> = ResidueClass::ALL
                .iter()
                .map(|&c| ctx.members(c).len())
                .collect();
            let e = ctx.e() as usize;
            assert_eq!(sizes, vec![1, (q - 1) as usize, (p - 1) as usize, e, e]);
            assert_eq!(e as u64, (p - 1) * (q - 1) / 2);
            for r in 0..n {
                let c = ctx.class_of(r as i64);
                if matches!(c, C0 | C1) {
                    assert_eq!(ctx.class_of((r * ctx.g() % n) as i64), c);
                }
                if c == C0 {
                    assert_eq!(ctx.class_of((r * ctx.x() % n) as i64), C1);
                }
            }
        }
    }

    #[test]
    fn closed_form_and_parity_agree_with_counts() {
        for (p, q) in valid_pairs(1000) {
            let ctx = CyclotomicContext::new(p, q).unwrap();
            let direct = ctx.cyclotomic_numbers();
            for (slot, (i, j)) in [(0, 0), (0, 1), (1, 0), (1, 1)].into_iter().enumerate() {
                assert_eq!(direct[slot], cyclotomic_number_closed_form(p, q, i, j).unwrap());
            }
            if let Ok(par) = mixed_residue_parities(p, q) {
                assert_eq!(direct[0] % 2, par.diagonal as u64);
                assert_eq!(direct[2] % 2, par.diagonal as u64);
                assert_eq!(direct[3] % 2, par.diagonal as u64);
                assert_eq!(direct[1] % 2, par.off_diagonal as u64);
            }
            // row sums: C_i + 1 lands in C0, C1 or the non-units
            for i in 0..2u8 {
                let ci = if i == 0 { C0 } else { C1 };
                let to_nonunit = ctx
                    .members(ci)
                    .iter()
                    .filter(|&&c| matches!(ctx.class_of(c as i64 + 1), R | P | Q))
                    .count() as u64;
                let row = direct[2 * i as usize] + direct[2 * i as usize + 1];
                assert_eq!(row + to_nonunit, ctx.e());
            }
        }
    }
}
