//! Difference-class matrices `C_n(m0, m1, m2, m3, m4)` and the algebra they span.
//!
//! Entry `(i, j)` of `C_n(m)` is `m_k` where `k` is the index of the class of `(j - i) mod n` in
//! `(R, P, Q, C0, C1)`. The five basis matrices `I, P, Q, A1, A2` are the 0/1 masks of the classes.

use std::fmt;

use serde::Serialize;

use crate::cyclotomy::{CyclotomicContext, ResidueClass};
use crate::gf::{Elem, Field};
use crate::matrix::GfMatrix;
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BasisKind {
    I,
    P,
    Q,
    A1,
    A2,
    J,
}

impl BasisKind {
    pub const SPAN: [BasisKind; 5] = [
        BasisKind::I,
        BasisKind::P,
        BasisKind::Q,
        BasisKind::A1,
        BasisKind::A2,
    ];

    fn class(self) -> Option<ResidueClass> {
        match self {
            BasisKind::I => Some(ResidueClass::R),
            BasisKind::P => Some(ResidueClass::P),
            BasisKind::Q => Some(ResidueClass::Q),
            BasisKind::A1 => Some(ResidueClass::C0),
            BasisKind::A2 => Some(ResidueClass::C1),
            BasisKind::J => None,
        }
    }
}

impl fmt::Display for BasisKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            BasisKind::I => "I",
            BasisKind::P => "P",
            BasisKind::Q => "Q",
            BasisKind::A1 => "A1",
            BasisKind::A2 => "A2",
            BasisKind::J => "J",
        };
        f.write_str(s)
    }
}

/// The five class values `(m0, m1, m2, m3, m4)` assigned to `R, P, Q, C0, C1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MaskVector(pub [Elem; 5]);

impl MaskVector {
    pub fn new(values: [Elem; 5]) -> Self {
        MaskVector(values)
    }

    pub fn get(&self, class: ResidueClass) -> Elem {
        self.0[class.index()]
    }

    pub fn validate(&self, field: &Field) -> Result<(), Error> {
        for &v in &self.0 {
            field.check(v)?;
        }
        Ok(())
    }

    /// Parses comma-separated tokens such as `1,1,0,u+1,u`.
    pub fn parse(field: &Field, text: &str) -> Result<Self, Error> {
        let parts: Vec<&str> = text.split(',').collect();
        if parts.len() != 5 {
            return Err(Error::BadToken(format!(
                "mask {text:?} needs exactly 5 comma-separated entries"
            )));
        }
        let mut out = [0; 5];
        for (slot, t) in out.iter_mut().zip(parts) {
            *slot = field.parse(t)?;
        }
        Ok(MaskVector(out))
    }

    pub fn format(&self, field: &Field) -> String {
        self.0
            .iter()
            .map(|&v| field.token(v))
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Swaps the values on `C0` and `C1`.
    pub fn swap_units(&self) -> Self {
        let [a, b, c, d, e] = self.0;
        MaskVector([a, b, c, e, d])
    }

    /// Every mask over the field, in lexicographic order of element codes.
    pub fn all(field: &Field) -> impl Iterator<Item = MaskVector> {
        let l = field.order() as usize;
        (0..l.pow(5)).map(move |mut idx| {
            let mut v = [0; 5];
            for slot in v.iter_mut().rev() {
                *slot = (idx % l) as Elem;
                idx /= l;
            }
            MaskVector(v)
        })
    }
}

pub fn basis_matrix(ctx: &CyclotomicContext, field: &Field, kind: BasisKind) -> GfMatrix {
    let n = ctx.n() as usize;
    match kind.class() {
        None => GfMatrix::from_fn(field, n, n, |_, _| 1),
        Some(class) => GfMatrix::from_fn(field, n, n, |i, j| {
            (ctx.class_of(j as i64 - i as i64) == class) as Elem
        }),
    }
}

pub fn mask_matrix(ctx: &CyclotomicContext, field: &Field, m: &MaskVector) -> GfMatrix {
    let n = ctx.n() as usize;
    GfMatrix::from_fn(field, n, n, |i, j| m.get(ctx.class_of(j as i64 - i as i64)))
}

/// Coefficients of `M M^T` on the basis `(I, P, Q, A1, A2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct DCoefficients(pub [Elem; 5]);

impl DCoefficients {
    pub fn format(&self, field: &Field) -> String {
        let parts: Vec<String> = self.0.iter().map(|&v| field.token(v)).collect();
        format!("({})", parts.join(","))
    }
}

/// Residue case of a mixed pair, if any.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MixedResidue {
    /// `p = 1 (mod 4)`, `q = 3 (mod 4)`.
    POneQThree,
    /// `p = 3 (mod 4)`, `q = 1 (mod 4)`.
    PThreeQOne,
}

pub fn mixed_residue(p: u64, q: u64) -> Option<MixedResidue> {
    match (p % 4, q % 4) {
        (1, 3) => Some(MixedResidue::POneQThree),
        (3, 1) => Some(MixedResidue::PThreeQOne),
        _ => None,
    }
}

fn require_mixed(ctx: &CyclotomicContext) -> Result<MixedResidue, Error> {
    mixed_residue(ctx.p(), ctx.q()).ok_or_else(|| {
        Error::Hypothesis(format!(
            "closed form does not cover this residue combination (p = {} = {} mod 4, q = {} = {} mod 4)",
            ctx.p(),
            ctx.p() % 4,
            ctx.q(),
            ctx.q() % 4
        ))
    })
}

/// Closed-form expansion of `M M^T`, valid when exactly one of `p`, `q` is `1 mod 4`.
/// Cyclotomic numbers enter as their residues modulo the characteristic.
pub fn d_coefficients_closed_form(
    ctx: &CyclotomicContext,
    field: &Field,
    m: &MaskVector,
) -> Result<DCoefficients, Error> {
    let case = require_mixed(ctx)?;
    m.validate(field)?;
    let f = field;
    let [m0, m1, m2, m3, m4] = m.0;
    let [c00, c01, c10, _] = ctx.cyclotomic_numbers().map(|c| f.from_int(c as i64));
    let two = f.from_int(2);
    let sq = |a| f.mul(a, a);
    let sum = |xs: &[Elem]| xs.iter().fold(0, |acc, &x| f.add(acc, x));
    let s34 = f.add(m3, m4);

    let a0 = sq(m0);
    let shared = sum(&[
        f.mul(sum(&[m0, m1, m2]), s34),
        f.mul(two, f.mul(m1, m2)),
        f.mul(c00, f.add(sq(m3), sq(m4))),
        f.mul(f.add(c10, c01), f.mul(m3, m4)),
    ]);
    let (a1, a2) = match case {
        MixedResidue::POneQThree => (
            f.add(sq(m1), f.mul(two, f.mul(m0, m1))),
            sum(&[
                sq(m2),
                sq(m3),
                sq(m4),
                f.mul(two, f.mul(m0, m2)),
                f.mul(two, f.mul(m1, s34)),
            ]),
        ),
        MixedResidue::PThreeQOne => (
            sum(&[
                sq(m1),
                sq(m3),
                sq(m4),
                f.mul(two, f.mul(m0, m1)),
                f.mul(two, f.mul(m2, s34)),
            ]),
            f.add(sq(m2), f.mul(two, f.mul(m0, m2))),
        ),
    };
    Ok(DCoefficients([a0, a1, a2, shared, shared]))
}

/// Reads the basis coefficients of a difference-class matrix, failing if some class carries
/// more than one value.
pub fn decompose(ctx: &CyclotomicContext, mat: &GfMatrix) -> Result<DCoefficients, Error> {
    let n = ctx.n() as usize;
    let mut seen: [Vec<Elem>; 5] = Default::default();
    for i in 0..n {
        for j in 0..n {
            let class = ctx.class_of(j as i64 - i as i64);
            let v = mat.get(i, j);
            let slot = &mut seen[class.index()];
            if !slot.contains(&v) {
                slot.push(v);
            }
        }
    }
    let mut out = [0; 5];
    for class in ResidueClass::ALL {
        let vals = &mut seen[class.index()];
        if vals.len() != 1 {
            vals.sort_unstable();
            return Err(Error::NotInSpan {
                class: class.to_string(),
                values: vals.clone(),
            });
        }
        out[class.index()] = vals[0];
    }
    Ok(DCoefficients(out))
}

/// Basis coefficients of `M M^T`, computed from the full matrix product.
pub fn d_coefficients_direct(
    ctx: &CyclotomicContext,
    field: &Field,
    m: &MaskVector,
) -> Result<DCoefficients, Error> {
    m.validate(field)?;
    let mat = mask_matrix(ctx, field, m);
    decompose(ctx, &mat.gram())
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityCheck {
    pub name: String,
    pub passed: bool,
    /// Basis coefficients of the left side, when it lies in the span.
    pub lhs: Option<[Elem; 5]>,
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    pub p: u64,
    pub q: u64,
    pub field: u32,
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

enum Lhs {
    Transpose(BasisKind),
    Product(BasisKind, BasisKind),
}

/// Checks the multiplication table of the basis in characteristic 2 for mixed-residue pairs.
pub fn verify_algebra_identities(
    ctx: &CyclotomicContext,
    field: &Field,
) -> Result<IdentityReport, Error> {
    if field.characteristic() != 2 {
        return Err(Error::Hypothesis(format!(
            "identities are checked in characteristic 2, got {field}"
        )));
    }
    let case = require_mixed(ctx)?;
    use BasisKind::*;

    let [c00, c01, c10, c11] = ctx.cyclotomic_numbers().map(|c| field.from_int(c as i64));
    let unit = |k: BasisKind| {
        let mut v = [0; 5];
        v[BasisKind::SPAN.iter().position(|&b| b == k).unwrap()] = 1;
        v
    };
    let plus = |a: [Elem; 5], b: [Elem; 5]| {
        let mut v = [0; 5];
        for i in 0..5 {
            v[i] = field.add(a[i], b[i]);
        }
        v
    };
    let combo = |x: Elem, y: Elem| {
        let mut v = [0; 5];
        v[3] = x;
        v[4] = y;
        v
    };
    // the non-unit class that behaves like the identity on A1, A2 and the one that mixes them
    let (absorbing, mixing) = match case {
        MixedResidue::POneQThree => (Q, P),
        MixedResidue::PThreeQOne => (P, Q),
    };

    let mut list: Vec<(String, Lhs, [Elem; 5])> = vec![
        ("A1^T = A2".into(), Lhs::Transpose(A1), unit(A2)),
        ("A2^T = A1".into(), Lhs::Transpose(A2), unit(A1)),
        ("P^T = P".into(), Lhs::Transpose(P), unit(P)),
        ("Q^T = Q".into(), Lhs::Transpose(Q), unit(Q)),
    ];
    for (x, y) in [(mixing, A1), (A1, mixing)] {
        list.push((
            format!("{x}*{y} = {absorbing} + A2"),
            Lhs::Product(x, y),
            plus(unit(absorbing), unit(A2)),
        ));
    }
    for (x, y) in [(mixing, A2), (A2, mixing)] {
        list.push((
            format!("{x}*{y} = {absorbing} + A1"),
            Lhs::Product(x, y),
            plus(unit(absorbing), unit(A1)),
        ));
    }
    for a in [A1, A2] {
        list.push((format!("{absorbing}*{a} = {a}"), Lhs::Product(absorbing, a), unit(a)));
        list.push((format!("{a}*{absorbing} = {a}"), Lhs::Product(a, absorbing), unit(a)));
    }
    list.extend([
        ("P*Q = A1 + A2".into(), Lhs::Product(P, Q), plus(unit(A1), unit(A2))),
        ("Q*P = A1 + A2".into(), Lhs::Product(Q, P), plus(unit(A1), unit(A2))),
        ("P*P = P".into(), Lhs::Product(P, P), unit(P)),
        ("Q*Q = Q".into(), Lhs::Product(Q, Q), unit(Q)),
        (
            "A1*A1 = (1,0)A1 + (0,1)A2".into(),
            Lhs::Product(A1, A1),
            combo(c10, c01),
        ),
        (
            "A2*A2 = (0,1)A1 + (1,0)A2".into(),
            Lhs::Product(A2, A2),
            combo(c01, c10),
        ),
        (
            format!("A1*A2 = {absorbing} + (0,0)A1 + (1,1)A2"),
            Lhs::Product(A1, A2),
            plus(unit(absorbing), combo(c00, c11)),
        ),
        (
            format!("A2*A1 = {absorbing} + (1,1)A1 + (0,0)A2"),
            Lhs::Product(A2, A1),
            plus(unit(absorbing), combo(c11, c00)),
        ),
    ]);

    let basis: Vec<GfMatrix> = BasisKind::SPAN
        .iter()
        .map(|&k| basis_matrix(ctx, field, k))
        .collect();
    let get = |k: BasisKind| &basis[BasisKind::SPAN.iter().position(|&b| b == k).unwrap()];

    let checks = list
        .into_iter()
        .map(|(name, lhs, rhs)| {
            let left = match lhs {
                Lhs::Transpose(k) => get(k).transpose(),
                Lhs::Product(a, b) => get(a).mul(get(b)).expect("square matrices"),
            };
            let right = combination(ctx, field, &rhs);
            let passed = left == right;
            let lhs = decompose(ctx, &left).ok().map(|d| d.0);
            IdentityCheck { name, passed, lhs }
        })
        .collect();
    Ok(IdentityReport {
        p: ctx.p(),
        q: ctx.q(),
        field: field.order(),
        checks,
    })
}

/// `sum_k coeffs[k] * basis[k]`, which is just the mask matrix with those class values.
fn combination(ctx: &CyclotomicContext, field: &Field, coeffs: &[Elem; 5]) -> GfMatrix {
    mask_matrix(ctx, field, &MaskVector(*coeffs))
}
