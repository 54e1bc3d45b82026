//! Self-duality criteria on the mask coefficients, the two infinite code families, exhaustive
//! mask searches and the reference table codes.

use std::fmt;
use std::str::FromStr;
use crate::clock::Stopwatch;

use serde::Serialize;

use crate::circulant::{
    d_coefficients_closed_form, d_coefficients_direct, mixed_residue, DCoefficients, MaskVector,
    MixedResidue,
};
use crate::code::{bordered_pdc, pure_pdc, LinearCode};
use crate::cyclotomy::CyclotomicContext;
use crate::distance::{Budget, DistanceMethod};
use crate::gf::{Elem, Field};
use crate::report::CodeReport;
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ConstructionKind {
    Pure,
    Bordered,
}

impl fmt::Display for ConstructionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ConstructionKind::Pure => "pure",
            ConstructionKind::Bordered => "bordered",
        })
    }
}

impl FromStr for ConstructionKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "pure" => Ok(ConstructionKind::Pure),
            "bordered" => Ok(ConstructionKind::Bordered),
            _ => Err(Error::Parse(format!("unknown kind {s:?}, expected pure or bordered"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionRequest {
    pub p: u64,
    pub q: u64,
    pub field_order: u32,
    pub kind: ConstructionKind,
    pub mask: MaskVector,
    /// Corner entry of the border; required for bordered codes.
    pub alpha: Option<Elem>,
}

impl ConstructionRequest {
    pub fn pure(p: u64, q: u64, field_order: u32, mask: [Elem; 5]) -> Self {
        ConstructionRequest {
            p,
            q,
            field_order,
            kind: ConstructionKind::Pure,
            mask: MaskVector(mask),
            alpha: None,
        }
    }

    pub fn bordered(p: u64, q: u64, field_order: u32, alpha: Elem, mask: [Elem; 5]) -> Self {
        ConstructionRequest {
            p,
            q,
            field_order,
            kind: ConstructionKind::Bordered,
            mask: MaskVector(mask),
            alpha: Some(alpha),
        }
    }

    pub fn context(&self) -> Result<CyclotomicContext, Error> {
        CyclotomicContext::new(self.p, self.q)
    }

    pub fn field(&self) -> Result<Field, Error> {
        Field::new(self.field_order)
    }

    pub fn build(&self) -> Result<LinearCode, Error> {
        let ctx = self.context()?;
        let field = self.field()?;
        self.build_with(&ctx, &field)
    }

    pub fn build_with(&self, ctx: &CyclotomicContext, field: &Field) -> Result<LinearCode, Error> {
        match self.kind {
            ConstructionKind::Pure => pure_pdc(ctx, field, &self.mask),
            ConstructionKind::Bordered => {
                let alpha = self
                    .alpha
                    .ok_or_else(|| Error::Parse("bordered codes need alpha".into()))?;
                bordered_pdc(ctx, field, alpha, &self.mask)
            }
        }
    }

    /// Compact name such as `GP_35(1,0,1,0,1)` or `GB_36(0; 0,1,0,1,0)`.
    pub fn descriptor(&self) -> String {
        let field = Field::new(self.field_order).ok();
        let tok = |v: Elem| field.as_ref().map_or(v.to_string(), |f| f.token(v));
        let mask: Vec<String> = self.mask.0.iter().map(|&v| tok(v)).collect();
        let n = self.p * self.q;
        match self.kind {
            ConstructionKind::Pure => format!("GP_{}({})", n, mask.join(",")),
            ConstructionKind::Bordered => format!(
                "GB_{}({}; {})",
                n + 1,
                tok(self.alpha.unwrap_or(0)),
                mask.join(",")
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionResult {
    pub label: String,
    pub description: String,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriterionReport {
    pub verdict: bool,
    pub conditions: Vec<ConditionResult>,
    pub coefficients: DCoefficients,
    /// Whether the closed-form coefficients agree with the direct ones, when the closed form
    /// applies to the residue combination.
    pub closed_form_agrees: Option<bool>,
}

/// Evaluates the coefficient criteria for self-duality of a pure or bordered code.
///
/// Pure codes need `D0 = -1` and `D1 = D2 = D3 = D4 = 0`. Bordered codes need `alpha + n = -1`,
/// `S = 0` with `S = -alpha + m0 + (p-1) m1 + (q-1) m2 + ((p-1)(q-1)/2)(m3 + m4)`, `D0 = -2` and
/// `D1 = D2 = D3 = D4 = -1`. The coefficients come from the direct matrix product.
pub fn self_duality_criterion(
    ctx: &CyclotomicContext,
    field: &Field,
    kind: ConstructionKind,
    alpha: Option<Elem>,
    m: &MaskVector,
) -> Result<CriterionReport, Error> {
    let d = d_coefficients_direct(ctx, field, m)?;
    let closed_form_agrees = match mixed_residue(ctx.p(), ctx.q()) {
        Some(_) => Some(d_coefficients_closed_form(ctx, field, m)? == d),
        None => None,
    };
    let f = field;
    let fmt = |v: Elem| f.token(v);
    let mut conditions = Vec::new();
    let mut cond = |label: &str, description: String, passed: bool| {
        conditions.push(ConditionResult {
            label: label.to_string(),
            description,
            passed,
        })
    };
    let [d0, d1, d2, d3, d4] = d.0;
    match kind {
        ConstructionKind::Pure => {
            let minus_one = f.minus_one();
            cond("1(a)", format!("D0 = {} (want -1)", fmt(d0)), d0 == minus_one);
            for (label, name, v) in [("1(b)", "D1", d1), ("1(c)", "D2", d2), ("1(d)", "D3", d3), ("1(e)", "D4", d4)] {
                cond(label, format!("{name} = {} (want 0)", fmt(v)), v == 0);
            }
        }
        ConstructionKind::Bordered => {
            let alpha = alpha.ok_or_else(|| Error::Parse("bordered codes need alpha".into()))?;
            f.check(alpha)?;
            let [m0, m1, m2, m3, m4] = m.0;
            let n = f.from_int(ctx.n() as i64);
            let corner = f.add(alpha, n);
            cond(
                "2(a)",
                format!("alpha + n = {} (want -1)", fmt(corner)),
                corner == f.minus_one(),
            );
            let p1 = f.from_int(ctx.p() as i64 - 1);
            let q1 = f.from_int(ctx.q() as i64 - 1);
            let half = f.from_int(((ctx.p() - 1) * (ctx.q() - 1) / 2) as i64);
            let s = [
                f.neg(alpha),
                m0,
                f.mul(p1, m1),
                f.mul(q1, m2),
                f.mul(half, f.add(m3, m4)),
            ]
            .into_iter()
            .fold(0, |acc, x| f.add(acc, x));
            cond("2(b)", format!("S = {} (want 0)", fmt(s)), s == 0);
            let minus_two = f.from_int(-2);
            cond("2(c)", format!("D0 = {} (want -2)", fmt(d0)), d0 == minus_two);
            let minus_one = f.minus_one();
            for (label, name, v) in [("2(d)", "D1", d1), ("2(e)", "D2", d2), ("2(f)", "D3", d3), ("2(g)", "D4", d4)] {
                cond(label, format!("{name} = {} (want -1)", fmt(v)), v == minus_one);
            }
        }
    }
    let verdict = conditions.iter().all(|c| c.passed);
    Ok(CriterionReport {
        verdict,
        conditions,
        coefficients: d,
        closed_form_agrees,
    })
}

/// Which of the family hypotheses hold for a prime pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyHypotheses {
    pub p: u64,
    pub q: u64,
    /// `(p-1)(q-1)/4` is an even integer.
    pub quarter_product_even: bool,
    /// `(p+q)/4` when it is an integer.
    pub quarter_sum: Option<u64>,
}

impl FamilyHypotheses {
    pub fn new(p: u64, q: u64) -> Self {
        let prod = (p - 1) * (q - 1);
        FamilyHypotheses {
            p,
            q,
            quarter_product_even: prod % 8 == 0,
            quarter_sum: ((p + q) % 4 == 0).then_some((p + q) / 4),
        }
    }

    /// Checks both hypotheses and names every one that fails.
    fn require(&self, want_odd_sum: bool) -> Result<(), Error> {
        let (p, q) = (self.p, self.q);
        let mut violated = Vec::new();
        if !self.quarter_product_even {
            let prod = (p - 1) * (q - 1);
            violated.push(if prod % 4 == 0 {
                format!("(p−1)(q−1)/4 = {} is odd", prod / 4)
            } else {
                format!("(p−1)(q−1)/4 = {prod}/4 is not an integer")
            });
        }
        match self.quarter_sum {
            None => violated.push(format!("(p+q)/4 = {}/4 is not an integer", p + q)),
            Some(s) if want_odd_sum && s % 2 == 0 => {
                violated.push(format!("(p+q)/4 = {s} is even"))
            }
            Some(s) if !want_odd_sum && s % 2 == 1 => {
                violated.push(format!("(p+q)/4 = {s} is odd"))
            }
            Some(_) => {}
        }
        if violated.is_empty() {
            Ok(())
        } else {
            Err(Error::Hypothesis(violated.join("; ")))
        }
    }
}

/// A family member together with its verified code.
#[derive(Clone, Debug)]
pub struct FamilyCode {
    pub request: ConstructionRequest,
    pub code: LinearCode,
}

fn build_family(
    p: u64,
    q: u64,
    field_order: u32,
    want_odd_sum: bool,
    masks: impl Fn(MixedResidue) -> Vec<(Option<Elem>, [Elem; 5])>,
) -> Result<Vec<FamilyCode>, Error> {
    let ctx = CyclotomicContext::new(p, q)?;
    FamilyHypotheses::new(p, q).require(want_odd_sum)?;
    let case = mixed_residue(p, q).ok_or_else(|| {
        Error::Hypothesis(format!("p = {p} and q = {q} must differ mod 4"))
    })?;
    let field = Field::new(field_order)?;
    masks(case)
        .into_iter()
        .map(|(alpha, m)| {
            let request = match alpha {
                None => ConstructionRequest::pure(p, q, field_order, m),
                Some(a) => ConstructionRequest::bordered(p, q, field_order, a, m),
            };
            let code = request.build_with(&ctx, &field)?;
            if !code.is_self_dual() {
                return Err(Error::NotSelfDual(request.descriptor()));
            }
            Ok(FamilyCode { request, code })
        })
        .collect()
}

const U: Elem = 2;
const V: Elem = 3;

/// The four binary codes (two pure, two bordered with `alpha = 0`) for pairs with
/// `(p-1)(q-1)/4` even and `(p+q)/4` odd.
pub fn binary_family(p: u64, q: u64) -> Result<Vec<FamilyCode>, Error> {
    build_family(p, q, 2, true, |case| match case {
        MixedResidue::POneQThree => vec![
            (None, [1, 0, 1, 0, 1]),
            (None, [1, 0, 1, 1, 0]),
            (Some(0), [0, 1, 0, 1, 0]),
            (Some(0), [0, 1, 0, 0, 1]),
        ],
        MixedResidue::PThreeQOne => vec![
            (None, [1, 1, 0, 0, 1]),
            (None, [1, 1, 0, 1, 0]),
            (Some(0), [0, 0, 1, 1, 0]),
            (Some(0), [0, 0, 1, 0, 1]),
        ],
    })
}

/// The four GF(4) codes for pairs with `(p-1)(q-1)/4` even and `(p+q)/4` even.
pub fn quaternary_family(p: u64, q: u64) -> Result<Vec<FamilyCode>, Error> {
    build_family(p, q, 4, false, |case| match case {
        MixedResidue::POneQThree => vec![
            (None, [1, 0, 1, V, U]),
            (None, [1, 0, 1, U, V]),
            (Some(0), [0, 1, 0, U, V]),
            (Some(0), [0, 1, 0, V, U]),
        ],
        MixedResidue::PThreeQOne => vec![
            (None, [1, 1, 0, V, U]),
            (None, [1, 1, 0, U, V]),
            (Some(0), [0, 0, 1, V, U]),
            (Some(0), [0, 0, 1, U, V]),
        ],
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchHit {
    pub descriptor: String,
    pub alpha: Option<Elem>,
    pub mask: [Elem; 5],
    pub report: CodeReport,
}

/// A candidate on which the coefficient criterion and the direct check disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Disagreement {
    pub alpha: Option<Elem>,
    pub mask: [Elem; 5],
    pub criterion: bool,
    pub direct: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchResult {
    pub p: u64,
    pub q: u64,
    pub l: u32,
    pub kind: ConstructionKind,
    pub scanned: usize,
    /// Bordered candidates rejected by the corner entry `alpha^2 + n = -1` alone.
    pub pruned: usize,
    pub hits: Vec<SearchHit>,
    pub disagreements: Vec<Disagreement>,
    pub complete: bool,
}

struct Candidate {
    alpha: Option<Elem>,
    mask: MaskVector,
}

struct Evaluated {
    alpha: Option<Elem>,
    mask: MaskVector,
    pruned: bool,
    criterion: bool,
    code: Option<LinearCode>,
}

#[cfg(feature = "parallel")]
fn map_ordered<T: Send, R: Send>(items: Vec<T>, f: impl Fn(T) -> R + Sync + Send) -> Vec<R> {
    use rayon::prelude::*;
    items.into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
fn map_ordered<T, R>(items: Vec<T>, f: impl Fn(T) -> R) -> Vec<R> {
    items.into_iter().map(f).collect()
}

/// Scans every mask in `GF(l)^5` (and every `alpha` for bordered codes) for self-dual codes.
///
/// Self-duality is decided by the direct generator check. The coefficient criterion is
/// evaluated on every candidate and any disagreement is recorded.
pub fn search_self_dual(
    ctx: &CyclotomicContext,
    field: &Field,
    kind: ConstructionKind,
    compute_distance: bool,
    budget: Budget,
) -> Result<SearchResult, Error> {
    let started = Stopwatch::start();
    let alphas: Vec<Option<Elem>> = match kind {
        ConstructionKind::Pure => vec![None],
        ConstructionKind::Bordered => field.elements().map(Some).collect(),
    };
    let candidates: Vec<Candidate> = alphas
        .iter()
        .flat_map(|&alpha| MaskVector::all(field).map(move |mask| Candidate { alpha, mask }))
        .collect();
    let scanned = candidates.len();
    let n_elem = field.from_int(ctx.n() as i64);

    let evaluated: Vec<Result<Evaluated, Error>> = map_ordered(candidates, |c| {
        let criterion = self_duality_criterion(ctx, field, kind, c.alpha, &c.mask)?.verdict;
        // the (0,0) entry of G G^T is 1 + alpha^2 + n
        let pruned = c
            .alpha
            .is_some_and(|a| field.add(field.mul(a, a), n_elem) != field.minus_one());
        let code = if pruned {
            None
        } else {
            let req = ConstructionRequest {
                p: ctx.p(),
                q: ctx.q(),
                field_order: field.order(),
                kind,
                mask: c.mask,
                alpha: c.alpha,
            };
            Some(req.build_with(ctx, field)?)
        };
        Ok(Evaluated {
            alpha: c.alpha,
            mask: c.mask,
            pruned,
            criterion,
            code,
        })
    });

    let mut pruned = 0;
    let mut hits = Vec::new();
    let mut disagreements = Vec::new();
    let mut complete = true;
    for ev in evaluated {
        let ev = ev?;
        if ev.pruned {
            pruned += 1;
        }
        let direct = ev.code.as_ref().is_some_and(|c| c.is_self_dual());
        if direct != ev.criterion {
            disagreements.push(Disagreement {
                alpha: ev.alpha,
                mask: ev.mask.0,
                criterion: ev.criterion,
                direct,
            });
        }
        if !direct {
            continue;
        }
        let code = ev.code.expect("self-dual candidates were built");
        let request = ConstructionRequest {
            p: ctx.p(),
            q: ctx.q(),
            field_order: field.order(),
            kind,
            mask: ev.mask,
            alpha: ev.alpha,
        };
        let t = Stopwatch::start();
        let distance = if compute_distance {
            let remaining = budget.time_limit.saturating_sub(started.elapsed());
            let b = Budget {
                max_evaluations: budget.max_evaluations,
                time_limit: remaining,
            };
            match code.min_distance(DistanceMethod::Auto, b) {
                Ok(d) => Some(d.clone()),
                Err(Error::BudgetExhausted { .. }) => {
                    complete = false;
                    None
                }
                Err(e) => return Err(e),
            }
        } else {
            None
        };
        let elapsed = compute_distance.then(|| t.elapsed().as_millis() as u64);
        hits.push(SearchHit {
            descriptor: request.descriptor(),
            alpha: ev.alpha,
            mask: ev.mask.0,
            report: CodeReport::new(&request, &code, distance.as_ref(), elapsed),
        });
    }
    Ok(SearchResult {
        p: ctx.p(),
        q: ctx.q(),
        l: field.order(),
        kind,
        scanned,
        pruned,
        hits,
        disagreements,
        complete,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct TableRow {
    pub table: String,
    pub construction: String,
    pub expected: [usize; 3],
    pub comment: String,
    pub report: CodeReport,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct TablesReport {
    pub rows: Vec<TableRow>,
    pub all_pass: bool,
}

/// Reference codes with their published parameters and annotations.
pub fn reference_codes() -> Vec<(&'static str, ConstructionRequest, [usize; 3], &'static str)> {
    vec![
        (
            "1",
            ConstructionRequest::pure(5, 7, 2, [1, 0, 1, 0, 1]),
            [70, 35, 10],
            "almost optimal",
        ),
        (
            "1",
            ConstructionRequest::bordered(5, 7, 2, 0, [0, 1, 0, 1, 0]),
            [72, 36, 12],
            "highest known",
        ),
        (
            "2",
            ConstructionRequest::pure(3, 5, 4, [1, 1, 0, V, U]),
            [30, 15, 6],
            "",
        ),
        (
            "2",
            ConstructionRequest::bordered(3, 5, 4, 0, [0, 0, 1, V, U]),
            [32, 16, 8],
            "almost optimal",
        ),
        (
            "1 (variant)",
            ConstructionRequest::bordered(7, 5, 2, 0, [0, 0, 1, 0, 1]),
            [72, 36, 12],
            "alternative construction with p = 7, q = 5",
        ),
    ]
}

/// Builds every reference code, computes its distance with the information-set method and
/// compares `[N, k, d]` against the published values.
pub fn reproduce_tables(budget: Budget) -> Result<TablesReport, Error> {
    let mut rows = Vec::new();
    for (table, request, expected, comment) in reference_codes() {
        let t = Stopwatch::start();
        let code = request.build()?;
        let (distance, d_err) = match code.min_distance(DistanceMethod::InfoSet, budget) {
            Ok(d) => (Some(d.clone()), false),
            Err(Error::BudgetExhausted { .. }) => (None, true),
            Err(e) => return Err(e),
        };
        let elapsed = t.elapsed().as_millis() as u64;
        let report = CodeReport::new(&request, &code, distance.as_ref(), Some(elapsed));
        let pass = !d_err
            && report.self_dual
            && [report.length, report.k, report.d.unwrap_or(0)] == expected;
        rows.push(TableRow {
            table: table.to_string(),
            construction: request.descriptor(),
            expected,
            comment: comment.to_string(),
            report,
            pass,
        });
    }
    let all_pass = rows.iter().all(|r| r.pass);
    Ok(TablesReport { rows, all_pass })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup(p: u64, q: u64, l: u32) -> (CyclotomicContext, Field) {
        (CyclotomicContext::new(p, q).unwrap(), Field::new(l).unwrap())
    }

    #[test]
    fn criterion_pure_binary() {
        let (ctx, f) = setup(5, 7, 2);
        let r = self_duality_criterion(&ctx, &f, ConstructionKind::Pure, None, &MaskVector([1, 0, 1, 0, 1]))
            .unwrap();
        assert!(r.verdict);
        assert_eq!(r.conditions.len(), 5);
        assert_eq!(r.closed_form_agrees, Some(true));
    }

    #[test]
    fn criterion_bordered_quaternary() {
        let (ctx, f) = setup(3, 5, 4);
        let r = self_duality_criterion(
            &ctx,
            &f,
            ConstructionKind::Bordered,
            Some(0),
            &MaskVector([0, 0, 1, V, U]),
        )
        .unwrap();
        assert!(r.verdict);
        assert_eq!(r.coefficients.0, [0, 1, 1, 1, 1]);
        assert_eq!(r.conditions.len(), 7);
    }

    #[test]
    fn criterion_ternary_fails_first_condition() {
        let (ctx, f) = setup(5, 7, 3);
        let r = self_duality_criterion(&ctx, &f, ConstructionKind::Pure, None, &MaskVector([1, 0, 0, 0, 0]))
            .unwrap();
        assert!(!r.verdict);
        assert!(!r.conditions[0].passed);
        assert!(r.conditions[1..].iter().all(|c| c.passed));
        assert_eq!(r.coefficients.0[0], 1);
    }

    #[test]
    fn bordered_criterion_needs_alpha() {
        let (ctx, f) = setup(5, 7, 2);
        assert!(self_duality_criterion(&ctx, &f, ConstructionKind::Bordered, None, &MaskVector([0; 5])).is_err());
    }

    #[test]
    fn binary_family_members() {
        let fam = binary_family(5, 7).unwrap();
        let names: Vec<String> = fam.iter().map(|c| c.request.descriptor()).collect();
        assert!(names.contains(&"GP_35(1,0,1,0,1)".to_string()));
        assert!(names.contains(&"GB_36(0; 0,1,0,1,0)".to_string()));
        let fam = binary_family(7, 5).unwrap();
        let names: Vec<String> = fam.iter().map(|c| c.request.descriptor()).collect();
        assert!(names.contains(&"GP_35(1,1,0,0,1)".to_string()));
        assert!(names.contains(&"GB_36(0; 0,0,1,1,0)".to_string()));
    }

    #[test]
    fn family_hypothesis_errors() {
        let err = binary_family(3, 5).unwrap_err();
        assert!(err.to_string().contains("(p+q)/4 = 2 is even"), "{err}");
        let err = quaternary_family(5, 7).unwrap_err();
        assert!(err.to_string().contains("(p+q)/4 = 3 is odd"), "{err}");
        let err = quaternary_family(3, 7).unwrap_err().to_string();
        assert!(err.contains("(p−1)(q−1)/4 = 3 is odd"), "{err}");
        assert!(err.contains("(p+q)/4 = 10/4 is not an integer"), "{err}");
        let err = binary_family(5, 13).unwrap_err();
        assert!(err.to_string().contains("gcd"), "{err}");
    }

    #[test]
    fn quaternary_family_members() {
        let fam = quaternary_family(3, 5).unwrap();
        let names: Vec<String> = fam.iter().map(|c| c.request.descriptor()).collect();
        assert!(names.contains(&"GP_15(1,1,0,u+1,u)".to_string()));
        assert!(names.contains(&"GB_16(0; 0,0,1,u+1,u)".to_string()));
        let fam = quaternary_family(5, 11).unwrap();
        assert_eq!(fam.len(), 4);
        let lens: Vec<usize> = fam.iter().map(|c| c.code.length()).collect();
        assert_eq!(lens, vec![110, 110, 112, 112]);
    }

    // hit lists frozen from an independent numpy sweep of G G^T over all masks
    #[test]
    fn search_hits_pure() {
        let (ctx, f) = setup(5, 7, 2);
        let r = search_self_dual(&ctx, &f, ConstructionKind::Pure, false, Budget::default()).unwrap();
        let masks: Vec<[Elem; 5]> = r.hits.iter().map(|h| h.mask).collect();
        assert_eq!(masks, vec![[1, 0, 0, 0, 0], [1, 0, 1, 0, 1], [1, 0, 1, 1, 0]]);
        assert_eq!(r.scanned, 32);
        assert!(r.disagreements.is_empty());

        let (ctx, f) = setup(3, 5, 4);
        let r = search_self_dual(&ctx, &f, ConstructionKind::Pure, false, Budget::default()).unwrap();
        let masks: Vec<[Elem; 5]> = r.hits.iter().map(|h| h.mask).collect();
        assert_eq!(masks, vec![[1, 0, 0, 0, 0], [1, 1, 0, U, V], [1, 1, 0, V, U]]);
    }

    #[test]
    fn search_hits_bordered() {
        let (ctx, f) = setup(5, 7, 2);
        let r = search_self_dual(&ctx, &f, ConstructionKind::Bordered, false, Budget::default()).unwrap();
        let hits: Vec<(Option<Elem>, [Elem; 5])> = r.hits.iter().map(|h| (h.alpha, h.mask)).collect();
        assert_eq!(
            hits,
            vec![
                (Some(0), [0, 1, 0, 0, 1]),
                (Some(0), [0, 1, 0, 1, 0]),
                (Some(0), [0, 1, 1, 1, 1])
            ]
        );
        assert_eq!(r.scanned, 64);
        assert_eq!(r.pruned, 32);
        assert!(r.disagreements.is_empty());
    }

    #[test]
    fn search_with_distances() {
        let (ctx, f) = setup(3, 5, 2);
        let r = search_self_dual(&ctx, &f, ConstructionKind::Pure, true, Budget::default()).unwrap();
        assert_eq!(r.hits.len(), 1);
        assert_eq!(r.hits[0].report.d, Some(2));
        assert!(r.complete);
    }

    #[test]
    fn descriptors() {
        let r = ConstructionRequest::bordered(3, 5, 4, 0, [0, 0, 1, V, U]);
        assert_eq!(r.descriptor(), "GB_16(0; 0,0,1,u+1,u)");
    }
}
