//! Minimum distance of linear codes.
//!
//! Two methods share one enumeration core:
//!
//! * `Exhaustive` walks every projective message `(l^k - 1)/(l - 1)` of a systematic generator.
//! * `InfoSet` is the Brouwer-Zimmermann scheme. Several systematic generators are formed on
//!   information sets chosen to overlap as little as possible. For `w = 1, 2, ...` every message
//!   of weight `w` is enumerated in each generator. A generator with `r` pivots on fresh columns
//!   guarantees that every codeword not yet seen has at least `w + 1 - (k - r)` nonzeros among
//!   those columns; summing over generators gives the lower bound. The search stops when the
//!   lower bound reaches the lightest codeword seen.
//!
//! Rows are packed before enumeration: one bit per symbol over GF(2), two bit planes over GF(4)
//! and one word per symbol otherwise. Messages are enumerated by choosing `w` rows in increasing
//! order with the leading coefficient fixed to 1, so every projective point appears once.

use std::cmp::Ordering;
use std::fmt;
use std::sync::atomic::{AtomicBool, Ordering as AtomicOrdering};
use std::time::Duration;

use serde::Serialize;

use crate::arith::pow_mod;
use crate::clock;
use crate::gf::{Elem, Field};
use crate::matrix::GfMatrix;
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DistanceMethod {
    Exhaustive,
    #[serde(rename = "infoset")]
    InfoSet,
    Auto,
}

impl fmt::Display for DistanceMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DistanceMethod::Exhaustive => "exhaustive",
            DistanceMethod::InfoSet => "infoset",
            DistanceMethod::Auto => "auto",
        })
    }
}

impl std::str::FromStr for DistanceMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "exhaustive" => Ok(DistanceMethod::Exhaustive),
            "infoset" => Ok(DistanceMethod::InfoSet),
            "auto" => Ok(DistanceMethod::Auto),
            _ => Err(Error::Parse(format!("unknown distance method {s:?}"))),
        }
    }
}

/// `auto` runs exhaustively while `l^k` stays at or below `2^AUTO_EXHAUSTIVE_BITS`.
pub const AUTO_EXHAUSTIVE_BITS: f64 = 26.0;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_evaluations: u64,
    pub time_limit: Duration,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_evaluations: 1_000_000_000,
            time_limit: Duration::from_secs(15 * 60),
        }
    }
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget {
            max_evaluations: u64::MAX,
            time_limit: Duration::from_secs(u64::MAX / 4),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceResult {
    pub distance: usize,
    pub certificate: Vec<Elem>,
    /// The method that actually ran (`Auto` is resolved).
    pub method: DistanceMethod,
    pub evaluations: u64,
    /// Number of systematic generators used.
    pub generators: usize,
}

/// Resolves `Auto` for a code of dimension `k` over GF(`order`).
pub fn resolve_method(method: DistanceMethod, order: u32, k: usize) -> DistanceMethod {
    match method {
        DistanceMethod::Auto => {
            if k as f64 * (order as f64).log2() <= AUTO_EXHAUSTIVE_BITS {
                DistanceMethod::Exhaustive
            } else {
                DistanceMethod::InfoSet
            }
        }
        m => m,
    }
}

/// Minimum Hamming weight of a nonzero vector in the row space of `generator`.
pub fn minimum_distance(
    generator: &GfMatrix,
    method: DistanceMethod,
    budget: Budget,
) -> Result<DistanceResult, Error> {
    let field = generator.field().clone();
    let basis = generator.echelon();
    let k = basis.pivots.len();
    if k == 0 {
        return Err(Error::EmptyCode);
    }
    let method = resolve_method(method, field.order(), k);
    let systems = match method {
        DistanceMethod::Exhaustive => vec![System {
            matrix: basis.matrix.clone(),
            fresh: k,
        }],
        _ => information_sets(&basis.matrix),
    };
    match field.order() {
        2 => run(&Binary::new(generator.cols()), &field, &systems, method, budget),
        4 => run(&Quaternary::new(generator.cols()), &field, &systems, method, budget),
        _ => run(&Symbols::new(&field, generator.cols()), &field, &systems, method, budget),
    }
}

struct System {
    matrix: GfMatrix,
    /// Pivot columns not used by any earlier system.
    fresh: usize,
}

/// Systematic generators on greedily chosen, least-overlapping information sets.
fn information_sets(basis: &GfMatrix) -> Vec<System> {
    let n = basis.cols();
    let mut used = vec![false; n];
    let mut out = Vec::new();
    loop {
        let order: Vec<usize> = (0..n)
            .filter(|&c| !used[c])
            .chain((0..n).filter(|&c| used[c]))
            .collect();
        let ech = basis.echelon_with_order(&order);
        let fresh: Vec<usize> = ech.pivots.iter().copied().filter(|&c| !used[c]).collect();
        if fresh.is_empty() {
            break;
        }
        for &c in &fresh {
            used[c] = true;
        }
        out.push(System {
            matrix: ech.matrix,
            fresh: fresh.len(),
        });
        if used.iter().all(|&u| u) {
            break;
        }
    }
    out
}

/// Packed codeword arithmetic. Vectors are `stride()` words long.
trait Kernel: Sync {
    fn stride(&self) -> usize;
    fn pack(&self, symbols: &[Elem]) -> Vec<u64>;
    fn unpack(&self, v: &[u64]) -> Vec<Elem>;
    fn add(&self, dst: &mut [u64], a: &[u64], b: &[u64]);
    fn weight(&self, v: &[u64]) -> usize;
    /// Lexicographic order on the unpacked symbol sequences.
    fn cmp_lex(&self, a: &[u64], b: &[u64]) -> Ordering;
    /// Scales `v` so its first nonzero symbol is 1.
    fn normalize(&self, v: &mut [u64]);
}

struct Binary {
    len: usize,
    words: usize,
}

impl Binary {
    fn new(len: usize) -> Self {
        Binary {
            len,
            words: len.div_ceil(64),
        }
    }
}

impl Kernel for Binary {
    fn stride(&self) -> usize {
        self.words
    }

    fn pack(&self, symbols: &[Elem]) -> Vec<u64> {
        let mut v = vec![0u64; self.words];
        for (j, &s) in symbols.iter().enumerate() {
            v[j / 64] |= (s as u64 & 1) << (j % 64);
        }
        v
    }

    fn unpack(&self, v: &[u64]) -> Vec<Elem> {
        (0..self.len)
            .map(|j| ((v[j / 64] >> (j % 64)) & 1) as Elem)
            .collect()
    }

    #[inline]
    fn add(&self, dst: &mut [u64], a: &[u64], b: &[u64]) {
        for ((d, x), y) in dst.iter_mut().zip(a).zip(b) {
            *d = x ^ y;
        }
    }

    #[inline]
    fn weight(&self, v: &[u64]) -> usize {
        v.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn cmp_lex(&self, a: &[u64], b: &[u64]) -> Ordering {
        for (x, y) in a.iter().zip(b) {
            let diff = x ^ y;
            if diff != 0 {
                let bit = diff.trailing_zeros();
                return ((x >> bit) & 1).cmp(&((y >> bit) & 1));
            }
        }
        Ordering::Equal
    }

    fn normalize(&self, _v: &mut [u64]) {}
}

/// GF(4) vectors as two bit planes: low bits of the codes, then high bits.
struct Quaternary {
    len: usize,
    words: usize,
}

impl Quaternary {
    fn new(len: usize) -> Self {
        Quaternary {
            len,
            words: len.div_ceil(64),
        }
    }

    #[inline]
    fn symbol(&self, v: &[u64], j: usize) -> u64 {
        let (lo, hi) = v.split_at(self.words);
        self.symbol_pair(lo, hi, j)
    }

    #[inline]
    fn symbol_pair(&self, lo: &[u64], hi: &[u64], j: usize) -> u64 {
        ((lo[j / 64] >> (j % 64)) & 1) | (((hi[j / 64] >> (j % 64)) & 1) << 1)
    }
}

impl Kernel for Quaternary {
    fn stride(&self) -> usize {
        2 * self.words
    }

    fn pack(&self, symbols: &[Elem]) -> Vec<u64> {
        let mut v = vec![0u64; 2 * self.words];
        for (j, &s) in symbols.iter().enumerate() {
            v[j / 64] |= (s as u64 & 1) << (j % 64);
            v[self.words + j / 64] |= ((s as u64 >> 1) & 1) << (j % 64);
        }
        v
    }

    fn unpack(&self, v: &[u64]) -> Vec<Elem> {
        (0..self.len).map(|j| self.symbol(v, j) as Elem).collect()
    }

    #[inline]
    fn add(&self, dst: &mut [u64], a: &[u64], b: &[u64]) {
        for ((d, x), y) in dst.iter_mut().zip(a).zip(b) {
            *d = x ^ y;
        }
    }

    #[inline]
    fn weight(&self, v: &[u64]) -> usize {
        let (lo, hi) = v.split_at(self.words);
        lo.iter()
            .zip(hi)
            .map(|(a, b)| (a | b).count_ones() as usize)
            .sum()
    }

    fn cmp_lex(&self, a: &[u64], b: &[u64]) -> Ordering {
        for w in 0..self.words {
            let diff = (a[w] ^ b[w]) | (a[self.words + w] ^ b[self.words + w]);
            if diff != 0 {
                let j = w * 64 + diff.trailing_zeros() as usize;
                return self.symbol(a, j).cmp(&self.symbol(b, j));
            }
        }
        Ordering::Equal
    }

    fn normalize(&self, v: &mut [u64]) {
        let Some(j) = (0..self.len).find(|&j| self.symbol(v, j) != 0) else {
            return;
        };
        let (lo, hi) = v.split_at_mut(self.words);
        match self.symbol_pair(lo, hi, j) {
            // times u+1: (a + bu)(u + 1) = (a + b) + au
            2 => {
                for (l, h) in lo.iter_mut().zip(hi.iter_mut()) {
                    (*l, *h) = (*l ^ *h, *l);
                }
            }
            // times u: (a + bu)u = b + (a + b)u
            3 => {
                for (l, h) in lo.iter_mut().zip(hi.iter_mut()) {
                    (*l, *h) = (*h, *l ^ *h);
                }
            }
            _ => {}
        }
    }
}

/// One word per symbol with modular addition; used for odd prime fields.
struct Symbols {
    len: usize,
    modulus: u64,
}

impl Symbols {
    fn new(field: &Field, len: usize) -> Self {
        Symbols {
            len,
            modulus: field.order() as u64,
        }
    }
}

impl Kernel for Symbols {
    fn stride(&self) -> usize {
        self.len
    }

    fn pack(&self, symbols: &[Elem]) -> Vec<u64> {
        symbols.iter().map(|&s| s as u64).collect()
    }

    fn unpack(&self, v: &[u64]) -> Vec<Elem> {
        v.iter().map(|&s| s as Elem).collect()
    }

    #[inline]
    fn add(&self, dst: &mut [u64], a: &[u64], b: &[u64]) {
        let p = self.modulus;
        for ((d, x), y) in dst.iter_mut().zip(a).zip(b) {
            let s = x + y;
            *d = if s >= p { s - p } else { s };
        }
    }

    #[inline]
    fn weight(&self, v: &[u64]) -> usize {
        v.iter().filter(|&&s| s != 0).count()
    }

    fn cmp_lex(&self, a: &[u64], b: &[u64]) -> Ordering {
        a.cmp(b)
    }

    fn normalize(&self, v: &mut [u64]) {
        let Some(&lead) = v.iter().find(|&&s| s != 0) else {
            return;
        };
        if lead != 1 {
            let inv = pow_mod(lead, self.modulus - 2, self.modulus);
            for s in v.iter_mut() {
                *s = *s * inv % self.modulus;
            }
        }
    }
}

/// Rows of a systematic generator with every nonzero scalar multiple pre-packed.
struct PackedSystem {
    rows: usize,
    scalars: usize,
    stride: usize,
    data: Vec<u64>,
    fresh: usize,
}

impl PackedSystem {
    fn new<K: Kernel>(kernel: &K, field: &Field, system: &System) -> Self {
        let scalars = field.order() as usize - 1;
        let stride = kernel.stride();
        let mut data = Vec::with_capacity(system.matrix.rows() * scalars * stride);
        for i in 0..system.matrix.rows() {
            let row = system.matrix.row(i);
            for s in 1..=scalars as Elem {
                let scaled: Vec<Elem> = row.iter().map(|&x| field.mul(s, x)).collect();
                data.extend(kernel.pack(&scaled));
            }
        }
        PackedSystem {
            rows: system.matrix.rows(),
            scalars,
            stride,
            data,
            fresh: system.fresh,
        }
    }

    /// Packed `scalar_idx + 1` times row `row`.
    #[inline]
    fn multiple(&self, row: usize, scalar_idx: usize) -> &[u64] {
        let off = (row * self.scalars + scalar_idx) * self.stride;
        &self.data[off..off + self.stride]
    }

    fn redundancy(&self) -> usize {
        self.rows - self.fresh
    }
}

/// Lightest vector seen, ties broken towards the lexicographically smallest.
#[derive(Clone)]
struct Best {
    weight: usize,
    word: Vec<u64>,
}

impl Best {
    fn offer<K: Kernel>(slot: &mut Option<Best>, kernel: &K, weight: usize, word: &[u64]) {
        if slot.as_ref().is_some_and(|b| weight > b.weight) {
            return;
        }
        let mut word = word.to_vec();
        kernel.normalize(&mut word);
        let better = match slot {
            None => true,
            Some(b) => {
                weight < b.weight
                    || (weight == b.weight && kernel.cmp_lex(&word, &b.word) == Ordering::Less)
            }
        };
        if better {
            *slot = Some(Best { weight, word });
        }
    }

    fn merge<K: Kernel>(kernel: &K, a: Option<Best>, b: Option<Best>) -> Option<Best> {
        match (a, b) {
            (None, x) | (x, None) => x,
            (Some(a), Some(b)) => {
                let mut slot = Some(a);
                Best::offer(&mut slot, kernel, b.weight, &b.word);
                slot
            }
        }
    }
}

struct StageOutcome {
    best: Option<Best>,
    evaluations: u64,
}

/// Number of projective messages of weight `w` over `k` rows with `scalars` nonzero values.
fn stage_size(k: usize, w: usize, scalars: usize) -> u64 {
    let c = binomial(k as u64, w as u64);
    let mult = (scalars as u64).checked_pow(w as u32 - 1).unwrap_or(u64::MAX);
    c.saturating_mul(mult)
}

pub(crate) fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

struct Deadline<'a> {
    at: clock::Deadline,
    aborted: &'a AtomicBool,
}

impl Deadline<'_> {
    fn expired(&self) -> bool {
        if self.aborted.load(AtomicOrdering::Relaxed) {
            return true;
        }
        if self.at.passed() {
            self.aborted.store(true, AtomicOrdering::Relaxed);
            return true;
        }
        false
    }
}

/// Enumerates every message of weight `w` whose lowest chosen row is `first`.
fn enumerate_from<K: Kernel>(
    kernel: &K,
    sys: &PackedSystem,
    w: usize,
    first: usize,
    deadline: &Deadline<'_>,
) -> StageOutcome {
    let stride = sys.stride;
    let mut bufs = vec![0u64; w * stride];
    bufs[..stride].copy_from_slice(sys.multiple(first, 0));
    let mut out = StageOutcome {
        best: None,
        evaluations: 0,
    };
    if w == 1 {
        out.evaluations = 1;
        Best::offer(&mut out.best, kernel, kernel.weight(&bufs[..stride]), &bufs[..stride]);
        return out;
    }
    // indices[d] and scalar[d] describe the row chosen at depth d >= 1
    let mut indices = vec![0usize; w];
    let mut scalar = vec![0usize; w];
    indices[0] = first;
    let mut depth = 1;
    indices[1] = first + 1;
    scalar[1] = 0;
    let mut since_check = 0u32;
    loop {
        // capacity: rows left must fit the remaining depths
        if indices[depth] + (w - 1 - depth) >= sys.rows {
            depth -= 1;
            if depth == 0 {
                break;
            }
            advance(&mut indices, &mut scalar, depth, sys.scalars);
            continue;
        }
        let (prev, cur) = bufs.split_at_mut(depth * stride);
        let prev = &prev[(depth - 1) * stride..];
        let cur = &mut cur[..stride];
        kernel.add(cur, prev, sys.multiple(indices[depth], scalar[depth]));
        if depth == w - 1 {
            out.evaluations += 1;
            let wt = kernel.weight(cur);
            let keep = match &out.best {
                None => true,
                Some(b) => wt <= b.weight,
            };
            if keep {
                Best::offer(&mut out.best, kernel, wt, cur);
            }
            since_check += 1;
            if since_check == 1 << 16 {
                since_check = 0;
                if deadline.expired() {
                    return out;
                }
            }
            advance(&mut indices, &mut scalar, depth, sys.scalars);
        } else {
            depth += 1;
            indices[depth] = indices[depth - 1] + 1;
            scalar[depth] = 0;
        }
    }
    out
}

#[inline]
fn advance(indices: &mut [usize], scalar: &mut [usize], depth: usize, scalars: usize) {
    scalar[depth] += 1;
    if scalar[depth] == scalars {
        scalar[depth] = 0;
        indices[depth] += 1;
    }
}

#[cfg(feature = "parallel")]
fn run_stage<K: Kernel>(
    kernel: &K,
    sys: &PackedSystem,
    w: usize,
    deadline: &Deadline<'_>,
) -> StageOutcome {
    use rayon::prelude::*;
    let firsts = sys.rows + 1 - w;
    (0..firsts)
        .into_par_iter()
        .map(|first| enumerate_from(kernel, sys, w, first, deadline))
        .reduce(
            || StageOutcome {
                best: None,
                evaluations: 0,
            },
            |a, b| StageOutcome {
                best: Best::merge(kernel, a.best, b.best),
                evaluations: a.evaluations + b.evaluations,
            },
        )
}

#[cfg(not(feature = "parallel"))]
fn run_stage<K: Kernel>(
    kernel: &K,
    sys: &PackedSystem,
    w: usize,
    deadline: &Deadline<'_>,
) -> StageOutcome {
    let firsts = sys.rows + 1 - w;
    (0..firsts)
        .map(|first| enumerate_from(kernel, sys, w, first, deadline))
        .fold(
            StageOutcome {
                best: None,
                evaluations: 0,
            },
            |a, b| StageOutcome {
                best: Best::merge(kernel, a.best, b.best),
                evaluations: a.evaluations + b.evaluations,
            },
        )
}

fn run<K: Kernel>(
    kernel: &K,
    field: &Field,
    systems: &[System],
    method: DistanceMethod,
    budget: Budget,
) -> Result<DistanceResult, Error> {
    let packed: Vec<PackedSystem> = systems
        .iter()
        .map(|s| PackedSystem::new(kernel, field, s))
        .collect();
    let k = packed[0].rows;
    let scalars = packed[0].scalars;
    let aborted = AtomicBool::new(false);
    let deadline = Deadline {
        at: clock::Deadline::after(budget.time_limit),
        aborted: &aborted,
    };

    // seed the upper bound with the first basis row
    let mut best: Option<Best> = None;
    let seed = packed[0].multiple(0, 0);
    Best::offer(&mut best, kernel, kernel.weight(seed), seed);

    let mut completed = vec![0usize; packed.len()];
    let mut evaluations = 0u64;
    let lower_bound = |completed: &[usize]| -> usize {
        let sum: usize = packed
            .iter()
            .zip(completed)
            .map(|(s, &w)| (w + 1).saturating_sub(s.redundancy()))
            .sum();
        sum.max(1)
    };
    let exhausted = |lower: usize, best: &Option<Best>| {
        let b = best.as_ref().expect("seeded");
        Error::BudgetExhausted {
            lower,
            upper: b.weight,
            certificate: Some(kernel.unpack(&b.word)),
        }
    };

    for w in 1..=k {
        for (idx, sys) in packed.iter().enumerate() {
            if method == DistanceMethod::Exhaustive && idx > 0 {
                break;
            }
            // a system contributes nothing to the bound until w exceeds its redundancy
            if idx > 0 && w < sys.redundancy() {
                continue;
            }
            let size = stage_size(k, w, scalars);
            if evaluations.saturating_add(size) > budget.max_evaluations {
                return Err(exhausted(lower_bound(&completed), &best));
            }
            let stage = run_stage(kernel, sys, w, &deadline);
            evaluations += stage.evaluations;
            if let Some(b) = stage.best {
                Best::offer(&mut best, kernel, b.weight, &b.word);
            }
            if aborted.load(AtomicOrdering::Relaxed) {
                return Err(exhausted(lower_bound(&completed), &best));
            }
            completed[idx] = w;
            if method == DistanceMethod::InfoSet
                && lower_bound(&completed) >= best.as_ref().unwrap().weight
            {
                return Ok(finish(kernel, best, method, evaluations, packed.len()));
            }
        }
    }
    // the first system was enumerated completely
    Ok(finish(kernel, best, method, evaluations, packed.len()))
}

fn finish<K: Kernel>(
    kernel: &K,
    best: Option<Best>,
    method: DistanceMethod,
    evaluations: u64,
    generators: usize,
) -> DistanceResult {
    let b = best.expect("seeded");
    DistanceResult {
        distance: b.weight,
        certificate: kernel.unpack(&b.word),
        method,
        evaluations,
        generators,
    }
}
