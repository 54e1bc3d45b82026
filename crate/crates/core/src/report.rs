//! One structured record per constructed code.

use std::fmt;

use serde::Serialize;

use crate::bound::self_dual_bound;
use crate::code::LinearCode;
use crate::constructions::ConstructionRequest;
use crate::distance::DistanceResult;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CodeReport {
    /// Construction descriptor; empty for codes read from a generator file.
    pub p: Option<u64>,
    pub q: Option<u64>,
    pub l: u32,
    pub kind: Option<String>,
    pub alpha: Option<String>,
    pub m: Option<String>,
    #[serde(rename = "N")]
    pub length: usize,
    pub k: usize,
    pub d: Option<usize>,
    pub method: Option<String>,
    pub self_dual: bool,
    pub bound: usize,
    pub extremal: Option<bool>,
    pub elapsed_ms: Option<u64>,
}

impl CodeReport {
    pub fn new(
        request: &ConstructionRequest,
        code: &LinearCode,
        distance: Option<&DistanceResult>,
        elapsed_ms: Option<u64>,
    ) -> Self {
        let field = code.field();
        CodeReport {
            p: Some(request.p),
            q: Some(request.q),
            kind: Some(request.kind.to_string()),
            alpha: request.alpha.map(|a| field.token(a)),
            m: Some(request.mask.format(field)),
            ..CodeReport::from_code(code, distance, elapsed_ms)
        }
    }

    /// A report without construction parameters.
    pub fn from_code(
        code: &LinearCode,
        distance: Option<&DistanceResult>,
        elapsed_ms: Option<u64>,
    ) -> Self {
        let field = code.field();
        let (bound, _) = self_dual_bound(field.order(), code.length());
        let d = distance.map(|r| r.distance);
        CodeReport {
            p: None,
            q: None,
            l: field.order(),
            kind: None,
            alpha: None,
            m: None,
            length: code.length(),
            k: code.dimension(),
            d,
            method: distance.map(|r| r.method.to_string()),
            self_dual: code.is_self_dual(),
            bound,
            extremal: d.map(|d| d == bound),
            elapsed_ms,
        }
    }

    /// `[N, k, d]`, with `?` for an unknown distance.
    pub fn parameters(&self) -> String {
        match self.d {
            Some(d) => format!("[{}, {}, {}]", self.length, self.k, d),
            None => format!("[{}, {}, ?]", self.length, self.k),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

impl fmt::Display for CodeReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let (Some(p), Some(q), Some(kind), Some(m)) = (self.p, self.q, &self.kind, &self.m) {
            write!(
                f,
                "p={p} q={q} l={} kind={kind} alpha={} m=({m}) ",
                self.l,
                self.alpha.as_deref().unwrap_or("-"),
            )?;
        } else {
            write!(f, "l={} ", self.l)?;
        }
        write!(
            f,
            "params={} self_dual={} bound={}",
            self.parameters(),
            self.self_dual,
            self.bound
        )?;
        if let Some(e) = self.extremal {
            write!(f, " extremal={e}")?;
        }
        if let Some(m) = &self.method {
            write!(f, " method={m}")?;
        }
        if let Some(ms) = self.elapsed_ms {
            write!(f, " elapsed_ms={ms}")?;
        }
        Ok(())
    }
}
