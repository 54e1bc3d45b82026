//! Dense matrices over a [`Field`], plus the plain-text matrix format.
//!
//! The text format is a header line `field=<l> rows=<r> cols=<c>` followed by one line per row
//! with entries separated by single spaces. GF(4) entries are written `0 1 u v`, `v` being `u+1`.

use std::fmt::{self, Write as _};

use crate::gf::{Elem, Field};
use crate::Error;

#[derive(Clone, PartialEq, Eq)]
pub struct GfMatrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

/// Reduced row echelon form: nonzero rows only, with the pivot column of each row.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub matrix: GfMatrix,
    pub pivots: Vec<usize>,
}

impl GfMatrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Self {
        GfMatrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: &Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_fn(
        field: &Field,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Elem,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        GfMatrix {
            field: field.clone(),
            rows,
            cols,
            data,
        }
    }

    /// Builds a matrix from row vectors, validating every entry against the field.
    pub fn from_rows(field: &Field, rows: &[Vec<Elem>], cols: usize) -> Result<Self, Error> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::Dimension(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            for &e in row {
                data.push(field.check(e)?);
            }
        }
        Ok(GfMatrix {
            field: field.clone(),
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Elem {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Elem>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&e| e == 0)
    }

    fn same_shape(&self, other: &GfMatrix, what: &str) -> Result<(), Error> {
        if self.field != other.field || self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Dimension(format!(
                "{what}: {}x{} over {} vs {}x{} over {}",
                self.rows, self.cols, self.field, other.rows, other.cols, other.field
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &GfMatrix) -> Result<GfMatrix, Error> {
        self.same_shape(other, "add")?;
        let f = &self.field;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| f.add(a, b))
            .collect();
        Ok(GfMatrix {
            data,
            ..self.clone()
        })
    }

    pub fn scale(&self, s: Elem) -> GfMatrix {
        let f = &self.field;
        GfMatrix {
            data: self.data.iter().map(|&a| f.mul(s, a)).collect(),
            ..self.clone()
        }
    }

    pub fn mul(&self, other: &GfMatrix) -> Result<GfMatrix, Error> {
        if self.field != other.field || self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "mul: {}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = GfMatrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            let acc = &mut out.data[i * other.cols..(i + 1) * other.cols];
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for (slot, &b) in acc.iter_mut().zip(other.row(k)) {
                    *slot = f.add(*slot, f.mul(a, b));
                }
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> GfMatrix {
        GfMatrix::from_fn(&self.field, self.cols, self.rows, |i, j| self.get(j, i))
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &GfMatrix) -> Result<GfMatrix, Error> {
        if self.field != other.field || self.rows != other.rows {
            return Err(Error::Dimension("hstack needs equal row counts".into()));
        }
        Ok(GfMatrix::from_fn(
            &self.field,
            self.rows,
            self.cols + other.cols,
            |i, j| {
                if j < self.cols {
                    self.get(i, j)
                } else {
                    other.get(i, j - self.cols)
                }
            },
        ))
    }

    /// Product with the transpose, `self * self^T`, without materializing the transpose.
    pub fn gram(&self) -> GfMatrix {
        let f = &self.field;
        GfMatrix::from_fn(f, self.rows, self.rows, |i, j| {
            dot(f, self.row(i), self.row(j))
        })
    }

    /// Gauss-Jordan elimination that scans columns in the given order.
    pub fn echelon_with_order(&self, order: &[usize]) -> Echelon {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for &c in order {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| m.get(i, c) != 0) else {
                continue;
            };
            m.swap_rows(r, pr);
            let inv = f.inv(m.get(r, c)).expect("pivot is nonzero");
            for j in 0..m.cols {
                let v = m.get(r, j);
                m.set(r, j, f.mul(inv, v));
            }
            for i in 0..m.rows {
                let factor = m.get(i, c);
                if i == r || factor == 0 {
                    continue;
                }
                let neg = f.neg(factor);
                for j in 0..m.cols {
                    let v = f.add(m.get(i, j), f.mul(neg, m.get(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        m.data.truncate(r * m.cols);
        m.rows = r;
        Echelon { matrix: m, pivots }
    }

    pub fn echelon(&self) -> Echelon {
        let order: Vec<usize> = (0..self.cols).collect();
        self.echelon_with_order(&order)
    }

    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    /// A basis of `{x : self * x^T = 0}`, one vector per row.
    pub fn null_space(&self) -> GfMatrix {
        let f = &self.field;
        let ech = self.echelon();
        let is_pivot: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (r, &c) in ech.pivots.iter().enumerate() {
                v[c] = Some(r);
            }
            v
        };
        let free: Vec<usize> = (0..self.cols).filter(|&c| is_pivot[c].is_none()).collect();
        let mut basis = GfMatrix::zeros(f, free.len(), self.cols);
        for (bi, &fc) in free.iter().enumerate() {
            basis.set(bi, fc, 1);
            for (r, &pc) in ech.pivots.iter().enumerate() {
                basis.set(bi, pc, f.neg(ech.matrix.get(r, fc)));
            }
        }
        basis
    }

    /// Whether `v` lies in the row space.
    pub fn spans(&self, v: &[Elem]) -> bool {
        let mut rows = self.row_vecs();
        rows.push(v.to_vec());
        let ext = GfMatrix::from_rows(&self.field, &rows, self.cols).expect("consistent shape");
        ext.rank() == self.rank()
    }

    /// Whether both matrices have the same row space.
    pub fn same_row_space(&self, other: &GfMatrix) -> bool {
        if self.field != other.field || self.cols != other.cols {
            return false;
        }
        let a = self.echelon();
        let b = other.echelon();
        a.pivots == b.pivots && a.matrix.data == b.matrix.data
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        writeln!(
            s,
            "field={} rows={} cols={}",
            self.field.order(),
            self.rows,
            self.cols
        )
        .unwrap();
        for i in 0..self.rows {
            let line: Vec<String> = self
                .row(i)
                .iter()
                .map(|&e| self.field.matrix_token(e))
                .collect();
            s.push_str(&line.join(" "));
            s.push('\n');
        }
        s
    }

    pub fn from_text(text: &str) -> Result<GfMatrix, Error> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty matrix text".into()))?;
        let mut order = None;
        let mut rows = None;
        let mut cols = None;
        for part in header.split_whitespace() {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("bad header field {part:?}")))?;
            let v: usize = v
                .parse()
                .map_err(|_| Error::Parse(format!("bad header value {part:?}")))?;
            match k {
                "field" => order = Some(v),
                "rows" => rows = Some(v),
                "cols" => cols = Some(v),
                _ => return Err(Error::Parse(format!("unknown header key {k:?}"))),
            }
        }
        let (Some(order), Some(rows), Some(cols)) = (order, rows, cols) else {
            return Err(Error::Parse("header needs field, rows and cols".into()));
        };
        let field = Field::new(order as u32)?;
        let mut data = Vec::with_capacity(rows * cols);
        for (i, line) in lines.enumerate() {
            if i >= rows {
                return Err(Error::Parse(format!("more than {rows} rows")));
            }
            let entries: Vec<&str> = line.split(' ').collect();
            if entries.len() != cols {
                return Err(Error::Parse(format!(
                    "row {i} has {} entries, expected {cols}",
                    entries.len()
                )));
            }
            for t in entries {
                data.push(field.parse(t)?);
            }
        }
        if data.len() != rows * cols {
            return Err(Error::Parse(format!(
                "expected {rows} rows, found {}",
                data.len() / cols.max(1)
            )));
        }
        Ok(GfMatrix {
            field,
            rows,
            cols,
            data,
        })
    }
}

pub fn dot(f: &Field, a: &[Elem], b: &[Elem]) -> Elem {
    a.iter()
        .zip(b)
        .fold(0, |acc, (&x, &y)| f.add(acc, f.mul(x, y)))
}

impl fmt::Debug for GfMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}
