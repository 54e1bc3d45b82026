//! Linear codes given by a generator matrix, and the double circulant generators.

use std::sync::OnceLock;

use crate::circulant::{mask_matrix, MaskVector};
use crate::cyclotomy::CyclotomicContext;
use crate::distance::{minimum_distance, Budget, DistanceMethod, DistanceResult};
use crate::gf::{Elem, Field};
use crate::matrix::GfMatrix;
use crate::Error;

#[derive(Debug)]
pub struct LinearCode {
    generator: GfMatrix,
    dimension: usize,
    distance: OnceLock<DistanceResult>,
}

impl Clone for LinearCode {
    fn clone(&self) -> Self {
        let distance = OnceLock::new();
        if let Some(d) = self.distance.get() {
            let _ = distance.set(d.clone());
        }
        LinearCode {
            generator: self.generator.clone(),
            dimension: self.dimension,
            distance,
        }
    }
}

impl LinearCode {
    pub fn new(generator: GfMatrix) -> Self {
        let dimension = generator.rank();
        LinearCode {
            generator,
            dimension,
            distance: OnceLock::new(),
        }
    }

    pub fn field(&self) -> &Field {
        self.generator.field()
    }

    pub fn generator(&self) -> &GfMatrix {
        &self.generator
    }

    pub fn length(&self) -> usize {
        self.generator.cols()
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// Generator of the Euclidean dual.
    pub fn dual(&self) -> LinearCode {
        LinearCode::new(self.generator.null_space())
    }

    /// Every pair of generator rows is orthogonal.
    pub fn is_self_orthogonal(&self) -> bool {
        self.generator.gram().is_zero()
    }

    /// `G G^T = 0` and `rank G = N/2`.
    pub fn is_self_dual(&self) -> bool {
        let n = self.length();
        n % 2 == 0 && self.dimension * 2 == n && self.is_self_orthogonal()
    }

    pub fn contains(&self, word: &[Elem]) -> bool {
        word.len() == self.length() && self.generator.spans(word)
    }

    pub fn same_code(&self, other: &LinearCode) -> bool {
        self.generator.same_row_space(&other.generator)
    }

    /// Minimum distance, cached after the first successful computation.
    pub fn min_distance(
        &self,
        method: DistanceMethod,
        budget: Budget,
    ) -> Result<&DistanceResult, Error> {
        if let Some(d) = self.distance.get() {
            return Ok(d);
        }
        let result = minimum_distance(&self.generator, method, budget)?;
        Ok(self.distance.get_or_init(|| result))
    }

    pub fn cached_distance(&self) -> Option<&DistanceResult> {
        self.distance.get()
    }
}

/// Generator `(I_n | C_n(m))`.
pub fn pure_pdc(ctx: &CyclotomicContext, field: &Field, m: &MaskVector) -> Result<LinearCode, Error> {
    m.validate(field)?;
    let n = ctx.n() as usize;
    let r = mask_matrix(ctx, field, m);
    let g = GfMatrix::identity(field, n).hstack(&r)?;
    Ok(LinearCode::new(g))
}

/// Generator `(I_{n+1} | B)` with the bordered block
///
/// ```text
///     | alpha  1 ... 1 |
/// B = |  -1            |
///     |  ...   C_n(m)  |
///     |  -1            |
/// ```
pub fn bordered_pdc(
    ctx: &CyclotomicContext,
    field: &Field,
    alpha: Elem,
    m: &MaskVector,
) -> Result<LinearCode, Error> {
    field.check(alpha)?;
    m.validate(field)?;
    let n = ctx.n() as usize;
    let r = mask_matrix(ctx, field, m);
    let minus_one = field.minus_one();
    let b = GfMatrix::from_fn(field, n + 1, n + 1, |i, j| match (i, j) {
        (0, 0) => alpha,
        (0, _) => 1,
        (_, 0) => minus_one,
        _ => r.get(i - 1, j - 1),
    });
    let g = GfMatrix::identity(field, n + 1).hstack(&b)?;
    Ok(LinearCode::new(g))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(p: u64, q: u64) -> CyclotomicContext {
        CyclotomicContext::new(p, q).unwrap()
    }

    #[test]
    fn trivial_mask_gives_doubled_identity() {
        let c = ctx(3, 5);
        let f = Field::new(2).unwrap();
        let code = pure_pdc(&c, &f, &MaskVector([1, 0, 0, 0, 0])).unwrap();
        let i = GfMatrix::identity(&f, 15);
        assert_eq!(code.generator(), &i.hstack(&i).unwrap());
        assert!(code.is_self_dual());
        assert!(code.dual().same_code(&code));
        let f3 = Field::new(3).unwrap();
        assert!(!pure_pdc(&c, &f3, &MaskVector([1, 0, 0, 0, 0])).unwrap().is_self_dual());
    }

    #[test]
    fn table_code_shapes() {
        let f2 = Field::new(2).unwrap();
        let f4 = Field::new(4).unwrap();
        let a = pure_pdc(&ctx(5, 7), &f2, &MaskVector([1, 0, 1, 0, 1])).unwrap();
        assert_eq!((a.length(), a.dimension()), (70, 35));
        assert_eq!(a.generator().rank(), 35);
        assert!(a.is_self_dual());
        assert!(a.dual().same_code(&a));
        let b = bordered_pdc(&ctx(5, 7), &f2, 0, &MaskVector([0, 1, 0, 1, 0])).unwrap();
        assert_eq!((b.length(), b.dimension()), (72, 36));
        assert!(b.is_self_dual());
        let c = pure_pdc(&ctx(3, 5), &f4, &MaskVector([1, 1, 0, 3, 2])).unwrap();
        assert_eq!((c.length(), c.dimension()), (30, 15));
        let d = bordered_pdc(&ctx(3, 5), &f4, 0, &MaskVector([0, 0, 1, 3, 2])).unwrap();
        assert_eq!((d.length(), d.dimension()), (32, 16));
        assert!(c.is_self_dual() && d.is_self_dual());
    }

    #[test]
    fn border_layout() {
        let f3 = Field::new(3).unwrap();
        let code = bordered_pdc(&ctx(3, 5), &f3, 1, &MaskVector([0, 0, 0, 0, 0])).unwrap();
        let g = code.generator();
        assert_eq!(g.get(0, 16), 1);
        assert_eq!(g.get(0, 17), 1);
        assert_eq!(g.get(1, 16), 2);
        let f2 = Field::new(2).unwrap();
        let code = bordered_pdc(&ctx(3, 5), &f2, 0, &MaskVector([0, 0, 0, 0, 0])).unwrap();
        assert_eq!(code.generator().get(5, 16), 1);
    }

    #[test]
    fn odd_length_is_never_self_dual() {
        let f = Field::new(2).unwrap();
        let g = GfMatrix::from_rows(&f, &[vec![1, 1, 0]], 3).unwrap();
        assert!(!LinearCode::new(g).is_self_dual());
    }

    #[test]
    fn distance_is_cached() {
        let f = Field::new(2).unwrap();
        let code = pure_pdc(&ctx(3, 5), &f, &MaskVector([1, 0, 0, 0, 0])).unwrap();
        assert!(code.cached_distance().is_none());
        let d = code
            .min_distance(DistanceMethod::Auto, Budget::default())
            .unwrap()
            .distance;
        assert_eq!(d, 2);
        assert_eq!(code.cached_distance().unwrap().distance, 2);
        assert_eq!(code.clone().cached_distance().unwrap().distance, 2);
    }
}
