use proptest::prelude::*;

use cyclocode::bound::self_dual_bound;
use cyclocode::circulant::mask_matrix;
use cyclocode::constructions::{search_self_dual, ConstructionKind};
use cyclocode::distance::minimum_distance;
use cyclocode::{
    Budget, CyclotomicContext, DistanceMethod, Elem, Field, GfMatrix, LinearCode, MaskVector,
};

const MIXED_PAIRS: [(u64, u64); 4] = [(3, 5), (5, 3), (5, 7), (7, 5)];

fn field_order() -> impl Strategy<Value = u32> {
    prop::sample::select(vec![2u32, 3, 4, 5, 7])
}

fn random_generator(max_k: usize, max_n: usize) -> impl Strategy<Value = GfMatrix> {
    (field_order(), 1..=max_k, 0..=max_n).prop_flat_map(|(l, k, extra)| {
        let n = k + extra;
        prop::collection::vec(0..l as Elem, k * n).prop_map(move |data| {
            let f = Field::new(l).unwrap();
            GfMatrix::from_fn(&f, k, n, |i, j| data[i * n + j])
        })
    })
}

fn weight(v: &[Elem]) -> usize {
    v.iter().filter(|&&x| x != 0).count()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn mask_transpose_swaps_unit_classes(pair in 0..MIXED_PAIRS.len(), quaternary in any::<bool>(), raw in prop::array::uniform5(0u16..4)) {
        let (p, q) = MIXED_PAIRS[pair];
        let ctx = CyclotomicContext::new(p, q).unwrap();
        let f = Field::new(if quaternary { 4 } else { 2 }).unwrap();
        let m = MaskVector(raw.map(|v| v % f.order() as Elem));
        prop_assert_eq!(mask_matrix(&ctx, &f, &m).transpose(), mask_matrix(&ctx, &f, &m.swap_units()));
    }

    #[test]
    fn exhaustive_matches_infoset(g in random_generator(8, 14)) {
        let code = LinearCode::new(g.clone());
        prop_assume!(code.dimension() > 0);
        let ex = minimum_distance(&g, DistanceMethod::Exhaustive, Budget::unlimited()).unwrap();
        let is = minimum_distance(&g, DistanceMethod::InfoSet, Budget::unlimited()).unwrap();
        prop_assert_eq!(ex.distance, is.distance);
        for r in [&ex, &is] {
            prop_assert!(code.contains(&r.certificate));
            prop_assert_eq!(weight(&r.certificate), r.distance);
            prop_assert_eq!(r.certificate.iter().find(|&&x| x != 0), Some(&1));
        }
    }

    #[test]
    fn dual_dimensions_sum_to_length(g in random_generator(10, 16)) {
        let code = LinearCode::new(g);
        let dual = code.dual();
        prop_assert_eq!(code.dimension() + dual.dimension(), code.length());
        prop_assert!(dual.generator().mul(&code.generator().transpose()).unwrap().is_zero());
    }
}

#[test]
fn search_hits_are_closed_under_unit_swap() {
    for (p, q) in MIXED_PAIRS {
        let ctx = CyclotomicContext::new(p, q).unwrap();
        for l in [2, 3, 4] {
            let f = Field::new(l).unwrap();
            for kind in [ConstructionKind::Pure, ConstructionKind::Bordered] {
                let r = search_self_dual(&ctx, &f, kind, false, Budget::default()).unwrap();
                let hits: Vec<(Option<Elem>, MaskVector)> =
                    r.hits.iter().map(|h| (h.alpha, MaskVector(h.mask))).collect();
                for (a, m) in &hits {
                    assert!(hits.contains(&(*a, m.swap_units())), "({p},{q}) GF({l}) {kind} {m:?}");
                }
                assert!(r.hits.iter().all(|h| h.report.self_dual));
            }
        }
    }
}

#[test]
fn self_dual_hits_respect_bound_and_parity() {
    for (p, q) in MIXED_PAIRS {
        let ctx = CyclotomicContext::new(p, q).unwrap();
        for l in [2, 4] {
            let f = Field::new(l).unwrap();
            for kind in [ConstructionKind::Pure, ConstructionKind::Bordered] {
                let r = search_self_dual(&ctx, &f, kind, true, Budget::default()).unwrap();
                assert!(r.complete);
                for hit in &r.hits {
                    let d = hit.report.d.unwrap();
                    let (bound, _) = self_dual_bound(l, hit.report.length);
                    assert!(d <= bound, "{} d = {d} > {bound}", hit.descriptor);
                    if l == 2 {
                        assert_eq!(d % 2, 0, "{} has odd distance {d}", hit.descriptor);
                    }
                }
            }
        }
    }
}

#[test]
fn binary_self_dual_codewords_have_even_weight() {
    let ctx = CyclotomicContext::new(5, 7).unwrap();
    let f = Field::new(2).unwrap();
    let code = cyclocode::pure_pdc(&ctx, &f, &MaskVector([1, 0, 1, 0, 1])).unwrap();
    let g = code.generator();
    for i in 0..g.rows() {
        for j in i..g.rows() {
            let s: Vec<Elem> = g.row(i).iter().zip(g.row(j)).map(|(a, b)| f.add(*a, *b)).collect();
            assert_eq!(weight(&s) % 2, 0);
        }
    }
    let d = code.min_distance(DistanceMethod::InfoSet, Budget::default()).unwrap();
    assert_eq!(weight(&d.certificate) % 2, 0);
}
