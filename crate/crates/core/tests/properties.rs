use ldend::algebra::{Algebra, Op, StructureConstants};
use ldend::axioms::{associative_report, dendriform_report, l_dendriform_report, pre_lie_report};
use ldend::functors;
use ldend::io;
use ldend::linear::{dual_rep, LinearMap, MatrixFamily};
use ldend::scalar::{add_vec, int, scale_vec, Scalar};
use ldend::tensor::{self, slot_product_with, SlotPair, Tensor2, Tensor3};
use ldend::ybe::{self, Equation, LdEquation};
use proptest::prelude::*;

fn small() -> impl Strategy<Value = Scalar> {
    (-3i64..=3).prop_map(int)
}

fn vector(n: usize) -> impl Strategy<Value = Vec<Scalar>> {
    proptest::collection::vec(small(), n)
}

fn table(n: usize) -> impl Strategy<Value = StructureConstants> {
    proptest::collection::vec(small(), n * n * n).prop_map(move |v| {
        let mut t = StructureConstants::zeros(n);
        for (idx, x) in v.into_iter().enumerate() {
            t.set(idx / (n * n), (idx / n) % n, idx % n, x);
        }
        t
    })
}

fn tensor2(n: usize) -> impl Strategy<Value = Tensor2> {
    proptest::collection::vec(small(), n * n)
        .prop_map(move |v| Tensor2::from_fn(n, |i, j| v[i * n + j].clone()))
}

fn square(n: usize) -> impl Strategy<Value = LinearMap> {
    proptest::collection::vec(small(), n * n)
        .prop_map(move |v| LinearMap::from_fn(n, n, |i, j| v[i * n + j].clone()))
}

fn invertible(n: usize) -> impl Strategy<Value = LinearMap> {
    square(n).prop_filter("singular", |p| p.is_invertible())
}

fn with_dim<T: std::fmt::Debug>(
    f: impl Fn(usize) -> BoxedStrategy<T> + 'static,
) -> impl Strategy<Value = (usize, T)> {
    (1usize..=3).prop_flat_map(move |n| (Just(n), f(n)))
}

/// The same product written in the basis given by the columns of `p`.
fn change_basis(t: &StructureConstants, p: &LinearMap) -> StructureConstants {
    let n = t.dim();
    let inv = p.inverse().unwrap();
    StructureConstants::from_products(n, |i, j| {
        inv.apply(&t.multiply(&p.column(i), &p.column(j))).unwrap()
    })
}

/// Block-diagonal sum of one-dimensional tables.
fn diagonal(values: &[i64]) -> StructureConstants {
    let mut t = StructureConstants::zeros(values.len());
    for (i, &v) in values.iter().enumerate() {
        t.set(i, i, i, int(v));
    }
    t
}

fn slot_pairs() -> impl Strategy<Value = (SlotPair, SlotPair)> {
    let all = [SlotPair::S12, SlotPair::S13, SlotPair::S23];
    (0usize..3, 0usize..3, any::<bool>(), any::<bool>())
        .prop_filter("need two distinct pairs", |(a, b, _, _)| a != b)
        .prop_map(move |(a, b, fa, fb)| {
            let flip = |s: SlotPair, f: bool| {
                if f {
                    SlotPair::new(s.second(), s.first()).unwrap()
                } else {
                    s
                }
            };
            (flip(all[a], fa), flip(all[b], fb))
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn exchange_is_an_involution((_, r) in with_dim(|n| tensor2(n).boxed())) {
        prop_assert_eq!(tensor::exchange(&tensor::exchange(&r)), r.clone());
        prop_assert_eq!(tensor::tensor_to_map(&tensor::exchange(&r)), tensor::tensor_to_map(&r).transpose());
    }

    #[test]
    fn tensor_map_round_trip((_, r) in with_dim(|n| tensor2(n).boxed())) {
        prop_assert_eq!(Tensor2::from_map(&r.to_map()).unwrap(), r);
    }

    #[test]
    fn dual_rep_twice_is_identity(
        (n, mats) in with_dim(|n| proptest::collection::vec(square(n), 1..4).boxed())
    ) {
        let fam = MatrixFamily::new(n, mats).unwrap();
        prop_assert_eq!(dual_rep(&dual_rep(&fam)), fam);
    }

    #[test]
    fn multiply_is_bilinear(
        (_, (t, x, y, z, c)) in with_dim(|n| (table(n), vector(n), vector(n), vector(n), small()).boxed())
    ) {
        let lhs = t.multiply(&add_vec(&x, &scale_vec(&c, &y)), &z);
        let rhs = add_vec(&t.multiply(&x, &z), &scale_vec(&c, &t.multiply(&y, &z)));
        prop_assert_eq!(lhs, rhs);
        let lhs = t.multiply(&z, &add_vec(&x, &scale_vec(&c, &y)));
        let rhs = add_vec(&t.multiply(&z, &x), &scale_vec(&c, &t.multiply(&z, &y)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn slot_product_is_bilinear(
        (_, (t, r1, r2, s, c)) in with_dim(|n| (table(n), tensor2(n), tensor2(n), tensor2(n), small()).boxed()),
        (a, b) in slot_pairs(),
    ) {
        let mix = r1.add(&r2.scale(&c)).unwrap();
        let lhs = slot_product_with(&t, &mix, a, &s, b).unwrap();
        let p1 = slot_product_with(&t, &r1, a, &s, b).unwrap();
        let p2 = slot_product_with(&t, &r2, a, &s, b).unwrap();
        let n = t.dim();
        let rhs = p1.add(&Tensor3::from_fn(n, |i, j, k| p2.get(i, j, k) * &c)).unwrap();
        prop_assert_eq!(lhs, rhs);
        let rhs2 = slot_product_with(&t, &s, a, &r1, b).unwrap().add(&slot_product_with(&t, &s, a, &r2, b).unwrap()).unwrap();
        prop_assert_eq!(slot_product_with(&t, &s, a, &r1.add(&r2).unwrap(), b).unwrap(), rhs2);
    }

    #[test]
    fn associative_implies_pre_lie(
        (n, (blocks, p)) in with_dim(|n| (proptest::collection::vec(0i64..=1, n), invertible(n)).boxed())
    ) {
        // k × … × k with some factors zero, in a random basis
        let t = change_basis(&diagonal(&blocks), &p);
        prop_assert_eq!(t.dim(), n);
        prop_assert!(associative_report(&t).passed());
        prop_assert!(pre_lie_report(&t).passed());
    }

    #[test]
    fn dendriform_implies_l_dendriform(
        (n, (kinds, p)) in with_dim(|n| (proptest::collection::vec(0u8..3, n), invertible(n)).boxed())
    ) {
        // one-dimensional blocks: zero, x≻x = x, or x≺x = x
        let succ: Vec<i64> = kinds.iter().map(|&k| i64::from(k == 1)).collect();
        let prec: Vec<i64> = kinds.iter().map(|&k| i64::from(k == 2)).collect();
        let succ = change_basis(&diagonal(&succ), &p);
        let prec = change_basis(&diagonal(&prec), &p);
        prop_assert!(dendriform_report(&succ, &prec).passed());
        let d = Algebra::new(n).with_op(Op::Succ, succ).unwrap().with_op(Op::Prec, prec).unwrap();
        let ld = functors::dendriform_to_ldend(&d).unwrap();
        prop_assert!(l_dendriform_report(ld.table(Op::TriR).unwrap(), ld.table(Op::TriL).unwrap()).passed());
    }

    #[test]
    fn transpose_swaps_vertical_and_horizontal(
        (n, (tr, tl)) in with_dim(|n| (table(n), table(n)).boxed())
    ) {
        let a = Algebra::new(n).with_op(Op::TriR, tr.clone()).unwrap().with_op(Op::TriL, tl.clone()).unwrap();
        let t = functors::transpose(&a).unwrap();
        let tt = functors::transpose(&t).unwrap();
        prop_assert_eq!(tt.table(Op::TriR).unwrap(), &tr);
        prop_assert_eq!(tt.table(Op::TriL).unwrap(), &tl);
        let (ttr, ttl) = (t.table(Op::TriR).unwrap(), t.table(Op::TriL).unwrap());
        prop_assert_eq!(functors::horizontal_table(ttr, ttl), functors::vertical_table(&tr, &tl));
        prop_assert_eq!(functors::vertical_table(ttr, ttl), functors::horizontal_table(&tr, &tl));
    }

    #[test]
    fn residuals_are_quadratic(
        (n, (tr, tl, r, c)) in with_dim(|n| (table(n), table(n), tensor2(n), small()).boxed())
    ) {
        let a = Algebra::new(n).with_op(Op::TriR, tr.clone()).unwrap().with_op(Op::TriL, tl).unwrap()
            .with_op(Op::Circ, tr).unwrap();
        let c2 = &c * &c;
        let mut eqs = vec![Equation::S, Equation::SAlternate];
        eqs.extend(LdEquation::ALL.map(Equation::Ld));
        for eq in eqs {
            let base = ybe::residual(&a, &r, eq).unwrap();
            let scaled = ybe::residual(&a, &r.scale(&c), eq).unwrap();
            let expect = Tensor3::from_fn(n, |i, j, k| base.get(i, j, k) * &c2);
            prop_assert_eq!(scaled, expect);
        }
    }

    #[test]
    fn algebra_json_round_trip(
        (n, (tr, tl)) in with_dim(|n| (table(n), table(n)).boxed())
    ) {
        let a = Algebra::new(n).with_op(Op::TriR, tr).unwrap().with_op(Op::TriL, tl).unwrap();
        let v = io::algebra_to_json(&a);
        let back = io::algebra_from_json(&v).unwrap();
        prop_assert_eq!(io::to_canonical_string(&io::algebra_to_json(&back)), io::to_canonical_string(&v));
    }
}
