//! The shipped catalog of small verified algebras and maps.
//!
//! Every entry is re-verified by the test suite; nothing here is trusted
//! because of how it was written down.

use crate::algebra::{Algebra, Op};
use crate::error::{Error, Result};
use crate::form::BilinearForm;
use crate::linear::LinearMap;
use crate::representations::{LDendModule, PreLieModule};
use crate::scalar::int;

fn sparse(dim: usize, op: Op, entries: &[(usize, usize, usize, i64)]) -> Algebra {
    let entries: Vec<_> = entries
        .iter()
        .map(|&(i, j, k, v)| (i, j, k, int(v)))
        .collect();
    Algebra::from_sparse(dim, op, &entries).expect("catalog literal in range")
}

/// Two-dimensional zero algebra.
pub fn z2() -> Algebra {
    sparse(2, Op::Circ, &[]).with_tag("pre_lie")
}

/// `e1∘e1 = e1`.
pub fn p1() -> Algebra {
    sparse(1, Op::Circ, &[(0, 0, 0, 1)]).with_tag("pre_lie")
}

/// `e1∘e1 = e1`, `e1∘e2 = e2`.
pub fn p2() -> Algebra {
    sparse(2, Op::Circ, &[(0, 0, 0, 1), (0, 1, 1, 1)]).with_tag("pre_lie")
}

/// `e1∘e1 = e2`, `e1∘e2 = e1`; not pre-Lie.
pub fn n2() -> Algebra {
    sparse(2, Op::Circ, &[(0, 0, 1, 1), (0, 1, 0, 1)])
}

/// `[e1,e2] = e2 = −[e2,e1]`.
pub fn l2() -> Algebra {
    sparse(2, Op::Bracket, &[(0, 1, 1, 1), (1, 0, 1, -1)]).with_tag("lie")
}

/// `e1 ↦ 0`, `e2 ↦ e1`; a Rota-Baxter operator of weight zero on P2.
pub fn rb2() -> LinearMap {
    LinearMap::from_int_rows(&[&[0, 1], &[0, 0]])
}

/// `e2▷e1 = e1`, `e2▷e2 = e2`, `e2◁e1 = −e1`.
pub fn ld2() -> Algebra {
    let tri_r = sparse(2, Op::TriR, &[(1, 0, 0, 1), (1, 1, 1, 1)]);
    let tri_l = sparse(2, Op::TriL, &[(1, 0, 0, -1)]);
    Algebra::new(2)
        .with_op(Op::TriR, tri_r.table(Op::TriR).unwrap().clone())
        .and_then(|a| a.with_op(Op::TriL, tri_l.table(Op::TriL).unwrap().clone()))
        .expect("dimension 2")
        .with_tag("l_dendriform")
}

/// `P2` with a third basis vector and `e1∘e3 = −e3`: the semidirect sum
/// of `P2` with the dual of the line on which `e1` acts by 1.
pub fn p2_ext() -> Algebra {
    sparse(3, Op::Circ, &[(0, 0, 0, 1), (0, 1, 1, 1), (0, 2, 2, -1)]).with_tag("pre_lie")
}

/// A nondegenerate symmetric 2-cocycle of [`p2_ext`]; `P2` itself has none
/// with entries in {−1, 0, 1}.
pub fn p2_ext_cocycle() -> BilinearForm {
    BilinearForm::from_int_rows(&[&[-1, 0, -1], &[0, 0, -1], &[-1, -1, 0]])
}

/// A catalog entry as written by `ldend catalog`.
#[derive(Clone, Debug)]
pub enum Fixture {
    Algebra(Algebra),
    Map(LinearMap),
    Form(BilinearForm),
    PreLieModule(PreLieModule),
    LDendModule(LDendModule),
}

/// Names accepted by [`lookup`], in catalog order.
pub const NAMES: [&str; 11] = [
    "z2",
    "p1",
    "p2",
    "n2",
    "l2",
    "rb2",
    "ld2",
    "p2-regular",
    "ld2-regular",
    "p2-ext",
    "p2-ext-cocycle",
];

pub fn lookup(name: &str) -> Result<Fixture> {
    Ok(match name.to_ascii_lowercase().as_str() {
        "z2" => Fixture::Algebra(z2()),
        "p1" => Fixture::Algebra(p1()),
        "p2" => Fixture::Algebra(p2()),
        "n2" => Fixture::Algebra(n2()),
        "l2" => Fixture::Algebra(l2()),
        "rb2" => Fixture::Map(rb2()),
        "ld2" => Fixture::Algebra(ld2()),
        "p2-regular" => Fixture::PreLieModule(PreLieModule::regular(&p2())?),
        "ld2-regular" => Fixture::LDendModule(LDendModule::regular(&ld2())?),
        "p2-ext" => Fixture::Algebra(p2_ext()),
        "p2-ext-cocycle" => Fixture::Form(p2_ext_cocycle()),
        _ => {
            return Err(Error::Unknown {
                kind: "fixture",
                name: name.to_string(),
            })
        }
    })
}
