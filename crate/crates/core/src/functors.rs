//! Constructions turning one algebra class into another.
//!
//! These are table-level operations. None of them verifies its input; pair
//! them with [`crate::axioms`] when validity matters.

use std::fmt;
use std::str::FromStr;

use crate::algebra::{Algebra, Op, StructureConstants};
use crate::error::{Error, Result};
use crate::scalar;

/// `x ∘ y = x▷y − y◁x`.
pub fn vertical_table(
    tri_r: &StructureConstants,
    tri_l: &StructureConstants,
) -> StructureConstants {
    tri_r.sub(&tri_l.opposite())
}

/// `x • y = x▷y + x◁y`.
pub fn horizontal_table(
    tri_r: &StructureConstants,
    tri_l: &StructureConstants,
) -> StructureConstants {
    tri_r.add(tri_l)
}

/// The common sub-adjacent bracket `[x,y] = x•y − y•x`.
pub fn ldend_bracket_table(
    tri_r: &StructureConstants,
    tri_l: &StructureConstants,
) -> StructureConstants {
    horizontal_table(tri_r, tri_l).commutator()
}

fn ldend_tables<'a>(
    alg: &'a Algebra,
    who: &str,
) -> Result<(&'a StructureConstants, &'a StructureConstants)> {
    Ok((alg.require(Op::TriR, who)?, alg.require(Op::TriL, who)?))
}

fn single(dim: usize, op: Op, table: StructureConstants, tag: &str) -> Algebra {
    Algebra::new(dim)
        .with_op(op, table)
        .expect("derived table has the input dimension")
        .with_tag(tag)
}

fn pair(dim: usize, ops: [(Op, StructureConstants); 2], tag: &str) -> Algebra {
    let [(a, ta), (b, tb)] = ops;
    Algebra::new(dim)
        .with_op(a, ta)
        .and_then(|alg| alg.with_op(b, tb))
        .expect("derived tables have the input dimension")
        .with_tag(tag)
}

/// `[x,y] = x∘y − y∘x` from the `circ` table.
pub fn sub_adjacent_lie(alg: &Algebra) -> Result<Algebra> {
    sub_adjacent_lie_of(alg, Op::Circ)
}

/// Commutator of an arbitrary named product.
pub fn sub_adjacent_lie_of(alg: &Algebra, op: Op) -> Result<Algebra> {
    let t = alg.require(op, "sub_adjacent_lie")?;
    Ok(single(alg.dim(), Op::Bracket, t.commutator(), "lie"))
}

pub fn horizontal_prelie(alg: &Algebra) -> Result<Algebra> {
    let (r, l) = ldend_tables(alg, "horizontal_prelie")?;
    Ok(single(
        alg.dim(),
        Op::Bullet,
        horizontal_table(r, l),
        "pre_lie",
    ))
}

pub fn vertical_prelie(alg: &Algebra) -> Result<Algebra> {
    let (r, l) = ldend_tables(alg, "vertical_prelie")?;
    Ok(single(alg.dim(), Op::Circ, vertical_table(r, l), "pre_lie"))
}

/// `x ▷ᵗ y = x▷y`, `x ◁ᵗ y = −y◁x`.
pub fn transpose(alg: &Algebra) -> Result<Algebra> {
    let (r, l) = ldend_tables(alg, "transpose")?;
    Ok(pair(
        alg.dim(),
        [(Op::TriR, r.clone()), (Op::TriL, l.opposite().neg())],
        "l_dendriform",
    ))
}

/// Reads `≻` as `▷` and `≺` as `◁`.
pub fn dendriform_to_ldend(alg: &Algebra) -> Result<Algebra> {
    let succ = alg.require(Op::Succ, "dendriform_to_ldend")?;
    let prec = alg.require(Op::Prec, "dendriform_to_ldend")?;
    Ok(pair(
        alg.dim(),
        [(Op::TriR, succ.clone()), (Op::TriL, prec.clone())],
        "l_dendriform",
    ))
}

/// Which structure to read off a quadri-algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QuadriDerived {
    /// `≻ = ↗ + ↘`, `≺ = ↖ + ↙`
    SuccPrec,
    /// `∨ = ↘ + ↙`, `∧ = ↗ + ↖`
    VeeWedge,
    /// `* = ↘ + ↗ + ↖ + ↙`
    Star,
    /// `x▷y = x↘y − y↖x`, `x◁y = x↗y − y↙x`
    TriRTriL,
    /// `x∘y = x↘y + x↙y − y↖x − y↗x`
    Circ,
    /// `x•y = x↘y + x↗y − y↖x − y↙x`
    Bullet,
    /// the commutator of `*`
    Bracket,
}

impl QuadriDerived {
    pub const ALL: [QuadriDerived; 7] = [
        QuadriDerived::SuccPrec,
        QuadriDerived::VeeWedge,
        QuadriDerived::Star,
        QuadriDerived::TriRTriL,
        QuadriDerived::Circ,
        QuadriDerived::Bullet,
        QuadriDerived::Bracket,
    ];

    pub fn name(self) -> &'static str {
        match self {
            QuadriDerived::SuccPrec => "succ_prec",
            QuadriDerived::VeeWedge => "vee_wedge",
            QuadriDerived::Star => "star",
            QuadriDerived::TriRTriL => "tri_r_tri_l",
            QuadriDerived::Circ => "circ",
            QuadriDerived::Bullet => "bullet",
            QuadriDerived::Bracket => "bracket",
        }
    }
}

impl fmt::Display for QuadriDerived {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for QuadriDerived {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let alias = match s {
            "succ" | "prec" => "succ_prec",
            "vee" | "wedge" => "vee_wedge",
            "tri_r" | "tri_l" => "tri_r_tri_l",
            other => other,
        };
        QuadriDerived::ALL
            .iter()
            .copied()
            .find(|q| q.name() == alias)
            .ok_or_else(|| Error::Unknown {
                kind: "quadri-derived operation",
                name: s.to_string(),
            })
    }
}

pub fn quadri_derive(alg: &Algebra, which: QuadriDerived) -> Result<Algebra> {
    let need = |op| alg.require(op, "quadri_derive");
    let (se, ne, nw, sw) = (need(Op::Se)?, need(Op::Ne)?, need(Op::Nw)?, need(Op::Sw)?);
    let n = alg.dim();
    let star = || se.add(ne).add(nw).add(sw);
    Ok(match which {
        QuadriDerived::SuccPrec => pair(
            n,
            [(Op::Succ, ne.add(se)), (Op::Prec, nw.add(sw))],
            "dendriform",
        ),
        QuadriDerived::VeeWedge => pair(
            n,
            [(Op::Vee, se.add(sw)), (Op::Wedge, ne.add(nw))],
            "dendriform",
        ),
        QuadriDerived::Star => single(n, Op::Star, star(), "associative"),
        QuadriDerived::TriRTriL => pair(
            n,
            [
                (Op::TriR, se.sub(&nw.opposite())),
                (Op::TriL, ne.sub(&sw.opposite())),
            ],
            "l_dendriform",
        ),
        QuadriDerived::Circ => single(
            n,
            Op::Circ,
            se.add(sw).sub(&nw.add(ne).opposite()),
            "pre_lie",
        ),
        QuadriDerived::Bullet => single(
            n,
            Op::Bullet,
            se.add(ne).sub(&nw.add(sw).opposite()),
            "pre_lie",
        ),
        QuadriDerived::Bracket => single(n, Op::Bracket, star().commutator(), "lie"),
    })
}

/// Copy of `alg` with table `from` stored under the name `to`. Lets the
/// class checks run on derived products such as `bullet` or `star`.
pub fn rename(alg: &Algebra, from: Op, to: Op) -> Result<Algebra> {
    let t = alg.require(from, "rename")?.clone();
    let mut out = Algebra::new(alg.dim()).with_op(to, t)?;
    out.set_class_tag(alg.class_tag().map(str::to_string));
    Ok(out)
}

/// `x ∘ y = x∘₁y − y∘₂x` and `x∘₁y + x∘₂y`, the two arrows of the diagram.
pub fn difference_table(a: &StructureConstants, b: &StructureConstants) -> StructureConstants {
    a.combine(&scalar::one(), &b.opposite(), &-scalar::one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::{check_class, Class};
    use crate::fixtures;
    use crate::scalar::int;

    fn table(n: usize, entries: &[(usize, usize, usize, i64)]) -> StructureConstants {
        let mut t = StructureConstants::zeros(n);
        for &(i, j, k, v) in entries {
            t.set(i, j, k, int(v));
        }
        t
    }

    #[test]
    fn sub_adjacent_examples() {
        assert!(sub_adjacent_lie(&fixtures::z2()).unwrap().is_zero());
        let l = sub_adjacent_lie(&fixtures::p2()).unwrap();
        assert_eq!(
            l.table(Op::Bracket).unwrap(),
            fixtures::l2().table(Op::Bracket).unwrap()
        );
        assert!(sub_adjacent_lie(&fixtures::p1()).unwrap().is_zero());
        assert!(sub_adjacent_lie(&fixtures::ld2()).is_err());
    }

    #[test]
    fn ld2_horizontal_and_vertical() {
        let ld2 = fixtures::ld2();
        let h = horizontal_prelie(&ld2).unwrap();
        assert_eq!(h.table(Op::Bullet).unwrap(), &table(2, &[(1, 1, 1, 1)]));
        let v = vertical_prelie(&ld2).unwrap();
        assert_eq!(
            v.table(Op::Circ).unwrap(),
            &table(2, &[(0, 1, 0, 1), (1, 0, 0, 1), (1, 1, 1, 1)])
        );
        let zero = Algebra::new(2)
            .with_op(Op::TriR, StructureConstants::zeros(2))
            .unwrap()
            .with_op(Op::TriL, StructureConstants::zeros(2))
            .unwrap();
        assert!(horizontal_prelie(&zero).unwrap().is_zero());
        assert!(vertical_prelie(&zero).unwrap().is_zero());
        assert!(transpose(&zero).unwrap().is_zero());
    }

    #[test]
    fn transpose_swaps_horizontal_and_vertical() {
        let ld2 = fixtures::ld2();
        let t = transpose(&ld2).unwrap();
        assert_eq!(
            transpose(&t).unwrap().table(Op::TriL).unwrap(),
            ld2.table(Op::TriL).unwrap()
        );
        assert_eq!(
            horizontal_prelie(&t).unwrap().table(Op::Bullet).unwrap(),
            vertical_prelie(&ld2).unwrap().table(Op::Circ).unwrap()
        );
        assert_eq!(
            vertical_prelie(&t).unwrap().table(Op::Circ).unwrap(),
            horizontal_prelie(&ld2).unwrap().table(Op::Bullet).unwrap()
        );
    }

    #[test]
    fn dendriform_rename_and_horizontal_is_star() {
        // dimension one: x≺y = e1, x≻y = 0 is dendriform
        let d = Algebra::new(1)
            .with_op(Op::Prec, table(1, &[(0, 0, 0, 1)]))
            .unwrap()
            .with_op(Op::Succ, StructureConstants::zeros(1))
            .unwrap();
        assert!(check_class(&d, Class::Dendriform).unwrap().passed());
        let ld = dendriform_to_ldend(&d).unwrap();
        assert!(check_class(&ld, Class::LDendriform).unwrap().passed());
        let h = horizontal_prelie(&ld).unwrap();
        assert_eq!(h.table(Op::Bullet).unwrap(), &table(1, &[(0, 0, 0, 1)]));
        let as_circ = rename(&h, Op::Bullet, Op::Circ).unwrap();
        assert!(check_class(&as_circ, Class::Associative).unwrap().passed());
    }

    #[test]
    fn quadri_derive_on_zero() {
        let z = Algebra::new(2);
        let z = [Op::Se, Op::Ne, Op::Nw, Op::Sw]
            .into_iter()
            .fold(z, |a, op| {
                a.with_op(op, StructureConstants::zeros(2)).unwrap()
            });
        for which in QuadriDerived::ALL {
            assert!(quadri_derive(&z, which).unwrap().is_zero());
        }
        assert!(quadri_derive(&fixtures::ld2(), QuadriDerived::Star).is_err());
        assert!("tri_r".parse::<QuadriDerived>().unwrap() == QuadriDerived::TriRTriL);
        assert!("nope".parse::<QuadriDerived>().is_err());
    }
}
