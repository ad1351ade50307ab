//! Membership checks for the algebra classes, with counterexamples.
//!
//! Every identity is multilinear, so it is evaluated on basis tuples only.
//! Failures come out in lexicographic order of the basis tuple, and within
//! one tuple in the fixed order the identities are listed below.

use std::fmt;
use std::str::FromStr;

use crate::algebra::{Algebra, Op, StructureConstants};
use crate::error::{Error, Result};
use crate::form::BilinearForm;
use crate::functors;
use crate::report::CheckReport;
use crate::scalar::{self, basis, sub_vec, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Class {
    PreLie,
    Lie,
    Associative,
    Dendriform,
    LDendriform,
    Quadri,
}

impl Class {
    pub const ALL: [Class; 6] = [
        Class::PreLie,
        Class::Lie,
        Class::Associative,
        Class::Dendriform,
        Class::LDendriform,
        Class::Quadri,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Class::PreLie => "pre_lie",
            Class::Lie => "lie",
            Class::Associative => "associative",
            Class::Dendriform => "dendriform",
            Class::LDendriform => "l_dendriform",
            Class::Quadri => "quadri",
        }
    }

    /// Operation names an input algebra must carry for this class.
    pub fn required_ops(self) -> &'static [Op] {
        match self {
            Class::PreLie | Class::Associative => &[Op::Circ],
            Class::Lie => &[Op::Bracket],
            Class::Dendriform => &[Op::Succ, Op::Prec],
            Class::LDendriform => &[Op::TriR, Op::TriL],
            Class::Quadri => &[Op::Se, Op::Ne, Op::Nw, Op::Sw],
        }
    }
}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Class {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Class::ALL
            .iter()
            .copied()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Unknown {
                kind: "class",
                name: s.to_string(),
            })
    }
}

pub fn check_class(alg: &Algebra, class: Class) -> Result<CheckReport> {
    let need = |op: Op| alg.require(op, &format!("the {class} check"));
    Ok(match class {
        Class::PreLie => pre_lie_report(need(Op::Circ)?),
        Class::Associative => associative_report(need(Op::Circ)?),
        Class::Lie => lie_report(need(Op::Bracket)?),
        Class::Dendriform => dendriform_report(need(Op::Succ)?, need(Op::Prec)?),
        Class::LDendriform => l_dendriform_report(need(Op::TriR)?, need(Op::TriL)?),
        Class::Quadri => quadri_report(need(Op::Se)?, need(Op::Ne)?, need(Op::Nw)?, need(Op::Sw)?),
    })
}

fn m(t: &StructureConstants, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    t.multiply(x, y)
}

fn for_triples(n: usize, mut f: impl FnMut([usize; 3], [Vec<Scalar>; 3])) {
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                f([i, j, k], [basis(n, i), basis(n, j), basis(n, k)]);
            }
        }
    }
}

/// `(x,y,z) − (y,x,z)` with `(x,y,z) = (x∘y)∘z − x∘(y∘z)`.
pub fn pre_lie_report(t: &StructureConstants) -> CheckReport {
    let mut report = CheckReport::default();
    let assoc = |x: &[Scalar], y: &[Scalar], z: &[Scalar]| {
        sub_vec(&m(t, &m(t, x, y), z), &m(t, x, &m(t, y, z)))
    };
    for_triples(t.dim(), |idx, [x, y, z]| {
        report.record(
            "eq-2.2",
            &idx,
            sub_vec(&assoc(&x, &y, &z), &assoc(&y, &x, &z)),
        );
    });
    report
}

pub fn associative_report(t: &StructureConstants) -> CheckReport {
    let mut report = CheckReport::default();
    for_triples(t.dim(), |idx, [x, y, z]| {
        report.record(
            "associativity",
            &idx,
            sub_vec(&m(t, &m(t, &x, &y), &z), &m(t, &x, &m(t, &y, &z))),
        );
    });
    report
}

/// Antisymmetry on basis pairs, then the cyclic Jacobi sum on triples.
pub fn lie_report(t: &StructureConstants) -> CheckReport {
    let n = t.dim();
    let mut report = CheckReport::default();
    for i in 0..n {
        for j in 0..n {
            let (x, y) = (basis(n, i), basis(n, j));
            report.record(
                "antisymmetry",
                &[i, j],
                scalar::add_vec(&m(t, &x, &y), &m(t, &y, &x)),
            );
        }
    }
    for_triples(n, |idx, [x, y, z]| {
        let a = m(t, &x, &m(t, &y, &z));
        let b = m(t, &y, &m(t, &z, &x));
        let c = m(t, &z, &m(t, &x, &y));
        report.record(
            "jacobi",
            &idx,
            scalar::add_vec(&scalar::add_vec(&a, &b), &c),
        );
    });
    report
}

/// The three dendriform identities with `* = ≻ + ≺`.
pub fn dendriform_report(succ: &StructureConstants, prec: &StructureConstants) -> CheckReport {
    let star = succ.add(prec);
    let mut report = CheckReport::default();
    for_triples(succ.dim(), |idx, [x, y, z]| {
        report.record(
            "eq-1.1-a",
            &idx,
            sub_vec(
                &m(prec, &m(prec, &x, &y), &z),
                &m(prec, &x, &m(&star, &y, &z)),
            ),
        );
        report.record(
            "eq-1.1-b",
            &idx,
            sub_vec(
                &m(prec, &m(succ, &x, &y), &z),
                &m(succ, &x, &m(prec, &y, &z)),
            ),
        );
        report.record(
            "eq-1.1-c",
            &idx,
            sub_vec(
                &m(succ, &x, &m(succ, &y, &z)),
                &m(succ, &m(&star, &x, &y), &z),
            ),
        );
    });
    report
}

pub fn l_dendriform_report(tri_r: &StructureConstants, tri_l: &StructureConstants) -> CheckReport {
    let (r, l) = (tri_r, tri_l);
    let mut report = CheckReport::default();
    for_triples(r.dim(), |idx, [x, y, z]| {
        let lhs = m(r, &x, &m(r, &y, &z));
        let mut rhs = m(r, &m(r, &x, &y), &z);
        rhs = scalar::add_vec(&rhs, &m(r, &m(l, &x, &y), &z));
        rhs = scalar::add_vec(&rhs, &m(r, &y, &m(r, &x, &z)));
        rhs = sub_vec(&rhs, &m(r, &m(l, &y, &x), &z));
        rhs = sub_vec(&rhs, &m(r, &m(r, &y, &x), &z));
        report.record("eq-3.1", &idx, sub_vec(&lhs, &rhs));

        let lhs = m(r, &x, &m(l, &y, &z));
        let mut rhs = m(l, &m(r, &x, &y), &z);
        rhs = scalar::add_vec(&rhs, &m(l, &y, &m(r, &x, &z)));
        rhs = scalar::add_vec(&rhs, &m(l, &y, &m(l, &x, &z)));
        rhs = sub_vec(&rhs, &m(l, &m(l, &y, &x), &z));
        report.record("eq-3.2", &idx, sub_vec(&lhs, &rhs));
    });
    report
}

/// The nine quadri-algebra identities, checked individually.
pub fn quadri_report(
    se: &StructureConstants,
    ne: &StructureConstants,
    nw: &StructureConstants,
    sw: &StructureConstants,
) -> CheckReport {
    let succ = ne.add(se);
    let prec = nw.add(sw);
    let vee = se.add(sw);
    let wedge = ne.add(nw);
    let star = succ.add(&prec);
    let mut report = CheckReport::default();
    for_triples(se.dim(), |idx, [x, y, z]| {
        let mut rec = |id: &str, lhs: Vec<Scalar>, rhs: Vec<Scalar>| {
            report.record(id, &idx, sub_vec(&lhs, &rhs))
        };
        rec(
            "eq-3.17-left",
            m(nw, &m(nw, &x, &y), &z),
            m(nw, &x, &m(&star, &y, &z)),
        );
        rec(
            "eq-3.17-middle",
            m(nw, &m(ne, &x, &y), &z),
            m(ne, &x, &m(&prec, &y, &z)),
        );
        rec(
            "eq-3.17-right",
            m(ne, &m(&wedge, &x, &y), &z),
            m(ne, &x, &m(&succ, &y, &z)),
        );
        rec(
            "eq-3.18-left",
            m(nw, &m(sw, &x, &y), &z),
            m(sw, &x, &m(&wedge, &y, &z)),
        );
        rec(
            "eq-3.18-middle",
            m(nw, &m(se, &x, &y), &z),
            m(se, &x, &m(nw, &y, &z)),
        );
        rec(
            "eq-3.18-right",
            m(ne, &m(&vee, &x, &y), &z),
            m(se, &x, &m(ne, &y, &z)),
        );
        rec(
            "eq-3.19-left",
            m(sw, &m(&prec, &x, &y), &z),
            m(sw, &x, &m(&vee, &y, &z)),
        );
        rec(
            "eq-3.19-middle",
            m(sw, &m(&succ, &x, &y), &z),
            m(se, &x, &m(sw, &y, &z)),
        );
        rec(
            "eq-3.19-right",
            m(se, &m(&star, &x, &y), &z),
            m(se, &x, &m(se, &y, &z)),
        );
    });
    report
}

fn check_form_dim(alg: &Algebra, b: &BilinearForm) -> Result<()> {
    if alg.dim() != b.dim() {
        return Err(Error::dim(format!(
            "form of dimension {} on an algebra of dimension {}",
            b.dim(),
            alg.dim()
        )));
    }
    Ok(())
}

/// `B(x∘y,z) − B(x,y∘z) = B(y∘x,z) − B(y,x∘z)` on all basis triples.
pub fn check_prelie_cocycle(alg: &Algebra, b: &BilinearForm) -> Result<CheckReport> {
    let t = alg.require(Op::Circ, "the pre-Lie 2-cocycle check")?;
    check_form_dim(alg, b)?;
    let mut report = CheckReport::default();
    let side =
        |x: &[Scalar], y: &[Scalar], z: &[Scalar]| b.eval(&m(t, x, y), z) - b.eval(x, &m(t, y, z));
    for_triples(alg.dim(), |idx, [x, y, z]| {
        report.record("eq-2.8", &idx, vec![side(&x, &y, &z) - side(&y, &x, &z)]);
    });
    Ok(report)
}

/// `B(y,x) = −B(x,y)` on basis pairs.
pub fn skew_report(b: &BilinearForm) -> CheckReport {
    let mut report = CheckReport::default();
    let n = b.dim();
    for i in 0..n {
        for j in 0..n {
            report.record(
                "skew",
                &[i, j],
                vec![b.basis_value(i, j) + b.basis_value(j, i)],
            );
        }
    }
    report
}

/// `B(x▷y, z) = −B(y, [x,z]) − B(x, z▷y)`.
pub fn check_ldend_form_tri_r(alg: &Algebra, b: &BilinearForm) -> Result<CheckReport> {
    let r = alg.require(Op::TriR, "the L-dendriform form check")?;
    let l = alg.require(Op::TriL, "the L-dendriform form check")?;
    check_form_dim(alg, b)?;
    let bracket = functors::ldend_bracket_table(r, l);
    let mut report = CheckReport::default();
    for_triples(alg.dim(), |idx, [x, y, z]| {
        let lhs = b.eval(&m(r, &x, &y), &z);
        let rhs = -b.eval(&y, &m(&bracket, &x, &z)) - b.eval(&x, &m(r, &z, &y));
        report.record("eq-4.15", &idx, vec![lhs - rhs]);
    });
    Ok(report)
}

/// `B(x◁y, z) = −B(y, z∘x) + B(x, z•y)`.
pub fn check_ldend_form_tri_l(alg: &Algebra, b: &BilinearForm) -> Result<CheckReport> {
    let r = alg.require(Op::TriR, "the L-dendriform form check")?;
    let l = alg.require(Op::TriL, "the L-dendriform form check")?;
    check_form_dim(alg, b)?;
    let circ = functors::vertical_table(r, l);
    let bullet = functors::horizontal_table(r, l);
    let mut report = CheckReport::default();
    for_triples(alg.dim(), |idx, [x, y, z]| {
        let lhs = b.eval(&m(l, &x, &y), &z);
        let rhs = -b.eval(&y, &m(&circ, &z, &x)) + b.eval(&x, &m(&bullet, &z, &y));
        report.record("eq-4.16", &idx, vec![lhs - rhs]);
    });
    Ok(report)
}

/// A 2-cocycle of an L-dendriform algebra: skew-symmetric and satisfying
/// the `◁` form identity.
pub fn check_ldend_cocycle(alg: &Algebra, b: &BilinearForm) -> Result<CheckReport> {
    let mut report = skew_report(b);
    check_form_dim(alg, b)?;
    report.merge(check_ldend_form_tri_l(alg, b)?);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::scalar::int;

    #[test]
    fn fixtures_in_their_classes() {
        assert!(check_class(&fixtures::z2(), Class::PreLie)
            .unwrap()
            .passed());
        assert!(check_class(&fixtures::p1(), Class::PreLie)
            .unwrap()
            .passed());
        assert!(check_class(&fixtures::p2(), Class::PreLie)
            .unwrap()
            .passed());
        assert!(check_class(&fixtures::p2(), Class::Associative)
            .unwrap()
            .passed());
        assert!(check_class(&fixtures::l2(), Class::Lie).unwrap().passed());
        assert!(check_class(&fixtures::ld2(), Class::LDendriform)
            .unwrap()
            .passed());
    }

    #[test]
    fn n2_counterexample() {
        let report = check_class(&fixtures::n2(), Class::PreLie).unwrap();
        assert!(!report.passed());
        let first = &report.failures[0];
        assert_eq!(first.identity, "eq-2.2");
        assert_eq!(first.indices, vec![1, 2, 1]);
        assert_eq!(first.residual, vec![int(0), int(1)]);
        // the mirrored triple fails with the opposite residual
        let mirror = report
            .failures
            .iter()
            .find(|f| f.indices == [2, 1, 1])
            .unwrap();
        assert_eq!(mirror.residual, vec![int(0), int(-1)]);
    }

    #[test]
    fn missing_op_is_an_error() {
        assert!(matches!(
            check_class(&fixtures::p2(), Class::LDendriform),
            Err(Error::MissingOp { op: "tri_r", .. })
        ));
        assert!(check_class(&fixtures::ld2(), Class::Quadri).is_err());
    }

    #[test]
    fn non_lie_bracket_fails() {
        // symmetric "bracket" violates antisymmetry at (1,1)
        let alg = Algebra::from_sparse(1, Op::Bracket, &[(0, 0, 0, int(1))]).unwrap();
        let report = check_class(&alg, Class::Lie).unwrap();
        assert_eq!(report.failures[0].identity, "antisymmetry");
        assert_eq!(report.failures[0].indices, vec![1, 1]);
    }

    #[test]
    fn prelie_cocycle_examples() {
        let p2 = fixtures::p2();
        assert!(check_prelie_cocycle(&p2, &BilinearForm::zeros(2))
            .unwrap()
            .passed());
        let z2 = fixtures::z2();
        let b = BilinearForm::from_int_rows(&[&[3, -1], &[7, 2]]);
        assert!(check_prelie_cocycle(&z2, &b).unwrap().passed());

        // Brute force over all 8 triples for P2 with the identity Gram matrix:
        // f(x,y,z) = B(x∘y,z) − B(x,y∘z); f(1,2,2) = B(e2,e2) − 0 = 1 and
        // f(2,1,2) = 0 − B(e2,e2) = −1, every other pair of sides agrees.
        let report =
            check_prelie_cocycle(&p2, &BilinearForm::from_int_rows(&[&[1, 0], &[0, 1]])).unwrap();
        let failing: Vec<_> = report
            .failures
            .iter()
            .map(|f| (f.indices.clone(), f.residual[0].clone()))
            .collect();
        assert_eq!(
            failing,
            vec![(vec![1, 2, 2], int(2)), (vec![2, 1, 2], int(-2))]
        );
        assert_eq!(
            check_prelie_cocycle(&fixtures::ld2(), &BilinearForm::zeros(2))
                .unwrap_err()
                .to_string(),
            "algebra has no `circ` table (required by the pre-Lie 2-cocycle check)"
        );
        assert!(check_prelie_cocycle(&p2, &BilinearForm::zeros(3)).is_err());
    }

    #[test]
    fn ldend_cocycle_examples() {
        let ld2 = fixtures::ld2();
        assert!(check_ldend_cocycle(&ld2, &BilinearForm::zeros(2))
            .unwrap()
            .passed());
        let sym = BilinearForm::from_int_rows(&[&[1, 0], &[0, 1]]);
        let report = check_ldend_cocycle(&ld2, &sym).unwrap();
        assert_eq!(report.failures[0].identity, "skew");

        // LD2 with B = [[0,1],[−1,0]]: brute force of the ◁ identity over the
        // 8 basis triples (∘, • from the LD2 tables) leaves two violated
        // triples: (1,2,2) with residual −2 and (2,2,1) with residual −1.
        let b = BilinearForm::from_int_rows(&[&[0, 1], &[-1, 0]]);
        let report = check_ldend_cocycle(&ld2, &b).unwrap();
        let failing: Vec<_> = report
            .failures
            .iter()
            .map(|f| {
                (
                    f.identity.as_str(),
                    f.indices.clone(),
                    f.residual[0].clone(),
                )
            })
            .collect();
        assert_eq!(
            failing,
            vec![
                ("eq-4.16", vec![1, 2, 2], int(-2)),
                ("eq-4.16", vec![2, 2, 1], int(-1))
            ]
        );
    }

    #[test]
    fn class_names_parse() {
        for c in Class::ALL {
            assert_eq!(c.name().parse::<Class>().unwrap(), c);
        }
        assert!("jordan".parse::<Class>().is_err());
    }
}
