//! Modules over pre-Lie and L-dendriform algebras, their duals, and the
//! semidirect sums they define.
//!
//! Semidirect sums place the base basis first and the module basis second:
//! index `i < n` is `e_{i+1}`, index `n + j` is `v_{j+1}`.

use crate::algebra::{Algebra, Op, StructureConstants};
use crate::error::{Error, Result};
use crate::functors;
use crate::linear::{dual_rep, LinearMap, MatrixFamily};
use crate::report::CheckReport;
use crate::scalar::{basis, Scalar};

/// `(l, r, V)` over a pre-Lie algebra `(A, ∘)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreLieModule {
    base: Algebra,
    l: MatrixFamily,
    r: MatrixFamily,
}

impl PreLieModule {
    pub fn new(base: Algebra, l: MatrixFamily, r: MatrixFamily) -> Result<Self> {
        base.require(Op::Circ, "a pre-Lie module")?;
        let n = base.dim();
        if l.len() != n || r.len() != n {
            return Err(Error::dim(format!(
                "module families of length {} and {} over a dimension-{n} base",
                l.len(),
                r.len()
            )));
        }
        if l.vdim() != r.vdim() {
            return Err(Error::dim("l and r act on spaces of different dimension"));
        }
        Ok(PreLieModule { base, l, r })
    }

    /// `(L_∘, R_∘, A)`.
    pub fn regular(base: &Algebra) -> Result<Self> {
        Self::regular_of(base, Op::Circ)
    }

    /// Regular module of the product `op`, presented over a `circ` base.
    pub fn regular_of(base: &Algebra, op: Op) -> Result<Self> {
        let t = base.require(op, "the regular module")?;
        let circ_base = functors::rename(base, op, Op::Circ)?;
        Self::new(circ_base, t.left_family(), t.right_family())
    }

    pub fn base(&self) -> &Algebra {
        &self.base
    }

    pub fn vdim(&self) -> usize {
        self.l.vdim()
    }

    pub fn l(&self) -> &MatrixFamily {
        &self.l
    }

    pub fn r(&self) -> &MatrixFamily {
        &self.r
    }

    pub fn circ(&self) -> &StructureConstants {
        self.base.table(Op::Circ).expect("checked at construction")
    }
}

/// `(l▷, r▷, l◁, r◁, V)` over an L-dendriform algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LDendModule {
    base: Algebra,
    l_r: MatrixFamily,
    r_r: MatrixFamily,
    l_l: MatrixFamily,
    r_l: MatrixFamily,
}

impl LDendModule {
    pub fn new(
        base: Algebra,
        l_r: MatrixFamily,
        r_r: MatrixFamily,
        l_l: MatrixFamily,
        r_l: MatrixFamily,
    ) -> Result<Self> {
        base.require(Op::TriR, "an L-dendriform module")?;
        base.require(Op::TriL, "an L-dendriform module")?;
        let n = base.dim();
        let fams = [&l_r, &r_r, &l_l, &r_l];
        if fams.iter().any(|f| f.len() != n) {
            return Err(Error::dim(format!("module families must have length {n}")));
        }
        if fams.iter().any(|f| f.vdim() != l_r.vdim()) {
            return Err(Error::dim(
                "module families act on spaces of different dimension",
            ));
        }
        Ok(LDendModule {
            base,
            l_r,
            r_r,
            l_l,
            r_l,
        })
    }

    /// `(L▷, R▷, L◁, R◁, A)`.
    pub fn regular(base: &Algebra) -> Result<Self> {
        let r = base.require(Op::TriR, "the regular module")?;
        let l = base.require(Op::TriL, "the regular module")?;
        Self::new(
            base.clone(),
            r.left_family(),
            r.right_family(),
            l.left_family(),
            l.right_family(),
        )
    }

    pub fn base(&self) -> &Algebra {
        &self.base
    }

    pub fn vdim(&self) -> usize {
        self.l_r.vdim()
    }

    pub fn l_r(&self) -> &MatrixFamily {
        &self.l_r
    }

    pub fn r_r(&self) -> &MatrixFamily {
        &self.r_r
    }

    pub fn l_l(&self) -> &MatrixFamily {
        &self.l_l
    }

    pub fn r_l(&self) -> &MatrixFamily {
        &self.r_l
    }

    pub fn tri_r(&self) -> &StructureConstants {
        self.base.table(Op::TriR).expect("checked at construction")
    }

    pub fn tri_l(&self) -> &StructureConstants {
        self.base.table(Op::TriL).expect("checked at construction")
    }
}

fn flatten(m: &LinearMap) -> Vec<Scalar> {
    m.entries().map(|(_, _, v)| v.clone()).collect()
}

fn record_matrix(
    report: &mut CheckReport,
    id: &str,
    idx: &[usize],
    lhs: &LinearMap,
    rhs: &LinearMap,
) -> Result<()> {
    report.record(id, idx, flatten(&lhs.sub(rhs)?));
    Ok(())
}

/// Both module identities over all basis pairs, as matrix equalities.
pub fn check_prelie_module(m: &PreLieModule) -> Result<CheckReport> {
    let n = m.base.dim();
    let t = m.circ();
    let (l, r) = (&m.l, &m.r);
    let mut report = CheckReport::default();
    for i in 0..n {
        for j in 0..n {
            let (x, y) = (basis(n, i), basis(n, j));
            let xy = t.multiply(&x, &y);
            let yx = t.multiply(&y, &x);
            let (lx, ly) = (l.get(i), l.get(j));
            let (rx, ry) = (r.get(i), r.get(j));
            // l(x)l(y) − l(x∘y) = l(y)l(x) − l(y∘x)
            let lhs = lx.compose(ly)?.sub(&l.at(&xy)?)?;
            let rhs = ly.compose(lx)?.sub(&l.at(&yx)?)?;
            record_matrix(&mut report, "eq-2.5", &[i, j], &lhs, &rhs)?;
            // l(x)r(y) − r(y)l(x) = r(x∘y) − r(y)r(x)
            let lhs = lx.commutator(ry)?;
            let rhs = r.at(&xy)?.sub(&ry.compose(rx)?)?;
            record_matrix(&mut report, "eq-2.6", &[i, j], &lhs, &rhs)?;
        }
    }
    Ok(report)
}

/// `(l* − r*, −r*, V*)`.
pub fn dual_prelie_module(m: &PreLieModule) -> Result<PreLieModule> {
    let l_star = dual_rep(&m.l);
    let r_star = dual_rep(&m.r);
    PreLieModule::new(m.base.clone(), l_star.sub(&r_star)?, r_star.neg())
}

/// `(L▷, −L◁, A)` over the vertical pre-Lie algebra `(A, ∘)`.
pub fn vertical_module(alg: &Algebra) -> Result<PreLieModule> {
    let base = functors::vertical_prelie(alg)?;
    let r = alg.require(Op::TriR, "the vertical module")?;
    let l = alg.require(Op::TriL, "the vertical module")?;
    PreLieModule::new(base, r.left_family(), l.left_family().neg())
}

/// `(L▷, R◁, A)` over the horizontal pre-Lie algebra `(A, •)`, presented
/// with `•` stored as `circ`.
pub fn horizontal_module(alg: &Algebra) -> Result<PreLieModule> {
    let base = functors::rename(&functors::horizontal_prelie(alg)?, Op::Bullet, Op::Circ)?;
    let r = alg.require(Op::TriR, "the horizontal module")?;
    let l = alg.require(Op::TriL, "the horizontal module")?;
    PreLieModule::new(base, r.left_family(), l.right_family())
}

/// `(x+u)∘(y+v) = x∘y + l(x)v + r(y)u` on `A ⊕ V`.
pub fn semidirect_prelie(m: &PreLieModule) -> Result<Algebra> {
    let table = semidirect_table(m.circ(), &m.l, &m.r);
    Ok(Algebra::new(table.dim())
        .with_op(Op::Circ, table)?
        .with_tag("pre_lie"))
}

fn semidirect_table(
    base: &StructureConstants,
    l: &MatrixFamily,
    r: &MatrixFamily,
) -> StructureConstants {
    let n = base.dim();
    let d = n + l.vdim();
    let mut t = StructureConstants::zeros(d);
    for (i, j, k, v) in base.nonzero() {
        t.set(i, j, k, v.clone());
    }
    for x in 0..n {
        for (k, vj, val) in l.get(x).entries() {
            // e_x · v_j = l(e_x) v_j
            t.set(x, n + vj, n + k, val.clone());
        }
        for (k, uj, val) in r.get(x).entries() {
            // u_j · e_x = r(e_x) u_j
            t.set(n + uj, x, n + k, val.clone());
        }
    }
    t
}

/// The five L-dendriform module identities, with `∘`, `•` and the bracket
/// computed from the base tables.
pub fn check_ldend_module(m: &LDendModule) -> Result<CheckReport> {
    let n = m.base.dim();
    let (tr, tl) = (m.tri_r(), m.tri_l());
    let circ = functors::vertical_table(tr, tl);
    let bullet = functors::horizontal_table(tr, tl);
    let bracket = bullet.commutator();
    let mut report = CheckReport::default();
    for i in 0..n {
        for j in 0..n {
            let (x, y) = (basis(n, i), basis(n, j));
            let idx = [i, j];
            let (lrx, lry) = (m.l_r.get(i), m.l_r.get(j));
            let (llx, lly) = (m.l_l.get(i), m.l_l.get(j));
            let (rrx, rry) = (m.r_r.get(i), m.r_r.get(j));
            let (rlx, rly) = (m.r_l.get(i), m.r_l.get(j));

            // [l▷(x), l▷(y)] = l▷([x,y])
            let lhs = lrx.commutator(lry)?;
            let rhs = m.l_r.at(&bracket.multiply(&x, &y))?;
            record_matrix(&mut report, "eq-4.1", &idx, &lhs, &rhs)?;

            // [l▷(x), l◁(y)] = l◁(x∘y) + l◁(y)l◁(x)
            let lhs = lrx.commutator(lly)?;
            let rhs = m.l_l.at(&circ.multiply(&x, &y))?.add(&lly.compose(llx)?)?;
            record_matrix(&mut report, "eq-4.2", &idx, &lhs, &rhs)?;

            // r▷(x▷y) = r▷(y)r▷(x) + r▷(y)r◁(x) + [l▷(x), r▷(y)] − r▷(y)l◁(x)
            let lhs = m.r_r.at(&tr.multiply(&x, &y))?;
            let rhs = rry
                .compose(rrx)?
                .add(&rry.compose(rlx)?)?
                .add(&lrx.commutator(rry)?)?
                .sub(&rry.compose(llx)?)?;
            record_matrix(&mut report, "eq-4.3", &idx, &lhs, &rhs)?;

            // r▷(x◁y) = r◁(y)r▷(x) + l◁(x)r▷(y) + [l◁(x), r◁(y)]
            let lhs = m.r_r.at(&tl.multiply(&x, &y))?;
            let rhs = rly
                .compose(rrx)?
                .add(&llx.compose(rry)?)?
                .add(&llx.commutator(rly)?)?;
            record_matrix(&mut report, "eq-4.4", &idx, &lhs, &rhs)?;

            // [l▷(x), r◁(y)] = r◁(x•y) − r◁(y)r◁(x)
            let lhs = lrx.commutator(rly)?;
            let rhs = m
                .r_l
                .at(&bullet.multiply(&x, &y))?
                .sub(&rly.compose(rlx)?)?;
            record_matrix(&mut report, "eq-4.5", &idx, &lhs, &rhs)?;
        }
    }
    Ok(report)
}

/// `(l▷*+l◁*−r▷*−r◁*, r▷*, r▷*−l◁*, −(r▷*+r◁*), V*)`.
pub fn dual_ldend_module(m: &LDendModule) -> Result<LDendModule> {
    let lr = dual_rep(&m.l_r);
    let rr = dual_rep(&m.r_r);
    let ll = dual_rep(&m.l_l);
    let rl = dual_rep(&m.r_l);
    LDendModule::new(
        m.base.clone(),
        lr.add(&ll)?.sub(&rr)?.sub(&rl)?,
        rr.clone(),
        rr.sub(&ll)?,
        rr.add(&rl)?.neg(),
    )
}

/// Both products extended to `A ⊕ V` by the four actions; `V·V = 0`.
pub fn semidirect_ldend(m: &LDendModule) -> Result<Algebra> {
    let tri_r = semidirect_table(m.tri_r(), &m.l_r, &m.r_r);
    let tri_l = semidirect_table(m.tri_l(), &m.l_l, &m.r_l);
    Ok(Algebra::new(tri_r.dim())
        .with_op(Op::TriR, tri_r)?
        .with_op(Op::TriL, tri_l)?
        .with_tag("l_dendriform"))
}
