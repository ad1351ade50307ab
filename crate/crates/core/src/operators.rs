//! O-operators and Rota-Baxter operators, and the L-dendriform and pre-Lie
//! structures they induce.
//!
//! Every constructor comes in two forms: the plain one verifies the
//! hypotheses it needs and refuses to build otherwise, the `_unchecked`
//! one only does the table arithmetic.

use num_traits::Zero;

use crate::algebra::{Algebra, Op, StructureConstants};
use crate::axioms;
use crate::error::{Error, Result};
use crate::form::BilinearForm;
use crate::linear::{LinearMap, MatrixFamily};
use crate::report::CheckReport;
use crate::representations::{LDendModule, PreLieModule};
use crate::scalar::{self, basis, Scalar};

fn check_map_shape(t: &LinearMap, rows: usize, cols: usize, what: &str) -> Result<()> {
    if t.rows() != rows || t.cols() != cols {
        return Err(Error::dim(format!(
            "{what} must be {rows}x{cols}, got {}x{}",
            t.rows(),
            t.cols()
        )));
    }
    Ok(())
}

fn require_passed(report: CheckReport, what: &str) -> Result<()> {
    if report.passed() {
        Ok(())
    } else {
        Err(Error::precondition(what.to_string(), Some(report)))
    }
}

/// `T(u)∘T(v) = T(l(T(u))v + r(T(v))u)` over all pairs of module basis vectors.
pub fn check_o_prelie(t: &LinearMap, m: &PreLieModule) -> Result<CheckReport> {
    let n = m.base().dim();
    let vd = m.vdim();
    check_map_shape(t, n, vd, "an O-operator V → A")?;
    let circ = m.circ();
    let images: Vec<Vec<Scalar>> = (0..vd).map(|i| t.column(i)).collect();
    let lefts: Vec<LinearMap> = images.iter().map(|x| m.l().at(x)).collect::<Result<_>>()?;
    let rights: Vec<LinearMap> = images.iter().map(|x| m.r().at(x)).collect::<Result<_>>()?;
    let mut report = CheckReport::default();
    for i in 0..vd {
        for j in 0..vd {
            let (u, v) = (basis(vd, i), basis(vd, j));
            let lhs = circ.multiply(&images[i], &images[j]);
            let inner = scalar::add_vec(&lefts[i].apply(&v)?, &rights[j].apply(&u)?);
            let rhs = t.apply(&inner)?;
            report.record("eq-2.10", &[i, j], scalar::sub_vec(&lhs, &rhs));
        }
    }
    Ok(report)
}

/// `R(x)∘R(y) = R(R(x)∘y + x∘R(y))`.
pub fn check_rota_baxter_prelie(r: &LinearMap, alg: &Algebra) -> Result<CheckReport> {
    let circ = alg.require(Op::Circ, "the Rota-Baxter check")?;
    rota_baxter_report(r, circ)
}

fn rota_baxter_report(r: &LinearMap, circ: &StructureConstants) -> Result<CheckReport> {
    let n = circ.dim();
    check_map_shape(r, n, n, "a Rota-Baxter operator")?;
    let images: Vec<Vec<Scalar>> = (0..n).map(|i| r.column(i)).collect();
    let mut report = CheckReport::default();
    for i in 0..n {
        for j in 0..n {
            let (x, y) = (basis(n, i), basis(n, j));
            let lhs = circ.multiply(&images[i], &images[j]);
            let inner = scalar::add_vec(
                &circ.multiply(&images[i], &y),
                &circ.multiply(&x, &images[j]),
            );
            report.record("eq-2.11", &[i, j], scalar::sub_vec(&lhs, &r.apply(&inner)?));
        }
    }
    Ok(report)
}

/// The adjoint representation `ad(x) = [x, ·]` as a matrix family.
pub fn adjoint(lie: &Algebra) -> Result<MatrixFamily> {
    Ok(lie
        .require(Op::Bracket, "the adjoint representation")?
        .left_family())
}

/// `[T(u), T(v)] = T(ρ(T(u))v − ρ(T(v))u)`.
pub fn check_o_lie(t: &LinearMap, lie: &Algebra, rho: &MatrixFamily) -> Result<CheckReport> {
    let bracket = lie.require(Op::Bracket, "the Lie O-operator check")?;
    let n = lie.dim();
    let vd = rho.vdim();
    if rho.len() != n {
        return Err(Error::dim(format!(
            "representation of length {} over dimension {n}",
            rho.len()
        )));
    }
    check_map_shape(t, n, vd, "an O-operator V → 𝔤")?;
    let images: Vec<Vec<Scalar>> = (0..vd).map(|i| t.column(i)).collect();
    let acts: Vec<LinearMap> = images.iter().map(|x| rho.at(x)).collect::<Result<_>>()?;
    let mut report = CheckReport::default();
    for i in 0..vd {
        for j in 0..vd {
            let (u, v) = (basis(vd, i), basis(vd, j));
            let lhs = bracket.multiply(&images[i], &images[j]);
            let inner = scalar::sub_vec(&acts[i].apply(&v)?, &acts[j].apply(&u)?);
            report.record("eq-3.13", &[i, j], scalar::sub_vec(&lhs, &t.apply(&inner)?));
        }
    }
    Ok(report)
}

/// Both identities `T(u)▷T(v) = T[l▷(T(u))v + r▷(T(v))u]` and the `◁`
/// counterpart.
pub fn check_o_ldend(t: &LinearMap, m: &LDendModule) -> Result<CheckReport> {
    let n = m.base().dim();
    let vd = m.vdim();
    check_map_shape(t, n, vd, "an O-operator V → A")?;
    let images: Vec<Vec<Scalar>> = (0..vd).map(|i| t.column(i)).collect();
    let at = |fam: &MatrixFamily| -> Result<Vec<LinearMap>> {
        images.iter().map(|x| fam.at(x)).collect()
    };
    let (lr, rr, ll, rl) = (at(m.l_r())?, at(m.r_r())?, at(m.l_l())?, at(m.r_l())?);
    let mut report = CheckReport::default();
    for i in 0..vd {
        for j in 0..vd {
            let (u, v) = (basis(vd, i), basis(vd, j));
            let lhs = m.tri_r().multiply(&images[i], &images[j]);
            let inner = scalar::add_vec(&lr[i].apply(&v)?, &rr[j].apply(&u)?);
            report.record(
                "eq-4.7-tri_r",
                &[i, j],
                scalar::sub_vec(&lhs, &t.apply(&inner)?),
            );

            let lhs = m.tri_l().multiply(&images[i], &images[j]);
            let inner = scalar::add_vec(&ll[i].apply(&v)?, &rl[j].apply(&u)?);
            report.record(
                "eq-4.7-tri_l",
                &[i, j],
                scalar::sub_vec(&lhs, &t.apply(&inner)?),
            );
        }
    }
    Ok(report)
}

fn ldend_algebra(
    tri_r: StructureConstants,
    tri_l: StructureConstants,
    tag: &str,
) -> Result<Algebra> {
    Ok(Algebra::new(tri_r.dim())
        .with_op(Op::TriR, tri_r)?
        .with_op(Op::TriL, tri_l)?
        .with_tag(tag))
}

/// The L-dendriform structure induced on the module space by an O-operator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedLDend {
    /// `u▷v = l(T(u))v`, `u◁v = −r(T(u))v` on `V`.
    pub on_module: Algebra,
    /// When `T` is injective, the structure `T(u)▷T(v) = T(u▷v)` on the
    /// image `T(V)`, written in the basis `T(v_1), …, T(v_m)`; the columns
    /// of `image_basis` are those vectors in `A`.
    pub on_image: Option<Algebra>,
    pub image_basis: Option<LinearMap>,
}

pub fn ldend_from_o_prelie(t: &LinearMap, m: &PreLieModule) -> Result<InducedLDend> {
    require_passed(
        check_o_prelie(t, m)?,
        "the map is not an O-operator of the module",
    )?;
    ldend_from_o_prelie_unchecked(t, m)
}

pub fn ldend_from_o_prelie_unchecked(t: &LinearMap, m: &PreLieModule) -> Result<InducedLDend> {
    let vd = m.vdim();
    check_map_shape(t, m.base().dim(), vd, "an O-operator V → A")?;
    let lefts: Vec<LinearMap> = (0..vd)
        .map(|i| m.l().at(&t.column(i)))
        .collect::<Result<_>>()?;
    let rights: Vec<LinearMap> = (0..vd)
        .map(|i| m.r().at(&t.column(i)))
        .collect::<Result<_>>()?;
    let tri_r = StructureConstants::from_products(vd, |i, j| lefts[i].column(j));
    let tri_l = StructureConstants::from_products(vd, |i, j| scalar::neg_vec(&rights[i].column(j)));
    let on_module = ldend_algebra(tri_r, tri_l, "l_dendriform")?;
    let injective = t.rank() == vd;
    Ok(InducedLDend {
        on_image: injective.then(|| on_module.clone().with_tag("l_dendriform on T(V)")),
        image_basis: injective.then(|| t.clone()),
        on_module,
    })
}

/// `x▷y = R(x)∘y`, `x◁y = −y∘R(x)`.
pub fn ldend_from_rb(r: &LinearMap, alg: &Algebra) -> Result<Algebra> {
    require_passed(
        check_rota_baxter_prelie(r, alg)?,
        "not a Rota-Baxter operator of weight zero",
    )?;
    ldend_from_rb_unchecked(r, alg)
}

pub fn ldend_from_rb_unchecked(r: &LinearMap, alg: &Algebra) -> Result<Algebra> {
    let circ = alg.require(Op::Circ, "ldend_from_rb")?;
    let n = alg.dim();
    check_map_shape(r, n, n, "a Rota-Baxter operator")?;
    let tri_r =
        StructureConstants::from_products(n, |i, j| circ.multiply(&r.column(i), &basis(n, j)));
    let tri_l = StructureConstants::from_products(n, |i, j| {
        scalar::neg_vec(&circ.multiply(&basis(n, j), &r.column(i)))
    });
    ldend_algebra(tri_r, tri_l, "l_dendriform")
}

/// `x∘y = [R(x), y]` for an O-operator `R` of `(𝔤, ad)`.
pub fn prelie_from_o_lie(r: &LinearMap, lie: &Algebra) -> Result<Algebra> {
    require_passed(
        check_o_lie(r, lie, &adjoint(lie)?)?,
        "not an O-operator of (𝔤, ad)",
    )?;
    prelie_from_o_lie_unchecked(r, lie)
}

pub fn prelie_from_o_lie_unchecked(r: &LinearMap, lie: &Algebra) -> Result<Algebra> {
    let bracket = lie.require(Op::Bracket, "prelie_from_o_lie")?;
    let n = lie.dim();
    check_map_shape(r, n, n, "an O-operator of (𝔤, ad)")?;
    let circ =
        StructureConstants::from_products(n, |i, j| bracket.multiply(&r.column(i), &basis(n, j)));
    Ok(Algebra::new(n).with_op(Op::Circ, circ)?.with_tag("pre_lie"))
}

/// `x▷y = [R₁(R₂(x)), y]`, `x◁y = [R₂(x), R₁(y)]` for commuting O-operators.
pub fn ldend_from_commuting_pair(r1: &LinearMap, r2: &LinearMap, lie: &Algebra) -> Result<Algebra> {
    let ad = adjoint(lie)?;
    require_passed(
        check_o_lie(r1, lie, &ad)?,
        "R1 is not an O-operator of (𝔤, ad)",
    )?;
    require_passed(
        check_o_lie(r2, lie, &ad)?,
        "R2 is not an O-operator of (𝔤, ad)",
    )?;
    if r1.compose(r2)? != r2.compose(r1)? {
        return Err(Error::precondition("R1 and R2 do not commute", None));
    }
    ldend_from_commuting_pair_unchecked(r1, r2, lie)
}

pub fn ldend_from_commuting_pair_unchecked(
    r1: &LinearMap,
    r2: &LinearMap,
    lie: &Algebra,
) -> Result<Algebra> {
    let bracket = lie.require(Op::Bracket, "ldend_from_commuting_pair")?;
    let n = lie.dim();
    check_map_shape(r1, n, n, "R1")?;
    check_map_shape(r2, n, n, "R2")?;
    let r12 = r1.compose(r2)?;
    let tri_r =
        StructureConstants::from_products(n, |i, j| bracket.multiply(&r12.column(i), &basis(n, j)));
    let tri_l =
        StructureConstants::from_products(n, |i, j| bracket.multiply(&r2.column(i), &r1.column(j)));
    ldend_algebra(tri_r, tri_l, "l_dendriform")
}

/// `x▷y = T(l(x)T⁻¹(y))`, `x◁y = −T(r(x)T⁻¹(y))` for an invertible
/// O-operator; its vertical pre-Lie product is the base `∘`.
pub fn compatible_ldend_from_invertible_o(t: &LinearMap, m: &PreLieModule) -> Result<Algebra> {
    if !t.is_invertible() {
        return Err(Error::Singular);
    }
    require_passed(
        check_o_prelie(t, m)?,
        "the map is not an O-operator of the module",
    )?;
    compatible_ldend_from_invertible_o_unchecked(t, m)
}

pub fn compatible_ldend_from_invertible_o_unchecked(
    t: &LinearMap,
    m: &PreLieModule,
) -> Result<Algebra> {
    let n = m.base().dim();
    check_map_shape(t, n, m.vdim(), "an invertible O-operator")?;
    let t_inv = t.inverse()?;
    let conj = |fam: &MatrixFamily, i: usize| -> Result<LinearMap> {
        t.compose(&fam.get(i).compose(&t_inv)?)
    };
    let tl: Vec<LinearMap> = (0..n).map(|i| conj(m.l(), i)).collect::<Result<_>>()?;
    let tr: Vec<LinearMap> = (0..n).map(|i| conj(m.r(), i)).collect::<Result<_>>()?;
    let tri_r = StructureConstants::from_products(n, |i, j| tl[i].column(j));
    let tri_l = StructureConstants::from_products(n, |i, j| scalar::neg_vec(&tr[i].column(j)));
    ldend_algebra(tri_r, tri_l, "l_dendriform")
}

/// The compatible L-dendriform structure of a nondegenerate symmetric
/// 2-cocycle: `B(x▷y,z) = −B(y,[x,z])`, `B(x◁y,z) = −B(y,z∘x)`.
pub fn ldend_from_2cocycle(alg: &Algebra, b: &BilinearForm) -> Result<Algebra> {
    alg.require(Op::Circ, "ldend_from_2cocycle")?;
    if b.dim() != alg.dim() {
        return Err(Error::dim("form and algebra dimensions differ"));
    }
    if !b.is_symmetric() {
        return Err(Error::precondition("the form is not symmetric", None));
    }
    if !b.is_nondegenerate() {
        return Err(Error::precondition("the form is degenerate", None));
    }
    require_passed(
        axioms::check_prelie_cocycle(alg, b)?,
        "the form is not a 2-cocycle",
    )?;
    ldend_from_2cocycle_unchecked(alg, b)
}

pub fn ldend_from_2cocycle_unchecked(alg: &Algebra, b: &BilinearForm) -> Result<Algebra> {
    let circ = alg.require(Op::Circ, "ldend_from_2cocycle")?;
    let n = alg.dim();
    let bracket = circ.commutator();
    // B(w, e_k) = Σ_p w_p G[p][k] = rhs_k, so w = (Gᵀ)⁻¹ rhs
    let solve = b.gram().transpose().inverse()?;
    let mut tri_r = StructureConstants::zeros(n);
    let mut tri_l = StructureConstants::zeros(n);
    for i in 0..n {
        for j in 0..n {
            let (x, y) = (basis(n, i), basis(n, j));
            let rhs_r: Vec<Scalar> = (0..n)
                .map(|k| -b.eval(&y, &bracket.multiply(&x, &basis(n, k))))
                .collect();
            let rhs_l: Vec<Scalar> = (0..n)
                .map(|k| -b.eval(&y, &circ.multiply(&basis(n, k), &x)))
                .collect();
            for (k, v) in solve.apply(&rhs_r)?.into_iter().enumerate() {
                tri_r.set(i, j, k, v);
            }
            for (k, v) in solve.apply(&rhs_l)?.into_iter().enumerate() {
                tri_l.set(i, j, k, v);
            }
        }
    }
    ldend_algebra(tri_r, tri_l, "l_dendriform")
}

pub const DEFAULT_SEARCH_CAP: u128 = 1_000_000;

fn normalized_entries(entry_set: &[Scalar]) -> Vec<Scalar> {
    let mut e = entry_set.to_vec();
    e.sort();
    e.dedup();
    e
}

fn candidate_count(choices: usize, slots: usize, cap: u128) -> Result<u128> {
    let mut count: u128 = 1;
    for _ in 0..slots {
        count = count.saturating_mul(choices as u128);
    }
    if count > cap {
        return Err(Error::SearchTooLarge {
            candidates: count,
            cap,
        });
    }
    Ok(count)
}

/// Visit every assignment of `slots` positions from `entries` in
/// lexicographic order (first position most significant).
fn for_each_assignment(entries: &[Scalar], slots: usize, mut f: impl FnMut(&[Scalar])) {
    if entries.is_empty() {
        return;
    }
    let mut digits = vec![0usize; slots];
    let mut values: Vec<Scalar> = vec![entries[0].clone(); slots];
    loop {
        f(&values);
        let mut pos = slots;
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < entries.len() {
                values[pos] = entries[digits[pos]].clone();
                break;
            }
            digits[pos] = 0;
            values[pos] = entries[0].clone();
        }
    }
}

/// Every `rows × cols` matrix with entries from `entry_set` accepted by
/// `keep`, in lexicographic row-major order of the sorted entry set.
pub fn search_maps(
    rows: usize,
    cols: usize,
    entry_set: &[Scalar],
    cap: u128,
    mut keep: impl FnMut(&LinearMap) -> Result<bool>,
) -> Result<Vec<LinearMap>> {
    let entries = normalized_entries(entry_set);
    candidate_count(entries.len(), rows * cols, cap)?;
    let mut found = Vec::new();
    let mut err = None;
    for_each_assignment(&entries, rows * cols, |vals| {
        if err.is_some() {
            return;
        }
        let m = LinearMap::from_fn(rows, cols, |i, j| vals[i * cols + j].clone());
        match keep(&m) {
            Ok(true) => found.push(m),
            Ok(false) => {}
            Err(e) => err = Some(e),
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok(found),
    }
}

/// All Rota-Baxter operators of weight zero with entries from `entry_set`.
pub fn search_rb(alg: &Algebra, entry_set: &[Scalar], cap: u128) -> Result<Vec<LinearMap>> {
    let circ = alg.require(Op::Circ, "search_rb")?;
    let n = alg.dim();
    search_maps(n, n, entry_set, cap, |m| {
        Ok(rota_baxter_report(m, circ)?.passed())
    })
}

/// Nondegenerate symmetric 2-cocycles of `(alg, ∘)` whose Gram entries lie
/// in `entry_set`, in lexicographic order of the upper triangle.
///
/// The cocycle condition is linear in the Gram matrix, so candidates are
/// screened against a row-reduced constraint system before the full check.
pub fn search_symmetric_cocycles(
    alg: &Algebra,
    entry_set: &[Scalar],
    cap: u128,
) -> Result<Vec<BilinearForm>> {
    let n = alg.dim();
    alg.require(Op::Circ, "search_symmetric_cocycles")?;
    let params: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let entries = normalized_entries(entry_set);
    candidate_count(entries.len(), params.len(), cap)?;

    // column p of the constraint matrix: cocycle residuals of the p-th
    // symmetric unit form, one row per basis triple
    let mut columns = Vec::with_capacity(params.len());
    for &(i, j) in &params {
        let mut unit = LinearMap::zeros(n, n);
        unit.set(i, j, scalar::one());
        unit.set(j, i, scalar::one());
        let form = BilinearForm::new(unit)?;
        let report = axioms::check_prelie_cocycle(alg, &form)?;
        let mut col = vec![scalar::zero(); n * n * n];
        for f in &report.failures {
            let idx = ((f.indices[0] - 1) * n + (f.indices[1] - 1)) * n + (f.indices[2] - 1);
            col[idx] = f.residual[0].clone();
        }
        columns.push(col);
    }
    let constraints = LinearMap::from_columns(n * n * n, &columns)?;
    let reduced = reduced_rows(&constraints);

    let mut found = Vec::new();
    let mut err = None;
    for_each_assignment(&entries, params.len(), |vals| {
        if err.is_some() {
            return;
        }
        let screened = reduced.iter().all(|row| {
            row.iter()
                .zip(vals)
                .filter(|(c, _)| !c.is_zero())
                .fold(scalar::zero(), |acc, (c, v)| acc + c * v)
                .is_zero()
        });
        if !screened {
            return;
        }
        let mut gram = LinearMap::zeros(n, n);
        for (&(i, j), v) in params.iter().zip(vals) {
            gram.set(i, j, v.clone());
            gram.set(j, i, v.clone());
        }
        let form = BilinearForm::new(gram).expect("square");
        if !form.is_nondegenerate() {
            return;
        }
        match axioms::check_prelie_cocycle(alg, &form) {
            Ok(r) if r.passed() => found.push(form),
            Ok(_) => {}
            Err(e) => err = Some(e),
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok(found),
    }
}

/// Nonzero rows of a row echelon form of `m`.
fn reduced_rows(m: &LinearMap) -> Vec<Vec<Scalar>> {
    let mut rows: Vec<Vec<Scalar>> = (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m.get(i, j).clone()).collect())
        .filter(|r: &Vec<Scalar>| !scalar::is_zero_vec(r))
        .collect();
    let mut out: Vec<Vec<Scalar>> = Vec::new();
    for col in 0..m.cols() {
        let Some(p) = rows.iter().position(|r| !r[col].is_zero()) else {
            continue;
        };
        let pivot = rows.swap_remove(p);
        for r in rows.iter_mut() {
            if !r[col].is_zero() {
                let f = &r[col] / &pivot[col];
                for (x, y) in r.iter_mut().zip(&pivot) {
                    *x -= &f * y;
                }
            }
        }
        rows.retain(|r| !scalar::is_zero_vec(r));
        out.push(pivot);
    }
    out
}
