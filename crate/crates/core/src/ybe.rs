//! The S-equation of a pre-Lie algebra and the LD-equation of an
//! L-dendriform algebra: residuals, equivalence checks, and the solutions
//! built from O-operators.
//!
//! Derived products (the sub-adjacent bracket, `∘`, `•`) are always
//! recomputed from the supplied tables, so residuals stay meaningful on
//! inputs that fail their class axioms.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::algebra::{Algebra, Op, StructureConstants};
use crate::axioms;
use crate::error::{Error, Result};
use crate::form::{form_from_invertible_map, BilinearForm};
use crate::functors;
use crate::linear::LinearMap;
use crate::operators;
use crate::report::CheckReport;
use crate::representations::{self, LDendModule, PreLieModule};
use crate::tensor::{slot_product_with, SlotPair, Tensor2, Tensor3};

const S12: SlotPair = SlotPair::S12;
const S13: SlotPair = SlotPair::S13;
const S23: SlotPair = SlotPair::S23;

fn check_dim(n: usize, r: &Tensor2) -> Result<()> {
    if r.dim() != n {
        return Err(Error::dim(format!(
            "tensor of dim {} in a dimension-{n} algebra",
            r.dim()
        )));
    }
    Ok(())
}

/// Signed sum of slot products `r_a · r_b`.
fn combination(
    terms: &[(i8, &StructureConstants, SlotPair, SlotPair)],
    r: &Tensor2,
) -> Result<Tensor3> {
    let mut acc = Tensor3::zeros(r.dim());
    for &(sign, table, a, b) in terms {
        let t = slot_product_with(table, r, a, r, b)?;
        acc = if sign < 0 { acc.sub(&t)? } else { acc.add(&t)? };
    }
    Ok(acc)
}

/// `−r₁₂∘r₁₃ + r₁₂∘r₂₃ + [r₁₃, r₂₃]`.
pub fn s_residual(alg: &Algebra, r: &Tensor2) -> Result<Tensor3> {
    let circ = alg.require(Op::Circ, "the S-equation")?;
    check_dim(alg.dim(), r)?;
    let bracket = circ.commutator();
    combination(
        &[
            (-1, circ, S12, S13),
            (1, circ, S12, S23),
            (1, &bracket, S13, S23),
        ],
        r,
    )
}

/// `r₁₃∘r₂₃ + [r₁₂, r₂₃] − r₁₃∘r₁₂`, the form of the S-equation that a
/// symmetric `r` also satisfies.
pub fn s_alternate_residual(alg: &Algebra, r: &Tensor2) -> Result<Tensor3> {
    let circ = alg.require(Op::Circ, "the S-equation")?;
    check_dim(alg.dim(), r)?;
    let bracket = circ.commutator();
    combination(
        &[
            (1, circ, S13, S23),
            (1, &bracket, S12, S23),
            (-1, circ, S13, S12),
        ],
        r,
    )
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SEquivalence {
    pub residual: Tensor3,
    pub alternate: Tensor3,
    /// O-operator check of `r` viewed as a map `A* → A` for the module
    /// `(L∘* − R∘*, −R∘*, A*)`.
    pub o_operator: CheckReport,
}

impl SEquivalence {
    pub fn all_vanish(&self) -> bool {
        self.residual.is_zero() && self.alternate.is_zero() && self.o_operator.passed()
    }

    /// All three conditions agree.
    pub fn consistent(&self) -> bool {
        let s = self.residual.is_zero();
        s == self.alternate.is_zero() && s == self.o_operator.passed()
    }
}

pub fn s_equivalence_check(alg: &Algebra, r: &Tensor2) -> Result<SEquivalence> {
    if !r.is_symmetric() {
        return Err(Error::Symmetry("symmetric"));
    }
    let module = representations::dual_prelie_module(&PreLieModule::regular(alg)?)?;
    Ok(SEquivalence {
        residual: s_residual(alg, r)?,
        alternate: s_alternate_residual(alg, r)?,
        o_operator: operators::check_o_prelie(&r.to_map(), &module)?,
    })
}

/// The LD-equation and its companions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LdEquation {
    /// `r₁₃∘r₂₃ + r₁₂•r₂₃ − r₁₂◁r₁₃`.
    Main,
    /// `r₁₃▷r₂₃ + [r₁₂, r₂₃] − r₁₃▷r₁₂`.
    AuxA,
    /// `r₂₃◁r₁₃ − r₁₃∘r₁₂ − r₂₃•r₁₂`.
    AuxB,
    /// `r₂₃∘r₁₃ − r₁₂•r₁₃ + r₁₂◁r₂₃`.
    P1,
    /// `r₂₃∘r₁₂ + r₁₃•r₁₂ + r₁₃◁r₂₃`.
    P2,
    /// `r₁₂∘r₂₃ + r₁₃•r₂₃ + r₁₃◁r₁₂`.
    P3,
    /// `r₁₂∘r₁₃ − r₂₃•r₁₃ + r₂₃◁r₁₂`.
    P4,
}

impl LdEquation {
    pub const ALL: [LdEquation; 7] = [
        LdEquation::Main,
        LdEquation::AuxA,
        LdEquation::AuxB,
        LdEquation::P1,
        LdEquation::P2,
        LdEquation::P3,
        LdEquation::P4,
    ];

    pub fn id(self) -> &'static str {
        match self {
            LdEquation::Main => "eq-4.8",
            LdEquation::AuxA => "eq-4.9",
            LdEquation::AuxB => "eq-4.10",
            LdEquation::P1 => "eq-4.11",
            LdEquation::P2 => "eq-4.12",
            LdEquation::P3 => "eq-4.13",
            LdEquation::P4 => "eq-4.14",
        }
    }

    pub fn short_name(self) -> &'static str {
        match self {
            LdEquation::Main => "main",
            LdEquation::AuxA => "aux-a",
            LdEquation::AuxB => "aux-b",
            LdEquation::P1 => "p1",
            LdEquation::P2 => "p2",
            LdEquation::P3 => "p3",
            LdEquation::P4 => "p4",
        }
    }
}

impl fmt::Display for LdEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for LdEquation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        LdEquation::ALL
            .into_iter()
            .find(|e| e.id() == s || e.short_name() == s)
            .ok_or_else(|| Error::Unknown {
                kind: "equation",
                name: s.to_string(),
            })
    }
}

/// Any equation accepted by [`residual`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Equation {
    S,
    SAlternate,
    Ld(LdEquation),
}

impl Equation {
    pub fn id(self) -> &'static str {
        match self {
            Equation::S => "eq-2.9",
            Equation::SAlternate => "eq-2.9-alt",
            Equation::Ld(e) => e.id(),
        }
    }
}

impl fmt::Display for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Equation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "eq-2.9" | "s" => Ok(Equation::S),
            "eq-2.9-alt" | "s-alt" => Ok(Equation::SAlternate),
            _ => s.parse().map(Equation::Ld),
        }
    }
}

pub fn residual(alg: &Algebra, r: &Tensor2, eq: Equation) -> Result<Tensor3> {
    match eq {
        Equation::S => s_residual(alg, r),
        Equation::SAlternate => s_alternate_residual(alg, r),
        Equation::Ld(v) => ld_residual(alg, r, v),
    }
}

pub fn ld_residual(alg: &Algebra, r: &Tensor2, variant: LdEquation) -> Result<Tensor3> {
    let tr = alg.require(Op::TriR, "the LD-equation")?;
    let tl = alg.require(Op::TriL, "the LD-equation")?;
    check_dim(alg.dim(), r)?;
    let circ = functors::vertical_table(tr, tl);
    let bullet = functors::horizontal_table(tr, tl);
    let c = &circ;
    let b = &bullet;
    match variant {
        LdEquation::Main => {
            combination(&[(1, c, S13, S23), (1, b, S12, S23), (-1, tl, S12, S13)], r)
        }
        LdEquation::AuxA => {
            let bracket = functors::ldend_bracket_table(tr, tl);
            combination(
                &[
                    (1, tr, S13, S23),
                    (1, &bracket, S12, S23),
                    (-1, tr, S13, S12),
                ],
                r,
            )
        }
        LdEquation::AuxB => combination(
            &[(1, tl, S23, S13), (-1, c, S13, S12), (-1, b, S23, S12)],
            r,
        ),
        LdEquation::P1 => combination(&[(1, c, S23, S13), (-1, b, S12, S13), (1, tl, S12, S23)], r),
        LdEquation::P2 => combination(&[(1, c, S23, S12), (1, b, S13, S12), (1, tl, S13, S23)], r),
        LdEquation::P3 => combination(&[(1, c, S12, S23), (1, b, S13, S23), (1, tl, S13, S12)], r),
        LdEquation::P4 => combination(&[(1, c, S12, S13), (-1, b, S23, S13), (1, tl, S23, S12)], r),
    }
}

/// All seven LD residuals, in [`LdEquation::ALL`] order.
pub fn ld_residuals(alg: &Algebra, r: &Tensor2) -> Result<Vec<(LdEquation, Tensor3)>> {
    LdEquation::ALL
        .into_iter()
        .map(|e| Ok((e, ld_residual(alg, r, e)?)))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LdEquivalence {
    pub main: Tensor3,
    /// `r` as an O-operator of the dual of the regular L-dendriform module.
    pub dual_module: CheckReport,
    /// `r` as an O-operator of `(A, ∘)` with module `(L▷*+L◁*, L◁*)`.
    pub vertical: CheckReport,
    /// `r` as an O-operator of `(A, •)` with module `(L▷*−R◁*, −R◁*)`.
    pub horizontal: CheckReport,
    pub aux_a: Tensor3,
    pub aux_b: Tensor3,
}

impl LdEquivalence {
    pub fn all_vanish(&self) -> bool {
        self.main.is_zero()
            && self.dual_module.passed()
            && self.vertical.passed()
            && self.horizontal.passed()
    }

    /// The four conditions agree.
    pub fn consistent(&self) -> bool {
        let m = self.main.is_zero();
        m == self.dual_module.passed()
            && m == self.vertical.passed()
            && m == self.horizontal.passed()
    }

    /// A vanishing `aux_b` forces a vanishing `aux_a`.
    pub fn aux_implication_holds(&self) -> bool {
        !self.aux_b.is_zero() || self.aux_a.is_zero()
    }
}

pub fn ld_equivalence_check(alg: &Algebra, r: &Tensor2) -> Result<LdEquivalence> {
    if !r.is_skew() {
        return Err(Error::Symmetry("skew-symmetric"));
    }
    let t = r.to_map();
    let dual = representations::dual_ldend_module(&LDendModule::regular(alg)?)?;
    let vertical = representations::dual_prelie_module(&representations::vertical_module(alg)?)?;
    let horizontal =
        representations::dual_prelie_module(&representations::horizontal_module(alg)?)?;
    Ok(LdEquivalence {
        main: ld_residual(alg, r, LdEquation::Main)?,
        dual_module: operators::check_o_ldend(&t, &dual)?,
        vertical: operators::check_o_prelie(&t, &vertical)?,
        horizontal: operators::check_o_prelie(&t, &horizontal)?,
        aux_a: ld_residual(alg, r, LdEquation::AuxA)?,
        aux_b: ld_residual(alg, r, LdEquation::AuxB)?,
    })
}

/// `T ↦ Σᵢ T(vᵢ) ⊗ vᵢ*` in `(A ⊕ V*)^{⊗2}`: the `n × m` block in the upper
/// right of the `(n+m)²` array.
pub fn embed_map(t: &LinearMap) -> Tensor2 {
    let n = t.rows();
    let mut r = Tensor2::zeros(n + t.cols());
    for (k, i, v) in t.entries() {
        if !v.is_zero() {
            r.set(k, n + i, v.clone());
        }
    }
    r
}

fn check_o_shape(t: &LinearMap, n: usize, vd: usize) -> Result<()> {
    if t.rows() != n || t.cols() != vd {
        return Err(Error::dim(format!(
            "T must be {n}x{vd} (module dim → base dim), got {}x{}",
            t.rows(),
            t.cols()
        )));
    }
    Ok(())
}

/// `(A ⋉ V*, T + σ(T))` with the module `(l* − r*, −r*)`.
pub fn build_s_solution(m: &PreLieModule, t: &LinearMap) -> Result<(Algebra, Tensor2)> {
    check_o_shape(t, m.base().dim(), m.vdim())?;
    let alg = representations::semidirect_prelie(&representations::dual_prelie_module(m)?)?;
    let e = embed_map(t);
    let r = e.add(&e.exchange())?;
    Ok((alg, r))
}

/// `(A ⋉ V*, T − σ(T))` with the dual L-dendriform module.
pub fn build_ld_solution(m: &LDendModule, t: &LinearMap) -> Result<(Algebra, Tensor2)> {
    check_o_shape(t, m.base().dim(), m.vdim())?;
    let alg = representations::semidirect_ldend(&representations::dual_ldend_module(m)?)?;
    let e = embed_map(t);
    let r = e.sub(&e.exchange())?;
    Ok((alg, r))
}

/// The two `2n`-dimensional pre-Lie algebras `A ⋉ A*` built from the
/// vertical and horizontal structures, with `r = Σ (eᵢ⊗eᵢ* + eᵢ*⊗eᵢ)`.
pub fn canonical_double_solution(alg: &Algebra) -> Result<(Algebra, Algebra, Tensor2)> {
    let id = LinearMap::identity(alg.dim());
    let (vertical, r) = build_s_solution(&representations::vertical_module(alg)?, &id)?;
    let (horizontal, _) = build_s_solution(&representations::horizontal_module(alg)?, &id)?;
    Ok((vertical, horizontal, r))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormCriterion {
    /// The form `B(u,v) = ⟨T⁻¹u, v⟩` induced by `r`.
    pub form: BilinearForm,
    pub ld_residual: Tensor3,
    /// The `◁` form identity.
    pub tri_l_form: CheckReport,
    /// The `▷` form identity.
    pub tri_r_form: CheckReport,
}

impl FormCriterion {
    pub fn is_solution(&self) -> bool {
        self.ld_residual.is_zero()
    }

    /// A solution exactly when the form satisfies the `◁` identity.
    pub fn consistent(&self) -> bool {
        self.is_solution() == self.tri_l_form.passed()
    }

    /// The `◁` identity implies the `▷` identity.
    pub fn implication_holds(&self) -> bool {
        !self.tri_l_form.passed() || self.tri_r_form.passed()
    }
}

pub fn form_criterion_check(alg: &Algebra, r: &Tensor2) -> Result<FormCriterion> {
    if !r.is_skew() {
        return Err(Error::Symmetry("skew-symmetric"));
    }
    let form = form_from_invertible_map(&r.to_map())?;
    Ok(FormCriterion {
        ld_residual: ld_residual(alg, r, LdEquation::Main)?,
        tri_l_form: axioms::check_ldend_form_tri_l(alg, &form)?,
        tri_r_form: axioms::check_ldend_form_tri_r(alg, &form)?,
        form,
    })
}
