//! Finite-dimensional algebras given by multiplication tables.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linear::{LinearMap, MatrixFamily};
use crate::scalar::{self, Scalar};

/// The closed vocabulary of binary operation names.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Op {
    /// `∘`, a pre-Lie (or associative) product.
    Circ,
    /// `•`, the horizontal pre-Lie product.
    Bullet,
    /// `▷`
    TriR,
    /// `◁`
    TriL,
    /// `≻`
    Succ,
    /// `≺`
    Prec,
    /// `↘`
    Se,
    /// `↗`
    Ne,
    /// `↖`
    Nw,
    /// `↙`
    Sw,
    Bracket,
    /// `*`
    Star,
    /// `∨`
    Vee,
    /// `∧`
    Wedge,
}

impl Op {
    pub const ALL: [Op; 14] = [
        Op::Circ,
        Op::Bullet,
        Op::TriR,
        Op::TriL,
        Op::Succ,
        Op::Prec,
        Op::Se,
        Op::Ne,
        Op::Nw,
        Op::Sw,
        Op::Bracket,
        Op::Star,
        Op::Vee,
        Op::Wedge,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Op::Circ => "circ",
            Op::Bullet => "bullet",
            Op::TriR => "tri_r",
            Op::TriL => "tri_l",
            Op::Succ => "succ",
            Op::Prec => "prec",
            Op::Se => "se",
            Op::Ne => "ne",
            Op::Nw => "nw",
            Op::Sw => "sw",
            Op::Bracket => "bracket",
            Op::Star => "star",
            Op::Vee => "vee",
            Op::Wedge => "wedge",
        }
    }
}

impl fmt::Display for Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Op {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Op::ALL
            .iter()
            .copied()
            .find(|op| op.name() == s)
            .ok_or_else(|| Error::UnknownOp(s.to_string()))
    }
}

/// Dense `n×n×n` table; `get(i, j, k)` is the `e_k`-coefficient of `e_i · e_j`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StructureConstants {
    dim: usize,
    data: Vec<Scalar>,
}

impl StructureConstants {
    pub fn zeros(dim: usize) -> Self {
        StructureConstants {
            dim,
            data: vec![scalar::zero(); dim * dim * dim],
        }
    }

    /// `f(i, j)` returns the product `e_i · e_j` as a coefficient vector.
    pub fn from_products(dim: usize, mut f: impl FnMut(usize, usize) -> Vec<Scalar>) -> Self {
        let mut data = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = f(i, j);
                assert_eq!(v.len(), dim, "product vector has wrong length");
                data.extend(v);
            }
        }
        StructureConstants { dim, data }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.data[(i * self.dim + j) * self.dim + k]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
        let n = self.dim;
        self.data[(i * n + j) * n + k] = v;
    }

    /// The product of basis vectors `e_i · e_j`.
    pub fn product(&self, i: usize, j: usize) -> &[Scalar] {
        let start = (i * self.dim + j) * self.dim;
        &self.data[start..start + self.dim]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Nonzero entries in lexicographic `(i, j, k)` order.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> {
        let n = self.dim;
        self.data
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(idx, v)| (idx / (n * n), (idx / n) % n, idx % n, v))
    }

    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim;
        let mut out = vec![scalar::zero(); n];
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let c = xi * yj;
                for (k, p) in self.product(i, j).iter().enumerate() {
                    if !p.is_zero() {
                        out[k] += &c * p;
                    }
                }
            }
        }
        out
    }

    /// Entrywise `a·self + b·other`.
    pub fn combine(
        &self,
        a: &Scalar,
        other: &StructureConstants,
        b: &Scalar,
    ) -> StructureConstants {
        assert_eq!(self.dim, other.dim);
        StructureConstants {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(x, y)| a * x + b * y)
                .collect(),
        }
    }

    /// The opposite table `x ·ᵒᵖ y = y · x`.
    pub fn opposite(&self) -> StructureConstants {
        let n = self.dim;
        Self::from_products(n, |i, j| self.product(j, i).to_vec())
    }

    pub fn add(&self, other: &StructureConstants) -> StructureConstants {
        self.combine(&scalar::one(), other, &scalar::one())
    }

    pub fn sub(&self, other: &StructureConstants) -> StructureConstants {
        self.combine(&scalar::one(), other, &-scalar::one())
    }

    pub fn neg(&self) -> StructureConstants {
        StructureConstants {
            dim: self.dim,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }

    /// `x·y − y·x`.
    pub fn commutator(&self) -> StructureConstants {
        self.sub(&self.opposite())
    }

    /// Left multiplication operators `L(e_i)`, as a family.
    pub fn left_family(&self) -> MatrixFamily {
        let n = self.dim;
        let mats = (0..n)
            .map(|i| LinearMap::from_fn(n, n, |k, j| self.get(i, j, k).clone()))
            .collect();
        MatrixFamily::new(n, mats).expect("square by construction")
    }

    /// Right multiplication operators `R(e_i)`, with `R(y)x = x·y`.
    pub fn right_family(&self) -> MatrixFamily {
        let n = self.dim;
        let mats = (0..n)
            .map(|i| LinearMap::from_fn(n, n, |k, j| self.get(j, i, k).clone()))
            .collect();
        MatrixFamily::new(n, mats).expect("square by construction")
    }
}

impl fmt::Debug for StructureConstants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let entries: Vec<String> = self
            .nonzero()
            .map(|(i, j, k, v)| format!("e{}e{}->{}e{}", i + 1, j + 1, scalar::format(v), k + 1))
            .collect();
        write!(f, "Table{}[{}]", self.dim, entries.join(", "))
    }
}

/// A vector space of dimension `dim` with named multiplication tables.
///
/// `class_tag` is free-form provenance metadata and is never consulted by
/// any check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    dim: usize,
    ops: BTreeMap<Op, StructureConstants>,
    class_tag: Option<String>,
}

impl Algebra {
    pub fn new(dim: usize) -> Self {
        Algebra {
            dim,
            ops: BTreeMap::new(),
            class_tag: None,
        }
    }

    pub fn with_op(mut self, op: Op, table: StructureConstants) -> Result<Self> {
        self.insert(op, table)?;
        Ok(self)
    }

    pub fn with_tag(mut self, tag: impl Into<String>) -> Self {
        self.class_tag = Some(tag.into());
        self
    }

    pub fn insert(&mut self, op: Op, table: StructureConstants) -> Result<()> {
        if table.dim() != self.dim {
            return Err(Error::dim(format!(
                "`{op}` table has dimension {}, algebra has {}",
                table.dim(),
                self.dim
            )));
        }
        self.ops.insert(op, table);
        Ok(())
    }

    /// Convenience for small literals: `(i, j, k, value)` 0-based, all other
    /// entries zero.
    pub fn from_sparse(
        dim: usize,
        op: Op,
        entries: &[(usize, usize, usize, Scalar)],
    ) -> Result<Self> {
        let mut t = StructureConstants::zeros(dim);
        for (i, j, k, v) in entries {
            if *i >= dim || *j >= dim || *k >= dim {
                return Err(Error::dim(format!(
                    "index ({i},{j},{k}) out of range for dim {dim}"
                )));
            }
            t.set(*i, *j, *k, v.clone());
        }
        Algebra::new(dim).with_op(op, t)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn class_tag(&self) -> Option<&str> {
        self.class_tag.as_deref()
    }

    pub fn set_class_tag(&mut self, tag: Option<String>) {
        self.class_tag = tag;
    }

    pub fn ops(&self) -> impl Iterator<Item = (Op, &StructureConstants)> {
        self.ops.iter().map(|(k, v)| (*k, v))
    }

    pub fn has(&self, op: Op) -> bool {
        self.ops.contains_key(&op)
    }

    pub fn table(&self, op: Op) -> Result<&StructureConstants> {
        self.ops.get(&op).ok_or_else(|| Error::MissingOp {
            op: op.name(),
            needed_by: "this operation".into(),
        })
    }

    /// Like [`Algebra::table`] but names the caller in the error.
    pub fn require(&self, op: Op, needed_by: &str) -> Result<&StructureConstants> {
        self.ops.get(&op).ok_or_else(|| Error::MissingOp {
            op: op.name(),
            needed_by: needed_by.into(),
        })
    }

    /// `Σ_{i,j} x_i y_j c[i][j][·]`.
    pub fn multiply(&self, op: Op, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>> {
        let t = self.table(op)?;
        if x.len() != self.dim || y.len() != self.dim {
            return Err(Error::dim(format!(
                "operands of length {} and {} in a dimension-{} algebra",
                x.len(),
                y.len(),
                self.dim
            )));
        }
        Ok(t.multiply(x, y))
    }

    /// True when every table is identically zero.
    pub fn is_zero(&self) -> bool {
        self.ops.values().all(StructureConstants::is_zero)
    }
}
