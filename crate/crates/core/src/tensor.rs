//! Elements of `A⊗A` and `A⊗A⊗A`, and the slot products between them.
//!
//! For `r = Σ a_i ⊗ b_i`, the symbol `r_{pq}` places `a_i` in slot `p` and
//! `b_i` in slot `q` of a triple tensor. A product `r_{pq} · s_{p'q'}` of
//! two such placements sharing exactly one slot multiplies the component
//! of `r` in that slot (on the left) with the component of `s` (on the
//! right); the other two slots carry the remaining components unchanged.
//! For instance `r_{23} ∘ r_{12} = Σ a_j ⊗ a_i∘b_j ⊗ b_i`.

use std::fmt;

use num_traits::Zero;

use crate::algebra::{Algebra, Op, StructureConstants};
use crate::error::{Error, Result};
use crate::linear::LinearMap;
use crate::scalar::{self, Scalar};

/// `r = Σ r[i][j] e_i ⊗ e_j`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tensor2 {
    dim: usize,
    data: Vec<Scalar>,
}

impl Tensor2 {
    pub fn zeros(dim: usize) -> Self {
        Tensor2 {
            dim,
            data: vec![scalar::zero(); dim * dim],
        }
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                data.push(f(i, j));
            }
        }
        Tensor2 { dim, data }
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "square literal");
        Self::from_fn(n, |i, j| scalar::int(rows[i][j]))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.dim + j] = v;
    }

    pub fn nonzero(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        let n = self.dim;
        self.data
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(idx, v)| (idx / n, idx % n, v))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.exchange()
    }

    pub fn is_skew(&self) -> bool {
        *self == self.exchange().neg()
    }

    /// `σ(x ⊗ y) = y ⊗ x`.
    pub fn exchange(&self) -> Tensor2 {
        Self::from_fn(self.dim, |i, j| self.get(j, i).clone())
    }

    pub fn add(&self, other: &Tensor2) -> Result<Tensor2> {
        self.check_dim(other)?;
        Ok(Self::from_fn(self.dim, |i, j| {
            self.get(i, j) + other.get(i, j)
        }))
    }

    pub fn sub(&self, other: &Tensor2) -> Result<Tensor2> {
        self.check_dim(other)?;
        Ok(Self::from_fn(self.dim, |i, j| {
            self.get(i, j) - other.get(i, j)
        }))
    }

    pub fn neg(&self) -> Tensor2 {
        Self::from_fn(self.dim, |i, j| -self.get(i, j))
    }

    pub fn scale(&self, c: &Scalar) -> Tensor2 {
        Self::from_fn(self.dim, |i, j| c * self.get(i, j))
    }

    fn check_dim(&self, other: &Tensor2) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::dim(format!(
                "tensors of dim {} and {}",
                self.dim, other.dim
            )));
        }
        Ok(())
    }

    /// The map `F_r: A* → A`, `F_r(e_i*) = Σ_k r[i][k] e_k`.
    pub fn to_map(&self) -> LinearMap {
        LinearMap::from_fn(self.dim, self.dim, |k, i| self.get(i, k).clone())
    }

    /// Inverse of [`Tensor2::to_map`].
    pub fn from_map(map: &LinearMap) -> Result<Tensor2> {
        if !map.is_square() {
            return Err(Error::dim("a tensor in A⊗A corresponds to a square map"));
        }
        Ok(Self::from_fn(map.rows(), |i, k| map.get(k, i).clone()))
    }
}

impl fmt::Debug for Tensor2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let entries: Vec<String> = self
            .nonzero()
            .map(|(i, j, v)| format!("{}·e{}⊗e{}", scalar::format(v), i + 1, j + 1))
            .collect();
        write!(f, "Tensor2<{}>[{}]", self.dim, entries.join(" + "))
    }
}

/// Free-function form of [`Tensor2::exchange`].
pub fn exchange(r: &Tensor2) -> Tensor2 {
    r.exchange()
}

/// Free-function form of [`Tensor2::to_map`].
pub fn tensor_to_map(r: &Tensor2) -> LinearMap {
    r.to_map()
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tensor3 {
    dim: usize,
    data: Vec<Scalar>,
}

impl Tensor3 {
    pub fn zeros(dim: usize) -> Self {
        Tensor3 {
            dim,
            data: vec![scalar::zero(); dim * dim * dim],
        }
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    data.push(f(i, j, k));
                }
            }
        }
        Tensor3 { dim, data }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dim + j) * self.dim + k
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.data[self.idx(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
        let idx = self.idx(i, j, k);
        self.data[idx] = v;
    }

    fn add_at(&mut self, i: usize, j: usize, k: usize, v: &Scalar) {
        let idx = self.idx(i, j, k);
        self.data[idx] += v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Number of nonzero entries.
    pub fn support_size(&self) -> usize {
        self.data.iter().filter(|v| !v.is_zero()).count()
    }

    pub fn nonzero(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> {
        let n = self.dim;
        self.data
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(idx, v)| (idx / (n * n), (idx / n) % n, idx % n, v))
    }

    /// Entry with the lexicographically smallest index that is nonzero.
    pub fn first_nonzero(&self) -> Option<((usize, usize, usize), Scalar)> {
        self.nonzero()
            .next()
            .map(|(i, j, k, v)| ((i, j, k), v.clone()))
    }

    pub fn add(&self, other: &Tensor3) -> Result<Tensor3> {
        self.combine(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Tensor3) -> Result<Tensor3> {
        self.combine(other, |a, b| a - b)
    }

    pub fn neg(&self) -> Tensor3 {
        Tensor3 {
            dim: self.dim,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }

    fn combine(&self, other: &Tensor3, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Result<Tensor3> {
        if self.dim != other.dim {
            return Err(Error::dim(format!(
                "tensors of dim {} and {}",
                self.dim, other.dim
            )));
        }
        Ok(Tensor3 {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }
}

impl fmt::Debug for Tensor3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let entries: Vec<String> = self
            .nonzero()
            .map(|(i, j, k, v)| format!("{}·e{}⊗e{}⊗e{}", scalar::format(v), i + 1, j + 1, k + 1))
            .collect();
        write!(f, "Tensor3<{}>[{}]", self.dim, entries.join(" + "))
    }
}

/// Placement of a two-tensor into two distinct slots of three, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SlotPair(u8, u8);

impl SlotPair {
    pub const S12: SlotPair = SlotPair(1, 2);
    pub const S13: SlotPair = SlotPair(1, 3);
    pub const S23: SlotPair = SlotPair(2, 3);

    /// Slots are 1-based; `(2, 1)` means the first tensor factor goes to
    /// slot 2 and the second to slot 1.
    pub fn new(first: u8, second: u8) -> Result<Self> {
        if !(1..=3).contains(&first) || !(1..=3).contains(&second) || first == second {
            return Err(Error::Slots {
                left: (first, second),
                right: (first, second),
            });
        }
        Ok(SlotPair(first, second))
    }

    pub fn first(self) -> u8 {
        self.0
    }

    pub fn second(self) -> u8 {
        self.1
    }

    fn contains(self, s: u8) -> bool {
        self.0 == s || self.1 == s
    }
}

/// Which tensor factor sits in a given slot.
#[derive(Clone, Copy)]
enum Feed {
    Left(usize),
    Right(usize),
    Shared,
}

/// `r_{r_slots} · s_{s_slots}` under the multiplication `table`.
pub fn slot_product_with(
    table: &StructureConstants,
    r: &Tensor2,
    r_slots: SlotPair,
    s: &Tensor2,
    s_slots: SlotPair,
) -> Result<Tensor3> {
    let n = table.dim();
    if r.dim() != n || s.dim() != n {
        return Err(Error::dim(format!(
            "tensors of dim {} and {} in a dimension-{n} algebra",
            r.dim(),
            s.dim()
        )));
    }
    let shared: Vec<u8> = (1..=3)
        .filter(|&t| r_slots.contains(t) && s_slots.contains(t))
        .collect();
    if shared.len() != 1 || (1..=3).any(|t| !r_slots.contains(t) && !s_slots.contains(t)) {
        return Err(Error::Slots {
            left: (r_slots.0, r_slots.1),
            right: (s_slots.0, s_slots.1),
        });
    }
    let h = shared[0];
    // position within the pair: 0 = first tensor factor, 1 = second
    let r_h = usize::from(r_slots.1 == h);
    let s_h = usize::from(s_slots.1 == h);
    let feeds: [Feed; 3] = std::array::from_fn(|t| {
        let t = t as u8 + 1;
        if t == h {
            Feed::Shared
        } else if r_slots.contains(t) {
            Feed::Left(usize::from(r_slots.1 == t))
        } else {
            Feed::Right(usize::from(s_slots.1 == t))
        }
    });

    let mut out = Tensor3::zeros(n);
    for (a0, a1, rv) in r.nonzero() {
        let ra = [a0, a1];
        for (b0, b1, sv) in s.nonzero() {
            let sb = [b0, b1];
            let coef = rv * sv;
            for (k, c) in table.product(ra[r_h], sb[s_h]).iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let idx: [usize; 3] = std::array::from_fn(|t| match feeds[t] {
                    Feed::Shared => k,
                    Feed::Left(p) => ra[p],
                    Feed::Right(p) => sb[p],
                });
                out.add_at(idx[0], idx[1], idx[2], &(&coef * c));
            }
        }
    }
    Ok(out)
}

/// [`slot_product_with`] using the algebra's `op` table.
pub fn slot_product(
    alg: &Algebra,
    op: Op,
    r: &Tensor2,
    r_slots: SlotPair,
    s: &Tensor2,
    s_slots: SlotPair,
) -> Result<Tensor3> {
    slot_product_with(alg.table(op)?, r, r_slots, s, s_slots)
}
