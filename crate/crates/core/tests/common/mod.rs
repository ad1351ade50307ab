//! A second, deliberately naive expansion of slot products.
//!
//! A two-tensor is split into rank-one terms `c · e_i ⊗ e_j`; each `r_pq`
//! places its two factors in slots `p` and `q` and the unit in the third.
//! Multiplying two placed terms multiplies the factors slot by slot (left
//! factor first) and keeps a lone factor as is; the three resulting vectors
//! are expanded as an outer product. Shares nothing with the library's
//! index bookkeeping beyond the table lookup.
#![allow(dead_code, clippy::needless_range_loop, clippy::type_complexity)]

use ldend::{Scalar, StructureConstants, Tensor2, Tensor3};
use num_traits::Zero;

pub type Dense3 = Vec<Vec<Vec<Scalar>>>;

fn unit_vec(n: usize, i: usize, c: &Scalar) -> Vec<Scalar> {
    (0..n)
        .map(|k| if k == i { c.clone() } else { Scalar::zero() })
        .collect()
}

fn mul(table: &StructureConstants, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    let n = x.len();
    let mut out = vec![Scalar::zero(); n];
    for i in 0..n {
        for j in 0..n {
            if x[i].is_zero() || y[j].is_zero() {
                continue;
            }
            for k in 0..n {
                out[k] += &x[i] * &y[j] * table.get(i, j, k);
            }
        }
    }
    out
}

/// Rank-one terms of `r`: (first factor, second factor).
fn terms(r: &Tensor2) -> Vec<(Vec<Scalar>, Vec<Scalar>)> {
    let n = r.dim();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let c = r.get(i, j);
            if !c.is_zero() {
                out.push((
                    unit_vec(n, i, c),
                    unit_vec(n, j, &Scalar::from_integer(1.into())),
                ));
            }
        }
    }
    out
}

/// `r_{pq}` as three slots, `None` standing for the unit.
fn place(a: &[Scalar], b: &[Scalar], p: usize, q: usize) -> [Option<Vec<Scalar>>; 3] {
    let mut slots: [Option<Vec<Scalar>>; 3] = [None, None, None];
    slots[p - 1] = Some(a.to_vec());
    slots[q - 1] = Some(b.to_vec());
    slots
}

pub fn zero3(n: usize) -> Dense3 {
    vec![vec![vec![Scalar::zero(); n]; n]; n]
}

/// `acc += sign · r_{p1 q1} · r_{p2 q2}` under `table`.
pub fn add_product(
    acc: &mut Dense3,
    sign: i32,
    table: &StructureConstants,
    r: &Tensor2,
    left: (usize, usize),
    right: (usize, usize),
) {
    let n = r.dim();
    let s = Scalar::from_integer(sign.into());
    let ts = terms(r);
    for (a, b) in &ts {
        for (c, d) in &ts {
            let x = place(a, b, left.0, left.1);
            let y = place(c, d, right.0, right.1);
            let v: Vec<Vec<Scalar>> = (0..3)
                .map(|t| match (&x[t], &y[t]) {
                    (Some(u), Some(w)) => mul(table, u, w),
                    (Some(u), None) | (None, Some(u)) => u.clone(),
                    (None, None) => panic!("slot pairs must cover all three slots"),
                })
                .collect();
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        let p = &v[0][i] * &v[1][j] * &v[2][k];
                        if !p.is_zero() {
                            acc[i][j][k] += &s * p;
                        }
                    }
                }
            }
        }
    }
}

pub fn commutator(t: &StructureConstants) -> StructureConstants {
    let n = t.dim();
    let mut out = StructureConstants::zeros(n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                out.set(i, j, k, t.get(i, j, k) - t.get(j, i, k));
            }
        }
    }
    out
}

/// `x∘y = x▷y − y◁x`, `x•y = x▷y + x◁y`, `[x,y] = x∘y − y∘x`.
pub fn derived(
    tr: &StructureConstants,
    tl: &StructureConstants,
) -> (StructureConstants, StructureConstants, StructureConstants) {
    let n = tr.dim();
    let mut circ = StructureConstants::zeros(n);
    let mut bullet = StructureConstants::zeros(n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                circ.set(i, j, k, tr.get(i, j, k) - tl.get(j, i, k));
                bullet.set(i, j, k, tr.get(i, j, k) + tl.get(i, j, k));
            }
        }
    }
    let bracket = commutator(&circ);
    (circ, bullet, bracket)
}

/// Naive residual of the S-equation family, given by name.
pub fn s_family(circ: &StructureConstants, r: &Tensor2, alternate: bool) -> Dense3 {
    let br = commutator(circ);
    let mut acc = zero3(r.dim());
    if alternate {
        add_product(&mut acc, 1, circ, r, (1, 3), (2, 3));
        add_product(&mut acc, 1, &br, r, (1, 2), (2, 3));
        add_product(&mut acc, -1, circ, r, (1, 3), (1, 2));
    } else {
        add_product(&mut acc, -1, circ, r, (1, 2), (1, 3));
        add_product(&mut acc, 1, circ, r, (1, 2), (2, 3));
        add_product(&mut acc, 1, &br, r, (1, 3), (2, 3));
    }
    acc
}

/// Naive LD residuals keyed by equation id.
pub fn ld_family(
    tr: &StructureConstants,
    tl: &StructureConstants,
    r: &Tensor2,
    id: &str,
) -> Dense3 {
    let (c, b, br) = derived(tr, tl);
    let mut acc = zero3(r.dim());
    let terms: Vec<(i32, &StructureConstants, (usize, usize), (usize, usize))> = match id {
        "eq-4.8" => vec![
            (1, &c, (1, 3), (2, 3)),
            (1, &b, (1, 2), (2, 3)),
            (-1, tl, (1, 2), (1, 3)),
        ],
        "eq-4.9" => vec![
            (1, tr, (1, 3), (2, 3)),
            (1, &br, (1, 2), (2, 3)),
            (-1, tr, (1, 3), (1, 2)),
        ],
        "eq-4.10" => vec![
            (1, tl, (2, 3), (1, 3)),
            (-1, &c, (1, 3), (1, 2)),
            (-1, &b, (2, 3), (1, 2)),
        ],
        "eq-4.11" => vec![
            (1, &c, (2, 3), (1, 3)),
            (-1, &b, (1, 2), (1, 3)),
            (1, tl, (1, 2), (2, 3)),
        ],
        "eq-4.12" => vec![
            (1, &c, (2, 3), (1, 2)),
            (1, &b, (1, 3), (1, 2)),
            (1, tl, (1, 3), (2, 3)),
        ],
        "eq-4.13" => vec![
            (1, &c, (1, 2), (2, 3)),
            (1, &b, (1, 3), (2, 3)),
            (1, tl, (1, 3), (1, 2)),
        ],
        "eq-4.14" => vec![
            (1, &c, (1, 2), (1, 3)),
            (-1, &b, (2, 3), (1, 3)),
            (1, tl, (2, 3), (1, 2)),
        ],
        other => panic!("no oracle for {other}"),
    };
    for (s, t, l, rr) in terms {
        add_product(&mut acc, s, t, r, l, rr);
    }
    acc
}

pub fn agrees(dense: &Dense3, t: &Tensor3) -> bool {
    let n = t.dim();
    (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| &dense[i][j][k] == t.get(i, j, k))))
}
