//! The representation `X` of the universal cover supported on the ball of
//! radius two around `z`, and its subrepresentations `X' ⊂ X'' ⊂ X`.
//!
//! Notation: `y_j = z/j` is the sink reached along arrow `j`, and
//! `x(j,i) = z/j/i` is the source joined to `y_j` by an arrow labelled `i`;
//! `x(j,i)` is a leaf of type `i`.

use std::fmt;

use crate::cover::{CoverRep, CoverSub, PushDown, TreeVertex};
use crate::field::Field;
use crate::linalg::{Matrix, Subspace};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoverConstruction {
    /// `X`, with `π(X) ≅ I2`.
    Ball,
    /// `X'`, with `π(X') ≅ τB(1)`.
    TauBristle,
    /// `X''`, with `π(X'')` the middle term of the almost split sequence ending in `B(1)`.
    MuBristle,
}

impl fmt::Display for CoverConstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CoverConstruction::Ball => "X",
            CoverConstruction::TauBristle => "X'",
            CoverConstruction::MuBristle => "X''",
        })
    }
}

/// One of the named constructions, kept as a subrepresentation `support` of
/// the ball representation `ball` so that all of them push down into `π(X)`.
#[derive(Clone, Debug)]
pub struct NamedCover<F: Field> {
    pub kind: CoverConstruction,
    pub n: usize,
    pub ball: CoverRep<F>,
    pub support: CoverSub<F>,
}

pub fn y(j: usize) -> TreeVertex {
    TreeVertex::from_labels(vec![j]).expect("single label")
}

pub fn leaf(j: usize, i: usize) -> TreeVertex {
    TreeVertex::from_labels(vec![j, i]).expect("i ≠ j")
}

/// `i + 1` read cyclically in `1..=n`.
pub fn succ(n: usize, i: usize) -> usize {
    i % n + 1
}

/// `i - 1` read cyclically in `1..=n`.
pub fn pred(n: usize, i: usize) -> usize {
    (i + n - 2) % n + 1
}

/// `X` for `n ≥ 3`: `X_z = ker(1, …, 1) ⊂ k^n` with basis `e(i) − e(i+1)`,
/// `X_z -> X_{y_j} = k` the `j`-th coordinate, all other spaces `k` and all
/// leaf maps identities.
pub fn build_ball_rep<F: Field>(field: &F, n: usize) -> Result<NamedCover<F>> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("the cover constructions need n ≥ 3, got {n}")));
    }
    let z = TreeVertex::root();
    let mut rep = CoverRep::new(field, n);
    rep.add_vertex(z.clone(), n - 1)?;
    for j in 1..=n {
        rep.add_vertex(y(j), 1)?;
        for i in (1..=n).filter(|&i| i != j) {
            rep.add_vertex(leaf(j, i), 1)?;
        }
    }
    for j in 1..=n {
        // Coordinate j of e(k) − e(k+1) for k = 1..n-1.
        let proj = Matrix::from_fn(field, 1, n - 1, |_, c| {
            let k = c + 1;
            if j == k {
                field.one()
            } else if j == k + 1 {
                field.neg(&field.one())
            } else {
                field.zero()
            }
        });
        rep.set_map(&z, j, proj)?;
        for i in (1..=n).filter(|&i| i != j) {
            rep.set_map(&leaf(j, i), i, Matrix::identity(field, 1))?;
        }
    }
    let support = CoverSub::full(&rep);
    Ok(NamedCover { kind: CoverConstruction::Ball, n, ball: rep, support })
}

/// `X'`: drop `y_1` and its leaves and replace `X_z` by the kernel of `X_z -> X_{y_1}`.
pub fn build_tau_bristle_rep<F: Field>(field: &F, n: usize) -> Result<NamedCover<F>> {
    let ball = build_ball_rep(field, n)?;
    let z = TreeVertex::root();
    let kernel = Subspace::full(field, n - 1).restricted_kernel(&ball.ball.map(&z, 1));
    let mut support = CoverSub::zero(&ball.ball);
    for j in 2..=n {
        support = support.sum(&ball.y_component(j)?)?;
    }
    let support = support.with_space(&z, kernel);
    support.check_in(&ball.ball)?;
    Ok(NamedCover { kind: CoverConstruction::TauBristle, support, ..ball })
}

/// `X''`: the subrepresentation of `X` generated by `Y(j)` for `j ≥ 2` and all of `X_z`.
pub fn build_mu_bristle_rep<F: Field>(field: &F, n: usize) -> Result<NamedCover<F>> {
    let ball = build_ball_rep(field, n)?;
    let z = TreeVertex::root();
    let seeds: Vec<(TreeVertex, Vec<F::Elem>)> =
        Subspace::full(field, n - 1).basis_vectors().into_iter().map(|u| (z.clone(), u)).collect();
    let mut support = CoverSub::generated(&ball.ball, &seeds)?;
    for j in 2..=n {
        support = support.sum(&ball.y_component(j)?)?;
    }
    Ok(NamedCover { kind: CoverConstruction::MuBristle, support, ..ball })
}

impl<F: Field> NamedCover<F> {
    pub fn field(&self) -> &F {
        self.ball.field()
    }

    /// The construction as a representation in its own right.
    pub fn rep(&self) -> CoverRep<F> {
        self.ball.restrict(&self.support).expect("support is a subrepresentation")
    }

    pub fn push_down_ball(&self) -> PushDown<F> {
        self.ball.push_down()
    }

    fn in_support(&self, v: &TreeVertex) -> bool {
        self.support.space(v).is_some_and(|s| s.dim() > 0)
    }

    fn require(&self, v: &TreeVertex) -> Result<()> {
        if self.in_support(v) {
            Ok(())
        } else {
            Err(Error::InvalidArgument(format!("{v} is not in the support of {}", self.kind)))
        }
    }

    fn check_label(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.n {
            return Err(Error::InvalidArgument(format!("label {i} outside 1..={}", self.n)));
        }
        Ok(())
    }

    /// The sinks `y_j` in the support.
    pub fn sinks(&self) -> Vec<usize> {
        (1..=self.n).filter(|&j| self.in_support(&y(j))).collect()
    }

    /// The sinks `y_j` whose leaves lie in the support.
    pub fn leafed_sinks(&self) -> Vec<usize> {
        self.sinks().into_iter().filter(|&j| (1..=self.n).any(|i| i != j && self.in_support(&leaf(j, i)))).collect()
    }

    /// `P(x(j,i))`: the leaf and its sink.
    pub fn leaf_projective(&self, j: usize, i: usize) -> Result<CoverSub<F>> {
        self.check_label(i)?;
        self.check_label(j)?;
        if i == j {
            return Err(Error::InvalidArgument("a leaf x(j,i) needs i ≠ j".into()));
        }
        self.require(&leaf(j, i))?;
        CoverSub::on_vertices(&self.ball, &[leaf(j, i), y(j)])
    }

    /// `Y(j)`: the sink `y_j` with all its leaves.
    pub fn y_component(&self, j: usize) -> Result<CoverSub<F>> {
        self.check_label(j)?;
        self.require(&y(j))?;
        let mut vs = vec![y(j)];
        vs.extend((1..=self.n).filter(|&i| i != j).map(|i| leaf(j, i)));
        CoverSub::on_vertices(&self.ball, &vs)
    }

    /// The leaf types `i ∈ {n−1, n}` present at `y_j`.
    pub fn g_set(&self, j: usize) -> Vec<usize> {
        [self.n - 1, self.n].into_iter().filter(|&i| i != j).collect()
    }

    /// The `i` with `i ∉ {j−1, j, n−1}`: those for which `V[i]` at `y_j` is defined.
    pub fn h_set(&self, j: usize) -> Vec<usize> {
        (1..=self.n).filter(|&i| i != pred(self.n, j) && i != j && i != self.n - 1).collect()
    }

    /// `V[i]` at `y_j`: supported on `y_j, x(j,i), x(j,i+1)`.
    pub fn v_component(&self, j: usize, i: usize) -> Result<CoverSub<F>> {
        self.check_label(j)?;
        self.check_label(i)?;
        if !self.h_set(j).contains(&i) {
            return Err(Error::InvalidArgument(format!("V[{i}] is not defined at y_{j}")));
        }
        let vs = [y(j), leaf(j, i), leaf(j, succ(self.n, i))];
        for v in &vs {
            self.require(v)?;
        }
        CoverSub::on_vertices(&self.ball, &vs)
    }

    /// `W(i,j)`: the path `x(j,i) -> y_j <- z -> y_i <- x(i,j)` with
    /// `W(i,j)_z = ∩_{s ∉ {i,j}} ker(X_z -> X_{y_s})`.
    pub fn w_component(&self, i: usize, j: usize) -> Result<CoverSub<F>> {
        self.check_label(i)?;
        self.check_label(j)?;
        if i == j {
            return Err(Error::InvalidArgument("W(i,j) needs i ≠ j".into()));
        }
        let z = TreeVertex::root();
        let mut wz = Subspace::full(self.field(), self.n - 1);
        for s in (1..=self.n).filter(|&s| s != i && s != j) {
            wz = wz.restricted_kernel(&self.ball.map(&z, s));
        }
        let ends = [y(i), y(j), leaf(j, i), leaf(i, j)];
        for v in &ends {
            self.require(v)?;
        }
        let support_z = self.support.space(&z).expect("z is a vertex of X");
        if !wz.is_subspace_of(support_z) {
            return Err(Error::InvalidArgument(format!("W({i},{j})_z is not in the support of {}", self.kind)));
        }
        let sub = CoverSub::on_vertices(&self.ball, &ends)?.with_space(&z, wz);
        sub.check_in(&self.ball)?;
        Ok(sub)
    }

    /// `N`: the sum of `Y(j)` over the sinks whose leaves lie in the support.
    pub fn n_sub(&self) -> Result<CoverSub<F>> {
        let mut acc = CoverSub::zero(&self.ball);
        for j in self.leafed_sinks() {
            acc = acc.sum(&self.y_component(j)?)?;
        }
        Ok(acc)
    }

    /// The index set `I` of the bristles `M(i,i+1)` used in the decomposition
    /// of `X_z`: `{1, …, n−2, n}` for `X` and `{2, …, n−1}` for `X'`.
    pub fn default_index_set(&self) -> Vec<usize> {
        match self.kind {
            CoverConstruction::Ball => (1..=self.n - 2).chain([self.n]).collect(),
            CoverConstruction::TauBristle | CoverConstruction::MuBristle => (2..self.n).collect(),
        }
    }
}
