use std::collections::{BTreeMap, BTreeSet};

use crate::cover::{TreeVertex, VertexClass};
use crate::field::Field;
use crate::kron::{KroneckerModule, SubmodulePair};
use crate::linalg::{Matrix, Subspace};
use crate::{Error, Result};

/// A finite-dimensional representation of the universal cover.
///
/// Only vertices added with [`add_vertex`](Self::add_vertex) carry a space;
/// arrows between two such vertices carry a matrix (zero unless set). Arrows
/// are keyed by their source vertex and label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverRep<F: Field> {
    field: F,
    n: usize,
    dims: BTreeMap<TreeVertex, usize>,
    maps: BTreeMap<(TreeVertex, usize), Matrix<F>>,
}

/// Offsets of each vertex space inside the push-down.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockIndex {
    pub offsets: BTreeMap<TreeVertex, usize>,
    pub dim1: usize,
    pub dim2: usize,
}

/// The push-down `π(X)` and where each vertex space sits inside it.
#[derive(Clone, Debug)]
pub struct PushDown<F: Field> {
    pub module: KroneckerModule<F>,
    pub index: BlockIndex,
}

impl<F: Field> CoverRep<F> {
    pub fn new(field: &F, n: usize) -> Self {
        CoverRep { field: field.clone(), n, dims: BTreeMap::new(), maps: BTreeMap::new() }
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_vertex(&mut self, v: TreeVertex, dim: usize) -> Result<()> {
        if v.max_label() > self.n {
            return Err(Error::InvalidArgument(format!("vertex {v} uses a label above {}", self.n)));
        }
        self.dims.insert(v, dim);
        Ok(())
    }

    /// Sets the map along the arrow labelled `label` out of the source vertex `source`.
    pub fn set_map(&mut self, source: &TreeVertex, label: usize, map: Matrix<F>) -> Result<()> {
        if source.class() != VertexClass::Source || label == 0 || label > self.n {
            return Err(Error::InvalidArgument(format!("no arrow {label} out of {source}")));
        }
        let target = source.neighbor(label);
        let shape = (self.dim(&target), self.dim(source));
        if !self.dims.contains_key(source) || !self.dims.contains_key(&target) {
            return Err(Error::InvalidArgument(format!("arrow {source} -> {target} leaves the vertex set")));
        }
        if map.shape() != shape {
            return Err(Error::DimensionMismatch(format!(
                "map {source} -> {target} has shape {:?}, expected {shape:?}",
                map.shape()
            )));
        }
        self.maps.insert((source.clone(), label), map);
        Ok(())
    }

    pub fn dim(&self, v: &TreeVertex) -> usize {
        self.dims.get(v).copied().unwrap_or(0)
    }

    pub fn vertices(&self) -> impl Iterator<Item = (&TreeVertex, usize)> {
        self.dims.iter().map(|(v, d)| (v, *d))
    }

    pub fn support(&self) -> Vec<TreeVertex> {
        self.vertices().filter(|(_, d)| *d > 0).map(|(v, _)| v.clone()).collect()
    }

    /// The map along an arrow, or the zero map if it was never set.
    pub fn map(&self, source: &TreeVertex, label: usize) -> Matrix<F> {
        let target = source.neighbor(label);
        self.maps
            .get(&(source.clone(), label))
            .cloned()
            .unwrap_or_else(|| Matrix::zeros(&self.field, self.dim(&target), self.dim(source)))
    }

    /// All arrows out of source vertices of the vertex set, including those
    /// whose target lies outside it (their map is zero).
    pub fn arrows_out(&self) -> Vec<(TreeVertex, usize)> {
        self.dims
            .keys()
            .filter(|v| v.class() == VertexClass::Source)
            .flat_map(|v| (1..=self.n).map(move |l| (v.clone(), l)))
            .collect()
    }

    /// The support is connected in the tree.
    pub fn has_connected_support(&self) -> bool {
        let support: BTreeSet<TreeVertex> = self.support().into_iter().collect();
        let Some(start) = support.iter().next().cloned() else {
            return true;
        };
        let mut seen = BTreeSet::from([start.clone()]);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for l in 1..=self.n {
                let w = v.neighbor(l);
                if support.contains(&w) && seen.insert(w.clone()) {
                    stack.push(w);
                }
            }
        }
        seen.len() == support.len()
    }

    /// The thin representation on a single arrow, `k --1--> k`.
    pub fn thin_arrow(field: &F, n: usize, source: &TreeVertex, label: usize) -> Result<Self> {
        let mut rep = CoverRep::new(field, n);
        rep.add_vertex(source.clone(), 1)?;
        rep.add_vertex(source.neighbor(label), 1)?;
        rep.set_map(source, label, Matrix::identity(field, 1))?;
        Ok(rep)
    }

    /// The injective representation at a sink: the sink and its `n`
    /// neighbours, all one-dimensional, joined by identities.
    pub fn sink_star(field: &F, n: usize, sink: &TreeVertex) -> Result<Self> {
        if sink.class() != VertexClass::Sink {
            return Err(Error::InvalidArgument(format!("{sink} is not a sink")));
        }
        let mut rep = CoverRep::new(field, n);
        rep.add_vertex(sink.clone(), 1)?;
        for l in 1..=n {
            let x = sink.neighbor(l);
            rep.add_vertex(x.clone(), 1)?;
            rep.set_map(&x, l, Matrix::identity(field, 1))?;
        }
        Ok(rep)
    }

    pub fn block_index(&self) -> BlockIndex {
        let (mut dim1, mut dim2) = (0, 0);
        let mut offsets = BTreeMap::new();
        for (v, d) in self.vertices() {
            let slot = match v.class() {
                VertexClass::Source => &mut dim1,
                VertexClass::Sink => &mut dim2,
            };
            offsets.insert(v.clone(), *slot);
            *slot += d;
        }
        BlockIndex { offsets, dim1, dim2 }
    }

    /// Sums the vertex spaces by class; `αi` collects the maps along all arrows labelled `i`.
    pub fn push_down(&self) -> PushDown<F> {
        let index = self.block_index();
        let mut alphas = vec![Matrix::zeros(&self.field, index.dim2, index.dim1); self.n];
        for ((source, label), map) in &self.maps {
            let target = source.neighbor(*label);
            alphas[label - 1].set_block(index.offsets[&target], index.offsets[source], map);
        }
        let module = KroneckerModule::new(&self.field, self.n, index.dim1, index.dim2, alphas)
            .expect("blocks fit by construction");
        PushDown { module, index }
    }

    /// The subrepresentation as a representation in its own right, in the
    /// canonical bases of its vertex spaces.
    pub fn restrict(&self, sub: &CoverSub<F>) -> Result<Self> {
        sub.check_in(self)?;
        let mut rep = CoverRep::new(&self.field, self.n);
        for (v, space) in &sub.spaces {
            if space.dim() > 0 {
                rep.add_vertex(v.clone(), space.dim())?;
            }
        }
        for (source, label) in self.arrows_out() {
            let target = source.neighbor(label);
            let (s, t) = (sub.space(&source), sub.space(&target));
            let (Some(s), Some(t)) = (s, t) else { continue };
            if s.dim() == 0 || t.dim() == 0 {
                continue;
            }
            let full = self.map(&source, label);
            let mut m = Matrix::zeros(&self.field, t.dim(), s.dim());
            for (c, u) in s.basis_vectors().iter().enumerate() {
                let coords = t.coordinates(&full.apply(u)).expect("closed under arrows");
                for (r, x) in coords.into_iter().enumerate() {
                    m.set(r, c, x);
                }
            }
            rep.set_map(&source, label, m)?;
        }
        Ok(rep)
    }
}

/// A subrepresentation: one subspace per vertex of the ambient representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverSub<F: Field> {
    spaces: BTreeMap<TreeVertex, Subspace<F>>,
}

impl<F: Field> CoverSub<F> {
    pub fn zero(rep: &CoverRep<F>) -> Self {
        let spaces = rep.vertices().map(|(v, d)| (v.clone(), Subspace::zero(rep.field(), d))).collect();
        CoverSub { spaces }
    }

    pub fn full(rep: &CoverRep<F>) -> Self {
        let spaces = rep.vertices().map(|(v, d)| (v.clone(), Subspace::full(rep.field(), d))).collect();
        CoverSub { spaces }
    }

    /// Full at the listed vertices and zero elsewhere; must be closed under the arrows.
    pub fn on_vertices(rep: &CoverRep<F>, vertices: &[TreeVertex]) -> Result<Self> {
        let mut sub = Self::zero(rep);
        for v in vertices {
            if rep.dim(v) == 0 {
                return Err(Error::InvalidArgument(format!("vertex {v} is outside the support")));
            }
            sub.spaces.insert(v.clone(), Subspace::full(rep.field(), rep.dim(v)));
        }
        sub.check_in(rep)?;
        Ok(sub)
    }

    /// Replaces the space at one vertex without checking closure.
    pub fn with_space(mut self, v: &TreeVertex, space: Subspace<F>) -> Self {
        self.spaces.insert(v.clone(), space);
        self
    }

    pub fn space(&self, v: &TreeVertex) -> Option<&Subspace<F>> {
        self.spaces.get(v)
    }

    pub fn spaces(&self) -> impl Iterator<Item = (&TreeVertex, &Subspace<F>)> {
        self.spaces.iter()
    }

    /// The smallest subrepresentation containing the given vectors of source vertices.
    pub fn generated(rep: &CoverRep<F>, seeds: &[(TreeVertex, Vec<F::Elem>)]) -> Result<Self> {
        let mut sub = Self::zero(rep);
        for (v, u) in seeds {
            if v.class() != VertexClass::Source || rep.dim(v) == 0 {
                return Err(Error::InvalidArgument(format!("cannot seed at {v}")));
            }
            let line = Subspace::from_basis_rows(rep.field(), rep.dim(v), vec![u.clone()]);
            let at_v = sub.spaces[v].sum(&line)?;
            sub.spaces.insert(v.clone(), at_v);
            for l in 1..=rep.n() {
                let w = v.neighbor(l);
                if rep.dim(&w) > 0 {
                    let img = Subspace::from_basis_rows(rep.field(), rep.dim(&w), vec![rep.map(v, l).apply(u)]);
                    let at_w = sub.spaces[&w].sum(&img)?;
                    sub.spaces.insert(w, at_w);
                }
            }
        }
        Ok(sub)
    }

    pub fn check_in(&self, rep: &CoverRep<F>) -> Result<()> {
        for (v, d) in rep.vertices() {
            match self.spaces.get(v) {
                Some(s) if s.ambient_dim() == d => {}
                _ => return Err(Error::DimensionMismatch(format!("no matching subspace at {v}"))),
            }
        }
        for (source, label) in rep.arrows_out() {
            let target = source.neighbor(label);
            let Some(t) = self.spaces.get(&target) else { continue };
            let map = rep.map(&source, label);
            if !self.spaces[&source].basis_vectors().iter().all(|u| t.contains(&map.apply(u))) {
                return Err(Error::NotSubmodule(format!("arrow {source} -> {target} leaves the subspace")));
            }
        }
        Ok(())
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        let mut spaces = BTreeMap::new();
        for (v, s) in &self.spaces {
            let o = other.spaces.get(v).ok_or_else(|| Error::DimensionMismatch(format!("{v} missing from summand")))?;
            spaces.insert(v.clone(), s.sum(o)?);
        }
        Ok(CoverSub { spaces })
    }

    pub fn is_subrep_of(&self, other: &Self) -> bool {
        self.spaces.iter().all(|(v, s)| other.spaces.get(v).is_some_and(|o| s.is_subspace_of(o)))
    }

    pub fn total_dim(&self) -> usize {
        self.spaces.values().map(Subspace::dim).sum()
    }

    /// The image of the subrepresentation in the push-down.
    pub fn push_down(&self, index: &BlockIndex) -> SubmodulePair<F> {
        let field = self.spaces.values().next().map(|s| s.field().clone());
        let (mut rows1, mut rows2) = (Vec::new(), Vec::new());
        for (v, s) in &self.spaces {
            let (rows, ambient) = match v.class() {
                VertexClass::Source => (&mut rows1, index.dim1),
                VertexClass::Sink => (&mut rows2, index.dim2),
            };
            let off = index.offsets[v];
            let field = s.field();
            for b in s.basis_vectors() {
                let mut big = vec![field.zero(); ambient];
                big[off..off + b.len()].clone_from_slice(&b);
                rows.push(big);
            }
        }
        let field = field.expect("a cover subrepresentation has at least one vertex");
        SubmodulePair {
            vertex1: Subspace::from_basis_rows(&field, index.dim1, rows1),
            vertex2: Subspace::from_basis_rows(&field, index.dim2, rows2),
        }
    }
}

/// Dimension of the space of morphisms `X -> Y` of cover representations.
pub fn cover_hom_dim<F: Field>(x: &CoverRep<F>, y: &CoverRep<F>) -> Result<usize> {
    if x.n() != y.n() || x.field() != y.field() {
        return Err(Error::DimensionMismatch("representations of different covers".into()));
    }
    let field = x.field();
    // One block of unknowns f_v : X_v -> Y_v per vertex where both are nonzero.
    let mut offsets = BTreeMap::new();
    let mut unknowns = 0;
    for (v, dx) in x.vertices() {
        let dy = y.dim(v);
        if dx > 0 && dy > 0 {
            offsets.insert(v.clone(), unknowns);
            unknowns += dx * dy;
        }
    }
    let mut rows: Vec<Vec<F::Elem>> = Vec::new();
    // f_b X_α − Y_α f_a = 0 for every arrow α : a -> b with X_a ≠ 0 and Y_b ≠ 0.
    for (a, label) in x.arrows_out() {
        let b = a.neighbor(label);
        let (da, db) = (x.dim(&a), y.dim(&b));
        if da == 0 || db == 0 {
            continue;
        }
        let x_map = (x.dim(&b) > 0).then(|| x.map(&a, label));
        let y_map = (y.dim(&a) > 0).then(|| y.map(&a, label));
        for r in 0..db {
            for c in 0..da {
                let mut row = vec![field.zero(); unknowns];
                if let (Some(xm), Some(&off)) = (&x_map, offsets.get(&b)) {
                    let dxb = x.dim(&b);
                    for k in 0..dxb {
                        row[off + r * dxb + k] = field.add(&row[off + r * dxb + k], xm.get(k, c));
                    }
                }
                if let (Some(ym), Some(&off)) = (&y_map, offsets.get(&a)) {
                    for k in 0..y.dim(&a) {
                        let idx = off + k * da + c;
                        row[idx] = field.sub(&row[idx], ym.get(r, k));
                    }
                }
                rows.push(row);
            }
        }
    }
    let sys = Matrix::from_rows(field, unknowns, rows)?;
    Ok(unknowns - sys.rank())
}

/// The trace of all thin single-arrow representations, plus every sink space.
///
/// A thin representation on the arrow `α : a -> b` maps onto the line of a
/// vector `u ∈ X_a` exactly when `u` is killed by every other arrow out of `a`,
/// so at a source vertex the trace is `Σ_α ∩_{β ≠ α} ker X_β`.
pub fn cover_max_bristled<F: Field>(x: &CoverRep<F>) -> Result<CoverSub<F>> {
    let mut sub = CoverSub::full(x);
    for (v, d) in x.vertices() {
        if v.class() != VertexClass::Source {
            continue;
        }
        let mut trace = Subspace::zero(x.field(), d);
        for keep in 1..=x.n() {
            let mut k = Subspace::full(x.field(), d);
            for other in (1..=x.n()).filter(|&l| l != keep) {
                k = k.restricted_kernel(&x.map(v, other));
            }
            trace = trace.sum(&k)?;
        }
        sub = sub.with_space(v, trace);
    }
    sub.check_in(x)?;
    Ok(sub)
}
