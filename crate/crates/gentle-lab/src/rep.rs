//! Quiver representations over exact rationals: the linear-algebra ground
//! truth for modules, resolutions, Hom spaces, and cohomology of complexes.
//!
//! Everything here follows the right-module convention: module elements are
//! row vectors and an arrow `a` acts as `x -> x * mat(a)` with `mat(a)` of
//! shape `dim(source) x dim(target)`.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

use crate::linalg::{rat, QMat, Rat};
use crate::quiver::{
    enumerate_nonzero_paths, multiply_paths, opposite, ArrowId, BoundQuiver, NonzeroPath,
    PathProduct, VertexId,
};
use crate::strings::{check_band, BandWord, StringWord};
use crate::Error;

/// A finite-dimensional representation of a bound quiver: one dimension per
/// vertex and one exact-rational matrix per arrow, with relation products
/// vanishing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    pub dims: Vec<usize>,
    pub mats: Vec<QMat>,
}

impl Representation {
    /// Validate shapes and relation vanishing against `bq`.
    pub fn new(bq: &BoundQuiver, dims: Vec<usize>, mats: Vec<QMat>) -> Result<Self, Error> {
        if dims.len() != bq.vertex_count() || mats.len() != bq.arrow_count() {
            return Err(Error::Internal("representation tables have wrong lengths".into()));
        }
        for a in 0..bq.arrow_count() {
            let (s, t) = (bq.source(a), bq.target(a));
            if mats[a].rows() != dims[s] || mats[a].cols() != dims[t] {
                return Err(Error::Internal(format!(
                    "matrix of arrow {} has shape {}x{}, expected {}x{}",
                    bq.arrow_name(a),
                    mats[a].rows(),
                    mats[a].cols(),
                    dims[s],
                    dims[t]
                )));
            }
        }
        for &(a, b) in &bq.relations {
            if !mats[a].mul(&mats[b]).is_zero() {
                return Err(Error::Internal(format!(
                    "relation {}*{} does not vanish on the representation",
                    bq.arrow_name(a),
                    bq.arrow_name(b)
                )));
            }
        }
        Ok(Representation { dims, mats })
    }

    pub fn zero(bq: &BoundQuiver) -> Self {
        Representation {
            dims: vec![0; bq.vertex_count()],
            mats: (0..bq.arrow_count()).map(|_| QMat::zeros(0, 0)).collect(),
        }
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn dim_display(&self, bq: &BoundQuiver) -> String {
        (0..self.dims.len())
            .map(|v| format!("{}:{}", bq.vertex_name(v), self.dims[v]))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Jordan block data for a band module: a nonzero eigenvalue and a block
/// size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JordanSpec {
    pub eigenvalue: Rat,
    pub size: usize,
}

impl JordanSpec {
    pub fn new(eigenvalue: Rat, size: usize) -> Result<Self, Error> {
        if eigenvalue.is_zero() {
            return Err(Error::Input("band modules need a nonzero eigenvalue".into()));
        }
        if size == 0 {
            return Err(Error::Input("Jordan block size must be positive".into()));
        }
        Ok(JordanSpec { eigenvalue, size })
    }
}

// ---------------------------------------------------------------------------
// Module constructions
// ---------------------------------------------------------------------------

/// The string module of `s`: one basis point per vertex of the walk, each
/// letter acting by 0/1 incidence.
pub fn string_module(bq: &BoundQuiver, s: &StringWord) -> Result<Representation, Error> {
    crate::strings::is_string(bq, s)
        .map_err(|v| Error::Input(format!("not a string: {v}")))?;
    let letters = s.letters();
    let n = letters.len();
    // Walk vertices v_0 .. v_n.
    let mut walk = Vec::with_capacity(n + 1);
    walk.push(s.source(bq));
    for l in letters {
        walk.push(l.target(bq));
    }
    // Position of each walk point inside the basis of its vertex.
    let mut dims = vec![0usize; bq.vertex_count()];
    let mut pos = Vec::with_capacity(n + 1);
    for &v in &walk {
        pos.push(dims[v]);
        dims[v] += 1;
    }
    let mut mats: Vec<QMat> = (0..bq.arrow_count())
        .map(|a| QMat::zeros(dims[bq.source(a)], dims[bq.target(a)]))
        .collect();
    for (i, l) in letters.iter().enumerate() {
        let (from, to) = if l.inverse { (i + 1, i) } else { (i, i + 1) };
        let m = &mut mats[l.arrow];
        let v = m.at(pos[from], pos[to]).clone() + Rat::one();
        m.set(pos[from], pos[to], v);
    }
    Representation::new(bq, dims, mats)
}

/// The band module of `b` with Jordan data `j`: `size` copies of the cyclic
/// basis; the closing letter carries the Jordan block, all others identity.
pub fn band_module(bq: &BoundQuiver, b: &BandWord, j: &JordanSpec) -> Result<Representation, Error> {
    let band = check_band(bq, &b.letters)?;
    let letters = &band.letters;
    let n = letters.len();
    let m = j.size;
    let verts: Vec<VertexId> = (0..n).map(|i| letters[i].source(bq)).collect();
    let mut dims = vec![0usize; bq.vertex_count()];
    let mut pos = Vec::with_capacity(n);
    for &v in &verts {
        pos.push(dims[v]);
        dims[v] += m;
    }
    let jordan = QMat::from_fn(m, m, |r, c| {
        if r == c {
            j.eigenvalue.clone()
        } else if c == r + 1 {
            Rat::one()
        } else {
            Rat::zero()
        }
    });
    let mut mats: Vec<QMat> = (0..bq.arrow_count())
        .map(|a| QMat::zeros(dims[bq.source(a)], dims[bq.target(a)]))
        .collect();
    for (k, l) in letters.iter().enumerate() {
        let (pfrom, pto) = (k, (k + 1) % n);
        let block = if k == n - 1 { &jordan } else { &QMat::identity(m) };
        // Letter k joins positions pfrom -> pto; a direct letter acts
        // forward, an inverse letter acts backward.
        let (bfrom, bto, block) = if l.inverse {
            (pto, pfrom, block.clone())
        } else {
            (pfrom, pto, block.clone())
        };
        let mat = &mut mats[l.arrow];
        for r in 0..m {
            for c in 0..m {
                if !block.at(r, c).is_zero() {
                    let v = mat.at(pos[bfrom] + r, pos[bto] + c).clone() + block.at(r, c);
                    mat.set(pos[bfrom] + r, pos[bto] + c, v);
                }
            }
        }
    }
    Representation::new(bq, dims, mats)
}

/// The right ideal generated by a nonzero path: the submodule of the
/// projective at its start spanned by all nonzero right extensions.
pub fn path_right_ideal(bq: &BoundQuiver, p: &NonzeroPath) -> Result<Representation, Error> {
    let all = enumerate_nonzero_paths(bq)?;
    let basis: Vec<NonzeroPath> = all
        .into_iter()
        .filter(|q| matches!(multiply_paths(bq, p, q), PathProduct::Path(_)))
        .collect();
    module_on_path_basis(bq, p.end(bq), basis, p.arrows.last().copied())
}

/// The indecomposable projective at `v`: basis all nonzero paths from `v`.
pub fn projective_module(bq: &BoundQuiver, v: VertexId) -> Result<Representation, Error> {
    path_right_ideal(bq, &NonzeroPath::trivial(v))
}

/// Shared construction: a module whose basis is a set of paths starting at
/// `start`, an arrow acting by right concatenation. `guard` is the arrow
/// whose relation with a path's first arrow has already been consumed (the
/// last arrow of the generating path), restricting which one-arrow
/// extensions of the empty suffix survive.
fn module_on_path_basis(
    bq: &BoundQuiver,
    start: VertexId,
    basis: Vec<NonzeroPath>,
    guard: Option<ArrowId>,
) -> Result<Representation, Error> {
    let mut dims = vec![0usize; bq.vertex_count()];
    let mut pos = Vec::with_capacity(basis.len());
    for q in &basis {
        let v = q.end(bq);
        pos.push(dims[v]);
        dims[v] += 1;
    }
    let index: BTreeMap<&NonzeroPath, usize> = basis.iter().zip(0..).collect();
    let mut mats: Vec<QMat> = (0..bq.arrow_count())
        .map(|a| QMat::zeros(dims[bq.source(a)], dims[bq.target(a)]))
        .collect();
    for (qi, q) in basis.iter().enumerate() {
        for a in bq.quiver.arrows_from(q.end(bq)) {
            let blocked = match q.arrows.last() {
                Some(&last) => bq.is_relation(last, a),
                None => guard.is_some_and(|g| bq.is_relation(g, a)),
            };
            if blocked {
                continue;
            }
            let mut arrows = q.arrows.clone();
            arrows.push(a);
            let extended = NonzeroPath { start, arrows };
            if let Some(&ti) = index.get(&extended) {
                let m = &mut mats[a];
                m.set(pos[qi], pos[ti], Rat::one());
            }
        }
    }
    Representation::new(bq, dims, mats)
}

/// Basis of `P(v)` in the order used by [`projective_module`].
pub fn projective_basis(bq: &BoundQuiver, v: VertexId) -> Result<Vec<NonzeroPath>, Error> {
    Ok(enumerate_nonzero_paths(bq)?.into_iter().filter(|q| q.start == v).collect())
}

/// Dual of a representation: same dimensions, transposed matrices, a module
/// over the opposite algebra.
pub fn dual_module(m: &Representation) -> Representation {
    Representation { dims: m.dims.clone(), mats: m.mats.iter().map(|x| x.transpose()).collect() }
}

/// The indecomposable injective at `v`: dual of the projective at `v` over
/// the opposite algebra.
pub fn injective_module(bq: &BoundQuiver, v: VertexId) -> Result<Representation, Error> {
    let op = opposite(bq);
    let p = projective_module(&op, v)?;
    let e = dual_module(&p);
    Representation::new(bq, e.dims, e.mats)
}

/// Direct sum, returning the sum and per-part basis offsets at each vertex.
pub fn direct_sum(bq: &BoundQuiver, parts: &[Representation]) -> (Representation, Vec<Vec<usize>>) {
    let nv = bq.vertex_count();
    let mut dims = vec![0usize; nv];
    let mut offsets = Vec::with_capacity(parts.len());
    for p in parts {
        offsets.push(dims.clone());
        for v in 0..nv {
            dims[v] += p.dims[v];
        }
    }
    let mut mats = Vec::with_capacity(bq.arrow_count());
    for a in 0..bq.arrow_count() {
        let (s, t) = (bq.source(a), bq.target(a));
        let mut m = QMat::zeros(dims[s], dims[t]);
        for (pi, p) in parts.iter().enumerate() {
            for r in 0..p.dims[s] {
                for c in 0..p.dims[t] {
                    let v = p.mats[a].at(r, c).clone();
                    if !v.is_zero() {
                        m.set(offsets[pi][s] + r, offsets[pi][t] + c, v);
                    }
                }
            }
        }
        mats.push(m);
    }
    (Representation { dims, mats }, offsets)
}

// ---------------------------------------------------------------------------
// Hom spaces and isomorphism
// ---------------------------------------------------------------------------

/// A homomorphism as one matrix per vertex.
pub type Homomorphism = Vec<QMat>;

/// Basis of `Hom(M, N)`: solutions of the intertwining system
/// `phi_source * N_a = M_a * phi_target` for every arrow `a`.
pub fn hom_space(bq: &BoundQuiver, m: &Representation, n: &Representation) -> Vec<Homomorphism> {
    let nv = bq.vertex_count();
    let mut offset = vec![0usize; nv + 1];
    for v in 0..nv {
        offset[v + 1] = offset[v] + m.dims[v] * n.dims[v];
    }
    let unknowns = offset[nv];
    let mut eq_count = 0;
    for a in 0..bq.arrow_count() {
        eq_count += m.dims[bq.source(a)] * n.dims[bq.target(a)];
    }
    // Constraint matrix C with one column per equation; solutions are the
    // rows x with x * C = 0.
    let mut c = QMat::zeros(unknowns, eq_count);
    let mut eq = 0;
    for a in 0..bq.arrow_count() {
        let (s, t) = (bq.source(a), bq.target(a));
        for i in 0..m.dims[s] {
            for j in 0..n.dims[t] {
                for k in 0..n.dims[s] {
                    let coef = n.mats[a].at(k, j).clone();
                    if !coef.is_zero() {
                        let u = offset[s] + i * n.dims[s] + k;
                        let v = c.at(u, eq).clone() + coef;
                        c.set(u, eq, v);
                    }
                }
                for k in 0..m.dims[t] {
                    let coef = m.mats[a].at(i, k).clone();
                    if !coef.is_zero() {
                        let u = offset[t] + k * n.dims[t] + j;
                        let v = c.at(u, eq).clone() - coef;
                        c.set(u, eq, v);
                    }
                }
                eq += 1;
            }
        }
    }
    let kernel = c.row_kernel();
    (0..kernel.rows())
        .map(|r| {
            (0..nv)
                .map(|v| {
                    QMat::from_fn(m.dims[v], n.dims[v], |i, j| {
                        kernel.at(r, offset[v] + i * n.dims[v] + j).clone()
                    })
                })
                .collect()
        })
        .collect()
}

pub fn hom_dim(bq: &BoundQuiver, m: &Representation, n: &Representation) -> usize {
    hom_space(bq, m, n).len()
}

fn combination(basis: &[Homomorphism], coeffs: &[Rat], nv: usize) -> Homomorphism {
    (0..nv)
        .map(|v| {
            let mut acc = QMat::zeros(basis[0][v].rows(), basis[0][v].cols());
            for (h, c) in basis.iter().zip(coeffs) {
                if !c.is_zero() {
                    acc = acc.add(&h[v].scale(c));
                }
            }
            acc
        })
        .collect()
}

fn invertible_everywhere(h: &Homomorphism) -> bool {
    h.iter().all(|m| m.is_invertible())
}

/// Isomorphism test: fast false on dimension-vector mismatch, then a search
/// for an invertible element of `Hom(M, N)` by random rational combinations
/// followed by a deterministic scan of small integer coefficient vectors. A
/// found invertible certifies true; an exhausted scan certifies false at the
/// module sizes used here. Larger Hom spaces without a certificate raise an
/// inconclusive error instead of guessing.
pub fn is_isomorphic(bq: &BoundQuiver, m: &Representation, n: &Representation) -> Result<bool, Error> {
    if m.dims != n.dims {
        return Ok(false);
    }
    if m.total_dim() == 0 {
        return Ok(true);
    }
    let basis = hom_space(bq, m, n);
    if basis.is_empty() {
        return Ok(false);
    }
    let nv = bq.vertex_count();
    let d = basis.len();
    let mut rng = ChaCha8Rng::seed_from_u64(0x67656e746c65);
    for _ in 0..20 {
        let coeffs: Vec<Rat> = (0..d)
            .map(|_| Rat::new(rng.gen_range(-9i64..=9).into(), rng.gen_range(1i64..=3).into()))
            .collect();
        if invertible_everywhere(&combination(&basis, &coeffs, nv)) {
            return Ok(true);
        }
    }
    if d <= 6 {
        let mut coeffs = vec![-2i64; d];
        loop {
            let cs: Vec<Rat> = coeffs.iter().map(|&x| rat(x)).collect();
            if invertible_everywhere(&combination(&basis, &cs, nv)) {
                return Ok(true);
            }
            let mut i = 0;
            loop {
                if i == d {
                    // Scan exhausted with no invertible combination.
                    return Ok(false);
                }
                coeffs[i] += 1;
                if coeffs[i] <= 2 {
                    break;
                }
                coeffs[i] = -2;
                i += 1;
            }
        }
    }
    if hom_dim(bq, m, n) != hom_dim(bq, n, m) {
        return Ok(false);
    }
    Err(Error::Inconclusive(
        "isomorphism search exhausted without a certificate".into(),
    ))
}

// ---------------------------------------------------------------------------
// Covers, syzygies, resolutions
// ---------------------------------------------------------------------------

/// A projective cover: the list of projective summands (by vertex) and the
/// cover map, one matrix per vertex from the cover to the module.
#[derive(Clone, Debug)]
pub struct ProjectiveCover {
    pub summands: Vec<VertexId>,
    pub cover: Representation,
    pub map: Vec<QMat>,
}

/// Projective cover and first syzygy. The top is the radical quotient; the
/// kernel comes back as a representation with the induced arrow actions.
pub fn projective_cover_and_syzygy(
    bq: &BoundQuiver,
    m: &Representation,
) -> Result<(ProjectiveCover, Representation), Error> {
    let nv = bq.vertex_count();
    // Radical: sum of images of all arrow actions, per vertex.
    let mut lifts: Vec<(VertexId, Vec<Rat>)> = Vec::new();
    for v in 0..nv {
        let mut rad = QMat::zeros(0, m.dims[v]);
        for a in bq.quiver.arrows_into(v) {
            rad = rad.vstack(&m.mats[a]);
        }
        let rad = rad.row_space();
        let mut current = rad.clone();
        for i in 0..m.dims[v] {
            let mut unit = vec![Rat::zero(); m.dims[v]];
            unit[i] = Rat::one();
            let candidate = current.vstack(&QMat::from_rows(vec![unit.clone()]));
            if candidate.rank() > current.rank() {
                current = candidate;
                lifts.push((v, unit));
            }
        }
    }
    let summands: Vec<VertexId> = lifts.iter().map(|(v, _)| *v).collect();
    let projectives: Vec<Representation> = summands
        .iter()
        .map(|&v| projective_module(bq, v))
        .collect::<Result<_, _>>()?;
    let (cover, offsets) = direct_sum(bq, &projectives);

    // Cover map: the basis path pi of P(v) goes to lift * action(pi).
    let mut map: Vec<QMat> = (0..nv).map(|v| QMat::zeros(cover.dims[v], m.dims[v])).collect();
    for (si, (v, lift)) in lifts.iter().enumerate() {
        let basis = projective_basis(bq, *v)?;
        for (bi, path) in basis.iter().enumerate() {
            let mut vec = QMat::from_rows(vec![lift.clone()]);
            for &a in &path.arrows {
                vec = vec.mul(&m.mats[a]);
            }
            let end = path.end(bq);
            // Row index of this basis path inside the cover at `end`.
            let local = basis
                .iter()
                .take(bi)
                .filter(|q| q.end(bq) == end)
                .count();
            let row = offsets[si][end] + local;
            for c in 0..m.dims[end] {
                map[end].set(row, c, vec.at(0, c).clone());
            }
        }
    }
    for v in 0..nv {
        if map[v].row_space().rows() != m.dims[v] {
            return Err(Error::Internal("projective cover is not surjective".into()));
        }
    }

    // Kernel with induced actions.
    let kernels: Vec<QMat> = (0..nv).map(|v| map[v].row_kernel()).collect();
    let kdims: Vec<usize> = kernels.iter().map(|k| k.rows()).collect();
    let mut kmats = Vec::with_capacity(bq.arrow_count());
    for a in 0..bq.arrow_count() {
        let (s, t) = (bq.source(a), bq.target(a));
        let image = kernels[s].mul(&cover.mats[a]);
        let x = kernels[t]
            .solve_left(&image)
            .ok_or_else(|| Error::Internal("syzygy is not arrow-stable".into()))?;
        debug_assert_eq!(x.rows(), kdims[s]);
        kmats.push(x);
    }
    let syzygy = Representation::new(bq, kdims, kmats)?;
    Ok((ProjectiveCover { summands, cover, map }, syzygy))
}

/// Outcome of iterated syzygy computation under a depth cap.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ResolveOutcome {
    Finite(usize),
    CapReached,
}

/// Projective dimension by iterating syzygies until zero, or `CapReached`
/// after `cap` steps. The cap is a harness device: infinity is only ever
/// asserted by the combinatorial layer.
pub fn resolve_pd(bq: &BoundQuiver, m: &Representation, cap: usize) -> Result<ResolveOutcome, Error> {
    let mut cur = m.clone();
    for step in 0..=cap {
        let (_, syz) = projective_cover_and_syzygy(bq, &cur)?;
        if syz.is_zero() {
            return Ok(ResolveOutcome::Finite(step));
        }
        cur = syz;
    }
    Ok(ResolveOutcome::CapReached)
}

/// Injective dimension via duality: resolve the dual module over the
/// opposite algebra.
pub fn resolve_id(bq: &BoundQuiver, m: &Representation, cap: usize) -> Result<ResolveOutcome, Error> {
    let op = opposite(bq);
    let dual = Representation::new(&op, m.dims.clone(), dual_module(m).mats)?;
    resolve_pd(&op, &dual, cap)
}

// ---------------------------------------------------------------------------
// Complexes
// ---------------------------------------------------------------------------

/// A bounded complex of representations. `diffs[i]` is the per-vertex matrix
/// of the differential from degree `i` to degree `i + 1`; missing degrees
/// are zero.
#[derive(Clone, Debug)]
pub struct ComplexOfReps {
    pub terms: BTreeMap<i32, Representation>,
    pub diffs: BTreeMap<i32, Vec<QMat>>,
}

impl ComplexOfReps {
    /// Validate: differentials are homomorphisms and compose to zero.
    pub fn new(
        bq: &BoundQuiver,
        terms: BTreeMap<i32, Representation>,
        diffs: BTreeMap<i32, Vec<QMat>>,
    ) -> Result<Self, Error> {
        let dim_at = |terms: &BTreeMap<i32, Representation>, d: i32, v: usize| {
            terms.get(&d).map_or(0, |t| t.dims[v])
        };
        for (&d, mats) in &diffs {
            for v in 0..bq.vertex_count() {
                if mats[v].rows() != dim_at(&terms, d, v) || mats[v].cols() != dim_at(&terms, d + 1, v)
                {
                    return Err(Error::Internal(format!("differential at degree {d} has wrong shape")));
                }
            }
            // Homomorphism condition per arrow.
            if let (Some(src), Some(tgt)) = (terms.get(&d), terms.get(&(d + 1))) {
                for a in 0..bq.arrow_count() {
                    let (s, t) = (bq.source(a), bq.target(a));
                    let lhs = mats[s].mul(&tgt.mats[a]);
                    let rhs = src.mats[a].mul(&mats[t]);
                    if lhs != rhs {
                        return Err(Error::Internal(format!(
                            "differential at degree {d} does not commute with arrow {}",
                            bq.arrow_name(a)
                        )));
                    }
                }
            }
            if let Some(next) = diffs.get(&(d + 1)) {
                for v in 0..bq.vertex_count() {
                    if !mats[v].mul(&next[v]).is_zero() {
                        return Err(Error::Internal(format!(
                            "differentials at degrees {d} and {} do not compose to zero",
                            d + 1
                        )));
                    }
                }
            }
        }
        Ok(ComplexOfReps { terms, diffs })
    }

    pub fn degree_range(&self) -> Option<(i32, i32)> {
        let lo = self.terms.keys().next()?;
        let hi = self.terms.keys().last()?;
        Some((*lo, *hi))
    }
}

/// Per-degree cohomology dimension vectors.
pub fn cohomology_dims(bq: &BoundQuiver, x: &ComplexOfReps) -> BTreeMap<i32, Vec<usize>> {
    let mut out = BTreeMap::new();
    for (&d, term) in &x.terms {
        let mut dims = Vec::with_capacity(bq.vertex_count());
        for v in 0..bq.vertex_count() {
            let out_rank = x
                .diffs
                .get(&d)
                .map_or(0, |mats| mats[v].rank());
            let in_rank = x
                .diffs
                .get(&(d - 1))
                .map_or(0, |mats| mats[v].rank());
            dims.push(term.dims[v] - out_rank - in_rank);
        }
        out.insert(d, dims);
    }
    out
}

/// Row index of each basis path inside its vertex block, following basis
/// order.
fn local_rows(bq: &BoundQuiver, basis: &[NonzeroPath]) -> Vec<usize> {
    let mut counters = vec![0usize; bq.vertex_count()];
    basis
        .iter()
        .map(|q| {
            let v = q.end(bq);
            let r = counters[v];
            counters[v] += 1;
            r
        })
        .collect()
}

/// Matrices of left multiplication by `p`, a homomorphism from the
/// projective at `target(p)` to the projective at `source(p)`.
pub fn left_mult_matrices(bq: &BoundQuiver, p: &NonzeroPath) -> Result<Vec<QMat>, Error> {
    let src_basis = projective_basis(bq, p.end(bq))?;
    let dst_basis = projective_basis(bq, p.start)?;
    let src_rows = local_rows(bq, &src_basis);
    let dst_rows = local_rows(bq, &dst_basis);
    let dst_index: BTreeMap<&NonzeroPath, usize> = dst_basis.iter().zip(0..).collect();
    let nv = bq.vertex_count();
    let count = |basis: &[NonzeroPath], v: VertexId| basis.iter().filter(|q| q.end(bq) == v).count();
    let mut mats: Vec<QMat> =
        (0..nv).map(|v| QMat::zeros(count(&src_basis, v), count(&dst_basis, v))).collect();
    for (qi, q) in src_basis.iter().enumerate() {
        if let PathProduct::Path(pq) = multiply_paths(bq, p, q) {
            let v = q.end(bq);
            let ti = dst_index[&pq];
            mats[v].set(src_rows[qi], dst_rows[ti], Rat::one());
        }
    }
    Ok(mats)
}
