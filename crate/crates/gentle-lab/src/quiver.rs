//! Bound quivers, gentleness validation, and path arithmetic.
//!
//! A [`BoundQuiver`] is a finite quiver together with a set of length-two
//! monomial relations; composition is written left to right, so a relation
//! `(a, b)` kills the path "a then b". Vertex and arrow identifiers are
//! opaque strings; internally everything is indexed by dense integers.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use crate::Error;

/// Index of a vertex in [`Quiver::vertices`].
pub type VertexId = usize;
/// Index of an arrow in [`Quiver::arrows`].
pub type ArrowId = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: VertexId,
    pub target: VertexId,
}

/// A finite quiver. Vertices are stored sorted by name, arrows in
/// declaration order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn vertex_index(&self, name: &str) -> Option<VertexId> {
        self.vertices.binary_search_by(|v| v.as_str().cmp(name)).ok()
    }

    pub fn arrow_index(&self, name: &str) -> Option<ArrowId> {
        self.arrows.iter().position(|a| a.name == name)
    }

    pub fn arrows_from(&self, v: VertexId) -> Vec<ArrowId> {
        (0..self.arrows.len()).filter(|&a| self.arrows[a].source == v).collect()
    }

    pub fn arrows_into(&self, v: VertexId) -> Vec<ArrowId> {
        (0..self.arrows.len()).filter(|&a| self.arrows[a].target == v).collect()
    }
}

/// A bound quiver `(Q, I)` with `I` generated by length-two paths.
///
/// `relations` holds pairs `(a, b)` with `target(a) = source(b)`, meaning the
/// composite path `ab` is zero in the algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundQuiver {
    pub quiver: Quiver,
    pub relations: BTreeSet<(ArrowId, ArrowId)>,
}

fn valid_ident(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl BoundQuiver {
    /// Build a bound quiver from names. Vertices are sorted; arrows keep the
    /// given order. Fails on duplicate identifiers, undeclared endpoints,,
    /// and non-composable or duplicate relations.
    pub fn new(
        vertices: Vec<String>,
        arrows: Vec<(String, String, String)>,
        relations: Vec<(String, String)>,
    ) -> Result<Self, Error> {
        if vertices.is_empty() {
            return Err(Error::Input("a quiver needs at least one vertex".into()));
        }
        let mut vs = vertices;
        vs.sort();
        for w in vs.windows(2) {
            if w[0] == w[1] {
                return Err(Error::Input(format!("duplicate vertex '{}'", w[0])));
            }
        }
        for v in &vs {
            if !valid_ident(v) {
                return Err(Error::Input(format!("invalid vertex identifier '{v}'")));
            }
        }
        let quiver = Quiver { vertices: vs, arrows: Vec::new() };
        let mut q = quiver;
        let mut seen = BTreeSet::new();
        for (name, src, tgt) in arrows {
            if !valid_ident(&name) {
                return Err(Error::Input(format!("invalid arrow identifier '{name}'")));
            }
            if !seen.insert(name.clone()) {
                return Err(Error::Input(format!("duplicate arrow '{name}'")));
            }
            let source = q
                .vertex_index(&src)
                .ok_or_else(|| Error::Input(format!("arrow '{name}': undeclared vertex '{src}'")))?;
            let target = q
                .vertex_index(&tgt)
                .ok_or_else(|| Error::Input(format!("arrow '{name}': undeclared vertex '{tgt}'")))?;
            q.arrows.push(Arrow { name, source, target });
        }
        let mut rels = BTreeSet::new();
        for (a, b) in relations {
            let ai = q
                .arrow_index(&a)
                .ok_or_else(|| Error::Input(format!("relation names undeclared arrow '{a}'")))?;
            let bi = q
                .arrow_index(&b)
                .ok_or_else(|| Error::Input(format!("relation names undeclared arrow '{b}'")))?;
            if q.arrows[ai].target != q.arrows[bi].source {
                return Err(Error::Input(format!(
                    "relation {a}*{b} is not composable: target({a}) != source({b})"
                )));
            }
            if !rels.insert((ai, bi)) {
                return Err(Error::Input(format!("duplicate relation {a}*{b}")));
            }
        }
        Ok(BoundQuiver { quiver: q, relations: rels })
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.quiver.arrows.len()
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.quiver.vertices[v]
    }

    pub fn arrow_name(&self, a: ArrowId) -> &str {
        &self.quiver.arrows[a].name
    }

    pub fn source(&self, a: ArrowId) -> VertexId {
        self.quiver.arrows[a].source
    }

    pub fn target(&self, a: ArrowId) -> VertexId {
        self.quiver.arrows[a].target
    }

    pub fn is_relation(&self, a: ArrowId, b: ArrowId) -> bool {
        self.relations.contains(&(a, b))
    }
}

// ---------------------------------------------------------------------------
// Text format
// ---------------------------------------------------------------------------

/// Parse the line-oriented bound-quiver format:
///
/// ```text
/// # comment
/// vertices: 1 2 3
/// arrow a: 1 -> 2
/// arrow b: 2 -> 3
/// relations: a*b
/// ```
pub fn parse_bound_quiver(text: &str) -> Result<BoundQuiver, Error> {
    let mut vertices: Vec<String> = Vec::new();
    let mut arrows: Vec<(String, String, String)> = Vec::new();
    let mut relations: Vec<(String, String)> = Vec::new();

    for (lineno, raw) in text.lines().enumerate() {
        let lineno = lineno + 1;
        let line = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        };
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let col = |token: &str| raw.find(token).map_or(1, |i| i + 1);
        if let Some(rest) = line.strip_prefix("vertices:") {
            for tok in rest.split_whitespace() {
                if !valid_ident(tok) {
                    return Err(Error::Parse {
                        line: lineno,
                        col: col(tok),
                        msg: format!("invalid vertex identifier '{tok}'"),
                    });
                }
                vertices.push(tok.to_string());
            }
        } else if let Some(rest) = line.strip_prefix("arrow") {
            let Some((name, spec)) = rest.split_once(':') else {
                return Err(Error::Parse {
                    line: lineno,
                    col: 1,
                    msg: "expected 'arrow <id>: <src> -> <tgt>'".into(),
                });
            };
            let name = name.trim();
            let Some((src, tgt)) = spec.split_once("->") else {
                return Err(Error::Parse {
                    line: lineno,
                    col: col(spec.trim()),
                    msg: "expected '<src> -> <tgt>'".into(),
                });
            };
            let (src, tgt) = (src.trim(), tgt.trim());
            for tok in [name, src, tgt] {
                if !valid_ident(tok) {
                    return Err(Error::Parse {
                        line: lineno,
                        col: col(tok),
                        msg: format!("invalid identifier '{tok}'"),
                    });
                }
            }
            arrows.push((name.to_string(), src.to_string(), tgt.to_string()));
        } else if let Some(rest) = line.strip_prefix("relations:") {
            for item in rest.split(',') {
                let item = item.trim();
                if item.is_empty() {
                    continue;
                }
                let Some((a, b)) = item.split_once('*') else {
                    return Err(Error::Parse {
                        line: lineno,
                        col: col(item),
                        msg: format!("relation '{item}' must have the form a*b"),
                    });
                };
                relations.push((a.trim().to_string(), b.trim().to_string()));
            }
        } else {
            return Err(Error::Parse {
                line: lineno,
                col: 1,
                msg: format!("unrecognized line '{line}'"),
            });
        }
    }

    BoundQuiver::new(vertices, arrows, relations)
        .map_err(|e| match e {
            Error::Input(msg) => Error::Parse { line: 0, col: 0, msg },
            other => other,
        })
}

/// Byte-stable serialization: vertices sorted, arrows in declaration order,
/// relations sorted lexicographically. `parse(serialize(bq)) == bq`.
pub fn serialize_bound_quiver(bq: &BoundQuiver) -> String {
    let mut out = String::new();
    out.push_str("vertices:");
    for v in &bq.quiver.vertices {
        let _ = write!(out, " {v}");
    }
    out.push('\n');
    for a in &bq.quiver.arrows {
        let _ = writeln!(
            out,
            "arrow {}: {} -> {}",
            a.name, bq.quiver.vertices[a.source], bq.quiver.vertices[a.target]
        );
    }
    if !bq.relations.is_empty() {
        let mut rels: Vec<String> = bq
            .relations
            .iter()
            .map(|&(a, b)| format!("{}*{}", bq.arrow_name(a), bq.arrow_name(b)))
            .collect();
        rels.sort();
        let _ = writeln!(out, "relations: {}", rels.join(", "));
    }
    out
}

// ---------------------------------------------------------------------------
// Gentleness
// ---------------------------------------------------------------------------

/// A named violation of one of the four gentleness conditions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GentleViolation {
    /// More than two incoming or outgoing arrows at a vertex.
    Degree { vertex: String, incoming: usize, outgoing: usize },
    /// Two arrows `a != b` ending at the source of `c`: exactly one of
    /// `ac`, `bc` must lie in the ideal.
    IncomingAlternative { a: String, b: String, c: String, in_ideal: usize },
    /// Two arrows `a != b` starting at the target of `c`: exactly one of
    /// `ca`, `cb` must lie in the ideal.
    OutgoingAlternative { a: String, b: String, c: String, in_ideal: usize },
}

impl std::fmt::Display for GentleViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GentleViolation::Degree { vertex, incoming, outgoing } => write!(
                f,
                "(G1) vertex {vertex} has {incoming} incoming and {outgoing} outgoing arrows"
            ),
            GentleViolation::IncomingAlternative { a, b, c, in_ideal } => write!(
                f,
                "(G2) arrows {a}, {b} end at source({c}): {in_ideal} of {a}*{c}, {b}*{c} in the ideal, expected exactly 1"
            ),
            GentleViolation::OutgoingAlternative { a, b, c, in_ideal } => write!(
                f,
                "(G3) arrows {a}, {b} start at target({c}): {in_ideal} of {c}*{a}, {c}*{b} in the ideal, expected exactly 1"
            ),
        }
    }
}

/// Check the gentleness conditions. `(G4)` is structural here: relations are
/// length-two pairs by construction, so it always passes.
pub fn validate_gentle(bq: &BoundQuiver) -> Vec<GentleViolation> {
    let mut violations = Vec::new();
    let q = &bq.quiver;
    for v in 0..q.vertices.len() {
        let incoming = q.arrows_into(v).len();
        let outgoing = q.arrows_from(v).len();
        if incoming > 2 || outgoing > 2 {
            violations.push(GentleViolation::Degree {
                vertex: q.vertices[v].clone(),
                incoming,
                outgoing,
            });
        }
    }
    for v in 0..q.vertices.len() {
        let ins = q.arrows_into(v);
        let outs = q.arrows_from(v);
        if ins.len() == 2 {
            for &c in &outs {
                let n = [ins[0], ins[1]].iter().filter(|&&a| bq.is_relation(a, c)).count();
                if n != 1 {
                    violations.push(GentleViolation::IncomingAlternative {
                        a: q.arrows[ins[0]].name.clone(),
                        b: q.arrows[ins[1]].name.clone(),
                        c: q.arrows[c].name.clone(),
                        in_ideal: n,
                    });
                }
            }
        }
        if outs.len() == 2 {
            for &c in &ins {
                let n = [outs[0], outs[1]].iter().filter(|&&a| bq.is_relation(c, a)).count();
                if n != 1 {
                    violations.push(GentleViolation::OutgoingAlternative {
                        a: q.arrows[outs[0]].name.clone(),
                        b: q.arrows[outs[1]].name.clone(),
                        c: q.arrows[c].name.clone(),
                        in_ideal: n,
                    });
                }
            }
        }
    }
    violations
}

/// Error out unless `bq` is gentle.
pub fn require_gentle(bq: &BoundQuiver) -> Result<(), Error> {
    let v = validate_gentle(bq);
    if v.is_empty() {
        Ok(())
    } else {
        Err(Error::NotGentle(v.iter().map(|x| x.to_string()).collect()))
    }
}

// ---------------------------------------------------------------------------
// Paths
// ---------------------------------------------------------------------------

/// A path that is nonzero in the algebra: composable arrows with no
/// consecutive pair in the ideal. The empty arrow sequence is the trivial
/// path at `start`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct NonzeroPath {
    pub start: VertexId,
    pub arrows: Vec<ArrowId>,
}

impl NonzeroPath {
    pub fn trivial(v: VertexId) -> Self {
        NonzeroPath { start: v, arrows: Vec::new() }
    }

    /// Validate composability and ideal-avoidance against `bq`.
    pub fn new(bq: &BoundQuiver, start: VertexId, arrows: Vec<ArrowId>) -> Result<Self, Error> {
        let mut at = start;
        for (i, &a) in arrows.iter().enumerate() {
            if bq.source(a) != at {
                return Err(Error::Input(format!(
                    "path is not composable at position {i} (arrow {})",
                    bq.arrow_name(a)
                )));
            }
            if i > 0 && bq.is_relation(arrows[i - 1], a) {
                return Err(Error::Input(format!(
                    "path is zero: {}*{} lies in the ideal",
                    bq.arrow_name(arrows[i - 1]),
                    bq.arrow_name(a)
                )));
            }
            at = bq.target(a);
        }
        Ok(NonzeroPath { start, arrows })
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn end(&self, bq: &BoundQuiver) -> VertexId {
        self.arrows.last().map_or(self.start, |&a| bq.target(a))
    }

    pub fn display(&self, bq: &BoundQuiver) -> String {
        if self.arrows.is_empty() {
            format!("e_{}", bq.vertex_name(self.start))
        } else {
            self.arrows.iter().map(|&a| bq.arrow_name(a)).collect::<Vec<_>>().join("*")
        }
    }
}

/// Product of two paths in the algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PathProduct {
    Zero,
    Path(NonzeroPath),
}

/// Concatenate `p` then `q`; zero when not composable or when the join hits
/// the ideal.
pub fn multiply_paths(bq: &BoundQuiver, p: &NonzeroPath, q: &NonzeroPath) -> PathProduct {
    if p.end(bq) != q.start {
        return PathProduct::Zero;
    }
    if let (Some(&last), Some(&first)) = (p.arrows.last(), q.arrows.first()) {
        if bq.is_relation(last, first) {
            return PathProduct::Zero;
        }
    }
    let mut arrows = p.arrows.clone();
    arrows.extend_from_slice(&q.arrows);
    PathProduct::Path(NonzeroPath { start: p.start, arrows })
}

/// The opposite bound quiver: same names, arrows reversed, relations
/// `(a, b)` turned into `(b, a)`. An involution.
pub fn opposite(bq: &BoundQuiver) -> BoundQuiver {
    let quiver = Quiver {
        vertices: bq.quiver.vertices.clone(),
        arrows: bq
            .quiver
            .arrows
            .iter()
            .map(|a| Arrow { name: a.name.clone(), source: a.target, target: a.source })
            .collect(),
    };
    let relations = bq.relations.iter().map(|&(a, b)| (b, a)).collect();
    BoundQuiver { quiver, relations }
}

/// All nonzero paths, i.e. a basis of the algebra. Errors with a witness
/// cycle when an oriented cycle avoiding the ideal makes the path set
/// infinite (the algebra would be infinite-dimensional).
pub fn enumerate_nonzero_paths(bq: &BoundQuiver) -> Result<Vec<NonzeroPath>, Error> {
    let n = bq.arrow_count();
    // Composition graph on arrows: a -> b when "ab" is a nonzero path.
    let succ: Vec<Vec<ArrowId>> = (0..n)
        .map(|a| {
            (0..n)
                .filter(|&b| bq.target(a) == bq.source(b) && !bq.is_relation(a, b))
                .collect()
        })
        .collect();

    // Cycle detection by three-color DFS.
    let mut color = vec![0u8; n];
    let mut stack_path: Vec<ArrowId> = Vec::new();
    fn dfs(
        a: ArrowId,
        succ: &[Vec<ArrowId>],
        color: &mut [u8],
        stack_path: &mut Vec<ArrowId>,
    ) -> Option<Vec<ArrowId>> {
        color[a] = 1;
        stack_path.push(a);
        for &b in &succ[a] {
            if color[b] == 1 {
                let pos = stack_path.iter().position(|&x| x == b).unwrap();
                return Some(stack_path[pos..].to_vec());
            }
            if color[b] == 0 {
                if let Some(c) = dfs(b, succ, color, stack_path) {
                    return Some(c);
                }
            }
        }
        stack_path.pop();
        color[a] = 2;
        None
    }
    for a in 0..n {
        if color[a] == 0 {
            if let Some(cycle) = dfs(a, &succ, &mut color, &mut stack_path) {
                let vertices =
                    cycle.iter().map(|&x| bq.vertex_name(bq.source(x)).to_string()).collect();
                return Err(Error::InfiniteDimensional { cycle: vertices });
            }
        }
    }

    let mut paths: Vec<NonzeroPath> =
        (0..bq.vertex_count()).map(NonzeroPath::trivial).collect();
    let mut frontier: Vec<NonzeroPath> = (0..n)
        .map(|a| NonzeroPath { start: bq.source(a), arrows: vec![a] })
        .collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for p in &frontier {
            paths.push(p.clone());
            let last = *p.arrows.last().unwrap();
            for &b in &succ[last] {
                let mut arrows = p.arrows.clone();
                arrows.push(b);
                next.push(NonzeroPath { start: p.start, arrows });
            }
        }
        frontier = next;
    }
    paths.sort_by(|p, q| {
        (p.len(), p.start, &p.arrows).cmp(&(q.len(), q.start, &q.arrows))
    });
    Ok(paths)
}

/// Dimension of the algebra (number of nonzero paths).
pub fn algebra_dimension(bq: &BoundQuiver) -> Result<usize, Error> {
    Ok(enumerate_nonzero_paths(bq)?.len())
}

// ---------------------------------------------------------------------------
// Bound-quiver isomorphism
// ---------------------------------------------------------------------------

/// An isomorphism of bound quivers: vertex and arrow bijections preserving
/// sources, targets, and the relation set.
#[derive(Clone, Debug)]
pub struct QuiverIso {
    pub vertex_map: Vec<VertexId>,
    pub arrow_map: Vec<ArrowId>,
}

/// Exact backtracking search for a bound-quiver isomorphism `a -> b`,
/// pruned by degree and relation profiles. Corpus-sized inputs only.
pub fn bound_quiver_isomorphism(a: &BoundQuiver, b: &BoundQuiver) -> Option<QuiverIso> {
    if a.vertex_count() != b.vertex_count()
        || a.arrow_count() != b.arrow_count()
        || a.relations.len() != b.relations.len()
    {
        return None;
    }
    let profile = |bq: &BoundQuiver, v: VertexId| -> (usize, usize, usize) {
        let ins = bq.quiver.arrows_into(v).len();
        let outs = bq.quiver.arrows_from(v).len();
        let rels = bq
            .relations
            .iter()
            .filter(|&&(x, _)| bq.target(x) == v)
            .count();
        (ins, outs, rels)
    };
    let pa: Vec<_> = (0..a.vertex_count()).map(|v| profile(a, v)).collect();
    let pb: Vec<_> = (0..b.vertex_count()).map(|v| profile(b, v)).collect();
    {
        let mut sa = pa.clone();
        let mut sb = pb.clone();
        sa.sort();
        sb.sort();
        if sa != sb {
            return None;
        }
    }

    let nv = a.vertex_count();
    let mut vmap: Vec<Option<VertexId>> = vec![None; nv];
    let mut used = vec![false; nv];

    // Arrow matching for a full vertex assignment, multi-arrow aware.
    fn match_arrows(a: &BoundQuiver, b: &BoundQuiver, vmap: &[Option<VertexId>]) -> Option<Vec<ArrowId>> {
        let n = a.arrow_count();
        let mut amap: Vec<Option<ArrowId>> = vec![None; n];
        let mut used = vec![false; n];
        fn go(
            i: usize,
            a: &BoundQuiver,
            b: &BoundQuiver,
            vmap: &[Option<VertexId>],
            amap: &mut Vec<Option<ArrowId>>,
            used: &mut Vec<bool>,
        ) -> bool {
            if i == a.arrow_count() {
                // All endpoints line up; check relations.
                let mapped: BTreeSet<(ArrowId, ArrowId)> = a
                    .relations
                    .iter()
                    .map(|&(x, y)| (amap[x].unwrap(), amap[y].unwrap()))
                    .collect();
                return mapped == b.relations;
            }
            let (s, t) = (vmap[a.source(i)].unwrap(), vmap[a.target(i)].unwrap());
            for j in 0..b.arrow_count() {
                if !used[j] && b.source(j) == s && b.target(j) == t {
                    used[j] = true;
                    amap[i] = Some(j);
                    if go(i + 1, a, b, vmap, amap, used) {
                        return true;
                    }
                    used[j] = false;
                    amap[i] = None;
                }
            }
            false
        }
        if go(0, a, b, vmap, &mut amap, &mut used) {
            Some(amap.into_iter().map(|x| x.unwrap()).collect())
        } else {
            None
        }
    }

    fn assign(
        i: usize,
        a: &BoundQuiver,
        b: &BoundQuiver,
        pa: &[(usize, usize, usize)],
        pb: &[(usize, usize, usize)],
        vmap: &mut Vec<Option<VertexId>>,
        used: &mut Vec<bool>,
    ) -> Option<Vec<ArrowId>> {
        if i == a.vertex_count() {
            return match_arrows(a, b, vmap);
        }
        for w in 0..b.vertex_count() {
            if used[w] || pa[i] != pb[w] {
                continue;
            }
            // Adjacency consistency with the vertices already assigned.
            let ok = (0..a.arrow_count()).all(|x| {
                let (s, t) = (a.source(x), a.target(x));
                let known = |v: usize| v < i || v == i;
                if !(known(s) && known(t)) {
                    return true;
                }
                let ms = if s == i { w } else { vmap[s].unwrap() };
                let mt = if t == i { w } else { vmap[t].unwrap() };
                (0..b.arrow_count()).any(|y| b.source(y) == ms && b.target(y) == mt)
            });
            if !ok {
                continue;
            }
            vmap[i] = Some(w);
            used[w] = true;
            if let Some(amap) = assign(i + 1, a, b, pa, pb, vmap, used) {
                return Some(amap);
            }
            vmap[i] = None;
            used[w] = false;
        }
        None
    }

    let amap = assign(0, a, b, &pa, &pb, &mut vmap, &mut used)?;
    Some(QuiverIso { vertex_map: vmap.into_iter().map(|x| x.unwrap()).collect(), arrow_map: amap })
}

/// Disjoint union of bound quivers, prefixing identifiers per component to
/// keep them unique.
pub fn disjoint_union(parts: &[(&str, &BoundQuiver)]) -> BoundQuiver {
    let mut vertices = Vec::new();
    let mut arrows = Vec::new();
    let mut relations = Vec::new();
    for (prefix, bq) in parts {
        for v in &bq.quiver.vertices {
            vertices.push(format!("{prefix}{v}"));
        }
        for a in &bq.quiver.arrows {
            arrows.push((
                format!("{prefix}{}", a.name),
                format!("{prefix}{}", bq.quiver.vertices[a.source]),
                format!("{prefix}{}", bq.quiver.vertices[a.target]),
            ));
        }
        for &(x, y) in &bq.relations {
            relations.push((
                format!("{prefix}{}", bq.arrow_name(x)),
                format!("{prefix}{}", bq.arrow_name(y)),
            ));
        }
    }
    BoundQuiver::new(vertices, arrows, relations).expect("disjoint union is well-formed")
}

/// Map from arrow name to id, for test convenience.
pub fn arrow_ids(bq: &BoundQuiver) -> BTreeMap<String, ArrowId> {
    bq.quiver
        .arrows
        .iter()
        .enumerate()
        .map(|(i, a)| (a.name.clone(), i))
        .collect()
}
