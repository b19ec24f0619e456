//! Forbidden paths, their deterministic maximal extensions, forbidden
//! cycles, relational vertices, and strong sources/sinks.
//!
//! A forbidden path is an arrow sequence whose consecutive compositions all
//! lie in the ideal. Over a gentle pair each arrow has at most one forbidden
//! successor and at most one forbidden predecessor, so maximal extension is
//! a walk in a functional graph: it either terminates or falls onto a
//! forbidden cycle (a closed path whose closing composition is also in the
//! ideal).

use std::collections::BTreeMap;

use crate::quiver::{opposite, ArrowId, BoundQuiver, VertexId};
use crate::strings::StringWord;
use crate::Error;

/// A finite forbidden path of length >= 1 with maximality flags. Length-zero
/// forbidden paths (relational vertices) are handled by the callers that
/// need them and never materialized here.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForbiddenPath {
    pub arrows: Vec<ArrowId>,
    pub left_maximal: bool,
    pub right_maximal: bool,
}

impl ForbiddenPath {
    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn display(&self, bq: &BoundQuiver) -> String {
        self.arrows.iter().map(|&a| bq.arrow_name(a)).collect::<Vec<_>>().join("*")
    }
}

/// Outcome of maximal extension from a seed arrow.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Extension {
    Finite(ForbiddenPath),
    /// Extension fell onto a forbidden cycle; the cycle is reported in
    /// canonical rotation.
    OnCycle(Vec<ArrowId>),
}

impl Extension {
    /// Length as a homological contribution: finite length or None for the
    /// cyclic (infinite) case.
    pub fn finite_len(&self) -> Option<usize> {
        match self {
            Extension::Finite(p) => Some(p.len()),
            Extension::OnCycle(_) => None,
        }
    }
}

/// The unique arrow `c` with `ac` in the ideal, if any. Uniqueness is a
/// consequence of gentleness.
pub fn forbidden_successor(bq: &BoundQuiver, a: ArrowId) -> Option<ArrowId> {
    let mut found = None;
    for &(x, y) in &bq.relations {
        if x == a {
            debug_assert!(found.is_none(), "two forbidden successors for a gentle pair");
            found = Some(y);
        }
    }
    found
}

/// The unique arrow `c` with `ca` in the ideal, if any.
pub fn forbidden_predecessor(bq: &BoundQuiver, a: ArrowId) -> Option<ArrowId> {
    let mut found = None;
    for &(x, y) in &bq.relations {
        if y == a {
            debug_assert!(found.is_none(), "two forbidden predecessors for a gentle pair");
            found = Some(x);
        }
    }
    found
}

fn rotate_canonical(bq: &BoundQuiver, cycle: &[ArrowId]) -> Vec<ArrowId> {
    let min_pos = (0..cycle.len())
        .min_by_key(|&i| bq.arrow_name(cycle[i]))
        .unwrap();
    (0..cycle.len()).map(|i| cycle[(min_pos + i) % cycle.len()]).collect()
}

/// Iterate the forbidden successor from `seed`. Deterministic: either the
/// finite right-maximal forbidden path through `seed`, or the forbidden
/// cycle the iteration falls onto.
pub fn extend_right_maximal(bq: &BoundQuiver, seed: ArrowId) -> Extension {
    let mut seq = vec![seed];
    let mut seen: BTreeMap<ArrowId, usize> = BTreeMap::new();
    seen.insert(seed, 0);
    loop {
        let last = *seq.last().unwrap();
        match forbidden_successor(bq, last) {
            None => {
                let left_maximal = forbidden_predecessor(bq, seq[0]).is_none();
                return Extension::Finite(ForbiddenPath {
                    arrows: seq,
                    left_maximal,
                    right_maximal: true,
                });
            }
            Some(next) => {
                if let Some(&pos) = seen.get(&next) {
                    return Extension::OnCycle(rotate_canonical(bq, &seq[pos..]));
                }
                seen.insert(next, seq.len());
                seq.push(next);
            }
        }
    }
}

/// Left-maximal extension, implemented as right-maximal extension in the
/// opposite algebra (arrow indices coincide) with the result reversed.
pub fn extend_left_maximal(bq: &BoundQuiver, seed: ArrowId) -> Extension {
    let op = opposite(bq);
    match extend_right_maximal(&op, seed) {
        Extension::Finite(p) => {
            let arrows: Vec<ArrowId> = p.arrows.into_iter().rev().collect();
            Extension::Finite(ForbiddenPath {
                arrows,
                left_maximal: true,
                right_maximal: p.left_maximal,
            })
        }
        Extension::OnCycle(mut c) => {
            c.reverse();
            Extension::OnCycle(rotate_canonical(bq, &c))
        }
    }
}

/// All forbidden cycles, each in canonical rotation (lexicographically least
/// arrow name first), sorted. Distinct cycles are arrow-disjoint.
pub fn find_forbidden_cycles(bq: &BoundQuiver) -> Vec<Vec<ArrowId>> {
    let n = bq.arrow_count();
    let mut on_cycle = vec![false; n];
    let mut cycles = Vec::new();
    for a in 0..n {
        if on_cycle[a] {
            continue;
        }
        // Follow successors; a cycle through `a` must return to `a` itself
        // within n steps (the successor graph is functional).
        let mut cur = a;
        let mut steps = 0;
        let mut cycle = vec![a];
        let found = loop {
            match forbidden_successor(bq, cur) {
                None => break false,
                Some(next) => {
                    if next == a {
                        break true;
                    }
                    cycle.push(next);
                    cur = next;
                    steps += 1;
                    if steps > n {
                        break false;
                    }
                }
            }
        };
        if found {
            for &x in &cycle {
                debug_assert!(!on_cycle[x], "forbidden cycles must be arrow-disjoint");
                on_cycle[x] = true;
            }
            cycles.push(rotate_canonical(bq, &cycle));
        }
    }
    cycles.sort_by(|c, d| bq.arrow_name(c[0]).cmp(bq.arrow_name(d[0])));
    cycles
}

/// Map from each arrow to the forbidden cycle (index, position) containing
/// it, if any.
#[derive(Clone, Debug)]
pub struct CycleArrowIndex {
    pub cycles: Vec<Vec<ArrowId>>,
    pub position: Vec<Option<(usize, usize)>>,
}

impl CycleArrowIndex {
    pub fn new(bq: &BoundQuiver) -> Self {
        let cycles = find_forbidden_cycles(bq);
        let mut position = vec![None; bq.arrow_count()];
        for (ci, cycle) in cycles.iter().enumerate() {
            for (pi, &a) in cycle.iter().enumerate() {
                position[a] = Some((ci, pi));
            }
        }
        CycleArrowIndex { cycles, position }
    }

    pub fn on_cycle(&self, a: ArrowId) -> bool {
        self.position[a].is_some()
    }
}

/// Is the vertex at `position` (0 = source of the walk) a relational vertex
/// on the reduced walk `w`: do two adjacent same-direction letters compose
/// inside the ideal there?
pub fn is_relational_on_walk(
    bq: &BoundQuiver,
    w: &StringWord,
    position: usize,
) -> Result<bool, Error> {
    let letters = w.letters();
    if position > letters.len() {
        return Err(Error::Input(format!(
            "position {position} out of range for a walk of length {}",
            letters.len()
        )));
    }
    if position == 0 || position == letters.len() {
        return Ok(false);
    }
    let (u, v) = (letters[position - 1], letters[position]);
    let rel = if !u.inverse && !v.inverse {
        bq.is_relation(u.arrow, v.arrow)
    } else if u.inverse && v.inverse {
        bq.is_relation(v.arrow, u.arrow)
    } else {
        false
    };
    Ok(rel)
}

/// A string module is forbidden when its string uses an arrow lying on a
/// forbidden cycle. Trivial strings (simple modules) never are.
pub fn is_forbidden_module(bq: &BoundQuiver, s: &StringWord) -> bool {
    let index = CycleArrowIndex::new(bq);
    s.letters().iter().any(|l| index.on_cycle(l.arrow))
}

/// Every maximal forbidden path is either entirely on one forbidden cycle or
/// entirely cycle-free. Returns a counterexample path if violated.
pub fn check_lemma_forbcyc(bq: &BoundQuiver) -> Result<(), ForbiddenPath> {
    let index = CycleArrowIndex::new(bq);
    for seed in 0..bq.arrow_count() {
        if forbidden_predecessor(bq, seed).is_some() {
            continue; // not left-maximal
        }
        if let Extension::Finite(p) = extend_right_maximal(bq, seed) {
            let flags: Vec<bool> = p.arrows.iter().map(|&a| index.on_cycle(a)).collect();
            if flags.iter().any(|&x| x) && !flags.iter().all(|&x| x) {
                return Err(p);
            }
        }
    }
    Ok(())
}

/// Classify every vertex: strong sources (sources with at most one outgoing
/// arrow) and strong sinks (sinks with at most one incoming arrow).
pub fn strong_sources_sinks(bq: &BoundQuiver) -> (Vec<VertexId>, Vec<VertexId>) {
    let mut sources = Vec::new();
    let mut sinks = Vec::new();
    for v in 0..bq.vertex_count() {
        let ins = bq.quiver.arrows_into(v).len();
        let outs = bq.quiver.arrows_from(v).len();
        if ins == 0 && outs <= 1 {
            sources.push(v);
        }
        if outs == 0 && ins <= 1 {
            sinks.push(v);
        }
    }
    (sources, sinks)
}

/// All maximal forbidden paths (finite, both left- and right-maximal),
/// sorted by display name. Arrows on forbidden cycles belong to no finite
/// maximal path.
pub fn maximal_forbidden_paths(bq: &BoundQuiver) -> Vec<ForbiddenPath> {
    let mut out = Vec::new();
    for seed in 0..bq.arrow_count() {
        if forbidden_predecessor(bq, seed).is_some() {
            continue;
        }
        if let Extension::Finite(p) = extend_right_maximal(bq, seed) {
            out.push(p);
        }
    }
    out.sort_by_key(|p| p.display(bq));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::quiver::arrow_ids;
    use crate::strings::{parse_string_literal, SignedLetter};

    #[test]
    fn successors_on_paper_example() {
        let e1 = corpus::e1();
        let ids = arrow_ids(&e1);
        assert_eq!(forbidden_successor(&e1, ids["a12"]), Some(ids["a23"]));
        assert_eq!(forbidden_successor(&e1, ids["a41"]), None);
        let e2 = corpus::e2();
        let ids2 = arrow_ids(&e2);
        assert_eq!(forbidden_successor(&e2, ids2["a"]), Some(ids2["b"]));
        assert_eq!(forbidden_successor(&e2, ids2["b"]), None);
    }

    #[test]
    fn extension_cases() {
        let e2 = corpus::e2();
        let ids2 = arrow_ids(&e2);
        match extend_right_maximal(&e2, ids2["a"]) {
            Extension::Finite(p) => {
                assert_eq!(p.arrows, vec![ids2["a"], ids2["b"]]);
                assert!(p.right_maximal && p.left_maximal);
            }
            other => panic!("expected finite, got {other:?}"),
        }

        let e1 = corpus::e1();
        let ids = arrow_ids(&e1);
        match extend_right_maximal(&e1, ids["a12"]) {
            Extension::OnCycle(c) => {
                assert_eq!(c, vec![ids["a12"], ids["a23"], ids["a31"]]);
            }
            other => panic!("expected cycle, got {other:?}"),
        }
        match extend_right_maximal(&e1, ids["a74"]) {
            Extension::Finite(p) => assert_eq!(p.arrows, vec![ids["a74"], ids["a41"]]),
            other => panic!("expected finite, got {other:?}"),
        }
        // Determinism.
        assert_eq!(extend_right_maximal(&e1, ids["a74"]), extend_right_maximal(&e1, ids["a74"]));
    }

    #[test]
    fn left_extension_mirrors_right() {
        let e1 = corpus::e1();
        let ids = arrow_ids(&e1);
        match extend_left_maximal(&e1, ids["a41"]) {
            Extension::Finite(p) => {
                assert_eq!(p.arrows, vec![ids["a74"], ids["a41"]]);
                assert!(p.left_maximal);
            }
            other => panic!("expected finite, got {other:?}"),
        }
        match extend_left_maximal(&e1, ids["a97"]) {
            Extension::OnCycle(c) => assert_eq!(c.len(), 3),
            other => panic!("expected cycle, got {other:?}"),
        }
    }

    #[test]
    fn cycles_of_corpus() {
        let e1 = corpus::e1();
        let ids = arrow_ids(&e1);
        let cycles = find_forbidden_cycles(&e1);
        assert_eq!(
            cycles,
            vec![
                vec![ids["a12"], ids["a23"], ids["a31"]],
                vec![ids["a78"], ids["a89"], ids["a97"]],
            ]
        );
        assert!(find_forbidden_cycles(&corpus::e2()).is_empty());
        let e3 = corpus::e3();
        let ids3 = arrow_ids(&e3);
        assert_eq!(find_forbidden_cycles(&e3), vec![vec![ids3["a"], ids3["b"]]]);
    }

    #[test]
    fn relational_positions() {
        let e1 = corpus::e1();
        // a74 a41 is a walk (not a string): vertex 4 in the middle is
        // relational because a74*a41 lies in the ideal.
        let ids = arrow_ids(&e1);
        let w = StringWord::Word(vec![
            SignedLetter::direct(ids["a74"]),
            SignedLetter::direct(ids["a41"]),
        ]);
        assert!(is_relational_on_walk(&e1, &w, 1).unwrap());
        assert!(!is_relational_on_walk(&e1, &w, 0).unwrap());
        assert!(!is_relational_on_walk(&e1, &w, 2).unwrap());
        assert!(is_relational_on_walk(&e1, &w, 3).is_err());
        let t = StringWord::Trivial(0);
        assert!(!is_relational_on_walk(&e1, &t, 0).unwrap());
    }

    #[test]
    fn forbidden_module_predicate() {
        let e1 = corpus::e1();
        assert!(!is_forbidden_module(&e1, &parse_string_literal(&e1, "a41").unwrap()));
        assert!(is_forbidden_module(&e1, &parse_string_literal(&e1, "a12").unwrap()));
        assert!(!is_forbidden_module(&e1, &parse_string_literal(&e1, "e:1").unwrap()));
    }

    #[test]
    fn forbcyc_lemma_on_corpus() {
        for bq in [corpus::e1(), corpus::e2(), corpus::e3(), corpus::kronecker()] {
            assert!(check_lemma_forbcyc(&bq).is_ok());
        }
    }

    #[test]
    fn strong_vertices() {
        let e2 = corpus::e2();
        let (sources, sinks) = strong_sources_sinks(&e2);
        assert_eq!(sources, vec![e2.quiver.vertex_index("1").unwrap()]);
        assert_eq!(sinks, vec![e2.quiver.vertex_index("3").unwrap()]);
        let e1 = corpus::e1();
        let (sources, sinks) = strong_sources_sinks(&e1);
        assert!(sources.is_empty() && sinks.is_empty());
        let isolated = crate::quiver::parse_bound_quiver("vertices: v").unwrap();
        let (sources, sinks) = strong_sources_sinks(&isolated);
        assert_eq!((sources.len(), sinks.len()), (1, 1));
    }

    #[test]
    fn maximal_paths_of_e1() {
        let e1 = corpus::e1();
        let paths = maximal_forbidden_paths(&e1);
        let shown: Vec<String> = paths.iter().map(|p| p.display(&e1)).collect();
        assert_eq!(shown, vec!["a74*a41", "a85*a52", "a96*a63"]);
    }
}
