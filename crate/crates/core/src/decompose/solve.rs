//! The recursive solver: basic leaves are solved on their expansion, other
//! nodes are split along a 2-join or complement 2-join, the small side is
//! solved four times (three for complement 2-joins) to prelabel the marker
//! of the big side, and the big side is solved once.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::block::{build_block, kind_of, Block, BlockSide};
use super::expand::{expand_active, recover_alpha, Expansion};
use super::{
    ComponentLabel, DecompKind, GadgetShape, Label, LabelTag, LabeledComponent, NotInClassCertificate, NotInClassReason,
    PathStep, PreLabel, Target,
};
use crate::basic::{alpha_basic, recognize_basic, BasicClass, BasicClassReport};
use crate::detect::{
    class_invariant_violations, search_2join, search_2join_either, two_join_violations, ParityCheck, TwoJoinSearch, TwoJoinSplit,
};
use crate::error::Error;
use crate::oracle::{alpha_bf, bf_cap, proper_2joins_bf};
use crate::trigraph::{classify_class_f, Trigraph, VertexSet, Weight};

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveOptions {
    /// At every decomposition step whose expansions fit the oracle cap,
    /// recompute all α values by exhaustive search and compare.
    pub verify_gadgets: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveStats {
    pub nodes: usize,
    pub leaves: usize,
    pub decompositions: usize,
    pub max_depth: usize,
    pub quadruples: u64,
    pub forcing_calls: u64,
    pub pair_reads: u64,
    pub detection_cache_hits: usize,
    pub gadget_checks: usize,
    pub gadget_mismatches: Vec<String>,
}

/// Tree of the recursion, mirroring the calls made.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "node", rename_all = "kebab-case")]
pub enum DecompositionTrace {
    Leaf {
        class: BasicClass,
        n: usize,
    },
    Decomposition {
        kind: DecompKind,
        split: TwoJoinSplit,
        n: usize,
        n_x: usize,
        n_y: usize,
        small_calls: usize,
        big_calls: usize,
        prelabel: PreLabel,
        /// Small-side calls in target order, then the big-side call.
        children: Vec<DecompositionTrace>,
    },
}

impl DecompositionTrace {
    /// Visits every node, parents first.
    pub fn walk<'a>(&'a self, f: &mut impl FnMut(&'a DecompositionTrace)) {
        f(self);
        if let DecompositionTrace::Decomposition { children, .. } = self {
            for c in children {
                c.walk(f);
            }
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SolveOutcome {
    pub alpha: Weight,
    /// A strong stable set of the expansion of weight `alpha`.
    pub stable_set: VertexSet,
    pub expansion: Expansion,
    pub labeling: Vec<ComponentLabel>,
    pub trace: DecompositionTrace,
    pub stats: SolveStats,
}

#[derive(Clone)]
enum Detection {
    Basic(BasicClassReport),
    Split(TwoJoinSplit),
    Outside(NotInClassReason),
}

struct NodeOut {
    alpha: Weight,
    exp: Expansion,
    set: VertexSet,
    labels: Vec<Label>,
    trace: DecompositionTrace,
}

struct Solver<'o> {
    opts: &'o SolveOptions,
    stats: SolveStats,
    detections: HashMap<Vec<i8>, Detection>,
    basics: HashMap<Vec<i8>, Option<BasicClassReport>>,
    path: Vec<PathStep>,
}

fn targets(kind: DecompKind) -> &'static [Target] {
    if kind.is_complement() {
        &[Target::A, Target::B, Target::X]
    } else {
        &[Target::Ac, Target::Bc, Target::C, Target::X]
    }
}

fn target_set(s: &TwoJoinSplit, target: Target) -> VertexSet {
    match target {
        Target::A => s.a1.clone(),
        Target::B => s.b1.clone(),
        Target::Ac => s.a1.union(&s.c1),
        Target::Bc => s.b1.union(&s.c1),
        Target::C => s.c1.clone(),
        Target::X => s.x1(),
    }
}

/// Orients the split so that side 1 is the smaller side, ties going to the
/// side holding the smaller vertex.
fn orient(s: TwoJoinSplit) -> TwoJoinSplit {
    let (x1, x2) = (s.x1(), s.x2());
    if x2.len() < x1.len() || (x2.len() == x1.len() && x2.first() < x1.first()) {
        s.swapped()
    } else {
        s
    }
}

fn set_weight(t: &Trigraph, set: &VertexSet) -> u128 {
    set.weight(t.weights())
}

impl<'o> Solver<'o> {
    fn new(opts: &'o SolveOptions) -> Self {
        Solver { opts, stats: SolveStats::default(), detections: HashMap::new(), basics: HashMap::new(), path: Vec::new() }
    }

    fn certificate(&self, reason: NotInClassReason, leaf: &Trigraph) -> Error {
        Error::NotInClass(Box::new(NotInClassCertificate { reason, path: self.path.clone(), leaf: leaf.clone() }))
    }

    fn basic(&mut self, t: &Trigraph) -> Option<BasicClassReport> {
        if let Some(r) = self.basics.get(t.structure()) {
            return r.clone();
        }
        let r = recognize_basic(t);
        self.basics.insert(t.structure().to_vec(), r.clone());
        r
    }

    fn detect(&mut self, t: &Trigraph) -> Detection {
        if let Some(d) = self.detections.get(t.structure()) {
            self.stats.detection_cache_hits += 1;
            return d.clone();
        }
        let d = self.detect_uncached(t);
        self.detections.insert(t.structure().to_vec(), d.clone());
        d
    }

    fn detect_uncached(&mut self, t: &Trigraph) -> Detection {
        if let Some(r) = self.basic(t) {
            return Detection::Basic(r);
        }
        let f = classify_class_f(t);
        if !f.in_class {
            let violations = f.violations.iter().map(|v| format!("{:?}: {}", v.vertices.as_slice(), v.reason)).collect();
            return Detection::Outside(NotInClassReason::ClassF { violations });
        }
        let (res, st) = search_2join_either(t);
        self.stats.quadruples += st.quadruples;
        self.stats.forcing_calls += st.forcing_calls;
        self.stats.pair_reads += st.pair_reads;
        match res {
            TwoJoinSearch::Found(s) => return Detection::Split(s),
            TwoJoinSearch::InvariantViolation { split, violations } => {
                return Detection::Outside(NotInClassReason::TwoJoinForm { split, violations })
            }
            TwoJoinSearch::ParityConflict { split, side1, side2 } => {
                return Detection::Outside(NotInClassReason::ParityConflict { split, side1, side2 })
            }
            TwoJoinSearch::None => {}
        }
        Detection::Outside(NotInClassReason::NoDecomposition)
    }

    fn node(&mut self, t: &Trigraph, comps: &[(LabeledComponent, PreLabel)], active: &[bool]) -> Result<NodeOut, Error> {
        self.stats.nodes += 1;
        self.stats.max_depth = self.stats.max_depth.max(self.path.len());
        match self.detect(t) {
            Detection::Basic(r) => self.leaf(t, comps, active, &r),
            Detection::Outside(reason) => Err(self.certificate(reason, t)),
            Detection::Split(s) => self.decompose(t, comps, active, orient(s)),
        }
    }

    fn leaf(
        &mut self,
        t: &Trigraph,
        comps: &[(LabeledComponent, PreLabel)],
        active: &[bool],
        report: &BasicClassReport,
    ) -> Result<NodeOut, Error> {
        self.stats.leaves += 1;
        let labels: Vec<Label> = comps
            .iter()
            .map(|(c, pre)| {
                let matching = report.is_matching_pair(c.a, c.b).unwrap_or(false);
                Label::new(*pre, LabelTag::for_class(report.class, matching))
            })
            .collect();
        let has_odd = comps.iter().any(|(_, p)| p.kind() == DecompKind::Odd);
        let attempts: Vec<Option<GadgetShape>> = if has_odd {
            vec![None, Some(GadgetShape::TwoClones), Some(GadgetShape::ClosedClone)]
        } else {
            vec![None]
        };
        let mut first_exp = None;
        for attempt in attempts {
            let labels: Vec<Label> = labels
                .iter()
                .map(|l| Label { gadget: attempt.unwrap_or(l.gadget), ..*l })
                .collect();
            let cls = component_labels(comps, &labels);
            let exp = expand_active(t, &cls, active)?;
            if let Some(r) = self.basic(&exp.trigraph) {
                let res = alpha_basic(&exp.trigraph, &r)?;
                return Ok(NodeOut {
                    alpha: res.value,
                    set: res.set,
                    exp,
                    labels,
                    trace: DecompositionTrace::Leaf { class: report.class, n: t.vertex_count() },
                });
            }
            first_exp.get_or_insert(exp);
        }
        let expansion = first_exp.expect("at least one attempt").trigraph;
        Err(self.certificate(NotInClassReason::ExpansionNotBasic { expansion }, t))
    }

    fn decompose(
        &mut self,
        t: &Trigraph,
        comps: &[(LabeledComponent, PreLabel)],
        active: &[bool],
        s: TwoJoinSplit,
    ) -> Result<NodeOut, Error> {
        self.stats.decompositions += 1;
        let kind = kind_of(&s);
        let bx = build_block(t, &s, BlockSide::First)?;
        let by = build_block(t, &s, BlockSide::Second)?;
        let n = t.vertex_count();
        let inv = |b: &Block| {
            let mut m = vec![usize::MAX; n];
            for (i, &v) in b.side_map.iter().enumerate() {
                m[v] = i;
            }
            m
        };
        let (inv_x, inv_y) = (inv(&bx), inv(&by));
        let (mut comps_x, mut comps_y, mut idx_x, mut idx_y) = (Vec::new(), Vec::new(), Vec::new(), Vec::new());
        for (i, (c, pre)) in comps.iter().enumerate() {
            if inv_x[c.a] != usize::MAX {
                comps_x.push((c.map(|v| inv_x[v]), *pre));
                idx_x.push(i);
            } else {
                comps_y.push((c.map(|v| inv_y[v]), *pre));
                idx_y.push(i);
            }
        }

        let mut small = Vec::new();
        for &target in targets(kind) {
            let set = target_set(&s, target);
            let act: Vec<bool> = (0..bx.trigraph.vertex_count())
                .map(|i| !bx.is_marker(i) && active[bx.side_map[i]] && set.contains(bx.side_map[i]))
                .collect();
            self.path.push(PathStep::Small { kind, target });
            let out = self.node(&bx.trigraph, &comps_x, &act)?;
            self.path.pop();
            small.push(out);
        }
        if small.iter().any(|o| o.labels != small[0].labels) {
            return Err(self.certificate(NotInClassReason::LabelMismatch, t));
        }
        let values: Vec<Weight> = small.iter().map(|o| o.alpha).collect();
        let pre = PreLabel::from_values(kind, &values);
        let violations = pre.violations();
        if !violations.is_empty() {
            return Err(self.certificate(NotInClassReason::Inequality { split: s, prelabel: pre, violations }, t));
        }

        let mut comps_big = comps_y.clone();
        comps_big.push((by.markers, pre));
        let act_y: Vec<bool> =
            (0..by.trigraph.vertex_count()).map(|i| by.is_marker(i) || active[by.side_map[i]]).collect();
        self.path.push(PathStep::Big { kind });
        let big = self.node(&by.trigraph, &comps_big, &act_y)?;
        self.path.pop();
        let alpha = recover_alpha(&pre, big.alpha);

        let x_labels = &small[small.len() - 1].labels;
        let mut labels = vec![None; comps.len()];
        for (k, &i) in idx_x.iter().enumerate() {
            labels[i] = Some(x_labels[k]);
        }
        for (k, &i) in idx_y.iter().enumerate() {
            labels[i] = Some(big.labels[k]);
        }
        let labels: Vec<Label> = labels.into_iter().map(|l| l.expect("every component is on one side")).collect();
        let exp = expand_active(t, &component_labels(comps, &labels), active)?;

        let set = back_map(&exp, alpha, &bx, &small, &by, &big)?;
        if self.opts.verify_gadgets {
            self.verify_gadget(&exp, alpha, &small, &big, &pre);
        }
        let (n_x, n_y) = (bx.trigraph.vertex_count(), by.trigraph.vertex_count());
        let small_calls = small.len();
        let mut children: Vec<DecompositionTrace> = small.into_iter().map(|o| o.trace).collect();
        children.push(big.trace);
        let trace = DecompositionTrace::Decomposition {
            kind,
            split: s,
            n,
            n_x,
            n_y,
            small_calls,
            big_calls: 1,
            prelabel: pre,
            children,
        };
        Ok(NodeOut { alpha, exp, set, labels, trace })
    }

    fn verify_gadget(&mut self, exp: &Expansion, alpha: Weight, small: &[NodeOut], big: &NodeOut, pre: &PreLabel) {
        let cap = bf_cap();
        let fits = exp.trigraph.vertex_count() <= cap
            && big.exp.trigraph.vertex_count() <= cap
            && small.iter().all(|o| o.exp.trigraph.vertex_count() <= cap);
        if !fits {
            return;
        }
        self.stats.gadget_checks += 1;
        let bf = |t: &Trigraph| alpha_bf(t).map(|r| r.0).unwrap_or(Weight::MAX);
        let whole = bf(&exp.trigraph);
        let values: Vec<Weight> = small.iter().map(|o| bf(&o.exp.trigraph)).collect();
        let pre_bf = PreLabel::from_values(pre.kind(), &values);
        let gadget = bf(&big.exp.trigraph);
        let mut problems = Vec::new();
        if pre_bf != *pre {
            problems.push(format!("prelabel {pre:?} but exhaustive {pre_bf:?}"));
        }
        if gadget != big.alpha {
            problems.push(format!("gadget alpha {} but exhaustive {gadget}", big.alpha));
        }
        if recover_alpha(&pre_bf, gadget) != whole || whole != alpha {
            problems.push(format!("recovered {} / solver {alpha} but exhaustive {whole}", recover_alpha(&pre_bf, gadget)));
        }
        if !problems.is_empty() {
            self.stats.gadget_mismatches.push(format!("{}: {}", pre.kind(), problems.join("; ")));
        }
    }
}

fn component_labels(comps: &[(LabeledComponent, PreLabel)], labels: &[Label]) -> Vec<ComponentLabel> {
    comps.iter().zip(labels).map(|((c, _), l)| ComponentLabel { component: *c, label: *l }).collect()
}

/// Maps a stable set of a block expansion into `exp`, dropping the block's
/// own markers (and their clones) and zero-weight vertices.
fn map_into(exp: &Expansion, block: &Block, child: &Expansion, set: &VertexSet) -> Result<VertexSet, Error> {
    let mut out = Vec::new();
    for v in set.iter() {
        if child.trigraph.weight(v) == 0 {
            continue;
        }
        let o = child.origin[v];
        if block.is_marker(o.base) {
            continue;
        }
        let base = block.side_map[o.base];
        let mapped = if o.prime { exp.prime_of(base) } else { exp.vertex_of(base) };
        out.push(mapped.ok_or_else(|| Error::Internal(format!("vertex {base} has no image in the expansion")))?);
    }
    Ok(out.into())
}

fn back_map(exp: &Expansion, alpha: Weight, bx: &Block, small: &[NodeOut], by: &Block, big: &NodeOut) -> Result<VertexSet, Error> {
    let e = &exp.trigraph;
    let y_part = map_into(exp, by, &big.exp, &big.set)?;
    let mut best: Option<(u128, VertexSet)> = None;
    let mut consider = |s: VertexSet| {
        if e.is_strong_stable(&s) {
            let w = set_weight(e, &s);
            if best.as_ref().map_or(true, |(bw, _)| w > *bw) {
                best = Some((w, s));
            }
        }
    };
    consider(y_part.clone());
    for o in small {
        let x_part = map_into(exp, bx, &o.exp, &o.set)?;
        consider(y_part.union(&x_part));
        consider(x_part);
    }
    match best {
        Some((w, s)) if w == alpha as u128 => Ok(s),
        Some((w, _)) => Err(Error::Internal(format!("back-mapped stable set has weight {w}, expected {alpha}"))),
        None => Err(Error::Internal("no stable back-mapped candidate".into())),
    }
}

/// Solves `(t, components, prelabels)`: the maximum weight of a strong
/// stable set in the expansion, with a labeling extending the prelabels.
pub fn main_solve(t: &Trigraph, comps: &[(LabeledComponent, PreLabel)], opts: &SolveOptions) -> Result<SolveOutcome, Error> {
    for (c, pre) in comps {
        if let Some(msg) = c.shape_violation(t, pre.kind()) {
            return Err(Error::Contract(msg));
        }
        let v = pre.violations();
        if !v.is_empty() {
            return Err(Error::Contract(format!("prelabel violates {}", v.join("; "))));
        }
    }
    let mut solver = Solver::new(opts);
    let out = solver.node(t, comps, &vec![true; t.vertex_count()])?;
    if !out.exp.trigraph.is_strong_stable(&out.set) || set_weight(&out.exp.trigraph, &out.set) != out.alpha as u128 {
        return Err(Error::Internal("final stable set does not certify alpha".into()));
    }
    Ok(SolveOutcome {
        alpha: out.alpha,
        stable_set: out.set,
        expansion: out.exp,
        labeling: component_labels(comps, &out.labels),
        trace: out.trace,
        stats: solver.stats,
    })
}

/// Maximum weight of a strong stable set of `t`.
pub fn alpha(t: &Trigraph) -> Result<SolveOutcome, Error> {
    main_solve(t, &[], &SolveOptions::default())
}

/// A strong stable set of `t` of weight `outcome.alpha`. Uses the solver's
/// set when it certifies, and otherwise self-reduction through α queries.
pub fn extract_stable_set(t: &Trigraph, outcome: &SolveOutcome) -> Result<VertexSet, Error> {
    let s = &outcome.stable_set;
    let n = t.vertex_count();
    if s.iter().all(|v| v < n) && t.is_strong_stable(s) && set_weight(t, s) == outcome.alpha as u128 {
        return Ok(s.clone());
    }
    let mut allowed: VertexSet = t.all_vertices();
    let mut remaining = outcome.alpha;
    let mut chosen = Vec::new();
    for v in 0..n {
        if remaining == 0 {
            break;
        }
        if !allowed.contains(v) || t.weight(v) == 0 || t.weight(v) > remaining {
            continue;
        }
        let next: VertexSet = allowed.iter().filter(|&u| u != v && t.is_strongly_antiadjacent(u, v)).collect();
        let rest = alpha(&t.zero_outside(&next))?.alpha;
        if rest + t.weight(v) == remaining {
            chosen.push(v);
            remaining -= t.weight(v);
            allowed = next;
        }
    }
    let set = VertexSet::from(chosen);
    if remaining != 0 || !t.is_strong_stable(&set) {
        return Err(Error::Internal("self-reduction did not reach alpha".into()));
    }
    Ok(set)
}

/// Re-checks a certificate against its leaf. Exhaustive checks run when the
/// leaf fits the oracle cap; larger leaves are re-searched.
pub fn validate_certificate(cert: &NotInClassCertificate) -> Result<(), String> {
    let t = &cert.leaf;
    match &cert.reason {
        NotInClassReason::ClassF { .. } => {
            if recognize_basic(t).is_some() {
                return Err("leaf is basic".into());
            }
            if classify_class_f(t).in_class {
                return Err("leaf satisfies the switchable-component conditions".into());
            }
        }
        NotInClassReason::NoDecomposition => {
            if recognize_basic(t).is_some() {
                return Err("leaf is basic".into());
            }
            if t.vertex_count() <= bf_cap() {
                for (name, f) in [("leaf", t.clone()), ("complement of the leaf", t.complement())] {
                    let found = proper_2joins_bf(&f).map_err(|e| e.to_string())?;
                    if let Some(s) = found.first() {
                        return Err(format!("{name} has a proper 2-join with X1 = {}", s.x1()));
                    }
                }
            } else {
                for complemented in [false, true] {
                    if !matches!(search_2join(t, complemented).0, TwoJoinSearch::None) {
                        return Err("a 2-join search on the leaf succeeds".into());
                    }
                }
            }
        }
        NotInClassReason::TwoJoinForm { split, .. } => {
            let def = two_join_violations(t, split);
            if !def.is_empty() {
                return Err(format!("split is not a 2-join: {}", def.join("; ")));
            }
            if class_invariant_violations(t, split).is_empty() {
                return Err("split satisfies every class invariant".into());
            }
        }
        NotInClassReason::ParityConflict { split, .. } => {
            if !two_join_violations(t, split).is_empty() {
                return Err("split is not a 2-join".into());
            }
            if !matches!(split.parity_check(t), ParityCheck::Conflict { .. }) {
                return Err("path parities agree".into());
            }
        }
        NotInClassReason::Inequality { split, prelabel, .. } => {
            if !two_join_violations(t, split).is_empty() {
                return Err("split is not a 2-join".into());
            }
            if prelabel.violations().is_empty() {
                return Err("prelabel satisfies every inequality".into());
            }
        }
        NotInClassReason::ExpansionNotBasic { expansion } => {
            if recognize_basic(t).is_none() {
                return Err("leaf is not basic".into());
            }
            if recognize_basic(expansion).is_some() {
                return Err("expansion is basic".into());
            }
        }
        NotInClassReason::LabelMismatch => {}
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::berge::is_berge_small;
    use crate::oracle::has_bsp_bf;
    use crate::trigraph::cycle;
    use rand::{Rng, SeedableRng};

    #[test]
    fn small_cases() {
        let mut t = Trigraph::new(1);
        t.set_weight(0, 5);
        assert_eq!(alpha(&t).unwrap().alpha, 5);
        let c8 = cycle(8);
        let out = alpha(&c8).unwrap();
        assert_eq!(out.alpha, 4);
        let s = extract_stable_set(&c8, &out).unwrap();
        assert_eq!(s.len(), 4);
        assert!(c8.is_strong_stable(&s));
        let zero = cycle(8).with_weights(vec![0; 8]);
        assert_eq!(alpha(&zero).unwrap().alpha, 0);
    }

    #[test]
    fn doubling_weights_doubles_alpha() {
        let t = cycle(10).with_weights(vec![3, 1, 4, 1, 5, 9, 2, 6, 5, 3]);
        let a = alpha(&t).unwrap().alpha;
        let doubled = t.clone().with_weights(t.weights().iter().map(|w| 2 * w).collect());
        assert_eq!(alpha(&doubled).unwrap().alpha, 2 * a);
        assert_eq!(a, alpha_bf(&t).unwrap().0);
    }

    /// Long even hole with a pendant-free chord structure: decomposes.
    #[test]
    fn decomposes_and_matches_oracle() {
        let opts = SolveOptions { verify_gadgets: true };
        let mut decomposed = 0;
        for seed in 0..200 {
            let (t, _) = crate::io::generate(&crate::io::GeneratorSpec::new(seed, 13)).unwrap();
            let Ok(out) = main_solve(&t, &[], &opts) else { continue };
            assert_eq!(out.alpha, alpha_bf(&t).unwrap().0, "seed {seed}");
            assert!(out.stats.gadget_mismatches.is_empty(), "{:?}", out.stats.gadget_mismatches);
            let s = extract_stable_set(&t, &out).unwrap();
            assert_eq!(s.weight(t.weights()), out.alpha as u128);
            if matches!(out.trace, DecompositionTrace::Decomposition { .. }) {
                assert!(out.stats.gadget_checks > 0);
                decomposed += 1;
            }
        }
        assert!(decomposed >= 20, "only {decomposed} decompositions");
    }

    #[test]
    fn odd_hole_gives_valid_certificate() {
        let c7 = cycle(7);
        let err = alpha(&c7).unwrap_err();
        let cert = err.certificate().expect("certificate");
        validate_certificate(cert).unwrap();
        assert!(!is_berge_small(&c7).unwrap());
    }

    #[test]
    fn random_instances_exact_or_certified() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..120 {
            let n = rng.gen_range(1..=10);
            let mut t = crate::io::random_trigraph(&mut rng, n, 0.4, 0.05);
            for v in 0..n {
                t.set_weight(v, rng.gen_range(0..=10));
            }
            match alpha(&t) {
                Ok(out) => {
                    assert_eq!(out.alpha, alpha_bf(&t).unwrap().0, "{t:?}");
                    let s = extract_stable_set(&t, &out).unwrap();
                    assert!(t.is_strong_stable(&s));
                }
                Err(Error::NotInClass(cert)) => {
                    validate_certificate(&cert).unwrap();
                    let in_class = is_berge_small(&t).unwrap()
                        && classify_class_f(&t).in_class
                        && !has_bsp_bf(&t).unwrap();
                    assert!(!in_class, "certificate {} for an in-class input {t:?}", cert.reason);
                }
                Err(e) => panic!("{e} on {t:?}"),
            }
        }
    }
}
