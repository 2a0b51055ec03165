//! Finite verification suites.
//!
//! Every suite is a pure function from an algebra and a bound (weight box or
//! graph depth) to a [`Report`]. Inputs are visited in canonical order
//! (weight, then datum), so the counterexample recorded for a check is the
//! smallest one. Work is spread over threads with rayon; tallies are merged
//! in input order.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::crystal::{Crystal, CrystalElement, CrystalGraph, Op};
use crate::error::Result;
use crate::lusztig::{enumerate_data, weights_in_box, LusztigDatum, Partition};
use crate::polytope::DecoratedPolytope;
use crate::root_data::{AlgebraKind, Node, RootVector};
use crate::transition::{pruned_search, Side, Solver, Strategy};

/// Pass/fail counts for one property.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: u64,
    pub failed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl Check {
    fn new(name: &str) -> Self {
        Check {
            name: name.to_string(),
            passed: 0,
            failed: 0,
            counterexample: None,
        }
    }

    fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
            if self.counterexample.is_none() {
                self.counterexample = Some(witness());
            }
        }
    }

    /// Associative; keeps the earlier counterexample.
    fn merge(mut self, other: Check) -> Check {
        self.passed += other.passed;
        self.failed += other.failed;
        if self.counterexample.is_none() {
            self.counterexample = other.counterexample;
        }
        self
    }

    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

/// An ordered set of checks, addressed by name.
#[derive(Debug, Clone, Default)]
struct Tally(Vec<Check>);

impl Tally {
    fn record(&mut self, name: &str, ok: bool, witness: impl FnOnce() -> String) {
        let pos = match self.0.iter().position(|c| c.name == name) {
            Some(p) => p,
            None => {
                self.0.push(Check::new(name));
                self.0.len() - 1
            }
        };
        self.0[pos].record(ok, witness);
    }

    fn merge(mut self, other: Tally) -> Tally {
        for c in other.0 {
            match self.0.iter().position(|x| x.name == c.name) {
                Some(p) => {
                    let mine = std::mem::replace(&mut self.0[p], Check::new(""));
                    self.0[p] = mine.merge(c);
                }
                None => self.0.push(c),
            }
        }
        self
    }

    /// Makes sure every named check appears, even if nothing reached it,
    /// and puts the named checks first in the given order.
    fn declare(mut self, names: &[&str]) -> Tally {
        for &n in names {
            if !self.0.iter().any(|c| c.name == n) {
                self.0.push(Check::new(n));
            }
        }
        self.0.sort_by_key(|c| {
            names
                .iter()
                .position(|&n| n == c.name)
                .unwrap_or(names.len())
        });
        self
    }
}

/// Per-weight summary of a uniqueness sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightCount {
    pub weight: [i64; 2],
    pub data: usize,
    /// Largest number of MV completions found for any datum of this weight,
    /// over both sides. 1 when the weight passes.
    pub max_solutions: usize,
    pub min_solutions: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub suite: String,
    pub algebra: AlgebraKind,
    pub bound: String,
    pub checks: Vec<Check>,
    /// Checks recorded for documentation only; they do not affect the verdict.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub observations: Vec<Check>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub weights: Vec<WeightCount>,
}

impl Report {
    fn new(suite: &str, kind: AlgebraKind, bound: String, tally: Tally) -> Self {
        Report {
            suite: suite.to_string(),
            algebra: kind,
            bound,
            checks: tally.0,
            observations: Vec::new(),
            weights: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::ok)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks
            .iter()
            .chain(&self.observations)
            .find(|c| c.name == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        writeln!(
            f,
            "{verdict} {} [{} {}]",
            self.suite, self.algebra, self.bound
        )?;
        let width = self
            .checks
            .iter()
            .chain(&self.observations)
            .map(|c| c.name.chars().count())
            .max()
            .unwrap_or(0);
        for c in &self.checks {
            let mark = if c.ok() { "ok  " } else { "FAIL" };
            writeln!(
                f,
                "  {mark} {:<width$} {:>8} passed {:>6} failed",
                c.name, c.passed, c.failed
            )?;
            if let Some(w) = &c.counterexample {
                writeln!(f, "       first counterexample: {w}")?;
            }
        }
        for c in &self.observations {
            writeln!(
                f,
                "  note {:<width$} {:>8} hold   {:>6} fail",
                c.name, c.passed, c.failed
            )?;
            if let Some(w) = &c.counterexample {
                writeln!(f, "       first counterexample: {w}")?;
            }
        }
        Ok(())
    }
}

/// All data of one weight with the MV relation between them:
/// `mv[i][j]` is whether `(left = data[i], right = data[j])` is MV.
struct WeightTable {
    weight: RootVector,
    data: Vec<LusztigDatum>,
    mv: Vec<Vec<bool>>,
}

impl WeightTable {
    fn build(kind: AlgebraKind, weight: RootVector) -> Self {
        let data = enumerate_data(kind, weight);
        let mv = data
            .iter()
            .map(|l| {
                data.iter()
                    .map(|r| {
                        DecoratedPolytope::new(l.clone(), r.clone())
                            .expect("same weight")
                            .is_mv()
                            .passes()
                    })
                    .collect()
            })
            .collect();
        WeightTable { weight, data, mv }
    }

    fn right_partners(&self, i: usize) -> Vec<usize> {
        (0..self.data.len()).filter(|&j| self.mv[i][j]).collect()
    }

    fn left_partners(&self, j: usize) -> Vec<usize> {
        (0..self.data.len()).filter(|&i| self.mv[i][j]).collect()
    }
}

fn tables(kind: AlgebraKind, bound: RootVector) -> Vec<WeightTable> {
    weights_in_box(bound)
        .into_par_iter()
        .map(|w| WeightTable::build(kind, w))
        .collect()
}

fn box_label(bound: RootVector) -> String {
    format!("weights <= ({}, {})", bound.a, bound.b)
}

/// Every datum of weight `≤ bound` has exactly one MV completion on each
/// side, by brute force over all data of that weight.
pub fn check_uniqueness(kind: AlgebraKind, bound: RootVector) -> Report {
    const LEFT: &str = "unique right completion of each left datum";
    const RIGHT: &str = "unique left completion of each right datum";
    let tables = tables(kind, bound);
    let mut weights = Vec::new();
    let tally = tables
        .iter()
        .map(|t| {
            let mut tally = Tally::default();
            let mut counts = Vec::new();
            for (i, d) in t.data.iter().enumerate() {
                let r = t.right_partners(i).len();
                let l = t.left_partners(i).len();
                counts.extend([r, l]);
                tally.record(LEFT, r == 1, || format!("left {d}: {r} completions"));
                tally.record(RIGHT, l == 1, || format!("right {d}: {l} completions"));
            }
            weights.push(WeightCount {
                weight: [t.weight.a, t.weight.b],
                data: t.data.len(),
                max_solutions: counts.iter().copied().max().unwrap_or(0),
                min_solutions: counts.iter().copied().min().unwrap_or(0),
            });
            tally
        })
        .fold(Tally::default(), Tally::merge)
        .declare(&[LEFT, RIGHT]);
    let mut report = Report::new("uniqueness", kind, box_label(bound), tally);
    report.weights = weights;
    report
}

/// The pruned search (with and without the imaginary shortcut) agrees with
/// brute force on every datum of weight `≤ bound`, both sides; the two
/// transition maps are mutually inverse and weight preserving.
pub fn check_solver_equivalence(kind: AlgebraKind, bound: RootVector) -> Report {
    const SEARCH: &str = "pruned search finds exactly the brute-force completion";
    const FAST: &str = "default solver equals brute force";
    const INVERSE: &str = "transition maps are mutually inverse";
    const WEIGHT: &str = "transition preserves weight";
    let fast = Solver::fast();
    let tally = tables(kind, bound)
        .par_iter()
        .map(|t| {
            let mut tally = Tally::default();
            for (i, d) in t.data.iter().enumerate() {
                for side in [Side::Left, Side::Right] {
                    let partners = match side {
                        Side::Left => t.right_partners(i),
                        Side::Right => t.left_partners(i),
                    };
                    let expected: Vec<LusztigDatum> =
                        partners.iter().map(|&j| t.data[j].clone()).collect();
                    let found = pruned_search(side, d);
                    tally.record(SEARCH, found == expected, || {
                        format!(
                            "{side:?} {d}: search {} vs brute force {}",
                            found.len(),
                            expected.len()
                        )
                    });
                    let completed = fast.complete(side, d);
                    let other = completed.as_ref().ok().map(|p| match side {
                        Side::Left => p.right().clone(),
                        Side::Right => p.left().clone(),
                    });
                    tally.record(
                        FAST,
                        expected.len() == 1 && other.as_ref() == expected.first(),
                        || format!("{side:?} {d}: {completed:?}"),
                    );
                    if let Some(other) = other {
                        tally.record(WEIGHT, other.weight() == d.weight(), || {
                            format!("{side:?} {d}")
                        });
                        let back = fast
                            .complete(side.other(), &other)
                            .ok()
                            .map(|p| match side {
                                Side::Left => p.left().clone(),
                                Side::Right => p.right().clone(),
                            });
                        tally.record(INVERSE, back.as_ref() == Some(d), || {
                            format!("{side:?} {d} -> {other}")
                        });
                    }
                }
            }
            tally
        })
        .reduce(Tally::default, Tally::merge)
        .declare(&[SEARCH, FAST, INVERSE, WEIGHT]);
    Report::new("solver-equivalence", kind, box_label(bound), tally)
}

/// Geometric properties of every MV polytope of weight `≤ bound`: the
/// side-swapped pair is MV, the polygon is convex, the truncated diagonal
/// scan agrees with a scan ten labels further, and the part size equals
/// the width at the δ-edges.
pub fn check_polytope_properties(kind: AlgebraKind, bound: RootVector) -> Report {
    const SWAP: &str = "side-swapped MV polytope is MV";
    const CONVEX: &str = "MV polytope is convex";
    const ANY_CONVEX: &str = "every pseudo-Weyl polytope is convex";
    const TRUNC: &str = "truncated scan equals extended scan";
    let tally = tables(kind, bound)
        .par_iter()
        .map(|t| {
            let mut tally = Tally::default();
            for (i, l) in t.data.iter().enumerate() {
                for (j, r) in t.data.iter().enumerate() {
                    let poly = DecoratedPolytope::new(l.clone(), r.clone()).expect("same weight");
                    let extended = poly.check_mv_through(poly.truncation() + 10).passes();
                    tally.record(TRUNC, extended == t.mv[i][j], || poly.to_string());
                    tally.record(ANY_CONVEX, poly.is_convex(), || poly.to_string());
                    if t.mv[i][j] {
                        tally.record(SWAP, t.mv[j][i], || poly.to_string());
                        tally.record(CONVEX, poly.is_convex(), || poly.to_string());
                    }
                }
            }
            tally
        })
        .reduce(Tally::default, Tally::merge)
        .declare(&[SWAP, CONVEX, ANY_CONVEX, TRUNC]);
    Report::new("polytope-properties", kind, box_label(bound), tally)
}

/// Crystal graph with a non-shortcut solver, nodes in canonical order.
fn canonical_graph(
    kind: AlgebraKind,
    depth: u32,
) -> Result<(Crystal, CrystalGraph, Vec<CrystalElement>)> {
    let crystal = Crystal::with_solver(kind, Solver::new(Strategy::Pruned));
    let graph = crystal.graph(depth)?;
    let nodes = graph
        .canonical_order()
        .into_iter()
        .map(|i| graph.nodes[i].clone())
        .collect();
    Ok((crystal, graph, nodes))
}

fn depth_label(depth: u32) -> String {
    format!("depth <= {depth}")
}

fn par_nodes(
    nodes: &[CrystalElement],
    f: impl Fn(&CrystalElement, &mut Tally) -> Result<()> + Sync,
) -> Result<Tally> {
    nodes
        .par_iter()
        .map(|b| {
            let mut t = Tally::default();
            f(b, &mut t).map(|_| t)
        })
        .try_reduce(Tally::default, |a, b| Ok(a.merge(b)))
}

/// `σᵢ` computed purely from crystal operators: `(f̃ᵢ*)^max ẽᵢ^N b` with
/// `N = max(0, εᵢ*(b)) + extra`, for `φᵢ(b) = 0`.
pub fn saito_by_operators(
    c: &Crystal,
    i: Node,
    b: &CrystalElement,
    extra: u32,
) -> Result<CrystalElement> {
    let n = c.eps_star(i, b).max(0) as u32 + extra;
    let mut x = b.clone();
    for _ in 0..n {
        x = c.e(i, &x)?;
    }
    c.lower_max(&x, |y| c.f_star(i, y))
}

/// `σᵢ*` from operators: `f̃ᵢ^max (ẽᵢ*)^N b` with `N = max(0, εᵢ(b)) + extra`,
/// for `φᵢ*(b) = 0`.
pub fn saito_star_by_operators(
    c: &Crystal,
    i: Node,
    b: &CrystalElement,
    extra: u32,
) -> Result<CrystalElement> {
    let n = c.eps(i, b).max(0) as u32 + extra;
    let mut x = b.clone();
    for _ in 0..n {
        x = c.e_star(i, &x)?;
    }
    c.lower_max(&x, |y| c.f(i, y))
}

/// The characterization axioms (W), (C1)–(C4), (S1)–(S4) and (I) on the
/// crystal graph. Saito reflections are computed from crystal operators
/// only, so the (S) axioms are not tautological.
pub fn check_axioms(kind: AlgebraKind, depth: u32, max_imaginary: u32) -> Result<Report> {
    const NAMES: [&str; 10] = ["W", "C1", "C2", "C3", "C4", "S1", "S2", "S3", "S4", "I"];
    let (c, graph, nodes) = canonical_graph(kind, depth)?;

    // Weight along the breadth-first tree: lowest has weight 0 and every
    // raising operator adds its simple root.
    let mut path_weight = vec![None; graph.len()];
    path_weight[0] = Some(RootVector::ZERO);
    let mut tally = Tally::default();
    for e in &graph.edges {
        let root = match e.op {
            Op::E(i) | Op::EStar(i) => i.simple_root(),
            _ => unreachable!("graph edges are raising operators"),
        };
        let src = path_weight[e.from].expect("edges leave discovered nodes");
        let want = src + root;
        match path_weight[e.to] {
            None => path_weight[e.to] = Some(want),
            Some(w) => tally.record("W", w == want, || {
                format!("edge {} into {}", e.op, graph.nodes[e.to])
            }),
        }
    }
    for (idx, b) in graph.nodes.iter().enumerate() {
        let w = path_weight[idx].expect("all nodes reached");
        tally.record(
            "W",
            w == b.left().weight() && w == b.right().weight(),
            || b.to_string(),
        );
    }

    let per_node = par_nodes(&nodes, |b, t| {
        let bump = |d: &LusztigDatum, i: Node| d.with_simple_mult(i, d.simple_mult(i) + 1);
        let x = c.e(Node::Zero, b)?;
        t.record("C1", x.right() == &bump(b.right(), Node::Zero), || {
            b.to_string()
        });
        let x = c.e(Node::One, b)?;
        t.record("C2", x.left() == &bump(b.left(), Node::One), || {
            b.to_string()
        });
        let x = c.e_star(Node::Zero, b)?;
        t.record("C3", x.left() == &bump(b.left(), Node::Zero), || {
            b.to_string()
        });
        let x = c.e_star(Node::One, b)?;
        t.record("C4", x.right() == &bump(b.right(), Node::One), || {
            b.to_string()
        });

        if c.phi(Node::Zero, b) == 0 {
            let s = saito_by_operators(&c, Node::Zero, b, 0)?;
            t.record("S1", s.left() == &b.right().twist_s(Node::Zero)?, || {
                b.to_string()
            });
        }
        if c.phi(Node::One, b) == 0 {
            let s = saito_by_operators(&c, Node::One, b, 0)?;
            t.record("S2", s.right() == &b.left().twist_s(Node::One)?, || {
                b.to_string()
            });
        }
        if c.phi_star(Node::Zero, b) == 0 {
            let s = saito_star_by_operators(&c, Node::Zero, b, 0)?;
            t.record("S3", s.right() == &b.left().twist_s(Node::Zero)?, || {
                b.to_string()
            });
        }
        if c.phi_star(Node::One, b) == 0 {
            let s = saito_star_by_operators(&c, Node::One, b, 0)?;
            t.record("S4", s.left() == &b.right().twist_s(Node::One)?, || {
                b.to_string()
            });
        }

        let lambda = b.left().delta();
        if b.left().is_purely_imaginary() && !lambda.is_empty() && lambda.size() <= max_imaginary {
            let want = LusztigDatum::trapezoid(kind, lambda);
            t.record("I", b.right() == &want, || {
                format!("{b}, expected right {want}")
            });
        }
        Ok(())
    })?;
    let tally = tally.merge(per_node).declare(&NAMES);
    Ok(Report::new("axioms", kind, depth_label(depth), tally))
}

/// The Kashiwara involution is negation up to translation: the vertices of
/// `b*` are `wt(b) − v` for the vertices `v` of `b`.
pub fn check_star_negation(kind: AlgebraKind, depth: u32) -> Result<Report> {
    const NEG: &str = "vertices of star(b) are wt(b) - vertices of b";
    const DECOR: &str = "delta decorations swap sides";
    const MV: &str = "star(b) is MV";
    const INVOL: &str = "star is an involution";
    const INTERTWINE: &str = "star(e_i(star(b))) = e_i*(b)";
    let (c, _, nodes) = canonical_graph(kind, depth)?;
    let tally = par_nodes(&nodes, |b, t| {
        let s = c.star(b);
        let w = b.weight();
        let mut negated: Vec<RootVector> = b
            .polytope()
            .vertex_multiset()
            .into_iter()
            .map(|v| w - v)
            .collect();
        negated.sort();
        t.record(NEG, s.polytope().vertex_multiset() == negated, || {
            b.to_string()
        });
        t.record(
            DECOR,
            s.left().delta() == b.right().delta() && s.right().delta() == b.left().delta(),
            || b.to_string(),
        );
        t.record(MV, s.polytope().is_mv().passes(), || b.to_string());
        t.record(INVOL, &c.star(&s) == b, || b.to_string());
        for i in Node::ALL {
            let lhs = c.star(&c.e(i, &s)?);
            t.record(INTERTWINE, lhs == c.e_star(i, b)?, || format!("i={i}, {b}"));
        }
        Ok(())
    })?
    .declare(&[NEG, DECOR, MV, INVOL, INTERTWINE]);
    Ok(Report::new(
        "star-negation",
        kind,
        depth_label(depth),
        tally,
    ))
}

/// Operator formulas for the Saito reflections against their definitions.
///
/// Checked: for `φᵢ(b) = 0`, `σᵢ(b) = (f̃ᵢ*)^max ẽᵢ^N b` for every
/// `N ∈ [max(0, εᵢ*(b)), … + slack]`; dually for `σᵢ*` when `φᵢ*(b) = 0`.
/// Also reported, without affecting the verdict, is the opposite pairing
/// `σᵢ(b) = f̃ᵢ^max (ẽᵢ*)^N b` on elements with `φᵢ(b) = φᵢ*(b) = 0`.
pub fn check_saito_formulas(kind: AlgebraKind, depth: u32, slack: u32) -> Result<Report> {
    const FWD: &str = "saito_i = (f_i*)^max e_i^N when phi_i = 0";
    const DUAL: &str = "saito*_i = f_i^max (e_i*)^N when phi*_i = 0";
    const WT: &str = "wt(saito_i(b)) = s_i wt(b)";
    const INV: &str = "saito*_i(saito_i(b)) = b";
    const OPPOSITE: &str = "opposite pairing: saito_i = f_i^max (e_i*)^N";
    let (c, _, nodes) = canonical_graph(kind, depth)?;
    let tally = par_nodes(&nodes, |b, t| {
        for i in Node::ALL {
            if c.phi(i, b) == 0 {
                let s = c.saito(i, b)?;
                for extra in 0..=slack {
                    let via_ops = saito_by_operators(&c, i, b, extra)?;
                    t.record(FWD, via_ops == s, || {
                        format!("i={i}, N=threshold+{extra}, {b}")
                    });
                }
                t.record(
                    WT,
                    s.weight() == kind.simple_reflection(i, b.weight()),
                    || format!("i={i}, {b}"),
                );
                t.record(INV, &c.saito_star(i, &s)? == b, || format!("i={i}, {b}"));
                if c.phi_star(i, b) == 0 {
                    let other = saito_star_by_operators(&c, i, b, 0)?;
                    t.record(OPPOSITE, other == s, || {
                        format!("i={i}, {b}: got {other}, saito gives {s}")
                    });
                }
            }
            if c.phi_star(i, b) == 0 {
                let s = c.saito_star(i, b)?;
                for extra in 0..=slack {
                    let via_ops = saito_star_by_operators(&c, i, b, extra)?;
                    t.record(DUAL, via_ops == s, || {
                        format!("i={i}, N=threshold+{extra}, {b}")
                    });
                }
            }
        }
        Ok(())
    })?
    .declare(&[FWD, DUAL, WT, INV, OPPOSITE]);
    let (observations, checks): (Vec<Check>, Vec<Check>) =
        tally.0.into_iter().partition(|c| c.name == OPPOSITE);
    let mut report = Report::new(
        "saito-formulas",
        kind,
        format!("{}, slack {slack}", depth_label(depth)),
        Tally(checks),
    );
    report.observations = observations;
    Ok(report)
}

/// Crystal axioms of `B(−∞)` on the generated graph, together with the
/// bicrystal conditions relating `ẽᵢ` and `ẽᵢ*` through the gap
/// `φᵢ + φᵢ* − ⟨hᵢ, wt⟩`: it is nonnegative, `ẽᵢ = ẽᵢ*` when it is 0, each
/// operator preserves the other's `φ` when it is at least 1, and the two
/// commute when it is at least 2.
///
/// Also reported, without affecting the verdict, is the stronger claim that
/// `ẽᵢ` and `ẽᵢ*` commute whenever `φᵢ` and `φᵢ*` are both positive. It
/// fails on elements with gap 1.
pub fn check_crystal_axioms(kind: AlgebraKind, depth: u32) -> Result<Report> {
    const LOWEST: &str = "unique lowest element";
    const FE: &str = "f_i(e_i(b)) = b";
    const EF: &str = "e_i(f_i(b)) = b";
    const FE_STAR: &str = "f_i*(e_i*(b)) = b";
    const EF_STAR: &str = "e_i*(f_i*(b)) = b";
    const WT: &str = "wt(e_i(b)) = wt(b) + alpha_i";
    const WT_STAR: &str = "wt(e_i*(b)) = wt(b) + alpha_i";
    const PHI: &str = "phi_i = length of f_i-string";
    const PHI_STAR: &str = "phi*_i = length of f_i*-string";
    const GAP: &str = "phi_i + phi*_i - <h_i, wt> >= 0";
    const COINCIDE: &str = "e_i = e_i* when the gap is 0";
    const STABLE: &str = "e_i keeps phi*_i, e_i* keeps phi_i when the gap is >= 1";
    const COMMUTE: &str = "e_i, e_i* commute when the gap is >= 2";
    const BOTH_POSITIVE: &str = "e_i, e_i* commute when phi_i, phi*_i > 0";
    const TAU: &str = "tau is an involutive automorphism";
    let (c, _, nodes) = canonical_graph(kind, depth)?;

    let mut tally = Tally::default();
    let mut lowest = Vec::new();
    for b in &nodes {
        if c.f(Node::Zero, b)?.is_none() && c.f(Node::One, b)?.is_none() {
            lowest.push(b);
        }
    }
    tally.record(
        LOWEST,
        lowest.len() == 1 && lowest[0] == &c.lowest(),
        || format!("{} elements with f_0 = f_1 = 0", lowest.len()),
    );

    let per_node = par_nodes(&nodes, |b, t| {
        for i in Node::ALL {
            let up = c.e(i, b)?;
            t.record(FE, c.f(i, &up)?.as_ref() == Some(b), || {
                format!("i={i}, {b}")
            });
            t.record(WT, up.weight() == b.weight() + i.simple_root(), || {
                format!("i={i}, {b}")
            });
            if let Some(down) = c.f(i, b)? {
                t.record(EF, &c.e(i, &down)? == b, || format!("i={i}, {b}"));
            }
            let up_star = c.e_star(i, b)?;
            t.record(FE_STAR, c.f_star(i, &up_star)?.as_ref() == Some(b), || {
                format!("i={i}, {b}")
            });
            t.record(
                WT_STAR,
                up_star.weight() == b.weight() + i.simple_root(),
                || format!("i={i}, {b}"),
            );
            if let Some(down) = c.f_star(i, b)? {
                t.record(EF_STAR, &c.e_star(i, &down)? == b, || format!("i={i}, {b}"));
            }
            t.record(
                PHI,
                c.string_length(b, |x| c.f(i, x))? == c.phi(i, b),
                || format!("i={i}, {b}"),
            );
            t.record(
                PHI_STAR,
                c.string_length(b, |x| c.f_star(i, x))? == c.phi_star(i, b),
                || format!("i={i}, {b}"),
            );
            let gap = i64::from(c.phi(i, b)) + i64::from(c.phi_star(i, b))
                - kind.cartan_pair(i, b.weight());
            t.record(GAP, gap >= 0, || format!("i={i}, gap {gap}, {b}"));
            if gap == 0 {
                t.record(COINCIDE, up == up_star, || format!("i={i}, {b}"));
            } else {
                let ok =
                    c.phi_star(i, &up) == c.phi_star(i, b) && c.phi(i, &up_star) == c.phi(i, b);
                t.record(STABLE, ok, || format!("i={i}, gap {gap}, {b}"));
            }
            let commute = c.e(i, &up_star)? == c.e_star(i, &up)?;
            if gap >= 2 {
                t.record(COMMUTE, commute, || format!("i={i}, gap {gap}, {b}"));
            }
            if c.phi(i, b) > 0 && c.phi_star(i, b) > 0 {
                t.record(BOTH_POSITIVE, commute, || format!("i={i}, gap {gap}, {b}"));
            }
        }
        if kind == AlgebraKind::Sl2Hat {
            let tb = c.tau(b)?;
            let ok = tb.polytope().is_mv().passes()
                && c.tau(&tb)? == *b
                && c.tau(&c.e(Node::Zero, &tb)?)? == c.e(Node::One, b)?
                && c.tau(&c.star(b))? == c.star(&tb);
            t.record(TAU, ok, || b.to_string());
        }
        Ok(())
    })?;
    let mut names = vec![
        LOWEST, FE, EF, FE_STAR, EF_STAR, WT, WT_STAR, PHI, PHI_STAR, GAP, COINCIDE, STABLE,
        COMMUTE,
    ];
    if kind == AlgebraKind::Sl2Hat {
        names.push(TAU);
    }
    let tally = tally
        .merge(per_node)
        .declare(&names)
        .declare(&[BOTH_POSITIVE]);
    let (observations, checks): (Vec<Check>, Vec<Check>) =
        tally.0.into_iter().partition(|c| c.name == BOTH_POSITIVE);
    let mut report = Report::new("crystal-axioms", kind, depth_label(depth), Tally(checks));
    report.observations = observations;
    Ok(report)
}

/// The imaginary-left completions: `{δ: λ}` completes to the trapezoid for
/// every `λ` with `|λ| ≤ max_size`, under both the brute-force and the
/// default solver.
pub fn check_imaginary_family(kind: AlgebraKind, max_size: u32) -> Result<Report> {
    const ORACLE: &str = "brute force completes {d: lambda} to the trapezoid";
    const FAST: &str = "default solver completes {d: lambda} to the trapezoid";
    const MIRROR: &str = "trapezoid on the right completes to {d: lambda} on the left";
    let oracle = Solver::oracle();
    let fast = Solver::fast();
    let mut tally = Tally::default();
    for n in 1..=max_size {
        for lambda in Partition::all(n) {
            let left = LusztigDatum::imaginary(kind, lambda.clone());
            let want = LusztigDatum::trapezoid(kind, &lambda);
            tally.record(ORACLE, oracle.left_to_right(&left)? == want, || {
                lambda.to_string()
            });
            tally.record(FAST, fast.left_to_right(&left)? == want, || {
                lambda.to_string()
            });
            tally.record(MIRROR, oracle.right_to_left(&want)? == left, || {
                lambda.to_string()
            });
        }
    }
    let tally = tally.declare(&[ORACLE, FAST, MIRROR]);
    Ok(Report::new(
        "imaginary-family",
        kind,
        format!("|lambda| <= {max_size}"),
        tally,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use AlgebraKind::*;

    #[test]
    fn small_uniqueness() {
        let r = check_uniqueness(Sl2Hat, RootVector::new(2, 2));
        assert!(r.passed(), "{r}");
        assert!(r
            .weights
            .iter()
            .all(|w| w.max_solutions == 1 && w.min_solutions == 1));
        let r = check_uniqueness(A22, RootVector::ZERO);
        assert!(r.passed());
        assert_eq!(
            r.check("unique right completion of each left datum")
                .unwrap()
                .passed,
            1
        );
        assert!(check_uniqueness(A22, RootVector::new(2, 4)).passed());
    }

    #[test]
    fn both_positive_commutation_fails_at_gap_one() {
        let r = check_crystal_axioms(Sl2Hat, 6).unwrap();
        assert!(r.passed(), "{r}");
        let obs = r.check("e_i, e_i* commute when phi_i, phi*_i > 0").unwrap();
        assert!(obs.failed > 0);
        assert!(obs.counterexample.as_ref().unwrap().contains("gap 1,"));
        assert!(
            r.check("e_i, e_i* commute when the gap is >= 2")
                .unwrap()
                .passed
                > 0
        );
    }

    #[test]
    fn depth_zero_is_vacuous() {
        for kind in AlgebraKind::ALL {
            let r = check_axioms(kind, 0, 6).unwrap();
            assert!(r.passed(), "{r}");
            assert_eq!(r.check("S1").unwrap().passed, 1);
            assert_eq!(r.check("I").unwrap().passed, 0);
        }
    }

    #[test]
    fn opposite_pairing_fails_first_at_e1_lowest() {
        let r = check_saito_formulas(Sl2Hat, 3, 2).unwrap();
        assert!(r.passed(), "{r}");
        let opp = r
            .check("opposite pairing: saito_i = f_i^max (e_i*)^N")
            .unwrap();
        assert!(opp.failed > 0);
        let c = Crystal::new(Sl2Hat);
        let e1 = c.e(Node::One, &c.lowest()).unwrap();
        assert!(opp
            .counterexample
            .as_ref()
            .unwrap()
            .starts_with(&format!("i=0, {e1}:")));
    }

    #[test]
    fn report_renders() {
        let r = check_uniqueness(Sl2Hat, RootVector::new(1, 1));
        let text = r.to_string();
        assert!(text.starts_with("PASS uniqueness"));
        let json: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(json["algebra"], "sl2hat");
        assert_eq!(json["weights"].as_array().unwrap().len(), 4);
    }

    #[test]
    fn tally_keeps_first_counterexample() {
        let mut a = Tally::default();
        a.record("x", false, || "first".into());
        let mut b = Tally::default();
        b.record("x", false, || "second".into());
        b.record("y", true, || unreachable!());
        let m = a.merge(b);
        assert_eq!(m.0[0].counterexample.as_deref(), Some("first"));
        assert_eq!(m.0[0].failed, 2);
        assert_eq!(m.0[1].passed, 1);
    }
}
