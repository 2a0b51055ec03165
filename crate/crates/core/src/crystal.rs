//! The crystal `B(−∞)` realized on MV polytopes.
//!
//! `ẽ₀` and `ẽ₁` raise the α₀-entry of the right datum and the α₁-entry of
//! the left datum; the starred operators do the opposite sides. The
//! Kashiwara involution swaps the two data. Saito reflections twist one side
//! by `sᵢ` and re-complete the other.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::lusztig::LusztigDatum;
use crate::polytope::DecoratedPolytope;
use crate::root_data::{AlgebraKind, Node, RootVector};
use crate::transition::{Side, Solver};

/// An MV polytope, viewed as an element of `B(−∞)`.
///
/// Equality, ordering and hashing are by the (left, right) datum pair.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CrystalElement {
    polytope: DecoratedPolytope,
}

impl CrystalElement {
    /// Wraps a polytope, checking the MV conditions.
    pub fn from_polytope(polytope: DecoratedPolytope) -> Result<Self> {
        let verdict = polytope.is_mv();
        if !verdict.passes() {
            let list: Vec<String> = verdict.violations.iter().map(ToString::to_string).collect();
            return Err(Error::PreconditionViolated(format!(
                "not an MV polytope: {}",
                list.join(", ")
            )));
        }
        Ok(CrystalElement { polytope })
    }

    pub fn polytope(&self) -> &DecoratedPolytope {
        &self.polytope
    }

    pub fn left(&self) -> &LusztigDatum {
        self.polytope.left()
    }

    pub fn right(&self) -> &LusztigDatum {
        self.polytope.right()
    }

    pub fn kind(&self) -> AlgebraKind {
        self.polytope.kind()
    }

    pub fn weight(&self) -> RootVector {
        self.polytope.weight()
    }
}

impl fmt::Display for CrystalElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.polytope.fmt(f)
    }
}

/// One step of an operator word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Op {
    E(Node),
    F(Node),
    EStar(Node),
    FStar(Node),
    Saito(Node),
    SaitoStar(Node),
    Star,
    Tau,
}

impl Op {
    pub fn parse(token: &str) -> Option<Op> {
        let (body, starred) = match token.strip_suffix('*') {
            Some(b) => (b, true),
            None => (token, false),
        };
        match (body, starred) {
            ("star", false) => return Some(Op::Star),
            ("tau", false) => return Some(Op::Tau),
            _ => {}
        }
        let mut chars = body.chars();
        let head = chars.next()?;
        let node = match chars.as_str() {
            "0" => Node::Zero,
            "1" => Node::One,
            _ => return None,
        };
        Some(match (head, starred) {
            ('e', false) => Op::E(node),
            ('e', true) => Op::EStar(node),
            ('f', false) => Op::F(node),
            ('f', true) => Op::FStar(node),
            ('s', false) => Op::Saito(node),
            ('s', true) => Op::SaitoStar(node),
            _ => return None,
        })
    }

    /// The four raising operators used to generate the crystal graph.
    pub const RAISING: [Op; 4] = [
        Op::E(Node::Zero),
        Op::E(Node::One),
        Op::EStar(Node::Zero),
        Op::EStar(Node::One),
    ];
}

impl fmt::Display for Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Op::E(i) => write!(f, "e{i}"),
            Op::F(i) => write!(f, "f{i}"),
            Op::EStar(i) => write!(f, "e{i}*"),
            Op::FStar(i) => write!(f, "f{i}*"),
            Op::Saito(i) => write!(f, "s{i}"),
            Op::SaitoStar(i) => write!(f, "s{i}*"),
            Op::Star => write!(f, "star"),
            Op::Tau => write!(f, "tau"),
        }
    }
}

/// Crystal operators for one algebra, sharing a completion solver.
#[derive(Debug)]
pub struct Crystal {
    kind: AlgebraKind,
    solver: Solver,
}

impl Crystal {
    pub fn new(kind: AlgebraKind) -> Self {
        Crystal {
            kind,
            solver: Solver::fast(),
        }
    }

    pub fn with_solver(kind: AlgebraKind, solver: Solver) -> Self {
        Crystal { kind, solver }
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn solver(&self) -> &Solver {
        &self.solver
    }

    fn complete(&self, side: Side, datum: &LusztigDatum) -> Result<CrystalElement> {
        Ok(CrystalElement {
            polytope: self.solver.complete(side, datum)?,
        })
    }

    /// Element with the given left datum.
    pub fn from_left(&self, left: &LusztigDatum) -> Result<CrystalElement> {
        self.check_kind(left)?;
        self.complete(Side::Left, left)
    }

    /// Element with the given right datum.
    pub fn from_right(&self, right: &LusztigDatum) -> Result<CrystalElement> {
        self.check_kind(right)?;
        self.complete(Side::Right, right)
    }

    fn check_kind(&self, d: &LusztigDatum) -> Result<()> {
        if d.kind() != self.kind {
            return Err(Error::KindMismatch(self.kind, d.kind()));
        }
        Ok(())
    }

    /// The lowest element `b₀`: the zero polytope.
    pub fn lowest(&self) -> CrystalElement {
        CrystalElement {
            polytope: DecoratedPolytope::zero(self.kind),
        }
    }

    /// Side and node edited by `ẽᵢ` (or `ẽᵢ*` when `starred`).
    fn edit_site(i: Node, starred: bool) -> Side {
        match (i, starred) {
            (Node::Zero, false) | (Node::One, true) => Side::Right,
            (Node::One, false) | (Node::Zero, true) => Side::Left,
        }
    }

    fn datum_on(b: &CrystalElement, side: Side) -> &LusztigDatum {
        match side {
            Side::Left => b.left(),
            Side::Right => b.right(),
        }
    }

    fn shift(
        &self,
        b: &CrystalElement,
        i: Node,
        starred: bool,
        delta: i64,
    ) -> Result<Option<CrystalElement>> {
        let side = Self::edit_site(i, starred);
        let d = Self::datum_on(b, side);
        let m = i64::from(d.simple_mult(i)) + delta;
        if m < 0 {
            return Ok(None);
        }
        self.complete(side, &d.with_simple_mult(i, m as u32))
            .map(Some)
    }

    pub fn e(&self, i: Node, b: &CrystalElement) -> Result<CrystalElement> {
        Ok(self
            .shift(b, i, false, 1)?
            .expect("raising never leaves the crystal"))
    }

    /// `None` stands for `f̃ᵢ b = ∅`.
    pub fn f(&self, i: Node, b: &CrystalElement) -> Result<Option<CrystalElement>> {
        self.shift(b, i, false, -1)
    }

    pub fn e_star(&self, i: Node, b: &CrystalElement) -> Result<CrystalElement> {
        Ok(self
            .shift(b, i, true, 1)?
            .expect("raising never leaves the crystal"))
    }

    pub fn f_star(&self, i: Node, b: &CrystalElement) -> Result<Option<CrystalElement>> {
        self.shift(b, i, true, -1)
    }

    /// `φᵢ(b)`: the α₀-entry of the right datum (i = 0) or the α₁-entry of
    /// the left datum (i = 1).
    pub fn phi(&self, i: Node, b: &CrystalElement) -> u32 {
        Self::datum_on(b, Self::edit_site(i, false)).simple_mult(i)
    }

    pub fn phi_star(&self, i: Node, b: &CrystalElement) -> u32 {
        Self::datum_on(b, Self::edit_site(i, true)).simple_mult(i)
    }

    /// `εᵢ(b) = φᵢ(b) − ⟨αᵢ^∨, wt(b)⟩`.
    pub fn eps(&self, i: Node, b: &CrystalElement) -> i64 {
        i64::from(self.phi(i, b)) - self.kind.cartan_pair(i, b.weight())
    }

    pub fn eps_star(&self, i: Node, b: &CrystalElement) -> i64 {
        i64::from(self.phi_star(i, b)) - self.kind.cartan_pair(i, b.weight())
    }

    /// Kashiwara involution: `P_{b*} = −P_b`, i.e. the two data swap sides.
    pub fn star(&self, b: &CrystalElement) -> CrystalElement {
        CrystalElement {
            polytope: b.polytope.swapped(),
        }
    }

    /// Diagram automorphism of `ŝl₂`: data swap sides and families.
    pub fn tau(&self, b: &CrystalElement) -> Result<CrystalElement> {
        let left = b.right().twist_tau()?;
        let right = b.left().twist_tau()?;
        Ok(CrystalElement {
            polytope: DecoratedPolytope::new(left, right)?,
        })
    }

    /// Saito reflection `σᵢ`, defined when `φᵢ(b) = 0`.
    ///
    /// `σ₀`: left datum becomes `c^r ∘ s₀`; `σ₁`: right datum becomes `c^ℓ ∘ s₁`.
    pub fn saito(&self, i: Node, b: &CrystalElement) -> Result<CrystalElement> {
        if self.phi(i, b) != 0 {
            return Err(Error::PreconditionViolated(format!(
                "s{i} needs phi_{i} = 0, got {}",
                self.phi(i, b)
            )));
        }
        match i {
            Node::Zero => self.complete(Side::Left, &b.right().twist_s(i)?),
            Node::One => self.complete(Side::Right, &b.left().twist_s(i)?),
        }
    }

    /// Dual Saito reflection `σᵢ*`, defined when `φᵢ*(b) = 0`.
    ///
    /// `σ₀*`: right datum becomes `c^ℓ ∘ s₀`; `σ₁*`: left datum becomes `c^r ∘ s₁`.
    pub fn saito_star(&self, i: Node, b: &CrystalElement) -> Result<CrystalElement> {
        if self.phi_star(i, b) != 0 {
            return Err(Error::PreconditionViolated(format!(
                "s{i}* needs phi*_{i} = 0, got {}",
                self.phi_star(i, b)
            )));
        }
        match i {
            Node::Zero => self.complete(Side::Right, &b.left().twist_s(i)?),
            Node::One => self.complete(Side::Left, &b.right().twist_s(i)?),
        }
    }

    /// Applies `g` until it returns `∅`.
    pub fn lower_max(
        &self,
        b: &CrystalElement,
        g: impl Fn(&CrystalElement) -> Result<Option<CrystalElement>>,
    ) -> Result<CrystalElement> {
        let mut cur = b.clone();
        while let Some(next) = g(&cur)? {
            cur = next;
        }
        Ok(cur)
    }

    /// Number of times `g` applies before reaching `∅`.
    pub fn string_length(
        &self,
        b: &CrystalElement,
        g: impl Fn(&CrystalElement) -> Result<Option<CrystalElement>>,
    ) -> Result<u32> {
        let mut n = 0;
        let mut cur = b.clone();
        while let Some(next) = g(&cur)? {
            cur = next;
            n += 1;
        }
        Ok(n)
    }

    /// Applies one operator. `Ok(None)` means the result is `∅`.
    pub fn apply(&self, op: Op, b: &CrystalElement) -> Result<Option<CrystalElement>> {
        match op {
            Op::E(i) => self.e(i, b).map(Some),
            Op::F(i) => self.f(i, b),
            Op::EStar(i) => self.e_star(i, b).map(Some),
            Op::FStar(i) => self.f_star(i, b),
            Op::Saito(i) => self.saito(i, b).map(Some),
            Op::SaitoStar(i) => self.saito_star(i, b).map(Some),
            Op::Star => Ok(Some(self.star(b))),
            Op::Tau => self.tau(b).map(Some),
        }
    }

    /// Applies a word left to right.
    pub fn apply_word(
        &self,
        word: &[Op],
        start: &CrystalElement,
    ) -> std::result::Result<CrystalElement, WordError> {
        let mut cur = start.clone();
        for (index, &op) in word.iter().enumerate() {
            cur = match self.apply(op, &cur) {
                Ok(Some(next)) => next,
                Ok(None) => {
                    return Err(WordError {
                        index,
                        op,
                        error: None,
                    })
                }
                Err(error) => {
                    return Err(WordError {
                        index,
                        op,
                        error: Some(error),
                    })
                }
            };
        }
        Ok(cur)
    }

    /// Everything reachable from `b₀` by at most `depth` raising steps, with
    /// labeled edges.
    pub fn graph(&self, depth: u32) -> Result<CrystalGraph> {
        let mut nodes = vec![self.lowest()];
        let mut depths = vec![0];
        let mut index: HashMap<CrystalElement, usize> = HashMap::from([(self.lowest(), 0)]);
        let mut edges = Vec::new();
        let mut queue = VecDeque::from([0usize]);
        while let Some(src) = queue.pop_front() {
            if depths[src] == depth {
                continue;
            }
            for op in Op::RAISING {
                let next = self
                    .apply(op, &nodes[src])?
                    .expect("raising operators are total");
                let dst = match index.get(&next) {
                    Some(&j) => j,
                    None => {
                        let j = nodes.len();
                        index.insert(next.clone(), j);
                        nodes.push(next);
                        depths.push(depths[src] + 1);
                        queue.push_back(j);
                        j
                    }
                };
                edges.push(Edge {
                    from: src,
                    to: dst,
                    op,
                });
            }
        }
        Ok(CrystalGraph {
            kind: self.kind,
            depth,
            nodes,
            depths,
            edges,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordError {
    pub index: usize,
    pub op: Op,
    /// `None` when the operator produced `∅`.
    pub error: Option<Error>,
}

impl fmt::Display for WordError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.error {
            None => write!(
                f,
                "token {} ({}) gives the empty element",
                self.index, self.op
            ),
            Some(e) => write!(f, "token {} ({}): {e}", self.index, self.op),
        }
    }
}

impl std::error::Error for WordError {}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub op: Op,
}

/// Crystal graph of `B(−∞)` truncated at a depth.
///
/// Node 0 is the lowest element; nodes appear in breadth-first order. Edges
/// are recorded from every node strictly inside the depth bound, so nodes on
/// the boundary have no outgoing edges.
#[derive(Debug, Clone)]
pub struct CrystalGraph {
    pub kind: AlgebraKind,
    pub depth: u32,
    pub nodes: Vec<CrystalElement>,
    pub depths: Vec<u32>,
    pub edges: Vec<Edge>,
}

impl CrystalGraph {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Node indices sorted by (weight, datum pair).
    pub fn canonical_order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.nodes.len()).collect();
        order.sort_by(|&a, &b| {
            let (x, y) = (&self.nodes[a], &self.nodes[b]);
            (x.weight(), x).cmp(&(y.weight(), y))
        });
        order
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lusztig::Partition;
    use crate::root_data::{AlgebraKind::*, RealRoot as R};

    fn datum(kind: AlgebraKind, real: &[(R, u32)], delta: &[u32]) -> LusztigDatum {
        LusztigDatum::new(
            kind,
            real.iter().copied(),
            Partition::new(delta.to_vec()).unwrap(),
        )
        .unwrap()
    }

    const Z: Node = Node::Zero;
    const O: Node = Node::One;

    #[test]
    fn lowest_and_simple_steps() {
        for kind in AlgebraKind::ALL {
            let c = Crystal::new(kind);
            let b0 = c.lowest();
            assert!(b0.weight().is_zero());
            let e0 = c.e(Z, &b0).unwrap();
            assert_eq!(e0.left(), &datum(kind, &[(R::high(1), 1)], &[]));
            assert_eq!(e0.right(), &datum(kind, &[(R::high(1), 1)], &[]));
            assert_eq!(c.f(Z, &e0).unwrap(), Some(b0.clone()));
            assert_eq!(c.f(O, &b0).unwrap(), None);
            assert_eq!(c.f_star(O, &b0).unwrap(), None);
            assert_eq!(c.phi(Z, &b0), 0);
            assert_eq!(c.star(&b0), b0);
            assert_eq!(c.saito(Z, &b0).unwrap(), b0);
        }
    }

    #[test]
    fn statistics() {
        let c = Crystal::new(Sl2Hat);
        let b0 = c.lowest();
        let e1 = c.e(O, &b0).unwrap();
        assert_eq!(c.eps(Z, &e1), 2);
        let e00 = c.e(Z, &c.e(Z, &b0).unwrap()).unwrap();
        assert_eq!(c.phi(Z, &e00), 2);
        assert_eq!(c.string_length(&e00, |b| c.f(Z, b)).unwrap(), 2);
    }

    #[test]
    fn starred_and_saito_examples() {
        let c = Crystal::new(Sl2Hat);
        let e1 = c.e(O, &c.lowest()).unwrap();
        let b = c.e_star(Z, &c.e_star(Z, &e1).unwrap()).unwrap();
        assert_eq!(
            b.left(),
            &datum(Sl2Hat, &[(R::high(1), 2), (R::low(1), 1)], &[])
        );
        assert_eq!(b.right(), &datum(Sl2Hat, &[(R::high(2), 1)], &[]));

        let s = c.star(&b);
        assert_eq!(s.left(), b.right());
        assert_eq!(s.right(), b.left());

        let sig = c.saito(Z, &e1).unwrap();
        assert_eq!(sig.left(), &datum(Sl2Hat, &[(R::high(2), 1)], &[]));
        assert_eq!(
            sig.right(),
            &datum(Sl2Hat, &[(R::high(1), 2), (R::low(1), 1)], &[])
        );
        assert_eq!(sig.weight(), Sl2Hat.simple_reflection(Z, e1.weight()));

        let e0 = c.e(Z, &c.lowest()).unwrap();
        assert!(matches!(
            c.saito(Z, &e0),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn tau_examples() {
        let c = Crystal::new(Sl2Hat);
        let b0 = c.lowest();
        assert_eq!(c.tau(&b0).unwrap(), b0);
        assert_eq!(c.tau(&c.e(Z, &b0).unwrap()).unwrap(), c.e(O, &b0).unwrap());
        let a = Crystal::new(A22);
        assert_eq!(a.tau(&a.lowest()), Err(Error::UnsupportedKind(A22)));
    }

    #[test]
    fn words() {
        let c = Crystal::new(Sl2Hat);
        let b0 = c.lowest();
        let parse = |s: &str| {
            s.split_whitespace()
                .map(|t| Op::parse(t).unwrap())
                .collect::<Vec<_>>()
        };
        assert_eq!(c.apply_word(&parse(""), &b0).unwrap(), b0);
        assert_eq!(c.apply_word(&parse("e0 f0"), &b0).unwrap(), b0);
        let e1 = c.e(O, &b0).unwrap();
        assert_eq!(
            c.apply_word(&parse("e1 s0"), &b0).unwrap(),
            c.saito(Z, &e1).unwrap()
        );
        let err = c.apply_word(&parse("e0 f1"), &b0).unwrap_err();
        assert_eq!((err.index, err.error), (1, None));
        let err = c.apply_word(&parse("e0 s0"), &b0).unwrap_err();
        assert!(matches!(err.error, Some(Error::PreconditionViolated(_))));
        for t in ["e0", "e1*", "f0*", "s1", "s0*", "star", "tau"] {
            assert_eq!(Op::parse(t).unwrap().to_string(), t);
        }
        assert_eq!(Op::parse("e2"), None);
        assert_eq!(Op::parse("star*"), None);
    }

    #[test]
    fn graph_sizes() {
        let c = Crystal::new(Sl2Hat);
        assert_eq!(c.graph(0).unwrap().len(), 1);
        assert_eq!(c.graph(1).unwrap().len(), 3);
        let sizes: Vec<usize> = (0..5).map(|d| c.graph(d).unwrap().len()).collect();
        assert!(sizes.windows(2).all(|w| w[0] <= w[1]));
    }
}
