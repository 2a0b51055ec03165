//! Decorated pseudo-Weyl polytopes: vertex paths and the MV conditions.
//!
//! A polytope is a pair of Lusztig data of equal weight. The right datum
//! traces the boundary from the bottom vertex `0` up the α₁-side
//! (`μ^r_k`), then down from the top vertex `wt` along the α₀-side
//! (`μ^{r,k}`); the left datum does the same on the other side.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lusztig::LusztigDatum;
use crate::root_data::{AlgebraKind, Family, Node, RealRoot, RootVector};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DecoratedPolytope {
    left: LusztigDatum,
    right: LusztigDatum,
}

impl DecoratedPolytope {
    pub fn new(left: LusztigDatum, right: LusztigDatum) -> Result<Self> {
        if left.kind() != right.kind() {
            return Err(Error::KindMismatch(left.kind(), right.kind()));
        }
        if left.weight() != right.weight() {
            return Err(Error::WeightMismatch {
                left: left.weight(),
                right: right.weight(),
            });
        }
        Ok(DecoratedPolytope { left, right })
    }

    pub fn zero(kind: AlgebraKind) -> Self {
        DecoratedPolytope {
            left: LusztigDatum::zero(kind),
            right: LusztigDatum::zero(kind),
        }
    }

    pub fn kind(&self) -> AlgebraKind {
        self.left.kind()
    }

    pub fn left(&self) -> &LusztigDatum {
        &self.left
    }

    pub fn right(&self) -> &LusztigDatum {
        &self.right
    }

    pub fn into_data(self) -> (LusztigDatum, LusztigDatum) {
        (self.left, self.right)
    }

    pub fn weight(&self) -> RootVector {
        self.right.weight()
    }

    /// Same polytope with the two data exchanged.
    pub fn swapped(&self) -> Self {
        DecoratedPolytope {
            left: self.right.clone(),
            right: self.left.clone(),
        }
    }

    /// Truncation index past the support of both data (at least 2).
    pub fn truncation(&self) -> u32 {
        (1 + self.left.max_support().max(self.right.max_support())).max(2)
    }

    pub fn vertices(&self) -> VertexFan {
        self.vertices_through(self.truncation())
    }

    /// Vertex paths computed out to index `k_max`.
    pub fn vertices_through(&self, k_max: u32) -> VertexFan {
        let kind = self.kind();
        let top = self.weight();
        let mut fan = VertexFan {
            mu_r: vec![RootVector::ZERO],
            mu_r_top: vec![top],
            mu_l: vec![RootVector::ZERO],
            mu_l_top: vec![top],
        };
        for k in 1..=k_max {
            let low = kind.beta_low(k);
            let high = kind.beta_high(k);
            let step = |d: &LusztigDatum, f: Family, v: RootVector| {
                v * i64::from(d.mult(RealRoot { family: f, k }))
            };
            fan.mu_r
                .push(fan.mu_r[k as usize - 1] + step(&self.right, Family::Low, low));
            fan.mu_r_top
                .push(fan.mu_r_top[k as usize - 1] - step(&self.right, Family::High, high));
            fan.mu_l
                .push(fan.mu_l[k as usize - 1] + step(&self.left, Family::High, high));
            fan.mu_l_top
                .push(fan.mu_l_top[k as usize - 1] - step(&self.left, Family::Low, low));
        }
        fan
    }

    pub fn is_mv(&self) -> MvVerdict {
        self.check_mv_through(self.truncation())
    }

    /// MV conditions with the diagonal conditions scanned for `2 ≤ k ≤ k_max`.
    pub fn check_mv_through(&self, k_max: u32) -> MvVerdict {
        let fan = self.vertices_through(k_max.max(2));
        let mut violations = Vec::new();
        for k in 2..=k_max.max(2) {
            if diagonal_top(&fan, k) != 0 {
                violations.push(Violation::at(1, k));
            }
            if diagonal_bottom(&fan, k) != 0 {
                violations.push(Violation::at(2, k));
            }
        }
        violations.extend(middle_violations(
            self.kind(),
            &fan,
            self.left.delta(),
            self.right.delta(),
        ));
        MvVerdict { violations }
    }

    /// Boundary polygon in cyclic order, consecutive repeats removed: up the
    /// right path, then down the left path.
    pub fn boundary(&self) -> Vec<RootVector> {
        let fan = self.vertices();
        let mut cycle: Vec<RootVector> = Vec::new();
        let pts = fan
            .mu_r
            .iter()
            .chain(fan.mu_r_top.iter().rev())
            .chain(fan.mu_l_top.iter())
            .chain(fan.mu_l.iter().rev());
        for &v in pts {
            if cycle.last() != Some(&v) {
                cycle.push(v);
            }
        }
        while cycle.len() > 1 && cycle.first() == cycle.last() {
            cycle.pop();
        }
        cycle
    }

    /// Sorted list of every path vertex (with repeats).
    pub fn vertex_multiset(&self) -> Vec<RootVector> {
        let fan = self.vertices();
        let mut all: Vec<RootVector> = [fan.mu_r, fan.mu_r_top, fan.mu_l, fan.mu_l_top]
            .into_iter()
            .flatten()
            .collect();
        all.sort();
        all
    }

    /// Every boundary vertex lies weakly to the left of every directed edge
    /// in the planar picture.
    pub fn is_convex(&self) -> bool {
        let kind = self.kind();
        let cycle: Vec<(i64, i64)> = self.boundary().into_iter().map(|v| kind.embed(v)).collect();
        let n = cycle.len();
        if n < 3 {
            return true;
        }
        (0..n).all(|i| {
            let (p, q) = (cycle[i], cycle[(i + 1) % n]);
            cycle
                .iter()
                .all(|&r| (q.0 - p.0) * (r.1 - p.1) - (q.1 - p.1) * (r.0 - p.0) >= 0)
        })
    }
}

impl fmt::Display for DecoratedPolytope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[l={} r={}]", self.left, self.right)
    }
}

/// The four vertex paths, indexed `0..=K`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexFan {
    /// `μ^r_k`: bottom-up along the α₁-family of the right datum.
    pub mu_r: Vec<RootVector>,
    /// `μ^{r,k}`: top-down along the α₀-family of the right datum.
    pub mu_r_top: Vec<RootVector>,
    /// `μ^ℓ_k`: bottom-up along the α₀-family of the left datum.
    pub mu_l: Vec<RootVector>,
    /// `μ^{ℓ,k}`: top-down along the α₁-family of the left datum.
    pub mu_l_top: Vec<RootVector>,
}

impl VertexFan {
    pub fn len(&self) -> usize {
        self.mu_r.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mu_r.is_empty()
    }

    pub fn r_inf(&self) -> RootVector {
        *self.mu_r.last().expect("fan is never empty")
    }

    pub fn r_top_inf(&self) -> RootVector {
        *self.mu_r_top.last().expect("fan is never empty")
    }

    pub fn l_inf(&self) -> RootVector {
        *self.mu_l.last().expect("fan is never empty")
    }

    pub fn l_top_inf(&self) -> RootVector {
        *self.mu_l_top.last().expect("fan is never empty")
    }
}

/// `max{(μ^ℓ_k − μ^r_{k−1}, ω₁), (μ^r_k − μ^ℓ_{k−1}, ω₀)}`; zero when condition 1 holds at `k`.
pub(crate) fn diagonal_top(fan: &VertexFan, k: u32) -> i64 {
    let k = k as usize;
    let x = (fan.mu_l[k] - fan.mu_r[k - 1]).coweight_pair(Node::One);
    let y = (fan.mu_r[k] - fan.mu_l[k - 1]).coweight_pair(Node::Zero);
    x.max(y)
}

/// `min{(μ^{ℓ,k} − μ^{r,k−1}, ω₀), (μ^{r,k} − μ^{ℓ,k−1}, ω₁)}`; zero when condition 2 holds at `k`.
pub(crate) fn diagonal_bottom(fan: &VertexFan, k: u32) -> i64 {
    let k = k as usize;
    let x = (fan.mu_l_top[k] - fan.mu_r_top[k - 1]).coweight_pair(Node::Zero);
    let y = (fan.mu_r_top[k] - fan.mu_l_top[k - 1]).coweight_pair(Node::One);
    x.min(y)
}

/// Exact rational `num / den` with `den > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ratio {
    pub num: i64,
    pub den: i64,
}

impl Ratio {
    fn new(num: i64, den: i64) -> Self {
        fn gcd(a: i64, b: i64) -> i64 {
            if b == 0 {
                a.abs()
            } else {
                gcd(b, a % b)
            }
        }
        let g = gcd(num, den).max(1) * den.signum();
        Ratio {
            num: num / g,
            den: den / g,
        }
    }

    pub fn as_integer(self) -> Option<i64> {
        (self.den == 1).then_some(self.num)
    }

    pub fn ge_int(self, n: i64) -> bool {
        self.num >= n * self.den
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// `(|α₁| / 2|α₀|)·(v, α₁)`: width of the polytope at the δ-edges, in units of δ.
pub fn part_size(kind: AlgebraKind, v: RootVector) -> Ratio {
    let (n, d) = kind.half_length_ratio();
    Ratio::new(n * kind.symmetrized_form(v, RootVector::ALPHA1), d)
}

fn middle_violations(
    kind: AlgebraKind,
    fan: &VertexFan,
    left: &crate::lusztig::Partition,
    right: &crate::lusztig::Partition,
) -> Vec<Violation> {
    let mut out = Vec::new();
    let bottom = fan.r_inf() - fan.l_inf();
    let top = fan.r_top_inf() - fan.l_top_inf();
    let s = part_size(kind, bottom);
    if bottom.cross(top) == 0 {
        if left != right {
            out.push(Violation::global(3));
        }
    } else {
        let ok = s.as_integer().filter(|&s| s > 0).is_some_and(|s| {
            let (big, small) = if right.size() > left.size() {
                (right, left)
            } else {
                (left, right)
            };
            big.size() != small.size()
                && big
                    .remove_part(s as u32)
                    .map(|rest| &rest == small)
                    .unwrap_or(false)
        });
        if !ok {
            out.push(Violation::global(3));
        }
    }
    let largest = i64::from(left.largest_part().max(right.largest_part()));
    if !s.ge_int(largest) {
        out.push(Violation::global(4));
    }
    out
}

/// A failed MV condition; `k` is set for the diagonal conditions 1 and 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Violation {
    pub condition: u8,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
}

impl Violation {
    fn at(condition: u8, k: u32) -> Self {
        Violation {
            condition,
            k: Some(k),
        }
    }

    fn global(condition: u8) -> Self {
        Violation { condition, k: None }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.k {
            Some(k) => write!(f, "condition ({}) at k={k}", self.condition),
            None => write!(f, "condition ({})", self.condition),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MvVerdict {
    pub violations: Vec<Violation>,
}

impl MvVerdict {
    pub fn passes(&self) -> bool {
        self.violations.is_empty()
    }
}
