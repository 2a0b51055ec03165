//! Partitions, Lusztig data and Kostant-partition enumeration.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::root_data::{AlgebraKind, Node, RealRoot, RootVector};

/// A weakly decreasing sequence of positive integers. The empty partition is 0.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Validates canonical form: positive parts in weakly decreasing order.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidDatum(
                "partition parts must be positive".into(),
            ));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidDatum(format!(
                "partition {parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition(parts))
    }

    /// Sorts and drops zeros.
    pub fn from_parts(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest part, 0 for the empty partition.
    pub fn largest_part(&self) -> u32 {
        self.0.first().copied().unwrap_or(0)
    }

    pub fn contains_part(&self, s: u32) -> bool {
        self.0.contains(&s)
    }

    /// Removes one occurrence of `s`.
    pub fn remove_part(&self, s: u32) -> Result<Partition> {
        let pos = self
            .0
            .iter()
            .position(|&p| p == s)
            .ok_or(Error::PartAbsent(s))?;
        let mut parts = self.0.clone();
        parts.remove(pos);
        Ok(Partition(parts))
    }

    pub fn insert_part(&self, s: u32) -> Partition {
        if s == 0 {
            return self.clone();
        }
        let pos = self.0.iter().position(|&p| p < s).unwrap_or(self.0.len());
        let mut parts = self.0.clone();
        parts.insert(pos, s);
        Partition(parts)
    }

    /// Conjugate partition (Young diagram reflected in its diagonal).
    pub fn transpose(&self) -> Partition {
        let cols = self.largest_part();
        Partition(
            (1..=cols)
                .map(|c| self.0.iter().filter(|&&p| p >= c).count() as u32)
                .collect(),
        )
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all(n: u32) -> Vec<Partition> {
        fn rec(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=n.min(max)).rev() {
                cur.push(p);
                rec(n - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Multiplicities on the positive real roots plus a partition for `δ`.
///
/// Only nonzero multiplicities are stored, so derived equality and ordering
/// are the canonical ones.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LusztigDatum {
    kind: AlgebraKind,
    real: BTreeMap<RealRoot, u32>,
    delta: Partition,
}

impl LusztigDatum {
    pub fn zero(kind: AlgebraKind) -> Self {
        LusztigDatum {
            kind,
            real: BTreeMap::new(),
            delta: Partition::empty(),
        }
    }

    /// Builds a datum from real entries; zero multiplicities are dropped and
    /// repeated labels accumulate.
    pub fn new(
        kind: AlgebraKind,
        real: impl IntoIterator<Item = (RealRoot, u32)>,
        delta: Partition,
    ) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (label, m) in real {
            if label.k == 0 {
                return Err(Error::InvalidDatum("root labels start at k = 1".into()));
            }
            if m > 0 {
                *map.entry(label).or_insert(0) += m;
            }
        }
        Ok(LusztigDatum {
            kind,
            real: map,
            delta,
        })
    }

    /// Purely imaginary datum `λ`.
    pub fn imaginary(kind: AlgebraKind, lambda: Partition) -> Self {
        LusztigDatum {
            kind,
            real: BTreeMap::new(),
            delta: lambda,
        }
    }

    /// `{α₁: (|α₀|/|α₁|)·λ₁, δ: λ∖λ₁, α₀: λ₁}`: the right datum paired with
    /// the purely imaginary left datum `λ`.
    pub fn trapezoid(kind: AlgebraKind, lambda: &Partition) -> Self {
        let l1 = lambda.largest_part();
        if l1 == 0 {
            return LusztigDatum::zero(kind);
        }
        let rest = lambda.remove_part(l1).expect("largest part is present");
        let mut d = LusztigDatum::imaginary(kind, rest);
        d.set_mult(Node::One.simple_label(), kind.length_ratio() * l1);
        d.set_mult(Node::Zero.simple_label(), l1);
        d
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn delta(&self) -> &Partition {
        &self.delta
    }

    pub fn set_delta(&mut self, delta: Partition) {
        self.delta = delta;
    }

    /// Nonzero real entries in canonical order (low family, then high, by `k`).
    pub fn real_entries(&self) -> impl Iterator<Item = (RealRoot, u32)> + '_ {
        self.real.iter().map(|(&l, &m)| (l, m))
    }

    pub fn mult(&self, label: RealRoot) -> u32 {
        self.real.get(&label).copied().unwrap_or(0)
    }

    pub fn set_mult(&mut self, label: RealRoot, m: u32) {
        if m == 0 {
            self.real.remove(&label);
        } else {
            self.real.insert(label, m);
        }
    }

    /// Multiplicity on the simple root `αᵢ`.
    pub fn simple_mult(&self, i: Node) -> u32 {
        self.mult(i.simple_label())
    }

    pub fn with_simple_mult(&self, i: Node, m: u32) -> Self {
        let mut d = self.clone();
        d.set_mult(i.simple_label(), m);
        d
    }

    pub fn is_zero(&self) -> bool {
        self.real.is_empty() && self.delta.is_empty()
    }

    pub fn is_purely_imaginary(&self) -> bool {
        self.real.is_empty()
    }

    /// Largest label `k` with a nonzero entry (0 if none).
    pub fn max_support(&self) -> u32 {
        self.real.keys().map(|l| l.k).max().unwrap_or(0)
    }

    /// `|c_δ|·δ + Σ c_β·β`.
    pub fn weight(&self) -> RootVector {
        let mut w = self.kind.delta() * i64::from(self.delta.size());
        for (label, m) in self.real_entries() {
            w += self.kind.root(label) * i64::from(m);
        }
        w
    }

    /// `c ∘ sᵢ`: moves the entry at `ρ` to `sᵢ(ρ)`, keeps the δ-partition.
    pub fn twist_s(&self, i: Node) -> Result<Self> {
        if self.simple_mult(i) != 0 {
            return Err(Error::PreconditionViolated(format!(
                "twist by s{i} needs multiplicity 0 on alpha_{i}, datum is {self}"
            )));
        }
        let mut real = BTreeMap::new();
        for (label, m) in self.real_entries() {
            let image = self.kind.simple_reflection(i, self.kind.root(label));
            let target = self
                .kind
                .label_of(image)
                .expect("reflection permutes the other real roots");
            real.insert(target, m);
        }
        Ok(LusztigDatum {
            kind: self.kind,
            real,
            delta: self.delta.clone(),
        })
    }

    /// `c ∘ τ` (ŝl₂ only): exchanges the two real families at equal `k`.
    pub fn twist_tau(&self) -> Result<Self> {
        if self.kind != AlgebraKind::Sl2Hat {
            return Err(Error::UnsupportedKind(self.kind));
        }
        let real = self
            .real_entries()
            .map(|(l, m)| {
                (
                    RealRoot {
                        family: l.family.swap(),
                        k: l.k,
                    },
                    m,
                )
            })
            .collect();
        Ok(LusztigDatum {
            kind: self.kind,
            real,
            delta: self.delta.clone(),
        })
    }
}

impl fmt::Display for LusztigDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (label, m) in self.real_entries() {
            write!(f, "{label}:{m} ")?;
        }
        write!(f, "d:{}}}", self.delta)
    }
}

/// Every Lusztig datum of weight exactly `w`, each once, in a fixed order:
/// real multiplicities are chosen along the low family then the high family
/// (ascending `k`), and the residual `nδ` is split into all partitions of `n`.
pub fn enumerate_data(kind: AlgebraKind, w: RootVector) -> Vec<LusztigDatum> {
    if !w.is_nonnegative() {
        return Vec::new();
    }
    let roots = kind.positive_real_roots(w);
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    enumerate_rec(kind, &roots, 0, w, &mut chosen, &mut out);
    out
}

fn enumerate_rec(
    kind: AlgebraKind,
    roots: &[(RealRoot, RootVector)],
    idx: usize,
    residual: RootVector,
    chosen: &mut Vec<(RealRoot, u32)>,
    out: &mut Vec<LusztigDatum>,
) {
    let Some(&(label, v)) = roots.get(idx) else {
        if let Some(n) = residual.multiple_of(kind.delta()) {
            for lambda in Partition::all(n as u32) {
                let mut real = BTreeMap::new();
                real.extend(chosen.iter().copied());
                out.push(LusztigDatum {
                    kind,
                    real,
                    delta: lambda,
                });
            }
        }
        return;
    };
    let mut rest = residual;
    let mut m = 0u32;
    while rest.is_nonnegative() {
        if m > 0 {
            chosen.push((label, m));
        }
        enumerate_rec(kind, roots, idx + 1, rest, chosen, out);
        if m > 0 {
            chosen.pop();
        }
        rest -= v;
        m += 1;
    }
}

/// All weights componentwise `≤ bound`, row-major.
pub fn weights_in_box(bound: RootVector) -> Vec<RootVector> {
    (0..=bound.a)
        .flat_map(|a| (0..=bound.b).map(move |b| RootVector::new(a, b)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_data::AlgebraKind::*;
    use crate::root_data::Family;
    use std::collections::HashSet;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn datum(kind: AlgebraKind, real: &[(RealRoot, u32)], delta: &[u32]) -> LusztigDatum {
        LusztigDatum::new(kind, real.iter().copied(), p(delta)).unwrap()
    }

    fn big_right() -> LusztigDatum {
        use RealRoot as R;
        datum(
            Sl2Hat,
            &[
                (R::low(1), 2),
                (R::low(2), 1),
                (R::low(3), 1),
                (R::high(3), 1),
                (R::high(1), 1),
            ],
            &[9, 2, 1, 1],
        )
    }

    #[test]
    fn partition_basics() {
        assert_eq!(p(&[9, 2, 1, 1]).largest_part(), 9);
        assert_eq!(p(&[9, 2, 1, 1]).remove_part(9).unwrap(), p(&[2, 1, 1]));
        assert_eq!(p(&[2, 1, 1]).transpose(), p(&[3, 1]));
        assert_eq!(p(&[]).transpose(), p(&[]));
        assert_eq!(p(&[2, 1]).remove_part(3), Err(Error::PartAbsent(3)));
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!(p(&[3, 1]).insert_part(2), p(&[3, 2, 1]));
        assert_eq!(Partition::all(4).len(), 5);
        assert_eq!(Partition::all(0), vec![p(&[])]);
    }

    #[test]
    fn weights() {
        let d = datum(
            Sl2Hat,
            &[(RealRoot::high(1), 1), (RealRoot::low(1), 1)],
            &[],
        );
        assert_eq!(d.weight(), RootVector::new(1, 1));
        assert_eq!(big_right().weight(), RootVector::new(20, 22));
        assert_eq!(
            LusztigDatum::imaginary(A22, p(&[1])).weight(),
            RootVector::new(1, 2)
        );
        assert!(LusztigDatum::zero(A22).weight().is_zero());
    }

    #[test]
    fn twists() {
        let d = datum(Sl2Hat, &[(RealRoot::low(1), 1)], &[]);
        assert_eq!(
            d.twist_s(Node::Zero).unwrap(),
            datum(Sl2Hat, &[(RealRoot::high(2), 1)], &[])
        );

        let d = datum(A22, &[(RealRoot::high(1), 3)], &[]);
        assert_eq!(
            d.twist_s(Node::One).unwrap(),
            datum(A22, &[(RealRoot::low(2), 3)], &[])
        );

        for kind in AlgebraKind::ALL {
            let d = LusztigDatum::imaginary(kind, p(&[2, 1]));
            for i in Node::ALL {
                assert_eq!(d.twist_s(i).unwrap(), d);
            }
        }

        let bad = datum(Sl2Hat, &[(RealRoot::high(1), 1)], &[]);
        assert!(matches!(
            bad.twist_s(Node::Zero),
            Err(Error::PreconditionViolated(_))
        ));

        let d = datum(
            Sl2Hat,
            &[(RealRoot::high(1), 2), (RealRoot::low(2), 1)],
            &[],
        );
        assert_eq!(
            d.twist_tau().unwrap(),
            datum(
                Sl2Hat,
                &[(RealRoot::low(1), 2), (RealRoot::high(2), 1)],
                &[]
            )
        );
        let d = LusztigDatum::imaginary(Sl2Hat, p(&[3]));
        assert_eq!(d.twist_tau().unwrap(), d);
        assert_eq!(
            LusztigDatum::zero(Sl2Hat).twist_tau().unwrap(),
            LusztigDatum::zero(Sl2Hat)
        );
        assert_eq!(
            LusztigDatum::zero(A22).twist_tau(),
            Err(Error::UnsupportedKind(A22))
        );
    }

    #[test]
    fn enumeration_examples() {
        let d = Sl2Hat.delta();
        let got = enumerate_data(Sl2Hat, d);
        assert_eq!(got.len(), 2);
        assert!(got.contains(&datum(
            Sl2Hat,
            &[(RealRoot::high(1), 1), (RealRoot::low(1), 1)],
            &[]
        )));
        assert!(got.contains(&LusztigDatum::imaginary(Sl2Hat, p(&[1]))));
        assert_eq!(enumerate_data(Sl2Hat, d * 2).len(), 6);
        for kind in AlgebraKind::ALL {
            assert_eq!(
                enumerate_data(kind, RootVector::ZERO),
                vec![LusztigDatum::zero(kind)]
            );
        }
    }

    #[test]
    fn trapezoid_shape() {
        let t = LusztigDatum::trapezoid(A22, &p(&[3, 1]));
        assert_eq!(t.simple_mult(Node::One), 6);
        assert_eq!(t.simple_mult(Node::Zero), 3);
        assert_eq!(t.delta(), &p(&[1]));
        assert_eq!(t.weight(), A22.delta() * 4);
        assert!(LusztigDatum::trapezoid(A22, &p(&[])).is_zero());
    }

    /// Coefficient of `x^w` in `Π_β 1/(1 − x^β) · Π_k 1/(1 − x^{kδ})`, with
    /// the real roots taken from the printed root families.
    fn kostant_count_oracle(kind: AlgebraKind, bound: RootVector) -> Vec<Vec<u64>> {
        let (na, nb) = (bound.a as usize, bound.b as usize);
        let a0 = RootVector::ALPHA0;
        let a1 = RootVector::ALPHA1;
        let dl = kind.delta();
        let mut parts: Vec<RootVector> = Vec::new();
        for k in 0..=(na as i64 + 2) {
            match kind {
                Sl2Hat => parts.extend([a0 + dl * k, a1 + dl * k]),
                A22 => parts.extend([
                    a1 + dl * k,
                    a0 + dl * (2 * k),
                    a0 + a1 + dl * k,
                    a1 * 2 + dl * (2 * k + 1),
                ]),
            }
            parts.push(dl * (k + 1));
        }
        let mut series = vec![vec![0u64; nb + 1]; na + 1];
        series[0][0] = 1;
        for step in parts.into_iter().filter(|v| v.fits_in(bound)) {
            let (sa, sb) = (step.a as usize, step.b as usize);
            for a in sa..=na {
                for b in sb..=nb {
                    series[a][b] += series[a - sa][b - sb];
                }
            }
        }
        series
    }

    #[test]
    fn enumeration_matches_generating_function() {
        for kind in AlgebraKind::ALL {
            let bound = RootVector::new(4, 4);
            let oracle = kostant_count_oracle(kind, bound);
            for w in weights_in_box(bound) {
                let data = enumerate_data(kind, w);
                assert_eq!(
                    data.len() as u64,
                    oracle[w.a as usize][w.b as usize],
                    "{kind} {w}"
                );
                let distinct: HashSet<_> = data.iter().collect();
                assert_eq!(distinct.len(), data.len());
                assert!(data.iter().all(|d| d.weight() == w));
            }
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn partition() -> impl Strategy<Value = Partition> {
            proptest::collection::vec(1u32..8, 0..6).prop_map(Partition::from_parts)
        }

        fn datum_strategy(kind: AlgebraKind) -> impl Strategy<Value = LusztigDatum> {
            (
                proptest::collection::vec(
                    (
                        prop_oneof![Just(Family::Low), Just(Family::High)],
                        1u32..6,
                        0u32..4,
                    ),
                    0..5,
                ),
                partition(),
            )
                .prop_map(move |(real, delta)| {
                    LusztigDatum::new(
                        kind,
                        real.into_iter()
                            .map(|(f, k, m)| (RealRoot { family: f, k }, m)),
                        delta,
                    )
                    .unwrap()
                })
        }

        proptest! {
            #[test]
            fn remove_then_insert_restores(lambda in partition(), idx in 0usize..6) {
                if let Some(&s) = lambda.parts().get(idx) {
                    prop_assert_eq!(lambda.remove_part(s).unwrap().insert_part(s), lambda);
                }
            }

            #[test]
            fn transpose_is_involution(lambda in partition()) {
                prop_assert_eq!(lambda.transpose().size(), lambda.size());
                prop_assert_eq!(lambda.transpose().transpose(), lambda);
            }

            #[test]
            fn twist_s_reflects_weight(d in prop_oneof![datum_strategy(Sl2Hat), datum_strategy(A22)]) {
                for i in Node::ALL {
                    let d = d.with_simple_mult(i, 0);
                    let t = d.twist_s(i).unwrap();
                    prop_assert_eq!(t.simple_mult(i), 0);
                    prop_assert_eq!(t.weight(), d.kind().simple_reflection(i, d.weight()));
                    prop_assert_eq!(t.twist_s(i).unwrap(), d);
                }
            }

            #[test]
            fn twist_tau_is_involution(d in datum_strategy(Sl2Hat)) {
                let t = d.twist_tau().unwrap();
                prop_assert_eq!(t.twist_tau().unwrap(), d.clone());
                let w = d.weight();
                prop_assert_eq!(t.weight(), RootVector::new(w.b, w.a));
            }
        }
    }
}
