//! Root data for the two rank-2 affine root systems.
//!
//! Everything lives in the root lattice with coordinates over the simple
//! roots `(α₀, α₁)`, so all geometry is exact integer arithmetic. Node 0 is
//! the long root for the twisted algebra.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use serde::{Deserialize, Serialize};

/// Which rank-2 affine algebra we are working in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum AlgebraKind {
    /// Untwisted affine `sl₂`.
    #[serde(rename = "sl2hat")]
    Sl2Hat,
    /// Twisted affine `A₂⁽²⁾`.
    #[serde(rename = "a2(2)")]
    A22,
}

impl AlgebraKind {
    pub const ALL: [AlgebraKind; 2] = [AlgebraKind::Sl2Hat, AlgebraKind::A22];

    /// Name used in documents and on the command line.
    pub fn name(self) -> &'static str {
        match self {
            AlgebraKind::Sl2Hat => "sl2hat",
            AlgebraKind::A22 => "a2(2)",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "sl2hat" | "sl2" | "a1(1)" => Some(AlgebraKind::Sl2Hat),
            "a2(2)" | "a22" => Some(AlgebraKind::A22),
            _ => None,
        }
    }

    /// Symmetrized Cartan matrix `N` with `(αᵢ, αⱼ) = N[i][j]`.
    pub fn symmetrized_cartan(self) -> [[i64; 2]; 2] {
        match self {
            AlgebraKind::Sl2Hat => [[2, -2], [-2, 2]],
            AlgebraKind::A22 => [[8, -4], [-4, 2]],
        }
    }

    /// Cartan matrix `A[i][j] = ⟨αᵢ^∨, αⱼ⟩`.
    pub fn cartan_matrix(self) -> [[i64; 2]; 2] {
        let n = self.symmetrized_cartan();
        let mut a = [[0; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                a[i][j] = 2 * n[i][j] / n[i][i];
            }
        }
        a
    }

    /// The null root `δ`.
    pub fn delta(self) -> RootVector {
        match self {
            AlgebraKind::Sl2Hat => RootVector::new(1, 1),
            AlgebraKind::A22 => RootVector::new(1, 2),
        }
    }

    /// `|α₁| / (2|α₀|)` as an exact fraction `(numerator, denominator)`.
    pub fn half_length_ratio(self) -> (i64, i64) {
        match self {
            AlgebraKind::Sl2Hat => (1, 2),
            AlgebraKind::A22 => (1, 4),
        }
    }

    /// `|α₀| / |α₁|`, an integer for both algebras.
    pub fn length_ratio(self) -> u32 {
        match self {
            AlgebraKind::Sl2Hat => 1,
            AlgebraKind::A22 => 2,
        }
    }

    /// Bilinear form `(v, w)` on the root lattice.
    pub fn symmetrized_form(self, v: RootVector, w: RootVector) -> i64 {
        let n = self.symmetrized_cartan();
        let (vc, wc) = ([v.a, v.b], [w.a, w.b]);
        let mut total = 0;
        for i in 0..2 {
            for j in 0..2 {
                total += vc[i] * n[i][j] * wc[j];
            }
        }
        total
    }

    /// `⟨αᵢ^∨, v⟩ = 2(αᵢ, v) / (αᵢ, αᵢ)`.
    pub fn cartan_pair(self, i: Node, v: RootVector) -> i64 {
        let n = self.symmetrized_cartan();
        let num = 2 * self.symmetrized_form(i.simple_root(), v);
        let den = n[i.index()][i.index()];
        debug_assert_eq!(num % den, 0);
        num / den
    }

    /// `sᵢ(v) = v − ⟨αᵢ^∨, v⟩ αᵢ`.
    pub fn simple_reflection(self, i: Node, v: RootVector) -> RootVector {
        v - i.simple_root() * self.cartan_pair(i, v)
    }

    /// The `k`-th root of the α₁-family, `β_k`.
    pub fn beta_low(self, k: u32) -> RootVector {
        assert!(k >= 1, "root labels start at 1");
        let d = self.delta();
        let k = i64::from(k);
        match self {
            AlgebraKind::Sl2Hat => RootVector::ALPHA1 + d * (k - 1),
            AlgebraKind::A22 if k % 2 == 1 => RootVector::ALPHA1 + d * ((k - 1) / 2),
            AlgebraKind::A22 => RootVector::ALPHA1 * 2 + d * (k - 1),
        }
    }

    /// The `k`-th root of the α₀-family, `β^k`.
    pub fn beta_high(self, k: u32) -> RootVector {
        assert!(k >= 1, "root labels start at 1");
        let d = self.delta();
        let k = i64::from(k);
        match self {
            AlgebraKind::Sl2Hat => RootVector::ALPHA0 + d * (k - 1),
            AlgebraKind::A22 if k % 2 == 1 => RootVector::ALPHA0 + d * (k - 1),
            AlgebraKind::A22 => RootVector::ALPHA0 + RootVector::ALPHA1 + d * ((k - 2) / 2),
        }
    }

    pub fn root(self, label: RealRoot) -> RootVector {
        match label.family {
            Family::Low => self.beta_low(label.k),
            Family::High => self.beta_high(label.k),
        }
    }

    /// Largest label `k` (in either family) whose root can have α₀-coefficient
    /// at most `a`.
    pub fn max_label(self, a: i64) -> u32 {
        if a < 0 {
            return 0;
        }
        let bound = match self {
            AlgebraKind::Sl2Hat => a + 1,
            AlgebraKind::A22 => 2 * a + 1,
        };
        u32::try_from(bound).expect("label bound overflows u32")
    }

    /// Inverse of [`AlgebraKind::root`]: the label of `v` if it is a positive
    /// real root.
    pub fn label_of(self, v: RootVector) -> Option<RealRoot> {
        if v.a < 0 || v.b < 0 {
            return None;
        }
        (1..=self.max_label(v.a)).find_map(|k| {
            if self.beta_low(k) == v {
                Some(RealRoot::low(k))
            } else if self.beta_high(k) == v {
                Some(RealRoot::high(k))
            } else {
                None
            }
        })
    }

    /// All positive real roots componentwise `≤ bound`, low family first, each
    /// in ascending `k`.
    pub fn positive_real_roots(self, bound: RootVector) -> Vec<(RealRoot, RootVector)> {
        let kmax = self.max_label(bound.a);
        let mut out = Vec::new();
        for family in [Family::Low, Family::High] {
            for k in 1..=kmax {
                let label = RealRoot { family, k };
                let v = self.root(label);
                if v.fits_in(bound) {
                    out.push((label, v));
                }
            }
        }
        out
    }

    /// Planar picture of the root lattice: α₁ ↦ (1,1), α₀ ↦ (−1,1) for `sl₂`
    /// and α₀ ↦ (−2,2) for `A₂⁽²⁾`, so `δ` is vertical in both.
    pub fn embed(self, v: RootVector) -> (i64, i64) {
        match self {
            AlgebraKind::Sl2Hat => (v.b - v.a, v.a + v.b),
            AlgebraKind::A22 => (v.b - 2 * v.a, 2 * v.a + v.b),
        }
    }
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A Dynkin node, `0` or `1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Node {
    Zero,
    One,
}

impl Node {
    pub const ALL: [Node; 2] = [Node::Zero, Node::One];

    pub fn index(self) -> usize {
        match self {
            Node::Zero => 0,
            Node::One => 1,
        }
    }

    pub fn from_index(i: usize) -> Option<Self> {
        match i {
            0 => Some(Node::Zero),
            1 => Some(Node::One),
            _ => None,
        }
    }

    pub fn other(self) -> Self {
        match self {
            Node::Zero => Node::One,
            Node::One => Node::Zero,
        }
    }

    pub fn simple_root(self) -> RootVector {
        match self {
            Node::Zero => RootVector::ALPHA0,
            Node::One => RootVector::ALPHA1,
        }
    }

    /// Label of `αᵢ` among the real roots: α₀ = β¹, α₁ = β₁.
    pub fn simple_label(self) -> RealRoot {
        match self {
            Node::Zero => RealRoot::high(1),
            Node::One => RealRoot::low(1),
        }
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.index())
    }
}

/// Element `a·α₀ + b·α₁` of the root lattice.
#[derive(
    Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
pub struct RootVector {
    pub a: i64,
    pub b: i64,
}

impl RootVector {
    pub const ZERO: RootVector = RootVector { a: 0, b: 0 };
    pub const ALPHA0: RootVector = RootVector { a: 1, b: 0 };
    pub const ALPHA1: RootVector = RootVector { a: 0, b: 1 };

    pub const fn new(a: i64, b: i64) -> Self {
        RootVector { a, b }
    }

    /// `(v, ωᵢ)`, i.e. the αᵢ-coefficient.
    pub fn coweight_pair(self, i: Node) -> i64 {
        match i {
            Node::Zero => self.a,
            Node::One => self.b,
        }
    }

    pub fn is_zero(self) -> bool {
        self == Self::ZERO
    }

    /// Componentwise `≤`.
    pub fn fits_in(self, other: RootVector) -> bool {
        self.a <= other.a && self.b <= other.b
    }

    pub fn is_nonnegative(self) -> bool {
        self.a >= 0 && self.b >= 0
    }

    /// 2×2 determinant; zero iff the vectors are parallel (zero counts as
    /// parallel to everything).
    pub fn cross(self, other: RootVector) -> i64 {
        self.a * other.b - self.b * other.a
    }

    /// `Some(n)` if `self = n·step` for an integer `n ≥ 0`.
    pub fn multiple_of(self, step: RootVector) -> Option<i64> {
        if self.cross(step) != 0 {
            return None;
        }
        let (num, den) = if step.a != 0 {
            (self.a, step.a)
        } else {
            (self.b, step.b)
        };
        (den != 0 && num % den == 0 && num / den >= 0).then_some(num / den)
    }
}

impl Add for RootVector {
    type Output = RootVector;
    fn add(self, rhs: RootVector) -> RootVector {
        RootVector::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl AddAssign for RootVector {
    fn add_assign(&mut self, rhs: RootVector) {
        *self = *self + rhs;
    }
}

impl Sub for RootVector {
    type Output = RootVector;
    fn sub(self, rhs: RootVector) -> RootVector {
        RootVector::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl SubAssign for RootVector {
    fn sub_assign(&mut self, rhs: RootVector) {
        *self = *self - rhs;
    }
}

impl Neg for RootVector {
    type Output = RootVector;
    fn neg(self) -> RootVector {
        RootVector::new(-self.a, -self.b)
    }
}

impl Mul<i64> for RootVector {
    type Output = RootVector;
    fn mul(self, rhs: i64) -> RootVector {
        RootVector::new(self.a * rhs, self.b * rhs)
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}a0{:+}a1", self.a, self.b)
    }
}

/// Which of the two real-root families a label belongs to.
///
/// `Low` is the α₁-family `β_k`, `High` the α₀-family `β^k`. The derived order
/// (low before high) is the canonical serialization order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Low,
    High,
}

impl Family {
    pub fn swap(self) -> Self {
        match self {
            Family::Low => Family::High,
            Family::High => Family::Low,
        }
    }
}

/// Label `(family, k)` of a positive real root.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RealRoot {
    pub family: Family,
    pub k: u32,
}

impl RealRoot {
    pub fn low(k: u32) -> Self {
        RealRoot {
            family: Family::Low,
            k,
        }
    }

    pub fn high(k: u32) -> Self {
        RealRoot {
            family: Family::High,
            k,
        }
    }
}

impl fmt::Display for RealRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::Low => write!(f, "b_{}", self.k),
            Family::High => write!(f, "b^{}", self.k),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use AlgebraKind::*;

    const A0: RootVector = RootVector::ALPHA0;
    const A1: RootVector = RootVector::ALPHA1;

    #[test]
    fn form_values() {
        assert_eq!(Sl2Hat.symmetrized_form(A0, A1), -2);
        assert_eq!(A22.symmetrized_form(A0, A0), 8);
        for kind in AlgebraKind::ALL {
            for i in Node::ALL {
                assert_eq!(kind.symmetrized_form(i.simple_root(), kind.delta()), 0);
                assert_eq!(kind.cartan_pair(i, kind.delta()), 0);
            }
        }
    }

    #[test]
    fn cartan_pairs() {
        assert_eq!(Sl2Hat.cartan_pair(Node::Zero, A1), -2);
        assert_eq!(A22.cartan_pair(Node::One, A0), -4);
        assert_eq!(Sl2Hat.cartan_matrix(), [[2, -2], [-2, 2]]);
        assert_eq!(A22.cartan_matrix(), [[2, -1], [-4, 2]]);
        for kind in AlgebraKind::ALL {
            let m = kind.cartan_matrix();
            for i in Node::ALL {
                for j in Node::ALL {
                    assert_eq!(
                        kind.cartan_pair(i, j.simple_root()),
                        m[i.index()][j.index()]
                    );
                }
            }
        }
    }

    #[test]
    fn reflections() {
        assert_eq!(Sl2Hat.simple_reflection(Node::Zero, A1), A1 + A0 * 2);
        assert_eq!(
            Sl2Hat.simple_reflection(Node::Zero, A1),
            A0 + Sl2Hat.delta()
        );
        assert_eq!(A22.simple_reflection(Node::One, A0), A0 + A1 * 4);
        assert_eq!(A22.simple_reflection(Node::One, A0), A1 * 2 + A22.delta());
        for kind in AlgebraKind::ALL {
            for i in Node::ALL {
                assert_eq!(kind.simple_reflection(i, kind.delta()), kind.delta());
                assert_eq!(kind.simple_reflection(i, i.simple_root()), -i.simple_root());
            }
        }
    }

    #[test]
    fn beta_labels() {
        assert_eq!(Sl2Hat.beta_low(3), RootVector::new(2, 3));
        assert_eq!(A22.beta_low(2), RootVector::new(1, 4));
        assert_eq!(A22.beta_high(2), RootVector::new(1, 1));
        assert_eq!(A22.beta_high(3), A0 + A22.delta() * 2);
        assert_eq!(A22.beta_low(3), A1 + A22.delta());
    }

    #[test]
    fn coweights() {
        assert_eq!((A0 * 2 - A1).coweight_pair(Node::One), -1);
        assert_eq!(Sl2Hat.delta().coweight_pair(Node::Zero), 1);
        for i in Node::ALL {
            assert_eq!(RootVector::ZERO.coweight_pair(i), 0);
        }
    }

    #[test]
    fn roots_in_box() {
        let got: Vec<_> = Sl2Hat
            .positive_real_roots(RootVector::new(1, 1))
            .into_iter()
            .map(|(_, v)| v)
            .collect();
        assert_eq!(got, vec![A1, A0]);

        let mut got: Vec<_> = A22
            .positive_real_roots(RootVector::new(1, 4))
            .into_iter()
            .map(|(_, v)| v)
            .collect();
        got.sort();
        let d = A22.delta();
        let mut want = vec![A1, A0, A0 + A1, A1 + d, A1 * 2 + d];
        want.sort();
        assert_eq!(got, want);

        for kind in AlgebraKind::ALL {
            assert!(kind.positive_real_roots(RootVector::ZERO).is_empty());
        }
    }

    #[test]
    fn root_lists_match_printed_families() {
        // ŝl₂: α₀+kδ, α₁+kδ; A₂⁽²⁾: α₁+kδ, α₀+2kδ, α₀+α₁+kδ, 2α₁+(2k+1)δ.
        let bound = RootVector::new(12, 30);
        for kind in AlgebraKind::ALL {
            let d = kind.delta();
            let mut printed = Vec::new();
            for k in 0..40 {
                match kind {
                    Sl2Hat => {
                        printed.push(A0 + d * k);
                        printed.push(A1 + d * k);
                    }
                    A22 => {
                        printed.push(A1 + d * k);
                        printed.push(A0 + d * (2 * k));
                        printed.push(A0 + A1 + d * k);
                        printed.push(A1 * 2 + d * (2 * k + 1));
                    }
                }
            }
            let mut printed: Vec<_> = printed.into_iter().filter(|v| v.fits_in(bound)).collect();
            printed.sort();
            let mut got: Vec<_> = kind
                .positive_real_roots(bound)
                .into_iter()
                .map(|(_, v)| v)
                .collect();
            got.sort();
            assert_eq!(got, printed, "{kind}");
        }
    }

    #[test]
    fn label_round_trip() {
        for kind in AlgebraKind::ALL {
            for (label, v) in kind.positive_real_roots(RootVector::new(8, 16)) {
                assert_eq!(kind.label_of(v), Some(label));
            }
            assert_eq!(kind.label_of(kind.delta()), None);
            assert_eq!(kind.label_of(RootVector::ZERO), None);
        }
    }

    #[test]
    fn reflections_permute_roots() {
        for kind in AlgebraKind::ALL {
            for i in Node::ALL {
                for (label, v) in kind.positive_real_roots(RootVector::new(6, 12)) {
                    let w = kind.simple_reflection(i, v);
                    if label == i.simple_label() {
                        assert_eq!(w, -v);
                    } else {
                        assert!(kind.label_of(w).is_some(), "{kind} s{i}({v}) = {w}");
                    }
                }
            }
        }
    }

    #[test]
    fn embedding_makes_delta_vertical() {
        for kind in AlgebraKind::ALL {
            assert_eq!(kind.embed(kind.delta()).0, 0);
            assert_eq!(kind.embed(A1), (1, 1));
        }
        assert_eq!(Sl2Hat.embed(A0), (-1, 1));
        assert_eq!(A22.embed(A0), (-2, 2));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn vec() -> impl Strategy<Value = RootVector> {
            (-50i64..50, -50i64..50).prop_map(|(a, b)| RootVector::new(a, b))
        }

        fn kind() -> impl Strategy<Value = AlgebraKind> {
            prop_oneof![Just(Sl2Hat), Just(A22)]
        }

        proptest! {
            #[test]
            fn form_is_symmetric_bilinear(k in kind(), u in vec(), v in vec(), w in vec(), c in -5i64..5) {
                prop_assert_eq!(k.symmetrized_form(u, v), k.symmetrized_form(v, u));
                prop_assert_eq!(
                    k.symmetrized_form(u * c + v, w),
                    c * k.symmetrized_form(u, w) + k.symmetrized_form(v, w)
                );
            }

            #[test]
            fn reflection_is_involution(k in kind(), v in vec()) {
                for i in Node::ALL {
                    prop_assert_eq!(k.simple_reflection(i, k.simple_reflection(i, v)), v);
                    prop_assert_eq!(
                        k.symmetrized_form(k.simple_reflection(i, v), k.simple_reflection(i, v)),
                        k.symmetrized_form(v, v)
                    );
                }
            }

            #[test]
            fn cartan_pair_is_linear(k in kind(), u in vec(), v in vec()) {
                for i in Node::ALL {
                    prop_assert_eq!(k.cartan_pair(i, u + v), k.cartan_pair(i, u) + k.cartan_pair(i, v));
                }
            }
        }
    }
}
