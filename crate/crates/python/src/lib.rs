//! Python bindings: data, polytopes, the crystal operators and the
//! verification suites.
//!
//! Algebras are named by strings (`"sl2hat"`, `"a2(2)"`), root labels by
//! `(family, k)` with family `"low"` or `"high"`, and operator nodes by the
//! integers 0 and 1.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use mvpoly::document;
use mvpoly::render::{self, Format};
use mvpoly::verify;
use mvpoly::{
    AlgebraKind, Crystal as CoreCrystal, CrystalElement, DecoratedPolytope, Error, Family,
    LusztigDatum, Node, Op, Partition, RealRoot, RootVector, Side, Solver,
};
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

fn to_py(e: Error) -> PyErr {
    if e.is_internal() {
        PyRuntimeError::new_err(e.to_string())
    } else {
        PyValueError::new_err(e.to_string())
    }
}

fn kind_of(name: &str) -> PyResult<AlgebraKind> {
    AlgebraKind::from_name(name)
        .ok_or_else(|| PyValueError::new_err(format!("unknown algebra {name:?}")))
}

fn family_of(name: &str) -> PyResult<Family> {
    match name {
        "low" => Ok(Family::Low),
        "high" => Ok(Family::High),
        _ => Err(PyValueError::new_err(format!(
            "family must be \"low\" or \"high\", got {name:?}"
        ))),
    }
}

fn node_of(i: u8) -> PyResult<Node> {
    Node::from_index(usize::from(i))
        .ok_or_else(|| PyValueError::new_err(format!("node must be 0 or 1, got {i}")))
}

fn family_name(f: Family) -> &'static str {
    match f {
        Family::Low => "low",
        Family::High => "high",
    }
}

fn hash_of(x: &impl Hash) -> u64 {
    let mut h = DefaultHasher::new();
    x.hash(&mut h);
    h.finish()
}

/// A Lusztig datum: real-root multiplicities plus a partition on `δ`.
#[pyclass(module = "pymvpoly", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct Datum {
    inner: LusztigDatum,
}

#[pymethods]
impl Datum {
    #[new]
    #[pyo3(signature = (algebra, real = Vec::new(), delta = Vec::new()))]
    fn new(algebra: &str, real: Vec<(String, u32, u32)>, delta: Vec<u32>) -> PyResult<Self> {
        let kind = kind_of(algebra)?;
        let mut entries = Vec::new();
        for (fam, k, m) in real {
            if m == 0 {
                return Err(PyValueError::new_err("multiplicities must be positive"));
            }
            entries.push((
                RealRoot {
                    family: family_of(&fam)?,
                    k,
                },
                m,
            ));
        }
        let delta = Partition::new(delta).map_err(to_py)?;
        Ok(Datum {
            inner: LusztigDatum::new(kind, entries, delta).map_err(to_py)?,
        })
    }

    /// The purely imaginary datum `{δ: λ}`.
    #[staticmethod]
    fn imaginary(algebra: &str, delta: Vec<u32>) -> PyResult<Self> {
        let lambda = Partition::new(delta).map_err(to_py)?;
        Ok(Datum {
            inner: LusztigDatum::imaginary(kind_of(algebra)?, lambda),
        })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(Datum {
            inner: document::parse_datum(text).map_err(to_py)?,
        })
    }

    fn to_json(&self) -> String {
        document::datum_to_json(&self.inner)
    }

    #[getter]
    fn algebra(&self) -> &'static str {
        self.inner.kind().name()
    }

    /// `(family, k, multiplicity)` triples in canonical order.
    #[getter]
    fn real(&self) -> Vec<(&'static str, u32, u32)> {
        self.inner
            .real_entries()
            .map(|(l, m)| (family_name(l.family), l.k, m))
            .collect()
    }

    #[getter]
    fn delta(&self) -> Vec<u32> {
        self.inner.delta().parts().to_vec()
    }

    fn mult(&self, family: &str, k: u32) -> PyResult<u32> {
        Ok(self.inner.mult(RealRoot {
            family: family_of(family)?,
            k,
        }))
    }

    /// Weight `(a, b)` meaning `a·α₀ + b·α₁`.
    fn weight(&self) -> (i64, i64) {
        let w = self.inner.weight();
        (w.a, w.b)
    }

    fn __eq__(&self, other: &Datum) -> bool {
        self.inner == other.inner
    }

    fn __hash__(&self) -> u64 {
        hash_of(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!("Datum({}, {})", self.inner.kind(), self.inner)
    }
}

/// A decorated pseudo-Weyl polytope given by its two Lusztig data.
#[pyclass(module = "pymvpoly", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct Polytope {
    inner: DecoratedPolytope,
}

#[pymethods]
impl Polytope {
    #[new]
    fn new(left: &Datum, right: &Datum) -> PyResult<Self> {
        if left.inner.kind() != right.inner.kind() {
            return Err(to_py(Error::KindMismatch(
                left.inner.kind(),
                right.inner.kind(),
            )));
        }
        let inner =
            DecoratedPolytope::new(left.inner.clone(), right.inner.clone()).map_err(to_py)?;
        Ok(Polytope { inner })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(Polytope {
            inner: document::parse_polytope(text).map_err(to_py)?,
        })
    }

    fn to_json(&self) -> String {
        document::polytope_to_json(&self.inner)
    }

    #[getter]
    fn left(&self) -> Datum {
        Datum {
            inner: self.inner.left().clone(),
        }
    }

    #[getter]
    fn right(&self) -> Datum {
        Datum {
            inner: self.inner.right().clone(),
        }
    }

    fn weight(&self) -> (i64, i64) {
        let w = self.inner.weight();
        (w.a, w.b)
    }

    fn is_mv(&self) -> bool {
        self.inner.is_mv().passes()
    }

    /// Failed MV conditions as `(condition, k)`; `k` is `None` for the
    /// partition conditions.
    fn violations(&self) -> Vec<(u8, Option<u32>)> {
        self.inner
            .is_mv()
            .violations
            .iter()
            .map(|v| (v.condition, v.k))
            .collect()
    }

    /// Boundary polygon in cyclic order, as root-lattice points.
    fn boundary(&self) -> Vec<(i64, i64)> {
        self.inner
            .boundary()
            .into_iter()
            .map(|v| (v.a, v.b))
            .collect()
    }

    fn is_convex(&self) -> bool {
        self.inner.is_convex()
    }

    /// `"svg"` or `"tikz"`.
    #[pyo3(signature = (format = "svg"))]
    fn render(&self, format: &str) -> PyResult<String> {
        let f = Format::parse(format)
            .ok_or_else(|| PyValueError::new_err(format!("unknown format {format:?}")))?;
        Ok(render::render(&self.inner, f))
    }

    fn __eq__(&self, other: &Polytope) -> bool {
        self.inner == other.inner
    }

    fn __hash__(&self) -> u64 {
        hash_of(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!("Polytope({})", self.inner)
    }
}

#[pyfunction]
fn complete_from_left(left: &Datum) -> PyResult<Polytope> {
    Ok(Polytope {
        inner: mvpoly::complete_from_left(&left.inner).map_err(to_py)?,
    })
}

#[pyfunction]
fn complete_from_right(right: &Datum) -> PyResult<Polytope> {
    Ok(Polytope {
        inner: mvpoly::complete_from_right(&right.inner).map_err(to_py)?,
    })
}

/// All MV completions by brute force over every datum of the same weight.
#[pyfunction]
fn all_completions(datum: &Datum, side: &str) -> PyResult<Vec<Datum>> {
    let side = match side {
        "left" => Side::Left,
        "right" => Side::Right,
        _ => return Err(PyValueError::new_err("side must be \"left\" or \"right\"")),
    };
    Ok(mvpoly::transition::generate_and_test(side, &datum.inner)
        .into_iter()
        .map(|inner| Datum { inner })
        .collect())
}

/// The crystal `B(−∞)` with MV polytopes as elements.
#[pyclass(module = "pymvpoly", frozen)]
pub struct Crystal {
    inner: CoreCrystal,
}

impl Crystal {
    fn element(&self, p: &Polytope) -> PyResult<CrystalElement> {
        if p.inner.kind() != self.inner.kind() {
            return Err(to_py(Error::KindMismatch(
                self.inner.kind(),
                p.inner.kind(),
            )));
        }
        CrystalElement::from_polytope(p.inner.clone()).map_err(to_py)
    }

    fn wrap(b: CrystalElement) -> Polytope {
        Polytope {
            inner: b.polytope().clone(),
        }
    }
}

#[pymethods]
impl Crystal {
    #[new]
    fn new(algebra: &str) -> PyResult<Self> {
        Ok(Crystal {
            inner: CoreCrystal::with_solver(kind_of(algebra)?, Solver::fast()),
        })
    }

    #[getter]
    fn algebra(&self) -> &'static str {
        self.inner.kind().name()
    }

    fn lowest(&self) -> Polytope {
        Self::wrap(self.inner.lowest())
    }

    #[allow(clippy::wrong_self_convention)]
    fn from_left(&self, left: &Datum) -> PyResult<Polytope> {
        self.inner
            .from_left(&left.inner)
            .map(Self::wrap)
            .map_err(to_py)
    }

    #[allow(clippy::wrong_self_convention)]
    fn from_right(&self, right: &Datum) -> PyResult<Polytope> {
        self.inner
            .from_right(&right.inner)
            .map(Self::wrap)
            .map_err(to_py)
    }

    fn e(&self, i: u8, b: &Polytope) -> PyResult<Polytope> {
        self.inner
            .e(node_of(i)?, &self.element(b)?)
            .map(Self::wrap)
            .map_err(to_py)
    }

    /// `None` when the result is the empty element.
    fn f(&self, i: u8, b: &Polytope) -> PyResult<Option<Polytope>> {
        Ok(self
            .inner
            .f(node_of(i)?, &self.element(b)?)
            .map_err(to_py)?
            .map(Self::wrap))
    }

    fn e_star(&self, i: u8, b: &Polytope) -> PyResult<Polytope> {
        self.inner
            .e_star(node_of(i)?, &self.element(b)?)
            .map(Self::wrap)
            .map_err(to_py)
    }

    fn f_star(&self, i: u8, b: &Polytope) -> PyResult<Option<Polytope>> {
        Ok(self
            .inner
            .f_star(node_of(i)?, &self.element(b)?)
            .map_err(to_py)?
            .map(Self::wrap))
    }

    fn phi(&self, i: u8, b: &Polytope) -> PyResult<u32> {
        Ok(self.inner.phi(node_of(i)?, &self.element(b)?))
    }

    fn phi_star(&self, i: u8, b: &Polytope) -> PyResult<u32> {
        Ok(self.inner.phi_star(node_of(i)?, &self.element(b)?))
    }

    fn eps(&self, i: u8, b: &Polytope) -> PyResult<i64> {
        Ok(self.inner.eps(node_of(i)?, &self.element(b)?))
    }

    fn eps_star(&self, i: u8, b: &Polytope) -> PyResult<i64> {
        Ok(self.inner.eps_star(node_of(i)?, &self.element(b)?))
    }

    fn star(&self, b: &Polytope) -> PyResult<Polytope> {
        Ok(Self::wrap(self.inner.star(&self.element(b)?)))
    }

    fn tau(&self, b: &Polytope) -> PyResult<Polytope> {
        self.inner
            .tau(&self.element(b)?)
            .map(Self::wrap)
            .map_err(to_py)
    }

    fn saito(&self, i: u8, b: &Polytope) -> PyResult<Polytope> {
        self.inner
            .saito(node_of(i)?, &self.element(b)?)
            .map(Self::wrap)
            .map_err(to_py)
    }

    fn saito_star(&self, i: u8, b: &Polytope) -> PyResult<Polytope> {
        self.inner
            .saito_star(node_of(i)?, &self.element(b)?)
            .map(Self::wrap)
            .map_err(to_py)
    }

    /// Applies a whitespace-separated operator word left to right, starting
    /// from `start` or the lowest element.
    #[pyo3(signature = (word, start = None))]
    fn apply(&self, word: &str, start: Option<&Polytope>) -> PyResult<Polytope> {
        let ops = word
            .split_whitespace()
            .enumerate()
            .map(|(i, t)| {
                Op::parse(t).ok_or_else(|| {
                    PyValueError::new_err(format!("token {i}: unknown operator {t:?}"))
                })
            })
            .collect::<PyResult<Vec<Op>>>()?;
        let b = match start {
            Some(p) => self.element(p)?,
            None => self.inner.lowest(),
        };
        match self.inner.apply_word(&ops, &b) {
            Ok(out) => Ok(Self::wrap(out)),
            Err(e) if e.error.as_ref().is_some_and(Error::is_internal) => {
                Err(PyRuntimeError::new_err(e.to_string()))
            }
            Err(e) => Err(PyValueError::new_err(e.to_string())),
        }
    }

    /// Crystal graph up to `depth` raising steps, as DOT text.
    fn graph_dot(&self, depth: u32) -> PyResult<String> {
        let g = self.inner.graph(depth).map_err(to_py)?;
        Ok(document::graph_to_dot(&g))
    }
}

/// Runs one verification suite and returns `(passed, report_json)`.
///
/// Suites: uniqueness, solver, polytopes (take `box`), axioms, star, saito,
/// crystal (take `depth`), imaginary (takes `max_imaginary`).
#[pyfunction]
#[pyo3(signature = (suite, algebra, r#box = (2, 2), depth = 3, slack = 2, max_imaginary = 4))]
fn run_verify(
    suite: &str,
    algebra: &str,
    r#box: (i64, i64),
    depth: u32,
    slack: u32,
    max_imaginary: u32,
) -> PyResult<(bool, String)> {
    let kind = kind_of(algebra)?;
    let bx = RootVector::new(r#box.0, r#box.1);
    let report = match suite {
        "uniqueness" => verify::check_uniqueness(kind, bx),
        "solver" => verify::check_solver_equivalence(kind, bx),
        "polytopes" => verify::check_polytope_properties(kind, bx),
        "axioms" => verify::check_axioms(kind, depth, max_imaginary).map_err(to_py)?,
        "star" => verify::check_star_negation(kind, depth).map_err(to_py)?,
        "saito" => verify::check_saito_formulas(kind, depth, slack).map_err(to_py)?,
        "crystal" => verify::check_crystal_axioms(kind, depth).map_err(to_py)?,
        "imaginary" => verify::check_imaginary_family(kind, max_imaginary).map_err(to_py)?,
        other => return Err(PyValueError::new_err(format!("unknown suite {other:?}"))),
    };
    Ok((report.passed(), report.to_json()))
}

#[pymodule]
pub fn pymvpoly(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Datum>()?;
    m.add_class::<Polytope>()?;
    m.add_class::<Crystal>()?;
    m.add_function(wrap_pyfunction!(complete_from_left, m)?)?;
    m.add_function(wrap_pyfunction!(complete_from_right, m)?)?;
    m.add_function(wrap_pyfunction!(all_completions, m)?)?;
    m.add_function(wrap_pyfunction!(run_verify, m)?)?;
    Ok(())
}
