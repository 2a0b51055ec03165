//! Completing a one-sided Lusztig datum to its unique MV polytope.
//!
//! Two interchangeable strategies are provided. [`Strategy::GenerateAndTest`]
//! runs the MV check against every datum of the right weight and is the
//! reference. [`Strategy::Pruned`] builds the unknown datum level by level
//! (label `k` on both families at once), abandoning a branch as soon as a
//! diagonal condition at a settled `k` fails. Both assert that exactly one
//! completion exists.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lusztig::{enumerate_data, LusztigDatum, Partition};
use crate::polytope::{diagonal_bottom, diagonal_top, DecoratedPolytope, VertexFan};
use crate::root_data::{Family, RealRoot, RootVector};

/// Which side of the polytope a datum sits on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Strategy {
    GenerateAndTest,
    Pruned,
}

/// A completion engine with a memo table keyed by `(side, datum)`.
///
/// The table only ever stores verified unique completions, so concurrent
/// writers racing on the same key insert identical values.
#[derive(Debug)]
pub struct Solver {
    strategy: Strategy,
    imaginary_shortcut: bool,
    cache: RwLock<HashMap<(Side, LusztigDatum), LusztigDatum>>,
}

impl Solver {
    pub fn new(strategy: Strategy) -> Self {
        Solver {
            strategy,
            imaginary_shortcut: false,
            cache: RwLock::new(HashMap::new()),
        }
    }

    /// Pruned search that answers purely imaginary left input with the
    /// trapezoid (and purely imaginary right input with its mirror) directly.
    pub fn fast() -> Self {
        Solver {
            imaginary_shortcut: true,
            ..Solver::new(Strategy::Pruned)
        }
    }

    pub fn oracle() -> Self {
        Solver::new(Strategy::GenerateAndTest)
    }

    pub fn strategy(&self) -> Strategy {
        self.strategy
    }

    pub fn cached_entries(&self) -> usize {
        self.cache.read().expect("cache lock poisoned").len()
    }

    /// The polytope whose datum on `side` is `datum`.
    pub fn complete(&self, side: Side, datum: &LusztigDatum) -> Result<DecoratedPolytope> {
        let key = (side, datum.clone());
        if let Some(other) = self.cache.read().expect("cache lock poisoned").get(&key) {
            return Ok(assemble(side, datum.clone(), other.clone()));
        }
        let other = self.solve(side, datum)?;
        self.cache
            .write()
            .expect("cache lock poisoned")
            .entry(key)
            .or_insert_with(|| other.clone());
        Ok(assemble(side, datum.clone(), other))
    }

    pub fn complete_from_left(&self, left: &LusztigDatum) -> Result<DecoratedPolytope> {
        self.complete(Side::Left, left)
    }

    pub fn complete_from_right(&self, right: &LusztigDatum) -> Result<DecoratedPolytope> {
        self.complete(Side::Right, right)
    }

    pub fn left_to_right(&self, left: &LusztigDatum) -> Result<LusztigDatum> {
        Ok(self.complete_from_left(left)?.into_data().1)
    }

    pub fn right_to_left(&self, right: &LusztigDatum) -> Result<LusztigDatum> {
        Ok(self.complete_from_right(right)?.into_data().0)
    }

    fn solve(&self, side: Side, datum: &LusztigDatum) -> Result<LusztigDatum> {
        if self.imaginary_shortcut && datum.is_purely_imaginary() {
            let other = LusztigDatum::trapezoid(datum.kind(), datum.delta());
            let poly = assemble(side, datum.clone(), other.clone());
            if poly.is_mv().passes() {
                return Ok(other);
            }
        }
        let found = match self.strategy {
            Strategy::GenerateAndTest => generate_and_test(side, datum),
            Strategy::Pruned => pruned_search(side, datum),
        };
        unique(side, datum, found)
    }
}

impl Default for Solver {
    fn default() -> Self {
        Solver::fast()
    }
}

fn assemble(side: Side, datum: LusztigDatum, other: LusztigDatum) -> DecoratedPolytope {
    let (left, right) = match side {
        Side::Left => (datum, other),
        Side::Right => (other, datum),
    };
    DecoratedPolytope::new(left, right).expect("completions have equal weight")
}

fn unique(side: Side, datum: &LusztigDatum, mut found: Vec<LusztigDatum>) -> Result<LusztigDatum> {
    match found.len() {
        1 => Ok(found.pop().expect("length checked")),
        0 => Err(Error::InternalNoSolution {
            side,
            datum: datum.to_string(),
        }),
        count => Err(Error::InternalMultipleSolutions {
            side,
            datum: datum.to_string(),
            count,
        }),
    }
}

/// Every datum of the same weight that completes `datum` (on `side`) to an
/// MV polytope, by brute force.
pub fn generate_and_test(side: Side, datum: &LusztigDatum) -> Vec<LusztigDatum> {
    enumerate_data(datum.kind(), datum.weight())
        .into_iter()
        .filter(|other| {
            assemble(side, datum.clone(), other.clone())
                .is_mv()
                .passes()
        })
        .collect()
}

/// Every MV completion of `datum`, by depth-first search over the unknown
/// side's multiplicities.
pub fn pruned_search(side: Side, datum: &LusztigDatum) -> Vec<LusztigDatum> {
    let kind = datum.kind();
    let weight = datum.weight();
    let k_max = kind.max_label(weight.a);
    let known = DecoratedPolytope::new(datum.clone(), datum.clone())
        .expect("a datum pairs with itself")
        .vertices_through(k_max + 1);
    // Known paths are final; the unknown ones start at their base vertices
    // and grow one label per level.
    let fan = match side {
        Side::Left => VertexFan {
            mu_r: vec![RootVector::ZERO],
            mu_r_top: vec![weight],
            mu_l: known.mu_l,
            mu_l_top: known.mu_l_top,
        },
        Side::Right => VertexFan {
            mu_r: known.mu_r,
            mu_r_top: known.mu_r_top,
            mu_l: vec![RootVector::ZERO],
            mu_l_top: vec![weight],
        },
    };
    let mut search = Search {
        side,
        known: datum,
        k_max,
        fan,
        chosen: LusztigDatum::zero(kind),
        found: Vec::new(),
    };
    search.descend(1, weight);
    search.found
}

struct Search<'a> {
    side: Side,
    known: &'a LusztigDatum,
    k_max: u32,
    fan: VertexFan,
    chosen: LusztigDatum,
    found: Vec<LusztigDatum>,
}

impl Search<'_> {
    /// Unknown-side paths: (bottom-up, top-down).
    fn paths(&mut self) -> (&mut Vec<RootVector>, &mut Vec<RootVector>) {
        match self.side {
            Side::Left => (&mut self.fan.mu_r, &mut self.fan.mu_r_top),
            Side::Right => (&mut self.fan.mu_l, &mut self.fan.mu_l_top),
        }
    }

    /// Family walked bottom-up (resp. top-down) on the unknown side.
    fn families(&self) -> (Family, Family) {
        match self.side {
            Side::Left => (Family::Low, Family::High),
            Side::Right => (Family::High, Family::Low),
        }
    }

    fn descend(&mut self, k: u32, residual: RootVector) {
        if k > self.k_max {
            self.finish(residual);
            return;
        }
        let kind = self.known.kind();
        let (up_family, down_family) = self.families();
        let up_root = kind.root(RealRoot {
            family: up_family,
            k,
        });
        let down_root = kind.root(RealRoot {
            family: down_family,
            k,
        });

        let mut after_up = residual;
        let mut m_up = 0u32;
        while after_up.is_nonnegative() {
            let (up, _) = self.paths();
            let base = up[k as usize - 1];
            up.push(base + up_root * i64::from(m_up));
            // The top diagonal value is nondecreasing in m_up.
            let top = if k >= 2 {
                diagonal_top(&self.fan, k)
            } else {
                0
            };
            if top > 0 {
                self.paths().0.pop();
                break;
            }
            let mut after_down = after_up;
            let mut m_down = 0u32;
            while after_down.is_nonnegative() {
                let (_, down) = self.paths();
                let base = down[k as usize - 1];
                down.push(base - down_root * i64::from(m_down));
                // The bottom diagonal value is nonincreasing in m_down.
                let bottom = if k >= 2 {
                    diagonal_bottom(&self.fan, k)
                } else {
                    0
                };
                if bottom < 0 {
                    self.paths().1.pop();
                    break;
                }
                if top == 0 && bottom == 0 {
                    self.chosen.set_mult(
                        RealRoot {
                            family: up_family,
                            k,
                        },
                        m_up,
                    );
                    self.chosen.set_mult(
                        RealRoot {
                            family: down_family,
                            k,
                        },
                        m_down,
                    );
                    self.descend(k + 1, after_down);
                }
                self.paths().1.pop();
                after_down -= down_root;
                m_down += 1;
            }
            self.chosen.set_mult(
                RealRoot {
                    family: up_family,
                    k,
                },
                0,
            );
            self.chosen.set_mult(
                RealRoot {
                    family: down_family,
                    k,
                },
                0,
            );
            self.paths().0.pop();
            after_up -= up_root;
            m_up += 1;
        }
    }

    fn finish(&mut self, residual: RootVector) {
        let kind = self.known.kind();
        let Some(n) = residual.multiple_of(kind.delta()) else {
            return;
        };
        let n = n as u32;
        let known_delta = self.known.delta();
        let size = known_delta.size();
        // The δ-partitions either agree or differ by a single part.
        let candidate: Option<Partition> = if n == size {
            Some(known_delta.clone())
        } else if n > size {
            Some(known_delta.insert_part(n - size))
        } else {
            known_delta.remove_part(size - n).ok()
        };
        let Some(delta) = candidate else { return };
        let mut other = self.chosen.clone();
        other.set_delta(delta);
        if assemble(self.side, self.known.clone(), other.clone())
            .is_mv()
            .passes()
        {
            self.found.push(other);
        }
    }
}

fn default_solver() -> &'static Solver {
    static SOLVER: OnceLock<Solver> = OnceLock::new();
    SOLVER.get_or_init(Solver::fast)
}

/// The unique MV polytope with left datum `left`.
pub fn complete_from_left(left: &LusztigDatum) -> Result<DecoratedPolytope> {
    default_solver().complete_from_left(left)
}

/// The unique MV polytope with right datum `right`.
pub fn complete_from_right(right: &LusztigDatum) -> Result<DecoratedPolytope> {
    default_solver().complete_from_right(right)
}

pub fn transition_l_to_r(left: &LusztigDatum) -> Result<LusztigDatum> {
    default_solver().left_to_right(left)
}

pub fn transition_r_to_l(right: &LusztigDatum) -> Result<LusztigDatum> {
    default_solver().right_to_left(right)
}
