//! JSON documents for data, polytopes and crystal graphs.
//!
//! A datum document looks like
//!
//! ```json
//! {"algebra": "sl2hat", "real": [{"family": "low", "k": 1, "mult": 2}], "delta": [3, 1]}
//! ```
//!
//! Real entries are written low family first, then by ascending `k`, so
//! serialization is canonical and `parse ∘ serialize` is the identity.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::crystal::{CrystalElement, CrystalGraph};
use crate::error::{Error, Result};
use crate::lusztig::{LusztigDatum, Partition};
use crate::polytope::{DecoratedPolytope, Violation};
use crate::root_data::{AlgebraKind, Family, RealRoot, RootVector};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RealEntry {
    pub family: Family,
    pub k: u32,
    pub mult: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DatumDoc {
    pub algebra: AlgebraKind,
    #[serde(default)]
    pub real: Vec<RealEntry>,
    #[serde(default)]
    pub delta: Vec<u32>,
}

impl DatumDoc {
    pub fn from_datum(d: &LusztigDatum) -> Self {
        DatumDoc {
            algebra: d.kind(),
            real: d
                .real_entries()
                .map(|(label, mult)| RealEntry {
                    family: label.family,
                    k: label.k,
                    mult,
                })
                .collect(),
            delta: d.delta().parts().to_vec(),
        }
    }

    /// Rejects `k = 0`, zero multiplicities, repeated labels and
    /// non-canonical partitions.
    pub fn to_datum(&self) -> Result<LusztigDatum> {
        let mut seen = BTreeSet::new();
        for e in &self.real {
            if e.k == 0 {
                return Err(Error::InvalidDatum(format!(
                    "{:?} root with k = 0",
                    e.family
                )));
            }
            if e.mult == 0 {
                return Err(Error::InvalidDatum(format!(
                    "zero multiplicity at {}",
                    RealRoot {
                        family: e.family,
                        k: e.k
                    }
                )));
            }
            if !seen.insert((e.family, e.k)) {
                return Err(Error::InvalidDatum(format!(
                    "repeated entry {}",
                    RealRoot {
                        family: e.family,
                        k: e.k
                    }
                )));
            }
        }
        let delta = Partition::new(self.delta.clone())?;
        LusztigDatum::new(
            self.algebra,
            self.real.iter().map(|e| {
                (
                    RealRoot {
                        family: e.family,
                        k: e.k,
                    },
                    e.mult,
                )
            }),
            delta,
        )
    }
}

/// Vertex paths in cyclic order: the right path climbs from `0` to `wt`
/// through the right δ-edge, the left path likewise on the other side.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PathsDoc {
    pub right: Vec<[i64; 2]>,
    pub left: Vec<[i64; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolytopeDoc {
    pub left: DatumDoc,
    pub right: DatumDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight: Option<[i64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mv: Option<bool>,
    #[serde(default)]
    pub violations: Vec<Violation>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub paths: Option<PathsDoc>,
}

fn pair(v: RootVector) -> [i64; 2] {
    [v.a, v.b]
}

fn dedup_path(points: impl Iterator<Item = RootVector>) -> Vec<[i64; 2]> {
    let mut out: Vec<[i64; 2]> = Vec::new();
    for p in points.map(pair) {
        if out.last() != Some(&p) {
            out.push(p);
        }
    }
    out
}

impl PolytopeDoc {
    /// Full document: data, weight, verdict and vertex paths.
    pub fn from_polytope(p: &DecoratedPolytope) -> Self {
        let verdict = p.is_mv();
        let fan = p.vertices();
        PolytopeDoc {
            left: DatumDoc::from_datum(p.left()),
            right: DatumDoc::from_datum(p.right()),
            weight: Some(pair(p.weight())),
            mv: Some(verdict.passes()),
            violations: verdict.violations,
            paths: Some(PathsDoc {
                right: dedup_path(fan.mu_r.iter().chain(fan.mu_r_top.iter().rev()).copied()),
                left: dedup_path(fan.mu_l.iter().chain(fan.mu_l_top.iter().rev()).copied()),
            }),
        }
    }

    /// The polytope described by the two data. A stated weight must match.
    /// The verdict fields are derived data and are ignored on input.
    pub fn to_polytope(&self) -> Result<DecoratedPolytope> {
        let left = self.left.to_datum()?;
        let right = self.right.to_datum()?;
        if left.kind() != right.kind() {
            return Err(Error::KindMismatch(left.kind(), right.kind()));
        }
        let p = DecoratedPolytope::new(left, right)?;
        if let Some([a, b]) = self.weight {
            if RootVector::new(a, b) != p.weight() {
                return Err(Error::InvalidDatum(format!(
                    "stated weight ({a}, {b}) differs from the data's weight {}",
                    p.weight()
                )));
            }
        }
        Ok(p)
    }
}

fn parse_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("documents serialize")
}

pub fn parse_datum(text: &str) -> Result<LusztigDatum> {
    parse_json::<DatumDoc>(text)?.to_datum()
}

pub fn datum_to_json(d: &LusztigDatum) -> String {
    to_json(&DatumDoc::from_datum(d))
}

pub fn parse_polytope(text: &str) -> Result<DecoratedPolytope> {
    parse_json::<PolytopeDoc>(text)?.to_polytope()
}

pub fn polytope_to_json(p: &DecoratedPolytope) -> String {
    to_json(&PolytopeDoc::from_polytope(p))
}

/// Reads either a datum or a polytope document, telling them apart by the
/// presence of an `algebra` key at the top level.
pub enum AnyDoc {
    Datum(LusztigDatum),
    Polytope(DecoratedPolytope),
}

pub fn parse_any(text: &str) -> Result<AnyDoc> {
    let value: serde_json::Value = parse_json(text)?;
    if value.get("algebra").is_some() {
        Ok(AnyDoc::Datum(parse_datum(text)?))
    } else {
        Ok(AnyDoc::Polytope(parse_polytope(text)?))
    }
}

/// Canonical one-line name of an element, used as a DOT node id.
pub fn node_id(b: &CrystalElement) -> String {
    let w = b.weight();
    format!("{} wt=({},{})", b.right(), w.a, w.b)
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// DOT digraph with nodes and edges in canonical order.
pub fn graph_to_dot(g: &CrystalGraph) -> String {
    let order = g.canonical_order();
    let mut out = String::new();
    writeln!(out, "digraph \"B(-inf) {} depth {}\" {{", g.kind, g.depth).unwrap();
    writeln!(out, "  node [shape=box, fontname=\"monospace\"];").unwrap();
    for &i in &order {
        let id = dot_escape(&node_id(&g.nodes[i]));
        writeln!(out, "  \"{id}\";").unwrap();
    }
    let rank: Vec<usize> = {
        let mut r = vec![0; order.len()];
        for (pos, &i) in order.iter().enumerate() {
            r[i] = pos;
        }
        r
    };
    let mut edges: Vec<_> = g.edges.iter().collect();
    edges.sort_by_key(|e| (rank[e.from], rank[e.to], e.op.to_string()));
    for e in edges {
        writeln!(
            out,
            "  \"{}\" -> \"{}\" [label=\"{}\"];",
            dot_escape(&node_id(&g.nodes[e.from])),
            dot_escape(&node_id(&g.nodes[e.to])),
            e.op
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::Crystal;

    #[test]
    fn datum_round_trip() {
        let text = r#"{"algebra":"sl2hat","real":[{"family":"high","k":2,"mult":1},{"family":"low","k":1,"mult":3}],"delta":[2,1]}"#;
        let d = parse_datum(text).unwrap();
        assert_eq!(d.weight(), RootVector::new(5, 7));
        let json = datum_to_json(&d);
        let doc: DatumDoc = serde_json::from_str(&json).unwrap();
        assert_eq!(doc.real[0].family, Family::Low);
        assert_eq!(parse_datum(&json).unwrap(), d);
        assert_eq!(datum_to_json(&parse_datum(&json).unwrap()), json);
    }

    #[test]
    fn datum_rejections() {
        let bad = [
            r#"{"algebra":"sl2hat","real":[],"delta":[1,2]}"#,
            r#"{"algebra":"sl2hat","real":[{"family":"low","k":1,"mult":0}],"delta":[]}"#,
            r#"{"algebra":"sl2hat","real":[{"family":"low","k":0,"mult":1}],"delta":[]}"#,
            r#"{"algebra":"sl2hat","real":[{"family":"low","k":1,"mult":1},{"family":"low","k":1,"mult":2}]}"#,
            r#"{"algebra":"sl2hat","delta":[0]}"#,
            r#"{"algebra":"sl2hat","extra":1}"#,
            r#"{"algebra":"b2(1)"}"#,
            r#"{"algebra":"sl2hat","real":[{"family":"mid","k":1,"mult":1}]}"#,
            r#"not json"#,
        ];
        for text in bad {
            assert!(parse_datum(text).is_err(), "{text}");
        }
    }

    #[test]
    fn polytope_round_trip_and_weight_check() {
        let p = crate::polytope::tests::big_example();
        let json = polytope_to_json(&p);
        assert_eq!(parse_polytope(&json).unwrap(), p);
        let doc = PolytopeDoc::from_polytope(&p);
        assert_eq!(doc.weight, Some([20, 22]));
        assert_eq!(doc.mv, Some(true));
        let paths = doc.paths.unwrap();
        assert_eq!(paths.right.first(), Some(&[0, 0]));
        assert_eq!(paths.right.last(), Some(&[20, 22]));
        assert_eq!(paths.left.last(), Some(&[20, 22]));

        let mismatched =
            r#"{"left":{"algebra":"sl2hat","delta":[1]},"right":{"algebra":"sl2hat"}}"#;
        assert!(matches!(
            parse_polytope(mismatched),
            Err(Error::WeightMismatch { .. })
        ));
        let stated = r#"{"left":{"algebra":"sl2hat"},"right":{"algebra":"sl2hat"},"weight":[1,1]}"#;
        assert!(parse_polytope(stated).is_err());
    }

    #[test]
    fn any_doc_dispatch() {
        assert!(matches!(
            parse_any(r#"{"algebra":"a2(2)"}"#),
            Ok(AnyDoc::Datum(_))
        ));
        let p = r#"{"left":{"algebra":"a2(2)"},"right":{"algebra":"a2(2)"}}"#;
        assert!(matches!(parse_any(p), Ok(AnyDoc::Polytope(_))));
    }

    #[test]
    fn dot_is_stable() {
        let c = Crystal::new(AlgebraKind::Sl2Hat);
        let g = c.graph(1).unwrap();
        let a = graph_to_dot(&g);
        assert_eq!(a, graph_to_dot(&c.graph(1).unwrap()));
        assert_eq!(a.matches(" -> ").count(), 4);
        assert!(a.contains("\"{d:()} wt=(0,0)\";"));
    }
}
