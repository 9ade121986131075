//! Text notation for orders and arc sets, and the JSON element schema.
//!
//! Orders are space-separated labels (`"6 1 4 9 2 5 3 7 8"`), arc sets are
//! comma-separated `i-j` pairs (`"1-9,9-2,3-8,6-4"`). Elements serialize as
//!
//! ```json
//! {"basis":"kappa","ground":[1,2],"terms":[{"order":[2,1],"arcs":[[2,1]],"coeff":"q-1"}]}
//! ```
//!
//! with terms sorted by (order, arcs).

use serde::{Deserialize, Serialize};

use crate::algebra::{Basis, HopfElement, Key, Tensor};
use crate::coeff::RationalQ;
use crate::combinatorics::{Arc, ArcSet, Label, LabelSet, LinearOrder};
use crate::error::{Result, ScfError};
use crate::pi::PiElement;

pub fn parse_order(s: &str) -> Result<LinearOrder> {
    let labels = s
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(parse_label)
        .collect::<Result<Vec<_>>>()?;
    LinearOrder::new(labels)
}

fn parse_label(t: &str) -> Result<Label> {
    let v: u8 = t.trim().parse().map_err(|_| ScfError::Parse(format!("bad label '{t}'")))?;
    if v == u8::MAX {
        return Err(ScfError::Parse(format!("label {v} out of range")));
    }
    Ok(Label(v))
}

/// Parse `"1-9,9-2"`; the empty string is the empty arc set.
pub fn parse_arcs(s: &str) -> Result<ArcSet> {
    let arcs = s
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            let (a, b) = t.split_once('-').ok_or_else(|| ScfError::Parse(format!("bad arc '{t}'")))?;
            Ok(Arc { left: parse_label(a)?, right: parse_label(b)? })
        })
        .collect::<Result<Vec<_>>>()?;
    ArcSet::new(arcs)
}

pub fn parse_key(order: &str, arcs: &str) -> Result<Key> {
    Key::new(parse_order(order)?, parse_arcs(arcs)?)
}

fn coeff_string(c: &RationalQ) -> String {
    c.render().replace(' ', "")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub order: Vec<u8>,
    pub arcs: Vec<[u8; 2]>,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementJson {
    pub basis: String,
    pub ground: Vec<u8>,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorJson {
    pub order: Vec<u8>,
    pub arcs: Vec<[u8; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorTermJson {
    pub factors: Vec<FactorJson>,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorJson {
    pub basis: String,
    pub terms: Vec<TensorTermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PiTermJson {
    pub arcs: Vec<[u8; 2]>,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PiElementJson {
    pub basis: String,
    pub degree: usize,
    pub terms: Vec<PiTermJson>,
}

fn arc_pairs(a: &ArcSet) -> Vec<[u8; 2]> {
    a.arcs().iter().map(|a| [a.left.0, a.right.0]).collect()
}

fn order_vec(o: &LinearOrder) -> Vec<u8> {
    o.labels().iter().map(|l| l.0).collect()
}

fn key_from_json(order: &[u8], arcs: &[[u8; 2]]) -> Result<Key> {
    let order = LinearOrder::new(order.iter().map(|&l| Label(l)))?;
    let arcs = ArcSet::new(arcs.iter().map(|&[i, j]| Arc::new(i, j)))?;
    Key::new(order, arcs)
}

impl From<&HopfElement> for ElementJson {
    fn from(x: &HopfElement) -> Self {
        ElementJson {
            basis: x.basis().name(),
            ground: x.ground().iter().map(|l| l.0).collect(),
            terms: x
                .terms()
                .iter()
                .map(|(k, c)| TermJson { order: order_vec(&k.order), arcs: arc_pairs(&k.arcs), coeff: coeff_string(c) })
                .collect(),
        }
    }
}

impl ElementJson {
    pub fn to_element(&self) -> Result<HopfElement> {
        let basis = Basis::from_name(&self.basis)?;
        let mut ground = LabelSet::empty();
        for &l in &self.ground {
            if !ground.insert(parse_label(&l.to_string())?) {
                return Err(ScfError::DuplicateLabel(l));
            }
        }
        let terms = self
            .terms
            .iter()
            .map(|t| Ok((key_from_json(&t.order, &t.arcs)?, RationalQ::parse(&t.coeff)?)))
            .collect::<Result<Vec<_>>>()?;
        HopfElement::from_terms(basis, ground, terms)
    }
}

impl From<&Tensor> for TensorJson {
    fn from(t: &Tensor) -> Self {
        TensorJson {
            basis: t.basis().name(),
            terms: t
                .terms()
                .iter()
                .map(|(ks, c)| TensorTermJson {
                    factors: ks.iter().map(|k| FactorJson { order: order_vec(&k.order), arcs: arc_pairs(&k.arcs) }).collect(),
                    coeff: coeff_string(c),
                })
                .collect(),
        }
    }
}

impl From<&PiElement> for PiElementJson {
    fn from(x: &PiElement) -> Self {
        PiElementJson {
            basis: x.basis.name(),
            degree: x.degree,
            terms: x.terms.iter().map(|(a, c)| PiTermJson { arcs: arc_pairs(a), coeff: coeff_string(c) }).collect(),
        }
    }
}

/// Canonical single-line JSON for an element.
pub fn element_to_json(x: &HopfElement) -> String {
    serde_json::to_string(&ElementJson::from(x)).expect("element serializes")
}

pub fn element_from_json(s: &str) -> Result<HopfElement> {
    let j: ElementJson = serde_json::from_str(s).map_err(|e| ScfError::Parse(e.to_string()))?;
    j.to_element()
}

pub fn tensor_to_json(t: &Tensor) -> String {
    serde_json::to_string(&TensorJson::from(t)).expect("tensor serializes")
}

pub fn pi_to_json(x: &PiElement) -> String {
    serde_json::to_string(&PiElementJson::from(x)).expect("pi element serializes")
}

/// Arc diagram as a list of `\arc{i}{j}` commands over the order.
pub fn latex_arc_diagram(key: &Key) -> String {
    let pos = key.order.positions();
    let mut out = String::from("\\begin{arcdiagram}{");
    out.push_str(&order_vec(&key.order).iter().map(|l| l.to_string()).collect::<Vec<_>>().join(","));
    out.push_str("}\n");
    for a in key.arcs.arcs() {
        out.push_str(&format!("  \\arc{{{}}}{{{}}} % {}-{}\n", pos.at(a.left) + 1, pos.at(a.right) + 1, a.left, a.right));
    }
    out.push_str("\\end{arcdiagram}");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_notation() {
        let o = parse_order("6 1 4 9 2 5 3 7 8").unwrap();
        assert_eq!(o.to_string(), "6 1 4 9 2 5 3 7 8");
        let a = parse_arcs("1-9,9-2,3-8,6-4").unwrap();
        assert_eq!(a.len(), 4);
        assert!(a.is_valid_for(&o));
        assert!(parse_arcs("").unwrap().is_empty());
        assert!(parse_arcs("1-2,1-3").is_err());
        assert!(parse_order("1 2 1").is_err());
        assert!(parse_order("1 x").is_err());
    }

    #[test]
    fn schema_example_round_trips() {
        let s = r#"{"basis":"kappa","ground":[1,2],"terms":[{"order":[2,1],"arcs":[[2,1]],"coeff":"q-1"}]}"#;
        let x = element_from_json(s).unwrap();
        assert_eq!(x.len(), 1);
        assert_eq!(element_to_json(&x), s);
    }

    #[test]
    fn canonical_term_order() {
        let s = r#"{"basis":"chi","ground":[1,2],"terms":[{"order":[2,1],"arcs":[],"coeff":"1"},{"order":[1,2],"arcs":[[1,2]],"coeff":"q^2/(q-1)"},{"order":[1,2],"arcs":[],"coeff":"-3"}]}"#;
        let x = element_from_json(s).unwrap();
        let out = element_to_json(&x);
        assert!(out.find("[1,2],\"arcs\":[]").unwrap() < out.find("[[1,2]]").unwrap());
        assert!(out.find("[[1,2]]").unwrap() < out.find("[2,1]").unwrap());
        assert_eq!(element_from_json(&out).unwrap(), x);
    }

    #[test]
    fn rejects_keys_outside_ground() {
        let s = r#"{"basis":"kappa","ground":[1,2],"terms":[{"order":[1,3],"arcs":[],"coeff":"1"}]}"#;
        assert!(element_from_json(s).is_err());
        let s = r#"{"basis":"kappa","ground":[1,2],"terms":[{"order":[2,1],"arcs":[[1,2]],"coeff":"1"}]}"#;
        assert!(element_from_json(s).is_err());
    }
}
