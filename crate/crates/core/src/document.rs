//! Canonical JSON form of a layout.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, LinearOrder};
use crate::layout::{MixedLayout, Page, PageKind};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PageDoc {
    pub kind: PageKind,
    pub edges: Vec<[usize; 2]>,
}

/// Field order is fixed and edges are written sorted, so equal layouts serialize to equal bytes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LayoutDocument {
    pub n: usize,
    pub order: Vec<usize>,
    pub pages: Vec<PageDoc>,
    #[serde(default)]
    pub meta: BTreeMap<String, Value>,
}

impl LayoutDocument {
    pub fn from_layout(layout: &MixedLayout, meta: BTreeMap<String, Value>) -> Self {
        let pages = layout
            .pages
            .iter()
            .map(|p| {
                let mut edges: Vec<[usize; 2]> = p.edges.iter().map(|e| [e.lo(), e.hi()]).collect();
                edges.sort_unstable();
                PageDoc { kind: p.kind, edges }
            })
            .collect();
        LayoutDocument { n: layout.order.len(), order: layout.order.vertices().to_vec(), pages, meta }
    }

    /// Structural checks only; page rules are left to the validator.
    pub fn to_layout(&self) -> Result<MixedLayout> {
        if self.order.len() != self.n {
            return Err(Error::InvalidInput(format!("order lists {} vertices, n is {}", self.order.len(), self.n)));
        }
        let order = LinearOrder::new(self.order.clone())?;
        let mut pages = Vec::with_capacity(self.pages.len());
        for p in &self.pages {
            let mut edges = Vec::with_capacity(p.edges.len());
            for &[a, b] in &p.edges {
                if a >= self.n || b >= self.n {
                    return Err(Error::InvalidVertex { vertex: a.max(b), n: self.n });
                }
                if a == b {
                    return Err(Error::SelfLoop(a));
                }
                edges.push(Edge::new(a, b));
            }
            pages.push(Page::new(p.kind, edges));
        }
        Ok(MixedLayout::new(order, pages))
    }

    /// The graph of all distinct page edges.
    pub fn graph(&self) -> Result<Graph> {
        let edges: BTreeSet<(usize, usize)> =
            self.pages.iter().flat_map(|p| p.edges.iter().map(|&[a, b]| (a.min(b), a.max(b)))).collect();
        Graph::new(self.n, edges)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    /// One page per line; edges sorted with the smaller endpoint first.
    pub fn to_json(&self) -> String {
        let mut out = String::from("{\n");
        out.push_str(&format!("  \"n\": {},\n", self.n));
        out.push_str(&format!("  \"order\": {},\n", compact(&self.order)));
        out.push_str("  \"pages\": [");
        for (i, p) in self.pages.iter().enumerate() {
            let mut edges: Vec<[usize; 2]> = p.edges.iter().map(|&[a, b]| [a.min(b), a.max(b)]).collect();
            edges.sort_unstable();
            out.push_str(if i == 0 { "\n" } else { ",\n" });
            out.push_str(&format!("    {{\"kind\": \"{}\", \"edges\": {}}}", p.kind, compact(&edges)));
        }
        out.push_str(if self.pages.is_empty() { "],\n" } else { "\n  ],\n" });
        out.push_str(&format!("  \"meta\": {}\n}}\n", compact(&self.meta)));
        out
    }
}

fn compact<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("plain data serializes")
}

/// Provenance fields shared by every emitted document.
pub fn meta(family: &str, params: Value) -> BTreeMap<String, Value> {
    BTreeMap::from([
        ("family".to_string(), Value::from(family)),
        ("params".to_string(), params),
        ("tool".to_string(), Value::from(concat!("mixlayout ", env!("CARGO_PKG_VERSION")))),
    ])
}
