//! Crystal graphs and their JSON / DOT renderings.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::hash::Hash;

use serde_json::{json, Value};

/// Vertices in canonical order plus `i`-arrows `src --i--> dst`
/// (`f_i src = dst`), stored as vertex indices.
#[derive(Debug, Clone)]
pub struct CrystalGraph<E> {
    nodes: Vec<E>,
    index: HashMap<E, usize>,
    edges: Vec<(usize, usize, usize)>,
}

impl<E: Clone + Eq + Hash + Ord> CrystalGraph<E> {
    pub fn from_arrows(mut nodes: Vec<E>, arrows: Vec<(E, usize, E)>) -> Self {
        nodes.sort();
        nodes.dedup();
        let index: HashMap<E, usize> = nodes.iter().cloned().enumerate().map(|(i, b)| (b, i)).collect();
        let mut edges: Vec<(usize, usize, usize)> =
            arrows.into_iter().filter_map(|(s, i, d)| Some((*index.get(&s)?, i, *index.get(&d)?))).collect();
        edges.sort_unstable();
        edges.dedup();
        CrystalGraph { nodes, index, edges }
    }

    pub fn nodes(&self) -> &[E] {
        &self.nodes
    }

    pub fn edges(&self) -> &[(usize, usize, usize)] {
        &self.edges
    }

    pub fn index_of(&self, b: &E) -> Option<usize> {
        self.index.get(b).copied()
    }

    pub fn contains(&self, b: &E) -> bool {
        self.index.contains_key(b)
    }

    pub fn into_nodes(self) -> Vec<E> {
        self.nodes
    }

    /// `{"nodes":[…],"edges":[{"src":…,"i":…,"dst":…}]}` with `src`/`dst`
    /// given as positions in `nodes`.
    pub fn to_json(&self, node: impl Fn(&E) -> Value) -> Value {
        json!({
            "nodes": self.nodes.iter().map(&node).collect::<Vec<_>>(),
            "edges": self.edges.iter().map(|&(s, i, d)| json!({"src": s, "i": i, "dst": d})).collect::<Vec<_>>(),
        })
    }

    pub fn to_dot(&self, name: &str, label: impl Fn(&E) -> String) -> String {
        let mut out = String::new();
        writeln!(out, "digraph \"{name}\" {{").unwrap();
        for (idx, b) in self.nodes.iter().enumerate() {
            writeln!(out, "  n{idx} [label=\"{}\"];", label(b).replace('"', "\\\"")).unwrap();
        }
        for &(s, i, d) in &self.edges {
            writeln!(out, "  n{s} -> n{d} [label=\"{i}\"];").unwrap();
        }
        out.push_str("}\n");
        out
    }
}
