use std::collections::{BTreeMap, VecDeque};
use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::PermGroup;
use crate::progenitor::{LabelMap, Word};

use super::image::lex_names;
use super::SymImage;

/// One orbit of `N^(w)` on the symmetric generators and the double coset
/// reached by appending its letters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub orbit_rep: usize,
    pub orbit: Vec<usize>,
    pub target: usize,
}

impl Edge {
    pub fn orbit_size(&self) -> usize {
        self.orbit.len()
    }
}

/// A double coset `N w N`.
#[derive(Clone, Debug)]
pub struct DoubleCoset {
    pub rep: Word,
    /// Coset point of `N w`.
    pub rep_point: usize,
    /// Coset points making up the double coset, ascending.
    pub points: Vec<usize>,
    /// The coset stabilizing subgroup `N^(w)`, acting on the generators.
    pub stabilizer: PermGroup,
    pub edges: Vec<Edge>,
}

impl DoubleCoset {
    /// Number of single cosets.
    pub fn size(&self) -> usize {
        self.points.len()
    }

    pub fn stabilizer_order(&self) -> u128 {
        self.stabilizer.order()
    }
}

/// Double cosets in breadth-first discovery order from `[*]`.
#[derive(Clone, Debug)]
pub struct CollapsedGraph {
    pub nodes: Vec<DoubleCoset>,
    pub labels: LabelMap,
    pub control_order: u128,
}

impl CollapsedGraph {
    pub fn index(&self) -> usize {
        self.nodes.iter().map(DoubleCoset::size).sum()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.nodes.iter().map(DoubleCoset::size).collect()
    }

    pub fn node_by_name(&self, name: &str) -> Option<&DoubleCoset> {
        self.nodes
            .iter()
            .find(|d| self.labels.format_name(&d.rep) == name)
    }

    /// Every edge lands on a known node: the set of double cosets is closed
    /// under right multiplication by the generators.
    pub fn is_complete(&self) -> bool {
        self.nodes
            .iter()
            .all(|d| d.edges.iter().all(|e| e.target < self.nodes.len()))
    }

    pub fn name(&self, node: usize) -> String {
        format!("[{}]", self.labels.format_name(&self.nodes[node].rep))
    }
}

/// Double coset enumeration of the image over `N`.
///
/// Nodes are the orbits of `N` on the single cosets; each is named by the
/// shortlex-least word reaching one of its cosets.
pub fn double_cosets(img: &SymImage) -> Result<CollapsedGraph> {
    let index = img.index();
    let names = lex_names(img.ts(), index);
    let control = img.control_image();
    let mut orbit_of = vec![usize::MAX; index + 1];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    let mut order: Vec<usize> = Vec::new();
    let mut queue = VecDeque::new();

    let discover =
        |point: usize, orbit_of: &mut Vec<usize>, orbits: &mut Vec<Vec<usize>>| -> usize {
            if orbit_of[point] != usize::MAX {
                return orbit_of[point];
            }
            let mut o = control.orbit(point).points;
            o.sort_unstable();
            let id = orbits.len();
            for &p in &o {
                orbit_of[p] = id;
            }
            orbits.push(o);
            id
        };

    discover(1, &mut orbit_of, &mut orbits);
    queue.push_back(0usize);
    order.push(0);
    let mut nodes_by_id: BTreeMap<usize, DoubleCoset> = BTreeMap::new();
    while let Some(id) = queue.pop_front() {
        let points = orbits[id].clone();
        let rep_point = *points
            .iter()
            .min_by(|&&a, &&b| names[a - 1].cmp_shortlex(&names[b - 1]))
            .expect("orbits are nonempty");
        let rep = names[rep_point - 1].clone();
        let stab_image = control.point_stabilizer(rep_point);
        let stab_gens = stab_image
            .generators()
            .iter()
            .map(|g| img.induced_action(g))
            .collect::<Result<Vec<_>>>()?;
        let stabilizer = PermGroup::new(img.n(), stab_gens)?;
        let mut edges = Vec::new();
        for orbit in stabilizer.orbits() {
            let i = orbit[0];
            let target_point = img.t(i).apply(rep_point);
            let before = orbits.len();
            let target = discover(target_point, &mut orbit_of, &mut orbits);
            if target == before {
                queue.push_back(target);
                order.push(target);
            }
            edges.push(Edge {
                orbit_rep: i,
                orbit,
                target,
            });
        }
        nodes_by_id.insert(
            id,
            DoubleCoset {
                rep,
                rep_point,
                points,
                stabilizer,
                edges,
            },
        );
    }
    if orbits.iter().map(Vec::len).sum::<usize>() != index {
        return Err(Error::DegenerateImage(
            "double cosets do not cover every single coset".into(),
        ));
    }
    let nodes = order
        .iter()
        .map(|id| nodes_by_id.remove(id).expect("every orbit visited"))
        .collect();
    Ok(CollapsedGraph {
        nodes,
        labels: img.spec().labels().clone(),
        control_order: control.order(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    Dot,
    Json,
}

impl FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<GraphFormat> {
        match s.to_ascii_lowercase().as_str() {
            "dot" => Ok(GraphFormat::Dot),
            "json" => Ok(GraphFormat::Json),
            other => Err(Error::Parse(format!("unknown graph format {other:?}"))),
        }
    }
}

#[derive(Serialize)]
struct JsonEdge {
    orbit_rep: String,
    orbit_size: usize,
    target: usize,
}

#[derive(Serialize)]
struct JsonNode {
    rep: Vec<String>,
    name: String,
    size: usize,
    stabilizer_order: u128,
    edges: Vec<JsonEdge>,
}

#[derive(Serialize)]
struct JsonGraph {
    index: usize,
    nodes: Vec<JsonNode>,
}

/// Renders the collapsed Cayley graph. In DOT, orbits between the same
/// pair of nodes are summed into labels like `1+2`.
pub fn emit_graph(g: &CollapsedGraph, format: GraphFormat) -> String {
    match format {
        GraphFormat::Dot => emit_dot(g),
        GraphFormat::Json => emit_json(g),
    }
}

fn sizes_label(sizes: &[usize]) -> String {
    sizes
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join("+")
}

fn emit_dot(g: &CollapsedGraph) -> String {
    let mut out = String::from("graph collapsed {\n  node [shape=ellipse];\n");
    for (i, d) in g.nodes.iter().enumerate() {
        let _ = writeln!(out, "  n{i} [label=\"{} / {}\"];", g.name(i), d.size());
    }
    // orbit sizes leaving each node towards each target
    let mut out_sizes: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (i, d) in g.nodes.iter().enumerate() {
        for e in &d.edges {
            out_sizes
                .entry((i, e.target))
                .or_default()
                .push(e.orbit_size());
        }
    }
    for (&(a, b), sizes) in &out_sizes {
        if a == b {
            let _ = writeln!(out, "  n{a} -- n{a} [label=\"{}\"];", sizes_label(sizes));
        } else if a < b {
            let back = out_sizes
                .get(&(b, a))
                .map(|s| sizes_label(s))
                .unwrap_or_default();
            let _ = writeln!(
                out,
                "  n{a} -- n{b} [taillabel=\"{}\", headlabel=\"{back}\"];",
                sizes_label(sizes)
            );
        }
    }
    out.push_str("}\n");
    out
}

fn emit_json(g: &CollapsedGraph) -> String {
    let nodes = g
        .nodes
        .iter()
        .enumerate()
        .map(|(i, d)| JsonNode {
            rep: d
                .rep
                .letters()
                .iter()
                .map(|&l| g.labels.label(l).to_string())
                .collect(),
            name: g.name(i),
            size: d.size(),
            stabilizer_order: d.stabilizer_order(),
            edges: d
                .edges
                .iter()
                .map(|e| JsonEdge {
                    orbit_rep: g.labels.label(e.orbit_rep).to_string(),
                    orbit_size: e.orbit_size(),
                    target: e.target,
                })
                .collect(),
        })
        .collect();
    let mut s = serde_json::to_string_pretty(&JsonGraph {
        index: g.index(),
        nodes,
    })
    .expect("serializable");
    s.push('\n');
    s
}
