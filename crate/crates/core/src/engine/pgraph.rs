//! Minimal in-memory labeled property graph with index-free adjacency.
//!
//! Every node carries its own incident-edge lists, so traversal is a walk
//! over those lists — no global lookup structure is consulted once a node
//! is in hand. Properties are stored inline on nodes and edges and are
//! individually countable for the storage accounting.

use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub(crate) struct NodeId(pub u32);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub(crate) struct EdgeId(pub u32);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum NodeLabel {
    Actor,
    Activity,
    Case,
    Person,
    UniqueActor,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum EdgeType {
    Performs,
    Contains,
    RelatedTo,
    Similarity,
    Subcontract,
}

impl fmt::Display for EdgeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EdgeType::Performs => "PERFORMS",
            EdgeType::Contains => "CONTAINS",
            EdgeType::RelatedTo => "RELATED_TO",
            EdgeType::Similarity => "SIMILARITY",
            EdgeType::Subcontract => "SUBCONTRACT",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub(crate) enum PropValue {
    Str(String),
    Int(i64),
    Float(f64),
}

impl PropValue {
    pub fn as_str(&self) -> &str {
        match self {
            PropValue::Str(s) => s,
            _ => panic!("property is not a string"),
        }
    }

    pub fn as_int(&self) -> i64 {
        match self {
            PropValue::Int(i) => *i,
            _ => panic!("property is not an integer"),
        }
    }

    pub fn as_float(&self) -> f64 {
        match self {
            PropValue::Float(f) => *f,
            _ => panic!("property is not a float"),
        }
    }
}

pub(crate) type Props = Vec<(&'static str, PropValue)>;

#[derive(Debug)]
pub(crate) struct Node {
    pub label: NodeLabel,
    pub props: Props,
    pub out: Vec<EdgeId>,
    pub inc: Vec<EdgeId>,
}

#[derive(Debug)]
pub(crate) struct Edge {
    pub ty: EdgeType,
    pub from: NodeId,
    pub to: NodeId,
    pub props: Props,
}

#[derive(Debug, Default)]
pub(crate) struct PropertyGraph {
    nodes: Vec<Node>,
    edges: Vec<Edge>,
}

impl PropertyGraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn clear(&mut self) {
        self.nodes.clear();
        self.edges.clear();
    }

    pub fn add_node(&mut self, label: NodeLabel, props: Props) -> NodeId {
        let id = NodeId(self.nodes.len() as u32);
        self.nodes.push(Node {
            label,
            props,
            out: Vec::new(),
            inc: Vec::new(),
        });
        id
    }

    pub fn add_edge(&mut self, ty: EdgeType, from: NodeId, to: NodeId, props: Props) -> EdgeId {
        let id = EdgeId(self.edges.len() as u32);
        self.edges.push(Edge {
            ty,
            from,
            to,
            props,
        });
        self.nodes[from.0 as usize].out.push(id);
        self.nodes[to.0 as usize].inc.push(id);
        id
    }

    pub fn node(&self, id: NodeId) -> &Node {
        &self.nodes[id.0 as usize]
    }

    pub fn node_mut(&mut self, id: NodeId) -> &mut Node {
        &mut self.nodes[id.0 as usize]
    }

    pub fn edge(&self, id: EdgeId) -> &Edge {
        &self.edges[id.0 as usize]
    }

    pub fn edge_mut(&mut self, id: EdgeId) -> &mut Edge {
        &mut self.edges[id.0 as usize]
    }

    /// Outgoing edges of `id`, in creation order.
    pub fn out_edges(&self, id: NodeId) -> impl Iterator<Item = (EdgeId, &Edge)> {
        self.nodes[id.0 as usize]
            .out
            .iter()
            .map(move |&eid| (eid, self.edge(eid)))
    }

    /// First outgoing edge of `from` with type `ty` that satisfies
    /// `matches`; this is the merge lookup, done purely over adjacency.
    pub fn find_out_edge(
        &self,
        from: NodeId,
        ty: EdgeType,
        mut matches: impl FnMut(&Edge) -> bool,
    ) -> Option<EdgeId> {
        self.nodes[from.0 as usize]
            .out
            .iter()
            .copied()
            .find(|&eid| {
                let edge = self.edge(eid);
                edge.ty == ty && matches(edge)
            })
    }

    pub fn nodes(&self) -> impl Iterator<Item = (NodeId, &Node)> {
        self.nodes
            .iter()
            .enumerate()
            .map(|(i, n)| (NodeId(i as u32), n))
    }

    pub fn edges(&self) -> impl Iterator<Item = &Edge> {
        self.edges.iter()
    }

    pub fn edges_mut(&mut self) -> impl Iterator<Item = &mut Edge> {
        self.edges.iter_mut()
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge_count_of(&self, ty: EdgeType) -> usize {
        self.edges.iter().filter(|e| e.ty == ty).count()
    }

    /// Total number of stored property entries, nodes and edges combined.
    pub fn property_count(&self) -> usize {
        let node_props: usize = self.nodes.iter().map(|n| n.props.len()).sum();
        let edge_props: usize = self.edges.iter().map(|e| e.props.len()).sum();
        node_props + edge_props
    }

    pub fn prop<'a>(props: &'a Props, key: &str) -> Option<&'a PropValue> {
        props
            .iter()
            .find_map(|(k, v)| if *k == key { Some(v) } else { None })
    }

    pub fn set_prop(props: &mut Props, key: &'static str, value: PropValue) {
        if let Some(slot) = props.iter_mut().find(|(k, _)| *k == key) {
            slot.1 = value;
        } else {
            props.push((key, value));
        }
    }
}
