use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::layout::{LayoutSpec, Role};
use super::LatticeError;
use crate::pauli::{Pauli, PauliString};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LinkType {
    X,
    Y,
    Z,
}

impl LinkType {
    pub fn pauli(self) -> Pauli {
        match self {
            LinkType::X => Pauli::X,
            LinkType::Y => Pauli::Y,
            LinkType::Z => Pauli::Z,
        }
    }
}

impl fmt::Display for LinkType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            LinkType::X => "x",
            LinkType::Y => "y",
            LinkType::Z => "z",
        };
        f.write_str(s)
    }
}

/// Link operator `σ^α ⊗ σ^α` on the vertex qubits of one lattice edge, or a
/// single `σ^z` when the edge leaves the device.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Link {
    pub id: usize,
    pub link_type: LinkType,
    /// One or two vertex qubits, ascending.
    pub data_qubits: Vec<usize>,
    pub aux_qubit: Option<usize>,
    pub truncated: bool,
}

impl Link {
    pub fn operator(&self, num_qubits: usize) -> PauliString {
        let p = self.link_type.pauli();
        let terms: Vec<_> = self.data_qubits.iter().map(|&q| (q, p)).collect();
        PauliString::from_sparse(num_qubits, &terms)
    }

    pub fn touches(&self, q: usize) -> bool {
        self.data_qubits.contains(&q)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkClassification {
    pub links: Vec<Link>,
    /// Edge qubits hanging off a single vertex horizontally; these cannot
    /// host a link and are left unused.
    pub dangling: Vec<usize>,
}

/// Orientation bookkeeping for the brick-wall embedding.
///
/// Every vertex has exactly one vertical link, pointing up or down. Along a
/// row the direction alternates, so it is fixed by the parity of
/// `x/2 + y/2` up to one global bit, which is read off the vertical edges
/// present in the layout.
#[derive(Clone, Debug)]
pub(crate) struct Embedding {
    down_parity: i32,
    pub(crate) vertex_at: HashMap<(i32, i32), usize>,
}

impl Embedding {
    pub(crate) fn new(layout: &LayoutSpec) -> Result<Self, LatticeError> {
        let adj = layout.neighbors();
        let vertex_at: HashMap<(i32, i32), usize> = layout
            .vertex_qubits()
            .map(|q| (layout.position(q), q))
            .collect();
        let mut down_parity: Option<(i32, usize)> = None;
        for e in layout.edge_qubits() {
            let (ex, ey) = layout.position(e);
            for &v in &adj[e] {
                let (vx, vy) = layout.position(v);
                if vx != ex {
                    continue;
                }
                let down = ey > vy;
                let parity = Self::parity_of(vx, vy);
                let implied = if down { parity } else { 1 - parity };
                match down_parity {
                    None => down_parity = Some((implied, e)),
                    Some((p, first)) if p != implied => {
                        return Err(LatticeError::InconsistentOrientation { first, second: e })
                    }
                    _ => {}
                }
            }
        }
        Ok(Self {
            down_parity: down_parity.map_or(0, |(p, _)| p),
            vertex_at,
        })
    }

    fn parity_of(x: i32, y: i32) -> i32 {
        (x.div_euclid(2) + y.div_euclid(2)).rem_euclid(2)
    }

    /// Whether the vertex at `(x, y)` owns a vertical link pointing down.
    pub(crate) fn points_down(&self, x: i32, y: i32) -> bool {
        Self::parity_of(x, y) == self.down_parity
    }

    /// Horizontal edges are `x` when their left end points down, `y` otherwise.
    fn horizontal_type(&self, left_x: i32, left_y: i32) -> LinkType {
        if self.points_down(left_x, left_y) {
            LinkType::X
        } else {
            LinkType::Y
        }
    }
}

/// Turns every edge qubit into a typed link.
///
/// Vertical edges are `z`. An edge qubit with a single vertical vertex
/// neighbour becomes a truncated `z` link; one with a single horizontal
/// neighbour is reported in [`LinkClassification::dangling`].
pub fn classify_links(layout: &LayoutSpec) -> Result<LinkClassification, LatticeError> {
    let adj = layout.neighbors();
    let embedding = Embedding::new(layout)?;
    let mut links = Vec::new();
    let mut dangling = Vec::new();
    for e in layout.edge_qubits() {
        let verts: Vec<usize> = adj[e]
            .iter()
            .copied()
            .filter(|&v| layout.role(v) == Role::Vertex)
            .collect();
        let (ex, ey) = layout.position(e);
        match verts.as_slice() {
            [] => return Err(LatticeError::IsolatedEdgeQubit(e)),
            &[v] => {
                let (vx, _) = layout.position(v);
                if vx == ex {
                    links.push(Link {
                        id: links.len(),
                        link_type: LinkType::Z,
                        data_qubits: vec![v],
                        aux_qubit: Some(e),
                        truncated: true,
                    });
                } else {
                    dangling.push(e);
                }
            }
            &[a, b] => {
                let (pa, pb) = (layout.position(a), layout.position(b));
                let link_type = if pa.0 == ex && pb.0 == ex {
                    LinkType::Z
                } else if pa.1 == ey && pb.1 == ey {
                    let left = if pa.0 < pb.0 { pa } else { pb };
                    embedding.horizontal_type(left.0, left.1)
                } else {
                    return Err(LatticeError::InvalidLayout(format!(
                        "edge qubit {e} joins vertices that are neither in a row nor a column"
                    )));
                };
                links.push(Link {
                    id: links.len(),
                    link_type,
                    data_qubits: vec![a.min(b), a.max(b)],
                    aux_qubit: Some(e),
                    truncated: false,
                });
            }
            _ => {
                return Err(LatticeError::InvalidLayout(format!(
                    "edge qubit {e} has more than two vertex neighbours"
                )))
            }
        }
    }
    Ok(LinkClassification { links, dangling })
}
