use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use super::layout::LayoutSpec;
use super::links::{Embedding, Link, LinkType};
use super::LatticeError;
use crate::pauli::{Pauli, PauliString};

/// Boundary edges of a hexagon as positions in [`Plaquette::qubits`], in
/// boundary order, with the link type each must carry.
pub(crate) const BOUNDARY: [(usize, usize, LinkType); 6] = [
    (0, 1, LinkType::Z),
    (1, 2, LinkType::X),
    (2, 3, LinkType::Y),
    (3, 4, LinkType::Z),
    (4, 5, LinkType::X),
    (5, 0, LinkType::Y),
];

/// Positions in [`BOUNDARY`] forming group a: `z(0,1) y(2,3) x(4,5)`.
const GROUP_A: [usize; 3] = [0, 2, 4];
/// Positions in [`BOUNDARY`] forming group b: `z(3,4) y(5,0) x(1,2)`.
const GROUP_B: [usize; 3] = [3, 5, 1];

/// Pauli acting on each hexagon position in the plaquette operator
/// `W = X0 Y1 Z2 X3 Y4 Z5`.
pub const PLAQUETTE_PAULIS: [Pauli; 6] =
    [Pauli::X, Pauli::Y, Pauli::Z, Pauli::X, Pauli::Y, Pauli::Z];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Group {
    A,
    B,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Plaquette {
    pub id: usize,
    /// Vertex qubits numbered around the hexagon: bottom-left, top-left,
    /// top-middle, top-right, bottom-right, bottom-middle.
    pub qubits: [usize; 6],
    /// Link ids for edges `(0,1) (1,2) (2,3) (3,4) (4,5) (5,0)`.
    pub boundary_links: [usize; 6],
    pub group_a: [usize; 3],
    pub group_b: [usize; 3],
    /// Every `z` link touching one of the six vertices, ascending.
    pub incident_z_links: Vec<usize>,
    pub shift: usize,
}

impl Plaquette {
    pub fn group(&self, g: Group) -> [usize; 3] {
        match g {
            Group::A => self.group_a,
            Group::B => self.group_b,
        }
    }

    /// The six-body operator `W` on an `n`-qubit register.
    pub fn operator(&self, num_qubits: usize) -> PauliString {
        let terms: Vec<_> = self
            .qubits
            .iter()
            .zip(PLAQUETTE_PAULIS)
            .map(|(&q, p)| (q, p))
            .collect();
        PauliString::from_sparse(num_qubits, &terms)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Face {
    pub(crate) qubits: [usize; 6],
    pub(crate) boundary_links: [usize; 6],
    /// Top-left corner, used for ordering.
    pub(crate) anchor: (i32, i32),
}

/// Locates hexagonal faces whose six boundary links are all on the device.
///
/// Returns the faces in row-major order of their top-left corner, together
/// with diagnostics for faces that have all six vertices but miss a link.
pub(crate) fn find_faces(
    layout: &LayoutSpec,
    links: &[Link],
) -> Result<(Vec<Face>, Vec<String>), LatticeError> {
    let embedding = Embedding::new(layout)?;
    let mut by_pair: HashMap<(usize, usize), &Link> = HashMap::new();
    for link in links.iter().filter(|l| l.data_qubits.len() == 2) {
        by_pair.insert((link.data_qubits[0], link.data_qubits[1]), link);
    }
    let mut anchors: Vec<(i32, i32)> = embedding.vertex_at.keys().copied().collect();
    anchors.sort_by_key(|&(x, y)| (y, x));

    let mut faces = Vec::new();
    let mut diagnostics = Vec::new();
    for (x, y) in anchors {
        if !embedding.points_down(x, y) {
            continue;
        }
        // bottom-left, top-left, top-middle, top-right, bottom-right, bottom-middle
        let corners = [
            (x, y + 2),
            (x, y),
            (x + 2, y),
            (x + 4, y),
            (x + 4, y + 2),
            (x + 2, y + 2),
        ];
        let Some(qubits) = corners
            .iter()
            .map(|c| embedding.vertex_at.get(c).copied())
            .collect::<Option<Vec<usize>>>()
        else {
            continue;
        };
        let mut boundary = [0usize; 6];
        let mut missing = Vec::new();
        for (slot, &(i, j, expected)) in BOUNDARY.iter().enumerate() {
            let (a, b) = (qubits[i], qubits[j]);
            match by_pair.get(&(a.min(b), a.max(b))) {
                Some(link) if link.link_type == expected => boundary[slot] = link.id,
                Some(link) => {
                    return Err(LatticeError::InvalidLayout(format!(
                        "link {} between {a} and {b} classified {} but hexagon expects {expected}",
                        link.id, link.link_type
                    )))
                }
                None => missing.push(format!("{expected}({a},{b})")),
            }
        }
        if !missing.is_empty() {
            diagnostics.push(format!(
                "face at ({x}, {y}) dropped: missing link(s) {}",
                missing.join(", ")
            ));
            continue;
        }
        faces.push(Face {
            qubits: qubits.try_into().expect("six corners"),
            boundary_links: boundary,
            anchor: (x, y),
        });
    }
    Ok((faces, diagnostics))
}

/// Adds a truncated `z` link (no auxiliary qubit) for every face vertex
/// that has no `z` link at all, so each plaquette vertex is covered by
/// exactly one `z` stabilizer.
pub fn complete_truncated_z_links(
    layout: &LayoutSpec,
    links: &[Link],
) -> Result<Vec<Link>, LatticeError> {
    let (faces, _) = find_faces(layout, links)?;
    let covered: BTreeSet<usize> = links
        .iter()
        .filter(|l| l.link_type == LinkType::Z)
        .flat_map(|l| l.data_qubits.iter().copied())
        .collect();
    let uncovered: BTreeSet<usize> = faces
        .iter()
        .flat_map(|f| f.qubits)
        .filter(|q| !covered.contains(q))
        .collect();
    let mut out = links.to_vec();
    for q in uncovered {
        out.push(Link {
            id: out.len(),
            link_type: LinkType::Z,
            data_qubits: vec![q],
            aux_qubit: None,
            truncated: true,
        });
    }
    Ok(out)
}

/// Every `z` link touching one of the plaquette's vertices.
pub fn incident_z_links(qubits: &[usize; 6], links: &[Link]) -> Vec<usize> {
    links
        .iter()
        .filter(|l| l.link_type == LinkType::Z && l.data_qubits.iter().any(|q| qubits.contains(q)))
        .map(|l| l.id)
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaquetteSet {
    pub plaquettes: Vec<Plaquette>,
    pub diagnostics: Vec<String>,
}

/// One plaquette per complete hexagonal face, with groups split as
/// `a = {z(0,1), y(2,3), x(4,5)}` and `b = {z(3,4), y(5,0), x(1,2)}`.
///
/// Shifts are left at 0; see [`super::schedule_shifts`].
pub fn build_plaquettes(layout: &LayoutSpec, links: &[Link]) -> Result<PlaquetteSet, LatticeError> {
    let (faces, diagnostics) = find_faces(layout, links)?;
    let plaquettes = faces
        .into_iter()
        .enumerate()
        .map(|(id, face)| Plaquette {
            id,
            qubits: face.qubits,
            boundary_links: face.boundary_links,
            group_a: GROUP_A.map(|slot| face.boundary_links[slot]),
            group_b: GROUP_B.map(|slot| face.boundary_links[slot]),
            incident_z_links: incident_z_links(&face.qubits, links),
            shift: 0,
        })
        .collect();
    Ok(PlaquetteSet {
        plaquettes,
        diagnostics,
    })
}
