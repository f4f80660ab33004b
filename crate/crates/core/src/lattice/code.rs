use std::collections::BTreeSet;

use serde::Serialize;

use super::layout::LayoutSpec;
use super::links::{classify_links, Link, LinkType};
use super::plaquette::{
    build_plaquettes, complete_truncated_z_links, incident_z_links as incident_for, Group,
    Plaquette, BOUNDARY,
};
use super::LatticeError;
use crate::pauli::PauliString;

/// A hexagonal matching code laid out on a device.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CodeSpec {
    pub layout: LayoutSpec,
    pub links: Vec<Link>,
    pub plaquettes: Vec<Plaquette>,
    /// All `z` links, truncated ones included, ascending by id.
    pub z_stabilizers: Vec<usize>,
    pub num_shifts: usize,
    /// Unused edge qubits and dropped faces.
    pub diagnostics: Vec<String>,
}

impl CodeSpec {
    /// Classifies links, builds plaquettes and schedules shifts.
    pub fn build(layout: LayoutSpec) -> Result<Self, LatticeError> {
        layout.validate()?;
        let classification = classify_links(&layout)?;
        let links = complete_truncated_z_links(&layout, &classification.links)?;
        let set = build_plaquettes(&layout, &links)?;
        let mut diagnostics: Vec<String> = classification
            .dangling
            .iter()
            .map(|q| format!("edge qubit {q} has a single horizontal neighbour and is unused"))
            .collect();
        diagnostics.extend(set.diagnostics);
        let z_stabilizers = links
            .iter()
            .filter(|l| l.link_type == LinkType::Z)
            .map(|l| l.id)
            .collect();
        let code = CodeSpec {
            layout,
            links,
            plaquettes: set.plaquettes,
            z_stabilizers,
            num_shifts: 0,
            diagnostics,
        };
        let code = schedule_shifts(code);
        code.check_invariants()?;
        Ok(code)
    }

    /// Built-in name, `hex-RxC` generator or layout file path.
    pub fn from_descriptor(spec: &str) -> Result<Self, LatticeError> {
        Self::build(LayoutSpec::resolve(spec)?)
    }

    pub fn num_qubits(&self) -> usize {
        self.layout.num_qubits()
    }

    pub fn link(&self, id: usize) -> &Link {
        &self.links[id]
    }

    pub fn link_operator(&self, id: usize) -> PauliString {
        self.links[id].operator(self.num_qubits())
    }

    pub fn plaquette_operator(&self, plaquette: usize) -> PauliString {
        self.plaquettes[plaquette].operator(self.num_qubits())
    }

    /// `V_a` or `V_b`: ordered product of the group's link operators.
    pub fn group_operator(&self, plaquette: usize, group: Group) -> PauliString {
        self.plaquettes[plaquette]
            .group(group)
            .iter()
            .fold(PauliString::identity(self.num_qubits()), |acc, &l| {
                acc.mul(&self.link_operator(l))
            })
    }

    /// Product of every `z` link incident on the plaquette.
    pub fn incident_z_product(&self, plaquette: usize) -> PauliString {
        self.plaquettes[plaquette]
            .incident_z_links
            .iter()
            .fold(PauliString::identity(self.num_qubits()), |acc, &l| {
                acc.mul(&self.link_operator(l))
            })
    }

    pub fn plaquettes_in_shift(&self, shift: usize) -> impl Iterator<Item = &Plaquette> {
        self.plaquettes.iter().filter(move |p| p.shift == shift)
    }

    pub fn check_invariants(&self) -> Result<(), LatticeError> {
        let broken = |msg: String| Err(LatticeError::InvariantViolated(msg));
        for link in &self.links {
            if link.truncated != (link.data_qubits.len() == 1) {
                return broken(format!(
                    "link {} truncation flag disagrees with its qubits",
                    link.id
                ));
            }
            if link.truncated && link.link_type != LinkType::Z {
                return broken(format!("truncated link {} is not a z link", link.id));
            }
        }
        let mut touched = BTreeSet::new();
        for &z in &self.z_stabilizers {
            for &q in &self.links[z].data_qubits {
                if !touched.insert(q) {
                    return broken(format!("vertex {q} is touched by two z stabilizers"));
                }
            }
        }
        for p in &self.plaquettes {
            let mut types: Vec<_> = p.group_a.iter().map(|&l| self.links[l].link_type).collect();
            types.sort();
            let mut types_b: Vec<_> = p.group_b.iter().map(|&l| self.links[l].link_type).collect();
            types_b.sort();
            if types != [LinkType::X, LinkType::Y, LinkType::Z] || types_b != types {
                return broken(format!(
                    "plaquette {} groups are not one x, y, z each",
                    p.id
                ));
            }
        }
        for (i, p) in self.plaquettes.iter().enumerate() {
            for q in &self.plaquettes[i + 1..] {
                if p.shift == q.shift && !disjoint(&p.incident_z_links, &q.incident_z_links) {
                    return broken(format!(
                        "plaquettes {} and {} share shift {} and an incident z link",
                        p.id, q.id, p.shift
                    ));
                }
            }
        }
        Ok(())
    }
}

fn disjoint(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| !b.contains(x))
}

/// Every `z` stabilizer touching any of the plaquette's vertices.
pub fn incident_z_links(plaquette: &Plaquette, code: &CodeSpec) -> BTreeSet<usize> {
    incident_for(&plaquette.qubits, &code.links)
        .into_iter()
        .collect()
}

/// Greedy colouring in plaquette-id order: each plaquette takes the lowest
/// shift not used by an earlier plaquette sharing an incident `z` link.
pub fn schedule_shifts(mut code: CodeSpec) -> CodeSpec {
    let mut num_shifts = 0;
    for i in 0..code.plaquettes.len() {
        let taken: BTreeSet<usize> = code.plaquettes[..i]
            .iter()
            .filter(|q| !disjoint(&q.incident_z_links, &code.plaquettes[i].incident_z_links))
            .map(|q| q.shift)
            .collect();
        let shift = (0..).find(|s| !taken.contains(s)).expect("unbounded range");
        code.plaquettes[i].shift = shift;
        num_shifts = num_shifts.max(shift + 1);
    }
    code.num_shifts = num_shifts;
    code
}

/// Boundary link operators of a plaquette in boundary order.
pub fn boundary_operators(code: &CodeSpec, plaquette: usize) -> Vec<PauliString> {
    let p = &code.plaquettes[plaquette];
    BOUNDARY
        .iter()
        .enumerate()
        .map(|(slot, _)| code.link_operator(p.boundary_links[slot]))
        .collect()
}
