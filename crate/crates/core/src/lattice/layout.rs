use std::collections::{BTreeSet, HashMap, VecDeque};
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::LatticeError;

const FALCON_27: &str = include_str!("../../layouts/falcon-27.json");
const HUMMINGBIRD_65: &str = include_str!("../../layouts/hummingbird-65.json");

/// Names accepted by [`build_heavy_hex_layout`] without touching the filesystem.
pub const BUILTIN_LAYOUTS: [&str; 2] = ["falcon-27", "hummingbird-65"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    /// Code qubit on a lattice vertex.
    Vertex,
    /// Auxiliary qubit sitting on a lattice edge.
    Edge,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QubitSite {
    pub index: usize,
    pub role: Role,
    pub x: i32,
    pub y: i32,
}

/// Physical qubit graph of a heavy-hexagon device.
///
/// Coordinates use a doubled grid: vertex qubits sit at even `(x, y)`, edge
/// qubits at the midpoint of the vertices they join, so every coupling spans
/// one grid unit. Rows grow downwards.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LayoutSpec {
    pub name: String,
    pub qubits: Vec<QubitSite>,
    pub couplings: Vec<[usize; 2]>,
}

/// What to build a layout from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LayoutDescriptor {
    Named(String),
    /// `rows` hexagon rows with `cols` full hexagons each, brick-wall offset.
    Grid {
        rows: usize,
        cols: usize,
    },
}

impl LayoutDescriptor {
    /// Parses `falcon-27`, `hummingbird-65` or `hex-RxC` (for example `hex-3x3`).
    pub fn parse(text: &str) -> Result<Self, LatticeError> {
        let text = text.trim();
        if let Some(dims) = text.strip_prefix("hex-") {
            let bad = || LatticeError::UnknownLayout(text.to_string());
            let (r, c) = dims.split_once('x').ok_or_else(bad)?;
            let rows: i64 = r.parse().map_err(|_| bad())?;
            let cols: i64 = c.parse().map_err(|_| bad())?;
            if rows < 1 || cols < 1 {
                return Err(LatticeError::InvalidGenerator { rows, cols });
            }
            return Ok(LayoutDescriptor::Grid {
                rows: rows as usize,
                cols: cols as usize,
            });
        }
        Ok(LayoutDescriptor::Named(text.to_string()))
    }
}

pub fn build_heavy_hex_layout(descriptor: &LayoutDescriptor) -> Result<LayoutSpec, LatticeError> {
    let layout = match descriptor {
        LayoutDescriptor::Named(name) => match name.as_str() {
            "falcon-27" => LayoutSpec::from_json(FALCON_27)?,
            "hummingbird-65" => LayoutSpec::from_json(HUMMINGBIRD_65)?,
            other => return Err(LatticeError::UnknownLayout(other.to_string())),
        },
        &LayoutDescriptor::Grid { rows, cols } => {
            if rows == 0 || cols == 0 {
                return Err(LatticeError::InvalidGenerator {
                    rows: rows as i64,
                    cols: cols as i64,
                });
            }
            hex_grid(rows, cols)
        }
    };
    layout.validate()?;
    Ok(layout)
}

/// Brick-wall lattice of full hexagons. Hexagon `(i, j)` has its top-left
/// corner at `(4j + 2(i mod 2), 2i)`.
fn hex_grid(rows: usize, cols: usize) -> LayoutSpec {
    let mut sites = BTreeSet::new();
    for i in 0..rows as i32 {
        for j in 0..cols as i32 {
            let (x0, y0) = (4 * j + 2 * (i % 2), 2 * i);
            for dx in 0..=4 {
                sites.insert((x0 + dx, y0));
                sites.insert((x0 + dx, y0 + 2));
            }
            sites.insert((x0, y0 + 1));
            sites.insert((x0 + 4, y0 + 1));
        }
    }
    LayoutSpec::from_sites(format!("hex-{rows}x{cols}"), sites)
}

fn is_vertex_site(x: i32, y: i32) -> bool {
    x.rem_euclid(2) == 0 && y.rem_euclid(2) == 0
}

impl LayoutSpec {
    /// Builds a layout from grid sites, assigning indices row-major and
    /// coupling every edge site to its adjacent vertex sites.
    pub fn from_sites(name: String, sites: impl IntoIterator<Item = (i32, i32)>) -> Self {
        let mut sites: Vec<(i32, i32)> = sites.into_iter().collect();
        sites.sort_by_key(|&(x, y)| (y, x));
        sites.dedup();
        let index: HashMap<(i32, i32), usize> =
            sites.iter().enumerate().map(|(i, &s)| (s, i)).collect();
        let qubits = sites
            .iter()
            .enumerate()
            .map(|(index, &(x, y))| QubitSite {
                index,
                role: if is_vertex_site(x, y) {
                    Role::Vertex
                } else {
                    Role::Edge
                },
                x,
                y,
            })
            .collect();
        let mut couplings = Vec::new();
        for (i, &(x, y)) in sites.iter().enumerate() {
            if is_vertex_site(x, y) {
                continue;
            }
            for (dx, dy) in [(1, 0), (-1, 0), (0, 1), (0, -1)] {
                let (nx, ny) = (x + dx, y + dy);
                if !is_vertex_site(nx, ny) {
                    continue;
                }
                if let Some(&j) = index.get(&(nx, ny)) {
                    couplings.push([i.min(j), i.max(j)]);
                }
            }
        }
        couplings.sort_unstable();
        LayoutSpec {
            name,
            qubits,
            couplings,
        }
    }

    pub fn from_json(text: &str) -> Result<Self, LatticeError> {
        let layout: LayoutSpec = serde_json::from_str(text)?;
        layout.validate()?;
        Ok(layout)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("layout serializes")
    }

    pub fn load_file(path: &Path) -> Result<Self, LatticeError> {
        let text = std::fs::read_to_string(path).map_err(|source| LatticeError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::from_json(&text)
    }

    /// Resolves a built-in name, a `hex-RxC` generator or a path to a layout file.
    pub fn resolve(spec: &str) -> Result<Self, LatticeError> {
        let descriptor = LayoutDescriptor::parse(spec)?;
        match &descriptor {
            LayoutDescriptor::Named(name) if !BUILTIN_LAYOUTS.contains(&name.as_str()) => {
                let path = Path::new(spec);
                if path.exists() {
                    Self::load_file(path)
                } else {
                    Err(LatticeError::UnknownLayout(spec.to_string()))
                }
            }
            _ => build_heavy_hex_layout(&descriptor),
        }
    }

    pub fn num_qubits(&self) -> usize {
        self.qubits.len()
    }

    pub fn role(&self, q: usize) -> Role {
        self.qubits[q].role
    }

    pub fn position(&self, q: usize) -> (i32, i32) {
        (self.qubits[q].x, self.qubits[q].y)
    }

    pub fn vertex_qubits(&self) -> impl Iterator<Item = usize> + '_ {
        self.qubits
            .iter()
            .filter(|q| q.role == Role::Vertex)
            .map(|q| q.index)
    }

    pub fn edge_qubits(&self) -> impl Iterator<Item = usize> + '_ {
        self.qubits
            .iter()
            .filter(|q| q.role == Role::Edge)
            .map(|q| q.index)
    }

    pub fn neighbors(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.qubits.len()];
        for &[a, b] in &self.couplings {
            if a < adj.len() && b < adj.len() {
                adj[a].push(b);
                adj[b].push(a);
            }
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// Checks index contiguity, role rules, grid geometry and connectivity.
    pub fn validate(&self) -> Result<(), LatticeError> {
        let invalid = |msg: String| Err(LatticeError::InvalidLayout(msg));
        let n = self.qubits.len();
        if n == 0 {
            return invalid("layout has no qubits".into());
        }
        let mut positions = HashMap::new();
        for (i, q) in self.qubits.iter().enumerate() {
            if q.index != i {
                return invalid(format!(
                    "qubit indices must be contiguous from 0; found {} at position {i}",
                    q.index
                ));
            }
            let vertex_site = is_vertex_site(q.x, q.y);
            match q.role {
                Role::Vertex if !vertex_site => {
                    return invalid(format!("vertex qubit {i} must sit at even coordinates"))
                }
                Role::Edge if vertex_site || (q.x + q.y).rem_euclid(2) == 0 => {
                    return invalid(format!(
                        "edge qubit {i} must have exactly one odd coordinate"
                    ))
                }
                _ => {}
            }
            if let Some(other) = positions.insert((q.x, q.y), i) {
                return invalid(format!(
                    "qubits {other} and {i} share position ({}, {})",
                    q.x, q.y
                ));
            }
        }
        let mut seen = BTreeSet::new();
        for &[a, b] in &self.couplings {
            if a >= n || b >= n {
                return invalid(format!("coupling [{a}, {b}] references a missing qubit"));
            }
            if a == b || !seen.insert((a.min(b), a.max(b))) {
                return invalid(format!("coupling [{a}, {b}] is a self-loop or duplicate"));
            }
            let (qa, qb) = (&self.qubits[a], &self.qubits[b]);
            if qa.role == qb.role {
                return invalid(format!(
                    "coupling [{a}, {b}] joins two {:?} qubits",
                    qa.role
                ));
            }
            if (qa.x - qb.x).abs() + (qa.y - qb.y).abs() != 1 {
                return invalid(format!("coupling [{a}, {b}] does not span one grid unit"));
            }
        }
        let adj = self.neighbors();
        for q in self.edge_qubits() {
            if adj[q].is_empty() || adj[q].len() > 2 {
                return invalid(format!(
                    "edge qubit {q} has {} vertex neighbours (expected 1 or 2)",
                    adj[q].len()
                ));
            }
        }
        let mut reached = vec![false; n];
        let mut queue = VecDeque::from([0]);
        reached[0] = true;
        while let Some(q) = queue.pop_front() {
            for &m in &adj[q] {
                if !reached[m] {
                    reached[m] = true;
                    queue.push_back(m);
                }
            }
        }
        if let Some(q) = reached.iter().position(|r| !r) {
            return invalid(format!(
                "coupling graph is disconnected (qubit {q} unreachable)"
            ));
        }
        Ok(())
    }
}
