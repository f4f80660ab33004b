//! Hand-written SVG for sweep plots and layout diagrams.

use std::fmt::Write;

use crate::analysis::ExperimentStats;
use crate::lattice::{CodeSpec, LinkType, Role};

const W: f64 = 560.0;
const H: f64 = 400.0;
const LEFT: f64 = 60.0;
const RIGHT: f64 = 20.0;
const TOP: f64 = 20.0;
const BOTTOM: f64 = 50.0;

fn nice_ceiling(v: f64) -> f64 {
    if v <= 0.0 {
        return 1.0;
    }
    let mag = 10f64.powf(v.log10().floor());
    [1.0, 2.0, 2.5, 5.0, 10.0]
        .iter()
        .map(|m| m * mag)
        .find(|&c| c >= v - 1e-12)
        .unwrap_or(10.0 * mag)
}

/// Both rates against noise strength: `⟨p_W⟩` as `×`, `⟨p_Z⟩` as `+`.
pub fn sweep_svg(points: &[(f64, ExperimentStats)]) -> String {
    let x_max = nice_ceiling(points.iter().map(|(p, _)| *p).fold(0.0, f64::max));
    let y_max = 0.6;
    let px = |p: f64| LEFT + p / x_max * (W - LEFT - RIGHT);
    let py = |v: f64| H - BOTTOM - v / y_max * (H - TOP - BOTTOM);
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}" viewBox="0 0 {W} {H}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(s, r#"<rect width="{W}" height="{H}" fill="white"/>"#);
    let (x0, x1, y0, y1) = (px(0.0), px(x_max), py(0.0), py(y_max));
    let _ = writeln!(
        s,
        r#"<path d="M{x0:.1} {y1:.1} V{y0:.1} H{x1:.1}" fill="none" stroke="black"/>"#
    );
    for i in 0..=5 {
        let p = x_max * i as f64 / 5.0;
        let x = px(p);
        let _ = writeln!(
            s,
            r#"<line x1="{x:.1}" y1="{y0:.1}" x2="{x:.1}" y2="{:.1}" stroke="black"/><text x="{x:.1}" y="{:.1}" text-anchor="middle">{:.3}</text>"#,
            y0 + 5.0,
            y0 + 18.0,
            p
        );
    }
    for i in 0..=6 {
        let v = y_max * i as f64 / 6.0;
        let y = py(v);
        let _ = writeln!(
            s,
            r#"<line x1="{:.1}" y1="{y:.1}" x2="{x0:.1}" y2="{y:.1}" stroke="black"/><text x="{:.1}" y="{:.1}" text-anchor="end">{v:.1}</text>"#,
            x0 - 5.0,
            x0 - 8.0,
            y + 4.0
        );
    }
    let _ = writeln!(
        s,
        r##"<line x1="{x0:.1}" y1="{:.1}" x2="{x1:.1}" y2="{:.1}" stroke="#bbb" stroke-dasharray="4 3"/>"##,
        py(0.5),
        py(0.5)
    );
    let _ = writeln!(
        s,
        r#"<text x="{:.1}" y="{:.1}" text-anchor="middle">noise strength p</text>"#,
        (x0 + x1) / 2.0,
        H - 10.0
    );
    let r = 5.0;
    for (p, st) in points {
        let (x, y) = (px(*p), py(st.mean_pw));
        let _ = writeln!(
            s,
            r##"<path d="M{:.1} {:.1} L{:.1} {:.1} M{:.1} {:.1} L{:.1} {:.1}" stroke="#c0392b" stroke-width="1.5"/>"##,
            x - r,
            y - r,
            x + r,
            y + r,
            x - r,
            y + r,
            x + r,
            y - r
        );
        let (x, y) = (px(*p), py(st.mean_pz));
        let _ = writeln!(
            s,
            r##"<path d="M{:.1} {y:.1} H{:.1} M{x:.1} {:.1} V{:.1}" stroke="#2c3e50" stroke-width="1.5"/>"##,
            x - r,
            x + r,
            y - r,
            y + r
        );
    }
    let lx = x0 + 15.0;
    let _ = writeln!(
        s,
        r##"<text x="{:.1}" y="{:.1}" fill="#c0392b">× ⟨p_W⟩</text><text x="{:.1}" y="{:.1}" fill="#2c3e50">+ ⟨p_Z⟩</text>"##,
        lx,
        TOP + 12.0,
        lx,
        TOP + 28.0
    );
    s.push_str("</svg>\n");
    s
}

/// Device graph: vertex qubits as circles, edge qubits as squares coloured
/// by link type, plaquettes labelled with their shift.
pub fn layout_svg(code: &CodeSpec) -> String {
    const SCALE: f64 = 36.0;
    const PAD: f64 = 30.0;
    let sites = &code.layout.qubits;
    let max_x = sites.iter().map(|q| q.x).max().unwrap_or(0) as f64;
    let max_y = sites.iter().map(|q| q.y).max().unwrap_or(0) as f64;
    let min_x = sites.iter().map(|q| q.x).min().unwrap_or(0) as f64;
    let min_y = sites.iter().map(|q| q.y).min().unwrap_or(0) as f64;
    let w = (max_x - min_x) * SCALE + 2.0 * PAD;
    let h = (max_y - min_y) * SCALE + 2.0 * PAD;
    let pos = |q: usize| {
        let (x, y) = code.layout.position(q);
        (
            PAD + (x as f64 - min_x) * SCALE,
            PAD + (y as f64 - min_y) * SCALE,
        )
    };
    let mut link_colour = vec![None; code.num_qubits()];
    for link in &code.links {
        if let Some(aux) = link.aux_qubit {
            link_colour[aux] = Some(link.link_type);
        }
    }
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w:.0}" height="{h:.0}" viewBox="0 0 {w:.0} {h:.0}" font-family="sans-serif" font-size="10">"#
    );
    let _ = writeln!(s, r#"<rect width="{w:.0}" height="{h:.0}" fill="white"/>"#);
    for p in &code.plaquettes {
        let (cx, cy) = p
            .qubits
            .iter()
            .map(|&q| pos(q))
            .fold((0.0, 0.0), |(a, b), (x, y)| (a + x / 6.0, b + y / 6.0));
        let _ = writeln!(
            s,
            r##"<text x="{cx:.1}" y="{:.1}" text-anchor="middle" font-size="14" fill="#555">{}</text>"##,
            cy + 5.0,
            p.shift + 1
        );
    }
    for &[a, b] in &code.layout.couplings {
        let ((x1, y1), (x2, y2)) = (pos(a), pos(b));
        let _ = writeln!(
            s,
            r##"<line x1="{x1:.1}" y1="{y1:.1}" x2="{x2:.1}" y2="{y2:.1}" stroke="#888"/>"##
        );
    }
    let truncated: Vec<usize> = code
        .links
        .iter()
        .filter(|l| l.truncated)
        .map(|l| l.data_qubits[0])
        .collect();
    for q in sites {
        let (x, y) = pos(q.index);
        match q.role {
            Role::Vertex => {
                let fill = if truncated.contains(&q.index) {
                    "#8e44ad"
                } else {
                    "#222"
                };
                let _ = writeln!(
                    s,
                    r#"<circle cx="{x:.1}" cy="{y:.1}" r="7" fill="{fill}"/>"#
                );
            }
            Role::Edge => {
                let fill = match link_colour[q.index] {
                    Some(LinkType::X) => "#e74c3c",
                    Some(LinkType::Y) => "#27ae60",
                    Some(LinkType::Z) => "#2980b9",
                    None => "#ccc",
                };
                let _ = writeln!(
                    s,
                    r#"<rect x="{:.1}" y="{:.1}" width="10" height="10" fill="{fill}"/>"#,
                    x - 5.0,
                    y - 5.0
                );
            }
        }
        let _ = writeln!(
            s,
            r##"<text x="{:.1}" y="{:.1}" fill="#444">{}</text>"##,
            x + 6.0,
            y - 6.0,
            q.index
        );
    }
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn stats(pw: f64, pz: f64) -> ExperimentStats {
        ExperimentStats {
            per_plaquette_pw: vec![],
            per_plaquette_pz: vec![],
            mean_pw: pw,
            stderr_pw: 0.0,
            mean_pz: pz,
            stderr_pz: 0.0,
            num_shots: 1,
            rounds: 3,
        }
    }

    #[test]
    fn ceilings() {
        assert_eq!(nice_ceiling(0.03), 0.05);
        assert_eq!(nice_ceiling(0.1), 0.1);
        assert_eq!(nice_ceiling(0.0), 1.0);
    }

    #[test]
    fn sweep_has_one_marker_pair_per_point() {
        let svg = sweep_svg(&[(0.01, stats(0.3, 0.2)), (0.02, stats(0.4, 0.3))]);
        assert!(svg.starts_with("<svg"));
        assert_eq!(svg.matches(r##"stroke="#c0392b" stroke-width"##).count(), 2);
        assert_eq!(svg.matches(r##"stroke="#2c3e50" stroke-width"##).count(), 2);
    }

    #[test]
    fn layout_draws_every_qubit() {
        let code = CodeSpec::from_descriptor("falcon-27").unwrap();
        let svg = layout_svg(&code);
        assert_eq!(
            svg.matches("<circle").count() + svg.matches("<rect x=").count(),
            27
        );
        assert_eq!(svg.matches("<line").count(), code.layout.couplings.len());
    }
}
