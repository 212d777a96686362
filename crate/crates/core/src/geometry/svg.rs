//! SVG panels. Planar panels drop the vanishing coordinate; the special
//! panel is an orthographic projection along a view direction.

use std::fmt::Write as _;
use std::path::Path;

use super::{DiagramScene, GeometryError, PlaneClass};

pub const PALETTE: [&str; 6] = ["green", "red", "brown", "blue", "pink", "black"];

#[derive(Clone, Debug, PartialEq)]
pub struct RenderOptions {
    pub view: [f64; 3],
    /// Pixels per diagram unit.
    pub scale: f64,
    pub margin: f64,
    pub show_labels: bool,
    pub show_triangles: bool,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            view: [1.0, 1.0, 1.0],
            scale: 120.0,
            margin: 24.0,
            show_labels: true,
            show_triangles: false,
        }
    }
}

fn fmt6(x: f64) -> String {
    let s = format!("{x:.6}");
    if s.trim_start_matches('-')
        .bytes()
        .all(|b| b == b'0' || b == b'.')
    {
        "0.000000".to_string()
    } else {
        s
    }
}

fn normalize(v: [f64; 3]) -> [f64; 3] {
    let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    v.map(|x| x / n)
}

fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn dot(a: [f64; 3], b: [f64; 3]) -> f64 {
    a.iter().zip(&b).map(|(x, y)| x * y).sum()
}

/// Screen basis (right, up) with right × up pointing at the viewer.
fn view_basis(view: [f64; 3]) -> ([f64; 3], [f64; 3]) {
    let v = normalize(view);
    let mut u = cross([0.0, 0.0, 1.0], v);
    if dot(u, u) < 1e-12 {
        u = cross(v, [1.0, 0.0, 0.0]);
    }
    let u = normalize(u);
    (u, cross(v, u))
}

struct Projector {
    plane: PlaneClass,
    basis: ([f64; 3], [f64; 3]),
}

impl Projector {
    fn new(plane: PlaneClass, view: [f64; 3]) -> Projector {
        Projector {
            plane,
            basis: view_basis(view),
        }
    }

    fn project(&self, p: [f64; 3]) -> (f64, f64) {
        match self.plane.axes() {
            Some((i, j)) => (p[i], p[j]),
            None => (dot(p, self.basis.0), dot(p, self.basis.1)),
        }
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

/// Render one panel. Balls come in side order, cycles in canonical order.
pub fn render_svg(scene: &DiagramScene, plane: PlaneClass, options: &RenderOptions) -> String {
    let proj = Projector::new(plane, options.view);
    let r = scene.layout.radius_exact().to_f64();
    let balls: Vec<_> = scene
        .layout
        .balls()
        .iter()
        .filter(|b| plane.contains(&b.center))
        .map(|b| (b, proj.project(b.center.to_f64())))
        .collect();
    let cycles: Vec<_> = scene.cycles_in(plane).collect();

    let mut xs = vec![];
    let mut ys = vec![];
    for (_, (x, y)) in &balls {
        xs.extend([x - r, x + r]);
        ys.extend([y - r, y + r]);
    }
    if xs.is_empty() {
        xs.extend([-1.0, 1.0]);
        ys.extend([-1.0, 1.0]);
    }
    let fold = |v: &[f64], f: fn(f64, f64) -> f64, init| v.iter().copied().fold(init, f);
    let (x0, x1) = (
        fold(&xs, f64::min, f64::INFINITY),
        fold(&xs, f64::max, f64::NEG_INFINITY),
    );
    let (y0, y1) = (
        fold(&ys, f64::min, f64::INFINITY),
        fold(&ys, f64::max, f64::NEG_INFINITY),
    );
    let s = options.scale;
    let m = options.margin;
    let width = (x1 - x0) * s + 2.0 * m;
    let height = (y1 - y0) * s + 2.0 * m;
    let to_px = |(x, y): (f64, f64)| ((x - x0) * s + m, (y1 - y) * s + m);

    let mut out = String::new();
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">",
        w = fmt6(width),
        h = fmt6(height)
    );
    let _ = writeln!(out, "<title>{} {}</title>", escape(&scene.code), plane);

    if options.show_triangles {
        out += "<g id=\"triangles\" fill=\"gray\" fill-opacity=\"0.08\" stroke=\"none\">\n";
        for tri in &scene.triangles {
            if !tri.iter().all(|&t| plane.contains(scene.layout.center(t))) {
                continue;
            }
            let pts: Vec<String> = tri
                .iter()
                .map(|&t| {
                    let (x, y) = to_px(proj.project(scene.layout.center(t).to_f64()));
                    format!("{},{}", fmt6(x), fmt6(y))
                })
                .collect();
            let _ = writeln!(out, "<polygon points=\"{}\"/>", pts.join(" "));
        }
        out += "</g>\n";
    }

    out += "<g id=\"balls\" fill=\"none\" stroke=\"gray\" stroke-width=\"1\">\n";
    for (b, p) in &balls {
        let (x, y) = to_px(*p);
        let _ = writeln!(
            out,
            "<circle data-side=\"{}\" cx=\"{}\" cy=\"{}\" r=\"{}\"/>",
            b.side,
            fmt6(x),
            fmt6(y),
            fmt6(r * s)
        );
    }
    out += "</g>\n";

    if options.show_labels {
        out += "<g id=\"labels\" font-family=\"sans-serif\" font-size=\"12\" fill=\"black\">\n";
        for (b, p) in &balls {
            let (x, y) = to_px(*p);
            let _ = writeln!(
                out,
                "<text x=\"{}\" y=\"{}\">{}</text>",
                fmt6(x + r * s),
                fmt6(y - r * s),
                escape(&b.label.to_string())
            );
        }
        out += "</g>\n";
    }

    out += "<g id=\"cycles\" stroke-width=\"2\" fill=\"none\">\n";
    for c in &cycles {
        let _ = writeln!(
            out,
            "<g data-face=\"{}\" stroke=\"{}\">",
            escape(&c.label),
            c.color
        );
        for seg in &c.segments {
            let (ax, ay) = to_px(proj.project(seg.exit.approx));
            let (bx, by) = to_px(proj.project(seg.entry.approx));
            let _ = writeln!(
                out,
                "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>",
                fmt6(ax),
                fmt6(ay),
                fmt6(bx),
                fmt6(by)
            );
        }
        out += "</g>\n";
    }
    out += "</g>\n</svg>\n";
    out
}

pub fn write_svg(
    scene: &DiagramScene,
    plane: PlaneClass,
    options: &RenderOptions,
    path: &Path,
) -> Result<(), GeometryError> {
    std::fs::write(path, render_svg(scene, plane, options)).map_err(|source| GeometryError::Io {
        path: path.display().to_string(),
        source,
    })
}
