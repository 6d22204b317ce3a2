//! SVG rendering of walls in the `(beta, t)` half-plane.
//!
//! Every geometric quantity arrives exact from the core; floating point
//! appears only in the final coordinate emission. Circle images under the
//! anisotropic axis scaling are drawn as elliptical SVG arcs, so each wall
//! stays a genuine arc element rather than a polyline.

use num_traits::ToPrimitive;
use tiltwalls_core::koseki::{koseki_constant, SurfaceData};
use tiltwalls_core::vanishing::window_at_beta;
use tiltwalls_core::walls::{wall_between, WallClass};
use tiltwalls_core::{rat, CharVector, Rat};

const WIDTH: f64 = 720.0;
const HEIGHT: f64 = 480.0;
const MARGIN: f64 = 60.0;

fn approx(x: &Rat) -> f64 {
    x.to_f64().expect("plot-scale rational fits in f64")
}

pub fn render(chars: &[CharVector], surface: &SurfaceData) -> Result<String, String> {
    if chars.is_empty() {
        return Err("at least one character is required".into());
    }
    let c_x = koseki_constant(surface).map_err(|e| e.to_string())?;
    let h2 = surface.h2;

    let mut circles: Vec<(usize, usize, f64, f64)> = Vec::new();
    let mut lines: Vec<(usize, usize, f64)> = Vec::new();
    let mut proportional: Vec<(usize, usize)> = Vec::new();
    for i in 0..chars.len() {
        for j in (i + 1)..chars.len() {
            let wall = wall_between::<Rat>(&chars[i], &chars[j], &c_x, h2)
                .map_err(|_| format!("characters {i} and {j} must be nonzero classes"))?;
            match wall.class {
                WallClass::Circle { center_beta, radius2 } => {
                    circles.push((i, j, approx(&center_beta), approx(&radius2).sqrt()));
                }
                WallClass::VerticalLine { beta0 } => lines.push((i, j, approx(&beta0))),
                WallClass::Empty => {}
                WallClass::Everywhere => proportional.push((i, j)),
            }
        }
    }

    let floor_t = (approx(&c_x) / h2 as f64).sqrt();
    let window = window_at_beta(surface, &rat(1, 2))
        .ok()
        .filter(|w| w.nonempty);

    // always show the unit slice interval; extend to every drawn feature
    let mut beta_min = 0.0f64;
    let mut beta_max = 1.0f64;
    let mut t_max = (0.75f64).max(floor_t * 1.25);
    for &(_, _, center, rho) in &circles {
        beta_min = beta_min.min(center - rho);
        beta_max = beta_max.max(center + rho);
        t_max = t_max.max(rho * 1.1);
    }
    for &(_, _, b) in &lines {
        beta_min = beta_min.min(b);
        beta_max = beta_max.max(b);
    }
    if let Some(w) = &window {
        let top = ((approx(&c_x) + approx(&w.hi)) / h2 as f64).sqrt();
        t_max = t_max.max(top * 1.2);
    }
    beta_min -= 0.25;
    beta_max += 0.25;

    let sx = (WIDTH - 2.0 * MARGIN) / (beta_max - beta_min);
    let sy = (HEIGHT - 2.0 * MARGIN) / t_max;
    let x = |b: f64| MARGIN + (b - beta_min) * sx;
    let y = |t: f64| HEIGHT - MARGIN - t * sy;

    let mut svg = String::new();
    let w = |svg: &mut String, line: std::fmt::Arguments| {
        svg.push_str(&format!("{line}"));
        svg.push('\n');
    };

    w(&mut svg, format_args!(
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    ));
    w(&mut svg, format_args!(
        "<style>.axis{{stroke:#555;stroke-width:1}}.wall{{fill:none;stroke:#1f6feb;stroke-width:1.5}}.wall-line{{stroke:#d29922;stroke-width:1.5}}.floor{{stroke:#999;stroke-width:1;stroke-dasharray:4 3}}.window{{fill:#2ea043;fill-opacity:0.35}}text{{font:12px sans-serif;fill:#333}}</style>"
    ));
    w(&mut svg, format_args!(
        "<!-- walls of {} classes over {}: C = {}, H^2 = {} -->",
        chars.len(),
        surface.name,
        c_x,
        h2
    ));

    // axes
    let y0 = y(0.0);
    w(&mut svg, format_args!(
        r#"<line class="axis" x1="{:.4}" y1="{y0:.4}" x2="{:.4}" y2="{y0:.4}"/>"#,
        x(beta_min),
        x(beta_max)
    ));
    w(&mut svg, format_args!(
        r#"<line class="axis" x1="{:.4}" y1="{:.4}" x2="{:.4}" y2="{y0:.4}"/>"#,
        x(0.0),
        y(t_max),
        x(0.0)
    ));
    w(&mut svg, format_args!(
        r#"<text x="{:.4}" y="{:.4}">beta</text>"#,
        x(beta_max) - 34.0,
        y0 + 18.0
    ));
    w(&mut svg, format_args!(
        r#"<text x="{:.4}" y="{:.4}">t</text>"#,
        x(0.0) + 6.0,
        y(t_max) + 12.0
    ));
    for tick in [0.0, 1.0] {
        w(&mut svg, format_args!(
            r#"<line class="axis" x1="{0:.4}" y1="{1:.4}" x2="{0:.4}" y2="{2:.4}"/><text x="{3:.4}" y="{4:.4}">{tick}</text>"#,
            x(tick),
            y0 - 4.0,
            y0 + 4.0,
            x(tick) - 3.0,
            y0 + 18.0
        ));
    }

    // the region below t = sqrt(C/H^2) carries no stability condition
    if floor_t > 0.0 {
        w(&mut svg, format_args!(
            r#"<line class="floor" x1="{:.4}" y1="{1:.4}" x2="{2:.4}" y2="{1:.4}"/>"#,
            x(beta_min),
            y(floor_t),
            x(beta_max)
        ));
    }

    if let Some(win) = &window {
        let t_lo = ((approx(&c_x) + approx(&win.lo)) / h2 as f64).sqrt();
        let t_hi = ((approx(&c_x) + approx(&win.hi)) / h2 as f64).sqrt();
        let half_band = 0.015 * (beta_max - beta_min);
        w(&mut svg, format_args!(
            r#"<rect class="window" x="{:.4}" y="{:.4}" width="{:.4}" height="{:.4}"><title>feasible heights at beta = 1/2</title></rect>"#,
            x(0.5 - half_band),
            y(t_hi),
            2.0 * half_band * sx,
            (t_hi - t_lo) * sy
        ));
    }

    for &(i, j, center, rho) in &circles {
        w(&mut svg, format_args!(
            r#"<path class="wall" d="M {:.4} {y0:.4} A {:.4} {:.4} 0 0 1 {:.4} {y0:.4}"><title>wall of classes {i} and {j}</title></path>"#,
            x(center - rho),
            rho * sx,
            rho * sy,
            x(center + rho)
        ));
    }
    for &(i, j, b) in &lines {
        w(&mut svg, format_args!(
            r#"<line class="wall-line" x1="{0:.4}" y1="{1:.4}" x2="{0:.4}" y2="{2:.4}"><title>vertical wall of classes {i} and {j}</title></line>"#,
            x(b),
            y(t_max),
            y0
        ));
    }
    for &(i, j) in &proportional {
        w(&mut svg, format_args!(
            "<!-- warning: classes {i} and {j} are proportional; their wall is everywhere and is not drawn -->"
        ));
    }

    svg.push_str("</svg>\n");
    Ok(svg)
}
