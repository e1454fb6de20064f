//! Static SVG rendering of a Newton polygon.

use std::fmt::Write;

use num_traits::ToPrimitive;
use slopeforge::NewtonPolygon;

const CELL: f64 = 40.0;
const MARGIN: f64 = 30.0;

pub fn render(np: &NewtonPolygon) -> String {
    let pts: Vec<(f64, f64)> =
        np.vertices().iter().map(|(x, y)| (x.to_f64().unwrap_or(0.0), y.to_f64().unwrap_or(0.0))).collect();
    let w = np.width().ceil().to_integer().to_u64().unwrap_or(0).max(1);
    let h = np.height().ceil().to_integer().to_u64().unwrap_or(0).max(1);
    let (width, height) = (w as f64 * CELL + 2.0 * MARGIN, h as f64 * CELL + 2.0 * MARGIN);
    // y grows upwards in the picture
    let px = |x: f64| MARGIN + x * CELL;
    let py = |y: f64| height - MARGIN - y * CELL;

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
    for i in 0..=w {
        for j in 0..=h {
            let _ = writeln!(s, r##"<circle cx="{}" cy="{}" r="1.5" fill="#bbb"/>"##, px(i as f64), py(j as f64));
        }
    }
    let _ = writeln!(
        s,
        r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="black"/>"#,
        px(0.0),
        py(0.0),
        px(w as f64),
        py(0.0)
    );
    let _ = writeln!(
        s,
        r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="black"/>"#,
        px(0.0),
        py(0.0),
        px(0.0),
        py(h as f64)
    );
    let path: Vec<String> = pts.iter().map(|&(x, y)| format!("{},{}", px(x), py(y))).collect();
    let _ = writeln!(s, r#"<polyline points="{}" fill="none" stroke="steelblue" stroke-width="2"/>"#, path.join(" "));
    for ((x, y), (qx, qy)) in pts.iter().zip(np.vertices()) {
        let _ = writeln!(s, r#"<circle cx="{}" cy="{}" r="4" fill="steelblue"><title>({qx}, {qy})</title></circle>"#, px(*x), py(*y));
    }
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use slopeforge::exactnum::frac;
    use slopeforge::SlopeMultiset;

    #[test]
    fn draws_every_vertex() {
        let s = SlopeMultiset::from_pairs([(frac(0, 1), 2), (frac(1, 2), 2)]).unwrap();
        let svg = render(&s.polygon());
        assert!(svg.starts_with("<svg"));
        assert_eq!(svg.matches(r#"r="4""#).count(), 3);
        assert!(svg.contains("<title>(4, 1)</title>"));
    }
}
