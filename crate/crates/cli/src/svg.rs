//! Minimal line plot: axes, the measured series and a reference curve.

pub fn plot(title: &str, xs: &[f64], series: &[f64], reference: &[f64]) -> String {
    let (w, h, pad) = (640.0, 400.0, 48.0);
    let x_lo = xs.iter().cloned().fold(f64::INFINITY, f64::min);
    let x_hi = xs.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let all = series.iter().chain(reference);
    let y_lo = all.clone().cloned().fold(0.0, f64::min);
    let y_hi = all.cloned().fold(f64::NEG_INFINITY, f64::max).max(y_lo + 1.0);
    let sx = |x: f64| pad + (x - x_lo) / (x_hi - x_lo).max(1e-9) * (w - 2.0 * pad);
    let sy = |y: f64| h - pad - (y - y_lo) / (y_hi - y_lo) * (h - 2.0 * pad);
    let poly = |ys: &[f64]| xs.iter().zip(ys).map(|(&x, &y)| format!("{:.2},{:.2}", sx(x), sy(y))).collect::<Vec<_>>().join(" ");
    let mut out = format!("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" font-family=\"sans-serif\" font-size=\"12\">\n");
    out += &format!("<text x=\"{pad}\" y=\"20\">{title}</text>\n");
    out += &format!("<line x1=\"{pad}\" y1=\"{0}\" x2=\"{1}\" y2=\"{0}\" stroke=\"black\"/>\n", h - pad, w - pad);
    out += &format!("<line x1=\"{pad}\" y1=\"{pad}\" x2=\"{pad}\" y2=\"{}\" stroke=\"black\"/>\n", h - pad);
    out += &format!("<text x=\"{pad}\" y=\"{}\">{x_lo}</text><text x=\"{}\" y=\"{}\">{x_hi}</text>\n", h - pad + 16.0, w - pad - 16.0, h - pad + 16.0);
    out += &format!("<text x=\"4\" y=\"{}\">{y_lo:.2}</text><text x=\"4\" y=\"{}\">{y_hi:.2}</text>\n", sy(y_lo), sy(y_hi) + 4.0);
    out += &format!("<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\" points=\"{}\"/>\n", poly(series));
    out += &format!("<polyline fill=\"none\" stroke=\"firebrick\" stroke-dasharray=\"4 3\" points=\"{}\"/>\n", poly(reference));
    out += "</svg>\n";
    out
}
