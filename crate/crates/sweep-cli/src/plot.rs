//! Self-contained SVG line charts, one panel per (measure, region).
//!
//! No plotting library: the figures are plain polyline charts. Curve styling
//! mirrors the reference figures — solid for GHZ, dashed for GHZ-like,
//! dotted for W. All coordinates are formatted to fixed precision so the
//! byte output is deterministic.

use unruh_core::{RindlerRegion, StateFamily};

use crate::config::{SweepConfig, SweepMode};
use crate::sweep::MeasureRecord;

const PANEL_WIDTH: f64 = 430.0;
const PANEL_HEIGHT: f64 = 300.0;
const MARGIN_LEFT: f64 = 64.0;
const MARGIN_RIGHT: f64 = 18.0;
const MARGIN_TOP: f64 = 38.0;
const MARGIN_BOTTOM: f64 = 46.0;
const PANEL_GAP: f64 = 26.0;
const TICK_COUNT: usize = 5;

#[derive(Clone, Copy)]
struct MeasureColumn {
    title: &'static str,
    extract: fn(&MeasureRecord) -> Option<f64>,
}

const MEASURE_COLUMNS: [MeasureColumn; 3] = [
    MeasureColumn {
        title: "Fidelity",
        extract: |r| r.fidelity,
    },
    MeasureColumn {
        title: "Average capacity",
        extract: |r| r.capacity_avg,
    },
    MeasureColumn {
        title: "Negativity",
        extract: |r| r.neg_mean,
    },
];

fn dash_pattern(family: StateFamily) -> &'static str {
    match family {
        StateFamily::Ghz => "",
        StateFamily::GhzLike => " stroke-dasharray=\"7 4\"",
        StateFamily::W => " stroke-dasharray=\"1.8 3.6\"",
    }
}

/// Renders every requested measure per region into one SVG document.
/// Only equal-acceleration sweeps are plottable; a triple grid has no single
/// abscissa.
pub fn render_chart(config: &SweepConfig, records: &[MeasureRecord]) -> Result<String, String> {
    if config.mode == SweepMode::Grid {
        return Err(
            "grid-mode records cannot be plotted (no single sweep axis); rerun with --mode equal"
                .to_string(),
        );
    }

    let measures: Vec<&MeasureColumn> = MEASURE_COLUMNS
        .iter()
        .filter(|m| records.iter().any(|r| (m.extract)(r).is_some()))
        .collect();
    if measures.is_empty() || records.is_empty() {
        return Err("nothing to plot: no records with requested measures".to_string());
    }

    let columns = config.regions.len();
    let rows = measures.len();
    let total_width = columns as f64 * PANEL_WIDTH + (columns as f64 - 1.0) * PANEL_GAP + 2.0;
    let total_height = rows as f64 * PANEL_HEIGHT + (rows as f64 - 1.0) * PANEL_GAP + 2.0;

    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg version=\"1.1\" xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" \
         viewBox=\"0 0 {} {}\" font-family=\"Helvetica, Arial, sans-serif\">\n",
        fmt(total_width),
        fmt(total_height),
        fmt(total_width),
        fmt(total_height),
    ));
    svg.push_str("<rect x=\"0\" y=\"0\" width=\"100%\" height=\"100%\" fill=\"white\"/>\n");

    for (row, measure) in measures.iter().enumerate() {
        for (col, &region) in config.regions.iter().enumerate() {
            let x0 = col as f64 * (PANEL_WIDTH + PANEL_GAP) + 1.0;
            let y0 = row as f64 * (PANEL_HEIGHT + PANEL_GAP) + 1.0;
            render_panel(&mut svg, config, records, measure, region, x0, y0);
        }
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}

fn render_panel(
    svg: &mut String,
    config: &SweepConfig,
    records: &[MeasureRecord],
    measure: &MeasureColumn,
    region: RindlerRegion,
    x0: f64,
    y0: f64,
) {
    let plot_x = x0 + MARGIN_LEFT;
    let plot_y = y0 + MARGIN_TOP;
    let plot_w = PANEL_WIDTH - MARGIN_LEFT - MARGIN_RIGHT;
    let plot_h = PANEL_HEIGHT - MARGIN_TOP - MARGIN_BOTTOM;

    let curves: Vec<(StateFamily, Vec<(f64, f64)>)> = config
        .families
        .iter()
        .map(|&family| {
            let points: Vec<(f64, f64)> = records
                .iter()
                .filter(|r| r.family == family && r.region == region)
                .filter_map(|r| (measure.extract)(r).map(|v| (r.r_a, v)))
                .collect();
            (family, points)
        })
        .filter(|(_, points)| !points.is_empty())
        .collect();

    let (x_lo, x_hi) = (config.r_start, config.r_end.max(config.r_start + 1e-12));
    let mut y_lo = 0.0f64;
    let mut y_hi = f64::MIN;
    for (_, points) in &curves {
        for &(_, v) in points {
            y_lo = y_lo.min(v);
            y_hi = y_hi.max(v);
        }
    }
    if y_hi <= y_lo {
        y_hi = y_lo + 1.0;
    }
    y_hi += 0.06 * (y_hi - y_lo);

    let to_x = |r: f64| plot_x + (r - x_lo) / (x_hi - x_lo) * plot_w;
    let to_y = |v: f64| plot_y + plot_h - (v - y_lo) / (y_hi - y_lo) * plot_h;

    svg.push_str(&format!(
        "<text x=\"{}\" y=\"{}\" font-size=\"14\" text-anchor=\"middle\">{} (region {})</text>\n",
        fmt(plot_x + plot_w / 2.0),
        fmt(y0 + 20.0),
        measure.title,
        region,
    ));

    // Axes and ticks.
    svg.push_str(&format!(
        "<line x1=\"{x1}\" y1=\"{y1}\" x2=\"{x1}\" y2=\"{y2}\" stroke=\"black\" stroke-width=\"1\"/>\n\
         <line x1=\"{x1}\" y1=\"{y2}\" x2=\"{x2}\" y2=\"{y2}\" stroke=\"black\" stroke-width=\"1\"/>\n",
        x1 = fmt(plot_x),
        y1 = fmt(plot_y),
        x2 = fmt(plot_x + plot_w),
        y2 = fmt(plot_y + plot_h),
    ));
    for k in 0..TICK_COUNT {
        let frac = k as f64 / (TICK_COUNT - 1) as f64;
        let rx = x_lo + frac * (x_hi - x_lo);
        let px = to_x(rx);
        let x_label = format!("{rx:.3}");
        svg.push_str(&format!(
            "<line x1=\"{x}\" y1=\"{y}\" x2=\"{x}\" y2=\"{y2}\" stroke=\"black\" stroke-width=\"1\"/>\n\
             <text x=\"{x}\" y=\"{ty}\" font-size=\"11\" text-anchor=\"middle\">{x_label}</text>\n",
            x = fmt(px),
            y = fmt(plot_y + plot_h),
            y2 = fmt(plot_y + plot_h + 5.0),
            ty = fmt(plot_y + plot_h + 18.0),
        ));
        let vy = y_lo + frac * (y_hi - y_lo);
        let py = to_y(vy);
        let y_label = format!("{vy:.2}");
        svg.push_str(&format!(
            "<line x1=\"{x2}\" y1=\"{y}\" x2=\"{x}\" y2=\"{y}\" stroke=\"black\" stroke-width=\"1\"/>\n\
             <text x=\"{tx}\" y=\"{ty}\" font-size=\"11\" text-anchor=\"end\">{y_label}</text>\n",
            x = fmt(plot_x),
            x2 = fmt(plot_x - 5.0),
            y = fmt(py),
            tx = fmt(plot_x - 8.0),
            ty = fmt(py + 4.0),
        ));
    }
    svg.push_str(&format!(
        "<text x=\"{}\" y=\"{}\" font-size=\"12\" text-anchor=\"middle\">r</text>\n",
        fmt(plot_x + plot_w / 2.0),
        fmt(plot_y + plot_h + 36.0),
    ));
    svg.push_str(&format!(
        "<text x=\"{}\" y=\"{}\" font-size=\"12\" text-anchor=\"middle\" transform=\"rotate(-90 {} {})\">{}</text>\n",
        fmt(x0 + 16.0),
        fmt(plot_y + plot_h / 2.0),
        fmt(x0 + 16.0),
        fmt(plot_y + plot_h / 2.0),
        measure.title,
    ));

    // Curves.
    for (family, points) in &curves {
        let path: Vec<String> = points
            .iter()
            .map(|&(r, v)| format!("{},{}", fmt(to_x(r)), fmt(to_y(v))))
            .collect();
        svg.push_str(&format!(
            "<polyline points=\"{}\" fill=\"none\" stroke=\"black\" stroke-width=\"1.6\"{}/>\n",
            path.join(" "),
            dash_pattern(*family),
        ));
    }

    // Legend, top-right inside the plot area.
    let legend_x = plot_x + plot_w - 108.0;
    for (k, (family, _)) in curves.iter().enumerate() {
        let ly = plot_y + 14.0 + 16.0 * k as f64;
        svg.push_str(&format!(
            "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"black\" stroke-width=\"1.6\"{}/>\n\
             <text x=\"{}\" y=\"{}\" font-size=\"11\">{}</text>\n",
            fmt(legend_x),
            fmt(ly),
            fmt(legend_x + 30.0),
            fmt(ly),
            dash_pattern(*family),
            fmt(legend_x + 36.0),
            fmt(ly + 4.0),
            family,
        ));
    }
}

fn fmt(v: f64) -> String {
    format!("{v:.2}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::MeasureSet;
    use crate::sweep::run_sweep;

    #[test]
    fn fidelity_chart_has_three_curves_and_legend() {
        let config = SweepConfig {
            regions: vec![RindlerRegion::I],
            steps: 5,
            measures: MeasureSet {
                fidelity: true,
                capacity: false,
                negativity: false,
            },
            ..SweepConfig::default()
        };
        let records = run_sweep(&config).unwrap();
        let svg = render_chart(&config, &records).unwrap();
        assert_eq!(svg.matches("<polyline").count(), 3);
        for label in [">GHZ<", ">GHZ-like<", ">W<"] {
            assert!(svg.contains(label), "legend should name {label}");
        }
        assert!(svg.contains("Fidelity (region I)"));
    }

    #[test]
    fn single_family_chart_has_one_curve() {
        let config = SweepConfig {
            families: vec![StateFamily::Ghz],
            regions: vec![RindlerRegion::II],
            steps: 4,
            measures: MeasureSet {
                fidelity: false,
                capacity: false,
                negativity: true,
            },
            ..SweepConfig::default()
        };
        let records = run_sweep(&config).unwrap();
        let svg = render_chart(&config, &records).unwrap();
        assert_eq!(svg.matches("<polyline").count(), 1);
        assert!(svg.contains("Negativity (region II)"));
    }

    #[test]
    fn grid_mode_rejected() {
        let config = SweepConfig {
            mode: SweepMode::Grid,
            steps: 2,
            ..SweepConfig::default()
        };
        let records = run_sweep(&config).unwrap();
        let err = render_chart(&config, &records).unwrap_err();
        assert!(err.contains("grid"), "{err}");
    }

    #[test]
    fn byte_determinism() {
        let config = SweepConfig {
            steps: 6,
            ..SweepConfig::default()
        };
        let records = run_sweep(&config).unwrap();
        let first = render_chart(&config, &records).unwrap();
        let second = render_chart(&config, &records).unwrap();
        assert_eq!(first, second);
    }
}
