//! Channel loading and the non-verification subcommands.

use std::fmt::Write as _;

use mazic_core::gaussian::{
    boundary_segment, inner_bound, inner_bound_timeshared, mixed_inner, mixed_outer, nosplit_inner, one_strong_outer,
    strong_capacity_b_large, strong_outer, sum_capacity_special, sum_capacity_symmetric, sum_rate_upper_theorem6,
    very_strong_capacity, weak_outer, weak_sumrate_profile,
};
use mazic_core::json::{fmt_g17, to_string};
use mazic_core::{classify as classify_channel, GaussianMazic, Polytope3, RegionUnion, SplitParams};
use serde_json::{json, Map, Value};

use crate::error::CliError;
use crate::{Format, Opts, Output, RegionKind, SumrateKind};

const DEFAULT_TS_GRID: usize = 11;
const DEFAULT_UNION_GRID: usize = 101;
const DEFAULT_SWEEP_POINTS: usize = 2001;

/// Parse the `--channel` file, if any, as a JSON value.
pub fn read_channel_file(opts: &Opts) -> Result<Option<Value>, CliError> {
    let Some(path) = &opts.channel else { return Ok(None) };
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map(Some).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// The Gaussian channel from the file and inline flags; flags win. A
/// missing `p1` falls back to `p1_default` when given.
pub fn gaussian(opts: &Opts, p1_default: Option<f64>) -> Result<GaussianMazic, CliError> {
    let mut map = match read_channel_file(opts)? {
        None => Map::new(),
        Some(Value::Object(m)) => m,
        Some(_) => return Err(CliError::Input("channel file must hold a JSON object".into())),
    };
    let flags = [("a", opts.a), ("b", opts.b), ("p1", opts.p1.or(p1_default)), ("p2", opts.p2), ("p3", opts.p3)];
    for (name, v) in flags {
        if let Some(v) = v {
            map.insert(name.into(), json!(v));
        } else if !map.contains_key(name) {
            return Err(CliError::Input(format!("missing channel parameter {name} (use --{name} or --channel)")));
        }
    }
    let ch: GaussianMazic =
        serde_json::from_value(Value::Object(map)).map_err(|e| CliError::Input(format!("channel: {e}")))?;
    ch.validate()?;
    Ok(ch)
}

fn split(opts: &Opts) -> Result<SplitParams, CliError> {
    Ok(SplitParams::new(opts.alpha.unwrap_or(0.0), opts.beta.unwrap_or(0.0))?)
}

pub fn classify(opts: &Opts) -> Result<Output, CliError> {
    let ch = gaussian(opts, None)?;
    Ok(Output::ok(to_string(&classify_channel(&ch)?)))
}

fn csv_row(values: impl IntoIterator<Item = f64>) -> String {
    values.into_iter().map(fmt_g17).collect::<Vec<_>>().join(",")
}

fn polytope_output(p: &Polytope3, format: Format) -> String {
    match format {
        Format::Json => to_string(&p.to_json()),
        Format::Csv => {
            let mut s = String::from("r1,r2,r3\n");
            for v in p.vertices() {
                let _ = writeln!(s, "{}", csv_row(v.to_array()));
            }
            s
        }
    }
}

fn union_output(u: &RegionUnion, format: Format) -> String {
    match format {
        Format::Json => to_string(&u.to_json_value()),
        Format::Csv => {
            let mut s = u.param_names().join(",");
            s.push_str(",r1,r2,r3\n");
            for slice in u.slices() {
                for v in slice.region.vertices() {
                    let _ = writeln!(s, "{}", csv_row(slice.params.iter().copied().chain(v.to_array())));
                }
            }
            s
        }
    }
}

pub fn region(opts: &Opts, which: RegionKind) -> Result<Output, CliError> {
    let ch = gaussian(opts, None)?;
    let f = opts.format;
    let text = match which {
        RegionKind::Inner => polytope_output(&inner_bound(&ch, split(opts)?)?, f),
        RegionKind::InnerTs => polytope_output(&inner_bound_timeshared(&ch, opts.grid_or(DEFAULT_TS_GRID)?)?, f),
        RegionKind::Nosplit => polytope_output(&nosplit_inner(&ch)?, f),
        RegionKind::StrongOuter => polytope_output(&strong_outer(&ch)?, f),
        RegionKind::OneStrongOuter => polytope_output(&one_strong_outer(&ch)?, f),
        RegionKind::VeryStrong => polytope_output(&very_strong_capacity(&ch)?, f),
        RegionKind::MixedOuter => union_output(&mixed_outer(&ch, opts.grid_or(DEFAULT_UNION_GRID)?)?, f),
        RegionKind::MixedInner => polytope_output(&mixed_inner(&ch, opts.alpha.unwrap_or(0.0))?, f),
        RegionKind::WeakOuter => union_output(&weak_outer(&ch, opts.grid_or(DEFAULT_UNION_GRID)?)?, f),
        RegionKind::BLargeCapacity => polytope_output(&strong_capacity_b_large(&ch)?, f),
    };
    Ok(Output::ok(text))
}

pub fn segment(opts: &Opts) -> Result<Output, CliError> {
    let ch = gaussian(opts, None)?;
    Ok(Output::ok(to_string(&boundary_segment(&ch)?)))
}

pub fn sumrate(opts: &Opts, which: SumrateKind) -> Result<Output, CliError> {
    let ch = gaussian(opts, None)?;
    let value = match which {
        SumrateKind::Symmetric => json!({ "value_bits": sum_capacity_symmetric(&ch)? }),
        SumrateKind::Theorem6 => serde_json::to_value(sum_rate_upper_theorem6(&ch)?).expect("plain data serializes"),
        SumrateKind::Special => match sum_capacity_special(&ch)? {
            Some(v) => json!({ "applicable": true, "value_bits": v }),
            None => json!({ "applicable": false }),
        },
    };
    Ok(Output::ok(to_string(&value)))
}

pub fn sweep(opts: &Opts) -> Result<Output, CliError> {
    // The sweep varies P1, so the channel's own P1 is optional.
    let ch = gaussian(opts, Some(1.0))?;
    let n = opts.grid_or(DEFAULT_SWEEP_POINTS)?;
    let (lo, hi) = match (opts.lo, opts.hi) {
        (lo, Some(hi)) => (lo.unwrap_or(0.0), hi),
        (lo, None) => {
            let g = (ch.a * ch.b).sqrt();
            (lo.unwrap_or(0.0), (1.0 - g) / (g - ch.a))
        }
    };
    let profile = weak_sumrate_profile(&ch, lo, hi, n)?;
    let text = match opts.format {
        Format::Json => to_string(&profile),
        Format::Csv => {
            let mut s = String::from("p1,f_bits,envelope_bits,gap_bits\n");
            for r in &profile.rows {
                let _ = writeln!(s, "{}", csv_row([r.p1, r.f_bits, r.envelope_bits, r.gap_bits]));
            }
            s
        }
    };
    Ok(Output::ok(text))
}
