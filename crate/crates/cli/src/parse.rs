//! Parsers for the compact argument forms `WxH`, `PxQ` and noise specs.

use anyhow::{anyhow, bail, Context, Result};
use texperiod::NoiseSpec;

/// Parse `AxB` into two positive integers.
pub fn parse_pair(s: &str) -> Result<(usize, usize)> {
    let (a, b) = s
        .split_once(['x', 'X'])
        .ok_or_else(|| anyhow!("expected AxB, got {s:?}"))?;
    let a: usize = a
        .trim()
        .parse()
        .with_context(|| format!("bad number in {s:?}"))?;
    let b: usize = b
        .trim()
        .parse()
        .with_context(|| format!("bad number in {s:?}"))?;
    if a == 0 || b == 0 {
        bail!("both sides of {s:?} must be positive");
    }
    Ok((a, b))
}

/// `gaussian:<sigma>`, `replace:<probability>` or `none`.
pub fn parse_noise(s: &str, seed: u64) -> Result<Option<NoiseSpec>> {
    if s.eq_ignore_ascii_case("none") {
        return Ok(None);
    }
    let (kind, value) = s
        .split_once(':')
        .ok_or_else(|| anyhow!("noise must be gaussian:<sigma> or replace:<prob>, got {s:?}"))?;
    let value: f64 = value
        .trim()
        .parse()
        .with_context(|| format!("bad noise parameter in {s:?}"))?;
    let spec = match kind.trim() {
        "gaussian" => NoiseSpec::gaussian(value, seed),
        "replace" => NoiseSpec::replace_uniform(value, seed),
        other => bail!("unknown noise kind {other:?}"),
    };
    spec.validate()?;
    Ok(Some(spec))
}
