//! Kernel specification grammar for the command line.
//!
//! Three forms are accepted:
//!
//! * shorthand: `bernoulli:R` or `bernoulli:R:M`, `poisson:RHO` or
//!   `poisson:RHO:M`;
//! * long form: `family=bernoulli r=R M=4096`, `family=poisson rho=0.5`;
//! * raw coefficients: `coeffs a0=0.5 ak=[1,0.5] bk=[0,-0.25]`
//!   (either list may be omitted).

use anyhow::{anyhow, bail, Context, Result};
use svapprox_core::kernels::Kernel;

pub fn parse_kernel(spec: &str) -> Result<Kernel> {
    let spec = spec.trim();
    if spec.is_empty() {
        bail!("empty kernel spec");
    }
    if let Some(rest) = spec.strip_prefix("bernoulli:") {
        return shorthand_bernoulli(rest);
    }
    if let Some(rest) = spec.strip_prefix("poisson:") {
        return shorthand_poisson(rest);
    }
    if spec.starts_with("family=") {
        return long_form(spec);
    }
    if let Some(rest) = spec.strip_prefix("coeffs") {
        return coeff_form(rest);
    }
    bail!("unrecognized kernel spec {spec:?}; expected bernoulli:R, poisson:RHO, family=..., or coeffs ...");
}

fn shorthand_bernoulli(rest: &str) -> Result<Kernel> {
    let mut parts = rest.split(':');
    let r: u32 = parts
        .next()
        .filter(|s| !s.is_empty())
        .ok_or_else(|| anyhow!("bernoulli spec needs a smoothness order, e.g. bernoulli:1"))?
        .parse()
        .context("bernoulli smoothness order")?;
    let kernel = match parts.next() {
        Some(m) => Kernel::bernoulli(r, m.parse::<usize>().context("bernoulli harmonic cap")?),
        None => Kernel::bernoulli_default(r),
    }?;
    if parts.next().is_some() {
        bail!("trailing fields in bernoulli spec");
    }
    Ok(kernel)
}

fn shorthand_poisson(rest: &str) -> Result<Kernel> {
    let mut parts = rest.split(':');
    let rho: f64 = parts
        .next()
        .filter(|s| !s.is_empty())
        .ok_or_else(|| anyhow!("poisson spec needs a radius, e.g. poisson:0.5"))?
        .parse()
        .context("poisson radius")?;
    let kernel = match parts.next() {
        Some(m) => Kernel::poisson(rho, m.parse::<usize>().context("poisson harmonic cap")?),
        None => Kernel::poisson_default(rho),
    }?;
    if parts.next().is_some() {
        bail!("trailing fields in poisson spec");
    }
    Ok(kernel)
}

fn long_form(spec: &str) -> Result<Kernel> {
    let mut family = None;
    let mut r = None;
    let mut rho = None;
    let mut m = None;
    for field in spec.split_whitespace() {
        let (key, value) = field
            .split_once('=')
            .ok_or_else(|| anyhow!("expected key=value, got {field:?}"))?;
        match key {
            "family" => family = Some(value.to_string()),
            "r" => r = Some(value.parse::<u32>().context("field r")?),
            "rho" => rho = Some(value.parse::<f64>().context("field rho")?),
            "M" => m = Some(value.parse::<usize>().context("field M")?),
            _ => bail!("unknown kernel field {key:?}"),
        }
    }
    let kernel = match family.as_deref() {
        Some("bernoulli") => {
            let r = r.ok_or_else(|| anyhow!("family=bernoulli needs r=..."))?;
            match m {
                Some(m) => Kernel::bernoulli(r, m),
                None => Kernel::bernoulli_default(r),
            }?
        }
        Some("poisson") => {
            let rho = rho.ok_or_else(|| anyhow!("family=poisson needs rho=..."))?;
            match m {
                Some(m) => Kernel::poisson(rho, m),
                None => Kernel::poisson_default(rho),
            }?
        }
        Some(other) => bail!("unknown kernel family {other:?}"),
        None => bail!("missing family=..."),
    };
    Ok(kernel)
}

fn coeff_form(rest: &str) -> Result<Kernel> {
    let mut a0 = 0.0;
    let mut ak = Vec::new();
    let mut bk = Vec::new();
    for field in rest.split_whitespace() {
        let (key, value) = field
            .split_once('=')
            .ok_or_else(|| anyhow!("expected key=value, got {field:?}"))?;
        match key {
            "a0" => a0 = value.parse().context("field a0")?,
            "ak" => ak = parse_list(value).context("field ak")?,
            "bk" => bk = parse_list(value).context("field bk")?,
            _ => bail!("unknown coeffs field {key:?}"),
        }
    }
    let len = ak.len().max(bk.len());
    ak.resize(len, 0.0);
    bk.resize(len, 0.0);
    Ok(Kernel::from_coeffs(a0, ak, bk)?)
}

fn parse_list(value: &str) -> Result<Vec<f64>> {
    let inner = value
        .strip_prefix('[')
        .and_then(|v| v.strip_suffix(']'))
        .ok_or_else(|| anyhow!("expected a [v1,v2,...] list, got {value:?}"))?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|v| v.trim().parse::<f64>().map_err(|e| anyhow!("bad list entry {v:?}: {e}")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use svapprox_core::kernels::ClosedForm;

    #[test]
    fn shorthand_forms_resolve() {
        let k = parse_kernel("bernoulli:1").unwrap();
        assert!(matches!(k.family(), ClosedForm::BernoulliR1));
        assert_eq!(k.max_harmonic(), 4096);
        let k = parse_kernel("bernoulli:2:128").unwrap();
        assert!(matches!(k.family(), ClosedForm::BernoulliR2));
        assert_eq!(k.max_harmonic(), 128);
        let k = parse_kernel("poisson:0.5").unwrap();
        assert!(matches!(k.family(), ClosedForm::Poisson { .. }));
    }

    #[test]
    fn long_form_resolves() {
        let k = parse_kernel("family=bernoulli r=3 M=64").unwrap();
        assert!(matches!(k.family(), ClosedForm::BernoulliHigher { r: 3 }));
        assert_eq!(k.max_harmonic(), 64);
        let k = parse_kernel("family=poisson rho=0.25").unwrap();
        assert!(matches!(k.family(), ClosedForm::Poisson { .. }));
    }

    #[test]
    fn coeff_form_pads_the_shorter_list() {
        let k = parse_kernel("coeffs a0=0.5 ak=[1,0.5] bk=[0.25]").unwrap();
        assert_eq!(k.a0(), 0.5);
        assert_eq!(k.max_harmonic(), 2);
        assert_eq!(k.cos_coeff(2), 0.5);
        assert_eq!(k.sin_coeff(2), 0.0);
    }

    #[test]
    fn bad_specs_are_rejected() {
        for bad in [
            "",
            "gauss:1",
            "bernoulli:",
            "bernoulli:0",
            "bernoulli:1:16:9",
            "poisson:1.5",
            "family=bernoulli",
            "family=poisson r=1",
            "coeffs a0=x",
            "coeffs ak=1,2",
        ] {
            assert!(parse_kernel(bad).is_err(), "spec {bad:?} should fail");
        }
    }
}
