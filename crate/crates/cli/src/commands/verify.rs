use std::io::Write;

use evosieve::genesis::parse_vector;
use evosieve::metrics::{approx_factor, gaussian_heuristic, membership};
use evosieve::reduction::audit_lll;

use super::lll_params;
use crate::args::VerifyArgs;
use crate::error::{CliError, CliResult, ExitStatus};
use crate::io::load_basis;

pub fn run(a: &VerifyArgs, out: &mut dyn Write) -> CliResult<()> {
    if a.vector.is_none() && !a.reduced {
        return Err(CliError::usage(
            "nothing to verify: pass --vector and/or --reduced",
        ));
    }
    let (b, _) = load_basis(&a.input, a.ring)?;
    let fail = |e| CliError::from_lib(e, ExitStatus::Failure);
    let mut ok = true;
    if let Some(text) = &a.vector {
        let v = parse_vector(text, b.ring()).map_err(|e| CliError::parse(e.to_string()))?;
        match membership(&b, &v).map_err(fail)? {
            Some(x) => {
                let coords: Vec<String> = x.iter().map(|c| c.to_string()).collect();
                writeln!(out, "member: yes coordinates=({})", coords.join(", "))?;
            }
            None => {
                ok = false;
                writeln!(out, "member: no")?;
            }
        }
        let sigma = gaussian_heuristic(&b, a.sigma_convention).map_err(fail)?;
        writeln!(
            out,
            "norm_sq={} norm={:.4} sigma={:.4} alpha={:.4}",
            v.norm_sq(),
            v.norm(),
            sigma,
            approx_factor(v.norm_sq(), sigma)
        )?;
    }
    if a.reduced {
        let p = lll_params(&a.delta, None)?;
        let audit = audit_lll(&b, &p.delta).map_err(fail)?;
        writeln!(
            out,
            "lll: {} size_violations={} lovasz_violations={} max_abs_mu={:.4}",
            if audit.passed() { "pass" } else { "fail" },
            audit.size_violations.len(),
            audit.lovasz_violations.len(),
            audit.max_abs_mu
        )?;
        ok &= audit.passed();
    }
    if ok {
        Ok(())
    } else {
        Err(CliError::new(ExitStatus::Failure, "verification failed"))
    }
}
