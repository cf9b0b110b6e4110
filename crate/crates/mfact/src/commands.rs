use std::fmt::Write as _;

use mfact_core::factorization::verify_with;
use mfact_core::refined::{construct, predict_sizes, validate_summand_reduced, SummandReducedPoly};
use mfact_core::{parse_expanded, parse_polynomial};

use crate::config::RunConfig;
use crate::error::CliError;
use crate::schema::{
    conditions_doc, FactorizationDoc, FactorizeOutput, PredictOutput, SizesDoc, SrpDoc,
    VerificationDoc, VerifyOutput,
};

/// Reads either a JSON `{ terms, products }` document or polynomial text.
///
/// Polynomial text becomes a summand-reduced input whose terms are the
/// monomials of its formal expansion, with no product groups.
pub fn parse_input(text: &str) -> Result<SummandReducedPoly, CliError> {
    let t = text.trim();
    if t.starts_with('{') {
        let doc: SrpDoc =
            serde_json::from_str(t).map_err(|e| CliError::Malformed(e.to_string()))?;
        return srp_from_doc(&doc);
    }
    let form = parse_expanded(t).map_err(|e| CliError::Parse(e.to_string()))?;
    if form.to_polynomial().is_zero() {
        return Err(CliError::Malformed(
            "the zero polynomial has no factorization".into(),
        ));
    }
    let terms = form.terms().iter().map(|m| m.to_polynomial()).collect();
    Ok(SummandReducedPoly::new(terms, Vec::new())?)
}

pub fn srp_from_doc(doc: &SrpDoc) -> Result<SummandReducedPoly, CliError> {
    let parse = |what: String, s: &str| {
        parse_polynomial(s).map_err(|e| CliError::Parse(format!("{what} {s:?}: {e}")))
    };
    let terms = doc
        .terms
        .iter()
        .enumerate()
        .map(|(i, s)| parse(format!("terms[{i}]"), s))
        .collect::<Result<Vec<_>, _>>()?;
    let mut products = Vec::with_capacity(doc.products.len());
    for (j, group) in doc.products.iter().enumerate() {
        products.push(
            group
                .iter()
                .enumerate()
                .map(|(k, s)| parse(format!("products[{j}][{k}]"), s))
                .collect::<Result<Vec<_>, _>>()?,
        );
    }
    Ok(SummandReducedPoly::new(terms, products)?)
}

fn check_strict(srp: &SummandReducedPoly, cfg: &RunConfig) -> Result<(), CliError> {
    let report = validate_summand_reduced(srp);
    if cfg.strict_validate && !report.is_valid() {
        return Err(CliError::Strict(report.to_string()));
    }
    Ok(())
}

pub fn cmd_factorize(input: &str, cfg: &RunConfig) -> Result<FactorizeOutput, CliError> {
    let srp = parse_input(input)?;
    check_strict(&srp, cfg)?;
    let sizes = predict_sizes(&srp)?;
    let mf = construct(&srp, cfg.method, &cfg.pipeline_options())?;
    let report = mf.verify(cfg.policy());
    if let Some(failure) = &report.failure {
        return Err(CliError::Verification(failure.to_string()));
    }
    Ok(FactorizeOutput {
        method: cfg.method.to_string(),
        yoshino_variant: cfg.yoshino_variant.to_string(),
        standard_variant: cfg.standard_variant.to_string(),
        predicted: SizesDoc::from(&sizes),
        verification: VerificationDoc::from(&report),
        factorization: FactorizationDoc::from_factorization(&mf),
    })
}

/// Verifies a serialized factorization. A failed check is a normal result
/// (see [`VerifyOutput::verification`]); only unreadable input is an error.
pub fn cmd_verify(document: &str, cfg: &RunConfig) -> Result<VerifyOutput, CliError> {
    let doc: FactorizationDoc =
        serde_json::from_str(document).map_err(|e| CliError::Malformed(e.to_string()))?;
    let (f, phi, psi) = doc.parse()?;
    let report = verify_with(&f, &phi, &psi, cfg.policy())
        .map_err(|e| CliError::Malformed(e.to_string()))?;
    Ok(VerifyOutput {
        f: f.to_string(),
        size: doc.size,
        verification: VerificationDoc::from(&report),
    })
}

pub fn cmd_predict(input: &str, cfg: &RunConfig) -> Result<PredictOutput, CliError> {
    let srp = parse_input(input)?;
    check_strict(&srp, cfg)?;
    let validation = validate_summand_reduced(&srp);
    let sizes = predict_sizes(&srp)?;
    Ok(PredictOutput {
        target: srp.target().to_string(),
        valid: validation.is_valid(),
        conditions: conditions_doc(&validation),
        predicted: SizesDoc::from(&sizes),
    })
}

fn pow_text(p: &crate::schema::PowerOfTwo) -> String {
    match p.value {
        Some(v) => format!("2^{} = {v}", p.exponent),
        None => format!("2^{}", p.exponent),
    }
}

fn sizes_text(out: &mut String, s: &SizesDoc) {
    let _ = writeln!(out, "predicted sizes (s = {}, l = {}):", s.s, s.l);
    let _ = writeln!(out, "  standard  {}", pow_text(&s.standard));
    let _ = writeln!(out, "  improved  {}", pow_text(&s.improved));
    let _ = writeln!(out, "  refined   {}", pow_text(&s.refined));
    let _ = writeln!(
        out,
        "  refined is {} times smaller than standard, {} times smaller than improved",
        pow_text(&s.ratio_refined_vs_standard),
        pow_text(&s.ratio_refined_vs_improved)
    );
}

fn verification_text(out: &mut String, v: &VerificationDoc) {
    let status = if v.passed { "passed" } else { "FAILED" };
    match (v.trials, v.seed) {
        (Some(t), Some(s)) => {
            let _ = writeln!(
                out,
                "verification: {} ({t} trials, seed {s}) {status}",
                v.mode
            );
        }
        _ => {
            let _ = writeln!(out, "verification: {} {status}", v.mode);
        }
    }
    if let Some(f) = &v.failure {
        let _ = write!(out, "  {} entry [{}][{}]", f.product, f.row, f.col);
        if let (Some(found), Some(expected)) = (&f.found, &f.expected) {
            let _ = write!(out, " is {found}, expected {expected}");
        }
        if let Some(trial) = f.trial {
            let _ = write!(out, " differs in trial {trial}");
        }
        out.push('\n');
    }
}

fn matrix_text(out: &mut String, name: &str, rows: &[Vec<String>]) {
    let _ = writeln!(out, "{name} =");
    for row in rows {
        let _ = writeln!(out, "[{}]", row.join(", "));
    }
}

pub fn render_factorize(o: &FactorizeOutput) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "method: {} (yoshino variant {}, standard-method variant {})",
        o.method, o.yoshino_variant, o.standard_variant
    );
    let _ = writeln!(out, "f = {}", o.factorization.f);
    let _ = writeln!(out, "size = {}", o.factorization.size);
    sizes_text(&mut out, &o.predicted);
    verification_text(&mut out, &o.verification);
    matrix_text(&mut out, "phi", &o.factorization.phi);
    matrix_text(&mut out, "psi", &o.factorization.psi);
    out
}

pub fn render_verify(o: &VerifyOutput) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "f = {}", o.f);
    let _ = writeln!(out, "size = {}", o.size);
    verification_text(&mut out, &o.verification);
    out
}

pub fn render_predict(o: &PredictOutput) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "f = {}", o.target);
    for c in &o.conditions {
        let tag = if c.passed { "ok  " } else { "FAIL" };
        let _ = writeln!(out, "condition {} {tag} {}", c.condition, c.reason);
    }
    sizes_text(&mut out, &o.predicted);
    out
}
