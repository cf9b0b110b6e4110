//! The worked-example corpus, run as a pass/fail table.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use mfact_core::catalog;
use mfact_core::refined::{
    predict_sizes, run_method, validate_summand_reduced, Method, PipelineOptions,
    SummandReducedPoly,
};
use mfact_core::standard::standard_factorize_polynomial;
use mfact_core::tensor::mult_tensor;
use mfact_core::{MatrixFactorization, StandardVariant, VerifyPolicy};

use crate::commands::cmd_verify;
use crate::config::{RunConfig, VerifyChoice};
use crate::error::CliError;
use crate::schema::{DemoOutput, DemoRow, Erratum, FactorizationDoc};

pub const FIXTURE_NAMES: [&str; 9] = [
    "intro_2.json",
    "hg_8.json",
    "gt_16.json",
    "rhg_16.json",
    "rhg_16_corrected.json",
    "rhg_16_errata.json",
    "rgt_32.json",
    "rgt_32_corrected.json",
    "rgt_32_errata.json",
];

fn embedded(name: &str) -> Option<&'static str> {
    Some(match name {
        "intro_2.json" => include_str!("../fixtures/intro_2.json"),
        "hg_8.json" => include_str!("../fixtures/hg_8.json"),
        "gt_16.json" => include_str!("../fixtures/gt_16.json"),
        "rhg_16.json" => include_str!("../fixtures/rhg_16.json"),
        "rhg_16_corrected.json" => include_str!("../fixtures/rhg_16_corrected.json"),
        "rhg_16_errata.json" => include_str!("../fixtures/rhg_16_errata.json"),
        "rgt_32.json" => include_str!("../fixtures/rgt_32.json"),
        "rgt_32_corrected.json" => include_str!("../fixtures/rgt_32_corrected.json"),
        "rgt_32_errata.json" => include_str!("../fixtures/rgt_32_errata.json"),
        _ => return None,
    })
}

/// Fixture source: the copies compiled into the binary, or a directory.
#[derive(Clone, Debug, Default)]
pub struct Fixtures {
    dir: Option<PathBuf>,
}

impl Fixtures {
    pub fn embedded() -> Self {
        Fixtures { dir: None }
    }

    pub fn from_dir(dir: impl AsRef<Path>) -> Self {
        Fixtures {
            dir: Some(dir.as_ref().to_path_buf()),
        }
    }

    pub fn load(&self, name: &str) -> Result<String, CliError> {
        match &self.dir {
            Some(dir) => std::fs::read_to_string(dir.join(name))
                .map_err(|e| CliError::Io(format!("{}: {e}", dir.join(name).display()))),
            None => embedded(name)
                .map(str::to_owned)
                .ok_or_else(|| CliError::Io(format!("no embedded fixture {name}"))),
        }
    }

    pub fn factorization_doc(&self, name: &str) -> Result<FactorizationDoc, CliError> {
        serde_json::from_str(&self.load(name)?)
            .map_err(|e| CliError::Malformed(format!("{name}: {e}")))
    }

    pub fn errata(&self, name: &str) -> Result<Vec<Erratum>, CliError> {
        serde_json::from_str(&self.load(name)?)
            .map_err(|e| CliError::Malformed(format!("{name}: {e}")))
    }
}

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn verify_fixture(fx: &Fixtures, name: &str, cfg: &RunConfig) -> Result<(), String> {
    let text = fx.load(name).map_err(|e| e.to_string())?;
    let out = cmd_verify(&text, cfg).map_err(|e| format!("{name}: {e}"))?;
    match out.verification.failure {
        None => Ok(()),
        Some(f) => Err(format!(
            "{name}: {} entry [{}][{}] wrong",
            f.product, f.row, f.col
        )),
    }
}

/// The fixture must equal `built` entry by entry.
fn matches_construction(
    fx: &Fixtures,
    name: &str,
    built: &MatrixFactorization,
) -> Result<(), String> {
    let doc = fx.factorization_doc(name).map_err(|e| e.to_string())?;
    let (f, phi, psi) = doc.parse().map_err(|e| e.to_string())?;
    ensure(&f == built.f(), || {
        format!("{name}: target differs from construction")
    })?;
    ensure(&phi == built.phi(), || {
        format!("{name}: phi differs from construction")
    })?;
    ensure(&psi == built.psi(), || {
        format!("{name}: psi differs from construction")
    })
}

/// The raw transcription fails, and applying the listed errata gives the
/// corrected file.
fn errata_account_for_failure(fx: &Fixtures, stem: &str, cfg: &RunConfig) -> Check {
    let raw_name = format!("{stem}.json");
    let raw_text = fx.load(&raw_name).map_err(|e| e.to_string())?;
    let raw = cmd_verify(&raw_text, cfg).map_err(|e| e.to_string())?;
    ensure(!raw.verification.passed, || {
        format!("{raw_name}: printed pair unexpectedly verifies")
    })?;
    let errata = fx
        .errata(&format!("{stem}_errata.json"))
        .map_err(|e| e.to_string())?;
    let mut doc = fx.factorization_doc(&raw_name).map_err(|e| e.to_string())?;
    for e in &errata {
        let slot = doc
            .entry_mut(&e.matrix, e.row, e.col)
            .ok_or_else(|| format!("erratum {}[{}][{}] out of range", e.matrix, e.row, e.col))?;
        ensure(*slot == e.printed, || {
            format!(
                "erratum {}[{}][{}]: printed text is {slot:?}",
                e.matrix, e.row, e.col
            )
        })?;
        *slot = e.corrected.clone();
    }
    let corrected = fx
        .factorization_doc(&format!("{stem}_corrected.json"))
        .map_err(|e| e.to_string())?;
    let same =
        doc.parse().map_err(|e| e.to_string())? == corrected.parse().map_err(|e| e.to_string())?;
    ensure(same, || {
        format!("{stem}: errata do not turn the printed pair into the corrected one")
    })?;
    Ok(format!(
        "printed pair fails; {} corrected entries repair it",
        errata.len()
    ))
}

fn sizes_of(
    srp: &SummandReducedPoly,
    cfg: &RunConfig,
    methods: &[Method],
) -> Result<Vec<usize>, String> {
    let opts = PipelineOptions {
        max_standard_monomials: usize::MAX,
        ..cfg.pipeline_options()
    };
    methods
        .iter()
        .map(|&m| {
            run_method(srp, m, &opts)
                .map(|x| x.size())
                .map_err(|e| format!("{m}: {e}"))
        })
        .collect()
}

fn check_intro(fx: &Fixtures, cfg: &RunConfig) -> Check {
    verify_fixture(fx, "intro_2.json", cfg)?;
    matches_construction(fx, "intro_2.json", &catalog::x2_plus_4())?;
    Ok("2x2 pair of x^2 + 4 verifies".into())
}

fn check_standard_sizes(_: &Fixtures, cfg: &RunConfig) -> Check {
    let mut sizes = Vec::new();
    for text in ["xy + z^2", "xy^2 + x^2z + yz^2"] {
        let p = mfact_core::parse_polynomial(text).map_err(|e| e.to_string())?;
        let x = standard_factorize_polynomial(&p, StandardVariant::Standard)
            .map_err(|e| e.to_string())?;
        ensure(x.verify_exact().passed(), || {
            format!("{text} does not verify")
        })?;
        sizes.push(x.size());
    }
    sizes.extend(sizes_of(&catalog::srp_zy_gh(), cfg, &[Method::Standard])?);
    ensure(sizes == [2, 4, 64], || {
        format!("sizes {sizes:?}, expected [2, 4, 64]")
    })?;
    Ok("h: 2, g: 4, expanded zy + gh: 64".into())
}

fn check_reduced_tensor(fx: &Fixtures, cfg: &RunConfig) -> Check {
    verify_fixture(fx, "hg_8.json", cfg)?;
    verify_fixture(fx, "gt_16.json", cfg)?;
    matches_construction(fx, "hg_8.json", &catalog::hg_factorization())?;
    matches_construction(fx, "gt_16.json", &catalog::gt_factorization())?;
    let (m, p, n) = (
        catalog::m_factorization(),
        catalog::p_factorization(),
        catalog::n_factorization(),
    );
    let sizes = [mult_tensor(&m, &p).size(), mult_tensor(&p, &n).size()];
    ensure(sizes == [16, 32], || {
        format!("multiplicative sizes {sizes:?}")
    })?;
    Ok("M(x)P 8, P(x)N 16; multiplicative 16, 32".into())
}

fn check_part_one(fx: &Fixtures, cfg: &RunConfig) -> Check {
    let sizes = sizes_of(
        &catalog::srp_zy_gh(),
        cfg,
        &[Method::Refined, Method::Improved, Method::Standard],
    )?;
    ensure(sizes == [16, 32, 64], || {
        format!("sizes {sizes:?}, expected [16, 32, 64]")
    })?;
    verify_fixture(fx, "rhg_16_corrected.json", cfg)?;
    matches_construction(fx, "rhg_16_corrected.json", &catalog::rhg_factorization())?;
    Ok("refined 16, improved 32, standard 64; 16x16 pair verifies".into())
}

fn check_part_two(fx: &Fixtures, cfg: &RunConfig) -> Check {
    let srp = catalog::srp_x5y2_gt();
    let sizes = sizes_of(&srp, cfg, &[Method::Refined])?;
    ensure(sizes == [32], || {
        format!("refined size {sizes:?}, expected 32")
    })?;
    let r = predict_sizes(&srp).map_err(|e| e.to_string())?;
    ensure(
        r.standard_size() == Some(512) && r.ratio_refined_vs_standard() == Some(16),
        || format!("predicted {r:?}"),
    )?;
    verify_fixture(fx, "rgt_32_corrected.json", cfg)?;
    matches_construction(fx, "rgt_32_corrected.json", &catalog::rgt_factorization())?;
    Ok("refined 32, standard 512 predicted, ratio 16; 32x32 pair verifies".into())
}

fn check_two_products(_: &Fixtures, _: &RunConfig) -> Check {
    let r = predict_sizes(&catalog::srp_two_products()).map_err(|e| e.to_string())?;
    let got = (
        r.standard_exp,
        r.improved_exp,
        r.refined_exp,
        r.ratio_refined_vs_improved(),
    );
    ensure(got == (15, 11, 9, Some(4)), || format!("got {got:?}"))?;
    Ok("2^15 / 2^11 / 2^9, ratio 4".into())
}

fn check_large_standard(_: &Fixtures, cfg: &RunConfig) -> Check {
    let opts = PipelineOptions {
        max_standard_monomials: 512,
        verify: VerifyPolicy::Randomized {
            trials: 5,
            seed: cfg.seed,
        },
        ..cfg.pipeline_options()
    };
    let x =
        run_method(&catalog::srp_x5y2_gt(), Method::Standard, &opts).map_err(|e| e.to_string())?;
    ensure(x.size() == 512, || format!("size {}", x.size()))?;
    Ok("512x512 standard pair passes 5 random trials".into())
}

fn check_non_examples(_: &Fixtures, _: &RunConfig) -> Check {
    let a = validate_summand_reduced(&catalog::srp_x3_minus_y2());
    let b = validate_summand_reduced(&catalog::srp_zx_geometric());
    let c = validate_summand_reduced(&catalog::srp_z5());
    ensure(!a.condition(1).is_some_and(|c| c.passed), || {
        "x^3 - y^2 passes condition 1".into()
    })?;
    ensure(!b.condition(3).is_some_and(|c| c.passed), || {
        "zx + (x - y)(...) passes condition 3".into()
    })?;
    ensure(c.is_valid(), || format!("z^5 + ... rejected:\n{c}"))?;
    Ok("condition 1 and condition 3 failures detected".into())
}

type Entry = (&'static str, fn(&Fixtures, &RunConfig) -> Check);

const CHECKS: [Entry; 11] = [
    ("x^2+4 pair", check_intro),
    ("standard method sizes", check_standard_sizes),
    ("reduced tensor blocks", check_reduced_tensor),
    ("zy+gh pipelines", check_part_one),
    ("printed 16x16 errata", |fx, cfg| {
        errata_account_for_failure(fx, "rhg_16", cfg)
    }),
    ("x5y2+gt pipelines", check_part_two),
    ("printed 32x32 errata", |fx, cfg| {
        errata_account_for_failure(fx, "rgt_32", cfg)
    }),
    ("two-product size formulas", check_two_products),
    ("512x512 standard pair", check_large_standard),
    ("non-examples", check_non_examples),
    ("list item z^5", |_, _| {
        let r = validate_summand_reduced(&catalog::srp_z5());
        ensure(r.is_valid(), || r.to_string()).map(|_| "all four conditions hold".into())
    }),
];

pub fn cmd_demo(fixtures: &Fixtures, cfg: &RunConfig) -> DemoOutput {
    // fixtures are checked exactly unless the caller forces randomized mode
    let cfg = RunConfig {
        verify: match cfg.verify {
            VerifyChoice::Randomized => VerifyChoice::Randomized,
            _ => VerifyChoice::Exact,
        },
        ..*cfg
    };
    let rows: Vec<DemoRow> = CHECKS
        .iter()
        .map(|(name, check)| {
            let (passed, detail) = match check(fixtures, &cfg) {
                Ok(d) => (true, d),
                Err(d) => (false, d),
            };
            DemoRow {
                name: (*name).to_string(),
                passed,
                detail,
            }
        })
        .collect();
    DemoOutput {
        passed: rows.iter().all(|r| r.passed),
        rows,
    }
}

pub fn render_demo(o: &DemoOutput) -> String {
    let width = o.rows.iter().map(|r| r.name.len()).max().unwrap_or(0);
    let mut out = String::new();
    for r in &o.rows {
        let tag = if r.passed { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "{tag}  {:width$}  {}", r.name, r.detail);
    }
    let failed = o.rows.iter().filter(|r| !r.passed).count();
    let _ = writeln!(out, "{} checks, {failed} failed", o.rows.len());
    out
}
