use serde_json::json;
use verma_core::ideals::equality_report;
use verma_core::quotient::{classify, jet_rows, Classification, QuotientEngine};
use verma_core::rootdata::{m_of_lambda, ParabolicCharacter};
use verma_core::verma::build_module;
use verma_core::{binomial, Error};

use crate::config::{Command, RunConfig};
use crate::report::Report;
use crate::verify;

/// Why a run did not succeed; decides the exit code.
#[derive(Debug)]
pub enum Failure {
    /// Exit 2: the configuration is unusable.
    Invalid(String),
    /// Exit 1: an invariant failed.
    Violated(String),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Invalid(_) => 2,
            Failure::Violated(_) => 1,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            Failure::Invalid(m) | Failure::Violated(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidInput(_) | Error::NotInParabolic(_) => Failure::Invalid(e.to_string()),
            _ => Failure::Violated(e.to_string()),
        }
    }
}

pub const DEFAULT_MAX_DIM: usize = 20000;

pub fn max_dim() -> Result<usize, Failure> {
    match std::env::var("VERMA_MAX_DIM") {
        Err(_) => Ok(DEFAULT_MAX_DIM),
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| Failure::Invalid(format!("VERMA_MAX_DIM must be a non-negative integer, got {s:?}"))),
    }
}

fn check_capacity(config: &RunConfig, pc: &ParabolicCharacter) -> Result<(), Failure> {
    let l = config.level as usize;
    let (what, dim) = match config.command {
        Command::Annihilator | Command::Verify => ("U_l", binomial(config.n * config.n - 1 + l, l)),
        _ => ("M_l", binomial(pc.m() + l, l)),
    };
    let cap = max_dim()?;
    if dim > cap {
        return Err(Failure::Invalid(format!(
            "capacity exceeded: dim {what} = {dim} at level {l} is above VERMA_MAX_DIM = {cap}"
        )));
    }
    Ok(())
}

pub fn run(config: &RunConfig) -> Result<Report, Failure> {
    let pc = config.character().map_err(Failure::Invalid)?;
    check_capacity(config, &pc)?;
    let mut report = Report::default();
    match config.command {
        Command::Basis => basis(&pc, config.level, &mut report)?,
        Command::Weights => weights(&pc, config.level, &mut report)?,
        Command::Annihilator => annihilator(&pc, config.level, &mut report)?,
        Command::Simple => simple(&pc, config.level, &mut report)?,
        Command::Jets => jets(&pc, config.level, &mut report)?,
        Command::Classify => classification(&pc, config.level, &mut report)?,
        Command::Verify => verify::run(&pc, config.level, &mut report)?,
    }
    Ok(report)
}

fn basis(pc: &ParabolicCharacter, level: u32, report: &mut Report) -> Result<(), Failure> {
    let module = build_module(pc, level)?;
    for l in 0..=level {
        report.push(json!({ "level": l, "dim": module.dim_at(l) }));
    }
    report.note(format!("m = {} complement roots", pc.m()));
    Ok(())
}

fn weights(pc: &ParabolicCharacter, level: u32, report: &mut Report) -> Result<(), Failure> {
    let module = build_module(pc, level)?;
    let spaces = module.weight_spaces();
    // deepest weights last
    let mut entries: Vec<_> = spaces.iter().collect();
    entries.sort_by_key(|(_, idx)| module.module().depth_of(&module.basis()[idx[0]]).iter().sum::<u32>());
    for (w, idx) in entries {
        let depth = module.module().depth_of(&module.basis()[idx[0]]);
        report.push(json!({
            "level": level,
            "weight": w.to_string(),
            "depth": depth,
            "multiplicity": idx.len(),
        }));
    }
    Ok(())
}

fn annihilator(pc: &ParabolicCharacter, level: u32, report: &mut Report) -> Result<(), Failure> {
    for r in equality_report(pc, level)? {
        report.push(json!({
            "level": r.level,
            "dim_u": r.dim_u,
            "dim_m": r.dim_m,
            "dim_char": r.dim_char,
            "dim_ann": r.dim_ann,
            "dim_k": r.dim_k,
            "dim_l": r.dim_l,
            "equal": r.equal,
        }));
    }
    note_m_lambda(pc, report);
    Ok(())
}

fn simple(pc: &ParabolicCharacter, level: u32, report: &mut Report) -> Result<(), Failure> {
    let mut engine = QuotientEngine::new(pc)?;
    for l in 0..=level {
        let q = engine.truncation(l)?;
        report.push(json!({ "level": l, "dim_m": q.dim_m, "dim_k": q.dim_k(), "dim_l": q.dim_l }));
    }
    Ok(())
}

fn jets(pc: &ParabolicCharacter, level: u32, report: &mut Report) -> Result<(), Failure> {
    for r in jet_rows(pc, level)? {
        report.push(json!({
            "level": r.level,
            "dim_m": r.dim_m,
            "dim_l": r.dim_l,
            "identity": r.identity,
            "in_range_flag": r.in_range_flag,
            "in_range_all": r.in_range_all,
        }));
    }
    note_m_lambda(pc, report);
    Ok(())
}

fn note_m_lambda(pc: &ParabolicCharacter, report: &mut Report) {
    if let Ok(m) = pc.m_of_lambda_flag() {
        report.note(format!("m(lambda) over the flag entries = {m}"));
    }
    if let Ok(m) = m_of_lambda(pc.lambda()) {
        report.note(format!("m(lambda) over all fundamental coordinates = {m}"));
    }
}

fn classification(pc: &ParabolicCharacter, level: u32, report: &mut Report) -> Result<(), Failure> {
    let result = classify(pc, level)?;
    let (verdict, dims) = match &result {
        Classification::Finite { dim, dims } => (format!("finite, dim L = {dim}"), dims),
        Classification::Infinite { dims, all_negative } => (
            if *all_negative {
                "infinite, all l_i negative".to_string()
            } else {
                "infinite".to_string()
            },
            dims,
        ),
        Classification::Inconclusive { dims } => ("inconclusive".to_string(), dims),
    };
    for (l, d) in dims.iter().enumerate() {
        report.push(json!({ "level": l, "dim_l": d }));
    }
    report.note(verdict);
    Ok(())
}
