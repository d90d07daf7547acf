use std::path::Path;

use thiserror::Error;

use super::report::{ReportDocument, Value};
use super::specfile::{CodeSpec, SpecError};
use crate::builder::{build_gcqc, BuildError, BuildOptions, GcqcResult};
use crate::distance::{min_distance, required_budget_log2, DistanceError, DistanceOptions, DistanceReport};
use crate::block_weights::{verify_block_weights, BlockWeightOptions, BlockWeightOutcome};
use crate::stabilizer::{LogicalPair, StabilizerCode};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Spec(#[from] SpecError),
    #[error(transparent)]
    Build(#[from] BuildError),
    #[error(transparent)]
    Distance(#[from] DistanceError),
    #[error("the file has no [chain] section; `build` needs a chain and outer codes")]
    NothingToBuild,
}

/// A rendered report plus whether every requested verification passed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutcome {
    pub report: ReportDocument,
    pub success: bool,
}

impl CommandOutcome {
    fn ok(report: ReportDocument) -> Self {
        Self { report, success: true }
    }
}

#[derive(Debug, Clone, Default)]
pub struct BuildFlags {
    pub exact_distance: bool,
    pub verify_bound: bool,
    pub verify_block_weights: bool,
}

pub fn load_spec(path: &Path) -> Result<CodeSpec, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    Ok(CodeSpec::parse(&text)?)
}

fn params(n: usize, k: usize) -> String {
    format!("[[{n},{k}]]")
}

fn params_d(n: usize, k: usize, d: usize) -> String {
    format!("[[{n},{k},{d}]]")
}

fn ops(code_ops: &[crate::pauli::PauliOperator]) -> Value {
    Value::List(code_ops.iter().map(|p| Value::Text(p.to_string())).collect())
}

fn pairs(list: &[LogicalPair]) -> Value {
    Value::List(
        list.iter()
            .map(|lp| Value::Text(format!("X={} Z={}", lp.x, lp.z)))
            .collect(),
    )
}

fn one_based(v: &[usize]) -> Value {
    Value::List(v.iter().map(|&i| Value::from(i + 1)).collect())
}

fn code_section(code: &StabilizerCode) -> ReportDocument {
    ReportDocument::new()
        .with("code", params(code.n(), code.k()))
        .with("independent_generators", crate::stabilizer::rank_gf2(code.generators()))
        .with("valid", code.validate().is_ok())
        .with("generators", ops(code.generators()))
        .with("logicals", pairs(code.logical_pairs()))
}

fn distance_section(doc: &mut ReportDocument, report: &DistanceReport) {
    doc.push("distance", report.distance)
        .push("witness", report.witness.to_string())
        .push("enumerated", report.enumerated);
}

pub fn cmd_inspect(spec: &CodeSpec, opts: &DistanceOptions) -> Result<CommandOutcome, CliError> {
    let inner = spec.inner_code()?;
    let mut inner_doc = code_section(&inner);
    let claimed = spec.inner.distances.as_ref().and_then(|ds| ds.first().copied());
    if let Some(ds) = &spec.inner.distances {
        inner_doc.push("claimed_distances", ds.clone());
    }
    let degeneracy: Value = if inner.k() == 0 {
        "n/a".into()
    } else {
        let d = match claimed {
            Some(d) => Ok(d),
            None => min_distance(&inner, opts).map(|r| r.distance),
        };
        match d.map_err(|e| e.to_string()).and_then(|d| inner.is_degenerate(d).map_err(|e| e.to_string())) {
            Ok(flag) => flag.into(),
            Err(e) => format!("undecided: {e}").into(),
        }
    };
    inner_doc.push("degenerate", degeneracy);
    let mut doc = ReportDocument::new().with("inner", inner_doc);

    if let (Some(chain), Some(chain_spec)) = (spec.chain()?, &spec.chain) {
        let mut levels = Vec::new();
        for level in 1..=chain.num_levels() {
            let sub = chain.subcode(level).map_err(BuildError::from)?;
            let coset = chain.coset_code(level).map_err(BuildError::from)?;
            levels.push(
                ReportDocument::new()
                    .with("level", level)
                    .with("subcode", params(sub.n(), sub.k()))
                    .with("coset", params(coset.as_code().n(), coset.qubits()))
                    .with("coset_stabilizers", ops(coset.stabilizers()))
                    .with("coset_logicals", pairs(coset.logical_pairs())),
            );
        }
        doc.push(
            "chain",
            ReportDocument::new()
                .with("levels", chain.level_ks().to_vec())
                .with("ordering", one_based(&chain_spec.ordering))
                .with("swaps", one_based(&chain_spec.swaps))
                .with("fully_descends", chain.fully_descends())
                .with("subcodes", levels),
        );
    }

    if !spec.outers.is_empty() {
        let outers = spec.outer_codes(opts)?;
        let list: Vec<ReportDocument> = outers
            .iter()
            .enumerate()
            .map(|(i, o)| {
                let mut d = code_section(o.code())
                    .with("level", i + 1)
                    .with("blocks", o.blocks())
                    .with("bits", o.bits())
                    .with("symbols", o.logical_size())
                    .with("symbol_distance", o.distance())
                    .with("degenerate", o.is_degenerate());
                if let Some(m) = o.min_stabilizer() {
                    d.push("min_stabilizer_weight", m.weight)
                        .push("min_stabilizer", m.witness.to_string());
                }
                d
            })
            .collect();
        doc.push("outer", list);
    }
    Ok(CommandOutcome::ok(doc))
}

fn level_section(res: &GcqcResult) -> Vec<ReportDocument> {
    res.levels
        .iter()
        .enumerate()
        .map(|(i, l)| {
            ReportDocument::new()
                .with("level", i + 1)
                .with("bits", l.outer.bits())
                .with("symbols", l.outer.logical_size())
                .with("inner_distance", l.inner_distance)
                .with("outer_distance", l.outer.distance())
                .with("degenerate", l.outer.is_degenerate())
                .with("coset", params(l.coset.as_code().n(), l.coset.qubits()))
                .with("lifted_generators", ops(&l.lifted_generators))
                .with("lifted_logicals", pairs(&l.lifted_logicals))
        })
        .collect()
}

pub fn cmd_build(
    spec: &CodeSpec,
    flags: &BuildFlags,
    opts: &DistanceOptions,
) -> Result<CommandOutcome, CliError> {
    let chain = spec.chain()?.ok_or(CliError::NothingToBuild)?;
    let outers = spec.outer_codes(opts)?;
    let build = BuildOptions {
        verify_claims: flags.verify_bound || flags.verify_block_weights,
        exact_distance: flags.exact_distance || flags.verify_bound,
        distance: opts.clone(),
    };
    let res = build_gcqc(&chain, &outers, &build)?;
    let (n, k) = res.params();

    let mut doc = ReportDocument::new().with(
        "code",
        match res.exact_distance() {
            Some(d) => params_d(n, k, d),
            None => params(n, k),
        },
    );
    doc.push("length", n)
        .push("dimension", k)
        .push("blocks", res.blocks)
        .push("inner_length", res.inner_n)
        .push("stabilizer_rank", crate::stabilizer::rank_gf2(res.code.generators()))
        .push("inner_copies_rank", crate::stabilizer::rank_gf2(&res.s_i_part))
        .push("bound", res.bound.value)
        .push(
            "mu",
            match res.mu() {
                Some(mu) => Value::from(mu),
                None => "none".into(),
            },
        );
    if let Some(report) = &res.exact {
        distance_section(&mut doc, report);
    }
    doc.push("levels", level_section(&res))
        .push("generators", ops(res.code.generators()))
        .push("logicals", pairs(res.code.logical_pairs()));

    let mut success = true;
    let mut verification = ReportDocument::new();
    if flags.verify_bound {
        let holds = res.bound_holds() == Some(true);
        success &= holds;
        verification.push("bound", holds);
    }
    if flags.verify_block_weights {
        let outcome = verify_block_weights(&res, &BlockWeightOptions::default());
        success &= outcome.holds();
        verification.push("block_weights", outcome.holds());
        match outcome {
            BlockWeightOutcome::Holds {
                pairs_checked,
                exhaustive,
            } => {
                verification
                    .push("block_weight_pairs", pairs_checked)
                    .push("block_weights_exhaustive", exhaustive);
            }
            BlockWeightOutcome::Counterexample {
                level_i,
                level_j,
                left,
                right,
                product_weight,
                required,
            } => {
                verification.push(
                    "block_weight_counterexample",
                    format!(
                        "levels {level_i},{level_j}: {left} * {right} has weight {product_weight} < {required}"
                    ),
                );
            }
        }
    }
    if flags.verify_bound || flags.verify_block_weights {
        doc.push("verification", verification);
    }
    Ok(CommandOutcome { report: doc, success })
}

/// Exact distance of the concatenated code when the file defines outer
/// codes, otherwise of the inner code.
pub fn cmd_distance(spec: &CodeSpec, opts: &DistanceOptions) -> Result<CommandOutcome, CliError> {
    let code = if spec.outers.is_empty() {
        spec.inner_code()?
    } else {
        let chain = spec.chain()?.ok_or(CliError::NothingToBuild)?;
        let outers = spec.outer_codes(opts)?;
        let build = BuildOptions {
            verify_claims: false,
            exact_distance: false,
            distance: opts.clone(),
        };
        build_gcqc(&chain, &outers, &build)?.code
    };
    let report = min_distance(&code, opts)?;
    let mut doc = ReportDocument::new().with("code", params_d(code.n(), code.k(), report.distance));
    distance_section(&mut doc, &report);
    doc.push("budget_log2", required_budget_log2(&code));
    Ok(CommandOutcome::ok(doc))
}
