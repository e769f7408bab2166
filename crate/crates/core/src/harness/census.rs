use rayon::prelude::*;
use serde::Serialize;

use super::enumerate::{
    enumerate_abelian_reflection_groups, non_reflection_abelian_groups, signature,
    EnumeratedGroup, EnumerationMode, GroupSignature,
};
use super::report::{degree_bound, AnalysisOptions};
use super::spec::GroupSpec;
use crate::diffr::{different, dsp_check, transfer_image_profile};
use crate::error::Result;
use crate::invar::{algebra_generators, decide_coregular, hilbert_ideal, FailedConjunct, InvariantTable};
use crate::matrixgroup::{reflection_census, Group};

#[derive(Clone, Debug)]
pub struct CensusConfig {
    pub n: usize,
    pub p: u64,
    pub max_order: usize,
    pub mode: EnumerationMode,
    /// How many random non-reflection cyclic groups to add.
    pub extra_groups: usize,
    pub analysis: AnalysisOptions,
}

#[derive(Clone, Debug, Serialize)]
pub struct CensusRow {
    pub name: String,
    pub spec: GroupSpec,
    pub signature: GroupSignature,
    pub order: usize,
    pub reflection_group: bool,
    pub p_group: bool,
    pub transvection_subgroup_order: usize,
    pub homology_subgroup_order: usize,
    pub dsp: bool,
    pub hilbert_ideal_ci: bool,
    pub coregular: bool,
    pub certificate: Option<Vec<usize>>,
    pub failure_witness: Vec<FailedConjunct>,
    pub transfer_principal: bool,
    pub bound: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub name: String,
    pub statement: &'static str,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Census {
    pub n: usize,
    pub p: u64,
    pub max_order: usize,
    pub sampled: bool,
    pub seed: Option<u64>,
    pub truncated: bool,
    pub rows: Vec<CensusRow>,
    pub violations: Vec<Violation>,
}

pub const THEOREM: &str = "coregular iff reflection group with the direct summand property";
pub const COROLLARY: &str = "for p-groups: coregular iff the transfer image is principal";
pub const SERRE: &str = "coregular implies reflection group";
pub const TRANSVECTIONS: &str = "the transvection subgroup has p-power order";
pub const HOMOLOGIES: &str = "the homology subgroup has order prime to p";

pub fn census_row(name: &str, g: &Group, opts: &AnalysisOptions) -> Result<CensusRow> {
    let census = reflection_census(g)?;
    let diff = different(g, opts.test_bound)?;
    let dsp = dsp_check(g, &diff)?;
    let b = degree_bound(g, opts).generation;
    let table = InvariantTable::compute(g, b);
    let algebra = algebra_generators(&table, b);
    let hilb = hilbert_ideal(&table, b);
    let transfer = transfer_image_profile(g, &table, &algebra, b);
    let verdict = decide_coregular(g, &table, &hilb, &algebra, &dsp)?;
    Ok(CensusRow {
        name: name.to_string(),
        spec: GroupSpec::from_group(name, g),
        signature: signature(g)?,
        order: g.order(),
        reflection_group: census.is_reflection_group,
        p_group: g.is_p_group(),
        transvection_subgroup_order: census.transvection_subgroup.order(),
        homology_subgroup_order: census.homology_subgroup.order(),
        dsp: dsp.holds,
        hilbert_ideal_ci: hilb.is_complete_intersection,
        coregular: verdict.is_coregular(),
        certificate: verdict.certificate,
        failure_witness: verdict.failure_witness,
        transfer_principal: transfer.principal,
        bound: b,
    })
}

/// Every statement checked on one row, with its outcome.
pub fn row_checks(row: &CensusRow, p: u64) -> Vec<(&'static str, Option<bool>)> {
    let p_power = |k: usize| {
        let mut k = k;
        while k % p as usize == 0 {
            k /= p as usize;
        }
        k == 1
    };
    vec![
        (THEOREM, Some(row.coregular == (row.reflection_group && row.dsp))),
        (COROLLARY, row.p_group.then_some(row.coregular == row.transfer_principal)),
        (SERRE, Some(!row.coregular || row.reflection_group)),
        (TRANSVECTIONS, Some(p_power(row.transvection_subgroup_order))),
        (
            HOMOLOGIES,
            Some(row.homology_subgroup_order % p as usize != 0),
        ),
    ]
}

pub fn verify_rows(rows: &[CensusRow], p: u64) -> Vec<Violation> {
    let mut out = Vec::new();
    for row in rows {
        for (statement, ok) in row_checks(row, p) {
            if ok == Some(false) {
                out.push(Violation {
                    name: row.name.clone(),
                    statement,
                    detail: format!(
                        "order {}, reflection group {}, DSP {}, CI {}, coregular {}, principal transfer {}, |T| {}, |D| {}; spec {}",
                        row.order,
                        row.reflection_group,
                        row.dsp,
                        row.hilbert_ideal_ci,
                        row.coregular,
                        row.transfer_principal,
                        row.transvection_subgroup_order,
                        row.homology_subgroup_order,
                        row.spec.to_json()
                    ),
                });
            }
        }
    }
    out
}

pub fn census_groups(cfg: &CensusConfig) -> Result<(Vec<EnumeratedGroup>, bool)> {
    let e = enumerate_abelian_reflection_groups(cfg.n, cfg.p, cfg.max_order, cfg.mode)?;
    let seed = match cfg.mode {
        EnumerationMode::Sampled { seed, .. } => seed,
        EnumerationMode::Exhaustive => 0,
    };
    let mut groups = e.groups;
    groups.extend(non_reflection_abelian_groups(
        cfg.n,
        cfg.p,
        cfg.max_order,
        seed,
        cfg.extra_groups,
    )?);
    Ok((groups, e.truncated))
}

/// Analyzes every group of the census in parallel; row order follows the
/// enumeration, so output is deterministic for a given configuration.
pub fn verify_theorem(cfg: &CensusConfig) -> Result<Census> {
    let (groups, truncated) = census_groups(cfg)?;
    let rows = groups
        .par_iter()
        .map(|e| census_row(&e.name, &e.group, &cfg.analysis))
        .collect::<Result<Vec<_>>>()?;
    let violations = verify_rows(&rows, cfg.p);
    let (sampled, seed) = match cfg.mode {
        EnumerationMode::Sampled { seed, .. } => (true, Some(seed)),
        EnumerationMode::Exhaustive => (false, None),
    };
    Ok(Census {
        n: cfg.n,
        p: cfg.p,
        max_order: cfg.max_order,
        sampled,
        seed,
        truncated,
        rows,
        violations,
    })
}

pub fn render_census_text(c: &Census) -> String {
    let mut out = format!(
        "census n = {}, p = {}, order <= {}, {}{}\n",
        c.n,
        c.p,
        c.max_order,
        match c.seed {
            Some(s) => format!("sampled with seed {s}"),
            None => "exhaustive".to_string(),
        },
        if c.truncated { " (sample truncated)" } else { "" }
    );
    out.push_str("name                 order refl  dsp   ci    coreg principal degrees\n");
    for r in &c.rows {
        let b = |x: bool| if x { "yes" } else { "no" };
        out.push_str(&format!(
            "{:<20} {:>5} {:<5} {:<5} {:<5} {:<5} {:<9} {}\n",
            r.name,
            r.order,
            b(r.reflection_group),
            b(r.dsp),
            b(r.hilbert_ideal_ci),
            b(r.coregular),
            b(r.transfer_principal),
            r.certificate
                .as_ref()
                .map(|d| format!("{d:?}"))
                .unwrap_or_else(|| "-".into())
        ));
    }
    let coregular = c.rows.iter().filter(|r| r.coregular).count();
    out.push_str(&format!(
        "{} groups, {} coregular, {} violations\n",
        c.rows.len(),
        coregular,
        c.violations.len()
    ));
    for v in &c.violations {
        out.push_str(&format!("VIOLATION {}: {} ({})\n", v.name, v.statement, v.detail));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exhaustive_gf2_plane() {
        let cfg = CensusConfig {
            n: 2,
            p: 2,
            max_order: 64,
            mode: EnumerationMode::Exhaustive,
            extra_groups: 2,
            analysis: AnalysisOptions::default(),
        };
        let c = verify_theorem(&cfg).unwrap();
        assert!(c.violations.is_empty(), "{:?}", c.violations);
        // GL_2(2) is S_3: besides the trivial group only a single transvection
        let refl: Vec<_> = c.rows.iter().filter(|r| r.reflection_group).collect();
        assert_eq!(refl.iter().map(|r| r.order).collect::<Vec<_>>(), vec![1, 2]);
        assert!(refl.iter().all(|r| r.coregular));
    }
}
