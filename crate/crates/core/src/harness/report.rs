use std::fmt::Write as _;
use std::time::{Duration, Instant};

use serde::Serialize;

use super::spec::GroupSpec;
use crate::diffr::{
    different, dsp_check, projection_apply, transfer_image_profile, DifferentResult, DspResult,
    TransferImage,
};
use crate::error::Result;
use crate::invar::{
    algebra_generators, contract_extend, decide_coregular, default_degree_bound,
    hilbert_ideal, hilbert_series_checks, relative_hilbert_ideal, BoundSource,
    CoregularityVerdict, DegreeBound, FailedConjunct, IdealProfile, InvariantTable, Verdict,
};
use crate::matrixgroup::{decompose, reflection_census, Group, ReflectionKind, DEFAULT_ELEMENT_CAP};
use crate::polyact::Polynomial;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug)]
pub struct AnalysisOptions {
    /// Replaces the computed degree bound.
    pub degree_bound: Option<usize>,
    pub element_cap: usize,
    /// Replaces the per-hyperplane monomial degree cap of the different.
    pub test_bound: Option<usize>,
    /// Top degree of the Hilbert series comparison.
    pub series_degree: usize,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        Self {
            degree_bound: None,
            element_cap: DEFAULT_ELEMENT_CAP,
            test_bound: None,
            series_degree: 8,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Scope {
    Abelian,
    OutOfTheoremScope,
}

#[derive(Clone, Debug, Serialize)]
pub struct GroupFacts {
    pub order: usize,
    pub generator_count: usize,
    pub abelian: bool,
    pub p_group: bool,
    pub nonmodular: bool,
    pub reflection_group: bool,
    pub transvections: usize,
    pub homologies: usize,
    pub non_reflections: usize,
    pub transvection_subgroup_order: usize,
    pub homology_subgroup_order: usize,
    pub fixed_space_dim: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct DecompositionView {
    pub t_order: usize,
    pub d_order: usize,
    pub fixed_by_d: Vec<Vec<u32>>,
    pub moved_by_d: Vec<Vec<u32>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct HyperplaneView {
    pub form: String,
    pub coefficients: Vec<u32>,
    pub kind: ReflectionKind,
    pub stabilizer_order: usize,
    pub exponent: usize,
    pub tame_shape: bool,
    pub failure_witness: String,
    pub test_bound: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct DifferentView {
    pub hyperplanes: Vec<HyperplaneView>,
    pub theta: String,
    pub degree: usize,
    pub theta_t: String,
    pub theta_d: String,
    pub character_trivial: bool,
    pub character: Vec<u32>,
}

#[derive(Clone, Debug, Serialize)]
pub struct DspView {
    pub holds: bool,
    pub witness: Option<String>,
    pub degree: usize,
    pub rank: usize,
    pub augmented_rank: usize,
    /// `(x_i, π(x_i))` when a projection exists.
    pub projection_of_variables: Vec<(String, String)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct BoundView {
    pub generation: usize,
    pub module: usize,
    pub source: BoundSource,
    pub hsop_degrees: Vec<usize>,
    pub hsop: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct InvariantsView {
    pub hilbert_series: Vec<usize>,
    pub generator_degrees: Vec<usize>,
    pub generators: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct IdealView {
    pub generators: Vec<String>,
    pub generator_degrees: Vec<usize>,
    pub mu: usize,
    pub expected_codim: usize,
    pub complete_intersection: bool,
    pub per_degree_dims: Vec<usize>,
    pub saturated_at: Option<usize>,
    pub bound: usize,
}

impl IdealView {
    fn from_profile(p: &IdealProfile) -> Self {
        Self {
            generators: strings(&p.generators),
            generator_degrees: p.generator_degrees.clone(),
            mu: p.mu,
            expected_codim: p.expected_codim,
            complete_intersection: p.is_complete_intersection,
            per_degree_dims: p.per_degree_dims.clone(),
            saturated_at: p.saturated_at,
            bound: p.bound,
        }
    }
}

/// `J^{ec}` for `J` the ideal of `k[V]^G` generated by the generators of
/// `Hilb_{V^G}`.
#[derive(Clone, Debug, Serialize)]
pub struct ContractView {
    pub j_generators: Vec<String>,
    pub j_dims: Vec<usize>,
    pub jec_dims: Vec<usize>,
    pub equal: bool,
    pub first_difference: Option<usize>,
    pub new_generators: Vec<String>,
    pub new_generator_degrees: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TransferView {
    pub ideal: IdealView,
    pub principal: bool,
    pub unit_ideal: bool,
    pub generator: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SeriesView {
    pub degree: usize,
    pub series: Vec<usize>,
    pub t_series: Vec<usize>,
    pub d_series: Vec<usize>,
    pub product: Vec<usize>,
    pub molien: Vec<usize>,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CoregularityView {
    pub verdict: Verdict,
    /// The deciding test; the degree certificate is always computed as a
    /// cross-check, and a disagreement aborts the analysis.
    pub route: &'static str,
    pub certificate: Option<Vec<usize>>,
    pub failure_witness: Vec<FailedConjunct>,
    pub bound: usize,
    /// `coregular ⇔ reflection group ∧ DSP` on this input.
    pub criterion_consistent: bool,
}

impl CoregularityView {
    fn new(v: &CoregularityVerdict, reflection_group: bool, dsp: bool) -> Self {
        Self {
            verdict: v.verdict,
            route: "hilbert_ideal_ci_and_dsp",
            certificate: v.certificate.clone(),
            failure_witness: v.failure_witness.clone(),
            bound: v.bound,
            criterion_consistent: v.is_coregular() == (reflection_group && dsp),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub schema_version: u32,
    pub name: String,
    pub p: u64,
    pub n: usize,
    pub scope: Scope,
    pub group: GroupFacts,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decomposition: Option<DecompositionView>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub different: Option<DifferentView>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dsp: Option<DspView>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<BoundView>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub invariants: Option<InvariantsView>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hilbert_ideal: Option<IdealView>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub relative_hilbert_ideal: Option<IdealView>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub contract_extend: Option<ContractView>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub transfer_image: Option<TransferView>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub series_check: Option<SeriesView>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coregularity: Option<CoregularityView>,
    /// Wall-clock time per stage; never serialized, so reports of the same
    /// input are byte-identical.
    #[serde(skip)]
    pub timings: Vec<(&'static str, Duration)>,
}

fn strings(ps: &[Polynomial]) -> Vec<String> {
    ps.iter().map(Polynomial::to_string).collect()
}

struct Clock(Vec<(&'static str, Duration)>, Instant);

impl Clock {
    fn new() -> Self {
        Self(Vec::new(), Instant::now())
    }

    fn lap(&mut self, stage: &'static str) {
        let now = Instant::now();
        self.0.push((stage, now - self.1));
        self.1 = now;
    }
}

pub fn group_facts(g: &Group) -> Result<GroupFacts> {
    let census = reflection_census(g)?;
    let t = census.transvection_count();
    let h = census.homology_count();
    Ok(GroupFacts {
        order: g.order(),
        generator_count: g.generators().len(),
        abelian: g.is_abelian(),
        p_group: g.is_p_group(),
        nonmodular: g.is_nonmodular(),
        reflection_group: census.is_reflection_group,
        transvections: t,
        homologies: h,
        non_reflections: g.order() - 1 - t - h,
        transvection_subgroup_order: census.transvection_subgroup.order(),
        homology_subgroup_order: census.homology_subgroup.order(),
        fixed_space_dim: g.fixed_space().dim(),
    })
}

pub fn degree_bound(g: &Group, opts: &AnalysisOptions) -> DegreeBound {
    match opts.degree_bound {
        Some(d) => DegreeBound::fixed(d),
        None => default_degree_bound(g),
    }
}

pub fn different_view(d: &DifferentResult) -> DifferentView {
    DifferentView {
        hyperplanes: d
            .factors
            .iter()
            .map(|h| HyperplaneView {
                form: Polynomial::linear_form(d.theta.field(), h.form()).to_string(),
                coefficients: h.form().to_vec(),
                kind: h.hyperplane.kind,
                stabilizer_order: h.hyperplane.stabilizer.order(),
                exponent: h.a(),
                tame_shape: h.is_tame_shape(),
                failure_witness: h.exponent.witness.to_string(),
                test_bound: h.exponent.test_bound,
            })
            .collect(),
        theta: d.theta.to_string(),
        degree: d.degree,
        theta_t: d.theta_t.to_string(),
        theta_d: d.theta_d.to_string(),
        character_trivial: d.character.is_trivial(),
        character: d.character.values().to_vec(),
    }
}

pub fn dsp_view(g: &Group, d: &DifferentResult, dsp: &DspResult) -> Result<DspView> {
    let mut projection_of_variables = Vec::new();
    if dsp.holds {
        for i in 0..g.dim() {
            let x = Polynomial::var(g.field(), g.dim(), i);
            let image = projection_apply(g, d, dsp, &x)?;
            projection_of_variables.push((x.to_string(), image.to_string()));
        }
    }
    Ok(DspView {
        holds: dsp.holds,
        witness: dsp.witness.as_ref().map(Polynomial::to_string),
        degree: dsp.degree,
        rank: dsp.rank,
        augmented_rank: dsp.augmented_rank,
        projection_of_variables,
    })
}

pub fn transfer_view(t: &TransferImage) -> TransferView {
    TransferView {
        ideal: IdealView::from_profile(&t.profile),
        principal: t.principal,
        unit_ideal: t.unit_ideal,
        generator: t.generator().map(Polynomial::to_string),
    }
}

/// Full analysis of one group. Non-abelian input gets the reflection census
/// only, marked out of scope.
pub fn analyze(spec: &GroupSpec, opts: &AnalysisOptions) -> Result<AnalysisReport> {
    let mut clock = Clock::new();
    let g = spec.to_group(opts.element_cap)?;
    let group = group_facts(&g)?;
    clock.lap("group");
    let mut report = AnalysisReport {
        schema_version: SCHEMA_VERSION,
        name: spec.name.clone(),
        p: spec.p,
        n: spec.n,
        scope: if group.abelian {
            Scope::Abelian
        } else {
            Scope::OutOfTheoremScope
        },
        group,
        decomposition: None,
        different: None,
        dsp: None,
        bound: None,
        invariants: None,
        hilbert_ideal: None,
        relative_hilbert_ideal: None,
        contract_extend: None,
        transfer_image: None,
        series_check: None,
        coregularity: None,
        timings: Vec::new(),
    };
    if !report.group.abelian {
        report.timings = clock.0;
        return Ok(report);
    }
    let reflection_group = report.group.reflection_group;

    let dec = if reflection_group { Some(decompose(&g)?) } else { None };
    report.decomposition = dec.as_ref().map(|d| DecompositionView {
        t_order: d.t.order(),
        d_order: d.d.order(),
        fixed_by_d: d.fixed_by_d.basis().to_vec(),
        moved_by_d: d.moved_by_d.basis().to_vec(),
    });
    clock.lap("decomposition");

    let diff = different(&g, opts.test_bound)?;
    let dsp = dsp_check(&g, &diff)?;
    report.different = Some(different_view(&diff));
    report.dsp = Some(dsp_view(&g, &diff, &dsp)?);
    clock.lap("different");

    let bound = degree_bound(&g, opts);
    let b = bound.generation;
    report.bound = Some(BoundView {
        generation: bound.generation,
        module: bound.module,
        source: bound.source,
        hsop_degrees: bound.hsop_degrees(),
        hsop: strings(&bound.hsop),
    });
    let table = InvariantTable::compute(&g, b);
    let algebra = algebra_generators(&table, b);
    report.invariants = Some(InvariantsView {
        hilbert_series: table.hilbert_series(),
        generator_degrees: algebra.degrees(),
        generators: strings(&algebra.polynomials()),
    });
    clock.lap("invariants");

    let hilb = hilbert_ideal(&table, b);
    report.hilbert_ideal = Some(IdealView::from_profile(&hilb));
    let fixed = g.fixed_space();
    let relative = relative_hilbert_ideal(&g, &table, &fixed, b)?;
    let ce = contract_extend(&table, &algebra, &relative.generators, b)?;
    report.relative_hilbert_ideal = Some(IdealView::from_profile(&relative));
    report.contract_extend = Some(ContractView {
        j_generators: strings(&relative.generators),
        j_dims: ce.j_dims.clone(),
        jec_dims: ce.jec_dims.clone(),
        equal: ce.equal,
        first_difference: ce.first_difference,
        new_generators: ce.new_generators.iter().map(|(_, p)| p.to_string()).collect(),
        new_generator_degrees: ce.new_generators.iter().map(|(d, _)| *d).collect(),
    });
    clock.lap("hilbert ideals");

    let transfer = transfer_image_profile(&g, &table, &algebra, b);
    report.transfer_image = Some(transfer_view(&transfer));
    clock.lap("transfer image");

    if let Some(dec) = &dec {
        let s = hilbert_series_checks(&g, dec, opts.series_degree)?;
        report.series_check = Some(SeriesView {
            degree: s.degree,
            passed: s.passed(),
            series: s.series,
            t_series: s.t_series,
            d_series: s.d_series,
            product: s.product,
            molien: s.molien,
        });
        clock.lap("series");
    }

    let verdict = decide_coregular(&g, &table, &hilb, &algebra, &dsp)?;
    report.coregularity = Some(CoregularityView::new(&verdict, reflection_group, dsp.holds));
    clock.lap("coregularity");
    report.timings = clock.0;
    Ok(report)
}

pub fn render_json(report: &AnalysisReport) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("report serializes");
    s.push('\n');
    s
}

fn list<T: std::fmt::Display>(xs: &[T]) -> String {
    if xs.is_empty() {
        return "none".into();
    }
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(", ")
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn ideal_lines(out: &mut String, title: &str, v: &IdealView) {
    let _ = writeln!(out, "{title}");
    let _ = writeln!(out, "  generators: {}", list(&v.generators));
    let _ = writeln!(out, "  degrees: {}", list(&v.generator_degrees));
    let _ = writeln!(
        out,
        "  minimal generators: {}, height {}, complete intersection: {}",
        v.mu,
        v.expected_codim,
        yes(v.complete_intersection)
    );
    let _ = writeln!(out, "  dims through degree {}: {}", v.bound, list(&v.per_degree_dims));
}

pub fn render_text(r: &AnalysisReport) -> String {
    let mut out = String::new();
    let g = &r.group;
    let _ = writeln!(out, "{} over GF({}), n = {}", r.name, r.p, r.n);
    let _ = writeln!(
        out,
        "order {}, abelian {}, p-group {}, non-modular {}",
        g.order,
        yes(g.abelian),
        yes(g.p_group),
        yes(g.nonmodular)
    );
    let _ = writeln!(
        out,
        "reflections: {} transvections, {} homologies, {} other non-identity elements",
        g.transvections, g.homologies, g.non_reflections
    );
    let _ = writeln!(
        out,
        "reflection group {}, |T| = {}, |D| = {}, dim V^G = {}",
        yes(g.reflection_group),
        g.transvection_subgroup_order,
        g.homology_subgroup_order,
        g.fixed_space_dim
    );
    if r.scope == Scope::OutOfTheoremScope {
        let _ = writeln!(out, "out of theorem scope: the group is not abelian");
        return out;
    }
    if let Some(d) = &r.decomposition {
        let _ = writeln!(
            out,
            "decomposition: V^D spanned by {:?}, V_D spanned by {:?}",
            d.fixed_by_d, d.moved_by_d
        );
    }
    if let Some(d) = &r.different {
        let _ = writeln!(out, "hyperplanes:");
        for h in &d.hyperplanes {
            let _ = writeln!(
                out,
                "  {}: {:?}, |G_H| = {}, a_H = {}, witness {}",
                h.form,
                h.kind,
                h.stabilizer_order,
                h.exponent,
                h.failure_witness
            );
        }
        let _ = writeln!(out, "theta = {} (degree {})", d.theta, d.degree);
        let _ = writeln!(out, "  transvection part {}, homology part {}", d.theta_t, d.theta_d);
        let _ = writeln!(out, "  character trivial: {}", yes(d.character_trivial));
    }
    if let Some(d) = &r.dsp {
        let _ = writeln!(
            out,
            "direct summand property: {} (rank {} vs {})",
            yes(d.holds),
            d.rank,
            d.augmented_rank
        );
        if let Some(w) = &d.witness {
            let _ = writeln!(out, "  witness {w}");
        }
        for (x, y) in &d.projection_of_variables {
            let _ = writeln!(out, "  pi({x}) = {y}");
        }
    }
    if let Some(b) = &r.bound {
        let _ = writeln!(
            out,
            "degree bound {} ({:?}; module bound {}, parameters of degrees {})",
            b.generation,
            b.source,
            b.module,
            list(&b.hsop_degrees)
        );
    }
    if let Some(i) = &r.invariants {
        let _ = writeln!(out, "hilbert series: {}", list(&i.hilbert_series));
        let _ = writeln!(out, "invariant generators (degrees {}):", list(&i.generator_degrees));
        for p in &i.generators {
            let _ = writeln!(out, "  {p}");
        }
    }
    if let Some(h) = &r.hilbert_ideal {
        ideal_lines(&mut out, "hilbert ideal:", h);
    }
    if let Some(h) = &r.relative_hilbert_ideal {
        ideal_lines(&mut out, "hilbert ideal of V^G:", h);
    }
    if let Some(c) = &r.contract_extend {
        let _ = writeln!(
            out,
            "J = ({}) in k[V]^G: J^ec = J {}",
            c.j_generators.join(", "),
            yes(c.equal)
        );
        for (p, d) in c.new_generators.iter().zip(&c.new_generator_degrees) {
            let _ = writeln!(out, "  J^ec gains {p} in degree {d}");
        }
    }
    if let Some(t) = &r.transfer_image {
        ideal_lines(&mut out, "transfer image:", &t.ideal);
        let _ = writeln!(out, "  principal: {}, unit ideal: {}", yes(t.principal), yes(t.unit_ideal));
    }
    if let Some(s) = &r.series_check {
        let _ = writeln!(
            out,
            "series check through degree {}: {} (T part {}, D part {})",
            s.degree,
            if s.passed { "pass" } else { "FAIL" },
            list(&s.t_series),
            list(&s.d_series)
        );
    }
    if let Some(c) = &r.coregularity {
        let verdict = match c.verdict {
            Verdict::Coregular => "coregular".to_string(),
            Verdict::NotCoregular => format!("not coregular ({:?})", c.failure_witness),
        };
        let _ = writeln!(out, "verdict: {verdict}");
        if let Some(cert) = &c.certificate {
            let _ = writeln!(out, "  polynomial generators in degrees {}", list(cert));
        }
    }
    out
}
