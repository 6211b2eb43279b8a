//! Identity verification: every matrix identity is checked against the
//! brute-force walk enumerator on concrete instances.
//!
//! Checks marked exploratory cover extensions that are reported but not
//! required to hold (for example the walk-count identity on non-simple
//! instances). They never make a report fail.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::builders::{adjacency_matrix, degree_matrix, incidence_matrix, laplacian, switching_matrix};
use crate::hypergraph::OrientedHypergraph;
use crate::matrix::{LabeledMatrix, MatrixError};
use crate::random::{random_instance_with, random_switching, RandomParams};
use crate::sign::Sign;
use crate::signed_graph::{signed_graph_identities, OrientedSignedGraph};
use crate::walk::{walk_sign, AnchorKind, WalkEngine, WalkError, WalkLimits};

use AnchorKind::{Edge as E, Vertex as V};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    BackstepDegree,
    CrossWalkTranspose,
    DualIncidenceTranspose,
    DualInvolution,
    DualLaplacianFactorization,
    EdgeWalkDualPower,
    HalfWalkIncidence,
    HalfWalkLaplacian,
    LaplacianFactorization,
    LaplacianWeakWalkEntries,
    LineGraphAdjacency,
    LineGraphIncidence,
    SwitchingAdjacency,
    SwitchingIncidence,
    SwitchingLaplacian,
    UniformDualIdentity,
    WalkCountPower,
    WalkMatrixDuality,
    WalkReversalSymmetry,
    WeakWalkLaplacian,
}

impl Check {
    pub const ALL: [Check; 20] = [
        Check::BackstepDegree,
        Check::CrossWalkTranspose,
        Check::DualIncidenceTranspose,
        Check::DualInvolution,
        Check::DualLaplacianFactorization,
        Check::EdgeWalkDualPower,
        Check::HalfWalkIncidence,
        Check::HalfWalkLaplacian,
        Check::LaplacianFactorization,
        Check::LaplacianWeakWalkEntries,
        Check::LineGraphAdjacency,
        Check::LineGraphIncidence,
        Check::SwitchingAdjacency,
        Check::SwitchingIncidence,
        Check::SwitchingLaplacian,
        Check::UniformDualIdentity,
        Check::WalkCountPower,
        Check::WalkMatrixDuality,
        Check::WalkReversalSymmetry,
        Check::WeakWalkLaplacian,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::BackstepDegree => "backstep_degree",
            Check::CrossWalkTranspose => "cross_walk_transpose",
            Check::DualIncidenceTranspose => "dual_incidence_transpose",
            Check::DualInvolution => "dual_involution",
            Check::DualLaplacianFactorization => "dual_laplacian_factorization",
            Check::EdgeWalkDualPower => "edge_walk_dual_power",
            Check::HalfWalkIncidence => "half_walk_incidence",
            Check::HalfWalkLaplacian => "half_walk_laplacian",
            Check::LaplacianFactorization => "laplacian_factorization",
            Check::LaplacianWeakWalkEntries => "laplacian_weak_walk_entries",
            Check::LineGraphAdjacency => "line_graph_adjacency",
            Check::LineGraphIncidence => "line_graph_incidence",
            Check::SwitchingAdjacency => "switching_adjacency",
            Check::SwitchingIncidence => "switching_incidence",
            Check::SwitchingLaplacian => "switching_laplacian",
            Check::UniformDualIdentity => "uniform_dual_identity",
            Check::WalkCountPower => "walk_count_power",
            Check::WalkMatrixDuality => "walk_matrix_duality",
            Check::WalkReversalSymmetry => "walk_reversal_symmetry",
            Check::WeakWalkLaplacian => "weak_walk_laplacian",
        }
    }

    pub fn from_name(name: &str) -> Option<Check> {
        Check::ALL.into_iter().find(|c| c.name() == name)
    }

    /// Whether the identity is only claimed for simple instances; on
    /// non-simple ones the outcome is reported as exploratory.
    fn simple_only(self) -> bool {
        matches!(
            self,
            Check::WalkCountPower
                | Check::EdgeWalkDualPower
                | Check::WeakWalkLaplacian
                | Check::SwitchingAdjacency
                | Check::SwitchingLaplacian
        )
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Counterexample {
    Matrices {
        left_name: String,
        left: LabeledMatrix,
        right_name: String,
        right: LabeledMatrix,
    },
    Walk {
        description: String,
    },
    Note {
        description: String,
    },
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Counterexample::Matrices {
                left_name,
                left,
                right_name,
                right,
            } => {
                if let Some((r, c, a, b)) = left.first_difference(right) {
                    writeln!(f, "{left_name} differs from {right_name} at ({r}, {c}): {a} vs {b}")?;
                }
                write!(f, "{left_name} =\n{left}{right_name} =\n{right}")
            }
            Counterexample::Walk { description } | Counterexample::Note { description } => {
                f.write_str(description)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "detail", rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    /// The check's hypothesis does not hold for this instance.
    NotApplicable(String),
    /// An enumeration or arithmetic limit was hit.
    Incomplete(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub check: &'static str,
    pub trial: usize,
    pub instance_seed: Option<u64>,
    pub instance_summary: String,
    pub exploratory: bool,
    #[serde(flatten)]
    pub status: CheckStatus,
    pub counterexample: Option<Counterexample>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }

    /// A failure that counts against the report.
    pub fn is_failure(&self) -> bool {
        self.status == CheckStatus::Fail && !self.exploratory
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub results: Vec<CheckResult>,
    /// Set when some check could not finish within the limits.
    pub incomplete: bool,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        !self.results.iter().any(CheckResult::is_failure)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.results.iter().filter(|r| r.is_failure())
    }

    fn finish(mut results: Vec<CheckResult>) -> Self {
        results.sort_by(|a, b| (a.check, a.trial).cmp(&(b.check, b.trial)));
        let incomplete = results
            .iter()
            .any(|r| matches!(r.status, CheckStatus::Incomplete(_)));
        VerificationReport { results, incomplete }
    }

    /// `"<passed> passed, <failed> failed, <total> total"`.
    pub fn summary(&self) -> String {
        let failed = self.failures().count();
        let passed = self.results.iter().filter(|r| r.passed()).count();
        format!(
            "{passed} passed, {failed} failed, {} total{}",
            self.results.len(),
            if self.incomplete { " (incomplete)" } else { "" }
        )
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match &self.status {
            CheckStatus::Pass => "PASS".to_owned(),
            CheckStatus::Fail if self.exploratory => "FAIL (exploratory)".to_owned(),
            CheckStatus::Fail => "FAIL".to_owned(),
            CheckStatus::NotApplicable(why) => format!("n/a ({why})"),
            CheckStatus::Incomplete(why) => format!("INCOMPLETE ({why})"),
        };
        let seed = self.instance_seed.map(|s| format!(" seed={s}")).unwrap_or_default();
        write!(
            f,
            "{:<30} trial={:<4}{seed} [{}] {status}",
            self.check, self.trial, self.instance_summary
        )?;
        if let Some(cx) = &self.counterexample {
            for line in cx.to_string().lines() {
                write!(f, "\n    {line}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.results {
            writeln!(f, "{r}")?;
        }
        f.write_str(&self.summary())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyOptions {
    /// Largest incidence count used for walk enumeration (`k <= max_n / 2`).
    pub max_n: usize,
    /// Random switching functions tried per instance.
    pub switch_trials: usize,
    pub theta_seed: u64,
    pub limits: WalkLimits,
    /// Self-test: perturb one Laplacian entry before comparing.
    pub corrupt_laplacian: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_n: 8,
            switch_trials: 20,
            theta_seed: 0,
            limits: WalkLimits::default(),
            corrupt_laplacian: false,
        }
    }
}

/// Parameters of the seeded random instance family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FamilyOptions {
    pub seed: u64,
    pub trials: usize,
    pub max_vertices: usize,
    pub max_edges: usize,
    pub max_edge_size: usize,
    /// Fraction of trials drawn as non-simple instances.
    pub non_simple_fraction: f64,
    pub non_simple_rate: f64,
}

impl Default for FamilyOptions {
    fn default() -> Self {
        FamilyOptions {
            seed: 0,
            trials: 100,
            max_vertices: 8,
            max_edges: 8,
            max_edge_size: 4,
            non_simple_fraction: 0.3,
            non_simple_rate: 0.3,
        }
    }
}

/// The seed of trial `t` in a family rooted at `seed`.
pub fn trial_seed(seed: u64, trial: usize) -> u64 {
    seed ^ (trial as u64).wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

/// Instance `trial` of the seeded family.
pub fn family_instance(family: &FamilyOptions, trial: usize) -> (OrientedHypergraph, u64) {
    let seed = trial_seed(family.seed, trial);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n_vertices = rng.gen_range(1..=family.max_vertices.max(1));
    let n_edges = rng.gen_range(0..=family.max_edges);
    let simple = !rng.gen_bool(family.non_simple_fraction.clamp(0.0, 1.0));
    let max_edge_size = if simple {
        family.max_edge_size.min(n_vertices)
    } else {
        family.max_edge_size
    }
    .max(1);
    let params = RandomParams {
        n_vertices,
        n_edges,
        max_edge_size,
        simple,
        non_simple_rate: family.non_simple_rate,
    };
    let g = random_instance_with(&mut rng, &params).expect("family parameters are feasible");
    (g, seed)
}

/// Runs every check on a single instance.
pub fn verify_instance(g: &OrientedHypergraph, options: &VerifyOptions) -> VerificationReport {
    let results = Check::ALL
        .par_iter()
        .map(|&c| run_check(c, g, options, 0, None))
        .collect();
    VerificationReport::finish(results)
}

/// Runs every check on `family.trials` seeded random instances.
pub fn verify_family(family: &FamilyOptions, options: &VerifyOptions) -> VerificationReport {
    let results = (0..family.trials)
        .into_par_iter()
        .flat_map_iter(|t| {
            let (g, seed) = family_instance(family, t);
            Check::ALL
                .into_iter()
                .map(move |c| run_check(c, &g, options, t, Some(seed)))
                .collect::<Vec<_>>()
        })
        .collect();
    VerificationReport::finish(results)
}

enum Outcome {
    Pass,
    Fail(Counterexample),
    NotApplicable(String),
}

#[derive(Debug)]
enum Interrupted {
    Walk(WalkError),
    Matrix(MatrixError),
}

impl From<WalkError> for Interrupted {
    fn from(e: WalkError) -> Self {
        Interrupted::Walk(e)
    }
}

impl From<MatrixError> for Interrupted {
    fn from(e: MatrixError) -> Self {
        Interrupted::Matrix(e)
    }
}

type Checked = Result<Outcome, Interrupted>;

/// Runs one check in isolation.
pub fn run_check(
    check: Check,
    g: &OrientedHypergraph,
    options: &VerifyOptions,
    trial: usize,
    instance_seed: Option<u64>,
) -> CheckResult {
    let outcome = match check {
        Check::BackstepDegree => backstep_degree(g, options),
        Check::CrossWalkTranspose => cross_walk_transpose(g, options),
        Check::DualIncidenceTranspose => dual_incidence_transpose(g),
        Check::DualInvolution => dual_involution(g),
        Check::DualLaplacianFactorization => dual_laplacian_factorization(g),
        Check::EdgeWalkDualPower => edge_walk_dual_power(g, options),
        Check::HalfWalkIncidence => half_walk_incidence(g, options),
        Check::HalfWalkLaplacian => half_walk_laplacian(g, options),
        Check::LaplacianFactorization => laplacian_factorization(g, options),
        Check::LaplacianWeakWalkEntries => laplacian_weak_walk_entries(g, options),
        Check::LineGraphAdjacency => line_graph_adjacency(g),
        Check::LineGraphIncidence => line_graph_incidence(g),
        Check::SwitchingAdjacency | Check::SwitchingIncidence | Check::SwitchingLaplacian => {
            switching(check, g, options, trial)
        }
        Check::UniformDualIdentity => uniform_dual_identity(g),
        Check::WalkCountPower => walk_count_power(g, options),
        Check::WalkMatrixDuality => walk_matrix_duality(g, options),
        Check::WalkReversalSymmetry => walk_reversal_symmetry(g, options),
        Check::WeakWalkLaplacian => weak_walk_laplacian(g, options),
    };
    let exploratory = check == Check::CrossWalkTranspose || (check.simple_only() && !g.is_simple());
    let (status, counterexample) = match outcome {
        Ok(Outcome::Pass) => (CheckStatus::Pass, None),
        Ok(Outcome::Fail(cx)) => (CheckStatus::Fail, Some(cx)),
        Ok(Outcome::NotApplicable(why)) => (CheckStatus::NotApplicable(why), None),
        Err(Interrupted::Walk(e)) => (CheckStatus::Incomplete(e.to_string()), None),
        Err(Interrupted::Matrix(e)) => (CheckStatus::Incomplete(e.to_string()), None),
    };
    CheckResult {
        check: check.name(),
        trial,
        instance_seed,
        instance_summary: g.summary(),
        exploratory,
        status,
        counterexample,
    }
}

fn compare(left_name: &str, left: LabeledMatrix, right_name: &str, right: LabeledMatrix) -> Outcome {
    if left == right {
        Outcome::Pass
    } else {
        Outcome::Fail(Counterexample::Matrices {
            left_name: left_name.to_owned(),
            left,
            right_name: right_name.to_owned(),
            right,
        })
    }
}

/// Runs comparisons in order and stops at the first failure.
fn all(outcomes: impl IntoIterator<Item = Checked>) -> Checked {
    for o in outcomes {
        match o? {
            Outcome::Pass => {}
            other => return Ok(other),
        }
    }
    Ok(Outcome::Pass)
}

fn note(description: String) -> Outcome {
    Outcome::Fail(Counterexample::Note { description })
}

fn even_lengths(options: &VerifyOptions) -> impl Iterator<Item = usize> {
    (0..=options.max_n).step_by(2)
}

fn dual_involution(g: &OrientedHypergraph) -> Checked {
    let back = g.incidence_dual().incidence_dual();
    if back == *g {
        Ok(Outcome::Pass)
    } else {
        Ok(note(format!("G** = {} differs from G = {}", back.summary(), g.summary())))
    }
}

fn dual_incidence_transpose(g: &OrientedHypergraph) -> Checked {
    Ok(compare(
        "H_{G*}",
        incidence_matrix(&g.incidence_dual()),
        "H^T",
        incidence_matrix(g).transpose(),
    ))
}

fn laplacian_factorization(g: &OrientedHypergraph, options: &VerifyOptions) -> Checked {
    let mut l = laplacian(g);
    if options.corrupt_laplacian && l.nrows() > 0 {
        l.set(0, 0, l.get(0, 0) + 1);
    }
    let d_minus_a = degree_matrix(g).checked_sub(&adjacency_matrix(g))?;
    let h = incidence_matrix(g);
    let hht = h.checked_mul(&h.transpose())?;
    all([
        Ok(compare("L", l.clone(), "D - A", d_minus_a)),
        Ok(compare("L", l, "H H^T", hht)),
    ])
}

fn dual_laplacian_factorization(g: &OrientedHypergraph) -> Checked {
    let dual = g.incidence_dual();
    let l_dual = laplacian(&dual);
    let d_minus_a = degree_matrix(&dual).checked_sub(&adjacency_matrix(&dual))?;
    let h = incidence_matrix(g);
    let hth = h.transpose().checked_mul(&h)?;
    all([
        Ok(compare("L_{G*}", l_dual.clone(), "D_{G*} - A_{G*}", d_minus_a)),
        Ok(compare("L_{G*}", l_dual, "H^T H", hth)),
    ])
}

fn uniform_dual_identity(g: &OrientedHypergraph) -> Checked {
    if !g.is_simple() {
        return Ok(Outcome::NotApplicable("not simple".into()));
    }
    let sizes = g.edge_sizes();
    let k = sizes.first().copied().unwrap_or(0);
    if !g.is_k_uniform(k) {
        return Ok(Outcome::NotApplicable("not uniform".into()));
    }
    let h = incidence_matrix(g);
    let hth = h.transpose().checked_mul(&h)?;
    let rhs = LabeledMatrix::identity(g.edges().to_vec())
        .checked_scale(k as i64)?
        .checked_sub(&adjacency_matrix(&g.incidence_dual()))?;
    Ok(compare("H^T H", hth, "kI - A_{G*}", rhs))
}

fn walk_count_power(g: &OrientedHypergraph, options: &VerifyOptions) -> Checked {
    let engine = WalkEngine::with_limits(g, options.limits);
    let a = adjacency_matrix(g);
    all(even_lengths(options).map(|n| {
        let power = a.checked_pow((n / 2) as u32)?;
        Ok(compare(&format!("A^{}", n / 2), power, &format!("X_(G,V,V,{})", n / 2), engine.walk_matrix(V, V, n)?))
    }))
}

fn edge_walk_dual_power(g: &OrientedHypergraph, options: &VerifyOptions) -> Checked {
    let engine = WalkEngine::with_limits(g, options.limits);
    let a_dual = adjacency_matrix(&g.incidence_dual());
    all(even_lengths(options).map(|n| {
        let power = a_dual.checked_pow((n / 2) as u32)?;
        Ok(compare(
            &format!("A_{{G*}}^{}", n / 2),
            power,
            &format!("X_(G,E,E,{})", n / 2),
            engine.walk_matrix(E, E, n)?,
        ))
    }))
}

fn walk_matrix_duality(g: &OrientedHypergraph, options: &VerifyOptions) -> Checked {
    let dual = g.incidence_dual();
    let primal = WalkEngine::with_limits(g, options.limits);
    let flipped = WalkEngine::with_limits(&dual, options.limits);
    let bound = options.max_n.min(4);
    let mut outcomes = Vec::new();
    for n in 0..=bound {
        if n % 2 == 0 {
            outcomes.push(
                primal
                    .walk_matrix(V, V, n)
                    .and_then(|x| Ok(compare("X_(G,V,V)", x, "X_(G*,E*,E*)", flipped.walk_matrix(E, E, n)?)))
                    .map_err(Interrupted::from),
            );
            outcomes.push(
                primal
                    .walk_matrix(E, E, n)
                    .and_then(|x| Ok(compare("X_(G,E,E)", x, "X_(G*,V*,V*)", flipped.walk_matrix(V, V, n)?)))
                    .map_err(Interrupted::from),
            );
        } else {
            outcomes.push(
                primal
                    .walk_matrix(E, V, n)
                    .and_then(|x| Ok(compare("X_(G,E,V)", x, "X_(G*,V*,E*)", flipped.walk_matrix(V, E, n)?)))
                    .map_err(Interrupted::from),
            );
        }
    }
    if bound >= 1 {
        outcomes.push(
            primal
                .walk_matrix(V, E, 1)
                .and_then(|x| Ok(compare("X_(G,V,E,1/2)^T", x.transpose(), "X_(G,E,V,1/2)", primal.walk_matrix(E, V, 1)?)))
                .map_err(Interrupted::from),
        );
    }
    all(outcomes)
}

/// `X_(G,V,E,k)ᵀ = X_(G,E,V,k)` for half-integral `k ≥ 3/2`. Reversing a
/// cross-walk shifts which incidence pairs are constrained to differ, so this
/// is reported rather than required.
fn cross_walk_transpose(g: &OrientedHypergraph, options: &VerifyOptions) -> Checked {
    if options.max_n < 3 {
        return Ok(Outcome::NotApplicable("max_n < 3".into()));
    }
    let engine = WalkEngine::with_limits(g, options.limits);
    all((3..=options.max_n).step_by(2).map(|n| {
        Ok(compare(
            &format!("X_(G,V,E,{n}/2)^T"),
            engine.walk_matrix(V, E, n)?.transpose(),
            &format!("X_(G,E,V,{n}/2)"),
            engine.walk_matrix(E, V, n)?,
        ))
    }))
}

fn half_walk_incidence(g: &OrientedHypergraph, options: &VerifyOptions) -> Checked {
    let engine = WalkEngine::with_limits(g, options.limits);
    Ok(compare("X_(G,V,E,1/2)", engine.walk_matrix(V, E, 1)?, "H", incidence_matrix(g)))
}

fn half_walk_laplacian(g: &OrientedHypergraph, options: &VerifyOptions) -> Checked {
    let engine = WalkEngine::with_limits(g, options.limits);
    let product = engine.walk_matrix(V, E, 1)?.checked_mul(&engine.walk_matrix(E, V, 1)?)?;
    Ok(compare("L", laplacian(g), "X_(G,V,E,1/2) X_(G,E,V,1/2)", product))
}

fn backstep_degree(g: &OrientedHypergraph, options: &VerifyOptions) -> Checked {
    let engine = WalkEngine::with_limits(g, options.limits);
    let degrees = g.degrees();
    let weak = engine.count_table(V, V, 2, true)?;
    let strict = engine.count_table(V, V, 2, false)?;
    for (i, v) in g.vertices().iter().enumerate() {
        let backsteps = engine.backsteps(v)?;
        if backsteps.len() != degrees[i] {
            return Ok(note(format!(
                "vertex {v}: {} backsteps but degree {}",
                backsteps.len(),
                degrees[i]
            )));
        }
        for b in &backsteps {
            if walk_sign(g, b)? != Sign::Minus {
                return Ok(Outcome::Fail(Counterexample::Walk {
                    description: format!("positive backstep {}", b.display(g)),
                }));
            }
        }
        let diff = weak[i][i].total - strict[i][i].total;
        if diff != degrees[i] as u64 {
            return Ok(note(format!(
                "vertex {v}: w~(v,v;1) - w(v,v;1) = {diff} but degree {}",
                degrees[i]
            )));
        }
        if g.is_simple() {
            for (j, w) in g.vertices().iter().enumerate() {
                if i != j && weak[i][j].total != strict[i][j].total {
                    return Ok(note(format!(
                        "w~({v},{w};1) = {} differs from w({v},{w};1) = {}",
                        weak[i][j].total, strict[i][j].total
                    )));
                }
            }
        }
    }
    Ok(Outcome::Pass)
}

fn laplacian_weak_walk_entries(g: &OrientedHypergraph, options: &VerifyOptions) -> Checked {
    let engine = WalkEngine::with_limits(g, options.limits);
    let weak = engine.count_table(V, V, 2, true)?;
    let strict = engine.count_table(V, V, 2, false)?;
    let mut from_walks = LabeledMatrix::zeros(g.vertices().to_vec(), g.vertices().to_vec());
    for i in 0..g.num_vertices() {
        for j in 0..g.num_vertices() {
            from_walks.set(i, j, weak[i][j].total as i64 - 2 * strict[i][j].positive as i64);
        }
    }
    Ok(compare("L", laplacian(g), "w~ - 2 w+", from_walks))
}

fn weak_walk_laplacian(g: &OrientedHypergraph, options: &VerifyOptions) -> Checked {
    let engine = WalkEngine::with_limits(g, options.limits);
    Ok(compare(
        "-W_(G,V,V,1)",
        engine.weak_walk_matrix(V, V, 2)?.checked_neg()?,
        "L",
        laplacian(g),
    ))
}

fn walk_reversal_symmetry(g: &OrientedHypergraph, options: &VerifyOptions) -> Checked {
    let engine = WalkEngine::with_limits(g, options.limits);
    for n in even_lengths(options) {
        for (kind, weak) in [(V, false), (E, false), (V, true), (E, true)] {
            let m = if weak {
                engine.weak_walk_matrix(kind, kind, n)?
            } else {
                engine.walk_matrix(kind, kind, n)?
            };
            if !m.is_symmetric() {
                let name = format!("{}_(G,{kind},{kind},{}/2)", if weak { "W" } else { "X" }, n);
                let t = m.transpose();
                return Ok(compare(&name, m, "transpose", t));
            }
        }
    }
    Ok(Outcome::Pass)
}

fn switching(check: Check, g: &OrientedHypergraph, options: &VerifyOptions, trial: usize) -> Checked {
    let mut rng = ChaCha8Rng::seed_from_u64(trial_seed(options.theta_seed, trial));
    for _ in 0..options.switch_trials {
        let theta = random_switching(&mut rng, g.vertices());
        let d = switching_matrix(&theta, g.vertices()).expect("theta covers every vertex");
        let switched = g.switch(&theta).expect("theta covers every vertex");
        let outcome = match check {
            Check::SwitchingAdjacency => compare(
                "A_{G^theta}",
                adjacency_matrix(&switched),
                "D(theta)^T A D(theta)",
                d.transpose().checked_mul(&adjacency_matrix(g))?.checked_mul(&d)?,
            ),
            Check::SwitchingIncidence => compare(
                "H_{G^theta}",
                incidence_matrix(&switched),
                "D(theta) H",
                d.checked_mul(&incidence_matrix(g))?,
            ),
            _ => compare(
                "L_{G^theta}",
                laplacian(&switched),
                "D(theta)^T L D(theta)",
                d.transpose().checked_mul(&laplacian(g))?.checked_mul(&d)?,
            ),
        };
        if let Outcome::Fail(cx) = outcome {
            let theta_text: Vec<String> = theta
                .assignment()
                .iter()
                .map(|(v, s)| format!("{v}:{s}"))
                .collect();
            let mut cx = cx;
            if let Counterexample::Matrices { left_name, .. } = &mut cx {
                left_name.push_str(&format!(" with theta = {{{}}}", theta_text.join(", ")));
            }
            return Ok(Outcome::Fail(cx));
        }
    }
    Ok(Outcome::Pass)
}

fn as_simple_signed_graph(g: &OrientedHypergraph) -> Result<OrientedSignedGraph, String> {
    if !g.is_k_uniform(2) {
        return Err("not 2-uniform".into());
    }
    let s = OrientedSignedGraph::from_hypergraph(g).map_err(|e| e.to_string())?;
    if !s.is_simple() {
        return Err("underlying graph not simple".into());
    }
    Ok(s)
}

fn line_graph_adjacency(g: &OrientedHypergraph) -> Checked {
    let s = match as_simple_signed_graph(g) {
        Ok(s) => s,
        Err(why) => return Ok(Outcome::NotApplicable(why)),
    };
    let line = s.line_graph().expect("simple graphs have line graphs");
    Ok(compare(
        "A_Lambda",
        adjacency_matrix(&line.to_hypergraph()),
        "A_{G*}",
        adjacency_matrix(&g.incidence_dual()),
    ))
}

fn line_graph_incidence(g: &OrientedHypergraph) -> Checked {
    let s = match as_simple_signed_graph(g) {
        Ok(s) => s,
        Err(why) => return Ok(Outcome::NotApplicable(why)),
    };
    let failures = signed_graph_identities(&s).expect("simple graphs have line graphs");
    Ok(match failures.into_iter().next() {
        None => Outcome::Pass,
        Some(f) => compare(f.identity, f.left, "expected", f.right),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::HypergraphBuilder;
    use crate::sign::Sign::Plus;

    fn two_vertex_edge() -> OrientedHypergraph {
        HypergraphBuilder::new()
            .vertices(["v1", "v2"])
            .edge("e1")
            .incidence("v1", "e1", Plus)
            .incidence("v2", "e1", Plus)
            .build()
            .unwrap()
    }

    #[test]
    fn two_vertex_edge_passes_everything_applicable() {
        let report = verify_instance(&two_vertex_edge(), &VerifyOptions::default());
        assert!(report.all_passed(), "{report}");
        assert!(!report.incomplete);
        let line = report.results.iter().find(|r| r.check == "line_graph_adjacency").unwrap();
        assert_eq!(line.status, CheckStatus::Pass);
    }

    #[test]
    fn three_uniform_identity_applies() {
        let g = HypergraphBuilder::new()
            .vertices(["v1", "v2", "v3"])
            .edge("e1")
            .incidence("v1", "e1", Plus)
            .incidence("v2", "e1", Plus)
            .incidence("v3", "e1", Plus)
            .build()
            .unwrap();
        let r = run_check(Check::UniformDualIdentity, &g, &VerifyOptions::default(), 0, None);
        assert_eq!(r.status, CheckStatus::Pass);
    }

    #[test]
    fn corrupted_laplacian_is_caught_and_reproducible() {
        let options = VerifyOptions {
            corrupt_laplacian: true,
            ..VerifyOptions::default()
        };
        let g = two_vertex_edge();
        let report = verify_instance(&g, &options);
        let failure = report.failures().next().expect("corruption must be detected");
        assert_eq!(failure.check, "laplacian_factorization");
        assert!(matches!(failure.counterexample, Some(Counterexample::Matrices { .. })));
        let again = run_check(Check::from_name(failure.check).unwrap(), &g, &options, 0, None);
        assert!(again.is_failure());
    }

    #[test]
    fn resource_limits_mark_report_incomplete() {
        let options = VerifyOptions {
            limits: WalkLimits {
                max_incidences: 12,
                max_walks: 0,
            },
            ..VerifyOptions::default()
        };
        let report = verify_instance(&two_vertex_edge(), &options);
        assert!(report.incomplete);
    }

    #[test]
    fn check_names_round_trip() {
        for c in Check::ALL {
            assert_eq!(Check::from_name(c.name()), Some(c));
        }
    }

    #[test]
    fn family_is_deterministic() {
        let family = FamilyOptions {
            trials: 3,
            ..FamilyOptions::default()
        };
        let options = VerifyOptions {
            max_n: 4,
            switch_trials: 2,
            ..VerifyOptions::default()
        };
        assert_eq!(verify_family(&family, &options), verify_family(&family, &options));
        assert_eq!(family_instance(&family, 2), family_instance(&family, 2));
    }
}
