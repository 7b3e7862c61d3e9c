//! Stability indices of powers and the bound checks for matroidal ideals.
//!
//! For a matroidal ideal `I` of degree `d` in standard position (gcd 1, full
//! support), both `astab(I)` and `dstab(I)` are at most `B = min{d, ℓ(I)}`,
//! so every loop here stops at `B`: no open-ended stabilization search.

use crate::config::EngineConfig;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::matroid::{cover_profile, is_matroidal, is_polymatroidal, CoverProfile};
use crate::relation::{build_gamma, component_factorization, RelationGraph};
use crate::stability::ass::{ass_chain, max_ideal_associated, AssSet};
use crate::stability::betti::exact_depth;
use crate::stability::spread::analytic_spread;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Matroidal input in standard position; the horizon is `min{d, ℓ}`.
    Certified,
    /// Any equigenerated input, explored up to `kmax` (capped at `ℓ` when the
    /// exchange property holds). Results carry no certificate.
    Uncertified { kmax: u32 },
}

/// Degree, spread and horizon of a certified input.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Certificate {
    pub degree: u64,
    pub spread: usize,
    pub bound: u32,
}

/// Check the standing hypotheses: matroidal, `gcd(I) = 1`, full support.
pub fn certify(ideal: &MonomialIdeal) -> Result<Certificate> {
    if !is_matroidal(ideal) {
        return Err(Error::Mode("certified mode needs a matroidal ideal".into()));
    }
    if !ideal.has_standard_position() {
        return Err(Error::Mode(
            "certified mode needs gcd(I) = 1 and every variable in supp(I)".into(),
        ));
    }
    let degree = ideal.degree().expect("matroidal ideals are equigenerated");
    let spread = analytic_spread(ideal)?;
    let bound = degree.min(spread as u64) as u32;
    Ok(Certificate {
        degree,
        spread,
        bound,
    })
}

fn horizon(ideal: &MonomialIdeal, mode: Mode) -> Result<(u32, bool)> {
    match mode {
        Mode::Certified => Ok((certify(ideal)?.bound, true)),
        Mode::Uncertified { kmax } => {
            if kmax == 0 {
                return Err(Error::Invalid("kmax must be at least 1".into()));
            }
            if is_polymatroidal(ideal).holds() {
                let spread = analytic_spread(ideal)? as u32;
                Ok((kmax.min(spread.max(1)), false))
            } else {
                Ok((kmax, false))
            }
        }
    }
}

/// Least `k` from which every later entry equals the last one.
fn settles_at<T: PartialEq>(seq: &[T]) -> u32 {
    let last = seq.last().expect("nonempty sequence");
    let mut k = seq.len();
    while k > 1 && seq[k - 2] == *last {
        k -= 1;
    }
    k as u32
}

fn first_persistence_break(chain: &[AssSet]) -> Option<usize> {
    chain
        .windows(2)
        .position(|w| !w[0].is_subset(&w[1]))
        .map(|k| k + 1)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AstabResult {
    pub index: u32,
    pub horizon: u32,
    /// `Ass(I^k)` for `k = 1..=horizon`.
    pub chain: Vec<AssSet>,
    pub certified: bool,
}

impl AstabResult {
    /// `Ass(I^horizon)`, which is `Ass^∞(I)` when certified.
    pub fn stable_set(&self) -> &AssSet {
        self.chain.last().expect("horizon >= 1")
    }
}

/// `astab(I)`. In certified mode a break in `Ass(I^k) ⊆ Ass(I^{k+1})` is an
/// error, since it would contradict polymatroidality.
pub fn astab(ideal: &MonomialIdeal, mode: Mode, cfg: &EngineConfig) -> Result<AstabResult> {
    let (horizon, certified) = horizon(ideal, mode)?;
    let chain = ass_chain(ideal, horizon, cfg)?;
    if certified {
        if let Some(k) = first_persistence_break(&chain) {
            return Err(Error::Violation(format!(
                "Ass(I^{k}) is not contained in Ass(I^{})",
                k + 1
            )));
        }
    }
    Ok(AstabResult {
        index: settles_at(&chain),
        horizon,
        chain,
        certified,
    })
}

/// `dstab` of one factor `J_j` of the component factorization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentDstab {
    pub block: Vec<usize>,
    pub degree: u64,
    pub index: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DstabMethod {
    /// Least `t` with `depth R_j/J_j^t = 0` on each factor; `dstab` is the maximum.
    Factorization,
    /// Exact depth of each power.
    ExactDepth,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DstabResult {
    pub index: u32,
    pub method: DstabMethod,
    pub components: Vec<ComponentDstab>,
    /// `depth R/I^k` for `k = 1..`, filled by the exact-depth method.
    pub depths: Vec<usize>,
    pub certified: bool,
}

/// `dstab(I)`.
///
/// Certified mode splits `I = ∏ J_j` along the components of `Γ_I`; each
/// factor has connected relation graph, hence limiting depth zero, reached
/// by `t = deg J_j`. Depth is non-increasing, so the first `t` with
/// `(J_j^t : m_j) ≠ J_j^t` is the factor's index. An unverified
/// factorization falls back to exact depth.
pub fn dstab(ideal: &MonomialIdeal, mode: Mode, cfg: &EngineConfig) -> Result<DstabResult> {
    dstab_with_hint(ideal, mode, cfg, None)
}

/// As [`dstab`], reusing known answers to `m ∈ Ass(I^k)` for `k = 1..`.
pub(crate) fn dstab_with_hint(
    ideal: &MonomialIdeal,
    mode: Mode,
    cfg: &EngineConfig,
    max_in_ass: Option<&[bool]>,
) -> Result<DstabResult> {
    match mode {
        Mode::Certified => {
            let cert = certify(ideal)?;
            let fact = component_factorization(ideal)?;
            if !fact.verified {
                let gamma = build_gamma(ideal)?;
                let target = gamma.num_components().saturating_sub(1);
                let depths = depth_sequence(ideal, cert.bound, cfg)?;
                let index = depths
                    .iter()
                    .position(|&d| d == target)
                    .map(|k| k as u32 + 1)
                    .ok_or_else(|| {
                        Error::Violation(format!(
                            "depth never reached {target} by power {}",
                            cert.bound
                        ))
                    })?;
                return Ok(DstabResult {
                    index,
                    method: DstabMethod::ExactDepth,
                    components: Vec::new(),
                    depths,
                    certified: true,
                });
            }
            let n = ideal.num_vars();
            let mut components = Vec::with_capacity(fact.factors.len());
            for factor in &fact.factors {
                let degree = factor
                    .degree()
                    .expect("factors of matroidal ideals are equigenerated");
                let whole = factor.block.len() == n;
                let mut index = None;
                let mut power = factor.local.clone();
                for t in 1..=degree as u32 {
                    if t > 1 {
                        power = power.multiply(&factor.local)?;
                    }
                    let hinted = max_in_ass
                        .filter(|_| whole)
                        .and_then(|h| h.get(t as usize - 1).copied());
                    let hit = match hinted {
                        Some(h) => h,
                        None => max_ideal_associated(&power)?,
                    };
                    if hit {
                        index = Some(t);
                        break;
                    }
                }
                let index = index.ok_or_else(|| {
                    Error::Violation(format!(
                        "factor on {:?} has positive depth at power {degree}",
                        factor.block.iter().map(|v| v + 1).collect::<Vec<_>>()
                    ))
                })?;
                components.push(ComponentDstab {
                    block: factor.block.clone(),
                    degree,
                    index,
                });
            }
            Ok(DstabResult {
                index: components.iter().map(|c| c.index).max().unwrap_or(1),
                method: DstabMethod::Factorization,
                components,
                depths: Vec::new(),
                certified: true,
            })
        }
        Mode::Uncertified { .. } => {
            let (horizon, _) = horizon(ideal, mode)?;
            let depths = depth_sequence(ideal, horizon, cfg)?;
            Ok(DstabResult {
                index: settles_at(&depths),
                method: DstabMethod::ExactDepth,
                components: Vec::new(),
                depths,
                certified: false,
            })
        }
    }
}

/// `depth R/I^k` for `k = 1..=kmax`.
pub fn depth_sequence(ideal: &MonomialIdeal, kmax: u32, cfg: &EngineConfig) -> Result<Vec<usize>> {
    let mut out = Vec::with_capacity(kmax as usize);
    let mut power = ideal.clone();
    for k in 1..=kmax {
        if k > 1 {
            power = power.multiply(ideal)?;
        }
        out.push(exact_depth(&power, cfg)?.depth);
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VerdictStatus {
    Pass,
    Fail,
    /// Hypothesis of the check does not hold for this input.
    NotApplicable,
    /// Out of resource scope; the reason is in the detail.
    Skipped,
    /// Noteworthy but not a failure (e.g. astab ≠ dstab).
    Flagged,
}

impl VerdictStatus {
    pub fn name(self) -> &'static str {
        match self {
            VerdictStatus::Pass => "pass",
            VerdictStatus::Fail => "fail",
            VerdictStatus::NotApplicable => "n/a",
            VerdictStatus::Skipped => "skipped",
            VerdictStatus::Flagged => "flagged",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub name: &'static str,
    pub status: VerdictStatus,
    pub detail: String,
}

fn verdict(name: &'static str, ok: bool, detail: String) -> Verdict {
    Verdict {
        name,
        status: if ok {
            VerdictStatus::Pass
        } else {
            VerdictStatus::Fail
        },
        detail,
    }
}

/// Exact depth of one power, or why it was not computed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DepthEntry {
    Computed {
        depth: usize,
        pd: usize,
        field_discrepancy: Option<bool>,
    },
    OutOfScope(String),
}

impl DepthEntry {
    pub fn depth(&self) -> Option<usize> {
        match self {
            DepthEntry::Computed { depth, .. } => Some(*depth),
            DepthEntry::OutOfScope(_) => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilityReport {
    pub num_vars: usize,
    pub degree: u64,
    pub spread: usize,
    /// Number of connected components `s` of `Γ_I`.
    pub components: usize,
    /// `min{d, ℓ}`.
    pub bound: u32,
    /// Last power examined, at least `bound`.
    pub horizon: u32,
    pub gamma: RelationGraph,
    pub cover: CoverProfile,
    /// `Ass(I^k)` for `k = 1..=horizon`.
    pub chain: Vec<AssSet>,
    pub astab: u32,
    pub dstab: DstabResult,
    /// Exact depth of `R/I^k` for `k = 1..=horizon`.
    pub depths: Vec<DepthEntry>,
    pub max_ideal_stable: bool,
    pub verdicts: Vec<Verdict>,
}

impl StabilityReport {
    pub fn failures(&self) -> impl Iterator<Item = &Verdict> {
        self.verdicts
            .iter()
            .filter(|v| v.status == VerdictStatus::Fail)
    }

    pub fn has_failures(&self) -> bool {
        self.failures().next().is_some()
    }

    /// `astab(I) ≠ dstab(I)` on a matroidal ideal.
    pub fn is_conjecture_counterexample(&self) -> bool {
        self.astab != self.dstab.index
    }

    pub fn verdict(&self, name: &str) -> Option<&Verdict> {
        self.verdicts.iter().find(|v| v.name == name)
    }
}

/// Compute everything for a certified input and evaluate each bound.
///
/// `kmax` extends the Ass chain and depth sequence past `min{d, ℓ}` so that
/// stabilization beyond the bound is checked too. Resource limits on exact
/// depth mark individual powers out of scope; they never abort the report.
pub fn check_bounds(
    ideal: &MonomialIdeal,
    kmax: Option<u32>,
    cfg: &EngineConfig,
) -> Result<StabilityReport> {
    let cert = certify(ideal)?;
    let n = ideal.num_vars();
    let d = cert.degree;
    let b = cert.bound;
    let horizon = kmax.unwrap_or(b).max(b);
    let gamma = build_gamma(ideal)?;
    let s = gamma.num_components();
    let cover = cover_profile(ideal);

    let chain = ass_chain(ideal, horizon, cfg)?;
    let stable = &chain[b as usize - 1];
    let max_ideal_stable = stable.contains_maximal();
    let astab = settles_at(&chain[..b as usize]);
    let hint: Vec<bool> = chain.iter().map(AssSet::contains_maximal).collect();
    let dstab = dstab_with_hint(ideal, Mode::Certified, cfg, Some(&hint))?;

    let mut depths = Vec::with_capacity(horizon as usize);
    let mut power = ideal.clone();
    for k in 1..=horizon {
        if k > 1 {
            // Multiplying by one fixed generator embeds G(I^k) into
            // G(I^{k+1}), so once a power is over the cap all later ones are.
            if power.len() > cfg.max_generators {
                depths.push(DepthEntry::OutOfScope(format!(
                    "I^{} already exceeds the exact-depth cap of {} generators",
                    k - 1,
                    cfg.max_generators
                )));
                continue;
            }
            power = power.multiply(ideal)?;
        }
        depths.push(match exact_depth(&power, cfg) {
            Ok(e) => DepthEntry::Computed {
                depth: e.depth,
                pd: e.pd,
                field_discrepancy: e.field_discrepancy,
            },
            Err(Error::Resource(why)) => DepthEntry::OutOfScope(why),
            Err(other) => return Err(other),
        });
    }

    let mut verdicts = Vec::new();

    let settled_after_bound = chain[b as usize - 1..].iter().all(|a| a == stable);
    verdicts.push(verdict(
        "astab_bound",
        astab <= b && settled_after_bound,
        format!("astab = {astab}, min(d, l) = {b}, Ass constant on powers {b}..={horizon}: {settled_after_bound}"),
    ));
    verdicts.push(verdict(
        "dstab_bound",
        dstab.index <= b,
        format!("dstab = {}, min(d, l) = {b}", dstab.index),
    ));
    let min_cover = cover.min().unwrap_or(0);
    verdicts.push(verdict(
        "cover_bound",
        min_cover as u64 >= d,
        format!("min |A_i| = {min_cover}, d = {d}"),
    ));
    let brk = first_persistence_break(&chain);
    verdicts.push(verdict(
        "persistence",
        brk.is_none(),
        match brk {
            None => format!("Ass(I^k) increasing for k = 1..={horizon}"),
            Some(k) => format!("Ass(I^{k}) not contained in Ass(I^{})", k + 1),
        },
    ));
    for (name, index) in [("astab_refined", astab), ("dstab_refined", dstab.index)] {
        verdicts.push(if max_ideal_stable {
            Verdict {
                name,
                status: VerdictStatus::NotApplicable,
                detail: "m is a stable associated prime".into(),
            }
        } else {
            verdict(
                name,
                (index as u64) < d,
                format!("m not stable; index = {index}, d - 1 = {}", d - 1),
            )
        });
    }
    verdicts.push(verdict(
        "spread_identity",
        cert.spread + s == n + 1,
        format!("l = {}, n - s + 1 = {}", cert.spread, n + 1 - s),
    ));
    verdicts.push(verdict(
        "stable_max_ideal_matches_components",
        max_ideal_stable == (s == 1),
        format!("m in Ass^inf: {max_ideal_stable}, s = {s}"),
    ));

    let computed: Vec<(u32, usize)> = depths
        .iter()
        .enumerate()
        .filter_map(|(k, e)| e.depth().map(|v| (k as u32 + 1, v)))
        .collect();
    let skipped = |name: &'static str, why: String| Verdict {
        name,
        status: VerdictStatus::Skipped,
        detail: why,
    };
    match &depths[0] {
        DepthEntry::Computed { depth, pd, .. } => verdicts.push(verdict(
            "depth_formula",
            *depth as u64 + 1 == d && *pd as u64 == n as u64 + 1 - d,
            format!("depth R/I = {depth}, pd = {pd}, d = {d}, n = {n}"),
        )),
        DepthEntry::OutOfScope(why) => verdicts.push(skipped("depth_formula", why.clone())),
    }
    if computed.len() >= 2 {
        let monotone = computed
            .windows(2)
            .all(|w| w[1].0 != w[0].0 + 1 || w[1].1 <= w[0].1);
        verdicts.push(verdict(
            "depth_monotone",
            monotone,
            format!("computed depths (power, depth): {computed:?}"),
        ));
    } else {
        verdicts.push(skipped(
            "depth_monotone",
            "fewer than two powers in exact-depth scope".into(),
        ));
    }
    match &depths[b as usize - 1] {
        DepthEntry::Computed { depth, .. } => {
            let tail_ok = computed
                .iter()
                .filter(|(k, _)| *k >= dstab.index)
                .all(|(_, v)| *v + 1 == s);
            verdicts.push(verdict(
                "limit_depth",
                *depth + 1 == s && tail_ok,
                format!(
                    "depth R/I^{b} = {depth}, s - 1 = {}, constant from dstab on: {tail_ok}",
                    s - 1
                ),
            ));
        }
        // depth 0 is exactly m ∈ Ass, which the chain already decided.
        DepthEntry::OutOfScope(_) if s == 1 => verdicts.push(verdict(
            "limit_depth",
            max_ideal_stable,
            format!("depth R/I^{b} = 0 iff m ∈ Ass(I^{b}): {max_ideal_stable}"),
        )),
        DepthEntry::OutOfScope(why) => verdicts.push(skipped("limit_depth", why.clone())),
    }
    let discrepancy = depths.iter().any(|e| {
        matches!(
            e,
            DepthEntry::Computed {
                field_discrepancy: Some(true),
                ..
            }
        )
    });
    if cfg.check_field.is_some() {
        verdicts.push(Verdict {
            name: "field_agreement",
            status: if discrepancy {
                VerdictStatus::Flagged
            } else {
                VerdictStatus::Pass
            },
            detail: "Betti tables compared over the check field".into(),
        });
    }

    let strict = (astab as usize) < cert.spread && (dstab.index as usize) < cert.spread;
    verdicts.push(Verdict {
        name: "strict_spread",
        status: if strict {
            VerdictStatus::Pass
        } else {
            VerdictStatus::Flagged
        },
        detail: format!("astab, dstab < l = {}: {strict}", cert.spread),
    });
    verdicts.push(Verdict {
        name: "equal_indices",
        status: if astab == dstab.index {
            VerdictStatus::Pass
        } else {
            VerdictStatus::Flagged
        },
        detail: format!("astab = {astab}, dstab = {}", dstab.index),
    });
    verdicts.push(if d == 4 && !max_ideal_stable {
        Verdict {
            name: "degree4_equal_indices",
            status: if astab == dstab.index {
                VerdictStatus::Pass
            } else {
                VerdictStatus::Flagged
            },
            detail: format!("astab = {astab}, dstab = {}", dstab.index),
        }
    } else {
        Verdict {
            name: "degree4_equal_indices",
            status: VerdictStatus::NotApplicable,
            detail: "needs d = 4 and m not stable".into(),
        }
    });

    Ok(StabilityReport {
        num_vars: n,
        degree: d,
        spread: cert.spread,
        components: s,
        bound: b,
        horizon,
        gamma,
        cover,
        chain,
        astab,
        dstab,
        depths,
        max_ideal_stable,
        verdicts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::Monomial;

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::minimalize(gens.iter().map(|g| Monomial::new(g)), n).unwrap()
    }

    fn k3() -> MonomialIdeal {
        ideal(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]])
    }

    fn transversal() -> MonomialIdeal {
        ideal(
            4,
            &[&[1, 0, 1, 0], &[1, 0, 0, 1], &[0, 1, 1, 0], &[0, 1, 0, 1]],
        )
    }

    #[test]
    fn settles_at_examples() {
        assert_eq!(settles_at(&[1, 2, 2]), 2);
        assert_eq!(settles_at(&[2, 2, 2]), 1);
        assert_eq!(settles_at(&[1, 2, 1]), 3);
        assert_eq!(settles_at(&[5]), 1);
    }

    #[test]
    fn k3_indices() {
        let cfg = EngineConfig::default();
        let a = astab(&k3(), Mode::Certified, &cfg).unwrap();
        assert_eq!((a.index, a.horizon), (2, 2));
        let d = dstab(&k3(), Mode::Certified, &cfg).unwrap();
        assert_eq!(d.index, 2);
        assert_eq!(d.method, DstabMethod::Factorization);
    }

    #[test]
    fn transversal_indices() {
        let cfg = EngineConfig::default();
        let a = astab(&transversal(), Mode::Certified, &cfg).unwrap();
        assert_eq!(a.index, 1);
        assert_eq!(a.stable_set().len(), 2);
        let d = dstab(&transversal(), Mode::Certified, &cfg).unwrap();
        assert_eq!(d.index, 1);
        assert_eq!(d.components.len(), 2);
    }

    #[test]
    fn certified_mode_rejects_bad_input() {
        let cfg = EngineConfig::default();
        let not_matroidal = ideal(4, &[&[1, 1, 0, 0], &[0, 0, 1, 1]]);
        assert!(matches!(
            astab(&not_matroidal, Mode::Certified, &cfg),
            Err(Error::Mode(_))
        ));
        let with_gcd = ideal(3, &[&[1, 1, 0], &[1, 0, 1]]);
        assert!(matches!(certify(&with_gcd), Err(Error::Mode(_))));
    }

    #[test]
    fn uncertified_matches_certified_on_k3() {
        let cfg = EngineConfig::default();
        let a = astab(&k3(), Mode::Uncertified { kmax: 4 }, &cfg).unwrap();
        assert_eq!(a.index, 2);
        assert!(!a.certified);
        // The exchange property caps the horizon at l = 3.
        assert_eq!(a.horizon, 3);
        let d = dstab(&k3(), Mode::Uncertified { kmax: 4 }, &cfg).unwrap();
        assert_eq!(d.depths, vec![1, 0, 0]);
        assert_eq!(d.index, 2);
    }

    #[test]
    fn k3_report_passes() {
        let cfg = EngineConfig::default();
        let r = check_bounds(&k3(), Some(3), &cfg).unwrap();
        assert!(!r.has_failures(), "{:?}", r.verdicts);
        assert_eq!((r.astab, r.dstab.index, r.degree), (2, 2, 2));
        assert!(!r.is_conjecture_counterexample());
        assert_eq!(r.depths[0].depth(), Some(1));
    }
}
