//! The theorem harness: machine-checks the five propositions over the full
//! enumeration and mines the predicted Chebyshev counterexample.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::enumerate::enumerate_up_to;
use crate::error::{PosetError, Result};
use crate::exec::map_ordered;
use crate::metrics::{
    is_chain_compatible, maximal_chains_in_interval, triangle_violations, up_down_distance,
    zigzag_distance, DistanceKind,
};
use crate::poset::{ElementId, Poset};

/// Which claim to check.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PropositionId {
    /// Chebyshev satisfies the triangle inequality on every tree order.
    P1,
    /// Jordan–Dedekind ⟺ zigzag is chain-compatible, on filtering posets.
    P2,
    /// Semimodular join semilattices satisfy Jordan–Dedekind.
    P3,
    /// Semimodular ⟺ up-down is a metric ⟺ up-down equals zigzag.
    P4,
    /// Chebyshev is a metric on semimodular join semilattices.
    P5,
    /// Search for a join semilattice where the Chebyshev triangle fails.
    ChebSearch,
}

impl PropositionId {
    pub fn as_str(self) -> &'static str {
        match self {
            PropositionId::P1 => "P1",
            PropositionId::P2 => "P2",
            PropositionId::P3 => "P3",
            PropositionId::P4 => "P4",
            PropositionId::P5 => "P5",
            PropositionId::ChebSearch => "cheb-search",
        }
    }
}

impl std::str::FromStr for PropositionId {
    type Err = PosetError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "P1" => Ok(PropositionId::P1),
            "P2" => Ok(PropositionId::P2),
            "P3" => Ok(PropositionId::P3),
            "P4" => Ok(PropositionId::P4),
            "P5" => Ok(PropositionId::P5),
            "CHEB-SEARCH" | "CHEB_SEARCH" | "CHEBSEARCH" => Ok(PropositionId::ChebSearch),
            other => Err(PosetError::InvalidParameter(format!(
                "unknown proposition `{other}`"
            ))),
        }
    }
}

/// What went wrong (or, for the Chebyshev search, what was found) on one
/// poset.
#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum WitnessDetail {
    TriangleViolation {
        distance: &'static str,
        x: String,
        y: String,
        z: String,
        lhs: u32,
        rhs: u32,
    },
    ChainCompatibilityMismatch {
        jordan_dedekind: bool,
        zigzag_chain_compatible: bool,
    },
    JdFalsifierMissing,
    JdViolation {
        lower: String,
        upper: String,
        shortest_chain: u32,
        longest_chain: u32,
    },
    EquivalenceBroken {
        semimodular: bool,
        up_down_metric: bool,
        up_down_eq_zigzag: bool,
    },
    TreeOrderNotSemimodular,
}

/// A poset plus the record violating (or, for the search, exhibiting) the
/// claimed property. Re-running the cited check on the poset reproduces the
/// violation.
#[derive(Clone, Debug)]
pub struct Witness {
    pub poset: Poset,
    pub detail: WitnessDetail,
}

impl Serialize for Witness {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let covers: Vec<[&str; 2]> = self
            .poset
            .cover_pairs()
            .into_iter()
            .map(|(x, y)| [self.poset.name(x), self.poset.name(y)])
            .collect();
        let mut s = serializer.serialize_struct("Witness", 2)?;
        s.serialize_field("poset", &covers)?;
        s.serialize_field("detail", &self.detail)?;
        s.end()
    }
}

/// Outcome of one proposition over the enumeration range.
#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub proposition: &'static str,
    pub n_max: usize,
    /// Isomorphism classes enumerated.
    pub scanned: usize,
    /// Classes meeting the proposition's hypothesis.
    pub relevant: usize,
    /// For P1–P5: no witnesses. For the Chebyshev search: a witness exists.
    pub holds: bool,
    pub witnesses: Vec<Witness>,
    pub notes: Vec<String>,
}

/// Two maximal chains of one interval with different cardinalities: a direct
/// proof that no chain-compatible distance exists on the poset.
#[derive(Clone, Debug)]
pub struct ChainFalsifier {
    pub lower: ElementId,
    pub upper: ElementId,
    pub chain_short: Vec<ElementId>,
    pub chain_long: Vec<ElementId>,
}

/// If the Jordan–Dedekind condition fails, exhibit the falsifying interval
/// and chains; otherwise None.
pub fn falsify_chain_compatibility(p: &Poset) -> Option<ChainFalsifier> {
    let (lower, upper, _, _) = find_jd_violation(p)?;
    let chains = maximal_chains_in_interval(p, lower, upper).ok()?;
    let chain_short = chains.iter().min_by_key(|c| c.len())?.clone();
    let chain_long = chains.iter().max_by_key(|c| c.len())?.clone();
    debug_assert!(chain_short.len() < chain_long.len());
    Some(ChainFalsifier {
        lower,
        upper,
        chain_short,
        chain_long,
    })
}

fn find_jd_violation(p: &Poset) -> Option<(ElementId, ElementId, u32, u32)> {
    for x in p.elements() {
        for y in p.up_set(x) {
            if x == y {
                continue;
            }
            let short = p.height(x, y).ok()?;
            let long = p.longest_chain_len(x, y).ok()?;
            if short != long {
                return Some((x, y, short, long));
            }
        }
    }
    None
}

struct PosetOutcome {
    relevant: bool,
    witnesses: Vec<Witness>,
    non_semimodular_semilattice: bool,
    chebyshev_still_metric: bool,
}

fn triangle_witness(p: &Poset, kind: DistanceKind) -> Result<Option<Witness>> {
    let vs = triangle_violations(p, kind)?;
    Ok(vs.first().map(|v| Witness {
        poset: p.clone(),
        detail: WitnessDetail::TriangleViolation {
            distance: kind.as_str(),
            x: p.name(v.x).to_string(),
            y: p.name(v.y).to_string(),
            z: p.name(v.z).to_string(),
            lhs: v.lhs,
            rhs: v.rhs,
        },
    }))
}

fn check_poset(prop: PropositionId, p: &Poset) -> PosetOutcome {
    let mut out = PosetOutcome {
        relevant: false,
        witnesses: Vec::new(),
        non_semimodular_semilattice: false,
        chebyshev_still_metric: false,
    };
    let js = p.is_join_semilattice();
    match prop {
        PropositionId::P1 => {
            if !p.is_tree_order() {
                return out;
            }
            out.relevant = true;
            if let Some(w) = triangle_witness(p, DistanceKind::Chebyshev).expect("tree order has joins") {
                out.witnesses.push(w);
            }
            if !p.is_semimodular_cover().expect("tree order is a join semilattice") {
                out.witnesses.push(Witness {
                    poset: p.clone(),
                    detail: WitnessDetail::TreeOrderNotSemimodular,
                });
            }
        }
        PropositionId::P2 => {
            if !p.has_upper_filtering() && !p.has_lower_filtering() {
                return out;
            }
            out.relevant = true;
            let jd = p.is_jordan_dedekind();
            let cc = is_chain_compatible(p, DistanceKind::Zigzag)
                .expect("filtering poset is connected");
            if jd != cc {
                out.witnesses.push(Witness {
                    poset: p.clone(),
                    detail: WitnessDetail::ChainCompatibilityMismatch {
                        jordan_dedekind: jd,
                        zigzag_chain_compatible: cc,
                    },
                });
            }
            if !jd && falsify_chain_compatibility(p).is_none() {
                out.witnesses.push(Witness {
                    poset: p.clone(),
                    detail: WitnessDetail::JdFalsifierMissing,
                });
            }
        }
        PropositionId::P3 => {
            if !js || !p.is_semimodular_cover().expect("join semilattice") {
                return out;
            }
            out.relevant = true;
            if let Some((lo, hi, short, long)) = find_jd_violation(p) {
                out.witnesses.push(Witness {
                    poset: p.clone(),
                    detail: WitnessDetail::JdViolation {
                        lower: p.name(lo).to_string(),
                        upper: p.name(hi).to_string(),
                        shortest_chain: short,
                        longest_chain: long,
                    },
                });
            }
        }
        PropositionId::P4 => {
            if !js {
                return out;
            }
            out.relevant = true;
            let semimodular = p.is_semimodular_cover().expect("join semilattice");
            let ud_metric = triangle_violations(p, DistanceKind::UpDown)
                .expect("join semilattice has upper bounds")
                .is_empty();
            let ud_eq_zz = p.elements().all(|x| {
                p.elements().all(|y| {
                    x >= y
                        || up_down_distance(p, x, y).expect("upper bound exists")
                            == zigzag_distance(p, x, y).expect("connected")
                })
            });
            if !(semimodular == ud_metric && ud_metric == ud_eq_zz) {
                out.witnesses.push(Witness {
                    poset: p.clone(),
                    detail: WitnessDetail::EquivalenceBroken {
                        semimodular,
                        up_down_metric: ud_metric,
                        up_down_eq_zigzag: ud_eq_zz,
                    },
                });
            }
        }
        PropositionId::P5 => {
            if !js || !p.is_semimodular_cover().expect("join semilattice") {
                return out;
            }
            out.relevant = true;
            if let Some(w) = triangle_witness(p, DistanceKind::Chebyshev).expect("joins exist") {
                out.witnesses.push(w);
            }
        }
        PropositionId::ChebSearch => {
            if !js {
                return out;
            }
            out.relevant = true;
            let semimodular = p.is_semimodular_cover().expect("join semilattice");
            let w = triangle_witness(p, DistanceKind::Chebyshev).expect("joins exist");
            if !semimodular {
                out.non_semimodular_semilattice = true;
                out.chebyshev_still_metric = w.is_none();
            }
            if let Some(w) = w {
                out.witnesses.push(w);
            }
        }
    }
    out
}

/// Check one proposition over every isomorphism class of posets on
/// 1..=n_max elements.
pub fn verify(prop: PropositionId, n_max: usize, jobs: usize) -> Result<VerifyReport> {
    let levels = enumerate_up_to(n_max, jobs)?;
    let mut scanned = 0;
    let mut relevant = 0;
    let mut witnesses = Vec::new();
    let mut non_semi = 0usize;
    let mut non_semi_metric = 0usize;
    for level in &levels {
        scanned += level.len();
        let outcomes = map_ordered(level.iter().collect::<Vec<_>>(), jobs, |p| check_poset(prop, p));
        for o in outcomes {
            relevant += o.relevant as usize;
            non_semi += o.non_semimodular_semilattice as usize;
            non_semi_metric += o.chebyshev_still_metric as usize;
            witnesses.extend(o.witnesses);
        }
    }
    let mut notes = Vec::new();
    let holds = match prop {
        PropositionId::ChebSearch => {
            notes.push(format!(
                "non-semimodular join semilattices scanned: {non_semi}; Chebyshev still a metric on {non_semi_metric} of them"
            ));
            let found = !witnesses.is_empty();
            // keep only the minimal witness: smallest size, first canonical code
            witnesses.truncate(1);
            found
        }
        PropositionId::P2 => {
            notes.push(
                "chain-compatible-distance existence is checked through its equivalents: \
                 Jordan-Dedekind must match zigzag chain-compatibility, and every \
                 Jordan-Dedekind failure must yield a two-chain falsifier"
                    .to_string(),
            );
            witnesses.is_empty()
        }
        _ => witnesses.is_empty(),
    };
    Ok(VerifyReport {
        proposition: prop.as_str(),
        n_max,
        scanned,
        relevant,
        holds,
        witnesses,
        notes,
    })
}
