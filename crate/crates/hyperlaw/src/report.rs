//! Full classification profile of one table, serializable to a stable JSON
//! shape: struct fields serialize in declaration order, so equal inputs give
//! byte-identical reports.

use serde::Serialize;

use crate::format::TableDocument;
use crate::ideals::{enumerate_ideals, IdealKind, MAX_EXHAUSTIVE_SUBSET_ORDER};
use crate::laws::{check_law, classify_identities, LawId};
use crate::regularity::{intra_regular, invertibility};
use crate::table::{HyperTable, SubsetMask, WitnessTuple};
use crate::theorems::{
    run_all, Certificate, TheoremError, TheoremOptions, TheoremOutcome, TheoremVerdict,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct WitnessEntry {
    pub role: String,
    pub elements: Vec<String>,
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
}

impl WitnessEntry {
    fn new(t: &HyperTable, w: &WitnessTuple) -> WitnessEntry {
        WitnessEntry {
            role: w.role.clone(),
            elements: w.elements.iter().map(|&i| t.label(i).to_string()).collect(),
            lhs: mask_labels(t, w.lhs),
            rhs: mask_labels(t, w.rhs),
        }
    }
}

fn mask_labels(t: &HyperTable, m: SubsetMask) -> Vec<String> {
    m.iter().map(|i| t.label(i).to_string()).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct LawEntry {
    pub holds: bool,
    pub witness: Option<WitnessEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct LawSection {
    pub left_invertive: LawEntry,
    pub medial: LawEntry,
    pub paramedial: LawEntry,
    pub associative: LawEntry,
    pub commutative: LawEntry,
    pub left_exchange: LawEntry,
    pub semihypergroup_criterion: LawEntry,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ElementIdentityEntry {
    pub element: String,
    pub left_identity: bool,
    pub pure_left_identity: bool,
    pub right_identity: bool,
    pub pure_right_identity: bool,
    pub identity: bool,
    pub pure_identity: bool,
    pub zero: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct IdentitySection {
    pub per_element: Vec<ElementIdentityEntry>,
    pub left_identities: Vec<String>,
    pub pure_left_identity: Option<String>,
    pub pure_right_identity: Option<String>,
    pub zero: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct IntraRegularWitnessEntry {
    pub element: String,
    pub x: String,
    pub y: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct IntraRegularSection {
    pub overall: bool,
    pub failing_element: Option<String>,
    pub witnesses: Vec<IntraRegularWitnessEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ElementInversesEntry {
    pub element: String,
    pub left: Option<String>,
    pub pure_left: Option<String>,
    pub right: Option<String>,
    pub pure_right: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct InvertibilitySection {
    pub identity: String,
    pub left_invertible: bool,
    pub right_invertible: bool,
    pub invertible: bool,
    pub pure_left_invertible: bool,
    pub pure_right_invertible: bool,
    pub per_element: Vec<ElementInversesEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct IdealCountSection {
    pub sub: usize,
    pub left: usize,
    pub right: usize,
    pub two_sided: usize,
    pub bi: usize,
    pub generalized_bi: usize,
    pub interior: usize,
    pub quasi: usize,
    pub one_two: usize,
    pub semiprime: usize,
    pub idempotent: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CertificateEntry {
    pub direction: Option<String>,
    pub subsets: Vec<Vec<String>>,
    pub elements: Vec<String>,
    pub lhs: Option<Vec<String>>,
    pub rhs: Option<Vec<String>>,
    pub equation: String,
    pub table: TableDocument,
}

impl CertificateEntry {
    pub fn new(cert: &Certificate) -> CertificateEntry {
        let t = &cert.table;
        CertificateEntry {
            direction: cert.direction.map(|d| d.name().to_string()),
            subsets: cert.subsets.iter().map(|&s| mask_labels(t, s)).collect(),
            elements: cert
                .elements
                .iter()
                .map(|&i| t.label(i).to_string())
                .collect(),
            lhs: cert.lhs.map(|m| mask_labels(t, m)),
            rhs: cert.rhs.map(|m| mask_labels(t, m)),
            equation: cert.equation.clone(),
            table: TableDocument::from_table(t),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TheoremEntry {
    pub id: String,
    pub outcome: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateEntry>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl TheoremEntry {
    pub fn new(verdict: &TheoremVerdict) -> TheoremEntry {
        let (outcome, reason, certificate) = match &verdict.outcome {
            TheoremOutcome::Holds => ("holds".to_string(), None, None),
            TheoremOutcome::Vacuous { reason } => {
                ("vacuous".to_string(), Some(reason.clone()), None)
            }
            TheoremOutcome::Counterexample(cert) => (
                "counterexample".to_string(),
                None,
                Some(CertificateEntry::new(cert)),
            ),
        };
        TheoremEntry {
            id: verdict.id.name().to_string(),
            outcome,
            reason,
            certificate,
            notes: verdict.notes.clone(),
        }
    }
}

/// The full profile: every field reproducible by re-running the
/// corresponding module operation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct StructureReport {
    pub order: usize,
    pub elements: Vec<String>,
    pub laws: LawSection,
    pub identities: IdentitySection,
    pub intra_regular: IntraRegularSection,
    pub invertibility: Option<InvertibilitySection>,
    pub ideal_counts: Option<IdealCountSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theorems: Option<Vec<TheoremEntry>>,
}

impl StructureReport {
    pub fn build(t: &HyperTable) -> StructureReport {
        let law = |id: LawId| {
            let v = check_law(t, id);
            LawEntry {
                holds: v.holds,
                witness: v.witness.as_ref().map(|w| WitnessEntry::new(t, w)),
            }
        };
        let profile = classify_identities(t);
        let label = |i: usize| t.label(i).to_string();

        let identities = IdentitySection {
            per_element: (0..t.order())
                .map(|e| {
                    let f = profile.element(e);
                    ElementIdentityEntry {
                        element: label(e),
                        left_identity: f.left_identity,
                        pure_left_identity: f.pure_left_identity,
                        right_identity: f.right_identity,
                        pure_right_identity: f.pure_right_identity,
                        identity: f.identity,
                        pure_identity: f.pure_identity,
                        zero: f.zero,
                    }
                })
                .collect(),
            left_identities: profile.left_identities().map(label).collect(),
            pure_left_identity: profile.pure_left_identity().map(label),
            pure_right_identity: profile.pure_right_identity().map(label),
            zero: profile.zero().map(label),
        };

        let intra = intra_regular(t);
        let intra_section = IntraRegularSection {
            overall: intra.overall,
            failing_element: intra.first_failing.map(label),
            witnesses: intra
                .witnesses
                .iter()
                .enumerate()
                .filter_map(|(a, w)| {
                    w.map(|(x, y)| IntraRegularWitnessEntry {
                        element: label(a),
                        x: label(x),
                        y: label(y),
                    })
                })
                .collect(),
        };

        // prefer the pure left identity as the base point, else the first
        // left identity
        let identity_for_inverses = profile
            .pure_left_identity()
            .or_else(|| profile.first_left_identity());
        let invertibility_section = identity_for_inverses.map(|e| {
            let report = invertibility(t, e).expect("element verified as a left identity");
            InvertibilitySection {
                identity: label(e),
                left_invertible: report.left_invertible,
                right_invertible: report.right_invertible,
                invertible: report.invertible,
                pure_left_invertible: report.pure_left_invertible,
                pure_right_invertible: report.pure_right_invertible,
                per_element: report
                    .inverses
                    .iter()
                    .enumerate()
                    .map(|(a, inv)| ElementInversesEntry {
                        element: label(a),
                        left: inv.left.map(label),
                        pure_left: inv.pure_left.map(label),
                        right: inv.right.map(label),
                        pure_right: inv.pure_right.map(label),
                    })
                    .collect(),
            }
        });

        let ideal_counts = (t.order() <= MAX_EXHAUSTIVE_SUBSET_ORDER).then(|| {
            let count = |kind: IdealKind| {
                enumerate_ideals(t, kind)
                    .expect("order bound checked")
                    .len()
            };
            IdealCountSection {
                sub: count(IdealKind::Sub),
                left: count(IdealKind::Left),
                right: count(IdealKind::Right),
                two_sided: count(IdealKind::TwoSided),
                bi: count(IdealKind::Bi),
                generalized_bi: count(IdealKind::GeneralizedBi),
                interior: count(IdealKind::Interior),
                quasi: count(IdealKind::Quasi),
                one_two: count(IdealKind::OneTwo),
                semiprime: count(IdealKind::Semiprime),
                idempotent: count(IdealKind::Idempotent),
            }
        });

        StructureReport {
            order: t.order(),
            elements: t.labels().to_vec(),
            laws: LawSection {
                left_invertive: law(LawId::LeftInvertive),
                medial: law(LawId::Medial),
                paramedial: law(LawId::Paramedial),
                associative: law(LawId::Associative),
                commutative: law(LawId::Commutative),
                left_exchange: law(LawId::LeftExchange),
                semihypergroup_criterion: law(LawId::SemihypergroupCriterion),
            },
            identities,
            intra_regular: intra_section,
            invertibility: invertibility_section,
            ideal_counts,
            theorems: None,
        }
    }

    /// Attach the theorem section (requires an LA-semihypergroup).
    pub fn with_theorems(
        mut self,
        t: &HyperTable,
        opts: TheoremOptions,
    ) -> Result<StructureReport, TheoremError> {
        let verdicts = run_all(t, opts)?;
        self.theorems = Some(verdicts.iter().map(TheoremEntry::new).collect());
        Ok(self)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn k4_report_matches_the_known_profile() {
        let report = StructureReport::build(&fixtures::k4());
        assert!(report.laws.left_invertive.holds);
        assert!(!report.intra_regular.overall);
        assert_eq!(report.intra_regular.failing_element.as_deref(), Some("x"));
    }

    #[test]
    fn report_json_is_stable() {
        let t = fixtures::a5();
        let a = StructureReport::build(&t).to_json();
        let b = StructureReport::build(&t).to_json();
        assert_eq!(a, b);
    }

    #[test]
    fn theorem_section_attaches() {
        let t = fixtures::p4_repaired();
        let report = StructureReport::build(&t)
            .with_theorems(&t, TheoremOptions::default())
            .unwrap();
        let entries = report.theorems.unwrap();
        assert_eq!(entries.len(), crate::theorems::TheoremId::ALL.len());
        assert_eq!(entries[0].id, "T1");
        assert_eq!(entries[0].outcome, "holds");
    }
}
