//! Executable catalog of the structure theorems as hypothesis→conclusion
//! checks over a single table.
//!
//! Every theorem requires the table to satisfy the left invertive law; a
//! failed hypothesis yields `Vacuous` naming the first failed clause, a
//! failed conclusion yields a `Counterexample` whose certificate replays
//! from scratch through the core, ideal and regularity operations.
//! Biconditional conclusions are split so a certificate names the failing
//! direction.

use std::cell::RefCell;
use std::collections::BTreeMap;

use thiserror::Error;

use crate::ideals::{enumerate_ideals, is_ideal, minimal_ideals, IdealError, IdealKind};
use crate::laws::{check_law, classify_identities, is_la_semihypergroup, IdentityProfile, LawId};
use crate::regularity::{intra_regular, invertibility, IntraRegularityReport};
use crate::table::{HyperTable, SubsetMask, WitnessTuple};

/// Stable identifiers for the checked statements.
///
/// * T1 — medial law holds.
/// * T2 — pure left identity ⇒ left exchange `x∘(y∘z)=y∘(x∘z)`.
/// * T3 — pure left identity ⇒ paramedial law.
/// * T4 — left identity ⇒ `H∘H = H`.
/// * T5 — pure left identity `e` ⇒ `H∘H = H` and `H = e∘H = H∘e`.
/// * T6 — pure right identity ⇒ pure left identity, commutative, associative.
/// * T7 — associativity ⇔ `a∘(b∘c) = (c∘b)∘a`.
/// * T8 — pure left identity ∧ left-or-right invertible ⇒ intra-regular.
/// * T9 — left identity ∧ (`H∘a=H` ∀a ∨ `a∘H=H` ∀a) ⇒ intra-regular; plus
///   the corollary (`a∘H=H` ∀a) ⇒ (`H∘a=H` ∀a).
/// * T10 — intra-regular ∧ pure left identity ⇒ `(B∘H)∘B = B∩H` for every
///   generalized bi-hyperideal `B`.
/// * T11 — intra-regular ∧ pure left identity ⇒ `(H∘B)∘H = H∩B` for every
///   interior hyperideal `B`.
/// * T12 — pure left identity ∧ (`L∪R = L∘R` for all left `L`, semiprime
///   right `R`) ⇒ intra-regular.
/// * T13 — intra-regular ⇒ `H = H²`.
/// * T14 — pure-left-invertible ∧ pure left identity: intra-regular ⇔
///   `R∩L = R∘L` for all right `R`, left `L`.
/// * T15 — intra-regular ∧ left identity ⇒ every two-sided hyperideal is
///   idempotent.
/// * T16 — left identity: intra-regular ⇔ `A = (H∘A)²` for every left `A`.
/// * T17 — intra-regular ∧ pure left identity: bi(-generalized bi-) ⇔
///   `(A∘H)∘A = A ∧ A² = A`.
/// * T18 — same: quasi ⇔ `H∘Q ∩ Q∘H = Q`.
/// * T19 — same: interior ⇔ `(H∘A)∘H = A`.
/// * T20 — same: (1,2) ⇔ `(A∘H)∘A² = A ∧ A² = A`.
/// * T21 — same: left ⇔ right, over every non-empty subset.
/// * T22 — same: (1,2) ⇔ two-sided.
/// * T23 — same: two-sided ⇔ quasi.
/// * T24 — same: a two-sided hyperideal is minimal ⇔ it is the intersection
///   of two minimal two-sided hyperideals.
/// * T25a — pure left identity ⇒ every right hyperideal is a bi-hyperideal.
/// * T25b — pure left identity ⇒ `I²` is two-sided for every left `I`.
/// * T25c — pairwise intersections of (generalized) bi-hyperideals are empty
///   or of the same kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[allow(clippy::upper_case_acronyms)]
pub enum TheoremId {
    T1,
    T2,
    T3,
    T4,
    T5,
    T6,
    T7,
    T8,
    T9,
    T10,
    T11,
    T12,
    T13,
    T14,
    T15,
    T16,
    T17,
    T18,
    T19,
    T20,
    T21,
    T22,
    T23,
    T24,
    T25a,
    T25b,
    T25c,
}

impl TheoremId {
    pub const ALL: [TheoremId; 27] = [
        TheoremId::T1,
        TheoremId::T2,
        TheoremId::T3,
        TheoremId::T4,
        TheoremId::T5,
        TheoremId::T6,
        TheoremId::T7,
        TheoremId::T8,
        TheoremId::T9,
        TheoremId::T10,
        TheoremId::T11,
        TheoremId::T12,
        TheoremId::T13,
        TheoremId::T14,
        TheoremId::T15,
        TheoremId::T16,
        TheoremId::T17,
        TheoremId::T18,
        TheoremId::T19,
        TheoremId::T20,
        TheoremId::T21,
        TheoremId::T22,
        TheoremId::T23,
        TheoremId::T24,
        TheoremId::T25a,
        TheoremId::T25b,
        TheoremId::T25c,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::T1 => "T1",
            TheoremId::T2 => "T2",
            TheoremId::T3 => "T3",
            TheoremId::T4 => "T4",
            TheoremId::T5 => "T5",
            TheoremId::T6 => "T6",
            TheoremId::T7 => "T7",
            TheoremId::T8 => "T8",
            TheoremId::T9 => "T9",
            TheoremId::T10 => "T10",
            TheoremId::T11 => "T11",
            TheoremId::T12 => "T12",
            TheoremId::T13 => "T13",
            TheoremId::T14 => "T14",
            TheoremId::T15 => "T15",
            TheoremId::T16 => "T16",
            TheoremId::T17 => "T17",
            TheoremId::T18 => "T18",
            TheoremId::T19 => "T19",
            TheoremId::T20 => "T20",
            TheoremId::T21 => "T21",
            TheoremId::T22 => "T22",
            TheoremId::T23 => "T23",
            TheoremId::T24 => "T24",
            TheoremId::T25a => "T25a",
            TheoremId::T25b => "T25b",
            TheoremId::T25c => "T25c",
        }
    }

    pub fn parse(s: &str) -> Option<TheoremId> {
        TheoremId::ALL.iter().copied().find(|id| id.name() == s)
    }

    pub fn index(self) -> usize {
        TheoremId::ALL
            .iter()
            .position(|&id| id == self)
            .expect("listed")
    }
}

/// Reading toggles for the two deliberately ambiguous hypotheses.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct TheoremOptions {
    /// T9: read the premise as the per-element disjunction
    /// `∀a: (H∘a=H ∨ a∘H=H)` instead of the default
    /// `(∀a: H∘a=H) ∨ (∀a: a∘H=H)`.
    pub strict_t9: bool,
    /// T14: read `e = a′∘a` as membership `e ∈ a′∘a` instead of the default
    /// set equality `a′∘a = {e}`.
    pub membership_t14: bool,
}

/// Which direction of a biconditional conclusion failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Backward,
}

impl Direction {
    pub fn name(self) -> &'static str {
        match self {
            Direction::Forward => "forward",
            Direction::Backward => "backward",
        }
    }
}

/// Everything needed to replay a failed conclusion from scratch.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub table: HyperTable,
    pub direction: Option<Direction>,
    /// Subsets violating (or, for converse checks, witnessing) the equation.
    pub subsets: Vec<SubsetMask>,
    pub elements: Vec<usize>,
    pub lhs: Option<SubsetMask>,
    pub rhs: Option<SubsetMask>,
    pub equation: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TheoremOutcome {
    Holds,
    Vacuous { reason: String },
    Counterexample(Box<Certificate>),
}

impl TheoremOutcome {
    pub fn is_counterexample(&self) -> bool {
        matches!(self, TheoremOutcome::Counterexample(_))
    }

    pub fn is_vacuous(&self) -> bool {
        matches!(self, TheoremOutcome::Vacuous { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremVerdict {
    pub id: TheoremId,
    pub outcome: TheoremOutcome,
    /// Side observations that do not affect the outcome (e.g. whether T24's
    /// principal construction realizes the minimal intersection).
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TheoremError {
    #[error("table is not an LA-semihypergroup; left invertive law fails at {0}")]
    NotLaShg(WitnessTuple),
    #[error("{} has no converse check; only T10 and T11 are supported", .0.name())]
    UnsupportedConverse(TheoremId),
    #[error(transparent)]
    Ideal(#[from] IdealError),
}

/// Shared per-table state so running all theorems classifies the table once.
struct Ctx<'a> {
    t: &'a HyperTable,
    h: SubsetMask,
    profile: IdentityProfile,
    intra: IntraRegularityReport,
    ideals: RefCell<BTreeMap<&'static str, Vec<SubsetMask>>>,
}

impl<'a> Ctx<'a> {
    fn new(t: &'a HyperTable) -> Result<Ctx<'a>, TheoremError> {
        let la = is_la_semihypergroup(t);
        if !la.holds {
            return Err(TheoremError::NotLaShg(
                la.witness.expect("failing law has witness"),
            ));
        }
        Ok(Ctx {
            t,
            h: t.carrier(),
            profile: classify_identities(t),
            intra: intra_regular(t),
            ideals: RefCell::new(BTreeMap::new()),
        })
    }

    fn comp(&self, a: SubsetMask, b: SubsetMask) -> SubsetMask {
        self.t.compose_sets(a, b)
    }

    fn ideals_of(&self, kind: IdealKind) -> Result<Vec<SubsetMask>, TheoremError> {
        if let Some(v) = self.ideals.borrow().get(kind.name()) {
            return Ok(v.clone());
        }
        let v = enumerate_ideals(self.t, kind)?;
        self.ideals.borrow_mut().insert(kind.name(), v.clone());
        Ok(v)
    }

    fn holds(&self, kind: IdealKind, a: SubsetMask) -> Result<bool, TheoremError> {
        Ok(is_ideal(self.t, kind, a)?.holds)
    }

    fn nonempty_subsets(&self) -> impl Iterator<Item = SubsetMask> {
        (1..=self.h.0).map(SubsetMask)
    }

    fn mask_str(&self, m: SubsetMask) -> String {
        self.t.format_mask(m)
    }

    fn verdict(&self, id: TheoremId, outcome: TheoremOutcome) -> TheoremVerdict {
        TheoremVerdict {
            id,
            outcome,
            notes: Vec::new(),
        }
    }

    fn vacuous(&self, id: TheoremId, reason: &str) -> TheoremVerdict {
        self.verdict(
            id,
            TheoremOutcome::Vacuous {
                reason: reason.to_string(),
            },
        )
    }

    fn holds_verdict(&self, id: TheoremId) -> TheoremVerdict {
        self.verdict(id, TheoremOutcome::Holds)
    }

    fn counterexample(&self, id: TheoremId, cert: Certificate) -> TheoremVerdict {
        self.verdict(id, TheoremOutcome::Counterexample(Box::new(cert)))
    }

    fn cert(&self, equation: &str) -> Certificate {
        Certificate {
            table: self.t.clone(),
            direction: None,
            subsets: Vec::new(),
            elements: Vec::new(),
            lhs: None,
            rhs: None,
            equation: equation.to_string(),
        }
    }

    /// Conclusion "law holds"; the law witness becomes the certificate.
    fn law_conclusion(&self, id: TheoremId, law: LawId) -> TheoremVerdict {
        let v = check_law(self.t, law);
        if v.holds {
            return self.holds_verdict(id);
        }
        let w = v.witness.expect("failing law has witness");
        let mut cert = self.cert(&format!("{} law", law.name()));
        cert.elements = w.elements;
        cert.lhs = Some(w.lhs);
        cert.rhs = Some(w.rhs);
        self.counterexample(id, cert)
    }

    /// Conclusion "the whole structure is intra-regular".
    fn intra_conclusion(&self, id: TheoremId) -> TheoremVerdict {
        if self.intra.overall {
            return self.holds_verdict(id);
        }
        let mut cert = self.cert("intra-regular: a ∈ (x∘a²)∘y for every a");
        cert.elements = vec![self.intra.first_failing.expect("failing element")];
        self.counterexample(id, cert)
    }

    fn pure_left_requirement(&self, id: TheoremId) -> Result<usize, TheoremVerdict> {
        self.profile
            .pure_left_identity()
            .ok_or_else(|| self.vacuous(id, "no pure left identity"))
    }

    fn intra_requirement(&self, id: TheoremId) -> Result<(), TheoremVerdict> {
        if self.intra.overall {
            Ok(())
        } else {
            Err(self.vacuous(id, "not intra-regular"))
        }
    }

    fn left_identity_requirement(&self, id: TheoremId) -> Result<usize, TheoremVerdict> {
        self.profile
            .first_left_identity()
            .ok_or_else(|| self.vacuous(id, "no left identity"))
    }
}

macro_rules! require {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(verdict) => return verdict,
        }
    };
}

fn t1(ctx: &Ctx) -> TheoremVerdict {
    ctx.law_conclusion(TheoremId::T1, LawId::Medial)
}

fn t2(ctx: &Ctx) -> TheoremVerdict {
    require!(ctx.pure_left_requirement(TheoremId::T2));
    ctx.law_conclusion(TheoremId::T2, LawId::LeftExchange)
}

fn t3(ctx: &Ctx) -> TheoremVerdict {
    require!(ctx.pure_left_requirement(TheoremId::T3));
    ctx.law_conclusion(TheoremId::T3, LawId::Paramedial)
}

fn t4(ctx: &Ctx) -> TheoremVerdict {
    require!(ctx.left_identity_requirement(TheoremId::T4));
    let hh = ctx.comp(ctx.h, ctx.h);
    if hh == ctx.h {
        return ctx.holds_verdict(TheoremId::T4);
    }
    let mut cert = ctx.cert("H∘H = H");
    cert.lhs = Some(hh);
    cert.rhs = Some(ctx.h);
    ctx.counterexample(TheoremId::T4, cert)
}

fn t5(ctx: &Ctx) -> TheoremVerdict {
    let e = require!(ctx.pure_left_requirement(TheoremId::T5));
    let se = SubsetMask::singleton(e);
    let checks = [
        (ctx.comp(ctx.h, ctx.h), "H∘H = H"),
        (ctx.comp(se, ctx.h), "e∘H = H"),
        (ctx.comp(ctx.h, se), "H∘e = H"),
    ];
    for (lhs, equation) in checks {
        if lhs != ctx.h {
            let mut cert = ctx.cert(equation);
            cert.elements = vec![e];
            cert.lhs = Some(lhs);
            cert.rhs = Some(ctx.h);
            return ctx.counterexample(TheoremId::T5, cert);
        }
    }
    ctx.holds_verdict(TheoremId::T5)
}

fn t6(ctx: &Ctx) -> TheoremVerdict {
    let pure_rights: Vec<usize> = (0..ctx.t.order())
        .filter(|&e| ctx.profile.element(e).pure_right_identity)
        .collect();
    if pure_rights.is_empty() {
        return ctx.vacuous(TheoremId::T6, "no pure right identity");
    }
    for &e in &pure_rights {
        if !ctx.profile.element(e).pure_left_identity {
            let mut cert = ctx.cert("pure right identity is a pure left identity");
            cert.elements = vec![e];
            return ctx.counterexample(TheoremId::T6, cert);
        }
    }
    for law in [LawId::Commutative, LawId::Associative] {
        let v = ctx.law_conclusion(TheoremId::T6, law);
        if v.outcome.is_counterexample() {
            return v;
        }
    }
    ctx.holds_verdict(TheoremId::T6)
}

fn t7(ctx: &Ctx) -> TheoremVerdict {
    let assoc = check_law(ctx.t, LawId::Associative);
    let crit = check_law(ctx.t, LawId::SemihypergroupCriterion);
    match (assoc.holds, crit.holds) {
        (true, false) => {
            let w = crit.witness.expect("failing law has witness");
            let mut cert = ctx.cert("associative ⇒ a∘(b∘c) = (c∘b)∘a");
            cert.direction = Some(Direction::Forward);
            cert.elements = w.elements;
            cert.lhs = Some(w.lhs);
            cert.rhs = Some(w.rhs);
            ctx.counterexample(TheoremId::T7, cert)
        }
        (false, true) => {
            let w = assoc.witness.expect("failing law has witness");
            let mut cert = ctx.cert("a∘(b∘c) = (c∘b)∘a ⇒ associative");
            cert.direction = Some(Direction::Backward);
            cert.elements = w.elements;
            cert.lhs = Some(w.lhs);
            cert.rhs = Some(w.rhs);
            ctx.counterexample(TheoremId::T7, cert)
        }
        _ => ctx.holds_verdict(TheoremId::T7),
    }
}

fn t8(ctx: &Ctx) -> TheoremVerdict {
    let e = require!(ctx.pure_left_requirement(TheoremId::T8));
    let inv = invertibility(ctx.t, e).expect("pure left identity is a left identity");
    if !inv.left_invertible && !inv.right_invertible {
        return ctx.vacuous(TheoremId::T8, "neither left nor right invertible");
    }
    ctx.intra_conclusion(TheoremId::T8)
}

fn t9(ctx: &Ctx, opts: TheoremOptions) -> TheoremVerdict {
    let n = ctx.t.order();
    let ha = |a: usize| ctx.comp(ctx.h, SubsetMask::singleton(a));
    let ah = |a: usize| ctx.comp(SubsetMask::singleton(a), ctx.h);
    let all_ha = (0..n).all(|a| ha(a) == ctx.h);
    let all_ah = (0..n).all(|a| ah(a) == ctx.h);
    let has_left_id = ctx.profile.first_left_identity().is_some();
    let product_premise = if opts.strict_t9 {
        (0..n).all(|a| ha(a) == ctx.h || ah(a) == ctx.h)
    } else {
        all_ha || all_ah
    };
    let main_hyp = has_left_id && product_premise;
    // the corollary needs no identity at all
    let corollary_hyp = all_ah;

    if !main_hyp && !corollary_hyp {
        let reason = if !has_left_id {
            "no left identity".to_string()
        } else if opts.strict_t9 {
            "some a has neither H∘a=H nor a∘H=H".to_string()
        } else {
            "neither H∘a=H for all a nor a∘H=H for all a".to_string()
        };
        return ctx.vacuous(TheoremId::T9, &reason);
    }
    if main_hyp {
        let v = ctx.intra_conclusion(TheoremId::T9);
        if v.outcome.is_counterexample() {
            return v;
        }
    }
    if corollary_hyp {
        for a in 0..n {
            let got = ha(a);
            if got != ctx.h {
                let mut cert = ctx.cert("a∘H=H for all a ⇒ H∘a=H for all a");
                cert.elements = vec![a];
                cert.lhs = Some(got);
                cert.rhs = Some(ctx.h);
                return ctx.counterexample(TheoremId::T9, cert);
            }
        }
    }
    ctx.holds_verdict(TheoremId::T9)
}

fn t10(ctx: &Ctx) -> Result<TheoremVerdict, TheoremError> {
    if let Some(v) = intra_and_pure(ctx, TheoremId::T10) {
        return Ok(v);
    }
    for b in ctx.ideals_of(IdealKind::GeneralizedBi)? {
        let lhs = ctx.comp(ctx.comp(b, ctx.h), b);
        let rhs = b.intersect(ctx.h);
        if lhs != rhs {
            let mut cert = ctx.cert("(B∘H)∘B = B∩H");
            cert.subsets = vec![b];
            cert.lhs = Some(lhs);
            cert.rhs = Some(rhs);
            return Ok(ctx.counterexample(TheoremId::T10, cert));
        }
    }
    Ok(ctx.holds_verdict(TheoremId::T10))
}

fn t11(ctx: &Ctx) -> Result<TheoremVerdict, TheoremError> {
    if let Some(v) = intra_and_pure(ctx, TheoremId::T11) {
        return Ok(v);
    }
    for b in ctx.ideals_of(IdealKind::Interior)? {
        let lhs = ctx.comp(ctx.comp(ctx.h, b), ctx.h);
        let rhs = ctx.h.intersect(b);
        if lhs != rhs {
            let mut cert = ctx.cert("(H∘B)∘H = H∩B");
            cert.subsets = vec![b];
            cert.lhs = Some(lhs);
            cert.rhs = Some(rhs);
            return Ok(ctx.counterexample(TheoremId::T11, cert));
        }
    }
    Ok(ctx.holds_verdict(TheoremId::T11))
}

fn t12(ctx: &Ctx) -> Result<TheoremVerdict, TheoremError> {
    if let Err(v) = ctx.pure_left_requirement(TheoremId::T12) {
        return Ok(v);
    }
    let lefts = ctx.ideals_of(IdealKind::Left)?;
    let rights = ctx.ideals_of(IdealKind::Right)?;
    for &l in &lefts {
        for &r in &rights {
            if !ctx.holds(IdealKind::Semiprime, r)? {
                continue;
            }
            if l.union(r) != ctx.comp(l, r) {
                return Ok(ctx.vacuous(
                    TheoremId::T12,
                    &format!(
                        "premise L∪R = L∘R fails at L={}, R={}",
                        ctx.mask_str(l),
                        ctx.mask_str(r)
                    ),
                ));
            }
        }
    }
    Ok(ctx.intra_conclusion(TheoremId::T12))
}

fn t13(ctx: &Ctx) -> TheoremVerdict {
    require!(ctx.intra_requirement(TheoremId::T13));
    let hh = ctx.comp(ctx.h, ctx.h);
    if hh == ctx.h {
        return ctx.holds_verdict(TheoremId::T13);
    }
    let mut cert = ctx.cert("H = H²");
    cert.lhs = Some(ctx.h);
    cert.rhs = Some(hh);
    ctx.counterexample(TheoremId::T13, cert)
}

fn t14(ctx: &Ctx, opts: TheoremOptions) -> Result<TheoremVerdict, TheoremError> {
    let e = match ctx.pure_left_requirement(TheoremId::T14) {
        Ok(e) => e,
        Err(v) => return Ok(v),
    };
    let inv = invertibility(ctx.t, e).expect("pure left identity is a left identity");
    let invertible = if opts.membership_t14 {
        inv.left_invertible
    } else {
        inv.pure_left_invertible
    };
    if !invertible {
        let reason = if opts.membership_t14 {
            "not left invertible"
        } else {
            "not left invertible with pure inverses a′∘a = {e}"
        };
        return Ok(ctx.vacuous(TheoremId::T14, reason));
    }
    // (i) intra-regular  ⇔  (ii) R∩L = R∘L for all right R, left L
    let mut bad_pair = None;
    'outer: for &r in &ctx.ideals_of(IdealKind::Right)? {
        for &l in &ctx.ideals_of(IdealKind::Left)? {
            if r.intersect(l) != ctx.comp(r, l) {
                bad_pair = Some((r, l));
                break 'outer;
            }
        }
    }
    match (ctx.intra.overall, bad_pair) {
        (true, Some((r, l))) => {
            let mut cert = ctx.cert("intra-regular ⇒ R∩L = R∘L");
            cert.direction = Some(Direction::Forward);
            cert.subsets = vec![r, l];
            cert.lhs = Some(r.intersect(l));
            cert.rhs = Some(ctx.comp(r, l));
            Ok(ctx.counterexample(TheoremId::T14, cert))
        }
        (false, None) => {
            let mut cert = ctx.cert("R∩L = R∘L for all R, L ⇒ intra-regular");
            cert.direction = Some(Direction::Backward);
            cert.elements = vec![ctx.intra.first_failing.expect("failing element")];
            Ok(ctx.counterexample(TheoremId::T14, cert))
        }
        _ => Ok(ctx.holds_verdict(TheoremId::T14)),
    }
}

fn t15(ctx: &Ctx) -> Result<TheoremVerdict, TheoremError> {
    if let Err(v) = ctx.intra_requirement(TheoremId::T15) {
        return Ok(v);
    }
    if let Err(v) = ctx.left_identity_requirement(TheoremId::T15) {
        return Ok(v);
    }
    for i in ctx.ideals_of(IdealKind::TwoSided)? {
        let sq = ctx.comp(i, i);
        if sq != i {
            let mut cert = ctx.cert("I∘I = I for every two-sided hyperideal I");
            cert.subsets = vec![i];
            cert.lhs = Some(sq);
            cert.rhs = Some(i);
            return Ok(ctx.counterexample(TheoremId::T15, cert));
        }
    }
    Ok(ctx.holds_verdict(TheoremId::T15))
}

fn t16(ctx: &Ctx) -> Result<TheoremVerdict, TheoremError> {
    if let Err(v) = ctx.left_identity_requirement(TheoremId::T16) {
        return Ok(v);
    }
    let mut bad = None;
    for &a in &ctx.ideals_of(IdealKind::Left)? {
        let hasq = {
            let ha = ctx.comp(ctx.h, a);
            ctx.comp(ha, ha)
        };
        if hasq != a {
            bad = Some((a, hasq));
            break;
        }
    }
    match (ctx.intra.overall, bad) {
        (true, Some((a, hasq))) => {
            let mut cert = ctx.cert("intra-regular ⇒ A = (H∘A)²");
            cert.direction = Some(Direction::Forward);
            cert.subsets = vec![a];
            cert.lhs = Some(a);
            cert.rhs = Some(hasq);
            Ok(ctx.counterexample(TheoremId::T16, cert))
        }
        (false, None) => {
            let mut cert = ctx.cert("A = (H∘A)² for all left A ⇒ intra-regular");
            cert.direction = Some(Direction::Backward);
            cert.elements = vec![ctx.intra.first_failing.expect("failing element")];
            Ok(ctx.counterexample(TheoremId::T16, cert))
        }
        _ => Ok(ctx.holds_verdict(TheoremId::T16)),
    }
}

/// Shared shape of T17–T23: over every non-empty subset `A`, an ideal-kind
/// membership must coincide with an equational description.
fn subsetwise_biconditional(
    ctx: &Ctx,
    id: TheoremId,
    equation: &str,
    ideal_side: impl Fn(SubsetMask) -> Result<bool, TheoremError>,
    equation_side: impl Fn(SubsetMask) -> (bool, Option<(SubsetMask, SubsetMask)>),
) -> Result<TheoremVerdict, TheoremError> {
    for a in ctx.nonempty_subsets() {
        let is_ideal = ideal_side(a)?;
        let (eq_holds, sides) = equation_side(a);
        if is_ideal == eq_holds {
            continue;
        }
        let mut cert = ctx.cert(equation);
        cert.subsets = vec![a];
        cert.direction = Some(if is_ideal {
            Direction::Forward
        } else {
            Direction::Backward
        });
        if let Some((lhs, rhs)) = sides {
            cert.lhs = Some(lhs);
            cert.rhs = Some(rhs);
        }
        return Ok(ctx.counterexample(id, cert));
    }
    Ok(ctx.holds_verdict(id))
}

fn intra_and_pure(ctx: &Ctx, id: TheoremId) -> Option<TheoremVerdict> {
    if let Err(v) = ctx.intra_requirement(id) {
        return Some(v);
    }
    if let Err(v) = ctx.pure_left_requirement(id) {
        return Some(v);
    }
    None
}

fn t17(ctx: &Ctx) -> Result<TheoremVerdict, TheoremError> {
    if let Some(v) = intra_and_pure(ctx, TheoremId::T17) {
        return Ok(v);
    }
    // both the bi and the generalized-bi readings must match the equations
    for kind in [IdealKind::Bi, IdealKind::GeneralizedBi] {
        let v = subsetwise_biconditional(
            ctx,
            TheoremId::T17,
            &format!("{} ⇔ (A∘H)∘A = A ∧ A² = A", kind.name()),
            |a| ctx.holds(kind, a),
            |a| {
                let p = ctx.comp(ctx.comp(a, ctx.h), a);
                let sq = ctx.comp(a, a);
                if p != a {
                    (false, Some((p, a)))
                } else if sq != a {
                    (false, Some((sq, a)))
                } else {
                    (true, None)
                }
            },
        )?;
        if v.outcome.is_counterexample() {
            return Ok(v);
        }
    }
    Ok(ctx.holds_verdict(TheoremId::T17))
}

fn t18(ctx: &Ctx) -> Result<TheoremVerdict, TheoremError> {
    if let Some(v) = intra_and_pure(ctx, TheoremId::T18) {
        return Ok(v);
    }
    subsetwise_biconditional(
        ctx,
        TheoremId::T18,
        "quasi ⇔ H∘Q ∩ Q∘H = Q",
        |a| ctx.holds(IdealKind::Quasi, a),
        |a| {
            let p = ctx.comp(ctx.h, a).intersect(ctx.comp(a, ctx.h));
            (p == a, Some((p, a)))
        },
    )
}

fn t19(ctx: &Ctx) -> Result<TheoremVerdict, TheoremError> {
    if let Some(v) = intra_and_pure(ctx, TheoremId::T19) {
        return Ok(v);
    }
    subsetwise_biconditional(
        ctx,
        TheoremId::T19,
        "interior ⇔ (H∘A)∘H = A",
        |a| ctx.holds(IdealKind::Interior, a),
        |a| {
            let p = ctx.comp(ctx.comp(ctx.h, a), ctx.h);
            (p == a, Some((p, a)))
        },
    )
}

fn t20(ctx: &Ctx) -> Result<TheoremVerdict, TheoremError> {
    if let Some(v) = intra_and_pure(ctx, TheoremId::T20) {
        return Ok(v);
    }
    subsetwise_biconditional(
        ctx,
        TheoremId::T20,
        "(1,2) ⇔ (A∘H)∘A² = A ∧ A² = A",
        |a| ctx.holds(IdealKind::OneTwo, a),
        |a| {
            let sq = ctx.comp(a, a);
            let p = ctx.comp(ctx.comp(a, ctx.h), sq);
            if p != a {
                (false, Some((p, a)))
            } else if sq != a {
                (false, Some((sq, a)))
            } else {
                (true, None)
            }
        },
    )
}

fn t21(ctx: &Ctx) -> Result<TheoremVerdict, TheoremError> {
    if let Some(v) = intra_and_pure(ctx, TheoremId::T21) {
        return Ok(v);
    }
    for a in ctx.nonempty_subsets() {
        let left = ctx.holds(IdealKind::Left, a)?;
        let right = ctx.holds(IdealKind::Right, a)?;
        if left != right {
            let mut cert = ctx.cert("left hyperideal ⇔ right hyperideal");
            cert.subsets = vec![a];
            cert.direction = Some(if left {
                Direction::Forward
            } else {
                Direction::Backward
            });
            return Ok(ctx.counterexample(TheoremId::T21, cert));
        }
    }
    Ok(ctx.holds_verdict(TheoremId::T21))
}

fn t22(ctx: &Ctx) -> Result<TheoremVerdict, TheoremError> {
    if let Some(v) = intra_and_pure(ctx, TheoremId::T22) {
        return Ok(v);
    }
    subsetwise_biconditional(
        ctx,
        TheoremId::T22,
        "(1,2)-hyperideal ⇔ two-sided hyperideal",
        |a| ctx.holds(IdealKind::OneTwo, a),
        |a| {
            let two = is_ideal(ctx.t, IdealKind::TwoSided, a)
                .expect("subset is non-empty")
                .holds;
            (two, None)
        },
    )
}

fn t23(ctx: &Ctx) -> Result<TheoremVerdict, TheoremError> {
    if let Some(v) = intra_and_pure(ctx, TheoremId::T23) {
        return Ok(v);
    }
    subsetwise_biconditional(
        ctx,
        TheoremId::T23,
        "two-sided hyperideal ⇔ quasi hyperideal",
        |a| ctx.holds(IdealKind::TwoSided, a),
        |a| {
            let quasi = is_ideal(ctx.t, IdealKind::Quasi, a)
                .expect("subset is non-empty")
                .holds;
            (quasi, None)
        },
    )
}

fn t24(ctx: &Ctx) -> Result<TheoremVerdict, TheoremError> {
    if let Some(v) = intra_and_pure(ctx, TheoremId::T24) {
        return Ok(v);
    }
    let minimal = minimal_ideals(ctx.t, IdealKind::TwoSided)?;
    // forward: every minimal Q is an intersection of minimal two-sided pairs
    for &q in &minimal {
        let expressible = minimal
            .iter()
            .any(|&i| minimal.iter().any(|&j| i.intersect(j) == q));
        if !expressible {
            let mut cert = ctx.cert("minimal Q = I∩J for minimal two-sided I, J");
            cert.direction = Some(Direction::Forward);
            cert.subsets = vec![q];
            return Ok(ctx.counterexample(TheoremId::T24, cert));
        }
    }
    // backward: a non-empty intersection of minimal pairs is itself minimal
    for &i in &minimal {
        for &j in &minimal {
            let x = i.intersect(j);
            if x.is_empty() || minimal.contains(&x) {
                continue;
            }
            let mut cert = ctx.cert("I∩J minimal for minimal two-sided I, J");
            cert.direction = Some(Direction::Backward);
            cert.subsets = vec![i, j, x];
            return Ok(ctx.counterexample(TheoremId::T24, cert));
        }
    }
    let mut verdict = ctx.holds_verdict(TheoremId::T24);
    // record whether the principal construction H∘a ∩ a∘H realizes each
    // minimal Q, as the written proof suggests
    for &q in &minimal {
        let realized = q.iter().all(|a| {
            let sa = SubsetMask::singleton(a);
            let ha = ctx.comp(ctx.h, sa);
            let ah = ctx.comp(sa, ctx.h);
            minimal.contains(&ha) && minimal.contains(&ah) && ha.intersect(ah) == q
        });
        verdict.notes.push(format!(
            "principal construction H∘a∩a∘H = Q with both sets minimal, for all a in Q={}: {}",
            ctx.mask_str(q),
            realized
        ));
    }
    Ok(verdict)
}

fn t25a(ctx: &Ctx) -> Result<TheoremVerdict, TheoremError> {
    if let Err(v) = ctx.pure_left_requirement(TheoremId::T25a) {
        return Ok(v);
    }
    for r in ctx.ideals_of(IdealKind::Right)? {
        let v = is_ideal(ctx.t, IdealKind::Bi, r)?;
        if !v.holds {
            let w = v.witness.expect("failing ideal check has witness");
            let mut cert = ctx.cert("every right hyperideal is a bi-hyperideal");
            cert.subsets = vec![r];
            cert.lhs = Some(w.lhs);
            cert.rhs = Some(w.rhs);
            return Ok(ctx.counterexample(TheoremId::T25a, cert));
        }
    }
    Ok(ctx.holds_verdict(TheoremId::T25a))
}

fn t25b(ctx: &Ctx) -> Result<TheoremVerdict, TheoremError> {
    if let Err(v) = ctx.pure_left_requirement(TheoremId::T25b) {
        return Ok(v);
    }
    for i in ctx.ideals_of(IdealKind::Left)? {
        let sq = ctx.comp(i, i);
        let v = is_ideal(ctx.t, IdealKind::TwoSided, sq)?;
        if !v.holds {
            let w = v.witness.expect("failing ideal check has witness");
            let mut cert = ctx.cert("I² is a two-sided hyperideal for every left I");
            cert.subsets = vec![i, sq];
            cert.lhs = Some(w.lhs);
            cert.rhs = Some(w.rhs);
            return Ok(ctx.counterexample(TheoremId::T25b, cert));
        }
    }
    Ok(ctx.holds_verdict(TheoremId::T25b))
}

fn t25c(ctx: &Ctx) -> Result<TheoremVerdict, TheoremError> {
    for kind in [IdealKind::Bi, IdealKind::GeneralizedBi] {
        let family = ctx.ideals_of(kind)?;
        for (pos, &b1) in family.iter().enumerate() {
            for &b2 in &family[pos..] {
                let x = b1.intersect(b2);
                if x.is_empty() || ctx.holds(kind, x)? {
                    continue;
                }
                let mut cert = ctx.cert(&format!(
                    "intersections of {} hyperideals are empty or {}",
                    kind.name(),
                    kind.name()
                ));
                cert.subsets = vec![b1, b2, x];
                return Ok(ctx.counterexample(TheoremId::T25c, cert));
            }
        }
    }
    Ok(ctx.holds_verdict(TheoremId::T25c))
}

fn dispatch(
    ctx: &Ctx,
    id: TheoremId,
    opts: TheoremOptions,
) -> Result<TheoremVerdict, TheoremError> {
    Ok(match id {
        TheoremId::T1 => t1(ctx),
        TheoremId::T2 => t2(ctx),
        TheoremId::T3 => t3(ctx),
        TheoremId::T4 => t4(ctx),
        TheoremId::T5 => t5(ctx),
        TheoremId::T6 => t6(ctx),
        TheoremId::T7 => t7(ctx),
        TheoremId::T8 => t8(ctx),
        TheoremId::T9 => t9(ctx, opts),
        TheoremId::T10 => t10(ctx)?,
        TheoremId::T11 => t11(ctx)?,
        TheoremId::T12 => t12(ctx)?,
        TheoremId::T13 => t13(ctx),
        TheoremId::T14 => t14(ctx, opts)?,
        TheoremId::T15 => t15(ctx)?,
        TheoremId::T16 => t16(ctx)?,
        TheoremId::T17 => t17(ctx)?,
        TheoremId::T18 => t18(ctx)?,
        TheoremId::T19 => t19(ctx)?,
        TheoremId::T20 => t20(ctx)?,
        TheoremId::T21 => t21(ctx)?,
        TheoremId::T22 => t22(ctx)?,
        TheoremId::T23 => t23(ctx)?,
        TheoremId::T24 => t24(ctx)?,
        TheoremId::T25a => t25a(ctx)?,
        TheoremId::T25b => t25b(ctx)?,
        TheoremId::T25c => t25c(ctx)?,
    })
}

/// Check one theorem on one table.
pub fn run_theorem(
    t: &HyperTable,
    id: TheoremId,
    opts: TheoremOptions,
) -> Result<TheoremVerdict, TheoremError> {
    let ctx = Ctx::new(t)?;
    dispatch(&ctx, id, opts)
}

/// Check every theorem, in fixed T1..T25c order, classifying the table once.
pub fn run_all(t: &HyperTable, opts: TheoremOptions) -> Result<Vec<TheoremVerdict>, TheoremError> {
    let ctx = Ctx::new(t)?;
    TheoremId::ALL
        .iter()
        .map(|&id| dispatch(&ctx, id, opts))
        .collect()
}

/// Converse check for T10/T11: does some hyperideal of the relevant kind
/// satisfy the equation while the structure fails the theorem's hypothesis?
///
/// `Counterexample` means this table witnesses the converse failure; the
/// certificate lists every satisfying subset.
pub fn check_converse(
    t: &HyperTable,
    id: TheoremId,
    _opts: TheoremOptions,
) -> Result<TheoremVerdict, TheoremError> {
    let ctx = Ctx::new(t)?;
    let (kind, equation) = match id {
        TheoremId::T10 => (
            IdealKind::GeneralizedBi,
            "(B∘H)∘B = B∩H yet not (intra-regular with pure left identity)",
        ),
        TheoremId::T11 => (
            IdealKind::Interior,
            "(H∘B)∘H = H∩B yet not (intra-regular with pure left identity)",
        ),
        other => return Err(TheoremError::UnsupportedConverse(other)),
    };
    let sides = |b: SubsetMask| match id {
        TheoremId::T10 => (ctx.comp(ctx.comp(b, ctx.h), b), b.intersect(ctx.h)),
        _ => (ctx.comp(ctx.comp(ctx.h, b), ctx.h), ctx.h.intersect(b)),
    };
    let witnesses: Vec<SubsetMask> = ctx
        .ideals_of(kind)?
        .into_iter()
        .filter(|&b| {
            let (lhs, rhs) = sides(b);
            lhs == rhs
        })
        .collect();
    if witnesses.is_empty() {
        return Ok(ctx.vacuous(
            id,
            &format!("no {} hyperideal satisfies the equation", kind.name()),
        ));
    }
    if ctx.intra.overall && ctx.profile.pure_left_identity().is_some() {
        return Ok(ctx.holds_verdict(id));
    }
    let mut cert = ctx.cert(equation);
    cert.subsets = witnesses;
    if let Some(a) = ctx.intra.first_failing {
        cert.elements = vec![a];
    }
    Ok(ctx.counterexample(id, cert))
}

/// Per-theorem outcome counters for sweeps, with vacuity accounting.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SweepTally {
    counts: [[u64; 3]; TheoremId::ALL.len()],
}

impl SweepTally {
    pub fn new() -> SweepTally {
        SweepTally::default()
    }

    pub fn record(&mut self, verdict: &TheoremVerdict) {
        let slot = &mut self.counts[verdict.id.index()];
        match verdict.outcome {
            TheoremOutcome::Holds => slot[0] += 1,
            TheoremOutcome::Vacuous { .. } => slot[1] += 1,
            TheoremOutcome::Counterexample(_) => slot[2] += 1,
        }
    }

    pub fn record_all(&mut self, verdicts: &[TheoremVerdict]) {
        for v in verdicts {
            self.record(v);
        }
    }

    pub fn merge(&mut self, other: &SweepTally) {
        for (mine, theirs) in self.counts.iter_mut().zip(other.counts.iter()) {
            for k in 0..3 {
                mine[k] += theirs[k];
            }
        }
    }

    pub fn holds(&self, id: TheoremId) -> u64 {
        self.counts[id.index()][0]
    }

    pub fn vacuous(&self, id: TheoremId) -> u64 {
        self.counts[id.index()][1]
    }

    pub fn counterexamples(&self, id: TheoremId) -> u64 {
        self.counts[id.index()][2]
    }

    pub fn non_vacuous(&self, id: TheoremId) -> u64 {
        self.holds(id) + self.counterexamples(id)
    }

    pub fn total_counterexamples(&self) -> u64 {
        TheoremId::ALL
            .iter()
            .map(|&id| self.counterexamples(id))
            .sum()
    }

    /// Theorems whose hypothesis was never satisfied in the sweep; a
    /// non-empty result means the sweep proved nothing about them.
    pub fn never_non_vacuous(&self) -> Vec<TheoremId> {
        TheoremId::ALL
            .iter()
            .copied()
            .filter(|&id| self.non_vacuous(id) == 0)
            .collect()
    }

    /// One report line per theorem.
    pub fn lines(&self) -> Vec<String> {
        TheoremId::ALL
            .iter()
            .map(|&id| {
                format!(
                    "{}: holds={} vacuous={} counterexamples={}",
                    id.name(),
                    self.holds(id),
                    self.vacuous(id),
                    self.counterexamples(id)
                )
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn run(t: &HyperTable, id: TheoremId) -> TheoremVerdict {
        run_theorem(t, id, TheoremOptions::default()).unwrap()
    }

    #[test]
    fn repaired_p4_satisfies_t10() {
        let t = fixtures::p4_repaired();
        assert_eq!(run(&t, TheoremId::T10).outcome, TheoremOutcome::Holds);
    }

    #[test]
    fn printed_p4_is_rejected_as_not_la_shg() {
        let err =
            run_theorem(&fixtures::p4(), TheoremId::T10, TheoremOptions::default()).unwrap_err();
        assert!(matches!(err, TheoremError::NotLaShg(_)));
    }

    #[test]
    fn i4_t10_is_vacuous_without_pure_left_identity() {
        match run(&fixtures::i4(), TheoremId::T10).outcome {
            TheoremOutcome::Vacuous { reason } => assert_eq!(reason, "no pure left identity"),
            other => panic!("expected vacuous, got {other:?}"),
        }
    }

    #[test]
    fn k4_t10_is_vacuous_because_not_intra_regular() {
        match run(&fixtures::k4(), TheoremId::T10).outcome {
            TheoremOutcome::Vacuous { reason } => assert_eq!(reason, "not intra-regular"),
            other => panic!("expected vacuous, got {other:?}"),
        }
    }

    #[test]
    fn i4_satisfies_t13() {
        assert_eq!(
            run(&fixtures::i4(), TheoremId::T13).outcome,
            TheoremOutcome::Holds
        );
    }

    #[test]
    fn trivial_table_has_no_counterexamples() {
        let verdicts = run_all(&fixtures::trivial(), TheoremOptions::default()).unwrap();
        assert_eq!(verdicts.len(), TheoremId::ALL.len());
        for v in verdicts {
            assert!(!v.outcome.is_counterexample(), "{:?}", v);
        }
    }

    #[test]
    fn a5_t11_is_vacuous_yet_its_converse_fails() {
        let a5 = fixtures::a5();
        match run(&a5, TheoremId::T11).outcome {
            TheoremOutcome::Vacuous { reason } => assert_eq!(reason, "not intra-regular"),
            other => panic!("expected vacuous, got {other:?}"),
        }
        let conv = check_converse(&a5, TheoremId::T11, TheoremOptions::default()).unwrap();
        match conv.outcome {
            TheoremOutcome::Counterexample(cert) => {
                // {z,w} is among the equation witnesses
                let zw = SubsetMask::from_elements([3, 4]);
                assert!(cert.subsets.contains(&zw), "{:?}", cert.subsets);
            }
            other => panic!("expected counterexample, got {other:?}"),
        }
    }

    #[test]
    fn k4_witnesses_the_t10_converse_failure() {
        let k4 = fixtures::k4();
        let conv = check_converse(&k4, TheoremId::T10, TheoremOptions::default()).unwrap();
        match conv.outcome {
            TheoremOutcome::Counterexample(cert) => {
                let zw = SubsetMask::from_elements([2, 3]);
                assert!(cert.subsets.contains(&zw), "{:?}", cert.subsets);
                // every listed subset re-verifies: generalized bi + equation
                for &b in &cert.subsets {
                    assert!(is_ideal(&k4, IdealKind::GeneralizedBi, b).unwrap().holds);
                    let h = k4.carrier();
                    let lhs = k4.compose(k4.compose(b, h).unwrap(), b).unwrap();
                    assert_eq!(lhs, b.intersect(h));
                }
            }
            other => panic!("expected counterexample, got {other:?}"),
        }
    }

    #[test]
    fn repaired_p4_t10_converse_holds() {
        let conv = check_converse(
            &fixtures::p4_repaired(),
            TheoremId::T10,
            TheoremOptions::default(),
        )
        .unwrap();
        assert_eq!(conv.outcome, TheoremOutcome::Holds);
    }

    #[test]
    fn converse_is_only_defined_for_t10_and_t11() {
        let err =
            check_converse(&fixtures::i4(), TheoremId::T13, TheoremOptions::default()).unwrap_err();
        assert_eq!(err, TheoremError::UnsupportedConverse(TheoremId::T13));
    }

    #[test]
    fn repaired_p4_satisfies_t2_and_t3() {
        let verdicts = run_all(&fixtures::p4_repaired(), TheoremOptions::default()).unwrap();
        assert_eq!(
            verdicts[TheoremId::T2.index()].outcome,
            TheoremOutcome::Holds
        );
        assert_eq!(
            verdicts[TheoremId::T3.index()].outcome,
            TheoremOutcome::Holds
        );
    }

    #[test]
    fn non_la_shg_is_rejected() {
        use crate::table::{HyperTable, SubsetMask};
        let a = SubsetMask::singleton(0);
        let b = SubsetMask::singleton(1);
        let t = HyperTable::with_default_labels(2, vec![a, a, b, a]).unwrap();
        let err = run_theorem(&t, TheoremId::T1, TheoremOptions::default()).unwrap_err();
        assert!(matches!(err, TheoremError::NotLaShg(_)));
    }

    #[test]
    fn fixtures_have_no_t1_to_t7_counterexamples() {
        let mut tally = SweepTally::new();
        for (id, t) in fixtures::all() {
            if id == "P4" {
                continue; // fails the LA-semihypergroup precondition
            }
            let verdicts = run_all(&t, TheoremOptions::default()).unwrap();
            tally.record_all(&verdicts);
        }
        for id in [
            TheoremId::T1,
            TheoremId::T2,
            TheoremId::T3,
            TheoremId::T4,
            TheoremId::T5,
            TheoremId::T6,
            TheoremId::T7,
        ] {
            assert_eq!(tally.counterexamples(id), 0, "{}", id.name());
        }
    }
}
