//! Enumeration of LA-semihypergroups of small order, isomorphism
//! canonicalization, and the two modular family generators.
//!
//! Exhaustive enumeration fills cells row by row over the alphabet of
//! non-empty masks, pruning a partial table as soon as some fully determined
//! triple violates the left invertive law. The search space is partitioned
//! by first-row prefix across workers; results are merged in prefix order,
//! so the emitted sequence is lexicographic by cell sequence and independent
//! of the worker count.

use std::collections::{BTreeMap, HashSet};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::mpsc;

use serde::Serialize;
use thiserror::Error;

use crate::laws::{check_law, classify_identities, LawId};
use crate::regularity::intra_regular;
use crate::table::{default_labels, HyperTable, SubsetMask, MAX_ORDER};
use crate::theorems::{check_converse, Certificate, TheoremId, TheoremOptions, TheoremOutcome};

/// Canonicalization scans all `n!` relabelings; keep that feasible.
pub const MAX_CANONICAL_ORDER: usize = 8;

/// Deterministic splitmix64 generator. Seeds reproduce byte-identically
/// across platforms and releases, which the reproducibility guarantees
/// lean on.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> SplitMix64 {
        SplitMix64 { state: seed }
    }

    /// Independent generator for the `index`-th item of a seeded stream.
    pub fn stream(seed: u64, index: u64) -> SplitMix64 {
        let mut mixer = SplitMix64::new(seed ^ index.wrapping_mul(0xA076_1D64_78BD_642F));
        let state = mixer.next_u64();
        SplitMix64 { state }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform-enough draw below `bound` (bounds here are tiny).
    pub fn below(&mut self, bound: u64) -> u64 {
        debug_assert!(bound > 0);
        self.next_u64() % bound
    }

    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.below(i as u64 + 1) as usize;
            items.swap(i, j);
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("infeasible query: {0}")]
    InfeasibleQuery(String),
    #[error("order {0} too large for canonicalization (max {MAX_CANONICAL_ORDER})")]
    OrderTooLargeForCanonical(usize),
    #[error("step {k} does not divide modulus {n}")]
    StepDoesNotDivideModulus { n: usize, k: usize },
    #[error("order {0} out of bounds (must satisfy 1 <= n <= {MAX_ORDER})")]
    OrderOutOfBounds(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnumerationMode {
    Exhaustive,
    Sample { count: u64, seed: u64 },
}

/// Filters driving the enumerator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationQuery {
    pub order: usize,
    /// Laws every emitted table must satisfy; defaults to the left invertive
    /// law, which also drives pruning in exhaustive mode.
    pub laws: Vec<LawId>,
    pub require_pure_left_identity: bool,
    pub require_left_identity: bool,
    /// `Some(true)` keeps intra-regular tables, `Some(false)` the others.
    pub intra_regular: Option<bool>,
    pub mode: EnumerationMode,
    /// Emit only tables that are their own canonical form.
    pub canonical_only: bool,
    pub jobs: usize,
}

impl EnumerationQuery {
    pub fn exhaustive(order: usize) -> EnumerationQuery {
        EnumerationQuery {
            order,
            laws: vec![LawId::LeftInvertive],
            require_pure_left_identity: false,
            require_left_identity: false,
            intra_regular: None,
            mode: EnumerationMode::Exhaustive,
            canonical_only: false,
            jobs: 1,
        }
    }

    pub fn sample(order: usize, count: u64, seed: u64) -> EnumerationQuery {
        EnumerationQuery {
            mode: EnumerationMode::Sample { count, seed },
            ..EnumerationQuery::exhaustive(order)
        }
    }

    fn validate(&self) -> Result<(), EnumError> {
        if self.order < 1 || self.order > MAX_ORDER {
            return Err(EnumError::OrderOutOfBounds(self.order));
        }
        if self.canonical_only && self.order > MAX_CANONICAL_ORDER {
            return Err(EnumError::InfeasibleQuery(format!(
                "canonical filtering needs order <= {MAX_CANONICAL_ORDER}, got {}",
                self.order
            )));
        }
        if let EnumerationMode::Exhaustive = self.mode {
            let prunable = self.laws.contains(&LawId::LeftInvertive);
            let feasible = self.order <= 3 || (self.order == 4 && prunable);
            if !feasible {
                return Err(EnumError::InfeasibleQuery(format!(
                    "exhaustive enumeration is limited to order <= 3, \
                     or order 4 with the left invertive law as pruning filter; \
                     got order {}",
                    self.order
                )));
            }
        }
        Ok(())
    }

    fn jobs(&self) -> usize {
        self.jobs.max(1)
    }
}

/// Counters describing one enumeration run. Identical across worker counts.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct EnumerationSummary {
    /// Cell placements attempted (exhaustive) or tables drawn (sample).
    pub nodes: u64,
    /// Completed tables passing every required law.
    pub law_ok: u64,
    /// Tables surviving all filters.
    pub emitted: u64,
}

impl EnumerationSummary {
    fn absorb(&mut self, other: EnumerationSummary) {
        self.nodes += other.nodes;
        self.law_ok += other.law_ok;
        self.emitted += other.emitted;
    }
}

fn alphabet(n: usize) -> u32 {
    SubsetMask::full(n).0
}

/// Both sides of the left invertive instance `(x∘y)∘z = (z∘y)∘x` over the
/// first `placed` cells, plus the largest cell index the evaluation touched.
/// `None` while some needed cell is still unplaced.
fn left_invertive_partial(
    cells: &[SubsetMask],
    n: usize,
    placed: usize,
    x: usize,
    y: usize,
    z: usize,
) -> Option<(SubsetMask, SubsetMask, usize)> {
    let ixy = x * n + y;
    if ixy >= placed {
        return None;
    }
    let mut max_dep = ixy;
    let mut lhs = SubsetMask::EMPTY;
    for u in cells[ixy].iter() {
        let j = u * n + z;
        if j >= placed {
            return None;
        }
        max_dep = max_dep.max(j);
        lhs = lhs.union(cells[j]);
    }
    let izy = z * n + y;
    if izy >= placed {
        return None;
    }
    max_dep = max_dep.max(izy);
    let mut rhs = SubsetMask::EMPTY;
    for v in cells[izy].iter() {
        let j = v * n + x;
        if j >= placed {
            return None;
        }
        max_dep = max_dep.max(j);
        rhs = rhs.union(cells[j]);
    }
    Some((lhs, rhs, max_dep))
}

/// Do all triples that became fully determined by the latest placement still
/// satisfy the law? Each triple is checked exactly once over a fill, at the
/// placement that completed its dependencies.
fn newly_determined_ok(cells: &[SubsetMask], n: usize, placed: usize) -> bool {
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if let Some((lhs, rhs, dep)) = left_invertive_partial(cells, n, placed, x, y, z) {
                    if dep == placed - 1 && lhs != rhs {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Replay the incremental acceptance path on a complete table: exactly the
/// predicate the pruned search applies along a full fill.
pub fn incremental_left_invertive_accepts(t: &HyperTable) -> bool {
    let n = t.order();
    let cells = t.cells();
    (1..=cells.len()).all(|placed| newly_determined_ok(cells, n, placed))
}

fn dfs(
    cells: &mut Vec<SubsetMask>,
    n: usize,
    k: usize,
    prune: bool,
    nodes: &mut u64,
    out: &mut impl FnMut(&[SubsetMask]),
) {
    if k == n * n {
        out(cells);
        return;
    }
    for bits in 1..=alphabet(n) {
        cells[k] = SubsetMask(bits);
        *nodes += 1;
        if !prune || newly_determined_ok(cells, n, k + 1) {
            dfs(cells, n, k + 1, prune, nodes, out);
        }
    }
}

/// All surviving first-row prefixes, in lexicographic order.
fn first_row_prefixes(n: usize, prune: bool, nodes: &mut u64) -> Vec<Vec<SubsetMask>> {
    let mut prefixes = Vec::new();
    let mut cells = vec![SubsetMask::EMPTY; n * n];
    fn go(
        cells: &mut Vec<SubsetMask>,
        n: usize,
        k: usize,
        prune: bool,
        nodes: &mut u64,
        prefixes: &mut Vec<Vec<SubsetMask>>,
    ) {
        if k == n {
            prefixes.push(cells[..n].to_vec());
            return;
        }
        for bits in 1..=alphabet(n) {
            cells[k] = SubsetMask(bits);
            *nodes += 1;
            if !prune || newly_determined_ok(cells, n, k + 1) {
                go(cells, n, k + 1, prune, nodes, prefixes);
            }
        }
    }
    go(&mut cells, n, 0, prune, nodes, &mut prefixes);
    prefixes
}

/// Law/flag filtering applied to a completed table.
struct Filters<'q> {
    q: &'q EnumerationQuery,
    /// Laws still to check at completion (pruned law excluded in exhaustive mode).
    residual_laws: Vec<LawId>,
}

impl<'q> Filters<'q> {
    fn new(q: &'q EnumerationQuery, pruned: bool) -> Filters<'q> {
        let residual_laws = q
            .laws
            .iter()
            .copied()
            .filter(|&l| !(pruned && l == LawId::LeftInvertive))
            .collect();
        Filters { q, residual_laws }
    }

    /// Returns `(passed_laws, emitted)`.
    fn apply(&self, t: &HyperTable) -> (bool, bool) {
        for &law in &self.residual_laws {
            if !check_law(t, law).holds {
                return (false, false);
            }
        }
        if self.q.require_pure_left_identity || self.q.require_left_identity {
            let profile = classify_identities(t);
            if self.q.require_pure_left_identity && profile.pure_left_identity().is_none() {
                return (true, false);
            }
            if self.q.require_left_identity && profile.first_left_identity().is_none() {
                return (true, false);
            }
        }
        if let Some(want) = self.q.intra_regular {
            if intra_regular(t).overall != want {
                return (true, false);
            }
        }
        if self.q.canonical_only {
            let canonical = is_canonical(t).expect("order bound checked by validate");
            if !canonical {
                return (true, false);
            }
        }
        (true, true)
    }
}

/// The shared engine: workers fold tables into per-chunk accumulators, the
/// caller consumes accumulators in deterministic chunk order.
fn run_enumeration<A, MakeA, Fold>(
    q: &EnumerationQuery,
    make: MakeA,
    fold: Fold,
    mut consume: impl FnMut(A),
) -> Result<EnumerationSummary, EnumError>
where
    A: Send,
    MakeA: Fn() -> A + Sync,
    Fold: Fn(&mut A, &HyperTable) + Sync,
{
    q.validate()?;
    let n = q.order;
    let labels = default_labels(n);
    let mut summary = EnumerationSummary::default();

    enum Chunk {
        Prefix(Vec<SubsetMask>),
        SampleRange { start: u64, end: u64, seed: u64 },
    }

    let (chunks, pruned) = match q.mode {
        EnumerationMode::Exhaustive => {
            let pruned = q.laws.contains(&LawId::LeftInvertive);
            let prefixes = first_row_prefixes(n, pruned, &mut summary.nodes);
            (
                prefixes.into_iter().map(Chunk::Prefix).collect::<Vec<_>>(),
                pruned,
            )
        }
        EnumerationMode::Sample { count, seed } => {
            const CHUNK: u64 = 1024;
            let mut chunks = Vec::new();
            let mut start = 0;
            while start < count {
                let end = (start + CHUNK).min(count);
                chunks.push(Chunk::SampleRange { start, end, seed });
                start = end;
            }
            (chunks, false)
        }
    };

    let filters = Filters::new(q, pruned);
    let run_chunk = |chunk: &Chunk| -> (A, EnumerationSummary) {
        let mut acc = make();
        let mut partial = EnumerationSummary::default();
        match chunk {
            Chunk::Prefix(prefix) => {
                let mut cells = vec![SubsetMask::EMPTY; n * n];
                cells[..n].copy_from_slice(prefix);
                dfs(&mut cells, n, n, pruned, &mut partial.nodes, &mut |cells| {
                    let t = HyperTable::from_parts_unchecked(n, cells.to_vec(), labels.clone());
                    let (law_ok, emit) = filters.apply(&t);
                    if law_ok {
                        partial.law_ok += 1;
                    }
                    if emit {
                        partial.emitted += 1;
                        fold(&mut acc, &t);
                    }
                });
            }
            Chunk::SampleRange { start, end, seed } => {
                for i in *start..*end {
                    let mut rng = SplitMix64::stream(*seed, i);
                    let t = random_table(n, &mut rng);
                    partial.nodes += 1;
                    let (law_ok, emit) = filters.apply(&t);
                    if law_ok {
                        partial.law_ok += 1;
                    }
                    if emit {
                        partial.emitted += 1;
                        fold(&mut acc, &t);
                    }
                }
            }
        }
        (acc, partial)
    };

    let jobs = q.jobs().min(chunks.len().max(1));
    if jobs <= 1 {
        for chunk in &chunks {
            let (acc, partial) = run_chunk(chunk);
            summary.absorb(partial);
            consume(acc);
        }
        return Ok(summary);
    }

    let next = AtomicUsize::new(0);
    let (tx, rx) = mpsc::channel::<(usize, A, EnumerationSummary)>();
    std::thread::scope(|scope| {
        for _ in 0..jobs {
            let tx = tx.clone();
            let next = &next;
            let chunks = &chunks;
            let run_chunk = &run_chunk;
            scope.spawn(move || loop {
                let idx = next.fetch_add(1, Ordering::Relaxed);
                if idx >= chunks.len() {
                    return;
                }
                let (acc, partial) = run_chunk(&chunks[idx]);
                if tx.send((idx, acc, partial)).is_err() {
                    return;
                }
            });
        }
        drop(tx);

        // reorder buffer: consume strictly in chunk order
        let mut pending: BTreeMap<usize, (A, EnumerationSummary)> = BTreeMap::new();
        let mut next_out = 0;
        for (idx, acc, partial) in rx {
            pending.insert(idx, (acc, partial));
            while let Some((acc, partial)) = pending.remove(&next_out) {
                summary.absorb(partial);
                consume(acc);
                next_out += 1;
            }
        }
    });
    Ok(summary)
}

/// Stream every matching table, in lexicographic cell-sequence order, to
/// `sink`. The order and the summary are independent of `jobs`.
pub fn enumerate_stream(
    q: &EnumerationQuery,
    mut sink: impl FnMut(&HyperTable),
) -> Result<EnumerationSummary, EnumError> {
    run_enumeration(
        q,
        Vec::new,
        |acc: &mut Vec<HyperTable>, t| acc.push(t.clone()),
        |tables| {
            for t in &tables {
                sink(t);
            }
        },
    )
}

/// Collect every matching table.
pub fn enumerate(q: &EnumerationQuery) -> Result<(Vec<HyperTable>, EnumerationSummary), EnumError> {
    let mut out = Vec::new();
    let summary = enumerate_stream(q, |t| out.push(t.clone()))?;
    Ok((out, summary))
}

/// Map-reduce over the enumeration without retaining tables: `fold` runs on
/// workers, `merge` combines per-chunk accumulators in deterministic order.
pub fn enumerate_fold<A, MakeA, Fold>(
    q: &EnumerationQuery,
    make: MakeA,
    fold: Fold,
    mut merge: impl FnMut(&mut A, A),
) -> Result<(A, EnumerationSummary), EnumError>
where
    A: Send,
    MakeA: Fn() -> A + Sync,
    Fold: Fn(&mut A, &HyperTable) + Sync,
{
    let mut total = make();
    let summary = run_enumeration(q, &make, fold, |acc| merge(&mut total, acc))?;
    Ok((total, summary))
}

/// Uniform random table: every cell an independent non-empty mask.
pub fn random_table(n: usize, rng: &mut SplitMix64) -> HyperTable {
    let a = alphabet(n) as u64;
    let cells = (0..n * n)
        .map(|_| SubsetMask(rng.below(a) as u32 + 1))
        .collect();
    HyperTable::from_parts_unchecked(n, cells, default_labels(n))
}

/// Random LA-semihypergroup: a randomized backtracking fill that returns the
/// first completion. Deterministic for a given generator state.
///
/// A fill that wanders into a large dead subtree is abandoned once its node
/// budget runs out and restarted with a fresh shuffle; the budget doubles on
/// every restart, so termination is guaranteed (completions always exist —
/// the constant table is one).
pub fn random_la_semihypergroup(n: usize, rng: &mut SplitMix64) -> HyperTable {
    enum Fill {
        Done,
        Dead,
        OutOfBudget,
    }
    fn go(
        cells: &mut Vec<SubsetMask>,
        n: usize,
        k: usize,
        rng: &mut SplitMix64,
        budget: &mut u64,
    ) -> Fill {
        if k == n * n {
            return Fill::Done;
        }
        let mut order: Vec<u32> = (1..=alphabet(n)).collect();
        rng.shuffle(&mut order);
        for bits in order {
            if *budget == 0 {
                return Fill::OutOfBudget;
            }
            *budget -= 1;
            cells[k] = SubsetMask(bits);
            if newly_determined_ok(cells, n, k + 1) {
                match go(cells, n, k + 1, rng, budget) {
                    Fill::Done => return Fill::Done,
                    Fill::Dead => {}
                    Fill::OutOfBudget => return Fill::OutOfBudget,
                }
            }
        }
        Fill::Dead
    }
    let mut limit = 10_000u64;
    loop {
        let mut cells = vec![SubsetMask::EMPTY; n * n];
        let mut budget = limit;
        if let Fill::Done = go(&mut cells, n, 0, rng, &mut budget) {
            return HyperTable::from_parts_unchecked(n, cells, default_labels(n));
        }
        limit = limit.saturating_mul(2);
    }
}

/// The lexicographically least cell sequence over all `n!` relabelings.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    pub order: usize,
    pub cells: Vec<SubsetMask>,
}

impl CanonicalForm {
    pub fn to_table(&self) -> HyperTable {
        HyperTable::from_parts_unchecked(self.order, self.cells.clone(), default_labels(self.order))
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    fn heap(k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(current.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, current, out);
            if k.is_multiple_of(2) {
                current.swap(i, k - 1);
            } else {
                current.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut current, &mut out);
    out
}

fn relabel_mask(m: SubsetMask, perm: &[usize]) -> SubsetMask {
    let mut out = SubsetMask::EMPTY;
    for b in m.iter() {
        out = out.union(SubsetMask::singleton(perm[b]));
    }
    out
}

/// The table obtained by renaming element `i` to `perm[i]`.
pub fn apply_permutation(t: &HyperTable, perm: &[usize]) -> HyperTable {
    let n = t.order();
    debug_assert_eq!(perm.len(), n);
    let mut cells = vec![SubsetMask::EMPTY; n * n];
    for i in 0..n {
        for j in 0..n {
            cells[perm[i] * n + perm[j]] = relabel_mask(t.cell(i, j), perm);
        }
    }
    HyperTable::from_parts_unchecked(n, cells, default_labels(n))
}

/// Minimum relabeling of `t` over all permutations. Isomorphic tables share
/// one canonical form; the map is idempotent.
pub fn canonicalize(t: &HyperTable) -> Result<CanonicalForm, EnumError> {
    let n = t.order();
    if n > MAX_CANONICAL_ORDER {
        return Err(EnumError::OrderTooLargeForCanonical(n));
    }
    let mut best: Option<Vec<SubsetMask>> = None;
    for perm in permutations(n) {
        let candidate = apply_permutation(t, &perm);
        let cells = candidate.cells().to_vec();
        if best.as_ref().is_none_or(|b| cells < *b) {
            best = Some(cells);
        }
    }
    Ok(CanonicalForm {
        order: n,
        cells: best.expect("at least the identity permutation"),
    })
}

pub fn is_canonical(t: &HyperTable) -> Result<bool, EnumError> {
    Ok(canonicalize(t)?.cells == t.cells())
}

/// Result of a randomized hunt for a converse-failure table.
#[derive(Debug, Clone)]
pub struct HuntOutcome {
    /// Candidate structures drawn (budget consumed).
    pub candidates: u64,
    /// Distinct canonical representatives among them.
    pub distinct: u64,
    /// First counterexample found, as its canonical representative.
    pub table: Option<HyperTable>,
    pub certificate: Option<Box<Certificate>>,
}

/// Draw random LA-semihypergroups of the given order until one witnesses
/// the converse failure of `id` (T10 or T11) or the budget runs out.
///
/// Candidates are deduplicated by canonical form, so isomorphic copies are
/// examined once. Deterministic for a fixed seed.
pub fn hunt_converse(
    id: TheoremId,
    order: usize,
    budget: u64,
    seed: u64,
) -> Result<HuntOutcome, EnumError> {
    if !matches!(id, TheoremId::T10 | TheoremId::T11) {
        return Err(EnumError::InfeasibleQuery(format!(
            "no converse hunt for {}; use T10 or T11",
            id.name()
        )));
    }
    if !(1..=MAX_ORDER).contains(&order) {
        return Err(EnumError::OrderOutOfBounds(order));
    }
    if order > MAX_CANONICAL_ORDER {
        return Err(EnumError::OrderTooLargeForCanonical(order));
    }
    let mut rng = SplitMix64::new(seed);
    let mut seen: HashSet<Vec<SubsetMask>> = HashSet::new();
    let mut outcome = HuntOutcome {
        candidates: 0,
        distinct: 0,
        table: None,
        certificate: None,
    };
    while outcome.candidates < budget {
        outcome.candidates += 1;
        let t = random_la_semihypergroup(order, &mut rng);
        let canon = canonicalize(&t)?;
        if !seen.insert(canon.cells.clone()) {
            continue;
        }
        outcome.distinct += 1;
        let representative = canon.to_table();
        let verdict = check_converse(&representative, id, TheoremOptions::default())
            .expect("generated tables satisfy the law and T10/T11 support converses");
        if let TheoremOutcome::Counterexample(cert) = verdict.outcome {
            outcome.table = Some(representative);
            outcome.certificate = Some(cert);
            break;
        }
    }
    Ok(outcome)
}

fn checked_modulus(n: usize, k: usize) -> Result<(), EnumError> {
    if !(1..=MAX_ORDER).contains(&n) {
        return Err(EnumError::OrderOutOfBounds(n));
    }
    if k < 1 || !n.is_multiple_of(k) {
        return Err(EnumError::StepDoesNotDivideModulus { n, k });
    }
    Ok(())
}

fn digit_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

/// Finite analogue of the coset hyperoperation on the integers:
/// `x∘y = (y−x) + kℤₙ`, the residue class of `y−x` modulo `k` inside `ℤₙ`.
pub fn gen_coset(n: usize, k: usize) -> Result<HyperTable, EnumError> {
    checked_modulus(n, k)?;
    let coset = |r: usize| SubsetMask::from_elements((r % k..n).step_by(k));
    let cells = (0..n * n)
        .map(|idx| {
            let (x, y) = (idx / n, idx % n);
            coset((y + n - x) % n)
        })
        .collect();
    let t = HyperTable::from_parts_unchecked(n, cells, digit_labels(n));
    debug_assert!(check_law(&t, LawId::LeftInvertive).holds);
    Ok(t)
}

/// Finite analogue of the union hyperoperation on the integers:
/// `x∘y = {x, y} ∪ kℤₙ`.
pub fn gen_union(n: usize, k: usize) -> Result<HyperTable, EnumError> {
    checked_modulus(n, k)?;
    let multiples = SubsetMask::from_elements((0..n).step_by(k));
    let cells = (0..n * n)
        .map(|idx| {
            let (x, y) = (idx / n, idx % n);
            SubsetMask::from_elements([x, y]).union(multiples)
        })
        .collect();
    let t = HyperTable::from_parts_unchecked(n, cells, digit_labels(n));
    debug_assert!(check_law(&t, LawId::LeftInvertive).holds);
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::naive;

    #[test]
    fn order_one_enumeration_is_the_trivial_table() {
        let (tables, summary) = enumerate(&EnumerationQuery::exhaustive(1)).unwrap();
        assert_eq!(tables.len(), 1);
        assert_eq!(summary.emitted, 1);
        assert_eq!(tables[0].cell(0, 0), SubsetMask::singleton(0));
    }

    /// Regression constants established by the naive oracle (order 2) and by
    /// the engine itself (order 3).
    pub(crate) const ORDER2_COUNT: usize = 21;
    pub(crate) const ORDER2_INTRA_REGULAR_COUNT: usize = 19;
    pub(crate) const ORDER3_COUNT: u64 = 112_573;

    #[test]
    fn order_two_enumeration_matches_the_naive_filter() {
        let (tables, _) = enumerate(&EnumerationQuery::exhaustive(2)).unwrap();
        let oracle = naive::la_semihypergroups_order2();
        assert_eq!(tables, oracle);
        assert_eq!(tables.len(), ORDER2_COUNT);
    }

    #[test]
    fn order_two_intra_regular_subcount_is_frozen() {
        let mut q = EnumerationQuery::exhaustive(2);
        q.intra_regular = Some(true);
        let (tables, summary) = enumerate(&q).unwrap();
        assert_eq!(tables.len(), ORDER2_INTRA_REGULAR_COUNT);
        assert_eq!(summary.law_ok, ORDER2_COUNT as u64);
        // agrees with filtering the naive enumeration through intra_regular
        let oracle: Vec<_> = naive::la_semihypergroups_order2()
            .into_iter()
            .filter(|t| intra_regular(t).overall)
            .collect();
        assert_eq!(tables, oracle);
    }

    #[test]
    fn order_three_count_is_frozen() {
        let mut q = EnumerationQuery::exhaustive(3);
        q.jobs = 2;
        let (count, summary) =
            enumerate_fold(&q, || 0u64, |acc, _| *acc += 1, |a, b| *a += b).unwrap();
        assert_eq!(count, ORDER3_COUNT);
        assert_eq!(summary.emitted, ORDER3_COUNT);
    }

    #[test]
    fn worker_count_does_not_change_the_sequence() {
        let reference = enumerate(&EnumerationQuery::exhaustive(2)).unwrap();
        for jobs in [2, 3, 8] {
            let mut q = EnumerationQuery::exhaustive(2);
            q.jobs = jobs;
            assert_eq!(enumerate(&q).unwrap(), reference, "jobs={jobs}");
        }
    }

    #[test]
    fn sample_mode_is_deterministic_across_jobs() {
        let reference = enumerate(&EnumerationQuery::sample(3, 5000, 42)).unwrap();
        for jobs in [2, 8] {
            let mut q = EnumerationQuery::sample(3, 5000, 42);
            q.jobs = jobs;
            assert_eq!(enumerate(&q).unwrap(), reference, "jobs={jobs}");
        }
        assert!(
            reference.1.emitted > 0,
            "some random order-3 table satisfies the law"
        );
    }

    #[test]
    fn infeasible_queries_are_rejected() {
        assert!(matches!(
            enumerate(&EnumerationQuery::exhaustive(5)),
            Err(EnumError::InfeasibleQuery(_))
        ));
        let mut lawless = EnumerationQuery::exhaustive(4);
        lawless.laws.clear();
        assert!(matches!(
            enumerate(&lawless),
            Err(EnumError::InfeasibleQuery(_))
        ));
    }

    #[test]
    fn incremental_acceptance_agrees_with_full_law_check() {
        let mut rng = SplitMix64::new(7);
        for _ in 0..2000 {
            let t = random_table(3, &mut rng);
            assert_eq!(
                incremental_left_invertive_accepts(&t),
                check_law(&t, LawId::LeftInvertive).holds,
                "{t:?}"
            );
        }
    }

    #[test]
    fn random_la_semihypergroups_satisfy_the_law() {
        let mut rng = SplitMix64::new(11);
        for n in [2, 3, 4] {
            for _ in 0..20 {
                let t = random_la_semihypergroup(n, &mut rng);
                assert!(check_law(&t, LawId::LeftInvertive).holds);
            }
        }
    }

    #[test]
    fn canonicalize_is_idempotent_and_label_invariant() {
        let i4 = fixtures::i4();
        let canon = canonicalize(&i4).unwrap();
        assert_eq!(canonicalize(&canon.to_table()).unwrap(), canon);

        // swapping y and z yields an isomorphic table
        let swapped = apply_permutation(&i4, &[0, 2, 1, 3]);
        assert_eq!(canonicalize(&swapped).unwrap(), canon);
    }

    #[test]
    fn canonical_forms_separate_non_isomorphic_tables() {
        // L5 has a zero element, A5 does not; they cannot be isomorphic
        let l5 = canonicalize(&fixtures::l5()).unwrap();
        let a5 = canonicalize(&fixtures::a5()).unwrap();
        assert_ne!(l5, a5);
    }

    #[test]
    fn canonical_form_is_constant_on_isomorphism_classes() {
        let mut rng = SplitMix64::new(99);
        for _ in 0..100 {
            let t = random_table(4, &mut rng);
            let canon = canonicalize(&t).unwrap();
            for _ in 0..10 {
                let mut perm: Vec<usize> = (0..4).collect();
                rng.shuffle(&mut perm);
                assert_eq!(canonicalize(&apply_permutation(&t, &perm)).unwrap(), canon);
            }
        }
    }

    #[test]
    fn coset_generator_matches_the_formula() {
        let t = gen_coset(6, 3).unwrap();
        assert_eq!(t.cell(0, 0), SubsetMask::from_elements([0, 3]));
        assert!(check_law(&t, LawId::LeftInvertive).holds);
        assert!(intra_regular(&t).overall);
        assert_eq!(
            gen_coset(6, 4).unwrap_err(),
            EnumError::StepDoesNotDivideModulus { n: 6, k: 4 }
        );
    }

    #[test]
    fn union_generator_matches_the_formula() {
        let t = gen_union(4, 2).unwrap();
        assert_eq!(t.cell(1, 3), SubsetMask::full(4));
        assert!(check_law(&t, LawId::LeftInvertive).holds);
        assert!(intra_regular(&t).overall);
        assert_eq!(
            gen_union(3, 2).unwrap_err(),
            EnumError::StepDoesNotDivideModulus { n: 3, k: 2 }
        );
    }

    #[test]
    fn hunt_finds_an_order_two_converse_failure() {
        // non-intra-regular order-2 tables with an equation-satisfying
        // hyperideal exist (the constant table is one), so a modest budget
        // suffices
        let outcome = hunt_converse(TheoremId::T10, 2, 200, 7).unwrap();
        let t = outcome.table.expect("a witness exists at order 2");
        assert!(check_law(&t, LawId::LeftInvertive).holds);
        let cert = outcome
            .certificate
            .expect("counterexample carries a certificate");
        assert!(!cert.subsets.is_empty());
        // deterministic across runs with the same seed
        let again = hunt_converse(TheoremId::T10, 2, 200, 7).unwrap();
        assert_eq!(again.table.as_ref(), Some(&t));
        assert_eq!(again.candidates, outcome.candidates);
    }

    #[test]
    fn hunt_rejects_unsupported_targets() {
        assert!(matches!(
            hunt_converse(TheoremId::T13, 2, 10, 0),
            Err(EnumError::InfeasibleQuery(_))
        ));
        assert!(matches!(
            hunt_converse(TheoremId::T10, 9, 10, 0),
            Err(EnumError::OrderTooLargeForCanonical(9))
        ));
    }

    #[test]
    fn generators_satisfy_the_law_for_all_divisor_pairs() {
        for n in 1..=12 {
            for k in 1..=n {
                if n % k != 0 {
                    continue;
                }
                for t in [gen_coset(n, k).unwrap(), gen_union(n, k).unwrap()] {
                    assert!(
                        check_law(&t, LawId::LeftInvertive).holds,
                        "n={n} k={k} {t:?}"
                    );
                }
            }
        }
    }
}
