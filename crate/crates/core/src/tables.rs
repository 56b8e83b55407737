//! Regeneration of the four exception tables, the canonical line-oriented
//! row encoding, and the fixture verification machinery.
//!
//! Row encoding (one CSV line per row, `#` lines are comments):
//!
//! ```text
//! family,rank_set,a,b,c,provenance
//! ```
//!
//! * `family`: `A`..`G`, or `any` (row applies to every type in the
//!   table's universe);
//! * `rank_set`: `*`, or `;`-joined tokens `N` / `N-M` (inclusive runs);
//! * `a`, `b`, `c`: `N` (exactly), `>=N` (every value from N up), or `*`
//!   (every value);
//! * `provenance`: a bare token recording which criterion produced the
//!   row; ignored when rows are compared.
//!
//! A row denotes the set of (type, triple) pairs matching all five
//! patterns. Infinite families are finitely checkable because every
//! criterion in this crate is constant in an entry once it exceeds the
//! largest exponent of the type; the comparison universe therefore caps
//! each entry at `max_exponent + 1` (floored at 13, so the excluded set S
//! and the reference range boundaries stay visible). Two documented
//! normalizations apply when diffing against the reference tables: tables
//! 2-4 are compared with the six S-triples removed from both sides (their
//! source criteria assume the triple outside S, and the printed rows straddle S
//! members inconsistently), and the table-1 cell printed as "r ={4,7}" is
//! read as set membership.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::path::Path;

use serde::Serialize;

use crate::dynkin::{DynkinType, Family};
use crate::error::Error;
use crate::ladder::{self, LadderChain};
use crate::root_system;
use crate::triple::HyperbolicTriple;

/// Which of the four reference tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TableId {
    One,
    Two,
    Three,
    Four,
}

impl TableId {
    pub fn from_u8(which: u8) -> Option<TableId> {
        match which {
            1 => Some(TableId::One),
            2 => Some(TableId::Two),
            3 => Some(TableId::Three),
            4 => Some(TableId::Four),
            _ => None,
        }
    }

    pub fn as_u8(self) -> u8 {
        match self {
            TableId::One => 1,
            TableId::Two => 2,
            TableId::Three => 3,
            TableId::Four => 4,
        }
    }

    /// Tables 1 and 3 contain D-family rows up to rank 43; smaller caps
    /// cannot reproduce them faithfully.
    pub fn required_rank_cap(self) -> u32 {
        match self {
            TableId::One | TableId::Three => 43,
            TableId::Two | TableId::Four => 8,
        }
    }
}

/// `N`, `>=N`, or `*`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum NumPat {
    Exact(u64),
    AtLeast(u64),
    Any,
}

impl NumPat {
    pub fn matches(&self, v: u64) -> bool {
        match *self {
            NumPat::Exact(n) => v == n,
            NumPat::AtLeast(n) => v >= n,
            NumPat::Any => true,
        }
    }

    fn sort_key(&self) -> (u8, u64, u8) {
        match *self {
            NumPat::Exact(n) => (0, n, 0),
            NumPat::AtLeast(n) => (0, n, 1),
            NumPat::Any => (1, 0, 0),
        }
    }

    fn parse(tok: &str) -> Option<NumPat> {
        if tok == "*" {
            return Some(NumPat::Any);
        }
        if let Some(rest) = tok.strip_prefix(">=") {
            return rest.parse().ok().map(NumPat::AtLeast);
        }
        tok.parse().ok().map(NumPat::Exact)
    }
}

impl PartialOrd for NumPat {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for NumPat {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl fmt::Display for NumPat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            NumPat::Exact(n) => write!(f, "{n}"),
            NumPat::AtLeast(n) => write!(f, ">={n}"),
            NumPat::Any => write!(f, "*"),
        }
    }
}

/// A family letter or `any`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum FamilyPat {
    Any,
    Fam(Family),
}

impl FamilyPat {
    pub fn matches(&self, d: DynkinType) -> bool {
        match self {
            FamilyPat::Any => true,
            FamilyPat::Fam(f) => d.family() == *f,
        }
    }
}

impl fmt::Display for FamilyPat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyPat::Any => write!(f, "any"),
            FamilyPat::Fam(fam) => write!(f, "{fam}"),
        }
    }
}

/// `*` or an explicit sorted rank set.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum RankSet {
    Any,
    Set(Vec<u32>),
}

impl RankSet {
    pub fn contains(&self, rank: u32) -> bool {
        match self {
            RankSet::Any => true,
            RankSet::Set(v) => v.binary_search(&rank).is_ok(),
        }
    }

    fn from_sorted(mut v: Vec<u32>) -> RankSet {
        v.sort_unstable();
        v.dedup();
        RankSet::Set(v)
    }
}

impl fmt::Display for RankSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RankSet::Any => write!(f, "*"),
            RankSet::Set(v) => {
                let mut tokens = Vec::new();
                let mut i = 0;
                while i < v.len() {
                    let start = v[i];
                    let mut end = start;
                    while i + 1 < v.len() && v[i + 1] == end + 1 {
                        end = v[i + 1];
                        i += 1;
                    }
                    if start == end {
                        tokens.push(format!("{start}"));
                    } else {
                        tokens.push(format!("{start}-{end}"));
                    }
                    i += 1;
                }
                write!(f, "{}", tokens.join(";"))
            }
        }
    }
}

/// One table row: a (type pattern, triple pattern) rectangle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub family: FamilyPat,
    pub ranks: RankSet,
    pub a: NumPat,
    pub b: NumPat,
    pub c: NumPat,
    pub provenance: String,
}

impl TableRow {
    pub fn matches_type(&self, d: DynkinType) -> bool {
        self.family.matches(d) && self.ranks.contains(d.rank())
    }

    pub fn matches(&self, d: DynkinType, t: HyperbolicTriple) -> bool {
        self.matches_type(d)
            && self.a.matches(t.a())
            && self.b.matches(t.b())
            && self.c.matches(t.c())
    }

    /// Canonical line encoding.
    pub fn encode(&self) -> String {
        format!(
            "{},{},{},{},{},{}",
            self.family, self.ranks, self.a, self.b, self.c, self.provenance
        )
    }

    pub fn parse(line: &str) -> Result<TableRow, Error> {
        let bad = |reason: &str| Error::BadTableRow {
            line: line.to_string(),
            reason: reason.to_string(),
        };
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 6 {
            return Err(bad("expected 6 comma-separated fields"));
        }
        let family = match fields[0] {
            "any" => FamilyPat::Any,
            f => FamilyPat::Fam(f.parse().map_err(|_| bad("bad family"))?),
        };
        let ranks = if fields[1] == "*" {
            RankSet::Any
        } else {
            let mut set = Vec::new();
            for tok in fields[1].split(';') {
                if let Some((lo, hi)) = tok.split_once('-') {
                    let lo: u32 = lo.parse().map_err(|_| bad("bad rank range"))?;
                    let hi: u32 = hi.parse().map_err(|_| bad("bad rank range"))?;
                    if hi < lo {
                        return Err(bad("empty rank range"));
                    }
                    set.extend(lo..=hi);
                } else {
                    set.push(tok.parse().map_err(|_| bad("bad rank"))?);
                }
            }
            RankSet::from_sorted(set)
        };
        let a = NumPat::parse(fields[2]).ok_or_else(|| bad("bad a pattern"))?;
        let b = NumPat::parse(fields[3]).ok_or_else(|| bad("bad b pattern"))?;
        let c = NumPat::parse(fields[4]).ok_or_else(|| bad("bad c pattern"))?;
        if fields[5].is_empty() {
            return Err(bad("empty provenance"));
        }
        Ok(TableRow {
            family,
            ranks,
            a,
            b,
            c,
            provenance: fields[5].to_string(),
        })
    }

    fn sort_key(&self) -> (FamilyPat, NumPat, NumPat, NumPat, RankSet) {
        (self.family, self.a, self.b, self.c, self.ranks.clone())
    }
}

/// Parse a whole fixture file (comments and blank lines skipped).
pub fn parse_rows(text: &str) -> Result<Vec<TableRow>, Error> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(TableRow::parse)
        .collect()
}

pub fn encode_rows(rows: &[TableRow]) -> String {
    let mut out = String::new();
    for row in rows {
        out.push_str(&row.encode());
        out.push('\n');
    }
    out
}

// ---------------------------------------------------------------------------
// Comparison universe
// ---------------------------------------------------------------------------

/// Entry cap for a type: results are constant in any entry beyond the
/// largest exponent, so `max_exponent + 1` is the canonical representative
/// of the tail. Floored at 13 to keep the S members and the reference
/// `c >= 13` boundaries inside the verified range for every type.
pub fn triple_cap(d: DynkinType) -> u64 {
    (root_system::max_exponent(d) + 1).max(13)
}

/// The type universe each table ranges over.
pub fn table_types(which: TableId, rank_cap: u32) -> Result<Vec<DynkinType>, Error> {
    if rank_cap < which.required_rank_cap() {
        return Err(Error::RankCapTooSmall {
            which: which.as_u8(),
            cap: rank_cap,
            required: which.required_rank_cap(),
        });
    }
    let t = |s: &str| s.parse::<DynkinType>().unwrap();
    Ok(match which {
        TableId::Two => vec![t("A_2"), t("C_2"), t("G_2")],
        TableId::Four => vec![t("B_3"), t("E_6")],
        TableId::Three => {
            let mut v: Vec<DynkinType> = (3..=rank_cap)
                .filter(|&r| r != 6)
                .map(|r| DynkinType::new(Family::A, r).unwrap())
                .collect();
            v.extend((5..=rank_cap).map(|r| DynkinType::new(Family::D, r).unwrap()));
            v
        }
        TableId::One => DynkinType::canonical_types(rank_cap),
    })
}

fn is_in_s(t: &[u64; 3]) -> bool {
    ladder::SO3_EXCLUDED.contains(&(t[0], t[1], t[2]))
}

/// Triples of the comparison universe for one type, optionally without the
/// six S members.
fn universe_triples(d: DynkinType, exclude_s: bool) -> Vec<[u64; 3]> {
    HyperbolicTriple::enumerate_up_to(triple_cap(d))
        .into_iter()
        .map(|t| t.entries())
        .filter(|t| !exclude_s || !is_in_s(t))
        .collect()
}

/// Expand rows to the extensional set of (type, triple) pairs over the
/// given universe.
pub fn expand_rows(
    rows: &[TableRow],
    types: &[DynkinType],
    exclude_s: bool,
) -> BTreeSet<(DynkinType, [u64; 3])> {
    let mut out = BTreeSet::new();
    for &d in types {
        let relevant: Vec<&TableRow> = rows.iter().filter(|r| r.matches_type(d)).collect();
        if relevant.is_empty() {
            continue;
        }
        for t in universe_triples(d, exclude_s) {
            if relevant
                .iter()
                .any(|r| r.a.matches(t[0]) && r.b.matches(t[1]) && r.c.matches(t[2]))
            {
                out.insert((d, t));
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Fast per-type verdicts
// ---------------------------------------------------------------------------

/// Per-type lookup tables making the (type, triple) verdicts O(1) per
/// triple: fixed-space counts of the base group and L-sums of every chain
/// step, precomputed for all entries up to the cap.
struct TypeEvaluator {
    rank_one: bool,
    base_dim: u64,
    /// base_fixed[n] = sum over base exponents of (1 + 2*floor(e/n)).
    base_fixed: Vec<u64>,
    /// Per step: (l1[n] = sum over E of floor(e/n), r).
    steps: Vec<(Vec<u64>, u64)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Verdict {
    Saturated,
    RankOne,
    BaseH1Zero,
    StepEquality(usize),
}

impl Verdict {
    fn token(self) -> &'static str {
        match self {
            Verdict::Saturated => "saturated",
            Verdict::RankOne => "rank1",
            Verdict::BaseH1Zero => "base",
            Verdict::StepEquality(_) => "step",
        }
    }
}

impl TypeEvaluator {
    fn new(d: DynkinType) -> TypeEvaluator {
        let cap = triple_cap(d) as usize;
        let Some(chain) = LadderChain::for_type(d) else {
            return TypeEvaluator {
                rank_one: true,
                base_dim: 0,
                base_fixed: Vec::new(),
                steps: Vec::new(),
            };
        };
        let base = chain.base();
        let base_exps = root_system::exponents(base);
        let base_dim = root_system::dimension(base);
        let mut base_fixed = vec![0u64; cap + 1];
        for (n, slot) in base_fixed.iter_mut().enumerate().skip(2) {
            *slot = base_exps.iter().map(|e| 1 + 2 * (e / n as u64)).sum();
        }
        let steps = chain
            .step_pairs()
            .into_iter()
            .map(|(sub, whole)| {
                let diff = ladder::exponent_difference(whole, sub).expect("chain invariant");
                let r = diff.iter().sum::<u64>() - diff.len() as u64;
                let mut l1 = vec![0u64; cap + 1];
                for (n, slot) in l1.iter_mut().enumerate().skip(2) {
                    *slot = diff.iter().map(|e| e / n as u64).sum();
                }
                (l1, r)
            })
            .collect();
        TypeEvaluator {
            rank_one: false,
            base_dim,
            base_fixed,
            steps,
        }
    }

    /// Verdict for a non-S triple (S membership is decided by the caller).
    fn verdict(&self, t: &[u64; 3]) -> Verdict {
        if self.rank_one {
            return Verdict::RankOne;
        }
        let fixed: u64 = t.iter().map(|&n| self.base_fixed[n as usize]).sum();
        if fixed == self.base_dim {
            return Verdict::BaseH1Zero;
        }
        for (i, (l1, r)) in self.steps.iter().enumerate() {
            let l: u64 = t.iter().map(|&n| l1[n as usize]).sum();
            if l >= *r {
                return Verdict::StepEquality(i);
            }
        }
        Verdict::Saturated
    }
}

// ---------------------------------------------------------------------------
// Coalescing extensional sets into canonical rows
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct TriplePattern {
    a: NumPat,
    b: NumPat,
    c: NumPat,
}

/// Coalesce one type's accepted triples into patterns. `accepted` and the
/// universe both exclude S. A c-run reaching the cap becomes `>=onset`
/// (constant beyond the cap by stabilization); a fully accepted b-tail
/// becomes a `>=b0` or `*` b-pattern; a fully accepted type becomes the
/// all-`*` pattern.
fn coalesce_type(d: DynkinType, accepted: &BTreeSet<[u64; 3]>) -> Vec<TriplePattern> {
    let cap = triple_cap(d);
    let mut universe: BTreeMap<(u64, u64), BTreeSet<u64>> = BTreeMap::new();
    for t in universe_triples(d, true) {
        universe.entry((t[0], t[1])).or_default().insert(t[2]);
    }
    let mut acc: BTreeMap<(u64, u64), BTreeSet<u64>> = BTreeMap::new();
    for t in accepted {
        acc.entry((t[0], t[1])).or_default().insert(t[2]);
    }

    let a_values: BTreeSet<u64> = universe.keys().map(|&(a, _)| a).collect();
    let mut per_a: BTreeMap<u64, Vec<TriplePattern>> = BTreeMap::new();
    let mut a_fully_accepted: BTreeMap<u64, bool> = BTreeMap::new();

    for &a in &a_values {
        let bs: Vec<u64> = universe
            .keys()
            .filter(|&&(ua, _)| ua == a)
            .map(|&(_, b)| b)
            .collect();
        let empty = BTreeSet::new();
        let full = |b: u64| -> bool {
            let uni = &universe[&(a, b)];
            let got = acc.get(&(a, b)).unwrap_or(&empty);
            got == uni
        };
        // Longest suffix of b-values that are fully accepted.
        let mut tail_start = bs.len();
        while tail_start > 0 && full(bs[tail_start - 1]) {
            tail_start -= 1;
        }
        let mut patterns = Vec::new();
        for &b in &bs[..tail_start] {
            let Some(cs) = acc.get(&(a, b)) else { continue };
            // Maximal runs of consecutive accepted c values; a run that
            // reaches the cap is stable and becomes a >= family.
            let cs: Vec<u64> = cs.iter().copied().collect();
            let mut i = 0;
            while i < cs.len() {
                let start = cs[i];
                let mut end = start;
                while i + 1 < cs.len() && cs[i + 1] == end + 1 {
                    end = cs[i + 1];
                    i += 1;
                }
                if end == cap {
                    patterns.push(TriplePattern {
                        a: NumPat::Exact(a),
                        b: NumPat::Exact(b),
                        c: NumPat::AtLeast(start),
                    });
                } else {
                    for c in start..=end {
                        patterns.push(TriplePattern {
                            a: NumPat::Exact(a),
                            b: NumPat::Exact(b),
                            c: NumPat::Exact(c),
                        });
                    }
                }
                i += 1;
            }
        }
        if tail_start < bs.len() {
            let b_pat = if tail_start == 0 {
                NumPat::Any
            } else {
                NumPat::AtLeast(bs[tail_start])
            };
            patterns.push(TriplePattern {
                a: NumPat::Exact(a),
                b: b_pat,
                c: NumPat::Any,
            });
        }
        a_fully_accepted.insert(a, tail_start == 0);
        per_a.insert(a, patterns);
    }

    if !a_values.is_empty() && a_values.iter().all(|a| a_fully_accepted[a]) {
        return vec![TriplePattern {
            a: NumPat::Any,
            b: NumPat::Any,
            c: NumPat::Any,
        }];
    }
    let mut out: Vec<TriplePattern> = per_a.into_values().flatten().collect();
    out.sort();
    out
}

/// Group identical per-rank patterns into rank-set rows within each family.
fn group_rows(
    per_type: &BTreeMap<DynkinType, Vec<TriplePattern>>,
    provenance_of: impl Fn(DynkinType, &TriplePattern) -> String,
) -> Vec<TableRow> {
    let mut grouped: BTreeMap<(Family, TriplePattern), Vec<u32>> = BTreeMap::new();
    let mut prov: BTreeMap<(Family, TriplePattern), String> = BTreeMap::new();
    for (&d, patterns) in per_type {
        for pat in patterns {
            let key = (d.family(), *pat);
            grouped.entry(key).or_default().push(d.rank());
            prov.entry(key).or_insert_with(|| provenance_of(d, pat));
        }
    }
    let mut rows: Vec<TableRow> = grouped
        .into_iter()
        .map(|((family, pat), ranks)| TableRow {
            family: FamilyPat::Fam(family),
            ranks: RankSet::from_sorted(ranks),
            a: pat.a,
            b: pat.b,
            c: pat.c,
            provenance: prov[&(family, pat)].clone(),
        })
        .collect();
    rows.sort_by_key(|r| r.sort_key());
    rows
}

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

/// Regenerate one table from the criteria. `rank_cap` bounds the A/D
/// families of tables 1 and 3 (at least 43 required there).
pub fn generate(which: TableId, rank_cap: u32) -> Result<Vec<TableRow>, Error> {
    let types = table_types(which, rank_cap)?;
    match which {
        TableId::Two => {
            // Vanishing principal H^1 on the direct types A_2, C_2, G_2.
            let mut per_type = BTreeMap::new();
            for d in types {
                let ev = TypeEvaluator::new(d);
                let accepted: BTreeSet<[u64; 3]> = universe_triples(d, true)
                    .into_iter()
                    .filter(|t| ev.verdict(t) == Verdict::BaseH1Zero)
                    .collect();
                per_type.insert(d, coalesce_type(d, &accepted));
            }
            Ok(group_rows(&per_type, |_, _| "exrep".to_string()))
        }
        TableId::Three | TableId::Four => {
            // Non-strict L/R at the final ladder step of each type.
            let mut per_type = BTreeMap::new();
            for d in types {
                let chain = LadderChain::for_type(d).expect("table types have chains");
                let (sub, whole) = *chain.step_pairs().last().expect("two-step chain");
                let diff = ladder::exponent_difference(whole, sub)?;
                let r: u64 = diff.iter().sum::<u64>() - diff.len() as u64;
                let accepted: BTreeSet<[u64; 3]> = universe_triples(d, true)
                    .into_iter()
                    .filter(|t| {
                        let l: u64 = t
                            .iter()
                            .map(|&n| diff.iter().map(|&e| e / n).sum::<u64>())
                            .sum();
                        l >= r
                    })
                    .collect();
                per_type.insert(d, coalesce_type(d, &accepted));
            }
            let token = if which == TableId::Three {
                "twosteps"
            } else {
                "twostepssmall"
            };
            Ok(group_rows(&per_type, |_, _| token.to_string()))
        }
        TableId::One => {
            let mut per_type = BTreeMap::new();
            let mut verdicts: HashMap<(DynkinType, [u64; 3]), Verdict> = HashMap::new();
            for &d in &types {
                let ev = TypeEvaluator::new(d);
                let mut accepted = BTreeSet::new();
                for t in universe_triples(d, true) {
                    let v = ev.verdict(&t);
                    if v != Verdict::Saturated {
                        verdicts.insert((d, t), v);
                        accepted.insert(t);
                    }
                }
                per_type.insert(d, coalesce_type(d, &accepted));
            }
            // Provenance of a pattern row: the verdict token of its
            // lexicographically least member.
            let provenance_of = |d: DynkinType, pat: &TriplePattern| -> String {
                universe_triples(d, true)
                    .into_iter()
                    .find(|t| {
                        pat.a.matches(t[0])
                            && pat.b.matches(t[1])
                            && pat.c.matches(t[2])
                            && verdicts.contains_key(&(d, *t))
                    })
                    .map(|t| verdicts[&(d, t)].token().to_string())
                    .unwrap_or_else(|| "main".to_string())
            };
            let mut rows: Vec<TableRow> = ladder::SO3_EXCLUDED
                .iter()
                .map(|&(a, b, c)| TableRow {
                    family: FamilyPat::Any,
                    ranks: RankSet::Any,
                    a: NumPat::Exact(a),
                    b: NumPat::Exact(b),
                    c: NumPat::Exact(c),
                    provenance: "s".to_string(),
                })
                .collect();
            rows.extend(group_rows(&per_type, provenance_of));
            rows.sort_by_key(|r| r.sort_key());
            Ok(rows)
        }
    }
}

// ---------------------------------------------------------------------------
// Verification against fixtures
// ---------------------------------------------------------------------------

/// The outcome of diffing one regenerated table against its fixture.
#[derive(Debug, Clone, Serialize)]
pub struct TableVerify {
    pub which: u8,
    /// Canonical-line identity (only meaningful where the reference layout
    /// is itself canonical: tables 2 and 4).
    pub row_identical: Option<bool>,
    /// Pairs the fixture claims but the regeneration does not.
    pub missing: Vec<String>,
    /// Pairs the regeneration produces but the fixture lacks.
    pub extra: Vec<String>,
    pub notes: Vec<String>,
    pub pairs_checked: usize,
    pub ok: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub rank_cap: u32,
    pub tables: Vec<TableVerify>,
    pub ok: bool,
}

impl VerifyReport {
    /// Deterministic, timestamp-free text rendering; two runs produce
    /// byte-identical reports.
    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "fixture verification (rank cap {})\n",
            self.rank_cap
        ));
        for t in &self.tables {
            let status = if t.ok { "OK" } else { "MISMATCH" };
            out.push_str(&format!(
                "table {}: {} ({} pairs compared)\n",
                t.which, status, t.pairs_checked
            ));
            if let Some(ident) = t.row_identical {
                out.push_str(&format!(
                    "  canonical rows {}\n",
                    if ident { "identical" } else { "DIFFER" }
                ));
            }
            for note in &t.notes {
                out.push_str(&format!("  note: {note}\n"));
            }
            let mut print_diff = |label: &str, lines: &[String]| {
                if lines.is_empty() {
                    return;
                }
                out.push_str(&format!("  {label} ({}):\n", lines.len()));
                for line in lines.iter().take(100) {
                    out.push_str(&format!("    {line}\n"));
                }
                if lines.len() > 100 {
                    out.push_str(&format!("    ... and {} more\n", lines.len() - 100));
                }
            };
            print_diff("missing from regeneration", &t.missing);
            print_diff("extra in regeneration", &t.extra);
        }
        out.push_str(if self.ok {
            "overall: OK\n"
        } else {
            "overall: MISMATCH\n"
        });
        out
    }
}

fn diff_one(
    which: TableId,
    fixture_rows: &[TableRow],
    rank_cap: u32,
) -> Result<TableVerify, Error> {
    let generated = generate(which, rank_cap)?;
    let types = table_types(which, rank_cap)?;
    let exclude_s = which != TableId::One;
    let want = expand_rows(fixture_rows, &types, exclude_s);
    let got = expand_rows(&generated, &types, exclude_s);
    let fmt_pair = |(d, t): &(DynkinType, [u64; 3])| format!("{d} ({},{},{})", t[0], t[1], t[2]);
    let missing: Vec<String> = want.difference(&got).map(fmt_pair).collect();
    let extra: Vec<String> = got.difference(&want).map(fmt_pair).collect();

    let row_identical = match which {
        TableId::Two | TableId::Four => Some(encode_rows(&generated) == encode_rows(fixture_rows)),
        _ => None,
    };
    let mut notes = Vec::new();
    if which == TableId::One {
        notes.push(
            "the reference table prints \"r ={4,7}\" in the D-family (3,3,6) cell; read as set membership r in {4,7}"
                .to_string(),
        );
        notes
            .push("S-triple rows apply to every type; remaining rows may overlap them".to_string());
    }
    if exclude_s {
        notes.push(
            "compared with the six S-triples removed from both sides (the underlying criteria exclude S)"
                .to_string(),
        );
    }
    let ok = missing.is_empty() && extra.is_empty() && row_identical.unwrap_or(true);
    Ok(TableVerify {
        which: which.as_u8(),
        row_identical,
        missing,
        extra,
        notes,
        pairs_checked: want.union(&got).count(),
        ok,
    })
}

/// Regenerate all four tables and diff them against the fixture directory
/// (layout: `<dir>/tables/table{1,2,3,4}.csv`).
pub fn verify_fixtures(dir: &Path, rank_cap: u32) -> Result<VerifyReport, Error> {
    let mut tables = Vec::new();
    for which in [TableId::One, TableId::Two, TableId::Three, TableId::Four] {
        let path = dir
            .join("tables")
            .join(format!("table{}.csv", which.as_u8()));
        let text = std::fs::read_to_string(&path).map_err(|e| Error::BadTableRow {
            line: path.display().to_string(),
            reason: format!("cannot read fixture: {e}"),
        })?;
        let rows = parse_rows(&text)?;
        tables.push(diff_one(which, &rows, rank_cap)?);
    }
    let ok = tables.iter().all(|t| t.ok);
    Ok(VerifyReport {
        rank_cap,
        tables,
        ok,
    })
}

// ---------------------------------------------------------------------------

/// Markdown rendering of a row list.
pub fn render_markdown(rows: &[TableRow]) -> String {
    let mut out =
        String::from("| type | ranks | a | b | c | provenance |\n|---|---|---|---|---|---|\n");
    for r in rows {
        out.push_str(&format!(
            "| {} | {} | {} | {} | {} | {} |\n",
            r.family, r.ranks, r.a, r.b, r.c, r.provenance
        ));
    }
    out
}
