//! Semigroup sources, the JSON analysis report and matching files.
//!
//! Reports carry `"schema": 1` and contain no maps with unordered keys, so the
//! same arguments always produce the same bytes.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::constructions::{
    catalog, full_transformation_monoid, orientation_preserving_monoid, partial_transformation_monoid, rees_matrix,
};
use crate::error::{Error, Result};
use crate::format::{parse_cayley, parse_rees_json};
use crate::matchers::{
    find_involution_matching, find_permutation_matching, h_preserving_permutation_matching, opn_involution,
    q_preserving_matching, theorem16_conditions, theorem24_check, validate_matching, MatchOutcome, MatchingFlags,
    Obstruction, PermutationMatching, ValidationReport,
};
use crate::semigroup::{ElementId, Semigroup, PAIR_SCAN_LIMIT};

pub const SCHEMA_VERSION: u32 = 1;

/// Largest order for which the four-condition equivalence is re-checked in a report.
pub const EQUIVALENCE_CHECK_LIMIT: usize = 300;

/// Where a semigroup comes from, as written on the command line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    Catalog(String),
    Tn(usize),
    Ptn(usize),
    Opn(usize),
    Rees(PathBuf),
    Table(PathBuf),
}

impl FromStr for Source {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let number = |v: &str| v.parse::<usize>().map_err(|_| Error::UnknownCatalog(s.to_string()));
        Ok(match s.split_once(':') {
            Some(("tn", v)) => Source::Tn(number(v)?),
            Some(("ptn", v)) => Source::Ptn(number(v)?),
            Some(("opn", v)) => Source::Opn(number(v)?),
            Some(("rees", p)) => Source::Rees(PathBuf::from(p)),
            Some(("table", p)) => Source::Table(PathBuf::from(p)),
            Some(_) => return Err(Error::UnknownCatalog(s.to_string())),
            None => Source::Catalog(s.to_string()),
        })
    }
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Source::Catalog(name) => write!(f, "{name}"),
            Source::Tn(n) => write!(f, "tn:{n}"),
            Source::Ptn(n) => write!(f, "ptn:{n}"),
            Source::Opn(n) => write!(f, "opn:{n}"),
            Source::Rees(p) => write!(f, "rees:{}", p.display()),
            Source::Table(p) => write!(f, "table:{}", p.display()),
        }
    }
}

impl Source {
    pub fn load(&self) -> Result<Semigroup> {
        match self {
            Source::Catalog(name) => catalog(name),
            Source::Tn(n) => full_transformation_monoid(*n),
            Source::Ptn(n) => partial_transformation_monoid(*n),
            Source::Opn(n) => orientation_preserving_monoid(*n),
            Source::Rees(path) => {
                let spec = parse_rees_json(&std::fs::read_to_string(path)?)?;
                Ok(rees_matrix(&spec)?.with_name(file_stem(path)))
            }
            Source::Table(path) => Ok(parse_cayley(&std::fs::read_to_string(path)?)?.with_name(file_stem(path))),
        }
    }
}

fn file_stem(path: &std::path::Path) -> String {
    path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| "file".into())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    All,
    Perm,
    Inv,
    H,
    Q,
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "all" => Mode::All,
            "perm" => Mode::Perm,
            "inv" => Mode::Inv,
            "h" => Mode::H,
            "q" => Mode::Q,
            _ => return Err(Error::InvalidStructure(format!("unknown mode {s:?}"))),
        })
    }
}

/// A verified statement with its outcome and a short witness description.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claim {
    pub id: String,
    pub pass: bool,
    pub detail: String,
}

impl Claim {
    pub fn new(id: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Self { id: id.into(), pass, detail: detail.into() }
    }
}

/// `[a, f(a)]` pairs plus the flags certified when the file was written.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchingRecord {
    pub pairs: Vec<[ElementId; 2]>,
    pub flags: MatchingFlags,
}

impl MatchingRecord {
    pub fn from_matching(m: &PermutationMatching) -> Self {
        Self { pairs: m.pairs().into_iter().map(|(a, b)| [a, b]).collect(), flags: m.flags() }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }

    /// Re-checks the pairs against `s`; stored flags must equal the recomputed ones.
    pub fn revalidate(&self, s: &Semigroup) -> (ValidationReport, bool) {
        let mut f = vec![None; s.order().max(self.pairs.iter().map(|p| p[0] + 1).max().unwrap_or(0))];
        let mut duplicate_domain = false;
        for &[a, b] in &self.pairs {
            duplicate_domain |= f[a].replace(b).is_some();
        }
        let report = validate_matching(s, &f);
        let flags_agree = !duplicate_domain && report.flags == Some(self.flags);
        (report, flags_agree)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionRecord {
    pub set: Vec<ElementId>,
    pub inverses: Vec<ElementId>,
    pub set_labels: Vec<String>,
    pub inverse_labels: Vec<String>,
}

impl ObstructionRecord {
    fn new(s: &Semigroup, o: &Obstruction) -> Self {
        Self {
            set: o.set.clone(),
            inverses: o.inverses.clone(),
            set_labels: o.set.iter().map(|&a| s.label(a)).collect(),
            inverse_labels: o.inverses.iter().map(|&a| s.label(a)).collect(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Found,
    None,
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchResult {
    pub kind: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub matching: Option<MatchingRecord>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub obstruction: Option<ObstructionRecord>,
}

impl MatchResult {
    fn found(kind: &str, m: &PermutationMatching) -> Self {
        Self {
            kind: kind.into(),
            status: Status::Found,
            matching: Some(MatchingRecord::from_matching(m)),
            obstruction: None,
        }
    }

    fn status(kind: &str, status: Status) -> Self {
        Self { kind: kind.into(), status, matching: None, obstruction: None }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Descriptor {
    pub name: String,
    pub source: String,
    pub order: usize,
    pub table_backed: bool,
    pub zero: Option<ElementId>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DClassSummary {
    pub id: usize,
    pub size: usize,
    pub r_classes: usize,
    pub l_classes: usize,
    pub h_class_size: usize,
    pub groups: usize,
    pub regular: bool,
    pub square: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GreenSummary {
    pub d_classes: Vec<DClassSummary>,
    pub square: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub schema: u32,
    pub semigroup: Descriptor,
    pub mode: Mode,
    pub regular: bool,
    pub green: GreenSummary,
    pub results: Vec<MatchResult>,
    pub claims: Vec<Claim>,
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("plain data serializes");
        out.push('\n');
        out
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn result(&self, kind: &str) -> Option<&MatchResult> {
        self.results.iter().find(|r| r.kind == kind)
    }

    pub fn all_claims_pass(&self) -> bool {
        self.claims.iter().all(|c| c.pass)
    }
}

fn green_summary(s: &Semigroup) -> GreenSummary {
    let g = s.greens();
    let d_classes = g
        .eggboxes
        .iter()
        .enumerate()
        .map(|(d, egg)| DClassSummary {
            id: d,
            size: g.d_classes[d].len(),
            r_classes: egg.rows.len(),
            l_classes: egg.cols.len(),
            h_class_size: g.h_classes[egg.grid[0][0]].len(),
            groups: egg.grid.iter().flatten().filter(|&&h| g.h_group[h]).count(),
            regular: g.is_regular_class(d),
            square: g.is_square_class(d),
        })
        .collect();
    GreenSummary { d_classes, square: g.is_square() }
}

fn require_generic(s: &Semigroup, what: &str) -> Result<()> {
    if s.order() > PAIR_SCAN_LIMIT {
        return Err(Error::UnsupportedSize(format!(
            "{what} search on {} needs order <= {PAIR_SCAN_LIMIT}, got {}",
            s.name(),
            s.order()
        )));
    }
    Ok(())
}

/// Runs the pipeline selected by `mode` on the semigroup named by `source`.
pub fn analyze(source: &Source, mode: Mode) -> Result<AnalysisReport> {
    let s = source.load()?;
    analyze_loaded(&s, source, mode)
}

pub fn analyze_loaded(s: &Semigroup, source: &Source, mode: Mode) -> Result<AnalysisReport> {
    let wants = |m: Mode| mode == Mode::All || mode == m;
    if wants(Mode::Perm) {
        require_generic(s, "permutation matching")?;
    }
    let regular = s.is_regular();
    let mut results = Vec::new();
    let mut claims = Vec::new();

    if wants(Mode::Perm) {
        match find_permutation_matching(s)? {
            MatchOutcome::Matching(m) => results.push(MatchResult::found("permutation", &m)),
            MatchOutcome::Obstruction(o) => {
                claims.push(Claim::new(
                    "obstruction-genuine",
                    o.is_genuine(s),
                    format!("|A| = {} > |V(A)| = {}", o.set.len(), o.inverses.len()),
                ));
                results.push(MatchResult {
                    kind: "permutation".into(),
                    status: Status::None,
                    matching: None,
                    obstruction: Some(ObstructionRecord::new(s, &o)),
                });
            }
        }
    }
    if wants(Mode::Inv) {
        let found = match source {
            Source::Opn(n) => Some(opn_involution(*n)?.1),
            _ => {
                require_generic(s, "involution matching")?;
                find_involution_matching(s)?
            }
        };
        results.push(match found {
            Some(m) => MatchResult::found("involution", &m),
            None => MatchResult::status("involution", Status::None),
        });
    }
    if wants(Mode::H) {
        if regular {
            require_generic(s, "ℋ-preserving matching")?;
            results.push(match h_preserving_permutation_matching(s)? {
                Some(m) => MatchResult::found("h-preserving", &m),
                None => MatchResult::status("h-preserving", Status::None),
            });
        } else {
            results.push(MatchResult::status("h-preserving", Status::NotApplicable));
        }
    }
    if wants(Mode::Q) {
        match source {
            Source::Tn(n) | Source::Ptn(n) if *n <= 5 => {
                results.push(MatchResult::found("q-preserving", &q_preserving_matching(s, true)?));
            }
            Source::Tn(n) | Source::Ptn(n) => {
                return Err(Error::UnsupportedSize(format!("q-preserving matching needs n <= 5, got {n}")))
            }
            _ => results.push(MatchResult::status("q-preserving", Status::NotApplicable)),
        }
    }

    for r in &results {
        if let Some(record) = &r.matching {
            let (report, flags_agree) = record.revalidate(s);
            claims.push(Claim::new(
                format!("{}-revalidates", r.kind),
                report.ok && report.total && flags_agree,
                format!("{} pairs", record.pairs.len()),
            ));
        }
    }
    if mode == Mode::All && regular {
        if s.order() <= EQUIVALENCE_CHECK_LIMIT {
            let t = theorem16_conditions(s)?;
            claims.push(Claim::new("matching-conditions-equivalent", t.consistent(), format!("{t:?}")));
        }
        let g = s.greens();
        for d in 0..g.d_count() {
            if g.eggboxes[d].grid.iter().flatten().count() <= PAIR_SCAN_LIMIT {
                let t = theorem24_check(s, d)?;
                claims.push(Claim::new(format!("incidence-matching-D{d}"), t.consistent, format!("{t:?}")));
            }
        }
    }

    Ok(AnalysisReport {
        schema: SCHEMA_VERSION,
        semigroup: Descriptor {
            name: s.name().to_string(),
            source: source.to_string(),
            order: s.order(),
            table_backed: s.is_table_backed(),
            zero: s.zero(),
        },
        mode,
        regular,
        green: green_summary(s),
        results,
        claims,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sources_parse() {
        assert_eq!("tn:3".parse::<Source>().unwrap(), Source::Tn(3));
        assert_eq!("example-1.3".parse::<Source>().unwrap(), Source::Catalog("example-1.3".into()));
        assert!("tn:x".parse::<Source>().is_err());
        assert!("zz:1".parse::<Source>().is_err());
        assert_eq!(Source::Opn(5).to_string(), "opn:5");
    }

    #[test]
    fn example_13_report() {
        let r = analyze(&"example-1.3".parse().unwrap(), Mode::All).unwrap();
        let perm = r.result("permutation").unwrap();
        assert_eq!(perm.status, Status::None);
        assert_eq!(perm.obstruction.as_ref().unwrap().set_labels, vec!["(2,2)", "(2,3)"]);
        assert!(r.all_claims_pass(), "{:?}", r.claims);
        assert_eq!(AnalysisReport::from_json(&r.to_json()).unwrap(), r);
    }

    #[test]
    fn reports_are_byte_stable() {
        let a = analyze(&Source::Tn(3), Mode::All).unwrap().to_json();
        let b = analyze(&Source::Tn(3), Mode::All).unwrap().to_json();
        assert_eq!(a, b);
        assert!(a.contains("\"schema\": 1"));
    }

    #[test]
    fn matching_records_revalidate() {
        let s = Source::Tn(3).load().unwrap();
        let r = analyze_loaded(&s, &Source::Tn(3), Mode::Q).unwrap();
        let record = r.result("q-preserving").unwrap().matching.clone().unwrap();
        let back = MatchingRecord::from_json(&record.to_json()).unwrap();
        assert!(back.revalidate(&s).1);
        let mut broken = back.clone();
        broken.pairs[0][1] = broken.pairs[1][1];
        assert!(!broken.revalidate(&s).0.ok);
        let mut lying = back;
        lying.flags.involution = !lying.flags.involution;
        assert!(!lying.revalidate(&s).1);
    }

    #[test]
    fn scale_limits() {
        assert!(matches!(analyze(&Source::Opn(8), Mode::Perm), Err(Error::UnsupportedSize(_))));
        let r = analyze(&Source::Opn(5), Mode::Inv).unwrap();
        let flags = r.result("involution").unwrap().matching.as_ref().unwrap().flags;
        assert!(flags.involution && flags.h_preserving);
    }
}
