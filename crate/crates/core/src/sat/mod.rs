//! CNF instances split into two clause lists, the shape shared by MONOTONE
//! SAT, DSAT and DMSAT, plus their validators and file formats.
//!
//! Literals are signed 1-based variable indices: `3` is x_3, `-3` its
//! negation.

pub mod reductions;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Literal = i32;
pub type Clause = Vec<Literal>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CnfKind {
    Generic,
    Monotone,
    Dsat,
    Dmsat,
}

impl fmt::Display for CnfKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CnfKind::Generic => "generic",
            CnfKind::Monotone => "monotone",
            CnfKind::Dsat => "dsat",
            CnfKind::Dmsat => "dmsat",
        })
    }
}

impl FromStr for CnfKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "generic" => Ok(CnfKind::Generic),
            "monotone" => Ok(CnfKind::Monotone),
            "dsat" => Ok(CnfKind::Dsat),
            "dmsat" => Ok(CnfKind::Dmsat),
            _ => Err(Error::Parse(format!("unknown CNF kind {s:?}"))),
        }
    }
}

/// Variables x_1..x_n and clause lists C1, C2.
///
/// The partition is stored rather than inferred from literal signs, so a
/// malformed MONOTONE/DMSAT instance can be represented and then rejected by
/// [`validate`]. DSAT and generic instances keep everything in C1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CnfInstance {
    n_vars: usize,
    c1: Vec<Clause>,
    c2: Vec<Clause>,
    kind: CnfKind,
}

/// Sorts by variable, positive before negative, and drops repeats.
fn normalize_clause(mut c: Clause) -> Clause {
    c.sort_by_key(|&l| (l.unsigned_abs(), l < 0));
    c.dedup();
    c
}

impl CnfInstance {
    /// Checks the structural invariants shared by every kind: literals name
    /// variables in `1..=n_vars`, and no clause holds a variable together
    /// with its negation. Kind-specific rules are left to [`validate`].
    pub fn new(n_vars: usize, c1: Vec<Clause>, c2: Vec<Clause>, kind: CnfKind) -> Result<Self> {
        let c1: Vec<Clause> = c1.into_iter().map(normalize_clause).collect();
        let c2: Vec<Clause> = c2.into_iter().map(normalize_clause).collect();
        let mut problems = Vec::new();
        for (name, list) in [("C1", &c1), ("C2", &c2)] {
            for (j, c) in list.iter().enumerate() {
                for &l in c {
                    if l == 0 || l.unsigned_abs() as usize > n_vars {
                        problems.push(format!("{name}[{j}]: literal {l} outside 1..={n_vars}"));
                    }
                }
                if c.windows(2).any(|w| w[0] == -w[1]) {
                    problems.push(format!("{name}[{j}]: contains a variable and its negation"));
                }
            }
        }
        if problems.is_empty() {
            Ok(CnfInstance { n_vars, c1, c2, kind })
        } else {
            Err(Error::InvalidInstance(problems))
        }
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn c1(&self) -> &[Clause] {
        &self.c1
    }

    pub fn c2(&self) -> &[Clause] {
        &self.c2
    }

    pub fn kind(&self) -> CnfKind {
        self.kind
    }

    pub fn with_kind(mut self, kind: CnfKind) -> Self {
        self.kind = kind;
        self
    }

    /// C = C1 ∪ C2 in storage order.
    pub fn clauses(&self) -> impl Iterator<Item = &Clause> {
        self.c1.iter().chain(self.c2.iter())
    }

    pub fn clause_count(&self) -> usize {
        self.c1.len() + self.c2.len()
    }

    /// All clauses as a sorted multiset, for order-insensitive comparison.
    pub fn clause_multiset(&self) -> Vec<Clause> {
        let mut all: Vec<Clause> = self.clauses().cloned().collect();
        all.sort();
        all
    }

    pub fn is_satisfied_by(&self, a: &Assignment) -> bool {
        a.len() == self.n_vars && self.clauses().all(|c| a.satisfies(c))
    }
}

/// A truth assignment Φ over x_1..x_n.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Assignment(Vec<bool>);

impl Assignment {
    pub fn new(values: Vec<bool>) -> Self {
        Assignment(values)
    }

    /// Variables listed (1-based) are true, all others false.
    pub fn from_true_vars(n: usize, true_vars: &[usize]) -> Self {
        let mut v = vec![false; n];
        for &i in true_vars {
            v[i - 1] = true;
        }
        Assignment(v)
    }

    pub fn values(&self) -> &[bool] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Φ(x_i), 1-based.
    pub fn get(&self, var: usize) -> bool {
        self.0[var - 1]
    }

    pub fn literal(&self, l: Literal) -> bool {
        let v = self.get(l.unsigned_abs() as usize);
        if l > 0 {
            v
        } else {
            !v
        }
    }

    pub fn satisfies(&self, c: &[Literal]) -> bool {
        c.iter().any(|&l| self.literal(l))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CnfReport {
    pub violations: Vec<String>,
}

impl CnfReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn into_result(self) -> Result<()> {
        if self.is_valid() {
            Ok(())
        } else {
            Err(Error::InvalidInstance(self.violations))
        }
    }
}

fn common_literals(a: &[Literal], b: &[Literal]) -> usize {
    a.iter().filter(|l| b.contains(l)).count()
}

/// Checks `inst` against the definition of `kind`, reporting every broken
/// condition rather than stopping at the first.
///
/// DSAT's third condition is read as conditional: only clause pairs that
/// already share a literal are checked for a complementary pair.
pub fn validate(inst: &CnfInstance, kind: CnfKind) -> CnfReport {
    let mut v = Vec::new();
    let sign_check = |v: &mut Vec<String>, name: &str, list: &[Clause], positive: bool| {
        for (j, c) in list.iter().enumerate() {
            if c.iter().any(|&l| (l > 0) != positive) {
                let want = if positive { "variables" } else { "negated variables" };
                v.push(format!("{name}[{j}] {c:?}: literals must all be {want}"));
            }
        }
    };
    match kind {
        CnfKind::Generic => {}
        CnfKind::Monotone => {
            sign_check(&mut v, "C1", &inst.c1, true);
            sign_check(&mut v, "C2", &inst.c2, false);
        }
        CnfKind::Dsat => {
            let all: Vec<&Clause> = inst.clauses().collect();
            for (j, c) in all.iter().enumerate() {
                if !(2..=3).contains(&c.len()) {
                    v.push(format!("clause {j} {c:?}: must contain 2 or 3 literals"));
                }
            }
            for i in 0..all.len() {
                for j in i + 1..all.len() {
                    let (a, b) = (all[i], all[j]);
                    let common = common_literals(a, b);
                    if common > 1 {
                        v.push(format!("clauses {i} {a:?} and {j} {b:?}: {common} common literals"));
                    }
                    if common >= 1 && a.iter().any(|l| b.contains(&-l)) {
                        v.push(format!(
                            "clauses {i} {a:?} and {j} {b:?}: share a literal and hold a complementary pair"
                        ));
                    }
                }
            }
        }
        CnfKind::Dmsat => {
            sign_check(&mut v, "C1", &inst.c1, true);
            sign_check(&mut v, "C2", &inst.c2, false);
            for (j, c) in inst.c1.iter().enumerate() {
                if !(2..=3).contains(&c.len()) {
                    v.push(format!("C1[{j}] {c:?}: must contain 2 or 3 literals"));
                }
            }
            for (j, c) in inst.c2.iter().enumerate() {
                if c.len() != 2 {
                    v.push(format!("C2[{j}] {c:?}: must contain 2 literals"));
                }
            }
            for i in 0..inst.c1.len() {
                for j in i + 1..inst.c1.len() {
                    let common = common_literals(&inst.c1[i], &inst.c1[j]);
                    if common > 1 {
                        v.push(format!("C1[{i}] and C1[{j}]: {common} common literals"));
                    }
                }
            }
            for i in 0..inst.c2.len() {
                for j in i + 1..inst.c2.len() {
                    if common_literals(&inst.c2[i], &inst.c2[j]) > 0 {
                        v.push(format!("C2[{i}] {:?} and C2[{j}] {:?}: not disjoint", inst.c2[i], inst.c2[j]));
                    }
                }
            }
        }
    }
    CnfReport { violations: v }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CnfJson {
    pub n_vars: usize,
    pub c1: Vec<Clause>,
    #[serde(default)]
    pub c2: Vec<Clause>,
    pub kind: CnfKind,
}

impl From<&CnfInstance> for CnfJson {
    fn from(i: &CnfInstance) -> Self {
        CnfJson { n_vars: i.n_vars, c1: i.c1.clone(), c2: i.c2.clone(), kind: i.kind }
    }
}

impl TryFrom<CnfJson> for CnfInstance {
    type Error = Error;

    fn try_from(j: CnfJson) -> Result<Self> {
        CnfInstance::new(j.n_vars, j.c1, j.c2, j.kind)
    }
}

pub fn cnf_to_json(inst: &CnfInstance) -> String {
    serde_json::to_string(&CnfJson::from(inst)).expect("cnf json is always serializable")
}

pub fn cnf_from_json(text: &str) -> Result<CnfInstance> {
    CnfInstance::try_from(serde_json::from_str::<CnfJson>(text)?)
}

/// DIMACS `p cnf` text, C1 clauses first.
pub fn to_dimacs(inst: &CnfInstance) -> String {
    let mut out = format!("c kind {}\np cnf {} {}\n", inst.kind, inst.n_vars, inst.clause_count());
    for c in inst.clauses() {
        for l in c {
            out.push_str(&l.to_string());
            out.push(' ');
        }
        out.push_str("0\n");
    }
    out
}

/// Reads DIMACS text as an instance of `kind`.
///
/// For MONOTONE and DMSAT the C1/C2 split is recovered from literal signs:
/// all-negative clauses go to C2, everything else to C1. The result must
/// validate as `kind`.
pub fn from_dimacs(text: &str, kind: CnfKind) -> Result<CnfInstance> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses: Vec<Clause> = Vec::new();
    let mut current: Clause = Vec::new();
    for line in text.lines().map(str::trim) {
        if line.is_empty() || line.starts_with('c') || line.starts_with('%') {
            continue;
        }
        if let Some(rest) = line.strip_prefix('p') {
            let parts: Vec<&str> = rest.split_whitespace().collect();
            match parts.as_slice() {
                ["cnf", n, m] => {
                    let parse = |t: &str| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad header {line:?}")));
                    header = Some((parse(n)?, parse(m)?));
                }
                _ => return Err(Error::Parse(format!("bad header {line:?}"))),
            }
            continue;
        }
        for tok in line.split_whitespace() {
            let l: Literal = tok.parse().map_err(|_| Error::Parse(format!("bad literal {tok:?}")))?;
            if l == 0 {
                clauses.push(std::mem::take(&mut current));
            } else {
                current.push(l);
            }
        }
    }
    if !current.is_empty() {
        clauses.push(current);
    }
    let (n, m) = header.ok_or_else(|| Error::Parse("missing `p cnf` header".into()))?;
    if clauses.len() != m {
        return Err(Error::Parse(format!("header announces {m} clauses, found {}", clauses.len())));
    }
    let (c1, c2) = match kind {
        CnfKind::Monotone | CnfKind::Dmsat => {
            clauses.into_iter().partition(|c| c.is_empty() || c.iter().any(|&l| l > 0))
        }
        CnfKind::Generic | CnfKind::Dsat => (clauses, Vec::new()),
    };
    let inst = CnfInstance::new(n, c1, c2, kind)?;
    validate(&inst, kind).into_result()?;
    Ok(inst)
}

/// Reads JSON or DIMACS by sniffing the first non-blank character. The kind
/// for DIMACS input comes from `dimacs_kind`.
pub fn parse_cnf(text: &str, dimacs_kind: CnfKind) -> Result<CnfInstance> {
    if text.trim_start().starts_with('{') {
        cnf_from_json(text)
    } else {
        from_dimacs(text, dimacs_kind)
    }
}

/// Variables that occur in at least one clause.
pub fn used_variables(inst: &CnfInstance) -> BTreeSet<usize> {
    inst.clauses().flatten().map(|l| l.unsigned_abs() as usize).collect()
}
