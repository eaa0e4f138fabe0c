//! Homogeneous linear systems over vertex weights with exact rational
//! arithmetic. A [`ConstraintSystem`] describes a weight space as the set of
//! `w` annihilated by every constraint; [`nullspace`] turns it into a basis.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num::bigint::BigInt;
use num::integer::Integer;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Vertex, VertexSet};

pub type Rational = BigRational;

pub fn rational(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn int(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

/// `Σ coeffs[v]·w(v) = 0`, kept normalized: integer coefficients with gcd 1
/// and a positive coefficient on the smallest vertex. Zero coefficients are
/// never stored.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinearConstraint {
    coeffs: BTreeMap<Vertex, Rational>,
}

impl LinearConstraint {
    /// `None` when every coefficient is zero (the trivial `0 = 0`).
    pub fn new<I: IntoIterator<Item = (Vertex, Rational)>>(terms: I) -> Option<Self> {
        let mut coeffs: BTreeMap<Vertex, Rational> = BTreeMap::new();
        for (v, c) in terms {
            *coeffs.entry(v).or_insert_with(Rational::zero) += c;
        }
        coeffs.retain(|_, c| !c.is_zero());
        if coeffs.is_empty() {
            return None;
        }
        let mut lcm = BigInt::one();
        for c in coeffs.values() {
            lcm = lcm.lcm(c.denom());
        }
        let mut gcd = BigInt::zero();
        for c in coeffs.values() {
            gcd = gcd.gcd(&(c.numer() * (&lcm / c.denom())));
        }
        let lead_negative = coeffs.values().next().expect("nonempty").is_negative();
        let scale = Rational::new(if lead_negative { -lcm } else { lcm }, gcd);
        for c in coeffs.values_mut() {
            *c = &*c * &scale;
        }
        Some(LinearConstraint { coeffs })
    }

    /// `w(lhs) − w(rhs) = 0`. Vertices on both sides cancel.
    pub fn equal_weights(lhs: &VertexSet, rhs: &VertexSet) -> Option<Self> {
        Self::new(lhs.iter().map(|v| (v, int(1))).chain(rhs.iter().map(|v| (v, int(-1)))))
    }

    /// `w(v) = 0`.
    pub fn zero_weight(v: Vertex) -> Self {
        Self::new([(v, int(1))]).expect("nonzero coefficient")
    }

    pub fn coeffs(&self) -> &BTreeMap<Vertex, Rational> {
        &self.coeffs
    }

    pub fn max_vertex(&self) -> Vertex {
        *self.coeffs.keys().next_back().expect("nonempty")
    }

    pub fn evaluate(&self, w: &[Rational]) -> Rational {
        self.coeffs.iter().map(|(&v, c)| c * &w[v]).sum()
    }

    pub fn is_satisfied_by(&self, w: &[Rational]) -> bool {
        self.evaluate(w).is_zero()
    }
}

impl fmt::Debug for LinearConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (v, c) in &self.coeffs {
            let sign = if c.is_negative() { "-" } else if first { "" } else { "+" };
            let mag = c.abs();
            if mag.is_one() {
                write!(f, "{sign}w{v}")?;
            } else {
                write!(f, "{sign}{mag}·w{v}")?;
            }
            first = false;
        }
        write!(f, " = 0")
    }
}

/// Deduplicated list of constraints on weights over `0..n`, in first
/// insertion order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstraintSystem {
    n: usize,
    constraints: Vec<LinearConstraint>,
    seen: BTreeSet<LinearConstraint>,
}

impl ConstraintSystem {
    pub fn new(n: usize) -> Self {
        ConstraintSystem { n, constraints: Vec::new(), seen: BTreeSet::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn constraints(&self) -> &[LinearConstraint] {
        &self.constraints
    }

    pub fn len(&self) -> usize {
        self.constraints.len()
    }

    pub fn is_empty(&self) -> bool {
        self.constraints.is_empty()
    }

    /// Adds a constraint; duplicates and the trivial constraint are dropped.
    /// Returns whether the system grew.
    pub fn push(&mut self, c: Option<LinearConstraint>) -> Result<bool> {
        let Some(c) = c else { return Ok(false) };
        if c.max_vertex() >= self.n {
            return Err(Error::VertexOutOfRange { vertex: c.max_vertex(), n: self.n });
        }
        if self.seen.insert(c.clone()) {
            self.constraints.push(c);
            Ok(true)
        } else {
            Ok(false)
        }
    }

    pub fn extend<I: IntoIterator<Item = LinearConstraint>>(&mut self, cs: I) -> Result<()> {
        for c in cs {
            self.push(Some(c))?;
        }
        Ok(())
    }

    pub fn is_satisfied_by(&self, w: &[Rational]) -> bool {
        w.len() == self.n && self.constraints.iter().all(|c| c.is_satisfied_by(w))
    }

    /// Dense coefficient rows.
    pub fn matrix(&self) -> Vec<Vec<Rational>> {
        self.constraints
            .iter()
            .map(|c| {
                let mut row = vec![Rational::zero(); self.n];
                for (&v, x) in c.coeffs() {
                    row[v] = x.clone();
                }
                row
            })
            .collect()
    }
}

/// Basis of the solution space of a [`ConstraintSystem`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightBasis {
    pub n: usize,
    pub basis: Vec<Vec<Rational>>,
}

impl WeightBasis {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// Whether `w` lies in the span, by rank comparison.
    pub fn contains(&self, w: &[Rational]) -> bool {
        if w.len() != self.n {
            return false;
        }
        let mut rows = self.basis.clone();
        rows.push(w.to_vec());
        rref(&mut rows).len() == self.basis.len()
    }
}

/// Reduces `rows` in place to reduced row echelon form, dropping zero rows.
/// Returns the pivot column of each remaining row.
fn rref(rows: &mut Vec<Vec<Rational>>) -> Vec<usize> {
    let width = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..width {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].recip();
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &factor * p;
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

pub fn rank(sys: &ConstraintSystem) -> usize {
    rref(&mut sys.matrix()).len()
}

/// Basis of `{w : every constraint of sys vanishes on w}` by Gauss–Jordan
/// elimination. One vector per free column, in increasing column order, with
/// a 1 in that column.
pub fn nullspace(sys: &ConstraintSystem) -> WeightBasis {
    let n = sys.n();
    let mut rows = sys.matrix();
    let pivots = rref(&mut rows);
    let is_pivot: BTreeSet<usize> = pivots.iter().copied().collect();
    let basis = (0..n)
        .filter(|c| !is_pivot.contains(c))
        .map(|free| {
            let mut v = vec![Rational::zero(); n];
            v[free] = Rational::one();
            for (row, &pc) in rows.iter().zip(&pivots) {
                v[pc] = -row[free].clone();
            }
            v
        })
        .collect();
    WeightBasis { n, basis }
}

/// Whether two systems on the same vertex range have the same solutions.
pub fn spaces_equal(a: &ConstraintSystem, b: &ConstraintSystem) -> Result<bool> {
    if a.n() != b.n() {
        return Err(Error::DimensionMismatch(a.n(), b.n()));
    }
    Ok(solutions_within(a, b)? && solutions_within(b, a)?)
}

/// Whether every solution of `a` is a solution of `b`.
pub fn solutions_within(a: &ConstraintSystem, b: &ConstraintSystem) -> Result<bool> {
    Ok(solution_outside(a, b)?.is_none())
}

/// A basis vector of the solutions of `a` that violates `b`, if any.
pub fn solution_outside(a: &ConstraintSystem, b: &ConstraintSystem) -> Result<Option<Vec<Rational>>> {
    if a.n() != b.n() {
        return Err(Error::DimensionMismatch(a.n(), b.n()));
    }
    Ok(nullspace(a).basis.into_iter().find(|w| !b.is_satisfied_by(w)))
}

/// w(S).
pub fn evaluate(w: &[Rational], s: &VertexSet) -> Rational {
    s.iter().map(|v| &w[v]).sum()
}

pub fn uniform(n: usize, value: i64) -> Vec<Rational> {
    vec![int(value); n]
}

pub fn format_rational(x: &Rational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s.trim(), "1"),
    };
    let p: BigInt = p.parse().map_err(|_| bad())?;
    let q: BigInt = q.parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(p, q))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstraintJson {
    pub coeffs: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SystemJson {
    pub n: usize,
    pub constraints: Vec<ConstraintJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisJson {
    pub n: usize,
    pub dimension: usize,
    pub basis: Vec<Vec<String>>,
}

impl From<&LinearConstraint> for ConstraintJson {
    fn from(c: &LinearConstraint) -> Self {
        ConstraintJson {
            coeffs: c.coeffs().iter().map(|(v, x)| (v.to_string(), format_rational(x))).collect(),
        }
    }
}

impl From<&ConstraintSystem> for SystemJson {
    fn from(s: &ConstraintSystem) -> Self {
        SystemJson { n: s.n(), constraints: s.constraints().iter().map(ConstraintJson::from).collect() }
    }
}

impl TryFrom<&SystemJson> for ConstraintSystem {
    type Error = Error;

    fn try_from(j: &SystemJson) -> Result<Self> {
        let mut sys = ConstraintSystem::new(j.n);
        for c in &j.constraints {
            let mut terms = Vec::with_capacity(c.coeffs.len());
            for (v, x) in &c.coeffs {
                let v: Vertex = v.parse().map_err(|_| Error::Parse(format!("bad vertex key {v:?}")))?;
                terms.push((v, parse_rational(x)?));
            }
            sys.push(LinearConstraint::new(terms))?;
        }
        Ok(sys)
    }
}

impl From<&WeightBasis> for BasisJson {
    fn from(b: &WeightBasis) -> Self {
        BasisJson {
            n: b.n,
            dimension: b.dimension(),
            basis: b.basis.iter().map(|v| v.iter().map(format_rational).collect()).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eq(n: usize, lhs: &[Vertex], rhs: &[Vertex]) -> Option<LinearConstraint> {
        LinearConstraint::equal_weights(
            &VertexSet::from_vertices(n, lhs.iter().copied()),
            &VertexSet::from_vertices(n, rhs.iter().copied()),
        )
    }

    fn system(n: usize, cs: Vec<Option<LinearConstraint>>) -> ConstraintSystem {
        let mut s = ConstraintSystem::new(n);
        for c in cs {
            s.push(c).unwrap();
        }
        s
    }

    #[test]
    fn nullspace_examples() {
        let p4 = system(4, vec![eq(4, &[0], &[1]), eq(4, &[2], &[3])]);
        assert_eq!(nullspace(&p4).dimension(), 2);
        assert_eq!(nullspace(&ConstraintSystem::new(1)).dimension(), 1);
        let c4 = system(4, vec![eq(4, &[0, 2], &[1, 3])]);
        assert_eq!(nullspace(&c4).dimension(), 3);
    }

    #[test]
    fn basis_vectors_solve_the_system() {
        let s = system(5, vec![eq(5, &[0, 1], &[2]), eq(5, &[3], &[0, 4]), eq(5, &[1], &[4])]);
        let b = nullspace(&s);
        assert_eq!(b.dimension(), 5 - rank(&s));
        for w in &b.basis {
            assert!(s.is_satisfied_by(w));
        }
    }

    #[test]
    fn normalization_and_dedup() {
        let a = LinearConstraint::new([(0, int(2)), (1, int(-2))]).unwrap();
        let b = LinearConstraint::new([(1, rational(1, 3)), (0, rational(-1, 3))]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.coeffs()[&0], int(1));
        assert!(LinearConstraint::new([(0, int(1)), (0, int(-1))]).is_none());
        let mut s = ConstraintSystem::new(2);
        assert!(s.push(Some(a)).unwrap());
        assert!(!s.push(Some(b)).unwrap());
        assert!(!s.push(None).unwrap());
        assert_eq!(s.len(), 1);
    }

    #[test]
    fn push_rejects_out_of_range() {
        let mut s = ConstraintSystem::new(2);
        assert!(s.push(Some(LinearConstraint::zero_weight(2))).is_err());
    }

    #[test]
    fn spaces_equal_examples() {
        let a = system(2, vec![eq(2, &[0], &[1])]);
        let b = system(2, vec![LinearConstraint::new([(0, int(2)), (1, int(-2))])]);
        assert!(spaces_equal(&a, &b).unwrap());
        let z = system(1, vec![Some(LinearConstraint::zero_weight(0))]);
        assert!(!spaces_equal(&z, &ConstraintSystem::new(1)).unwrap());
        assert!(matches!(spaces_equal(&a, &z), Err(Error::DimensionMismatch(2, 1))));
    }

    #[test]
    fn evaluate_examples() {
        let w: Vec<Rational> = [1, 1, 0, -1, -1, 0].iter().map(|&x| int(x)).collect();
        assert_eq!(evaluate(&w, &VertexSet::from_vertices(6, [0, 2, 4])), int(0));
        assert_eq!(evaluate(&w, &VertexSet::new(6)), int(0));
        assert_eq!(evaluate(&uniform(6, 1), &VertexSet::from_vertices(6, [1, 2, 5])), int(3));
    }

    #[test]
    fn rational_strings() {
        assert_eq!(format_rational(&rational(-4, 6)), "-2/3");
        assert_eq!(format_rational(&int(1)), "1/1");
        assert_eq!(parse_rational("-2/3").unwrap(), rational(-2, 3));
        assert_eq!(parse_rational("5").unwrap(), int(5));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn system_json_roundtrip() {
        let s = system(12, vec![eq(12, &[10], &[2, 3]), Some(LinearConstraint::zero_weight(11))]);
        let j = SystemJson::from(&s);
        let text = serde_json::to_string(&j).unwrap();
        assert_eq!(
            text,
            r#"{"n":12,"constraints":[{"coeffs":{"10":"-1/1","2":"1/1","3":"1/1"}},{"coeffs":{"11":"1/1"}}]}"#
        );
        let back = ConstraintSystem::try_from(&serde_json::from_str::<SystemJson>(&text).unwrap()).unwrap();
        assert_eq!(back.constraints(), s.constraints());
    }

    #[test]
    fn basis_membership() {
        let s = system(3, vec![eq(3, &[0], &[1])]);
        let b = nullspace(&s);
        assert!(b.contains(&[int(2), int(2), int(-7)]));
        assert!(!b.contains(&[int(1), int(0), int(0)]));
    }
}
