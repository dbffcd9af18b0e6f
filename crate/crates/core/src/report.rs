//! Checker verdicts and the exhaustive basis-tuple scan behind every checker.

use std::fmt;

use rayon::prelude::*;

use crate::linalg::Vector;

/// Whether a slot ranges over the algebra or over the module.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sort {
    Alg,
    Mod,
}

impl Sort {
    pub fn keyword(self) -> &'static str {
        match self {
            Sort::Alg => "alg",
            Sort::Mod => "mod",
        }
    }
}

impl fmt::Display for Sort {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

/// A basis vector of the algebra (`e_i`) or of the module (`f_i`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisIndex {
    pub sort: Sort,
    pub index: usize,
}

impl BasisIndex {
    pub fn alg(index: usize) -> Self {
        BasisIndex { sort: Sort::Alg, index }
    }

    pub fn module(index: usize) -> Self {
        BasisIndex { sort: Sort::Mod, index }
    }

    /// Label from the supplied basis names, falling back to `e{i}` / `f{i}`.
    pub fn label(&self, alg_labels: Option<&[String]>, mod_labels: Option<&[String]>) -> String {
        let (names, prefix) = match self.sort {
            Sort::Alg => (alg_labels, "e"),
            Sort::Mod => (mod_labels, "f"),
        };
        names
            .and_then(|l| l.get(self.index))
            .cloned()
            .unwrap_or_else(|| format!("{prefix}{}", self.index))
    }
}

impl fmt::Display for BasisIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label(None, None))
    }
}

/// One basis tuple at which a named identity does not vanish.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub identity: String,
    pub tuple: Vec<BasisIndex>,
    /// Nonzero value of `lhs - rhs` at the tuple.
    pub defect: Vector,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tuple: Vec<String> = self.tuple.iter().map(ToString::to_string).collect();
        write!(f, "{} at ({}): defect {}", self.identity, tuple.join(", "), self.defect)
    }
}

/// Verdict of a checker. Passing iff there are no witnesses.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Report {
    witnesses: Vec<Witness>,
}

impl Report {
    pub fn pass() -> Self {
        Report::default()
    }

    pub fn from_witnesses(witnesses: Vec<Witness>) -> Self {
        debug_assert!(witnesses.iter().all(|w| !w.defect.is_zero()));
        Report { witnesses }
    }

    pub fn ok(&self) -> bool {
        self.witnesses.is_empty()
    }

    pub fn witnesses(&self) -> &[Witness] {
        &self.witnesses
    }

    pub fn into_witnesses(self) -> Vec<Witness> {
        self.witnesses
    }

    /// Appends `other`'s witnesses, keeping at most `cap` in total.
    pub fn merge(mut self, other: Report, cap: Option<usize>) -> Report {
        self.witnesses.extend(other.witnesses);
        if let Some(cap) = cap {
            self.witnesses.truncate(cap);
        }
        self
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ok() {
            return write!(f, "ok");
        }
        writeln!(f, "FAIL ({} witness{})", self.witnesses.len(), if self.witnesses.len() == 1 { "" } else { "es" })?;
        for w in &self.witnesses {
            writeln!(f, "  {w}")?;
        }
        Ok(())
    }
}

pub const DEFAULT_WITNESS_CAP: usize = 10;

/// Options shared by all checkers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckOptions {
    /// Maximum number of witnesses to report; `None` reports all of them.
    pub max_witnesses: Option<usize>,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions { max_witnesses: Some(DEFAULT_WITNESS_CAP) }
    }
}

impl CheckOptions {
    pub fn all_witnesses() -> Self {
        CheckOptions { max_witnesses: None }
    }
}

/// Evaluates `eval` on every basis tuple drawn from `slots` and records the
/// nonzero defects it returns.
///
/// Tuples are visited in lexicographic order; within a tuple, defects keep the
/// order `eval` returns them in. The first slot is split across worker
/// threads and the per-slot results are concatenated in index order, so the
/// witness list does not depend on scheduling.
pub(crate) fn scan<F>(slots: &[(Sort, usize)], cap: Option<usize>, eval: F) -> Report
where
    F: Fn(&[usize]) -> Vec<(String, Vector)> + Sync,
{
    let cap_reached = |ws: &Vec<Witness>| cap.is_some_and(|c| ws.len() >= c);
    let record = |tuple: &[usize], out: &mut Vec<Witness>| {
        for (identity, defect) in eval(tuple) {
            if !defect.is_zero() {
                out.push(Witness {
                    identity,
                    tuple: tuple.iter().zip(slots).map(|(&index, &(sort, _))| BasisIndex { sort, index }).collect(),
                    defect,
                });
            }
        }
    };

    if slots.is_empty() {
        let mut out = Vec::new();
        record(&[], &mut out);
        return Report::from_witnesses(out);
    }
    if slots.iter().any(|&(_, n)| n == 0) {
        return Report::pass();
    }

    let rest: Vec<usize> = slots[1..].iter().map(|&(_, n)| n).collect();
    let chunks: Vec<Vec<Witness>> = (0..slots[0].1)
        .into_par_iter()
        .map(|first| {
            let mut out = Vec::new();
            let mut tuple = vec![0usize; slots.len()];
            tuple[0] = first;
            loop {
                record(&tuple, &mut out);
                if cap_reached(&out) {
                    break;
                }
                // odometer over the remaining slots
                let mut pos = rest.len();
                loop {
                    if pos == 0 {
                        return out;
                    }
                    pos -= 1;
                    tuple[pos + 1] += 1;
                    if tuple[pos + 1] < rest[pos] {
                        break;
                    }
                    tuple[pos + 1] = 0;
                }
            }
            out
        })
        .collect();

    let mut witnesses: Vec<Witness> = chunks.into_iter().flatten().collect();
    if let Some(c) = cap {
        witnesses.truncate(c);
    }
    Report::from_witnesses(witnesses)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    fn defect_if(cond: bool) -> Vector {
        if cond {
            Vector::from(vec![Scalar::one()])
        } else {
            Vector::zeros(1)
        }
    }

    #[test]
    fn scan_visits_tuples_in_lexicographic_order() {
        let slots = [(Sort::Alg, 3), (Sort::Mod, 2), (Sort::Alg, 2)];
        let report = scan(&slots, None, |t| vec![("all".into(), defect_if(true)), ("none".into(), defect_if(t[0] > 9))]);
        let tuples: Vec<Vec<usize>> = report.witnesses().iter().map(|w| w.tuple.iter().map(|b| b.index).collect()).collect();
        let mut expected = Vec::new();
        for i in 0..3 {
            for j in 0..2 {
                for k in 0..2 {
                    expected.push(vec![i, j, k]);
                }
            }
        }
        assert_eq!(tuples, expected);
        assert_eq!(report.witnesses()[0].tuple[1].sort, Sort::Mod);
    }

    #[test]
    fn scan_respects_cap_and_empty_slots() {
        let slots = [(Sort::Alg, 4), (Sort::Alg, 4)];
        let report = scan(&slots, Some(3), |t| vec![("x".into(), defect_if(t[1] == 2))]);
        assert_eq!(report.witnesses().len(), 3);
        assert_eq!(report.witnesses()[1].tuple, vec![BasisIndex::alg(1), BasisIndex::alg(2)]);
        assert!(scan(&[(Sort::Alg, 0), (Sort::Mod, 3)], None, |_| vec![("x".into(), defect_if(true))]).ok());
        assert!(!scan(&[], None, |_| vec![("x".into(), defect_if(true))]).ok());
    }
}
