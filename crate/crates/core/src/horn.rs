//! The inductive Horn recursion.
//!
//! `Horn(r, n, s)` is the set of `s`-tuples of `r`-subsets of `[n]` with
//! `edim >= 0` such that, when `r > 1`, `edim(IJ) >= 0` for every
//! `J in Horn(d, r, s)` with `0 < d < r` and `edim J = 0`. For `s >= 2` this
//! set coincides with the set of intersecting tuples.
//!
//! [`HornTable`] memoizes whole levels `(d, r, s)`. A level is built once,
//! bottom-up in `d`, and is shared immutably afterwards, so one table can
//! serve parallel membership queries.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use serde::{Deserialize, Serialize};

use crate::combinatorics::{enumerate_tuples, PositionTuple};
use crate::error::{shape_err, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HornEntry {
    pub tuple: PositionTuple,
    pub edim: i64,
}

/// Why a tuple is not in the Horn set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// The base inequality `edim >= 0` fails.
    NegativeEdim { edim: i64 },
    /// `J in Horn(d, r, s)` with `edim J = 0` and `edim(TJ) < 0`.
    Inequality { d: usize, j: PositionTuple, edim_composed: i64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HornVerdict {
    pub member: bool,
    pub edim: i64,
    pub violation: Option<Violation>,
}

impl HornVerdict {
    /// Re-derives the certificate from scratch against `tuple`.
    pub fn recheck(&self, tuple: &PositionTuple, table: &HornTable) -> bool {
        match &self.violation {
            None => self.member,
            Some(Violation::NegativeEdim { edim }) => !self.member && tuple.edim() == *edim && *edim < 0,
            Some(Violation::Inequality { d, j, edim_composed }) => {
                !self.member
                    && j.r() == *d
                    && j.edim() == 0
                    && table.contains(j)
                    && tuple.compose(j).map(|c| c.edim()).ok() == Some(*edim_composed)
                    && *edim_composed < 0
            }
        }
    }
}

type Level = Arc<Vec<HornEntry>>;

/// Memoized map `(r, n, s) -> Horn(r, n, s)`.
#[derive(Default)]
pub struct HornTable {
    levels: RwLock<HashMap<(usize, usize, usize), Level>>,
}

impl HornTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Number of completed levels.
    pub fn cached_levels(&self) -> usize {
        self.levels.read().expect("horn table lock").len()
    }

    /// All of `Horn(r, n, s)` in lexicographic tuple order, each with its edim.
    pub fn level(&self, r: usize, n: usize, s: usize) -> Level {
        if let Some(level) = self.levels.read().expect("horn table lock").get(&(r, n, s)) {
            return Arc::clone(level);
        }
        // make sure every lower level exists before touching this one
        for d in 1..r {
            self.level(d, r, s);
        }
        // r > n or s = 0 give an empty level
        let entries: Vec<HornEntry> = enumerate_tuples(r, n, s)
            .unwrap_or_default()
            .into_iter()
            .filter_map(|tuple| {
                let verdict = self.check_built(&tuple);
                verdict.member.then_some(HornEntry { edim: verdict.edim, tuple })
            })
            .collect();
        let level = Arc::new(entries);
        self.levels
            .write()
            .expect("horn table lock")
            .entry((r, n, s))
            .or_insert(level)
            .clone()
    }

    /// `Horn_0(d, r, s)`: the `edim = 0` slice of `Horn(d, r, s)`. For `d = r`
    /// this is the single tuple `([r], ..., [r])`.
    pub fn horn0(&self, d: usize, r: usize, s: usize) -> Vec<PositionTuple> {
        assert!(d >= 1 && d <= r, "horn0 needs 0 < d <= r");
        self.level(d, r, s)
            .iter()
            .filter(|e| e.edim == 0)
            .map(|e| e.tuple.clone())
            .collect()
    }

    pub fn contains(&self, tuple: &PositionTuple) -> bool {
        if tuple.r() > tuple.n() {
            return false;
        }
        let level = self.level(tuple.r(), tuple.n(), tuple.s());
        level.binary_search_by(|e| e.tuple.cmp(tuple)).is_ok()
    }

    /// Membership test with a re-checkable certificate on failure.
    pub fn member(&self, tuple: &PositionTuple) -> Result<HornVerdict> {
        if tuple.r() > tuple.n() {
            return Err(shape_err!("cardinality {} exceeds ground {}", tuple.r(), tuple.n()));
        }
        for d in 1..tuple.r() {
            self.level(d, tuple.r(), tuple.s());
        }
        Ok(self.check_built(tuple))
    }

    /// Alias of [`HornTable::member`] that decides whether the tuple is
    /// intersecting. For `s = 1` the recursion is evaluated literally.
    pub fn is_intersecting(&self, tuple: &PositionTuple) -> Result<bool> {
        Ok(self.member(tuple)?.member)
    }

    // Assumes every level (d, r, s) with d < r is already cached.
    fn check_built(&self, tuple: &PositionTuple) -> HornVerdict {
        let edim = tuple.edim();
        if edim < 0 {
            return HornVerdict { member: false, edim, violation: Some(Violation::NegativeEdim { edim }) };
        }
        let (r, s) = (tuple.r(), tuple.s());
        let levels = self.levels.read().expect("horn table lock");
        for d in 1..r {
            let lower = levels.get(&(d, r, s)).expect("lower levels are built first");
            for entry in lower.iter().filter(|e| e.edim == 0) {
                let composed = tuple.compose(&entry.tuple).expect("shapes agree").edim();
                if composed < 0 {
                    return HornVerdict {
                        member: false,
                        edim,
                        violation: Some(Violation::Inequality {
                            d,
                            j: entry.tuple.clone(),
                            edim_composed: composed,
                        }),
                    };
                }
            }
        }
        HornVerdict { member: true, edim, violation: None }
    }

    /// All Horn tuples grouped by permutation class: classes sorted by their
    /// canonical representative, members of a class sorted lexicographically.
    pub fn enumerate(&self, r: usize, n: usize, s: usize) -> Vec<HornEntry> {
        let mut entries: Vec<(PositionTuple, HornEntry)> = self
            .level(r, n, s)
            .iter()
            .map(|e| (e.tuple.canonical(), e.clone()))
            .collect();
        entries.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.tuple.cmp(&b.1.tuple)));
        entries.into_iter().map(|(_, e)| e).collect()
    }

    /// Canonical representatives of the permutation classes of `Horn(r, n, s)`.
    pub fn classes(&self, r: usize, n: usize, s: usize) -> Vec<HornEntry> {
        let mut reps: Vec<HornEntry> = self
            .level(r, n, s)
            .iter()
            .filter(|e| e.tuple.is_canonical())
            .cloned()
            .collect();
        reps.sort_by(|a, b| a.tuple.cmp(&b.tuple));
        reps
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::CardSubset;

    fn t(n: usize, parts: &[&[usize]]) -> PositionTuple {
        PositionTuple::from_lists(n, &parts.iter().map(|p| p.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn member_examples() {
        let table = HornTable::new();
        let bad = t(4, &[&[1, 4], &[2, 3]]);
        let verdict = table.member(&bad).unwrap();
        assert!(!verdict.member);
        assert_eq!(
            verdict.violation,
            Some(Violation::Inequality { d: 1, j: t(2, &[&[1], &[2]]), edim_composed: -1 })
        );
        assert!(verdict.recheck(&bad, &table));

        assert!(table.member(&t(6, &[&[2, 4, 6], &[2, 4, 6], &[2, 4, 6]])).unwrap().member);
        let v = table.member(&t(2, &[&[1], &[2], &[2]])).unwrap();
        assert!(v.member);
        assert_eq!(v.edim, 0);
    }

    #[test]
    fn negative_edim_certificate() {
        let table = HornTable::new();
        let x = t(3, &[&[1], &[1], &[3]]);
        let v = table.member(&x).unwrap();
        assert_eq!(v.violation, Some(Violation::NegativeEdim { edim: -2 }));
        assert!(v.recheck(&x, &table));
    }

    #[test]
    fn intersecting_examples() {
        let table = HornTable::new();
        assert!(table.is_intersecting(&t(4, &[&[1, 4], &[2, 4]])).unwrap());
        assert!(!table.is_intersecting(&t(4, &[&[1, 4], &[2, 3]])).unwrap());
        // (J_1, top, ..., top) is intersecting for every J_1
        for j1 in crate::enumerate_subsets(2, 5).unwrap() {
            let top = CardSubset::terminal(2, 5);
            let x = PositionTuple::new(vec![j1, top.clone(), top]).unwrap();
            assert!(table.is_intersecting(&x).unwrap());
        }
    }

    #[test]
    fn enumerate_examples() {
        let table = HornTable::new();
        let classes = table.classes(1, 2, 3);
        let got: Vec<(String, i64)> = classes.iter().map(|e| (e.tuple.to_string(), e.edim)).collect();
        assert_eq!(got, vec![("({1}, {2}, {2})".to_string(), 0), ("({2}, {2}, {2})".to_string(), 1)]);
        assert_eq!(table.enumerate(1, 2, 3).len(), 4);

        let edims: Vec<i64> = table.classes(3, 4, 3).iter().map(|e| e.edim).collect();
        assert_eq!(edims, vec![0, 0, 1, 0, 1, 2, 3]);

        let full = table.enumerate(3, 3, 4);
        assert_eq!(full.len(), 1);
        assert_eq!(full[0].tuple, PositionTuple::full(3, 4));
        assert_eq!(full[0].edim, 0);
    }

    #[test]
    fn horn0_examples() {
        let table = HornTable::new();
        assert_eq!(table.horn0(1, 2, 3), t(2, &[&[1], &[2], &[2]]).permutation_closure());

        let mut expected: Vec<PositionTuple> = [
            t(3, &[&[1, 2], &[2, 3], &[2, 3]]),
            t(3, &[&[1, 3], &[1, 3], &[2, 3]]),
        ]
        .iter()
        .flat_map(|x| x.permutation_closure())
        .collect();
        expected.sort();
        assert_eq!(table.horn0(2, 3, 3), expected);

        let mut expected: Vec<PositionTuple> = [
            t(4, &[&[1], &[4], &[4]]),
            t(4, &[&[2], &[3], &[4]]),
            t(4, &[&[3], &[3], &[3]]),
        ]
        .iter()
        .flat_map(|x| x.permutation_closure())
        .collect();
        expected.sort();
        assert_eq!(table.horn0(1, 4, 3), expected);

        assert_eq!(table.horn0(3, 3, 2), vec![PositionTuple::full(3, 2)]);
    }

    #[test]
    fn warm_and_cold_tables_agree() {
        let warm = HornTable::new();
        warm.level(2, 5, 3);
        for x in enumerate_tuples(2, 4, 3).unwrap() {
            let cold = HornTable::new();
            assert_eq!(cold.member(&x).unwrap(), warm.member(&x).unwrap());
        }
    }

    #[test]
    fn single_part_tuples_always_pass() {
        let table = HornTable::new();
        for x in enumerate_tuples(2, 4, 1).unwrap() {
            assert!(table.member(&x).unwrap().member);
        }
    }
}
