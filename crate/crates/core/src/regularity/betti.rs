use std::collections::BTreeMap;
use std::fmt;

use crate::poly::FieldKind;

/// Graded Betti numbers `β_{i,j}` of a quotient `S/I`, with the field they
/// were computed over. Only nonzero entries are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    field: FieldKind,
    entries: BTreeMap<(usize, usize), u64>,
}

impl BettiTable {
    pub fn new(field: FieldKind) -> Self {
        BettiTable {
            field,
            entries: BTreeMap::new(),
        }
    }

    pub fn field(&self) -> FieldKind {
        self.field
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn set(&mut self, i: usize, j: usize, value: u64) {
        if value == 0 {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), value);
        }
    }

    pub fn add(&mut self, i: usize, j: usize, value: u64) {
        let v = self.get(i, j) + value;
        self.set(i, j, v);
    }

    /// Nonzero entries `((i, j), β_{i,j})` in increasing `(i, j)` order.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    /// True for the zero module, i.e. `I` the unit ideal.
    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// `max{j - i : β_{i,j} != 0}`; `None` for the zero module.
    pub fn regularity(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, j)| j - i).max()
    }

    pub fn projective_dimension(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, _)| i).max()
    }

    /// `sum_j β_{i,j}`.
    pub fn total(&self, i: usize) -> u64 {
        self.entries
            .iter()
            .filter(|(&(a, _), _)| a == i)
            .map(|(_, &v)| v)
            .sum()
    }

    /// Same numbers, regardless of the field tag.
    pub fn same_numbers(&self, other: &BettiTable) -> bool {
        self.entries == other.entries
    }

    /// Dense CSV: one row per homological degree `i`, one column per `j - i`.
    pub fn to_csv(&self) -> String {
        let rows = self.projective_dimension().map_or(0, |p| p + 1);
        let cols = self.regularity().map_or(0, |r| r + 1);
        let mut out = String::from("i");
        for c in 0..cols {
            out.push_str(&format!(",{c}"));
        }
        out.push('\n');
        for i in 0..rows {
            out.push_str(&i.to_string());
            for c in 0..cols {
                out.push_str(&format!(",{}", self.get(i, i + c)));
            }
            out.push('\n');
        }
        out
    }
}

/// Betti diagram with rows `j - i` and columns `i`, zeros shown as `.`.
impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (Some(pd), Some(reg)) = (self.projective_dimension(), self.regularity()) else {
            return writeln!(f, "zero module");
        };
        let cells: Vec<Vec<String>> = (0..=reg)
            .map(|r| {
                (0..=pd)
                    .map(|i| match self.get(i, i + r) {
                        0 => ".".to_string(),
                        v => v.to_string(),
                    })
                    .collect()
            })
            .collect();
        let totals: Vec<String> = (0..=pd).map(|i| self.total(i).to_string()).collect();
        let width = cells
            .iter()
            .flatten()
            .chain(&totals)
            .map(|s| s.len())
            .max()
            .unwrap_or(1);
        let label = (reg.to_string().len() + 1).max(6);
        write!(f, "{:>label$}", "total:")?;
        for t in &totals {
            write!(f, " {t:>width$}")?;
        }
        writeln!(f)?;
        for (r, row) in cells.iter().enumerate() {
            write!(f, "{:>label$}", format!("{r}:"))?;
            for c in row {
                write!(f, " {c:>width$}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reading_off_invariants() {
        let mut b = BettiTable::new(FieldKind::DEFAULT);
        assert!(b.is_zero());
        assert_eq!(b.regularity(), None);
        b.set(0, 0, 1);
        b.set(1, 2, 2);
        b.set(2, 4, 1);
        b.add(2, 4, 0);
        assert_eq!(b.regularity(), Some(2));
        assert_eq!(b.projective_dimension(), Some(2));
        assert_eq!(b.total(1), 2);
        assert_eq!(b.to_csv(), "i,0,1,2\n0,1,0,0\n1,0,2,0\n2,0,0,1\n");
        let shown = b.to_string();
        assert!(shown.starts_with("total: 1 2 1\n"), "{shown}");
        let mut other = BettiTable::new(FieldKind::Rational);
        for (k, v) in b.entries() {
            other.set(k.0, k.1, v);
        }
        assert!(other.same_numbers(&b));
        assert_ne!(other, b);
    }
}
