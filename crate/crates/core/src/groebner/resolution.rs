//! Minimal graded free resolutions of `R/I` and their Betti tables.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::module::{minimal_generators, syzygies, Vector};
use super::{Ideal, PolyRing};
use crate::error::{Error, Result};

/// `0 → F_p → … → F_1 → F_0 = R`, with `F_i = ⊕ R(-shifts[i][k])`.
/// `maps[i]` lists the images in `F_i` of the basis of `F_{i+1}`.
#[derive(Debug, Clone)]
pub struct Resolution {
    pub shifts: Vec<Vec<u32>>,
    pub maps: Vec<Vec<Vector>>,
}

impl Resolution {
    pub fn length(&self) -> usize {
        self.shifts.len() - 1
    }

    pub fn betti(&self) -> BettiTable {
        let mut entries = BTreeMap::new();
        for (i, s) in self.shifts.iter().enumerate() {
            for &j in s {
                *entries.entry((i, j)).or_insert(0) += 1;
            }
        }
        BettiTable { entries }
    }
}

/// Graded Betti numbers `β_{i,j}` of `R/I`; `β_{0,0} = 1` and `β_{1,·}`
/// counts minimal generators of `I`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BettiTable {
    entries: BTreeMap<(usize, u32), usize>,
}

impl BettiTable {
    pub fn from_triples(triples: &[(usize, u32, usize)]) -> Self {
        let entries = triples
            .iter()
            .filter(|t| t.2 > 0)
            .map(|&(i, j, v)| ((i, j), v))
            .collect();
        BettiTable { entries }
    }

    pub fn get(&self, i: usize, j: u32) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Total Betti number `β_i = Σ_j β_{i,j}`.
    pub fn total(&self, i: usize) -> usize {
        self.entries.iter().filter(|((k, _), _)| *k == i).map(|(_, v)| v).sum()
    }

    pub fn totals(&self) -> Vec<usize> {
        (0..=self.pd()).map(|i| self.total(i)).collect()
    }

    pub fn pd(&self) -> usize {
        self.entries.keys().map(|(i, _)| *i).max().unwrap_or(0)
    }

    pub fn triples(&self) -> Vec<[u64; 3]> {
        self.entries
            .iter()
            .map(|(&(i, j), &v)| [i as u64, j as u64, v as u64])
            .collect()
    }
}

impl Serialize for BettiTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.triples().serialize(s)
    }
}

impl<'de> Deserialize<'de> for BettiTable {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw: Vec<[u64; 3]> = Vec::deserialize(d)?;
        Ok(BettiTable::from_triples(
            &raw.iter()
                .map(|t| (t[0] as usize, t[1] as u32, t[2] as usize))
                .collect::<Vec<_>>(),
        ))
    }
}

/// Macaulay2-style table: columns are homological degrees, rows are `j - i`.
impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pd = self.pd();
        let max_row = self
            .entries
            .keys()
            .map(|&(i, j)| j as usize - i)
            .max()
            .unwrap_or(0);
        let width = self
            .entries
            .values()
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1)
            .max(pd.to_string().len())
            + 1;
        write!(f, "{:>6}", "")?;
        for i in 0..=pd {
            write!(f, "{:>width$}", i)?;
        }
        writeln!(f)?;
        write!(f, "{:>6}", "total:")?;
        for i in 0..=pd {
            write!(f, "{:>width$}", self.total(i))?;
        }
        writeln!(f)?;
        for r in 0..=max_row {
            write!(f, "{:>6}", format!("{r}:"))?;
            for i in 0..=pd {
                match self.get(i, (i + r) as u32) {
                    0 => write!(f, "{:>width$}", ".")?,
                    v => write!(f, "{:>width$}", v)?,
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Minimal free resolution of `R/I` for a proper homogeneous ideal.
///
/// Each step takes the syzygies of the previous minimal generators and
/// immediately extracts a minimal generating set of them, so every
/// differential has entries in the maximal ideal.
pub fn minimal_free_resolution(ideal: &Ideal, ring: &PolyRing) -> Result<Resolution> {
    if !ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    if ideal.generators().iter().any(|g| g.degree() == Some(0)) {
        return Err(Error::UnitIdeal);
    }
    let field = ring.field();
    let mut shifts = vec![vec![0u32]];
    let mut maps: Vec<Vec<Vector>> = Vec::new();
    let gens: Vec<Vector> = ideal.generators().iter().map(|g| Vector::from_poly(g, 0)).collect();
    let mut current = minimal_generators(field, &shifts[0], &gens);
    while !current.is_empty() {
        if maps.len() > ring.nvars() {
            return Err(Error::Internal(format!(
                "resolution longer than the number of variables ({})",
                ring.nvars()
            )));
        }
        let prev = shifts.last().unwrap();
        let degs: Vec<u32> = current.iter().map(|v| v.degree(prev).expect("homogeneous")).collect();
        let syz = syzygies(field, prev, &current);
        let next = minimal_generators(field, &degs, &syz);
        shifts.push(degs);
        maps.push(current);
        current = next;
    }
    Ok(Resolution { shifts, maps })
}
