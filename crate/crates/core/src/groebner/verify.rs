//! End-to-end Cohen–Macaulay check of an orbit closure for equioriented
//! type A, and the formula-only survey over all orbits of a Dynkin quiver.

use serde::{Deserialize, Serialize};

use super::hilbert::depth_lower_bound;
use super::rank_ideal::rank_condition_ideal;
use super::resolution::{minimal_free_resolution, BettiTable};
use super::{buchberger, hilbert_dimension};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::homology::{orbit_dim, pd_formula};
use crate::quiver::{rep_space_dim, DimVector, Quiver};
use crate::representation::Representation;
use crate::roots::DynkinContext;

pub const MAX_VARIABLES: usize = 12;
pub const MAX_GENERATORS: usize = 200;
/// Largest `l` for which the random regular-sequence depth check runs.
pub const DEPTH_CHECK_VARIABLES: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CmReport {
    pub field: String,
    pub l: usize,
    pub variables: Vec<String>,
    pub generators: Vec<String>,
    pub betti: BettiTable,
    /// Projective dimension of `R/I` read from the minimal resolution.
    pub pd: usize,
    pub pd_formula: i64,
    pub dim: usize,
    pub orbit_dim: usize,
    pub depth: usize,
    pub ht: usize,
    pub grade: usize,
    pub cm: bool,
    pub perfect: bool,
    pub cm_iff_pd_formula: bool,
    pub auslander_buchsbaum: bool,
    /// Length of a regular sequence of random linear forms, when `l` is small.
    pub depth_lower_bound: Option<usize>,
    pub assumption: String,
}

/// Rank-condition ideal → Gröbner basis → dimension → minimal resolution →
/// depth, height, grade and the CM / pd comparison.
pub fn verify_cm(m: &Representation) -> Result<CmReport> {
    let l = rep_space_dim(m.quiver(), m.dims());
    if l > MAX_VARIABLES {
        return Err(Error::Guardrail(format!(
            "{l} variables exceeds the limit of {MAX_VARIABLES}"
        )));
    }
    let (ring, ideal) = rank_condition_ideal(m)?;
    if ideal.generators().len() > MAX_GENERATORS {
        return Err(Error::Guardrail(format!(
            "{} generators exceeds the limit of {MAX_GENERATORS}",
            ideal.generators().len()
        )));
    }
    let gb = buchberger(&ideal, &ring);
    let dim = hilbert_dimension(&gb, &ring);
    let expected = orbit_dim(m)?;
    if dim != expected {
        return Err(Error::CrossCheck(format!(
            "ideal has dimension {dim} but the orbit has dimension {expected}"
        )));
    }
    let betti = minimal_free_resolution(&ideal, &ring)?.betti();
    let pd = betti.pd();
    if pd > l {
        return Err(Error::Internal(format!("pd {pd} exceeds the number of variables {l}")));
    }
    let depth = l - pd;
    let ht = l - dim;
    let grade = ht;
    let cm = depth == dim;
    let formula = pd_formula(m);
    let depth_bound = (l <= DEPTH_CHECK_VARIABLES).then(|| depth_lower_bound(&ideal, &ring, 0x5eed, 6));
    if let Some(b) = depth_bound {
        if b > depth {
            return Err(Error::CrossCheck(format!(
                "found a regular sequence of length {b} but depth is {depth}"
            )));
        }
    }
    Ok(CmReport {
        field: m.field().to_string(),
        l,
        variables: ring.names().to_vec(),
        generators: ideal.generators().iter().map(|g| ring.format(g)).collect(),
        betti,
        pd,
        pd_formula: formula,
        dim,
        orbit_dim: expected,
        depth,
        ht,
        grade,
        cm,
        perfect: grade == pd,
        cm_iff_pd_formula: cm == (pd as i64 == formula),
        auslander_buchsbaum: pd + depth == l && (!cm || dim == depth),
        depth_lower_bound: depth_bound,
        assumption: "rank conditions are taken to generate the full vanishing ideal; only dim = orbit_dim is checked".into(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurveyRow {
    pub label: String,
    pub orbit_dim: usize,
    pub ext1_dim: usize,
    pub pd_formula: i64,
    pub open: bool,
    pub closed: bool,
}

/// The pd formula over every orbit of `(Q, d)`, without any resolution.
pub fn pd_formula_survey(q: &Quiver, d: &DimVector) -> Result<Vec<SurveyRow>> {
    let ctx = DynkinContext::new(q, Field::Rational)?;
    pd_formula_survey_with(&ctx, d)
}

pub fn pd_formula_survey_with(ctx: &DynkinContext, d: &DimVector) -> Result<Vec<SurveyRow>> {
    ctx.enumerate_orbits(d)?
        .iter()
        .map(|label| {
            let m = ctx.build(label)?;
            let od = orbit_dim(&m)?;
            let l = rep_space_dim(ctx.quiver(), d);
            Ok(SurveyRow {
                label: label.to_string(),
                orbit_dim: od,
                ext1_dim: l - od,
                pd_formula: pd_formula(&m),
                open: od == l,
                closed: m.is_zero_point(),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Matrix;

    fn rep(n: usize, dims: &[usize], maps: Vec<Matrix>) -> Representation {
        Representation::new(Quiver::linear_a(n), Field::Rational, DimVector(dims.to_vec()), maps).unwrap()
    }

    #[test]
    fn rank_one_two_by_two() {
        let r = verify_cm(&rep(2, &[2, 2], vec![Matrix::from_ints(2, 2, &[1, 0, 0, 0])])).unwrap();
        assert_eq!((r.pd, r.dim, r.depth, r.pd_formula), (1, 3, 3, 1));
        assert!(r.cm && r.cm_iff_pd_formula && r.perfect && r.auslander_buchsbaum);
    }

    #[test]
    fn zero_maps() {
        let r = verify_cm(&rep(2, &[1, 1], vec![Matrix::zeros(1, 1)])).unwrap();
        assert_eq!((r.pd, r.dim, r.depth, r.pd_formula), (1, 0, 0, 1));
        assert!(r.cm);
        assert_eq!(r.depth_lower_bound, Some(0));
        let r = verify_cm(&rep(3, &[1, 1, 1], vec![Matrix::zeros(1, 1), Matrix::zeros(1, 1)])).unwrap();
        assert_eq!((r.pd, r.dim, r.pd_formula), (2, 0, 2));
        assert!(r.cm && r.cm_iff_pd_formula);
    }

    #[test]
    fn guardrail() {
        let m = Representation::zero(&Quiver::linear_a(2), Field::Rational, DimVector(vec![4, 4])).unwrap();
        assert!(matches!(verify_cm(&m), Err(Error::Guardrail(_))));
    }

    #[test]
    fn survey_rows() {
        let rows = pd_formula_survey(&Quiver::linear_a(2), &DimVector(vec![2, 2])).unwrap();
        let pds: Vec<i64> = rows.iter().map(|r| r.pd_formula).collect();
        assert_eq!(pds, vec![0, 1, 4]);
        let empty = pd_formula_survey(&Quiver::linear_a(2), &DimVector(vec![0, 0])).unwrap();
        assert_eq!(empty.len(), 1);
        assert_eq!(empty[0].pd_formula, 0);
    }
}
