//! Cross-checks between the combinatorial formulas and the brute-force
//! oracles, over one tuple or a whole Grassmannian.

use gitquot_core::{
    criterion_components, criterion_runs, is_semistable_nonempty, semistable_witness,
    singular_components, singular_components_oracle, singular_components_via_runs, ColumnTuple,
    Grassmannian, Result,
};
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum OracleCheck {
    /// Hook removal vs. the tuple formula vs. the stabilizer-orbit oracle.
    Singular,
    /// `w >= w_{r,n}` vs. the standard monomial witness search.
    Semistable,
    /// Both of the above, plus agreement of the two smoothness criteria.
    All,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub check: &'static str,
    pub w: ColumnTuple,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OracleSummary {
    pub singular_checked: usize,
    pub semistable_checked: usize,
    pub criteria_checked: usize,
    pub mismatches: Vec<Mismatch>,
}

impl OracleSummary {
    pub fn agrees(&self) -> bool {
        self.mismatches.is_empty()
    }

    fn absorb(&mut self, other: OracleSummary) {
        self.singular_checked += other.singular_checked;
        self.semistable_checked += other.semistable_checked;
        self.criteria_checked += other.criteria_checked;
        self.mismatches.extend(other.mismatches);
    }
}

/// Runs `check` on `w`, or on every tuple of `ctx` when `w` is `None`.
///
/// Semistability and criteria checks need `gcd(r, n) = 1`.
pub fn run_oracles(
    ctx: &Grassmannian,
    w: Option<&ColumnTuple>,
    check: OracleCheck,
) -> Result<OracleSummary> {
    if check != OracleCheck::Singular {
        ctx.require_coprime()?;
    }
    let tuples: Vec<ColumnTuple> = match w {
        Some(w) => vec![w.clone()],
        None => ctx.tuples().collect(),
    };
    let parts = tuples
        .par_iter()
        .map(|w| check_one(ctx, w, check))
        .collect::<Result<Vec<_>>>()?;
    let mut summary = OracleSummary::default();
    for part in parts {
        summary.absorb(part);
    }
    Ok(summary)
}

fn check_one(ctx: &Grassmannian, w: &ColumnTuple, check: OracleCheck) -> Result<OracleSummary> {
    let mut mismatches = Vec::new();
    let mut mismatch = |check, detail| {
        mismatches.push(Mismatch {
            check,
            w: w.clone(),
            detail,
        })
    };
    let mut singular = 0;
    let mut semistable = 0;
    let mut criteria = 0;

    if matches!(check, OracleCheck::Singular | OracleCheck::All) {
        singular += 1;
        let by_runs = singular_components(w);
        let by_rows = singular_components_via_runs(w);
        let oracle = singular_components_oracle(w);
        if by_runs.component_set() != by_rows.component_set() {
            mismatch(
                "singular",
                format!(
                    "hook removal {:?} vs tuple formula {:?}",
                    by_runs.components, by_rows.components
                ),
            );
        }
        if by_runs.component_set() != oracle {
            mismatch(
                "singular",
                format!(
                    "hook removal {:?} vs orbit oracle {:?}",
                    by_runs.components, oracle
                ),
            );
        }
    }

    if matches!(check, OracleCheck::Semistable | OracleCheck::All) {
        semistable += 1;
        let expected = is_semistable_nonempty(w, ctx)?;
        let witness = semistable_witness(w, ctx, 1)?;
        match witness {
            Some(ref chain) if !chain.certifies(w) => mismatch(
                "semistable",
                "witness chain fails its own invariants".to_owned(),
            ),
            _ => {}
        }
        if witness.is_some() != expected {
            mismatch(
                "semistable",
                format!(
                    "w >= w_(r,n) is {expected} but witness found is {}",
                    witness.is_some()
                ),
            );
        }
    }

    if check == OracleCheck::All && is_semistable_nonempty(w, ctx)? {
        criteria += 1;
        let a = criterion_components(w, ctx)?;
        let b = criterion_runs(w, ctx)?;
        if a.holds != b.holds {
            mismatch(
                "criteria",
                format!(
                    "components criterion {} vs row criterion {}",
                    a.holds, b.holds
                ),
            );
        }
    }

    Ok(OracleSummary {
        singular_checked: singular,
        semistable_checked: semistable,
        criteria_checked: criteria,
        mismatches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn whole_grassmannian_agrees() {
        let ctx = Grassmannian::new(3, 7).unwrap();
        let summary = run_oracles(&ctx, None, OracleCheck::All).unwrap();
        assert!(summary.agrees(), "{:?}", summary.mismatches);
        assert_eq!(summary.singular_checked, 35);
        assert_eq!(summary.semistable_checked, 35);
        assert!(summary.criteria_checked > 0);
    }

    #[test]
    fn singular_allowed_without_coprimality() {
        let ctx = Grassmannian::new(2, 6).unwrap();
        let summary = run_oracles(&ctx, None, OracleCheck::Singular).unwrap();
        assert!(summary.agrees());
        assert_eq!(summary.singular_checked, 15);
        assert!(run_oracles(&ctx, None, OracleCheck::Semistable).is_err());
        assert!(run_oracles(&ctx, None, OracleCheck::All).is_err());
    }

    #[test]
    fn single_tuple() {
        let ctx = Grassmannian::new(4, 9).unwrap();
        let w = ctx.tuple(vec![5, 7, 8, 9]).unwrap();
        let summary = run_oracles(&ctx, Some(&w), OracleCheck::All).unwrap();
        assert!(summary.agrees());
        assert_eq!(summary.criteria_checked, 1);
    }
}
