//! Parameter ranges such as `--n 2..8` and the grids they expand to.

use std::str::FromStr;

use abcgg::families::{Family, FamilySpec};

use crate::FamilyArgs;

/// Inclusive integer range; `5`, `2..8` and `2..=8` are accepted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParamRange {
    lo: usize,
    hi: usize,
}

impl ParamRange {
    pub fn single(&self) -> Option<usize> {
        (self.lo == self.hi).then_some(self.lo)
    }

    fn values(&self) -> Vec<usize> {
        (self.lo..=self.hi).collect()
    }
}

impl FromStr for ParamRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("{t:?} is not a non-negative integer"))
        };
        let (lo, hi) = match s.split_once("..") {
            None => {
                let v = num(s)?;
                (v, v)
            }
            Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        };
        if lo > hi {
            return Err(format!("empty range {s:?}"));
        }
        Ok(ParamRange { lo, hi })
    }
}

fn values(r: Option<&ParamRange>, default: std::ops::RangeInclusive<usize>) -> Vec<usize> {
    r.map(ParamRange::values).unwrap_or_else(|| default.collect())
}

/// Every valid spec in the cartesian product of the given (or default) ranges.
pub fn family_grid(family: Family, a: &FamilyArgs) -> Result<Vec<FamilySpec>, String> {
    let mut specs = Vec::new();
    match family {
        Family::QMn => {
            for m in values(a.m.as_ref(), 2..=6) {
                for n in values(a.n.as_ref(), 2..=6) {
                    specs.push(FamilySpec::QMn { m, n });
                }
            }
        }
        Family::Spiro | Family::Polyphenylene => {
            for q in values(a.q.as_ref(), 3..=8) {
                for h in values(a.h.as_ref(), 1..=q / 2) {
                    for k in values(a.k.as_ref(), 1..=6) {
                        specs.push(if family == Family::Spiro {
                            FamilySpec::Spiro { q, h, k }
                        } else {
                            FamilySpec::Polyphenylene { q, h, k }
                        });
                    }
                }
            }
        }
        Family::Triangulane => {
            for k in values(a.k.as_ref().or(a.n.as_ref()), 1..=4) {
                specs.push(FamilySpec::Triangulane { k });
            }
        }
        Family::DendrimerD3 => {
            for n in values(a.n.as_ref(), 1..=3) {
                specs.push(FamilySpec::DendrimerD3 { n });
            }
        }
        chain_family => {
            for n in values(a.n.as_ref(), 1..=8) {
                specs.push(FamilySpec::chain(chain_family, n).map_err(|e| e.to_string())?);
            }
        }
    }
    let first_error = specs.iter().find_map(|s| s.validate().err());
    specs.retain(|s| s.validate().is_ok());
    match (specs.is_empty(), first_error) {
        (true, Some(e)) => Err(e.to_string()),
        (true, None) => Err(format!("empty grid for {family}")),
        _ => Ok(specs),
    }
}
