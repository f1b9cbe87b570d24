//! Closed-form index values for the named families, and the edge degree-class
//! counts their derivations rely on.
//!
//! Expressions are evaluated as stated, term by term, with sums in ascending
//! order. Nothing here is corrected against direct computation; that is the
//! verifier's job.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::{DegreeClasses, Family, FamilySpec};
use crate::indices::IndexKind;
use crate::scalar::Scalar;

/// Parity branch of a formula split on `n = 2k` / `n = 2k + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "parity", content = "k", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Branch {
    Even(usize),
    Odd(usize),
}

impl Branch {
    pub fn of(n: usize) -> Self {
        if n.is_multiple_of(2) {
            Branch::Even(n / 2)
        } else {
            Branch::Odd(n / 2)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ClosedForm<T> {
    pub spec: FamilySpec,
    pub index: IndexKind,
    pub value: T,
    pub branch: Option<Branch>,
}

/// Evaluates the closed form for `index` on `spec`.
///
/// Fails with `NoTheorem` when the pair has no formula and with
/// `OutsideDomain` when the formula is stated only for larger parameters.
pub fn closed_form<T: Scalar>(spec: &FamilySpec, index: IndexKind) -> Result<ClosedForm<T>> {
    spec.validate()?;
    let no_theorem = || Error::NoTheorem {
        family: spec.family().to_string(),
        index: index.to_string(),
    };
    let plain = |value: T| ClosedForm {
        spec: *spec,
        index,
        value,
        branch: None,
    };
    match index {
        IndexKind::Wiener => Err(no_theorem()),
        IndexKind::Abc => abc_form(spec).map(plain),
        IndexKind::AbcGg => match *spec {
            FamilySpec::QMn { m, n } => Ok(plain(q_mn_gg(m, n))),
            FamilySpec::Triangulane { k } => Ok(plain(triangulane_gg(k))),
            _ => {
                let n = spec.chain_order().ok_or_else(no_theorem)?;
                let branch = Branch::of(n);
                Ok(ClosedForm {
                    spec: *spec,
                    index,
                    value: chain_gg(spec.family(), branch),
                    branch: Some(branch),
                })
            }
        },
    }
}

fn int<T: Scalar>(x: i64) -> T {
    T::from_int(x)
}

/// `sqrt(num / den)` on integers.
fn sqrt_ratio<T: Scalar>(num: i64, den: i64) -> T {
    (int::<T>(num) / int::<T>(den)).sqrt()
}

fn sqrt_int<T: Scalar>(x: i64) -> T {
    int::<T>(x).sqrt()
}

fn abc_form<T: Scalar>(spec: &FamilySpec) -> Result<T> {
    let s2 = sqrt_int::<T>(2);
    let s6 = sqrt_int::<T>(6);
    let four = int::<T>(4);
    let three = int::<T>(3);
    let chain_abc_domain = |n: usize| {
        if n < 2 {
            Err(Error::OutsideDomain(format!(
                "{spec}: the ABC formula is stated for n >= 2"
            )))
        } else {
            Ok(n as i64)
        }
    };
    Ok(match *spec {
        FamilySpec::QMn { m, n } => {
            let (m, n) = (m as i64, n as i64);
            int::<T>(m * (m - 1)) / int::<T>(2 * (m + n - 2)) * sqrt_int::<T>(2 * (m + n - 3))
                + int::<T>(m) * (int::<T>(n) / int::<T>(2) - T::one()) * sqrt_int::<T>(2 * (n - 2))
                + int::<T>(m * (n - 1)) * sqrt_ratio::<T>(m + 2 * n - 5, n * n + m * n - m - 3 * n + 2)
        }
        FamilySpec::Spiro { q, h, k } => {
            let (q, k) = (q as i64, k as i64);
            if h >= 2 || k == 1 {
                int::<T>(q * k) / s2
            } else {
                int::<T>(q * k - k + 2) / s2 + int::<T>(k - 2) * s6 / four
            }
        }
        FamilySpec::Polyphenylene { q, h, k } => {
            let (q, k) = (q as i64, k as i64);
            if h >= 2 || k == 1 {
                int::<T>(2 * (k - 1)) / three + int::<T>(q * k) / s2
            } else {
                int::<T>(4 * k - 6) / three + int::<T>(q * k - k + 2) / s2
            }
        }
        FamilySpec::ChainTriangular { n } => {
            let n = chain_abc_domain(n)?;
            int::<T>(2 * n + 2) / s2 + int::<T>(n - 2) * s6 / four
        }
        FamilySpec::ParaSquare { n } => int::<T>(2 * chain_abc_domain(n)?) * s2,
        FamilySpec::OrthoSquare { n } => {
            let n = chain_abc_domain(n)?;
            int::<T>(3 * n + 2) / s2 + int::<T>(n - 2) * s6 / four
        }
        FamilySpec::OrthoHex { n } => {
            let n = chain_abc_domain(n)?;
            int::<T>(5 * n + 2) / s2 + int::<T>(n - 2) * s6 / four
        }
        FamilySpec::ParaHex { n } | FamilySpec::MetaHex { n } => {
            int::<T>(3 * chain_abc_domain(n)?) * s2
        }
        FamilySpec::Triangulane { k } => {
            let k = k as u32;
            int::<T>(9 * 2i64.pow(k - 1)) * s2 / int::<T>(2)
                + int::<T>(9 * 2i64.pow(k) - 6) * s6 / four
        }
        FamilySpec::DendrimerD3 { n } => {
            let p = 2i64.pow(n as u32);
            int::<T>(6 * p - 4) + int::<T>(18 * p - 9) * s2
        }
    })
}

fn q_mn_gg<T: Scalar>(m: usize, n: usize) -> T {
    let (m, n) = (m as i64, n as i64);
    int::<T>(m * (m - 1)) / int::<T>(2 * n) * sqrt_int::<T>(2 * n - 2)
        + int::<T>(m * (n - 1)) * sqrt_ratio::<T>(n * (m - 1), n * (m - 1) + 1)
}

fn sum<T: Scalar>(k: i64, term: impl Fn(i64) -> T) -> T {
    (1..=k).fold(T::zero(), |acc, i| acc + term(i))
}

fn square_even<T: Scalar>(k: i64) -> T {
    sum(k, |i| sqrt_ratio(6 * k - 1, (6 * k - 3 * i + 2) * (3 * i - 1)))
}

fn square_odd<T: Scalar>(k: i64) -> T {
    sum(k, |i| sqrt_ratio(6 * k + 2, (6 * k - 3 * i + 5) * (3 * i - 1)))
}

fn hex_even<T: Scalar>(k: i64) -> T {
    sum(k, |i| sqrt_ratio(10 * k - 1, (10 * k - 5 * i + 3) * (5 * i - 2)))
}

fn hex_odd<T: Scalar>(k: i64) -> T {
    sum(k, |i| sqrt_ratio(10 * k + 4, (10 * k - 5 * i + 8) * (5 * i - 2)))
}

fn chain_gg<T: Scalar>(family: Family, branch: Branch) -> T {
    let t = int::<T>;
    let s2 = sqrt_int::<T>(2);
    match branch {
        Branch::Even(k) => {
            let k = k as i64;
            match family {
                Family::ChainTriangular => {
                    t(2) * sum(k, |i| {
                        sqrt_ratio::<T>(2 * i - 2, 2 * i - 1)
                            + sqrt_ratio::<T>(4 * k - 2 * i, 4 * k - 2 * i + 1)
                            + sqrt_ratio::<T>(4 * k - 2, (4 * k - 2 * i + 1) * (2 * i - 1))
                    })
                }
                Family::ParaSquare => t(8) * square_even::<T>(k),
                Family::OrthoSquare => t(2 * k) * s2 + t(4) * square_even::<T>(k),
                Family::OrthoHex => {
                    t(4) * hex_even::<T>(k) + t(8 * k) * sqrt_ratio::<T>(10 * k - 1, 30 * k - 6)
                }
                Family::ParaHex => t(12) * hex_even::<T>(k),
                Family::MetaHex => {
                    t(8) * hex_even::<T>(k) + t(4 * k) * sqrt_ratio::<T>(10 * k - 1, 30 * k - 6)
                }
                _ => unreachable!("not a chain family"),
            }
        }
        Branch::Odd(k) => {
            let k = k as i64;
            let tail_sq = sqrt_int::<T>(6 * k + 2) / t(3 * k + 2);
            let tail_hex = sqrt_int::<T>(10 * k + 4) / t(5 * k + 3);
            match family {
                Family::ChainTriangular => {
                    t(2) * sum(k, |i| {
                        sqrt_ratio::<T>(2 * i - 2, 2 * i - 1)
                            + sqrt_ratio::<T>(4 * k - 2 * i + 2, 4 * k - 2 * i + 3)
                            + sqrt_ratio::<T>(4 * k, (4 * k - 2 * i + 3) * (2 * i - 1))
                    }) + t(2) * sqrt_ratio::<T>(2 * k, 2 * k + 1)
                        + t(2) * sqrt_int::<T>(k) / t(2 * k + 1)
                }
                Family::ParaSquare => t(8) * square_odd::<T>(k) + t(4) * tail_sq,
                Family::OrthoSquare => {
                    t(2 * k + 1) * s2 + t(2) * tail_sq + t(4) * square_odd::<T>(k)
                }
                Family::OrthoHex => {
                    t(4) * hex_odd::<T>(k)
                        + t(8 * k + 4) * sqrt_ratio::<T>(10 * k + 4, 30 * k + 9)
                        + t(2) * tail_hex
                }
                Family::ParaHex => t(12) * hex_odd::<T>(k) + t(6) * tail_hex,
                Family::MetaHex => {
                    t(8) * hex_odd::<T>(k)
                        + t(2 * k + 2) * sqrt_ratio::<T>(10 * k + 4, 30 * k + 9)
                        + t(4) * tail_hex
                }
                _ => unreachable!("not a chain family"),
            }
        }
    }
}

fn triangulane_gg<T: Scalar>(n: usize) -> T {
    let p = |e: i64| 2i64.pow(e as u32);
    let n = n as i64;
    let t = int::<T>;
    let head = t(6) * sqrt_ratio::<T>(p(n + 2) + p(n) - 4, (p(n + 2) - 1) * (p(n) - 1))
        + t(3) * sqrt_int::<T>(p(n + 2) - 4) / t(p(n + 1) - 1);
    let middle = (2..=n).fold(T::zero(), |acc, i| {
        let s: i64 = (0..=i - 2).map(|j| p(n - j)).sum();
        acc + t(3 * p(i))
            * sqrt_ratio::<T>(
                p(n + 2) + s + p(n - i + 1) - 4,
                (p(n + 2) - 1 + s) * (p(n - i + 1) - 1),
            )
    });
    let tail = (1..=n).fold(T::zero(), |acc, i| {
        acc + t(3 * p(i - 1)) * (sqrt_int::<T>(p(n - i + 2) - 4) / t(p(n - i + 1) - 1))
    });
    head + middle + tail
}

/// Edge degree-class counts asserted by the counting arguments, keyed like
/// [`crate::families::edge_degree_classes`]. Zero counts are omitted.
pub fn proof_census(spec: &FamilySpec) -> Result<DegreeClasses> {
    spec.validate()?;
    let entries: Vec<((usize, usize), i64)> = match *spec {
        FamilySpec::QMn { m, n } => {
            let (mi, ni) = (m as i64, n as i64);
            vec![
                ((m + n - 2, m + n - 2), mi * (mi - 1) / 2),
                ((m + n - 2, n - 1), mi * (ni - 1)),
                ((n - 1, n - 1), mi * (ni - 1) * (ni - 2) / 2),
            ]
        }
        FamilySpec::Spiro { q, h, k } => {
            let (q, k) = (q as i64, k as i64);
            if h >= 2 || k == 1 {
                vec![((4, 2), 4 * (k - 1)), ((2, 2), q * k - 4 * (k - 1))]
            } else {
                vec![((4, 4), k - 2), ((4, 2), 2 * k), ((2, 2), q * k - 3 * k + 2)]
            }
        }
        FamilySpec::Polyphenylene { q, h, k } => {
            let (q, k) = (q as i64, k as i64);
            if h >= 2 || k == 1 {
                vec![
                    ((3, 3), k - 1),
                    ((3, 2), 4 * (k - 1)),
                    ((2, 2), q * k - 4 * (k - 1)),
                ]
            } else {
                vec![((3, 3), 2 * k - 3), ((3, 2), 2 * k), ((2, 2), q * k - 3 * k + 2)]
            }
        }
        FamilySpec::Triangulane { k } => {
            let p = 2i64.pow(k as u32);
            let inner: i64 = (0..k as u32).map(|j| 3 * 2i64.pow(j)).sum();
            vec![((4, 4), 3 + 3 * inner), ((4, 2), 3 * p), ((2, 2), 3 * p / 2)]
        }
        FamilySpec::DendrimerD3 { n } => {
            let p = 2i64.pow(n as u32);
            vec![((3, 3), 9 * p - 6), ((3, 2), 18 * p - 12), ((2, 2), 18 * p - 6)]
        }
        _ => {
            return Err(Error::NoTheorem {
                family: spec.family().to_string(),
                index: "degree census".into(),
            })
        }
    };
    let mut out = DegreeClasses::new();
    for (key, count) in entries {
        if count < 0 {
            return Err(Error::OutsideDomain(format!(
                "{spec}: negative count {count} for class {key:?}"
            )));
        }
        if count > 0 {
            *out.entry(key).or_insert(0) += count as usize;
        }
    }
    Ok(out)
}
