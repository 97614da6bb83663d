//! The infinite order: comparing `u^ω` with `v^ω` for finite words.
//!
//! Nothing infinite is built. The outcome comes from comparing `uv` with
//! `vu`; the first position where the two periodic extensions disagree is
//! found by a modular scan that never needs to go past
//! `|u| + |v| - gcd(|u|, |v|)`.

use std::cmp::Ordering;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::word::{self, ensure_nonempty, ensure_same_alphabet, Letter, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OmegaOutcome {
    Less,
    Equal,
    Greater,
}

impl OmegaOutcome {
    pub fn reverse(self) -> Self {
        match self {
            Self::Less => Self::Greater,
            Self::Equal => Self::Equal,
            Self::Greater => Self::Less,
        }
    }
}

impl From<Ordering> for OmegaOutcome {
    fn from(o: Ordering) -> Self {
        match o {
            Ordering::Less => Self::Less,
            Ordering::Equal => Self::Equal,
            Ordering::Greater => Self::Greater,
        }
    }
}

impl From<OmegaOutcome> for Ordering {
    fn from(o: OmegaOutcome) -> Self {
        match o {
            OmegaOutcome::Less => Ordering::Less,
            OmegaOutcome::Equal => Ordering::Equal,
            OmegaOutcome::Greater => Ordering::Greater,
        }
    }
}

/// Result of comparing `u^ω` with `v^ω`.
///
/// Mismatch positions are 1-based. `Equal` carries the common primitive
/// root of `u` and `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OmegaComparison {
    Less { mismatch_position: usize },
    Greater { mismatch_position: usize },
    Equal { common_root: Word },
}

impl OmegaComparison {
    pub fn outcome(&self) -> OmegaOutcome {
        match self {
            Self::Less { .. } => OmegaOutcome::Less,
            Self::Greater { .. } => OmegaOutcome::Greater,
            Self::Equal { .. } => OmegaOutcome::Equal,
        }
    }

    pub fn mismatch_position(&self) -> Option<usize> {
        match self {
            Self::Less { mismatch_position } | Self::Greater { mismatch_position } => Some(*mismatch_position),
            Self::Equal { .. } => None,
        }
    }

    pub fn common_root(&self) -> Option<&Word> {
        match self {
            Self::Equal { common_root } => Some(common_root),
            _ => None,
        }
    }

    pub fn is_less(&self) -> bool {
        matches!(self, Self::Less { .. })
    }
}

/// `|u| + |v| - gcd(|u|, |v|)`: no comparison position lies beyond it.
pub fn fine_wilf_bound(u_len: usize, v_len: usize) -> usize {
    u_len + v_len - u_len.gcd(&v_len)
}

/// Ordering of `u^ω` against `v^ω`, via `uv` against `vu`.
pub(crate) fn cmp_letters(u: &[Letter], v: &[Letter]) -> Ordering {
    u.iter().chain(v).cmp(v.iter().chain(u))
}

pub(crate) fn less(u: &[Letter], v: &[Letter]) -> bool {
    cmp_letters(u, v) == Ordering::Less
}

pub(crate) fn mismatch_letters(u: &[Letter], v: &[Letter]) -> Option<usize> {
    (0..fine_wilf_bound(u.len(), v.len()))
        .find(|&i| u[i % u.len()] != v[i % v.len()])
        .map(|i| i + 1)
}

fn check_pair(u: &Word, v: &Word) -> Result<()> {
    ensure_same_alphabet(u, v)?;
    ensure_nonempty(u)?;
    ensure_nonempty(v)
}

/// Compares `u^ω` with `v^ω`.
pub fn omega_cmp(u: &Word, v: &Word) -> Result<OmegaComparison> {
    check_pair(u, v)?;
    let position = || {
        mismatch_letters(u.letters(), v.letters())
            .ok_or_else(|| Error::InternalError(format!("{u}v ≠ v{u} but no mismatch found for v = {v}")))
    };
    Ok(match cmp_letters(u.letters(), v.letters()) {
        Ordering::Less => OmegaComparison::Less {
            mismatch_position: position()?,
        },
        Ordering::Greater => OmegaComparison::Greater {
            mismatch_position: position()?,
        },
        Ordering::Equal => OmegaComparison::Equal {
            common_root: word::primitive_root(u)?.0,
        },
    })
}

/// Smallest 1-based `k` where `u^ω` and `v^ω` differ; `None` iff they are equal.
pub fn omega_mismatch_position(u: &Word, v: &Word) -> Result<Option<usize>> {
    check_pair(u, v)?;
    Ok(mismatch_letters(u.letters(), v.letters()))
}

/// Whether the comparison of `u^ω` and `v^ω` is decided inside the first
/// copy of `v`, which happens exactly when `v` is not a fractional power of `u`.
pub fn comparison_within_first_factor(u: &Word, v: &Word) -> Result<bool> {
    match omega_mismatch_position(u, v)? {
        Some(k) => Ok(k <= v.len()),
        None => Err(Error::OmegaEqual {
            u: u.to_string(),
            v: v.to_string(),
        }),
    }
}

/// The six equivalent conditions on a pair `(u, v)`, each evaluated on its own.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SixConditions {
    /// `u^ω < v^ω`
    pub c1: bool,
    /// `(uv)^ω < v^ω`
    pub c2: bool,
    /// `u^ω < (vu)^ω`
    pub c3: bool,
    /// `(uv)^ω < (vu)^ω`
    pub c4: bool,
    /// `u^ω < (uv)^ω`
    pub c5: bool,
    /// `(vu)^ω < v^ω`
    pub c6: bool,
}

impl SixConditions {
    pub fn as_array(&self) -> [bool; 6] {
        [self.c1, self.c2, self.c3, self.c4, self.c5, self.c6]
    }

    pub fn all_equal(&self) -> bool {
        let a = self.as_array();
        a.iter().all(|&c| c == a[0])
    }

    pub const LABELS: [&'static str; 6] = [
        "u^ω < v^ω",
        "(uv)^ω < v^ω",
        "u^ω < (vu)^ω",
        "(uv)^ω < (vu)^ω",
        "u^ω < (uv)^ω",
        "(vu)^ω < v^ω",
    ];
}

pub fn six_conditions(u: &Word, v: &Word) -> Result<SixConditions> {
    check_pair(u, v)?;
    let uv = u.concat(v)?;
    let vu = v.concat(u)?;
    let lt = |x: &Word, y: &Word| omega_cmp(x, y).map(|c| c.is_less());
    Ok(SixConditions {
        c1: lt(u, v)?,
        c2: lt(&uv, v)?,
        c3: lt(u, &vu)?,
        c4: lt(&uv, &vu)?,
        c5: lt(u, &uv)?,
        c6: lt(&vu, v)?,
    })
}

/// Checks `u^ω < (uv)^ω < (vu)^ω < v^ω` for a pair with `u^ω < v^ω`.
pub fn bergman_chain(u: &Word, v: &Word) -> Result<bool> {
    if !omega_cmp(u, v)?.is_less() {
        return Err(Error::PreconditionFailed(format!("{u}^ω < {v}^ω does not hold")));
    }
    let uv = u.concat(v)?;
    let vu = v.concat(u)?;
    Ok(omega_cmp(u, &uv)?.is_less() && omega_cmp(&uv, &vu)?.is_less() && omega_cmp(&vu, v)?.is_less())
}
