//! Brute-force reference implementations and the per-word theorem verifier.
//!
//! Nothing here calls the fast paths it is meant to check: the ω comparison
//! materializes both periodic extensions, Lyndon-ness is decided by
//! comparing against every proper rotation, the factorization is found by
//! exhaustive search and the left Lyndon tree by its recursive definition.

use std::cmp::Ordering;
use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::lyndon::{self, LyndonDefinition, LyndonFactorization};
use crate::omega::{self, OmegaComparison};
use crate::pstd;
use crate::tree::{self, Direction, MagmaTree, NodeAddress};
use crate::word::{self, ensure_nonempty, ensure_same_alphabet, Letter, OrderedAlphabet, Word};

/// Strictly smaller than every proper rotation (hence primitive and minimal).
pub fn is_lyndon_naive(s: &[Letter]) -> bool {
    let n = s.len();
    n > 0
        && (1..n).all(|k| {
            let rotation: Vec<Letter> = s[k..].iter().chain(&s[..k]).copied().collect();
            s < rotation.as_slice()
        })
}

fn naive_root_len(s: &[Letter]) -> usize {
    (1..=s.len())
        .find(|&d| s.len().is_multiple_of(d) && s.chunks(d).all(|c| c == &s[..d]))
        .expect("the word is a power of itself")
}

/// ω comparison by materializing `|u| + |v|` letters of each extension.
pub fn omega_cmp_naive(u: &Word, v: &Word) -> Result<OmegaComparison> {
    ensure_same_alphabet(u, v)?;
    ensure_nonempty(u)?;
    ensure_nonempty(v)?;
    let uv = u.concat(v)?;
    let vu = v.concat(u)?;
    if uv == vu {
        let p = naive_root_len(u.letters());
        return Ok(OmegaComparison::Equal {
            common_root: u.prefix(p),
        });
    }
    let len = u.len() + v.len();
    let x = u.periodic_prefix(len);
    let y = v.periodic_prefix(len);
    let i = x
        .letters()
        .iter()
        .zip(y.letters())
        .position(|(a, b)| a != b)
        .ok_or_else(|| Error::InternalError(format!("{u}^ω and {v}^ω agree on {len} letters but uv ≠ vu")))?;
    let mismatch_position = i + 1;
    Ok(if x.letters()[i] < y.letters()[i] {
        OmegaComparison::Less { mismatch_position }
    } else {
        OmegaComparison::Greater { mismatch_position }
    })
}

/// Exhaustive search over all factorizations into Lyndon words, keeping the
/// lexicographically nonincreasing ones; exactly one must survive.
pub fn lyndon_factorization_naive(w: &Word) -> Result<LyndonFactorization> {
    ensure_nonempty(w)?;
    fn search(s: &[Letter], start: usize, current: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        if start == s.len() {
            out.push(current.clone());
            return;
        }
        for end in start + 1..=s.len() {
            if is_lyndon_naive(&s[start..end]) {
                current.push((start, end));
                search(s, end, current, out);
                current.pop();
            }
        }
    }
    let s = w.letters();
    let mut all = Vec::new();
    search(s, 0, &mut Vec::new(), &mut all);
    let mut nonincreasing: Vec<_> = all
        .into_iter()
        .filter(|f| f.windows(2).all(|p| s[p[0].0..p[0].1] >= s[p[1].0..p[1].1]))
        .collect();
    if nonincreasing.len() != 1 {
        return Err(Error::UniquenessViolation {
            word: w.to_string(),
            count: nonincreasing.len(),
        });
    }
    let factors = nonincreasing
        .pop()
        .unwrap()
        .into_iter()
        .map(|(a, b)| w.factor(a..b))
        .collect();
    Ok(LyndonFactorization::from_factors(factors))
}

/// The left Lyndon tree straight from its recursive definition.
pub fn left_lyndon_tree_naive(w: &Word) -> Result<MagmaTree> {
    ensure_nonempty(w)?;
    let s = w.letters();
    if !is_lyndon_naive(s) {
        let k = (1..s.len()).find(|&k| s[..k] >= s[k..]).unwrap_or(1);
        return Err(Error::NotLyndon {
            prefix: w.prefix(k).to_string(),
            suffix: w.suffix_from(k).to_string(),
        });
    }
    fn build(w: &Word) -> MagmaTree {
        if w.len() == 1 {
            return MagmaTree::leaf(w.clone());
        }
        let s = w.letters();
        let k = (1..s.len()).rev().find(|&k| is_lyndon_naive(&s[..k])).unwrap();
        MagmaTree::node(build(&w.prefix(k)), build(&w.suffix_from(k)))
    }
    Ok(build(w))
}

/// All words of length `len` over `alphabet`, lexicographically.
pub fn words_of_length(alphabet: &Arc<OrderedAlphabet>, len: usize) -> impl Iterator<Item = Word> + '_ {
    let k = alphabet.len() as Letter;
    let mut next = Some(vec![0 as Letter; len]);
    std::iter::from_fn(move || {
        let current = next.take()?;
        let mut succ = current.clone();
        // odometer increment from the right
        let mut i = len;
        loop {
            if i == 0 {
                break;
            }
            i -= 1;
            if succ[i] + 1 < k {
                succ[i] += 1;
                next = Some(succ);
                break;
            }
            succ[i] = 0;
        }
        Some(Word::from_letters(alphabet, current).expect("ranks stay in range"))
    })
}

/// All nonempty words of length at most `max_len`, in shortlex order.
pub fn all_words(alphabet: &Arc<OrderedAlphabet>, max_len: usize) -> impl Iterator<Item = Word> + '_ {
    (1..=max_len).flat_map(move |len| words_of_length(alphabet, len))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckStatus {
    Passed,
    Failed(String),
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub status: CheckStatus,
}

/// Outcome of every named check on one word, in [`CHECK_NAMES`] order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub word: Word,
    pub is_lyndon: bool,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn failures(&self) -> impl Iterator<Item = (&'static str, &str)> {
        self.checks.iter().filter_map(|c| match &c.status {
            CheckStatus::Failed(detail) => Some((c.name, detail.as_str())),
            _ => None,
        })
    }
}

pub const CHECK_NAMES: [&str; 23] = [
    "omega_oracle_agreement",
    "fine_wilf_bound",
    "first_factor_comparison",
    "lyndon_definitions_agree",
    "suffix_omega_characterization",
    "prefix_omega_characterization",
    "six_conditions",
    "bergman_chain",
    "factorization_matches_oracle",
    "factorization_invariants",
    "first_factor_dominates_rest",
    "last_factor_theorem",
    "first_factor_theorem",
    "pstd_permutation",
    "pstd_ends_with_length",
    "left_factorization_properties",
    "right_factorization_lyndon",
    "lss_prefix_chain",
    "lss_concatenation_is_left_foliage",
    "lss_omega_inequalities",
    "left_foliage_decreasing",
    "left_foliage_projection",
    "trees_coincide",
];

type Outcome = std::result::Result<(), String>;

fn ensure(cond: bool, detail: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(detail())
    }
}

fn lift<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn omega_lt(u: &Word, v: &Word) -> std::result::Result<bool, String> {
    lift(omega::omega_cmp(u, v)).map(|c| c.is_less())
}

fn concat_all<'a>(alphabet_of: &Word, parts: impl IntoIterator<Item = &'a Word>) -> Word {
    let letters = parts.into_iter().flat_map(|p| p.letters().iter().copied()).collect();
    Word::from_letters(alphabet_of.alphabet(), letters).expect("parts share the alphabet")
}

/// Every nonempty prefix against every nonempty suffix.
fn prefix_suffix_pairs(w: &Word) -> impl Iterator<Item = (Word, Word)> + '_ {
    let n = w.len();
    (1..=n).flat_map(move |p| (0..n).map(move |s| (w.prefix(p), w.suffix_from(s))))
}

fn check_omega_oracle(w: &Word) -> Outcome {
    for (p, s) in prefix_suffix_pairs(w) {
        let fast = lift(omega::omega_cmp(&p, &s))?;
        let slow = lift(omega_cmp_naive(&p, &s))?;
        ensure(fast == slow, || {
            format!("omega_cmp({p},{s}) = {fast:?}, oracle says {slow:?}")
        })?;
    }
    Ok(())
}

fn check_fine_wilf(w: &Word) -> Outcome {
    for (p, s) in prefix_suffix_pairs(w) {
        if let Some(k) = lift(omega::omega_mismatch_position(&p, &s))? {
            let bound = omega::fine_wilf_bound(p.len(), s.len());
            ensure(k <= bound, || format!("({p},{s}) compare at {k} > {bound}"))?;
        }
    }
    Ok(())
}

fn check_first_factor_comparison(w: &Word) -> Outcome {
    for (p, s) in prefix_suffix_pairs(w) {
        if p.concat(&s) == s.concat(&p) {
            continue;
        }
        let within = lift(omega::comparison_within_first_factor(&p, &s))?;
        let fractional = lift(word::fractional_power_of(&s, &p))?.is_some();
        ensure(within != fractional, || {
            format!("({p},{s}): decided within first factor = {within}, fractional power = {fractional}")
        })?;
    }
    Ok(())
}

fn check_definitions(w: &Word, lyndon: bool) -> Outcome {
    for def in LyndonDefinition::ALL {
        let by = lift(lyndon::is_lyndon_by(w, def))?;
        ensure(by == lyndon, || {
            format!("{def:?} says {by}, definition (i) says {lyndon}")
        })?;
    }
    let rotations = is_lyndon_naive(w.letters());
    ensure(rotations == lyndon, || format!("rotation test says {rotations}"))
}

fn check_suffix_omega(w: &Word, lyndon: bool) -> Outcome {
    let (c1, c2) = lift(lyndon::suffix_omega_conditions(w))?;
    ensure(c1 == lyndon && c2 == lyndon, || {
        format!("u^ω<v^ω: {c1}, w^ω<v^ω: {c2}, Lyndon: {lyndon}")
    })
}

fn check_prefix_omega(w: &Word, lyndon: bool) -> Outcome {
    let by_prefix = lift(lyndon::is_lyndon_prefix_omega(w))?;
    ensure(by_prefix == lyndon, || {
        format!("prefix condition {by_prefix}, Lyndon: {lyndon}")
    })
}

fn check_six_conditions(w: &Word) -> Outcome {
    for (u, v) in w.splits() {
        let six = lift(omega::six_conditions(&u, &v))?;
        let equal = u.concat(&v) == v.concat(&u);
        if equal {
            ensure(six.as_array() == [false; 6], || {
                format!("({u},{v}) ω-equal but {six:?}")
            })?;
        } else {
            ensure(six.all_equal(), || format!("({u},{v}): {six:?}"))?;
        }
    }
    Ok(())
}

fn check_bergman(w: &Word) -> Outcome {
    for (u, v) in w.splits() {
        let (lo, hi) = match lift(omega::omega_cmp(&u, &v))?.outcome() {
            omega::OmegaOutcome::Less => (u, v),
            omega::OmegaOutcome::Greater => (v, u),
            omega::OmegaOutcome::Equal => continue,
        };
        let chain = lift(omega::bergman_chain(&lo, &hi))?;
        ensure(chain, || format!("chain fails for ({lo},{hi})"))?;
    }
    Ok(())
}

fn check_factorization_oracle(w: &Word, fast: &LyndonFactorization) -> Outcome {
    let slow = lift(lyndon_factorization_naive(w))?;
    ensure(&slow == fast, || format!("Duval gives {fast}, search gives {slow}"))
}

fn check_factorization_invariants(w: &Word, f: &LyndonFactorization) -> Outcome {
    let factors = f.factors();
    ensure(!factors.is_empty(), || "no factors".into())?;
    for l in factors {
        ensure(is_lyndon_naive(l.letters()), || format!("factor {l} is not Lyndon"))?;
    }
    for pair in factors.windows(2) {
        let (a, b) = (&pair[0], &pair[1]);
        ensure(a.letters() >= b.letters(), || format!("{a} < {b} lexicographically"))?;
        ensure(!omega_lt(a, b)?, || format!("{a}^ω < {b}^ω"))?;
    }
    ensure(&concat_all(w, factors) == w, || format!("factors {f} do not spell {w}"))
}

fn check_first_dominates_rest(w: &Word, f: &LyndonFactorization) -> Option<Outcome> {
    let factors = f.factors();
    if factors.len() < 2 {
        return None;
    }
    let rest = concat_all(w, &factors[1..]);
    Some(omega_lt(&factors[0], &rest).and_then(|lt| ensure(!lt, || format!("{}^ω < {rest}^ω", factors[0]))))
}

fn check_last_factor(w: &Word, f: &LyndonFactorization) -> Outcome {
    let last = lift(lyndon::last_lyndon_factor(w))?;
    ensure(&last == f.last(), || {
        format!("suffix scan gives {last}, factorization ends with {}", f.last())
    })
}

fn check_first_factor(w: &Word, f: &LyndonFactorization) -> Outcome {
    let by_word = lift(lyndon::first_lyndon_factor(w))?;
    let by_rest = lift(lyndon::first_lyndon_factor_by_remainder(w))?;
    ensure(&by_word == f.first() && &by_rest == f.first(), || {
        format!(
            "p^ω ≥ w^ω gives {by_word}, p^ω ≥ s^ω gives {by_rest}, factorization starts with {}",
            f.first()
        )
    })
}

fn check_pstd(w: &Word) -> Outcome {
    let p = lift(pstd::prefix_standard_permutation(w))?;
    let n = w.len();
    ensure(p.sigma.len() == n && p.inverse.len() == n, || "wrong length".into())?;
    for len in 1..=n {
        let rank = p.sigma[len - 1];
        ensure((1..=n).contains(&rank) && p.inverse[rank - 1] == len, || {
            format!(
                "sigma {:?} and inverse {:?} are not mutually inverse",
                p.sigma, p.inverse
            )
        })?;
    }
    for pair in p.inverse.windows(2) {
        let (a, b) = (w.prefix(pair[0]), w.prefix(pair[1]));
        ensure(lift(pstd::prec_cmp(&a, &b))? == Ordering::Less, || {
            format!("rank order puts {a} before {b}")
        })?;
    }
    Ok(())
}

fn check_pstd_last(w: &Word) -> Outcome {
    let p = lift(pstd::prefix_standard_permutation(w))?;
    ensure(p.sigma.last() == Some(&w.len()), || {
        format!("pstd ends with {:?}", p.sigma.last())
    })
}

fn check_left_factorizations(lst: &MagmaTree) -> Outcome {
    for x in lst.internal_nodes() {
        let z = lst.subtree(&x).expect("internal node").foliage();
        let (u, v) = lift(tree::left_standard_factorization(&z))?;
        ensure(is_lyndon_naive(u.letters()) && is_lyndon_naive(v.letters()), || {
            format!("({u})({v}) of {z}: factors not both Lyndon")
        })?;
        ensure(u.letters() < v.letters(), || format!("({u})({v}) of {z}: u ≥ v"))?;
        ensure(
            (u.len() + 1..z.len()).all(|k| !is_lyndon_naive(&z.letters()[..k])),
            || format!("({u})({v}) of {z}: a longer Lyndon prefix exists"),
        )?;
        if v.len() >= 2 {
            let (v1, _) = lift(tree::left_standard_factorization(&v))?;
            ensure(v1.letters() <= u.letters() && v1.is_prefix_of(&u), || {
                format!("({u})({v}) of {z}: v1 = {v1} is not a prefix of u")
            })?;
        }
    }
    Ok(())
}

fn check_right_factorizations(w: &Word) -> Outcome {
    let rt = lift(tree::right_lyndon_tree(w))?;
    ensure(&rt.foliage() == w, || format!("right tree foliage {}", rt.foliage()))?;
    for x in rt.internal_nodes() {
        let z = rt.subtree(&x).expect("internal node").foliage();
        let (u, v) = lift(tree::right_standard_factorization(&z))?;
        ensure(is_lyndon_naive(u.letters()) && is_lyndon_naive(v.letters()), || {
            format!("right factorization ({u})({v}) of {z}: u is not Lyndon")
        })?;
    }
    Ok(())
}

fn lss_foliages(t: &MagmaTree, x: &NodeAddress) -> std::result::Result<Vec<Word>, String> {
    Ok(lift(tree::left_subtrees_sequence(t, x))?
        .into_iter()
        .map(MagmaTree::foliage)
        .collect())
}

fn check_lss_chain(lst: &MagmaTree) -> Outcome {
    for x in lst.internal_nodes() {
        let ls = lss_foliages(lst, &x)?;
        for l in &ls {
            ensure(is_lyndon_naive(l.letters()), || {
                format!("lss at {x}: {l} is not Lyndon")
            })?;
        }
        for pair in ls.windows(2) {
            ensure(pair[1].is_prefix_of(&pair[0]), || {
                format!("lss at {x}: {} is not a prefix of {}", pair[1], pair[0])
            })?;
        }
    }
    Ok(())
}

fn check_lss_concatenation(w: &Word, lst: &MagmaTree) -> Outcome {
    for (i, x) in lst.internal_nodes_in_order().iter().enumerate() {
        let g = lift(tree::left_foliage(lst, x))?;
        let ls = lss_foliages(lst, x)?;
        let joined = concat_all(w, &ls);
        ensure(g == joined, || format!("g at {x} is {g}, lss concatenates to {joined}"))?;
        ensure(g.len() == i + 1, || {
            format!("g at {x} has length {}, {} leaves lie left of it", g.len(), i + 1)
        })?;
    }
    Ok(())
}

fn check_lss_inequalities(w: &Word, lst: &MagmaTree) -> Outcome {
    for x in lst.internal_nodes() {
        let ls = lss_foliages(lst, &x)?;
        let n = ls.len();
        let all = concat_all(w, &ls);
        let last = &ls[n - 1];
        if last.len() >= 2 {
            let (head, _) = lift(tree::left_standard_factorization(last))?;
            let shorter = concat_all(w, ls[..n - 1].iter().chain([&head]));
            ensure(omega_lt(&shorter, &all)?, || {
                format!("at {x}: ({shorter})^ω ≮ ({all})^ω")
            })?;
        }
        if n >= 2 {
            let without_last = concat_all(w, &ls[..n - 1]);
            ensure(!omega_lt(&without_last, &all)?, || {
                format!("at {x}: ({all})^ω > ({without_last})^ω")
            })?;
        }
    }
    Ok(())
}

fn check_decreasing_labels(lst: &MagmaTree) -> Outcome {
    for x in lst.internal_nodes() {
        let gx = lift(tree::left_foliage(lst, &x))?;
        for dir in [Direction::Left, Direction::Right] {
            let y = x.child(dir);
            if lst.subtree(&y).is_some_and(|t| !t.is_leaf()) {
                let gy = lift(tree::left_foliage(lst, &y))?;
                ensure(lift(pstd::prec_cmp(&gy, &gx))? == Ordering::Less, || {
                    format!("child {y} label {gy} is not ≺ parent {x} label {gx}")
                })?;
            }
        }
    }
    Ok(())
}

fn check_projection(w: &Word, lst: &MagmaTree) -> Outcome {
    let labels = lst
        .internal_nodes_in_order()
        .iter()
        .map(|x| lift(tree::left_foliage(lst, x)))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    let prefixes: Vec<Word> = (1..w.len()).map(|k| w.prefix(k)).collect();
    ensure(labels == prefixes, || {
        format!(
            "in-order labels {:?} are not the proper prefixes",
            labels.iter().map(|l| l.to_string()).collect::<Vec<_>>()
        )
    })
}

fn check_trees(w: &Word, lst: &MagmaTree) -> Outcome {
    ensure(&lst.foliage() == w, || {
        format!("left Lyndon tree foliage is {}", lst.foliage())
    })?;
    let cartesian = lift(pstd::left_cartesian_tree(w))?;
    let via_prefixes = lift(pstd::left_cartesian_tree_via_prefixes(w))?;
    let naive = lift(left_lyndon_tree_naive(w))?;
    ensure(&cartesian == lst && &via_prefixes == lst && &naive == lst, || {
        format!("left Lyndon {lst}, Cartesian {cartesian}, via prefixes {via_prefixes}, naive {naive}")
    })
}

/// Runs every check on `w`; checks that need a Lyndon word are
/// [`CheckStatus::NotApplicable`] otherwise.
pub fn verify_word(w: &Word) -> Result<VerificationReport> {
    ensure_nonempty(w)?;
    let lyndon = lyndon::is_lyndon(w)?;
    let factorization = lyndon::lyndon_factorization(w);
    let lst = if lyndon { Some(tree::left_lyndon_tree(w)) } else { None };

    let status = |o: Outcome| match o {
        Ok(()) => CheckStatus::Passed,
        Err(detail) => CheckStatus::Failed(detail),
    };
    let with_factorization = |f: &dyn Fn(&LyndonFactorization) -> Outcome| match &factorization {
        Ok(fac) => status(f(fac)),
        Err(e) => CheckStatus::Failed(e.to_string()),
    };
    let with_tree = |f: &dyn Fn(&MagmaTree) -> Outcome| match &lst {
        None => CheckStatus::NotApplicable,
        Some(Ok(t)) => status(f(t)),
        Some(Err(e)) => CheckStatus::Failed(e.to_string()),
    };
    let if_lyndon = |f: &dyn Fn() -> Outcome| {
        if lyndon {
            status(f())
        } else {
            CheckStatus::NotApplicable
        }
    };

    let statuses = [
        status(check_omega_oracle(w)),
        status(check_fine_wilf(w)),
        status(check_first_factor_comparison(w)),
        status(check_definitions(w, lyndon)),
        status(check_suffix_omega(w, lyndon)),
        status(check_prefix_omega(w, lyndon)),
        status(check_six_conditions(w)),
        status(check_bergman(w)),
        with_factorization(&|f| check_factorization_oracle(w, f)),
        with_factorization(&|f| check_factorization_invariants(w, f)),
        match &factorization {
            Ok(f) => check_first_dominates_rest(w, f).map_or(CheckStatus::NotApplicable, status),
            Err(e) => CheckStatus::Failed(e.to_string()),
        },
        with_factorization(&|f| check_last_factor(w, f)),
        with_factorization(&|f| check_first_factor(w, f)),
        status(check_pstd(w)),
        if_lyndon(&|| check_pstd_last(w)),
        with_tree(&check_left_factorizations),
        if_lyndon(&|| check_right_factorizations(w)),
        with_tree(&check_lss_chain),
        with_tree(&|t| check_lss_concatenation(w, t)),
        with_tree(&|t| check_lss_inequalities(w, t)),
        with_tree(&check_decreasing_labels),
        with_tree(&|t| check_projection(w, t)),
        with_tree(&|t| check_trees(w, t)),
    ];
    let checks = CHECK_NAMES
        .iter()
        .zip(statuses)
        .map(|(&name, status)| Check { name, status })
        .collect();
    Ok(VerificationReport {
        word: w.clone(),
        is_lyndon: lyndon,
        checks,
    })
}

/// Per-check totals over a sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckTally {
    pub name: &'static str,
    pub passed: usize,
    pub failed: usize,
    pub not_applicable: usize,
    /// First failing word in shortlex order, with the failure detail.
    pub first_failure: Option<(Word, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepSummary {
    pub words_visited: usize,
    /// `lyndon_per_length[i]` counts Lyndon words of length `i + 1`.
    pub lyndon_per_length: Vec<usize>,
    pub checks: Vec<CheckTally>,
}

impl SweepSummary {
    pub fn lyndon_total(&self) -> usize {
        self.lyndon_per_length.iter().sum()
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().map(|c| c.failed).sum()
    }

    pub fn first_failure(&self) -> Option<(&'static str, &Word, &str)> {
        self.checks
            .iter()
            .filter_map(|c| c.first_failure.as_ref().map(|(w, d)| (c.name, w, d.as_str())))
            .min_by(|a, b| a.1.len().cmp(&b.1.len()).then_with(|| a.1.letters().cmp(b.1.letters())))
    }
}

/// Runs [`verify_word`] on every word of length `1..=max_len`.
///
/// With `jobs > 1` each length is checked on a dedicated thread pool; the
/// summary is reduced in shortlex order and does not depend on `jobs`.
pub fn sweep(alphabet: &Arc<OrderedAlphabet>, max_len: usize, jobs: usize) -> Result<SweepSummary> {
    let pool = if jobs > 1 {
        Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(jobs)
                .build()
                .map_err(|e| Error::InternalError(e.to_string()))?,
        )
    } else {
        None
    };
    let mut summary = SweepSummary {
        words_visited: 0,
        lyndon_per_length: Vec::with_capacity(max_len),
        checks: CHECK_NAMES
            .iter()
            .map(|&name| CheckTally {
                name,
                passed: 0,
                failed: 0,
                not_applicable: 0,
                first_failure: None,
            })
            .collect(),
    };
    for len in 1..=max_len {
        let words: Vec<Word> = words_of_length(alphabet, len).collect();
        let reports: Vec<VerificationReport> = match &pool {
            Some(pool) => pool.install(|| words.par_iter().map(verify_word).collect::<Result<_>>())?,
            None => words.iter().map(verify_word).collect::<Result<_>>()?,
        };
        let mut lyndon_count = 0;
        for report in reports {
            summary.words_visited += 1;
            lyndon_count += usize::from(report.is_lyndon);
            for (tally, check) in summary.checks.iter_mut().zip(report.checks) {
                match check.status {
                    CheckStatus::Passed => tally.passed += 1,
                    CheckStatus::NotApplicable => tally.not_applicable += 1,
                    CheckStatus::Failed(detail) => {
                        tally.failed += 1;
                        tally.first_failure.get_or_insert_with(|| (report.word.clone(), detail));
                    }
                }
            }
        }
        summary.lyndon_per_length.push(lyndon_count);
    }
    Ok(summary)
}
