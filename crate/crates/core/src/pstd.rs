//! The ≺ order, prefix standard permutations, decreasing trees and the left
//! Cartesian tree of a Lyndon word.

use std::cmp::Ordering;
use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::lyndon::ensure_lyndon;
use crate::omega;
use crate::tree::MagmaTree;
use crate::word::{ensure_nonempty, ensure_same_alphabet, Letter, Word};

pub(crate) fn prec_cmp_letters(u: &[Letter], v: &[Letter]) -> Ordering {
    omega::cmp_letters(u, v).then_with(|| v.len().cmp(&u.len()))
}

/// `u ≺ v` iff `u^ω < v^ω`, or `u^ω = v^ω` and `u` is longer.
pub fn prec_cmp(u: &Word, v: &Word) -> Result<Ordering> {
    ensure_same_alphabet(u, v)?;
    ensure_nonempty(u)?;
    ensure_nonempty(v)?;
    Ok(prec_cmp_letters(u.letters(), v.letters()))
}

/// `sigma[i - 1]` is the ≺-rank of the prefix of length `i`; `inverse[r - 1]`
/// is the length of the prefix of rank `r`. All values are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PrefixStandard {
    pub sigma: Vec<usize>,
    pub inverse: Vec<usize>,
}

impl PrefixStandard {
    pub fn len(&self) -> usize {
        self.sigma.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sigma.is_empty()
    }
}

pub fn prefix_standard_permutation(w: &Word) -> Result<PrefixStandard> {
    ensure_nonempty(w)?;
    let s = w.letters();
    let mut inverse: Vec<usize> = (1..=s.len()).collect();
    inverse.sort_by(|&i, &j| prec_cmp_letters(&s[..i], &s[..j]));
    let mut sigma = vec![0; s.len()];
    for (rank, &len) in inverse.iter().enumerate() {
        sigma[len - 1] = rank + 1;
    }
    Ok(PrefixStandard { sigma, inverse })
}

/// A binary tree in which every node is larger than its children.
/// Its in-order projection is the injective sequence it was built from.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DecreasingTree<L = usize> {
    pub label: L,
    pub left: Option<Box<DecreasingTree<L>>>,
    pub right: Option<Box<DecreasingTree<L>>>,
}

impl<L> DecreasingTree<L> {
    /// Builds the decreasing tree of `items` under `cmp`, which must be a
    /// strict total order on them. Uses the rightmost-path stack: each new
    /// item pops the smaller items, which become its left subtree.
    pub fn from_sequence_by(items: Vec<L>, mut cmp: impl FnMut(&L, &L) -> Ordering) -> Result<Self> {
        if items.is_empty() {
            return Err(Error::EmptySequence);
        }
        let n = items.len();
        let mut left = vec![None; n];
        let mut right = vec![None; n];
        let mut stack: Vec<usize> = Vec::with_capacity(n);
        for i in 0..n {
            let mut popped = None;
            while let Some(&top) = stack.last() {
                match cmp(&items[top], &items[i]) {
                    Ordering::Less => popped = stack.pop(),
                    Ordering::Equal => return Err(Error::DuplicateEntry { position: i + 1 }),
                    Ordering::Greater => break,
                }
            }
            left[i] = popped;
            if let Some(&top) = stack.last() {
                right[top] = Some(i);
            }
            stack.push(i);
        }

        let mut slots: Vec<Option<L>> = items.into_iter().map(Some).collect();
        fn assemble<L>(
            i: usize,
            slots: &mut [Option<L>],
            left: &[Option<usize>],
            right: &[Option<usize>],
        ) -> Box<DecreasingTree<L>> {
            let l = left[i].map(|c| assemble(c, slots, left, right));
            let r = right[i].map(|c| assemble(c, slots, left, right));
            Box::new(DecreasingTree {
                label: slots[i].take().expect("each index is visited once"),
                left: l,
                right: r,
            })
        }
        Ok(*assemble(stack[0], &mut slots, &left, &right))
    }

    pub fn len(&self) -> usize {
        1 + self.left.as_ref().map_or(0, |t| t.len()) + self.right.as_ref().map_or(0, |t| t.len())
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn in_order(&self) -> Vec<&L> {
        fn walk<'a, L>(t: &'a DecreasingTree<L>, out: &mut Vec<&'a L>) {
            if let Some(l) = &t.left {
                walk(l, out);
            }
            out.push(&t.label);
            if let Some(r) = &t.right {
                walk(r, out);
            }
        }
        let mut out = Vec::new();
        walk(self, &mut out);
        out
    }

    /// Same shape with labels mapped.
    pub fn map<M>(&self, f: &mut impl FnMut(&L) -> M) -> DecreasingTree<M> {
        DecreasingTree {
            label: f(&self.label),
            left: self.left.as_ref().map(|t| Box::new(t.map(f))),
            right: self.right.as_ref().map(|t| Box::new(t.map(f))),
        }
    }
}

/// Decreasing tree of an injective sequence of integers.
pub fn decreasing_tree(alpha: &[usize]) -> Result<DecreasingTree> {
    let mut seen = HashSet::with_capacity(alpha.len());
    if let Some(i) = alpha.iter().position(|x| !seen.insert(*x)) {
        return Err(Error::DuplicateEntry { position: i + 1 });
    }
    DecreasingTree::from_sequence_by(alpha.to_vec(), |a, b| a.cmp(b))
}

/// The complete tree whose internal nodes have the shape of `skeleton` and
/// whose leaves spell `w`. Leaves fill the `|w|` gaps of the skeleton's
/// in-order traversal.
pub fn completion<L>(skeleton: &DecreasingTree<L>, w: &Word) -> Result<MagmaTree> {
    let nodes = skeleton.len();
    if nodes + 1 != w.len() {
        return Err(Error::SizeMismatch {
            expected: nodes + 1,
            found: w.len(),
        });
    }
    fn fill<L>(node: Option<&DecreasingTree<L>>, leaves: &mut impl Iterator<Item = Word>) -> MagmaTree {
        match node {
            None => MagmaTree::leaf(leaves.next().expect("leaf count checked")),
            Some(t) => {
                let l = fill(t.left.as_deref(), leaves);
                let r = fill(t.right.as_deref(), leaves);
                MagmaTree::node(l, r)
            }
        }
    }
    let mut leaves = (0..w.len()).map(|i| w.factor(i..i + 1));
    Ok(fill(Some(skeleton), &mut leaves))
}

/// `T_L(w)`: the completion of the decreasing tree of `pstd(w)` with its
/// final entry removed.
pub fn left_cartesian_tree(w: &Word) -> Result<MagmaTree> {
    ensure_lyndon(w)?;
    if w.len() == 1 {
        return Ok(MagmaTree::leaf(w.clone()));
    }
    let mut sigma = prefix_standard_permutation(w)?.sigma;
    let n = w.len();
    if sigma.pop() != Some(n) {
        return Err(Error::InternalError(format!(
            "pstd({w}) does not end with {n} although {w} is Lyndon"
        )));
    }
    completion(&decreasing_tree(&sigma)?, w)
}

/// `T_L(w)` built directly on the proper prefixes of `w` ordered by ≺.
pub fn left_cartesian_tree_via_prefixes(w: &Word) -> Result<MagmaTree> {
    ensure_lyndon(w)?;
    if w.len() == 1 {
        return Ok(MagmaTree::leaf(w.clone()));
    }
    let prefixes: Vec<Word> = (1..w.len()).map(|k| w.prefix(k)).collect();
    let skeleton = DecreasingTree::from_sequence_by(prefixes, |p, q| prec_cmp_letters(p.letters(), q.letters()))?;
    completion(&skeleton, w)
}
