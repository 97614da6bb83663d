//! Complete binary trees over an alphabet (the free magma), standard
//! factorizations of Lyndon words and the trees they generate, and the
//! left subtrees sequence / left foliage of an internal node.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::lyndon::{ensure_lyndon, is_lyndon_letters};
use crate::word::{ensure_nonempty, Word};

/// A complete binary tree whose leaves are letters.
///
/// `Leaf` always holds a single-letter word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum MagmaTree {
    Leaf(Word),
    Node(Box<MagmaTree>, Box<MagmaTree>),
}

impl MagmaTree {
    /// Panics unless `letter` has length 1.
    pub fn leaf(letter: Word) -> Self {
        assert_eq!(letter.len(), 1, "a leaf holds exactly one letter");
        Self::Leaf(letter)
    }

    pub fn node(left: MagmaTree, right: MagmaTree) -> Self {
        Self::Node(Box::new(left), Box::new(right))
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, Self::Leaf(_))
    }

    pub fn children(&self) -> Option<(&MagmaTree, &MagmaTree)> {
        match self {
            Self::Leaf(_) => None,
            Self::Node(l, r) => Some((l, r)),
        }
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            Self::Leaf(_) => 1,
            Self::Node(l, r) => l.leaf_count() + r.leaf_count(),
        }
    }

    pub fn internal_count(&self) -> usize {
        self.leaf_count() - 1
    }

    /// Left-to-right word of leaves.
    pub fn foliage(&self) -> Word {
        let mut letters = Vec::with_capacity(self.leaf_count());
        let mut first = None;
        self.collect_leaves(&mut |leaf: &Word| {
            first.get_or_insert_with(|| leaf.clone());
            letters.extend_from_slice(leaf.letters());
        });
        first.expect("a tree has at least one leaf").with_letters(letters)
    }

    fn collect_leaves(&self, visit: &mut impl FnMut(&Word)) {
        match self {
            Self::Leaf(a) => visit(a),
            Self::Node(l, r) => {
                l.collect_leaves(visit);
                r.collect_leaves(visit);
            }
        }
    }

    pub fn subtree(&self, address: &NodeAddress) -> Option<&MagmaTree> {
        address.steps().iter().try_fold(self, |t, step| {
            let (l, r) = t.children()?;
            Some(match step {
                Direction::Left => l,
                Direction::Right => r,
            })
        })
    }

    /// Addresses of internal nodes in pre-order.
    pub fn internal_nodes(&self) -> Vec<NodeAddress> {
        fn walk(t: &MagmaTree, path: &mut Vec<Direction>, out: &mut Vec<NodeAddress>) {
            if let MagmaTree::Node(l, r) = t {
                out.push(NodeAddress(path.clone()));
                path.push(Direction::Left);
                walk(l, path, out);
                path.pop();
                path.push(Direction::Right);
                walk(r, path, out);
                path.pop();
            }
        }
        let mut out = Vec::new();
        walk(self, &mut Vec::new(), &mut out);
        out
    }

    /// Addresses of internal nodes in symmetric (in-order) order.
    pub fn internal_nodes_in_order(&self) -> Vec<NodeAddress> {
        fn walk(t: &MagmaTree, path: &mut Vec<Direction>, out: &mut Vec<NodeAddress>) {
            if let MagmaTree::Node(l, r) = t {
                path.push(Direction::Left);
                walk(l, path, out);
                path.pop();
                out.push(NodeAddress(path.clone()));
                path.push(Direction::Right);
                walk(r, path, out);
                path.pop();
            }
        }
        let mut out = Vec::new();
        walk(self, &mut Vec::new(), &mut out);
        out
    }
}

/// Canonical form: a leaf is its symbol, a node is `(left,right)`.
impl fmt::Display for MagmaTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Leaf(a) => write!(f, "{a}"),
            Self::Node(l, r) => write!(f, "({l},{r})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Left,
    Right,
}

/// Path from the root; the empty path is the root itself.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct NodeAddress(Vec<Direction>);

impl NodeAddress {
    pub fn root() -> Self {
        Self::default()
    }

    pub fn new(steps: Vec<Direction>) -> Self {
        Self(steps)
    }

    pub fn steps(&self) -> &[Direction] {
        &self.0
    }

    pub fn is_root(&self) -> bool {
        self.0.is_empty()
    }

    pub fn child(&self, direction: Direction) -> Self {
        let mut steps = self.0.clone();
        steps.push(direction);
        Self(steps)
    }
}

/// Written as a string of `L`/`R`; the root is the empty string (or `.`).
impl fmt::Display for NodeAddress {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, ".");
        }
        for d in &self.0 {
            f.write_str(match d {
                Direction::Left => "L",
                Direction::Right => "R",
            })?;
        }
        Ok(())
    }
}

impl FromStr for NodeAddress {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "." {
            return Ok(Self::root());
        }
        s.chars()
            .map(|c| match c.to_ascii_uppercase() {
                'L' => Ok(Direction::Left),
                'R' => Ok(Direction::Right),
                _ => Err(Error::BadAddress(s.to_string())),
            })
            .collect::<Result<Vec<_>>>()
            .map(Self)
    }
}

fn ensure_factorizable(w: &Word) -> Result<()> {
    ensure_lyndon(w)?;
    if w.len() < 2 {
        return Err(Error::TooShort(w.to_string()));
    }
    Ok(())
}

/// `w = uv` with `u` the longest proper nonempty Lyndon prefix.
pub fn left_standard_factorization(w: &Word) -> Result<(Word, Word)> {
    ensure_factorizable(w)?;
    let s = w.letters();
    let k = (1..s.len())
        .rev()
        .find(|&k| is_lyndon_letters(&s[..k]))
        .expect("the first letter is a Lyndon prefix");
    Ok((w.prefix(k), w.suffix_from(k)))
}

/// `w = uv` with `v` the longest proper nonempty Lyndon suffix.
pub fn right_standard_factorization(w: &Word) -> Result<(Word, Word)> {
    ensure_factorizable(w)?;
    let s = w.letters();
    let k = (1..s.len())
        .find(|&k| is_lyndon_letters(&s[k..]))
        .expect("the last letter is a Lyndon suffix");
    Ok((w.prefix(k), w.suffix_from(k)))
}

fn standard_tree(w: &Word, split: fn(&Word) -> Result<(Word, Word)>) -> Result<MagmaTree> {
    if w.len() == 1 {
        return Ok(MagmaTree::leaf(w.clone()));
    }
    let (u, v) = split(w)?;
    Ok(MagmaTree::node(standard_tree(&u, split)?, standard_tree(&v, split)?))
}

/// The tree of iterated left standard factorizations.
pub fn left_lyndon_tree(w: &Word) -> Result<MagmaTree> {
    ensure_nonempty(w)?;
    ensure_lyndon(w)?;
    standard_tree(w, left_standard_factorization)
}

/// The tree of iterated right standard factorizations.
pub fn right_lyndon_tree(w: &Word) -> Result<MagmaTree> {
    ensure_nonempty(w)?;
    ensure_lyndon(w)?;
    standard_tree(w, right_standard_factorization)
}

fn bad_address(x: &NodeAddress) -> Error {
    Error::BadAddress(x.to_string())
}

/// Subtrees hanging to the left of the root-to-`x` path, plus the left
/// subtree of `x` itself.
pub fn left_subtrees_sequence<'t>(t: &'t MagmaTree, x: &NodeAddress) -> Result<Vec<&'t MagmaTree>> {
    let mut sequence = Vec::new();
    let mut current = t;
    for step in x.steps() {
        let (l, r) = current.children().ok_or_else(|| bad_address(x))?;
        current = match step {
            Direction::Left => l,
            Direction::Right => {
                sequence.push(l);
                r
            }
        };
    }
    let (l, _) = current.children().ok_or_else(|| bad_address(x))?;
    sequence.push(l);
    Ok(sequence)
}

/// The left foliage `g_t(x)`: the leaves of `t` strictly left of `x`.
pub fn left_foliage(t: &MagmaTree, x: &NodeAddress) -> Result<Word> {
    fn g(t: &MagmaTree, steps: &[Direction], x: &NodeAddress) -> Result<Word> {
        let (l, r) = t.children().ok_or_else(|| bad_address(x))?;
        match steps.split_first() {
            None => Ok(l.foliage()),
            Some((Direction::Left, rest)) => g(l, rest, x),
            Some((Direction::Right, rest)) => l.foliage().concat(&g(r, rest, x)?),
        }
    }
    g(t, x.steps(), x)
}
