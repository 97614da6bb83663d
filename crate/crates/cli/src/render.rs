//! Text, structured (JSON) and DOT renderings, plus the parser for the
//! canonical nested-parentheses tree form.

use std::fmt::Write as _;
use std::sync::Arc;

use lyndon_core::tree::left_foliage;
use lyndon_core::{Direction, MagmaTree, NodeAddress, OmegaComparison, OrderedAlphabet, SixConditions, Word};
use serde_json::{json, Value};
use thiserror::Error;

/// Concatenated digits when every entry is a single digit, otherwise CSV.
pub fn permutation(values: &[usize]) -> String {
    if values.iter().all(|&v| v <= 9) {
        values.iter().map(|v| v.to_string()).collect()
    } else {
        values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
    }
}

pub fn comparison_text(u: &Word, v: &Word, c: &OmegaComparison) -> String {
    match c {
        OmegaComparison::Less { mismatch_position } => format!("{u} <ω {v}, mismatch at {mismatch_position}"),
        OmegaComparison::Greater { mismatch_position } => format!("{u} >ω {v}, mismatch at {mismatch_position}"),
        OmegaComparison::Equal { common_root } => format!("equal: powers of {common_root}"),
    }
}

pub fn six_conditions_text(six: &SixConditions) -> String {
    let mut out = String::new();
    for (i, (label, value)) in SixConditions::LABELS.iter().zip(six.as_array()).enumerate() {
        let _ = writeln!(out, "({}) {label}: {value}", i + 1);
    }
    out
}

pub fn comparison_json(c: &OmegaComparison) -> Value {
    let outcome = match c {
        OmegaComparison::Less { .. } => "less",
        OmegaComparison::Greater { .. } => "greater",
        OmegaComparison::Equal { .. } => "equal",
    };
    json!({
        "outcome": outcome,
        "mismatch_position": c.mismatch_position(),
        "common_root": c.common_root().map(Word::to_string),
    })
}

pub fn tree_json(t: &MagmaTree) -> Value {
    match t {
        MagmaTree::Leaf(a) => json!({ "leaf": a.to_string() }),
        MagmaTree::Node(l, r) => json!({ "l": tree_json(l), "r": tree_json(r) }),
    }
}

fn dot_escape(label: &str) -> String {
    label.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Directed graph with pre-order node ids. Internal nodes are labeled with
/// their left foliage, leaves with their letter; left edges come first.
pub fn tree_dot(t: &MagmaTree) -> String {
    fn walk(
        t: &MagmaTree,
        root: &MagmaTree,
        address: NodeAddress,
        nodes: &mut Vec<String>,
        edges: &mut Vec<(usize, usize)>,
    ) -> usize {
        let id = nodes.len();
        match t {
            MagmaTree::Leaf(a) => {
                nodes.push(format!("[label=\"{}\", shape=plaintext]", dot_escape(&a.to_string())));
            }
            MagmaTree::Node(l, r) => {
                let g = left_foliage(root, &address).expect("address of an internal node");
                nodes.push(format!("[label=\"{}\"]", dot_escape(&g.to_string())));
                let left = walk(l, root, address.child(Direction::Left), nodes, edges);
                let right = walk(r, root, address.child(Direction::Right), nodes, edges);
                edges.push((id, left));
                edges.push((id, right));
            }
        }
        id
    }
    let mut nodes = Vec::new();
    let mut edges = Vec::new();
    walk(t, t, NodeAddress::root(), &mut nodes, &mut edges);
    edges.sort_unstable();
    let mut out = String::from("digraph tree {\n");
    for (id, attrs) in nodes.iter().enumerate() {
        let _ = writeln!(out, "  n{id} {attrs};");
    }
    for (from, to) in edges {
        let _ = writeln!(out, "  n{from} -> n{to};");
    }
    out.push_str("}\n");
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeParseError {
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("unexpected {found:?} at offset {offset}")]
    Unexpected { found: char, offset: usize },
    #[error("symbol {0:?} is not in the alphabet")]
    UnknownSymbol(char),
}

/// Parses the canonical form produced by `MagmaTree`'s `Display`.
pub fn parse_tree(text: &str, alphabet: &Arc<OrderedAlphabet>) -> Result<MagmaTree, TreeParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut pos = 0;
    let tree = parse_node(&chars, &mut pos, alphabet)?;
    match chars.get(pos) {
        None => Ok(tree),
        Some(&found) => Err(TreeParseError::Unexpected { found, offset: pos }),
    }
}

fn expect(chars: &[char], pos: &mut usize, want: char) -> Result<(), TreeParseError> {
    match chars.get(*pos) {
        Some(&c) if c == want => {
            *pos += 1;
            Ok(())
        }
        Some(&found) => Err(TreeParseError::Unexpected { found, offset: *pos }),
        None => Err(TreeParseError::UnexpectedEnd),
    }
}

fn parse_node(chars: &[char], pos: &mut usize, alphabet: &Arc<OrderedAlphabet>) -> Result<MagmaTree, TreeParseError> {
    match chars.get(*pos) {
        None => Err(TreeParseError::UnexpectedEnd),
        Some('(') => {
            *pos += 1;
            let left = parse_node(chars, pos, alphabet)?;
            expect(chars, pos, ',')?;
            let right = parse_node(chars, pos, alphabet)?;
            expect(chars, pos, ')')?;
            Ok(MagmaTree::node(left, right))
        }
        Some(&c @ (')' | ',')) => Err(TreeParseError::Unexpected { found: c, offset: *pos }),
        Some(&c) => {
            *pos += 1;
            let letter = alphabet
                .word(&c.to_string())
                .map_err(|_| TreeParseError::UnknownSymbol(c))?;
            Ok(MagmaTree::leaf(letter))
        }
    }
}
