//! Short command-line notations for label sets, relations and graphs.

use egpkit::{GroundSet, Preorder, Subset};

use crate::error::{at, CliError, Result};

/// Labels in order of first mention, and pairs of labels.
pub type Labeled = (Vec<String>, Vec<(String, String)>);

/// `a,b,c` (optionally braced); the empty string is the empty list.
pub fn label_list(text: &str) -> Vec<String> {
    text.trim()
        .trim_start_matches('{')
        .trim_end_matches('}')
        .split(',')
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(String::from)
        .collect()
}

pub fn subset(ground: &GroundSet, text: &str) -> Result<Subset> {
    ground
        .subset(&label_list(text))
        .map_err(at(format!("subset `{text}`")))
}

/// Relations written as comma-separated chains: `a<b<c, d=e, f`.
///
/// Returns the labels in order of first mention and the generating pairs;
/// `x=y` stands for both `x<y` and `y<x`, and a bare label only mentions it.
pub fn relations(text: &str) -> Result<Labeled> {
    let mut mentioned: Vec<String> = Vec::new();
    let mut pairs = Vec::new();
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let mut prev: Option<String> = None;
        let mut rest = item;
        let mut op = None;
        loop {
            let cut = rest.find(['<', '=']);
            let (label, next_op) = match cut {
                Some(k) => (&rest[..k], Some(rest.as_bytes()[k])),
                None => (rest, None),
            };
            let label = label.trim();
            if label.is_empty() {
                return Err(CliError::usage(format!("missing label in `{item}`")));
            }
            let label = label.to_string();
            if !mentioned.contains(&label) {
                mentioned.push(label.clone());
            }
            if let Some(p) = prev.take() {
                pairs.push((p.clone(), label.clone()));
                if op == Some(b'=') {
                    pairs.push((label.clone(), p));
                }
            }
            match cut {
                Some(k) => {
                    prev = Some(label);
                    op = next_op;
                    rest = &rest[k + 1..];
                }
                None => break,
            }
        }
    }
    Ok((mentioned, pairs))
}

/// A preorder on `ground` from [`relations`] notation.
pub fn preorder_on(ground: &GroundSet, text: &str) -> Result<Preorder> {
    let (_, pairs) = relations(text)?;
    Preorder::from_relations(ground.clone(), &pairs).map_err(at(format!("relations `{text}`")))
}

/// A preorder on exactly the labels it mentions.
pub fn preorder(text: &str) -> Result<Preorder> {
    let (labels, pairs) = relations(text)?;
    let ground = GroundSet::new(labels).map_err(at(format!("relations `{text}`")))?;
    Preorder::from_relations(ground, &pairs).map_err(at(format!("relations `{text}`")))
}

/// Edges `a-b,b-c`, or one of `path:N`, `cycle:N`, `star:N`, `complete:N` on
/// the letters `a, b, …`. Returns the vertex labels and the edges.
pub fn graph(text: &str) -> Result<Labeled> {
    let text = text.trim();
    if let Some((shape, n)) = text.split_once(':') {
        let n = count(n)?;
        let g = GroundSet::letters(n)?;
        let v = g.labels().to_vec();
        let pairs: Vec<(usize, usize)> = match shape {
            "path" => (1..n).map(|i| (i - 1, i)).collect(),
            "cycle" if n >= 3 => (0..n).map(|i| (i, (i + 1) % n)).collect(),
            "cycle" => (1..n).map(|i| (i - 1, i)).collect(),
            "star" => (1..n).map(|i| (0, i)).collect(),
            "complete" => (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .collect(),
            other => return Err(CliError::usage(format!("unknown graph shape `{other}`"))),
        };
        let edges = pairs
            .into_iter()
            .map(|(i, j)| (v[i].clone(), v[j].clone()))
            .collect();
        return Ok((v, edges));
    }
    let mut verts: Vec<String> = Vec::new();
    let mut edges = Vec::new();
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (u, w) = item
            .split_once('-')
            .map(|(u, w)| (u.trim().to_string(), w.trim().to_string()))
            .filter(|(u, w)| !u.is_empty() && !w.is_empty())
            .ok_or_else(|| CliError::usage(format!("edge `{item}` is not of the form u-v")))?;
        for x in [&u, &w] {
            if !verts.contains(x) {
                verts.push(x.clone());
            }
        }
        edges.push((u, w));
    }
    Ok((verts, edges))
}

pub fn count(text: &str) -> Result<usize> {
    text.trim()
        .parse()
        .map_err(|_| CliError::usage(format!("expected a nonnegative integer, got `{text}`")))
}
