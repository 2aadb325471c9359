//! Named families of submodular functions for the `gen` command.

use egpkit::generators::{self, BuildingSet, Matroid};
use egpkit::{corpus, GroundSet, Preorder, SubmodFn};

use crate::error::{at, CliError, Result};
use crate::inline;

pub const FAMILIES: &str = "\
permutahedron L1,L2,...      levels, strictly decreasing
standard-permutahedron N     levels N,...,1
preorder-cone SPEC           chain:N, discrete:N, coarse:N or relations like a<b,a<c
matroid SPEC                 uniform:R,N or graphic:EDGES
nestohedron SPEC             graph:EDGES (or path:N, cycle:N, star:N, complete:N) or sets:a,b;b,c
minkowski a,b:W;b,c:W        weighted simplices
corpus NAME                  a built-in sample (corpus list shows the names)";

pub fn generate(family: &str, params: &str) -> Result<SubmodFn> {
    let params = params.trim();
    match family {
        "permutahedron" => {
            let levels = params
                .split(',')
                .map(|l| egpkit::value::parse_rational(l).map_err(at("levels")))
                .collect::<Result<Vec<_>>>()?;
            Ok(generators::permutahedron(&levels)?)
        }
        "standard-permutahedron" => Ok(generators::standard_permutahedron(inline::count(params)?)?),
        "preorder-cone" => Ok(generators::preorder_cone(&cone_preorder(params)?)),
        "matroid" => Ok(generators::matroid_rank(&matroid(params)?)?),
        "nestohedron" => Ok(generators::nestohedron(&building_set(params)?)?),
        "minkowski" => minkowski(params),
        "corpus" => corpus::by_name(params).ok_or_else(|| {
            CliError::usage(format!(
                "unknown sample `{params}`; known: {}",
                corpus_names().join(", ")
            ))
        }),
        other => Err(CliError::usage(format!(
            "unknown family `{other}`; families:\n{FAMILIES}"
        ))),
    }
}

pub fn corpus_names() -> Vec<String> {
    corpus::samples().into_iter().map(|s| s.name).collect()
}

fn letters(n: &str) -> Result<GroundSet> {
    Ok(GroundSet::letters(inline::count(n)?)?)
}

fn cone_preorder(params: &str) -> Result<Preorder> {
    match params.split_once(':') {
        Some(("chain", n)) => {
            let g = letters(n)?;
            let order = g.labels().to_vec();
            Ok(Preorder::chain(g, &order)?)
        }
        Some(("discrete", n)) => Ok(Preorder::discrete(letters(n)?)),
        Some(("coarse", n)) => Ok(Preorder::coarse(letters(n)?)),
        Some((other, _)) => Err(CliError::usage(format!("unknown preorder shape `{other}`"))),
        None => inline::preorder(params),
    }
}

pub fn matroid(params: &str) -> Result<Matroid> {
    match params.split_once(':') {
        Some(("uniform", rn)) => {
            let (r, n) = rn
                .split_once(',')
                .ok_or_else(|| CliError::usage("uniform matroid needs R,N"))?;
            Ok(Matroid::uniform(inline::count(r)?, inline::count(n)?)?)
        }
        Some(("graphic", edges)) => {
            let (_, edges) = inline::graph(edges)?;
            Ok(Matroid::graphic(&edges)?)
        }
        _ => Err(CliError::usage(
            "matroid needs uniform:R,N or graphic:EDGES",
        )),
    }
}

pub fn building_set(params: &str) -> Result<BuildingSet> {
    match params.split_once(':') {
        Some(("sets", sets)) => {
            let blocks: Vec<Vec<String>> = sets.split(';').map(inline::label_list).collect();
            let mut labels: Vec<String> = blocks.iter().flatten().cloned().collect();
            labels.sort();
            labels.dedup();
            let g = GroundSet::new(labels)?;
            let gens = blocks
                .iter()
                .map(|b| g.subset(b))
                .collect::<egpkit::Result<Vec<_>>>()?;
            Ok(BuildingSet::closure_of(g, &gens)?)
        }
        Some(("graph", edges)) => graph_building_set(edges),
        _ => graph_building_set(params),
    }
}

fn graph_building_set(text: &str) -> Result<BuildingSet> {
    let (verts, edges) = inline::graph(text)?;
    let g = GroundSet::new(verts)?;
    Ok(BuildingSet::graphical(g, &edges)?)
}

fn minkowski(params: &str) -> Result<SubmodFn> {
    let mut parts = Vec::new();
    for item in params.split(';').map(str::trim).filter(|s| !s.is_empty()) {
        let (set, w) = item
            .rsplit_once(':')
            .ok_or_else(|| CliError::usage(format!("`{item}` is not of the form a,b:W")))?;
        let w = egpkit::value::parse_rational(w).map_err(at(format!("weight in `{item}`")))?;
        parts.push((inline::label_list(set), w));
    }
    let mut labels: Vec<String> = parts.iter().flat_map(|(s, _)| s.clone()).collect();
    labels.sort();
    labels.dedup();
    let g = GroundSet::new(labels)?;
    let weights = parts
        .into_iter()
        .map(|(s, w)| Ok((g.subset(&s)?, w)))
        .collect::<egpkit::Result<Vec<_>>>()?;
    Ok(generators::minkowski(g, &weights)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use egpkit::conform;

    fn f_vector(z: &SubmodFn) -> Vec<usize> {
        conform::enumerate_faces(z, &Default::default())
            .unwrap()
            .f_vector()
    }

    #[test]
    fn families_build_expected_polytopes() {
        assert_eq!(
            f_vector(&generate("permutahedron", "3,2,1").unwrap()),
            [6, 6, 1]
        );
        assert_eq!(
            f_vector(&generate("standard-permutahedron", "3").unwrap()),
            [6, 6, 1]
        );
        assert_eq!(generate("nestohedron", "path:3").unwrap().n(), 3);
        assert_eq!(
            generate("nestohedron", "a-b,b-c").unwrap(),
            generate("nestohedron", "sets:a,b;b,c").unwrap()
        );
        assert_eq!(
            generate("matroid", "uniform:2,3").unwrap(),
            generate("matroid", "graphic:x-y,y-z,x-z")
                .unwrap()
                .relabel(|l| {
                    match l {
                        "xy" => "a",
                        "xz" => "b",
                        _ => "c",
                    }
                    .to_string()
                })
                .unwrap()
        );
        let m = generate("minkowski", "a,b:1;b,c:2").unwrap();
        assert_eq!(m, corpus::by_name("minkowski-ab-bc").unwrap());
        assert_eq!(generate("preorder-cone", "a<b").unwrap().n(), 2);
    }

    #[test]
    fn bad_parameters_are_rejected() {
        assert!(generate("permutahedron", "1,2").is_err());
        assert!(generate("matroid", "uniform:3").is_err());
        assert!(generate("nosuch", "").is_err());
        assert!(generate("corpus", "nosuch").is_err());
    }
}
