//! Brute-force cross-checks behind the `oracle` command.

use egpkit::conform::{self, closure, conforming_oracle, enumerate_faces, glue};
use egpkit::preorder::{canonical_set, enumerate_preorders};
use egpkit::{hopf, invariants, Limits, Preorder, SubmodFn};
use serde::Serialize;

use crate::error::Result;

#[derive(Clone, Debug, Serialize)]
pub struct Row {
    pub sample: String,
    pub check: &'static str,
    pub pass: bool,
    pub detail: String,
}

/// Runs every check on `z`. Checks that need an enumeration above the caps
/// fail the whole run with the cap error.
pub fn run(name: &str, z: &SubmodFn, limits: &Limits) -> Result<Vec<Row>> {
    let mut rows = Vec::new();
    let mut push = |check, pass, detail: String| {
        rows.push(Row {
            sample: name.to_string(),
            check,
            pass,
            detail,
        })
    };

    let conforming = conforming_oracle(z, limits)?;
    let lattice = enumerate_faces(z, limits)?;
    let listed = lattice.preorders();
    push(
        "faces",
        listed == canonical_set(conforming.clone()),
        format!(
            "{} conforming preorders, f-vector {:?}",
            listed.len(),
            lattice.f_vector()
        ),
    );

    let all = enumerate_preorders(z.ground(), limits)?;
    let mut compatible = 0;
    let mut closure_ok = true;
    for p in &all {
        if !conform::is_compatible(p, z)? {
            continue;
        }
        compatible += 1;
        let q = closure(z, p)?;
        closure_ok &= q.is_below(p) && conforming.contains(&q) && closure(z, &q)? == q;
    }
    push(
        "closure",
        closure_ok,
        format!("{compatible} compatible preorders close to conforming ones"),
    );

    let chi = invariants::chi(z, limits)?;
    let extended = !z.is_finite();
    let mut chi_ok = true;
    for n in 0..=4u32 {
        chi_ok &= invariants::chi_character(z, n, extended)? == chi.eval_int(n as i64);
    }
    push("character", chi_ok, format!("chi = {chi} at k = 0..4"));

    let (glued, glue_ok) = glue_check(z, &conforming, limits)?;
    push(
        "glue",
        glue_ok,
        format!("{glued} glued pairs, each the unique conforming match"),
    );

    let ids = hopf::all_identities(z, limits)?;
    let failed: Vec<&str> = ids.iter().filter(|i| !i.holds()).map(|i| i.name).collect();
    push(
        "identities",
        failed.is_empty(),
        if failed.is_empty() {
            format!("{} identities hold", ids.len())
        } else {
            format!("failing: {}", failed.join(", "))
        },
    );
    Ok(rows)
}

fn glue_check(z: &SubmodFn, conforming: &[Preorder], limits: &Limits) -> Result<(usize, bool)> {
    let full = z.full();
    let mut count = 0;
    for s in full.subsets() {
        if s.is_empty() || s == full || !z.is_finite_at(s) {
            continue;
        }
        let rest = full.minus(s);
        let left = conforming_oracle(&z.restrict(s), limits)?;
        let right = conforming_oracle(&z.corestrict(s)?, limits)?;
        for p1 in &left {
            for p2 in &right {
                let g = glue(z, s, p1, p2)?;
                let matches = conforming
                    .iter()
                    .filter(|q| q.is_down_set(s) && &q.restrict(s) == p1 && &q.restrict(rest) == p2)
                    .count();
                if matches != 1 || !conforming.contains(&g) {
                    return Ok((count, false));
                }
                count += 1;
            }
        }
    }
    Ok((count, true))
}
