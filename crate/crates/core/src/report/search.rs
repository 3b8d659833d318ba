//! Searches for strongly real groups that are not totally orthogonal.

use rayon::prelude::*;
use serde::Serialize;

use super::analysis::{analyze_group, AnalysisReport, AnalyzeOptions};
use super::corpus::corpus;
use crate::budget::Budget;
use crate::classes::{conjugacy_classes, RealityProfile};
use crate::error::Result;
use crate::families::{construct, FamilySpec};
use crate::group::automorphism::{actions, enumerate_automorphisms, Automorphism};
use crate::group::{semidirect_product, FiniteGroup};
use crate::report::parse_group_spec;

/// The properties checked on every order-32 hit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Order32Properties {
    pub order_32: bool,
    pub exponent_4: bool,
    pub derived_order_2: bool,
    pub strongly_real: bool,
    pub not_totally_orthogonal: bool,
    /// Sixteen linear characters and one of degree 4.
    pub degrees_16_by_1_and_4: bool,
}

impl Order32Properties {
    pub fn all(&self) -> bool {
        self.order_32
            && self.exponent_4
            && self.derived_order_2
            && self.strongly_real
            && self.not_totally_orthogonal
            && self.degrees_16_by_1_and_4
    }

    fn of(report: &AnalysisReport) -> Self {
        let mut expected = vec![1u64; 16];
        expected.push(4);
        Order32Properties {
            order_32: report.order == 32,
            exponent_4: report.exponent == 4,
            derived_order_2: report.derived_order == 2,
            strongly_real: report.flags.strongly_real_group,
            not_totally_orthogonal: !report.flags.totally_orthogonal,
            degrees_16_by_1_and_4: report.degrees == expected,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Order32Hit {
    /// A spec that rebuilds the group, `sdp(C2xQ8,C2,k)`.
    pub spec: String,
    pub report: AnalysisReport,
    pub properties: Order32Properties,
}

#[derive(Clone, Debug, Serialize)]
pub struct Order32Search {
    pub automorphisms: usize,
    /// Conjugacy classes of automorphisms of order 2.
    pub involution_classes: usize,
    pub hits: Vec<Order32Hit>,
}

/// Splits the automorphisms `a` with `a^2 = 1`, `a != 1` into conjugacy
/// classes of the automorphism group; returns one index per class, the
/// smallest.
fn involution_class_representatives(auts: &[Automorphism]) -> Vec<usize> {
    let involutions: Vec<usize> = (0..auts.len())
        .filter(|&i| !auts[i].is_identity() && auts[i].compose(&auts[i]).is_identity())
        .collect();
    let mut seen = vec![false; auts.len()];
    let mut reps = Vec::new();
    for &i in &involutions {
        if seen[i] {
            continue;
        }
        reps.push(i);
        for b in auts {
            let c = b.compose(&auts[i]).compose(&b.inverse());
            if let Some(j) = auts.iter().position(|x| *x == c) {
                seen[j] = true;
            }
        }
    }
    reps
}

/// Builds every `(C2 x Q8) ⋊ C2` with a non-trivial action, one per
/// conjugacy class of involutory automorphisms, and keeps the strongly real
/// ones that are not totally orthogonal.
pub fn search_order32(budget: &Budget) -> Result<Order32Search> {
    let base_spec = parse_group_spec("C2xQ8")?;
    let top_spec = FamilySpec::Cyclic(2);
    let base = construct(&base_spec, budget)?;
    let top = construct(&top_spec, budget)?;
    let auts = enumerate_automorphisms(&base)?;
    let all_actions = actions(&top, &auts);
    let reps = involution_class_representatives(&auts);
    let options = AnalyzeOptions {
        plesken: false,
        budget: *budget,
    };
    let mut hits = Vec::new();
    for &r in &reps {
        let index = all_actions
            .iter()
            .position(|a| a[1] == auts[r])
            .expect("every involution defines an action of C2");
        let spec = FamilySpec::Semidirect(Box::new(base_spec.clone()), Box::new(top_spec.clone()), index);
        let group = semidirect_product(&base, &top, all_actions[index].clone(), budget)?;
        if !is_strongly_real(&group) {
            continue;
        }
        let report = analyze_group(spec.to_string(), group, &options, 0.0)?.report;
        if report.flags.strongly_real_group && !report.flags.totally_orthogonal {
            let properties = Order32Properties::of(&report);
            hits.push(Order32Hit {
                spec: spec.to_string(),
                report,
                properties,
            });
        }
    }
    Ok(Order32Search {
        automorphisms: auts.len(),
        involution_classes: reps.len(),
        hits,
    })
}

fn is_strongly_real(group: &FiniteGroup) -> bool {
    let classes = conjugacy_classes(group);
    let profile = RealityProfile::compute(group, &classes);
    profile.strongly_real_classes == profile.total_classes
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepSummary {
    pub groups_examined: usize,
    pub strongly_real: usize,
    /// Strongly real groups that are not totally orthogonal.
    pub counterexamples: Vec<String>,
}

/// Bases for the semidirect products in [`sweep_small_groups`].
const SWEEP_BASES: &[&str] = &[
    "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10", "C11", "C12", "C13", "C14", "C15", "C2xC2",
    "C2xC4", "C2xC6", "C3xC3", "C2xC2xC2", "C2xC2xC3", "Q8", "D4", "S3", "D5", "D6", "D7", "A4",
];
const SWEEP_TOPS: &[&str] = &["C2", "C3", "C4", "C5", "C2xC2", "C6", "C7"];

/// Every corpus group of order below 32 together with every semidirect
/// product `A ⋊ B` of order below 32 over the sweep bases and tops, checked
/// for strongly real groups that are not totally orthogonal.
pub fn sweep_small_groups(budget: &Budget) -> Result<SweepSummary> {
    let mut candidates: Vec<(String, FiniteGroup)> = Vec::new();
    for spec in corpus() {
        let g = construct(&spec, budget)?;
        if g.order() < 32 {
            candidates.push((spec.to_string(), g));
        }
    }
    for a_text in SWEEP_BASES {
        let a_spec = parse_group_spec(a_text)?;
        let a = construct(&a_spec, budget)?;
        let auts = enumerate_automorphisms(&a)?;
        for b_text in SWEEP_TOPS {
            let b_spec = parse_group_spec(b_text)?;
            let b = construct(&b_spec, budget)?;
            if a.order() * b.order() >= 32 {
                continue;
            }
            for (k, action) in actions(&b, &auts).into_iter().enumerate() {
                let spec = FamilySpec::Semidirect(Box::new(a_spec.clone()), Box::new(b_spec.clone()), k);
                let g = semidirect_product(&a, &b, action, budget)?;
                candidates.push((spec.to_string(), g));
            }
        }
    }
    let options = AnalyzeOptions {
        plesken: false,
        budget: *budget,
    };
    let results: Vec<Result<Option<(bool, String)>>> = candidates
        .into_par_iter()
        .map(|(name, g)| {
            if !is_strongly_real(&g) {
                return Ok(None);
            }
            let report = analyze_group(name.clone(), g, &options, 0.0)?.report;
            Ok(Some((!report.flags.totally_orthogonal, name)))
        })
        .collect();
    let groups_examined = results.len();
    let mut strongly_real = 0;
    let mut counterexamples = Vec::new();
    for r in results {
        if let Some((bad, name)) = r? {
            strongly_real += 1;
            if bad {
                counterexamples.push(name);
            }
        }
    }
    Ok(SweepSummary {
        groups_examined,
        strongly_real,
        counterexamples,
    })
}
