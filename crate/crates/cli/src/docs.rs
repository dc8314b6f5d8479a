use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use two2one_core::lowdeg::LemmaCheck;
use two2one_core::search::{CurveCount, FieldDesc, SearchReport, TableDiff, TableId};
use two2one_core::two2one::{HistogramSummary, IdentityCheck};
use two2one_core::{Fe, SparsePoly};

use crate::emit::Emit;

fn field_name(f: &FieldDesc) -> String {
    format!("gf2_{}/{}", f.n, f.modulus)
}

fn fibers(h: &HistogramSummary) -> String {
    h.fiber_sizes.iter().map(|(size, count)| format!("{size}:{count}")).collect::<Vec<_>>().join(" ")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckDoc {
    pub field: FieldDesc,
    pub poly: SparsePoly,
    pub histogram: HistogramSummary,
}

impl Emit for CheckDoc {
    fn csv_header(&self) -> Vec<&'static str> {
        vec!["n", "modulus", "poly", "image_size", "fiber_sizes", "two_to_one"]
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        let h = &self.histogram;
        vec![vec![
            self.field.n.to_string(),
            self.field.modulus.clone(),
            self.poly.to_string(),
            h.image_size.to_string(),
            fibers(h),
            h.two_to_one.to_string(),
        ]]
    }

    fn text(&self) -> String {
        let h = &self.histogram;
        format!(
            "f = {} over {}\nimage size {} of {}\nfiber sizes (size:count) {}\n2-to-1: {}\n",
            self.poly,
            field_name(&self.field),
            h.image_size,
            1u64 << h.n,
            fibers(h),
            h.two_to_one
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Instance {
    pub poly: SparsePoly,
    pub two_to_one: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyDoc {
    pub family: String,
    pub field: FieldDesc,
    pub instances: Vec<Instance>,
    pub verified: bool,
}

impl Emit for FamilyDoc {
    fn csv_header(&self) -> Vec<&'static str> {
        vec!["family", "n", "modulus", "poly", "two_to_one"]
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        self.instances
            .iter()
            .map(|i| {
                vec![
                    self.family.clone(),
                    self.field.n.to_string(),
                    self.field.modulus.clone(),
                    i.poly.to_string(),
                    i.two_to_one.to_string(),
                ]
            })
            .collect()
    }

    fn text(&self) -> String {
        let mut s = format!("{} over {}: {} instance(s)\n", self.family, field_name(&self.field), self.instances.len());
        for i in &self.instances {
            let _ = writeln!(s, "  {}  2-to-1: {}", i.poly, i.two_to_one);
        }
        let _ = writeln!(s, "verified: {}", self.verified);
        s
    }
}

impl Emit for SearchReport {
    fn csv_header(&self) -> Vec<&'static str> {
        vec!["n", "modulus", "shape", "dedupe", "poly", "orbit_size"]
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        self.hits
            .iter()
            .map(|h| {
                vec![
                    self.field.n.to_string(),
                    self.field.modulus.clone(),
                    self.shape.to_string(),
                    self.dedupe.to_string(),
                    h.poly.to_string(),
                    h.orbit_size.to_string(),
                ]
            })
            .collect()
    }

    fn text(&self) -> String {
        let mut s = format!(
            "{} search over {} (dedupe {}): {} hit(s), {} candidates scanned\n",
            self.shape,
            field_name(&self.field),
            self.dedupe,
            self.hits.len(),
            self.scanned
        );
        for h in &self.hits {
            let _ = writeln!(s, "  {}  orbit {}", h.poly, h.orbit_size);
        }
        if let Some(note) = &self.note {
            let _ = writeln!(s, "note: {note}");
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TablesDoc {
    pub table: TableId,
    pub diffs: Vec<TableDiff>,
    pub empty: bool,
}

impl Emit for TablesDoc {
    fn csv_header(&self) -> Vec<&'static str> {
        vec!["table", "n", "modulus", "policy", "expected", "found", "missing", "unexpected", "notes"]
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        self.diffs
            .iter()
            .map(|d| {
                vec![
                    d.table.to_string(),
                    d.field.n.to_string(),
                    d.field.modulus.clone(),
                    d.policy.clone(),
                    d.expected.to_string(),
                    d.found.to_string(),
                    d.missing.join("; "),
                    d.unexpected.join("; "),
                    d.notes.join("; "),
                ]
            })
            .collect()
    }

    fn text(&self) -> String {
        let mut s: String = self.diffs.iter().map(|d| d.to_string()).collect();
        let verdict = if self.empty { "diff empty" } else { "differences found" };
        let _ = writeln!(s, "table {}: {verdict}", self.table);
        s
    }
}

impl Emit for IdentityCheck {
    fn csv_header(&self) -> Vec<&'static str> {
        vec!["theorem", "n", "checked", "passed", "first_failure"]
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        vec![vec![
            self.theorem.to_string(),
            self.n.to_string(),
            self.checked.to_string(),
            self.passed().to_string(),
            self.first_failure.map(|a| a.to_string()).unwrap_or_default(),
        ]]
    }

    fn text(&self) -> String {
        match self.first_failure {
            None => format!(
                "theorem {} over GF(2^{}): resultant matches the closed form for all {} values of a\n",
                self.theorem, self.n, self.checked
            ),
            Some(a) => format!("theorem {} over GF(2^{}): resultant differs at a = {a}\n", self.theorem, self.n),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointsDoc {
    pub field: FieldDesc,
    pub a3: Fe,
    pub a2: Fe,
    pub a1: Fe,
    pub count: CurveCount,
}

impl Emit for PointsDoc {
    fn csv_header(&self) -> Vec<&'static str> {
        vec!["n", "modulus", "a3", "a2", "a1", "points", "oracle", "lower_bound", "irreducible_upper"]
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        let c = &self.count;
        vec![vec![
            self.field.n.to_string(),
            self.field.modulus.clone(),
            self.a3.to_string(),
            self.a2.to_string(),
            self.a1.to_string(),
            c.points.to_string(),
            c.oracle.to_string(),
            c.lower_bound.to_string(),
            c.irreducible_upper.to_string(),
        ]]
    }

    fn text(&self) -> String {
        let c = &self.count;
        format!(
            "G for (a3, a2, a1) = ({}, {}, {}) over {}\npoints {} (oracle {})\nlower bound {} ({})\nirreducible upper bound {}\n",
            self.a3,
            self.a2,
            self.a1,
            field_name(&self.field),
            c.points,
            c.oracle,
            c.lower_bound,
            if c.meets_lower_bound() { "met" } else { "violated" },
            c.irreducible_upper
        )
    }
}

impl Emit for LemmaCheck {
    fn csv_header(&self) -> Vec<&'static str> {
        vec!["lemma", "n", "checked", "mismatches", "first_mismatch"]
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        vec![vec![
            self.lemma.to_string(),
            self.n.to_string(),
            self.checked.to_string(),
            self.mismatches.to_string(),
            self.first_mismatch.clone().unwrap_or_default(),
        ]]
    }

    fn text(&self) -> String {
        let mut s = format!(
            "lemma {} over GF(2^{}): {} inputs, {} mismatches\n",
            self.lemma, self.n, self.checked, self.mismatches
        );
        if let Some(m) = &self.first_mismatch {
            let _ = writeln!(s, "first mismatch: {m}");
        }
        s
    }
}
