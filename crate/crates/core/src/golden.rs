//! Regression fixtures in the JSON output schema and a set-level differ.
//!
//! Classes are matched by reduced form. A fixture may label a class with
//! the opposite form `(a, -b, c)` of the one computed here, and the ideal
//! `(u; v)` may belong to either the form or its opposite; orders, genera
//! and principal-genus membership agree on a class and its inverse, so the
//! comparison stays meaningful.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::cli::{parse_form, parse_poly};
use crate::discriminant::Discriminant;
use crate::elliptic::{EllipticCurve, ProjPoint};
use crate::error::{Error, Result};
use crate::ff::PrimeField;
use crate::quadform::QuadForm;
use crate::report::{classify, ClassifyJson, EllipticJson};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldenCase {
    pub name: String,
    pub classify: ClassifyJson,
    pub elliptic: EllipticJson,
}

impl GoldenCase {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            pos: 0,
            msg: format!("fixture: {e}"),
        })
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
            pos: 0,
            msg: format!("{}: {e}", path.display()),
        })?;
        Self::from_json(&text)
    }

    /// Computes a fresh case for `(p, alpha)`.
    pub fn compute(name: &str, disc: &Discriminant) -> Result<Self> {
        let c = classify(disc)?;
        let curve = EllipticCurve::new(disc)?;
        let iso = curve.verify_against(&c.table)?;
        Ok(GoldenCase {
            name: name.to_string(),
            classify: ClassifyJson::new(&c),
            elliptic: EllipticJson::new(&curve, &iso)?,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable") + "\n"
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoldenResult {
    pub name: String,
    pub diffs: Vec<String>,
}

impl GoldenResult {
    pub fn passed(&self) -> bool {
        self.diffs.is_empty()
    }
}

impl fmt::Display for GoldenResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return write!(f, "{}: ok", self.name);
        }
        write!(f, "{}: {} difference(s)", self.name, self.diffs.len())?;
        for d in &self.diffs {
            write!(f, "\n  {d}")?;
        }
        Ok(())
    }
}

/// Recomputes the case and lists every disagreement with the fixture.
pub fn run_golden(case: &GoldenCase) -> GoldenResult {
    let mut diffs = Vec::new();
    if let Err(e) = diff_case(case, &mut diffs) {
        diffs.push(format!("error: {e}"));
    }
    GoldenResult {
        name: case.name.clone(),
        diffs,
    }
}

fn form_of(parts: &[String; 3], field: PrimeField) -> Result<QuadForm> {
    parse_form(&parts.join(","), field)
}

fn diff_case(case: &GoldenCase, diffs: &mut Vec<String>) -> Result<()> {
    let want = &case.classify;
    let field = PrimeField::new(want.p)?;
    let alpha = parse_poly(&want.alpha, field)?;
    let disc = Discriminant::new(alpha.clone())?;
    let got = GoldenCase::compute(&case.name, &disc)?;
    diff_classify(want, &got.classify, field, diffs)?;
    if case.elliptic.p != want.p || parse_poly(&case.elliptic.alpha, field)? != alpha {
        diffs.push("elliptic: p or alpha differs from the class table".into());
    }
    diff_elliptic(&case.elliptic, &got.elliptic, field, diffs)
}

fn diff_classify(
    want: &ClassifyJson,
    got: &ClassifyJson,
    field: PrimeField,
    diffs: &mut Vec<String>,
) -> Result<()> {
    let got_forms = got
        .classes
        .iter()
        .map(|c| form_of(&c.form, field))
        .collect::<Result<Vec<_>>>()?;
    let got_by_form: BTreeMap<QuadForm, usize> =
        got_forms.iter().cloned().enumerate().map(|(i, q)| (q, i)).collect();

    let mut want_forms = Vec::with_capacity(want.classes.len());
    let mut matched = BTreeSet::new();
    for (k, w) in want.classes.iter().enumerate() {
        let q = form_of(&w.form, field)?;
        want_forms.push(q.clone());
        let Some(&i) = got_by_form.get(&q).or_else(|| got_by_form.get(&q.opposite())) else {
            diffs.push(format!("classes[{k}]: form {q} not found (nor its opposite)"));
            continue;
        };
        if !matched.insert(i) {
            diffs.push(format!("classes[{k}]: form {q} matches a class already matched"));
        }
        let g = &got.classes[i];
        let want_ideal = (parse_poly(&w.u, field)?, parse_poly(&w.v, field)?);
        let u = parse_poly(&g.u, field)?;
        let v = parse_poly(&g.v, field)?;
        let inverse_v = (-&v).rem(&u)?;
        let ideal_ok = want_ideal == (u.clone(), v) || want_ideal == (u, inverse_v);
        if !ideal_ok {
            diffs.push(format!(
                "classes[{k}] {q}: ideal {};{} is neither {};{} nor the opposite class",
                w.u, w.v, g.u, g.v
            ));
        }
        if w.order != g.order {
            diffs.push(format!("classes[{k}] {q}: order expected {}, got {}", w.order, g.order));
        }
        if w.genus != g.genus {
            diffs.push(format!("classes[{k}] {q}: genus expected {:?}, got {:?}", w.genus, g.genus));
        }
        if w.principal != g.principal {
            diffs.push(format!(
                "classes[{k}] {q}: principal expected {}, got {}",
                w.principal, g.principal
            ));
        }
    }
    for (i, q) in got_forms.iter().enumerate() {
        if !matched.contains(&i) {
            diffs.push(format!("unexpected class {q} (ideal {};{})", got.classes[i].u, got.classes[i].v));
        }
    }

    if want.invariant_factors != got.invariant_factors {
        diffs.push(format!(
            "invariant_factors: expected {:?}, got {:?}",
            want.invariant_factors, got.invariant_factors
        ));
    }
    if want.num_genera != got.num_genera {
        diffs.push(format!("num_genera: expected {}, got {}", want.num_genera, got.num_genera));
    }

    let blocks = |json: &ClassifyJson, forms: &[QuadForm]| -> Option<BTreeSet<BTreeSet<QuadForm>>> {
        json.cl_merged
            .iter()
            .map(|block| {
                block
                    .iter()
                    .map(|&i| forms.get(i).map(|q| q.clone().min(q.opposite())))
                    .collect::<Option<BTreeSet<_>>>()
            })
            .collect()
    };
    match (blocks(want, &want_forms), blocks(got, &got_forms)) {
        (Some(w), Some(g)) if w == g => {}
        (Some(w), Some(g)) => diffs.push(format!(
            "cl_merged: expected {} blocks {:?}, got {} blocks {:?}",
            w.len(),
            render_blocks(&w),
            g.len(),
            render_blocks(&g)
        )),
        _ => diffs.push("cl_merged: index out of range".into()),
    }
    Ok(())
}

fn render_blocks(blocks: &BTreeSet<BTreeSet<QuadForm>>) -> Vec<Vec<String>> {
    blocks
        .iter()
        .map(|b| b.iter().map(|q| q.to_string()).collect())
        .collect()
}

fn diff_elliptic(
    want: &EllipticJson,
    got: &EllipticJson,
    field: PrimeField,
    diffs: &mut Vec<String>,
) -> Result<()> {
    let got_points: BTreeMap<[u64; 3], (QuadForm, u64)> = got
        .points
        .iter()
        .map(|pt| Ok((pt.point, (form_of(&pt.form, field)?, pt.order))))
        .collect::<Result<_>>()?;
    let mut seen = BTreeSet::new();
    for pt in &want.points {
        let [a, b, c] = pt.point;
        let normalized = ProjPoint::new(
            field.elem(a as i64),
            field.elem(b as i64),
            field.elem(c as i64),
        )
        .map(|q| {
            let (x, y, z) = q.coords();
            [x.value(), y.value(), z.value()]
        });
        let Some(key) = normalized else {
            diffs.push(format!("point ({a}:{b}:{c}) is not a projective point"));
            continue;
        };
        let Some((form, order)) = got_points.get(&key) else {
            diffs.push(format!("point ({a}:{b}:{c}) not on the computed curve"));
            continue;
        };
        seen.insert(key);
        let q = form_of(&pt.form, field)?;
        if *form != q && *form != q.opposite() {
            diffs.push(format!("point ({a}:{b}:{c}): form expected {q} (or opposite), got {form}"));
        }
        if pt.order != *order {
            diffs.push(format!("point ({a}:{b}:{c}): order expected {}, got {order}", pt.order));
        }
    }
    for pt in got_points.keys().filter(|k| !seen.contains(*k)) {
        diffs.push(format!("unexpected point ({}:{}:{})", pt[0], pt[1], pt[2]));
    }
    if want.num_points != 0 && want.num_points != got.num_points {
        diffs.push(format!("num_points: expected {}, got {}", want.num_points, got.num_points));
    }
    if let (Some(w), Some(g)) = (&want.isomorphism, &got.isomorphism) {
        if w.passed != g.passed {
            diffs.push(format!("isomorphism: expected passed={}, got {}", w.passed, g.passed));
        }
    }
    Ok(())
}
