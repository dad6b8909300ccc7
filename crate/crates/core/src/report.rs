//! Machine-readable (JSON) and human-readable renderings of results.
//!
//! Field names of the classification document are fixed; fixtures and
//! golden tests depend on them.

use serde::{Deserialize, Serialize};

use crate::classgroup::ClassGroupTable;
use crate::cli::{parse_ideal, parse_poly};
use crate::discriminant::Discriminant;
use crate::elliptic::{EllipticCurve, IsomorphismReport};
use crate::error::Result;
use crate::ff::PrimeField;
use crate::genus::{GenusContext, GenusPartition};
use crate::oracle::OrbitReport;
use crate::quadform::QuadForm;

/// A table together with its genus data.
#[derive(Clone, Debug)]
pub struct Classification {
    pub table: ClassGroupTable,
    pub genus: GenusContext,
    pub partition: GenusPartition,
    pub cl_merged: Vec<Vec<usize>>,
}

pub fn classify(disc: &Discriminant) -> Result<Classification> {
    classify_table(ClassGroupTable::enumerate(disc)?)
}

pub fn classify_table(table: ClassGroupTable) -> Result<Classification> {
    let genus = GenusContext::new(table.disc())?;
    let partition = genus.partition(&table)?;
    let cl_merged = table.cl_merged()?;
    Ok(Classification {
        table,
        genus,
        partition,
        cl_merged,
    })
}

fn form_strings(q: &QuadForm) -> [String; 3] {
    [q.a.to_string(), q.b.to_string(), q.c.to_string()]
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassJson {
    pub u: String,
    pub v: String,
    pub form: [String; 3],
    pub order: u64,
    pub genus: Vec<u8>,
    pub principal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyJson {
    pub p: u64,
    pub alpha: String,
    pub classes: Vec<ClassJson>,
    pub invariant_factors: Vec<u64>,
    pub num_genera: usize,
    pub cl_merged: Vec<Vec<usize>>,
    #[serde(default)]
    pub class_number: usize,
    #[serde(default)]
    pub h1_order: u64,
    #[serde(default)]
    pub inherits_group: bool,
}

impl ClassifyJson {
    pub fn new(c: &Classification) -> Self {
        let t = &c.table;
        let classes = (0..t.len())
            .map(|i| ClassJson {
                u: t.classes()[i].u().to_string(),
                v: t.classes()[i].v().to_string(),
                form: form_strings(&t.forms()[i]),
                order: t.orders()[i],
                genus: c.partition.labels[c.partition.class_genus[i]].clone(),
                principal: c.partition.class_genus[i] == c.partition.principal,
            })
            .collect();
        ClassifyJson {
            p: t.disc().field().p(),
            alpha: t.alpha().to_string(),
            classes,
            invariant_factors: t.invariant_factors().to_vec(),
            num_genera: c.partition.count(),
            cl_merged: c.cl_merged.clone(),
            class_number: t.class_number(),
            h1_order: t.h1_order(),
            inherits_group: t.inherits_group(),
        }
    }

    /// Rebuilds the table from the serialized class list, in the given
    /// order. All derived data is recomputed.
    pub fn ingest(&self) -> Result<Classification> {
        let field = PrimeField::new(self.p)?;
        let disc = Discriminant::new(parse_poly(&self.alpha, field)?)?;
        let classes = self
            .classes
            .iter()
            .map(|c| parse_ideal(&format!("{};{}", c.u, c.v), &disc))
            .collect::<Result<Vec<_>>>()?;
        classify_table(ClassGroupTable::from_classes(&disc, classes)?)
    }
}

pub fn classify_text(c: &Classification) -> String {
    let t = &c.table;
    let mut out = format!(
        "p = {}, alpha = {}\nclass number {}, structure {}\n",
        t.disc().field().p(),
        t.alpha(),
        t.class_number(),
        structure_name(t.invariant_factors())
    );
    out += &format!(
        "{:>3}  {:<16} {:<36} {:>5}  {:<8} principal\n",
        "#", "ideal (u;v)", "form (a,b,c)", "order", "genus"
    );
    for i in 0..t.len() {
        let g = c.partition.class_genus[i];
        let label: String = c.partition.labels[g].iter().map(|b| b.to_string()).collect();
        out += &format!(
            "{:>3}  {:<16} {:<36} {:>5}  {:<8} {}\n",
            i,
            t.classes()[i].to_literal(),
            t.forms()[i].to_string(),
            t.orders()[i],
            label,
            if g == c.partition.principal { "yes" } else { "no" }
        );
    }
    out += &format!(
        "genera: {} {:?}\nimproper classes: {} {:?}, group structure inherited: {}\nH^1 order: {}\n",
        c.partition.count(),
        c.partition.genera,
        c.cl_merged.len(),
        c.cl_merged,
        if t.inherits_group() { "yes" } else { "no" },
        t.h1_order()
    );
    out
}

pub fn structure_name(factors: &[u64]) -> String {
    if factors.is_empty() {
        return "trivial".into();
    }
    factors
        .iter()
        .map(|d| format!("Z/{d}"))
        .collect::<Vec<_>>()
        .join(" x ")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointJson {
    /// Normalized projective coordinates `[A, B, C]`.
    pub point: [u64; 3],
    #[serde(default)]
    pub u: String,
    #[serde(default)]
    pub v: String,
    pub form: [String; 3],
    pub order: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsomorphismJson {
    pub passed: bool,
    pub hasse_ok: bool,
    pub bijective: bool,
    pub pairs_checked: usize,
    pub invariant_factors: Vec<u64>,
    pub violations: Vec<String>,
}

impl From<&IsomorphismReport> for IsomorphismJson {
    fn from(r: &IsomorphismReport) -> Self {
        IsomorphismJson {
            passed: r.passed(),
            hasse_ok: r.hasse_ok,
            bijective: r.bijective,
            pairs_checked: r.pairs_checked,
            invariant_factors: r.invariant_factors.clone(),
            violations: r.violations.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EllipticJson {
    pub p: u64,
    pub alpha: String,
    pub points: Vec<PointJson>,
    #[serde(default)]
    pub num_points: usize,
    #[serde(default)]
    pub isomorphism: Option<IsomorphismJson>,
}

impl EllipticJson {
    pub fn new(curve: &EllipticCurve, report: &IsomorphismReport) -> Result<Self> {
        let points = curve
            .enumerate()
            .iter()
            .map(|pt| {
                let class = curve.point_to_class(pt)?;
                let (a, b, c) = pt.coords();
                Ok(PointJson {
                    point: [a.value(), b.value(), c.value()],
                    u: class.u().to_string(),
                    v: class.v().to_string(),
                    form: form_strings(&class.to_form()),
                    order: curve.point_order(pt)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(EllipticJson {
            p: curve.field().p(),
            alpha: curve.alpha().to_string(),
            num_points: points.len(),
            points,
            isomorphism: Some(report.into()),
        })
    }
}

pub fn elliptic_text(json: &EllipticJson) -> String {
    let mut out = format!(
        "curve y^2 = {} over F_{}: {} points\n",
        json.alpha, json.p, json.num_points
    );
    out += &format!(
        "{:<10} {:>5}  {:<16} form\n",
        "point", "order", "ideal (u;v)"
    );
    for pt in &json.points {
        let [a, b, c] = pt.point;
        out += &format!(
            "{:<10} {:>5}  {:<16} ({}, {}, {})\n",
            format!("({a}:{b}:{c})"),
            pt.order,
            format!("{};{}", pt.u, pt.v),
            pt.form[0],
            pt.form[1],
            pt.form[2]
        );
    }
    if let Some(iso) = &json.isomorphism {
        out += &format!(
            "isomorphism onto the class group: {} (Hasse bound {}, bijective {}, {} pairs checked, structure {})\n",
            if iso.passed { "PASS" } else { "FAIL" },
            if iso.hasse_ok { "ok" } else { "violated" },
            iso.bijective,
            iso.pairs_checked,
            structure_name(&iso.invariant_factors)
        );
        for v in &iso.violations {
            out += &format!("  violation: {v}\n");
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleJson {
    pub p: u64,
    pub alpha: String,
    pub degree_bound: usize,
    pub forms_enumerated: usize,
    pub orbit_count: usize,
    pub total_orbits: usize,
    pub escaped: u64,
    pub orbit_reps: Vec<[String; 3]>,
    pub warnings: Vec<String>,
}

impl From<&OrbitReport> for OracleJson {
    fn from(r: &OrbitReport) -> Self {
        OracleJson {
            p: r.alpha.field().p(),
            alpha: r.alpha.to_string(),
            degree_bound: r.degree_bound,
            forms_enumerated: r.forms_enumerated,
            orbit_count: r.orbit_count,
            total_orbits: r.total_orbits,
            escaped: r.escaped,
            orbit_reps: r.orbit_reps.iter().map(form_strings).collect(),
            warnings: r.warnings.clone(),
        }
    }
}

pub fn oracle_text(r: &OracleJson) -> String {
    let mut out = format!(
        "alpha = {} over F_{}, degree bound {}\n{} forms enumerated, {} orbits ({} positive), {} moves left the box\n",
        r.alpha, r.p, r.degree_bound, r.forms_enumerated, r.total_orbits, r.orbit_count, r.escaped
    );
    for rep in &r.orbit_reps {
        out += &format!("  ({}, {}, {})\n", rep[0], rep[1], rep[2]);
    }
    for w in &r.warnings {
        out += &format!("warning: {w}\n");
    }
    out
}
