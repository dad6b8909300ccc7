//! Walks through the two standard cubic examples:
//! y^2 = x^3+x+1 over F_3 (cyclic of order 4) and y^2 = x^3+x over F_5
//! (Klein four-group).
//!
//! Run with `cargo run --example walkthrough`.

use ffclass::cli::{parse_form, parse_ideal, parse_poly};
use ffclass::oracle::oracle_classes;
use ffclass::report::{classify, classify_text, elliptic_text, EllipticJson};
use ffclass::{Discriminant, EllipticCurve, PrimeField, Result};

fn section(title: &str) {
    println!("\n== {title} ==");
}

fn example(p: u64, alpha: &str) -> Result<Discriminant> {
    let disc = Discriminant::new(parse_poly(alpha, PrimeField::new(p)?)?)?;

    section(&format!("class table for alpha = {alpha} over F_{p}"));
    let c = classify(&disc)?;
    print!("{}", classify_text(&c));

    section("points of y^2 = alpha and their classes");
    let curve = EllipticCurve::new(&disc)?;
    let report = curve.verify_against(&c.table)?;
    print!("{}", elliptic_text(&EllipticJson::new(&curve, &report)?));

    section("brute-force orbit count");
    let orbits = oracle_classes(&disc, disc.degree())?;
    println!(
        "{} forms in the degree box, {} orbits, {} of them positive (class number {})",
        orbits.forms_enumerated,
        orbits.total_orbits,
        orbits.orbit_count,
        c.table.class_number()
    );
    Ok(disc)
}

fn main() -> Result<()> {
    let disc = example(3, "x^3+x+1")?;
    let field = disc.field();

    section("composition in the first example");
    let a = parse_ideal("x;2", &disc)?;
    let b = parse_ideal("x;1", &disc)?;
    println!("(x;2) * (x;1) = {}", a.compose(&b)?);
    println!("(x;2)^2 = {}", a.compose(&a)?);
    println!("(x;2) has order {}", a.order()?);

    section("reduction and proper equivalence");
    let q = parse_form("2x^2+2,1,x", field)?;
    let (r, t) = q.reduce(&disc)?;
    println!("{q} reduces to {r} via [[{}, {}], [{}, {}]]", t.m00, t.m01, t.m10, t.m11);
    let q2 = parse_form("x,2,2x^2+2", field)?;
    let q3 = q2.opposite();
    println!(
        "{q2} and its opposite {q3} properly equivalent: {}",
        q2.proper_equiv(&q3, &disc)?
    );

    example(5, "x^3+x")?;
    Ok(())
}
