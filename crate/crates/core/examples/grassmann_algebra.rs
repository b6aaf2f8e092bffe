//! The Grassmann algebra on x1..x4: normal forms, products and the basis.

use bverify::{instances, Result};

fn main() -> Result<()> {
    let spec = instances::gr4_spec();
    let a = spec.parse_element("x2*x1 + 3*x3")?;
    let b = spec.parse_element("x4 - x1")?;
    println!("a = {}", spec.render(&a));
    println!("b = {}", spec.render(&b));
    println!("ab = {}", spec.render(&spec.multiply(&a, &b)?));
    println!("x1*x1 = {}", spec.render(&spec.parse_element("x1*x1")?));

    let basis = spec.basis(4);
    let names: Vec<String> = basis.iter().map(|m| spec.render_monomial(m)).collect();
    println!("{} basis monomials: {}", basis.len(), names.join(", "));

    let v = spec.validate_commutativity(4)?;
    println!("ab = chi(a,b) ba on {} pairs: {}", v.pairs_checked, v.holds());
    Ok(())
}
