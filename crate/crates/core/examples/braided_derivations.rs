//! Extending generator values to braided derivations and checking the
//! Leibniz rule, including a map that is not a derivation.

use std::collections::BTreeMap;
use std::sync::Arc;

use bverify::omega::{check_braided_derivation, GradedLinearMap};
use bverify::{instances, GroupElement, Result};

fn main() -> Result<()> {
    let spec = Arc::new(instances::gr4_spec());
    let d2 = GradedLinearMap::derivation_named(&spec, &[("x2", spec.unit())], GroupElement(vec![-1]))?;
    let x1x2 = spec.parse_element("x1*x2")?;
    println!("d2(x1*x2) = {}", spec.render(&d2.apply(&x1x2)?));
    println!("d2 satisfies Leibniz: {}", check_braided_derivation(&spec, &d2, 4)?.holds());

    // E(x1) = 1 and zero elsewhere is not a derivation
    let mut images = BTreeMap::new();
    images.insert(spec.parse_monomial("x1")?, spec.unit());
    let e = GradedLinearMap::table(&spec, GroupElement(vec![-1]), images, 4)?;
    let v = check_braided_derivation(&spec, &e, 4)?;
    let first = &v.failures[0];
    let inputs: Vec<String> = first.inputs.iter().map(|m| spec.render_monomial(m)).collect();
    println!(
        "table map fails on {} pairs; first ({}): {} vs {}",
        v.failures.len(),
        inputs.join(", "),
        spec.render(&first.lhs),
        spec.render(&first.rhs)
    );
    Ok(())
}
