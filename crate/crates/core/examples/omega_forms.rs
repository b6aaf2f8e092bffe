//! Omega^2 and Omega^3 of a second-order operator on the Grassmann algebra,
//! through the closed expansions and through the definition.

use bverify::omega::{self, OmegaPath};
use bverify::{instances, Result};

fn main() -> Result<()> {
    let gr4 = instances::gr4();
    let spec = &gr4.spec;
    let d = gr4.map("D_odd")?;
    let pairs = [("x2", "x3"), ("x2*x3", "x2*x3"), ("x2*x4", "x3")];
    for (a, b) in pairs {
        let (ea, eb) = (spec.parse_element(a)?, spec.parse_element(b)?);
        let closed = omega::omega2(OmegaPath::Closed, spec, d, &ea, &eb)?;
        let defn = omega::omega2(OmegaPath::Definitional, spec, d, &ea, &eb)?;
        println!("Omega^2({a}, {b}) = {}  (paths agree: {})", spec.render(&closed), closed == defn);
    }

    let mut nonzero = 0;
    let basis = spec.basis(4);
    for a in &basis {
        for b in &basis {
            for c in &basis {
                let args: Vec<_> = [a, b, c]
                    .iter()
                    .map(|m| bverify::AlgebraElement::term((*m).clone(), spec.one()))
                    .collect();
                if !omega::omega_n(spec, d, &args)?.is_zero() {
                    nonzero += 1;
                }
            }
        }
    }
    println!("Omega^3 nonzero on {nonzero} of {} basis triples", basis.len().pow(3));
    Ok(())
}
