//! The quantum plane yx = q^-1 xy and its q-derivatives.

use bverify::{instances, Result};

fn main() -> Result<()> {
    let qp = instances::qp();
    let spec = &qp.spec;
    let yx = spec.parse_element("y*x")?;
    println!("y*x = {}", spec.render(&yx));
    let p = spec.parse_element("(x + y)*(x + y)")?;
    println!("(x+y)^2 = {}", spec.render(&p));

    let dx = qp.map("dx")?;
    for text in ["x*y", "y*x", "x*x*y"] {
        let a = spec.parse_element(text)?;
        println!("dx({text}) = {}", spec.render(&dx.apply(&a)?));
    }
    let dydx = qp.map("dydx")?;
    println!("dy.dx(x*x*y*y) = {}", spec.render(&dydx.apply(&spec.parse_element("x*x*y*y")?)?));
    Ok(())
}
