//! The braided tensor square, its braiding, and Delta products.

use bverify::tensor::{self, TensorElement};
use bverify::{instances, Result};

fn main() -> Result<()> {
    let spec = instances::qp_spec();
    let x = spec.parse_monomial("x")?;
    let y = spec.parse_monomial("y")?;
    let t = TensorElement::pair(x.clone(), y.clone(), spec.one());
    let b = tensor::braiding_apply(&spec, &t, false);
    println!("B(x ⊗ y)        = {}", tensor::render(&spec, &b));
    println!("B^-1 B(x ⊗ y)   = {}", tensor::render(&spec, &tensor::braiding_apply(&spec, &b, true)));

    let one_y = TensorElement::pair(bverify::Monomial::unit(), y, spec.one());
    let x_one = TensorElement::pair(x, bverify::Monomial::unit(), spec.one());
    let prod = tensor::tensor_multiply(&spec, &one_y, &x_one)?;
    println!("(1 ⊗ y)(x ⊗ 1)  = {}", tensor::render(&spec, &prod));

    let args = [spec.parse_element("x")?, spec.parse_element("y")?];
    let d2 = tensor::delta_n(&spec, &args)?;
    println!("Delta(x)Delta(y) = {}", tensor::render(&spec, &d2));
    println!("m(Delta(x)Delta(y)) = {}", spec.render(&tensor::contract(&spec, &d2)?));
    Ok(())
}
