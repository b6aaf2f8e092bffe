//! Bicharacters from generator matrices: evaluation, torsion validation and
//! symmetry.

use bverify::grading::Bicharacter;
use bverify::{GroupElement, GroupSpec, Result, ScalarDomain};

fn main() -> Result<()> {
    // Z (+) Z/2 with chi(e1, e1) = -1, chi(e1, e2) = chi(e2, e1) = -1
    let group = GroupSpec::new(1, vec![2])?;
    let chi = Bicharacter::parse(group.clone(), ScalarDomain::Rational, &[vec!["-1", "-1"], vec!["-1", "1"]])?;
    println!("torsion constraints hold: {}", chi.validate().is_valid());
    let g = GroupElement(vec![3, 1]);
    let h = GroupElement(vec![-2, 1]);
    println!("chi({g}, {h}) = {}", chi.eval(&g, &h)?);
    let degrees = [group.basis(0), group.basis(1)];
    println!("symmetric on generators: {}", chi.symmetry_check(&degrees)?.is_symmetric());

    // q on a Z/2 entry violates q^2 = 1
    let bad = Bicharacter::parse(GroupSpec::new(0, vec![2])?, ScalarDomain::rational_function("q"), &[vec!["q"]])?;
    for v in bad.validate().violations {
        println!("violation at ({}, {}): entry^{} = {}", v.row, v.col, v.order, v.power);
    }

    // the quantum-plane character is antisymmetric in exponent, hence symmetric
    let qp = bverify::instances::qp_spec();
    let x = GroupElement(vec![1, 0]);
    let y = GroupElement(vec![0, 1]);
    println!("QP: chi(x,y) = {}, chi(y,x) = {}", qp.chi_eval(&x, &y), qp.chi_eval(&y, &x));
    Ok(())
}
