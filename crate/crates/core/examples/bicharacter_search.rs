//! Enumerating bicharacters on small finite groups.

use bverify::verify::{bicharacter_search, SearchPredicate, DEFAULT_SEARCH_BOUND};
use bverify::{GroupElement, GroupSpec, Result};

fn show(label: &str, group: &GroupSpec, pred: &SearchPredicate) -> Result<()> {
    let found = bicharacter_search(group, pred, DEFAULT_SEARCH_BOUND)?;
    println!("{label}: {} matches", found.len());
    for chi in found.iter().take(4) {
        let rows: Vec<String> = chi
            .matrix()
            .iter()
            .map(|r| r.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(", "))
            .collect();
        println!("  [{}]", rows.join("; "));
    }
    Ok(())
}

fn main() -> Result<()> {
    let odd = SearchPredicate::ChiEeMinusOne(GroupElement(vec![1]));
    show("Z2, chi(1,1) = -1", &GroupSpec::new(0, vec![2])?, &odd)?;
    show("Z3, chi(1,1) = -1", &GroupSpec::new(0, vec![3])?, &odd)?;
    show("Z4, chi(1,1) = -1", &GroupSpec::new(0, vec![4])?, &odd)?;
    show("Z2xZ4, nonsymmetric", &GroupSpec::new(0, vec![2, 4])?, &SearchPredicate::Nonsymmetric)?;
    Ok(())
}
