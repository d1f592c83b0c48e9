//! Symbolic determinants of the k-hat matrices and their factorizations.

use specgraph::forms::hat_matrix;
use specgraph::poly::{bareiss_det, neg_lambda_minus_two, Var};
use specgraph::verify::verify_hats;

fn main() -> specgraph::Result<()> {
    let p1 = bareiss_det(&hat_matrix(1)?);
    println!("p1 = {p1}");
    println!("p1(-2) = {}", p1.substitute_int(Var::Lambda, -2));
    let p3 = bareiss_det(&hat_matrix(3)?);
    println!("p3 / (-λ-2)^2 = {}", p3.div_exact(&neg_lambda_minus_two().pow(2))?);
    for k in 1..=5 {
        let r = verify_hats(k)?;
        println!("{} {}", r.status, r.lemma);
    }
    Ok(())
}
