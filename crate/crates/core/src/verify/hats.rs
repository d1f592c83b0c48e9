//! Determinants of the k-hat matrices and the factorizations drawn from them.

use std::sync::OnceLock;

use super::report::VerificationResult;
use super::term_check;
use crate::error::Result;
use crate::forms::{hat_matrix, Transcriptions};
use crate::poly::{bareiss_det, neg_lambda_minus_two, MultiPoly, Var};

static DETS: [OnceLock<MultiPoly>; 5] = [const { OnceLock::new() }; 5];

fn derived_det(k: usize) -> Result<&'static MultiPoly> {
    if let Some(p) = DETS.get(k.wrapping_sub(1)).and_then(OnceLock::get) {
        return Ok(p);
    }
    let m = hat_matrix(k)?;
    Ok(DETS[k - 1].get_or_init(|| bareiss_det(&m)))
}

pub fn verify_hats(k: usize) -> Result<VerificationResult> {
    verify_hats_with(k, &Transcriptions::default())
}

/// Checks for k hats:
/// the determinant against the transcribed p_k; the λ = −2 evaluation and
/// the c′ = 0 quotient for k = 1; exact division by (−λ−2)^{k−1} for k ≥ 2;
/// and the constant-term identity that forces a′ + b′ = −4.
pub fn verify_hats_with(k: usize, t: &Transcriptions) -> Result<VerificationResult> {
    let det = derived_det(k)?;
    let mut r = VerificationResult::new(format!("hats:{k}"));
    let p = &t.p[&k];
    let q = &t.q[&k];
    term_check(&mut r, &format!("p{k}"), p, det);

    let quotient = if k == 1 {
        let at_minus_two = p.substitute_int(Var::Lambda, -2);
        let want: MultiPoly = "28*a'*b'*c'".parse().expect("literal parses");
        let diffs = at_minus_two.term_diff(&want);
        r.check(
            "p1(-2) = 28*a'*b'*c'",
            diffs.is_empty(),
            diffs.iter().map(|(m, got, w)| format!("{m}: {got} vs {w}")).collect::<Vec<_>>().join("; "),
        );
        p.substitute_int(Var::CPrime, 0).div_exact(&neg_lambda_minus_two())
    } else {
        p.div_exact(&neg_lambda_minus_two().pow(k as u32 - 1))
    };
    let what =
        if k == 1 { "p1 at c' = 0, divided by (-λ-2)".to_string() } else { format!("p{k} / (-λ-2)^{}", k - 1) };
    match quotient {
        Ok(quot) => {
            r.check(format!("{what} is exact"), true, "");
            term_check(&mut r, &format!("q{k}"), q, &quot);
        }
        Err(e) => {
            r.check(format!("{what} is exact"), false, e.to_string());
        }
    }

    // a + b = a' + b' + (k − 1) from the vertex count
    let shift = MultiPoly::constant(k as i64 - 1);
    let a = &(&(&MultiPoly::var(Var::APrime) + &MultiPoly::var(Var::BPrime)) + &shift) - &MultiPoly::var(Var::B);
    let const_p = t.p_ab.coefficient_of(Var::Lambda, 0).substitute(Var::A, &a);
    let diff = &q.coefficient_of(Var::Lambda, 0) - &const_p;
    let target: MultiPoly = "a' + b' + 4".parse().expect("literal parses");
    let alpha = diff.coeff(target.leading().expect("nonzero").0);
    let ok = alpha != 0.into() && diff == target.scale(&alpha);
    r.check(
        format!("const(q{k}) = const(p_ab) reduces to a' + b' = -4"),
        ok,
        format!("const(q{k}) - const(p_ab) = {diff}"),
    );
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::Transcribed;

    #[test]
    fn all_hats_pass() {
        for k in 1..=5 {
            let r = verify_hats(k).unwrap();
            assert!(r.passed(), "k = {k}: {:?}", r.witnesses);
        }
        assert!(verify_hats(6).is_err());
        assert!(verify_hats(0).is_err());
    }

    #[test]
    fn p1_at_minus_two_is_reported() {
        let r = verify_hats(1).unwrap();
        assert!(r.checks.iter().any(|c| c.name == "p1(-2) = 28*a'*b'*c'" && c.passed));
    }

    #[test]
    fn faults_are_localized() {
        let t = Transcriptions::default();
        let mono = *t.q[&3].terms().last().unwrap().0;
        let r = verify_hats_with(3, &t.perturbed(Transcribed::HatQ(3), &mono, 1)).unwrap();
        assert!(!r.passed());
        assert!(r.witnesses.iter().any(|w| w.starts_with("q3 matches")), "{:?}", r.witnesses);
    }
}
