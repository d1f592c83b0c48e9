//! Acceptance criteria, one PASS/FAIL line each. Exits non-zero if any
//! criterion fails.

use std::time::Instant;

use specgraph::forms::{capped_cycle_matrix, cycle_spectrum_closed, Family, Transcribed, Transcriptions};
use specgraph::graph::{distance_matrix, named_graph, NamedGraphSpec};
use specgraph::mates::{brute_force_connected, cospectral_classes, ds_verdict_from_table, enumerate_connected};
use specgraph::poly::{charpoly_exact, mono_text, IntMatrix};
use specgraph::spectra::{compare_spectra, spectrum_of, Spectrum};
use specgraph::verify::{
    run_case_table, verify_case_table, verify_fg_roots, verify_hats, verify_hats_with, verify_interval_table,
    verify_lemma22, verify_lemma22_with, VerificationResult,
};

struct Outcome {
    pass: bool,
    detail: String,
}

fn from_result(r: &VerificationResult) -> Outcome {
    Outcome { pass: r.passed(), detail: r.witnesses.join("; ") }
}

fn named_matrix(spec: NamedGraphSpec) -> IntMatrix {
    distance_matrix(&named_graph(&spec).unwrap()).unwrap().to_int_matrix()
}

fn spectrum(spec: NamedGraphSpec) -> Spectrum {
    spectrum_of(&named_matrix(spec)).unwrap()
}

fn c1_closed_form() -> Outcome {
    from_result(&verify_lemma22(8))
}

fn c2_tab11() -> Outcome {
    let s = spectrum(NamedGraphSpec::Tab(1, 1));
    let want = [8.2882, -0.5578, -0.7639, -1.7304, -5.2361];
    let pass = s.n() == 5 && s.values.iter().zip(want).all(|(x, w)| (x - w).abs() <= 5e-5);
    let shown: Vec<String> = s.values.iter().map(|x| format!("{x:.6}")).collect();
    Outcome { pass, detail: shown.join(", ") }
}

fn c3_cycles() -> Outcome {
    let mut bad = Vec::new();
    for n in 3..=12 {
        if !compare_spectra(&cycle_spectrum_closed(n).unwrap(), &spectrum(NamedGraphSpec::Cycle(n)), 1e-9) {
            bad.push(format!("C{n} closed form"));
        }
    }
    let l2 = spectrum(NamedGraphSpec::Cycle(4)).values[1];
    if l2.abs() > 1e-9 {
        bad.push(format!("λ2(C4) = {l2}"));
    }
    let l3 = spectrum(NamedGraphSpec::Cycle(5)).values[2];
    if (l3 + 0.3820).abs() > 5e-5 {
        bad.push(format!("λ3(C5) = {l3}"));
    }
    for n in 8..=12 {
        let k = charpoly_exact(&named_matrix(NamedGraphSpec::Cycle(n))).root_multiplicity(&(-2).into());
        if k > 2 {
            bad.push(format!("C{n}: multiplicity of -2 is {k}"));
        }
    }
    Outcome { pass: bad.is_empty(), detail: bad.join("; ") }
}

fn c4_capped() -> Outcome {
    let l6 = spectrum_of(&capped_cycle_matrix(6).unwrap()).unwrap().values[4];
    let l7 = spectrum_of(&capped_cycle_matrix(7).unwrap()).unwrap().values[4];
    Outcome {
        pass: (l6 + 3.0).abs() <= 1e-9 && (l7 + 1.5550).abs() <= 5e-5,
        detail: format!("λ5 = {l6:.9} (n = 6), {l7:.6} (n = 7)"),
    }
}

fn c5_case_tables() -> Outcome {
    let mut bad = Vec::new();
    for fam in Family::all() {
        let r = verify_case_table(fam).unwrap();
        if !r.passed() {
            bad.push(format!("{fam}: {}", r.witnesses.join(", ")));
        }
    }
    let h3 = run_case_table(Family::H(3)).unwrap();
    let row = h3.rows.iter().find(|r| r.assignment.values().copied().eq([3, 4, 3])).unwrap();
    if (row.extra[0].value + 1.0).abs() > 1e-9 {
        bad.push(format!("H3 (3,4,3): λ4 = {}", row.extra[0].value));
    }
    Outcome { pass: bad.is_empty(), detail: bad.join(" | ") }
}

fn c6_hats() -> Outcome {
    let mut bad = Vec::new();
    for k in 1..=5 {
        let r = verify_hats(k).unwrap();
        if !r.passed() {
            bad.push(format!("k = {k}: {}", r.witnesses.join("; ")));
        }
    }
    Outcome { pass: bad.is_empty(), detail: bad.join(" | ") }
}

fn c7_fg_roots() -> Outcome {
    from_result(&verify_fg_roots(100))
}

fn c8_interval_table() -> Outcome {
    from_result(&verify_interval_table(8))
}

fn c9_desk_scale() -> Outcome {
    let mut bad = Vec::new();
    for (n, want) in [(4, 6), (5, 21), (6, 112), (7, 853)] {
        let (brute, gen) = (brute_force_connected(n).len(), enumerate_connected(n).unwrap().len());
        if brute != want || gen != want {
            bad.push(format!("n = {n}: brute force {brute}, generator {gen}, expected {want}"));
        }
    }
    let mut checked = 0;
    for n in 5..=9 {
        let table = cospectral_classes(&enumerate_connected(n).unwrap()).unwrap();
        for a in 1..=n - 4 {
            let r = ds_verdict_from_table(&table, a, n - 3 - a).unwrap();
            checked += 1;
            if !r.passed() {
                bad.push(format!("{}: {}", r.lemma, r.witnesses.join("; ")));
            }
        }
    }
    Outcome { pass: bad.is_empty(), detail: if bad.is_empty() { format!("{checked} pairs") } else { bad.join(" | ") } }
}

fn c10_mutations() -> Outcome {
    let t = Transcriptions::default();
    let mut tried = 0;
    let mut missed = Vec::new();
    for which in Transcribed::all() {
        let monos: Vec<_> = t.get(which).terms().map(|(m, _)| *m).collect();
        for mono in monos {
            let bad = t.perturbed(which, &mono, 1);
            let r = match which {
                Transcribed::TabQuintic => verify_lemma22_with(2, &bad),
                Transcribed::HatP(k) | Transcribed::HatQ(k) => verify_hats_with(k, &bad).unwrap(),
            };
            tried += 1;
            let text = format!("coefficient of {}:", mono_text(&mono));
            if r.passed() || !r.witnesses.iter().any(|w| w.contains(&text)) {
                missed.push(format!("{which} {}", mono_text(&mono)));
            }
        }
    }
    Outcome {
        pass: missed.is_empty() && tried > 0,
        detail: if missed.is_empty() { format!("{tried} single-coefficient faults") } else { missed.join(", ") },
    }
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("closed-form charpoly of T(a,b), 1 ≤ a,b ≤ 8", c1_closed_form),
        ("T(1,1) spectrum", c2_tab11),
        ("cycle spectra and the multiplicity of -2", c3_cycles),
        ("capped cycle matrices", c4_capped),
        ("forbidden-subgraph case tables", c5_case_tables),
        ("hat determinants and factorizations", c6_hats),
        ("f/g root intervals, c = 1..100", c7_fg_roots),
        ("interval table, 1 ≤ a,b ≤ 8", c8_interval_table),
        ("no cospectral mate for T(a,b) up to 9 vertices", c9_desk_scale),
        ("single-coefficient faults are caught and localized", c10_mutations),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = f();
        let secs = start.elapsed().as_secs_f64();
        println!("criterion {:>2} {} {name} ({secs:.2} s)", i + 1, if o.pass { "PASS" } else { "FAIL" });
        if !o.pass {
            failed += 1;
        }
        if !o.detail.is_empty() {
            println!("    {}", o.detail);
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
