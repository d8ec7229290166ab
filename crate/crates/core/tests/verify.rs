use downsets::verify::{run, Expectations, VerifyOptions};

fn quick() -> VerifyOptions {
    VerifyOptions {
        random_posets: 50,
        lemma1_instances: 50,
        sigma_samples: 50,
        ..VerifyOptions::default()
    }
}

#[test]
fn ledger_names_every_check() {
    let report = run(&Expectations::default(), &quick());
    let ledger = report.ledger();
    println!("{ledger}");
    assert_eq!(ledger.lines().count(), report.checks.len() + 1);
    for c in &report.checks {
        assert!(ledger.contains(c.name));
    }
}

#[test]
fn corrupted_nu_is_reported_by_name() {
    let mut exp = Expectations::default();
    exp.nu[0] += 1;
    let report = run(&exp, &quick());
    assert!(!report.passed());
    let failing: Vec<&str> = report.failures().map(|c| c.name).collect();
    assert!(failing.contains(&"nu"), "{failing:?}");
    assert!(report.ledger().contains("FAIL nu"));
}

#[test]
fn strict_mode_adds_checks() {
    let plain = run(&Expectations::default(), &quick());
    let strict = run(
        &Expectations::default(),
        &VerifyOptions {
            strict: true,
            ..quick()
        },
    );
    assert_eq!(strict.checks.len(), plain.checks.len() + 2);
    assert!(strict.checks.iter().rev().take(2).all(|c| c.passed));
}

#[test]
fn fresh_expectations_pass() {
    let report = run(&Expectations::default(), &quick());
    assert!(report.passed(), "{}", report.ledger());
}
