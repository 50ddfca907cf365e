use qcong_demo::{cyclotomic_residue, q_binomial, verify_claim};

#[test]
fn q_binomial_strings() {
    let s = q_binomial(4, 2).unwrap();
    assert!(s.contains("2*q^2") || s.contains("2q^2"), "{s}");
    assert_eq!(q_binomial(3, 5).unwrap(), "0");
    assert!(q_binomial(1000, 2).is_err());
}

#[test]
fn residues() {
    // q^3 - 1 vanishes mod Phi_3
    assert_eq!(cyclotomic_residue("-1, 0, 0, 1", 3, 1).unwrap(), "0");
    assert_eq!(cyclotomic_residue("0 0 1", 3, 1).unwrap(), cyclotomic_residue("-1,-1", 3, 1).unwrap());
    assert!(cyclotomic_residue("1, x", 3, 1).is_err());
    assert!(cyclotomic_residue("1", 0, 1).is_err());
}

#[test]
fn claims() {
    assert!(verify_claim("QC-C12-1", 5, 2, 0).unwrap().ends_with("PASS"));
    let fail = verify_claim("PC-C16-4", 3, 1, 0).unwrap();
    assert!(fail.contains("FAIL") && fail.contains("computed=2, expected=1"), "{fail}");
    assert!(verify_claim("PC-ST-M", 5, 1, 3).unwrap().ends_with("PASS"));
    assert!(verify_claim("ID-T11-1", 4, 9, 0).unwrap().contains("SKIP"));
    assert!(verify_claim("NOPE", 4, 1, 0).is_err());
}
