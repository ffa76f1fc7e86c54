use psi_core::eightlevels::{
    boundary_rows_hold, coeff_table, eight_level_coeff, expand_powersum_basis, linear_combination_check,
};

#[test]
fn coefficients_are_integral_with_boundary_rows() {
    for n in 1..=40 {
        let t = coeff_table(n).unwrap();
        assert!(t.polys().iter().all(|p| p.has_integer_coeffs()), "n = {n}");
        assert!(boundary_rows_hold(&t).unwrap(), "n = {n}");
    }
}

#[test]
fn closed_forms_cover_every_residue_class() {
    let mut hits = [0usize; 8];
    for n in 1..=64u64 {
        let basis = expand_powersum_basis(n).unwrap();
        for (k, want) in basis.iter().enumerate() {
            assert_eq!(&eight_level_coeff(n, k as u64).unwrap(), want, "n = {n}, k = {k}");
        }
        hits[(n % 8) as usize] += basis.len();
    }
    assert!(hits.iter().all(|&h| h >= 8), "{hits:?}");
}

#[test]
fn linear_combinations_of_top_operators() {
    for n in 1..=24 {
        for seed in 0..3 {
            assert!(linear_combination_check(n, seed).unwrap(), "n = {n}, seed = {seed}");
        }
    }
}
