mod common;

#[test]
fn artin_action_preserves_the_boundary_product() {
    common::artin_product().unwrap();
}

#[test]
fn braid_relations_hold_as_automorphisms() {
    common::braid_relations().unwrap();
}

#[test]
fn braid_equality_ignores_inserted_cancelling_pairs() {
    common::braid_equal_insertion().unwrap();
}

#[test]
fn linking_matrix_is_independent_of_cycle_choice() {
    common::lk_cycle_choice().unwrap();
}

#[test]
fn a_direction_matrix_is_symmetric_for_full_twists() {
    common::lk_symmetry_full_twist().unwrap();
}

#[test]
fn dlk_main_and_lcm_forms_agree() {
    common::dlk_forms().unwrap();
}

#[test]
fn tlk_is_antisymmetric_and_matches_the_full_twist_shortcut() {
    common::tlk_antisymmetry_shortcut().unwrap();
}

#[test]
fn smith_form_is_a_divisibility_chain_with_unimodular_transforms() {
    common::smith_properties().unwrap();
}

#[test]
fn confluent_normal_forms_are_unique() {
    common::rewriting_uniqueness().unwrap();
}
