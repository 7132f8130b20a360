//! Words in the parenthesized braid group: generators `σ_i` and `a_i`,
//! the shift, the ALD operations, evaluation of terms, the partial action
//! on `o`-terms and the defining relations.

mod action;
mod relations;
mod word;

pub use action::{default_shift_power, not_in_image_shift, pb_act_term, ShiftCertificate};
pub use relations::{
    ald_word_equations, audit_ald_equations, check_shift_commutation, pb_relation_neighbors,
    relation_instances, shift_commutation_sides, AuditEntry, AuditReport, RelationInstance, Schema,
};
pub use word::{
    pb_circ, pb_eval_closed, pb_eval_term, pb_shift, pb_shift_by, pb_star, v_of_1, Family, Letter,
    PBWord,
};
