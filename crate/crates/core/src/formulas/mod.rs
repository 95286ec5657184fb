//! The formula catalog for `P_n(x_1, …, x_m)`, `Q_λ(1, q, …, q^n)` and
//! `Q_λ(1^n)`.

mod determinant;
mod direct;
mod kawanaka;
mod multisum;
mod points;
mod q_one;
mod selberg;
mod staircase;
mod theorem;

pub use determinant::{hyperoctahedral_check, p_determinant, p_theorem_ot, q_det_formula, two_determinant_forms};
pub use direct::{nimmo_q, p_nimmo, q_direct};
pub use multisum::{p_api, p_multisum, p_pfaffian, p_rce, p_schur_expansion, p_two_row_cd};
pub use kawanaka::{
    column_strict_limit, column_strict_truncation_check, kawanaka, kawanaka_truncation_check, kbf_check, kbf_sides,
    schur_monomials, TruncatedSeries,
};
pub use selberg::{epi_sides, krattenthaler, odd_staircase_forms};
pub use staircase::{odd_staircase_count, plain_staircase_via_schur, q_staircase, StaircaseKind};
pub use points::{laurent_in_q, PointSet};
pub use q_one::{q_one, QOneMethod};
pub use theorem::{p_theorem_dft, p_theorem_th, DftForm};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, QContext, RationalFn};
    use crate::tableaux::{gf_marked, StrictPartition};

    fn oracle(lambda: &StrictPartition, n: usize) -> RationalFn {
        let m = lambda.len() as i64;
        RationalFn::from_laurent(&gf_marked(lambda, n + 1)) * &RationalFn::constant(int(1) / int(1 << m))
    }

    fn check(r: u32, f: impl Fn(&PointSet<RationalFn>, usize, &QContext<RationalFn>) -> crate::Result<RationalFn>) {
        let ctx = QContext::symbolic(r).unwrap();
        for lambda in StrictPartition::all(4, 3) {
            let m = lambda.len();
            for n in m.saturating_sub(1)..=3 {
                let pts = PointSet::monomials(&lambda.as_exponents(), 1, &ctx).unwrap();
                let v = f(&pts, n, &ctx).unwrap_or_else(|e| panic!("{lambda} n={n}: {e}"));
                let v = v.deflate(r).unwrap_or_else(|| panic!("{lambda} n={n}: not in Q(q)"));
                assert_eq!(v, oracle(&lambda, n), "{lambda} n={n}");
            }
        }
    }

    #[test]
    fn multisum_matches_tableaux() {
        check(1, |p, n, c| p_multisum(p.xs(), n, c));
    }

    #[test]
    fn pfaffian_matches_tableaux() {
        check(1, |p, n, c| p_pfaffian(p.xs(), n, c));
    }

    #[test]
    fn determinant_forms_match_tableaux() {
        check(1, |p, n, c| p_determinant(p.xs(), n, c));
        check(1, |p, n, c| p_theorem_ot(p.xs(), n, c));
        check(1, |p, n, c| p_nimmo(p.xs(), n, c));
        check(1, |p, n, c| p_schur_expansion(p.xs(), n, c));
    }

    #[test]
    fn th_matches_tableaux() {
        check(2, p_theorem_th);
    }

    #[test]
    fn dft_forms_match_tableaux() {
        for form in DftForm::ALL {
            check(form.root_order(), |p, n, c| {
                if form.odd_total() == ((n + p.len()) % 2 == 1) {
                    p_theorem_dft(p.xs(), n, form, c)
                } else {
                    p_multisum(p.xs(), n, c)
                }
            });
        }
    }
}
