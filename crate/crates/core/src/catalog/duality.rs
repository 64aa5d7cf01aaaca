//! The q = 1 limit of the rescaled sl2 function algebras against the dual
//! of the standard sl2 bialgebra.
//!
//! Identification, in the `e h f` basis of the standard bialgebra:
//! `b_v -> e*`, `c_v -> f*`, `d_v -> -h*`. The Borel presentation uses the
//! same map on `b_v, d_v` against the dual of `span(e, h)`.

use super::{borel_sl2, fq_sl, CatalogError};
use crate::coeff::Rational;
use crate::drinfeld::{limit_lie_bialgebra, vee_functor};
use crate::liebialg::LieBialgebra;
use crate::report::CheckReport;

fn unit(n: usize, k: usize, sign: i64) -> Vec<Rational> {
    let mut v = vec![Rational::from_integer(0.into()); n];
    v[k] = Rational::from_integer(sign.into());
    v
}

/// Images of the limit basis in dual coordinates, for the full algebra.
pub fn sl2_identification() -> Vec<Vec<Rational>> {
    vec![unit(3, 0, 1), unit(3, 2, 1), unit(3, 1, -1)]
}

/// Same, for the Borel presentation against the dual of `span(e, h)`.
pub fn borel_identification() -> Vec<Vec<Rational>> {
    vec![unit(2, 0, 1), unit(2, 1, -1)]
}

/// One report line per presentation; each passes when the limit of the
/// rescaled algebra is isomorphic to the expected dual via the fixed map.
pub fn check_sl2_duality() -> Result<CheckReport, CatalogError> {
    let sl2 = LieBialgebra::standard_sl(2)?;
    let cases = [
        (fq_sl(2)?, sl2.dual_bialgebra(), sl2_identification()),
        (borel_sl2()?, sl2.restrict(&[0, 1])?.dual_bialgebra(), borel_identification()),
    ];
    let mut r = CheckReport::new();
    for (p, target, images) in cases {
        let v = vee_functor(&p).map_err(|e| CatalogError::Build(e.to_string()))?;
        let (lim, _) = limit_lie_bialgebra(&v).map_err(|e| CatalogError::Build(e.to_string()))?;
        let ok = lim.is_isomorphic_via(&target, &images);
        r.record(format!("limit of {} matches dual", v.name), (!ok).then(|| format!("limit:\n{lim}\nexpected:\n{target}")));
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_limits_match() {
        let r = check_sl2_duality().unwrap();
        assert_eq!(r.verdict(), crate::report::Status::Pass, "{r}");
        assert_eq!(r.entries.len(), 2);
    }

    #[test]
    fn wrong_sign_is_rejected() {
        let sl2 = LieBialgebra::standard_sl(2).unwrap();
        let v = vee_functor(&fq_sl(2).unwrap()).unwrap();
        let (lim, _) = limit_lie_bialgebra(&v).unwrap();
        let mut images = sl2_identification();
        images[2] = unit(3, 1, 1);
        assert!(!lim.is_isomorphic_via(&sl2.dual_bialgebra(), &images));
        assert!(!lim.is_isomorphic_via(&sl2, &sl2_identification()));
    }

    #[test]
    fn restrict_rejects_non_sub_bialgebras() {
        let sl2 = LieBialgebra::standard_sl(2).unwrap();
        assert!(sl2.restrict(&[0, 2]).is_err());
        assert!(sl2.restrict(&[0, 1]).is_ok());
    }
}
