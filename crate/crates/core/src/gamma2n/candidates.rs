use serde::Serialize;

use super::family::{CandidateLengths, FamilyId, PerFamily};
use super::params::SurfaceParams;
use crate::error::Result;
use crate::hyptrig::{quad_two_right, right_triangle_hyp, HypLength};
use crate::tolerance::ARGMIN_TIE;

/// Orbifold lengths of the five candidate curves.
///
/// In the pentagon model `|CE| = c/2`, `|AC| = t/2`, `|EA₁| = (c−t)/2` and
/// `|AD| = s/2`. `CD` and `DE` are right-triangle hypotenuses; `C` and
/// `CE_PRIME` are read off a doubled pentagon with base `s` and perpendicular
/// offsets `t/2` and `c − t/2` (resp. `(c−t)/2`) on the same side.
pub fn candidate_lengths(p: &SurfaceParams) -> Result<CandidateLengths> {
    let (c, t, s) = (p.c().get(), p.t().get(), p.s());
    let len = |x: f64| HypLength::new(x.max(0.0));
    let half_t = len(0.5 * t)?;
    let half_rest = len(0.5 * (c - t))?;
    let far_offset = len(c - 0.5 * t)?;
    let half_s = s.half();

    Ok(PerFamily {
        cd: right_triangle_hyp(half_t, half_s),
        de: right_triangle_hyp(half_rest, half_s),
        ce: p.c().half(),
        ce_prime: quad_two_right(s, half_t, half_rest)?,
        c: quad_two_right(s, half_t, far_offset)?,
    })
}

/// Length multipliers through the tower of covers
/// Σ → S²(2,…,2) → S²(2,2,n,n) → S²(2,2,2,n).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LiftChain {
    /// S²(2,2,n,n) over S²(2,2,2,n).
    pub r1: u32,
    /// S²(2,2,…,2) over S²(2,2,n,n).
    pub r2: u32,
    /// Σ over S²(2,2,…,2).
    pub r3: u32,
    pub product: u64,
}

impl LiftChain {
    fn new(r1: u32, r2: u32, r3: u32) -> Self {
        LiftChain {
            r1,
            r2,
            r3,
            product: u64::from(r1) * u64::from(r2) * u64::from(r3),
        }
    }
}

pub fn lift_chain(family: FamilyId, n: u32) -> LiftChain {
    match family {
        FamilyId::C => LiftChain::new(1, 1, 2),
        FamilyId::Cd | FamilyId::Ce | FamilyId::CePrime => LiftChain::new(2, 1, 2),
        FamilyId::De => LiftChain::new(2, n, if n % 2 == 1 { 2 } else { 1 }),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SystoleReport {
    pub params: SurfaceParams,
    pub candidates: CandidateLengths,
    pub lift_products: PerFamily<u64>,
    pub lifted: PerFamily<HypLength>,
    pub systole: HypLength,
    /// Every family whose lifted length is within `ARGMIN_TIE` of the systole.
    pub argmin: Vec<FamilyId>,
}

impl SystoleReport {
    /// Families joined with `+`, e.g. `CD+CE+C`.
    pub fn argmin_tag(&self) -> String {
        self.argmin
            .iter()
            .map(|f| f.tag())
            .collect::<Vec<_>>()
            .join("+")
    }
}

/// Lift each candidate to the surface and take the shortest.
pub fn systole_report(p: &SurfaceParams) -> Result<SystoleReport> {
    let candidates = candidate_lengths(p)?;
    let lift_products = PerFamily::from_fn(|f| lift_chain(f, p.n()).product);
    let lifted = PerFamily::from_fn(|f| {
        HypLength::new(lift_products.get(f) as f64 * candidates.get(f).get())
            .expect("product of nonnegative finite values")
    });
    let systole = lifted
        .iter()
        .map(|(_, l)| l)
        .min_by(|a, b| a.get().total_cmp(&b.get()))
        .expect("five families");
    let argmin = lifted
        .iter()
        .filter(|(_, l)| l.get() - systole.get() <= ARGMIN_TIE)
        .map(|(f, _)| f)
        .collect();
    Ok(SystoleReport {
        params: *p,
        candidates,
        lift_products,
        lifted,
        systole,
        argmin,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gamma2n::make_params;

    #[test]
    fn table_of_lift_ratios() {
        let chain = |f, n| {
            let l = lift_chain(f, n);
            (l.r1, l.r2, l.r3, l.product)
        };
        assert_eq!(chain(FamilyId::C, 5), (1, 1, 2, 2));
        assert_eq!(chain(FamilyId::Cd, 5), (2, 1, 2, 4));
        assert_eq!(chain(FamilyId::Ce, 6), (2, 1, 2, 4));
        assert_eq!(chain(FamilyId::CePrime, 6), (2, 1, 2, 4));
        assert_eq!(chain(FamilyId::De, 3), (2, 3, 2, 12));
        assert_eq!(chain(FamilyId::De, 4), (2, 4, 1, 8));
    }

    #[test]
    fn twist_endpoints_collapse_to_half_seam() {
        let p = make_params(5, 1.3, 0.0).unwrap();
        let l = candidate_lengths(&p).unwrap();
        assert!((l.cd.get() - p.s().get() / 2.0).abs() < 1e-12);
        assert_eq!(l.ce.get(), 0.65);

        let p = make_params(5, 1.3, 1.3).unwrap();
        let l = candidate_lengths(&p).unwrap();
        assert!((l.de.get() - p.s().get() / 2.0).abs() < 1e-12);
    }

    #[test]
    fn bolza_point_equalizes() {
        let p = make_params(3, 1.52857, 0.98220).unwrap();
        let l = candidate_lengths(&p).unwrap();
        assert!((l.c.get() - 1.5286).abs() < 1e-4);
        let r = systole_report(&p).unwrap();
        assert!((r.systole.get() - 3.0571).abs() < 2e-4);
        assert_eq!(r.lifted.ce.get(), 2.0 * 1.52857);

        // the twist rounded to 0.98242 still lands within the stated band
        let r = systole_report(&make_params(3, 1.52857, 0.98242).unwrap()).unwrap();
        assert!((r.systole.get() - 3.0571).abs() < 2e-4);
    }

    #[test]
    fn untwisted_bolza_cuff_is_dominated_by_seam_curve() {
        let p = make_params(3, 1.52857, 0.0).unwrap();
        let r = systole_report(&p).unwrap();
        assert_eq!(r.argmin, vec![FamilyId::Cd]);
        assert!((r.systole.get() - 2.0 * p.s().get()).abs() < 1e-12);
        assert!((r.systole.get() - 2.2568).abs() < 1e-3);
    }

    #[test]
    fn argmin_reports_ties() {
        // exact optimum for n = 3
        let k = 1.0 + 2f64.sqrt();
        let c = k.acosh();
        let s = 2.0 * (0.5 / (c / 2.0).sinh()).asinh();
        let t = 2.0 * ((c / 2.0).cosh() / (s / 2.0).cosh()).acosh();
        let r = systole_report(&make_params(3, c, t).unwrap()).unwrap();
        assert_eq!(r.argmin, vec![FamilyId::Cd, FamilyId::Ce, FamilyId::C]);
        assert_eq!(r.argmin_tag(), "CD+CE+C");
    }
}
