//! The phased three-color family that defeats FF, BF, WF, and Pseudo.
//!
//! `N` phases; each phase is `M` white items followed by `2M` red/blue
//! items in alternation starting with red. All sizes are tiny, so only the
//! color constraint matters and an offline packing puts one white, one red
//! and one blue item of every phase into each of `M` bins. The greedy
//! algorithms instead funnel all colored items into one bin and burn `M-1`
//! fresh bins on the white batch of every later phase, ending at
//! `N*M - N + 1` bins.
//!
//! The `eps` variant (all sizes `1/(N^2 M^2)`) does this to FF, BF, and
//! Pseudo. The `wf` variant additionally shrinks every item except the last
//! `M-1` whites of each phase to `eps^2`, so the colored bin always has the
//! largest empty space and Worst Fit funnels into it too.

use super::AdversaryError;
use crate::color::Color;
use crate::instance::Instance;
use crate::packing::{validate_packing, Packing};
use crate::size::Size;
use num_bigint::BigInt;
use num_rational::BigRational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Prop1Variant {
    Eps,
    Wf,
}

impl Prop1Variant {
    pub fn token(self) -> &'static str {
        match self {
            Prop1Variant::Eps => "prop1-eps",
            Prop1Variant::Wf => "prop1-wf",
        }
    }
}

#[derive(Debug, Clone)]
pub struct Prop1 {
    pub variant: Prop1Variant,
    pub m: u64,
    pub n: u64,
    /// `1/(N^2 M^2)`.
    pub eps: BigRational,
    pub instance: Instance,
    /// `M` bins, one white/red/blue triple per phase per bin.
    pub certificate: Packing,
    pub opt_upper_bound: usize,
    /// Bins the targeted greedy algorithms end with: `N*M - N + 1`.
    pub greedy_bins: usize,
}

pub fn gen_prop1(variant: Prop1Variant, m: u64, n: u64) -> Result<Prop1, AdversaryError> {
    if m < 4 || n < 2 {
        return Err(AdversaryError::BadParams(format!(
            "prop1 requires M >= 4 and N >= 2, got M={m}, N={n}"
        )));
    }
    let eps = BigRational::new(BigInt::from(1), BigInt::from(n * n) * BigInt::from(m * m));
    let delta = &eps * &eps;
    let eps_size = Size::new(eps.clone()).expect("eps is in (0, 1)");
    let delta_size = Size::new(delta).expect("delta is in (0, 1)");

    let mut items: Vec<(Color, Size)> = Vec::with_capacity((3 * m * n) as usize);
    let mut labels: Vec<usize> = Vec::with_capacity((3 * m * n) as usize);
    for _phase in 0..n {
        for w in 0..m {
            let size = match variant {
                Prop1Variant::Eps => eps_size.clone(),
                // Only the last M-1 whites of a phase carry eps.
                Prop1Variant::Wf if w == 0 => delta_size.clone(),
                Prop1Variant::Wf => eps_size.clone(),
            };
            items.push((Color::white(), size));
            labels.push(w as usize);
        }
        for t in 0..m {
            let size = match variant {
                Prop1Variant::Eps => eps_size.clone(),
                Prop1Variant::Wf => delta_size.clone(),
            };
            items.push((Color::red(), size.clone()));
            labels.push(t as usize);
            items.push((Color::blue(), size));
            labels.push(t as usize);
        }
    }
    let instance = Instance::new(items);
    let certificate =
        Packing::from_assignment(&instance, &labels).expect("the per-phase triples pack feasibly");
    debug_assert_eq!(validate_packing(&instance, &certificate), Ok(()));
    Ok(Prop1 {
        variant,
        m,
        n,
        eps,
        instance,
        certificate,
        opt_upper_bound: m as usize,
        greedy_bins: (n * m - n + 1) as usize,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algo::{best_fit, first_fit, run, worst_fit, Pseudo, TieBreak};
    use crate::bounds;
    use num_traits::Zero;

    #[test]
    fn eps_variant_shape() {
        let gen = gen_prop1(Prop1Variant::Eps, 4, 2).unwrap();
        assert_eq!(gen.instance.len(), 24);
        let expected = Size::ratio(1, 64).unwrap();
        assert!(gen.instance.items().iter().all(|it| it.size == expected));
        assert_eq!(gen.certificate.num_bins(), 4);
        assert_eq!(validate_packing(&gen.instance, &gen.certificate), Ok(()));
        // Total size 24/64 = 3/8.
        assert_eq!(
            bounds::lb0(&gen.instance),
            BigRational::new(3.into(), 8.into())
        );
    }

    #[test]
    fn greedy_algorithms_hit_the_bad_count() {
        let gen = gen_prop1(Prop1Variant::Eps, 4, 2).unwrap();
        for alg in [
            &mut first_fit(TieBreak::MinIndex) as &mut dyn crate::algo::OnlineAlgorithm,
            &mut best_fit(TieBreak::MinIndex),
            &mut Pseudo::new(),
        ] {
            let (packing, _) = run(alg, &gen.instance).unwrap();
            assert_eq!(packing.num_bins(), gen.greedy_bins, "alg {}", alg.name());
        }
        let wf_gen = gen_prop1(Prop1Variant::Wf, 4, 2).unwrap();
        let (packing, _) = run(&mut worst_fit(TieBreak::MinIndex), &wf_gen.instance).unwrap();
        assert_eq!(packing.num_bins(), 7);
    }

    #[test]
    fn parameter_guards() {
        assert!(gen_prop1(Prop1Variant::Eps, 3, 2).is_err());
        assert!(gen_prop1(Prop1Variant::Eps, 4, 1).is_err());
    }

    #[test]
    fn wf_variant_sizes() {
        let gen = gen_prop1(Prop1Variant::Wf, 4, 2).unwrap();
        // First white of each phase and all colored items carry delta.
        let eps = Size::new(gen.eps.clone()).unwrap();
        let delta = Size::new(&gen.eps * &gen.eps).unwrap();
        let items = gen.instance.items();
        assert_eq!(items[0].size, delta);
        assert_eq!(items[1].size, eps);
        assert_eq!(items[4].size, delta);
        assert!(!gen.eps.is_zero());
    }
}
