use proptest::prelude::*;
use torus_twovalued::braid::{
    alpha, pp_act, sigma_conj, B2Element, GroupElement, P2Element, PuncturedElement,
};
use torus_twovalued::classify::{
    canonical_pair, free_equal, is_self_symmetric, swap_class, unordered_equal, SplitMapClass,
};
use torus_twovalued::confmetric::{hausdorff, torus_dist, Configuration, TorusPoint};
use torus_twovalued::fixroot::{
    can_deform_fixed_point_free, fixed_to_root, lift_proportional, nielsen, root_to_fixed, verify_lift,
    DeformVerdict, RootData,
};
use torus_twovalued::freegroup::{
    are_conjugate, cyclic_reduce, primitive_root, AbVector, Alphabet, FreeWord, Letter,
};
use torus_twovalued::hatcalc::{is_hat_conjugate, solve_e1, E1Witness};

fn word(alphabet: Alphabet, max_len: usize) -> impl Strategy<Value = FreeWord> {
    let rank = alphabet.rank() as u8;
    prop::collection::vec((0..rank, any::<bool>()), 0..=max_len).prop_map(move |v| {
        FreeWord::reduce(alphabet, v.into_iter().map(|(g, i)| Letter::new(g, i))).unwrap()
    })
}

fn uv(max_len: usize) -> impl Strategy<Value = FreeWord> {
    word(Alphabet::Uv, max_len)
}

fn p2() -> impl Strategy<Value = P2Element> {
    (uv(10), -20i64..=20, -20i64..=20).prop_map(|(w, x, y)| P2Element::new(w, AbVector(x, y)).unwrap())
}

fn b2() -> impl Strategy<Value = B2Element> {
    (p2(), any::<bool>()).prop_map(|(g, e)| B2Element::new(g, e))
}

fn punctured() -> impl Strategy<Value = PuncturedElement> {
    (word(Alphabet::Uvb, 6), word(Alphabet::Xy, 4)).prop_map(|(k, t)| PuncturedElement::new(k, t).unwrap())
}

fn class() -> impl Strategy<Value = SplitMapClass> {
    (uv(6), -3i64..=3, -3i64..=3, prop::array::uniform4(-4i64..=4))
        .prop_map(|(w, r, s, l)| SplitMapClass::from_data(w, r, s, l).unwrap())
}

fn point() -> impl Strategy<Value = TorusPoint> {
    (0.0f64..1.0, 0.0f64..1.0).prop_map(|(x, y)| TorusPoint::new(x, y).unwrap())
}

fn configuration(n: usize) -> impl Strategy<Value = Configuration> {
    prop::collection::vec(point(), n).prop_map(|v| Configuration::new(v).unwrap())
}

proptest! {
    #[test]
    fn free_group_axioms(a in uv(12), b in uv(12), c in uv(12)) {
        let ab_c = a.multiply(&b).unwrap().multiply(&c).unwrap();
        prop_assert_eq!(&ab_c, &a.multiply(&b.multiply(&c).unwrap()).unwrap());
        prop_assert!(a.multiply(&a.inverse()).unwrap().is_identity());
        prop_assert_eq!(a.inverse().inverse(), a.clone());
    }

    #[test]
    fn hat_is_an_involutive_automorphism(a in uv(12), b in uv(12)) {
        let hat_ab = a.multiply(&b).unwrap().hat().unwrap();
        prop_assert_eq!(hat_ab, a.hat().unwrap().multiply(&b.hat().unwrap()).unwrap());
        prop_assert_eq!(a.hat().unwrap().hat().unwrap(), a.clone());
        prop_assert_eq!(a.hat().unwrap().abelianize().unwrap(), a.abelianize().unwrap().checked_neg().unwrap());
    }

    #[test]
    fn words_print_and_parse_back(w in word(Alphabet::Uvb, 20)) {
        prop_assert_eq!(FreeWord::parse_in(Alphabet::Uvb, &w.to_string()).unwrap(), w);
    }

    #[test]
    fn cyclic_reduction_recomposes(w in uv(16)) {
        let (c, q) = cyclic_reduce(&w);
        prop_assert_eq!(FreeWord::product(Alphabet::Uv, [&c, &q, &c.inverse()]).unwrap(), w);
    }

    #[test]
    fn conjugates_are_detected_with_a_witness(w in uv(10), g in uv(6)) {
        let h = w.conjugate_by(&g).unwrap();
        let found = are_conjugate(&w, &h).unwrap().expect("conjugate by construction");
        prop_assert_eq!(w.conjugate_by(&found).unwrap(), h);
    }

    #[test]
    fn primitive_root_recomposes(w in uv(8), k in 1i64..4) {
        prop_assume!(!w.is_identity());
        let p = w.pow(k).unwrap();
        let root = primitive_root(&p).unwrap();
        prop_assert_eq!(root.root.pow(root.exponent).unwrap(), p);
        prop_assert_eq!(primitive_root(&root.root).unwrap().exponent, 1);
        prop_assert_eq!(root.exponent % k, 0);
    }

    #[test]
    fn lambda_lambda_hat_powers_are_hat_conjugate(lambda in uv(6), l in -3i64..=3) {
        let target = lambda.multiply(&lambda.hat().unwrap()).unwrap().pow(l).unwrap();
        let wit = is_hat_conjugate(&target).unwrap().expect("of the form (λλ̂)^l");
        prop_assert_eq!(wit.recompose().unwrap(), target);
    }

    #[test]
    fn e1_witnesses_recompose(lambda in uv(4), r in -3i64..=3, s in -3i64..=3) {
        let (a, b) = E1Witness { lambda, r, s }.recompose().unwrap();
        prop_assume!(a.multiply(&b).unwrap().len() == a.len() + b.len());
        let wit = solve_e1(&a, &b).unwrap().expect("constructed instance");
        prop_assert_eq!(wit.recompose().unwrap(), (a, b));
    }

    #[test]
    fn p2_is_a_group(g in p2(), h in p2(), k in p2()) {
        prop_assert_eq!(g.mul(&h).unwrap().mul(&k).unwrap(), g.mul(&h.mul(&k).unwrap()).unwrap());
        prop_assert!(g.mul(&g.inverse().unwrap()).unwrap().is_identity());
        prop_assert_eq!(g.to_string().parse::<P2Element>().unwrap(), g);
    }

    #[test]
    fn sigma_conjugation_squares_to_the_commutator(g in p2()) {
        let c = P2Element::sigma_squared();
        prop_assert_eq!(sigma_conj(&sigma_conj(&g).unwrap()).unwrap(), g.conjugate_by(&c).unwrap());
        prop_assert_eq!(sigma_conj(&c).unwrap(), c);
    }

    #[test]
    fn b2_is_a_group(g in b2(), h in b2(), k in b2()) {
        prop_assert_eq!(g.mul(&h).unwrap().mul(&k).unwrap(), g.mul(&h.mul(&k).unwrap()).unwrap());
        prop_assert!(g.mul(&g.inverse().unwrap()).unwrap().is_identity());
        prop_assert!(g.inverse().unwrap().mul(&g).unwrap().is_identity());
        let s = B2Element::sigma();
        let sgs = g.conjugate_by(&s).unwrap();
        if g.epsilon() == 0 {
            prop_assert_eq!(sgs.coset_rep(), &sigma_conj(g.coset_rep()).unwrap());
        }
        prop_assert_eq!(g.to_string().parse::<B2Element>().unwrap(), g);
    }

    #[test]
    fn punctured_group_is_a_group(g in punctured(), h in punctured(), k in punctured()) {
        prop_assert_eq!(g.mul(&h).unwrap().mul(&k).unwrap(), g.mul(&h.mul(&k).unwrap()).unwrap());
        prop_assert!(g.mul(&g.inverse().unwrap()).unwrap().is_identity());
        prop_assert_eq!(g.to_string().parse::<PuncturedElement>().unwrap(), g);
    }

    #[test]
    fn action_round_trip(t in word(Alphabet::Xy, 5), k in word(Alphabet::Uvb, 6)) {
        let moved = pp_act(&t, &k).unwrap();
        prop_assert_eq!(pp_act(&t.inverse(), &moved).unwrap(), k.clone());
        // the action is by automorphisms
        let k2 = k.multiply(&k).unwrap();
        prop_assert_eq!(pp_act(&t, &k2).unwrap(), moved.multiply(&moved).unwrap());
    }

    #[test]
    fn alpha_is_a_homomorphism(g in punctured(), h in punctured()) {
        let lhs = alpha(&g.mul(&h).unwrap()).unwrap();
        prop_assert_eq!(lhs, alpha(&g).unwrap().mul(&alpha(&h).unwrap()).unwrap());
    }

    #[test]
    fn canonical_pair_is_idempotent(c in class()) {
        let (a, b) = c.pair().unwrap();
        prop_assert_eq!(canonical_pair(&a, &b).unwrap(), c.clone());
        prop_assert_eq!(c.to_string().parse::<SplitMapClass>().unwrap(), c);
    }

    #[test]
    fn canonical_form_is_independent_of_the_representative(c in class(), g in uv(4)) {
        let (a, b) = c.pair().unwrap();
        let conj = |p: &P2Element| P2Element::new(p.free_part().conjugate_by(&g).unwrap(), p.lattice_part()).unwrap();
        let moved = canonical_pair(&conj(&a), &conj(&b)).unwrap();
        prop_assert!(free_equal(&c, &moved).unwrap());
        prop_assert!(free_equal(&moved, &c).unwrap());
    }

    #[test]
    fn free_equality_is_transitive(c in class(), g in uv(3), h in uv(3)) {
        let conj = |c: &SplitMapClass, g: &FreeWord| {
            SplitMapClass::from_data(c.w().conjugate_by(g).unwrap(), c.r(), c.s(), c.lattice()).unwrap()
        };
        let (d, e) = (conj(&c, &g), conj(&conj(&c, &g), &h));
        prop_assert!(free_equal(&c, &d).unwrap() && free_equal(&d, &e).unwrap());
        prop_assert!(free_equal(&c, &e).unwrap());
    }

    #[test]
    fn swap_is_an_involution_on_unordered_classes(c in class()) {
        let sw = swap_class(&c).unwrap();
        prop_assert!(free_equal(&swap_class(&sw).unwrap(), &c).unwrap());
        prop_assert!(unordered_equal(&c, &sw).unwrap());
        prop_assert!(unordered_equal(&sw, &c).unwrap());
        prop_assert_eq!(is_self_symmetric(&c).unwrap(), free_equal(&c, &sw).unwrap());
    }

    #[test]
    fn nielsen_number_is_swap_invariant(c in class()) {
        prop_assert_eq!(nielsen(&c).unwrap(), nielsen(&swap_class(&c).unwrap()).unwrap());
    }

    #[test]
    fn root_transform_round_trips(c in class()) {
        prop_assert_eq!(root_to_fixed(&fixed_to_root(&c).unwrap()).unwrap(), c);
    }

    #[test]
    fn verdicts_are_consistent(c in class()) {
        match can_deform_fixed_point_free(&c).unwrap() {
            DeformVerdict::Yes(cert) => {
                prop_assert_eq!(nielsen(&c).unwrap(), 0);
                let target = fixed_to_root(&c).unwrap().target().unwrap();
                prop_assert!(verify_lift(&cert.hom, &target).unwrap());
            }
            DeformVerdict::No { nielsen: n } => {
                prop_assert!(n > 0);
                prop_assert_eq!(n, nielsen(&c).unwrap());
            }
            DeformVerdict::Unknown => prop_assert_eq!(nielsen(&c).unwrap(), 0),
        }
    }

    #[test]
    fn proportional_lift_is_integral(w in uv(4), r in -4i64..=4, s in -4i64..=4, g in (-3i64..=3, -3i64..=3)) {
        prop_assume!((r, s) != (0, 0));
        // every solution of s·A = r·C has A = (r/ℓ)γ and C = (s/ℓ)γ
        let ell = gcd(r.unsigned_abs(), s.unsigned_abs()) as i64;
        let (a, b, c, d) = (r / ell * g.0, r / ell * g.1, s / ell * g.0, s / ell * g.1);
        // conjugation by x, y grows words exponentially; stay in a small box
        prop_assume!([a, b, c, d].iter().all(|v| v.abs() <= 3));
        let rd = RootData { w, r, s, a, b, c, d };
        let cert = lift_proportional(&rd).unwrap();
        prop_assert!(verify_lift(&cert.hom, &rd.target().unwrap()).unwrap());
    }

    #[test]
    fn torus_distance_is_a_metric(p in point(), q in point(), r in point()) {
        prop_assert_eq!(torus_dist(&p, &q), torus_dist(&q, &p));
        prop_assert_eq!(torus_dist(&p, &p), 0.0);
        prop_assert!(torus_dist(&p, &r) <= torus_dist(&p, &q) + torus_dist(&q, &r) + 1e-12);
        prop_assert!(torus_dist(&p, &q) <= 0.5f64.sqrt() + 1e-12);
    }

    #[test]
    fn hausdorff_is_bounded_by_any_matching(z in configuration(4), w in configuration(4)) {
        let d = hausdorff(&z, &w).unwrap();
        let matched = z.points().iter().zip(w.points()).map(|(p, q)| torus_dist(p, q)).fold(0.0, f64::max);
        prop_assert!(d <= matched);
        prop_assert_eq!(d, hausdorff(&w, &z).unwrap());
        prop_assert_eq!(z.to_string().parse::<Configuration>().unwrap(), z);
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

/// The two self-symmetry tests agree for every word of length at most 6.
#[test]
fn self_symmetry_detections_agree_exhaustively() {
    use torus_twovalued::freegroup::reduced_words_up_to;
    let mut symmetric = 0;
    for w in reduced_words_up_to(Alphabet::Uv, 6) {
        for r in -2..=2 {
            for s in -2..=2 {
                let c = SplitMapClass::from_data(w.clone(), r, s, [1, -2, 3, 0]).unwrap();
                let via_swap = free_equal(&c, &swap_class(&c).unwrap()).unwrap();
                let via_hat = c.w().is_identity()
                    || (is_hat_conjugate(c.w()).unwrap().is_some()
                        && c.ab_w().checked_scale(c.r()).unwrap().is_zero()
                        && c.ab_w().checked_scale(c.s()).unwrap().is_zero());
                assert_eq!(via_swap, via_hat, "{c}");
                symmetric += usize::from(via_swap);
            }
        }
    }
    assert!(symmetric > 25);
}

/// Commuting pairs of P2(T²) always canonicalize; others are rejected.
#[test]
fn commuting_pairs_and_rejections() {
    let u = P2Element::u();
    let v = P2Element::v();
    assert!(canonical_pair(&u, &v).is_err());
    assert!(canonical_pair(&u.pow(3).unwrap(), &u.pow(-2).unwrap()).is_ok());
}
