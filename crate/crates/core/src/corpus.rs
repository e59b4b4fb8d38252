//! Standard matrices and a corpus of frame-spin inputs.
//!
//! The classical Seifert matrices and manifold intersection forms here are
//! textbook data; each spin input is validated on construction, and
//! [`all`] is the set every pipeline test runs over.

use std::collections::BTreeMap;

use crate::exactmat::IntMatrix;
use crate::framespin::{SpinError, SpinInput};
use crate::imat;
use crate::quadform::standard_symplectic;
use crate::seifert::KnotDims;

/// Gram matrix of the E8 lattice (Cartan matrix of the E8 root system):
/// a chain `0-1-2-3-4-5-6` with node 7 attached to node 4.
pub fn e8_gram() -> IntMatrix {
    let mut m = IntMatrix::diagonal(&[2; 8]);
    let edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 7)];
    for (i, j) in edges {
        m.set(i, j, (-1).into());
        m.set(j, i, (-1).into());
    }
    m
}

/// A Seifert matrix `A` with `A + A' = E8`: unit diagonal, the upper triangle
/// of the Gram matrix above it, zeros below.
pub fn e8_seifert() -> IntMatrix {
    let g = e8_gram();
    let mut a = IntMatrix::zeros(8, 8);
    for i in 0..8 {
        a.set(i, i, 1.into());
        for j in i + 1..8 {
            a.set(i, j, g.get(i, j).clone());
        }
    }
    a
}

/// Seifert matrix of the trefoil.
pub fn trefoil() -> IntMatrix {
    imat![[-1, 1], [0, -1]]
}

/// Seifert matrix of the figure-eight knot.
pub fn figure_eight() -> IntMatrix {
    imat![[-1, 1], [0, 1]]
}

/// Hyperbolic form `[[0,1],[1,0]]`, the intersection form of `S²×S²`.
pub fn hyperbolic() -> IntMatrix {
    imat![[0, 1], [1, 0]]
}

/// Upper unitriangular `r × r` matrix with ones above the diagonal.
fn upper_unitriangular(r: usize) -> IntMatrix {
    let mut m = IntMatrix::identity(r);
    for i in 0..r {
        for j in i + 1..r {
            m.set(i, j, 1.into());
        }
    }
    m
}

/// Strictly lower triangular `r × r` matrix with entries `-1`.
fn strictly_lower(r: usize) -> IntMatrix {
    let mut m = IntMatrix::zeros(r, r);
    for i in 0..r {
        for j in 0..i {
            m.set(i, j, (-1).into());
        }
    }
    m
}

/// Intersection data `(ranks, T_b)` of a closed oriented manifold.
pub struct ManifoldForms {
    pub m: u32,
    pub ranks: Vec<usize>,
    pub forms: BTreeMap<u32, IntMatrix>,
}

impl ManifoldForms {
    fn new(m: u32, ranks: Vec<usize>, forms: Vec<(u32, IntMatrix)>) -> Self {
        ManifoldForms {
            m,
            ranks,
            forms: forms.into_iter().collect(),
        }
    }

    pub fn circle() -> Self {
        Self::new(1, vec![1, 1], vec![(0, imat![[1]]), (1, imat![[1]])])
    }

    pub fn sphere(m: u32) -> Self {
        let mut ranks = vec![0; m as usize + 1];
        ranks[0] = 1;
        ranks[m as usize] = 1;
        Self::new(m, ranks, vec![(0, imat![[1]]), (m, imat![[1]])])
    }

    /// Closed orientable surface of genus `g` with a given symplectic
    /// middle form.
    pub fn surface(tau: IntMatrix) -> Self {
        let r = tau.rows();
        Self::new(
            2,
            vec![1, r, 1],
            vec![(0, imat![[1]]), (1, tau), (2, imat![[1]])],
        )
    }

    pub fn torus() -> Self {
        Self::surface(standard_symplectic(1))
    }

    pub fn s1_x_s2() -> Self {
        Self::new(
            3,
            vec![1, 1, 1, 1],
            (0..=3).map(|b| (b, imat![[1]])).collect(),
        )
    }

    /// A closed 4-manifold with the given middle form.
    pub fn four_manifold(tau: IntMatrix, b1: usize) -> Self {
        let r = tau.rows();
        let mut forms = vec![(0, imat![[1]]), (2, tau), (4, imat![[1]])];
        if b1 > 0 {
            forms.push((1, IntMatrix::identity(b1)));
            // T_3 = (-1)^{1·3} T_1'
            forms.push((3, IntMatrix::identity(b1).neg()));
        }
        Self::new(4, vec![1, b1, r, b1, 1], forms)
    }
}

/// Linking data `(ranks, Λ_a)` of a Seifert surface of a knot `S^{k-2} ⊂ S^k`.
pub struct SurfaceLinking {
    pub k: u32,
    pub ranks: Vec<usize>,
    pub linking: BTreeMap<u32, IntMatrix>,
}

impl SurfaceLinking {
    /// Classical knot (`k = 3`) with Seifert matrix `a`.
    pub fn classical(a: IntMatrix) -> Self {
        let r = a.rows();
        SurfaceLinking {
            k: 3,
            ranks: vec![1, r, 0],
            linking: BTreeMap::from([(1, a)]),
        }
    }

    /// `k = 4` surface with `rank F_1 = rank F_2 = r`, pairings chosen so that
    /// `Λ_1 ± Λ_2'` is unimodular.
    pub fn two_knot(r: usize) -> Self {
        SurfaceLinking {
            k: 4,
            ranks: vec![1, r, r, 0],
            linking: BTreeMap::from([(1, upper_unitriangular(r)), (2, strictly_lower(r))]),
        }
    }

    /// `k = 5` surface with outer rank `outer` and middle Seifert matrix `a`
    /// (which needs `a + a'` unimodular).
    pub fn three_knot(outer: usize, a: IntMatrix) -> Self {
        let r = a.rows();
        SurfaceLinking {
            k: 5,
            ranks: vec![1, outer, r, outer, 0],
            linking: BTreeMap::from([
                (1, upper_unitriangular(outer)),
                (2, a),
                (3, strictly_lower(outer)),
            ]),
        }
    }
}

/// Combines a surface and a manifold, reporting validation failures.
pub fn try_spin(surface: SurfaceLinking, manifold: ManifoldForms) -> Result<SpinInput, SpinError> {
    let dims = KnotDims::new(surface.k, manifold.m)?;
    SpinInput::new(
        dims,
        surface.ranks,
        manifold.ranks,
        surface.linking,
        manifold.forms,
    )
}

/// Combines a surface and a manifold into a validated spin input.
pub fn spin(surface: SurfaceLinking, manifold: ManifoldForms) -> SpinInput {
    try_spin(surface, manifold).expect("corpus input is valid")
}

/// Trefoil spun about a simply connected 4-manifold with form E8. Rejected:
/// the middle form has signature 8.
pub fn trefoil_e8_manifold() -> (SurfaceLinking, ManifoldForms) {
    (
        SurfaceLinking::classical(trefoil()),
        ManifoldForms::four_manifold(e8_gram(), 0),
    )
}

/// Trefoil spun about the torus (`k = 3`, `m = 2`).
pub fn trefoil_torus() -> SpinInput {
    spin(SurfaceLinking::classical(trefoil()), ManifoldForms::torus())
}

/// Trefoil 2-superspun about `S²`: no middle homology at all.
pub fn trefoil_superspin_s2() -> SpinInput {
    spin(
        SurfaceLinking::classical(trefoil()),
        ManifoldForms::sphere(2),
    )
}

/// Figure-eight spun about the `S²×S²` form (`k = 3`, `m = 4`).
pub fn figure_eight_s2xs2() -> SpinInput {
    spin(
        SurfaceLinking::classical(figure_eight()),
        ManifoldForms::four_manifold(hyperbolic(), 0),
    )
}

/// Trefoil 4-superspun about `S⁴`.
pub fn trefoil_superspin_s4() -> SpinInput {
    spin(
        SurfaceLinking::classical(trefoil()),
        ManifoldForms::sphere(4),
    )
}

/// Trefoil spun about a 4-manifold with form `diag(1,-1)`.
pub fn trefoil_odd_pair() -> SpinInput {
    spin(
        SurfaceLinking::classical(trefoil()),
        ManifoldForms::four_manifold(IntMatrix::diagonal(&[1, -1]), 0),
    )
}

/// Figure-eight spun about a genus-2 surface whose form is given in a
/// scrambled (non-standard) basis.
pub fn figure_eight_genus2() -> SpinInput {
    let u = imat![[1, 1, 0, 0], [0, 1, 2, 0], [0, 0, 1, -1], [1, 1, 0, 1]];
    let tau = standard_symplectic(2).congruence(&u).expect("4x4");
    spin(
        SurfaceLinking::classical(figure_eight()),
        ManifoldForms::surface(tau),
    )
}

/// The unknot (empty Seifert matrix) spun about the torus.
pub fn unknot_torus() -> SpinInput {
    spin(
        SurfaceLinking::classical(IntMatrix::empty()),
        ManifoldForms::torus(),
    )
}

/// Artin spin (`M = S¹`) of a 2-knot with `rank F_1(V) = 2`.
pub fn artin_spin_2knot() -> SpinInput {
    spin(SurfaceLinking::two_knot(2), ManifoldForms::circle())
}

/// Artin spin of a 2-knot with `rank F_1(V) = 1`; a 2×2 target.
pub fn artin_spin_small() -> SpinInput {
    spin(SurfaceLinking::two_knot(1), ManifoldForms::circle())
}

/// A 2-knot with `rank F_1(V) = 3` spun about `S¹`.
pub fn artin_spin_rank3() -> SpinInput {
    spin(SurfaceLinking::two_knot(3), ManifoldForms::circle())
}

/// A 2-knot spun about `S¹×S²` (`k = 4`, `m = 3`).
pub fn two_knot_s1xs2() -> SpinInput {
    spin(SurfaceLinking::two_knot(2), ManifoldForms::s1_x_s2())
}

/// Middle Seifert matrix for the `k = 5` inputs: `A + A' = [[2,1],[1,0]]`.
pub fn k5_middle() -> IntMatrix {
    imat![[1, 1], [0, 0]]
}

/// `k = 5`, `m = 2` about the torus: three nonempty blocks.
pub fn k5_torus() -> SpinInput {
    spin(
        SurfaceLinking::three_knot(1, k5_middle()),
        ManifoldForms::torus(),
    )
}

/// `k = 5`, `m = 2` about `S²`: empty middle block, two outer blocks.
pub fn k5_superspin_s2() -> SpinInput {
    spin(
        SurfaceLinking::three_knot(1, k5_middle()),
        ManifoldForms::sphere(2),
    )
}

/// `k = 5`, `m = 4` about `S¹×S³`: empty middle block.
pub fn k5_s1xs3() -> SpinInput {
    spin(
        SurfaceLinking::three_knot(2, k5_middle()),
        ManifoldForms::four_manifold(IntMatrix::empty(), 1),
    )
}

/// `k = 5`, `m = 4` about `(S¹×S³) # (S²×S²)`: three blocks, symmetric middle.
pub fn k5_s1xs3_s2xs2() -> SpinInput {
    spin(
        SurfaceLinking::three_knot(1, k5_middle()),
        ManifoldForms::four_manifold(hyperbolic(), 1),
    )
}

/// `k = 5` knot whose Seifert form symmetrizes to E8, spun about the torus.
pub fn k5_e8_torus() -> SpinInput {
    spin(
        SurfaceLinking::three_knot(1, e8_seifert()),
        ManifoldForms::torus(),
    )
}

/// Every named corpus input.
pub fn all() -> Vec<(&'static str, SpinInput)> {
    vec![
        ("trefoil-torus", trefoil_torus()),
        ("trefoil-superspin-s2", trefoil_superspin_s2()),
        ("figure-eight-s2xs2", figure_eight_s2xs2()),
        ("trefoil-superspin-s4", trefoil_superspin_s4()),
        ("trefoil-odd-pair", trefoil_odd_pair()),
        ("figure-eight-genus2", figure_eight_genus2()),
        ("unknot-torus", unknot_torus()),
        ("artin-spin-2knot", artin_spin_2knot()),
        ("artin-spin-small", artin_spin_small()),
        ("artin-spin-rank3", artin_spin_rank3()),
        ("two-knot-s1xs2", two_knot_s1xs2()),
        ("k5-torus", k5_torus()),
        ("k5-superspin-s2", k5_superspin_s2()),
        ("k5-s1xs3", k5_s1xs3()),
        ("k5-s1xs3-s2xs2", k5_s1xs3_s2xs2()),
        ("k5-e8-torus", k5_e8_torus()),
    ]
}

/// Looks up a corpus input by name.
pub fn by_name(name: &str) -> Option<SpinInput> {
    all().into_iter().find(|(n, _)| *n == name).map(|(_, s)| s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seifert::validate_seifert;

    #[test]
    fn standard_matrices() {
        let e8 = e8_gram();
        assert!(e8.is_symmetric());
        assert_eq!(e8.determinant().unwrap(), 1.into());
        let a = e8_seifert();
        assert_eq!(a.add(&a.transpose()).unwrap(), e8);
        assert!(validate_seifert(trefoil(), 1).is_ok());
        assert!(validate_seifert(figure_eight(), 1).is_ok());
        assert!(validate_seifert(k5_middle(), 2).is_ok());
        assert!(validate_seifert(e8_seifert(), 2).is_ok());
    }

    #[test]
    fn corpus_builds_and_names_are_unique() {
        let all = all();
        assert!(all.len() >= 12);
        let mut names: Vec<_> = all.iter().map(|(n, _)| *n).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), all.len());
        assert!(by_name("trefoil-torus").is_some());
        assert!(by_name("nope").is_none());
    }

    #[test]
    fn scrambled_genus_two_form_is_unimodular() {
        let input = figure_eight_genus2();
        let tau = input.tau().unwrap();
        assert!(tau.is_skew_symmetric());
        assert!(tau.is_unimodular());
        assert_ne!(tau, &standard_symplectic(2));
    }

    #[test]
    fn e8_manifold_is_rejected() {
        let (surface, manifold) = trefoil_e8_manifold();
        assert_eq!(
            try_spin(surface, manifold),
            Err(SpinError::NonzeroSignature(8))
        );
    }
}
