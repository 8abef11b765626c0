//! Free nilpotent groups `N_n(k) = F_n / γ_{k+1}`, their endomorphism and
//! automorphism towers, the projection to lower class, and the kernel
//! isomorphism onto homomorphisms into the top graded layer.
//!
//! Elements are represented by their truncated Magnus expansions; since the
//! kernel of the degree-`k` truncation is exactly `γ_{k+1}`, coefficientwise
//! equality of expansions is a complete invariant and no word-level normal
//! form is needed.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::freelie::{
    lcs_class, lie_rewrite, LcsClass, lyndon_basis, magnus_expand, unit_inverse, FIInjection, LieElement,
    TruncPoly,
};
use crate::intmat::IMat;
use crate::words::{FreeEndo, Word};

/// An element of the free nilpotent group of a given rank and class, stored
/// as its truncated Magnus expansion (constant term always 1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NilElement {
    rank: usize,
    class: usize,
    expansion: TruncPoly,
}

impl NilElement {
    pub fn identity(rank: usize, class: usize) -> NilElement {
        NilElement { rank, class, expansion: TruncPoly::one(rank, class) }
    }

    /// Image of a word under the quotient map.
    pub fn from_word(w: &Word, class: usize) -> NilElement {
        assert!(class >= 1);
        NilElement {
            rank: w.rank(),
            class,
            expansion: magnus_expand(w, class),
        }
    }

    fn from_expansion(rank: usize, class: usize, expansion: TruncPoly) -> NilElement {
        debug_assert!(expansion.coeff(&[]).is_one());
        NilElement { rank, class, expansion }
    }

    pub fn generator(rank: usize, class: usize, i: usize) -> NilElement {
        NilElement::from_word(&Word::generator(rank, i), class)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn class(&self) -> usize {
        self.class
    }

    pub fn expansion(&self) -> &TruncPoly {
        &self.expansion
    }

    pub fn is_identity(&self) -> bool {
        self.expansion == TruncPoly::one(self.rank, self.class)
    }

    fn check_compatible(&self, other: &NilElement) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch { left: self.rank, right: other.rank });
        }
        if self.class != other.class {
            return Err(Error::ClassMismatch { left: self.class, right: other.class });
        }
        Ok(())
    }

    /// Group law: truncated polynomial product.
    pub fn mul(&self, other: &NilElement) -> Result<NilElement> {
        self.check_compatible(other)?;
        Ok(NilElement::from_expansion(
            self.rank,
            self.class,
            self.expansion.mul(&other.expansion),
        ))
    }

    /// Inverse of the unit `1 + u` by the finite geometric series.
    pub fn inv(&self) -> NilElement {
        NilElement::from_expansion(self.rank, self.class, unit_inverse(&self.expansion))
    }

    pub fn commutator(&self, other: &NilElement) -> Result<NilElement> {
        self.mul(other)?.mul(&self.inv())?.mul(&other.inv())
    }

    /// Truncation to a smaller class.
    pub fn project(&self, class: usize) -> NilElement {
        assert!(class <= self.class && class >= 1);
        NilElement::from_expansion(self.rank, class, self.expansion.truncate(class))
    }

    /// A central element whose expansion is `1 + (expansion of h)` exactly;
    /// realised by the witness word of `h`, whose higher terms die at this
    /// class.
    pub fn central(h: &LieElement, class: usize) -> NilElement {
        assert_eq!(h.weight(), class, "central elements live in the top layer");
        let mut p = TruncPoly::one(h.rank(), class);
        for (m, c) in h.expansion().coeffs() {
            p.add_term(m.clone(), c.clone());
        }
        NilElement::from_expansion(h.rank(), class, p)
    }
}

/// An endomorphism of a free nilpotent group, determined by generator images.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NilEndo {
    rank: usize,
    class: usize,
    images: Vec<NilElement>,
}

impl NilEndo {
    pub fn new(rank: usize, class: usize, images: Vec<NilElement>) -> Result<NilEndo> {
        if images.len() != rank {
            return Err(Error::Invalid(format!(
                "expected {rank} generator images, got {}",
                images.len()
            )));
        }
        for img in &images {
            if img.rank() != rank {
                return Err(Error::RankMismatch { left: rank, right: img.rank() });
            }
            if img.class() != class {
                return Err(Error::ClassMismatch { left: class, right: img.class() });
            }
        }
        Ok(NilEndo { rank, class, images })
    }

    pub fn identity(rank: usize, class: usize) -> NilEndo {
        NilEndo {
            rank,
            class,
            images: (1..=rank).map(|i| NilElement::generator(rank, class, i)).collect(),
        }
    }

    /// The truncation of a word-level endomorphism.
    pub fn from_free(phi: &FreeEndo, class: usize) -> NilEndo {
        NilEndo {
            rank: phi.rank(),
            class,
            images: phi.images().iter().map(|w| NilElement::from_word(w, class)).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn class(&self) -> usize {
        self.class
    }

    pub fn images(&self) -> &[NilElement] {
        &self.images
    }

    /// Applies the endomorphism: the algebra substitution
    /// `X_i -> (image of x_i) - 1`, which extends the group map
    /// multiplicatively.
    pub fn apply(&self, a: &NilElement) -> Result<NilElement> {
        if a.rank() != self.rank {
            return Err(Error::RankMismatch { left: self.rank, right: a.rank() });
        }
        if a.class() != self.class {
            return Err(Error::ClassMismatch { left: self.class, right: a.class() });
        }
        let deltas: Vec<TruncPoly> = self
            .images
            .iter()
            .map(|img| {
                let mut d = img.expansion().clone();
                d.add_term(vec![], -BigInt::one());
                d
            })
            .collect();
        Ok(NilElement::from_expansion(
            self.rank,
            self.class,
            a.expansion().substitute(&deltas, self.rank),
        ))
    }

    /// Composition `self ∘ other`.
    pub fn compose(&self, other: &NilEndo) -> Result<NilEndo> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch { left: self.rank, right: other.rank });
        }
        if self.class != other.class {
            return Err(Error::ClassMismatch { left: self.class, right: other.class });
        }
        let images = other
            .images
            .iter()
            .map(|img| self.apply(img))
            .collect::<Result<Vec<_>>>()?;
        NilEndo::new(self.rank, self.class, images)
    }

    /// Integer matrix of the induced map on the abelianisation; column `i`
    /// holds the degree-1 coefficients of the image of `x_{i+1}`.
    pub fn abelianization(&self) -> IMat {
        IMat::from_fn(self.rank, self.rank, |j, i| {
            self.images[i].expansion().coeff(&[(j + 1) as u8])
        })
    }

    /// Truncates every image to class `k - 1`; the tower projection.
    pub fn project_down(&self) -> Result<NilEndo> {
        if self.class < 2 {
            return Err(Error::ClassTooSmall);
        }
        NilEndo::new(
            self.rank,
            self.class - 1,
            self.images.iter().map(|a| a.project(self.class - 1)).collect(),
        )
    }
}

/// Tower projection to class `k - 1` (monoid homomorphism, preserves
/// automorphisms).
pub fn rho_project(phi: &NilEndo) -> Result<NilEndo> {
    phi.project_down()
}

/// Invertibility test: an endomorphism of the free nilpotent group is an
/// automorphism exactly when its abelianisation is in `GL(n, Z)`. On success
/// the inverse is returned as the certificate.
pub fn is_automorphism(phi: &NilEndo) -> Option<NilEndo> {
    let det = phi.abelianization().det();
    if det.abs() != BigInt::one() {
        return None;
    }
    Some(aut_inverse(phi).expect("unimodular abelianisation inverts"))
}

fn adjugate_inverse(m: &IMat) -> IMat {
    // inverse of a unimodular integer matrix via cofactors
    let n = m.rows;
    let det = m.det();
    assert!(det.abs().is_one());
    let mut inv = IMat::zero(n, n);
    for i in 0..n {
        for j in 0..n {
            let minor = IMat::from_fn(n - 1, n - 1, |r, c| {
                let rr = if r < j { r } else { r + 1 };
                let cc = if c < i { c } else { c + 1 };
                m[(rr, cc)].clone()
            });
            let mut cof = minor.det();
            if (i + j) % 2 == 1 {
                cof = -cof;
            }
            inv[(i, j)] = cof * &det; // det is ±1, multiplying divides
        }
    }
    inv
}

/// Inverse of a nilpotent-group automorphism by layerwise central correction:
/// start from an integer lift of the inverse abelianisation, then for each
/// class `c = 2..k` cancel the degree-`c` defect of the composite by
/// multiplying generator images with central witness words. Exactly `k - 1`
/// correction rounds.
pub fn aut_inverse(phi: &NilEndo) -> Result<NilEndo> {
    let n = phi.rank();
    let k = phi.class();
    let a = phi.abelianization();
    if a.det().abs() != BigInt::one() {
        return Err(Error::NotAutomorphism { det: a.det().to_string() });
    }
    let ainv = adjugate_inverse(&a);
    // word lift of the inverse abelianisation
    let mut images = Vec::with_capacity(n);
    for i in 0..n {
        let mut w = Word::identity(n);
        for j in 0..n {
            let e = i64::try_from(&ainv[(j, i)]).expect("desk-scale entries");
            w = w.mul(&Word::generator(n, j + 1).pow(e))?;
        }
        images.push(NilElement::from_word(&w, k));
    }
    let mut psi = NilEndo::new(n, k, images)?;

    for c in 2..=k {
        let composite = phi.compose(&psi)?;
        let mut correction_images = Vec::with_capacity(n);
        for i in 0..n {
            let defect = composite.images()[i]
                .mul(&NilElement::generator(n, k, i + 1).inv())?
                .expansion()
                .homogeneous(c);
            if defect.is_zero() {
                correction_images.push(NilElement::generator(n, k, i + 1));
                continue;
            }
            let lie = lie_rewrite(&defect)?;
            // witness word with leading term -defect; higher terms are fixed
            // in later rounds
            let w = Word::generator(n, i + 1).mul(&lie.neg().witness_word())?;
            correction_images.push(NilElement::from_word(&w, k));
        }
        let kappa = NilEndo::new(n, k, correction_images)?;
        psi = psi.compose(&kappa)?;
    }
    debug_assert_eq!(phi.compose(&psi).unwrap(), NilEndo::identity(n, k));
    Ok(psi)
}

/// A homomorphism from `Z^n` into the weight-`k` graded piece, the value of
/// the kernel isomorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelHom {
    rank: usize,
    weight: usize,
    columns: Vec<LieElement>,
}

impl KernelHom {
    pub fn new(rank: usize, weight: usize, columns: Vec<LieElement>) -> Result<KernelHom> {
        if columns.len() != rank {
            return Err(Error::Invalid(format!(
                "expected {rank} columns, got {}",
                columns.len()
            )));
        }
        for c in &columns {
            if c.rank() != rank {
                return Err(Error::RankMismatch { left: rank, right: c.rank() });
            }
            if c.weight() != weight {
                return Err(Error::ClassMismatch { left: weight, right: c.weight() });
            }
        }
        Ok(KernelHom { rank, weight, columns })
    }

    pub fn zero(rank: usize, weight: usize) -> KernelHom {
        KernelHom {
            rank,
            weight,
            columns: (0..rank).map(|_| LieElement::zero(rank, weight)).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    pub fn columns(&self) -> &[LieElement] {
        &self.columns
    }

    pub fn add(&self, other: &KernelHom) -> Result<KernelHom> {
        if self.rank != other.rank || self.weight != other.weight {
            return Err(Error::Invalid("kernel hom shape mismatch".into()));
        }
        KernelHom::new(
            self.rank,
            self.weight,
            self.columns
                .iter()
                .zip(&other.columns)
                .map(|(a, b)| a.add(b))
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(|c| c.is_zero())
    }

    /// Flattened integer coordinates (all columns over the Lyndon basis).
    pub fn to_vector(&self) -> Vec<BigInt> {
        let mut v = Vec::new();
        for c in &self.columns {
            v.extend(c.to_vector());
        }
        v
    }
}

/// The isomorphism from the kernel of the tower projection: an automorphism
/// acting trivially on class `k-1` sends each generator to itself times a
/// central element; the map records those top-layer parts.
pub fn psi_iso(phi: &NilEndo) -> Result<KernelHom> {
    let k = phi.class();
    if rho_project(phi)? != NilEndo::identity(phi.rank(), k - 1) {
        return Err(Error::NotInKernel);
    }
    let mut columns = Vec::with_capacity(phi.rank());
    for i in 1..=phi.rank() {
        let d = phi.images()[i - 1]
            .mul(&NilElement::generator(phi.rank(), k, i).inv())?
            .expansion()
            .homogeneous(k);
        columns.push(if d.is_zero() {
            LieElement::zero(phi.rank(), k)
        } else {
            lie_rewrite(&d)?
        });
    }
    KernelHom::new(phi.rank(), k, columns)
}

/// Inverse direction: builds the automorphism `x_i -> x_i * central(h_i)`.
pub fn psi_inverse(h: &KernelHom) -> NilEndo {
    let n = h.rank();
    let k = h.weight();
    let images = (1..=n)
        .map(|i| {
            NilElement::generator(n, k, i)
                .mul(&NilElement::central(&h.columns()[i - 1], k))
                .expect("compatible")
        })
        .collect();
    NilEndo::new(n, k, images).expect("well-formed")
}

/// Word-level lift of a kernel hom: `x_i -> x_i * (witness word of h_i)`.
/// Truncating it to class `k` recovers `psi_inverse(h)`.
pub fn psi_word_lift(h: &KernelHom) -> FreeEndo {
    let n = h.rank();
    let images = (1..=n)
        .map(|i| {
            Word::generator(n, i)
                .mul(&h.columns()[i - 1].witness_word())
                .expect("equal ranks")
        })
        .collect();
    FreeEndo::new(n, images).expect("well-formed")
}

/// The induced-injection action on automorphism towers: generators outside
/// the image are fixed, and `x_{f(j)}` maps to the relabelled image of `x_j`.
pub fn fi_pushforward_aut(f: &FIInjection, phi: &NilEndo) -> Result<NilEndo> {
    if f.source() != phi.rank() {
        return Err(Error::RankMismatch { left: f.source(), right: phi.rank() });
    }
    let m = f.target();
    let k = phi.class();
    let mut images = Vec::with_capacity(m);
    for i in 1..=m {
        match (1..=f.source()).find(|&j| f.value(j) == i) {
            None => images.push(NilElement::generator(m, k, i)),
            Some(j) => {
                let relabeled = phi.images()[j - 1].expansion().relabel(f);
                images.push(NilElement::from_expansion(m, k, relabeled));
            }
        }
    }
    NilEndo::new(m, k, images)
}

/// Largest `k <= kmax` such that every generator defect `φ(x_i) x_i^{-1}`
/// lies in `γ_{k+1}`; level 0 means the endomorphism already moves the
/// abelianisation.
pub fn ia_level(phi: &FreeEndo, kmax: usize) -> usize {
    assert!(kmax >= 1);
    let mut level = kmax;
    for i in 1..=phi.rank() {
        let defect = phi
            .image(i)
            .mul(&Word::generator(phi.rank(), i).inv())
            .expect("equal ranks");
        let c = match lcs_class(&defect, kmax + 1) {
            LcsClass::Identity => kmax + 2,
            LcsClass::AtLeast(d) => d,
            LcsClass::Exactly(d) => d,
        };
        // defect in γ_{c} exactly: contributes level c - 1
        level = level.min(c - 1);
    }
    level
}

/// Same measurement for an endomorphism given only as a class-`K` truncation;
/// levels up to `class - 1` are faithful.
pub fn nil_ia_level(phi: &NilEndo) -> usize {
    let k = phi.class();
    let mut level = k - 1;
    for i in 1..=phi.rank() {
        let d = phi.images()[i - 1]
            .mul(&NilElement::generator(phi.rank(), k, i).inv())
            .expect("compatible");
        let c = d.expansion().lowest_positive_degree().unwrap_or(k + 1);
        level = level.min(c - 1);
    }
    level
}

/// The standard generating set of kernel homs: `e_i ⊗ b` over generators of
/// `Z^n` and Lyndon basis elements of weight `k`.
pub fn standard_kernel_basis(n: usize, k: usize) -> Vec<KernelHom> {
    let mut out = Vec::new();
    for i in 0..n {
        for b in lyndon_basis(n, k) {
            let mut columns: Vec<LieElement> =
                (0..n).map(|_| LieElement::zero(n, k)).collect();
            columns[i] = LieElement::single(n, b.clone(), BigInt::one()).unwrap();
            out.push(KernelHom::new(n, k, columns).unwrap());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freelie::LieElement;

    fn w(text: &str, rank: usize) -> Word {
        Word::parse(text, rank).unwrap()
    }

    #[test]
    fn from_word_examples() {
        assert!(NilElement::from_word(&Word::identity(2), 3).is_identity());
        // commutators die in the abelianisation
        assert!(NilElement::from_word(&w("x1 x2 X1 X2", 2), 1).is_identity());
        let a = NilElement::from_word(&w("x1 x2 X1 X2", 2), 2);
        assert_eq!(a.expansion().coeff(&[1, 2]), BigInt::one());
        assert_eq!(a.expansion().coeff(&[2, 1]), -BigInt::one());
    }

    #[test]
    fn group_laws() {
        let a = NilElement::from_word(&w("x1 x2", 2), 3);
        let id = NilElement::identity(2, 3);
        assert_eq!(a.mul(&id).unwrap(), a);
        assert!(a.mul(&a.inv()).unwrap().is_identity());
        let x1 = NilElement::from_word(&w("x1", 2), 3);
        let x2 = NilElement::from_word(&w("x2", 2), 3);
        assert_eq!(x1.mul(&x2).unwrap(), NilElement::from_word(&w("x1 x2", 2), 3));
    }

    #[test]
    fn nilendo_apply_examples() {
        let phi = NilEndo::from_free(
            &FreeEndo::new(2, vec![w("x1 x2", 2), w("x2", 2)]).unwrap(),
            2,
        );
        let x1 = NilElement::generator(2, 2, 1);
        assert_eq!(
            phi.apply(&x1).unwrap(),
            NilElement::from_word(&w("x1 x2", 2), 2)
        );
        let id = NilEndo::identity(2, 2);
        let a = NilElement::from_word(&w("x1 X2 x1", 2), 2);
        assert_eq!(id.apply(&a).unwrap(), a);
        // homomorphism property on a product
        let b = NilElement::from_word(&w("x2 x1", 2), 2);
        assert_eq!(
            phi.apply(&a.mul(&b).unwrap()).unwrap(),
            phi.apply(&a).unwrap().mul(&phi.apply(&b).unwrap()).unwrap()
        );
    }

    #[test]
    fn automorphism_test_and_inverse() {
        let id = NilEndo::identity(2, 2);
        assert!(is_automorphism(&id).is_some());
        let sq = NilEndo::from_free(
            &FreeEndo::new(2, vec![w("x1 x1", 2), w("x2", 2)]).unwrap(),
            2,
        );
        assert!(is_automorphism(&sq).is_none());
        // x1 -> x1 [x1,x2] has identity abelianisation
        let phi = NilEndo::from_free(
            &FreeEndo::new(2, vec![w("x1 x1 x2 X1 X2", 2), w("x2", 2)]).unwrap(),
            2,
        );
        let inv = is_automorphism(&phi).expect("unipotent is invertible");
        assert_eq!(phi.compose(&inv).unwrap(), NilEndo::identity(2, 2));
        assert_eq!(inv.compose(&phi).unwrap(), NilEndo::identity(2, 2));
        // permutation inverts to the inverse permutation
        let swap = NilEndo::from_free(
            &FreeEndo::new(2, vec![w("x2", 2), w("x1", 2)]).unwrap(),
            3,
        );
        let swap_inv = aut_inverse(&swap).unwrap();
        assert_eq!(swap_inv, swap);
        assert_eq!(aut_inverse(&NilEndo::identity(3, 4)).unwrap(), NilEndo::identity(3, 4));
    }

    #[test]
    fn deeper_inverse_round_trip() {
        let phi = NilEndo::from_free(
            &FreeEndo::new(3, vec![w("x1 x2", 3), w("x2", 3), w("x3 x1 x2 X1", 3)]).unwrap(),
            4,
        );
        let inv = aut_inverse(&phi).unwrap();
        assert_eq!(phi.compose(&inv).unwrap(), NilEndo::identity(3, 4));
        assert_eq!(inv.compose(&phi).unwrap(), NilEndo::identity(3, 4));
    }

    #[test]
    fn rho_examples() {
        assert_eq!(
            rho_project(&NilEndo::identity(2, 2)).unwrap(),
            NilEndo::identity(2, 1)
        );
        let phi = NilEndo::from_free(
            &FreeEndo::new(2, vec![w("x1 x1 x2 X1 X2", 2), w("x2", 2)]).unwrap(),
            2,
        );
        assert_eq!(rho_project(&phi).unwrap(), NilEndo::identity(2, 1));
        assert!(rho_project(&NilEndo::identity(2, 1)).is_err());
        // monoid homomorphism on a pair
        let psi = NilEndo::from_free(
            &FreeEndo::new(2, vec![w("x2 x1", 2), w("x1", 2)]).unwrap(),
            3,
        );
        let chi = NilEndo::from_free(
            &FreeEndo::new(2, vec![w("x1", 2), w("x2 x1 x2", 2)]).unwrap(),
            3,
        );
        assert_eq!(
            rho_project(&psi.compose(&chi).unwrap()).unwrap(),
            rho_project(&psi).unwrap().compose(&rho_project(&chi).unwrap()).unwrap()
        );
    }

    #[test]
    fn psi_iso_examples() {
        assert!(psi_iso(&NilEndo::identity(2, 2)).unwrap().is_zero());
        let phi = NilEndo::from_free(
            &FreeEndo::new(2, vec![w("x1 x1 x2 X1 X2", 2), w("x2", 2)]).unwrap(),
            2,
        );
        let h = psi_iso(&phi).unwrap();
        assert_eq!(
            h.columns()[0],
            LieElement::single(2, vec![1, 2], BigInt::one()).unwrap()
        );
        assert!(h.columns()[1].is_zero());
        // not in the kernel
        let swap = NilEndo::from_free(
            &FreeEndo::new(2, vec![w("x2", 2), w("x1", 2)]).unwrap(),
            2,
        );
        assert!(matches!(psi_iso(&swap), Err(Error::NotInKernel)));
    }

    #[test]
    fn psi_round_trips() {
        assert_eq!(
            psi_inverse(&KernelHom::zero(2, 2)),
            NilEndo::identity(2, 2)
        );
        for h in standard_kernel_basis(2, 3) {
            let phi = psi_inverse(&h);
            assert_eq!(psi_iso(&phi).unwrap(), h);
            // word lift truncates to the same automorphism
            assert_eq!(NilEndo::from_free(&psi_word_lift(&h), 3), phi);
        }
    }

    #[test]
    fn psi_additive() {
        let basis = standard_kernel_basis(2, 3);
        let h1 = &basis[0];
        let h2 = &basis[3];
        let sum = h1.add(h2).unwrap();
        let composed = psi_inverse(h1).compose(&psi_inverse(h2)).unwrap();
        assert_eq!(psi_iso(&composed).unwrap(), sum);
    }

    #[test]
    fn pushforward_aut() {
        let phi = NilEndo::from_free(
            &FreeEndo::new(1, vec![w("x1", 1)]).unwrap(),
            2,
        );
        let f = FIInjection::new(2, vec![2]).unwrap();
        assert_eq!(
            fi_pushforward_aut(&f, &phi).unwrap(),
            NilEndo::identity(2, 2)
        );
        let id_inj = FIInjection::identity(2);
        let psi = NilEndo::from_free(
            &FreeEndo::new(2, vec![w("x1 x1 x2 X1 X2", 2), w("x2", 2)]).unwrap(),
            2,
        );
        assert_eq!(fi_pushforward_aut(&id_inj, &psi).unwrap(), psi);
    }

    #[test]
    fn ia_level_examples() {
        assert_eq!(ia_level(&FreeEndo::identity(2), 3), 3);
        let swap = FreeEndo::new(2, vec![w("x2", 2), w("x1", 2)]).unwrap();
        assert_eq!(ia_level(&swap, 3), 0);
        let phi = FreeEndo::new(2, vec![w("x1 x1 x2 X1 X2", 2), w("x2", 2)]).unwrap();
        assert_eq!(ia_level(&phi, 3), 1);
        assert_eq!(nil_ia_level(&NilEndo::from_free(&phi, 4)), 1);
    }
}
