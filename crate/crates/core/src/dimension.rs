//! Multi dimension and the constructions that consume it: restrictions
//! to a subspace, common bases of compatible pairs, images under linear
//! maps, and the rank–nullity decomposition.
//!
//! The multi dimension of a space is the count-weighted dimension of its
//! chain: each level contributes `count * (new directions)`. Equivalently
//! it is the sum over `n` of `dim(level set at n)`, which is the form in
//! which the dimension laws below are easiest to see.

use crate::chain::MVSpace;
use crate::error::Error;
use crate::independence::{ensure_ambient_basis, mbasis_within, MBasis};
use crate::linalg::{LinearMap, Vector};
use crate::subspace::Subspace;

/// The multi dimension: `sum count_i * (dim U_i - dim U_{i-1})` over the
/// chain. Directions outside the support carry count zero and contribute
/// nothing, so the value does not depend on the ambient dimension.
pub fn mdim(space: &MVSpace) -> u64 {
    let mut total = 0u64;
    let mut prev = 0usize;
    for level in space.levels() {
        total += level.count as u64 * (level.subspace.dim() - prev) as u64;
        prev = level.subspace.dim();
    }
    total
}

/// The sum of the space's counts over the members of a basis `b` of the
/// ambient vector space. The value never exceeds [`mdim`], and reaches it
/// exactly when `b` is an M-basis of the space. Errors with
/// [`Error::NotABasis`] when `b` fails to be a basis.
pub fn basis_count_sum(space: &MVSpace, b: &[Vector]) -> Result<u64, Error> {
    ensure_ambient_basis(space, b)?;
    let mut total = 0u64;
    for x in b {
        total += space.count(x)? as u64;
    }
    Ok(total)
}

/// Whether each space counts the zero vector at least as heavily as the
/// other counts any nonzero vector. Pairs with this property are the
/// natural inputs to [`common_mbasis`] and [`modular_dimension_check`].
pub fn theta_dominance(v: &MVSpace, w: &MVSpace) -> Result<bool, Error> {
    v.check_same_shape(w)?;
    Ok(v.theta_count() >= w.top_nonzero_count() && w.theta_count() >= v.top_nonzero_count())
}

/// A space cut down to a carrier subspace: counts agree with the original
/// on the carrier and vanish outside it. The chain of the inner space
/// lives inside the carrier, so its multi dimension is measured against
/// `dim(carrier)` rather than the ambient dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictedMVSpace {
    carrier: Subspace,
    space: MVSpace,
}

impl RestrictedMVSpace {
    pub fn carrier(&self) -> &Subspace {
        &self.carrier
    }

    /// The restricted space itself, still in ambient coordinates.
    pub fn space(&self) -> &MVSpace {
        &self.space
    }

    pub fn count(&self, x: &Vector) -> Result<u32, Error> {
        self.space.count(x)
    }

    pub fn mdim(&self) -> u64 {
        mdim(&self.space)
    }
}

/// Restricts a space to a carrier subspace by intersecting every level
/// with it.
pub fn restrict(space: &MVSpace, carrier: &Subspace) -> Result<RestrictedMVSpace, Error> {
    if carrier.field() != space.field() {
        return Err(Error::FieldMismatch(space.field(), carrier.field()));
    }
    if carrier.ambient() != space.ambient() {
        return Err(Error::DimensionMismatch {
            expected: space.ambient(),
            got: carrier.ambient(),
        });
    }
    let mut candidates = Vec::with_capacity(space.levels().len());
    for level in space.levels() {
        candidates.push((level.count, level.subspace.intersection(carrier)?));
    }
    let inner = MVSpace::from_candidates(space.field(), space.ambient(), space.omega(), candidates)?;
    Ok(RestrictedMVSpace {
        carrier: carrier.clone(),
        space: inner,
    })
}

/// Both sides of the modular dimension law for a dominant pair:
/// `mdim(V + W)` on the left, `mdim(V) + mdim(W) - mdim(V meet W)` on the
/// right. Fails with [`Error::DominanceFails`] when the pair lacks
/// [`theta_dominance`].
pub fn modular_dimension_check(v: &MVSpace, w: &MVSpace) -> Result<(u64, u64), Error> {
    if !theta_dominance(v, w)? {
        return Err(Error::DominanceFails);
    }
    let lhs = mdim(&v.sum(w)?);
    // Intersection counts never exceed either argument's, so the meet's
    // dimension stays within mdim(v) and the subtraction cannot wrap.
    let rhs = mdim(v) + mdim(w) - mdim(&v.intersect(w)?);
    Ok((lhs, rhs))
}

/// A basis of the ambient space that is simultaneously an M-basis of `v`
/// and of `w`, for a dominant pair. Returns the two certified readings of
/// the same vector set (each ordered by its own counts).
pub fn common_mbasis(v: &MVSpace, w: &MVSpace) -> Result<(MBasis, MBasis), Error> {
    if !theta_dominance(v, w)? {
        return Err(Error::DominanceFails);
    }
    let full = Subspace::full(v.field(), v.ambient());
    let vectors = common_within(v, w, &full)?;
    let for_v = MBasis::certify(v, &vectors).expect("the construction yields an M-basis of v");
    let for_w = MBasis::certify(w, &vectors).expect("the construction yields an M-basis of w");
    Ok((for_v, for_w))
}

/// The recursive step behind [`common_mbasis`], working inside `carrier`.
///
/// Build an M-basis of `v` within the carrier, drop its lowest-count
/// member, and recurse on the hull spanned by the rest; the hull then
/// contains every `v`-level that does not cover the whole carrier, so any
/// completion works for `v`, and completing with a vector of maximal
/// `w`-count works for `w`.
fn common_within(v: &MVSpace, w: &MVSpace, carrier: &Subspace) -> Result<Vec<Vector>, Error> {
    let d = carrier.dim();
    if d == 0 {
        return Ok(Vec::new());
    }
    if d == 1 {
        return Ok(vec![carrier.basis()[0].clone()]);
    }
    let pairs = mbasis_within(v, carrier);
    debug_assert_eq!(pairs.len(), d);
    let head: Vec<Vector> = pairs[..d - 1].iter().map(|(x, _)| x.clone()).collect();
    let hull = Subspace::from_generators(v.field(), v.ambient(), &head)?;
    debug_assert_eq!(hull.dim(), d - 1);
    #[cfg(debug_assertions)]
    {
        // Restricting the sum to the hull agrees with summing the
        // restrictions — the structure the recursion leans on.
        let joint = v.sum(w).unwrap();
        let outside = restrict(&joint, &hull).unwrap();
        let inside = restrict(v, &hull)
            .unwrap()
            .space
            .sum(&restrict(w, &hull).unwrap().space)
            .unwrap();
        debug_assert_eq!(outside.space, inside);
    }
    let mut vectors = common_within(v, w, &hull)?;
    vectors.push(best_outside(w, carrier, &hull));
    Ok(vectors)
}

/// A vector of `carrier` outside `hull` whose count in `space` is
/// maximal; deterministic via the deepest-level-first scan.
fn best_outside(space: &MVSpace, carrier: &Subspace, hull: &Subspace) -> Vector {
    for level in space.levels() {
        let within = level
            .subspace
            .intersection(carrier)
            .expect("levels share the ambient space");
        if !within.is_subspace_of(hull).expect("shared ambient space") {
            return within
                .basis()
                .iter()
                .find(|r| !hull.contains_unchecked(r))
                .expect("some basis row escapes the hull")
                .clone();
        }
    }
    carrier
        .basis()
        .iter()
        .find(|r| !hull.contains_unchecked(r))
        .expect("the carrier strictly exceeds the hull")
        .clone()
}

/// The image of a space under a linear map: each level is pushed forward,
/// and an image vector keeps the best count among its preimages.
pub fn map_image(f: &LinearMap, space: &MVSpace) -> Result<MVSpace, Error> {
    if f.field() != space.field() {
        return Err(Error::FieldMismatch(space.field(), f.field()));
    }
    if f.domain_dim() != space.ambient() {
        return Err(Error::DimensionMismatch {
            expected: space.ambient(),
            got: f.domain_dim(),
        });
    }
    let mut candidates = Vec::with_capacity(space.levels().len());
    for level in space.levels() {
        let rows: Vec<Vector> = level.subspace.basis().iter().map(|r| f.apply(r)).collect();
        let image = Subspace::from_generators(f.field(), f.codomain_dim(), &rows)?;
        candidates.push((level.count, image));
    }
    MVSpace::from_candidates(f.field(), f.codomain_dim(), space.omega(), candidates)
}

/// The space cut down to the kernel of `f`.
pub fn ker_restrict(f: &LinearMap, space: &MVSpace) -> Result<RestrictedMVSpace, Error> {
    if f.field() != space.field() {
        return Err(Error::FieldMismatch(space.field(), f.field()));
    }
    if f.domain_dim() != space.ambient() {
        return Err(Error::DimensionMismatch {
            expected: space.ambient(),
            got: f.domain_dim(),
        });
    }
    restrict(space, &f.kernel())
}

/// The image of the space under `f`, carried by the image of `f`.
pub fn im_restrict(f: &LinearMap, space: &MVSpace) -> Result<RestrictedMVSpace, Error> {
    let pushed = map_image(f, space)?;
    let carrier = f.image();
    debug_assert!(pushed
        .support()
        .is_subspace_of(&carrier)
        .expect("shared codomain"));
    Ok(RestrictedMVSpace {
        carrier,
        space: pushed,
    })
}

/// Both sides of the dimension decomposition along a linear map:
/// `mdim(kernel part) + mdim(image part)` on the left, `mdim(space)` on
/// the right. The two are equal for every space and map, because each
/// level set splits exactly into its kernel slice and its image.
pub fn rank_nullity_check(f: &LinearMap, space: &MVSpace) -> Result<(u64, u64), Error> {
    let kernel_part = ker_restrict(f, space)?;
    let image_part = im_restrict(f, space)?;
    Ok((kernel_part.mdim() + image_part.mdim(), mdim(space)))
}
