use super::{neg, sub, mul, FpMatrix};

/// Subspace of `F_p^n` with a canonical RREF basis.
///
/// Two subspaces are equal exactly when their bases are, so `PartialEq`
/// compares subspaces.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    basis: FpMatrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(p: u32, n: usize) -> Self {
        Subspace { basis: FpMatrix::zeros(p, 0, n), pivots: Vec::new() }
    }

    pub fn full(p: u32, n: usize) -> Self {
        Subspace { basis: FpMatrix::identity(p, n), pivots: (0..n).collect() }
    }

    /// Row space of `m`.
    pub fn from_matrix_rows(m: &FpMatrix) -> Self {
        let r = m.rref();
        let k = r.rank();
        Subspace { basis: r.matrix.submatrix(0, k, 0, m.cols()), pivots: r.pivots }
    }

    pub fn from_vecs(p: u32, n: usize, vecs: &[Vec<u32>]) -> Self {
        Self::from_matrix_rows(&FpMatrix::from_vecs(p, n, vecs))
    }

    pub fn p(&self) -> u32 {
        self.basis.p()
    }
    pub fn ambient(&self) -> usize {
        self.basis.cols()
    }
    pub fn dim(&self) -> usize {
        self.pivots.len()
    }
    pub fn basis(&self) -> &FpMatrix {
        &self.basis
    }
    pub fn basis_vecs(&self) -> Vec<Vec<u32>> {
        self.basis.row_vecs()
    }
    pub fn vector(&self, i: usize) -> &[u32] {
        self.basis.row(i)
    }
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }
    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }
    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient()
    }

    /// Coordinates of `v` in the canonical basis, `None` if `v` is not a member.
    pub fn coords(&self, v: &[u32]) -> Option<Vec<u32>> {
        assert_eq!(v.len(), self.ambient(), "vector length vs ambient dimension");
        let c: Vec<u32> = self.pivots.iter().map(|&i| v[i]).collect();
        let back = self.basis.vec_mul(&c);
        (back == v).then_some(c)
    }

    /// Coordinates of a vector already known to be a member.
    pub fn coords_unchecked(&self, v: &[u32]) -> Vec<u32> {
        self.pivots.iter().map(|&i| v[i]).collect()
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.coords(v).is_some()
    }

    /// Linear combination of basis vectors.
    pub fn combine(&self, c: &[u32]) -> Vec<u32> {
        self.basis.vec_mul(c)
    }

    pub fn contains_space(&self, o: &Subspace) -> bool {
        (0..o.dim()).all(|i| self.contains(o.vector(i)))
    }

    pub fn sum(&self, o: &Subspace) -> Subspace {
        assert_eq!(self.ambient(), o.ambient());
        Subspace::from_matrix_rows(&self.basis.vstack(&o.basis))
    }

    /// Orthogonal complement under the standard bilinear form.
    pub fn annihilator(&self) -> Subspace {
        if self.dim() == 0 {
            return Subspace::full(self.p(), self.ambient());
        }
        self.basis.kernel()
    }

    pub fn intersection(&self, o: &Subspace) -> Subspace {
        assert_eq!(self.ambient(), o.ambient());
        if self.dim() == 0 || o.dim() == 0 {
            return Subspace::zero(self.p(), self.ambient());
        }
        self.annihilator().sum(&o.annihilator()).annihilator()
    }

    /// `A(self)` for a matrix acting on column vectors.
    pub fn image_under(&self, a: &FpMatrix) -> Subspace {
        assert_eq!(a.cols(), self.ambient());
        Subspace::from_matrix_rows(&self.basis.mul(&a.transpose()))
    }

    /// `{v : A v ∈ self}`.
    pub fn preimage(&self, a: &FpMatrix) -> Subspace {
        assert_eq!(a.rows(), self.ambient());
        let q = QuotientSpace::new(self);
        q.projection().mul(a).kernel()
    }

    /// Coordinates (in this space's basis) of the vectors of `inner`, as a
    /// subspace of `F_p^{dim}`. `inner` must lie in `self`.
    pub fn relative(&self, inner: &Subspace) -> Subspace {
        let vecs: Vec<Vec<u32>> = (0..inner.dim())
            .map(|i| self.coords(inner.vector(i)).expect("relative: not a subspace"))
            .collect();
        Subspace::from_vecs(self.p(), self.dim(), &vecs)
    }

    /// Vectors of `self` completing a basis of `inner` (which must lie in `self`).
    pub fn complement_of(&self, inner: &Subspace) -> Vec<Vec<u32>> {
        let rel = self.relative(inner);
        let q = QuotientSpace::new(&rel);
        (0..q.dim()).map(|j| self.combine(&q.section().col_vec(j))).collect()
    }
}

/// `F_p^n / killed` with canonical coset representatives.
#[derive(Clone, Debug)]
pub struct QuotientSpace {
    killed: Subspace,
    free: Vec<usize>,
    projection: FpMatrix,
    section: FpMatrix,
}

impl QuotientSpace {
    pub fn new(killed: &Subspace) -> Self {
        let p = killed.p();
        let n = killed.ambient();
        let mut is_pivot = vec![false; n];
        killed.pivots.iter().for_each(|&c| is_pivot[c] = true);
        let free: Vec<usize> = (0..n).filter(|&c| !is_pivot[c]).collect();
        let q = free.len();
        let mut projection = FpMatrix::zeros(p, q, n);
        let mut section = FpMatrix::zeros(p, n, q);
        for (j, &c) in free.iter().enumerate() {
            projection.set(j, c, 1);
            section.set(c, j, 1);
            for (i, &pc) in killed.pivots.iter().enumerate() {
                projection.set(j, pc, neg(killed.basis.get(i, c), p));
            }
        }
        QuotientSpace { killed: killed.clone(), free, projection, section }
    }

    pub fn ambient(&self) -> usize {
        self.killed.ambient()
    }
    pub fn dim(&self) -> usize {
        self.free.len()
    }
    /// Coordinates carrying the canonical representatives.
    pub fn free_columns(&self) -> &[usize] {
        &self.free
    }
    pub fn killed(&self) -> &Subspace {
        &self.killed
    }
    /// `dim × ambient`
    pub fn projection(&self) -> &FpMatrix {
        &self.projection
    }
    /// `ambient × dim`
    pub fn section(&self) -> &FpMatrix {
        &self.section
    }

    pub fn project(&self, v: &[u32]) -> Vec<u32> {
        // row j: v[free_j] - sum_i basis_i[free_j] v[piv_i]
        let p = self.killed.p();
        let b = &self.killed.basis;
        self.free
            .iter()
            .map(|&c| {
                let mut acc = v[c];
                for (i, &pc) in self.killed.pivots.iter().enumerate() {
                    acc = sub(acc, mul(b.get(i, c), v[pc], p), p);
                }
                acc
            })
            .collect()
    }

    pub fn lift(&self, c: &[u32]) -> Vec<u32> {
        let mut v = vec![0u32; self.ambient()];
        for (&col, &x) in self.free.iter().zip(c) {
            v[col] = x;
        }
        v
    }

    /// Matrix of the map induced on quotients by `a`, where `a(src.killed) ⊆ self.killed`.
    pub fn induced(&self, a: &FpMatrix, src: &QuotientSpace) -> FpMatrix {
        self.projection.mul(&a.mul(&src.section))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn quotient_examples() {
        let q = QuotientSpace::new(&Subspace::zero(101, 3));
        assert_eq!(q.projection(), &FpMatrix::identity(101, 3));
        let q = QuotientSpace::new(&Subspace::full(101, 3));
        assert_eq!(q.dim(), 0);

        let killed = Subspace::from_vecs(3, 2, &[vec![1, 1]]);
        let q = QuotientSpace::new(&killed);
        assert_eq!(q.dim(), 1);
        assert_eq!(q.projection().row_vecs(), vec![vec![2, 1]]);
        assert_eq!(q.projection().mul(q.section()), FpMatrix::identity(3, 1));
        assert_eq!(q.projection().kernel(), killed);
        assert_eq!(q.project(&[1, 1]), vec![0]);
    }

    #[test]
    fn intersection_and_preimage() {
        let p = 101;
        let u = Subspace::from_vecs(p, 3, &[vec![1, 0, 0], vec![0, 1, 0]]);
        let w = Subspace::from_vecs(p, 3, &[vec![0, 1, 0], vec![0, 0, 1]]);
        assert_eq!(u.intersection(&w), Subspace::from_vecs(p, 3, &[vec![0, 1, 0]]));
        assert_eq!(u.sum(&w), Subspace::full(p, 3));

        // projection onto the first coordinate; preimage of 0 is the last two axes
        let a = FpMatrix::from_rows(p, 3, &[vec![1, 0, 0]]).unwrap();
        assert_eq!(Subspace::zero(p, 1).preimage(&a), w);
    }

    #[test]
    fn random_intersections_agree_with_dimension_formula() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let p = 5;
        for _ in 0..50 {
            let a = Subspace::from_matrix_rows(&FpMatrix::random(p, 3, 6, &mut rng));
            let b = Subspace::from_matrix_rows(&FpMatrix::random(p, 4, 6, &mut rng));
            let i = a.intersection(&b);
            assert_eq!(a.dim() + b.dim(), a.sum(&b).dim() + i.dim());
            assert!(a.contains_space(&i) && b.contains_space(&i));
            let comp = a.complement_of(&i);
            assert_eq!(comp.len() + i.dim(), a.dim());
        }
    }
}
