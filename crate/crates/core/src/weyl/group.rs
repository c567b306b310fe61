use std::collections::{HashMap, VecDeque};
use std::sync::{Arc, Mutex, OnceLock};

use super::composition::Composition;
use super::element::{WeylElement, MAX_RANK};
use super::matrix::ThetaMatrix;
use crate::error::{Error, Result};

/// The full Weyl group of type C and rank `r`, with elements indexed in
/// order of (length, images). Index 0 is the identity.
pub struct WeylGroup {
    rank: usize,
    elements: Vec<WeylElement>,
    index: HashMap<WeylElement, u32>,
    lengths: Vec<u32>,
    left: Vec<Vec<u32>>,
    right: Vec<Vec<u32>>,
    inverse: Vec<u32>,
}

static GROUPS: OnceLock<Mutex<HashMap<usize, Arc<WeylGroup>>>> = OnceLock::new();

impl WeylGroup {
    /// Shared instance for rank `r`, built on first use.
    pub fn get(r: usize) -> Result<Arc<WeylGroup>> {
        if r > MAX_RANK {
            return Err(Error::RankTooLarge {
                rank: r,
                cap: MAX_RANK,
            });
        }
        let cache = GROUPS.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(g) = cache.lock().unwrap().get(&r) {
            return Ok(g.clone());
        }
        let g = Arc::new(Self::build(r));
        Ok(cache.lock().unwrap().entry(r).or_insert(g).clone())
    }

    fn build(r: usize) -> Self {
        let mut elements: Vec<WeylElement> = bfs_distances(r).into_keys().collect();
        let lengths_of: HashMap<WeylElement, u32> = elements
            .iter()
            .map(|w| (w.clone(), w.length() as u32))
            .collect();
        elements.sort_by(|a, b| lengths_of[a].cmp(&lengths_of[b]).then_with(|| a.cmp(b)));
        let index: HashMap<WeylElement, u32> = elements
            .iter()
            .enumerate()
            .map(|(i, w)| (w.clone(), i as u32))
            .collect();
        let lengths = elements.iter().map(|w| lengths_of[w]).collect();
        let table = |f: &dyn Fn(&WeylElement, usize) -> WeylElement| -> Vec<Vec<u32>> {
            (1..=r)
                .map(|j| elements.iter().map(|w| index[&f(w, j)]).collect())
                .collect()
        };
        let left = table(&|w, j| w.mul_gen_left(j));
        let right = table(&|w, j| w.mul_gen_right(j));
        let inverse = elements.iter().map(|w| index[&w.inverse()]).collect();
        Self {
            rank: r,
            elements,
            index,
            lengths,
            left,
            right,
            inverse,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn element(&self, i: u32) -> &WeylElement {
        &self.elements[i as usize]
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn index_of(&self, w: &WeylElement) -> Option<u32> {
        self.index.get(w).copied()
    }

    pub fn length(&self, i: u32) -> u32 {
        self.lengths[i as usize]
    }

    /// Index of `s_j * w`.
    pub fn left_gen(&self, j: usize, i: u32) -> u32 {
        self.left[j - 1][i as usize]
    }

    /// Index of `w * s_j`.
    pub fn right_gen(&self, j: usize, i: u32) -> u32 {
        self.right[j - 1][i as usize]
    }

    pub fn inverse(&self, i: u32) -> u32 {
        self.inverse[i as usize]
    }

    pub fn compose(&self, a: u32, b: u32) -> u32 {
        let w = self.elements[a as usize]
            .compose(&self.elements[b as usize])
            .expect("same rank");
        self.index[&w]
    }

    pub fn is_left_descent(&self, j: usize, i: u32) -> bool {
        self.length(self.left_gen(j, i)) < self.length(i)
    }

    pub fn is_right_descent(&self, j: usize, i: u32) -> bool {
        self.length(self.right_gen(j, i)) < self.length(i)
    }

    /// Reduced word `[a_1, ..., a_k]` with `w = s_{a_1} ... s_{a_k}`.
    pub fn reduced_word(&self, i: u32) -> Vec<usize> {
        self.elements[i as usize].reduced_word()
    }

    fn check(&self, lambda: &Composition) -> Result<()> {
        if lambda.r() != self.rank {
            return Err(Error::InvalidComposition(format!(
                "{:?} sums to {} but the rank is {}",
                lambda.parts,
                lambda.r(),
                self.rank
            )));
        }
        Ok(())
    }

    /// Elements of the standard parabolic subgroup `W_lambda`, sorted.
    pub fn parabolic(&self, lambda: &Composition) -> Result<Vec<u32>> {
        self.check(lambda)?;
        let gens = lambda.parabolic_generators();
        Ok(self.closure(&[0], &gens, &[]))
    }

    /// Shortest representatives of the right cosets `W_lambda w`.
    pub fn min_right_coset_reps(&self, lambda: &Composition) -> Result<Vec<u32>> {
        self.check(lambda)?;
        let gens = lambda.parabolic_generators();
        Ok((0..self.len() as u32)
            .filter(|&w| gens.iter().all(|&j| !self.is_left_descent(j, w)))
            .collect())
    }

    /// Shortest representatives of the double cosets `W_lambda w W_mu`.
    pub fn min_double_coset_reps(
        &self,
        lambda: &Composition,
        mu: &Composition,
    ) -> Result<Vec<u32>> {
        self.check(lambda)?;
        self.check(mu)?;
        let gl = lambda.parabolic_generators();
        let gm = mu.parabolic_generators();
        Ok((0..self.len() as u32)
            .filter(|&w| {
                gl.iter().all(|&j| !self.is_left_descent(j, w))
                    && gm.iter().all(|&j| !self.is_right_descent(j, w))
            })
            .collect())
    }

    /// Elements of `W_lambda d W_mu`, sorted.
    pub fn double_coset(&self, lambda: &Composition, d: u32, mu: &Composition) -> Result<Vec<u32>> {
        self.check(lambda)?;
        self.check(mu)?;
        Ok(self.closure(
            &[d],
            &lambda.parabolic_generators(),
            &mu.parabolic_generators(),
        ))
    }

    /// Smallest set containing `seeds` and closed under left multiplication
    /// by `s_j, j in left_gens` and right multiplication by `right_gens`.
    pub fn closure(&self, seeds: &[u32], left_gens: &[usize], right_gens: &[usize]) -> Vec<u32> {
        let mut seen = vec![false; self.len()];
        let mut queue: VecDeque<u32> = VecDeque::new();
        for &s in seeds {
            if !seen[s as usize] {
                seen[s as usize] = true;
                queue.push_back(s);
            }
        }
        while let Some(w) = queue.pop_front() {
            let next = left_gens
                .iter()
                .map(|&j| self.left_gen(j, w))
                .chain(right_gens.iter().map(|&j| self.right_gen(j, w)));
            for x in next.collect::<Vec<_>>() {
                if !seen[x as usize] {
                    seen[x as usize] = true;
                    queue.push_back(x);
                }
            }
        }
        (0..self.len() as u32)
            .filter(|&i| seen[i as usize])
            .collect()
    }

    /// Element of maximal length in a set (ties cannot occur for cosets).
    pub fn longest(&self, set: &[u32]) -> u32 {
        *set.iter()
            .max_by_key(|&&w| (self.length(w), w))
            .expect("nonempty set")
    }

    /// Matrix `a_ij = |R_i ∩ d(C_j)|` attached to a double coset.
    pub fn matrix_of_triple(
        &self,
        lambda: &Composition,
        d: u32,
        mu: &Composition,
    ) -> Result<ThetaMatrix> {
        if lambda.n() != mu.n() {
            return Err(Error::InvalidComposition(format!(
                "{:?} and {:?} have different lengths",
                lambda.parts, mu.parts
            )));
        }
        if !self.min_double_coset_reps(lambda, mu)?.contains(&d) {
            return Err(Error::NotMinimalRepresentative);
        }
        Ok(matrix_from_permutation(
            lambda,
            &self.elements[d as usize],
            mu,
        ))
    }

    /// Inverse of [`matrix_of_triple`](Self::matrix_of_triple).
    pub fn triple_of_matrix(&self, a: &ThetaMatrix) -> Result<(Composition, u32, Composition)> {
        let n = a.n();
        let lambda = Composition::new(a.ro()[..n].to_vec())?;
        let mu = Composition::new(a.co()[..n].to_vec())?;
        self.check(&lambda)?;
        for d in self.min_double_coset_reps(&lambda, &mu)? {
            if matrix_from_permutation(&lambda, &self.elements[d as usize], &mu) == *a {
                return Ok((lambda, d, mu));
            }
        }
        Err(Error::InvalidMatrix(format!(
            "{a:?} matches no double coset"
        )))
    }
}

/// Block index (0-based) of each point of `[1, 2r]` for the blocks of `hat`.
fn block_of(hat: &[u32]) -> Vec<usize> {
    hat.iter()
        .enumerate()
        .flat_map(|(b, &len)| std::iter::repeat_n(b, len as usize))
        .collect()
}

pub(crate) fn matrix_from_permutation(
    lambda: &Composition,
    d: &WeylElement,
    mu: &Composition,
) -> ThetaMatrix {
    let n = lambda.n();
    let rows = block_of(&lambda.hat());
    let cols = block_of(&mu.hat());
    let mut m = vec![vec![0u32; 2 * n]; 2 * n];
    for (x, &j) in cols.iter().enumerate() {
        let i = rows[d.apply(x + 1) - 1];
        m[i][j] += 1;
    }
    ThetaMatrix::from_rows(&m).expect("theta-fixed permutation gives a centro-symmetric matrix")
}

/// Breadth-first distances from the identity in the Cayley graph.
pub fn bfs_distances(r: usize) -> HashMap<WeylElement, u32> {
    let mut dist = HashMap::new();
    let id = WeylElement::identity(r);
    dist.insert(id.clone(), 0);
    let mut queue = VecDeque::from([id]);
    while let Some(w) = queue.pop_front() {
        let d = dist[&w];
        for j in 1..=r {
            let x = w.mul_gen_right(j);
            if !dist.contains_key(&x) {
                dist.insert(x.clone(), d + 1);
                queue.push_back(x);
            }
        }
    }
    dist
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_orders() {
        for (r, order) in [(1, 2), (2, 8), (3, 48), (4, 384)] {
            assert_eq!(WeylGroup::get(r).unwrap().len(), order);
        }
    }

    #[test]
    fn greedy_length_matches_bfs() {
        for r in 1..=4 {
            for (w, d) in bfs_distances(r) {
                assert_eq!(w.length() as u32, d, "{w:?}");
            }
        }
    }

    #[test]
    fn rank_cap() {
        assert!(matches!(WeylGroup::get(7), Err(Error::RankTooLarge { .. })));
    }

    #[test]
    fn parabolic_never_contains_the_last_generator() {
        let g = WeylGroup::get(3).unwrap();
        for lambda in Composition::all(2, 3) {
            let p = g.parabolic(&lambda).unwrap();
            let s3 = g.index_of(&WeylElement::generator(3, 3).unwrap()).unwrap();
            assert!(!p.contains(&s3));
        }
    }

    #[test]
    fn small_matrix_of_triple() {
        let g = WeylGroup::get(1).unwrap();
        let l = Composition::new(vec![1]).unwrap();
        let s = g.index_of(&WeylElement::generator(1, 1).unwrap()).unwrap();
        let m = g.matrix_of_triple(&l, s, &l).unwrap();
        assert_eq!(m.rows(), vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(g.triple_of_matrix(&m).unwrap(), (l.clone(), s, l));
    }
}
