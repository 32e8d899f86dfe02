use std::collections::{BTreeSet, VecDeque};
use std::sync::OnceLock;

use super::group::{GroupId, Weight};

type Mat = [[i64; 2]; 2];

/// Weyl group element acting on Dynkin labels.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    pub matrix: Mat,
    pub det: i64,
}

/// Fixed root data for one group. The quadratic form on fundamental weights
/// is `form / denom`, normalised so long roots have squared length 2.
#[derive(Clone, Debug)]
pub struct RootSystemData {
    pub group: GroupId,
    pub cartan: Mat,
    pub form: Mat,
    pub denom: i64,
    pub reflections: Vec<Mat>,
    pub weyl: Vec<WeylElement>,
    pub positive_roots: Vec<Weight>,
    pub theta: Weight,
}

fn mat_mul(a: &Mat, b: &Mat, r: usize) -> Mat {
    let mut c = [[0; 2]; 2];
    for i in 0..r {
        for j in 0..r {
            c[i][j] = (0..r).map(|l| a[i][l] * b[l][j]).sum();
        }
    }
    c
}

fn identity(r: usize) -> Mat {
    let mut m = [[0; 2]; 2];
    for (i, row) in m.iter_mut().enumerate().take(r) {
        row[i] = 1;
    }
    m
}

fn det(m: &Mat, r: usize) -> i64 {
    if r == 1 {
        m[0][0]
    } else {
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
    }
}

impl RootSystemData {
    fn build(g: GroupId) -> Self {
        let r = g.rank();
        let cartan = g.cartan();
        let (form, denom) = match g {
            GroupId::A1 => ([[1, 0], [0, 0]], 2),
            GroupId::A2 => ([[2, 1], [1, 2]], 3),
            GroupId::C2 => ([[1, 1], [1, 2]], 2),
            GroupId::G2 => ([[2, 3], [3, 6]], 3),
        };
        // s_i(lambda)_j = lambda_j - lambda_i A_ij
        let reflections: Vec<Mat> = (0..r)
            .map(|i| {
                let mut m = identity(r);
                for (j, row) in m.iter_mut().enumerate().take(r) {
                    row[i] -= cartan[i][j];
                }
                m
            })
            .collect();

        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::new();
        let id = identity(r);
        seen.insert(id);
        queue.push_back(id);
        while let Some(m) = queue.pop_front() {
            for s in &reflections {
                let n = mat_mul(s, &m, r);
                if seen.insert(n) {
                    queue.push_back(n);
                }
            }
        }
        let weyl: Vec<WeylElement> = seen
            .into_iter()
            .map(|matrix| WeylElement {
                matrix,
                det: det(&matrix, r),
            })
            .collect();

        let mut data = RootSystemData {
            group: g,
            cartan,
            form,
            denom,
            reflections,
            weyl,
            positive_roots: Vec::new(),
            theta: g.highest_root(),
        };
        let mut roots = BTreeSet::new();
        for i in 0..r {
            let alpha = data.simple_root(i);
            for w in &data.weyl {
                roots.insert(data.apply(w, &alpha));
            }
        }
        let rho = g.rho();
        data.positive_roots = roots
            .into_iter()
            .filter(|a| data.ip_num(a, &rho) > 0)
            .collect();
        data
    }

    pub fn rank(&self) -> usize {
        self.group.rank()
    }

    /// Simple root alpha_i in Dynkin labels.
    pub fn simple_root(&self, i: usize) -> Weight {
        let r = self.rank();
        let mut c = [0; 2];
        c[..r].copy_from_slice(&self.cartan[i][..r]);
        Weight::from_parts(c, r)
    }

    /// `denom * (a, b)`.
    pub fn ip_num(&self, a: &Weight, b: &Weight) -> i64 {
        let r = self.rank();
        let (a, b) = (a.coords(), b.coords());
        let mut s = 0;
        for i in 0..r {
            for j in 0..r {
                s += a[i] * self.form[i][j] * b[j];
            }
        }
        s
    }

    pub fn apply_matrix(&self, m: &Mat, w: &Weight) -> Weight {
        let r = self.rank();
        let c = w.coords();
        let mut out = [0; 2];
        for (j, o) in out.iter_mut().enumerate().take(r) {
            *o = (0..r).map(|l| m[j][l] * c[l]).sum();
        }
        Weight::from_parts(out, r)
    }

    pub fn apply(&self, w: &WeylElement, v: &Weight) -> Weight {
        self.apply_matrix(&w.matrix, v)
    }

    pub fn reflect(&self, i: usize, v: &Weight) -> Weight {
        let r = self.rank();
        let mut c = v.coords();
        let vi = c[i];
        for (j, cj) in c.iter_mut().enumerate().take(r) {
            *cj -= vi * self.cartan[i][j];
        }
        Weight::from_parts(c, r)
    }

    /// Coordinates of `v` in the simple-root basis when they are integers.
    pub fn root_coords(&self, v: &Weight) -> Option<[i64; 2]> {
        let r = self.rank();
        let c = v.coords();
        if r == 1 {
            let a = self.cartan[0][0];
            return (c[0] % a == 0).then(|| [c[0] / a, 0]);
        }
        // v = A^T x, solve by Cramer
        let a = &self.cartan;
        let d = a[0][0] * a[1][1] - a[0][1] * a[1][0];
        let x0 = c[0] * a[1][1] - c[1] * a[1][0];
        let x1 = a[0][0] * c[1] - a[0][1] * c[0];
        (x0 % d == 0 && x1 % d == 0).then(|| [x0 / d, x1 / d])
    }

    /// Whether `v` is a non-negative integer combination of simple roots.
    pub fn in_positive_root_cone(&self, v: &Weight) -> bool {
        self.root_coords(v).is_some_and(|c| c[0] >= 0 && c[1] >= 0)
    }

    /// Number of simple roots subtracted, when `v` lies in the root lattice.
    pub fn height(&self, v: &Weight) -> Option<i64> {
        self.root_coords(v).map(|c| c[0] + c[1])
    }
}

/// Shared root data for `g`.
pub fn root_system(g: GroupId) -> &'static RootSystemData {
    static CELLS: [OnceLock<RootSystemData>; 4] = [
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
    ];
    let idx = GroupId::ALL.iter().position(|&h| h == g).unwrap();
    CELLS[idx].get_or_init(|| RootSystemData::build(g))
}
