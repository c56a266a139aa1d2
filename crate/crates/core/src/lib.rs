//! Generalized E-functions of the rank-2 Lie groups C2 (O(5)) and G2.
//!
//! Each function family is a sum of exponentials `e^{2πi⟨wλ, x⟩}` over one of
//! the three index-2 subgroups `W^e`, `W^s`, `W^l` of the Weyl group, either
//! plain (`Ξ^+`) or twisted by a sign character (`Ξ^−`). The crate provides
//! exact root data, the Weyl group and its kernels, the fundamental domains
//! and finite grids of each family, evaluation of the functions, continuous
//! and discrete orthogonality, forward and inverse discrete transforms, and
//! decomposition of products into sums of functions of the same family.
//!
//! ```
//! use efunctions::{Algebra, AlgebraKind, Family};
//!
//! let g = Algebra::new(AlgebraKind::C2);
//! let v = g.xi(Family::SPlus, [1, 1], [0.1, 0.2]);
//! assert!(v.im.abs() < 1e-12);
//! ```

pub mod algebra;
pub mod cli;
pub mod domains;
pub mod formats;
pub mod orbitfn;
pub mod products;
pub mod tables;
pub mod transform;
pub mod verify;
pub mod weyl;

use std::path::PathBuf;

use num_complex::Complex64;

pub use algebra::{root_data, AlgebraKind, Basis, RootData};
pub use domains::{Family, Sheet};
pub use weyl::{Kernel, SignHom, Subgroup, WeylGroup};

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("the identity homomorphism has the whole group as kernel")]
    TrivialKernel,
    #[error("M must be a positive integer, got {0}")]
    InvalidM(i64),
    #[error("the grid F_M^{family} for M = {m} is empty")]
    EmptyGrid { family: Family, m: i64 },
    #[error("weight {weight:?} is not in the cone P_{family}")]
    WeightOutsideCone { family: Family, weight: [i64; 2] },
    #[error("missing values for {count} points: {listed}")]
    MissingPoints { count: usize, listed: String },
    #[error("unexpected entry {0} not in the grid")]
    UnexpectedPoint(String),
    #[error("vector belongs to {found} but {expected} was requested")]
    Mismatch { expected: String, found: String },
    #[error("families {0} and {1} use different kernel subgroups")]
    KernelMismatch(Family, Family),
    #[error("degenerate triangle")]
    DegenerateTriangle,
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

/// Root data, Weyl group and its three kernel subgroups, built once.
#[derive(Clone, Debug)]
pub struct Algebra {
    pub data: RootData,
    pub group: WeylGroup,
    we: Subgroup,
    ws: Subgroup,
    wl: Subgroup,
}

impl Algebra {
    pub fn new(kind: AlgebraKind) -> Self {
        let data = root_data(kind);
        let group = WeylGroup::generate(&data);
        let we = group.subgroup(Kernel::We);
        let ws = group.subgroup(Kernel::Ws);
        let wl = group.subgroup(Kernel::Wl);
        Algebra {
            data,
            group,
            we,
            ws,
            wl,
        }
    }

    pub fn kind(&self) -> AlgebraKind {
        self.data.kind
    }

    pub fn subgroup(&self, kernel: Kernel) -> &Subgroup {
        match kernel {
            Kernel::We => &self.we,
            Kernel::Ws => &self.ws,
            Kernel::Wl => &self.wl,
        }
    }

    /// `Ξ_λ(x)` with x in α∨-coordinates.
    pub fn xi(&self, family: Family, lambda: [i64; 2], x: [f64; 2]) -> Complex64 {
        orbitfn::xi(self, family, lambda, x)
    }
}

pub(crate) fn io_error(path: impl Into<PathBuf>, source: std::io::Error) -> Error {
    Error::Io {
        path: path.into(),
        source,
    }
}
