//! Weyl groups of C2 and G2, their sign homomorphisms and even subgroups,
//! and orbit/stabilizer counting on weights and on the torus.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use crate::algebra::{
    i_adjugate, i_apply, i_det, i_mul, i_transpose, modp, q_apply, AlgebraKind, IMat2, IVec2,
    QMat2, QVec2, Rational, RootData, I_IDENTITY,
};
use crate::Error;

/// One of the two simple reflections.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    Short,
    Long,
}

impl Generator {
    pub fn index(self, kind: AlgebraKind) -> usize {
        match self {
            Generator::Short => kind.short_index(),
            Generator::Long => kind.long_index(),
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Short => write!(f, "r_s"),
            Generator::Long => write!(f, "r_l"),
        }
    }
}

/// Matrix of the simple reflection `r_i` on ω-coordinates:
/// `r_i λ = λ − λ_i α_i`, where `α_i` is row `i` of the Cartan matrix.
pub fn reflection_on_weights(cartan: &IMat2, i: usize) -> IMat2 {
    let mut m = I_IDENTITY;
    for j in 0..2 {
        m[j][i] -= cartan[i][j];
    }
    m
}

/// Matrix of the simple reflection `r_i` on α∨-coordinates:
/// `r_i x = x − ⟨x, α_i⟩ α_i∨` with `⟨α_j∨, α_i⟩ = C_ij`.
pub fn reflection_on_coroots(cartan: &IMat2, i: usize) -> IMat2 {
    let mut m = I_IDENTITY;
    for j in 0..2 {
        m[i][j] -= cartan[i][j];
    }
    m
}

/// Matrix of the simple reflection `r_i` on ω∨-coordinates (the pairings
/// with the simple roots): `y ↦ y − y_i · (column i of C)`.
pub fn reflection_on_coweights(cartan: &IMat2, i: usize) -> IMat2 {
    let mut m = I_IDENTITY;
    for j in 0..2 {
        m[j][i] -= cartan[j][i];
    }
    m
}

/// An element of the Weyl group.
///
/// Equality is equality of the action matrices; the word is one reduced
/// expression, kept for sign bookkeeping and display.
#[derive(Clone, Debug)]
pub struct GroupElement {
    word: Vec<Generator>,
    weight_action: IMat2,
    coroot_action: IMat2,
}

impl PartialEq for GroupElement {
    fn eq(&self, other: &Self) -> bool {
        self.weight_action == other.weight_action
    }
}

impl Eq for GroupElement {}

impl GroupElement {
    pub fn identity() -> Self {
        GroupElement {
            word: Vec::new(),
            weight_action: I_IDENTITY,
            coroot_action: I_IDENTITY,
        }
    }

    /// The element `r_{w_0} r_{w_1} … r_{w_k}` (rightmost acts first).
    pub fn from_word(kind: AlgebraKind, cartan: &IMat2, word: &[Generator]) -> Self {
        let mut element = GroupElement::identity();
        for g in word {
            element = element.then_generator(kind, cartan, *g);
        }
        element
    }

    fn then_generator(&self, kind: AlgebraKind, cartan: &IMat2, g: Generator) -> Self {
        let i = g.index(kind);
        let mut word = self.word.clone();
        word.push(g);
        GroupElement {
            word,
            weight_action: i_mul(&self.weight_action, &reflection_on_weights(cartan, i)),
            coroot_action: i_mul(&self.coroot_action, &reflection_on_coroots(cartan, i)),
        }
    }

    pub fn word(&self) -> &[Generator] {
        &self.word
    }

    /// Action matrix on ω-coordinates.
    pub fn matrix(&self) -> &IMat2 {
        &self.weight_action
    }

    /// Action matrix on α∨-coordinates.
    pub fn coroot_matrix(&self) -> &IMat2 {
        &self.coroot_action
    }

    pub fn det(&self) -> i64 {
        i_det(&self.weight_action)
    }

    pub fn apply_weight(&self, lambda: IVec2) -> IVec2 {
        i_apply(&self.weight_action, lambda)
    }

    pub fn apply_coroot_int(&self, x: IVec2) -> IVec2 {
        i_apply(&self.coroot_action, x)
    }

    pub fn apply_point(&self, x: &QVec2) -> QVec2 {
        let m = &self.coroot_action;
        let mq: QMat2 = [
            [
                Rational::from_integer(m[0][0]),
                Rational::from_integer(m[0][1]),
            ],
            [
                Rational::from_integer(m[1][0]),
                Rational::from_integer(m[1][1]),
            ],
        ];
        q_apply(&mq, x)
    }

    pub fn apply_point_f64(&self, x: [f64; 2]) -> [f64; 2] {
        let m = &self.coroot_action;
        [
            m[0][0] as f64 * x[0] + m[0][1] as f64 * x[1],
            m[1][0] as f64 * x[0] + m[1][1] as f64 * x[1],
        ]
    }

    pub fn count(&self, g: Generator) -> usize {
        self.word.iter().filter(|h| **h == g).count()
    }

    pub fn word_string(&self) -> String {
        if self.word.is_empty() {
            "1".to_string()
        } else {
            self.word
                .iter()
                .map(|g| g.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        }
    }
}

/// The four sign homomorphisms `W → {±1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SignHom {
    /// The trivial homomorphism.
    Identity,
    /// `σ^e = det`.
    Det,
    /// `σ^s`: −1 on the short reflection, +1 on the long one.
    Short,
    /// `σ^l`: −1 on the long reflection, +1 on the short one.
    Long,
}

impl SignHom {
    pub const ALL: [SignHom; 4] = [
        SignHom::Identity,
        SignHom::Det,
        SignHom::Short,
        SignHom::Long,
    ];

    pub fn on_generator(self, g: Generator) -> i64 {
        match (self, g) {
            (SignHom::Identity, _) => 1,
            (SignHom::Det, _) => -1,
            (SignHom::Short, Generator::Short) => -1,
            (SignHom::Short, Generator::Long) => 1,
            (SignHom::Long, Generator::Long) => -1,
            (SignHom::Long, Generator::Short) => 1,
        }
    }

    /// Product of the generator signs along the element's word.
    pub fn sign(self, w: &GroupElement) -> i64 {
        w.word.iter().map(|g| self.on_generator(*g)).product()
    }

    /// `(σ(r_i)σ(r_j))^{m_ij} = 1` and `σ(r_i)² = 1`.
    pub fn is_admissible(self, coxeter: &IMat2) -> bool {
        let gens = [Generator::Short, Generator::Long];
        gens.iter().all(|g| self.on_generator(*g).pow(2) == 1)
            && gens.iter().all(|a| {
                gens.iter().all(|b| {
                    let m = if a == b { coxeter[0][0] } else { coxeter[0][1] };
                    (self.on_generator(*a) * self.on_generator(*b)).pow(m as u32) == 1
                })
            })
    }

    pub fn name(self) -> &'static str {
        match self {
            SignHom::Identity => "1",
            SignHom::Det => "σe",
            SignHom::Short => "σs",
            SignHom::Long => "σl",
        }
    }
}

/// The three even subgroups, kernels of σ^e, σ^s, σ^l.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kernel {
    We,
    Ws,
    Wl,
}

impl Kernel {
    pub const ALL: [Kernel; 3] = [Kernel::We, Kernel::Ws, Kernel::Wl];

    pub fn hom(self) -> SignHom {
        match self {
            Kernel::We => SignHom::Det,
            Kernel::Ws => SignHom::Short,
            Kernel::Wl => SignHom::Long,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Kernel::We => 'e',
            Kernel::Ws => 's',
            Kernel::Wl => 'l',
        }
    }
}

/// A kernel subgroup with its elements.
#[derive(Clone, Debug)]
pub struct Subgroup {
    pub label: Kernel,
    pub elements: Vec<GroupElement>,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

/// The Weyl group of C2 or G2 as an explicit list of elements.
#[derive(Clone, Debug)]
pub struct WeylGroup {
    pub kind: AlgebraKind,
    cartan: IMat2,
    elements: Vec<GroupElement>,
}

impl WeylGroup {
    /// Breadth-first closure of the identity under right multiplication by
    /// the generators; words are therefore reduced.
    pub fn generate(data: &RootData) -> Self {
        let kind = data.kind;
        let cartan = data.cartan;
        let mut elements: Vec<GroupElement> = Vec::new();
        let mut seen: HashSet<IMat2> = HashSet::new();
        let mut queue = VecDeque::from([GroupElement::identity()]);
        seen.insert(I_IDENTITY);
        while let Some(w) = queue.pop_front() {
            for g in [Generator::Short, Generator::Long] {
                let next = w.then_generator(kind, &cartan, g);
                if seen.insert(next.weight_action) {
                    queue.push_back(next);
                }
            }
            elements.push(w);
        }
        WeylGroup {
            kind,
            cartan,
            elements,
        }
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generator(&self, g: Generator) -> GroupElement {
        GroupElement::from_word(self.kind, &self.cartan, &[g])
    }

    pub fn element(&self, word: &[Generator]) -> GroupElement {
        let w = GroupElement::from_word(self.kind, &self.cartan, word);
        self.canonical(&w)
    }

    /// The listed element with the same matrix as `w`.
    pub fn canonical(&self, w: &GroupElement) -> GroupElement {
        self.elements
            .iter()
            .find(|e| *e == w)
            .expect("element of the group")
            .clone()
    }

    pub fn compose(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        let m = i_mul(&a.weight_action, &b.weight_action);
        self.elements
            .iter()
            .find(|e| e.weight_action == m)
            .expect("closed under products")
            .clone()
    }

    pub fn inverse(&self, a: &GroupElement) -> GroupElement {
        self.elements
            .iter()
            .find(|e| i_mul(&e.weight_action, &a.weight_action) == I_IDENTITY)
            .expect("inverse exists")
            .clone()
    }

    /// Kernel of a nontrivial sign homomorphism.
    pub fn kernel(&self, hom: SignHom) -> Result<Subgroup, Error> {
        let label = match hom {
            SignHom::Identity => return Err(Error::TrivialKernel),
            SignHom::Det => Kernel::We,
            SignHom::Short => Kernel::Ws,
            SignHom::Long => Kernel::Wl,
        };
        let elements = self
            .elements
            .iter()
            .filter(|w| hom.sign(w) == 1)
            .cloned()
            .collect();
        Ok(Subgroup { label, elements })
    }

    pub fn subgroup(&self, kernel: Kernel) -> Subgroup {
        self.kernel(kernel.hom()).expect("nontrivial homomorphism")
    }
}

/// All pairs `(w, wλ)` for `w` in the subgroup, duplicates retained.
pub fn orbit_weight(sub: &Subgroup, lambda: IVec2) -> Vec<(GroupElement, IVec2)> {
    sub.elements
        .iter()
        .map(|w| (w.clone(), w.apply_weight(lambda)))
        .collect()
}

/// Distinct images of λ under the subgroup.
pub fn orbit_weight_set(sub: &Subgroup, lambda: IVec2) -> Vec<IVec2> {
    let mut out: Vec<IVec2> = Vec::new();
    for w in &sub.elements {
        let image = w.apply_weight(lambda);
        if !out.contains(&image) {
            out.push(image);
        }
    }
    out
}

/// `d_λ`: order of the stabilizer of λ ∈ P in the subgroup.
pub fn stab_order_d(sub: &Subgroup, lambda: IVec2) -> usize {
    sub.elements
        .iter()
        .filter(|w| w.apply_weight(lambda) == lambda)
        .count()
}

/// A point of `(1/M) P∨ / Q∨`, stored as integer α∨-numerators over the
/// fixed denominator `M · det C`, reduced modulo that denominator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorusPoint {
    pub num: IVec2,
    pub den: i64,
}

impl TorusPoint {
    pub fn new(num: IVec2, den: i64) -> Self {
        TorusPoint {
            num: [modp(num[0], den), modp(num[1], den)],
            den,
        }
    }

    /// From exact α∨-coordinates; the denominators must divide `den`.
    pub fn from_alpha_vee(x: &QVec2, den: i64) -> Self {
        let scale = |r: Rational| {
            let v = r * Rational::from_integer(den);
            assert!(v.is_integer(), "{r} is not a multiple of 1/{den}");
            v.to_integer()
        };
        TorusPoint::new([scale(x[0]), scale(x[1])], den)
    }

    pub fn alpha_vee(&self) -> QVec2 {
        [
            Rational::new(self.num[0], self.den),
            Rational::new(self.num[1], self.den),
        ]
    }

    pub fn apply(&self, w: &GroupElement) -> TorusPoint {
        TorusPoint::new(w.apply_coroot_int(self.num), self.den)
    }

    /// `M·det C · ⟨λ, x⟩` reduced modulo `M·det C`.
    pub fn phase_numerator(&self, lambda: IVec2) -> i64 {
        modp(lambda[0] * self.num[0] + lambda[1] * self.num[1], self.den)
    }
}

/// `ε(x)`: the number of distinct images of x in `ℝ²/Q∨`.
pub fn orbit_size_torus(sub: &Subgroup, x: &TorusPoint) -> usize {
    let images: HashSet<TorusPoint> = sub.elements.iter().map(|w| x.apply(w)).collect();
    images.len()
}

/// Elements of the subgroup fixing x modulo Q∨.
pub fn torus_stabilizer<'a>(sub: &'a Subgroup, x: &TorusPoint) -> Vec<&'a GroupElement> {
    sub.elements.iter().filter(|w| x.apply(w) == *x).collect()
}

/// Exact test `v ∈ M Q` for v in ω-coordinates: `adj(Cᵀ) v ≡ 0 (mod M det C)`.
pub fn in_scaled_root_lattice(cartan: &IMat2, v: IVec2, m: i64) -> bool {
    let adj = i_adjugate(&i_transpose(cartan));
    let modulus = m * i_det(cartan);
    let u = i_apply(&adj, v);
    u[0] % modulus == 0 && u[1] % modulus == 0
}

/// Canonical key of λ modulo `M Q`.
pub fn weight_class_key(cartan: &IMat2, v: IVec2, m: i64) -> IVec2 {
    let adj = i_adjugate(&i_transpose(cartan));
    let modulus = m * i_det(cartan);
    let u = i_apply(&adj, v);
    [modp(u[0], modulus), modp(u[1], modulus)]
}

/// `h∨_λ`: the number of w in the subgroup with `wλ ≡ λ (mod MQ)`.
pub fn stab_order_h(sub: &Subgroup, cartan: &IMat2, lambda: IVec2, m: i64) -> usize {
    sub.elements
        .iter()
        .filter(|w| {
            let image = w.apply_weight(lambda);
            in_scaled_root_lattice(cartan, [image[0] - lambda[0], image[1] - lambda[1]], m)
        })
        .count()
}

/// Elements of the subgroup fixing λ modulo MQ.
pub fn weight_stabilizer_mod<'a>(
    sub: &'a Subgroup,
    cartan: &IMat2,
    lambda: IVec2,
    m: i64,
) -> Vec<&'a GroupElement> {
    sub.elements
        .iter()
        .filter(|w| {
            let image = w.apply_weight(lambda);
            in_scaled_root_lattice(cartan, [image[0] - lambda[0], image[1] - lambda[1]], m)
        })
        .collect()
}
