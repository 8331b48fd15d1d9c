//! The self-test suite behind the `selftest` command.
//!
//! Each check mirrors one acceptance criterion at a configurable scale. Sample
//! loops are spread over the available cores.

use std::thread;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use singular_forms_core::{
    classify, coefficient_span_dim, is_syzygy, orbit_dim, sample_component, stabilizer_lie_dim, syzygy_space,
    trefl_basis, verify_witness, Axis, ComponentTag, FieldSpec, Form, FormMatrix, FormVector, LinForm,
};

/// Sample counts per check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Scale {
    /// Classifier samples per (tag, n, field).
    pub samples: usize,
    /// Random tuples per (r, n) in the syzygy check.
    pub syzygy_tuples: usize,
    pub adjugate: usize,
    pub rank_one: usize,
    pub span_bound: usize,
}

impl Scale {
    pub const FULL: Scale = Scale {
        samples: 1000,
        syzygy_tuples: 100,
        adjugate: 200,
        rank_one: 200,
        span_bound: 10000,
    };

    pub const QUICK: Scale = Scale {
        samples: 10,
        syzygy_tuples: 5,
        adjugate: 10,
        rank_one: 10,
        span_bound: 100,
    };
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl Outcome {
    fn new(id: u8, name: &'static str, failures: &[String], checked: usize) -> Self {
        let detail = match failures.first() {
            None => format!("{checked} checks"),
            Some(first) => format!("{} of {checked} checks failed; first: {first}", failures.len()),
        };
        Outcome {
            id,
            name,
            passed: failures.is_empty(),
            detail,
        }
    }
}

const FIELDS: [FieldSpec; 2] = [FieldSpec::Rationals, FieldSpec::Prime(32003)];

/// Runs `f` on every index in `0..count`, in parallel, keeping the order.
pub(crate) fn par_map<T: Send>(count: usize, f: impl Fn(usize) -> T + Sync) -> Vec<T> {
    let threads = thread::available_parallelism().map_or(1, |n| n.get()).min(count.max(1));
    let chunk = count.div_ceil(threads.max(1)).max(1);
    let f = &f;
    thread::scope(|s| {
        let handles: Vec<_> = (0..count)
            .step_by(chunk)
            .map(|start| s.spawn(move || (start..(start + chunk).min(count)).map(f).collect::<Vec<T>>()))
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("worker panicked"))
            .collect()
    })
}

fn sample_cells() -> Vec<(ComponentTag, usize, FieldSpec)> {
    let mut cells = Vec::new();
    for tag in ComponentTag::ALL {
        for n in 2..=5 {
            for field in FIELDS {
                cells.push((tag, n, field));
            }
        }
    }
    cells
}

fn sample_seed(seed: u64, index: usize) -> u64 {
    seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(index as u64)
}

/// Every sample of every component gets a verified witness.
pub fn witnesses(scale: Scale, seed: u64) -> Outcome {
    let cells = sample_cells();
    let total = cells.len() * scale.samples;
    let failures: Vec<String> = par_map(total, |k| {
        let (tag, n, field) = cells[k / scale.samples.max(1)];
        let s = sample_seed(seed, k);
        let x = sample_component(tag, n, field, s).map_err(|e| e.to_string())?;
        match classify(&x) {
            Ok(r) => match r.witness {
                Some(w) if verify_witness(&x, &w) => Ok(()),
                _ => Err(format!("{tag} n={n} {field} seed={s}: no verified witness")),
            },
            Err(e) => Err(format!("{tag} n={n} {field} seed={s}: {e}")),
        }
    })
    .into_iter()
    .filter_map(Result::err)
    .collect();
    Outcome::new(1, "classifier witnesses", &failures, total)
}

fn random_tuple(field: FieldSpec, r: usize, n: usize, rng: &mut ChaCha8Rng) -> Vec<LinForm> {
    use rand::Rng;
    let span = rng.random_range(0..=r.min(n));
    let basis: Vec<LinForm> = (0..span)
        .map(|_| LinForm::new(field, (0..n).map(|_| field.random(rng)).collect()))
        .collect();
    (0..r)
        .map(|_| {
            basis
                .iter()
                .fold(LinForm::zero(field, n), |acc, b| &acc + &b.scale(&field.random(rng)))
        })
        .collect()
}

/// Syzygy dimensions against `(r - c) n + C(c, 2)`, plus the two explicit bases.
pub fn syzygies(scale: Scale, seed: u64) -> Outcome {
    let field = FieldSpec::Rationals;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    let mut checked = 0;
    for r in 1..=5 {
        for n in 1..=6 {
            for _ in 0..scale.syzygy_tuples {
                let ells = random_tuple(field, r, n, &mut rng);
                let s = syzygy_space(&ells).expect("nonempty tuple");
                let c = coefficient_span_dim(&ells);
                let expected = (r - c) * n + c * c.saturating_sub(1) / 2;
                checked += 1;
                if s.dim() != expected || !s.basis.iter().all(|t| is_syzygy(&ells, t)) {
                    failures.push(format!("r={r} n={n} c={c}: dim {} expected {expected}", s.dim()));
                }
            }
        }
    }
    for n in 3..=6 {
        let x = |i| LinForm::var(field, n, i);
        let independent = [x(0), x(1), x(2)];
        let dependent = [x(0), x(1), &x(0) + &x(1)];
        for (ells, expected) in [(independent, 3), (dependent, n + 1)] {
            checked += 1;
            let got = trefl_basis(&ells).map(|b| b.len());
            if got != Ok(expected) {
                failures.push(format!("explicit basis n={n}: {got:?}, expected {expected}"));
            }
        }
    }
    Outcome::new(2, "syzygy dimensions", &failures, checked)
}

/// Orbit dimensions against the closed forms `6n+1, 5n+3, 3n+7, 6n+3`.
pub fn orbit_dimensions() -> Outcome {
    let closed = |tag: ComponentTag, n: usize| match tag {
        ComponentTag::ZeroRow => 6 * n + 1,
        ComponentTag::ZeroSquare => 5 * n + 3,
        ComponentTag::Antisymmetric => 3 * n + 7,
        ComponentTag::ZeroColumn => 6 * n + 3,
    };
    let mut failures = Vec::new();
    let mut checked = 0;
    for n in 2..=8 {
        for tag in ComponentTag::ALL {
            checked += 1;
            let got = orbit_dim(tag, n).expect("n >= 2");
            if got != closed(tag, n) {
                failures.push(format!("{tag} n={n}: {got}, closed form {}", closed(tag, n)));
            }
        }
    }
    for tag in ComponentTag::ALL {
        checked += 1;
        let got = orbit_dim(tag, 2).expect("n >= 2");
        if got != 13 {
            failures.push(format!("{tag} n=2: {got}, expected 13"));
        }
    }
    Outcome::new(3, "orbit dimensions", &failures, checked)
}

/// Stabilizer dimensions 16, 14, 10, 16 over several fields.
pub fn stabilizers() -> Outcome {
    let expected = |tag| match tag {
        ComponentTag::ZeroRow | ComponentTag::ZeroColumn => 16,
        ComponentTag::ZeroSquare => 14,
        ComponentTag::Antisymmetric => 10,
    };
    let mut failures = Vec::new();
    let mut checked = 0;
    let fields = [
        FieldSpec::Rationals,
        FieldSpec::Prime(5),
        FieldSpec::Prime(101),
        FieldSpec::Prime(32003),
    ];
    for tag in ComponentTag::ALL {
        for n in 2..=5 {
            for field in fields {
                checked += 1;
                let got = stabilizer_lie_dim(tag, n, field).expect("n >= 2");
                if got != expected(tag) {
                    failures.push(format!("{tag} n={n} {field}: {got}"));
                }
            }
        }
    }
    Outcome::new(4, "stabilizer dimensions", &failures, checked)
}

/// `X adj(X) = det(X) Id` on random matrices.
pub fn adjugates(scale: Scale, seed: u64) -> Outcome {
    let total = FIELDS.len() * scale.adjugate;
    let failures: Vec<String> = par_map(total, |k| {
        let field = FIELDS[k % FIELDS.len()];
        let mut rng = ChaCha8Rng::seed_from_u64(sample_seed(seed, k));
        let x = FormMatrix::random(field, 4, 1, 3, 3, &mut rng);
        let expected = FormMatrix::scalar_identity(&x.determinant(), 3);
        (x.mul(&x.adjugate()) != expected).then(|| format!("{field} sample {k}"))
    })
    .into_iter()
    .flatten()
    .collect();
    Outcome::new(5, "adjugate identity", &failures, total)
}

/// Rank-one factorization of constructed products `u v^t`.
pub fn rank_one(scale: Scale, seed: u64) -> Outcome {
    let degrees = [(0, 0), (0, 1), (1, 0), (0, 2), (1, 1), (2, 0)];
    let total = scale.rank_one;
    let failures: Vec<String> = par_map(total, |k| {
        let field = FIELDS[k % FIELDS.len()];
        let (du, dv) = degrees[k % degrees.len()];
        let mut rng = ChaCha8Rng::seed_from_u64(sample_seed(seed, k));
        let vec = |d: u32, len: usize, rng: &mut ChaCha8Rng| {
            FormVector::new(field, 3, d, (0..len).map(|_| Form::random(field, 3, d, rng)).collect()).expect("degree")
        };
        let u = vec(du, 3, &mut rng);
        let v = vec(dv, 3, &mut rng);
        if u.is_zero() || v.is_zero() {
            return None;
        }
        let x = FormMatrix::outer(&u, &v);
        let ok = match x.rank1_factor() {
            Ok((u2, v2)) => {
                FormMatrix::outer(&u2, &v2) == x
                    && u2.degree() + v2.degree() == x.degree()
                    && u2.leading_coefficient().is_some_and(|c| c.is_one())
            }
            Err(_) => false,
        };
        (!ok).then(|| format!("{field} degrees ({du}, {dv}) sample {k}"))
    })
    .into_iter()
    .flatten()
    .collect();
    Outcome::new(6, "rank-one factorization", &failures, total)
}

/// Matrices whose entries span at least seven dimensions are not singular.
pub fn span_bound(scale: Scale, seed: u64) -> Outcome {
    let field = FieldSpec::Prime(32003);
    let total = scale.span_bound;
    let failures: Vec<String> = par_map(total, |k| {
        use rand::Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(sample_seed(seed, k));
        let span = rng.random_range(7..=9);
        let basis: Vec<Form> = (0..span).map(|_| Form::random(field, 9, 1, &mut rng)).collect();
        let x = FormMatrix::from_fn(field, 9, 1, 3, 3, |_, _| {
            basis.iter().fold(Form::zero(field, 9, 1), |acc, b| {
                &acc + &b.scale(&field.random(&mut rng))
            })
        });
        if coefficient_span_dim(&x.entry_linforms().expect("linear")) < 7 {
            return None;
        }
        x.determinant().is_zero().then(|| format!("sample {k}"))
    })
    .into_iter()
    .flatten()
    .collect();
    Outcome::new(7, "span bound", &failures, total)
}

/// Coefficient-matrix rank agrees with constant (co)kernel vectors.
pub fn membership(scale: Scale, seed: u64) -> Outcome {
    let cells = sample_cells();
    let total = cells.len() * scale.samples;
    let failures: Vec<String> = par_map(total, |k| {
        let (tag, n, field) = cells[k / scale.samples.max(1)];
        let x = sample_component(tag, n, field, sample_seed(seed, k)).ok()?;
        let row_rank = x.coefficient_matrix(Axis::Rows).ok()?.rank();
        let col_rank = x.coefficient_matrix(Axis::Cols).ok()?.rank();
        let cokernel = !x.transpose().kernel_at_degree(0).is_empty();
        let kernel = !x.kernel_at_degree(0).is_empty();
        ((row_rank <= 2) != cokernel || (col_rank <= 2) != kernel).then(|| format!("{tag} n={n} {field} sample {k}"))
    })
    .into_iter()
    .flatten()
    .collect();
    Outcome::new(8, "row/column membership", &failures, total)
}

pub fn run_all(scale: Scale, seed: u64) -> Vec<Outcome> {
    vec![
        witnesses(scale, seed),
        syzygies(scale, seed),
        orbit_dimensions(),
        stabilizers(),
        adjugates(scale, seed),
        rank_one(scale, seed),
        span_bound(scale, seed),
        membership(scale, seed),
    ]
}
