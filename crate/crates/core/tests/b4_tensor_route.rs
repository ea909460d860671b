//! B4:[1,0,0,1] fails the per-vector level-2 test at μ = λ4. The module
//! route (contravariant form) and a tensor route (the irreducible summand
//! of vector ⊗ spin, with ε = ε1 ⊗ ε2) must agree on it.

use lieosc::chevmod::{build_chevalley, build_module, IrrepModule};
use lieosc::linalg::{is_zero_vec, q, Echelon, Mat, Q};
use lieosc::osc::c2_mu_filter;
use lieosc::{LieType, RootDatum, Weight};
use num_traits::Zero;

/// Offsets of each weight space in a flat basis.
fn offsets(m: &IrrepModule) -> (Vec<usize>, usize) {
    let mut offs = Vec::with_capacity(m.weights().len());
    let mut total = 0;
    for w in 0..m.weights().len() {
        offs.push(total);
        total += m.dim_of(w);
    }
    (offs, total)
}

fn dense_root_operator(m: &IrrepModule, root: usize) -> Mat {
    let (offs, n) = offsets(m);
    let mut a = Mat::zeros(n, n);
    for w in 0..m.weights().len() {
        if let (Some(op), Some(t)) = (m.operator(root, w), m.target(root, w)) {
            for r in 0..op.rows {
                for c in 0..op.cols {
                    a[(offs[t] + r, offs[w] + c)] = op[(r, c)].clone();
                }
            }
        }
    }
    a
}

fn dense_twist(m: &IrrepModule) -> Mat {
    let omega = m.twist_matrices().unwrap();
    let (offs, n) = offsets(m);
    let mut a = Mat::zeros(n, n);
    for (w, op) in omega.iter().enumerate() {
        let t = m.weight_index(&m.weights()[w].neg()).unwrap();
        for r in 0..op.rows {
            for c in 0..op.cols {
                a[(offs[t] + r, offs[w] + c)] = op[(r, c)].clone();
            }
        }
    }
    a
}

fn kron(a: &Mat, b: &Mat) -> Mat {
    let mut k = Mat::zeros(a.rows * b.rows, a.cols * b.cols);
    for i in 0..a.rows {
        for j in 0..a.cols {
            if a[(i, j)].is_zero() {
                continue;
            }
            for r in 0..b.rows {
                for c in 0..b.cols {
                    k[(i * b.rows + r, j * b.cols + c)] = &a[(i, j)] * &b[(r, c)];
                }
            }
        }
    }
    k
}

fn combine(coeffs: &[Q], basis: &[Vec<Q>], n: usize) -> Vec<Q> {
    let mut v = vec![q(0); n];
    for (x, b) in coeffs.iter().zip(basis) {
        for (t, y) in v.iter_mut().zip(b) {
            if !y.is_zero() {
                *t += x * y;
            }
        }
    }
    v
}

/// Span of `seeds` under `levels` applications of the root operators.
fn span_levels(ops: &[Mat], seeds: &[Vec<Q>], levels: usize, n: usize) -> Echelon {
    let mut s = Echelon::new(n);
    let mut frontier: Vec<Vec<Q>> = seeds.iter().filter(|v| s.insert(v)).cloned().collect();
    for _ in 0..levels {
        let mut next = Vec::new();
        for x in &frontier {
            for op in ops {
                let u = op.mul_vec(x);
                if !is_zero_vec(&u) && s.insert(&u) {
                    next.push(u);
                }
            }
        }
        frontier = next;
    }
    s
}

fn same_space(a: &[Vec<Q>], b: &[Vec<Q>], k: usize) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut e = Echelon::new(k);
    for v in a {
        e.insert(v);
    }
    b.iter().all(|v| e.contains(v))
}

fn intersect(a: &[Vec<Q>], b: &[Vec<Q>], k: usize) -> Vec<Vec<Q>> {
    let mut cols = a.to_vec();
    cols.extend(b.iter().map(|v| v.iter().map(|x| -x).collect::<Vec<_>>()));
    let mut e = Echelon::new(k);
    for s in Mat::from_cols(&cols, k).nullspace() {
        e.insert(&combine(&s[..a.len()], a, k));
    }
    e.basis().to_vec()
}

#[test]
fn tensor_route_agrees_with_module_route() {
    let d = RootDatum::new(LieType::b(4));
    let cb = build_chevalley(&d);
    let vector = build_module(&cb, &Weight(vec![1, 0, 0, 0]), 100).unwrap();
    let spin = build_module(&cb, &Weight(vec![0, 0, 0, 1]), 100).unwrap();
    let ((off1, n1), (off2, n2)) = (offsets(&vector), offsets(&spin));
    let n = n1 * n2;
    let ops: Vec<Mat> = (0..d.all_roots().len())
        .map(|r| {
            kron(&dense_root_operator(&vector, r), &Mat::identity(n2))
                .add(&kron(&Mat::identity(n1), &dense_root_operator(&spin, r)))
        })
        .collect();
    let twist = kron(&dense_twist(&vector), &dense_twist(&spin));

    let mut weight_of = vec![Weight(vec![]); n];
    for w1 in 0..vector.weights().len() {
        for a in 0..vector.dim_of(w1) {
            for w2 in 0..spin.weights().len() {
                for b in 0..spin.dim_of(w2) {
                    weight_of[(off1[w1] + a) * n2 + off2[w2] + b] = vector.weights()[w1].add(&spin.weights()[w2]);
                }
            }
        }
    }

    // Highest weight vector of the tensor product and the summand it generates.
    let mut top = vec![q(0); n];
    top[0] = q(1);
    let summand = span_levels(&ops, &[top], 64, n);
    assert_eq!(summand.len(), 128);

    // The μ = λ4 weight space inside the summand.
    let mu = Weight(vec![0, 0, 0, 1]);
    let rows = summand.basis().to_vec();
    let outside: Vec<usize> = (0..n).filter(|&i| weight_of[i] != mu).collect();
    let cols: Vec<Vec<Q>> = rows.iter().map(|r| outside.iter().map(|&i| r[i].clone()).collect()).collect();
    let space: Vec<Vec<Q>> =
        Mat::from_cols(&cols, outside.len()).nullspace().iter().map(|c| combine(c, &rows, n)).collect();
    let k = space.len();

    // Lines cut out by intersections of root-operator kernels on that space.
    let mut pieces: Vec<Vec<Vec<Q>>> = Vec::new();
    for op in &ops {
        let images: Vec<Vec<Q>> = space.iter().map(|v| op.mul_vec(v)).collect();
        let kernel = Mat::from_cols(&images, n).nullspace();
        if !kernel.is_empty() && kernel.len() < k && !pieces.iter().any(|p| same_space(p, &kernel, k)) {
            pieces.push(kernel);
        }
    }
    let base = pieces.clone();
    let mut frontier = pieces.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for a in &frontier {
            for b in &base {
                let c = intersect(a, b, k);
                if !c.is_empty() && !pieces.iter().any(|p| same_space(p, &c, k)) {
                    pieces.push(c.clone());
                    next.push(c);
                }
            }
        }
        frontier = next;
    }
    let spans: Vec<usize> = pieces
        .iter()
        .filter(|p| p.len() == 1)
        .map(|line| {
            let v = combine(&line[0], &space, n);
            let ev = twist.mul_vec(&v);
            span_levels(&ops, &[v, ev], 2, n).len()
        })
        .collect();
    let tensor_min = *spans.iter().min().expect("kernel lines exist");
    assert!(tensor_min < 128, "tensor route: every line spans, {spans:?}");

    let module = build_module(&cb, &Weight(vec![1, 0, 0, 1]), 1000).unwrap();
    let verdict = c2_mu_filter(&module, &mu).unwrap();
    assert!(!verdict.passed, "module route passes at λ4");
    assert_eq!(tensor_min, 122);
}
