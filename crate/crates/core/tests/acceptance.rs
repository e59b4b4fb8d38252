//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Run with `cargo test --test acceptance`. Expected values come from the
//! independent helpers in `common`, never from the code under test.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{cofactor_det, random_unimodular, rational_signature, summand_offsets, to_i64};
use spinslice::cobordism::{certify_frame_spin, reduce_to_middle, verify, SliceCertificate};
use spinslice::corpus;
use spinslice::document::{parse_document, DocumentError};
use spinslice::exactmat::IntMatrix;
use spinslice::framespin::{assemble, SpinError};
use spinslice::oracle::{search_null_cobordant, SearchBudget};
use spinslice::quadform::{
    diagonalize_odd_indefinite, standard_diagonal, standard_symplectic, symplectic_basis,
};
use spinslice::seifert::{validate_seifert, KnotDims};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Independent check of a witness: `det p = ±1` and the leading `half`
/// block of `p X p'` vanishes.
fn witness_holds(x: &IntMatrix, p: &IntMatrix, half: usize) -> bool {
    let (xs, ps) = (to_i64(x), to_i64(p));
    let n = xs.len();
    if ps.len() != n || cofactor_det(&ps).abs() != 1 {
        return false;
    }
    (0..half).all(|i| {
        (0..half).all(|j| {
            let mut acc: i128 = 0;
            for r in 0..n {
                for c in 0..n {
                    acc += ps[i][r] as i128 * xs[r][c] as i128 * ps[j][c] as i128;
                }
            }
            acc == 0
        })
    })
}

fn certificate_holds(cert: &SliceCertificate) -> bool {
    let x = cert.target.block_sum(&cert.stabilizer).unwrap();
    witness_holds(&x, &cert.p, cert.half)
        && witness_holds(
            &cert.stabilizer,
            &cert.stabilizer_witness,
            cert.stabilizer.rows() / 2,
        )
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let all = corpus::all();
    ensure(all.len() >= 12, || {
        format!("corpus has {} inputs", all.len())
    })?;
    let (mut ks, mut ms) = (BTreeSet::new(), BTreeSet::new());
    let (mut empty_mid, mut full_mid) = (false, false);
    for (name, input) in &all {
        let d = input.dims();
        ks.insert(d.k());
        ms.insert(d.m());
        let cert = certify_frame_spin(input).map_err(|e| format!("{name}: {e}"))?;
        verify(&cert).map_err(|v| format!("{name}: verify rejected: {v}"))?;
        ensure(certificate_holds(&cert), || {
            format!("{name}: independent check failed")
        })?;
        if d.k() % 2 == 1 {
            let mid = (d.k() - 1) / 2;
            let size = input.v_ranks()[mid as usize] * input.m_rank(d.n() as i64 - mid as i64);
            if size == 0 {
                empty_mid = true;
            } else {
                full_mid = true;
            }
        }
    }
    for k in [3, 4, 5] {
        ensure(ks.contains(&k), || format!("no input with k = {k}"))?;
    }
    for m in [1, 2, 4] {
        ensure(ms.contains(&m), || format!("no input with m = {m}"))?;
    }
    ensure(empty_mid && full_mid, || {
        "middle block coverage incomplete".into()
    })?;
    for required in [
        "trefoil-torus",
        "figure-eight-s2xs2",
        "artin-spin-2knot",
        "trefoil-superspin-s2",
    ] {
        ensure(corpus::by_name(required).is_some(), || {
            format!("missing {required}")
        })?;
    }
    let superspin = corpus::trefoil_superspin_s2();
    ensure(superspin.m_rank(1) == 0, || {
        "superspin input has ρ_{m/2} ≠ 0".into()
    })?;
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(10), || {
        format!("took {elapsed:.2?}")
    })?;
    Ok(format!(
        "{} inputs certified and verified in {elapsed:.2?}",
        all.len()
    ))
}

fn criterion_2() -> Outcome {
    let mut checked = 0;
    for (name, input) in corpus::all() {
        let d = input.dims();
        if d.k() % 2 == 0 {
            continue;
        }
        let (a, _) = assemble(&input).map_err(|e| format!("{name}: {e}"))?;
        let mid = (d.k() - 1) / 2;
        let offsets = summand_offsets(d.k(), d.n(), input.v_ranks(), input.m_ranks());
        let &(_, off, size) = offsets.iter().find(|s| s.0 == mid).unwrap();
        let lambda = &input.linking()[&mid];
        let tau = input
            .intersection()
            .get(&(d.m() / 2))
            .cloned()
            .unwrap_or_else(|| IntMatrix::zeros(0, 0));
        let e = (d.m() * d.k() + d.m()) / 4;
        let mut expected = lambda.tensor(&tau);
        if e % 2 == 1 {
            expected = expected.neg();
        }
        if size == 0 {
            ensure(expected.is_empty() || expected.is_zero(), || {
                format!("{name}: empty middle")
            })?;
        } else {
            let got = a.block(off, off, size, size);
            ensure(got == expected, || {
                format!("{name}: middle block {got} ≠ {expected}")
            })?;
        }
        checked += 1;
    }
    Ok(format!("{checked} odd-k inputs match ±Λ⊗T entry-for-entry"))
}

fn criterion_3() -> Outcome {
    let mut blocks = 0;
    for (name, input) in corpus::all() {
        let d = input.dims();
        let (a, _) = assemble(&input).map_err(|e| format!("{name}: {e}"))?;
        let offsets = summand_offsets(d.k(), d.n(), input.v_ranks(), input.m_ranks());
        let total: usize = offsets.iter().map(|s| s.2).sum();
        ensure(a.shape() == (total, total), || {
            format!("{name}: shape {:?}", a.shape())
        })?;
        for &(ai, ao, asz) in &offsets {
            for &(ci, co, csz) in &offsets {
                if ai + ci == d.k() - 1 {
                    ensure(asz == csz, || {
                        format!("{name}: dim L_{ai} = {asz}x{csz} is not square")
                    })?;
                } else {
                    ensure(a.block(ao, co, asz, csz).is_zero(), || {
                        format!("{name}: block ({ai},{ci}) is nonzero")
                    })?;
                }
                blocks += 1;
            }
        }
    }
    Ok(format!("{blocks} blocks checked over the corpus"))
}

fn criterion_4() -> Outcome {
    let input = corpus::k5_torus();
    let d = input.dims();
    let (a, layout) = assemble(&input).map_err(|e| e.to_string())?;
    let offsets = summand_offsets(d.k(), d.n(), input.v_ranks(), input.m_ranks());
    ensure(
        offsets.len() == 3 && offsets.iter().all(|s| s.2 > 0),
        || "instance does not have three nonempty blocks".into(),
    )?;
    let (o1, s1) = (offsets[0].1, offsets[0].2);
    let (om, sm) = (offsets[1].1, offsets[1].2);
    let (o3, s3) = (offsets[2].1, offsets[2].2);
    let middle = a.block(om, om, sm, sm);
    let c = a.block(o1, o3, s1, s3);
    let b = a.block(o3, o1, s3, s1);
    let zeros = |r, c| IntMatrix::zeros(r, c);
    let top = zeros(s1, s1).hconcat_free(&c);
    let bottom = b.hconcat_free(&zeros(s3, s3));
    let outer = top.vconcat_free(&bottom);
    let expected = middle.block_sum(&outer).unwrap();
    let (_, reduced) = reduce_to_middle(&a, &layout).map_err(|e| e.to_string())?;
    ensure(reduced == expected, || {
        format!("J A J' = {reduced}, expected {expected}")
    })?;
    Ok(format!(
        "J A J' = L_mid ⊞ [[0, C], [B, 0]] with L_mid {sm}x{sm}"
    ))
}

/// Row and column concatenation without library support, for building
/// expected matrices.
trait Concat {
    fn hconcat_free(&self, other: &IntMatrix) -> IntMatrix;
    fn vconcat_free(&self, other: &IntMatrix) -> IntMatrix;
}

impl Concat for IntMatrix {
    fn hconcat_free(&self, other: &IntMatrix) -> IntMatrix {
        let rows: Vec<Vec<_>> = (0..self.rows())
            .map(|i| self.row(i).iter().chain(other.row(i)).cloned().collect())
            .collect();
        IntMatrix::from_big_rows(rows).unwrap()
    }

    fn vconcat_free(&self, other: &IntMatrix) -> IntMatrix {
        let mut rows = self.to_rows();
        rows.extend(other.to_rows());
        IntMatrix::from_big_rows(rows).unwrap()
    }
}

fn criterion_5() -> Outcome {
    let all = corpus::all();
    for (name, input) in &all {
        let (a, _) = assemble(input).map_err(|e| format!("{name}: {e}"))?;
        let eps: i64 = if input.dims().n() % 2 == 0 { 1 } else { -1 };
        let sym = a.add(&a.transpose().scale(eps)).unwrap();
        let det = cofactor_det(&to_i64(&sym));
        ensure(det.abs() == 1, || format!("{name}: det = {det}"))?;
    }
    Ok(format!("{} assembled matrices are ε-unimodular", all.len()))
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_f0e5);
    for trial in 0..50 {
        let s = rng.gen_range(1..=3);
        let (_, u) = random_unimodular(&mut rng, 2 * s, 4 * s);
        let t = standard_symplectic(s).congruence(&u).unwrap();
        let w = symplectic_basis(&t).map_err(|e| format!("skew trial {trial}: {e}"))?;
        let q = w.q();
        ensure(cofactor_det(&to_i64(q)).abs() == 1, || {
            format!("skew trial {trial}: Q not unimodular")
        })?;
        ensure(t.congruence(q).unwrap() == standard_symplectic(s), || {
            format!("skew trial {trial}: Q T Q' is not standard")
        })?;
    }
    for trial in 0..50 {
        let rank = rng.gen_range(2..=6);
        let u = rng.gen_range(1..rank);
        let v = rank - u;
        let (_, w_inv) = random_unimodular(&mut rng, rank, 2 * rank);
        let d = standard_diagonal(u, v);
        let t = d.congruence(&w_inv).unwrap();
        let sig = rational_signature(&t);
        ensure(sig == u as i64 - v as i64, || {
            format!("odd trial {trial}: oracle signature {sig}")
        })?;
        let w = diagonalize_odd_indefinite(&t).map_err(|e| format!("odd trial {trial}: {e}"))?;
        let q = w.q();
        ensure(cofactor_det(&to_i64(q)).abs() == 1, || {
            format!("odd trial {trial}: Q not unimodular")
        })?;
        let nf = t.congruence(q).unwrap();
        ensure(nf == standard_diagonal(u, v), || {
            format!("odd trial {trial}: Q T Q' = {nf}, expected diag(1^{u}, -1^{v})")
        })?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(30), || {
        format!("took {elapsed:.2?}")
    })?;
    Ok(format!(
        "50 skew + 50 odd indefinite forms reduced in {elapsed:.2?}"
    ))
}

fn criterion_7() -> Outcome {
    let budget = SearchBudget::default();
    let mut checked = 0;
    for (name, input) in corpus::all() {
        let cert = certify_frame_spin(&input).map_err(|e| format!("{name}: {e}"))?;
        if cert.total_size() > budget.max_size() {
            continue;
        }
        let x = cert.target.block_sum(&cert.stabilizer).unwrap();
        let p = search_null_cobordant(&x, &budget)
            .map_err(|e| format!("{name}: {e}"))?
            .ok_or_else(|| format!("{name}: oracle found no witness"))?;
        ensure(witness_holds(&x, &p, x.rows() / 2), || {
            format!("{name}: oracle witness invalid")
        })?;
        checked += 1;
    }
    let definite =
        search_null_cobordant(&IntMatrix::identity(2), &budget).map_err(|e| e.to_string())?;
    ensure(definite.is_none(), || {
        "oracle claims a witness for diag(1,1)".into()
    })?;
    Ok(format!(
        "oracle agrees on {checked} targets; diag(1,1) unknown at budget"
    ))
}

fn criterion_8() -> Outcome {
    let (surface, manifold) = corpus::trefoil_e8_manifold();
    ensure(
        corpus::try_spin(surface, manifold) == Err(SpinError::NonzeroSignature(8)),
        || "E8 manifold not rejected with NonzeroSignature".into(),
    )?;
    let (surface, manifold) = corpus::trefoil_e8_manifold();
    let text = spinslice::document::print_spin_parts(
        KnotDims::new(surface.k, manifold.m).unwrap(),
        &surface.ranks,
        &manifold.ranks,
        &surface.linking,
        &manifold.forms,
    );
    ensure(
        parse_document(&text) == Err(DocumentError::Spin(SpinError::NonzeroSignature(8))),
        || "E8 document not rejected with NonzeroSignature".into(),
    )?;

    let cert = certify_frame_spin(&corpus::trefoil_torus()).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(0x7a3e_2d01);
    let n = cert.p.rows();
    let (mut accepted, mut genuine) = (Vec::new(), 0);
    for _ in 0..100 {
        let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
        let delta = [-3i64, -2, -1, 1, 2, 3][rng.gen_range(0..6)];
        let mut t = cert.clone();
        let x = t.p.get(i, j) + delta;
        t.p.set(i, j, x);
        if verify(&t).is_ok() {
            if certificate_holds(&t) {
                genuine += 1;
            }
            accepted.push(format!("p[{i}][{j}]{delta:+}"));
        }
    }
    ensure(accepted.is_empty(), || {
        format!(
            "{} of 100 mutations still verify ({} of them are valid witnesses by the independent check), e.g. {}",
            accepted.len(),
            genuine,
            accepted.iter().take(3).cloned().collect::<Vec<_>>().join(", ")
        )
    })?;
    Ok("NonzeroSignature raised; 100/100 mutations rejected".into())
}

fn criterion_9() -> Outcome {
    let e8 = validate_seifert(corpus::e8_seifert(), 2).map_err(|e| e.to_string())?;
    let oracle = rational_signature(&e8.epsilon_symmetrization()).rem_euclid(16);
    let got = e8.levine_signature_residue().map_err(|e| e.to_string())?;
    ensure(oracle == 8 && got as i64 == oracle, || {
        format!("E8 residue {got}, oracle {oracle}")
    })?;

    let pairs = [corpus::e8_seifert(), corpus::k5_middle()];
    let mut all = IntMatrix::empty();
    for a in &pairs {
        let pair = a.block_sum(&a.neg()).unwrap();
        all = all.block_sum(&pair).unwrap();
        let s = validate_seifert(pair, 2).map_err(|e| e.to_string())?;
        let oracle = rational_signature(&s.epsilon_symmetrization()).rem_euclid(16);
        let got = s.levine_signature_residue().map_err(|e| e.to_string())?;
        ensure(oracle == 0 && got == 0, || {
            format!("pair residue {got}, oracle {oracle}")
        })?;
    }
    let s = validate_seifert(all, 4).map_err(|e| e.to_string())?;
    ensure(s.levine_signature_residue() == Ok(0), || {
        "combined pair residue nonzero".into()
    })?;
    Ok("residue 8 for E8, 0 for A ⊞ -A inputs".into())
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("corpus certification", criterion_1),
        ("middle-block identity", criterion_2),
        ("vanishing rule", criterion_3),
        ("middle reduction", criterion_4),
        ("ε-unimodularity", criterion_5),
        ("quadform correctness", criterion_6),
        ("oracle agreement", criterion_7),
        ("negative controls", criterion_8),
        ("signature residue", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match std::panic::catch_unwind(check) {
            Ok(Ok(detail)) => println!("PASS  {} {name}: {detail}", i + 1),
            Ok(Err(why)) => {
                failed += 1;
                println!("FAIL  {} {name}: {why}", i + 1);
            }
            Err(_) => {
                failed += 1;
                println!("FAIL  {} {name}: panicked", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
