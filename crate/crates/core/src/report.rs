//! Machine-readable export of the exact structure-constant artifact and the
//! named verification suites driven by the CLI.
//!
//! Rationals are serialized as decimal strings (never floats) so exported
//! data is bit-exact across toolchains, and every document carries the
//! convention version tag plus a content digest.

use std::time::{Duration, Instant};

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::albert::{diag_tables, gen_slot_action, slot_block, DiagClass, MatrixType, TypeOps};
use crate::algebra::{cayley_dickson_unit_product, unit_product, AlgebraKind, TensorElement, DIM};
use crate::e8::{
    basis_names, killing_form, off_index, verify_jacobi, verify_killing_invariance, AlgebraPair,
    KillingMatrix, OffType, StructureConstants, CONVENTION_VERSION, DIAG_COUNT, E8_DIM, OFF_COUNT,
};
use crate::operator::FactorOp;
use crate::scalar::{s, Scalar};

// ---------------------------------------------------------------------------
// Export schema.

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct SpecJson {
    pub left: String,
    pub right: String,
    pub convention: String,
    pub off_count: usize,
    pub diag_count: usize,
    pub total: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct TermJson {
    pub k: usize,
    pub num: String,
    pub den: String,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct BracketRow {
    pub i: usize,
    pub j: usize,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct KillingEntry {
    pub i: usize,
    pub j: usize,
    pub num: String,
    pub den: String,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct KillingJson {
    pub plus: usize,
    pub minus: usize,
    pub zero: usize,
    pub index: i64,
    pub entries: Vec<KillingEntry>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct TableExport {
    pub spec: SpecJson,
    pub basis: Vec<String>,
    pub brackets: Vec<BracketRow>,
    pub killing: KillingJson,
    pub digest: String,
}

fn scalar_strings(x: &Scalar) -> (String, String) {
    (x.numer().to_string(), x.denom().to_string())
}

/// Builds the full export document, including the antisymmetric mirror rows
/// and the content digest over everything but the digest field itself.
pub fn build_export(sc: &StructureConstants, k: &KillingMatrix) -> TableExport {
    let pair = sc.pair;
    let spec = SpecJson {
        left: pair.left.name().to_string(),
        right: pair.right.name().to_string(),
        convention: CONVENTION_VERSION.to_string(),
        off_count: OFF_COUNT,
        diag_count: DIAG_COUNT,
        total: E8_DIM,
    };
    let mut brackets = Vec::new();
    for i in 0..E8_DIM {
        for j in 0..E8_DIM {
            if i == j {
                continue;
            }
            let row = sc.bracket(i, j);
            if row.is_empty() {
                continue;
            }
            let terms = row
                .iter()
                .map(|(k, c)| {
                    let (num, den) = scalar_strings(c);
                    TermJson { k: *k, num, den }
                })
                .collect();
            brackets.push(BracketRow { i, j, terms });
        }
    }
    let (plus, minus, zero) = k.signature();
    let mut entries = Vec::new();
    for i in 0..E8_DIM {
        for j in i..E8_DIM {
            let v = k.m.at(i, j);
            if !v.is_zero() {
                let (num, den) = scalar_strings(v);
                entries.push(KillingEntry { i, j, num, den });
            }
        }
    }
    let mut doc = TableExport {
        spec,
        basis: basis_names(pair),
        brackets,
        killing: KillingJson {
            plus,
            minus,
            zero,
            index: k.index(),
            entries,
        },
        digest: String::new(),
    };
    doc.digest = compute_digest(&doc);
    doc
}

/// Hex SHA-256 of the canonical JSON serialization with an empty digest
/// field.
pub fn compute_digest(doc: &TableExport) -> String {
    let mut blank = doc.clone();
    blank.digest = String::new();
    let bytes = serde_json::to_vec(&blank).expect("serialization cannot fail");
    let mut h = Sha256::new();
    h.update(&bytes);
    hex_string(&h.finalize())
}

fn hex_string(bytes: &[u8]) -> String {
    let mut out = String::with_capacity(bytes.len() * 2);
    for b in bytes {
        out.push_str(&format!("{:02x}", b));
    }
    out
}

pub fn to_json(doc: &TableExport) -> String {
    let mut out = serde_json::to_string_pretty(doc).expect("serialization cannot fail");
    out.push('\n');
    out
}

pub fn from_json(text: &str) -> Result<TableExport, serde_json::Error> {
    serde_json::from_str(text)
}

/// True iff the stored digest matches the document contents.
pub fn check_digest(doc: &TableExport) -> bool {
    doc.digest == compute_digest(doc)
}

/// CSV flattening: metadata as `#` comment lines, then one record per
/// bracket term with the same fields as the JSON schema.
pub fn to_csv(doc: &TableExport) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "# left={} right={} convention={} digest={}\n",
        doc.spec.left, doc.spec.right, doc.spec.convention, doc.digest
    ));
    out.push_str(&format!(
        "# off_count={} diag_count={} total={} killing_signature={}+,{}-,{}0 killing_index={}\n",
        doc.spec.off_count,
        doc.spec.diag_count,
        doc.spec.total,
        doc.killing.plus,
        doc.killing.minus,
        doc.killing.zero,
        doc.killing.index
    ));
    out.push_str("i,j,k,num,den\n");
    for row in &doc.brackets {
        for t in &row.terms {
            out.push_str(&format!("{},{},{},{},{}\n", row.i, row.j, t.k, t.num, t.den));
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Verification suites.

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub attempted: u64,
    pub passed: u64,
    pub first_failure: Option<String>,
    #[serde(serialize_with = "ser_duration")]
    pub elapsed: Duration,
}

fn ser_duration<S: serde::Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

impl VerificationReport {
    pub fn ok(&self) -> bool {
        self.passed == self.attempted && self.first_failure.is_none()
    }

    pub fn line(&self) -> String {
        format!(
            "[{}] {}: {}/{} checks in {:.2?}{}",
            if self.ok() { "PASS" } else { "FAIL" },
            self.suite,
            self.passed,
            self.attempted,
            self.elapsed,
            match &self.first_failure {
                Some(f) => format!(" (first failure: {})", f),
                None => String::new(),
            }
        )
    }
}

struct Tally {
    suite: &'static str,
    attempted: u64,
    passed: u64,
    first_failure: Option<String>,
    start: Instant,
}

impl Tally {
    fn new(suite: &'static str) -> Self {
        Tally {
            suite,
            attempted: 0,
            passed: 0,
            first_failure: None,
            start: Instant::now(),
        }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.attempted += 1;
        if ok {
            self.passed += 1;
        } else if self.first_failure.is_none() {
            self.first_failure = Some(describe());
        }
    }

    fn finish(self) -> VerificationReport {
        VerificationReport {
            suite: self.suite.to_string(),
            attempted: self.attempted,
            passed: self.passed,
            first_failure: self.first_failure,
            elapsed: self.start.elapsed(),
        }
    }
}

fn pair_kinds(pair: AlgebraPair) -> Vec<AlgebraKind> {
    let mut out = vec![pair.left];
    if pair.right != pair.left {
        out.push(pair.right);
    }
    out
}

/// Multiplication tables against the Cayley-Dickson doubling oracle, plus
/// the composition (nesting) identities, for each factor algebra in play.
pub fn suite_tables(pair: AlgebraPair) -> VerificationReport {
    let mut t = Tally::new("tables");
    for kind in pair_kinds(pair) {
        for a in 0..DIM {
            for b in 0..DIM {
                let (sign, idx) = unit_product(kind, a, b);
                let mut expect = vec![0i64; DIM];
                expect[idx] = sign as i64;
                t.check(cayley_dickson_unit_product(kind, a, b) == expect, || {
                    format!("{} table: e{} e{}", kind.name(), a, b)
                });
            }
        }
        let l: Vec<FactorOp> = (0..DIM).map(|u| FactorOp::left_mult_unit(kind, u)).collect();
        // p o (p o q) = p^2 q and (p o q) o (q o r) = q^2 (p o r), exhaustively.
        for p in 1..DIM {
            let p2 = s(crate::algebra::unit_square(kind, p) as i64);
            for q in 1..DIM {
                t.check(
                    l[p].compose(&l[p].compose(&l[q])) == l[q].scale(&p2),
                    || format!("{}: p o (p o q), p=e{} q=e{}", kind.name(), p, q),
                );
                let q2 = s(crate::algebra::unit_square(kind, q) as i64);
                for r in 1..DIM {
                    t.check(
                        l[p].compose(&l[q]).compose(&l[q].compose(&l[r]))
                            == l[p].compose(&l[r]).scale(&q2),
                        || {
                            format!(
                                "{}: (p o q) o (q o r), p=e{} q=e{} r=e{}",
                                kind.name(),
                                p,
                                q,
                                r
                            )
                        },
                    );
                }
                // q o p = -p o q for distinct imaginaries.
                if p != q {
                    t.check(
                        l[q].compose(&l[p]) == l[p].compose(&l[q]).scale(&s(-1)),
                        || format!("{}: anticommutation e{} e{}", kind.name(), p, q),
                    );
                }
            }
        }
    }
    t.finish()
}

/// The XYZ rule over all ordered label pairs: the bracket of consecutive
/// types is the third type at label -conj(ab).
pub fn suite_xyz(sc: &StructureConstants) -> VerificationReport {
    let mut t = Tally::new("xyz");
    let pair = sc.pair;
    for t1 in OffType::ALL {
        let t2 = t1.next();
        let t3 = t2.next();
        for s1 in 0..DIM {
            for p1 in 0..DIM {
                for s2 in 0..DIM {
                    for p2 in 0..DIM {
                        let a = TensorElement::unit(pair.left, pair.right, s1, p1);
                        let b = TensorElement::unit(pair.left, pair.right, s2, p2);
                        let expect = a.mul(&b).conj().scale(&s(-1));
                        let got = sc.bracket(off_index(t1, s1, p1), off_index(t2, s2, p2));
                        let ok = got.iter().all(|(k, c)| {
                            *k >= t3.index() * 64
                                && *k < (t3.index() + 1) * 64
                                && expect.c[*k - t3.index() * 64] == *c
                        }) && got.len()
                            == expect.c.iter().filter(|x| !x.is_zero()).count();
                        t.check(ok, || {
                            format!(
                                "[{}, {}]",
                                sc.basis_name(off_index(t1, s1, p1)),
                                sc.basis_name(off_index(t2, s2, p2))
                            )
                        });
                    }
                }
            }
        }
    }
    t.finish()
}

/// Triality suite: every per-type realization reproduces its slot block of
/// the shared 27-dimensional operator, and the three single-index families
/// cancel (D_p + E_p + F_p = 0).
pub fn suite_triality(pair: AlgebraPair) -> VerificationReport {
    let mut t = Tally::new("triality");
    for kind in pair_kinds(pair) {
        let tables = diag_tables(kind);
        for mt in MatrixType::ALL {
            for class in DiagClass::ALL {
                for p in 1..DIM {
                    let real = tables.realization(mt, class, p);
                    let ok = gen_slot_action(kind, mt, real)
                        .map(|got| got == slot_block(tables.op(class, p), mt))
                        .unwrap_or(false);
                    t.check(ok, || {
                        format!("{}: realization {:?} {:?} e{}", kind.name(), mt, class, p)
                    });
                }
            }
        }
        let ops: Vec<TypeOps> = MatrixType::ALL
            .iter()
            .map(|&mt| TypeOps::build(kind, mt))
            .collect();
        for p in 1..DIM {
            let sum = ops[0].single[p - 1]
                .add(&ops[1].single[p - 1])
                .add(&ops[2].single[p - 1]);
            t.check(sum.is_zero(), || {
                format!("{}: D + E + F at e{}", kind.name(), p)
            });
        }
    }
    t.finish()
}

/// Exhaustive Jacobi sweep as a verification report.
pub fn suite_jacobi(sc: &StructureConstants) -> VerificationReport {
    let r = verify_jacobi(sc);
    VerificationReport {
        suite: "jacobi".to_string(),
        attempted: r.attempted,
        passed: r.attempted - r.defects,
        first_failure: r.first_failure.map(|(i, j, k)| {
            format!(
                "triple ({}, {}, {})",
                sc.basis_name(i),
                sc.basis_name(j),
                sc.basis_name(k)
            )
        }),
        elapsed: r.elapsed,
    }
}

/// Expected Killing index for a spec pair: each split factor moves the form
/// away from the compact -248 by the same amount.
pub fn expected_killing_index(pair: AlgebraPair) -> i64 {
    match (pair.left, pair.right) {
        (AlgebraKind::Division, AlgebraKind::Division) => -248,
        (AlgebraKind::Split, AlgebraKind::Split) => 8,
        _ => -24,
    }
}

/// Killing-form suite: nondegeneracy, expected signature, and the full
/// ad-invariance sweep.
pub fn suite_killing(sc: &StructureConstants) -> VerificationReport {
    let start = Instant::now();
    let k = killing_form(sc);
    let (plus, minus, zero) = k.signature();
    let inv = verify_killing_invariance(sc, &k);
    let attempted = inv.attempted + 2;
    let mut passed = inv.attempted - inv.defects;
    let mut first_failure = inv.first_failure.map(|(i, j, l)| {
        format!(
            "invariance at ({}, {}, {})",
            sc.basis_name(i),
            sc.basis_name(j),
            sc.basis_name(l)
        )
    });
    if zero == 0 {
        passed += 1;
    } else if first_failure.is_none() {
        first_failure = Some(format!("degenerate: {} null directions", zero));
    }
    if plus as i64 - minus as i64 == expected_killing_index(sc.pair) {
        passed += 1;
    } else if first_failure.is_none() {
        first_failure = Some(format!(
            "signature ({}, {}, {}) has index {}, expected {}",
            plus,
            minus,
            zero,
            plus as i64 - minus as i64,
            expected_killing_index(sc.pair)
        ));
    }
    VerificationReport {
        suite: "killing".to_string(),
        attempted,
        passed,
        first_failure,
        elapsed: start.elapsed(),
    }
}

pub const SUITE_NAMES: [&str; 5] = ["tables", "xyz", "triality", "jacobi", "killing"];

/// Runs one named suite.
pub fn run_suite(sc: &StructureConstants, name: &str) -> Option<VerificationReport> {
    match name {
        "tables" => Some(suite_tables(sc.pair)),
        "xyz" => Some(suite_xyz(sc)),
        "triality" => Some(suite_triality(sc.pair)),
        "jacobi" => Some(suite_jacobi(sc)),
        "killing" => Some(suite_killing(sc)),
        _ => None,
    }
}

/// Runs every suite in order.
pub fn run_all(sc: &StructureConstants) -> Vec<VerificationReport> {
    SUITE_NAMES
        .iter()
        .map(|n| run_suite(sc, n).expect("known suite"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::e8::structure_constants;

    fn sc() -> &'static StructureConstants {
        structure_constants(AlgebraPair::HALF_SPLIT)
    }

    #[test]
    fn export_roundtrip_and_digest() {
        let sc = sc();
        let k = killing_form(sc);
        let doc = build_export(sc, &k);
        assert!(check_digest(&doc));
        let text = to_json(&doc);
        let back = from_json(&text).unwrap();
        assert_eq!(back, doc);
        assert!(check_digest(&back));
        // Determinism: a rebuild is byte-identical.
        let doc2 = build_export(sc, &k);
        assert_eq!(to_json(&doc2), text);
        // Mirror rows: for every (i, j) row there is a (j, i) row.
        let keys: std::collections::HashSet<(usize, usize)> =
            doc.brackets.iter().map(|r| (r.i, r.j)).collect();
        for r in &doc.brackets {
            assert!(keys.contains(&(r.j, r.i)), "missing mirror of ({},{})", r.i, r.j);
        }
        // The documented example row: [X_{1 (x) 1}, X_{1 (x) i}] = 2 D_i.
        let i = off_index(OffType::X, 0, 0);
        let j = off_index(OffType::X, 0, 1);
        let row = doc
            .brackets
            .iter()
            .find(|r| (r.i, r.j) == (i, j))
            .expect("example row present");
        let d_i = crate::e8::diag_index(crate::e8::Factor::Right, DiagClass::D, 1);
        assert_eq!(
            row.terms,
            vec![TermJson {
                k: d_i,
                num: "2".to_string(),
                den: "1".to_string()
            }]
        );
        // CSV carries the digest and the same record count.
        let csv = to_csv(&doc);
        assert!(csv.contains(&doc.digest));
        let records = csv.lines().filter(|l| !l.starts_with('#')).count() - 1;
        let terms: usize = doc.brackets.iter().map(|r| r.terms.len()).sum();
        assert_eq!(records, terms);
    }

    #[test]
    fn fast_suites_pass() {
        let sc = sc();
        for name in ["tables", "xyz", "triality"] {
            let r = run_suite(sc, name).unwrap();
            assert!(r.ok(), "{}", r.line());
        }
        assert!(run_suite(sc, "no-such-suite").is_none());
    }
}
