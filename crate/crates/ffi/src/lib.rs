//! C ABI surface for the exact e8 structure-constant tables.
//!
//! All entry points are panic-free: invalid input maps to an error code.
//! The handle is opaque; structure constants are returned as (k, num, den)
//! triples with machine integers (every constant is a small rational).
//!
//! The header `include/octomat.h` is written by hand and kept in sync with
//! this file by `tests/header_sync.rs`.

use std::ffi::{c_char, c_int, CString};
use std::sync::OnceLock;

use num_traits::ToPrimitive;

use octomat::algebra::AlgebraKind;
use octomat::e8::{
    build_structure_constants, killing_form, verify_jacobi, AlgebraPair, KillingMatrix,
    StructureConstants, CONVENTION_VERSION, E8_DIM,
};
use octomat::report::{build_export, to_json};

pub const OCTOMAT_OK: c_int = 0;
pub const OCTOMAT_ERR_NULL_ARG: c_int = 1;
pub const OCTOMAT_ERR_BAD_ARG: c_int = 2;
pub const OCTOMAT_ERR_CLOSURE: c_int = 3;
pub const OCTOMAT_ERR_BUFFER_TOO_SMALL: c_int = 4;

/// Opaque table handle.
pub struct OctomatTable {
    sc: StructureConstants,
    killing: OnceLock<KillingMatrix>,
}

impl OctomatTable {
    fn killing(&self) -> &KillingMatrix {
        self.killing.get_or_init(|| killing_form(&self.sc))
    }
}

fn kind(split: c_int) -> AlgebraKind {
    if split != 0 {
        AlgebraKind::Split
    } else {
        AlgebraKind::Division
    }
}

/// Builds the 248-dimensional table for the requested pair of factor
/// algebras (nonzero = split). On success writes a heap-allocated handle.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for one pointer.
#[no_mangle]
pub unsafe extern "C" fn octomat_table_new(
    left_split: c_int,
    right_split: c_int,
    out: *mut *mut OctomatTable,
) -> c_int {
    if out.is_null() {
        return OCTOMAT_ERR_NULL_ARG;
    }
    let pair = AlgebraPair {
        left: kind(left_split),
        right: kind(right_split),
    };
    match build_structure_constants(pair) {
        Ok(sc) => {
            let handle = Box::new(OctomatTable {
                sc,
                killing: OnceLock::new(),
            });
            *out = Box::into_raw(handle);
            OCTOMAT_OK
        }
        Err(_) => OCTOMAT_ERR_CLOSURE,
    }
}

/// Frees a handle returned by `octomat_table_new`. Null is a no-op.
///
/// # Safety
/// `t` must be null or a pointer obtained from `octomat_table_new` that has
/// not been freed yet.
#[no_mangle]
pub unsafe extern "C" fn octomat_table_free(t: *mut OctomatTable) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// Basis dimension (248), or -1 on null.
///
/// # Safety
/// `t` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn octomat_basis_count(t: *const OctomatTable) -> c_int {
    if t.is_null() {
        return -1;
    }
    E8_DIM as c_int
}

/// Copies the NUL-terminated printed name of basis element `i` into `buf`.
///
/// # Safety
/// `t` must be a live handle; `buf` must point to at least `len` writable
/// bytes.
#[no_mangle]
pub unsafe extern "C" fn octomat_basis_name(
    t: *const OctomatTable,
    i: c_int,
    buf: *mut c_char,
    len: usize,
) -> c_int {
    if t.is_null() || buf.is_null() {
        return OCTOMAT_ERR_NULL_ARG;
    }
    let table = &*t;
    if i < 0 || i as usize >= E8_DIM {
        return OCTOMAT_ERR_BAD_ARG;
    }
    let name = table.sc.basis_name(i as usize);
    let bytes = name.as_bytes();
    if bytes.len() + 1 > len {
        return OCTOMAT_ERR_BUFFER_TOO_SMALL;
    }
    std::ptr::copy_nonoverlapping(bytes.as_ptr() as *const c_char, buf, bytes.len());
    *buf.add(bytes.len()) = 0;
    OCTOMAT_OK
}

/// Number of nonzero terms in [e_i, e_j], or -1 on invalid input.
///
/// # Safety
/// `t` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn octomat_bracket_term_count(
    t: *const OctomatTable,
    i: c_int,
    j: c_int,
) -> c_int {
    if t.is_null() || i < 0 || j < 0 || i as usize >= E8_DIM || j as usize >= E8_DIM {
        return -1;
    }
    (*t).sc.bracket(i as usize, j as usize).len() as c_int
}

/// Writes the terms of [e_i, e_j] as parallel arrays (basis index, exact
/// numerator, exact denominator). Returns the number of terms written, or
/// -1 on invalid input or insufficient capacity.
///
/// # Safety
/// `t` must be a live handle; `ks`, `nums`, `dens` must each point to at
/// least `cap` writable elements.
#[no_mangle]
pub unsafe extern "C" fn octomat_bracket_terms(
    t: *const OctomatTable,
    i: c_int,
    j: c_int,
    ks: *mut i32,
    nums: *mut i64,
    dens: *mut i64,
    cap: usize,
) -> c_int {
    if t.is_null() || ks.is_null() || nums.is_null() || dens.is_null() {
        return -1;
    }
    if i < 0 || j < 0 || i as usize >= E8_DIM || j as usize >= E8_DIM {
        return -1;
    }
    let row = (*t).sc.bracket(i as usize, j as usize);
    if row.len() > cap {
        return -1;
    }
    for (n, (k, c)) in row.iter().enumerate() {
        let (Some(num), Some(den)) = (c.numer().to_i64(), c.denom().to_i64()) else {
            return -1;
        };
        *ks.add(n) = *k as i32;
        *nums.add(n) = num;
        *dens.add(n) = den;
    }
    row.len() as c_int
}

/// Killing-form signature of the table's real form.
///
/// # Safety
/// `t` must be a live handle; the three out-pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn octomat_killing_signature(
    t: *const OctomatTable,
    plus: *mut c_int,
    minus: *mut c_int,
    zero: *mut c_int,
) -> c_int {
    if t.is_null() || plus.is_null() || minus.is_null() || zero.is_null() {
        return OCTOMAT_ERR_NULL_ARG;
    }
    let (p, m, z) = (*t).killing().signature();
    *plus = p as c_int;
    *minus = m as c_int;
    *zero = z as c_int;
    OCTOMAT_OK
}

/// Runs the exhaustive Jacobi sweep; writes the triple count and the number
/// of defective triples (0 on a valid Lie algebra).
///
/// # Safety
/// `t` must be a live handle; `attempted` and `defects` must be writable.
#[no_mangle]
pub unsafe extern "C" fn octomat_verify_jacobi(
    t: *const OctomatTable,
    attempted: *mut u64,
    defects: *mut u64,
) -> c_int {
    if t.is_null() || attempted.is_null() || defects.is_null() {
        return OCTOMAT_ERR_NULL_ARG;
    }
    let r = verify_jacobi(&(*t).sc);
    *attempted = r.attempted;
    *defects = r.defects;
    OCTOMAT_OK
}

/// Returns the full export document (basis names, brackets, Killing data,
/// digest) as a heap-allocated JSON string; free with
/// `octomat_string_free`.
///
/// # Safety
/// `t` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn octomat_export_json(
    t: *const OctomatTable,
    out: *mut *mut c_char,
) -> c_int {
    if t.is_null() || out.is_null() {
        return OCTOMAT_ERR_NULL_ARG;
    }
    let table = &*t;
    let doc = build_export(&table.sc, table.killing());
    let text = to_json(&doc);
    match CString::new(text) {
        Ok(cs) => {
            *out = cs.into_raw();
            OCTOMAT_OK
        }
        Err(_) => OCTOMAT_ERR_BAD_ARG,
    }
}

/// Frees a string returned by `octomat_export_json`. Null is a no-op.
///
/// # Safety
/// `s` must be null or a string returned by this library that has not been
/// freed yet.
#[no_mangle]
pub unsafe extern "C" fn octomat_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Copies the NUL-terminated convention version tag into `buf`.
///
/// # Safety
/// `buf` must point to at least `len` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn octomat_convention_version(buf: *mut c_char, len: usize) -> c_int {
    if buf.is_null() {
        return OCTOMAT_ERR_NULL_ARG;
    }
    let bytes = CONVENTION_VERSION.as_bytes();
    if bytes.len() + 1 > len {
        return OCTOMAT_ERR_BUFFER_TOO_SMALL;
    }
    std::ptr::copy_nonoverlapping(bytes.as_ptr() as *const c_char, buf, bytes.len());
    *buf.add(bytes.len()) = 0;
    OCTOMAT_OK
}
