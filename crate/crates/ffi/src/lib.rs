//! C ABI over `fieldpos`.
//!
//! Every entry point returns an [`FpStatus`]. On failure the message is kept
//! per thread and can be read with [`fp_last_error`]. Packets and verify
//! reports are opaque handles released with their `_free` function.
//!
//! Matrices cross the boundary as 16 real and 16 imaginary parts in row-major
//! order; spinors as 4 and 4.

use std::cell::RefCell;
use std::ffi::{c_char, c_int};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use fieldpos::cli::{run_suite, SuiteSettings};
use fieldpos::dirac::DiracMatrix;
use fieldpos::lab::CheckReport;
use fieldpos::operators::{field_spin, position_matrix_part};
use fieldpos::spinor::{spinor_components, Branch, Spin};
use fieldpos::tensor::Momentum;
use fieldpos::wavepacket::{
    build_packet, evolve, expect_position, MomentumGrid1D, PacketSpec, PositionKind, SpectralDerivative,
    WavePacket,
};
use fieldpos::Error;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FpStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    /// A computation failed, e.g. a mixed packet passed to the field position.
    Computation = 3,
    BufferTooSmall = 4,
    Panic = 5,
}

/// One row of a verify report.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FpCheckRow {
    pub max_residual: f64,
    pub tolerance: f64,
    pub samples: usize,
    pub passed: bool,
}

/// Opaque wavepacket handle.
pub struct FpPacket {
    packet: WavePacket,
    deriv: SpectralDerivative,
}

/// Opaque verify report handle.
pub struct FpReport {
    rows: Vec<CheckReport>,
}

thread_local! {
    static LAST_ERROR: RefCell<String> = const { RefCell::new(String::new()) };
}

fn set_error(msg: String) {
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

fn classify(err: &Error) -> FpStatus {
    match err {
        Error::NonPositiveMass(_)
        | Error::NonUnitAxis(_)
        | Error::InvalidGrid(_)
        | Error::InvalidPacket(_)
        | Error::WordParse(_)
        | Error::Config(_) => FpStatus::InvalidArgument,
        _ => FpStatus::Computation,
    }
}

/// Run `f`, mapping errors and panics to status codes.
fn guard<F>(f: F) -> FpStatus
where
    F: FnOnce() -> Result<(), (FpStatus, String)>,
{
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => FpStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            FpStatus::Panic
        }
    }
}

fn lift(err: Error) -> (FpStatus, String) {
    (classify(&err), err.to_string())
}

fn null(what: &str) -> (FpStatus, String) {
    (FpStatus::NullPointer, format!("{what} is null"))
}

fn invalid(msg: String) -> (FpStatus, String) {
    (FpStatus::InvalidArgument, msg)
}

fn branch_of(sign: c_int) -> Result<Branch, (FpStatus, String)> {
    Branch::from_sign(sign).ok_or_else(|| invalid(format!("branch must be +1 or -1, got {sign}")))
}

fn spin_of(twice: c_int) -> Result<Spin, (FpStatus, String)> {
    match twice {
        1 => Ok(Spin::Up),
        -1 => Ok(Spin::Down),
        _ => Err(invalid(format!("spin must be +1 (up) or -1 (down), got {twice}"))),
    }
}

/// # Safety
/// `p` must point to 3 readable doubles.
unsafe fn momentum_of(mass: f64, p: *const f64) -> Result<Momentum, (FpStatus, String)> {
    if p.is_null() {
        return Err(null("p"));
    }
    let p = std::slice::from_raw_parts(p, 3);
    Momentum::from_components(mass, p[0], p[1], p[2]).map_err(lift)
}

/// # Safety
/// `re` and `im` must point to 16 writable doubles each.
unsafe fn write_matrix(m: &DiracMatrix, re: *mut f64, im: *mut f64) -> Result<(), (FpStatus, String)> {
    if re.is_null() || im.is_null() {
        return Err(null("output"));
    }
    for r in 0..4 {
        for col in 0..4 {
            *re.add(4 * r + col) = m[(r, col)].re;
            *im.add(4 * r + col) = m[(r, col)].im;
        }
    }
    Ok(())
}

/// Copy the calling thread's last error message, NUL-terminated, into `buf`.
/// Returns the number of bytes needed including the terminator; nothing is
/// written when `buf` is null or `len` is too small.
///
/// # Safety
/// `buf` must be null or point to `len` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn fp_last_error(buf: *mut c_char, len: usize) -> usize {
    LAST_ERROR.with(|e| {
        let msg = e.borrow();
        let needed = msg.len() + 1;
        if !buf.is_null() && len >= needed {
            ptr::copy_nonoverlapping(msg.as_ptr(), buf.cast::<u8>(), msg.len());
            *buf.add(msg.len()) = 0;
        }
        needed
    })
}

/// Plane-wave spinor for branch `+1`/`-1` and spin `+1` (up) / `-1` (down).
///
/// # Safety
/// `p` points to 3 doubles; `re` and `im` to 4 writable doubles each.
#[no_mangle]
pub unsafe extern "C" fn fp_spinor(
    mass: f64,
    p: *const f64,
    branch: c_int,
    spin: c_int,
    re: *mut f64,
    im: *mut f64,
) -> FpStatus {
    guard(|| {
        let p = momentum_of(mass, p)?;
        let v = spinor_components(&p, branch_of(branch)?, spin_of(spin)?);
        if re.is_null() || im.is_null() {
            return Err(null("output"));
        }
        for (i, z) in v.iter().enumerate() {
            *re.add(i) = z.re;
            *im.add(i) = z.im;
        }
        Ok(())
    })
}

/// Field spin component `S^{k+1}` for `k` in `0..3`.
///
/// # Safety
/// `p` points to 3 doubles; `re` and `im` to 16 writable doubles each.
#[no_mangle]
pub unsafe extern "C" fn fp_field_spin(
    mass: f64,
    p: *const f64,
    branch: c_int,
    k: usize,
    re: *mut f64,
    im: *mut f64,
) -> FpStatus {
    guard(|| {
        let p = momentum_of(mass, p)?;
        let branch = branch_of(branch)?;
        if k > 2 {
            return Err(invalid(format!("component {k} out of range")));
        }
        write_matrix(&field_spin(&p, branch)[k], re, im)
    })
}

/// Matrix part of the particle field position, component `k` in `0..3`.
///
/// # Safety
/// `p` points to 3 doubles; `re` and `im` to 16 writable doubles each.
#[no_mangle]
pub unsafe extern "C" fn fp_position_matrix(
    mass: f64,
    p: *const f64,
    k: usize,
    re: *mut f64,
    im: *mut f64,
) -> FpStatus {
    guard(|| {
        let p = momentum_of(mass, p)?;
        if k > 2 {
            return Err(invalid(format!("component {k} out of range")));
        }
        write_matrix(&position_matrix_part(&p, k), re, im)
    })
}

/// Build a 1-D wavepacket on an `n`-mode grid over `[-p_max, p_max)`.
/// `mix` is the particle fraction.
///
/// # Safety
/// `out` must point to writable storage for one pointer.
#[no_mangle]
#[allow(clippy::too_many_arguments)]
pub unsafe extern "C" fn fp_packet_new(
    n: usize,
    p_max: f64,
    mass: f64,
    p0: f64,
    sigma_p: f64,
    mix: f64,
    spin: c_int,
    out: *mut *mut FpPacket,
) -> FpStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let grid = MomentumGrid1D::new(n, p_max, mass).map_err(lift)?;
        let spec = PacketSpec {
            p0,
            sigma_p,
            mix,
            spin: spin_of(spin)?,
        };
        let packet = build_packet(&grid, &spec).map_err(lift)?;
        let deriv = SpectralDerivative::new(&grid);
        *out = Box::into_raw(Box::new(FpPacket { packet, deriv }));
        Ok(())
    })
}

/// Advance the packet by `t` in place.
///
/// # Safety
/// `packet` must come from [`fp_packet_new`] and not be freed.
#[no_mangle]
pub unsafe extern "C" fn fp_packet_evolve(packet: *mut FpPacket, t: f64) -> FpStatus {
    guard(|| {
        let h = packet.as_mut().ok_or_else(|| null("packet"))?;
        if !t.is_finite() {
            return Err(invalid(format!("time {t} is not finite")));
        }
        h.packet = evolve(&h.packet, t);
        Ok(())
    })
}

/// Packet norm under the invariant measure.
///
/// # Safety
/// `packet` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn fp_packet_norm(packet: *const FpPacket, out: *mut f64) -> FpStatus {
    guard(|| {
        let h = packet.as_ref().ok_or_else(|| null("packet"))?;
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        *out = h.packet.norm();
        Ok(())
    })
}

/// Position expectation: `kind = 0` for the Dirac position, `1` for the
/// field position (single-branch packets only).
///
/// # Safety
/// `packet` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn fp_packet_position(packet: *const FpPacket, kind: c_int, out: *mut f64) -> FpStatus {
    guard(|| {
        let h = packet.as_ref().ok_or_else(|| null("packet"))?;
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        let kind = match kind {
            0 => PositionKind::Dirac,
            1 => PositionKind::Field,
            _ => return Err(invalid(format!("position kind {kind} is not 0 or 1"))),
        };
        *out = expect_position(&h.packet, kind, &h.deriv).map_err(lift)?;
        Ok(())
    })
}

/// # Safety
/// `packet` must be null or a handle from [`fp_packet_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn fp_packet_free(packet: *mut FpPacket) {
    if !packet.is_null() {
        drop(Box::from_raw(packet));
    }
}

/// Run the verification suite. The report is returned even when checks fail;
/// inspect it with [`fp_report_all_passed`].
///
/// # Safety
/// `out` must point to writable storage for one pointer.
#[no_mangle]
pub unsafe extern "C" fn fp_verify(
    mass: f64,
    seed: u64,
    tol_exact: f64,
    tol_fd: f64,
    samples: usize,
    out: *mut *mut FpReport,
) -> FpStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        if samples == 0 {
            return Err(invalid("samples must be at least 1".into()));
        }
        for (name, v) in [("mass", mass), ("tol_exact", tol_exact), ("tol_fd", tol_fd)] {
            if !(v.is_finite() && v > 0.0) {
                return Err(invalid(format!("{name} must be positive and finite, got {v}")));
            }
        }
        let settings = SuiteSettings {
            mass,
            seed,
            tol_exact,
            tol_fd,
            samples,
        };
        let rows = run_suite(&settings).map_err(lift)?;
        *out = Box::into_raw(Box::new(FpReport { rows }));
        Ok(())
    })
}

/// Number of rows in a report, 0 for null.
///
/// # Safety
/// `report` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn fp_report_len(report: *const FpReport) -> usize {
    report.as_ref().map_or(0, |r| r.rows.len())
}

/// `true` iff every row passed; `false` for null.
///
/// # Safety
/// `report` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn fp_report_all_passed(report: *const FpReport) -> bool {
    report.as_ref().is_some_and(|r| r.rows.iter().all(|c| c.passed))
}

/// # Safety
/// `report` must be a live handle and `row` writable.
#[no_mangle]
pub unsafe extern "C" fn fp_report_row(
    report: *const FpReport,
    index: usize,
    row: *mut FpCheckRow,
) -> FpStatus {
    guard(|| {
        let r = report.as_ref().ok_or_else(|| null("report"))?;
        let row = row.as_mut().ok_or_else(|| null("row"))?;
        let c = r
            .rows
            .get(index)
            .ok_or_else(|| invalid(format!("row {index} out of range")))?;
        *row = FpCheckRow {
            max_residual: c.max_residual,
            tolerance: c.tolerance,
            samples: c.samples,
            passed: c.passed,
        };
        Ok(())
    })
}

/// Copy the name of row `index`, NUL-terminated. `needed` receives the
/// required size including the terminator.
///
/// # Safety
/// `report` must be a live handle, `buf` null or `len` writable bytes, and
/// `needed` null or writable.
#[no_mangle]
pub unsafe extern "C" fn fp_report_name(
    report: *const FpReport,
    index: usize,
    buf: *mut c_char,
    len: usize,
    needed: *mut usize,
) -> FpStatus {
    guard(|| {
        let r = report.as_ref().ok_or_else(|| null("report"))?;
        let name = &r
            .rows
            .get(index)
            .ok_or_else(|| invalid(format!("row {index} out of range")))?
            .name;
        if let Some(n) = needed.as_mut() {
            *n = name.len() + 1;
        }
        if buf.is_null() || len < name.len() + 1 {
            return Err((
                FpStatus::BufferTooSmall,
                format!("name needs {} bytes", name.len() + 1),
            ));
        }
        ptr::copy_nonoverlapping(name.as_ptr(), buf.cast::<u8>(), name.len());
        *buf.add(name.len()) = 0;
        Ok(())
    })
}

/// # Safety
/// `report` must be null or a handle from [`fp_verify`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn fp_report_free(report: *mut FpReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}
