//! Congruence constants from the power-partible reduction, and their
//! verification by direct modular summation over definition-generated terms.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::time::Instant;

use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{
    is_prime, minus_one_symbol, padic_valuation, prime_divisors, rational_to_residue,
    symbol_over_three, BigInt, Rational, Residue,
};
use crate::error::{Error, Result};
use crate::poly::{Field, FieldElement, Polynomial};
use crate::reduction::{is_partible, partible_reduce, PartibleReduction, Scaling};
use crate::sequences::{
    apery_signed_terms, apery_terms, builtin_family, delannoy_coefficients, delannoy_int_terms,
    Family,
};

/// Which congruence of a family is meant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Target {
    /// `(2k+1)^{2r+1}` for the Apéry families, `(2k+1)^{2r+2}` for Delannoy.
    Main,
    /// `(2k+1)^{2r+1}` for Delannoy, whose sum vanishes mod `p`.
    OddPower,
}

pub fn target_power(family: Family, r: u32, target: Target) -> Result<u32> {
    match (family.is_apery(), target) {
        (true, Target::Main) | (false, Target::OddPower) => Ok(2 * r + 1),
        (false, Target::Main) => Ok(2 * r + 2),
        (true, Target::OddPower) => Err(Error::HypothesisViolation(format!(
            "{family} has no separate odd-power congruence"
        ))),
    }
}

/// Natural modulus exponent: `p^3` for the Apéry families, `p` for Delannoy.
pub fn modulus_exponent(family: Family) -> u32 {
    if family.is_apery() {
        3
    } else {
        1
    }
}

/// Decomposition of `(2k+1)^power` for the family's operator (symbolic `z`
/// for `delannoy_poly`), audited against the target before it is returned.
pub fn derive_reduction(family: Family, r: u32, target: Target) -> Result<PartibleReduction> {
    let power = target_power(family, r, target)?;
    let op = builtin_family(family, None).annihilator;
    let cert = is_partible(&op).ok_or_else(|| Error::NotPartible(family.to_string()))?;
    let scaling = Scaling::default_for(&cert.gamma);
    let red = partible_reduce(power as usize, &op, &cert, &scaling)?;
    if !red.verify(&op) {
        return Err(Error::AuditFailure(format!(
            "{family}: decomposition of (2k+1)^{power} does not reassemble"
        )));
    }
    Ok(red)
}

/// The coefficient `c_r` of the surviving basis element: `(2k+1)` for the
/// Apéry families and `1` for Delannoy.
pub fn derive_constant(family: Family, r: u32) -> Result<FieldElement> {
    if family.is_apery() && r == 0 {
        return Ok(FieldElement::one());
    }
    let red = derive_reduction(family, r, Target::Main)?;
    let slot = if family.is_apery() { 1 } else { 0 };
    Ok(red
        .u_coeffs
        .get(&slot)
        .cloned()
        .unwrap_or_else(FieldElement::zero))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstantTable {
    pub family: Family,
    pub entries: BTreeMap<u32, FieldElement>,
    /// Primes dividing a rational denominator of some entry (for `Q(z)`
    /// entries, of some coefficient once the `z`-denominator is monic).
    pub denominator_support: BTreeSet<u64>,
}

fn rational_parts(c: &FieldElement) -> Vec<Rational> {
    match c {
        FieldElement::Rational(q) => vec![q.clone()],
        FieldElement::Function(f) => f
            .numer()
            .coeffs()
            .iter()
            .chain(f.denom().coeffs())
            .cloned()
            .collect(),
    }
}

impl ConstantTable {
    /// The only denominator prime the theory allows.
    pub fn expected_prime(&self) -> u64 {
        match self.family {
            Family::AperySigned => 3,
            _ => 2,
        }
    }

    /// Denominator primes beyond the expected one; flagged, not fatal.
    pub fn unexpected_primes(&self) -> BTreeSet<u64> {
        let e = self.expected_prime();
        self.denominator_support
            .iter()
            .copied()
            .filter(|&p| p != e)
            .collect()
    }

    /// Entries lying outside `Z[1/(4z)]`.
    pub fn outside_laurent_ring(&self) -> Vec<u32> {
        self.entries
            .iter()
            .filter(|(_, c)| !in_inverse_4z_ring(c))
            .map(|(r, _)| *r)
            .collect()
    }
}

/// Whether `c` is an integer polynomial in `w = 1/(4z)` (for rational `c`,
/// in `w = 1/4` at `z = 1`).
pub fn in_inverse_4z_ring(c: &FieldElement) -> bool {
    match c {
        FieldElement::Rational(q) => {
            let d = q.denom();
            (d >> d.trailing_zeros().unwrap_or(0)).is_one()
        }
        FieldElement::Function(f) => {
            // c = N(z) / z^b with deg N <= b, and 4^b N has z^i coefficient
            // divisible by 4^i.
            let den = f.denom();
            let Some(b) = den.degree() else { return false };
            if *den != Polynomial::monomial(<Rational as Field>::one(), b) {
                return false;
            }
            let num = f.numer();
            if num.degree().unwrap_or(0) > b {
                return false;
            }
            let four_b = Rational::from_integer(BigInt::from(4).pow(b as u32));
            num.coeffs().iter().enumerate().all(|(i, n)| {
                let scaled = n * &four_b;
                scaled.is_integer()
                    && scaled
                        .to_integer()
                        .is_multiple_of(&BigInt::from(4).pow(i as u32))
            })
        }
    }
}

pub fn derive_constants(family: Family, r_max: u32) -> Result<ConstantTable> {
    let mut entries = BTreeMap::new();
    let mut support = BTreeSet::new();
    for r in 0..=r_max {
        let c = derive_constant(family, r)?;
        for q in rational_parts(&c) {
            for p in prime_divisors(q.denom()) {
                support.insert(p.to_u64().unwrap_or(u64::MAX));
            }
        }
        entries.insert(r, c);
    }
    Ok(ConstantTable {
        family,
        entries,
        denominator_support: support,
    })
}

/// Whether every entry is a `p`-adic integer (every coefficient, for `Q(z)`
/// entries with their monic `z`-denominator).
pub fn integrality_check(table: &ConstantTable, p: u64) -> bool {
    table
        .entries
        .values()
        .flat_map(rational_parts)
        .all(|q| padic_valuation(&q, p).is_nonnegative())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CongruenceReport {
    pub family: Family,
    pub r: u32,
    pub p: u64,
    /// Exponent of `(2k+1)` in the summand.
    pub power: u32,
    /// The modulus is `p^e`.
    pub e: u32,
    pub z: Option<i64>,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
    pub elapsed_us: u64,
}

impl CongruenceReport {
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

fn hypothesis(family: Family, p: u64, e: u32, z: Option<i64>) -> Result<()> {
    let bad = |m: String| Err(Error::HypothesisViolation(m));
    if !is_prime(p) {
        return bad(format!("{p} is not prime"));
    }
    if e == 0 || e > modulus_exponent(family) {
        return bad(format!(
            "{family} is stated modulo p^{}, not p^{e}",
            modulus_exponent(family)
        ));
    }
    match family {
        Family::Apery | Family::AperySigned if p <= 3 => {
            bad(format!("{family} needs p > 3, got {p}"))
        }
        Family::DelannoyNumber | Family::DelannoyPoly if p == 2 => {
            bad(format!("{family} needs odd p"))
        }
        Family::DelannoyPoly => match z {
            None => bad("delannoy_poly needs an integer z".into()),
            Some(z) if z.rem_euclid(p as i64) == 0 => bad(format!("p = {p} divides z = {z}")),
            Some(_) => Ok(()),
        },
        _ => Ok(()),
    }
}

/// Definition-generated integer terms `F(0..n)`.
pub fn family_terms(family: Family, n: usize, z: Option<i64>) -> Vec<BigInt> {
    match family {
        Family::Apery => apery_terms(n),
        Family::AperySigned => apery_signed_terms(n),
        Family::DelannoyNumber => delannoy_int_terms(n, &BigInt::one()),
        Family::DelannoyPoly => {
            delannoy_int_terms(n, &BigInt::from(z.expect("z for delannoy_poly")))
        }
    }
}

fn residue(n: &BigInt, m: &BigInt) -> Residue {
    Residue::new(n.clone(), m.clone()).expect("modulus >= 2")
}

/// `sum_{k<p} (2k+1)^power F(k) mod m`.
fn weighted_sum(terms: &[BigInt], p: u64, power: u32, m: &BigInt) -> Residue {
    let mut acc = BigInt::zero();
    for (k, t) in terms.iter().take(p as usize).enumerate() {
        let w = BigInt::from(2 * k as u64 + 1).modpow(&BigInt::from(power), m);
        acc = (acc + w * t.mod_floor(m)).mod_floor(m);
    }
    residue(&acc, m)
}

struct Cell<'a> {
    family: Family,
    r: u32,
    p: u64,
    e: u32,
    z: Option<i64>,
    target: Target,
    constant: &'a FieldElement,
    terms: &'a [BigInt],
}

fn run_cell(cell: &Cell<'_>) -> Result<CongruenceReport> {
    let start = Instant::now();
    hypothesis(cell.family, cell.p, cell.e, cell.z)?;
    let power = target_power(cell.family, cell.r, cell.target)?;
    let pb = BigInt::from(cell.p);
    let m = pb.pow(cell.e);
    let lhs = weighted_sum(cell.terms, cell.p, power, &m);
    let c = |m: &BigInt| -> Result<Residue> {
        let q = match cell.constant {
            FieldElement::Rational(q) => q.clone(),
            f => f
                .eval_z(&Rational::from_integer(cell.z.unwrap_or(1).into()))
                .ok_or_else(|| {
                    Error::HypothesisViolation(format!(
                        "c_{} has a pole at z = {:?}",
                        cell.r, cell.z
                    ))
                })?,
        };
        rational_to_residue(&q, m)
    };
    let rhs = match (cell.family, cell.target) {
        (_, Target::OddPower) => residue(&BigInt::zero(), &m),
        (Family::Apery, _) => c(&m)?.scale(&pb),
        (Family::AperySigned, _) => c(&m)?.scale(&(&pb * symbol_over_three(cell.p))),
        (Family::DelannoyNumber, _) => c(&m)?.scale(&BigInt::from(minus_one_symbol(cell.p))),
        (Family::DelannoyPoly, _) => {
            c(&m)?.checked_mul(&weighted_sum(cell.terms, cell.p, 0, &m))?
        }
    };
    Ok(CongruenceReport {
        family: cell.family,
        r: cell.r,
        p: cell.p,
        power,
        e: cell.e,
        z: cell.z,
        pass: lhs == rhs,
        lhs: lhs.value().to_string(),
        rhs: rhs.value().to_string(),
        elapsed_us: start.elapsed().as_micros() as u64,
    })
}

fn verify_target(
    family: Family,
    r: u32,
    p: u64,
    e: u32,
    z: Option<i64>,
    target: Target,
) -> Result<CongruenceReport> {
    hypothesis(family, p, e, z)?;
    let constant = match target {
        Target::Main => derive_constant(family, r)?,
        Target::OddPower => {
            derive_reduction(family, r, target)?;
            FieldElement::zero()
        }
    };
    let terms = family_terms(family, p as usize, z);
    run_cell(&Cell {
        family,
        r,
        p,
        e,
        z,
        target,
        constant: &constant,
        terms: &terms,
    })
}

/// Checks the family's main congruence for one `(r, p)` modulo `p^e`.
/// `z` is used by `delannoy_poly` only.
pub fn verify(family: Family, r: u32, p: u64, e: u32, z: Option<i64>) -> Result<CongruenceReport> {
    verify_target(family, r, p, e, z, Target::Main)
}

/// Checks `sum_{k<p} (2k+1)^{2r+1} D_k(z) = 0 (mod p)`.
pub fn verify_odd_power(
    family: Family,
    r: u32,
    p: u64,
    z: Option<i64>,
) -> Result<CongruenceReport> {
    verify_target(family, r, p, 1, z, Target::OddPower)
}

/// `sum_{k<p} (2k+1)^{2r+1} = 0 (mod p)` by direct summation.
pub fn odd_power_sum_zero(p: u64, r: u32) -> bool {
    let m = BigInt::from(p);
    let sum = (0..p).fold(BigInt::zero(), |acc, k| {
        acc + BigInt::from(2 * k + 1).modpow(&BigInt::from(2 * r + 1), &m)
    });
    sum.mod_floor(&m).is_zero()
}

/// The odd-power Delannoy sum as a polynomial in `z`, with every
/// coefficient reduced mod `p`; true when all of them vanish.
pub fn symbolic_odd_power_zero(p: u64, r: u32) -> bool {
    let m = BigInt::from(p);
    let mut acc = vec![BigInt::zero(); p as usize];
    for k in 0..p {
        let w = BigInt::from(2 * k + 1).modpow(&BigInt::from(2 * r + 1), &m);
        for (i, c) in delannoy_coefficients(k).iter().enumerate() {
            acc[i] = (&acc[i] + &w * c).mod_floor(&m);
        }
    }
    acc.iter().all(Zero::is_zero)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellError {
    pub family: Family,
    pub r: u32,
    pub p: Option<u64>,
    pub z: Option<i64>,
    pub message: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SweepOutcome {
    pub reports: Vec<CongruenceReport>,
    pub errors: Vec<CellError>,
}

impl SweepOutcome {
    pub fn passed(&self) -> usize {
        self.reports.iter().filter(|r| r.pass).count()
    }

    pub fn all_pass(&self) -> bool {
        self.errors.is_empty() && self.reports.iter().all(|r| r.pass)
    }

    /// One row per `(family, z, r, power)` with pass counts and prime range.
    pub fn summary_table(&self) -> String {
        // (passed, total, lowest p, highest p, e) per row
        type Row = (usize, usize, u64, u64, u32);
        let mut rows: BTreeMap<(Family, Option<i64>, u32, u32), Row> = BTreeMap::new();
        for rep in &self.reports {
            let row = rows
                .entry((rep.family, rep.z, rep.r, rep.power))
                .or_insert((0, 0, u64::MAX, 0, rep.e));
            row.0 += rep.pass as usize;
            row.1 += 1;
            row.2 = row.2.min(rep.p);
            row.3 = row.3.max(rep.p);
        }
        let mut out = format!(
            "{:<16} {:>5} {:>3} {:>6} {:>4} {:>11} {:>9}\n",
            "family", "z", "r", "power", "mod", "primes", "passed"
        );
        for ((family, z, r, power), (ok, total, lo, hi, e)) in rows {
            let z = z.map_or("-".to_string(), |z| z.to_string());
            let _ = writeln!(
                out,
                "{:<16} {:>5} {:>3} {:>6} {:>4} {:>11} {:>9}",
                family.name(),
                z,
                r,
                power,
                format!("p^{e}"),
                format!("{lo}..{hi}"),
                format!("{ok}/{total}")
            );
        }
        let _ = writeln!(
            out,
            "total: {}/{} passed, {} errors",
            self.passed(),
            self.reports.len(),
            self.errors.len()
        );
        out
    }
}

fn admissible(family: Family, p: u64, z: Option<i64>) -> bool {
    hypothesis(family, p, modulus_exponent(family), z).is_ok()
}

/// Every admissible cell with `r <= r_max` and `p <= p_max`: the main
/// congruence, plus the odd-power congruence for the Delannoy families.
/// Cells run in parallel on the current rayon pool; per-cell errors are
/// collected instead of aborting. `zs` is used by `delannoy_poly` only.
pub fn sweep(family: Family, r_max: u32, p_max: u64, zs: &[i64]) -> SweepOutcome {
    let zs: Vec<Option<i64>> = if family == Family::DelannoyPoly {
        zs.iter().copied().map(Some).collect()
    } else {
        vec![None]
    };
    let mut out = SweepOutcome::default();
    if zs.is_empty() {
        out.errors.push(CellError {
            family,
            r: 0,
            p: None,
            z: None,
            message: "delannoy_poly sweep needs at least one z".into(),
        });
        return out;
    }
    let targets: &[Target] = if family.is_apery() {
        &[Target::Main]
    } else {
        &[Target::Main, Target::OddPower]
    };
    let e = modulus_exponent(family);

    // constants depend on r only
    let mut constants = BTreeMap::new();
    for r in 0..=r_max {
        for &t in targets {
            let c = match t {
                Target::Main => derive_constant(family, r),
                Target::OddPower => derive_reduction(family, r, t).map(|_| FieldElement::zero()),
            };
            match c {
                Ok(c) => {
                    constants.insert((r, t), c);
                }
                Err(err) => out.errors.push(CellError {
                    family,
                    r,
                    p: None,
                    z: None,
                    message: err.to_string(),
                }),
            }
        }
    }
    let term_sets: Vec<(Option<i64>, Vec<BigInt>)> = zs
        .par_iter()
        .map(|&z| (z, family_terms(family, p_max as usize, z)))
        .collect();

    let primes: Vec<u64> = crate::arith::primes_in_range(2, p_max);
    let mut cells = Vec::new();
    for (z, terms) in &term_sets {
        for ((r, t), c) in &constants {
            for &p in primes.iter().filter(|&&p| admissible(family, p, *z)) {
                cells.push(Cell {
                    family,
                    r: *r,
                    p,
                    e,
                    z: *z,
                    target: *t,
                    constant: c,
                    terms,
                });
            }
        }
    }
    let results: Vec<std::result::Result<CongruenceReport, CellError>> = cells
        .par_iter()
        .map(|cell| {
            run_cell(cell).map_err(|err| CellError {
                family,
                r: cell.r,
                p: Some(cell.p),
                z: cell.z,
                message: err.to_string(),
            })
        })
        .collect();
    for res in results {
        match res {
            Ok(rep) => out.reports.push(rep),
            Err(err) => out.errors.push(err),
        }
    }
    out.reports
        .sort_by_key(|r| (r.family, r.z, r.r, r.p, r.power));
    out.errors.sort_by_key(|e| (e.family, e.z, e.r, e.p));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};
    use crate::poly::parse_poly;

    fn q(c: &FieldElement) -> Rational {
        c.as_rational().expect("rational constant")
    }

    #[test]
    fn constants_from_examples() {
        assert_eq!(q(&derive_constant(Family::Apery, 0).unwrap()), int(1));
        assert_eq!(q(&derive_constant(Family::Apery, 1).unwrap()), int(0));
        assert_eq!(q(&derive_constant(Family::Apery, 2).unwrap()), int(1));
        assert_eq!(
            q(&derive_constant(Family::DelannoyNumber, 0).unwrap()),
            int(1)
        );
        assert_eq!(
            q(&derive_constant(Family::DelannoyNumber, 1).unwrap()),
            int(13)
        );
        assert_eq!(q(&derive_constant(Family::AperySigned, 0).unwrap()), int(1));
        let c0 = derive_constant(Family::DelannoyPoly, 0).unwrap();
        assert_eq!(c0, FieldElement::one() / FieldElement::z());
    }

    #[test]
    fn apery_zero_reduction_agrees_with_shortcut() {
        let red = derive_reduction(Family::Apery, 0, Target::Main).unwrap();
        assert_eq!(red.u_coeffs[&1], FieldElement::one());
        assert!(red.v_coeffs.is_empty());
    }

    #[test]
    fn odd_delannoy_powers_are_summable() {
        for r in 0..4 {
            let red = derive_reduction(Family::DelannoyPoly, r, Target::OddPower).unwrap();
            assert!(red.u_coeffs.is_empty(), "r = {r}");
        }
        assert!(derive_reduction(Family::Apery, 1, Target::OddPower).is_err());
    }

    #[test]
    fn symbolic_constants_specialize() {
        for r in 0..4 {
            let sym = derive_constant(Family::DelannoyPoly, r).unwrap();
            let num = derive_constant(Family::DelannoyNumber, r).unwrap();
            assert_eq!(sym.eval_z(&int(1)).unwrap(), q(&num), "r = {r}");
        }
    }

    #[test]
    fn denominator_structure() {
        let a = derive_constants(Family::Apery, 10).unwrap();
        assert!(
            a.denominator_support.iter().all(|&p| p == 2),
            "{:?}",
            a.denominator_support
        );
        assert!(integrality_check(&a, 5));
        assert!(!integrality_check(&a, 2) || a.denominator_support.is_empty());
        let s = derive_constants(Family::AperySigned, 10).unwrap();
        assert!(
            s.denominator_support.iter().all(|&p| p == 3),
            "{:?}",
            s.denominator_support
        );
        assert!(integrality_check(&s, 7));
        assert!(s.unexpected_primes().is_empty());
        let d = derive_constants(Family::DelannoyPoly, 10).unwrap();
        assert!(
            d.unexpected_primes().is_empty(),
            "{:?}",
            d.denominator_support
        );
        assert!(
            d.outside_laurent_ring().is_empty(),
            "{:?}",
            d.outside_laurent_ring()
        );
    }

    #[test]
    fn laurent_ring_membership() {
        let z = FieldElement::z();
        assert!(in_inverse_4z_ring(&(FieldElement::one() / &z)));
        assert!(in_inverse_4z_ring(
            &(FieldElement::from(rat(1, 16)) / &z.pow(2))
        ));
        assert!(!in_inverse_4z_ring(&z));
        assert!(in_inverse_4z_ring(&(FieldElement::from(rat(1, 2)) / &z)));
        assert!(!in_inverse_4z_ring(&(FieldElement::from(rat(1, 8)) / &z)));
        let c = parse_poly("1/(z+1)").unwrap().coeff(0);
        assert!(!in_inverse_4z_ring(&c));
        assert!(in_inverse_4z_ring(&rat(13, 16).into()));
        assert!(!in_inverse_4z_ring(&rat(1, 3).into()));
    }

    #[test]
    fn verify_examples() {
        let rep = verify(Family::Apery, 0, 7, 3, None).unwrap();
        assert!(rep.pass);
        assert_eq!(rep.lhs, "7");
        let rep = verify(Family::Apery, 1, 5, 3, None).unwrap();
        assert!(rep.pass);
        assert_eq!((rep.lhs.as_str(), rep.rhs.as_str()), ("0", "0"));
        let rep = verify_odd_power(Family::DelannoyPoly, 3, 11, Some(2)).unwrap();
        assert!(rep.pass);
        assert_eq!(rep.lhs, "0");
        let rep = verify(Family::AperySigned, 0, 5, 3, None).unwrap();
        assert!(rep.pass);
        assert_eq!(rep.rhs, "120");
    }

    #[test]
    fn verify_rejects_bad_hypotheses() {
        for (f, p, e, z) in [
            (Family::Apery, 3, 3, None),
            (Family::Apery, 9, 3, None),
            (Family::Apery, 7, 4, None),
            (Family::DelannoyNumber, 2, 1, None),
            (Family::DelannoyPoly, 5, 1, Some(10)),
            (Family::DelannoyPoly, 5, 1, None),
            (Family::DelannoyNumber, 5, 2, None),
        ] {
            assert!(
                matches!(verify(f, 0, p, e, z), Err(Error::HypothesisViolation(_))),
                "{f} {p} {e}"
            );
        }
    }

    #[test]
    fn lower_exponent_is_allowed() {
        assert!(verify(Family::Apery, 2, 11, 2, None).unwrap().pass);
    }

    #[test]
    fn sweep_examples() {
        let s = sweep(Family::Apery, 3, 50, &[]);
        assert!(s.all_pass(), "{}", s.summary_table());
        assert!(s.reports.iter().all(|r| r.p > 3));
        assert_eq!(s.reports.len(), 4 * 13);
        let d = sweep(Family::DelannoyPoly, 2, 30, &[1, 2, 5]);
        assert!(d.all_pass(), "{}", d.summary_table());
        assert!(d.reports.iter().all(|r| r.z.unwrap() % r.p as i64 != 0));
        assert!(!d.reports.iter().any(|r| r.p == 5 && r.z == Some(5)));
        assert!(sweep(Family::DelannoyPoly, 1, 10, &[]).errors.len() == 1);
    }

    #[test]
    fn sweep_order_is_deterministic() {
        let a = sweep(Family::AperySigned, 2, 40, &[]);
        let b = sweep(Family::AperySigned, 2, 40, &[]);
        let strip = |s: &SweepOutcome| {
            s.reports
                .iter()
                .map(|r| (r.r, r.p, r.lhs.clone()))
                .collect::<Vec<_>>()
        };
        assert_eq!(strip(&a), strip(&b));
        assert!(a
            .reports
            .windows(2)
            .all(|w| (w[0].r, w[0].p) < (w[1].r, w[1].p)));
    }

    #[test]
    fn odd_power_sums() {
        assert!(odd_power_sum_zero(5, 0));
        assert!(odd_power_sum_zero(7, 2));
        assert!(odd_power_sum_zero(11, 5));
        for p in [3, 5, 7, 11, 13] {
            for r in 0..4 {
                assert!(symbolic_odd_power_zero(p, r), "p = {p}, r = {r}");
            }
        }
    }

    #[test]
    fn wrong_constant_is_caught() {
        let terms = family_terms(Family::Apery, 13, None);
        let wrong = FieldElement::one();
        let failures = [5u64, 7, 11, 13]
            .into_iter()
            .filter(|&p| {
                let cell = Cell {
                    family: Family::Apery,
                    r: 1,
                    p,
                    e: 3,
                    z: None,
                    target: Target::Main,
                    constant: &wrong,
                    terms: &terms,
                };
                !run_cell(&cell).unwrap().pass
            })
            .count();
        assert_eq!(failures, 4);
    }

    #[test]
    fn report_json_line() {
        let rep = verify(Family::Apery, 1, 7, 3, None).unwrap();
        let line = rep.to_json_line();
        assert!(!line.contains('\n'));
        let back: CongruenceReport = serde_json::from_str(&line).unwrap();
        assert_eq!(back, rep);
    }
}
