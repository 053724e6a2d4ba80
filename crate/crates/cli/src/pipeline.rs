//! Zeta computation and verification shared by the subcommands.

use codezeta::enumerator::{invariantize, mds_enumerator, simplex_enumerator};
use codezeta::rh::normalized_table;
use codezeta::zeta::{
    dual_zeta, hamming_invariant_zeta_closed, invariant_zeta, mds_invariant_zeta, simplex_zeta_closed,
    zeta_from_enumerator, zeta_oracle_linear,
};
use codezeta::{verify_rh, CodeParams, RhVerdict, Genus, QuadExt, RhOptions, UniPoly, WeightEnumerator, ZetaPolynomial};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{CliError, CliResult};
use crate::source::{CodeSource, Family};

/// Zeta polynomial of the code itself, with its genus pair when the dual is known.
pub fn plain_zeta(src: &CodeSource) -> ZetaPolynomial {
    let z = zeta_from_enumerator(&src.code);
    match &src.pair {
        Some((params, _)) => z.with_genus(Genus::Pair {
            g: params.genus(),
            g_perp: params.dual_genus(),
        }),
        None => z,
    }
}

/// Zeta polynomial of the invariantized enumerator.
///
/// Works from the side with the larger minimum distance, whose series is shorter.
pub fn invariant_from_pair(w: &WeightEnumerator, params: &CodeParams, dual: &WeightEnumerator) -> CliResult<ZetaPolynomial> {
    let (side, side_params) = if params.d_perp > params.d {
        (dual, params.dual())
    } else {
        (w, *params)
    };
    Ok(invariant_zeta(&zeta_from_enumerator(side), &side_params)?)
}

pub fn invariant(src: &CodeSource) -> CliResult<ZetaPolynomial> {
    let (params, dual) = src.pair.as_ref().ok_or_else(|| {
        CliError::BadParams("invariantizing needs a dual pair; pass --dual or a known family".into())
    })?;
    invariant_from_pair(&src.code, params, dual)
}

pub fn same_poly(a: &UniPoly, b: &UniPoly) -> bool {
    let len = a.coeffs().len().max(b.coeffs().len());
    let zero = QuadExt::zero();
    (0..len).all(|i| {
        let x = a.coeffs().get(i).unwrap_or(&zero);
        let y = b.coeffs().get(i).unwrap_or(&zero);
        (x - y).is_zero()
    })
}

/// Recomputes a zeta polynomial with the bivariate linear system. With
/// `invariantized` the oracle runs on the invariantized enumerator.
pub fn oracle_check(src: &CodeSource, z: &ZetaPolynomial, invariantized: bool) -> CliResult<()> {
    let w = if invariantized {
        let (params, dual) = src.pair.as_ref().ok_or_else(|| CliError::BadParams("no dual pair".into()))?;
        invariantize(&src.code, dual, params)?
    } else {
        src.code.clone()
    };
    let oracle = zeta_oracle_linear(&w)?;
    if !same_poly(oracle.poly(), z.poly()) {
        return Err(CliError::OracleMismatch("series and linear-system zeta polynomials differ".into()));
    }
    Ok(())
}

/// Closed form for the chosen family, when one exists.
pub fn closed_form(src: &CodeSource, invariantized: bool) -> CliResult<ZetaPolynomial> {
    let i = &src.inputs;
    let family = src.family.ok_or_else(|| CliError::BadParams("--closed-form needs a known family".into()))?;
    let z = match (family, invariantized) {
        (Family::Mds, false) => {
            let (_, params) = mds_enumerator(i.n.unwrap_or(0), i.d.unwrap_or(0), i.q.unwrap_or(0))?;
            let one = QuadExt::from_rational_in(params.q, BigRational::one());
            ZetaPolynomial::new(params.q, UniPoly::new(vec![one]), Genus::Unspecified)
        }
        (Family::Mds, true) => {
            let (n, d) = (i.n.unwrap_or(0), i.d.unwrap_or(0));
            mds_invariant_zeta(n, d.min(n + 2 - d), i.q.unwrap_or(0))?
        }
        (Family::Simplex, false) => simplex_zeta_closed(i.r.unwrap_or(0), i.q.unwrap_or(0))?,
        (Family::Hamming, false) => {
            let simplex = simplex_zeta_closed(i.r.unwrap_or(0), i.q.unwrap_or(0))?;
            let (_, params) = simplex_enumerator(i.r.unwrap_or(0), i.q.unwrap_or(0))?;
            dual_zeta(&simplex, &params)?
        }
        (Family::Hamming | Family::Simplex, true) => {
            hamming_invariant_zeta_closed(i.r.unwrap_or(0), i.q.unwrap_or(0))?
        }
        (Family::Golay | Family::File, _) => {
            return Err(CliError::BadParams("no closed form is implemented for this family".into()))
        }
    };
    Ok(z)
}

pub fn closed_form_check(src: &CodeSource, z: &ZetaPolynomial, invariantized: bool) -> CliResult<()> {
    let expected = closed_form(src, invariantized)?;
    if !same_poly(expected.poly(), z.poly()) {
        return Err(CliError::OracleMismatch("closed form and computed zeta polynomials differ".into()));
    }
    Ok(())
}

/// Options for a family; Hamming and simplex codes over F2 and F3 get a numeric verdict.
pub fn rh_options(family: Option<Family>, q: u64, grid: Option<usize>, tol: Option<f64>) -> RhOptions {
    let mut opts = RhOptions::default();
    if let Some(g) = grid {
        opts.grid = g.max(2);
        opts.max_grid = opts.max_grid.max(opts.grid);
    }
    if let Some(t) = tol {
        opts.tol = t;
    }
    opts.cap_numeric = matches!(family, Some(Family::Hamming | Family::Simplex)) && q <= 3;
    opts
}

pub fn verify(z: &ZetaPolynomial, opts: &RhOptions) -> CliResult<RhVerdict> {
    Ok(verify_rh(z, opts)?)
}

/// Normalized coefficients `a_i` scaled so that `a_0 = 1`.
pub fn table(z: &ZetaPolynomial) -> CliResult<Vec<QuadExt>> {
    Ok(normalized_table(z)?.coeffs().to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::source::{Source, SourceArgs};

    fn source(args: SourceArgs) -> CodeSource {
        match args.resolve().unwrap() {
            Source::Code(c) => c,
            Source::Zeta(..) => unreachable!(),
        }
    }

    #[test]
    fn closed_forms_agree() {
        let ham = SourceArgs {
            family: Some(Family::Hamming),
            r: Some(3),
            q: Some(2),
            ..Default::default()
        };
        let src = source(ham);
        closed_form_check(&src, &plain_zeta(&src), false).unwrap();
        closed_form_check(&src, &invariant(&src).unwrap(), true).unwrap();
        oracle_check(&src, &plain_zeta(&src), false).unwrap();
        oracle_check(&src, &invariant(&src).unwrap(), true).unwrap();

        let mds = SourceArgs {
            family: Some(Family::Mds),
            n: Some(9),
            d: Some(6),
            q: Some(7),
            ..Default::default()
        };
        let src = source(mds);
        closed_form_check(&src, &plain_zeta(&src), false).unwrap();
        closed_form_check(&src, &invariant(&src).unwrap(), true).unwrap();
    }
}
