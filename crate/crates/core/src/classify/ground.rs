use crate::arith::{
    irreducibility_certificate, quadratic_irreducibility_certificate, rational_roots, ArithError,
    Field, IrreducibilityCertificate, IrreducibilityStatus, Poly, QuadFieldElem, Rational,
};
use crate::galois::{galois_group_small_degree, GaloisGroupReport};

/// A real ground field the classifier can work over: Q or `Q(√d)`.
pub trait Ground: Field {
    fn render(f: &Poly<Self>) -> String;

    fn certificate(f: &Poly<Self>) -> Result<IrreducibilityCertificate<Self>, ArithError>;

    /// A root in the ground field of a polynomial of degree at most 3, when
    /// one can be certified.
    fn root_in_field(g: &Poly<Self>) -> Option<Self>;

    /// Galois group of an irreducible quartic, where supported.
    fn quartic_galois_group(f: &Poly<Self>) -> Option<GaloisGroupReport>;
}

impl Ground for Rational {
    fn render(f: &Poly<Self>) -> String {
        f.to_string()
    }

    fn certificate(f: &Poly<Self>) -> Result<IrreducibilityCertificate<Self>, ArithError> {
        irreducibility_certificate(f)
    }

    fn root_in_field(g: &Poly<Self>) -> Option<Self> {
        rational_roots(g)?.into_iter().next()
    }

    fn quartic_galois_group(f: &Poly<Self>) -> Option<GaloisGroupReport> {
        galois_group_small_degree(f).ok()
    }
}

impl Ground for QuadFieldElem {
    fn render(f: &Poly<Self>) -> String {
        f.to_string()
    }

    fn certificate(f: &Poly<Self>) -> Result<IrreducibilityCertificate<Self>, ArithError> {
        quadratic_irreducibility_certificate(f)
    }

    fn root_in_field(g: &Poly<Self>) -> Option<Self> {
        if g.deg() == 1 {
            return Some(-(g.coeff(0) / &g.coeff(1)));
        }
        if g.deg() > 3 {
            return None;
        }
        match quadratic_irreducibility_certificate(g).ok()?.status {
            IrreducibilityStatus::Reducible(h) => {
                // a proper factor of a cubic or quadratic has a linear factor
                // itself or as its cofactor
                let lin = if h.deg() == 1 {
                    h
                } else {
                    g.div_rem(&h).ok()?.0
                };
                (lin.deg() == 1).then(|| -(lin.coeff(0) / &lin.coeff(1)))
            }
            _ => None,
        }
    }

    fn quartic_galois_group(_: &Poly<Self>) -> Option<GaloisGroupReport> {
        None
    }
}
