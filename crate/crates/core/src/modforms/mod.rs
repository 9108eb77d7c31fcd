//! Named modular and quasimodular forms as exact q-series.

pub mod eisenstein;
pub mod eta;
pub mod gamma3;
pub mod numeric;
pub mod theta;

pub use eisenstein::{
    bernoulli, delta_derivation, delta_power, delta_prefactor, discriminant_eisenstein,
    discriminant_product, divisor_sum, duke_jenkins, duke_jenkins_series, eisenstein,
    euler_product, j_invariant, j_minus_1728, residue_exponents, serre_derivative, DukeJenkins,
    IdentityCheck,
};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::qseries::{Exp, QSeries};

/// A form together with the bookkeeping needed to interpret its series.
#[derive(Clone, Debug, Serialize)]
pub struct NamedForm {
    pub id: String,
    /// Rational weight; quasimodular forms report their nominal weight.
    #[serde(serialize_with = "ser_exp")]
    pub weight: Exp,
    pub group: &'static str,
    pub series: QSeries,
}

fn ser_exp<S: serde::Serializer>(e: &Exp, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format!("{}/{}", e.numer(), e.denom()))
}

fn form(id: &str, weight: Exp, group: &'static str, series: QSeries) -> NamedForm {
    NamedForm { id: id.to_string(), weight, group, series }
}

fn w(n: i64) -> Exp {
    Exp::from_integer(n)
}

/// Ids accepted by [`named_form`] besides the `E<k>` and `F_k:<k>` families.
pub const FORM_IDS: &[&str] = &[
    "Delta", "j", "j_minus_1728", "delta_prefactor", "theta2", "theta3", "theta4", "lambda",
    "mu", "phi1", "phi2", "F2", "H2", "eta", "klein_1/5", "f_gamma5", "eta_gamma3", "eta_gamma4",
];

/// Look up a form by id and expand it below `q^order`.
pub fn named_form(id: &str, order: i64) -> Result<NamedForm> {
    if order < 1 {
        return Err(Error::InvalidArgument(format!("order {order} must be positive")));
    }
    if let Some(k) = id.strip_prefix("F_k:") {
        let k: i64 = k.parse().map_err(|_| Error::UnknownForm(id.to_string()))?;
        return Ok(form(id, w(k), "SL2(Z)", duke_jenkins_series(k, order)?));
    }
    if let Some(k) = id.strip_prefix('E') {
        if let Ok(k) = k.parse::<u32>() {
            let s = eisenstein(k, order).map_err(|_| Error::UnknownForm(id.to_string()))?;
            return Ok(form(id, w(k as i64), "SL2(Z)", s));
        }
    }
    let half = Exp::new(1, 2);
    Ok(match id {
        "Delta" => form(id, w(12), "SL2(Z)", discriminant_product(order)),
        "j" => form(id, w(0), "SL2(Z)", j_invariant(order)),
        "j_minus_1728" | "j-1728" => form(id, w(0), "SL2(Z)", j_minus_1728(order)),
        "delta_prefactor" => form(id, w(0), "SL2(Z)", delta_prefactor(order)),
        "theta2" => form(id, half, "Gamma(2)", theta::theta2(order)),
        "theta3" => form(id, half, "Gamma(2)", theta::theta3(order)),
        "theta4" => form(id, half, "Gamma(2)", theta::theta4(order)),
        "lambda" => form(id, w(0), "Gamma(2)", theta::lambda(order)),
        "mu" => form(id, w(0), "Gamma(4)", theta::mu(order)),
        "phi1" => form(id, w(1), "Gamma(3)", gamma3::phi1(order)),
        "phi2" => form(id, w(1), "Gamma(3)", gamma3::phi2(order)),
        "F2" => form(id, w(2), "Gamma(2)", theta::f2(order)),
        "H2" => form(id, w(2), "Gamma(2)", theta::h2(order)),
        "eta" => form(id, half, "SL2(Z)", eta::dedekind_eta(order)),
        "klein_1/5" => form(id, w(-1), "Gamma(5)", eta::klein_form(Exp::new(1, 5), w(5), order)),
        "f_gamma5" => form(id, eta::gamma5_form_weight(), "Gamma(5)", eta::gamma5_form(order)),
        "eta_gamma3" => form(id, w(1), "Gamma(3)", eta::gamma3_eta_form(order)),
        "eta_gamma4" => form(id, w(1), "Gamma(4)", eta::gamma4_eta_form(order)),
        _ => return Err(Error::UnknownForm(id.to_string())),
    })
}
