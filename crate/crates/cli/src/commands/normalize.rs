use clap::ValueEnum;
use loctower::amalgam::{Amalgam, Elem, FactorOracle, Order};
use serde::Serialize;

use crate::display::{k_form, l_form, toy_form, NormalForm};
use crate::error::{bail, CliResult};
use crate::report::Format;
use crate::words;

use super::Target;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Level {
    #[value(name = "K", alias = "k")]
    K,
    #[value(name = "L", alias = "l")]
    L,
}

#[derive(Serialize)]
struct Normalized {
    level: String,
    expression: String,
    #[serde(flatten)]
    form: NormalForm,
    order: String,
    /// The same element as a word of `K`, when it lies there.
    #[serde(skip_serializing_if = "Option::is_none")]
    in_k: Option<String>,
}

fn order_text<F1, F2>(am: &Amalgam<F1, F2>, x: &Elem<F1, F2>) -> String
where
    F1: FactorOracle,
    F2: FactorOracle<Edge = F1::Edge>,
{
    match am.order(x) {
        Order::Finite(n) => n.to_string(),
        Order::Infinite => "infinite".into(),
    }
}

pub fn normalize(target: &Target, expr: &str, format: Format) -> CliResult<String> {
    let parsed = words::parse(expr)?;
    let (form, order, in_k) = match target {
        Target::K(t) => {
            let x = words::eval_k(t, &parsed)?;
            (k_form(t, &x), order_text(t.k(), &x), None)
        }
        Target::L(t) => {
            let x = words::eval_l(t, &parsed)?;
            let in_k = t.l_to_k(&x).map(|k| k_form(t, &k).text());
            (l_form(t, &x), order_text(t.l(), &x), in_k)
        }
        Target::Toy(_, am) => {
            let x = words::eval_toy(am, &parsed)?;
            (toy_form(&x), order_text(am, &x), None)
        }
    };
    let out = Normalized {
        level: target.label(),
        expression: expr.into(),
        form,
        order,
        in_k,
    };
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&out)?;
            s.push('\n');
            Ok(s)
        }
        Format::Text => {
            let mut s = format!(
                "level: {}\nnormal form: {}\nlength: {}\ncyclically reduced: {}\norder: {}\n",
                out.level,
                out.form.text(),
                out.form.length,
                out.form.cyclically_reduced,
                out.order
            );
            if let Some(k) = &out.in_k {
                s.push_str(&format!("in K: {}\n", k));
            }
            Ok(s)
        }
        Format::Dot => bail!("normal forms have no DOT form; use json or text"),
    }
}
