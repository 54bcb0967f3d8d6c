//! Text renderings of exact sphere functions for the `generate` command.

use ylm_core::{Scalar, SphereFunction};

fn phase_suffix(m: i64) -> String {
    match m {
        0 => String::new(),
        1 => "\u{b7}e^(i\u{3c6})".to_string(),
        -1 => "\u{b7}e^(-i\u{3c6})".to_string(),
        m if m > 0 => format!("\u{b7}e^(i{m}\u{3c6})"),
        m => format!("\u{b7}e^(-i{}\u{3c6})", -m),
    }
}

fn coeff_atom(c: &Scalar) -> String {
    let s = c.to_string();
    if c.body().terms().count() > 1 {
        format!("({s})")
    } else {
        s
    }
}

fn theta_terms(form: &ylm_core::ThetaForm) -> Vec<String> {
    let mut terms = Vec::new();
    for (k, c) in form.even().coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut t = coeff_atom(c);
        match k {
            0 => {}
            1 => t.push_str("\u{b7}cos(\u{3b8})"),
            _ => t.push_str(&format!("\u{b7}cos^{k}(\u{3b8})")),
        }
        terms.push(t);
    }
    for (k, c) in form.odd().coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut t = coeff_atom(c);
        t.push_str("\u{b7}sin(\u{3b8})");
        match k {
            0 => {}
            1 => t.push_str("\u{b7}cos(\u{3b8})"),
            _ => t.push_str(&format!("\u{b7}cos^{k}(\u{3b8})")),
        }
        terms.push(t);
    }
    terms
}

/// One line per Fourier mode, exact coefficients.
pub fn exact(f: &SphereFunction) -> String {
    if f.is_zero() {
        return "  0\n".to_string();
    }
    let mut out = String::new();
    for (m, form) in f.modes() {
        let joined = theta_terms(form).join(" + ");
        out.push_str(&format!("  m={m:+}: [{joined}]{}\n", phase_suffix(*m)));
    }
    out
}

fn rational_latex(r: &str) -> String {
    let (sign, body) = match r.strip_prefix('-') {
        Some(rest) => ("-", rest),
        None => ("", r),
    };
    match body.split_once('/') {
        Some((num, den)) => format!("{sign}\\frac{{{num}}}{{{den}}}"),
        None => format!("{sign}{body}"),
    }
}

fn scalar_latex(c: &Scalar) -> String {
    if c.is_zero() {
        return "0".to_string();
    }
    let mut parts = Vec::new();
    for (rad, coeff) in c.body().terms() {
        let mut t = String::new();
        let cs = coeff.to_string();
        if rad.to_string() == "1" {
            t.push_str(&rational_latex(&cs));
        } else {
            if cs != "1" {
                if cs == "-1" {
                    t.push('-');
                } else {
                    t.push_str(&rational_latex(&cs));
                }
            }
            t.push_str(&format!("\\sqrt{{{rad}}}"));
        }
        parts.push(t);
    }
    let mut out = parts.join(" + ");
    let e = c.pi_exponent();
    if e != 0 {
        if parts.len() > 1 {
            out = format!("\\left({out}\\right)");
        }
        if e == 2 {
            out.push_str("\\pi");
        } else if e % 2 == 0 {
            out.push_str(&format!("\\pi^{{{}}}", e / 2));
        } else {
            out.push_str(&format!("\\pi^{{{e}/2}}"));
        }
    }
    out
}

fn latex_phase(m: i64) -> String {
    match m {
        0 => String::new(),
        1 => "e^{i\\phi}".to_string(),
        -1 => "e^{-i\\phi}".to_string(),
        m => format!("e^{{{m}i\\phi}}"),
    }
}

/// Single-line LaTeX expression.
pub fn latex(f: &SphereFunction) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let mut mode_parts = Vec::new();
    for (m, form) in f.modes() {
        let mut terms = Vec::new();
        for (k, c) in form.even().coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let trig = match k {
                0 => String::new(),
                1 => "\\cos\\theta".to_string(),
                _ => format!("\\cos^{{{k}}}\\theta"),
            };
            terms.push(format!("{}\\,{}", scalar_latex(c), trig));
        }
        for (k, c) in form.odd().coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let trig = match k {
                0 => "\\sin\\theta".to_string(),
                1 => "\\sin\\theta\\cos\\theta".to_string(),
                _ => format!("\\sin\\theta\\cos^{{{k}}}\\theta"),
            };
            terms.push(format!("{}\\,{}", scalar_latex(c), trig));
        }
        mode_parts.push(format!(
            "\\left[{}\\right]{}",
            terms.join(" + "),
            latex_phase(*m)
        ));
    }
    mode_parts.join(" + ")
}
