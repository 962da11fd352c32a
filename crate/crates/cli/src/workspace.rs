//! Workspace documents.
//!
//! ```text
//! liecyclic-workspace 1
//! lie sl2
//! coefficients weil 2
//! twist 0
//! seed 0
//! cap 3
//! ```
//!
//! `lie` takes a registry name or `inline` followed by a Lie body
//! (`dim`, `basis`, `brackets … end`). Coefficients are either
//! `coefficients <trivial [m] | weil <cap> | simple | adjoint>` or explicit
//! `action m … end` / `coaction m … end` blocks, at least one of them.
//! `lie` must precede the coefficient sections; every other keyword may
//! appear at most once, in any order.

use std::sync::Arc;

use liecyclic_core::io::{parse_lie_body, parse_matrix_block, parse_usize, write_lie_body, write_matrix_block, Cursor, DiagCode, Diagnostic, Line};
use liecyclic_core::lie::builtin;
use liecyclic_core::sayd::builtin::{adjoint, sl2_simple, trivial};
use liecyclic_core::weil::build_truncated_weil;
use liecyclic_core::{Action, Coaction, Lie, QMatrix, Sayd};

/// Shared dimension, then the action and coaction blocks seen so far.
type ExplicitBlocks = (usize, Option<Vec<QMatrix>>, Option<Vec<QMatrix>>);

pub const WORKSPACE_HEADER: &str = "liecyclic-workspace 1";
pub const DEFAULT_CAP: usize = 3;

#[derive(Clone, Debug, PartialEq)]
pub enum LieSource {
    Named(String),
    Inline(Lie),
}

#[derive(Clone, Debug, PartialEq)]
pub enum Coefficients {
    Trivial(usize),
    Weil(usize),
    Simple,
    Adjoint,
    /// Missing blocks are zero.
    Explicit { dim: usize, action: Option<Vec<QMatrix>>, coaction: Option<Vec<QMatrix>> },
}

#[derive(Clone, Debug, PartialEq)]
pub struct WorkspaceSpec {
    pub lie: LieSource,
    pub coefficients: Coefficients,
    /// `B_j ↦ B_j + twist·δ_j`.
    pub twist: i64,
    pub seed: u64,
    /// Tensor-level cap of the cocyclic module.
    pub cap: usize,
    lie_data: Lie,
}

impl WorkspaceSpec {
    pub fn new(lie: LieSource, coefficients: Coefficients) -> Result<Self, String> {
        let lie_data = match &lie {
            LieSource::Named(n) => builtin::by_name(n).ok_or_else(|| format!("unknown Lie algebra `{n}`"))?,
            LieSource::Inline(g) => g.clone(),
        };
        Ok(Self { lie, coefficients, twist: 0, seed: 0, cap: DEFAULT_CAP, lie_data })
    }

    pub fn lie_algebra(&self) -> &Lie {
        &self.lie_data
    }

    /// The coefficient data with the twist applied.
    pub fn sayd(&self) -> Sayd {
        let g = Arc::new(self.lie_data.clone());
        let v = match &self.coefficients {
            Coefficients::Trivial(m) => trivial(g, *m),
            Coefficients::Weil(cap) => build_truncated_weil(g, *cap),
            Coefficients::Simple => {
                let action = sl2_simple(g.clone()).expect("validated at parse time");
                Sayd::new(action, Coaction::zero(g, 2)).expect("same algebra")
            }
            Coefficients::Adjoint => {
                let n = g.dim();
                Sayd::new(adjoint(g.clone()), Coaction::zero(g, n)).expect("same algebra")
            }
            Coefficients::Explicit { dim, action, coaction } => {
                let a = match action {
                    Some(m) => Action::new(g.clone(), *dim, m.clone()).expect("shapes validated"),
                    None => Action::zero(g.clone(), *dim),
                };
                let c = match coaction {
                    Some(m) => Coaction::new(g.clone(), *dim, m.clone()).expect("shapes validated"),
                    None => Coaction::zero(g, *dim),
                };
                Sayd::new(a, c).expect("same algebra")
            }
        };
        if self.twist == 0 {
            v
        } else {
            v.delta_twist(self.twist)
        }
    }
}

fn is_sl2(lie: &LieSource) -> bool {
    matches!(lie, LieSource::Named(n) if n == "sl2")
}

fn once(seen: &mut Vec<&'static str>, key: &'static str, line: &Line<'_>) -> Result<(), Diagnostic> {
    if seen.contains(&key) {
        return Err(line.err(1, DiagCode::Syntax, format!("`{key}` given twice")));
    }
    seen.push(key);
    Ok(())
}

fn parse_int<T: std::str::FromStr>(line: &Line<'_>) -> Result<T, Diagnostic> {
    let args = line.expect_args(1)?;
    args[0].text.parse().map_err(|_| line.err(args[0].col, DiagCode::InvalidValue, format!("invalid value `{}` for `{}`", args[0].text, line.keyword())))
}

fn parse_coefficients(line: &Line<'_>, lie: &LieSource) -> Result<Coefficients, Diagnostic> {
    let args = line.args();
    let Some(name) = args.first() else { return Err(line.err(line.end_col(), DiagCode::Syntax, "`coefficients` needs a builtin name")) };
    let arg = |default: Option<usize>| -> Result<usize, Diagnostic> {
        match (args.get(1), default) {
            (Some(t), _) if args.len() == 2 => parse_usize(line, t),
            (Some(_), _) => Err(line.err(args[2].col, DiagCode::Syntax, "too many arguments")),
            (None, Some(d)) => Ok(d),
            (None, None) => Err(line.err(line.end_col(), DiagCode::Syntax, format!("`{}` needs an argument", name.text))),
        }
    };
    let no_arg = || match args.get(1) {
        Some(t) => Err(line.err(t.col, DiagCode::Syntax, format!("`{}` takes no argument", name.text))),
        None => Ok(()),
    };
    match name.text {
        "trivial" => {
            let m = arg(Some(1))?;
            if m == 0 {
                return Err(line.err(args[1].col, DiagCode::InvalidValue, "dimension must be positive"));
            }
            Ok(Coefficients::Trivial(m))
        }
        "weil" => Ok(Coefficients::Weil(arg(None)?)),
        "simple" => {
            no_arg()?;
            if !is_sl2(lie) {
                return Err(line.err(name.col, DiagCode::UnresolvedName, "the `simple` module is only registered for `sl2`"));
            }
            Ok(Coefficients::Simple)
        }
        "adjoint" => {
            no_arg()?;
            Ok(Coefficients::Adjoint)
        }
        other => Err(line.err(name.col, DiagCode::UnresolvedName, format!("unknown coefficients `{other}` (trivial, weil, simple, adjoint)"))),
    }
}

pub fn parse_workspace(text: &str) -> Result<WorkspaceSpec, Diagnostic> {
    let mut cur = Cursor::new(text);
    cur.expect_header(WORKSPACE_HEADER)?;
    let mut seen = Vec::new();
    let mut lie: Option<(LieSource, Lie)> = None;
    let mut coefficients = None;
    let mut explicit: Option<ExplicitBlocks> = None;
    let (mut twist, mut seed, mut cap) = (0i64, 0u64, DEFAULT_CAP);
    while let Some(line) = cur.next_line() {
        let need_lie = |lie: &Option<(LieSource, Lie)>| match lie {
            Some((src, g)) => Ok((src.clone(), g.dim())),
            None => Err(line.err(1, DiagCode::Syntax, format!("`{}` must come after `lie`", line.keyword()))),
        };
        match line.keyword() {
            "lie" => {
                once(&mut seen, "lie", &line)?;
                let args = line.expect_args(1)?;
                let entry = if args[0].text == "inline" {
                    let g = parse_lie_body(&mut cur)?;
                    (LieSource::Inline(g.clone()), g)
                } else {
                    let g = builtin::by_name(args[0].text).ok_or_else(|| {
                        line.err(args[0].col, DiagCode::UnresolvedName, format!("unknown Lie algebra `{}` (known: {})", args[0].text, builtin::NAMES.join(", ")))
                    })?;
                    (LieSource::Named(args[0].text.to_string()), g)
                };
                lie = Some(entry);
            }
            "coefficients" => {
                once(&mut seen, "coefficients", &line)?;
                let (src, _) = need_lie(&lie)?;
                if explicit.is_some() {
                    return Err(line.err(1, DiagCode::Syntax, "`coefficients` cannot be combined with explicit blocks"));
                }
                coefficients = Some(parse_coefficients(&line, &src)?);
            }
            kw @ ("action" | "coaction") => {
                once(&mut seen, if kw == "action" { "action" } else { "coaction" }, &line)?;
                let (_, n) = need_lie(&lie)?;
                if coefficients.is_some() {
                    return Err(line.err(1, DiagCode::Syntax, "explicit blocks cannot be combined with `coefficients`"));
                }
                let args = line.expect_args(1)?;
                let m = parse_usize(&line, &args[0])?;
                if m == 0 {
                    return Err(line.err(args[0].col, DiagCode::InvalidValue, "dimension must be positive"));
                }
                if let Some((dim, _, _)) = &explicit {
                    if *dim != m {
                        let other = if kw == "action" { "coaction" } else { "action" };
                        return Err(line.err(args[0].col, DiagCode::DimensionMismatch, format!("{kw} dimension {m} differs from {other} dimension {dim}")));
                    }
                }
                let mats = parse_matrix_block(&mut cur, n, m)?;
                let slot = explicit.get_or_insert((m, None, None));
                if kw == "action" {
                    slot.1 = Some(mats);
                } else {
                    slot.2 = Some(mats);
                }
            }
            "twist" => {
                once(&mut seen, "twist", &line)?;
                twist = parse_int(&line)?;
            }
            "seed" => {
                once(&mut seen, "seed", &line)?;
                seed = parse_int(&line)?;
            }
            "cap" => {
                once(&mut seen, "cap", &line)?;
                cap = parse_int(&line)?;
            }
            other => return Err(line.err(1, DiagCode::Syntax, format!("unknown keyword `{other}`"))),
        }
    }
    let Some((source, lie_data)) = lie else { return Err(cur.eof_error("`lie`")) };
    let coefficients = match (coefficients, explicit) {
        (Some(c), _) => c,
        (None, Some((dim, action, coaction))) => Coefficients::Explicit { dim, action, coaction },
        (None, None) => return Err(cur.eof_error("`coefficients` or an `action`/`coaction` block")),
    };
    Ok(WorkspaceSpec { lie: source, coefficients, twist, seed, cap, lie_data })
}

/// Canonical text; named references stay named.
pub fn serialize_workspace(spec: &WorkspaceSpec) -> String {
    let mut out = format!("{WORKSPACE_HEADER}\n");
    match &spec.lie {
        LieSource::Named(n) => out.push_str(&format!("lie {n}\n")),
        LieSource::Inline(g) => {
            out.push_str("lie inline\n");
            write_lie_body(&mut out, g);
        }
    }
    match &spec.coefficients {
        Coefficients::Trivial(m) => out.push_str(&format!("coefficients trivial {m}\n")),
        Coefficients::Weil(c) => out.push_str(&format!("coefficients weil {c}\n")),
        Coefficients::Simple => out.push_str("coefficients simple\n"),
        Coefficients::Adjoint => out.push_str("coefficients adjoint\n"),
        Coefficients::Explicit { action, coaction, .. } => {
            if let Some(a) = action {
                write_matrix_block(&mut out, "action", a);
            }
            if let Some(c) = coaction {
                write_matrix_block(&mut out, "coaction", c);
            }
        }
    }
    out.push_str(&format!("twist {}\nseed {}\ncap {}\n", spec.twist, spec.seed, spec.cap));
    out
}

/// Materializes the coefficients as explicit blocks, keeping the algebra reference.
pub fn explicit_form(spec: &WorkspaceSpec) -> WorkspaceSpec {
    let v = spec.sayd();
    WorkspaceSpec {
        coefficients: Coefficients::Explicit {
            dim: v.dim(),
            action: Some(v.action.mats().to_vec()),
            coaction: Some(v.coaction.mats().to_vec()),
        },
        twist: 0,
        ..spec.clone()
    }
}

/// `lie:coefficients[:arg]`, e.g. `sl2:weil:2`, as a workspace.
pub fn example(name: &str) -> Result<WorkspaceSpec, Diagnostic> {
    let parts: Vec<&str> = name.split(':').collect();
    if !(2..=3).contains(&parts.len()) || parts.iter().any(|p| p.is_empty()) {
        return Err(Diagnostic::new(1, 1, DiagCode::UnresolvedName, format!("`{name}` is neither a file nor an example `lie:coefficients[:arg]`")));
    }
    let text = format!("{WORKSPACE_HEADER}\nlie {}\ncoefficients {}\n", parts[0], parts[1..].join(" "));
    parse_workspace(&text)
}
