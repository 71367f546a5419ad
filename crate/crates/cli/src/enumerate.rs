//! The `enum` command: stream a combinatorial family one object per line.
//! Orders are the library's documented deterministic orders; nothing is
//! materialized, so large families stream in constant memory (subject to
//! the STIRLAB_MAX_OBJECTS cap).

use serde_json::json;
use stirlab_core::exactmath::factorial;
use stirlab_core::objects::{
    dual_permutations, inversion_sequence_count, inversion_sequences, k_stirling_count,
    k_stirling_words, permutations,
};

use crate::output::Emitter;
use crate::{ensure_within_cap, CmdError, CmdResult, EnumArgs, EnumFamily, Format};

pub fn run(args: &EnumArgs, emitter: &mut Emitter) -> CmdResult {
    if emitter.format == Format::Csv {
        return Err(CmdError::Usage(
            "csv output applies to poly rows only".into(),
        ));
    }
    let n = args.n;
    if n == 0 {
        return Err(CmdError::Usage("--n must be >= 1".into()));
    }
    match args.family {
        EnumFamily::Perm => {
            reject_k(args, "perm")?;
            ensure_within_cap("enum perm", &factorial(n))?;
            for p in permutations(n) {
                emit_item(emitter, "perm", n, None, &p.to_string())?;
            }
        }
        EnumFamily::Invseq => {
            let k = require_k(args, "invseq")?;
            ensure_within_cap("enum invseq", &inversion_sequence_count(n, k))?;
            for e in inversion_sequences(n, k) {
                emit_item(emitter, "invseq", n, Some(k), &e.to_string())?;
            }
        }
        EnumFamily::Qnk => {
            let k = require_k(args, "qnk")?;
            ensure_within_cap("enum qnk", &k_stirling_count(n, k))?;
            for w in k_stirling_words(n, k) {
                emit_item(emitter, "qnk", n, Some(k), &w.to_string())?;
            }
        }
        EnumFamily::Dual => {
            reject_k(args, "dual")?;
            ensure_within_cap("enum dual", &k_stirling_count(n, 2))?;
            for (word, dual) in dual_permutations(n) {
                let image = dual.permutation();
                match emitter.format {
                    Format::Text => emitter.line(&format!("{word} -> {image}"))?,
                    Format::Json => emitter.record(
                        "enum",
                        json!({"family": "dual", "n": n}),
                        json!({"word": word.to_string(), "image": image.to_string()}),
                    )?,
                    Format::Csv => unreachable!("rejected above"),
                }
            }
        }
    }
    Ok(())
}

fn require_k(args: &EnumArgs, family: &str) -> Result<usize, CmdError> {
    match args.k {
        Some(k) if k >= 1 => Ok(k),
        Some(_) => Err(CmdError::Usage("--k must be >= 1".into())),
        None => Err(CmdError::Usage(format!("enum {family} requires --k"))),
    }
}

fn reject_k(args: &EnumArgs, family: &str) -> CmdResult {
    if args.k.is_some() {
        return Err(CmdError::Usage(format!(
            "enum {family} does not take --k{}",
            if family == "dual" {
                " (it is fixed at 2)"
            } else {
                ""
            }
        )));
    }
    Ok(())
}

fn emit_item(
    emitter: &mut Emitter,
    family: &str,
    n: usize,
    k: Option<usize>,
    item: &str,
) -> CmdResult {
    match emitter.format {
        Format::Text => emitter.line(item)?,
        Format::Json => {
            let mut params = json!({"family": family, "n": n});
            if let Some(k) = k {
                params["k"] = json!(k);
            }
            emitter.record("enum", params, json!(item))?;
        }
        Format::Csv => unreachable!("rejected above"),
    }
    Ok(())
}
