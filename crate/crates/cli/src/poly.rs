//! The `poly` command: compute one row of a family, or a triangle of rows,
//! by one or more routes. When several routes are requested they are
//! cross-checked coefficient-for-coefficient and any disagreement exits 1.

use serde_json::json;
use stirlab_core::exactmath::{factorial, IntPolynomial};
use stirlab_core::identities::routes;
use stirlab_core::objects::k_stirling_count;

use crate::output::{coeff_strings, Emitter};
use crate::{ensure_within_cap, CmdError, CmdResult, Family, Format, PolyArgs, Route};

pub fn run(args: &PolyArgs, emitter: &mut Emitter) -> CmdResult {
    let request = PolyRequest::validate(args)?;
    let mut rows = Vec::new();
    for n in request.n_lo..=request.n_hi {
        let row = if request.routes.is_empty() {
            match request.family {
                Family::P => routes::second_order_eulerian(n),
                Family::Stirling1 => routes::stirling1_row(n),
                _ => unreachable!("only route-less families reach here"),
            }
        } else {
            let mut computed: Vec<(Route, IntPolynomial)> =
                Vec::with_capacity(request.routes.len());
            for &route in &request.routes {
                computed.push((route, compute(request.family, route, n, request.k)?));
            }
            let (first_route, first) = computed[0].clone();
            for (route, poly) in &computed[1..] {
                if *poly != first {
                    return Err(CmdError::Mismatch(format!(
                        "route disagreement for {} at n={n}{}: {} gives {first} but {} gives {poly}",
                        family_name(request.family),
                        request.k.map(|k| format!(", k={k}")).unwrap_or_default(),
                        first_route.name(),
                        route.name(),
                    )));
                }
            }
            first
        };
        rows.push((n, row));
    }
    emit(&request, &rows, emitter)
}

struct PolyRequest {
    family: Family,
    k: Option<usize>,
    routes: Vec<Route>,
    n_lo: usize,
    n_hi: usize,
    triangle: bool,
}

impl PolyRequest {
    fn validate(args: &PolyArgs) -> Result<Self, CmdError> {
        let family = args.family;
        match family {
            Family::A | Family::B => {
                if args.k.is_none() {
                    return Err(CmdError::Usage(format!(
                        "family {} requires --k",
                        family_name(family)
                    )));
                }
                if args.k == Some(0) {
                    return Err(CmdError::Usage("--k must be >= 1".into()));
                }
            }
            Family::C | Family::P | Family::Stirling1 => {
                if args.k.is_some() {
                    return Err(CmdError::Usage(format!(
                        "family {} does not take --k",
                        family_name(family)
                    )));
                }
            }
        }

        let (n_lo, n_hi, triangle) = match (args.n, args.n_max) {
            (Some(n), None) => (n, n, false),
            (None, Some(n_max)) => (if family == Family::C { 0 } else { 1 }, n_max, true),
            _ => {
                return Err(CmdError::Usage(
                    "give exactly one of --n and --n-max".into(),
                ))
            }
        };
        if n_lo > n_hi {
            return Err(CmdError::Usage("empty range: --n-max must be >= 1".into()));
        }
        if n_hi == 0 && family != Family::C {
            return Err(CmdError::Usage(format!(
                "family {} needs n >= 1",
                family_name(family)
            )));
        }

        let routes = match family {
            Family::P | Family::Stirling1 => {
                if !args.route.is_empty() {
                    return Err(CmdError::Usage(format!(
                        "family {} has a single built-in route and does not take --route",
                        family_name(family)
                    )));
                }
                Vec::new()
            }
            Family::A | Family::B => {
                if args.route.is_empty() {
                    vec![Route::Recurrence]
                } else {
                    args.route.clone()
                }
            }
            Family::C => {
                if args.route.is_empty() {
                    vec![Route::Def]
                } else {
                    args.route.clone()
                }
            }
        };
        let k = args.k;
        for &route in &routes {
            check_route(family, route, k)?;
        }
        // the n = 0 row exists only on the division route of family C:
        // triangles with a run route start at 1, a bare --n 0 is an error
        let n_lo = if routes.contains(&Route::Run) && n_lo == 0 {
            if !triangle {
                return Err(CmdError::Usage(
                    "the run route needs n >= 1 (the n = 0 row exists only by definition)".into(),
                ));
            }
            1
        } else {
            n_lo
        };

        let request = PolyRequest {
            family,
            k,
            routes,
            n_lo,
            n_hi,
            triangle,
        };
        for n in request.n_lo..=request.n_hi {
            request.check_caps(n)?;
        }
        Ok(request)
    }

    fn check_caps(&self, n: usize) -> CmdResult {
        for &route in &self.routes {
            match route {
                Route::ExcCyc => {
                    ensure_within_cap("the excedance-cycle route", &factorial(n))?;
                }
                Route::Invseq | Route::Ap => {
                    let k = self.k.expect("validated");
                    ensure_within_cap(
                        "the word/inversion-sequence route",
                        &k_stirling_count(n, k),
                    )?;
                }
                Route::Ipk | Route::Lpk | Route::Run => {
                    ensure_within_cap("the dual-set route", &k_stirling_count(n, 2))?;
                }
                Route::Recurrence | Route::Def => {}
            }
        }
        if self.family == Family::P {
            ensure_within_cap("the second-order Eulerian row", &k_stirling_count(n, 2))?;
        }
        Ok(())
    }
}

fn check_route(family: Family, route: Route, k: Option<usize>) -> CmdResult {
    let ok = match family {
        Family::A => matches!(
            route,
            Route::Recurrence | Route::ExcCyc | Route::Invseq | Route::Ap | Route::Ipk
        ),
        Family::B => matches!(route, Route::Recurrence | Route::Ap | Route::Lpk),
        Family::C => matches!(route, Route::Def | Route::Run),
        Family::P | Family::Stirling1 => false,
    };
    if !ok {
        return Err(CmdError::Usage(format!(
            "route {} does not apply to family {}",
            route.name(),
            family_name(family)
        )));
    }
    if route == Route::Ap && k.is_some_and(|k| k < 2) {
        return Err(CmdError::Usage(
            "the ascent-plateau route needs k >= 2".into(),
        ));
    }
    if matches!(route, Route::Ipk | Route::Lpk) && k != Some(2) {
        return Err(CmdError::Usage(format!(
            "the {} route is defined on the dual set and needs k = 2",
            route.name()
        )));
    }
    Ok(())
}

fn compute(
    family: Family,
    route: Route,
    n: usize,
    k: Option<usize>,
) -> Result<IntPolynomial, CmdError> {
    let poly = match (family, route) {
        (Family::A, Route::Recurrence) => routes::a_by_recurrence(n, k.expect("validated")),
        (Family::A, Route::ExcCyc) => routes::a_by_exc_cyc(n, k.expect("validated")),
        (Family::A, Route::Invseq) => routes::a_by_inv_ascents(n, k.expect("validated")),
        (Family::A, Route::Ap) => {
            routes::a_by_ascent_plateau(n, k.expect("validated")).expect("k >= 2 validated")
        }
        (Family::A, Route::Ipk) => routes::a2_by_interior_peaks(n),
        (Family::B, Route::Recurrence) => routes::b_by_recurrence(n, k.expect("validated")),
        (Family::B, Route::Ap) => {
            routes::b_by_ascent_plateau0(n, k.expect("validated")).expect("k >= 2 validated")
        }
        (Family::B, Route::Lpk) => routes::a2_reversed_by_left_peaks(n),
        (Family::C, Route::Def) => routes::c_by_definition(n).map_err(|e| {
            CmdError::Mismatch(format!(
                "the C definition failed to divide exactly at n={n}: {e}"
            ))
        })?,
        (Family::C, Route::Run) => routes::c_by_runs(n),
        _ => unreachable!("routes validated per family"),
    };
    Ok(poly)
}

fn family_name(family: Family) -> &'static str {
    match family {
        Family::A => "A",
        Family::B => "B",
        Family::C => "C",
        Family::P => "P",
        Family::Stirling1 => "stirling1",
    }
}

fn emit(
    request: &PolyRequest,
    rows: &[(usize, IntPolynomial)],
    emitter: &mut Emitter,
) -> CmdResult {
    let route_names: Vec<&str> = request.routes.iter().map(|r| r.name()).collect();
    match emitter.format {
        Format::Text => {
            for (n, poly) in rows {
                if request.triangle {
                    emitter.line(&format!("n={n}: {poly}"))?;
                } else {
                    emitter.line(&poly.to_string())?;
                }
            }
        }
        Format::Json => {
            let mut params = json!({
                "family": family_name(request.family),
            });
            if !route_names.is_empty() {
                params["route"] = json!(route_names);
            }
            if let Some(k) = request.k {
                params["k"] = json!(k);
            }
            if request.triangle {
                params["n_max"] = json!(request.n_hi);
                let payload: Vec<_> = rows
                    .iter()
                    .map(|(n, poly)| json!({"n": n, "coeffs": coeff_strings(poly)}))
                    .collect();
                emitter.record("triangle", params, json!({ "rows": payload }))?;
            } else {
                params["n"] = json!(request.n_lo);
                let payload = json!({"coeffs": coeff_strings(&rows[0].1)});
                emitter.record("poly", params, payload)?;
            }
        }
        Format::Csv => {
            let width = rows
                .iter()
                .map(|(_, poly)| poly.coeffs().len())
                .max()
                .unwrap_or(0);
            let header: Vec<String> = std::iter::once("n".to_string())
                .chain((0..width).map(|j| format!("c{j}")))
                .collect();
            emitter.line(&header.join(","))?;
            for (n, poly) in rows {
                let mut cells = vec![n.to_string()];
                let coeffs = coeff_strings(poly);
                for j in 0..width {
                    cells.push(coeffs.get(j).cloned().unwrap_or_default());
                }
                emitter.line(&cells.join(","))?;
            }
        }
    }
    Ok(())
}
