use ins_core::dsl::{evaluate, format_json, format_set, parse_expr, Value};

use crate::{emit, read_sets, EvalArgs, Failure, Format, Outcome};

const RESULT_NAME: &str = "result";

pub fn run(args: &EvalArgs) -> Outcome {
    let env = read_sets(&args.sets)?;
    let expr = parse_expr(&args.expr).map_err(|e| Failure::Usage(format!("expr:{e}")))?;
    let value = evaluate(&expr, &env).map_err(|e| {
        let msg = format!("expr:{e}");
        if e.kind.is_syntax() {
            Failure::Usage(msg)
        } else {
            Failure::Semantic(msg)
        }
    })?;
    let precision = usize::from(args.precision);
    let out = match (&value, args.format) {
        (Value::Bool(b), _) => format!("{b}\n"),
        (Value::Set(s), Format::Text) => format_set(RESULT_NAME, s, precision),
        (Value::Paired(s), Format::Text) => format_set(RESULT_NAME, s, precision),
        (Value::Set(s), Format::Json) => format_json(RESULT_NAME, s, precision) + "\n",
        (Value::Paired(s), Format::Json) => format_json(RESULT_NAME, s, precision) + "\n",
    };
    emit(&out);
    Ok(true)
}
