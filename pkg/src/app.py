from __future__ import annotations

import argparse
import json
import logging
import signal
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import Any, TextIO

try:
    from dotenv import load_dotenv
except Exception:  # pragma: no cover
    def load_dotenv(*_args, **_kwargs):  # type: ignore[no-redef]
        return False

from src import __version__
from src.core.code import classify
from src.core.construct import ConstructionParams, c2_generator, grs, roth_lempel
from src.core.covering import sweep_covering, verify_covering
from src.core.criteria import (
    corollary_nmds,
    theorem2_mds,
    theorem_c2_amds,
    theorem_dual_amds,
)
from src.core.errors import BudgetExceededError, CorollaryNotApplicable, WorkbenchError
from src.core.extendable import sweep_extendable, theorem5_verdict
from src.core.fixtures import write_corpus
from src.core.gf import (
    FieldSpec,
    field_to_dict,
    make_field,
    parse_element,
    parse_elements,
    parse_modulus,
    prime_power,
    primitive_elements,
)
from src.core.models import SearchTarget
from src.core.search import search_triples
from src.core.state import OutputFormat, RunConfig, env_int
from src.core.storage import (
    code_from_dict,
    code_to_dict,
    dumps,
    element_json,
    envelope,
    load_code,
    save_sweep_csv,
    sweep_csv_text,
)
from src.infra.cancel_token import CancelToken, SweepCancelled
from src.infra.logger import make_sweep_artifact_path, setup_logging

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_CANCELLED = 130


def _add_field_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--p", type=int, default=None, help="Caracteristica (primo).")
    parser.add_argument("--m", type=int, default=None, help="Grau da extensao (default 1).")
    parser.add_argument("--q", type=int, default=None, help="Ordem do corpo (alternativa a --p/--m).")
    parser.add_argument(
        "--modulus", default=None, help="Coeficientes c0,c1,...,cm do modulo (opcional)."
    )


def _add_output_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format", choices=[f.value for f in OutputFormat], default=None, dest="output"
    )
    parser.add_argument("--json", action="store_const", const="json", dest="output")
    parser.add_argument("--workers", type=int, default=None)
    parser.add_argument("--budget", type=int, default=None)
    parser.add_argument("--debug", action="store_true")
    parser.add_argument("--timing", action="store_true", help="Inclui tempo no relatorio.")


def _add_params_args(parser: argparse.ArgumentParser, triple: bool = True) -> None:
    parser.add_argument("--alpha", required=True, help="Pontos a1,a2,... (inteiros ou g^k).")
    parser.add_argument("--k", type=int, required=True)
    if triple:
        parser.add_argument("--delta", default="0")
        parser.add_argument("--tau", default="0")
        parser.add_argument("--pi", default="0")


def build_arg_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rl-workbench",
        description="Bancada para codigos Roth-Lempel e C2 sobre GF(q)",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_field = sub.add_parser("field", help="Mostra o corpo canonico.")
    _add_field_args(p_field)
    _add_output_args(p_field)
    p_field.add_argument("--show", choices=["table", "primitive", "modulus"], default="modulus")

    p_build = sub.add_parser("build", help="Constroi GRS, Roth-Lempel ou C2.")
    _add_field_args(p_build)
    _add_output_args(p_build)
    p_build.add_argument("--family", choices=["grs", "rl", "c2"], required=True)
    _add_params_args(p_build)
    p_build.add_argument("--v", default=None, help="Multiplicadores da GRS (default 1).")
    p_build.add_argument("--out", default=None, help="Salva o JSON do codigo neste arquivo.")

    p_cls = sub.add_parser("classify", help="Classifica um codigo salvo em JSON.")
    _add_output_args(p_cls)
    p_cls.add_argument("--code", required=True, help="Arquivo JSON do codigo ('-' = stdin).")

    p_c2 = sub.add_parser("classify-c2", help="Criterios e oraculo para um C2.")
    _add_field_args(p_c2)
    _add_output_args(p_c2)
    _add_params_args(p_c2)

    p_search = sub.add_parser("search", help="Varre as q^3 triplas (delta, tau, pi).")
    _add_field_args(p_search)
    _add_output_args(p_search)
    _add_params_args(p_search, triple=False)
    p_search.add_argument("--target", choices=[t.value for t in SearchTarget], default=None)
    p_search.add_argument(
        "--emit",
        nargs="?",
        const="",
        default=None,
        help="Salva a varredura em CSV (sem caminho: logs/sweeps/ com timestamp).",
    )

    p_cov = sub.add_parser("covering", help="Raio de cobertura de RL^perp e o vetor u.")
    _add_field_args(p_cov)
    _add_output_args(p_cov)
    _add_params_args(p_cov)
    p_cov.add_argument("--sweep", action="store_true")

    p_ext = sub.add_parser("extendable", help="Extensao otima de GRS_3.")
    _add_field_args(p_ext)
    _add_output_args(p_ext)
    p_ext.add_argument("--alpha", default=None)
    p_ext.add_argument("--sweep-n", type=int, default=None, dest="sweep_n")

    p_fix = sub.add_parser("fixtures", help="Regenera o corpus de exemplos.")
    _add_output_args(p_fix)
    p_fix.add_argument("--out", default=None)
    return parser


# --- resolucao de argumentos ---------------------------------------------------


def _config(args: argparse.Namespace) -> RunConfig:
    config = RunConfig.from_env()
    if getattr(args, "output", None):
        config.output = OutputFormat(args.output)
    if getattr(args, "workers", None) is not None:
        config.workers = args.workers
    if getattr(args, "budget", None) is not None:
        config.budget = args.budget
    config.debug = config.debug or bool(getattr(args, "debug", False))
    config.timing = bool(getattr(args, "timing", False))
    return RunConfig.from_dict(config.to_dict())


def _resolve_field(args: argparse.Namespace, config: RunConfig) -> FieldSpec:
    p, m = args.p, args.m
    if args.q is not None:
        qp, qm = prime_power(args.q)
        if (p is not None and p != qp) or (m is not None and m != qm):
            raise WorkbenchError(f"--q {args.q} inconsistente com --p {p} --m {m}")
        p, m = qp, qm
    if p is None:
        raise WorkbenchError("Informe o corpo com --p/--m ou --q")
    modulus = parse_modulus(args.modulus) if args.modulus else None
    config.p, config.m = p, m or 1
    config.modulus = modulus
    return make_field(p, m or 1, modulus, bound=config.field_bound)


def _params(args: argparse.Namespace, field: FieldSpec) -> ConstructionParams:
    return ConstructionParams(
        field,
        tuple(parse_elements(field, args.alpha)),
        args.k,
        parse_element(field, args.delta),
        parse_element(field, args.tau),
        parse_element(field, args.pi),
    )


def _emit(
    config: RunConfig,
    kind: str,
    payload: dict[str, Any],
    human: Sequence[str],
    warnings: Sequence[str] = (),
    out: TextIO | None = None,
) -> None:
    stream = out or sys.stdout
    if config.output is OutputFormat.HUMAN:
        for w in warnings:
            stream.write(f"aviso: {w}\n")
        for line in human:
            stream.write(line + "\n")
        return
    stream.write(dumps(envelope(kind, payload, warnings)) + "\n")


# --- comandos --------------------------------------------------------------------


def _cmd_field(args: argparse.Namespace, config: RunConfig, out: TextIO) -> int:
    field = _resolve_field(args, config)
    prims = primitive_elements(field)
    payload: dict[str, Any] = {
        "field": field_to_dict(field),
        "modulus_text": None if field.modulus is None else str(field.gf.irreducible_poly),
        "primitive": element_json(field, field.primitive),
        "primitives": [element_json(field, g.value) for g in prims],
    }
    human = [f"GF({field.q}) = GF({field.p}^{field.m})"]
    if args.show == "modulus":
        human.append(f"modulo: {payload['modulus_text'] or '(corpo primo)'}")
    elif args.show == "primitive":
        human.append(f"primitivo canonico: {field.describe(field.primitive)}")
        human.append("primitivos: " + ", ".join(field.describe(g.value) for g in prims))
    else:
        payload["table"] = [
            {**element_json(field, v), "digits": field.digits(v)} for v in range(field.q)
        ]
        human.extend(f"{v:>6}  {field.label(v):>8}  {field.digits(v)}" for v in range(field.q))
    _emit(config, "field", payload, human, out=out)
    return EXIT_OK


def _cmd_build(args: argparse.Namespace, config: RunConfig, out: TextIO) -> int:
    field = _resolve_field(args, config)
    warnings: list[str] = []
    if args.family == "grs":
        alpha = parse_elements(field, args.alpha)
        v = None if args.v is None else parse_elements(field, args.v)
        code = grs(field, alpha, v, args.k)
    else:
        params = _params(args, field)
        warnings = params.warnings()
        if args.family == "rl":
            code = roth_lempel(field, params.alpha, params.delta, params.k)
        else:
            code = c2_generator(params)
    data = {**code_to_dict(code), "family": args.family, "warnings": warnings}
    if args.out:
        Path(args.out).parent.mkdir(parents=True, exist_ok=True)
        Path(args.out).write_text(dumps(data) + "\n", encoding="utf-8")
    if config.output is OutputFormat.HUMAN:
        for w in warnings:
            out.write(f"aviso: {w}\n")
        out.write(f"{args.family} [{code.n},{code.k}] sobre GF({field.q})\n")
        for row in code.generator.to_lists():
            out.write("  " + " ".join(f"{x:>3}" for x in row) + "\n")
    else:
        out.write(dumps({**data, "tool_version": __version__}) + "\n")
    return EXIT_OK


def _cmd_classify(args: argparse.Namespace, config: RunConfig, out: TextIO) -> int:
    if args.code == "-":
        code = code_from_dict(json.loads(sys.stdin.read()), bound=config.field_bound)
    else:
        code = load_code(args.code, bound=config.field_bound)
    result = classify(code, config.enum_limit)
    human = [f"{result.params} sobre GF({code.field.q}): {result.verdict.value} (d_dual={result.d_dual})"]
    _emit(config, "classification", result.to_dict(), human, out=out)
    return EXIT_OK


def _cmd_classify_c2(args: argparse.Namespace, config: RunConfig, out: TextIO) -> int:
    field = _resolve_field(args, config)
    params = _params(args, field)
    result = classify(c2_generator(params), config.enum_limit)
    try:
        nmds: dict[str, Any] | None = corollary_nmds(params).to_dict()
    except CorollaryNotApplicable as exc:
        logger.debug("Corolario nao se aplica: %s", exc)
        nmds = None
    payload = {
        "params": {
            "q": field.q,
            "alpha": [element_json(field, a) for a in params.alpha],
            "k": params.k,
            "delta": element_json(field, params.delta),
            "tau": element_json(field, params.tau),
            "pi": element_json(field, params.pi),
        },
        "theorem2_mds": theorem2_mds(params).to_dict(),
        "theorem_dual_amds": theorem_dual_amds(params).to_dict(),
        "theorem_c2_amds": theorem_c2_amds(params).to_dict(),
        "corollary_nmds": nmds,
        "classification": result.to_dict(),
        "verdict": result.verdict.value,
        "parameters": result.params,
    }
    triple = ", ".join(field.describe(x) for x in params.triple)
    human = [
        f"C2 sobre GF({field.q}), alpha={[field.describe(a) for a in params.alpha]}, k={params.k}",
        f"(delta, tau, pi) = ({triple})",
        f"Teorema 2: {payload['theorem2_mds']['conditions']}",
        f"veredito: {result.verdict.value} {result.params} (d_dual={result.d_dual})",
    ]
    _emit(config, "classify-c2", payload, human, params.warnings(), out=out)
    return EXIT_OK


def _cmd_search(
    args: argparse.Namespace, config: RunConfig, out: TextIO, token: CancelToken
) -> int:
    field = _resolve_field(args, config)
    target = None if args.target is None else SearchTarget(args.target)
    alpha = parse_elements(field, args.alpha)
    report = search_triples(
        field, alpha, args.k, target, config.workers, token, config.enum_limit
    )
    if args.emit is not None:
        target = args.emit or make_sweep_artifact_path(f"search_q{field.q}_k{args.k}")
        saved = save_sweep_csv(report.triples, target)
        if not args.emit:
            sys.stderr.write(f"varredura salva em {saved}\n")
    if config.output is OutputFormat.CSV:
        out.write(sweep_csv_text(report.triples))
        return EXIT_OK
    human = [
        f"GF({field.q}), alpha={alpha}, k={args.k}: {report.counts}",
        f"alvo {args.target or '-'}: {len(report.matches)} triplas",
    ]
    human.extend(
        "  (" + ", ".join(field.describe(x) for x in t.triple) + f")  d={t.d} d_dual={t.d_dual}"
        for t in report.matches
    )
    if config.timing:
        human.append(f"tempo: {report.elapsed_seconds:.2f}s")
    _emit(config, "search", report.to_dict(config.timing), human, report.warnings, out=out)
    return EXIT_OK


def _cmd_covering(
    args: argparse.Namespace, config: RunConfig, out: TextIO, token: CancelToken
) -> int:
    field = _resolve_field(args, config)
    params = _params(args, field)
    if args.sweep:
        reports = sweep_covering(
            field, params.alpha, params.k, config.workers, token, config.budget
        )
    else:
        reports = [verify_covering(params, config.budget)]
    human = [
        f"({r.delta}, {r.tau}, {r.pi}): rho={r.rho} d(u)={r.u_distance} "
        f"buraco_profundo={r.deep_hole} teorema2={r.theorem2_holds}"
        for r in reports
    ]
    payload = {"reports": [r.to_dict() for r in reports]}
    _emit(config, "covering", payload, human, params.warnings(), out=out)
    return EXIT_OK


def _cmd_extendable(
    args: argparse.Namespace, config: RunConfig, out: TextIO, token: CancelToken
) -> int:
    field = _resolve_field(args, config)
    if args.sweep_n is not None:
        reports = sweep_extendable(field, 4, args.sweep_n, workers=config.workers, token=token)
    elif args.alpha:
        reports = [theorem5_verdict(field, parse_elements(field, args.alpha))]
    else:
        raise WorkbenchError("Informe --alpha ou --sweep-n")
    human = [
        f"{list(r.alpha)}: {r.verdict.value} (previsto {r.predicted_dual_distance}, "
        f"medido {r.measured_dual_distance})"
        for r in reports
    ]
    _emit(config, "extendable", {"reports": [r.to_dict() for r in reports]}, human, out=out)
    return EXIT_OK


def _cmd_fixtures(args: argparse.Namespace, config: RunConfig, out: TextIO) -> int:
    target = write_corpus(args.out)
    _emit(config, "fixtures", {"path": str(target)}, [f"corpus gravado em {target}"], out=out)
    return EXIT_OK


def run(
    argv: Sequence[str] | None = None,
    out: TextIO | None = None,
    token: CancelToken | None = None,
) -> int:
    """Executa a CLI; devolve o codigo de saida (0, 2 uso, 3 orcamento)."""
    stream = out or sys.stdout
    token = token or CancelToken()
    parser = build_arg_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        config = _config(args)
        if config.debug:
            logging.getLogger().setLevel(logging.DEBUG)
        handlers = {
            "field": lambda: _cmd_field(args, config, stream),
            "build": lambda: _cmd_build(args, config, stream),
            "classify": lambda: _cmd_classify(args, config, stream),
            "classify-c2": lambda: _cmd_classify_c2(args, config, stream),
            "search": lambda: _cmd_search(args, config, stream, token),
            "covering": lambda: _cmd_covering(args, config, stream, token),
            "extendable": lambda: _cmd_extendable(args, config, stream, token),
            "fixtures": lambda: _cmd_fixtures(args, config, stream),
        }
        return handlers[args.command]()
    except BudgetExceededError as exc:
        logger.warning("Orcamento excedido: %s", exc)
        sys.stderr.write(f"erro: {exc}\n")
        return EXIT_BUDGET
    except (WorkbenchError, FileNotFoundError, json.JSONDecodeError) as exc:
        sys.stderr.write(f"erro: {exc}\n")
        return EXIT_USAGE
    except SweepCancelled:
        logger.warning("Execucao cancelada")
        sys.stderr.write("cancelado\n")
        return EXIT_CANCELLED


def main() -> int:
    load_dotenv()
    setup_logging(debug=bool(env_int("RLWB_DEBUG", 0)))
    token = CancelToken()
    signal.signal(signal.SIGINT, lambda *_: token.cancel())
    logger.info("rl-workbench %s iniciado: %s", __version__, sys.argv[1:])
    return run(sys.argv[1:], token=token)


if __name__ == "__main__":
    raise SystemExit(main())
