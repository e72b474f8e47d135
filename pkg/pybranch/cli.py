"""
Command-line front end.

    pybranch fan --injection preset:B1-in-A2
    pybranch branch --injection preset:A2_2-in-A2_1 --hw fw:1,0,0 --cutoff 10 --format qseries
    pybranch weights --algebra G2 --hw fw:1,0
    pybranch singular --algebra "A2^(1)" --hw fw:1,0,0 --cutoff 9 --format json
    pybranch denominator-check --algebra "A2^(2)" --cutoff 6
"""
from pathlib import Path
from typing import Any, Dict, List, Optional
import argparse
import logging
import sys

from . import __version__
from .algebras import expand_denominator, singular_weights
from .brancher import Brancher
from .branching import extract_branching, weight_multiplicities
from .config import Command, OutputFormat, RunConfig
from .exceptions import PyBranchError, SchemaError
from .injections import load_injection
from .utils.formatting import (
    diagram_dict,
    dump_json,
    fan_dict,
    render_branching,
    render_diagram,
    render_fan,
    render_qseries,
    render_series,
    series_rows,
)
from .utils.parsing import parse_algebra, parse_highest_weight

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='pybranch',
        description='Branching coefficients of finite and affine Lie algebras by the fan recursion.',
    )
    parser.add_argument('--version', action='version', version=f"%(prog)s {__version__}")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--cutoff', help='grade depth below the highest weight (p or p/q)')
    common.add_argument('--format', dest='format', choices=[f.value for f in OutputFormat])
    common.add_argument('--out', dest='out', help='write the rendered result to PATH')
    common.add_argument('--config', dest='config', help='JSON run configuration; flags override it')
    common.add_argument('--max-cutoff', dest='max_cutoff', type=int, help='largest accepted cutoff')
    common.add_argument('--fan-cutoff', dest='fan_cutoff', help='depth of the fan (defaults to --cutoff)')
    common.add_argument('-v', '--verbose', action='store_true', default=None, help='debug logging on stderr')

    commands = parser.add_subparsers(dest='command', required=True)

    fan = commands.add_parser(Command.FAN.value, parents=[common], help='carrier and fan of an injection')
    fan.add_argument('--injection', help='preset:NAME or path to injection JSON')

    branch = commands.add_parser(Command.BRANCH.value, parents=[common], help='branching coefficients')
    branch.add_argument('--injection', help='preset:NAME or path to injection JSON')
    branch.add_argument('--hw', help='highest weight: fw:a,b,... or ortho:x,...;level;grade or JSON')
    branch.add_argument('--method', choices=['fan', 'star'])

    weights = commands.add_parser(
        Command.WEIGHTS.value,
        parents=[common],
        help='weight multiplicities',
        epilog=(
            'G2 labels its long simple root α1: fw:1,0 is the 14-dimensional adjoint, '
            'fw:0,1 the 7-dimensional module.'
        ),
    )
    weights.add_argument('--algebra', help='A2, G2, A2^(1), A2^(2) or JSON descriptor')
    weights.add_argument('--hw', help='highest weight')

    singular = commands.add_parser(Command.SINGULAR.value, parents=[common], help='singular weights Ψ^(μ)')
    singular.add_argument('--algebra', help='A2, G2, A2^(1), A2^(2) or JSON descriptor')
    singular.add_argument('--hw', help='highest weight')

    denominator = commands.add_parser(
        Command.DENOMINATOR_CHECK.value, parents=[common], help='check Ψ^(0) against the root product'
    )
    denominator.add_argument('--algebra', help='A2, G2, A2^(1), A2^(2) or JSON descriptor')
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    """Merge a --config file with explicit flags, flags winning."""
    overrides: Dict[str, Any] = {
        'command': args.command,
        'algebra': getattr(args, 'algebra', None),
        'injection': getattr(args, 'injection', None),
        'highest_weight': getattr(args, 'hw', None),
        'cutoff': args.cutoff,
        'fan_cutoff': args.fan_cutoff,
        'method': getattr(args, 'method', None),
        'format': args.format,
        'output_path': args.out,
        'max_cutoff': args.max_cutoff,
        'verbose': args.verbose,
    }
    if args.config:
        return RunConfig.from_file(args.config, overrides)
    return RunConfig.from_dict({k: v for k, v in overrides.items() if v is not None})


def _emit(text: str, config: RunConfig) -> None:
    if config.output_path:
        try:
            Path(config.output_path).write_text(text + '\n', encoding='utf-8')
        except OSError as e:
            raise SchemaError(f"Cannot write {config.output_path}: {e}") from e
        logger.debug(f"Wrote {config.output_path}")
    else:
        print(text)


def _run_fan(config: RunConfig) -> int:
    brancher = Brancher(load_injection(config.injection))
    depth = config.cutoff if config.fan_cutoff is None else config.fan_cutoff
    fan = brancher.fan(depth)
    sub = brancher.sub
    if config.output_format is OutputFormat.JSON:
        data = fan_dict(fan, sub)
        data['injection'] = brancher.injection.name
        _emit(dump_json(data), config)
    else:
        _emit(f"Fan of {brancher.injection.name}\n" + render_fan(fan, sub), config)
    return 0


def _run_branch(config: RunConfig) -> int:
    brancher = Brancher(load_injection(config.injection))
    mu = parse_highest_weight(config.highest_weight, brancher.ambient)
    table = brancher.anomalous(mu, config.cutoff, config.method, config.fan_cutoff)
    result = extract_branching(table, brancher.sub)
    if config.output_format is OutputFormat.JSON:
        data = result.to_dict()
        data['injection'] = brancher.injection.name
        data['cutoff'] = str(config.cutoff)
        data['anomalous'] = table.to_dict()
        _emit(dump_json(data), config)
    elif config.output_format is OutputFormat.QSERIES:
        _emit(render_qseries(result, brancher.sub), config)
    else:
        _emit(render_branching(result, brancher.sub), config)
    return 0


def _run_weights(config: RunConfig) -> int:
    spec = parse_algebra(config.algebra)
    mu = parse_highest_weight(config.highest_weight, spec)
    diagram = weight_multiplicities(spec, mu, config.cutoff)
    if config.output_format is OutputFormat.JSON:
        _emit(dump_json(diagram_dict(diagram, spec)), config)
    else:
        _emit(render_diagram(diagram, spec), config)
    return 0


def _run_singular(config: RunConfig) -> int:
    spec = parse_algebra(config.algebra)
    mu = parse_highest_weight(config.highest_weight, spec)
    element = singular_weights(spec, mu, config.cutoff)
    if config.output_format is OutputFormat.JSON:
        _emit(dump_json(element.to_dict()), config)
    else:
        _emit(f"{len(element.series)} singular weights\n" + render_series(element.series, spec), config)
    return 0


def _run_denominator_check(config: RunConfig) -> int:
    spec = parse_algebra(config.algebra)
    psi = singular_weights(spec, spec.zero(), config.cutoff).series
    product = expand_denominator(spec, config.cutoff)
    difference = psi - product
    agree = not difference
    if config.output_format is OutputFormat.JSON:
        _emit(dump_json({
            'algebra': spec.label,
            'cutoff': str(config.cutoff),
            'agree': agree,
            'terms': len(psi),
            'mismatches': series_rows(difference, spec),
        }), config)
    elif agree:
        _emit(f"{spec.label}: Ψ^(0) and the root product agree on {len(psi)} terms", config)
    else:
        _emit(
            f"{spec.label}: {len(difference)} mismatching terms\n" + render_series(difference, spec), config
        )
    return 0 if agree else 1


RUNNERS = {
    Command.FAN: _run_fan,
    Command.BRANCH: _run_branch,
    Command.WEIGHTS: _run_weights,
    Command.SINGULAR: _run_singular,
    Command.DENOMINATOR_CHECK: _run_denominator_check,
}


def run(config: RunConfig) -> int:
    """
    Execute a validated configuration and write its output.

    Returns:
        Exit status of the command

    Raises:
        PyBranchError: Subclasses carry their own exit codes
    """
    config.validate()
    logger.debug(f"Running {config.command.value} with {config.to_dict()}")
    return RUNNERS[config.command](config)


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        stream=sys.stderr,
        format='%(levelname)s %(name)s: %(message)s',
    )
    try:
        return run(config_from_args(args))
    except PyBranchError as e:
        print(f"pybranch: error: {e}", file=sys.stderr)
        return e.exit_code


if __name__ == '__main__':
    sys.exit(main())
