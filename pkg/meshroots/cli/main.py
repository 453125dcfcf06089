"""
Command line entry point.

    meshroots quiver --diagram D5 --cyclic --format dot
    meshroots hom --diagram A2 --source 1,0 --target 1,0
    meshroots homology --diagram A2 --i 1 --j 1 --l 2
    meshroots table --diagram A3 --method quotient --format csv
    meshroots roots --diagram E6 --format json
    meshroots verify --diagram A3 --suite all
"""
import argparse
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional, Tuple

import structlog

from meshroots import __version__
from meshroots.config import settings
from meshroots.core.exception_handlers import handle_exception
from meshroots.core.exceptions import InvalidTreeException, InvalidVertexException
from meshroots.core.logging_config import setup_logging
from meshroots.core.logging_context import bind_run_context
from meshroots.core.response_codes import ResponseCodes
from meshroots.domain.entities.diagram import DynkinDiagram, TreeGraph
from meshroots.domain.entities.profiles import HomMethod
from meshroots.domain.mappers.component_mapper import ComponentMapper
from meshroots.domain.mappers.hom_table_mapper import HomTableMapper
from meshroots.domain.mappers.roots_mapper import RootsMapper
from meshroots.schemas.documents import TreeDocument
from meshroots.schemas.run_config import SUITES, RunConfig
from meshroots.services import dgalgebra, dynkin, exactla, hatquiver, roots
from meshroots.services.meshcat import MeshCategoryService
from meshroots.services.verification import VerificationService

logger = structlog.get_logger(__name__)

CommandResult = Tuple[str, int]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="meshroots",
        description="Translation quivers, paths with jumps and ADE root systems.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--log-level", dest="log_level", default=None, help="DEBUG, INFO, WARNING, ERROR")
    parser.add_argument("--json-logs", dest="json_logs", action="store_true", default=None)
    commands = parser.add_subparsers(dest="command", required=True)

    def add_common(sub: argparse.ArgumentParser, tree: bool = False):
        sub.add_argument("--diagram", help="Diagram spec such as A4, D5, E8")
        if tree:
            sub.add_argument("--tree", help="JSON tree document {'nodes': n, 'edges': [[i, j], ...]}")
        sub.add_argument("--cutoff", type=int, help="Max basis size per component")
        sub.add_argument("--matrix-entry-cutoff", dest="matrix_entry_cutoff", type=int,
                         help="Max nonzero entries per matrix")
        sub.add_argument("--output", "-o", help="Write the result to this file")

    quiver = commands.add_parser("quiver", help="Emit Γ̂ (window) or Γ̂_cyc")
    add_common(quiver, tree=True)
    quiver.add_argument("--cyclic", action="store_true", default=None)
    quiver.add_argument("--window", help="Level window lo..hi")
    quiver.add_argument("--format", choices=["dot", "json"])

    hom = commands.add_parser("hom", help="Hom/Ext¹ between X_q and X_q′")
    add_common(hom)
    hom.add_argument("--source", help="q as i,n")
    hom.add_argument("--target", help="q′ as i,n")
    hom.add_argument("--method", choices=[m.value for m in HomMethod])
    hom.add_argument("--format", choices=["text", "json"])

    homology = commands.add_parser("homology", help="Homology of A_{i,j;l}")
    add_common(homology, tree=True)
    homology.add_argument("--i", type=int)
    homology.add_argument("--j", type=int)
    homology.add_argument("--l", type=int)
    homology.add_argument("--format", choices=["text", "json"])

    table = commands.add_parser("table", help="Full Hom table over Γ̂_cyc")
    add_common(table)
    table.add_argument("--method", choices=[m.value for m in HomMethod])
    table.add_argument("--format", choices=["csv", "json"])

    roots_cmd = commands.add_parser("roots", help="Class bijection report or Gram CSV")
    add_common(roots_cmd)
    roots_cmd.add_argument("--height", help="bipartite | bipartite+2k | h1,h2,...")
    roots_cmd.add_argument("--format", choices=["json", "csv"])

    verify = commands.add_parser("verify", help="Run verification suites")
    add_common(verify, tree=True)
    verify.add_argument("--suite", help="Comma separated: all," + ",".join(SUITES))
    verify.add_argument("--lmax", type=int, help="Largest l for periodicity/nondynkin/dg")
    return parser


def resolve_diagram(config: RunConfig) -> DynkinDiagram:
    return dynkin.diagram_from_spec(config.diagram)


def resolve_graph(config: RunConfig) -> DynkinDiagram | TreeGraph:
    if config.diagram:
        return resolve_diagram(config)
    try:
        text = Path(config.tree).read_text(encoding="utf-8")
    except OSError as e:
        raise InvalidTreeException(f"cannot read {config.tree}: {e.strerror}")
    document = TreeDocument.model_validate_json(text)
    return dynkin.build_tree(document.nodes, document.edges, label=Path(config.tree).stem)


def make_meshcat(config: RunConfig) -> MeshCategoryService:
    return MeshCategoryService(cutoff=config.cutoff, matrix_cutoff=config.matrix_entry_cutoff)


# ==================== COMMANDS ====================

def cmd_quiver(config: RunConfig) -> CommandResult:
    graph = resolve_graph(config)
    if config.cyclic:
        quiver = hatquiver.cyclic_quiver(graph)
    else:
        lo, hi = config.window_bounds
        quiver = hatquiver.window_quiver(graph, lo, hi)
    fmt = config.format if config.format in ("dot", "json") else "dot"
    return hatquiver.emit_quiver(quiver, fmt), ResponseCodes.SUCCESS.exit_status


def cmd_hom(config: RunConfig) -> CommandResult:
    diagram = resolve_diagram(config)
    quiver = hatquiver.cyclic_quiver(diagram)
    q = hatquiver.place(quiver, *config.source_vertex)
    q_prime = hatquiver.place(quiver, *config.target_vertex)
    profile = make_meshcat(config).profile(diagram, q, q_prime, config.method)
    if config.format == "json":
        document = HomTableMapper.to_profile_document(profile)
        return document.model_dump_json(indent=2) + "\n", ResponseCodes.SUCCESS.exit_status
    text = (
        f"source={q.node},{q.level} target={q_prime.node},{q_prime.level} "
        f"hom={profile.hom} ext1={profile.ext1} euler={profile.euler} method={config.method}\n"
    )
    return text, ResponseCodes.SUCCESS.exit_status


def cmd_homology(config: RunConfig) -> CommandResult:
    graph = resolve_graph(config)
    for node in (config.i, config.j):
        if node not in graph.nodes:
            raise InvalidVertexException(node, config.l)
    if config.format == "json":
        component = dgalgebra.build_component(graph, config.i, config.j, config.l, cutoff=config.cutoff)
        dims = exactla.homology_dims(
            component.chain_dims,
            component.differentials,
            cutoff=config.matrix_entry_cutoff,
        )
        document = ComponentMapper.to_document(component, dims)
        return document.model_dump_json(indent=2) + "\n", ResponseCodes.SUCCESS.exit_status
    dims = make_meshcat(config).component_homology(graph, config.i, config.j, config.l)
    text = (
        f"component A_{{{config.i},{config.j};{config.l}}} of {graph.label}\n"
        f"chain_dims = {list(dims.chain_dims)}\n"
        f"H = {list(dims.homology)}\n"
        f"euler_characteristic = {dims.euler_characteristic}\n"
    )
    return text, ResponseCodes.SUCCESS.exit_status


def cmd_table(config: RunConfig) -> CommandResult:
    diagram = resolve_diagram(config)
    table = make_meshcat(config).hom_table(diagram, config.method)
    if config.format == "json":
        return HomTableMapper.to_document(table).model_dump_json(indent=2) + "\n", ResponseCodes.SUCCESS.exit_status
    return HomTableMapper.to_csv(table), ResponseCodes.SUCCESS.exit_status


def cmd_roots(config: RunConfig) -> CommandResult:
    diagram = resolve_diagram(config)
    height = hatquiver.height_from_spec(diagram, config.height)
    classes = roots.realize_root_system(diagram, height)
    if config.format == "csv":
        forms = roots.bilinear_forms(diagram, height)
        return RootsMapper.to_gram_csv(classes, forms), ResponseCodes.SUCCESS.exit_status
    report = RootsMapper.to_report(diagram.label, height, classes, matches_oracle=True)
    return report.model_dump_json(indent=2, by_alias=True) + "\n", ResponseCodes.SUCCESS.exit_status


def cmd_verify(config: RunConfig) -> CommandResult:
    diagram = resolve_diagram(config) if config.diagram else None
    tree = resolve_graph(config) if config.tree else None
    service = VerificationService(make_meshcat(config))
    report = service.run(config.suites, diagram=diagram, tree=tree, l_max=config.lmax)
    failed = [check for check in report.checks if not check.passed]
    if any(not check.resource_limited for check in failed):
        status = ResponseCodes.CLAIM_FAILED.exit_status
    elif failed:
        status = ResponseCodes.SIZE_LIMIT_EXCEEDED.exit_status
    else:
        status = ResponseCodes.SUCCESS.exit_status
    return report.model_dump_json(indent=2) + "\n", status


COMMANDS: Dict[str, Callable[[RunConfig], CommandResult]] = {
    "quiver": cmd_quiver,
    "hom": cmd_hom,
    "homology": cmd_homology,
    "table": cmd_table,
    "roots": cmd_roots,
    "verify": cmd_verify,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    options = {key: value for key, value in vars(args).items() if value is not None}
    log_level = options.pop("log_level", settings.LOG_LEVEL)
    json_logs = options.pop("json_logs", settings.JSON_LOGS)
    setup_logging(log_level=log_level, json_logs=json_logs)

    try:
        config = RunConfig(**options)
        bind_run_context(
            config.command,
            diagram=config.diagram or config.tree,
            **{key: value for key, value in options.items() if key not in ("command", "diagram", "tree")},
        )
        text, status = COMMANDS[config.command](config)
    except Exception as exc:
        return handle_exception(exc)

    _emit(text, config.output)
    logger.info("Command finished", exit_status=status)
    return status


def _emit(text: str, output: Optional[str]):
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


if __name__ == "__main__":
    sys.exit(main())
