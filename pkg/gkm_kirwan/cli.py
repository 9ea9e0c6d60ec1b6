"""Console entry point:

    gkm-kirwan <command> --config <path> [--dot <path>] [--out <path>]
               [--degree-bound N]

Exit codes: 0 success, 2 validation failure, 3 assumption failure,
4 internal inconsistency.
"""
import argparse
import logging
import os
import sys

from .exceptions import (
    AssumptionError,
    InconsistencyError,
    KirwanException,
    ValidationError,
)
from .models import COMMANDS
from .session import KirwanSession, dumps, load_config

logger = logging.getLogger(__name__)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="gkm-kirwan",
        description="Cohomology of symplectic quotients of Schubert "
        "varieties via GKM theory.",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--config", required=True, help="JSON job document")
    parser.add_argument("--dot", help="write the moment graph here")
    parser.add_argument("--out", help="write the JSON report here")
    parser.add_argument(
        "--degree-bound",
        type=int,
        help="complex degree bound dmax (default 2 * length(w))",
    )
    return parser


def render_text(document):
    """Human readable summary of a result document."""
    lines = [f"gkm-kirwan {document.get('command')}"]
    if "error" in document:
        error = document["error"]
        lines.append(f"error: {error.get('description')} "
                     f"({error.get('message')})")
        for item in error.get("data") or []:
            if isinstance(item, dict) and "field" in item:
                lines.append(f"  {item['field']}: {item['message']}")
        return "\n".join(lines) + "\n"
    result = document.get("result", {})
    sections = (
        result if document.get("command") == "report"
        else {document.get("command"): result}
    )
    for name, section in sections.items():
        lines.append(f"[{name}]")
        lines.extend(_render_section(name, section))
    return "\n".join(lines) + "\n"


def _render_section(name, section):
    if name == "validate":
        return [
            "  {}: {}{}".format(
                key,
                "pass" if report["passed"] else "FAIL",
                "".join(f"\n    - {f}" for f in report.get("failures", [])),
            )
            for key, report in sorted(section.items())
        ]
    if name == "graph":
        return [section["dot"].rstrip("\n")]
    if name == "cohomology":
        return [
            f"  H^{degree}: H_T dim {ht}, H_S dim {hs}"
            for degree, ht, hs in zip(
                section["degrees"],
                section["ht_dimensions"],
                section["hs_dimensions"],
            )
        ]
    if name == "quotient":
        lines = [
            f"  b_{degree} = {b}"
            for degree, b in zip(section["degrees"], section["betti"])
        ]
        lines.append(
            "  euler characteristic {}, palindromic {}".format(
                section["euler_characteristic"], section["palindromic"]
            )
        )
        for constant in section["structure_constants"]:
            lines.append(
                "  x{} * x{} = {}".format(
                    constant["left"], constant["right"], constant["product"]
                )
            )
        ext = section["assumptions"]["assumption_3_ii"]
        lines.append(f"  assumption 3 (ii): {ext['passed']} ({ext['bound']})")
        return lines
    if name == "regimes":
        return [
            "  r0 in ({}, {}): betti {}, assumption 3 (ii) {}".format(
                regime["interval"][0],
                regime["interval"][1],
                regime["betti"],
                regime["assumption_3_ii"],
            )
            for regime in section
        ]
    return []


def _write(path, text):
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(text)


def main(argv=None):
    logging.basicConfig(
        level=os.getenv("GKM_KIRWAN_LOG_LEVEL", "WARNING").upper()
    )
    args = build_parser().parse_args(argv)
    try:
        try:
            config = load_config(args.config)
        except OSError as err:
            raise ValidationError("config_unreadable", str(err))
        session = KirwanSession(config, degree_bound=args.degree_bound)
    except KirwanException as err:
        logger.error("Cannot start {}: {}".format(args.command, err))
        sys.stdout.write(render_text(dict(command=args.command, **err.dump())))
        return err.code
    document = session.run(args.command)

    dot_path = args.dot or config.dot
    if dot_path:
        _write(dot_path, session.graph_document()["dot"])
    out_path = args.out or config.out
    if out_path:
        _write(out_path, dumps(document))
    sys.stdout.write(render_text(document))

    return exit_code(document)


def exit_code(document):
    """0 on success, otherwise the code of the failure."""
    if "error" in document:
        err = KirwanException.from_dict(document)
        logger.info("Command failed: {}".format(err))
        return err.code or InconsistencyError.default_code
    if document.get("command") == "validate":
        failed = [
            name
            for name in ("assumption_1", "assumption_3_i")
            if not document["result"][name]["passed"]
        ]
        if failed:
            logger.info("Failed hypotheses: {}".format(", ".join(failed)))
            return AssumptionError.default_code
    return 0


if __name__ == "__main__":
    sys.exit(main())
