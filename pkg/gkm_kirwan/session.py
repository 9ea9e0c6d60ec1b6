import json
import logging
import os

from dotenv import load_dotenv

from .exceptions import (
    ERROR_MESSAGES,
    InconsistencyError,
    KirwanException,
    ValidationError,
)
from .gkm import formality_dimensions, hs_basis, ht_basis
from .kirwan import (
    assumption2_evidence,
    compute_quotient,
    default_dmax,
    presentation_from,
    scan_regimes,
)
from .lie import MAX_RANK, MAX_WEYL_ORDER, build_root_datum
from .models import COMMANDS, SCHEMA_VERSION, parse_config
from .schubert import (
    build_schubert_datum,
    moment_graph,
    poincare_polynomial,
    polytope_vertices,
    to_dot,
    validate_assumption1,
    validate_r0,
)
from .utils import (
    rational_to_str,
    rationals_to_str,
    root_to_str,
    word_to_str,
)
from .version import __version__

load_dotenv()
logger = logging.getLogger(__name__)

RANK_CAP = int(os.getenv("GKM_KIRWAN_MAX_RANK", MAX_RANK))
WEYL_ORDER_CAP = int(os.getenv("GKM_KIRWAN_MAX_WEYL_ORDER", MAX_WEYL_ORDER))

__all__ = ["KirwanSession", "run_command", "load_config", "dumps"]


def load_config(path):
    """Read and validate a JSON job document."""
    with open(path, encoding="utf-8") as handle:
        try:
            document = json.load(handle)
        except ValueError as err:
            # JSONDecodeError and UnicodeDecodeError
            logger.error("Cannot decode {}: {}".format(path, err))
            raise ValidationError(
                "bad_config", f"{path} is not a UTF-8 JSON document: {err}"
            )
    return parse_config(document)


class KirwanSession:
    """Runs the commands of one job configuration and renders their
    documents."""

    def __init__(self, config, degree_bound=None):
        """Create a KirwanSession instance.

        Args:
            config (JobConfig): validated job
            degree_bound (int): overrides `config.degree_bound`
        """
        self.config = config
        self.datum = build_root_datum(
            config.type_letter, config.rank, max_rank=RANK_CAP
        )
        self.lam = self.datum.weight_from_fundamental(config.lam)
        self.schubert = build_schubert_datum(
            self.datum, self.lam, config.w, cap=WEYL_ORDER_CAP
        )
        self.a_vals = tuple(config.a_vals)
        self.r0 = config.r0
        if degree_bound is None:
            degree_bound = config.degree_bound
        self.dmax = (
            default_dmax(self.schubert) if degree_bound is None
            else degree_bound
        )
        self._graph = None

    @property
    def graph(self):
        if self._graph is None:
            self._graph = moment_graph(self.schubert, self.a_vals)
        return self._graph

    def _header(self, command):
        return {
            "schema_version": SCHEMA_VERSION,
            "generator": f"gkm_kirwan/{__version__}",
            "command": command,
            "config": self.config.dump(),
        }

    def _graph_section(self):
        g = self.graph
        extreme = {vertex.name for vertex in polytope_vertices(g)}
        return {
            "vertices": [
                {
                    "word": vertex.name,
                    "length": vertex.element.length,
                    "weight": rationals_to_str(vertex.weight.root_coords),
                    "phi": rational_to_str(vertex.phi),
                    "valency": g.valency(k),
                    "extreme": vertex.name in extreme,
                }
                for k, vertex in enumerate(g.vertices)
            ],
            "edges": [
                {
                    "u": g.vertices[u].name,
                    "v": g.vertices[v].name,
                    "label": root_to_str(gamma),
                }
                for u, v, gamma in g.edges
            ],
            "poincare": poincare_polynomial(self.schubert),
            "complex_dimension": self.schubert.complex_dimension,
        }

    def validate(self):
        """Assumption reports; never raises on a failed assumption."""
        g = self.graph
        return {
            "assumption_1": validate_assumption1(
                self.schubert, self.a_vals
            ).dump(),
            "assumption_2_evidence": assumption2_evidence(
                self.schubert, g
            ).dump(),
            "assumption_3_i": validate_r0(g, self.r0).dump(),
        }

    def graph_document(self):
        return {"dot": to_dot(self.graph), "graph": self._graph_section()}

    def cohomology(self):
        """Per-degree dimensions of H_T and H_S, checked against the
        formality oracle."""
        g = self.graph
        ht = ht_basis(g, self.dmax)
        hs = hs_basis(g, self.a_vals, self.dmax, ht=ht)
        expected_ht, expected_hs = formality_dimensions(
            poincare_polynomial(self.schubert), self.datum.rank, self.dmax
        )
        ht_dims = [ht.dimension(d) for d in range(self.dmax + 1)]
        hs_dims = [hs.dimension(d) for d in range(self.dmax + 1)]
        if ht_dims != expected_ht or hs_dims != expected_hs:
            err_msg = (
                "GKM dimensions H_T {} / H_S {} disagree with the formality "
                "oracle {} / {}".format(
                    ht_dims, hs_dims, expected_ht, expected_hs
                )
            )
            logger.error(err_msg)
            raise InconsistencyError("formality_mismatch", err_msg)
        return {
            "degrees": [2 * d for d in range(self.dmax + 1)],
            "ht_dimensions": ht_dims,
            "hs_dimensions": hs_dims,
        }

    def quotient(self):
        computation = compute_quotient(
            self.schubert, self.a_vals, self.r0, self.dmax
        )
        presentation = presentation_from(computation)
        kernels = computation.kernels
        return {
            "betti": list(presentation.betti),
            "degrees": [2 * d for d in range(self.dmax + 1)],
            "euler_characteristic": presentation.euler_characteristic,
            "palindromic": presentation.is_palindromic,
            "kernels": [
                {
                    "degree": 2 * d,
                    "hs": computation.hs.dimension(d),
                    "k_minus": kernels.minus[d].dimension,
                    "k_plus": kernels.plus[d].dimension,
                    "k_minus_basis": [
                        rationals_to_str(row)
                        for row in kernels.minus[d].basis
                    ],
                    "intersection": kernels.intersection_dimension(d),
                }
                for d in range(self.dmax + 1)
            ],
            "basis_cosets": [
                {
                    "degree": 2 * d,
                    "index": i,
                    "representative": rationals_to_str(coset),
                }
                for d, cosets in enumerate(presentation.basis_cosets)
                for i, coset in enumerate(cosets)
            ],
            "structure_constants": [
                {
                    "left": [2 * d1, i],
                    "right": [2 * d2, j],
                    "product": rationals_to_str(constants),
                }
                for (d1, i, d2, j), constants in sorted(
                    presentation.structure_constants.items()
                )
            ],
            "unavailable_products": len(presentation.unavailable),
            "assumptions": {
                "assumption_1": computation.assumption1.dump(),
                "assumption_2_evidence": computation.assumption2.dump(),
                "assumption_3_i": computation.assumption3_i.dump(),
                "assumption_3_ii": computation.assumption3_ii.dump(),
            },
        }

    def regimes(self):
        return [
            {
                "interval": [
                    rational_to_str(regime.lower),
                    rational_to_str(regime.upper),
                ],
                "r0": rational_to_str(regime.r0),
                "top_vertices": list(regime.top_vertices),
                "assumption_3_ii": regime.assumption3_ii.passed,
                "betti": list(regime.betti),
            }
            for regime in scan_regimes(self.schubert, self.a_vals, self.dmax)
        ]

    def report(self):
        return {
            "validate": self.validate(),
            "graph": self.graph_document(),
            "cohomology": self.cohomology(),
            "quotient": self.quotient(),
            "regimes": self.regimes(),
        }

    def _run_command(self, command):
        """Helper running one command and wrapping its result.

        Args:
            command: one of COMMANDS

        Returns:
            the result document; `{"error": {...}}` on failure
        """
        handlers = {
            "validate": self.validate,
            "graph": self.graph_document,
            "cohomology": self.cohomology,
            "quotient": self.quotient,
            "regimes": self.regimes,
            "report": self.report,
        }
        document = self._header(command)
        try:
            if command not in handlers:
                raise ValidationError(
                    "unknown_command",
                    "command must be one of {}".format(", ".join(COMMANDS)),
                )
            document["result"] = handlers[command]()
        except KirwanException as err:
            logger.debug("Command {} failed: {}".format(command, err))
            document.update(err.dump())
        except Exception as err:
            logger.error("Command {} crashed: {}".format(command, err))
            document["error"] = dict(
                ERROR_MESSAGES[4], data=f"{type(err).__name__}: {err}"
            )
        return document

    def run(self, command):
        return self._run_command(command)

    def __str__(self):
        return "KirwanSession: X({}) in {} ({})".format(
            word_to_str(self.schubert.w.word), self.datum, self.config
        )


def run_command(command, config, degree_bound=None):
    """Run `command` on a JobConfig; failures come back as error
    documents carrying the failing module's message unmodified."""
    try:
        session = KirwanSession(config, degree_bound=degree_bound)
    except KirwanException as err:
        document = {"schema_version": SCHEMA_VERSION, "command": command}
        document.update(err.dump())
        return document
    return session.run(command)


def dumps(document):
    """Deterministic JSON rendering."""
    return json.dumps(document, indent=2, sort_keys=True) + "\n"
