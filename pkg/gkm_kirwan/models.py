from .exceptions import ValidationError
from .utils import rational_to_str, to_fraction

SCHEMA_VERSION = "1"

COMMANDS = ("validate", "graph", "cohomology", "quotient", "regimes", "report")


class ModelBase(object):
    """Super class for all models. Provides basic serialization."""

    __dump_attributes__ = []

    def __init__(self, **kwargs):
        for key, value in kwargs.items():
            setattr(self, key, value)

    def dump(self):
        """Serialize the ModelBase object to a dictionary."""
        result = {}
        for attribute in self.__dump_attributes__:
            value = getattr(self, attribute)
            if value is not None:
                result[attribute] = value
        return result


class AssumptionReport(ModelBase):
    """Verdict on one hypothesis of the quotient computation.

    Attributes:
        name: `assumption_1`, `assumption_2_evidence`, `assumption_3_i` or
            `assumption_3_ii`
        passed: boolean verdict
        failures: human readable description of each failed clause
        details: extra structured data (strings and integers only)
    """

    __dump_attributes__ = ["name", "passed", "failures", "details"]

    name = None
    passed = None
    failures = None
    details = None

    def __init__(self, **kwargs):
        super().__init__(**kwargs)
        if self.failures is None:
            self.failures = []

    def __bool__(self):
        return bool(self.passed)

    def __str__(self):
        verdict = "pass" if self.passed else "FAIL"
        return f"AssumptionReport: {self.name} {verdict}"


class ExtensionReport(AssumptionReport):
    """Assumption 3 (ii) checked degree by degree up to `dmax`.

    Attributes:
        degrees: mapping complex degree -> surjectivity verdict
        single_vertex: Gamma_{r0} is a single point, where constant
            extension always works
        bound: statement of the degree range actually verified
    """

    __dump_attributes__ = AssumptionReport.__dump_attributes__ + [
        "degrees",
        "single_vertex",
        "bound",
    ]

    degrees = None
    single_vertex = None
    bound = None

    def dump(self):
        dumped_value = super().dump()
        dumped_value["degrees"] = {
            str(2 * d): ok for d, ok in sorted(self.degrees.items())
        }
        return dumped_value


class JobConfig(ModelBase):
    """One computation job.

    Attributes:
        type_letter: root system type, one of A, B, C, D
        rank: rank of the root system
        lam: dominant weight in fundamental-weight coordinates
        w: word in the simple reflections (1-based indices)
        a_vals: pairings c_j = alpha_j(a) of the circle direction
        r0: level of the reduction, exact rational
        degree_bound: complex degree bound dmax, default 2 * length(w)
        dot: optional path for the DOT rendering of the moment graph
        out: optional path for the machine-readable report
    """

    __dump_attributes__ = [
        "schema_version",
        "type",
        "rank",
        "lambda",
        "w",
        "a",
        "r0",
        "degree_bound",
    ]

    schema_version = SCHEMA_VERSION
    type_letter = None
    rank = None
    lam = None
    w = None
    a_vals = None
    r0 = None
    degree_bound = None
    dot = None
    out = None

    def dump(self):
        return {
            "schema_version": self.schema_version,
            "type": self.type_letter,
            "rank": self.rank,
            "lambda": list(self.lam),
            "w": list(self.w),
            "a": list(self.a_vals),
            "r0": rational_to_str(self.r0),
            "degree_bound": self.degree_bound,
        }

    def __str__(self):
        return (
            f"JobConfig: {self.type_letter}{self.rank} lambda={self.lam} "
            f"w={self.w} a={self.a_vals} r0={rational_to_str(self.r0)}"
        )


def _int_list(document, key, errors):
    value = document.get(key)
    if not isinstance(value, list) or not all(
        isinstance(x, int) and not isinstance(x, bool) for x in value
    ):
        errors.append(
            {"field": key, "message": "must be a list of integers"}
        )
        return None
    return value


def parse_config(document):
    """Validate a job document and build a JobConfig.

    Every field is checked before failing, so the raised ValidationError
    lists all field-level problems in `data`.

    Raises:
        ValidationError: with `data` a list of {"field", "message"} items
    """
    errors = []
    if not isinstance(document, dict):
        raise ValidationError(
            "bad_config", "the job document must be a mapping",
            data=[{"field": "", "message": "expected a mapping"}],
        )
    version = str(document.get("schema_version", SCHEMA_VERSION))
    if version != SCHEMA_VERSION:
        errors.append(
            {
                "field": "schema_version",
                "message": f"unsupported schema version {version}",
            }
        )

    type_letter = document.get("type")
    if not isinstance(type_letter, str) or type_letter.upper() not in (
        "A", "B", "C", "D"
    ):
        errors.append(
            {"field": "type", "message": "must be one of A, B, C, D"}
        )
        type_letter = None
    else:
        type_letter = type_letter.upper()

    rank = document.get("rank")
    if not isinstance(rank, int) or isinstance(rank, bool) or rank < 1:
        errors.append(
            {"field": "rank", "message": "must be a positive integer"}
        )
        rank = None

    lam = _int_list(document, "lambda", errors)
    if lam is not None:
        if rank is not None and len(lam) != rank:
            errors.append(
                {"field": "lambda", "message": f"needs {rank} entries"}
            )
        if any(x < 0 for x in lam):
            errors.append(
                {"field": "lambda", "message": "entries must be >= 0"}
            )
        elif not any(lam):
            errors.append(
                {"field": "lambda", "message": "must not be all zero"}
            )

    w = _int_list(document, "w", errors)
    if w is not None and rank is not None:
        if any(not 1 <= i <= rank for i in w):
            errors.append(
                {"field": "w", "message": f"indices must lie in 1..{rank}"}
            )

    a_vals = None
    if "a" in document and "a_ambient" in document:
        errors.append(
            {"field": "a", "message": "give either a or a_ambient, not both"}
        )
    elif "a_ambient" in document:
        a_ambient = _int_list(document, "a_ambient", errors)
        if a_ambient is not None:
            if type_letter != "A":
                errors.append(
                    {
                        "field": "a_ambient",
                        "message": "only available for type A",
                    }
                )
            elif rank is not None and len(a_ambient) != rank + 1:
                errors.append(
                    {
                        "field": "a_ambient",
                        "message": f"needs {rank + 1} entries",
                    }
                )
            else:
                a_vals = [
                    a_ambient[j] - a_ambient[j + 1]
                    for j in range(len(a_ambient) - 1)
                ]
    else:
        a_vals = _int_list(document, "a", errors)
        if a_vals is not None and rank is not None and len(a_vals) != rank:
            errors.append({"field": "a", "message": f"needs {rank} entries"})

    r0 = None
    try:
        r0 = to_fraction(document.get("r0"))
    except (ValueError, ZeroDivisionError) as err:
        errors.append({"field": "r0", "message": str(err)})

    degree_bound = document.get("degree_bound")
    if degree_bound is not None and (
        not isinstance(degree_bound, int)
        or isinstance(degree_bound, bool)
        or degree_bound < 0
    ):
        errors.append(
            {
                "field": "degree_bound",
                "message": "must be a non-negative integer",
            }
        )

    for key in ("dot", "out"):
        if document.get(key) is not None and not isinstance(
            document[key], str
        ):
            errors.append({"field": key, "message": "must be a path"})

    if errors:
        fields = ", ".join(sorted({error["field"] for error in errors}))
        raise ValidationError(
            "bad_config", f"invalid job configuration: {fields}", data=errors
        )
    return JobConfig(
        schema_version=version,
        type_letter=type_letter,
        rank=rank,
        lam=tuple(lam),
        w=tuple(w),
        a_vals=tuple(a_vals),
        r0=r0,
        degree_bound=degree_bound,
        dot=document.get("dot"),
        out=document.get("out"),
    )
