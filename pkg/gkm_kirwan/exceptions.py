ERROR_MESSAGES = {
    2: {
        "message": "validation_failed",
        "description": "The job configuration or an operation argument is "
        "invalid.",
        "code": 2,
    },
    3: {
        "message": "assumption_failed",
        "description": "A hypothesis the quotient computation rests on does "
        "not hold.",
        "code": 3,
    },
    4: {
        "message": "internal_inconsistency",
        "description": "An independent oracle disagreed with a computed "
        "value.",
        "code": 4,
    },
}


class KirwanException(Exception):
    """Base class for all exceptions raised by gkm_kirwan.

    They consist of a code-like `error` and a human readable
    `error_description`. `code` is the process exit code used by the
    command line interface.
    """

    default_code = None

    def __init__(self, error, error_description, code=None, data=None):
        """Create an exception with an error slug and a description."""
        super().__init__(error_description)
        self.error = error
        self.error_description = error_description
        self.code = code if code is not None else self.default_code
        self.data = data

    def __str__(self):
        """String representation of the KirwanException."""
        code_err = " - code: {}".format(self.code) if self.code else ""
        return (
            f"{type(self).__name__}: {self.error_description} "
            f"({self.error}){code_err}"
        )

    @classmethod
    def from_dict(cls, dictionary):
        """Helper function creating an exception instance from an error
        document as produced by `dump`.
        """
        return cls(
            dictionary["error"].get("message"),
            dictionary["error"].get("description"),
            code=dictionary["error"].get("code"),
            data=dictionary["error"].get("data"),
        )

    def dump(self):
        """Serialize the exception into an error document."""
        error = {
            "message": self.error,
            "description": self.error_description,
            "code": self.code,
        }
        if self.data is not None:
            error["data"] = self.data
        return {"error": error}


class ValidationError(KirwanException):
    """Bad input: configuration fields, unsupported root data, violated
    operation preconditions."""

    default_code = 2


class AssumptionError(KirwanException):
    """Assumption 1 or 3 (i) fails, so no quotient is computed."""

    default_code = 3


class InconsistencyError(KirwanException):
    """An independent cross-check disagreed with a computed value."""

    default_code = 4
