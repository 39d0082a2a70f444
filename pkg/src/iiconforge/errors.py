"""Exception hierarchy shared by all pipeline stages.

The CLI maps the three top-level families onto exit codes:
``ConfigError`` -> 1, ``InputError`` -> 2, ``InvariantViolation`` -> 3.
"""


class IiconforgeError(Exception):
    """Base class for every error raised by this package."""


class ConfigError(IiconforgeError):
    pass


class InputError(IiconforgeError):
    pass


class InvariantViolation(IiconforgeError):
    pass


class MalformedRecord(InputError):
    def __init__(self, line: int, reason: str = "missing columns"):
        self.line = line
        self.reason = reason
        super().__init__(f"line {line}: {reason}")


class MalformedRow(InputError):
    def __init__(self, line: int, reason: str):
        self.line = line
        self.reason = reason
        super().__init__(f"line {line}: {reason}")


class EmptyKB(InputError):
    def __init__(self, msg: str = "no simulations loaded"):
        super().__init__(msg)


class UnknownFormat(InputError):
    pass


class DuplicateType(InputError):
    def __init__(self, type_iri: str):
        self.type_iri = type_iri
        super().__init__(f"type {type_iri} mapped to more than one ICON class")


class UnknownIconClass(InputError):
    def __init__(self, row: int, detail: str = ""):
        self.row = row
        super().__init__(f"row {row}: unknown ICON class {detail}".rstrip())


class PriorityClash(InputError):
    def __init__(self, priority: int, classes):
        self.priority = priority
        super().__init__(
            f"priority {priority} shared by different ICON classes: {sorted(classes)}"
        )


class EmptyPhrase(InputError):
    pass


class IncompleteProfile(ConfigError):
    def __init__(self, tag: str):
        self.tag = tag
        super().__init__(f"profile has no IRI for relation {tag!r}")


class IoFailure(InputError):
    def __init__(self, path, cause=None):
        self.path = path
        super().__init__(f"cannot write {path}: {cause}")


class MismatchedArtworkSets(InputError):
    pass


class NoSubjects(InputError):
    pass


class EndpointUnreachable(InputError):
    pass


class MalformedResponse(InputError):
    def __init__(self, page: int, detail: str = ""):
        self.page = page
        super().__init__(f"page {page}: unparseable response {detail}".rstrip())


class QueryRejected(InputError):
    def __init__(self, status: int, body: str = ""):
        self.status = status
        super().__init__(f"endpoint rejected query with HTTP {status}: {body[:200]}")
