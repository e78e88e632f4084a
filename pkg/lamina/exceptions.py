"""
Error hierarchy shared by the library, the CLI and the HTTP routers
"""


class LaminaError(Exception):
    """Base class for every domain error raised by lamina"""


class AlphabetError(LaminaError, ValueError):
    """Unknown symbol, or operands built over different alphabets"""


class WordError(LaminaError, ValueError):
    """A word is trivial where a nontrivial one is required, or is not reduced"""


class HorizonError(LaminaError):
    """A horizon is exhausted, too small, or exceeds what a language carries"""


class LanguageError(LaminaError):
    """A language lacks a property the operation requires (exactness, seeds)"""


class SubstitutionError(LaminaError):
    """A substitution is not positive, not prolongable on its seed, or not primitive"""


class CancellationError(LaminaError, ValueError):
    """A juxtaposition passed to the defect measurement is not reduced"""


class ActionError(LaminaError):
    """The automorphism action did not stabilize or failed its self-check"""


class CertificationError(LaminaError):
    """A construction returned a result that fails its own postcondition"""
