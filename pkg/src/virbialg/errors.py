class VirBialgError(Exception):
    """Base class for library errors."""


class OutOfWindow(VirBialgError):
    def __init__(self, sym, msg=None):
        self.sym = sym
        super().__init__(msg or f"{sym} is outside the tabulated window")


class NotAntisymmetric(VirBialgError, ValueError):
    pass


class ZeroPairing(VirBialgError, ValueError):
    pass


class ZeroDegree(VirBialgError, ValueError):
    pass


class NotHomogeneous(VirBialgError, ValueError):
    pass


class VerificationFailed(VirBialgError):
    def __init__(self, sym, expected=None, got=None):
        self.sym = sym
        self.expected = expected
        self.got = got
        super().__init__(f"D({sym}) != {sym} . a")


class NoSolution(VirBialgError):
    def __init__(self, msg, diagnostics=None):
        self.diagnostics = diagnostics or {}
        super().__init__(msg)


class InconclusiveBudgetExhausted(VirBialgError):
    def __init__(self, probes):
        self.probes = probes
        super().__init__(f"probe schedule exhausted after {len(probes)} probes")
