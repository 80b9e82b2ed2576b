class InputError(ValueError):
    """Malformed user input: bad automaton file, unknown symbol, bad parameter."""


class StateCapExceeded(RuntimeError):
    """A subset exploration grew past its configured state cap."""

    def __init__(self, cap, frontier):
        self.cap = cap
        self.frontier = frontier
        super().__init__(f"state cap {cap} exceeded (frontier size {frontier})")
