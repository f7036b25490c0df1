class InputError(ValueError):
    """Malformed or mismatched input (wrong prime, ragged rows, bad JSON shape...)."""


class EmptyIdealWarning(UserWarning):
    """The zero ideal is homogeneous for every linear form; the certificate is vacuous."""
