class IntegrityError(RuntimeError):
    """An internal consistency guarantee failed; indicates a bug or a
    violated structural assumption, not bad user input."""
