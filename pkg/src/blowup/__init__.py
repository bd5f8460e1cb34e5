"""Package for constructing edge blow-ups and checking their Turán numbers at desk scale."""
