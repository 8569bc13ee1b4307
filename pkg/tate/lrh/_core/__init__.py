"""Private implementation of the tatezeta verifier. Import through tate.lrh."""
