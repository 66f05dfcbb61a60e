# Settings: base, development, production and test.
