"""quasipartial - Numerical workbench for quasi-partial sums of the generalized Bernardi integral."""
