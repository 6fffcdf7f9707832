"""ridgewalk library: games, optimizers, spectra, Lyapunov exponents, tree search and bifurcation verdicts."""
