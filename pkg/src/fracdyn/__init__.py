"""Numerical machinery for fractional dissipative reaction-diffusion equations.

The package bundles the building blocks needed to study subdiffusive and
superdiffusive pattern formation in one space dimension:

* ``special``      -- Mittag-Leffler family, subdiffusion Green's function,
                      power-law kernels.
* ``timefrac``     -- L1 / convolution-quadrature / fast sum-of-exponentials
                      time discretizations, scalar FODE solvers, steppers for
                      the three reaction-subdiffusion model classes, and the
                      nonlocal energy diagnostic.
* ``spacefrac``    -- discrete 1D fractional Laplacians: modal (spectral),
                      Balakrishnan sinc-quadrature FEM, periodic Riesz-Feller
                      multipliers.
* ``dispersion``   -- dispersion relations and pseudo-spectra of two-component
                      reaction-subdiffusion systems, Turing thresholds.
* ``continuation`` -- steady states, pseudo-arclength continuation, branch
                      points and stability for three benchmark models.
* ``waves``        -- traveling fronts of space-fractional bistable equations.
* ``cli``          -- configuration-driven command line front end.
"""

__version__ = "0.1.0"

__all__ = [
    "special",
    "timefrac",
    "spacefrac",
    "dispersion",
    "continuation",
    "waves",
    "cli",
]
