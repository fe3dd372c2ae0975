#pragma once

#include <cstdint>

namespace swl2d {

/// Numerical knobs, collected in one place so the CLI can override them from
/// a config file. Defaults are the library-wide calibration.
struct Tolerances {
    // spectral / hypothesis checks
    double tol_commute = 1e-10;      // relative, H2 commutator max-norm
    double tol_eig_coincide = 1e-9;  // relative, eigenvalue coincidence (H3)
    double tol_eigvec = 1e-9;        // projective eigenvector comparison (H4)

    // classification
    double boundary_tol = 1e-9;  // band on |contraction - 1| and on the D = 0 cases

    // worst-trajectory integration
    double angle_step = 0.004363323129985824;  // pi/720
    double event_tol = 1e-12;                  // relative, |Q| at accepted switch points
    double closed_tol = 1e-6;                  // closed-curve radius gap
    double stall_time = 200.0;                 // NoRotation cutoff for angle stop rules

    // value function
    int vf_n_theta = 2048;
    double vf_h = 1e-3;
    double vf_tol = 1e-10;
    int vf_max_iters = 400000;
    double curvature_tol = 1e-8;  // strict-convexity threshold on the level set

    // polynomial CLF synthesis
    double clf_margin_rel = 1e-8;  // relative decrease margin
    int poly_p_cap = 16384;        // 2^14, escalation cap on 2p
    double tie_tol = 1e-9;         // polytope active-piece tie tolerance

    // linear feasibility scan
    int lp_n_samples = 720;    // unit-circle sample count (antipodes collapse)
    double lp_epsilon = 1e-6;  // decrease margin in the LP
    int lp_iter_cap_factor = 50;

    // simulation
    double sim_mean_dwell = 0.2;
};

}  // namespace swl2d
