#pragma once

// Special functions: associated Laguerre polynomials, factorial ratios and
// hydrogen-like radial wavefunctions. All functions are pure.

namespace vortexq {

/// Indices of an associated Laguerre polynomial L_p^a.
struct LaguerreParams {
  unsigned p = 0;  // degree
  unsigned a = 0;  // superscript (|l| for beam modes, 2L+1 for hydrogenic states)
};

/// Hydrogen-like bound state with effective nuclear charge.
struct HydrogenicState {
  int n = 1;
  int L = 0;
  double Z = 1.0;

  /// Throws DomainError unless 0 <= L <= n-1 and Z > 0.
  void validate() const;
};

/// L_p^a(x) by the ascending three-term recurrence in p.
double assoc_laguerre(LaguerreParams params, double x);

/// dL_p^a/dx = -L_{p-1}^{a+1}(x); zero for p = 0.
double assoc_laguerre_deriv(LaguerreParams params, double x);

/// ln(p!) - ln((p + ell_abs)!).
double log_factorial_ratio(unsigned p, unsigned ell_abs);

/// Normalized radial function R_nL(r; Z), r in Bohr radii, result in a0^(-3/2).
double hydrogenic_radial(const HydrogenicState& state, double r);

/// Radial cutoff (Bohr radii) beyond which R_nL is negligible: 40 n^2 / Z.
double hydrogenic_cutoff(const HydrogenicState& state);

}  // namespace vortexq
