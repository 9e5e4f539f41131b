#ifndef CIRCREG_SPECIAL_HPP
#define CIRCREG_SPECIAL_HPP

namespace circreg {

/// Modified Bessel ratio I_nu(kappa) / I_0(kappa) for nu in {1, 2}, kappa > 0.
/// Power series below kappa = 50, asymptotic expansion above; relative error
/// below 1e-10 on both branches.
double bessel_i_ratio(int nu, double kappa);

/// log I_0(kappa), safe for large kappa (no overflow).
double log_bessel_i0(double kappa);

} // namespace circreg

#endif
