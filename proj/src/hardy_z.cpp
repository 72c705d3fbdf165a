#include "critline/hardy_z.hpp"

#include <cmath>

namespace critline {

ZEvaluation hardy_z(double t, const EvalConfig& cfg) {
    const Cplx zv = zeta(Cplx{0.5, t}, cfg);
    const double th = theta_exact(t);
    const Cplx rotated = zv * std::polar(1.0, th);

    ZEvaluation e;
    e.t = t;
    e.z_value = rotated.real();
    e.imag_residual = std::abs(rotated.imag());
    e.zeta_modulus = std::abs(zv);
    if (e.imag_residual > 1e-9)
        throw AccuracyError("hardy_z: rotated value has imaginary residual " +
                            std::to_string(e.imag_residual));
    return e;
}

}  // namespace critline
