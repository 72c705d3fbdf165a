#pragma once

// Hardy's function Z(t) = e^{i theta(t)} zeta(1/2 + it), real for real t.
// Its sign changes are exactly the critical-line zeros of zeta, which is what
// the scanner and the sign-relation checks build on.

#include "critline/special_functions.hpp"
#include "critline/theta.hpp"

namespace critline {

struct ZEvaluation {
    double t = 0.0;
    double z_value = 0.0;       // real part of the rotated zeta value
    double imag_residual = 0.0; // |imaginary part|, a direct accuracy witness
    double zeta_modulus = 0.0;  // |zeta(1/2+it)|, equals |z_value| up to residual
};

// Throws AccuracyError when the imaginary residual exceeds 1e-9, which would
// mean theta and zeta disagree about the phase.
ZEvaluation hardy_z(double t, const EvalConfig& cfg = {});

}  // namespace critline
