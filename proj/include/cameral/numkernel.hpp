#pragma once

#include <functional>
#include <map>
#include <vector>

#include "cameral/cpoly.hpp"
#include "cameral/errors.hpp"

namespace cameral {

/// All roots of a polynomial, with multiplicity; residuals[k] = |p(root_k)|.
struct RootSet {
    std::vector<Complex> roots;
    std::vector<double> residuals;
};

/// Aberth-Ehrlich simultaneous iteration plus Newton polish. Every returned
/// root satisfies |p(root)| <= tol * scale, with scale the coefficient
/// magnitude sum at the root. Throws NumericError on non-convergence.
RootSet find_roots(const CPoly1& p, double tol = 1e-12);

/// Value and Jacobian of a holomorphic map C^2 -> C^2.
struct Jet2 {
    Complex f1, f2;
    Complex j11, j12, j21, j22; // j<i><k> = d f_i / d x_k
};
using Map2 = std::function<Jet2(Complex, Complex)>;

/// Damped Newton on a 2x2 holomorphic system; stops when |f|_inf <= tol.
/// Throws NumericError (with the last iterate in detail) on a singular
/// Jacobian or when max_iter is exhausted.
std::pair<Complex, Complex> newton2(const Map2& f, Complex x0, Complex y0, double tol,
                                    int max_iter = 60);

/// Laurent coefficients of a function sampled at N equiangular points on
/// the circle |t - center| = radius, indices in [-N/2, N/2).
struct LaurentData {
    Complex center{0.0, 0.0};
    double radius = 0.0;
    std::map<int, Complex> coefficients;

    Complex coeff(int k) const {
        auto it = coefficients.find(k);
        return it == coefficients.end() ? Complex(0, 0) : it->second;
    }
    /// max |a_k| over -8 <= k <= -3: the double-pole certificate input.
    /// (Deeper indices amplify grid roundoff by radius^k and carry no pole
    /// information.)
    double tail_magnitude() const;
};

/// samples[m] = f(center + radius * e^{2 pi i m / N}); N must be a power of
/// two. a_k = (1/N) sum_m samples_m e^{-2 pi i k m / N} / radius^k.
LaurentData laurent_extract(const std::vector<Complex>& samples, double radius,
                            Complex center = Complex(0, 0));

/// In-place radix-2 FFT; forward convention X_j = sum_m x_m e^{-2 pi i jm/N}.
void fft(std::vector<Complex>& a, bool inverse);

/// Values of the derivative f'(t) at the same grid points, from the
/// Fourier series of the sampled values (spectral differentiation).
std::vector<Complex> spectral_derivative(const std::vector<Complex>& samples, double radius);

struct Pole2Options {
    int n_start = 64;
    int n_max = 4096;
    double stab_rel = 1e-10; // stop once doubling N moves a_{-2} less than this
    double tail_rel = 1e-6;  // certificate: |a_k| <= tail_rel * |a_{-2}|, k <= -3
};

struct Pole2Result {
    Complex a_m2{0, 0};
    double tail_bound = 0.0; // max |a_k| for k <= -3, absolute
    int n_used = 0;
    LaurentData laurent;
};

/// Adaptive double-pole coefficient extraction: sample_fn(N) returns the N
/// circle samples; N doubles until a_{-2} stabilizes. Enforces the
/// pole-order certificate and throws NumericError("pole order mismatch")
/// when the tail exceeds its bound.
Pole2Result extract_double_pole(const std::function<std::vector<Complex>(int)>& sample_fn,
                                double radius, const Pole2Options& opts = {});

} // namespace cameral
