#include "cameral/numkernel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace cameral {

namespace {

constexpr double kPi = std::numbers::pi;

bool is_pow2(size_t n) { return n > 0 && (n & (n - 1)) == 0; }

std::string residual_summary(const std::vector<double>& res) {
    std::ostringstream os;
    os << "residuals:";
    for (double r : res) os << ' ' << r;
    return os.str();
}

} // namespace

RootSet find_roots(const CPoly1& input, double tol) {
    if (input.degree() < 1)
        throw InvalidArgument("find_roots: polynomial is constant");
    std::vector<Complex> c = input.coeffs();

    RootSet out;
    // exact zero roots peel off directly
    size_t zero_roots = 0;
    while (zero_roots + 1 < c.size() && c[zero_roots] == Complex(0, 0)) ++zero_roots;
    if (zero_roots > 0) c.erase(c.begin(), c.begin() + zero_roots);
    for (size_t i = 0; i < zero_roots; ++i) {
        out.roots.push_back(Complex(0, 0));
        out.residuals.push_back(0.0);
    }
    const int n = static_cast<int>(c.size()) - 1;
    if (n == 0) return out;

    CPoly1 p{std::vector<Complex>(c)};
    CPoly1 dp = p.derivative();

    auto scale_at = [&](Complex z) { return std::max(p.scale_at(std::abs(z)), 1e-300); };

    std::vector<Complex> z(n);
    if (n == 1) {
        z[0] = -c[0] / c[1];
    } else {
        // initial guesses on a circle around the root centroid
        Complex center = -c[n - 1] / (Complex(double(n), 0) * c[n]);
        double r = 0.0;
        for (int k = 0; k < n; ++k) r = std::max(r, std::abs(c[k] / c[n]));
        r = 1.0 + r; // Cauchy bound
        for (int j = 0; j < n; ++j) {
            double th = 2.0 * kPi * j / n + 0.39;
            z[j] = center + 0.6 * r * Complex(std::cos(th), std::sin(th));
        }
        const int max_iter = 400;
        bool done = false;
        for (int iter = 0; iter < max_iter && !done; ++iter) {
            done = true;
            for (int j = 0; j < n; ++j) {
                Complex pj = p.eval(z[j]);
                if (std::abs(pj) <= 0.1 * tol * scale_at(z[j])) continue;
                Complex dj = dp.eval(z[j]);
                Complex w;
                if (std::abs(dj) < 1e-280 * scale_at(z[j])) {
                    // flat spot: nudge off it
                    w = Complex(1e-8, 1e-8) * (1.0 + std::abs(z[j]));
                } else {
                    w = pj / dj;
                }
                Complex s(0, 0);
                for (int k = 0; k < n; ++k) {
                    if (k == j) continue;
                    Complex d = z[j] - z[k];
                    if (std::abs(d) < 1e-280) d = Complex(1e-280, 0);
                    s += 1.0 / d;
                }
                Complex denom = 1.0 - w * s;
                Complex corr = std::abs(denom) < 1e-280 ? w : w / denom;
                z[j] -= corr;
                if (std::abs(corr) > 1e-14 * (1.0 + std::abs(z[j]))) done = false;
            }
        }
    }

    // Newton polish; keep the better iterate
    for (int j = 0; j < n; ++j) {
        Complex best = z[j];
        double best_res = std::abs(p.eval(best));
        Complex cur = best;
        for (int it = 0; it < 8; ++it) {
            Complex d = dp.eval(cur);
            if (std::abs(d) < 1e-280) break;
            cur -= p.eval(cur) / d;
            double res = std::abs(p.eval(cur));
            if (res < best_res) {
                best = cur;
                best_res = res;
            }
        }
        z[j] = best;
    }

    std::vector<double> res(n);
    bool ok = true;
    for (int j = 0; j < n; ++j) {
        res[j] = std::abs(p.eval(z[j]));
        if (res[j] > tol * scale_at(z[j])) ok = false;
    }
    if (!ok)
        throw NumericError("find_roots: no convergence", residual_summary(res));

    for (int j = 0; j < n; ++j) {
        out.roots.push_back(z[j]);
        out.residuals.push_back(res[j]);
    }
    return out;
}

std::pair<Complex, Complex> newton2(const Map2& f, Complex x0, Complex y0, double tol,
                                    int max_iter) {
    Complex x = x0, y = y0;
    for (int it = 0; it < max_iter; ++it) {
        Jet2 j = f(x, y);
        double r = std::max(std::abs(j.f1), std::abs(j.f2));
        if (r <= tol) return {x, y};
        Complex det = j.j11 * j.j22 - j.j12 * j.j21;
        double jscale = std::abs(j.j11) + std::abs(j.j12) + std::abs(j.j21) + std::abs(j.j22);
        if (std::abs(det) < 1e-300 || std::abs(det) < 1e-15 * jscale * jscale) {
            std::ostringstream os;
            os << "iterate (" << x << ", " << y << "), |f| = " << r;
            throw NumericError("newton2: singular Jacobian", os.str());
        }
        Complex dx = (j.f1 * j.j22 - j.f2 * j.j12) / det;
        Complex dy = (j.j11 * j.f2 - j.j21 * j.f1) / det;
        x -= dx;
        y -= dy;
    }
    Jet2 j = f(x, y);
    double r = std::max(std::abs(j.f1), std::abs(j.f2));
    if (r <= tol) return {x, y};
    std::ostringstream os;
    os << "last iterate (" << x << ", " << y << "), |f| = " << r;
    throw NumericError("newton2: no convergence", os.str());
}

void fft(std::vector<Complex>& a, bool inverse) {
    const size_t n = a.size();
    if (!is_pow2(n))
        throw InvalidArgument("fft: length is not a power of two");
    for (size_t i = 1, j = 0; i < n; ++i) {
        size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (size_t len = 2; len <= n; len <<= 1) {
        double ang = 2.0 * kPi / double(len) * (inverse ? 1.0 : -1.0);
        Complex wlen(std::cos(ang), std::sin(ang));
        for (size_t i = 0; i < n; i += len) {
            Complex w(1, 0);
            for (size_t k = 0; k < len / 2; ++k) {
                Complex u = a[i + k];
                Complex v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
    if (inverse)
        for (auto& x : a) x /= double(n);
}

double LaurentData::tail_magnitude() const {
    double m = 0.0;
    for (const auto& [k, a] : coefficients)
        if (k <= -3 && k >= -8) m = std::max(m, std::abs(a));
    return m;
}

LaurentData laurent_extract(const std::vector<Complex>& samples, double radius,
                            Complex center) {
    const size_t n = samples.size();
    if (!is_pow2(n))
        throw InvalidArgument("laurent_extract: sample count is not a power of two");
    if (!(radius > 0))
        throw InvalidArgument("laurent_extract: radius must be positive");
    std::vector<Complex> s = samples;
    fft(s, false);
    LaurentData out;
    out.center = center;
    out.radius = radius;
    const int half = static_cast<int>(n) / 2;
    const double lr = std::log(radius);
    for (int k = -half; k < half; ++k) {
        const size_t idx = static_cast<size_t>((k + int(n)) % int(n));
        // coefficients whose radius power leaves double range are grid
        // roundoff amplified past meaning; report them as zero
        if (std::abs(double(k) * lr) > 690.0) {
            out.coefficients[k] = Complex(0, 0);
            continue;
        }
        out.coefficients[k] = s[idx] / (double(n) * std::pow(radius, k));
    }
    return out;
}

std::vector<Complex> spectral_derivative(const std::vector<Complex>& samples, double radius) {
    const size_t n = samples.size();
    if (!is_pow2(n))
        throw InvalidArgument("spectral_derivative: sample count is not a power of two");
    std::vector<Complex> s = samples;
    fft(s, false);
    // f(t) = sum a_k t^k on |t| = r; the grid values of f' are
    // f'(t_m) = sum_k k a_k r^{k-1} e^{i th_m (k-1)} with
    // k a_k r^{k-1} = k S_k / (n r): the radius powers cancel exactly.
    const int half = static_cast<int>(n) / 2;
    std::vector<Complex> h(n, Complex(0, 0));
    for (int k = -half; k < half; ++k) {
        const size_t idx = static_cast<size_t>((k + int(n)) % int(n));
        const Complex hk = double(k) * s[idx] / (double(n) * radius);
        const int kk = k - 1; // derivative shifts the frequency down by one
        const size_t jdx = static_cast<size_t>(((kk % int(n)) + int(n)) % int(n));
        h[jdx] += hk;
    }
    fft(h, true);
    for (auto& x : h) x *= double(n);
    return h;
}

Pole2Result extract_double_pole(const std::function<std::vector<Complex>(int)>& sample_fn,
                                double radius, const Pole2Options& opts) {
    Pole2Result best;
    bool have_prev = false;
    Complex prev(0, 0);
    for (int n = opts.n_start; n <= opts.n_max; n *= 2) {
        std::vector<Complex> samples = sample_fn(n);
        double gmax = 0.0;
        for (const Complex& s : samples) gmax = std::max(gmax, std::abs(s));
        LaurentData ld = laurent_extract(samples, radius);
        Complex a = ld.coeff(-2);
        best.a_m2 = a;
        best.tail_bound = ld.tail_magnitude();
        best.n_used = n;
        best.laurent = std::move(ld);
        // a_{-2} may be a genuine zero; accept changes at grid-roundoff level
        const double floor_abs = 64.0 * 2.3e-16 * gmax * radius * radius;
        if (have_prev &&
            std::abs(a - prev) <= std::max(opts.stab_rel * std::abs(a), floor_abs)) {
            // gate against the natural a_{-2} scale so that genuinely zero
            // residues do not trip the certificate on roundoff tails
            const double gate = std::max(std::abs(a), 1e-9 * gmax * radius * radius);
            if (best.tail_bound > opts.tail_rel * gate) {
                std::ostringstream os;
                os << "tail " << best.tail_bound << " vs |a_-2| " << std::abs(a);
                throw NumericError("pole order mismatch", os.str());
            }
            return best;
        }
        prev = a;
        have_prev = true;
    }
    std::ostringstream os;
    os << "a_-2 did not stabilize to " << opts.stab_rel << " by N = " << opts.n_max;
    throw NumericError("extract_double_pole: no stabilization", os.str());
}

} // namespace cameral
