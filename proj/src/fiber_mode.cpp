#include "fibercav/fiber_mode.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "fibercav/bessel.hpp"
#include "fibercav/constants.hpp"

namespace fibercav {

namespace {

constexpr double kSingleModeV = 2.405;
constexpr int kScanPoints = 2000;
constexpr double kBracketMargin = 1e-9;

struct TransverseArgs {
    double u;  // h a
    double w;  // q a
};

TransverseArgs transverse_args(const FiberSpec& spec, double k, double beta) {
    const double n1 = spec.core_index;
    const double n2 = spec.clad_index;
    const double a = spec.core_radius;
    return {a * std::sqrt(n1 * n1 * k * k - beta * beta),
            a * std::sqrt(beta * beta - n2 * n2 * k * k)};
}

double eigenvalue_equation(const FiberSpec& spec, double k, double beta) {
    const auto [u, w] = transverse_args(spec, k, beta);
    const double j1 = bessel_j(1, u);
    const double k1 = bessel_k(1, w);
    const double jp = (bessel_j(0, u) - j1 / u) / (u * j1);
    const double kp = (-bessel_k(0, w) - k1 / w) / (w * k1);
    const double chi = (spec.clad_index * spec.clad_index) /
                       (spec.core_index * spec.core_index);
    const double ratio = beta / (spec.core_index * k);
    const double inv = 1.0 / (u * u) + 1.0 / (w * w);
    return (jp + kp) * (jp + chi * kp) - ratio * ratio * inv * inv;
}

double refine_root(const FiberSpec& spec, double k, double lo, double hi) {
    double flo = eigenvalue_equation(spec, k, lo);
    for (int i = 0; i < 52; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = eigenvalue_equation(spec, k, mid);
        if (fmid == 0.0) return mid;
        if ((flo < 0.0) == (fmid < 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    // secant polish from the bisected bracket
    double x0 = lo, x1 = hi;
    double f0 = eigenvalue_equation(spec, k, x0);
    double f1 = eigenvalue_equation(spec, k, x1);
    for (int i = 0; i < 40; ++i) {
        if (f1 == f0) break;
        const double x2 = x1 - f1 * (x1 - x0) / (f1 - f0);
        if (!std::isfinite(x2)) break;
        x0 = x1;
        f0 = f1;
        x1 = x2;
        f1 = eigenvalue_equation(spec, k, x1);
        if (std::abs(x1 - x0) < 1e-15 * x1) break;
    }
    return x1;
}

double solve_beta(const FiberSpec& spec, double omega) {
    const double k = omega / kSpeedOfLight;
    const double lo = spec.clad_index * k * (1.0 + kBracketMargin);
    const double hi = spec.core_index * k * (1.0 - kBracketMargin);
    const double step = (hi - lo) / (kScanPoints - 1);

    std::vector<double> roots;
    double prev = eigenvalue_equation(spec, k, lo);
    double prev_beta = lo;
    for (int i = 1; i < kScanPoints; ++i) {
        const double beta = lo + i * step;
        const double val = eigenvalue_equation(spec, k, beta);
        if ((prev < 0.0) != (val < 0.0)) {
            roots.push_back(refine_root(spec, k, prev_beta, beta));
        }
        prev = val;
        prev_beta = beta;
    }
    if (roots.empty())
        throw NoGuidedMode("no HE11 root in (n2 k, n1 k)");
    return *std::max_element(roots.begin(), roots.end());
}

struct RawProfile {
    double e_r;
    double e_phi;
    double e_z;
};

// Unnormalized HE11 profile component magnitudes, one function per branch so
// that the split normalization quadrature can take one-sided limits at r = a.
RawProfile core_profile(double beta, double h, double s, double r) {
    const double hr = h * r;
    const double c = beta / (2.0 * h);
    return {std::abs(c * ((1.0 - s) * bessel_j(0, hr) - (1.0 + s) * bessel_j(2, hr))),
            std::abs(c * ((1.0 - s) * bessel_j(0, hr) + (1.0 + s) * bessel_j(2, hr))),
            std::abs(bessel_j(1, hr))};
}

RawProfile clad_profile(double beta, double q, double s, double clad_match, double r) {
    const double qr = q * r;
    const double c = clad_match * beta / (2.0 * q);
    return {std::abs(c * ((1.0 - s) * bessel_k(0, qr) + (1.0 + s) * bessel_k(2, qr))),
            std::abs(c * ((1.0 - s) * bessel_k(0, qr) - (1.0 + s) * bessel_k(2, qr))),
            std::abs(clad_match * bessel_k(1, qr))};
}

RawProfile raw_profile(const FiberSpec& spec, double beta, double h, double q,
                       double s, double clad_match, double r) {
    if (r < spec.core_radius) return core_profile(beta, h, s, r);
    return clad_profile(beta, q, s, clad_match, r);
}

template <class F>
double simpson(const F& f, double a, double b, double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

template <class F>
double adaptive_simpson_impl(const F& f, double a, double b, double fa, double fm,
                             double fb, double whole, double eps, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(f, a, m, fa, flm, fm);
    const double right = simpson(f, m, b, fm, frm, fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * eps)
        return left + right + delta / 15.0;
    return adaptive_simpson_impl(f, a, m, fa, flm, fm, left, 0.5 * eps, depth - 1) +
           adaptive_simpson_impl(f, m, b, fm, frm, fb, right, 0.5 * eps, depth - 1);
}

template <class F>
double adaptive_simpson(const F& f, double a, double b, double rel_tol) {
    const double fa = f(a);
    const double fm = f(0.5 * (a + b));
    const double fb = f(b);
    const double whole = simpson(f, a, b, fa, fm, fb);
    const double eps = rel_tol * std::max(std::abs(whole), 1e-300);
    return adaptive_simpson_impl(f, a, b, fa, fm, fb, whole, eps, 28);
}

}  // namespace

double FiberSpec::v_parameter(double omega) const {
    const double k = omega / kSpeedOfLight;
    return k * core_radius * std::sqrt(core_index * core_index - clad_index * clad_index);
}

double dispersion_residual(const FiberSpec& spec, double omega, double beta) {
    return eigenvalue_equation(spec, omega / kSpeedOfLight, beta);
}

GuidedModeSolution solve_dispersion(const FiberSpec& spec, double omega) {
    if (spec.core_radius <= 0.0 || spec.core_index <= spec.clad_index || spec.clad_index < 1.0)
        throw SimulationError("invalid fiber spec");
    if (spec.v_parameter(omega) >= kSingleModeV)
        throw MultiMode("V parameter exceeds the single-mode bound 2.405");

    GuidedModeSolution sol;
    sol.spec_ = spec;
    sol.omega_ = omega;
    sol.beta_ = solve_beta(spec, omega);

    const double rel_step = 1e-6;
    const double beta_plus = solve_beta(spec, omega * (1.0 + rel_step));
    const double beta_minus = solve_beta(spec, omega * (1.0 - rel_step));
    sol.beta_prime_ = (beta_plus - beta_minus) / (2.0 * rel_step * omega);

    const double vg = 1.0 / sol.beta_prime_;
    if (!(vg > kSpeedOfLight / spec.core_index && vg < kSpeedOfLight))
        throw SimulationError("group velocity outside (c/n1, c)");

    const double k = omega / kSpeedOfLight;
    const auto [u, w] = transverse_args(spec, k, sol.beta_);
    const double a = spec.core_radius;
    sol.h_ = u / a;
    sol.q_ = w / a;

    const double j1 = bessel_j(1, u);
    const double k1 = bessel_k(1, w);
    const double jp = (bessel_j(0, u) - j1 / u) / (u * j1);
    const double kp = (-bessel_k(0, w) - k1 / w) / (w * k1);
    sol.s_ = (1.0 / (u * u) + 1.0 / (w * w)) / (jp + kp);
    sol.clad_match_ = j1 / k1;

    // Normalization: int n^2 |e|^2 dA = 1, split at the index step with
    // one-sided profile limits on each side.
    const auto weight = [](double n_index, double r, const RawProfile& p) {
        return n_index * n_index * r *
               (p.e_r * p.e_r + p.e_phi * p.e_phi + p.e_z * p.e_z);
    };
    const auto core_density = [&](double r) {
        return weight(spec.core_index, r, core_profile(sol.beta_, sol.h_, sol.s_, r));
    };
    const auto clad_density = [&](double r) {
        return weight(spec.clad_index, r,
                      clad_profile(sol.beta_, sol.q_, sol.s_, sol.clad_match_, r));
    };
    const double tail = a + 20.0 / sol.q_;
    const double core = adaptive_simpson(core_density, 0.0, a, 1e-12);
    const double clad = adaptive_simpson(clad_density, a, tail, 1e-12);
    sol.norm_ = 1.0 / std::sqrt(2.0 * kPi * (core + clad));
    return sol;
}

ProfileMagnitudes GuidedModeSolution::profile(double r) const {
    const RawProfile p = raw_profile(spec_, beta_, h_, q_, s_, clad_match_, r);
    ProfileMagnitudes out;
    out.e_r = norm_ * p.e_r;
    out.e_phi = norm_ * p.e_phi;
    out.e_z = norm_ * p.e_z;
    out.e_minus1 = (out.e_r + out.e_phi) / std::sqrt(2.0);
    return out;
}

double guided_decay_rate(const GuidedModeSolution& sol, double dipole_moment, double r) {
    const ProfileMagnitudes p = sol.profile(r);
    const double e_minus1 = p.e_minus1;
    const double e_plus1 = std::abs(p.e_r - p.e_phi) / std::sqrt(2.0);
    // Sum over propagation directions and polarizations: the dipole couples
    // to |e_-1| of the co-rotating modes and |e_+1| of the counter-rotating ones.
    const double sum = 2.0 * (e_minus1 * e_minus1 + e_plus1 * e_plus1);
    const double d2 = dipole_moment * dipole_moment;
    return sol.angular_frequency() * d2 /
           (2.0 * kVacuumPermittivity * kHbar * sol.group_velocity()) * sum;
}

}  // namespace fibercav
