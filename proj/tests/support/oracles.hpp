#pragma once

// Reference implementations used only by the tests. None of them share code
// with the library: Bessel values come from the power series, the coupled
// mode propagator from a dense eigendecomposition.

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double h = 6.62607015e-34;
inline constexpr double hbar = h / (2.0 * pi);
inline constexpr double me = 9.10938370e-31;
inline constexpr double e = 1.60217663e-19;
inline constexpr double eps0 = 8.85418781e-12;
inline constexpr double c = 299792458.0;
inline constexpr double amu = 1.66053907e-27;

// J_m(x) for integer m >= 0 by its Taylor series; fine for |x| <= ~25.
inline double bessel_series(int m, double x)
{
    if (m < 0) return (m % 2 ? -1.0 : 1.0) * bessel_series(-m, x);
    long double term = 1.0L;
    for (int i = 1; i <= m; ++i) term *= static_cast<long double>(x) / 2.0L / i;
    long double sum = term;
    const long double q = -static_cast<long double>(x) * x / 4.0L;
    for (int k = 1; k < 400; ++k) {
        term *= q / (static_cast<long double>(k) * (k + m));
        sum += term;
        if (std::abs(term) < 1e-30L * std::abs(sum) && k > static_cast<int>(std::abs(x))) break;
    }
    return static_cast<double>(sum);
}

// Exact solution of i dc/dt = H c for the constant Hamiltonian
//   H_nn = eps (n + delta)^2 + diag_shift,  H_{n,n+-2} = coupling
// on modes n_min..n_max.
inline std::vector<std::complex<double>> propagate_exact(int n_min, int n_max, double eps, double delta,
                                                         double diag_shift, double coupling,
                                                         const std::vector<std::complex<double>>& c0, double t)
{
    const int size = n_max - n_min + 1;
    Eigen::MatrixXd H = Eigen::MatrixXd::Zero(size, size);
    for (int i = 0; i < size; ++i) {
        const double n = n_min + i;
        H(i, i) = eps * (n + delta) * (n + delta) + diag_shift;
        if (i + 2 < size) H(i, i + 2) = H(i + 2, i) = coupling;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H);
    Eigen::VectorXcd v(size);
    for (int i = 0; i < size; ++i) v(i) = c0[static_cast<std::size_t>(i)];
    const Eigen::MatrixXcd V = es.eigenvectors().cast<std::complex<double>>();
    Eigen::VectorXcd w = V.adjoint() * v;
    for (int i = 0; i < size; ++i) w(i) *= std::exp(std::complex<double>(0.0, -es.eigenvalues()(i) * t));
    const Eigen::VectorXcd out = V * w;
    return {out.data(), out.data() + size};
}

// Composite Simpson rule with an even number of intervals.
inline double simpson(const std::function<double(double)>& f, double a, double b, int intervals)
{
    if (intervals % 2) ++intervals;
    const double hstep = (b - a) / intervals;
    double s = f(a) + f(b);
    for (int i = 1; i < intervals; ++i) s += f(a + i * hstep) * (i % 2 ? 4.0 : 2.0);
    return s * hstep / 3.0;
}

}  // namespace oracle
