#pragma once

#include <cstddef>
#include <vector>

namespace kdsim::detail {

/// Classic fixed-coefficient fourth-order Runge-Kutta step for y' = f(t, y)
/// on a contiguous state vector. `rhs(t, y, dydt)` writes the derivative.
/// Scratch buffers live in the stepper so repeated steps do not allocate.
template <typename Scalar>
class Rk4Stepper {
public:
    explicit Rk4Stepper(std::size_t n) : k1_(n), k2_(n), k3_(n), k4_(n), tmp_(n) {}

    template <typename Rhs>
    void step(Rhs&& rhs, double t, double h, std::vector<Scalar>& y)
    {
        const std::size_t n = y.size();
        rhs(t, y, k1_);
        for (std::size_t i = 0; i < n; ++i) tmp_[i] = y[i] + (0.5 * h) * k1_[i];
        rhs(t + 0.5 * h, tmp_, k2_);
        for (std::size_t i = 0; i < n; ++i) tmp_[i] = y[i] + (0.5 * h) * k2_[i];
        rhs(t + 0.5 * h, tmp_, k3_);
        for (std::size_t i = 0; i < n; ++i) tmp_[i] = y[i] + h * k3_[i];
        rhs(t + h, tmp_, k4_);
        const double w = h / 6.0;
        for (std::size_t i = 0; i < n; ++i)
            y[i] += w * (k1_[i] + 2.0 * k2_[i] + 2.0 * k3_[i] + k4_[i]);
    }

private:
    std::vector<Scalar> k1_, k2_, k3_, k4_, tmp_;
};

}  // namespace kdsim::detail
