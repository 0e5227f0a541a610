#include "fluxq/coupling.hpp"

namespace fluxq {

using constants::phi0;

double magnetic_energy(const CouplingModel& model, std::span<const double> fluxes) {
    model.validate();
    if (static_cast<int>(fluxes.size()) != model.n_squids)
        throw RangeError("magnetic_energy: flux vector length must equal N");
    double quad = 0.0, grad = 0.0;
    for (std::size_t k = 0; k < fluxes.size(); ++k) quad += fluxes[k] * fluxes[k];
    for (std::size_t k = 0; k + 1 < fluxes.size(); ++k) {
        const double d = fluxes[k + 1] - fluxes[k];
        grad += d * d;
    }
    return quad / (2.0 * (model.L + 2.0 * model.M)) +
           model.M / (2.0 * model.L * model.L) * grad;
}

Eigen::MatrixXd tridiagonal_matrix(const CouplingModel& model) {
    const int n = model.n_squids;
    Eigen::MatrixXd a = Eigen::MatrixXd::Identity(n, n);
    for (int i = 0; i + 1 < n; ++i) {
        a(i, i + 1) = model.ratio();
        a(i + 1, i) = model.ratio();
    }
    return a;
}

double magnetic_energy_exact(const CouplingModel& model, std::span<const double> fluxes) {
    model.validate();
    if (static_cast<int>(fluxes.size()) != model.n_squids)
        throw RangeError("magnetic_energy_exact: flux vector length must equal N");
    const Eigen::MatrixXd a = tridiagonal_matrix(model);
    Eigen::VectorXd phi(model.n_squids);
    for (int i = 0; i < model.n_squids; ++i) phi(i) = fluxes[i];
    const Eigen::VectorXd x = a.ldlt().solve(phi);
    return 0.5 * phi.dot(x) / model.L;
}

Eigen::MatrixXd tridiagonal_inverse_first_order(const CouplingModel& model) {
    model.validate();
    const int n = model.n_squids;
    Eigen::MatrixXd b = Eigen::MatrixXd::Identity(n, n);
    for (int i = 0; i + 1 < n; ++i) {
        b(i, i + 1) = -model.ratio();
        b(i + 1, i) = -model.ratio();
    }
    return b;
}

IsingParams map_to_ising(double L, double M, int N, double delta, double e_err) {
    if (!(L > 0.0) || !(M > 0.0) || N < 1)
        throw RangeError("map_to_ising: L, M, N must be positive");
    if (delta < 0.0 || e_err < 0.0)
        throw RangeError("map_to_ising: delta and e_err must be non-negative");
    IsingParams p;
    p.J = M * phi0 * phi0 / (2.0 * static_cast<double>(N) * N * L * L);
    p.h = delta / 2.0;
    p.eps = e_err / 2.0;
    return p;
}

double required_mutual_for_R(double L, int N, double delta, double R_target) {
    if (!(R_target > 0.0)) throw RangeError("required_mutual_for_R: R_target must be positive");
    if (!(L > 0.0) || N < 1 || !(delta >= 0.0))
        throw RangeError("required_mutual_for_R: invalid inputs");
    const double m = static_cast<double>(N) * N * L * L * delta / (R_target * phi0 * phi0);
    if (m / L >= 0.2)
        throw RatioTooLarge("required_mutual_for_R: design needs M/L >= 0.2, outside the first-order regime");
    return m;
}

} // namespace fluxq
