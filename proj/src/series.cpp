#include "spincheck/series.hpp"

#include <cmath>

namespace spincheck {

std::vector<PPolyTerm> p_poly(bool inverse) {
    std::vector<PPolyTerm> t = {
        {{0, 0, 0, 0, 0}, 0, 0, 1},
        {{0, 0, 0, 0, 0}, 8, 8, -1},
        {{1, 0, 0, 0, 0}, 6, 6, 1},
        {{1, 0, 0, 0, 0}, 2, 2, -1},
        {{0, 0, 0, 1, 0}, 3, 3, 1},
        {{0, 0, 0, 0, 1}, 5, 5, -1},
    };
    if (inverse)
        for (auto& term : t) term.chi_exp = -term.chi_exp;
    return t;
}

std::vector<VCLaurent> brion_spin_series(const RootSystem& d5, int order) {
    if (order < 0) throw std::invalid_argument("brion_spin_series: negative order");
    std::vector<VCLaurent> out(order + 1);
    for (int m = 0; 2 * m <= order; ++m)
        for (int l = 0; 2 * m + l <= order; ++l) {
            const int d = 2 * m + l;
            auto [it, inserted] = out[d].try_emplace(d, VirtualCharacter(d5));
            it->second.add(d5.weight_from_labels({m, 0, 0, 0, l}), 1);
        }
    return out;
}

ComplexSeries euler_factor_series(const RootSystem& sys, const WeightDiagram& weights,
                                  const SatakeClass& s, int chi_power, int order) {
    ComplexSeries series(order);
    series.coeff(0) = 1.0;
    const std::complex<double> chi_p = std::pow(s.chi, chi_power);
    for (const auto& [w, mult] : weights.mults) {
        std::complex<double> phase = 0.0;
        for (std::size_t i = 0; i < s.theta.size(); ++i) phase += w[i].to_double() * s.theta[i];
        const std::complex<double> eig =
            std::exp(std::complex<double>(0.0, 1.0) * phase) * chi_p;
        for (long long rep = 0; rep < mult; ++rep) {
            // multiply by the geometric series of one eigenvalue
            ComplexSeries geo(order);
            std::complex<double> p = 1.0;
            for (int d = 0; d <= order; ++d) {
                geo.coeff(d) = p;
                p *= eig;
            }
            series = series * geo;
        }
    }
    return series;
}

} // namespace spincheck
