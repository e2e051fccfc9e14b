#pragma once

#include <array>
#include <complex>
#include <map>
#include <stdexcept>
#include <vector>

#include "spincheck/characters.hpp"
#include "spincheck/laurent.hpp"
#include "spincheck/lie_core.hpp"
#include "spincheck/rep_ring.hpp"

namespace spincheck {

// Truncated power series in y with coefficients in an arbitrary ring C.
// Arithmetic never consults degrees beyond the truncation order, so ring laws
// hold within the truncation.
template <class C>
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order, C zero = C())
        : order_(order), zero_(zero), c_(order + 1, zero) {
        if (order < 0) throw std::invalid_argument("TruncatedSeries: negative order");
    }

    int order() const { return order_; }
    const C& coeff(int d) const { return c_.at(d); }
    C& coeff(int d) { return c_.at(d); }

    TruncatedSeries operator+(const TruncatedSeries& o) const {
        TruncatedSeries r(order_, zero_);
        for (int d = 0; d <= order_; ++d) r.c_[d] = c_[d] + o.c_[d];
        return r;
    }
    TruncatedSeries operator*(const TruncatedSeries& o) const {
        TruncatedSeries r(order_, zero_);
        for (int i = 0; i <= order_; ++i)
            for (int j = 0; i + j <= order_; ++j) r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
        return r;
    }

    bool operator==(const TruncatedSeries& o) const { return c_ == o.c_; }
    bool operator!=(const TruncatedSeries& o) const { return !(*this == o); }

private:
    int order_;
    C zero_;
    std::vector<C> c_;
};

using ComplexSeries = TruncatedSeries<std::complex<double>>;

// One term of the rep-coefficient polynomial P(chi,y): coef * chi^chi_exp *
// y^y_exp * (irreducible with label m).
struct PPolyTerm {
    std::array<long long, 5> label;
    int chi_exp;
    int y_exp;
    long long coef;
};

// P(chi,y) = (1 - chi^8 y^8)
//          + (chi^6 y^6 - chi^2 y^2) (1,0,0,0,0)
//          + chi^3 y^3 (0,0,0,1,0) - chi^5 y^5 (0,0,0,0,1).
// With `inverse`, every chi-exponent is negated.  The vector-representation
// coefficient is the one Brauer's formula forces; the displayed form in the
// source text carries a stray chi^2 y^2 on that term which fails the
// annihilation identity at y^2 and is not used.
std::vector<PPolyTerm> p_poly(bool inverse);

// Degree-d coefficient of the Brion expansion of the spin symmetric algebra:
// sum over 2m + l = d of (m,0,0,0,l) with chi-exponent d.
// Represented per y-degree as a map chi-exponent -> virtual character.
using VCLaurent = std::map<int, VirtualCharacter>;
std::vector<VCLaurent> brion_spin_series(const RootSystem& d5, int order);

// Truncation of prod over diagram weights w (with multiplicity) of
// (1 - exp(i<w,theta>) chi^{chi_power} y)^{-1}.
ComplexSeries euler_factor_series(const RootSystem& sys, const WeightDiagram& weights,
                                  const SatakeClass& s, int chi_power, int order);

} // namespace spincheck
