#include "spincheck/rep_ring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace spincheck {

void VirtualCharacter::add(const Weight& w, long long m) {
    if (m == 0) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_[w] = m;
    } else {
        it->second += m;
        if (it->second == 0) terms_.erase(it);
    }
}

VirtualCharacter& VirtualCharacter::operator+=(const VirtualCharacter& o) {
    for (const auto& [w, m] : o.terms_) add(w, m);
    return *this;
}

VirtualCharacter VirtualCharacter::scaled(long long f) const {
    VirtualCharacter r(*sys_);
    if (f == 0) return r;
    for (const auto& [w, m] : terms_) r.terms_[w] = m * f;
    return r;
}

long long VirtualCharacter::total_dimension() const {
    long long s = 0;
    for (const auto& [w, m] : terms_) s += m * dimension(*sys_, w);
    return s;
}

std::string VirtualCharacter::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, m] : terms_) {
        if (!first) os << " + ";
        first = false;
        if (m != 1) os << m << "*";
        auto c = sys_->fundamental_coords(w);
        os << "(";
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) os << ",";
            os << c[i].num();
        }
        os << ")";
    }
    return first ? "0" : os.str();
}

VirtualCharacter single(const RootSystem& sys, const Weight& lambda) {
    VirtualCharacter v(sys);
    v.add(lambda, 1);
    return v;
}

VirtualCharacter brauer_shift_product(const VirtualCharacter& series_coeff, const Weight& mu) {
    const RootSystem& sys = series_coeff.system();
    if (!sys.is_dominant(mu)) throw std::domain_error("brauer_shift_product: mu not dominant");
    const WeightDiagram& diagram = weight_multiplicities(sys, mu);
    VirtualCharacter out(sys);
    for (const auto& [lambda, mult] : series_coeff.terms()) {
        for (const auto& [nu, nu_mult] : diagram.mults) {
            auto [rep, sign] = sys.dominant_representative(lambda + nu + sys.rho());
            if (sign == 0) continue;
            out.add(rep - sys.rho(), sign * mult * nu_mult);
        }
    }
    return out;
}

VirtualCharacter tensor_decompose(const RootSystem& sys, const Weight& lambda, const Weight& mu) {
    if (!sys.is_dominant(lambda) || !sys.is_dominant(mu))
        throw std::domain_error("tensor_decompose: weights must be dominant");
    // run Brauer over the smaller diagram; the product is symmetric
    const Weight* base = &lambda;
    const Weight* sum_side = &mu;
    if (dimension(sys, mu) > dimension(sys, lambda)) std::swap(base, sum_side);
    VirtualCharacter out = brauer_shift_product(single(sys, *base), *sum_side);
    for (const auto& [w, m] : out.terms())
        if (m < 1) throw std::runtime_error("tensor_decompose: negative multiplicity");
    if (out.total_dimension() != dimension(sys, lambda) * dimension(sys, mu))
        throw std::runtime_error("tensor_decompose: dimension identity failed");
    return out;
}

VirtualCharacter okada_rhs(const RootSystem& d5, int l, int m) {
    if (d5.type() != LieType::D || d5.rank() != 5)
        throw std::domain_error("okada_rhs: requires D5");
    if (l < 0 || m < 0) throw std::domain_error("okada_rhs: negative arguments");
    VirtualCharacter out(d5);
    const int cap = std::min(l, m);
    for (int a = 0; a <= cap; ++a)
        for (int b = 0; a + b <= cap; ++b)
            out.add(d5.weight_from_labels({a, 0, b, 0, static_cast<long long>(m) + l - 2 * a - 2 * b}), 1);
    return out;
}

} // namespace spincheck
