#pragma once

#include <map>
#include <string>

#include "spincheck/characters.hpp"
#include "spincheck/lie_core.hpp"

namespace spincheck {

// Exact representation-ring arithmetic over dominant weights.  Labels are
// always (m_1,...,m_rank) meaning sum m_i * varpi_i; the paper's permuted
// (n_2,n_3,n_4,n_5,n_1) indexing is translated inside the verifier only.

class VirtualCharacter {
public:
    explicit VirtualCharacter(const RootSystem& sys) : sys_(&sys) {}

    const RootSystem& system() const { return *sys_; }
    const std::map<Weight, long long>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t support_size() const { return terms_.size(); }

    long long mult(const Weight& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? 0 : it->second;
    }

    void add(const Weight& w, long long m);
    VirtualCharacter& operator+=(const VirtualCharacter& o);
    VirtualCharacter scaled(long long f) const;

    bool operator==(const VirtualCharacter& o) const { return terms_ == o.terms_; }
    bool operator!=(const VirtualCharacter& o) const { return !(*this == o); }

    // sum of mult * dim over the support
    long long total_dimension() const;

    std::string str() const;

private:
    const RootSystem* sys_;
    std::map<Weight, long long> terms_;
};

VirtualCharacter single(const RootSystem& sys, const Weight& lambda);

// Tensor product multiplicities via Brauer's formula over the weight diagram
// of mu:  chi_lambda chi_mu = sum_nu s_nu chi_{|lambda+nu+rho|-rho}.
VirtualCharacter tensor_decompose(const RootSystem& sys, const Weight& lambda, const Weight& mu);

// Brauer shift applied term-by-term to a virtual character.
VirtualCharacter brauer_shift_product(const VirtualCharacter& series_coeff, const Weight& mu);

// Right side of the paper's rectangular tensor identity:
//   sum over a,b >= 0, a+b <= min(m,l) of (a,0,b,0,m+l-2a-2b), multiplicity 1.
VirtualCharacter okada_rhs(const RootSystem& d5, int l, int m);

} // namespace spincheck
