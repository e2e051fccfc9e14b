#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>

namespace spincheck {

// Sparse Laurent polynomial in the seven substitution variables of the
// coefficient identities: X1, X2, X3, X5, Y4, chi, y.  Integer coefficients;
// all arithmetic exact.
class MultiPoly {
public:
    static constexpr int kVars = 7;
    enum Var { X1 = 0, X2 = 1, X3 = 2, X5 = 3, Y4 = 4, CHI = 5, Y = 6 };
    using Expo = std::array<int, kVars>;

    MultiPoly() = default;

    static MultiPoly constant(long long c) {
        MultiPoly p;
        if (c != 0) p.c_[Expo{}] = c;
        return p;
    }
    static MultiPoly monomial(long long c, const Expo& e) {
        MultiPoly p;
        if (c != 0) p.c_[e] = c;
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    std::size_t term_count() const { return c_.size(); }
    const std::map<Expo, long long>& terms() const { return c_; }

    void add_term(const Expo& e, long long v) {
        if (v == 0) return;
        auto it = c_.find(e);
        if (it == c_.end()) {
            c_[e] = v;
        } else {
            it->second += v;
            if (it->second == 0) c_.erase(it);
        }
    }

    MultiPoly operator+(const MultiPoly& o) const {
        MultiPoly r = *this;
        for (const auto& [e, v] : o.c_) r.add_term(e, v);
        return r;
    }
    MultiPoly operator-(const MultiPoly& o) const {
        MultiPoly r = *this;
        for (const auto& [e, v] : o.c_) r.add_term(e, -v);
        return r;
    }
    MultiPoly operator*(const MultiPoly& o) const {
        MultiPoly r;
        for (const auto& [e1, v1] : c_)
            for (const auto& [e2, v2] : o.c_) {
                Expo e;
                for (int i = 0; i < kVars; ++i) e[i] = e1[i] + e2[i];
                r.add_term(e, v1 * v2);
            }
        return r;
    }
    MultiPoly& operator+=(const MultiPoly& o) {
        for (const auto& [e, v] : o.c_) add_term(e, v);
        return *this;
    }

    bool operator==(const MultiPoly& o) const { return c_ == o.c_; }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    std::string str() const {
        static const char* names[kVars] = {"X1", "X2", "X3", "X5", "Y4", "chi", "y"};
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, v] : c_) {
            if (!first) os << " + ";
            first = false;
            os << v;
            for (int i = 0; i < kVars; ++i)
                if (e[i] != 0) os << "*" << names[i] << "^" << e[i];
        }
        return os.str();
    }

private:
    std::map<Expo, long long> c_;
};

// 1 - c * (product of one-variable powers); the building block of every
// binomial factor in the identities.
inline MultiPoly one_minus(const MultiPoly& m) { return MultiPoly::constant(1) - m; }

inline MultiPoly var_pow(MultiPoly::Var v, int e, long long c = 1) {
    MultiPoly::Expo ex{};
    ex[v] = e;
    return MultiPoly::monomial(c, ex);
}

} // namespace spincheck
