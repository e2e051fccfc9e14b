#pragma once

#include <complex>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

namespace spincheck {

// Sparse Laurent polynomial in one variable: map from integer exponent to
// coefficient, with no stored zeros.  Exact for exact coefficient types.
template <class T>
class Laurent {
public:
    Laurent() = default;
    explicit Laurent(T constant) {
        if (!(constant == T(0))) c_[0] = std::move(constant);
    }
    static Laurent monomial(int exp, T coef) {
        Laurent p;
        if (!(coef == T(0))) p.c_[exp] = std::move(coef);
        return p;
    }

    const std::map<int, T>& terms() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    T coeff(int exp) const {
        auto it = c_.find(exp);
        return it == c_.end() ? T(0) : it->second;
    }

    void add_term(int exp, const T& coef) {
        if (coef == T(0)) return;
        auto it = c_.find(exp);
        if (it == c_.end()) {
            c_[exp] = coef;
        } else {
            it->second = it->second + coef;
            if (it->second == T(0)) c_.erase(it);
        }
    }

    Laurent operator+(const Laurent& o) const {
        Laurent r = *this;
        for (const auto& [e, v] : o.c_) r.add_term(e, v);
        return r;
    }
    Laurent operator-(const Laurent& o) const {
        Laurent r = *this;
        for (const auto& [e, v] : o.c_) r.add_term(e, T(0) - v);
        return r;
    }
    Laurent operator*(const Laurent& o) const {
        Laurent r;
        for (const auto& [e1, v1] : c_)
            for (const auto& [e2, v2] : o.c_) r.add_term(e1 + e2, v1 * v2);
        return r;
    }
    Laurent scaled(const T& f) const {
        Laurent r;
        for (const auto& [e, v] : c_) r.add_term(e, v * f);
        return r;
    }
    Laurent shifted(int delta) const {
        Laurent r;
        for (const auto& [e, v] : c_) r.c_[e + delta] = v;
        return r;
    }

    bool operator==(const Laurent& o) const { return c_ == o.c_; }
    bool operator!=(const Laurent& o) const { return !(*this == o); }

    int min_exp() const {
        if (c_.empty()) throw std::domain_error("Laurent: min_exp of zero");
        return c_.begin()->first;
    }
    int max_exp() const {
        if (c_.empty()) throw std::domain_error("Laurent: max_exp of zero");
        return c_.rbegin()->first;
    }

    // Exact division; throws if the remainder is nonzero.  The divisor's
    // lowest-order term must be a unit of T (it is 1 in every use here).
    Laurent divide_exact(const Laurent& d) const {
        if (d.is_zero()) throw std::domain_error("Laurent: division by zero");
        if (is_zero()) return Laurent();
        Laurent rem = *this, q;
        const int dlo = d.min_exp();
        const T& dc = d.c_.begin()->second;
        const int q_max = max_exp() - d.max_exp(); // top exponent of an exact quotient
        while (!rem.is_zero()) {
            const int rlo = rem.min_exp();
            if (rlo - dlo > q_max)
                throw std::runtime_error("Laurent: nonzero remainder in exact division");
            T factor = rem.c_.begin()->second / dc;
            if (!(factor * dc == rem.c_.begin()->second))
                throw std::runtime_error("Laurent: inexact division");
            q.add_term(rlo - dlo, factor);
            for (const auto& [e, v] : d.c_) rem.add_term(rlo - dlo + e, T(0) - v * factor);
        }
        return q;
    }

    std::complex<double> eval(std::complex<double> x) const {
        std::complex<double> s = 0.0;
        for (const auto& [e, v] : c_) s += static_cast<double>(v) * std::pow(x, e);
        return s;
    }

    std::string str(const std::string& var = "x") const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, v] : c_) {
            if (!first) os << " + ";
            first = false;
            os << v;
            if (e != 0) os << "*" << var << "^" << e;
        }
        return os.str();
    }

private:
    std::map<int, T> c_;
};

} // namespace spincheck
