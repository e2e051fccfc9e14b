#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "spincheck/laurent.hpp"
#include "spincheck/lie_core.hpp"

namespace spincheck {

// Weight multiplicities (Freudenthal), Weyl dimension formula, and character
// evaluation at Satake classes.

struct WeightDiagram {
    Weight highest;
    std::map<Weight, long long> mults; // full diagram, all Weyl images
    long long dimension = 0;
};

// Semisimple conjugacy class of the dual torus: t_j = exp(i * theta_j), plus
// the unramified character value chi.  Real angles give the tempered case; a
// nonzero imaginary part moves the class off the unit torus.
struct SatakeClass {
    std::vector<std::complex<double>> theta;
    std::complex<double> chi{1.0, 0.0};

    bool is_identity() const {
        for (const auto& t : theta)
            if (t != std::complex<double>(0.0, 0.0)) return false;
        return true;
    }
};

// Draws a tempered class (angles uniform on [0,2pi), chi on the unit circle).
// Classes too close to a reflection wall are rejected and redrawn so that the
// Weyl alternant stays well-conditioned; the draw sequence is deterministic
// for a given generator state.
SatakeClass sample_tempered_class(const RootSystem& sys, std::mt19937_64& rng);

// Same angles drawn as above but pushed off the unit torus (|t_j| != 1).
SatakeClass sample_nontempered_class(const RootSystem& sys, std::mt19937_64& rng);

long long dimension(const RootSystem& sys, const Weight& lambda);

// Complete weight diagram of the irreducible with highest weight lambda.
// Dominant multiplicities are computed by the Freudenthal recursion and
// memoized per highest weight; the full diagram is the Weyl-orbit expansion.
const WeightDiagram& weight_multiplicities(const RootSystem& sys, const Weight& lambda);

// Character value as the plain weight-multiplicity sum (total in s).
std::complex<double> eval_character(const RootSystem& sys, const Weight& lambda,
                                    const SatakeClass& s);

// Weyl alternant ratio; only valid at regular classes, used as a cross-check
// and as the fast evaluator inside the numeric verifier.
std::complex<double> eval_character_alternant(const RootSystem& sys, const Weight& lambda,
                                              const SatakeClass& s);

// Precomputed Weyl images of a class, for evaluating many characters against
// the same class.
class AlternantEvaluator {
public:
    AlternantEvaluator(const RootSystem& sys, const SatakeClass& s);

    std::complex<double> trace(const Weight& lambda) const;
    // Trace of the irreducible with label (m_1,...,m_rank), memoized.
    std::complex<double> trace_labels(const std::vector<long long>& m) const;

    const SatakeClass& satake() const { return s_; }

private:
    std::complex<double> alternant(const std::vector<double>& v) const;

    const RootSystem& sys_;
    SatakeClass s_;
    bool identity_class_;
    std::vector<std::vector<std::complex<double>>> images_; // w(theta)
    std::vector<int> dets_;
    std::complex<double> denom_;
    mutable std::map<std::vector<long long>, std::complex<double>> cache_;
};

// The paper's k(n1,n2,n3,n5) as an exact Laurent polynomial in chi:
//   (1-chi^{2(n2+1)})(1-chi^{2(n3+1)})(1-chi^{2(n2+n3+2)})(1-chi^{2(n1+1)})(1-chi^{2(n5+1)})
//   / ((1-chi^2)^4 (1-chi^4)) * chi^{-(n1+2n2+2n3+n5)}
// The division is exact; a nonzero remainder throws.
Laurent<long long> k_factor(int n1, int n2, int n3, int n5);

} // namespace spincheck
