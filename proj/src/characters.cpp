#include "spincheck/characters.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace spincheck {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

double uniform01(std::mt19937_64& rng) {
    // 53-bit mantissa draw; bit-identical across platforms, unlike
    // std::uniform_real_distribution.
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double wall_distance(const RootSystem& sys, const std::vector<double>& angles) {
    double best = 1e9;
    for (const auto& a : sys.positive_roots()) {
        double p = 0.0;
        for (std::size_t i = 0; i < angles.size(); ++i) p += a[i].to_double() * angles[i];
        double m = std::fmod(std::fabs(p), kTwoPi);
        best = std::min(best, std::min(m, kTwoPi - m));
    }
    return best;
}

std::vector<double> draw_regular_angles(const RootSystem& sys, std::mt19937_64& rng) {
    const int n = sys.ambient_dim();
    std::vector<double> angles(n);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        for (int i = 0; i < n; ++i) angles[i] = kTwoPi * uniform01(rng);
        if (wall_distance(sys, angles) > 0.05) return angles;
    }
    throw std::runtime_error("sample_tempered_class: could not find a regular class");
}

} // namespace

SatakeClass sample_tempered_class(const RootSystem& sys, std::mt19937_64& rng) {
    SatakeClass s;
    auto angles = draw_regular_angles(sys, rng);
    for (double a : angles) s.theta.emplace_back(a, 0.0);
    s.chi = std::exp(std::complex<double>(0.0, kTwoPi * uniform01(rng)));
    return s;
}

SatakeClass sample_nontempered_class(const RootSystem& sys, std::mt19937_64& rng) {
    SatakeClass s;
    auto angles = draw_regular_angles(sys, rng);
    for (double a : angles)
        s.theta.emplace_back(a, 0.4 * (uniform01(rng) - 0.5));
    double r = 0.8 + 0.4 * uniform01(rng);
    s.chi = r * std::exp(std::complex<double>(0.0, kTwoPi * uniform01(rng)));
    return s;
}

namespace {

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

} // namespace

long long dimension(const RootSystem& sys, const Weight& lambda) {
    if (!sys.is_dominant(lambda)) throw std::domain_error("dimension: lambda not dominant");
    const Weight shifted = lambda + sys.rho();
    __int128 num = 1, den = 1;
    for (const auto& a : sys.positive_roots()) {
        Rat p = shifted.dot(a), q = sys.rho().dot(a);
        num *= static_cast<__int128>(p.num()) * q.den();
        den *= static_cast<__int128>(q.num()) * p.den();
        __int128 g = gcd128(num, den);
        if (g > 1) { num /= g; den /= g; }
    }
    if (den != 1 && den != -1)
        throw std::runtime_error("dimension: Weyl formula did not reduce to an integer");
    return static_cast<long long>(num / den);
}

namespace {

// Dominant weights mu <= lambda with mu in lambda's root-lattice coset,
// enumerated over the bounded coordinate box cut out by dominance.
std::vector<Weight> dominant_weights_below(const RootSystem& sys, const Weight& lambda) {
    const int n = sys.ambient_dim();
    std::vector<Weight> out;

    auto in_cone = [&](const Weight& mu) {
        // lambda - mu must be a nonnegative combination of simple roots
        Weight d = lambda - mu;
        if (sys.type() == LieType::A) {
            Rat prefix;
            for (int k = 0; k < n; ++k) {
                prefix += d[k];
                if (k + 1 < n && prefix < Rat(0)) return false;
            }
            return prefix == Rat(0);
        }
        // type D: prefix sums for the chain part, then the two spin conditions
        Rat prefix;
        for (int k = 0; k + 2 < n; ++k) {
            prefix += d[k];
            if (prefix < Rat(0)) return false;
        }
        Rat head = prefix + d[n - 2];
        if (head - d[n - 1] < Rat(0)) return false;
        if (head + d[n - 1] < Rat(0)) return false;
        return true;
    };
    auto in_coset = [&](const Weight& mu) {
        Weight d = lambda - mu;
        Rat sum;
        for (int k = 0; k < n; ++k) {
            if (!d[k].is_integer()) return false;
            sum += d[k];
        }
        if (sys.type() == LieType::A) return sum == Rat(0);
        return sum.num() % 2 == 0; // D: root lattice = even-sum integer vectors
    };

    if (sys.type() == LieType::A) {
        // mu_k = lambda_k + integer, weakly decreasing, entries in [lambda_n, lambda_1]
        std::vector<Rat> cur(n);
        std::function<void(int)> rec = [&](int k) {
            if (k == n) {
                Weight mu{std::vector<Rat>(cur)};
                if (in_coset(mu) && in_cone(mu)) out.push_back(mu);
                return;
            }
            Rat hi = (k == 0) ? lambda[0] : std::min(cur[k - 1], lambda[0]);
            long long s_hi = (hi - lambda[k]).floor_ll();
            long long s_lo = -(lambda[k] - lambda[n - 1]).floor_ll();
            for (long long s = s_hi; s >= s_lo; --s) {
                cur[k] = lambda[k] + Rat(s);
                rec(k + 1);
            }
        };
        rec(0);
        return out;
    }

    // Type D: c1 >= ... >= c_{n-1} >= |c_n|, all in lambda's integrality class,
    // stepping by 1 stays inside the class.
    const Rat top = lambda[0];
    std::vector<Rat> cur(n);
    std::function<void(int)> rec = [&](int k) {
        if (k == n - 1) {
            Rat bound = cur[n - 2];
            for (Rat v = bound; v >= -bound; v -= Rat(1)) {
                cur[n - 1] = v;
                Weight mu{std::vector<Rat>(cur)};
                if (in_coset(mu) && in_cone(mu)) out.push_back(mu);
            }
            return;
        }
        Rat hi = (k == 0) ? top : cur[k - 1];
        for (Rat v = hi; v >= Rat(0); v -= Rat(1)) {
            cur[k] = v;
            rec(k + 1);
        }
    };
    rec(0);
    return out;
}

struct DominantMults {
    std::map<Weight, long long> mults;
    long long dim = 0;
};

const DominantMults& freudenthal(const RootSystem& sys, const Weight& lambda) {
    static std::mutex mu;
    static std::map<std::tuple<int, int, Weight>, DominantMults> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(static_cast<int>(sys.type()), sys.rank(), lambda);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    if (!sys.is_dominant(lambda))
        throw std::domain_error("weight_multiplicities: lambda not dominant");

    auto dominants = dominant_weights_below(sys, lambda);
    // higher weights first: sort by decreasing height of lambda - mu
    auto height = [&](const Weight& w) { return (lambda - w).dot(sys.rho()); };
    std::sort(dominants.begin(), dominants.end(), [&](const Weight& a, const Weight& b) {
        Rat ha = height(a), hb = height(b);
        if (ha != hb) return ha < hb;
        return a < b;
    });

    DominantMults result;
    const Weight rho = sys.rho();
    const Rat lam_norm = (lambda + rho).dot(lambda + rho);
    for (const auto& mu_w : dominants) {
        if (mu_w == lambda) {
            result.mults[mu_w] = 1;
            continue;
        }
        // (|lambda+rho|^2 - |mu+rho|^2) m(mu) = 2 sum_{a>0} sum_{k>=1} m(mu+ka) <mu+ka, a>
        Rat rhs;
        for (const auto& a : sys.positive_roots()) {
            for (int k = 1;; ++k) {
                Weight up = mu_w + a.scaled(Rat(k));
                auto [rep, ignored] = sys.dominant_representative(up);
                (void)ignored;
                auto found = result.mults.find(rep);
                if (found == result.mults.end()) {
                    // above lambda once the height is exhausted
                    if (height(up) < Rat(0)) break;
                    continue;
                }
                rhs += Rat(2 * found->second) * up.dot(a);
            }
        }
        Rat denom = lam_norm - (mu_w + rho).dot(mu_w + rho);
        Rat m = rhs / denom;
        if (!m.is_integer() || m.num() < 0)
            throw std::runtime_error("freudenthal: non-integer multiplicity");
        if (m.num() > 0) result.mults[mu_w] = m.num();
    }
    return cache.emplace(key, std::move(result)).first->second;
}

// Orbit of a dominant weight under the Weyl group.
std::vector<Weight> weyl_orbit(const RootSystem& sys, const Weight& dom) {
    const int n = sys.ambient_dim();
    std::vector<Rat> vals(dom.coords());
    std::sort(vals.begin(), vals.end(), [](const Rat& a, const Rat& b) { return b < a; });
    std::vector<Weight> out;

    if (sys.type() == LieType::A) {
        do {
            out.push_back(Weight{std::vector<Rat>(vals)});
        } while (std::next_permutation(vals.begin(), vals.end(),
                                       [](const Rat& a, const Rat& b) { return b < a; }));
        return out;
    }

    // Type D: permutations of |c_i| with sign patterns; parity of minus signs
    // is fixed unless some coordinate vanishes.
    std::vector<Rat> mags;
    int neg = 0;
    bool has_zero = false;
    for (const auto& v : dom.coords()) {
        if (v < Rat(0)) ++neg;
        if (v == Rat(0)) has_zero = true;
        mags.push_back(v.abs());
    }
    std::sort(mags.begin(), mags.end(), [](const Rat& a, const Rat& b) { return b < a; });
    do {
        std::vector<int> nonzero;
        for (int i = 0; i < n; ++i)
            if (mags[i] != Rat(0)) nonzero.push_back(i);
        for (std::uint32_t mask = 0; mask < (1u << nonzero.size()); ++mask) {
            if (!has_zero && (__builtin_popcount(mask) % 2) != (neg % 2)) continue;
            std::vector<Rat> c(mags);
            for (std::size_t b = 0; b < nonzero.size(); ++b)
                if (mask & (1u << b)) c[nonzero[b]] = -c[nonzero[b]];
            out.push_back(Weight{std::move(c)});
        }
    } while (std::next_permutation(mags.begin(), mags.end(),
                                   [](const Rat& a, const Rat& b) { return b < a; }));
    return out;
}

} // namespace

const WeightDiagram& weight_multiplicities(const RootSystem& sys, const Weight& lambda) {
    static std::mutex mu;
    static std::map<std::tuple<int, int, Weight>, WeightDiagram> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto key = std::make_tuple(static_cast<int>(sys.type()), sys.rank(), lambda);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }

    const DominantMults& dm = freudenthal(sys, lambda);
    WeightDiagram d;
    d.highest = lambda;
    for (const auto& [dom, mult] : dm.mults)
        for (const auto& w : weyl_orbit(sys, dom)) {
            d.mults[w] = mult;
            d.dimension += mult;
        }

    long long weyl_dim = dimension(sys, lambda);
    if (d.dimension != weyl_dim)
        throw std::runtime_error("weight_multiplicities: diagram size disagrees with Weyl dimension");

    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(static_cast<int>(sys.type()), sys.rank(), lambda);
    return cache.emplace(key, std::move(d)).first->second;
}

std::complex<double> eval_character(const RootSystem& sys, const Weight& lambda,
                                    const SatakeClass& s) {
    const WeightDiagram& d = weight_multiplicities(sys, lambda);
    std::complex<double> sum = 0.0;
    for (const auto& [w, mult] : d.mults) {
        std::complex<double> phase = 0.0;
        for (std::size_t i = 0; i < s.theta.size(); ++i) phase += w[i].to_double() * s.theta[i];
        sum += static_cast<double>(mult) * std::exp(std::complex<double>(0.0, 1.0) * phase);
    }
    return sum;
}

AlternantEvaluator::AlternantEvaluator(const RootSystem& sys, const SatakeClass& s)
    : sys_(sys), s_(s), identity_class_(s.is_identity()) {
    if (identity_class_) return;
    for (const auto& w : sys.enumerate_weyl_group()) {
        std::vector<std::complex<double>> img(sys.ambient_dim());
        for (int i = 0; i < sys.ambient_dim(); ++i) {
            std::complex<double> x = s.theta[w.perm[i]];
            if (w.flip_mask & (1u << i)) x = -x;
            img[i] = x;
        }
        images_.push_back(std::move(img));
        dets_.push_back(w.det);
    }
    std::vector<double> rho_c;
    for (int i = 0; i < sys.ambient_dim(); ++i) rho_c.push_back(sys.rho()[i].to_double());
    denom_ = alternant(rho_c);
    if (std::abs(denom_) < 1e-8)
        throw std::runtime_error("AlternantEvaluator: class too close to a wall");
}

std::complex<double> AlternantEvaluator::alternant(const std::vector<double>& v) const {
    std::complex<double> sum = 0.0;
    for (std::size_t k = 0; k < images_.size(); ++k) {
        std::complex<double> phase = 0.0;
        for (std::size_t i = 0; i < v.size(); ++i) phase += v[i] * images_[k][i];
        sum += static_cast<double>(dets_[k]) * std::exp(std::complex<double>(0.0, 1.0) * phase);
    }
    return sum;
}

std::complex<double> AlternantEvaluator::trace(const Weight& lambda) const {
    if (identity_class_) return static_cast<double>(dimension(sys_, lambda));
    std::vector<double> v(sys_.ambient_dim());
    for (int i = 0; i < sys_.ambient_dim(); ++i) v[i] = (lambda[i] + sys_.rho()[i]).to_double();
    return alternant(v) / denom_;
}

std::complex<double> AlternantEvaluator::trace_labels(const std::vector<long long>& m) const {
    auto it = cache_.find(m);
    if (it != cache_.end()) return it->second;
    std::complex<double> t = trace(sys_.weight_from_labels(m));
    cache_.emplace(m, t);
    return t;
}

std::complex<double> eval_character_alternant(const RootSystem& sys, const Weight& lambda,
                                              const SatakeClass& s) {
    return AlternantEvaluator(sys, s).trace(lambda);
}

Laurent<long long> k_factor(int n1, int n2, int n3, int n5) {
    if (n1 < 0 || n2 < 0 || n3 < 0 || n5 < 0)
        throw std::domain_error("k_factor: arguments must be nonnegative");
    using L = Laurent<long long>;
    auto one_minus = [](int e) { return L(1) - L::monomial(e, 1); };
    L num = one_minus(2 * (n2 + 1)) * one_minus(2 * (n3 + 1)) * one_minus(2 * (n2 + n3 + 2)) *
            one_minus(2 * (n1 + 1)) * one_minus(2 * (n5 + 1));
    L den = one_minus(2) * one_minus(2) * one_minus(2) * one_minus(2) * one_minus(4);
    return num.divide_exact(den).shifted(-(n1 + 2 * n2 + 2 * n3 + n5));
}

} // namespace spincheck
