#include "spincheck/lie_core.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace spincheck {

Weight Weight::operator+(const Weight& o) const {
    std::vector<Rat> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] + o.c_[i];
    return Weight(std::move(r));
}

Weight Weight::operator-(const Weight& o) const {
    std::vector<Rat> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] - o.c_[i];
    return Weight(std::move(r));
}

Weight Weight::operator-() const {
    std::vector<Rat> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    return Weight(std::move(r));
}

Weight Weight::scaled(const Rat& f) const {
    std::vector<Rat> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * f;
    return Weight(std::move(r));
}

Rat Weight::dot(const Weight& o) const {
    Rat s;
    for (std::size_t i = 0; i < c_.size(); ++i) s += c_[i] * o.c_[i];
    return s;
}

bool Weight::is_zero() const {
    for (const auto& x : c_)
        if (x != Rat(0)) return false;
    return true;
}

bool Weight::operator<(const Weight& o) const {
    for (std::size_t i = 0; i < c_.size() && i < o.c_.size(); ++i) {
        if (c_[i] < o.c_[i]) return true;
        if (o.c_[i] < c_[i]) return false;
    }
    return c_.size() < o.c_.size();
}

std::string Weight::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ",";
        os << c_[i].num();
        if (!c_[i].is_integer()) os << "/" << c_[i].den();
    }
    os << ")";
    return os.str();
}

Weight WeylElement::apply(const Weight& v) const {
    std::vector<Rat> r(dim);
    for (int i = 0; i < dim; ++i) {
        Rat x = v[perm[i]];
        if (flip_mask & (1u << i)) x = -x;
        r[i] = x;
    }
    return Weight(std::move(r));
}

namespace {

Weight basis_vector(int dim, int i) {
    std::vector<Rat> c(dim, Rat(0));
    c[i] = Rat(1);
    return Weight(std::move(c));
}

int permutation_parity(const std::vector<int>& perm) {
    std::vector<bool> seen(perm.size(), false);
    int parity = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        std::size_t j = i;
        int len = 0;
        while (!seen[j]) {
            seen[j] = true;
            j = perm[j];
            ++len;
        }
        parity ^= (len - 1) & 1;
    }
    return parity ? -1 : 1;
}

} // namespace

RootSystem::RootSystem(LieType type, int rank) : type_(type), rank_(rank) {
    if (rank < 1) throw std::invalid_argument("RootSystem: rank must be >= 1");
    if (type == LieType::D && rank < 3)
        throw std::invalid_argument("RootSystem: type D requires rank >= 3");
    if (rank > 5) throw std::invalid_argument("RootSystem: rank > 5 unsupported");

    ambient_ = (type == LieType::A) ? rank + 1 : rank;
    const int n = ambient_;

    if (type == LieType::A) {
        for (int i = 0; i < rank; ++i)
            simple_.push_back(basis_vector(n, i) - basis_vector(n, i + 1));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                positive_.push_back(basis_vector(n, i) - basis_vector(n, j));
        // fundamental weight k: e_1+...+e_k - (k/n) * (e_1+...+e_n)
        for (int k = 1; k <= rank; ++k) {
            std::vector<Rat> c(n);
            for (int i = 0; i < n; ++i) c[i] = (i < k ? Rat(1) : Rat(0)) - Rat(k, n);
            fundamental_.push_back(Weight(std::move(c)));
        }
    } else {
        for (int i = 0; i + 1 < rank; ++i)
            simple_.push_back(basis_vector(n, i) - basis_vector(n, i + 1));
        simple_.push_back(basis_vector(n, rank - 2) + basis_vector(n, rank - 1));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                positive_.push_back(basis_vector(n, i) - basis_vector(n, j));
                positive_.push_back(basis_vector(n, i) + basis_vector(n, j));
            }
        for (int k = 1; k <= rank - 2; ++k) {
            std::vector<Rat> c(n, Rat(0));
            for (int i = 0; i < k; ++i) c[i] = Rat(1);
            fundamental_.push_back(Weight(std::move(c)));
        }
        std::vector<Rat> cm(n, Rat(1, 2)), cp(n, Rat(1, 2));
        cm[n - 1] = Rat(-1, 2);
        fundamental_.push_back(Weight(std::move(cm))); // varpi_{n-1}
        fundamental_.push_back(Weight(std::move(cp))); // varpi_n
    }

    Weight half_sum(std::vector<Rat>(n, Rat(0)));
    for (const auto& r : positive_) half_sum = half_sum + r;
    rho_ = half_sum.scaled(Rat(1, 2));

    for (const auto& r : positive_) {
        root_set_.insert(r);
        root_set_.insert(-r);
    }
}

const RootSystem& RootSystem::get(LieType type, int rank) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, const RootSystem*> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(static_cast<int>(type), rank);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, new RootSystem(type, rank)).first;
    return *it->second;
}

Weight RootSystem::zero_weight() const {
    return Weight(std::vector<Rat>(ambient_, Rat(0)));
}

Weight RootSystem::weight_from_labels(const std::vector<long long>& m) const {
    if (static_cast<int>(m.size()) != rank_)
        throw std::invalid_argument("weight_from_labels: label length != rank");
    Weight w = zero_weight();
    for (int i = 0; i < rank_; ++i) w = w + fundamental_[i].scaled(Rat(m[i]));
    return w;
}

std::vector<Rat> RootSystem::fundamental_coords(const Weight& v) const {
    // all roots have norm^2 = 2, so <v, alpha_i^vee> = <v, alpha_i>
    std::vector<Rat> c(rank_);
    for (int i = 0; i < rank_; ++i) c[i] = v.dot(simple_[i]);
    return c;
}

bool RootSystem::is_dominant(const Weight& v) const {
    for (const auto& a : simple_)
        if (v.dot(a) < Rat(0)) return false;
    return true;
}

std::pair<Weight, int> RootSystem::dominant_representative(const Weight& v) const {
    const int n = ambient_;
    if (type_ == LieType::A) {
        std::vector<std::pair<Rat, int>> entries;
        for (int i = 0; i < n; ++i) entries.emplace_back(v[i], i);
        std::stable_sort(entries.begin(), entries.end(),
                         [](const auto& a, const auto& b) { return b.first < a.first; });
        std::vector<Rat> sorted(n);
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) {
            sorted[i] = entries[i].first;
            perm[i] = entries[i].second;
        }
        for (int i = 0; i + 1 < n; ++i)
            if (sorted[i] == sorted[i + 1]) return {Weight(std::move(sorted)), 0};
        return {Weight(std::move(sorted)), permutation_parity(perm)};
    }

    // Type D: sort |c_i| descending; an even number of sign flips is free, so
    // an odd count of negative entries moves one sign to the last coordinate.
    std::vector<std::pair<Rat, int>> entries;
    int negatives = 0;
    for (int i = 0; i < n; ++i) {
        if (v[i] < Rat(0)) ++negatives;
        entries.emplace_back(v[i].abs(), i);
    }
    std::stable_sort(entries.begin(), entries.end(),
                     [](const auto& a, const auto& b) { return b.first < a.first; });
    std::vector<Rat> sorted(n);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) {
        sorted[i] = entries[i].first;
        perm[i] = entries[i].second;
    }
    bool wall = false;
    for (int i = 0; i + 1 < n; ++i)
        if (sorted[i] == sorted[i + 1]) wall = true;
    if (negatives % 2 == 1) sorted[n - 1] = -sorted[n - 1];
    if (wall) return {Weight(std::move(sorted)), 0};
    return {Weight(std::move(sorted)), permutation_parity(perm)};
}

bool RootSystem::stabilizer_is_trivial(const Weight& v) const {
    for (const auto& w : enumerate_weyl_group()) {
        bool identity = w.flip_mask == 0;
        for (int i = 0; identity && i < ambient_; ++i) identity = (w.perm[i] == i);
        if (identity) continue;
        if (w.apply(v) == v) return false;
    }
    return true;
}

long long RootSystem::weyl_order() const {
    long long f = 1;
    for (int i = 2; i <= ambient_; ++i) f *= i;
    if (type_ == LieType::A) return f;
    return f << (rank_ - 1); // 2^{n-1} n!
}

std::vector<WeylElement> RootSystem::enumerate_weyl_group() const {
    if (rank_ > 5)
        throw std::invalid_argument("enumerate_weyl_group: rank too large for exhaustive enumeration");
    const int n = ambient_;
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;

    std::vector<WeylElement> out;
    out.reserve(weyl_order());
    do {
        int parity = permutation_parity(perm);
        if (type_ == LieType::A) {
            WeylElement w;
            w.dim = static_cast<std::uint8_t>(n);
            for (int i = 0; i < n; ++i) w.perm[i] = static_cast<std::uint8_t>(perm[i]);
            w.det = parity;
            out.push_back(w);
        } else {
            for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
                if (__builtin_popcount(mask) % 2 != 0) continue;
                WeylElement w;
                w.dim = static_cast<std::uint8_t>(n);
                for (int i = 0; i < n; ++i) w.perm[i] = static_cast<std::uint8_t>(perm[i]);
                w.flip_mask = mask;
                w.det = parity; // even sign flips have determinant +1
                out.push_back(w);
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

} // namespace spincheck
