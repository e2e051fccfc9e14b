#pragma once

#include <string>
#include <vector>

#include "spincheck/check_report.hpp"

namespace spincheck {

// Nilpotent-orbit partition calculus: orthogonal-orbit validity, dominance
// order, and the comparisons the vanishing arguments consume.

struct Partition {
    std::vector<int> parts; // weakly decreasing positive integers
    int total = 0;

    explicit Partition(std::vector<int> p);
    static Partition parse(const std::string& text); // "5,2,2,1"

    std::string str() const;
    bool operator==(const Partition& o) const { return parts == o.parts; }
};

enum class Dominance { Less, Greater, Equal, Incomparable };

std::string to_string(Dominance d);

// Nilpotent orbits of SO_n: every even part occurs an even number of times.
bool is_orthogonal_partition(const Partition& p, int n);

// Comparison by prefix partial sums, padding with zeros; totals must agree.
Dominance dominance_compare(const Partition& p, const Partition& q);

bool greater_or_not_related(const Partition& p, const Partition& q);

std::vector<Partition> partitions_of(int n);

// The fixed comparison table the vanishing arguments rely on, checked against
// the prefix-sum definitions.
CheckReport paper_orbit_facts();

} // namespace spincheck
