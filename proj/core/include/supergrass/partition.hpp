#pragma once

#include <compare>
#include <map>
#include <vector>

#include "supergrass/rational.hpp"

namespace sgr {

/// Weakly decreasing sequence of positive integers (trailing zeros stripped).
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const;                     // |lambda|
    int length() const { return static_cast<int>(parts_.size()); }
    int part(int i) const { return i < length() ? parts_[i] : 0; }
    bool empty() const { return parts_.empty(); }

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

struct BoxBound {
    int rows = 0;
    int cols = 0;
    bool fits(const Partition& p) const {
        return p.length() <= rows && p.part(0) <= cols;
    }
};

/// Finitely supported degree -> dimension map.
struct GradedDims {
    std::map<int, Int> dims;
    Int total() const;
    Int at(int d) const;
};

Partition conjugate(const Partition& p);

/// dim S_p(C^n) by the hook content formula; 0 when length(p) > n.
Int dim_schur(const Partition& p, int n);

/// Poincare polynomial of Gr_s(C^N): dims[2k] = #partitions of k in an
/// s x (N-s) box. Degrees are doubled.
GradedDims gaussian_poincare(int s, int N);

/// Littlewood-Richardson expansion of s_p * s_q, keeping only terms inside
/// the box.
std::map<Partition, Int> lr_expand_in_box(const Partition& p, const Partition& q,
                                          const BoxBound& box);

/// Untruncated LR expansion.
std::map<Partition, Int> lr_expand(const Partition& p, const Partition& q);

// Enumeration helpers.
std::vector<Partition> partitions_of(int k, int max_len, int max_part);
std::vector<Partition> partitions_in_box(int rows, int cols);

/// Test oracle: counts semistandard tableaux of shape p with entries in 1..n.
Int count_ssyt(const Partition& p, int n);

/// Weight multiset of S_p(C^n): for every SSYT, the vector of entry counts.
std::vector<std::vector<int>> ssyt_weights(const Partition& p, int n);

} // namespace sgr
