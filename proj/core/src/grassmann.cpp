#include "supergrass/grassmann.hpp"

#include <stdexcept>

namespace sgr {

void CohomologyClass::add(const Partition& p, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms.emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

std::vector<Partition> grass_basis(const GrassSpec& spec, int degree) {
    if (spec.s < 0 || spec.N < spec.s)
        throw std::invalid_argument("invalid Grassmannian spec");
    if (degree % 2 != 0) throw std::invalid_argument("degree must be even");
    return partitions_of(degree / 2, spec.s, spec.N - spec.s);
}

CohomologyClass cup(const GrassSpec& spec, const CohomologyClass& x,
                    const CohomologyClass& y) {
    CohomologyClass out;
    BoxBound box = spec.box();
    for (const auto& [p, cp] : x.terms) {
        for (const auto& [q, cq] : y.terms) {
            auto prod = lr_expand_in_box(p, q, box);
            for (const auto& [lam, mult] : prod) out.add(lam, cp * cq * Rat(mult));
        }
    }
    return out;
}

Int grass_total_dim(const GrassSpec& spec) {
    if (spec.s < 0 || spec.N < spec.s)
        throw std::invalid_argument("invalid Grassmannian spec");
    return binomial(spec.N, spec.s);
}

} // namespace sgr
