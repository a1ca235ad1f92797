#pragma once

#include <string>

#include "supergrass/grassmann.hpp"
#include "supergrass/koszul.hpp"
#include "supergrass/pairclass.hpp"
#include "supergrass/split_fact.hpp"
#include "supergrass/supergrass.hpp"

namespace sgr {

// All emitters produce a versioned object ({"schema": 1, ...}) rendered with
// two-space indentation and deterministic key order.

std::string betti_json(const BettiTable& table);
std::string strand_json(const DetVarSpec& spec, int k,
                        const std::vector<BettiEntry>& entries);
std::string cohomology_json(const CohomologyReport& rep);
std::string euler_json(const SuperGrassSpec& spec, const EulerReport& rep);
std::string poincare_json(int s, int N, const GradedDims& dims);
std::string cohomology_class_json(const CohomologyClass& cls);
std::string split_ring_json(const SplitRing& ring);
std::string fact_ring_json(const FactRing& ring);
std::string rank_report_json(const std::string& kind, const RankReport& rep);
std::string sylvester_json(const SylvesterMatrix& syl, const MultiPoly& det,
                           const std::vector<std::string>& names);
std::string discriminant_json(const MultiPoly& disc, const std::vector<std::string>& names);
std::string multiset_json(const IndecompMultiset& ms);
std::string tor_dims_json(const OracleJob& job, const TorDims& tor);
std::string compare_json(const DetVarSpec& spec, int d_max, const CompareReport& rep);

} // namespace sgr
