#include "supergrass/json_io.hpp"

#include <json.hpp>

namespace sgr {

namespace {

using nlohmann::ordered_json;

ordered_json num(const Int& v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();  // exact fallback for out-of-range values
}

ordered_json jparts(const Partition& p) { return ordered_json(p.parts()); }

ordered_json jrat(const Rat& q) {
    if (q.get_den() == 1) return num(q.get_num());
    return q.get_str();
}

ordered_json jqpoly(const QPoly& p) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : p) arr.push_back(jrat(c));
    return arr;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json root() {
    ordered_json j;
    j["schema"] = 1;
    return j;
}

ordered_json jdetspec(const DetVarSpec& spec) {
    return {{"n", spec.n}, {"m", spec.m}, {"t", spec.t}};
}

ordered_json jsuperspec(const SuperGrassSpec& spec) {
    return {{"n", spec.n}, {"m", spec.m}, {"r", spec.r}, {"s", spec.s}};
}

ordered_json jbetti_entry(const BettiEntry& e) {
    ordered_json je;
    je["p"] = e.p;
    je["d"] = e.d;
    je["P"] = jparts(e.rep.P);
    je["Q"] = jparts(e.rep.Q);
    je["dim"] = num(e.rep.dim);
    je["b"] = e.b;
    je["alpha"] = jparts(e.alpha);
    je["beta"] = jparts(e.beta);
    return je;
}

} // namespace

std::string betti_json(const BettiTable& table) {
    ordered_json j = root();
    j["spec"] = jdetspec(table.spec);
    j["entries"] = ordered_json::array();
    for (const auto& e : table.entries) j["entries"].push_back(jbetti_entry(e));
    return dump(j);
}

std::string strand_json(const DetVarSpec& spec, int k,
                        const std::vector<BettiEntry>& entries) {
    ordered_json j = root();
    j["spec"] = jdetspec(spec);
    j["strand"] = k;
    j["entries"] = ordered_json::array();
    Int total = 0;
    for (const auto& e : entries) {
        j["entries"].push_back(jbetti_entry(e));
        total += e.rep.dim;
    }
    j["total_dim"] = num(total);
    return dump(j);
}

std::string cohomology_json(const CohomologyReport& rep) {
    ordered_json j = root();
    j["spec"] = jsuperspec(rep.spec);
    j["normalized"] = jsuperspec(rep.normalized);
    j["delta"] = rep.delta;
    j["groups"] = ordered_json::array();
    for (const auto& g : rep.groups) {
        ordered_json jg;
        jg["i"] = g.i;
        jg["even_dim"] = num(g.even_dim);
        jg["odd_dim"] = num(g.odd_dim);
        jg["terms"] = ordered_json::array();
        for (const auto& t : g.terms) {
            ordered_json jt;
            jt["a_degree"] = t.a_degree;
            jt["strand"] = t.strand;
            jt["p"] = t.p;
            jt["P"] = jparts(t.rep.P);
            jt["Q"] = jparts(t.rep.Q);
            jt["dim"] = num(t.rep.dim);
            jt["parity"] = t.parity;
            jg["terms"].push_back(std::move(jt));
        }
        j["groups"].push_back(std::move(jg));
    }
    j["euler"] = {{"formula", num(rep.euler_formula)}, {"computed", num(rep.euler_computed)}};
    return dump(j);
}

std::string euler_json(const SuperGrassSpec& spec, const EulerReport& rep) {
    ordered_json j = root();
    j["spec"] = jsuperspec(spec);
    j["euler"] = {{"formula", num(rep.formula)}, {"computed", num(rep.computed)}};
    j["ok"] = rep.ok();
    return dump(j);
}

std::string poincare_json(int s, int N, const GradedDims& dims) {
    ordered_json j = root();
    j["spec"] = {{"s", s}, {"N", N}};
    j["dims"] = ordered_json::array();
    for (const auto& [d, v] : dims.dims)
        j["dims"].push_back({{"degree", d}, {"dim", num(v)}});
    j["total"] = num(dims.total());
    return dump(j);
}

std::string cohomology_class_json(const CohomologyClass& cls) {
    ordered_json j = ordered_json::array();
    for (const auto& [p, c] : cls.terms)
        j.push_back({{"partition", jparts(p)},
                     {"coeff_num", num(c.get_num())},
                     {"coeff_den", num(c.get_den())}});
    return dump(j);
}

namespace {

ordered_json jrelations(const std::vector<MultiPoly>& rels,
                        const std::vector<std::string>& names) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : rels) arr.push_back(r.str(names));
    return arr;
}

} // namespace

std::string split_ring_json(const SplitRing& ring) {
    ordered_json j = root();
    j["kind"] = "split";
    j["n"] = ring.n;
    j["universal"] = ring.universal;
    j["vars"] = ring.var_names();
    ordered_json w = ordered_json::array();
    for (int x : ring.weights()) w.push_back(2 * x);  // presentation degrees are doubled
    j["weights"] = w;
    j["relations"] = jrelations(ring.defining_relations(), ring.var_names());
    return dump(j);
}

std::string fact_ring_json(const FactRing& ring) {
    ordered_json j = root();
    j["kind"] = "fact";
    j["n"] = ring.n;
    j["p"] = ring.p;
    j["universal"] = ring.universal;
    j["vars"] = ring.var_names();
    ordered_json w = ordered_json::array();
    for (int x : ring.weights()) w.push_back(2 * x);
    j["weights"] = w;
    j["relations"] = jrelations(ring.relations, ring.var_names());
    return dump(j);
}

std::string rank_report_json(const std::string& kind, const RankReport& rep) {
    ordered_json j = root();
    j["kind"] = kind;
    j["expected"] = num(rep.expected);
    j["computed"] = num(rep.computed);
    j["ok"] = rep.ok();
    return dump(j);
}

std::string sylvester_json(const SylvesterMatrix& syl, const MultiPoly& det,
                           const std::vector<std::string>& names) {
    ordered_json j = root();
    j["n"] = syl.n;
    j["m"] = syl.m;
    int size = syl.n + syl.m;
    j["matrix"] = ordered_json::array();
    for (int i = 0; i < size; ++i) {
        ordered_json row = ordered_json::array();
        for (int c = 0; c < size; ++c) row.push_back(syl.at(i, c).str(names));
        j["matrix"].push_back(std::move(row));
    }
    j["det"] = det.str(names);
    return dump(j);
}

std::string discriminant_json(const MultiPoly& disc, const std::vector<std::string>& names) {
    ordered_json j = root();
    j["discriminant"] = disc.str(names);
    return dump(j);
}

std::string multiset_json(const IndecompMultiset& ms) {
    ordered_json arr = ordered_json::array();
    for (const auto& t : ms.tags) {
        ordered_json jt;
        switch (t.type) {
            case IndecompTag::Type::A:
                jt["type"] = "A";
                jt["k"] = t.k;
                if (t.at_infinity)
                    jt["poly"] = "inf";
                else
                    jt["poly"] = jqpoly(t.poly);
                break;
            case IndecompTag::Type::B:
                jt["type"] = "B";
                jt["k"] = t.k;
                break;
            case IndecompTag::Type::Bshift:
                jt["type"] = "Bshift";
                jt["k"] = t.k;
                break;
        }
        arr.push_back(std::move(jt));
    }
    ordered_json j = root();
    j["multiset"] = std::move(arr);
    return dump(j);
}

std::string tor_dims_json(const OracleJob& job, const TorDims& tor) {
    ordered_json j = root();
    j["spec"] = jdetspec(job.spec);
    j["p_max"] = job.p_max;
    j["d_max"] = job.d_max;
    j["dims"] = ordered_json::array();
    for (const auto& [pd, dim] : tor.dims)
        j["dims"].push_back({{"p", pd.first}, {"d", pd.second}, {"dim", num(dim)}});
    if (job.with_characters) {
        j["characters"] = ordered_json::array();
        for (const auto& [pd, ws] : tor.characters) {
            ordered_json jc;
            jc["p"] = pd.first;
            jc["d"] = pd.second;
            jc["weights"] = ordered_json::array();
            for (const auto& [w, mult] : ws)
                jc["weights"].push_back({{"weight", w}, {"mult", num(mult)}});
            j["characters"].push_back(std::move(jc));
        }
    }
    return dump(j);
}

std::string compare_json(const DetVarSpec& spec, int d_max, const CompareReport& rep) {
    ordered_json j = root();
    j["spec"] = jdetspec(spec);
    j["d_max"] = d_max;
    j["bidegrees_checked"] = rep.bidegrees_checked;
    j["ok"] = rep.ok();
    j["mismatches"] = ordered_json::array();
    for (const auto& mm : rep.mismatches)
        j["mismatches"].push_back({{"p", mm.p},
                                   {"d", mm.d},
                                   {"lascoux", num(mm.lascoux_dim)},
                                   {"oracle", num(mm.oracle_dim)},
                                   {"note", mm.note}});
    return dump(j);
}

} // namespace sgr
