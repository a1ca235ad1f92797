// Command-line frontend: every library computation behind one subcommand,
// with JSON (--json) or plain table output.
//
// Exit codes: 0 success, 2 invalid arguments, 3 verification mismatch,
// 4 resource bound exceeded.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <random>
#include <sstream>

#include "supergrass/json_io.hpp"
#include "supergrass/koszul.hpp"
#include "supergrass/pairclass.hpp"
#include "supergrass/split_fact.hpp"
#include "supergrass/supergrass.hpp"

using namespace sgr;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitMismatch = 3;
constexpr int kExitResource = 4;

std::vector<Rat> parse_rat_list(const std::string& csv) {
    std::vector<Rat> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rat(item));
    if (out.empty()) throw std::invalid_argument("empty coefficient list");
    return out;
}

std::string parts_str(const Partition& p) {
    std::string s = "(";
    for (int i = 0; i < p.length(); ++i) s += (i ? "," : "") + std::to_string(p.part(i));
    return s + ")";
}

void print_betti_text(const BettiTable& t) {
    std::cout << "Betti table for rank <= " << t.spec.t << " locus of " << t.spec.n << "x"
              << t.spec.m << " matrices\n";
    std::cout << "  p  d  dim  P            Q            (b, alpha, beta)\n";
    for (const auto& e : t.entries) {
        std::ostringstream line;
        line << "  " << e.p << "  " << e.d << "  " << e.rep.dim << "  ";
        std::string ps = parts_str(e.rep.P), qs = parts_str(e.rep.Q);
        ps.resize(std::max<size_t>(ps.size(), 12), ' ');
        qs.resize(std::max<size_t>(qs.size(), 12), ' ');
        line << ps << " " << qs << " (" << e.b << ", " << parts_str(e.alpha) << ", "
             << parts_str(e.beta) << ")";
        std::cout << line.str() << "\n";
    }
}

QMat parse_matrix(const nlohmann::json& rows, int& cols) {
    int r = static_cast<int>(rows.size());
    cols = r > 0 ? static_cast<int>(rows[0].size()) : cols;
    QMat m(r, cols);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != cols)
            throw std::invalid_argument("ragged matrix rows");
        for (int j = 0; j < cols; ++j) {
            const auto& cell = rows[i][j];
            m.at(i, j) = cell.is_string() ? parse_rat(cell.get<std::string>())
                                          : Rat(cell.get<long>());
        }
    }
    return m;
}

// --- seeded random generators for the self-test modes ----------------------

Rat rand_rat(std::mt19937_64& rng, int lo = -4, int hi = 4) {
    std::uniform_int_distribution<int> d(lo, hi);
    return Rat(d(rng));
}

QPoly rand_monic(std::mt19937_64& rng, int deg) {
    QPoly p(deg + 1, Rat(0));
    for (int i = 0; i < deg; ++i) p[i] = rand_rat(rng);
    p[deg] = 1;
    return p;
}

QPoly rand_irreducible(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> dd(1, 2);
    while (true) {
        QPoly p = rand_monic(rng, dd(rng));
        if (qp_degree(p) == 1) {
            if (p[0] != 0) return p;  // u - lambda with lambda != 0 (invertible part)
            continue;
        }
        if (qp_eval(p, 0) != 0 && qp_is_irreducible(p)) return p;
    }
}

QMat rand_invertible(std::mt19937_64& rng, int n) {
    while (true) {
        QMat m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = rand_rat(rng, -3, 3);
        if (m.rank() == n) return m;
    }
}

IndecompMultiset rand_multiset(std::mt19937_64& rng, int max0, int max1) {
    IndecompMultiset ms;
    std::uniform_int_distribution<int> type(0, 3), kk(1, 2), bk(0, 2);
    for (int attempts = 0; attempts < 12; ++attempts) {
        IndecompTag t;
        switch (type(rng)) {
            case 0: t = {IndecompTag::Type::A, kk(rng), rand_irreducible(rng), false}; break;
            case 1: t = {IndecompTag::Type::A, kk(rng), {}, true}; break;
            case 2: t = {IndecompTag::Type::B, bk(rng), {}, false}; break;
            default: t = {IndecompTag::Type::Bshift, bk(rng), {}, false}; break;
        }
        if (ms.dim_v0() + t.dim_v0() > max0 || ms.dim_v1() + t.dim_v1() > max1) continue;
        ms.tags.push_back(std::move(t));
    }
    ms.normalize();
    return ms;
}

int run_classify_selftest(unsigned long seed, int trials, bool json) {
    std::mt19937_64 rng(seed);
    int failures = 0;
    for (int i = 0; i < trials; ++i) {
        IndecompMultiset ms = rand_multiset(rng, 8, 8);
        MatrixPair pair = synthesize(ms);
        MatrixPair conj = conjugate(pair, rand_invertible(rng, pair.dim_v0()),
                                    rand_invertible(rng, pair.dim_v1()));
        if (!(classify(conj) == ms)) ++failures;
    }
    if (json) {
        nlohmann::ordered_json j{{"schema", 1},
                                 {"mode", "classify-selftest"},
                                 {"seed", seed},
                                 {"trials", trials},
                                 {"failures", failures}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "classify self-test: seed " << seed << ", " << trials << " trials, "
                  << failures << " failures\n";
    }
    return failures == 0 ? kExitOk : kExitMismatch;
}

int run_sylvester_selftest(unsigned long seed, int trials, bool json) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> gd(0, 3), fd(1, 3);
    int failures = 0;
    for (int i = 0; i < trials; ++i) {
        QPoly h = rand_monic(rng, gd(rng));
        QPoly f = qp_mul(h, rand_monic(rng, fd(rng)));
        QPoly g = qp_mul(h, rand_monic(rng, fd(rng)));
        int dg = qp_degree(qp_gcd(f, g));
        std::vector<Rat> fdesc(f.rbegin(), f.rend()), gdesc(g.rbegin(), g.rend());
        long nullity =
            sylvester_nullity(fdesc, gdesc, qp_degree(f), qp_degree(g));
        if (nullity != dg) ++failures;
    }
    if (json) {
        nlohmann::ordered_json j{{"schema", 1},
                                 {"mode", "sylvester-selftest"},
                                 {"seed", seed},
                                 {"trials", trials},
                                 {"failures", failures}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "sylvester gcd self-test: seed " << seed << ", " << trials
                  << " trials, " << failures << " failures\n";
    }
    return failures == 0 ? kExitOk : kExitMismatch;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations around determinantal syzygies and super "
                 "Grassmannian cohomology"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "emit JSON instead of tables");

    int n = 0, m = 0, t = 0, r = 0, s = 0, k = 0, p = 0, bigN = 0, dmax = 6, pmax = -1;
    bool universal = false, characters = false;
    std::string fcsv, gcsv, input;
    unsigned long seed = 0;
    int trials = 100;
    bool selftest = false;

    auto* betti = app.add_subcommand("betti", "Betti table of a determinantal variety");
    betti->add_option("--n", n)->required();
    betti->add_option("--m", m)->required();
    betti->add_option("--t", t)->required();

    auto* strand = app.add_subcommand("strand", "one linear strand of the resolution");
    strand->add_option("--n", n)->required();
    strand->add_option("--m", m)->required();
    strand->add_option("--t", t)->required();
    strand->add_option("--k", k)->required();

    auto* supercoh = app.add_subcommand("supercoh", "H^*(Gr_{r|s}(C^{n|m}), O)");
    supercoh->add_option("--n", n)->required();
    supercoh->add_option("--m", m)->required();
    supercoh->add_option("--r", r)->required();
    supercoh->add_option("--s", s)->required();

    auto* euler = app.add_subcommand("euler", "super Euler characteristic, two ways");
    euler->add_option("--n", n)->required();
    euler->add_option("--m", m)->required();
    euler->add_option("--r", r)->required();
    euler->add_option("--s", s)->required();

    auto* poincare = app.add_subcommand("poincare", "Poincare polynomial of Gr_s(C^N)");
    poincare->add_option("--s", s)->required();
    poincare->add_option("--N", bigN)->required();

    auto* splitring = app.add_subcommand("splitring", "splitting ring presentation");
    splitring->add_option("--n", n);
    splitring->add_option("--f", fcsv, "ascending monic coefficients c0,c1,...,1");

    auto* factring = app.add_subcommand("factring", "factorization ring presentation");
    factring->add_option("--n", n);
    factring->add_option("--p", p)->required();
    factring->add_option("--f", fcsv, "ascending monic coefficients c0,c1,...,1");

    auto* sylv = app.add_subcommand("sylvester", "Sylvester matrix of two polynomials");
    sylv->add_option("--f", fcsv, "descending coefficients of f");
    sylv->add_option("--g", gcsv, "descending coefficients of g");
    sylv->add_flag("--selftest", selftest, "seeded gcd-vs-nullity property check");
    sylv->add_option("--seed", seed);
    sylv->add_option("--trials", trials);

    auto* disc = app.add_subcommand("discriminant", "discriminant of a monic polynomial");
    disc->add_option("--f", fcsv, "ascending monic coefficients");
    disc->add_option("--n", n, "universal monic of degree n instead");

    auto* classify_cmd = app.add_subcommand("classify", "decompose a pair (f, g)");
    classify_cmd->add_option("--input", input, "JSON file with {\"f\": rows, \"g\": rows}; - for stdin");
    classify_cmd->add_flag("--selftest", selftest, "seeded synthesize/classify round trips");
    classify_cmd->add_option("--seed", seed);
    classify_cmd->add_option("--trials", trials);

    auto* oracle = app.add_subcommand("oracle", "brute-force Koszul Tor dimensions");
    oracle->add_option("--n", n)->required();
    oracle->add_option("--m", m)->required();
    oracle->add_option("--t", t)->required();
    oracle->add_option("--dmax", dmax);
    oracle->add_option("--pmax", pmax);
    oracle->add_flag("--characters", characters);

    auto* compare = app.add_subcommand("compare", "Lascoux table vs Koszul oracle");
    compare->add_option("--n", n)->required();
    compare->add_option("--m", m)->required();
    compare->add_option("--t", t)->required();
    compare->add_option("--dmax", dmax);
    compare->add_flag("--characters", characters);

    // let every subcommand accept the global --json flag after its own options
    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*betti || *strand) {
            DetVarSpec spec{n, m, t};
            if (!spec.valid()) {
                std::cerr << "invalid spec: need 0 <= t <= min(n, m)\n";
                return kExitInvalid;
            }
            if (*betti) {
                BettiTable table = betti_table(spec);
                if (json)
                    std::cout << betti_json(table);
                else
                    print_betti_text(table);
            } else {
                auto entries = linear_strand(spec, k);
                if (json) {
                    std::cout << strand_json(spec, k, entries);
                } else {
                    std::cout << "strand " << k << ":\n";
                    for (const auto& e : entries)
                        std::cout << "  p=" << e.p << " P=" << parts_str(e.rep.P)
                                  << " Q=" << parts_str(e.rep.Q) << " dim=" << e.rep.dim
                                  << "\n";
                }
            }
        } else if (*supercoh) {
            SuperGrassSpec spec{n, m, r, s};
            if (!spec.valid()) {
                std::cerr << "invalid spec: need r <= n, s <= m\n";
                return kExitInvalid;
            }
            CohomologyReport rep = cohomology(spec);
            if (json) {
                std::cout << cohomology_json(rep);
            } else {
                std::cout << "H^*(Gr_{" << r << "|" << s << "}(C^{" << n << "|" << m
                          << "})), delta = " << rep.delta << "\n";
                for (const auto& g : rep.groups)
                    std::cout << "  H^" << g.i << ": dim " << (g.even_dim + g.odd_dim)
                              << " (" << g.even_dim << " even + " << g.odd_dim
                              << " odd)\n";
                std::cout << "  euler: formula " << rep.euler_formula << ", computed "
                          << rep.euler_computed << "\n";
            }
            if (rep.euler_formula != rep.euler_computed) return kExitMismatch;
        } else if (*euler) {
            SuperGrassSpec spec{n, m, r, s};
            if (!spec.valid()) {
                std::cerr << "invalid spec\n";
                return kExitInvalid;
            }
            EulerReport rep = super_euler(spec);
            if (json)
                std::cout << euler_json(spec, rep);
            else
                std::cout << "euler: formula " << rep.formula << ", computed "
                          << rep.computed << (rep.ok() ? " (ok)" : " (MISMATCH)") << "\n";
            if (!rep.ok()) return kExitMismatch;
        } else if (*poincare) {
            if (s > bigN || s < 0) {
                std::cerr << "invalid spec: need 0 <= s <= N\n";
                return kExitInvalid;
            }
            GradedDims dims = gaussian_poincare(s, bigN);
            if (json) {
                std::cout << poincare_json(s, bigN, dims);
            } else {
                for (const auto& [d, v] : dims.dims)
                    std::cout << "  degree " << d << ": " << v << "\n";
                std::cout << "  total " << dims.total() << "\n";
            }
        } else if (*splitring) {
            if (fcsv.empty()) {
                if (n <= 0) {
                    std::cerr << "need --n or --f\n";
                    return kExitInvalid;
                }
                SplitRing ring = make_split_ring_universal(n);
                if (json) {
                    std::cout << split_ring_json(ring);
                } else {
                    auto names = ring.var_names();
                    std::cout << "split ring, n = " << n << ", relations:\n";
                    for (const auto& rel : ring.defining_relations())
                        std::cout << "  " << rel.str(names) << " = 0\n";
                }
            } else {
                std::vector<Rat> f = parse_rat_list(fcsv);
                SplitRing ring = make_split_ring(f);
                RankReport rep = verify_free_rank_split(f);
                if (json) {
                    std::cout << split_ring_json(ring);
                    std::cout << rank_report_json("split", rep);
                } else {
                    std::cout << "split ring of degree " << ring.n
                              << " specialization: rank expected " << rep.expected
                              << ", computed " << rep.computed
                              << (rep.ok() ? " (ok)" : " (MISMATCH)") << "\n";
                }
                if (!rep.ok()) return kExitMismatch;
            }
        } else if (*factring) {
            if (fcsv.empty()) {
                if (n <= 0) {
                    std::cerr << "need --n or --f\n";
                    return kExitInvalid;
                }
                FactRing ring = fact_presentation_universal(n, p);
                if (json) {
                    std::cout << fact_ring_json(ring);
                } else {
                    auto names = ring.var_names();
                    std::cout << "fact ring (" << p << ", " << n - p << "), relations:\n";
                    for (const auto& rel : ring.relations)
                        std::cout << "  " << rel.str(names) << " = 0\n";
                }
            } else {
                std::vector<Rat> f = parse_rat_list(fcsv);
                FactRing ring = fact_presentation(f, p);
                RankReport rep = verify_free_rank_fact(f, p);
                if (json) {
                    std::cout << fact_ring_json(ring);
                    std::cout << rank_report_json("fact", rep);
                } else {
                    std::cout << "fact ring (" << p << ", " << ring.n - p
                              << "): rank expected " << rep.expected << ", computed "
                              << rep.computed << (rep.ok() ? " (ok)" : " (MISMATCH)")
                              << "\n";
                }
                if (!rep.ok()) return kExitMismatch;
            }
        } else if (*sylv) {
            if (selftest) return run_sylvester_selftest(seed, trials, json);
            if (fcsv.empty() || gcsv.empty()) {
                std::cerr << "need --f and --g (or --selftest)\n";
                return kExitInvalid;
            }
            std::vector<Rat> f = parse_rat_list(fcsv), g = parse_rat_list(gcsv);
            int nn = static_cast<int>(f.size()) - 1, mm = static_cast<int>(g.size()) - 1;
            std::vector<MultiPoly> fm, gm;
            for (const auto& c : f) fm.push_back(MultiPoly::constant(0, c));
            for (const auto& c : g) gm.push_back(MultiPoly::constant(0, c));
            SylvesterMatrix syl = sylvester(fm, gm, nn, mm);
            MultiPoly det = sylvester_det(syl);
            if (json) {
                std::cout << sylvester_json(syl, det, {});
            } else {
                std::cout << "Syl_{" << nn << "," << mm << "}: det = " << det.str({})
                          << ", nullity = " << sylvester_nullity(f, g, nn, mm) << "\n";
            }
        } else if (*disc) {
            if (!fcsv.empty()) {
                Rat d = discriminant(parse_rat_list(fcsv));
                if (json) {
                    nlohmann::ordered_json j{{"schema", 1}, {"discriminant", d.get_str()}};
                    std::cout << j.dump(2) << "\n";
                } else {
                    std::cout << "discriminant = " << d << "\n";
                }
            } else {
                if (n < 1) {
                    std::cerr << "need --f or --n >= 1\n";
                    return kExitInvalid;
                }
                UniPoly f;
                std::vector<std::string> names;
                for (int i = 1; i <= n; ++i) names.push_back("a" + std::to_string(i));
                for (int i = n; i >= 1; --i) f.c.push_back(MultiPoly::var(n, i - 1));
                f.c.push_back(MultiPoly::constant(n, 1));
                MultiPoly d = discriminant(f);
                if (json)
                    std::cout << discriminant_json(d, names);
                else
                    std::cout << "discriminant = " << d.str(names) << "\n";
            }
        } else if (*classify_cmd) {
            if (selftest) return run_classify_selftest(seed, trials, json);
            if (input.empty()) {
                std::cerr << "need --input (or --selftest)\n";
                return kExitInvalid;
            }
            nlohmann::json doc;
            if (input == "-") {
                std::cin >> doc;
            } else {
                std::ifstream in(input);
                if (!in) {
                    std::cerr << "cannot open " << input << "\n";
                    return kExitInvalid;
                }
                in >> doc;
            }
            int n0 = 0, m0 = 0;
            MatrixPair pair;
            pair.f = parse_matrix(doc.at("f"), n0);
            pair.g = parse_matrix(doc.at("g"), m0);
            IndecompMultiset ms = classify(pair);
            if (json) {
                std::cout << multiset_json(ms);
            } else {
                for (const auto& tag : ms.tags) {
                    switch (tag.type) {
                        case IndecompTag::Type::A:
                            std::cout << "  A(" << tag.k << ", "
                                      << (tag.at_infinity ? "inf" : qp_str(tag.poly))
                                      << ")\n";
                            break;
                        case IndecompTag::Type::B:
                            std::cout << "  B(" << tag.k << ")\n";
                            break;
                        case IndecompTag::Type::Bshift:
                            std::cout << "  Bshift(" << tag.k << ")\n";
                            break;
                    }
                }
            }
        } else if (*oracle) {
            DetVarSpec spec{n, m, t};
            if (!spec.valid()) {
                std::cerr << "invalid spec\n";
                return kExitInvalid;
            }
            OracleJob job{spec, pmax >= 0 ? pmax : dmax, dmax, characters};
            TorDims tor = tor_dims(job);
            if (json) {
                std::cout << tor_dims_json(job, tor);
            } else {
                for (const auto& [pd, dim] : tor.dims)
                    std::cout << "  Tor_" << pd.first << " degree " << pd.second
                              << ": dim " << dim << "\n";
            }
        } else if (*compare) {
            DetVarSpec spec{n, m, t};
            if (!spec.valid()) {
                std::cerr << "invalid spec\n";
                return kExitInvalid;
            }
            CompareReport rep = compare_with_lascoux(spec, dmax, characters);
            if (json) {
                std::cout << compare_json(spec, dmax, rep);
            } else if (rep.ok()) {
                std::cout << "all bidegrees match (" << rep.bidegrees_checked
                          << " checked)\n";
            } else {
                for (const auto& mm : rep.mismatches)
                    std::cout << "MISMATCH p=" << mm.p << " d=" << mm.d
                              << " lascoux=" << mm.lascoux_dim
                              << " oracle=" << mm.oracle_dim << " (" << mm.note << ")\n";
            }
            if (!rep.ok()) return kExitMismatch;
        }
    } catch (const ResourceError& e) {
        std::cerr << e.what() << "\n";
        return kExitResource;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitOk;
}
