// Command-line front end. Exit status: 0 ok, 1 failed check, 2 usage error.
#include "wheelzeta/chipfire.hpp"
#include "wheelzeta/curve.hpp"
#include "wheelzeta/ecnum.hpp"
#include "wheelzeta/errors.hpp"
#include "wheelzeta/json_io.hpp"
#include "wheelzeta/langzeta.hpp"
#include "wheelzeta/shiftfrob.hpp"
#include "wheelzeta/structure.hpp"
#include "wheelzeta/treebij.hpp"
#include "wheelzeta/verify.hpp"
#include "wheelzeta/wheel.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>

using namespace wheelzeta;
using nlohmann::json;

namespace {

struct Globals {
    std::string format = "json";
    std::uint64_t seed = VerifyOptions{}.seed;
    std::uint64_t budget = kDefaultEnumerationBudget;
};

// A command's result: the document to print and whether a check failed.
struct Reply {
    json doc;
    bool check_failed = false;
    std::string text;  // preferred rendering for --format text, if set
};

Reply poly_reply(const BivariatePolynomial& p, char second) { return Reply{to_json(p), false, p.to_string(second)}; }

void print_text(const json& j, const std::string& prefix, std::ostream& os) {
    if (j.is_object()) {
        for (const auto& [key, val] : j.items()) print_text(val, prefix.empty() ? key : prefix + "." + key, os);
    } else if (j.is_array() && std::all_of(j.begin(), j.end(), [](const json& e) { return e.is_primitive(); })) {
        os << prefix << ": ";
        for (std::size_t i = 0; i < j.size(); ++i) os << (i ? " " : "") << (j[i].is_string() ? j[i].get<std::string>() : j[i].dump());
        os << "\n";
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) print_text(j[i], prefix + "[" + std::to_string(i) + "]", os);
    } else {
        os << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

json chips_json(const Configuration& c) { return json(c.chips); }

std::pair<BigInt, BigInt> parse_pair(const std::string& s, const char* first, const char* second) {
    // Accepts "3,2" or "q=3,t=2" (names must match when given).
    const auto comma = s.find(',');
    if (comma == std::string::npos) throw InvalidArgument("expected two comma-separated values, got '" + s + "'");
    auto value = [&](std::string part, const char* name) {
        if (auto eq = part.find('='); eq != std::string::npos) {
            if (part.substr(0, eq) != name) throw InvalidArgument("expected '" + std::string(name) + "=' in '" + s + "'");
            part = part.substr(eq + 1);
        }
        return parse_decimal(part);
    };
    return {value(s.substr(0, comma), first), value(s.substr(comma + 1), second)};
}

std::int64_t prime_field_coefficient(const std::string& list) {
    const Chips c = parse_chips(list);
    for (std::size_t i = 1; i < c.size(); ++i)
        if (c[i] != 0) throw Unsupported("curve coefficients must lie in the prime field");
    return c.empty() ? 0 : c[0];
}

json tree_json(const SpanningTree& tr) {
    json spokes = json::array(), arcs = json::array();
    for (const auto& s : tr.spokes) spokes.push_back({{"vertex", s.vertex}, {"label", s.label}});
    for (const auto& a : tr.arcs) arcs.push_back({{"from", a.from(tr.params.k)}, {"to", a.to}, {"label", a.label}});
    return {{"spokes", spokes}, {"arcs", arcs}, {"dist", tree_dist(tr)}};
}

json poly_matrix_json(const PolyMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
        rows.push_back(row);
    }
    return rows;
}

json int_matrix_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_decimal(m(r, c)));
        rows.push_back(row);
    }
    return rows;
}

json decimals(const std::vector<BigInt>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(to_decimal(x));
    return a;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations on (q,t)-wheel graphs, their critical groups and zeta functions"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--seed", g.seed, "Seed for randomized property checks");
    app.add_option("--budget", g.budget, "Enumeration budget (stable vectors)");

    std::function<Reply()> action;

    // Shared option holders.
    unsigned k = 0, d = 0, k1 = 0, k2 = 0, kmax = VerifyOptions{}.kmax;
    std::int64_t q = 0, t = 1, m = 1;
    std::uint32_t p = 5;
    std::string a_list = "0", b_list = "0", eval_text, word_text, suite = "all";
    std::vector<std::string> configs;
    unsigned series_order = 0;

    auto add_kqt = [&](CLI::App* c) {
        c->add_option("--k", k, "Rim size")->required()->check(CLI::PositiveNumber);
        c->add_option("--q", q, "Clockwise rim multiplicity")->required()->check(CLI::NonNegativeNumber);
        c->add_option("--t", t, "Spoke multiplicity")->required()->check(CLI::PositiveNumber);
    };
    auto params = [&] { return WheelParams{k, q, t}; };
    auto config_at = [&](std::size_t i) { return make_configuration(params(), parse_chips(configs.at(i))); };

    // poly
    auto* poly = app.add_subcommand("poly", "Symbolic polynomials")->require_subcommand(1);
    auto* wk = poly->add_subcommand("wk", "W_k(q,t), the weighted spanning-tree count");
    wk->add_option("--k", k)->required()->check(CLI::PositiveNumber);
    wk->add_option("--eval", eval_text, "Evaluate at q,t");
    wk->callback([&] {
        action = [&] {
            const BivariatePolynomial w = wheel_poly(k);
            if (eval_text.empty()) return poly_reply(w, 't');
            auto [qq, tt] = parse_pair(eval_text, "q", "t");
            return Reply{{{"value", to_decimal(w.eval(qq, tt))}}};
        };
    });
    auto* wc = poly->add_subcommand("wcyc", "Cyclotomic factor WCyc_d(q,t)");
    wc->add_option("--d", d)->required()->check(CLI::PositiveNumber);
    wc->callback([&] { action = [&] { return poly_reply(wcyc(d), 't'); }; });
    auto* nk = poly->add_subcommand("nk", "N_k(q,N1); the second variable is N1");
    nk->add_option("--k", k)->required()->check(CLI::PositiveNumber);
    nk->add_option("--eval", eval_text, "Evaluate at q=Q,n1=N");
    nk->callback([&] {
        action = [&] {
            if (eval_text.empty()) return poly_reply(nk_poly(k), 'N');
            auto [qq, n1] = parse_pair(eval_text, "q", "n1");
            return Reply{{{"value", to_decimal(nk_value(qq, n1, k))}}};
        };
    });
    auto* ec = poly->add_subcommand("ecyc", "Cyclotomic factor ECyc_d(q,N1)");
    ec->add_option("--d", d)->required()->check(CLI::PositiveNumber);
    ec->callback([&] { action = [&] { return poly_reply(ecyc(d), 'N'); }; });

    // crit
    auto* crit = app.add_subcommand("crit", "Critical configurations")->require_subcommand(1);
    auto* list = crit->add_subcommand("list", "Enumerate the critical group");
    add_kqt(list);
    list->callback([&] {
        action = [&] {
            const auto grp = enumerate_criticals(params(), g.budget);
            json els = json::array();
            for (const auto& c : grp.elements) els.push_back(chips_json(c));
            return Reply{{{"order", to_decimal(grp.order())}, {"identity", chips_json(grp.identity)}, {"elements", els}}};
        };
    });
    auto* check = crit->add_subcommand("check", "Stability and criticality of a configuration");
    add_kqt(check);
    check->add_option("--config", configs)->required()->expected(1);
    check->callback([&] {
        action = [&] {
            const auto c = config_at(0);
            return Reply{{{"stable", is_stable(c)}, {"critical", is_critical(c)}, {"critical_representative", chips_json(criticalize(c))}}};
        };
    });
    auto* add = crit->add_subcommand("add", "Group sum of two critical configurations");
    add_kqt(add);
    add->add_option("--config", configs)->required()->expected(2);
    add->callback([&] { action = [&] { return Reply{{{"result", chips_json(group_add(config_at(0), config_at(1)))}}}; }; });
    auto* ident = crit->add_subcommand("identity", "Identity of the critical group");
    add_kqt(ident);
    ident->callback([&] { action = [&] { return Reply{{{"result", chips_json(group_identity(params()))}}}; }; });
    auto* inv = crit->add_subcommand("inverse", "Group inverse");
    add_kqt(inv);
    inv->add_option("--config", configs)->required()->expected(1);
    inv->callback([&] { action = [&] { return Reply{{{"result", chips_json(group_inverse(config_at(0)))}}}; }; });
    auto* scal = crit->add_subcommand("scalar", "Integer multiple m*c");
    add_kqt(scal);
    scal->add_option("--m", m)->required();
    scal->add_option("--config", configs)->required()->expected(1);
    scal->callback([&] { action = [&] { return Reply{{{"result", chips_json(group_scalar(m, config_at(0)))}}}; }; });
    auto* tree = crit->add_subcommand("tree", "Spanning tree of a critical configuration");
    add_kqt(tree);
    tree->add_option("--config", configs)->required()->expected(1);
    tree->callback([&] { action = [&] { return Reply{tree_json(config_to_tree(config_at(0)))}; }; });

    // group
    auto* grp = app.add_subcommand("group", "Invariant factors")->require_subcommand(1);
    auto* gw = grp->add_subcommand("wheel", "Smith normal form of the reduced Laplacian");
    add_kqt(gw);
    gw->callback([&] { action = [&] { return Reply{to_json(wheel_group_invariants(params()))}; }; });
    auto* gd = grp->add_subcommand("deformed", "Deformed wheel (spokes at v1 removed from W_{k+1})");
    add_kqt(gd);
    gd->callback([&] {
        action = [&] {
            const auto di = deformed_wheel_invariants(params());
            json j = to_json(di.snf);
            j["predicted_d1"] = to_decimal(di.predicted_d1);
            j["d1"] = to_decimal(di.d1);
            j["cyclic"] = di.cyclic();
            return Reply{j, di.d1 != di.predicted_d1};
        };
    });
    auto* g2 = grp->add_subcommand("two-by-two", "Two-generator presentation matrix");
    g2->add_option("--k", k)->required()->check(CLI::Range(3u, 64u));
    g2->add_option("--eval", eval_text, "Evaluate at q,t and compare with the full SNF");
    g2->callback([&] {
        action = [&] {
            const PolyMatrix two = wheel_two_by_two(k);
            if (eval_text.empty()) return Reply{{{"matrix", poly_matrix_json(two)}}};
            auto [qq, tt] = parse_pair(eval_text, "q", "t");
            const auto snf = smith_normal_form_padded(evaluate(two, qq, tt), k - 2);
            const auto full = smith_normal_form(evaluate(reduced_laplacian_symbolic(k), qq, tt));
            json j = to_json(snf);
            j["matrix"] = int_matrix_json(evaluate(two, qq, tt));
            j["matches"] = snf == full;
            return Reply{j, !(snf == full)};
        };
    });

    // shift
    auto* shift = app.add_subcommand("shift", "The rotation map rho")->require_subcommand(1);
    auto* sk = shift->add_subcommand("kernel", "|Ker Cyc_d(rho)| against WCyc_d(q,t)");
    sk->add_option("--d", d)->required()->check(CLI::PositiveNumber);
    sk->add_option("--q", q)->required()->check(CLI::NonNegativeNumber);
    sk->add_option("--t", t)->required()->check(CLI::PositiveNumber);
    sk->callback([&] {
        action = [&] {
            const auto kc = verify_wcyc_kernel(d, q, t, g.budget);
            return Reply{{{"kernel_size", to_decimal(kc.kernel_size)}, {"expected", to_decimal(kc.expected)}, {"matches", kc.matches()}},
                         !kc.matches()};
        };
    });
    auto* sq = shift->add_subcommand("quad", "rho^2 - (1+q+t) rho + q = 0 on the whole group");
    add_kqt(sq);
    sq->callback([&] {
        action = [&] {
            const auto rep = verify_quadratic(params(), g.budget);
            json j{{"holds", rep.holds}, {"checked", rep.checked}};
            if (rep.witness) j["witness"] = chips_json(*rep.witness);
            return Reply{j, !rep.holds};
        };
    });
    auto* se = shift->add_subcommand("embed", "Periodic embedding K(W_k1) -> K(W_k2)");
    se->add_option("--k1", k1)->required()->check(CLI::PositiveNumber);
    se->add_option("--k2", k2)->required()->check(CLI::PositiveNumber);
    se->add_option("--q", q)->required()->check(CLI::NonNegativeNumber);
    se->add_option("--t", t)->required()->check(CLI::PositiveNumber);
    se->add_option("--config", configs)->required()->expected(1);
    se->callback([&] {
        action = [&] {
            const auto c = make_configuration({k1, q, t}, parse_chips(configs.at(0)));
            return Reply{{{"result", chips_json(embed(c, k2))}}};
        };
    });

    // curve
    auto* curve = app.add_subcommand("curve", "Elliptic curves y^2 = x^3 + ax + b over F_p")->require_subcommand(1);
    auto add_curve = [&](CLI::App* c) {
        c->add_option("--p", p)->required();
        c->add_option("--a", a_list, "Coefficient list of a (prime field only)")->required();
        c->add_option("--b", b_list, "Coefficient list of b (prime field only)")->required();
    };
    auto* cc = curve->add_subcommand("count", "#E(F_{p^k}) by brute force");
    add_curve(cc);
    k = 1;
    cc->add_option("--k", k)->check(CLI::PositiveNumber);
    cc->callback([&] {
        action = [&] {
            const auto aa = prime_field_coefficient(a_list), bb = prime_field_coefficient(b_list);
            const BigInt n = ec_count(curve_over(p, aa, bb, k));
            const BigInt n1 = ec_count(curve_over(p, aa, bb, 1));
            const BigInt predicted = nk_value(p, n1, k);
            return Reply{{{"n", to_decimal(n)}, {"predicted", to_decimal(predicted)}, {"matches", n == predicted}}, n != predicted};
        };
    });
    auto* cg = curve->add_subcommand("group", "Invariants (n1, n2) of E(F_{p^k})");
    add_curve(cg);
    cg->add_option("--k", k)->check(CLI::PositiveNumber);
    cg->callback([&] {
        action = [&] {
            const auto e = curve_over(p, prime_field_coefficient(a_list), prime_field_coefficient(b_list), k);
            const auto gi = ec_group_invariants(e);
            return Reply{{{"n", to_decimal(gi.n1 * gi.n2)}, {"invariants", decimals({gi.n1, gi.n2})}}};
        };
    });
    auto* ck = curve->add_subcommand("cyc-kernel", "|Ker Cyc_d(pi)| against ECyc_d(p, N1)");
    add_curve(ck);
    ck->add_option("--d", d)->required()->check(CLI::PositiveNumber);
    ck->callback([&] {
        action = [&] {
            const auto aa = prime_field_coefficient(a_list), bb = prime_field_coefficient(b_list);
            const BigInt ker = kernel_cyc_frobenius(p, aa, bb, d);
            const BigInt expected = ecyc(d).eval(p, ec_count(curve_over(p, aa, bb, 1)));
            return Reply{{{"n", to_decimal(ker)}, {"expected", to_decimal(expected)}, {"matches", ker == expected}}, ker != expected};
        };
    });
    auto* cm = curve->add_subcommand("coker", "Cokernel of M_k against E(F_{p^k})");
    add_curve(cm);
    cm->add_option("--k", k)->check(CLI::PositiveNumber);
    cm->callback([&] {
        action = [&] {
            const auto rep = coker_mk_compare(p, prime_field_coefficient(a_list), prime_field_coefficient(b_list), k);
            json j{{"n", to_decimal(rep.nk_measured)},
                   {"det", to_decimal(rep.det_mk)},
                   {"invariants", decimals({rep.measured.n1, rep.measured.n2})},
                   {"mk_invariants", to_json(rep.mk_snf)["invariant_factors"]},
                   {"matches", rep.order_matches},
                   {"invariants_match", rep.invariants_match},
                   {"base_cyclic", rep.base_cyclic}};
            return Reply{j, !rep.order_matches};
        };
    });

    // lang
    auto* lang = app.add_subcommand("lang", "The cyclic language of critical words")->require_subcommand(1);
    auto add_qt = [&](CLI::App* c) {
        c->add_option("--q", q)->required()->check(CLI::PositiveNumber);
        c->add_option("--t", t)->required()->check(CLI::PositiveNumber);
    };
    auto* la = lang->add_subcommand("accept", "Membership of a word");
    add_qt(la);
    la->add_option("--word", word_text)->required();
    la->callback([&] { action = [&] { return Reply{{{"accepted", mg_accepts(parse_chips(word_text), q, t)}}}; }; });
    auto* lc = lang->add_subcommand("count", "Words of length k (trace formula)");
    add_qt(lc);
    lc->add_option("--k", k)->required()->check(CLI::PositiveNumber);
    lc->callback([&] {
        action = [&] {
            const BigInt n = word_count(k, q, t);
            const BigInt w = wheel_poly(k).eval(q, t);
            return Reply{{{"count", to_decimal(n)}, {"wk", to_decimal(w)}, {"matches", n == w}}, n != w};
        };
    });
    auto* lz = lang->add_subcommand("zeta", "Zeta function of the language at (q,t)");
    add_qt(lz);
    lz->add_option("--series", series_order, "Also expand to this order");
    lz->callback([&] {
        action = [&] {
            const auto z = zeta_language_numeric(q, t, series_order);
            return Reply{{{"num", decimals(z.num)}, {"den", decimals(z.den)}, {"series", decimals(z.series)}}};
        };
    });

    // verify
    auto* ver = app.add_subcommand("verify", "Run the identity checks");
    ver->add_option("--suite", suite, "all, or comma-separated check ids/names");
    ver->add_option("--kmax", kmax, "Rim sizes for grid sweeps")->check(CLI::Range(1u, 6u));
    ver->callback([&] {
        action = [&] {
            VerifyOptions opts;
            opts.kmax = kmax;
            opts.seed = g.seed;
            json checks = json::array();
            bool failed = false;
            for (const auto& r : run_suite(suite, opts)) {
                std::cerr << format_result_line(r) << "\n";
                checks.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}, {"seconds", r.seconds}});
                failed = failed || !r.passed;
            }
            return Reply{{{"checks", checks}, {"passed", !failed}}, failed};
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        std::cerr << app.help();
        return 2;
    }
    try {
        const Reply r = action();
        if (g.format == "json") {
            std::cout << r.doc.dump() << "\n";
        } else if (!r.text.empty()) {
            std::cout << r.text << "\n";
        } else {
            print_text(r.doc, "", std::cout);
        }
        return r.check_failed ? 1 : 0;
    } catch (const InternalError& e) {
        std::cerr << json{{"error", e.what()}}.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", e.what()}}.dump() << "\n";
        return 2;
    }
}
