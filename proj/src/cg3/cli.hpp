// Command-line surface: decompositions, single coefficients, verification
// suites, and full coefficient tables with canonical JSON output.
#pragma once

#include "suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace cg3 {

namespace detail {

inline std::vector<int> parse_ints(const std::string& s, size_t n) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("trailing junk");
        out.push_back(v);
    }
    if (out.size() != n) throw std::invalid_argument("wrong arity");
    return out;
}

// reconstruct the full label from the (type, omega, phi, psi, theta) selector
inline HighestVectorLabel make_label(const WeightPair& wp,
                                     const std::vector<int>& sel) {
    HighestVectorLabel l;
    l.vtype = sel[0];
    l.omega = sel[1], l.phi = sel[2], l.psi = sel[3], l.theta = sel[4];
    if (l.vtype == 1) {
        l.alpha = wp.m1 - wp.m2 - l.omega - l.psi;
        l.gamma_e = wp.m2 - l.phi;
        l.beta = wp.mb1 - wp.mb2 - l.omega - l.phi;
        l.delta = wp.mb2 - l.psi;
    } else {
        l.alpha = wp.m1 - wp.m2 - l.phi;
        l.gamma_e = wp.m2 - l.theta - l.psi;
        l.beta = wp.mb1 - wp.mb2 - l.psi;
        l.delta = wp.mb2 - l.phi - l.theta;
    }
    if (!l.valid(wp))
        throw std::invalid_argument("label invalid for the given weights");
    return l;
}

inline json query_json(const WeightPair& wp, const HighestVectorLabel& l,
                       const DescentTriple& d, const std::string& mode) {
    json q = json::object();
    q["w1"] = json::array({wp.m1, wp.m2});
    q["w2"] = json::array({wp.mb1, wp.mb2});
    q["label"] = label_to_json(l);
    q["descent"] = json::array({d.T1, d.T2, d.S});
    q["mode"] = mode;
    return q;
}

}  // namespace detail

// returns the process exit code: 0 ok, 1 verification failure, 2 bad input
inline int run_command(const std::vector<std::string>& args, std::ostream& out,
                       std::ostream& err) {
    CLI::App app{"exact gl3 Clebsch-Gordan engine"};
    app.require_subcommand(1);

    std::string w1s, w2s, labels, descents, mode = "both", format = "json",
                outfile, suite;
    int max_weight = 3;

    auto* dec = app.add_subcommand("decompose", "list component labels");
    dec->add_option("--w1", w1s)->required();
    dec->add_option("--w2", w2s)->required();

    auto* cg = app.add_subcommand("cg", "expand one highest vector");
    cg->add_option("--w1", w1s)->required();
    cg->add_option("--w2", w2s)->required();
    cg->add_option("--label", labels)->required();
    cg->add_option("--descent", descents)->required();
    cg->add_option("--mode", mode)
        ->check(CLI::IsMember({"formula", "oracle", "both"}));
    cg->add_option("--format", format)
        ->check(CLI::IsMember({"json", "csv", "pretty"}));

    auto* ver = app.add_subcommand("verify", "run verification suites");
    ver->add_option("--max-weight", max_weight)->check(CLI::Range(0, 4));
    ver->add_option("--suite", suite)
        ->check(CLI::IsMember({"gamma", "relations", "model", "cg"}));

    auto* tab = app.add_subcommand("table", "full coefficient table");
    tab->add_option("--w1", w1s)->required();
    tab->add_option("--w2", w2s)->required();
    tab->add_option("--out", outfile);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (*dec) {
            auto a = detail::parse_ints(w1s, 2), b = detail::parse_ints(w2s, 2);
            WeightPair wp{a[0], a[1], b[0], b[1]};
            if (!wp.valid()) throw std::invalid_argument("bad weights");
            json j = json::object();
            j["w1"] = json::array({wp.m1, wp.m2});
            j["w2"] = json::array({wp.mb1, wp.mb2});
            json rows = json::array();
            std::map<Weight3, int> mult;
            for (auto& l : enumerate_labels(wp)) {
                json row = json::object();
                row["label"] = label_to_json(l);
                row["exponents"] = label_exponents_to_json(l);
                row["weight"] = weight_to_json(label_weight(l));
                rows.push_back(row);
                mult[label_weight(l)] += 1;
            }
            j["labels"] = rows;
            json ms = json::array();
            for (auto& [W, n] : mult) {
                json m = json::object();
                m["weight"] = weight_to_json(W);
                m["multiplicity"] = n;
                ms.push_back(m);
            }
            j["multiplicities"] = ms;
            out << j.dump(2) << "\n";
            return 0;
        }

        if (*cg) {
            auto a = detail::parse_ints(w1s, 2), b = detail::parse_ints(w2s, 2);
            WeightPair wp{a[0], a[1], b[0], b[1]};
            if (!wp.valid()) throw std::invalid_argument("bad weights");
            auto sel = detail::parse_ints(labels, 5);
            if (sel[0] != 1 && sel[0] != 2)
                throw std::invalid_argument("label type must be 1 or 2");
            HighestVectorLabel l = detail::make_label(wp, sel);
            auto ds = detail::parse_ints(descents, 3);
            DescentTriple d{ds[0], ds[1], ds[2]};
            if (d.T1 < 0 || d.T2 < 0 || d.S < 0)
                throw std::invalid_argument("bad descent");

            std::vector<CGTerm> formula, oracle, terms;
            std::vector<DiffEntry> diff;
            if (mode != "oracle") formula = cg_expansion(l, d);
            if (mode != "formula") oracle = oracle_expansion(l, d);
            terms = mode == "oracle" ? oracle : formula;
            bool verified = false;
            if (mode == "both") {
                diff = compare(formula, oracle);
                verified = diff.empty();
            }

            if (format == "json") {
                json j = json::object();
                j["query"] = detail::query_json(wp, l, d, mode);
                j["terms"] = terms_to_json(terms);
                j["verified"] = verified;
                if (!diff.empty()) {
                    json dj = json::array();
                    for (auto& e : diff) {
                        json ej = json::object();
                        ej["diagram_u"] = diagram_to_json(e.diagram_u);
                        ej["diagram_v"] = diagram_to_json(e.diagram_v);
                        ej["formula"] = e.formula ? coeff_to_json(*e.formula)
                                                  : json(nullptr);
                        ej["oracle"] = e.oracle ? coeff_to_json(*e.oracle)
                                                : json(nullptr);
                        dj.push_back(ej);
                    }
                    j["diff"] = dj;
                }
                out << j.dump(2) << "\n";
            } else if (format == "csv") {
                out << "u_m1,u_m2,u_m3,u_k1,u_k2,u_s,"
                       "v_m1,v_m2,v_m3,v_k1,v_k2,v_s,num,den\n";
                for (auto& t : terms) {
                    const GTDiagram *du = &t.diagram_u, *dv = &t.diagram_v;
                    for (auto* dd : {du, dv})
                        out << dd->m1 << "," << dd->m2 << "," << dd->m3 << ","
                            << dd->k1 << "," << dd->k2 << "," << dd->s << ",";
                    out << boost::multiprecision::numerator(t.coeff) << ","
                        << boost::multiprecision::denominator(t.coeff) << "\n";
                }
            } else {
                for (auto& t : terms)
                    out << "(" << t.diagram_u.k1 << "," << t.diagram_u.k2
                        << ";" << t.diagram_u.s << ") x (" << t.diagram_v.k1
                        << "," << t.diagram_v.k2 << ";" << t.diagram_v.s
                        << ")  " << t.coeff << "\n";
                if (mode == "both")
                    out << (verified ? "verified" : "MISMATCH") << "\n";
            }
            return (mode == "both" && !verified) ? 1 : 0;
        }

        if (*ver) {
            std::vector<SuiteResult> results;
            auto want = [&](const char* s) {
                return suite.empty() || suite == s;
            };
            int K = max_weight;
            if (want("gamma")) results.push_back(suite_gamma(std::min(4, K + 1)));
            if (want("model")) results.push_back(suite_model(K));
            if (want("relations"))
                results.push_back(suite_relations(std::min(3, K)));
            if (want("cg")) {
                results.push_back(suite_highest(K));
                results.push_back(suite_cg(K));
                results.push_back(suite_literal(std::min(2, K)));
            }
            bool ok = true;
            for (auto& r : results) {
                out << (r.pass ? "PASS " : "FAIL ") << r.name << " ("
                    << r.checks << " checks)\n";
                for (auto& f : r.failures) out << "  " << f << "\n";
                ok = ok && r.pass;
            }
            return ok ? 0 : 1;
        }

        if (*tab) {
            auto a = detail::parse_ints(w1s, 2), b = detail::parse_ints(w2s, 2);
            WeightPair wp{a[0], a[1], b[0], b[1]};
            if (!wp.valid()) throw std::invalid_argument("bad weights");
            json j = json::object();
            j["w1"] = json::array({wp.m1, wp.m2});
            j["w2"] = json::array({wp.mb1, wp.mb2});
            json rows = json::array();
            for (auto& l : enumerate_labels(wp)) {
                Weight3 W = l.vtype == 1 ? label_weight(l)
                                         : label_weight(dualized_label(l));
                for (auto& d : valid_descents(W)) {
                    json row = json::object();
                    row["label"] = label_to_json(l);
                    row["descent"] = json::array({d.T1, d.T2, d.S});
                    row["terms"] = terms_to_json(cg_expansion(l, d));
                    rows.push_back(row);
                }
            }
            j["rows"] = rows;
            std::string body = j.dump(2) + "\n";
            if (outfile.empty()) {
                out << body;
            } else {
                std::ofstream f(outfile, std::ios::binary);
                if (!f) throw std::invalid_argument("cannot open output file");
                f << body;
            }
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace cg3
