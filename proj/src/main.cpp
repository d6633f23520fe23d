/**
 * \file main.cpp
 *
 * Command-line front end: validate serialised objects, compute Steenrod
 * squares on their cohomology, compute Khovanov tables and squares from PD
 * codes, run the randomised property suites, and emit joins/suspensions.
 *
 * Exit codes: 0 success, 1 property failure, 2 usage or parse error.
 */
#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "cupsq/cupi.hpp"
#include "cupsq/io.hpp"
#include "cupsq/khovanov.hpp"
#include "cupsq/verify.hpp"

namespace {

using namespace cupsq;
using nlohmann::json;

std::vector<std::string> rep_ids(const AssoObject& obj, int degree, const F2Vec& v) {
    std::vector<std::string> out;
    for (int i = 0; i < static_cast<int>(v.size()); ++i)
        if (v[i]) out.push_back(obj.level(degree)->element(i));
    return out;
}

std::string joined(const std::vector<std::string>& ids) {
    std::string out;
    for (auto& id : ids) {
        if (!out.empty()) out += " + ";
        out += id;
    }
    return out.empty() ? "0" : out;
}

json matrix_json(const F2Mat& m) {
    json rows = json::array();
    for (int r = 0; r < m.rows; ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols; ++c) row.push_back(static_cast<int>(m.at(r, c)));
        rows.push_back(row);
    }
    return rows;
}

void print_matrix(const F2Mat& m) {
    for (int r = 0; r < m.rows; ++r) {
        std::cout << "  [";
        for (int c = 0; c < m.cols; ++c) std::cout << (c ? " " : "") << static_cast<int>(m.at(r, c));
        std::cout << "]\n";
    }
    if (m.rows == 0) std::cout << "  (no classes)\n";
}

int run_validate(const std::string& input) {
    AssoObject obj = asso_from_json(read_file(input));
    ValidationReport report = obj.validate();
    if (report.ok()) {
        std::cout << "OK\n";
        return 0;
    }
    for (auto& v : report.violations) std::cout << "violation: " << v << "\n";
    return 1;
}

int run_sq(const std::string& input, int degree, int i, const std::string& klass,
           std::optional<uint64_t> shuffle_seed, bool as_json) {
    AssoObject obj = asso_from_json(read_file(input));
    if (shuffle_seed) obj = shuffle_orders(obj, *shuffle_seed);
    GradedChainComplex moore = moore_complex(obj);
    int top = moore.min_deg + static_cast<int>(moore.dims.size()) - 1;
    if (degree < moore.min_deg || degree > top)
        throw domain_error("degree " + std::to_string(degree) + " outside " +
                           std::to_string(moore.min_deg) + ".." + std::to_string(top));
    if (i < 0) throw domain_error("i must be non-negative");

    CohomologyBasis basis = cohomology(moore, degree);
    CohomologyBasis target = cohomology(moore, degree + i);
    CupCalculator calc(obj);

    json out;
    out["degree"] = degree;
    out["i"] = i;

    if (!klass.empty()) {
        F2Vec alpha(moore.dim(degree), 0);
        std::stringstream ss(klass);
        std::string part;
        int at = 0;
        while (std::getline(ss, part, ',')) {
            if (at >= static_cast<int>(alpha.size()) || (part != "0" && part != "1"))
                throw domain_error("--class must be " + std::to_string(alpha.size()) +
                                   " comma-separated bits");
            alpha[at++] = static_cast<uint8_t>(part == "1");
        }
        if (at != static_cast<int>(alpha.size()))
            throw domain_error("--class must be " + std::to_string(alpha.size()) +
                               " comma-separated bits");
        F2Vec rep = steenrod_square_rep(calc, moore, degree, alpha, i);
        F2Vec coords = target.reduce(rep);
        if (as_json) {
            out["class"] = joined(rep_ids(obj, degree, alpha));
            out["sq_representative"] = joined(rep_ids(obj, degree + i, rep));
            out["sq_coordinates"] = std::vector<int>(coords.begin(), coords.end());
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "sq^" << i << "(" << joined(rep_ids(obj, degree, alpha))
                      << ") = " << joined(rep_ids(obj, degree + i, rep)) << "\n";
            std::cout << "coordinates in H^" << degree + i << ":";
            for (auto b : coords) std::cout << " " << static_cast<int>(b);
            std::cout << "\n";
        }
        return 0;
    }

    F2Mat m(basis.rank(), target.rank());
    json basis_json = json::array();
    for (int r = 0; r < basis.rank(); ++r) {
        F2Vec rep = steenrod_square_rep(calc, moore, degree, basis.representatives()[r], i);
        F2Vec coords = target.reduce(rep);
        for (int c = 0; c < target.rank(); ++c) m.at(r, c) = coords[c];
        basis_json.push_back(joined(rep_ids(obj, degree, basis.representatives()[r])));
    }
    if (as_json) {
        out["basis"] = basis_json;
        out["matrix"] = matrix_json(m);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "H^" << degree << " basis:\n";
        for (auto& b : basis_json) std::cout << "  " << b.get<std::string>() << "\n";
        std::cout << "sq^" << i << ": H^" << degree << " -> H^" << degree + i << "\n";
        print_matrix(m);
    }
    return 0;
}

int run_kh(const std::string& pd_file, std::optional<int> q, std::optional<int> sq_i,
           bool as_json) {
    PDCode pd = parse_pd(read_file(pd_file));
    auto table = kh_table(pd);
    json out;
    out["table"] = json::array();
    if (!as_json) std::cout << "h\tq\tdim\n";
    for (auto& [key, dim] : table) {
        if (q && key.second != *q) continue;
        if (as_json)
            out["table"].push_back({{"h", key.first}, {"q", key.second}, {"dim", dim}});
        else
            std::cout << key.first << "\t" << key.second << "\t" << dim << "\n";
    }
    if (sq_i) {
        out["sq"] = json::array();
        std::vector<int> gradings = q ? std::vector<int>{*q} : quantum_gradings(pd);
        for (int grading : gradings) {
            auto sq = kh_sq(pd, grading, *sq_i);
            for (auto& [h, m] : sq) {
                if (m.rows == 0) continue;
                if (as_json)
                    out["sq"].push_back({{"q", grading},
                                         {"h", h},
                                         {"matrix", matrix_json(m)}});
                else {
                    std::cout << "sq^" << *sq_i << " on Kh^{" << h << "," << grading << "}:\n";
                    print_matrix(m);
                }
            }
        }
    }
    if (as_json) std::cout << out.dump(2) << "\n";
    return 0;
}

int run_verify(const std::string& suite, uint64_t seed, int count, bool as_json) {
    GeneratorSpec spec;
    spec.seed = seed;
    CheckReport report = check_identity(suite, spec, count);
    if (as_json) {
        json out = {{"name", report.name}, {"pass", report.pass}, {"witness", report.witness}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << report.name << ": " << (report.pass ? "pass" : "FAIL") << "\n";
        if (!report.pass) std::cout << report.witness << "\n";
    }
    return report.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cup-i products, Steenrod squares and Khovanov homology over F2"};
    app.require_subcommand(1);

    std::vector<std::string> inputs;
    std::string pd_file;
    std::string klass;
    int degree = 0, cup_i = 1;
    std::optional<int> q, kh_sq_i;
    std::optional<uint64_t> shuffle_seed;
    uint64_t seed = 0;
    int count = 20;
    std::string suite;
    bool as_json = false;

    CLI::App* validate = app.add_subcommand("validate", "validate an ASSO-JSON object");
    validate->add_option("--input", inputs, "object file")->required()->expected(1);

    CLI::App* sq = app.add_subcommand("sq", "Steenrod squares on an object's cohomology");
    sq->add_option("--input", inputs, "object file")->required()->expected(1);
    sq->add_option("--degree", degree, "cohomological degree")->required();
    sq->add_option("--i", cup_i, "square index")->required();
    sq->add_option("--class", klass, "cochain coefficients, comma-separated bits");
    sq->add_option("--shuffle-orders", shuffle_seed, "re-rank all spans with this seed");
    sq->add_flag("--json", as_json, "machine-readable output");

    CLI::App* kh = app.add_subcommand("kh", "Khovanov table of a PD code");
    kh->add_option("--pd", pd_file, "PD file (PD-JSON or X[...] text)")->required();
    kh->add_option("--q", q, "restrict to one quantum grading");
    kh->add_option("--sq", kh_sq_i, "also print this Steenrod square");
    kh->add_flag("--json", as_json, "machine-readable output");

    CLI::App* verify = app.add_subcommand("verify", "randomised property suites");
    verify->add_option("--suite", suite, "identity name")->required();
    verify->add_option("--seed", seed, "random seed");
    verify->add_option("--count", count, "instance count");
    verify->add_flag("--json", as_json, "machine-readable output");

    CLI::App* join_cmd = app.add_subcommand("join", "join of two objects, as ASSO-JSON");
    join_cmd->add_option("--input", inputs, "two object files")->required()->expected(2);

    CLI::App* suspend_cmd = app.add_subcommand("suspend", "suspension of an object, as ASSO-JSON");
    suspend_cmd->add_option("--input", inputs, "object file")->required()->expected(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(validate)) return run_validate(inputs[0]);
        if (app.got_subcommand(sq))
            return run_sq(inputs[0], degree, cup_i, klass, shuffle_seed, as_json);
        if (app.got_subcommand(kh)) return run_kh(pd_file, q, kh_sq_i, as_json);
        if (app.got_subcommand(verify)) return run_verify(suite, seed, count, as_json);
        if (app.got_subcommand(join_cmd)) {
            AssoObject a = asso_from_json(read_file(inputs[0]));
            AssoObject b = asso_from_json(read_file(inputs[1]));
            std::cout << asso_to_json(cupsq::join(a, b));
            return 0;
        }
        if (app.got_subcommand(suspend_cmd)) {
            std::cout << asso_to_json(cupsq::suspend(asso_from_json(read_file(inputs[0]))));
            return 0;
        }
    } catch (const cupsq::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
