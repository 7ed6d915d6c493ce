#include "heisvoa/expr.hpp"
#include "heisvoa/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace heisvoa;

namespace {

json rational_json(const Rational& r) {
    return format_rational(r);
}

json vector_json(const RatVector& v) {
    json out = json::array();
    for (const auto& c : v)
        out.push_back(rational_json(c));
    return out;
}

json matrix_json(const RatMatrix& m) {
    json out = json::array();
    for (const auto& row : m)
        out.push_back(vector_json(row));
    return out;
}

json algebra_json(const BosonAlgebra& algebra) {
    return json{{"rank", algebra.rank()}, {"gram", matrix_json(algebra.gram())}};
}

json witness_json(const ZeroModeWitness& w) {
    return json{{"weight", w.weight},
                {"probe", format_monomial(w.probe)},
                {"image", format_state(w.image)}};
}

// Text mode renders the same report as "path = value" lines, so both output
// modes carry identical semantic content.
void print_text(const json& node, const std::string& path, std::ostream& os) {
    if (node.is_object()) {
        for (const auto& [k, v] : node.items())
            print_text(v, path.empty() ? k : path + "." + k, os);
    } else if (node.is_array()) {
        for (std::size_t i = 0; i < node.size(); ++i)
            print_text(node[i], path + "[" + std::to_string(i) + "]", os);
    } else {
        os << path << " = " << (node.is_string() ? node.get<std::string>() : node.dump())
           << "\n";
    }
}

void emit(const json& report, const std::string& format) {
    if (format == "json")
        std::cout << report.dump(2) << "\n";
    else
        print_text(report, "", std::cout);
}

json make_report(const std::string& command, const BosonAlgebra& algebra, json inputs,
                 json result, json certificate, std::uint64_t seed) {
    return json{{"command", command}, {"algebra", algebra_json(algebra)},
                {"inputs", std::move(inputs)}, {"result", std::move(result)},
                {"certificate", std::move(certificate)}, {"seed", seed},
                {"version", "1"}};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact symbolic engine for rank-r free-boson vertex algebras"};
    app.require_subcommand(1);

    std::string algebra_file;
    int rank = 1;
    std::string format = "text";
    app.add_option("--algebra", algebra_file, "algebra definition file")->check(CLI::ExistingFile);
    app.add_option("--rank", rank, "rank with identity Gram form")->check(CLI::PositiveNumber);
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    int max_weight = 6;
    std::string expr;
    std::string bosons = "1";
    std::string suite = "all";
    std::uint64_t seed = 1;
    int trials = 200;

    auto* dims_cmd = app.add_subcommand("dims", "graded dimensions");
    dims_cmd->add_option("--max-weight", max_weight, "top weight");

    auto* degree_cmd = app.add_subcommand("degree", "degree of a state");
    degree_cmd->add_option("expr", expr, "state expression")->required();
    degree_cmd->add_option("--max-weight", max_weight, "witness search bound");

    auto* radical_cmd = app.add_subcommand("radical", "radical membership");
    radical_cmd->add_option("expr", expr, "state expression")->required();
    radical_cmd->add_option("--max-weight", max_weight, "witness search bound");

    auto* decompose_cmd = app.add_subcommand("decompose", "semi-primary and radical splits");
    decompose_cmd->add_option("expr", expr, "state expression")->required();

    auto* oinf_cmd = app.add_subcommand("oinf", "membership in (L(0)+L(-1))V");
    oinf_cmd->add_option("expr", expr, "state expression")->required();

    auto* commutant_cmd = app.add_subcommand("commutant", "commutant of a boson subspace");
    commutant_cmd->add_option("--bosons", bosons, "comma-separated boson indices")->required();
    commutant_cmd->add_option("--max-weight", max_weight, "top weight");

    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->add_option("--suite", suite, "all|modes|radical");
    verify_cmd->add_option("--max-weight", max_weight, "truncation weight");
    verify_cmd->add_option("--seed", seed, "base seed for randomized checks");
    verify_cmd->add_option("--trials", trials, "randomized trials per suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        BosonAlgebra algebra = algebra_file.empty() ? make_identity_algebra(rank)
                                                    : parse_algebra_file(algebra_file);

        if (dims_cmd->parsed()) {
            json result = json::array();
            for (int n = 0; n <= max_weight; ++n)
                result.push_back(dim(algebra, n));
            emit(make_report("dims", algebra, json{{"max_weight", max_weight}}, result,
                             nullptr, seed),
                 format);
            return 0;
        }

        if (degree_cmd->parsed()) {
            State v = parse_state(expr, algebra);
            auto res = degree(algebra, v, max_weight);
            json cert;
            cert["ignored_vacuum_part"] = res.ignored_vacuum_part;
            if (res.structural_witness) {
                cert["structural"] = json{{"j", format_state(res.structural_witness->first)},
                                          {"u", format_state(res.structural_witness->second)}};
            }
            if (res.mode_witness)
                cert["mode"] = witness_json(*res.mode_witness);
            emit(make_report("degree", algebra,
                             json{{"expr", expr}, {"max_weight", max_weight}},
                             json{{"degree", res.degree}}, cert, seed),
                 format);
            return 0;
        }

        if (radical_cmd->parsed()) {
            State v = parse_state(expr, algebra);
            auto cert = radical_member(algebra, v, max_weight);
            json c;
            c["member"] = cert.member;
            if (cert.member) {
                c["j1"] = format_state(cert.j1);
                c["w"] = format_state(cert.w);
            }
            if (cert.witness)
                c["witness"] = witness_json(*cert.witness);
            if (!cert.note.empty())
                c["note"] = cert.note;
            emit(make_report("radical", algebra,
                             json{{"expr", expr}, {"max_weight", max_weight}},
                             json{{"member", cert.member}}, c, seed),
                 format);
            return 0;
        }

        if (decompose_cmd->parsed()) {
            State v = parse_state(expr, algebra);
            auto parts = semi_primary_decompose(algebra, v);
            json sp = json::array();
            for (const auto& p : parts)
                sp.push_back(format_state(p));
            auto cert = radical_member(algebra, v);
            json c;
            c["semi_primary"] = sp;
            c["member"] = cert.member;
            if (cert.member) {
                auto [j1, w] = radical_decompose(algebra, v);
                c["j1"] = format_state(j1);
                c["w"] = format_state(w);
            }
            emit(make_report("decompose", algebra, json{{"expr", expr}},
                             json{{"member", cert.member}, {"parts", sp.size()}}, c, seed),
                 format);
            return 0;
        }

        if (oinf_cmd->parsed()) {
            State v = parse_state(expr, algebra);
            auto cert = oinfinity_member(algebra, v);
            json c;
            c["member"] = cert.member;
            c["in_radical"] = cert.in_radical;
            if (cert.member)
                c["w"] = format_state(cert.w);
            if (!cert.member && cert.in_radical) {
                c["j1"] = format_state(cert.j1);
                c["momentum"] = vector_json(cert.momentum);
                c["scalar"] = rational_json(cert.scalar);
            }
            if (!cert.note.empty())
                c["note"] = cert.note;
            emit(make_report("oinf", algebra, json{{"expr", expr}},
                             json{{"member", cert.member}}, c, seed),
                 format);
            return 0;
        }

        if (commutant_cmd->parsed()) {
            std::vector<RatVector> h_prime;
            std::stringstream ss(bosons);
            std::string tok;
            while (std::getline(ss, tok, ',')) {
                int b = std::stoi(tok);
                if (b < 1 || b > algebra.rank())
                    throw std::invalid_argument("boson index " + tok + " exceeds rank " +
                                                std::to_string(algebra.rank()));
                RatVector e(static_cast<std::size_t>(algebra.rank()), Rational(0));
                e[static_cast<std::size_t>(b - 1)] = 1;
                h_prime.push_back(std::move(e));
            }
            json dims_out = json::array();
            json bases = json::array();
            for (int n = 0; n <= max_weight; ++n) {
                auto wb = commutant_basis(algebra, h_prime, n);
                dims_out.push_back(wb.size());
                json level = json::array();
                for (const auto& s : wb)
                    level.push_back(format_state(s));
                bases.push_back(level);
            }
            auto conv = tensor_factor_dim_check(algebra, h_prime, max_weight);
            emit(make_report("commutant", algebra,
                             json{{"bosons", bosons}, {"max_weight", max_weight}},
                             json{{"dims", dims_out}, {"convolution_pass", conv.pass}},
                             json{{"basis", bases}, {"detail", conv.detail}}, seed),
                 format);
            return conv.pass ? 0 : 1;
        }

        if (verify_cmd->parsed()) {
            VerifyConfig cfg;
            cfg.max_weight = max_weight;
            cfg.seed = seed;
            cfg.trials = trials;
            auto results = run_suite(suite, algebra, cfg);
            bool all_pass = true;
            json checks = json::array();
            for (const auto& r : results) {
                all_pass = all_pass && r.pass;
                json c{{"name", r.name}, {"pass", r.pass}};
                if (!r.pass)
                    c["detail"] = r.detail;
                checks.push_back(std::move(c));
            }
            emit(make_report("verify", algebra,
                             json{{"suite", suite},
                                  {"max_weight", max_weight},
                                  {"trials", cfg.trials}},
                             json{{"pass", all_pass}}, checks, seed),
                 format);
            return all_pass ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
