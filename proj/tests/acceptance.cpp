// Acceptance gate: one pass/fail line per criterion, exit 0 iff all pass.
// Usage: acceptance <path-to-cli-binary>

#include "heisvoa/expr.hpp"
#include "heisvoa/verify.hpp"

#include <array>
#include <cstdio>
#include <sys/wait.h>
#include <iostream>
#include <random>
#include <string>
#include <vector>

using namespace heisvoa;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& title, bool pass, const std::string& detail) {
    std::cout << "criterion " << criterion << " [" << title << "]: "
              << (pass ? "PASS" : "FAIL");
    if (!pass) {
        std::cout << " — " << detail;
        ++g_failures;
    }
    std::cout << "\n" << std::flush;
}

bool gather(std::vector<CheckResult> results, std::string* detail) {
    for (const auto& r : results)
        if (!r.pass) {
            *detail = r.name + ": " + r.detail;
            return false;
        }
    return true;
}

// Independent oracle: Euler's pentagonal recurrence.
std::vector<long> partition_numbers(int up_to) {
    std::vector<long> p(up_to + 1, 0);
    p[0] = 1;
    for (int n = 1; n <= up_to; ++n) {
        long s = 0;
        for (int k = 1;; ++k) {
            int g1 = k * (3 * k - 1) / 2;
            int g2 = k * (3 * k + 1) / 2;
            if (g1 > n && g2 > n)
                break;
            int sign = (k % 2 == 1) ? 1 : -1;
            if (g1 <= n)
                s += sign * p[n - g1];
            if (g2 <= n)
                s += sign * p[n - g2];
        }
        p[n] = s;
    }
    return p;
}

struct CliRun {
    int exit_code = -1;
    std::string output;
};

CliRun run_cli(const std::string& binary, const std::string& args) {
    CliRun run;
    std::string cmd = binary + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return run;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        run.output.append(buf.data(), got);
    int status = pclose(pipe);
    run.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return run;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <cli-binary>\n";
        return 2;
    }
    const std::string cli = argv[1];

    auto r1 = make_identity_algebra(1);
    auto r2 = make_identity_algebra(2);
    VerifyConfig cfg; // max_weight 6, 200 trials, seed 1
    std::string detail;
    bool ok = true;

    // 1: axioms — bracket, creation property, translation covariance, exactly
    // on basis states of weight <= 6.
    ok = gather({check_heisenberg_bracket(r1, cfg.max_weight),
                 check_heisenberg_bracket(r2, cfg.max_weight),
                 check_creation_property(r1, cfg.max_weight),
                 check_creation_property(r2, cfg.max_weight),
                 check_translation_covariance(r1, cfg.max_weight),
                 check_translation_covariance(r2, cfg.max_weight)},
                &detail);
    report(1, "axiom suite", ok, detail);

    // 2: commutator identity for random homogeneous a, b and all m,n in [-3,4].
    ok = gather({check_commutator_identity(r1, cfg), check_commutator_identity(r2, cfg)},
                &detail);
    report(2, "commutator identity", ok, detail);

    // 3: quasi-primary and weight-one commutator identities as matrices.
    ok = gather({check_quasi_primary_commutator(r1, cfg.max_weight),
                 check_quasi_primary_commutator(r2, cfg.max_weight),
                 check_weight_one_commutator(r1, cfg.max_weight),
                 check_weight_one_commutator(r2, cfg.max_weight)},
                &detail);
    report(3, "quasi-primary commutators", ok, detail);

    // 4: direct-sum splitting plus the rank-1 partition dimensions.
    ok = gather({check_lemma33_direct_sum(r1, cfg.max_weight),
                 check_lemma33_direct_sum(r2, cfg.max_weight)},
                &detail);
    if (ok) {
        auto oracle = partition_numbers(6);
        std::vector<long> expect{1, 1, 2, 3, 5, 7, 11};
        for (int n = 0; n <= 6; ++n)
            if (static_cast<long>(dim(r1, n)) != oracle[n] || oracle[n] != expect[n]) {
                ok = false;
                detail = "rank-1 dimension mismatch at weight " + std::to_string(n);
                break;
            }
    }
    report(4, "weight-space splitting and dimensions", ok, detail);

    // 5: radical round-trip and non-member witnesses, 200 trials each.
    ok = gather({check_theorem1_roundtrip(r1, cfg), check_theorem1_roundtrip(r2, cfg),
                 check_nonmember_witness(r1, cfg), check_nonmember_witness(r2, cfg)},
                &detail);
    report(5, "radical membership round-trip", ok, detail);

    // 6: structural degree vs mode-scan degree, 200 trials.
    ok = gather({check_degree_consistency(r1, cfg), check_degree_consistency(r2, cfg)},
                &detail);
    report(6, "degree consistency", ok, detail);

    // 7: vanishing-mode statements on weights 1..4.
    ok = gather({check_mode_vanishing_statements(r1, cfg.max_weight),
                 check_mode_vanishing_statements(r2, cfg.max_weight)},
                &detail);
    report(7, "vanishing-mode statements", ok, detail);

    // 8: commutant of one boson in the orthonormal rank-2 algebra, plus the
    // canonical form on the weight-1 piece.
    ok = gather({check_commutant_factorization(r2, {RatVector{1, 0}}, cfg.max_weight),
                 check_canonical_form_on_v1(r1), check_canonical_form_on_v1(r2)},
                &detail);
    report(8, "commutant factorization", ok, detail);

    // 9: momentum modules separate the weight-one radical from (L(0)+L(-1))V.
    ok = gather({check_oinfinity_separation(r1, cfg), check_oinfinity_separation(r2, cfg)},
                &detail);
    report(9, "module separation", ok, detail);

    // 10: CLI — parse/format round-trip on 500 random states, dims vs the
    // counting oracle, and a bit-reproducible verify run.
    ok = true;
    detail.clear();
    {
        std::mt19937_64 rng(split_seed(cfg.seed, "acceptance-roundtrip"));
        for (int trial = 0; trial < 500 && ok; ++trial) {
            State s = random_state(r2, cfg.max_weight, rng);
            if (!(parse_state(format_state(s), r2) == s)) {
                ok = false;
                detail = "parse/format round-trip failed: " + format_state(s);
            }
        }
        if (ok) {
            auto dims = run_cli(cli, "--rank 1 --format json dims --max-weight 6");
            auto oracle = partition_numbers(6);
            if (dims.exit_code != 0) {
                ok = false;
                detail = "dims exited " + std::to_string(dims.exit_code);
            } else {
                for (int n = 0; n <= 6 && ok; ++n)
                    if (dims.output.find(std::to_string(oracle[n])) == std::string::npos) {
                        ok = false;
                        detail = "dims output missing " + std::to_string(oracle[n]);
                    }
            }
        }
        if (ok) {
            auto first = run_cli(cli, "--rank 1 verify --suite all --seed 1");
            auto second = run_cli(cli, "--rank 1 verify --suite all --seed 1");
            if (first.exit_code != 0) {
                ok = false;
                detail = "verify exited " + std::to_string(first.exit_code) + "\n" +
                         first.output;
            } else if (first.output != second.output) {
                ok = false;
                detail = "verify output not bit-reproducible";
            }
        }
    }
    report(10, "CLI round-trip and reproducibility", ok, detail);

    std::cout << (g_failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << "\n";
    return g_failures == 0 ? 0 : 1;
}
