// baxterlab CLI: exact computation in free Baxter algebras, Stirling tables,
// and mechanical verification of the identity and congruence suites.

#include "baxterlab/congruences.hpp"
#include "baxterlab/errors.hpp"
#include "baxterlab/json_io.hpp"
#include "baxterlab/printing.hpp"
#include "baxterlab/shuffle_oracle.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace baxterlab;

constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::size_t max_degree_cap() {
    if (const char* env = std::getenv("BAXTERLAB_MAX_DEGREE")) {
        try {
            const long v = std::stol(env);
            if (v >= 1) return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
        }
        throw UsageError("BAXTERLAB_MAX_DEGREE must be a positive integer");
    }
    return 16;
}

void require_within_cap(std::size_t projected_length, const std::string& what) {
    const std::size_t cap = max_degree_cap();
    if (projected_length > cap) {
        throw UsageError(what + " would produce words of length " +
                         std::to_string(projected_length) + ", above the cap " +
                         std::to_string(cap) + " (raise BAXTERLAB_MAX_DEGREE to allow)");
    }
}

Ring ring_from_flag(const std::string& name) {
    if (name == "lambda") return Ring::lambda_int();
    if (name == "int") return Ring::integers();
    if (name.rfind("modp:", 0) == 0) return Ring::mod_p(std::stoull(name.substr(5)));
    if (name.rfind("lambda_modp:", 0) == 0)
        return Ring::lambda_mod_p(std::stoull(name.substr(12)));
    throw UsageError("unknown ring \"" + name +
                     "\" (expected int, modp:<p>, lambda, lambda_modp:<p>)");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw UsageError("cannot write " + out_path);
    out << text << "\n";
}

struct StirlingArgs {
    std::string kind;
    std::uint32_t n = 0;
    std::int64_t k = -1;
};

int run_stirling(const StirlingArgs& args) {
    if (args.n > 200) throw UsageError("stirling: n <= 200");
    auto value = [&](std::size_t k) {
        return args.kind == "second" ? stirling_second(args.n, k) : stirling_first(args.n, k);
    };
    if (args.k >= 0) {
        std::cout << value(static_cast<std::size_t>(args.k)).to_decimal() << "\n";
        return 0;
    }
    for (std::size_t k = 0; k <= args.n; ++k) {
        if (k) std::cout << ' ';
        std::cout << value(k).to_decimal();
    }
    std::cout << "\n";
    return 0;
}

struct ElementIoArgs {
    std::string lhs_path;
    std::string rhs_path;
    std::string elem_path;
    std::string ring_flag = "lambda";
    bool ring_given = false;
    std::string out_path;
    std::uint32_t n = 0;
};

BaxterElement load_element(const std::string& path, const ElementIoArgs& args) {
    const Ring fallback = ring_from_flag(args.ring_flag);
    BaxterElement e = element_from_json(read_file(path), fallback);
    if (args.ring_given && e.ring() != fallback) {
        throw UsageError(path + ": element ring disagrees with --ring " + args.ring_flag);
    }
    return e;
}

int run_product(const ElementIoArgs& args) {
    const BaxterElement lhs = load_element(args.lhs_path, args);
    const BaxterElement rhs = load_element(args.rhs_path, args);
    if (!lhs.is_zero() && !rhs.is_zero()) {
        require_within_cap(lhs.max_word_length() + rhs.max_word_length() - 1, "product");
    }
    write_output(to_json(lhs * rhs), args.out_path);
    return 0;
}

int run_power(const ElementIoArgs& args) {
    const BaxterElement base = load_element(args.elem_path, args);
    if (!base.is_zero() && args.n > 0) {
        require_within_cap((base.max_word_length() - 1) * args.n + 1, "power");
    }
    write_output(to_json(power(base, args.n)), args.out_path);
    return 0;
}

struct ExpandArgs {
    std::uint32_t n = 0;
    bool as_json = false;
    bool ascii = false;
};

int run_expand_p1x(const ExpandArgs& args) {
    require_within_cap(static_cast<std::size_t>(args.n) + 1, "expand-p1x");
    const BaxterElement e = expand_p1x(args.n);
    if (args.as_json) {
        std::cout << to_json(e) << "\n";
    } else {
        PrintOptions opts;
        opts.ascii = args.ascii;
        std::cout << to_display_string(e, opts) << "\n";
    }
    return 0;
}

struct VerifyArgs {
    std::string identity;
    std::int64_t n_max = -1;
    std::int64_t prime = -1;
    std::uint64_t seed = 1;
    std::uint32_t trials = 50;
};

// Elements exercised by `verify --identity pa`: within the documented
// ceiling of 3 terms and word length 2.
std::vector<std::pair<std::string, BaxterElement>> pa_sample_elements() {
    const Ring ring = Ring::lambda_int();
    auto from_terms = [&](std::initializer_list<std::pair<std::vector<std::uint32_t>, Coefficient>>
                              terms) {
        BaxterElement e(ring);
        for (const auto& [w, c] : terms) e.add_term(TensorWord(w), c);
        return e;
    };
    const Coefficient one = Coefficient::one(ring);
    const Coefficient lambda = Coefficient::lambda(ring);
    const Coefficient two = Coefficient::from_integer(ring, BigInt(2));
    return {
        {"1", BaxterElement::unit(ring)},
        {"x", from_terms({{{1}, one}})},
        {"x+x^2", from_terms({{{1}, one}, {{2}, one}})},
        {"x(x)x", from_terms({{{1, 1}, one}})},
        {"1(x)x", from_terms({{{0, 1}, one}})},
        {"lambda*x + 2*x(x)x^2", from_terms({{{1}, lambda}, {{1, 2}, two}})},
    };
}

// Words exercised by `verify --identity freshman`: every word of length
// <= 3 over the exponents 1..3, plus samples with unit factors.
std::vector<TensorWord> freshman_sample_words() {
    std::vector<TensorWord> words;
    for (std::uint32_t l = 1; l <= 3; ++l) {
        std::vector<std::uint32_t> exps(l, 1);
        while (true) {
            words.push_back(TensorWord(exps));
            std::size_t i = 0;
            while (i < l && exps[i] == 3) exps[i++] = 1;
            if (i == l) break;
            ++exps[i];
        }
    }
    words.push_back(TensorWord({0, 1}));
    words.push_back(TensorWord({1, 0, 2}));
    return words;
}

int report_outcome(const std::vector<VerificationReport>& reports) {
    bool all_passed = true;
    for (const auto& report : reports) {
        std::string params;
        for (const auto& [key, value] : report.params) {
            params += ' ';
            params += key + "=" + value;
        }
        if (report.passed) {
            std::cout << "ok " << identity_name(report.identity) << params << "\n";
        } else {
            all_passed = false;
            std::cout << "FAIL " << identity_name(report.identity) << params << "\n";
            std::cout << to_json(report) << "\n";
        }
    }
    return all_passed ? 0 : kExitVerifyFailure;
}

int run_verify(const VerifyArgs& args) {
    const std::string& id = args.identity;
    std::vector<VerificationReport> reports;

    const bool is_identity_family = id == "circ" || id == "conn1" || id == "conn2" ||
                                    id == "ref1" || id == "ref2" || id == "egf";
    if (is_identity_family) {
        if (args.n_max < 1) throw UsageError("verify: --n-max N (>= 1) is required for " + id);
        const auto n_max = static_cast<std::uint32_t>(args.n_max);
        try {
            if (id == "egf") {
                reports.push_back(egf_truncation_check(n_max));
            } else {
                for (std::uint32_t n = 1; n <= n_max; ++n) {
                    if (id == "circ") reports.push_back(verify_circ(n));
                    else if (id == "conn1") reports.push_back(verify_thm_conn_first_kind(n));
                    else if (id == "conn2") reports.push_back(verify_thm_conn_second_kind(n));
                    else if (id == "ref1") reports.push_back(verify_thm_ref_part1(n));
                    else reports.push_back(verify_thm_ref_part2(n));
                }
            }
        } catch (const OutOfRangeError& e) {
            throw UsageError(std::string("verify: ") + e.what());
        }
        return report_outcome(reports);
    }

    if (args.prime < 2) throw UsageError("verify: --prime P is required for " + id);
    const auto p = static_cast<std::uint64_t>(args.prime);
    try {
        if (id == "sni") {
            reports.push_back(check_sni_congruence(p));
        } else if (id == "xpow") {
            reports.push_back(check_x_power_congruence(p));
        } else if (id == "pa") {
            for (const auto& [name, element] : pa_sample_elements()) {
                auto report = check_pa_congruence(p, element);
                report.params.emplace_back("a", name);
                reports.push_back(std::move(report));
            }
        } else if (id == "freshman") {
            for (const auto& w : freshman_sample_words()) {
                reports.push_back(check_tensor_freshman(p, w));
            }
        } else if (id == "fermat") {
            reports.push_back(check_fermat_quotient_base(p, args.trials, args.seed));
        } else {
            throw UsageError("verify: unknown identity \"" + id + "\"");
        }
    } catch (const NotPrimeError& e) {
        throw UsageError(std::string("verify: ") + e.what());
    } catch (const OutOfRangeError& e) {
        throw UsageError(std::string("verify: ") + e.what());
    }
    return report_outcome(reports);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact mixable-shuffle arithmetic in free Baxter algebras"};
    app.require_subcommand(1);

    StirlingArgs stirling_args;
    auto* stirling_cmd =
        app.add_subcommand("stirling", "print a Stirling number or a triangle row");
    stirling_cmd->add_option("--kind", stirling_args.kind, "first or second")
        ->required()
        ->check(CLI::IsMember({"first", "second"}));
    stirling_cmd->add_option("--n", stirling_args.n, "row index")->required();
    stirling_cmd->add_option("--k", stirling_args.k, "column; omit for the whole row");

    ElementIoArgs product_args;
    auto* product_cmd = app.add_subcommand("product", "multiply two element JSON files");
    product_cmd->add_option("--lhs", product_args.lhs_path, "left element file")->required();
    product_cmd->add_option("--rhs", product_args.rhs_path, "right element file")->required();
    auto* product_ring = product_cmd->add_option(
        "--ring", product_args.ring_flag,
        "coefficient ring: int, modp:<p>, lambda, lambda_modp:<p> (default lambda)");
    product_cmd->add_option("--out", product_args.out_path, "write JSON here instead of stdout");

    ElementIoArgs power_args;
    auto* power_cmd = app.add_subcommand("power", "raise an element JSON file to a power");
    power_cmd->add_option("--elem", power_args.elem_path, "element file")->required();
    power_cmd->add_option("--n", power_args.n, "exponent")->required();
    auto* power_ring = power_cmd->add_option("--ring", power_args.ring_flag,
                                             "coefficient ring (default lambda)");
    power_cmd->add_option("--out", power_args.out_path, "write JSON here instead of stdout");

    ExpandArgs expand_args;
    auto* expand_cmd =
        app.add_subcommand("expand-p1x", "expand (1⊗x)^n over the formal weight ring");
    expand_cmd->add_option("--n", expand_args.n, "power")->required();
    expand_cmd->add_flag("--json", expand_args.as_json, "emit element JSON instead of text");
    expand_cmd->add_flag("--ascii", expand_args.ascii, "ASCII symbols in text output");

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify", "run an identity or congruence suite");
    verify_cmd
        ->add_option("--identity", verify_args.identity,
                     "circ, conn1, conn2, ref1, ref2, egf, sni, xpow, pa, freshman, fermat")
        ->required()
        ->check(CLI::IsMember({"circ", "conn1", "conn2", "ref1", "ref2", "egf", "sni", "xpow",
                               "pa", "freshman", "fermat"}));
    verify_cmd->add_option("--n-max", verify_args.n_max, "check n = 1..N (identity suites)");
    verify_cmd->add_option("--prime", verify_args.prime, "prime p (congruence suites)");
    verify_cmd->add_option("--seed", verify_args.seed, "seed for randomized trials");
    verify_cmd->add_option("--trials", verify_args.trials, "number of randomized trials");

    try {
        app.parse(argc, argv);
        product_args.ring_given = product_ring->count() > 0;
        power_args.ring_given = power_ring->count() > 0;

        if (stirling_cmd->parsed()) return run_stirling(stirling_args);
        if (product_cmd->parsed()) return run_product(product_args);
        if (power_cmd->parsed()) return run_power(power_args);
        if (expand_cmd->parsed()) return run_expand_p1x(expand_args);
        if (verify_cmd->parsed()) return run_verify(verify_args);
        return kExitUsage;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
