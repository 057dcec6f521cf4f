// aproot: irreducibility verdicts and equisingularity reports for
// polynomials in K[[x]][y].  Exit codes: 0 verdict computed, 2 input error,
// 3 precision cap reached, 1 internal error.

#include <aproot/aproot.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using nlohmann::json;
using namespace aproot;

struct Request {
    std::string mode;
    std::string field = "Q";
    std::string input;
    std::string expr;
    std::string extension;
    bool json_out = true;
    long long precision_start = 2;
    long long cap = 1LL << 20;
    std::uint64_t seed = 1;
    bool residual_degrees = false;
};

constexpr int kInputError = 2;
constexpr int kCapReached = 3;

struct InputError : Error {
    using Error::Error;
};

// one entry per polynomial; text files hold one per line, JSON files either
// one triple list or a list of them
std::vector<BiPoly<Rational>> read_inputs(const Request& rq) {
    std::vector<BiPoly<Rational>> out;
    if (!rq.expr.empty()) {
        out.push_back(parse_poly(rq.expr));
        return out;
    }
    std::ifstream in(rq.input);
    if (!in) throw InputError("cannot open " + rq.input);
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string text = ss.str();
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '[') {
        json j;
        try {
            j = json::parse(text);
        } catch (const json::parse_error& e) {
            throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
        }
        const bool batch = j.is_array() && !j.empty() && j[0].is_array() && !j[0].empty() && j[0][0].is_array();
        if (batch)
            for (const auto& item : j) out.push_back(parse_poly_json(item));
        else
            out.push_back(parse_poly_json(j));
        return out;
    }
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        const auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos || line[b] == '#') continue;
        out.push_back(parse_poly(line));
    }
    if (out.empty()) throw InputError("no polynomial in " + rq.input);
    return out;
}

// the extension modulus is written in t
template <class K>
UPoly<K> parse_extension(const std::string& text, const typename K::ring_type& k) {
    if (text.find_first_of("xy") != std::string::npos) throw InputError("extension must be a polynomial in t");
    std::string s = text;
    std::replace(s.begin(), s.end(), 't', 'x');
    BiPoly<K> f = parse_poly_as<K>(s, k);
    if (f.degree() > 0 || f.is_zero()) throw InputError("extension must be a nonzero polynomial in t");
    UPoly<K> r = f.coeff(0);
    if (r.degree() < 1) throw InputError("extension must have positive degree");
    return make_monic(r);
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

template <class K>
json run_one(const Request& rq, const BiPoly<K>& f, const typename K::ring_type& k) {
    Options opt;
    opt.precision_start = rq.precision_start;
    opt.cap = rq.cap;
    opt.seed = rq.seed;
    const auto t0 = std::chrono::steady_clock::now();
    json out;
    if (rq.mode == "pseudo" || rq.mode == "invariants") {
        auto r = pseudo_irreducible(f, opt);
        out = pseudo_report(r, r.accepted ? Verdict::PseudoIrreducible : Verdict::NotPseudoIrreducible, ms_since(t0));
        if (rq.residual_degrees && r.accepted) {
            auto fs = factor_structure(r, rq.seed);
            out["residual_degrees"] = fs.residual_degrees;
            out["factor_degrees"] = fs.factor_degrees;
        }
        if (rq.mode == "invariants" && r.accepted)
            for (auto& [key, v] : out["invariants"].items()) out[key] = v;
    } else if (rq.mode == "irreducible") {
        std::optional<UPoly<K>> ext;
        if (!rq.extension.empty()) ext = parse_extension<K>(rq.extension, k);
        auto r = irreducible(f, opt, ext);
        out = pseudo_report(r.pseudo, r.verdict, ms_since(t0));
        out["early_polygon"] = r.early_polygon;
        if (rq.residual_degrees && r.pseudo.accepted) {
            auto fs = factor_structure(r.pseudo, rq.seed);
            out["residual_degrees"] = fs.residual_degrees;
            out["factor_degrees"] = fs.factor_degrees;
        }
    } else if (rq.mode == "absolute") {
        auto r = absolutely_irreducible(f, opt);
        out = pseudo_report(r, r.accepted ? Verdict::AbsolutelyIrreducible : Verdict::NotAbsolutelyIrreducible,
                            ms_since(t0));
    } else if (rq.mode == "abhyankar") {
        auto r = abhyankar_test(f, opt);
        out = abhyankar_report(r, ms_since(t0));
    } else if (rq.mode == "bivariate") {
        auto r = bivariate_mode(f, opt);
        out = pseudo_report(r, r.accepted ? Verdict::PseudoIrreducible : Verdict::NotPseudoIrreducible, ms_since(t0));
    } else if (rq.mode == "oracle-disc") {
        out["vF"] = resultant_x_valuation(f, y_derivative(f));
        out["timings_ms"] = ms_since(t0);
    }
    out["input"] = to_expr_string(f);
    return out;
}

template <class K>
json oracle_gen(const Request& rq, const typename K::ring_type& k) {
    std::mt19937_64 rng(rq.seed);
    auto prod = testkit::random_squarefree_product<K>(k, rng);
    auto rep = testkit::balanced_oracle(prod);
    json branches = json::array();
    for (const auto& b : prod.specs) branches.push_back(testkit::to_string(b));
    json out{{"polynomial", to_expr_string(prod.polynomial())},
             {"branches", branches},
             {"absolute_branches", rep.branches},
             {"balanced", rep.balanced},
             {"charexps", rep.charexps},
             {"gammas", rep.gammas}};
    if (prod.cf.c) out["W_squared"] = prod.cf.c->to_string();
    return out;
}

template <class K>
int run(const Request& rq, const typename K::ring_type& k, std::function<BiPoly<K>(const BiPoly<Rational>&)> lift) {
    if (rq.mode == "oracle-gen") {
        std::cout << oracle_gen<K>(rq, k).dump(rq.json_out ? 2 : -1) << "\n";
        return 0;
    }
    std::vector<BiPoly<Rational>> inputs = read_inputs(rq);
    json all = json::array();
    int code = 0;
    for (const auto& q : inputs) {
        json one;
        try {
            one = run_one<K>(rq, lift(q), k);
        } catch (const PrecisionExhausted& e) {
            one = {{"error", "PrecisionExhausted"}, {"detail", e.what()}};
            code = std::max(code, kCapReached);
        } catch (const ParseError& e) {
            one = {{"error", "ParseError"}, {"detail", e.what()}};
            code = std::max(code, kInputError);
        } catch (const CharacteristicError& e) {
            one = {{"error", "CharacteristicError"}, {"detail", e.what()}};
            code = std::max(code, kInputError);
        } catch (const DegenerateInput& e) {
            one = {{"error", "DegenerateInput"}, {"detail", e.what()}};
            code = std::max(code, kInputError);
        } catch (const InputError& e) {
            one = {{"error", "InputError"}, {"detail", e.what()}};
            code = std::max(code, kInputError);
        }
        all.push_back(std::move(one));
    }
    const json& shown = all.size() == 1 ? all[0] : all;
    if (rq.json_out) {
        std::cout << shown.dump(2) << "\n";
    } else {
        for (const auto& j : all) {
            if (j.contains("error")) std::cout << "error: " << j["error"].get<std::string>() << ": " << j["detail"].get<std::string>() << "\n";
            else if (j.contains("verdict")) std::cout << j["verdict"].get<std::string>() << "\n";
            else std::cout << "vF = " << j["vF"] << "\n";
        }
    }
    return code;
}

} // namespace

int main(int argc, char** argv) {
    Request rq;
    CLI::App app{"approximate-root irreducibility tests in K[[x]][y]"};
    app.add_option("--mode", rq.mode, "what to compute")
        ->required()
        ->check(CLI::IsMember({"pseudo", "irreducible", "absolute", "abhyankar", "bivariate", "invariants", "oracle-gen",
                               "oracle-disc"}));
    app.add_option("--field", rq.field, "Q or Fp:<p>");
    auto* in = app.add_option("--input", rq.input, "file: one polynomial per line, or JSON [coef, yexp, xexp] triples");
    auto* ex = app.add_option("--expr", rq.expr, "polynomial in x and y");
    in->excludes(ex);
    app.add_flag("--json,!--no-json", rq.json_out, "JSON report (default) or a one-line verdict");
    app.add_option("--precision-start", rq.precision_start, "initial truncation order")->check(CLI::PositiveNumber);
    app.add_option("--cap", rq.cap, "largest truncation order tried")->check(CLI::PositiveNumber);
    app.add_option("--seed", rq.seed, "seed for random choices and for oracle-gen");
    app.add_flag("--residual-degrees", rq.residual_degrees, "also report residual and K-factor degrees");
    app.add_option("--extension", rq.extension, "irreducible mode: test over K[t]/(R), R given in t");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kInputError;
    }
    if (rq.mode != "oracle-gen" && rq.input.empty() && rq.expr.empty()) {
        std::cerr << "one of --input or --expr is required\n";
        return kInputError;
    }
    if (!rq.extension.empty() && rq.mode != "irreducible") {
        std::cerr << "--extension only applies to --mode irreducible\n";
        return kInputError;
    }
    try {
        if (rq.field == "Q") {
            return run<Rational>(rq, RationalField{}, [](const BiPoly<Rational>& f) { return f; });
        }
        if (rq.field.rfind("Fp:", 0) == 0) {
            std::uint64_t p = 0;
            try {
                std::size_t used = 0;
                p = std::stoull(rq.field.substr(3), &used);
                if (used != rq.field.size() - 3) p = 0;
            } catch (const std::exception&) {
                p = 0;
            }
            if (p < 2 || !detail::is_prime_u64(p)) {
                std::cerr << "--field Fp:<p> needs a prime p\n";
                return kInputError;
            }
            PrimeField fp{p};
            return run<Fp>(rq, fp, [&](const BiPoly<Rational>& f) { return reduce_mod(f, fp); });
        }
        std::cerr << "--field must be Q or Fp:<p>\n";
        return kInputError;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kInputError;
    } catch (const InputError& e) {
        std::cerr << e.what() << "\n";
        return kInputError;
    } catch (const PrecisionExhausted& e) {
        std::cerr << e.what() << "\n";
        return kCapReached;
    } catch (const Error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
