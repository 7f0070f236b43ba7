#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "qgda/errors.hpp"
#include "qgda/eval.hpp"
#include "qgda/json_io.hpp"
#include "qgda/verify.hpp"

namespace {

using namespace qgda;

// Exit codes: 0 success, 1 verification failure, 2 usage/parse error,
// 3 algebra-validation failure.
constexpr int kOk = 0;
constexpr int kVerifyFailure = 1;
constexpr int kUsage = 2;
constexpr int kInvalidAlgebra = 3;

struct CommonOpts {
    std::string algebra_spec = "quantum-plane:3";
    std::string coord_expr;
    std::string format = "text";
    std::uint64_t seed = 0;
};

// Builds the algebra from "quantum-plane:N", "quaternion", or a definition
// file path. On failure prints a message and sets exit_code. File-supplied
// algebras must pass validation when `gate_validation` is set; the verify
// command loads ungated because reporting law failures is its whole job.
ExtAlgebra::Ptr algebra_from_spec(const std::string& spec, int& exit_code,
                                  bool gate_validation) {
    try {
        if (spec == "quaternion") return ExtAlgebra::quaternions();
        const std::string prefix = "quantum-plane:";
        if (spec.rfind(prefix, 0) == 0) {
            int n = 0;
            try {
                std::size_t used = 0;
                const std::string tail = spec.substr(prefix.size());
                n = std::stoi(tail, &used);
                if (used != tail.size()) throw std::invalid_argument(tail);
            } catch (const std::exception&) {
                std::cerr << "error: malformed algebra spec '" << spec
                          << "' (expected quantum-plane:<N>)\n";
                exit_code = kUsage;
                return nullptr;
            }
            return ExtAlgebra::quantum_plane(n);
        }
        AlgebraFile file = algebra_from_file(spec);
        if (gate_validation) {
            const ValidationReport report = file.base->validate();
            if (!report.ok()) {
                std::cerr << "algebra file '" << spec
                          << "' fails validation:\n"
                          << report.to_string();
                exit_code = kInvalidAlgebra;
                return nullptr;
            }
        }
        return ExtAlgebra::create(file.base, file.sign);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        exit_code = kUsage;
        return nullptr;
    }
}

// Assembles the session (algebra + coordinate + format); returns kOk or the
// exit code to terminate with.
int build_session(const CommonOpts& opts, Session& session,
                  bool gate_validation = true) {
    int exit_code = kOk;
    session.algebra =
        algebra_from_spec(opts.algebra_spec, exit_code, gate_validation);
    if (!session.algebra) return exit_code == kOk ? kUsage : exit_code;
    session.format =
        opts.format == "json" ? OutputFormat::Json : OutputFormat::Text;

    if (opts.coord_expr.empty()) {
        session.coordinate = canonical_coordinate(session.algebra);
        return kOk;
    }
    auto tree = parse(opts.coord_expr);
    if (std::holds_alternative<ParseError>(tree)) {
        std::cerr << "coordinate expression: "
                  << std::get<ParseError>(tree).to_string() << "\n";
        return kUsage;
    }
    try {
        Session bare;
        bare.algebra = session.algebra;
        EvalResult value = evaluate(std::get<Expr>(tree), bare);
        const ExtElement& xi = std::get<ExtElement>(value);
        auto deg = xi.degree();
        if (!deg || *deg != 0) {
            std::cerr << "coordinate expression must be a grade-0 element\n";
            return kUsage;
        }
        auto coord = Coordinate::make(session.algebra, xi.part(0));
        if (!coord) {
            std::cerr << "coordinate increment is not invertible\n";
            return kUsage;
        }
        session.coordinate = std::move(coord);
    } catch (const Error& e) {
        std::cerr << "coordinate expression: " << e.what() << "\n";
        return kUsage;
    }
    return kOk;
}

int eval_one(const std::string& src, const Session& session,
             std::ostream& out) {
    auto tree = parse(src);
    if (std::holds_alternative<ParseError>(tree)) {
        std::cerr << std::get<ParseError>(tree).to_string() << "\n";
        return kUsage;
    }
    try {
        EvalResult result = evaluate(std::get<Expr>(tree), session);
        if (session.format == OutputFormat::Json)
            out << result_to_json(result).dump() << "\n";
        else
            out << result_to_text(result) << "\n";
    } catch (const EvalError& e) {
        std::cerr << "evaluation error: " << e.what() << "\n";
        return kUsage;
    }
    return kOk;
}

int run_eval(const CommonOpts& opts, const std::string& expression,
             const std::string& batch_path) {
    Session session;
    if (int code = build_session(opts, session); code != kOk) return code;

    if (!batch_path.empty()) {
        std::ifstream in(batch_path);
        if (!in) {
            std::cerr << "error: cannot read expression file '" << batch_path
                      << "'\n";
            return kUsage;
        }
        int failures = 0;
        std::string line;
        int line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            if (eval_one(line, session, std::cout) != kOk) {
                std::cerr << "  (line " << line_no << ")\n";
                ++failures;
            }
        }
        return failures == 0 ? kOk : kUsage;
    }
    if (expression.empty()) {
        std::cerr << "error: no expression given (positional argument or "
                     "--file)\n";
        return kUsage;
    }
    return eval_one(expression, session, std::cout);
}

int run_verify_cmd(const CommonOpts& opts, const std::string& suite) {
    Session session;
    if (int code = build_session(opts, session, /*gate_validation=*/false);
        code != kOk)
        return code;
    VerifyResult result = run_verify(suite, session, opts.seed);
    if (result.exit_code == kUsage) {
        std::cerr << "error: " << result.message << "\n";
        return kUsage;
    }
    if (session.format == OutputFormat::Json) {
        Json checks = Json::array();
        for (const auto& c : result.checks.checks)
            checks.push_back(Json{{"name", c.name},
                                  {"passed", c.passed},
                                  {"witness", c.witness}});
        std::cout << Json{{"suite", suite},
                          {"ok", result.checks.ok()},
                          {"checks", std::move(checks)}}
                         .dump()
                  << "\n";
    } else {
        std::cout << result.checks.to_text();
        std::cout << (result.checks.ok() ? "ok\n" : "FAILURES\n");
    }
    return result.exit_code;
}

int run_poly(const CommonOpts& opts, const std::string& family, int k_bound) {
    Session session;
    if (int code = build_session(opts, session); code != kOk) return code;
    if (!session.coordinate) {
        std::cerr << "error: no coordinate available (pass -x)\n";
        return kUsage;
    }
    const Coordinate& c = *session.coordinate;
    const int n = session.algebra->n();
    if (k_bound <= 0) k_bound = n;

    struct Family {
        const char* name;
        int max_k;
        BaseElement (*fn)(int, const Coordinate&);
    };
    const Family families[] = {
        {"P", std::min(k_bound, n), &poly_P},
        {"Q", std::min(k_bound, n), &poly_Q},
        {"Phi", std::min(k_bound, n - 1), &poly_Phi},
    };

    Json out_json = Json::object();
    for (const auto& fam : families) {
        if (!family.empty() && family != fam.name) continue;
        Json values = Json::array();
        for (int k = 1; k <= fam.max_k; ++k) {
            const BaseElement value = fam.fn(k, c);
            if (session.format == OutputFormat::Json)
                values.push_back(Json{{"k", k},
                                      {"value", base_element_to_json(value)}});
            else
                std::cout << fam.name << "_" << k << " = " << value.to_string()
                          << "\n";
        }
        out_json[fam.name] = std::move(values);
    }
    if (session.format == OutputFormat::Json)
        std::cout << out_json.dump() << "\n";
    return kOk;
}

int run_algebra_show(const CommonOpts& opts) {
    Session session;
    if (int code = build_session(opts, session); code != kOk) return code;
    const auto& alg = session.algebra;
    const auto& base = alg->base();
    if (session.format == OutputFormat::Json) {
        std::cout << algebra_to_json(base, alg->sign()).dump() << "\n";
        return kOk;
    }
    std::cout << "name: " << base->name() << "\n"
              << "n: " << alg->n() << "\n"
              << "sign: " << alg->sign() << "\n"
              << "dim: " << base->dim() << "\n"
              << "tau symbol: " << alg->tau_symbol() << "\n"
              << "basis:";
    for (const auto& name : base->basis_names()) std::cout << " " << name;
    std::cout << "\n";
    for (int i = 0; i < base->dim(); ++i)
        std::cout << "twist(" << base->basis_names()[i]
                  << ") = " << base->basis(i).twist().to_string() << "\n";
    for (int i = 0; i < base->dim(); ++i)
        for (int j = 0; j < base->dim(); ++j)
            std::cout << base->basis_names()[i] << " * "
                      << base->basis_names()[j] << " = "
                      << (base->basis(i) * base->basis(j)).to_string() << "\n";
    return kOk;
}

int run_algebra_validate(const CommonOpts& opts) {
    // Validation must report, not refuse, so the algebra is built without
    // the usual validation gate.
    int exit_code = kOk;
    ExtAlgebra::Ptr algebra =
        algebra_from_spec(opts.algebra_spec, exit_code, false);
    if (!algebra) return exit_code == kOk ? kUsage : exit_code;
    const ValidationReport report = algebra->base()->validate();
    if (opts.format == "json") {
        Json failures = Json::array();
        for (const auto& f : report.failures) {
            failures.push_back(Json{{"law", f.law},
                                    {"witness", f.witness},
                                    {"detail", f.detail}});
        }
        std::cout << Json{{"ok", report.ok()}, {"failures", failures}}.dump()
                  << "\n";
    } else if (report.ok()) {
        std::cout << "algebra valid\n";
    } else {
        std::cout << report.to_string();
    }
    return report.ok() ? kOk : kInvalidAlgebra;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "exact calculus on graded algebra extensions twisted by a root of "
        "unity"};
    app.require_subcommand(1);
    app.fallthrough();

    CommonOpts opts;
    app.add_option("-a,--algebra", opts.algebra_spec,
                   "algebra: quantum-plane:<N>, quaternion, or a definition "
                   "file")
        ->capture_default_str();
    app.add_option("-x,--coordinate", opts.coord_expr,
                   "coordinate expression (default: the canonical generator)");
    app.add_option("-f,--format", opts.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--seed", opts.seed, "seed for randomized suites")
        ->capture_default_str();

    std::string expression;
    std::string batch_path;
    auto* eval_cmd = app.add_subcommand("eval", "evaluate an expression");
    eval_cmd->add_option("expression", expression, "expression to evaluate");
    eval_cmd->add_option("--file", batch_path,
                         "evaluate one expression per line from a file");

    std::string suite = "all";
    auto* verify_cmd =
        app.add_subcommand("verify", "run law-verification suites");
    verify_cmd->add_option(
        "suite", suite, "field, base, extension, calculus, oracle, or all");

    std::string family;
    int k_bound = 0;
    auto* poly_cmd = app.add_subcommand(
        "poly", "print the coordinate polynomial families");
    poly_cmd->add_option("family", family, "P, Q, or Phi (default: all three)")
        ->check(CLI::IsMember({"P", "Q", "Phi"}));
    poly_cmd->add_option("-k", k_bound, "largest index to print");

    auto* algebra_cmd =
        app.add_subcommand("algebra", "inspect or validate the algebra");
    algebra_cmd->require_subcommand(1);
    algebra_cmd->fallthrough();
    auto* show_cmd =
        algebra_cmd->add_subcommand("show", "print the algebra tables");
    auto* validate_cmd = algebra_cmd->add_subcommand(
        "validate", "check the algebra laws and report failures");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*eval_cmd) return run_eval(opts, expression, batch_path);
        if (*verify_cmd) return run_verify_cmd(opts, suite);
        if (*poly_cmd) return run_poly(opts, family, k_bound);
        if (*show_cmd) return run_algebra_show(opts);
        if (*validate_cmd) return run_algebra_validate(opts);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
