#include "qgda/verify.hpp"

#include "qgda/errors.hpp"
#include "qgda/matrix_rep.hpp"
#include "qgda/random.hpp"

namespace qgda {

namespace {

std::string trial_witness(int trial) {
    return "trial " + std::to_string(trial);
}

std::string index_witness(const char* label, int k) {
    return std::string(label) + "=" + std::to_string(k);
}

// Runs `trials` samples of a predicate and records one check, remembering
// the first failing trial.
template <typename Fn>
void property(CheckList& out, const std::string& name, int trials, Fn&& fn) {
    for (int t = 0; t < trials; ++t) {
        if (!fn(t)) {
            out.add(name, false, trial_witness(t));
            return;
        }
    }
    out.add(name, true);
}

std::string reading_name(ConjugationReading conj, ExponentReading exp) {
    std::string name = conj == ConjugationReading::Plain
                           ? "plain-conjugation"
                           : "twisted-conjugation";
    name += exp == ExponentReading::KMinusOne ? " q^(k-1)" : " q^k";
    return name;
}

}  // namespace

CheckList verify_field(const Session& s, std::uint64_t seed) {
    CheckList out;
    const auto& field = s.algebra->field();
    const int n = field->n();
    RandomSource rng(seed);

    {
        CyclotomicNumber acc = field->zero();
        const auto& poly = field->minimal_poly();
        for (std::size_t i = 0; i < poly.size(); ++i)
            acc += field->root_power(static_cast<long>(i)).scaled(poly[i]);
        out.add("field/minimal-poly-at-root", acc.is_zero());
    }
    out.add("field/root-order", field->root_power(n).is_one());
    {
        bool primitive = true;
        int bad = 0;
        for (int k = 1; k < n; ++k) {
            if (field->root_power(k).is_one()) {
                primitive = false;
                bad = k;
                break;
            }
        }
        out.add("field/root-primitive", primitive,
                primitive ? "" : index_witness("k", bad));
    }

    property(out, "field/add-associative", 25, [&](int) {
        auto a = rng.scalar(field), b = rng.scalar(field), c = rng.scalar(field);
        return (a + b) + c == a + (b + c);
    });
    property(out, "field/mul-associative", 25, [&](int) {
        auto a = rng.scalar(field), b = rng.scalar(field), c = rng.scalar(field);
        return (a * b) * c == a * (b * c);
    });
    property(out, "field/mul-commutative", 25, [&](int) {
        auto a = rng.scalar(field), b = rng.scalar(field);
        return a * b == b * a;
    });
    property(out, "field/distributive", 25, [&](int) {
        auto a = rng.scalar(field), b = rng.scalar(field), c = rng.scalar(field);
        return a * (b + c) == a * b + a * c;
    });
    property(out, "field/inverse", 25, [&](int) {
        auto a = rng.scalar(field);
        if (a.is_zero()) return true;
        return (a * a.inverse()).is_one();
    });
    return out;
}

CheckList verify_base(const Session& s, std::uint64_t seed) {
    CheckList out;
    const auto& base = s.algebra->base();
    RandomSource rng(seed);

    const ValidationReport report = base->validate();
    if (report.ok()) {
        out.add("base/axioms", true);
    } else {
        for (const auto& f : report.failures) {
            std::string where;
            for (std::size_t i = 0; i < f.witness.size(); ++i)
                where += (i ? "," : "") + std::to_string(f.witness[i]);
            out.add("base/axiom-" + f.law, false,
                    "basis indices {" + where + "} " + f.detail);
        }
    }

    property(out, "base/associative", 20, [&](int) {
        auto u = rng.base_element(base), v = rng.base_element(base),
             w = rng.base_element(base);
        return (u * v) * w == u * (v * w);
    });
    property(out, "base/distributive", 20, [&](int) {
        auto u = rng.base_element(base), v = rng.base_element(base),
             w = rng.base_element(base);
        return u * (v + w) == u * v + u * w;
    });
    property(out, "base/unit-laws", 20, [&](int) {
        auto u = rng.base_element(base);
        return base->unit() * u == u && u * base->unit() == u;
    });
    property(out, "base/twist-multiplicative", 20, [&](int) {
        auto u = rng.base_element(base), v = rng.base_element(base);
        return (u * v).twist() == u.twist() * v.twist();
    });
    property(out, "base/twist-order", 20, [&](int) {
        auto u = rng.base_element(base);
        return u.twist(base->n()) == u;
    });
    return out;
}

CheckList verify_extension(const Session& s, std::uint64_t seed) {
    CheckList out;
    const auto& alg = s.algebra;
    const auto& base = alg->base();
    const int n = alg->n();
    RandomSource rng(seed);

    {
        const ValidationReport report = base->validate();
        std::string witness;
        for (const auto& f : report.failures) {
            if (!witness.empty()) witness += "; ";
            witness += f.law + ": " + f.detail;
        }
        out.add("extension/base-axioms", report.ok(), witness);
    }

    {
        const ExtElement tn = alg->tau_power(n);
        const ExtElement expect = alg->sign() == 1 ? alg->unit() : -alg->unit();
        out.add("extension/tau-order", tn == expect);
    }

    property(out, "extension/tau-commutation", 20, [&](int) {
        auto u = rng.base_element(base);
        return alg->embed(u) * alg->tau() ==
               alg->tau() * alg->embed(u.twist());
    });
    property(out, "extension/associative", 20, [&](int) {
        auto a = rng.ext_element(alg), b = rng.ext_element(alg),
             c = rng.ext_element(alg);
        return (a * b) * c == a * (b * c);
    });
    property(out, "extension/grading", 20, [&](int) {
        auto a = rng.homogeneous(alg), b = rng.homogeneous(alg);
        auto prod = a * b;
        if (prod.is_zero()) return true;
        auto da = a.degree(), db = b.degree(), dp = prod.degree();
        return da && db && dp && *dp == (*da + *db) % n;
    });
    property(out, "extension/differential-grade", 20, [&](int) {
        auto a = rng.homogeneous(alg);
        auto image = differential(a);
        if (image.is_zero()) return true;
        auto da = a.degree(), di = image.degree();
        return da && di && *di == (*da + 1) % n;
    });
    property(out, "extension/q-leibniz", 30, [&](int) {
        auto a = rng.homogeneous(alg), b = rng.homogeneous(alg);
        auto da = a.degree();
        return differential(a * b) ==
               differential(a) * b +
                   (a * differential(b)).scaled(alg->q_pow(*da));
    });
    property(out, "extension/inner-derivation", 20, [&](int) {
        auto a = rng.ext_element(alg);
        return differential(a) == inner_derivation(alg->tau(), a);
    });
    property(out, "extension/nilpotency", 20, [&](int) {
        return d_power(rng.ext_element(alg), n).is_zero();
    });
    return out;
}

CheckList verify_calculus(const Session& s, std::uint64_t seed) {
    CheckList out;
    const auto& alg = s.algebra;
    const auto& base = alg->base();
    const int n = alg->n();
    RandomSource rng(seed);

    if (!s.coordinate) {
        out.add("calculus/coordinate", true,
                "skipped: no invertible increment available");
        return out;
    }
    const Coordinate& c = *s.coordinate;
    const ExtElement dx = c.dx();

    out.add("calculus/coordinate", true);

    property(out, "calculus/derivative-identity", 20, [&](int) {
        auto u = rng.base_element(base);
        return differential(alg->embed(u)) ==
               dx * alg->embed(derivative(u, c));
    });
    property(out, "calculus/form-commutation", 20, [&](int) {
        auto u = rng.base_element(base);
        return alg->embed(u) * dx == dx * alg->embed(phi_dx(u, c));
    });
    property(out, "calculus/twisted-leibniz", 20, [&](int) {
        auto u = rng.base_element(base), v = rng.base_element(base);
        return derivative(u * v, c) ==
               derivative(u, c) * v + phi_dx(u, c) * derivative(v, c);
    });

    out.add("calculus/p-vanishing", poly_P(n, c).is_zero());
    out.add("calculus/p-twisted-sum", poly_P_twisted_sum(c).is_zero());

    {
        bool ok = true;
        std::string witness;
        for (int k = 1; k < n; ++k) {
            if (d_power(alg->embed(c.x()), k) !=
                alg->tau_power(k) * alg->embed(poly_P(k, c))) {
                ok = false;
                witness = index_witness("k", k);
                break;
            }
        }
        out.add("calculus/differential-powers", ok, witness);
    }
    {
        bool ok = true;
        std::string witness;
        for (int k = 1; k < n; ++k) {
            if (dx.pow(k) != alg->tau_power(k) * alg->embed(poly_Q(k, c))) {
                ok = false;
                witness = index_witness("k", k);
                break;
            }
        }
        out.add("calculus/form-powers", ok, witness);
    }
    {
        bool ok = true;
        std::string witness;
        for (int k = 1; k <= n; ++k) {
            auto q = poly_Q(k, c);
            auto qi = poly_Q_inverse(k, c);
            if (!(q * qi).is_unit_element() || !(qi * q).is_unit_element()) {
                ok = false;
                witness = index_witness("k", k);
                break;
            }
        }
        out.add("calculus/q-inverse-formula", ok, witness);
    }
    {
        bool ok = true;
        std::string witness;
        for (int k = 1; k < n; ++k) {
            if (differential(dx.pow(k)) !=
                dx.pow(k + 1) * alg->embed(poly_Phi(k, c))) {
                ok = false;
                witness = index_witness("k", k);
                break;
            }
        }
        out.add("calculus/connection-defining-identity", ok, witness);
    }

    if (n >= 3) {
        // Informational adjudication of the recurrence readings; the gating
        // fact is the defining identity above, so these entries always pass
        // and the witness records which readings reproduce the solved
        // coefficients.
        const PhiReadingReport report = adjudicate_phi_recurrence(c);
        for (const auto& entry : report.entries) {
            std::string matched;
            for (int conj = 0; conj < 2; ++conj) {
                for (int exp = 0; exp < 2; ++exp) {
                    if (!entry.matches[conj][exp]) continue;
                    if (!matched.empty()) matched += "; ";
                    matched += reading_name(static_cast<ConjugationReading>(conj),
                                            static_cast<ExponentReading>(exp));
                }
            }
            if (matched.empty()) matched = "no reading matches";
            out.add("calculus/recurrence-reading-k" + std::to_string(entry.k),
                    true, matched);
        }
        ConjugationReading conj;
        ExponentReading exp;
        const bool unique = report.unique_reading(conj, exp);
        out.add("calculus/recurrence-unique-reading", true,
                unique ? "unique across all k: " + reading_name(conj, exp)
                       : "no single reading matches every k");
    }

    {
        bool ok = true;
        std::string witness;
        for (int k = 0; k + 1 < n && ok; ++k) {
            for (int t = 0; t < 10; ++t) {
                KForm form(alg, k, FormBasis::DxPower, rng.base_element(base));
                const KForm image = form_differential(form, c);
                if (form_to_ext(image, c) !=
                    differential(form_to_ext(form, c))) {
                    ok = false;
                    witness = index_witness("k", k) + " " + trial_witness(t);
                    break;
                }
            }
        }
        out.add("calculus/form-two-path", ok, witness);
    }

    property(out, "calculus/operator-d", 10, [&](int) {
        auto u = rng.base_element(base);
        return operator_D(u, c) == operator_D_k(1, u, c);
    });
    return out;
}

CheckList verify_oracle(const Session& s, std::uint64_t seed) {
    CheckList out;
    if (s.algebra->kind() == InstanceKind::Custom) {
        out.add("oracle/matrix-model", true,
                "skipped: no bundled matrix model for a custom algebra");
        return out;
    }
    if (!s.coordinate) {
        out.add("oracle/matrix-model", true,
                "skipped: no invertible increment available");
        return out;
    }
    const MatrixRep rep = MatrixRep::of(s.algebra);
    CheckList inner = oracle_suite(rep, *s.coordinate, seed);
    for (auto& check : inner.checks)
        out.add("oracle/" + check.name, check.passed, check.witness);
    return out;
}

const std::vector<std::string>& verify_suite_names() {
    static const std::vector<std::string> names = {
        "field", "base", "extension", "calculus", "oracle"};
    return names;
}

VerifyResult run_verify(const std::string& suite, const Session& s,
                        std::uint64_t seed) {
    using SuiteFn = CheckList (*)(const Session&, std::uint64_t);
    static const std::vector<std::pair<std::string, SuiteFn>> table = {
        {"field", verify_field},
        {"base", verify_base},
        {"extension", verify_extension},
        {"calculus", verify_calculus},
        {"oracle", verify_oracle},
    };

    std::vector<SuiteFn> to_run;
    if (suite == "all") {
        for (const auto& [name, fn] : table) to_run.push_back(fn);
    } else {
        for (const auto& [name, fn] : table)
            if (name == suite) to_run.push_back(fn);
        if (to_run.empty()) {
            std::string known = "all";
            for (const auto& [name, fn] : table) known += ", " + name;
            return VerifyResult{
                2, {}, "unknown suite '" + suite + "' (expected " + known + ")"};
        }
    }

    VerifyResult result{0, {}, ""};
    std::uint64_t offset = 0;
    for (SuiteFn fn : to_run) {
        ++offset;
        try {
            result.checks.merge(fn(s, seed + offset));
        } catch (const Error& e) {
            result.checks.add("unexpected-error", false, e.what());
        }
    }
    result.exit_code = result.checks.ok() ? 0 : 1;
    return result;
}

}  // namespace qgda
