#include "levigauge/domain.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>
#include <utility>

namespace levigauge {

namespace {

using nlohmann::json;

/// Least-index variable beyond bound that p actually uses, or 0 when none.
std::uint32_t first_variable_beyond(const Polynomial& p, std::uint32_t bound) {
    std::uint32_t found = 0;
    for (const auto& [exps, coeff] : p.terms()) {
        for (std::uint32_t i = bound; i < p.n_vars(); ++i) {
            if (exps[i] != 0 && (found == 0 || i + 1 < found)) {
                found = i + 1;
            }
        }
    }
    return found;
}

GaussianRational constant_term(const Polynomial& p) {
    return p.coefficient(Monomial(p.n_vars(), 0));
}

}  // namespace

double ValidatedDomain::eval_r(std::span<const std::complex<double>> point) const {
    const std::uint32_t nvars = spec.n;
    if (point.size() != static_cast<std::size_t>(nvars) + 1) {
        throw std::invalid_argument("eval_r expects n+1 coordinates");
    }
    double r = 2.0 * point[nvars].real();
    for (const Polynomial& f : spec.functions) {
        r += std::norm(f.evaluate(point.first(nvars)));
    }
    return r;
}

DomainSpec load_spec(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw SpecLoadError(std::string("spec is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw SpecLoadError("spec document must be a JSON object");
    }
    if (!doc.contains("n") || !doc["n"].is_number_integer()) {
        throw SpecLoadError("spec field \"n\" must be a positive integer");
    }
    const std::int64_t n_raw = doc["n"].get<std::int64_t>();
    if (n_raw < 1 || n_raw > 1024) {
        throw SpecLoadError("spec field \"n\" must be between 1 and 1024");
    }
    DomainSpec spec;
    spec.n = static_cast<std::uint32_t>(n_raw);
    if (!doc.contains("functions") || !doc["functions"].is_array()) {
        throw SpecLoadError("spec field \"functions\" must be an array of strings");
    }
    const auto& funcs = doc["functions"];
    if (funcs.size() != spec.n) {
        throw SpecLoadError("spec lists " + std::to_string(funcs.size()) +
                            " functions but n = " + std::to_string(spec.n));
    }
    spec.functions.reserve(spec.n);
    for (std::uint32_t j = 0; j < spec.n; ++j) {
        if (!funcs[j].is_string()) {
            throw SpecLoadError("function " + std::to_string(j + 1) + " is not a string");
        }
        const std::string text = funcs[j].get<std::string>();
        try {
            spec.functions.push_back(parse_poly(text, spec.n));
        } catch (const PolyParseError& e) {
            throw SpecLoadError("function " + std::to_string(j + 1) + ": " + e.what() +
                                " at position " + std::to_string(e.position()));
        } catch (const ExponentOverflow& e) {
            throw SpecLoadError("function " + std::to_string(j + 1) + ": " + e.what());
        }
    }
    if (doc.contains("label")) {
        if (!doc["label"].is_string()) {
            throw SpecLoadError("spec field \"label\" must be a string");
        }
        spec.label = doc["label"].get<std::string>();
    }
    return spec;
}

DomainSpec load_spec_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw SpecLoadError("cannot open spec file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_spec(buf.str());
}

OrderData extract_orders(const DomainSpec& spec) {
    OrderData data;
    const std::uint32_t n = spec.n;
    data.m.resize(n, 0);
    data.k.resize(n, 0);
    data.l.resize(n);
    for (std::uint32_t jj = 0; jj < n; ++jj) {
        const Polynomial& f = spec.functions[jj];
        SupportOrders own = support_orders(f, jj);
        if (!own.pure_min) {
            throw std::logic_error("extract_orders requires a pure power in each f_j");
        }
        const std::uint32_t m_j = *own.pure_min;
        data.m[jj] = m_j;

        Monomial pure(n, 0);
        pure[jj] = m_j;
        Polynomial remainder = f;
        remainder.add_term(pure, -f.coefficient(pure));

        SupportOrders rem_own = support_orders(remainder, jj);
        data.k[jj] = rem_own.max_below(m_j == 0 ? 0 : m_j - 1);

        data.l[jj].resize(jj);
        for (std::uint32_t ii = 0; ii < jj; ++ii) {
            SupportOrders cross = support_orders(remainder, ii);
            std::optional<std::uint32_t> l_val = cross.min_positive;
            if (l_val && *l_val > data.m[ii]) {
                data.clamp_warnings.push_back(
                    ClampWarning{jj + 1, ii + 1, *l_val, data.m[ii]});
                l_val = data.m[ii];
            }
            data.l[jj][ii] = l_val;
        }
    }
    return data;
}

ValidatedDomain validate(const DomainSpec& spec) {
    const std::uint32_t n = spec.n;
    if (n == 0 || spec.functions.size() != n) {
        throw std::invalid_argument("spec must provide exactly n functions, n >= 1");
    }
    for (std::uint32_t jj = 0; jj < n; ++jj) {
        const Polynomial& f = spec.functions[jj];
        if (f.n_vars() != n) {
            throw std::invalid_argument("function " + std::to_string(jj + 1) +
                                        " is not a polynomial in n variables");
        }
        const std::uint32_t j = jj + 1;
        if (std::uint32_t var = first_variable_beyond(f, jj + 1); var != 0) {
            throw ValidationError(ValidationError::Kind::NotTriangular, j, var,
                                  "function " + std::to_string(j) + " uses variable z" +
                                      std::to_string(var) + " beyond its own index");
        }
        if (!constant_term(f).is_zero()) {
            throw ValidationError(ValidationError::Kind::NonzeroConstantTerm, j, 0,
                                  "function " + std::to_string(j) +
                                      " has a nonzero constant term");
        }
        if (!support_orders(f, jj).pure_min) {
            throw ValidationError(ValidationError::Kind::NoPurePower, j, j,
                                  "function " + std::to_string(j) +
                                      " has no pure power of z" + std::to_string(j));
        }
    }

    ValidatedDomain vd;
    vd.spec = spec;
    vd.orders = extract_orders(spec);
    vd.leading_coeffs.reserve(n);
    vd.remainders.reserve(n);
    for (std::uint32_t jj = 0; jj < n; ++jj) {
        const Polynomial& f = spec.functions[jj];
        Monomial pure(n, 0);
        pure[jj] = vd.orders.m[jj];
        GaussianRational lead = f.coefficient(pure);
        vd.leading_coeffs.push_back(lead);
        Polynomial remainder = f;
        remainder.add_term(pure, -lead);
        vd.remainders.push_back(std::move(remainder));
        if (!(lead == GaussianRational(Rational(1), Rational(0)))) {
            vd.warnings.push_back("function " + std::to_string(jj + 1) +
                                  " has pure power coefficient " + lead.to_string() +
                                  ", orders are scale invariant");
        }
    }
    for (const ClampWarning& w : vd.orders.clamp_warnings) {
        vd.warnings.push_back("cross order l[" + std::to_string(w.j) + "][" +
                              std::to_string(w.i) + "] lowered from " +
                              std::to_string(w.raw) + " to " + std::to_string(w.clamped));
    }
    return vd;
}

}  // namespace levigauge
