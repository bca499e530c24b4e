#include "levigauge/cli.hpp"

#include "levigauge/verify.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

namespace levigauge {

namespace {

struct LoadedDomain {
    DomainSpec spec;
    ValidatedDomain vd;
    IndexReport index;
};

LoadedDomain load_and_index(const RunConfig& config) {
    LoadedDomain out;
    out.spec = load_spec_file(config.spec_path);
    out.vd = validate(out.spec);
    out.index = compute_gammas(out.vd.orders, config.mode, config.alpha);
    return out;
}

WeightParams weight_params(const RunConfig& config) {
    WeightParams params;
    params.c = config.c;
    params.alpha = config.alpha;
    params.mode = config.mode;
    params.normalization = config.normalization;
    return params;
}

VerificationConfig verification_config(const RunConfig& config) {
    VerificationConfig vc;
    vc.deltas = config.deltas;
    vc.samples_per_delta = config.samples_per_delta;
    vc.radius = config.radius;
    vc.seed = config.seed;
    return vc;
}

std::string join_rationals(const std::vector<Rational>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) {
            out += " ";
        }
        out += rational_to_string(values[i]);
    }
    return out;
}

std::string domain_title(const LoadedDomain& dom, const RunConfig& config) {
    if (!dom.spec.label.empty()) {
        return dom.spec.label;
    }
    return config.spec_path;
}

void print_index(std::ostream& out, const LoadedDomain& dom, const RunConfig& config) {
    out << "domain: " << domain_title(dom, config) << " (n = " << dom.spec.n << ")\n";
    out << "mode: " << mode_token(dom.index.mode) << "\n";
    out << "gamma: " << join_rationals(dom.index.gammas) << "\n";
    std::string branches;
    for (std::size_t i = 0; i < dom.index.branch.size(); ++i) {
        if (i > 0) {
            branches += " ";
        }
        branches += branch_token(dom.index.branch[i]);
    }
    out << "branch: " << branches << "\n";
    out << "epsilon: " << rational_to_string(dom.index.epsilon) << "\n";
    out << "multiplicity: " << integer_to_string(dom.index.multiplicity) << "\n";
    out << "alpha exponents: " << join_rationals(dom.index.alphas) << "\n";
    for (const std::string& w : dom.vd.warnings) {
        out << "warning: " << w << "\n";
    }
}

void print_curves(std::ostream& out, const TypeReport& tr) {
    out << "contact lower bound: " << rational_to_string(tr.lower_bound_D)
        << ", upper bound 2m: " << integer_to_string(tr.upper_bound_D) << "\n";
    for (const CurveContact& entry : tr.tested_curves) {
        out << "  " << entry.label << " (" << entry.curve.to_string() << "): "
            << (entry.contact ? rational_to_string(*entry.contact) : std::string("inf"))
            << "\n";
    }
    out << "epsilon * lower_bound <= 1: " << (tr.epsilon_consistency ? "yes" : "NO") << "\n";
    for (const std::string& w : tr.warnings) {
        out << "warning: " << w << "\n";
    }
}

bool write_document(const std::string& path, const Json& document, std::ostream& err) {
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        err << "error: cannot open output path: " << path << "\n";
        return false;
    }
    file << serialize_report(document);
    file.flush();
    if (!file) {
        err << "error: failed writing output path: " << path << "\n";
        return false;
    }
    return true;
}

Json partial_bundle(const LoadedDomain& dom, const RunConfig& config) {
    Json out;
    out["schema"] = kSchemaId;
    out["tool_version"] = kToolVersion;
    out["spec"] = spec_to_json(dom.spec);
    out["config"] = config_to_json(config);
    out["orders"] = orders_to_json(dom.vd.orders);
    out["index"] = index_to_json(dom.index);
    out["warnings"] = dom.vd.warnings;
    return out;
}

int report_usage_error(std::ostream& err, const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsageError;
}

}  // namespace

int run_analyze(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        LoadedDomain dom = load_and_index(config);
        TypeReport tr = type_report(dom.vd, dom.index);
        print_index(out, dom, config);
        print_curves(out, tr);
        if (!config.out_path.empty()) {
            Json document = partial_bundle(dom, config);
            document["curves"] = type_report_to_json(tr);
            if (!write_document(config.out_path, document, err)) {
                return kExitUsageError;
            }
        }
        return kExitSuccess;
    } catch (const std::exception& e) {
        return report_usage_error(err, e);
    }
}

int run_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        LoadedDomain dom = load_and_index(config);
        WeightFamily wf(dom.vd, dom.index, weight_params(config));
        VerificationReport vr = run_verification(wf, verification_config(config));

        print_index(out, dom, config);
        for (const RungStats& rung : vr.per_delta) {
            out << "delta " << rung.delta << ": min_eig " << rung.min_eig << " (q01 "
                << rung.q01_eig << ", samples " << rung.n_samples << ")\n";
        }
        if (vr.fit) {
            out << "fitted slope: " << vr.fit->slope << " (target 2*epsilon = "
                << rational_to_string(vr.target_slope)
                << ", r^2 = " << vr.fit->r_squared << ")\n";
        } else {
            out << "fitted slope: unavailable (need 3 or more deltas with positive minima)\n";
        }
        if (vr.nonpositive_witness) {
            out << "nonpositive eigenvalue witness at delta " << vr.nonpositive_witness->delta
                << ": min_eig " << vr.nonpositive_witness->min_eig << "\n";
        }
        out << "psh zones: inner lambda_min " << vr.psh.inner.lambda_min
            << ", transition lambda_min " << vr.psh.transition.lambda_min
            << ", outer exactly zero: " << (vr.psh.outer_exactly_zero ? "yes" : "NO") << "\n";
        out << "verification " << (vr.passed ? "PASSED" : "FAILED") << "\n";

        if (!config.out_path.empty()) {
            Json document = partial_bundle(dom, config);
            document["verification"] = verification_to_json(vr);
            if (!write_document(config.out_path, document, err)) {
                return kExitUsageError;
            }
        }
        return vr.passed ? kExitSuccess : kExitVerificationFailure;
    } catch (const std::exception& e) {
        return report_usage_error(err, e);
    }
}

int run_curve(const RunConfig& config, const std::string& curve_arg, std::ostream& out,
              std::ostream& err) {
    try {
        LoadedDomain dom = load_and_index(config);
        MonomialCurve curve = curve_arg == "canonical"
                                  ? canonical_curve(dom.index)
                                  : parse_curve(curve_arg, dom.spec.n);
        std::optional<Rational> contact = contact_order(dom.vd, curve);
        out << "curve: " << curve.to_string() << "\n";
        out << "contact: " << (contact ? rational_to_string(*contact) : std::string("inf"))
            << "\n";
        return kExitSuccess;
    } catch (const std::exception& e) {
        return report_usage_error(err, e);
    }
}

int run_report(const RunConfig& config, std::ostream& out, std::ostream& err) {
    if (config.out_path.empty()) {
        err << "error: report requires an output path\n";
        return kExitUsageError;
    }
    try {
        LoadedDomain dom = load_and_index(config);
        TypeReport tr = type_report(dom.vd, dom.index);
        WeightFamily wf(dom.vd, dom.index, weight_params(config));
        VerificationReport vr = run_verification(wf, verification_config(config));
        Json document = make_bundle_report(dom.spec, dom.vd, dom.index, tr, vr, config);
        if (!write_document(config.out_path, document, err)) {
            return kExitUsageError;
        }
        out << "report written: " << config.out_path << " (verification "
            << (vr.passed ? "passed" : "failed") << ")\n";
        return vr.passed ? kExitSuccess : kExitVerificationFailure;
    } catch (const std::exception& e) {
        if (!config.out_path.empty()) {
            Json document;
            document["schema"] = kSchemaId;
            document["tool_version"] = kToolVersion;
            document["error"] = e.what();
            write_document(config.out_path, document, err);
        }
        return report_usage_error(err, e);
    }
}

}  // namespace levigauge
