#include "levigauge/report.hpp"

namespace levigauge {

namespace {

Json point_to_json(const Eigen::VectorXcd& point) {
    Json out = Json::array();
    for (Eigen::Index i = 0; i < point.size(); ++i) {
        out.push_back(Json::array({point[i].real(), point[i].imag()}));
    }
    return out;
}

Json rung_to_json(const RungStats& rung) {
    Json out;
    out["delta"] = rung.delta;
    out["n_samples"] = rung.n_samples;
    out["min_eig"] = rung.min_eig;
    out["q01_eig"] = rung.q01_eig;
    out["argmin"] = point_to_json(rung.argmin);
    return out;
}

Json zone_to_json(const PshZoneStats& stats) {
    Json out;
    out["count"] = stats.count;
    out["psi_min"] = stats.psi_min;
    out["psi_max"] = stats.psi_max;
    out["lambda_min"] = stats.lambda_min;
    return out;
}

std::string normalization_token(Normalization norm) {
    return norm == Normalization::UNIT_RANGE ? "unit" : "raw";
}

}  // namespace

Json config_to_json(const RunConfig& config) {
    Json out;
    out["spec_path"] = config.spec_path;
    out["mode"] = mode_token(config.mode);
    out["deltas"] = config.deltas;
    out["samples_per_delta"] = config.samples_per_delta;
    out["radius"] = config.radius;
    out["c"] = config.c;
    out["alpha"] = rational_to_string(config.alpha);
    out["seed"] = config.seed;
    out["normalization"] = normalization_token(config.normalization);
    out["out_path"] = config.out_path;
    return out;
}

Json spec_to_json(const DomainSpec& spec) {
    Json out;
    out["n"] = spec.n;
    out["label"] = spec.label;
    Json functions = Json::array();
    for (const Polynomial& f : spec.functions) {
        functions.push_back(f.to_string());
    }
    out["functions"] = functions;
    return out;
}

Json orders_to_json(const OrderData& orders) {
    Json out;
    out["m"] = orders.m;
    out["k"] = orders.k;
    Json l_rows = Json::array();
    for (const auto& row : orders.l) {
        Json l_row = Json::array();
        for (const auto& entry : row) {
            if (entry) {
                l_row.push_back(*entry);
            } else {
                l_row.push_back("inf");
            }
        }
        l_rows.push_back(l_row);
    }
    out["l"] = l_rows;
    Json clamps = Json::array();
    for (const ClampWarning& w : orders.clamp_warnings) {
        Json entry;
        entry["j"] = w.j;
        entry["i"] = w.i;
        entry["raw"] = w.raw;
        entry["clamped"] = w.clamped;
        clamps.push_back(entry);
    }
    out["clamp_warnings"] = clamps;
    return out;
}

Json index_to_json(const IndexReport& report) {
    Json out;
    out["mode"] = mode_token(report.mode);
    Json gammas = Json::array();
    for (const Rational& g : report.gammas) {
        gammas.push_back(rational_to_string(g));
    }
    out["gammas"] = gammas;
    out["epsilon"] = rational_to_string(report.epsilon);
    out["multiplicity"] = integer_to_string(report.multiplicity);
    Json alphas = Json::array();
    for (const Rational& a : report.alphas) {
        alphas.push_back(rational_to_string(a));
    }
    out["alphas"] = alphas;
    Json branch = Json::array();
    for (Branch b : report.branch) {
        branch.push_back(branch_token(b));
    }
    out["branch"] = branch;
    return out;
}

Json type_report_to_json(const TypeReport& report) {
    Json out;
    out["lower_bound_D"] = rational_to_string(report.lower_bound_D);
    out["upper_bound_D"] = integer_to_string(report.upper_bound_D);
    out["epsilon_consistency"] = report.epsilon_consistency;
    Json curves = Json::array();
    for (const CurveContact& entry : report.tested_curves) {
        Json row;
        row["label"] = entry.label;
        row["curve"] = entry.curve.to_string();
        if (entry.contact) {
            row["contact"] = rational_to_string(*entry.contact);
        } else {
            row["contact"] = "inf";
        }
        curves.push_back(row);
    }
    out["tested_curves"] = curves;
    out["warnings"] = report.warnings;
    return out;
}

Json verification_to_json(const VerificationReport& report) {
    Json out;
    Json per_delta = Json::array();
    for (const RungStats& rung : report.per_delta) {
        per_delta.push_back(rung_to_json(rung));
    }
    out["per_delta"] = per_delta;
    if (report.fit) {
        Json fit;
        fit["slope"] = report.fit->slope;
        fit["intercept"] = report.fit->intercept;
        fit["r_squared"] = report.fit->r_squared;
        out["fit"] = fit;
    } else {
        out["fit"] = nullptr;
    }
    out["target_slope"] = rational_to_string(report.target_slope);
    out["slope_ok"] = report.slope_ok;
    out["all_eigen_positive"] = report.all_eigen_positive;
    if (report.nonpositive_witness) {
        out["nonpositive_witness"] = rung_to_json(*report.nonpositive_witness);
    } else {
        out["nonpositive_witness"] = nullptr;
    }

    Json bounded;
    Json bounded_rungs = Json::array();
    for (const BoundedRung& rung : report.bounded.rungs) {
        Json row;
        row["delta"] = rung.delta;
        row["sup_abs_raw"] = rung.sup_abs_raw;
        row["unit_min"] = rung.unit_min;
        row["unit_max"] = rung.unit_max;
        bounded_rungs.push_back(row);
    }
    bounded["rungs"] = bounded_rungs;
    bounded["exceeds_analytic_bound"] = report.bounded.exceeds_analytic_bound;
    bounded["growth_flag"] = report.bounded.growth_flag;
    out["bounded"] = bounded;

    Json psh;
    psh["delta"] = report.psh.delta;
    Json zones;
    zones["inner"] = zone_to_json(report.psh.inner);
    zones["transition"] = zone_to_json(report.psh.transition);
    zones["outer"] = zone_to_json(report.psh.outer);
    psh["zones"] = zones;
    Json violations = Json::array();
    for (const PshViolation& v : report.psh.violations) {
        Json row;
        row["point"] = point_to_json(v.point);
        row["lambda_min"] = v.lambda_min;
        row["zone"] = zone_token(v.zone);
        row["psi"] = v.psi;
        row["detail"] = v.detail;
        violations.push_back(row);
    }
    psh["violations"] = violations;
    psh["outer_exactly_zero"] = report.psh.outer_exactly_zero;
    psh["inner_affine_identity"] = report.psh.inner_affine_identity;
    psh["inner_worst_gap"] = report.psh.inner_worst_gap;
    out["psh"] = psh;

    out["passed"] = report.passed;
    return out;
}

Json make_bundle_report(const DomainSpec& spec, const ValidatedDomain& vd,
                        const IndexReport& index, const TypeReport& curves,
                        const VerificationReport& verification, const RunConfig& config) {
    Json out;
    out["schema"] = kSchemaId;
    out["tool_version"] = kToolVersion;
    out["spec"] = spec_to_json(spec);
    out["config"] = config_to_json(config);
    out["orders"] = orders_to_json(vd.orders);
    out["index"] = index_to_json(index);
    out["curves"] = type_report_to_json(curves);
    out["verification"] = verification_to_json(verification);
    out["warnings"] = vd.warnings;
    return out;
}

std::string serialize_report(const Json& document) {
    return document.dump(2) + "\n";
}

}  // namespace levigauge
