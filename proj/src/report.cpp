#include "lik/report.hpp"

#include <json.hpp>

#include <sstream>

namespace lik {

namespace {

using ojson = nlohmann::ordered_json;

std::string fmt_err(const Real& e) { return format_sci(e, 3); }

std::string fmt_val(const Real& v, const Real& err) { return format_sci(v, justified_digits(v, err)); }

ojson check_to_json(const CheckResult& c) {
    ojson j;
    j["check_id"] = c.check_id;
    j["kind"] = c.kind;
    j["lhs"] = fmt_val(c.lhs, c.tolerance);
    j["rhs"] = fmt_val(c.rhs, c.tolerance);
    j["residual"] = format_sci(c.residual, 6);
    j["tolerance"] = format_sci(c.tolerance, 6);
    j["passed"] = c.passed;
    j["notes"] = c.notes;
    return j;
}

}  // namespace

std::string report_to_json(const Report& r) {
    ojson j;
    j["config"] = {{"command", r.command}, {"n_max", r.n_max}, {"precision_bits", r.precision_bits}};
    j["results"] = ojson::array();
    for (const auto& c : r.results) j["results"].push_back(check_to_json(c));
    j["summary"] = {{"passed", r.passed}, {"failed", r.failed}};
    return j.dump(2) + "\n";
}

std::string table_to_csv(const std::vector<TableRow>& rows) {
    std::ostringstream os;
    os << "index,value,err_est,route\n";
    for (const auto& r : rows)
        os << r.index << "," << fmt_val(r.value, r.err) << "," << fmt_err(r.err) << "," << r.route << "\n";
    return os.str();
}

std::string table_to_json(const std::string& family, long n_max, long bits,
                          const std::vector<TableRow>& rows) {
    ojson j;
    j["config"] = {{"command", "compute"}, {"family", family}, {"n_max", n_max}, {"precision_bits", bits}};
    j["rows"] = ojson::array();
    for (const auto& r : rows)
        j["rows"].push_back({{"index", r.index},
                             {"value", fmt_val(r.value, r.err)},
                             {"err_est", fmt_err(r.err)},
                             {"route", r.route}});
    return j.dump(2) + "\n";
}

namespace {

Real max_discrepancy(const std::vector<std::vector<TableRow>>& per_route, size_t i) {
    Real m = err_zero();
    for (size_t a = 0; a < per_route.size(); ++a)
        for (size_t b = a + 1; b < per_route.size(); ++b) {
            Real d = err_from(per_route[a][i].value - per_route[b][i].value);
            if (d > m) m = d;
        }
    return m;
}

}  // namespace

std::string lambda_table_to_csv(const std::vector<std::string>& route_names,
                                const std::vector<std::vector<TableRow>>& per_route) {
    std::ostringstream os;
    os << "index";
    for (const auto& rn : route_names) os << ",value_" << rn << ",err_est_" << rn;
    os << ",max_discrepancy\n";
    for (size_t i = 0; i < per_route[0].size(); ++i) {
        os << per_route[0][i].index;
        for (size_t r = 0; r < per_route.size(); ++r)
            os << "," << fmt_val(per_route[r][i].value, per_route[r][i].err) << ","
               << fmt_err(per_route[r][i].err);
        os << "," << (per_route.size() > 1 ? fmt_err(max_discrepancy(per_route, i)) : "0") << "\n";
    }
    return os.str();
}

std::string lambda_table_to_json(long n_max, long bits, const std::vector<std::string>& route_names,
                                 const std::vector<std::vector<TableRow>>& per_route) {
    ojson j;
    j["config"] = {{"command", "compute"}, {"family", "lambda"}, {"n_max", n_max}, {"precision_bits", bits}};
    j["routes"] = route_names;
    j["rows"] = ojson::array();
    for (size_t i = 0; i < per_route[0].size(); ++i) {
        ojson row;
        row["index"] = per_route[0][i].index;
        for (size_t r = 0; r < per_route.size(); ++r) {
            row["value_" + route_names[r]] = fmt_val(per_route[r][i].value, per_route[r][i].err);
            row["err_est_" + route_names[r]] = fmt_err(per_route[r][i].err);
        }
        row["max_discrepancy"] = per_route.size() > 1 ? fmt_err(max_discrepancy(per_route, i)) : "0";
        j["rows"].push_back(row);
    }
    return j.dump(2) + "\n";
}

std::string scan_to_json(const ConjectureScan& s, long n_max, long bits) {
    ojson j;
    j["config"] = {{"command", "scan"}, {"n_max", n_max}, {"precision_bits", bits}};
    j["k_range"] = {{"min", s.k_min}, {"max", s.k_max}};
    j["rows"] = ojson::array();
    for (long k = s.k_min; k <= s.k_max; ++k) {
        size_t i = static_cast<size_t>(k - s.k_min);
        j["rows"].push_back({{"k", k},
                             {"eta", format_sci(s.eta[i], 8)},
                             {"model", format_sci(s.model[i], 8)},
                             {"ratio", format_sci(s.ratio[i], 8)},
                             {"refined_ratio", format_sci(s.refined_ratio[i], 8)}});
    }
    j["best_alpha"] = format_sci(s.best_alpha, 8);
    j["best_alpha_from2"] = format_sci(s.best_alpha_from2, 8);
    j["violations"] = s.violations;
    j["clean_above_k"] = s.clean_above_k;
    j["bound_values"] = ojson::array();
    for (size_t i = 0; i < s.bound_values.size(); ++i)
        j["bound_values"].push_back({{"n", static_cast<long>(i) + 1}, {"value", format_sci(s.bound_values[i], 8)}});
    j["bound_positive_upto"] = s.bound_positive_upto;
    return j.dump(2) + "\n";
}

std::string scan_to_csv(const ConjectureScan& s) {
    std::ostringstream os;
    os << "k,eta,model,ratio,refined_ratio,violation\n";
    for (long k = s.k_min; k <= s.k_max; ++k) {
        size_t i = static_cast<size_t>(k - s.k_min);
        bool viol = false;
        for (long v : s.violations) viol = viol || v == k;
        os << k << "," << format_sci(s.eta[i], 8) << "," << format_sci(s.model[i], 8) << ","
           << format_sci(s.ratio[i], 8) << "," << format_sci(s.refined_ratio[i], 8) << ","
           << (viol ? 1 : 0) << "\n";
    }
    return os.str();
}

}  // namespace lik
