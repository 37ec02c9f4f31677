#include "discosc/report.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include <json.hpp>

namespace discosc {

double error_residual() { return 9.9e99; }

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string format_complex(cplx v) {
    std::string out = format_double(v.real());
    if (v.imag() >= 0.0 || std::isnan(v.imag())) out += "+";
    out += format_double(v.imag());
    out += "i";
    return out;
}

namespace {

std::string join_params(const std::vector<std::pair<std::string, std::string>>& params) {
    std::string out;
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (i) out += ";";
        out += params[i].first;
        out += "=";
        out += params[i].second;
    }
    return out;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

}  // namespace

void sort_reports(std::vector<VerificationReport>& reports) {
    std::stable_sort(reports.begin(), reports.end(),
                     [](const VerificationReport& a, const VerificationReport& b) {
                         if (a.check != b.check) return a.check < b.check;
                         return join_params(a.params) < join_params(b.params);
                     });
}

int count_failures(const std::vector<VerificationReport>& reports) {
    int n = 0;
    for (const auto& r : reports)
        if (!r.passed()) ++n;
    return n;
}

std::string reports_to_json(const std::vector<VerificationReport>& reports) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        nlohmann::ordered_json row;
        row["check"] = r.check;
        nlohmann::ordered_json params = nlohmann::ordered_json::object();
        for (const auto& [k, v] : r.params) params[k] = v;
        row["params"] = params;
        row["residual"] = r.residual;
        row["tolerance"] = r.tolerance;
        row["status"] = r.passed() ? "pass" : "fail";
        row["notes"] = r.notes;
        arr.push_back(row);
    }
    return arr.dump(2) + "\n";
}

std::string reports_to_csv(const std::vector<VerificationReport>& reports) {
    std::string out = "check,params,residual,tolerance,status,notes\n";
    for (const auto& r : reports) {
        out += csv_escape(r.check);
        out += ",";
        out += csv_escape(join_params(r.params));
        out += ",";
        out += format_double(r.residual);
        out += ",";
        out += format_double(r.tolerance);
        out += ",";
        out += r.passed() ? "pass" : "fail";
        out += ",";
        out += csv_escape(r.notes);
        out += "\n";
    }
    return out;
}

}  // namespace discosc
