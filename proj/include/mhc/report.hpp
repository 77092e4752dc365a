#pragma once

#include "mhc/spec_io.hpp"

#include <json.hpp>

#include <string>

namespace mhc {

struct ReportOptions {
    std::size_t max_degree = 6;
    bool decompose = false;
    bool closed_form = false;
    bool oracle = false;
    bool basis = false;
};

/// Hypothesis summary: collapse window, lambda-breve, diagonal alpha, orders
/// of alpha and alpha^n, rank-1 case and rewrite notes.
nlohmann::json hypothesis_summary(const ParsedSpec& spec, std::size_t max_degree);

/// Reports are plain JSON (keys sorted, no timings) so identical inputs give
/// byte-identical output. Schemas are documented in docs/report_schema.md.
nlohmann::json hh_report(const ParsedSpec& spec, const ReportOptions& opt);
nlohmann::json hc_report(const ParsedSpec& spec, const ReportOptions& opt);
nlohmann::json verify_report(const ParsedSpec& spec, std::size_t max_degree);

/// Aligned-table rendering of any of the reports above.
std::string render_human(const nlohmann::json& report);

}  // namespace mhc
