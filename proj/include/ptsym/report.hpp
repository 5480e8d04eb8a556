#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "ptsym/matrix.hpp"
#include "ptsym/sign_guard.hpp"
#include "ptsym/sweep.hpp"

namespace ptsym {

/// FNV-1a 64-bit digest of the raw input, hex-encoded with a scheme prefix.
/// Identifies which input produced a report; deterministic.
std::string input_digest(std::string_view bytes);

/**
 * Envelope for every CLI result. Machine formats round-trip:
 * from_json(to_json(r)) == r.
 */
struct ReportDocument {
    std::string mode;     // analyze | check | oracle | sweep
    std::string status;   // ok | inapplicable | match | mismatch | inconclusive
    std::string version;
    std::string digest;
    nlohmann::ordered_json payload;

    nlohmann::ordered_json to_json() const;
    static ReportDocument from_json(const nlohmann::ordered_json& j);

    friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

struct AnalysisOptions {
    bool float_mode = false;
    SignGuard guard{};
};

ReportDocument make_analyze_report(const SquareMatrix<GaussianRational>& m,
                                   const AnalysisOptions& options, const std::string& digest);

ReportDocument make_check_report(const SquareMatrix<GaussianRational>& m,
                                 const std::string& digest);

ReportDocument make_oracle_report(const SquareMatrix<GaussianRational>& m, double imag_threshold,
                                  const std::string& digest);

ReportDocument make_sweep_report(const FamilySpec& spec, const std::optional<Rational>& refine,
                                 const std::string& digest);

/// 0 = answered; 2 = method inapplicable (vanishing minor, indeterminate
/// sign, non-real charpoly) or inconclusive cross-check; 3 = cross-check
/// mismatch. Operational failures exit 1 before a report exists.
int exit_code_for(const ReportDocument& report);

std::string render_text(const ReportDocument& report);

/// Sweep only: rows "xi,nu,delta,pi,broken,status", xi as shortest decimal.
std::string render_sweep_csv(const ReportDocument& report);

}  // namespace ptsym
