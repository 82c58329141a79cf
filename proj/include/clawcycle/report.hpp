#pragma once

// Machine-readable (JSON) and tabular rendering of reports.

#include <ostream>
#include <span>
#include <string>

#include "json.hpp"

#include "clawcycle/verify.hpp"
#include "clawcycle/witness.hpp"

namespace clawcycle {

nlohmann::json to_json(const VerificationReport& r);
nlohmann::json to_json(const ExtremalResult& r);
nlohmann::json to_json(const ExtractionTrace& t);

/// {"header": {...}, "reports": [...]}; the header names the tool and the
/// pinned random generator.
nlohmann::json report_document(std::span<const VerificationReport> reports);

void print_table(std::ostream& os, std::span<const VerificationReport> reports);

}  // namespace clawcycle
