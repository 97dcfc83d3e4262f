#pragma once

// Stable CSV/JSON renderings of the library's results. Shared by the CLI
// and the Python bindings so both emit identical records.

#include "tempiric/cktheory.hpp"

#include <string>

namespace tempiric {

Json label_json(const IrrepLabel &label);

Json ktypes_json(const GroupDatum &datum, const Rational &bound);
std::string ktypes_csv(const GroupDatum &datum, const Rational &bound);

Json branch_json(const GroupDatum &datum, const std::vector<KTypeLabel> &ktypes);
std::string branch_csv(const GroupDatum &datum,
                       const std::vector<KTypeLabel> &ktypes);

Json tempiric_table_json(const GroupDatum &datum, const Rational &bound);
std::string tempiric_table_csv(const GroupDatum &datum, const Rational &bound);

/// {rows, cols, entries, resolution, exact_cells, inverse | refusal}
Json matrix_json(const MultMatrix &mm, const WindowInverse &inv);
std::string matrix_csv(const MultMatrix &mm, const WindowInverse &inv);

Json verification_json(const std::vector<VerificationReport> &reports);
std::string verification_text(const std::vector<VerificationReport> &reports);

/// Parses "1,0", "(1,0)" or "3" into a label.
IrrepLabel parse_label(std::string_view text);

} // namespace tempiric
