#pragma once

#include <string>

#include "scartest/dataset.hpp"

namespace scartest {

/**
 * CSV ingestion and emission. Format: UTF-8, comma separator, decimal point,
 * mandatory header row. Doubles are written in shortest round-trip form, so
 * a write/read cycle reproduces values bit-exactly.
 */

/// Loads PU data; `label_column` names the 0/1 indicator, every other column
/// must be numeric and becomes a feature (file order preserved).
PUDataset load_pu_csv(const std::string& path, const std::string& label_column);

/// Loads oracle data; `y_column` names the true class. If `s_column` is
/// nonempty and present it is read as the label indicator.
OracleDataset load_oracle_csv(const std::string& path,
                              const std::string& y_column,
                              const std::string& s_column = "");

/// Writes features as x1..xd plus the label column `s`.
void write_pu_csv(const std::string& path, const PUDataset& ds);

/// Writes features as x1..xd plus `s` (when present) and `y`.
void write_oracle_csv(const std::string& path, const OracleDataset& ds);

/// Shortest decimal string that parses back to exactly the same double.
std::string format_double(double v);

}  // namespace scartest
