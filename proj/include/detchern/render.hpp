#pragma once

#include <string>
#include <vector>

#include "detchern/cycles.hpp"

namespace detchern {

enum class OutputFormat { Plain, Json, Csv, Latex };

OutputFormat parse_format(const std::string& name); // throws usage_error

// descending powers, e.g. "15H^14 + 60H^13 + ... + 14H^6"; "0" for zero
std::string poly_plain(const HClass& cls);
std::string poly_plain(const DPoly& f, const std::string& var);
// same with LaTeX exponents "15H^{14} + ..."
std::string poly_latex(const HClass& cls);
std::string poly_latex(const DPoly& f, const std::string& var);
// coefficient list ascending, decimal strings
std::vector<std::string> coeff_strings(const HClass& cls);
std::vector<std::string> coeff_strings(const DPoly& f);
std::vector<std::string> entry_strings(const BiClass& b);

// one CSV record: label,entries...
std::string csv_row(const std::string& label, const std::vector<std::string>& cells);

std::string biclass_plain(const BiClass& b);
std::string biclass_latex(const BiClass& b);

} // namespace detchern
