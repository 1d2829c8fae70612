#pragma once

#include <string>

namespace stefan {

// Canonical numeric formats for CSV output: 12 significant digits in
// scientific notation for data values, fixed 4 decimals for table cells.
// Output is locale-independent and byte-deterministic.
std::string format_sci(double v);   // e.g. 1.23456789012e-01
std::string format_table(double v); // e.g. 0.0990
std::string format_short(double v); // shortest round-trip form, for labels

} // namespace stefan
