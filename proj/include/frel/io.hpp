#ifndef FREL_IO_HPP
#define FREL_IO_HPP

#include <string>
#include <vector>

#include "frel/system.hpp"

namespace frel {

/// Wire form of a system, prior to validation.
struct SystemDocument {
  std::string tnorm;
  std::vector<std::vector<double>> a;
  std::vector<double> b;
};

/// Parses {"tnorm": ..., "A": [[...]], "b": [...]}. Unknown keys are
/// rejected, as are missing ones. Throws InvalidInput with the offending
/// entry named in 1-based coordinates.
SystemDocument parse_system_json(const std::string& text);

/// Canonical JSON for a system: keys in the order tnorm, A, b; numbers kept
/// at full precision so parse(serialise(s)) reproduces s exactly.
std::string to_json(const System& s, int indent = 2);

/// Validates a document into a System.
System to_system(const SystemDocument& doc);

/// Reads a matrix from CSV text: one row per line, entries separated by
/// commas. Blank lines are skipped.
std::vector<std::vector<double>> parse_csv_matrix(const std::string& text);

/// Reads a vector from CSV text: either a single line of comma-separated
/// values or one value per line.
std::vector<double> parse_csv_vector(const std::string& text);

/// Shortest decimal form at 10 significant digits, for machine output.
std::string format_number(double v);

}  // namespace frel

#endif  // FREL_IO_HPP
