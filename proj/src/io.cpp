#include "frel/io.hpp"

#include <cstdio>
#include <sstream>
#include <string>

#include <json.hpp>

#include "frel/errors.hpp"

namespace frel {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string trimmed(const std::string& s) {
  const auto from = s.find_first_not_of(" \t\r\n");
  if (from == std::string::npos) return "";
  const auto to = s.find_last_not_of(" \t\r\n");
  return s.substr(from, to - from + 1);
}

double parse_cell(const std::string& cell, const std::string& where) {
  const std::string body = trimmed(cell);
  if (body.empty()) throw InvalidInput(where + " is empty");
  size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(body, &used);
  } catch (const std::exception&) {
    throw InvalidInput(where + " = \"" + body + "\" is not a number");
  }
  if (used != body.size()) {
    throw InvalidInput(where + " = \"" + body + "\" is not a number");
  }
  return v;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, sep)) cells.push_back(cell);
  if (!line.empty() && line.back() == sep) cells.push_back("");
  return cells;
}

std::vector<std::string> nonblank_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!trimmed(line).empty()) lines.push_back(line);
  }
  return lines;
}

}  // namespace

SystemDocument parse_system_json(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw InvalidInput(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InvalidInput("top-level JSON value must be an object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "tnorm" && key != "A" && key != "b") {
      throw InvalidInput("unknown key \"" + key + "\" (expected tnorm, A, b)");
    }
  }
  if (!doc.contains("tnorm") || !doc["tnorm"].is_string()) {
    throw InvalidInput("\"tnorm\" must be a string");
  }
  if (!doc.contains("A") || !doc["A"].is_array()) {
    throw InvalidInput("\"A\" must be an array of rows");
  }
  if (!doc.contains("b") || !doc["b"].is_array()) {
    throw InvalidInput("\"b\" must be an array of numbers");
  }

  SystemDocument out;
  out.tnorm = doc["tnorm"].get<std::string>();
  const auto& a = doc["A"];
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_array()) {
      throw InvalidInput("A[" + std::to_string(i + 1) + "] must be an array");
    }
    std::vector<double> row;
    for (size_t j = 0; j < a[i].size(); ++j) {
      if (!a[i][j].is_number()) {
        throw InvalidInput("A[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) +
                           "] is not a number");
      }
      row.push_back(a[i][j].get<double>());
    }
    out.a.push_back(std::move(row));
  }
  const auto& b = doc["b"];
  for (size_t i = 0; i < b.size(); ++i) {
    if (!b[i].is_number()) {
      throw InvalidInput("b[" + std::to_string(i + 1) + "] is not a number");
    }
    out.b.push_back(b[i].get<double>());
  }
  return out;
}

System to_system(const SystemDocument& doc) {
  const TNorm kind = tnorm_from_name(doc.tnorm);
  if (doc.a.empty()) throw InvalidInput("A has no rows");
  return System(kind, UnitMatrix::from_rows(doc.a), doc.b);
}

std::string to_json(const System& s, int indent) {
  ordered_json doc;
  doc["tnorm"] = tnorm_name(s.kind());
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < s.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < s.cols(); ++j) row.push_back(s.matrix().at(i, j));
    rows.push_back(std::move(row));
  }
  doc["A"] = std::move(rows);
  doc["b"] = s.rhs();
  return doc.dump(indent);
}

std::vector<std::vector<double>> parse_csv_matrix(const std::string& text) {
  const std::vector<std::string> lines = nonblank_lines(text);
  if (lines.empty()) throw InvalidInput("CSV matrix is empty");
  std::vector<std::vector<double>> rows;
  for (const std::string& line : lines) {
    std::vector<double> row;
    const std::vector<std::string> cells = split(line, ',');
    for (size_t j = 0; j < cells.size(); ++j) {
      row.push_back(parse_cell(cells[j], "A[" + std::to_string(rows.size() + 1) + "][" +
                                             std::to_string(j + 1) + "]"));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<double> parse_csv_vector(const std::string& text) {
  const std::vector<std::string> lines = nonblank_lines(text);
  if (lines.empty()) throw InvalidInput("CSV vector is empty");
  std::vector<double> out;
  if (lines.size() == 1) {
    const std::vector<std::string> cells = split(lines.front(), ',');
    for (size_t j = 0; j < cells.size(); ++j) {
      out.push_back(parse_cell(cells[j], "b[" + std::to_string(j + 1) + "]"));
    }
  } else {
    for (size_t i = 0; i < lines.size(); ++i) {
      if (split(lines[i], ',').size() != 1) {
        throw InvalidInput("b must be a single CSV row or a single column");
      }
      out.push_back(parse_cell(lines[i], "b[" + std::to_string(i + 1) + "]"));
    }
  }
  return out;
}

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

}  // namespace frel
