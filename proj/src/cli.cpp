#include "frel/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "frel/chebyshev.hpp"
#include "frel/errors.hpp"
#include "frel/io.hpp"
#include "frel/oracle.hpp"
#include "frel/subsystems.hpp"
#include "frel/system.hpp"

namespace frel {
namespace {

using ordered_json = nlohmann::ordered_json;

struct InputSpec {
  std::string file;
  std::vector<std::string> csv;
  std::string tnorm;
};

void add_input_options(CLI::App* sub, InputSpec& in) {
  sub->add_option("file", in.file, "system as a JSON document {\"tnorm\", \"A\", \"b\"}")
      ->check(CLI::ExistingFile);
  sub->add_option("--csv", in.csv,
                  "system as two CSV files: the matrix A and the right-hand side b")
      ->expected(2)
      ->check(CLI::ExistingFile);
  sub->add_option("--tnorm", in.tnorm, "t-norm for --csv input: min, product or lukasiewicz");
  sub->fallthrough();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

System load_system(const InputSpec& in) {
  const bool have_file = !in.file.empty();
  const bool have_csv = !in.csv.empty();
  if (have_file == have_csv) {
    throw InvalidInput("provide a JSON document or --csv A.csv b.csv (exactly one of the two)");
  }
  if (have_file) {
    if (!in.tnorm.empty()) {
      throw InvalidInput("--tnorm only applies to --csv input; the document names its t-norm");
    }
    return to_system(parse_system_json(read_file(in.file)));
  }
  if (in.tnorm.empty()) throw InvalidInput("--csv input needs --tnorm");
  SystemDocument doc;
  doc.tnorm = in.tnorm;
  doc.a = parse_csv_matrix(read_file(in.csv[0]));
  doc.b = parse_csv_vector(read_file(in.csv[1]));
  return to_system(doc);
}

// Machine output keeps ten significant digits.
double round10(double v) { return std::stod(format_number(v)); }

ordered_json machine_vector(const std::vector<double>& v) {
  ordered_json arr = ordered_json::array();
  for (double x : v) arr.push_back(round10(x));
  return arr;
}

// Rows enter 0-based and leave 1-based; all user-visible indices are 1-based.
ordered_json machine_rows(const std::vector<int>& rows) {
  ordered_json arr = ordered_json::array();
  for (int r : rows) arr.push_back(r + 1);
  return arr;
}

std::string text_vector(const std::vector<double>& v) {
  std::string s = "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += format_number(v[i]);
  }
  return s + "]";
}

std::string text_rows(const std::vector<int>& rows) {
  if (rows.empty()) return "none";
  std::string s = "{";
  for (size_t i = 0; i < rows.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(rows[i] + 1);
  }
  return s + "}";
}

void emit(std::ostream& out, const ordered_json& doc) { out << doc.dump(2) << "\n"; }

int cmd_check(const System& s, double eps, const std::string& output, std::ostream& out) {
  const ConsistencyCheck r = check_consistency(s, eps);
  if (output == "machine") {
    ordered_json doc;
    doc["command"] = "check";
    doc["tnorm"] = tnorm_name(s.kind());
    doc["epsilon"] = round10(eps);
    doc["consistent"] = r.consistent;
    doc["greatest"] = machine_vector(r.greatest);
    doc["image"] = machine_vector(r.image);
    emit(out, doc);
  } else {
    out << "t-norm: " << tnorm_name(s.kind()) << "\n";
    out << "consistent: " << (r.consistent ? "yes" : "no") << "\n";
    out << "greatest candidate: " << text_vector(r.greatest) << "\n";
    out << "its image: " << text_vector(r.image) << "\n";
  }
  return r.consistent ? kExitOk : kExitInconsistent;
}

int cmd_distance(const System& s, double eps, bool witness, const std::string& output,
                 std::ostream& out) {
  const ChebyshevReport rep = chebyshev_report(s, eps, witness);
  if (output == "machine") {
    ordered_json doc;
    doc["command"] = "distance";
    doc["tnorm"] = tnorm_name(s.kind());
    doc["epsilon"] = round10(eps);
    doc["delta"] = round10(rep.delta);
    doc["row_defects"] = machine_vector(rep.row_defects);
    doc["zero_defect_rows"] = machine_rows(rep.nc);
    if (rep.witness) {
      ordered_json w;
      w["column"] = machine_rows(rep.witness->argmin_col);
      w["against_row"] = machine_rows(rep.witness->argmax_row);
      ordered_json table = ordered_json::array();
      for (const auto& row : rep.witness->table) table.push_back(machine_vector(row));
      w["table"] = std::move(table);
      doc["witness"] = std::move(w);
    }
    emit(out, doc);
  } else {
    out << "t-norm: " << tnorm_name(s.kind()) << "\n";
    out << "distance: " << format_number(rep.delta) << "\n";
    out << "row defects:\n";
    for (size_t i = 0; i < rep.row_defects.size(); ++i) {
      out << "  row " << (i + 1) << ": " << format_number(rep.row_defects[i]);
      if (rep.witness) {
        out << "  (column " << (rep.witness->argmin_col[i] + 1) << ", worst against row "
            << (rep.witness->argmax_row[i] + 1) << ")";
      }
      out << "\n";
    }
    out << "zero-defect rows: " << text_rows(rep.nc) << "\n";
  }
  return kExitOk;
}

int cmd_approx(const System& s, double eps, const std::string& output, std::ostream& out) {
  const ApproxResult res = greatest_approximation(s, eps);
  if (output == "machine") {
    ordered_json doc;
    doc["command"] = "approx";
    doc["tnorm"] = tnorm_name(s.kind());
    doc["epsilon"] = round10(eps);
    doc["delta"] = round10(res.delta);
    doc["approx"] = machine_vector(res.approx);
    doc["solution"] = machine_vector(res.solution);
    doc["row_defects"] = machine_vector(res.row_defects);
    emit(out, doc);
  } else {
    out << "t-norm: " << tnorm_name(s.kind()) << "\n";
    out << "distance: " << format_number(res.delta) << "\n";
    out << "best right-hand side: " << text_vector(res.approx) << "\n";
    out << "greatest solution: " << text_vector(res.solution) << "\n";
    out << "row defects: " << text_vector(res.row_defects) << "\n";
  }
  return kExitOk;
}

int cmd_mcs(const System& s, double eps, const std::string& output, std::ostream& out) {
  const McsCertificate cert = canonical_mcs(s, eps);
  if (output == "machine") {
    ordered_json doc;
    doc["command"] = "mcs";
    doc["tnorm"] = tnorm_name(s.kind());
    doc["epsilon"] = round10(eps);
    doc["rows"] = machine_rows(cert.nc.rows());
    doc["delta"] = round10(cert.delta_nc);
    ordered_json aug = ordered_json::array();
    for (const AugmentedDefect& a : cert.augmented) {
      ordered_json one;
      one["row"] = a.row + 1;
      one["delta"] = round10(a.delta);
      aug.push_back(std::move(one));
    }
    doc["augmented"] = std::move(aug);
    emit(out, doc);
  } else {
    out << "t-norm: " << tnorm_name(s.kind()) << "\n";
    out << "kept rows: " << text_rows(cert.nc.rows()) << "\n";
    out << "subsystem distance: " << format_number(cert.delta_nc) << "\n";
    if (cert.augmented.empty()) {
      out << "no rows left out; the whole system is consistent\n";
    } else {
      out << "distance after adjoining a left-out row:\n";
      for (const AugmentedDefect& a : cert.augmented) {
        out << "  row " << (a.row + 1) << ": " << format_number(a.delta) << "\n";
      }
    }
  }
  return kExitOk;
}

int cmd_enumerate(const System& s, double eps, const std::string& output, std::ostream& out) {
  const ConsistentFamily fam = enumerate_consistent_maxmin(s, eps);
  const std::vector<IndexSet> maximal = maximal_consistent_maxmin(s, eps);
  if (output == "machine") {
    ordered_json doc;
    doc["command"] = "enumerate";
    doc["tnorm"] = tnorm_name(s.kind());
    doc["epsilon"] = round10(eps);
    doc["count"] = fam.sets.size();
    ordered_json sets = ordered_json::array();
    for (const IndexSet& set : fam.sets) sets.push_back(machine_rows(set.rows()));
    doc["sets"] = std::move(sets);
    doc["stage"] = fam.stage;
    doc["order"] = machine_rows(fam.permutation);
    doc["excluded"] = machine_rows(fam.excluded);
    ordered_json max = ordered_json::array();
    for (const IndexSet& set : maximal) max.push_back(machine_rows(set.rows()));
    doc["maximal"] = std::move(max);
    emit(out, doc);
  } else {
    out << "t-norm: " << tnorm_name(s.kind()) << "\n";
    out << "processing order (ascending right-hand side): " << text_rows(fam.permutation) << "\n";
    out << "excluded rows (unsolvable alone): " << text_rows(fam.excluded) << "\n";
    out << "consistent subsystems (" << fam.sets.size() << "):\n";
    for (size_t t = 0; t < fam.sets.size(); ++t) {
      out << "  " << text_rows(fam.sets[t].rows()) << "  (stage " << fam.stage[t] << ")\n";
    }
    out << "maximal consistent subsystems (" << maximal.size() << "):\n";
    for (const IndexSet& set : maximal) {
      out << "  " << text_rows(set.rows()) << "\n";
    }
  }
  return kExitOk;
}

int cmd_verify(const System& s, double eps, double tolerance, int cap,
               const std::string& output, std::ostream& out) {
  const ChebyshevReport rep = chebyshev_report(s, eps);
  oracle::OracleConfig cfg;
  cfg.max_exhaustive_n = cap;
  const double bis = oracle::bisection_distance(s, cfg);
  const double diff = std::abs(rep.delta - bis);
  const bool dist_ok = diff <= tolerance;

  bool approx_ok = true;
  std::string approx_note = "consistent and at the announced distance";
  try {
    greatest_approximation(s, eps);
  } catch (const InternalCheckFailure& e) {
    approx_ok = false;
    approx_note = e.what();
  }

  std::string enum_status = "skipped";
  std::string enum_note;
  bool enum_ok = true;
  if (s.kind() != TNorm::Min) {
    enum_note = "min systems only";
  } else if (s.rows() > cap) {
    enum_note = "more than " + std::to_string(cap) + " rows";
  } else {
    const ConsistentFamily fam = enumerate_consistent_maxmin(s, eps);
    std::vector<IndexSet> got = fam.sets;
    std::sort(got.begin(), got.end());
    std::vector<IndexSet> want = oracle::enumerate_all(s, cfg);
    std::sort(want.begin(), want.end());
    const std::vector<IndexSet> got_max = maximal_consistent_maxmin(s, eps);
    const std::vector<IndexSet> want_max = oracle::maximal_of(want);
    enum_ok = (got == want) && (got_max == want_max);
    enum_status = enum_ok ? "ok" : "mismatch";
    enum_note = std::to_string(got.size()) + " sets, " + std::to_string(got_max.size()) +
                " maximal";
  }

  const bool ok = dist_ok && approx_ok && enum_ok;
  if (output == "machine") {
    ordered_json doc;
    doc["command"] = "verify";
    doc["tnorm"] = tnorm_name(s.kind());
    doc["epsilon"] = round10(eps);
    doc["analytic"] = round10(rep.delta);
    doc["bisection"] = round10(bis);
    doc["difference"] = round10(diff);
    doc["tolerance"] = round10(tolerance);
    doc["distance_ok"] = dist_ok;
    doc["approximation_ok"] = approx_ok;
    doc["enumeration"] = enum_status;
    doc["ok"] = ok;
    emit(out, doc);
  } else {
    out << "t-norm: " << tnorm_name(s.kind()) << "\n";
    out << "analytic distance: " << format_number(rep.delta) << "\n";
    out << "bisection distance: " << format_number(bis) << "\n";
    out << "difference: " << format_number(diff) << " (tolerance " << format_number(tolerance)
        << "): " << (dist_ok ? "ok" : "MISMATCH") << "\n";
    out << "best approximation: " << (approx_ok ? "ok, " : "FAILED, ") << approx_note << "\n";
    if (enum_status == "skipped") {
      out << "enumeration: skipped (" << enum_note << ")\n";
    } else {
      out << "enumeration vs exhaustive oracle: " << (enum_ok ? "ok" : "MISMATCH") << " ("
          << enum_note << ")\n";
    }
    out << "verdict: " << (ok ? "ok" : "FAILED") << "\n";
  }
  return ok ? kExitOk : kExitInconsistent;
}

}  // namespace

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Solves and diagnoses systems of relational equations under max-t-norm composition"};
  app.require_subcommand(1);

  double epsilon = kDefaultEpsilon;
  app.add_option("--epsilon", epsilon, "tolerance for zero tests and consistency decisions")
      ->envname("FREL_EPSILON")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  std::string output = "text";
  app.add_option("--output", output, "output form")
      ->check(CLI::IsMember({"text", "machine"}))
      ->capture_default_str();

  InputSpec in_check, in_distance, in_approx, in_mcs, in_enum, in_verify;
  bool witness = false;
  double tolerance = 1e-6;
  int cap = 12;

  CLI::App* c_check = app.add_subcommand(
      "check", "Decide consistency and report the greatest candidate solution");
  add_input_options(c_check, in_check);

  CLI::App* c_distance = app.add_subcommand(
      "distance", "Chebyshev distance from b to the nearest consistent right-hand side");
  add_input_options(c_distance, in_distance);
  c_distance->add_flag("--witness", witness, "report which column and row realise each defect");

  CLI::App* c_approx = app.add_subcommand(
      "approx", "Greatest right-hand side among the Chebyshev-best consistent ones");
  add_input_options(c_approx, in_approx);

  CLI::App* c_mcs = app.add_subcommand(
      "mcs", "Canonical maximal consistent subsystem (the zero-defect rows)");
  add_input_options(c_mcs, in_mcs);

  CLI::App* c_enum = app.add_subcommand(
      "enumerate", "All consistent subsystems of a min system, plus the maximal ones");
  add_input_options(c_enum, in_enum);

  CLI::App* c_verify = app.add_subcommand(
      "verify", "Cross-check the closed-form results against slow reference oracles");
  add_input_options(c_verify, in_verify);
  c_verify->add_option("--tolerance", tolerance,
                       "allowed gap between analytic and bisected distances")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  c_verify->add_option("--max-exhaustive", cap,
                       "largest row count fed to the exhaustive subset oracle")
      ->check(CLI::Range(1, 20))
      ->capture_default_str();

  try {
    std::vector<std::string> rev(args.begin(), args.end());
    std::reverse(rev.begin(), rev.end());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (c_check->parsed()) return cmd_check(load_system(in_check), epsilon, output, out);
    if (c_distance->parsed())
      return cmd_distance(load_system(in_distance), epsilon, witness, output, out);
    if (c_approx->parsed()) return cmd_approx(load_system(in_approx), epsilon, output, out);
    if (c_mcs->parsed()) return cmd_mcs(load_system(in_mcs), epsilon, output, out);
    if (c_enum->parsed()) return cmd_enumerate(load_system(in_enum), epsilon, output, out);
    if (c_verify->parsed())
      return cmd_verify(load_system(in_verify), epsilon, tolerance, cap, output, out);
  } catch (const NoSolvableEquation& e) {
    err << "error: " << e.what() << "\n";
    return kExitNoSolvable;
  } catch (const UnsupportedTNorm& e) {
    err << "error: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const InternalCheckFailure& e) {
    err << "error: " << e.what() << "\n";
    return kExitInconsistent;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  err << "error: no command selected\n";
  return kExitInputError;
}

}  // namespace frel
