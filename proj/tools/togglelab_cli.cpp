// Command-line front end for the togglelab shared library. Every command is a
// thin adapter over the C API: inputs are parsed here, all mathematics
// happens behind togglelab.h, and the JSON payloads returned by the library
// are rendered as-is (json), as RFC 4180 CSV, or as an aligned table.
//
// Exit codes: 0 = success / all checks pass, 1 = usage or mathematical
// failure, 2 = enumeration cap exceeded.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "togglelab.h"

namespace {

using nlohmann::json;

constexpr uint64_t kDefaultSeed = 7;

struct DiagramDeleter {
  void operator()(tgl_diagram* d) const { tgl_diagram_free(d); }
};
using DiagramHandle = std::unique_ptr<tgl_diagram, DiagramDeleter>;

struct StringDeleter {
  void operator()(char* s) const { tgl_string_free(s); }
};
using ApiString = std::unique_ptr<char, StringDeleter>;

int exit_code_for(tgl_status status) {
  return status == TGL_ERR_CAP_EXCEEDED ? 2 : 1;
}

[[noreturn]] void die(tgl_status status) {
  std::cerr << "togglelab: error (" << tgl_status_name(status)
            << "): " << tgl_last_error() << "\n";
  std::exit(exit_code_for(status));
}

[[noreturn]] void die_usage(const std::string& message) {
  std::cerr << "togglelab: " << message << "\n";
  std::exit(1);
}

struct SourceOptions {
  std::string family;
  int m = 0;
  int n = 0;
  std::string partition;
  std::string diagram_path;

  void add_to(CLI::App& cmd) {
    cmd.add_option("--family", family, "named family: rect|staircase|typeA|typeB");
    cmd.add_option("--m", m, "rows (rectangles)");
    cmd.add_option("--n", n, "columns / family size parameter");
    cmd.add_option("--partition", partition, "partition parts, e.g. 5,2,1,1");
    cmd.add_option("--diagram", diagram_path,
                   "diagram file ('#'/'.' text or {\"cells\": ...} JSON)");
  }

  DiagramHandle open() const {
    const int sources = (!family.empty() ? 1 : 0) +
                        (!partition.empty() ? 1 : 0) +
                        (!diagram_path.empty() ? 1 : 0);
    if (sources != 1)
      die_usage("exactly one of --family, --partition, --diagram is required");

    tgl_diagram* handle = nullptr;
    tgl_status status = TGL_OK;
    if (!family.empty()) {
      status = tgl_diagram_from_family(family.c_str(), m, n, &handle);
    } else if (!partition.empty()) {
      std::vector<int> parts;
      std::stringstream in(partition);
      std::string piece;
      while (std::getline(in, piece, ',')) {
        try {
          parts.push_back(std::stoi(piece));
        } catch (const std::exception&) {
          die_usage("bad partition part: " + piece);
        }
      }
      status = tgl_diagram_from_partition(parts.data(),
                                          static_cast<int>(parts.size()),
                                          &handle);
    } else {
      std::ifstream in(diagram_path);
      if (!in)
        die_usage("cannot open diagram file: " + diagram_path);
      std::stringstream content;
      content << in.rdbuf();
      const std::string text = content.str();
      const std::size_t first = text.find_first_not_of(" \t\r\n");
      if (first != std::string::npos && text[first] == '{')
        status = tgl_diagram_from_json(text.c_str(), &handle);
      else
        status = tgl_diagram_from_text(text.c_str(), &handle);
    }
    if (status != TGL_OK)
      die(status);
    return DiagramHandle(handle);
  }
};

struct OutputOptions {
  std::string format = "table";
  std::string out_path;

  void add_to(CLI::App& cmd) {
    cmd.add_option("--format", format, "output format: json|csv|table")
        ->check(CLI::IsMember({"json", "csv", "table"}));
    cmd.add_option("--out", out_path, "write output to a file");
  }
};

uint64_t cap_from_env() {
  if (const char* env = std::getenv("TOGGLELAB_CAP")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      die_usage(std::string("bad TOGGLELAB_CAP value: ") + env);
    }
  }
  return 0; // library default
}

// ---------------------------------------------------------------------------
// Rendering

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos)
    return field;
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"')
      quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string scalar_text(const json& value) {
  if (value.is_null())
    return "";
  if (value.is_string())
    return value.get<std::string>();
  if (value.is_boolean())
    return value.get<bool>() ? "true" : "false";
  return value.dump();
}

std::vector<std::string> ordered_keys(const std::vector<json>& rows) {
  static const std::vector<std::string> preferred = {
      "family",  "params", "num_elements", "num_ideals", "rank",
      "dim_IT",  "dim_AT", "predicted",    "pass"};
  std::vector<std::string> keys;
  const auto seen = [&keys](const std::string& k) {
    for (const auto& existing : keys)
      if (existing == k)
        return true;
    return false;
  };
  for (const auto& k : preferred)
    for (const auto& row : rows)
      if (row.contains(k) && !seen(k)) {
        keys.push_back(k);
        break;
      }
  for (const auto& row : rows)
    for (const auto& [k, v] : row.items())
      if (!seen(k))
        keys.push_back(k);
  return keys;
}

std::string render_rows(const std::vector<json>& rows, const std::string& format) {
  const std::vector<std::string> keys = ordered_keys(rows);
  std::ostringstream out;
  if (format == "csv") {
    for (std::size_t i = 0; i < keys.size(); ++i)
      out << (i ? "," : "") << csv_quote(keys[i]);
    out << "\r\n";
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < keys.size(); ++i)
        out << (i ? "," : "")
            << csv_quote(row.contains(keys[i]) ? scalar_text(row[keys[i]]) : "");
      out << "\r\n";
    }
    return out.str();
  }
  // table
  std::vector<std::size_t> width(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i) {
    width[i] = keys[i].size();
    for (const auto& row : rows) {
      const std::string text =
          row.contains(keys[i]) ? scalar_text(row[keys[i]]) : "-";
      width[i] = std::max(width[i], text.size());
    }
  }
  const auto pad = [&out](const std::string& text, std::size_t w, bool last) {
    out << text;
    if (!last)
      out << std::string(w - text.size() + 2, ' ');
  };
  for (std::size_t i = 0; i < keys.size(); ++i)
    pad(keys[i], width[i], i + 1 == keys.size());
  out << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < keys.size(); ++i) {
      const std::string text =
          row.contains(keys[i]) ? scalar_text(row[keys[i]]) : "-";
      pad(text, width[i], i + 1 == keys.size());
    }
    out << "\n";
  }
  return out.str();
}

void emit(const std::string& payload, const OutputOptions& output) {
  if (output.out_path.empty()) {
    std::cout << payload;
    if (!payload.empty() && payload.back() != '\n')
      std::cout << "\n";
    return;
  }
  std::ofstream out(output.out_path, std::ios::binary);
  if (!out)
    die_usage("cannot write: " + output.out_path);
  out << payload;
}

/// Renders a library JSON payload. Objects holding a "rows" array become row
/// tables; single flat objects become one-row tables; anything else falls
/// back to the raw JSON.
void emit_report(const std::string& report_json, const OutputOptions& output) {
  if (output.format == "json") {
    emit(report_json, output);
    return;
  }
  const json parsed = json::parse(report_json);
  std::vector<json> rows;
  if (parsed.is_object() && parsed.contains("rows") &&
      parsed["rows"].is_array()) {
    for (const auto& row : parsed["rows"])
      rows.push_back(row);
  } else if (parsed.is_object()) {
    bool flat = true;
    for (const auto& [k, v] : parsed.items())
      if (v.is_object() || (v.is_array() && k != "cell"))
        flat = false;
    if (!flat) {
      emit(parsed.dump(2), output);
      return;
    }
    rows.push_back(parsed);
  } else {
    emit(report_json, output);
    return;
  }
  emit(render_rows(rows, output.format), output);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toggleability-space laboratory for diagram posets"};
  app.require_subcommand(1);

  uint64_t cap = cap_from_env();

  // dims ---------------------------------------------------------------
  auto* dims = app.add_subcommand(
      "dims", "rank and toggleability-space dimensions of one poset");
  SourceOptions dims_source;
  OutputOptions dims_output;
  dims_source.add_to(*dims);
  dims_output.add_to(*dims);
  dims->add_option("--cap", cap, "maximum number of order ideals");

  // verify -------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite = "main";
  int max_n = 0;
  int trials = 0;
  uint64_t seed = kDefaultSeed;
  OutputOptions verify_output;
  verify->add_option("--suite", suite,
                     "main|bases|partitions|rooks|homomesy|determinant|"
                     "constraints|all");
  verify->add_option("--max", max_n, "family sweep bound (suite default if 0)");
  verify->add_option("--trials", trials, "random diagrams for the rooks suite");
  verify->add_option("--seed", seed, "random seed (fixed default)");
  verify->add_option("--cap", cap, "maximum number of order ideals");
  verify_output.add_to(*verify);

  // orbits -------------------------------------------------------------
  auto* orbits_cmd =
      app.add_subcommand("orbits", "rowmotion orbit structure of J(P)");
  SourceOptions orbits_source;
  OutputOptions orbits_output;
  bool include_cycles = false;
  orbits_source.add_to(*orbits_cmd);
  orbits_output.add_to(*orbits_cmd);
  orbits_cmd->add_flag("--cycles", include_cycles,
                       "include the full cycles as element lists");
  orbits_cmd->add_option("--cap", cap, "maximum number of order ideals");

  // basis --------------------------------------------------------------
  auto* basis = app.add_subcommand(
      "basis", "published bases of the order-ideal toggleability space");
  std::string basis_family;
  int basis_m = 0, basis_n = 0;
  std::string which = "both";
  bool include_vectors = false;
  OutputOptions basis_output;
  basis->add_option("--family", basis_family, "rect|staircase|typeA|typeB")
      ->required();
  basis->add_option("--m", basis_m, "rows (rectangles)");
  basis->add_option("--n", basis_n, "family size parameter");
  basis->add_option("--which", which, "B1|B2|both")
      ->check(CLI::IsMember({"B1", "B2", "both"}));
  basis->add_flag("--vectors", include_vectors,
                  "include the lattice vector of each statistic");
  basis->add_option("--cap", cap, "maximum number of order ideals");
  basis_output.add_to(*basis);

  // rook ---------------------------------------------------------------
  auto* rook = app.add_subcommand(
      "rook", "rook and reduced rook statistics anchored at a cell");
  SourceOptions rook_source;
  OutputOptions rook_output;
  std::string cell_text;
  rook_source.add_to(*rook);
  rook_output.add_to(*rook);
  rook->add_option("--cell", cell_text, "anchor cell as i,j")->required();
  rook->add_option("--cap", cap, "maximum number of order ideals");

  CLI11_PARSE(app, argc, argv);

  if (dims->parsed()) {
    DiagramHandle d = dims_source.open();
    char* out = nullptr;
    if (tgl_status status = tgl_dims_json(d.get(), cap, &out))
      die(status);
    ApiString payload(out);
    emit_report(payload.get(), dims_output);
    const json row = json::parse(std::string(payload.get()));
    return row["pass"].is_boolean() && !row["pass"].get<bool>() ? 1 : 0;
  }

  if (verify->parsed()) {
    char* out = nullptr;
    if (tgl_status status =
            tgl_verify_json(suite.c_str(), max_n, trials, seed, cap, &out))
      die(status);
    ApiString payload(out);
    emit_report(payload.get(), verify_output);
    return json::parse(std::string(payload.get()))["pass"].get<bool>() ? 0 : 1;
  }

  if (orbits_cmd->parsed()) {
    DiagramHandle d = orbits_source.open();
    char* out = nullptr;
    if (tgl_status status =
            tgl_orbits_json(d.get(), cap, include_cycles ? 1 : 0, &out))
      die(status);
    ApiString payload(out);
    if (orbits_output.format == "json")
      emit(payload.get(), orbits_output);
    else
      emit(json::parse(std::string(payload.get())).dump(2), orbits_output);
    return 0;
  }

  if (basis->parsed()) {
    char* out = nullptr;
    if (tgl_status status =
            tgl_basis_json(basis_family.c_str(), basis_m, basis_n,
                           which.c_str(), include_vectors ? 1 : 0, cap, &out))
      die(status);
    ApiString payload(out);
    if (basis_output.format == "json")
      emit(payload.get(), basis_output);
    else
      emit(json::parse(std::string(payload.get())).dump(2), basis_output);
    return 0;
  }

  if (rook->parsed()) {
    int row = 0, col = 0;
    if (std::sscanf(cell_text.c_str(), "%d,%d", &row, &col) != 2)
      die_usage("--cell expects i,j");
    DiagramHandle d = rook_source.open();
    char* out = nullptr;
    if (tgl_status status = tgl_rook_json(d.get(), row, col, cap, &out))
      die(status);
    ApiString payload(out);
    if (rook_output.format == "json")
      emit(payload.get(), rook_output);
    else
      emit(json::parse(std::string(payload.get())).dump(2), rook_output);
    return 0;
  }

  return 0;
}
