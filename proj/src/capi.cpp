#include "togglelab.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "togglelab/error.hpp"
#include "togglelab/json_io.hpp"

struct tgl_diagram {
  tgl::InstanceSpec spec;
};

namespace {

thread_local std::string g_last_error;

tgl_status status_of(tgl::errc code) {
  using tgl::errc;
  switch (code) {
    case errc::bad_parameter: return TGL_ERR_BAD_PARAMETER;
    case errc::empty_diagram: return TGL_ERR_EMPTY_DIAGRAM;
    case errc::bad_character: return TGL_ERR_BAD_CHARACTER;
    case errc::cap_exceeded: return TGL_ERR_CAP_EXCEEDED;
    case errc::not_an_ideal: return TGL_ERR_NOT_AN_IDEAL;
    case errc::not_an_antichain: return TGL_ERR_NOT_AN_ANTICHAIN;
    case errc::not_a_diamond: return TGL_ERR_NOT_A_DIAMOND;
    case errc::ambient_mismatch: return TGL_ERR_AMBIENT_MISMATCH;
    case errc::dependent_generators: return TGL_ERR_DEPENDENT_GENERATORS;
    case errc::not_in_span: return TGL_ERR_NOT_IN_SPAN;
    case errc::conditions_fail: return TGL_ERR_CONDITIONS_FAIL;
    case errc::unknown_family: return TGL_ERR_UNKNOWN_FAMILY;
    case errc::bad_diagram: return TGL_ERR_BAD_DIAGRAM;
    case errc::cell_not_in_diagram: return TGL_ERR_CELL_NOT_IN_DIAGRAM;
    case errc::predicate_fail: return TGL_ERR_PREDICATE_FAIL;
    case errc::parse_error: return TGL_ERR_PARSE;
    case errc::io_error: return TGL_ERR_IO;
  }
  return TGL_ERR_INTERNAL;
}

template <typename Fn>
tgl_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return TGL_OK;
  } catch (const tgl::error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return TGL_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return TGL_ERR_INTERNAL;
  }
}

char* copy_out(const std::string& text) {
  char* buffer = static_cast<char*>(std::malloc(text.size() + 1));
  std::memcpy(buffer, text.c_str(), text.size() + 1);
  return buffer;
}

tgl_status require(bool ok, const char* message) {
  if (ok)
    return TGL_OK;
  g_last_error = message;
  return TGL_ERR_BAD_PARAMETER;
}

tgl::EnumerationCaps caps_for(uint64_t ideal_cap) {
  tgl::EnumerationCaps caps;
  if (ideal_cap > 0)
    caps.max_ideals = ideal_cap;
  return caps;
}

} // namespace

extern "C" {

const char* tgl_version(void) { return "0.1.0"; }

const char* tgl_status_name(tgl_status status) {
  switch (status) {
    case TGL_OK: return "Ok";
    case TGL_ERR_BAD_PARAMETER: return "BadParameter";
    case TGL_ERR_EMPTY_DIAGRAM: return "EmptyDiagram";
    case TGL_ERR_BAD_CHARACTER: return "BadCharacter";
    case TGL_ERR_CAP_EXCEEDED: return "CapExceeded";
    case TGL_ERR_NOT_AN_IDEAL: return "NotAnIdeal";
    case TGL_ERR_NOT_AN_ANTICHAIN: return "NotAnAntichain";
    case TGL_ERR_NOT_A_DIAMOND: return "NotADiamond";
    case TGL_ERR_AMBIENT_MISMATCH: return "AmbientMismatch";
    case TGL_ERR_DEPENDENT_GENERATORS: return "DependentGenerators";
    case TGL_ERR_NOT_IN_SPAN: return "NotInSpan";
    case TGL_ERR_CONDITIONS_FAIL: return "ConditionsFail";
    case TGL_ERR_UNKNOWN_FAMILY: return "UnknownFamily";
    case TGL_ERR_BAD_DIAGRAM: return "BadDiagram";
    case TGL_ERR_CELL_NOT_IN_DIAGRAM: return "CellNotInDiagram";
    case TGL_ERR_PREDICATE_FAIL: return "PredicateFail";
    case TGL_ERR_PARSE: return "ParseError";
    case TGL_ERR_IO: return "IoError";
    case TGL_ERR_INTERNAL: return "InternalError";
  }
  return "UnknownStatus";
}

const char* tgl_last_error(void) { return g_last_error.c_str(); }

void tgl_string_free(char* s) { std::free(s); }

void tgl_diagram_free(tgl_diagram* d) { delete d; }

tgl_status tgl_diagram_from_text(const char* text, tgl_diagram** out) {
  if (tgl_status bad = require(text && out, "null argument"))
    return bad;
  return guarded([&] {
    *out = new tgl_diagram{
        tgl::InstanceSpec::raw_diagram(tgl::Diagram::from_text(text))};
  });
}

tgl_status tgl_diagram_from_json(const char* json, tgl_diagram** out) {
  if (tgl_status bad = require(json && out, "null argument"))
    return bad;
  return guarded([&] {
    *out = new tgl_diagram{
        tgl::InstanceSpec::raw_diagram(tgl::Diagram::from_json(json))};
  });
}

tgl_status tgl_diagram_from_family(const char* family, int m, int n,
                                   tgl_diagram** out) {
  if (tgl_status bad = require(family && out, "null argument"))
    return bad;
  return guarded([&] {
    const tgl::Family f = tgl::parse_family(family);
    *out = new tgl_diagram{tgl::InstanceSpec::family(f, m, n)};
  });
}

tgl_status tgl_diagram_from_partition(const int* parts, int count,
                                      tgl_diagram** out) {
  if (tgl_status bad =
          require(parts && out && count > 0, "need at least one part"))
    return bad;
  return guarded([&] {
    *out = new tgl_diagram{tgl::InstanceSpec::partition(
        tgl::Partition(std::vector<int>(parts, parts + count)))};
  });
}

int tgl_diagram_cell_count(const tgl_diagram* d) {
  return d ? static_cast<int>(d->spec.diagram().size()) : 0;
}

tgl_status tgl_diagram_to_json(const tgl_diagram* d, char** out) {
  if (tgl_status bad = require(d && out, "null argument"))
    return bad;
  return guarded([&] { *out = copy_out(d->spec.diagram().to_json()); });
}

tgl_status tgl_diagram_to_text(const tgl_diagram* d, char** out) {
  if (tgl_status bad = require(d && out, "null argument"))
    return bad;
  return guarded([&] { *out = copy_out(d->spec.diagram().to_text()); });
}

tgl_status tgl_predicates_json(const tgl_diagram* d, char** out) {
  if (tgl_status bad = require(d && out, "null argument"))
    return bad;
  return guarded([&] {
    *out = copy_out(tgl::predicates_to_json(tgl::predicates(d->spec.diagram())));
  });
}

tgl_status tgl_poset_json(const tgl_diagram* d, char** out) {
  if (tgl_status bad = require(d && out, "null argument"))
    return bad;
  return guarded([&] {
    *out = copy_out(tgl::Poset::from_diagram(d->spec.diagram()).to_json());
  });
}

tgl_status tgl_dims_json(const tgl_diagram* d, uint64_t ideal_cap, char** out) {
  if (tgl_status bad = require(d && out, "null argument"))
    return bad;
  return guarded([&] {
    const tgl::VerifyRow row =
        tgl::verify_instance(d->spec, caps_for(ideal_cap));
    *out = copy_out(tgl::dims_report_json(row));
  });
}

tgl_status tgl_orbits_json(const tgl_diagram* d, uint64_t ideal_cap,
                           int include_cycles, char** out) {
  if (tgl_status bad = require(d && out, "null argument"))
    return bad;
  return guarded([&] {
    const tgl::IdealLattice lattice = tgl::enumerate_ideals(
        tgl::Poset::from_diagram(d->spec.diagram()), caps_for(ideal_cap));
    *out = copy_out(tgl::orbit_report_json(lattice, include_cycles != 0));
  });
}

tgl_status tgl_basis_json(const char* family, int m, int n, const char* which,
                          int include_vectors, uint64_t ideal_cap, char** out) {
  if (tgl_status bad = require(family && which && out, "null argument"))
    return bad;
  return guarded([&] {
    *out = copy_out(tgl::basis_report_json(tgl::parse_family(family), m, n,
                                           which, include_vectors != 0,
                                           caps_for(ideal_cap)));
  });
}

tgl_status tgl_rook_json(const tgl_diagram* d, int row, int col,
                         uint64_t ideal_cap, char** out) {
  if (tgl_status bad = require(d && out, "null argument"))
    return bad;
  return guarded([&] {
    *out = copy_out(tgl::rook_report_json(d->spec.diagram(), {row, col},
                                          caps_for(ideal_cap)));
  });
}

tgl_status tgl_verify_json(const char* suite, int max_n, int trials,
                           uint64_t seed, uint64_t ideal_cap, char** out) {
  if (tgl_status bad = require(suite && out, "null argument"))
    return bad;
  return guarded([&] {
    const tgl::SuiteResult result =
        tgl::run_suite(suite, max_n, trials, seed, caps_for(ideal_cap));
    *out = copy_out(tgl::suite_report_json(result));
  });
}

} // extern "C"
