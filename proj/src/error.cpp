#include "togglelab/error.hpp"

namespace tgl {

const char* errc_name(errc code) {
  switch (code) {
    case errc::bad_parameter: return "BadParameter";
    case errc::empty_diagram: return "EmptyDiagram";
    case errc::bad_character: return "BadCharacter";
    case errc::cap_exceeded: return "CapExceeded";
    case errc::not_an_ideal: return "NotAnIdeal";
    case errc::not_an_antichain: return "NotAnAntichain";
    case errc::not_a_diamond: return "NotADiamond";
    case errc::ambient_mismatch: return "AmbientMismatch";
    case errc::dependent_generators: return "DependentGenerators";
    case errc::not_in_span: return "NotInSpan";
    case errc::conditions_fail: return "ConditionsFail";
    case errc::unknown_family: return "UnknownFamily";
    case errc::bad_diagram: return "BadDiagram";
    case errc::cell_not_in_diagram: return "CellNotInDiagram";
    case errc::predicate_fail: return "PredicateFail";
    case errc::parse_error: return "ParseError";
    case errc::io_error: return "IoError";
  }
  return "UnknownError";
}

} // namespace tgl
