#include "togglelab/statistic.hpp"

#include <nlohmann/json.hpp>

#include "togglelab/error.hpp"

namespace tgl {

using nlohmann::json;

const char* gen_kind_name(GenKind k) {
  switch (k) {
    case GenKind::constant: return "const";
    case GenKind::ideal_indicator: return "ind";
    case GenKind::antichain_indicator: return "aminus";
    case GenKind::toggle_in: return "aplus";
    case GenKind::toggle: return "tog";
  }
  return "?";
}

Statistic Statistic::constant(Rational c) {
  Statistic s;
  s.add_term(GenKind::constant, 0, c);
  return s;
}

Statistic Statistic::generator(GenKind kind, int element) {
  Statistic s;
  s.add_term(kind, element, Rational(1));
  return s;
}

Statistic Statistic::indicator(int element) {
  return generator(GenKind::ideal_indicator, element);
}
Statistic Statistic::antichain_indicator(int element) {
  return generator(GenKind::antichain_indicator, element);
}
Statistic Statistic::toggle_in(int element) {
  return generator(GenKind::toggle_in, element);
}
Statistic Statistic::toggle(int element) {
  return generator(GenKind::toggle, element);
}

Statistic& Statistic::add_term(GenKind kind, int element,
                               const Rational& coeff) {
  if (kind == GenKind::constant)
    element = 0;
  if (element < 0 || element > 0xff) // 8 bits in the interned key
    fail(errc::bad_parameter, "generator element out of range");
  Rational canonical = coeff;
  canonical.canonicalize();
  const GenKey key = gen_key(kind, element);
  auto [it, fresh] = terms_.try_emplace(key, canonical);
  if (!fresh) {
    it->second += coeff;
    if (it->second == 0)
      terms_.erase(it);
    return *this;
  }
  if (it->second == 0)
    terms_.erase(it);
  return *this;
}

Rational Statistic::coefficient(GenKind kind, int element) const {
  const auto it = terms_.find(gen_key(kind, element));
  return it == terms_.end() ? Rational(0) : it->second;
}

Statistic& Statistic::operator+=(const Statistic& other) {
  for (const auto& [key, coeff] : other.terms_)
    add_term(key_kind(key), key_element(key), coeff);
  return *this;
}

Statistic& Statistic::operator-=(const Statistic& other) {
  for (const auto& [key, coeff] : other.terms_) {
    Rational negated = -coeff;
    add_term(key_kind(key), key_element(key), negated);
  }
  return *this;
}

Statistic& Statistic::operator*=(const Rational& scale) {
  Rational factor = scale;
  factor.canonicalize();
  if (factor == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, coeff] : terms_)
    coeff *= factor;
  return *this;
}

int generator_value(const Poset& p, GenKind kind, int element,
                    IdealMask ideal) {
  switch (kind) {
    case GenKind::constant:
      return 1;
    case GenKind::ideal_indicator:
      return (ideal >> element) & 1u ? 1 : 0;
    case GenKind::antichain_indicator:
      // p in Max(I): in I and no upper cover in I.
      return (((ideal >> element) & 1u) &&
              !(p.upper_cover_mask(element) & ideal))
                 ? 1
                 : 0;
    case GenKind::toggle_in:
      // p in Min(P \ I): outside I with every lower cover inside.
      return (!((ideal >> element) & 1u) &&
              !(p.lower_cover_mask(element) & ~ideal))
                 ? 1
                 : 0;
    case GenKind::toggle:
      return generator_value(p, GenKind::toggle_in, element, ideal) -
             generator_value(p, GenKind::antichain_indicator, element, ideal);
  }
  return 0;
}

Rational evaluate(const Poset& p, const Statistic& f, IdealMask ideal) {
  if (!is_ideal(p, ideal))
    fail(errc::not_an_ideal, "statistics are evaluated on order ideals only");
  Rational total(0);
  for (const auto& [key, coeff] : f.terms()) {
    const int element = key_element(key);
    if (key_kind(key) != GenKind::constant && element >= p.size())
      fail(errc::bad_parameter, "generator element outside the poset");
    const int value = generator_value(p, key_kind(key), element, ideal);
    if (value == 1)
      total += coeff;
    else if (value == -1)
      total -= coeff;
  }
  return total;
}

QVector as_vector(const IdealLattice& lattice, const Statistic& f) {
  QVector v;
  v.reserve(lattice.size());
  for (std::size_t k = 0; k < lattice.size(); ++k)
    v.push_back(evaluate(lattice.poset(), f, lattice.ideal(k)));
  return v;
}

bool is_d_mesic(const IdealLattice& lattice, const Statistic& f,
                const Rational& d) {
  for (const auto& orbit : orbits(lattice)) {
    Rational total(0);
    for (std::size_t k : orbit)
      total += evaluate(lattice.poset(), f, lattice.ideal(k));
    if (total != d * Rational(static_cast<long>(orbit.size())))
      return false;
  }
  return true;
}

std::string statistic_to_json(const Statistic& f) {
  json out;
  out["const"] = to_string(f.coefficient(GenKind::constant, 0));
  for (GenKind kind :
       {GenKind::ideal_indicator, GenKind::antichain_indicator,
        GenKind::toggle_in, GenKind::toggle}) {
    json section = json::object();
    for (const auto& [key, coeff] : f.terms())
      if (key_kind(key) == kind)
        section[std::to_string(key_element(key))] = to_string(coeff);
    out[gen_kind_name(kind)] = section;
  }
  return out.dump();
}

Statistic statistic_from_json(const std::string& json_text) {
  json parsed;
  try {
    parsed = json::parse(json_text);
  } catch (const json::exception& e) {
    fail(errc::parse_error, std::string("bad statistic JSON: ") + e.what());
  }
  if (!parsed.is_object())
    fail(errc::parse_error, "statistic JSON must be an object");

  Statistic f;
  if (parsed.contains("const"))
    f.add_term(GenKind::constant, 0,
               rational_from_string(parsed["const"].get<std::string>()));
  const std::pair<const char*, GenKind> sections[] = {
      {"ind", GenKind::ideal_indicator},
      {"aminus", GenKind::antichain_indicator},
      {"aplus", GenKind::toggle_in},
      {"tog", GenKind::toggle},
  };
  for (const auto& [name, kind] : sections) {
    if (!parsed.contains(name))
      continue;
    if (!parsed[name].is_object())
      fail(errc::parse_error, std::string("statistic section ") + name +
                                  " must be an object");
    for (const auto& [element_text, coeff] : parsed[name].items()) {
      int element = 0;
      try {
        element = std::stoi(element_text);
      } catch (const std::exception&) {
        fail(errc::parse_error, "bad element key: " + element_text);
      }
      f.add_term(kind, element,
                 rational_from_string(coeff.get<std::string>()));
    }
  }
  return f;
}

} // namespace tgl
