#ifndef TOGGLELAB_STATISTIC_HPP
#define TOGGLELAB_STATISTIC_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "togglelab/lattice.hpp"
#include "togglelab/rational.hpp"

namespace tgl {

/// The five generator families of statistics on J(P):
///   constant            1 on every ideal
///   ideal_indicator     1 iff p is in I
///   antichain_indicator 1 iff p is in Max(I)        (toggle-out side)
///   toggle_in           1 iff p is in Min(P \ I)    (addable side)
///   toggle              toggle_in - antichain_indicator
enum class GenKind : std::uint8_t {
  constant = 0,
  ideal_indicator,
  antichain_indicator,
  toggle_in,
  toggle,
};

const char* gen_kind_name(GenKind k);

/// Generators are interned as small integer keys: (kind << 8) | element.
using GenKey = std::uint32_t;

constexpr GenKey gen_key(GenKind kind, int element) {
  return (static_cast<GenKey>(kind) << 8) | static_cast<GenKey>(element);
}
constexpr GenKind key_kind(GenKey k) { return static_cast<GenKind>(k >> 8); }
constexpr int key_element(GenKey k) { return static_cast<int>(k & 0xff); }

/// An exact-rational linear combination of generators. Zero coefficients are
/// never stored. Value type; the algebra is closed under + , - and scaling.
class Statistic {
public:
  Statistic() = default;

  static Statistic constant(Rational c);
  static Statistic generator(GenKind kind, int element);
  static Statistic indicator(int element);
  static Statistic antichain_indicator(int element);
  static Statistic toggle_in(int element);
  static Statistic toggle(int element);

  Statistic& add_term(GenKind kind, int element, const Rational& coeff);

  const std::map<GenKey, Rational>& terms() const { return terms_; }
  Rational coefficient(GenKind kind, int element) const;
  bool is_zero() const { return terms_.empty(); }

  Statistic& operator+=(const Statistic& other);
  Statistic& operator-=(const Statistic& other);
  Statistic& operator*=(const Rational& scale);

  friend Statistic operator+(Statistic a, const Statistic& b) { return a += b; }
  friend Statistic operator-(Statistic a, const Statistic& b) { return a -= b; }
  friend Statistic operator*(const Rational& c, Statistic s) { return s *= c; }
  friend Statistic operator-(Statistic a) { return a *= Rational(-1); }

  friend bool operator==(const Statistic&, const Statistic&) = default;

private:
  std::map<GenKey, Rational> terms_;
};

/// Value of a single generator on an ideal; 0 / 1 / -1 by the case
/// definitions. The ideal is assumed valid.
int generator_value(const Poset& p, GenKind kind, int element, IdealMask ideal);

/// Throws not_an_ideal if the mask is not downward closed, and bad_parameter
/// if a generator's element is out of range for the poset.
Rational evaluate(const Poset& p, const Statistic& f, IdealMask ideal);

/// Component k = f evaluated on lattice.ideal(k). Linear in f.
QVector as_vector(const IdealLattice& lattice, const Statistic& f);

/// True iff every rowmotion orbit has average exactly d.
bool is_d_mesic(const IdealLattice& lattice, const Statistic& f,
                const Rational& d);

/// {"const": "q", "ind": {"p": "q"}, "aminus": {...}, "aplus": {...},
///  "tog": {...}} with rationals as "a/b" strings and elements as keys.
std::string statistic_to_json(const Statistic& f);
Statistic statistic_from_json(const std::string& json_text);

} // namespace tgl

#endif
