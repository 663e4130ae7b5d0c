#pragma once

#include <map>
#include <string>
#include <vector>

#include "superquant/cartan.hpp"
#include "superquant/liebialg.hpp"

namespace superquant {

/// Parsed config value: rational number, quoted string, or (nested) list.
struct ConfigValue {
  enum class Kind { Number, String, List };
  Kind kind = Kind::Number;
  Rat num;
  std::string str;
  std::vector<ConfigValue> list;
};

using ConfigTable = std::map<std::string, ConfigValue>;

/// `key = value` lines with # comments; values are rationals (17, -1, 1/2),
/// double-quoted strings, and bracketed lists, possibly nested and spanning
/// lines. Throws ParseError with the offending line.
ConfigTable parse_config_text(const std::string& text);
ConfigTable parse_config_file(const std::string& path);

/// Schema: rank, matrix (list of row lists), optional tau (1-based), d,
/// optional alpha. Throws ParseError naming any missing or ill-typed field.
CartanDatum cartan_from_config(const ConfigTable& table);
std::string cartan_to_config(const CartanDatum& datum);

/// Schema: dim, parity (0/1 list), bracket and cobracket as lists of
/// [i, j, k, coeff] (1-based), optional name.
LieSBA liesba_from_config(const ConfigTable& table);

/// Optional `r` as a list of [i, j, coeff]; zero tensor when absent.
TwoTensor r_from_config(const ConfigTable& table, int dim);

}  // namespace superquant
