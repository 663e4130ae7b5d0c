#include "superquant/config.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "superquant/errors.hpp"

namespace superquant {

namespace {

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  void skip() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        if (c == '\n') ++line_;
        ++pos_;
      } else {
        break;
      }
    }
  }

  bool done() {
    skip();
    return pos_ >= text_.size();
  }

  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool eat(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("config line " + std::to_string(line_) + ": " + why);
  }

  std::string ident() {
    skip();
    std::string out;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      out.push_back(text_[pos_++]);
    if (out.empty()) fail("expected a key");
    return out;
  }

  ConfigValue value() {
    char c = peek();
    if (c == '[') {
      ++pos_;
      ConfigValue v;
      v.kind = ConfigValue::Kind::List;
      if (eat(']')) return v;
      while (true) {
        v.list.push_back(value());
        if (eat(']')) return v;
        if (!eat(',')) fail("expected ',' or ']' in list");
        if (eat(']')) return v;  // trailing comma
      }
    }
    if (c == '"') {
      ++pos_;
      ConfigValue v;
      v.kind = ConfigValue::Kind::String;
      while (pos_ < text_.size() && text_[pos_] != '"') v.str.push_back(text_[pos_++]);
      if (pos_ >= text_.size()) fail("unterminated string");
      ++pos_;
      return v;
    }
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      std::string lit;
      if (c == '-') {
        lit.push_back(c);
        ++pos_;
      }
      while (pos_ < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/'))
        lit.push_back(text_[pos_++]);
      ConfigValue v;
      v.kind = ConfigValue::Kind::Number;
      try {
        v.num = rat_from_string(lit);
      } catch (const std::exception&) {
        fail("bad number '" + lit + "'");
      }
      return v;
    }
    fail("expected a value");
  }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
};

const ConfigValue& field(const ConfigTable& t, const std::string& key, ConfigValue::Kind kind) {
  auto it = t.find(key);
  if (it == t.end()) throw ParseError("config is missing field '" + key + "'");
  if (it->second.kind != kind) throw ParseError("config field '" + key + "' has the wrong type");
  return it->second;
}

Rat number_at(const ConfigValue& v, const std::string& where) {
  if (v.kind != ConfigValue::Kind::Number)
    throw ParseError("expected a number inside '" + where + "'");
  return v.num;
}

long integer_field(const ConfigTable& t, const std::string& key) {
  Rat v = field(t, key, ConfigValue::Kind::Number).num;
  if (!is_integer(v)) throw ParseError("config field '" + key + "' must be an integer");
  return v.get_num().get_si();
}

}  // namespace

ConfigTable parse_config_text(const std::string& text) {
  Lexer lex(text);
  ConfigTable table;
  while (!lex.done()) {
    std::string key = lex.ident();
    if (!lex.eat('=')) lex.fail("expected '=' after '" + key + "'");
    table[key] = lex.value();
  }
  return table;
}

ConfigTable parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

CartanDatum cartan_from_config(const ConfigTable& table) {
  CartanDatum datum;
  datum.rank = static_cast<int>(integer_field(table, "rank"));
  if (datum.rank < 1) throw ParseError("rank must be >= 1");
  const ConfigValue& rows = field(table, "matrix", ConfigValue::Kind::List);
  if (static_cast<int>(rows.list.size()) != datum.rank)
    throw ParseError("matrix must have rank rows");
  for (const auto& row : rows.list) {
    if (row.kind != ConfigValue::Kind::List || static_cast<int>(row.list.size()) != datum.rank)
      throw ParseError("matrix rows must be lists of rank entries");
    std::vector<Rat> r;
    for (const auto& x : row.list) r.push_back(number_at(x, "matrix"));
    datum.a.push_back(std::move(r));
  }
  const ConfigValue& d = field(table, "d", ConfigValue::Kind::List);
  if (static_cast<int>(d.list.size()) != datum.rank) throw ParseError("d must have rank entries");
  for (const auto& x : d.list) datum.d.push_back(number_at(x, "d"));
  if (table.count("tau")) datum.tau = static_cast<int>(integer_field(table, "tau"));
  if (table.count("alpha")) datum.alpha = field(table, "alpha", ConfigValue::Kind::Number).num;
  if (table.count("type")) datum.type_tag = field(table, "type", ConfigValue::Kind::String).str;
  datum.provenance = "config";
  return datum;
}

std::string cartan_to_config(const CartanDatum& datum) {
  std::ostringstream out;
  out << "rank = " << datum.rank << "\n";
  out << "matrix = [";
  for (int i = 0; i < datum.rank; ++i) {
    out << (i ? ", [" : "[");
    for (int j = 0; j < datum.rank; ++j) out << (j ? ", " : "") << rat_to_string(datum.a[i][j]);
    out << "]";
  }
  out << "]\n";
  if (datum.tau) out << "tau = " << *datum.tau << "\n";
  out << "d = [";
  for (int i = 0; i < datum.rank; ++i) out << (i ? ", " : "") << rat_to_string(datum.d[i]);
  out << "]\n";
  if (datum.alpha) out << "alpha = " << rat_to_string(*datum.alpha) << "\n";
  out << "type = \"" << datum.type_tag << "\"\n";
  return out.str();
}

LieSBA liesba_from_config(const ConfigTable& table) {
  long dim = integer_field(table, "dim");
  if (dim < 1) throw ParseError("dim must be >= 1");
  const ConfigValue& par = field(table, "parity", ConfigValue::Kind::List);
  if (static_cast<long>(par.list.size()) != dim) throw ParseError("parity must have dim entries");
  std::vector<int> parity;
  for (const auto& x : par.list) {
    Rat v = number_at(x, "parity");
    if (v != 0 && v != 1) throw ParseError("parity entries must be 0 or 1");
    parity.push_back(static_cast<int>(v.get_num().get_si()));
  }
  std::string name = "config";
  if (table.count("name")) name = field(table, "name", ConfigValue::Kind::String).str;
  LieSBA g = LieSBA::zeroed(name, parity);

  auto fill = [&](const char* key, std::vector<std::vector<std::vector<Rat>>>& dst) {
    auto it = table.find(key);
    if (it == table.end()) return;
    if (it->second.kind != ConfigValue::Kind::List)
      throw ParseError(std::string("config field '") + key + "' has the wrong type");
    for (const auto& entry : it->second.list) {
      if (entry.kind != ConfigValue::Kind::List || entry.list.size() != 4)
        throw ParseError(std::string(key) + " entries must be [i, j, k, coeff]");
      long idx[3];
      for (int t = 0; t < 3; ++t) {
        Rat v = number_at(entry.list[t], key);
        if (!is_integer(v)) throw ParseError(std::string(key) + " indices must be integers");
        idx[t] = v.get_num().get_si();
        if (idx[t] < 1 || idx[t] > dim)
          throw ParseError(std::string(key) + " index out of range");
      }
      dst[idx[0] - 1][idx[1] - 1][idx[2] - 1] = number_at(entry.list[3], key);
    }
  };
  fill("bracket", g.c);
  fill("cobracket", g.delta);
  return g;
}

TwoTensor r_from_config(const ConfigTable& table, int dim) {
  TwoTensor r(dim, std::vector<Rat>(dim, Rat(0)));
  auto it = table.find("r");
  if (it == table.end()) return r;
  if (it->second.kind != ConfigValue::Kind::List)
    throw ParseError("config field 'r' has the wrong type");
  for (const auto& entry : it->second.list) {
    if (entry.kind != ConfigValue::Kind::List || entry.list.size() != 3)
      throw ParseError("r entries must be [i, j, coeff]");
    long i = number_at(entry.list[0], "r").get_num().get_si();
    long j = number_at(entry.list[1], "r").get_num().get_si();
    if (i < 1 || i > dim || j < 1 || j > dim) throw ParseError("r index out of range");
    r[i - 1][j - 1] = number_at(entry.list[2], "r");
  }
  return r;
}

}  // namespace superquant
