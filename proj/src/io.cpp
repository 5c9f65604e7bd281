#include "sugeq/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "sugeq/error.hpp"

namespace sugeq {

namespace {

[[noreturn]] void invalid(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::kParse, where + ": " + what);
}

Json parse_json_text(std::string_view text, const char* what) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::kParse, std::string(what) + ": " + e.what());
  }
}

std::vector<std::string> label_list(const Json& value, const std::string& where) {
  if (!value.is_array()) invalid(where, "expected an array of labels");
  std::vector<std::string> labels;
  for (const auto& l : value) {
    if (!l.is_string()) invalid(where, "labels must be strings");
    labels.push_back(l.get<std::string>());
  }
  return labels;
}

// Rethrows domain construction failures as validation errors with location.
Domain make_domain(std::vector<std::string> labels, const std::string& where) {
  try {
    return Domain(std::move(labels));
  } catch (const Error& e) {
    throw Error(ErrorCode::kValidation, where + ": " + e.what());
  }
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.emplace_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

void read_payoff_array(const Json& node, const GameSpec* /*unused*/,
                       const std::vector<std::size_t>& sizes, std::size_t depth,
                       const std::string& where, bool allow_decimal,
                       std::vector<Rational>& out) {
  if (depth == sizes.size()) {
    try {
      out.push_back(rational_from_json(node, allow_decimal));
    } catch (const Error& e) {
      throw Error(ErrorCode::kParse, where + ": " + e.what());
    }
    return;
  }
  if (!node.is_array() || node.size() != sizes[depth]) {
    invalid(where, "expected an array of " + std::to_string(sizes[depth]) +
                       " entries at depth " + std::to_string(depth));
  }
  for (std::size_t k = 0; k < node.size(); ++k) {
    read_payoff_array(node[k], nullptr, sizes, depth + 1,
                      where + "[" + std::to_string(k) + "]", allow_decimal, out);
  }
}

Json write_payoff_array(const std::vector<Rational>& table,
                        const std::vector<std::size_t>& sizes, std::size_t depth,
                        std::size_t& cursor) {
  Json node = Json::array();
  for (std::size_t k = 0; k < sizes[depth]; ++k) {
    if (depth + 1 == sizes.size()) {
      node.push_back(rational_to_json(table[cursor++]));
    } else {
      node.push_back(write_payoff_array(table, sizes, depth + 1, cursor));
    }
  }
  return node;
}

}  // namespace

Rational rational_from_json(const Json& value, bool allow_decimal) {
  if (value.is_string()) {
    const auto text = value.get<std::string>();
    if (allow_decimal && text.find('/') == std::string::npos) {
      return Rational::parse_decimal(text);
    }
    return Rational::parse(text);
  }
  if (value.is_number_integer()) {
    return value.is_number_unsigned() ? Rational::parse(value.dump())
                                      : Rational(value.get<long>());
  }
  if (value.is_number_float()) {
    if (!allow_decimal) {
      throw Error(ErrorCode::kParse,
                  "floating point value " + value.dump() +
                      " (write \"p/q\" or enable decimal conversion)");
    }
    return Rational::parse_decimal(value.dump());
  }
  throw Error(ErrorCode::kParse, "expected a rational, got " + value.dump());
}

Json rational_to_json(const Rational& value) { return value.str(); }

std::string subset_key(const Domain& domain, const PointSet& set) {
  auto labels = domain.labels_of(set);
  std::sort(labels.begin(), labels.end());
  std::string key;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) key += ",";
    key += labels[i];
  }
  return key;
}

FiniteCapacity capacity_from_json(const Json& doc) {
  if (!doc.is_object()) invalid("capacity", "expected an object");
  if (!doc.contains("domain")) invalid("capacity", "missing \"domain\"");
  if (!doc.contains("values") || !doc["values"].is_object()) {
    invalid("capacity", "missing \"values\" object");
  }
  Domain domain = make_domain(label_list(doc["domain"], "capacity.domain"),
                              "capacity.domain");
  if (doc.contains("factors")) {
    std::vector<Domain> factors;
    for (std::size_t k = 0; k < doc["factors"].size(); ++k) {
      const std::string where = "capacity.factors[" + std::to_string(k) + "]";
      factors.push_back(make_domain(label_list(doc["factors"][k], where), where));
    }
    Domain product = Domain::product(factors);
    if (!(product == domain)) {
      throw Error(ErrorCode::kValidation,
                  "capacity.factors: product labels do not match the domain");
    }
    domain = product;
  }
  try {
    require_dense(domain);
  } catch (const Error& e) {
    throw Error(e.code(), std::string("capacity.domain: ") + e.what());
  }
  std::map<std::uint32_t, Rational> table;
  for (const auto& [key, value] : doc["values"].items()) {
    const std::string where = "capacity.values[\"" + key + "\"]";
    std::uint32_t mask = 0;
    if (!key.empty()) {
      for (const auto& label : split(key, ',')) {
        const auto index = domain.find(label);
        if (!index) {
          throw Error(ErrorCode::kValidation,
                      where + ": unknown label \"" + label + "\"");
        }
        const std::uint32_t bit = std::uint32_t{1} << *index;
        if (mask & bit) {
          throw Error(ErrorCode::kValidation,
                      where + ": label \"" + label + "\" repeated");
        }
        mask |= bit;
      }
    }
    Rational v;
    try {
      v = rational_from_json(value);
    } catch (const Error& e) {
      throw Error(ErrorCode::kParse, where + ": " + e.what());
    }
    if (!table.emplace(mask, v).second) {
      throw Error(ErrorCode::kValidation,
                  where + ": subset " +
                      domain.describe(make_set(domain.size(), mask)) +
                      " given twice");
    }
  }
  try {
    return new_capacity(domain, table);
  } catch (const MonotonicityError&) {
    throw;
  } catch (const Error& e) {
    const ErrorCode code =
        e.code() == ErrorCode::kParse ? ErrorCode::kParse : e.code();
    throw Error(code, std::string("capacity: ") + e.what());
  }
}

Json capacity_to_json(const FiniteCapacity& capacity) {
  const Domain& domain = capacity.domain();
  Json doc;
  doc["domain"] = domain.labels();
  if (domain.is_product()) {
    Json factors = Json::array();
    for (const auto& f : domain.factors()) factors.push_back(f.labels());
    doc["factors"] = factors;
  }
  // Keys ordered by bitmask for stable output.
  Json values = Json::object();
  for (std::uint32_t m = 0; m <= capacity.full_mask(); ++m) {
    values[subset_key(domain, make_set(domain.size(), m))] =
        rational_to_json(capacity.at(m));
  }
  doc["values"] = values;
  return doc;
}

FiniteCapacity parse_capacity(std::string_view text) {
  return capacity_from_json(parse_json_text(text, "capacity"));
}

FiniteCapacity load_capacity(const std::filesystem::path& path) {
  return parse_capacity(read_text_file(path));
}

GameSpec game_from_json(const Json& doc, bool allow_decimal) {
  if (!doc.is_object()) invalid("game", "expected an object");
  if (!doc.contains("players") || !doc["players"].is_number_integer()) {
    invalid("game", "missing integer \"players\"");
  }
  const long players = doc["players"].get<long>();
  if (players < 2) {
    throw Error(ErrorCode::kValidation, "game.players: need at least 2");
  }
  if (!doc.contains("strategies") || !doc["strategies"].is_array() ||
      doc["strategies"].size() != static_cast<std::size_t>(players)) {
    invalid("game.strategies", "expected one label array per player");
  }
  std::vector<Domain> strategies;
  std::vector<std::size_t> sizes;
  for (long i = 0; i < players; ++i) {
    const std::string where = "game.strategies[" + std::to_string(i) + "]";
    strategies.push_back(
        make_domain(label_list(doc["strategies"][i], where), where));
    sizes.push_back(strategies.back().size());
  }
  if (!doc.contains("payoffs") || !doc["payoffs"].is_object()) {
    invalid("game.payoffs", "expected an object keyed by player index");
  }
  std::vector<std::vector<Rational>> payoffs;
  for (long i = 0; i < players; ++i) {
    const std::string key = std::to_string(i);
    const std::string where = "game.payoffs[\"" + key + "\"]";
    if (!doc["payoffs"].contains(key)) invalid(where, "missing");
    auto& table = payoffs.emplace_back();
    read_payoff_array(doc["payoffs"][key], nullptr, sizes, 0, where,
                      allow_decimal, table);
  }
  if (doc["payoffs"].size() != static_cast<std::size_t>(players)) {
    invalid("game.payoffs", "unexpected player keys");
  }
  return GameSpec(std::move(strategies), std::move(payoffs));
}

Json game_to_json(const GameSpec& game) {
  Json doc;
  doc["players"] = game.players();
  Json strategies = Json::array();
  std::vector<std::size_t> sizes;
  for (const auto& s : game.strategy_sets()) {
    strategies.push_back(s.labels());
    sizes.push_back(s.size());
  }
  doc["strategies"] = strategies;
  Json payoffs = Json::object();
  for (std::size_t i = 0; i < game.players(); ++i) {
    std::size_t cursor = 0;
    payoffs[std::to_string(i)] =
        write_payoff_array(game.payoff_table(i), sizes, 0, cursor);
  }
  doc["payoffs"] = payoffs;
  return doc;
}

GameSpec parse_game(std::string_view text, bool allow_decimal) {
  return game_from_json(parse_json_text(text, "game"), allow_decimal);
}

GameSpec load_game(const std::filesystem::path& path, bool allow_decimal) {
  return parse_game(read_text_file(path), allow_decimal);
}

PayoffFunction payoff_from_json(const Json& doc, bool allow_decimal) {
  if (!doc.is_object() || !doc.contains("domain") || !doc.contains("values") ||
      !doc["values"].is_object()) {
    invalid("payoff", "expected {\"domain\": [...], \"values\": {...}}");
  }
  Domain domain =
      make_domain(label_list(doc["domain"], "payoff.domain"), "payoff.domain");
  std::vector<std::optional<Rational>> values(domain.size());
  for (const auto& [key, value] : doc["values"].items()) {
    const std::string where = "payoff.values[\"" + key + "\"]";
    const auto index = domain.find(key);
    if (!index) {
      throw Error(ErrorCode::kValidation, where + ": unknown label");
    }
    try {
      values[*index] = rational_from_json(value, allow_decimal);
    } catch (const Error& e) {
      throw Error(ErrorCode::kParse, where + ": " + e.what());
    }
  }
  std::vector<Rational> dense;
  for (std::size_t x = 0; x < values.size(); ++x) {
    if (!values[x]) {
      throw Error(ErrorCode::kValidation,
                  "payoff.values: missing point \"" + domain.label(x) + "\"");
    }
    dense.push_back(*values[x]);
  }
  return PayoffFunction(std::move(domain), std::move(dense));
}

Json payoff_to_json(const PayoffFunction& f) {
  Json doc;
  doc["domain"] = f.domain().labels();
  Json values = Json::object();
  for (std::size_t x = 0; x < f.domain().size(); ++x) {
    values[f.domain().label(x)] = rational_to_json(f[x]);
  }
  doc["values"] = values;
  return doc;
}

std::string game_hash(const GameSpec& game) {
  const std::string text = game_to_json(game).dump();
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIo, "cannot open " + path.string());
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<Rational> default_payoff_values() {
  return {Rational(-2), Rational(-1), Rational(0), Rational(1), Rational(2)};
}

Domain labeled_domain(std::string_view prefix, std::size_t size) {
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < size; ++k) {
    labels.push_back(std::string(prefix) + std::to_string(k));
  }
  return Domain(std::move(labels));
}

GameSpec InstanceGenerator::game(const std::vector<std::size_t>& sizes,
                                 const std::vector<Rational>& values) {
  std::vector<Domain> strategies;
  std::size_t profiles = 1;
  for (auto s : sizes) {
    strategies.push_back(labeled_domain("s", s));
    profiles *= s;
  }
  std::vector<std::vector<Rational>> payoffs(sizes.size());
  for (auto& table : payoffs) {
    for (std::size_t k = 0; k < profiles; ++k) table.push_back(pick_from(values));
  }
  return GameSpec(std::move(strategies), std::move(payoffs));
}

GameSpec InstanceGenerator::small_game(const std::vector<Rational>& values) {
  const std::size_t players = 2 + pick(2);
  std::vector<std::size_t> sizes;
  for (std::size_t i = 0; i < players; ++i) sizes.push_back(2 + pick(2));
  return game(sizes, values);
}

FiniteCapacity InstanceGenerator::capacity(const Domain& domain,
                                           long denominator,
                                           const PointSet* support) {
  require_dense(domain);
  if (denominator < 1) {
    throw Error(ErrorCode::kInvalidArgument, "denominator must be positive");
  }
  const std::size_t n = domain.size();
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  const std::uint32_t keep = support ? static_cast<std::uint32_t>(mask_of(*support))
                                     : full;
  std::vector<Rational> table(full + 1, Rational(0));
  table[full] = Rational(1);
  for (std::uint32_t m = 1; m < full; ++m) {
    if ((m & keep) == 0) continue;
    Rational floor(0);
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint32_t bit = std::uint32_t{1} << i;
      if (m & bit) floor = max(floor, table[m ^ bit]);
    }
    // smallest k with k / denominator >= floor
    const mpq_class scaled = floor.raw() * denominator;
    mpz_class k0;
    mpz_cdiv_q(k0.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    const long lo = k0.get_si();
    const long k = lo + static_cast<long>(pick(static_cast<std::size_t>(denominator - lo + 1)));
    table[m] = Rational(k, denominator);
  }
  return FiniteCapacity(domain, std::move(table));
}

PayoffFunction InstanceGenerator::payoff(const Domain& domain, long lo, long hi,
                                         long denominator) {
  std::vector<Rational> values;
  const long span = (hi - lo) * denominator;
  for (std::size_t x = 0; x < domain.size(); ++x) {
    const long k = lo * denominator + static_cast<long>(pick(span + 1));
    values.push_back(Rational(k, denominator));
  }
  return PayoffFunction(domain, std::move(values));
}

std::vector<Rational> parse_grid(std::string_view text) {
  std::vector<Rational> grid;
  for (auto part : split(text, ',')) {
    const auto first = part.find_first_not_of(" \t");
    part = first == std::string::npos
               ? std::string()
               : part.substr(first, part.find_last_not_of(" \t") - first + 1);
    if (part.empty()) throw Error(ErrorCode::kParse, "empty grid entry");
    grid.push_back(Rational::parse(part));
  }
  return grid;
}

}  // namespace sugeq
