#include <cctype>
#include <numeric>

#include "fastminors/selection.hpp"

namespace fastminors {

namespace {

constexpr std::array<std::string_view, kNumMethods> kNames = {
    "LexSmallest", "LexSmallestTerm", "LexLargest", "GRevLexSmallest", "GRevLexSmallestTerm",
    "GRevLexLargest", "Random", "RandomNonzero", "Points",
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string_view method_name(SelectionMethod m) { return kNames[static_cast<std::size_t>(m)]; }

std::optional<SelectionMethod> method_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kNumMethods; ++i) {
    if (kNames[i] == name) return kAllMethods[i];
  }
  return std::nullopt;
}

StrategyTable::StrategyTable(std::initializer_list<std::pair<SelectionMethod, unsigned>> weights) {
  for (const auto& [m, w] : weights) set_weight(m, w);
}

unsigned StrategyTable::total() const { return std::accumulate(weights_.begin(), weights_.end(), 0u); }

void StrategyTable::validate() const {
  if (total() == 0) throw InvalidInput("strategy has no positive weight");
}

SelectionMethod StrategyTable::draw(Rng& rng) const {
  validate();
  unsigned ticket = std::uniform_int_distribution<unsigned>(0, total() - 1)(rng);
  for (std::size_t i = 0; i < kNumMethods; ++i) {
    if (ticket < weights_[i]) return kAllMethods[i];
    ticket -= weights_[i];
  }
  return kAllMethods.back();
}

std::string StrategyTable::to_string() const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < kNumMethods; ++i) {
    if (weights_[i] == 0) continue;
    if (!first) out += ", ";
    out += std::string(kNames[i]) + ": " + std::to_string(weights_[i]);
    first = false;
  }
  return out + "}";
}

StrategyTable builtin_strategy(std::string_view name) {
  using M = SelectionMethod;
  if (name == "StrategyDefault" || name == "Default") {
    return {{M::LexSmallest, 1}, {M::LexSmallestTerm, 1}, {M::GRevLexSmallest, 1},
            {M::GRevLexSmallestTerm, 1}, {M::Random, 1}, {M::RandomNonzero, 1}};
  }
  if (name == "StrategyDefaultNonRandom") {
    return {{M::LexSmallest, 25}, {M::LexSmallestTerm, 25}, {M::GRevLexSmallest, 25}, {M::GRevLexSmallestTerm, 25}};
  }
  if (name == "StrategyDefaultWithPoints") {
    return {{M::Points, 16}, {M::LexSmallest, 8}, {M::LexSmallestTerm, 8}, {M::GRevLexSmallest, 8},
            {M::GRevLexSmallestTerm, 8}};
  }
  if (name == "StrategyLexSmallest") return {{M::LexSmallest, 50}, {M::LexSmallestTerm, 50}};
  if (name == "StrategyGRevLexSmallest") return {{M::GRevLexSmallest, 50}, {M::GRevLexSmallestTerm, 50}};
  if (name == "StrategyPoints") return {{M::Points, 100}};
  if (name == "StrategyRandom") return {{M::Random, 50}, {M::RandomNonzero, 50}};
  if (auto m = method_from_name(name)) return {{*m, 100}};
  throw InvalidInput("unknown strategy '" + std::string(name) + "'");
}

StrategyTable parse_strategy(std::string_view text) {
  text = trim(text);
  if (text.empty() || text.front() != '{') return builtin_strategy(text);
  if (text.back() != '}') throw InvalidInput("strategy table must end with '}'");
  std::string_view body = text.substr(1, text.size() - 2);
  StrategyTable table;
  while (!trim(body).empty()) {
    const auto comma = body.find(',');
    std::string_view item = trim(body.substr(0, comma));
    body = comma == std::string_view::npos ? std::string_view{} : body.substr(comma + 1);
    const auto colon = item.find_first_of(":=");
    if (colon == std::string_view::npos) throw InvalidInput("strategy entry '" + std::string(item) + "' lacks a weight");
    std::string_view key = trim(item.substr(0, colon));
    std::string_view value = trim(item.substr(colon + 1));
    if (!value.empty() && value.front() == '>') value = trim(value.substr(1));  // M2-style "=>"
    auto method = method_from_name(key);
    if (!method) throw InvalidInput("unknown strategy key '" + std::string(key) + "'");
    if (value.empty() || value.find_first_not_of("0123456789") != std::string_view::npos) {
      throw InvalidInput("strategy weight for " + std::string(key) + " must be a nonnegative integer");
    }
    table.set_weight(*method, static_cast<unsigned>(std::stoul(std::string(value))));
  }
  table.validate();
  return table;
}

}  // namespace fastminors
