#include "fastminors/problem.hpp"

#include <cctype>
#include <fstream>
#include <regex>
#include <sstream>

namespace fastminors {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

struct Block {
  std::string key;
  std::string body;
  std::size_t line;  // line of the header

  // Line on which byte `offset` of the body sits.
  std::size_t line_at(std::size_t offset) const {
    offset = std::min(offset, body.size());
    return line + static_cast<std::size_t>(std::count(body.begin(), body.begin() + static_cast<long>(offset), '\n'));
  }
};

// Splits `s` at top-level occurrences of any of `seps`, outside brackets and parentheses.
std::vector<std::pair<std::size_t, std::string_view>> split_top(std::string_view s, std::string_view seps) {
  std::vector<std::pair<std::size_t, std::string_view>> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i < s.size()) {
      const char c = s[i];
      if (c == '(' || c == '[') ++depth;
      if (c == ')' || c == ']') --depth;
      if (depth != 0 || seps.find(c) == std::string_view::npos) continue;
    }
    out.emplace_back(start, s.substr(start, i - start));
    start = i + 1;
  }
  return out;
}

Polynomial parse_in_block(const Block& b, std::size_t offset, std::string_view text, const RingPtr& ring) {
  try {
    return parse_polynomial(text, ring);
  } catch (const ParseError& e) {
    throw ProblemFileError(e.what(), b.line_at(offset + e.position()));
  } catch (const Error& e) {
    throw ProblemFileError(e.what(), b.line_at(offset));
  }
}

// [[a, b], [c, d]] starting at body offset `base`.
PolyMatrix parse_matrix(const Block& b, std::size_t base, std::string_view text, const RingPtr& ring) {
  const std::string_view t = trim(text);
  const std::size_t lead = static_cast<std::size_t>(t.data() - text.data());
  if (t.size() < 2 || t.front() != '[' || t.back() != ']') throw ProblemFileError("matrix must look like [[...], ...]", b.line_at(base));
  std::vector<std::vector<Polynomial>> rows;
  const std::string_view inner = t.substr(1, t.size() - 2);
  for (auto [off, row] : split_top(inner, ",")) {
    const std::size_t row_base = base + lead + 1 + off;
    std::string_view r = trim(row);
    if (r.empty() && rows.empty() && inner.find_first_not_of(" \t\r\n") == std::string_view::npos) break;
    if (r.size() < 2 || r.front() != '[' || r.back() != ']') throw ProblemFileError("matrix rows must be bracketed lists", b.line_at(row_base + (r.data() - row.data())));
    const std::size_t row_at = row_base + static_cast<std::size_t>(r.data() - row.data());
    const std::size_t r_base = row_at + 1;
    std::vector<Polynomial> entries;
    for (auto [eoff, entry] : split_top(r.substr(1, r.size() - 2), ",")) {
      if (trim(entry).empty()) throw ProblemFileError("empty matrix entry", b.line_at(r_base + eoff));
      entries.push_back(parse_in_block(b, r_base + eoff, entry, ring));
    }
    if (!rows.empty() && entries.size() != rows.front().size()) {
      throw ProblemFileError("ragged matrix: row " + std::to_string(rows.size()) + " has " + std::to_string(entries.size()) +
                                 " entries, expected " + std::to_string(rows.front().size()),
                             b.line_at(row_at));
    }
    rows.push_back(std::move(entries));
  }
  if (rows.empty() || rows.front().empty()) throw ProblemFileError("empty matrix", b.line_at(base));
  return PolyMatrix::from_rows(ring, rows);
}

RingPtr parse_ring(const Block& b) {
  const auto parts = split_top(b.body, ";");
  if (parts.size() != 2) throw ProblemFileError("ring header must be '<characteristic>; <variables>'", b.line);
  std::string ch(trim(parts[0].second));
  Field field = Field::rationals();
  try {
    if (ch == "QQ") {
      field = Field::rationals();
    } else {
      if (ch.rfind("ZZ/", 0) == 0) ch = ch.substr(3);
      if (ch.empty() || ch.find_first_not_of("0123456789") != std::string::npos) throw InvalidInput("bad characteristic '" + ch + "'");
      field = Field::from_characteristic(std::stoull(ch));
    }
  } catch (const std::out_of_range&) {
    throw ProblemFileError("characteristic too large", b.line);
  } catch (const Error& e) {
    throw ProblemFileError(e.what(), b.line);
  }
  std::vector<std::string> names;
  try {
    names = expand_variables(parts[1].second);
  } catch (const Error& e) {
    throw ProblemFileError(e.what(), b.line_at(parts[1].first));
  }
  try {
    return make_ring(field, names);
  } catch (const Error& e) {
    throw ProblemFileError(e.what(), b.line);
  }
}

}  // namespace

std::vector<std::string> expand_variables(std::string_view list) {
  static const std::regex ident(R"([A-Za-z_][A-Za-z0-9_]*)");
  static const std::regex indexed(R"(([A-Za-z_][A-Za-z_]*)(\d+))");
  std::vector<std::string> raw;
  for (auto [off, item] : split_top(list, ",")) raw.emplace_back(trim(item));

  auto range = [&](const std::string& a, const std::string& b, std::vector<std::string>& out) {
    std::smatch ma, mb;
    if (!std::regex_match(a, ma, indexed) || !std::regex_match(b, mb, indexed) || ma[1] != mb[1]) {
      throw InvalidInput("cannot expand range " + a + " .. " + b);
    }
    const long lo = std::stol(ma[2]), hi = std::stol(mb[2]);
    if (hi < lo) throw InvalidInput("empty range " + a + " .. " + b);
    for (long i = lo; i <= hi; ++i) out.push_back(std::string(ma[1]) + std::to_string(i));
  };

  std::vector<std::string> names;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const std::string& item = raw[i];
    if (item == "..." || item == "..") {
      if (names.empty() || i + 1 >= raw.size()) throw InvalidInput("'...' needs a variable on both sides");
      const std::string first = names.back();
      names.pop_back();
      range(first, raw[++i], names);
    } else if (auto dots = item.find(".."); dots != std::string::npos) {
      range(std::string(trim(std::string_view(item).substr(0, dots))),
            std::string(trim(std::string_view(item).substr(item.find_first_not_of('.', dots)))), names);
    } else if (std::regex_match(item, ident)) {
      names.push_back(item);
    } else {
      throw InvalidInput("bad variable name '" + item + "'");
    }
  }
  return names;
}

ProblemFile parse_problem(std::string_view text) {
  static const std::regex header(R"(^\s*(ring|ideal|matrix|complex)\s*:(.*)$)");
  std::vector<Block> blocks;
  std::size_t lineno = 0;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::smatch m;
    if (std::regex_match(line, m, header)) {
      for (const auto& b : blocks) {
        if (b.key == m[1]) throw ProblemFileError("duplicate '" + b.key + "' block", lineno);
      }
      blocks.push_back({m[1], m[2], lineno});
    } else if (!trim(line).empty()) {
      if (blocks.empty()) throw ProblemFileError("expected 'ring:' header", lineno);
      blocks.back().body += '\n' + line;
    } else if (!blocks.empty()) {
      blocks.back().body += '\n';
    }
  }
  if (blocks.empty() || blocks.front().key != "ring") throw ProblemFileError("file must start with a 'ring:' header", blocks.empty() ? 1 : blocks.front().line);

  ProblemFile out;
  out.ring = parse_ring(blocks.front());
  for (std::size_t k = 1; k < blocks.size(); ++k) {
    const Block& b = blocks[k];
    if (b.key == "ring") throw ProblemFileError("duplicate 'ring' block", b.line);
    if (b.key == "ideal") {
      std::vector<Polynomial> gens;
      for (auto [off, piece] : split_top(b.body, ";,")) {
        if (trim(piece).empty()) continue;
        gens.push_back(parse_in_block(b, off, piece, out.ring));
      }
      out.ideal = Ideal(out.ring, std::move(gens));
    } else if (b.key == "matrix") {
      out.matrix = parse_matrix(b, 0, b.body, out.ring);
    } else {
      std::vector<PolyMatrix> maps;
      for (auto [off, piece] : split_top(b.body, ";")) {
        const std::string_view t = trim(piece);
        if (t.empty()) continue;
        const std::size_t eq = t.find('=');
        const std::size_t at = off + static_cast<std::size_t>(t.data() - piece.data());
        if (eq == std::string_view::npos) throw ProblemFileError("complex maps must be written d<i>=[[...]]", b.line_at(at));
        const std::string name(trim(t.substr(0, eq)));
        if (name != "d" + std::to_string(maps.size() + 1)) {
          throw ProblemFileError("expected map d" + std::to_string(maps.size() + 1) + ", found '" + name + "'", b.line_at(at));
        }
        maps.push_back(parse_matrix(b, at + eq + 1, t.substr(eq + 1), out.ring));
      }
      try {
        out.complex.emplace(std::move(maps));
      } catch (const ProblemFileError&) {
        throw;
      } catch (const Error& e) {
        throw ProblemFileError(e.what(), b.line);
      }
    }
  }
  return out;
}

ProblemFile load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_problem(ss.str());
}

}  // namespace fastminors
