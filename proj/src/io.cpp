#include "pbci/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace pbci {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::istringstream in{std::string(text)};
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::istringstream ls(raw);
    Line line{number, {}};
    for (std::string tok; ls >> tok;) line.tokens.push_back(tok);
    if (line.tokens.empty() || line.tokens.front().front() == '#') continue;
    lines.push_back(std::move(line));
  }
  return lines;
}

}  // namespace

Algebra parse_algebra(std::string_view text) {
  const auto lines = tokenize(text);
  std::size_t i = 0;
  auto expect_header = [&](const std::string& key) -> const Line& {
    if (i >= lines.size()) throw ParseError(lines.empty() ? 1 : lines.back().number, "missing '" + key + "'");
    const Line& l = lines[i++];
    if (l.tokens.front() != key) throw ParseError(l.number, "expected '" + key + "'");
    return l;
  };

  const Line& el = expect_header("elements:");
  std::vector<std::string> names(el.tokens.begin() + 1, el.tokens.end());
  if (names.empty()) throw ParseError(el.number, "no elements");
  for (const auto& nm : names) {
    if (!is_valid_name(nm)) throw ParseError(el.number, "invalid element name '" + nm + "'");
  }
  const std::size_t n = names.size();
  auto lookup = [&](const std::string& tok, int line) -> Element {
    for (std::size_t k = 0; k < n; ++k) {
      if (names[k] == tok) return static_cast<Element>(k);
    }
    throw ParseError(line, "unknown element '" + tok + "'");
  };

  const Line& ul = expect_header("unit:");
  if (ul.tokens.size() != 2) throw ParseError(ul.number, "expected exactly one unit name");
  const Element unit = lookup(ul.tokens[1], ul.number);

  auto table = [&](const std::string& key) {
    const Line& h = expect_header(key);
    if (h.tokens.size() != 1) throw ParseError(h.number, "rows must start on the next line");
    std::vector<Element> t;
    t.reserve(n * n);
    for (std::size_t r = 0; r < n; ++r) {
      if (i >= lines.size()) throw ParseError(h.number, "'" + key + "' needs " + std::to_string(n) + " rows");
      const Line& row = lines[i++];
      if (row.tokens.size() != n) {
        throw ParseError(row.number, "row has " + std::to_string(row.tokens.size()) + " entries, expected " +
                                         std::to_string(n));
      }
      for (const auto& tok : row.tokens) t.push_back(lookup(tok, row.number));
    }
    return t;
  };
  auto arrow = table("arrow:");
  auto squig = table("squig:");
  if (i != lines.size()) throw ParseError(lines[i].number, "trailing content");

  try {
    return Algebra(std::move(names), unit, std::move(arrow), std::move(squig));
  } catch (const ParseError&) {
    throw;
  } catch (const InvalidInput& e) {
    throw ParseError(el.number, e.what());
  }
}

std::string format_algebra(const Algebra& a) {
  const auto n = static_cast<Element>(a.size());
  std::string out = "elements:";
  for (const auto& nm : a.names()) out += " " + nm;
  out += "\nunit: " + a.name(a.unit()) + "\n";
  auto table = [&](const char* key, auto op) {
    out += key;
    out += '\n';
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        if (y) out += ' ';
        out += a.name(op(x, y));
      }
      out += '\n';
    }
  };
  table("arrow:", [&](Element x, Element y) { return a.arrow(x, y); });
  table("squig:", [&](Element x, Element y) { return a.squig(x, y); });
  return out;
}

Algebra read_algebra(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_algebra(buf.str());
}

void write_algebra(const std::filesystem::path& path, const Algebra& a) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path.string());
  out << format_algebra(a);
}

}  // namespace pbci
