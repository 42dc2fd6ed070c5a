#pragma once

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hgreedy/hypergraph.hpp"

namespace hgreedy {

/// Malformed hypergraph text. `line()` is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  [[nodiscard]] std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::uint64_t parse_uint(std::string_view tok, std::size_t line) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size()) {
    throw ParseError(line, "expected a non-negative integer, got '" + std::string(tok) + "'");
  }
  return v;
}

}  // namespace detail

/**
 * Reads the line-oriented hypergraph format:
 *
 *     # comment
 *     p hg <n> <m>
 *     e <v1> <v2> ... <vk>     (m lines, 0-based ids)
 */
inline Hypergraph load_hypergraph(std::istream& in) {
  std::string raw;
  std::size_t lineno = 0;
  bool have_header = false;
  std::size_t n = 0, m = 0;
  std::vector<std::vector<Vertex>> edges;
  std::set<std::vector<Vertex>> seen;
  while (std::getline(in, raw)) {
    ++lineno;
    const auto toks = detail::split_ws(raw);
    if (toks.empty() || toks[0].front() == '#') continue;
    if (toks[0] == "p") {
      if (have_header) throw ParseError(lineno, "duplicate header");
      if (toks.size() != 4 || toks[1] != "hg") throw ParseError(lineno, "malformed header, expected 'p hg <n> <m>'");
      n = detail::parse_uint(toks[2], lineno);
      m = detail::parse_uint(toks[3], lineno);
      if (n >= kNoVertex) throw ParseError(lineno, "vertex count too large");
      have_header = true;
      continue;
    }
    if (toks[0] != "e") throw ParseError(lineno, "unknown record '" + std::string(toks[0]) + "'");
    if (!have_header) throw ParseError(lineno, "edge before header");
    if (toks.size() < 3) throw ParseError(lineno, "edge needs at least 2 vertices");
    std::vector<Vertex> e;
    for (std::size_t i = 1; i < toks.size(); ++i) {
      const auto v = detail::parse_uint(toks[i], lineno);
      if (v >= n) throw ParseError(lineno, "vertex id " + std::to_string(v) + " out of range (n=" + std::to_string(n) + ")");
      e.push_back(static_cast<Vertex>(v));
    }
    auto sorted = e;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw ParseError(lineno, "repeated vertex in edge");
    }
    if (!seen.insert(sorted).second) throw ParseError(lineno, "duplicate edge");
    edges.push_back(std::move(e));
  }
  if (!have_header) throw ParseError(lineno + 1, "missing 'p hg' header");
  if (edges.size() != m) {
    throw ParseError(lineno, "header declares " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  return Hypergraph(n, std::move(edges));
}

inline Hypergraph load_hypergraph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return load_hypergraph(in);
}

inline Hypergraph load_hypergraph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return load_hypergraph(in);
}

/// Canonical serialization: edges sorted lexicographically.
inline void save_hypergraph(std::ostream& out, const Hypergraph& g) {
  auto edges = g.edges();
  std::sort(edges.begin(), edges.end());
  out << "p hg " << g.num_vertices() << ' ' << edges.size() << '\n';
  for (const auto& e : edges) {
    out << 'e';
    for (Vertex v : e) out << ' ' << v;
    out << '\n';
  }
}

inline std::string to_text(const Hypergraph& g) {
  std::ostringstream out;
  save_hypergraph(out, g);
  return out.str();
}

}  // namespace hgreedy
