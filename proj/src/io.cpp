#include "p3/io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "p3/errors.hpp"
#include "p3/unit_interval.hpp"

namespace p3 {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_words(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

int parse_int(std::string_view word, int line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc() || ptr != word.data() + word.size())
    throw ParseError(line, "expected an integer, got '" + std::string(word) + "'");
  return value;
}

bool has_prefix(std::string_view s, std::string_view p) {
  return s.substr(0, p.size()) == p;
}

}  // namespace

GraphDocument parse_graph(std::string_view text) {
  GraphDocument doc;
  std::optional<int> n;
  int order_line = 0;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = std::min(text.find('\n', pos), text.size());
    const auto line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    if (!n) {
      const auto words = split_words(line);
      if (words.size() != 1) throw ParseError(line_no, "expected the vertex count");
      n = parse_int(words[0], line_no);
      if (*n < 0) throw ParseError(line_no, "negative vertex count");
      doc.graph = Graph(*n);
      continue;
    }
    if (has_prefix(line, "order:")) {
      if (doc.order) throw ParseError(line_no, "second order line");
      std::vector<Vertex> order;
      for (auto w : split_words(line.substr(6))) order.push_back(parse_int(w, line_no));
      if (static_cast<int>(order.size()) != *n)
        throw ParseError(line_no, "order line must list all " + std::to_string(*n) +
                                      " vertices");
      doc.order = std::move(order);
      order_line = line_no;
      continue;
    }
    if (has_prefix(line, "labels:")) {
      if (!doc.labels.empty()) throw ParseError(line_no, "second labels line");
      for (auto w : split_words(line.substr(7))) doc.labels.emplace_back(w);
      if (static_cast<int>(doc.labels.size()) != *n)
        throw ParseError(line_no, "labels line must name all " + std::to_string(*n) +
                                      " vertices");
      continue;
    }
    const auto words = split_words(line);
    if (words.size() != 2) throw ParseError(line_no, "expected an edge 'u v'");
    const int u = parse_int(words[0], line_no);
    const int v = parse_int(words[1], line_no);
    if (u < 0 || v < 0 || u >= *n || v >= *n)
      throw ParseError(line_no, "vertex out of range 0.." + std::to_string(*n - 1));
    if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
    if (doc.graph.adjacent(u, v)) throw ParseError(line_no, "duplicate edge");
    doc.graph.add_edge(u, v);
  }
  if (!n) throw ParseError(line_no, "missing vertex count");
  if (doc.order) {
    try {
      build_model(doc.graph, *doc.order);
    } catch (const std::exception& e) {
      throw ParseError(order_line, e.what());
    }
  }
  return doc;
}

std::vector<GraphDocument> parse_documents(std::string_view text) {
  std::vector<GraphDocument> out;
  std::size_t start = 0;
  int line_offset = 0;
  int line_no = 0;
  std::size_t pos = 0;
  auto flush = [&](std::size_t stop) {
    const auto chunk = text.substr(start, stop - start);
    if (trim(chunk).empty()) return;
    try {
      out.push_back(parse_graph(chunk));
    } catch (const ParseError& e) {
      // Re-anchor the line number to the whole stream.
      const std::string msg = e.what();
      throw ParseError(e.line() + line_offset, msg.substr(msg.find(": ") + 2));
    }
  };
  while (pos <= text.size()) {
    const auto end = std::min(text.find('\n', pos), text.size());
    ++line_no;
    if (trim(text.substr(pos, end - pos)) == "---") {
      flush(pos);
      start = end + 1;
      line_offset = line_no;
    }
    pos = end + 1;
  }
  flush(text.size());
  return out;
}

std::string serialize(const GraphDocument& doc) {
  std::ostringstream out;
  out << doc.graph.order() << '\n';
  for (auto [u, v] : doc.graph.edges()) out << u << ' ' << v << '\n';
  if (doc.order) {
    out << "order:";
    for (Vertex v : *doc.order) out << ' ' << v;
    out << '\n';
  }
  if (!doc.labels.empty()) {
    out << "labels:";
    for (const auto& l : doc.labels) out << ' ' << l;
    out << '\n';
  }
  return out.str();
}

std::string serialize_documents(const std::vector<GraphDocument>& docs) {
  std::string out;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    if (i > 0) out += "---\n";
    out += serialize(docs[i]);
  }
  return out;
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  } else {
    throw InputError("graph6 supports at most 258047 vertices");
  }
  int bits = 0, acc = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = acc << 1 | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        bits = acc = 0;
      }
    }
  if (bits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - bits))));
  return out;
}

Graph from_graph6(std::string_view text) {
  auto byte = [&](std::size_t i) {
    if (i >= text.size() || text[i] < 63 || text[i] > 126)
      throw InputError("malformed graph6 string");
    return text[i] - 63;
  };
  std::size_t at = 0;
  int n = byte(0);
  at = 1;
  if (n == 63) {
    n = byte(1) << 12 | byte(2) << 6 | byte(3);
    at = 4;
  }
  const std::size_t body = (static_cast<std::size_t>(n) * (n - 1) / 2 + 5) / 6;
  if (text.size() != at + body) throw InputError("graph6 string has the wrong length");
  Graph g(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k)
      if (byte(at + k / 6) >> (5 - k % 6) & 1) g.add_edge(i, j);
  return g;
}

std::string adjacency_dump(const Graph& g) {
  std::ostringstream out;
  for (Vertex v = 0; v < g.order(); ++v) {
    out << v << ':';
    for (Vertex w : g.neighbors(v)) out << ' ' << w;
    out << '\n';
  }
  return out.str();
}

}  // namespace p3
