#include "rainsat/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <sstream>

namespace rainsat {

namespace {

constexpr int kBias = 63;

void append_size(std::string& out, long long n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r' ||
                        s.front() == '\n'))
    s.remove_prefix(1);
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n'))
    s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view token, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw ParseError(std::string("bad ") + what + " '" + std::string(token) + "'");
  return value;
}

}  // namespace

std::string encode_graph6(const Graph& g) {
  const int n = g.vertex_count();
  std::string out;
  append_size(out, n);
  int acc = 0;
  int nbits = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + kBias));
  return out;
}

Graph decode_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  for (char ch : text) {
    if (ch < 63 || ch > 126) throw ParseError("graph6: character out of range");
  }
  if (text.empty()) throw ParseError("graph6: empty input");
  long long n = 0;
  std::size_t pos = 0;
  if (text[0] != 126) {
    n = text[0] - kBias;
    pos = 1;
  } else if (text.size() >= 2 && text[1] != 126) {
    if (text.size() < 4) throw ParseError("graph6: malformed header");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | (text[i] - kBias);
    pos = 4;
  } else {
    if (text.size() < 8) throw ParseError("graph6: malformed header");
    for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | (text[i] - kBias);
    pos = 8;
  }
  if (n > 1 << 16) throw ParseError("graph6: vertex count too large");
  const long long bits = n * (n - 1) / 2;
  const long long chars = (bits + 5) / 6;
  if (static_cast<long long>(text.size() - pos) != chars)
    throw ParseError("graph6: malformed (expected " + std::to_string(chars) +
                     " data characters)");
  std::vector<VertexPair> pairs;
  long long k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int ch = text[pos + static_cast<std::size_t>(k / 6)] - kBias;
      if ((ch >> (5 - k % 6)) & 1) pairs.emplace_back(i, j);
    }
  }
  if (bits % 6 != 0) {
    const int last = text.back() - kBias;
    const int pad = static_cast<int>(6 - bits % 6);
    if ((last & ((1 << pad) - 1)) != 0) throw ParseError("graph6: nonzero padding bits");
  }
  return Graph::build(static_cast<int>(n), pairs);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << "n=" << g.vertex_count() << '\n';
  for (const auto& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string line;
  std::optional<int> n;
  std::vector<VertexPair> pairs;
  while (std::getline(is, line)) {
    std::string_view sv = trim(line);
    if (sv.empty() || sv.front() == '#') continue;
    if (!n) {
      if (!sv.starts_with("n=")) throw ParseError("edge list: missing 'n=<count>' header");
      std::string_view rest = sv.substr(2);
      const auto space = rest.find_first_of(" \t");
      n = parse_int(rest.substr(0, space), "vertex count");
      continue;
    }
    std::istringstream ls{std::string(sv)};
    std::string a, b;
    if (!(ls >> a >> b)) throw ParseError("edge list: bad line '" + std::string(sv) + "'");
    pairs.emplace_back(parse_int(a, "vertex"), parse_int(b, "vertex"));
  }
  if (!n) throw ParseError("edge list: missing 'n=<count>' header");
  try {
    return Graph::build(*n, pairs);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("edge list: ") + e.what());
  }
}

std::string to_dot(const Graph& g, const std::vector<std::string>& edge_labels,
                   const std::vector<std::string>& vertex_names) {
  std::ostringstream os;
  os << "graph G {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    os << "  " << v;
    if (static_cast<std::size_t>(v) < vertex_names.size() && !vertex_names[v].empty())
      os << " [label=\"" << vertex_names[v] << "\"]";
    os << ";\n";
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    os << "  " << g.edge(e).u << " -- " << g.edge(e).v;
    if (static_cast<std::size_t>(e) < edge_labels.size())
      os << " [label=\"" << edge_labels[e] << "\", colorscheme=set312, color="
         << (std::hash<std::string>{}(edge_labels[e]) % 12 + 1) << "]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

Graph parse_graph_text(std::string_view text) {
  const std::string_view body = trim(text);
  if (body.starts_with("n=")) return parse_edge_list(body);
  const auto newline = body.find('\n');
  return decode_graph6(body.substr(0, newline));
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Graph read_graph_file(const std::string& path) { return parse_graph_text(read_text_file(path)); }

}  // namespace rainsat
