#include "pdpoly/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "pdpoly/error.hpp"

namespace pdpoly {

namespace {

constexpr int kBias = 63;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

int decode_byte(char c) {
  const int value = static_cast<unsigned char>(c) - kBias;
  if (value < 0 || value > 63) throw Error(ErrorKind::FormatError, "graph6 byte outside 63..126");
  return value;
}

}  // namespace

Graph from_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw Error(ErrorKind::FormatError, "empty graph6 string");

  std::size_t pos = 0;
  long n = 0;
  if (text[0] != '~') {
    n = decode_byte(text[0]);
    pos = 1;
  } else {
    if (text.size() < 4 || text[1] == '~') throw Error(ErrorKind::FormatError, "unsupported graph6 size header");
    n = (decode_byte(text[1]) << 12) | (decode_byte(text[2]) << 6) | decode_byte(text[3]);
    pos = 4;
  }
  if (n > kMaxVertices) throw Error(ErrorKind::TooLarge, "graph6 order " + std::to_string(n) + " exceeds cap");
  if (n < 1) throw Error(ErrorKind::FormatError, "graph6 order must be at least 1");

  const long pairs = n * (n - 1) / 2;
  const long expected_bytes = (pairs + 5) / 6;
  if (static_cast<long>(text.size() - pos) != expected_bytes)
    throw Error(ErrorKind::FormatError, "graph6 body has " + std::to_string(text.size() - pos) + " bytes, expected " +
                                            std::to_string(expected_bytes));

  std::vector<Edge> edges;
  long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int chunk = decode_byte(text[pos + static_cast<std::size_t>(k / 6)]);
      if ((chunk >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  for (long rest = k; rest % 6 != 0; ++rest) {
    const int chunk = decode_byte(text[pos + static_cast<std::size_t>(rest / 6)]);
    if ((chunk >> (5 - rest % 6)) & 1) throw Error(ErrorKind::FormatError, "nonzero graph6 padding bits");
  }
  return Graph::from_edge_list(static_cast<int>(n), edges);
}

std::string to_graph6(const Graph& g) {
  const int n = g.n();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
    out.push_back(static_cast<char>((n & 63) + kBias));
  }
  int chunk = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + kBias));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + kBias));
  return out;
}

Graph from_edge_list_text(std::string_view text) {
  std::vector<long> numbers;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string token;
    while (fields >> token) {
      long value = 0;
      const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc{} || ptr != token.data() + token.size())
        throw Error(ErrorKind::FormatError, "non-integer token '" + token + "' in edge list");
      numbers.push_back(value);
    }
  }
  if (numbers.size() < 2) throw Error(ErrorKind::FormatError, "edge list needs an 'n m' header");
  const long n = numbers[0];
  const long m = numbers[1];
  if (m < 0 || static_cast<long>(numbers.size()) != 2 + 2 * m)
    throw Error(ErrorKind::FormatError, "edge list declares " + std::to_string(m) + " edges but holds " +
                                            std::to_string((numbers.size() - 2) / 2));
  if (n > kMaxVertices) throw Error(ErrorKind::TooLarge, "edge list order " + std::to_string(n) + " exceeds cap");
  std::vector<Edge> edges;
  for (long e = 0; e < m; ++e)
    edges.emplace_back(static_cast<int>(numbers[static_cast<std::size_t>(2 + 2 * e)]),
                       static_cast<int>(numbers[static_cast<std::size_t>(3 + 2 * e)]));
  return Graph::from_edge_list(static_cast<int>(n), edges);
}

std::string to_edge_list_text(const Graph& g) {
  const auto edges = g.edges();
  std::ostringstream out;
  out << g.n() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << u << ' ' << v << '\n';
  return out.str();
}

GraphFormat format_from_name(std::string_view name) {
  if (name == "graph6" || name == "g6") return GraphFormat::graph6;
  if (name == "edgelist") return GraphFormat::edgelist;
  if (name == "auto") return GraphFormat::automatic;
  throw Error(ErrorKind::FormatError, "unknown graph format '" + std::string(name) + "'");
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Graph parse_graph_text(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::automatic) {
    format = GraphFormat::graph6;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      std::istringstream fields(line);
      std::vector<std::string> tokens;
      for (std::string t; fields >> t;) tokens.push_back(t);
      if (tokens.empty()) continue;
      if (tokens.size() == 2) format = GraphFormat::edgelist;
      break;
    }
  }
  if (format == GraphFormat::edgelist) return from_edge_list_text(text);

  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const auto body = trim(line);
    if (!body.empty()) return from_graph6(body);
  }
  throw Error(ErrorKind::FormatError, "no graph6 line found");
}

Graph read_graph_file(const std::filesystem::path& path, GraphFormat format) {
  return parse_graph_text(read_text_file(path), format);
}

}  // namespace pdpoly
