#include "cubicpm/graph_io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace cubicpm {
namespace {

std::vector<long long> tokens_of(std::string_view line, std::size_t line_no) {
  std::vector<long long> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    long long value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
    if (ec != std::errc() || ptr == line.data() + i) {
      throw GraphError(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": expected integer");
    }
    out.push_back(value);
    i = static_cast<std::size_t>(ptr - line.data());
  }
  return out;
}

}  // namespace

Multigraph parse_edge_list(std::string_view text) {
  std::vector<std::vector<long long>> rows;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first != std::string_view::npos && line[first] != '#') {
      auto t = tokens_of(line, line_no);
      if (t.size() != 2) {
        throw GraphError(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": expected two integers");
      }
      rows.push_back(std::move(t));
    }
    start = end + 1;
  }
  if (rows.empty()) throw GraphError(ErrorKind::ParseError, "missing header line");
  const long long n = rows[0][0];
  const long long m = rows[0][1];
  if (n < 0 || m < 0 || n > 1'000'000) throw GraphError(ErrorKind::ParseError, "bad header");
  if (static_cast<long long>(rows.size()) - 1 != m) {
    throw GraphError(ErrorKind::ParseError, "header announces " + std::to_string(m) + " edges, found " +
                                                std::to_string(rows.size() - 1));
  }
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const long long a = rows[i][0];
    const long long b = rows[i][1];
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw GraphError(ErrorKind::VertexIdOutOfRange, "edge " + std::to_string(i - 1));
    }
    edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
  }
  return Multigraph::from_edges(static_cast<int>(n), std::move(edges));
}

Multigraph read_edge_list(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str());
}

std::string write_edge_list(const Multigraph& g) {
  std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
  for (const Edge& e : g.edges()) out += std::to_string(e.a) + " " + std::to_string(e.b) + "\n";
  return out;
}

Multigraph parse_graph6(std::string_view line) {
  constexpr std::string_view header = ">>graph6<<";
  if (line.substr(0, header.size()) == header) line.remove_prefix(header.size());
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
  if (line.empty()) throw GraphError(ErrorKind::ParseError, "empty graph6 string");
  if (line[0] == ':' || line[0] == ';' || line[0] == '&') {
    throw GraphError(ErrorKind::ParseError, "sparse6/digraph6 input is not graph6");
  }
  for (char c : line) {
    if (c < 63 || c > 126) throw GraphError(ErrorKind::ParseError, "graph6 byte out of range");
  }
  std::size_t pos = 0;
  auto take = [&]() -> long long {
    if (pos >= line.size()) throw GraphError(ErrorKind::ParseError, "truncated graph6 size");
    return line[pos++] - 63;
  };
  long long n = 0;
  if (line[0] != 126) {
    n = take();
  } else if (line.size() > 1 && line[1] != 126) {
    pos = 1;
    for (int i = 0; i < 3; ++i) n = (n << 6) | take();
  } else {
    pos = 2;
    for (int i = 0; i < 6; ++i) n = (n << 6) | take();
  }
  if (n > 4096) throw GraphError(ErrorKind::TooLarge, "graph6 order above 4096");
  const long long bits_needed = n * (n - 1) / 2;
  const long long bytes_needed = (bits_needed + 5) / 6;
  if (static_cast<long long>(line.size() - pos) != bytes_needed) {
    throw GraphError(ErrorKind::ParseError, "graph6 length mismatch");
  }
  std::vector<Edge> edges;
  long long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = line[pos + static_cast<std::size_t>(k / 6)] - 63;
      if (byte & (1 << (5 - k % 6))) edges.push_back({i, j});
    }
  }
  return Multigraph::from_edges(static_cast<int>(n), std::move(edges));
}

std::string write_graph6(const Multigraph& g) {
  if (!g.is_simple()) throw GraphError(ErrorKind::InvariantViolated, "graph6 cannot encode parallel edges");
  const long long n = g.vertex_count();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n < 258048) {
    out.push_back(126);
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  }
  std::vector<char> adj(static_cast<std::size_t>(n * n), 0);
  for (const Edge& e : g.edges()) {
    adj[static_cast<std::size_t>(e.a * n + e.b)] = 1;
    adj[static_cast<std::size_t>(e.b * n + e.a)] = 1;
  }
  int acc = 0;
  int filled = 0;
  for (long long j = 1; j < n; ++j) {
    for (long long i = 0; i < j; ++i) {
      acc = (acc << 1) | adj[static_cast<std::size_t>(i * n + j)];
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

}  // namespace cubicpm
