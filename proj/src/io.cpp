#include "qshell/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include "qshell/errors.hpp"

namespace qshell {

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

std::string strip(std::string s) {
  if (auto hash = s.find('#'); hash != std::string::npos) s.erase(hash);
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

int parse_int(std::string_view tok, int line) {
  while (!tok.empty() && (tok.front() == ' ' || tok.front() == '\t')) tok.remove_prefix(1);
  while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\t')) tok.remove_suffix(1);
  int v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) fail(line, "expected an integer, got '" + std::string(tok) + "'");
  return v;
}

// Reads lines, keeping numbers and blank-ness after comment stripping.
struct LineReader {
  std::istream& in;
  int number = 0;

  std::optional<std::string> next() {
    std::string raw;
    if (!std::getline(in, raw)) return std::nullopt;
    ++number;
    return strip(raw);
  }
};

Ambient read_header(LineReader& reader) {
  while (auto line = reader.next()) {
    if (line->empty()) continue;
    std::istringstream ss(*line);
    std::string a, b, extra;
    ss >> a >> b;
    if (!(ss >> extra) && a.rfind("q=", 0) == 0 && b.rfind("n=", 0) == 0) {
      const int q = parse_int(std::string_view(a).substr(2), reader.number);
      const int n = parse_int(std::string_view(b).substr(2), reader.number);
      if (n < 1) fail(reader.number, "n must be positive");
      try {
        return Ambient(q, n);
      } catch (const std::invalid_argument& e) {
        fail(reader.number, e.what());
      }
    }
    fail(reader.number, "expected header 'q=<q> n=<n>'");
  }
  throw ParseError("missing header 'q=<q> n=<n>'");
}

Elem parse_entry(std::string_view tok, const Ambient& amb, int line) {
  const int v = parse_int(tok, line);
  if (v < 0 || v >= amb.q()) fail(line, "entry " + std::to_string(v) + " outside [0, " + std::to_string(amb.q()) + ")");
  return static_cast<Elem>(v);
}

Vector parse_row(const std::vector<std::string_view>& toks, const Ambient& amb, int line) {
  if (static_cast<int>(toks.size()) != amb.n())
    fail(line, "row has " + std::to_string(toks.size()) + " entries, expected " + std::to_string(amb.n()));
  std::vector<Elem> v;
  for (auto t : toks) v.push_back(parse_entry(t, amb, line));
  return Vector(std::move(v));
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t b = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > b) out.push_back(s.substr(b, i - b));
  }
  return out;
}

}  // namespace

SubspaceList parse_subspace_list(std::istream& in) {
  LineReader reader{in};
  SubspaceList out{read_header(reader), {}};
  std::vector<Vector> block;
  auto flush = [&] {
    if (!block.empty()) out.subspaces.push_back(out.ambient.span(block));
    block.clear();
  };
  while (auto line = reader.next()) {
    if (line->empty()) {
      flush();
      continue;
    }
    block.push_back(parse_row(split_ws(*line), out.ambient, reader.number));
  }
  flush();
  return out;
}

SubspaceList read_subspace_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return parse_subspace_list(in);
}

void write_subspace_list(std::ostream& out, const Ambient& amb, const std::vector<Subspace>& subspaces) {
  out << "q=" << amb.q() << " n=" << amb.n() << "\n";
  for (const auto& s : subspaces) {
    out << "\n";
    if (s.is_zero()) {
      for (int c = 0; c < amb.n(); ++c) out << (c ? " " : "") << 0;
      out << "\n";
    }
    for (int i = 0; i < s.dim(); ++i) {
      const auto row = s.row(i);
      for (int c = 0; c < amb.n(); ++c) out << (c ? " " : "") << static_cast<int>(row[c]);
      out << "\n";
    }
  }
}

RankOracle parse_rank_table(std::istream& in, std::size_t max_subspaces) {
  LineReader reader{in};
  Ambient amb = read_header(reader);
  auto index = std::make_shared<const SubspaceIndex>(amb, max_subspaces);
  std::vector<int> ranks(index->size(), -1);
  while (auto line = reader.next()) {
    if (line->empty()) continue;
    const auto bar = line->find('|');
    if (bar == std::string::npos || line->find('|', bar + 1) != std::string::npos) fail(reader.number, "expected '<basis> | <rank>'");
    const std::string_view lhs = std::string_view(*line).substr(0, bar);
    const int rank = parse_int(std::string_view(*line).substr(bar + 1), reader.number);
    if (rank < 0) fail(reader.number, "negative rank");

    Subspace s = amb.zero();
    const auto lhs_toks = split_ws(lhs);
    if (!(lhs_toks.size() == 1 && lhs_toks[0] == "0" && amb.n() > 1)) {
      std::vector<Vector> rows;
      for (auto r : split(lhs, ';')) rows.push_back(parse_row(split(r, ','), amb, reader.number));
      s = amb.span(rows);
      const bool all_zero = rows.size() == 1 && rows[0].is_zero();
      if (!all_zero && s.dim() != static_cast<int>(rows.size())) fail(reader.number, "rows are linearly dependent");
    }
    const std::size_t id = index->id(s);
    if (ranks[id] >= 0) fail(reader.number, "subspace listed twice");
    ranks[id] = rank;
  }
  std::size_t missing = 0;
  for (int r : ranks) missing += r < 0;
  if (missing) throw ParseError("rank table omits " + std::to_string(missing) + " subspace(s)");
  return RankOracle(std::move(index), std::move(ranks));
}

RankOracle read_rank_table(const std::string& path, std::size_t max_subspaces) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return parse_rank_table(in, max_subspaces);
}

std::string format_vector(const Vector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(static_cast<int>(v[i]));
  }
  return out;
}

std::string format_subspace(const Subspace& s) {
  if (s.is_zero()) return "0";
  std::string out;
  for (int i = 0; i < s.dim(); ++i) {
    if (i) out += ';';
    out += format_vector(s.row_vector(i));
  }
  return out;
}

void write_rank_table(std::ostream& out, const RankOracle& m) {
  out << "q=" << m.ambient().q() << " n=" << m.ambient().n() << "\n";
  for (std::size_t id = 0; id < m.index().size(); ++id) out << format_subspace(m.index().at(id)) << " | " << m.rank_at(id) << "\n";
}

}  // namespace qshell
