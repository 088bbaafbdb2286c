#include "hypercone/cone_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <unordered_set>

namespace hypercone {

namespace {

std::string located(const std::string& source, std::size_t line, std::size_t column,
                    const std::string& message) {
  return source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + message;
}

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number = 0;
  std::string text;
  std::vector<Token> tokens;
};

class LineReader {
 public:
  LineReader(std::istream& in, std::string source) : in_(in), source_(std::move(source)) {}

  /// Next non-blank, non-comment line; false at end of input.
  bool next(Line& line) {
    while (std::getline(in_, line.text)) {
      line.number = ++count_;
      if (!line.text.empty() && line.text.back() == '\r') line.text.pop_back();
      line.tokens.clear();
      const std::string& t = line.text;
      std::size_t k = 0;
      while (k < t.size()) {
        while (k < t.size() && std::isspace(static_cast<unsigned char>(t[k]))) ++k;
        if (k == t.size()) break;
        if (t[k] == '#') break;
        const std::size_t start = k;
        while (k < t.size() && !std::isspace(static_cast<unsigned char>(t[k])) && t[k] != '#') ++k;
        line.tokens.push_back({std::string_view(t).substr(start, k - start), start + 1});
      }
      if (!line.tokens.empty()) return true;
    }
    if (in_.bad()) throw InputError(source_ + ": read error");
    return false;
  }

  std::size_t lines_read() const { return count_; }
  const std::string& source() const { return source_; }

  [[noreturn]] void fail(std::size_t line, std::size_t column, const std::string& message) const {
    throw ParseError(source_, line, column, message);
  }

  std::int64_t integer(const Line& line, const Token& tok) const {
    std::int64_t value = 0;
    const char* first = tok.text.data();
    const char* last = first + tok.text.size();
    if (*first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range) fail(line.number, tok.column, "integer out of range: " + std::string(tok.text));
    if (ec != std::errc() || ptr != last) fail(line.number, tok.column, "expected an integer, got '" + std::string(tok.text) + "'");
    return value;
  }

  IntVector vector(const Line& line, Eigen::Index expected) const {
    if (static_cast<Eigen::Index>(line.tokens.size()) != expected) {
      const std::size_t column = static_cast<Eigen::Index>(line.tokens.size()) > expected
                                     ? line.tokens[static_cast<std::size_t>(expected)].column
                                     : line.text.size() + 1;
      fail(line.number, column, "expected " + std::to_string(expected) + " entries, found " +
                                    std::to_string(line.tokens.size()));
    }
    IntVector v(expected);
    for (Eigen::Index k = 0; k < expected; ++k) v(k) = integer(line, line.tokens[static_cast<std::size_t>(k)]);
    return v;
  }

 private:
  std::istream& in_;
  std::string source_;
  std::size_t count_ = 0;
};

struct Header {
  int n = 0;
  Eigen::Index dim = 0;
  std::size_t count = 0;
  char kind = 'H';
};

bool looks_like_header(const Line& line) {
  return line.tokens.size() == 4 && (line.tokens[3].text == "H" || line.tokens[3].text == "V");
}

Header parse_header(const LineReader& reader, const Line& line) {
  if (line.tokens.size() != 4) {
    reader.fail(line.number, 1, "header must be 'n dim count kind'");
  }
  Header h;
  const std::int64_t n = reader.integer(line, line.tokens[0]);
  const std::int64_t dim = reader.integer(line, line.tokens[1]);
  const std::int64_t count = reader.integer(line, line.tokens[2]);
  if (n < 2 || n > 64) reader.fail(line.number, line.tokens[0].column, "n must be in [2, 64]");
  if (dim != n * (n - 1) / 2) {
    reader.fail(line.number, line.tokens[1].column,
                "dim must be n(n-1)/2 = " + std::to_string(n * (n - 1) / 2));
  }
  if (count < 0) reader.fail(line.number, line.tokens[2].column, "count must be non-negative");
  const std::string_view kind = line.tokens[3].text;
  if (kind != "H" && kind != "V") reader.fail(line.number, line.tokens[3].column, "kind must be H or V");
  h.n = static_cast<int>(n);
  h.dim = static_cast<Eigen::Index>(dim);
  h.count = static_cast<std::size_t>(count);
  h.kind = kind[0];
  return h;
}

void write_rows(std::ostream& out, int n, Eigen::Index dim, std::size_t count, char kind,
                const IntMatrix& rows) {
  out << n << ' ' << dim << ' ' << count << ' ' << kind << '\n';
  for (Eigen::Index r = 0; r < rows.rows(); ++r) {
    for (Eigen::Index c = 0; c < rows.cols(); ++c) {
      if (c) out << ' ';
      out << rows(r, c);
    }
    out << '\n';
  }
}

}  // namespace

ParseError::ParseError(std::string source, std::size_t line, std::size_t column,
                       const std::string& message)
    : InputError(located(source, line, column, message)), line_(line), column_(column) {}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "' for reading");
  return in;
}

Cone read_cone(std::istream& in, const std::string& source) {
  LineReader reader(in, source);
  Line line;
  if (!reader.next(line)) reader.fail(reader.lines_read() + 1, 1, "missing header");
  const Header h = parse_header(reader, line);
  const std::size_t header_line = line.number;

  std::vector<IntVector> rows;
  std::vector<std::size_t> row_lines;
  rows.reserve(h.count);
  while (reader.next(line)) {
    if (rows.size() == h.count) {
      reader.fail(line.number, line.tokens.front().column,
                  "more than the " + std::to_string(h.count) + " vectors announced in the header");
    }
    rows.push_back(reader.vector(line, h.dim));
    row_lines.push_back(line.number);
  }
  if (rows.size() != h.count) {
    reader.fail(reader.lines_read() + 1, 1,
                "expected " + std::to_string(h.count) + " vectors (header on line " +
                    std::to_string(header_line) + "), found " + std::to_string(rows.size()));
  }

  // Semantic errors are reported against the offending line.
  const auto build = [&](auto tag) {
    using Element = decltype(tag);
    std::vector<Element> list;
    list.reserve(rows.size());
    std::unordered_set<IntVector, VectorHash, VectorEqual> seen;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      try {
        list.emplace_back(rows[k]);
      } catch (const std::invalid_argument& e) {
        reader.fail(row_lines[k], 1, e.what());
      }
      const IntVector& v = [&]() -> const IntVector& {
        if constexpr (std::is_same_v<Element, Inequality>) {
          return list.back().coeffs();
        } else {
          return list.back().coords();
        }
      }();
      if (!seen.insert(v).second) reader.fail(row_lines[k], 1, "repeats an earlier vector up to scaling");
    }
    return list;
  };
  if (h.kind == 'H') return HCone(h.n, build(Inequality(IntVector::Ones(h.dim))));
  return VCone(h.n, build(RayVector(IntVector::Ones(h.dim))));
}

Cone read_cone_file(const std::string& path) {
  std::ifstream in = open_input(path);
  return read_cone(in, path);
}

void write_cone(std::ostream& out, const HCone& c) {
  write_rows(out, c.points(), c.dim(), c.size(), 'H', c.matrix());
}

void write_cone(std::ostream& out, const VCone& c) {
  write_rows(out, c.points(), c.dim(), c.size(), 'V', c.matrix());
}

void write_cone(std::ostream& out, const Cone& c) {
  std::visit([&out](const auto& cone) { write_cone(out, cone); }, c);
}

IntVector read_vector(std::istream& in, const std::string& source) {
  LineReader reader(in, source);
  Line line;
  if (!reader.next(line)) reader.fail(reader.lines_read() + 1, 1, "empty input");
  IntVector v;
  if (looks_like_header(line)) {
    const Header h = parse_header(reader, line);
    if (h.count != 1) reader.fail(line.number, line.tokens[2].column, "expected exactly one vector");
    if (!reader.next(line)) reader.fail(reader.lines_read() + 1, 1, "missing vector");
    v = reader.vector(line, h.dim);
  } else {
    const auto size = static_cast<Eigen::Index>(line.tokens.size());
    int n = 2;
    while (n * (n - 1) / 2 < size) ++n;
    if (n * (n - 1) / 2 != size) {
      reader.fail(line.number, 1, std::to_string(size) + " entries is not a pair count n(n-1)/2");
    }
    v = reader.vector(line, size);
  }
  if (reader.next(line)) reader.fail(line.number, line.tokens.front().column, "trailing data after the vector");
  return v;
}

std::vector<BVector> read_bvectors(std::istream& in, const std::string& source) {
  LineReader reader(in, source);
  Line line;
  std::vector<BVector> out;
  Eigen::Index width = -1;
  while (reader.next(line)) {
    if (width < 0) width = static_cast<Eigen::Index>(line.tokens.size());
    IntVector v = reader.vector(line, width);
    try {
      out.emplace_back(std::move(v));
    } catch (const std::invalid_argument& e) {
      reader.fail(line.number, 1, e.what());
    }
  }
  return out;
}

SimpleGraph read_graph(std::istream& in, const std::string& source) {
  LineReader reader(in, source);
  Line line;
  if (!reader.next(line)) reader.fail(reader.lines_read() + 1, 1, "missing 'n m' header");
  if (line.tokens.size() != 2) reader.fail(line.number, 1, "header must be 'n m'");
  const std::int64_t n = reader.integer(line, line.tokens[0]);
  const std::int64_t m = reader.integer(line, line.tokens[1]);
  if (n < 1) reader.fail(line.number, line.tokens[0].column, "n must be positive");
  if (m < 0) reader.fail(line.number, line.tokens[1].column, "m must be non-negative");
  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<std::int64_t, std::int64_t>> seen;
  while (reader.next(line)) {
    if (static_cast<std::int64_t>(edges.size()) == m) {
      reader.fail(line.number, line.tokens.front().column, "more than the announced " + std::to_string(m) + " edges");
    }
    if (line.tokens.size() != 2) reader.fail(line.number, 1, "edge line must be 'i j'");
    const std::int64_t i = reader.integer(line, line.tokens[0]);
    const std::int64_t j = reader.integer(line, line.tokens[1]);
    if (i < 1 || i > n) reader.fail(line.number, line.tokens[0].column, "vertex out of range 1.." + std::to_string(n));
    if (j < 1 || j > n) reader.fail(line.number, line.tokens[1].column, "vertex out of range 1.." + std::to_string(n));
    if (i == j) reader.fail(line.number, line.tokens[1].column, "self-loop");
    if (!seen.insert({std::min(i, j), std::max(i, j)}).second) reader.fail(line.number, 1, "repeated edge");
    edges.emplace_back(static_cast<int>(i - 1), static_cast<int>(j - 1));
  }
  if (static_cast<std::int64_t>(edges.size()) != m) {
    reader.fail(reader.lines_read() + 1, 1, "expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  try {
    return SimpleGraph(static_cast<int>(n), edges);
  } catch (const std::invalid_argument& e) {
    reader.fail(line.number, 1, e.what());
  }
}

}  // namespace hypercone
