#include "malcev/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "malcev/error.hpp"

namespace malcev {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    ++number;
    std::string_view raw = text.substr(pos, end - pos);
    if (auto hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    std::istringstream in{std::string(raw)};
    Line line{number, {}};
    std::string token;
    while (in >> token) {
      line.tokens.push_back(token);
    }
    if (!line.tokens.empty()) {
      out.push_back(std::move(line));
    }
    pos = end + 1;
  }
  return out;
}

class Reader {
 public:
  explicit Reader(std::vector<Line> lines) : lines_(std::move(lines)) {}

  bool done() const { return next_ == lines_.size(); }

  Line const& peek() const {
    if (done()) {
      fail_at(last_line(), "unexpected end of input");
    }
    return lines_[next_];
  }

  Line const& take() {
    Line const& l = peek();
    ++next_;
    return l;
  }

  [[noreturn]] static void fail_at(std::size_t line, std::string const& why) {
    throw ParseError(line, why);
  }

  std::size_t last_line() const { return lines_.empty() ? 1 : lines_.back().number; }

 private:
  std::vector<Line> lines_;
  std::size_t next_ = 0;
};

std::size_t number(Line const& line, std::string const& token) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    Reader::fail_at(line.number, "expected a number, got \"" + token + "\"");
  }
  return value;
}

void expect_size(Line const& line, std::size_t count) {
  if (line.tokens.size() != count) {
    Reader::fail_at(line.number, "expected " + std::to_string(count) + " entries, got " +
                                     std::to_string(line.tokens.size()));
  }
}

FiniteSemigroup build(Line const& where, auto const& fn) {
  try {
    return fn();
  } catch (ParseError const&) {
    throw;
  } catch (Error const& e) {
    Reader::fail_at(where.number, e.what());
  }
}

FiniteSemigroup cayley_body(Reader& r, Line const& header) {
  expect_size(header, 2);
  std::size_t order = number(header, header.tokens[1]);
  if (order == 0) {
    Reader::fail_at(header.number, "order must be positive");
  }
  std::vector<ElementId> table;
  table.reserve(order * order);
  for (std::size_t row = 0; row < order; ++row) {
    Line const& line = r.take();
    expect_size(line, order);
    for (auto const& t : line.tokens) {
      std::size_t v = number(line, t);
      if (v >= order) {
        Reader::fail_at(line.number, "entry " + t + " out of range");
      }
      table.push_back(static_cast<ElementId>(v));
    }
  }
  std::optional<ElementId> zero;
  std::optional<ElementId> identity;
  std::vector<std::string> names;
  while (!r.done()) {
    Line const& line = r.peek();
    auto const& key = line.tokens[0];
    if (key == "zero" || key == "identity") {
      r.take();
      expect_size(line, 2);
      std::size_t v = number(line, line.tokens[1]);
      if (v >= order) {
        Reader::fail_at(line.number, key + " out of range");
      }
      (key == "zero" ? zero : identity) = static_cast<ElementId>(v);
    } else if (key == "names") {
      r.take();
      expect_size(line, order + 1);
      names.assign(line.tokens.begin() + 1, line.tokens.end());
      if (std::set<std::string>(names.begin(), names.end()).size() != order) {
        Reader::fail_at(line.number, "names are not distinct");
      }
    } else {
      break;
    }
  }
  return build(header, [&] {
    return FiniteSemigroup::from_table(order, std::move(table), zero, identity, std::move(names));
  });
}

FiniteSemigroup transformations_body(Reader& r, Line const& header) {
  expect_size(header, 2);
  std::size_t degree = number(header, header.tokens[1]);
  if (degree == 0 || degree > Transformation::kMaxDegree) {
    Reader::fail_at(header.number, "degree out of range");
  }
  std::vector<Transformation> gens;
  while (!r.done()) {
    Line const& line = r.take();
    expect_size(line, degree);
    std::vector<int> images;
    for (auto const& t : line.tokens) {
      std::size_t v = number(line, t);
      if (v > degree) {
        Reader::fail_at(line.number, "image " + t + " out of range");
      }
      images.push_back(static_cast<int>(v));
    }
    gens.push_back(Transformation::from_images(images));
  }
  if (gens.empty()) {
    Reader::fail_at(header.number, "no generators");
  }
  return build(header, [&] { return from_transformations(gens); });
}

FiniteSemigroup rees_body(Reader& r, Line const& header, bool with_zero) {
  expect_size(header, 3);
  std::size_t n = number(header, header.tokens[1]);
  std::size_t m = number(header, header.tokens[2]);
  if (n == 0 || m == 0) {
    Reader::fail_at(header.number, "index sets must be non-empty");
  }
  Line const& group_line = r.take();
  if (group_line.tokens != std::vector<std::string>{"group"}) {
    Reader::fail_at(group_line.number, "expected \"group\"");
  }
  Line const& inner = r.take();
  if (inner.tokens[0] != "cayley") {
    Reader::fail_at(inner.number, "expected a cayley block");
  }
  ReesMatrixSpec spec{cayley_body(r, inner), n, m, {}, with_zero};
  for (std::size_t lambda = 0; lambda < m; ++lambda) {
    Line const& line = r.take();
    expect_size(line, n);
    for (auto const& t : line.tokens) {
      std::size_t v = number(line, t);
      if (v > spec.group.order()) {
        Reader::fail_at(line.number, "sandwich entry " + t + " out of range");
      }
      if (v == 0 && !with_zero) {
        Reader::fail_at(line.number, "θ entry in a rees matrix without zero");
      }
      spec.sandwich.push_back(v == 0 ? std::nullopt
                                     : std::optional<ElementId>(static_cast<ElementId>(v - 1)));
    }
  }
  return build(header, [&] { return from_rees(spec); });
}

bool is_token(std::string const& name) {
  if (name.empty()) {
    return false;
  }
  for (char c : name) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '#') {
      return false;
    }
  }
  return true;
}

}  // namespace

FiniteSemigroup parse_sgp(std::string_view text) {
  Reader r(tokenize(text));
  Line const& header = r.take();
  auto const& kind = header.tokens[0];
  FiniteSemigroup out = [&] {
    if (kind == "cayley") {
      return cayley_body(r, header);
    }
    if (kind == "transformations") {
      return transformations_body(r, header);
    }
    if (kind == "rees0" || kind == "rees") {
      return rees_body(r, header, kind == "rees0");
    }
    Reader::fail_at(header.number, "unknown header \"" + kind + "\"");
  }();
  if (!r.done()) {
    Reader::fail_at(r.peek().number, "trailing input");
  }
  return out;
}

FiniteSemigroup read_sgp(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::InvalidArgument, "cannot open " + path);
  }
  std::ostringstream text;
  text << in.rdbuf();
  return parse_sgp(text.str());
}

std::string write_sgp(FiniteSemigroup const& s) {
  std::ostringstream out;
  std::size_t n = s.order();
  out << "cayley " << n << '\n';
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = 0; b < n; ++b) {
      out << (b ? " " : "") << s(a, b);
    }
    out << '\n';
  }
  if (auto z = s.zero()) {
    out << "zero " << *z << '\n';
  }
  if (auto e = s.identity()) {
    out << "identity " << *e << '\n';
  }
  auto const& names = s.names();
  if (names.size() == n && std::all_of(names.begin(), names.end(), is_token)) {
    out << "names";
    for (auto const& name : names) {
      out << ' ' << name;
    }
    out << '\n';
  }
  return out.str();
}

void write_sgp_file(FiniteSemigroup const& s, std::string const& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
  }
  out << write_sgp(s);
  if (!out) {
    throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
  }
}

}  // namespace malcev
