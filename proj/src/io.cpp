#include "steinersurf/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "steinersurf/error.hpp"

namespace steinersurf {

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  bool done() {
    skip();
    return pos_ >= text_.size();
  }

  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char ch) {
    if (peek() != ch) fail(std::string("expected '") + ch + "'");
    advance();
  }

  bool accept(char ch) {
    if (peek() != ch) return false;
    advance();
    return true;
  }

  long number() {
    skip();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected a positive integer");
    long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 100000000) fail("vertex label too large");
      advance();
    }
    return v;
  }

  // reads a bare token up to whitespace or '['
  std::string token() {
    skip();
    std::string t;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != '[') {
      t += text_[pos_];
      advance();
    }
    return t;
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, col_, msg); }
  int line() const { return line_; }
  int column() const { return col_; }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip() {
    while (pos_ < text_.size()) {
      char ch = text_[pos_];
      if (ch == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(ch))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

}  // namespace

SimplicialComplex parse_facet_text(std::string_view text) {
  Scanner sc(text);
  if (sc.done()) sc.fail("empty input");
  std::string name;
  if (sc.peek() != '[') {
    // "name=X" or the "label=[[...]]" form used by published libraries
    auto t = sc.token();
    auto eq = t.find('=');
    if (eq == std::string::npos || eq == 0) sc.fail("expected '[' or name=");
    if (t.rfind("name=", 0) == 0)
      name = t.substr(5);
    else if (eq + 1 == t.size())
      name = t.substr(0, eq);
    else
      sc.fail("expected '[' after " + t.substr(0, eq + 1));
  }
  int line = sc.line(), col = sc.column();
  sc.expect('[');
  std::vector<Facet> facets;
  if (!sc.accept(']')) {
    do {
      sc.expect('[');
      Facet f;
      if (sc.peek() == ']') sc.fail("empty facet");
      do {
        long v = sc.number();
        if (v <= 0) sc.fail("vertex labels must be positive");
        f.push_back(static_cast<Vertex>(v));
      } while (sc.accept(','));
      sc.expect(']');
      facets.push_back(std::move(f));
    } while (sc.accept(','));
    sc.expect(']');
  }
  if (!sc.done()) sc.fail("trailing characters after facet list");
  if (facets.empty()) throw ParseError(line, col, "facet list is empty");
  try {
    return SimplicialComplex(std::move(facets), name);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(line, col, e.what());
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

SimplicialComplex read_facet_file(const std::string& path) { return parse_facet_text(read_text_file(path)); }

std::string format_facet_text(const SimplicialComplex& k, const std::vector<std::string>& header) {
  std::ostringstream os;
  for (const auto& h : header) os << "# " << h << '\n';
  if (!k.name().empty()) os << "name=" << k.name() << '\n';
  os << "[";
  for (std::size_t i = 0; i < k.facets().size(); ++i) {
    os << (i ? ",\n " : "") << "[";
    const auto& f = k.facets()[i];
    for (std::size_t j = 0; j < f.size(); ++j) os << (j ? "," : "") << f[j];
    os << "]";
  }
  os << "]\n";
  return os.str();
}

void write_facet_file(const std::string& path, const SimplicialComplex& k, const std::vector<std::string>& header) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  out << format_facet_text(k, header);
}

std::string format_coloring_text(const std::map<Vertex, int>& assignment, const std::vector<std::string>& header) {
  std::ostringstream os;
  for (const auto& h : header) os << "# " << h << '\n';
  for (const auto& [v, c] : assignment) os << v << '\t' << c << '\n';
  return os.str();
}

std::map<Vertex, int> parse_coloring_text(std::string_view text) {
  std::map<Vertex, int> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    long v = 0, c = 0;
    if (!(ls >> v >> c) || v <= 0 || c <= 0) throw ParseError(lineno, static_cast<int>(first) + 1, "expected 'vertex<TAB>color'");
    std::string rest;
    if (ls >> rest) throw ParseError(lineno, static_cast<int>(first) + 1, "trailing text on coloring line");
    if (!out.emplace(static_cast<Vertex>(v), static_cast<int>(c)).second)
      throw ParseError(lineno, static_cast<int>(first) + 1, "vertex colored twice");
  }
  return out;
}

}  // namespace steinersurf
