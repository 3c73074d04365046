#include <cctype>
#include <limits>

#include "liftable/dataset.hpp"
#include "liftable/error.hpp"

namespace liftable {

namespace {

class DataSetParser {
 public:
  explicit DataSetParser(std::string_view text) : text_(text) {}

  DataSet parse() {
    skip_ws();
    expect('(');
    const std::int64_t n = integer("degree n");
    expect(',');
    const std::int64_t g0 = integer("orbifold genus g0");
    expect(';');
    std::vector<BranchPair> pairs;
    skip_ws();
    if (peek() != ')') {
      while (true) {
        const std::size_t at = pos_;
        expect('(');
        const std::int64_t d = integer("rotation datum d");
        expect(',');
        const std::int64_t order = integer("branch order");
        expect(')');
        std::int64_t repeat = 1;
        skip_ws();
        if (peek() == '_') {
          ++pos_;
          repeat = integer("repetition count");
          if (repeat < 1) fail("repetition count must be positive", at);
        }
        for (std::int64_t r = 0; r < repeat; ++r) pairs.push_back({d, order});
        skip_ws();
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        break;
      }
    }
    expect(')');
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input", pos_);
    try {
      return DataSet(n, g0, std::move(pairs));
    } catch (const DomainError& e) {
      fail(e.what(), 0);
    }
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(msg, line, col);
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) {
      fail(std::string("expected '") + c + "'" + (pos_ < text_.size() ? std::string(", found '") + peek() + "'" : ", found end of input"), pos_);
    }
    ++pos_;
  }

  std::int64_t integer(const char* what) {
    skip_ws();
    const std::size_t start = pos_;
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      ++pos_;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail(std::string("expected ") + what, start);
    std::int64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      if (v > (std::numeric_limits<std::int64_t>::max() - 9) / 10) fail("integer too large", start);
      v = v * 10 + (peek() - '0');
      ++pos_;
    }
    return negative ? -v : v;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

DataSet parse_dataset(std::string_view text) { return DataSetParser(text).parse(); }

std::string format_dataset(const DataSet& d) {
  std::string s = "(" + std::to_string(d.degree()) + "," + std::to_string(d.orbifold_genus()) + ";";
  for (std::size_t i = 0; i < d.pairs().size(); ++i) {
    if (i) s += ",";
    s += "(" + std::to_string(d.pairs()[i].d) + "," + std::to_string(d.pairs()[i].order) + ")";
  }
  return s + ")";
}

}  // namespace liftable
