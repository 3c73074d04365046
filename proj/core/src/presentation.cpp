#include "liftable/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "liftable/error.hpp"

namespace liftable {

namespace {

bool valid_name(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char ch) { return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'; });
}

void check_word(const Word& w, std::size_t num_gens, std::string_view what) {
  if (w.max_generator() >= static_cast<int>(num_gens)) {
    throw DomainError(std::string(what) + " references an undeclared generator");
  }
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Presentation presentation() {
    expect('<');
    skip_ws();
    if (peek() == '1' && !name_char(peek_at(1))) {
      ++pos_;
    } else if (peek() != '|' && peek() != '>') {
      while (true) {
        const std::size_t at = pos_;
        std::string nm = name();
        if (std::find(gens_.begin(), gens_.end(), nm) != gens_.end()) fail("duplicate generator " + nm, at);
        gens_.push_back(std::move(nm));
        if (!accept(',')) break;
      }
    }
    std::vector<Word> rels;
    std::vector<SymbolicRelator> sym;
    if (accept('|')) {
      skip_ws();
      if (peek() != '>') {
        do relation(rels, sym);
        while (accept(','));
      }
    }
    expect('>');
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input", pos_);
    return Presentation(gens_, std::move(rels), std::move(sym));
  }

  Word standalone_word(std::vector<std::string> gens) {
    gens_ = std::move(gens);
    Word w = word();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input", pos_);
    return w;
  }

 private:
  struct Side {
    Word word;
    std::optional<std::pair<int, std::string>> symbolic;
  };

  void relation(std::vector<Word>& rels, std::vector<SymbolicRelator>& sym) {
    std::vector<Side> sides{side()};
    while (accept('=')) sides.push_back(side());
    if (sides.size() == 1) {
      if (sides[0].symbolic) fail("symbolic power needs an equation", pos_);
      rels.push_back(sides[0].word);
      return;
    }
    for (std::size_t i = 0; i + 1 < sides.size(); ++i) {
      const Side& a = sides[i];
      const Side& b = sides[i + 1];
      if (a.symbolic && b.symbolic) fail("both sides are symbolic powers", pos_);
      if (b.symbolic) {
        sym.push_back({a.word, b.symbolic->first, b.symbolic->second});
      } else if (a.symbolic) {
        sym.push_back({b.word, a.symbolic->first, a.symbolic->second});
      } else {
        rels.push_back(a.word * b.word.inverse());
      }
    }
  }

  Side side() {
    skip_ws();
    const std::size_t save = pos_;
    if (name_start(peek())) {
      std::string nm = name();
      skip_ws();
      if (peek() == '^' && peek_next_nonws(pos_ + 1) == '{') {
        ++pos_;
        skip_ws();
        ++pos_;
        skip_ws();
        std::string symbol = name();
        expect('}');
        skip_ws();
        if (peek() == ',' || peek() == '>' || peek() == '=' || peek() == '\0') {
          return {Word{}, std::make_pair(lookup(nm, save), std::move(symbol))};
        }
        fail("symbolic power must be a whole side of a relation", pos_);
      }
      pos_ = save;
    }
    return {word(), std::nullopt};
  }

  Word word() {
    Word w = factor();
    while (accept('*')) w = w * factor();
    return w;
  }

  Word factor() {
    Word base = atom();
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      if (peek() == '{') fail("symbolic exponent is only allowed on a whole side of a relation", pos_);
      base = base.pow(static_cast<int>(integer()));
    }
    return base;
  }

  Word atom() {
    skip_ws();
    const std::size_t at = pos_;
    const char ch = peek();
    if (ch == '(') {
      ++pos_;
      Word w = word();
      expect(')');
      return w;
    }
    if (ch == '[') {
      ++pos_;
      Word a = word();
      expect(',');
      Word b = word();
      expect(']');
      return a * b * a.inverse() * b.inverse();
    }
    if (ch == '1' && !name_char(peek_at(1))) {
      ++pos_;
      return {};
    }
    if (name_start(ch)) {
      std::string nm = name();
      return Word::power_of(lookup(nm, at), 1);
    }
    fail("expected a generator, '1', '(' or '['", at);
  }

  int lookup(const std::string& nm, std::size_t at) const {
    const auto it = std::find(gens_.begin(), gens_.end(), nm);
    if (it == gens_.end()) fail("unknown generator " + nm, at);
    return static_cast<int>(it - gens_.begin());
  }

  long long integer() {
    skip_ws();
    const std::size_t at = pos_;
    bool neg = false;
    if (peek() == '-' || peek() == '+') {
      neg = peek() == '-';
      ++pos_;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer exponent", at);
    long long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > 1'000'000) fail("exponent too large", at);
      ++pos_;
    }
    return neg ? -v : v;
  }

  std::string name() {
    skip_ws();
    const std::size_t at = pos_;
    if (!name_start(peek())) fail("expected a generator name", at);
    while (name_char(peek())) ++pos_;
    return std::string(text_.substr(at, pos_ - at));
  }

  static bool name_start(char ch) { return std::isalpha(static_cast<unsigned char>(ch)) || ch == '_'; }
  static bool name_char(char ch) { return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'; }

  char peek() const { return peek_at(0); }
  char peek_at(std::size_t off) const { return pos_ + off < text_.size() ? text_[pos_ + off] : '\0'; }
  char peek_next_nonws(std::size_t p) const {
    while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
    return p < text_.size() ? text_[p] : '\0';
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char ch) {
    skip_ws();
    if (peek() != ch) return false;
    ++pos_;
    return true;
  }
  void expect(char ch) {
    if (!accept(ch)) fail(std::string("expected '") + ch + "'", pos_);
  }

  [[noreturn]] void fail(const std::string& what, std::size_t at) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(what, line, col);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<std::string> gens_;
};

// w = U V U^-1 V^-1 with |U| + |V| = |w| / 2.
std::optional<std::pair<Word, Word>> as_commutator(const Word& w) {
  const auto& ls = w.letters();
  if (ls.size() < 4 || ls.size() % 2 != 0) return std::nullopt;
  const std::size_t half = ls.size() / 2;
  for (std::size_t u = 1; u < half; ++u) {
    const Word a(std::vector<Letter>(ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(u)));
    const Word b(std::vector<Letter>(ls.begin() + static_cast<std::ptrdiff_t>(u), ls.begin() + static_cast<std::ptrdiff_t>(half)));
    if (a.length() + b.length() == half && a * b * a.inverse() * b.inverse() == w) return std::make_pair(a, b);
  }
  return std::nullopt;
}

}  // namespace

Presentation::Presentation(std::vector<std::string> generators, std::vector<Word> relators,
                           std::vector<SymbolicRelator> symbolic)
    : generators_(std::move(generators)), relators_(std::move(relators)), symbolic_(std::move(symbolic)) {
  std::set<std::string> seen;
  for (const auto& g : generators_) {
    if (!valid_name(g)) throw DomainError("invalid generator name '" + g + "'");
    if (!seen.insert(g).second) throw DomainError("duplicate generator name '" + g + "'");
  }
  for (const auto& r : relators_) check_word(r, generators_.size(), "relator");
  for (const auto& s : symbolic_) {
    check_word(s.word, generators_.size(), "symbolic relator");
    if (s.gen < 0 || s.gen >= static_cast<int>(generators_.size())) throw DomainError("symbolic power of an undeclared generator");
    if (!valid_name(s.symbol)) throw DomainError("invalid exponent symbol '" + s.symbol + "'");
  }
}

int Presentation::generator_index(std::string_view name) const {
  const auto it = std::find(generators_.begin(), generators_.end(), name);
  return it == generators_.end() ? -1 : static_cast<int>(it - generators_.begin());
}

Word Presentation::parse_word(std::string_view text) const { return Parser(text).standalone_word(generators_); }

std::string format_relator(const Word& w, std::span<const std::string> names) {
  if (w.empty()) return "1 = 1";
  if (const auto c = as_commutator(w)) {
    return "[" + format_word(c->first, names) + "," + format_word(c->second, names) + "] = 1";
  }
  const auto& ls = w.letters();
  const auto split = std::find_if(ls.begin(), ls.end(), [](const Letter& l) { return l.exp < 0; });
  if (split != ls.begin() && split != ls.end() &&
      std::all_of(split, ls.end(), [](const Letter& l) { return l.exp < 0; })) {
    const Word p(std::vector<Letter>(ls.begin(), split));
    const Word n(std::vector<Letter>(split, ls.end()));
    return format_word(p, names) + " = " + format_word(n.inverse(), names);
  }
  return format_word(w, names) + " = 1";
}

std::string Presentation::to_string() const {
  if (generators_.empty()) return "<1>";
  std::string s = "<";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) s += ", ";
    s += generators_[i];
  }
  s += " | ";
  bool first = true;
  for (const auto& r : relators_) {
    if (!first) s += ", ";
    first = false;
    s += format_relator(r, generators_);
  }
  for (const auto& sr : symbolic_) {
    if (!first) s += ", ";
    first = false;
    s += format_word(sr.word, generators_) + " = " + generators_[static_cast<std::size_t>(sr.gen)] + "^{" + sr.symbol + "}";
  }
  return s + ">";
}

Presentation Presentation::renamed(const std::map<std::string, std::string>& names) const {
  auto gens = generators_;
  for (auto& g : gens) {
    if (const auto it = names.find(g); it != names.end()) g = it->second;
  }
  return Presentation(std::move(gens), relators_, symbolic_);
}

Presentation parse_presentation(std::string_view text) { return Parser(text).presentation(); }

bool same_relator_set(const Presentation& a, const Presentation& b) {
  if (a.num_generators() != b.num_generators()) return false;
  std::vector<int> to_a(b.num_generators());
  for (std::size_t i = 0; i < b.num_generators(); ++i) {
    to_a[i] = a.generator_index(b.generators()[i]);
    if (to_a[i] < 0) return false;
  }
  const auto remap = [&](const Word& w) {
    std::vector<Letter> ls = w.letters();
    for (auto& l : ls) l.gen = to_a[static_cast<std::size_t>(l.gen)];
    return Word(std::move(ls));
  };
  std::set<Word> ra, rb;
  for (const auto& r : a.relators()) {
    if (auto c = canonical_relator(r); !c.empty()) ra.insert(std::move(c));
  }
  for (const auto& r : b.relators()) {
    if (auto c = canonical_relator(remap(r)); !c.empty()) rb.insert(std::move(c));
  }
  if (ra != rb) return false;
  using Sym = std::tuple<Word, int, std::string>;
  std::set<Sym> sa, sb;
  for (const auto& s : a.symbolic_relators()) sa.emplace(s.word, s.gen, s.symbol);
  for (const auto& s : b.symbolic_relators()) sb.emplace(remap(s.word), to_a[static_cast<std::size_t>(s.gen)], s.symbol);
  return sa == sb;
}

std::string Abelianization::to_string() const {
  std::vector<std::string> parts;
  if (free_rank == 1) parts.emplace_back("Z");
  if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
  for (const auto& t : torsion) parts.push_back("Z_" + t.str());
  if (parts.empty()) return "0";
  std::string s = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) s += " ⊕ " + parts[i];
  return s;
}

Abelianization abelianization(const Presentation& p) {
  if (p.has_symbolic()) throw DomainError("abelianization needs numeric relators; symbolic exponents are unresolved");
  const std::size_t cols = p.num_generators();
  IntMatrix m(p.relators().size(), cols);
  for (std::size_t r = 0; r < p.relators().size(); ++r) {
    const auto sums = p.relators()[r].exponent_sums(cols);
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = sums[c];
  }
  const SmithForm snf = smith_normal_form(std::move(m));
  Abelianization out;
  out.free_rank = snf.free_rank;
  for (const auto& d : snf.invariant_factors) {
    if (d > 1) out.torsion.push_back(d);
  }
  return out;
}

}  // namespace liftable
