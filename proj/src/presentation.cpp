#include "admiss/presentation.hpp"

#include <cctype>
#include <numeric>

#include "admiss/numtheory.hpp"

namespace admiss {

std::string to_string(PresentationMode mode) {
  switch (mode) {
    case PresentationMode::abstract_finite:
      return "abstract-finite";
    case PresentationMode::pro_p:
      return "pro-p";
    case PresentationMode::pro_prime_to_2:
      return "pro-prime-to-2";
  }
  return "?";
}

void Presentation::validate() const {
  if (mode == PresentationMode::pro_p && !is_prime(p))
    throw InputError("pro-p presentation needs a prime p, got " + std::to_string(p));
  if (!torsion.empty() && torsion.size() != generators.size())
    throw InputError("torsion constraints must list one entry per generator");
  for (const auto& t : torsion)
    if (t && *t == 0) throw InputError("torsion bound must be positive");
  for (const auto& r : relators) {
    auto m = r.max_generator();
    if (m && *m >= generators.size()) throw InputError("relator uses an undeclared generator");
  }
}

std::vector<std::optional<std::uint64_t>> Presentation::effective_torsion() const {
  std::vector<std::optional<std::uint64_t>> out(generators.size());
  for (std::size_t k = 0; k < torsion.size() && k < out.size(); ++k) out[k] = torsion[k];
  for (const auto& r : relators) {
    auto gp = r.as_generator_power();
    if (!gp || gp->first >= out.size()) continue;
    auto bound = static_cast<std::uint64_t>(gp->second < 0 ? -gp->second : gp->second);
    out[gp->first] = out[gp->first] ? std::gcd(*out[gp->first], bound) : bound;
  }
  return out;
}

std::string Presentation::to_string() const {
  std::string out = "<";
  for (std::size_t k = 0; k < generators.size(); ++k) out += (k ? "," : "") + generators[k];
  out += " | ";
  for (std::size_t k = 0; k < relators.size(); ++k) out += (k ? ", " : "") + relators[k].to_string(generators);
  return out + ">";
}

Presentation free_presentation(std::size_t rank, PresentationMode mode, std::uint32_t p) {
  Presentation pr;
  for (std::size_t k = 0; k < rank; ++k) pr.generators.push_back("x" + std::to_string(k + 1));
  pr.mode = mode;
  pr.p = p;
  pr.validate();
  return pr;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::vector<std::string>& names, bool allow_new)
      : text_(text), names_(names), allow_new_(allow_new) {}

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  // relation := expr ('=' expr)?
  Word relation() {
    Word lhs = expr();
    if (accept('=')) {
      Word rhs = expr();
      return Word::product({lhs, rhs.inverse()});
    }
    return lhs;
  }

  std::string identifier() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (start == pos_ || std::isdigit(static_cast<unsigned char>(text_[start]))) fail("expected a generator name");
    return std::string(text_.substr(start, pos_ - start));
  }

  [[noreturn]] void fail(const std::string& what) {
    throw InputError("cannot parse '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + what);
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool starts_atom() {
    char c = peek();
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '(' || c == '[' || c == '1';
  }

  // expr := term (('*')? term)*
  Word expr() {
    std::vector<Word> factors;
    factors.push_back(term());
    while (true) {
      if (accept('*')) {
        factors.push_back(term());
        continue;
      }
      if (!starts_atom()) break;
      factors.push_back(term());
    }
    return Word::product(std::move(factors));
  }

  // term := atom ('^' (integer | atom))*
  Word term() {
    Word w = atom();
    while (accept('^')) {
      char c = peek();
      if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) {
        w = Word::power(std::move(w), integer());
      } else {
        w = w.conjugated_by(atom());
      }
    }
    return w;
  }

  std::int64_t integer() {
    skip_space();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string digits(text_.substr(start, pos_ - start));
    try {
      return std::stoll(digits);
    } catch (const std::exception&) {
      fail("expected an integer exponent");
    }
  }

  Word atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Word w = expr();
      expect(')');
      return w;
    }
    if (c == '[') {
      ++pos_;
      Word acc = expr();
      expect(',');
      acc = Word::commutator(std::move(acc), expr());
      while (accept(',')) acc = Word::commutator(std::move(acc), expr());
      expect(']');
      return acc;
    }
    if (c == '1') {
      ++pos_;
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("unexpected integer");
      return Word::identity();
    }
    std::string name = identifier();
    for (std::size_t k = 0; k < names_.size(); ++k)
      if (names_[k] == name) return Word::generator(k);
    if (!allow_new_) fail("unknown generator '" + name + "'");
    names_.push_back(name);
    return Word::generator(names_.size() - 1);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<std::string>& names_;
  bool allow_new_;
};

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

Word parse_word(std::string_view text, const std::vector<std::string>& generators) {
  std::vector<std::string> names = generators;
  Parser parser(text, names, false);
  Word w = parser.relation();
  if (!parser.at_end()) parser.fail("trailing input");
  return w;
}

Presentation parse_presentation(std::string_view text, PresentationMode mode, std::uint32_t p) {
  std::string s = trim(text);
  if (s.rfind("free:", 0) == 0) {
    std::int64_t rank = -1;
    try {
      std::size_t used = 0;
      rank = std::stoll(s.substr(5), &used);
      if (used != s.size() - 5) rank = -1;
    } catch (const std::exception&) {
    }
    if (rank < 0) throw InputError("free presentation needs a nonnegative rank: '" + s + "'");
    return free_presentation(static_cast<std::size_t>(rank), mode, p);
  }

  Presentation pr;
  pr.mode = mode;
  pr.p = p;
  if (!s.empty() && s.front() == '<') {
    if (s.back() != '>') throw InputError("presentation must end with '>'");
    std::string body = s.substr(1, s.size() - 2);
    auto bar = body.find('|');
    std::string gens = body.substr(0, bar);
    std::size_t pos = 0;
    while (pos <= gens.size()) {
      auto comma = gens.find(',', pos);
      std::string name = trim(gens.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
      if (!name.empty()) {
        std::vector<std::string> probe;
        Parser check(name, probe, true);
        if (check.identifier() != name) throw InputError("bad generator name '" + name + "'");
        for (const auto& existing : pr.generators)
          if (existing == name) throw InputError("duplicate generator '" + name + "'");
        pr.generators.push_back(name);
      } else if (comma != std::string::npos) {
        throw InputError("empty generator name");
      }
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (bar != std::string::npos) {
      std::string rels = body.substr(bar + 1);
      Parser parser(rels, pr.generators, false);
      if (!parser.at_end()) {
        pr.relators.push_back(parser.relation());
        while (parser.accept(',')) pr.relators.push_back(parser.relation());
        if (!parser.at_end()) parser.fail("trailing input");
      }
    }
  } else {
    Parser parser(s, pr.generators, true);
    if (!parser.at_end()) {
      pr.relators.push_back(parser.relation());
      while (parser.accept(';')) pr.relators.push_back(parser.relation());
      if (!parser.at_end()) parser.fail("trailing input");
    }
  }
  pr.validate();
  return pr;
}

}  // namespace admiss
