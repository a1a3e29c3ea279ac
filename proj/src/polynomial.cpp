#include "bicm/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "bicm/error.hpp"

namespace bicm {

namespace {

const MonomialOrder kDefaultOrder = MonomialOrder::grevlex();

bool term_greater(const Term& a, const Term& b) {
  return kDefaultOrder.greater(a.monomial, b.monomial);
}

// Merge of two descending term lists: a + sign * b.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b,
                              bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    const int c = kDefaultOrder.compare(a[i].monomial, b[j].monomial);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(subtract ? Term{b[j].monomial, -b[j].coefficient} : b[j]);
      ++j;
    } else {
      FieldElement s = subtract ? a[i].coefficient - b[j].coefficient
                                : a[i].coefficient + b[j].coefficient;
      if (!s.is_zero()) out.push_back(Term{a[i].monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    out.push_back(subtract ? Term{b[j].monomial, -b[j].coefficient} : b[j]);
  }
  return out;
}

}  // namespace

BigradedRing::BigradedRing(int m, int n, Field field) : m_(m), n_(n), field_(field) {
  if (m < 0 || n < 1) {
    throw Error(ErrorKind::InvalidArgument,
                "ring needs m >= 0 and n >= 1, got m=" + std::to_string(m) +
                    " n=" + std::to_string(n));
  }
  if (m + n > 60) throw Error(ErrorKind::InvalidArgument, "at most 60 variables supported");
}

std::string BigradedRing::variable_name(std::size_t index) const {
  if (is_x(index)) return "x" + std::to_string(index + 1);
  return "y" + std::to_string(index - static_cast<std::size_t>(m_) + 1);
}

std::optional<std::size_t> BigradedRing::variable_index(std::string_view name) const {
  if (name.size() < 2 || (name[0] != 'x' && name[0] != 'y')) return std::nullopt;
  if (name[1] == '0') return std::nullopt;
  long k = 0;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
    k = k * 10 + (name[i] - '0');
    if (k > 1000) return std::nullopt;
  }
  if (name[0] == 'x') {
    if (k > m_) return std::nullopt;
    return static_cast<std::size_t>(k - 1);
  }
  if (k > n_) return std::nullopt;
  return static_cast<std::size_t>(m_ + k - 1);
}

BiDegree bidegree_of(const BigradedRing& ring, const Monomial& mono) {
  const auto m = static_cast<std::size_t>(ring.m());
  return {mono.partial_degree(0, m), mono.partial_degree(m, mono.size())};
}

Polynomial::Polynomial(BigradedRing ring) : ring_(std::move(ring)) {}

Polynomial::Polynomial(BigradedRing ring, std::vector<Term> sorted_terms)
    : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}

Polynomial Polynomial::constant(const BigradedRing& ring, const FieldElement& c) {
  return term(ring, Monomial(ring.nvars()), c);
}

Polynomial Polynomial::constant(const BigradedRing& ring, long c) {
  return constant(ring, FieldElement::from_integer(ring.field(), c));
}

Polynomial Polynomial::variable(const BigradedRing& ring, std::size_t index) {
  if (index >= ring.nvars()) throw Error(ErrorKind::InvalidArgument, "variable index out of range");
  return term(ring, Monomial::variable(ring.nvars(), index), FieldElement::one(ring.field()));
}

Polynomial Polynomial::x(const BigradedRing& ring, int i) {
  if (i < 1 || i > ring.m()) throw Error(ErrorKind::InvalidArgument, "no variable x" + std::to_string(i));
  return variable(ring, static_cast<std::size_t>(i - 1));
}

Polynomial Polynomial::y(const BigradedRing& ring, int j) {
  if (j < 1 || j > ring.n()) throw Error(ErrorKind::InvalidArgument, "no variable y" + std::to_string(j));
  return variable(ring, static_cast<std::size_t>(ring.m() + j - 1));
}

Polynomial Polynomial::term(const BigradedRing& ring, Monomial mono, FieldElement c) {
  if (mono.size() != ring.nvars()) throw Error(ErrorKind::RingMismatch, "monomial length mismatch");
  if (!(c.field() == ring.field())) throw Error(ErrorKind::RingMismatch, "coefficient field mismatch");
  Polynomial p(ring);
  if (!c.is_zero()) p.terms_.push_back(Term{std::move(mono), std::move(c)});
  return p;
}

Polynomial Polynomial::from_terms(const BigradedRing& ring, std::vector<Term> terms) {
  std::map<Monomial, FieldElement> acc;
  for (auto& t : terms) {
    if (t.monomial.size() != ring.nvars()) throw Error(ErrorKind::RingMismatch, "monomial length mismatch");
    auto [it, inserted] = acc.try_emplace(t.monomial, t.coefficient);
    if (!inserted) it->second += t.coefficient;
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [mono, c] : acc) {
    if (!c.is_zero()) out.push_back(Term{mono, c});
  }
  std::sort(out.begin(), out.end(), term_greater);
  return Polynomial(ring, std::move(out));
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_one());
}

std::uint32_t Polynomial::total_degree() const noexcept {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

FieldElement Polynomial::coefficient(const Monomial& mono) const {
  for (const auto& t : terms_) {
    if (t.monomial == mono) return t.coefficient;
  }
  return FieldElement::zero(ring_.field());
}

bool Polynomial::is_bihomogeneous() const noexcept {
  if (terms_.empty()) return false;
  const BiDegree d = bidegree_of(ring_, terms_.front().monomial);
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return bidegree_of(ring_, t.monomial) == d; });
}

BiDegree Polynomial::bidegree() const {
  if (terms_.empty()) throw Error(ErrorKind::ZeroPolynomial, "bidegree of the zero polynomial");
  if (!is_bihomogeneous()) {
    throw Error(ErrorKind::NotBihomogeneous, to_string() + " is not bihomogeneous");
  }
  return bidegree_of(ring_, terms_.front().monomial);
}

bool Polynomial::uses_only_x() const noexcept {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return bidegree_of(ring_, t.monomial).b == 0; });
}

bool Polynomial::uses_only_y() const noexcept {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return bidegree_of(ring_, t.monomial).a == 0; });
}

void Polynomial::check_ring(const Polynomial& other) const {
  if (!(ring_ == other.ring_)) throw Error(ErrorKind::RingMismatch, "polynomials from different rings");
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coefficient = -t.coefficient;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  check_ring(rhs);
  terms_ = merge_terms(terms_, rhs.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  check_ring(rhs);
  terms_ = merge_terms(terms_, rhs.terms_, true);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_ring(b);
  Polynomial result(a.ring_);
  if (a.is_zero() || b.is_zero()) return result;
  const Polynomial& small = a.size() <= b.size() ? a : b;
  const Polynomial& large = a.size() <= b.size() ? b : a;
  for (const auto& t : small.terms_) {
    std::vector<Term> row;
    row.reserve(large.terms_.size());
    for (const auto& u : large.terms_) {
      row.push_back(Term{t.monomial * u.monomial, t.coefficient * u.coefficient});
    }
    result.terms_ = merge_terms(result.terms_, row, false);
  }
  return result;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

Polynomial Polynomial::scaled(const FieldElement& c) const {
  if (c.is_zero()) return Polynomial(ring_);
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coefficient *= c;
  return r;
}

Polynomial Polynomial::times_monomial(const Monomial& mono) const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.monomial = t.monomial * mono;
  return r;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(terms_.front().coefficient.inverse());
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!(a.ring_ == b.ring_) || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].monomial == b.terms_[i].monomial) ||
        !(a.terms_[i].coefficient == b.terms_[i].coefficient)) {
      return false;
    }
  }
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    FieldElement c = t.coefficient;
    bool negative = false;
    if (ring_.field().is_rational() && sgn(c.to_rational()) < 0) {
      negative = true;
      c = -c;
    }
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < t.monomial.size(); ++i) {
      const std::uint32_t e = t.monomial[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_.variable_name(i);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += c.to_string();
    } else if (c.is_one()) {
      out += mono;
    } else {
      out += c.to_string() + "*" + mono;
    }
  }
  return out;
}

Polynomial Polynomial::remap(const BigradedRing& target,
                             const std::vector<std::size_t>& new_index) const {
  if (!(target.field() == ring_.field())) throw Error(ErrorKind::RingMismatch, "field mismatch in remap");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::vector<std::uint32_t> e(target.nvars(), 0);
    for (std::size_t i = 0; i < t.monomial.size(); ++i) {
      if (t.monomial[i] == 0) continue;
      if (i >= new_index.size() || new_index[i] >= target.nvars()) {
        throw Error(ErrorKind::RingMismatch, "variable " + ring_.variable_name(i) + " has no image");
      }
      e[new_index[i]] += t.monomial[i];
    }
    out.push_back(Term{Monomial(std::move(e)), t.coefficient});
  }
  return from_terms(target, std::move(out));
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class PolyParser {
 public:
  PolyParser(const BigradedRing& ring, std::string_view text, int line, int column_offset)
      : ring_(ring), text_(text), line_(line), offset_(column_offset) {}

  Polynomial parse_all() {
    Polynomial p = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

  std::vector<Polynomial> parse_list() {
    std::vector<Polynomial> out;
    skip_space();
    if (pos_ == text_.size()) return out;
    out.push_back(expression());
    skip_space();
    while (pos_ < text_.size() && text_[pos_] == ',') {
      ++pos_;
      out.push_back(expression());
      skip_space();
    }
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& message, ErrorKind kind = ErrorKind::Parse) const {
    throw ParseError(kind, message, line_, offset_ + static_cast<int>(pos_) + 1);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expression() {
    skip_space();
    Polynomial acc(ring_);
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    Polynomial t = product();
    acc = negate ? -t : t;
    for (;;) {
      if (accept('+')) {
        acc += product();
      } else if (accept('-')) {
        acc -= product();
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial product() {
    Polynomial acc = power();
    while (accept('*')) acc *= power();
    return acc;
  }

  Polynomial power() {
    Polynomial base = atom();
    if (accept('^')) {
      skip_space();
      const mpz_class e = integer();
      if (e > 1000) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  mpz_class integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  Polynomial atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == '-') {
      ++pos_;
      return -power();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num = integer();
      mpz_class den = 1;
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        den = integer();
        if (den == 0) fail("zero denominator");
      }
      try {
        return Polynomial::constant(ring_, FieldElement::from_rational(ring_.field(), mpq_class(num, den)));
      } catch (const Error& e) {
        fail(e.what(), ErrorKind::Semantic);
      }
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      const auto index = ring_.variable_index(name);
      if (!index) {
        pos_ = start;
        fail("unknown variable '" + std::string(name) + "' for ring m=" + std::to_string(ring_.m()) +
                 " n=" + std::to_string(ring_.n()),
             ErrorKind::Semantic);
      }
      return Polynomial::variable(ring_, *index);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const BigradedRing& ring_;
  std::string_view text_;
  int line_;
  int offset_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const BigradedRing& ring, std::string_view text, int line,
                            int column_offset) {
  return PolyParser(ring, text, line, column_offset).parse_all();
}

std::vector<Polynomial> parse_polynomial_list(const BigradedRing& ring, std::string_view text,
                                              int line, int column_offset) {
  return PolyParser(ring, text, line, column_offset).parse_list();
}

}  // namespace bicm
