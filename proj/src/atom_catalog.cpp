#include "genuskit/atom_catalog.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <string>

#include "genuskit/finite_ring.hpp"
#include "genuskit/order_genus.hpp"

namespace genuskit {

namespace {

constexpr std::int64_t kNuOrder = 24;

int min_dim(AtomKind kind) {
  return (kind == AtomKind::AtomA || kind == AtomKind::ChangEtaSq) ? 4 : 2;
}

void require(bool cond, const std::string& message) {
  if (!cond) throw InvalidArgument("atom: " + message);
}

}  // namespace

Atom Atom::sphere(int n) { return {AtomKind::Sphere, n, 0, 0}; }
Atom Atom::moore(int a, int n) { return {AtomKind::Moore, n, a, 0}; }
Atom Atom::chang_full(int r, int s, int n) { return {AtomKind::ChangFull, n, r, s}; }
Atom Atom::chang_r_eta(int r, int n) { return {AtomKind::ChangREta, n, r, 0}; }
Atom Atom::chang_eta_s(int s, int n) { return {AtomKind::ChangEtaS, n, s, 0}; }
Atom Atom::chang_eta(int n) { return {AtomKind::ChangEta, n, 0, 0}; }
Atom Atom::chang_eta_sq(int n) { return {AtomKind::ChangEtaSq, n, 0, 0}; }
Atom Atom::atom_a(int v, int n) { return {AtomKind::AtomA, n, v, 0}; }

void validate(const Atom& atom) {
  require(atom.top_dim >= min_dim(atom.kind),
          "dimension " + std::to_string(atom.top_dim) + " too small for " + to_string(atom));
  switch (atom.kind) {
    case AtomKind::Sphere:
    case AtomKind::ChangEta:
    case AtomKind::ChangEtaSq:
      require(atom.first == 0 && atom.second == 0, "unexpected parameters");
      break;
    case AtomKind::Moore:
      require(atom.first >= 2 && atom.second == 0, "Moore atom needs a >= 2");
      break;
    case AtomKind::ChangFull:
      require(atom.first >= 1 && atom.second >= 1, "C(2^r.eta.2^s) needs r, s >= 1");
      break;
    case AtomKind::ChangREta:
    case AtomKind::ChangEtaS:
      require(atom.first >= 1 && atom.second == 0, "Chang exponent must be >= 1");
      break;
    case AtomKind::AtomA:
      require(atom.first > 0 && atom.first <= 12 && atom.second == 0,
              "A(v) needs 0 < v <= 12, got v = " + std::to_string(atom.first));
      break;
  }
}

std::string to_string(const Atom& atom) {
  const std::string at = "@" + std::to_string(atom.top_dim);
  switch (atom.kind) {
    case AtomKind::Sphere:
      return "S" + std::to_string(atom.top_dim);
    case AtomKind::Moore:
      return "M(" + std::to_string(atom.first) + ")" + at;
    case AtomKind::ChangFull:
      return "C(2^" + std::to_string(atom.first) + ".eta.2^" + std::to_string(atom.second) + ")" +
             at;
    case AtomKind::ChangREta:
      return "C(2^" + std::to_string(atom.first) + ".eta)" + at;
    case AtomKind::ChangEtaS:
      return "C(eta.2^" + std::to_string(atom.first) + ")" + at;
    case AtomKind::ChangEta:
      return "C(eta)" + at;
    case AtomKind::ChangEtaSq:
      return "C(eta2)" + at;
    case AtomKind::AtomA:
      return "A(" + std::to_string(atom.first) + ")" + at;
  }
  return "?";
}

// --- parsing ----------------------------------------------------------------

AtomParseError::AtomParseError(std::string token, std::size_t position, const std::string& message)
    : InvalidArgument("atom parse error at position " + std::to_string(position) + " near '" +
                      token + "': " + message),
      token_(std::move(token)),
      position_(position) {}

namespace {

class AtomParser {
 public:
  explicit AtomParser(std::string_view text) : text_(text) {}

  Atom parse() {
    if (text_.empty()) fail("expected an atom name");
    Atom atom;
    const char head = text_[pos_];
    if (head == 'S') {
      ++pos_;
      atom = Atom::sphere(integer());
    } else if (head == 'M') {
      ++pos_;
      expect("(");
      int a = integer();
      expect(")");
      atom = Atom::moore(a, suffix());
    } else if (head == 'A') {
      ++pos_;
      expect("(");
      int v = integer();
      expect(")");
      atom = Atom::atom_a(v, suffix());
    } else if (head == 'C') {
      ++pos_;
      expect("(");
      atom = chang_body();
      expect(")");
      atom.top_dim = suffix();
    } else {
      fail("expected one of S, M, C, A");
    }
    if (pos_ != text_.size()) fail("unexpected trailing input");
    try {
      validate(atom);
    } catch (const InvalidArgument& e) {
      throw AtomParseError(std::string(text_), 0, e.what());
    }
    return atom;
  }

 private:
  Atom chang_body() {
    if (accept("eta2")) return Atom::chang_eta_sq(0);
    if (accept("eta")) {
      if (accept(".")) {
        expect("2^");
        return Atom::chang_eta_s(integer(), 0);
      }
      return Atom::chang_eta(0);
    }
    expect("2^");
    int r = integer();
    expect(".");
    expect("eta");
    if (accept(".")) {
      expect("2^");
      int s = integer();
      return Atom::chang_full(r, s, 0);
    }
    return Atom::chang_r_eta(r, 0);
  }

  int suffix() {
    expect("@");
    return integer();
  }

  bool accept(std::string_view lit) {
    if (text_.substr(pos_, lit.size()) == lit) {
      pos_ += lit.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view lit) {
    if (!accept(lit)) fail("expected '" + std::string(lit) + "'");
  }

  int integer() {
    std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    int value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc() || ptr != text_.data() + pos_ || pos_ == start) {
      pos_ = start;
      fail("expected an integer");
    }
    return value;
  }

  [[noreturn]] void fail(const std::string& message) const {
    std::size_t end = pos_;
    while (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) ++end;
    if (end == pos_ && end < text_.size()) ++end;
    std::string token = pos_ < text_.size() ? std::string(text_.substr(pos_, end - pos_))
                                            : std::string("<end of input>");
    throw AtomParseError(token, pos_, message);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Atom parse_atom(std::string_view text) { return AtomParser(text).parse(); }

// --- catalog data -----------------------------------------------------------

std::string to_string(const EndoDescription& endo) {
  switch (endo.variant) {
    case EndoDescription::Variant::Torsion:
      return "torsion";
    case EndoDescription::Variant::Integers:
      return "Z";
    case EndoDescription::Variant::Pullback:
      return "Z x_" + std::to_string(endo.level) + " Z";
  }
  return "?";
}

std::vector<int> rational_wedge(const Atom& atom) {
  validate(atom);
  const int n = atom.top_dim;
  switch (atom.kind) {
    case AtomKind::Sphere:
      return {n};
    case AtomKind::Moore:
    case AtomKind::ChangFull:
      return {};
    case AtomKind::ChangREta:
      // 2^r kills S^{n-1} rationally; the S^n summand is coned off to S^{n+1}.
      return {n + 1};
    case AtomKind::ChangEtaS:
      return {n - 1};
    case AtomKind::ChangEta:
      return {n - 1, n + 1};
    case AtomKind::ChangEtaSq:
      return {n - 2, n + 1};
    case AtomKind::AtomA:
      return {n - 3, n + 1};
  }
  return {};
}

bool is_torsion(const Atom& atom) {
  validate(atom);
  return atom.kind == AtomKind::Moore || atom.kind == AtomKind::ChangFull;
}

EndoDescription endo_order(const Atom& atom) {
  validate(atom);
  using V = EndoDescription::Variant;
  switch (atom.kind) {
    case AtomKind::Moore:
    case AtomKind::ChangFull:
      return {V::Torsion, 0};
    case AtomKind::Sphere:
    case AtomKind::ChangREta:
    case AtomKind::ChangEtaS:
      return {V::Integers, 0};
    case AtomKind::ChangEta:
    case AtomKind::ChangEtaSq:
      return {V::Pullback, 2};
    case AtomKind::AtomA:
      return {V::Pullback, kNuOrder / gcd(atom.first, kNuOrder)};
  }
  return {V::Integers, 0};
}

std::int64_t genus_of_atom(const Atom& atom, std::size_t cap) {
  const auto endo = endo_order(atom);
  if (endo.variant != EndoDescription::Variant::Pullback) return 1;
  return genus(pullback_spec(endo.level), cap).total;
}

bool same_genus(const Atom& a, const Atom& b) {
  validate(a);
  validate(b);
  if (a == b) return true;
  return a.kind == AtomKind::AtomA && b.kind == AtomKind::AtomA && a.top_dim == b.top_dim &&
         gcd(a.first, kNuOrder) == gcd(b.first, kNuOrder);
}

std::pair<std::vector<Atom>, std::vector<Atom>> torsion_split(const std::vector<Atom>& atoms) {
  std::pair<std::vector<Atom>, std::vector<Atom>> out;
  for (const auto& a : atoms) (is_torsion(a) ? out.first : out.second).push_back(a);
  return out;
}

std::vector<int> b0_of_wedge(const std::vector<Atom>& atoms) {
  std::vector<int> dims;
  for (const auto& a : atoms) {
    auto w = rational_wedge(a);
    dims.insert(dims.end(), w.begin(), w.end());
  }
  std::sort(dims.begin(), dims.end());
  return dims;
}

}  // namespace genuskit
