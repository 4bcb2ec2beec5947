#include "repring/presentation.hpp"

#include <algorithm>
#include <sstream>

#include "repring/errors.hpp"

namespace repring {

Poly Poly::constant(int ngens, const Int& c) {
  Poly p;
  if (c != 0) p.terms[std::vector<int>(ngens, 0)] = c;
  return p;
}

Poly Poly::generator(int ngens, int index) {
  Poly p;
  std::vector<int> e(ngens, 0);
  e[index] = 1;
  p.terms[e] = 1;
  return p;
}

Poly Poly::operator+(const Poly& o) const {
  Poly out = *this;
  for (const auto& [e, c] : o.terms) {
    Int& slot = out.terms[e];
    slot += c;
    if (slot == 0) out.terms.erase(e);
  }
  return out;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& [e, c] : out.terms) c = -c;
  return out;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  Poly out;
  for (const auto& [e1, c1] : terms) {
    for (const auto& [e2, c2] : o.terms) {
      std::vector<int> e(e1.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
      Int& slot = out.terms[e];
      slot += c1 * c2;
      if (slot == 0) out.terms.erase(e);
    }
  }
  return out;
}

Poly Poly::pow(long e) const {
  int ngens = terms.empty() ? 0 : static_cast<int>(terms.begin()->first.size());
  Poly out = Poly::constant(ngens, 1);
  for (long i = 0; i < e; ++i) out = out * *this;
  return out;
}

bool Poly::is_zero() const { return terms.empty(); }

int Poly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms) {
    int t = 0;
    for (int x : e) t += x;
    d = std::max(d, t);
  }
  return d;
}

std::string Poly::to_string(const std::vector<std::string>& gens) const {
  if (terms.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms) {
    Int abs = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    bool has_var = false;
    for (size_t i = 0; i < e.size(); ++i) has_var = has_var || e[i] > 0;
    if (abs != 1 || !has_var) out << abs.get_str();
    bool star = abs != 1;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (star) out << "*";
      out << gens[i];
      if (e[i] > 1) out << "^" << e[i];
      star = true;
    }
  }
  return out.str();
}

namespace {

struct Token {
  enum class Kind { Ident, Number, Punct, End };
  Kind kind;
  std::string text;
  size_t pos;
};

bool is_ident_start(unsigned char c) { return std::isalpha(c) || c == '_' || c >= 0x80; }
bool is_ident_char(unsigned char c) { return std::isalnum(c) || c == '_' || c >= 0x80; }

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < s.size()) {
    unsigned char c = s[i];
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    if (std::isdigit(c)) {
      size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::Kind::Number, s.substr(i, j - i), i});
      i = j;
      continue;
    }
    if (is_ident_start(c)) {
      size_t j = i;
      while (j < s.size() && is_ident_char(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::Kind::Ident, s.substr(i, j - i), i});
      i = j;
      continue;
    }
    static const std::string punct = "[](),;/=+-*^";
    if (punct.find(static_cast<char>(c)) != std::string::npos) {
      out.push_back({Token::Kind::Punct, std::string(1, static_cast<char>(c)), i});
      ++i;
      continue;
    }
    throw input_error("presentation syntax error at position " + std::to_string(i) +
                      ": unexpected character");
  }
  out.push_back({Token::Kind::End, "", s.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : tokens_(tokenize(text)) {}

  // document := 'ring' 'Z' '[' idents ']' '/' relation (';' relation)* ';'?
  void parse_document(std::vector<std::string>& gens, std::vector<std::vector<Poly>>& chains) {
    expect_ident("ring");
    expect_ident("Z");
    expect_punct("[");
    gens.push_back(expect_any_ident());
    while (peek_punct(",")) {
      next();
      gens.push_back(expect_any_ident());
    }
    expect_punct("]");
    for (size_t i = 0; i < gens.size(); ++i)
      for (size_t j = i + 1; j < gens.size(); ++j)
        if (gens[i] == gens[j]) throw input_error("duplicate generator name \"" + gens[i] + "\"");
    gens_ = &gens;
    expect_punct("/");
    chains.push_back(parse_relation());
    while (peek_punct(";")) {
      next();
      if (peek().kind == Token::Kind::End) break;  // trailing semicolon
      chains.push_back(parse_relation());
    }
    if (peek().kind != Token::Kind::End)
      throw input_error(err_here("expected ';' or end of presentation"));
  }

 private:
  std::vector<Token> tokens_;
  size_t at_ = 0;
  const std::vector<std::string>* gens_ = nullptr;

  const Token& peek() const { return tokens_[at_]; }
  const Token& next() { return tokens_[at_++]; }

  std::string err_here(const std::string& what) const {
    return "presentation syntax error at position " + std::to_string(peek().pos) + ": " + what;
  }

  void expect_ident(const std::string& word) {
    if (peek().kind != Token::Kind::Ident || peek().text != word)
      throw input_error(err_here("expected \"" + word + "\""));
    next();
  }

  std::string expect_any_ident() {
    if (peek().kind != Token::Kind::Ident) throw input_error(err_here("expected a generator name"));
    return next().text;
  }

  void expect_punct(const std::string& p) {
    if (peek().kind != Token::Kind::Punct || peek().text != p)
      throw input_error(err_here("expected \"" + p + "\""));
    next();
  }

  bool peek_punct(const std::string& p) const {
    return peek().kind == Token::Kind::Punct && peek().text == p;
  }

  int ngens() const { return static_cast<int>(gens_->size()); }

  // relation := poly ('=' poly)+
  std::vector<Poly> parse_relation() {
    std::vector<Poly> sides{parse_poly()};
    if (!peek_punct("=")) throw input_error(err_here("expected '=' in relation"));
    while (peek_punct("=")) {
      next();
      sides.push_back(parse_poly());
    }
    return sides;
  }

  // poly := ['-'] term (('+'|'-') term)*
  Poly parse_poly() {
    bool negate = false;
    if (peek_punct("-")) {
      next();
      negate = true;
    }
    Poly acc = parse_term();
    if (negate) acc = -acc;
    while (peek_punct("+") || peek_punct("-")) {
      bool sub = peek().text == "-";
      next();
      Poly t = parse_term();
      acc = sub ? acc - t : acc + t;
    }
    return acc;
  }

  // term := factor ('*' factor)*
  Poly parse_term() {
    Poly acc = parse_factor();
    while (peek_punct("*")) {
      next();
      acc = acc * parse_factor();
    }
    return acc;
  }

  // factor := atom ('^' number)?
  Poly parse_factor() {
    Poly base = parse_atom();
    if (peek_punct("^")) {
      next();
      if (peek().kind != Token::Kind::Number) throw input_error(err_here("expected an exponent"));
      const std::string& digits = next().text;
      if (digits.size() > 4) throw input_error("exponent too large: " + digits);
      base = base.pow(std::stol(digits));
    }
    return base;
  }

  // atom := number | ident | '(' poly ')'
  Poly parse_atom() {
    if (peek().kind == Token::Kind::Number) return Poly::constant(ngens(), Int(next().text));
    if (peek().kind == Token::Kind::Ident) {
      const Token& t = next();
      for (int i = 0; i < ngens(); ++i)
        if ((*gens_)[i] == t.text) return Poly::generator(ngens(), i);
      throw input_error("presentation syntax error at position " + std::to_string(t.pos) +
                        ": unknown generator \"" + t.text + "\"");
    }
    if (peek_punct("(")) {
      next();
      Poly inner = parse_poly();
      expect_punct(")");
      return inner;
    }
    throw input_error(err_here("expected a number, generator, or '('"));
  }
};

// Degree-2 rewrite-rule shape test: exactly one quadratic monomial with
// coefficient +-1, nothing above degree 2. Returns the pair and the affine
// right-hand side when the relation fits.
std::optional<std::pair<std::pair<int, int>, IntVec>> as_rewrite_rule(const Poly& p, int ngens) {
  std::optional<std::pair<int, int>> pair;
  Int quad_coeff = 0;
  IntVec affine = IntVec::Zero(ngens + 1);  // constant first, then generators
  for (const auto& [e, c] : p.terms) {
    int deg = 0;
    for (int x : e) deg += x;
    if (deg > 2) return std::nullopt;
    if (deg == 2) {
      if (pair) return std::nullopt;  // two quadratic monomials
      int a = -1, b = -1;
      for (int i = 0; i < ngens; ++i) {
        if (e[i] == 2) a = b = i;
        if (e[i] == 1) (a < 0 ? a : b) = i;
      }
      if (c != 1 && c != -1) return std::nullopt;
      pair = std::make_pair(std::min(a, b), std::max(a, b));
      quad_coeff = c;
    } else if (deg == 1) {
      for (int i = 0; i < ngens; ++i)
        if (e[i] == 1) affine(i + 1) = c;
    } else {
      affine(0) = c;
    }
  }
  if (!pair) return std::nullopt;
  // quad_coeff * x_a x_b + affine = 0, so x_a x_b = -affine / quad_coeff.
  for (int i = 0; i <= ngens; ++i) affine(i) = quad_coeff == 1 ? Int(-affine(i)) : affine(i);
  return std::make_pair(*pair, affine);
}

}  // namespace

RingPresentation parse_presentation(const std::string& text) {
  RingPresentation out;
  out.text = text;
  std::vector<std::vector<Poly>> chains;
  Parser parser(text);
  parser.parse_document(out.generators, chains);
  const int ngens = static_cast<int>(out.generators.size());

  // A chain p1 = ... = pk contributes p_i - p_k = 0 for each i < k.
  for (const auto& chain : chains)
    for (size_t i = 0; i + 1 < chain.size(); ++i)
      out.relations.push_back(chain[i] - chain.back());

  // univariate-quotient: one generator, one monic relation.
  if (ngens == 1 && out.relations.size() == 1) {
    const Poly& p = out.relations[0];
    int d = p.total_degree();
    if (d >= 1) {
      std::vector<Int> coeffs(d + 1, Int(0));
      for (const auto& [e, c] : p.terms) coeffs[e[0]] = c;
      if (coeffs[d] == 1) {
        out.kind = RingPresentation::Kind::UnivariateQuotient;
        out.monic = std::move(coeffs);
        return out;
      }
    }
  }

  // linear-closed: every relation rewrites one quadratic monomial to an
  // affine combination, and every unordered generator pair gets one rule.
  bool linear_closed = true;
  for (const Poly& p : out.relations) {
    auto rule = as_rewrite_rule(p, ngens);
    if (!rule) {
      linear_closed = false;
      break;
    }
    auto [pair, affine] = *rule;
    auto [it, inserted] = out.rules.emplace(pair, affine);
    if (!inserted) {
      bool same = it->second == affine;
      throw input_error(std::string("inconsistent double rule for ") + out.generators[pair.first] +
                        "*" + out.generators[pair.second] +
                        (same ? " (duplicate relation)" : " (contradictory relations)"));
    }
  }
  if (linear_closed) {
    for (int i = 0; i < ngens; ++i)
      for (int j = i; j < ngens; ++j)
        if (!out.rules.count({i, j})) {
          linear_closed = false;
          break;
        }
  }
  if (!linear_closed)
    throw input_error(
        "unclassifiable presentation kind: neither a monic univariate quotient nor a "
        "linear-closed rule system");
  out.kind = RingPresentation::Kind::LinearClosed;
  return out;
}

IntVec RingModel::multiply(const IntVec& a, const IntVec& b) const {
  const int n = rank();
  IntVec out = IntVec::Zero(n);
  for (int i = 0; i < n; ++i) {
    if (a(i) == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (b(j) == 0) continue;
      Int f = a(i) * b(j);
      for (int k = 0; k < n; ++k) out(k) += f * sc[i](j, k);
    }
  }
  return out;
}

RingModel build_model(const RingPresentation& p) {
  RingModel model;
  const int ngens = static_cast<int>(p.generators.size());

  if (p.kind == RingPresentation::Kind::UnivariateQuotient) {
    const int d = static_cast<int>(p.monic.size()) - 1;
    model.basis_labels.push_back("1");
    for (int i = 1; i < d; ++i) {
      std::string l = p.generators[0];
      if (i > 1) l += "^" + std::to_string(i);
      model.basis_labels.push_back(l);
    }
    // Powers of the generator up to 2d-2, reduced by the monic relation.
    std::vector<IntVec> pw(2 * d - 1, IntVec::Zero(d));
    pw[0](0) = 1;
    for (int j = 1; j <= 2 * d - 2; ++j) {
      IntVec prev = pw[j - 1];
      IntVec cur = IntVec::Zero(d);
      for (int i = 0; i + 1 < d; ++i) cur(i + 1) = prev(i);
      Int head = prev(d - 1);
      if (head != 0)
        for (int i = 0; i < d; ++i) cur(i) -= head * p.monic[i];
      pw[j] = cur;
    }
    model.sc.assign(d, IntMat::Zero(d, d));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) model.sc[i](j, k) = pw[i + j](k);
  } else {
    const int n = ngens + 1;
    model.basis_labels.push_back("1");
    for (const auto& g : p.generators) model.basis_labels.push_back(g);
    for (int i = 0; i < ngens; ++i)
      for (int j = i; j < ngens; ++j)
        if (!p.rules.count({i, j}))
          throw input_error("linear-closed presentation is missing a rule for " +
                            p.generators[i] + "*" + p.generators[j]);
    model.sc.assign(n, IntMat::Zero(n, n));
    for (int j = 0; j < n; ++j) {
      model.sc[0](j, j) = 1;  // 1 * b_j = b_j
      model.sc[j](0, j) = 1;
    }
    for (int i = 1; i < n; ++i)
      for (int j = 1; j < n; ++j) {
        const IntVec& affine = p.rules.at({std::min(i, j) - 1, std::max(i, j) - 1});
        for (int k = 0; k < n; ++k) model.sc[i](j, k) = affine(k);
      }
  }

  // Black-box re-verification: commutativity, unit, associativity.
  const int n = model.rank();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (model.sc[i](j, k) != model.sc[j](i, k))
          throw math_check_error("ring model is not commutative at (" + model.basis_labels[i] +
                                 "," + model.basis_labels[j] + ")");
  for (int i = 0; i < n; ++i) {
    IntVec e = IntVec::Zero(n);
    e(i) = 1;
    IntVec u = IntVec::Zero(n);
    u(model.unit_index) = 1;
    if (model.multiply(u, e) != e)
      throw math_check_error("ring model unit law fails at " + model.basis_labels[i]);
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        IntVec ei = IntVec::Zero(n), ej = IntVec::Zero(n), ek = IntVec::Zero(n);
        ei(i) = 1;
        ej(j) = 1;
        ek(k) = 1;
        IntVec lhs = model.multiply(model.multiply(ei, ej), ek);
        IntVec rhs = model.multiply(ei, model.multiply(ej, ek));
        if (lhs != rhs)
          throw math_check_error("associativity violation at witness triple (" +
                                 model.basis_labels[i] + "," + model.basis_labels[j] + "," +
                                 model.basis_labels[k] + ")");
      }
  return model;
}

bool certified(const CertifyResult& r) { return std::holds_alternative<IsoCertificate>(r); }

namespace {

// Evaluates a polynomial at the given ring elements, in ring coordinates.
IntVec eval_poly_in_ring(const Poly& p, const RFRing& ring, const std::vector<IntVec>& images) {
  IntVec acc = IntVec::Zero(ring.rank());
  for (const auto& [e, c] : p.terms) {
    IntVec mono = IntVec(ring.unit());
    for (size_t i = 0; i < e.size(); ++i)
      for (int rep = 0; rep < e[i]; ++rep) mono = ring.multiply(mono, images[i]);
    acc += c * mono;
  }
  return acc;
}

}  // namespace

CertifyResult certify_isomorphism(const RingModel& model, const RingPresentation& pres,
                                  const RFRing& ring, const std::vector<IntVec>& gen_images) {
  if (gen_images.size() != pres.generators.size())
    throw input_error("certify: need one image per presentation generator");
  for (const auto& img : gen_images)
    if (img.size() != ring.rank()) throw input_error("certify: image has wrong coordinate length");

  IsoCertificate cert;
  cert.generator_images = gen_images;

  // (a) every relation vanishes on the images.
  for (size_t r = 0; r < pres.relations.size(); ++r) {
    IntVec residue = eval_poly_in_ring(pres.relations[r], ring, gen_images);
    cert.relation_residues.push_back(residue);
    if (residue != IntVec::Zero(ring.rank())) {
      IsoFailure f;
      f.stage = IsoFailure::Stage::RelationViolated;
      f.detail = "relation " + pres.relations[r].to_string(pres.generators) +
                 " has nonzero residue on the images";
      return f;
    }
  }

  // (b) mapped model basis, as ring coordinates.
  std::vector<IntVec> mapped;
  if (pres.kind == RingPresentation::Kind::UnivariateQuotient) {
    IntVec powv = IntVec(ring.unit());
    mapped.push_back(powv);
    for (int i = 1; i < model.rank(); ++i) {
      powv = ring.multiply(powv, gen_images[0]);
      mapped.push_back(powv);
    }
  } else {
    mapped.push_back(IntVec(ring.unit()));
    for (const auto& img : gen_images) mapped.push_back(img);
  }

  // (c) change of basis must be square and unimodular.
  IntMat cob(static_cast<int>(mapped.size()), ring.rank());
  for (size_t i = 0; i < mapped.size(); ++i) cob.row(static_cast<int>(i)) = mapped[i].transpose();
  if (cob.rows() != cob.cols()) {
    IsoFailure f;
    f.stage = IsoFailure::Stage::RankMismatch;
    f.rank = rank_integer(cob);
    f.detail = "model rank " + std::to_string(cob.rows()) + " vs lattice rank " +
               std::to_string(ring.rank());
    return f;
  }
  cert.change_of_basis = cob;
  cert.det = determinant(cob);
  if (cert.det == 0) {
    IsoFailure f;
    f.stage = IsoFailure::Stage::RankMismatch;
    f.rank = rank_integer(cob);
    f.detail = "mapped basis has rank " + std::to_string(f.rank) + " < " +
               std::to_string(ring.rank());
    return f;
  }
  if (cert.det != 1 && cert.det != -1) {
    IsoFailure f;
    f.stage = IsoFailure::Stage::IndexNotOne;
    f.index = cert.det < 0 ? Int(-cert.det) : cert.det;
    f.detail = "mapped basis spans a sublattice of index " + f.index.get_str();
    return f;
  }
  return cert;
}

DegreeOneSearchResult search_degree_one(const RingModel& model, const RingPresentation& pres,
                                        const AmalgamAnalysis& ctx, const RFRing& ring) {
  if (pres.kind != RingPresentation::Kind::UnivariateQuotient)
    throw input_error("degree-one search needs a univariate presentation");
  DegreeOneSearchResult out;
  IsoFailure last;
  last.stage = IsoFailure::Stage::ImageNotInLattice;
  last.detail = "no compatible degree-one pair found";
  for (int i = 0; i < ctx.left_table.count(); ++i) {
    if (ctx.left_table.degree(i) != 1) continue;
    for (int j = 0; j < ctx.right_table.count(); ++j) {
      if (ctx.right_table.degree(j) != 1) continue;
      ++out.pairs_tried;
      ClassFunction chi = ctx.left_table.row(i);
      ClassFunction psi = ctx.right_table.row(j);
      ElementEvalResult eval;
      try {
        eval = element_eval(ctx, ring, chi, psi);
      } catch (const input_error&) {
        continue;  // incompatible on the edge group
      }
      if (eval.membership.kind != RFRing::Membership::Kind::Lattice) {
        last.detail = "degree-one pair evaluates outside the lattice: " +
                      eval.membership.certificate;
        continue;
      }
      CertifyResult r = certify_isomorphism(model, pres, ring, {eval.membership.coords});
      if (certified(r)) {
        out.found = true;
        out.result = std::move(r);
        out.pair_description = "left irreducible " + std::to_string(i) + " paired with right irreducible " +
                               std::to_string(j);
        return out;
      }
      if (auto* f = std::get_if<IsoFailure>(&r)) last = *f;
    }
  }
  out.result = last;
  return out;
}

}  // namespace repring
