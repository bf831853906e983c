#include "freealg.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "errors.hpp"

namespace skv::freealg {

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

std::size_t word_index(const Word& w, std::size_t n) {
  std::size_t r = 0;
  for (auto letter : w) r = r * n + letter;
  return r;
}

Word index_word(std::size_t index, std::size_t n, std::size_t degree) {
  Word w(degree);
  for (std::size_t k = degree; k-- > 0;) {
    w[k] = static_cast<std::uint8_t>(index % n);
    index /= n;
  }
  return w;
}

// ---------------------------------------------------------------- NcPoly

NcPoly NcPoly::generator(std::size_t n, std::size_t i) {
  if (i >= n) throw Error(ErrorCode::AmbientMismatch, "generator index out of range");
  return monomial(n, Word{static_cast<std::uint8_t>(i)});
}

NcPoly NcPoly::monomial(std::size_t n, Word w, const FieldElem& coeff) {
  NcPoly p(n);
  p.add_term(w, coeff);
  return p;
}

NcPoly NcPoly::constant(std::size_t n, const FieldElem& coeff) {
  return monomial(n, Word{}, coeff);
}

bool NcPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  return terms_.begin()->first.size() == terms_.rbegin()->first.size();
}

std::size_t NcPoly::degree() const {
  if (terms_.empty()) throw Error(ErrorCode::Degree, "zero polynomial has no degree");
  if (!is_homogeneous()) throw Error(ErrorCode::Degree, "polynomial is not homogeneous");
  return terms_.begin()->first.size();
}

FieldElem NcPoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? FieldElem() : it->second;
}

void NcPoly::add_term(const Word& w, const FieldElem& coeff) {
  for (auto letter : w) {
    if (letter >= n_) throw Error(ErrorCode::AmbientMismatch, "letter outside ambient");
  }
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.emplace(w, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void NcPoly::check_ambient(const NcPoly& rhs) const {
  if (n_ != rhs.n_) {
    throw Error(ErrorCode::AmbientMismatch, "polynomials over different generator counts");
  }
}

NcPoly& NcPoly::operator+=(const NcPoly& rhs) {
  check_ambient(rhs);
  for (const auto& [w, c] : rhs.terms_) add_term(w, c);
  return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& rhs) {
  check_ambient(rhs);
  for (const auto& [w, c] : rhs.terms_) add_term(w, -c);
  return *this;
}

NcPoly& NcPoly::operator*=(const FieldElem& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= s;
  return *this;
}

NcPoly NcPoly::operator-() const {
  NcPoly r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
NcPoly operator*(const FieldElem& s, NcPoly p) { return p *= s; }

NcPoly nc_mul(const NcPoly& p, const NcPoly& q) {
  if (p.n() != q.n()) {
    throw Error(ErrorCode::AmbientMismatch, "polynomials over different generator counts");
  }
  NcPoly r(p.n());
  for (const auto& [w1, c1] : p.terms()) {
    for (const auto& [w2, c2] : q.terms()) {
      Word w = w1;
      w.insert(w.end(), w2.begin(), w2.end());
      r.add_term(w, c1 * c2);
    }
  }
  return r;
}

NcPoly commutator(const NcPoly& p, const NcPoly& q) { return nc_mul(p, q) - nc_mul(q, p); }
NcPoly anticommutator(const NcPoly& p, const NcPoly& q) {
  return nc_mul(p, q) + nc_mul(q, p);
}

std::string NcPoly::to_string(const std::vector<std::string>& names) const {
  if (names.size() != n_) throw Error(ErrorCode::AmbientMismatch, "name count mismatch");
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    if (!out.empty()) out += " + ";
    if (c.is_rational()) {
      out += c.coeff(0).get_str();
    } else {
      out += "(" + c.to_string() + ")";
    }
    for (auto letter : w) out += "*" + names[letter];
  }
  return out;
}

NcPoly NcPoly::parse(std::string_view text, const std::vector<std::string>& names) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  std::vector<std::size_t> order(names.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return names[a].size() > names[b].size();
  });
  auto read_name = [&](std::size_t& pos) -> std::size_t {
    for (auto i : order) {
      if (!names[i].empty() && s.compare(pos, names[i].size(), names[i]) == 0) {
        pos += names[i].size();
        return i;
      }
    }
    throw Error(ErrorCode::Parse, "unknown generator at '" + s.substr(pos) + "'");
  };

  NcPoly p(names.size());
  if (s == "0") return p;
  std::size_t pos = 0;
  if (s.empty()) throw Error(ErrorCode::Parse, "empty polynomial");
  while (pos < s.size()) {
    bool neg = false;
    while (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      if (s[pos] == '-') neg = !neg;
      ++pos;
    }
    FieldElem coeff(1L);
    bool have_coeff = false;
    if (pos < s.size() && s[pos] == '(') {
      const auto close = s.find(')', pos);
      if (close == std::string::npos) throw Error(ErrorCode::Parse, "unbalanced '('");
      coeff = FieldElem::parse(s.substr(pos + 1, close - pos - 1));
      pos = close + 1;
      have_coeff = true;
    } else if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      const auto start = pos;
      while (pos < s.size() &&
             (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/')) {
        ++pos;
      }
      coeff = FieldElem(exactfield::parse_rational(s.substr(start, pos - start)));
      have_coeff = true;
    }
    Word w;
    if (!have_coeff) {
      if (pos >= s.size()) throw Error(ErrorCode::Parse, "dangling sign");
      w.push_back(static_cast<std::uint8_t>(read_name(pos)));
    }
    while (pos < s.size() && s[pos] == '*') {
      ++pos;
      w.push_back(static_cast<std::uint8_t>(read_name(pos)));
    }
    if (pos < s.size() && s[pos] != '+' && s[pos] != '-') {
      throw Error(ErrorCode::Parse, "unexpected '" + s.substr(pos) + "'");
    }
    p.add_term(w, neg ? -coeff : coeff);
  }
  return p;
}

// ----------------------------------------------------------- sparse vectors

SparseVec to_sparse(const NcPoly& p) {
  SparseVec v;
  if (!p.is_zero()) p.degree();
  v.reserve(p.terms().size());
  for (const auto& [w, c] : p.terms()) v.push_back({word_index(w, p.n()), c});
  // Deg-lex order on equal-length words coincides with index order.
  return v;
}

NcPoly from_sparse(const SparseVec& v, std::size_t n, std::size_t degree) {
  NcPoly p(n);
  for (const auto& e : v) p.add_term(index_word(e.index, n, degree), e.value);
  return p;
}

void axpy(SparseVec& v, const FieldElem& f, const SparseVec& w) {
  if (f.is_zero() || w.empty()) return;
  SparseVec out;
  out.reserve(v.size() + w.size());
  std::size_t i = 0, j = 0;
  while (i < v.size() || j < w.size()) {
    if (j == w.size() || (i < v.size() && v[i].index < w[j].index)) {
      out.push_back(std::move(v[i++]));
    } else if (i == v.size() || w[j].index < v[i].index) {
      out.push_back({w[j].index, -(f * w[j].value)});
      ++j;
    } else {
      v[i].value.submul(f, w[j].value);
      if (!v[i].value.is_zero()) out.push_back(std::move(v[i]));
      ++i;
      ++j;
    }
  }
  v = std::move(out);
}

SparseVec scaled(const SparseVec& v, const FieldElem& f) {
  if (f.is_zero()) return {};
  SparseVec out = v;
  for (auto& e : out) e.value *= f;
  return out;
}

FieldElem sparse_at(const SparseVec& v, std::size_t index) {
  auto it = std::lower_bound(v.begin(), v.end(), index,
                             [](const Entry& e, std::size_t i) { return e.index < i; });
  if (it != v.end() && it->index == index) return it->value;
  return FieldElem();
}

// ----------------------------------------------------------------- Echelon

SparseVec Echelon::reduce(SparseVec v) const {
  if (rows_.empty()) return v;
  // Rows never contain other pivots, so one pass over v's pivots suffices.
  std::vector<std::pair<std::size_t, FieldElem>> hits;
  for (const auto& e : v) {
    if (rows_.count(e.index)) hits.emplace_back(e.index, e.value);
  }
  for (const auto& [p, f] : hits) axpy(v, f, rows_.at(p));
  return v;
}

bool Echelon::insert(SparseVec v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  const std::size_t p = v.front().index;
  if (!v.front().value.is_one()) {
    const FieldElem inv = v.front().value.inverse();
    for (auto& e : v) e.value *= inv;
  }
  for (auto& [q, row] : rows_) {
    FieldElem f = sparse_at(row, p);
    if (!f.is_zero()) axpy(row, f, v);
  }
  rows_.emplace(p, std::move(v));
  return true;
}

bool operator==(const Echelon& a, const Echelon& b) {
  if (a.rows_.size() != b.rows_.size()) return false;
  auto it = b.rows_.begin();
  for (const auto& [p, row] : a.rows_) {
    if (it->first != p || it->second.size() != row.size()) return false;
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (row[k].index != it->second[k].index || row[k].value != it->second[k].value) {
        return false;
      }
    }
    ++it;
  }
  return true;
}

namespace {

std::size_t column_bound(const std::vector<SparseVec>& vs) {
  std::size_t bound = 0;
  for (const auto& v : vs) {
    if (!v.empty()) bound = std::max(bound, v.back().index + 1);
  }
  return bound;
}

// Rows [images[j] | e_j] with the identity block starting at `offset`.
Echelon augmented(const std::vector<SparseVec>& images, std::size_t offset) {
  Echelon ech;
  for (std::size_t j = 0; j < images.size(); ++j) {
    SparseVec row = images[j];
    row.push_back({offset + j, FieldElem(1L)});
    ech.insert(std::move(row));
  }
  return ech;
}

}  // namespace

std::vector<SparseVec> kernel(const std::vector<SparseVec>& images) {
  const std::size_t offset = column_bound(images);
  Echelon ech = augmented(images, offset);
  std::vector<SparseVec> out;
  for (const auto& [p, row] : ech.rows()) {
    if (p < offset) continue;
    SparseVec k;
    for (const auto& e : row) k.push_back({e.index - offset, e.value});
    out.push_back(std::move(k));
  }
  return out;
}

std::optional<std::vector<FieldElem>> solve(const std::vector<SparseVec>& images,
                                            const SparseVec& target) {
  const std::size_t offset = std::max(column_bound(images), column_bound({target}));
  Echelon ech = augmented(images, offset);
  SparseVec r = ech.reduce(target);
  std::vector<FieldElem> x(images.size());
  for (const auto& e : r) {
    if (e.index < offset) return std::nullopt;
    x[e.index - offset] = -e.value;
  }
  return x;
}

// ---------------------------------------------------------------- Subspace

bool Subspace::insert(const NcPoly& p) {
  if (p.is_zero()) return false;
  if (p.n() != n_) throw Error(ErrorCode::AmbientMismatch, "generator count mismatch");
  if (p.degree() != degree_) throw Error(ErrorCode::Degree, "degree mismatch");
  return ech_.insert(to_sparse(p));
}

std::vector<NcPoly> Subspace::basis() const {
  std::vector<NcPoly> out;
  for (const auto& [p, row] : ech_.rows()) out.push_back(from_sparse(row, n_, degree_));
  return out;
}

std::vector<std::size_t> Subspace::free_columns() const {
  std::vector<std::size_t> out;
  const std::size_t total = ambient_dim();
  for (std::size_t c = 0; c < total; ++c) {
    if (!ech_.is_pivot(c)) out.push_back(c);
  }
  return out;
}

Subspace span(std::size_t n, std::size_t degree, const std::vector<NcPoly>& vectors) {
  Subspace s(n, degree);
  for (const auto& v : vectors) s.insert(v);
  return s;
}

bool member(const NcPoly& v, const Subspace& s) {
  if (v.is_zero()) return true;
  if (v.n() != s.n()) throw Error(ErrorCode::AmbientMismatch, "generator count mismatch");
  if (v.degree() != s.degree()) throw Error(ErrorCode::Degree, "degree mismatch");
  return s.contains(to_sparse(v));
}

Subspace full_space(std::size_t n, std::size_t degree) {
  Subspace s(n, degree);
  for (std::size_t c = 0; c < s.ambient_dim(); ++c) s.insert(SparseVec{{c, FieldElem(1L)}});
  return s;
}

SumIntersection sum_and_intersect(const Subspace& a, const Subspace& b) {
  if (a.n() != b.n()) throw Error(ErrorCode::AmbientMismatch, "generator count mismatch");
  if (a.degree() != b.degree()) throw Error(ErrorCode::Degree, "degree mismatch");
  const std::size_t width = a.ambient_dim();
  Echelon ech;
  for (const auto& [p, row] : a.echelon().rows()) {
    SparseVec r = row;
    for (const auto& e : row) r.push_back({e.index + width, e.value});
    ech.insert(std::move(r));
  }
  for (const auto& [p, row] : b.echelon().rows()) ech.insert(row);
  SumIntersection out{Subspace(a.n(), a.degree()), Subspace(a.n(), a.degree())};
  for (const auto& [p, row] : ech.rows()) {
    SparseVec part;
    if (p < width) {
      for (const auto& e : row) {
        if (e.index < width) part.push_back(e);
      }
      out.sum.insert(part);
    } else {
      for (const auto& e : row) part.push_back({e.index - width, e.value});
      out.intersection.insert(part);
    }
  }
  return out;
}

// --------------------------------------------------------------- MultiPoly

MultiPoly MultiPoly::variable(std::size_t n, std::size_t blocks, std::size_t block,
                              std::size_t i) {
  if (block >= blocks || i >= n) {
    throw Error(ErrorCode::AmbientMismatch, "variable outside ambient");
  }
  MultiPoly p(n, blocks);
  Monomial m(n * blocks, 0);
  m[block * n + i] = 1;
  p.add_term(m, FieldElem(1L));
  return p;
}

MultiPoly MultiPoly::constant(std::size_t n, std::size_t blocks, const FieldElem& c) {
  MultiPoly p(n, blocks);
  p.add_term(Monomial(n * blocks, 0), c);
  return p;
}

void MultiPoly::add_term(const Monomial& m, const FieldElem& c) {
  if (m.size() != n_ * blocks_) throw Error(ErrorCode::AmbientMismatch, "monomial size");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MultiPoly::check_ambient(const MultiPoly& rhs) const {
  if (n_ != rhs.n_ || blocks_ != rhs.blocks_) {
    throw Error(ErrorCode::AmbientMismatch, "multipolys over different rings");
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  check_ambient(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  check_ambient(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const FieldElem& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

MultiPoly MultiPoly::shifted(std::size_t k, std::size_t total) const {
  if (blocks_ + k > total) throw Error(ErrorCode::AmbientMismatch, "shift out of range");
  MultiPoly r(n_, total);
  for (const auto& [m, c] : terms_) {
    Monomial mm(n_ * total, 0);
    std::copy(m.begin(), m.end(), mm.begin() + static_cast<std::ptrdiff_t>(k * n_));
    r.add_term(mm, c);
  }
  return r;
}

MultiPoly MultiPoly::evaluate_block(std::size_t block,
                                    const std::vector<FieldElem>& point) const {
  if (block >= blocks_ || point.size() != n_) {
    throw Error(ErrorCode::AmbientMismatch, "evaluation point does not fit");
  }
  MultiPoly r(n_, blocks_);
  for (const auto& [m, c] : terms_) {
    Monomial mm = m;
    FieldElem v = c;
    for (std::size_t i = 0; i < n_; ++i) {
      auto& e = mm[block * n_ + i];
      if (e > 0) v *= point[i].pow(e);
      e = 0;
    }
    r.add_term(mm, v);
  }
  return r;
}

MultiPoly MultiPoly::swap_blocks(std::size_t b1, std::size_t b2) const {
  MultiPoly r(n_, blocks_);
  for (const auto& [m, c] : terms_) {
    Monomial mm = m;
    for (std::size_t i = 0; i < n_; ++i) std::swap(mm[b1 * n_ + i], mm[b2 * n_ + i]);
    r.add_term(mm, c);
  }
  return r;
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    if (!out.empty()) out += " + ";
    out += c.is_rational() ? c.coeff(0).get_str() : "(" + c.to_string() + ")";
    for (std::size_t v = 0; v < m.size(); ++v) {
      const std::string var = names.at(v % n_) + std::to_string(v / n_);
      for (int e = 0; e < m[v]; ++e) out += "*" + var;
    }
  }
  return out;
}

MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
MultiPoly operator*(const FieldElem& s, MultiPoly a) { return a *= s; }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.n() != b.n() || a.blocks() != b.blocks()) {
    throw Error(ErrorCode::AmbientMismatch, "multipolys over different rings");
  }
  MultiPoly r(a.n(), a.blocks());
  for (const auto& [m1, c1] : a.terms()) {
    for (const auto& [m2, c2] : b.terms()) {
      MultiPoly::Monomial m = m1;
      for (std::size_t i = 0; i < m.size(); ++i) m[i] += m2[i];
      r.add_term(m, c1 * c2);
    }
  }
  return r;
}

MultiPoly multilinearize(const NcPoly& p) {
  if (p.is_zero()) return MultiPoly(p.n(), 0);
  const std::size_t k = p.degree();
  if (k == 0) throw Error(ErrorCode::Degree, "multilinearization needs degree >= 1");
  MultiPoly r(p.n(), k);
  for (const auto& [w, c] : p.terms()) {
    MultiPoly::Monomial m(p.n() * k, 0);
    for (std::size_t b = 0; b < k; ++b) m[b * p.n() + w[b]] = 1;
    r.add_term(m, c);
  }
  return r;
}

bool proportional(const MultiPoly& p, const MultiPoly& q) {
  if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
  if (p.terms().size() != q.terms().size()) return false;
  const auto& [m0, c0] = *p.terms().begin();
  auto it0 = q.terms().find(m0);
  if (it0 == q.terms().end()) return false;
  const FieldElem ratio = it0->second / c0;
  for (const auto& [m, c] : p.terms()) {
    auto it = q.terms().find(m);
    if (it == q.terms().end() || it->second != ratio * c) return false;
  }
  return true;
}

}  // namespace skv::freealg
