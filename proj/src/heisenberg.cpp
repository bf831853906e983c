#include "heisenberg.hpp"

#include "errors.hpp"

namespace skv::heisenberg {

using exactfield::Rational;
using exactfield::root_of_unity;

namespace {

Matrix scalar(const FieldElem& x) { return Matrix(1, 1, {x}); }

Matrix cyclic_shift(std::size_t n) {
  // e1 . x_j = x_{j-1}, indices mod n.
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) m((j + n - 1) % n, j) = FieldElem(1L);
  return m;
}

Matrix swap2() { return Matrix(2, 2, {FieldElem(), FieldElem(1L), FieldElem(1L), FieldElem()}); }

std::string chi_label(int n, int i, int j) {
  return "H" + std::to_string(n) + ":chi_{" + std::to_string(i) + "," + std::to_string(j) + "}";
}

}  // namespace

HeisenbergGroup::HeisenbergGroup(int n) : n_(n) {
  if (n < 2 || n > 4) {
    throw Error(ErrorCode::UnsupportedOrder, "no Heisenberg group H" + std::to_string(n));
  }
}

std::vector<GroupElem> HeisenbergGroup::elements() const {
  std::vector<GroupElem> out;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      for (int k = 0; k < n_; ++k) out.push_back({i, j, k});
  return out;
}

std::size_t HeisenbergGroup::index(const GroupElem& g) const {
  return static_cast<std::size_t>((g.i * n_ + g.j) * n_ + g.k);
}

GroupElem HeisenbergGroup::multiply(const GroupElem& g, const GroupElem& h) const {
  // e2^j e1^i' = e1^i' e2^j c^(-i' j)
  auto mod = [this](int x) { return ((x % n_) + n_) % n_; };
  return {mod(g.i + h.i), mod(g.j + h.j), mod(g.k + h.k - h.i * g.j)};
}

GroupRep::GroupRep(int n, Matrix e1, Matrix e2, std::string label)
    : n_(n), e1_(std::move(e1)), e2_(std::move(e2)), label_(std::move(label)) {
  HeisenbergGroup group(n);
  const std::size_t d = e1_.rows();
  if (e1_.cols() != d || e2_.rows() != d || e2_.cols() != d) {
    throw Error(ErrorCode::RepresentationInvalid, "generator matrices must be square");
  }
  if (!e1_.pow(n).is_identity() || !e2_.pow(n).is_identity()) {
    throw Error(ErrorCode::RepresentationInvalid, "e1^n or e2^n is not the identity");
  }
  c_ = e1_ * e2_ * e1_.inverse() * e2_.inverse();
  if (c_ * e1_ != e1_ * c_ || c_ * e2_ != e2_ * c_ || !c_.pow(n).is_identity()) {
    throw Error(ErrorCode::RepresentationInvalid, "[e1,e2] is not central of order n");
  }
}

Matrix GroupRep::matrix_of(const GroupElem& g) const {
  return e1_.pow(g.i) * e2_.pow(g.j) * c_.pow(g.k);
}

Matrix GroupRep::averaging_projector() const {
  // Every element is e1^i e2^j c^k exactly once, so the group sum factors.
  auto power_sum = [this](const Matrix& m) {
    Matrix s(dim(), dim());
    Matrix p = Matrix::identity(dim());
    for (int i = 0; i < n_; ++i) {
      s = s + p;
      p = p * m;
    }
    return s;
  };
  Matrix proj = power_sum(e1_) * power_sum(e2_) * power_sum(c_);
  proj *= FieldElem(Rational(1, n_ * n_ * n_));
  return proj;
}

Character character(const GroupRep& rep) {
  const int n = rep.n();
  std::vector<Matrix> p1{Matrix::identity(rep.dim())}, p2 = p1, pc = p1;
  for (int i = 1; i < n; ++i) {
    p1.push_back(p1.back() * rep.e1());
    p2.push_back(p2.back() * rep.e2());
    pc.push_back(pc.back() * rep.commutator());
  }
  Character chi;
  for (const auto& g : HeisenbergGroup(n).elements()) {
    chi.push_back((p1[g.i] * p2[g.j] * pc[g.k]).trace());
  }
  return chi;
}

FieldElem inner_product(int n, const Character& chi, const Character& psi) {
  FieldElem s;
  for (std::size_t g = 0; g < chi.size(); ++g) s += chi[g] * psi[g].conj();
  return s / FieldElem(static_cast<long>(n * n * n));
}

std::vector<GroupRep> irrep_table(int n) {
  HeisenbergGroup group(n);
  const FieldElem r = root_of_unity(n);
  std::vector<GroupRep> out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      out.emplace_back(n, scalar(r.pow(i)), scalar(r.pow(j)), chi_label(n, i, j));
    }
  if (n == 2) {
    out.emplace_back(2, swap2(), Matrix::diagonal({FieldElem(1L), FieldElem(-1L)}), "H2:V");
  } else if (n == 3) {
    const FieldElem w = root_of_unity(3);
    out.emplace_back(3, cyclic_shift(3), Matrix::diagonal({FieldElem(1L), w, w * w}), "H3:V1");
    out.emplace_back(3, cyclic_shift(3), Matrix::diagonal({FieldElem(1L), w * w, w}), "H3:V2");
  } else {
    const FieldElem I = root_of_unity(4);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        Matrix e1 = swap2();
        e1 *= I.pow(i);
        Matrix e2 = Matrix::diagonal({FieldElem(1L), FieldElem(-1L)});
        e2 *= I.pow(j);
        out.emplace_back(4, e1, e2,
                         "H4:V_{" + std::to_string(i) + "," + std::to_string(j) + "}");
      }
    out.emplace_back(4, cyclic_shift(4),
                     Matrix::diagonal({FieldElem(1L), I, FieldElem(-1L), -I}), "H4:V1");
    out.emplace_back(4, cyclic_shift(4),
                     Matrix::diagonal({FieldElem(1L), -I, FieldElem(-1L), I}), "H4:V3");
  }
  return out;
}

GroupRep tensor(const GroupRep& a, const GroupRep& b) {
  if (a.n() != b.n()) throw Error(ErrorCode::RepresentationInvalid, "different groups");
  return GroupRep(a.n(), kron(a.e1(), b.e1()), kron(a.e2(), b.e2()),
                  a.label() + "(x)" + b.label());
}

GroupRep rep_on_degree(const GroupRep& rep, std::size_t d) {
  Matrix e1 = Matrix::identity(1), e2 = Matrix::identity(1);
  for (std::size_t k = 0; k < d; ++k) {
    e1 = kron(e1, rep.e1());
    e2 = kron(e2, rep.e2());
  }
  return GroupRep(rep.n(), e1, e2, rep.label() + "^" + std::to_string(d));
}

std::vector<FieldElem> to_dense(const freealg::SparseVec& v, std::size_t dim) {
  std::vector<FieldElem> out(dim);
  for (const auto& e : v) out.at(e.index) = e.value;
  return out;
}

freealg::SparseVec to_sparse(const std::vector<FieldElem>& v) {
  freealg::SparseVec out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) out.push_back({i, v[i]});
  }
  return out;
}

namespace {

void require_fit(const Subspace& s, const GroupRep& rep) {
  if (s.ambient_dim() != rep.dim()) {
    throw Error(ErrorCode::AmbientMismatch, "subspace and representation differ in dimension");
  }
}

// Coordinates of g.b in the echelon basis of s, or nullopt if g.b leaves s.
std::optional<Matrix> restricted(const Matrix& g, const Subspace& s) {
  const auto& rows = s.echelon().rows();
  std::vector<std::size_t> pivots;
  for (const auto& [p, row] : rows) pivots.push_back(p);
  Matrix m(rows.size(), rows.size());
  std::size_t col = 0;
  for (const auto& [p, row] : rows) {
    const auto image = g.apply(to_dense(row, s.ambient_dim()));
    const auto sparse = to_sparse(image);
    if (!s.contains(sparse)) return std::nullopt;
    for (std::size_t k = 0; k < pivots.size(); ++k) m(k, col) = image[pivots[k]];
    ++col;
  }
  return m;
}

}  // namespace

GroupRep restrict(const GroupRep& rep, const Subspace& s, std::string label) {
  require_fit(s, rep);
  auto m1 = restricted(rep.e1(), s);
  auto m2 = restricted(rep.e2(), s);
  if (!m1 || !m2) throw Error(ErrorCode::NotASubrep, "subspace is not stable");
  return GroupRep(rep.n(), *m1, *m2, std::move(label));
}

GroupRep antisymmetric_square(const GroupRep& rep) {
  const std::size_t d = rep.dim();
  Subspace s(d, 2);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      s.insert(freealg::SparseVec{{i * d + j, FieldElem(1L)}, {j * d + i, FieldElem(-1L)}});
    }
  return restrict(tensor(rep, rep), s, "L2(" + rep.label() + ")");
}

GroupRep change_basis(const GroupRep& rep, const Matrix& basis) {
  const Matrix inv = basis.inverse();
  return GroupRep(rep.n(), inv * rep.e1() * basis, inv * rep.e2() * basis, rep.label());
}

Decomposition decompose(const GroupRep& rep) {
  const Character chi = character(rep);
  Decomposition out;
  std::size_t total = 0;
  for (const auto& irr : irrep_table(rep.n())) {
    const FieldElem m = inner_product(rep.n(), chi, character(irr));
    if (!m.is_rational() || m.coeff(0).get_den() != 1 || m.coeff(0) < 0) {
      throw Error(ErrorCode::RepresentationInvalid,
                  "non-integral multiplicity " + m.to_string() + " of " + irr.label());
    }
    const std::size_t mult = m.coeff(0).get_num().get_ui();
    total += mult * irr.dim();
    if (mult > 0) out.emplace_back(irr.label(), mult);
  }
  if (total != rep.dim()) {
    throw Error(ErrorCode::RepresentationInvalid, "multiplicities do not add up");
  }
  return out;
}

std::string to_string(const Decomposition& d) {
  std::string out;
  for (const auto& [label, mult] : d) {
    if (!out.empty()) out += " + ";
    out += (mult == 1 ? "" : std::to_string(mult) + "*") + label;
  }
  return out.empty() ? "0" : out;
}

bool is_subrep(const Subspace& s, const GroupRep& rep) {
  require_fit(s, rep);
  return restricted(rep.e1(), s).has_value() && restricted(rep.e2(), s).has_value();
}

Subspace invariant_subspace(const GroupRep& rep, const Subspace& s) {
  if (!is_subrep(s, rep)) throw Error(ErrorCode::NotASubrep, "subspace is not stable");
  const Matrix proj = rep.averaging_projector();
  Subspace out(s.n(), s.degree());
  for (const auto& [p, row] : s.echelon().rows()) {
    out.insert(to_sparse(proj.apply(to_dense(row, rep.dim()))));
  }
  return out;
}

std::vector<std::vector<bool>> twist_equivalence_table() {
  const FieldElem I = root_of_unity(4);
  std::vector<Character> chars;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Matrix e1 = swap2();
      e1 *= I.pow(i);
      Matrix e2 = Matrix::diagonal({FieldElem(1L), FieldElem(-1L)});
      e2 *= I.pow(j);
      chars.push_back(character(GroupRep(4, e1, e2)));
    }
  std::vector<std::vector<bool>> table(16, std::vector<bool>(16));
  for (std::size_t a = 0; a < 16; ++a)
    for (std::size_t b = 0; b < 16; ++b) table[a][b] = chars[a] == chars[b];
  return table;
}

Matrix v_basis() {
  const FieldElem o(1L), z, m(-1L);
  return Matrix::from_columns({{o, z, o, z}, {o, z, m, z}, {z, o, z, o}, {z, o, z, m}});
}

NcPoly act_on_poly(const Matrix& g, const NcPoly& p) {
  const std::size_t n = p.n();
  if (g.rows() != n || g.cols() != n) {
    throw Error(ErrorCode::AmbientMismatch, "matrix does not act on the generators");
  }
  std::vector<NcPoly> images;
  for (std::size_t j = 0; j < n; ++j) {
    NcPoly img(n);
    for (std::size_t i = 0; i < n; ++i) img.add_term({static_cast<std::uint8_t>(i)}, g(i, j));
    images.push_back(img);
  }
  NcPoly out(n);
  for (const auto& [w, c] : p.terms()) {
    NcPoly term = NcPoly::constant(n, c);
    for (auto letter : w) term = freealg::nc_mul(term, images[letter]);
    out += term;
  }
  return out;
}

}  // namespace skv::heisenberg
