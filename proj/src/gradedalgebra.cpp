#include "gradedalgebra.hpp"

#include <openssl/evp.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "errors.hpp"

namespace skv::gradedalgebra {

using exactfield::FieldElem;
using freealg::Echelon;
using freealg::ipow;

namespace {

void write_row(std::ostream& out, const SparseVec& row) {
  bool first = true;
  for (const auto& e : row) {
    if (!first) out << ' ';
    first = false;
    out << e.index << ':';
    for (std::size_t k = 0; k < 4; ++k) {
      out << (k ? "," : "") << e.value.coeff(k).get_str();
    }
  }
  out << '\n';
}

std::optional<SparseVec> read_row(const std::string& line) {
  SparseVec row;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) {
    const auto colon = tok.find(':');
    if (colon == std::string::npos) return std::nullopt;
    std::array<exactfield::Rational, 4> c;
    std::string rest = tok.substr(colon + 1);
    for (std::size_t k = 0; k < 4; ++k) {
      const auto comma = rest.find(',');
      if ((comma == std::string::npos) != (k == 3)) return std::nullopt;
      c[k] = exactfield::parse_rational(rest.substr(0, comma));
      if (comma != std::string::npos) rest = rest.substr(comma + 1);
    }
    row.push_back({std::stoull(tok.substr(0, colon)), FieldElem(c)});
  }
  return row;
}

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

}  // namespace

struct Presentation::Memo {
  std::recursive_mutex mutex;
  std::unordered_map<std::size_t, std::unique_ptr<Subspace>> slices;
  std::string cache_dir;
};

Presentation::Presentation(std::vector<std::string> names,
                           const std::vector<NcPoly>& relations)
    : names_(std::move(names)), memo_(std::make_shared<Memo>()) {
  const std::size_t n = names_.size();
  if (n == 0) throw Error(ErrorCode::Parameter, "presentation without generators");
  for (const auto& r : relations) {
    if (r.is_zero()) continue;
    if (r.n() != n) throw Error(ErrorCode::AmbientMismatch, "relation over wrong generators");
    const std::size_t d = r.degree();
    if (d < 2) throw Error(ErrorCode::Degree, "relations must have degree >= 2");
    spaces_.try_emplace(d, n, d).first->second.insert(r);
  }
  if (spaces_.empty()) throw Error(ErrorCode::Parameter, "zero relation space");
  std::ostringstream data;
  data << "n=" << n << '\n';
  for (const auto& [d, s] : spaces_) {
    data << "d=" << d << '\n';
    for (const auto& [p, row] : s.echelon().rows()) write_row(data, row);
  }
  fingerprint_ = sha256_hex(data.str());
}

std::vector<NcPoly> Presentation::relations() const {
  std::vector<NcPoly> out;
  for (const auto& [d, s] : spaces_) {
    auto b = s.basis();
    out.insert(out.end(), b.begin(), b.end());
  }
  return out;
}

Presentation Presentation::with_relations(const std::vector<NcPoly>& extra) const {
  auto all = relations();
  all.insert(all.end(), extra.begin(), extra.end());
  Presentation p(names_, all);
  p.memo_->cache_dir = memo_->cache_dir;
  return p;
}

void Presentation::set_cache_dir(const std::string& dir) const {
  std::lock_guard lock(memo_->mutex);
  memo_->cache_dir = dir;
}

const Subspace& Presentation::ideal_slice(std::size_t m) const {
  std::lock_guard lock(memo_->mutex);
  if (auto it = memo_->slices.find(m); it != memo_->slices.end()) return *it->second;

  const std::size_t n = this->n();
  auto slice = std::make_unique<Subspace>(n, m);
  std::filesystem::path file;
  bool loaded = false;
  if (!memo_->cache_dir.empty()) {
    file = std::filesystem::path(memo_->cache_dir) /
           (fingerprint_ + "-" + std::to_string(m) + ".slice");
    std::ifstream in(file);
    if (in) {
      std::string line;
      loaded = true;
      while (std::getline(in, line)) {
        auto row = read_row(line);
        if (!row) {
          loaded = false;
          break;
        }
        slice->insert(*row);
      }
      if (!loaded) slice = std::make_unique<Subspace>(n, m);
    }
  }

  if (!loaded && m >= 2) {
    const Subspace& prev = ideal_slice(m - 1);
    for (const auto& [p, row] : prev.echelon().rows()) {
      for (std::size_t j = 0; j < n; ++j) {
        SparseVec shifted;
        shifted.reserve(row.size());
        for (const auto& e : row) shifted.push_back({e.index * n + j, e.value});
        slice->insert(shifted);
      }
    }
    for (const auto& [d, space] : spaces_) {
      if (d > m) continue;
      const std::size_t block = ipow(n, d);
      const std::size_t prefixes = ipow(n, m - d);
      for (const auto& [p, row] : space.echelon().rows()) {
        for (std::size_t pre = 0; pre < prefixes; ++pre) {
          SparseVec v;
          v.reserve(row.size());
          for (const auto& e : row) v.push_back({pre * block + e.index, e.value});
          slice->insert(v);
        }
      }
    }
    if (!file.empty()) {
      std::error_code ec;
      std::filesystem::create_directories(file.parent_path(), ec);
      // Unique per thread so concurrent writers of one slice never share a file.
      const auto tmp = file.string() + "." +
                       std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id())) +
                       ".tmp";
      std::ofstream out(tmp);
      if (!out) throw Error(ErrorCode::Io, "cannot write cache file " + tmp);
      for (const auto& [p, row] : slice->echelon().rows()) write_row(out, row);
      out.close();
      if (!out) throw Error(ErrorCode::Io, "cannot write cache file " + tmp);
      std::filesystem::rename(tmp, file, ec);
      if (ec) throw Error(ErrorCode::Io, "cannot move cache file into " + file.string());
    }
  }
  auto [it, inserted] = memo_->slices.emplace(m, std::move(slice));
  return *it->second;
}

HilbertRecord hilbert_dims(const Presentation& p, std::size_t N) {
  HilbertRecord h;
  for (std::size_t m = 0; m <= N; ++m) {
    h.dims.push_back(ipow(p.n(), m) - p.ideal_slice(m).dim());
  }
  return h;
}

SparseVec normal_form(const Presentation& p, const NcPoly& f) {
  if (f.is_zero()) return {};
  if (f.n() != p.n()) throw Error(ErrorCode::AmbientMismatch, "element over wrong generators");
  return p.ideal_slice(f.degree()).reduce(freealg::to_sparse(f));
}

bool in_ideal(const Presentation& p, const NcPoly& f) { return normal_form(p, f).empty(); }

bool is_central(const Presentation& p, const NcPoly& c) {
  for (std::size_t v = 0; v < p.n(); ++v) {
    const auto g = NcPoly::generator(p.n(), v);
    if (!in_ideal(p, freealg::commutator(g, c))) return false;
  }
  return true;
}

Subspace centralizer_slice(const Presentation& p, std::size_t k) {
  if (k == 0) throw Error(ErrorCode::Degree, "centralizer degree must be >= 1");
  const std::size_t n = p.n();
  const std::size_t nk = ipow(n, k);
  const std::size_t nk1 = nk * n;
  const auto free = p.ideal_slice(k).free_columns();
  const Subspace& next = p.ideal_slice(k + 1);

  std::vector<SparseVec> images;
  images.reserve(free.size());
  for (auto u : free) {
    SparseVec img;
    for (std::size_t v = 0; v < n; ++v) {
      const std::size_t left = v * nk + u;
      const std::size_t right = u * n + v;
      SparseVec comm;
      if (left != right) {
        if (left < right) {
          comm = {{left, FieldElem(1L)}, {right, FieldElem(-1L)}};
        } else {
          comm = {{right, FieldElem(-1L)}, {left, FieldElem(1L)}};
        }
      }
      for (auto& e : next.reduce(comm)) img.push_back({v * nk1 + e.index, e.value});
    }
    images.push_back(std::move(img));
  }
  Subspace out(n, k);
  for (const auto& kv : freealg::kernel(images)) {
    SparseVec c;
    for (const auto& e : kv) c.push_back({free[e.index], e.value});
    out.insert(c);
  }
  return out;
}

NormalCertificate normality_automorphism(const Presentation& p, const NcPoly& c) {
  if (normal_form(p, c).empty()) {
    throw Error(ErrorCode::DegenerateElement, "element lies in the ideal");
  }
  const std::size_t n = p.n();
  std::vector<SparseVec> right;
  for (std::size_t j = 0; j < n; ++j) {
    right.push_back(normal_form(p, freealg::nc_mul(c, NcPoly::generator(n, j))));
  }
  NormalCertificate cert{c, std::nullopt};
  Matrix sigma(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    auto x = freealg::solve(right, normal_form(p, freealg::nc_mul(NcPoly::generator(n, i), c)));
    if (!x) return cert;
    for (std::size_t j = 0; j < n; ++j) sigma(j, i) = (*x)[j];
  }
  cert.sigma = sigma;
  return cert;
}

HilbertRecord quotient_hilbert(const Presentation& p, const std::vector<NcPoly>& extra,
                               std::size_t N) {
  return hilbert_dims(p.with_relations(extra), N);
}

}  // namespace skv::gradedalgebra
