// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND. See the License for the specific
// language governing permissions and limitations under the License.
#include "u21/modrep.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

namespace u21::modrep {

std::uint64_t project_exponent(std::int64_t e, std::uint64_t n, std::uint32_t ell) {
  std::int64_t r = e % (std::int64_t)n;
  if (r < 0) r += (std::int64_t)n;
  std::uint64_t la = 1, np = n;
  while (np % ell == 0) {
    np /= ell;
    la *= ell;
  }
  std::uint64_t base = (std::uint64_t)r % np;
  for (std::uint64_t k = 0; k < la; ++k) {
    std::uint64_t c = base + k * np;
    if (c % la == 0) return c;
  }
  fail(ErrorCode::Internal, "exponent projection failed");
}

TorusCharacter torus_character(std::uint32_t q0, std::int64_t e1, std::int64_t e2, std::uint32_t ell) {
  std::uint32_t p = 0, m = 0;
  if (!gf::prime_power(q0, p, m) || p == 2) fail(ErrorCode::BadParameters, "q0 must be an odd prime power");
  if (!gf::is_prime(ell)) fail(ErrorCode::BadParameters, "ell must be prime");
  if (ell == p) fail(ErrorCode::BadPrime, "ell equals the residual characteristic");
  TorusCharacter c;
  c.q0 = q0;
  c.ell = ell;
  c.e1_input = e1;
  c.e2_input = e2;
  const std::uint64_t n1 = (std::uint64_t)q0 * q0 - 1, n2 = q0 + 1;
  c.e1 = project_exponent(e1, n1, ell);
  c.e2 = project_exponent(e2, n2, ell);
  c.ord1 = n1 / std::gcd(c.e1, n1);
  c.ord2 = n2 / std::gcd(c.e2, n2);
  c.entry_field = gf::Field::make(p, 2 * m);
  std::uint64_t Q = ell;
  std::uint32_t deg = 1;
  while ((Q - 1) % c.ord1 != 0 || (Q - 1) % c.ord2 != 0) {
    Q *= ell;
    ++deg;
    if (Q > gf::Field::kMaxOrder) fail(ErrorCode::FieldTooLarge, "coefficient field too large");
  }
  c.coeff = gf::Field::make(ell, deg);
  return c;
}

Elem TorusCharacter::chi1(Elem x) const {
  const std::uint64_t n1 = (std::uint64_t)q0 * q0 - 1;
  const std::uint64_t k = entry_field->dlog(x);
  // g -> G^((Q-1) e1 / n1)
  const std::uint64_t Qm1 = coeff->order() - 1;
  const std::uint64_t step = (Qm1 / ord1) * (e1 / (n1 / ord1));
  return coeff->exp((step % Qm1) * (k % Qm1) % Qm1);
}

Elem TorusCharacter::chi2(Elem y) const {
  const std::uint64_t n2 = q0 + 1;
  const std::uint64_t l = entry_field->dlog(y);
  if (l % (q0 - 1) != 0) fail(ErrorCode::InvalidArgument, "argument is not of norm one");
  const std::uint64_t k = l / (q0 - 1);
  const std::uint64_t Qm1 = coeff->order() - 1;
  const std::uint64_t step = (Qm1 / ord2) * (e2 / (n2 / ord2));
  return coeff->exp((step % Qm1) * (k % Qm1) % Qm1);
}

bool TorusCharacter::chi1_nonregular() const {
  const std::uint64_t n1 = (std::uint64_t)q0 * q0 - 1;
  return (e1 * (q0 + 1)) % n1 == 0;
}

Elem TorusCharacter::on_diagonal(const std::array<Elem, 3>& d, int rank) const {
  const gf::Field& f = *entry_field;
  const std::uint64_t n1 = (std::uint64_t)q0 * q0 - 1;
  const std::uint64_t lx = f.dlog(d[0]);
  std::uint64_t l = (lx * (n1 + 1 - q0)) % n1;  // x^(1-q0)
  if (rank == 3) l = (l + f.dlog(d[1])) % n1;
  return coeff->mul(chi1(d[0]), chi2(f.exp(l)));
}

Matrix induced_matrix(const grp::GroupSpec& g, const grp::FlagTable& t, const TorusCharacter& chi,
                      const grp::GMat& m) {
  const std::size_t n = t.size();
  Matrix out(chi.coeff, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    auto step = grp::coset_action(g, t, m, i);
    std::array<Elem, 3> d{0, 0, 0};
    for (int k = 0; k < g.rank; ++k) d[k] = step.b(k, k);
    out(step.j, i) = chi.on_diagonal(d, g.rank);
  }
  return out;
}

FlatModule induced_module(const grp::GroupSpec& g, const grp::FlagTable& t, const TorusCharacter& chi) {
  if (chi.q0 != g.q0) fail(ErrorCode::MismatchedParameters, "character and group disagree on q0");
  FlatModule mod;
  mod.field = chi.coeff;
  mod.dim = t.size();
  for (const auto& x : g.generators) mod.gens.push_back(induced_matrix(g, t, chi, x));
  std::ostringstream label;
  label << "induced q0=" << g.q0 << " rank=" << g.rank << " ell=" << chi.ell << " e1=" << chi.e1
        << " e2=" << chi.e2;
  mod.label = label.str();
  return mod;
}

void write_fmod(std::ostream& os, const FlatModule& m) {
  const auto& f = *m.field;
  os << "FMOD 1\n";
  os << "field " << f.characteristic() << ' ' << f.degree();
  for (auto c : f.modulus()) os << ' ' << c;
  os << "\ndim " << m.dim << "\nngens " << m.gens.size() << "\nlabel";
  if (!m.label.empty()) os << ' ' << m.label;
  os << '\n';
  for (std::size_t k = 0; k < m.gens.size(); ++k) {
    os << "gen " << k << '\n';
    for (std::size_t i = 0; i < m.dim; ++i) {
      for (std::size_t j = 0; j < m.dim; ++j) {
        if (j) os << ' ';
        os << m.gens[k](i, j);
      }
      os << '\n';
    }
  }
}

namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& is) : is_(is) {}
  std::string next() {
    std::string line;
    if (!std::getline(is_, line)) error("unexpected end of file");
    ++no_;
    return line;
  }
  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorCode::FormatError, "line " + std::to_string(no_ + (no_ == 0)) + ": " + msg);
  }
  std::vector<std::string> tokens(const std::string& line) const {
    std::istringstream ss(line);
    std::vector<std::string> out;
    std::string t;
    while (ss >> t) out.push_back(t);
    return out;
  }
  std::uint64_t number(const std::string& s) const {
    if (s.empty() || s.size() > 18) error("bad number '" + s + "'");
    for (char c : s)
      if (c < '0' || c > '9') error("bad number '" + s + "'");
    return std::stoull(s);
  }
  std::size_t line_no() const { return no_; }

 private:
  std::istream& is_;
  std::size_t no_ = 0;
};

}  // namespace

FlatModule read_fmod(std::istream& is) {
  LineReader r(is);
  FlatModule m;
  if (r.next() != "FMOD 1") r.error("expected header 'FMOD 1'");
  auto t = r.tokens(r.next());
  if (t.size() < 3 || t[0] != "field") r.error("expected 'field p m c0 ...'");
  std::uint64_t p = r.number(t[1]), deg = r.number(t[2]);
  if (deg == 0 || t.size() != 3 + deg) r.error("modulus needs exactly m coefficients");
  std::vector<std::uint32_t> low;
  for (std::size_t i = 0; i < deg; ++i) low.push_back((std::uint32_t)r.number(t[3 + i]));
  try {
    if (p > gf::Field::kMaxOrder || deg > 20) r.error("field too large");
    m.field = gf::Field::from_modulus((std::uint32_t)p, low);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::FormatError) throw;
    r.error(std::string("invalid field: ") + e.what());
  }
  t = r.tokens(r.next());
  if (t.size() != 2 || t[0] != "dim") r.error("expected 'dim n'");
  m.dim = r.number(t[1]);
  if (m.dim == 0 || m.dim > 100000) r.error("dimension out of range");
  t = r.tokens(r.next());
  if (t.size() != 2 || t[0] != "ngens") r.error("expected 'ngens k'");
  std::size_t k = r.number(t[1]);
  if (k == 0 || k > 1000) r.error("generator count out of range");
  std::string line = r.next();
  if (line == "label") {
    m.label.clear();
  } else if (line.rfind("label ", 0) == 0) {
    m.label = line.substr(6);
  } else {
    r.error("expected 'label ...'");
  }
  const std::uint32_t q = m.field->order();
  for (std::size_t g = 0; g < k; ++g) {
    t = r.tokens(r.next());
    if (t.size() != 2 || t[0] != "gen" || r.number(t[1]) != g) r.error("expected 'gen " + std::to_string(g) + "'");
    Matrix a(m.field, m.dim, m.dim);
    for (std::size_t i = 0; i < m.dim; ++i) {
      t = r.tokens(r.next());
      if (t.size() != m.dim) r.error("row has " + std::to_string(t.size()) + " entries, expected " + std::to_string(m.dim));
      for (std::size_t j = 0; j < m.dim; ++j) {
        std::uint64_t v = r.number(t[j]);
        if (v >= q) r.error("entry " + t[j] + " out of range for " + m.field->name());
        a(i, j) = (Elem)v;
      }
    }
    if (linalg::rank(a) != m.dim) r.error("generator " + std::to_string(g) + " is singular");
    m.gens.push_back(std::move(a));
  }
  std::string rest;
  while (std::getline(is, rest))
    if (!rest.empty()) fail(ErrorCode::FormatError, "line " + std::to_string(r.line_no() + 1) + ": trailing content");
  return m;
}

void save_fmod(const std::string& path, const FlatModule& m) {
  std::ofstream os(path, std::ios::binary);
  if (!os) fail(ErrorCode::IoError, "cannot open '" + path + "' for writing");
  write_fmod(os, m);
  if (!os) fail(ErrorCode::IoError, "write failed for '" + path + "'");
}

FlatModule load_fmod(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) fail(ErrorCode::IoError, "cannot open '" + path + "'");
  return read_fmod(is);
}

}  // namespace u21::modrep
