// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND. See the License for the specific
// language governing permissions and limitations under the License.
#include "u21/meataxe.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <sstream>

namespace u21::meataxe {

namespace {

constexpr int kSplitBudget = 200;
constexpr int kMaxFactorDegree = 24;

void check_compatible(const Module& a, const Module& b) {
  if (!a.field->same_as(*b.field)) fail(ErrorCode::FieldMismatch, "modules over different fields");
  if (a.gens.size() != b.gens.size()) fail(ErrorCode::InvalidArgument, "modules have different generator counts");
}

Module transposed(const Module& m) {
  Module t{m.field, m.dim, {}};
  for (const auto& g : m.gens) t.gens.push_back(g.transpose());
  return t;
}

AlgebraWord random_element(const Module& m, std::mt19937_64& rng) {
  AlgebraWord w;
  const std::uint32_t q = m.field->order();
  for (int t = 0; t < 3; ++t) {
    AlgebraWord::Term term;
    term.coeff = (Elem)(1 + rng() % (q - 1));
    std::size_t len = 1 + rng() % 6;
    for (std::size_t k = 0; k < len; ++k) term.word.push_back((std::uint16_t)(rng() % m.gens.size()));
    w.terms.push_back(std::move(term));
  }
  return w;
}

Witness trivial_witness(const Module& m) {
  Witness w;
  w.element.terms.push_back({1, {0}});
  Elem a = m.gens[0](0, 0);
  w.factor = {m.field->neg(a), 1};
  w.seed = {1};
  w.nullity = 1;
  return w;
}

struct Outcome {
  std::optional<Subspace> sub;  // set when a proper submodule was found
  Witness witness;              // set when irreducible
};

Outcome split_or_certify(const Module& m, std::mt19937_64& rng) {
  const std::size_t n = m.dim;
  std::optional<Module> mt;
  for (int attempt = 0; attempt < kSplitBudget; ++attempt) {
    AlgebraWord el = random_element(m, rng);
    Matrix a = el.evaluate(m);
    auto factors = gf::poly::irreducible_factors(*m.field, gf::poly::charpoly(a), rng, kMaxFactorDegree);
    for (const auto& f : factors) {
      const std::size_t deg = (std::size_t)gf::poly::degree(f);
      Matrix nf = gf::poly::eval_matrix(f, a);
      Matrix ker = linalg::left_nullspace(nf);
      if (ker.rows() == 0) continue;
      std::vector<Elem> v(ker.row(0).begin(), ker.row(0).end());
      Subspace w = spin(m, {v});
      if (w.dim() < n) return {std::move(w), {}};
      if (ker.rows() != deg) continue;
      // Norton's test on the dual.
      if (!mt) mt = transposed(m);
      Matrix kt = linalg::left_nullspace(nf.transpose());
      std::vector<Elem> u(kt.row(0).begin(), kt.row(0).end());
      Subspace wt = spin(*mt, {u});
      if (wt.dim() < n) {
        Matrix ann = linalg::left_nullspace(wt.basis().transpose());
        Subspace s(m.field, n);
        for (std::size_t i = 0; i < ann.rows(); ++i) s.insert(ann.row(i));
        return {std::move(s), {}};
      }
      return {std::nullopt, Witness{el, f, v, ker.rows()}};
    }
  }
  fail(ErrorCode::ChopFailed, "no splitting or certifying element within budget");
}

std::vector<AlgebraWord> standard_words(std::size_t ngens) {
  auto g = [&](std::size_t i) { return (std::uint16_t)(i % ngens); };
  using T = AlgebraWord::Term;
  std::vector<AlgebraWord> w(8);
  w[0].terms = {T{1, {g(0)}}};
  w[1].terms = {T{1, {g(1)}}};
  w[2].terms = {T{1, {g(0), g(1)}}};
  w[3].terms = {T{1, {g(0)}}, T{1, {g(1)}}};
  w[4].terms = {T{1, {g(0), g(1)}}, T{1, {g(2)}}};
  w[5].terms = {T{1, {g(1), g(2)}}, T{1, {g(0)}}};
  w[6].terms = {T{1, {g(0), g(1), g(2)}}, T{1, {g(1)}}, T{1, {g(3)}}};
  w[7].terms = {T{1, {g(0)}}, T{1, {g(1)}}, T{1, {g(2)}}, T{1, {g(3)}}, T{1, {g(4)}}};
  return w;
}

bool fingerprint_less(const std::vector<Poly>& a, const std::vector<Poly>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size()) return a[i].size() < b[i].size();
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

}  // namespace

Module from_flat(const modrep::FlatModule& m) {
  Module out{m.field, m.dim, {}};
  for (const auto& g : m.gens) out.gens.push_back(g.transpose());
  return out;
}

modrep::FlatModule to_flat(const Module& m, const std::string& label) {
  modrep::FlatModule out{m.field, m.dim, {}, label};
  for (const auto& g : m.gens) out.gens.push_back(g.transpose());
  return out;
}

Matrix AlgebraWord::evaluate(const Module& m) const {
  Matrix sum(m.field, m.dim, m.dim);
  for (const auto& t : terms) {
    Matrix p = m.gens.at(t.word.at(0));
    for (std::size_t k = 1; k < t.word.size(); ++k) p = p * m.gens.at(t.word[k]);
    sum = sum + linalg::scaled(p, t.coeff);
  }
  return sum;
}

std::string AlgebraWord::describe() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) os << " + ";
    os << terms[i].coeff << "*";
    for (std::size_t k = 0; k < terms[i].word.size(); ++k) os << (k ? "." : "") << "g" << terms[i].word[k];
  }
  return os.str();
}

Subspace spin(const Module& m, const std::vector<std::vector<Elem>>& seeds) {
  Subspace s(m.field, m.dim);
  std::vector<std::vector<Elem>> vecs;
  for (const auto& v : seeds)
    if (s.insert(v)) vecs.push_back(v);
  for (std::size_t i = 0; i < vecs.size() && s.dim() < m.dim; ++i) {
    for (const auto& g : m.gens) {
      auto w = linalg::vec_mul(vecs[i], g);
      if (s.insert(w)) vecs.push_back(std::move(w));
      if (s.dim() == m.dim) break;
    }
  }
  return s;
}

std::pair<Module, Module> split(const Module& m, const Subspace& w) {
  const gf::Field& f = *m.field;
  std::vector<std::size_t> piv;
  Matrix r = w.rref_basis(&piv);
  const std::size_t k = r.rows(), n = m.dim;
  std::vector<std::size_t> np;
  for (std::size_t j = 0, p = 0; j < n; ++j) {
    if (p < piv.size() && piv[p] == j)
      ++p;
    else
      np.push_back(j);
  }
  Module sub{m.field, k, {}}, quo{m.field, n - k, {}};
  for (const auto& g : m.gens) {
    Matrix s(m.field, k, k);
    for (std::size_t i = 0; i < k; ++i) {
      auto v = linalg::vec_mul(r.row(i), g);
      for (std::size_t a = 0; a < k; ++a) s(i, a) = v[piv[a]];
    }
    Matrix q(m.field, n - k, n - k);
    for (std::size_t a = 0; a < np.size(); ++a) {
      std::vector<Elem> v(g.row(np[a]).begin(), g.row(np[a]).end());
      for (std::size_t i = 0; i < k; ++i)
        if (v[piv[i]]) linalg::axpy(f, v, f.neg(v[piv[i]]), r.row(i));
      for (std::size_t b = 0; b < np.size(); ++b) q(a, b) = v[np[b]];
    }
    sub.gens.push_back(std::move(s));
    quo.gens.push_back(std::move(q));
  }
  return {std::move(sub), std::move(quo)};
}

std::vector<Poly> fingerprint(const Module& m) {
  std::vector<Poly> out;
  for (const auto& w : standard_words(m.gens.size())) out.push_back(gf::poly::charpoly(w.evaluate(m)));
  std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) { return a < b; });
  return out;
}

std::vector<Matrix> hom_space(const Module& src, const Module& dst, const HomHint* hint) {
  check_compatible(src, dst);
  const gf::Field& f = *src.field;
  const std::size_t ns = src.dim, nd = dst.dim;
  Subspace span(src.field, ns, true);
  std::vector<std::vector<Elem>> b;
  std::vector<Matrix> phi;  // images of b[t] as rows over the unknowns

  std::vector<Elem> seed(ns, 0);
  Matrix cand;
  if (hint) {
    Matrix a = hint->element.evaluate(dst);
    cand = linalg::left_nullspace(gf::poly::eval_matrix(hint->factor, a));
    seed = hint->seed;
  } else {
    seed[0] = 1;
    cand = Matrix::identity(dst.field, nd);
  }
  if (cand.rows() == 0) return {};
  span.insert(seed);
  b.push_back(seed);
  phi.push_back(cand);

  std::size_t idx = 0;
  for (;;) {
    for (; idx < b.size(); ++idx) {
      for (std::size_t g = 0; g < src.gens.size(); ++g) {
        auto w = linalg::vec_mul(b[idx], src.gens[g]);
        Matrix img = phi[idx] * dst.gens[g];
        if (span.insert(w)) {
          b.push_back(std::move(w));
          phi.push_back(std::move(img));
          continue;
        }
        auto c = span.express(w);
        if (!c) fail(ErrorCode::Internal, "dependent vector not expressible");
        for (std::size_t t = 0; t < c->size(); ++t)
          if ((*c)[t]) linalg::axpy(f, img.data(), f.neg((*c)[t]), phi[t].data());
        if (img.is_zero()) continue;
        Matrix l = linalg::left_nullspace(img);
        if (l.rows() == 0) return {};
        for (auto& p : phi) p = l * p;
      }
    }
    if (span.dim() == ns) break;
    std::vector<Elem> e(ns, 0);
    for (std::size_t j = 0; j < ns; ++j) {
      e.assign(ns, 0);
      e[j] = 1;
      if (!span.contains(e)) break;
    }
    const std::size_t k = phi[0].rows();
    for (auto& p : phi) p = linalg::vstack(p, Matrix(dst.field, nd, nd));
    Matrix fresh = linalg::vstack(Matrix(dst.field, k, nd), Matrix::identity(dst.field, nd));
    span.insert(e);
    b.push_back(e);
    phi.push_back(std::move(fresh));
  }

  Matrix bm(src.field, ns, ns);
  for (std::size_t t = 0; t < ns; ++t) std::copy(b[t].begin(), b[t].end(), bm.row(t).begin());
  auto binv = linalg::inverse(bm);
  if (!binv) fail(ErrorCode::Internal, "spinning basis is singular");
  std::vector<Matrix> out;
  const std::size_t k = phi[0].rows();
  for (std::size_t r = 0; r < k; ++r) {
    Matrix img(dst.field, ns, nd);
    for (std::size_t t = 0; t < ns; ++t) std::copy(phi[t].row(r).begin(), phi[t].row(r).end(), img.row(t).begin());
    out.push_back(*binv * img);
  }
  return out;
}

CompositionReport chop(const Module& m, std::uint64_t seed) {
  if (m.dim == 0) fail(ErrorCode::InvalidArgument, "zero module");
  if (m.gens.empty()) fail(ErrorCode::InvalidArgument, "module has no generators");
  std::mt19937_64 rng(seed);
  std::deque<Module> work{m};
  std::vector<Factor> found;
  while (!work.empty()) {
    Module x = std::move(work.front());
    work.pop_front();
    if (x.dim == 1) {
      Witness w = trivial_witness(x);
      found.push_back({std::move(x), std::move(w), {}});
      continue;
    }
    Outcome o = split_or_certify(x, rng);
    if (o.sub) {
      auto parts = split(x, *o.sub);
      work.push_back(std::move(parts.first));
      work.push_back(std::move(parts.second));
    } else {
      found.push_back({std::move(x), std::move(o.witness), {}});
    }
  }

  struct Class {
    std::size_t first;  // index into found
    std::size_t mult;
  };
  std::vector<Class> classes;
  for (std::size_t i = 0; i < found.size(); ++i) {
    found[i].fingerprint = fingerprint(found[i].module);
    bool matched = false;
    for (auto& c : classes) {
      const Factor& rep = found[c.first];
      if (rep.module.dim != found[i].module.dim || rep.fingerprint != found[i].fingerprint) continue;
      if (!hom_space(rep.module, found[i].module, &rep.witness).empty()) {
        ++c.mult;
        matched = true;
        break;
      }
    }
    if (!matched) classes.push_back({i, 1});
  }
  std::stable_sort(classes.begin(), classes.end(), [&](const Class& a, const Class& b) {
    const Factor& fa = found[a.first];
    const Factor& fb = found[b.first];
    if (fa.module.dim != fb.module.dim) return fa.module.dim < fb.module.dim;
    return fingerprint_less(fa.fingerprint, fb.fingerprint);
  });

  CompositionReport rep;
  rep.field = m.field;
  rep.dim = m.dim;
  rep.seed = seed;
  rep.total_length = found.size();
  for (std::size_t id = 0; id < classes.size(); ++id) {
    const Factor& fct = found[classes[id].first];
    rep.factors.push_back({(int)id, fct.module.dim, classes[id].mult});
    rep.representatives.push_back(fct);
  }
  return rep;
}

bool is_isomorphic(const Module& a, const Module& b, std::uint64_t seed) {
  check_compatible(a, b);
  std::mt19937_64 rng(seed);
  Witness wa;
  if (a.dim == 1) {
    wa = trivial_witness(a);
  } else {
    Outcome oa = split_or_certify(a, rng);
    if (oa.sub) fail(ErrorCode::NotIrreducible, "first module is reducible");
    wa = oa.witness;
  }
  if (b.dim > 1 && split_or_certify(b, rng).sub) fail(ErrorCode::NotIrreducible, "second module is reducible");
  if (a.dim != b.dim) return false;
  return !hom_space(a, b, &wa).empty();
}

SocleReport socle_series(const Module& m, std::uint64_t seed) {
  SocleReport out;
  out.composition = chop(m, seed);
  const auto& reps = out.composition.representatives;
  Module y = m;
  while (y.dim > 0) {
    Subspace soc(y.field, y.dim);
    std::vector<std::pair<int, std::size_t>> layer;
    std::size_t total = 0;
    for (std::size_t id = 0; id < reps.size(); ++id) {
      auto homs = hom_space(reps[id].module, y, &reps[id].witness);
      if (homs.empty()) continue;
      Subspace part(y.field, y.dim);
      for (const auto& h : homs)
        for (std::size_t r = 0; r < h.rows(); ++r) {
          part.insert(h.row(r));
          soc.insert(h.row(r));
        }
      const std::size_t d = reps[id].module.dim;
      if (part.dim() % d != 0) fail(ErrorCode::Internal, "isotypic socle part has bad dimension");
      layer.push_back({(int)id, part.dim() / d});
      total += part.dim();
    }
    if (soc.dim() == 0 || soc.dim() != total) fail(ErrorCode::Internal, "socle computation inconsistent");
    out.layers.push_back(std::move(layer));
    if (soc.dim() == y.dim) break;
    y = split(y, soc).second;
  }
  out.semisimple = out.layers.size() == 1;
  out.uniserial = true;
  for (const auto& l : out.layers) out.uniserial = out.uniserial && l.size() == 1 && l[0].second == 1;
  return out;
}

EndAlgebra endomorphism_algebra(const Module& m) {
  auto homs = hom_space(m, m, nullptr);
  EndAlgebra e;
  e.field = m.field;
  e.dim = homs.size();
  const std::size_t n = m.dim;
  Subspace flat(m.field, n * n, true);
  for (const auto& h : homs) {
    Matrix c = h.transpose();
    flat.insert(c.data());
    e.basis.push_back(std::move(c));
  }
  e.structure.assign(e.dim * e.dim * e.dim, 0);
  for (std::size_t a = 0; a < e.dim; ++a)
    for (std::size_t b = 0; b < e.dim; ++b) {
      Matrix p = e.basis[a] * e.basis[b];
      auto c = flat.express(p.data());
      if (!c) fail(ErrorCode::Internal, "endomorphism algebra not closed");
      for (std::size_t k = 0; k < e.dim; ++k) e.structure[(a * e.dim + b) * e.dim + k] = (*c)[k];
    }
  return e;
}

QuadraticParameter quadratic_parameter(const EndAlgebra& e, std::uint32_t q0) {
  if (e.dim != 2) fail(ErrorCode::NotRankTwo, "endomorphism algebra has dimension " + std::to_string(e.dim));
  const gf::Field& f = *e.field;
  const std::size_t n = e.basis[0].rows();
  Matrix d(e.field, 2, n);
  for (std::size_t i = 0; i < n; ++i) {
    d(0, i) = e.basis[0](i, i);
    d(1, i) = e.basis[1](i, i);
  }
  Matrix ns = linalg::left_nullspace(d);
  if (ns.rows() != 1) fail(ErrorCode::AmbiguousParameter, "no unique trace-free basis element");
  Matrix a = linalg::scaled(e.basis[0], ns(0, 0)) + linalg::scaled(e.basis[1], ns(0, 1));
  Matrix a2 = a * a;
  std::size_t pos = 0;
  while (pos < a.data().size() && a.data()[pos] == 0) ++pos;
  if (pos == a.data().size()) fail(ErrorCode::Internal, "zero operator");
  const Elem s = f.div(a2.data()[pos], a.data()[pos]);
  const Elem t = f.sub(a2(0, 0), f.mul(s, a(0, 0)));
  Matrix check = linalg::scaled(a, s) + linalg::scaled(Matrix::identity(e.field, n), t);
  if (!(check == a2)) fail(ErrorCode::Internal, "operator is not quadratic");
  // Roots of x^2 - s x - t.
  std::vector<Elem> roots;
  for (Elem x = 0; x < f.order(); ++x)
    if (f.sub(f.sub(f.mul(x, x), f.mul(s, x)), t) == 0) roots.push_back(x);
  if (roots.size() == 1) roots.push_back(roots[0]);
  if (roots.size() != 2 || roots[0] == 0 || roots[1] == 0)
    fail(ErrorCode::AmbiguousParameter, "minimal polynomial has no two nonzero roots");
  struct Match {
    int k;
    Elem l1, l2;
  };
  std::vector<Match> matches;
  const std::uint64_t ell = f.characteristic();
  for (int swap = 0; swap < 2; ++swap) {
    Elem l1 = roots[swap], l2 = roots[1 - swap];
    Elem ratio = f.neg(f.div(l1, l2));
    std::uint64_t pw = 1;
    for (int k = 1; k <= 3; ++k) {
      pw = pw * q0 % ell;
      if (f.from_int((std::int64_t)pw) == ratio) matches.push_back({k, l1, l2});
    }
  }
  if (matches.empty()) fail(ErrorCode::AmbiguousParameter, "eigenvalue ratio is not a small power of q0");
  for (const auto& mt : matches)
    if (mt.k != matches[0].k) fail(ErrorCode::AmbiguousParameter, "eigenvalue ratio matches several powers of q0");
  QuadraticParameter qp;
  qp.exponent = matches[0].k;
  qp.d = gf::ipow(q0, (unsigned)qp.exponent);
  qp.lambda1 = matches[0].l1;
  qp.lambda2 = matches[0].l2;
  // T = -A/lambda2: T^2 = (-s/lambda2) T + t/lambda2^2.
  qp.c1 = f.neg(f.div(s, qp.lambda2));
  qp.c0 = f.div(t, f.mul(qp.lambda2, qp.lambda2));
  return qp;
}

}  // namespace u21::meataxe
