#include "homalg/axioms.hpp"

#include <algorithm>
#include <sstream>

namespace homalg {

namespace {

std::vector<IndexTuple> tuples_lex(int dim, int len) {
  std::vector<IndexTuple> out;
  IndexTuple t(static_cast<size_t>(len), 1);
  while (true) {
    out.push_back(t);
    int slot = len - 1;
    while (slot >= 0 && t[slot] == dim) {
      t[slot] = 1;
      --slot;
    }
    if (slot < 0) break;
    ++t[slot];
  }
  return out;
}

// Tuple order for short-circuit scans: stored-table tuples first, so
// candidates failing on the nonzero part of the product die early.
std::vector<IndexTuple> tuples_fail_fast(const StructureTensor& t) {
  std::vector<IndexTuple> out;
  for (const auto& [key, coeff] : t.table()) {
    (void)coeff;
    out.push_back(key);
  }
  for (auto& tuple : tuples_lex(t.dim(), t.arity()))
    if (!t.coeff_ptr(tuple)) out.push_back(std::move(tuple));
  return out;
}

// Nonempty subsets of {0..n-1} as bitmasks, by popcount then value, so the
// weight^0 terms come first.
std::vector<unsigned> nonempty_subsets(int n) {
  std::vector<unsigned> out;
  for (unsigned m = 1; m < (1u << n); ++m) out.push_back(m);
  std::stable_sort(out.begin(), out.end(), [](unsigned a, unsigned b) {
    return __builtin_popcount(a) < __builtin_popcount(b);
  });
  return out;
}

struct SubsetExpansion {
  std::vector<unsigned> subsets;
  std::vector<Scalar> weight_pow;  // weight^(|I|-1) per subset

  SubsetExpansion(int n, const Scalar& weight) : subsets(nonempty_subsets(n)) {
    weight_pow.reserve(subsets.size());
    for (unsigned m : subsets)
      weight_pow.push_back(weight.pow(static_cast<unsigned long>(__builtin_popcount(m) - 1)));
  }
};

// Per-tuple derivation identity, Leibniz side first.
std::pair<Vec, Vec> derivation_sides(const HomAlgebra& a, const Matrix& d,
                                     const std::vector<Vec>& dcols,
                                     const std::vector<Vec>& acols, const SubsetExpansion& ex,
                                     const IndexTuple& t) {
  const int n = a.arity();
  Vec lhs = d.apply(a.tensor().coeff(t));
  Vec rhs = zero_vec(a.field(), a.dim());
  std::vector<Vec> args(static_cast<size_t>(n), Vec{});
  for (size_t s = 0; s < ex.subsets.size(); ++s) {
    for (int i = 0; i < n; ++i)
      args[static_cast<size_t>(i)] =
          (ex.subsets[s] >> i) & 1 ? dcols[static_cast<size_t>(t[i] - 1)]
                                   : acols[static_cast<size_t>(t[i] - 1)];
    vec_axpy(rhs, ex.weight_pow[s], a.bracket(args));
  }
  return {std::move(lhs), std::move(rhs)};
}

std::pair<Vec, Vec> rota_baxter_sides(const HomAlgebra& a, const Matrix& p,
                                      const std::vector<Vec>& pcols, const SubsetExpansion& ex,
                                      const IndexTuple& t) {
  const int n = a.arity();
  std::vector<Vec> args(static_cast<size_t>(n), Vec{});
  for (int i = 0; i < n; ++i) args[static_cast<size_t>(i)] = pcols[static_cast<size_t>(t[i] - 1)];
  Vec lhs = a.bracket(args);
  Vec inner = zero_vec(a.field(), a.dim());
  for (size_t s = 0; s < ex.subsets.size(); ++s) {
    for (int i = 0; i < n; ++i)
      args[static_cast<size_t>(i)] = (ex.subsets[s] >> i) & 1
                                         ? basis_vec(a.field(), a.dim(), t[i])
                                         : pcols[static_cast<size_t>(t[i] - 1)];
    vec_axpy(inner, ex.weight_pow[s], a.bracket(args));
  }
  return {std::move(lhs), p.apply(inner)};
}

Vec kernel_expression(const HomAlgebra& base, const LinearFunctional& f, const Matrix& p,
                      KernelVariant variant, const std::optional<Matrix>& dmat,
                      const std::vector<Vec>& pcols, const std::vector<Vec>& acols, int i, int j,
                      int k) {
  const FieldSpec& fld = base.field();
  const int d = base.dim();
  auto fv = [&](int idx) { return f.covector[static_cast<size_t>(idx - 1)]; };
  auto pc = [&](int idx) -> const Vec& { return pcols[static_cast<size_t>(idx - 1)]; };
  auto e = [&](int idx) { return basis_vec(fld, d, idx); };
  Vec v = zero_vec(fld, d);
  switch (variant) {
    case KernelVariant::Thm1Lie: {
      vec_axpy(v, fv(i), base.bracket2(pc(j), pc(k)));
      vec_axpy(v, fv(j), base.bracket2(pc(k), pc(i)));
      vec_axpy(v, fv(k), base.bracket2(pc(i), pc(j)));
      return v;
    }
    case KernelVariant::Thm2PreLie: {
      vec_axpy(v, fv(i), vec_sub(base.bracket2(pc(j), pc(k)), base.bracket2(pc(k), pc(j))));
      vec_axpy(v, fv(j), vec_sub(base.bracket2(pc(k), pc(i)), base.bracket2(pc(i), pc(k))));
      vec_axpy(v, fv(k), vec_sub(base.bracket2(pc(i), pc(j)), base.bracket2(pc(j), pc(i))));
      return v;
    }
    case KernelVariant::Thm7Assoc: {
      Vec pax = p.apply(acols[static_cast<size_t>(i - 1)]);
      Vec pay = p.apply(acols[static_cast<size_t>(j - 1)]);
      Vec paz = p.apply(acols[static_cast<size_t>(k - 1)]);
      vec_axpy(v, fv(i), vec_sub(base.bracket2(pay, pc(k)), base.bracket2(pc(k), pay)));
      vec_axpy(v, fv(j), vec_sub(base.bracket2(paz, pc(i)), base.bracket2(pc(i), paz)));
      vec_axpy(v, fv(k), vec_sub(base.bracket2(pax, pc(j)), base.bracket2(pc(j), pax)));
      return v;
    }
    case KernelVariant::Thm3fD: {
      if (!dmat) throw std::invalid_argument("Thm3fD kernel condition needs a derivation matrix");
      const int arg[3] = {i, j, k};
      static const int perm[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                                     {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
      Matrix dp = *dmat * p;
      for (int s = 0; s < 6; ++s) {
        Scalar c = fv(arg[perm[s][0]]);
        if (s >= 3) c = -c;
        Vec dpy = dp.apply(e(arg[perm[s][1]]));
        vec_axpy(v, c, base.bracket2(dpy, pc(arg[perm[s][2]])));
      }
      return v;
    }
    case KernelVariant::CorP2: {
      Vec t1 = vec_sub(vec_scale(fv(i), pc(j)), vec_scale(fv(j), pc(i)));
      Vec t2 = vec_sub(vec_scale(fv(j), pc(k)), vec_scale(fv(k), pc(j)));
      Vec t3 = vec_sub(vec_scale(fv(k), pc(i)), vec_scale(fv(i), pc(k)));
      v = vec_add(vec_add(base.bracket2(t1, e(k)), base.bracket2(t2, e(i))),
                  base.bracket2(t3, e(j)));
      return v;
    }
  }
  throw std::invalid_argument("unknown kernel variant");
}

Vec kernel_apply(const Matrix& p, const Scalar& weight, KernelVariant variant, const Vec& v) {
  if (variant == KernelVariant::CorP2) return p.apply(p.apply(v));
  Vec out = p.apply(v);
  vec_axpy(out, weight, v);
  return out;
}

void require_binary(const HomAlgebra& a, const char* what) {
  if (a.arity() != 2) throw std::invalid_argument(std::string(what) + " needs a binary product");
}

void require_ternary(const HomAlgebra& a, const char* what) {
  if (a.arity() != 3) throw std::invalid_argument(std::string(what) + " needs a ternary product");
}

void require_square(const HomAlgebra& a, const Matrix& m, const char* what) {
  if (m.rows() != a.dim() || m.cols() != a.dim())
    throw DimensionMismatch(std::string(what) + ": operator shape does not match algebra");
  if (m.field() != a.field()) throw FieldMismatch(std::string(what) + ": operator field mismatch");
}

}  // namespace

std::vector<Vec> matrix_columns(const Matrix& m) {
  std::vector<Vec> cols;
  cols.reserve(static_cast<size_t>(m.cols()));
  for (int j = 0; j < m.cols(); ++j) {
    Vec c = zero_vec(m.field(), m.rows());
    for (int i = 0; i < m.rows(); ++i) c[static_cast<size_t>(i)] = m.at(i, j);
    cols.push_back(std::move(c));
  }
  return cols;
}

AxiomReport is_skew_symmetric(const StructureTensor& t, int cap) {
  AxiomReport r{"skew-symmetric"};
  const int n = t.arity();
  Vec zero = zero_vec(t.field(), t.dim());
  for (const auto& tuple : tuples_lex(t.dim(), n)) {
    bool repeated = false;
    for (int a = 0; a < n && !repeated; ++a)
      for (int b = a + 1; b < n; ++b)
        if (tuple[a] == tuple[b]) {
          repeated = true;
          break;
        }
    if (repeated) {
      r.note(tuple, t.coeff(tuple), zero, cap);
      continue;
    }
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        IndexTuple sw = tuple;
        std::swap(sw[a], sw[b]);
        r.note(tuple, t.coeff(sw), vec_neg(t.coeff(tuple)), cap);
      }
  }
  return r;
}

AxiomReport check_multiplicative(const HomAlgebra& a, int cap) {
  AxiomReport r{"multiplicative"};
  auto acols = matrix_columns(a.twist());
  std::vector<Vec> args(static_cast<size_t>(a.arity()), Vec{});
  for (const auto& t : tuples_lex(a.dim(), a.arity())) {
    Vec lhs = a.alpha(a.tensor().coeff(t));
    for (int i = 0; i < a.arity(); ++i)
      args[static_cast<size_t>(i)] = acols[static_cast<size_t>(t[i] - 1)];
    r.note(t, lhs, a.bracket(args), cap);
  }
  return r;
}

AxiomReport check_hom_nambu(const HomAlgebra& a, int cap) {
  AxiomReport r{"hom-nambu"};
  const int n = a.arity();
  const int d = a.dim();
  auto acols = matrix_columns(a.twist());
  auto e = [&](int i) { return basis_vec(a.field(), d, i); };
  // tuple layout: (y2..yn, x1..xn)
  for (const auto& t : tuples_lex(d, 2 * n - 1)) {
    std::vector<int> y(t.begin(), t.begin() + (n - 1));
    std::vector<int> x(t.begin() + (n - 1), t.end());
    IndexTuple xt(x.begin(), x.end());
    std::vector<Vec> args;
    args.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n - 1; ++i) args.push_back(acols[static_cast<size_t>(y[i] - 1)]);
    args.push_back(a.tensor().coeff(xt));
    Vec lhs = a.bracket(args);
    Vec rhs = zero_vec(a.field(), d);
    for (int i = 0; i < n; ++i) {
      std::vector<Vec> inner_args;
      inner_args.reserve(static_cast<size_t>(n));
      inner_args.push_back(e(x[static_cast<size_t>(i)]));
      for (int q = 0; q < n - 1; ++q) inner_args.push_back(e(y[static_cast<size_t>(q)]));
      Vec inner = a.bracket(inner_args);
      std::vector<Vec> outer;
      outer.reserve(static_cast<size_t>(n));
      for (int q = 0; q < n; ++q)
        outer.push_back(q == i ? inner : acols[static_cast<size_t>(x[static_cast<size_t>(q)] - 1)]);
      rhs = vec_add(rhs, a.bracket(outer));
    }
    r.note(t, lhs, rhs, cap);
  }
  return r;
}

AxiomReport check_nambu_form(const HomAlgebra& a, NambuForm form, int cap) {
  require_ternary(a, "nambu form check");
  const char* name = form == NambuForm::Eq33 ? "nambu-form-eq33"
                     : form == NambuForm::Eq3 ? "nambu-form-eq3"
                                              : "nambu-form-eq2";
  AxiomReport r{name};
  auto acols = matrix_columns(a.twist());
  auto e = [&](int i) { return basis_vec(a.field(), a.dim(), i); };
  auto al = [&](int i) -> const Vec& { return acols[static_cast<size_t>(i - 1)]; };
  auto br = [&](const Vec& u, const Vec& v, const Vec& w) { return a.bracket3(u, v, w); };
  // tuple layout: (y2, y3, x1, x2, x3)
  for (const auto& t : tuples_lex(a.dim(), 5)) {
    int y2 = t[0], y3 = t[1], x1 = t[2], x2 = t[3], x3 = t[4];
    Vec inner_x = a.tensor().coeff({x1, x2, x3});
    Vec c1 = br(a.tensor().coeff({x1, y2, y3}), al(x2), al(x3));
    Vec lhs, rhs;
    switch (form) {
      case NambuForm::Eq33:
        lhs = br(al(y2), al(y3), inner_x);
        rhs = vec_add(vec_add(c1, br(al(x1), a.tensor().coeff({x2, y2, y3}), al(x3))),
                      br(al(x1), al(x2), a.tensor().coeff({x3, y2, y3})));
        break;
      case NambuForm::Eq3:
        lhs = br(inner_x, al(y2), al(y3));
        rhs = vec_add(vec_add(c1, br(a.tensor().coeff({x2, y2, y3}), al(x3), al(x1))),
                      br(a.tensor().coeff({x3, y2, y3}), al(x1), al(x2)));
        break;
      case NambuForm::Eq2:
        lhs = br(inner_x, al(y2), al(y3));
        rhs = vec_add(vec_add(c1, br(al(x1), a.tensor().coeff({x2, y2, y3}), al(x3))),
                      br(al(x1), al(x2), a.tensor().coeff({x3, y2, y3})));
        break;
    }
    (void)e;
    r.note(t, lhs, rhs, cap);
  }
  return r;
}

AxiomReport check_hom_associative(const HomAlgebra& a, int cap) {
  require_binary(a, "hom-associativity check");
  AxiomReport r{"hom-associative"};
  auto acols = matrix_columns(a.twist());
  for (const auto& t : tuples_lex(a.dim(), 3)) {
    int x = t[0], y = t[1], z = t[2];
    Vec lhs = a.bracket2(acols[static_cast<size_t>(x - 1)], a.tensor().coeff({y, z}));
    Vec rhs = a.bracket2(a.tensor().coeff({x, y}), acols[static_cast<size_t>(z - 1)]);
    r.note(t, lhs, rhs, cap);
  }
  return r;
}

AxiomReport check_commutative(const HomAlgebra& a, int cap) {
  require_binary(a, "commutativity check");
  AxiomReport r{"commutative"};
  for (const auto& t : tuples_lex(a.dim(), 2))
    r.note(t, a.tensor().coeff(t), a.tensor().coeff({t[1], t[0]}), cap);
  return r;
}

AxiomReport check_hom_prelie(const HomAlgebra& a, int cap) {
  require_binary(a, "pre-Lie check");
  AxiomReport r{"hom-prelie"};
  auto acols = matrix_columns(a.twist());
  auto al = [&](int i) -> const Vec& { return acols[static_cast<size_t>(i - 1)]; };
  for (const auto& t : tuples_lex(a.dim(), 3)) {
    int x = t[0], y = t[1], z = t[2];
    Vec lhs = vec_sub(a.bracket2(al(x), a.tensor().coeff({y, z})),
                      a.bracket2(a.tensor().coeff({x, y}), al(z)));
    Vec rhs = vec_sub(a.bracket2(al(y), a.tensor().coeff({x, z})),
                      a.bracket2(a.tensor().coeff({y, x}), al(z)));
    r.note(t, lhs, rhs, cap);
  }
  return r;
}

AxiomReport check_hom_lie(const HomAlgebra& a, int cap) {
  require_binary(a, "Hom-Lie check");
  AxiomReport skew = is_skew_symmetric(a.tensor(), cap);
  AxiomReport r{"hom-lie"};
  r.checked = skew.checked;
  r.pass = skew.pass;
  r.violations = skew.violations;
  auto acols = matrix_columns(a.twist());
  auto al = [&](int i) -> const Vec& { return acols[static_cast<size_t>(i - 1)]; };
  Vec zero = zero_vec(a.field(), a.dim());
  for (const auto& t : tuples_lex(a.dim(), 3)) {
    int x = t[0], y = t[1], z = t[2];
    Vec jac = vec_add(vec_add(a.bracket2(al(x), a.tensor().coeff({y, z})),
                              a.bracket2(al(y), a.tensor().coeff({z, x}))),
                      a.bracket2(al(z), a.tensor().coeff({x, y})));
    r.note(t, jac, zero, cap);
  }
  return r;
}

AxiomReport check_hom_lie_triple(const HomAlgebra& a, int cap) {
  require_ternary(a, "Hom-Lie triple system check");
  AxiomReport r{"hom-lie-triple"};
  Vec zero = zero_vec(a.field(), a.dim());
  // (1) [x,y,y] = 0
  for (const auto& t : tuples_lex(a.dim(), 2)) r.note(t, a.tensor().coeff({t[0], t[1], t[1]}), zero, cap);
  // (2) [x,y,z] + [y,x,z] + [z,x,y] = 0
  for (const auto& t : tuples_lex(a.dim(), 3)) {
    int x = t[0], y = t[1], z = t[2];
    Vec sum = vec_add(vec_add(a.tensor().coeff({x, y, z}), a.tensor().coeff({y, x, z})),
                      a.tensor().coeff({z, x, y}));
    r.note(t, sum, zero, cap);
  }
  // (3) [[x,y,z],a(u),a(v)] = [[x,u,v],a(y),a(z)] + [a(x),[y,u,v],a(z)]
  //     + [a(x),a(y),[z,u,v]]
  auto acols = matrix_columns(a.twist());
  auto al = [&](int i) -> const Vec& { return acols[static_cast<size_t>(i - 1)]; };
  for (const auto& t : tuples_lex(a.dim(), 5)) {
    int x = t[0], y = t[1], z = t[2], u = t[3], v = t[4];
    Vec lhs = a.bracket3(a.tensor().coeff({x, y, z}), al(u), al(v));
    Vec rhs = vec_add(vec_add(a.bracket3(a.tensor().coeff({x, u, v}), al(y), al(z)),
                              a.bracket3(al(x), a.tensor().coeff({y, u, v}), al(z))),
                      a.bracket3(al(x), al(y), a.tensor().coeff({z, u, v})));
    r.note(t, lhs, rhs, cap);
  }
  return r;
}

AxiomReport check_centroid(const HomAlgebra& a, const Matrix& m, int cap) {
  require_binary(a, "centroid check");
  require_square(a, m, "centroid check");
  AxiomReport r{"centroid"};
  auto mcols = matrix_columns(m);
  for (const auto& t : tuples_lex(a.dim(), 2)) {
    int x = t[0], y = t[1];
    Vec mxy = m.apply(a.tensor().coeff({x, y}));
    r.note(t, mxy, a.bracket2(mcols[static_cast<size_t>(x - 1)], a.basis(y)), cap);
    r.note(t, mxy, a.bracket2(a.basis(x), mcols[static_cast<size_t>(y - 1)]), cap);
  }
  return r;
}

AxiomReport check_involution(const HomAlgebra& a, const Matrix& w, int cap) {
  require_binary(a, "involution check");
  require_square(a, w, "involution check");
  AxiomReport r{"involution"};
  Matrix w2 = w * w;
  for (int i = 1; i <= a.dim(); ++i)
    r.note({i}, w2.apply(a.basis(i)), a.basis(i), cap);
  auto wcols = matrix_columns(w);
  for (const auto& t : tuples_lex(a.dim(), 2)) {
    Vec lhs = w.apply(a.tensor().coeff(t));
    Vec rhs = a.bracket2(wcols[static_cast<size_t>(t[0] - 1)], wcols[static_cast<size_t>(t[1] - 1)]);
    r.note(t, lhs, rhs, cap);
  }
  return r;
}

AxiomReport check_alpha_k_derivation(const HomAlgebra& a, const Matrix& d, int k, int cap) {
  require_binary(a, "alpha^k-derivation check");
  require_square(a, d, "alpha^k-derivation check");
  AxiomReport r{"alpha-k-derivation"};
  Matrix da = d * a.twist();
  Matrix ad = a.twist() * d;
  for (int i = 1; i <= a.dim(); ++i) r.note({i}, da.apply(a.basis(i)), ad.apply(a.basis(i)), cap);
  Matrix ak = a.twist().pow(static_cast<unsigned long>(k));
  auto dcols = matrix_columns(d);
  auto akcols = matrix_columns(ak);
  for (const auto& t : tuples_lex(a.dim(), 2)) {
    int x = t[0], y = t[1];
    Vec lhs = d.apply(a.tensor().coeff({x, y}));
    Vec rhs = vec_add(a.bracket2(dcols[static_cast<size_t>(x - 1)], akcols[static_cast<size_t>(y - 1)]),
                      a.bracket2(akcols[static_cast<size_t>(x - 1)], dcols[static_cast<size_t>(y - 1)]));
    r.note(t, lhs, rhs, cap);
  }
  return r;
}

AxiomReport check_derivation_weight(const HomAlgebra& a, const WeightedOperator& d, int cap) {
  if (d.kind != OperatorKind::Derivation)
    throw std::invalid_argument("check_derivation_weight expects a Derivation operator");
  require_square(a, d.matrix, "weighted derivation check");
  AxiomReport r{"derivation-weight"};
  Matrix da = d.matrix * a.twist();
  Matrix ad = a.twist() * d.matrix;
  for (int i = 1; i <= a.dim(); ++i) r.note({i}, da.apply(a.basis(i)), ad.apply(a.basis(i)), cap);
  SubsetExpansion ex(a.arity(), d.weight);
  auto dcols = matrix_columns(d.matrix);
  auto acols = matrix_columns(a.twist());
  for (const auto& t : tuples_lex(a.dim(), a.arity())) {
    auto [lhs, rhs] = derivation_sides(a, d.matrix, dcols, acols, ex, t);
    r.note(t, lhs, rhs, cap);
  }
  return r;
}

AxiomReport check_rota_baxter(const HomAlgebra& a, const WeightedOperator& p, int cap) {
  if (p.kind != OperatorKind::RotaBaxter)
    throw std::invalid_argument("check_rota_baxter expects a RotaBaxter operator");
  require_square(a, p.matrix, "Rota-Baxter check");
  AxiomReport r{"rota-baxter"};
  SubsetExpansion ex(a.arity(), p.weight);
  auto pcols = matrix_columns(p.matrix);
  for (const auto& t : tuples_lex(a.dim(), a.arity())) {
    auto [lhs, rhs] = rota_baxter_sides(a, p.matrix, pcols, ex, t);
    r.note(t, lhs, rhs, cap);
  }
  return r;
}

AxiomReport check_kernel_condition(const HomAlgebra& base, const LinearFunctional& f,
                                   const WeightedOperator& p, KernelVariant variant,
                                   const std::optional<Matrix>& d, int cap) {
  require_binary(base, "kernel condition check");
  require_square(base, p.matrix, "kernel condition check");
  if (static_cast<int>(f.covector.size()) != base.dim())
    throw DimensionMismatch("functional length does not match algebra dimension");
  AxiomReport r{std::string("kernel-") + kernel_variant_name(variant)};
  auto pcols = matrix_columns(p.matrix);
  auto acols = matrix_columns(base.twist());
  Vec zero = zero_vec(base.field(), base.dim());
  for (const auto& t : tuples_lex(base.dim(), 3)) {
    Vec expr = kernel_expression(base, f, p.matrix, variant, d, pcols, acols, t[0], t[1], t[2]);
    r.note(t, kernel_apply(p.matrix, p.weight, variant, expr), zero, cap);
  }
  return r;
}

bool holds_rota_baxter(const HomAlgebra& a, const Matrix& p, const Scalar& weight) {
  SubsetExpansion ex(a.arity(), weight);
  auto pcols = matrix_columns(p);
  for (const auto& t : tuples_fail_fast(a.tensor())) {
    auto [lhs, rhs] = rota_baxter_sides(a, p, pcols, ex, t);
    if (lhs != rhs) return false;
  }
  return true;
}

bool holds_derivation_weight(const HomAlgebra& a, const Matrix& d, const Scalar& weight) {
  if (!commutes(d, a.twist())) return false;
  SubsetExpansion ex(a.arity(), weight);
  auto dcols = matrix_columns(d);
  auto acols = matrix_columns(a.twist());
  for (const auto& t : tuples_fail_fast(a.tensor())) {
    auto [lhs, rhs] = derivation_sides(a, d, dcols, acols, ex, t);
    if (lhs != rhs) return false;
  }
  return true;
}

bool holds_kernel_condition(const HomAlgebra& base, const LinearFunctional& f, const Matrix& p,
                            const Scalar& weight, KernelVariant variant,
                            const std::optional<Matrix>& dmat) {
  auto pcols = matrix_columns(p);
  auto acols = matrix_columns(base.twist());
  for (const auto& t : tuples_lex(base.dim(), 3)) {
    Vec expr = kernel_expression(base, f, p, variant, dmat, pcols, acols, t[0], t[1], t[2]);
    if (!vec_is_zero(kernel_apply(p, weight, variant, expr))) return false;
  }
  return true;
}

const char* kernel_variant_name(KernelVariant v) {
  switch (v) {
    case KernelVariant::Thm1Lie: return "thm1-lie";
    case KernelVariant::Thm2PreLie: return "thm2-prelie";
    case KernelVariant::Thm7Assoc: return "thm7-assoc";
    case KernelVariant::Thm3fD: return "thm3-fd";
    case KernelVariant::CorP2: return "cor-p2";
  }
  return "unknown";
}

std::string AxiomReport::summary() const {
  std::ostringstream os;
  os << axiom << ": " << (pass ? "pass" : "FAIL") << " (" << checked << " tuples checked";
  if (!violations.empty()) {
    os << "; first violation at (";
    for (size_t i = 0; i < violations.front().tuple.size(); ++i)
      os << (i ? "," : "") << violations.front().tuple[i];
    os << ")";
  }
  os << ")";
  return os.str();
}

}  // namespace homalg
