#include "homalg/constructions.hpp"

#include <functional>

namespace homalg {

namespace {

constexpr int kPerm3[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};

StructureTensor tensor_from_fn(int dim, int arity, const FieldSpec& f,
                               const std::function<Vec(const IndexTuple&)>& fn) {
  StructureTensor t(dim, arity, f);
  IndexTuple idx(static_cast<size_t>(arity), 1);
  while (true) {
    t.set(idx, fn(idx));
    int slot = arity - 1;
    while (slot >= 0 && idx[slot] == dim) {
      idx[slot] = 1;
      --slot;
    }
    if (slot < 0) break;
    ++idx[slot];
  }
  return t;
}

void require_pass(std::vector<AxiomReport>& sink, AxiomReport r) {
  bool ok = r.pass;
  sink.push_back(std::move(r));
  if (!ok) throw HypothesisFailed(sink.back());
}

AxiomReport flag_report(const std::string& name, bool ok) {
  AxiomReport r{name};
  r.checked = 1;
  r.pass = ok;
  if (!ok) r.violations.push_back({{}, {}, {}});
  return r;
}

AxiomReport report_identity_twist(const HomAlgebra& a) {
  AxiomReport r{"identity-twist"};
  for (int i = 1; i <= a.dim(); ++i)
    r.note({i}, a.alpha(a.basis(i)), a.basis(i), AxiomReport::kDefaultViolationCap);
  return r;
}

AxiomReport report_matrix_equal(const std::string& name, const Matrix& lhs, const Matrix& rhs) {
  AxiomReport r{name};
  for (int i = 1; i <= lhs.cols(); ++i) {
    Vec e = basis_vec(lhs.field(), lhs.cols(), i);
    r.note({i}, lhs.apply(e), rhs.apply(e), AxiomReport::kDefaultViolationCap);
  }
  return r;
}

AxiomReport report_endomorphism(const HomAlgebra& a, const Matrix& beta,
                                const std::string& name) {
  AxiomReport r = check_multiplicative(HomAlgebra(a.tensor(), beta));
  r.axiom = name;
  return r;
}

// D(xy) = D(x)y + xD(y) on basis pairs, without requiring D alpha = alpha D.
AxiomReport report_plain_derivation(const HomAlgebra& a, const Matrix& d) {
  AxiomReport r{"plain-derivation"};
  auto dcols = matrix_columns(d);
  for (int i = 1; i <= a.dim(); ++i)
    for (int j = 1; j <= a.dim(); ++j) {
      Vec lhs = d.apply(a.tensor().coeff({i, j}));
      Vec rhs = vec_add(a.bracket2(dcols[static_cast<size_t>(i - 1)], a.basis(j)),
                        a.bracket2(a.basis(i), dcols[static_cast<size_t>(j - 1)]));
      r.note({i, j}, lhs, rhs, AxiomReport::kDefaultViolationCap);
    }
  return r;
}

Vec scalar_vec(const Scalar& s) { return Vec{s}; }

WeightedOperator as_weight(const WeightedOperator& op, OperatorKind kind) {
  WeightedOperator out = op;
  out.kind = kind;
  return out;
}

}  // namespace

bool ConstructionResult::conclusions_pass() const {
  for (const auto& r : conclusion_reports)
    if (!r.pass) return false;
  return true;
}

AxiomReport report_functional_annihilates(const HomAlgebra& a, const LinearFunctional& f) {
  AxiomReport r{"functional-annihilates-bracket"};
  Vec zero = scalar_vec(Scalar::zero(a.field()));
  for (int i = 1; i <= a.dim(); ++i)
    for (int j = 1; j <= a.dim(); ++j)
      r.note({i, j}, scalar_vec(f.apply(a.tensor().coeff({i, j}))), zero,
             AxiomReport::kDefaultViolationCap);
  return r;
}

AxiomReport report_functional_alpha_compat(const HomAlgebra& a, const LinearFunctional& f) {
  AxiomReport r{"functional-twist-compatible"};
  auto acols = matrix_columns(a.twist());
  std::vector<Scalar> fa, fe;
  for (int i = 1; i <= a.dim(); ++i) {
    fa.push_back(f.apply(acols[static_cast<size_t>(i - 1)]));
    fe.push_back(f.covector[static_cast<size_t>(i - 1)]);
  }
  for (int i = 1; i <= a.dim(); ++i)
    for (int j = 1; j <= a.dim(); ++j)
      r.note({i, j}, scalar_vec(fa[static_cast<size_t>(i - 1)] * fe[static_cast<size_t>(j - 1)]),
             scalar_vec(fa[static_cast<size_t>(j - 1)] * fe[static_cast<size_t>(i - 1)]),
             AxiomReport::kDefaultViolationCap);
  return r;
}

ConstructionResult bracket_from_functional(const HomAlgebra& a, const LinearFunctional& f,
                                           bool verify_conclusion) {
  std::vector<AxiomReport> hyps;
  require_pass(hyps, check_hom_lie(a));
  require_pass(hyps, report_functional_annihilates(a, f));
  require_pass(hyps, report_functional_alpha_compat(a, f));
  auto fv = [&](int i) { return f.covector[static_cast<size_t>(i - 1)]; };
  StructureTensor t = tensor_from_fn(a.dim(), 3, a.field(), [&](const IndexTuple& idx) {
    Vec v = zero_vec(a.field(), a.dim());
    vec_axpy(v, fv(idx[0]), a.tensor().coeff({idx[1], idx[2]}));
    vec_axpy(v, fv(idx[1]), a.tensor().coeff({idx[2], idx[0]}));
    vec_axpy(v, fv(idx[2]), a.tensor().coeff({idx[0], idx[1]}));
    return v;
  });
  ConstructionResult res{HomAlgebra(std::move(t), a.twist(), a.name() + "_f")};
  res.hypothesis_reports = std::move(hyps);
  if (verify_conclusion) {
    res.conclusion_reports.push_back(is_skew_symmetric(res.algebra.tensor()));
    res.conclusion_reports.push_back(check_hom_nambu(res.algebra));
  }
  return res;
}

ConstructionResult bracket_from_functional_twisted(const HomAlgebra& a, const Matrix& alpha,
                                                   const LinearFunctional& f,
                                                   bool verify_conclusion) {
  std::vector<AxiomReport> hyps;
  require_pass(hyps, report_identity_twist(a));
  require_pass(hyps, check_hom_lie(a));
  require_pass(hyps, report_endomorphism(a, alpha, "twist-endomorphism"));
  ConstructionResult twisted = yau_twist(a, alpha, false);
  ConstructionResult res = bracket_from_functional(twisted.algebra, f, verify_conclusion);
  for (auto& h : res.hypothesis_reports) hyps.push_back(std::move(h));
  res.hypothesis_reports = std::move(hyps);
  // Direct expansion of the twisted formula must agree with the composition.
  auto fv = [&](int i) { return f.covector[static_cast<size_t>(i - 1)]; };
  StructureTensor direct = tensor_from_fn(a.dim(), 3, a.field(), [&](const IndexTuple& idx) {
    Vec v = zero_vec(a.field(), a.dim());
    vec_axpy(v, fv(idx[0]), alpha.apply(a.tensor().coeff({idx[1], idx[2]})));
    vec_axpy(v, fv(idx[1]), alpha.apply(a.tensor().coeff({idx[2], idx[0]})));
    vec_axpy(v, fv(idx[2]), alpha.apply(a.tensor().coeff({idx[0], idx[1]})));
    return v;
  });
  res.conclusion_reports.push_back(
      flag_report("twisted-direct-agreement", direct == res.algebra.tensor()));
  return res;
}

ConstructionResult yau_twist(const HomAlgebra& a, const Matrix& beta, bool verify_conclusion) {
  std::vector<AxiomReport> hyps;
  require_pass(hyps, report_identity_twist(a));
  require_pass(hyps, report_endomorphism(a, beta, "twist-endomorphism"));
  StructureTensor t = tensor_from_fn(a.dim(), a.arity(), a.field(), [&](const IndexTuple& idx) {
    return beta.apply(a.tensor().coeff(idx));
  });
  ConstructionResult res{HomAlgebra(std::move(t), beta, a.name() + "_twisted")};
  res.hypothesis_reports = std::move(hyps);
  if (verify_conclusion) {
    res.conclusion_reports.push_back(check_multiplicative(res.algebra));
    if (is_skew_symmetric(a.tensor()).pass)
      res.conclusion_reports.push_back(check_hom_nambu(res.algebra));
  }
  return res;
}

ConstructionResult commutator_bracket(const HomAlgebra& a, bool verify_conclusion) {
  std::vector<AxiomReport> hyps;
  require_pass(hyps, check_hom_prelie(a));
  StructureTensor t = tensor_from_fn(a.dim(), 2, a.field(), [&](const IndexTuple& idx) {
    return vec_sub(a.tensor().coeff(idx), a.tensor().coeff({idx[1], idx[0]}));
  });
  ConstructionResult res{HomAlgebra(std::move(t), a.twist(), a.name() + "_subadj")};
  res.hypothesis_reports = std::move(hyps);
  if (verify_conclusion) res.conclusion_reports.push_back(check_hom_lie(res.algebra));
  return res;
}

ConstructionResult rb_prelie_double(const HomAlgebra& a, const WeightedOperator& p,
                                    bool verify_conclusion) {
  if (!p.weight.is_zero()) throw NonzeroWeight("rb_prelie_double needs weight zero");
  std::vector<AxiomReport> hyps;
  require_pass(hyps, check_hom_prelie(a));
  require_pass(hyps, check_rota_baxter(a, as_weight(p, OperatorKind::RotaBaxter)));
  require_pass(hyps, report_matrix_equal("twist-commutes-with-operator", a.twist() * p.matrix,
                                         p.matrix * a.twist()));
  auto pcols = matrix_columns(p.matrix);
  StructureTensor t = tensor_from_fn(a.dim(), 2, a.field(), [&](const IndexTuple& idx) {
    const Vec& px = pcols[static_cast<size_t>(idx[0] - 1)];
    return vec_sub(a.bracket2(px, a.basis(idx[1])), a.bracket2(a.basis(idx[1]), px));
  });
  ConstructionResult res{HomAlgebra(std::move(t), a.twist(), a.name() + "_double")};
  res.hypothesis_reports = std::move(hyps);
  if (verify_conclusion) {
    res.conclusion_reports.push_back(check_hom_prelie(res.algebra));
    res.conclusion_reports.push_back(check_rota_baxter(res.algebra, p));
  }
  return res;
}

ConstructionResult prelie_from_derivation(const HomAlgebra& a, const Matrix& d,
                                          const WeightedOperator& p, bool verify_conclusion) {
  std::vector<AxiomReport> hyps;
  require_pass(hyps, check_hom_associative(a));
  require_pass(hyps, check_commutative(a));
  require_pass(hyps, check_alpha_k_derivation(a, d, 0));
  require_pass(hyps, report_matrix_equal("derivation-commutes-with-operator", d * p.matrix,
                                         p.matrix * d));
  require_pass(hyps, check_rota_baxter(a, as_weight(p, OperatorKind::RotaBaxter)));
  auto dcols = matrix_columns(d);
  StructureTensor star = tensor_from_fn(a.dim(), 2, a.field(), [&](const IndexTuple& idx) {
    return a.bracket2(a.basis(idx[0]), dcols[static_cast<size_t>(idx[1] - 1)]);
  });
  StructureTensor sub = tensor_from_fn(a.dim(), 2, a.field(), [&](const IndexTuple& idx) {
    return vec_sub(star.coeff(idx), star.coeff({idx[1], idx[0]}));
  });
  ConstructionResult res{HomAlgebra(std::move(star), a.twist(), a.name() + "_prelie")};
  res.sub_adjacent = HomAlgebra(std::move(sub), a.twist(), a.name() + "_subadj");
  res.hypothesis_reports = std::move(hyps);
  if (verify_conclusion) {
    res.conclusion_reports.push_back(check_hom_prelie(res.algebra));
    res.conclusion_reports.push_back(check_rota_baxter(res.algebra, p));
    res.conclusion_reports.push_back(check_hom_lie(*res.sub_adjacent));
  }
  return res;
}

ConstructionResult centroid_twist(const HomAlgebra& a, const Matrix& gamma,
                                  const WeightedOperator& p, bool verify_conclusion) {
  std::vector<AxiomReport> hyps;
  require_pass(hyps, report_identity_twist(a));
  require_pass(hyps, check_hom_associative(a));
  require_pass(hyps, check_centroid(a, gamma));
  require_pass(hyps, report_matrix_equal("centroid-commutes-with-operator", gamma * p.matrix,
                                         p.matrix * gamma));
  require_pass(hyps, check_rota_baxter(a, as_weight(p, OperatorKind::RotaBaxter)));
  auto gcols = matrix_columns(gamma);
  StructureTensor t = tensor_from_fn(a.dim(), 2, a.field(), [&](const IndexTuple& idx) {
    return a.bracket2(gcols[static_cast<size_t>(idx[0] - 1)], a.basis(idx[1]));
  });
  ConstructionResult res{HomAlgebra(std::move(t), gamma, a.name() + "_cent")};
  res.hypothesis_reports = std::move(hyps);
  if (verify_conclusion) {
    res.conclusion_reports.push_back(check_hom_associative(res.algebra));
    res.conclusion_reports.push_back(check_rota_baxter(res.algebra, p));
  }
  return res;
}

ConstructionResult bracket_det_fD(const HomAlgebra& a, const LinearFunctional& f,
                                  const Matrix& d, bool verify_conclusion) {
  std::vector<AxiomReport> hyps;
  require_pass(hyps, check_hom_associative(a));
  require_pass(hyps, check_commutative(a));
  require_pass(hyps, check_alpha_k_derivation(a, d, 0));
  auto dcols = matrix_columns(d);
  {
    AxiomReport r{"functional-derivation-symmetric"};
    for (int i = 1; i <= a.dim(); ++i)
      for (int j = 1; j <= a.dim(); ++j)
        r.note({i, j},
               scalar_vec(f.apply(a.bracket2(dcols[static_cast<size_t>(i - 1)], a.basis(j)))),
               scalar_vec(f.apply(a.bracket2(a.basis(i), dcols[static_cast<size_t>(j - 1)]))),
               AxiomReport::kDefaultViolationCap);
    require_pass(hyps, std::move(r));
  }
  require_pass(hyps, report_functional_alpha_compat(a, f));
  auto fv = [&](int i) { return f.covector[static_cast<size_t>(i - 1)]; };
  StructureTensor t = tensor_from_fn(a.dim(), 3, a.field(), [&](const IndexTuple& idx) {
    Vec v = zero_vec(a.field(), a.dim());
    for (int s = 0; s < 6; ++s) {
      Scalar c = fv(idx[kPerm3[s][0]]);
      if (s >= 3) c = -c;
      vec_axpy(v, c,
               a.bracket2(dcols[static_cast<size_t>(idx[kPerm3[s][1]] - 1)],
                          a.basis(idx[kPerm3[s][2]])));
    }
    return v;
  });
  ConstructionResult res{HomAlgebra(std::move(t), a.twist(), a.name() + "_fD")};
  res.hypothesis_reports = std::move(hyps);
  if (verify_conclusion) {
    res.conclusion_reports.push_back(is_skew_symmetric(res.algebra.tensor()));
    res.conclusion_reports.push_back(check_hom_nambu(res.algebra));
  }
  return res;
}

ConstructionResult bracket_det_omegaD(const HomAlgebra& a, const Matrix& w, const Matrix& d,
                                      bool verify_conclusion) {
  std::vector<AxiomReport> hyps;
  require_pass(hyps, check_hom_associative(a));
  require_pass(hyps, check_commutative(a));
  require_pass(hyps, check_multiplicative(a));
  require_pass(hyps, check_involution(a, w));
  require_pass(hyps, report_plain_derivation(a, d));
  require_pass(hyps, report_matrix_equal("involution-derivation-anticommute", w * d,
                                         (d * w).scaled(-Scalar::one(a.field()))));
  require_pass(hyps,
               report_matrix_equal("involution-twist-commute", w * a.twist(), a.twist() * w));
  ConstructionResult res = [&] {
    auto wcols = matrix_columns(w);
    auto dcols = matrix_columns(d);
    StructureTensor t = tensor_from_fn(a.dim(), 3, a.field(), [&](const IndexTuple& idx) {
      Vec v = zero_vec(a.field(), a.dim());
      Scalar one = Scalar::one(a.field());
      for (int s = 0; s < 6; ++s) {
        Vec term = a.bracket2(a.bracket2(wcols[static_cast<size_t>(idx[kPerm3[s][0]] - 1)],
                                         a.basis(idx[kPerm3[s][1]])),
                              dcols[static_cast<size_t>(idx[kPerm3[s][2]] - 1)]);
        vec_axpy(v, s >= 3 ? -one : one, term);
      }
      return v;
    });
    return ConstructionResult{HomAlgebra(std::move(t), a.twist(), a.name() + "_wD")};
  }();
  res.hypothesis_reports = std::move(hyps);
  // Recorded but non-binding: the construction does not require D to
  // commute with the twist.
  res.advisory_reports.push_back(
      report_matrix_equal("derivation-twist-commute", d * a.twist(), a.twist() * d));
  if (verify_conclusion) {
    res.conclusion_reports.push_back(is_skew_symmetric(res.algebra.tensor()));
    res.conclusion_reports.push_back(check_hom_nambu(res.algebra));
  }
  return res;
}

namespace {
// Seven-term expansion: identity on the I-slots, P elsewhere.
Vec derived_bracket_value(const HomAlgebra& a, const std::vector<Vec>& pcols,
                          const Scalar& weight, const IndexTuple& idx) {
  Vec v = zero_vec(a.field(), a.dim());
  std::vector<Vec> args(3, Vec{});
  for (unsigned mask = 1; mask < 8; ++mask) {
    for (int i = 0; i < 3; ++i)
      args[static_cast<size_t>(i)] = (mask >> i) & 1
                                         ? basis_vec(a.field(), a.dim(), idx[i])
                                         : pcols[static_cast<size_t>(idx[i] - 1)];
    vec_axpy(v, weight.pow(static_cast<unsigned long>(__builtin_popcount(mask) - 1)),
             a.bracket(args));
  }
  return v;
}
}  // namespace

ConstructionResult derived_bracket(const HomAlgebra& a, const WeightedOperator& p,
                                   TernaryStructure declared, bool verify_conclusion) {
  if (a.arity() != 3) throw std::invalid_argument("derived_bracket needs a ternary algebra");
  std::vector<AxiomReport> hyps;
  if (declared == TernaryStructure::NambuLie) {
    require_pass(hyps, is_skew_symmetric(a.tensor()));
    require_pass(hyps, check_hom_nambu(a));
  } else {
    require_pass(hyps, check_hom_lie_triple(a));
  }
  require_pass(hyps, check_rota_baxter(a, as_weight(p, OperatorKind::RotaBaxter)));
  require_pass(hyps, report_matrix_equal("twist-commutes-with-operator", a.twist() * p.matrix,
                                         p.matrix * a.twist()));
  auto pcols = matrix_columns(p.matrix);
  StructureTensor t = tensor_from_fn(a.dim(), 3, a.field(), [&](const IndexTuple& idx) {
    return derived_bracket_value(a, pcols, p.weight, idx);
  });
  ConstructionResult res{HomAlgebra(std::move(t), a.twist(), a.name() + "_P")};
  res.hypothesis_reports = std::move(hyps);
  if (verify_conclusion) {
    if (declared == TernaryStructure::NambuLie) {
      res.conclusion_reports.push_back(is_skew_symmetric(res.algebra.tensor()));
      res.conclusion_reports.push_back(check_hom_nambu(res.algebra));
    } else {
      res.conclusion_reports.push_back(check_hom_lie_triple(res.algebra));
    }
    res.conclusion_reports.push_back(check_rota_baxter(res.algebra, p));
  }
  return res;
}

ConstructionResult bracket_fP(const HomAlgebra& a, const LinearFunctional& f,
                              const WeightedOperator& p, bool verify_conclusion) {
  std::vector<AxiomReport> hyps;
  require_pass(hyps, check_hom_lie(a));
  require_pass(hyps, report_functional_annihilates(a, f));
  require_pass(hyps, report_functional_alpha_compat(a, f));
  require_pass(hyps, check_rota_baxter(a, as_weight(p, OperatorKind::RotaBaxter)));
  require_pass(hyps, check_kernel_condition(a, f, p, KernelVariant::Thm1Lie));
  auto pcols = matrix_columns(p.matrix);
  const Scalar& lam = p.weight;
  Scalar lam2 = lam * lam;
  auto fv = [&](int i) { return f.covector[static_cast<size_t>(i - 1)]; };
  auto fp = [&](int i) { return f.apply(pcols[static_cast<size_t>(i - 1)]); };
  auto pc = [&](int i) -> const Vec& { return pcols[static_cast<size_t>(i - 1)]; };
  StructureTensor t = tensor_from_fn(a.dim(), 3, a.field(), [&](const IndexTuple& idx) {
    Vec v = zero_vec(a.field(), a.dim());
    const int cyc[3][3] = {{idx[0], idx[1], idx[2]}, {idx[1], idx[2], idx[0]},
                           {idx[2], idx[0], idx[1]}};
    for (const auto& c : cyc) {
      int x = c[0], y = c[1], z = c[2];
      Vec inner = vec_add(a.bracket2(pc(y), a.basis(z)), a.bracket2(a.basis(y), pc(z)));
      vec_axpy(inner, lam, a.tensor().coeff({y, z}));
      vec_axpy(v, fp(x), inner);
      Vec inner2 = a.bracket2(pc(y), pc(z));
      vec_axpy(inner2, lam, a.bracket2(pc(y), a.basis(z)));
      vec_axpy(inner2, lam, a.bracket2(a.basis(y), pc(z)));
      vec_axpy(inner2, lam2, a.tensor().coeff({y, z}));
      vec_axpy(v, fv(x), inner2);
    }
    return v;
  });
  ConstructionResult res{HomAlgebra(std::move(t), a.twist(), a.name() + "_fP")};
  res.hypothesis_reports = std::move(hyps);
  if (verify_conclusion) {
    ConstructionResult composed =
        derived_bracket(bracket_from_functional(a, f, false).algebra, p,
                        TernaryStructure::NambuLie, false);
    res.conclusion_reports.push_back(
        flag_report("agrees-with-derived-bracket", algebra_equal(res.algebra, composed.algebra)));
    res.conclusion_reports.push_back(is_skew_symmetric(res.algebra.tensor()));
    res.conclusion_reports.push_back(check_hom_nambu(res.algebra));
    res.conclusion_reports.push_back(check_rota_baxter(res.algebra, p));
  }
  return res;
}

ConstructionResult bracket_eq23(const HomAlgebra& a, const LinearFunctional& f,
                                const WeightedOperator& p, bool verify_conclusion) {
  if (!p.weight.is_zero()) throw NonzeroWeight("bracket_eq23 needs weight zero");
  std::vector<AxiomReport> hyps;
  require_pass(hyps, check_hom_prelie(a));
  require_pass(hyps, check_rota_baxter(a, as_weight(p, OperatorKind::RotaBaxter)));
  require_pass(hyps, report_matrix_equal("twist-commutes-with-operator", a.twist() * p.matrix,
                                         p.matrix * a.twist()));
  auto pcols = matrix_columns(p.matrix);
  auto pc = [&](int i) -> const Vec& { return pcols[static_cast<size_t>(i - 1)]; };
  {
    AxiomReport r{"functional-double-symmetric"};
    for (int i = 1; i <= a.dim(); ++i)
      for (int j = 1; j <= a.dim(); ++j) {
        Vec lij = vec_sub(a.bracket2(pc(i), a.basis(j)), a.bracket2(a.basis(j), pc(i)));
        Vec lji = vec_sub(a.bracket2(pc(j), a.basis(i)), a.bracket2(a.basis(i), pc(j)));
        r.note({i, j}, scalar_vec(f.apply(lij)), scalar_vec(f.apply(lji)),
               AxiomReport::kDefaultViolationCap);
      }
    require_pass(hyps, std::move(r));
  }
  require_pass(hyps, report_functional_alpha_compat(a, f));
  auto fv = [&](int i) { return f.covector[static_cast<size_t>(i - 1)]; };
  StructureTensor t = tensor_from_fn(a.dim(), 3, a.field(), [&](const IndexTuple& idx) {
    int x = idx[0], y = idx[1], z = idx[2];
    Vec v = zero_vec(a.field(), a.dim());
    const struct {
      int u1, u2, w;
    } rows[3] = {{x, y, z}, {z, x, y}, {y, z, x}};
    for (const auto& row : rows) {
      // f(u1)P(u2) - f(u2)P(u1), multiplied against basis(w) on both sides
      Vec u = vec_sub(vec_scale(fv(row.u1), pc(row.u2)), vec_scale(fv(row.u2), pc(row.u1)));
      v = vec_add(v, vec_sub(a.bracket2(u, a.basis(row.w)), a.bracket2(a.basis(row.w), u)));
    }
    return v;
  });
  ConstructionResult res{HomAlgebra(std::move(t), a.twist(), a.name() + "_eq23")};
  res.hypothesis_reports = std::move(hyps);
  if (verify_conclusion) {
    res.conclusion_reports.push_back(is_skew_symmetric(res.algebra.tensor()));
    res.conclusion_reports.push_back(check_hom_nambu(res.algebra));
    // The extra condition controlling whether P stays Rota-Baxter.
    Matrix p2 = p.matrix * p.matrix;
    auto p2cols = matrix_columns(p2);
    auto p2c = [&](int i) -> const Vec& { return p2cols[static_cast<size_t>(i - 1)]; };
    AxiomReport cond{"eq23-p-squared-condition"};
    Vec zero = zero_vec(a.field(), a.dim());
    for (int x = 1; x <= a.dim(); ++x)
      for (int y = 1; y <= a.dim(); ++y)
        for (int z = 1; z <= a.dim(); ++z) {
          Vec v = zero_vec(a.field(), a.dim());
          vec_axpy(v, fv(x), vec_sub(a.bracket2(p2c(y), p2c(z)), a.bracket2(p2c(z), p2c(y))));
          vec_axpy(v, fv(y), vec_sub(a.bracket2(p2c(z), p2c(x)), a.bracket2(p2c(x), p2c(z))));
          vec_axpy(v, fv(z), vec_sub(a.bracket2(p2c(x), p2c(y)), a.bracket2(p2c(y), p2c(x))));
          cond.note({x, y, z}, v, zero, AxiomReport::kDefaultViolationCap);
        }
    bool cond_holds = cond.pass;
    res.advisory_reports.push_back(std::move(cond));
    if (cond_holds) res.conclusion_reports.push_back(check_rota_baxter(res.algebra, p));
  }
  return res;
}

ConstructionResult bracket_dinv_alpha(const HomAlgebra& a, const WeightedOperator& d,
                                      bool verify_conclusion) {
  if (a.arity() != 3) throw std::invalid_argument("bracket_dinv_alpha needs a ternary algebra");
  std::vector<AxiomReport> hyps;
  require_pass(hyps, is_skew_symmetric(a.tensor()));
  require_pass(hyps, check_hom_nambu(a));
  require_pass(hyps, report_endomorphism(a, a.twist(), "twist-endomorphism"));
  if (!a.twist().inverse()) throw NotInvertible("twist is singular");
  require_pass(hyps, check_derivation_weight(a, as_weight(d, OperatorKind::Derivation)));
  auto dinv_opt = d.matrix.inverse();
  if (!dinv_opt) throw NotInvertible("derivation is singular");
  const Matrix& dinv = *dinv_opt;
  require_pass(hyps, report_matrix_equal("twist-commutes-with-operator", a.twist() * d.matrix,
                                         d.matrix * a.twist()));
  auto icols = matrix_columns(dinv);
  StructureTensor t = tensor_from_fn(a.dim(), 3, a.field(), [&](const IndexTuple& idx) {
    return d.matrix.apply(a.bracket3(icols[static_cast<size_t>(idx[0] - 1)],
                                     icols[static_cast<size_t>(idx[1] - 1)],
                                     icols[static_cast<size_t>(idx[2] - 1)]));
  });
  ConstructionResult res{HomAlgebra(std::move(t), a.twist(), a.name() + "_dinv")};
  res.hypothesis_reports = std::move(hyps);
  if (verify_conclusion) {
    WeightedOperator prb{a.twist() * dinv, d.weight, OperatorKind::RotaBaxter, 0};
    ConstructionResult composed = derived_bracket(a, prb, TernaryStructure::NambuLie, false);
    res.conclusion_reports.push_back(
        flag_report("agrees-with-derived-bracket", algebra_equal(res.algebra, composed.algebra)));
    res.conclusion_reports.push_back(is_skew_symmetric(res.algebra.tensor()));
    res.conclusion_reports.push_back(check_hom_nambu(res.algebra));
    res.conclusion_reports.push_back(
        check_derivation_weight(res.algebra, as_weight(d, OperatorKind::Derivation)));
  }
  return res;
}

WeightedOperator dualize(const HomAlgebra& a, const WeightedOperator& op,
                         DualizeDirection direction) {
  AxiomReport endo = report_endomorphism(a, a.twist(), "twist-endomorphism");
  if (!endo.pass) throw HypothesisFailed(std::move(endo));
  if (!a.twist().inverse()) throw NotInvertible("twist is singular");
  auto inv = op.matrix.inverse();
  if (!inv) throw NotInvertible("operator is singular");
  if (direction == DualizeDirection::RBtoDiff)
    return WeightedOperator{a.twist() * *inv, op.weight, OperatorKind::Derivation, 0};
  return WeightedOperator{*inv * a.twist(), op.weight, OperatorKind::RotaBaxter, 0};
}

}  // namespace homalg
