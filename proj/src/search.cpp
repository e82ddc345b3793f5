#include "homalg/search.hpp"

#include <chrono>
#include <cmath>
#include <thread>

namespace homalg {

namespace {

unsigned long long checked_pow(long base, int exp, unsigned long long limit) {
  unsigned long long r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > limit / static_cast<unsigned long long>(base)) return limit + 1;
    r *= static_cast<unsigned long long>(base);
  }
  return r;
}

Matrix matrix_from_index(unsigned long long idx, int d, long p, const FieldSpec& f) {
  // Row-major digits, most significant first: increasing index is
  // lexicographic order on entries.
  std::vector<long> digits(static_cast<size_t>(d) * d, 0);
  for (int i = static_cast<int>(digits.size()) - 1; i >= 0; --i) {
    digits[static_cast<size_t>(i)] = static_cast<long>(idx % static_cast<unsigned long long>(p));
    idx /= static_cast<unsigned long long>(p);
  }
  return Matrix::from_ints(d, d, f, digits);
}

}  // namespace

SearchResult enumerate_matrices(const HomAlgebra& a, unsigned long long budget, long max_results,
                                int jobs, const std::function<bool(const Matrix&)>& accept) {
  if (!a.field().is_prime_field())
    throw RationalsUnsupported("exhaustive enumeration needs a prime field");
  const long p = a.field().p();
  const int d = a.dim();
  unsigned long long total = checked_pow(p, d * d, budget);
  if (total > budget)
    throw BudgetExceeded("candidate count p^(d^2) exceeds budget " + std::to_string(budget));

  auto start = std::chrono::steady_clock::now();
  SearchResult res;
  if (jobs <= 1) {
    for (unsigned long long idx = 0; idx < total; ++idx) {
      ++res.candidates_scanned;
      Matrix m = matrix_from_index(idx, d, p, a.field());
      if (accept(m)) {
        res.operators.push_back(WeightedOperator{std::move(m), Scalar::zero(a.field())});
        if (max_results >= 0 && static_cast<long>(res.operators.size()) >= max_results) break;
      }
    }
  } else {
    // Contiguous index chunks; concatenation preserves lexicographic order.
    std::vector<std::vector<WeightedOperator>> found(static_cast<size_t>(jobs));
    std::vector<std::thread> workers;
    for (int w = 0; w < jobs; ++w) {
      unsigned long long lo = total * static_cast<unsigned long long>(w) / jobs;
      unsigned long long hi = total * static_cast<unsigned long long>(w + 1) / jobs;
      workers.emplace_back([&, w, lo, hi] {
        for (unsigned long long idx = lo; idx < hi; ++idx) {
          Matrix m = matrix_from_index(idx, d, p, a.field());
          if (accept(m))
            found[static_cast<size_t>(w)].push_back(
                WeightedOperator{std::move(m), Scalar::zero(a.field())});
        }
      });
    }
    for (auto& t : workers) t.join();
    res.candidates_scanned = total;
    for (auto& chunk : found)
      for (auto& op : chunk) res.operators.push_back(std::move(op));
    if (max_results >= 0 && static_cast<long>(res.operators.size()) > max_results)
      res.operators.erase(res.operators.begin() + max_results, res.operators.end());
  }
  res.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

SearchResult enumerate_rota_baxter(const SearchSpec& spec) {
  SearchResult res = enumerate_matrices(
      spec.algebra, spec.budget, spec.max_results, spec.jobs,
      [&](const Matrix& m) { return holds_rota_baxter(spec.algebra, m, spec.weight); });
  for (auto& op : res.operators) {
    op.weight = spec.weight;
    op.kind = OperatorKind::RotaBaxter;
  }
  return res;
}

SearchResult enumerate_weighted_derivations(const SearchSpec& spec) {
  SearchResult res = enumerate_matrices(
      spec.algebra, spec.budget, spec.max_results, spec.jobs,
      [&](const Matrix& m) { return holds_derivation_weight(spec.algebra, m, spec.weight); });
  for (auto& op : res.operators) {
    op.weight = spec.weight;
    op.kind = OperatorKind::Derivation;
  }
  return res;
}

FunctionalSearch admissible_functionals(const HomAlgebra& a, unsigned long long budget) {
  if (a.arity() != 2)
    throw std::invalid_argument("admissible_functionals needs a binary algebra");
  const int d = a.dim();
  // Rows: every stored bracket value. f is admissible-linear iff M f = 0.
  std::vector<Vec> rows;
  for (const auto& [tuple, coeff] : a.tensor().table()) {
    (void)tuple;
    rows.push_back(coeff);
  }
  Matrix m(static_cast<int>(rows.size()), d, a.field());
  for (int i = 0; i < static_cast<int>(rows.size()); ++i)
    for (int j = 0; j < d; ++j) m.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];

  FunctionalSearch out;
  for (auto& v : m.kernel_basis()) out.linear_basis.push_back(LinearFunctional{a.field(), v});

  Matrix at = a.twist().transpose();
  out.is_admissible = [a, at](const LinearFunctional& f) {
    if (static_cast<int>(f.covector.size()) != a.dim() || f.field != a.field()) return false;
    for (const auto& [tuple, coeff] : a.tensor().table()) {
      (void)tuple;
      if (!f.apply(coeff).is_zero()) return false;
    }
    // f o alpha and f linearly dependent <=> rank of the 2 x d stack <= 1
    Vec falpha = at.apply(f.covector);
    Matrix stack(2, a.dim(), a.field());
    for (int j = 0; j < a.dim(); ++j) {
      stack.at(0, j) = f.covector[static_cast<size_t>(j)];
      stack.at(1, j) = falpha[static_cast<size_t>(j)];
    }
    return stack.rank() <= 1;
  };

  if (a.field().is_prime_field()) {
    const long p = a.field().p();
    unsigned long long total = checked_pow(p, d, budget);
    if (total <= budget) {
      for (unsigned long long idx = 0; idx < total; ++idx) {
        Vec cov = zero_vec(a.field(), d);
        unsigned long long rem = idx;
        for (int i = d - 1; i >= 0; --i) {
          cov[static_cast<size_t>(i)] =
              Scalar::of(a.field(), static_cast<long>(rem % static_cast<unsigned long long>(p)));
          rem /= static_cast<unsigned long long>(p);
        }
        LinearFunctional f{a.field(), std::move(cov)};
        if (out.is_admissible(f)) out.exhaustive.push_back(std::move(f));
      }
    }
  }
  return out;
}

std::vector<Matrix> solve_linear_derivations(const HomAlgebra& a, int k) {
  if (a.arity() != 2)
    throw std::invalid_argument("solve_linear_derivations needs a binary algebra");
  const int d = a.dim();
  const FieldSpec& fld = a.field();
  Matrix ak = a.twist().pow(static_cast<unsigned long>(k));
  auto akcols = matrix_columns(ak);

  // Unknown D vectorized as D[r][c] -> r*d + c.
  std::vector<Vec> eqs;
  auto var = [&](int r, int c) { return static_cast<size_t>(r * d + c); };

  // Leibniz on basis pairs: D(e_i e_j) = D(e_i) a^k(e_j) + a^k(e_i) D(e_j).
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j) {
      Vec prod = a.tensor().coeff({i, j});
      // e_m * a^k(e_j) and a^k(e_i) * e_m, for each m
      std::vector<Vec> left(static_cast<size_t>(d)), right(static_cast<size_t>(d));
      for (int m = 1; m <= d; ++m) {
        left[static_cast<size_t>(m - 1)] =
            a.bracket2(a.basis(m), akcols[static_cast<size_t>(j - 1)]);
        right[static_cast<size_t>(m - 1)] =
            a.bracket2(akcols[static_cast<size_t>(i - 1)], a.basis(m));
      }
      for (int r = 0; r < d; ++r) {
        Vec eq = zero_vec(fld, d * d);
        for (int m = 0; m < d; ++m) {
          eq[var(r, m)] += prod[static_cast<size_t>(m)];
          eq[var(m, i - 1)] -= left[static_cast<size_t>(m)][static_cast<size_t>(r)];
          eq[var(m, j - 1)] -= right[static_cast<size_t>(m)][static_cast<size_t>(r)];
        }
        eqs.push_back(std::move(eq));
      }
    }
  // Commutation: (D alpha - alpha D)[r][c] = 0.
  const Matrix& al = a.twist();
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) {
      Vec eq = zero_vec(fld, d * d);
      for (int m = 0; m < d; ++m) {
        eq[var(r, m)] += al.at(m, c);
        eq[var(m, c)] -= al.at(r, m);
      }
      eqs.push_back(std::move(eq));
    }

  Matrix sys(static_cast<int>(eqs.size()), d * d, fld);
  for (int i = 0; i < static_cast<int>(eqs.size()); ++i)
    for (int j = 0; j < d * d; ++j)
      sys.at(i, j) = eqs[static_cast<size_t>(i)][static_cast<size_t>(j)];

  std::vector<Matrix> out;
  for (const auto& v : sys.kernel_basis()) {
    Matrix m(d, d, fld);
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) m.at(r, c) = v[var(r, c)];
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace homalg
