#include "negaconv/convolutional.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace negaconv {
namespace {

uint64_t clamped_pow(uint64_t base, size_t e, uint64_t clamp) {
  uint64_t r = 1;
  for (size_t i = 0; i < e; ++i) {
    if (r > clamp / base) return clamp + 1;
    r *= base;
  }
  return r;
}

uint64_t clamped_binomial(int n, int k, uint64_t clamp) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    if (r > clamp) return clamp + 1;
    r = r * uint64_t(n - k + i) / uint64_t(i);
  }
  return std::min(r, clamp + 1);
}

uint64_t clamped_mul(uint64_t a, uint64_t b, uint64_t clamp) {
  if (b != 0 && a > clamp / b) return clamp + 1;
  return a * b;
}

}  // namespace

bool PolyMatrix::is_zero() const {
  for (const Mat& m : mats)
    if (!m.is_zero()) return false;
  return true;
}

int PolyMatrix::row_degree(int row) const {
  for (int j = memory(); j >= 0; --j)
    for (int c = 0; c < cols; ++c)
      if (mats[size_t(j)].at(row, c)) return j;
  return -1;
}

PolyMatrix make_poly_matrix(const Field& f, std::vector<Mat> mats) {
  if (mats.empty()) throw std::invalid_argument("empty coefficient list");
  for (const Mat& m : mats) {
    if (m.F != &f) throw std::invalid_argument("coefficient matrix field mismatch");
    if (m.rows != mats[0].rows || m.cols != mats[0].cols)
      throw std::invalid_argument("coefficient matrices must share a shape");
  }
  while (mats.size() > 1 && mats.back().is_zero()) mats.pop_back();
  PolyMatrix g;
  g.F = &f;
  g.rows = mats[0].rows;
  g.cols = mats[0].cols;
  g.mats = std::move(mats);
  return g;
}

Mat eval_poly_matrix(const PolyMatrix& g, uint32_t point) {
  const Field& f = *g.F;
  Mat out(f, g.rows, g.cols);
  uint32_t pw = f.one();
  for (int j = 0; j <= g.memory(); ++j) {
    const Mat& m = g.coeff(j);
    for (size_t t = 0; t < out.a.size(); ++t)
      if (m.a[t]) out.a[t] = f.add(out.a[t], f.mul(m.a[t], pw));
    pw = f.mul(pw, point);
  }
  return out;
}

PolyMatrix split_and_pad(const std::vector<Mat>& parts) {
  if (parts.empty()) throw std::invalid_argument("no parts to split");
  const Field& f = *parts[0].F;
  int cols = parts[0].cols;
  int kappa = 0;
  for (const Mat& p : parts) {
    if (p.F != &f) throw std::invalid_argument("parts field mismatch");
    if (p.cols != cols) throw std::invalid_argument("parts must share a column count");
    kappa = std::max(kappa, p.rows);
  }
  std::vector<Mat> mats;
  for (const Mat& p : parts) {
    Mat padded(f, kappa, cols);
    std::copy(p.a.begin(), p.a.end(), padded.a.begin());
    mats.push_back(std::move(padded));
  }
  return make_poly_matrix(f, std::move(mats));
}

RankConditionReport check_rank_conditions(const std::vector<Mat>& parts) {
  RankConditionReport rep;
  for (const Mat& p : parts) {
    rep.kappa = std::max(rep.kappa, p.rows);
    rep.ranks.push_back(rank_of(p));
  }
  rep.pass = !parts.empty() && rep.ranks[0] == rep.kappa;
  for (size_t i = 1; i < parts.size() && rep.pass; ++i)
    if (rep.ranks[i] > rep.kappa) rep.pass = false;
  return rep;
}

int poly_rank(const PolyMatrix& g) {
  const Field& f = *g.F;
  int degree_bound = 0;
  for (int r = 0; r < g.rows; ++r) degree_bound += std::max(0, g.row_degree(r));
  if (f.size() <= uint64_t(degree_bound))
    throw std::logic_error("field too small to certify polynomial rank by evaluation");
  int target = std::min(g.rows, g.cols);
  int best = 0;
  for (uint64_t x = 0; x < f.size(); ++x) {
    best = std::max(best, rank_of(eval_poly_matrix(g, uint32_t(x))));
    if (best == target) break;
  }
  return best;
}

ConvolutionalCode make_conv_code(PolyMatrix g) {
  ConvolutionalCode c;
  c.n = g.cols;
  c.k = g.rows;
  c.row_degrees.resize(size_t(g.rows));
  for (int r = 0; r < g.rows; ++r) {
    int d = g.row_degree(r);
    if (d < 0) throw std::logic_error("generator matrix has a zero row");
    c.row_degrees[size_t(r)] = d;
  }
  c.gamma = std::accumulate(c.row_degrees.begin(), c.row_degrees.end(), 0);
  c.mu = *std::max_element(c.row_degrees.begin(), c.row_degrees.end());
  if (poly_rank(g) != g.rows)
    throw std::logic_error("generator matrix is rank deficient over GF(q)(D)");
  c.G = std::move(g);
  return c;
}

bool is_reduced(const PolyMatrix& g) {
  const Field& f = *g.F;
  Mat lead(f, g.rows, g.cols);
  for (int r = 0; r < g.rows; ++r) {
    int d = g.row_degree(r);
    if (d < 0) return false;
    for (int c = 0; c < g.cols; ++c) lead.at(r, c) = g.coeff(d).at(r, c);
  }
  return rank_of(lead) == g.rows;
}

namespace {

Poly lagrange_interpolate(const Field& f, std::span<const uint32_t> xs,
                          std::span<const uint32_t> ys) {
  Poly acc(f);
  for (size_t i = 0; i < xs.size(); ++i) {
    Poly term = Poly::constant(f, ys[i]);
    if (term.is_zero()) continue;
    uint32_t denom = f.one();
    for (size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      term = term * Poly(f, {f.neg(xs[j]), f.one()});
      denom = f.mul(denom, f.sub(xs[i], xs[j]));
    }
    uint32_t dinv = f.inv(denom);
    for (auto& cc : term.c) cc = f.mul(cc, dinv);
    acc = acc + term;
  }
  return acc;
}

}  // namespace

BasicCheck verify_basic(const PolyMatrix& g, uint64_t ops_budget) {
  BasicCheck out;
  const Field& f = *g.F;
  int k = g.rows;
  int n = g.cols;
  if (k > n) {
    out.status = BasicCheck::Status::kNotBasic;
    out.detail = "more rows than columns";
    return out;
  }
  int gamma = 0;
  for (int r = 0; r < k; ++r) gamma += std::max(0, g.row_degree(r));
  int points = gamma + 1;
  if (uint64_t(points) > f.size()) {
    out.status = BasicCheck::Status::kDeferred;
    out.detail = "field too small for interpolation";
    return out;
  }
  uint64_t minors = clamped_binomial(n, k, uint64_t(1) << 62);
  out.minors = minors;
  uint64_t per_minor = clamped_mul(uint64_t(points), uint64_t(k) * k * k / 3 + 1, uint64_t(1) << 62);
  if (clamped_mul(minors, per_minor, uint64_t(1) << 62) > ops_budget) {
    out.status = BasicCheck::Status::kDeferred;
    out.detail = "minor enumeration beyond ops budget";
    return out;
  }

  std::vector<uint32_t> xs(static_cast<size_t>(points));
  std::vector<Mat> evals;
  for (int t = 0; t < points; ++t) {
    xs[size_t(t)] = uint32_t(t);  // element indices 0..gamma are distinct
    evals.push_back(eval_poly_matrix(g, xs[size_t(t)]));
  }

  std::vector<int> comb(static_cast<size_t>(k));
  std::iota(comb.begin(), comb.end(), 0);
  Poly gcd_poly(f);
  bool any_nonzero = false;
  std::vector<uint32_t> ys(static_cast<size_t>(points));
  while (true) {
    for (int t = 0; t < points; ++t) {
      Mat sub(f, k, k);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) sub.at(i, j) = evals[size_t(t)].at(i, comb[size_t(j)]);
      ys[size_t(t)] = det(std::move(sub));
    }
    Poly minor = lagrange_interpolate(f, xs, ys);
    if (!minor.is_zero()) {
      any_nonzero = true;
      gcd_poly = gcd_poly.is_zero() ? minor.monic() : poly_gcd(gcd_poly, minor);
      if (gcd_poly.degree() == 0) break;  // constant gcd: basic certified
    }
    int t = k - 1;
    while (t >= 0 && comb[size_t(t)] == n - k + t) --t;
    if (t < 0) break;
    ++comb[size_t(t)];
    for (int j = t + 1; j < k; ++j) comb[size_t(j)] = comb[size_t(j - 1)] + 1;
  }
  if (!any_nonzero) {
    out.status = BasicCheck::Status::kNotBasic;
    out.gcd_degree = -1;
    out.detail = "all maximal minors vanish";
    return out;
  }
  out.gcd_degree = gcd_poly.degree();
  if (gcd_poly.degree() == 0) {
    out.status = BasicCheck::Status::kVerified;
    out.detail = "minor gcd is a nonzero constant";
  } else {
    out.status = BasicCheck::Status::kNotBasic;
    out.detail = "minor gcd has degree " + std::to_string(gcd_poly.degree());
  }
  return out;
}

int generalized_singleton(int n, int k, int gamma) {
  if (k <= 0 || k >= n) throw std::invalid_argument("need 0 < k < n");
  if (gamma < 0) throw std::invalid_argument("gamma must be nonnegative");
  return (n - k) * (gamma / k + 1) + gamma + 1;
}

int conj_base(const Field& f) {
  uint64_t q2 = f.size();
  uint64_t q = uint64_t(std::llround(std::sqrt(double(q2))));
  while (q * q > q2) --q;
  while ((q + 1) * (q + 1) <= q2) ++q;
  if (q * q != q2) throw std::invalid_argument("field size is not a square");
  return int(q);
}

bool shifted_hermitian_orthogonal(const PolyMatrix& g) {
  const Field& f = *g.F;
  int q = conj_base(f);
  int mu = g.memory();
  std::vector<Mat> conj;
  for (const Mat& m : g.mats) conj.push_back(m.conj_pow(uint64_t(q)));
  for (int t = -mu; t <= mu; ++t) {
    for (int a = 0; a < g.rows; ++a) {
      for (int b = 0; b < g.rows; ++b) {
        uint32_t acc = f.zero();
        for (int j = 0; j <= mu; ++j) {
          int jt = j + t;
          if (jt < 0 || jt > mu) continue;
          for (int c = 0; c < g.cols; ++c) {
            uint32_t u = g.coeff(j).at(a, c);
            if (!u) continue;
            acc = f.add(acc, f.mul(u, conj[size_t(jt)].at(b, c)));
          }
        }
        if (acc != f.zero()) return false;
      }
    }
  }
  return true;
}

DualBasis dual_basis_bounded(const PolyMatrix& g, int cap, int cap_max,
                             uint64_t basic_ops_budget) {
  const Field& f = *g.F;
  int q = conj_base(f);
  int n = g.cols;
  int kappa = g.rows;
  int mu = g.memory();
  int want = n - kappa;
  if (want < 0) throw std::invalid_argument("generator has more rows than columns");

  for (int c = cap; c <= cap_max; ++c) {
    // solve the degree <= c+1 slice in w = v^q; unknown blocks are ordered
    // w_0 first so the RREF null basis is stratified by degree
    int solve_cap = c + 1;
    int blocks = solve_cap + 1;
    int eqs = kappa * (mu + solve_cap + 1);
    Mat A(f, eqs, n * blocks);
    int eq = 0;
    for (int a = 0; a < kappa; ++a) {
      for (int r = -mu; r <= solve_cap; ++r) {
        for (int m = 0; m <= mu; ++m) {
          int t = m + r;
          if (t < 0 || t >= blocks) continue;
          for (int col = 0; col < n; ++col) {
            uint32_t v = g.coeff(m).at(a, col);
            if (v) A.at(eq, t * n + col) = f.add(A.at(eq, t * n + col), v);
          }
        }
        ++eq;
      }
    }
    Mat basis = nullspace(A);

    // candidate degree = top nonzero block
    std::vector<int> degree(size_t(basis.rows), -1);
    for (int i = 0; i < basis.rows; ++i)
      for (int b = blocks - 1; b >= 0 && degree[size_t(i)] < 0; --b)
        for (int col = 0; col < n; ++col)
          if (basis.at(i, b * n + col)) {
            degree[size_t(i)] = b;
            break;
          }

    int dim_cap = 0, dim_cap1 = 0;
    for (int i = 0; i < basis.rows; ++i) {
      if (degree[size_t(i)] <= c) ++dim_cap;
      if (degree[size_t(i)] <= c + 1) ++dim_cap1;
    }

    // greedy minimal-degree selection: candidates ascend by (degree, index),
    // keep those whose leading block extends the lead span
    std::vector<int> order(static_cast<size_t>(basis.rows));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return degree[size_t(x)] < degree[size_t(y)]; });
    std::vector<std::vector<uint32_t>> lead_rows;
    std::vector<int> lead_piv;
    std::vector<int> selected;
    auto try_add_lead = [&](std::span<const uint32_t> lead) -> bool {
      std::vector<uint32_t> row(lead.begin(), lead.end());
      for (size_t kx = 0; kx < lead_rows.size(); ++kx) {
        uint32_t v = row[size_t(lead_piv[kx])];
        if (!v) continue;
        for (int j = 0; j < n; ++j) row[size_t(j)] = f.sub(row[size_t(j)], f.mul(v, lead_rows[kx][size_t(j)]));
      }
      int piv = -1;
      for (int j = 0; j < n; ++j)
        if (row[size_t(j)]) {
          piv = j;
          break;
        }
      if (piv < 0) return false;
      uint32_t pinv = f.inv(row[size_t(piv)]);
      for (int j = 0; j < n; ++j) row[size_t(j)] = f.mul(row[size_t(j)], pinv);
      lead_rows.push_back(std::move(row));
      lead_piv.push_back(piv);
      return true;
    };
    for (int idx : order) {
      if (int(selected.size()) == want) break;
      int d = degree[size_t(idx)];
      if (d < 0 || d > c) continue;
      std::vector<uint32_t> lead(static_cast<size_t>(n));
      for (int col = 0; col < n; ++col) lead[size_t(col)] = basis.at(idx, d * n + col);
      if (try_add_lead(lead)) selected.push_back(idx);
    }
    if (int(selected.size()) != want) continue;  // escalate cap

    DualBasis out;
    out.cap_searched = c;
    out.dim_slice_cap = dim_cap;
    out.dim_slice_cap1 = dim_cap1;
    int max_deg = 0;
    for (int idx : selected) max_deg = std::max(max_deg, degree[size_t(idx)]);
    std::vector<Mat> mats(size_t(max_deg) + 1, Mat(f, want, n));
    for (size_t r = 0; r < selected.size(); ++r) {
      int idx = selected[r];
      out.row_degrees.push_back(degree[size_t(idx)]);
      for (int b = 0; b <= degree[size_t(idx)]; ++b)
        for (int col = 0; col < n; ++col) {
          // v = w^q entrywise (Frobenius is an involution on GF(q^2))
          uint32_t w = basis.at(idx, b * n + col);
          mats[size_t(b)].at(int(r), col) = f.pow(w, uint64_t(q));
        }
    }
    out.M = make_poly_matrix(f, std::move(mats));

    int pred_cap = 0, pred_cap1 = 0;
    for (int e : out.row_degrees) {
      pred_cap += c - e + 1;
      pred_cap1 += c + 2 - e;
    }
    out.dims_match = (dim_cap == pred_cap) && (dim_cap1 == pred_cap1);
    out.reduced = is_reduced(out.M);

    // definitional recheck of all-shift orthogonality against G
    out.orthogonal = true;
    std::vector<Mat> conj;
    for (const Mat& m : out.M.mats) conj.push_back(m.conj_pow(uint64_t(q)));
    int dmu = out.M.memory();
    for (int a = 0; a < kappa && out.orthogonal; ++a)
      for (int r = -dmu; r <= mu && out.orthogonal; ++r)
        for (int b = 0; b < want && out.orthogonal; ++b) {
          uint32_t acc = f.zero();
          for (int m = 0; m <= mu; ++m) {
            int t = m + r;
            if (t < 0 || t > dmu) continue;
            for (int col = 0; col < n; ++col) {
              uint32_t u = g.coeff(m).at(a, col);
              if (!u) continue;
              acc = f.add(acc, f.mul(u, conj[size_t(t)].at(b, col)));
            }
          }
          if (acc != f.zero()) out.orthogonal = false;
        }

    out.basic = verify_basic(out.M, basic_ops_budget);
    return out;
  }
  throw std::domain_error("dual basis rank not reached at maximum degree cap");
}

FreeDistanceResult free_distance_search(const ConvolutionalCode& c,
                                        const FreeDistanceOptions& opt) {
  const Field& f = *c.G.F;
  uint64_t q = f.size();
  int n = c.n;
  FreeDistanceResult res;
  res.weight_cap = opt.weight_cap;

  std::vector<int> mem_rows, free_rows;
  for (int r = 0; r < c.k; ++r)
    (c.row_degrees[size_t(r)] >= 1 ? mem_rows : free_rows).push_back(r);
  struct Cell {
    int row;
    int delay;
  };
  std::vector<Cell> cells;
  for (int r : mem_rows)
    for (int d = 1; d <= c.row_degrees[size_t(r)]; ++d) cells.push_back({r, d});
  int gamma = int(cells.size());

  uint64_t states = clamped_pow(q, size_t(gamma), opt.state_budget);
  uint64_t branch = clamped_pow(q, mem_rows.size(), uint64_t(1) << 62);
  uint64_t span = clamped_pow(q, free_rows.size(), uint64_t(1) << 62);
  uint64_t work =
      clamped_mul(clamped_mul(states, branch, uint64_t(1) << 62),
                  clamped_mul(span + uint64_t(gamma), uint64_t(n), uint64_t(1) << 62),
                  uint64_t(1) << 62);
  bool desk_ok = states <= opt.state_budget && work <= opt.work_budget;
  if (!desk_ok) {
    res.method = "skipped: beyond desk budget";
    return res;
  }
  if (clamped_mul(states, branch, uint64_t(1) << 62) > opt.run_budget) {
    res.method = "skipped: user budget below desk-feasible search";
    res.budget_blocked = true;
    return res;
  }
  res.states = states;
  int cap = opt.weight_cap;
  if (cap <= 0) throw std::invalid_argument("weight cap must be positive");

  // min weight over a coset base + span of the free rows of G_0;
  // require_nonzero skips the all-zero combination
  auto span_min_weight = [&](std::vector<uint32_t>& base, bool require_nonzero) -> int {
    int best = INT_MAX;
    auto rec = [&](auto&& self, size_t level, bool nonzero) -> void {
      if (level == free_rows.size()) {
        if (require_nonzero && !nonzero) return;
        int w = 0;
        for (uint32_t v : base)
          if (v) ++w;
        best = std::min(best, w);
        return;
      }
      int row = free_rows[level];
      self(self, level + 1, nonzero);
      uint32_t prev = 0;
      for (uint32_t cc = 1; cc < q; ++cc) {
        uint32_t delta = f.sub(cc, prev);
        for (int j = 0; j < n; ++j)
          base[size_t(j)] = f.add(base[size_t(j)], f.mul(delta, c.G.coeff(0).at(row, j)));
        prev = cc;
        self(self, level + 1, true);
      }
      for (int j = 0; j < n; ++j)
        base[size_t(j)] = f.sub(base[size_t(j)], f.mul(prev, c.G.coeff(0).at(row, j)));
    };
    rec(rec, 0, false);
    return best;
  };

  int best = INT_MAX;
  if (!free_rows.empty()) {
    std::vector<uint32_t> zero_vec(size_t(n), 0);
    best = span_min_weight(zero_vec, true);
  }
  if (gamma == 0) {
    res.value = std::min(best, cap);
    res.exact = best < cap;
    res.ran = true;
    res.method = "state-search";
    return res;
  }

  // state digits in base q, cell order as in `cells`
  auto state_output = [&](uint64_t s, std::vector<uint32_t>& y) {
    std::fill(y.begin(), y.end(), 0);
    for (const Cell& cell : cells) {
      uint32_t digit = uint32_t(s % q);
      s /= q;
      if (!digit) continue;
      for (int j = 0; j < n; ++j)
        y[size_t(j)] = f.add(y[size_t(j)], f.mul(digit, c.G.coeff(cell.delay).at(cell.row, j)));
    }
  };
  // cell index lookup for transitions
  std::vector<std::vector<int>> cell_at(size_t(c.k));
  for (int r : mem_rows) cell_at[size_t(r)].assign(size_t(c.row_degrees[size_t(r)]) + 1, -1);
  for (size_t i = 0; i < cells.size(); ++i) cell_at[size_t(cells[i].row)][size_t(cells[i].delay)] = int(i);
  std::vector<uint64_t> qpow(cells.size() + 1, 1);
  for (size_t i = 1; i <= cells.size(); ++i) qpow[i] = qpow[i - 1] * q;

  auto next_state = [&](uint64_t s, const std::vector<uint32_t>& u) -> uint64_t {
    uint64_t t = 0;
    std::vector<uint32_t> digits(cells.size());
    for (size_t i = 0; i < cells.size(); ++i) digits[i] = uint32_t(s / qpow[i] % q);
    for (size_t mi = 0; mi < mem_rows.size(); ++mi) {
      int r = mem_rows[mi];
      int deg = c.row_degrees[size_t(r)];
      for (int d = deg; d >= 2; --d)
        t += uint64_t(digits[size_t(cell_at[size_t(r)][size_t(d - 1)])]) *
             qpow[size_t(cell_at[size_t(r)][size_t(d)])];
      t += uint64_t(u[mi]) * qpow[size_t(cell_at[size_t(r)][1])];
    }
    return t;
  };

  std::vector<int> dist(size_t(states), INT_MAX);
  using Item = std::pair<int, uint64_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;

  std::vector<uint32_t> y_state(static_cast<size_t>(n));
  std::vector<uint32_t> y_base(static_cast<size_t>(n));
  std::vector<uint32_t> u(mem_rows.size(), 0);

  // edges out of `s` (popped at distance d); s = 0 seeds the search and
  // requires a nonzero memory input
  auto expand = [&](uint64_t s, int d) {
    state_output(s, y_state);
    std::fill(u.begin(), u.end(), 0);
    // odometer over memory inputs
    while (true) {
      bool u_zero = std::all_of(u.begin(), u.end(), [](uint32_t x) { return x == 0; });
      if (!(s == 0 && u_zero)) {
        y_base = y_state;
        for (size_t mi = 0; mi < mem_rows.size(); ++mi) {
          if (!u[mi]) continue;
          for (int j = 0; j < n; ++j)
            y_base[size_t(j)] =
                f.add(y_base[size_t(j)], f.mul(u[mi], c.G.coeff(0).at(mem_rows[mi], j)));
        }
        int w = span_min_weight(y_base, false);
        uint64_t t = next_state(s, u);
        if (t == 0) {
          if (d + w < best) best = d + w;
        } else if (d + w < cap && d + w < dist[size_t(t)] && d + w < best) {
          dist[size_t(t)] = d + w;
          pq.push({d + w, t});
        }
      }
      // advance odometer
      size_t lvl = 0;
      while (lvl < u.size()) {
        if (u[lvl] + 1 < q) {
          ++u[lvl];
          break;
        }
        u[lvl] = 0;
        ++lvl;
      }
      if (lvl == u.size()) break;
    }
  };

  expand(0, 0);
  while (!pq.empty()) {
    auto [d, s] = pq.top();
    pq.pop();
    if (d > dist[size_t(s)]) continue;
    if (d >= best || d >= cap) break;
    expand(s, d);
  }

  res.ran = true;
  res.method = "state-search";
  if (best < cap) {
    res.value = best;
    res.exact = true;
  } else {
    res.value = cap;
    res.exact = false;
  }
  return res;
}

std::pair<int, int> free_distance_bracket(int d0, int dmu, int d_block) {
  return {std::min(d0 + dmu, d_block), d_block};
}

bool in_row_module(const PolyMatrix& g, const std::vector<std::vector<uint32_t>>& w_blocks) {
  const Field& f = *g.F;
  int n = g.cols;
  int kappa = g.rows;
  int mu = g.memory();
  int dw = int(w_blocks.size()) - 1;
  for (const auto& b : w_blocks)
    if (int(b.size()) != n) throw std::invalid_argument("block length mismatch");
  // unknown u_j[a] for j = 0..dw; equation per (t, col) of u(D) G(D) = w(D)
  int ucount = kappa * (dw + 1);
  int eqs = n * (dw + mu + 1);
  Mat A(f, eqs, ucount + 1);  // augmented
  for (int t = 0; t <= dw + mu; ++t) {
    for (int col = 0; col < n; ++col) {
      int eq = t * n + col;
      for (int j = 0; j <= dw; ++j) {
        int m = t - j;
        if (m < 0 || m > mu) continue;
        for (int a = 0; a < kappa; ++a)
          A.at(eq, j * kappa + a) = f.add(A.at(eq, j * kappa + a), g.coeff(m).at(a, col));
      }
      A.at(eq, ucount) = (t <= dw) ? w_blocks[size_t(t)][size_t(col)] : 0;
    }
  }
  Rref rr = rref(std::move(A));
  // inconsistent iff a pivot lands in the augmented column
  for (int p : rr.pivot_cols)
    if (p == ucount) return false;
  // read a particular solution (free unknowns zero) and verify
  std::vector<uint32_t> x(size_t(ucount), 0);
  for (int r = 0; r < rr.rank; ++r) x[size_t(rr.pivot_cols[size_t(r)])] = rr.R.at(r, ucount);
  for (int t = 0; t <= dw + mu; ++t)
    for (int col = 0; col < n; ++col) {
      uint32_t acc = 0;
      for (int j = 0; j <= dw; ++j) {
        int m = t - j;
        if (m < 0 || m > mu) continue;
        for (int a = 0; a < kappa; ++a) {
          uint32_t uv = x[size_t(j * kappa + a)];
          if (uv) acc = f.add(acc, f.mul(uv, g.coeff(m).at(a, col)));
        }
      }
      uint32_t want = (t <= dw) ? w_blocks[size_t(t)][size_t(col)] : 0;
      if (acc != want) return false;
    }
  return true;
}

}  // namespace negaconv
