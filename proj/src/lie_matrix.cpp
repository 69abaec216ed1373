#include "qmirror/lie_matrix.hpp"

#include <sstream>
#include <stdexcept>

#include "qmirror/lg_models.hpp"

namespace qmirror {

namespace {
LaurentPolynomial LV(const Symbol& s) { return LaurentPolynomial::var(s); }
}  // namespace

PolyMatrix PolyMatrix::identity(int n) {
  PolyMatrix I(n);
  for (int i = 1; i <= n; ++i) I.at(i, i) = LaurentPolynomial::one();
  return I;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  if (n_ != o.n_) throw std::invalid_argument("matrix size mismatch");
  PolyMatrix r(n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      if (e_[i][k].is_zero()) continue;
      for (int j = 0; j < n_; ++j) {
        if (o.e_[k][j].is_zero()) continue;
        r.e_[i][j] += e_[i][k] * o.e_[k][j];
      }
    }
  return r;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
  if (n_ != o.n_) throw std::invalid_argument("matrix size mismatch");
  PolyMatrix r(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r.e_[i][j] = e_[i][j] + o.e_[i][j];
  return r;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix r(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r.e_[j][i] = e_[i][j];
  return r;
}

bool PolyMatrix::is_zero() const {
  for (const auto& row : e_)
    for (const auto& x : row)
      if (!x.is_zero()) return false;
  return true;
}

ChevalleyGenerators chevalley_generators(int m) {
  if (m < 3) throw std::invalid_argument("chevalley_generators needs m >= 3");
  ChevalleyGenerators g;
  g.m = m;
  int n = 2 * m;
  for (int i = 1; i <= m; ++i) {
    PolyMatrix e(n);
    if (i < m) {
      e.at(i, i + 1) = LaurentPolynomial::one();
      e.at(2 * m - i, 2 * m - i + 1) = LaurentPolynomial::one();
    } else {
      e.at(m - 1, m + 1) = LaurentPolynomial::one();
      e.at(m, m + 2) = LaurentPolynomial::one();
    }
    g.e.push_back(e);
    g.f.push_back(e.transpose());
  }
  return g;
}

PolyMatrix one_param_subgroup(int m, int i, const LaurentPolynomial& t) {
  auto g = chevalley_generators(m);
  if (i < 1 || i > m) throw std::invalid_argument("generator index out of range");
  PolyMatrix r = PolyMatrix::identity(2 * m);
  const PolyMatrix& f = g.f[i - 1];
  for (int a = 1; a <= 2 * m; ++a)
    for (int b = 1; b <= 2 * m; ++b)
      if (!f.at(a, b).is_zero()) r.at(a, b) = r.at(a, b) + t * f.at(a, b);
  return r;
}

PolyMatrix factored_u2(int m) {
  PolyMatrix u = PolyMatrix::identity(2 * m);
  for (int i = 1; i <= m - 2; ++i) u = u * one_param_subgroup(m, i, LV("a" + std::to_string(i)));
  u = u * one_param_subgroup(m, m, LV("d"));
  u = u * one_param_subgroup(m, m - 1, LV("c"));
  for (int i = m - 2; i >= 1; --i) u = u * one_param_subgroup(m, i, LV("b" + std::to_string(i)));
  return u;
}

PolyMatrix quadratic_form(int m) {
  int n = 2 * m;
  PolyMatrix Q(n);
  for (int i = 1; i <= n; ++i) {
    int j = n + 1 - i;
    int mx = std::max(i, j);
    Q.at(i, j) = LaurentPolynomial::constant(mx % 2 == 0 ? Rational(1) : Rational(-1));
  }
  return Q;
}

namespace {

// x_i(1), y_i(-1) built from constant matrices; the Weyl representative is
// y_i(-1) x_i(1) y_i(-1).
PolyMatrix weyl_s(const ChevalleyGenerators& g, int i) {
  int n = 2 * g.m;
  auto addc = [&](const PolyMatrix& base, const PolyMatrix& gen, const Rational& c) {
    PolyMatrix r = base;
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b)
        if (!gen.at(a, b).is_zero())
          r.at(a, b) = r.at(a, b) + gen.at(a, b) * LaurentPolynomial::constant(c);
    return r;
  };
  PolyMatrix I = PolyMatrix::identity(n);
  PolyMatrix x1 = addc(I, g.e[i - 1], Rational(1));
  PolyMatrix ym1 = addc(I, g.f[i - 1], Rational(-1));
  return ym1 * x1 * ym1;
}

PolyMatrix word_matrix(const ChevalleyGenerators& g, const std::vector<int>& word) {
  PolyMatrix r = PolyMatrix::identity(2 * g.m);
  for (int i : word) r = r * weyl_s(g, i);
  return r;
}

int image_column(const PolyMatrix& M) {
  // index j with M * v_{2m} = +-v_j
  int n = M.size();
  int found = -1;
  for (int r = 1; r <= n; ++r) {
    if (M.at(r, n).is_zero()) continue;
    if (found != -1) throw std::logic_error("weyl word image is not a basis vector");
    found = r;
  }
  if (found == -1) throw std::logic_error("weyl word image is zero");
  return found;
}

}  // namespace

std::vector<int> pluecker_column_order(int m) {
  auto g = chevalley_generators(m);
  std::vector<std::vector<int>> words;
  words.push_back({});  // p_0
  auto descending = [](int from) {
    std::vector<int> w;
    for (int i = from; i >= 1; --i) w.push_back(i);
    return w;
  };
  for (int k = 1; k <= m - 1; ++k) words.push_back(descending(k));  // p_1 .. p_{m-1}
  {
    std::vector<int> w{m};  // p'_{m-1} = s_m s_{m-2} ... s_1
    auto tail = descending(m - 2);
    w.insert(w.end(), tail.begin(), tail.end());
    words.push_back(w);
  }
  {
    std::vector<int> w{m};  // p_m = s_m s_{m-1} ... s_1
    auto tail = descending(m - 1);
    w.insert(w.end(), tail.begin(), tail.end());
    words.push_back(w);
  }
  for (int k = m + 1; k <= 2 * m - 2; ++k) {
    std::vector<int> w;  // s_{2m-1-k} ... s_{m-2} s_m s_{m-1} s_{m-2} ... s_1
    for (int i = 2 * m - 1 - k; i <= m - 2; ++i) w.push_back(i);
    w.push_back(m);
    w.push_back(m - 1);
    for (int i = m - 2; i >= 1; --i) w.push_back(i);
    words.push_back(w);
  }

  std::vector<int> cols;
  for (const auto& w : words) cols.push_back(image_column(word_matrix(g, w)));

  // cross-check against the stated basis convention
  std::vector<int> expected;
  expected.push_back(2 * m);
  for (int k = 1; k <= m - 1; ++k) expected.push_back(2 * m - k);
  expected.push_back(m);
  for (int k = m; k <= 2 * m - 2; ++k) expected.push_back(2 * m - k - 1);
  if (cols != expected)
    throw std::logic_error("derived Plucker column order disagrees with the basis convention");
  return cols;
}

PlueckerValues pluecker_from_matrix(const PolyMatrix& M) {
  int n = M.size();
  if (n % 2 != 0) throw std::invalid_argument("matrix size must be even");
  int m = n / 2;
  auto cols = pluecker_column_order(m);
  PlueckerValues v;
  // cols order: p_0..p_{m-1}, p'_{m-1}, p_m..p_{2m-2}
  for (int k = 0; k <= m - 1; ++k) v.p.push_back(M.at(n, cols[k]));
  v.p_prime = M.at(n, cols[m]);
  for (int k = m; k <= 2 * m - 2; ++k) v.p.push_back(M.at(n, cols[k + 1]));
  return v;
}

static LaurentPolynomial det_poly(std::vector<std::vector<LaurentPolynomial>> a) {
  // cofactor expansion; the minors in play are small
  std::size_t n = a.size();
  if (n == 0) return LaurentPolynomial::one();
  if (n == 1) return a[0][0];
  LaurentPolynomial d;
  for (std::size_t j = 0; j < n; ++j) {
    if (a[0][j].is_zero()) continue;
    std::vector<std::vector<LaurentPolynomial>> sub(n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) sub[i - 1].push_back(a[i][k]);
    LaurentPolynomial t = a[0][j] * det_poly(std::move(sub));
    d += (j % 2 == 0) ? t : -t;
  }
  return d;
}

LaurentPolynomial minor(const PolyMatrix& M, const std::vector<int>& rows,
                        const std::vector<int>& cols) {
  if (rows.size() != cols.size()) throw std::invalid_argument("minor: row/column count mismatch");
  std::vector<std::vector<LaurentPolynomial>> a(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) a[i].push_back(M.at(rows[i], cols[j]));
  return det_poly(std::move(a));
}

MinorReport verify_minor_identities(int m) {
  MinorReport rep;
  std::ostringstream os;
  auto fail = [&rep, &os](const std::string& what) {
    rep.ok = false;
    rep.detail = what + (os.str().empty() ? "" : "\n" + os.str());
    return rep;
  };

  PolyMatrix u2 = factored_u2(m);
  int n = 2 * m;
  auto P = pluecker_from_matrix(u2);

  // lower unipotent
  for (int i = 1; i <= n; ++i) {
    if (!(u2.at(i, i) == LaurentPolynomial::one())) return fail("diagonal is not 1");
    for (int j = i + 1; j <= n; ++j)
      if (!u2.at(i, j).is_zero()) return fail("upper triangle is not 0");
  }

  // orthogonality u2^T Q u2 = Q
  PolyMatrix Q = quadratic_form(m);
  if (!(u2.transpose() * Q * u2 == Q)) return fail("u2 is not orthogonal for Q");

  // bottom-row extraction agrees with the closed forms
  auto img = coordinate_map(MapKind::PlueckerInLusztig, 2 * m - 2).images;
  if (!(P.p[0] == LaurentPolynomial::one())) return fail("p_0 != 1");
  for (int k = 1; k <= 2 * m - 2; ++k)
    if (!(RationalFunction(P.p[k]) == img.at(pvar(k)))) {
      os << "p_" << k << " = " << P.p[k].str();
      return fail("bottom-row Plucker extraction disagrees with the closed form");
    }
  if (!(RationalFunction(P.p_prime) == img.at(pprime_var(m - 1))))
    return fail("p'_{m-1} disagrees with the closed form");

  // D_1^{2m} = p_{2m-2}
  if (!(minor(u2, {n}, {1}) == P.p[2 * m - 2])) return fail("D_1^{2m} != p_{2m-2}");

  // delta minors. The stated form D_{1..j}^{2..j,m+1} = delta_{s-m} does not
  // close on u2 (a degree count rules it out); the computed identities are
  //   D_{1..j}^{2..j,m+1} * p_{m-1} = delta_{2m-2-s}   (j = 2m-1-s)
  //   D_{1..j}^{2..j,2m}            = delta_{j-1}
  // and both are asserted here; the report notes the renormalization.
  auto delta_at = [&](int ell) {
    LaurentPolynomial d;
    for (int k = 0; k <= ell; ++k) {
      LaurentPolynomial t = P.p[ell - k] * P.p[2 * m - 2 - ell + k];
      d += (k % 2 == 0) ? t : -t;
    }
    return d;
  };
  bool printed_form_holds = true;
  for (int s = m + 1; s <= 2 * m - 3; ++s) {
    int j = 2 * m - 1 - s;
    std::vector<int> rows, cols;
    for (int r = 2; r <= j; ++r) rows.push_back(r);
    for (int c = 1; c <= j; ++c) cols.push_back(c);
    auto rows_mid = rows, rows_bot = rows;
    rows_mid.push_back(m + 1);
    rows_bot.push_back(n);
    LaurentPolynomial mid = minor(u2, rows_mid, cols);
    if (!(mid == delta_at(s - m))) printed_form_holds = false;
    if (!(mid * P.p[m - 1] == delta_at(2 * m - 2 - s))) {
      os << "s = " << s << ", minor = " << mid.str();
      return fail("delta minor identity fails even after renormalization");
    }
    if (!(minor(u2, rows_bot, cols) == delta_at(j - 1))) {
      os << "s = " << s;
      return fail("bottom-row delta determinant fails");
    }
  }
  if (!printed_form_holds)
    os << "note: the row-(m+1) delta minors equal delta_{2m-2-s}/p_{m-1}, "
          "not delta_{s-m}; ";

  // squared spin minors
  {
    std::vector<int> rows, cols;
    for (int r = 2; r <= m; ++r) rows.push_back(r);
    rows.push_back(n);
    for (int c = 1; c <= m - 1; ++c) cols.push_back(c);
    cols.push_back(m + 1);
    if (!(minor(u2, rows, cols) == P.p[m - 1] * P.p[m - 1]))
      return fail("squared minor for p_{m-1} fails");
  }
  {
    std::vector<int> rows, cols;
    for (int r = 2; r <= m - 1; ++r) rows.push_back(r);
    rows.push_back(m + 1);
    rows.push_back(n);
    for (int c = 1; c <= m; ++c) cols.push_back(c);
    if (!(minor(u2, rows, cols) == P.p_prime * P.p_prime))
      return fail("squared minor for p'_{m-1} fails");
  }

  // single-entry convention: the (m+1, 2m-1-s) entry is d b_{m-2} ... b_{2m-1-s}
  for (int s = m + 1; s <= 2 * m - 2; ++s) {
    LaurentPolynomial expect = LV("d");
    for (int j = m - 2; j >= 2 * m - 1 - s; --j) expect = expect * LV("b" + std::to_string(j));
    if (!(u2.at(m + 1, 2 * m - 1 - s) == expect)) {
      os << "observed entry (m+1," << 2 * m - 1 - s << ") = " << u2.at(m + 1, 2 * m - 1 - s).str();
      return fail("row m+1 entry monomial differs from d*b_{m-2}...b_{2m-1-s}");
    }
  }

  rep.ok = true;
  rep.detail = os.str();
  return rep;
}

}  // namespace qmirror
