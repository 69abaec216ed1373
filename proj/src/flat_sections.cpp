#include "qmirror/flat_sections.hpp"

#include <sstream>
#include <stdexcept>

#include "qmirror/lg_models.hpp"

namespace qmirror {

namespace {

bool odd(int N) { return N % 2 != 0; }
int half_m(int N) { return odd(N) ? (N + 1) / 2 : (N + 2) / 2; }

void require_N(int N) {
  if (N < 3) throw std::invalid_argument("quadric dimension must be >= 3");
}

Rational int_pow(int base, int e) {
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;  // 0^0 = 1 by the empty product
}

Integer ipow(const Integer& b, int e) {
  Integer r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

Rational BetaTable::at(SchubertClass c, int k) const {
  auto it = entries.find({c, k});
  return it == entries.end() ? Rational(0) : it->second;
}

Coefficient closed_form_coefficient(int N, SchubertClass c, int k) {
  require_N(N);
  if (k < 0) throw std::invalid_argument("k must be >= 0");
  int m = half_m(N);
  if (c.prime) {
    if (odd(N) || c.i != m - 1) throw std::invalid_argument("invalid class");
    Rational v = int_pow(k, m - 1) * Rational(binomial(2 * k, k)) /
                 (Rational(2) * Rational(ipow(factorial(k), N)));
    if (k == 0) v = 0;
    return {v, static_cast<std::int64_t>(k) * N - (m - 1)};
  }
  int l = c.i;
  if (l < 0 || l > N) throw std::invalid_argument("invalid class");
  if (l == N) {
    if (k <= 1) return {Rational(0), static_cast<std::int64_t>(k - 1) * N};
    Rational v = Rational(k - 1, k) * Rational(binomial(2 * k - 2, k - 1)) /
                 Rational(ipow(factorial(k - 1), N));
    return {v, static_cast<std::int64_t>(k - 1) * N};
  }
  Rational v = int_pow(k, l) * Rational(binomial(2 * k, k)) / Rational(ipow(factorial(k), N));
  if (l >= (N + 1) / 2) v /= 2;
  return {v, static_cast<std::int64_t>(k) * N - l};
}

BetaTable beta_recursion(int N, int kmax) {
  require_N(N);
  if (kmax < 1) throw std::invalid_argument("kmax must be >= 1");
  int m = half_m(N);
  BetaTable tab;
  tab.N = N;
  auto classes = schubert_basis(N);

  Rational beta0_prev = 1, beta1_prev = 0;  // fundamental-class base values
  for (int k = 1; k <= kmax; ++k) {
    std::map<SchubertClass, Rational> cur;
    Rational kk(k);
    cur[{N, false}] = beta1_prev / kk;
    cur[{N - 1, false}] = (cur[{N, false}] + beta0_prev) / kk;
    if (odd(N)) {
      for (int l = N - 2; l >= 0; --l)
        cur[{l, false}] = (l == m - 1 ? Rational(2) * cur[{m, false}] : cur[{l + 1, false}]) / kk;
    } else {
      for (int l = N - 2; l >= m - 1; --l) cur[{l, false}] = cur[{l + 1, false}] / kk;
      cur[{m - 1, true}] = cur[{m, false}] / kk;
      cur[{m - 2, false}] = (cur[{m - 1, false}] + cur[{m - 1, true}]) / kk;
      for (int l = m - 3; l >= 0; --l) cur[{l, false}] = cur[{l + 1, false}] / kk;
    }
    for (const auto& [c, v] : cur)
      if (static_cast<std::int64_t>(N) * k - 1 - c.i >= 0) tab.entries[{c, k}] = v;
    beta0_prev = cur[{0, false}];
    beta1_prev = cur[{1, false}];
  }

  // Re-verify every relation on the filled table; the chain is exactly
  // determined, so a branch mistake shows up here.
  auto base = [&](SchubertClass c, int k) -> Rational {
    if (k == 0) return c.i == 0 && !c.prime ? Rational(1) : Rational(0);
    return tab.at(c, k);
  };
  for (int k = 1; k <= kmax; ++k) {
    for (const auto& c : classes) {
      Rational lhs = Rational(k) * base(c, k);
      Rational rhs;
      if (c.prime) {
        rhs = base({m, false}, k);
      } else if (c.i == N) {
        rhs = base({1, false}, k - 1);
      } else if (c.i == N - 1) {
        rhs = base({N, false}, k) + base({0, false}, k - 1);
      } else if (odd(N) && c.i == m - 1) {
        rhs = Rational(2) * base({m, false}, k);
      } else if (!odd(N) && c.i == m - 2) {
        rhs = base({m - 1, false}, k) + base({m - 1, true}, k);
      } else {
        rhs = base({c.i + 1, false}, k);
      }
      if (lhs != rhs)
        throw std::logic_error("beta recursion is inconsistent at (" + c.str() + ", k=" +
                               std::to_string(k) + ")");
    }
    if (!odd(N)) {
      if (base({m - 1, false}, k) != base({m - 1, true}, k))
        throw std::logic_error("middle beta symmetry fails at k=" + std::to_string(k));
    }
  }
  return tab;
}

Rational constant_term_coefficient(int N, SchubertClass c, int k) {
  require_N(N);
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  int m = half_m(N);
  int l = c.prime ? m - 1 : c.i;
  std::int64_t T = static_cast<std::int64_t>(k) * N - l;
  if (T < 0) throw std::invalid_argument("kN - l must be >= 0");

  auto vars = lusztig_vars(N);
  LaurentPolynomial pimg;
  if (!c.prime && c.i == 0) {
    pimg = LaurentPolynomial::one();
  } else {
    auto img = coordinate_map(MapKind::PlueckerInLusztig, N).images;
    const RationalFunction& f = c.prime ? img.at(pprime_var(m - 1)) : img.at(pvar(c.i));
    pimg = f.num();  // the images are polynomials in the torus coordinates
  }

  Rational total = 0;
  for (const auto& [mono, coef] : pimg.terms()) {
    for (int i = 0; i <= k; ++i) {
      int j = k - i;
      // counts forced by exponent balance: the two q-terms of the Lusztig
      // superpotential are q/(prod of all vars except a1) and
      // q/(prod of all vars except b1)
      Integer denom = factorial(static_cast<unsigned>(i)) * factorial(static_cast<unsigned>(j));
      bool feasible = true;
      std::int64_t used = i + j;
      for (const auto& v : vars) {
        std::int64_t n = -mono.exponent(v);
        if (v != "a1") n += i;
        if (v != "b1") n += j;
        if (n < 0) {
          feasible = false;
          break;
        }
        used += n;
        denom *= factorial(static_cast<unsigned>(n));
      }
      if (!feasible) continue;
      if (used != T)
        throw std::logic_error("constant-term balance is inconsistent");
      total += coef / Rational(denom);
    }
  }
  return total;
}

std::vector<Rational> hypergeometric_series(int N, int kmax) {
  require_N(N);
  if (kmax < 0) throw std::invalid_argument("kmax must be >= 0");
  std::vector<Rational> a;
  for (int k = 0; k <= kmax; ++k)
    a.push_back(Rational(binomial(2 * k, k)) / Rational(ipow(factorial(k), N)));
  return a;
}

Rational gw_invariant(int N, int k) {
  require_N(N);
  if (k < 1) throw std::invalid_argument("degree must be >= 1");
  return Rational(binomial(2 * k, k)) / Rational(ipow(factorial(k), N));
}

QSeries assemble_section(int N, int order) {
  require_N(N);
  if (order < 0) throw std::invalid_argument("order must be >= 0");
  QSeries S(N, order);
  for (const auto& c : schubert_basis(N)) {
    SchubertClass dual = poincare_dual(N, c);
    for (int k = 0; k <= order; ++k) {
      Coefficient co = closed_form_coefficient(N, c, k);
      if (co.value == 0) continue;
      S.terms[k].add(dual,
                     LaurentPolynomial::monomial(Monomial::var("hbar", -co.hbar_exponent),
                                                 co.value));
    }
  }
  return S;
}

FlatReport verify_flat(int N, int order) {
  FlatReport rep;
  if (order < 1) throw std::invalid_argument("order must be >= 1");
  QSeries S = assemble_section(N, order);
  for (Direction dir : {Direction::Q, Direction::Hbar}) {
    QSeries r = dual_dubrovin_apply(dir, S);
    if (!r.is_zero()) {
      rep.ok = false;
      std::ostringstream os;
      os << "dual connection does not annihilate the section, direction "
         << (dir == Direction::Q ? "q" : "hbar") << ", first nonzero terms:\n"
         << r.str();
      rep.detail = os.str();
      return rep;
    }
  }
  rep.ok = true;
  return rep;
}

}  // namespace qmirror
