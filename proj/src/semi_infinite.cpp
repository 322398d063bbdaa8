// Copyright 2026-present the convchain project
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Truncated builders for the chains living on the semi-infinite lattice.
// All of them run on the float backend: the Poisson / negative-binomial /
// q-product normalizations are transcendental.

#include <cmath>
#include <vector>

#include "convchain/chains.hpp"

namespace convchain {
namespace {

using Params = CaseParams<double>;

double get(const Params& p, const char* k) { return detail::cp(p, k); }

// How far past the matrix an inner convolution sum must run before the
// decaying factor stops contributing at double precision.
constexpr double kInnerEps = 1e-22;

int decay_margin(const std::function<double(int)>& factor) {
  for (int w = 0; w <= 2048; ++w)
    if (std::abs(factor(w)) < kInnerEps) return w;
  throw TruncationError("decay_margin: inner factor decays too slowly");
}

std::vector<double> charlier_values(double a, int len) {
  std::vector<double> v(len + 1);
  v[0] = charlier::measure0(a);
  for (int w = 0; w < len; ++w) v[w + 1] = v[w] * a / (w + 1);
  return v;
}

std::vector<double> meixner_values(double a, double b, int len) {
  std::vector<double> v(len + 1);
  v[0] = meixner::measure0(a, b);
  for (int w = 0; w < len; ++w) v[w + 1] = v[w] * (a + w) * b / (w + 1);
  return v;
}

std::vector<double> krawtchouk_column(int y, double p, int len) {
  std::vector<double> v(std::min(y, len) + 1);
  v[0] = std::pow(1.0 - p, y);
  for (int z = 0; z + 1 < static_cast<int>(v.size()); ++z)
    v[z + 1] = v[z] * (y - z) * p / ((z + 1) * (1.0 - p));
  return v;
}

std::vector<double> hahn_column(int y, double a, double b, int len) {
  std::vector<double> v(std::min(y, len) + 1);
  double v0 = 1.0;
  for (int j = 0; j < y; ++j) v0 *= (b + j) / (a + b + j);
  v[0] = v0;
  for (int z = 0; z + 1 < static_cast<int>(v.size()); ++z)
    v[z + 1] = v[z] * (y - z) * (a + z) / ((z + 1) * (b + y - z - 1));
  return v;
}

/// pi_K(x, z, p) for all z <= rows, x <= min(z, cols).
std::vector<std::vector<double>> krawtchouk_table(double p, int rows, int cols) {
  std::vector<std::vector<double>> t(rows + 1);
  for (int z = 0; z <= rows; ++z) t[z] = krawtchouk_column(z, p, cols);
  return t;
}

std::vector<std::vector<double>> hahn_table(double a, double b, int rows, int cols) {
  std::vector<std::vector<double>> t(rows + 1);
  for (int z = 0; z <= rows; ++z) t[z] = hahn_column(z, a, b, cols);
  return t;
}

// ---------------------------------------------------------------------------
// q-series tables.
// ---------------------------------------------------------------------------

std::vector<double> qpoch_values(double a, double q, int len) {
  std::vector<double> v(len + 1);
  v[0] = 1.0;
  double qj = 1.0;
  for (int k = 0; k < len; ++k) {
    v[k + 1] = v[k] * (1.0 - a * qj);
    qj *= q;
  }
  return v;
}

std::vector<double> power_values(double a, int len) {
  std::vector<double> v(len + 1);
  v[0] = 1.0;
  for (int k = 0; k < len; ++k) v[k + 1] = v[k] * a;
  return v;
}

double q_power_tri_diff(double q, long hi, long lo) {
  // q^{C(hi,2) - C(lo,2)}; exponents can be large, go through pow_int.
  return pow_int(q, hi * (hi - 1) / 2 - lo * (lo - 1) / 2);
}

struct QHahnTables {
  double q;
  std::vector<double> qa, qb, qab, qq, pa;

  QHahnTables(double a, double b, double q_, int len)
      : q(q_),
        qa(qpoch_values(a, q_, len)),
        qb(qpoch_values(b, q_, len)),
        qab(qpoch_values(a * b, q_, len)),
        qq(qpoch_values(q_, q_, len)),
        pa(power_values(a, len)) {}

  double measure(int x, int N) const {
    if (x < 0 || x > N) return 0.0;
    double qbinom = qq[N] / (qq[x] * qq[N - x]);
    return qbinom * qa[x] * qb[N - x] * pa[N - x] / qab[N];
  }
};

DenseMatrix<double> alloc(int extent) { return DenseMatrix<double>(extent + 1); }

}  // namespace

TruncatedLattice semi_infinite_window(CaseId id, const Params& params, double tail_tol) {
  const auto& def = case_def<double>(id);
  if (def.finite) throw CaseError(std::string(def.token) + ": finite-lattice case");
  def.validate(params);
  FamilySpec<double> fam = def.stationary(params, -1);
  validate(fam);
  return truncate_for(fam, tail_tol);
}

TransitionMatrix<double> build_semi_infinite(CaseId id, const Params& params, double tail_tol) {
  const auto& def = case_def<double>(id);
  if (def.finite) throw CaseError(std::string(def.token) + ": finite-lattice case");
  def.validate(params);

  const TruncatedLattice window = semi_infinite_window(id, params, tail_tol);
  const int E = window.extent;
  TransitionMatrix<double> out;
  out.case_token = def.token;
  out.truncated = true;
  out.core = window.core;
  out.tail_tol = window.tail_tol;
  out.K = alloc(E);
  DenseMatrix<double>& K = out.K;

  switch (id) {
    case CaseId::CConv1: {
      const double a = get(params, "a"), b = get(params, "b");
      const auto pc = charlier_values(b, E);
      for (int y = 0; y <= E; ++y) {
        const auto kcol = krawtchouk_column(y, a, E);
        for (int x = 0; x <= E; ++x) {
          double s = 0.0;
          const int zmax = std::min({x, y, static_cast<int>(kcol.size()) - 1});
          for (int z = 0; z <= zmax; ++z) s += pc[x - z] * kcol[z];
          K(x, y) = s;
        }
      }
      break;
    }
    case CaseId::CConv3: {
      const double a = get(params, "a"), b = get(params, "b");
      const int margin = decay_margin(
          [&](int w) { return charlier::measure0(a) * charlier::measure_ratio<double>(w, a); });
      const int zcap = E + margin;
      const auto pc = charlier_values(a, zcap);
      const auto kt = krawtchouk_table(b, zcap, E);
      for (int y = 0; y <= E; ++y)
        for (int x = 0; x <= E; ++x) {
          double s = 0.0;
          for (int z = std::max(x, y); z <= zcap; ++z) s += kt[z][x] * pc[z - y];
          K(x, y) = s;
        }
      break;
    }
    case CaseId::CIV: {
      const double a = get(params, "a"), b = get(params, "b"), c = get(params, "c");
      const int margin = decay_margin(
          [&](int w) { return charlier::measure0(b) * charlier::measure_ratio<double>(w, b); });
      const int zcap = E + margin;
      const auto pc = charlier_values(b, zcap);
      const auto kc = krawtchouk_table(c, zcap, E);
      for (int y = 0; y <= E; ++y) {
        const auto acol = krawtchouk_column(y, a, E);
        for (int x = 0; x <= E; ++x) {
          double s = 0.0;
          const int z2max = std::min({x, y, static_cast<int>(acol.size()) - 1});
          for (int z2 = 0; z2 <= z2max; ++z2) {
            double inner = 0.0;
            for (int z1 = std::max(x, y); z1 <= zcap; ++z1) {
              const auto& col = kc[z1 - z2];
              if (x - z2 < static_cast<int>(col.size())) inner += col[x - z2] * pc[z1 - y];
            }
            s += acol[z2] * inner;
          }
          K(x, y) = s;
        }
      }
      break;
    }
    case CaseId::CV: {
      const double a = get(params, "a"), b = get(params, "b"), c = get(params, "c");
      const int margin = decay_margin(
          [&](int w) { return charlier::measure0(b) * charlier::measure_ratio<double>(w, b); });
      const int zcap = E + margin;
      const auto pc = charlier_values(b, zcap);
      const auto kc = krawtchouk_table(c, zcap, E);
      for (int y = 0; y <= E; ++y) {
        const auto acol = krawtchouk_column(y, a, E);
        for (int x = 0; x <= E; ++x) {
          double s = 0.0;
          const int z2max = std::min({x, y, static_cast<int>(acol.size()) - 1});
          for (int z2 = 0; z2 <= z2max; ++z2) {
            double inner = 0.0;
            // z1 >= x + y - z2 >= y, so kc[z1 - y] is always in range.
            for (int z1 = x + y - z2; z1 <= zcap; ++z1) {
              const auto& col = kc[z1 - y];
              if (x - z2 < static_cast<int>(col.size())) inner += col[x - z2] * pc[z1 - y];
            }
            s += acol[z2] * inner;
          }
          K(x, y) = s;
        }
      }
      break;
    }
    case CaseId::MI: {
      const double a = get(params, "a"), b = get(params, "b"), c = get(params, "c");
      const auto pm = meixner_values(b, c, E);
      for (int y = 0; y <= E; ++y) {
        const auto hcol = hahn_column(y, a, b, E);
        for (int x = 0; x <= E; ++x) {
          double s = 0.0;
          const int zmax = std::min({x, y, static_cast<int>(hcol.size()) - 1});
          for (int z = 0; z <= zmax; ++z) s += pm[x - z] * hcol[z];
          K(x, y) = s;
        }
      }
      break;
    }
    case CaseId::MIII: {
      const double a = get(params, "a"), b = get(params, "b"), c = get(params, "c");
      const int margin = decay_margin([&](int w) {
        return meixner::measure0(a, b) * meixner::measure_ratio<double>(w, a, b);
      });
      const int zcap = E + margin;
      const auto pm = meixner_values(a, b, zcap);
      const auto ht = hahn_table(c, a, zcap, E);
      for (int y = 0; y <= E; ++y)
        for (int x = 0; x <= E; ++x) {
          double s = 0.0;
          for (int z = std::max(x, y); z <= zcap; ++z) s += ht[z][x] * pm[z - y];
          K(x, y) = s;
        }
      break;
    }
    case CaseId::MIV: {
      const double a1 = get(params, "a1"), b1 = get(params, "b1"), a2 = get(params, "a2"),
                   b2 = get(params, "b2");
      const int margin = decay_margin([&](int w) {
        return meixner::measure0(a2, b2) * meixner::measure_ratio<double>(w, a2, b2);
      });
      const int zcap = E + margin;
      const auto pm = meixner_values(a2, b2, zcap);
      const auto h2 = hahn_table(b1, a2, zcap, E);
      for (int y = 0; y <= E; ++y) {
        const auto h1col = hahn_column(y, a1, b1, E);
        for (int x = 0; x <= E; ++x) {
          double s = 0.0;
          const int z2max = std::min({x, y, static_cast<int>(h1col.size()) - 1});
          for (int z2 = 0; z2 <= z2max; ++z2) {
            double inner = 0.0;
            for (int z1 = std::max(x, y); z1 <= zcap; ++z1) {
              const auto& col = h2[z1 - z2];
              if (x - z2 < static_cast<int>(col.size())) inner += col[x - z2] * pm[z1 - y];
            }
            s += h1col[z2] * inner;
          }
          K(x, y) = s;
        }
      }
      break;
    }
    case CaseId::QMI: {
      const double a = get(params, "a"), b = get(params, "b"), c = get(params, "c"),
                   q = get(params, "q");
      const QHahnTables qh(a, b, q, E);
      const double pref = q_pochhammer_infinite(-c, q) / q_pochhammer_infinite(-c / b, q);
      const auto qb = qpoch_values(b, q, E);
      const auto qq = qpoch_values(q, q, E);
      const auto pcb = power_values(c / b, E);
      const auto qnegc = qpoch_values(-c, q, E);
      const auto qnegcb = qpoch_values(-c / b, q, E);
      for (int y = 0; y <= E; ++y)
        for (int x = 0; x <= E; ++x) {
          double s = 0.0;
          for (int z = 0; z <= std::min(x, y); ++z) {
            const int w = x - z;
            const double prime = qb[w] * pcb[w] * q_power_tri_diff(q, x, z) / qq[w] * pref *
                                 qnegcb[z] / qnegc[x];
            s += prime * qh.measure(z, y);
          }
          K(x, y) = s;
        }
      break;
    }
    case CaseId::QMIII: {
      const double a = get(params, "a"), b = get(params, "b"), c = get(params, "c"),
                   q = get(params, "q");
      const double pref = q_pochhammer_infinite(-b, q) / q_pochhammer_infinite(-b / a, q);
      const int margin = 64;
      const int zcap = E + margin;
      const QHahnTables qh(c, a, q, zcap);
      const auto qa = qpoch_values(a, q, zcap);
      const auto qq = qpoch_values(q, q, zcap);
      const auto pba = power_values(b / a, zcap);
      const auto qnegb = qpoch_values(-b, q, zcap);
      const auto qnegba = qpoch_values(-b / a, q, zcap);
      for (int y = 0; y <= E; ++y)
        for (int x = 0; x <= E; ++x) {
          double s = 0.0;
          for (int z = std::max(x, y); z <= zcap; ++z) {
            const int w = z - y;
            const double prime = qnegba[y] * qa[w] * pba[w] * q_power_tri_diff(q, z, y) /
                                 (qnegb[z] * qq[w]) * pref;
            s += qh.measure(x, z) * prime;
          }
          K(x, y) = s;
        }
      break;
    }
    case CaseId::QMIV: {
      const double a1 = get(params, "a1"), b1 = get(params, "b1"), a2 = get(params, "a2"),
                   b2 = get(params, "b2"), q = get(params, "q");
      const double pref = q_pochhammer_infinite(-b2, q) / q_pochhammer_infinite(-b2 / a2, q);
      const int margin = 64;
      const int zcap = E + margin;
      const QHahnTables qh1(a1, b1, q, E);
      const QHahnTables qh2(b1, a2, q, zcap);
      const auto qa2 = qpoch_values(a2, q, zcap);
      const auto qq = qpoch_values(q, q, zcap);
      const auto pba = power_values(b2 / a2, zcap);
      const auto qnegb2 = qpoch_values(-b2, q, zcap);
      const auto qnegb2a2 = qpoch_values(-b2 / a2, q, zcap);
      for (int y = 0; y <= E; ++y)
        for (int x = 0; x <= E; ++x) {
          double s = 0.0;
          for (int z2 = 0; z2 <= std::min(x, y); ++z2) {
            double inner = 0.0;
            for (int z1 = std::max(x, y); z1 <= zcap; ++z1) {
              const int w = z1 - y;
              const double prime = qnegb2a2[y] * qa2[w] * pba[w] * q_power_tri_diff(q, z1, y) /
                                   (qnegb2[z1] * qq[w]) * pref;
              inner += qh2.measure(x - z2, z1 - z2) * prime;
            }
            s += qh1.measure(z2, y) * inner;
          }
          K(x, y) = s;
        }
      break;
    }
    default:
      throw CaseError(std::string(def.token) + ": no semi-infinite builder registered");
  }
  return out;
}

// ---------------------------------------------------------------------------
// The second eigenvalue branch of the q-Meixner chains.
// ---------------------------------------------------------------------------

namespace {

/// Non-terminating 3phi2 summed to machine precision (|z| < 1).
double phi32_convergent(double n1, double n2, double n3, double d1, double d2, double q,
                        double z) {
  double sum = 1.0, term = 1.0, qk = 1.0;
  for (int k = 0; k < 4096; ++k) {
    term *= (1.0 - n1 * qk) * (1.0 - n2 * qk) * (1.0 - n3 * qk);
    term /= (1.0 - d1 * qk) * (1.0 - d2 * qk);
    qk *= q;
    term *= z / (1.0 - qk);
    sum += term;
    if (std::abs(term) < 1e-20 * std::max(1.0, std::abs(sum))) return sum;
  }
  throw NumericError("phi32_convergent: series did not converge");
}

}  // namespace

double extra_eigenvalue(CaseId id, const Params& params, int n) {
  const auto& def = case_def<double>(id);
  if (id != CaseId::QMI && id != CaseId::QMIII && id != CaseId::QMIV)
    throw CaseError(std::string(def.token) + ": no second eigenvector family");
  def.validate(params);
  const double q = get(params, "q");
  switch (id) {
    case CaseId::QMI: {
      const double a = get(params, "a"), b = get(params, "b"), c = get(params, "c");
      const double pref = q_pochhammer_infinite(a, q) * q_pochhammer_infinite(-c, q) /
                          (q_pochhammer_infinite(a * b, q) * q_pochhammer_infinite(-c / b, q));
      return pref * q_pochhammer(-c / b, q, n) / q_pochhammer(-c, q, n);
    }
    case CaseId::QMIII: {
      const double a = get(params, "a"), b = get(params, "b"), c = get(params, "c");
      const double pref = q_pochhammer_infinite(c, q) * q_pochhammer_infinite(-b, q) /
                          (q_pochhammer_infinite(a * c, q) * q_pochhammer_infinite(-b / a, q));
      return pref * q_pochhammer(-b / a, q, n) / q_pochhammer(-b, q, n);
    }
    case CaseId::QMIV: {
      const double a1 = get(params, "a1"), b1 = get(params, "b1"), a2 = get(params, "a2"),
                   b2 = get(params, "b2");
      const double pref =
          q_pochhammer_infinite(b1, q) * q_pochhammer_infinite(-b2, q) /
          (q_pochhammer_infinite(b1 * a2, q) * q_pochhammer_infinite(-b2 / a2, q));
      double outer = 0.0;
      double qk = 1.0;
      for (int k = 0; k <= n; ++k) {
        const double weight = q_pochhammer(std::pow(q, -n), q, k) * q_pochhammer(b1, q, k) *
                              q_pochhammer(a2, q, k) /
                              (q_pochhammer(-b2, q, k) * q_pochhammer(a1 * b1, q, k) *
                               q_pochhammer(q, q, k)) *
                              pow_int(-b2 / a2 * std::pow(q, n), k);
        const double tail = phi32_convergent(a1, a2 * qk, -b2 / a2 * qk, -b2 * qk,
                                             a1 * b1 * qk, q, b1);
        outer += weight * tail;
        qk *= q;
      }
      return pref * outer;
    }
    default:
      throw CaseError(std::string(def.token) + ": no second eigenvector family");
  }
}

double extra_eigenvalue_series(CaseId id, const Params& params, int n) {
  const auto& def = case_def<double>(id);
  if (id != CaseId::QMI && id != CaseId::QMIII && id != CaseId::QMIV)
    throw CaseError(std::string(def.token) + ": no second eigenvector family");
  def.validate(params);
  const double q = get(params, "q");
  switch (id) {
    case CaseId::QMI: {
      const double a = get(params, "a"), b = get(params, "b"), c = get(params, "c");
      const double pref = q_pochhammer_infinite(a, q) * q_pochhammer_infinite(-c, q) /
                          (q_pochhammer_infinite(a * b, q) * q_pochhammer_infinite(-c / b, q));
      return pref * series_sum(basic_series<double>({std::pow(q, -n), b}, {-c},
                                                    -c / b * std::pow(q, n), n, q));
    }
    case CaseId::QMIII: {
      const double a = get(params, "a"), b = get(params, "b"), c = get(params, "c");
      const double pref = q_pochhammer_infinite(c, q) * q_pochhammer_infinite(-b, q) /
                          (q_pochhammer_infinite(a * c, q) * q_pochhammer_infinite(-b / a, q));
      return pref * series_sum(basic_series<double>({std::pow(q, -n), a}, {-b},
                                                    -b / a * std::pow(q, n), n, q));
    }
    case CaseId::QMIV: {
      // Literal double-sum route over the truncated lattice.
      const double a1 = get(params, "a1"), b1 = get(params, "b1"), a2 = get(params, "a2"),
                   b2 = get(params, "b2");
      const double pref =
          q_pochhammer_infinite(b1, q) * q_pochhammer_infinite(-b2, q) /
          (q_pochhammer_infinite(b1 * a2, q) * q_pochhammer_infinite(-b2 / a2, q));
      const double bm = -b2 / (a2 * q), cm = a1 * b1 * a2 / b2;
      const double pi0 = qmeixner::measure0(a2 / q, -b1, q);
      double outer = 0.0;
      for (int z = 0; z <= 512; ++z) {
        const double wz = pi0 * qmeixner::measure_ratio<double>(z, a2 / q, -b1, q);
        if (z > 8 && std::abs(wz) < 1e-22) break;
        double inner = 0.0;
        for (int y = 0; y <= z; ++y) {
          const double h = qhahn::measure<double>(y, z, -b2 / a2, a2, q);
          const double corner = qhahn::measure<double>(0, y, a1, b1, q);
          inner += h * corner * qmeixner::poly<double>(n, y, bm, cm, q);
        }
        outer += wz * inner;
      }
      return pref * outer;
    }
    default:
      throw CaseError(std::string(def.token) + ": no second eigenvector family");
  }
}

}  // namespace convchain
