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

// Registry rows for every registered chain.  Each entry wires the literal
// convolution sum, the stationary-parameter resolver, and both eigenvalue
// recipes (closed form and terminating series).

#pragma once

namespace convchain {

inline const char* case_token(CaseId id) {
  switch (id) {
    case CaseId::KI: return "K-i";
    case CaseId::KII: return "K-ii";
    case CaseId::KIII: return "K-iii";
    case CaseId::KIV: return "K-iv";
    case CaseId::KV: return "K-v";
    case CaseId::HI: return "H-i";
    case CaseId::HII: return "H-ii";
    case CaseId::HIII: return "H-iii";
    case CaseId::HIV: return "H-iv";
    case CaseId::QHI: return "qH-i";
    case CaseId::QHII: return "qH-ii";
    case CaseId::QHIII: return "qH-iii";
    case CaseId::QHIV: return "qH-iv";
    case CaseId::CConv1: return "C-conv1";
    case CaseId::CConv3: return "C-conv3";
    case CaseId::CIV: return "C-iv";
    case CaseId::CV: return "C-v";
    case CaseId::MI: return "M-i";
    case CaseId::MIII: return "M-iii";
    case CaseId::MIV: return "M-iv";
    case CaseId::QMI: return "qM-i";
    case CaseId::QMIII: return "qM-iii";
    case CaseId::QMIV: return "qM-iv";
  }
  return "?";
}

inline CaseId case_from_token(const std::string& token) {
  static const std::map<std::string, CaseId> table = {
      {"K-i", CaseId::KI},       {"K-ii", CaseId::KII},   {"K-iii", CaseId::KIII},
      {"K-iv", CaseId::KIV},     {"K-v", CaseId::KV},     {"H-i", CaseId::HI},
      {"H-ii", CaseId::HII},     {"H-iii", CaseId::HIII}, {"H-iv", CaseId::HIV},
      {"qH-i", CaseId::QHI},     {"qH-ii", CaseId::QHII}, {"qH-iii", CaseId::QHIII},
      {"qH-iv", CaseId::QHIV},   {"C-conv1", CaseId::CConv1},
      {"C-conv3", CaseId::CConv3}, {"C-iv", CaseId::CIV}, {"C-v", CaseId::CV},
      {"M-i", CaseId::MI},       {"M-iii", CaseId::MIII}, {"M-iv", CaseId::MIV},
      {"qM-i", CaseId::QMI},     {"qM-iii", CaseId::QMIII}, {"qM-iv", CaseId::QMIV},
  };
  auto it = table.find(token);
  if (it == table.end()) throw CaseError("unknown case '" + token + "'");
  return it->second;
}

inline bool case_is_finite(CaseId id) {
  switch (id) {
    case CaseId::CConv1:
    case CaseId::CConv3:
    case CaseId::CIV:
    case CaseId::CV:
    case CaseId::MI:
    case CaseId::MIII:
    case CaseId::MIV:
    case CaseId::QMI:
    case CaseId::QMIII:
    case CaseId::QMIV:
      return false;
    default:
      return true;
  }
}

namespace detail {

template <class T>
std::vector<CaseDef<T>> make_registry() {
  using P = CaseParams<T>;
  std::vector<CaseDef<T>> defs;
  auto add = [&](CaseDef<T> d) {
    d.token = case_token(d.id);
    d.finite = case_is_finite(d.id);
    defs.push_back(std::move(d));
  };

  // ------------------------------------------------------------- Krawtchouk
  {
    CaseDef<T> d;
    d.id = CaseId::KI;
    d.type = ConvolutionType::I;
    d.det_factorizes = true;
    d.param_names = {"a", "b"};
    d.validate = [](const P& p) { require_open01(p, {"a", "b"}); };
    d.entry = [](const P& p, int N, int x, int y) -> T {
      const T a = cp(p, "a"), b = cp(p, "b");
      T s(0);
      for (int z = 0; z <= std::min(x, y); ++z)
        s = s + kraw::measure(x - z, N - z, b) * kraw::measure(z, y, a);
      return s;
    };
    d.stationary = [](const P& p, int N) -> FamilySpec<T> {
      const T a = cp(p, "a"), b = cp(p, "b");
      return KrawtchoukSpec<T>{b / (T(1) - a + a * b), N};
    };
    d.eigenvalue = [](const P& p, int n) -> T {
      const T a = cp(p, "a"), b = cp(p, "b");
      return pow_int(a * (T(1) - b), n);
    };
    d.eigenvalue_series = [](const P& p, int n) {
      const T a = cp(p, "a"), b = cp(p, "b");
      const T pstar = b / (T(1) - a + a * b);
      return hypergeometric_series<T>({T(-n)}, {}, b / pstar, n);
    };
    d.deform = [](const P& p, const T& t) -> P {
      if (!(t > T(0) && t <= T(1))) throw DomainError("K-i deformation: t must lie in (0,1]");
      const T a = cp(p, "a"), b = cp(p, "b");
      const T a2 = a * t;
      const T b2 = (T(1) - a * t) * b / (T(1) - a * (T(1) - b * (T(1) - t)));
      return P{{"a", a2}, {"b", b2}};
    };
    add(std::move(d));
  }
  {
    CaseDef<T> d;
    d.id = CaseId::KII;
    d.type = ConvolutionType::II;
    d.param_names = {"a", "b"};
    d.validate = [](const P& p) { require_open01(p, {"a", "b"}); };
    d.entry = [](const P& p, int N, int x, int y) -> T {
      const T a = cp(p, "a"), b = cp(p, "b");
      T s(0);
      for (int z = std::max(0, x + y - N); z <= std::min(x, y); ++z)
        s = s + kraw::measure(x - z, N - y, b) * kraw::measure(z, y, a);
      return s;
    };
    d.stationary = [](const P& p, int N) -> FamilySpec<T> {
      const T a = cp(p, "a"), b = cp(p, "b");
      return KrawtchoukSpec<T>{b / (T(1) - a + b), N};
    };
    d.eigenvalue = [](const P& p, int n) -> T {
      return pow_int(cp(p, "a") - cp(p, "b"), n);
    };
    d.eigenvalue_series = [](const P& p, int n) {
      const T a = cp(p, "a"), b = cp(p, "b");
      const T pstar = b / (T(1) - a + b);
      return hypergeometric_series<T>({T(-n)}, {}, b / pstar, n);
    };
    add(std::move(d));
  }
  {
    CaseDef<T> d;
    d.id = CaseId::KIII;
    d.type = ConvolutionType::III;
    d.det_factorizes = true;
    d.param_names = {"a", "b"};
    d.validate = [](const P& p) { require_open01(p, {"a", "b"}); };
    d.entry = [](const P& p, int N, int x, int y) -> T {
      const T a = cp(p, "a"), b = cp(p, "b");
      T s(0);
      for (int z = std::max(x, y); z <= N; ++z)
        s = s + kraw::measure(x, z, b) * kraw::measure(z - y, N - y, a);
      return s;
    };
    d.stationary = [](const P& p, int N) -> FamilySpec<T> {
      const T a = cp(p, "a"), b = cp(p, "b");
      return KrawtchoukSpec<T>{a * b / (T(1) - b + a * b), N};
    };
    d.eigenvalue = [](const P& p, int n) -> T {
      const T a = cp(p, "a"), b = cp(p, "b");
      return pow_int((T(1) - a) * b, n);
    };
    d.eigenvalue_series = [](const P& p, int n) {
      const T a = cp(p, "a"), b = cp(p, "b");
      const T pstar = a * b / (T(1) - b + a * b);
      return hypergeometric_series<T>({T(-n)}, {}, a * b / pstar, n);
    };
    add(std::move(d));
  }
  {
    CaseDef<T> d;
    d.id = CaseId::KIV;
    d.type = ConvolutionType::IV;
    d.param_names = {"a", "b", "c"};
    d.validate = [](const P& p) { require_open01(p, {"a", "b", "c"}); };
    d.entry = [](const P& p, int N, int x, int y) -> T {
      const T a = cp(p, "a"), b = cp(p, "b"), c = cp(p, "c");
      T s(0);
      for (int z2 = 0; z2 <= std::min(x, y); ++z2) {
        T inner(0);
        for (int z1 = std::max(x, y); z1 <= N; ++z1)
          inner = inner + kraw::measure(x - z2, z1 - z2, c) * kraw::measure(z1 - y, N - y, b);
        s = s + kraw::measure(z2, y, a) * inner;
      }
      return s;
    };
    d.stationary = [](const P& p, int N) -> FamilySpec<T> {
      const T a = cp(p, "a"), b = cp(p, "b"), c = cp(p, "c");
      return KrawtchoukSpec<T>{b * c / (b * c + (T(1) - a) * (T(1) - c)), N};
    };
    d.eigenvalue = [](const P& p, int n) -> T {
      const T a = cp(p, "a"), b = cp(p, "b"), c = cp(p, "c");
      return pow_int(a + c - a * c - b * c, n);
    };
    d.eigenvalue_series = [](const P& p, int n) {
      const T a = cp(p, "a"), b = cp(p, "b"), c = cp(p, "c");
      const T pstar = b * c / (b * c + (T(1) - a) * (T(1) - c));
      return hypergeometric_series<T>({T(-n)}, {}, b * c / pstar, n);
    };
    add(std::move(d));
  }
  {
    CaseDef<T> d;
    d.id = CaseId::KV;
    d.type = ConvolutionType::V;
    d.param_names = {"a", "b", "c"};
    d.validate = [](const P& p) { require_open01(p, {"a", "b", "c"}); };
    d.entry = [](const P& p, int N, int x, int y) -> T {
      const T a = cp(p, "a"), b = cp(p, "b"), c = cp(p, "c");
      T s(0);
      for (int z2 = 0; z2 <= std::min(x, y); ++z2) {
        T inner(0);
        for (int z1 = x + y - z2; z1 <= N; ++z1)
          inner = inner + kraw::measure(x - z2, z1 - y, c) * kraw::measure(z1 - y, N - y, b);
        s = s + kraw::measure(z2, y, a) * inner;
      }
      return s;
    };
    d.stationary = [](const P& p, int N) -> FamilySpec<T> {
      const T a = cp(p, "a"), b = cp(p, "b"), c = cp(p, "c");
      return KrawtchoukSpec<T>{b * c / (T(1) - a + b * c), N};
    };
    d.eigenvalue = [](const P& p, int n) -> T {
      const T a = cp(p, "a"), b = cp(p, "b"), c = cp(p, "c");
      return pow_int(a - b * c, n);
    };
    d.eigenvalue_series = [](const P& p, int n) {
      const T a = cp(p, "a"), b = cp(p, "b"), c = cp(p, "c");
      const T pstar = b * c / (T(1) - a + b * c);
      return hypergeometric_series<T>({T(-n)}, {}, b * c / pstar, n);
    };
    add(std::move(d));
  }

  // ------------------------------------------------------------------- Hahn
  {
    CaseDef<T> d;
    d.id = CaseId::HI;
    d.type = ConvolutionType::I;
    d.det_factorizes = true;
    d.param_names = {"a", "b", "c"};
    d.validate = [](const P& p) { require_positive(p, {"a", "b", "c"}); };
    d.entry = [](const P& p, int N, int x, int y) -> T {
      const T a = cp(p, "a"), b = cp(p, "b"), c = cp(p, "c");
      T s(0);
      for (int z = 0; z <= std::min(x, y); ++z)
        s = s + hahn::measure(x - z, N - z, b, c) * hahn::measure(z, y, a, b);
      return s;
    };
    d.stationary = [](const P& p, int N) -> FamilySpec<T> {
      return HahnSpec<T>{cp(p, "a") + cp(p, "b"), cp(p, "c"), N};
    };
    d.eigenvalue = [](const P& p, int n) -> T {
      const T a = cp(p, "a"), b = cp(p, "b"), c = cp(p, "c");
      return pochhammer(a, n) * pochhammer(c, n) /
             (pochhammer(a + b, n) * pochhammer(b + c, n));
    };
    d.eigenvalue_series = [](const P& p, int n) {
      const T a = cp(p, "a"), b = cp(p, "b"), c = cp(p, "c");
      return hypergeometric_series<T>({T(-n), T(n) + a + b + c - T(1), b}, {a + b, b + c},
                                      T(1), n);
    };
    d.deform = [](const P& p, const T& t) -> P {
      const T a = cp(p, "a"), b = cp(p, "b"), c = cp(p, "c");
      if (!(t > -a && t < b)) throw DomainError("H-i deformation: t must lie in (-a, b)");
      return P{{"a", a + t}, {"b", b - t}, {"c", c}};
    };
    add(std::move(d));
  }
  {
    CaseDef<T> d;
    d.id = CaseId::HII;
    d.type = ConvolutionType::II;
    d.param_names = {"a", "b", "c"};
    d.validate = [](const P& p) { require_positive(p, {"a", "b", "c"}); };
    d.entry = [](const P& p, int N, int x, int y) -> T {
      const T a = cp(p, "a"), b = cp(p, "b"), c = cp(p, "c");
      T s(0);
      for (int z = std::max(0, x + y - N); z <= std::min(x, y); ++z)
        s = s + hahn::measure(x - z, N - y, b, c) * hahn::measure(z, y, a, b);
      return s;
    };
    d.stationary = [](const P& p, int N) -> FamilySpec<T> {
      const T a = cp(p, "a"), b = cp(p, "b"), c = cp(p, "c");
      return HahnSpec<T>{a + b, b + c, N};
    };
    d.eigenvalue = [](const P& p, int n) -> T {
      const T a = cp(p, "a"), b = cp(p, "b"), c = cp(p, "c");
      // Alternating binomial sum; no product closed form for this case.
      T s(0);
      for (int k = 0; k <= n; ++k) {
        T term = binomial<T>(n, k) * pochhammer(b, k) *
                 pochhammer(T(n) + a + T(2) * b + c - T(1), k) /
                 (pochhammer(a + b, k) * pochhammer(b + c, k));
        if (k % 2 == 0)
          s = s + term;
        else
          s = s - term;
      }
      return s;
    };
    d.eigenvalue_series = [](const P& p, int n) {
      const T a = cp(p, "a"), b = cp(p, "b"), c = cp(p, "c");
      return hypergeometric_series<T>({T(-n), T(n) + a + T(2) * b + c - T(1), b},
                                      {a + b, b + c}, T(1), n);
    };
    add(std::move(d));
  }
  {
    CaseDef<T> d;
    d.id = CaseId::HIII;
    d.type = ConvolutionType::III;
    d.det_factorizes = true;
    d.param_names = {"a", "b", "c"};
    d.validate = [](const P& p) { require_positive(p, {"a", "b", "c"}); };
    d.entry = [](const P& p, int N, int x, int y) -> T {
      const T a = cp(p, "a"), b = cp(p, "b"), c = cp(p, "c");
      T s(0);
      for (int z = std::max(x, y); z <= N; ++z)
        s = s + hahn::measure(x, z, c, a) * hahn::measure(z - y, N - y, a, b);
      return s;
    };
    d.stationary = [](const P& p, int N) -> FamilySpec<T> {
      return HahnSpec<T>{cp(p, "c"), cp(p, "a") + cp(p, "b"), N};
    };
    d.eigenvalue = [](const P& p, int n) -> T {
      const T a = cp(p, "a"), b = cp(p, "b"), c = cp(p, "c");
      return pochhammer(b, n) * pochhammer(c, n) /
             (pochhammer(a + b, n) * pochhammer(a + c, n));
    };
    d.eigenvalue_series = [](const P& p, int n) {
      const T a = cp(p, "a"), b = cp(p, "b"), c = cp(p, "c");
      return hypergeometric_series<T>({T(-n), T(n) + a + b + c - T(1), a}, {a + b, a + c},
                                      T(1), n);
    };
    add(std::move(d));
  }
  {
    CaseDef<T> d;
    d.id = CaseId::HIV;
    d.type = ConvolutionType::IV;
    d.param_names = {"a1", "b1", "a2", "b2"};
    d.validate = [](const P& p) { require_positive(p, {"a1", "b1", "a2", "b2"}); };
    d.entry = [](const P& p, int N, int x, int y) -> T {
      const T a1 = cp(p, "a1"), b1 = cp(p, "b1"), a2 = cp(p, "a2"), b2 = cp(p, "b2");
      T s(0);
      for (int z2 = 0; z2 <= std::min(x, y); ++z2) {
        T inner(0);
        for (int z1 = std::max(x, y); z1 <= N; ++z1)
          inner = inner +
                  hahn::measure(x - z2, z1 - z2, b1, a2) * hahn::measure(z1 - y, N - y, a2, b2);
        s = s + hahn::measure(z2, y, a1, b1) * inner;
      }
      return s;
    };
    d.stationary = [](const P& p, int N) -> FamilySpec<T> {
      return HahnSpec<T>{cp(p, "a1") + cp(p, "b1"), cp(p, "a2") + cp(p, "b2"), N};
    };
    d.eigenvalue = [](const P& p, int n) -> T {
      const T a1 = cp(p, "a1"), b1 = cp(p, "b1"), a2 = cp(p, "a2"), b2 = cp(p, "b2");
      return series_sum(hypergeometric_series<T>(
          {T(-n), T(n) + a1 + b1 + a2 + b2 - T(1), b1, a2},
          {a1 + b1, b1 + a2, a2 + b2}, T(1), n));
    };
    d.eigenvalue_series = [](const P& p, int n) {
      const T a1 = cp(p, "a1"), b1 = cp(p, "b1"), a2 = cp(p, "a2"), b2 = cp(p, "b2");
      return hypergeometric_series<T>({T(-n), T(n) + a1 + b1 + a2 + b2 - T(1), b1, a2},
                                      {a1 + b1, b1 + a2, a2 + b2}, T(1), n);
    };
    add(std::move(d));
  }

  // ----------------------------------------------------------------- q-Hahn
  {
    CaseDef<T> d;
    d.id = CaseId::QHI;
    d.type = ConvolutionType::I;
    d.det_factorizes = true;
    d.param_names = {"a", "b", "c"};
    d.needs_q = true;
    d.validate = [](const P& p) { require_open01(p, {"a", "b", "c", "q"}); };
    d.entry = [](const P& p, int N, int x, int y) -> T {
      const T a = cp(p, "a"), b = cp(p, "b"), c = cp(p, "c"), q = cp(p, "q");
      T s(0);
      for (int z = 0; z <= std::min(x, y); ++z)
        s = s + qhahn::measure(x - z, N - z, b, c, q) * qhahn::measure(z, y, a, b, q);
      return s;
    };
    d.stationary = [](const P& p, int N) -> FamilySpec<T> {
      return QHahnSpec<T>{cp(p, "a") * cp(p, "b"), cp(p, "c"), cp(p, "q"), N};
    };
    d.eigenvalue = [](const P& p, int n) -> T {
      const T a = cp(p, "a"), b = cp(p, "b"), c = cp(p, "c"), q = cp(p, "q");
      return pow_int(b, n) * q_pochhammer(a, q, n) * q_pochhammer(c, q, n) /
             (q_pochhammer(a * b, q, n) * q_pochhammer(b * c, q, n));
    };
    d.eigenvalue_series = [](const P& p, int n) {
      const T a = cp(p, "a"), b = cp(p, "b"), c = cp(p, "c"), q = cp(p, "q");
      return basic_series<T>({pow_int(q, -n), a * b * c * pow_int(q, n - 1), b},
                             {a * b, b * c}, q, n, q);
    };
    d.deform = [](const P& p, const T& t) -> P {
      const T a = cp(p, "a"), b = cp(p, "b"), c = cp(p, "c"), q = cp(p, "q");
      if (!(t > b && t < T(1) / a)) throw DomainError("qH-i deformation: t must lie in (b, 1/a)");
      return P{{"a", a * t}, {"b", b / t}, {"c", c}, {"q", q}};
    };
    add(std::move(d));
  }
  {
    // The type-(ii) convolution has no q-Hahn realization; registered so that
    // requests fail loudly rather than silently.
    CaseDef<T> d;
    d.id = CaseId::QHII;
    d.type = ConvolutionType::II;
    d.needs_q = true;
    auto reject = []() -> CaseError {
      return CaseError("qH-ii: the type-(ii) convolution admits no q-Hahn stationary family");
    };
    d.validate = [reject](const P&) { throw reject(); };
    d.entry = [reject](const P&, int, int, int) -> T { throw reject(); };
    d.stationary = [reject](const P&, int) -> FamilySpec<T> { throw reject(); };
    d.eigenvalue = [reject](const P&, int) -> T { throw reject(); };
    d.eigenvalue_series = [reject](const P&, int) -> SeriesSpec<T> { throw reject(); };
    add(std::move(d));
  }
  {
    CaseDef<T> d;
    d.id = CaseId::QHIII;
    d.type = ConvolutionType::III;
    d.det_factorizes = true;
    d.param_names = {"a", "b", "c"};
    d.needs_q = true;
    d.validate = [](const P& p) { require_open01(p, {"a", "b", "c", "q"}); };
    d.entry = [](const P& p, int N, int x, int y) -> T {
      const T a = cp(p, "a"), b = cp(p, "b"), c = cp(p, "c"), q = cp(p, "q");
      T s(0);
      for (int z = std::max(x, y); z <= N; ++z)
        s = s + qhahn::measure(x, z, c, a, q) * qhahn::measure(z - y, N - y, a, b, q);
      return s;
    };
    d.stationary = [](const P& p, int N) -> FamilySpec<T> {
      return QHahnSpec<T>{cp(p, "c"), cp(p, "a") * cp(p, "b"), cp(p, "q"), N};
    };
    d.eigenvalue = [](const P& p, int n) -> T {
      const T a = cp(p, "a"), b = cp(p, "b"), c = cp(p, "c"), q = cp(p, "q");
      return pow_int(a, n) * q_pochhammer(b, q, n) * q_pochhammer(c, q, n) /
             (q_pochhammer(a * b, q, n) * q_pochhammer(a * c, q, n));
    };
    d.eigenvalue_series = [](const P& p, int n) {
      const T a = cp(p, "a"), b = cp(p, "b"), c = cp(p, "c"), q = cp(p, "q");
      return basic_series<T>({pow_int(q, -n), a * b * c * pow_int(q, n - 1), a},
                             {a * c, a * b}, q, n, q);
    };
    add(std::move(d));
  }
  {
    CaseDef<T> d;
    d.id = CaseId::QHIV;
    d.type = ConvolutionType::IV;
    d.param_names = {"a1", "b1", "a2", "b2"};
    d.needs_q = true;
    d.validate = [](const P& p) { require_open01(p, {"a1", "b1", "a2", "b2", "q"}); };
    d.entry = [](const P& p, int N, int x, int y) -> T {
      const T a1 = cp(p, "a1"), b1 = cp(p, "b1"), a2 = cp(p, "a2"), b2 = cp(p, "b2"),
              q = cp(p, "q");
      T s(0);
      for (int z2 = 0; z2 <= std::min(x, y); ++z2) {
        T inner(0);
        for (int z1 = std::max(x, y); z1 <= N; ++z1)
          inner = inner + qhahn::measure(x - z2, z1 - z2, b1, a2, q) *
                              qhahn::measure(z1 - y, N - y, a2, b2, q);
        s = s + qhahn::measure(z2, y, a1, b1, q) * inner;
      }
      return s;
    };
    d.stationary = [](const P& p, int N) -> FamilySpec<T> {
      return QHahnSpec<T>{cp(p, "a1") * cp(p, "b1"), cp(p, "a2") * cp(p, "b2"), cp(p, "q"), N};
    };
    d.eigenvalue = [](const P& p, int n) -> T {
      const T a1 = cp(p, "a1"), b1 = cp(p, "b1"), a2 = cp(p, "a2"), b2 = cp(p, "b2"),
              q = cp(p, "q");
      return series_sum(basic_series<T>(
          {pow_int(q, -n), a1 * b1 * a2 * b2 * pow_int(q, n - 1), b1, a2},
          {a1 * b1, b1 * a2, a2 * b2}, q, n, q));
    };
    d.eigenvalue_series = [](const P& p, int n) {
      const T a1 = cp(p, "a1"), b1 = cp(p, "b1"), a2 = cp(p, "a2"), b2 = cp(p, "b2"),
              q = cp(p, "q");
      return basic_series<T>({pow_int(q, -n), a1 * b1 * a2 * b2 * pow_int(q, n - 1), b1, a2},
                             {a1 * b1, b1 * a2, a2 * b2}, q, n, q);
    };
    add(std::move(d));
  }

  // --------------------------------------------- semi-infinite: Charlier
  {
    CaseDef<T> d;
    d.id = CaseId::CConv1;
    d.type = ConvolutionType::I;
    d.param_names = {"a", "b"};
    d.validate = [](const P& p) {
      require_open01(p, {"a"});
      require_positive(p, {"b"});
    };
    d.stationary = [](const P& p, int) -> FamilySpec<T> {
      return CharlierSpec<T>{cp(p, "b") / (T(1) - cp(p, "a"))};
    };
    d.eigenvalue = [](const P& p, int n) -> T { return pow_int(cp(p, "a"), n); };
    d.eigenvalue_series = [](const P& p, int n) {
      const T a = cp(p, "a"), b = cp(p, "b");
      const T pstar = b / (T(1) - a);
      return hypergeometric_series<T>({T(-n)}, {}, b / pstar, n);
    };
    d.deform = [](const P& p, const T& t) -> P {
      if (!(t > T(0) && t <= T(1)))
        throw DomainError("C-conv1 deformation: t must lie in (0,1]");
      const T a = cp(p, "a"), b = cp(p, "b");
      return P{{"a", a * t}, {"b", (T(1) - a * t) * b / (T(1) - a)}};
    };
    add(std::move(d));
  }
  {
    CaseDef<T> d;
    d.id = CaseId::CConv3;
    d.type = ConvolutionType::III;
    d.param_names = {"a", "b"};
    d.validate = [](const P& p) {
      require_open01(p, {"b"});
      require_positive(p, {"a"});
    };
    d.stationary = [](const P& p, int) -> FamilySpec<T> {
      return CharlierSpec<T>{cp(p, "a") * cp(p, "b") / (T(1) - cp(p, "b"))};
    };
    d.eigenvalue = [](const P& p, int n) -> T { return pow_int(cp(p, "b"), n); };
    d.eigenvalue_series = [](const P& p, int n) {
      const T a = cp(p, "a"), b = cp(p, "b");
      const T pstar = a * b / (T(1) - b);
      return hypergeometric_series<T>({T(-n)}, {}, a * b / pstar, n);
    };
    add(std::move(d));
  }
  {
    CaseDef<T> d;
    d.id = CaseId::CIV;
    d.type = ConvolutionType::IV;
    d.param_names = {"a", "b", "c"};
    d.validate = [](const P& p) {
      require_open01(p, {"a", "c"});
      require_positive(p, {"b"});
    };
    d.stationary = [](const P& p, int) -> FamilySpec<T> {
      const T a = cp(p, "a"), b = cp(p, "b"), c = cp(p, "c");
      return CharlierSpec<T>{b * c / ((T(1) - a) * (T(1) - c))};
    };
    d.eigenvalue = [](const P& p, int n) -> T {
      const T a = cp(p, "a"), c = cp(p, "c");
      return pow_int(a + c - a * c, n);
    };
    d.eigenvalue_series = [](const P& p, int n) {
      const T a = cp(p, "a"), b = cp(p, "b"), c = cp(p, "c");
      const T pstar = b * c / ((T(1) - a) * (T(1) - c));
      return hypergeometric_series<T>({T(-n)}, {}, b * c / pstar, n);
    };
    add(std::move(d));
  }
  {
    CaseDef<T> d;
    d.id = CaseId::CV;
    d.type = ConvolutionType::V;
    d.param_names = {"a", "b", "c"};
    d.validate = [](const P& p) {
      require_open01(p, {"a", "c"});
      require_positive(p, {"b"});
    };
    d.stationary = [](const P& p, int) -> FamilySpec<T> {
      const T a = cp(p, "a"), b = cp(p, "b"), c = cp(p, "c");
      return CharlierSpec<T>{b * c / (T(1) - a)};
    };
    d.eigenvalue = [](const P& p, int n) -> T { return pow_int(cp(p, "a"), n); };
    d.eigenvalue_series = [](const P& p, int n) {
      const T a = cp(p, "a"), b = cp(p, "b"), c = cp(p, "c");
      const T pstar = b * c / (T(1) - a);
      return hypergeometric_series<T>({T(-n)}, {}, b * c / pstar, n);
    };
    add(std::move(d));
  }

  // ----------------------------------------------- semi-infinite: Meixner
  {
    CaseDef<T> d;
    d.id = CaseId::MI;
    d.type = ConvolutionType::I;
    d.param_names = {"a", "b", "c"};
    d.validate = [](const P& p) {
      require_positive(p, {"a", "b"});
      require_open01(p, {"c"});
    };
    d.stationary = [](const P& p, int) -> FamilySpec<T> {
      return MeixnerSpec<T>{cp(p, "a") + cp(p, "b"), cp(p, "c")};
    };
    d.eigenvalue = [](const P& p, int n) -> T {
      const T a = cp(p, "a"), b = cp(p, "b");
      return pochhammer(a, n) / pochhammer(a + b, n);
    };
    d.eigenvalue_series = [](const P& p, int n) {
      const T a = cp(p, "a"), b = cp(p, "b");
      return hypergeometric_series<T>({T(-n), b}, {a + b}, T(1), n);
    };
    add(std::move(d));
  }
  {
    CaseDef<T> d;
    d.id = CaseId::MIII;
    d.type = ConvolutionType::III;
    d.param_names = {"a", "b", "c"};
    d.validate = [](const P& p) {
      require_positive(p, {"a", "c"});
      require_open01(p, {"b"});
    };
    d.stationary = [](const P& p, int) -> FamilySpec<T> {
      return MeixnerSpec<T>{cp(p, "c"), cp(p, "b")};
    };
    d.eigenvalue = [](const P& p, int n) -> T {
      const T a = cp(p, "a"), c = cp(p, "c");
      return pochhammer(c, n) / pochhammer(a + c, n);
    };
    d.eigenvalue_series = [](const P& p, int n) {
      const T a = cp(p, "a"), c = cp(p, "c");
      return hypergeometric_series<T>({T(-n), a}, {a + c}, T(1), n);
    };
    add(std::move(d));
  }
  {
    CaseDef<T> d;
    d.id = CaseId::MIV;
    d.type = ConvolutionType::IV;
    d.param_names = {"a1", "b1", "a2", "b2"};
    d.validate = [](const P& p) {
      require_positive(p, {"a1", "b1", "a2"});
      require_open01(p, {"b2"});
    };
    d.stationary = [](const P& p, int) -> FamilySpec<T> {
      return MeixnerSpec<T>{cp(p, "a1") + cp(p, "b1"), cp(p, "b2")};
    };
    d.eigenvalue = [](const P& p, int n) -> T {
      const T a1 = cp(p, "a1"), b1 = cp(p, "b1"), a2 = cp(p, "a2");
      return series_sum(
          hypergeometric_series<T>({T(-n), b1, a2}, {a1 + b1, b1 + a2}, T(1), n));
    };
    d.eigenvalue_series = [](const P& p, int n) {
      const T a1 = cp(p, "a1"), b1 = cp(p, "b1"), a2 = cp(p, "a2");
      return hypergeometric_series<T>({T(-n), b1, a2}, {a1 + b1, b1 + a2}, T(1), n);
    };
    add(std::move(d));
  }

  // --------------------------------------------- semi-infinite: q-Meixner
  {
    CaseDef<T> d;
    d.id = CaseId::QMI;
    d.type = ConvolutionType::I;
    d.param_names = {"a", "b", "c"};
    d.needs_q = true;
    d.validate = [](const P& p) {
      require_open01(p, {"a", "b", "q"});
      require_positive(p, {"c"});
    };
    d.stationary = [](const P& p, int) -> FamilySpec<T> {
      const T a = cp(p, "a"), b = cp(p, "b"), c = cp(p, "c"), q = cp(p, "q");
      return QMeixnerSpec<T>{a * b / q, c / (a * b), q};
    };
    d.eigenvalue = [](const P& p, int n) -> T {
      const T a = cp(p, "a"), b = cp(p, "b"), q = cp(p, "q");
      return q_pochhammer(a, q, n) / q_pochhammer(a * b, q, n);
    };
    d.eigenvalue_series = [](const P& p, int n) {
      const T a = cp(p, "a"), b = cp(p, "b"), q = cp(p, "q");
      return basic_series<T>({pow_int(q, -n), b}, {a * b}, a * pow_int(q, n), n, q);
    };
    d.deform = [](const P& p, const T& t) -> P {
      const T a = cp(p, "a"), b = cp(p, "b"), c = cp(p, "c"), q = cp(p, "q");
      if (!(t > b && t < T(1) / a)) throw DomainError("qM-i deformation: t must lie in (b, 1/a)");
      return P{{"a", a * t}, {"b", b / t}, {"c", c}, {"q", q}};
    };
    add(std::move(d));
  }
  {
    CaseDef<T> d;
    d.id = CaseId::QMIII;
    d.type = ConvolutionType::III;
    d.param_names = {"a", "b", "c"};
    d.needs_q = true;
    d.validate = [](const P& p) {
      require_open01(p, {"a", "c", "q"});
      require_positive(p, {"b"});
    };
    d.stationary = [](const P& p, int) -> FamilySpec<T> {
      const T a = cp(p, "a"), b = cp(p, "b"), c = cp(p, "c"), q = cp(p, "q");
      return QMeixnerSpec<T>{c / q, b / (a * c), q};
    };
    d.eigenvalue = [](const P& p, int n) -> T {
      const T a = cp(p, "a"), c = cp(p, "c"), q = cp(p, "q");
      return q_pochhammer(c, q, n) / q_pochhammer(a * c, q, n);
    };
    d.eigenvalue_series = [](const P& p, int n) {
      const T a = cp(p, "a"), c = cp(p, "c"), q = cp(p, "q");
      return basic_series<T>({pow_int(q, -n), a}, {a * c}, c * pow_int(q, n), n, q);
    };
    add(std::move(d));
  }
  {
    CaseDef<T> d;
    d.id = CaseId::QMIV;
    d.type = ConvolutionType::IV;
    d.param_names = {"a1", "b1", "a2", "b2"};
    d.needs_q = true;
    d.validate = [](const P& p) {
      require_open01(p, {"a1", "b1", "a2", "q"});
      require_positive(p, {"b2"});
    };
    d.stationary = [](const P& p, int) -> FamilySpec<T> {
      const T a1 = cp(p, "a1"), b1 = cp(p, "b1"), a2 = cp(p, "a2"), b2 = cp(p, "b2"),
              q = cp(p, "q");
      return QMeixnerSpec<T>{a1 * b1 / q, b2 / (a1 * b1 * a2), q};
    };
    d.eigenvalue = [](const P& p, int n) -> T {
      const T a1 = cp(p, "a1"), b1 = cp(p, "b1"), a2 = cp(p, "a2"), q = cp(p, "q");
      return series_sum(basic_series<T>({pow_int(q, -n), b1, a2}, {a1 * b1, b1 * a2},
                                        a1 * b1 * pow_int(q, n), n, q));
    };
    d.eigenvalue_series = [](const P& p, int n) {
      const T a1 = cp(p, "a1"), b1 = cp(p, "b1"), a2 = cp(p, "a2"), q = cp(p, "q");
      return basic_series<T>({pow_int(q, -n), b1, a2}, {a1 * b1, b1 * a2},
                             a1 * b1 * pow_int(q, n), n, q);
    };
    add(std::move(d));
  }

  return defs;
}

template <class T>
const std::vector<CaseDef<T>>& registry() {
  static const std::vector<CaseDef<T>> defs = make_registry<T>();
  return defs;
}

}  // namespace detail

template <class T>
const CaseDef<T>& case_def(CaseId id) {
  for (const auto& d : detail::registry<T>())
    if (d.id == id) return d;
  throw CaseError("unregistered case");
}

template <class T>
std::vector<CaseId> registered_cases(bool finite_only) {
  std::vector<CaseId> out;
  for (const auto& d : detail::registry<T>()) {
    if (d.id == CaseId::QHII) continue;  // rejected case
    if (finite_only && !d.finite) continue;
    out.push_back(d.id);
  }
  return out;
}

}  // namespace convchain
