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

#pragma once

namespace convchain {

inline const char* selfsim_token(SelfSimId id) {
  switch (id) {
    case SelfSimId::CC1: return "CC1";
    case SelfSimId::CC2: return "CC2";
    case SelfSimId::MM1: return "MM1";
    case SelfSimId::MM2: return "MM2";
    case SelfSimId::KThreeTerm: return "K-thconK";
    case SelfSimId::KPipiI: return "K-pipi-i";
    case SelfSimId::KPipiII: return "K-pipi-ii";
    case SelfSimId::H1: return "H-1";
    case SelfSimId::H2: return "H-2";
    case SelfSimId::H3: return "H-3";
    case SelfSimId::H4: return "H-4";
    case SelfSimId::H5: return "H-5";
    case SelfSimId::QH1: return "qH-1";
    case SelfSimId::QH2: return "qH-2";
    case SelfSimId::QH3: return "qH-3";
    case SelfSimId::QH4: return "qH-4";
    case SelfSimId::QH5: return "qH-5";
    case SelfSimId::LQJ1: return "LqJ-1";
    case SelfSimId::LQJ2: return "LqJ-2";
  }
  return "?";
}

namespace detail {

template <class E>
scalar_value_t<E> charlier_pi(int x, const E& a_in, bool ratio) {
  using T = scalar_value_t<E>;
  if (x < 0) return T(0);
  const T a(a_in);
  T u = charlier::measure_ratio(x, a);
  if (ratio) return u;
  if constexpr (is_exact_v<T>)
    throw DomainError("charlier: normalized form is transcendental");
  else
    return u * charlier::measure0(to_double(a));
}

template <class E1, class E2>
scalar_common_t<E1, E2> meixner_pi(int x, const E1& a_in, const E2& b_in, bool ratio) {
  using T = scalar_common_t<E1, E2>;
  if (x < 0) return T(0);
  const T a(a_in), b(b_in);
  T u = meixner::measure_ratio(x, a, b);
  if (ratio) return u;
  if constexpr (is_exact_v<T>)
    throw DomainError("meixner: normalized form is transcendental");
  else
    return u * meixner::measure0(to_double(a), to_double(b));
}

template <class E1, class E2, class E3>
scalar_common_t<E1, E2, E3> lqj_pi(int x, const E1& a_in, const E2& b_in, const E3& q_in,
                                   bool ratio) {
  using T = scalar_common_t<E1, E2, E3>;
  if (x < 0) return T(0);
  const T a(a_in), b(b_in), q(q_in);
  T u = littleqjacobi::measure_ratio(x, a, b, q);
  if (ratio) return u;
  if constexpr (is_exact_v<T>)
    throw DomainError("little-q-jacobi: normalized form is transcendental");
  else
    return u * littleqjacobi::measure0(to_double(a), to_double(b), to_double(q));
}

template <class T>
std::vector<SelfSimIdentity<T>> make_selfsim_registry() {
  using P = std::map<std::string, T>;
  std::vector<SelfSimIdentity<T>> rows;
  auto add = [&](SelfSimIdentity<T> r) {
    r.token = selfsim_token(r.id);
    rows.push_back(std::move(r));
  };
  auto at = [](const P& p, const char* k) -> const T& { return lemma_at(p, k); };

  // ------------------------------------------------------------- Charlier
  {
    SelfSimIdentity<T> r;
    r.id = SelfSimId::CC1;
    r.shape = SumShape::Prefix;
    r.ratio_only_exact = true;
    r.param_names = {"a1", "a2"};
    r.validate = [](const P& p) {
      if (!(lemma_at(p, "a1") > T(0) && lemma_at(p, "a2") > T(0)))
        throw DomainError("CC1: a1, a2 must be positive");
    };
    r.term = [at](const P& p, int, int x, int, int z, bool ratio) -> T {
      return charlier_pi(x - z, at(p, "a2"), ratio) * charlier_pi(z, at(p, "a1"), ratio);
    };
    r.rhs = [at](const P& p, int, int x, int, bool ratio) -> T {
      return charlier_pi(x, at(p, "a1") + at(p, "a2"), ratio);
    };
    add(std::move(r));
  }
  {
    SelfSimIdentity<T> r;
    r.id = SelfSimId::CC2;
    r.shape = SumShape::Window;
    r.ratio_only_exact = true;
    r.param_names = {"a1", "a2"};
    r.validate = [](const P& p) {
      if (!(lemma_at(p, "a1") > T(0) && lemma_at(p, "a2") > T(0)))
        throw DomainError("CC2: a1, a2 must be positive");
    };
    r.term = [at](const P& p, int, int x, int y, int z, bool ratio) -> T {
      return charlier_pi(x - z, at(p, "a2"), ratio) * charlier_pi(z - y, at(p, "a1"), ratio);
    };
    r.rhs = [at](const P& p, int, int x, int y, bool ratio) -> T {
      return charlier_pi(x - y, at(p, "a1") + at(p, "a2"), ratio);
    };
    add(std::move(r));
  }

  // -------------------------------------------------------------- Meixner
  {
    SelfSimIdentity<T> r;
    r.id = SelfSimId::MM1;
    r.shape = SumShape::Prefix;
    r.ratio_only_exact = true;
    r.param_names = {"a1", "a2", "b"};
    r.validate = [](const P& p) {
      if (!(lemma_at(p, "a1") > T(0) && lemma_at(p, "a2") > T(0)))
        throw DomainError("MM1: a1, a2 must be positive");
      if (!(lemma_at(p, "b") > T(0) && lemma_at(p, "b") < T(1)))
        throw DomainError("MM1: b must lie in (0,1)");
    };
    r.term = [at](const P& p, int, int x, int, int z, bool ratio) -> T {
      const T& b = at(p, "b");
      return meixner_pi(x - z, at(p, "a2"), b, ratio) * meixner_pi(z, at(p, "a1"), b, ratio);
    };
    r.rhs = [at](const P& p, int, int x, int, bool ratio) -> T {
      return meixner_pi(x, at(p, "a1") + at(p, "a2"), at(p, "b"), ratio);
    };
    add(std::move(r));
  }
  {
    SelfSimIdentity<T> r;
    r.id = SelfSimId::MM2;
    r.shape = SumShape::Window;
    r.ratio_only_exact = true;
    r.param_names = {"a1", "a2", "b"};
    r.validate = [](const P& p) {
      if (!(lemma_at(p, "a1") > T(0) && lemma_at(p, "a2") > T(0)))
        throw DomainError("MM2: a1, a2 must be positive");
      if (!(lemma_at(p, "b") > T(0) && lemma_at(p, "b") < T(1)))
        throw DomainError("MM2: b must lie in (0,1)");
    };
    r.term = [at](const P& p, int, int x, int y, int z, bool ratio) -> T {
      const T& b = at(p, "b");
      return meixner_pi(x - z, at(p, "a2"), b, ratio) * meixner_pi(z - y, at(p, "a1"), b, ratio);
    };
    r.rhs = [at](const P& p, int, int x, int y, bool ratio) -> T {
      return meixner_pi(x - y, at(p, "a1") + at(p, "a2"), at(p, "b"), ratio);
    };
    add(std::move(r));
  }

  // ----------------------------------------------------------- Krawtchouk
  auto open01 = [](const P& p, std::initializer_list<const char*> keys, const char* who) {
    for (const char* k : keys) {
      const T& v = lemma_at(p, k);
      if (!(v > T(0) && v < T(1)))
        throw DomainError(std::string(who) + ": parameter '" + k + "' must lie in (0,1)");
    }
  };
  {
    SelfSimIdentity<T> r;
    r.id = SelfSimId::KThreeTerm;
    r.shape = SumShape::Prefix;
    r.needs_lattice = true;
    r.param_names = {"a1", "a2"};
    r.validate = [open01](const P& p) { open01(p, {"a1", "a2"}, "K-thconK"); };
    r.term = [at](const P& p, int N, int x, int, int z, bool) -> T {
      return kraw::measure(x - z, N - z, at(p, "a2")) * kraw::measure(z, N, at(p, "a1"));
    };
    r.rhs = [at](const P& p, int N, int x, int, bool) -> T {
      const T a1 = at(p, "a1"), a2 = at(p, "a2");
      return kraw::measure(x, N, T(1) - (T(1) - a1) * (T(1) - a2));
    };
    add(std::move(r));
  }
  {
    SelfSimIdentity<T> r;
    r.id = SelfSimId::KPipiI;
    r.shape = SumShape::Between;
    r.param_names = {"a1", "a2"};
    r.validate = [open01](const P& p) { open01(p, {"a1", "a2"}, "K-pipi-i"); };
    r.term = [at](const P& p, int, int x, int y, int z, bool) -> T {
      return kraw::measure(x, z, at(p, "a2")) * kraw::measure(z, y, at(p, "a1"));
    };
    r.rhs = [at](const P& p, int, int x, int y, bool) -> T {
      return kraw::measure(x, y, at(p, "a1") * at(p, "a2"));
    };
    add(std::move(r));
  }
  {
    SelfSimIdentity<T> r;
    r.id = SelfSimId::KPipiII;
    r.shape = SumShape::Window;
    r.needs_lattice = true;
    r.param_names = {"a1", "a2"};
    r.validate = [open01](const P& p) { open01(p, {"a1", "a2"}, "K-pipi-ii"); };
    r.term = [at](const P& p, int N, int x, int y, int z, bool) -> T {
      return kraw::measure(x - z, N - z, at(p, "a2")) *
             kraw::measure(z - y, N - y, at(p, "a1"));
    };
    r.rhs = [at](const P& p, int N, int x, int y, bool) -> T {
      const T a1 = at(p, "a1"), a2 = at(p, "a2");
      return kraw::measure(x - y, N - y, T(1) - (T(1) - a1) * (T(1) - a2));
    };
    add(std::move(r));
  }

  // ----------------------------------------------------------------- Hahn
  auto positive = [](const P& p, std::initializer_list<const char*> keys, const char* who) {
    for (const char* k : keys)
      if (!(lemma_at(p, k) > T(0)))
        throw DomainError(std::string(who) + ": parameter '" + k + "' must be positive");
  };
  {
    SelfSimIdentity<T> r;
    r.id = SelfSimId::H1;
    r.shape = SumShape::Prefix;
    r.needs_lattice = true;
    r.param_names = {"a1", "b1", "a2"};
    r.validate = [positive](const P& p) { positive(p, {"a1", "b1", "a2"}, "H-1"); };
    r.term = [at](const P& p, int N, int x, int, int z, bool) -> T {
      const T a1 = at(p, "a1"), b1 = at(p, "b1"), a2 = at(p, "a2");
      return hahn::measure(x - z, N - z, a1, b1) * hahn::measure(z, N, a2, a1 + b1);
    };
    r.rhs = [at](const P& p, int N, int x, int, bool) -> T {
      return hahn::measure(x, N, at(p, "a1") + at(p, "a2"), at(p, "b1"));
    };
    add(std::move(r));
  }
  {
    SelfSimIdentity<T> r;
    r.id = SelfSimId::H2;
    r.shape = SumShape::Between;
    r.param_names = {"a1", "b1", "b2"};
    r.validate = [positive](const P& p) { positive(p, {"a1", "b1", "b2"}, "H-2"); };
    r.term = [at](const P& p, int, int x, int y, int z, bool) -> T {
      const T a1 = at(p, "a1"), b1 = at(p, "b1"), b2 = at(p, "b2");
      return hahn::measure(x, z, a1, b1) * hahn::measure(z, y, a1 + b1, b2);
    };
    r.rhs = [at](const P& p, int, int x, int y, bool) -> T {
      return hahn::measure(x, y, at(p, "a1"), at(p, "b1") + at(p, "b2"));
    };
    add(std::move(r));
  }
  {
    SelfSimIdentity<T> r;
    r.id = SelfSimId::H3;
    r.shape = SumShape::Window;
    r.needs_lattice = true;
    r.param_names = {"a1", "b1", "a2"};
    r.validate = [positive](const P& p) { positive(p, {"a1", "b1", "a2"}, "H-3"); };
    r.term = [at](const P& p, int N, int x, int y, int z, bool) -> T {
      const T a1 = at(p, "a1"), b1 = at(p, "b1"), a2 = at(p, "a2");
      return hahn::measure(x - z, N - z, a1, b1) * hahn::measure(z - y, N - y, a2, a1 + b1);
    };
    r.rhs = [at](const P& p, int N, int x, int y, bool) -> T {
      return hahn::measure(x - y, N - y, at(p, "a1") + at(p, "a2"), at(p, "b1"));
    };
    add(std::move(r));
  }
  {
    SelfSimIdentity<T> r;
    r.id = SelfSimId::H4;  // H2 with the two factors interchanged
    r.shape = SumShape::Between;
    r.param_names = {"a1", "b1", "b2"};
    r.validate = [positive](const P& p) { positive(p, {"a1", "b1", "b2"}, "H-4"); };
    r.term = [at](const P& p, int, int x, int y, int z, bool) -> T {
      const T a1 = at(p, "a1"), b1 = at(p, "b1"), b2 = at(p, "b2");
      return hahn::measure(x, z, a1 + b1, b2) * hahn::measure(z, y, a1, b1);
    };
    r.rhs = [at](const P& p, int, int x, int y, bool) -> T {
      return hahn::measure(x, y, at(p, "a1"), at(p, "b1") + at(p, "b2"));
    };
    add(std::move(r));
  }
  {
    SelfSimIdentity<T> r;
    r.id = SelfSimId::H5;  // H3 with the two factors interchanged
    r.shape = SumShape::Window;
    r.needs_lattice = true;
    r.param_names = {"a1", "b1", "a2"};
    r.validate = [positive](const P& p) { positive(p, {"a1", "b1", "a2"}, "H-5"); };
    r.term = [at](const P& p, int N, int x, int y, int z, bool) -> T {
      const T a1 = at(p, "a1"), b1 = at(p, "b1"), a2 = at(p, "a2");
      return hahn::measure(x - z, N - z, a2, a1 + b1) * hahn::measure(z - y, N - y, a1, b1);
    };
    r.rhs = [at](const P& p, int N, int x, int y, bool) -> T {
      return hahn::measure(x - y, N - y, at(p, "a1") + at(p, "a2"), at(p, "b1"));
    };
    add(std::move(r));
  }

  // --------------------------------------------------------------- q-Hahn
  {
    SelfSimIdentity<T> r;
    r.id = SelfSimId::QH1;
    r.shape = SumShape::Prefix;
    r.needs_lattice = true;
    r.needs_q = true;
    r.param_names = {"a1", "b1", "a2"};
    r.validate = [open01](const P& p) { open01(p, {"a1", "b1", "a2", "q"}, "qH-1"); };
    r.term = [at](const P& p, int N, int x, int, int z, bool) -> T {
      const T a1 = at(p, "a1"), b1 = at(p, "b1"), a2 = at(p, "a2"), q = at(p, "q");
      return qhahn::measure(x - z, N - z, a1, b1, q) * qhahn::measure(z, N, a2, a1 * b1, q);
    };
    r.rhs = [at](const P& p, int N, int x, int, bool) -> T {
      return qhahn::measure(x, N, at(p, "a1") * at(p, "a2"), at(p, "b1"), at(p, "q"));
    };
    add(std::move(r));
  }
  {
    SelfSimIdentity<T> r;
    r.id = SelfSimId::QH2;
    r.shape = SumShape::Between;
    r.needs_q = true;
    r.param_names = {"a1", "b1", "b2"};
    r.validate = [open01](const P& p) { open01(p, {"a1", "b1", "b2", "q"}, "qH-2"); };
    r.term = [at](const P& p, int, int x, int y, int z, bool) -> T {
      const T a1 = at(p, "a1"), b1 = at(p, "b1"), b2 = at(p, "b2"), q = at(p, "q");
      return qhahn::measure(x, z, a1, b1, q) * qhahn::measure(z, y, a1 * b1, b2, q);
    };
    r.rhs = [at](const P& p, int, int x, int y, bool) -> T {
      return qhahn::measure(x, y, at(p, "a1"), at(p, "b1") * at(p, "b2"), at(p, "q"));
    };
    add(std::move(r));
  }
  {
    SelfSimIdentity<T> r;
    r.id = SelfSimId::QH3;
    r.shape = SumShape::Window;
    r.needs_lattice = true;
    r.needs_q = true;
    r.param_names = {"a1", "b1", "a2"};
    r.validate = [open01](const P& p) { open01(p, {"a1", "b1", "a2", "q"}, "qH-3"); };
    r.term = [at](const P& p, int N, int x, int y, int z, bool) -> T {
      const T a1 = at(p, "a1"), b1 = at(p, "b1"), a2 = at(p, "a2"), q = at(p, "q");
      return qhahn::measure(x - z, N - z, a1, b1, q) *
             qhahn::measure(z - y, N - y, a2, a1 * b1, q);
    };
    r.rhs = [at](const P& p, int N, int x, int y, bool) -> T {
      return qhahn::measure(x - y, N - y, at(p, "a1") * at(p, "a2"), at(p, "b1"), at(p, "q"));
    };
    add(std::move(r));
  }
  {
    SelfSimIdentity<T> r;
    r.id = SelfSimId::QH4;  // QH2 with the two factors interchanged
    r.shape = SumShape::Between;
    r.needs_q = true;
    r.param_names = {"a1", "b1", "b2"};
    r.validate = [open01](const P& p) { open01(p, {"a1", "b1", "b2", "q"}, "qH-4"); };
    r.term = [at](const P& p, int, int x, int y, int z, bool) -> T {
      const T a1 = at(p, "a1"), b1 = at(p, "b1"), b2 = at(p, "b2"), q = at(p, "q");
      return qhahn::measure(x, z, a1 * b1, b2, q) * qhahn::measure(z, y, a1, b1, q);
    };
    r.rhs = [at](const P& p, int, int x, int y, bool) -> T {
      return qhahn::measure(x, y, at(p, "a1"), at(p, "b1") * at(p, "b2"), at(p, "q"));
    };
    add(std::move(r));
  }
  {
    SelfSimIdentity<T> r;
    r.id = SelfSimId::QH5;  // QH3 with the two factors interchanged
    r.shape = SumShape::Window;
    r.needs_lattice = true;
    r.needs_q = true;
    r.param_names = {"a1", "b1", "a2"};
    r.validate = [open01](const P& p) { open01(p, {"a1", "b1", "a2", "q"}, "qH-5"); };
    r.term = [at](const P& p, int N, int x, int y, int z, bool) -> T {
      const T a1 = at(p, "a1"), b1 = at(p, "b1"), a2 = at(p, "a2"), q = at(p, "q");
      return qhahn::measure(x - z, N - z, a2, a1 * b1, q) *
             qhahn::measure(z - y, N - y, a1, b1, q);
    };
    r.rhs = [at](const P& p, int N, int x, int y, bool) -> T {
      return qhahn::measure(x - y, N - y, at(p, "a1") * at(p, "a2"), at(p, "b1"), at(p, "q"));
    };
    add(std::move(r));
  }

  // ------------------------------------------------------ little q-Jacobi
  auto lqj_validate = [](const P& p) {
    const T a1 = lemma_at(p, "a1"), b1 = lemma_at(p, "b1"), b2 = lemma_at(p, "b2");
    if (!(a1 > T(0) && a1 < T(1) && b1 > T(0) && b1 < T(1)))
      throw DomainError("little-q-jacobi: a1 and b1 must lie in (0,1)");
    if (!(b2 < T(1))) throw DomainError("little-q-jacobi: b2 must be < 1");
    const T q = lemma_at(p, "q");
    if (!(q > T(0) && q < T(1))) throw DomainError("little-q-jacobi: q must lie in (0,1)");
  };
  {
    SelfSimIdentity<T> r;
    r.id = SelfSimId::LQJ1;
    r.shape = SumShape::Prefix;
    r.ratio_only_exact = true;
    r.needs_q = true;
    r.param_names = {"a1", "b1", "b2"};
    r.validate = lqj_validate;
    r.term = [at](const P& p, int, int x, int, int z, bool ratio) -> T {
      const T a1 = at(p, "a1"), b1 = at(p, "b1"), b2 = at(p, "b2"), q = at(p, "q");
      return lqj_pi(x - z, a1, b1, q, ratio) * lqj_pi(z, a1 * b1, b2, q, ratio);
    };
    r.rhs = [at](const P& p, int, int x, int, bool ratio) -> T {
      return lqj_pi(x, at(p, "a1"), at(p, "b1") * at(p, "b2"), at(p, "q"), ratio);
    };
    add(std::move(r));
  }
  {
    SelfSimIdentity<T> r;
    r.id = SelfSimId::LQJ2;
    r.shape = SumShape::Window;
    r.ratio_only_exact = true;
    r.needs_q = true;
    r.param_names = {"a1", "b1", "b2"};
    r.validate = lqj_validate;
    r.term = [at](const P& p, int, int x, int y, int z, bool ratio) -> T {
      const T a1 = at(p, "a1"), b1 = at(p, "b1"), b2 = at(p, "b2"), q = at(p, "q");
      return lqj_pi(x - z, a1, b1, q, ratio) * lqj_pi(z - y, a1 * b1, b2, q, ratio);
    };
    r.rhs = [at](const P& p, int, int x, int y, bool ratio) -> T {
      return lqj_pi(x - y, at(p, "a1"), at(p, "b1") * at(p, "b2"), at(p, "q"), ratio);
    };
    add(std::move(r));
  }

  return rows;
}

template <class T>
const std::vector<SelfSimIdentity<T>>& selfsim_registry() {
  static const std::vector<SelfSimIdentity<T>> rows = make_selfsim_registry<T>();
  return rows;
}

}  // namespace detail

template <class T>
const SelfSimIdentity<T>& selfsim_identity(SelfSimId id) {
  for (const auto& r : detail::selfsim_registry<T>())
    if (r.id == id) return r;
  throw CaseError("unregistered self-similarity identity");
}

template <class T>
std::vector<SelfSimId> selfsim_all() {
  std::vector<SelfSimId> out;
  for (const auto& r : detail::selfsim_registry<T>()) out.push_back(r.id);
  return out;
}

}  // namespace convchain
