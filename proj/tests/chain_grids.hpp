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

// Deterministic per-case parameter grids shared by the unit and acceptance
// suites.  Five points per case, chosen inside each case's validity region
// (and, for the semi-infinite rows, with tails that truncate quickly).

#pragma once

#include <vector>

#include "convchain/chains.hpp"

namespace convchain::testgrids {

template <class T>
T frac(long n, long d) {
  return T(n) / T(d);
}

template <class T>
std::vector<CaseParams<T>> case_grid(CaseId id) {
  using P = CaseParams<T>;
  auto f = [](long n, long d) { return frac<T>(n, d); };
  switch (id) {
    case CaseId::KI:
    case CaseId::KII:
    case CaseId::KIII:
      return {
          P{{"a", f(1, 5)}, {"b", f(1, 2)}}, P{{"a", f(1, 3)}, {"b", f(2, 5)}},
          P{{"a", f(1, 2)}, {"b", f(1, 2)}}, P{{"a", f(5, 8)}, {"b", f(1, 4)}},
          P{{"a", f(4, 5)}, {"b", f(3, 5)}},
      };
    case CaseId::KIV:
    case CaseId::KV:
      return {
          P{{"a", f(1, 5)}, {"b", f(1, 2)}, {"c", f(1, 3)}},
          P{{"a", f(1, 3)}, {"b", f(2, 5)}, {"c", f(1, 2)}},
          P{{"a", f(1, 2)}, {"b", f(1, 2)}, {"c", f(1, 2)}},
          P{{"a", f(5, 8)}, {"b", f(1, 4)}, {"c", f(2, 3)}},
          P{{"a", f(4, 5)}, {"b", f(3, 5)}, {"c", f(1, 5)}},
      };
    case CaseId::HI:
    case CaseId::HII:
    case CaseId::HIII:
      return {
          P{{"a", f(1, 2)}, {"b", f(1, 1)}, {"c", f(2, 1)}},
          P{{"a", f(1, 1)}, {"b", f(1, 1)}, {"c", f(1, 1)}},
          P{{"a", f(3, 2)}, {"b", f(1, 2)}, {"c", f(5, 2)}},
          P{{"a", f(2, 1)}, {"b", f(3, 1)}, {"c", f(1, 2)}},
          P{{"a", f(5, 2)}, {"b", f(3, 2)}, {"c", f(3, 4)}},
      };
    case CaseId::HIV:
      return {
          P{{"a1", f(1, 2)}, {"b1", f(1, 1)}, {"a2", f(3, 2)}, {"b2", f(2, 1)}},
          P{{"a1", f(1, 1)}, {"b1", f(1, 1)}, {"a2", f(1, 1)}, {"b2", f(1, 1)}},
          P{{"a1", f(3, 2)}, {"b1", f(1, 2)}, {"a2", f(2, 1)}, {"b2", f(1, 1)}},
          P{{"a1", f(2, 1)}, {"b1", f(1, 1)}, {"a2", f(1, 2)}, {"b2", f(3, 2)}},
          P{{"a1", f(1, 1)}, {"b1", f(2, 1)}, {"a2", f(1, 1)}, {"b2", f(1, 2)}},
      };
    case CaseId::QHI:
    case CaseId::QHIII:
      return {
          P{{"a", f(1, 5)}, {"b", f(1, 2)}, {"c", f(1, 3)}, {"q", f(1, 3)}},
          P{{"a", f(1, 3)}, {"b", f(2, 5)}, {"c", f(1, 2)}, {"q", f(1, 2)}},
          P{{"a", f(1, 2)}, {"b", f(1, 2)}, {"c", f(1, 2)}, {"q", f(2, 5)}},
          P{{"a", f(5, 8)}, {"b", f(1, 4)}, {"c", f(2, 3)}, {"q", f(3, 5)}},
          P{{"a", f(4, 5)}, {"b", f(3, 5)}, {"c", f(1, 5)}, {"q", f(1, 2)}},
      };
    case CaseId::QHIV:
      return {
          P{{"a1", f(1, 5)}, {"b1", f(1, 2)}, {"a2", f(1, 3)}, {"b2", f(1, 2)}, {"q", f(1, 3)}},
          P{{"a1", f(1, 3)}, {"b1", f(2, 5)}, {"a2", f(1, 2)}, {"b2", f(1, 4)}, {"q", f(1, 2)}},
          P{{"a1", f(1, 2)}, {"b1", f(1, 2)}, {"a2", f(1, 2)}, {"b2", f(1, 2)}, {"q", f(2, 5)}},
          P{{"a1", f(5, 8)}, {"b1", f(1, 4)}, {"a2", f(2, 3)}, {"b2", f(3, 5)}, {"q", f(3, 5)}},
          P{{"a1", f(4, 5)}, {"b1", f(3, 5)}, {"a2", f(1, 5)}, {"b2", f(2, 5)}, {"q", f(1, 2)}},
      };
    case CaseId::CConv1:
      return {
          P{{"a", f(1, 2)}, {"b", f(1, 2)}}, P{{"a", f(1, 3)}, {"b", f(1, 1)}},
          P{{"a", f(1, 4)}, {"b", f(3, 4)}}, P{{"a", f(3, 5)}, {"b", f(1, 2)}},
          P{{"a", f(2, 3)}, {"b", f(1, 4)}},
      };
    case CaseId::CConv3:
      return {
          P{{"a", f(1, 2)}, {"b", f(1, 2)}}, P{{"a", f(1, 1)}, {"b", f(1, 3)}},
          P{{"a", f(3, 4)}, {"b", f(1, 4)}}, P{{"a", f(1, 2)}, {"b", f(3, 5)}},
          P{{"a", f(2, 1)}, {"b", f(1, 5)}},
      };
    case CaseId::CIV:
    case CaseId::CV:
      return {
          P{{"a", f(1, 2)}, {"b", f(1, 2)}, {"c", f(1, 3)}},
          P{{"a", f(1, 3)}, {"b", f(1, 1)}, {"c", f(1, 2)}},
          P{{"a", f(1, 4)}, {"b", f(3, 4)}, {"c", f(1, 4)}},
          P{{"a", f(3, 5)}, {"b", f(1, 2)}, {"c", f(2, 5)}},
          P{{"a", f(2, 3)}, {"b", f(1, 4)}, {"c", f(3, 5)}},
      };
    case CaseId::MI:  // a, b > 0; 0 < c < 1
      return {
          P{{"a", f(1, 1)}, {"b", f(1, 1)}, {"c", f(1, 2)}},
          P{{"a", f(1, 2)}, {"b", f(3, 2)}, {"c", f(1, 3)}},
          P{{"a", f(2, 1)}, {"b", f(1, 2)}, {"c", f(2, 5)}},
          P{{"a", f(3, 2)}, {"b", f(1, 1)}, {"c", f(3, 5)}},
          P{{"a", f(1, 1)}, {"b", f(2, 1)}, {"c", f(1, 4)}},
      };
    case CaseId::MIII:  // a, c > 0; 0 < b < 1
      return {
          P{{"a", f(1, 1)}, {"b", f(1, 2)}, {"c", f(1, 1)}},
          P{{"a", f(3, 2)}, {"b", f(1, 3)}, {"c", f(1, 2)}},
          P{{"a", f(1, 2)}, {"b", f(2, 5)}, {"c", f(2, 1)}},
          P{{"a", f(1, 1)}, {"b", f(3, 5)}, {"c", f(3, 2)}},
          P{{"a", f(2, 1)}, {"b", f(1, 4)}, {"c", f(1, 1)}},
      };
    case CaseId::MIV:  // a1, b1, a2 > 0; 0 < b2 < 1
      return {
          P{{"a1", f(1, 1)}, {"b1", f(1, 1)}, {"a2", f(1, 1)}, {"b2", f(1, 2)}},
          P{{"a1", f(1, 2)}, {"b1", f(3, 2)}, {"a2", f(1, 1)}, {"b2", f(1, 3)}},
          P{{"a1", f(2, 1)}, {"b1", f(1, 2)}, {"a2", f(3, 2)}, {"b2", f(2, 5)}},
          P{{"a1", f(3, 2)}, {"b1", f(1, 1)}, {"a2", f(1, 2)}, {"b2", f(1, 2)}},
          P{{"a1", f(1, 1)}, {"b1", f(2, 1)}, {"a2", f(2, 1)}, {"b2", f(1, 4)}},
      };
    case CaseId::QMI:  // 0 < a, b < 1; c > 0
    case CaseId::QMIII:  // 0 < a, c < 1; b > 0  (same grid works)
      return {
          P{{"a", f(1, 2)}, {"b", f(1, 2)}, {"c", f(1, 2)}, {"q", f(1, 2)}},
          P{{"a", f(1, 3)}, {"b", f(2, 5)}, {"c", f(3, 4)}, {"q", f(1, 3)}},
          P{{"a", f(1, 4)}, {"b", f(1, 2)}, {"c", f(1, 3)}, {"q", f(2, 5)}},
          P{{"a", f(3, 5)}, {"b", f(1, 4)}, {"c", f(1, 2)}, {"q", f(1, 2)}},
          P{{"a", f(2, 3)}, {"b", f(3, 5)}, {"c", f(2, 5)}, {"q", f(3, 5)}},
      };
    case CaseId::QMIV:  // 0 < a1, b1, a2 < 1; b2 > 0
      return {
          P{{"a1", f(1, 2)}, {"b1", f(1, 2)}, {"a2", f(1, 2)}, {"b2", f(1, 2)}, {"q", f(1, 2)}},
          P{{"a1", f(1, 3)}, {"b1", f(2, 5)}, {"a2", f(1, 2)}, {"b2", f(3, 4)}, {"q", f(1, 3)}},
          P{{"a1", f(1, 4)}, {"b1", f(1, 2)}, {"a2", f(2, 5)}, {"b2", f(1, 3)}, {"q", f(2, 5)}},
          P{{"a1", f(3, 5)}, {"b1", f(1, 4)}, {"a2", f(1, 3)}, {"b2", f(1, 2)}, {"q", f(1, 2)}},
          P{{"a1", f(2, 3)}, {"b1", f(3, 5)}, {"a2", f(1, 5)}, {"b2", f(2, 5)}, {"q", f(3, 5)}},
      };
    default:
      throw CaseError("case_grid: no grid for this case");
  }
}

inline std::vector<CaseId> finite_cases() {
  return {CaseId::KI, CaseId::KII,  CaseId::KIII, CaseId::KIV, CaseId::KV,  CaseId::HI,
          CaseId::HII, CaseId::HIII, CaseId::HIV, CaseId::QHI, CaseId::QHIII, CaseId::QHIV};
}

inline std::vector<CaseId> semi_infinite_cases() {
  return {CaseId::CConv1, CaseId::CConv3, CaseId::CIV, CaseId::CV, CaseId::MI,
          CaseId::MIII,   CaseId::MIV,    CaseId::QMI, CaseId::QMIII, CaseId::QMIV};
}

}  // namespace convchain::testgrids
