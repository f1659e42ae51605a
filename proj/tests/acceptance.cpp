// Acceptance suite: every release criterion as one labelled pass/fail line.
// Exit code 0 only when every criterion passes.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "cluster/enumerate.hpp"
#include "cluster/surface.hpp"

using namespace cluster;

namespace {

struct Harness {
  bool all_passed = true;
  long exactness_errors = 0;
  std::vector<LaurentPoly> cluster_variables;  // positivity pool for criterion 9

  void track(const LaurentPoly& v) { cluster_variables.push_back(v); }

  void run(int number, const std::string& label, const std::function<bool(std::string&)>& body) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string detail;
    try {
      ok = body(detail);
    } catch (const ExactnessError& e) {
      ++exactness_errors;
      detail = std::string("exactness error: ") + e.what();
    } catch (const std::exception& e) {
      detail = e.what();
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    all_passed = all_passed && ok;
    std::cout << "criterion " << number << ": " << (ok ? "PASS" : "FAIL") << "  " << label << " ("
              << ms << " ms)";
    if (!detail.empty()) std::cout << "  [" << detail << "]";
    std::cout << std::endl;
  }
};

bool expect_units(Harness& h, ATypeSequence& seq, long first, const std::vector<long>& want,
                  std::string& detail) {
  for (size_t k = 0; k < want.size(); ++k) {
    const LaurentPoly& v = seq.value(first + static_cast<long>(k));
    h.track(v);
    if (v.eval_units() != want[k]) {
      detail = "x_" + std::to_string(first + k) + " != " + std::to_string(want[k]);
      return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  Harness h;

  h.run(1, "unit sequences for the two smallest annuli", [&](std::string& detail) {
    ATypeSequence a21(2, 1);
    ATypeSequence a32(3, 2);
    return expect_units(h, a21, 3, {2, 3, 7, 11, 26, 41, 97, 153}, detail) &&
           expect_units(h, a32, 5, {2, 2, 3, 5, 7, 8, 18, 19, 29, 49}, detail);
  });

  h.run(2, "symbolic periodicity of J, Jtilde, Jprime", [&](std::string& detail) {
    for (auto [q, p] : {std::pair{2, 1}, std::pair{3, 2}, std::pair{4, 3}}) {
      AFamilies fam(q, p);
      const auto rj = verify_period(fam.j, -4, 4);
      const auto rjt = verify_period(fam.jtilde, -4, 4);
      for (long n = -4; n <= 4; ++n) {
        h.track(fam.j.value(n));
        h.track(fam.jtilde.value(n));
      }
      if (!rj.passed || !rjt.passed) {
        detail = "affine A q=" + std::to_string(q);
        return false;
      }
    }
    for (int N : {4, 5, 6}) {
      DFamilies fam(N);
      const auto r = verify_period(fam.jprime, -3, 3);
      for (long n = -3; n <= 3; ++n) h.track(fam.jprime.value(n));
      if (!r.passed) {
        detail = "affine D N=" + std::to_string(N);
        return false;
      }
    }
    return true;
  });

  h.run(3, "transfer-matrix entry structure up to order six", [&](std::string& detail) {
    AFamilies a32(3, 2);
    DFamilies d5(5);
    const std::vector<long> starts{0, 1, 2};
    for (auto* family : {&a32.j, &a32.jtilde, &d5.jprime}) {
      const auto r = structure_check(*family, 6, starts);
      if (!r.passed) {
        detail = r.to_json().dump();
        return false;
      }
    }
    return true;
  });

  h.run(4, "trace invariants constant, matching, with pinned unit values",
        [&](std::string& detail) {
          AFamilies a21(2, 1);
          AFamilies a32(3, 2);
          DFamilies d4(4);
          const auto k21 = trace_invariant(a21);
          const auto k32 = trace_invariant(a32);
          const auto kd4 = trace_invariant(d4);
          if (!k21.constancy.passed || !k32.constancy.passed || !kd4.constancy.passed) {
            detail = "constancy window failed";
            return false;
          }
          if (k21.value.eval_units() != 4 || k32.value.eval_units() != 10 ||
              kd4.value.eval_units() != 23) {
            detail = "unit trace mismatch";
            return false;
          }
          return true;
        });

  h.run(5, "constant-coefficient linear relations", [&](std::string& detail) {
    AFamilies a21(2, 1);
    AFamilies a32(3, 2);
    DFamilies d4(4);
    const auto r21 = linear_relation_check(a21, 0, 2 * 1 - 1);
    const auto r32 = linear_relation_check(a32, 0, 3 * 2 - 1);
    const auto rd4 = linear_relation_check(d4, -1, 2);
    for (long n = 0; n <= 2 * 2 * 1 + 2 * 1 - 1; ++n) h.track(a21.seq->value(n));
    for (long n = 0; n <= 2 * 6 + 6 - 1; ++n) h.track(a32.seq->value(n));
    for (long n = -1; n <= 2 + 2 * 2; ++n)
      for (int i = 0; i <= 4; ++i) h.track(d4.frieze->value(i, n));
    if (!r21.passed || !r32.passed || !rd4.passed) {
      detail = "relation residual nonzero";
      return false;
    }
    return true;
  });

  h.run(6, "continuant friezes: determinants, diamonds, gluing", [&](std::string& detail) {
    AFamilies a21(2, 1);
    AFamilies a32(3, 2);
    DFamilies d6(6);
    for (int m = 0; m <= 6; ++m)
      for (long n : {-1L, 0L, 2L}) {
        if (continuant(a32.j, a32.j.step(), m, n) !=
                continuant_determinant(a32.j, a32.j.step(), m, n) ||
            continuant(a32.jtilde, a32.jtilde.step(), m, n) !=
                continuant_determinant(a32.jtilde, a32.jtilde.step(), m, n) ||
            continuant(d6.jprime, 1, m, n) != continuant_determinant(d6.jprime, 1, m, n)) {
          detail = "recurrence vs determinant at m=" + std::to_string(m);
          return false;
        }
      }

    const ContinuantFrieze jf = ContinuantFrieze::over_j(a32, -2, 4);
    const ContinuantFrieze jtf = ContinuantFrieze::over_jtilde(a32, -2, 4);
    const ContinuantFrieze jpf = ContinuantFrieze::over_jprime(d6, -1, 4);
    for (const auto* cf : {&jf, &jtf, &jpf}) {
      if (!desnanot_check(*cf).passed) {
        detail = "diamond rule failed";
        return false;
      }
      for (int l = 1; l <= cf->rows(); ++l)
        for (long j = cf->j_min(); j <= cf->j_max(); ++j) h.track(cf->entry(l, j));
    }

    DFamilies d4(4);
    if (!glue_check(a21, -3, 4).passed || !glue_check(d4, -2, 3).passed) {
      detail = "gluing identity failed";
      return false;
    }
    return true;
  });

  h.run(7, "surface model matches mutation", [&](std::string& detail) {
    if (!(AnnulusTriangulation::initial(8, 7).quiver() == build_a_matrix(8, 7))) {
      detail = "initial triangulation quiver mismatch";
      return false;
    }

    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> pick(0, 4);
    for (int trial = 0; trial < 100; ++trial) {
      AnnulusTriangulation t = AnnulusTriangulation::initial(3, 2);
      ExchangeMatrix m = build_a_matrix(3, 2);
      const int len = 1 + trial % 12;
      for (int step = 0; step < len; ++step) {
        const int k = pick(rng);
        t = t.flip(k).triangulation;
        m = mutate_matrix(m, k);
        if (!(t.quiver() == m)) {
          detail = "flip sequence diverged from matrix mutation";
          return false;
        }
      }
    }

    AFamilies a21(2, 1);
    std::uniform_int_distribution<int> pick3(0, 2);
    AnnulusTriangulation t = AnnulusTriangulation::initial(2, 1);
    Seed seed = initial_seed(build_a_matrix(2, 1));
    for (int step = 0; step < 20; ++step) {
      const int k = pick3(rng);
      if (!ptolemy_check(t, k, a21).passed) {
        detail = "ptolemy relation failed";
        return false;
      }
      const auto flip = t.flip(k);
      seed = mutate_seed(seed, k);
      const LaurentPoly v = arc_variable(flip.added, a21);
      h.track(v);
      if (!(v == seed.vars[k])) {
        detail = "classified arc variable differs from seed mutation";
        return false;
      }
      t = std::move(flip.triangulation);
    }
    return true;
  });

  h.run(8, "enumeration oracle agrees with the classification", [&](std::string& detail) {
    AFamilies a21(2, 1);
    const auto f21 = bfs_explore(initial_seed(build_a_matrix(2, 1)), 8);
    const auto r21 = cross_check(a21, f21, 8);
    if (!r21.passed || r21.non_frieze_found != 2) {
      detail = "2,1 cross-check: " + r21.to_json().dump();
      return false;
    }
    if (!f21.variables.contains(a21.j.value(0)) || !f21.variables.contains(a21.j.value(1))) {
      detail = "2,1 J family not found";
      return false;
    }

    AFamilies a32(3, 2);
    const auto f32 = bfs_explore(initial_seed(build_a_matrix(3, 2)), 6);
    const auto r32 = cross_check(a32, f32, 6);
    if (!r32.passed || !r32.determinant_missing.empty()) {
      detail = "3,2 cross-check: " + r32.to_json().dump();
      return false;
    }

    DFamilies d4(4);
    const auto fd4 = bfs_explore(initial_seed(build_d_matrix(4)), 6);
    const auto rd4 = cross_check(d4, fd4, 6);
    if (!rd4.passed || rd4.extras < 3) {
      detail = "D4 cross-check: " + rd4.to_json().dump();
      return false;
    }
    if (!fd4.variables.contains(d4.jprime.value(0)) ||
        !fd4.variables.contains(d4.jprime.value(1))) {
      detail = "D4 Jprime family not found";
      return false;
    }

    for (const auto& r : {f21, f32, fd4})
      for (const auto& [key, v] : r.variables.entries()) h.track(v);
    return true;
  });

  h.run(9, "no exactness errors, all tracked variables positive", [&](std::string& detail) {
    if (h.exactness_errors != 0) {
      detail = "exactness errors recorded";
      return false;
    }
    long checked = 0;
    for (const auto& v : h.cluster_variables) {
      if (!v.positive_coefficients() || v.is_zero()) {
        detail = "non-positive variable: " + v.serialize();
        return false;
      }
      ++checked;
    }
    detail = std::to_string(checked) + " variables checked";
    return true;
  });

  std::cout << (h.all_passed ? "acceptance: PASS" : "acceptance: FAIL") << std::endl;
  return h.all_passed ? 0 : 1;
}
