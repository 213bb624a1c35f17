// Acceptance gate: ten exact criteria, one line each, zero tolerances.
// Exit code is the number of failing criteria.

#include "eulerperm/qpoly.hpp"
#include "eulerperm/verify.hpp"

#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace eulerperm;
using verify::CheckReport;

int failures = 0;

void report(int idx, const std::string& what, bool pass,
            const std::vector<const CheckReport*>& reps = {}) {
    std::cout << "criterion " << idx << " (" << what << "): "
              << (pass ? "PASS" : "FAIL") << "\n";
    if (!pass) {
        ++failures;
        for (const CheckReport* r : reps) {
            for (const auto& row : r->rows) {
                if (row.pass) continue;
                std::cout << "  first failing instance: " << row.instance << "\n";
                if (!row.expected.empty())
                    std::cout << "    expected: " << row.expected << "\n";
                if (!row.actual.empty())
                    std::cout << "    actual:   " << row.actual << "\n";
                break;
            }
        }
    }
    for (const CheckReport* r : reps)
        if (!r->note.empty()) std::cout << "  note: " << r->note << "\n";
}

void check(int idx, const std::string& what, const CheckReport& rep) {
    report(idx, what, rep.pass, {&rep});
}

} // namespace

int main() {
    check(1, "class counts equal the alternating-word counts, n <= 8",
          verify::check_counts(8));
    check(2, "one trivariate distribution for all three classes, n <= 8",
          verify::check_main(8));
    check(3, "per-shape ides distributions coincide, n <= 8", verify::check_shape(8));
    check(4, "shape determines descents; shape images exhaust the no-left-only shapes",
          verify::check_prop23(0));
    check(5, "composed-set distributions match the closed form, sizes <= 7",
          verify::check_thm12(7));
    check(6, "shuffle (des, maj) distributions match the closed form, sizes <= 8",
          verify::check_stanley(8));
    check(7, "restricted dominant shuffles match the refined closed forms, sizes <= 8",
          verify::check_refined(8));
    check(8, "shuffles biject onto box-bounded partition pairs, sizes <= 8",
          verify::check_phi(8));

    const CheckReport omega_rep = verify::check_omega(8);
    const CheckReport transport_rep = verify::check_prop44(8);
    report(9, "right-spine relabeling is a shape-preserving bijection transporting "
              "statistics, n <= 8",
           omega_rep.pass && transport_rep.pass, {&omega_rep, &transport_rep});

    // Box partition generating functions against the q-binomial, 0 <= t <= m <= 5,
    // n <= 5.
    bool c10 = true;
    std::string witness, expected, actual;
    for (int n = 0; n <= 5 && c10; ++n)
        for (int m = 0; m <= 5 && c10; ++m)
            for (int t = 0; t <= m && c10; ++t) {
                MultiPoly lhs;
                for (const Partition& lam : partitions_in_box(n, t, m))
                    lhs += MultiPoly::monomial(1, 0, 0, static_cast<int>(lam.weight()));
                const MultiPoly rhs = MultiPoly::monomial(1, 0, 0, n * t) *
                                      gauss_binom(n + m - t, n);
                if (!(lhs == rhs)) {
                    c10 = false;
                    witness = "n=" + std::to_string(n) + " t=" + std::to_string(t) +
                              " m=" + std::to_string(m);
                    expected = rhs.str();
                    actual = lhs.str();
                }
            }
    report(10, "box partition generating functions equal shifted q-binomials", c10);
    if (!c10)
        std::cout << "  first failing instance: " << witness << "\n    expected: "
                  << expected << "\n    actual:   " << actual << "\n";

    std::cout << "acceptance: " << (10 - failures) << "/10 criteria pass\n";
    return failures;
}
