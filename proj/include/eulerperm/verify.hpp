#pragma once

#include <string>
#include <vector>

namespace eulerperm::verify {

struct CheckRow {
    std::string instance;
    bool pass = true;
    std::string expected;
    std::string actual;
};

struct CheckReport {
    std::string theorem;
    int max_n = 0;
    bool pass = true;
    std::vector<CheckRow> rows;
    std::string note;

    void add(std::string instance, bool ok,
             std::string expected = "", std::string actual = "");
};

// Independent Euler-number oracle: counts words with sigma_1 > sigma_2 <
// sigma_3 > ... by direct filtering, sharing no code with the class
// enumerators.
long long count_alternating(int n);

CheckReport check_counts(int max_n);   // class counts vs oracle + pinned 1,1,2,5,16
CheckReport check_main(int max_n);     // trivariate equality + pinned A_n(s)
CheckReport check_shape(int max_n);    // per-shape ides equidistribution + figure instance
CheckReport check_prop23(int max_n);   // descents from shape; shape image = URL; Motzkin
CheckReport check_thm12(int max_sum);  // composed-set ides GF vs closed form, j >= 1
CheckReport check_stanley(int max_sum);// (des,maj) over plain shuffles vs closed form
CheckReport check_refined(int max_sum);// restricted shuffles under dominance + q=1 form
CheckReport check_phi(int max_sum);    // bijectivity, bounds, maj identity; insertion props
CheckReport check_omega(int max_n);    // shape-preserving bijection + worked example
CheckReport check_prop43(int max_n);   // tree statistics agree with word statistics
CheckReport check_prop44(int max_n);   // statistic transport; reports the inv-identity form

// Dispatch by CLI theorem token; max_n = 0 selects each check's default cap.
CheckReport run_check(const std::string& theorem, int max_n = 0);

std::string render_text(const CheckReport& r);
std::string render_json(const CheckReport& r);
std::string render_csv(const CheckReport& r);

} // namespace eulerperm::verify
