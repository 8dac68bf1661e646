#pragma once

#include <optional>
#include <string>
#include <vector>

#include "h1cube/class_function.hpp"
#include "h1cube/structural.hpp"

namespace h1cube {

/// Macbeath's condition for PSL2(F_q) to be the automorphism group of a
/// genus-(1 + |G|/84) curve with 84(g-1) automorphisms: q = 7, or q = p with
/// p = +-1 (mod 7), or q = p^3 with p = +-2 or +-3 (mod 7).
bool macbeath_admissible(unsigned long long q);

/// Hurwitz character on the structural class list of PSL2(F_q), odd q,
/// computed directly from the torus/unipotent intersection counts (no
/// enumeration). Errors when the signature has an entry that is not an
/// element order of the group.
ClassFunction structural_hurwitz(const StructuralPsl2& st, const std::vector<unsigned>& signature);

/// Same values through the closed-form branch formulas for semisimple
/// classes: chi(g) = 2 - (q -+ 1) * sum_{d | e_i} 1/e_i on classes of order
/// d dividing (q -+ 1)/2. Order-p classes are always computed directly (the
/// displayed closed form for them is ambiguous), and the two routes are
/// compared class by class. Requires odd q.
ClassFunction closed_form_hurwitz_character(unsigned q, const std::vector<unsigned>& signature);

struct ScanRow {
    unsigned q = 0;
    bool admissible = false;
    bool realizable = false;  // the group has elements of orders 2, 3 and 7
    long long genus = 0;
    std::optional<long long> d3;
    bool closed_form_agrees = false;
    // exact values of sum_g chi(g)^3 and of the final lower-bound expression
    // (only for odd q >= 43)
    std::string sum_cubes, lower_bound;
};

/// Rows for every Macbeath-admissible q <= q_max plus every odd prime power
/// in [43, q_max] where the (2,3,7) data exists. Asserts d3 = 0 iff q = 8
/// among admissible rows and d3 > 0 on all realizable odd rows with q >= 43.
std::vector<ScanRow> scan_theorem(unsigned q_max);

struct BoundCheck {
    BigRational exact_sum;  // sum over G of chi(g)^3, exact
    BigRational bound1;     // (|G|/42)^3 - (2|G|/(q-1)) q^3 (1+1+3)
    BigRational bound2;     // the middle expression (equal to bound1)
    BigRational bound3;     // q^4(q+1)/84^3 ((q-1)^3(q+1) - 5*2^3*42^3)
};

/// Exact evaluation of the positivity chain for odd q >= 43; each link is
/// asserted (exact_sum > bound1 >= bound2 > bound3 > 0).
BoundCheck bound_check(unsigned q);

std::string scan_rows_to_json_string(const std::vector<ScanRow>& rows);
std::string scan_rows_to_markdown(const std::vector<ScanRow>& rows);

}  // namespace h1cube
